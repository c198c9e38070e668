import io
import json

import pytest

from crossout.cli import _parse_permutation, _play_loop, main
from crossout.game import new_game

DEMO_TEXT = "2 6 4 1 3 11 5 7 10 12 9 8"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParse:
    def test_forms(self):
        assert _parse_permutation("2 1") == (2, 1)
        assert _parse_permutation("2,1") == (2, 1)
        assert _parse_permutation("[2, 1]") == (2, 1)


class TestEncodeDecode:
    def test_encode_demo(self, capsys):
        code, out, _ = run(capsys, "encode", DEMO_TEXT)
        assert code == 0
        data = json.loads(out)
        assert data["pa"] == "UDUUUDDUUDDD"
        assert data["pb"] == "UUUDDDUDUUUDDD"
        assert data["ell"] == [1, 1, 2, 2, 1, 1]
        assert data["em"] == [3, 1, 1, 1, 2, 1]

    def test_decode_inverts(self, capsys):
        code, out, _ = run(capsys, "encode", DEMO_TEXT)
        code, out, _ = run(capsys, "decode", out.strip())
        assert code == 0
        assert out.strip() == DEMO_TEXT

    def test_decode_json_flag(self, capsys):
        tuple_json = json.dumps(
            {"pa": "UD", "pb": "UDUD", "ell": [1], "em": [1], "parity": "even"}
        )
        code, out, _ = run(capsys, "decode", tuple_json, "--json")
        assert code == 0 and json.loads(out) == [1, 2]

    def test_encode_rejects_garbage(self, capsys):
        code, _, err = run(capsys, "encode", "1 1")
        assert code == 2 and "error" in err

    def test_decode_rejects_bad_labels(self, capsys):
        tuple_json = json.dumps(
            {"pa": "UD", "pb": "UUDD", "ell": [1], "em": [2], "parity": "even"}
        )
        code, _, err = run(capsys, "decode", tuple_json)
        assert code == 2 and "em_1" in err


class TestVerify:
    def test_corollary5_n8(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "corollary5", "--n", "8")
        assert code == 0
        assert "2027025" in out

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "cor5", "--n", "2", "--json")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert len(lines) == 4
        assert all(line["verdict"] == "equal" for line in lines)

    def test_multiple_suites(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "cor5,outcomes", "--n", "2", "--json"
        )
        assert code == 0
        identities = {json.loads(line)["identity"] for line in out.strip().splitlines()}
        assert identities == {"cor5", "outcomes"}

    def test_guard_refusal_exit_code(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "thm3", "--n", "6")
        assert code == 2 and "refused" in err

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "nope", "--n", "2")
        assert code == 2 and "unknown suite" in err


class TestProb:
    def test_fraction_output(self, capsys):
        code, out, _ = run(capsys, "prob", "--n", "2", "--ranks", "3,4")
        assert code == 0 and out.strip() == "2/3"

    def test_integer_output(self, capsys):
        code, out, _ = run(capsys, "prob", "--n", "2", "--ranks", "4")
        assert code == 0 and out.strip() == "1"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "prob", "--n", "2", "--ranks", "3,4", "--json")
        assert json.loads(out) == {"num": "2", "den": "3"}

    def test_invalid_ranks(self, capsys):
        code, _, err = run(capsys, "prob", "--n", "2", "--ranks", "9")
        assert code == 2 and "error" in err


class TestPlay:
    def play(self, w, role, script):
        lines = []
        state = new_game(w, human_role=role)
        code = _play_loop(state, io.StringIO(script), lines.append)
        return code, "\n".join(lines)

    def test_full_game_as_alice(self):
        code, transcript = self.play((1, 2), "A", "2\n")
        assert code == 0
        assert "You ate position 2 (value 2)." in transcript
        assert "Engine (B) ate position 1" in transcript
        assert "Game over." in transcript
        assert '"no_trade"' not in transcript  # summary uses prose, not raw json keys
        assert "No trade pair left: True" in transcript

    def test_analysis_command(self):
        code, transcript = self.play((2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8), "A", "a\nq\n")
        assert code == 0
        assert "Predicted eaters:" in transcript
        assert "1:A" in transcript and "4:B" in transcript

    def test_illegal_then_quit(self):
        code, transcript = self.play((1, 2), "A", "7\nq\n")
        assert code == 0
        assert "Illegal move" in transcript
        assert "Quit." in transcript

    def test_bob_role_engine_opens(self):
        # even board: Alice (engine) moves first, then the human Bob
        code, transcript = self.play((1, 2), "B", "1\n")
        assert code == 0
        assert "Engine (A) ate position 2" in transcript
        assert "Game over." in transcript

    def test_eof_quits(self):
        code, transcript = self.play((1, 2), "A", "")
        assert code == 0
        assert "Input ended" in transcript

    def test_cli_play_scripted(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("2\n"))
        code, out, _ = run(capsys, "play", "--w", "1 2", "--role", "A")
        assert code == 0
        assert "Game over." in out


def test_usage_error_without_command(capsys):
    with pytest.raises(SystemExit):
        main([])
