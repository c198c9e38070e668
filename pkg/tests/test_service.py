import json

import pytest
from fastapi.testclient import TestClient

from crossout.game import playout_optimal
from crossout.marking import crossout_mark
from crossout.service import create_app, replay_log

DEMO_W = [2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8]


@pytest.fixture()
def client():
    return TestClient(create_app())


def start_game(client, **body):
    response = client.post("/games", json=body)
    assert response.status_code == 200, response.text
    return response.json()


class TestGameLifecycle:
    def test_create_with_explicit_w(self, client):
        data = start_game(client, w=DEMO_W)
        assert data["session"] == "g1"
        state = data["state"]
        assert state["turn"] == "A"
        assert state["remaining"] == list(range(1, 13))
        assert state["history"] == []

    def test_create_with_seed_is_deterministic(self):
        a = start_game(TestClient(create_app()), n=8, seed=11)
        b = start_game(TestClient(create_app()), n=8, seed=11)
        assert a == b

    def test_create_needs_exactly_one_source(self, client):
        assert client.post("/games", json={}).status_code == 422
        assert client.post("/games", json={"n": 4, "w": [1, 2]}).status_code == 422

    def test_invalid_body_type(self, client):
        assert client.post("/games", json={"n": "four"}).status_code == 422

    def test_get_state(self, client):
        sid = start_game(client, w=[1, 2])["session"]
        state = client.get(f"/games/{sid}").json()
        assert state["n"] == 2 and state["turn"] == "A"

    def test_unknown_session_404(self, client):
        assert client.get("/games/zzz").status_code == 404
        assert client.post("/games/zzz/moves", json={"position": 1}).status_code == 404
        assert client.get("/games/zzz/analysis").status_code == 404


class TestMoves:
    def test_human_move_and_engine_reply(self, client):
        sid = start_game(client, w=[1, 2], human_role="A")["session"]
        state = client.post(f"/games/{sid}/moves", json={"position": 2}).json()
        # the engine (Bob) replied automatically
        assert state["game_over"] is True
        assert [m["position"] for m in state["history"]] == [2, 1]

    def test_auto_false_suppresses_reply(self, client):
        sid = start_game(client, w=[1, 2], human_role="A")["session"]
        state = client.post(
            f"/games/{sid}/moves", json={"position": 2, "auto": False}
        ).json()
        assert state["turn"] == "B"
        assert [m["position"] for m in state["history"]] == [2]

    def test_illegal_position_409(self, client):
        sid = start_game(client, w=[1, 2])["session"]
        response = client.post(f"/games/{sid}/moves", json={"position": 9})
        assert response.status_code == 409
        assert response.json()["error"] == "not in remaining"

    def test_out_of_turn_409(self, client):
        # human plays Bob, but it is Alice's (engine's) move
        sid = start_game(client, w=[1, 2], human_role="B")["session"]
        response = client.post(f"/games/{sid}/moves", json={"position": 1})
        assert response.status_code == 409

    def test_engine_on_demand_full_playout(self, client):
        sid = start_game(client, w=DEMO_W)["session"]
        state = client.get(f"/games/{sid}").json()
        while not state["game_over"]:
            state = client.post(f"/games/{sid}/moves", json={}).json()
        expected = playout_optimal(tuple(DEMO_W))
        got = [(m["player"], m["position"]) for m in state["history"]]
        assert got == [(m.player, m.position) for m in expected.history]
        assert state["final"]["tuple"] == client.post("/encode", json={"w": DEMO_W}).json()

    def test_engine_on_demand_refused_on_humans_turn(self, client):
        sid = start_game(client, w=[1, 2], human_role="A")["session"]
        assert client.post(f"/games/{sid}/moves", json={}).status_code == 409

    def test_move_after_game_over_409(self, client):
        sid = start_game(client, w=[1], human_role=None)["session"]
        client.post(f"/games/{sid}/moves", json={})
        assert client.post(f"/games/{sid}/moves", json={"position": 1}).status_code == 409

    def test_invalid_move_body_422(self, client):
        sid = start_game(client, w=[1, 2])["session"]
        assert (
            client.post(f"/games/{sid}/moves", json={"position": "two"}).status_code
            == 422
        )


class TestAnalysis:
    def test_initial_analysis_matches_marking(self, client):
        sid = start_game(client, w=DEMO_W)["session"]
        data = client.get(f"/games/{sid}/analysis").json()
        marks = crossout_mark(tuple(DEMO_W)).marks
        assert [e["eater"] for e in data["analysis"]] == list(marks)
        assert [e["position"] for e in data["analysis"]] == list(range(1, 13))

    def test_analysis_shrinks_with_play(self, client):
        sid = start_game(client, w=[1, 2])["session"]
        client.post(f"/games/{sid}/moves", json={"position": 2})
        data = client.get(f"/games/{sid}/analysis").json()
        assert data["analysis"] == [{"position": 1, "eater": "B"}]


class TestEncodeDecodeEndpoints:
    def test_encode(self, client):
        data = client.post("/encode", json={"w": DEMO_W}).json()
        assert data["pa"] == "UDUUUDDUUDDD"
        assert data["em"] == [3, 1, 1, 1, 2, 1]

    def test_decode_roundtrip(self, client):
        tuple_json = client.post("/encode", json={"w": DEMO_W}).json()
        back = client.post("/decode", json={"tuple": tuple_json}).json()
        assert back["w"] == DEMO_W

    def test_bad_bodies(self, client):
        assert client.post("/encode", json={"w": [1, 1]}).status_code == 422
        assert client.post("/encode", json={}).status_code == 422
        assert client.post("/decode", json={"tuple": {"pa": "UD"}}).status_code == 422

    def test_constraint_violation_422(self, client):
        bad = {"pa": "UD", "pb": "UUDD", "ell": [1], "em": [2], "parity": "even"}
        response = client.post("/decode", json={"tuple": bad})
        assert response.status_code == 422
        assert "em_1" in response.json()["error"]


class TestIdentities:
    def test_stream_shape(self, client):
        response = client.get("/identities", params={"suite": "cor5", "n": 2})
        assert response.status_code == 200
        lines = [json.loads(line) for line in response.text.strip().splitlines()]
        assert len(lines) == 4
        assert all(line["verdict"] == "equal" for line in lines)
        assert all("elapsed" not in line for line in lines)

    def test_unknown_suite_422(self, client):
        assert client.get("/identities", params={"suite": "nope"}).status_code == 422

    def test_guard_422(self, client):
        response = client.get("/identities", params={"suite": "thm3", "n": 6})
        assert response.status_code == 422


class TestReplay:
    def script(self, client):
        responses = []
        responses.append(client.post("/games", json={"n": 6, "seed": 3, "human_role": "A"}))
        sid = responses[0].json()["session"]
        state = responses[0].json()["state"]
        while not state["game_over"]:
            pos = max(state["remaining"])
            r = client.post(f"/games/{sid}/moves", json={"position": pos})
            state = r.json()
            responses.append(r)
        responses.append(client.get(f"/games/{sid}"))
        responses.append(client.get(f"/games/{sid}/analysis"))
        return [r.content for r in responses]

    def test_identical_responses_across_fresh_services(self):
        first = self.script(TestClient(create_app()))
        second = self.script(TestClient(create_app()))
        assert first == second

    def test_log_replay(self, tmp_path):
        log = tmp_path / "requests.jsonl"
        recording = TestClient(create_app(log_path=str(log)))
        original = []
        original.append(recording.post("/games", json={"w": [2, 1, 3], "human_role": "A"}))
        sid = original[0].json()["session"]
        original.append(recording.post(f"/games/{sid}/moves", json={"position": 3}))
        original.append(recording.post("/encode", json={"w": [1, 2]}))
        fresh = TestClient(create_app())
        replayed = replay_log(fresh, str(log))
        assert [r.content for r in replayed] == [r.content for r in original]
