"""Record raw service responses used by the frontend contract tests.

Run from the repo root after installing the package:
    python3 frontend/scripts/record_fixtures.py
"""
from pathlib import Path

from fastapi.testclient import TestClient

from crossout.service import create_app

DEMO_W = [2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8]
OUT = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    OUT.mkdir(exist_ok=True)
    client = TestClient(create_app())

    created = client.post("/games", json={"w": DEMO_W})
    (OUT / "demo_initial.json").write_bytes(created.content)
    sid = created.json()["session"]

    analysis = client.get(f"/games/{sid}/analysis")
    (OUT / "demo_analysis.json").write_bytes(analysis.content)

    midgame = client.post(f"/games/{sid}/moves", json={})
    (OUT / "demo_midgame.json").write_bytes(midgame.content)

    state = midgame.json()
    last = None
    while not state["game_over"]:
        last = client.post(f"/games/{sid}/moves", json={})
        state = last.json()
    (OUT / "demo_final.json").write_bytes(last.content)

    encode = client.post("/encode", json={"w": DEMO_W})
    (OUT / "demo_encode.json").write_bytes(encode.content)

    for name in sorted(p.name for p in OUT.glob("*.json")):
        print("wrote", name)


if __name__ == "__main__":
    main()
