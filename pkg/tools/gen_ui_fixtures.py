"""Record server responses for the frontend test suite.

Produces frontend/tests/fixtures/badges.json (ten analyze responses paired
with the CLI's text output for the same inputs) and roundtrip.json (the
response log of loading the small mutation-class example and clicking vertex
1 twice).  Regenerate after changing the analysis surface:

    python tools/gen_ui_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from fastapi.testclient import TestClient

from mutafold.service.app import create_app

FIXTURE_INPUTS = [
    ("triangle-2-2-4", "diagram 3\n1 2 2\n2 3 2\n3 1 4\n"),
    ("f4-chain", "diagram 4\n1 2 1\n2 3 2\n3 4 1\n"),
    ("g2-affine", "diagram 3\n1 2 3\n2 3 1\n"),
    ("x6", "diagram 6\n1 2 1\n2 3 4\n3 1 1\n1 4 1\n4 5 4\n5 1 1\n1 6 1\n"),
    ("a3-path", "diagram 3\n1 2 1\n2 3 1\n"),
    ("weight5-infinite", "diagram 3\n1 2 5\n2 3 1\n"),
    ("w2-path", "diagram 3\n1 2 2\n2 3 2\n"),
    ("single-vertex", "diagram 1\n"),
    ("heavy-order2", "diagram 2\n1 2 100\n"),
    ("e6-tree", "diagram 6\n1 2 1\n1 3 1\n3 4 1\n1 5 1\n5 6 1\n"),
]


def cli_lines(text: str) -> dict:
    import contextlib
    import io

    from mutafold.cli import main

    out: dict = {}
    tmp = Path("/tmp/mutafold_fixture_input.txt")
    tmp.write_text(text, encoding="utf-8")
    for verb in ("finite", "classify", "decompose"):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main([verb, str(tmp)])
        out[verb] = {"exit": code, "stdout": buf.getvalue().strip()}
    return out


def main() -> None:
    client = TestClient(create_app())
    badges = []
    for name, text in FIXTURE_INPUTS:
        resp = client.post("/analyze", json={"text": text})
        assert resp.status_code == 200, (name, resp.text)
        badges.append(
            {
                "name": name,
                "input": text,
                "state": resp.json(),
                "cli": cli_lines(text),
            }
        )

    roundtrip = []
    r = client.post("/session", json={"text": FIXTURE_INPUTS[0][1]})
    assert r.status_code == 200
    roundtrip.append(r.json())
    sid = r.json()["session_id"]
    for _ in range(2):
        r = client.post(f"/session/{sid}/mutate", json={"vertex": 1})
        assert r.status_code == 200
        roundtrip.append(r.json())

    dest = Path(__file__).resolve().parents[1] / "frontend" / "tests" / "fixtures"
    dest.mkdir(parents=True, exist_ok=True)
    (dest / "badges.json").write_text(json.dumps(badges, indent=1), encoding="utf-8")
    (dest / "roundtrip.json").write_text(
        json.dumps(roundtrip, indent=1), encoding="utf-8"
    )
    print(f"wrote fixtures for {len(badges)} inputs to {dest}")


if __name__ == "__main__":
    main()
