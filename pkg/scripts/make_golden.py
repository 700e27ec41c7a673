"""Regenerate the pinned CLI outputs under tests/golden/.

    python3 scripts/make_golden.py
"""

import contextlib
import io
from pathlib import Path

from a3extremal.cli import main

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"

CASES = {
    "bounds_3_6.csv": ["bounds", "--n-min", "3", "--n-max", "6", "--format", "csv"],
    "bounds_3_6.json": ["bounds", "--n-min", "3", "--n-max", "6", "--format", "json"],
}
for n in (3, 4, 5, 6):
    for want in ("max", "min"):
        CASES[f"extremizer_{n}_{want}.json"] = ["extremizer", "--n", str(n), "--want", want, "--format", "json"]
CASES["kernel_5_max.csv"] = ["kernel", "--n", "5", "--want", "max", "--samples", "9", "--format", "csv"]


def render(argv) -> str:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    if code != 0:
        raise SystemExit(f"{argv} exited with {code}")
    return buf.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        (GOLDEN / name).write_text(render(argv))
        print("wrote", name)
