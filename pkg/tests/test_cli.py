import contextlib
import csv
import io
import json
import math
import re
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from a3extremal.cli import FORMAT_ENV, main
from a3extremal.report import load_schema

S5 = math.sqrt(5)
GOLDEN = Path(__file__).parent / "golden"
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
from make_golden import CASES  # noqa: E402


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, out, _ = run(argv + ["--format", "json"])
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    return code, doc


def run_csv(argv):
    code, out, _ = run(argv + ["--format", "csv"])
    return code, list(csv.DictReader(io.StringIO(out)))


def test_bounds_csv_example():
    code, rows = run_csv(["bounds", "--n-min", "3", "--n-max", "6"])
    assert code == 0 and len(rows) == 4
    row5 = next(r for r in rows if r["n"] == "5")
    assert row5["a3_max"] == "1.6180339887498949"
    assert float(row5["a3_max"]) == pytest.approx((1 + S5) / 2, abs=1e-15)


def test_bounds_single_json():
    code, doc = run_json(["bounds", "--n-min", "3", "--n-max", "3"])
    assert code == 0
    (row,) = doc["results"]["rows"]
    assert row["a3_min"] == pytest.approx(-1 / 3, abs=1e-15)
    code, doc2 = run_json(["bounds", "--n", "3"])
    assert doc2["results"] == doc["results"]


@pytest.mark.parametrize("argv", [
    ["bounds", "--n-min", "5", "--n-max", "3"],
    ["bounds", "--n-min", "2", "--n-max", "3"],
    ["verify", "--n-max", "2"],
    ["extremizer", "--n", "2", "--want", "max"],
    ["extremizer", "--n", "4", "--want", "max", "--tau", "1.5"],
    ["extremizer", "--n", "3", "--want", "min", "--route", "closed"],
    ["extremizer", "--n", "4", "--want", "min", "--route", "closed"],
    ["extremizer", "--n", "4", "--want", "max", "--route", "nope"],
    ["kernel", "--n", "5", "--want", "max", "--samples", "1"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_one(argv):
    code, out, err = run(argv)
    assert code == 1
    assert out == ""
    assert "error" in err


def test_extremizer_compact_example():
    code, doc = run_json(["extremizer", "--n", "5", "--want", "max", "--route", "compact"])
    assert code == 0
    want = [1, 0, (1 + S5) / 2, 0, (5 + S5) / 10]
    assert doc["results"]["coefficients"] == pytest.approx(want, abs=1e-12)
    names = {c["name"] for c in doc["checks"]}
    assert {"cross_route_discrepancy", "nonnegative_on_circle", "oracle_extreme_value"} <= names
    assert all(c["pass"] for c in doc["checks"])


def test_extremizer_recurrence_endpoint():
    code, doc = run_json(["extremizer", "--n", "4", "--want", "max", "--tau", "1", "--route", "recurrence"])
    assert code == 0
    assert doc["results"]["coefficients"] == pytest.approx([1, 1, 1, 0.5], abs=1e-12)


def test_extremizer_family_member_csv():
    code, rows = run_csv(["extremizer", "--n", "6", "--want", "min", "--tau", "0.5", "--route", "closed"])
    assert code == 0
    a = [float(r["a_j"]) for r in rows]
    assert [int(r["j"]) for r in rows] == [1, 2, 3, 4, 5, 6]
    odd = [1, (1 - S5) / 2, (5 - S5) / 10]
    assert a[0::2] == pytest.approx(odd, abs=1e-12)
    # even part is affine in tau; tau=1 gives the lifted minimiser
    unit = [(3 - S5) / 4, (5 - 3 * S5) / 10, (5 - S5) / 20]
    assert a[1::2] == pytest.approx([0.5 * u for u in unit], abs=1e-12)


def test_odd_tau_is_ignored_with_warning():
    code, out, err = run(["extremizer", "--n", "5", "--want", "max", "--tau", "0.3", "--format", "json"])
    assert code == 0
    assert "warning" in err
    assert json.loads(out)["results"]["tau"] == 0


def test_kernel_examples():
    code, rows = run_csv(["kernel", "--n", "5", "--want", "max", "--samples", "5"])
    assert code == 0 and len(rows) == 5
    assert max(float(r["difference"]) for r in rows) < 1e-9

    code, rows = run_csv(["kernel", "--n", "3", "--want", "min", "--samples", "2"])
    assert [float(r["t"]) for r in rows] == pytest.approx([0, math.pi])
    for r in rows:
        assert abs(float(r["im_on_circle"])) < 1e-12
        assert abs(float(r["kernel"])) < 1e-12

    code, doc = run_json(["kernel", "--n", "6", "--want", "min", "--tau", "1", "--samples", "100"])
    assert code == 0
    rows = doc["results"]["rows"]
    assert len(rows) == 100
    assert min(r["im_on_circle"] for r in rows) >= -1e-10


def test_verify_small_range():
    code, doc = run_json(["verify", "--n-max", "3"])
    assert code == 0
    assert list(doc["results"]["matrix"]) == ["3"]
    assert all(c["pass"] for c in doc["checks"])


def test_verify_twelve_passes():
    code, doc = run_json(["verify", "--n-max", "12"])
    assert code == 0
    assert sorted(int(k) for k in doc["results"]["matrix"]) == list(range(3, 13))
    assert all(c["pass"] for c in doc["checks"])


def test_failed_check_exits_two(monkeypatch):
    import a3extremal.cli as cli
    from a3extremal.report import Check, ReportDocument

    def failing(*_a, **_k):
        return ReportDocument("verify", {}, {}, [Check("forced", False, 1.0)], [{"x": 1}])

    monkeypatch.setattr(cli, "cmd_verify", failing)
    code, _, _ = run(["verify", "--n-max", "3"])
    assert code == 2


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_env_default_format(monkeypatch, fmt):
    monkeypatch.setenv(FORMAT_ENV, fmt)
    _, out, _ = run(["bounds", "--n", "4"])
    assert out.lstrip().startswith("{") == (fmt == "json")


def test_seventeen_significant_digits():
    _, out, _ = run(["bounds", "--n", "5", "--format", "json"])
    for tok in re.findall(r"-?\d+\.\d+(?:e[-+]\d+)?", out):
        mantissa = tok.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
        assert len(mantissa) <= 17
        assert float(tok) == float("%.17g" % float(tok))
    assert "0.70710678118654757" in run(["extremizer", "--n", "4", "--want", "max", "--format", "json"])[1]


def test_deterministic_bytes():
    argv = ["extremizer", "--n", "9", "--want", "min", "--seed", "4", "--format", "json"]
    assert run(argv)[1] == run(argv)[1]


def _close(a, b, path="$"):
    if isinstance(a, dict):
        assert isinstance(b, dict) and list(a) == list(b), path
        for k in a:
            _close(a[k], b[k], f"{path}.{k}")
    elif isinstance(a, list):
        assert isinstance(b, list) and len(a) == len(b), path
        for i, (u, v) in enumerate(zip(a, b)):
            _close(u, v, f"{path}[{i}]")
    elif isinstance(a, float) or isinstance(b, float):
        assert b == pytest.approx(a, abs=1e-12), path
    else:
        assert a == b, path


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, _ = run(CASES[name])
    assert code == 0
    expected = (GOLDEN / name).read_text()
    if name.endswith(".json"):
        _close(json.loads(expected), json.loads(out))
        jsonschema.validate(json.loads(out), load_schema())
    else:
        got = list(csv.reader(io.StringIO(out)))
        ref = list(csv.reader(io.StringIO(expected)))
        assert got[0] == ref[0] and len(got) == len(ref)
        for g, r in zip(got[1:], ref[1:]):
            _close([_num(x) for x in r], [_num(x) for x in g])


def _num(s):
    try:
        return float(s)
    except ValueError:
        return s


def test_golden_bounds_are_the_known_values():
    rows = list(csv.DictReader((GOLDEN / "bounds_3_6.csv").open()))
    pairs = [(float(r["a3_min"]), float(r["a3_max"])) for r in rows]
    ref = [(-1 / 3, 1), (-1 / 3, 1), ((1 - S5) / 2, (1 + S5) / 2), ((1 - S5) / 2, (1 + S5) / 2)]
    for p, q in zip(pairs, ref):
        assert p == pytest.approx(q, abs=1e-12)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "a3extremal", "bounds", "--n", "3", "--format", "csv"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.splitlines()[0].startswith("n,min_case")
