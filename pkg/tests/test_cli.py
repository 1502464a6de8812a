import io
import json
import subprocess
import sys

import pytest

from admkit.cli import (EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, load_config, run,
                        to_jsonable)
from admkit.exactmath import MultiPoly


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    if env is not None:
        import os
        old = os.environ.get("ADMKIT_CONFIG")
        os.environ["ADMKIT_CONFIG"] = env
    try:
        code = run(list(argv), out=out, err=err)
    finally:
        if env is not None:
            if old is None:
                del os.environ["ADMKIT_CONFIG"]
            else:
                os.environ["ADMKIT_CONFIG"] = old
    return code, out.getvalue(), err.getvalue()


def frac(obj):
    from fractions import Fraction
    return Fraction(int(obj["num"]), int(obj["den"]))


def test_vacuum_example():
    code, out, _ = call("affine", "vacuum", "--type", "A1", "--p", "1", "--q", "5")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["kAdmissible"] is True and data["kwAdmissible"] is False


def test_vir_classify_json():
    code, out, _ = call("vir", "classify", "--p", "4", "--q", "3", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert len(rows) == 20
    corner = next(r for r in rows if (r["r"], r["s"]) == (3, 0))
    assert corner["cAdmissible"] is False
    assert {frac(r["h"]) for r in rows if r["minimalModel"]} == {frac({"num": "0", "den": "1"}),
                                                                frac({"num": "1", "den": "16"}),
                                                                frac({"num": "1", "den": "2"})}


def test_output_is_byte_identical():
    a = call("ns", "classify", "--p", "4", "--q", "2")
    b = call("ns", "classify", "--p", "4", "--q", "2")
    assert a == b
    assert '"status": "undecided"' in a[1]


def test_partitions_csv():
    code, out, _ = call("partitions", "--algebra", "vir", "--up-to", "4")
    assert code == EXIT_OK
    assert out.splitlines() == ["grade,count", "0,1", "1,1", "2,2", "3,3", "4,5"]
    code, out, _ = call("partitions", "--algebra", "ns", "--up-to", "3/2")
    assert out.splitlines()[-1] == "3,2"


def test_kac_det_json_round_trip():
    code, out, _ = call("kac-det", "--algebra", "vir", "--level", "2", "--json", "--check")
    assert code == EXIT_OK
    data = json.loads(out)
    det = MultiPoly.from_json(data["det"])
    assert det.vars == ("h", "c")
    assert data["matchesProductFormula"] is True
    assert data["size"] == 2


def test_kac_det_half_integer_grade():
    code, out, _ = call("kac-det", "--algebra", "ns", "--level", "3/2", "--check")
    assert code == EXIT_OK
    assert json.loads(out)["grade"] == {"x2": 3}


def test_jantzen_negative_values_and_table():
    code, out, _ = call("jantzen", "--algebra", "vir", "--h", "1/16", "--c", "1/2",
                        "--mu", "1,0", "--up-to", "3", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "grade,layerDims,layerSum,detValuation,ok"
    code, out, _ = call("vir", "selfext", "--h", "1/16", "--k", "-2/3", "--mu", "1,3")
    assert code == EXIT_OK
    assert json.loads(out)["jantzen"]["result"] == "notInImage"


def test_jantzen_degenerate_direction_is_domain_error():
    code, _, err = call("jantzen", "--algebra", "vir", "--h", "0", "--c", "1/2",
                        "--mu", "0,1", "--up-to", "2")
    assert code == EXIT_DOMAIN
    assert "transverse" in err


def test_wred_commands():
    code, out, _ = call("wred", "reduce", "--type", "A1", "--p", "4", "--q", "3",
                        "--r", "2", "--s", "2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["l0"] == {"num": "1", "den": "16"}
    assert data["l0"] == data["virasoroH"]
    code, out, _ = call("wred", "recovery", "--p", "4", "--q", "3", "--check")
    assert code == EXIT_OK and json.loads(out)["ok"] is True


def test_affine_sl2_validate():
    code, out, _ = call("affine", "sl2", "--p", "3", "--q", "2", "--validate")
    data = json.loads(out)
    assert code == EXIT_OK
    assert len(data["kAdmissible"]) == 8 and len(data["kwAdmissible"]) == 4


def test_roots_and_classify():
    code, out, _ = call("roots", "--type", "A2")
    assert [r["vector"] for r in json.loads(out)] == [[0, 1], [1, 0], [1, 1]]
    code, out, _ = call("classify", "--type", "A1", "--affine", "--weight", "1,0,0")
    assert json.loads(out)["kwAdmissible"] is True


@pytest.mark.parametrize("argv", [
    ("vir", "classify", "--p", "4", "--q", "2"),
    ("affine", "vacuum", "--type", "A1", "--k", "-2"),
    ("wred", "reduce", "--type", "A1", "--k", "-2", "--weight", "0"),
])
def test_domain_errors(argv):
    assert call(*argv)[0] == EXIT_DOMAIN


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("kac-det", "--algebra", "vir"),
    ("vir", "classify", "--p", "4", "--q", "3", "--unknown"),
    ("jantzen", "--algebra", "vir", "--h", "0", "--mu", "1,0"),
    ("verify", "--suite", "C99"),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"cutoffs": {"depthVir": 2}, "outputFormat": "csv"}))
    code, out, _ = call("jantzen", "--algebra", "vir", "--h", "1/16", "--c", "1/2",
                        "--mu", "1,0", env=str(cfg))
    assert code == EXIT_OK
    assert len(out.splitlines()) == 3  # header plus depths 1 and 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rootHeight": 0}))
    assert call("roots", "--type", "A1", env=str(bad))[0] == EXIT_USAGE
    assert load_config({}).root_height == 20


def test_verify_quick_suite():
    code, out, _ = call("verify", "--suite", "C5,C8")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "2/2 checks passed"


def test_verify_failure_exit_code(monkeypatch):
    from admkit import acceptance
    failing = acceptance.CheckResult("C8", "vacuum", False)
    monkeypatch.setattr(acceptance, "CHECKS",
                        [(i, (lambda: failing) if i == "C8" else f) for i, f in acceptance.CHECKS])
    code, out, _ = call("verify", "--suite", "C8")
    assert code == EXIT_VERIFY
    assert out.startswith("FAIL")


def test_to_jsonable_rejects_floats():
    with pytest.raises(TypeError):
        to_jsonable(0.5)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "admkit", "affine", "vacuum", "--type", "G2",
                           "--p", "7", "--q", "3"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kwAdmissible"] is True


@pytest.mark.parametrize("h,k", [("1/16", "-2/3"), ("0", "-2/3"), ("1/2", "-5/4"), ("0", "xi")])
def test_selfext_minimal_points_match_exact_route(h, k, tmp_path):
    from admkit import virasoro
    from admkit.cli import parse_number
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"latticeBound": 1}))
    code, out, _ = call("vir", "selfext", "--h", h, "--k", k, env=str(cfg))
    assert code == EXIT_OK
    exact = virasoro.minimal_points(parse_number(h), parse_number(k))
    assert [tuple(pt) for pt in json.loads(out)["minimalPoints"]] == exact


def test_verify_uses_configured_seed(tmp_path, monkeypatch):
    from admkit import acceptance
    seen = []
    real = acceptance.check_properties

    def spy(seed=2024):
        seen.append(seed)
        return real(seed=seed)

    monkeypatch.setattr(acceptance, "CHECKS", [("C10", spy)])
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 99}))
    code, out, _ = call("verify", "--suite", "C10", env=str(cfg))
    assert code == EXIT_OK and seen == [99]
