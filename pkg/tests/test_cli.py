import io
import json
import subprocess
import sys

import pytest

from descentpoly.cli import canonical_vectors, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    text = out.getvalue()
    reports = [json.loads(line) for line in text.splitlines()] if "--pretty" not in argv else text
    return code, reports


def test_compute_signed_gf():
    code, (rep,) = run("compute", "signed-des", "2", "2", "--route", "gf")
    assert code == 0
    assert rep["coeffs"] == ["1", "31", "55", "9"]
    assert rep["input"] == {"m": [2, 2]}


def test_compute_sv_signed_brute():
    code, (rep,) = run("compute", "sv-signed", "1", "--route", "brute")
    assert code == 0 and rep["coeffs"] == ["1", "3"]


def test_compute_macmahon_terms():
    code, (rep,) = run("compute", "macmahon", "1", "1", "--route", "gf")
    assert rep["terms"] == [[0, 0, 0, "1"], [1, 1, 0, "1"]]


@pytest.mark.parametrize("route", ["brute", "recurrence", "gf"])
def test_compute_routes_agree(route):
    from descentpoly.identities import descent_poly_by_stream
    expected = [str(c) for c in descent_poly_by_stream((3, 1)).coeffs]
    code, (rep,) = run("compute", "signed-des", "--m", "3", "1", "--route", route)
    assert code == 0 and rep["coeffs"] == expected


def test_compute_qz_specialized():
    code, (rep,) = run("compute", "qz-des", "2", "--q", "1", "--z", "1")
    assert rep["coeffs"] == ["1", "3"]
    code, (rep,) = run("compute", "qz-des", "1", "--z", "0")
    assert rep["terms"] == [[0, 0, 0, "1"]]


def test_compute_flags_for_inputs():
    _, (a,) = run("compute", "asc-s", "--s", "1", "4", "3", "8")
    _, (b,) = run("compute", "sv-signed", "--n", "2", "--route", "recurrence")
    assert a["coeffs"] == b["coeffs"] == ["1", "31", "55", "9"]


def test_usage_errors():
    assert run("compute", "asc-s", "1", "4", "--route", "gf")[0] == 2
    assert run("compute", "signed-des", "2", "0")[0] == 2
    assert run("compute", "sv-signed", "1", "2")[0] == 2
    assert run("certify", "--coeffs", "0")[0] == 2
    assert run("certify", "--coeffs", "1", "-1")[0] == 2
    assert run("certify")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "nope", "1"], out=io.StringIO())
    assert exc.value.code == 2


def test_cap_exceeded():
    assert run("compute", "signed-des", "6", "6", "--route", "brute")[0] == 3
    assert run("compute", "asc-s", "1", "4", "3", "8", "--max-product", "10")[0] == 3
    assert run("sweep", "5", "--max-total", "4")[0] == 3
    # fails fast on the s-sequence product before enumerating any words
    assert run("verify", "equidistribution", "5")[0] == 3


@pytest.mark.parametrize("argv", [
    ["verify", "equidistribution", "2"],
    ["verify", "qz-gf", "1", "1"],
    ["verify", "ehrhart", "3"],
    ["verify", "macmahon", "2", "1"],
    ["verify", "signed-gf", "2", "1", "1"],
    ["verify", "unsigned-equidistribution", "3"],
    ["verify", "chow-gessel", "2"],
])
def test_verify_passes(argv):
    code, (rep,) = run(*argv)
    assert code == 0
    assert all(rep["verdicts"].values())
    assert rep["mismatch"] is None


def test_verify_equidistribution_routes():
    _, (rep,) = run("verify", "equidistribution", "2")
    assert len(rep["routes"]) == 5
    assert {tuple(r["coeffs"]) for r in rep["routes"].values()} == {("1", "31", "55", "9")}


def test_certify():
    code, (rep,) = run("certify", "--m", "2", "2")
    assert code == 0
    assert rep["verdicts"] == {"real_rooted": True, "log_concave": True, "unimodal": True}
    code, (rep,) = run("certify", "--coeffs", "1", "0", "1")
    assert code == 1 and rep["verdicts"]["real_rooted"] is False
    code, (rep,) = run("certify", "--coeffs", "1", "1")
    assert code == 0 and rep["verdicts"]["real_rooted"] is True


@pytest.mark.parametrize("m", [["2", "2"], ["3", "1", "1"], ["1", "1", "1", "1"]])
def test_certify_round_trip(m):
    _, (comp,) = run("compute", "signed-des", *m)
    _, (via_m,) = run("certify", "--m", *m)
    _, (via_c,) = run("certify", "--coeffs", *comp["coeffs"])
    assert via_m["verdicts"] == via_c["verdicts"]
    assert via_m["certificate"] == via_c["certificate"]


def test_sweep():
    code, reps = run("sweep", "4")
    assert code == 0
    assert len(reps) == 11
    assert [r["input"]["m"] for r in reps][:3] == [[1], [2], [1, 1]]
    code, reps = run("sweep", "1")
    assert len(reps) == 1 and reps[0]["coeffs"] == ["1", "1"]


def test_canonical_vectors_are_partitions():
    vecs = list(canonical_vectors(6))
    assert len(vecs) == 1 + 2 + 3 + 5 + 7 + 11
    assert all(list(v) == sorted(v, reverse=True) for v in vecs)


def test_output_is_deterministic():
    a = run("verify", "qz-gf", "2", "1")
    b = run("verify", "qz-gf", "2", "1")
    assert a == b


def test_timing_flag():
    _, (rep,) = run("compute", "signed-des", "2", "--timing")
    assert rep["ms"] >= 0


def test_pretty():
    code, text = run("compute", "signed-des", "2", "2", "--pretty")
    assert "1 + 31t + 55t^2 + 9t^3" in text
    code, text = run("compute", "qz-des", "1", "--pretty")
    assert "1 + tqz" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "descentpoly", "compute", "sv-signed", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == ["1", "31", "55", "9"]
