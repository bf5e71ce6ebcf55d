import io
import json

import pytest

from nilc.cli import run


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compare_example():
    code, out, _ = call("compare", "--type", "A", "--rank", "1", "--r", "1", "--s", "-1")
    assert code == 0
    assert out.strip() == "LEQ: true (sigma_R = s0, l=1, dim=1; sigma_S = s1 s0 s1, l=3, dim=2)"


def test_compare_verdicts():
    assert call("compare", "--type", "A", "--rank", "2", "--r", "1,0", "--s", "0,1")[1].startswith("INCOMPARABLE")
    assert call("compare", "--type", "A", "--rank", "1", "--r", "-1", "--s", "1")[1].startswith("GEQ")
    assert call("compare", "--type", "A", "--rank", "1", "--r", "1", "--s", "1")[1].startswith("EQ")


def test_catalogue_g2():
    code, out, _ = call("catalogue", "--type", "G", "--rank", "2")
    rows = [l for l in out.splitlines() if l.startswith("h2-")]
    assert code == 0 and len(rows) == 1
    assert rows[0].split()[1:3] == ["01", "1"]


def test_enumerate_a2():
    code, out, _ = call("enumerate", "--type", "A", "--rank", "2")
    assert code == 0 and out.splitlines()[0] == "7 B-orbits in N2"


def test_enumerate_tilde():
    code, out, _ = call("enumerate", "--type", "C", "--rank", "2", "--orbit", "h2-02", "--tilde")
    assert code == 0 and "resolution of h2-02" in out.splitlines()[0]


def test_admissible_and_fiber():
    code, out, _ = call("admissible", "--type", "A", "--rank", "2", "--set", "1,0")
    assert code == 0 and "w = s2" in out
    code, out, _ = call("fiber", "--type", "A", "--rank", "2", "--set", "{}", "--orbit", "h2-11")
    assert code == 0 and out.startswith("6 pairs")


def test_hasse_json_roundtrip(tmp_path):
    from nilc.orbit_poset import enumerate_N2, from_json, same_poset
    from nilc.root_system import system

    path = tmp_path / "p.json"
    code, _, _ = call("hasse", "--type", "C", "--rank", "2", "--format", "json", "--out", str(path))
    assert code == 0
    assert same_poset(from_json(path.read_text()), enumerate_N2(system("C2")))
    assert json.loads(path.read_text())["kind"] == "N2"


def test_deterministic_output():
    a = call("enumerate", "--type", "B", "--rank", "3")
    b = call("enumerate", "--type", "B", "--rank", "3")
    assert a == b


@pytest.mark.parametrize(
    "argv,code,name",
    [
        (("compare", "--type", "A", "--rank", "2", "--r", "1,-1", "--s", "1,0"), 3, "NotARoot"),
        (("compare", "--type", "B", "--rank", "3", "--r", "1,1,1;0,1,0", "--s", "1,0,0"), 3, "HeightOutOfRange"),
        (("fiber", "--type", "C", "--rank", "2", "--set", "1,0", "--orbit", "h2-10"), 3, "NotInOrtX"),
        (("catalogue", "--type", "A"), 2, "usage"),
        (("catalogue", "--type", "Q", "--rank", "2"), 2, "InvalidRank"),
        (("compare", "--type", "A", "--rank", "2", "--r", "x", "--s", "1,0"), 3, "NotARoot"),
    ],
)
def test_error_codes(argv, code, name):
    got, _, err = call(*argv)
    assert got == code
    assert err.startswith(name)


def test_rank_cap(monkeypatch):
    monkeypatch.setenv("NILC_RANK_CAP", "3")
    assert call("catalogue", "--type", "A", "--rank", "4")[0] == 2
    monkeypatch.setenv("NILC_RANK_CAP", "9")
    assert call("catalogue", "--type", "A", "--rank", "9")[0] == 0


def test_verify_suite_catalogue():
    code, out, _ = call("verify", "--suite", "catalogue")
    assert code == 0 and out.strip().endswith("checks passed")
