import pytest

import branchkit as bk


def test_branch_su21():
    out = bk.branch("su:2,1", "1,0|0")
    assert out["family"] == "su:2,1"
    assert len(out["terms"]) == 2
    assert out == bk.oracle_restrict("su:2,1", "1,0|0")


def test_verdict_examples():
    assert bk.is_good("soe:2", "p=2;1,1")["verdict"] == "good"
    assert bk.is_good("soe:2", "p=0;1,1")["verdict"] == "notgood"
    v = bk.is_good("su:3,2", "0,0,0|0,0")
    assert v["verdict"] == "notgood"
    assert v["key"] == 1
    assert v["certificate"]["value"] == 6
    assert bk.is_good("su:1,2", "0|2,0")["verdict"] == "good"


def test_groups_and_terms():
    keys = [g["key"] for g in bk.star_groups("sostar:5", "0,0,0,0,0")]
    assert keys == [7, 6, 5, 4, 3, 2, 1]
    assert len(bk.weyl_terms("su:3,2", "0,0,0|0,0")) == 6


def test_membership():
    assert bk.member_soe("soe:3", "q=0;1,1")["status"] == "nonmember"
    assert bk.member_soe("soe:3", "q=1;1,1 + q=-1;1,-1")["status"] == "member"
    assert bk.lattice_member("su:2,1", "1||0", 3)["status"] == "member"
    assert bk.invariant_I("su:3,2", "1,0|0|0") == 2
    pre = bk.preimage("su:3,1", "1,0||0")
    assert pre["family"] == "su:3,1" and pre["terms"]


def test_telescoping_and_explore():
    assert all(bk.verify_telescoping(m) for m in (2, 3, 4))
    rows = bk.explore_sostar(4, 0, 0)
    assert len(rows) == 1
    assert [g["key"] for g in rows[0]["groups"]] == [5, 4, 3, 2, 1]


def test_errors():
    with pytest.raises(ValueError):
        bk.branch("su:2,1", "1,x|0")
    with pytest.raises(ValueError):
        bk.invariant_I("su:2,2", "0|0|0")
    code, out, err = bk.run(["good", "--family", "su:3,2", "--weight", "0,0|0"])
    assert code == 2 and "error" in err


def test_cli_in_process():
    code, out, _ = bk.run(["good", "--family", "soe:2", "--weight", "p=2;1,1"])
    assert code == 0 and '"verdict":"good"' in out
    assert bk.run_criterion(6)["passed"]
