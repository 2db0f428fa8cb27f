import hooktab
import pytest

T1 = "1+1^2|3+3,4^4|4+4,5^9 / 3+3,5^4,6|6+7"
SWITCH_INPUT = ".|a2|a2|a1|b5|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2"
SWITCHED = ".|b6|b5|b2|b1|a1 / b8|b6|b5|b1|a2 / b2|a2|a2|a1"


def test_validate_and_weight():
    v = hooktab.validate(T1)
    assert v["valid"]
    assert v["shape"] == [3, 2]
    assert v["weight"] == hooktab.weight(T1)
    bad = hooktab.validate("1+2,2^3,4|3+4,5^5|5+6,7^7,8|7 / 4+4,5^7|7+8,9")
    assert not bad["valid"]
    assert len(bad["violations"]) == 3


def test_uncrowd():
    p, q = hooktab.uncrowd("1|1|1|3^5 / 2|2+4 / 3|5+7^6 / 4", "LLAA")
    assert p == "1|1|1|3 / 2|2|4|5 / 3|5|7 / 4|6"
    assert q == ".|.|.|. / .|.|a2|a2 / .|.|b1 / .|b3"


def test_switching():
    assert hooktab.shuffle(SWITCH_INPUT) == SWITCHED
    assert hooktab.fully_switch(SWITCH_INPUT, seed=3) == SWITCHED
    with pytest.raises(ValueError):
        hooktab.shuffle("b1|a1")


def test_biflagged_to_exquisite():
    bft = hooktab.enum_biflagged([3, 3, 1], [2, 1])
    exq = hooktab.enum_exquisite([3, 3, 1], [2, 1])
    assert len(bft) == len(exq) == 4
    assert sorted(hooktab.gg_jdt(b) for b in bft) == sorted(exq)
    assert all(hooktab.is_exquisite(e) for e in exq)
    assert not hooktab.is_biflagged(".|.|a1 / .|a1|b1 / b2")


def test_classify():
    flags = hooktab.classify_mixed(".|a1 / .|b1 / b1")
    assert flags["flagged_mixed"] and flags["sorted_alpha_beta"]


def test_enumeration_and_genfun():
    assert len(hooktab.enum_ssyt([2, 1], 3)) == 8
    assert hooktab.enum_hvt([1], 1, 1) == ["1", "1+1"]
    assert hooktab.identity_holds([1], 2, 2)


def test_parse_error():
    with pytest.raises(hooktab.ParseError):
        hooktab.normalize("1|0")


def test_verify():
    assert "shuffle_theorem" in hooktab.check_ids()
    r = hooktab.verify("shuffle_theorem", lambda_=[1], n=2, excess=2, timing=False)
    assert r["passed"] and r["schema"] == 1
    assert "elapsed_ms" not in r
    with pytest.raises(ValueError):
        hooktab.verify("nonsense")
