import pytest

gtsing = pytest.importorskip("gtsing")


def test_phi_lowering_and_diagonal():
    assert gtsing.phi_text(3, 1, 1) == "x[1][1] id"
    assert gtsing.phi(2, 2, 1) == [{"coeff": "1", "shift": {"(1,1)": 1}}]


def test_phi_raising_n2():
    (term,) = gtsing.phi(2, 1, 2)
    assert term["shift"] == {"(1,1)": -1}
    expected = gtsing.normalize("-(x[1][1]-x[2][1])*(x[1][1]-x[2][2])")
    assert term["coeff"] == expected


def test_normalize_is_canonical():
    a = gtsing.normalize("1/((x[2][1]-x[2][2])*(x[2][1]-x[2][2]-1)) + 1/((x[2][1]-x[2][2])*(x[2][1]-x[2][2]+1))")
    assert a == "2/(x[2][1]^2-2*x[2][1]*x[2][2]+x[2][2]^2-1)"
    with pytest.raises(ValueError):
        gtsing.normalize("x[1][1")


def test_classify():
    assert gtsing.classify(gtsing.canonical_point()) == {"class": "OneSingular", "witness": {"k": 2, "i": 1, "j": 2}}
    assert gtsing.classify(gtsing.generic_point(3)) == {"class": "Generic"}
    point = {"n": 3, "rows": [["1/5"], ["1/4", "-3/4"], ["1/7", "2/9", "5/11"]]}
    assert gtsing.classify(point)["witness"] == {"k": 2, "i": 1, "j": 2}


def test_act():
    assert gtsing.act(1, 1, "D1:id") == [{"coeff": "1/3", "kind": "D1", "shift": {}}]
    out = gtsing.act(2, 2, "D2:(2,2)+1")
    assert out == [{"coeff": "1/15", "kind": "D2", "shift": {"(2,2)": 1}}]
    with pytest.raises(ValueError):
        gtsing.act(2, 2, "D2:(2,1)+1")
    with pytest.raises(ValueError):
        gtsing.act(1, 1, "D1:id", point=gtsing.generic_point(3))


@pytest.mark.parametrize("suite", ["homomorphism", "module", "appendix", "singularity"])
def test_suites_pass(suite):
    report = gtsing.verify(suite, n=3)
    assert report["ok"], report["failures"][:3]
    assert report["passed"] == report["total"] > 0


def test_wrong_convention_fails():
    report = gtsing.verify("homomorphism", n=2, convention="circ")
    assert not report["ok"]
    with pytest.raises(ValueError):
        gtsing.verify("module", convention="circ")
    with pytest.raises(ValueError):
        gtsing.verify("bogus")
