import pytest

from gxinduce.induction import (
    InductionError,
    alpha_minus,
    alpha_plus,
    check_covariance,
    check_half_braiding,
    check_intertwiners,
    check_multiplicativity,
    check_reciprocity,
    check_relative_braiding,
    find_twisted_reps,
    frobenius_backward,
    frobenius_forward,
    hom_dim,
    hom_dim_formula,
    hom_space,
    relative_braiding,
    sector_product,
    sigma_restrict,
)


def test_untwisted_half_braiding_of_m(toric_S):
    # e and m braid with monodromy -1, so the e-summand of theta picks up a sign
    A = alpha_plus(toric_S, "e", "m")
    assert A.e.blocks["m"].data[0][0] == 1
    assert A.e.blocks["f"].data[0][0] == -1
    assert check_half_braiding(toric_S, A).passed


def test_twisted_half_braiding_of_m(toric_S):
    A = alpha_plus(toric_S, "g", "m")
    assert A.e.blocks["m"].data[0][0] == 1
    assert A.e.blocks["f"].data[0][0] == 1
    assert A.label() == "alpha^{g;+}_{m}"


def test_minus_half_braiding(toric_S):
    B = alpha_minus(toric_S, "m")
    assert check_half_braiding(toric_S, B).passed
    assert B.chirality == "-"


def test_degree_mismatch_rejected(ising_S):
    with pytest.raises(InductionError):
        alpha_plus(ising_S, "e", "s")
    with pytest.raises(InductionError):
        alpha_plus(ising_S, "h", "1")


def test_hom_dim_oracle(toric_S, ising_S):
    assert hom_dim(toric_S, "1", "e") == 1
    assert hom_dim(toric_S, "m", "f") == 1
    assert hom_dim(toric_S, "m", "e") == 0
    assert hom_dim(ising_S, "s", "s") == 1
    assert hom_dim(ising_S, "1", "p") == 0
    assert hom_dim_formula(toric_S, "g", "m", "m") == 1


@pytest.mark.parametrize("g,lam,mu,dim", [
    ("e", "1", "1", 1), ("e", "1", "e", 1), ("e", "m", "m", 1), ("e", "m", "f", 1),
    ("g", "m", "m", 1), ("g", "m", "f", 1), ("g", "e", "1", 1), ("g", "e", "m", 0),
])
def test_plus_hom_dims_solver(toric_S, g, lam, mu, dim):
    assert len(hom_space(toric_S, alpha_plus(toric_S, g, lam), alpha_plus(toric_S, g, mu))) == dim


@pytest.mark.parametrize("g,lam,mu,dim", [
    ("e", "1", "1", 1), ("e", "m", "m", 0), ("e", "m", "f", 0), ("g", "m", "m", 1), ("g", "f", "m", 1),
])
def test_mixed_hom_dims(toric_S, g, lam, mu, dim):
    assert len(hom_space(toric_S, alpha_plus(toric_S, g, lam), alpha_minus(toric_S, mu))) == dim


def test_minus_hom_dims_solver(ising_S):
    cat = ising_S.cat
    for lam in cat.labels:
        for mu in cat.labels:
            if ising_S.gx.degree(lam) == ising_S.gx.degree(mu):
                got = len(hom_space(ising_S, alpha_minus(ising_S, lam), alpha_minus(ising_S, mu)))
                assert got == hom_dim(ising_S, lam, mu)


def test_frobenius_maps_inverse(toric_S):
    cat = toric_S.cat
    src = toric_S.theta + cat.word("m")
    for r in cat.hom_basis(src, cat.word("f")):
        t = frobenius_backward(toric_S, r)
        assert cat.equal(frobenius_forward(toric_S, t), r)


def test_product_of_sectors(toric_S):
    A, B = alpha_plus(toric_S, "g", "m"), alpha_plus(toric_S, "g", "e")
    P = sector_product(toric_S, A, B)
    assert P.g == "e" and P.chirality == "+"
    assert check_half_braiding(toric_S, P).passed


@pytest.mark.parametrize("fixture", ["toric_S", "ising_S"])
def test_multiplicativity_and_covariance(fixture, request):
    S = request.getfixturevalue(fixture)
    for rep in (check_multiplicativity(S), check_covariance(S)):
        assert rep.passed, rep.summary()
        assert all(r.count > 0 for r in rep)


def test_intertwiners(toric_S):
    rep = check_intertwiners(toric_S)
    assert rep.passed, rep.summary()


def test_toric_sectors(toric_S):
    untw = find_twisted_reps(toric_S, "e")
    tw = find_twisted_reps(toric_S, "g")
    assert len(untw) == 1 and len(tw) == 1
    assert sigma_restrict(toric_S, untw[0]).labels == ("1", "e")
    assert sigma_restrict(toric_S, tw[0]).labels == ("m", "f")
    sm = tw[0].summary()
    assert sm["lambda"] == "m" and sm["mu"] == "m"
    assert sm["plus_presentations"] == ["m", "f"]


def test_ising_sectors_trivial_theta(ising_S):
    assert [m.underlying.labels for m in find_twisted_reps(ising_S, "e")] == [("1",), ("p",)]
    assert [m.underlying.labels for m in find_twisted_reps(ising_S, "g")] == [("s",)]


def test_reciprocity(toric_S):
    rep = check_reciprocity(toric_S)
    assert rep.passed, rep.summary()
    assert rep["explicit_maps"].count > 0


def test_relative_braiding(toric_S):
    rep = check_relative_braiding(toric_S)
    assert rep.passed, rep.summary()
    for name in ("unitary", "presentation_independence", "braid_relation_1", "braid_relation_2"):
        assert rep[name].count > 0


def test_defect_self_braiding_is_partial_isometry(toric_S):
    cat = toric_S.cat
    d = find_twisted_reps(toric_S, "g")[0]
    K = relative_braiding(toric_S, d, d)
    KK = K.dag() @ K
    assert not cat.is_zero(K)
    assert cat.equal(KK @ KK, KK)
    assert cat.equal(K @ KK, K)


def test_relative_braiding_reduces_for_trivial_theta(ising_S):
    rep = check_relative_braiding(ising_S)
    assert rep.passed, rep.summary()
    assert rep["trivial_theta_reduces_to_braiding"].count > 0
