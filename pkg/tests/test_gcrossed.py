import pytest

from gxinduce.gcrossed import FiniteGroup, GradingError
from gxinduce.io import decode, validate_instance
from gxinduce.kernel import Scalar

from _util import doc, perturbed, scale, single_entry_perturbations


def test_cyclic_group():
    G = FiniteGroup.cyclic(3, ["e", "a", "b"])
    assert G.check().passed
    assert G.mul("a", "a") == "b"
    assert G.inv("a") == "b"
    assert G.conj("a", "b") == "b"


def test_grading(ising):
    gx = ising.gx
    assert gx.grade("s") == "g"
    assert gx.degree_word(ising.cat.word("s", "s")) == "e"
    assert gx.degree_word(ising.cat.word("s", "p")) == "g"


def test_action_is_trivial_on_labels(ising):
    gx = ising.gx
    for a in ising.cat.labels:
        assert gx.act_label("g", a) == a


def test_action_identity_on_morphisms(ising):
    gx, cat = ising.gx, ising.cat
    w = cat.word("s", "s")
    for f in cat.hom_basis(w, w):
        assert cat.equal(gx.act("e", f), f)


@pytest.mark.parametrize("fixture", ["vec", "toric", "ising"])
def test_crossed_axioms_hold(fixture, request):
    gx = request.getfixturevalue(fixture).gx
    rep = gx.check_crossed_axioms()
    assert rep.passed, rep.summary()
    assert rep["yang_baxter"].count > 0


def _monodromy(gx, a, b):
    cat = gx.cat
    m = gx.braid(b, a) @ gx.braid(a, b)
    return cat.block(m, cat.ring.products(a, b)[0][0]).data[0][0]


def test_toric_monodromies(toric):
    gx = toric.gx
    assert _monodromy(gx, "e", "m") == -1
    assert _monodromy(gx, "e", "f") == -1
    assert _monodromy(gx, "m", "f") == -1
    assert _monodromy(gx, "e", "e") == 1
    assert _monodromy(gx, "f", "f") == 1


def test_toric_fermion_twist(toric):
    cat, gx = toric.cat, toric.gx
    assert cat.block(gx.braid("f", "f"), "1").data[0][0] == -1


def test_vec_braiding_symmetric(vec):
    cat, gx = vec.cat, vec.gx
    for a in cat.labels:
        for b in cat.labels:
            assert cat.equal(gx.braid_op(a, b), gx.braid(a, b))


def test_toric_braiding_not_symmetric(toric):
    cat, gx = toric.cat, toric.gx
    assert not cat.equal(gx.braid_op("e", "m"), gx.braid("e", "m"))


def test_reverse_braiding_needs_degree_e(ising):
    with pytest.raises(GradingError):
        ising.gx.braid_op("s", "p")


def test_braid_unitary(ising):
    cat, gx = ising.cat, ising.gx
    for a in cat.labels:
        for b in cat.labels:
            c = gx.braid(a, b)
            assert cat.equal(c.dag() @ c, cat.identity(cat.word(a, b)))


def test_muger_centers(vec, toric, ising):
    assert vec.gx.muger_center() == ["1", "j"]
    assert toric.gx.muger_center() == ["1"]
    assert ising.gx.muger_center() == ["1", "p"]


def test_ising_r_values(ising):
    # R^{ss}_1 = zeta16^{-1}, R^{ss}_psi = zeta16^3, twist of sigma is zeta16
    cat, gx = ising.cat, ising.gx
    c = gx.braid("s", "s")
    assert cat.block(c, "1").data[0][0] == Scalar.zeta(-1, 16)
    assert cat.block(c, "p").data[0][0] == Scalar.zeta(3, 16)


def test_r_phase_breaks_yang_baxter():
    inst = perturbed("ising_crossed", "R", ["s", "s", "1"], how=lambda x: scale(x, 2, 16))
    rep = inst.gx.check_crossed_axioms()
    assert not rep["yang_baxter"].passed
    assert rep["yang_baxter"].witness is not None


def test_r_sign_flip_detected():
    inst = perturbed("ising_crossed", "R", ["s", "s", "1"])
    rep = inst.gx.check_crossed_axioms()
    assert not rep.passed
    assert rep.failures()[0].witness is not None


def test_vec_jj_sign_flip_is_svec():
    # c(j, j) = -1 is again a valid braiding (sVec); the algebra 1+j then stops being commutative
    inst = perturbed("vec_z2", "R", ["j", "j", "1"])
    assert inst.gx.check_crossed_axioms().passed
    rep = validate_instance(inst)
    assert [f.check_id for f in rep.failures()] == ["algebra_1j.qsystem.commutative"]


@pytest.mark.parametrize("name", ["vec_z2", "toric_z2", "ising_crossed"])
def test_every_single_r_negation_detected(name):
    for where, d in single_entry_perturbations(doc(name), "R"):
        rep = validate_instance(decode(d))
        assert not rep.passed, where
        assert rep.failures()[0].witness is not None, where
