import pytest

from gxinduce.fusion import FusionError, FusionRing, SkeletalCategory
from gxinduce.io import decode, validate_instance
from gxinduce.kernel import ExactField, Scalar

from _util import doc, perturbed, single_entry_perturbations


def test_ising_fusion_rules(ising):
    cat = ising.cat
    assert cat.fuse("s", "s").labels == ("1", "p")
    assert cat.fuse("s", "p").labels == ("s",)
    assert cat.fuse("p", "p").labels == ("1",)


def test_ising_dimensions(ising):
    cat = ising.cat
    assert cat.qdim("s") * cat.qdim("s") == 2
    assert sum(cat.qdim(a) * cat.qdim(a) for a in cat.labels) == 4


def test_toric_fusion_is_klein_group(toric):
    cat = toric.cat
    assert cat.fuse("e", "m").labels == ("f",)
    for a in cat.labels:
        assert cat.fuse(a, a).labels == ("1",)


@pytest.mark.parametrize("name", ["vec_z2", "toric_z2", "ising_crossed"])
def test_pentagon_holds(name, request):
    cat = request.getfixturevalue({"vec_z2": "vec", "toric_z2": "toric", "ising_crossed": "ising"}[name]).cat
    rep = cat.check_pentagon()
    assert rep.passed, rep.summary()
    assert rep["pentagon"].count > 0


def test_hom_dim_matches_fusion(ising):
    cat = ising.cat
    for a in cat.labels:
        for b in cat.labels:
            for c in cat.labels:
                assert cat.hom_dim(c, cat.word(a, b)) == cat.ring.Nabc(a, b, c)
    assert cat.hom_dim("s", cat.word("s", "s", "s")) == 2


def test_tensor_associative(ising):
    cat = ising.cat
    words = [cat.word("s"), cat.word("s", "p"), cat.word("s")]
    fs = [cat.hom_basis(w, w)[-1] for w in words]
    left = cat.tensor(cat.tensor(fs[0], fs[1]), fs[2])
    right = cat.tensor(fs[0], cat.tensor(fs[1], fs[2]))
    assert cat.equal(left, right)


def test_interchange_law(ising):
    cat = ising.cat
    w = cat.word("s", "s")
    basis = cat.hom_basis(w, w)
    i = Scalar.i(16)
    f, g = basis[0] + basis[1].scaled(i), basis[1]
    h, k = basis[1] - basis[0], basis[0].scaled(i)
    assert cat.equal(cat.tensor(f @ g, h @ k), cat.tensor(f, h) @ cat.tensor(g, k))


def test_adjoint_is_antilinear_involution(ising):
    cat = ising.cat
    w = cat.word("s", "s", "s")
    z = Scalar.zeta(1, 16)
    for f in cat.hom_basis(w, cat.word("s"))[:3]:
        g = f.scaled(z)
        assert cat.equal(g.dag().dag(), g)
        assert cat.equal(g.dag(), f.dag().scaled(z.conjugate()))


def test_positivity(ising):
    cat = ising.cat
    w = cat.word("s", "s", "s")
    for f in cat.hom_basis(w, w):
        ff = f.dag() @ f
        for m in ff.blocks.values():
            for i in range(m.rows):
                v = m.data[i][i]
                assert v.is_rational() and v.rational() >= 0


@pytest.mark.parametrize("a", ["1", "s", "p"])
def test_standard_solution(ising, a):
    cat = ising.cat
    R, Rb = cat.standard_solution(a)
    d = cat.qdim(a)
    assert cat.block(R.dag() @ R, cat.unit).data[0][0] == d
    assert cat.block(Rb.dag() @ Rb, cat.unit).data[0][0] == d
    ida = cat.identity(cat.word(a))
    zig = cat.tensor(Rb.dag(), ida) @ cat.tensor(ida, R)
    assert cat.equal(zig, ida)
    zag = cat.tensor(ida, R.dag()) @ cat.tensor(Rb, ida)
    assert cat.equal(zag, ida)


def test_missing_f_block_rejected():
    ring = FusionRing(["1", "j"], "1", {("1", "1", "1"): 1, ("1", "j", "j"): 1, ("j", "1", "j"): 1, ("j", "j", "1"): 1})
    with pytest.raises(FusionError):
        SkeletalCategory(ring, {}, ExactField(1))


def test_negated_f_entry_fails_pentagon_with_witness():
    inst = perturbed("toric_z2", "F", ["e", "m", "m", "e"])
    rep = inst.cat.check_pentagon()
    assert not rep.passed
    assert rep["pentagon"].witness is not None


def test_negated_ising_f_fails():
    inst = perturbed("ising_crossed", "F", ["s", "s", "s", "s"], 1, 1)
    rep = inst.cat.check_pentagon()
    assert not rep.passed
    assert rep.failures()[0].witness is not None


@pytest.mark.parametrize("name", ["vec_z2", "toric_z2", "ising_crossed"])
def test_every_single_f_negation_detected(name):
    for where, d in single_entry_perturbations(doc(name), "F"):
        rep = validate_instance(decode(d))
        assert not rep.passed, where
        assert rep.failures()[0].witness is not None, where
