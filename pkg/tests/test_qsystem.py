import copy

import pytest

from gxinduce.fusion import Mor
from gxinduce.io import decode, encode_scalar, validate_instance
from gxinduce.kernel import Mat, Scalar
from gxinduce.qsystem import (
    QSystemError,
    check_equivariance,
    check_qsystem,
    group_qsystem,
    transport_qsystem,
    trivial_qsystem,
)

from _util import doc

AXIOMS = ["associativity", "unit_law", "standardness", "frobenius", "x_isometry"]


def test_trivial_qsystem(toric):
    rep = check_qsystem(trivial_qsystem(toric.cat), toric.gx)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("fixture,setting", [("vec", "algebra_1j"), ("toric", "condensed"), ("vec", "trivial"), ("toric", "trivial")])
def test_catalog_qsystems_commutative(fixture, setting, request):
    e = request.getfixturevalue(fixture)
    rep = check_qsystem(e.instance.setting(setting).eq.q, e.gx)
    assert rep.passed, rep.summary()
    for name in AXIOMS + ["commutative"]:
        assert rep[name].passed


def test_ising_psi_algebra_not_commutative(ising):
    q = ising.instance.setting("psi_algebra").eq.q
    rep = check_qsystem(q, ising.gx)
    for name in AXIOMS:
        assert rep[name].passed
    assert not rep["commutative"].passed
    assert rep["commutative"].witness is not None


def test_psi_self_braiding_is_minus_one(ising):
    cat = ising.cat
    assert cat.block(ising.gx.braid("p", "p"), "1").data[0][0] == -1


def test_dimension_of_theta(toric):
    q = toric.instance.setting("condensed").eq.q
    assert q.sqrt_dtheta * q.sqrt_dtheta == 2


def test_group_qsystem_rejects_non_subgroup(toric):
    with pytest.raises(QSystemError):
        group_qsystem(toric.cat, ["e", "m"], Scalar.sqrt2(8))
    with pytest.raises(QSystemError):
        group_qsystem(toric.cat, ["1", "e"], 2)


@pytest.mark.parametrize("fixture", ["vec", "toric", "ising"])
def test_catalog_equivariance(fixture, request):
    e = request.getfixturevalue(fixture)
    for st in e.settings:
        rep = check_equivariance(st.eq, e.gx)
        assert rep.passed, rep.summary()


def _with_z(entry, setting, block, value):
    d = copy.deepcopy(doc(entry))
    for st in d["settings"]:
        if st["name"] == setting:
            st["z"]["g"][block] = [[encode_scalar(value, 8)]]
    return decode(d)


def test_z_one_i_fails():
    inst = _with_z("toric_z2", "condensed", "e", Scalar.i(8))
    st = inst.setting("condensed")
    rep = check_equivariance(st.eq, inst.gx)
    assert not rep["z_cocycle"].passed
    assert not rep["z_qsystem_iso"].passed
    assert rep["z_cocycle"].witness == ("g", "g")
    assert not validate_instance(inst).passed


def test_z_trivial_lift_also_valid():
    inst = _with_z("toric_z2", "condensed", "e", Scalar.one(8))
    st = inst.setting("condensed")
    assert check_equivariance(st.eq, inst.gx).passed


def test_transport_along_phase(toric):
    st = toric.instance.setting("condensed")
    cat, gx = toric.cat, toric.gx
    word = st.eq.q.word
    i = Scalar.i(8)
    u = Mor(cat, word, word, {"1": Mat(1, 1, [[cat.one]]), "e": Mat(1, 1, [[i]])})
    eq2 = transport_qsystem(st.eq, gx, u)
    assert check_qsystem(eq2.q, gx).passed
    assert check_equivariance(eq2, gx).passed
    assert not cat.equal(eq2.q.x, st.eq.q.x)


def test_transport_rejects_non_unitary(toric):
    st = toric.instance.setting("condensed")
    cat = toric.cat
    word = st.eq.q.word
    u = Mor(cat, word, word, {"1": Mat(1, 1, [[cat.one]]), "e": Mat(1, 1, [[cat.one * 2]])})
    with pytest.raises(QSystemError):
        transport_qsystem(st.eq, toric.gx, u)
