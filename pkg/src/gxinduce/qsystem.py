"""Q-systems (standard unitary Frobenius algebras) and G-equivariant structure.

A Q-system is ``(theta, w, x)`` with ``w: 1 -> theta`` and
``x: theta -> theta theta``.  Standard normalisation is
``w*w = sqrt(d_theta) = x*x`` (the latter as ``sqrt(d_theta) 1_theta``),
where ``sqrt(d_theta)`` is stored explicitly since it need not be
computable from the data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence

from .fusion import FusionError, Mor, Obj, SkeletalCategory
from .gcrossed import FiniteGroup, GCrossedStructure
from .kernel import Mat
from .reports import CheckReport, Tally

__all__ = [
    "QSystem",
    "QSystemError",
    "EquivariantQSystem",
    "check_qsystem",
    "check_equivariance",
    "group_qsystem",
    "trivial_qsystem",
    "check_equivariant",
    "transport_qsystem",
]


class QSystemError(ValueError):
    """The data cannot define the requested Q-system."""


@dataclass
class QSystem:
    theta: Obj
    w: Mor
    x: Mor
    sqrt_dtheta: Any

    @property
    def cat(self) -> SkeletalCategory:
        return self.w.cat

    @property
    def word(self) -> tuple:
        return (self.theta,)


@dataclass
class EquivariantQSystem:
    """A Q-system with unitaries ``z[g]: gamma_{proj(g)}(theta) -> theta`` for ``g`` in ``G``."""

    q: QSystem
    group: FiniteGroup
    proj: Mapping[str, str]
    z: Mapping[str, Mor] = field(default_factory=dict)


def check_qsystem(q: QSystem, gx: Optional[GCrossedStructure] = None, require_commutative: bool = True) -> CheckReport:
    """Every defining identity of a standard, irreducible Q-system.

    Commutativity uses the braiding of ``gx`` and is only checked if
    ``theta`` lies in degree e.
    """
    cat = q.cat
    rep = CheckReport("qsystem")
    th = q.word
    one_t = cat.identity(th)
    w, x = q.w, q.x
    t = Tally("types")
    t.record(w.src == () and w.dst == th and x.src == th and x.dst == th + th, (str(q.theta),))
    rep.add(t.result())
    if t.failed:
        return rep

    t = Tally("associativity")
    lhs = cat.tensor(x, one_t) @ x
    rhs = cat.tensor(one_t, x) @ x
    t.record(cat.equal(lhs, rhs), ("(x 1) x", "(1 x) x"))
    rep.add(t.result())

    t = Tally("unit_law")
    t.record(cat.equal(cat.tensor(w.dag(), one_t) @ x, one_t), ("left",))
    t.record(cat.equal(cat.tensor(one_t, w.dag()) @ x, one_t), ("right",))
    rep.add(t.result())

    t = Tally("standardness")
    d = q.sqrt_dtheta
    t.record(cat.equal(w.dag() @ w, cat.scale(cat.identity(()), d)), ("w*w",))
    t.record(cat.equal(x.dag() @ x, cat.scale(one_t, d)), ("x*x",))
    rep.add(t.result())

    t = Tally("frobenius")
    xx = x @ x.dag()
    t.record(cat.equal(cat.tensor(one_t, x.dag()) @ cat.tensor(x, one_t), xx), ("(1 x*)(x 1)",))
    t.record(cat.equal(cat.tensor(x.dag(), one_t) @ cat.tensor(one_t, x), xx), ("(x* 1)(1 x)",))
    rep.add(t.result())

    t = Tally("x_isometry")
    # x x* / sqrt(d) is a projection
    t.record(cat.equal(xx @ xx, cat.scale(xx, d)), ("(x x*)^2",))
    rep.add(t.result())

    t = Tally("irreducible")
    t.record(cat.hom_dim(cat.unit, th) == 1, (cat.unit,))
    rep.add(t.result())

    if gx is not None and require_commutative:
        t = Tally("commutative")
        if gx.degree_obj(q.theta) != gx.group.identity:
            t.record(False, ("theta not in degree e",))
        else:
            t.record(cat.equal(gx.braid(th, th) @ x, x), ("c(theta, theta) x",))
        rep.add(t.result())
    return rep


def check_equivariance(eq: EquivariantQSystem, gx: GCrossedStructure) -> CheckReport:
    """Unitarity, Q-system isomorphism and the cocycle identity of ``z``."""
    q = eq.q
    cat = q.cat
    grp = eq.group
    rep = CheckReport("equivariance")
    th = q.word
    t_types = Tally("z_types")
    for g in grp.elements:
        zg = eq.z.get(g)
        gp = eq.proj[g]
        ok = zg is not None and zg.src == gx.act_word(gp, th) and zg.dst == th
        t_types.record(ok, (g,))
    rep.add(t_types.result())
    if t_types.failed:
        return rep
    hom = Tally("proj_homomorphism")
    for g in grp.elements:
        for h in grp.elements:
            hom.record(eq.proj[grp.mul(g, h)] == gx.group.mul(eq.proj[g], eq.proj[h]), (g, h))
    rep.add(hom.result())
    uni = Tally("z_unitary")
    iso = Tally("z_qsystem_iso")
    for g in grp.elements:
        zg = eq.z[g]
        gp = eq.proj[g]
        uni.record(cat.equal(zg.dag() @ zg, cat.identity(zg.src)) and cat.equal(zg @ zg.dag(), cat.identity(th)), (g,))
        lhs = q.x @ zg
        rhs = cat.tensor(zg, zg) @ gx.act(gp, q.x)
        ok = cat.equal(lhs, rhs) and cat.equal(zg @ gx.act(gp, q.w), q.w)
        iso.record(ok, (g,))
    rep.add(uni.result())
    rep.add(iso.result())
    coc = Tally("z_cocycle")
    e = grp.identity
    coc.record(cat.equal(eq.z[e], cat.identity(th)), (e,))
    for g in grp.elements:
        for h in grp.elements:
            lhs = eq.z[grp.mul(g, h)]
            rhs = eq.z[g] @ gx.act(eq.proj[g], eq.z[h])
            coc.record(cat.equal(lhs, rhs), (g, h))
    rep.add(coc.result())
    return rep


check_equivariant = check_equivariance


def transport_qsystem(
    eq: EquivariantQSystem, gx: GCrossedStructure, u: Mor
) -> EquivariantQSystem:
    """Move ``(theta, w, x, z)`` along a unitary ``u: theta -> theta'``."""
    q = eq.q
    cat = q.cat
    if u.src != q.word or len(u.dst) != 1:
        raise QSystemError("u must map theta to a single object")
    if not (cat.equal(u.dag() @ u, cat.identity(u.src)) and cat.equal(u @ u.dag(), cat.identity(u.dst))):
        raise QSystemError("u is not unitary")
    w2 = u @ q.w
    x2 = cat.tensor(u, u) @ q.x @ u.dag()
    q2 = QSystem(u.dst[0], w2, x2, q.sqrt_dtheta)
    z2 = {}
    for g in eq.group.elements:
        gu = gx.act(eq.proj[g], u)
        z2[g] = u @ eq.z[g] @ gu.dag()
    return EquivariantQSystem(q2, eq.group, dict(eq.proj), z2)


def group_qsystem(
    cat: SkeletalCategory,
    subgroup: Sequence[str],
    sqrt_order: Any,
    cochain: Optional[Mapping[tuple[str, str], Any]] = None,
) -> QSystem:
    """The Q-system ``theta = sum of invertibles in H`` with uniform weight ``sqrt|H|``.

    ``sqrt_order`` is ``sqrt(|H|)`` as a field element.  ``cochain``
    trivialises the associator on ``H``; without one the associator must
    already be trivial there.
    """
    field = cat.field
    H = list(subgroup)
    if cat.unit not in H:
        raise QSystemError("the subgroup must contain the unit")
    prod: dict[tuple[str, str], str] = {}
    for h in H:
        for k in H:
            ps = cat.ring.products(h, k)
            if len(ps) != 1 or ps[0][1] != 1 or ps[0][0] not in H:
                raise QSystemError(f"{h} x {k} does not stay in the subgroup of invertibles")
            prod[(h, k)] = ps[0][0]
    om = field.coerce(sqrt_order)
    if not field.equal(om * om, field.coerce(len(H))):
        raise QSystemError("sqrt_order squared is not |H|")
    if cochain is None:
        for h in H:
            for k in H:
                for l in H:
                    d = prod[(prod[(h, k)], l)]
                    blk = cat.F[(h, k, l, d)]
                    if not field.equal(blk.mat.data[0][0], field.one):
                        raise QSystemError(
                            f"associator is nontrivial on H at {(h, k, l)}; supply a trivialising cochain"
                        )
        cochain = {}
    theta = Obj(tuple((h, om) for h in H))
    word = (theta,)
    w = Mor(cat, (), word, {cat.unit: Mat(1, 1, [[field.one]])})
    b = field.one / om
    blocks = {}
    for m in H:
        rows_basis = cat.basis(word + word, m)
        cols = cat.basis(word, m)
        rows = []
        for tree in rows_basis:
            (s1, h), (s2, k) = tree[0], tree[1]
            c = field.coerce(cochain.get((h, k), 1))
            rows.append([b * c])
        blocks[m] = Mat(len(rows_basis), len(cols), rows)
    x = Mor(cat, word, word + word, blocks)
    return QSystem(theta, w, x, om)


def trivial_qsystem(cat: SkeletalCategory) -> QSystem:
    """``theta = 1``: the identity extension."""
    return group_qsystem(cat, [cat.unit], 1)
