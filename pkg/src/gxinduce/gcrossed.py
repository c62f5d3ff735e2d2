"""Strict G-actions, gradings and G-crossed braidings on a skeletal category.

The action of ``g`` relabels simples and multiplies each trivalent vertex
``(a, b -> c)`` by a matrix ``U_g(a, b; c)``; it therefore acts on tree
bases without any F-moves.  The crossed braiding of a homogeneous ``X`` of
degree ``g`` past ``Y`` is ``c(X, Y): X Y -> gamma_g(Y) X`` and is stored
through R-blocks ``R[a, b, c]`` mapping the vertex ``(a, b -> c)`` to
``(gamma_{da}(b), a -> c)``.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Any, Mapping, Optional, Sequence

from .fusion import FusionError, Mor, Obj, SkeletalCategory, Word, _root
from .kernel import Mat, inverse
from .reports import CheckReport, CheckResult, Tally

__all__ = ["FiniteGroup", "GCrossedStructure", "GradingError"]


class GradingError(FusionError):
    """An object or word is not homogeneous for the grading."""


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, elements: Sequence[str], table: Mapping[tuple[str, str], str], identity: str) -> None:
        self.elements = tuple(elements)
        self.identity = identity
        self._mul = dict(table)
        self._inv = {}
        for g in self.elements:
            for h in self.elements:
                if self._mul.get((g, h)) == identity:
                    self._inv[g] = h

    @classmethod
    def trivial(cls, name: str = "e") -> "FiniteGroup":
        return cls((name,), {(name, name): name}, name)

    @classmethod
    def cyclic(cls, n: int, names: Optional[Sequence[str]] = None) -> "FiniteGroup":
        names = list(names) if names else [f"g{k}" for k in range(n)]
        table = {(names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)}
        return cls(names, table, names[0])

    def mul(self, *gs: str) -> str:
        acc = self.identity
        for g in gs:
            acc = self._mul[(acc, g)]
        return acc

    def inv(self, g: str) -> str:
        return self._inv[g]

    def conj(self, k: str, g: str) -> str:
        """``k g k^-1``."""
        return self.mul(k, g, self.inv(k))

    def check(self) -> CheckReport:
        rep = CheckReport("group")
        closed = Tally("group_closed")
        for g in self.elements:
            for h in self.elements:
                closed.record(self._mul.get((g, h)) in self.elements, (g, h))
        rep.add(closed.result())
        if closed.failed:
            return rep
        ident = Tally("group_identity")
        inv = Tally("group_inverse")
        for g in self.elements:
            ident.record(self.mul(self.identity, g) == g == self._mul[(g, self.identity)], (g,))
            inv.record(g in self._inv and self._mul[(self._inv[g], g)] == self.identity, (g,))
        rep.add(ident.result())
        rep.add(inv.result())
        assoc = Tally("group_assoc")
        for g in self.elements:
            for h in self.elements:
                for k in self.elements:
                    assoc.record(self._mul[(self._mul[(g, h)], k)] == self._mul[(g, self._mul[(h, k)])], (g, h, k))
        rep.add(assoc.result())
        return rep


class GCrossedStructure:
    """Grading, strict action and crossed braiding on ``cat``."""

    def __init__(
        self,
        cat: SkeletalCategory,
        group: FiniteGroup,
        grading: Mapping[str, str],
        action_labels: Optional[Mapping[str, Mapping[str, str]]] = None,
        action_vertex: Optional[Mapping[tuple[str, str, str, str], Any]] = None,
        R: Optional[Mapping[tuple[str, str, str], Any]] = None,
    ) -> None:
        self.cat = cat
        self.group = group
        self.field = cat.field
        self.grading = dict(grading)
        for a in cat.labels:
            if a not in self.grading:
                raise GradingError(f"label {a!r} has no degree")
        ident = {a: a for a in cat.labels}
        self.action_labels = {g: dict((action_labels or {}).get(g, ident)) for g in group.elements}
        for g, m in self.action_labels.items():
            if set(m) != set(cat.labels) or set(m.values()) != set(cat.labels):
                raise FusionError(f"action of {g!r} is not a permutation of the labels")
        self.action_vertex: dict[tuple[str, str, str, str], Mat] = {}
        for key, m in (action_vertex or {}).items():
            g, a, b, c = key
            n = cat.ring.Nabc(a, b, c)
            mat = m if isinstance(m, Mat) else Mat.from_rows(m, n)
            self.action_vertex[key] = mat.map(self.field.coerce)
        self.R: dict[tuple[str, str, str], Mat] = {}
        for a in cat.labels:
            for b in cat.labels:
                gb = self.act_label(self.grading[a], b)
                for c, n in cat.ring.products(a, b):
                    key = (a, b, c)
                    if R is None or key not in R:
                        raise FusionError(f"missing R-block for {key}")
                    n2 = cat.ring.Nabc(gb, a, c)
                    raw = R[key]
                    mat = raw if isinstance(raw, Mat) else Mat.from_rows(raw, n2)
                    if mat.shape != (n, n2):
                        raise FusionError(f"R-block {key} has shape {mat.shape}, expected {(n, n2)}")
                    self.R[key] = mat.map(self.field.coerce)
        self._cache: dict[Any, Any] = {}

    # -- grading ------------------------------------------------------------
    def degree(self, a: str) -> str:
        return self.grading[a]

    grade = degree

    def degree_obj(self, x: Obj) -> str:
        degs = {self.grading[a] for a in x.labels}
        if len(degs) != 1:
            raise GradingError(f"object {x} is not homogeneous")
        return degs.pop()

    def degree_word(self, word: Word) -> str:
        return self.group.mul(*(self.degree_obj(x) for x in word))

    # -- action -------------------------------------------------------------
    def act_label(self, g: str, a: str) -> str:
        return self.action_labels[g][a]

    def act_obj(self, g: str, x: Obj) -> Obj:
        return x.relabel(self.action_labels[g])

    def act_word(self, g: str, word: Word) -> Word:
        return tuple(self.act_obj(g, x) for x in word)

    def vertex_factor(self, g: str, a: str, b: str, c: str) -> Mat:
        m = self.action_vertex.get((g, a, b, c))
        if m is None:
            return Mat.identity(self.cat.ring.Nabc(a, b, c), self.field)
        return m

    def _act_tree(self, g: str, tree) -> list[tuple[Any, Any]]:
        if tree == ():
            return [(self.field.one, ())]
        if len(tree) == 2:
            return [(self.field.one, (tree[0], self.act_label(g, tree[1])))]
        left, right, c, mu = tree
        a, b = _root(left), _root(right)
        u = self.vertex_factor(g, a, b, c)
        gc = self.act_label(g, c)
        out = []
        for kl, tl in self._act_tree(g, left):
            for kr, tr in self._act_tree(g, right):
                base = kl * kr
                for nu in range(u.cols):
                    v = u.data[mu][nu]
                    if not self.field.is_zero(v):
                        out.append((base * v, (tl, tr, gc, nu)))
        return out

    def act_matrix(self, g: str, word: Word, c: str) -> Mat:
        """Canonical ``Hom(c, W) -> Hom(gc, gW)`` matrix of ``gamma_g``."""
        sig = self.cat.signature(word)
        key = ("act", g, sig, c)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        gsig = tuple(tuple(self.act_label(g, a) for a in labs) for labs in sig)
        src = self.cat._basis_sig(sig, c)
        gc = self.act_label(g, c)
        index = self.cat._index_sig(gsig, gc)
        rows = [[self.field.zero] * len(src) for _ in index]
        for j, t in enumerate(src):
            for k, nt in self._act_tree(g, t):
                rows[index[nt]][j] = rows[index[nt]][j] + k
        hit = Mat(len(index), len(src), rows)
        self._cache[key] = hit
        return hit

    def _act_matrix_inv(self, g: str, word: Word, c: str) -> Mat:
        sig = self.cat.signature(word)
        key = ("actinv", g, sig, c)
        hit = self._cache.get(key)
        if hit is None:
            hit = inverse(self.act_matrix(g, word, c), self.field)
            self._cache[key] = hit
        return hit

    def act(self, g: str, f: Mor) -> Mor:
        """``gamma_g(f)``."""
        out = {}
        for c, m in f.blocks.items():
            gc = self.act_label(g, c)
            out[gc] = self.act_matrix(g, f.dst, c) @ m @ self._act_matrix_inv(g, f.src, c)
        return Mor(self.cat, self.act_word(g, f.src), self.act_word(g, f.dst), out)

    # -- braiding -----------------------------------------------------------
    def braid(self, x, y) -> Mor:
        """Crossed braiding ``c(X, Y)``; words are fused first, then braided."""
        xw = _as_word(self.cat, x)
        yw = _as_word(self.cat, y)
        if len(xw) == 1 and len(yw) == 1:
            return self._braid_elem(xw[0], yw[0])
        return self._braid_direct(xw, yw)

    def _braid_elem(self, x: Obj, y: Obj) -> Mor:
        key = ("belem", x, y)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        cat = self.cat
        g = self.degree_obj(x)
        gy = self.act_obj(g, y)
        src = (x, y)
        dst = (gy, x)
        out = {}
        for c in cat.labels:
            sb = cat.basis(src, c)
            if not sb:
                continue
            idx = cat._index_sig(cat.signature(dst), c)
            rows = [[self.field.zero] * len(sb) for _ in idx]
            for j, (lx, ly, _, mu) in enumerate(sb):
                a, b = lx[1], ly[1]
                r = self.R[(a, b, c)]
                gb = self.act_label(g, b)
                for nu in range(r.cols):
                    v = r.data[mu][nu]
                    if not self.field.is_zero(v):
                        nt = ((ly[0], gb), lx, c, nu)
                        rows[idx[nt]][j] = v
            out[c] = Mat(len(idx), len(sb), rows)
        hit = Mor(cat, src, dst, out)
        self._cache[key] = hit
        return hit

    def _braid_direct(self, xw: Word, yw: Word) -> Mor:
        key = ("bdirect", xw, yw)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        cat = self.cat
        g = self.degree_word(xw)
        gyw = self.act_word(g, yw)
        sx, sy, sgy = cat.signature(xw), cat.signature(yw), cat.signature(gyw)
        out = {}
        for c in cat.labels:
            e_in, _, inv_in = cat._split(sx, sy, c)
            e_out, conv_out, _ = cat._split(sgy, sx, c)
            if not e_in:
                continue
            pos_out = {e: i for i, e in enumerate(e_out)}
            rows = [[self.field.zero] * len(e_in) for _ in e_out]
            for j, (x, i1, y, i2, mu) in enumerate(e_in):
                r = self.R[(x, y, c)]
                gy = self.act_label(g, y)
                amat = self.act_matrix(g, yw, y)
                for j2 in range(amat.rows):
                    k = amat.data[j2][i2]
                    if self.field.is_zero(k):
                        continue
                    for nu in range(r.cols):
                        v = r.data[mu][nu]
                        if not self.field.is_zero(v):
                            i = pos_out[(gy, j2, x, i1, nu)]
                            rows[i][j] = rows[i][j] + k * v
            out[c] = conv_out @ Mat(len(e_out), len(e_in), rows) @ inv_in
        hit = Mor(cat, xw + yw, gyw + xw, out)
        self._cache[key] = hit
        return hit

    def braid_composite(self, x, y) -> Mor:
        """``c(X, Y)`` assembled from braidings of single objects."""
        cat = self.cat
        xw = _as_word(cat, x)
        yw = _as_word(cat, y)
        if not xw or not yw:
            return cat.identity(xw + yw)
        if len(xw) > 1:
            x1, rest = xw[:1], xw[1:]
            h = self.degree_word(rest)
            first = cat.tensor(cat.identity(x1), self.braid_composite(rest, yw))
            second = cat.tensor(self.braid_composite(x1, self.act_word(h, yw)), cat.identity(rest))
            return second @ first
        if len(yw) > 1:
            y1, rest = yw[:1], yw[1:]
            g = self.degree_word(xw)
            first = cat.tensor(self.braid_composite(xw, y1), cat.identity(rest))
            second = cat.tensor(cat.identity(self.act_word(g, y1)), self.braid_composite(xw, rest))
            return second @ first
        return self._braid_elem(xw[0], yw[0])

    def braid_minus(self, x, y) -> Mor:
        """``c^-(X, Y) = c(Y, gamma_{h^-1} X)^{-1}`` for ``Y`` of degree ``h``."""
        cat = self.cat
        xw = _as_word(cat, x)
        yw = _as_word(cat, y)
        key = ("bminus", xw, yw)
        hit = self._cache.get(key)
        if hit is None:
            h = self.degree_word(yw)
            hit = cat.inverse(self.braid(yw, self.act_word(self.group.inv(h), xw)))
            self._cache[key] = hit
        return hit

    def braid_minus_composite(self, x, y) -> Mor:
        cat = self.cat
        xw = _as_word(cat, x)
        yw = _as_word(cat, y)
        if not xw or not yw:
            return cat.identity(xw + yw)
        if len(xw) > 1:
            x1, rest = xw[:1], xw[1:]
            k = self.degree_word(yw)
            first = cat.tensor(cat.identity(x1), self.braid_minus_composite(rest, yw))
            second = cat.tensor(self.braid_minus_composite(x1, yw), cat.identity(self.act_word(self.group.inv(k), rest)))
            return second @ first
        if len(yw) > 1:
            y1, rest = yw[:1], yw[1:]
            h1 = self.degree_word(y1)
            first = cat.tensor(self.braid_minus_composite(xw, y1), cat.identity(rest))
            second = cat.tensor(cat.identity(y1), self.braid_minus_composite(self.act_word(self.group.inv(h1), xw), rest))
            return second @ first
        return self.braid_minus(xw, yw)

    def braid_op(self, x, y) -> Mor:
        """Reverse braiding on degree-e objects: ``c(Y, X)*``."""
        cat = self.cat
        xw, yw = _as_word(cat, x), _as_word(cat, y)
        e = self.group.identity
        if self.degree_word(xw) != e or self.degree_word(yw) != e:
            raise GradingError("the reverse braiding is only defined in degree e")
        return cat.adjoint(self.braid(yw, xw))

    # -- invariants -----------------------------------------------------------
    def muger_center(self) -> list[str]:
        """Degree-e simples with trivial monodromy against every degree-e simple."""
        cat = self.cat
        e = self.group.identity
        deg_e = [a for a in cat.labels if self.grading[a] == e]
        out = []
        for a in deg_e:
            if all(self._monodromy_trivial(a, b) for b in deg_e):
                out.append(a)
        return out

    def _monodromy_trivial(self, a: str, b: str) -> bool:
        cat = self.cat
        m = self.braid(b, a) @ self.braid(a, b)
        return cat.equal(m, cat.identity(cat.word(a, b)))

    def check_crossed_axioms(self, witness_limit: bool = True) -> CheckReport:
        cat, grp, field = self.cat, self.group, self.field
        rep = grp.check()
        rep.suite = "gcrossed"
        labels = cat.labels
        e = grp.identity

        t = Tally("grading_multiplicative")
        for a in labels:
            for b in labels:
                for c, _ in cat.ring.products(a, b):
                    t.record(self.grading[c] == grp.mul(self.grading[a], self.grading[b]), (a, b, c))
        rep.add(t.result())
        t = Tally("grading_unit")
        t.record(self.grading[cat.unit] == e, (cat.unit,))
        rep.add(t.result())

        t = Tally("grading_covariance")
        for g in grp.elements:
            for a in labels:
                t.record(self.grading[self.act_label(g, a)] == grp.conj(g, self.grading[a]), (g, a))
        rep.add(t.result())

        t = Tally("action_labels")
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                for a in labels:
                    t.record(self.act_label(g, self.act_label(h, a)) == self.act_label(gh, a), (g, h, a))
        for a in labels:
            t.record(self.act_label(e, a) == a, (e, a))
        for g in grp.elements:
            t.record(self.act_label(g, cat.unit) == cat.unit, (g, cat.unit))
            for a in labels:
                ga = self.act_label(g, a)
                if a in cat.dims and ga in cat.dims:
                    t.record(cat.dims[a] == cat.dims[ga], (g, a))
                for b in labels:
                    for c in labels:
                        n1 = cat.ring.Nabc(a, b, c)
                        n2 = cat.ring.Nabc(ga, self.act_label(g, b), self.act_label(g, c))
                        t.record(n1 == n2, (g, a, b, c))
        rep.add(t.result())

        strict = Tally("action_strict")
        unit_v = Tally("action_unit_vertices")
        unitary = Tally("action_unitary")
        for a in labels:
            for b in labels:
                for c, n in cat.ring.products(a, b):
                    unit_v_ok = True
                    if cat.unit in (a, b):
                        for g in grp.elements:
                            unit_v_ok &= self.vertex_factor(g, a, b, c).equals(Mat.identity(n, field), field)
                        unit_v.record(unit_v_ok, (a, b, c))
                    strict.record(self.vertex_factor(e, a, b, c).equals(Mat.identity(n, field), field), (e, a, b, c))
                    for g in grp.elements:
                        for h in grp.elements:
                            lhs = self.vertex_factor(grp.mul(g, h), a, b, c)
                            ha, hb, hc = (self.act_label(h, x) for x in (a, b, c))
                            rhs = self.vertex_factor(h, a, b, c) @ self.vertex_factor(g, ha, hb, hc)
                            strict.record(lhs.equals(rhs, field), (g, h, a, b, c))
                        u = self.vertex_factor(g, a, b, c)
                        ga, gb, gc = (self.act_label(g, x) for x in (a, b, c))
                        n_src = [cat.vertex_norm(a, b, c, mu) for mu in range(n)]
                        n_dst = [cat.vertex_norm(ga, gb, gc, mu) for mu in range(n)]
                        prod = u @ _diag(n_dst, field) @ u.conj_transpose()
                        unitary.record(prod.equals(_diag(n_src, field), field), (g, a, b, c))
        rep.add(strict.result())
        rep.add(unit_v.result())
        rep.add(unitary.result())

        mono = Tally("action_monoidal")
        for a in labels:
            for b in labels:
                for c in labels:
                    word = cat.word(a, b, c)
                    for d in cat.roots(word):
                        trees, conv = cat.conversion(word, ((0, 1), 2), d)
                        for g in grp.elements:
                            gword = self.act_word(g, word)
                            gd = self.act_label(g, d)
                            gtrees, gconv = cat.conversion(gword, ((0, 1), 2), gd)
                            gidx = {tr: i for i, tr in enumerate(gtrees)}
                            rows = [[field.zero] * len(trees) for _ in gtrees]
                            for j, tr in enumerate(trees):
                                for k, nt in self._act_tree(g, tr):
                                    rows[gidx[nt]][j] = rows[gidx[nt]][j] + k
                            bl = Mat(len(gtrees), len(trees), rows)
                            lhs = gconv @ bl
                            rhs = self.act_matrix(g, word, d) @ conv
                            mono.record(lhs.equals(rhs, field), (g, a, b, c, d))
        rep.add(mono.result())

        t = Tally("R_unitary")
        for (a, b, c), r in self.R.items():
            gb = self.act_label(self.grading[a], b)
            n_src = [cat.vertex_norm(a, b, c, mu) for mu in range(r.rows)]
            n_dst = [cat.vertex_norm(gb, a, c, mu) for mu in range(r.cols)]
            ok = r.rows == r.cols and (r @ _diag(n_dst, field) @ r.conj_transpose()).equals(_diag(n_src, field), field)
            t.record(ok, (a, b, c))
        rep.add(t.result())

        t = Tally("R_unit")
        for a in labels:
            t.record(self.R[(cat.unit, a, a)].equals(Mat.identity(1, field), field), (cat.unit, a))
            t.record(self.R[(a, cat.unit, a)].equals(Mat.identity(1, field), field), (a, cat.unit))
        rep.add(t.result())

        for name, res in self._braid_checks().items():
            rep.add(res)
        return rep

    def _braid_checks(self) -> dict[str, CheckResult]:
        cat, grp = self.cat, self.group
        labels = cat.labels
        one = cat.word
        nat1 = Tally("naturality_first")
        nat2 = Tally("naturality_second")
        cov = Tally("covariance")
        br1 = Tally("braid_relation_1")
        br2 = Tally("braid_relation_2")
        ybe = Tally("yang_baxter")
        mnat = Tally("minus_naturality")
        mcov = Tally("minus_covariance")
        mbr1 = Tally("minus_braid_relation_1")
        mbr2 = Tally("minus_braid_relation_2")
        opp = Tally("reverse_braiding_degree_e")
        for a in labels:
            for b in labels:
                cab = self.braid(one(a), one(b))
                for k in grp.elements:
                    lhs = self.act(k, cab)
                    rhs = self.braid(one(self.act_label(k, a)), one(self.act_label(k, b)))
                    cov.record(cat.equal(lhs, rhs), (k, a, b))
                    mlhs = self.act(k, self.braid_minus(one(a), one(b)))
                    mrhs = self.braid_minus(one(self.act_label(k, a)), one(self.act_label(k, b)))
                    mcov.record(cat.equal(mlhs, mrhs), (k, a, b))
                if self.grading[a] == grp.identity and self.grading[b] == grp.identity:
                    opp.record(cat.equal(self.braid_op(one(a), one(b)), self.braid_minus(one(a), one(b))), (a, b))
                ab = one(a, b)
                for z in labels:
                    zw = one(z)
                    # braid relations: fused versus composite
                    br1.record(cat.equal(self.braid(ab, zw), self.braid_composite(ab, zw)), (a, b, z))
                    br2.record(cat.equal(self.braid(zw, ab), self.braid_composite(zw, ab)), (z, a, b))
                    mbr1.record(cat.equal(self.braid_minus(ab, zw), self.braid_minus_composite(ab, zw)), (a, b, z))
                    mbr2.record(cat.equal(self.braid_minus(zw, ab), self.braid_minus_composite(zw, ab)), (z, a, b))
                    # naturality on vertex generators
                    for c, n in cat.ring.products(a, b):
                        for mu in range(n):
                            s = self._vertex_map(a, b, c, mu)
                            g = self.grading[c]
                            lhs = self.braid(one(c), zw) @ cat.tensor(s, cat.identity(zw))
                            rhs = cat.tensor(cat.identity(self.act_word(g, zw)), s) @ self.braid(ab, zw)
                            nat1.record(cat.equal(lhs, rhs), (a, b, c, mu, z))
                            gz = self.grading[z]
                            lhs = self.braid(zw, one(c)) @ cat.tensor(cat.identity(zw), s)
                            rhs = cat.tensor(self.act(gz, s), cat.identity(zw)) @ self.braid(zw, ab)
                            nat2.record(cat.equal(lhs, rhs), (z, a, b, c, mu))
                            hz = self.grading[z]
                            lhs = self.braid_minus(one(c), zw) @ cat.tensor(s, cat.identity(zw))
                            rhs = cat.tensor(cat.identity(zw), self.act(grp.inv(hz), s)) @ self.braid_minus(ab, zw)
                            mnat.record(cat.equal(lhs, rhs), (a, b, c, mu, z))
                    # Yang-Baxter
                    ga = self.grading[a]
                    gb = self.grading[b]
                    x_, y_, z_ = one(a), one(b), zw
                    gy = self.act_word(ga, y_)
                    gz_ = self.act_word(ga, z_)
                    lhs = (
                        cat.tensor(self.braid(gy, gz_), cat.identity(x_))
                        @ cat.tensor(cat.identity(gy), self.braid(x_, z_))
                        @ cat.tensor(self.braid(x_, y_), cat.identity(z_))
                    )
                    hz = self.act_word(gb, z_)
                    ghz = self.act_word(grp.mul(ga, gb), z_)
                    rhs = (
                        cat.tensor(cat.identity(ghz), self.braid(x_, y_))
                        @ cat.tensor(self.braid(x_, hz), cat.identity(y_))
                        @ cat.tensor(cat.identity(x_), self.braid(y_, z_))
                    )
                    ybe.record(cat.equal(lhs, rhs), (a, b, z))
        return {
            t.check_id: t.result()
            for t in (nat1, nat2, cov, br1, br2, ybe, mnat, mcov, mbr1, mbr2, opp)
        }

    def _vertex_map(self, a: str, b: str, c: str, mu: int) -> Mor:
        """The coordinate functional of the vertex ``(a, b -> c, mu)``, as ``a b -> c``."""
        cat = self.cat
        src = cat.word(a, b)
        dst = cat.word(c)
        sb = cat.basis(src, c)
        row = [cat.one if t[3] == mu else cat.zero for t in sb]
        return Mor(cat, src, dst, {c: Mat(1, len(sb), [row])})


def _diag(vals: Sequence[Any], field) -> Mat:
    n = len(vals)
    return Mat(n, n, [[vals[i] if i == j else field.zero for j in range(n)] for i in range(n)])


def _as_word(cat: SkeletalCategory, x) -> Word:
    if isinstance(x, str):
        return (cat.simple(x),)
    if isinstance(x, Obj):
        return (x,)
    return tuple(cat.simple(y) if isinstance(y, str) else y for y in x)
