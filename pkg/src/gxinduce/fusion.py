"""Skeletal unitary fusion categories and their morphism calculus.

Objects are words of :class:`Obj` (finite direct sums of simples).  A
morphism ``f: W -> V`` is stored blockwise: for each simple ``c`` a matrix
from the canonical basis of ``Hom(c, W)`` to that of ``Hom(c, V)``.  The
canonical basis is the right-leaning splitting tree
``x1 (x2 (... xn))``; other bracketings are reached by F-moves.

Metric conventions.  Each object summand carries a positive weight and
each trivalent vertex a positive norm; the norm of a tree basis vector is
the product of its leaf weights and vertex norms, and distinct tree basis
vectors are orthogonal.  Adjoints are taken with respect to this diagonal
metric, which lets normalisations like ``w*w = sqrt(d)`` live in a
cyclotomic field even when ``d**(1/4)`` does not.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

from .kernel import Field, Mat, inverse
from .reports import CheckReport, Tally

__all__ = [
    "Obj",
    "Word",
    "FusionRing",
    "FBlock",
    "SkeletalCategory",
    "Mor",
    "FusionError",
    "canonical_shape",
]


class FusionError(ValueError):
    """Malformed fusion data or an ill-typed morphism operation."""


@dataclass(frozen=True)
class Obj:
    """A direct sum of simples; ``terms`` are ``(label, weight)`` pairs.

    Repeated labels are distinct copies.  Order matters: it fixes the
    coordinates of every hom space involving the object.
    """

    terms: tuple[tuple[str, Any], ...]

    @classmethod
    def simple(cls, label: str, one: Any) -> "Obj":
        return cls(((label, one),))

    @classmethod
    def of(cls, labels: Iterable[str], weight: Any) -> "Obj":
        return cls(tuple((a, weight) for a in labels))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.terms)

    def mult(self, label: str) -> int:
        return sum(1 for a, _ in self.terms if a == label)

    def is_simple(self) -> bool:
        return len(self.terms) == 1

    def relabel(self, mapping: Mapping[str, str]) -> "Obj":
        return Obj(tuple((mapping[a], w) for a, w in self.terms))

    def __str__(self) -> str:
        parts = []
        for a, w in self.terms:
            parts.append(a if w == 1 else f"{a}[{w}]")
        return "+".join(parts) if parts else "0"


Word = tuple  # tuple[Obj, ...]
Shape = Union[int, tuple]


def canonical_shape(n: int, start: int = 0) -> Shape:
    """Right-leaning bracketing of leaves ``start .. start+n-1``."""
    if n <= 0:
        raise ValueError("shape needs at least one leaf")
    if n == 1:
        return start
    return (start, canonical_shape(n - 1, start + 1))


def _root(tree) -> str:
    return tree[1] if len(tree) == 2 else tree[2]


def _normalize_paths(shape: Shape) -> list[tuple[int, ...]]:
    """Rotation sites turning ``shape`` into the right-leaning one."""
    paths: list[tuple[int, ...]] = []

    def walk(s: Shape, path: tuple[int, ...]) -> Shape:
        while True:
            if isinstance(s, int):
                return s
            left, right = s
            if isinstance(left, int):
                return (left, walk(right, path + (1,)))
            a, b = left
            paths.append(path)
            s = (a, (b, right))

    walk(shape, ())
    return paths


def _get(tree, path):
    for step in path:
        tree = tree[step]
    return tree


def _put(tree, path, new):
    if not path:
        return new
    step = path[0]
    items = list(tree)
    items[step] = _put(tree[step], path[1:], new)
    return tuple(items)


class FusionRing:
    """Labels, unit, duals and fusion multiplicities ``N[a, b, c]``."""

    def __init__(self, labels: Sequence[str], unit: str, N: Mapping[tuple[str, str, str], int], dual: Optional[Mapping[str, str]] = None) -> None:
        self.labels = tuple(labels)
        if unit not in self.labels:
            raise FusionError(f"unit {unit!r} is not a label")
        self.unit = unit
        self._order = {a: i for i, a in enumerate(self.labels)}
        self.N = {k: int(v) for k, v in N.items() if v}
        for (a, b, c) in self.N:
            for x in (a, b, c):
                if x not in self._order:
                    raise FusionError(f"unknown label {x!r} in fusion rules")
        prods: dict[tuple[str, str], list[tuple[str, int]]] = defaultdict(list)
        for (a, b, c), n in sorted(self.N.items(), key=lambda kv: self._order[kv[0][2]]):
            prods[(a, b)].append((c, n))
        self._prods = dict(prods)
        if dual is None:
            dual = {}
            for a in self.labels:
                for b in self.labels:
                    if self.Nabc(a, b, unit):
                        dual[a] = b
        self.dual = dict(dual)

    def Nabc(self, a: str, b: str, c: str) -> int:
        return self.N.get((a, b, c), 0)

    def products(self, a: str, b: str) -> list[tuple[str, int]]:
        return self._prods.get((a, b), [])

    def order(self, a: str) -> int:
        return self._order[a]

    def check(self) -> CheckReport:
        rep = CheckReport("fusion_ring")
        unit_t = Tally("unit")
        for a in self.labels:
            ok = self.products(self.unit, a) == [(a, 1)] and self.products(a, self.unit) == [(a, 1)]
            unit_t.record(ok, (a,))
        rep.add(unit_t.result())
        dual_t = Tally("duality")
        for a in self.labels:
            b = self.dual.get(a)
            ok = b is not None and self.Nabc(a, b, self.unit) == 1 and self.Nabc(b, a, self.unit) == 1
            ok = ok and sum(self.Nabc(a, x, self.unit) for x in self.labels) == 1
            dual_t.record(ok, (a,))
        rep.add(dual_t.result())
        assoc = Tally("associativity")
        for a in self.labels:
            for b in self.labels:
                for c in self.labels:
                    for d in self.labels:
                        lhs = sum(n * self.Nabc(e, c, d) for e, n in self.products(a, b))
                        rhs = sum(n * self.Nabc(a, f, d) for f, n in self.products(b, c))
                        assoc.record(lhs == rhs, (a, b, c, d))
        rep.add(assoc.result())
        return rep


@dataclass
class FBlock:
    """``F^{abc}_d``: left basis ``(e, mu, nu)`` rows, right basis ``(f, kappa, lam)`` columns.

    A left tree ``((a b)_e c)_d`` equals ``sum_j mat[i, j]`` times the
    right tree ``(a (b c)_f)_d``.
    """

    left: tuple[tuple[str, int, int], ...]
    right: tuple[tuple[str, int, int], ...]
    mat: Mat


class SkeletalCategory:
    """A unitary fusion category given by F-symbols over a field."""

    def __init__(
        self,
        ring: FusionRing,
        F: Mapping[tuple[str, str, str, str], Union[Mat, Sequence[Sequence[Any]]]],
        field: Field,
        dims: Optional[Mapping[str, Any]] = None,
        vertex_norms: Optional[Mapping[tuple[str, str, str], Sequence[Any]]] = None,
    ) -> None:
        self.ring = ring
        self.field = field
        self.labels = ring.labels
        self.unit = ring.unit
        self.F: dict[tuple[str, str, str, str], FBlock] = {}
        for key in self._admissible_quads():
            if key not in F:
                raise FusionError(f"missing F-block for {key}")
            left, right = self._f_indices(*key)
            raw = F[key]
            mat = raw if isinstance(raw, Mat) else Mat.from_rows(raw, len(right))
            mat = mat.map(field.coerce)
            if mat.shape != (len(left), len(right)):
                raise FusionError(f"F-block {key} has shape {mat.shape}, expected {(len(left), len(right))}")
            self.F[key] = FBlock(left, right, mat)
        for key in F:
            if key not in self.F:
                raise FusionError(f"F-block {key} is not admissible")
        self.dims = {a: field.coerce(v) for a, v in (dims or {}).items()}
        self.vertex_norms: dict[tuple[str, str, str], tuple[Any, ...]] = {}
        for (a, b, c), vals in (vertex_norms or {}).items():
            if len(vals) != ring.Nabc(a, b, c):
                raise FusionError(f"vertex norms for {(a, b, c)} do not match the multiplicity")
            self.vertex_norms[(a, b, c)] = tuple(field.coerce(v) for v in vals)
        self._cache: dict[Any, Any] = {}

    # -- basic data -------------------------------------------------------
    @property
    def one(self):
        return self.field.one

    @property
    def zero(self):
        return self.field.zero

    def simple(self, a: str) -> Obj:
        if a not in self.ring._order:
            raise FusionError(f"unknown label {a!r}")
        return Obj.simple(a, self.one)

    def obj(self, *labels: str, weight: Any = None) -> Obj:
        w = self.one if weight is None else self.field.coerce(weight)
        for a in labels:
            self.simple(a)
        return Obj.of(labels, w)

    def word(self, *items: Union[str, Obj]) -> Word:
        return tuple(self.simple(x) if isinstance(x, str) else x for x in items)

    def qdim(self, a: str):
        return self.dims[a]

    def fuse(self, a: str, b: str) -> Obj:
        """``a x b`` as a direct sum of simples (with multiplicity)."""
        labs: list[str] = []
        for c, n in self.ring.products(a, b):
            labs.extend([c] * n)
        return Obj.of(labs, self.one)

    def vertex_norm(self, a: str, b: str, c: str, mu: int):
        vals = self.vertex_norms.get((a, b, c))
        return vals[mu] if vals else self.one

    def _admissible_quads(self) -> Iterable[tuple[str, str, str, str]]:
        ring = self.ring
        seen = set()
        for a in ring.labels:
            for b in ring.labels:
                for e, _ in ring.products(a, b):
                    for c in ring.labels:
                        for d, _ in ring.products(e, c):
                            if (a, b, c, d) not in seen:
                                seen.add((a, b, c, d))
                                yield (a, b, c, d)

    def _f_indices(self, a: str, b: str, c: str, d: str):
        ring = self.ring
        left = []
        for e, n1 in ring.products(a, b):
            n2 = ring.Nabc(e, c, d)
            for mu in range(n1):
                for nu in range(n2):
                    left.append((e, mu, nu))
        right = []
        for f, n1 in ring.products(b, c):
            n2 = ring.Nabc(a, f, d)
            for ka in range(n1):
                for la in range(n2):
                    right.append((f, ka, la))
        return tuple(left), tuple(right)

    # -- tree bases -------------------------------------------------------
    @staticmethod
    def signature(word: Word) -> tuple[tuple[str, ...], ...]:
        return tuple(o.labels for o in word)

    def _enum(self, shape: Shape, sig) -> dict[str, list]:
        key = ("enum", shape, sig)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out: dict[str, list] = defaultdict(list)
        if isinstance(shape, int):
            for s, a in enumerate(sig[shape]):
                out[a].append((s, a))
        else:
            left = self._enum(shape[0], sig)
            right = self._enum(shape[1], sig)
            for x in self.labels:
                for tx in left.get(x, ()):
                    for y in self.labels:
                        ty_list = right.get(y)
                        if not ty_list:
                            continue
                        for c, n in self.ring.products(x, y):
                            for ty in ty_list:
                                for mu in range(n):
                                    out[c].append((tx, ty, c, mu))
            # deterministic order: by root, then the order generated above
        result = {c: out[c] for c in self.labels if c in out}
        self._cache[key] = result
        return result

    def basis(self, word: Word, c: str) -> list:
        """Canonical basis of ``Hom(c, word)`` (trees; the unit word has ``()``)."""
        return self._basis_sig(self.signature(word), c)

    def _basis_sig(self, sig, c: str) -> list:
        if not sig:
            return [()] if c == self.unit else []
        return self._enum(canonical_shape(len(sig)), sig).get(c, [])

    def _index_sig(self, sig, c: str) -> dict:
        key = ("index", sig, c)
        hit = self._cache.get(key)
        if hit is None:
            hit = {t: i for i, t in enumerate(self._basis_sig(sig, c))}
            self._cache[key] = hit
        return hit

    def hom_dim(self, c: str, word: Word) -> int:
        return len(self.basis(word, c))

    def roots(self, word: Word) -> list[str]:
        sig = self.signature(word)
        return [c for c in self.labels if self._basis_sig(sig, c)]

    def gram(self, word: Word, c: str) -> tuple:
        key = ("gram", word, c)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = []
        for t in self.basis(word, c):
            out.append(self._tree_norm(t, word))
        hit = tuple(out)
        self._cache[key] = hit
        return hit

    def _tree_norm(self, tree, word: Word):
        if tree == ():
            return self.one
        acc = self.one
        pos = [0]

        def walk(t):
            nonlocal acc
            if len(t) == 2:
                w = word[pos[0]].terms[t[0]][1]
                pos[0] += 1
                if w != 1:
                    acc = acc * w
                return
            walk(t[0])
            walk(t[1])
            n = self.vertex_norm(_root(t[0]), _root(t[1]), t[2], t[3])
            if n != 1:
                acc = acc * n

        walk(tree)
        return acc

    # -- F-moves ----------------------------------------------------------
    def _rotate(self, tree, path) -> list[tuple[Any, Any]]:
        node = _get(tree, path)
        left, cc, d, nu = node[0], node[1], node[2], node[3]
        if len(left) != 4:
            raise FusionError("rotation site is not of the form ((A B) C)")
        A, B, e, mu = left
        a, b, c = _root(A), _root(B), _root(cc)
        blk = self.F[(a, b, c, d)]
        i = blk.left.index((e, mu, nu))
        out = []
        row = blk.mat.data[i]
        for j, (f, ka, la) in enumerate(blk.right):
            coeff = row[j]
            if not self.field.is_zero(coeff):
                out.append((coeff, _put(tree, path, (A, (B, cc, f, ka), d, la))))
        return out

    def _to_canonical(self, sig, shape: Shape, trees: Sequence, c: str) -> Mat:
        """Matrix taking coordinates in ``trees`` (of ``shape``) to canonical ones."""
        paths = _normalize_paths(shape)
        index = self._index_sig(sig, c)
        cols = []
        for t in trees:
            vec = {t: self.one}
            for p in paths:
                new: dict = {}
                for tt, coeff in vec.items():
                    for k, nt in self._rotate(tt, p):
                        val = coeff * k
                        new[nt] = new[nt] + val if nt in new else val
                vec = new
            col = [self.zero] * len(index)
            for tt, coeff in vec.items():
                col[index[tt]] = coeff
            cols.append(col)
        return Mat(len(index), len(trees), [list(r) for r in zip(*cols)] if cols else [[] for _ in index])

    def conversion(self, word: Word, shape: Shape, c: str) -> tuple[list, Mat]:
        """Basis of ``Hom(c, word)`` in bracketing ``shape`` and the map to canonical coordinates."""
        sig = self.signature(word)
        key = ("conv", sig, shape, c)
        hit = self._cache.get(key)
        if hit is None:
            trees = self._enum(shape, sig).get(c, [])
            hit = (trees, self._to_canonical(sig, shape, trees, c))
            self._cache[key] = hit
        return hit

    def _split(self, sig1, sig2, c: str):
        """Trees ``(t1, t2, c, mu)`` for the split bracketing and conversion data."""
        key = ("split", sig1, sig2, c)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        elems = []
        trees = []
        for x in self.labels:
            b1 = self._basis_sig(sig1, x)
            if not b1:
                continue
            for y in self.labels:
                b2 = self._basis_sig(sig2, y)
                if not b2:
                    continue
                n = self.ring.Nabc(x, y, c)
                for mu in range(n):
                    for i1, t1 in enumerate(b1):
                        for i2, t2 in enumerate(b2):
                            elems.append((x, i1, y, i2, mu))
                            trees.append((t1, t2, c, mu))
        sig = sig1 + sig2
        if not sig1 or not sig2:
            # unit vertices are trivial: the split tree is the other factor
            index = self._index_sig(sig, c)
            m = Mat.zeros(len(index), len(elems), self.field)
            rows = [list(r) for r in m.data]
            for j, (x, i1, y, i2, mu) in enumerate(elems):
                i = i2 if not sig1 else i1
                rows[i][j] = self.one
            conv = Mat(len(index), len(elems), rows)
        else:
            shape = (canonical_shape(len(sig1)), canonical_shape(len(sig2), len(sig1)))
            conv = self._to_canonical(sig, shape, trees, c)
        inv = inverse(conv, self.field) if conv.rows else conv
        hit = (elems, conv, inv)
        self._cache[key] = hit
        return hit

    # -- morphisms --------------------------------------------------------
    def mor(self, src: Word, dst: Word, blocks: Mapping[str, Any]) -> "Mor":
        out = {}
        for c, m in blocks.items():
            if not isinstance(m, Mat):
                m = Mat.from_rows(m, self.hom_dim(c, src))
            out[c] = m.map(self.field.coerce)
        return Mor(self, tuple(src), tuple(dst), out)

    def identity(self, word: Word) -> "Mor":
        word = tuple(word)
        return Mor(self, word, word, {c: Mat.identity(self.hom_dim(c, word), self.field) for c in self.roots(word)})

    def zero_mor(self, src: Word, dst: Word) -> "Mor":
        return Mor(self, tuple(src), tuple(dst), {})

    def block(self, f: "Mor", c: str) -> Mat:
        m = f.blocks.get(c)
        if m is None:
            return Mat.zeros(self.hom_dim(c, f.dst), self.hom_dim(c, f.src), self.field)
        return m

    def compose(self, f: "Mor", g: "Mor") -> "Mor":
        """``f o g``."""
        if f.src != g.dst:
            raise FusionError(f"cannot compose: {_wstr(g.dst)} != {_wstr(f.src)}")
        out = {}
        for c, mf in f.blocks.items():
            mg = g.blocks.get(c)
            if mg is not None:
                out[c] = mf @ mg
        return Mor(self, g.src, f.dst, out)

    def tensor(self, f: "Mor", g: "Mor") -> "Mor":
        s1, s2 = self.signature(f.src), self.signature(g.src)
        d1, d2 = self.signature(f.dst), self.signature(g.dst)
        zero = self.zero
        out = {}
        for c in self.labels:
            e_in, _, inv_in = self._split(s1, s2, c)
            e_out, conv_out, _ = self._split(d1, d2, c)
            if not e_in or not e_out:
                continue
            by_key: dict[tuple, list[tuple[int, int, int]]] = defaultdict(list)
            for j, (x, i1, y, i2, mu) in enumerate(e_in):
                by_key[(x, y, mu)].append((j, i1, i2))
            rows = [[zero] * len(e_in) for _ in e_out]
            nonzero = False
            for i, (x, o1, y, o2, mu) in enumerate(e_out):
                fx = f.blocks.get(x)
                gy = g.blocks.get(y)
                if fx is None or gy is None:
                    continue
                frow, grow = fx.data[o1], gy.data[o2]
                for j, i1, i2 in by_key.get((x, y, mu), ()):
                    a = frow[i1]
                    if a:
                        b = grow[i2]
                        if b:
                            rows[i][j] = a * b
                            nonzero = True
            if not nonzero:
                continue
            mid = Mat(len(e_out), len(e_in), rows)
            out[c] = conv_out @ mid @ inv_in
        return Mor(self, f.src + g.src, f.dst + g.dst, out)

    def adjoint(self, f: "Mor") -> "Mor":
        out = {}
        for c, m in f.blocks.items():
            gs = self.gram(f.src, c)
            gd = self.gram(f.dst, c)
            rows = []
            for j in range(m.cols):
                row = []
                for i in range(m.rows):
                    v = m.data[i][j]
                    if v:
                        v = v.conjugate()
                        if gd[i] != gs[j]:
                            v = v * gd[i] / gs[j]
                    row.append(v)
                rows.append(row)
            out[c] = Mat(m.cols, m.rows, rows)
        return Mor(self, f.dst, f.src, out)

    def inverse(self, f: "Mor") -> "Mor":
        out = {}
        for c in set(self.roots(f.src)) | set(self.roots(f.dst)):
            m = self.block(f, c)
            out[c] = inverse(m, self.field)
        return Mor(self, f.dst, f.src, out)

    def add(self, f: "Mor", g: "Mor") -> "Mor":
        if (f.src, f.dst) != (g.src, g.dst):
            raise FusionError("cannot add morphisms of different types")
        out = dict(f.blocks)
        for c, m in g.blocks.items():
            out[c] = out[c] + m if c in out else m
        return Mor(self, f.src, f.dst, out)

    def scale(self, f: "Mor", k) -> "Mor":
        k = self.field.coerce(k)
        return Mor(self, f.src, f.dst, {c: m.scale(k) for c, m in f.blocks.items()})

    def equal(self, f: "Mor", g: "Mor") -> bool:
        if f.src != g.src or f.dst != g.dst:
            return False
        for c in set(f.blocks) | set(g.blocks):
            if not self.block(f, c).equals(self.block(g, c), self.field):
                return False
        return True

    def is_zero(self, f: "Mor") -> bool:
        return all(m.is_zero(self.field) for m in f.blocks.values())

    def coords(self, f: "Mor") -> list:
        """Flatten ``f`` into a coordinate vector over all root blocks."""
        out = []
        for c in self.labels:
            m = self.block(f, c)
            out.extend(m.entries())
        return out

    def hom_basis(self, src: Word, dst: Word) -> list["Mor"]:
        """Matrix-unit basis of ``Hom(src, dst)``."""
        out = []
        for c in self.labels:
            r, k = self.hom_dim(c, dst), self.hom_dim(c, src)
            for i in range(r):
                for j in range(k):
                    rows = [[self.one if (p, q) == (i, j) else self.zero for q in range(k)] for p in range(r)]
                    out.append(Mor(self, tuple(src), tuple(dst), {c: Mat(r, k, rows)}))
        return out

    def from_coords(self, src: Word, dst: Word, vec: Sequence[Any]) -> "Mor":
        out = {}
        pos = 0
        for c in self.labels:
            r, k = self.hom_dim(c, dst), self.hom_dim(c, src)
            n = r * k
            if n:
                chunk = vec[pos:pos + n]
                out[c] = Mat(r, k, [chunk[i * k:(i + 1) * k] for i in range(r)])
            pos += n
        return Mor(self, tuple(src), tuple(dst), out)

    def hom_space_dim(self, src: Word, dst: Word) -> int:
        return sum(self.hom_dim(c, src) * self.hom_dim(c, dst) for c in self.labels)

    # -- standard solutions --------------------------------------------------
    def standard_solution(self, a: str) -> tuple["Mor", "Mor"]:
        """``(R, Rbar)`` with ``R: 1 -> abar a`` and ``Rbar: 1 -> a abar``.

        ``R*R = Rbar*Rbar = d_a`` and both zigzag identities hold.  The
        vertex norm of ``abar a -> 1`` must make ``d_a / norm`` a rational
        square, which is how catalog gauges are chosen.
        """
        ab = self.ring.dual[a]
        R = self._unit_vertex(ab, a)
        Rb = self._unit_vertex(a, ab)
        ida = self.identity(self.word(a))
        zig = self.compose(self.tensor(self.adjoint(Rb), ida), self.tensor(ida, R))
        kappa = self.block(zig, a).data[0][0]
        Rb = self.scale(Rb, self.one / kappa.conjugate())
        return R, Rb

    def _unit_vertex(self, x: str, y: str) -> "Mor":
        n = self.vertex_norm(x, y, self.unit, 0)
        d = self.dims[x]
        ratio = d / n
        r = _rational_sqrt(ratio, self.field)
        if r is None:
            raise FusionError(f"standard solution for {x} needs sqrt({ratio}); pick vertex norms equal to d")
        word = self.word(x, y)
        return Mor(self, (), word, {self.unit: Mat(1, 1, [[self.field.coerce(r) if self.field.exact else complex(r)]])})

    # -- checks -----------------------------------------------------------
    def check_pentagon(self) -> CheckReport:
        """Pentagon, triangle (unit legs) and metric unitarity of every F-block."""
        rep = self.ring.check()
        rep.suite = "pentagon"
        field = self.field
        unit_t = Tally("unit_vertices")
        for a in self.labels:
            ok = self.vertex_norm(self.unit, a, a, 0) == 1 and self.vertex_norm(a, self.unit, a, 0) == 1
            unit_t.record(ok, (a,))
        rep.add(unit_t.result())
        tri = Tally("triangle")
        uni = Tally("F_unitary")
        for (a, b, c, d), blk in self.F.items():
            if self.unit in (a, b, c):
                ok = blk.mat.equals(Mat.identity(len(blk.left), field), field) and len(blk.left) == len(blk.right)
                tri.record(ok, (a, b, c, d))
            gl = [self.vertex_norm(a, b, e, mu) * self.vertex_norm(e, c, d, nu) for e, mu, nu in blk.left]
            gr = [self.vertex_norm(b, c, f, ka) * self.vertex_norm(a, f, d, la) for f, ka, la in blk.right]
            m = blk.mat
            ok = m.rows == m.cols
            if ok:
                prod = m @ Mat(m.cols, m.cols, [[gr[i] if i == j else field.zero for j in range(m.cols)] for i in range(m.cols)]) @ m.conj_transpose()
                target = Mat(m.rows, m.rows, [[gl[i] if i == j else field.zero for j in range(m.rows)] for i in range(m.rows)])
                ok = prod.equals(target, field)
            uni.record(ok, (a, b, c, d))
        rep.add(tri.result())
        rep.add(uni.result())
        pent = Tally("pentagon")
        for a in self.labels:
            for b in self.labels:
                for c in self.labels:
                    for d in self.labels:
                        word = self.word(a, b, c, d)
                        sig = self.signature(word)
                        start = (((0, 1), 2), 3)
                        for e in self.labels:
                            trees = self._enum(start, sig).get(e)
                            if not trees:
                                continue
                            ok = self._pentagon_case(sig, trees, e)
                            if not pent.record(ok, (a, b, c, d, e)):
                                break
        rep.add(pent.result())
        return rep

    def _pentagon_case(self, sig, trees, e) -> bool:
        path_a = [(), ()]
        path_b = [(0,), (), (1,)]
        index = self._index_sig(sig, e)
        results = []
        for paths in (path_a, path_b):
            cols = []
            for t in trees:
                vec = {t: self.one}
                for p in paths:
                    new: dict = {}
                    for tt, coeff in vec.items():
                        for k, nt in self._rotate(tt, p):
                            val = coeff * k
                            new[nt] = new[nt] + val if nt in new else val
                    vec = new
                col = [self.zero] * len(index)
                for tt, coeff in vec.items():
                    col[index[tt]] = col[index[tt]] + coeff
                cols.append(col)
            results.append(cols)
        fz = self.field
        return all(fz.equal(x, y) for ca, cb in zip(*results) for x, y in zip(ca, cb))


def _rational_sqrt(x, field: Field):
    """Square root of ``x`` when it is a rational square, else None."""
    from fractions import Fraction
    from math import isqrt

    if not field.exact:
        v = complex(x)
        if abs(v.imag) > 1e-12 or v.real <= 0:
            return None
        return v.real ** 0.5
    if not x.is_rational():
        return None
    q = x.rational()
    if q <= 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n != q.numerator or d * d != q.denominator:
        return None
    return Fraction(n, d)


def _wstr(word: Word) -> str:
    return "(" + ", ".join(str(o) for o in word) + ")"


class Mor:
    """A morphism between words, stored per root block."""

    __slots__ = ("cat", "src", "dst", "blocks")

    def __init__(self, cat: SkeletalCategory, src: Word, dst: Word, blocks: dict[str, Mat]) -> None:
        self.cat = cat
        self.src = src
        self.dst = dst
        self.blocks = blocks

    def __matmul__(self, other: "Mor") -> "Mor":
        return self.cat.compose(self, other)

    def __add__(self, other: "Mor") -> "Mor":
        return self.cat.add(self, other)

    def __sub__(self, other: "Mor") -> "Mor":
        return self.cat.add(self, self.cat.scale(other, -1))

    def __neg__(self) -> "Mor":
        return self.cat.scale(self, -1)

    def scaled(self, k) -> "Mor":
        return self.cat.scale(self, k)

    def dag(self) -> "Mor":
        return self.cat.adjoint(self)

    def tensor(self, other: "Mor") -> "Mor":
        return self.cat.tensor(self, other)

    def block(self, c: str) -> Mat:
        return self.cat.block(self, c)

    def equals(self, other: "Mor") -> bool:
        return self.cat.equal(self, other)

    def is_zero(self) -> bool:
        return self.cat.is_zero(self)

    def __repr__(self) -> str:
        return f"Mor({_wstr(self.src)} -> {_wstr(self.dst)}, blocks={sorted(self.blocks)})"
