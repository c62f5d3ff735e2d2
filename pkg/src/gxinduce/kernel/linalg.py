"""Dense matrices over an exact cyclotomic field or over complex floats.

Matrices never inspect their entries; every decision that depends on
whether an entry vanishes goes through a :class:`Field`.  The exact field
compares structurally, the approximate one uses an absolute tolerance.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, NamedTuple, Optional, Sequence

from .scalar import Scalar

__all__ = [
    "Field",
    "ExactField",
    "ApproxField",
    "Mat",
    "LinearSolution",
    "rank",
    "nullspace",
    "solve_linear",
    "inverse",
    "solve_rational",
]


class Field:
    """Arithmetic context: constants, coercion and zero tests."""

    exact: bool = True
    zero: Any
    one: Any

    def coerce(self, x) -> Any:
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        raise NotImplementedError

    def choose_pivot(self, candidates: Sequence[tuple[int, Any]]) -> Optional[int]:
        raise NotImplementedError

    def conj(self, x):
        return x.conjugate()

    def to_complex(self, x) -> complex:
        return complex(x)

    def equal(self, a, b) -> bool:
        return self.is_zero(a - b)


class ExactField(Field):
    """Q(zeta_n) with structural equality."""

    exact = True

    def __init__(self, conductor: int) -> None:
        self.conductor = conductor
        self.zero = Scalar.zero(conductor)
        self.one = Scalar.one(conductor)

    def coerce(self, x) -> Scalar:
        if isinstance(x, Scalar):
            if x.n == self.conductor:
                return x
            if self.conductor % x.n == 0:
                return x.lift(self.conductor)
            return x.minimal_conductor().lift(self.conductor)
        if isinstance(x, (int, Fraction)):
            return Scalar.from_rational(x, self.conductor)
        raise TypeError(f"cannot coerce {x!r} into Q(zeta_{self.conductor})")

    def is_zero(self, x) -> bool:
        return x.is_zero() if isinstance(x, Scalar) else x == 0

    def choose_pivot(self, candidates):
        best = None
        for pos, val in candidates:
            if not val.is_zero():
                # prefer rational pivots, they keep denominators small
                if val.is_rational():
                    return pos
                if best is None:
                    best = pos
        return best

    def to_complex(self, x) -> complex:
        return x.to_complex()

    def __repr__(self) -> str:
        return f"ExactField({self.conductor})"


class ApproxField(Field):
    """Complex floats with an absolute zero tolerance."""

    exact = False

    def __init__(self, tol: float = 1e-9) -> None:
        self.tol = tol
        self.zero = 0j
        self.one = 1 + 0j

    def coerce(self, x) -> complex:
        if isinstance(x, Scalar):
            return x.to_complex()
        return complex(x)

    def is_zero(self, x) -> bool:
        return abs(x) <= self.tol

    def choose_pivot(self, candidates):
        best, best_abs = None, self.tol
        for pos, val in candidates:
            a = abs(val)
            if a > best_abs:
                best, best_abs = pos, a
        return best

    def __repr__(self) -> str:
        return f"ApproxField(tol={self.tol})"


class Mat:
    """Immutable dense matrix; rows are tuples of field elements."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[Any]]) -> None:
        self.rows = rows
        self.cols = cols
        self.data = tuple(tuple(r) for r in data)
        if len(self.data) != rows or any(len(r) != cols for r in self.data):
            raise ValueError("matrix shape mismatch")

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Mat":
        z = field.zero
        return cls(rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int, field: Field) -> "Mat":
        z, o = field.zero, field.one
        return cls(n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "Mat":
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]):
        i, j = idx
        return self.data[i][j]

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0:
            return Mat(self.rows, other.cols, [[] for _ in range(self.rows)] if other.cols == 0 else [])
        ocols = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = []
        for row in self.data:
            nz = [(k, a) for k, a in enumerate(row) if a]
            new_row = []
            for col in ocols:
                acc = None
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = a * b if acc is None else acc + a * b
                new_row.append(acc if acc is not None else _zero_like(row, col))
            out.append(new_row)
        return Mat(self.rows, other.cols, out)

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols, [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c) -> "Mat":
        return Mat(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def map(self, fn: Callable[[Any], Any]) -> "Mat":
        return Mat(self.rows, self.cols, [[fn(a) for a in r] for r in self.data])

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)])

    def conj_transpose(self) -> "Mat":
        return self.transpose().map(lambda a: a.conjugate())

    def _same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def entries(self) -> Iterable[Any]:
        for r in self.data:
            yield from r

    def is_zero(self, field: Field) -> bool:
        return all(field.is_zero(a) for a in self.entries())

    def equals(self, other: "Mat", field: Field) -> bool:
        if self.shape != other.shape:
            return False
        return all(field.equal(a, b) for a, b in zip(self.entries(), other.entries()))

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols}, {[[str(a) for a in r] for r in self.data]})"


def _zero_like(row, col):
    for x in row:
        return x * 0
    for x in col:
        return x * 0
    return 0


def _rref(m: Mat, field: Field) -> tuple[list[list[Any]], list[int]]:
    a = [list(r) for r in m.data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r >= m.rows:
            break
        p = field.choose_pivot([(i, a[i][c]) for i in range(r, m.rows)])
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        inv = field.one / piv
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(m.rows):
            if i != r:
                f = a[i][c]
                if not field.is_zero(f):
                    row_r = a[r]
                    a[i] = [x - f * y if y else x for x, y in zip(a[i], row_r)]
                elif not field.exact:
                    a[i][c] = field.zero
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Mat, field: Field) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_rref(m, field)[1])


def nullspace(m: Mat, field: Field) -> list[list[Any]]:
    """Basis of {v : m v = 0}, as a list of column vectors."""
    if m.rows == 0:
        return [[field.one if i == j else field.zero for i in range(m.cols)] for j in range(m.cols)]
    a, pivots = _rref(m, field)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * m.cols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -a[i][f]
        basis.append(v)
    return basis


class LinearSolution(NamedTuple):
    """Result of :func:`solve_linear`.

    ``particular`` is None exactly when the system is inconsistent.
    """

    consistent: bool
    particular: Optional[list[Any]]
    kernel: list[list[Any]]


def solve_linear(a: Mat, b: Optional[Sequence[Any]], field: Field) -> LinearSolution:
    """Solve ``a x = b`` (``b`` None means homogeneous)."""
    kern = nullspace(a, field)
    if b is None:
        return LinearSolution(True, [field.zero] * a.cols, kern)
    if len(b) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    aug = Mat(a.rows, a.cols + 1, [list(r) + [bi] for r, bi in zip(a.data, b)])
    red, pivots = _rref(aug, field)
    if a.cols in pivots:
        return LinearSolution(False, None, kern)
    x = [field.zero] * a.cols
    for i, p in enumerate(pivots):
        x[p] = red[i][a.cols]
    return LinearSolution(True, x, kern)


def inverse(m: Mat, field: Field) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    if n == 0:
        return m
    aug = Mat(n, 2 * n, [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(m.data)])
    red, pivots = _rref(aug, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return Mat(n, n, [r[n:] for r in red[:n]])


def solve_rational(cols: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Solve over Q; ``cols`` are the column vectors.  None if inconsistent."""
    rows = len(rhs)
    n = len(cols)
    a = [[cols[j][i] for j in range(n)] + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(n + 1):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = a[i][n]
    return x
