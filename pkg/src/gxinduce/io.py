"""Instance files: canonical JSON for categories, crossed braidings and Q-system settings.

Exact scalars are written as ``{"conductor": n, "coeffs": [[p, q], ...]}``,
the rational coefficients of ``1, z, z^2, ...`` with ``z = exp(2 pi i / n)``
in the power basis of the field.  On input a plain integer or a string
``"p/q"`` is also accepted.  Matrices are lists of rows; morphisms of a
setting are ``{simple: matrix}`` since their source and target are fixed
by their role.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Any, Optional, Union

from .fusion import FusionRing, Mor, Obj, SkeletalCategory
from .gcrossed import FiniteGroup, GCrossedStructure
from .induction import InductionSetting
from .kernel import ApproxField, ExactField, Field, Mat, Scalar
from .qsystem import EquivariantQSystem, QSystem, check_equivariance, check_qsystem
from .reports import CheckReport, CheckResult

__all__ = [
    "FORMAT",
    "VERSION",
    "ParseError",
    "SchemaError",
    "ValidationError",
    "Instance",
    "Setting",
    "decode",
    "encode",
    "loads",
    "load",
    "dumps",
    "dump",
    "validate_instance",
]

FORMAT = "gxinduce-instance"
VERSION = 1


class ParseError(ValueError):
    """Malformed JSON; carries line and column."""

    def __init__(self, msg: str, line: int = 0, column: int = 0) -> None:
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(ValueError):
    """Well-formed JSON that does not describe an instance."""

    def __init__(self, path: str, msg: str) -> None:
        super().__init__(f"{path}: {msg}")
        self.path = path


class ValidationError(ValueError):
    """The data parses but violates an axiom."""

    def __init__(self, report: CheckReport) -> None:
        fails = report.failures()
        first = fails[0] if fails else None
        msg = f"{report.suite}: {first.check_id} failed, witness {first.witness}" if first else report.suite
        super().__init__(msg)
        self.report = report


@dataclass
class Setting:
    """A Q-system with G-equivariant structure; ``role`` is ``induction`` or ``qsystem``."""

    name: str
    role: str
    eq: EquivariantQSystem
    induction: Optional[InductionSetting] = None


@dataclass
class Instance:
    name: str
    description: str
    cat: SkeletalCategory
    gx: GCrossedStructure
    settings: list[Setting]
    expected: dict = field(default_factory=dict)

    def setting(self, name: Optional[str] = None) -> Setting:
        if name is None:
            for s in self.settings:
                if s.role == "induction":
                    return s
            raise KeyError("no induction setting")
        for s in self.settings:
            if s.name == name:
                return s
        raise KeyError(f"unknown setting {name!r}; have {[s.name for s in self.settings]}")


# -- scalars ------------------------------------------------------------------

def encode_scalar(x: Scalar, conductor: int) -> dict:
    if not isinstance(x, Scalar):
        raise TypeError("only exact scalars can be written")
    x = x.minimal_conductor().lift(conductor) if x.n != conductor else x
    coeffs = x.coeffs()
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return {"conductor": conductor, "coeffs": [[c.numerator, c.denominator] for c in coeffs]}


def _scalar_conductor(v: Any, path: str) -> int:
    if isinstance(v, dict):
        n = v.get("conductor")
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise SchemaError(path, "conductor must be a positive integer")
        return n
    return 1


def decode_scalar(v: Any, path: str) -> Scalar:
    if isinstance(v, bool):
        raise SchemaError(path, "booleans are not scalars")
    if isinstance(v, int):
        return Scalar.from_rational(v)
    if isinstance(v, str):
        try:
            return Scalar.from_rational(Fraction(v))
        except (ValueError, ZeroDivisionError):
            raise SchemaError(path, f"cannot parse {v!r} as a rational") from None
    if isinstance(v, dict):
        extra = set(v) - {"conductor", "coeffs"}
        if extra:
            raise SchemaError(path, f"unexpected keys {sorted(extra)}")
        n = _scalar_conductor(v, path)
        coeffs = v.get("coeffs")
        if not isinstance(coeffs, list):
            raise SchemaError(path, "coeffs must be a list of [p, q] pairs")
        fr = []
        for i, pq in enumerate(coeffs):
            ok = (
                isinstance(pq, list)
                and len(pq) == 2
                and all(isinstance(t, int) and not isinstance(t, bool) for t in pq)
                and pq[1] != 0
            )
            if not ok:
                raise SchemaError(f"{path}.coeffs[{i}]", "expected [numerator, nonzero denominator]")
            fr.append(Fraction(pq[0], pq[1]))
        return Scalar.from_coeffs(n, fr)
    raise SchemaError(path, f"cannot parse {v!r} as a scalar")


def _collect_conductors(v: Any, acc: set) -> None:
    if isinstance(v, dict):
        if "conductor" in v and "coeffs" in v:
            n = v["conductor"]
            if isinstance(n, int) and not isinstance(n, bool) and n > 0:
                acc.add(n)
            return
        for w in v.values():
            _collect_conductors(w, acc)
    elif isinstance(v, list):
        for w in v:
            _collect_conductors(w, acc)


# -- small helpers ---------------------------------------------------------

def _req(d: dict, key: str, path: str, typ=None):
    if not isinstance(d, dict):
        raise SchemaError(path, "expected an object")
    if key not in d:
        raise SchemaError(path, f"missing key {key!r}")
    v = d[key]
    if typ is not None and not isinstance(v, typ):
        raise SchemaError(f"{path}.{key}", f"expected {typ.__name__ if isinstance(typ, type) else typ}")
    return v


def _label(v: Any, labels: set, path: str) -> str:
    if not isinstance(v, str) or v not in labels:
        raise SchemaError(path, f"unknown label {v!r}")
    return v


def _element(v: Any, group: FiniteGroup, path: str) -> str:
    if not isinstance(v, str) or v not in group.elements:
        raise SchemaError(path, f"unknown group element {v!r}")
    return v


def _matrix(v: Any, path: str, fld: Field) -> list[list]:
    if not isinstance(v, list) or any(not isinstance(r, list) for r in v):
        raise SchemaError(path, "expected a list of rows")
    return [[fld.coerce(decode_scalar(x, f"{path}[{i}][{j}]")) for j, x in enumerate(r)] for i, r in enumerate(v)]


def _mat(rows: list[list], ncols: int, path: str) -> Mat:
    if any(len(r) != ncols for r in rows):
        raise SchemaError(path, f"rows must have length {ncols}")
    return Mat(len(rows), ncols, rows)


def _decode_group(v: Any, path: str) -> FiniteGroup:
    els = _req(v, "elements", path, list)
    if not els or any(not isinstance(e, str) for e in els) or len(set(els)) != len(els):
        raise SchemaError(f"{path}.elements", "expected distinct names")
    ident = _req(v, "identity", path, str)
    if ident not in els:
        raise SchemaError(f"{path}.identity", f"{ident!r} is not an element")
    table = _req(v, "table", path, list)
    if len(table) != len(els) or any(not isinstance(r, list) or len(r) != len(els) for r in table):
        raise SchemaError(f"{path}.table", "must be a square table over the elements")
    mul = {}
    for i, a in enumerate(els):
        for j, b in enumerate(table[i]):
            if b not in els:
                raise SchemaError(f"{path}.table[{i}][{j}]", f"unknown element {b!r}")
            mul[(a, els[j])] = b
    return FiniteGroup(els, mul, ident)


def _encode_group(G: FiniteGroup) -> dict:
    return {
        "elements": list(G.elements),
        "identity": G.identity,
        "table": [[G.mul(a, b) for b in G.elements] for a in G.elements],
    }


# -- decode ---------------------------------------------------------------

def decode(doc: Any, approx: bool = False, tol: float = 1e-9) -> Instance:
    """Build an instance from parsed JSON, without running validators."""
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    fmt = doc.get("format")
    if fmt != FORMAT:
        raise SchemaError("$.format", f"expected {FORMAT!r}")
    ver = doc.get("version")
    if ver != VERSION:
        raise SchemaError("$.version", f"unsupported version {ver!r}")
    name = _req(doc, "name", "$", str)
    description = doc.get("description", "")
    conds: set = set()
    _collect_conductors(doc, conds)
    declared = doc.get("field", {}).get("conductor") if isinstance(doc.get("field"), dict) else None
    conductor = 1
    for n in conds | ({declared} if isinstance(declared, int) else set()):
        conductor = conductor * n // gcd(conductor, n)
    if isinstance(declared, int) and declared != conductor:
        raise SchemaError("$.field.conductor", f"data needs conductor {conductor}, file declares {declared}")
    fld: Field = ApproxField(tol) if approx else ExactField(conductor)

    labels = _req(doc, "labels", "$", list)
    if not labels or any(not isinstance(a, str) for a in labels) or len(set(labels)) != len(labels):
        raise SchemaError("$.labels", "expected distinct label names")
    lset = set(labels)
    unit = _label(_req(doc, "unit", "$"), lset, "$.unit")
    N = {}
    for i, ent in enumerate(_req(doc, "fusion", "$", list)):
        p = f"$.fusion[{i}]"
        if not isinstance(ent, list) or len(ent) != 4:
            raise SchemaError(p, "expected [a, b, c, multiplicity]")
        a, b, c = (_label(ent[k], lset, f"{p}[{k}]") for k in range(3))
        if not isinstance(ent[3], int) or isinstance(ent[3], bool) or ent[3] < 1:
            raise SchemaError(f"{p}[3]", "multiplicity must be a positive integer")
        N[(a, b, c)] = ent[3]
    dual = None
    if "dual" in doc:
        dv = _req(doc, "dual", "$", dict)
        dual = {_label(k, lset, "$.dual"): _label(v, lset, f"$.dual.{k}") for k, v in dv.items()}
    ring = FusionRing(labels, unit, N, dual)

    dims = {}
    for a, v in _req(doc, "dims", "$", dict).items():
        dims[_label(a, lset, "$.dims")] = fld.coerce(decode_scalar(v, f"$.dims.{a}"))
    vnorms = {}
    for i, ent in enumerate(doc.get("vertex_norms", [])):
        p = f"$.vertex_norms[{i}]"
        vx = _req(ent, "vertex", p, list)
        key = tuple(_label(x, lset, f"{p}.vertex") for x in vx)
        vnorms[key] = [fld.coerce(decode_scalar(x, f"{p}.norms")) for x in _req(ent, "norms", p, list)]

    tmp = SkeletalCategory.__new__(SkeletalCategory)
    tmp.ring = ring
    F = {}
    for i, ent in enumerate(_req(doc, "F", "$", list)):
        p = f"$.F[{i}]"
        key = tuple(_label(x, lset, f"{p}.labels") for x in _req(ent, "labels", p, list))
        if len(key) != 4:
            raise SchemaError(f"{p}.labels", "expected four labels")
        if key in F:
            raise SchemaError(p, f"duplicate F-block {key}")
        rows = _matrix(_req(ent, "matrix", p), f"{p}.matrix", fld)
        try:
            _, right = SkeletalCategory._f_indices(tmp, *key)
        except Exception:
            raise SchemaError(p, f"F-block {key} is not admissible") from None
        F[key] = _mat(rows, len(right), f"{p}.matrix")
    try:
        cat = SkeletalCategory(ring, F, fld, dims=dims, vertex_norms=vnorms)
    except ValueError as exc:
        raise SchemaError("$.F", str(exc)) from None

    group = _decode_group(_req(doc, "group", "$"), "$.group")
    grading = {}
    for a, g in _req(doc, "grading", "$", dict).items():
        grading[_label(a, lset, "$.grading")] = _element(g, group, f"$.grading.{a}")
    act = doc.get("action", {})
    act_labels = {}
    for g, m in act.get("labels", {}).items():
        _element(g, group, "$.action.labels")
        act_labels[g] = {_label(a, lset, f"$.action.labels.{g}"): _label(b, lset, f"$.action.labels.{g}.{a}") for a, b in m.items()}
    act_vertex = {}
    for i, ent in enumerate(act.get("vertex", [])):
        p = f"$.action.vertex[{i}]"
        g = _element(_req(ent, "g", p), group, f"{p}.g")
        key = tuple(_label(x, lset, f"{p}.vertex") for x in _req(ent, "vertex", p, list))
        rows = _matrix(_req(ent, "matrix", p), f"{p}.matrix", fld)
        act_vertex[(g,) + key] = _mat(rows, ring.Nabc(*key), f"{p}.matrix")
    R = {}
    for i, ent in enumerate(_req(doc, "R", "$", list)):
        p = f"$.R[{i}]"
        key = tuple(_label(x, lset, f"{p}.vertex") for x in _req(ent, "vertex", p, list))
        if len(key) != 3:
            raise SchemaError(f"{p}.vertex", "expected three labels")
        rows = _matrix(_req(ent, "matrix", p), f"{p}.matrix", fld)
        R[key] = rows
    try:
        gx = GCrossedStructure(cat, group, grading, act_labels or None, act_vertex or None, R)
    except ValueError as exc:
        raise SchemaError("$.R", str(exc)) from None

    settings = [
        _decode_setting(ent, f"$.settings[{i}]", cat, gx, fld)
        for i, ent in enumerate(_req(doc, "settings", "$", list))
    ]
    names = [s.name for s in settings]
    if len(set(names)) != len(names):
        raise SchemaError("$.settings", "setting names must be distinct")
    expected = doc.get("expected", {})
    if not isinstance(expected, dict):
        raise SchemaError("$.expected", "expected an object")
    return Instance(name, description, cat, gx, settings, expected)


def _blocks(v: Any, path: str, cat: SkeletalCategory, src, dst, fld: Field) -> Mor:
    if not isinstance(v, dict):
        raise SchemaError(path, "expected {simple: matrix}")
    blocks = {}
    for c, m in v.items():
        _label(c, set(cat.labels), path)
        rows = _matrix(m, f"{path}.{c}", fld)
        if len(rows) != cat.hom_dim(c, dst):
            raise SchemaError(f"{path}.{c}", f"expected {cat.hom_dim(c, dst)} rows")
        blocks[c] = _mat(rows, cat.hom_dim(c, src), f"{path}.{c}")
    try:
        return Mor(cat, src, dst, blocks)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def _decode_setting(ent: Any, path: str, cat: SkeletalCategory, gx: GCrossedStructure, fld: Field) -> Setting:
    name = _req(ent, "name", path, str)
    role = _req(ent, "role", path, str)
    if role not in ("induction", "qsystem"):
        raise SchemaError(f"{path}.role", "expected 'induction' or 'qsystem'")
    G = _decode_group(_req(ent, "group", path), f"{path}.group")
    proj = {}
    for g, gp in _req(ent, "proj", path, dict).items():
        proj[_element(g, G, f"{path}.proj")] = _element(gp, gx.group, f"{path}.proj.{g}")
    if set(proj) != set(G.elements):
        raise SchemaError(f"{path}.proj", "must map every element of G")
    lset = set(cat.labels)
    terms = []
    for i, t in enumerate(_req(_req(ent, "theta", path, dict), "terms", f"{path}.theta", list)):
        if not isinstance(t, list) or len(t) != 2:
            raise SchemaError(f"{path}.theta.terms[{i}]", "expected [label, weight]")
        terms.append((_label(t[0], lset, f"{path}.theta.terms[{i}]"), fld.coerce(decode_scalar(t[1], f"{path}.theta.terms[{i}][1]"))))
    theta = Obj(tuple(terms))
    th = (theta,)
    w = _blocks(_req(ent, "w", path), f"{path}.w", cat, (), th, fld)
    x = _blocks(_req(ent, "x", path), f"{path}.x", cat, th, th + th, fld)
    sq = fld.coerce(decode_scalar(_req(ent, "sqrt_dtheta", path), f"{path}.sqrt_dtheta"))
    z = {}
    for g, blk in _req(ent, "z", path, dict).items():
        _element(g, G, f"{path}.z")
        z[g] = _blocks(blk, f"{path}.z.{g}", cat, gx.act_word(proj[g], th), th, fld)
    eq = EquivariantQSystem(QSystem(theta, w, x, sq), G, proj, z)
    ind = InductionSetting(name, gx, eq) if role == "induction" else None
    return Setting(name, role, eq, ind)


# -- encode -------------------------------------------------------------------

def encode(inst: Instance) -> dict:
    cat, gx = inst.cat, inst.gx
    fld = cat.field
    if not fld.exact:
        raise ValueError("approximate instances cannot be written")
    n = fld.conductor

    def s(x):
        return encode_scalar(x, n)

    def m(mat: Mat):
        return [[s(v) for v in row] for row in mat.data]

    ring = cat.ring
    doc: dict[str, Any] = {
        "format": FORMAT,
        "version": VERSION,
        "name": inst.name,
        "description": inst.description,
        "field": {"conductor": n},
        "labels": list(cat.labels),
        "unit": cat.unit,
        "dual": dict(ring.dual),
        "fusion": [[a, b, c, k] for (a, b, c), k in sorted(ring.N.items(), key=lambda kv: _lorder(cat, kv[0]))],
        "dims": {a: s(v) for a, v in cat.dims.items()},
        "vertex_norms": [
            {"vertex": list(key), "norms": [s(v) for v in vals]}
            for key, vals in sorted(cat.vertex_norms.items(), key=lambda kv: _lorder(cat, kv[0]))
        ],
        "F": [
            {"labels": list(key), "matrix": m(blk.mat)}
            for key, blk in sorted(cat.F.items(), key=lambda kv: _lorder(cat, kv[0]))
        ],
        "group": _encode_group(gx.group),
        "grading": dict(gx.grading),
        "action": {
            "labels": {g: dict(mp) for g, mp in gx.action_labels.items() if any(k != v for k, v in mp.items())},
            "vertex": [
                {"g": key[0], "vertex": list(key[1:]), "matrix": m(mat)}
                for key, mat in sorted(gx.action_vertex.items(), key=lambda kv: (gx.group.elements.index(kv[0][0]), _lorder(cat, kv[0][1:])))
            ],
        },
        "R": [
            {"vertex": list(key), "matrix": m(mat)}
            for key, mat in sorted(gx.R.items(), key=lambda kv: _lorder(cat, kv[0]))
        ],
        "settings": [_encode_setting(st, s, m) for st in inst.settings],
        "expected": inst.expected,
    }
    return doc


def _lorder(cat: SkeletalCategory, key: tuple) -> tuple:
    idx = {a: i for i, a in enumerate(cat.labels)}
    return tuple(idx[a] for a in key)


def _encode_setting(st: Setting, s, m) -> dict:
    eq = st.eq
    q = eq.q

    def blocks(f: Mor) -> dict:
        return {c: m(mat) for c, mat in f.blocks.items()}

    return {
        "name": st.name,
        "role": st.role,
        "group": _encode_group(eq.group),
        "proj": dict(eq.proj),
        "theta": {"terms": [[a, s(wt)] for a, wt in q.theta.terms]},
        "w": blocks(q.w),
        "x": blocks(q.x),
        "sqrt_dtheta": s(q.sqrt_dtheta),
        "z": {g: blocks(eq.z[g]) for g in eq.group.elements},
    }


# -- text -----------------------------------------------------------------------

def dumps(doc: Any) -> str:
    """Canonical text: sorted keys, one-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def validate_instance(inst: Instance) -> CheckReport:
    """Every structural validator; Q-system-only settings skip commutativity."""
    rep = CheckReport("validate")
    for st in inst.settings:
        rep.extend(_prefixed(st.eq.group.check(), f"{st.name}.group"))
    pent = inst.cat.check_pentagon()
    rep.extend(_prefixed(pent, "pentagon"))
    if not pent.passed:
        # everything downstream changes bases with F
        return rep
    _guarded(rep, "crossed", inst.gx.check_crossed_axioms)
    for st in inst.settings:
        _guarded(rep, f"{st.name}.qsystem", lambda: check_qsystem(st.eq.q, inst.gx, require_commutative=st.role == "induction"))
        _guarded(rep, f"{st.name}.equivariance", lambda: check_equivariance(st.eq, inst.gx))
    return rep


def _guarded(rep: CheckReport, prefix: str, run) -> None:
    try:
        rep.extend(_prefixed(run(), prefix))
    except (ArithmeticError, ValueError, KeyError) as exc:
        rep.add(CheckResult(f"{prefix}.evaluation", False, (type(exc).__name__,), str(exc)))


def _prefixed(rep: CheckReport, prefix: str) -> CheckReport:
    for r in rep.results:
        r.check_id = f"{prefix}.{r.check_id}"
    return rep


def loads(text: str, approx: bool = False, tol: float = 1e-9, validate: bool = True) -> Instance:
    inst = decode(parse_json(text), approx=approx, tol=tol)
    if validate:
        rep = validate_instance(inst)
        if not rep.passed:
            raise ValidationError(rep)
    return inst


def load(path: Union[str, Path], approx: bool = False, tol: float = 1e-9, validate: bool = True) -> Instance:
    return loads(Path(path).read_text(encoding="utf-8"), approx=approx, tol=tol, validate=validate)


def dump(inst: Instance, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(encode(inst)), encoding="utf-8")
