"""Regenerate the catalog JSON files.

Entries are assembled here from their defining tables, validated, and
written in the ordinary instance format; the package only ever reads
them back through :mod:`gxinduce.io`.  Expected values that come from
fusion arithmetic are computed here with ``hom_dim``; sector inventories
and mixed hom dimensions are written by hand.

    python -m gxinduce.catalog.build [--check]
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..fusion import FusionRing, Mor, SkeletalCategory
from ..gcrossed import FiniteGroup, GCrossedStructure
from ..induction import InductionSetting, hom_dim
from ..io import Instance, Setting, dumps, encode, validate_instance
from ..kernel import ExactField, Mat, Scalar
from ..qsystem import EquivariantQSystem, group_qsystem, trivial_qsystem

DATA = Path(__file__).with_name("data")


def _group_ring(labels: list[str], add) -> FusionRing:
    N = {}
    for a in labels:
        for b in labels:
            N[(a, b, add(a, b))] = 1
    return FusionRing(labels, labels[0], N)


def _all_ones_F(ring: FusionRing) -> dict:
    tmp = SkeletalCategory.__new__(SkeletalCategory)
    tmp.ring = ring
    return {key: [[1]] for key in SkeletalCategory._admissible_quads(tmp)}


def _diag_z(cat: SkeletalCategory, theta_word, signs: dict) -> Mor:
    one = cat.one
    return Mor(cat, theta_word, theta_word, {a: Mat(1, 1, [[one * s]]) for a, s in signs.items()})


def _setting(name: str, role: str, gx: GCrossedStructure, q, G: FiniteGroup, proj: dict, z: dict) -> Setting:
    eq = EquivariantQSystem(q, G, proj, z)
    return Setting(name, role, eq, InductionSetting(name, gx, eq) if role == "induction" else None)


def _trivial_setting(cat, gx, G, proj) -> Setting:
    q = trivial_qsystem(cat)
    z = {g: cat.identity(q.word) for g in G.elements}
    return _setting("trivial", "induction", gx, q, G, proj, z)


def _hom_table(S: InductionSetting, mixed: list[tuple[str, str, str, int]]) -> list[dict]:
    cat, gx = S.cat, S.gx
    rows = []
    for g in S.group.elements:
        labs = [a for a in cat.labels if gx.degree(a) == S.proj(g)]
        for lam in labs:
            for mu in labs:
                rows.append({"chirality": "+", "g": g, "lambda": lam, "mu": mu, "dim": hom_dim(S, lam, mu), "source": "fusion"})
    for lam in cat.labels:
        for mu in cat.labels:
            if gx.degree(lam) == gx.degree(mu):
                rows.append({"chirality": "-", "g": None, "lambda": lam, "mu": mu, "dim": hom_dim(S, lam, mu), "source": "fusion"})
    for g, lam, mu, d in mixed:
        rows.append({"chirality": "mixed", "g": g, "lambda": lam, "mu": mu, "dim": d, "source": "hand"})
    return rows


def build_vec_z2() -> Instance:
    n = 8
    labels = ["1", "j"]
    ring = _group_ring(labels, lambda a, b: "1" if a == b else "j")
    cat = SkeletalCategory(ring, _all_ones_F(ring), ExactField(n), dims={"1": 1, "j": 1})
    G = FiniteGroup.trivial()
    R = {(a, b, c): [[1]] for a in labels for b in labels for c, _ in ring.products(a, b)}
    gx = GCrossedStructure(cat, G, {a: "e" for a in labels}, R=R)
    proj = {"e": "e"}
    triv = _trivial_setting(cat, gx, G, proj)
    q = group_qsystem(cat, ["1", "j"], Scalar.sqrt2(n))
    alg = _setting("algebra_1j", "induction", gx, q, G, proj, {"e": cat.identity(q.word)})
    expected = {
        "rank": 2,
        "muger_center": ["1", "j"],
        "settings": {
            "trivial": {
                "commutative": True,
                "hom_dims": _hom_table(triv.induction, [("e", "1", "1", 1), ("e", "j", "j", 1), ("e", "1", "j", 0)]),
                "sectors": {"e": {"count": 2, "sigma": ["1", "j"]}},
            },
            "algebra_1j": {
                "commutative": True,
                "hom_dims": _hom_table(alg.induction, [("e", "1", "1", 1), ("e", "j", "1", 1), ("e", "j", "j", 1)]),
                "sectors": {"e": {"count": 1, "sigma": ["1+j"]}},
            },
        },
        "notes": [
            "symmetric braiding, every R-block 1, so every monodromy is trivial",
            "1+j with trivial braiding is a commutative Q-system; its only local module is the algebra itself",
            "mixed hom dimensions: alpha^+ and alpha^- coincide for a symmetric braiding",
        ],
    }
    return Instance("vec_z2", "Vec(Z2) with the trivial symmetric braiding.", cat, gx, [triv, alg], expected)


def build_toric_z2() -> Instance:
    n = 8
    labels = ["1", "e", "m", "f"]
    vec = {"1": (0, 0), "e": (1, 0), "m": (0, 1), "f": (1, 1)}
    inv = {v: k for k, v in vec.items()}

    def add(a, b):
        return inv[((vec[a][0] + vec[b][0]) % 2, (vec[a][1] + vec[b][1]) % 2)]

    ring = _group_ring(labels, add)
    cat = SkeletalCategory(ring, _all_ones_F(ring), ExactField(n), dims={a: 1 for a in labels})
    Gp = FiniteGroup.trivial()
    R = {(a, b, add(a, b)): [[(-1) ** (vec[a][1] * vec[b][0])]] for a in labels for b in labels}
    gx = GCrossedStructure(cat, Gp, {a: "e" for a in labels}, R=R)
    G = FiniteGroup.cyclic(2, ["e", "g"])
    proj = {"e": "e", "g": "e"}
    triv = _trivial_setting(cat, gx, G, proj)
    q = group_qsystem(cat, ["1", "e"], Scalar.sqrt2(n))
    z = {"e": cat.identity(q.word), "g": _diag_z(cat, q.word, {"1": 1, "e": -1})}
    cond = _setting("condensed", "induction", gx, q, G, proj, z)
    expected = {
        "rank": 4,
        "muger_center": ["1"],
        "settings": {
            "trivial": {
                "commutative": True,
                "hom_dims": _hom_table(triv.induction, [("e", "m", "m", 1), ("g", "m", "m", 1), ("g", "m", "f", 0)]),
                "sectors": {
                    "e": {"count": 4, "sigma": ["1", "e", "m", "f"]},
                    "g": {"count": 4, "sigma": ["1", "e", "m", "f"]},
                },
            },
            "condensed": {
                "commutative": True,
                "hom_dims": _hom_table(
                    cond.induction,
                    [
                        ("e", "1", "1", 1),
                        ("e", "1", "e", 1),
                        ("e", "m", "m", 0),
                        ("e", "m", "f", 0),
                        ("g", "m", "m", 1),
                        ("g", "m", "f", 1),
                        ("g", "f", "m", 1),
                    ],
                ),
                "sectors": {
                    "e": {"count": 1, "sigma": ["1+e"]},
                    "g": {"count": 1, "sigma": ["m+f"]},
                },
            },
        },
        "notes": [
            "R^{ab} = (-1)^{a_m b_e} with e = (1,0), m = (0,1): R^{em} = 1, R^{me} = -1",
            "theta = 1+e condenses the boson e; z_g = diag(1, -1) is the sign character",
            "untwisted: only the vacuum survives, m and f are confined (-1 monodromy with e)",
            "g-twisted: z_g flips the sign seen by m, so alpha^{g+}_m and alpha^-_m share the defect",
            "the defect's underlying object is m+f; its presentation is lambda = mu = m, with f isomorphic",
        ],
    }
    return Instance("toric_z2", "Toric code with the e-condensing Q-system and a Z2 lift.", cat, gx, [cond, triv], expected)


def build_ising_crossed() -> Instance:
    n = 16
    labels = ["1", "s", "p"]
    N = {}
    for a in labels:
        N[("1", a, a)] = 1
        N[(a, "1", a)] = 1
    for key in [("s", "s", "1"), ("s", "s", "p"), ("s", "p", "s"), ("p", "s", "s"), ("p", "p", "1")]:
        N[key] = 1
    ring = FusionRing(labels, "1", N)
    r2 = Scalar.sqrt2(n)
    F = _all_ones_F(ring)
    h = 1 / r2
    F[("s", "s", "s", "s")] = [[h, h], [h, -h]]
    F[("p", "s", "p", "s")] = [[-1]]
    F[("s", "p", "s", "p")] = [[-1]]
    vn = {("s", "s", "1"): [r2], ("s", "s", "p"): [r2]}
    cat = SkeletalCategory(ring, F, ExactField(n), dims={"1": 1, "s": r2, "p": 1}, vertex_norms=vn)
    G = FiniteGroup.cyclic(2, ["e", "g"])
    grading = {"1": "e", "p": "e", "s": "g"}
    R = {(a, b, c): [[1]] for a in labels for b in labels for c, _ in ring.products(a, b)}
    i = Scalar.i(n)
    R[("s", "s", "1")] = [[Scalar.zeta(-1, n)]]
    R[("s", "s", "p")] = [[Scalar.zeta(3, n)]]
    R[("s", "p", "s")] = [[-i]]
    R[("p", "s", "s")] = [[-i]]
    R[("p", "p", "1")] = [[-1]]
    gx = GCrossedStructure(cat, G, grading, R=R)
    proj = {"e": "e", "g": "g"}
    triv = _trivial_setting(cat, gx, G, proj)
    q = group_qsystem(cat, ["1", "p"], r2)
    psi = _setting("psi_algebra", "qsystem", gx, q, G, proj, {g: cat.identity(q.word) for g in G.elements})
    expected = {
        "rank": 3,
        "muger_center": ["1", "p"],
        "settings": {
            "trivial": {
                "commutative": True,
                "hom_dims": _hom_table(triv.induction, [("e", "1", "1", 1), ("e", "p", "p", 1), ("g", "s", "s", 1)]),
                "sectors": {
                    "e": {"count": 2, "sigma": ["1", "p"]},
                    "g": {"count": 1, "sigma": ["s"]},
                },
            },
            "psi_algebra": {"commutative": False},
        },
        "notes": [
            "Ising with sigma placed in the nontrivial degree of Z2 and trivial action",
            "degree-e part {1, psi} is sVec: psi is a fermion, so the degree-e Muger center is {1, psi}",
            "1+psi is a Q-system but not commutative since c(psi, psi) = -1",
            "trivial theta: every induced sector is lambda itself",
        ],
    }
    return Instance("ising_crossed", "Ising as a Z2-crossed braided category (sigma odd).", cat, gx, [triv, psi], expected)


BUILDERS = {
    "vec_z2": build_vec_z2,
    "toric_z2": build_toric_z2,
    "ising_crossed": build_ising_crossed,
}


def render(name: str) -> str:
    inst = BUILDERS[name]()
    rep = validate_instance(inst)
    if not rep.passed:
        raise SystemExit(f"{name} does not validate:\n{rep.summary()}")
    return dumps(encode(inst))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="regenerate catalog data files")
    ap.add_argument("--check", action="store_true", help="only compare with the files on disk")
    args = ap.parse_args(argv)
    status = 0
    for name in BUILDERS:
        text = render(name)
        path = DATA / f"{name}.json"
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                print(f"{name}: out of date")
                status = 1
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    return status


if __name__ == "__main__":
    sys.exit(main())
