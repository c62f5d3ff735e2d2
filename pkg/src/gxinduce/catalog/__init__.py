"""Built-in example instances, stored as ordinary instance files."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from ..induction import find_twisted_reps, hom_space, alpha_minus, alpha_plus
from ..io import Instance, load
from ..qsystem import check_qsystem
from ..reports import CheckReport, Tally

__all__ = ["CatalogEntry", "DATA", "list_entries", "get_entry", "entry_path", "self_test"]

DATA = Path(__file__).with_name("data")
CORE = ("vec_z2", "toric_z2", "ising_crossed")


@dataclass
class CatalogEntry:
    name: str
    instance: Instance
    self_test: CheckReport

    @property
    def cat(self):
        return self.instance.cat

    @property
    def gx(self):
        return self.instance.gx

    @property
    def settings(self):
        return self.instance.settings

    @property
    def expected(self) -> dict:
        return self.instance.expected


def list_entries(large: bool = False) -> list[str]:
    names = sorted(p.stem for p in DATA.glob("*.json"))
    if large:
        return names
    return [n for n in names if n in CORE]


def entry_path(name: str) -> Path:
    path = DATA / f"{name}.json"
    if not path.exists():
        raise KeyError(f"unknown catalog entry {name!r}; have {list_entries(large=True)}")
    return path


@lru_cache(maxsize=None)
def get_entry(name: str, approx: bool = False, tol: float = 1e-9, check: bool = True) -> CatalogEntry:
    """Load, validate and (with ``check``) reproduce the entry's expected table."""
    inst = load(entry_path(name), approx=approx, tol=tol)
    rep = self_test(inst) if check else CheckReport("self_test")
    return CatalogEntry(name, inst, rep)


def self_test(inst: Instance) -> CheckReport:
    """Compare the engine's output with the instance's ``expected`` table."""
    exp = inst.expected
    rep = CheckReport("self_test")
    cat, gx = inst.cat, inst.gx
    t = Tally("rank")
    t.record(exp.get("rank", len(cat.labels)) == len(cat.labels), (len(cat.labels),))
    rep.add(t.result())
    if "muger_center" in exp:
        t = Tally("muger_center")
        got = gx.muger_center()
        t.record(got == exp["muger_center"], (got,))
        rep.add(t.result())
    for sname, sexp in exp.get("settings", {}).items():
        st = inst.setting(sname)
        if "commutative" in sexp:
            t = Tally(f"{sname}.commutative")
            q = check_qsystem(st.eq.q, gx)
            got = q["commutative"].passed
            t.record(got == sexp["commutative"], (got,))
            rep.add(t.result())
        S = st.induction
        if S is None:
            continue
        if "hom_dims" in sexp:
            t = Tally(f"{sname}.hom_dims")
            for row in sexp["hom_dims"]:
                if row["chirality"] == "+":
                    A, B = alpha_plus(S, row["g"], row["lambda"]), alpha_plus(S, row["g"], row["mu"])
                elif row["chirality"] == "-":
                    A, B = alpha_minus(S, row["lambda"]), alpha_minus(S, row["mu"])
                else:
                    A, B = alpha_plus(S, row["g"], row["lambda"]), alpha_minus(S, row["mu"])
                got = len(hom_space(S, A, B))
                t.record(got == row["dim"], (row["chirality"], row["g"], row["lambda"], row["mu"]), f"solver {got}, table {row['dim']}")
            rep.add(t.result())
        for g, sec in sexp.get("sectors", {}).items():
            t = Tally(f"{sname}.sectors.{g}")
            mods = find_twisted_reps(S, g)
            sig = sorted("+".join(m.underlying.labels) for m in mods)
            t.record(len(mods) == sec["count"] and sig == sorted(sec["sigma"]), (g, len(mods), sig))
            rep.add(t.result())
    return rep
