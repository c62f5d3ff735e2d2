"""Named theorem suites over an induction setting."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

from .induction import (
    InductionSetting,
    check_commutation,
    check_covariance,
    check_exchange,
    check_intertwiners,
    check_multiplicativity,
    check_reciprocity,
    check_relative_braiding,
    find_twisted_reps,
)
from .reports import CheckReport

__all__ = ["SUITES", "run_suite", "run_suites"]


def _reciprocity(S: InductionSetting) -> CheckReport:
    return check_reciprocity(S, {g: find_twisted_reps(S, g) for g in S.group.elements})


def _relative(S: InductionSetting) -> CheckReport:
    rep = check_relative_braiding(S, {g: find_twisted_reps(S, g) for g in S.group.elements})
    rep.extend(check_commutation(S))
    rep.extend(check_exchange(S))
    return rep


SUITES: dict[str, Callable[[InductionSetting], CheckReport]] = {
    "multiplicativity": check_multiplicativity,
    "covariance": check_covariance,
    "intertwiners": check_intertwiners,
    "reciprocity": _reciprocity,
    "relative-braiding": _relative,
}


def run_suite(S: InductionSetting, name: str) -> CheckReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    rep = SUITES[name](S)
    rep.suite = name
    return rep


def run_suites(S: InductionSetting, names: Optional[list[str]] = None) -> list[CheckReport]:
    """Run suites, in parallel up to ``GXI_THREADS``; results keep the requested order."""
    names = list(SUITES) if names is None else names
    try:
        n = max(1, int(os.environ.get("GXI_THREADS", "1")))
    except ValueError:
        n = 1
    if n == 1:
        return [run_suite(S, x) for x in names]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(lambda x: run_suite(S, x), names))
