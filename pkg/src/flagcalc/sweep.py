"""Exhaustive checks of the product formula and of Levi descent."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import ParabolicSubset, RootSystem
from .cone import check_budget, enumerate_levi_movable
from .levi import _descent
from .schubert import (
    all_parabolics, codim_conditions, tuples_with_codim, verify_product_formula,
)
from .weyl import enumerate_min_reps

__all__ = ["SweepSummary", "parabolic_chains", "sweep_levi_descent", "sweep_product_formula"]


@dataclass
class SweepSummary:
    group: str
    check: str
    s: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        return f"{self.check}: checked {self.checked} tuples, {len(self.violations)} violations"

    def record(self) -> dict:
        return {
            "group": self.group,
            "check": self.check,
            "s": self.s,
            "checked": self.checked,
            "violations": len(self.violations),
            "examples": self.violations[:5],
        }


def parabolic_chains(system: RootSystem, strict: bool = True) -> list[tuple[ParabolicSubset, ParabolicSubset]]:
    """Pairs ``Delta(P) <= Delta(Q)`` in canonical order."""
    ps = all_parabolics(system)
    return [
        (P, Q) for P in ps for Q in ps
        if P.issubset(Q) and not (strict and P == Q)
    ]


def _sweep_budget(system: RootSystem, s: int, chains, budget: int | None) -> None:
    check_budget(
        sum(len(enumerate_min_reps(system, P)) ** s for P, _ in chains), budget
    )


def sweep_product_formula(system: RootSystem, s: int = 3, budget: int | None = None,
                          strict: bool = True) -> SweepSummary:
    """``c_w = c_u c_v`` for every chain and every tuple meeting both conditions."""
    chains = parabolic_chains(system, strict)
    _sweep_budget(system, s, chains, budget)
    summary = SweepSummary(system.label, "product-formula", s)
    for P, Q in chains:
        for tup in tuples_with_codim(system, P, s):
            _, u_ok, _ = codim_conditions(tup, P, Q)
            if not u_ok:
                continue
            report = verify_product_formula(tup, P, Q)
            summary.checked += 1
            if not (report.holds and report.v_codim_ok):
                summary.violations.append(report.record())
    return summary


def sweep_levi_descent(system: RootSystem, s: int = 3, budget: int | None = None,
                       strict: bool = True) -> SweepSummary:
    """Every movable tuple has movable parts and ``c_w = c_u c_v > 0``."""
    chains = parabolic_chains(system, strict)
    _sweep_budget(system, s, chains, budget)
    summary = SweepSummary(system.label, "levi-descent", s)
    movable: dict[ParabolicSubset, list] = {}
    for P, Q in chains:
        if P not in movable:
            movable[P] = enumerate_levi_movable(system, P, s, budget=budget)
        for tup, _ in movable[P]:
            report = _descent(tup, P, Q)
            summary.checked += 1
            if not report.descent_holds:
                summary.violations.append(report.record())
    return summary
