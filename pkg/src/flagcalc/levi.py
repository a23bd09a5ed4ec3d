"""Levi-movability decided numerically.

A tuple ``(w_1..w_s)`` in ``(W^P)^s`` with codimensions summing to
``dim G/P`` is reported movable when its top constant is nonzero and every
residue ``((sum_k chi_{w_k}) - chi_1)(x_i)`` vanishes for ``alpha_i`` outside
``Delta(P)``, where ``chi_w = rho - 2 rho^P + w^{-1} rho``.  The nonzero
constant together with the vanishing residues is taken as equivalent to
transversality at the base point; this is a numerical criterion, not a
geometric certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cartan import ParabolicSubset, RootSystem, Weight, pair, rho_P
from .errors import InvariantViolation, ValidationError
from .schubert import (
    QuotientFlag, TopConstantQuery, codim, quotient_flag, top_constant,
)
from .weyl import WeylElement, dim_flag_variety, factorize, format_word, is_min_rep

__all__ = [
    "LeviDescentReport", "LeviQuery", "LeviReport", "bk_residues", "chi",
    "chi_projection_identity", "converse_counterexamples", "is_levi_movable",
    "levi_from_parts", "verify_levi_descent",
]


def chi(w: WeylElement, P: ParabolicSubset) -> Weight:
    """The character ``rho - 2 rho^P + w^{-1} rho``."""
    if not is_min_rep(w, P):
        raise ValidationError(f"{format_word(w.word)} is not in W^P for P={P}")
    return _chi(w, P)


@lru_cache(maxsize=None)
def _chi(w: WeylElement, P: ParabolicSubset) -> Weight:
    system = w.system
    rho = system.rho
    return rho - 2 * rho_P(system, P) + w.inverse().apply_weight(rho)


@dataclass(frozen=True)
class LeviQuery:
    tuple: tuple[WeylElement, ...]
    P: ParabolicSubset

    def __post_init__(self):
        # same validation as a top-constant query
        TopConstantQuery(tuple(self.tuple), self.P)
        object.__setattr__(self, "tuple", tuple(self.tuple))

    @property
    def system(self) -> RootSystem:
        return self.tuple[0].system


def bk_residues(q: LeviQuery) -> dict[int, Fraction]:
    """Residue at each ``x_i`` with ``alpha_i`` outside ``Delta(P)`` (0-based keys)."""
    return _residues(q.tuple, q.P)


def _residues(ws: Sequence[WeylElement], P: ParabolicSubset) -> dict[int, Fraction]:
    system = ws[0].system
    total = _chi(WeylElement.identity(system), P) * -1
    for w in ws:
        total = total + _chi(w, P)
    xs = system.fundamental_coweights
    return {i: pair(total, xs[i]) for i in P.complement(system.rank)}


@dataclass(frozen=True)
class LeviReport:
    c: int
    residues: dict[int, Fraction]
    movable: bool

    def __post_init__(self):
        if self.movable != (self.c != 0 and not any(self.residues.values())):
            raise InvariantViolation("movable verdict inconsistent with c and residues")


def is_levi_movable(q: LeviQuery) -> LeviReport:
    c = top_constant(TopConstantQuery(q.tuple, q.P))
    res = bk_residues(q)
    return LeviReport(c, res, c != 0 and not any(res.values()))


def _report_or_none(ws: Sequence[WeylElement], P: ParabolicSubset) -> LeviReport | None:
    """Movability report, or None when the codimension condition fails."""
    system = ws[0].system
    if sum(codim(w, P) for w in ws) != dim_flag_variety(system, P):
        return None
    return is_levi_movable(LeviQuery(tuple(ws), P))


def _quotient_report(flag: QuotientFlag, vs: Sequence[WeylElement]) -> LeviReport | None:
    if flag.is_point:
        # Q/P is a point: the tuple of identities is trivially movable
        return LeviReport(1, {}, True)
    return _report_or_none([flag.transport(v) for v in vs], flag.P)


def format_residues(res: dict[int, Fraction]) -> dict[str, str]:
    return {f"x{i + 1}": str(r) for i, r in sorted(res.items())}


@dataclass(frozen=True)
class LeviDescentReport:
    system: RootSystem
    P: ParabolicSubset
    Q: ParabolicSubset
    tuple: tuple[WeylElement, ...]
    u_tuple: tuple[WeylElement, ...]
    v_tuple: tuple[WeylElement, ...]
    w_report: LeviReport
    u_report: LeviReport | None
    v_report: LeviReport | None

    @property
    def movable_w(self) -> bool:
        return self.w_report.movable

    @property
    def movable_u(self) -> bool:
        return self.u_report is not None and self.u_report.movable

    @property
    def movable_v(self) -> bool:
        return self.v_report is not None and self.v_report.movable

    @property
    def c_w(self) -> int:
        return self.w_report.c

    @property
    def c_u(self) -> int | None:
        return None if self.u_report is None else self.u_report.c

    @property
    def c_v(self) -> int | None:
        return None if self.v_report is None else self.v_report.c

    @property
    def descent_holds(self) -> bool:
        """Both parts movable and ``c_w = c_u c_v`` with all three positive."""
        return (
            self.movable_u and self.movable_v
            and self.c_w == self.c_u * self.c_v
            and self.c_w > 0 and self.c_u > 0 and self.c_v > 0
        )

    def record(self) -> dict:
        return {
            "group": self.system.label,
            "tuple": [format_word(w.word) for w in self.tuple],
            "P": str(self.P),
            "Q": str(self.Q),
            "c_w": self.c_w,
            "c_u": self.c_u,
            "c_v": self.c_v,
            "residues": format_residues(self.w_report.residues),
            "movable_w": self.movable_w,
            "movable_u": self.movable_u,
            "movable_v": self.movable_v,
            "indexing": "codim",
        }


def _descent(ws: Sequence[WeylElement], P: ParabolicSubset, Q: ParabolicSubset) -> LeviDescentReport:
    ws = tuple(ws)
    w_report = is_levi_movable(LeviQuery(ws, P))
    facts = [factorize(w, P, Q) for w in ws]
    us = tuple(f.u for f in facts)
    vs = tuple(f.v for f in facts)
    flag = quotient_flag(ws[0].system, P, Q)
    return LeviDescentReport(
        ws[0].system, P, Q, ws, us, vs,
        w_report, _report_or_none(us, Q), _quotient_report(flag, vs),
    )


def verify_levi_descent(ws: Sequence[WeylElement], P: ParabolicSubset,
                        Q: ParabolicSubset) -> LeviDescentReport:
    """
    For a movable tuple, check that the ``G/Q`` part and the ``Q/P`` part are
    movable too.  Non-movable input is rejected.
    """
    report = _descent(ws, P, Q)
    if not report.movable_w:
        raise ValidationError(
            "input tuple is not Levi-movable (c={}, residues {})".format(
                report.c_w, format_residues(report.w_report.residues))
        )
    return report


def levi_from_parts(ws: Sequence[WeylElement], P: ParabolicSubset,
                    Q: ParabolicSubset) -> tuple[bool, LeviDescentReport]:
    """
    Decide movability from the parts: the ``u``-tuple movable for ``Q``, the
    ``v``-tuple movable in ``Q/P``, and the residues of the full tuple zero.
    The verdict is cross-checked against :func:`is_levi_movable`.
    """
    report = _descent(ws, P, Q)
    verdict = (
        report.movable_u and report.movable_v
        and not any(report.w_report.residues.values())
    )
    if verdict != report.movable_w:
        raise InvariantViolation(
            f"verdict from parts ({verdict}) disagrees with direct verdict "
            f"({report.movable_w}) for {[format_word(w.word) for w in ws]}"
        )
    return verdict, report


def chi_projection_identity(w: WeylElement, P: ParabolicSubset, Q: ParabolicSubset) -> bool:
    """``chi^P_w(x_i) == chi^Q_u(x_i)`` for all ``alpha_i`` outside ``Delta(Q)``."""
    f = factorize(w, P, Q)
    system = w.system
    xs = system.fundamental_coweights
    cw, cu = chi(w, P), chi(f.u, Q)
    return all(pair(cw, xs[i]) == pair(cu, xs[i]) for i in Q.complement(system.rank))


def converse_counterexamples(system: RootSystem, s: int, P: ParabolicSubset,
                             Q: ParabolicSubset):
    """
    Tuples whose ``u``- and ``v``-parts are movable while the full tuple is
    not, i.e. witnesses that movability does not ascend from the parts.
    """
    from .schubert import tuples_with_codim

    for tup in tuples_with_codim(system, P, s):
        report = _descent(tup, P, Q)
        if report.movable_u and report.movable_v and not report.movable_w:
            yield report
