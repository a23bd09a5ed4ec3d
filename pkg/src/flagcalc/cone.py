"""Face data of the tensor cone from Levi-movable tuples with constant 1.

Each descriptor records, for every ``alpha_i`` outside ``Delta(P)``, the
s-tuple of coweights ``w_k x_i``; the face is the zero set of
``lambda -> sum_k <lambda_k, w_k x_i>``.  Only zero sets are emitted: no
claim is made about which side of a hyperplane the cone lies on.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import Coweight, ParabolicSubset, RootSystem, Weight, pair
from .errors import BudgetExceeded, InvariantViolation, ValidationError
from .levi import LeviQuery, LeviReport, is_levi_movable
from .schubert import all_parabolics, tuples_with_codim
from .weyl import WeylElement, enumerate_min_reps, factorize, format_word, is_min_rep

__all__ = [
    "DEFAULT_BUDGET", "DominantWeightTuple", "FaceDescriptor",
    "check_face_containment", "enumerate_faces", "enumerate_levi_movable",
    "evaluate_functional", "face_functionals", "resolve_budget",
]

DEFAULT_BUDGET = 10 ** 7


def resolve_budget(budget: int | None = None) -> int:
    """Explicit budget, else ``$SCHUBERT_BUDGET``, else the default."""
    if budget is not None:
        return budget
    env = os.environ.get("SCHUBERT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"SCHUBERT_BUDGET={env!r} is not an integer") from None
    return DEFAULT_BUDGET


def check_budget(count: int, budget: int | None) -> None:
    limit = resolve_budget(budget)
    if count > limit:
        raise BudgetExceeded(count, limit)


@dataclass(frozen=True)
class DominantWeightTuple:
    weights: tuple[Weight, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        for k, lam in enumerate(self.weights):
            if not lam.is_dominant():
                raise ValidationError(f"weight {k + 1} is not dominant: {lam.coords}")


Functional = tuple[Coweight, ...]


def face_functionals(ws: Sequence[WeylElement], P: ParabolicSubset) -> dict[int, Functional]:
    """For each ``alpha_i`` outside ``Delta(P)``, the coweights ``w_k x_i``."""
    system = ws[0].system
    for w in ws:
        if not is_min_rep(w, P):
            raise ValidationError(f"{format_word(w.word)} is not in W^P for P={P}")
    xs = system.fundamental_coweights
    return {
        i: tuple(w.apply_coweight(xs[i]) for w in ws)
        for i in P.complement(system.rank)
    }


def evaluate_functional(functional: Functional,
                        lambdas: DominantWeightTuple | Sequence[Weight]) -> Fraction:
    """``sum_k <lambda_k, w_k x_i>``."""
    weights = lambdas.weights if isinstance(lambdas, DominantWeightTuple) else tuple(lambdas)
    if len(weights) != len(functional):
        raise ValidationError(
            f"functional has arity {len(functional)}, got {len(weights)} weights"
        )
    return sum((pair(lam, h) for lam, h in zip(weights, functional)), Fraction(0))


def _key(w: WeylElement):
    return (w.length, w.word)


def enumerate_levi_movable(system: RootSystem, P: ParabolicSubset, s: int,
                           c_filter: int | None = None,
                           budget: int | None = None) -> list[tuple[tuple[WeylElement, ...], LeviReport]]:
    """Every movable s-tuple over ``W^P`` (optionally with a given constant)."""
    if s < 2:
        raise ValidationError(f"arity s must be at least 2, got {s}")
    check_budget(len(enumerate_min_reps(system, P)) ** s, budget)
    out = []
    for tup in tuples_with_codim(system, P, s):
        report = is_levi_movable(LeviQuery(tup, P))
        if report.movable and (c_filter is None or report.c == c_filter):
            out.append((tup, report))
    return out


def _dedup_key(functionals: dict[int, Functional]):
    return tuple(sorted(
        tuple(h.coords for h in fn) for fn in functionals.values()
    ))


@dataclass
class FaceDescriptor:
    system: RootSystem
    P: ParabolicSubset
    tuple: tuple[WeylElement, ...]
    functionals: dict[int, Functional]
    witnesses: list[tuple[WeylElement, ...]] = field(default_factory=list)

    @property
    def codim(self) -> int:
        return len(self.functionals)

    def record(self) -> dict:
        alphas = sorted(self.functionals)
        return {
            "group": self.system.label,
            "P": str(self.P),
            "tuple": [format_word(w.word) for w in self.tuple],
            "alpha": [i + 1 for i in alphas],
            "coefficients": [
                [str(c) for h in self.functionals[i] for c in h.coords] for i in alphas
            ],
            "witness_c": 1,
            "witnesses": [[format_word(w.word) for w in t] for t in self.witnesses],
        }


def enumerate_faces(system: RootSystem, s: int, max_codim: int = 1,
                    budget: int | None = None) -> list[FaceDescriptor]:
    """
    Face descriptors from every standard parabolic with
    ``1 <= |Delta \\ Delta(P)| <= max_codim``, deduplicated by functionals.
    """
    if max_codim < 1:
        raise ValidationError(f"max_codim must be at least 1, got {max_codim}")
    parabolics = [
        P for P in all_parabolics(system)
        if 1 <= system.rank - len(P) <= max_codim
    ]
    check_budget(
        sum(len(enumerate_min_reps(system, P)) ** s for P in parabolics), budget
    )
    found: dict = {}
    for P in parabolics:
        for tup, report in enumerate_levi_movable(system, P, s, c_filter=1, budget=budget):
            if not (report.movable and report.c == 1):
                raise InvariantViolation("emitted tuple is not movable with c = 1")
            fns = face_functionals(tup, P)
            key = _dedup_key(fns)
            if key in found:
                found[key].witnesses.append(tup)
            else:
                found[key] = FaceDescriptor(system, P, tup, fns, [tup])
    return sorted(
        found.values(),
        key=lambda d: (d.codim, -len(d.P), d.P.sorted(), [_key(w) for w in d.tuple]),
    )


def check_face_containment(ws: Sequence[WeylElement], P: ParabolicSubset,
                           Q: ParabolicSubset) -> bool:
    """
    ``w_k x_i == u_k x_i`` for every ``alpha_i`` outside ``Delta(Q)``: the
    ``Q``-level functionals of the ``w``-face and the ``u``-face agree.
    """
    ws = tuple(ws)
    report = is_levi_movable(LeviQuery(ws, P))
    if not (report.movable and report.c == 1):
        raise ValidationError("tuple must be Levi-movable with c = 1")
    system = ws[0].system
    xs = system.fundamental_coweights
    for w in ws:
        u = factorize(w, P, Q).u
        for i in Q.complement(system.rank):
            if w.apply_coweight(xs[i]) != u.apply_coweight(xs[i]):
                return False
    return True
