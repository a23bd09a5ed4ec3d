"""Schubert structure constants of H*(G/B) and H*(G/P).

Internally a class is indexed in the CELL convention: ``sigma_w`` has degree
``l(w)`` (the opposite Schubert variety through ``w``).  The codimension
indexing ``[X_w]`` used for top constants (CODIM convention, ``[X_w]`` has
codimension ``dim G/P - l(w)``) enters only through :func:`dual_index`.

Constants are obtained from equivariant localization: the restriction of
``sigma_v`` to the fixed point ``w`` is computed by Billey's formula, and the
equivariant coefficients of ``sigma_u sigma_v`` are solved for one fixed point
at a time in increasing length, dividing by the top restriction
``prod(beta)`` at each step.  Constants of ``G/P`` are read off ``G/B`` since
the pullback identifies the Schubert bases on ``W^P``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterable, Mapping, Sequence

from .cartan import ParabolicSubset, RootSystem
from .errors import InvariantViolation, ValidationError
from .polynomial import RootPolynomial
from .weyl import (
    WeylElement, bruhat_leq, dim_flag_variety, dual_index, enumerate_min_reps,
    enumerate_weyl_group, factorize, format_word, is_min_rep, longest_element,
    to_subsystem,
)

__all__ = [
    "CohomologyElement", "Indexing", "ProductFormulaReport", "SchubertClass",
    "TopConstantQuery", "billey_restriction", "chevalley_product", "codim",
    "equivariant_constant", "product", "quotient_flag", "structure_constant",
    "top_constant", "verify_product_formula",
]


class Indexing(enum.Enum):
    CELL = "cell"
    CODIM = "codim"


# --- equivariant restrictions ------------------------------------------------

@lru_cache(maxsize=None)
def _reflected_roots(system: RootSystem, i: int) -> tuple[RootPolynomial, ...]:
    # s_i(alpha_k) = alpha_k - a_ik alpha_i
    n, a = system.rank, system.cartan_matrix
    return tuple(
        RootPolynomial.linear([int(j == k) - int(j == i) * a[i][k] for j in range(n)])
        for k in range(n)
    )


def _reflect(system: RootSystem, i: int, f: RootPolynomial) -> RootPolynomial:
    return f.substitute(_reflected_roots(system, i))


def _word_roots(system: RootSystem, word: Sequence[int]) -> list[tuple[int, ...]]:
    """``beta_j = s_{a_1} ... s_{a_{j-1}} alpha_{a_j}`` in simple-root coordinates."""
    out = []
    prefix = WeylElement.identity(system)
    for a in word:
        out.append(prefix.apply_root([int(k == a) for k in range(system.rank)]))
        prefix = prefix * WeylElement.simple_reflection(system, a)
    return out


def billey_restriction(
    v: WeylElement, w: WeylElement, word: Sequence[int] | None = None
) -> RootPolynomial:
    """
    Restriction of the equivariant class ``sigma_v`` to the fixed point ``w``.

    With ``word`` (a reduced word of ``w``, 0-based) the sum over reduced
    subwords equal to ``v`` is expanded literally; otherwise a memoized
    first-letter recursion on the canonical word is used.
    """
    if v.system != w.system:
        raise ValidationError("elements belong to different root systems")
    if word is None:
        return _restriction(v, w)
    system = w.system
    if len(word) != w.length or WeylElement.from_word(system, word) != w:
        raise ValidationError(f"{format_word(word)} is not a reduced word for {w}")
    betas = [RootPolynomial.linear(b) for b in _word_roots(system, word)]
    total = RootPolynomial.zero(system.rank)
    # grow partial products of subwords, keeping only reduced prefixes
    states: dict[WeylElement, RootPolynomial] = {
        WeylElement.identity(system): RootPolynomial.one(system.rank)
    }
    for pos, a in enumerate(word):
        s = WeylElement.simple_reflection(system, a)
        nxt = dict(states)
        for x, poly in states.items():
            xs = x * s
            if xs.length == x.length + 1 and bruhat_leq(xs, v):
                nxt[xs] = nxt.get(xs, RootPolynomial.zero(system.rank)) + poly * betas[pos]
        states = nxt
    total = states.get(v, total)
    return total


@lru_cache(maxsize=None)
def _restriction(v: WeylElement, w: WeylElement) -> RootPolynomial:
    system = w.system
    n = system.rank
    if not bruhat_leq(v, w):
        return RootPolynomial.zero(n)
    if w.is_identity:
        return RootPolynomial.one(n)
    i = w.word[0]
    s = WeylElement.simple_reflection(system, i)
    w1 = s * w
    out = _reflect(system, i, _restriction(v, w1))
    if v.is_left_descent(i):
        alpha = RootPolynomial.linear([int(k == i) for k in range(n)])
        out = out + alpha * _reflect(system, i, _restriction(s * v, w1))
    return out


@lru_cache(maxsize=None)
def _top_factors(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    return tuple(_word_roots(w.system, w.word))


# --- equivariant structure constants -----------------------------------------

def _key(x: WeylElement):
    return (x.length, x.word)


@lru_cache(maxsize=None)
def _expansion(u: WeylElement, v: WeylElement) -> Mapping[WeylElement, RootPolynomial]:
    system = u.system
    target = u.length + v.length
    coeffs: dict[WeylElement, RootPolynomial] = {}
    for w in enumerate_weyl_group(system):
        if w.length > target:
            break
        if not (bruhat_leq(u, w) and bruhat_leq(v, w)):
            continue
        rest = _restriction(u, w) * _restriction(v, w)
        for y, c in coeffs.items():
            r = _restriction(y, w)
            if r:
                rest = rest - c * r
        for beta in _top_factors(w):
            rest = rest.divide_linear(beta)
        if not rest:
            continue
        deg = target - w.length
        if not rest.is_homogeneous_of(deg):
            raise InvariantViolation(
                f"equivariant constant c^{w}_{{{u},{v}}} = {rest} is not of degree {deg}"
            )
        if any(c < 0 for c in rest.coefficients()):
            raise InvariantViolation(
                f"equivariant constant c^{w}_{{{u},{v}}} = {rest} has a negative coefficient"
            )
        coeffs[w] = rest
    return coeffs


def _ordered(u: WeylElement, v: WeylElement) -> tuple[WeylElement, WeylElement]:
    return (u, v) if _key(u) <= _key(v) else (v, u)


def equivariant_constant(u: WeylElement, v: WeylElement, w: WeylElement) -> RootPolynomial:
    """Coefficient of ``sigma_w`` in the equivariant product ``sigma_u sigma_v``."""
    if not (u.system == v.system == w.system):
        raise ValidationError("elements belong to different root systems")
    a, b = _ordered(u, v)
    return _expansion(a, b).get(w, RootPolynomial.zero(u.system.rank))


@lru_cache(maxsize=None)
def _basis_product(u: WeylElement, v: WeylElement) -> Mapping[WeylElement, int]:
    target = u.length + v.length
    return {
        w: c.constant_term()
        for w, c in _expansion(u, v).items()
        if w.length == target
    }


def _check_in(P: ParabolicSubset, *ws: WeylElement) -> None:
    for w in ws:
        if not is_min_rep(w, P):
            raise ValidationError(f"{format_word(w.word)} is not in W^P for P={P}")


def structure_constant(
    u: WeylElement, v: WeylElement, w: WeylElement, P: ParabolicSubset | None = None
) -> int:
    """Coefficient of ``sigma_w`` in ``sigma_u sigma_v`` in ``H*(G/P)``."""
    P = P or ParabolicSubset.from_iterable(())
    _check_in(P, u, v, w)
    if w.length != u.length + v.length:
        return 0
    a, b = _ordered(u, v)
    return _basis_product(a, b).get(w, 0)


# --- the cohomology ring -----------------------------------------------------

def _fmt_terms(coeffs: Mapping[WeylElement, int]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for w in sorted(coeffs, key=_key):
        c = coeffs[w]
        basis = f"s[{format_word(w.word)}]"
        parts.append(basis if c == 1 else f"{c}*{basis}")
    return " + ".join(parts)


@dataclass(frozen=True)
class CohomologyElement:
    """An integer combination of CELL-indexed Schubert classes on ``G/P``."""
    system: RootSystem
    P: ParabolicSubset
    coefficients: Mapping[WeylElement, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {w: int(c) for w, c in self.coefficients.items() if c}
        _check_in(self.P, *clean)
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def basis(cls, w: WeylElement, P: ParabolicSubset | None = None) -> CohomologyElement:
        return cls(w.system, P or ParabolicSubset.from_iterable(()), {w: 1})

    @classmethod
    def unit(cls, system: RootSystem, P: ParabolicSubset | None = None) -> CohomologyElement:
        return cls.basis(WeylElement.identity(system), P)

    @classmethod
    def zero(cls, system: RootSystem, P: ParabolicSubset | None = None) -> CohomologyElement:
        return cls(system, P or ParabolicSubset.from_iterable(()), {})

    def __getitem__(self, w: WeylElement) -> int:
        return self.coefficients.get(w, 0)

    def __eq__(self, other):
        return (
            isinstance(other, CohomologyElement)
            and self.system == other.system
            and self.P == other.P
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.system, self.P, frozenset(self.coefficients.items())))

    def _compatible(self, other: CohomologyElement) -> None:
        if self.system != other.system or self.P != other.P:
            raise ValidationError(
                f"parabolic mismatch: {self.system.label}/{self.P} vs {other.system.label}/{other.P}"
            )

    def __add__(self, other: CohomologyElement) -> CohomologyElement:
        self._compatible(other)
        out = dict(self.coefficients)
        for w, c in other.coefficients.items():
            out[w] = out.get(w, 0) + c
        return CohomologyElement(self.system, self.P, out)

    def scale(self, k: int) -> CohomologyElement:
        return CohomologyElement(
            self.system, self.P, {w: k * c for w, c in self.coefficients.items()}
        )

    def __mul__(self, other: CohomologyElement) -> CohomologyElement:
        return product(self, other)

    def __str__(self):
        return _fmt_terms(self.coefficients)


def product(a: CohomologyElement, b: CohomologyElement) -> CohomologyElement:
    """Cup product in ``H*(G/P)``."""
    a._compatible(b)
    out: dict[WeylElement, int] = {}
    for u, cu in a.coefficients.items():
        for v, cv in b.coefficients.items():
            for w, c in _basis_product(*_ordered(u, v)).items():
                out[w] = out.get(w, 0) + cu * cv * c
    bad = [w for w, c in out.items() if c and not is_min_rep(w, a.P)]
    if bad:
        raise InvariantViolation(
            f"product leaves W^P for P={a.P}: {', '.join(format_word(w.word) for w in bad)}"
        )
    return CohomologyElement(a.system, a.P, out)


@lru_cache(maxsize=None)
def _reflections(system: RootSystem) -> tuple[tuple[WeylElement, tuple[int, ...]], ...]:
    out = []
    for (word, j), coroot in zip(system.root_provenance, system.coroots):
        x = WeylElement.from_word(system, word)
        s = WeylElement.simple_reflection(system, j)
        out.append((x * s * x.inverse(), coroot))
    return tuple(out)


def chevalley_product(i: int, a: CohomologyElement) -> CohomologyElement:
    """
    Multiply by the divisor class ``sigma_{s_i}`` using the Chevalley formula
    ``sum <omega_i, beta^vee> sigma_{w s_beta}`` over ``l(w s_beta) = l(w) + 1``.
    """
    system = a.system
    if not 0 <= i < system.rank:
        raise ValidationError(f"simple root index {i + 1} out of range 1..{system.rank}")
    if i in a.P:
        raise ValidationError(f"s_{i + 1} is not a divisor class on G/P for P={a.P}")
    out: dict[WeylElement, int] = {}
    for w, cw in a.coefficients.items():
        for s_beta, coroot in _reflections(system):
            ws = w * s_beta
            if coroot[i] and ws.length == w.length + 1:
                out[ws] = out.get(ws, 0) + cw * coroot[i]
    if any(c and not is_min_rep(w, a.P) for w, c in out.items()):
        raise InvariantViolation(f"Chevalley product leaves W^P for P={a.P}")
    return CohomologyElement(system, a.P, out)


# --- codimension-indexed classes and top constants ----------------------

def codim(w: WeylElement, P: ParabolicSubset) -> int:
    """Codimension of the Schubert variety ``X_w`` in ``G/P``."""
    return dim_flag_variety(w.system, P) - w.length


@dataclass(frozen=True)
class SchubertClass:
    w: WeylElement
    P: ParabolicSubset
    convention: Indexing = Indexing.CELL

    def __post_init__(self):
        _check_in(self.P, self.w)

    def to(self, convention: Indexing) -> SchubertClass:
        if convention == self.convention:
            return self
        return SchubertClass(dual_index(self.w, self.P), self.P, convention)

    @property
    def degree(self) -> int:
        return self.to(Indexing.CELL).w.length

    def element(self) -> CohomologyElement:
        return CohomologyElement.basis(self.to(Indexing.CELL).w, self.P)


@dataclass(frozen=True)
class TopConstantQuery:
    """An s-tuple of codimension-indexed classes whose codimensions fill ``G/P``."""
    tuple: tuple[WeylElement, ...]
    P: ParabolicSubset

    def __post_init__(self):
        ws = tuple(self.tuple)
        object.__setattr__(self, "tuple", ws)
        if len(ws) < 2:
            raise ValidationError(f"need at least 2 classes, got {len(ws)}")
        systems = {w.system for w in ws}
        if len(systems) != 1:
            raise ValidationError("tuple mixes root systems")
        _check_in(self.P, *ws)
        total = sum(codim(w, self.P) for w in ws)
        dim = dim_flag_variety(ws[0].system, self.P)
        if total != dim:
            raise ValidationError(
                f"sum of codimensions is {total} but dim G/P = {dim}; c_w undefined"
            )

    @property
    def system(self) -> RootSystem:
        return self.tuple[0].system


def top_constant(q: TopConstantQuery) -> int:
    """The integer ``c`` with ``[X_{w_1}] ... [X_{w_s}] = c [pt]``."""
    cells = sorted((dual_index(w, q.P) for w in q.tuple), key=_key)
    return _top_constant_cells(q.system, q.P, tuple(cells))


@lru_cache(maxsize=None)
def _top_constant_cells(system: RootSystem, P: ParabolicSubset,
                        cells: tuple[WeylElement, ...]) -> int:
    # [pt] = [X_e], which is sigma of the longest element of W^P
    top = dual_index(WeylElement.identity(system), P)
    acc = CohomologyElement.basis(cells[0], P)
    for w in cells[1:]:
        acc = product(acc, CohomologyElement.basis(w, P))
        if not acc.coefficients:
            return 0
    return acc[top]


# --- Q/P and the product formula --------------------------------------------

@dataclass(frozen=True)
class QuotientFlag:
    """``Q/P`` realized as the flag variety of the sub-root system on ``Delta(Q)``."""
    system: RootSystem | None
    P: ParabolicSubset
    indices: tuple[int, ...]

    @property
    def is_point(self) -> bool:
        return self.system is None

    def transport(self, v: WeylElement) -> WeylElement:
        return to_subsystem(v, self.system, self.indices)


def quotient_flag(system: RootSystem, P: ParabolicSubset, Q: ParabolicSubset) -> QuotientFlag:
    if not P.issubset(Q):
        raise ValidationError(f"Delta(P)={P} is not contained in Delta(Q)={Q}")
    idx = Q.sorted()
    if P == Q:
        return QuotientFlag(None, ParabolicSubset.from_iterable(()), idx)
    pos = {i: k for k, i in enumerate(idx)}
    sub = system.subsystem(idx)
    return QuotientFlag(sub, ParabolicSubset.from_iterable(pos[i] for i in P), idx)


def quotient_top_constant(flag: QuotientFlag, vs: Sequence[WeylElement]) -> int:
    if flag.is_point:
        return 1
    return top_constant(TopConstantQuery(tuple(flag.transport(v) for v in vs), flag.P))


@dataclass(frozen=True)
class ProductFormulaReport:
    system: RootSystem
    P: ParabolicSubset
    Q: ParabolicSubset
    tuple: tuple[WeylElement, ...]
    u_tuple: tuple[WeylElement, ...]
    v_tuple: tuple[WeylElement, ...]
    c_w: int
    c_u: int
    c_v: int
    v_codim_ok: bool

    @property
    def holds(self) -> bool:
        return self.c_w == self.c_u * self.c_v

    def record(self) -> dict:
        return {
            "group": self.system.label,
            "P": str(self.P),
            "Q": str(self.Q),
            "tuple": [format_word(w.word) for w in self.tuple],
            "c_w": self.c_w,
            "c_u": self.c_u,
            "c_v": self.c_v,
            "holds": self.holds,
            "indexing": Indexing.CODIM.value,
        }


def codim_conditions(ws: Sequence[WeylElement], P: ParabolicSubset,
                     Q: ParabolicSubset) -> tuple[bool, bool, list]:
    """Both dimension conditions of the product formula, plus the factorizations."""
    system = ws[0].system
    facts = [factorize(w, P, Q) for w in ws]
    w_ok = sum(codim(w, P) for w in ws) == dim_flag_variety(system, P)
    u_ok = sum(codim(f.u, Q) for f in facts) == dim_flag_variety(system, Q)
    return w_ok, u_ok, facts


def verify_product_formula(
    ws: Sequence[WeylElement], P: ParabolicSubset, Q: ParabolicSubset
) -> ProductFormulaReport:
    """Compute ``c_w``, ``c_u`` and ``c_v`` for a codimension-indexed tuple and compare."""
    ws = tuple(ws)
    if len(ws) < 2:
        raise ValidationError(f"need at least 2 classes, got {len(ws)}")
    system = ws[0].system
    w_ok, u_ok, facts = codim_conditions(ws, P, Q)
    if not w_ok:
        raise ValidationError("w-side codimension condition fails: sum codim X_w != dim G/P")
    if not u_ok:
        raise ValidationError("u-side codimension condition fails: sum codim X_u != dim G/Q")
    us = tuple(f.u for f in facts)
    vs = tuple(f.v for f in facts)
    flag = quotient_flag(system, P, Q)
    q_dim = 0 if flag.is_point else dim_flag_variety(flag.system, flag.P)
    v_codims = sum(
        0 if flag.is_point else codim(flag.transport(v), flag.P) for v in vs
    )
    c_w = top_constant(TopConstantQuery(ws, P))
    c_u = top_constant(TopConstantQuery(us, Q))
    c_v = quotient_top_constant(flag, vs)
    return ProductFormulaReport(
        system, P, Q, ws, us, vs, c_w, c_u, c_v, v_codims == q_dim
    )


def all_parabolics(system: RootSystem) -> list[ParabolicSubset]:
    """Every standard parabolic, ordered by size then indices."""
    n = system.rank
    subsets = [
        ParabolicSubset.from_iterable(i for i in range(n) if mask >> i & 1)
        for mask in range(1 << n)
    ]
    return sorted(subsets, key=lambda p: (len(p), p.sorted()))


def tuples_with_codim(system: RootSystem, P: ParabolicSubset, s: int) -> Iterable[tuple]:
    """Ordered s-tuples over ``W^P`` whose codimensions sum to ``dim G/P``."""
    reps = enumerate_min_reps(system, P)
    dim = dim_flag_variety(system, P)
    for tup in cartesian(reps, repeat=s):
        if sum(dim - w.length for w in tup) == dim:
            yield tup
