"""Weyl group elements, Bruhat order and parabolic quotients.

An element is identified by its action on the fundamental coweights (an
integer matrix), so equality is structural.  Reduced words are derived: the
cached ``word`` is the shortlex-minimal one, found greedily from left
descents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .cartan import Coweight, ParabolicSubset, Root, RootSystem, Weight
from .errors import InvariantViolation, ValidationError

__all__ = [
    "CosetFactorization", "ParabolicSubset", "WeylElement", "bruhat_leq",
    "dual_index", "enumerate_min_reps", "enumerate_weyl_group", "factorize",
    "format_word", "in_parabolic_subgroup", "is_min_rep", "length",
    "longest_element", "min_rep", "multiply", "parse_word", "to_subsystem",
]

Matrix = tuple[tuple[int, ...], ...]

# refuse to enumerate groups larger than this (E7/E8 territory)
MAX_GROUP_ORDER = 100_000


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _sign(vec: Sequence[int]) -> int:
    s = sum(vec)
    return (s > 0) - (s < 0)


@dataclass(frozen=True)
class WeylElement:
    # action[r][c]: coefficient of x_r in w(x_c)
    system: RootSystem
    action: Matrix
    # same element acting on simple-root coordinates; determined by `action`
    root_action: Matrix = field(compare=False, repr=False)

    @classmethod
    def identity(cls, system: RootSystem) -> WeylElement:
        m = _identity(system.rank)
        return cls(system, m, m)

    @classmethod
    def simple_reflection(cls, system: RootSystem, i: int) -> WeylElement:
        return _simple_reflection(system, i)

    @classmethod
    def from_word(cls, system: RootSystem, word: Iterable[int]) -> WeylElement:
        w = cls.identity(system)
        for i in word:
            if not 0 <= i < system.rank:
                raise ValidationError(
                    f"simple reflection index {i + 1} out of range 1..{system.rank}"
                )
            w = w * _simple_reflection(system, i)
        return w

    def __hash__(self):
        return hash((self.system, self.action))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __repr__(self):
        return f"WeylElement({self.system.label}, {format_word(self.word)!r})"

    def inverse(self) -> WeylElement:
        return WeylElement(
            self.system, _transpose(self.root_action), _transpose(self.action)
        )

    @property
    def is_identity(self) -> bool:
        return self.action == _identity(self.system.rank)

    def apply_root(self, coords: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(x * y for x, y in zip(row, coords)) for row in self.root_action)

    def apply_coweight(self, h: Coweight) -> Coweight:
        return Coweight(self.system, tuple(
            sum((x * y for x, y in zip(row, h.coords)), Fraction(0)) for row in self.action
        ))

    def apply_weight(self, lam: Weight) -> Weight:
        c = lam.root_coords
        out = tuple(sum((x * y for x, y in zip(row, c)), Fraction(0)) for row in self.root_action)
        return Weight.from_root_coords(self.system, out)

    def is_left_descent(self, i: int) -> bool:
        # w^{-1} alpha_i is row i of the coweight matrix
        return _sign(self.action[i]) < 0

    def is_right_descent(self, i: int) -> bool:
        return _sign([row[i] for row in self.root_action]) < 0

    def right_descents(self) -> frozenset[int]:
        return frozenset(i for i in range(self.system.rank) if self.is_right_descent(i))

    def left_descents(self) -> frozenset[int]:
        return frozenset(i for i in range(self.system.rank) if self.is_left_descent(i))

    @cached_property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        return len(self.inversions)

    @cached_property
    def inversions(self) -> tuple[Root, ...]:
        return tuple(
            r for r in self.system.positive_roots if _sign(self.apply_root(r.coords)) < 0
        )

    @cached_property
    def word(self) -> tuple[int, ...]:
        out = []
        w = self
        while not w.is_identity:
            i = min(w.left_descents())
            out.append(i)
            w = _simple_reflection(self.system, i) * w
        return tuple(out)

    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    def __str__(self):
        return format_word(self.word)


@lru_cache(maxsize=None)
def _simple_reflection(system: RootSystem, i: int) -> WeylElement:
    n, a = system.rank, system.cartan_matrix
    coweight = tuple(
        tuple(int(r == c) - int(i == c) * a[i][r] for c in range(n)) for r in range(n)
    )
    root = tuple(
        tuple(int(r == c) - int(r == i) * a[i][c] for c in range(n)) for r in range(n)
    )
    return WeylElement(system, coweight, root)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    """Group law, computed by composing actions."""
    if a.system != b.system:
        raise ValidationError(
            f"cannot multiply elements of {a.system.label} and {b.system.label}"
        )
    return WeylElement(
        a.system, _matmul(a.action, b.action), _matmul(a.root_action, b.root_action)
    )


def length(w: WeylElement) -> int:
    return w.length


_WORD_TOKEN = re.compile(r"[\s,]+")


def parse_word(system: RootSystem, text: str) -> WeylElement:
    """
    Parse a 1-based whitespace-separated word; ``"e"`` (or empty) is the identity.

    The word need not be reduced.
    """
    body = text.strip()
    if body in ("", "e"):
        return WeylElement.identity(system)
    letters = []
    for tok in _WORD_TOKEN.split(body):
        if not tok:
            continue
        if not tok.isdigit():
            raise ValidationError(f"malformed word token {tok!r} in {text!r}")
        i = int(tok)
        if not 1 <= i <= system.rank:
            raise ValidationError(
                f"index {i} out of range 1..{system.rank} in word {text!r}"
            )
        letters.append(i - 1)
    return WeylElement.from_word(system, letters)


def format_word(word: Sequence[int]) -> str:
    """
    Render a 0-based word in 1-based form.

    >>> format_word((1, 0))
    '2 1'
    >>> format_word(())
    'e'
    """
    return " ".join(str(i + 1) for i in word) if word else "e"


@lru_cache(maxsize=None)
def enumerate_weyl_group(system: RootSystem) -> tuple[WeylElement, ...]:
    """All of W, ordered by (length, shortlex word)."""
    seen = {WeylElement.identity(system)}
    frontier = list(seen)
    gens = [_simple_reflection(system, i) for i in range(system.rank)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = w * s
                if ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
                    if len(seen) > MAX_GROUP_ORDER:
                        raise ValidationError(
                            f"Weyl group of {system.label} exceeds {MAX_GROUP_ORDER} elements"
                        )
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: (w.length, w.word)))


@lru_cache(maxsize=None)
def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order by the descent recursion (lifting property)."""
    if u.length > w.length:
        return False
    if u.length == w.length:
        return u == w
    if u.is_identity:
        return True
    i = w.word[0]
    s = _simple_reflection(w.system, i)
    if u.is_left_descent(i):
        return bruhat_leq(s * u, s * w)
    return bruhat_leq(u, s * w)


def is_min_rep(w: WeylElement, P: ParabolicSubset) -> bool:
    return not any(w.is_right_descent(i) for i in P)


def in_parabolic_subgroup(v: WeylElement, Q: ParabolicSubset) -> bool:
    return v.support() <= Q.indices


@lru_cache(maxsize=None)
def enumerate_min_reps(system: RootSystem, P: ParabolicSubset) -> tuple[WeylElement, ...]:
    """
    Minimal-length coset representatives ``W^P``, ordered by (length, word).

    >>> from flagcalc.cartan import build_root_system, parse_group
    >>> rs = build_root_system(parse_group("A2"))
    >>> [str(w) for w in enumerate_min_reps(rs, ParabolicSubset.from_iterable([1]))]
    ['e', '1', '2 1']
    """
    P.check_rank(system.rank)
    return tuple(w for w in enumerate_weyl_group(system) if is_min_rep(w, P))


@lru_cache(maxsize=None)
def parabolic_subgroup(system: RootSystem, P: ParabolicSubset) -> tuple[WeylElement, ...]:
    return tuple(w for w in enumerate_weyl_group(system) if in_parabolic_subgroup(w, P))


def min_rep(w: WeylElement, P: ParabolicSubset) -> tuple[WeylElement, WeylElement]:
    """Split ``w = rep * tail`` with ``rep`` in ``W^P`` and ``tail`` in ``W_P``."""
    rep, tail = w, WeylElement.identity(w.system)
    while True:
        d = next((i for i in P if rep.is_right_descent(i)), None)
        if d is None:
            break
        s = _simple_reflection(w.system, d)
        rep, tail = rep * s, s * tail
    if rep * tail != w or rep.length + tail.length != w.length:
        raise InvariantViolation(f"min_rep failed for {w!r}")
    return rep, tail


def longest_element(system: RootSystem, P: ParabolicSubset | None = None) -> WeylElement:
    """Longest element of ``W_P`` (of ``W`` when ``P`` is None)."""
    idx = range(system.rank) if P is None else P.sorted()
    w = WeylElement.identity(system)
    while True:
        i = next((i for i in idx if not w.is_right_descent(i)), None)
        if i is None:
            return w
        w = w * _simple_reflection(system, i)


@dataclass(frozen=True)
class CosetFactorization:
    u: WeylElement
    v: WeylElement
    w: WeylElement


def factorize(w: WeylElement, P: ParabolicSubset, Q: ParabolicSubset) -> CosetFactorization:
    """
    The unique ``w = u v`` with ``u`` in ``W^Q`` and ``v`` in ``W^P`` and ``W_Q``.
    """
    if not P.issubset(Q):
        raise ValidationError(f"Delta(P)={P} is not contained in Delta(Q)={Q}")
    if not is_min_rep(w, P):
        raise ValidationError(f"{format_word(w.word)} is not in W^P for P={P}")
    u, v = min_rep(w, Q)
    ok = (
        u * v == w
        and u.length + v.length == w.length
        and is_min_rep(u, Q)
        and is_min_rep(v, P)
        and in_parabolic_subgroup(v, Q)
    )
    if not ok:
        raise InvariantViolation(f"factorization postconditions fail for {w!r}")
    return CosetFactorization(u, v, w)


def dual_index(w: WeylElement, P: ParabolicSubset) -> WeylElement:
    """
    The Poincare-dual index ``w0 w w0_P``; exchanges dimension and codimension
    indexing of Schubert classes on ``G/P``.
    """
    if not is_min_rep(w, P):
        raise ValidationError(f"{format_word(w.word)} is not in W^P for P={P}")
    return _dual(w, P)


@lru_cache(maxsize=None)
def _dual(w: WeylElement, P: ParabolicSubset) -> WeylElement:
    system = w.system
    return longest_element(system) * w * longest_element(system, P)


def dim_flag_variety(system: RootSystem, P: ParabolicSubset) -> int:
    """``dim G/P = |R^+| - |R_P^+|``."""
    in_levi = sum(1 for r in system.positive_roots if r.support() <= P.indices)
    return system.num_positive_roots - in_levi


def to_subsystem(v: WeylElement, sub: RootSystem, indices: Sequence[int]) -> WeylElement:
    """Transport ``v`` (supported on ``indices``) into the sub-root system."""
    pos = {i: k for k, i in enumerate(sorted(indices))}
    try:
        letters = [pos[i] for i in v.word]
    except KeyError as exc:
        raise ValidationError(
            f"{format_word(v.word)} is not supported on {{{','.join(str(i + 1) for i in indices)}}}"
        ) from exc
    return WeylElement.from_word(sub, letters)


def from_subsystem(v: WeylElement, ambient: RootSystem, indices: Sequence[int]) -> WeylElement:
    idx = sorted(indices)
    return WeylElement.from_word(ambient, [idx[k] for k in v.word])
