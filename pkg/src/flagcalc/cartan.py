"""Exact root-system data built from a Cartan matrix.

Conventions: the Cartan matrix entry ``a[i][j]`` is ``<alpha_i^vee, alpha_j>``
(Bourbaki labelling, so B2 is ``[[2, -1], [-2, 2]]``).  Indices are 0-based
internally; everything user-facing is 1-based.

Weights are stored in the fundamental-weight basis, coweights in the basis
``x_1..x_n`` dual to the simple roots, roots in the simple-root basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import InvariantViolation, ValidationError

__all__ = [
    "BUILTIN_LABELS", "CartanDatum", "Coweight", "ParabolicSubset", "Root",
    "RootSystem", "Weight", "build_root_system", "cartan_matrix", "pair",
    "parse_group", "rho_P",
]

Matrix = tuple[tuple[int, ...], ...]

BUILTIN_LABELS = (
    "A1", "A2", "A3", "A4", "A5",
    "B2", "B3", "B4",
    "C2", "C3", "C4",
    "D4", "D5",
    "G2", "F4",
)

# generous cap on the reflection closure; finite types never get close
_MAX_POSITIVE_ROOTS = 400


def _type_a(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(label: str) -> Matrix:
    """
    Return the Cartan matrix of a built-in type.

    >>> cartan_matrix("B2")
    ((2, -1), (-2, 2))
    >>> cartan_matrix("G2")
    ((2, -3), (-1, 2))
    """
    if label not in BUILTIN_LABELS:
        raise ValidationError(
            f"unknown group type {label!r}; built-in types are "
            + ", ".join(BUILTIN_LABELS)
        )
    letter, n = label[0], int(label[1:])
    if letter == "G":
        return ((2, -3), (-1, 2))
    if letter == "F":
        return ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))
    a = _type_a(n)
    if letter == "B":
        a[n - 1][n - 2] = -2
    elif letter == "C":
        a[n - 2][n - 1] = -2
    elif letter == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in a)


_GROUP_RE = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*$")


def parse_group(descriptor: str) -> CartanDatum:
    """Parse a group descriptor such as ``"A3"`` into a :class:`CartanDatum`."""
    m = _GROUP_RE.match(descriptor)
    if not m:
        raise ValidationError(
            f"malformed group descriptor {descriptor!r}; expected letter+rank like 'A3'"
        )
    label = m.group(1).upper() + m.group(2)
    return CartanDatum(label, cartan_matrix(label))


@dataclass(frozen=True)
class CartanDatum:
    label: str
    cartan_matrix: Matrix

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.cartan_matrix)
        object.__setattr__(self, "cartan_matrix", a)
        n = len(a)
        if n == 0:
            raise ValidationError("Cartan matrix must have positive rank")
        for i, row in enumerate(a):
            if len(row) != n:
                raise ValidationError(
                    f"Cartan matrix row {i + 1} has length {len(row)}, expected {n}"
                )
        for i in range(n):
            for j in range(n):
                entry = f"entry ({i + 1},{j + 1}) = {a[i][j]}"
                if i == j and a[i][j] != 2:
                    raise ValidationError(f"diagonal {entry}; must be 2")
                if i != j and a[i][j] > 0:
                    raise ValidationError(f"off-diagonal {entry}; must be <= 0")
                if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValidationError(
                        f"{entry} but entry ({j + 1},{i + 1}) = {a[j][i]}; "
                        "zero pattern must be symmetric"
                    )

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)


@dataclass(frozen=True)
class ParabolicSubset:
    """
    The simple roots ``Delta(P)`` of a standard parabolic, as 0-based indices.

    >>> str(ParabolicSubset.from_iterable([2, 0]))
    '{1,3}'
    """
    indices: frozenset[int]

    @classmethod
    def from_iterable(cls, indices: Iterable[int]) -> ParabolicSubset:
        return cls(frozenset(int(i) for i in indices))

    @classmethod
    def parse(cls, text: str, rank: int) -> ParabolicSubset:
        """Parse the 1-based ``"{1,3}"`` form (braces optional)."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        out = []
        for tok in re.split(r"[,\s]+", body.strip()):
            if not tok:
                continue
            if not tok.isdigit():
                raise ValidationError(f"malformed parabolic index {tok!r} in {text!r}")
            i = int(tok)
            if not 1 <= i <= rank:
                raise ValidationError(
                    f"parabolic index {i} out of range 1..{rank} in {text!r}"
                )
            out.append(i - 1)
        return cls.from_iterable(out)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.sorted())

    def issubset(self, other: ParabolicSubset) -> bool:
        return self.indices <= other.indices

    def complement(self, rank: int) -> tuple[int, ...]:
        return tuple(i for i in range(rank) if i not in self.indices)

    def check_rank(self, rank: int) -> None:
        for i in self.indices:
            if not 0 <= i < rank:
                raise ValidationError(f"parabolic index {i + 1} out of range 1..{rank}")

    def __str__(self) -> str:
        return "{" + ",".join(str(i + 1) for i in self.sorted()) + "}"


@dataclass(frozen=True)
class Root:
    coords: tuple[int, ...]

    @property
    def sign(self) -> int:
        s = sum(self.coords)
        return (s > 0) - (s < 0)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c)


def _frac_vec(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class Weight:
    system: RootSystem
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _frac_vec(self.coords))

    @classmethod
    def from_root_coords(cls, system: RootSystem, coords: Sequence) -> Weight:
        a = system.cartan_matrix
        n = system.rank
        return cls(system, tuple(
            sum((a[i][j] * Fraction(coords[j]) for j in range(n)), Fraction(0))
            for i in range(n)
        ))

    @property
    def root_coords(self) -> tuple[Fraction, ...]:
        inv = self.system.inverse_cartan
        n = self.system.rank
        return tuple(
            sum((inv[i][j] * self.coords[j] for j in range(n)), Fraction(0))
            for i in range(n)
        )

    def _check(self, other: Weight) -> None:
        if self.system != other.system:
            raise ValidationError("weights belong to different root systems")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(self.system, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(self.system, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(self.system, tuple(-a for a in self.coords))

    def __mul__(self, k) -> Weight:
        return Weight(self.system, tuple(Fraction(k) * a for a in self.coords))

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class Coweight:
    system: RootSystem
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _frac_vec(self.coords))

    def __add__(self, other: Coweight) -> Coweight:
        return Coweight(self.system, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Coweight:
        return Coweight(self.system, tuple(-a for a in self.coords))

    def __mul__(self, k) -> Coweight:
        return Coweight(self.system, tuple(Fraction(k) * a for a in self.coords))

    __rmul__ = __mul__


def pair(w: Weight, c: Coweight) -> Fraction:
    """
    Exact pairing of a weight with a coweight; ``pair(alpha_i, x_j)`` is
    the Kronecker delta.
    """
    if w.system.rank != c.system.rank or w.system != c.system:
        raise ValidationError(
            f"cannot pair a rank-{w.system.rank} weight with a rank-{c.system.rank} coweight"
        )
    return sum((a * b for a, b in zip(w.root_coords, c.coords)), Fraction(0))


def _invert(a: Matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


class RootSystem:
    """
    Immutable root datum: positive roots, coroots, rho, fundamental bases.

    Each positive root is stored with a word ``(i_1, ..., i_k)`` and a simple
    index ``j`` such that the root equals ``s_{i_1} ... s_{i_k} alpha_j``.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.rank = datum.rank
        self.cartan_matrix = datum.cartan_matrix
        self.label = datum.label
        self._hash = hash(("RootSystem", datum.cartan_matrix))
        roots, provenance = self._closure()
        self.positive_roots: tuple[Root, ...] = tuple(Root(c) for c in roots)
        self.root_provenance: tuple[tuple[tuple[int, ...], int], ...] = tuple(
            provenance[c] for c in roots
        )
        self.root_index = {c: k for k, c in enumerate(roots)}
        self.coroots: tuple[tuple[int, ...], ...] = tuple(
            self._coroot(word, j) for word, j in self.root_provenance
        )

    def _closure(self):
        n, a = self.rank, self.cartan_matrix
        simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
        provenance = {s: ((), i) for i, s in enumerate(simple)}
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                word, j = provenance[beta]
                for i in range(n):
                    if beta == simple[i]:
                        continue
                    p = sum(a[i][k] * beta[k] for k in range(n))
                    new = tuple(b - p * int(k == i) for k, b in enumerate(beta))
                    if min(new) < 0:
                        raise ValidationError(
                            f"reflection closure produced mixed-sign vector {new}; "
                            "Cartan matrix is not of finite type"
                        )
                    if new not in provenance:
                        provenance[new] = ((i,) + word, j)
                        nxt.append(new)
                        if len(provenance) > _MAX_POSITIVE_ROOTS:
                            raise ValidationError(
                                f"reflection closure exceeded {_MAX_POSITIVE_ROOTS} "
                                "positive roots; Cartan matrix is not of finite type"
                            )
            frontier = nxt
        roots = sorted(provenance, key=lambda c: (sum(c), tuple(-x for x in c)))
        return roots, provenance

    def _coroot(self, word: tuple[int, ...], j: int) -> tuple[int, ...]:
        # s_i acts on simple-coroot coordinates by d -> d - alpha_i(d) e_i
        n, a = self.rank, self.cartan_matrix
        d = [int(k == j) for k in range(n)]
        for i in reversed(word):
            p = sum(d[k] * a[k][i] for k in range(n))
            d[i] -= p
        return tuple(d)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_matrix == other.cartan_matrix

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RootSystem({self.label})"

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.cartan_matrix)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(Weight(self, [int(k == i) for k in range(n)]) for i in range(n))

    @cached_property
    def fundamental_coweights(self) -> tuple[Coweight, ...]:
        n = self.rank
        return tuple(Coweight(self, [int(k == i) for k in range(n)]) for i in range(n))

    def simple_root(self, i: int) -> Weight:
        return Weight.from_root_coords(self, [int(k == i) for k in range(self.rank)])

    def root_weight(self, root: Root | Sequence[int]) -> Weight:
        coords = root.coords if isinstance(root, Root) else root
        return Weight.from_root_coords(self, coords)

    def simple_coroot(self, i: int) -> Coweight:
        return Coweight(self, self.cartan_matrix[i])

    @cached_property
    def rho(self) -> Weight:
        from_weights = Weight(self, [1] * self.rank)
        half_sum = [Fraction(sum(r.coords[i] for r in self.positive_roots), 2)
                    for i in range(self.rank)]
        from_roots = Weight.from_root_coords(self, half_sum)
        if from_weights != from_roots:
            raise InvariantViolation(
                f"rho mismatch for {self.label}: {from_weights.coords} vs {from_roots.coords}"
            )
        return from_weights

    def subsystem(self, indices: Iterable[int]) -> RootSystem:
        """Root system on a subset of simple roots, inheriting the Cartan submatrix."""
        idx = tuple(sorted(indices))
        if not idx:
            raise ValidationError("sub-root system needs at least one simple root")
        a = self.cartan_matrix
        sub = tuple(tuple(a[i][j] for j in idx) for i in idx)
        label = f"{self.label}[{','.join(str(i + 1) for i in idx)}]"
        return build_root_system(CartanDatum(label, sub))


@lru_cache(maxsize=None)
def build_root_system(datum: CartanDatum) -> RootSystem:
    """
    Build the root system of a finite-type Cartan datum.

    >>> rs = build_root_system(parse_group("A2"))
    >>> [r.coords for r in rs.positive_roots]
    [(1, 0), (0, 1), (1, 1)]
    """
    return RootSystem(datum)


def rho_P(system: RootSystem, P: ParabolicSubset) -> Weight:
    """Half the sum of the positive roots supported on ``Delta(P)``."""
    P.check_rank(system.rank)
    total = [Fraction(0)] * system.rank
    for r in system.positive_roots:
        if r.support() <= P.indices:
            for i, c in enumerate(r.coords):
                total[i] += c
    return Weight.from_root_coords(system, [t / 2 for t in total])
