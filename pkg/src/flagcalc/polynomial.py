"""Sparse integer polynomials in the simple roots, used for equivariant
restrictions."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvariantViolation

Exponent = tuple[int, ...]


class RootPolynomial:
    """
    A polynomial in ``alpha_1..alpha_n`` with integer coefficients.

    Zero coefficients are never stored.

    >>> a = RootPolynomial.linear([1, 1])
    >>> str(a * a)
    'a1^2 + 2*a1*a2 + a2^2'
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {
            e: c for e, c in (terms or {}).items() if c
        }

    @classmethod
    def constant(cls, nvars: int, c: int) -> RootPolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> RootPolynomial:
        return cls.constant(nvars, 1)

    @classmethod
    def zero(cls, nvars: int) -> RootPolynomial:
        return cls(nvars)

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> RootPolynomial:
        n = len(coeffs)
        return cls(n, {
            tuple(int(k == i) for k in range(n)): int(c) for i, c in enumerate(coeffs)
        })

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == RootPolynomial.constant(self.nvars, other)
        return isinstance(other, RootPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: RootPolynomial) -> RootPolynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return RootPolynomial(self.nvars, out)

    def __neg__(self) -> RootPolynomial:
        return RootPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: RootPolynomial) -> RootPolynomial:
        return self + (-other)

    def __mul__(self, other) -> RootPolynomial:
        if isinstance(other, int):
            return RootPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return RootPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous_of(self, d: int) -> bool:
        return not self.terms or self.degrees() == {d}

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def coefficients(self) -> Iterable[int]:
        return self.terms.values()

    def substitute(self, images: Sequence[RootPolynomial]) -> RootPolynomial:
        """Replace ``alpha_j`` by ``images[j]``."""
        result = RootPolynomial(self.nvars)
        powers: dict[tuple[int, int], RootPolynomial] = {}

        def power(j: int, k: int) -> RootPolynomial:
            if k == 0:
                return RootPolynomial.one(self.nvars)
            if (j, k) not in powers:
                powers[(j, k)] = power(j, k - 1) * images[j]
            return powers[(j, k)]

        for e, c in self.terms.items():
            term = RootPolynomial.constant(self.nvars, c)
            for j, k in enumerate(e):
                if k:
                    term = term * power(j, k)
            result = result + term
        return result

    def divide_linear(self, form: Sequence[int]) -> RootPolynomial:
        """
        Exact quotient by the linear form ``sum form[i] alpha_i``.

        Raises InvariantViolation if the division leaves a remainder or a
        non-integral quotient.
        """
        n = self.nvars
        j = next(i for i, c in enumerate(form) if c)
        lead = form[j]
        rest = [(i, c) for i, c in enumerate(form) if c and i != j]
        f: dict[Exponent, Fraction] = {e: Fraction(c) for e, c in self.terms.items()}
        quotient: dict[Exponent, Fraction] = {}
        while True:
            live = [e for e, c in f.items() if c and e[j] > 0]
            if not live:
                break
            e = max(live, key=lambda t: (t[j], t))
            c = f.pop(e) / lead
            q = e[:j] + (e[j] - 1,) + e[j + 1:]
            quotient[q] = quotient.get(q, Fraction(0)) + c
            for i, a in rest:
                t = q[:i] + (q[i] + 1,) + q[i + 1:]
                f[t] = f.get(t, Fraction(0)) - c * a
        if any(f.values()):
            raise InvariantViolation(f"non-exact division of {self} by linear form {tuple(form)}")
        out = {}
        for e, c in quotient.items():
            if c.denominator != 1:
                raise InvariantViolation(
                    f"non-integral quotient of {self} by linear form {tuple(form)}"
                )
            out[e] = int(c)
        return RootPolynomial(n, out)

    def __repr__(self):
        return f"RootPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mono = "*".join(
                f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
