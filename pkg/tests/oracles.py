"""Independent oracles used to check the engine.

Nothing here calls into the structure-constant machinery: type-A products
come from Schubert polynomials and divided differences (sympy), Grassmannian
products from the Littlewood-Richardson tableau rule, Bruhat order from the
subword property and restrictions from a literal sum over subwords.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import sympy

from flagcalc.cartan import RootSystem
from flagcalc.weyl import WeylElement


# --- permutations -------------------------------------------------------------

def perm_of(w: WeylElement) -> tuple[int, ...]:
    """One-line notation of a type-A Weyl element (1-based values)."""
    n = w.system.rank + 1
    p = list(range(1, n + 1))
    for a in w.word:
        # right multiplication by s_a swaps positions a, a+1
        p[a], p[a + 1] = p[a + 1], p[a]
    return tuple(p)


def perm_length(p) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def perm_reduced_word(p) -> tuple[int, ...]:
    """A reduced word (0-based letters) by peeling right descents."""
    p = list(p)
    word = []
    while True:
        d = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if d is None:
            return tuple(reversed(word))
        p[d], p[d + 1] = p[d + 1], p[d]
        word.append(d)


# --- Schubert polynomials and the coinvariant algebra -------------------------

def _xs(n):
    return sympy.symbols(f"x1:{n + 1}")


def divided_difference(f, i, xs):
    swapped = f.subs({xs[i]: xs[i + 1], xs[i + 1]: xs[i]}, simultaneous=True)
    q = sympy.cancel((f - swapped) / (xs[i] - xs[i + 1]))
    return sympy.expand(q)


@lru_cache(maxsize=None)
def schubert_polynomials(n: int) -> dict[tuple[int, ...], sympy.Expr]:
    """All Schubert polynomials of S_n, from the staircase monomial downward."""
    xs = _xs(n)
    w0 = tuple(range(n, 0, -1))
    polys = {w0: sympy.expand(sympy.prod(xs[i] ** (n - 1 - i) for i in range(n)))}
    frontier = [w0]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n - 1):
                if w[i] > w[i + 1]:
                    v = list(w)
                    v[i], v[i + 1] = v[i + 1], v[i]
                    v = tuple(v)
                    if v not in polys:
                        polys[v] = divided_difference(polys[w], i, xs)
                        nxt.append(v)
        frontier = nxt
    return polys


def coinvariant_product(n: int, u, v) -> dict[tuple[int, ...], int]:
    """Expansion of S_u S_v in H*(Fl_n), via c_w = (d_w (S_u S_v))(0)."""
    xs = _xs(n)
    polys = schubert_polynomials(n)
    f = sympy.expand(polys[u] * polys[v])
    target = perm_length(u) + perm_length(v)
    out = {}
    for w in polys:
        if perm_length(w) != target:
            continue
        g = f
        for a in reversed(perm_reduced_word(w)):
            g = divided_difference(g, a, xs)
        c = int(g.subs({x: 0 for x in xs}))
        if c:
            out[w] = c
    return out


# --- Littlewood-Richardson ----------------------------------------------------

def lr_coefficient(lam, mu, nu) -> int:
    """Count LR tableaux of shape nu/lam and content mu."""
    lam = list(lam) + [0] * (len(nu) - len(lam))
    if sum(nu) != sum(lam) + sum(mu) or any(l > n for l, n in zip(lam, nu)):
        return 0
    if len(lam) > len(nu):
        return 0
    cells = [(r, c) for r in range(len(nu)) for c in range(lam[r], nu[r])]
    letters = range(1, len(mu) + 1)
    count = 0
    for filling in product(letters, repeat=len(cells)):
        t = dict(zip(cells, filling))
        if any(filling.count(k) != mu[k - 1] for k in letters):
            continue
        ok = all(
            ((r, c + 1) not in t or t[(r, c)] <= t[(r, c + 1)])
            and ((r + 1, c) not in t or t[(r, c)] < t[(r + 1, c)])
            for (r, c) in cells
        )
        if not ok:
            continue
        # reverse reading word: rows top to bottom, each right to left
        seen = [0] * (len(mu) + 2)
        lattice = True
        for r in range(len(nu)):
            for c in reversed(range(lam[r], nu[r])):
                k = t[(r, c)]
                seen[k] += 1
                if k > 1 and seen[k] > seen[k - 1]:
                    lattice = False
        count += lattice
    return count


def partitions_in_box(k: int, m: int):
    """Partitions with at most k parts, each at most m."""
    def rec(i, bound):
        if i == k:
            yield ()
            return
        for part in range(bound, -1, -1):
            for rest in rec(i + 1, part):
                yield (part,) + rest
    for p in rec(0, m):
        yield tuple(x for x in p if x)


def grassmannian_partition(w: WeylElement, k: int) -> tuple[int, ...]:
    """Partition of a Grassmannian permutation with descent at k."""
    p = perm_of(w)
    lam = tuple(p[k - 1 - i] - (k - i) for i in range(k))
    return tuple(x for x in lam if x)


def lr_product(lam, mu, k: int, m: int) -> dict[tuple[int, ...], int]:
    out = {}
    for nu in partitions_in_box(k, m):
        if sum(nu) == sum(lam) + sum(mu):
            c = lr_coefficient(lam, mu, nu)
            if c:
                out[nu] = c
    return out


# --- Coxeter combinatorics ----------------------------------------------------

def subword_leq(u: WeylElement, w: WeylElement) -> bool:
    """u <= w iff u is the product of some subword of a reduced word of w."""
    word = w.word
    system = w.system
    for r in range(len(word) + 1):
        for pos in combinations(range(len(word)), r):
            if WeylElement.from_word(system, [word[p] for p in pos]) == u:
                return True
    return False


def all_reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    system = w.system
    if w.is_identity:
        return [()]
    out = []
    for i in range(system.rank):
        s = WeylElement.simple_reflection(system, i)
        if (s * w).length < w.length:
            out += [(i,) + rest for rest in all_reduced_words(s * w)]
    return out


def subword_restriction(v: WeylElement, word, system: RootSystem):
    """Billey's sum over reduced subwords, evaluated literally with sympy."""
    n = system.rank
    a = sympy.symbols(f"a1:{n + 1}")
    cm = system.cartan_matrix

    def reflect(i, vec):
        p = sum(cm[i][k] * vec[k] for k in range(n))
        return [vec[k] - p * (k == i) for k in range(n)]

    betas = []
    for j, letter in enumerate(word):
        vec = [int(k == letter) for k in range(n)]
        for i in reversed(word[:j]):
            vec = reflect(i, vec)
        betas.append(sum(c * a[k] for k, c in enumerate(vec)))
    total = sympy.Integer(0)
    for r in range(v.length, v.length + 1):
        for pos in combinations(range(len(word)), r):
            if WeylElement.from_word(system, [word[p] for p in pos]) == v:
                total += sympy.prod(betas[p] for p in pos)
    return sympy.expand(total)


def to_sympy(poly, n):
    a = sympy.symbols(f"a1:{n + 1}")
    return sympy.expand(sum(
        c * sympy.prod(a[i] ** k for i, k in enumerate(e)) for e, c in poly.terms.items()
    ))


def brute_min_coset_reps(system, P, group):
    """Minimal-length element of every left coset w W_P, by explicit cosets."""
    wp = [x for x in group if set(x.word) <= set(P.indices)]
    reps, seen = [], set()
    for w in group:
        if w in seen:
            continue
        coset = {w * x for x in wp}
        seen |= coset
        reps.append(min(coset, key=lambda y: y.length))
    return reps


def weight_orbit_image(system: RootSystem, word, coords):
    """Apply s_{a_1} ... s_{a_k} to a weight given in fundamental-weight coords."""
    lam = list(coords)
    cm = system.cartan_matrix
    for j in reversed(word):
        # s_j lam = lam - lam_j alpha_j; alpha_j has weight coords = column j
        lj = lam[j]
        lam = [lam[i] - lj * cm[i][j] for i in range(system.rank)]
    return lam
