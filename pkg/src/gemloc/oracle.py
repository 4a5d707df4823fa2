"""Brute-force arithmetic on finitely generated abelian groups.

Everything here works on explicit integer presentations with Python's
unbounded integers, independently of the symbolic tables in
:mod:`gemloc.functors`. It certifies finite truncations only: the quotient
tower ``G/p^k G`` for ``k <= depth`` and the ``p``-power torsion up to the
same depth, never the inverse limits themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from sympy import factorint

from .errors import GrammarError
from .functors import ext_prufer
from .groups import AdicInt, GroupExpr, Z, Zmod
from .primes import check_prime

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, cols: int = 0) -> Matrix:
    """Product of integer matrices; ``cols`` sizes the result when ``b`` has no rows."""
    cols = len(b[0]) if b else cols
    return [[sum(x * b[t][j] for t, x in enumerate(row)) for j in range(cols)] for row in a]


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Matrix, ncols: int | None = None) -> tuple[list[int], Matrix, Matrix]:
    """Smith normal form of an integer matrix.

    Returns ``(d, u, v)`` with ``u @ m @ v`` diagonal with entries ``d``,
    ``d[0] | d[1] | ...``, all nonnegative, and ``u``, ``v`` unimodular.
    ``ncols`` is needed only when ``m`` has no rows.
    """
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    a = [list(map(int, row)) for row in m]
    u, v = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def quotient(x, y):  # nearest-integer quotient keeps remainders small
        q, r = divmod(x, y)
        return q + 1 if 2 * r > abs(y) else q

    def clear_column(t):
        while True:
            live = [i for i in range(t, rows) if a[i][t]]
            i = min(live, key=lambda i: abs(a[i][t]))
            swap_rows(t, i)
            if len(live) == 1:
                return
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -quotient(a[i][t], a[t][t]))

    def clear_row(t):
        while True:
            live = [j for j in range(t, cols) if a[t][j]]
            j = min(live, key=lambda j: abs(a[t][j]))
            swap_cols(t, j)
            if len(live) == 1:
                return
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -quotient(a[t][j], a[t][t]))

    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            clear_column(t)
            clear_row(t)
            if any(a[i][t] for i in range(t + 1, rows)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    d = [a[i][i] for i in range(min(rows, cols))]
    return d, u, v


def invariant_factors_by_minors(m: Matrix) -> list[int]:
    """Invariant factors from gcds of all ``k x k`` minors (slow, for checking)."""
    rows = len(m)
    cols = len(m[0]) if m else 0
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                g = math.gcd(g, determinant([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            out.extend([0] * (min(rows, cols) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


@dataclass(frozen=True)
class FgPresentation:
    """``Z^n_generators / (row span of relations)``."""

    relations: tuple[tuple[int, ...], ...]
    n_generators: int

    @classmethod
    def from_rows(cls, rows, n_generators: int | None = None) -> FgPresentation:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if n_generators is None:
            if not rows:
                raise ValueError("n_generators is required for an empty relation matrix")
            n_generators = len(rows[0])
        if any(len(r) != n_generators for r in rows):
            raise ValueError("every relation needs one entry per generator")
        return cls(rows, n_generators)

    def with_relations(self, extra) -> FgPresentation:
        return FgPresentation.from_rows(list(self.relations) + list(extra), self.n_generators)

    def matrix(self) -> Matrix:
        return [list(r) for r in self.relations]


def _prime_powers(n: int) -> list[int]:
    return [p**k for p, k in sorted(factorint(n).items())]


@dataclass(frozen=True)
class FgInvariants:
    free_rank: int
    torsion: tuple[int, ...] = field(default=())

    @classmethod
    def from_factors(cls, free_rank: int, factors) -> FgInvariants:
        powers = [q for d in factors if d > 1 for q in _prime_powers(d)]
        return cls(free_rank, tuple(sorted(powers, key=lambda q: _base_exp(q))))

    def to_group(self) -> GroupExpr:
        atoms = [(Z(), self.free_rank)] if self.free_rank else []
        atoms += [(Zmod(*_base_exp(q)), 1) for q in self.torsion]
        return GroupExpr.from_terms(atoms)

    @classmethod
    def from_group(cls, g: GroupExpr) -> FgInvariants:
        if not g.is_finitely_generated():
            raise GrammarError(f"{g} is not finitely generated")
        rank = sum(m for a, m in g if isinstance(a, Z))
        factors = [a.order for a, m in g if isinstance(a, Zmod) for _ in range(m)]
        return cls.from_factors(rank, factors)


def _base_exp(q: int) -> tuple[int, int]:
    ((p, k),) = factorint(q).items()
    return p, k


def fg_invariants(pres: FgPresentation) -> FgInvariants:
    d, _, _ = smith_normal_form(pres.matrix(), pres.n_generators)
    rank = sum(1 for x in d if x != 0)
    return FgInvariants.from_factors(pres.n_generators - rank, d)


def completion_tower(pres: FgPresentation, p: int, depth: int = 8) -> list[FgInvariants]:
    """Invariants of ``G/p^k G`` for ``k = 1..depth``."""
    check_prime(p)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    n = pres.n_generators
    return [
        fg_invariants(pres.with_relations(
            [[p**k if i == j else 0 for j in range(n)] for i in range(n)]
        ))
        for k in range(1, depth + 1)
    ]


def _quotient_by_power(a: GroupExpr, p: int, k: int) -> FgInvariants:
    factors = []
    for atom, m in a:
        match atom:
            case AdicInt(q) if q == p:
                factors += [p**k] * m
            case Zmod(q, j) if q == p:
                factors += [p ** min(j, k)] * m
            case _:
                raise GrammarError(f"{atom} is not a Zhat_{p} or Z/{p}^j atom")
    return FgInvariants.from_factors(0, factors)


def check_ext_consistency(a: GroupExpr, pres: FgPresentation, p: int, depth: int = 8) -> bool:
    """Compare the symbolic ``a = Ext(Z/p^inf, G)`` against the tower ``G/p^k G``.

    ``a/p^k a`` is read off symbolically (``Zhat_p -> Z/p^k``,
    ``Z/p^j -> Z/p^min(j,k)``) and must match the presentation's quotient at
    every level ``k <= depth``.
    """
    tower = completion_tower(pres, p, depth)
    return all(_quotient_by_power(a, p, k) == tower[k - 1] for k in range(1, depth + 1))


def torsion_orders(pres: FgPresentation) -> list[int]:
    """Orders of the finite cyclic factors in the Smith decomposition."""
    d, _, _ = smith_normal_form(pres.matrix(), pres.n_generators)
    return [x for x in d if x > 1]


def p_torsion_rank(pres: FgPresentation, p: int) -> int:
    """Dimension of ``Tor(Z/p, G) = G[p]`` over ``Z/p``."""
    return sum(1 for d in torsion_orders(pres) if d % p == 0)


def check_hom_vanishing(pres: FgPresentation, p: int, depth: int = 8) -> bool:
    """Certify ``Hom(Z/p^inf, G) = 0`` from the system ``G[p^k]`` under ``x -> p x``.

    True when ``p^depth`` maps ``G[p^(depth+1)]`` to zero inside every cyclic
    factor: then the limit of the tower vanishes. False means the depth was
    too small to decide.
    """
    check_prime(p)
    for d in torsion_orders(pres):
        g = math.gcd(d, p ** (depth + 1))
        generator = d // g  # generates the p^(depth+1)-torsion of Z/d
        if (generator * p**depth) % d:
            return False
    return True


def certify_ext(pres: FgPresentation, p: int, depth: int = 8) -> bool:
    """Run :func:`check_ext_consistency` on the functor table's own answer."""
    g = fg_invariants(pres).to_group()
    return check_ext_consistency(ext_prufer(p, g), pres, p, depth)
