"""Symbolic abelian groups and stable GEMs.

Groups are finite direct sums of atoms with multiplicities::

    Z, Z/p^k, Q, Z_(R), Zhat_p, Qhat_p, Z/p^inf,
    PruferSum(S), AdicProd(S), AdicProdQ(S)

``Z_(R)`` is the integers localized *at* ``R``: fractions whose denominators
are coprime to every prime in ``R``. So ``Z_(all) = Z`` and ``Z_({}) = Q``.

Every :class:`GroupExpr` is kept in a canonical normal form, and two values
compare equal exactly when their normal forms agree. The three "one atom
per prime" families (Prüfer groups, p-adic integers, p-adic rationals) are
normalized through their multiplicity function ``p -> m(p)``, so that, e.g.,
``Z/2^inf + PruferSum(all\\{2})`` and ``PruferSum(all)`` are the same value.

Caveat on ``iso_equal``: the p-adic rational atoms ``Qhat_p`` and
``AdicProdQ(S)`` are, as bare groups, rational vector spaces of continuum
dimension, hence abstractly isomorphic to each other. The grammar keeps them
apart because they remember which completion they came from; equality of
normal forms is isomorphism of these labelled objects.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import ClassVar, Iterable, Iterator, Mapping, Union

from sympy import factorint

from .errors import GrammarError
from .primes import ALL, EMPTY, PrimeSet, check_prime

OMEGA = math.inf
"""Countably infinite multiplicity; only allowed on ``Q``."""

Multiplicity = Union[int, float]


class Atom:
    """Base class of group atoms. Subclasses are frozen dataclasses."""

    tag: ClassVar[int]

    def params(self) -> tuple:
        return ()

    def sort_key(self) -> tuple:
        return (self.tag,) + tuple(
            p.sort_key() if isinstance(p, PrimeSet) else p for p in self.params()
        )

    def __str__(self) -> str:
        from .textio import render_atom

        return render_atom(self)


@dataclass(frozen=True, eq=True)
class Z(Atom):
    tag: ClassVar[int] = 0

    def __repr__(self):
        return "Z()"


@dataclass(frozen=True)
class Zmod(Atom):
    """The cyclic group ``Z/p^k``."""

    p: int
    k: int = 1
    tag: ClassVar[int] = 1

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.k, int) or self.k < 1:
            raise GrammarError(f"Z/p^k needs k >= 1, got {self.k!r}")

    def params(self):
        return (self.p, self.k)

    @property
    def order(self) -> int:
        return self.p**self.k


@dataclass(frozen=True)
class Q(Atom):
    tag: ClassVar[int] = 2

    def __repr__(self):
        return "Q()"


@dataclass(frozen=True)
class ZLocAt(Atom):
    primes: PrimeSet
    tag: ClassVar[int] = 3

    def params(self):
        return (self.primes,)


@dataclass(frozen=True)
class AdicInt(Atom):
    p: int
    tag: ClassVar[int] = 4

    def __post_init__(self):
        check_prime(self.p)

    def params(self):
        return (self.p,)


@dataclass(frozen=True)
class AdicRat(Atom):
    p: int
    tag: ClassVar[int] = 5

    def __post_init__(self):
        check_prime(self.p)

    def params(self):
        return (self.p,)


@dataclass(frozen=True)
class Prufer(Atom):
    p: int
    tag: ClassVar[int] = 6

    def __post_init__(self):
        check_prime(self.p)

    def params(self):
        return (self.p,)


@dataclass(frozen=True)
class PruferSum(Atom):
    """``⊕_{p in S} Z/p^inf``, one copy per prime."""

    primes: PrimeSet
    tag: ClassVar[int] = 7

    def params(self):
        return (self.primes,)


@dataclass(frozen=True)
class AdicProd(Atom):
    """``∏_{p in S} Zhat_p``."""

    primes: PrimeSet
    tag: ClassVar[int] = 8

    def params(self):
        return (self.primes,)


@dataclass(frozen=True)
class AdicProdQ(Atom):
    """``Q ⊗ ∏_{p in S} Zhat_p``."""

    primes: PrimeSet
    tag: ClassVar[int] = 9

    def params(self):
        return (self.primes,)


@dataclass(frozen=True)
class Cyclic(Atom):
    """Raw ``Z/n`` for any ``n >= 2``; only an input to :func:`normalize`."""

    n: int
    tag: ClassVar[int] = -1

    def params(self):
        return (self.n,)


# single-prime atom and its parametric counterpart, per family
_FAMILIES = {
    "prufer": (Prufer, PruferSum),
    "adic": (AdicInt, AdicProd),
    "adicq": (AdicRat, AdicProdQ),
}
_FAMILY_OF = {cls: name for name, pair in _FAMILIES.items() for cls in pair}


def _add_mult(a: Multiplicity, b: Multiplicity) -> Multiplicity:
    return OMEGA if OMEGA in (a, b) else a + b


def _check_mult(atom: Atom, m) -> Multiplicity:
    if m == OMEGA:
        if not isinstance(atom, Q):
            raise GrammarError(f"infinite multiplicity is only allowed on Q, not on {atom}")
        return OMEGA
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise GrammarError(f"multiplicity must be a nonnegative integer or ω, got {m!r}")
    return m


def _expand(atom: Atom) -> list[Atom]:
    """Rewrite a raw atom as a list of canonical atoms (empty for the zero group)."""
    match atom:
        case Cyclic(n):
            if not isinstance(n, int) or n < 2:
                raise GrammarError(f"Z/{n} is not allowed; moduli must be >= 2")
            return [Zmod(p, k) for p, k in sorted(factorint(n).items())]
        case ZLocAt(primes) if primes.is_all():
            return [Z()]
        case ZLocAt(primes) if primes.is_empty():
            return [Q()]
        case PruferSum(primes) | AdicProd(primes) | AdicProdQ(primes) if primes.is_finite():
            single = _FAMILIES[_FAMILY_OF[type(atom)]][0]
            return [single(p) for p in primes]
        case Atom():
            return [atom]
    raise TypeError(f"not a group atom: {atom!r}")


def _canonical_family(name: str, singles: Mapping[int, int], params: Mapping[PrimeSet, int]):
    """Canonical terms for one per-prime family.

    The family denotes ``⊕_p X_p^{m(p)}`` where ``m`` is eventually equal to
    ``c``, the total multiplicity of the cofinite atoms. It is rewritten as
    the level sets ``{p : m(p) >= j}`` for ``j = 1..c`` (all cofinite, equal
    ones merged) plus single atoms carrying the excess ``m(p) - c``.
    """
    single, param = _FAMILIES[name]
    c = sum(params.values())
    listed = set(singles)
    for s in params:
        listed.update(s.basis)
    m = {p: singles.get(p, 0) + sum(n for s, n in params.items() if p in s) for p in listed}
    out = []
    prev = 0
    for t in sorted({v for v in m.values() if v < c} | {c}):
        if t == 0:
            continue
        excluded = [p for p, v in m.items() if v <= prev]
        out.append((param(PrimeSet.all_except(*excluded)), t - prev))
        prev = t
    out.extend((single(p), v - c) for p, v in m.items() if v > c)
    return out


def normalize(terms: Iterable[tuple[Atom, Multiplicity]] | Iterable[Atom]) -> tuple:
    """Canonical sorted term tuple for raw ``(atom, multiplicity)`` pairs (or bare atoms)."""
    plain: dict[Atom, Multiplicity] = defaultdict(int)
    singles = {name: defaultdict(int) for name in _FAMILIES}
    params = {name: defaultdict(int) for name in _FAMILIES}
    for term in terms:
        atom, m = (term, 1) if isinstance(term, Atom) else term
        m = _check_mult(atom, m)
        if m == 0:
            continue
        for a in _expand(atom):
            fam = _FAMILY_OF.get(type(a))
            if fam is None:
                plain[a] = _add_mult(plain[a], m)
            elif isinstance(a, _FAMILIES[fam][0]):
                singles[fam][a.p] += m
            else:
                params[fam][a.primes] += m
    out = [(a, m) for a, m in plain.items() if m]
    for fam in _FAMILIES:
        if singles[fam] or params[fam]:
            out.extend(_canonical_family(fam, singles[fam], params[fam]))
    out.sort(key=lambda t: t[0].sort_key())
    return tuple(out)


@dataclass(frozen=True)
class GroupExpr:
    """A normalized finite direct sum of atoms.

    Construct with :meth:`of` or :meth:`from_terms`; ``+`` is the direct sum
    and ``n * g`` repeats a summand.
    """

    terms: tuple[tuple[Atom, Multiplicity], ...] = ()

    @classmethod
    def from_terms(cls, terms) -> GroupExpr:
        return cls(normalize(terms))

    @classmethod
    def of(cls, *atoms: Atom) -> GroupExpr:
        return cls(normalize(atoms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Atom, Multiplicity]]:
        return iter(self.terms)

    def atoms(self) -> list[Atom]:
        return [a for a, _ in self.terms]

    def __add__(self, other: GroupExpr) -> GroupExpr:
        if not isinstance(other, GroupExpr):
            return NotImplemented
        if not other.terms or not self.terms:
            return self if other.terms == () else other
        return GroupExpr.from_terms(self.terms + other.terms)

    def scaled(self, m: Multiplicity) -> GroupExpr:
        if m == 0:
            return ZERO
        if m == OMEGA:
            return GroupExpr.from_terms((a, OMEGA) for a, _ in self.terms)
        return GroupExpr.from_terms((a, n * m) for a, n in self.terms)

    def __rmul__(self, m: Multiplicity) -> GroupExpr:
        return self.scaled(m)

    def is_finitely_generated(self) -> bool:
        return all(isinstance(a, (Z, Zmod)) for a in self.atoms())

    def __str__(self) -> str:
        from .textio import render_group

        return render_group(self)

    def __repr__(self) -> str:
        return f"GroupExpr({self})"


ZERO = GroupExpr()


def group(*atoms: Atom) -> GroupExpr:
    return GroupExpr.of(*atoms)


def cyclic(n: int) -> GroupExpr:
    return GroupExpr.of(Cyclic(n))


def direct_sum(*gs: GroupExpr) -> GroupExpr:
    return GroupExpr.from_terms(t for g in gs for t in g.terms)


def iso_equal(a: GroupExpr, b: GroupExpr) -> bool:
    """Isomorphism of labelled groups, decided on normal forms.

    Labels are kept apart even when the bare groups agree: ``Qhat_p`` and
    ``AdicProdQ(S)`` are both Q-vector spaces of continuum dimension, yet
    compare unequal here.
    """
    return a.terms == b.terms


@dataclass(frozen=True)
class GemExpr:
    """A finite wedge ``⋁_k Σ^k H(G_k)``, stored as sorted nonzero layers."""

    layers: tuple[tuple[int, GroupExpr], ...] = ()

    @classmethod
    def from_layers(cls, layers: Mapping[int, GroupExpr] | Iterable[tuple[int, GroupExpr]]) -> GemExpr:
        items = layers.items() if isinstance(layers, Mapping) else layers
        acc: dict[int, GroupExpr] = {}
        for k, g in items:
            if not isinstance(k, int) or isinstance(k, bool):
                raise GrammarError(f"degree must be an integer, got {k!r}")
            acc[k] = acc.get(k, ZERO) + g
        return cls(tuple(sorted((k, g) for k, g in acc.items() if g)))

    @classmethod
    def em(cls, g: GroupExpr, degree: int = 0) -> GemExpr:
        return cls.from_layers({degree: g})

    def __getitem__(self, k: int) -> GroupExpr:
        return dict(self.layers).get(k, ZERO)

    def degrees(self) -> list[int]:
        return [k for k, _ in self.layers]

    def as_dict(self) -> dict[int, GroupExpr]:
        return dict(self.layers)

    def is_zero(self) -> bool:
        return not self.layers

    def __bool__(self) -> bool:
        return bool(self.layers)

    def __add__(self, other: GemExpr) -> GemExpr:
        if not isinstance(other, GemExpr):
            return NotImplemented
        return GemExpr.from_layers(self.layers + other.layers)

    def shifted(self, k: int) -> GemExpr:
        return GemExpr(tuple((d + k, g) for d, g in self.layers))

    def scaled(self, m: Multiplicity) -> GemExpr:
        return GemExpr.from_layers((d, g.scaled(m)) for d, g in self.layers)

    def map(self, f) -> GemExpr:
        """Apply a group-valued function degreewise."""
        return GemExpr.from_layers((d, f(g)) for d, g in self.layers)

    def __str__(self) -> str:
        from .textio import render_gem

        return render_gem(self)

    def __repr__(self) -> str:
        return f"GemExpr({self})"


ZERO_GEM = GemExpr()

__all__ = [
    "ALL", "EMPTY", "OMEGA", "Atom", "Z", "Zmod", "Q", "ZLocAt", "AdicInt", "AdicRat",
    "Prufer", "PruferSum", "AdicProd", "AdicProdQ", "Cyclic", "GroupExpr", "GemExpr",
    "ZERO", "ZERO_GEM", "group", "cyclic", "direct_sum", "iso_equal", "normalize",
]
