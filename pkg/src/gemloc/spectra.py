"""Acyclicity profiles of localizing spectra.

Localization of a GEM at ``E`` depends on ``E`` only through two pieces of
data: whether ``HQ`` is ``E``-acyclic, and the set of primes ``p`` for which
``HZ/p`` is not. :class:`AcyclicityProfile` holds exactly that, so any
spectrum can be used by entering its profile directly.

The catalog entries for Morava K-theory, Johnson-Wilson theory and complex
K-theory are axioms taken from the literature, not computed here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import GrammarError
from .functors import support_primes, tensor_q
from .groups import GroupExpr
from .primes import ALL, EMPTY, PrimeSet


@dataclass(frozen=True)
class AcyclicityProfile:
    rational_nonacyclic: bool
    nonacyclic_primes: PrimeSet

    def __str__(self) -> str:
        flag = "yes" if self.rational_nonacyclic else "no"
        return f"profile(rational={flag}, primes={self.nonacyclic_primes})"


class Pattern(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    def __str__(self) -> str:
        return self.value


SPHERE = AcyclicityProfile(True, ALL)
RATIONAL = AcyclicityProfile(True, EMPTY)
TRIVIAL = AcyclicityProfile(False, EMPTY)


def profile_of_named(name: str, n: int | None = None) -> AcyclicityProfile:
    """Profile of a catalog spectrum.

    Names: ``Sphere`` (or ``S``), ``HZ``, ``MZ``, ``HQ``, ``MQ``, ``K`` (Morava
    K-theory, needs ``n >= 0``), ``E`` (Johnson-Wilson, needs ``n >= 1``), ``KU``.
    """
    indexed = name in ("K", "E")
    if indexed and n is None:
        raise GrammarError(f"{name}(n) needs an index")
    if not indexed and n is not None:
        raise GrammarError(f"{name} takes no index")
    if n is not None and n < 0:
        raise GrammarError(f"{name}({n}): index must be nonnegative")
    match name:
        case "Sphere" | "S" | "HZ" | "MZ":
            return SPHERE
        case "HQ" | "MQ" | "KU":
            return RATIONAL
        case "K":
            # K(0) = HQ; K(n) kills both Q and every Z/p for n >= 1
            return RATIONAL if n == 0 else TRIVIAL
        case "E":
            if n < 1:
                raise GrammarError("E(n) needs n >= 1")
            return RATIONAL
    raise GrammarError(f"unknown spectrum {name!r}")


def profile_of_em(g: GroupExpr) -> AcyclicityProfile:
    """Profile of ``HG`` (equally of the Moore spectrum ``MG``)."""
    return AcyclicityProfile(not tensor_q(g).is_zero(), support_primes(g))


def pattern_of(prof: AcyclicityProfile) -> Pattern:
    if prof.nonacyclic_primes.is_empty():
        return Pattern.II if prof.rational_nonacyclic else Pattern.I
    return Pattern.IV if prof.rational_nonacyclic else Pattern.III


def em_equivalent(a: AcyclicityProfile, b: AcyclicityProfile) -> bool:
    """True when ``a`` and ``b`` localize every GEM identically.

    This is coarser than Bousfield equivalence of the underlying spectra.
    """
    return a == b
