"""Localization of stable GEMs at a spectrum, given its acyclicity profile.

For an atom ``a`` let ``N`` be the nonacyclic primes of the profile and
``T = N ∩ support(a)`` the primes at which both ``HZ/p`` survives and ``a``
fails to be uniquely divisible. Without a rational part the answer is the
product over ``T`` of the mod-p localizations ``H Ext(Z/p^inf, a) ∨ Σ H Hom(Z/p^inf, a)``;
with one it is the pullback of that product and ``H(Q ⊗ a)`` over the
rationalized product. Each atom of the grammar has a split closed form for
that pullback, listed in :func:`localize_atom`, and everything else follows by
additivity over direct sums and wedges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .functors import ext_prufer, hom_prufer, support_primes, tensor_q
from .groups import (
    ZERO, ZERO_GEM, AdicInt, AdicProd, AdicProdQ, AdicRat, Atom, GemExpr, GroupExpr, Prufer,
    PruferSum, Q, Z, ZLocAt, Zmod, group,
)
from .primes import PrimeSet, check_prime
from .spectra import AcyclicityProfile


def _gem(degree0: GroupExpr = ZERO, degree1: GroupExpr = ZERO) -> GemExpr:
    return GemExpr.from_layers({0: degree0, 1: degree1})


def localize_mod_p_em(p: int, g: GroupExpr) -> GemExpr:
    """``L_{MZ/p} HG = H Ext(Z/p^inf, G) ∨ Σ H Hom(Z/p^inf, G)``."""
    check_prime(p)
    return _gem(ext_prufer(p, g), hom_prufer(p, g))


def localize_atom(prof: AcyclicityProfile, a: Atom) -> GemExpr:
    n, rat = prof.nonacyclic_primes, prof.rational_nonacyclic
    match a:
        case Z():
            t = n
            return _gem(group(ZLocAt(t)) if rat else group(AdicProd(t)))
        case ZLocAt(r):
            t = n & r
            return _gem(group(ZLocAt(t)) if rat else group(AdicProd(t)))
        case Zmod(p, k):
            return _gem(group(Zmod(p, k))) if p in n else ZERO_GEM
        case Q() | AdicRat() | AdicProdQ():
            return _gem(group(a)) if rat else ZERO_GEM
        case AdicInt(p):
            if p in n:
                return _gem(group(a))
            return _gem(group(AdicRat(p))) if rat else ZERO_GEM
        case Prufer(p):
            if p not in n:
                return ZERO_GEM
            # rationally: coker(Zhat_p -> Qhat_p) = Z/p^inf in degree 0
            return _gem(group(a)) if rat else _gem(degree1=group(AdicInt(p)))
        case PruferSum(s):
            t = n & s
            return _gem(group(PruferSum(t))) if rat else _gem(degree1=group(AdicProd(t)))
        case AdicProd(s):
            t = n & s
            if not rat:
                return _gem(group(AdicProd(t)))
            # pullback of ∏_T Zhat_p -> Q⊗∏_T Zhat_p <- Q⊗∏_S Zhat_p
            return _gem(group(AdicProd(t), AdicProdQ(s - t)))
    raise TypeError(f"not a canonical atom: {a!r}")


def localize_em(prof: AcyclicityProfile, g: GroupExpr) -> GemExpr:
    """``L_E HG``; concentrated in degrees 0 and 1."""
    out = ZERO_GEM
    for atom, m in g:
        out = out + localize_atom(prof, atom).scaled(m)
    return out


def localize_gem(prof: AcyclicityProfile, x: GemExpr) -> GemExpr:
    """Localize a wedge degreewise; localization commutes with wedges and suspension."""
    out = ZERO_GEM
    for k, g in x.layers:
        out = out + localize_em(prof, g).shifted(k)
    return out


@dataclass(frozen=True)
class CornerReport:
    """The four corners of the arithmetic square for ``L_E HG``.

    ``primes`` is the set of primes entering the product corner. When it is
    infinite, ``symbolic_product`` is set: the product was assembled through
    the ``AdicProd`` forms rather than prime by prime.
    """

    localization: GemExpr
    prime_product: GemExpr
    rationalization: GemExpr
    rationalized_product: GemExpr
    primes: PrimeSet
    symbolic_product: bool


def _prime_product_atom(a: Atom, primes: PrimeSet) -> GemExpr:
    """``∏_{p in primes} L_{MZ/p} H(a)`` for one atom, via the family forms."""
    t = primes & support_primes(group(a))
    match a:
        case Z() | ZLocAt() | AdicProd():
            return _gem(group(AdicProd(t)))
        case PruferSum():
            return _gem(degree1=group(AdicProd(t)))
    if t.is_finite():
        out = ZERO_GEM
        for p in t:
            out = out + localize_mod_p_em(p, group(a))
        return out
    raise TypeError(f"atom {a!r} has infinite support but no product form")


def arithmetic_corners(prof: AcyclicityProfile, g: GroupExpr) -> CornerReport:
    primes = prof.nonacyclic_primes & support_primes(g)
    if primes.is_finite():
        product = ZERO_GEM
        for p in primes:
            product = product + localize_mod_p_em(p, g)
    else:
        product = ZERO_GEM
        for atom, m in g:
            product = product + _prime_product_atom(atom, primes).scaled(m)
    rat = prof.rational_nonacyclic
    return CornerReport(
        localization=localize_em(prof, g),
        prime_product=product,
        rationalization=GemExpr.em(tensor_q(g)) if rat else ZERO_GEM,
        rationalized_product=product.map(tensor_q) if rat else ZERO_GEM,
        primes=primes,
        symbolic_product=not primes.is_finite(),
    )
