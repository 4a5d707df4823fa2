"""Functors on symbolic groups: rationalization, mod-p data and the Prüfer duals.

All functions are computed atom by atom from a fixed table and extended
additively over direct sums. Values against ``AdicProd``/``AdicProdQ`` that
are not written out in the literature follow from torsion-freeness, unique
divisibility, and ``Ext(-, ∏) = ∏ Ext(-, ·)``; the consistency properties in
the test suite exercise them.
"""

from __future__ import annotations

from typing import Callable

from .groups import (
    ZERO, AdicInt, AdicProd, AdicProdQ, AdicRat, Atom, GroupExpr, Prufer, PruferSum, Q, Z,
    ZLocAt, Zmod, group,
)
from .primes import ALL, EMPTY, PrimeSet, check_prime


def _additive(per_atom: Callable[[Atom], GroupExpr], g: GroupExpr) -> GroupExpr:
    out = ZERO
    for atom, m in g:
        out = out + per_atom(atom).scaled(m)
    return out


def _tensor_q_atom(a: Atom) -> GroupExpr:
    match a:
        case Z() | Q() | ZLocAt():
            return group(Q())
        case AdicInt(p) | AdicRat(p):
            return group(AdicRat(p))
        case AdicProd(s) | AdicProdQ(s):
            return group(AdicProdQ(s))
        case Zmod() | Prufer() | PruferSum():
            return ZERO
    raise TypeError(a)


def tensor_q(g: GroupExpr) -> GroupExpr:
    """``Q ⊗ g``."""
    return _additive(_tensor_q_atom, g)


def _mod_p_atom(a: Atom, p: int) -> tuple[GroupExpr, GroupExpr]:
    zp = group(Zmod(p))
    match a:
        case Z():
            return zp, ZERO
        case Zmod(q):
            return (zp, zp) if q == p else (ZERO, ZERO)
        case ZLocAt(s) | AdicProd(s):
            return (zp, ZERO) if p in s else (ZERO, ZERO)
        case AdicInt(q):
            return (zp, ZERO) if q == p else (ZERO, ZERO)
        case Prufer(q):
            return (ZERO, zp) if q == p else (ZERO, ZERO)
        case PruferSum(s):
            return (ZERO, zp) if p in s else (ZERO, ZERO)
        case Q() | AdicRat() | AdicProdQ():
            return ZERO, ZERO
    raise TypeError(a)


def mod_p_pair(g: GroupExpr, p: int) -> tuple[GroupExpr, GroupExpr]:
    """Return ``(g/pg, Tor(Z/p, g))``."""
    check_prime(p)
    quotient, torsion = ZERO, ZERO
    for atom, m in g:
        a, b = _mod_p_atom(atom, p)
        quotient = quotient + a.scaled(m)
        torsion = torsion + b.scaled(m)
    return quotient, torsion


def is_uniquely_p_divisible(g: GroupExpr, p: int) -> bool:
    quotient, torsion = mod_p_pair(g, p)
    return quotient.is_zero() and torsion.is_zero()


def _support_atom(a: Atom) -> PrimeSet:
    match a:
        case Z():
            return ALL
        case Zmod(p) | AdicInt(p) | Prufer(p):
            return PrimeSet.of(p)
        case ZLocAt(s) | PruferSum(s) | AdicProd(s):
            return s
        case Q() | AdicRat() | AdicProdQ():
            return EMPTY
    raise TypeError(a)


def support_primes(g: GroupExpr) -> PrimeSet:
    """The set of primes ``p`` at which ``g`` is not uniquely ``p``-divisible."""
    out = EMPTY
    for atom, _ in g:
        out = out | _support_atom(atom)
    return out


def hom_prufer(p: int, g: GroupExpr) -> GroupExpr:
    """``Hom(Z/p^inf, g)``: nonzero only on the ``p``-Prüfer summands."""
    check_prime(p)

    def atom_hom(a: Atom) -> GroupExpr:
        match a:
            case Prufer(q) if q == p:
                return group(AdicInt(p))
            case PruferSum(s) if p in s:
                return group(AdicInt(p))
        return ZERO

    return _additive(atom_hom, g)


def ext_prufer(p: int, g: GroupExpr) -> GroupExpr:
    """``Ext(Z/p^inf, g)``, the ``p``-adic completion of the reduced part."""
    check_prime(p)

    def atom_ext(a: Atom) -> GroupExpr:
        match a:
            case Z():
                return group(AdicInt(p))
            case Zmod(q, k) if q == p:
                return group(Zmod(p, k))
            case AdicInt(q) if q == p:
                return group(AdicInt(p))
            case ZLocAt(s) | AdicProd(s) if p in s:
                return group(AdicInt(p))
        return ZERO

    return _additive(atom_ext, g)
