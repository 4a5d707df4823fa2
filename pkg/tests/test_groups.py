import pytest
from hypothesis import given, settings

from gemloc import (
    ALL, EMPTY, OMEGA, AdicInt, AdicProd, AdicProdQ, AdicRat, Cyclic, GemExpr, GroupExpr, PrimeSet,
    Prufer, PruferSum, Q, Z, ZLocAt, Zmod, cyclic, direct_sum, group, iso_equal, normalize,
)
from gemloc.errors import GrammarError
from gemloc.functors import ext_prufer, hom_prufer, mod_p_pair, tensor_q
from gemloc.groups import ZERO
from gemloc.primes import primes_up_to

from strategies import groups, raw_terms


def test_composite_modulus_splits():
    assert cyclic(12) == group(Zmod(2, 2), Zmod(3, 1))
    assert cyclic(360) == group(Zmod(2, 3), Zmod(3, 2), Zmod(5))


def test_degenerate_parameters_collapse():
    assert group(ZLocAt(EMPTY)) == group(Q())
    assert group(ZLocAt(ALL)) == group(Z())
    assert group(AdicProd(PrimeSet.of(2, 3))) == group(AdicInt(2), AdicInt(3))
    assert group(AdicProdQ(PrimeSet.of(5))) == group(AdicRat(5))
    assert group(PruferSum(EMPTY)) == ZERO


def test_bad_moduli_and_omega_are_rejected():
    for n in (0, 1, -4):
        with pytest.raises(GrammarError):
            cyclic(n)
    with pytest.raises(GrammarError):
        GroupExpr.from_terms([(Z(), OMEGA)])
    with pytest.raises(GrammarError):
        GroupExpr.from_terms([(Prufer(2), OMEGA)])
    with pytest.raises(GrammarError):
        Zmod(4, 1)
    with pytest.raises(GrammarError):
        Zmod(2, 0)


def test_direct_sum_examples():
    assert group(Z()) + ZERO == group(Z())
    assert group(Zmod(2)) + group(Zmod(2)) == GroupExpr.from_terms([(Zmod(2), 2)])
    q_omega = GroupExpr.from_terms([(Q(), OMEGA)])
    assert q_omega + group(Q()) == q_omega


def test_iso_equal_examples():
    assert iso_equal(group(ZLocAt(ALL)), group(Z()))
    assert iso_equal(group(Prufer(2), Prufer(3)), group(PruferSum(PrimeSet.of(2, 3))))
    # Q is countable and Qhat_2 is not; the mod-p fingerprints cannot tell them
    # apart because both are uniquely divisible at every prime
    assert not iso_equal(group(AdicRat(2)), group(Q()))
    for p in primes_up_to(50):
        assert mod_p_pair(group(AdicRat(2)), p) == mod_p_pair(group(Q()), p) == (ZERO, ZERO)


def test_per_prime_families_merge_across_cofinite_sets():
    assert group(Prufer(2), PruferSum(PrimeSet.all_except(2))) == group(PruferSum(ALL))
    assert group(AdicInt(2), AdicProd(PrimeSet.all_except(2))) == group(AdicProd(ALL))
    assert group(AdicRat(3), AdicProdQ(PrimeSet.all_except(3))) == group(AdicProdQ(ALL))
    # two cofinite sets overlap on all but finitely many primes
    lhs = group(PruferSum(PrimeSet.all_except(2)), PruferSum(PrimeSet.all_except(3)))
    rhs = group(PruferSum(ALL), PruferSum(PrimeSet.all_except(2, 3)))
    assert lhs == rhs
    # excess multiplicity at a listed prime stays a single atom
    g = GroupExpr.from_terms([(PruferSum(ALL), 1), (Prufer(5), 2)])
    assert g.terms == ((Prufer(5), 2), (PruferSum(ALL), 1))


def test_canonical_form_has_no_degenerate_atoms():
    g = GroupExpr.from_terms([
        (PruferSum(PrimeSet.all_except(2)), 1), (Prufer(2), 1), (AdicProd(PrimeSet.of(3)), 2),
        (ZLocAt(ALL), 1), (Cyclic(6), 1),
    ])
    for atom, m in g:
        assert not isinstance(atom, Cyclic)
        if isinstance(atom, (PruferSum, AdicProd, AdicProdQ)):
            assert not atom.primes.is_finite()
        if isinstance(atom, ZLocAt):
            assert not atom.primes.is_all() and not atom.primes.is_empty()
        assert m == OMEGA or m >= 1


@settings(max_examples=1000)
@given(raw_terms)
def test_normalize_is_idempotent(terms):
    once = normalize(terms)
    assert normalize(once) == once


@given(groups(), groups(), groups())
def test_direct_sum_commutative_associative(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + ZERO == a
    assert direct_sum(a, b, c) == a + b + c


FINGERPRINT_PRIMES = primes_up_to(50)


def _fingerprint(g):
    return (
        tensor_q(g),
        tuple(mod_p_pair(g, p) for p in FINGERPRINT_PRIMES),
        tuple(hom_prufer(p, g) for p in FINGERPRINT_PRIMES),
        tuple(ext_prufer(p, g) for p in FINGERPRINT_PRIMES),
    )


@given(raw_terms)
def test_fingerprint_soundness(terms):
    # iso-equal values built from differently arranged raw terms
    a = GroupExpr.from_terms(terms)
    b = GroupExpr.from_terms(list(reversed(terms)))
    expanded = GroupExpr.from_terms([t for atom, m in terms for t in [(atom, 1)] * m])
    assert iso_equal(a, b) and iso_equal(a, expanded)
    assert _fingerprint(a) == _fingerprint(b) == _fingerprint(expanded)


def test_fingerprint_fixed_pairs():
    pairs = [
        (group(Prufer(7), PruferSum(PrimeSet.all_except(7))), group(PruferSum(ALL))),
        (group(AdicProd(PrimeSet.of(2, 3))), group(AdicInt(3), AdicInt(2))),
        (cyclic(12), group(Zmod(3), Zmod(2, 2))),
    ]
    for a, b in pairs:
        assert iso_equal(a, b)
        assert _fingerprint(a) == _fingerprint(b)


def test_scaling():
    assert 3 * group(Z()) == GroupExpr.from_terms([(Z(), 3)])
    assert 0 * group(Z()) == ZERO
    assert group(Q()).scaled(OMEGA) == GroupExpr.from_terms([(Q(), OMEGA)])
    with pytest.raises(GrammarError):
        group(Z()).scaled(OMEGA)


def test_gem_layers():
    x = GemExpr.from_layers({0: group(Z()), 2: ZERO, 3: group(Zmod(2))})
    assert x.degrees() == [0, 3]
    assert x[2] == ZERO and x[3] == group(Zmod(2))
    assert x.shifted(-1).degrees() == [-1, 2]
    assert (x + x)[0] == 2 * group(Z())
    assert GemExpr.from_layers([(1, group(Q())), (1, group(Z()))])[1] == group(Z(), Q())
