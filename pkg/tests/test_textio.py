import json

import pytest
from hypothesis import given, settings

from gemloc import (
    ALL, EMPTY, OMEGA, AcyclicityProfile, AdicInt, AdicProd, AdicProdQ, AdicRat, GemExpr,
    GroupExpr, PrimeSet, Prufer, PruferSum, Q, Z, ZLocAt, Zmod, group, parse_gem, parse_group,
    parse_primeset, parse_spectrum, render_gem, render_group,
)
from gemloc.errors import GrammarError, ParseError
from gemloc.textio import gem_from_json, gem_to_json

from strategies import gems, groups

# (parser, text, error class, offending token)
MALFORMED = [
    (parse_group, "Zhat_6", ParseError, "6"),
    (parse_group, "Qhat_x", ParseError, "x"),
    (parse_group, "Z/1", ParseError, "1"),
    (parse_group, "Z/0", ParseError, "0"),
    (parse_group, "Z + Zq", ParseError, "Zq"),
    (parse_group, "Z/6^inf", ParseError, "6"),
    (parse_group, "Z_({2,4})", ParseError, "4"),
    (parse_group, "AdicProd(all\\{9})", ParseError, "9"),
    (parse_group, "Z +", ParseError, None),
    (parse_group, "(Z + Z/2", ParseError, None),
    (parse_group, "Z + Q^2x", ParseError, "x"),
    (parse_group, "Z^w", GrammarError, "w"),
    (parse_group, "Z/2^inf^w", GrammarError, "w"),
    (parse_group, "(Q + Z)^ω", GrammarError, "ω"),
    (parse_gem, "H(Z) v", ParseError, None),
    (parse_gem, "H(Z", ParseError, None),
    (parse_gem, "Σ^x H(Z)", ParseError, "x"),
    (parse_gem, "H(Z) H(Q)", ParseError, "H(Q)"),
    (parse_gem, "H(Zhat_2^w)", GrammarError, "w"),
    (parse_spectrum, "KO", ParseError, "KO"),
    (parse_spectrum, "K(-1)", ParseError, "-1"),
    (parse_spectrum, "E(0)", ParseError, "0"),
    (parse_spectrum, "profile(rational=maybe, primes={2})", ParseError, "maybe"),
    (parse_spectrum, "profile(rational=yes, prime={2})", ParseError, "prime"),
    (parse_spectrum, "profile(rational=yes)", ParseError, None),
    (parse_primeset, "{2,3", ParseError, None),
    (parse_primeset, "{2,3} junk", ParseError, "junk"),
]


@pytest.mark.parametrize("parser, text, cls, token", MALFORMED)
def test_error_positions(parser, text, cls, token):
    with pytest.raises(cls) as info:
        parser(text)
    pos = info.value.position
    if token is None:
        assert pos == len(text)
    else:
        start = text.index(token)
        assert start <= pos < start + len(token), (pos, text)


def test_group_examples():
    assert parse_group("Z/12 + Q^w") == GroupExpr.from_terms(
        [(Zmod(2, 2), 1), (Zmod(3), 1), (Q(), OMEGA)]
    )
    assert parse_group("Z_({2,3})") == group(ZLocAt(PrimeSet.of(2, 3)))
    assert parse_group("0") == GroupExpr()
    assert parse_group(" Zhat_5+Qhat_5 + Z/5^inf ") == group(AdicInt(5), AdicRat(5), Prufer(5))
    assert parse_group("Z/2^3") == GroupExpr.from_terms([(Zmod(2), 3)])
    assert parse_group("(Z + Z/2)^2") == GroupExpr.from_terms([(Z(), 2), (Zmod(2), 2)])
    assert parse_group("PruferSum(all\\{2}) + AdicProd(all) + AdicProdQ({3,5})") == group(
        PruferSum(PrimeSet.all_except(2)), AdicProd(ALL), AdicRat(3), AdicRat(5),
    )


def test_primeset_examples():
    assert parse_primeset("all") == ALL
    assert parse_primeset("{}") == EMPTY
    assert parse_primeset("all\\{3, 2}") == PrimeSet.all_except(2, 3)
    assert parse_primeset("{ 5 ,2}") == PrimeSet.of(2, 5)


def test_spectrum_examples():
    assert parse_spectrum("K(1)") == AcyclicityProfile(False, EMPTY)
    assert parse_spectrum("M(Z/2)") == AcyclicityProfile(False, PrimeSet.of(2))
    assert parse_spectrum("profile(rational=no, primes=all\\{2})") == \
        AcyclicityProfile(False, PrimeSet.all_except(2))
    assert parse_spectrum("H(Z_({3}))") == AcyclicityProfile(True, PrimeSet.of(3))
    assert parse_spectrum("S") == parse_spectrum("Sphere") == AcyclicityProfile(True, ALL)
    assert parse_spectrum("E(2)") == parse_spectrum("KU") == parse_spectrum("HQ")


def test_gem_syntax_aliases():
    expected = GemExpr.from_layers({0: group(Z()), 2: group(Q()), -1: group(Zmod(3))})
    for text in (
        "H(Z) v Σ^2 H(Q) v Σ^-1 H(Z/3)",
        "H(Z) ∨ S^2 H(Q) ∨ Sigma^-1 H(Z/3)",
        "Σ^-1 H(Z/3) \\/ H(Z) v Sigma^2H(Q)",
    ):
        assert parse_gem(text) == expected
    assert parse_gem("Σ H(Z)") == GemExpr.em(group(Z()), 1)
    assert parse_gem("0") == GemExpr()


def test_render_examples():
    assert render_gem(GemExpr()) == "0"
    assert render_gem(GemExpr.from_layers({0: group(AdicInt(2)), 1: group(AdicInt(3))})) == \
        "H(Zhat_2) v Σ^1 H(Zhat_3)"
    assert render_gem(GemExpr.em(group(ZLocAt(PrimeSet.of(2))))) == "H(Z_({2}))"
    assert render_group(parse_group("Q^w + Z/8 + Z^2")) == "Z^2 + Z/8 + Q^w"


@settings(max_examples=1000)
@given(groups())
def test_group_round_trip(g):
    assert parse_group(render_group(g)) == g


@settings(max_examples=300)
@given(gems)
def test_gem_round_trip(x):
    text = render_gem(x)
    assert parse_gem(text) == x
    assert gem_from_json(json.dumps(gem_to_json(x), ensure_ascii=False)) == x


def test_json():
    x = GemExpr.from_layers({0: group(Z()), 1: group(AdicInt(2))})
    assert gem_to_json(x) == {"0": "Z", "1": "Zhat_2"}
    assert gem_from_json({"0": "Z", "1": "Zhat_2"}) == x
    with pytest.raises(ParseError):
        gem_from_json({"zero": "Z"})
    with pytest.raises(ParseError):
        gem_from_json({"0": "Zhat_4"})
