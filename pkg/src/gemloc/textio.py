"""Text syntax for prime sets, groups, GEMs and spectra.

Groups::

    0   Z   Z/8   Z/12   Q   Z_({2,3})   Zhat_5   Qhat_5   Z/5^inf
    PruferSum(all\\{2})   AdicProd(all)   AdicProdQ(all\\{2})

joined by ``+``; a term may carry a multiplicity ``^n``, or ``^w`` on ``Q``.
Note that ``Z/2^3`` is three copies of ``Z/2``; the cyclic group of order 8
is written ``Z/8``. Parentheses group a sub-sum: ``(Z + Z/2)^2``.

GEMs are wedges ``H(G0) v Σ^1 H(G1) v ...``; ``S^k`` and ``Sigma^k`` are
accepted for ``Σ^k``, and ``0`` is the zero spectrum.

Whitespace is ignored between tokens.
"""

from __future__ import annotations

import json
import re

from .errors import GemlocError, GrammarError, ParseError
from .groups import (
    OMEGA, AdicInt, AdicProd, AdicProdQ, AdicRat, Atom, Cyclic, GemExpr, GroupExpr, Prufer,
    PruferSum, Q, Z, ZLocAt, Zmod,
)
from .primes import PrimeSet, check_prime
from .spectra import AcyclicityProfile, profile_of_em, profile_of_named

_WORD = re.compile(r"[A-Za-z]+")
_INT = re.compile(r"-?[0-9]+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, s: str) -> bool:
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            self.fail(f"expected {s!r}")

    def fail(self, message: str, position: int | None = None, cls=ParseError):
        pos = self.pos if position is None else position
        found = self.text[pos:pos + 12] or "end of input"
        raise cls(f"{message}, found {found!r}", pos)

    def word(self) -> tuple[str, int]:
        self.skip_ws()
        m = _WORD.match(self.text, self.pos)
        if not m:
            self.fail("expected a name")
        self.pos = m.end()
        return m.group(), m.start()

    def integer(self, *, signed: bool = False) -> tuple[int, int]:
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m or (not signed and m.group().startswith("-")):
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group()), m.start()

    def prime(self) -> int:
        p, start = self.integer()
        try:
            return check_prime(p)
        except GrammarError:
            self.fail(f"{p} is not prime", start)

    def finish(self):
        if not self.at_end():
            self.fail("unexpected trailing input")


def _primeset(sc: _Scanner) -> PrimeSet:
    if sc.accept("all"):
        if sc.accept("\\"):
            return ~_finite_primeset(sc)
        return PrimeSet.all_except()
    return _finite_primeset(sc)


def _finite_primeset(sc: _Scanner) -> PrimeSet:
    sc.expect("{")
    primes = []
    if not sc.accept("}"):
        primes.append(sc.prime())
        while sc.accept(","):
            primes.append(sc.prime())
        sc.expect("}")
    return PrimeSet.finite(primes)


def _atom_terms(sc: _Scanner) -> tuple[list, int]:
    """Parse one atom (or parenthesized sum); returns raw terms and start position."""
    sc.skip_ws()
    start = sc.pos
    if sc.accept("("):
        inner = _sum(sc)
        sc.expect(")")
        return list(inner), start
    if sc.accept("0"):
        return [], start
    name, start = sc.word()
    match name:
        case "Z":
            if sc.accept("/"):
                n, nstart = sc.integer()
                if sc.accept("^inf"):
                    try:
                        return [(Prufer(check_prime(n)), 1)], start
                    except GrammarError:
                        sc.fail(f"Z/{n}^inf needs a prime base", nstart)
                if n < 2:
                    sc.fail(f"Z/{n} is not allowed; moduli must be >= 2", nstart)
                return [(Cyclic(n), 1)], start
            if sc.accept("_"):
                sc.expect("(")
                primes = _primeset(sc)
                sc.expect(")")
                return [(ZLocAt(primes), 1)], start
            return [(Z(), 1)], start
        case "Q":
            return [(Q(), 1)], start
        case "Zhat" | "Qhat":
            sc.expect("_")
            p = sc.prime()
            return [((AdicInt if name == "Zhat" else AdicRat)(p), 1)], start
        case "PruferSum" | "AdicProd" | "AdicProdQ":
            cls = {"PruferSum": PruferSum, "AdicProd": AdicProd, "AdicProdQ": AdicProdQ}[name]
            sc.expect("(")
            primes = _primeset(sc)
            sc.expect(")")
            return [(cls(primes), 1)], start
    sc.fail(f"unknown group atom {name!r}", start)


def _term(sc: _Scanner) -> list:
    terms, start = _atom_terms(sc)
    if sc.accept("^"):
        sc.skip_ws()
        mstart = sc.pos
        if sc.accept("w") or sc.accept("ω"):
            if not all(isinstance(a, Q) for a, _ in terms):
                sc.fail("infinite multiplicity is only allowed on Q", mstart, GrammarError)
            return [(a, OMEGA) for a, _ in terms]
        n, _ = sc.integer()
        return [(a, m * n) for a, m in terms]
    return terms


def _sum(sc: _Scanner) -> list:
    terms = _term(sc)
    while sc.accept("+"):
        terms += _term(sc)
    return terms


def _build(sc: _Scanner, terms, start: int) -> GroupExpr:
    try:
        return GroupExpr.from_terms(terms)
    except GrammarError as e:
        raise GrammarError(e.message, start) from None


def _group(sc: _Scanner) -> GroupExpr:
    sc.skip_ws()
    start = sc.pos
    return _build(sc, _sum(sc), start)


def parse_primeset(text: str) -> PrimeSet:
    sc = _Scanner(text)
    out = _primeset(sc)
    sc.finish()
    return out


def parse_group(text: str) -> GroupExpr:
    sc = _Scanner(text)
    out = _group(sc)
    sc.finish()
    return out


def _suspension(sc: _Scanner) -> int | None:
    """Parse an optional ``Σ^k`` prefix; ``None`` when absent."""
    sc.skip_ws()
    rest = sc.text[sc.pos:]
    for prefix in ("Σ", "Sigma", "S"):
        if rest.startswith(prefix):
            after = rest[len(prefix):]
            if prefix == "S" and not after[:1] in ("^", " ", "\t"):
                continue
            sc.pos += len(prefix)
            if sc.accept("^"):
                k, _ = sc.integer(signed=True)
                return k
            return 1
    return None


def parse_gem(text: str) -> GemExpr:
    """Parse a wedge of suspended Eilenberg-Mac Lane spectra."""
    sc = _Scanner(text)
    if sc.peek("0"):
        sc.accept("0")
        sc.finish()
        return GemExpr()
    layers = []
    while True:
        k = _suspension(sc) or 0
        sc.expect("H(")
        layers.append((k, _group(sc)))
        sc.expect(")")
        if not (sc.accept("v") or sc.accept("∨") or sc.accept("\\/")):
            break
    sc.finish()
    return GemExpr.from_layers(layers)


def parse_spectrum(text: str) -> AcyclicityProfile:
    """Parse a spectrum name, ``H(G)``/``M(G)``, or an explicit ``profile(...)``."""
    sc = _Scanner(text)
    name, start = sc.word()
    if name in ("H", "M") and sc.peek("("):
        sc.expect("(")
        g = _group(sc)
        sc.expect(")")
        out = profile_of_em(g)
    elif name in ("K", "E") and sc.peek("("):
        sc.expect("(")
        n, nstart = sc.integer()
        sc.expect(")")
        try:
            out = profile_of_named(name, n)
        except GrammarError as e:
            sc.fail(e.message, nstart)
    elif name == "profile":
        out = _profile_body(sc)
    elif name in ("S", "Sphere", "HZ", "MZ", "HQ", "MQ", "KU"):
        out = profile_of_named(name)
    else:
        sc.fail(f"unknown spectrum {name!r}", start)
    sc.finish()
    return out


def _profile_body(sc: _Scanner) -> AcyclicityProfile:
    sc.expect("(")
    fields = {}
    while True:
        key, kstart = sc.word()
        sc.expect("=")
        if key == "rational":
            value, vstart = sc.word()
            if value not in ("yes", "no"):
                sc.fail("rational must be yes or no", vstart)
            fields[key] = value == "yes"
        elif key == "primes":
            fields[key] = _primeset(sc)
        else:
            sc.fail(f"unknown profile field {key!r}", kstart)
        if not sc.accept(","):
            break
    sc.expect(")")
    if set(fields) != {"rational", "primes"}:
        sc.fail("profile needs both rational= and primes=")
    return AcyclicityProfile(fields["rational"], fields["primes"])


def render_primeset(s: PrimeSet) -> str:
    return str(s)


def render_atom(a: Atom) -> str:
    match a:
        case Z():
            return "Z"
        case Q():
            return "Q"
        case Zmod(p, k):
            return f"Z/{p**k}"
        case Cyclic(n):
            return f"Z/{n}"
        case ZLocAt(s):
            return f"Z_({s})"
        case AdicInt(p):
            return f"Zhat_{p}"
        case AdicRat(p):
            return f"Qhat_{p}"
        case Prufer(p):
            return f"Z/{p}^inf"
        case PruferSum(s) | AdicProd(s) | AdicProdQ(s):
            return f"{type(a).__name__}({s})"
    raise TypeError(a)


def render_group(g: GroupExpr, render=render_atom) -> str:
    if g.is_zero():
        return "0"
    parts = []
    for atom, m in g:
        text = render(atom)
        if m == OMEGA:
            text += "^w"
        elif m != 1:
            text += f"^{m}"
        parts.append(text)
    return " + ".join(parts)


def render_gem(x: GemExpr, render=render_atom) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for k, g in x.layers:
        body = f"H({render_group(g, render)})"
        parts.append(body if k == 0 else f"Σ^{k} {body}")
    return " v ".join(parts)


def gem_to_json(x: GemExpr) -> dict[str, str]:
    return {str(k): render_group(g) for k, g in x.layers}


def gem_from_json(data: dict[str, str] | str) -> GemExpr:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return GemExpr.from_layers((int(k), parse_group(v)) for k, v in data.items())
    except ValueError as e:
        if isinstance(e, GemlocError):
            raise
        raise ParseError(f"bad GEM JSON: {e}") from None
