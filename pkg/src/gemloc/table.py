"""The summary table of ``L_E HG`` by acyclicity pattern, computed live.

The engine runs with concrete stand-ins for the symbols (``p = 2``,
``k = 3``, ``P = all\\{3}``, ``R = all\\{5}``) chosen so that no two symbolic
quantities coincide, and the cells are rendered back in symbolic form.
``p`` is taken inside ``P`` throughout, as the table presumes.
"""

from __future__ import annotations

from .engine import localize_em
from .groups import (
    AdicInt, AdicProd, AdicProdQ, AdicRat, Atom, GroupExpr, Prufer, PruferSum, Q, Z, ZLocAt,
    Zmod, group,
)
from .primes import EMPTY, PrimeSet
from .spectra import AcyclicityProfile, Pattern
from .textio import render_atom, render_gem

P_SAMPLE = PrimeSet.all_except(3)
R_SAMPLE = PrimeSet.all_except(5)
PRIME_SAMPLE = 2
EXPONENT_SAMPLE = 3

_SET_NAMES = {P_SAMPLE: "P", R_SAMPLE: "R", P_SAMPLE & R_SAMPLE: "P∩R"}

ROWS: list[tuple[str, GroupExpr]] = [
    ("HZ", group(Z())),
    ("HZ/p^k", group(Zmod(PRIME_SAMPLE, EXPONENT_SAMPLE))),
    ("HQ", group(Q())),
    ("HZ_R", group(ZLocAt(R_SAMPLE))),
    ("HZ/p^inf", group(Prufer(PRIME_SAMPLE))),
    ("HZhat_p", group(AdicInt(PRIME_SAMPLE))),
]

PATTERN_PROFILES: dict[Pattern, AcyclicityProfile] = {
    Pattern.I: AcyclicityProfile(False, EMPTY),
    Pattern.II: AcyclicityProfile(True, EMPTY),
    Pattern.III: AcyclicityProfile(False, P_SAMPLE),
    Pattern.IV: AcyclicityProfile(True, P_SAMPLE),
}


def _symbolic_atom(a: Atom) -> str:
    match a:
        case Zmod(p, k) if p == PRIME_SAMPLE and k == EXPONENT_SAMPLE:
            return "Z/p^k"
        case Prufer(p) if p == PRIME_SAMPLE:
            return "Z/p^inf"
        case AdicInt(p) if p == PRIME_SAMPLE:
            return "Zhat_p"
        case AdicRat(p) if p == PRIME_SAMPLE:
            return "Qhat_p"
        case ZLocAt(s) if s in _SET_NAMES:
            return f"Z_({_SET_NAMES[s]})"
        case PruferSum(s) | AdicProd(s) | AdicProdQ(s) if s in _SET_NAMES:
            return f"{type(a).__name__}({_SET_NAMES[s]})"
        case Z() | Q():
            return render_atom(a)
    raise ValueError(f"no symbolic rendering for {a!r}")


def table_cells() -> list[tuple[str, list[str]]]:
    return [
        (name, [render_gem(localize_em(prof, g), _symbolic_atom) for prof in PATTERN_PROFILES.values()])
        for name, g in ROWS
    ]


def render_table() -> str:
    header = "L_E X | " + " | ".join(f"Pattern {pat}" for pat in PATTERN_PROFILES)
    lines = [header]
    for name, cells in table_cells():
        lines.append(f"{name} | " + " | ".join(cells))
    return "\n".join(lines) + "\n"
