"""Bousfield localization of stable GEMs, computed from acyclicity profiles."""

from .engine import arithmetic_corners, localize_atom, localize_em, localize_gem, localize_mod_p_em
from .errors import GemlocError, GrammarError, ParseError
from .functors import (
    ext_prufer, hom_prufer, is_uniquely_p_divisible, mod_p_pair, support_primes, tensor_q,
)
from .groups import (
    OMEGA, AdicInt, AdicProd, AdicProdQ, AdicRat, Cyclic, GemExpr, GroupExpr, Prufer, PruferSum,
    Q, Z, ZLocAt, Zmod, cyclic, direct_sum, group, iso_equal, normalize,
)
from .primes import ALL, EMPTY, PrimeSet
from .spectra import (
    AcyclicityProfile, Pattern, em_equivalent, pattern_of, profile_of_em, profile_of_named,
)
from .textio import parse_gem, parse_group, parse_primeset, parse_spectrum, render_gem, render_group

__version__ = "0.1.0"
