"""Seeded random corpora and the property suites behind ``gemloc check``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .engine import localize_em, localize_gem, localize_mod_p_em
from .functors import ext_prufer, hom_prufer, mod_p_pair, tensor_q
from .groups import (
    OMEGA, AdicInt, AdicProd, AdicProdQ, AdicRat, Cyclic, GemExpr, GroupExpr, Prufer, PruferSum,
    Q, Z, ZLocAt, direct_sum,
)
from .oracle import (
    FgPresentation, check_ext_consistency, check_hom_vanishing, determinant, fg_invariants,
    invariant_factors_by_minors, matmul, smith_normal_form,
)
from .primes import PrimeSet, primes_up_to
from .spectra import AcyclicityProfile
from .textio import parse_gem, parse_group, render_gem, render_group

SMALL_PRIMES = primes_up_to(13)
SUITES = ("functors-oracle", "idempotence", "homology", "degrees", "roundtrip", "all")


def random_primeset(rng: random.Random) -> PrimeSet:
    picked = rng.sample(SMALL_PRIMES, rng.randint(0, 3))
    return PrimeSet(rng.random() < 0.5, tuple(sorted(picked)))


def random_atom(rng: random.Random):
    p = rng.choice(SMALL_PRIMES)
    return rng.choice([
        lambda: Z(),
        lambda: Cyclic(rng.randint(2, 60)),
        lambda: Q(),
        lambda: ZLocAt(random_primeset(rng)),
        lambda: AdicInt(p),
        lambda: AdicRat(p),
        lambda: Prufer(p),
        lambda: PruferSum(random_primeset(rng)),
        lambda: AdicProd(random_primeset(rng)),
        lambda: AdicProdQ(random_primeset(rng)),
    ])()


def random_group(rng: random.Random, max_terms: int = 4) -> GroupExpr:
    terms = [(random_atom(rng), rng.randint(1, 3)) for _ in range(rng.randint(0, max_terms))]
    if rng.random() < 0.15:
        terms.append((Q(), OMEGA))
    return GroupExpr.from_terms(terms)


def random_profile(rng: random.Random) -> AcyclicityProfile:
    return AcyclicityProfile(rng.random() < 0.5, random_primeset(rng))


def random_gem(rng: random.Random) -> GemExpr:
    return GemExpr.from_layers(
        (rng.randint(-3, 4), random_group(rng, 3)) for _ in range(rng.randint(0, 3))
    )


def random_presentation(rng: random.Random, max_gens: int = 6, max_entry: int = 50) -> FgPresentation:
    gens = rng.randint(1, max_gens)
    rels = rng.randint(0, max_gens)
    rows = [[rng.randint(-max_entry, max_entry) for _ in range(gens)] for _ in range(rels)]
    return FgPresentation.from_rows(rows, gens)


def corpus(seed: int, count: int) -> list[tuple[AcyclicityProfile, GroupExpr]]:
    rng = random.Random(seed)
    return [(random_profile(rng), random_group(rng)) for _ in range(count)]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        self.failures.append(message)


# -- individual properties; each returns an error string or None ----------


def degree_violation(prof: AcyclicityProfile, g: GroupExpr) -> str | None:
    out = localize_em(prof, g)
    if not set(out.degrees()) <= {0, 1}:
        return f"{prof} on {g}: degrees {out.degrees()}"
    has_divisible_torsion = any(isinstance(a, (Prufer, PruferSum)) for a in g.atoms())
    if not has_divisible_torsion and out.degrees() not in ([], [0]):
        return f"{prof} on reduced-type {g}: degrees {out.degrees()}"
    return None


def idempotence_violation(prof: AcyclicityProfile, g: GroupExpr) -> str | None:
    out = localize_em(prof, g)
    for k, layer in out.layers:
        again = localize_em(prof, layer)
        if again != GemExpr.em(layer):
            return f"{prof} on {g}: layer {k} = {layer} relocalizes to {again}"
    return None


def graded_mod_p(x: GemExpr, p: int) -> dict[int, GroupExpr]:
    """Degree ``m`` part ``G_m/p ⊕ Tor(Z/p, G_{m-1})`` of ``HZ/p_* X``."""
    out = {}
    for k, g in x.layers:
        quotient, torsion = mod_p_pair(g, p)
        out[k] = out.get(k, GroupExpr()) + quotient
        out[k + 1] = out.get(k + 1, GroupExpr()) + torsion
    return {k: v for k, v in out.items() if v}


def homology_violation(prof: AcyclicityProfile, x: GemExpr) -> str | None:
    out = localize_gem(prof, x)
    for p in prof.nonacyclic_primes.members_up_to(50):
        if graded_mod_p(x, p) != graded_mod_p(out, p):
            return f"{prof} on {x}: mod-{p} homology differs from {out}"
    if prof.rational_nonacyclic and x.map(tensor_q) != out.map(tensor_q):
        return f"{prof} on {x}: rational homology differs from {out}"
    return None


def mod_p_reduction_violation(p: int, g: GroupExpr) -> str | None:
    lhs = localize_em(AcyclicityProfile(False, PrimeSet.of(p)), g)
    rhs = localize_mod_p_em(p, g)
    return None if lhs == rhs else f"p={p}, {g}: {lhs} != {rhs}"


def roundtrip_violation(g: GroupExpr, x: GemExpr) -> str | None:
    if parse_group(render_group(g)) != g:
        return f"group {render_group(g)} does not round-trip"
    if parse_gem(render_gem(x)) != x:
        return f"gem {render_gem(x)} does not round-trip"
    return None


def snf_violation(m: list[list[int]], ncols: int) -> str | None:
    d, u, v = smith_normal_form(m, ncols)
    rows = len(m)
    diag = matmul(matmul(u, m, ncols), v, ncols)
    if any(diag[i][j] != (d[i] if i == j else 0) for i in range(rows) for j in range(ncols)):
        return f"{m}: u·m·v is not diagonal"
    if abs(determinant(u)) != 1 or abs(determinant(v)) != 1:
        return f"{m}: transforms are not unimodular"
    if any(x < 0 for x in d) or any(d[i + 1] % d[i] if d[i] else d[i + 1] for i in range(len(d) - 1)):
        return f"{m}: diagonal {d} is not a divisibility chain"
    if rows == ncols == 4 and d != invariant_factors_by_minors(m):
        return f"{m}: {d} disagrees with determinantal divisors {invariant_factors_by_minors(m)}"
    return None


def fg_oracle_violation(pres: FgPresentation, p: int, depth: int) -> str | None:
    g = fg_invariants(pres).to_group()
    if not check_ext_consistency(ext_prufer(p, g), pres, p, depth):
        return f"{pres.relations}: Ext(Z/{p}^inf) tower mismatch"
    if not hom_prufer(p, g).is_zero():
        return f"{pres.relations}: Hom(Z/{p}^inf) nonzero on a finitely generated group"
    if not check_hom_vanishing(pres, p, depth):
        return f"{pres.relations}: Hom(Z/{p}^inf) vanishing not certified at depth {depth}"
    return None


# -- suites -----------------------------------------------------------------


def run_suite(
    name: str,
    *,
    count: int = 1000,
    seed: int = 0,
    depth: int = 8,
    max_gens: int = 6,
    max_entry: int = 50,
) -> list[SuiteResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = SUITES[:-1] if name == "all" else (name,)
    return [_run_one(n, count, seed, depth, max_gens, max_entry) for n in names]


def _run_one(name, count, seed, depth, max_gens, max_entry) -> SuiteResult:
    res = SuiteResult(name)
    rng = random.Random(seed)
    if name == "functors-oracle":
        for _ in range(count):
            pres = random_presentation(rng, max_gens, max_entry)
            err = snf_violation(pres.matrix(), pres.n_generators)
            for p in (2, 3, 5):
                err = err or fg_oracle_violation(pres, p, depth)
            res.checked += 1
            if err:
                res.fail(err)
        return res
    for prof, g in corpus(seed, count):
        match name:
            case "degrees":
                err = degree_violation(prof, g)
            case "idempotence":
                err = idempotence_violation(prof, g)
            case "homology":
                x = GemExpr.from_layers({0: g, 1: random_group(rng, 2)})
                err = homology_violation(prof, x)
            case "roundtrip":
                err = roundtrip_violation(direct_sum(g, random_group(rng)), random_gem(rng))
        res.checked += 1
        if err:
            res.fail(err)
    return res
