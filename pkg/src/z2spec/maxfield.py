"""Graded maximal ideals, graded local/domain/field predicates, the quadratic
presentation of graded fields, and the even-part norm.

The norm of x = x0 + x1 is N(x) = x0^2 - x1^2, a degree-0 element; it is
multiplicative, and the ambient ring is an integral domain exactly when it is
a graded domain and N vanishes only at 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidInputError, NotGradedFieldError
from .graded_ideals import (
    GradedIdeal,
    enumerate_graded_ideals,
    graded_ideal_from_ideal,
)
from .grading import (
    GradedRing,
    Submodule,
    _require,
    cyclic_span,
    is_strongly_graded,
    quadratic_extension,
    r1_cubed,
    r1_squared,
    residual,
    submodules,
)
from .rings import (
    RingElement,
    as_code,
    classify_ideal,
    is_field,
    max_spec,
    prime_violation,
)
from .spectrum import is_prime_submodule

_SAMPLE_SEED = 20260810
_EXHAUSTIVE_LIMIT = 64
_SAMPLE_PAIRS = 10_000


def is_graded_maximal(g: GradedRing, j: GradedIdeal,
                      bound: int | None = None) -> bool:
    """Proper, with no graded ideal strictly between it and the whole ring."""
    if j.graded_ring is not g:
        raise InvalidInputError("graded ideal belongs to a different graded ring")
    if not j.is_proper:
        return False
    return not any(
        j.flat_members < k.flat_members and k.is_proper
        for k in enumerate_graded_ideals(g, bound)
    )


def graded_max(g: GradedRing, method: str = "definitional",
               bound: int | None = None) -> list[GradedIdeal]:
    """Graded maximal ideals, definitionally or by the two-branch recipe:
    (p, R1) for maximal p containing R1^2, else (p, p*R1)."""
    if method == "definitional":
        result = [j for j in enumerate_graded_ideals(g, bound)
                  if is_graded_maximal(g, j, bound)]
    elif method == "constructive":
        sq = r1_squared(g).members
        result = []
        for p in max_spec(g.r0_ring, bound):
            if sq <= p.members:
                result.append(GradedIdeal(g, p, Submodule(g, g.r1)))
            else:
                result.append(graded_ideal_from_ideal(g, p))
    else:
        raise InvalidInputError(f"unknown method: {method!r}")
    result.sort(key=GradedIdeal.key)
    return result


@dataclass(frozen=True)
class MaximalSubmoduleReport:
    """Maximal submodules vs maximal residuals, over every submodule not
    containing R1^3."""

    applicable_count: int
    passed: bool
    witness: str | None


def maximal_submodule_check(g: GradedRing,
                            bound: int | None = None) -> MaximalSubmoduleReport:
    subs = submodules(g, bound)
    cube = r1_cubed(g).members
    applicable = [rp for rp in subs if not cube <= rp.members]
    if not applicable:
        return MaximalSubmoduleReport(0, True, "no applicable submodules")
    proper = [rp for rp in subs if rp.is_proper]
    for rp in applicable:
        is_max_sub = rp.is_proper and not any(
            rp.members < other.members for other in proper)
        res = residual(g, rp)
        res_max = classify_ideal(g.r0_ring, res, bound).is_maximal
        if is_max_sub != res_max:
            return MaximalSubmoduleReport(
                len(applicable), False,
                f"{rp.label()}: maximal-submodule={is_max_sub},"
                f" residual-maximal={res_max}")
        if is_max_sub:
            span = graded_ideal_from_ideal(g, res).r_part
            if span.members != rp.members:
                return MaximalSubmoduleReport(
                    len(applicable), False,
                    f"{rp.label()} is not residual*R1")
    return MaximalSubmoduleReport(len(applicable), True, None)


def is_graded_local(g: GradedRing, bound: int | None = None) -> bool:
    """Exactly one graded maximal ideal; agrees with R0 being local."""
    local = len(graded_max(g, "definitional", bound)) == 1
    base_local = len(max_spec(g.r0_ring, bound)) == 1
    _require(local == base_local,
             "graded-local must agree with the even part being local")
    return local


def is_graded_domain(g: GradedRing, method: str = "definitional") -> bool:
    """No nonzero homogeneous zero divisors.

    Structurally: either the odd part vanishes and R0 is a domain, or 0 is a
    prime submodule of R1 with zero residual and R1^3 != 0.
    """
    zero = g.ring.zero
    if method == "definitional":
        mul = g.ring.mul
        homogeneous = [c for c in g.homogeneous_codes() if c != zero]
        return all(mul[r][s] != zero
                   for i, r in enumerate(homogeneous) for s in homogeneous[i:])
    if method == "structural":
        if g.r1 == {zero}:
            return prime_violation(g.r0_ring, frozenset({g.r0_ring.zero})) is None
        zero_sub = Submodule(g, frozenset({zero}))
        return (is_prime_submodule(g, zero_sub)
                and residual(g, zero_sub).members == {g.r0_ring.zero}
                and r1_cubed(g).members != {zero})
    raise InvalidInputError(f"unknown method: {method!r}")


def is_graded_field(g: GradedRing, method: str = "definitional") -> bool:
    """Every nonzero homogeneous element is invertible in the ambient ring.

    Structurally: R0 is a field and the odd part either vanishes or has a
    nonzero square.
    """
    if method == "definitional":
        return all(
            g.ring.is_unit(c)
            for c in g.homogeneous_codes() if c != g.ring.zero
        )
    if method == "structural":
        if not is_field(g.r0_ring):
            return False
        if g.r1 == {g.ring.zero}:
            return True
        return r1_squared(g).members != {g.r0_ring.zero}
    raise InvalidInputError(f"unknown method: {method!r}")


@dataclass(frozen=True)
class GradedFieldPresentation:
    """R identified with R0[X]/(X^2 - alpha) by c0 + c1*b -> c0 + c1*X."""

    b: RingElement            # odd generator in the ambient ring
    alpha: RingElement        # b^2 as an element of the even ring
    target: GradedRing        # quadratic_extension(R0, alpha)
    iso_table: tuple          # ambient code -> target code


def graded_field_presentation(g: GradedRing,
                              bound: int | None = None) -> GradedFieldPresentation:
    """Reconstruct a graded field with nonzero odd part in quadratic form.

    Picks the first odd b (in code order) with b^2 != 0; such b exists and
    generates the odd part over R0.  The element map is verified to be a
    grading-preserving ring isomorphism.
    """
    if not is_graded_field(g):
        raise NotGradedFieldError(f"{g.provenance} is not a graded field")
    zero = g.ring.zero
    if g.r1 == {zero}:
        raise NotGradedFieldError(
            f"{g.provenance} has zero odd part; no quadratic presentation")
    mul, add = g.ring.mul, g.ring.add
    b = next(x for x in sorted(g.r1) if x != zero and mul[x][x] != zero)
    _require(cyclic_span(g, b) == g.r1, "b must generate the odd part")
    alpha_code = g.to_r0(mul[b][b])
    target = quadratic_extension(g.r0_ring, alpha_code)
    n = g.r0_ring.size
    table = [None] * g.ring.size
    for c0 in range(n):
        for c1 in range(n):
            source = add[g.from_r0(c0)][mul[g.from_r0(c1)][b]]
            _require(table[source] is None, "element map must be injective")
            table[source] = c0 + c1 * n
    iso = tuple(table)
    tadd, tmul = target.ring.add, target.ring.mul
    for x in range(g.ring.size):
        for y in range(g.ring.size):
            _require(iso[add[x][y]] == tadd[iso[x]][iso[y]], "map must preserve +")
            _require(iso[mul[x][y]] == tmul[iso[x]][iso[y]], "map must preserve *")
    _require({iso[c] for c in g.r0} == target.r0, "map must preserve degree 0")
    _require({iso[c] for c in g.r1} == target.r1, "map must preserve degree 1")
    return GradedFieldPresentation(
        RingElement(g.ring, b), RingElement(g.r0_ring, alpha_code), target, iso)


def _norm_code(g: GradedRing, code: int) -> int:
    even, odd = g.parts(code)
    mul, add, neg = g.ring.mul, g.ring.add, g.ring.neg
    return add[mul[even][even]][neg[mul[odd][odd]]]


def norm(g: GradedRing, x) -> RingElement:
    """N(x0 + x1) = x0^2 - x1^2, landing in the even part."""
    value = _norm_code(g, as_code(g.ring, x))
    _require(value in g.r0, "norm must land in the even part")
    return RingElement(g.r0_ring, g.to_r0(value))


def norm_set(g: GradedRing) -> frozenset:
    """Ambient codes with vanishing norm."""
    zero = g.ring.zero
    return frozenset(
        c for c in range(g.ring.size) if _norm_code(g, c) == zero)


@dataclass(frozen=True)
class DomainEquivalenceReport:
    """Flat integrality vs (graded domain and trivial norm kernel)."""

    is_domain: bool
    is_graded_domain: bool
    norm_kernel_trivial: bool
    equivalence_holds: bool
    norm_multiplicative: bool
    pairs_checked: int
    sampled: bool
    witness: str | None


def domain_equivalence_check(g: GradedRing) -> DomainEquivalenceReport:
    ring = g.ring
    flat_domain = prime_violation(ring, frozenset({ring.zero})) is None
    graded_domain = is_graded_domain(g)
    kernel_trivial = norm_set(g) == {ring.zero}
    equivalence = flat_domain == (graded_domain and kernel_trivial)

    norms = [_norm_code(g, c) for c in range(ring.size)]
    mul = ring.mul
    witness = None
    if ring.size <= _EXHAUSTIVE_LIMIT:
        pairs = ((x, y) for x in range(ring.size) for y in range(ring.size))
        count = ring.size * ring.size
        sampled = False
    else:
        rng = random.Random(_SAMPLE_SEED)
        pairs = ((rng.randrange(ring.size), rng.randrange(ring.size))
                 for _ in range(_SAMPLE_PAIRS))
        count = _SAMPLE_PAIRS
        sampled = True
    multiplicative = True
    for x, y in pairs:
        if norms[mul[x][y]] != mul[norms[x]][norms[y]]:
            multiplicative = False
            witness = f"N({ring.names[x]} * {ring.names[y]}) != N*N"
            break
    if witness is None and not equivalence:
        witness = (f"domain={flat_domain}, graded domain={graded_domain},"
                   f" trivial norm kernel={kernel_trivial}")
    return DomainEquivalenceReport(
        flat_domain, graded_domain, kernel_trivial, equivalence,
        multiplicative, count, sampled, witness)


def strongly_graded_domain_matches_base(g: GradedRing) -> bool:
    """For strong gradings: graded domain iff the even part is a domain."""
    if not is_strongly_graded(g):
        raise InvalidInputError(
            f"{g.provenance} is not strongly graded")
    base_domain = prime_violation(g.r0_ring, frozenset({g.r0_ring.zero})) is None
    return is_graded_domain(g) == base_domain
