"""Parity gradings of finite rings: R = R0 (+) R1 with R0R0, R1R1 <= R0 and
R0R1 <= R1.

A GradedRing wraps a FiniteRing plus the validated even/odd parts.  The even
part is materialized as a FiniteRing of its own (``r0_ring``) so that all the
classical ideal machinery applies to it directly; when the grading is trivial
(R1 = 0) the even ring *is* the ambient ring object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    GradingAxiomError,
    GradingDecompositionError,
    InvalidModuleError,
    InvalidParameterError,
    NotStronglyGradedError,
    TheoremViolationError,
)
from .rings import (
    FiniteRing,
    Ideal,
    RingElement,
    _same_ring,
    additive_closure,
    as_code,
    _check_bound,
    ideal_from_members,
    ideal_members,
    is_ideal_set,
    poly_quotient,
    zmod,
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise TheoremViolationError(message)


class GradedRing:
    """A finite ring with a validated parity decomposition."""

    def __init__(self, ring: FiniteRing, r0: frozenset, r1: frozenset,
                 provenance: str, decomposition: dict):
        self.ring = ring
        self.r0 = r0
        self.r1 = r1
        self.provenance = provenance
        self._decomposition = decomposition  # ambient code -> (even, odd) codes
        self._cache: dict = {}
        if len(r0) == ring.size:
            self.r0_ring = ring
            self._r0_embed = tuple(range(ring.size))
            self._r0_index = {c: c for c in range(ring.size)}
        else:
            codes = sorted(r0)
            index = {c: k for k, c in enumerate(codes)}
            add = tuple(tuple(index[ring.add[a][b]] for b in codes) for a in codes)
            mul = tuple(tuple(index[ring.mul[a][b]] for b in codes) for a in codes)
            names = tuple(ring.names[c] for c in codes)
            self.r0_ring = FiniteRing(
                len(codes), add, mul, index[ring.zero], index[ring.one],
                f"even part of {provenance}", names)
            self._r0_embed = tuple(codes)
            self._r0_index = index

    def __repr__(self):
        return f"GradedRing({self.provenance}, |R0|={len(self.r0)}, |R1|={len(self.r1)})"

    def parts(self, value) -> tuple[int, int]:
        """Even/odd component codes of an ambient element."""
        return self._decomposition[as_code(self.ring, value)]

    def to_r0(self, ambient_code: int) -> int:
        return self._r0_index[ambient_code]

    def from_r0(self, r0_code: int) -> int:
        return self._r0_embed[r0_code]

    def embed_ideal(self, ideal: Ideal) -> frozenset:
        """Member set of an even-part ideal as ambient codes."""
        _same_ring(self.r0_ring, ideal.ring)
        if self.r0_ring is self.ring:
            return ideal.members
        return frozenset(self._r0_embed[c] for c in ideal.members)

    def restrict_ideal(self, ambient_members: Iterable[int]) -> Ideal:
        """Even-part ideal from a set of ambient codes (must lie in R0)."""
        return ideal_from_members(
            self.r0_ring, (self._r0_index[c] for c in ambient_members))

    def homogeneous_codes(self) -> tuple:
        cached = self._cache.get("homogeneous")
        if cached is None:
            cached = tuple(sorted(self.r0 | self.r1))
            self._cache["homogeneous"] = cached
        return cached


def homogeneous_parts(g: GradedRing, x) -> tuple[RingElement, RingElement]:
    """The unique (even, odd) pair summing to x."""
    even, odd = g.parts(x)
    return RingElement(g.ring, even), RingElement(g.ring, odd)


# ---------------------------------------------------------------------------
# construction and validation


def _validate_grading(ring: FiniteRing, r0: frozenset, r1: frozenset) -> dict:
    add, mul = ring.add, ring.mul
    for part, tag in ((r0, "even"), (r1, "odd")):
        if ring.zero not in part:
            raise GradingDecompositionError(f"{tag} part does not contain 0")
        for a in part:
            row = add[a]
            for b in part:
                if row[b] not in part:
                    raise GradingDecompositionError(
                        f"{tag} part not closed under +: "
                        f"{ring.names[a]} + {ring.names[b]} = {ring.names[row[b]]}")
    overlap = (r0 & r1) - {ring.zero}
    if overlap:
        witness = min(overlap)
        raise GradingDecompositionError(
            f"parts intersect beyond 0, e.g. {ring.names[witness]}")
    decomposition = {}
    for a in r0:
        row = add[a]
        for b in r1:
            s = row[b]
            if s in decomposition:
                raise GradingDecompositionError(
                    f"{ring.names[s]} has two decompositions")
            decomposition[s] = (a, b)
    if len(decomposition) != ring.size:
        missing = min(c for c in range(ring.size) if c not in decomposition)
        raise GradingDecompositionError(
            f"{ring.names[missing]} has no even+odd decomposition")
    closures = (
        (r0, r0, r0, "even*even must be even"),
        (r0, r1, r1, "even*odd must be odd"),
        (r1, r1, r0, "odd*odd must be even"),
    )
    for left, right, target, message in closures:
        for a in left:
            row = mul[a]
            for b in right:
                if row[b] not in target:
                    raise GradingAxiomError(
                        f"{message}: {ring.names[a]} * {ring.names[b]}"
                        f" = {ring.names[row[b]]}")
    if ring.one not in r0:
        raise GradingAxiomError("1 is not in the even part")
    return decomposition


def grade_manual(ring: FiniteRing, r0: Iterable, r1: Iterable,
                 provenance: str | None = None) -> GradedRing:
    """Validate an explicit decomposition into even and odd parts."""
    fr0 = frozenset(as_code(ring, x) for x in r0)
    fr1 = frozenset(as_code(ring, x) for x in r1)
    decomposition = _validate_grading(ring, fr0, fr1)
    return GradedRing(ring, fr0, fr1,
                      provenance or f"{ring.provenance} (manual grading)",
                      decomposition)


def trivially_graded(ring: FiniteRing) -> GradedRing:
    """The grading with even part R and odd part 0."""
    return grade_manual(ring, range(ring.size), [ring.zero],
                        provenance=f"{ring.provenance} (trivially graded)")


@lru_cache(maxsize=None)
def _quadratic_cached(base: FiniteRing, alpha: int, symbol: str) -> GradedRing:
    modulus = (base.neg[alpha], base.zero, base.one)  # X^2 - alpha
    ring = poly_quotient(base, modulus, symbol)
    r0 = range(base.size)
    r1 = [c * base.size for c in range(base.size)]
    return grade_manual(ring, r0, r1, provenance=ring.provenance)


def quadratic_extension(base: FiniteRing, alpha, symbol: str = "x") -> GradedRing:
    """base[X]/(X^2 - alpha), graded by constants vs multiples of the root."""
    return _quadratic_cached(base, as_code(base, alpha), symbol)


def gaussian_integers(n: int) -> GradedRing:
    """Z/n[i] with i^2 = -1: the finite analogue of the Gaussian integers."""
    return quadratic_extension(zmod(n), -1, symbol="i")


@lru_cache(maxsize=None)
def _truncated_cached(base: FiniteRing, k: int) -> GradedRing:
    modulus = (base.zero,) * k + (base.one,)  # X^k
    ring = poly_quotient(base, modulus)
    even, odd = [], []
    for code in range(ring.size):
        vec = []
        c = code
        for _ in range(k):
            c, digit = divmod(c, base.size)
            vec.append(digit)
        if all(v == base.zero for v in vec[1::2]):
            even.append(code)
        if all(v == base.zero for v in vec[0::2]):
            odd.append(code)
    return grade_manual(ring, even, odd, provenance=ring.provenance)


def truncated_poly(base: FiniteRing, k: int) -> GradedRing:
    """base[X]/(X^k), graded by even vs odd monomial degrees."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidParameterError(f"truncation degree must be an integer >= 1, got {k!r}")
    return _truncated_cached(base, k)


@lru_cache(maxsize=None)
def _trivial_extension_cached(base: FiniteRing, orders: tuple) -> GradedRing:
    n = base.size
    radix = orders
    msize = 1
    for m in radix:
        msize *= m

    def mdecode(idx):
        out = []
        for m in radix:
            idx, t = divmod(idx, m)
            out.append(t)
        return tuple(out)

    def mencode(t):
        idx = 0
        for digit, m in zip(reversed(t), reversed(radix)):
            idx = idx * m + digit
        return idx

    def mname(t):
        if not radix:
            return "0"
        if len(radix) == 1:
            return str(t[0])
        return "(" + ",".join(str(d) for d in t) + ")"

    size = n * msize
    tuples = [mdecode(i) for i in range(msize)]

    def pack(r, midx):
        return r + n * midx

    add_rows = []
    mul_rows = []
    names = []
    for xc in range(size):
        xm, xr = divmod(xc, n)
        xt = tuples[xm]
        arow = []
        mrow = []
        for yc in range(size):
            ym, yr = divmod(yc, n)
            yt = tuples[ym]
            asum = tuple((a + b) % m for a, b, m in zip(xt, yt, radix))
            arow.append(pack((xr + yr) % n, mencode(asum)))
            act = tuple((xr * b + yr * a) % m for a, b, m in zip(xt, yt, radix))
            mrow.append(pack((xr * yr) % n, mencode(act)))
        add_rows.append(tuple(arow))
        mul_rows.append(tuple(mrow))
        names.append(f"({base.names[xr]},{mname(xt)})")

    mdesc = "(+)".join(f"Z/{m}" for m in radix) if radix else "0"
    ring = FiniteRing(size, tuple(add_rows), tuple(mul_rows), 0, 1,
                      f"trivial_extension({base.provenance}; {mdesc})",
                      tuple(names))
    r0 = [pack(r, 0) for r in range(n)]
    r1 = [pack(0, m) for m in range(msize)]
    return grade_manual(ring, r0, r1, provenance=ring.provenance)


def trivial_extension(base: FiniteRing, module_orders: Sequence[int]) -> GradedRing:
    """The square-zero extension of Z/n by the module (+) Z/m_i, m_i | n.

    Elements are pairs (r, m) with (r,m)(r',m') = (rr', rm' + r'm); the odd
    part is {(0, m)} and its square vanishes identically.
    """
    if base is not zmod(base.size):
        raise InvalidParameterError(
            f"trivial_extension base must be a zmod ring, got {base.provenance}")
    orders = tuple(module_orders)
    for m in orders:
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InvalidModuleError(f"module order must be a positive integer, got {m!r}")
        if base.size % m != 0:
            raise InvalidModuleError(
                f"module order {m} does not divide {base.size}")
    return _trivial_extension_cached(base, orders)


# ---------------------------------------------------------------------------
# submodules of the odd part


@dataclass(frozen=True, eq=False)
class Submodule:
    """An R0-submodule of R1 as a set of ambient codes."""

    graded_ring: GradedRing
    members: frozenset

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.graded_ring is other.graded_ring and self.members == other.members

    def __hash__(self):
        return hash((id(self.graded_ring), self.members))

    def __contains__(self, value) -> bool:
        return as_code(self.graded_ring.ring, value) in self.members

    @property
    def is_proper(self) -> bool:
        return self.members != self.graded_ring.r1

    def key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def label(self) -> str:
        gens = submodule_generators(self.graded_ring, self.members)
        if not gens:
            return "(0)"
        names = self.graded_ring.ring.names
        return "(" + ", ".join(names[x] for x in gens) + ")"

    def __repr__(self):
        return f"Submodule{self.label()} of {self.graded_ring.provenance}"


def cyclic_span(g: GradedRing, x: int) -> frozenset:
    """R0*x, already closed under addition by distributivity."""
    mul = g.ring.mul
    return frozenset(mul[a][x] for a in g.r0)


def submodule_members(g: GradedRing, gen_codes: Iterable[int]) -> frozenset:
    seeds = set()
    for x in gen_codes:
        seeds.update(cyclic_span(g, x))
    if not seeds:
        return frozenset({g.ring.zero})
    return additive_closure(g.ring, seeds)


def submodule_generate(g: GradedRing, gens: Iterable) -> Submodule:
    codes = []
    for x in gens:
        c = as_code(g.ring, x)
        if c not in g.r1:
            raise InvalidParameterError(
                f"{g.ring.names[c]} is not in the odd part")
        codes.append(c)
    return Submodule(g, submodule_members(g, codes))


def submodule_generators(g: GradedRing, members: frozenset) -> tuple:
    """Small deterministic generating set for a submodule member set."""
    gens: tuple = ()
    span = frozenset({g.ring.zero})
    for x in sorted(members):
        if x not in span:
            gens = gens + (x,)
            span = submodule_members(g, gens)
            if span == members:
                break
    return gens


def is_submodule_set(g: GradedRing, members: frozenset) -> bool:
    """Check additive closure and R0-stability of a subset of R1."""
    if g.ring.zero not in members or not members <= g.r1:
        return False
    add, mul = g.ring.add, g.ring.mul
    for x in members:
        if any(add[x][y] not in members for y in members):
            return False
        if any(mul[a][x] not in members for a in g.r0):
            return False
    return True


def submodules(g: GradedRing, bound: int | None = None) -> list[Submodule]:
    """All R0-submodules of R1, canonically ordered (same BFS as ideals)."""
    _check_bound(g.ring, bound, f"submodule enumeration in {g.provenance}")
    cached = g._cache.get("submodules")
    if cached is not None:
        return cached
    add = g.ring.add
    spans = {}
    for x in sorted(g.r1):
        spans.setdefault(cyclic_span(g, x), x)
    extensions = sorted(spans.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    zero_members = frozenset({g.ring.zero})
    found = {zero_members}
    queue = [zero_members]
    while queue:
        current = queue.pop()
        for span, x in extensions:
            if x in current:
                continue
            bigger = frozenset(add[a][b] for a in current for b in span)
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    result = sorted((Submodule(g, m) for m in found), key=Submodule.key)
    g._cache["submodules"] = result
    return result


def residual(g: GradedRing, rp: Submodule) -> Ideal:
    """(R' : R1) = {a in R0 : a*R1 <= R'}, as an ideal of the even ring."""
    if rp.graded_ring is not g:
        raise InvalidParameterError("submodule belongs to a different graded ring")
    mul = g.ring.mul
    members = [
        a for a in g.r0
        if all(mul[a][x] in rp.members for x in g.r1)
    ]
    ideal = g.restrict_ideal(members)
    _require(is_ideal_set(g.r0_ring, ideal.members),
             "residual is not an ideal of the even part")
    return ideal


# ---------------------------------------------------------------------------
# products of the odd part and the strong-grading predicate


def r1_squared(g: GradedRing) -> Ideal:
    """The ideal of R0 generated by all products of two odd elements."""
    cached = g._cache.get("r1_squared")
    if cached is None:
        mul = g.ring.mul
        products = {mul[x][y] for x in g.r1 for y in g.r1}
        members = ideal_members(
            g.r0_ring, (g.to_r0(p) for p in products))
        cached = ideal_from_members(g.r0_ring, members)
        g._cache["r1_squared"] = cached
    return cached


def r1_cubed(g: GradedRing) -> Submodule:
    """The submodule (R1^2) * R1 of the odd part."""
    cached = g._cache.get("r1_cubed")
    if cached is None:
        mul = g.ring.mul
        sq = g.embed_ideal(r1_squared(g))
        products = {mul[a][x] for a in sq for x in g.r1}
        cached = Submodule(g, additive_closure(g.ring, products))
        g._cache["r1_cubed"] = cached
    return cached


def is_strongly_graded(g: GradedRing) -> bool:
    """True when the square of the odd part is the whole even part."""
    return len(r1_squared(g).members) == g.r0_ring.size


def strong_grading_certificate(g: GradedRing) -> tuple:
    """Pairs (a_i, b_i) of odd elements with sum(a_i * b_i) = 1.

    Found by breadth-first search over reachable sums of pair products; the
    returned first components generate the odd part over R0 (verified).
    """
    if not is_strongly_graded(g):
        raise NotStronglyGradedError(
            f"{g.provenance}: odd part squared is a proper ideal")
    ring = g.ring
    add, mul = ring.add, ring.mul
    products: dict[int, tuple[int, int]] = {}
    for a in sorted(g.r1):
        for b in sorted(g.r1):
            products.setdefault(mul[a][b], (a, b))
    reach: dict[int, tuple] = {ring.zero: ()}
    queue = [ring.zero]
    while queue and ring.one not in reach:
        v = queue.pop(0)
        for value, pair in products.items():
            s = add[v][value]
            if s not in reach:
                reach[s] = reach[v] + (pair,)
                queue.append(s)
    _require(ring.one in reach, "unit not reachable despite strong grading")
    pairs = reach[ring.one]
    span = submodule_members(g, [a for a, _ in pairs])
    _require(span == g.r1, "certificate components do not generate the odd part")
    return tuple(
        (RingElement(ring, a), RingElement(ring, b)) for a, b in pairs)


# ---------------------------------------------------------------------------
# matrix picture


@dataclass(frozen=True)
class Matrix2:
    """2x2 matrix over a FiniteRing (codes), with ring-matrix + and *."""

    ring: FiniteRing
    entries: tuple  # ((a, b), (c, d)) codes

    def __add__(self, other: "Matrix2") -> "Matrix2":
        _same_ring(self.ring, other.ring)
        add = self.ring.add
        (a, b), (c, d) = self.entries
        (e, f), (h, k) = other.entries
        return Matrix2(self.ring, ((add[a][e], add[b][f]), (add[c][h], add[d][k])))

    def __mul__(self, other: "Matrix2") -> "Matrix2":
        _same_ring(self.ring, other.ring)
        add, mul = self.ring.add, self.ring.mul
        (a, b), (c, d) = self.entries
        (e, f), (h, k) = other.entries
        return Matrix2(self.ring, (
            (add[mul[a][e]][mul[b][h]], add[mul[a][f]][mul[b][k]]),
            (add[mul[c][e]][mul[d][h]], add[mul[c][f]][mul[d][k]]),
        ))

    def __repr__(self):
        names = self.ring.names
        (a, b), (c, d) = self.entries
        return f"[[{names[a]}, {names[b]}], [{names[c]}, {names[d]}]]"


def matrix_rep(g: GradedRing, x) -> Matrix2:
    """x = x0 + x1 as the symmetric matrix [[x0, x1], [x1, x0]].

    The map is an injective ring homomorphism onto the matrices of this shape.
    """
    even, odd = g.parts(x)
    return Matrix2(g.ring, ((even, odd), (odd, even)))
