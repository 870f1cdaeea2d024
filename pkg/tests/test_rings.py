"""Core ring arithmetic, ideal enumeration, classification, radicals.

The brute-force oracles here work straight off the operation tables and never
call the library's ideal machinery, so they can disagree with it.
"""

import itertools

import pytest

from z2spec.errors import (
    EnumerationLimitError,
    InvalidParameterError,
    RingMismatchError,
)
from z2spec.rings import (
    Ideal,
    classify_ideal,
    enumerate_ideals,
    ideal_from_members,
    ideal_generate,
    is_field,
    max_spec,
    poly_quotient,
    product_ring,
    radical,
    spec,
    zmod,
)


def brute_force_ideals(ring):
    """All ideals by filtering every subset containing 0 (oracle)."""
    rest = [c for c in range(ring.size) if c != ring.zero]
    found = []
    for bits in range(2 ** len(rest)):
        members = {ring.zero}
        members.update(c for k, c in enumerate(rest) if bits >> k & 1)
        if all(ring.add[a][b] in members for a in members for b in members) and \
           all(ring.mul[r][a] in members for a in members for r in range(ring.size)):
            found.append(frozenset(members))
    return set(found)


def find_isomorphism(a, b):
    """Exhaustive search for a ring isomorphism (oracle; |a| <= 6)."""
    if a.size != b.size:
        return None
    for image in itertools.permutations(range(b.size)):
        if image[a.zero] != b.zero or image[a.one] != b.one:
            continue
        if all(image[a.add[x][y]] == b.add[image[x]][image[y]]
               and image[a.mul[x][y]] == b.mul[image[x]][image[y]]
               for x in range(a.size) for y in range(a.size)):
            return image
    return None


def test_zmod_basics():
    z2 = zmod(2)
    assert z2.size == 2 and z2.one == 1
    z6 = zmod(6)
    assert (z6(2) * z6(3)).code == 0
    assert zmod(6) is z6  # interned


def test_zmod_field_by_inverse_search():
    z5 = zmod(5)
    inverses = {}
    for a in range(1, 5):
        inverses[a] = [b for b in range(5) if z5.mul[a][b] == 1]
    assert all(len(v) == 1 for v in inverses.values())
    assert is_field(z5)
    assert not is_field(zmod(6))


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5, "6", True])
def test_zmod_rejects_bad_modulus(bad):
    with pytest.raises(InvalidParameterError):
        zmod(bad)


def test_gaussian_table():
    g = poly_quotient(zmod(4), (1, 0, 1), symbol="i")
    assert g.size == 16
    i = g(4)
    assert (i * i).code == 3  # i^2 = -1 = 3
    assert g.names[11] == "3+2i"


def test_poly_quotient_zero_divisor():
    q = poly_quotient(zmod(5), (-1, 0, 1))
    assert q.size == 25
    one_plus = q(6)   # 1 + x
    one_minus = q(21)  # 1 + 4x = 1 - x
    assert (one_plus * one_minus).code == 0


def test_poly_quotient_degree_one_is_base():
    q = poly_quotient(zmod(2), (0, 1))
    z2 = zmod(2)
    assert q.size == 2 and q.add == z2.add and q.mul == z2.mul


def test_poly_quotient_rejects_nonmonic():
    with pytest.raises(InvalidParameterError):
        poly_quotient(zmod(4), (1, 2))
    with pytest.raises(InvalidParameterError):
        poly_quotient(zmod(4), (1,))


def test_product_crt_isomorphism():
    p = product_ring(zmod(2), zmod(3))
    assert p.size == 6
    assert find_isomorphism(p, zmod(6)) is not None


def test_product_orthogonal_idempotents():
    p = product_ring(zmod(2), zmod(2))
    e1, e2 = p(2), p(1)  # (1,0) and (0,1)
    assert (e1 * e2).code == p.zero
    p55 = product_ring(zmod(5), zmod(5))
    assert p55.size == 25
    assert classify_ideal(p55, ideal_generate(p55, [])).is_prime is False


def test_ideal_generate():
    z6 = zmod(6)
    assert ideal_generate(z6, [2]).members == frozenset({0, 2, 4})
    assert ideal_generate(z6, []).members == frozenset({0})
    g = poly_quotient(zmod(4), (1, 0, 1), symbol="i")
    assert ideal_generate(g, [2, 8]).members == frozenset({0, 2, 8, 10})


def test_ideal_generate_rejects_foreign_elements():
    z6, z4 = zmod(6), zmod(4)
    with pytest.raises(RingMismatchError):
        ideal_generate(z6, [z4(2)])


def test_ideal_members_close_generators():
    z12 = zmod(12)
    for ideal in enumerate_ideals(z12):
        assert ideal_generate(z12, ideal.generators).members == ideal.members


def test_enumerate_ideals_zmod6():
    members = [sorted(i.members) for i in enumerate_ideals(zmod(6))]
    assert members == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]


def test_enumerate_ideals_counts():
    assert len(enumerate_ideals(zmod(5))) == 2
    assert len(enumerate_ideals(product_ring(zmod(2), zmod(2)))) == 4


@pytest.mark.parametrize("ring", [
    zmod(6), zmod(8), zmod(12),
    product_ring(zmod(2), zmod(2)),
    product_ring(zmod(2), zmod(3)),
    poly_quotient(zmod(2), (0, 0, 1)),
])
def test_enumerate_ideals_against_brute_force(ring):
    assert {i.members for i in enumerate_ideals(ring)} == brute_force_ideals(ring)


def test_enumerate_ideals_respects_bound():
    with pytest.raises(EnumerationLimitError) as err:
        enumerate_ideals(zmod(12), bound=6)
    assert "6" in str(err.value)


def test_classify_zmod6():
    z6 = zmod(6)
    two = ideal_generate(z6, [2])
    c = classify_ideal(z6, two)
    assert c.is_prime and c.is_maximal and c.is_radical


def test_classify_nilpotent_witness():
    z4 = zmod(4)
    c = classify_ideal(z4, ideal_generate(z4, []))
    assert not c.is_prime and c.prime_witness == (2, 2)


def test_classify_gaussian_ideal_not_prime():
    g = poly_quotient(zmod(4), (1, 0, 1), symbol="i")
    ideal = ideal_generate(g, [2, 8])
    c = classify_ideal(g, ideal)
    assert not c.is_prime
    # the named analogue witness: (1+i)(1-i) = 2 lies inside, both factors outside
    one_plus, one_minus = g(5), g(13)
    assert (one_plus * one_minus).code in ideal
    assert one_plus.code not in ideal and one_minus.code not in ideal


def test_classify_rejects_foreign_ideal():
    z6, z4 = zmod(6), zmod(4)
    with pytest.raises(RingMismatchError):
        classify_ideal(z4, ideal_generate(z6, [2]))


def test_radical():
    z4 = zmod(4)
    assert radical(z4, ideal_generate(z4, [])).members == frozenset({0, 2})
    z6 = zmod(6)
    assert radical(z6, ideal_generate(z6, [])).members == frozenset({0})
    whole = ideal_generate(z6, [1])
    assert radical(z6, whole).members == whole.members


def test_radical_is_intersection_of_primes():
    for ring in (zmod(12), poly_quotient(zmod(4), (1, 0, 1), symbol="i")):
        primes = spec(ring)
        for ideal in enumerate_ideals(ring):
            over = [p.members for p in primes if ideal.members <= p.members]
            expected = frozenset.intersection(*over) if over \
                else frozenset(range(ring.size))
            assert radical(ring, ideal).members == expected


def test_spec_and_max_spec():
    assert [sorted(p.members) for p in spec(zmod(6))] == [[0, 3], [0, 2, 4]]
    assert [sorted(p.members) for p in spec(zmod(4))] == [[0, 2]]
    assert [p.members for p in max_spec(zmod(5))] == [frozenset({0})]


def test_maximal_implies_prime_on_small_rings():
    for ring in (zmod(12), product_ring(zmod(2), zmod(3)),
                 poly_quotient(zmod(2), (0, 0, 1))):
        for ideal in enumerate_ideals(ring):
            c = classify_ideal(ring, ideal)
            if c.is_maximal:
                assert c.is_prime


def test_element_arithmetic_and_mismatch():
    z6 = zmod(6)
    a = z6(5)
    assert (a + 1).code == 0 and (-a).code == 1 and (a - 2).code == 3
    assert (a ** 2).code == 1 and (a ** 0).code == 1
    with pytest.raises(RingMismatchError):
        a + zmod(4)(1)
    with pytest.raises(InvalidParameterError):
        poly_quotient(zmod(2), (1, 1))(7)


def test_ideal_equality_ignores_generators():
    z6 = zmod(6)
    assert ideal_generate(z6, [2]) == ideal_generate(z6, [4, 2])
    assert ideal_generate(z6, [2]) != ideal_generate(z6, [3])
    assert ideal_generate(z6, [3]) < ideal_generate(z6, [1])
    assert ideal_generate(z6, [2]) <= ideal_generate(z6, [2])
    with pytest.raises(RingMismatchError):
        ideal_generate(z6, [2]) < ideal_generate(zmod(4), [2])


def test_ideal_from_members_reduces_generators():
    z12 = zmod(12)
    ideal = ideal_from_members(z12, [0, 2, 4, 6, 8, 10])
    assert ideal.generators == (2,)
    assert ideal.label() == "(2)"


def test_catalog_flat_ideals_satisfy_invariants():
    from z2spec.catalog import CATALOG
    from z2spec.rings import ideal_members, is_ideal_set

    for entry in CATALOG:
        ring = entry.build().ring
        for ideal in enumerate_ideals(ring):
            assert is_ideal_set(ring, ideal.members)
            assert ideal_members(ring, ideal.generators) == ideal.members
