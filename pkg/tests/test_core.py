import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import posets
from posetexp.canonical import canonical_key, is_isomorphic
from posetexp.core import (EMPTY, CycleDetected, EmptyPoset, IndexOutOfRange, NotAntisymmetric,
                           NotComparable, NotReflexive, NotTransitive, antichain, chain,
                           components, crown4, dual, from_covers, height, heights, interval,
                           is_antichain, is_chain, is_connected, is_trivial, product, sum,
                           validate)


def pairs(p):
    return {(i, j) for i in range(p.n) for j in range(p.n) if p.le(i, j)}


def test_from_covers_two_chain():
    assert pairs(from_covers(2, [(0, 1)])) == {(0, 0), (1, 1), (0, 1)}


def test_from_covers_crown():
    c = from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert c == crown4()
    assert pairs(c) == {(i, i) for i in range(4)} | {(0, 2), (0, 3), (1, 2), (1, 3)}


def test_from_covers_cycle():
    with pytest.raises(CycleDetected):
        from_covers(3, [(0, 1), (1, 2), (2, 0)])


def test_from_covers_range():
    with pytest.raises(IndexOutOfRange):
        from_covers(2, [(0, 2)])


def test_from_covers_closes_transitively():
    p = from_covers(4, [(0, 1), (1, 2), (2, 3)])
    assert p == chain(4)


def test_validate_identity_is_antichain():
    assert validate(np.eye(3, dtype=bool)) == antichain(3)


def test_validate_not_reflexive():
    m = np.eye(2, dtype=bool)
    m[0, 0] = False
    m[0, 1] = True
    with pytest.raises(NotReflexive) as exc:
        validate(m)
    assert exc.value.witness == (0,)


def test_validate_not_transitive():
    m = np.eye(3, dtype=bool)
    m[0, 1] = m[1, 2] = True
    with pytest.raises(NotTransitive) as exc:
        validate(m)
    assert exc.value.witness == (0, 2)


def test_validate_not_antisymmetric():
    m = np.ones((2, 2), dtype=bool)
    with pytest.raises(NotAntisymmetric):
        validate(m)


def test_sum_examples():
    assert sum(chain(1), chain(1)) == antichain(2)
    s = sum(chain(2), chain(2))
    assert s.n == 4 and components(s).count == 2


def test_sum_component_count(catalog):
    ps = catalog.up_to(4)
    for p, q in itertools.product(ps, ps):
        assert components(sum(p, q)).count == components(p).count + components(q).count


def test_product_grid():
    g = product(chain(2), chain(2))
    assert g.n == 4 and height(g) == 2
    # row-major: (a, b) -> 2a + b
    assert g.le(0, 3) and g.le(1, 3) and not g.le(1, 2)


def test_product_height_law(catalog):
    ps = catalog.up_to(4, start=1)
    for p, q in itertools.product(ps, ps):
        assert height(product(p, q)) == height(p) + height(q)


def test_product_unit(catalog):
    for p in catalog.up_to(5):
        assert is_isomorphic(product(p, chain(1)), p)


def test_product_large_uses_kron():
    p = product(chain(9), antichain(9))
    assert p.n == 81
    assert p.le(0, 72) and not p.le(0, 1)
    assert height(p) == 8 and components(p).count == 9


def test_dual_examples(catalog):
    assert is_isomorphic(dual(chain(2)), chain(2))
    assert canonical_key(dual(crown4())) == canonical_key(crown4())
    for p in catalog.up_to(5, start=1):
        assert height(dual(p)) == height(p)


def test_heights_examples():
    assert heights(chain(3)).per_element == (0, 1, 2)
    h = heights(crown4())
    assert h.per_element == (0, 0, 1, 1) and h.total == 1
    assert heights(antichain(4)).per_element == (0, 0, 0, 0)
    with pytest.raises(EmptyPoset):
        heights(EMPTY)


def test_components_examples():
    assert components(crown4()).count == 1
    assert components(antichain(3)).count == 3
    assert components(sum(chain(2), crown4())).count == 2
    assert components(EMPTY).count == 0


def test_interval_examples():
    assert interval(chain(3), 0, 2) == chain(3)
    g = product(chain(2), chain(2))
    assert interval(g, 0, 3) == g
    assert interval(crown4(), 0, 2) == chain(2)
    with pytest.raises(NotComparable):
        interval(crown4(), 0, 1)


def test_predicates():
    c = crown4()
    assert is_connected(c) and not is_antichain(c)
    assert not is_connected(EMPTY) and is_antichain(EMPTY)
    one = chain(1)
    assert is_connected(one) and is_antichain(one) and is_chain(one) and is_trivial(one)


def test_covers_roundtrip(catalog):
    for p in catalog.up_to(5):
        assert from_covers(p.n, p.covers()) == p


@settings(max_examples=200, deadline=None)
@given(posets())
def test_order_axioms(p):
    m = p.leq
    assert validate(m) == p
    assert np.diagonal(m).all()


@settings(max_examples=200, deadline=None)
@given(posets())
def test_dual_involution_exact(p):
    assert dual(dual(p)) == p
    assert np.array_equal(dual(p).leq, p.leq.T)


@settings(max_examples=200, deadline=None)
@given(posets(min_n=1))
def test_predicates_consistent(p):
    assert is_antichain(p) == (height(p) == 0)
    prof = heights(p)
    assert prof.total == max(prof.per_element)
    down = p.down
    for i, h in enumerate(prof.per_element):
        assert (h == 0) == (down[i] == 1 << i)


@settings(max_examples=100, deadline=None)
@given(posets(max_n=4), posets(max_n=4), posets(max_n=3))
def test_sum_product_laws(p, q, r):
    key = canonical_key
    assert key(sum(p, q)) == key(sum(q, p))
    assert key(product(p, q)) == key(product(q, p))
    assert key(sum(sum(p, q), r)) == key(sum(p, sum(q, r)))
    assert key(product(product(p, q), r)) == key(product(p, product(q, r)))
    assert sum(p, EMPTY) == p
