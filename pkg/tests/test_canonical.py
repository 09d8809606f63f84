import random

import networkx as nx
from hypothesis import given, settings

from conftest import posets
from posetexp.canonical import (SMALL, canonical_form, canonical_key, find_isomorphism,
                                invariants, is_isomorphic, poset_from_key)
from posetexp.core import antichain, chain, crown4, dual, product, sum
from posetexp.exponent import exponent


def nx_iso(p, q):
    def graph(x):
        g = nx.DiGraph()
        g.add_nodes_from(range(x.n))
        g.add_edges_from(x.covers())
        return g
    return p.n == q.n and nx.is_isomorphic(graph(p), graph(q))


def shuffled(p, rng):
    perm = list(range(p.n))
    rng.shuffle(perm)
    return p.relabel(perm)


def test_key_examples():
    assert canonical_key(dual(chain(2))) == canonical_key(chain(2))
    assert canonical_key(crown4()) != canonical_key(sum(chain(2), chain(2)))
    assert canonical_key(antichain(0)) == b"\x00\x00"


def test_find_isomorphism_crown_relabel():
    c = crown4()
    swapped = c.relabel([2, 3, 0, 1])  # a dual labeling of the crown
    m = find_isomorphism(c, swapped)
    assert m is not None
    for i in range(4):
        for j in range(4):
            assert c.le(i, j) == swapped.le(m[i], m[j])


def test_find_isomorphism_rejects():
    assert find_isomorphism(chain(3), antichain(3)) is None
    assert find_isomorphism(chain(3), chain(4)) is None


def test_keys_distinguish_catalog(catalog):
    for n in range(7):
        ps = catalog.posets(n)
        assert len({canonical_key(p) for p in ps}) == len(ps)


def test_key_roundtrip(catalog):
    for p in catalog.up_to(6):
        key = canonical_key(p)
        q = poset_from_key(key)
        assert canonical_key(q) == key and is_isomorphic(p, q)


def test_labeling_realizes_key(catalog):
    for p in catalog.up_to(5):
        key, lab = canonical_form(p)
        assert poset_from_key(key) == p.relabel(lab)


@settings(max_examples=300, deadline=None)
@given(posets(max_n=7), posets(max_n=7))
def test_isomorphism_matches_networkx(p, q):
    assert is_isomorphic(p, q) == nx_iso(p, q)
    assert (canonical_key(p) == canonical_key(q)) == nx_iso(p, q)


@settings(max_examples=200, deadline=None)
@given(posets(max_n=9))
def test_key_relabel_invariant(p):
    rng = random.Random(p.n)
    q = shuffled(p, rng)
    assert canonical_key(q) == canonical_key(p)
    assert invariants(q) == invariants(p)
    m = find_isomorphism(p, q)
    assert m is not None and all(p.le(i, j) == q.le(m[i], m[j])
                                 for i in range(p.n) for j in range(p.n))


def test_large_path_positive():
    rng = random.Random(7)
    e = exponent(crown4(), chain(3)).base
    big = product(e, chain(5))
    assert big.n > SMALL
    other = shuffled(big, rng)
    assert is_isomorphic(big, other)
    assert find_isomorphism(big, other, fast_reject=False) is not None


def test_large_path_negative():
    x = product(chain(7), antichain(8))
    y = sum(product(chain(7), antichain(4)), product(chain(7), antichain(4)))
    assert x.n == y.n > SMALL
    assert is_isomorphic(x, y)
    z = sum(product(chain(7), antichain(6)), product(chain(2), product(chain(7), antichain(1))))
    assert z.n == x.n
    assert not is_isomorphic(x, z)
    assert find_isomorphism(x, z, fast_reject=False) is None


def test_large_path_agrees_with_networkx():
    rng = random.Random(11)
    crown = crown4()
    e1 = exponent(crown, crown).base
    e2 = shuffled(e1, rng)
    assert e1.n == 36
    pad = product(chain(2), antichain(8))
    p, q = sum(e1, pad), sum(e2, pad)
    assert p.n > SMALL
    assert is_isomorphic(p, q) == nx_iso(p, q) is True
    r = sum(e1, product(antichain(2), chain(8)))
    assert r.n == p.n
    assert is_isomorphic(p, r) == nx_iso(p, r) is False
