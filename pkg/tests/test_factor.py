import random

import pytest

from posetexp.canonical import canonical_key, is_isomorphic
from posetexp.catalog import Catalog
from posetexp.core import EMPTY, antichain, chain, crown4, product
from posetexp.factor import (CatalogTooSmall, common_factor_split, divide, factor_pairs,
                             factorize, is_directly_irreducible, product_of, quotients)

GRID = product(chain(2), chain(2))
KEY = canonical_key


def test_irreducible_examples(catalog):
    assert is_directly_irreducible(crown4(), catalog)
    assert not is_directly_irreducible(GRID, catalog)
    assert not is_directly_irreducible(chain(1), catalog)
    assert is_directly_irreducible(chain(3), catalog)
    assert not is_directly_irreducible(antichain(4), catalog)


def test_divide_examples(catalog):
    assert is_isomorphic(divide(GRID, chain(2), catalog), chain(2))
    assert divide(crown4(), chain(2), catalog) is None
    assert divide(crown4(), antichain(2), catalog) is None
    c = crown4()
    assert divide(c, chain(1), catalog) is c
    assert divide(chain(5), chain(2), catalog) is None


def test_quotients_of_antichain(catalog):
    qs = quotients(antichain(4), antichain(2), catalog)
    assert [KEY(q) for q in qs] == [KEY(antichain(2))]


def test_factor_pairs_grid(catalog):
    pairs = {(KEY(w), KEY(x)) for w, x in factor_pairs(GRID, catalog)}
    one, two = KEY(chain(1)), KEY(chain(2))
    assert pairs == {(one, KEY(GRID)), (two, two), (KEY(GRID), one)}


def test_factorize_examples(catalog):
    fm = factorize(GRID, catalog)
    assert fm.factors == ((KEY(chain(2)), 2),)
    assert factorize(crown4(), catalog).factors == ((KEY(crown4()), 1),)
    assert factorize(chain(1), catalog).factors == ()
    mixed = product(chain(2), crown4()).relabel([5, 0, 7, 2, 4, 1, 6, 3])
    assert factorize(mixed, catalog).counter() == {KEY(chain(2)): 1, KEY(crown4()): 1}
    assert str(factorize(chain(1), catalog)) == "1"
    with pytest.raises(ValueError):
        factorize(EMPTY, catalog)


def test_catalog_too_small():
    small = Catalog(3, use_cache=False)
    big = product(crown4(), chain(2))
    with pytest.raises(CatalogTooSmall) as exc:
        factorize(big, small)
    assert exc.value.needed >= 4


def test_common_factor_split_examples(catalog):
    x, y, z = common_factor_split(GRID, GRID, catalog)
    assert x.n == y.n == 1 and is_isomorphic(z, GRID)
    x, y, z = common_factor_split(chain(2), crown4(), catalog)
    assert z.n == 1 and is_isomorphic(x, crown4()) and is_isomorphic(y, chain(2))
    x, y, z = common_factor_split(GRID, chain(2), catalog)
    assert is_isomorphic(z, chain(2)) and is_isomorphic(y, chain(2)) and x.n == 1


def test_round_trip_connected(catalog):
    rng = random.Random(3)
    for p in catalog.connected_up_to(6):
        fm = factorize(p, catalog)
        assert is_isomorphic(product_of(fm.posets()), p)
        assert fm.product_key == KEY(p)
        for f in fm.posets():
            assert f.n > 1 and is_directly_irreducible(f, catalog)
        perm = list(range(p.n))
        rng.shuffle(perm)
        assert factorize(p.relabel(perm), catalog) == fm


def test_cancellation(catalog):
    conn = catalog.connected_up_to(6)
    for a in conn:
        seen: dict = {}
        for b in conn:
            if a.n * b.n > 12:
                continue
            k = KEY(product(a, b))
            if k in seen:
                assert is_isomorphic(seen[k], b)
            seen[k] = b
