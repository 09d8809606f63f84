"""Direct-product factorization by catalog search.

A divisor ``A`` of ``P`` is found by scanning catalog posets ``B`` of size
``|P| / |A|`` for one with ``A x B`` isomorphic to ``P``.  Sizes are scanned in
ascending order and keys in catalog order, so results are deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from typing import Optional

from .canonical import CanonicalKey, canonical_key, is_isomorphic, poset_from_key
from .catalog import Catalog
from .core import (Poset, PosetError, chain, components, height, maximal_elements,
                   minimal_elements, product)


class CatalogTooSmall(PosetError):
    def __init__(self, needed: int, have: int):
        super().__init__(f"factor search needs catalog size {needed}, catalog has {have}")
        self.needed = needed


@dataclass(frozen=True)
class FactorMultiset:
    factors: tuple[tuple[CanonicalKey, int], ...]
    product_key: CanonicalKey

    def posets(self) -> list[Poset]:
        return [poset_from_key(k) for k, m in self.factors for _ in range(m)]

    def counter(self) -> Counter:
        return Counter(dict(self.factors))

    def __str__(self) -> str:
        parts = [f"{k.hex()}(n={int.from_bytes(k[:2], 'big')})^{m}" for k, m in self.factors]
        return " x ".join(parts) if parts else "1"


def product_of(posets) -> Poset:
    return reduce(product, posets, chain(1))


def _shape(p: Poset) -> tuple[int, int, int, int]:
    if p.n == 0:
        return (0, 0, 0, 0)
    return (height(p), len(minimal_elements(p)), len(maximal_elements(p)), components(p).count)


def _may_divide(p_shape, a_shape) -> bool:
    hp, mnp, mxp, cp = p_shape
    ha, mna, mxa, ca = a_shape
    return (ha <= hp and mnp % mna == 0 and mxp % mxa == 0 and cp % ca == 0)


def _quotient_shape(p_shape, a_shape):
    hp, mnp, mxp, cp = p_shape
    ha, mna, mxa, ca = a_shape
    return (hp - ha, mnp // mna, mxp // mxa, cp // ca)


def _require(catalog: Catalog, size: int) -> None:
    if size > catalog.n_max:
        raise CatalogTooSmall(size, catalog.n_max)


def divide(p: Poset, a: Poset, catalog: Catalog) -> Optional[Poset]:
    """Some catalog ``B`` with ``A x B`` isomorphic to ``P``, or ``None``."""
    if a.n == 1:
        return p
    for b in _scan(p, a, catalog):
        return b
    return None


def quotients(p: Poset, a: Poset, catalog: Catalog) -> list[Poset]:
    """Every catalog ``B`` with ``A x B`` isomorphic to ``P``."""
    return list(_scan(p, a, catalog))


def _scan(p: Poset, a: Poset, catalog: Catalog):
    if a.n < 1:
        raise ValueError("divisor must be non-empty")
    if p.n % a.n:
        return
    size = p.n // a.n
    if size == 0:
        yield catalog.posets(0)[0]
        return
    _require(catalog, size)
    ps, as_ = _shape(p), _shape(a)
    if not _may_divide(ps, as_):
        return
    want = _quotient_shape(ps, as_)
    for b in catalog.posets(size):
        if _shape(b) == want and is_isomorphic(product(a, b), p):
            yield b


def factor_pairs(p: Poset, catalog: Catalog) -> list[tuple[Poset, Poset]]:
    """All catalog pairs ``(W, X)`` with ``W x X`` isomorphic to a non-empty ``P``."""
    if p.n == 0:
        raise ValueError("factor_pairs needs a non-empty poset")
    out = []
    for d in range(1, p.n + 1):
        if p.n % d:
            continue
        _require(catalog, max(d, p.n // d))
        for w in catalog.posets(d):
            out.extend((w, x) for x in _scan(p, w, catalog))
    return out


def is_directly_irreducible(p: Poset, catalog: Catalog) -> bool:
    """``|P| != 1`` and every factorization ``A x B`` has a one-element factor."""
    if p.n == 1:
        return False
    if p.n == 0:
        # the empty poset is 2 x (empty)
        return False
    key = canonical_key(p)
    cached = catalog.irreducible.get(key)
    if cached is not None:
        return cached
    result = _smallest_divisor(p, catalog, 2) is None
    catalog.irreducible[key] = result
    return result


def _smallest_divisor(p: Poset, catalog: Catalog, start: int):
    n = p.n
    ps = _shape(p)
    for d in range(start, n // 2 + 1):
        if n % d:
            continue
        _require(catalog, max(d, n // d))
        for a in catalog.posets(d):
            if not _may_divide(ps, _shape(a)):
                continue
            b = divide(p, a, catalog)
            if b is not None:
                return a, b
    return None


def factorize(p: Poset, catalog: Catalog) -> FactorMultiset:
    """Split ``P`` into directly irreducible factors, smallest first."""
    if p.n < 1:
        raise ValueError("factorize needs a non-empty poset")
    found: list[CanonicalKey] = []
    rest = p
    start = 2
    while rest.n > 1:
        hit = _smallest_divisor(rest, catalog, start)
        if hit is None:
            found.append(canonical_key(rest))
            break
        a, rest = hit
        found.append(canonical_key(a))
        start = a.n
    counts = Counter(found)
    ordered = tuple(sorted(counts.items(), key=lambda kv: (int.from_bytes(kv[0][:2], "big"), kv[0])))
    return FactorMultiset(ordered, canonical_key(p))


def common_factor_split(c: Poset, d: Poset, catalog: Catalog) -> tuple[Poset, Poset, Poset]:
    """``(X, Y, Z)`` with ``C = Y x Z``, ``D = X x Z`` and no shared factor in ``X``, ``Y``."""
    if c.n == 0 or d.n == 0:
        raise ValueError("common_factor_split needs non-empty posets")
    fc = factorize(c, catalog).counter()
    fd = factorize(d, catalog).counter()
    shared = fc & fd

    def build(counter: Counter) -> Poset:
        keys = sorted(counter.elements(), key=lambda k: (int.from_bytes(k[:2], "big"), k))
        return product_of(poset_from_key(k) for k in keys)

    z = build(shared)
    x = build(fd - shared)
    y = build(fc - shared)
    if not (is_isomorphic(product(y, z), c) and is_isomorphic(product(x, z), d)):
        raise AssertionError("common factor split failed verification")
    return x, y, z
