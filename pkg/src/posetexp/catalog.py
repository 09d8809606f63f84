"""Posets up to isomorphism, by size.

The generator grows every ``(n-1)``-element poset by one new maximal
element sitting above an antichain, then keeps one representative per
canonical key.  :func:`enumerate_by_matrix_filter` is an independent oracle
that filters naturally labeled relation matrices and dedupes with a
brute-force minimum over all relabelings.
"""

from __future__ import annotations

import itertools
import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from .canonical import CanonicalKey, canonical_key, poset_from_key
from .core import Poset, _bits, is_connected

log = logging.getLogger(__name__)

CACHE_VERSION = "v1"


def _antichains(p: Poset) -> Iterator[int]:
    n = p.n
    comparable = [(p.up[i] | p.down[i]) & ~(1 << i) for i in range(n)]
    for s in range(1 << n):
        if all(not (comparable[i] & s) for i in _bits(s)):
            yield s


def _extend(p: Poset, below: int) -> Poset:
    """Add element ``n`` above the down-closure of the antichain ``below``."""
    n = p.n
    closure = 0
    for i in _bits(below):
        closure |= p.down[i]
    new = 1 << n
    rows = [r | new if closure >> i & 1 else r for i, r in enumerate(p.up)]
    rows.append(new)
    return Poset(n + 1, rows)


@lru_cache(maxsize=None)
def _keys(n: int) -> tuple[CanonicalKey, ...]:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (canonical_key(Poset(0, ())),)
    found = set()
    for k in _keys(n - 1):
        base = poset_from_key(k)
        for s in _antichains(base):
            found.add(canonical_key(_extend(base, s)))
    return tuple(sorted(found))


def enumerate_posets(n: int) -> list[Poset]:
    """One canonically labeled representative per isomorphism class, in key order."""
    return [poset_from_key(k) for k in _keys(n)]


def connected_posets(n: int) -> list[Poset]:
    if n < 1:
        raise ValueError("connected posets need n >= 1")
    return [p for p in enumerate_posets(n) if is_connected(p)]


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------


def _natural_orders(n: int) -> np.ndarray:
    """All transitive strict relations contained in ``i < j`` as ``leq`` matrices."""
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = 1 << len(slots)
    bits = ((np.arange(total)[:, None] >> np.arange(len(slots))[None, :]) & 1).astype(bool)
    mats = np.zeros((total, n, n), dtype=bool)
    for s, (i, j) in enumerate(slots):
        mats[:, i, j] = bits[:, s]
    m = mats.astype(np.int32)
    two_step = np.einsum("kij,kjl->kil", m, m) > 0
    ok = ~(two_step & ~mats).any(axis=(1, 2))
    mats = mats[ok]
    mats[:, np.arange(n), np.arange(n)] = True
    return mats


def enumerate_by_matrix_filter(n: int) -> list[np.ndarray]:
    """Brute-force isomorphism classes, each as its lexicographically least matrix."""
    if n == 0:
        return [np.zeros((0, 0), dtype=bool)]
    mats = _natural_orders(n)
    weights = (1 << np.arange(n * n - 1, -1, -1, dtype=np.int64))
    best = np.full(len(mats), np.iinfo(np.int64).max, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        perm = np.array(perm)
        relabeled = mats[:, perm][:, :, perm].reshape(len(mats), -1)
        best = np.minimum(best, relabeled.astype(np.int64) @ weights)
    out = []
    for code in sorted(set(best.tolist())):
        flat = [(code >> (n * n - 1 - t)) & 1 for t in range(n * n)]
        out.append(np.array(flat, dtype=bool).reshape(n, n))
    return out


# ---------------------------------------------------------------------------
# catalog with file cache
# ---------------------------------------------------------------------------


def _default_cache_dir() -> Path:
    env = os.environ.get("POSETEXP_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "posetexp"


def write_cache(path: Path, n: int, posets: list[Poset]) -> None:
    lines = [f"posetcat {CACHE_VERSION} n={n} count={len(posets)}"]
    for p in posets:
        cov = " ".join(f"{a}<{b}" for a, b in p.covers())
        lines.append(f"{canonical_key(p).hex()} {cov}".rstrip())
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)


def read_cache(path: Path, n: int) -> Optional[list[Poset]]:
    """Load a cache file; returns ``None`` if it is stale or malformed."""
    from .core import from_covers

    try:
        lines = path.read_text().splitlines()
    except OSError:
        return None
    header = f"posetcat {CACHE_VERSION} n={n} count="
    if not lines or not lines[0].startswith(header):
        return None
    count = int(lines[0][len(header):])
    out = []
    for line in lines[1:]:
        parts = line.split()
        if not parts:
            continue
        covers = [tuple(map(int, c.split("<"))) for c in parts[1:]]
        p = from_covers(n, covers)
        key = canonical_key(p)
        if key.hex() != parts[0]:
            log.warning("cache %s: key mismatch, regenerating", path)
            return None
        out.append(poset_from_key(key))
    if len(out) != count:
        return None
    return out


class Catalog:
    """All posets up to ``n_max`` elements, up to isomorphism."""

    def __init__(self, n_max: int = 6, cache_dir: Optional[Path] = None, use_cache: bool = True):
        self.n_max = n_max
        self.cache_dir = Path(cache_dir) if cache_dir else _default_cache_dir()
        self.use_cache = use_cache
        self.by_size: dict[int, list[Poset]] = {}
        self._by_key: dict[CanonicalKey, Poset] = {}
        self._connected: dict[int, bool] = {}
        self.irreducible: dict[CanonicalKey, bool] = {}
        self.ensure(n_max)

    def ensure(self, n: int) -> None:
        for k in range(n + 1):
            if k in self.by_size:
                continue
            posets = None
            path = self.cache_dir / f"posets-n{k}.cat"
            if self.use_cache and k >= 6:
                posets = read_cache(path, k)
            if posets is None:
                posets = enumerate_posets(k)
                if self.use_cache and k >= 6:
                    try:
                        write_cache(path, k, posets)
                    except OSError as exc:
                        log.info("catalog cache not written: %s", exc)
            self.by_size[k] = posets
            for p in posets:
                self._by_key[canonical_key(p)] = p
        self.n_max = max(self.n_max, n)

    def posets(self, n: int) -> list[Poset]:
        if n > self.n_max:
            self.ensure(n)
        return self.by_size[n]

    def up_to(self, n: int, start: int = 0) -> list[Poset]:
        return [p for k in range(start, n + 1) for p in self.posets(k)]

    def connected(self, n: int) -> list[Poset]:
        return [p for p in self.posets(n) if is_connected(p)]

    def connected_up_to(self, n: int) -> list[Poset]:
        return [p for k in range(1, n + 1) for p in self.connected(k)]

    def lookup(self, p: Poset) -> Poset:
        """Catalog representative isomorphic to ``p``."""
        return self._by_key[canonical_key(p)]

    def __contains__(self, key: CanonicalKey) -> bool:
        return key in self._by_key

    def __len__(self) -> int:
        return sum(len(v) for v in self.by_size.values())
