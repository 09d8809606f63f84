"""Isomorphism testing and canonical labeling.

Small posets get an exact canonical form: colour refinement seeded with
(height, up-degree, down-degree), then an individualization search over
the refined cells keeping the lexicographically smallest relabeled matrix.
Twins (elements with identical strict up- and down-sets) are interchangeable,
so only one per twin class is tried at each branching cell.

Large posets (exponent posets) are only ever compared pairwise.  That path
uses hashed colour refinement on numpy arrays and a backtracking search for
an explicit isomorphism, which is re-verified before it is returned.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .core import Poset, _bits, components, heights

CanonicalKey = bytes

# posets above this size are compared with the hashed search instead of keys
SMALL = 48
# automorphisms kept for orbit pruning
MAX_AUTOS = 64


# ---------------------------------------------------------------------------
# exact refinement (bitmask rows)
# ---------------------------------------------------------------------------


def _rank(sigs: list) -> tuple[list[int], int]:
    order = sorted(set(sigs))
    index = {s: k for k, s in enumerate(order)}
    return [index[s] for s in sigs], len(order)


def _initial_colors(p: Poset) -> tuple[list[int], int]:
    h = heights(p).per_element
    up, down = p.up, p.down
    return _rank([(h[i], up[i].bit_count(), down[i].bit_count()) for i in range(p.n)])


def _refine(sup: Sequence[list[int]], sdown: Sequence[list[int]],
            colors: list[int], k: int) -> tuple[list[int], int]:
    n = len(colors)
    while k < n:
        sigs = [
            (colors[i],
             tuple(sorted([colors[j] for j in sup[i]])),
             tuple(sorted([colors[j] for j in sdown[i]])))
            for i in range(n)
        ]
        new, k2 = _rank(sigs)
        if k2 == k:
            break
        colors, k = new, k2
    return colors, k


def _individualize(colors: list[int], v: int) -> tuple[list[int], int]:
    cv = colors[v]
    sig = [2 * c + (1 if c == cv and i != v else 0) for i, c in enumerate(colors)]
    return _rank(sig)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def canonical_form(p: Poset) -> tuple[CanonicalKey, list[int]]:
    """Return ``(key, labeling)`` where ``labeling[i]`` is the canonical index of ``i``."""
    n = p.n
    if n == 0:
        return _encode(0, ()), []
    up, down = p.up, p.down
    sup = [[j for j in _bits(up[i]) if j != i] for i in range(n)]
    sdown = [[j for j in _bits(down[i]) if j != i] for i in range(n)]
    twin_sig = [(up[i] & ~(1 << i), down[i] & ~(1 << i)) for i in range(n)]

    best: list = [None, None]  # rows, labeling
    first: list = [None, None]
    autos: list[list[int]] = []

    def note_auto(colors: list[int], other: list[int]) -> None:
        inv = [0] * n
        for i, c in enumerate(other):
            inv[c] = i
        g = [inv[colors[i]] for i in range(n)]
        if len(autos) < MAX_AUTOS and g not in autos and any(g[i] != i for i in range(n)):
            autos.append(g)

    def leaf(colors: list[int]) -> None:
        rows = [0] * n
        for i in range(n):
            m = 0
            for j in _bits(up[i]):
                m |= 1 << colors[j]
            rows[colors[i]] = m
        rows = tuple(rows)
        if first[0] is None:
            first[0], first[1] = rows, list(colors)
        elif rows == first[0]:
            note_auto(colors, first[1])
        if best[0] is None or rows < best[0]:
            best[0] = rows
            best[1] = list(colors)
        elif rows == best[0]:
            note_auto(colors, best[1])

    def search(colors: list[int], k: int, path: list[int]) -> None:
        if k == n:
            leaf(colors)
            return
        counts = [0] * k
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(k) if counts[c] > 1)
        seen = set()
        done: set[int] = set()
        for v in range(n):
            if colors[v] != target or twin_sig[v] in seen:
                continue
            if autos and done:
                parent = list(range(n))
                for g in autos:
                    if all(g[u] == u for u in path):
                        for i in range(n):
                            a, b = _find(parent, i), _find(parent, g[i])
                            if a != b:
                                parent[b] = a
                if any(_find(parent, u) == _find(parent, v) for u in done):
                    continue
            seen.add(twin_sig[v])
            done.add(v)
            c2, k2 = _individualize(colors, v)
            search(*_refine(sup, sdown, c2, k2), path + [v])

    c0, k0 = _initial_colors(p)
    search(*_refine(sup, sdown, c0, k0), [])
    return _encode(n, best[0]), best[1]


def _encode(n: int, rows) -> CanonicalKey:
    width = (n + 7) // 8
    return n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "little") for r in rows)


def canonical_key(p: Poset) -> CanonicalKey:
    return canonical_form(p)[0]


def poset_from_key(key: CanonicalKey) -> Poset:
    n = int.from_bytes(key[:2], "big")
    width = (n + 7) // 8
    body = key[2:]
    rows = [int.from_bytes(body[i * width:(i + 1) * width], "little") for i in range(n)]
    return Poset(n, rows)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def invariants(p: Poset) -> tuple:
    """Cheap isomorphism invariants used to reject before any search."""
    if p.n == 0:
        return (0,)
    prof = heights(p)
    degs = sorted(zip(prof.per_element, (r.bit_count() for r in p.up),
                      (d.bit_count() for d in p.down)))
    comp = components(p)
    sizes = sorted(comp.labels.count(c) for c in range(comp.count))
    return (p.n, prof.total, prof.level_sizes(), tuple(sizes), tuple(degs))


# ---------------------------------------------------------------------------
# hashed refinement for large posets
# ---------------------------------------------------------------------------

_WEIGHTS = np.random.default_rng(0x5EED).integers(1, 1 << 20, size=(4, 1 << 16)).astype(np.float64)
_CHUNK = 2048


class _Big:
    """Per-poset arrays used by the hashed search."""

    def __init__(self, p: Poset):
        self.p = p
        n = p.n
        strict = p.leq.copy()
        np.fill_diagonal(strict, False)
        self.strict = strict
        self.twin = [(p.up[i] & ~(1 << i), p.down[i] & ~(1 << i)) for i in range(n)]
        prof = heights(p).per_element
        self.init = np.stack([
            np.asarray(prof, dtype=np.float64),
            strict.sum(axis=1).astype(np.float64),
            strict.sum(axis=0).astype(np.float64),
        ], axis=1)

    def signatures(self, colors: np.ndarray) -> np.ndarray:
        w = _weights_for(colors)
        n = len(colors)
        out = np.empty((n, 5), dtype=np.float64)
        out[:, 0] = colors
        for lo in range(0, n, _CHUNK):
            blk = self.strict[lo:lo + _CHUNK].astype(np.float64)
            out[lo:lo + _CHUNK, 1:3] = blk @ w[:, :2]
        for lo in range(0, n, _CHUNK):
            blk = self.strict[:, lo:lo + _CHUNK].T.astype(np.float64)
            out[lo:lo + _CHUNK, 3:5] = blk @ w[:, 2:]
        return out


def _weights_for(colors: np.ndarray) -> np.ndarray:
    k = int(colors.max()) + 1 if len(colors) else 0
    global _WEIGHTS
    if k > _WEIGHTS.shape[1]:
        extra = np.random.default_rng(k).integers(1, 1 << 20, size=(4, k)).astype(np.float64)
        _WEIGHTS = np.concatenate([_WEIGHTS, extra], axis=1)
    return _WEIGHTS[:, colors].T


def _joint_rank(sa: np.ndarray, sb: np.ndarray):
    """Rank signature rows of both sides together; None if multisets differ."""
    ua, ia, ca = np.unique(sa, axis=0, return_inverse=True, return_counts=True)
    ub, ib, cb = np.unique(sb, axis=0, return_inverse=True, return_counts=True)
    if ua.shape != ub.shape or not np.array_equal(ua, ub) or not np.array_equal(ca, cb):
        return None
    return ia.reshape(-1), ib.reshape(-1), len(ua)


def _refine_pair(a: _Big, b: _Big, ca: np.ndarray, cb: np.ndarray, k: int):
    n = len(ca)
    while k < n:
        r = _joint_rank(a.signatures(ca), b.signatures(cb))
        if r is None:
            return None
        na, nb, k2 = r
        if k2 == k:
            break
        ca, cb, k = na, nb, k2
    return ca, cb, k


def _individualize_np(colors: np.ndarray, v: int) -> np.ndarray:
    cv = colors[v]
    new = 2 * colors + (colors == cv)
    new[v] = 2 * cv
    return new


def _big_search(p: Poset, q: Poset) -> Optional[list[int]]:
    a, b = _Big(p), _Big(q)
    r = _joint_rank(a.init, b.init)
    if r is None:
        return None
    r = _refine_pair(a, b, *r)
    if r is None:
        return None
    n = p.n
    q_up = q.up

    def search(ca, cb, k):
        if k == n:
            mapping = [0] * n
            inv_b = np.empty(n, dtype=np.int64)
            inv_b[cb] = np.arange(n)
            mapping = inv_b[ca].tolist()
            return mapping if _check_map(p, q_up, mapping) else None
        counts = np.bincount(ca, minlength=k)
        target = int(np.flatnonzero(counts > 1)[0])
        v = int(np.flatnonzero(ca == target)[0])
        na = _individualize_np(ca, v)
        seen = set()
        for w in np.flatnonzero(cb == target).tolist():
            if b.twin[w] in seen:
                continue
            seen.add(b.twin[w])
            nb = _individualize_np(cb, w)
            r2 = _joint_rank(na[:, None].astype(np.float64), nb[:, None].astype(np.float64))
            if r2 is None:
                continue
            r2 = _refine_pair(a, b, *r2)
            if r2 is None:
                continue
            found = search(*r2)
            if found is not None:
                return found
        return None

    return search(*r)


def _check_map(p: Poset, q_up: Sequence[int], mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(p.n)):
        return False
    for i, r in enumerate(p.up):
        m = 0
        for j in _bits(r):
            m |= 1 << mapping[j]
        if m != q_up[mapping[i]]:
            return False
    return True


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def find_isomorphism(p: Poset, q: Poset, fast_reject: bool = True) -> Optional[list[int]]:
    """An order isomorphism ``p -> q`` as a list, or ``None``.

    With ``fast_reject=False`` the invariant shortcut is skipped and the
    decision rests on the refinement search alone.
    """
    if p.n != q.n:
        return None
    if fast_reject and invariants(p) != invariants(q):
        return None
    if p.n == 0:
        return []
    if p.n <= SMALL:
        kp, lp = canonical_form(p)
        kq, lq = canonical_form(q)
        if kp != kq:
            return None
        inv_q = [0] * q.n
        for i, c in enumerate(lq):
            inv_q[c] = i
        mapping = [inv_q[lp[i]] for i in range(p.n)]
    else:
        mapping = _big_search(p, q)
        if mapping is None:
            return None
    if not _check_map(p, q.up, mapping):
        raise AssertionError("isomorphism search produced an invalid map")
    return mapping


def is_isomorphic(p: Poset, q: Poset) -> bool:
    if p is q:
        return True
    if p.n != q.n or invariants(p) != invariants(q):
        return False
    if p.n <= SMALL:
        return canonical_key(p) == canonical_key(q)
    return find_isomorphism(p, q) is not None
