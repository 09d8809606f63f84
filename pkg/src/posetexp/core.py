"""Finite posets stored as reflexive-transitive ``<=`` bit matrices.

Elements are the integers ``0..n-1``.  Row ``i`` of the order is kept as a
Python ``int`` bitmask (``up[i]`` has bit ``j`` set iff ``i <= j``); a numpy
boolean matrix is materialized lazily for the vectorized paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class PosetError(ValueError):
    pass


class CycleDetected(PosetError):
    def __init__(self, a: int, b: int):
        super().__init__(f"cover relation has a cycle through {a} and {b}")
        self.pair = (a, b)


class IndexOutOfRange(PosetError, IndexError):
    pass


class NotReflexive(PosetError):
    def __init__(self, i: int):
        super().__init__(f"not reflexive at {i}")
        self.witness = (i,)


class NotAntisymmetric(PosetError):
    def __init__(self, i: int, j: int):
        super().__init__(f"not antisymmetric: {i} <= {j} <= {i}")
        self.witness = (i, j)


class NotTransitive(PosetError):
    def __init__(self, i: int, k: int):
        super().__init__(f"not transitive: missing {i} <= {k}")
        self.witness = (i, k)


class EmptyPoset(PosetError):
    pass


class NotComparable(PosetError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _masks_to_matrix(rows: Sequence[int], n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    nbytes = (n + 7) // 8
    buf = b"".join(r.to_bytes(nbytes, "little") for r in rows)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(n, nbytes)
    return np.unpackbits(packed, axis=1, count=n, bitorder="little").astype(bool)


def _matrix_to_masks(mat: np.ndarray) -> tuple[int, ...]:
    n = mat.shape[0]
    if n == 0:
        return ()
    packed = np.packbits(mat, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


def _transpose(rows: Sequence[int], n: int) -> tuple[int, ...]:
    if n > 64:
        return _matrix_to_masks(_masks_to_matrix(rows, n).T)
    cols = [0] * n
    for i, r in enumerate(rows):
        bit = 1 << i
        for j in _bits(r):
            cols[j] |= bit
    return tuple(cols)


class Poset:
    """Immutable finite poset.

    Build one with :func:`from_covers`, :func:`validate` or the arithmetic
    helpers; the constructor trusts its input.
    """

    __slots__ = ("n", "up", "_down", "_leq", "_heights", "_components", "__weakref__")

    def __init__(self, n: int, up: Sequence[int]):
        self.n = n
        self.up = tuple(up)
        self._down = None
        self._leq = None
        self._heights = None
        self._components = None

    @classmethod
    def from_matrix_unchecked(cls, leq: np.ndarray) -> "Poset":
        leq = np.asarray(leq, dtype=bool)
        p = cls(leq.shape[0], _matrix_to_masks(leq))
        leq = leq.copy()
        leq.flags.writeable = False
        p._leq = leq
        return p

    @property
    def down(self) -> tuple[int, ...]:
        if self._down is None:
            self._down = _transpose(self.up, self.n)
        return self._down

    @property
    def leq(self) -> np.ndarray:
        if self._leq is None:
            m = _masks_to_matrix(self.up, self.n)
            m.flags.writeable = False
            self._leq = m
        return self._leq

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.covers()})"

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(lower, upper)``, sorted."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            # j covers i iff nothing strictly between
            rest = strict
            for j in _bits(strict):
                rest &= ~(self.up[j] & ~(1 << j))
            out.extend((i, j) for j in _bits(rest))
        return sorted(out)

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Return the copy in which old element ``i`` becomes ``perm[i]``."""
        n = self.n
        rows = [0] * n
        for i, r in enumerate(self.up):
            m = 0
            for j in _bits(r):
                m |= 1 << perm[j]
            rows[perm[i]] = m
        return Poset(n, rows)

    def induced(self, elements: Sequence[int]) -> "Poset":
        """Subposet on ``elements``; new index ``k`` is ``elements[k]``."""
        elements = list(elements)
        if self.n > 64:
            sub = self.leq[np.ix_(elements, elements)]
            return Poset.from_matrix_unchecked(sub)
        pos = {e: k for k, e in enumerate(elements)}
        rows = []
        for e in elements:
            r = self.up[e]
            m = 0
            for j, k in pos.items():
                if r >> j & 1:
                    m |= 1 << k
            rows.append(m)
        return Poset(len(elements), rows)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def from_covers(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Reflexive-transitive closure of a cover (or any acyclic) relation."""
    if n < 0:
        raise IndexOutOfRange("negative element count")
    rows = [1 << i for i in range(n)]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexOutOfRange(f"pair ({a}, {b}) outside 0..{n - 1}")
        rows[a] |= 1 << b
    # Warshall on bit rows
    for k in range(n):
        bk = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bk:
                rows[i] |= rk
    cols = _transpose(rows, n)
    for i in range(n):
        both = rows[i] & cols[i] & ~(1 << i)
        if both:
            raise CycleDetected(i, (both & -both).bit_length() - 1)
    return Poset(n, rows)


def validate(leq) -> Poset:
    """Check the order axioms on a square boolean matrix and wrap it."""
    mat = np.asarray(leq, dtype=bool)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise PosetError("matrix must be square")
    n = mat.shape[0]
    diag = np.diagonal(mat)
    if not diag.all():
        raise NotReflexive(int(np.flatnonzero(~diag)[0]))
    sym = mat & mat.T
    np.fill_diagonal(sym, False)
    if sym.any():
        i, j = np.argwhere(sym)[0]
        raise NotAntisymmetric(int(min(i, j)), int(max(i, j)))
    if n:
        m = mat.astype(np.int64)
        reach = (m @ m) > 0
        bad = reach & ~mat
        if bad.any():
            i, k = np.argwhere(bad)[0]
            raise NotTransitive(int(i), int(k))
    return Poset.from_matrix_unchecked(mat)


def chain(n: int) -> Poset:
    return Poset(n, [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)])


def antichain(n: int) -> Poset:
    return Poset(n, [1 << i for i in range(n)])


def crown4() -> Poset:
    """Two minimal elements ``0, 1`` each below both maximal ``2, 3``."""
    return from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


EMPTY = Poset(0, ())


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def sum(p: Poset, q: Poset) -> Poset:  # noqa: A001 - the poset "sum"
    """Disjoint union; elements of ``q`` are shifted by ``len(p)``."""
    shift = p.n
    return Poset(p.n + q.n, p.up + tuple(r << shift for r in q.up))


def product(p: Poset, q: Poset) -> Poset:
    """Componentwise order; pair ``(a, b)`` has index ``a * len(q) + b``."""
    if p.n * q.n > 64:
        return Poset.from_matrix_unchecked(np.kron(p.leq, q.leq))
    m = q.n
    rows = []
    for a in range(p.n):
        ups = list(_bits(p.up[a]))
        for b in range(m):
            rb = q.up[b]
            rows.append(_or_shifted(rb, ups, m))
    return Poset(p.n * m, rows)


def _or_shifted(mask: int, blocks: list[int], width: int) -> int:
    out = 0
    for a in blocks:
        out |= mask << (a * width)
    return out


def dual(p: Poset) -> Poset:
    return Poset(p.n, p.down)


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HeightProfile:
    per_element: tuple[int, ...]
    total: int

    def level_sizes(self) -> tuple[int, ...]:
        sizes = [0] * (self.total + 1)
        for h in self.per_element:
            sizes[h] += 1
        return tuple(sizes)


@dataclass(frozen=True)
class ComponentPartition:
    labels: tuple[int, ...]
    count: int

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for e, c in enumerate(self.labels):
            out[c].append(e)
        return out


def heights(p: Poset) -> HeightProfile:
    """Longest chain ending at each element, found by peeling minimal layers."""
    if p._heights is not None:
        return p._heights
    if p.n == 0:
        raise EmptyPoset("height of the empty poset is undefined")
    down = p.down
    per = [0] * p.n
    remaining = (1 << p.n) - 1
    level = 0
    while remaining:
        layer = 0
        for i in _bits(remaining):
            if down[i] & remaining == 1 << i:
                layer |= 1 << i
        for i in _bits(layer):
            per[i] = level
        remaining &= ~layer
        level += 1
    prof = HeightProfile(tuple(per), level - 1)
    p._heights = prof
    return prof


def height(p: Poset) -> int:
    return heights(p).total


def components(p: Poset) -> ComponentPartition:
    """Classes of the zigzag-comparability equivalence, numbered by least element."""
    if p._components is not None:
        return p._components
    labels = [-1] * p.n
    down = p.down
    count = 0
    for start in range(p.n):
        if labels[start] >= 0:
            continue
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= p.up[i] | down[i]
            frontier = nxt & ~seen
            seen |= nxt
        for i in _bits(seen):
            labels[i] = count
        count += 1
    part = ComponentPartition(tuple(labels), count)
    p._components = part
    return part


def component_posets(p: Poset) -> list[Poset]:
    return [p.induced(b) for b in components(p).blocks()]


def interval(p: Poset, x: int, y: int) -> Poset:
    """Induced subposet on ``{z : x <= z <= y}``."""
    if not (0 <= x < p.n and 0 <= y < p.n):
        raise IndexOutOfRange(f"({x}, {y}) outside 0..{p.n - 1}")
    if not p.le(x, y):
        raise NotComparable(f"{x} is not below {y}")
    return p.induced(list(_bits(p.up[x] & p.down[y])))


def minimal_elements(p: Poset) -> list[int]:
    return [i for i in range(p.n) if p.down[i] == 1 << i]


def maximal_elements(p: Poset) -> list[int]:
    return [i for i in range(p.n) if p.up[i] == 1 << i]


def is_connected(p: Poset) -> bool:
    return components(p).count == 1


def is_antichain(p: Poset) -> bool:
    return all(r == 1 << i for i, r in enumerate(p.up))


def is_chain(p: Poset) -> bool:
    full = (1 << p.n) - 1
    return all((r | d) == full for r, d in zip(p.up, p.down))


def is_trivial(p: Poset) -> bool:
    return p.n == 1


def linear_extension(p: Poset) -> list[int]:
    """Elements sorted by (height, index)."""
    if p.n == 0:
        return []
    h = heights(p).per_element
    return sorted(range(p.n), key=lambda i: (h[i], i))
