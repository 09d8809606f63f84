"""Exponent posets ``P^Q``: order-preserving maps ``Q -> P`` under the pointwise order."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Poset, PosetError, _bits, components, linear_extension

DEFAULT_CAP = 100_000

MonotoneMap = tuple  # entries[q] is the image of q


class CapExceeded(PosetError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"exponent has more than {cap} elements (reached {count})")
        self.count = count
        self.cap = cap


class EmptyExponentOperand(PosetError):
    pass


@dataclass(frozen=True, eq=False)
class ExpPoset:
    base: Poset
    maps: tuple[MonotoneMap, ...]
    p_ref: Poset
    q_ref: Poset
    _index: dict = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return self.base.n

    def index_of(self, f: MonotoneMap) -> int:
        if self._index is None:
            object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.maps)})
        return self._index[tuple(f)]


def monotone_maps(p: Poset, q: Poset, cap: int = DEFAULT_CAP) -> list[MonotoneMap]:
    """All order-preserving maps ``q -> p``, sorted lexicographically.

    Elements of ``q`` are assigned along a linear extension; the candidates
    for an element are the intersection of the up-sets of the images of its
    lower covers.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    nq = q.n
    if nq == 0:
        return [()]
    if p.n == 0:
        return []
    order = linear_extension(q)
    lower = [[] for _ in range(nq)]
    for a, b in q.covers():
        lower[b].append(a)
    full = (1 << p.n) - 1
    up = p.up
    out: list[MonotoneMap] = []
    img = [0] * nq

    def assign(pos: int) -> None:
        if pos == nq:
            if len(out) >= cap:
                raise CapExceeded(len(out) + 1, cap)
            out.append(tuple(img))
            return
        x = order[pos]
        cand = full
        for y in lower[x]:
            cand &= up[img[y]]
        for v in _bits(cand):
            img[x] = v
            assign(pos + 1)

    assign(0)
    out.sort()
    return out


def pointwise_order(p: Poset, maps: list[MonotoneMap], nq: int) -> Poset:
    """Order on ``maps``: ``f <= g`` iff ``f(x) <= g(x)`` for every ``x``."""
    m = len(maps)
    if nq == 0:
        return Poset(m, [1 << i for i in range(m)])
    # at_least[x][v]: maps whose value at x lies in the up-set of v
    rows = [(1 << m) - 1] * m
    for x in range(nq):
        by_value = [0] * p.n
        for i, f in enumerate(maps):
            by_value[f[x]] |= 1 << i
        at_least = []
        for v in range(p.n):
            s = 0
            for w in _bits(p.up[v]):
                s |= by_value[w]
            at_least.append(s)
        for i, f in enumerate(maps):
            rows[i] &= at_least[f[x]]
    return Poset(m, rows)


def exponent(p: Poset, q: Poset, cap: int = DEFAULT_CAP) -> ExpPoset:
    maps = monotone_maps(p, q, cap)
    return ExpPoset(pointwise_order(p, maps, q.n), tuple(maps), p, q)


def constant_map(p: Poset, q: Poset, value: int) -> MonotoneMap:
    if not 0 <= value < p.n:
        raise IndexError(f"{value} is not an element of P")
    return (value,) * q.n


def d_set(e: ExpPoset) -> list[int]:
    """Indices of maps that are constant on every connected component of ``Q``."""
    blocks = components(e.q_ref).blocks()
    return [
        i for i, f in enumerate(e.maps)
        if all(len({f[x] for x in blk}) == 1 for blk in blocks)
    ]


@dataclass(frozen=True)
class CPoset:
    """``C(P^Q)`` as an induced subposet together with indices back into ``P^Q``."""

    poset: Poset
    index: tuple[int, ...]
    source: ExpPoset


def c_part(e: ExpPoset) -> CPoset:
    if e.q_ref.n == 0:
        raise EmptyExponentOperand("C(P^Q) is only defined for non-empty Q")
    comp = components(e.base)
    keep = {comp.labels[i] for i in d_set(e)}
    idx = tuple(i for i in range(e.base.n) if comp.labels[i] in keep)
    return CPoset(e.base.induced(idx), idx, e)


def c_poset(e: ExpPoset) -> Poset:
    return c_part(e).poset


def c_exp(p: Poset, q: Poset, cap: int = DEFAULT_CAP) -> Poset:
    """``C(P^Q)`` straight from the operand pair."""
    return c_poset(exponent(p, q, cap))
