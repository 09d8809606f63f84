"""Exhaustive checks of the exponentiation identities and theorems over the catalog.

Universal claims are checked on every operand tuple in range; a
counterexample is a failure.  Existential claims are checked by witness
search.  Every search bound here is the provable one (a witness ``E`` with
``A = C(E^X)`` and ``X`` non-empty embeds into ``A`` through its constant
maps, so ``|E| <= |A|``), which makes a miss a failure unless the caller
lowered ``witness_n`` below it, in which case the miss is inconclusive.
"""

from __future__ import annotations

import logging
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from itertools import product as cartesian
from typing import Callable, Iterable, Optional

from ..canonical import canonical_key, find_isomorphism, invariants, is_isomorphic
from ..catalog import Catalog
from ..core import (Poset, chain, components, height, interval, is_antichain, is_connected,
                    product, sum as psum)
from ..exponent import CapExceeded, c_exp, d_set, exponent
from ..factor import (CatalogTooSmall, factor_pairs, factorize, is_directly_irreducible,
                      quotients)
from .report import CheckConfig, VerificationReport

log = logging.getLogger(__name__)

_CATALOGS: dict[int, Catalog] = {}


def get_catalog(n: int) -> Catalog:
    if n not in _CATALOGS:
        _CATALOGS[n] = Catalog(n)
    return _CATALOGS[n]


def tag(p: Poset) -> str:
    """Short operand label: size and canonical key."""
    return f"n{p.n}:{canonical_key(p).hex()}"


class _Ctx:
    def __init__(self, cfg: CheckConfig):
        self.cfg = cfg
        self.cat = get_catalog(cfg.catalog_n)
        self._cexp: dict = {}

    def cexp(self, a: Poset, b: Poset) -> Poset:
        k = (a, b)
        if k not in self._cexp:
            try:
                self._cexp[k] = c_exp(a, b, self.cfg.cap)
            except CapExceeded as exc:
                self._cexp[k] = exc
        r = self._cexp[k]
        if isinstance(r, CapExceeded):
            raise r
        return r

    def nonempty(self, n: int) -> list[Poset]:
        return self.cat.up_to(n, start=1)

    def connected(self, n: int) -> list[Poset]:
        return self.cat.connected_up_to(n)

    def witness_bound(self, provable: int) -> tuple[int, bool]:
        """Search bound and whether it is complete."""
        w = self.cfg.witness_n
        if w is None or w >= provable:
            return provable, True
        return w, False


def _finish(report: VerificationReport, t0: float) -> VerificationReport:
    report.elapsed = time.perf_counter() - t0
    report.sort()
    return report


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# ---------------------------------------------------------------------------
# emptiness, antichains, interval heights, heights of exponents
# ---------------------------------------------------------------------------


def check_lemma9(cfg: CheckConfig, interval_n: int = 3) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(4)
    interval_n = min(interval_n, n)
    rep = VerificationReport("lemma9", {"n_max": n, "interval_n_max": interval_n, "cap": cfg.cap})
    universe = ctx.cat.up_to(n)
    for a, b in cartesian(universe, universe):
        ops = {"A": tag(a), "B": tag(b)}
        try:
            e = exponent(a, b, cfg.cap)
        except CapExceeded as exc:
            rep.skip("all", ops, f"|A^B| > {exc.cap}")
            continue
        m = e.base.n

        rep.bump("1")
        if (m == 0) != (a.n == 0 and b.n > 0):
            rep.fail("1", ops, f"|A^B| = {m}")

        rep.bump("2")
        anti = is_antichain(e.base)
        if anti != (is_antichain(a) or b.n == 0):
            rep.fail("2", ops, f"A^B antichain = {anti}")
        elif anti:
            c = components(b).count
            want = a.n ** c if (a.n or b.n) else 1
            if m != want:
                rep.fail("2", ops, f"|A^B| = {m}, expected {want}")

        if a.n:
            rep.bump("4")
            h, want = height(e.base), height(a) * b.n
            if h != want:
                rep.fail("4", ops, f"h(A^B) = {h}, expected {want}")

        if a.n and a.n <= interval_n and b.n <= interval_n:
            _lemma9_intervals(rep, e, a, ops)
    return _finish(rep, t0)


def _lemma9_intervals(rep: VerificationReport, e, a: Poset, ops: dict) -> None:
    base = e.base
    h_total = height(base)
    h_a = height(a)
    in_d = set(d_set(e))
    for f in range(base.n):
        for g in range(base.n):
            if not base.le(f, g):
                continue
            rep.bump("3")
            lhs = height(interval(base, f, g)) == h_total
            rhs = (f in in_d and g in in_d and all(
                height(interval(a, e.maps[f][x], e.maps[g][x])) == h_a
                for x in range(len(e.maps[f]))))
            if lhs != rhs:
                rep.fail("3", {**ops, "f": list(e.maps[f]), "g": list(e.maps[g])},
                         f"interval height maximal = {lhs}, D-condition = {rhs}")


# ---------------------------------------------------------------------------
# four C-identities
# ---------------------------------------------------------------------------


def check_prop1(cfg: CheckConfig, item1_n: tuple[int, int] = (3, 2)) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(3)
    p1, qr1 = (min(item1_n[0], n), min(item1_n[1], n))
    rep = VerificationReport("prop1", {"n_max": n, "item1_P_max": p1, "item1_QR_max": qr1,
                                       "cap": cfg.cap})
    ne = ctx.nonempty(n)

    def compare(item: str, ops: dict, lhs: Callable[[], Poset], rhs: Callable[[], Poset]) -> None:
        try:
            left, right = lhs(), rhs()
        except CapExceeded as exc:
            rep.skip(item, ops, f"exponent > {exc.cap}")
            return
        rep.bump(item)
        if not is_isomorphic(left, right):
            rep.fail(item, ops, f"sides not isomorphic (|lhs|={left.n}, |rhs|={right.n})")

    for p, q, r in cartesian(ctx.nonempty(p1), ctx.nonempty(qr1), ctx.nonempty(qr1)):
        compare("1", {"P": tag(p), "Q": tag(q), "R": tag(r)},
                lambda: c_exp(p, product(q, r), cfg.cap),
                lambda: ctx.cexp(ctx.cexp(p, q), r))
    excluded = 0
    for p, q, r in cartesian(ne, ne, ne):
        ops = {"P": tag(p), "Q": tag(q), "R": tag(r)}
        compare("2", ops,
                lambda: c_exp(p, psum(q, r), cfg.cap),
                lambda: product(ctx.cexp(p, q), ctx.cexp(p, r)))
        if is_connected(r):
            compare("3", ops,
                    lambda: c_exp(psum(p, q), r, cfg.cap),
                    lambda: psum(ctx.cexp(p, r), ctx.cexp(q, r)))
        else:
            excluded += 1
        compare("4", ops,
                lambda: c_exp(product(q, r), p, cfg.cap),
                lambda: product(ctx.cexp(q, p), ctx.cexp(r, p)))
    rep.universe["item3_excluded_disconnected_R"] = excluded
    return _finish(rep, t0)


# ---------------------------------------------------------------------------
# refinement for products (four-poset version)
# ---------------------------------------------------------------------------


def _pairs_with_empty(p: Poset, ctx: _Ctx, n: int) -> list[tuple[Poset, Poset]]:
    if p.n:
        return factor_pairs(p, ctx.cat)
    empty = ctx.cat.posets(0)[0]
    everything = ctx.cat.up_to(n)
    return [(empty, z) for z in everything] + [(y, empty) for y in everything[1:]]


def t5_witness(a: Poset, b: Poset, c: Poset, d: Poset, ctx: _Ctx, n: int):
    """``(W, X, Y, Z)`` with ``A=WX, B=YZ, C=WY, D=XZ`` or ``None``."""
    for w, x in factor_pairs(a, ctx.cat):
        for y, z in _pairs_with_empty(b, ctx, n):
            if is_isomorphic(product(w, y), c) and is_isomorphic(product(x, z), d):
                return w, x, y, z
    return None


def check_refinement_t5(cfg: CheckConfig, product_max: int = 8) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(4)
    rep = VerificationReport("t5", {"n_max": n, "product_max": product_max})
    everything = ctx.cat.up_to(n)
    by_key: dict = defaultdict(list)
    for c, d in cartesian(everything, everything):
        if c.n * d.n <= product_max:
            by_key[canonical_key(product(c, d))].append((c, d))
    for a in ctx.connected(n):
        for b in everything:
            if a.n * b.n > product_max:
                continue
            for c, d in by_key.get(canonical_key(product(a, b)), ()):
                ops = {"A": tag(a), "B": tag(b), "C": tag(c), "D": tag(d)}
                item = "empty" if b.n == 0 else "nonempty"
                rep.bump(item)
                found = t5_witness(a, b, c, d, ctx, n)
                if found is None:
                    rep.fail(item, ops, "no W, X, Y, Z in catalog")
                else:
                    rep.witness(item, {**ops, **dict(zip("WXYZ", map(tag, found)))})
    return _finish(rep, t0)


# ---------------------------------------------------------------------------
# refinement for C-exponents
# ---------------------------------------------------------------------------


def _fingerprints(pairs: Iterable[tuple[Poset, Poset]], ctx: _Ctx, rep, item: str):
    groups: dict = defaultdict(list)
    for a, c in pairs:
        try:
            val = ctx.cexp(a, c)
        except CapExceeded as exc:
            rep.skip(item, {"A": tag(a), "C": tag(c)}, f"exponent > {exc.cap}")
            continue
        groups[invariants(val)].append((a, c, val))
    return groups


def _iso_pairs(groups) -> Iterable[tuple]:
    """All ordered pairs of entries whose C-exponents are isomorphic."""
    for members in groups.values():
        for (a, c, va), (b, d, vb) in cartesian(members, members):
            if is_isomorphic(va, vb):
                yield a, c, b, d


def t4_witness(a, b, c, d, ctx: _Ctx):
    """Search ``E, X, Y, Z`` connected with ``A=C(E^X), B=C(E^Y), C=YZ, D=XZ``."""
    bound, complete = ctx.witness_bound(min(a.n, b.n))
    ha, hb = height(a), height(b)
    for y, z in factor_pairs(c, ctx.cat):
        for x in quotients(d, z, ctx.cat):
            for e in ctx.connected(bound):
                he = height(e)
                if he * x.n != ha or he * y.n != hb:
                    continue
                try:
                    if (is_isomorphic(ctx.cexp(e, x), a) and is_isomorphic(ctx.cexp(e, y), b)):
                        return (e, x, y, z), complete
                except CapExceeded:
                    continue
    return None, complete


def t8_witness(a, b, c, d, ctx: _Ctx):
    """Search ``W, X, Y, Z`` with ``A=WX, C=WY, B=C(Z^Y), D=C(Z^X)``; prefers ``|Z| > 1``."""
    bound, complete = ctx.witness_bound(min(b.n, d.n))
    trivial = None
    for w, x in factor_pairs(a, ctx.cat):
        for y in quotients(c, w, ctx.cat):
            for z in ctx.nonempty(bound):
                try:
                    if is_isomorphic(ctx.cexp(z, y), b) and is_isomorphic(ctx.cexp(z, x), d):
                        if z.n > 1:
                            return (w, x, y, z), complete, None
                        trivial = trivial or (w, x, y, z)
                except CapExceeded:
                    continue
    return None, complete, trivial


def check_refinement_t4_t8(cfg: CheckConfig) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(3)
    rep = VerificationReport("t4t8", {"n_max": n, "cap": cfg.cap,
                                      "witness_n": cfg.witness_n or "provable"})
    conn = ctx.connected(n)

    groups = _fingerprints(cartesian(conn, conn), ctx, rep, "t4")
    for a, c, b, d in _iso_pairs(groups):
        ops = {"A": tag(a), "B": tag(b), "C": tag(c), "D": tag(d)}
        rep.bump("t4")
        found, complete = t4_witness(a, b, c, d, ctx)
        if found:
            rep.witness("t4", {**ops, **dict(zip("EXYZ", map(tag, found)))})
        elif complete:
            rep.fail("t4", ops, "no E, X, Y, Z up to the provable bound")
        else:
            rep.unsure("t4", ops, f"inconclusive(witness_n={cfg.witness_n})")

    nontrivial = [p for p in conn if p.n > 1]
    groups = defaultdict(list)
    for b, a in cartesian(nontrivial, conn):
        try:
            groups[invariants(ctx.cexp(b, a))].append(("B", b, a))
        except CapExceeded as exc:
            rep.skip("t8", {"B": tag(b), "A": tag(a)}, f"exponent > {exc.cap}")
    for d, c in cartesian(nontrivial, ctx.nonempty(n)):
        try:
            groups[invariants(ctx.cexp(d, c))].append(("D", d, c))
        except CapExceeded as exc:
            rep.skip("t8", {"D": tag(d), "C": tag(c)}, f"exponent > {exc.cap}")
    for members in groups.values():
        lefts = [(b, a) for side, b, a in members if side == "B"]
        rights = [(d, c) for side, d, c in members if side == "D"]
        for (b, a), (d, c) in cartesian(lefts, rights):
            if not is_isomorphic(ctx.cexp(b, a), ctx.cexp(d, c)):
                continue
            ops = {"A": tag(a), "B": tag(b), "C": tag(c), "D": tag(d)}
            rep.bump("t8")
            found, complete, trivial = t8_witness(a, b, c, d, ctx)
            if found:
                rep.witness("t8", {**ops, **dict(zip("WXYZ", map(tag, found)))})
            elif trivial or not complete:
                rep.unsure("t8", ops, "only trivial Z found" if trivial
                           else f"inconclusive(witness_n={cfg.witness_n})")
            else:
                rep.fail("t8", ops, "no W, X, Y, Z up to the provable bound")

    _seed_t4(rep, ctx)
    _seed_t8(rep, ctx)
    return _finish(rep, t0)


def _seed_t4(rep: VerificationReport, ctx: _Ctx) -> None:
    small = ctx.connected(2)
    for e, x, y, z in cartesian(ctx.connected(3), small, small, small):
        a, b = ctx.cexp(e, x), ctx.cexp(e, y)
        c, d = product(y, z), product(x, z)
        if max(a.n, b.n, c.n, d.n) > ctx.cat.n_max:
            continue
        ops = {"E": tag(e), "X": tag(x), "Y": tag(y), "Z": tag(z)}
        rep.bump("seed_t4")
        if not is_isomorphic(c_exp(a, c, ctx.cfg.cap), c_exp(b, d, ctx.cfg.cap)):
            rep.fail("seed_t4", ops, "constructed instance violates the premise")
            continue
        a, b, c, d = (ctx.cat.lookup(t) for t in (a, b, c, d))
        found, _ = t4_witness(a, b, c, d, ctx)
        if found is None:
            rep.fail("seed_t4", ops, "search did not recover a witness")
        elif not _t4_valid(a, b, c, d, found, ctx):
            rep.fail("seed_t4", ops, "recovered witness fails re-validation")


def _t4_valid(a, b, c, d, found, ctx) -> bool:
    e, x, y, z = found
    return (is_isomorphic(c_exp(e, x, ctx.cfg.cap), a) and is_isomorphic(c_exp(e, y, ctx.cfg.cap), b)
            and is_isomorphic(product(y, z), c) and is_isomorphic(product(x, z), d))


def _seed_t8(rep: VerificationReport, ctx: _Ctx) -> None:
    small = ctx.connected(2)
    for w, x, y, z in cartesian(small, small, ctx.nonempty(2), ctx.connected(3)[1:]):
        a, c = product(w, x), product(w, y)
        b, d = ctx.cexp(z, y), ctx.cexp(z, x)
        ops = {"W": tag(w), "X": tag(x), "Y": tag(y), "Z": tag(z)}
        if max(a.n, b.n, c.n, d.n) > ctx.cat.n_max or not (is_connected(b) and is_connected(d)):
            continue
        rep.bump("seed_t8")
        if not is_isomorphic(c_exp(b, a, ctx.cfg.cap), c_exp(d, c, ctx.cfg.cap)):
            rep.fail("seed_t8", ops, "constructed instance violates the premise")
            continue
        a, b, c, d = (ctx.cat.lookup(t) for t in (a, b, c, d))
        found, _, _ = t8_witness(a, b, c, d, ctx)
        if found is None:
            rep.fail("seed_t8", ops, "search did not recover a witness")
            continue
        fw, fx, fy, fz = found
        ok = (is_isomorphic(product(fw, fx), a) and is_isomorphic(product(fw, fy), c)
              and is_isomorphic(c_exp(fz, fy, ctx.cfg.cap), b)
              and is_isomorphic(c_exp(fz, fx, ctx.cfg.cap), d) and fz.n > 1)
        if not ok:
            rep.fail("seed_t8", ops, "recovered witness fails re-validation")


# ---------------------------------------------------------------------------
# imported structure theorems, checked as black boxes
# ---------------------------------------------------------------------------


def check_theorem2(cfg: CheckConfig) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(3)
    rep = VerificationReport("t2", {"n_max": n, "cap": cfg.cap, "catalog_n": cfg.catalog_n})
    ne, conn = ctx.nonempty(n), ctx.connected(n)

    # (2) cancellation of a connected exponent
    for c in conn:
        groups = _fingerprints(((a, c) for a in ne), ctx, rep, "2")
        rep.bump("2", len(ne) * (len(ne) - 1) // 2)
        for members in groups.values():
            for i, (a, _, va) in enumerate(members):
                for b, _, vb in members[i + 1:]:
                    if is_isomorphic(va, vb):
                        rep.fail("2", {"A": tag(a), "B": tag(b), "C": tag(c)},
                                 "C(A^C) = C(B^C) with A, B not isomorphic")

    # (3) factors of C(A^B) come from factors of A
    for a, b in cartesian(conn, conn):
        ops = {"A": tag(a), "B": tag(b)}
        try:
            target = ctx.cexp(a, b)
            parts = factorize(target, ctx.cat).posets()
        except CapExceeded as exc:
            rep.skip("3", ops, f"exponent > {exc.cap}")
            continue
        except CatalogTooSmall as exc:
            rep.skip("3", ops, str(exc))
            continue
        rep.bump("3")
        choices = []
        for part in parts:
            choices.append([ai for ai in ctx.nonempty(min(part.n, ctx.cat.n_max))
                            if _cexp_iso(ctx, ai, b, part)])
        hit = next((combo for combo in cartesian(*choices)
                    if is_isomorphic(_prod(combo), a)), None)
        if hit is None:
            rep.fail("3", ops, f"no A_i for the {len(parts)} factors of C(A^B)")
        else:
            rep.witness("3", {**ops, "A_i": [tag(x) for x in hit]})
            if len(parts) == 1 and not is_isomorphic(hit[0], a):
                rep.fail("3", ops, "single factor but A_1 is not A")

    # (1) distinct irreducible exponents
    irr = [c for c in conn if is_directly_irreducible(c, ctx.cat)]
    groups = _fingerprints(cartesian(conn, irr), ctx, rep, "1")
    for a, c, b, d in _iso_pairs(groups):
        if is_isomorphic(c, d):
            continue
        ops = {"A": tag(a), "B": tag(b), "C": tag(c), "D": tag(d)}
        rep.bump("1")
        bound, complete = ctx.witness_bound(min(a.n, b.n))
        e = next((e for e in ctx.connected(bound)
                  if _cexp_iso(ctx, e, d, a) and _cexp_iso(ctx, e, c, b)), None)
        if e is not None:
            rep.witness("1", {**ops, "E": tag(e)})
        elif complete:
            rep.fail("1", ops, "no E up to the provable bound")
        else:
            rep.unsure("1", ops, f"inconclusive(witness_n={cfg.witness_n})")
    return _finish(rep, t0)


def _cexp_iso(ctx: _Ctx, a: Poset, b: Poset, target: Poset) -> bool:
    # h(C(A^B)) = h(A)|B| for non-empty A, B
    if target.n == 0 or height(a) * b.n != height(target):
        return False
    try:
        return is_isomorphic(ctx.cexp(a, b), target)
    except CapExceeded:
        return False


def _prod(posets) -> Poset:
    out = chain(1)
    for p in posets:
        out = product(out, p)
    return out


# ---------------------------------------------------------------------------
# irreducible C-exponents
# ---------------------------------------------------------------------------


def is_absolutely_c_indecomposable(p: Poset, ctx: _Ctx) -> Optional[bool]:
    """Decide by search; ``None`` if the catalog is too small to be exhaustive.

    If ``P = C(X^Y)`` then ``|X| <= |P|`` and ``h(P) = h(X)|Y|``, which bounds both.
    """
    if p.n < 2 or not is_connected(p):
        return False
    try:
        if not is_directly_irreducible(p, ctx.cat):
            return False
    except CatalogTooSmall:
        return None
    hp = height(p)
    if p.n > ctx.cat.n_max or hp > ctx.cat.n_max:
        return None
    for x in ctx.nonempty(p.n):
        hx = height(x)
        if hx == 0 or hp % hx:
            continue
        for y in ctx.cat.posets(hp // hx):
            if _cexp_iso(ctx, x, y, p) and not (y.n == 1 and is_isomorphic(x, p)):
                return False
    return True


def check_lemma6_lemma7(cfg: CheckConfig, base_n: int = 4) -> VerificationReport:
    """Shape of C-exponent factors exhaustively; uniqueness of the base ``E`` by search.

    The search for ``E`` stops at ``base_n`` elements (or ``cfg.witness_n``),
    so an empty result is reported as inconclusive.
    """
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(3)
    rep = VerificationReport("l6l7", {"n_max": n, "cap": cfg.cap, "catalog_n": cfg.catalog_n,
                                      "base_n": cfg.witness_n or base_n})
    ne, conn = ctx.nonempty(n), ctx.connected(n)

    def irreducible(p: Poset, item: str, ops: dict) -> Optional[bool]:
        try:
            return is_directly_irreducible(p, ctx.cat)
        except CatalogTooSmall as exc:
            rep.skip(item, ops, str(exc))
            return None

    # A = C(B^P) connected irreducible forces the shape of B and P
    for b, p in cartesian(ne, ne):
        ops = {"B": tag(b), "P": tag(p)}
        try:
            a = ctx.cexp(b, p)
        except CapExceeded as exc:
            rep.skip("6", ops, f"exponent > {exc.cap}")
            continue
        rep.bump("6")
        if not (a.n and is_connected(a) and irreducible(a, "6", ops)):
            continue
        problems = []
        if not is_connected(p):
            problems.append("P disconnected")
        if not is_connected(b):
            problems.append("B disconnected")
        if not is_directly_irreducible(b, ctx.cat):
            problems.append("B reducible")
        if problems:
            rep.fail("6", ops, ", ".join(problems))

    irr = [a for a in conn if is_directly_irreducible(a, ctx.cat)]
    # irreducible connected A: C(A^B) stays connected and irreducible
    targets = []
    for a, b in cartesian(irr, conn):
        ops = {"A": tag(a), "B": tag(b)}
        try:
            x = ctx.cexp(a, b)
        except CapExceeded as exc:
            rep.skip("7.1", ops, f"exponent > {exc.cap}")
            continue
        ok = irreducible(x, "7.1", ops)
        if ok is None:
            continue
        rep.bump("7.1")
        targets.append((a, b, x))
        if not (is_connected(x) and ok):
            rep.fail("7.1", ops, "C(A^B) is not connected and irreducible")

    # C(C^D) isomorphic to such a C(A^B) forces connected C, D with C irreducible
    for a, b, x in targets:
        for c, d in cartesian(ne, ne):
            try:
                y = ctx.cexp(c, d)
            except CapExceeded:
                continue
            if y.n != x.n or not is_isomorphic(x, y):
                continue
            rep.bump("7.2")
            if not (is_connected(c) and is_connected(d) and is_directly_irreducible(c, ctx.cat)):
                rep.fail("7.2", {"A": tag(a), "B": tag(b), "C": tag(c), "D": tag(d)},
                         "C or D has the wrong shape")

    # the absolutely C-indecomposable base is unique
    for a, b, x in targets:
        ops = {"A": tag(a), "B": tag(b)}
        bound = min(x.n, cfg.witness_n or base_n)
        hx = height(x)
        found = []
        undecided = False
        for e in ctx.connected(bound):
            he = height(e)
            if he == 0 or hx % he or hx // he > ctx.cat.n_max:
                continue
            for j in ctx.cat.posets(hx // he):
                if not _cexp_iso(ctx, e, j, x):
                    continue
                verdict = is_absolutely_c_indecomposable(e, ctx)
                if verdict is None:
                    undecided = True
                elif verdict:
                    found.append((e, j))
        rep.bump("7.3")
        if not found:
            rep.unsure("7.3", ops, "no absolutely C-indecomposable base within catalog"
                       + (" (some candidates undecided)" if undecided else ""))
            continue
        e0, j0 = found[0]
        if any(not is_isomorphic(e, e0) or not is_isomorphic(j, j0) for e, j in found[1:]):
            rep.fail("7.3", ops, f"{len(found)} witness pairs, not pairwise isomorphic")
        else:
            rep.witness("7.3", {**ops, "E": tag(e0), "F": tag(j0), "found": len(found)})
    return _finish(rep, t0)


# ---------------------------------------------------------------------------
# main theorem and the open variant
# ---------------------------------------------------------------------------


def _self_exponent(args):
    p, cap = args
    try:
        return exponent(p, p, cap).base
    except CapExceeded as exc:
        return exc


def _self_exponents(posets: list[Poset], cfg: CheckConfig) -> list:
    return _map(_self_exponent, [(p, cfg.cap) for p in posets], cfg.jobs)


def _sweep(rep: VerificationReport, lefts: list[Poset], rights: list[Poset],
           cfg: CheckConfig, on_iso: Callable, sample: bool) -> None:
    everyone = list(dict.fromkeys(lefts + rights))
    built = dict(zip(everyone, _self_exponents(everyone, cfg)))
    inv = {}
    for p, e in built.items():
        if isinstance(e, CapExceeded):
            rep.skip("sweep", {"P": tag(p)}, f"|P^P| > {e.cap}")
        else:
            inv[p] = invariants(e)
    rng = random.Random(cfg.seed)
    for p, q in cartesian(lefts, rights):
        if p not in inv or q not in inv:
            continue
        rep.bump("pairs")
        ep, eq = built[p], built[q]
        # |P^P| and h(P^P) = |P| h(P) decide most pairs before any search
        if ep.n != eq.n or p.n * height(p) != q.n * height(q) or inv[p] != inv[q]:
            rep.counts["fast_rejected"] = rep.counts.get("fast_rejected", 0) + 1
            if sample and rng.random() < cfg.sample_rate:
                rep.counts["fast_reject_audited"] = rep.counts.get("fast_reject_audited", 0) + 1
                if find_isomorphism(ep, eq, fast_reject=False) is not None:
                    rep.fail("fast_path", {"P": tag(p), "Q": tag(q)},
                             "fast path rejected an isomorphic pair")
            continue
        rep.counts["full_tests"] = rep.counts.get("full_tests", 0) + 1
        iso = p is q or find_isomorphism(ep, eq) is not None
        if iso:
            on_iso(p, q)


def check_main_theorem(cfg: CheckConfig) -> VerificationReport:
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(5)
    rep = VerificationReport("main", {"n_max": n, "cap": cfg.cap,
                                      "sample_rate": cfg.sample_rate, "seed": cfg.seed})

    def on_iso(p: Poset, q: Poset) -> None:
        rep.counts["premise_holds"] = rep.counts.get("premise_holds", 0) + 1
        ops = {"P": tag(p), "Q": tag(q)}
        if not is_connected(q):
            rep.fail("main", ops, "P^P = Q^Q with Q disconnected")
        elif p is not q and not is_isomorphic(p, q):
            # catalog entries are pairwise non-isomorphic, so p is q iff P = Q
            rep.fail("main", ops, "P^P = Q^Q with connected P, Q not isomorphic")
        else:
            rep.witness("main", ops)

    _sweep(rep, ctx.connected(n), ctx.nonempty(n), cfg, on_iso, sample=True)
    return _finish(rep, t0)


def search_open_problem(cfg: CheckConfig) -> VerificationReport:
    """Hunt for irreducible P and P^P = Q^Q with P, Q not isomorphic; never fails."""
    t0 = time.perf_counter()
    ctx = _Ctx(cfg)
    n = cfg.size(4)
    rep = VerificationReport("open", {"n_max": n, "cap": cfg.cap}, exploratory=True)
    irr = [p for p in ctx.nonempty(n) if is_directly_irreducible(p, ctx.cat)]
    discoveries = []

    def on_iso(p: Poset, q: Poset) -> None:
        if p is not q:
            discoveries.append({"P": tag(p), "Q": tag(q)})

    _sweep(rep, irr, ctx.nonempty(n), cfg, on_iso, sample=False)
    rep.universe["result"] = "discoveries" if discoveries else "no counterexample at this scale"
    for d in discoveries:
        rep.witness("discovery", d)
    return _finish(rep, t0)


CHECKS: dict[str, Callable[[CheckConfig], VerificationReport]] = {
    "prop1": check_prop1,
    "lemma9": check_lemma9,
    "t2": check_theorem2,
    "t4t8": check_refinement_t4_t8,
    "t5": check_refinement_t5,
    "l6l7": check_lemma6_lemma7,
    "main": check_main_theorem,
    "open": search_open_problem,
}


def run(names: list[str], cfg: CheckConfig) -> list[VerificationReport]:
    if names == ["all"]:
        names = list(CHECKS)
    reports = []
    for name in names:
        log.info("running %s", name)
        reports.append(CHECKS[name](cfg))
    return reports
