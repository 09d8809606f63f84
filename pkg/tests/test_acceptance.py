"""The eight acceptance criteria, each at its stated bound.

Every test prints one ``ACCEPTANCE <k> PASS|FAIL`` line (also collected into
the terminal summary) before asserting.
"""

import random
import time

from conftest import ACCEPTANCE_LINES
from posetexp.canonical import canonical_key, is_isomorphic
from posetexp.catalog import _antichains, connected_posets, enumerate_by_matrix_filter, enumerate_posets
from posetexp.core import Poset, components, crown4, height, product, validate
from posetexp.exponent import DEFAULT_CAP, exponent
from posetexp.factor import factorize, product_of
from posetexp.harness import CheckConfig, check_lemma9, check_main_theorem, check_prop1
from posetexp.harness import check_refinement_t4_t8, check_refinement_t5


def record(k: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {k} {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def test_acceptance_1_crown_golden():
    t0 = time.perf_counter()
    p = crown4()
    e = exponent(p, p).base
    sizes = sorted((len(b) for b in components(e).blocks()), reverse=True)
    h = height(e)
    elapsed = time.perf_counter() - t0
    ok = (e.n == 36 and sizes == [16, 16, 1, 1, 1, 1] and h == 4 == height(p) * p.n
          and elapsed < 1.0)
    record(1, ok, f"|P^P|={e.n} components={sizes} h={h} ({elapsed:.3f}s; "
                  f"expected 36, [16, 16, 1, 1, 1, 1], 4, < 1s)")
    assert e.n == 36
    assert h == 4 == height(p) * p.n
    assert elapsed < 1.0
    assert sizes == [16, 16, 1, 1, 1, 1]


def test_acceptance_2_lemma9():
    rep = check_lemma9(CheckConfig(n_max=4), interval_n=3)
    ok = rep.status == "pass" and not rep.cases_skipped_cap and rep.elapsed < 60
    record(2, ok, f"{rep.summary_line()} limit 60s")
    assert rep.failures == [] and rep.inconclusive == [] and rep.cases_skipped_cap == []
    assert rep.elapsed < 60


def test_acceptance_3_prop1():
    rep = check_prop1(CheckConfig(n_max=3), item1_n=(3, 2))
    ok = rep.status == "pass" and not rep.cases_skipped_cap and rep.elapsed < 300
    record(3, ok, f"{rep.summary_line()} {rep.counts} limit 300s")
    assert rep.failures == [] and rep.cases_skipped_cap == []
    assert all(rep.counts.get(item, 0) > 0 for item in "1234")
    assert rep.elapsed < 300


def test_acceptance_4_refinement():
    t5 = check_refinement_t5(CheckConfig(n_max=4), product_max=8)
    t48 = check_refinement_t4_t8(CheckConfig(n_max=3))
    seeds = {k: v for k, v in t48.counts.items() if k.startswith("seed")}
    seed_fail = [f for f in t48.failures if f["item"].startswith("seed")]
    ok = (t5.status == "pass" and t5.counts.get("empty", 0) > 0
          and t48.status in ("pass", "inconclusive") and not seed_fail and sum(seeds.values()) > 0)
    record(4, ok, f"{t5.summary_line()} | {t48.summary_line()} seeds={seeds}")
    assert t5.failures == [] and t5.counts.get("empty", 0) > 0
    assert t48.failures == []
    assert sum(seeds.values()) > 0 and seed_fail == []


def test_acceptance_5_main_theorem():
    rep = check_main_theorem(CheckConfig(n_max=5, cap=DEFAULT_CAP))
    ok = rep.status == "pass" and not rep.cases_skipped_cap and rep.elapsed <= 600
    record(5, ok, f"{rep.summary_line()} {rep.counts} limit 600s")
    assert rep.failures == [] and rep.cases_skipped_cap == []
    assert rep.counts["premise_holds"] == len(connected_posets(1) + connected_posets(2)
                                              + connected_posets(3) + connected_posets(4)
                                              + connected_posets(5))
    assert rep.elapsed <= 600


def test_acceptance_6_factorization(catalog):
    rng = random.Random(6)
    failures = []
    checked = 0
    for p in catalog.connected_up_to(6):
        fm = factorize(p, catalog)
        if not is_isomorphic(product_of(fm.posets()), p):
            failures.append(("round-trip", p))
        for _ in range(5):
            perm = list(range(p.n))
            rng.shuffle(perm)
            if factorize(p.relabel(perm), catalog) != fm:
                failures.append(("relabel", p))
        checked += 1
    cancel = 0
    # |A| = 1 makes cancellation a tautology, so |A| >= 2 and |B| <= 6
    conn = catalog.connected_up_to(6)
    for a in conn[1:]:
        seen: dict = {}
        for b in conn:
            if a.n * b.n > 12:
                continue
            k = canonical_key(product(a, b))
            if k in seen and not is_isomorphic(seen[k], b):
                failures.append(("cancellation", a, b))
            seen.setdefault(k, b)
            cancel += 1
    record(6, not failures, f"factorized={checked} cancellation_pairs={cancel} "
                            f"failures={len(failures)}")
    assert failures == []


def _grow_below(prev):
    keys = set()
    for p in prev:
        for s in _antichains(p):
            closure = 0
            for i in range(p.n):
                if s >> i & 1:
                    closure |= p.up[i]
            keys.add(canonical_key(Poset(p.n + 1, list(p.up) + [closure | 1 << p.n])))
    return keys


def test_acceptance_7_enumeration():
    want = [1, 2, 5, 16, 63, 318]
    want_conn = [1, 1, 3, 10, 44, 238]
    got = [len(enumerate_posets(n)) for n in range(1, 7)]
    got_conn = [len(connected_posets(n)) for n in range(1, 7)]
    oracle = all({canonical_key(validate(m)) for m in enumerate_by_matrix_filter(n)}
                 == {canonical_key(p) for p in enumerate_posets(n)} for n in range(1, 5))
    dual = all(_grow_below(enumerate_posets(n - 1)) == {canonical_key(p) for p in enumerate_posets(n)}
               for n in (5, 6))
    ok = got == want and got_conn == want_conn and oracle and dual
    record(7, ok, f"counts={got} connected={got_conn} matrix_oracle={oracle} dual_strategy={dual}")
    assert got == want and got_conn == want_conn
    assert oracle and dual


def test_acceptance_8_canonicalization():
    t0 = time.perf_counter()
    rng = random.Random(8)
    mismatches = 0
    keys = []
    for n in range(1, 7):
        for p in enumerate_posets(n):
            k = canonical_key(p)
            keys.append(k)
            perm = list(range(n))
            for _ in range(1000):
                rng.shuffle(perm)
                if canonical_key(p.relabel(perm)) != k:
                    mismatches += 1
    elapsed = time.perf_counter() - t0
    distinct = len(set(keys)) == len(keys)
    ok = mismatches == 0 and distinct and elapsed < 60
    record(8, ok, f"posets={len(keys)} relabelings={1000 * len(keys)} mismatches={mismatches} "
                  f"distinct={distinct} ({elapsed:.1f}s, limit 60s)")
    assert mismatches == 0 and distinct
    assert elapsed < 60
