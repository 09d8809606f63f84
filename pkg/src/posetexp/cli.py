"""Command line entry point.

Poset arguments are file paths in the text format, or one of the built-in
names ``crown``, ``chain:N``, ``antichain:N``, ``empty``.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import textio
from .canonical import canonical_key
from .catalog import Catalog, connected_posets, enumerate_posets, write_cache
from .core import Poset, antichain, chain, components, crown4, heights
from .exponent import DEFAULT_CAP, CapExceeded, c_part, d_set, exponent
from .factor import CatalogTooSmall, factorize

log = logging.getLogger("posetexp")


def load_poset(spec: str) -> Poset:
    if spec == "crown":
        return crown4()
    if spec == "empty":
        return Poset(0, ())
    name, _, num = spec.partition(":")
    if name in ("chain", "antichain") and num.isdigit():
        return (chain if name == "chain" else antichain)(int(num))
    return textio.load(spec)


def _emit(rows) -> None:
    for k, v in rows:
        print(f"{k}\t{v}")


def cmd_exp(args) -> int:
    p, q = load_poset(args.P), load_poset(args.Q)
    try:
        e = exponent(p, q, args.cap)
    except CapExceeded as exc:
        print(f"error\t{exc}", file=sys.stderr)
        return 3
    rows = [("size", e.base.n)]
    if e.base.n:
        rows.append(("height", heights(e.base).total))
    rows.append(("components", components(e.base).count))
    rows.append(("d_size", len(d_set(e))))
    if q.n:
        rows.append(("c_size", c_part(e).poset.n))
    if args.stats and e.base.n:
        rows.append(("levels", ",".join(map(str, heights(e.base).level_sizes()))))
        sizes = sorted((len(b) for b in components(e.base).blocks()), reverse=True)
        rows.append(("component_sizes", ",".join(map(str, sizes))))
    _emit(rows)
    labels = ["".join(map(str, f)) or "()" for f in e.maps]
    if args.dot:
        Path(args.dot).write_text(textio.to_dot(e.base, labels))
    if args.png:
        from .plotting import save_hasse
        save_hasse(e.base, args.png, labels=labels if e.base.n <= 40 else None,
                   title=f"{args.P}^{args.Q}")
    return 0


def cmd_factor(args) -> int:
    p = load_poset(args.P)
    if p.n == 0:
        print("error\tfactorize needs a non-empty poset", file=sys.stderr)
        return 3
    cat = Catalog(args.catalog_n)
    try:
        fm = factorize(p, cat)
    except CatalogTooSmall as exc:
        print(f"error\t{exc}", file=sys.stderr)
        return 3
    print(f"poset\t{fm.product_key.hex()}\t{p.n}")
    for key, mult in fm.factors:
        print(f"factor\t{key.hex()}\t{int.from_bytes(key[:2], 'big')}\t{mult}")
    return 0


def cmd_enumerate(args) -> int:
    posets = connected_posets(args.n) if args.connected else enumerate_posets(args.n)
    if args.out:
        write_cache(Path(args.out), args.n, posets)
    if args.count_only:
        print(len(posets))
        return 0
    for p in posets:
        cov = " ".join(f"{a}<{b}" for a, b in p.covers())
        print(f"{canonical_key(p).hex()}\t{cov}")
    return 0


def cmd_canon(args) -> int:
    p = load_poset(args.P)
    print(canonical_key(p).hex())
    return 0


def cmd_render(args) -> int:
    p = load_poset(args.P)
    if args.dot is not None:
        text = textio.to_dot(p)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            Path(args.dot).write_text(text)
    if args.png:
        from .plotting import save_hasse
        save_hasse(p, args.png, labels=[str(i) for i in range(p.n)])
    return 0


def cmd_verify(args) -> int:
    from .harness import CHECKS, CheckConfig, exit_code, run, to_json, to_markdown

    names = args.checks or ["all"]
    for n in names:
        if n != "all" and n not in CHECKS:
            print(f"unknown check {n!r}; choose from all, {', '.join(CHECKS)}", file=sys.stderr)
            return 3
    cfg = CheckConfig(n_max=args.n_max, cap=args.cap, jobs=args.jobs,
                      witness_n=args.witness_n, catalog_n=args.catalog_n)
    reports = run(names, cfg)
    for r in reports:
        print(r.summary_line())
    figures = []
    if args.fig_dir:
        from .plotting import save_hasse, save_summary
        out = Path(args.fig_dir)
        out.mkdir(parents=True, exist_ok=True)
        figures.append(save_summary(reports, out / "summary.png"))
        crown = crown4()
        figures.append(save_hasse(exponent(crown, crown).base, out / "crown_exponent.png",
                                  title="P^P, P the 4-element crown"))
    if args.json:
        Path(args.json).write_text(to_json(reports))
    if args.md:
        md_dir = Path(args.md).resolve().parent
        rel = [str(Path(f).resolve().relative_to(md_dir)) if Path(f).resolve().is_relative_to(md_dir)
               else str(f) for f in figures]
        Path(args.md).write_text(to_markdown(reports, rel))
    code = exit_code(reports)
    print(f"exit\t{code}")
    return code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="posetexp", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("exp", help="build P^Q and print its statistics")
    s.add_argument("P")
    s.add_argument("Q")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--dot", help="write the Hasse diagram as DOT")
    s.add_argument("--png", help="render the Hasse diagram with matplotlib")
    s.add_argument("--stats", action="store_true", help="also print level and component sizes")
    s.set_defaults(func=cmd_exp)

    s = sub.add_parser("factor", help="direct-product factorization")
    s.add_argument("P")
    s.add_argument("--catalog-n", type=int, default=7)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("enumerate", help="posets up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--out", help="write a catalog cache file")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("canon", help="canonical key (hex)")
    s.add_argument("P")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("render", help="draw a Hasse diagram")
    s.add_argument("P")
    s.add_argument("--dot", nargs="?", const="-", help="DOT output file (stdout if omitted)")
    s.add_argument("--png", help="matplotlib rendering")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", help="run harness checks")
    s.add_argument("checks", nargs="*", help="all, prop1, lemma9, t2, t4t8, t5, l6l7, main, open")
    s.add_argument("--n-max", type=int)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--witness-n", type=int)
    s.add_argument("--catalog-n", type=int, default=7)
    s.add_argument("--json")
    s.add_argument("--md")
    s.add_argument("--fig-dir", help="write summary figures here")
    s.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
