"""Plain-text poset files and Graphviz output.

File format::

    # comment
    4
    0 < 2
    0 < 3

First non-comment line is the element count, every further line a cover
pair ``a < b``.  Any acyclic relation is accepted; it is closed on load.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence, Union

from .core import Poset, PosetError, from_covers, heights


class ParseError(PosetError):
    pass


def loads(text: str) -> Poset:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"line {lineno}: expected element count, got {line!r}") from None
            continue
        lhs, sep, rhs = line.partition("<")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'a < b', got {line!r}")
        try:
            pairs.append((int(lhs), int(rhs)))
        except ValueError:
            raise ParseError(f"line {lineno}: bad pair {line!r}") from None
    if n is None:
        raise ParseError("missing element count")
    return from_covers(n, pairs)


def dumps(p: Poset, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(p.n))
    lines.extend(f"{a} < {b}" for a, b in p.covers())
    return "\n".join(lines) + "\n"


def load(path: Union[str, Path]) -> Poset:
    return loads(Path(path).read_text())


def dump(p: Poset, path: Union[str, Path], comment: Optional[str] = None) -> None:
    Path(path).write_text(dumps(p, comment))


def to_dot(p: Poset, labels: Optional[Sequence[str]] = None, name: str = "hasse") -> str:
    """Hasse diagram, bottom to top, one rank per height level."""
    labels = labels or [str(i) for i in range(p.n)]
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i in range(p.n):
        out.append(f'  {i} [label="{labels[i]}"];')
    if p.n:
        prof = heights(p)
        for level in range(prof.total + 1):
            members = [str(i) for i, h in enumerate(prof.per_element) if h == level]
            out.append("  { rank=same; " + "; ".join(members) + "; }")
    for a, b in p.covers():
        out.append(f"  {a} -> {b} [arrowhead=none];")
    out.append("}")
    return "\n".join(out) + "\n"
