"""Hasse diagrams of P_{s,t} as Graphviz DOT or TikZ text.

Ideal members are drawn white, everything else black. A gap ``x`` with
coordinates ``(a, b)`` sits at column ``b - a`` and row ``-(a + b)``, so the
Frobenius number is on top. Coordinates with ``a <= b`` are shifted one
column right, leaving an empty column along the ``a = b`` cut between the
left part and the right part.
"""

from __future__ import annotations

from typing import Iterable

from .bijection import check_distinct_core
from .gap_poset import CoprimePair, as_pair, gaps, lower_covers, psi
from .partition_core import beta_set


def node_position(x: int, pair) -> tuple[int, int]:
    a, b = psi(x, pair)
    col = b - a
    if a <= b:
        col += 1
    return col, -(a + b)


def hasse_edges(pair) -> list[tuple[int, int]]:
    """Cover relations ``(upper, lower)``, upper element descending."""
    pair = as_pair(pair)
    return [(x, y) for x in reversed(gaps(pair)) for y in sorted(lower_covers(x, pair), reverse=True)]


def _members(pair, ideal):
    members = frozenset(ideal)
    stray = members - set(gaps(pair))
    if stray:
        raise ValueError(f"not gaps of ({pair.s},{pair.t}): {sorted(stray)}")
    return members


def hasse_dot(pair, ideal: Iterable[int] = ()) -> str:
    pair = as_pair(pair)
    members = _members(pair, ideal)
    lines = [
        f"graph P_{pair.s}_{pair.t} {{",
        "  node [shape=circle, style=filled, fixedsize=true, width=0.4, fontsize=10];",
    ]
    for x in reversed(gaps(pair)):
        col, row = node_position(x, pair)
        colours = 'fillcolor=white, fontcolor=black' if x in members else 'fillcolor=black, fontcolor=white'
        lines.append(f'  "{x}" [label="{x}", {colours}, pos="{col},{row}!"];')
    for x, y in hasse_edges(pair):
        lines.append(f'  "{x}" -- "{y}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_tikz(pair, ideal: Iterable[int] = ()) -> str:
    pair = as_pair(pair)
    members = _members(pair, ideal)
    lines = [
        r"\begin{tikzpicture}[scale=0.6,",
        r"  gap/.style={circle, draw, inner sep=0pt, minimum size=16pt, font=\scriptsize}]",
    ]
    for x in reversed(gaps(pair)):
        col, row = node_position(x, pair)
        fill = "fill=white" if x in members else "fill=black, text=white"
        lines.append(rf"  \node[gap, {fill}] (g{x}) at ({col},{row}) {{{x}}};")
    for x, y in hasse_edges(pair):
        lines.append(rf"  \draw (g{x}) -- (g{y});")
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def render_partition(p, s: int, fmt: str = "dot") -> str:
    """Hasse diagram of P_{s,s+2} with the beta-set of ``p`` highlighted."""
    p = check_distinct_core(p, s)
    pair = CoprimePair.odd(s)
    ideal = beta_set(p).hooks
    if fmt == "dot":
        return hasse_dot(pair, ideal)
    if fmt == "tikz":
        return hasse_tikz(pair, ideal)
    raise ValueError(f"unknown format {fmt!r}; expected 'dot' or 'tikz'")
