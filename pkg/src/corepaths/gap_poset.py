"""The gap poset P_{s,t} of a two-generator numerical semigroup.

P_{s,t} is the set of non-negative integers that are not of the form
``a*s + b*t`` with ``a, b >= 0``; ``x`` covers ``y`` when ``x - y`` is
``s`` or ``t``. Every gap is uniquely ``F - a*s - b*t`` with ``F = st - s - t``,
which gives the coordinate form ``{(a, b) : a*s + b*t <= F}`` used by
:mod:`corepaths.bijection`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    EnumerationGuardError,
    EvenModulusError,
    NotCoprimeError,
    NotInPosetError,
)
from .partition_core import EMPTY_TOKEN

GUARD_ENV = "COREPATHS_MAX_GAPS"
DEFAULT_MAX_GAPS = 120

GapIdeal = frozenset  # frozenset[int]; members of P_{s,t}


@dataclass(frozen=True)
class CoprimePair:
    s: int
    t: int

    def __post_init__(self):
        if not (1 <= self.s < self.t):
            raise NotCoprimeError(f"need 1 <= s < t, got ({self.s}, {self.t})")
        if gcd(self.s, self.t) != 1:
            raise NotCoprimeError(f"({self.s}, {self.t}) are not coprime")

    @classmethod
    def odd(cls, s: int) -> CoprimePair:
        """The pair (s, s+2) for odd s >= 1."""
        if s < 1 or s % 2 == 0:
            raise EvenModulusError(f"s must be an odd positive integer, got {s}")
        return cls(s, s + 2)

    @property
    def frobenius(self) -> int:
        return self.s * self.t - self.s - self.t

    @property
    def genus(self) -> int:
        return (self.s - 1) * (self.t - 1) // 2


class PlaneCoord(NamedTuple):
    a: int
    b: int


def as_pair(pair) -> CoprimePair:
    return pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)


def max_gaps() -> int:
    """Enumeration guard, overridable through ``$COREPATHS_MAX_GAPS``."""
    raw = os.environ.get(GUARD_ENV)
    return int(raw) if raw else DEFAULT_MAX_GAPS


@lru_cache(maxsize=None)
def _gaps(s: int, t: int) -> tuple[int, ...]:
    frob = s * t - s - t
    if frob < 0:
        return ()
    representable = [False] * (frob + 1)
    for a in range(0, frob + 1, s):
        for n in range(a, frob + 1, t):
            representable[n] = True
    return tuple(n for n in range(frob + 1) if not representable[n])


def gaps(pair) -> tuple[int, ...]:
    """Sorted gaps of the semigroup generated by ``s`` and ``t``."""
    pair = as_pair(pair)
    return _gaps(pair.s, pair.t)


@lru_cache(maxsize=None)
def _gap_set(s: int, t: int) -> frozenset:
    return frozenset(_gaps(s, t))


def is_gap(x: int, pair) -> bool:
    pair = as_pair(pair)
    return x in _gap_set(pair.s, pair.t)


def psi(x: int, pair) -> PlaneCoord:
    """The unique ``(a, b)`` with ``x = F - a*s - b*t``.

    ``b`` is found by scanning ``0 .. s-1`` for a residue that makes the
    remainder divisible by ``s``; at most one value can hit.
    """
    pair = as_pair(pair)
    if not is_gap(x, pair):
        raise NotInPosetError(f"{x} is not a gap of ({pair.s}, {pair.t})")
    s, t, frob = pair.s, pair.t, pair.frobenius
    for b in range(s):
        rem = frob - x - b * t
        if rem < 0:
            break
        if rem % s == 0:
            return PlaneCoord(rem // s, b)
    raise AssertionError(f"gap {x} has no coordinate representation")  # pragma: no cover


def psi_inverse(c, pair) -> int:
    pair = as_pair(pair)
    a, b = c
    if a < 0 or b < 0 or a * pair.s + b * pair.t > pair.frobenius:
        raise NotInPosetError(f"{tuple(c)} is not in P'_({pair.s},{pair.t})")
    return pair.frobenius - a * pair.s - b * pair.t


def covers(x: int, y: int, pair) -> bool:
    pair = as_pair(pair)
    return x - y in (pair.s, pair.t)


def lower_covers(x: int, pair) -> list[int]:
    pair = as_pair(pair)
    return [y for y in (x - pair.s, x - pair.t) if is_gap(y, pair)]


def down_set(x: int, pair) -> frozenset:
    """All gaps ``y <= x`` in the poset order, ``x`` included."""
    pair = as_pair(pair)
    seen = {x}
    stack = [x]
    while stack:
        for y in lower_covers(stack.pop(), pair):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def is_order_ideal(candidate: Iterable[int], pair) -> bool:
    pair = as_pair(pair)
    members = set(candidate)
    if not members <= _gap_set(pair.s, pair.t):
        return False
    # covers generate the order, so checking lower covers is enough
    return all(y in members for x in members for y in lower_covers(x, pair))


def enumerate_ideals(pair, no_adjacent: bool = False, guard: int | None = None) -> Iterator[GapIdeal]:
    """All order ideals of P_{s,t}, sorted by (size, decreasing element list).

    With ``no_adjacent`` only ideals containing no pair ``{x, x+1}`` are
    produced. Gaps are decided in increasing order, so a gap may join only
    if its lower covers already have; under that scheme every partial
    choice extends (by rejecting everything after it), so the search never
    dead-ends even with the adjacency filter on.
    """
    pair = as_pair(pair)
    limit = max_gaps() if guard is None else guard
    if pair.genus > limit:
        raise EnumerationGuardError(
            f"P_({pair.s},{pair.t}) has {pair.genus} elements, guard is {limit} "
            f"(set ${GUARD_ENV} to override)"
        )
    elems = gaps(pair)
    below = [lower_covers(x, pair) for x in elems]
    found: list[tuple[int, ...]] = []
    chosen: set[int] = set()

    def extend(i):
        if i == len(elems):
            found.append(tuple(sorted(chosen, reverse=True)))
            return
        extend(i + 1)
        x = elems[i]
        if all(y in chosen for y in below[i]) and not (no_adjacent and x - 1 in chosen):
            chosen.add(x)
            extend(i + 1)
            chosen.remove(x)

    extend(0)
    found.sort(key=lambda ideal: (len(ideal), ideal))
    return (frozenset(ideal) for ideal in found)


def membership_2k(c, k: int) -> bool:
    """Closed-form test for ``(a, b)`` lying in P'_{2k+1, 2k+3}."""
    a, b = c
    if a < 0 or b < 0:
        return False
    if b >= k:
        return a + b <= 2 * k - 1
    return a + b <= 2 * k


def format_ideal(ideal: Iterable[int]) -> str:
    values = sorted(ideal, reverse=True)
    return ",".join(map(str, values)) if values else EMPTY_TOKEN


def parse_ideal(text: str) -> GapIdeal:
    text = text.strip().strip("{}").strip()
    if text == "" or text.lower() == EMPTY_TOKEN:
        return frozenset()
    return frozenset(int(tok) for tok in text.split(","))
