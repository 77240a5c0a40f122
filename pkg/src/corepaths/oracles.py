"""Brute-force oracles and the counting identities they check.

Nothing in here trusts the bijection: partitions are generated and filtered
by raw hook lengths, paths by exhaustive enumeration of U/D words.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import asdict, dataclass
from math import comb
from typing import Iterator

from .bijection import (
    LatticePath,
    backward,
    forward,
    from_path,
    k_of,
    partition_to_path,
    path_to_partition,
    to_path,
)
from .errors import EnumerationGuardError, VerificationError
from .gap_poset import CoprimePair, enumerate_ideals, psi
from .partition_core import Partition, beta_set, partition_from_beta_set

VERIFY_ENV = "COREPATHS_MAX_S"
DEFAULT_MAX_S = 13


@dataclass(frozen=True)
class CountReport:
    s: int
    observed: int
    expected: int

    @property
    def match(self) -> bool:
        return self.observed == self.expected

    def as_dict(self) -> dict:
        return {**asdict(self), "match": self.match}


def verify_ceiling() -> int:
    raw = os.environ.get(VERIFY_ENV)
    return int(raw) if raw else DEFAULT_MAX_S


def all_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every partition of ``n`` as a decreasing tuple, naive recursion."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def max_core_size(a: int, b: int) -> int:
    """Size of the largest (a, b)-core, (a^2 - 1)(b^2 - 1)/24.

    Not derived here; it is the known extremal value and only serves as the
    default search bound for :func:`direct_filter_oracle`.
    """
    return (a * a - 1) * (b * b - 1) // 24


def direct_filter_oracle(s: int, t: int, max_n: int | None = None, distinct: bool = True) -> set[Partition]:
    """All (s, t)-cores of size ``<= max_n``, found by hook-length filtering.

    Rows are stacked bottom-up. A new top row never changes the hooks of
    the rows beneath it, so a row with a hook divisible by ``s`` or ``t``
    kills the whole branch, and only the new row's hooks need computing.
    """
    if max_n is None:
        max_n = max_core_size(s, t)
    found: set[Partition] = set()

    def grow(rows, size):
        # rows is bottom-up: rows[-1] is the current top (largest) part
        found.add(Partition(tuple(reversed(rows))))
        widest = rows[-1] if rows else 0
        below = [sum(1 for r in rows if r > j) for j in range(widest)]
        lowest = (widest + 1 if distinct else widest) if rows else 1
        # cells past the old top row have hooks 1 .. top - widest, so the
        # new row may overhang by less than min(s, t)
        highest = min(max_n - size, widest + min(s, t) - 1)
        for top in range(lowest, highest + 1):
            # hook of cell j in the new top row: arm + cells below + 1
            if all((top - j + below[j]) % s and (top - j + below[j]) % t for j in range(widest)):
                rows.append(top)
                grow(rows, size + top)
                rows.pop()

    grow([], 0)
    return found


def enumerate_distinct_cores(s: int, guard: int | None = None) -> Iterator[Partition]:
    """(s, s+2)-cores with distinct parts, via no-adjacent ideals of P_{s,s+2}."""
    pair = CoprimePair.odd(s)
    for ideal in enumerate_ideals(pair, no_adjacent=True, guard=guard):
        yield partition_from_beta_set(ideal)


def positive_paths(n: int) -> Iterator[LatticePath]:
    for word in itertools.product("UD", repeat=n):
        if word.count("U") > word.count("D"):
            yield LatticePath("".join(word))


def count_paths(s: int) -> int:
    return sum(1 for _ in positive_paths(s))


def catalan(a: int, b: int) -> int:
    return comb(a + b, a) // (a + b)


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    x, y = 0, 1
    for _ in range(n):
        x, y = y, x + y
    return x


def fibonacci_check(s: int) -> CountReport:
    """(s, s+1)-cores with distinct parts against the Fibonacci number F_{s+1}."""
    observed = len(direct_filter_oracle(s, s + 1))
    return CountReport(s, observed, fibonacci(s + 1))


def failure_record(p: Partition, s: int) -> dict:
    """Everything needed to bisect a failing instance, best effort."""
    record = {"s": s, "partition": str(p)}
    try:
        k = k_of(s)
        b = beta_set(p)
        record["beta_set"] = list(b.hooks)
        record["ideal"] = [list(psi(x, CoprimePair.odd(s))) for x in b.hooks]
        J = forward(b, k)
        record["heights"] = list(J.heights)
        record["path"] = str(to_path(J))
    except Exception as exc:  # the record is for diagnosis; keep what we got
        record["error"] = f"{type(exc).__name__}: {exc}"
    return record


def verify_s(s: int) -> CountReport:
    """Push every distinct-part (s, s+2)-core through the bijection and back."""
    k = k_of(s)
    cores = list(enumerate_distinct_cores(s))
    image: dict[str, Partition] = {}
    for p in cores:
        try:
            path = partition_to_path(p, s)
            back = path_to_partition(path, s)
        except Exception as exc:
            raise VerificationError(f"s={s}: pipeline failed on {p}: {exc}", failure_record(p, s)) from exc
        if back != p:
            raise VerificationError(f"s={s}: roundtrip sent {p} to {back}", failure_record(p, s))
        if str(path) in image:
            raise VerificationError(
                f"s={s}: {p} and {image[str(path)]} share path {path}", failure_record(p, s)
            )
        image[str(path)] = p

    expected_paths = {str(path) for path in positive_paths(s)}
    if set(image) != expected_paths:
        missing = sorted(expected_paths - set(image))
        raise VerificationError(
            f"s={s}: image is not the positive-path set",
            {"s": s, "missing": missing[:10], "extra": sorted(set(image) - expected_paths)[:10]},
        )
    for word in sorted(expected_paths):
        p = partition_from_beta_set(backward(from_path(word, k)))
        if str(partition_to_path(p, s)) != word:
            raise VerificationError(f"s={s}: path {word} does not roundtrip", failure_record(p, s))
    return CountReport(s, len(cores), 2 ** (s - 1))


def verify_all(max_s: int = DEFAULT_MAX_S) -> list[CountReport]:
    """Reports for every odd ``s <= max_s``, in increasing order of ``s``."""
    ceiling = verify_ceiling()
    if max_s > ceiling:
        raise EnumerationGuardError(f"max_s={max_s} exceeds the ceiling {ceiling} (set ${VERIFY_ENV})")
    k_of(max_s)
    return [verify_s(s) for s in range(1, max_s + 1, 2)]


def format_table(reports: list[CountReport]) -> str:
    lines = [f"{'s':>4} {'observed':>10} {'expected':>10} {'match':>6}"]
    for r in reports:
        lines.append(f"{r.s:>4} {r.observed:>10} {r.expected:>10} {'yes' if r.match else 'NO':>6}")
    return "\n".join(lines)


def format_jsonl(reports: list[CountReport]) -> str:
    return "\n".join(json.dumps(r.as_dict()) for r in reports)
