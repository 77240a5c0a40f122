"""Partitions, hook lengths, core tests and the beta-set correspondence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidBetaSetError, InvalidPartitionError

EMPTY_TOKEN = "empty"


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1].strip()
    if text == "" or text.lower() == EMPTY_TOKEN:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse integer list from {text!r}") from None


def _format_int_list(values: Iterable[int]) -> str:
    values = list(values)
    return ",".join(str(v) for v in values) if values else EMPTY_TOKEN


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers. ``Partition(())`` is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x < 1 for x in parts):
            raise InvalidPartitionError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartitionError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"15,7,6,3,1"`` or ``"empty"``."""
        try:
            return cls(_parse_int_list(text))
        except ValueError as exc:
            if isinstance(exc, InvalidPartitionError):
                raise
            raise InvalidPartitionError(str(exc)) from None

    def __str__(self):
        return _format_int_list(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True, order=True)
class BetaSet:
    """First-column hook lengths of a partition, strictly decreasing."""

    hooks: tuple[int, ...] = ()

    def __post_init__(self):
        hooks = tuple(int(x) for x in self.hooks)
        object.__setattr__(self, "hooks", hooks)
        if any(x < 1 for x in hooks):
            raise InvalidBetaSetError(f"beta-set entries must be positive: {hooks}")
        if any(hooks[i] <= hooks[i + 1] for i in range(len(hooks) - 1)):
            raise InvalidBetaSetError(f"beta-set must be strictly decreasing: {hooks}")

    @classmethod
    def from_set(cls, values: Iterable[int]) -> BetaSet:
        return cls(tuple(sorted(set(values), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> BetaSet:
        """Parse ``"10,8,4,1"``, ``"{10,8,4,1}"`` or ``"empty"``."""
        try:
            return cls(_parse_int_list(text))
        except ValueError as exc:
            if isinstance(exc, InvalidBetaSetError):
                raise
            raise InvalidBetaSetError(str(exc)) from None

    def __str__(self):
        return _format_int_list(self.hooks)

    def __iter__(self):
        return iter(self.hooks)

    def __len__(self):
        return len(self.hooks)

    def __contains__(self, x):
        return x in self.hooks


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def hook_lengths(p) -> list[list[int]]:
    """Hook length of every cell, one row per part.

    Uses column lengths instead of walking the diagram: the cell (i, j) has
    ``parts[i] - j - 1`` cells to its right and ``col_len[j] - i - 1`` below.
    """
    parts = as_partition(p).parts
    if not parts:
        return []
    col_len = [sum(1 for x in parts if x > j) for j in range(parts[0])]
    return [
        [(row - j - 1) + (col_len[j] - i - 1) + 1 for j in range(row)]
        for i, row in enumerate(parts)
    ]


def is_a_core(p, a: int) -> bool:
    if a < 1:
        raise ValueError(f"modulus must be positive, got {a}")
    return not any(h % a == 0 for row in hook_lengths(p) for h in row)


def is_simultaneous_core(p, moduli: Sequence[int]) -> bool:
    """True if ``p`` is an ``a``-core for every ``a`` in ``moduli``."""
    for a in moduli:
        if a < 1:
            raise ValueError(f"modulus must be positive, got {a}")
    hooks = [h for row in hook_lengths(p) for h in row]
    return all(h % a != 0 for a in moduli for h in hooks)


def has_distinct_parts(p) -> bool:
    parts = as_partition(p).parts
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def beta_set(p) -> BetaSet:
    parts = as_partition(p).parts
    m = len(parts)
    return BetaSet(tuple(x + (m - 1 - i) for i, x in enumerate(parts)))


def partition_from_beta_set(b) -> Partition:
    """Inverse of :func:`beta_set`.

    Accepts a :class:`BetaSet`, an unordered ``set``/``frozenset`` (sorted
    here), or a sequence that must already be strictly decreasing.
    """
    if isinstance(b, BetaSet):
        bs = b
    elif isinstance(b, (set, frozenset)):
        bs = BetaSet.from_set(b)
    else:
        bs = BetaSet(tuple(b))
    m = len(bs.hooks)
    return Partition(tuple(h - (m - 1 - i) for i, h in enumerate(bs.hooks)))


def beta_gap_test(b) -> bool:
    """True iff no two elements of ``b`` differ by exactly 1."""
    values = set(b)
    return not any(x + 1 in values for x in values)
