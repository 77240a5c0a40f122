"""Distinct-part (s, s+2)-cores to lattice paths with positive endpoint.

For odd ``s = 2k + 1`` the pipeline is::

    partition -> beta-set (an order ideal I of P_{s,s+2})
              -> coordinates I' = psi(I), split into left part L and right part R
              -> J = f_L(I' & L) | (Q- minus f_R(I' & R)), an ideal of the strip Q
              -> heights h_0 .. h_{2k+1} of J
              -> path with i-th point at height h_i - h_0

Q = {(a, b) : 1 <= a - b <= 2k + 2} is infinite, so ideals of Q are only
ever handled through their height sequences. Position ``p`` in Q is the
diagonal ``a - b = 2k + 2 - p``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    EvenModulusError,
    InvalidPathError,
    NotACoreError,
    NotAnOrderIdealError,
    NotBalancedError,
    NotInPosetError,
    PathEndpointError,
    PathLengthError,
    RepeatedPartsError,
    WrongSideError,
)
from .gap_poset import (
    CoprimePair,
    GapIdeal,
    PlaneCoord,
    is_gap,
    is_order_ideal,
    membership_2k,
    psi,
    psi_inverse,
)
from .partition_core import (
    Partition,
    as_partition,
    beta_gap_test,
    beta_set,
    has_distinct_parts,
    is_simultaneous_core,
    partition_from_beta_set,
)


class Side(str, enum.Enum):
    L = "L"
    R = "R"


@dataclass(frozen=True)
class BalancedIdeal:
    """A balanced order ideal of Q, stored as its heights h_0 .. h_{2k+1}."""

    k: int
    heights: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.heights)
        object.__setattr__(self, "heights", h)
        k = self.k
        if k < 0:
            raise NotBalancedError(f"k must be non-negative, got {k}")
        if len(h) != 2 * k + 2:
            raise NotBalancedError(f"expected {2 * k + 2} heights for k={k}, got {len(h)}")
        for i, x in enumerate(h):
            if (x - i - 1) % 2:
                raise NotBalancedError(f"height h_{i}={x} has the wrong parity")
        for i in range(len(h) - 1):
            if abs(h[i + 1] - h[i]) != 1:
                raise NotBalancedError(f"heights h_{i}, h_{i + 1} do not differ by 1: {h}")
        if not (h[0] < 0 <= h[-1] and abs(h[0] + h[-1]) == 1):
            raise NotBalancedError(f"heights are not balanced: {h}")


@dataclass(frozen=True)
class LatticePath:
    """A word over U = (1, 1) and D = (1, -1) starting at the origin."""

    steps: str

    def __post_init__(self):
        steps = str(self.steps).strip().upper()
        object.__setattr__(self, "steps", steps)
        bad = set(steps) - {"U", "D"}
        if bad:
            raise InvalidPathError(f"path may only contain U and D, found {sorted(bad)}")

    @classmethod
    def from_heights(cls, ys: Iterable[int]) -> LatticePath:
        ys = list(ys)
        steps = []
        for y0, y1 in zip(ys, ys[1:]):
            if y1 - y0 == 1:
                steps.append("U")
            elif y1 - y0 == -1:
                steps.append("D")
            else:
                raise InvalidPathError(f"consecutive heights {y0}, {y1} are not a unit step")
        return cls("".join(steps))

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)

    def points(self) -> list[int]:
        """y-coordinates of the n + 1 points of the path."""
        ys = [0]
        for step in self.steps:
            ys.append(ys[-1] + (1 if step == "U" else -1))
        return ys

    @property
    def endpoint(self) -> tuple[int, int]:
        return len(self.steps), self.steps.count("U") - self.steps.count("D")

    def sort_key(self):
        # U sorts before D
        return self.steps.replace("U", "0").replace("D", "1")


def k_of(s: int) -> int:
    if s < 1 or s % 2 == 0:
        raise EvenModulusError(f"s must be an odd positive integer, got {s}")
    return (s - 1) // 2


def _pair(k: int) -> CoprimePair:
    return CoprimePair(2 * k + 1, 2 * k + 3)


def side_of(c, k: int) -> Side:
    a, b = c
    if not membership_2k(c, k):
        raise NotInPosetError(f"{tuple(c)} is not in P'_({2 * k + 1},{2 * k + 3})")
    return Side.L if a > b else Side.R


def minimal_L(i: int, k: int) -> PlaneCoord:
    if not 1 <= i <= k:
        raise IndexError(f"l_i needs 1 <= i <= {k}, got {i}")
    return PlaneCoord(k + i, k - i)


def minimal_R(j: int, k: int) -> PlaneCoord:
    if not 1 <= j <= k:
        raise IndexError(f"r_j needs 1 <= j <= {k}, got {j}")
    return PlaneCoord(j - 1, 2 * k - j)


def small_number_coord(x: int, k: int) -> PlaneCoord:
    """Coordinates of a gap ``1 <= x <= 2k``: odd ones are minimal in L, even ones in R."""
    if not 1 <= x <= 2 * k:
        raise ValueError(f"need 1 <= x <= {2 * k}, got {x}")
    return minimal_L((x + 1) // 2, k) if x % 2 else minimal_R(x // 2, k)


def check_characterization(ideal_coords: Iterable, k: int) -> bool:
    """Coordinate form of the no-adjacent-integers condition on an ideal.

    Forbids ``l_x`` together with ``r_x`` (the integers ``2x-1, 2x``) and
    ``r_x`` together with ``l_{x+1}`` (the integers ``2x, 2x+1``).
    """
    members = {PlaneCoord(*c) for c in ideal_coords}
    for x in range(1, k + 1):
        if minimal_L(x, k) in members and minimal_R(x, k) in members:
            return False
        if x < k and minimal_R(x, k) in members and minimal_L(x + 1, k) in members:
            return False
    return True


def f_L(c, k: int | None = None) -> PlaneCoord:
    """Identity embedding of L into Q+; with ``k`` given, ``c`` is checked to lie in L."""
    if k is not None and side_of(c, k) is not Side.L:
        raise WrongSideError(f"f_L is defined on L only, got {tuple(c)}")
    return PlaneCoord(*c)


def f_R(c, k: int) -> PlaneCoord:
    """Order-reversing embedding of R into Q-."""
    if side_of(c, k) is not Side.R:
        raise WrongSideError(f"f_R is defined on R only, got {tuple(c)}")
    a, b = c
    return PlaneCoord(3 * k + 1 - b, k - 1 - a)


def f_R_inverse(q, k: int) -> PlaneCoord:
    qa, qb = q
    return PlaneCoord(k - 1 - qb, 3 * k + 1 - qa)


def _position(q, k):
    return 2 * k + 2 - (q[0] - q[1])


def _validate_ideal(ideal, k):
    pair = _pair(k)
    members = frozenset(ideal)
    if not is_order_ideal(members, pair):
        bad = sorted(x for x in members if not is_gap(x, pair))
        why = f"non-gaps {bad}" if bad else "not downward closed"
        raise NotAnOrderIdealError(f"not an order ideal of P_({pair.s},{pair.t}): {why}")
    if not beta_gap_test(members):
        x = min(x for x in members if x + 1 in members)
        raise RepeatedPartsError(f"ideal contains adjacent integers {x}, {x + 1}")
    return members


def forward(ideal: Iterable[int], k: int) -> BalancedIdeal:
    """Send a no-adjacent order ideal of P_{2k+1,2k+3} to a balanced ideal of Q.

    At each position the height comes from the lowest ``a + b`` present in J:
    an element of ``f_L(I' & L)`` if there is one, otherwise the first
    element of Q- on that diagonal not deleted by ``f_R(I' & R)``.
    """
    members = _validate_ideal(ideal, k)
    pair = _pair(k)
    top = 2 * k + 1
    plus_best: dict[int, int] = {}
    deleted: set[PlaneCoord] = set()
    for x in members:
        c = psi(x, pair)
        if side_of(c, k) is Side.L:
            p = _position(c, k)
            plus_best[p] = min(plus_best.get(p, c.a + c.b), c.a + c.b)
        else:
            deleted.add(f_R(c, k))
    heights = []
    for p in range(2 * k + 2):
        if p in plus_best:
            heights.append(top - plus_best[p])
            continue
        d = 2 * k + 2 - p
        total = top if d % 2 else top + 1
        while PlaneCoord((total + d) // 2, (total - d) // 2) in deleted:
            total += 2
        heights.append(top - total)
    return BalancedIdeal(k, tuple(heights))


def backward(J: BalancedIdeal) -> GapIdeal:
    """Inverse of :func:`forward`: ``f_L^-1(J & Q+) | f_R^-1(Q- minus J)``."""
    k = J.k
    pair = _pair(k)
    top = 2 * k + 1
    coords = []
    for p, h in enumerate(J.heights):
        d = 2 * k + 2 - p
        lowest = top - h  # smallest a + b in J on this diagonal
        first_minus = top if d % 2 else top + 1
        for total in range(lowest, top, 2):
            coords.append(f_L(((total + d) // 2, (total - d) // 2), k))
        for total in range(first_minus, lowest, 2):
            c = f_R_inverse(((total + d) // 2, (total - d) // 2), k)
            if not membership_2k(c, k) or side_of(c, k) is not Side.R:
                raise NotBalancedError(f"heights {J.heights} have no preimage")
            coords.append(c)
    return frozenset(psi_inverse(c, pair) for c in coords)


def to_path(J: BalancedIdeal) -> LatticePath:
    return LatticePath.from_heights(J.heights)


def from_path(path, k: int | None = None) -> BalancedIdeal:
    path = path if isinstance(path, LatticePath) else LatticePath(path)
    n, d = path.endpoint
    if k is None:
        if n % 2 == 0:
            raise PathLengthError(f"length mismatch: path length must be odd, got {n}")
        k = (n - 1) // 2
    if n != 2 * k + 1:
        raise PathLengthError(f"length mismatch: expected {2 * k + 1} steps, got {n}")
    if d <= 0:
        raise PathEndpointError(f"endpoint not positive: path ends at ({n}, {d})")
    shift = -2 * ((d - 1) // 4) - 1
    return BalancedIdeal(k, tuple(y + shift for y in path.points()))


def check_distinct_core(p, s: int) -> Partition:
    """Return ``p`` as a Partition or raise the precise reason it is not a distinct-part (s, s+2)-core."""
    k_of(s)
    p = as_partition(p)
    if not has_distinct_parts(p):
        raise RepeatedPartsError(f"parts not distinct: {p}")
    if not is_simultaneous_core(p, (s, s + 2)):
        raise NotACoreError(f"not an ({s},{s + 2})-core: {p}")
    return p


def partition_to_path(p, s: int) -> LatticePath:
    p = check_distinct_core(p, s)
    return to_path(forward(beta_set(p), k_of(s)))


def path_to_partition(path, s: int) -> Partition:
    k = k_of(s)
    return partition_from_beta_set(backward(from_path(path, k)))


def trace(p, s: int) -> dict:
    """Every intermediate object of the forward map as a JSON-ready dict."""
    p = check_distinct_core(p, s)
    k = k_of(s)
    pair = _pair(k)
    b = beta_set(p)
    J = forward(b, k)
    return {
        "s": s,
        "partition": str(p),
        "beta_set": list(b.hooks),
        "ideal": [list(psi(x, pair)) for x in b.hooks],
        "heights": list(J.heights),
        "path": str(to_path(J)),
    }
