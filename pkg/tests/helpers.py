"""Independent oracles shared by several test modules."""

from corepaths.gap_poset import CoprimePair, psi


def heights_by_materialising(ideal, k):
    """Build J inside a finite window of Q and read the heights off by definition.

    Returns ``(heights, is_ideal_in_window)``. The window reaches far enough
    past the deleted cells of Q- that every diagonal has a surviving element.
    """
    pair = CoprimePair(2 * k + 1, 2 * k + 3)
    coords = [psi(x, pair) for x in ideal]
    left = {(a, b) for a, b in coords if a > b}
    right = {(a, b) for a, b in coords if a <= b}
    deleted = {(3 * k + 1 - b, k - 1 - a) for a, b in right}
    ceiling = 2 * k + 1 + 2 * len(deleted) + 4
    J = set(left)
    window = set()
    for total in range(-4 * k - 8, ceiling + 1):
        for d in range(1, 2 * k + 3):
            if (total + d) % 2:
                continue
            q = ((total + d) // 2, (total - d) // 2)
            window.add(q)
            if total >= 2 * k + 1 and q not in deleted:
                J.add(q)
    heights = []
    for p in range(2 * k + 2):
        d = 2 * k + 2 - p
        heights.append(max(2 * k + 1 - a - b for a, b in J if a - b == d))
    closed = all(
        nxt in J
        for a, b in J
        for nxt in ((a + 1, b), (a, b + 1))
        if nxt in window and nxt[0] + nxt[1] <= ceiling
    )
    return tuple(heights), closed
