"""Path counting in the level-k Bratteli diagram.

The diagram has a vertex (i, j) for every height 0 <= i <= k with i <= j and
i congruent to j mod 2, and an arc (i, j) -> (i', j+1) whenever |i - i'| = 1
and both endpoints are vertices.  ``count_dp(k, i, j)`` is the number of
directed paths from (0, 0) to (i, j); equivalently, the number of
nonnegative lattice walks of length j with +-1 steps that stay at or below
height k and end at height i.

Two independent backends live here: a column-by-column dynamic program and
binary exponentiation of the (k+1) x (k+1) path-graph adjacency matrix.
Counts are exact Python integers; they reach 2**(j-1) so machine words and
floats are never used.
"""

from dataclasses import dataclass, field


class TableBudgetError(RuntimeError):
    """Raised when a requested table would exceed its entry budget."""


def _check_nonneg(**named: int) -> None:
    for name, value in named.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"{name} must be an integer, got {value!r}")
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def is_vertex(k: int, i: int, j: int) -> bool:
    """True when (i, j) is a vertex of the level-k diagram (reachable from the origin)."""
    return 0 <= i <= k and 0 <= i <= j and (i + j) % 2 == 0


def count_dp(k: int, i: int, j: int) -> int:
    """Count directed paths from (0, 0) to (i, j) by the two-column recurrence.

    The count satisfies D(i, j) = D(i-1, j-1) + D(i+1, j-1) with heights
    outside [0, k] contributing zero.  Unreachable targets (i > k, i > j, or
    i + j odd) count zero; negative arguments are rejected.  Runs in
    O(k * j) integer additions and O(k) memory.
    """
    _check_nonneg(k=k, i=i, j=j)
    if not is_vertex(k, i, j):
        return 0
    cur = [0] * (k + 1)
    cur[0] = 1
    for _ in range(j):
        nxt = [0] * (k + 1)
        for h in range(k + 1):
            s = cur[h - 1] if h > 0 else 0
            if h + 1 <= k:
                s += cur[h + 1]
            nxt[h] = s
        cur = nxt
    return cur[i]


@dataclass
class CountTable:
    """All path counts of the level-k diagram up to length jmax.

    ``entries`` maps (i, j) to the exact count for every vertex; pairs absent
    from the mapping are exactly the unreachable ones.  Treat instances as
    immutable once built.
    """

    k: int
    jmax: int
    entries: dict = field(default_factory=dict)


def table_size(k: int, jmax: int) -> int:
    """Number of vertices (i, j) with j <= jmax, without building anything."""
    total = 0
    for j in range(jmax + 1):
        top = min(k, j)
        if top >= j % 2:
            total += (top - j % 2) // 2 + 1
    return total


def build_table(k: int, jmax: int, *, max_entries: int = 1_000_000) -> CountTable:
    """Tabulate every count with j <= jmax in one DP pass over columns.

    Raises TableBudgetError before allocating anything if the table would
    hold more than ``max_entries`` vertices.
    """
    _check_nonneg(k=k, jmax=jmax, max_entries=max_entries)
    need = table_size(k, jmax)
    if need > max_entries:
        raise TableBudgetError(
            f"table for k={k}, jmax={jmax} needs {need} entries, budget is {max_entries}"
        )
    entries: dict = {}
    cur = [0] * (k + 1)
    cur[0] = 1
    for j in range(jmax + 1):
        for i in range(j % 2, min(k, j) + 1, 2):
            entries[(i, j)] = cur[i]
        nxt = [0] * (k + 1)
        for h in range(k + 1):
            s = cur[h - 1] if h > 0 else 0
            if h + 1 <= k:
                s += cur[h + 1]
            nxt[h] = s
        cur = nxt
    return CountTable(k=k, jmax=jmax, entries=entries)


def _mat_mul(a: list, b: list) -> list:
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for r in range(n):
        ar = a[r]
        outr = out[r]
        for t in range(n):
            art = ar[t]
            if art:
                bt = b[t]
                for c in range(n):
                    outr[c] += art * bt[c]
    return out


def adjacency_power_row(k: int, j: int) -> list:
    """Row 0 of A**j where A is the adjacency matrix of the path graph on heights 0..k."""
    _check_nonneg(k=k, j=j)
    n = k + 1
    power = [[int(r == c) for c in range(n)] for r in range(n)]
    base = [[int(abs(r - c) == 1) for c in range(n)] for r in range(n)]
    e = j
    while e:
        if e & 1:
            power = _mat_mul(power, base)
        e >>= 1
        if e:
            base = _mat_mul(base, base)
    return power[0]


def count_matrix_power(k: int, i: int, j: int) -> int:
    """Entry (0, i) of the j-th power of the path-graph adjacency matrix.

    Agrees with count_dp everywhere; costs O(k**3 log j) big-integer
    multiplications via binary exponentiation.
    """
    _check_nonneg(k=k, i=i, j=j)
    if i > k:
        return 0
    return adjacency_power_row(k, j)[i]


def degrees(k: int, i: int, j: int) -> tuple:
    """(indegree, outdegree) of the vertex (i, j), from the arc rule itself.

    Raises ValueError when (i, j) is not a vertex.  The origin has degrees
    (0, 1) for k >= 1 and (0, 0) for k = 0; vertices pinned by the boundary
    (bottom row, top row, or the leading diagonal) lose one neighbour on the
    pinched side and interior vertices have degrees (2, 2).
    """
    _check_nonneg(k=k)
    if not is_vertex(k, i, j):
        raise ValueError(f"({i}, {j}) is not a vertex of the level-{k} diagram")
    indeg = sum(is_vertex(k, i + d, j - 1) for d in (-1, 1))
    outdeg = sum(is_vertex(k, i + d, j + 1) for d in (-1, 1))
    return (indeg, outdeg)
