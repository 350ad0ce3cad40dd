"""Independent brute-force oracles used only by the test suite.

These deliberately avoid the algorithms of the package under test:
matchings by subset filtering, automorphisms by filtering all permutations,
rank by naive rational Gaussian elimination (dense and sparse-dict forms).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from equimatch.exactalg import ExactMatrix
from equimatch.graph import Graph


def brute_force_matchings(g: Graph, k: int) -> list[int]:
    """All k-matchings as bitsets by filtering every k-subset of edges."""
    out = []
    for combo in combinations(range(g.num_edges), k):
        verts = set()
        ok = True
        for i in combo:
            u, v = g.edges[i]
            if u in verts or v in verts:
                ok = False
                break
            verts.update((u, v))
        if ok:
            out.append(sum(1 << i for i in combo))
    out.sort()
    return out


def brute_force_counts(g: Graph) -> list[int]:
    counts = []
    k = 0
    while True:
        c = len(brute_force_matchings(g, k))
        if c == 0:
            break
        counts.append(c)
        k += 1
    return counts


def brute_force_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edge_set = set(g.edges)
    out = []
    for perm in permutations(range(g.n)):
        if all(
            tuple(sorted((perm[u], perm[v]))) in edge_set for (u, v) in g.edges
        ):
            out.append(perm)
    return sorted(out)


def rank_gauss_dense(m: ExactMatrix) -> int:
    """Naive dense Gaussian elimination over Fractions (first-nonzero pivot)."""
    rows = m.to_dense()
    nr, nc = m.nrows, m.ncols
    rank = 0
    for c in range(nc):
        piv = None
        for i in range(rank, nr):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = Fraction(1) / pr[c]
        for i in range(rank + 1, nr):
            f = rows[i][c]
            if f:
                fi = f * inv
                ri = rows[i]
                for j in range(c, nc):
                    ri[j] -= pr[j] * fi
        rank += 1
        if rank == nr:
            break
    return rank


def rank_gauss_sparse(m: ExactMatrix) -> int:
    """Left-looking sparse rational elimination with min-row pivots.

    Each incoming column is reduced against the stored pivot columns until it
    empties (dependent) or claims an unclaimed minimal row.  Stored pivot
    columns have their pivot at their minimal row, so the reduction strictly
    raises the column's minimal row and terminates.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for col in m.cols:
        cur = {r: v for (r, v) in col}
        while cur:
            r = min(cur)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = cur
                rank += 1
                break
            f = cur[r] / piv[r]
            for rr, vv in piv.items():
                s = cur.get(rr, Fraction(0)) - f * vv
                if s == 0:
                    cur.pop(rr, None)
                else:
                    cur[rr] = s
    return rank
