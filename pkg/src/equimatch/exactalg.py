"""Exact sparse linear algebra over the rationals.

Matrices are stored column-major as sorted (row, Fraction) coordinate lists.
Rank is computed by clearing each column's denominators (column scaling never
changes rank) and running fraction-free Bareiss elimination over
arbitrary-precision integers, with pivoting by minimal absolute value.

`rank_certified` adds a fast path: a single modular elimination over a large
prime field lower-bounds the rational rank, so whenever it reaches
min(rows, cols) the exact rank is certified without big-integer work; any
shortfall falls back to Bareiss.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

import numpy as np

_CERT_PRIME = 2_147_483_647  # fits in int64 with safe products


@dataclass(frozen=True)
class BasisIndex:
    """Bijection between sorted basis labels and 0-based positions."""

    labels: tuple

    def __post_init__(self):
        if list(self.labels) != sorted(set(self.labels)):
            raise ValueError("labels must be strictly sorted and distinct")

    @cached_property
    def position(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def __len__(self):
        return len(self.labels)


Column = tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class ExactMatrix:
    nrows: int
    ncols: int
    cols: tuple[Column, ...]  # per column, sorted by row, no zeros

    def __post_init__(self):
        if len(self.cols) != self.ncols:
            raise ValueError("column count mismatch")
        for col in self.cols:
            prev = -1
            for (r, v) in col:
                if not (0 <= r < self.nrows):
                    raise ValueError("row index out of range")
                if r <= prev:
                    raise ValueError("column entries not strictly sorted by row")
                if v == 0:
                    raise ValueError("stored zero entry")
                prev = r

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def entry(self, r: int, c: int) -> Fraction:
        for (row, v) in self.cols[c]:
            if row == r:
                return v
        return Fraction(0)

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for (r, v) in col:
                dense[r][c] = v
        return dense

    def transpose(self) -> "ExactMatrix":
        rows: list[list[tuple[int, Fraction]]] = [[] for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for (r, v) in col:
                rows[r].append((c, v))
        return ExactMatrix(self.ncols, self.nrows, tuple(tuple(r) for r in rows))


def from_entries(nrows: int, ncols: int, entries) -> ExactMatrix:
    """Build from (row, col, value) triples; values are coerced to Fraction."""
    cols: list[dict[int, Fraction]] = [dict() for _ in range(ncols)]
    for (r, c, v) in entries:
        v = Fraction(v)
        if v == 0:
            continue
        acc = cols[c].get(r, Fraction(0)) + v
        if acc == 0:
            cols[c].pop(r, None)
        else:
            cols[c][r] = acc
    return ExactMatrix(
        nrows, ncols, tuple(tuple(sorted(col.items())) for col in cols)
    )


def identity(n: int) -> ExactMatrix:
    return ExactMatrix(n, n, tuple(((i, Fraction(1)),) for i in range(n)))


def multiply(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.ncols != b.nrows:
        raise ValueError("inner dimensions do not conform")
    cols = []
    for bc in b.cols:
        acc: dict[int, Fraction] = {}
        for (i, v) in bc:
            for (r, w) in a.cols[i]:
                s = acc.get(r, Fraction(0)) + w * v
                if s == 0:
                    acc.pop(r, None)
                else:
                    acc[r] = s
        cols.append(tuple(sorted(acc.items())))
    return ExactMatrix(a.nrows, b.ncols, tuple(cols))


def equals(a: ExactMatrix, b: ExactMatrix) -> bool:
    return a.nrows == b.nrows and a.ncols == b.ncols and a.cols == b.cols


def permutation_matrix(basis: BasisIndex, mapping) -> ExactMatrix:
    """0/1 matrix sending the column of label x to the row of mapping(x)."""
    pos = basis.position
    get = mapping.__getitem__ if hasattr(mapping, "__getitem__") else mapping
    cols = []
    seen = set()
    for lab in basis.labels:
        img = get(lab)
        if img not in pos:
            raise ValueError(f"image {img!r} is not a basis label")
        if img in seen:
            raise ValueError("mapping is not a bijection on the labels")
        seen.add(img)
        cols.append(((pos[img], Fraction(1)),))
    return ExactMatrix(len(basis), len(basis), tuple(cols))


def _integer_columns(m: ExactMatrix) -> list[list[tuple[int, int]]]:
    """Clear each column's denominators; returns integer sparse columns."""
    out = []
    for col in m.cols:
        if not col:
            out.append([])
            continue
        mult = lcm(*(v.denominator for (_, v) in col)) if col else 1
        scaled = [(r, int(v * mult)) for (r, v) in col]
        g = 0
        for (_, v) in scaled:
            g = gcd(g, abs(v))
        if g > 1:
            scaled = [(r, v // g) for (r, v) in scaled]
        out.append(scaled)
    return out


def rank(m: ExactMatrix) -> int:
    """Exact rational rank via integer fraction-free Bareiss elimination."""
    cols = _integer_columns(m)
    # eliminate over the smaller dimension for speed; rank is transpose-invariant
    if m.nrows < m.ncols:
        rows: list[list[int]] = [[0] * m.nrows for _ in range(m.ncols)]
        for c, col in enumerate(cols):
            for (r, v) in col:
                rows[c][r] = v
        nr, nc = m.ncols, m.nrows
    else:
        rows = [[0] * m.ncols for _ in range(m.nrows)]
        for c, col in enumerate(cols):
            for (r, v) in col:
                rows[r][c] = v
        nr, nc = m.nrows, m.ncols
    return _bareiss_rank(rows, nr, nc)


def _bareiss_rank(rows: list[list[int]], nr: int, nc: int) -> int:
    prev = 1
    rk = 0
    for c in range(nc):
        # pivot: minimal absolute value, then lowest row index
        piv_i = -1
        piv_abs = 0
        for i in range(rk, nr):
            v = rows[i][c]
            if v:
                a = -v if v < 0 else v
                if piv_i < 0 or a < piv_abs:
                    piv_i, piv_abs = i, a
        if piv_i < 0:
            continue
        if piv_i != rk:
            rows[rk], rows[piv_i] = rows[piv_i], rows[rk]
        rp = rows[rk]
        piv = rp[c]
        for i in range(rk + 1, nr):
            ri = rows[i]
            vi = ri[c]
            if vi:
                for j in range(c + 1, nc):
                    ri[j] = (ri[j] * piv - rp[j] * vi) // prev
                ri[c] = 0
            elif prev != piv:
                for j in range(c + 1, nc):
                    ri[j] = ri[j] * piv // prev
        prev = piv
        rk += 1
        if rk == nr:
            break
    return rk


def rank_mod(m: ExactMatrix, prime: int = _CERT_PRIME) -> int:
    """Rank of the denominator-cleared matrix over F_prime (vectorized)."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    cols = _integer_columns(m)
    a = np.zeros((m.nrows, m.ncols), dtype=np.int64)
    for c, col in enumerate(cols):
        for (r, v) in col:
            a[r, c] = v % prime
    rk = 0
    for c in range(m.ncols):
        sub = a[rk:, c]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        i = rk + int(nz[0])
        if i != rk:
            a[[rk, i]] = a[[i, rk]]
        inv = pow(int(a[rk, c]), prime - 2, prime)
        a[rk, c:] = (a[rk, c:] * inv) % prime
        factors = a[rk + 1 :, c].copy()
        if factors.size:
            a[rk + 1 :, c:] = (
                a[rk + 1 :, c:] - np.outer(factors, a[rk, c:])
            ) % prime
        rk += 1
        if rk == m.nrows:
            break
    return rk


def rank_certified(m: ExactMatrix) -> int:
    """Exact rank; modular certificate when full, Bareiss otherwise.

    rank over F_p never exceeds the rational rank, so hitting the trivial
    upper bound min(rows, cols) certifies the exact value.
    """
    ub = min(m.nrows, m.ncols)
    if ub == 0:
        return 0
    if rank_mod(m) == ub:
        return ub
    return rank(m)
