"""Exact reduced simplicial homology over the integers, with a mod-2 cross-check.

Boundary matrices are stored sparsely.  The Smith normal form is computed in
two phases: first every available ``+-1`` pivot is eliminated with sparse row
operations (this clears almost all of a typical boundary matrix), then the
small dense remainder is diagonalised by classical pivoting on the entry of
smallest absolute value.  Python integers keep every step exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .complexes import SimplicialComplex


class WindowError(ValueError):
    """The requested homology window needs faces that were not enumerated."""


class IntegerMatrix:
    """Sparse integer matrix stored column by column (``cols[j] = {row: value}``)."""

    __slots__ = ("rows", "ncols", "cols")

    def __init__(self, rows: int, cols: int, columns: list[dict[int, int]] | None = None):
        self.rows = rows
        self.ncols = cols
        self.cols = columns if columns is not None else [{} for _ in range(cols)]
        if len(self.cols) != cols:
            raise ValueError("column storage does not match the column count")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.ncols)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> IntegerMatrix:
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        columns = [{i: int(rows[i][j]) for i in range(nr) if rows[i][j]} for j in range(nc)]
        return cls(nr, nc, columns)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.rows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.ncols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for col in other.cols:
            acc: dict[int, int] = {}
            for k, b in col.items():
                for i, a in self.cols[k].items():
                    acc[i] = acc.get(i, 0) + a * b
            out.append({i: v for i, v in acc.items() if v})
        return IntegerMatrix(self.rows, other.ncols, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __repr__(self) -> str:
        return f"<IntegerMatrix {self.rows}x{self.ncols} nnz={self.nnz()}>"


# -- boundary operators ------------------------------------------------------

def boundary_matrix(k: SimplicialComplex, d: int) -> IntegerMatrix:
    """Matrix of the augmented boundary map from ``d``-faces to ``(d-1)``-faces.

    Rows and columns follow the lexicographic face order of ``k``; deleting the
    vertex in position ``i`` contributes ``(-1)**i``.  ``d = 0`` maps every
    vertex to the empty face.
    """
    if d < -1 or d > k.dim + 1:
        raise ValueError(f"boundary dimension {d} outside [-1, {k.dim + 1}]")
    if not k.is_complete and d > k.complete_through:
        raise WindowError(f"{d}-faces were not fully enumerated")
    targets = k.faces(d - 1)
    index = k.face_index(d - 1)
    columns = []
    for f in k.faces(d):
        col = {}
        for i in range(len(f)):
            col[index[f[:i] + f[i + 1:]]] = -1 if i & 1 else 1
        columns.append(col)
    return IntegerMatrix(len(targets), len(columns), columns)


# -- Smith normal form ---------------------------------------------------------

def _eliminate_units(m: IntegerMatrix) -> tuple[int, dict[int, dict[int, int]]]:
    """Eliminate +-1 pivots sparsely.  Returns (number of unit pivots, remaining rows)."""
    rows: dict[int, dict[int, int]] = {}
    colrows: dict[int, set[int]] = {}
    for j, col in enumerate(m.cols):
        if col:
            colrows[j] = set(col)
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    units = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(colrows):
            members = colrows.get(j)
            if not members:
                colrows.pop(j, None)
                continue
            best = None
            for i in members:
                v = rows[i][j]
                if v == 1 or v == -1:
                    key = (len(rows[i]), i)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            pi = best[1]
            prow = rows.pop(pi)
            u = prow[j]
            for c in prow:
                colrows[c].discard(pi)
            for i in colrows.pop(j):
                row = rows[i]
                f = row[j] * u
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        if c not in row:
                            colrows[c].add(i)
                        row[c] = nv
                    else:
                        del row[c]
                        if c != j:
                            colrows[c].discard(i)
                if not row:
                    del rows[i]
            units += 1
            progress = True
    return units, {i: r for i, r in rows.items() if r}


def _dense_invariant_factors(a: list[list[int]]) -> list[int]:
    """Smith normal form of a dense matrix by min-|entry| pivoting (ties: lowest (row, col))."""
    factors: list[int] = []
    a = [row[:] for row in a]
    while a and a[0]:
        piv = None
        for i, row in enumerate(a):
            for j, v in enumerate(row):
                if v and (piv is None or abs(v) < piv[0]):
                    piv = (abs(v), i, j)
        if piv is None:
            break
        _, pi, pj = piv
        a[0], a[pi] = a[pi], a[0]
        for row in a:
            row[0], row[pj] = row[pj], row[0]
        while True:
            p = a[0][0]
            dirty = False
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // p
                    if q:
                        ri, r0 = a[i], a[0]
                        for c in range(len(r0)):
                            if r0[c]:
                                ri[c] -= q * r0[c]
                    if a[i][0]:
                        dirty = True
            r0 = a[0]
            for j in range(1, len(r0)):
                if r0[j]:
                    q = r0[j] // p
                    if q:
                        for row in a:
                            if row[0]:
                                row[j] -= q * row[0]
                    if r0[j]:
                        dirty = True
            if not dirty:
                # pivot row and column are clear; enforce divisibility of the rest
                bad = next((i for i in range(1, len(a))
                            if any(v % p for v in a[i][1:])), None)
                if bad is None:
                    break
                r0, rb = a[0], a[bad]
                for c in range(len(r0)):
                    r0[c] += rb[c]
                continue
            # a smaller remainder appeared: move it to the corner
            best = None
            for i in range(len(a)):
                v = a[i][0]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, 0)
            for j in range(len(a[0])):
                v = a[0][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), 0, j)
            _, bi, bj = best
            a[0], a[bi] = a[bi], a[0]
            for row in a:
                row[0], row[bj] = row[bj], row[0]
        factors.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
        a = [row for row in a if any(row)]
        if a:
            live = [j for j in range(len(a[0])) if any(row[j] for row in a)]
            a = [[row[j] for j in live] for row in a]
    return factors


def smith_normal_form(m: IntegerMatrix | Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of ``m`` and its rank."""
    if not isinstance(m, IntegerMatrix):
        m = IntegerMatrix.from_dense(m)
    units, rest = _eliminate_units(m)
    factors = [1] * units
    if rest:
        cols = sorted({c for r in rest.values() for c in r})
        cpos = {c: k for k, c in enumerate(cols)}
        dense = []
        for i in sorted(rest):
            row = [0] * len(cols)
            for c, v in rest[i].items():
                row[cpos[c]] = v
            dense.append(row)
        factors += _dense_invariant_factors(dense)
    return factors, len(factors)


def rank_mod2(m: IntegerMatrix) -> int:
    """Rank over GF(2) by XOR elimination on bitset columns."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in m.cols:
        v = 0
        for i, x in col.items():
            if x & 1:
                v |= 1 << i
        while v:
            h = v.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = v
                rank += 1
                break
            v ^= p
    return rank


# -- homology -----------------------------------------------------------------

@dataclass(frozen=True)
class HomologyGroup:
    """``Z^rank`` plus cyclic torsion summands, invariant factors in divisibility order."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        t = tuple(self.torsion)
        if any(x < 2 for x in t):
            raise ValueError("torsion coefficients must be >= 2")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z_{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass
class HomologySummary:
    """Reduced homology groups over the window ``[lo, hi]``.

    Dimensions outside the window are unknown: indexing them raises
    ``KeyError`` instead of pretending the group vanishes.
    """

    lo: int
    hi: int
    groups: dict[int, HomologyGroup] = field(default_factory=dict)

    def __getitem__(self, d: int) -> HomologyGroup:
        if not self.lo <= d <= self.hi:
            raise KeyError(f"dimension {d} outside computed window [{self.lo}, {self.hi}]")
        return self.groups[d]

    def rank(self, d: int) -> int:
        return self[d].rank

    def ranks(self) -> dict[int, int]:
        return {d: g.rank for d, g in sorted(self.groups.items())}

    def nonzero(self) -> dict[int, HomologyGroup]:
        return {d: g for d, g in sorted(self.groups.items()) if not g.is_trivial}

    def short(self) -> str:
        """Compact rendering such as ``5:Z; 7:Z^4``; ``0`` when everything vanishes."""
        items = [f"{d}:{g}" for d, g in self.nonzero().items()]
        return "; ".join(items) if items else "0"

    def format(self) -> str:
        lines = []
        for d in range(self.lo, self.hi + 1):
            g = self.groups[d]
            lines.append(f"{d}: rank={g.rank} torsion=[{','.join(map(str, g.torsion))}]")
        return "\n".join(lines)


def default_window(k: SimplicialComplex) -> tuple[int, int]:
    """Largest window computable from the enumerated faces."""
    if k.is_complete:
        return (-1, max(k.dim, -1))
    return (-1, k.complete_through - 1)


def _check_window(k: SimplicialComplex, lo: int, hi: int) -> None:
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    if lo < -1:
        raise ValueError("reduced homology starts in dimension -1")
    if not k.is_complete and hi + 1 > k.complete_through:
        raise WindowError(
            f"H_{hi} needs faces of dimension {hi + 1}, but the complex is only "
            f"enumerated through dimension {k.complete_through}"
        )


def reduced_homology(k: SimplicialComplex, lo: int | None = None, hi: int | None = None) -> HomologySummary:
    """Reduced integral homology of ``k`` in dimensions ``lo..hi``."""
    dlo, dhi = default_window(k)
    lo = dlo if lo is None else lo
    hi = dhi if hi is None else hi
    _check_window(k, lo, hi)
    snf: dict[int, tuple[list[int], int]] = {}

    def of(d: int) -> tuple[list[int], int]:
        if d not in snf:
            if d > k.dim or d < 0:
                snf[d] = ([], 0)
            else:
                snf[d] = smith_normal_form(boundary_matrix(k, d))
        return snf[d]

    groups = {}
    for d in range(lo, hi + 1):
        f_d = len(k.faces(d))
        _, rank_d = of(d)
        factors, rank_up = of(d + 1)
        groups[d] = HomologyGroup(f_d - rank_d - rank_up, tuple(x for x in factors if x > 1))
    return HomologySummary(lo, hi, groups)


def betti_mod2(k: SimplicialComplex, lo: int | None = None, hi: int | None = None) -> dict[int, int]:
    """Reduced Betti numbers over GF(2) in dimensions ``lo..hi``."""
    dlo, dhi = default_window(k)
    lo = dlo if lo is None else lo
    hi = dhi if hi is None else hi
    _check_window(k, lo, hi)
    ranks: dict[int, int] = {}

    def rk(d: int) -> int:
        if d not in ranks:
            ranks[d] = 0 if d > k.dim or d < 0 else rank_mod2(boundary_matrix(k, d))
        return ranks[d]

    return {d: len(k.faces(d)) - rk(d) - rk(d + 1) for d in range(lo, hi + 1)}


def homology_from_ranks(ranks: dict[int, int], lo: int, hi: int) -> HomologySummary:
    """Torsion-free summary with the given ranks (missing dimensions are zero)."""
    return HomologySummary(lo, hi, {d: HomologyGroup(ranks.get(d, 0)) for d in range(lo, hi + 1)})


def format_kv(values: dict, indent: int = 0) -> str:
    """Nested key-value text tree; keys keep insertion order."""
    pad = "  " * indent
    lines = []
    for key, val in values.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(format_kv(val, indent + 1))
        elif isinstance(val, (list, tuple)):
            lines.append(f"{pad}{key}: [{', '.join(map(str, val))}]")
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(line for line in lines if line)


def summary_tree(h: HomologySummary) -> dict:
    return {
        "window": [h.lo, h.hi],
        "groups": {str(d): {"rank": g.rank, "torsion": list(g.torsion)}
                   for d, g in sorted(h.groups.items())},
    }


__all__ = [
    "HomologyGroup", "HomologySummary", "IntegerMatrix", "WindowError", "betti_mod2",
    "boundary_matrix", "default_window", "format_kv", "rank_mod2", "reduced_homology",
    "smith_normal_form", "summary_tree",
]
