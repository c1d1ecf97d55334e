"""Closed-form homotopy types of r-independence complexes.

Every evaluator returns a :class:`HomotopyType`, either a point or a finite
wedge of spheres, and :func:`expected_homology` turns it into the reduced
homology it predicts so it can be compared against a computed summary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .graphs import GraphError


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class HomotopyType:
    """A point (no spheres) or a wedge of spheres, stored as sorted ``(dim, count)`` pairs."""

    spheres: tuple[tuple[int, int], ...] = ()
    flags: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        merged: dict[int, int] = {}
        for d, c in self.spheres:
            if d < 0:
                raise ValueError("sphere dimension must be >= 0")
            if c < 0:
                raise ValueError("sphere count must be >= 0")
            if c:
                merged[d] = merged.get(d, 0) + c
        object.__setattr__(self, "spheres", tuple(sorted(merged.items())))

    @property
    def kind(self) -> str:
        return "WedgeOfSpheres" if self.spheres else "Contractible"

    @property
    def is_contractible(self) -> bool:
        return not self.spheres

    def count(self, dim: int) -> int:
        return dict(self.spheres).get(dim, 0)

    def flagged(self, *flags: str) -> HomotopyType:
        return HomotopyType(self.spheres, self.flags + flags)

    def __str__(self) -> str:
        if not self.spheres:
            return "point"
        return "wedge[" + ", ".join(f"{c} x S^{d}" for d, c in self.spheres) + "]"


POINT = HomotopyType()


def wedge(count: int, dim: int, flags: Iterable[str] = ()) -> HomotopyType:
    """``count`` spheres of dimension ``dim``; a point when ``count == 0``."""
    return HomotopyType(((dim, count),) if count else (), tuple(flags))


def wedge_sum(*parts: HomotopyType) -> HomotopyType:
    return HomotopyType(tuple(p for h in parts for p in h.spheres))


def wedge_join(a: HomotopyType, b: HomotopyType) -> HomotopyType:
    """Join of two wedges: ``S^p * S^q = S^(p+q+1)``, distributed over the summands.

    Joining with a point gives a point.
    """
    return HomotopyType(tuple((p + q + 1, c * e) for p, c in a.spheres for q, e in b.spheres))


@dataclass(frozen=True)
class ExpectedHomology:
    """Free reduced homology ranks predicted by a homotopy type (no torsion)."""

    by_dimension: dict[int, int]

    def rank(self, d: int) -> int:
        return self.by_dimension.get(d, 0)

    def matches(self, summary) -> bool:
        """Compare with a computed :class:`~higher_ind.homology.HomologySummary` over its window."""
        for d in range(summary.lo, summary.hi + 1):
            g = summary[d]
            if g.torsion or g.rank != self.rank(d):
                return False
        return all(summary.lo <= d <= summary.hi for d, c in self.by_dimension.items() if c)


def expected_homology(ht: HomotopyType) -> ExpectedHomology:
    return ExpectedHomology(dict(ht.spheres))


# -- evaluators --------------------------------------------------------------

def _check_r(r: int) -> None:
    if r < 1:
        raise ValueError("r must be >= 1")


def ht_complete_multipartite(parts: Sequence[int], r: int) -> HomotopyType:
    """``t = C(M-1, r) - sum C(m_i-1, r)`` spheres of dimension ``r-1``."""
    _check_r(r)
    if len(parts) < 2:
        raise GraphError("need at least two parts (a single part has no edges)")
    if any(p < 1 for p in parts):
        raise GraphError("parts must be positive")
    t = binom(sum(parts) - 1, r) - sum(binom(p - 1, r) for p in parts)
    return wedge(t, r - 1)


def ht_complete(n: int, r: int) -> HomotopyType:
    """``Ind_r(K_n)`` is the ``(r-1)``-skeleton of the ``(n-1)``-simplex."""
    _check_r(r)
    if n < 1:
        raise ValueError("n must be >= 1")
    return wedge(binom(n - 1, r), r - 1)


def ht_whiskered(n: int, r: int) -> HomotopyType:
    """``Ind_r(W(G))`` for connected ``G`` on ``n`` vertices."""
    _check_r(r)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= r <= 2 * n - 1:
        return wedge(binom(n - 1, r - n), r - 1)
    return POINT


def ht_leafy(leaf_counts: Sequence[int], r: int) -> HomotopyType:
    """Connected graph whose ``n`` non-leaf vertices carry ``l_i > 0`` leaves each."""
    _check_r(r)
    if not leaf_counts:
        raise ValueError("need at least one non-leaf vertex")
    if any(c <= 0 for c in leaf_counts):
        raise GraphError("every non-leaf vertex needs at least one leaf")
    n = len(leaf_counts)
    if r >= n:
        return wedge(binom(sum(leaf_counts) - 1, r - n), r - 1)
    return POINT


def ht_path(n: int, d: int) -> HomotopyType:
    """``Ind_{d-2}(P_n)``: ``S^(dk-2k-1)`` when ``n`` is ``dk`` or ``dk-1``, else a point."""
    if n < 1 or d < 3:
        raise ValueError("need n >= 1 and d >= 3")
    k = -(-n // d)
    if n in (d * k, d * k - 1):
        return wedge(1, d * k - 2 * k - 1)
    return POINT


def ht_cycle(n: int, d: int) -> HomotopyType:
    """``Ind_{d-2}(C_n)`` for ``n >= 3``, ``d >= 3``."""
    if n < 3:
        raise GraphError("cycles need n >= 3")
    if d < 3:
        raise ValueError("d must be >= 3")
    if n <= d - 2:
        return POINT
    if n == d - 1:
        return wedge(1, d - 3)
    k, t = divmod(n, d)
    if t == 0:
        return wedge(d - 1, d * k - 2 * k - 1)
    return wedge(1, d * k - 2 * k + t - 2)


def tree_parameters(m: int, r: int) -> tuple[int, int]:
    """Unique ``(t, s)`` with ``t >= 1``, ``0 <= s < m^t`` and ``r = (m^t-1)/(m-1) + s``."""
    if m < 2:
        raise ValueError("m must be >= 2")
    _check_r(r)
    t = 1
    while (m ** (t + 1) - 1) // (m - 1) <= r:
        t += 1
    return t, r - (m ** t - 1) // (m - 1)


OUTSIDE_HYPOTHESIS = "outside stated hypothesis (m = 2)"


def ht_mary_tree(m: int, h: int, r: int) -> HomotopyType:
    """``Ind_r(B_h^m)`` for the perfect m-ary tree of height ``h``.

    Write ``r = (m^t-1)/(m-1) + s``.  Below height ``t`` the complex is a full
    simplex; at height ``t`` it is a wedge of ``C(m^t-1, s)`` spheres; above,
    the homotopy type is periodic in ``h`` with period ``t + 2``.  ``m = 2`` is
    evaluated with the same formulas and flagged.
    """
    if h < 0:
        raise ValueError("h must be >= 0")
    t, s = tree_parameters(m, r)
    flags = (OUTSIDE_HYPOTHESIS,) if m == 2 else ()
    base = binom(m ** t - 1, s)

    def geometric(k: int) -> int:
        return sum(m ** (i * (t + 2)) for i in range(k + 1))

    if h < t:
        out = POINT
    elif (h - t) % (t + 2) == 0:
        k = (h - t) // (t + 2)
        g = geometric(k)
        out = wedge(base ** g, r * g - 1)
    elif (h - t - 1) % (t + 2) == 0:
        k = (h - t - 1) // (t + 2) + 1
        g = geometric(k - 1)
        out = wedge(base ** (m * g), m * r * g - 1)
    else:
        out = POINT
    return out.flagged(*flags) if flags else out


__all__ = [
    "ExpectedHomology", "HomotopyType", "OUTSIDE_HYPOTHESIS", "POINT", "binom",
    "expected_homology", "ht_complete", "ht_complete_multipartite", "ht_cycle",
    "ht_leafy", "ht_mary_tree", "ht_path", "ht_whiskered", "tree_parameters",
    "wedge", "wedge_join", "wedge_sum",
]
