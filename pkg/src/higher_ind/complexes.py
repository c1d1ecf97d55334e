"""Simplicial complexes, r-independence complexes and complex-level constructions."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, _check_subset, components_mask, mask_of

Simplex = tuple[int, ...]

DEFAULT_FACE_CAP = 50_000_000


class ComplexTooLarge(RuntimeError):
    """The face count of an enumeration exceeded the configured cap."""


class SimplicialComplex:
    """A finite abstract simplicial complex stored by dimension.

    ``faces(d)`` is the lexicographically sorted list of ``d``-faces; the
    empty face is stored as ``()`` in dimension -1.  ``complete_through`` is
    ``None`` when every face is present, otherwise the largest dimension up to
    which the face list is known to be complete (enumeration was truncated).
    """

    def __init__(
        self,
        ground_set: int,
        faces: Iterable[Sequence[int]],
        complete_through: int | None = None,
        provenance: dict | None = None,
    ):
        by_dim: dict[int, set[Simplex]] = {}
        for f in faces:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise ValueError(f"face {f!r} repeats a vertex")
            if t and not (0 <= t[0] and t[-1] < ground_set):
                raise ValueError(f"face {f!r} leaves the ground set")
            by_dim.setdefault(len(t) - 1, set()).add(t)
        top = max(by_dim, default=-2)
        self._faces: list[list[Simplex]] = [sorted(by_dim.get(d, ())) for d in range(-1, top + 1)]
        self._index: list[dict[Simplex, int]] = [
            {f: i for i, f in enumerate(fs)} for fs in self._faces
        ]
        self.ground_set = ground_set
        self.complete_through = complete_through
        self.provenance = dict(provenance or {})

    @classmethod
    def _from_sorted(cls, ground_set, layers, complete_through=None, provenance=None):
        obj = cls.__new__(cls)
        obj._faces = layers
        obj._index = [{f: i for i, f in enumerate(fs)} for fs in layers]
        obj.ground_set = ground_set
        obj.complete_through = complete_through
        obj.provenance = dict(provenance or {})
        return obj

    @classmethod
    def generated_by(cls, ground_set: int, facets: Iterable[Sequence[int]]) -> SimplicialComplex:
        """Downward closure of the given faces (the empty face is always included)."""
        faces: set[Simplex] = {()}
        for f in facets:
            t = tuple(sorted(f))
            for k in range(len(t) + 1):
                faces.update(combinations(t, k))
        return cls(ground_set, faces)

    # -- queries -------------------------------------------------------
    @property
    def dim(self) -> int:
        """Largest dimension of a stored face (-1 for ``{{}}``, -2 for the void complex)."""
        return len(self._faces) - 2

    def faces(self, d: int) -> list[Simplex]:
        if d < -1 or d > self.dim:
            return []
        return self._faces[d + 1]

    def face_index(self, d: int) -> dict[Simplex, int]:
        if d < -1 or d > self.dim:
            return {}
        return self._index[d + 1]

    def all_faces(self) -> Iterable[Simplex]:
        for layer in self._faces:
            yield from layer

    def __contains__(self, face: Sequence[int]) -> bool:
        t = tuple(face)
        d = len(t) - 1
        return 0 <= d + 1 < len(self._index) and t in self._index[d + 1]

    def __len__(self) -> int:
        return sum(len(layer) for layer in self._faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground_set == other.ground_set and self._faces == other._faces

    def __repr__(self) -> str:
        return f"<SimplicialComplex n={self.ground_set} dim={self.dim} faces={len(self)}>"

    @property
    def is_complete(self) -> bool:
        return self.complete_through is None

    def known_through(self) -> int:
        """Largest dimension whose faces are all present."""
        return self.dim if self.complete_through is None else self.complete_through

    def facets(self) -> list[Simplex]:
        """Maximal faces, in order of increasing dimension then lexicographic."""
        out = []
        for d in range(-1, self.dim + 1):
            up = self.face_index(d + 1)
            for f in self.faces(d):
                fs = set(f)
                if not any(tuple(sorted(fs | {v})) in up
                           for v in range(self.ground_set) if v not in fs):
                    out.append(f)
        return out

    def is_downward_closed(self) -> bool:
        if self.dim >= -1 and () not in self:
            return False
        for d in range(1, self.dim + 1):
            below = self.face_index(d - 1)
            for f in self.faces(d):
                for i in range(len(f)):
                    if f[:i] + f[i + 1:] not in below:
                        return False
        return True


def full_simplex(n: int) -> SimplicialComplex:
    """All subsets of ``0..n-1``."""
    layers = [list(combinations(range(n), k)) for k in range(n + 1)]
    return SimplicialComplex._from_sorted(n, layers)


# -- r-independence ------------------------------------------------------

def _component_size_of(g: Graph, mask: int, v: int, limit: int) -> int:
    """Size of the component of ``v`` inside ``G[mask]``, stopping once it exceeds ``limit``."""
    masks = g._masks
    comp = 1 << v
    frontier = comp
    size = 1
    while frontier:
        nb = 0
        while frontier:
            bit = frontier & -frontier
            nb |= masks[bit.bit_length() - 1]
            frontier ^= bit
        frontier = nb & mask & ~comp
        if frontier:
            comp |= frontier
            size += frontier.bit_count()
            if size > limit:
                return size
    return size


def is_r_independent(g: Graph, s: Iterable[int], r: int) -> bool:
    """Whether every connected component of ``G[s]`` has at most ``r`` vertices."""
    if r < 1:
        raise ValueError("r must be >= 1")
    mask = mask_of(_check_subset(g, s))
    return all(c.bit_count() <= r for c in components_mask(g, mask))


def independence_complex(
    g: Graph,
    r: int,
    max_dim: int | None = None,
    cap: int = DEFAULT_FACE_CAP,
) -> SimplicialComplex:
    """``Ind_r(G)``: all r-independent vertex subsets, optionally only up to ``max_dim``.

    Faces are generated by depth-first extension with larger vertices; a
    branch is pruned as soon as the added vertex lies in a component of size
    greater than ``r`` (r-independence is hereditary).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = g.n
    size_limit = n if max_dim is None else max_dim + 1
    layers: list[list[Simplex]] = [[()]]
    count = 1
    truncated = False
    # stack of (face tuple, face mask, next candidate vertex)
    stack: list[tuple[Simplex, int, int]] = [((), 0, 0)]
    while stack:
        face, mask, start = stack.pop()
        at_limit = len(face) >= size_limit
        children = []
        for v in range(start, n):
            new_mask = mask | (1 << v)
            if _component_size_of(g, new_mask, v, r) > r:
                continue
            if at_limit:
                truncated = True
                break
            children.append((face + (v,), new_mask, v + 1))
        if not children:
            continue
        k = len(face) + 1
        if len(layers) <= k:
            layers.append([])
        layers[k].extend(c[0] for c in children)
        count += len(children)
        if count > cap:
            raise ComplexTooLarge(f"more than {cap} faces in Ind_{r}({g.name or 'G'})")
        stack.extend(reversed(children))
    for layer in layers:
        layer.sort()
    prov = {"graph": g.name, "r": r, "max_dim": max_dim, "truncated": truncated}
    return SimplicialComplex._from_sorted(
        n, layers, complete_through=max_dim if truncated else None, provenance=prov
    )


def independence_complex_naive(g: Graph, r: int) -> SimplicialComplex:
    """Reference enumeration: filter every subset of ``V(G)`` through :func:`is_r_independent`."""
    faces = [s for k in range(g.n + 1) for s in combinations(range(g.n), k)
             if is_r_independent(g, s, r)]
    return SimplicialComplex(g.n, faces)


# -- constructions ---------------------------------------------------------

def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Join; the ground set of ``k2`` is shifted past that of ``k1``."""
    off = k1.ground_set
    layers: list[list[Simplex]] = [[] for _ in range(k1.dim + k2.dim + 3)]
    for a in k1.all_faces():
        for b in k2.all_faces():
            layers[len(a) + len(b)].append(a + tuple(v + off for v in b))
    while layers and not layers[-1]:
        layers.pop()
    for layer in layers:
        layer.sort()
    # a join face of dimension d has parts of dimension <= d, so it can only be
    # missing above the smaller completeness bound
    if k1.is_complete and k2.is_complete:
        through = None
    elif k1.is_complete:
        through = k2.complete_through
    elif k2.is_complete:
        through = k1.complete_through
    else:
        through = min(k1.complete_through, k2.complete_through)
    return SimplicialComplex._from_sorted(off + k2.ground_set, layers, complete_through=through)


def skeleton(k: SimplicialComplex, s: int) -> SimplicialComplex:
    """Faces of dimension at most ``s``."""
    if s < -1:
        raise ValueError("skeleton dimension must be >= -1")
    layers = [list(layer) for layer in k._faces[: s + 2]]
    through = k.complete_through
    if through is not None and through >= s:
        through = None
    return SimplicialComplex._from_sorted(k.ground_set, layers, complete_through=through,
                                          provenance=k.provenance)


def induced_subcomplex(k: SimplicialComplex, keep_faces: Iterable[Sequence[int]]) -> SimplicialComplex:
    return SimplicialComplex(k.ground_set, keep_faces)


def f_vector(k: SimplicialComplex) -> list[int]:
    """``[f_0, f_1, ...]``: number of faces in each dimension ``d >= 0``."""
    return [len(k.faces(d)) for d in range(0, k.dim + 1)]


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    """``-1 + sum_d (-1)^d f_d``; zero for a point, one for two points."""
    return -1 + sum((-1) ** d * f for d, f in enumerate(f_vector(k)))


# -- text format -------------------------------------------------------------

def format_complex(k: SimplicialComplex) -> str:
    """One face per line (comma-separated vertices, ``-`` for the empty face)
    after a header line ``<dim_max> <n_faces>``."""
    lines = [f"{k.dim} {len(k)}"]
    lines += [",".join(map(str, f)) if f else "-" for f in k.all_faces()]
    return "\n".join(lines) + "\n"


def parse_complex(text: str, ground_set: int | None = None) -> SimplicialComplex:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty complex file")
    dim_max, n_faces = (int(x) for x in rows[0].split())
    faces = [() if ln == "-" else tuple(int(x) for x in ln.split(",")) for ln in rows[1:]]
    if len(faces) != n_faces:
        raise ValueError(f"header announces {n_faces} faces, found {len(faces)}")
    if ground_set is None:
        ground_set = 1 + max((v for f in faces for v in f), default=-1)
    k = SimplicialComplex(ground_set, faces)
    if k.dim != dim_max:
        raise ValueError(f"header announces dimension {dim_max}, found {k.dim}")
    return k


__all__ = [
    "ComplexTooLarge", "DEFAULT_FACE_CAP", "GraphError", "Simplex", "SimplicialComplex",
    "f_vector", "format_complex", "full_simplex", "independence_complex",
    "independence_complex_naive", "is_r_independent", "join", "parse_complex",
    "reduced_euler_characteristic", "skeleton",
]
