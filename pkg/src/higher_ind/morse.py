"""Discrete Morse matchings on face posets.

The generic engine (matchings, acyclicity check, element matchings, patchwork)
works on explicit collections of faces so that each named construction below
can be audited independently of the rule that produced it.  The named
constructions reproduce the matchings used to compute the homotopy types of
r-independence complexes of paths, cycles, whiskered graphs, complete
multipartite graphs and perfect m-ary trees.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from . import graphs
from .complexes import Simplex, SimplicialComplex, independence_complex
from .formulas import tree_parameters
from .graphs import Graph, GraphError


class MatchingError(ValueError):
    """A pair is not a covering relation, or a face is matched twice."""


class PatchworkError(ValueError):
    """The fibre map is not order preserving; ``witness`` is an offending (face, coface)."""

    def __init__(self, msg: str, witness: tuple[Simplex, Simplex] | None = None):
        super().__init__(msg)
        self.witness = witness


def add_vertex(face: Simplex, x: int) -> Simplex:
    i = bisect_left(face, x)
    return face[:i] + (x,) + face[i:]


def remove_vertex(face: Simplex, x: int) -> Simplex:
    i = face.index(x)
    return face[:i] + face[i + 1:]


def _is_cover(lo: Simplex, hi: Simplex) -> bool:
    return len(hi) == len(lo) + 1 and set(lo) <= set(hi)


def _face_key(f: Simplex) -> tuple[int, Simplex]:
    return (len(f), f)


class Matching:
    """Partial matching on a face poset: a set of covering pairs ``(sigma, tau)``."""

    def __init__(self, pairs: Iterable[tuple[Simplex, Simplex]] = ()):
        self._up: dict[Simplex, Simplex] = {}
        self._down: dict[Simplex, Simplex] = {}
        for lo, hi in pairs:
            self.add(lo, hi)

    def add(self, lo: Simplex, hi: Simplex) -> None:
        lo, hi = tuple(lo), tuple(hi)
        if not _is_cover(lo, hi):
            raise MatchingError(f"{lo} -> {hi} is not a covering relation")
        for f in (lo, hi):
            if f in self._up or f in self._down:
                raise MatchingError(f"face {f} is matched twice")
        self._up[lo] = hi
        self._down[hi] = lo

    def up(self, face: Simplex) -> Simplex | None:
        return self._up.get(face)

    def down(self, face: Simplex) -> Simplex | None:
        return self._down.get(face)

    def partner(self, face: Simplex) -> Simplex | None:
        return self._up.get(face) or self._down.get(face)

    def __contains__(self, face: Simplex) -> bool:
        return face in self._up or face in self._down

    def pairs(self) -> list[tuple[Simplex, Simplex]]:
        return sorted(self._up.items(), key=lambda p: (_face_key(p[0]), p[1]))

    def matched_faces(self) -> set[Simplex]:
        return set(self._up) | set(self._down)

    def __len__(self) -> int:
        return len(self._up)

    def __iter__(self):
        return iter(self.pairs())

    def update(self, other: Matching) -> Matching:
        for lo, hi in other._up.items():
            self.add(lo, hi)
        return self

    def union(self, *others: Matching) -> Matching:
        out = Matching(self._up.items())
        for o in others:
            out.update(o)
        return out

    def __repr__(self) -> str:
        return f"<Matching {len(self)} pairs>"


@dataclass
class MorseResult:
    """A matching on a collection of faces together with its critical cells."""

    matching: Matching
    domain: list[Simplex]
    critical: list[Simplex]
    acyclic: bool
    complex: SimplicialComplex | None = None
    labels: Sequence[Hashable] | None = None
    notes: dict = field(default_factory=dict)

    @property
    def counts_by_dim(self) -> dict[int, int]:
        """Critical cells per dimension; the empty face counts in dimension -1."""
        out: dict[int, int] = {}
        for f in self.critical:
            out[len(f) - 1] = out.get(len(f) - 1, 0) + 1
        return dict(sorted(out.items()))

    @property
    def empty_paired(self) -> bool:
        return () in self.matching

    def cell_counts(self) -> dict[int, int]:
        """Cell counts of the equivalent CW complex: critical cells of dimension
        >= 0, plus one extra 0-cell when the empty face is paired."""
        out = {d: c for d, c in self.counts_by_dim.items() if d >= 0}
        if self.empty_paired:
            out[0] = out.get(0, 0) + 1
        return dict(sorted(out.items()))

    def critical_labels(self) -> list[tuple]:
        if self.labels is None:
            return [tuple(f) for f in self.critical]
        return [tuple(self.labels[v] for v in f) for f in self.critical]


# -- acyclicity --------------------------------------------------------------

def _validate(domain: set[Simplex], m: Matching) -> None:
    for lo, hi in m.pairs():
        if lo not in domain or hi not in domain:
            raise MatchingError(f"pair {lo} -> {hi} leaves the domain")


def verify_acyclic(domain: Iterable[Simplex], m: Matching) -> bool:
    """True iff the modified Hasse diagram has no directed cycle.

    Matched covering edges point up, every other covering relation inside the
    domain points down.  Raises :class:`MatchingError` for pairs outside the
    domain (malformed pairs are already rejected by :class:`Matching`).
    """
    faces = set(map(tuple, domain))
    _validate(faces, m)

    def successors(f: Simplex) -> list[Simplex]:
        out = []
        up = m.up(f)
        if up is not None:
            out.append(up)
        below = m.down(f)
        for i in range(len(f)):
            s = f[:i] + f[i + 1:]
            if s != below and s in faces:
                out.append(s)
        return out

    white, grey, black = 0, 1, 2
    color = dict.fromkeys(faces, white)
    # cycles alternate up/down along matched edges, so only matched faces can start one
    for root in sorted(m.matched_faces(), key=_face_key):
        if color[root] != white:
            continue
        color[root] = grey
        stack = [(root, iter(successors(root)))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = black
                stack.pop()
                continue
            c = color[nxt]
            if c == grey:
                return False
            if c == white:
                color[nxt] = grey
                stack.append((nxt, iter(successors(nxt))))
    return True


def critical_cells(domain: Iterable[Simplex], m: Matching) -> list[Simplex]:
    return sorted((f for f in domain if f not in m), key=_face_key)


def morse_result(domain: Iterable[Simplex], m: Matching, complex_=None, labels=None,
                 check: bool = True, **notes) -> MorseResult:
    dom = sorted(set(map(tuple, domain)), key=_face_key)
    acyclic = verify_acyclic(dom, m) if check else True
    return MorseResult(m, dom, critical_cells(dom, m), acyclic, complex_, labels, dict(notes))


# -- element matchings ---------------------------------------------------------

def element_matching_steps(faces: Iterable[Simplex], xs: Sequence[int]):
    """Yield ``(x_i, M(x_i), N(x_i), Delta_i)`` for the sequence of element matchings."""
    delta = set(map(tuple, faces))
    for x in xs:
        pairs = []
        for f in sorted(delta, key=_face_key):
            if x in f:
                continue
            up = add_vertex(f, x)
            if up in delta:
                pairs.append((f, up))
        used = {f for p in pairs for f in p}
        delta -= used
        yield x, pairs, used, set(delta)


def element_matching_sequence(
    k: SimplicialComplex | Iterable[Simplex], xs: Sequence[int]
) -> tuple[Matching, list[Simplex]]:
    """Union of the element matchings ``M(x_1), M(x_2), ...`` and the remaining faces."""
    faces = list(k.all_faces()) if isinstance(k, SimplicialComplex) else list(k)
    if isinstance(k, SimplicialComplex):
        for x in xs:
            if not 0 <= x < k.ground_set:
                raise GraphError(f"vertex {x} is not in the ground set")
    m = Matching()
    delta: set[Simplex] = set(map(tuple, faces))
    for _, pairs, _, delta in element_matching_steps(faces, xs):
        for lo, hi in pairs:
            m.add(lo, hi)
    return m, sorted(delta, key=_face_key)


# -- patchwork ---------------------------------------------------------------

def patchwork(
    faces: Iterable[Simplex],
    fiber_of: Callable[[Simplex], Hashable] | Mapping[Simplex, Hashable],
    matchings: Mapping[Hashable, Matching],
    leq: Callable[[Hashable, Hashable], bool] | None = None,
    check: bool = False,
) -> Matching:
    """Glue per-fibre matchings along an order-preserving map to a poset.

    ``leq`` is the order on the target poset (default: ``<=``).  Every covering
    pair inside ``faces`` is checked for order preservation, and every fibre
    matching must stay inside its fibre.
    """
    get = fiber_of.__getitem__ if isinstance(fiber_of, Mapping) else fiber_of
    leq = leq or (lambda a, b: a <= b)
    faces = set(map(tuple, faces))
    q_of = {f: get(f) for f in faces}
    for f in faces:
        for i in range(len(f)):
            s = f[:i] + f[i + 1:]
            if s in faces and not leq(q_of[s], q_of[f]):
                raise PatchworkError(f"fibre map not order preserving at {s} < {f}", (s, f))
    out = Matching()
    for q, mq in matchings.items():
        for lo, hi in mq.pairs():
            if q_of.get(lo, object()) != q or q_of.get(hi, object()) != q:
                raise PatchworkError(f"pair {lo} -> {hi} is not inside fibre {q!r}", (lo, hi))
            out.add(lo, hi)
    if check and not verify_acyclic(faces, out):
        raise MatchingError("patched matching is not acyclic")
    return out


def join_matching(parts: Sequence[tuple[Sequence[int], Matching, set[Simplex]]],
                  faces: Iterable[Simplex]) -> Matching:
    """Matching on faces of a join from matchings on the factors.

    ``parts`` lists ``(vertex set, matching, critical faces)`` per factor.  A
    face is matched through the first factor whose restriction is not critical;
    a face is critical iff every restriction is.
    """
    owner = {}
    for j, (verts, _, _) in enumerate(parts):
        for v in verts:
            owner[v] = j
    m = Matching()
    for f in faces:
        pieces: list[list[int]] = [[] for _ in parts]
        for v in f:
            pieces[owner[v]].append(v)
        for j, (_, mj, crit) in enumerate(parts):
            piece = tuple(pieces[j])
            if piece in crit:
                continue
            up = mj.up(piece)
            if up is not None:
                rest = tuple(v for v in f if owner[v] != j)
                m.add(f, tuple(sorted(rest + up)))
            break
    return m


# -- paths ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _path_matching_positions(length: int, d: int):
    """Perfect matching on Ind_{d-2} of a path with positions ``1..length``.

    Returns ``(faces, pairs, critical)`` in position coordinates.  Faces meeting
    a multiple of ``d`` are split by their smallest multiple ``d*t`` and matched
    with the element ``d*t - d + 1``; faces avoiding all multiples receive the
    element matchings ``1, d+1, 2d+1, ...``.
    """
    r = d - 2
    g = graphs.path(length) if length else graphs.empty_graph(0)
    cx = independence_complex(g, r)
    faces = [tuple(v + 1 for v in f) for f in cx.all_faces()]
    k = -(-length // d)
    mults = [d * t for t in range(1, k + 1) if d * t <= length]

    def fiber(f: Simplex) -> int:
        fs = set(f)
        for t, x in enumerate(mults, start=1):
            if x in fs:
                return k - t + 1
        return 0

    fibres: dict[int, list[Simplex]] = {}
    for f in faces:
        fibres.setdefault(fiber(f), []).append(f)
    per: dict[int, Matching] = {}
    critical: list[Simplex] = []
    for q, fs in fibres.items():
        if q == 0:
            xs = [d * i + 1 for i in range(k)]
        else:
            xs = [d * (k - q + 1) - d + 1]
        mq, rest = element_matching_sequence(fs, xs)
        per[q] = mq
        critical += rest
    m = patchwork(faces, fiber, per)
    return tuple(faces), tuple(m.pairs()), tuple(sorted(critical, key=_face_key))


def relabeled_path_matching(order: Sequence[int], d: int):
    """Path matching transported to the path whose i-th vertex is ``order[i]``.

    Returns ``(faces, Matching, critical set)`` with faces as sorted tuples of
    the given vertex ids.
    """
    faces, pairs, crit = _path_matching_positions(len(order), d)

    def tr(f: Simplex) -> Simplex:
        return tuple(sorted(order[p - 1] for p in f))

    m = Matching((tr(a), tr(b)) for a, b in pairs)
    return [tr(f) for f in faces], m, {tr(f) for f in crit}


def path_perfect_matching(n: int, d: int, check: bool = True) -> MorseResult:
    """Perfect acyclic matching on ``Ind_{d-2}(P_n)`` (vertices 0-based, labels 1..n).

    For ``n`` in ``{dk-1, dk}`` exactly one cell, ``{di+2, ..., di+d-1 : i < k}``,
    stays critical; otherwise none.
    """
    if n < 1:
        raise ValueError("path_perfect_matching needs n >= 1")
    if d < 3:
        raise ValueError("path_perfect_matching needs d >= 3")
    g = graphs.path(n)
    faces, m, _ = relabeled_path_matching(list(range(n)), d)
    cx = independence_complex(g, d - 2)
    return morse_result(faces, m, cx, g.labels, check=check, construction="path", n=n, d=d)


def path_critical_cell(n: int, d: int) -> Simplex | None:
    """The predicted critical cell (labels ``1..n``), or ``None`` when there is none."""
    k = -(-n // d)
    if n not in (d * k, d * k - 1):
        return None
    return tuple(v for i in range(k) for v in range(d * i + 2, d * i + d))


# -- cycles ----------------------------------------------------------------------

def cycle_morse_matching(n: int, d: int, check: bool = True) -> MorseResult:
    """Composite acyclic matching on ``Ind_{d-2}(C_n)`` for ``n >= d >= 3``.

    Faces are split by the smallest multiple of ``d`` they contain.  Faces whose
    smallest multiple is ``dt`` with ``t >= 2`` are matched with ``dt-d+1``.
    Faces containing ``d`` are split by the component ``L`` of ``d``; each such
    family is a copy of the independence complex of the path left over after
    deleting ``L`` and its two neighbours and receives the transported path
    matching.  Critical cells of neighbouring families are then paired by
    extending ``L`` one step to the left.  Faces avoiding all multiples form the
    complex of a disjoint union of paths and get the join of path matchings.
    """
    if d < 3:
        raise ValueError("cycle_morse_matching needs d >= 3")
    if n < d:
        raise ValueError("cycle_morse_matching needs n >= d")
    r = d - 2
    g = graphs.cycle(n)
    cx = independence_complex(g, r)
    k = n // d
    mults = [d * t for t in range(1, k + 1)]

    # labels 1..n; convert at the end
    def cyc(v: int) -> int:
        return (v - 1) % n + 1

    def component_of_d(f: Simplex) -> tuple[int, ...]:
        fs = set(f)
        lo = d
        while cyc(lo - 1) in fs and cyc(lo - 1) != d:
            lo = cyc(lo - 1)
        comp = [lo]
        v = lo
        while cyc(v + 1) in fs and cyc(v + 1) != lo:
            v = cyc(v + 1)
            comp.append(v)
        return tuple(comp)  # in cyclic order starting from the left end

    faces = [tuple(v + 1 for v in f) for f in cx.all_faces()]

    def fiber(f: Simplex):
        fs = set(f)
        for t, x in enumerate(mults, start=1):
            if x in fs:
                if t == 1:
                    comp = component_of_d(f)
                    return (k, len(comp), tuple(sorted(comp)))
                return (k - t + 1, 0, ())
        return (0, 0, ())

    fibres: dict[tuple, list[Simplex]] = {}
    for f in faces:
        fibres.setdefault(fiber(f), []).append(f)

    per: dict[tuple, Matching] = {}
    crit_by_fibre: dict[tuple, set[Simplex]] = {}
    lefts: dict[tuple, int] = {}
    for q, fs in sorted(fibres.items()):
        rank, c, comp = q
        if rank == 0:
            # complement of the multiples of d: a disjoint union of paths
            blocks = [list(range(d * j + 1, d * j + d)) for j in range(1, k)]
            blocks.append(list(range(d * k + 1, n + 1)) + list(range(1, d)))
            parts = []
            for b in blocks:
                _, mb, cb = relabeled_path_matching(b, d)
                parts.append((b, mb, cb))
            mq = join_matching(parts, fs)
        elif c == 0:
            t = k - rank + 1
            mq, _ = element_matching_sequence(fs, [d * t - d + 1])
        else:
            left = component_of_d(next(f for f in fs))[0]
            lefts[q] = left
            order = [cyc(left + c + 1 + i) for i in range(n - c - 2)]
            pf, pm, _ = relabeled_path_matching(order, d)
            lift = lambda f: tuple(sorted(f + comp))
            mq = Matching((lift(a), lift(b)) for a, b in pm.pairs())
            if {lift(f) for f in pf} != set(fs):
                raise AssertionError(f"fibre {q} is not a copy of the leftover path complex")
        per[q] = mq
        crit_by_fibre[q] = {f for f in fs if f not in mq}

    m = patchwork(faces, fiber, per)

    # pair critical cells across consecutive component sizes inside the e_d fibre
    critical = {f for cs in crit_by_fibre.values() for f in cs}
    extra = Matching()
    for q in sorted(lefts):
        for gamma in sorted(crit_by_fibre[q], key=_face_key):
            if gamma in extra or gamma not in critical:
                continue
            x = cyc(lefts[q] - 1)
            up = add_vertex(gamma, x)
            if up in critical and up not in extra:
                extra.add(gamma, up)
    m.update(extra)

    def to_idx(f: Simplex) -> Simplex:
        return tuple(v - 1 for v in f)

    m0 = Matching((to_idx(a), to_idx(b)) for a, b in m.pairs())
    return morse_result((to_idx(f) for f in faces), m0, cx, g.labels, check=check,
                        construction="cycle", n=n, d=d, cross_pairs=len(extra))


# -- element-matching constructions ---------------------------------------------

def whisker_matching(g: Graph, r: int, check: bool = True) -> MorseResult:
    """Element matchings with the whisker leaves ``b_1, ..., b_n`` on ``Ind_r(W(g))``."""
    if g.n == 0 or not graphs.is_connected(g):
        raise GraphError("whisker_matching needs a connected base graph")
    w = graphs.whisker_all(g)
    cx = independence_complex(w, r)
    xs = [w.index(("b", i + 1)) for i in range(g.n)]
    m, _ = element_matching_sequence(cx, xs)
    return morse_result(cx.all_faces(), m, cx, w.labels, check=check, construction="whisker")


def leafy_matching(g: Graph, counts: Sequence[int], r: int, check: bool = True) -> MorseResult:
    """Element matchings with the first leaf ``b_{i,1}`` at every vertex of ``g^L``."""
    if any(c <= 0 for c in counts):
        raise GraphError("every vertex needs at least one attached leaf")
    if not graphs.is_connected(g):
        raise GraphError("leafy_matching needs a connected base graph")
    gl = graphs.attach_leaves(g, counts)
    cx = independence_complex(gl, r)
    key = (lambda i: ("b", i + 1)) if all(c == 1 for c in counts) else (lambda i: ("b", i + 1, 1))
    xs = [gl.index(key(i)) for i in range(g.n)]
    m, _ = element_matching_sequence(cx, xs)
    return morse_result(cx.all_faces(), m, cx, gl.labels, check=check, construction="leafy")


def multipartite_matching(parts: Sequence[int], r: int, check: bool = True) -> MorseResult:
    """Element matchings with ``v_1^1, ..., v_s^1`` on ``Ind_r(K_{m_1,...,m_s})``."""
    if len(parts) < 2:
        raise GraphError("multipartite_matching needs at least two parts")
    g = graphs.complete_multipartite(parts)
    cx = independence_complex(g, r)
    xs = [g.index((i + 1, 1)) for i in range(len(parts))]
    m, _ = element_matching_sequence(cx, xs)
    return morse_result(cx.all_faces(), m, cx, g.labels, check=check, construction="multipartite")


def leftmost_leaves(tree: Graph, m: int, h: int) -> list[int]:
    """``a_{h,1}, a_{h,m+1}, ..., a_{h, m^h - m + 1}``: the first child in each sibling group."""
    if h == 0:
        return [tree.index(("a", 0, 1))]
    return [tree.index(("a", h, m * i + 1)) for i in range(m ** (h - 1))]


def tree_matching(m: int, h: int, r: int, check: bool = True) -> MorseResult:
    """Element matchings with the leftmost leaves on ``Ind_r(B_h^m)``."""
    tree = graphs.perfect_mary_tree(m, h)
    cx = independence_complex(tree, r)
    mt, _ = element_matching_sequence(cx, leftmost_leaves(tree, m, h))
    return morse_result(cx.all_faces(), mt, cx, tree.labels, check=check, construction="tree")


def tree_reduction_matching(m: int, h: int, r: int, check: bool = True) -> MorseResult:
    """Element matchings with the leftmost leaves restricted to the faces meeting depth ``h-t-1``.

    On that family the matching is perfect, so its complement, the faces of
    ``Ind_r(B_h^m - V_{h-t-1})``, is exactly the critical set.
    """
    t, _ = tree_parameters(m, r)
    if h <= t:
        raise ValueError(f"no reduction: height {h} does not exceed t = {t}")
    tree = graphs.perfect_mary_tree(m, h)
    cx = independence_complex(tree, r)
    level = set(graphs.depth_level(tree, h - t - 1))
    meets = [f for f in cx.all_faces() if level.intersection(f)]
    mt, rest = element_matching_sequence(meets, leftmost_leaves(tree, m, h))
    if rest:
        raise MatchingError(f"{len(rest)} faces meeting depth {h - t - 1} stay unmatched")
    return morse_result(cx.all_faces(), mt, cx, tree.labels, check=check,
                        construction="tree-reduction", removed_depth=h - t - 1)


def tree_collapse(m: int, h: int, r: int, check: bool = True) -> SimplicialComplex:
    """Critical subcomplex of :func:`tree_reduction_matching` (requires ``h > t``).

    The result is ``Ind_r(B_h^m - V_{h-t-1})`` on the original vertex indices.
    """
    res = tree_reduction_matching(m, h, r, check=check)
    if check and not res.acyclic:
        raise MatchingError("tree reduction matching is not acyclic")
    sub = SimplicialComplex(res.complex.ground_set, res.critical)
    if not sub.is_downward_closed():
        raise MatchingError("critical cells do not form a subcomplex")
    return sub


# -- Morse inequalities --------------------------------------------------------------

def morse_inequality_check(result: MorseResult, hom) -> bool:
    """Strong Morse inequalities and the Euler identity against computed homology.

    In every dimension of the window, ``c_d >= rank H_d + t(H_d) + t(H_{d-1})``
    where ``t`` counts torsion summands and the empty face counts as a
    (-1)-cell.  When the window covers every dimension of the domain the
    alternating sums must agree as well; in the CW convention this is the
    statement that the extra 0-cell (present when the empty face is paired)
    accounts for the unreduced Euler characteristic.
    """
    counts = result.counts_by_dim
    top = max((len(f) - 1 for f in result.domain), default=-1)
    if hom.hi < -1 or hom.lo > top + 1:
        raise ValueError("homology window does not meet the matching's dimensions")
    for d in range(hom.lo, hom.hi + 1):
        g = hom[d]
        prev = len(hom[d - 1].torsion) if d - 1 >= hom.lo else 0
        if counts.get(d, 0) < g.rank + len(g.torsion) + prev:
            return False
    if hom.lo <= -1 and hom.hi >= top:
        cells = result.cell_counts()
        cw = sum((-1) ** d * c for d, c in cells.items())
        reduced = sum((-1) ** d * hom[d].rank for d in range(hom.lo, hom.hi + 1))
        if cw != reduced + 1:
            return False
    return True


# -- text format -----------------------------------------------------------------------

def _fmt(f: Simplex) -> str:
    return ",".join(map(str, f)) if f else "-"


def format_matching(result: MorseResult) -> str:
    lines = [f"{_fmt(a)} -> {_fmt(b)}" for a, b in result.matching.pairs()]
    lines.append("critical:")
    lines += [_fmt(f) for f in result.critical]
    return "\n".join(lines) + "\n"


def parse_matching(text: str) -> tuple[Matching, list[Simplex]]:
    def face(s: str) -> Simplex:
        s = s.strip()
        return () if s == "-" else tuple(int(x) for x in s.split(","))

    m = Matching()
    crit: list[Simplex] = []
    in_crit = False
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line == "critical:":
            in_crit = True
        elif in_crit:
            crit.append(face(line))
        else:
            a, b = line.split("->")
            m.add(face(a), face(b))
    return m, crit
