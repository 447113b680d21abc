"""Opening and closure: pointed bipartite quadrangulations of genus g
versus well-labeled one-face maps on the same surface.

Opening labels every vertex with its distance to the basepoint, draws one
chord per face joining the two corners where the labels step up, then
erases the basepoint star and all original edges. What survives is a
one-face map whose labels are the distances.

Closure rebuilds the quadrangulation from the labels alone: a new vertex
is wired into every corner labeled 1, every other corner is joined to its
predecessor (the first corner with the next smaller label along the face
walk), and the tree edges are erased. Matching corners of the tree root
recover the root of the quadrangulation, one arc per sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalCheckError, PreconditionError
from .labeling import (
    LabeledMap,
    distance_labels,
    is_embedded,
    is_well_labeled,
    relabel_nu,
    shift_min_1,
)
from .quad import check_quadrangulation
from .rotmap import (
    Corner,
    RotationMap,
    add_edge_in_face,
    add_vertex_star,
    delete_edges,
    delete_vertex_star,
    face_corners,
    next_corner,
)

__all__ = ["PointedQuad", "OpeningResult", "open", "open_rooted",
           "open_rooted_pointed", "close", "close_rooted",
           "close_rooted_pointed", "predecessor"]


@dataclass(frozen=True)
class PointedQuad:
    """A bipartite quadrangulation with a marked vertex (by index)."""

    quad: RotationMap
    basepoint: int

    def __post_init__(self):
        check_quadrangulation(self.quad)
        if not (0 <= self.basepoint < self.quad.n_vertices):
            raise PreconditionError(
                f"basepoint {self.basepoint} is out of range")

    @property
    def basepoint_dart(self) -> int:
        return self.quad.vertices[self.basepoint][0]


class OpeningResult(NamedTuple):
    tree: LabeledMap
    sign: int


def _pred_corner(m: RotationMap, vlabels, c: Corner) -> Corner:
    """First corner with label one below c's, walking the face from c."""
    vi = m.vertex_index
    want = vlabels[vi[c]] - 1
    x = next_corner(m, c)
    while x != c:
        if vlabels[vi[x]] == want:
            return x
        x = next_corner(m, x)
    raise PreconditionError(
        f"no corner labeled {want} in the face of corner {c}")


def predecessor(t_prime: LabeledMap, c: Corner) -> Corner:
    """The corner a chord from c would attach to."""
    m = t_prime.map
    if not (1 <= c <= m.n_darts):
        raise PreconditionError(f"corner {c} is out of range")
    if t_prime.label_of(c) < 1:
        raise PreconditionError("corner label must be at least 1")
    return _pred_corner(m, t_prime.labels, c)


# -- opening -----------------------------------------------------------------


def _certify_orientation(q: RotationMap, qp: RotationMap, dist) -> None:
    """Consistency certificate, checked before anything is erased.

    In the chorded map, orient every original edge out of the face where
    it ascends. Each face must have exactly one outgoing edge, minima must
    not increase along the orientation, and the unique cycle must be the
    ring of faces around the basepoint.
    """
    vi = qp.vertex_index
    fi = qp.face_index
    n_old = q.n_darts
    out = {}
    fmin = {}
    at_v0 = set()
    for F, orbit in enumerate(qp.faces):
        asc = [d for d in orbit
               if d <= n_old and dist[vi[qp.alpha[d]]] > dist[vi[d]]]
        if len(asc) != 1:
            raise InternalCheckError(
                f"face has {len(asc)} ascending original arcs, wanted 1")
        out[F] = fi[qp.alpha[asc[0]]]
        fmin[F] = min(dist[vi[d]] for d in orbit)
        if any(dist[vi[d]] == 0 for d in orbit):
            at_v0.add(F)
    for F, G in out.items():
        if fmin[G] > fmin[F]:
            raise InternalCheckError(
                "face minimum increases along the orientation")
    indeg = {F: 0 for F in out}
    for G in out.values():
        indeg[G] += 1
    stack = [F for F in out if indeg[F] == 0]
    alive = set(out)
    while stack:
        F = stack.pop()
        alive.discard(F)
        G = out[F]
        indeg[G] -= 1
        if indeg[G] == 0 and G in alive:
            stack.append(G)
    start = next(iter(alive))
    cyc = {start}
    x = out[start]
    while x != start:
        cyc.add(x)
        x = out[x]
    if cyc != alive:
        raise InternalCheckError("orientation closes more than one cycle")
    if alive != at_v0:
        raise InternalCheckError(
            "oriented cycle does not ring the basepoint")


def _open_core(q: RotationMap, v0: int) -> tuple[LabeledMap, int]:
    check_quadrangulation(q)
    if not (0 <= v0 < q.n_vertices):
        raise PreconditionError(f"basepoint {v0} is out of range")
    dist = distance_labels(q, q.vertices[v0][0])
    vi = q.vertex_index

    # one chord per face, joining the two corners where labels step up
    chords = []
    for f in q.faces:
        walk = face_corners(q, f[0])
        labs = [dist[vi[c]] for c in walk]
        asc = [i for i in range(4) if labs[i] == labs[i - 1] + 1]
        if len(asc) != 2:
            raise InternalCheckError(
                f"face walk has labels {labs}, not a geodesic pattern")
        chords.append((walk[asc[0]], walk[asc[1]]))
    cur = q
    chord_at = {}
    for u, v in chords:
        r = cur.n_darts
        cur = add_edge_in_face(cur, u, v)
        chord_at[u] = r + 1
        chord_at[v] = r + 2

    _certify_orientation(q, cur, dist)

    # the surviving root: the chord drawn at the top corner of the root edge
    e_hat = q.root if dist[vi[q.alpha[q.root]]] > dist[vi[q.root]] \
        else q.alpha[q.root]
    sign = 1 if e_hat == q.root else -1
    root_t = chord_at[q.alpha[e_hat]]

    cur2, dmap1 = delete_vertex_star(cur, q.vertices[v0][0],
                                     new_root=root_t, return_dart_map=True)
    survivors = [dmap1[d] for d in range(1, q.n_darts + 1) if d in dmap1]
    tree, dmap2 = delete_edges(cur2, survivors, return_dart_map=True)

    # labels follow the vertices: chord darts never move between vertices
    cvi = cur.vertex_index
    inv = {}
    for old, mid in dmap1.items():
        new = dmap2.get(mid)
        if new is not None:
            inv[new] = old
    labels = tuple(dist[cvi[inv[orbit[0]]]] for orbit in tree.vertices)
    lm = LabeledMap(tree, labels)
    if tree.n_faces != 1 or tree.genus != q.genus or not is_well_labeled(lm):
        raise InternalCheckError("opening left a malformed labeled map")
    return lm, sign


def open(pq: PointedQuad) -> LabeledMap:  # noqa: A001 - mirrors the operation name
    """Open a pointed quadrangulation into a well-labeled one-face map."""
    lm, _ = _open_core(pq.quad, pq.basepoint)
    return lm


def open_rooted(q: RotationMap) -> LabeledMap:
    """Open with the basepoint at the root vertex; the result is rooted at
    the chord of the root face and its root label is 1."""
    lm, sign = _open_core(q, q.vertex_index[q.root])
    if sign != 1 or lm.root_label != 1:
        raise InternalCheckError("root-vertex opening lost its orientation")
    return lm


def open_rooted_pointed(q: RotationMap, v0: int) -> OpeningResult:
    """Open with an arbitrary basepoint. The labels are translated so the
    root label is 1, and the sign records whether the root arc ascended."""
    lm, sign = _open_core(q, v0)
    return OpeningResult(relabel_nu(lm), sign)


# -- closure -----------------------------------------------------------------


def _close_core(t: LabeledMap) -> tuple[RotationMap, int, int]:
    """Rebuild the quadrangulation around a well-labeled one-face map.

    Returns (quad rooted at the ascending root arc, basepoint index,
    dart of the descending root arc).
    """
    m = t.map
    if m.n_faces != 1:
        raise PreconditionError("closure needs a one-face map")
    if not is_well_labeled(t):
        raise PreconditionError(
            "closure needs labels with minimum 1 varying by at most 1 "
            "along every edge")
    n_darts0 = m.n_darts

    walk = face_corners(m, m.root)
    ones = [c for c in walk if t.label_of(c) == 1]
    tp = add_vertex_star(m, ones)
    v0_dart = n_darts0 + 2
    v0_idx = tp.n_vertices - 1
    vlab = t.labels + (0,)

    cur = tp
    for f in tp.faces:
        corners = face_corners(tp, f[0])
        i0 = next(i for i, c in enumerate(corners)
                  if tp.vertex_index[c] == v0_idx)
        listing = corners[i0:] + corners[:i0]
        q_len = len(listing) - 1
        inner = listing[2:q_len]
        if any(vlab[tp.vertex_index[c]] < 2 for c in inner):
            raise InternalCheckError("corner below 2 strictly inside a face")
        # chords in reverse walk order so each corner's own chord is in
        # place before later chords land next to it
        for c in reversed(inner):
            cur = add_edge_in_face(cur, c, _pred_corner(cur, vlab, c))

    # both root recoveries read the rotation just before the tree root
    before = cur.sigma.index(m.root)
    root_plus = cur.alpha[before]
    quad, dmap = delete_edges(cur, list(range(1, n_darts0 + 1)),
                              new_root=root_plus, return_dart_map=True)
    try:
        check_quadrangulation(quad)
    except PreconditionError as exc:
        raise InternalCheckError(f"closure left a non-quadrangulation: {exc}")
    if quad.genus != m.genus:
        raise InternalCheckError("closure changed the genus")
    return quad, quad.vertex_index[dmap[v0_dart]], dmap[before]


def close(t: LabeledMap) -> PointedQuad:
    """Close a well-labeled one-face map into a pointed quadrangulation."""
    quad, v0_idx, _ = _close_core(t)
    return PointedQuad(quad, v0_idx)


def close_rooted(t: LabeledMap) -> RotationMap:
    """Close a well-labeled map rooted at a label-1 vertex; the result is
    rooted at the basepoint, which is the root vertex."""
    if t.root_label != 1:
        raise PreconditionError("rooted closure needs root label 1")
    quad, _, _ = _close_core(t)
    return quad


def close_rooted_pointed(t: LabeledMap, sign: int) -> PointedQuad:
    """Close an embedded one-face map with a sign choosing the root arc."""
    if sign not in (1, -1):
        raise PreconditionError(f"sign must be +1 or -1, got {sign}")
    if not is_embedded(t):
        raise PreconditionError(
            "rooted pointed closure needs root label 1 and variations "
            "of at most 1")
    quad, v0_idx, root_minus = _close_core(shift_min_1(t))
    if sign == -1:
        quad = quad.reroot(root_minus)
    return PointedQuad(quad, v0_idx)
