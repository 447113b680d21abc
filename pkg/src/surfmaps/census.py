"""Exhaustive generation of small rooted maps, one-face maps, labeled
trees, and quadrangulations.

Everything here is an oracle. Correctness and auditability win over
speed, and hard size budgets keep a stray call from wedging the process.
Generation order is deterministic; the rooted-map search tree can be
partitioned across worker processes without changing the output order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator

from .errors import BudgetError, PreconditionError
from .labeling import LabeledMap, distance_labels
from .rotmap import RotationMap

# Default caps on n (edges for maps and trees, faces for quadrangulations).
# The environment variable below replaces the cap for every genus.
DEFAULT_BUDGETS = {0: 5, 1: 4, 2: 3}
MAX_N_ENV = "SURFMAPS_MAX_N"


def _max_n(genus: int | None) -> int:
    override = os.environ.get(MAX_N_ENV)
    if override is not None:
        try:
            return int(override)
        except ValueError:
            raise BudgetError(
                f"{MAX_N_ENV} must be an integer, got {override!r}")
    if genus is None:
        return max(DEFAULT_BUDGETS.values())
    return DEFAULT_BUDGETS.get(genus, min(DEFAULT_BUDGETS.values()))


def _check_budget(n: int, genus: int | None, what: str) -> None:
    if n < 1:
        raise PreconditionError(f"{what} needs n >= 1, got {n}")
    cap = _max_n(genus)
    if n > cap:
        raise BudgetError(
            f"census of {what} at n={n}, genus={genus} exceeds the budget "
            f"of {cap}; set {MAX_N_ENV} to raise it")


# -- all rooted maps ---------------------------------------------------------
#
# A rooted map has a canonical dart numbering (breadth-first from the root,
# scanning sigma then alpha). The generator fills the slots sigma(1),
# alpha(1), sigma(2), alpha(2), ... and only ever introduces the next fresh
# dart number, so it produces each rooted map exactly once, already in
# canonical numbering.


def _slot_search(n_darts: int, prefix: tuple[int, ...] = (),
                 stop_depth: int | None = None) -> Iterator[tuple]:
    """Backtracking over rotation-system slots.

    Yields ("map", sigma, alpha) at complete leaves. With stop_depth set,
    branches still alive after that many choices yield ("prefix", choices)
    instead of being expanded; passing such a tuple back as `prefix`
    restricts a fresh search to that subtree.
    """
    sig = [0] * (n_darts + 1)
    alf = [0] * (n_darts + 1)
    used = [False] * (n_darts + 2)
    choices: list[int] = []

    def rec(d: int, stage: int, m: int) -> Iterator[tuple]:
        if d > n_darts:
            yield ("map", tuple(sig), tuple(alf))
            return
        if stage == 0 and d > m:
            # dart d never appeared in earlier slots: the numbering cannot
            # be canonical and the map cannot be connected
            return
        if stage == 1 and alf[d] != 0:
            yield from rec(d + 1, 0, m)
            return
        if stop_depth is not None and len(choices) >= stop_depth:
            yield ("prefix", tuple(choices))
            return
        if stage == 0:
            cands = [v for v in range(1, m + 1) if not used[v]]
        else:
            cands = [v for v in range(1, m + 1) if alf[v] == 0 and v != d]
        if m < n_darts:
            cands.append(m + 1)
        k = len(choices)
        if k < len(prefix):
            cands = [v for v in cands if v == prefix[k]]
        for v in cands:
            m2 = m + 1 if v > m else m
            choices.append(v)
            if stage == 0:
                sig[d] = v
                used[v] = True
                yield from rec(d, 1, m2)
                used[v] = False
                sig[d] = 0
            else:
                alf[d] = v
                alf[v] = d
                yield from rec(d + 1, 0, m2)
                alf[v] = 0
                alf[d] = 0
            choices.pop()

    yield from rec(1, 0, 1)


def iter_rooted_maps(n_edges: int,
                     genus: int | None = None) -> Iterator[RotationMap]:
    """Stream all rooted maps with n edges (all genera unless filtered),
    each exactly once, in canonical numbering. No budget applies."""
    if n_edges < 1:
        raise PreconditionError(f"need n_edges >= 1, got {n_edges}")
    for _, sigma, alpha in _slot_search(2 * n_edges):
        m = RotationMap(sigma, alpha)
        if genus is None or m.genus == genus:
            yield m


def _expand_prefix(args: tuple[int, tuple[int, ...]]) -> list[tuple]:
    n_darts, prefix = args
    return [(sigma, alpha)
            for _, sigma, alpha in _slot_search(n_darts, prefix=prefix)]


def _rooted_maps_parallel(n_edges: int, genus: int | None,
                          jobs: int) -> list[RotationMap]:
    n_darts = 2 * n_edges
    items = list(_slot_search(n_darts, stop_depth=4))
    prefixes = [(n_darts, it[1]) for it in items if it[0] == "prefix"]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        expanded = list(pool.map(_expand_prefix, prefixes))
    out: list[RotationMap] = []
    pi = 0
    for it in items:
        if it[0] == "map":
            chunk = [(it[1], it[2])]
        else:
            chunk = expanded[pi]
            pi += 1
        for sigma, alpha in chunk:
            m = RotationMap(sigma, alpha)
            if genus is None or m.genus == genus:
                out.append(m)
    return out


@lru_cache(maxsize=None)
def _rooted_maps_cached(n_edges: int,
                        genus: int | None) -> tuple[RotationMap, ...]:
    return tuple(iter_rooted_maps(n_edges, genus))


def enumerate_rooted_maps(n_edges: int, genus: int | None = None,
                          jobs: int = 1) -> list[RotationMap]:
    """All rooted maps with n edges and the given genus, budget-checked."""
    _check_budget(n_edges, genus, "rooted maps")
    if jobs > 1:
        return _rooted_maps_parallel(n_edges, genus, jobs)
    return list(_rooted_maps_cached(n_edges, genus))


# -- one-face maps -----------------------------------------------------------
#
# In a rooted map with a single face, numbering the darts along the face
# walk from the root turns the face permutation into the cycle
# (1 2 ... 2n). The map is then determined by the edge pairing alone:
# sigma(d) = alpha(d) + 1 cyclically. So one-face maps are exactly the
# fixed-point-free involutions of {1..2n}, and vertex degrees are the
# cycle lengths of the reconstructed rotation.


def iter_one_face_maps(n_edges: int, genus: int | None = None,
                       min_degree: int = 1) -> Iterator[RotationMap]:
    """Stream all rooted one-face maps with n edges, each exactly once.

    genus filters by vertex count; min_degree prunes any rotation cycle
    that closes below it, which is what makes degree-constrained runs
    (cores and scheme shapes) tractable. No budget applies.
    """
    if n_edges < 1:
        raise PreconditionError(f"need n_edges >= 1, got {n_edges}")
    n_darts = 2 * n_edges
    target_v = None
    if genus is not None:
        target_v = n_edges + 1 - 2 * genus
        if target_v < 1:
            return
    alf = [0] * (n_darts + 1)
    nxt = [0] * (n_darts + 1)
    out: list[RotationMap] = []

    def closed_cycle(start: int) -> tuple[int, set[int]] | None:
        seen = {start}
        x = start
        while True:
            x = nxt[x]
            if x == 0:
                return None
            if x == start:
                return len(seen), seen
            seen.add(x)

    def rec(unpaired: int, closed: int, closed_darts: int) -> None:
        if unpaired == 0:
            sigma = (0,) + tuple(nxt[1:])
            alpha = (0,) + tuple(alf[1:])
            out.append(RotationMap(sigma, alpha))
            return
        d = next(x for x in range(1, n_darts + 1) if alf[x] == 0)
        for e in range(d + 1, n_darts + 1):
            if alf[e] != 0:
                continue
            alf[d], alf[e] = e, d
            nxt[d] = e % n_darts + 1
            nxt[e] = d % n_darts + 1
            c2, cd2 = closed, closed_darts
            ok = True
            hit = closed_cycle(d)
            new_cycles = []
            if hit is not None:
                new_cycles.append(hit)
            if hit is None or e not in hit[1]:
                hit_e = closed_cycle(e)
                if hit_e is not None:
                    new_cycles.append(hit_e)
            for length, _ in new_cycles:
                if length < min_degree:
                    ok = False
                    break
                c2 += 1
                cd2 += length
            if ok and target_v is not None:
                # every open rotation chain ends at an unpaired dart, so
                # unpaired-2 bounds how many vertex cycles can still form
                rest = n_darts - cd2
                if (c2 > target_v or rest < (target_v - c2) * min_degree
                        or (c2 == target_v and rest > 0)
                        or target_v - c2 > unpaired - 2):
                    ok = False
            if ok:
                rec(unpaired - 2, c2, cd2)
            alf[d] = alf[e] = 0
            nxt[d] = nxt[e] = 0

    rec(n_darts, 0, 0)
    yield from out


@lru_cache(maxsize=None)
def _one_face_cached(n_edges: int,
                     genus: int | None) -> tuple[RotationMap, ...]:
    return tuple(iter_one_face_maps(n_edges, genus))


def enumerate_g_trees(n_edges: int, genus: int) -> list[RotationMap]:
    """All rooted one-face maps of the given genus, budget-checked."""
    _check_budget(n_edges, genus, "one-face maps")
    return list(_one_face_cached(n_edges, genus))


# -- labelings ---------------------------------------------------------------


def _spanning_tree(m: RotationMap):
    """Breadth-first spanning tree from the root vertex.

    Returns (vertex order, dart from parent into each non-root vertex,
    per-dart tree-edge flags)."""
    vi = m.vertex_index
    seen = [False] * m.n_vertices
    order = [vi[m.root]]
    seen[order[0]] = True
    entry_dart = [0] * m.n_vertices
    tree = [False] * (m.n_darts + 1)
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for d in m.vertices[v]:
            w = vi[m.alpha[d]]
            if not seen[w]:
                seen[w] = True
                tree[d] = tree[m.alpha[d]] = True
                entry_dart[w] = d
                order.append(w)
    return order, entry_dart, tree


def _iter_relative_labelings(m: RotationMap) -> Iterator[tuple[int, ...]]:
    """All vertex labelings with every edge variation in {-1,0,+1}, up to
    translation: the root vertex is pinned at 0. Yields label tuples
    indexed like m.vertices."""
    order, entry_dart, tree = _spanning_tree(m)
    vi = m.vertex_index
    pos = {v: i for i, v in enumerate(order)}
    # a non-tree edge becomes checkable once its later endpoint is labeled
    checks: list[list[tuple[int, int]]] = [[] for _ in order]
    for d, ad in m.edges:
        if not tree[d]:
            a, b = vi[d], vi[ad]
            checks[max(pos[a], pos[b])].append((a, b))
    labels = [0] * m.n_vertices

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(labels)
            return
        w = order[i]
        base = labels[vi[entry_dart[w]]]
        for delta in (-1, 0, 1):
            labels[w] = base + delta
            if all(abs(labels[a] - labels[b]) <= 1 for a, b in checks[i]):
                yield from rec(i + 1)

    # step 0 constraints can only be loops at the root, always satisfied
    yield from rec(1)


@lru_cache(maxsize=None)
def _wl_trees_cached(n_edges: int, genus: int) -> tuple[LabeledMap, ...]:
    # root label 1 and minimum 1 together: the root must realize the minimum
    out = []
    for m in _one_face_cached(n_edges, genus):
        for rel in _iter_relative_labelings(m):
            if min(rel) == 0:
                out.append(LabeledMap(m, tuple(x + 1 for x in rel)))
    return tuple(out)


@lru_cache(maxsize=None)
def _embedded_trees_cached(n_edges: int, genus: int) -> tuple[LabeledMap, ...]:
    out = []
    for m in _one_face_cached(n_edges, genus):
        for rel in _iter_relative_labelings(m):
            out.append(LabeledMap(m, tuple(x + 1 for x in rel)))
    return tuple(out)


def enumerate_well_labeled_trees(n_edges: int, genus: int) -> list[LabeledMap]:
    """All rooted one-face maps of the genus with labels varying by at most
    1 along every edge, minimum label 1, and the root vertex labeled 1."""
    _check_budget(n_edges, genus, "well-labeled one-face maps")
    return list(_wl_trees_cached(n_edges, genus))


def enumerate_embedded_trees(n_edges: int, genus: int) -> list[LabeledMap]:
    """Same maps, labels varying by at most 1, root vertex labeled 1."""
    _check_budget(n_edges, genus, "embedded one-face maps")
    return list(_embedded_trees_cached(n_edges, genus))


# -- quadrangulations --------------------------------------------------------


def _is_bipartite(m: RotationMap) -> bool:
    dist = distance_labels(m, 1)
    vi = m.vertex_index
    return all((dist[vi[d]] - dist[vi[m.alpha[d]]]) % 2 == 1
               for d in range(1, m.n_darts + 1))


@lru_cache(maxsize=None)
def _rooted_quads_cached(n_faces: int,
                         genus: int | None) -> tuple[RotationMap, ...]:
    from .quad import map_to_quad
    return tuple(map_to_quad(m) for m in _rooted_maps_cached(n_faces, genus))


def enumerate_quadrangulations(n_faces: int, genus: int | None = None,
                               variant: str = "rooted") -> list:
    """Bipartite quadrangulations with n_faces faces at the given genus.

    variant "rooted" gives a list of maps; "rooted_pointed" a list of
    (map, vertex index) pairs; "pointed" one representative pair per
    isomorphism class of vertex-marked unrooted quadrangulations.
    """
    _check_budget(n_faces, genus, "quadrangulations")
    rooted = list(_rooted_quads_cached(n_faces, genus))
    if variant == "rooted":
        return rooted
    pairs = [(q, v) for q in rooted for v in range(q.n_vertices)]
    if variant == "rooted_pointed":
        return pairs
    if variant == "pointed":
        seen = set()
        out = []
        for q, v in pairs:
            key = q.pointed_key(v)
            if key not in seen:
                seen.add(key)
                out.append((q, v))
        return out
    raise PreconditionError(
        f"unknown variant {variant!r}; use rooted, rooted_pointed or pointed")


def iter_quadrangulations_direct(n_faces: int,
                                 genus: int | None = None
                                 ) -> Iterator[RotationMap]:
    """Filter every rooted map with 2*n_faces edges for quadrangular faces
    and bipartiteness. Independent of the correspondence used by
    enumerate_quadrangulations, so the two can cross-check each other."""
    for m in iter_rooted_maps(2 * n_faces, genus):
        if all(len(f) == 4 for f in m.faces) and _is_bipartite(m):
            yield m
