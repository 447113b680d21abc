"""Rotation systems from scratch: genus, duality, surgery, correspondence.

Usage:
    python3 demos/surfaces_and_surgery.py

A map is two permutations on darts.  This script builds a few by hand,
reads off their surfaces, cuts and glues edges while the Euler relation
watches, and runs the classical correspondence that turns any rooted
map into a bipartite quadrangulation of the same genus.
"""

from __future__ import annotations

from surfmaps import (
    Corner,
    RotationMap,
    add_edge_in_face,
    delete_edges,
    enumerate_rooted_maps,
    face_corners,
    map_to_quad,
    quad_to_map,
    validate,
    write_map_text,
)


def describe(name: str, m: RotationMap) -> None:
    print(f"{name}: v={m.n_vertices} e={m.n_edges} f={m.n_faces} "
          f"genus={m.genus}")
    assert m.n_vertices - m.n_edges + m.n_faces == 2 - 2 * m.genus


def main() -> None:
    print("sigma cycles darts around each vertex, alpha swaps the two")
    print("darts of each edge; faces are orbits of sigma then alpha.\n")

    link = RotationMap((0, 1, 2), (0, 2, 1))
    describe("one edge, two vertices", link)

    loop = RotationMap((0, 2, 1), (0, 2, 1))
    describe("one loop on the sphere", loop)

    fig8 = RotationMap((0, 3, 4, 2, 1), (0, 2, 1, 4, 3))
    describe("two interleaved loops", fig8)
    print("  interleaving the loops around the vertex forces a torus\n")

    # validate() diagnoses raw image arrays, without the dummy 0 slot
    diag = validate(fig8.sigma[1:], fig8.alpha[1:], fig8.root)
    assert diag.ok and diag.genus == 1
    print(f"validate() agrees: {diag}\n")

    # duality exchanges vertices and faces and keeps the genus
    d = fig8.dual()
    assert d.dual() == fig8
    assert (d.n_vertices, d.n_faces) == (fig8.n_faces, fig8.n_vertices)
    print("dual of the torus map has its vertex and face counts swapped,")
    print("and dualizing twice is the identity\n")

    # surgery: chord a face, then undo it
    corners = face_corners(link, link.root)
    bigger = add_edge_in_face(link, corners[0], corners[-1])
    describe("after adding a chord", bigger)
    smaller = delete_edges(bigger, [bigger.n_darts])
    assert smaller.canonical_key() == link.canonical_key()
    print("  deleting the new edge restores the original map\n")

    # a loop drawn inside a face with both ends at one corner
    c = Corner(loop.root)
    nested = add_edge_in_face(loop, c, c)
    describe("loop nested inside a loop", nested)
    print()

    # any rooted map corresponds to a bipartite quadrangulation
    print("the map <-> quadrangulation correspondence, on one edge:\n")
    q = map_to_quad(link)
    print(write_map_text(q), end="")
    describe("its quadrangulation", q)
    assert q.n_faces == link.n_edges
    assert quad_to_map(q).canonical_key() == link.canonical_key()
    print("  faces of the quadrangulation = edges of the map; the")
    print("  inverse direction recovers the map exactly\n")

    counts = [len(enumerate_rooted_maps(n, 0)) for n in (1, 2, 3)]
    print(f"rooted planar maps with 1, 2, 3 edges: {counts}")
    assert counts == [2, 9, 54]

    print("\nall claims checked")


if __name__ == "__main__":
    main()
