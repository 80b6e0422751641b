"""Maximal planar graphs (sphere triangulations) given by rotation systems.

A graph comes in as the cyclic order of neighbours around every vertex.
Faces are never part of the input: they are recovered by face tracing
(the next dart after u->v is v->w where w is the successor of u in the
rotation at v) and then validated against the sphere counts
|E| = 3n - 6 and |F| = 2n - 4.  The smallest accepted instance is the
triangle (n = 3), whose two faces share all three edges.

Text format, one graph per file::

    n
    0: a b c ...     # neighbours of vertex 0 in rotation order
    ...
    n-1: ...

Adjacency must be symmetric, loop-free and without repeats; every
violation is reported with the offending vertex or edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class TriangulationError(ValueError):
    """Input is not a valid rotation system of a sphere triangulation."""


@dataclass(frozen=True)
class Face:
    """Triangular face; ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i+1) % 3]``.

    ``vertices`` keeps the traced dart order, rotated so the smallest
    vertex comes first; this makes face ids reproducible.
    """

    vertices: tuple[int, int, int]
    edges: tuple[int, int, int]


@dataclass(frozen=True)
class Triangulation:
    """Immutable triangulation with explicit edge and face structure.

    Safe to share across workers; every derived view is precomputed or
    cached on first use.
    """

    rotation: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]
    edge_faces: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edge_triples(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, edge id); the id keys per-edge weights downstream."""
        for eid, (u, v) in enumerate(self.edges):
            yield u, v, eid

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for eid, (u, v) in enumerate(self.edges):
            idx[(u, v)] = eid
            idx[(v, u)] = eid
        return idx

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        """Face ids incident to each vertex (each face counted once)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for fid, face in enumerate(self.faces):
            for v in face.vertices:
                inc[v].append(fid)
        return tuple(tuple(l) for l in inc)


@dataclass(frozen=True)
class ContractedMultigraph:
    """Result of merging a vertex set into one vertex.

    Parallel edges are kept and still carry their original edge ids, so
    per-edge weights stay attached; loops are dropped at construction.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, original edge id)

    def edge_triples(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.edges)


def _trace_faces(rotation: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Decompose all darts into face cycles of the embedding."""
    succ = [
        {u: rot[(i + 1) % len(rot)] for i, u in enumerate(rot)}
        for rot in rotation
    ]
    seen: set[tuple[int, int]] = set()
    cycles = []
    for u in range(len(rotation)):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            cycle = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                cycle.append((a, b))
                a, b = b, succ[b][a]
            cycles.append(cycle)
    return cycles


def _check_adjacency(rotation: Sequence[Sequence[int]]) -> set[tuple[int, int]]:
    n = len(rotation)
    for v, rot in enumerate(rotation):
        for u in rot:
            if not 0 <= u < n:
                raise TriangulationError(f"vertex {v}: neighbour {u} out of range")
            if u == v:
                raise TriangulationError(f"vertex {v}: loop edge {v}-{v}")
        if len(set(rot)) != len(rot):
            dup = next(u for u in rot if rot.count(u) > 1)
            raise TriangulationError(f"vertex {v}: parallel edge {v}-{dup}")
    edges = set()
    for v, rot in enumerate(rotation):
        for u in rot:
            if v not in rotation[u]:
                raise TriangulationError(
                    f"asymmetric adjacency: {v} lists {u} but {u} does not list {v}"
                )
            edges.add((min(u, v), max(u, v)))
    return edges


def _check_connected(rotation: Sequence[Sequence[int]]) -> None:
    n = len(rotation)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in rotation[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise TriangulationError(f"graph is disconnected (vertex {missing} unreachable from 0)")


def from_rotation(rotation: Sequence[Sequence[int]]) -> Triangulation:
    """Build and fully validate a triangulation from a rotation system."""
    n = len(rotation)
    if n < 3:
        raise TriangulationError(f"need at least 3 vertices, got {n}")
    edge_set = _check_adjacency(rotation)
    _check_connected(rotation)

    cycles = _trace_faces(rotation)
    for cycle in cycles:
        if len(cycle) != 3:
            verts = [a for a, _ in cycle]
            raise TriangulationError(f"non-triangular face of size {len(cycle)}: {verts}")
        a, b, c = (d[0] for d in cycle)
        if len({a, b, c}) != 3:
            raise TriangulationError(f"degenerate face with repeated vertex: {(a, b, c)}")

    ne, nf = len(edge_set), len(cycles)
    if ne != 3 * n - 6:
        raise TriangulationError(f"Euler mismatch: {ne} edges, expected 3n-6 = {3 * n - 6}")
    if nf != 2 * n - 4:
        raise TriangulationError(f"Euler mismatch: {nf} faces, expected 2n-4 = {2 * n - 4}")

    edges = tuple(sorted(edge_set))
    eid = {e: i for i, e in enumerate(edges)}
    eid.update({(v, u): i for (u, v), i in list(eid.items())})

    # Canonical face order: rotate each dart cycle to start at its smallest
    # vertex, then sort by (sorted vertex triple, rotated cycle).  The second
    # key separates the two faces of the n = 3 triangle.
    keyed = []
    for cycle in cycles:
        verts = tuple(a for a, _ in cycle)
        k = verts.index(min(verts))
        rot_verts = verts[k:] + verts[:k]
        keyed.append((tuple(sorted(verts)), rot_verts))
    keyed.sort()

    faces = []
    for _, (a, b, c) in keyed:
        faces.append(Face(vertices=(a, b, c), edges=(eid[(a, b)], eid[(b, c)], eid[(c, a)])))

    incident: list[list[int]] = [[] for _ in edges]
    for fid, face in enumerate(faces):
        for e in face.edges:
            incident[e].append(fid)
    for e, fids in enumerate(incident):
        if len(fids) != 2 or fids[0] == fids[1]:
            u, v = edges[e]
            raise TriangulationError(f"edge {u}-{v} does not lie on two distinct faces: {fids}")

    return Triangulation(
        rotation=tuple(tuple(r) for r in rotation),
        edges=edges,
        faces=tuple(faces),
        edge_faces=tuple((f[0], f[1]) for f in incident),
    )


def parse_rotation_system(text: str) -> Triangulation:
    """Parse the rotation-system text format and validate the result."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise TriangulationError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise TriangulationError(f"line 1: expected vertex count, got {lines[0]!r}") from None
    if len(lines) - 1 != n:
        raise TriangulationError(f"expected {n} vertex lines, got {len(lines) - 1}")

    rotation: list[tuple[int, ...] | None] = [None] * n
    for ln in lines[1:]:
        head, sep, tail = ln.partition(":")
        if not sep:
            raise TriangulationError(f"missing ':' in line {ln!r}")
        try:
            v = int(head)
            neigh = tuple(int(t) for t in tail.split())
        except ValueError:
            raise TriangulationError(f"malformed vertex line {ln!r}") from None
        if not 0 <= v < n:
            raise TriangulationError(f"vertex id {v} out of range 0..{n - 1}")
        if rotation[v] is not None:
            raise TriangulationError(f"duplicate line for vertex {v}")
        rotation[v] = neigh
    missing = [v for v, r in enumerate(rotation) if r is None]
    if missing:
        raise TriangulationError(f"missing rotation line for vertex {missing[0]}")
    return from_rotation(rotation)  # type: ignore[arg-type]


def to_rotation_text(g: Triangulation) -> str:
    """Serialize in the same text format, neighbours in stored rotation order."""
    lines = [str(g.n)]
    for v, rot in enumerate(g.rotation):
        lines.append(f"{v}: {' '.join(map(str, rot))}")
    return "\n".join(lines) + "\n"


def _from_oriented_faces(n: int, oriented: Iterable[tuple[int, int, int]]) -> Triangulation:
    """Assemble a rotation system from consistently oriented triangles."""
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for a, b, c in oriented:
        for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
            if succ[v].get(u, w) != w:
                raise TriangulationError(f"inconsistent orientation at vertex {v}")
            succ[v][u] = w
    rotation = []
    for v, nxt in enumerate(succ):
        if not nxt:
            raise TriangulationError(f"isolated vertex {v}")
        start = min(nxt)
        cycle = [start]
        cur = nxt[start]
        while cur != start:
            cycle.append(cur)
            cur = nxt[cur]
        if len(cycle) != len(nxt):
            raise TriangulationError(f"vertex {v}: neighbour link is not a single cycle")
        rotation.append(tuple(cycle))
    return from_rotation(rotation)


FAMILIES = ("triangle", "k4", "bipyramid", "octahedron", "icosahedron", "apollonian")


def generate(
    family: str,
    *,
    size: int | None = None,
    depth: int | None = None,
    max_vertices: int = 4096,
) -> Triangulation:
    """Generate a member of one of the built-in triangulation families.

    bipyramid(k) is the cycle C_k plus two apexes; octahedron is
    bipyramid(4); apollonian(d) starts from K4 and d times inserts a
    degree-3 vertex into every face (n = 2 * 3**d + 2).
    """
    if family == "triangle":
        n, oriented = 3, [(0, 1, 2), (0, 2, 1)]
    elif family == "k4":
        n, oriented = 4, [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)]
    elif family in ("bipyramid", "octahedron"):
        k = 4 if family == "octahedron" else size
        if k is None or k < 3:
            raise ValueError(f"bipyramid needs --size k >= 3, got {k}")
        n = k + 2
        a, b = k, k + 1
        oriented = []
        for i in range(k):
            j = (i + 1) % k
            oriented.append((i, j, a))
            oriented.append((j, i, b))
    elif family == "icosahedron":
        n = 12
        up = [1, 2, 3, 4, 5]
        lo = [6, 7, 8, 9, 10]
        oriented = []
        for i in range(5):
            j = (i + 1) % 5
            oriented.append((0, up[i], up[j]))
            oriented.append((up[i], lo[i], up[j]))
            oriented.append((up[j], lo[i], lo[j]))
            oriented.append((11, lo[j], lo[i]))
    elif family == "apollonian":
        if depth is None or depth < 0:
            raise ValueError(f"apollonian needs --depth d >= 0, got {depth}")
        n = 2 * 3**depth + 2
        if n > max_vertices:
            raise ValueError(f"apollonian depth {depth} gives n = {n} > cap {max_vertices}")
        oriented = [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)]
        nv = 4
        for _ in range(depth):
            nxt = []
            for a, b, c in oriented:
                w = nv
                nv += 1
                nxt += [(a, b, w), (b, c, w), (c, a, w)]
            oriented = nxt
        assert nv == n
    else:
        raise ValueError(f"unknown family {family!r} (choose from {', '.join(FAMILIES)})")
    if n > max_vertices:
        raise ValueError(f"family {family} parameters give n = {n} > cap {max_vertices}")
    return _from_oriented_faces(n, oriented)


def contract(g: Triangulation, w: Iterable[int]) -> ContractedMultigraph:
    """Merge the vertex set ``w`` into a single vertex, dropping loops.

    Contracting the empty set returns the graph itself viewed as a
    multigraph; contracting a singleton is the identity up to relabeling.
    """
    wset = frozenset(w)
    bad = [v for v in wset if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"contraction set contains non-vertices: {sorted(bad)}")
    if not wset:
        return ContractedMultigraph(g.n, tuple(g.edge_triples()))
    rep = min(wset)
    keep = sorted((set(range(g.n)) - wset) | {rep})
    newid = {v: i for i, v in enumerate(keep)}
    merged = newid[rep]

    def relabel(v: int) -> int:
        return merged if v in wset else newid[v]

    out = []
    for eid, (u, v) in enumerate(g.edges):
        mu, mv = relabel(u), relabel(v)
        if mu == mv:
            continue  # loop: irrelevant to spanning trees
        out.append((mu, mv, eid) if mu < mv else (mv, mu, eid))
    return ContractedMultigraph(len(keep), tuple(out))


def edge_face_incidence(g: Triangulation, e: int) -> tuple[int, int]:
    """The two distinct faces bordering edge ``e``."""
    if not 0 <= e < len(g.edges):
        raise ValueError(f"edge id {e} out of range 0..{len(g.edges) - 1}")
    return g.edge_faces[e]
