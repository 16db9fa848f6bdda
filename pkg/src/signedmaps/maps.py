r"""
Quadricell maps: building, validating and tracing embeddings.

An embedding is an ordered triple of permutations (alpha, beta, P) on
the 4m quadricells of an m-edge graph.  alpha and beta are the fixed
side- and end-swapping involutions (pure index arithmetic here, never
stored), and P is the vertex permutation induced by a signed rotation
system: at each vertex the rotation contributes a cycle through one
corner per incident edge end together with the reversed cycle through
the side-swapped corners.  Which corner represents an edge end is what
encodes the twist: the tail contributes its lower-right corner, the
head of a positive edge its upper-left, and the head of a negative edge
its upper-right (the band crosses over at the head).

Faces are orbit pairs of P*gamma: conjugating by beta inverts P*gamma,
so orbits pair off under beta and the face count is half the orbit
count.  Orientability is read off the action of <P, gamma>: two orbits
means orientable, one means nonorientable (for a connected graph).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .backend import kernels
from .graphs import SignedGraph, SignedRotationSystem, StructuralError

SIDE_NAMES = ("l", "r")
END_NAMES = ("+", "-")


def alpha(q: int) -> int:
    return q ^ 2


def beta(q: int) -> int:
    return q ^ 1


def gamma(q: int) -> int:
    return q ^ 3


def quadricell(edge: int, side: int, end: int) -> int:
    """Index of the (edge, side, end) corner; side 1 = right, end 1 = upper."""
    return 4 * edge + 2 * side + end


def quadricell_name(q: int, labels: Sequence[str] | None = None) -> str:
    """Human-readable corner name, e.g. ``3r+`` for the lower right of edge 3."""
    e, rem = divmod(q, 4)
    side, end = divmod(rem, 2)
    lab = labels[e] if labels is not None else str(e)
    return f"{lab}{SIDE_NAMES[side]}{END_NAMES[end]}"


def _prim_corner(e: int, v: int, tails, signs) -> int:
    if tails[e] == v:
        return 4 * e + 2
    if signs[e] > 0:
        return 4 * e + 1
    return 4 * e + 3


@dataclass(frozen=True)
class QuadricellMap:
    """The triple (alpha, beta, P) with P stored as a flat tuple."""

    source: SignedRotationSystem
    perm: tuple[int, ...]

    @property
    def graph(self) -> SignedGraph:
        return self.source.graph

    @property
    def size(self) -> int:
        return len(self.perm)

    def perm_array(self) -> np.ndarray:
        return np.array(self.perm, dtype=np.int64)

    def apply(self, q: int) -> int:
        return self.perm[q]

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles of P, each rotated to start at its smallest quadricell."""
        seen = [False] * self.size
        out = []
        for q0 in range(self.size):
            if not seen[q0]:
                cyc = []
                q = q0
                while not seen[q]:
                    seen[q] = True
                    cyc.append(q)
                    q = self.perm[q]
                out.append(tuple(cyc))
        return out


@dataclass(frozen=True)
class Face:
    """One face: its two boundary orbits (beta-partners) and edge set."""

    orbit: tuple[int, ...]
    partner: tuple[int, ...]
    edges: frozenset[int]


@dataclass(frozen=True)
class EmbeddingSurface:
    """Face data of a traced embedding plus the surface invariants."""

    face_count: int
    euler_genus: int
    orientable: bool
    faces: tuple[Face, ...]
    num_vertices: int
    num_edges: int


@dataclass(frozen=True)
class MapValidation:
    """Pass/fail for the four axioms of a map triple."""

    cells_distinct: bool      # a, alpha a, beta a, gamma a pairwise distinct
    birotation_compatible: bool  # conjugating P by alpha inverts it
    vertex_orbits_split: bool    # orbits of P through a and alpha a differ
    transitive: bool             # <P, gamma, alpha> acts transitively

    @property
    def ok(self) -> bool:
        return (self.cells_distinct and self.birotation_compatible
                and self.vertex_orbits_split and self.transitive)


def build_map(srs: SignedRotationSystem, g: SignedGraph | None = None) -> QuadricellMap:
    """Vertex permutation of the embedding encoded by a rotation system."""
    if g is not None and g is not srs.graph and g != srs.graph:
        raise StructuralError("rotation system does not belong to this graph")
    graph = srs.graph
    m = graph.num_edges
    k = kernels()
    tails = np.array([u for (u, _) in graph.edges], dtype=np.int64)
    heads = np.array([v for (_, v) in graph.edges], dtype=np.int64)
    signs = np.array(graph.signs, dtype=np.int64)
    rot_flat = np.array(
        [e for rot in srs.rotations for e in rot], dtype=np.int64
    ) if m else np.zeros(0, dtype=np.int64)
    rot_off = np.zeros(graph.num_vertices + 1, dtype=np.int64)
    pos = 0
    for v in range(graph.num_vertices):
        rot_off[v] = pos
        pos += len(srs.rotations[v])
    rot_off[graph.num_vertices] = pos
    P = np.zeros(4 * m, dtype=np.int64)
    if m:
        k.build_perm(tails, heads, signs, rot_flat, rot_off, P)
    return QuadricellMap(source=srs, perm=tuple(int(x) for x in P))


def validate_map(qm: QuadricellMap) -> MapValidation:
    """Report each map axiom separately; never raises."""
    P = qm.perm
    size = len(P)
    cells_distinct = size % 4 == 0 and sorted(P) == list(range(size))
    birot = cells_distinct and all(P[P[q ^ 2] ^ 2] == q for q in range(size))

    split = cells_distinct
    if cells_distinct:
        orbit_id = [-1] * size
        nxt = 0
        for q0 in range(size):
            if orbit_id[q0] < 0:
                q = q0
                while orbit_id[q] < 0:
                    orbit_id[q] = nxt
                    q = P[q]
                nxt += 1
        split = all(orbit_id[q] != orbit_id[q ^ 2] for q in range(size))

    transitive = size > 0 and cells_distinct
    if transitive:
        k = kernels()
        work = np.zeros(2 * size, dtype=np.int64)
        transitive = k.group_orbit_count(qm.perm_array(), True, work) == 1
    return MapValidation(cells_distinct, birot, split, transitive)


def _require_connected(qm: QuadricellMap, op: str) -> None:
    if not qm.graph.is_connected():
        raise StructuralError(f"{op} requires a connected graph; analyse components separately")


def orientability(qm: QuadricellMap) -> bool:
    """True iff <P, gamma> has exactly two quadricell orbits."""
    _require_connected(qm, "orientability")
    k = kernels()
    size = qm.size
    work = np.zeros(2 * size, dtype=np.int64)
    return k.group_orbit_count(qm.perm_array(), False, work) == 2


def face_orbits(qm: QuadricellMap) -> list[tuple[int, ...]]:
    """Orbits of P*gamma, each listed from its smallest quadricell."""
    P = qm.perm
    size = qm.size
    seen = [False] * size
    orbits = []
    for q0 in range(size):
        if not seen[q0]:
            cyc = []
            q = q0
            while not seen[q]:
                seen[q] = True
                cyc.append(q)
                q = P[q ^ 3]
            orbits.append(tuple(cyc))
    return orbits


def trace_faces(qm: QuadricellMap) -> EmbeddingSurface:
    """All faces of the embedding plus Euler genus and orientability.

    Orbits of P*gamma pair under beta (beta conjugates P*gamma to its
    inverse); a face is such a pair and the face count is half the
    orbit count.  Euler genus then comes from n - m + r = 2 - genus.
    """
    _require_connected(qm, "face tracing")
    g = qm.graph
    orbits = face_orbits(qm)
    if len(orbits) % 2 != 0:
        raise StructuralError("face orbits failed to pair up; invalid map")
    where = {}
    for i, orb in enumerate(orbits):
        for q in orb:
            where[q] = i
    used = [False] * len(orbits)
    faces = []
    for i, orb in enumerate(orbits):
        if used[i]:
            continue
        j = where[orb[0] ^ 1]
        if j == i or used[j]:
            raise StructuralError("face orbits failed to pair up; invalid map")
        used[i] = used[j] = True
        edges = frozenset(q // 4 for q in orb) | frozenset(q // 4 for q in orbits[j])
        faces.append(Face(orbit=orb, partner=orbits[j], edges=edges))
    r = len(faces)
    n, m = g.num_vertices, g.num_edges
    genus = 2 - n + m - r
    if genus < 0:
        raise StructuralError(f"negative Euler genus {genus}; invalid map")
    return EmbeddingSurface(
        face_count=r,
        euler_genus=genus,
        orientable=orientability(qm),
        faces=tuple(faces),
        num_vertices=n,
        num_edges=m,
    )


def cycles_string(cycles: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> str:
    """Parenthesized cycle notation over quadricell names."""
    parts = []
    for cyc in cycles:
        parts.append("(" + " ".join(quadricell_name(q, labels) for q in cyc) + ")")
    return "".join(parts)
