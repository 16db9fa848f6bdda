r"""
Signed graphs and signed rotation systems.

A signed graph is a simple undirected graph together with a sign in
{+1, -1} on every edge.  Edges are stored with an orientation (tail,
head); the orientation is a bookkeeping device for the four-cell map
encoding and has no topological meaning.

A signed rotation system assigns to every vertex a cyclic order of its
incident edges.  Together with the edge signs it encodes an embedding
of the graph on a closed surface, orientable or not.  Rotations are
kept in a canonical form (smallest incident edge first) so that two
systems are equal iff their tuples are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction  # noqa: F401  (re-exported convenience)
from typing import Iterable, Sequence


class StructuralError(ValueError):
    """Raised when an input violates a structural precondition."""


class PreconditionError(ValueError):
    """Raised when an operation's mathematical hypothesis is not met."""


class InternalInvariantError(RuntimeError):
    """Raised when a computation contradicts a proved invariant (a bug)."""


def canonical_rotation(rot: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so that its smallest entry comes first."""
    rot = tuple(rot)
    if len(rot) <= 1:
        return rot
    k = rot.index(min(rot))
    return rot[k:] + rot[:k]


@dataclass(frozen=True)
class SignedGraph:
    """A simple undirected graph with +1/-1 edge signs.

    ``edges[e] = (tail, head)`` fixes a reference orientation for edge
    ``e``; ``signs[e]`` is its sign.  Vertices are ``0..n-1``.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = self.num_vertices
        if len(self.signs) != len(self.edges):
            raise StructuralError("one sign per edge required")
        seen = set()
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise StructuralError(f"edge {e} has endpoint outside 0..{n - 1}")
            if u == v:
                raise StructuralError(f"edge {e} is a loop; graphs must be simple")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise StructuralError(f"parallel edge {key}; graphs must be simple")
            seen.add(key)
        for e, s in enumerate(self.signs):
            if s not in (1, -1):
                raise StructuralError(f"sign of edge {e} must be +1 or -1, got {s!r}")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Edges incident with ``v``, ascending."""
        return tuple(e for e, (a, b) in enumerate(self.edges) if v in (a, b))

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.num_vertices
        for (u, v) in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise StructuralError(f"vertex {v} is not an endpoint of edge {e}")

    def is_connected(self) -> bool:
        n = self.num_vertices
        if n <= 1:
            return True
        adj: list[list[int]] = [[] for _ in range(n)]
        for (u, v) in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def with_signs(self, signs: Iterable[int]) -> "SignedGraph":
        return SignedGraph(self.num_vertices, self.edges, tuple(signs))

    def all_positive(self) -> bool:
        return all(s == 1 for s in self.signs)

    def relabeled(self, vperm: Sequence[int]) -> "SignedGraph":
        """Apply ``v -> vperm[v]`` to the vertex set."""
        edges = tuple((vperm[u], vperm[v]) for (u, v) in self.edges)
        return SignedGraph(self.num_vertices, edges, self.signs)


@dataclass(frozen=True)
class SignedRotationSystem:
    """Rotations (cyclic incident-edge orders) plus the twist signs.

    ``rotations[v]`` lists the edges at ``v`` in cyclic order, stored
    canonically (smallest edge id first).
    """

    graph: SignedGraph
    rotations: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        g = self.graph
        if len(self.rotations) != g.num_vertices:
            raise StructuralError("one rotation per vertex required")
        canon = []
        for v, rot in enumerate(self.rotations):
            inc = g.incident_edges(v)
            if sorted(rot) != sorted(inc):
                raise StructuralError(
                    f"rotation at vertex {v} must list its incident edges "
                    f"exactly once (got {rot}, incidence {inc})"
                )
            canon.append(canonical_rotation(rot))
        object.__setattr__(self, "rotations", tuple(canon))

    @property
    def signs(self) -> tuple[int, ...]:
        return self.graph.signs

    def rotation_at(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]


def default_rotation_system(g: SignedGraph) -> SignedRotationSystem:
    """The rotation system listing incident edges in ascending order."""
    return SignedRotationSystem(g, tuple(g.incident_edges(v) for v in range(g.num_vertices)))


def switch(srs: SignedRotationSystem, v: int) -> SignedRotationSystem:
    """Switch at ``v``: reverse its rotation, negate its incident signs.

    Switching never changes the embedded surface; it is an involution.
    """
    g = srs.graph
    if not (0 <= v < g.num_vertices):
        raise StructuralError(f"unknown vertex {v}")
    inc = set(g.incident_edges(v))
    signs = tuple(-s if e in inc else s for e, s in enumerate(g.signs))
    rotations = tuple(
        tuple(reversed(rot)) if u == v else rot for u, rot in enumerate(srs.rotations)
    )
    return SignedRotationSystem(g.with_signs(signs), rotations)


def switch_set(srs: SignedRotationSystem, vs: Iterable[int]) -> SignedRotationSystem:
    """Switch at a set of vertices.  Order never matters; repeats cancel."""
    out = srs
    counts: dict[int, int] = {}
    for v in vs:
        counts[v] = counts.get(v, 0) + 1
    for v, c in sorted(counts.items()):
        if c % 2:
            out = switch(out, v)
    return out


def switch_equivalent(a: SignedRotationSystem, b: SignedRotationSystem,
                      max_vertices: int = 20) -> bool:
    """Whether some set of vertex switches turns ``a`` into ``b``.

    Switches at distinct vertices commute and each is an involution, so
    only subsets of the vertex set matter.  Vertices whose rotation is
    not fixed by reversal have their membership forced by comparing the
    two rotations, which keeps the residual search tiny; only vertices
    with reversal-symmetric rotations (degree <= 2, mostly) remain free.
    """
    g = a.graph
    if g.edges != b.graph.edges or g.num_vertices != b.graph.num_vertices:
        raise StructuralError("switch equivalence needs the same underlying graph")
    n = g.num_vertices
    if n > max_vertices:
        raise StructuralError(
            f"graph has {n} vertices; switch-equivalence search is capped at "
            f"{max_vertices}"
        )

    forced: dict[int, bool] = {}
    free: list[int] = []
    for v in range(n):
        rot = a.rotations[v]
        rev = canonical_rotation(tuple(reversed(rot)))
        target = b.rotations[v]
        if rot == rev:
            if target != rot:
                return False
            free.append(v)
        elif target == rot:
            forced[v] = False
        elif target == rev:
            forced[v] = True
        else:
            return False

    base = [v for v, on in forced.items() if on]
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            cand = switch_set(a, base + list(extra))
            if cand.rotations == b.rotations and cand.graph.signs == b.graph.signs:
                return True
    return False
