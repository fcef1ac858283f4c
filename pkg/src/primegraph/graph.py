"""Prime ideal graphs and their complete split structure.

Vertices are ordered with the clique part ``A`` first and the independent
part ``B`` after it, each ascending.  Position ``i < a`` carries the variable
``x_{i+1}``; position ``a + t`` carries ``y_{t+1}``.  Every downstream module
relies on this attachment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Sequence

import numpy as np

from . import kernels
from .errors import CapExceededError, NotPrimeError, SplitStructureError
from .ring import DEFAULT_RING_CAP, PrimeIdeal, RingSpec, prime_witness

DEFAULT_COVER_CAP = 20


@dataclass(frozen=True, eq=False)
class SplitGraph:
    vertices: tuple[Hashable, ...]
    adjacency: np.ndarray
    a: int
    b: int
    ring: RingSpec | None = None
    ideal: PrimeIdeal | None = None

    def __post_init__(self):
        self.adjacency.setflags(write=False)

    @property
    def part_A(self) -> tuple[Hashable, ...]:
        return self.vertices[:self.a]

    @property
    def part_B(self) -> tuple[Hashable, ...]:
        return self.vertices[self.a:]

    @cached_property
    def edge_indices(self) -> tuple[tuple[int, int], ...]:
        iu, ju = np.nonzero(np.triu(self.adjacency, k=1))
        return tuple(zip(iu.tolist(), ju.tolist()))

    @property
    def edges(self) -> frozenset[frozenset]:
        v = self.vertices
        return frozenset(frozenset((v[i], v[j])) for i, j in self.edge_indices)

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, u: Hashable, v: Hashable) -> bool:
        return bool(self.adjacency[self.vertices.index(u), self.vertices.index(v)])

    def neighbours(self, u: Hashable) -> list[Hashable]:
        row = self.adjacency[self.vertices.index(u)]
        return [self.vertices[j] for j in np.flatnonzero(row)]

    def to_dict(self) -> dict:
        label = [str(v) for v in self.vertices]
        return {
            "vertices": label,
            "edges": [[label[i], label[j]] for i, j in self.edge_indices],
            "part_A": label[:self.a],
            "part_B": label[self.a:],
            "a": self.a,
            "b": self.b,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_adjacency_text(self) -> str:
        lines = []
        for i, v in enumerate(self.vertices):
            nbrs = " ".join(str(self.vertices[j]) for j in np.flatnonzero(self.adjacency[i]))
            lines.append(f"{v}: {nbrs}".rstrip())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VertexCover:
    members: frozenset

    def __len__(self) -> int:
        return len(self.members)


def certify_split(adjacency: np.ndarray, a: int) -> None:
    """Raise SplitStructureError unless the first ``a`` vertices form a clique,
    the rest an independent set, and every cross pair is an edge."""
    adj = np.asarray(adjacency, dtype=bool)
    n = adj.shape[0]
    if adj.shape != (n, n) or not np.array_equal(adj, adj.T) or adj.diagonal().any():
        raise SplitStructureError("adjacency is not a simple undirected graph")
    clique = adj[:a, :a] | np.eye(a, dtype=bool)
    if not clique.all():
        i, j = np.argwhere(~clique)[0]
        raise SplitStructureError(f"clique part has a missing edge between positions {i} and {j}")
    if adj[a:, a:].any():
        i, j = np.argwhere(adj[a:, a:])[0]
        raise SplitStructureError(f"independent part has an edge between positions {a + i} and {a + j}")
    if not adj[:a, a:].all():
        i, j = np.argwhere(~adj[:a, a:])[0]
        raise SplitStructureError(f"cross pair at positions {i} and {a + j} is not an edge")
    if n - a < 1:
        raise SplitStructureError("independent part is empty")


def build_graph(r: RingSpec, p: PrimeIdeal, cap: int = DEFAULT_RING_CAP) -> SplitGraph:
    """Γ_P(R): vertices R \\ {0}, x ~ y iff x != y and xy in P.

    The split partition is read off the ideal and then re-checked against the
    adjacency computed from ring products.
    """
    if p.ring != r:
        raise ValueError(f"ideal belongs to {p.ring}, not {r}")
    witness = prime_witness(r, p.members, cap)
    if witness is not None:
        raise NotPrimeError(f"{p} is not a proper prime ideal of {r}", witness)

    elements = r.elements()
    in_p = np.zeros(r.order, dtype=np.bool_)
    for x in p.members:
        in_p[r.index(x)] = True
    part_a = [i for i in range(1, r.order) if in_p[i]]
    part_b = [i for i in range(1, r.order) if not in_p[i]]
    order = np.array(part_a + part_b, dtype=np.int64)

    prod_in_p = kernels.product_in_set(r.coords, r.moduli, r.weights, in_p)
    adjacency = np.array(prod_in_p[np.ix_(order, order)], dtype=np.bool_)
    np.fill_diagonal(adjacency, False)
    certify_split(adjacency, len(part_a))

    g = SplitGraph(tuple(elements[i] for i in order), adjacency, len(part_a), len(part_b), r, p)
    if g.a >= 1 and g.b < 2:
        raise SplitStructureError(f"a = {g.a} but b = {g.b} < 2")
    return g


def abstract_split_graph(a: int, b: int) -> SplitGraph:
    """K_a join the edgeless graph on b vertices, labelled u1..ua, v1..vb."""
    if a < 0 or b < 1:
        raise ValueError(f"need a >= 0 and b >= 1, got a={a}, b={b}")
    n = a + b
    adjacency = np.zeros((n, n), dtype=np.bool_)
    adjacency[:a, :] = True
    adjacency[:, :a] = True
    np.fill_diagonal(adjacency, False)
    labels = tuple(f"u{i}" for i in range(1, a + 1)) + tuple(f"v{t}" for t in range(1, b + 1))
    return SplitGraph(labels, adjacency, a, b)


def split_parameters(g: SplitGraph) -> tuple[int, int]:
    return g.a, g.b


def clique_number(g: SplitGraph) -> int:
    # a maximal clique is A plus one vertex of B; with a = 0 the graph is edgeless
    return g.a + 1 if g.a >= 1 else 1


def maximal_cliques(g: SplitGraph) -> list[frozenset]:
    if g.a == 0:
        return [frozenset((v,)) for v in g.vertices]
    return [frozenset(g.part_A) | {v} for v in g.part_B]


def is_vertex_cover(g: SplitGraph, members: Sequence[Hashable] | frozenset) -> bool:
    s = set(members)
    v = g.vertices
    return all(v[i] in s or v[j] in s for i, j in g.edge_indices)


def is_minimal_vertex_cover(g: SplitGraph, members) -> bool:
    s = set(members)
    return is_vertex_cover(g, s) and not any(is_vertex_cover(g, s - {x}) for x in s)


def minimal_vertex_covers_closed_form(g: SplitGraph) -> list[VertexCover]:
    """A, and (A minus u_i) together with B for each i.

    For ``a = 0`` the graph has no edges and this returns an empty list; the
    only minimal cover there is the empty set, which the brute-force search
    reports.
    """
    if g.a == 0:
        return []
    part_a, part_b = frozenset(g.part_A), frozenset(g.part_B)
    return [VertexCover(part_a)] + [VertexCover((part_a - {u}) | part_b) for u in g.part_A]


def minimal_vertex_covers_bruteforce(g: SplitGraph, cap: int = DEFAULT_COVER_CAP) -> list[VertexCover]:
    """Every inclusion-minimal vertex cover, by exhaustive search over subsets."""
    n = len(g)
    if n > cap:
        raise CapExceededError(f"{n} vertices exceed the brute-force cover cap {cap}")
    eu = np.array([i for i, _ in g.edge_indices], dtype=np.int64)
    ev = np.array([j for _, j in g.edge_indices], dtype=np.int64)
    masks = kernels.minimal_cover_masks(n, eu, ev)
    covers = []
    for mask in masks.tolist():
        covers.append(VertexCover(frozenset(g.vertices[i] for i in range(n) if mask >> i & 1)))
    return covers


def max_clique_bruteforce(g: SplitGraph, cap: int = DEFAULT_COVER_CAP) -> int:
    """Largest clique size by trying subsets from the top down."""
    n = len(g)
    if n > cap:
        raise CapExceededError(f"{n} vertices exceed the brute-force clique cap {cap}")
    adj = g.adjacency
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            if all(adj[i, j] for i, j in combinations(subset, 2)):
                return size
    return 0


def non_adjacent_pair(g: SplitGraph) -> tuple[Hashable, Hashable] | None:
    """Some pair of distinct non-adjacent vertices, or None if the graph is complete."""
    missing = ~g.adjacency
    np.fill_diagonal(missing, False)
    hits = np.argwhere(missing)
    if len(hits) == 0:
        return None
    i, j = hits[0]
    return g.vertices[i], g.vertices[j]
