"""Finite simple graphs: neighborhoods, leaf-distance heights, total
domination, neighborhood ideals, stable complexes, tree builders, the
two-piece decomposition machinery, chordality, and the Sperner-family
realization construction.

Vertices are labels in a Universe; adjacency is a bitmask per position.
All builders return new immutable graphs.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .complexes import SimplicialComplex
from .errors import CapExceeded, InputError
from .ideals import SquareFreeIdeal
from .universe import (
    SpernerFamily,
    Universe,
    VertexSet,
    _bits,
    minimal_transversals,
)

DECOMPOSITION_VERTEX_CAP = 18

_FRESH_LABEL = re.compile(r"^p(\d+)_\d+$")


class Graph:
    __slots__ = ("universe", "adj")

    def __init__(self, universe: Universe, edges: Iterable[tuple[str, str]] = ()):
        adj = [0] * len(universe)
        for a, b in edges:
            i, j = universe.position(a), universe.position(b)
            if i == j:
                raise InputError(f"loop at vertex {a!r} (graphs are simple)")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.universe = universe
        self.adj = tuple(adj)

    @classmethod
    def from_vertices(
        cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()
    ) -> "Graph":
        return cls(Universe(vertices), edges)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.universe.labels

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        out = []
        for i, mask in enumerate(self.adj):
            for j in _bits(mask):
                if j > i:
                    pair = sorted((self.universe.labels[i], self.universe.labels[j]))
                    out.append((pair[0], pair[1]))
        return tuple(sorted(out))

    def __len__(self) -> int:
        return len(self.universe)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.universe == other.universe
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph({len(self)} vertices, {len(self.edges)} edges)"

    def degree(self, v: str) -> int:
        return self.adj[self.universe.position(v)].bit_count()

    def neighbors(self, v: str) -> VertexSet:
        return VertexSet(self.universe, self.adj[self.universe.position(v)])

    def closed_neighbors(self, v: str) -> VertexSet:
        p = self.universe.position(v)
        return VertexSet(self.universe, self.adj[p] | (1 << p))

    def neighborhood_of(self, vs: Iterable[str]) -> VertexSet:
        mask = 0
        for v in vs:
            mask |= self.adj[self.universe.position(v)]
        return VertexSet(self.universe, mask)

    def neighborhood_family(self) -> tuple[int, ...]:
        """One open-neighborhood mask per vertex position."""
        return self.adj

    def induced(self, keep: Iterable[str]) -> "Graph":
        labels = sorted(set(keep))
        keep_mask = self.universe.mask_of(labels)
        sub = Universe(labels)
        edges = []
        for lab in labels:
            i = self.universe.position(lab)
            for j in _bits(self.adj[i] & keep_mask):
                if j > i:
                    edges.append((lab, self.universe.labels[j]))
        return Graph(sub, edges)

    def delete_vertices(self, gone: Iterable[str]) -> "Graph":
        drop = {v for v in gone if self.universe.position(v) >= 0}
        return self.induced(v for v in self.vertices if v not in drop)

    def delete_closed_neighborhood(self, v: str) -> "Graph":
        return self.delete_vertices(self.closed_neighbors(v).members)

    def component_masks(self) -> tuple[int, ...]:
        out = []
        seen = 0
        for start in range(len(self.adj)):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = [start]
            while frontier:
                nxt = self.adj[frontier.pop()] & ~comp
                comp |= nxt
                frontier.extend(_bits(nxt))
            seen |= comp
            out.append(comp)
        return tuple(out)

    def components(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.universe.labels_of(m) for m in self.component_masks())

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def is_forest(self) -> bool:
        return self.edge_count == len(self) - len(self.component_masks())

    def is_tree(self) -> bool:
        return len(self) >= 1 and self.is_connected() and self.edge_count == len(self) - 1

    def is_subgraph_of(self, other: "Graph") -> bool:
        if not set(self.vertices) <= set(other.vertices):
            return False
        have = set(other.edges)
        return all(e in have for e in self.edges)

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Graph":
        if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
            raise InputError('graph JSON needs "vertices" and "edges" keys')
        universe = Universe(obj["vertices"])
        edges = []
        for e in obj["edges"]:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise InputError(f"edge {e!r} is not a pair")
            edges.append((e[0], e[1]))
        return cls(universe, edges)

    def to_text(self) -> str:
        lines = [f"{a} {b}" for a, b in self.edges]
        touched = {v for e in self.edges for v in e}
        lines.extend(f"# vertex {v}" for v in self.vertices if v not in touched)
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        edges: list[tuple[str, str]] = []
        declared: set[str] = set()
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "vertex":
                    declared.add(parts[1])
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"expected 'a b' edge line, got {raw!r}")
            edges.append((parts[0], parts[1]))
        declared.update(v for e in edges for v in e)
        return cls(Universe(declared), edges)


def _heights_of_adj(
    adj: Sequence[int], present: int
) -> tuple[dict[int, Optional[int]], bool]:
    """Leaf-distance heights and forest flag for the subgraph on `present`
    positions with the given (possibly non-induced) adjacency masks."""
    heights: dict[int, Optional[int]] = {}
    queue: deque[int] = deque()
    n = edge_twice = 0
    for p in _bits(present):
        n += 1
        deg = (adj[p] & present).bit_count()
        edge_twice += deg
        if deg <= 1:
            heights[p] = 0
            queue.append(p)
        else:
            heights[p] = None
    while queue:
        p = queue.popleft()
        h = heights[p]
        assert h is not None
        for q in _bits(adj[p] & present):
            if heights[q] is None:
                heights[q] = h + 1
                queue.append(q)
    comps = 0
    seen = 0
    for start in _bits(present):
        if seen >> start & 1:
            continue
        comps += 1
        comp = 1 << start
        frontier = [start]
        while frontier:
            nxt = adj[frontier.pop()] & present & ~comp
            comp |= nxt
            frontier.extend(_bits(nxt))
        seen |= comp
    return heights, edge_twice // 2 == n - comps


class HeightProfile:
    """Per-vertex leaf distances with parity strata and the balance flag."""

    __slots__ = ("universe", "heights", "is_forest", "is_tree", "balanced")

    def __init__(self, graph: Graph):
        present = graph.universe.full_mask()
        by_pos, forest = _heights_of_adj(graph.adj, present)
        self.universe = graph.universe
        self.heights = tuple(by_pos.get(p) for p in range(len(graph.universe)))
        self.is_forest = forest
        self.is_tree = graph.is_tree()
        balanced = forest and all(h is not None for h in self.heights)
        if balanced:
            for i, mask in enumerate(graph.adj):
                for j in _bits(mask):
                    if j > i and self.heights[i] == self.heights[j]:
                        balanced = False
                        break
                if not balanced:
                    break
        self.balanced = balanced

    def height_of(self, v: str) -> Optional[int]:
        return self.heights[self.universe.position(v)]

    @property
    def graph_height(self) -> Optional[int]:
        defined = [h for h in self.heights if h is not None]
        return max(defined) if defined else None

    def stratum(self, k: int) -> VertexSet:
        mask = 0
        for p, h in enumerate(self.heights):
            if h == k:
                mask |= 1 << p
        return VertexSet(self.universe, mask)

    def _parity_mask(self, parity: int) -> int:
        mask = 0
        for p, h in enumerate(self.heights):
            if h is not None and h % 2 == parity:
                mask |= 1 << p
        return mask

    @property
    def v_odd(self) -> VertexSet:
        return VertexSet(self.universe, self._parity_mask(1))

    @property
    def v_even(self) -> VertexSet:
        return VertexSet(self.universe, self._parity_mask(0))

    def to_json_obj(self) -> dict:
        return {
            "heights": {
                lab: self.heights[p]
                for p, lab in enumerate(self.universe.labels)
            },
            "height": self.graph_height,
            "balanced": self.balanced,
            "forest": self.is_forest,
            "tree": self.is_tree,
            "odd": list(self.v_odd.members),
            "even": list(self.v_even.members),
        }


def heights(graph: Graph) -> HeightProfile:
    return HeightProfile(graph)


def oni(graph: Graph) -> SquareFreeIdeal:
    """Open neighborhood ideal over the full vertex set.  An isolated
    vertex contributes the empty support, collapsing the ideal to UNIT."""
    supports = (graph.universe.labels_of(m) for m in graph.adj)
    return SquareFreeIdeal.from_supports(graph.universe, supports)


def _require_balanced(graph: Graph) -> HeightProfile:
    profile = heights(graph)
    if not profile.balanced:
        raise InputError("graph is not a balanced forest")
    return profile


def odd_oni(graph: Graph) -> SquareFreeIdeal:
    """Odd-vertex neighborhood ideal of a balanced forest, read over the
    even vertices."""
    profile = _require_balanced(graph)
    even = Universe(profile.v_even.members)
    supports = [graph.neighbors(v).members for v in profile.v_odd.members]
    return SquareFreeIdeal.from_supports(even, supports)


def induced_odd_oni(sub: Graph, graph: Graph) -> SquareFreeIdeal:
    """Neighborhoods taken inside the subgraph, odd/even strata taken from
    the ambient graph."""
    if not sub.is_subgraph_of(graph):
        raise InputError("first argument must be a subgraph of the second")
    profile = heights(graph)
    if any(h is None for h in profile.heights):
        raise InputError("ambient heights are undefined (a component has no leaf)")
    sub_labels = set(sub.vertices)
    even = Universe(v for v in profile.v_even.members if v in sub_labels)
    supports = []
    for v in profile.v_odd.members:
        if v in sub_labels:
            nb = sub.neighbors(v).members
            for u in nb:
                if u not in even:
                    raise InputError(
                        f"neighborhood of {v!r} leaves the even stratum at {u!r}; "
                        "the ambient graph is not balanced"
                    )
            supports.append(nb)
    return SquareFreeIdeal.from_supports(even, supports)


def minimal_td_sets(graph: Graph) -> SpernerFamily:
    """Minimal total dominating sets: minimal transversals of the open
    neighborhoods.  Empty when an isolated vertex forbids domination."""
    return minimal_transversals(oni(graph).generators)


def minimal_odd_td_sets(graph: Graph) -> SpernerFamily:
    """Minimal sets dominating every odd vertex of a balanced forest;
    always contained in the even stratum, and returned over it."""
    return minimal_transversals(odd_oni(graph).generators)


def is_td_unmixed(graph: Graph) -> bool:
    sizes = {m.bit_count() for m in minimal_td_sets(graph).masks}
    return len(sizes) <= 1


def _components_structurally_unmixed(graph: Graph, profile: HeightProfile) -> bool:
    one = profile.stratum(1).mask
    two = profile.stratum(2).mask
    for comp in graph.component_masks():
        comp_height = max(profile.heights[p] for p in _bits(comp))
        if comp_height > 3:
            return False
        for p in _bits(comp & two):
            if (graph.adj[p] & one).bit_count() != 1:
                return False
        for p in _bits(comp & one):
            hits = (graph.adj[p] & two).bit_count()
            if hits > 1 or (comp_height == 3 and hits != 1):
                return False
    return True


def is_td_unmixed_balanced_forest(graph: Graph) -> bool:
    """Structural test applied per component; false (not an error) when the
    graph is not a balanced forest at all."""
    profile = heights(graph)
    if not profile.balanced:
        return False
    return _components_structurally_unmixed(graph, profile)


def is_structurally_td_unmixed(tree: Graph) -> bool:
    """Height and stem/branch counting conditions on a balanced tree,
    equivalent to unmixedness without enumerating a single TD-set."""
    profile = heights(tree)
    if not profile.is_tree or not profile.balanced:
        raise InputError("structural unmixedness test needs a balanced tree")
    return _components_structurally_unmixed(tree, profile)


def stable_complex(graph: Graph) -> SimplicialComplex:
    """Complements of the minimal TD-sets; void when no TD-set exists."""
    full = graph.universe.full_mask()
    return SimplicialComplex(
        graph.universe, (full & ~m for m in minimal_td_sets(graph).masks)
    )


def even_stable_complex(graph: Graph) -> SimplicialComplex:
    """Complements, inside the even stratum, of the minimal odd-TD-sets."""
    family = minimal_odd_td_sets(graph)
    full = family.universe.full_mask()
    return SimplicialComplex(family.universe, (full & ~m for m in family.masks))


def path_graph(n: int) -> Graph:
    """Path on vertices "0".."n" (n+1 vertices)."""
    if n < 0:
        raise InputError("path length must be nonnegative")
    labels = [str(i) for i in range(n + 1)]
    return Graph(Universe(labels), ((str(i), str(i + 1)) for i in range(n)))


def edge_join(g1: Graph, g2: Graph, v1: str, v2: str) -> Graph:
    """Disjoint union plus the single bridge edge {v1, v2}."""
    shared = set(g1.vertices) & set(g2.vertices)
    if shared:
        raise InputError(
            f"edge join needs disjoint labels; shared: {', '.join(sorted(shared))}"
        )
    if v1 not in g1.universe:
        raise InputError(f"vertex {v1!r} not in the first graph")
    if v2 not in g2.universe:
        raise InputError(f"vertex {v2!r} not in the second graph")
    universe = Universe(g1.vertices + g2.vertices)
    edges = list(g1.edges) + list(g2.edges) + [(v1, v2)]
    return Graph(universe, edges)


def _next_fresh_counter(graph: Graph) -> int:
    best = 0
    for lab in graph.vertices:
        m = _FRESH_LABEL.match(lab)
        if m:
            best = max(best, int(m.group(1)))
    return best + 1


def o_extend(tree: Graph, v: str) -> Graph:
    """Attach a fresh path to v, sized by v's height (1, 2, or 3), keeping
    the result a balanced height-3 tree."""
    profile = heights(tree)
    if not profile.is_tree or not profile.balanced or profile.graph_height != 3:
        raise InputError("o-extension needs a balanced tree of height 3")
    if v not in tree.universe:
        raise InputError(f"vertex {v!r} not in the tree")
    h = profile.height_of(v)
    if h == 0:
        raise InputError(f"vertex {v!r} has height 0; extension needs height >= 1")
    assert h is not None
    path_top = {1: 0, 2: 3, 3: 2}[h]
    k = _next_fresh_counter(tree)
    labels = [f"p{k}_{i}" for i in range(path_top + 1)]
    branch = Graph(
        Universe(labels),
        ((labels[i], labels[i + 1]) for i in range(path_top)),
    )
    return edge_join(tree, branch, v, labels[path_top])


def o_sequence(picks: Iterable[str]) -> Graph:
    """Fold o_extend over a list of vertex choices, starting from the
    7-vertex path."""
    tree = path_graph(6)
    for step, v in enumerate(picks):
        try:
            tree = o_extend(tree, v)
        except InputError as exc:
            raise InputError(f"step {step}: {exc}") from None
    return tree


def find_split_vertex(tree: Graph) -> str:
    """Canonically first height-2 vertex of degree 2 in a TD-unmixed
    balanced height-3 tree."""
    profile = heights(tree)
    if (
        not profile.is_tree
        or not profile.balanced
        or profile.graph_height != 3
        or not _components_structurally_unmixed(tree, profile)
    ):
        raise InputError(
            "split vertex requires a TD-unmixed balanced tree of height 3"
        )
    for v in profile.stratum(2).members:
        if tree.degree(v) == 2:
            return v
    raise RuntimeError("no degree-2 height-2 vertex found; this cannot happen")


@dataclass(frozen=True)
class TreeDecomposition:
    t1: Graph
    t2: Graph


def verify_decomposition(tree: Graph, t1: Graph, t2: Graph) -> bool:
    """Check the three decomposition conditions exactly: both pieces are
    balanced forests, their even strata partition the vertices together
    with the ambient height-1 stratum, and the neighborhood ideal is the
    three-term sum."""
    if not tree.is_tree():
        raise InputError("decomposition target must be a tree")
    if not t1.is_subgraph_of(tree) or not t2.is_subgraph_of(tree):
        raise InputError("decomposition pieces must be subgraphs")
    p1, p2 = heights(t1), heights(t2)
    if not p1.balanced or not p2.balanced:
        return False
    ambient = heights(tree)
    u = tree.universe
    even1 = u.mask_of(p1.v_even.members)
    even2 = u.mask_of(p2.v_even.members)
    ones = ambient.stratum(1).mask
    if even1 & even2 or even1 & ones or even2 & ones:
        return False
    if even1 | even2 | ones != u.full_mask():
        return False
    total = (
        odd_oni(t1)
        .extended_to(u)
        .sum(odd_oni(t2).extended_to(u))
        .sum(SquareFreeIdeal.from_supports(u, ([s] for s in u.labels_of(ones))))
    )
    return total == oni(tree)


def _b_side(tree: Graph, a_mask: int) -> int:
    """Vertices outside the even-side choice whose whole neighborhood
    lies inside it."""
    b_mask = 0
    for p in range(len(tree.universe)):
        if not a_mask >> p & 1 and tree.adj[p] and tree.adj[p] & ~a_mask == 0:
            b_mask |= 1 << p
    return b_mask


def _build_piece(tree: Graph, a_mask: int, b_mask: int) -> Graph:
    """Candidate piece on the chosen even side plus its absorbed odd side,
    with only the crossing edges."""
    u = tree.universe
    labels = u.labels_of(a_mask | b_mask)
    edges = []
    for p in _bits(b_mask):
        lab = u.labels[p]
        for q in _bits(tree.adj[p]):
            edges.append((lab, u.labels[q]))
    return Graph(Universe(labels), edges)


def _piece_adj(tree: Graph, a_mask: int, b_mask: int) -> list[int]:
    adj = [0] * len(tree.universe)
    for p in _bits(b_mask):
        hits = tree.adj[p] & a_mask
        adj[p] = hits
        for q in _bits(hits):
            adj[q] |= 1 << p
    return adj


def _masked_balanced_even(tree: Graph, a_mask: int, b_mask: int) -> Optional[int]:
    """Even-stratum mask of the candidate piece, or None when the piece is
    not a balanced forest.  Works in ambient positions."""
    present = a_mask | b_mask
    adj = _piece_adj(tree, a_mask, b_mask)
    by_pos, forest = _heights_of_adj(adj, present)
    if not forest:
        return None
    even = 0
    for p in _bits(present):
        h = by_pos[p]
        if h is None:
            return None
        if h % 2 == 0:
            even |= 1 << p
    for p in _bits(present):
        for q in _bits(adj[p] & present):
            if q > p and by_pos[p] == by_pos[q]:
                return None
    return even


def search_decomposition(
    tree: Graph, cap: int = DECOMPOSITION_VERTEX_CAP
) -> Optional[TreeDecomposition]:
    """Best-effort search for a verified decomposition.

    Candidate even-side bipartitions come first from the balanced strata,
    then from leaf-parity classes of the stemless subgraph, then from
    exhaustive enumeration.  Every candidate is funneled through
    verify_decomposition; absence of a result is not proof of absence."""
    if not tree.is_tree():
        raise InputError("decomposition search needs a tree")
    n = len(tree)
    if n > cap:
        raise CapExceeded(f"decomposition search cap is {cap} vertices; got {n}")
    u = tree.universe
    ambient = heights(tree)
    ones = ambient.stratum(1).mask
    w_mask = u.full_mask() & ~ones

    candidates: list[int] = []
    seen: set[frozenset[int]] = set()

    def push(a_mask: int) -> None:
        key = frozenset((a_mask, w_mask & ~a_mask))
        if key not in seen:
            seen.add(key)
            candidates.append(a_mask)

    if ambient.balanced and (ambient.graph_height or 0) <= 3:
        push(ambient.v_even.mask)

    stemless = [tree.adj[p] & w_mask for p in range(len(u))]
    comp_classes: list[tuple[int, int]] = []
    seen_mask = 0
    for start in _bits(w_mask):
        if seen_mask >> start & 1:
            continue
        comp = 1 << start
        frontier = [start]
        while frontier:
            nxt = stemless[frontier.pop()] & ~comp
            comp |= nxt
            frontier.extend(_bits(nxt))
        seen_mask |= comp
        by_pos, _ = _heights_of_adj(stemless, comp)
        ev = od = 0
        for p in _bits(comp):
            h = by_pos[p]
            if h is not None and h % 2 == 0:
                ev |= 1 << p
            else:
                od |= 1 << p
        comp_classes.append((ev, od))
    if len(comp_classes) <= 12:
        for vector in range(1 << len(comp_classes)):
            a = 0
            for i, (ev, od) in enumerate(comp_classes):
                a |= od if vector >> i & 1 else ev
            push(a)

    w_positions = list(_bits(w_mask))
    if w_positions and len(w_positions) <= 17:
        first = 1 << w_positions[0]
        rest = w_positions[1:]
        for sub in range(1 << len(rest)):
            a = first
            for i, p in enumerate(rest):
                if sub >> i & 1:
                    a |= 1 << p
            push(a)
    elif not w_positions:
        push(0)

    for a_mask in candidates:
        other = w_mask & ~a_mask
        b1 = _b_side(tree, a_mask)
        even1 = _masked_balanced_even(tree, a_mask, b1)
        if even1 is None:
            continue
        b2 = _b_side(tree, other)
        even2 = _masked_balanced_even(tree, other, b2)
        if even2 is None:
            continue
        if even1 & even2 or (even1 | even2 | ones) != u.full_mask():
            continue
        piece1 = _build_piece(tree, a_mask, b1)
        piece2 = _build_piece(tree, other, b2)
        if verify_decomposition(tree, piece1, piece2):
            return TreeDecomposition(piece1, piece2)
    return None


def is_chordal(graph: Graph) -> bool:
    """Maximum cardinality search followed by the perfect elimination
    ordering check."""
    n = len(graph)
    if n == 0:
        return True
    weight = [0] * n
    numbered = [False] * n
    visit: list[int] = []
    for _ in range(n):
        best = -1
        for p in range(n):
            if not numbered[p] and (best == -1 or weight[p] > weight[best]):
                best = p
        numbered[best] = True
        visit.append(best)
        for q in _bits(graph.adj[best]):
            if not numbered[q]:
                weight[q] += 1
    peo = visit[::-1]
    rank = {p: i for i, p in enumerate(peo)}
    for p in peo:
        later = [q for q in _bits(graph.adj[p]) if rank[q] > rank[p]]
        if not later:
            continue
        w = min(later, key=lambda q: rank[q])
        later_mask = 0
        for q in later:
            if q != w:
                later_mask |= 1 << q
        if later_mask & ~graph.adj[w]:
            return False
    return True


def realize_as_oni(family: SpernerFamily) -> Graph:
    """Complete graph on the family's ground set plus one fresh vertex per
    minimal transversal, wired so the minimal TD-sets are exactly the
    family members."""
    base = family.universe
    covered = 0
    for m in family.masks:
        if m.bit_count() < 2:
            members = ", ".join(base.labels_of(m))
            raise InputError(
                f"family member {{{members}}} has fewer than 2 elements"
            )
        covered |= m
    if covered != base.full_mask():
        missing = base.labels_of(base.full_mask() & ~covered)
        raise InputError(f"family does not cover its universe: {', '.join(missing)}")
    transversals = minimal_transversals(family)
    fresh = [f"t{i + 1}" for i in range(len(transversals.masks))]
    for lab in fresh:
        if lab in base:
            raise InputError(f"fresh label {lab!r} collides with the ground set")
    universe = Universe(base.labels + tuple(fresh))
    edges: list[tuple[str, str]] = []
    labels = base.labels
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            edges.append((labels[i], labels[j]))
    for t_lab, t_mask in zip(fresh, transversals.masks):
        edges.extend((t_lab, v) for v in base.labels_of(t_mask))
    return Graph(universe, edges)
