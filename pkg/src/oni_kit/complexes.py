"""Simplicial complexes by facets, vertex decomposability, and the
Stanley-Reisner bridges to square-free ideals.

Three kinds of complex are distinguished: VOID (no faces at all), EMPTY
(only the empty face), and ORDINARY.  VOID corresponds to the unit ideal
under the Stanley-Reisner map, EMPTY to the ideal of all variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import CapExceeded, InputError
from .ideals import SquareFreeIdeal
from .universe import (
    SpernerFamily,
    Universe,
    VertexSet,
    _bits,
    maximal_masks,
    minimal_transversals,
    sort_key,
)

VOID = "void"
EMPTY = "empty"
ORDINARY = "ordinary"

FOREST_FACET_CAP = 18


class SimplicialComplex:
    __slots__ = ("universe", "facets")

    def __init__(self, universe: Universe, facet_masks: Iterable[int]):
        self.universe = universe
        self.facets = SpernerFamily(universe, maximal_masks(facet_masks))

    @classmethod
    def from_facets(
        cls, universe: Universe, facets: Iterable[Iterable[str]]
    ) -> "SimplicialComplex":
        """Build from faces; non-maximal ones are absorbed."""
        return cls(universe, (universe.mask_of(f) for f in facets))

    @classmethod
    def void(cls, universe: Universe) -> "SimplicialComplex":
        return cls(universe, ())

    @classmethod
    def empty(cls, universe: Universe) -> "SimplicialComplex":
        return cls(universe, (0,))

    @classmethod
    def full_simplex(cls, universe: Universe) -> "SimplicialComplex":
        return cls(universe, (universe.full_mask(),))

    @property
    def kind(self) -> str:
        if not self.facets.masks:
            return VOID
        if self.facets.masks == (0,):
            return EMPTY
        return ORDINARY

    @property
    def facet_sets(self) -> tuple[VertexSet, ...]:
        return self.facets.sets

    def is_face(self, face: Iterable[str]) -> bool:
        mask = self.universe.mask_of(face)
        return any(mask & f == mask for f in self.facets.masks)

    def faces(self) -> Iterator[VertexSet]:
        """All faces, deduplicated, in canonical order.  Exponential; for
        desk-scale checks only."""
        seen = set()
        for f in self.facets.masks:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        for mask in sorted(seen, key=sort_key):
            yield VertexSet(self.universe, mask)

    def dimension_profile(self) -> tuple[int, bool]:
        """(dimension, is_pure).  The void complex has neither."""
        if self.kind == VOID:
            raise InputError("void complex has no dimension")
        sizes = [m.bit_count() for m in self.facets.masks]
        return max(sizes) - 1, len(set(sizes)) == 1

    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self.facets.masks}
        return len(sizes) <= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.universe == other.universe
            and self.facets.masks == other.facets.masks
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.facets.masks))

    def __repr__(self) -> str:
        if self.kind == VOID:
            return "SimplicialComplex(void)"
        inner = ", ".join("{" + ", ".join(s) + "}" for s in self.facets.members)
        return f"SimplicialComplex(<{inner}>)"

    def extended_to(self, universe: Universe) -> "SimplicialComplex":
        """The same facets read over a larger universe; the added labels
        carry no faces."""
        for lab in self.universe.labels:
            if lab not in universe:
                raise InputError(f"target universe is missing label {lab!r}")
        return SimplicialComplex(
            universe, (universe.mask_of(f) for f in self.facets.members)
        )

    def to_json_obj(self) -> dict:
        return {
            "universe": list(self.universe.labels),
            "facets": [list(f) for f in self.facets.members],
            "kind": self.kind,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "universe" not in obj or "facets" not in obj:
            raise InputError('complex JSON needs "universe" and "facets" keys')
        universe = Universe(obj["universe"])
        cx = cls.from_facets(universe, obj["facets"])
        if "kind" in obj and obj["kind"] != cx.kind:
            raise InputError(f'complex JSON kind "{obj["kind"]}" contradicts the facets')
        return cx


def deletion(cx: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Faces disjoint from the given set; facets are the maximal truncations."""
    gone = cx.universe.mask_of(face)
    return SimplicialComplex(cx.universe, (f & ~gone for f in cx.facets.masks))


def link(cx: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    """Link of a face; the void complex when the set is not a face."""
    mask = cx.universe.mask_of(face)
    holders = [f & ~mask for f in cx.facets.masks if f & mask == mask]
    return SimplicialComplex(cx.universe, holders)


def join(left: SimplicialComplex, right: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join over the disjoint union of the two universes."""
    overlap = set(left.universe.labels) & set(right.universe.labels)
    if overlap:
        raise InputError(
            f"join requires disjoint universes; shared: {', '.join(sorted(overlap))}"
        )
    combined = Universe(left.universe.labels + right.universe.labels)
    facets = [
        combined.mask_of(left.universe.labels_of(a) + right.universe.labels_of(b))
        for a in left.facets.masks
        for b in right.facets.masks
    ]
    return SimplicialComplex(combined, facets)


def is_shedding_vertex(cx: SimplicialComplex, v: str) -> bool:
    """Literal facet-subset test: every facet of the deletion at v is a
    facet of the complex itself."""
    if cx.kind != ORDINARY:
        raise InputError("shedding test needs an ordinary complex")
    cx.universe.position(v)
    del_facets = deletion(cx, (v,)).facets.masks
    return set(del_facets) <= set(cx.facets.masks)


@dataclass(frozen=True)
class Leaf:
    kind: str  # "simplex" | "empty"


@dataclass(frozen=True)
class Shed:
    vertex: str
    deletion: "SheddingCertificate"
    link: "SheddingCertificate"


SheddingCertificate = Union[Leaf, Shed]


def shedding_certificate_to_json(cert: SheddingCertificate) -> dict:
    if isinstance(cert, Leaf):
        return {"leaf": cert.kind}
    return {
        "shed": cert.vertex,
        "del": shedding_certificate_to_json(cert.deletion),
        "lk": shedding_certificate_to_json(cert.link),
    }


def shedding_certificate_from_json(obj: dict) -> SheddingCertificate:
    if not isinstance(obj, dict):
        raise InputError("certificate must be a JSON object")
    if "leaf" in obj:
        if obj["leaf"] not in ("simplex", "empty"):
            raise InputError(f'unknown leaf kind {obj["leaf"]!r}')
        return Leaf(obj["leaf"])
    if "shed" in obj:
        if "del" not in obj or "lk" not in obj:
            raise InputError('shed node needs "del" and "lk" subtrees')
        return Shed(
            obj["shed"],
            shedding_certificate_from_json(obj["del"]),
            shedding_certificate_from_json(obj["lk"]),
        )
    raise InputError('certificate node needs "leaf" or "shed"')


def is_vertex_decomposable(
    cx: SimplicialComplex,
) -> tuple[bool, Optional[SheddingCertificate]]:
    """Decide vertex decomposability of a pure complex, with a replayable
    certificate on success.

    Candidate shedding vertices are tried in canonical label order and only
    among vertices lying in some facet (others make no progress), so the
    returned certificate is the canonically first witness.  Subproblems are
    memoized per call on their facet form.
    """
    if cx.kind in (VOID, EMPTY):
        return True, Leaf("empty" if cx.kind == VOID else "simplex")
    if not cx.is_pure():
        raise InputError("vertex decomposability is defined for pure complexes")

    facet_set_cache: dict[tuple[int, ...], Optional[SheddingCertificate]] = {}

    def search(facets: tuple[int, ...]) -> Optional[SheddingCertificate]:
        if facets in facet_set_cache:
            return facet_set_cache[facets]
        if len(facets) <= 1:
            cert: Optional[SheddingCertificate] = Leaf(
                "simplex" if facets else "empty"
            )
            facet_set_cache[facets] = cert
            return cert
        if len({f.bit_count() for f in facets}) > 1:
            facet_set_cache[facets] = None
            return None
        support = 0
        for f in facets:
            support |= f
        result: Optional[SheddingCertificate] = None
        for p in _bits(support):
            bit = 1 << p
            del_facets = tuple(f for f in facets if not f & bit)
            # shedding: every truncated facet must be absorbed by a survivor,
            # so the deletion's facets are exactly the surviving ones
            if any(
                not any(f & ~bit & g == f & ~bit for g in del_facets)
                for f in facets
                if f & bit
            ):
                continue
            link_facets = maximal_masks(f & ~bit for f in facets if f & bit)
            cert_del = search(del_facets)
            if cert_del is None:
                continue
            cert_link = search(link_facets)
            if cert_link is None:
                continue
            result = Shed(cx.universe.labels[p], cert_del, cert_link)
            break
        facet_set_cache[facets] = result
        return result

    found = search(cx.facets.masks)
    return (found is not None), found


def validate_shedding_certificate(
    cx: SimplicialComplex, cert: SheddingCertificate
) -> bool:
    """Replay a certificate: every Shed node must pass the shedding test on
    a pure complex, every Leaf must match its base case."""
    if isinstance(cert, Leaf):
        if cert.kind == "empty":
            return cx.kind in (VOID, EMPTY)
        return len(cx.facets.masks) == 1
    if cx.kind != ORDINARY or not cx.is_pure():
        return False
    if cert.vertex not in cx.universe:
        return False
    if not is_shedding_vertex(cx, cert.vertex):
        return False
    return validate_shedding_certificate(
        deletion(cx, (cert.vertex,)), cert.deletion
    ) and validate_shedding_certificate(link(cx, (cert.vertex,)), cert.link)


def stanley_reisner_ideal(cx: SimplicialComplex) -> SquareFreeIdeal:
    """Ideal of minimal non-faces: the minimal transversals of the facet
    complements.  VOID maps to the unit ideal, the full simplex to zero."""
    complements = SpernerFamily(
        cx.universe, (cx.universe.full_mask() & ~f for f in cx.facets.masks)
    )
    return SquareFreeIdeal(minimal_transversals(complements))


def stanley_reisner_complex(ideal: SquareFreeIdeal) -> SimplicialComplex:
    """Facets are the complements of the minimal primes; inverse of
    stanley_reisner_ideal."""
    if ideal.is_unit:
        return SimplicialComplex.void(ideal.universe)
    if ideal.is_zero:
        return SimplicialComplex.full_simplex(ideal.universe)
    full = ideal.universe.full_mask()
    return SimplicialComplex(
        ideal.universe, (full & ~p for p in ideal.minimal_primes().masks)
    )


def facet_ideal(cx: SimplicialComplex) -> SquareFreeIdeal:
    if cx.kind != ORDINARY:
        raise InputError("facet ideal needs an ordinary complex")
    return SquareFreeIdeal(cx.facets)


def minimal_vertex_covers(cx: SimplicialComplex) -> SpernerFamily:
    if cx.kind != ORDINARY:
        raise InputError("vertex covers need an ordinary complex")
    return minimal_transversals(cx.facets)


def is_unmixed_complex(cx: SimplicialComplex) -> bool:
    covers = minimal_vertex_covers(cx).masks
    return len({c.bit_count() for c in covers}) <= 1


def _leaf_of(facets: tuple[int, ...]) -> Optional[tuple[int, Optional[int]]]:
    """First (leaf-index, joint-index) of a facet list; joint is None for a
    lone facet, the whole result None when no leaf exists."""
    if len(facets) == 1:
        return 0, None
    for i, leaf in enumerate(facets):
        outside = 0
        for j, other in enumerate(facets):
            if j != i:
                outside |= other
        touching = leaf & outside
        for j, other in enumerate(facets):
            if j != i and touching & ~other == 0:
                return i, j
    return None


def find_leaf(
    cx: SimplicialComplex,
) -> Optional[tuple[VertexSet, Optional[VertexSet]]]:
    """Canonically first leaf facet with one of its joints, if any."""
    if cx.kind != ORDINARY:
        raise InputError("leaf search needs an ordinary complex")
    hit = _leaf_of(cx.facets.masks)
    if hit is None:
        return None
    i, j = hit
    leaf = VertexSet(cx.universe, cx.facets.masks[i])
    joint = None if j is None else VertexSet(cx.universe, cx.facets.masks[j])
    return leaf, joint


def _check_facet_cap(cx: SimplicialComplex, cap: int) -> tuple[int, ...]:
    if cx.kind != ORDINARY:
        raise InputError("forest/cycle checks need an ordinary complex")
    facets = cx.facets.masks
    if len(facets) > cap:
        raise CapExceeded(
            f"simplicial-forest brute force cap is {cap} facets; got {len(facets)}"
        )
    return facets


def _every_subcollection_has_leaf(
    facets: tuple[int, ...], proper_only: bool = False
) -> bool:
    n = len(facets)
    top = (1 << n) - 1
    for chosen in range(1, top + 1):
        if proper_only and chosen == top:
            continue
        # size-1 and size-2 subcollections always have a leaf
        if chosen.bit_count() <= 2:
            continue
        subset = tuple(facets[i] for i in _bits(chosen))
        if _leaf_of(subset) is None:
            return False
    return True


def is_simplicial_forest(cx: SimplicialComplex, cap: int = FOREST_FACET_CAP) -> bool:
    """Every nonempty facet subcollection has a leaf (brute force)."""
    facets = _check_facet_cap(cx, cap)
    return _every_subcollection_has_leaf(facets)


def is_connected_complex(cx: SimplicialComplex) -> bool:
    """Facet connectivity through shared vertices; degenerate kinds count
    as connected."""
    facets = cx.facets.masks
    if len(facets) <= 1:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(len(facets)):
            if j not in seen and facets[i] & facets[j]:
                seen.add(j)
                frontier.append(j)
    return len(seen) == len(facets)


def is_simplicial_tree(cx: SimplicialComplex, cap: int = FOREST_FACET_CAP) -> bool:
    return is_simplicial_forest(cx, cap) and is_connected_complex(cx)


def _strong_neighbor_order(facets: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Circular order of facets in which consecutive ones are strong
    neighbors (their intersection lies in no third facet); None when the
    strong-neighbor relation is not a single cycle."""
    n = len(facets)
    strong = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            meet = facets[i] & facets[j]
            if not any(
                meet & ~facets[k] == 0 for k in range(n) if k != i and k != j
            ):
                strong[i].add(j)
                strong[j].add(i)
    if any(len(s) != 2 for s in strong):
        return None
    order = [0]
    prev = -1
    while True:
        nxt = min(x for x in strong[order[-1]] if x != prev)
        if nxt == 0:
            break
        prev = order[-1]
        order.append(nxt)
    return tuple(order) if len(order) == n else None


def is_cycle(cx: SimplicialComplex, cap: int = FOREST_FACET_CAP) -> bool:
    """No leaf overall, yet every proper nonempty subcollection has one;
    such complexes carry a circular strong-neighbor enumeration."""
    return cycle_order(cx, cap) is not None


def cycle_order(
    cx: SimplicialComplex, cap: int = FOREST_FACET_CAP
) -> Optional[tuple[VertexSet, ...]]:
    """The circular facet enumeration of a cycle, None for non-cycles."""
    facets = _check_facet_cap(cx, cap)
    if len(facets) < 3:
        return None
    if _leaf_of(facets) is not None:
        return None
    if not _every_subcollection_has_leaf(facets, proper_only=True):
        return None
    order = _strong_neighbor_order(facets)
    if order is None:
        return None
    return tuple(VertexSet(cx.universe, facets[i]) for i in order)
