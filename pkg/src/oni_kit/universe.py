"""Labelled ground sets, bitmask vertex sets, and Sperner families.

Every structure in this package lives over a Universe: a fixed tuple of
string labels in lexicographic order.  Sets of labels are stored as int
bitmasks over label positions, so subset tests and boolean operations are
single machine operations and every iteration order is deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import CapExceeded, InputError

BRUTE_FORCE_SUPPORT_CAP = 20


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Universe:
    """An ordered ground set of distinct string labels (lexicographic)."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        ordered = tuple(sorted(labels))
        for lab in ordered:
            if not isinstance(lab, str) or not lab:
                raise InputError(f"labels must be non-empty strings, got {lab!r}")
        if len(set(ordered)) != len(ordered):
            dupes = sorted({x for x in ordered if ordered.count(x) > 1})
            raise InputError(f"duplicate labels: {', '.join(dupes)}")
        self.labels = ordered
        self._index = {lab: i for i, lab in enumerate(ordered)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Universe({list(self.labels)!r})"

    def position(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown label {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.position(lab)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in _bits(mask))

    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def set_of(self, labels: Iterable[str]) -> "VertexSet":
        return VertexSet(self, self.mask_of(labels))

    def restricted_to(self, labels: Iterable[str]) -> "Universe":
        """Sub-universe on the given labels (each must already belong)."""
        keep = list(labels)
        for lab in keep:
            self.position(lab)
        return Universe(keep)


class VertexSet:
    """An immutable subset of a Universe, stored as a bitmask."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: Universe, mask: int):
        if mask < 0 or mask >> len(universe):
            raise InputError("mask has bits outside the universe")
        self.universe = universe
        self.mask = mask

    @property
    def members(self) -> tuple[str, ...]:
        return self.universe.labels_of(self.mask)

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: object) -> bool:
        return isinstance(label, str) and label in self.universe and bool(
            self.mask >> self.universe.position(label) & 1
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.universe == other.universe
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(self.members)}}})"

    def _check(self, other: "VertexSet") -> None:
        if self.universe != other.universe:
            raise InputError("vertex sets live over different universes")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.mask & ~other.mask)

    def is_subset_of(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.universe, self.universe.full_mask() & ~self.mask)


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical family order: by size, then lexicographically by positions."""
    return (mask.bit_count(), tuple(_bits(mask)))


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members, deduplicated, in canonical order."""
    out: list[int] = []
    for m in sorted(set(masks), key=sort_key):
        if not any(r & m == r for r in out):
            out.append(m)
    return tuple(out)


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members, deduplicated, in canonical order."""
    pool = sorted(set(masks), key=sort_key, reverse=True)
    out: list[int] = []
    for m in pool:
        if not any(r & m == m for r in out):
            out.append(m)
    return tuple(sorted(out, key=sort_key))


class SpernerFamily:
    """An antichain of subsets of a Universe, in canonical order.

    The constructor rejects families with comparable members; use
    :func:`minimize_family` to collapse an arbitrary collection first.
    """

    __slots__ = ("universe", "masks")

    def __init__(self, universe: Universe, masks: Iterable[int]):
        canon = tuple(sorted(set(masks), key=sort_key))
        for i, a in enumerate(canon):
            for b in canon[i + 1 :]:
                if a & b == a:
                    raise InputError(
                        "family is not an antichain: "
                        f"{{{', '.join(universe.labels_of(a))}}} is contained in "
                        f"{{{', '.join(universe.labels_of(b))}}}"
                    )
        self.universe = universe
        self.masks = canon

    @classmethod
    def from_sets(
        cls, universe: Universe, sets: Iterable[Iterable[str]]
    ) -> "SpernerFamily":
        return cls(universe, (universe.mask_of(s) for s in sets))

    @property
    def sets(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.universe, m) for m in self.masks)

    @property
    def members(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.universe.labels_of(m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SpernerFamily)
            and self.universe == other.universe
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.masks))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ", ".join(s) + "}" for s in self.members)
        return f"SpernerFamily([{inner}])"

    def to_json_obj(self) -> dict:
        return {
            "universe": list(self.universe.labels),
            "sets": [list(s) for s in self.members],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SpernerFamily":
        if not isinstance(obj, dict) or "universe" not in obj or "sets" not in obj:
            raise InputError('family JSON needs "universe" and "sets" keys')
        universe = Universe(obj["universe"])
        return cls.from_sets(universe, obj["sets"])


def minimize_family(universe: Universe, sets: Iterable[Iterable[str]]) -> SpernerFamily:
    """Collapse an arbitrary collection to its inclusion-minimal antichain."""
    return SpernerFamily(universe, minimal_masks(universe.mask_of(s) for s in sets))


def is_sperner(universe: Universe, sets: Iterable[Iterable[str]]) -> bool:
    masks = [universe.mask_of(s) for s in sets]
    return len(set(masks)) == len(masks) and all(
        a & b != a and a & b != b
        for i, a in enumerate(masks)
        for b in masks[i + 1 :]
    )


def minimal_transversals(family: SpernerFamily) -> SpernerFamily:
    """All inclusion-minimal transversals of the family, over the same universe.

    Incremental construction: fold members in canonical order, keeping the
    minimal transversals of the prefix.  A transversal of the prefix either
    already meets the next member or must be extended by one of its elements.

    Conventions: a family containing the empty set has no transversals at
    all (empty result); the empty family has exactly the empty transversal.
    """
    if any(m == 0 for m in family.masks):
        return SpernerFamily(family.universe, ())
    partial: tuple[int, ...] = (0,)
    for a in family.masks:
        staged: list[int] = []
        for t in partial:
            if t & a:
                staged.append(t)
            else:
                staged.extend(t | (1 << e) for e in _bits(a))
        partial = minimal_masks(staged)
    return SpernerFamily(family.universe, partial)


def brute_force_transversals(
    family: SpernerFamily, cap: int = BRUTE_FORCE_SUPPORT_CAP
) -> SpernerFamily:
    """Minimal transversals by subset enumeration over the family's support.

    Independent of the incremental path above, deliberately: this is the
    oracle the fast kernel is checked against.  Limited to `cap` support
    elements (default 20).
    """
    support = 0
    for m in family.masks:
        support |= m
    s = support.bit_count()
    if s > cap:
        raise CapExceeded(
            f"brute-force transversal cap is {cap} support elements; got {s}"
        )
    if any(m == 0 for m in family.masks):
        return SpernerFamily(family.universe, ())
    positions = list(_bits(support))
    k = len(family.masks)
    full = (1 << k) - 1
    # hit[j] = bitmask over family members containing support element j
    hit = [
        sum(1 << i for i, m in enumerate(family.masks) if m >> p & 1)
        for p in positions
    ]
    reach = [0] * (1 << s)
    for sub in range(1, 1 << s):
        low = sub & -sub
        reach[sub] = reach[sub ^ low] | hit[low.bit_length() - 1]
    found: list[int] = []
    for sub in range(1 << s):
        if reach[sub] != full:
            continue
        if all(reach[sub ^ (1 << j)] != full for j in _bits(sub)):
            found.append(sum(1 << positions[j] for j in _bits(sub)))
    return SpernerFamily(family.universe, found)
