"""Square-free monomial ideals with canonical minimal generators.

An ideal is stored as the antichain of its minimal generating supports.
Two degenerate cases get explicit representations: the zero ideal has no
generators at all, the unit ideal has the single generator 1 (empty
support).  Both round-trip through JSON with explicit flags.
"""

from __future__ import annotations

from typing import Iterable

from .errors import InputError
from .universe import (
    SpernerFamily,
    Universe,
    minimal_masks,
    minimal_transversals,
)


class SquareFreeIdeal:
    __slots__ = ("universe", "generators")

    def __init__(self, generators: SpernerFamily):
        self.universe = generators.universe
        self.generators = generators

    @classmethod
    def from_supports(
        cls, universe: Universe, supports: Iterable[Iterable[str]]
    ) -> "SquareFreeIdeal":
        """Ideal generated by the given supports; minimalized on the way in."""
        masks = minimal_masks(universe.mask_of(s) for s in supports)
        return cls(SpernerFamily(universe, masks))

    @classmethod
    def zero(cls, universe: Universe) -> "SquareFreeIdeal":
        return cls(SpernerFamily(universe, ()))

    @classmethod
    def unit(cls, universe: Universe) -> "SquareFreeIdeal":
        return cls(SpernerFamily(universe, (0,)))

    @property
    def is_zero(self) -> bool:
        return len(self.generators) == 0

    @property
    def is_unit(self) -> bool:
        return self.generators.masks == (0,)

    @property
    def is_variable_generated(self) -> bool:
        """True when every minimal generator is a single variable."""
        return all(m.bit_count() == 1 for m in self.generators.masks)

    def minimal_generators(self) -> SpernerFamily:
        return self.generators

    def support(self) -> int:
        mask = 0
        for m in self.generators.masks:
            mask |= m
        return mask

    def contains_monomial(self, monomial: Iterable[str]) -> bool:
        """Membership of a square-free monomial, given by its support."""
        mono = self.universe.mask_of(monomial)
        return any(g & mono == g for g in self.generators.masks)

    def sum(self, other: "SquareFreeIdeal") -> "SquareFreeIdeal":
        self._check(other)
        masks = minimal_masks(self.generators.masks + other.generators.masks)
        return SquareFreeIdeal(SpernerFamily(self.universe, masks))

    def intersect(self, other: "SquareFreeIdeal") -> "SquareFreeIdeal":
        self._check(other)
        masks = minimal_masks(
            a | b for a in self.generators.masks for b in other.generators.masks
        )
        return SquareFreeIdeal(SpernerFamily(self.universe, masks))

    def minimal_primes(self) -> SpernerFamily:
        """Supports of the minimal primes: the minimal transversals of the
        generating antichain.  The zero ideal reports no support-representable
        primes (check is_zero alongside); the unit ideal has none at all."""
        if self.is_unit:
            raise InputError("unit ideal has no primes")
        if self.is_zero:
            return SpernerFamily(self.universe, ())
        return minimal_transversals(self.generators)

    def is_unmixed(self) -> bool:
        primes = self.minimal_primes().masks
        if not primes:
            return True
        first = primes[0].bit_count()
        return all(p.bit_count() == first for p in primes)

    def extended_to(self, universe: Universe) -> "SquareFreeIdeal":
        """The same generators read over a larger universe."""
        for lab in self.universe.labels:
            if lab not in universe:
                raise InputError(f"target universe is missing label {lab!r}")
        sets = self.generators.members
        return SquareFreeIdeal(
            SpernerFamily(universe, (universe.mask_of(s) for s in sets))
        )

    def _check(self, other: "SquareFreeIdeal") -> None:
        if self.universe != other.universe:
            raise InputError("ideals live over different universes")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SquareFreeIdeal)
            and self.universe == other.universe
            and self.generators.masks == other.generators.masks
        )

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.generators.masks))

    def __repr__(self) -> str:
        if self.is_zero:
            return "SquareFreeIdeal(0)"
        if self.is_unit:
            return "SquareFreeIdeal(1)"
        gens = ", ".join("".join(s) for s in self.generators.members)
        return f"SquareFreeIdeal(<{gens}>)"

    def to_json_obj(self) -> dict:
        return {
            "universe": list(self.universe.labels),
            "generators": [list(s) for s in self.generators.members],
            "zero": self.is_zero,
            "unit": self.is_unit,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SquareFreeIdeal":
        if not isinstance(obj, dict) or "universe" not in obj or "generators" not in obj:
            raise InputError('ideal JSON needs "universe" and "generators" keys')
        universe = Universe(obj["universe"])
        ideal = cls.from_supports(universe, obj["generators"])
        for flag, actual in (("zero", ideal.is_zero), ("unit", ideal.is_unit)):
            if flag in obj and bool(obj[flag]) != actual:
                raise InputError(f'ideal JSON flag "{flag}" contradicts the generators')
        return ideal
