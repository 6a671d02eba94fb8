"""Geometric vertex decomposition of square-free monomial ideals.

The one-variable split, validity of the resulting decomposition, the
recursive decision procedure with certificates, and a polynomial-size
certifier for neighborhood ideals of totally-domination-unmixed balanced
forests that never searches.

Recursion works over shrinking universes (the variable is dropped from
the ring) rather than quotient rings; for square-free monomial ideals
the two views agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InputError
from .graphs import (
    Graph,
    _components_structurally_unmixed,
    find_split_vertex,
    heights,
)
from .ideals import SquareFreeIdeal
from .universe import Universe, _bits

BASE_UNIT = "unit"
BASE_ZERO = "zero"
BASE_VARIABLES = "vars"

_BASE_KINDS = (BASE_UNIT, BASE_ZERO, BASE_VARIABLES)


@dataclass(frozen=True)
class Base:
    kind: str


@dataclass(frozen=True)
class Split:
    variable: str
    c_branch: "GvdCertificate"
    n_branch: "GvdCertificate"


GvdCertificate = Union[Base, Split]


def certificate_to_json_obj(cert: GvdCertificate) -> dict:
    if isinstance(cert, Base):
        return {"base": cert.kind}
    return {
        "split": {
            "y": cert.variable,
            "C": certificate_to_json_obj(cert.c_branch),
            "N": certificate_to_json_obj(cert.n_branch),
        }
    }


def certificate_from_json_obj(obj: object) -> GvdCertificate:
    if isinstance(obj, dict) and set(obj) == {"base"}:
        kind = obj["base"]
        if kind not in _BASE_KINDS:
            raise InputError(f"unknown certificate base kind {kind!r}")
        return Base(kind)
    if isinstance(obj, dict) and set(obj) == {"split"}:
        inner = obj["split"]
        if not isinstance(inner, dict) or set(inner) != {"y", "C", "N"}:
            raise InputError('certificate "split" needs keys y, C, N')
        if not isinstance(inner["y"], str):
            raise InputError("split variable must be a string label")
        return Split(
            inner["y"],
            certificate_from_json_obj(inner["C"]),
            certificate_from_json_obj(inner["N"]),
        )
    raise InputError('certificate JSON must be {"base": …} or {"split": …}')


def split(ideal: SquareFreeIdeal, y: str) -> tuple[SquareFreeIdeal, SquareFreeIdeal]:
    """One-variable split: N keeps the generators y does not divide, C
    adjoins the y-divided ones; both land in the universe without y."""
    u = ideal.universe
    if y not in u:
        raise InputError(f"variable {y!r} not in the ideal's universe")
    ybit = 1 << u.position(y)
    rest = Universe(lab for lab in u.labels if lab != y)
    c_supports = []
    n_supports = []
    for m in ideal.generators.masks:
        stripped = u.labels_of(m & ~ybit)
        c_supports.append(stripped)
        if not m & ybit:
            n_supports.append(stripped)
    return (
        SquareFreeIdeal.from_supports(rest, c_supports),
        SquareFreeIdeal.from_supports(rest, n_supports),
    )


def is_valid_geometric_decomposition(ideal: SquareFreeIdeal, y: str) -> bool:
    """Does intersecting C with N + (y) reproduce the ideal over the full
    universe?"""
    c_part, n_part = split(ideal, y)
    u = ideal.universe
    recombined = c_part.extended_to(u).intersect(
        n_part.extended_to(u).sum(SquareFreeIdeal.from_supports(u, [[y]]))
    )
    return recombined == ideal


def _memo_key(ideal: SquareFreeIdeal) -> tuple:
    return (ideal.universe.labels, ideal.generators.masks)


def is_gvd(ideal: SquareFreeIdeal) -> tuple[bool, Optional[GvdCertificate]]:
    """Decide geometric vertex decomposability, with a witness.

    Bases come first (unit, zero, generated by variables), then the
    unmixedness gate, then the canonical-order variable loop; the first
    witness found is the one reported.  Failures are memoized on the
    canonical form so isomorphic subproblems reached along different
    split orders are shared within the call.
    """
    memo: dict[tuple, Optional[GvdCertificate]] = {}

    def search(current: SquareFreeIdeal) -> Optional[GvdCertificate]:
        if current.is_unit:
            return Base(BASE_UNIT)
        if current.is_zero:
            return Base(BASE_ZERO)
        if current.is_variable_generated:
            return Base(BASE_VARIABLES)
        if not current.is_unmixed():
            return None
        key = _memo_key(current)
        if key in memo:
            return memo[key]
        found: Optional[GvdCertificate] = None
        for y in current.universe.labels:
            if not is_valid_geometric_decomposition(current, y):
                continue
            c_part, n_part = split(current, y)
            c_cert = search(c_part)
            if c_cert is None:
                continue
            n_cert = search(n_part)
            if n_cert is None:
                continue
            found = Split(y, c_cert, n_cert)
            break
        memo[key] = found
        return found

    cert = search(ideal)
    return cert is not None, cert


def validate_certificate(ideal: SquareFreeIdeal, cert: GvdCertificate) -> bool:
    """Replay the decomposition checks the certificate records."""
    if isinstance(cert, Base):
        if cert.kind == BASE_UNIT:
            return ideal.is_unit
        if cert.kind == BASE_ZERO:
            return ideal.is_zero
        if cert.kind == BASE_VARIABLES:
            return not ideal.is_unit and ideal.is_variable_generated
        return False
    if cert.variable not in ideal.universe:
        return False
    if ideal.is_unit or not ideal.is_unmixed():
        return False
    if not is_valid_geometric_decomposition(ideal, cert.variable):
        return False
    c_part, n_part = split(ideal, cert.variable)
    return validate_certificate(c_part, cert.c_branch) and validate_certificate(
        n_part, cert.n_branch
    )


def _vars_or_zero(ideal: SquareFreeIdeal) -> GvdCertificate:
    return Base(BASE_ZERO) if ideal.is_zero else Base(BASE_VARIABLES)


def _merge_certs(
    a: SquareFreeIdeal,
    ca: GvdCertificate,
    b: SquareFreeIdeal,
    cb: GvdCertificate,
) -> GvdCertificate:
    """Certificate for a sum of ideals on disjoint variable sets.

    Splits of one summand commute with adding the other, so a Split node
    descends with the untouched summand carried along; variable bases
    peel one generator at a time (its C is the unit ideal)."""
    if isinstance(ca, Base) and ca.kind == BASE_ZERO:
        return cb
    if isinstance(cb, Base) and cb.kind == BASE_ZERO:
        return ca
    if isinstance(ca, Base) and ca.kind == BASE_UNIT:
        return Base(BASE_UNIT)
    if isinstance(cb, Base) and cb.kind == BASE_UNIT:
        return Base(BASE_UNIT)
    if isinstance(ca, Base) and isinstance(cb, Base):
        return Base(BASE_VARIABLES)
    if isinstance(ca, Base):
        y = a.universe.labels[next(_bits(a.generators.masks[0]))]
        remainder = split(a, y)[1]
        return Split(y, Base(BASE_UNIT), _merge_certs(remainder, _vars_or_zero(remainder), b, cb))
    if isinstance(cb, Base):
        y = b.universe.labels[next(_bits(b.generators.masks[0]))]
        remainder = split(b, y)[1]
        return Split(y, Base(BASE_UNIT), _merge_certs(a, ca, remainder, _vars_or_zero(remainder)))
    c_part, n_part = split(a, ca.variable)
    return Split(
        ca.variable,
        _merge_certs(c_part, ca.c_branch, b, cb),
        _merge_certs(n_part, ca.n_branch, b, cb),
    )


def _merge(
    a: SquareFreeIdeal,
    ca: GvdCertificate,
    b: SquareFreeIdeal,
    cb: GvdCertificate,
) -> tuple[SquareFreeIdeal, GvdCertificate]:
    combined = Universe(a.universe.labels + b.universe.labels)
    total = a.extended_to(combined).sum(b.extended_to(combined))
    return total, _merge_certs(a, ca, b, cb)


def _chain_certificate(ideal: SquareFreeIdeal) -> GvdCertificate:
    """Certificate for a single nonempty square-free monomial: peel the
    support one variable at a time."""
    mask = ideal.generators.masks[0]
    if mask.bit_count() == 1:
        return Base(BASE_VARIABLES)
    y = ideal.universe.labels[next(_bits(mask))]
    shorter = split(ideal, y)[0]
    return Split(y, _chain_certificate(shorter), Base(BASE_ZERO))


def _component_ideal(piece: Graph, odd: frozenset[str]) -> SquareFreeIdeal:
    even = Universe(v for v in piece.vertices if v not in odd)
    supports = [
        piece.neighbors(v).members for v in piece.vertices if v in odd
    ]
    return SquareFreeIdeal.from_supports(even, supports)


def _certify_piece(
    piece: Graph, odd: frozenset[str], memo: dict
) -> tuple[SquareFreeIdeal, GvdCertificate]:
    total = SquareFreeIdeal.zero(Universe(()))
    cert: GvdCertificate = Base(BASE_ZERO)
    for comp in piece.components():
        comp_ideal, comp_cert = _certify_component(piece.induced(comp), odd, memo)
        total, cert = _merge(total, cert, comp_ideal, comp_cert)
    return total, cert


def _certify_component(
    comp: Graph, odd: frozenset[str], memo: dict
) -> tuple[SquareFreeIdeal, GvdCertificate]:
    ideal = _component_ideal(comp, odd)
    key = _memo_key(ideal)
    if key in memo:
        return ideal, memo[key]
    masks = ideal.generators.masks
    if ideal.is_zero:
        cert: GvdCertificate = Base(BASE_ZERO)
    elif len(masks) == 1:
        cert = _chain_certificate(ideal)
    else:
        singleton = next((m for m in masks if m.bit_count() == 1), None)
        if singleton is not None:
            # A stranded branch vertex kept a lone neighbor: its variable
            # generates, so C is unit and N drops the closed neighborhood.
            y = ideal.universe.labels[next(_bits(singleton))]
            _, rest_cert = _certify_piece(comp.delete_closed_neighborhood(y), odd, memo)
            cert = Split(y, Base(BASE_UNIT), rest_cert)
        else:
            u = find_split_vertex(comp)
            _, c_cert = _certify_piece(comp.delete_vertices([u]), odd, memo)
            _, n_cert = _certify_piece(comp.delete_closed_neighborhood(u), odd, memo)
            cert = Split(u, c_cert, n_cert)
    memo[key] = cert
    return ideal, cert


def certify_tree_gvd(forest: Graph) -> GvdCertificate:
    """Structural certificate for the odd-vertex neighborhood ideal of a
    TD-unmixed balanced forest; no search, recursion mirrors deleting a
    degree-2 branch vertex or its closed neighborhood."""
    profile = heights(forest)
    if not profile.balanced or not _components_structurally_unmixed(forest, profile):
        raise InputError(
            "certificate construction needs a TD-unmixed balanced forest"
        )
    odd = frozenset(profile.v_odd.members)
    memo: dict = {}
    _, cert = _certify_piece(forest, odd, memo)
    return cert
