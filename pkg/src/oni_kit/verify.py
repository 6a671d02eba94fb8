"""Bundled end-to-end golden checks.

`run_verification` replays the library's reference examples (the five-set
Sperner family and its realization, the reference path and tree values, the
splitting and decomposition laws, the negative controls) and returns a
JSON-ready report.  The CLI exposes it as `verify-paper`.

Kernel entry points are called through this module's globals on purpose:
swapping one out (say `minimal_transversals`) makes the affected checks fail,
which is how the fault-injection tests confirm the suite has teeth.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .complexes import (
    VOID,
    SimplicialComplex,
    find_leaf,
    is_cycle,
    is_shedding_vertex,
    is_vertex_decomposable,
    join,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    validate_shedding_certificate,
)
from .fixtures import beg_a, p6, t_a, twin_broom
from .graphs import (
    Graph,
    HeightProfile,
    even_stable_complex,
    find_split_vertex,
    induced_odd_oni,
    is_chordal,
    is_structurally_td_unmixed,
    is_td_unmixed,
    minimal_odd_td_sets,
    minimal_td_sets,
    o_extend,
    odd_oni,
    oni,
    realize_as_oni,
    search_decomposition,
    stable_complex,
    verify_decomposition,
)
from .gvd import (
    BASE_UNIT,
    BASE_ZERO,
    Base,
    certify_tree_gvd,
    is_gvd,
    split,
    validate_certificate,
)
from .ideals import SquareFreeIdeal
from .universe import (
    BRUTE_FORCE_SUPPORT_CAP,
    SpernerFamily,
    Universe,
    brute_force_transversals,
    minimal_transversals,
)

# frozen reference values
FAMILY_TAU = (
    ("v1", "v3"),
    ("v1", "v5"),
    ("v2", "v3"),
    ("v2", "v4"),
    ("v3", "v4"),
)
P6_TD_SETS = (("0", "1", "4", "5"), ("1", "2", "4", "5"), ("1", "2", "5", "6"))
P6_ODD_TD_SETS = (("0", "4"), ("2", "4"), ("2", "6"))
P6_ONI_GENS = (("1",), ("5",), ("0", "2"), ("2", "4"), ("4", "6"))
P6_ODD_ONI_GENS = (("0", "2"), ("2", "4"), ("4", "6"))
P6_EVEN_STABLE_FACETS = (("0", "4"), ("0", "6"), ("2", "6"))
TREE_ONI_GENS = (
    ("s1",),
    ("s2",),
    ("s3",),
    ("l1", "u1"),
    ("l2", "u2"),
    ("l3", "l4", "u3"),
    ("u1", "u2"),
    ("u2", "u3"),
)
TREE_ODD_ONI_GENS = (
    ("l1", "u1"),
    ("l2", "u2"),
    ("l3", "l4", "u3"),
    ("u1", "u2"),
    ("u2", "u3"),
)


def _family_sets(family: SpernerFamily) -> set[frozenset[str]]:
    return {frozenset(member) for member in family.members}


def _render(sets: Iterable[frozenset[str]]) -> str:
    ordered = sorted(sets, key=lambda s: (len(s), tuple(sorted(s))))
    return "{" + ", ".join("{" + ",".join(sorted(s)) + "}" for s in ordered) + "}"


def _expect_family(
    got: SpernerFamily, want: Iterable[Iterable[str]], what: str
) -> Optional[str]:
    wanted = {frozenset(s) for s in want}
    actual = _family_sets(got)
    if actual != wanted:
        return f"{what}: got {_render(actual)}, wanted {_render(wanted)}"
    return None


def _ideal(labels: Iterable[str], supports: Iterable[Iterable[str]]) -> SquareFreeIdeal:
    return SquareFreeIdeal.from_supports(Universe(labels), supports)


def _star() -> Graph:
    return Graph(Universe(["a", "b", "c"]), [("a", "c"), ("b", "c")])


def _seven_cycle_edge_ideal() -> SquareFreeIdeal:
    labels = [str(i) for i in range(7)]
    return _ideal(labels, ((str(i), str((i + 1) % 7)) for i in range(7)))


def _isolated(labels: Iterable[str]) -> Graph:
    return Graph(Universe(labels), ())


# ---------------------------------------------------------------------------
# checks; None means pass, a string describes the first disagreements


def _check_dualization(oracle_cap: int) -> Optional[str]:
    family = beg_a()
    tau = minimal_transversals(family)
    problems = []
    bad = _expect_family(tau, FAMILY_TAU, "minimal transversals")
    if bad:
        problems.append(bad)
    if minimal_transversals(tau) != family:
        problems.append("double dualization drifted off the input family")
    if brute_force_transversals(family, oracle_cap) != tau:
        problems.append("brute-force oracle disagrees with the kernel")
    return "; ".join(problems) or None


def _check_realization(oracle_cap: int) -> Optional[str]:
    family = beg_a()
    graph = realize_as_oni(family)
    problems = []
    if len(graph.vertices) != 10:
        problems.append(f"expected 10 vertices, got {len(graph.vertices)}")
    td = minimal_td_sets(graph)
    if _family_sets(td) != _family_sets(family):
        problems.append(f"minimal TD-sets are not the input family: {_render(_family_sets(td))}")
    bad = _expect_family(oni(graph).minimal_generators(), FAMILY_TAU, "neighborhood ideal generators")
    if bad:
        problems.append(bad)
    if not is_chordal(graph):
        problems.append("realized graph is not chordal")
    return "; ".join(problems) or None


def _check_path_values(oracle_cap: int) -> Optional[str]:
    path = p6()
    problems = []
    for got, want, what in (
        (minimal_td_sets(path), P6_TD_SETS, "minimal TD-sets"),
        (minimal_odd_td_sets(path), P6_ODD_TD_SETS, "minimal odd TD-sets"),
        (oni(path).minimal_generators(), P6_ONI_GENS, "neighborhood ideal"),
        (odd_oni(path).minimal_generators(), P6_ODD_ONI_GENS, "odd neighborhood ideal"),
        (even_stable_complex(path).facets, P6_EVEN_STABLE_FACETS, "even-stable facets"),
    ):
        bad = _expect_family(got, want, what)
        if bad:
            problems.append(bad)
    return "; ".join(problems) or None


def _check_reference_tree(oracle_cap: int) -> Optional[str]:
    tree = t_a()
    problems = []
    bad = _expect_family(oni(tree).minimal_generators(), TREE_ONI_GENS, "neighborhood ideal")
    if bad:
        problems.append(bad)
    bad = _expect_family(
        odd_oni(tree).minimal_generators(), TREE_ODD_ONI_GENS, "odd neighborhood ideal"
    )
    if bad:
        problems.append(bad)
    if not is_td_unmixed(tree):
        problems.append("reference tree is not TD-unmixed")
    if not is_structurally_td_unmixed(tree):
        problems.append("reference tree fails the structural test")
    return "; ".join(problems) or None


def _check_splitting(oracle_cap: int) -> Optional[str]:
    problems = []
    for graph, name in ((p6(), "path"), (t_a(), "tree")):
        ideal = odd_oni(graph)
        u = find_split_vertex(graph)
        c_part, n_part = split(ideal, u)
        want_c = induced_odd_oni(graph.delete_vertices([u]), graph)
        want_n = odd_oni(graph.delete_closed_neighborhood(u))
        if c_part != want_c:
            problems.append(f"{name}: C branch at {u} is {c_part!r}, wanted {want_c!r}")
        if n_part != want_n:
            problems.append(f"{name}: N branch at {u} is {n_part!r}, wanted {want_n!r}")
    broom = twin_broom()
    c_part, n_part = split(odd_oni(broom), "u")
    bad = _expect_family(
        c_part.minimal_generators(), (("up",), ("l1", "l2")), "broom C branch"
    )
    if bad:
        problems.append(bad)
    bad = _expect_family(
        n_part.minimal_generators(), (("lp1", "lp2", "up"),), "broom N branch"
    )
    if bad:
        problems.append(bad)
    principal = _ideal(["y"], [["y"]])
    c_part, n_part = split(principal, "y")
    if not c_part.is_unit or not n_part.is_zero:
        problems.append("splitting a principal variable ideal should give (unit, zero)")
    return "; ".join(problems) or None


def _check_intersection(oracle_cap: int) -> Optional[str]:
    labels = ["0", "2", "4", "6"]
    left = _ideal(labels, [["2"], ["6"]])
    right = _ideal(labels, [["0", "2"], ["4"]])
    if left.intersect(right) != odd_oni(p6()):
        return "C ∩ (N + <y>) does not reassemble the odd neighborhood ideal"
    return None


def _check_induced_ideals(oracle_cap: int) -> Optional[str]:
    tree = t_a()
    problems = []
    sub = tree.delete_vertices(["u1"])
    bad = _expect_family(
        induced_odd_oni(sub, tree).minimal_generators(),
        (("l1",), ("u2",), ("l3", "l4", "u3")),
        "vertex-deleted ideal",
    )
    if bad:
        problems.append(bad)
    closed = tree.delete_closed_neighborhood("u1")
    bad = _expect_family(
        induced_odd_oni(closed, tree).minimal_generators(),
        (("l2", "u2"), ("l3", "l4", "u3"), ("u2", "u3")),
        "neighborhood-deleted ideal",
    )
    if bad:
        problems.append(bad)
    odd = set(HeightProfile(tree).v_odd.members)
    if set(HeightProfile(tree.delete_vertices(["r1"])).v_odd.members) != odd - {"r1"}:
        problems.append("odd stratum after deleting a top vertex drifted")
    if set(HeightProfile(closed).v_odd.members) != odd - {"s1", "r1"}:
        problems.append("odd stratum after deleting a closed neighborhood drifted")
    return "; ".join(problems) or None


def _check_decompositions(oracle_cap: int) -> Optional[str]:
    problems = []
    cases = (
        ("path", p6(), ("3",)),
        ("tree", t_a(), ("r1", "r2")),
    )
    for name, tree, tops in cases:
        piece1 = tree
        piece2 = _isolated(tops)
        if not verify_decomposition(tree, piece1, piece2):
            problems.append(f"{name}: canonical decomposition rejected")
            continue
        total = odd_oni(piece1).extended_to(tree.universe).sum(
            odd_oni(piece2).extended_to(tree.universe)
        )
        ones = HeightProfile(tree).stratum(1).members
        stems = SquareFreeIdeal.from_supports(tree.universe, ([v] for v in ones))
        if total.sum(stems) != oni(tree):
            problems.append(f"{name}: three-term ideal sum drifted")
        joined = join(even_stable_complex(piece1), even_stable_complex(piece2))
        if joined.extended_to(tree.universe) != stable_complex(tree):
            problems.append(f"{name}: stable complex is not the join of the pieces")
        ones_set = set(ones)
        rebuilt = {
            frozenset(a) | frozenset(b) | ones_set
            for a in minimal_odd_td_sets(piece1).members
            for b in minimal_odd_td_sets(piece2).members
        }
        if rebuilt != _family_sets(minimal_td_sets(tree)):
            problems.append(f"{name}: TD-sets are not the piecewise products")
        found = search_decomposition(tree)
        if found is None or not verify_decomposition(tree, found.t1, found.t2):
            problems.append(f"{name}: search failed to produce a valid decomposition")
    if verify_decomposition(p6(), p6(), _isolated(())):
        problems.append("empty second piece was accepted for the path")
    return "; ".join(problems) or None


def _check_split_vertices(oracle_cap: int) -> Optional[str]:
    problems = []
    if find_split_vertex(p6()) != "2":
        problems.append(f"path split vertex: {find_split_vertex(p6())!r}")
    if find_split_vertex(t_a()) != "u1":
        problems.append(f"tree split vertex: {find_split_vertex(t_a())!r}")
    return "; ".join(problems) or None


def _check_extensions(oracle_cap: int) -> Optional[str]:
    base = p6()
    base_edges = set(base.edges)
    cases = (
        ("1", {("1", "p1_0")}),
        (
            "4",
            {("p1_0", "p1_1"), ("p1_1", "p1_2"), ("p1_2", "p1_3"), ("4", "p1_3")},
        ),
        ("3", {("p1_0", "p1_1"), ("p1_1", "p1_2"), ("3", "p1_2")}),
    )
    problems = []
    for v, added in cases:
        grown = o_extend(base, v)
        if set(grown.edges) != base_edges | added:
            problems.append(f"extension at {v!r} grew the wrong edges")
            continue
        if not HeightProfile(grown).balanced:
            problems.append(f"extension at {v!r} broke balance")
        elif not is_structurally_td_unmixed(grown):
            problems.append(f"extension at {v!r} broke structural unmixedness")
    return "; ".join(problems) or None


def _check_gvd_decisions(oracle_cap: int) -> Optional[str]:
    problems = []
    ideal = odd_oni(p6())
    ok, cert = is_gvd(ideal)
    if not ok or cert is None or not validate_certificate(ideal, cert):
        problems.append("path ideal should be decomposable with a replayable certificate")
    ok, cert = is_gvd(SquareFreeIdeal.unit(Universe(["x"])))
    if (ok, cert) != (True, Base(BASE_UNIT)):
        problems.append("unit ideal decision drifted")
    ok, cert = is_gvd(SquareFreeIdeal.zero(Universe(["x"])))
    if (ok, cert) != (True, Base(BASE_ZERO)):
        problems.append("zero ideal decision drifted")
    ring = _seven_cycle_edge_ideal()
    if not ring.is_unmixed():
        problems.append("seven-cycle edge ideal should be unmixed")
    ok, _ = is_gvd(ring)
    if ok:
        problems.append("seven-cycle edge ideal should not be decomposable")
    complex_ = stanley_reisner_complex(ring)
    if not complex_.is_pure():
        problems.append("seven-cycle independence complex should be pure")
    vd, _ = is_vertex_decomposable(complex_)
    if vd:
        problems.append("seven-cycle independence complex should not be vertex decomposable")
    return "; ".join(problems) or None


def _check_certificates(oracle_cap: int) -> Optional[str]:
    double_star = Graph(
        Universe(["a", "b", "c", "d", "e", "f"]),
        [("a", "c"), ("b", "c"), ("d", "f"), ("e", "f")],
    )
    problems = []
    for graph, name in (
        (p6(), "path"),
        (t_a(), "tree"),
        (twin_broom(), "broom"),
        (double_star, "forest"),
    ):
        cert = certify_tree_gvd(graph)
        if not validate_certificate(odd_oni(graph), cert):
            problems.append(f"{name}: structural certificate does not replay")
    return "; ".join(problems) or None


def _check_stable_complexes(oracle_cap: int) -> Optional[str]:
    path = p6()
    problems = []
    if stanley_reisner_ideal(stable_complex(path)) != oni(path):
        problems.append("stable complex and neighborhood ideal disagree")
    if stanley_reisner_ideal(even_stable_complex(path)) != odd_oni(path):
        problems.append("even-stable complex and odd neighborhood ideal disagree")
    bad = _expect_family(
        even_stable_complex(_star()).facets, (("a",), ("b",)), "star even-stable facets"
    )
    if bad:
        problems.append(bad)
    lonely = _isolated(("w",))
    if stable_complex(lonely).kind != VOID:
        problems.append("a dominated-by-nobody vertex should give the void complex")
    return "; ".join(problems) or None


def _check_leaf_order(oracle_cap: int) -> Optional[str]:
    universe = Universe(["a", "b", "c", "d", "e", "f"])
    chain = SimplicialComplex.from_facets(
        universe, [("a", "b", "c"), ("c", "d"), ("d", "e", "f")]
    )
    problems = []
    found = find_leaf(chain)
    if found is None:
        problems.append("three-facet chain should have a leaf")
    else:
        leaf, joint = found
        if leaf.members != ("a", "b", "c") or joint is None or joint.members != ("c", "d"):
            problems.append(f"leaf search returned {found!r}")
    triangle = SimplicialComplex.from_facets(
        Universe(["a", "b", "c"]), [("a", "b"), ("b", "c"), ("a", "c")]
    )
    if find_leaf(triangle) is not None:
        problems.append("triangle boundary should have no leaf")
    if not is_cycle(triangle):
        problems.append("triangle boundary should be a cycle")
    return "; ".join(problems) or None


def _check_shedding(oracle_cap: int) -> Optional[str]:
    cx = even_stable_complex(p6())
    problems = []
    if not is_shedding_vertex(cx, "4"):
        problems.append("vertex 4 should shed in the even-stable path complex")
    two_edges = SimplicialComplex.from_facets(
        Universe(["a", "b", "c", "d"]), [("a", "b"), ("c", "d")]
    )
    if is_shedding_vertex(two_edges, "a"):
        problems.append("no vertex of two disjoint edges sheds")
    one_edge = SimplicialComplex.from_facets(Universe(["a", "b"]), [("a", "b")])
    if is_shedding_vertex(one_edge, "a"):
        problems.append("an edge endpoint never sheds")
    ok, cert = is_vertex_decomposable(cx)
    if not ok or cert is None or not validate_shedding_certificate(cx, cert):
        problems.append("even-stable path complex should be vertex decomposable")
    return "; ".join(problems) or None


def _check_chordality(oracle_cap: int) -> Optional[str]:
    square = Graph(
        Universe(["0", "1", "2", "3"]),
        [("0", "1"), ("1", "2"), ("2", "3"), ("0", "3")],
    )
    problems = []
    if is_chordal(square):
        problems.append("the 4-cycle is not chordal")
    labels = ["a", "b", "c", "d", "e"]
    complete = Graph(
        Universe(labels),
        ((x, y) for i, x in enumerate(labels) for y in labels[i + 1 :]),
    )
    if not is_chordal(complete):
        problems.append("complete graphs are chordal")
    if not is_chordal(p6()):
        problems.append("trees are chordal")
    return "; ".join(problems) or None


_CHECKS: tuple[tuple[str, Callable[[int], Optional[str]]], ...] = (
    ("dualization-quintet", _check_dualization),
    ("family-realization", _check_realization),
    ("path-reference-values", _check_path_values),
    ("reference-tree-values", _check_reference_tree),
    ("splitting-steps", _check_splitting),
    ("intersection-identity", _check_intersection),
    ("induced-subtree-ideals", _check_induced_ideals),
    ("decomposition-laws", _check_decompositions),
    ("split-vertex-choice", _check_split_vertices),
    ("height-extensions", _check_extensions),
    ("gvd-decisions", _check_gvd_decisions),
    ("tree-certificates", _check_certificates),
    ("stable-complexes", _check_stable_complexes),
    ("leaf-and-cycle-order", _check_leaf_order),
    ("shedding-examples", _check_shedding),
    ("chordality-controls", _check_chordality),
)


def run_verification(oracle_cap: int = BRUTE_FORCE_SUPPORT_CAP) -> dict:
    """Run every bundled check; the report is stable across runs."""
    checks = []
    failed = 0
    for name, fn in _CHECKS:
        try:
            detail = fn(oracle_cap)
        except Exception as exc:  # a crashed check is a failed check
            detail = f"raised {type(exc).__name__}: {exc}"
        entry: dict = {"id": name, "ok": detail is None}
        if detail is not None:
            entry["detail"] = detail
            failed += 1
        checks.append(entry)
    return {
        "checks": checks,
        "passed": len(checks) - failed,
        "failed": failed,
        "ok": failed == 0,
    }
