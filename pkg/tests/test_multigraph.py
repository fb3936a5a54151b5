"""Multigraph container, labels, biregular classification, MGF and DOT."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchex import (
    BiregularClassification,
    Copy,
    Hub,
    MGFParseError,
    Multigraph,
    Pair,
    Plain,
    build_B,
    derive_item_seed,
    export_dot,
    parse_mgf,
    serialize_mgf,
)

from conftest import (
    complete_graph,
    cycle_graph,
    path_graph,
    random_multigraph,
    star_graph,
)

# ---------------------------------------------------------------- labels


def test_label_str_forms():
    assert str(Hub("x")) == "x"
    assert str(Pair(1, 3)) == "u(1,3)"
    assert str(Copy(2, 5)) == "v2^(5)"
    assert str(Plain(7)) == "7"


def test_label_validation():
    with pytest.raises(ValueError):
        Hub("w")
    with pytest.raises(ValueError):
        Pair(2, 2)
    with pytest.raises(ValueError):
        Pair(3, 1)
    with pytest.raises(ValueError):
        Pair(0, 1)
    with pytest.raises(ValueError):
        Copy(0, 1)
    with pytest.raises(ValueError):
        Copy(1, 0)


def test_set_label_injective_and_reassignable():
    g = Multigraph(3)
    g.set_label(0, Hub("x"))
    with pytest.raises(ValueError):
        g.set_label(1, Hub("x"))
    g.set_label(0, Hub("x"))  # same vertex, same label: fine
    g.set_label(0, Hub("y"))  # relabel frees the old value
    g.set_label(1, Hub("x"))
    assert g.label(0) == Hub("y")
    assert g.vertex_with_label(Hub("x")) == 1


def test_plain_labels_are_implicit():
    g = Multigraph(2)
    g.set_label(0, Plain(0))  # no-op
    assert g.labeled_vertices() == []
    assert g.label(1) == Plain(1)
    assert g.vertex_with_label(Plain(1)) == 1
    with pytest.raises(ValueError):
        g.set_label(0, Plain(1))
    with pytest.raises(KeyError):
        g.vertex_with_label(Plain(5))


def test_vertex_with_label_missing():
    g = Multigraph(2).freeze()
    with pytest.raises(KeyError):
        g.vertex_with_label(Hub("x"))


def test_plain_lookup_blocked_by_explicit_label():
    g = Multigraph(2)
    g.set_label(0, Hub("z"))
    with pytest.raises(KeyError):
        g.vertex_with_label(Plain(0))


# ------------------------------------------------------------ construction


def test_construction_errors():
    with pytest.raises(ValueError):
        Multigraph(-1)
    g = Multigraph(3)
    with pytest.raises(ValueError):
        g.add_edges(0, 0)
    with pytest.raises(ValueError):
        g.add_edges(0, 3)
    with pytest.raises(ValueError):
        g.add_edges(-1, 0)
    with pytest.raises(ValueError):
        g.add_edges(0, 1, 0)
    with pytest.raises(ValueError):
        g.add_edges(0, 1, -2)
    with pytest.raises(ValueError):
        g.add_edges(True, 1)  # bools are not vertex ids


def test_freeze_blocks_mutation():
    g = Multigraph(2)
    g.add_edges(0, 1)
    g.freeze()
    assert g.frozen
    with pytest.raises(ValueError):
        g.add_edges(0, 1)
    with pytest.raises(ValueError):
        g.set_label(0, Hub("x"))


def test_add_edges_accumulates():
    g = Multigraph(2)
    g.add_edges(0, 1, 2)
    g.add_edges(1, 0, 3)
    assert g.bundle_multiplicity(0, 1) == 5
    assert g.bundle_multiplicity(1, 0) == 5
    assert g.degree(0) == 5
    assert g.support_degree(0) == 1
    assert list(g.bundles()) == [(0, 1, 5)]


def test_degree_queries():
    g = Multigraph(4)
    g.add_edges(0, 1, 3)
    g.add_edges(0, 2, 1)
    g.freeze()
    assert g.degree(0) == 4
    assert g.degree(3) == 0
    assert g.max_degree() == 4
    assert g.min_degree() == 0
    assert g.support_neighbors(0) == {1, 2}
    assert g.support_degree(0) == 2
    assert g.weighted_edge_count() == 4
    assert g.support_edge_count() == 2
    with pytest.raises(ValueError):
        Multigraph(0).max_degree()
    with pytest.raises(ValueError):
        Multigraph(0).min_degree()


def test_common_neighbors():
    g = star_graph(3)
    assert g.common_neighbors(1, 2) == {0}
    assert g.common_neighbors(0, 1) == set()
    with pytest.raises(ValueError):
        g.common_neighbors(1, 1)


def test_bundles_sorted():
    g = Multigraph(4)
    g.add_edges(2, 3)
    g.add_edges(0, 3, 2)
    g.add_edges(0, 1)
    assert list(g.bundles()) == [(0, 1, 1), (0, 3, 2), (2, 3, 1)]
    assert g.support_edges() == [(0, 1), (0, 3), (2, 3)]


def test_components_and_connectivity():
    g = Multigraph(5)
    g.add_edges(0, 2)
    g.add_edges(1, 3)
    g.freeze()
    assert g.components() == [[0, 2], [1, 3], [4]]
    assert not g.is_connected()
    assert path_graph(4).is_connected()
    assert Multigraph(0).is_connected()
    assert Multigraph(1).is_connected()


def test_support_graph_collapses_multiplicities():
    g = Multigraph(3)
    g.add_edges(0, 1, 4)
    g.add_edges(1, 2, 1)
    g.set_label(0, Hub("x"))
    s = g.support_graph()
    assert s.frozen
    assert list(s.bundles()) == [(0, 1, 1), (1, 2, 1)]
    assert s.label(0) == Hub("x")


def test_equality_sensitive_to_structure_and_labels():
    a = Multigraph(2).add_edges(0, 1)
    b = Multigraph(2).add_edges(0, 1)
    assert a == b
    b.set_label(0, Hub("x"))
    assert a != b
    assert Multigraph(2) != Multigraph(3)
    assert Multigraph(2) != "not a graph"
    c = Multigraph(2).add_edges(0, 1, 2)
    assert a != c


def test_repr_mentions_counts():
    g = Multigraph(3).add_edges(0, 1, 2)
    assert "n=3" in repr(g)
    assert "edges=2" in repr(g)


# ------------------------------------------------- biregular classification


def test_classify_path3():
    cls = path_graph(3).classify_biregular_bipartite()
    assert cls == BiregularClassification(2, 1, (1,), (0, 2))


def test_classify_cycle4_vertex0_side_first():
    cls = cycle_graph(4).classify_biregular_bipartite()
    assert cls is not None
    assert (cls.a, cls.b) == (2, 2)
    assert cls.side_a == (0, 2)
    assert cls.side_b == (1, 3)


def test_classify_star():
    cls = star_graph(3).classify_biregular_bipartite()
    assert cls == BiregularClassification(3, 1, (0,), (1, 2, 3))


def test_classify_rejects_non_bipartite_and_degenerate():
    assert cycle_graph(3).classify_biregular_bipartite() is None
    assert cycle_graph(5).classify_biregular_bipartite() is None
    assert complete_graph(4).classify_biregular_bipartite() is None
    assert Multigraph(0).classify_biregular_bipartite() is None
    assert Multigraph(3).freeze().classify_biregular_bipartite() is None


def test_classify_path4_nonuniform_sides():
    # degrees 1,2,2,1 split across both color classes: no uniform reading
    assert path_graph(4).classify_biregular_bipartite() is None


def test_classify_counts_parallel_edges():
    g = Multigraph(2).add_edges(0, 1, 3).freeze()
    cls = g.classify_biregular_bipartite()
    assert cls == BiregularClassification(3, 3, (0,), (1,))


def test_classify_family_B2():
    cls = build_B(2).classify_biregular_bipartite()
    assert cls is not None
    assert (cls.a, cls.b) == (4, 3)
    assert len(cls.side_a) == 6 and len(cls.side_b) == 8
    assert cls.side_a == tuple(range(6))


def test_classify_edge_plus_isolated_has_no_reading():
    # K2 + K1: the isolated vertex would force degree 0 onto a side that
    # must also carry a degree-1 endpoint
    g = Multigraph(3).add_edges(0, 1).freeze()
    assert g.classify_biregular_bipartite() is None


def _oracle_biregular_pairs(g: Multigraph) -> set[tuple[int, int]]:
    """All (a, b) readings (a >= b) reachable by exhaustively orienting
    component 2-colorings; empty when none exists."""
    if g.n == 0 or g.support_edge_count() == 0:
        return set()
    color = [-1] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.support_neighbors(u):
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    comp.append(w)
                    stack.append(w)
                elif color[w] == color[u]:
                    return set()
        comps.append(comp)
    out: set[tuple[int, int]] = set()
    for bits in itertools.product((0, 1), repeat=len(comps)):
        side_a: set[int] = set()
        for flip, comp in zip(bits, comps):
            side_a.update(v for v in comp if color[v] ^ flip == 0)
        side_b = set(range(g.n)) - side_a
        if not side_a or not side_b:
            continue
        da = {g.degree(v) for v in side_a}
        db = {g.degree(v) for v in side_b}
        if len(da) == 1 and len(db) == 1:
            a, b = da.pop(), db.pop()
            out.add((max(a, b), min(a, b)))
    return out


def _assert_classification_valid(g: Multigraph, cls: BiregularClassification) -> None:
    side_a, side_b = set(cls.side_a), set(cls.side_b)
    assert side_a | side_b == set(range(g.n))
    assert not (side_a & side_b)
    assert cls.a >= cls.b
    assert {g.degree(v) for v in side_a} == {cls.a}
    assert {g.degree(v) for v in side_b} == {cls.b}
    for u, v in g.support_edges():
        assert (u in side_a) != (v in side_a)


def _random_bipartite(rng: random.Random) -> Multigraph:
    p = rng.randint(1, 5)
    q = rng.randint(1, 5)
    g = Multigraph(p + q)
    for u in range(p):
        for v in range(p, p + q):
            if rng.random() < 0.5:
                g.add_edges(u, v, rng.randint(1, 2))
    return g.freeze()


def test_classify_matches_exhaustive_oracle_on_corpus():
    # half arbitrary multigraphs, half bipartite-by-construction, 1000 total
    for i in range(1000):
        rng = random.Random(derive_item_seed(101, i))
        g = random_multigraph(rng, max_n=9) if i % 2 else _random_bipartite(rng)
        cls = g.classify_biregular_bipartite()
        oracle = _oracle_biregular_pairs(g)
        if cls is None:
            assert not oracle, f"graph {i}: classifier missed {oracle}"
        else:
            _assert_classification_valid(g, cls)
            assert (cls.a, cls.b) in oracle, f"graph {i}"


# ------------------------------------------------------------------- MGF

SAMPLE_MGF = """\
mgf 4
# label 0 hub x
# label 2 pair 1 3
# label 3 copy 2 1
0 1 2
1 3 1
2 3 4
"""


def test_mgf_round_trip_sample():
    g = parse_mgf(SAMPLE_MGF)
    assert g.n == 4
    assert g.label(0) == Hub("x")
    assert g.label(1) == Plain(1)
    assert g.label(2) == Pair(1, 3)
    assert g.label(3) == Copy(2, 1)
    assert g.bundle_multiplicity(2, 3) == 4
    assert serialize_mgf(g) == SAMPLE_MGF
    assert parse_mgf(serialize_mgf(g)) == g


def test_mgf_blank_lines_and_whitespace():
    text = "\nmgf 2\n\n  0 1 3  \n\n"
    g = parse_mgf(text)
    assert g.n == 2
    assert g.bundle_multiplicity(0, 1) == 3


def test_mgf_vertex_only_graph():
    g = parse_mgf("mgf 5\n")
    assert g.n == 5
    assert g.support_edge_count() == 0
    assert serialize_mgf(g) == "mgf 5\n"


@pytest.mark.parametrize(
    "text, line_no, needle",
    [
        ("", 1, "empty input"),
        ("graph 3\n", 1, "header"),
        ("mgf\n", 1, "header"),
        ("mgf -2\n", 1, ">= 0"),
        ("mgf x\n", 1, "integer"),
        ("mgf 3\n0 1\n", 2, "bundle line"),
        ("mgf 3\n0 1 1 1\n", 2, "bundle line"),
        ("mgf 3\n1 1 1\n", 2, "loop"),
        ("mgf 3\n2 1 1\n", 2, "u < v"),
        ("mgf 3\n0 1 1\n0 1 2\n", 3, "duplicate bundle"),
        ("mgf 3\n0 1 0\n", 2, "multiplicity"),
        ("mgf 3\n0 5 1\n", 2, "out of range"),
        ("mgf 3\n0 q 1\n", 2, "integer"),
        ("mgf 3\n# comment here\n", 2, "directive"),
        ("mgf 3\n# label 0\n", 2, "too short"),
        ("mgf 3\n# label 0 hub\n", 2, "hub label"),
        ("mgf 3\n# label 0 hub w\n", 2, "hub name"),
        ("mgf 3\n# label 0 pair 2 2\n", 2, "1 <= i < j"),
        ("mgf 3\n# label 0 copy 0 1\n", 2, "k >= 1"),
        ("mgf 3\n# label 0 blob 1\n", 2, "unknown label kind"),
        ("mgf 3\n# label 9 hub x\n", 2, "out of range"),
        ("mgf 3\n# label 0 hub x\n# label 1 hub x\n", 3, "already used"),
        ("mgf 3\n0 1 1\n# label 0 hub x\n", 3, "label line after bundle"),
    ],
)
def test_mgf_parse_errors(text, line_no, needle):
    with pytest.raises(MGFParseError) as exc:
        parse_mgf(text)
    assert exc.value.line_no == line_no
    assert needle in str(exc.value)


_label_st = st.one_of(
    st.sampled_from([Hub("x"), Hub("y"), Hub("z")]),
    st.tuples(st.integers(1, 4), st.integers(1, 4))
    .filter(lambda t: t[0] < t[1])
    .map(lambda t: Pair(*t)),
    st.builds(Copy, st.integers(1, 3), st.integers(1, 5)),
)


@st.composite
def labeled_multigraphs(draw):
    n = draw(st.integers(0, 8))
    g = Multigraph(n)
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        for u, v in draw(st.lists(st.sampled_from(pairs), unique=True, max_size=12)):
            g.add_edges(u, v, draw(st.integers(1, 4)))
    if n:
        labels = draw(st.lists(_label_st, unique=True, max_size=min(n, 4)))
        ids = draw(
            st.lists(st.integers(0, n - 1), unique=True,
                     min_size=len(labels), max_size=len(labels))
        )
        for v, lab in zip(ids, labels):
            g.set_label(v, lab)
    return g.freeze()


@given(labeled_multigraphs())
def test_mgf_round_trip_property(g):
    text = serialize_mgf(g)
    back = parse_mgf(text)
    assert back == g
    assert serialize_mgf(back) == text


@given(labeled_multigraphs())
def test_handshake_and_symmetry(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.weighted_edge_count()
    for v in range(g.n):
        for w in g.support_neighbors(v):
            assert v in g.support_neighbors(w)
            assert g.bundle_multiplicity(v, w) == g.bundle_multiplicity(w, v)


# ------------------------------------------------------------------- DOT


def test_export_dot_repeats_multiplicity():
    g = Multigraph(3)
    g.add_edges(0, 1, 3)
    g.add_edges(1, 2, 1)
    g.set_label(0, Hub("x"))
    dot = export_dot(g.freeze())
    assert dot.count("0 -- 1;") == 3
    assert dot.count("1 -- 2;") == 1
    assert 'label="x"' in dot
    assert "style=filled" not in dot


def test_export_dot_highlight():
    g = path_graph(3)
    dot = export_dot(g, highlight=[0, 2])
    assert dot.count("style=filled") == 2
    with pytest.raises(ValueError):
        export_dot(g, highlight=[5])
