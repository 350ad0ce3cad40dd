import pytest
from hypothesis import given, strategies as st

from equimatch.graph import (
    Graph,
    GraphFormatError,
    GraphSpecError,
    components,
    edge_bits,
    generate,
    graph_from_edges,
    parse_graph,
)


def test_parse_c6_canonical_order():
    text = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n"
    g = parse_graph(text)
    assert g.n == 6
    assert g.edges == ((0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5))


def test_parse_single_vertex():
    g = parse_graph("1 0\n")
    assert g.n == 1 and g.edges == ()


def test_parse_input_order_irrelevant():
    a = parse_graph("4 3\n2 3\n0 1\n1 2\n")
    b = parse_graph("4 3\n0 1\n1 2\n2 3\n")
    assert a == b


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("3 2\n0 1\n0 1\n", 3),  # duplicate edge
        ("3 1\n2 2\n", 2),  # loop
        ("3 1\n0 5\n", 2),  # out of range
        ("3 1\nx y\n", 2),  # malformed
        ("3 2\n0 1\n", 3),  # truncated
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.line == lineno


def test_roundtrip_idempotence(c6, path4, petersen):
    for g in (c6, path4, petersen):
        assert parse_graph(g.serialize()) == g


def test_generate_families():
    assert generate("path:4").edges == ((0, 1), (1, 2), (2, 3))
    assert generate("cycle:6") == parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
    assert generate("complete:4").num_edges == 6
    assert generate("kbipartite:2:3").num_edges == 6
    assert generate("star:5").num_edges == 4
    p = generate("petersen")
    assert p.n == 10 and p.num_edges == 15
    assert all(len(p.incident[v]) == 3 for v in range(10))


def test_generate_deterministic():
    assert generate("gnp:8:1:2:42") == generate("gnp:8:1:2:42")
    assert generate("gnp:8:0:1:7").num_edges == 0
    assert generate("gnp:8:1:1:7").num_edges == 28


@pytest.mark.parametrize(
    "spec",
    ["wheel:5", "path:0", "path:-3", "gnp:5:3:2:1", "gnp:5:-1:2:1", "cycle:2", "petersen:5"],
)
def test_generate_rejects_bad_specs(spec):
    with pytest.raises(GraphSpecError):
        generate(spec)


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(3, ((1, 1),))
    with pytest.raises(ValueError):
        Graph(3, ((1, 2), (0, 1)))  # not sorted
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 1), (1, 0)])  # duplicate after flip


def test_components_examples(c6, path4):
    all6 = (1 << 6) - 1
    assert components(c6, all6) == [all6]
    two = edge_bits(c6, [(0, 1), (2, 3)])
    comps = components(c6, two)
    assert len(comps) == 2
    assert comps[0] | comps[1] == two and comps[0] & comps[1] == 0
    one = edge_bits(path4, [(0, 1), (1, 2)])
    assert components(path4, one) == [one]


@given(st.integers(0, 2**15 - 1))
def test_components_partition_support(support):
    g = generate("gnp:8:2:3:5")
    support &= (1 << g.num_edges) - 1
    comps = components(g, support)
    acc = 0
    for c in comps:
        assert c and not (acc & c)
        acc |= c
    assert acc == support
    # sorted by minimum edge index
    mins = [(c & -c) for c in comps]
    assert mins == sorted(mins)
