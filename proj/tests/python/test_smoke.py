import pathlib

import pytest

import ccmpc


def components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def test_graph_normalizes_edges():
    g = ccmpc.Graph(4, [(1, 0), (0, 1), (2, 2), (3, 2)])
    assert g.num_vertices == 4
    assert g.num_edges == 2
    assert g.edges() == [(0, 1), (2, 3)]
    assert g.neighbors(2) == [3]


@pytest.mark.parametrize("algorithm", ccmpc.algorithms())
def test_every_algorithm_matches_union_find(algorithm):
    g = ccmpc.gnp(3000, 1.2 / 3000, seed=11)
    expected = components(g.num_vertices, g.edges())
    result = ccmpc.run(g, algorithm, seed=5, finalize_threshold=0)
    assert result["assignment"] == expected
    assert result["assignment"] == ccmpc.union_find(g)
    ok, _ = ccmpc.verify(result["assignment"], g)
    assert ok
    assert result["totals"]["rounds"] >= len(result["phases"]) > 0


def test_runs_are_deterministic():
    g = ccmpc.generate("path", 500, permute=True, seed=3)
    a = ccmpc.run(g, "local", seed=2)
    b = ccmpc.run(g, "local", seed=2)
    assert a == b


def test_verify_reports_wrong_assignment():
    g = ccmpc.generate("path", 4)
    ok, message = ccmpc.verify([0, 0, 2, 2], g)
    assert not ok and message


def test_errors_map_to_python_exceptions(tmp_path):
    with pytest.raises(ccmpc.ConfigError):
        ccmpc.run(ccmpc.generate("star", 5), "no-such-algorithm")
    with pytest.raises(ccmpc.ConfigError):
        ccmpc.generate("no-such-family", 5)
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n3\n")
    with pytest.raises(ccmpc.ParseError):
        ccmpc.load_edge_list(str(bad))


def test_strict_budget_violation_is_raised():
    g = ccmpc.generate("star", 5000)
    with pytest.raises(ccmpc.SpaceViolation):
        ccmpc.run(g, "hash2min", strict_space=True, machines=8)


def test_load_edge_list_keeps_external_ids(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("# comment\n10 30\n30 20\n\n50 40\n")
    g, ids = ccmpc.load_edge_list(str(path))
    assert ids == [10, 20, 30, 40, 50]
    result = ccmpc.run(g, "cracker")
    assert [ids[r] for r in result["assignment"]] == [10, 10, 10, 40, 40]
