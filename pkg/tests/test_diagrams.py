import pytest

from webbasis.diagrams import (
    CrossedDiagram, NaiveTrace, PositiveStats, PositivityViolation, Region, bounded_regions,
    build_diagram, check_B_conditions, reidemeister_II, resolve_crossing, resolve_naive,
    resolve_positive, web_of,
)
from webbasis.qlaurent import ONE, Q, quantum_int
from webbasis.tableaux import Partition, act, enumerate_std, from_word, superstandard
from webbasis.webs import Web, WebCombination, act_word, min_web, nest


def worked_example():
    t = act(superstandard(Partition((2, 2, 2))), from_word((4, 2, 3), 6))
    return t, build_diagram(t)


def test_worked_example_trace():
    _, d = worked_example()
    assert d.crossing_count() == 3
    trace = NaiveTrace()
    out = resolve_naive(d, trace)
    w0 = min_web(3, 0)
    parts = sorted((str(c), loops) for c, loops in trace.contributions[w0])
    assert parts == [("q", 0), ("q", 0), ("q^2", 1), ("q^3", 0)]
    assert Q ** 3 - Q ** 2 * quantum_int(2) + Q + Q == Q
    assert out.coeff(w0) == Q
    assert trace.loop_removals == 1
    expect = {"()()()": Q, "(())()": Q * Q, "()(())": Q * Q, "(()())": Q, "((()))": ONE}
    assert {str(w): c for w, c in out.items()} == expect


def test_worked_example_regions():
    _, d = worked_example()
    regs = bounded_regions(d)
    assert [r.kind for r in regs] == ["triangle"]
    assert check_B_conditions(d)


def test_resolve_crossing_coefficients():
    _, d = worked_example()
    site = d.ordered_crossings()[0]
    out = resolve_crossing(d, site).items()
    assert sorted(str(c) for _, c in out) == ["1", "q"]
    assert all(e.crossing_count() == 2 for e, _ in out)


def test_reidemeister_II_on_a_bigon():
    # a through-string pulled under both legs of a cap
    d = CrossedDiagram.from_layers(Web("()|"), [(2, "NEoverSW"), (1, "NEoverSW")])
    bigons = [r for r in bounded_regions(d) if r.kind == "bigon"]
    assert len(bigons) == 1
    c, e = reidemeister_II(d, bigons[0])
    assert c == Q and e.crossing_count() == 0 and e.loops == 0
    assert resolve_naive(d) == resolve_naive(e).scale(Q)
    with pytest.raises(ValueError):
        reidemeister_II(d, Region(0, [], [], True, "square"))


def test_closed_loop_fails_B1():
    d = CrossedDiagram.from_layers(Web("()"), [(1, "cupcap")])
    assert d.to_web() == (Web("()"), 1)
    assert not check_B_conditions(d)


def test_json_roundtrip():
    _, d = worked_example()
    assert CrossedDiagram.from_json(d.to_json()).key() == d.key()


def test_local_confluence():
    # resolving any crossing first leads to the same web combination
    _, d = worked_example()
    expected = resolve_naive(d)
    for site in d.ordered_crossings():
        total = WebCombination()
        for e, c in resolve_crossing(d, site).items():
            total = total + resolve_naive(e).scale(c)
        assert total == expected


@pytest.mark.parametrize("parts", [(2, 2, 2), (2, 2, 1, 1), (2, 2, 2, 1), (2, 2, 2, 2)])
def test_layer_count_matches_nesting(parts):
    for t in enumerate_std(Partition(parts)):
        assert build_diagram(t).crossing_count() == nest(web_of(t))


def test_independent_of_reduced_word():
    # commuting letters give the same web combination
    t0 = superstandard(Partition((2, 2, 2)))
    a = act_word(WebCombination.single(min_web(3, 0)), (4, 2))
    b = act_word(WebCombination.single(min_web(3, 0)), (2, 4))
    assert a == b
    t = act(t0, from_word((4, 2), 6))
    assert resolve_naive(build_diagram(t)) == a


def test_positive_route_on_small_shapes():
    for parts in [(2, 2, 2), (2, 2, 1), (2, 2, 2, 1, 1)]:
        for t in enumerate_std(Partition(parts)):
            stats = PositiveStats()
            out = resolve_positive(build_diagram(t), stats)
            assert out == resolve_naive(build_diagram(t))
            assert stats.loop_removals == 0 and stats.b_violations == 0
            for _, c in out.items():
                assert all(e >= 0 and k > 0 for e, k in c.items())


def test_strict_positive_raises_when_no_plan_exists():
    t = act(superstandard(Partition((2, 2, 2, 2, 1, 1))),
            from_word((8, 9, 6, 7, 8, 4, 5, 6, 7, 2, 3, 4, 5), 10))
    with pytest.raises(PositivityViolation):
        resolve_positive(build_diagram(t), strict=True)
    stats = PositiveStats()
    out = resolve_positive(build_diagram(t), stats, strict=False)
    assert stats.b_violations > 0 and stats.loop_removals == 0
    assert out == resolve_naive(build_diagram(t))


def test_build_diagram_rejects_three_columns():
    with pytest.raises(ValueError):
        build_diagram(superstandard(Partition((3, 1))))
