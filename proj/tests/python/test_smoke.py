from fractions import Fraction

import pytest

imtw = pytest.importorskip("imtw")


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def test_c5_independent_set():
    result = imtw.solve(5, cycle(5))
    assert result["status"] == "optimal"
    assert result["weight"] == 2
    assert result["solution"] == [2, 4]


def test_c6_cycle_takes_everything():
    result = imtw.solve(6, cycle(6), problem="cycle")
    assert result["solution"] == list(range(6))


def test_fractional_weights_agree_with_oracle():
    weights = [Fraction(-7, 2), 3, Fraction(5, 4), 1, Fraction(2, 3)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]
    for problem in imtw.problems():
        solved = imtw.solve(5, edges, weights, problem=problem)
        expected = imtw.oracle(5, edges, weights, problem=problem)
        for key in ("status", "weight", "solution"):
            assert solved.get(key) == expected.get(key)


def test_statuses():
    assert imtw.solve(0, [], problem="tree")["status"] == "infeasible"
    assert imtw.solve(3, [(0, 1)], k=0)["status"] == "mu-exceeded"


def test_errors():
    with pytest.raises(imtw.ParseError):
        imtw.parse_gr("p tw 2 1\n1 1\n")
    with pytest.raises(ValueError):
        imtw.solve(5, cycle(5), problem="cycle", w=1)


def test_format_round_trip():
    n, edges = imtw.parse_gr("c comment\np tw 3 2\n2 1\n2 3\n")
    assert (n, edges) == (3, [(0, 1), (1, 2)])
    assert imtw.emit_gr(n, edges) == "p tw 3 2\n1 2\n2 3\n"


def test_selfcheck():
    assert all(suite["failed"] == 0 for suite in imtw.selfcheck(seed=3, budget=5))
