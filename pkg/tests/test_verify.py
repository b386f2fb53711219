from fractions import Fraction as F

import pytest

from bruhatwalk.cayley import build_ball, longest_element
from bruhatwalk.core import ResourceLimitError, named_system
from bruhatwalk.order import covering_edges
from bruhatwalk.verify import (ID, OffWall, WalkPath, check_bijection, check_order,
                               enumerate_paths, fold_path, is_path)
from bruhatwalk.walk import StepDistribution, evolve, uniform_steps
from bruhatwalk.walls import Colour, wall_data


def a2_wall():
    A2 = named_system("A2")
    ball = build_ball(A2, 3)
    return A2, ball, wall_data(ball, A2.identity(), 0)


def path(ball, steps):
    verts = [0]
    for g in steps:
        verts.append(verts[-1] if g is ID else ball.adjacency[verts[-1]][g])
    return WalkPath(tuple(verts), tuple(steps))


# --- enumerate_paths ------------------------------------------------------

def test_empty_path():
    _, ball, _ = a2_wall()
    assert enumerate_paths(ball, 0, 0) == [WalkPath((0,), ())]


def test_two_step_paths_to_s():
    A2, ball, _ = a2_wall()
    got = enumerate_paths(ball, 2, A2.reduce([0]))
    assert [p.steps for p in got] == [(ID, 0), (0, ID)]
    assert enumerate_paths(ball, 2, A2.reduce([0, 1, 0])) == []


def test_path_cap():
    _, ball, _ = a2_wall()
    with pytest.raises(ResourceLimitError):
        enumerate_paths(ball, 11, 0)
    with pytest.raises(ResourceLimitError):
        enumerate_paths(ball, 5, 0, max_paths=100)


# --- fold_path ------------------------------------------------------------

def test_fold_idle_on_wall_becomes_crossing():
    _, ball, wall = a2_wall()
    alpha = path(ball, [0, ID])
    beta = fold_path(wall, alpha)
    assert beta == WalkPath((0, 1, 0), (0, 0))


def test_fold_reflects_suffix():
    A2, ball, wall = a2_wall()
    alpha = path(ball, [0, 1, 1])
    assert [A2.format_word(ball.vertices[v]) for v in alpha.vertices] == ["", "s1", "s1 s2", "s1"]
    beta = fold_path(wall, alpha)
    assert beta.steps == (ID, 1, 1)
    assert [A2.format_word(ball.vertices[v]) for v in beta.vertices] == ["", "", "s2", ""]


def test_fold_single_crossing_on_a1():
    A1 = named_system("A1")
    ball = build_ball(A1, 1)
    wall = wall_data(ball, A1.identity(), 0)
    assert fold_path(wall, path(ball, [0])) == WalkPath((0, 0), (ID,))


def test_fold_refuses_paths_off_the_wall():
    A2, ball, wall = a2_wall()
    with pytest.raises(OffWall):
        fold_path(wall, path(ball, [1, ID]))


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_fold_properties(name):
    S = named_system(name)
    ball = build_ball(S, 8)
    for u, v, g in covering_edges(ball).covers:
        wall = wall_data(ball, ball.vertices[u], g)
        for alpha in enumerate_paths(ball, 4, v):
            beta = fold_path(wall, alpha)
            assert is_path(ball, beta)
            assert len(beta) == len(alpha) and beta.vertices[0] == 0 and beta.end == u
            assert fold_path(wall, beta) == alpha


def test_fold_vertex_is_black_for_walks_to_ws():
    from bruhatwalk.verify import fold_time
    S = named_system("B2")
    ball = build_ball(S, 6)
    wall = wall_data(ball, S.reduce([0]), 1)
    for alpha in enumerate_paths(ball, 5, wall.ws):
        assert wall.colour[alpha.vertices[fold_time(wall, alpha)]] is Colour.BLACK


# --- check_bijection ------------------------------------------------------

def test_bijection_a2_two_steps():
    _, ball, wall = a2_wall()
    report = check_bijection(ball, wall, 2)
    assert report.passed
    assert (report.to_ws, report.to_w, report.surplus) == (2, 3, 1)


def test_bijection_a2_one_step():
    _, ball, wall = a2_wall()
    report = check_bijection(ball, wall, 1)
    assert report.passed and report.to_ws == report.to_w == 1


def test_bijection_b2_four_steps():
    # 16 and 10 from enumerating all 3^4 step sequences with the matrix oracle
    B2 = named_system("B2")
    ball = build_ball(B2, 4)
    report = check_bijection(ball, wall_data(ball, B2.reduce([0]), 1), 4)
    assert report.passed
    assert (report.to_w, report.to_ws) == (16, 10)


def test_bijection_on_infinite_group():
    G = named_system("~A2")
    ball = build_ball(G, 5)
    for u, v, g in covering_edges(ball).covers:
        if ball.lengths[v] <= 2:
            report = check_bijection(ball, wall_data(ball, ball.vertices[u], g), 5)
            assert report.passed
            d = evolve(ball, uniform_steps(G), 5)
            assert report.surplus == (d[u] - d[v]) * 4 ** 5


# --- check_order ----------------------------------------------------------

def test_check_order_a2():
    A2 = named_system("A2")
    ball = build_ball(A2, 3)
    report = check_order(ball, uniform_steps(A2), 6)
    assert report.passed and len(report.pairs) == 6
    d2 = evolve(ball, uniform_steps(A2), 2)
    assert d2[0] - d2[1] == F(1, 9)
    es = next(p for p in report.pairs if (p.u, p.v) == (0, 1))
    assert es.min_margin == 0  # equality at n = 1
    assert es.equal_count == 1


def test_check_order_a3_examples():
    A3 = named_system("A3")
    ball = build_ball(A3, 6)
    sd = uniform_steps(A3)
    assert check_order(ball, sd, 10).passed
    top = longest_element(ball)
    sts = ball.find("s1 s2 s1")
    for n in range(11):
        d = evolve(ball, sd, n)
        assert 0 in d.most_likely()
        if n >= 6:
            assert d.least_likely() == [top]
        assert d[ball.find("s1")] >= d[sts] and d[ball.find("s2")] >= d[sts]


def test_check_order_detects_violations():
    # idling less often than stepping breaks the hypothesis; the report says so
    A1 = named_system("A1")
    ball = build_ball(A1, 1)
    report = check_order(ball, StepDistribution(F(1, 4), (F(3, 4),)), 3)
    assert not report.passed
    assert report.violations[0].first_violation == 1
    assert report.to_json()["violations"][0]["min_margin"] == "-1/2"
    assert not report.to_json()["theorem2_ok"]


def test_check_order_refuses_truncation():
    F3 = named_system("FREE3")
    with pytest.raises(ValueError):
        check_order(build_ball(F3, 3), uniform_steps(F3), 4)
