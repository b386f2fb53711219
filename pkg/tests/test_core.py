import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from bruhatwalk.core import (INF, PERMUTATION, CoxeterError, ResourceLimitError, build_system,
                             family_matrix, named_system, tits_reduce)
from oracles import Geo, inversions


def words(k, max_size=8):
    return st.lists(st.integers(0, k - 1), max_size=max_size)


# --- construction ---------------------------------------------------------

def test_a2_from_matrix():
    S = build_system([[1, 3], [3, 1]])
    assert S.rank == 2
    assert S.names == ("s1", "s2")


def test_named_a3_matches_symmetric_group_presentation():
    assert family_matrix("A3") == [[1, 3, 2], [3, 1, 3], [2, 3, 1]]


def test_named_grid():
    m = family_matrix("GRID")
    assert len(m) == 4
    assert m[0][1] == INF and m[2][3] == INF
    assert all(m[i][j] == 2 for i in (0, 1) for j in (2, 3))


@pytest.mark.parametrize("name, rank, order", [
    ("A1", 1, 2), ("A3", 3, 24), ("B2", 2, 8), ("B3", 3, 48), ("I2(5)", 2, 10),
    ("H3", 3, 120), ("D4", 4, 192), ("F4", 4, 1152),
])
def test_named_finite_families(name, rank, order):
    m = family_matrix(name)
    assert len(m) == rank
    assert len(Geo(m, 60).words) == order


@pytest.mark.parametrize("name", ["E6", "E7", "E8", "H4", "~A2", "FREE_INVOLUTIONS(3)", "FREE4"])
def test_other_names_build(name):
    named_system(name)


def test_affine_a2_is_a_triangle_of_threes():
    assert family_matrix("~A2") == [[1, 3, 3], [3, 1, 3], [3, 3, 1]]


@pytest.mark.parametrize("matrix", [
    [[1, 3], [2, 1]],          # asymmetric
    [[1, 1], [1, 1]],          # entry below 2
    [[2, 3], [3, 1]],          # bad diagonal
    [[1, 3, 2], [3, 1]],       # ragged
    [],
])
def test_invalid_matrices(matrix):
    with pytest.raises(CoxeterError):
        build_system(matrix)


def test_permutation_engine_only_for_type_a():
    with pytest.raises(CoxeterError):
        named_system("B2", engine=PERMUTATION)
    named_system("A4", engine=PERMUTATION)


def test_bad_names():
    with pytest.raises(CoxeterError):
        build_system([[1, 3], [3, 1]], names=["s", "s"])
    with pytest.raises(CoxeterError):
        named_system("Q7")


# --- reduce / multiply ----------------------------------------------------

def test_generator_is_an_involution():
    A2 = named_system("A2")
    assert A2.reduce([0, 0]) == A2.identity()
    assert A2.reduce([0, 0]).length == 0


def test_a2_reduce_alternating_four():
    # [2,1,2,1] in 1-based letters
    A2 = named_system("A2")
    assert A2.reduce([1, 0, 1, 0]).word == (0, 1)


def test_b2_sts_is_already_reduced():
    B2 = named_system("B2")
    w = B2.reduce([0, 1, 0])
    assert w.word == (0, 1, 0)
    # no product of fewer generators gives the same element
    geo = Geo(B2.matrix, 4)
    shorter = {geo.canonical(x) for n in range(3) for x in itertools.product(range(2), repeat=n)}
    assert geo.canonical((0, 1, 0)) not in shorter


def test_right_multiply_examples():
    A2 = named_system("A2")
    e = A2.identity()
    assert A2.right_multiply(e, 0).word == (0,)
    longest = A2.right_multiply(A2.reduce([0, 1]), 0)
    assert longest.word == (0, 1, 0)
    assert A2.reduced_words(longest) == {(0, 1, 0), (1, 0, 1)}
    assert A2.right_multiply(longest, 0).word == (0, 1)


def test_inverse_examples():
    A2 = named_system("A2")
    assert A2.inverse(A2.identity()) == A2.identity()
    assert A2.inverse(A2.reduce([0, 1])).word == (1, 0)
    assert A2.inverse(A2.reduce([0, 1, 0])).word == (0, 1, 0)


def test_distance_examples():
    A2 = named_system("A2")
    s, t = A2.reduce([0]), A2.reduce([1])
    assert A2.distance(s, s) == 0
    assert A2.distance(A2.identity(), A2.reduce([0, 1, 0])) == 3
    assert A2.distance(s, t) == 2


def test_word_text_roundtrip():
    S = named_system("A3", names=["a", "b", "c"])
    w = S.reduce(S.parse_word("c b a b"))
    assert S.format_word(w) == "a c b a"  # c b a b = c a b a = a c b a
    assert S.parse_word("e") == []


def test_resource_limit():
    S = named_system("FREE2", max_word_length=5)
    S.reduce([0, 1] * 2 + [0])
    with pytest.raises(ResourceLimitError):
        S.reduce([0, 1] * 3)


def test_closure_limit():
    S = named_system("A4", max_closure_size=10)
    with pytest.raises(ResourceLimitError):
        S.reduce([0, 1, 0, 2, 1, 0, 3, 2, 1, 0])


SYSTEMS = ["A2", "B2", "A3", "I2(5)", "GRID", "FREE3", "~A2", "H3"]


@pytest.mark.parametrize("name", SYSTEMS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_reduce_agrees_with_geometric_oracle(name, data):
    S = named_system(name)
    word = data.draw(words(S.rank, 7))
    geo = _geo(name)
    assert S.reduce(word).word == geo.canonical(tuple(word))


_GEOS = {}


def _geo(name):
    if name not in _GEOS:
        _GEOS[name] = Geo(family_matrix(name), 7)
    return _GEOS[name]


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "GRID", "~A2"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_incremental_reduce_matches_whole_word_reduce(name, data):
    S = named_system(name)
    word = data.draw(words(S.rank, 8))
    assert S.reduce(word).word == tits_reduce(word, S.matrix)


@pytest.mark.parametrize("name", SYSTEMS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_parity_and_involution(name, data):
    S = named_system(name)
    w = S.reduce(data.draw(words(S.rank)))
    g = data.draw(st.integers(0, S.rank - 1))
    wg = S.right_multiply(w, g)
    assert wg.length - w.length in (1, -1)
    assert S.right_multiply(wg, g) == w


@pytest.mark.parametrize("name", SYSTEMS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_reduce_is_idempotent(name, data):
    S = named_system(name)
    w = S.reduce(data.draw(words(S.rank)))
    assert S.reduce(w.word) == w
    assert S.inverse(S.inverse(w)) == w
    assert S.inverse(w).length == w.length


@pytest.mark.parametrize("name", ["A3", "B3", "I2(7)", "~A2", "H3", "GRID", "D4"])
def test_braid_relations_give_identity(name):
    S = named_system(name)
    for i, j in itertools.combinations(S.generators, 2):
        m = S.m(i, j)
        if m != INF:
            assert S.reduce([i, j] * m) == S.identity()
        else:
            assert S.reduce([i, j] * 4).length == 8


def test_engine_agreement_on_a3():
    W = named_system("A3")
    P = named_system("A3", engine=PERMUTATION)
    for word in itertools.product(range(3), repeat=6):
        assert W.reduce(word).word == P.reduce(word).word


@settings(max_examples=100, deadline=None)
@given(words(3, 6))
def test_permutation_length_is_inversion_count(word):
    P = named_system("A3", engine=PERMUTATION)
    w = P.reduce(word)
    assert w.length == inversions(w.perm)
    assert P.element_from_perm(w.perm) == w


def test_permutation_products_and_inverse():
    P = named_system("A3", engine=PERMUTATION)
    u, v = P.reduce([0, 1]), P.reduce([2, 1, 0])
    assert P.multiply(u, v) == P.reduce([0, 1, 2, 1, 0])
    assert P.multiply(u, P.inverse(u)) == P.identity()
    assert P.reduce([0, 1, 0, 2, 1, 0]).perm == (4, 3, 2, 1)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_distance_is_a_metric(name):
    S = named_system(name)
    ball = [S.reduce(x) for n in range(4) for x in itertools.product(range(2), repeat=n)]
    ball = list(dict.fromkeys(ball))
    for u, v in itertools.product(ball, repeat=2):
        assert S.distance(u, v) == S.distance(v, u)
        assert (S.distance(u, v) == 0) == (u == v)
    for u, v, x in itertools.product(ball, repeat=3):
        assert S.distance(u, x) <= S.distance(u, v) + S.distance(v, x)


def test_concurrent_reads_agree():
    from concurrent.futures import ThreadPoolExecutor
    S = named_system("~A2")
    jobs = [tuple((i * 7 + j) % 3 for j in range(9)) for i in range(60)]
    with ThreadPoolExecutor(4) as ex:
        got = list(ex.map(lambda w: S.reduce(w).word, jobs))
    assert got == [tits_reduce(w, S.matrix) for w in jobs]


def test_inf_is_math_inf():
    assert INF == math.inf
