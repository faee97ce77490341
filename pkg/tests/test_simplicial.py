import itertools
import random

import pytest

from oracles import word_as_surjection
from suspsplit.constructions import BOUNDARY_TRIANGLE, order_complex, point, simplicial_circle
from suspsplit.simplicial import (
    FiniteSimplicialSet,
    SimplexRef,
    SimplicialMap,
    TruncationError,
    degeneracy,
    face,
    is_admissible,
    normal_form,
    simplices,
    validate_identities,
)


@pytest.mark.parametrize("word,expected", [((0, 0), (1, 0)), ((0, 1), (2, 0)), ((2, 0), (2, 0)), ((), ())])
def test_normal_form_examples(word, expected):
    assert normal_form(word) == expected


def test_normal_form_matches_surjections_exhaustively():
    for k in range(1, 5):
        for word in itertools.product(range(4), repeat=k):
            nf = normal_form(word)
            assert is_admissible(nf)
            assert word_as_surjection(nf, 3) == word_as_surjection(word, 3)


def test_normal_form_idempotent_on_random_words():
    rng = random.Random(7)
    for _ in range(500):
        w = [rng.randrange(7) for _ in range(rng.randrange(1, 7))]
        assert normal_form(normal_form(w)) == normal_form(w)


def _two_simplex():
    # one nondegenerate 2-simplex with distinct vertices, truncated at 4
    return FiniteSimplicialSet(
        [["a", "b", "c"], ["ab", "ac", "bc"], ["abc"]],
        {"ab": ["b", "a"], "ac": ["c", "a"], "bc": ["c", "b"], "abc": ["bc", "ac", "ab"]},
        truncation=4,
        name="simplex",
    )


def test_face_through_degeneracies():
    X = _two_simplex()
    y = X.generator("ab")
    s0 = degeneracy(X, y, 0)
    assert face(X, s0, 0) == y and face(X, s0, 1) == y
    s1 = degeneracy(X, y, 1)
    assert face(X, s1, 0) == degeneracy(X, face(X, y, 0), 0)


def test_degeneracy_examples():
    X = _two_simplex()
    v = X.generator("a")
    assert degeneracy(X, v, 0) == SimplexRef((0,), "a", 0)
    assert degeneracy(X, degeneracy(X, v, 0), 0).word == (1, 0)
    g = X.generator("abc")
    s2 = degeneracy(X, g, 2)
    assert degeneracy(X, s2, 0).word == (3, 0)


def test_degeneracy_out_of_range_and_truncation():
    X = _two_simplex()
    with pytest.raises(ValueError):
        degeneracy(X, X.generator("a"), 1)
    x = X.generator("abc")
    for i in (0, 1):
        x = degeneracy(X, x, 0)
    with pytest.raises(TruncationError):
        degeneracy(X, x, 0)


def test_simplices_of_boundary_triangle():
    X = order_complex(BOUNDARY_TRIANGLE, 2)
    one = simplices(X, 1)
    assert len(one) == 6
    assert sum(s.degenerate for s in one) == 3
    assert [s.gen for s in simplices(X, 0)] == [(1,), (2,), (3,)]


def test_simplices_count_against_surjection_count():
    # a k-simplex nondegenerate generator contributes C(n, k) simplices in dimension n
    X = _two_simplex()
    assert len(simplices(X, 3)) == 3 * 1 + 3 * 3 + 1 * 3


def test_validators_accept_constructions():
    for X in (point(0), simplicial_circle(3), _two_simplex(), order_complex(BOUNDARY_TRIANGLE, 3)):
        assert validate_identities(X).passed


def test_validator_names_swapped_face():
    X = FiniteSimplicialSet(
        [["a", "b", "c"], ["ab", "ac", "bc"], ["abc"]],
        {"ab": ["b", "a"], "ac": ["c", "a"], "bc": ["c", "b"], "abc": ["ac", "bc", "ab"]},
        truncation=2,
    )
    rep = validate_identities(X)
    assert not rep.passed
    assert {(v["generator"], v["i"], v["j"]) for v in rep.violations} == {("'abc'", 0, 2), ("'abc'", 1, 2)}


def test_simplicial_map_and_identity():
    X = _two_simplex()
    ident = SimplicialMap.identity(X)
    assert ident.check().passed
    x = degeneracy(X, X.generator("bc"), 1)
    assert ident(x) == x
    collapse = SimplicialMap(X, point(4), {g: SimplexRef(tuple(range(X.gdim(g) - 1, -1, -1)), "pt", 0) for g in X.all_generators()})
    assert collapse.check().passed
    assert collapse.compose(ident)(x) == collapse(x)
