import itertools

import pytest

from oracles import commuting_tuples_brute
from suspsplit.constructions import (
    BOUNDARY_TRIANGLE,
    RP2_6,
    AbstractSimplicialComplex,
    InputError,
    cech_nerve,
    commuting_nerve,
    cyclic_group,
    direct_product,
    discrete_set,
    hom_to_rep,
    nerve_map,
    order_complex,
    point,
    product,
    quaternion_group,
    read_complex,
    read_group,
    rep_nerve,
    simplicial_circle,
    symmetric_group,
    write_group,
)
from suspsplit.homology import homology, normalized_chains
from suspsplit.simplicial import validate_identities


def test_order_complex_generators():
    X = order_complex(BOUNDARY_TRIANGLE, 2)
    assert [len(X.generators[d]) for d in range(3)] == [3, 3, 0]
    assert X.complete and not order_complex(RP2_6, 1).complete
    Y = order_complex(RP2_6)
    assert [len(Y.generators[d]) for d in range(3)] == [6, 15, 10]
    P = order_complex(AbstractSimplicialComplex.from_facets([{1}]))
    assert P.all_generators() == [(1,)]


def test_order_complex_degenerate_tuples_are_weakly_increasing():
    X = order_complex(BOUNDARY_TRIANGLE, 3)
    for x in X.simplices(3):
        verts = list(x.gen)
        for j in reversed(x.word):
            verts.insert(j, verts[j])
        assert verts == sorted(verts) and BOUNDARY_TRIANGLE.is_simplex(verts)


@pytest.mark.parametrize(
    "grp,counts",
    [
        (cyclic_group(2), [1, 2, 4, 8]),
        (symmetric_group(3), [1, 6, 18, 48]),
        (quaternion_group(), [1, 8, 40]),
    ],
    ids=["Z2", "S3", "Q8"],
)
def test_commuting_nerve_level_sizes(grp, counts):
    X = commuting_nerve(grp, len(counts) - 1)
    assert [len(X.level(n).all_generators()) for n in range(len(counts))] == counts
    for n, c in enumerate(counts):
        assert len(commuting_tuples_brute(grp.table, n)) == c


def test_constructions_validate():
    for X in (commuting_nerve(symmetric_group(3), 3), rep_nerve(quaternion_group(), 3), cech_nerve(simplicial_circle(2), 2)):
        assert X.validate().passed
        assert all(validate_identities(X.level(n)).passed for n in range(X.max_level + 1))


def test_rep_nerve_counts():
    G = symmetric_group(3)
    R = rep_nerve(G, 2)
    assert len(R.level(1).all_generators()) == 3
    orbits = set()
    for t in commuting_tuples_brute(G.table, 2):
        orbits.add(min(tuple(G.conjugate(g, a) for a in t) for g in range(G.order)))
    assert len(R.level(2).all_generators()) == len(orbits) == 8


def test_rep_of_abelian_group_is_hom():
    V = direct_product(cyclic_group(2), cyclic_group(2))
    H, R = commuting_nerve(V, 3), rep_nerve(V, 3)
    assert [sorted(H.level(n).all_generators()) for n in range(4)] == [sorted(R.level(n).all_generators()) for n in range(4)]


def test_space_maps():
    G = symmetric_group(3)
    Z2 = commuting_nerve(cyclic_group(2), 3)
    S3 = commuting_nerve(G, 3)
    assert nerve_map([0, 2], Z2, S3).check().passed
    assert hom_to_rep(G, S3, rep_nerve(G, 3)).check().passed


def test_products():
    S1 = simplicial_circle(3)
    assert [len(product(S1, point(3)).generators[d]) for d in range(3)] == [1, 1, 0]
    assert len(product(discrete_set("ab"), discrete_set("xy")).generators[0]) == 4
    T = product(S1, S1, N=2)
    assert [len(T.generators[d]) for d in range(3)] == [1, 3, 2]
    assert validate_identities(product(S1, S1, S1, N=3)).passed


def test_cech_nerve_levels():
    C = cech_nerve(simplicial_circle(3), 2)
    assert len(C.level(0).all_generators()) == 2
    h = homology(normalized_chains(C.level(1)))
    assert (h.describe(0), h.describe(1), h.describe(2)) == ("0", "Z^2", "Z")
    P = cech_nerve(point(2), 2)
    assert all(len(P.level(n).all_generators()) == 1 for n in range(3))


def test_read_complex_errors(tmp_path):
    good = tmp_path / "k.sc"
    good.write_text("# comment\n1 2\n\n2 3\n")
    assert read_complex(good).facets == (frozenset({1, 2}), frozenset({2, 3}))
    for body, line in (("1 2\n1 x\n", 2), ("1 2\n0 1\n", 2), ("# c\n3 3\n", 2)):
        bad = tmp_path / "bad.sc"
        bad.write_text(body)
        with pytest.raises(InputError, match=f"bad.sc:{line}:"):
            read_complex(bad)
    with pytest.raises(InputError):
        read_complex(tmp_path / "missing.sc")


def test_group_roundtrip_and_errors(tmp_path):
    G = quaternion_group()
    path = tmp_path / "q8.csv"
    write_group(G, path)
    assert read_group(path).table == G.table
    cases = {
        "order,2\n0,1\n1,x\n": 3,
        "order,2\n0,1\n1,0,1\n": 3,
        "size,2\n": 1,
        "order,2\n0,1\n1,5\n": 3,
    }
    for body, line in cases.items():
        path.write_text(body)
        with pytest.raises(InputError, match=f":{line}:"):
            read_group(path)
    path.write_text("order,2\n0,1\n0,1\n")
    with pytest.raises(InputError):
        read_group(path)


def test_group_axioms_of_builtins():
    for G in (cyclic_group(5), symmetric_group(3), quaternion_group()):
        for a, b, c in itertools.product(range(G.order), repeat=3):
            assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
        assert all(G.mul(0, a) == a for a in range(G.order))
