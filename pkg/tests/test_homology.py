import pytest

from oracles import complex_homology
from suspsplit.constructions import (
    BOUNDARY_TRIANGLE,
    RP2_6,
    SPHERE2,
    commuting_nerve,
    cyclic_group,
    discrete_set,
    order_complex,
    point,
    product,
    simplicial_circle,
    symmetric_group,
)
from suspsplit.filtration import stage_quotient
from suspsplit.homology import (
    AUG,
    ChainMapError,
    direct_sum,
    homology,
    homology_with_basis,
    induced_map,
    mapping_cone,
    normalized_chains,
    simplicial_chain_map,
    sum_groups,
)
from suspsplit.simplicial import SimplexRef


def _groups(h):
    return {d: h.group(d) for d in h.degrees}


def test_point_reduced_is_zero():
    C = normalized_chains(point(0))
    assert homology(C).is_zero()
    assert C.bases[-1] == [AUG]


def test_circle_chains():
    C = normalized_chains(order_complex(BOUNDARY_TRIANGLE))
    assert C.rank(0) == 3 and C.rank(1) == 3
    assert C.boundary(1).to_dense() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    h = homology(C)
    assert h.describe(0) == "0" and h.describe(1) == "Z"


@pytest.mark.parametrize("K", [BOUNDARY_TRIANGLE, RP2_6, SPHERE2], ids=lambda K: K.name)
def test_order_complex_matches_oracle(K):
    h = homology(normalized_chains(order_complex(K)))
    oracle = complex_homology([set(f) for f in K.facets])
    assert {d: h.group(d) for d in oracle} == oracle


def test_discrete_points():
    assert homology(normalized_chains(discrete_set("abcde"))).describe(0) == "Z^4"


def test_torus_and_unreliable_top_degree():
    S1 = simplicial_circle(3)
    T = product(S1, S1, N=3)
    assert [len(T.generators[d]) for d in range(3)] == [1, 3, 2]
    h = homology(normalized_chains(T))
    assert (h.describe(0), h.describe(1), h.describe(2)) == ("0", "Z^2", "Z")
    assert h.reliable(2)
    truncated = homology(normalized_chains(product(S1, S1, S1, N=2)))
    assert not truncated.reliable(2) and truncated.reliable(1)


def test_relative_chains_of_stage_quotient():
    S3 = commuting_nerve(symmetric_group(3), 2)
    q = stage_quotient(S3, 2, 1)
    C = normalized_chains(q)
    assert C.rank(0) == 10 and -1 not in C.bases
    assert homology(C).describe(0) == "Z^10"
    unreduced = normalized_chains(q, reduced=False)
    assert homology(unreduced).describe(0) == "Z^11"


def test_euler_characteristic():
    for K in (BOUNDARY_TRIANGLE, RP2_6, SPHERE2):
        C = normalized_chains(order_complex(K), reduced=False)
        h = homology(C)
        assert C.euler_characteristic() == sum((-1) ** d * h.betti[d] for d in h.degrees)


def test_identity_induces_identity():
    X = order_complex(RP2_6)
    C = normalized_chains(X)
    f = simplicial_chain_map(lambda x: x, C, C, _whole(X))
    ind = induced_map(f)
    assert ind.is_isomorphism()
    assert ind.degrees[1].torsion == [[1]]


def _whole(X):
    from suspsplit.filtration import PointedQuotient

    return PointedQuotient(X)


def test_collapse_surjects_on_h0():
    Z2 = commuting_nerve(cyclic_group(2), 3)
    X = Z2.level(3)
    src = normalized_chains(X)
    q = stage_quotient(Z2, 3, 0)
    tgt = normalized_chains(q)
    f = simplicial_chain_map(lambda x: x, src, tgt, q)
    M = induced_map(f, cone=False).degrees[0].free
    assert len(M) == 1 and len(M[0]) == 7
    assert any(M[0])


def test_face_map_on_unreduced_h0():
    Z2 = commuting_nerve(cyclic_group(2), 1)
    X1, X0 = Z2.level(1), Z2.level(0)
    src = normalized_chains(X1, reduced=False)
    tgt = normalized_chains(X0, reduced=False)
    f = simplicial_chain_map(lambda x: Z2.hface(1, 0, x), src, tgt, _whole(X0))
    hs, ht = homology_with_basis(src), homology_with_basis(tgt)
    M = induced_map(f, hs, ht).degrees[0].free
    assert [abs(v) for v in M[0]] == [1, 1]


def test_bad_chain_map_is_rejected():
    X = order_complex(BOUNDARY_TRIANGLE)
    C = normalized_chains(X)
    swap = {(1,): (2,), (2,): (1,)}

    def fn(x):
        return SimplexRef((), swap.get(x.gen, x.gen), x.gdim)

    with pytest.raises(ChainMapError):
        simplicial_chain_map(fn, C, C, _whole(X))


def test_direct_sum_and_cone():
    a = normalized_chains(order_complex(BOUNDARY_TRIANGLE))
    b = normalized_chains(order_complex(RP2_6))
    s, offsets = direct_sum([a, b])
    assert homology(s) == sum_groups([homology(a), homology(b)])
    assert offsets[1][1] == a.rank(1)
    f = simplicial_chain_map(lambda x: x, a, a, _whole(order_complex(BOUNDARY_TRIANGLE)))
    assert homology(mapping_cone(f)).is_zero()
