from math import comb

from suspsplit.constructions import commuting_nerve, cyclic_group, rep_nerve, symmetric_group
from suspsplit.filtration import (
    degeneracy_degree,
    filtration_stage,
    horizontal_decomposition,
    intersection_check,
    stage_quotient,
    summand,
    wedge_decomposition,
)

E, G = 0, 1


def test_degree_is_number_of_identity_entries():
    Z2 = commuting_nerve(cyclic_group(2), 4)
    for n in range(1, 5):
        X = Z2.level(n)
        for t in X.all_generators():
            assert degeneracy_degree(Z2, n, X.generator(t)) == t.count(E)
    assert degeneracy_degree(Z2, 2, Z2.level(2).generator((E, G))) == 1


def test_degree_of_iterated_degeneracy():
    S3 = commuting_nerve(symmetric_group(3), 3)
    y = S3.level(1).generator((3,))
    x = S3.hdeg(2, 1, S3.hdeg(1, 0, y))
    assert degeneracy_degree(S3, 3, x) == 2
    J, base = horizontal_decomposition(S3, 3, x.gen)
    assert J == (1, 0) and base == y


def test_stages_of_z2():
    Z2 = commuting_nerve(cyclic_group(2), 3)
    assert filtration_stage(Z2, 2, 0).members == frozenset(Z2.level(2).all_generators())
    assert filtration_stage(Z2, 2, 1).members == {(E, E), (E, G), (G, E)}
    assert not filtration_stage(Z2, 2, 3).members
    q = stage_quotient(Z2, 2, 0)
    assert q.pointed and q.basis(0) == [(G, G)]
    top = stage_quotient(Z2, 2, 2)
    assert not top.pointed and top.basis(0) == [(E, E)]


def test_singular_subspace_is_stage_one():
    for grp in (cyclic_group(2), symmetric_group(3)):
        X = commuting_nerve(grp, 3)
        for n in range(1, 4):
            expected = {t for t in X.level(n).all_generators() if E in t}
            assert filtration_stage(X, n, 1).members == expected


def test_wedge_for_s3():
    S3 = commuting_nerve(symmetric_group(3), 3)
    w = wedge_decomposition(S3, 2, 1)
    assert w.passed
    assert [J for J, _ in w.summands] == [(0,), (1,)]
    assert [len(m) for _, m in w.summands] == [5, 5]
    assert w.quotient_classes == 10
    one = wedge_decomposition(S3, 1, 0)
    assert one.multiplicity == 1 and one.summands[0][1] == frozenset(stage_quotient(S3, 1, 0).basis(0))


def test_wedge_multiplicities_everywhere(builtins):
    for X in builtins.values():
        for n in range(1, 5):
            w = wedge_decomposition(X, n, n - 1)
            assert w.multiplicity == n == comb(n, n - 1)


def test_summand_has_expected_parts():
    Z2 = commuting_nerve(cyclic_group(2), 2)
    s = summand(Z2, 2, (1, 0))
    assert s.numerator == {(E, E)} and not s.denominator


def test_intersections():
    Z2 = commuting_nerve(cyclic_group(2), 2)
    rep = intersection_check(Z2, 2, 1)
    assert rep.passed and rep.details["common_simplices"] == 1
    assert intersection_check(Z2, 1, 1).passed


def test_intersections_on_cech_circle(builtins):
    assert intersection_check(builtins["cech_circle"], 2, 1).passed


def test_rep_nerve_filtration_on_orbits():
    R = rep_nerve(symmetric_group(3), 3)
    for n in range(1, 4):
        for r in range(n):
            assert wedge_decomposition(R, n, r).passed
