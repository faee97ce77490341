"""Admissible sequences, their total order, and composite operators.

An admissible sequence ``J = (j_r, ..., j_1)`` is strictly decreasing.  Two
sequences of equal length compare by the first (leftmost, i.e. highest
position) entry where they differ; on admissible sequences this is a total
order.  ``chi(J)`` reverses ``J``, and ``d_{chi(J)} s_J`` is the identity.
"""
from __future__ import annotations

import enum
from itertools import combinations
from math import comb
from typing import Sequence

from .reports import Report
from .simplicial import FiniteSimplicialSet, SimplexRef, SimplicialMap, face, degeneracy
from .space import SimplicialSpace

AdmissibleSeq = tuple  # strictly decreasing tuple of non-negative ints


class SeqOrder(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def is_admissible_seq(seq: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(seq, seq[1:])) and all(i >= 0 for i in seq)


def compare(I: Sequence[int], J: Sequence[int]) -> SeqOrder:
    """Compare equal-length sequences ``(i_r, ..., i_1)`` and ``(j_r, ..., j_1)``.

    ``I < J`` when there is a position ``p`` with ``i_k = j_k`` for all
    ``k > p`` and ``i_p < j_p``.  Positions are numbered ``r`` down to ``1``
    from the left.
    """
    if len(I) != len(J):
        raise ValueError("only sequences of equal length are comparable")
    r = len(I)
    for p in range(r, 0, -1):
        a, b = I[r - p], J[r - p]
        if a != b:
            return SeqOrder.LESS if a < b else SeqOrder.GREATER
    return SeqOrder.EQUAL


def enumerate_admissible(max_index: int, r: int) -> list[tuple[int, ...]]:
    """All admissible sequences of length ``r`` with entries in ``0..max_index``, ascending.

    There are ``C(max_index + 1, r)`` of them.
    """
    if r < 0 or max_index < -1:
        raise ValueError("need r >= 0 and max_index >= -1")
    seqs = [tuple(reversed(c)) for c in combinations(range(max_index + 1), r)]
    # leftmost entry is the highest position, so the order is lexicographic
    return sorted(seqs)


def count_admissible(max_index: int, r: int) -> int:
    return comb(max_index + 1, r)


def chi(I: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(tuple(I)))


def composite_degeneracy(X: FiniteSimplicialSet, x: SimplexRef, J: Sequence[int]) -> SimplexRef:
    """``s_{j_r} ... s_{j_1}(x)``; ``j_1`` is applied first."""
    for j in reversed(tuple(J)):
        x = degeneracy(X, x, j)
    return x


def composite_face(X: FiniteSimplicialSet, x: SimplexRef, seq: Sequence[int]) -> SimplexRef:
    """``d_{seq[0]} ... d_{seq[-1]}(x)``; the last index is applied first."""
    if x.dim < len(seq):
        raise ValueError("more faces than the dimension allows")
    for i in reversed(tuple(seq)):
        x = face(X, x, i)
    return x


# -- horizontal versions on a simplicial space -------------------------------

def horizontal_degeneracy(space: SimplicialSpace, n: int, x: SimplexRef, J: Sequence[int]) -> SimplexRef:
    """Apply ``s_J`` to a simplex of level ``n``; lands in level ``n + len(J)``."""
    for j in reversed(tuple(J)):
        x = space.hdeg(n, j, x)
        n += 1
    return x


def horizontal_face(space: SimplicialSpace, n: int, x: SimplexRef, seq: Sequence[int]) -> SimplexRef:
    """Apply ``d_seq`` (last index first) to a simplex of level ``n``."""
    for i in reversed(tuple(seq)):
        if not 0 <= i <= n or n < 1:
            raise ValueError(f"invalid face index {i} on level {n}")
        x = space.hface(n, i, x)
        n -= 1
    return x


def is_horizontally_degenerate(space: SimplicialSpace, n: int, x: SimplexRef) -> bool:
    return any(space.hdeg(n - 1, i, space.hface(n, i, x)) == x for i in range(n))


def _level_simplices(X: FiniteSimplicialSet) -> list[SimplexRef]:
    out = []
    for d in range(X.truncation + 1):
        out.extend(X.simplices(d))
    return out


def triangularity_check(space: SimplicialSpace, n: int, r: int) -> Report:
    """Check ``d_chi(I) s_J x`` is ``x`` when ``I = J`` and degenerate when ``I < J``.

    Runs over all admissible ``I <= J`` of length ``r`` with entries in
    ``0..n-1`` and every simplex ``x`` of level ``n - r`` (vertically
    degenerate ones included).
    """
    if not 0 <= r <= n <= space.max_level:
        raise ValueError("need 0 <= r <= n <= max_level")
    rep = Report("triangularity", {"space": space.name, "n": n, "r": r})
    seqs = enumerate_admissible(n - 1, r)
    xs = _level_simplices(space.level(n - r))
    pairs = 0
    for a, I in enumerate(seqs):
        for J in seqs[a:]:
            pairs += 1
            for x in xs:
                y = horizontal_face(space, n, horizontal_degeneracy(space, n - r, x, J), chi(I))
                if I == J:
                    if y != x:
                        rep.violations.append({"I": I, "J": J, "x": repr(x), "got": repr(y)})
                elif not is_horizontally_degenerate(space, n - r, y):
                    rep.violations.append({"I": I, "J": J, "x": repr(x), "got": repr(y), "problem": "not degenerate"})
    rep.details.update(pairs=pairs, simplices=len(xs))
    return rep


def delta_components(space: SimplicialSpace, n: int, r: int) -> list[tuple[tuple[int, ...], SimplicialMap]]:
    """Components ``x -> d_chi(J)(x)`` of the product-of-faces map, in sequence order.

    For ``r = 0`` the single component is the identity.
    """
    if not 0 <= r <= n <= space.max_level:
        raise ValueError("need 0 <= r <= n <= max_level")
    X = space.level(n)
    out = []
    for J in enumerate_admissible(n - 1, r):
        images = {g: horizontal_face(space, n, X.generator(g), chi(J)) for g in X.all_generators()}
        out.append((J, SimplicialMap(X, space.level(n - r), images)))
    return out


def delta_filtration_check(space: SimplicialSpace, n: int, r: int) -> Report:
    """Every component sends degeneracy degree >= r + 1 to degree >= 1."""
    from .filtration import degeneracy_degree

    rep = Report("delta_restriction", {"space": space.name, "n": n, "r": r})
    X = space.level(n)
    members = [X.generator(g) for g in X.all_generators() if degeneracy_degree(space, n, X.generator(g)) >= r + 1]
    for J, f in delta_components(space, n, r):
        for x in members:
            y = f(x)
            if degeneracy_degree(space, n - r, y) < 1:
                rep.violations.append({"J": J, "x": repr(x), "image": repr(y)})
    rep.details["checked"] = len(members)
    return rep
