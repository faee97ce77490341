"""Brute-force references that share no code with the package.

Everything here works on plain lists and tuples: dense integer Smith form,
simplicial-complex homology, the bar complex of a finite group, and
degeneracy words evaluated as monotone surjections.
"""
from __future__ import annotations

import itertools
from math import gcd


# -- dense Smith normal form ------------------------------------------------------

def dense_invariants(M: list[list[int]]) -> list[int]:
    """Nonzero invariant factors by naive Euclidean elimination on a copy."""
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] and (i == t or j == t)]
            _, pi, pj = min(nz)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        out.append(abs(A[t][t]))
        t += 1
    return out


def determinantal_invariants(M: list[list[int]]) -> list[int]:
    """Invariant factors as quotients of gcds of k-minors; only for small matrices."""
    m = len(M)
    n = len(M[0]) if m else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, _det([[M[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def _det(A: list[list[int]]) -> int:
    if len(A) == 1:
        return A[0][0]
    return sum((-1) ** j * A[0][j] * _det([row[:j] + row[j + 1:] for row in A[1:]]) for j in range(len(A)) if A[0][j])


def homology_from_boundaries(ranks: dict[int, int], boundary: dict[int, list[list[int]]]) -> dict[int, tuple[int, tuple[int, ...]]]:
    """``{d: (betti, torsion)}`` from dense boundary matrices ``C_d -> C_{d-1}``."""
    inv = {d: dense_invariants(boundary[d]) if boundary.get(d) and ranks.get(d - 1) else [] for d in ranks}
    out = {}
    for d, n in ranks.items():
        b = n - len(inv.get(d, [])) - len(inv.get(d + 1, []))
        out[d] = (b, tuple(sorted(v for v in inv.get(d + 1, []) if v > 1)))
    return out


# -- simplicial complexes -----------------------------------------------------------

def complex_homology(facets: list[set[int]], reduced: bool = True) -> dict[int, tuple[int, tuple[int, ...]]]:
    faces: dict[int, set] = {}
    for f in facets:
        s = sorted(f)
        for k in range(1, len(s) + 1):
            for c in itertools.combinations(s, k):
                faces.setdefault(k - 1, set()).add(c)
    top = max(faces)
    basis = {d: sorted(faces[d]) for d in range(top + 1)}
    if reduced:
        basis[-1] = [()]
    idx = {d: {s: i for i, s in enumerate(b)} for d, b in basis.items()}
    bd = {}
    for d in range(0 if reduced else 1, top + 1):
        M = [[0] * len(basis[d]) for _ in basis[d - 1]]
        for j, s in enumerate(basis[d]):
            for i in range(len(s)):
                M[idx[d - 1][s[:i] + s[i + 1:]]][j] += (-1) ** i
        bd[d] = M
    return homology_from_boundaries({d: len(b) for d, b in basis.items()}, bd)


# -- groups -----------------------------------------------------------------------

def bar_group_homology(table: list[list[int]], top: int) -> dict[int, tuple[int, tuple[int, ...]]]:
    """Unreduced integral homology of a finite group from the normalized bar complex.

    ``C_k`` has basis the ``k``-tuples of non-identity elements (identity is 0)
    and ``d[g1|...|gk] = [g2|...] + sum (-1)^i [..|g_i g_{i+1}|..] + (-1)^k [..|g_{k-1}]``.
    """
    m = len(table)
    nonid = list(range(1, m))
    basis = {k: list(itertools.product(nonid, repeat=k)) for k in range(top + 2)}
    idx = {k: {t: i for i, t in enumerate(b)} for k, b in basis.items()}
    bd = {}
    for k in range(1, top + 2):
        M = [[0] * len(basis[k]) for _ in basis[k - 1]]
        for j, t in enumerate(basis[k]):
            terms = [(t[1:], 1)]
            for i in range(k - 1):
                prod = table[t[i]][t[i + 1]]
                if prod:
                    terms.append((t[:i] + (prod,) + t[i + 2:], (-1) ** (i + 1)))
            terms.append((t[:-1], (-1) ** k))
            for face, sign in terms:
                M[idx[k - 1][face]][j] += sign
        bd[k] = M
    ranks = {k: len(b) for k, b in basis.items()}
    h = homology_from_boundaries(ranks, bd)
    return {k: h[k] for k in range(top + 1)}


def commuting_tuples_brute(table: list[list[int]], n: int) -> list[tuple[int, ...]]:
    m = len(table)
    return [t for t in itertools.product(range(m), repeat=n) if all(table[a][b] == table[b][a] for a in t for b in t)]


def nondegenerate_commuting(table: list[list[int]], n: int) -> int:
    return sum(1 for t in commuting_tuples_brute(table, n) if 0 not in t)


# -- degeneracy words as surjections -------------------------------------------------

def word_as_surjection(word: tuple[int, ...], base: int) -> tuple[int, ...]:
    """The surjection ``[base + len(word)] -> [base]`` of ``s_{w_1} ... s_{w_k}`` applied to a ``base``-simplex.

    ``s_j`` on simplices precomposes with ``sigma_j: [m+1] -> [m]``, which
    hits ``j`` twice; the rightmost letter acts first.
    """
    f = tuple(range(base + 1))
    for j in reversed(word):
        f = tuple(f[k if k <= j else k - 1] for k in range(len(f) + 1))
    return f


def vertex_tuple_degenerate(t: tuple[int, ...]) -> bool:
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))
