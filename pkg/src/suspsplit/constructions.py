"""Builders for the example simplicial sets and simplicial spaces.

* order complexes of abstract simplicial complexes,
* commuting nerves ``Hom(Z^n, G)`` and their conjugation quotients for finite
  groups given by Cayley tables,
* degreewise products and Cech nerves, which give levels that are not
  discrete.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import Hashable, Sequence

from .calculus import chi, composite_face
from .simplicial import FiniteSimplicialSet, SimplexRef, SimplicialMap
from .space import SimplicialSpace, SimplicialSpaceMap, discrete_space, discrete_space_map


class InputError(ValueError):
    """Malformed input file; the message carries the offending line number."""


# -- simplicial complexes and order complexes ------------------------------------

@dataclass(frozen=True)
class AbstractSimplicialComplex:
    facets: tuple[frozenset, ...]
    name: str = ""

    def __post_init__(self):
        if not self.facets:
            raise ValueError("a simplicial complex needs at least one facet")
        for f in self.facets:
            if not f:
                raise ValueError("empty facet")
            if any(not isinstance(v, int) or v < 1 for v in f):
                raise ValueError(f"vertex labels must be positive integers: {sorted(f)}")

    @classmethod
    def from_facets(cls, facets, name: str = "") -> "AbstractSimplicialComplex":
        return cls(tuple(frozenset(f) for f in facets), name)

    @property
    def vertices(self) -> list[int]:
        return sorted(set().union(*self.facets))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces(self, d: int) -> list[tuple[int, ...]]:
        """All ``d``-simplices as sorted vertex tuples, sorted."""
        out = set()
        for f in self.facets:
            out.update(itertools.combinations(sorted(f), d + 1))
        return sorted(out)

    def is_simplex(self, vertices) -> bool:
        s = set(vertices)
        return any(s <= f for f in self.facets)

    def disjoint_union(self, other: "AbstractSimplicialComplex", name: str = "") -> "AbstractSimplicialComplex":
        shift = max(self.vertices)
        moved = tuple(frozenset(v + shift for v in f) for f in other.facets)
        return AbstractSimplicialComplex(self.facets + moved, name or f"{self.name}+{other.name}")


def read_complex(path: str | Path) -> AbstractSimplicialComplex:
    """One facet per line, whitespace-separated positive integer labels; ``#`` comments."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            vs = [int(tok) for tok in s.split()]
        except ValueError:
            raise InputError(f"{path}:{lineno}: vertex labels must be integers: {s!r}") from None
        if any(v < 1 for v in vs):
            raise InputError(f"{path}:{lineno}: vertex labels must be positive")
        if len(set(vs)) != len(vs):
            raise InputError(f"{path}:{lineno}: repeated vertex in facet")
        facets.append(vs)
    if not facets:
        raise InputError(f"{path}: no facets")
    return AbstractSimplicialComplex.from_facets(facets, path.stem)


def order_complex(K: AbstractSimplicialComplex, N: int | None = None) -> FiniteSimplicialSet:
    """Weakly increasing vertex tuples supported on simplices of ``K``.

    Generators are the strictly increasing tuples; ``d_i`` deletes entry ``i``
    and ``s_i`` repeats it.
    """
    if N is None:
        N = K.dimension
    gens = [K.faces(d) if d <= K.dimension else [] for d in range(N + 1)]
    faces = {}
    for d in range(1, N + 1):
        for t in gens[d]:
            faces[t] = [SimplexRef((), t[:i] + t[i + 1:], d - 1) for i in range(d + 1)]
    return FiniteSimplicialSet(gens, faces, truncation=N, name=f"Delta({K.name})", complete=K.dimension <= N)


def tuple_to_simplex(t: Sequence[int]) -> SimplexRef:
    """Encode a weakly increasing tuple of ``Delta(K)`` in normal form."""
    t = tuple(t)
    if any(a > b for a, b in zip(t, t[1:])):
        raise ValueError("tuple is not weakly increasing")
    # position k (k >= 1) repeating position k-1 comes from s_{k-1}
    word = tuple(sorted((k - 1 for k in range(1, len(t)) if t[k] == t[k - 1]), reverse=True))
    gen = tuple(sorted(set(t)))
    return SimplexRef(word, gen, len(gen) - 1)


def simplex_to_tuple(x: SimplexRef) -> tuple[int, ...]:
    t = list(x.gen)
    for i in reversed(x.word):
        t.insert(i, t[i])
    return tuple(t)


def simplicial_complex_chains_oracle(K: AbstractSimplicialComplex):
    """Ordered simplicial chain complex of ``K`` itself (not of its order complex)."""
    from .homology import ChainComplex
    from .snf import SparseMatrix

    bases = {d: K.faces(d) for d in range(K.dimension + 1)}
    bases[-1] = ["<aug>"]
    boundaries = {0: SparseMatrix(1, len(bases[0]), {0: {k: 1 for k in range(len(bases[0]))}})}
    for d in range(1, K.dimension + 1):
        idx = {s: k for k, s in enumerate(bases[d - 1])}
        rows: dict[int, dict[int, int]] = {}
        for k, s in enumerate(bases[d]):
            for i in range(d + 1):
                rows.setdefault(idx[s[:i] + s[i + 1:]], {})[k] = (-1) ** i
        boundaries[d] = SparseMatrix(len(bases[d - 1]), len(bases[d]), rows)
    return ChainComplex(bases, boundaries, None, K.name)


BOUNDARY_TRIANGLE = AbstractSimplicialComplex.from_facets([{1, 2}, {1, 3}, {2, 3}], "boundary_triangle")
SPHERE2 = AbstractSimplicialComplex.from_facets([{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}], "boundary_tetrahedron")
RP2_6 = AbstractSimplicialComplex.from_facets(
    [{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}],
    "rp2_6",
)
POINT = AbstractSimplicialComplex.from_facets([{1}], "point")


def sample_complexes() -> dict[str, AbstractSimplicialComplex]:
    return {
        "boundary_triangle": BOUNDARY_TRIANGLE,
        "rp2_6": RP2_6,
        "sphere2": SPHERE2,
        "circle_plus_point": BOUNDARY_TRIANGLE.disjoint_union(POINT, "circle_plus_point"),
        "two_circles": BOUNDARY_TRIANGLE.disjoint_union(BOUNDARY_TRIANGLE, "two_circles"),
        "point": POINT,
    }


# -- finite groups ----------------------------------------------------------

class FiniteGroup:
    """A finite group from its Cayley table; element 0 is the identity."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = "", labels: Sequence[str] | None = None):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        self.name = name
        self.labels = tuple(labels) if labels else tuple(str(g) for g in range(self.order))
        self._validate()
        self.inverse = tuple(next(h for h in range(self.order) if self.table[g][h] == 0) for g in range(self.order))

    def _validate(self) -> None:
        m = self.order
        if m == 0 or any(len(row) != m for row in self.table):
            raise ValueError("Cayley table must be square and nonempty")
        if any(not 0 <= v < m for row in self.table for v in row):
            raise ValueError("Cayley table entries out of range")
        if any(self.table[0][g] != g or self.table[g][0] != g for g in range(m)):
            raise ValueError("element 0 is not the identity")
        for g in range(m):
            if 0 not in self.table[g]:
                raise ValueError(f"element {g} has no inverse")
        t = self.table
        for a in range(m):
            for b in range(m):
                ab = t[a][b]
                for c in range(m):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"not associative at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def conjugate(self, g: int, x: int) -> int:
        return self.table[self.table[g][x]][self.inverse[g]]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def read_group(path: str | Path) -> FiniteGroup:
    """CSV: first line ``order,m``, then ``m`` rows of ``m`` integers."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    if not lines:
        raise InputError(f"{path}:1: empty file")
    head = [s.strip() for s in lines[0].split(",")]
    if len(head) != 2 or head[0] != "order":
        raise InputError(f"{path}:1: expected header 'order,m'")
    try:
        m = int(head[1])
    except ValueError:
        raise InputError(f"{path}:1: order is not an integer") from None
    rows = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        try:
            row = [int(tok) for tok in line.split(",")]
        except ValueError:
            raise InputError(f"{path}:{lineno}: non-integer entry") from None
        if len(row) != m:
            raise InputError(f"{path}:{lineno}: expected {m} entries, got {len(row)}")
        if any(not 0 <= v < m for v in row):
            raise InputError(f"{path}:{lineno}: entry out of range 0..{m - 1}")
        rows.append(row)
    if len(rows) != m:
        raise InputError(f"{path}: expected {m} table rows, got {len(rows)}")
    try:
        return FiniteGroup(rows, path.stem)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def write_group(G: FiniteGroup, path: str | Path) -> None:
    lines = [f"order,{G.order}"] + [",".join(map(str, row)) for row in G.table]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def cyclic_group(m: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % m for b in range(m)] for a in range(m)], f"Z/{m}")


def group_from_elements(elements: Sequence, mul, name: str) -> FiniteGroup:
    """Cayley table of a concrete group; ``elements[0]`` must be the identity."""
    index = {e: k for k, e in enumerate(elements)}
    return FiniteGroup([[index[mul(a, b)] for b in elements] for a in elements], name, [str(e) for e in elements])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in range(G.order) for b in range(H.order)]
    return group_from_elements(pairs, lambda x, y: (G.mul(x[0], y[0]), H.mul(x[1], y[1])), f"{G.name}x{H.name}")


def symmetric_group(k: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(k)))
    # composition (p*q)(i) = p(q(i))
    return group_from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(k)), f"S_{k}")


def quaternion_group() -> FiniteGroup:
    # (sign, unit) with units 1, i, j, k
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]

    def mul(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return group_from_elements(elems, mul, "Q_8")


def commuting_tuples(G: FiniteGroup, n: int) -> list[tuple[int, ...]]:
    """Pairwise commuting ``n``-tuples in lexicographic order."""
    out: list[tuple[int, ...]] = [()]
    for _ in range(n):
        out = [t + (g,) for t in out for g in range(G.order) if all(G.commute(g, h) for h in t)]
    return out


def _bar_face(G: FiniteGroup, n: int, i: int, t: tuple[int, ...]) -> tuple[int, ...]:
    if i == 0:
        return t[1:]
    if i == n:
        return t[:-1]
    return t[: i - 1] + (G.mul(t[i - 1], t[i]),) + t[i + 1:]


def _bar_deg(i: int, t: tuple[int, ...]) -> tuple[int, ...]:
    return t[:i] + (0,) + t[i:]


def commuting_nerve(G: FiniteGroup, N: int) -> SimplicialSpace:
    """``Hom(Z^n, G)`` for ``n <= N`` with bar-construction operators."""
    levels = [commuting_tuples(G, n) for n in range(N + 1)]
    return discrete_space(
        levels,
        lambda n, i, t: _bar_face(G, n, i, t),
        lambda n, i, t: _bar_deg(i, t),
        name=f"Hom(Z^*, {G.name})",
    )


def singular_subspace(G: FiniteGroup, n: int) -> set[tuple[int, ...]]:
    """Commuting tuples with at least one identity entry."""
    return {t for t in commuting_tuples(G, n) if 0 in t}


def _canonical(G: FiniteGroup, t: tuple[int, ...]) -> tuple[int, ...]:
    return min(tuple(G.conjugate(g, x) for x in t) for g in range(G.order))


def rep_nerve(G: FiniteGroup, N: int, check: bool = True) -> SimplicialSpace:
    """Orbits of commuting tuples under simultaneous conjugation.

    Each orbit is labelled by its lexicographically least member.  With
    ``check`` the horizontal operators are verified to be constant on orbits.
    """
    orbits = []
    for n in range(N + 1):
        reps = sorted({_canonical(G, t) for t in commuting_tuples(G, n)})
        orbits.append(reps)
    if check:
        for n in range(N + 1):
            for t in commuting_tuples(G, n):
                c = _canonical(G, t)
                for i in range(n + 1):
                    if n >= 1 and _canonical(G, _bar_face(G, n, i, t)) != _canonical(G, _bar_face(G, n, i, c)):
                        raise ValueError(f"face d_{i} is not constant on the orbit of {t}")
                    if n < N and _canonical(G, _bar_deg(i, t)) != _canonical(G, _bar_deg(i, c)):
                        raise ValueError(f"degeneracy s_{i} is not constant on the orbit of {t}")
    return discrete_space(
        orbits,
        lambda n, i, t: _canonical(G, _bar_face(G, n, i, t)),
        lambda n, i, t: _canonical(G, _bar_deg(i, t)),
        name=f"Rep(Z^*, {G.name})",
    )


def hom_to_rep(G: FiniteGroup, hom: SimplicialSpace, rep: SimplicialSpace) -> SimplicialSpaceMap:
    return discrete_space_map(hom, rep, lambda n, t: _canonical(G, t))


def nerve_map(phi: Sequence[int], source: SimplicialSpace, target: SimplicialSpace) -> SimplicialSpaceMap:
    """Map of commuting nerves induced by a homomorphism given as an element table."""
    return discrete_space_map(source, target, lambda n, t: tuple(phi[g] for g in t))


def is_homomorphism(phi: Sequence[int], G: FiniteGroup, H: FiniteGroup) -> bool:
    return all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b]) for a in range(G.order) for b in range(G.order))


def simplicial_set_as_space(X: FiniteSimplicialSet, N_h: int) -> SimplicialSpace:
    """View a simplicial set as a simplicial space with discrete levels."""
    levels = [X.simplices(n) for n in range(N_h + 1)]
    return discrete_space(
        levels,
        lambda n, i, x: X.face(x, i),
        lambda n, i, x: X.degeneracy(x, i),
        name=f"disc({X.name})",
    )


# -- products and Cech nerves -------------------------------------------------

def _normalize_tuple(factors: Sequence[FiniteSimplicialSet], simps: Sequence[SimplexRef]) -> SimplexRef:
    common = reduce(lambda a, b: a & b, (set(s.word) for s in simps))
    J = tuple(sorted(common, reverse=True))
    if not J:
        return SimplexRef((), tuple(simps), simps[0].dim)
    base = tuple(composite_face(X, s, chi(J)) for X, s in zip(factors, simps))
    return SimplexRef(J, base, base[0].dim)


def product(*factors: FiniteSimplicialSet, N: int | None = None, name: str = "") -> FiniteSimplicialSet:
    """Degreewise product; a tuple is nondegenerate iff no ``s_i`` fixes every coordinate."""
    if not factors:
        raise ValueError("product of no factors")
    if N is None:
        N = min(X.truncation for X in factors)
    if any(X.truncation < N for X in factors):
        raise ValueError("factors are truncated below the requested dimension")
    gens: list[list] = []
    faces = {}
    for d in range(N + 1):
        layer = []
        for combo in itertools.product(*(X.simplices(d) for X in factors)):
            if reduce(lambda a, b: a & b, (set(s.word) for s in combo)):
                continue
            layer.append(combo)
            if d >= 1:
                faces[combo] = [
                    _normalize_tuple(factors, [X.face(s, i) for X, s in zip(factors, combo)]) for i in range(d + 1)
                ]
        gens.append(layer)
    top = sum(max(X.dimension, 0) for X in factors)
    complete = all(X.complete for X in factors) and top <= N
    nm = name or " x ".join(X.name or "?" for X in factors)
    return FiniteSimplicialSet(gens, faces, truncation=N, name=nm, complete=complete)


def simplicial_circle(N: int = 4) -> FiniteSimplicialSet:
    """One vertex ``v`` and one edge ``e`` with both faces ``v``."""
    return FiniteSimplicialSet([["v"], ["e"]], {"e": ["v", "v"]}, truncation=N, name="S1", complete=N >= 1)


def point(N: int = 0) -> FiniteSimplicialSet:
    return FiniteSimplicialSet([["pt"]], truncation=N, name="pt")


def discrete_set(labels: Sequence[Hashable], N: int = 0, name: str = "") -> FiniteSimplicialSet:
    return FiniteSimplicialSet([list(labels)], truncation=N, name=name or f"{len(labels)} points")


def cech_nerve(Z: FiniteSimplicialSet, N_h: int, N_v: int | None = None) -> SimplicialSpace:
    """Level ``n`` is ``Z^{n+1}``; ``d_i`` deletes and ``s_i`` repeats coordinate ``i``."""
    if not Z.all_generators():
        raise ValueError("the Cech nerve needs a nonempty simplicial set")
    N_v = Z.truncation if N_v is None else N_v
    levels = [product(*([Z] * (n + 1)), N=N_v, name=f"{Z.name}^{n + 1}") for n in range(N_h + 1)]

    def coord_map(src: FiniteSimplicialSet, tgt: FiniteSimplicialSet, pick) -> SimplicialMap:
        images = {}
        for g in src.all_generators():
            images[g] = _normalize_tuple([Z] * len(pick(g)), pick(g))
        return SimplicialMap(src, tgt, images)

    faces = {}
    degs = {}
    for n in range(N_h + 1):
        for i in range(n + 1):
            if n >= 1:
                faces[(n, i)] = coord_map(levels[n], levels[n - 1], lambda g, i=i: g[:i] + g[i + 1:])
            if n < N_h:
                degs[(n, i)] = coord_map(levels[n], levels[n + 1], lambda g, i=i: g[: i + 1] + g[i:])
    return SimplicialSpace(levels, faces, degs, name=f"Cech({Z.name})")


def builtin_spaces(max_level: int = 4, max_dim: int = 3) -> dict[str, SimplicialSpace]:
    """The example spaces every verifier is run against."""
    Z2 = cyclic_group(2)
    S3 = symmetric_group(3)
    Q8 = quaternion_group()
    V4 = direct_product(Z2, Z2)
    return {
        "hom_z2": commuting_nerve(Z2, max_level),
        "hom_klein": commuting_nerve(V4, max_level),
        "hom_s3": commuting_nerve(S3, max_level),
        "hom_q8": commuting_nerve(Q8, max_level),
        "rep_s3": rep_nerve(S3, max_level),
        "rep_q8": rep_nerve(Q8, max_level),
        "disc_boundary_triangle": simplicial_set_as_space(order_complex(BOUNDARY_TRIANGLE, max_level), max_level),
        "disc_rp2": simplicial_set_as_space(order_complex(RP2_6, max_level), max_level),
        "cech_circle": cech_nerve(simplicial_circle(max_dim), max_level),
    }


__all__ = [
    "AbstractSimplicialComplex",
    "FiniteGroup",
    "InputError",
    "builtin_spaces",
    "cech_nerve",
    "commuting_nerve",
    "commuting_tuples",
    "cyclic_group",
    "direct_product",
    "hom_to_rep",
    "nerve_map",
    "order_complex",
    "product",
    "quaternion_group",
    "read_complex",
    "read_group",
    "rep_nerve",
    "simplicial_circle",
    "simplicial_set_as_space",
    "symmetric_group",
]
