"""Normalized chains, integer homology, and induced maps.

Reduced chains of an unpointed object carry an augmentation in degree -1;
reduced chains of a pointed quotient ``A / B`` are the relative chains of
``(A, B)``.  Homology bases come from the Smith transforms of the boundary
matrices, so induced maps can be written as integer matrices on the free
parts and as residues on the torsion parts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .filtration import PointedQuotient
from .simplicial import FiniteSimplicialSet, SimplexRef
from .snf import SparseMatrix, invariant_factors, is_unimodular, smith_normal_form

AUG = "<aug>"
BASEPOINT = "<*>"


class ChainMapError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class ChainComplex:
    """Free complex with ``boundaries[d]: C_d -> C_{d-1}`` as sparse matrices.

    ``reliable_below``: homology in degrees ``>=`` this value may be an
    artifact of truncation (``None`` when every degree is exact).
    """

    bases: dict[int, list[Hashable]]
    boundaries: dict[int, SparseMatrix]
    reliable_below: int | None = None
    label: str = ""
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {d: {b: k for k, b in enumerate(bs)} for d, bs in self.bases.items()}
        for d in self.degrees:
            B = self.boundary(d)
            if B.shape != (self.rank(d - 1), self.rank(d)):
                raise ValueError(f"boundary in degree {d} has shape {B.shape}")

    @property
    def degrees(self) -> list[int]:
        return sorted(self.bases)

    def rank(self, d: int) -> int:
        return len(self.bases.get(d, ()))

    def index(self, d: int, label: Hashable) -> int:
        return self._index[d][label]

    def has(self, d: int, label: Hashable) -> bool:
        return label in self._index.get(d, {})

    def boundary(self, d: int) -> SparseMatrix:
        B = self.boundaries.get(d)
        if B is None:
            return SparseMatrix.zeros(self.rank(d - 1), self.rank(d))
        return B

    def check(self) -> None:
        """Raise unless every composite of consecutive boundaries vanishes."""
        for d in self.degrees:
            if not (self.boundary(d) @ self.boundary(d + 1)).is_zero():
                raise ValueError(f"boundary squares to a nonzero map in degree {d}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.rank(d) for d in self.degrees)


def direct_sum(parts: Sequence[ChainComplex], label: str = "") -> tuple[ChainComplex, list[dict[int, int]]]:
    """Direct sum with labels ``(k, label)``; also returns per-part degree offsets."""
    degrees = sorted({d for c in parts for d in c.degrees})
    bases: dict[int, list] = {d: [] for d in degrees}
    offsets: list[dict[int, int]] = []
    for k, c in enumerate(parts):
        offsets.append({d: len(bases[d]) for d in degrees})
        for d in degrees:
            bases[d].extend((k, b) for b in c.bases.get(d, ()))
    boundaries = {}
    for d in degrees:
        rows: dict[int, dict[int, int]] = {}
        for k, c in enumerate(parts):
            ro, co = offsets[k].get(d - 1, 0), offsets[k][d]
            for i, row in c.boundary(d).rows.items():
                rows[ro + i] = {co + j: v for j, v in row.items()}
        boundaries[d] = SparseMatrix(len(bases.get(d - 1, ())), len(bases[d]), rows)
    rel = [c.reliable_below for c in parts if c.reliable_below is not None]
    return ChainComplex(bases, boundaries, min(rel) if rel else None, label), offsets


def normalized_chains(obj: FiniteSimplicialSet | PointedQuotient, reduced: bool = True) -> ChainComplex:
    """Normalized chains on nondegenerate simplices; degenerate faces and collapsed faces vanish."""
    q = obj if isinstance(obj, PointedQuotient) else PointedQuotient(obj)
    X = q.ambient
    top = X.truncation
    bases: dict[int, list] = {d: q.basis(d) for d in range(top + 1)}
    basepoint = q.pointed and not reduced
    if basepoint:
        bases[0] = [BASEPOINT] + bases[0]
    augmented = reduced and not q.pointed
    if augmented:
        bases[-1] = [AUG]
    index = {d: {b: k for k, b in enumerate(bs)} for d, bs in bases.items()}
    boundaries = {}
    if augmented:
        boundaries[0] = SparseMatrix(1, len(bases[0]), {0: {k: 1 for k in range(len(bases[0]))}} if bases[0] else {})
    for d in range(1, top + 1):
        rows: dict[int, dict[int, int]] = {}
        for k, g in enumerate(bases[d]):
            for i, f in enumerate(X.face_table(g)):
                if f.word:
                    continue
                if f.gen in q.denominator:
                    if basepoint and d == 1:
                        target = 0
                    else:
                        continue
                else:
                    target = index[d - 1].get(f.gen)
                    if target is None:
                        raise ValueError(f"face {f!r} of {g!r} leaves the numerator")
                row = rows.setdefault(target, {})
                row[k] = row.get(k, 0) + (-1) ** i
        boundaries[d] = SparseMatrix(len(bases[d - 1]), len(bases[d]), rows)
    C = ChainComplex(bases, boundaries, None if X.complete else top, q.label or X.name)
    C.check()
    return C


# -- homology ----------------------------------------------------------------

@dataclass
class HomologyGroups:
    """Betti numbers and torsion invariant factors per degree."""

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]]
    reliable_below: int | None = None

    @property
    def degrees(self) -> list[int]:
        return sorted(self.betti)

    def group(self, d: int) -> tuple[int, tuple[int, ...]]:
        return self.betti.get(d, 0), self.torsion.get(d, ())

    def is_zero(self, degrees: Sequence[int] | None = None) -> bool:
        ds = self.degrees if degrees is None else degrees
        return all(self.group(d) == (0, ()) for d in ds)

    def reliable(self, d: int) -> bool:
        return self.reliable_below is None or d < self.reliable_below

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomologyGroups):
            return NotImplemented
        ds = set(self.degrees) | set(other.degrees)
        return all(self.group(d) == other.group(d) for d in ds)

    def describe(self, d: int) -> str:
        b, t = self.group(d)
        parts = []
        if b:
            parts.append("Z" if b == 1 else f"Z^{b}")
        parts.extend(f"Z/{k}" for k in t)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        out = {}
        for d in self.degrees:
            if d < 0 and self.group(d) == (0, ()):
                continue
            out[str(d)] = {
                "group": self.describe(d),
                "betti": self.betti[d],
                "torsion": list(self.torsion.get(d, ())),
                "reliable": self.reliable(d),
            }
        return out

    def __str__(self) -> str:
        return ", ".join(f"H{d}={self.describe(d)}" for d in self.degrees if d >= 0 or self.group(d) != (0, ()))


def sum_groups(groups: Sequence[HomologyGroups], shift: int = 0) -> HomologyGroups:
    """Direct sum of graded groups, optionally shifting degrees up by ``shift``."""
    betti: dict[int, int] = {}
    tors: dict[int, list[int]] = {}
    rel = []
    for G in groups:
        for d in G.degrees:
            betti[d + shift] = betti.get(d + shift, 0) + G.betti[d]
            tors.setdefault(d + shift, []).extend(G.torsion.get(d, ()))
        if G.reliable_below is not None:
            rel.append(G.reliable_below + shift)
    torsion = {d: tuple(invariant_factors(ts)) for d, ts in tors.items()}
    return HomologyGroups(betti, torsion, min(rel) if rel else None)


def homology(C: ChainComplex) -> HomologyGroups:
    ranks = {}
    invs = {}
    for d in C.degrees:
        res = smith_normal_form(C.boundary(d))
        ranks[d] = res.rank
        invs[d] = res.invariants
    betti = {}
    torsion = {}
    for d in C.degrees:
        betti[d] = C.rank(d) - ranks[d] - ranks.get(d + 1, 0)
        torsion[d] = tuple(v for v in invs.get(d + 1, ()) if v > 1)
    return HomologyGroups(betti, torsion, C.reliable_below)


@dataclass
class DegreeBasis:
    """Generators of ``H_d`` and the map from cycles to coordinates."""

    degree: int
    free_gens: list[dict[int, int]]
    torsion_gens: list[dict[int, int]]
    torsion_orders: list[int]
    _P: SparseMatrix
    _W: list[int]
    _torsion_rows: list[int]
    _T_inv: SparseMatrix
    _kernel_cols: list[int]
    _pivot_cols: list[int]

    def coordinates(self, z: dict[int, int]) -> tuple[list[int], list[int]]:
        """Free coordinates and torsion residues of the cycle ``z``."""
        c = self._P.matvec(z)
        tors = [c.get(i, 0) % o for i, o in zip(self._torsion_rows, self.torsion_orders)]
        cw = {k: c[w] for k, w in enumerate(self._W) if c.get(w)}
        u = self._T_inv.matvec(cw)
        if any(u.get(p) for p in self._pivot_cols):
            raise ValueError("coordinates requested for a chain that is not a cycle")
        free = [u.get(k, 0) for k in self._kernel_cols]
        return free, tors


@dataclass
class HomologyWithBasis:
    groups: HomologyGroups
    bases: dict[int, DegreeBasis]
    complex: ChainComplex


def homology_with_basis(C: ChainComplex) -> HomologyWithBasis:
    """Homology together with explicit cycle generators in each degree."""
    bases = {}
    betti = {}
    torsion = {}
    for d in C.degrees:
        n = C.rank(d)
        up = smith_normal_form(C.boundary(d + 1), left=True)
        P, P_inv = up.P, up.P_inv
        pivot_rows = {i: abs(v) for i, _, v in up.pivots}
        W = [i for i in range(n) if i not in pivot_rows]
        torsion_rows = sorted((i for i, v in pivot_rows.items() if v > 1), key=lambda i: (pivot_rows[i], i))
        Pcols = P_inv.columns()
        down = C.boundary(d)
        A = SparseMatrix.from_columns(down.nrows, [down.matvec(Pcols[w]) for w in W])
        kr = smith_normal_form(A, right=True)
        pivot_cols = sorted(j for _, j, _ in kr.pivots)
        pc = set(pivot_cols)
        kernel_cols = [k for k in range(len(W)) if k not in pc]
        Tcols = kr.Q.columns()
        free_gens = []
        for k in kernel_cols:
            vec: dict[int, int] = {}
            for a, t in Tcols[k].items():
                for i, v in Pcols[W[a]].items():
                    vec[i] = vec.get(i, 0) + t * v
            free_gens.append({i: v for i, v in vec.items() if v})
        torsion_gens = [dict(Pcols[i]) for i in torsion_rows]
        orders = [pivot_rows[i] for i in torsion_rows]
        bases[d] = DegreeBasis(d, free_gens, torsion_gens, orders, P, W, torsion_rows, kr.Q_inv, kernel_cols, pivot_cols)
        betti[d] = len(free_gens)
        torsion[d] = tuple(invariant_factors(orders)) if orders else ()
    return HomologyWithBasis(HomologyGroups(betti, torsion, C.reliable_below), bases, C)


# -- chain maps and induced maps -----------------------------------------------

@dataclass
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    matrices: dict[int, SparseMatrix]

    def at(self, d: int) -> SparseMatrix:
        M = self.matrices.get(d)
        if M is None:
            return SparseMatrix.zeros(self.target.rank(d), self.source.rank(d))
        return M

    def check(self) -> None:
        for d in sorted(set(self.source.degrees) | set(self.target.degrees)):
            lhs = self.target.boundary(d) @ self.at(d)
            rhs = self.at(d - 1) @ self.source.boundary(d)
            diff = lhs - rhs
            if not diff.is_zero():
                col = next(j for row in diff.rows.values() for j in row)
                raise ChainMapError(
                    f"candidate chain map does not commute with the boundary in degree {d}",
                    witness=self.source.bases[d][col],
                )

    def compose(self, first: "ChainMap") -> "ChainMap":
        """``self`` after ``first``."""
        ds = set(first.source.degrees)
        return ChainMap(first.source, self.target, {d: self.at(d) @ first.at(d) for d in ds})


def simplicial_chain_map(
    fn: Callable[[SimplexRef], SimplexRef | None],
    source: ChainComplex,
    target: ChainComplex,
    target_obj: PointedQuotient,
    source_obj: PointedQuotient | None = None,
) -> ChainMap:
    """Chain map of a level map between normalized complexes.

    ``fn`` sends a generator (as a :class:`SimplexRef`) of the source ambient
    set to a simplex of the target ambient set, or ``None`` for the
    basepoint.  Degenerate images and images in the target's denominator are
    dropped.
    """
    mats = {}
    for d in source.degrees:
        if d < 0:
            if target.has(-1, AUG) and source.has(-1, AUG):
                mats[d] = SparseMatrix(1, 1, {0: {0: 1}})
            continue
        rows: dict[int, dict[int, int]] = {}
        for k, g in enumerate(source.bases[d]):
            if g == BASEPOINT:
                if target.has(0, BASEPOINT):
                    rows.setdefault(target.index(0, BASEPOINT), {})[k] = 1
                continue
            gdim = source_obj.ambient.gdim(g) if source_obj is not None else d
            y = fn(SimplexRef((), g, gdim))
            if y is None or y.word:
                if y is None and d == 0 and target.has(0, BASEPOINT):
                    rows.setdefault(target.index(0, BASEPOINT), {})[k] = 1
                continue
            if y.gen in target_obj.denominator:
                if d == 0 and target.has(0, BASEPOINT):
                    rows.setdefault(target.index(0, BASEPOINT), {})[k] = 1
                continue
            if not target.has(d, y.gen):
                raise ChainMapError(f"image {y!r} of {g!r} is not in the target", witness=g)
            rows.setdefault(target.index(d, y.gen), {})[k] = 1
        mats[d] = SparseMatrix(target.rank(d), source.rank(d), rows)
    f = ChainMap(source, target, mats)
    f.check()
    return f


def stack_maps(source: ChainComplex, target: ChainComplex, parts: Sequence[ChainMap], offsets: Sequence[dict[int, int]]) -> ChainMap:
    """Combine maps into the parts of a direct sum into one map into the sum."""
    mats = {}
    for d in source.degrees:
        rows: dict[int, dict[int, int]] = {}
        for f, off in zip(parts, offsets):
            o = off.get(d)
            if o is None:
                continue
            for i, row in f.at(d).rows.items():
                rows[o + i] = dict(row)
        mats[d] = SparseMatrix(target.rank(d), source.rank(d), rows)
    return ChainMap(source, target, mats)


@dataclass
class DegreeMap:
    free: list[list[int]]          # rows: target free coords, cols: source free gens
    free_to_torsion: list[list[int]]
    torsion: list[list[int]]       # rows: target torsion coords, cols: source torsion gens
    torsion_to_free: list[list[int]]


@dataclass
class InducedMap:
    source: HomologyWithBasis
    target: HomologyWithBasis
    degrees: dict[int, DegreeMap]
    cone_acyclic: bool | None = None

    def free_matrix(self, d: int) -> list[list[int]]:
        return self.degrees[d].free

    def unimodular(self, d: int) -> bool:
        M = self.degrees[d].free
        s = self.source.groups.betti.get(d, 0)
        t = self.target.groups.betti.get(d, 0)
        if s != t:
            return False
        return s == 0 or is_unimodular(M)

    def torsion_matches(self, d: int) -> bool:
        return self.source.groups.torsion.get(d, ()) == self.target.groups.torsion.get(d, ())

    def is_zero(self, d: int) -> bool:
        m = self.degrees[d]
        return all(not v for rows in (m.free, m.free_to_torsion, m.torsion, m.torsion_to_free) for row in rows for v in row)

    def is_isomorphism(self) -> bool:
        return bool(self.cone_acyclic) and all(self.unimodular(d) and self.torsion_matches(d) for d in self.degrees)


def induced_map(f: ChainMap, source: HomologyWithBasis | None = None, target: HomologyWithBasis | None = None, cone: bool = True) -> InducedMap:
    """Matrices of ``f_*`` on the computed homology bases; optionally test the cone."""
    source = source or homology_with_basis(f.source)
    target = target or homology_with_basis(f.target)
    out = {}
    for d in f.source.degrees:
        sb = source.bases[d]
        tb = target.bases.get(d)
        M = f.at(d)
        nf_t = len(tb.free_gens) if tb else 0
        nt_t = len(tb.torsion_gens) if tb else 0

        def coords(z):
            if tb is None:
                return [], []
            return tb.coordinates(M.matvec(z))

        fr = [coords(z) for z in sb.free_gens]
        to = [coords(z) for z in sb.torsion_gens]
        out[d] = DegreeMap(
            free=[[fr[c][0][r] for c in range(len(fr))] for r in range(nf_t)],
            free_to_torsion=[[fr[c][1][r] for c in range(len(fr))] for r in range(nt_t)],
            torsion=[[to[c][1][r] for c in range(len(to))] for r in range(nt_t)],
            torsion_to_free=[[to[c][0][r] for c in range(len(to))] for r in range(nf_t)],
        )
    acyclic = homology(mapping_cone(f)).is_zero() if cone else None
    return InducedMap(source, target, out, acyclic)


def mapping_cone(f: ChainMap) -> ChainComplex:
    """``Cone_k = C_{k-1} + T_k`` with ``D(c, t) = (-dc, f c + dt)``."""
    S, T = f.source, f.target
    degrees = sorted({d + 1 for d in S.degrees} | set(T.degrees))
    bases = {k: [("s", b) for b in S.bases.get(k - 1, ())] + [("t", b) for b in T.bases.get(k, ())] for k in degrees}
    boundaries = {}
    for k in degrees:
        ns_hi, ns_lo = S.rank(k - 1), S.rank(k - 2)
        rows: dict[int, dict[int, int]] = {}
        for i, row in S.boundary(k - 1).rows.items():
            rows.setdefault(i, {}).update({j: -v for j, v in row.items()})
        for i, row in f.at(k - 1).rows.items():
            rows.setdefault(ns_lo + i, {}).update(dict(row))
        for i, row in T.boundary(k).rows.items():
            tgt = rows.setdefault(ns_lo + i, {})
            for j, v in row.items():
                tgt[ns_hi + j] = tgt.get(ns_hi + j, 0) + v
        boundaries[k] = SparseMatrix(len(bases.get(k - 1, ())), len(bases[k]), rows)
    rel = [x for x in (T.reliable_below, None if S.reliable_below is None else S.reliable_below + 1) if x is not None]
    return ChainComplex(bases, boundaries, min(rel) if rel else None, f"cone({S.label}->{T.label})")


def complex_from_matrices(ranks: dict[int, int], matrices: dict[int, SparseMatrix], label: str = "") -> ChainComplex:
    """A complex on anonymous bases ``0..rank-1``."""
    bases = {d: list(range(r)) for d, r in ranks.items()}
    boundaries = {d: M for d, M in matrices.items() if d in ranks}
    return ChainComplex(bases, boundaries, None, label)
