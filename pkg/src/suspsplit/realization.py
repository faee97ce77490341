"""Chains on the geometric realization and the spectral sequence of its skeleta.

The realization is modelled by the total complex of the bi-normalized double
complex: column ``j`` holds the vertical generators of level ``j`` that are
horizontally nondegenerate, and ``D = d^h + (-1)^j d^v``.  Filtering by
columns gives ``F_j``; its subquotients are compared with suspensions of
``X_j / S(X_j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Hashable

from .filtration import filtration_stage, stage_quotient
from .homology import (
    AUG,
    ChainComplex,
    ChainMap,
    HomologyGroups,
    HomologyWithBasis,
    InducedMap,
    complex_from_matrices,
    homology,
    homology_with_basis,
    induced_map,
    normalized_chains,
    sum_groups,
)
from .reports import Report
from .snf import SparseMatrix
from .space import SimplicialSpace


def _column(space: SimplicialSpace, j: int, k: int) -> list[Hashable]:
    X = space.level(j)
    if k > X.truncation:
        return []
    sing = filtration_stage(space, j, 1).members if j > 0 else frozenset()
    return [g for g in X.generators[k] if g not in sing]


def total_complex(space: SimplicialSpace, reduced: bool = True) -> ChainComplex:
    """Total complex on labels ``(j, g)``; augmented in degree ``-1`` when ``reduced``."""

    def compute():
        N = space.max_level
        cols = {j: {k: _column(space, j, k) for k in range(space.level(j).truncation + 1)} for j in range(N + 1)}
        top = max(j + k for j in cols for k in cols[j])
        bases: dict[int, list] = {m: [] for m in range(-1 if reduced else 0, top + 1)}
        if reduced:
            bases[-1] = [AUG]
        for j in range(N + 1):
            for k, gens in cols[j].items():
                bases[j + k].extend((j, g) for g in gens)
        index = {m: {b: i for i, b in enumerate(bs)} for m, bs in bases.items()}
        boundaries = {}
        for m in bases:
            if m < 0:
                continue
            rows: dict[int, dict[int, int]] = {}

            def add(label, col, v):
                i = index.get(m - 1, {}).get(label)
                if i is None:
                    return
                row = rows.setdefault(i, {})
                row[col] = row.get(col, 0) + v

            for c, (j, g) in enumerate(bases[m]):
                X = space.level(j)
                x = X.generator(g)
                if m == 0 and reduced:
                    add(AUG, c, 1)
                if j > 0:
                    for i in range(j + 1):
                        y = space.hface(j, i, x)
                        if not y.word:
                            add((j - 1, y.gen), c, (-1) ** i)
                sign = (-1) ** j
                if x.dim > 0:
                    for i, f in enumerate(X.face_table(g)):
                        if not f.word:
                            add((j, f.gen), c, sign * (-1) ** i)
            boundaries[m] = SparseMatrix(len(bases.get(m - 1, ())), len(bases[m]), {i: {k: v for k, v in r.items() if v} for i, r in rows.items()})
        incomplete = any(not space.level(j).complete for j in range(N + 1))
        vtop = min(space.level(j).truncation for j in range(N + 1))
        reliable = min(N, vtop) if incomplete else N
        C = ChainComplex(bases, boundaries, reliable, f"Tot({space.name})")
        C.check()
        return C

    return space.memo(("total", reduced), compute)


def restrict(C: ChainComplex, keep: Callable[[Hashable], bool], label: str = "") -> ChainComplex:
    """Subquotient on the kept labels; valid when they span ``A / B`` with ``B`` a subcomplex."""
    bases = {d: [b for b in bs if keep(b)] for d, bs in C.bases.items()}
    bases = {d: bs for d, bs in bases.items() if bs or d >= 0}
    pos = {d: [C.index(d, b) for b in bs] for d, bs in bases.items()}
    boundaries = {}
    for d in bases:
        if d - 1 not in bases:
            continue
        boundaries[d] = C.boundary(d).submatrix(pos[d - 1], pos[d])
    return ChainComplex(bases, boundaries, C.reliable_below, label)


def _column_of(b: Hashable) -> int:
    return 0 if b == AUG else b[0]


def filtration_quotient_complex(space: SimplicialSpace, j: int) -> ChainComplex:
    """Chains of ``F_j / F_{j-1}``."""
    Tot = total_complex(space)
    Q = restrict(Tot, lambda b: _column_of(b) == j, f"F_{j}/F_{j - 1}")
    Q.check()
    return Q


def skeleton_complex(space: SimplicialSpace, j: int) -> ChainComplex:
    """Chains of ``F_j`` itself."""
    return restrict(total_complex(space), lambda b: _column_of(b) <= j, f"F_{j}")


def _reliable_agree(a: HomologyGroups, b: HomologyGroups) -> tuple[bool, list[int]]:
    ds = sorted(set(a.degrees) | set(b.degrees))
    checked = [d for d in ds if a.reliable(d) and b.reliable(d)]
    bad = [d for d in checked if a.group(d) != b.group(d)]
    return not bad, checked


def verify_realization_quotients(space: SimplicialSpace, j: int) -> Report:
    """``H~_k(F_j / F_{j-1}) = H~_{k-j}(X_j / S(X_j))``."""
    rep = Report("realization_quotient", {"space": space.name, "j": j})
    lhs = homology(filtration_quotient_complex(space, j))
    rhs = sum_groups([homology(normalized_chains(stage_quotient(space, j, 0)))], shift=j)
    ok, checked = _reliable_agree(lhs, rhs)
    if not ok:
        rep.violations.append({"lhs": lhs.to_dict(), "rhs": rhs.to_dict()})
    rep.details.update(quotient=lhs.to_dict(), suspension=rhs.to_dict(), degrees_checked=checked)
    return rep


def verify_corollary_shift(space: SimplicialSpace, n: int, t: int) -> Report:
    """``H~_k(S^t/S^{t+1}(X_n))`` is ``C(n, t)`` copies of ``H~_{k+n-t}(F_{n-t}/F_{n-t-1})``."""
    rep = Report("corollary_shift", {"space": space.name, "n": n, "t": t})
    lhs = homology(normalized_chains(stage_quotient(space, n, t)))
    q = homology(filtration_quotient_complex(space, n - t))
    m = comb(n, t)
    rhs = sum_groups([q] * m, shift=-(n - t))
    ok, checked = _reliable_agree(lhs, rhs)
    if not ok:
        rep.violations.append({"lhs": lhs.to_dict(), "rhs": rhs.to_dict()})
    rep.details.update(
        stage_quotient=lhs.to_dict(),
        filtration_quotient=q.to_dict(),
        multiplicity=m,
        degrees_checked=checked,
    )
    rep.details["count_C(n+1,t)"] = comb(n + 1, t)
    return rep


def horizontal_boundary(space: SimplicialSpace, j: int, source: ChainComplex, target: ChainComplex) -> ChainMap:
    """``sum (-1)^i d_i`` from ``C(X_j, S X_j)`` to ``C(X_{j-1}, S X_{j-1})``."""
    X = space.level(j)
    mats = {}
    for d in source.degrees:
        rows: dict[int, dict[int, int]] = {}
        if d >= 0:
            for c, g in enumerate(source.bases[d]):
                x = X.generator(g)
                for i in range(j + 1):
                    y = space.hface(j, i, x)
                    if y.word or not target.has(d, y.gen):
                        continue
                    row = rows.setdefault(target.index(d, y.gen), {})
                    row[c] = row.get(c, 0) + (-1) ** i
        mats[d] = SparseMatrix(target.rank(d), source.rank(d), {i: {k: v for k, v in r.items() if v} for i, r in rows.items()})
    f = ChainMap(source, target, mats)
    f.check()
    return f


@dataclass
class E1Page:
    """``E^1_{j,k} = H~_{j+k}(F_j/F_{j-1}) = H~_k(X_j / S X_j)`` with ``d^1``."""

    space: str
    columns: dict[int, HomologyWithBasis]
    d1: dict[int, InducedMap]
    d1_squared_zero: bool
    e2: dict[int, HomologyGroups] = field(default_factory=dict)
    total: HomologyGroups | None = None
    agree: bool | None = None
    degrees_checked: list[int] = field(default_factory=list)

    def entry(self, j: int, k: int) -> str:
        return self.columns[j].groups.describe(k)

    @property
    def passed(self) -> bool:
        return self.d1_squared_zero and self.agree is not False

    def to_dict(self) -> dict:
        out = {
            "space": self.space,
            "E1": {str(j): {str(k): h.groups.describe(k) for k in h.groups.degrees if k >= 0} for j, h in self.columns.items()},
            "d1": {str(j): {str(k): m.degrees[k].free for k in m.degrees if k >= 0} for j, m in self.d1.items()},
            "d1_squared_zero": self.d1_squared_zero,
            "E2": {str(k): g.to_dict() for k, g in self.e2.items()},
            "passed": self.passed,
        }
        if self.total is not None:
            out["realization"] = self.total.to_dict()
            out["agree"] = self.agree
            out["degrees_checked"] = self.degrees_checked
        return out


def segal_E1(space: SimplicialSpace) -> E1Page:
    """The first page; for discrete spaces ``E^2`` is compared with the realization."""
    N = space.max_level
    columns = {j: homology_with_basis(normalized_chains(stage_quotient(space, j, 0))) for j in range(N + 1)}
    chain_d1 = {j: horizontal_boundary(space, j, columns[j].complex, columns[j - 1].complex) for j in range(1, N + 1)}
    d1 = {j: induced_map(f, columns[j], columns[j - 1], cone=False) for j, f in chain_d1.items()}
    sq_zero = True
    for j in range(2, N + 1):
        comp = chain_d1[j - 1].compose(chain_d1[j])
        if any(not comp.at(d).is_zero() for d in comp.source.degrees):
            sq_zero = False
        ind = induced_map(comp, columns[j], columns[j - 2], cone=False)
        if any(not ind.is_zero(d) for d in ind.degrees if d >= 0):
            sq_zero = False
    page = E1Page(space.name, columns, d1, sq_zero)
    torsion_free = all(not any(h.groups.torsion.values()) for h in columns.values())
    if torsion_free:
        ks = sorted({k for h in columns.values() for k in h.groups.degrees if k >= 0})
        for k in ks:
            ranks = {j: columns[j].groups.betti.get(k, 0) for j in range(N + 1)}
            mats = {j: SparseMatrix.from_dense(d1[j].degrees[k].free, ranks[j]) for j in range(1, N + 1) if k in d1[j].degrees}
            E2 = homology(complex_from_matrices(ranks, mats, f"E2[k={k}]"))
            # a truncated vertical degree makes the whole row unreliable
            row_ok = all(h.groups.reliable(k) for h in columns.values())
            page.e2[k] = HomologyGroups(E2.betti, E2.torsion, N if row_ok else 0)
    if space.discrete:
        total = homology(total_complex(space))
        page.total = total
        if 0 in page.e2:
            ok, checked = _reliable_agree(page.e2[0], total)
            page.agree = ok
            page.degrees_checked = [d for d in checked if d >= 0]
        else:
            page.agree = False
    return page
