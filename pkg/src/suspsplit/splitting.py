"""The splitting map ``H(n)`` and its verification in integer homology.

``H(n)`` is assembled from the components ``lambda(n, J): x -> [s_J d_chi(J) x]``
with values in the summands ``s_J(X_{n-r}) / s_J S(X_{n-r})``, ordered by
``r`` and then by the order on admissible sequences.  At chain level the
assembled map is lower unitriangular once source generators are sorted by
their horizontal decomposition, which certifies the isomorphism exactly; the
homology-level matrices, the mapping cone and the filtration quotients are
checked as well.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Hashable

from .calculus import chi, enumerate_admissible, horizontal_degeneracy, horizontal_face
from .filtration import (
    PointedQuotient,
    filtration_stage,
    horizontal_decomposition,
    stage_quotient,
    summand,
)
from .homology import (
    ChainMap,
    HomologyGroups,
    HomologyWithBasis,
    InducedMap,
    direct_sum,
    homology,
    homology_with_basis,
    induced_map,
    mapping_cone,
    normalized_chains,
    simplicial_chain_map,
    stack_maps,
    sum_groups,
)
from .reports import Report
from .simplicial import SimplexRef
from .snf import is_unimodular
from .space import SimplicialSpace, SimplicialSpaceMap


@dataclass(frozen=True)
class HopfComponent:
    """``lambda(n, J)``: level ``n`` to the summand of ``J``; ``None`` is the basepoint."""

    space: SimplicialSpace
    n: int
    J: tuple[int, ...]
    target: PointedQuotient

    def __call__(self, x: SimplexRef) -> SimplexRef | None:
        r = len(self.J)
        y = horizontal_degeneracy(self.space, self.n - r, horizontal_face(self.space, self.n, x, chi(self.J)), self.J)
        if y.gen in self.target.denominator:
            return None
        return y

    def value_table(self) -> dict[Hashable, Hashable | None]:
        X = self.space.level(self.n)
        table = {}
        for g in X.all_generators():
            y = self(X.generator(g))
            table[g] = None if y is None else (y.gen if not y.word else repr(y))
        return table


def hopf_component(space: SimplicialSpace, n: int, J: tuple[int, ...]) -> HopfComponent:
    J = tuple(J)
    if len(J) > n or any(not 0 <= j <= n - 1 for j in J):
        raise ValueError(f"J={J} is not a sequence of degeneracies into level {n}")
    return HopfComponent(space, n, J, summand(space, n, J))


def _hwb(space: SimplicialSpace, key, obj):
    def compute():
        C = normalized_chains(obj)
        return homology_with_basis(C)

    return space.memo(("hwb",) + key, compute)


def _stage_source(space: SimplicialSpace, n: int, t: int) -> PointedQuotient:
    if t == 0:
        return PointedQuotient(space.level(n), None, frozenset(), f"X_{n}")
    return filtration_stage(space, n, t).as_quotient()


def summand_homology(space: SimplicialSpace, n: int, J: tuple[int, ...]) -> HomologyWithBasis:
    return _hwb(space, ("summand", n, tuple(J)), summand(space, n, J))


def level_homology(space: SimplicialSpace, n: int, t: int = 0) -> HomologyWithBasis:
    return _hwb(space, ("stage", n, t), _stage_source(space, n, t))


@dataclass
class BlockMap:
    """``H(n)`` restricted to ``S^t(X_n)``, at chain and homology level."""

    n: int
    t: int
    source: HomologyWithBasis
    blocks: list[tuple[tuple[int, ...], HomologyWithBasis]]
    components: list[InducedMap]
    chain: ChainMap
    chain_unitriangular: bool
    cone_acyclic: bool
    witness: str | None = None
    _unimodular: dict[int, bool] = field(default_factory=dict, repr=False)

    def matrix(self, d: int) -> list[list[int]]:
        rows: list[list[int]] = []
        for ind in self.components:
            rows.extend(ind.degrees[d].free)
        return rows

    def torsion_matrix(self, d: int) -> list[list[int]]:
        rows: list[list[int]] = []
        for ind in self.components:
            rows.extend(ind.degrees[d].torsion)
        return rows

    def target_groups(self) -> HomologyGroups:
        return sum_groups([h.groups for _, h in self.blocks])

    def block_ranks(self, d: int) -> list[int]:
        return [h.groups.betti.get(d, 0) for _, h in self.blocks]

    def unimodular(self, d: int) -> bool:
        if d not in self._unimodular:
            M = self.matrix(d)
            s = self.source.groups.betti.get(d, 0)
            self._unimodular[d] = len(M) == s and (s == 0 or is_unimodular(M))
        return self._unimodular[d]

    def torsion_matches(self, d: int) -> bool:
        return self.source.groups.torsion.get(d, ()) == self.target_groups().torsion.get(d, ())

    def degrees(self) -> list[int]:
        return self.source.groups.degrees

    @property
    def is_isomorphism(self) -> bool:
        return (
            self.chain_unitriangular
            and self.cone_acyclic
            and all(self.unimodular(d) and self.torsion_matches(d) for d in self.degrees())
        )

    def to_dict(self, matrices: bool = True) -> dict:
        per_degree = {}
        for d in self.degrees():
            if d < 0 and not self.source.groups.betti.get(d):
                continue
            entry = {
                "source": self.source.groups.describe(d),
                "block_ranks": self.block_ranks(d),
                "unimodular": self.unimodular(d),
                "torsion_matches": self.torsion_matches(d),
            }
            if matrices:
                entry["matrix"] = self.matrix(d)
                if self.torsion_matrix(d):
                    entry["torsion_matrix"] = self.torsion_matrix(d)
            per_degree[str(d)] = entry
        return {
            "n": self.n,
            "t": self.t,
            "blocks": [list(J) for J, _ in self.blocks],
            "chain_unitriangular": self.chain_unitriangular,
            "cone_acyclic": self.cone_acyclic,
            "witness": self.witness,
            "degrees": per_degree,
            "isomorphism": self.is_isomorphism,
        }


def _order_key(space: SimplicialSpace, n: int, g: Hashable):
    J, _ = horizontal_decomposition(space, n, g)
    return (len(J), J, space.level(n).order_key(g))


def _check_unitriangular(space: SimplicialSpace, n: int, F: ChainMap, blocks: list[tuple[int, ...]]) -> str | None:
    """``None`` when the chain map is lower unitriangular in the decomposition order."""
    block_index = {J: k for k, J in enumerate(blocks)}
    S, T = F.source, F.target
    for d in S.degrees:
        if d < 0:
            if S.rank(d) != T.rank(d) or F.at(d).to_dense() != [[1] * S.rank(d)] * min(1, S.rank(d)):
                return f"augmentation is not preserved in degree {d}"
            continue
        if S.rank(d) != T.rank(d):
            return f"degree {d}: {S.rank(d)} source generators vs {T.rank(d)} target generators"
        rank_of = {g: _order_key(space, n, g) for g in S.bases[d]}
        for k, g in T.bases[d]:
            J, _ = horizontal_decomposition(space, n, g)
            if block_index.get(J) != k:
                return f"target generator {g!r} sits in block {k} but decomposes along {J}"
        cols = F.at(d).columns()
        for c, g in enumerate(S.bases[d]):
            J, _ = horizontal_decomposition(space, n, g)
            diag = T.index(d, (block_index[J], g))
            if cols[c].get(diag) != 1:
                return f"diagonal entry for {g!r} is {cols[c].get(diag, 0)}"
            for row, v in cols[c].items():
                if row == diag:
                    continue
                _, g2 = T.bases[d][row]
                if not rank_of[g2] > rank_of[g]:
                    return f"entry above the diagonal: {g!r} -> {g2!r}"
    return None


def build_H(space: SimplicialSpace, n: int, t: int = 0) -> BlockMap:
    """Assemble ``H(n)`` (restricted to ``S^t(X_n)`` when ``t > 0``)."""
    if not 0 <= t <= n <= space.max_level:
        raise ValueError("need 0 <= t <= n <= max_level")

    def compute():
        src_obj = _stage_source(space, n, t)
        src = level_homology(space, n, t)
        C = src.complex
        blocks, parts, comps = [], [], []
        for r in range(t, n + 1):
            for J in enumerate_admissible(n - 1, r):
                lam = hopf_component(space, n, J)
                tgt = summand_homology(space, n, J)
                f = simplicial_chain_map(lam, C, tgt.complex, lam.target, src_obj)
                blocks.append((J, tgt))
                parts.append(f)
                comps.append(induced_map(f, src, tgt, cone=False))
        total, offsets = direct_sum([h.complex for _, h in blocks], f"H({n})")
        F = stack_maps(C, total, parts, offsets)
        F.check()
        witness = _check_unitriangular(space, n, F, [J for J, _ in blocks])
        acyclic = homology(mapping_cone(F)).is_zero()
        return BlockMap(n, t, src, blocks, comps, F, witness is None, acyclic, witness)

    return space.memo(("H", n, t), compute)


def counting_identity(bm: BlockMap, d: int = 0) -> str:
    """``total = r-block sums`` for the free ranks in degree ``d``; zero blocks omitted."""
    sums: dict[int, int] = {}
    for (J, h) in bm.blocks:
        sums[len(J)] = sums.get(len(J), 0) + h.groups.betti.get(d, 0)
    total = bm.source.groups.betti.get(d, 0)
    terms = [str(v) for _, v in sorted(sums.items()) if v]
    return f"{total} = {' + '.join(terms) if terms else '0'}"


@dataclass
class SplitReport:
    n: int
    stage_homology: dict[int, HomologyGroups]
    summand_homology: dict[tuple[int, ...], HomologyGroups]
    block_map: BlockMap
    coarse_ok: bool
    wedge_ok: bool
    triangularity: Report | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        tri = self.triangularity.passed if self.triangularity is not None else True
        return self.block_map.is_isomorphism and self.coarse_ok and self.wedge_ok and tri

    def to_dict(self, matrices: bool = True) -> dict:
        bm = self.block_map
        return {
            "n": self.n,
            "passed": self.passed,
            "source": bm.source.groups.to_dict(),
            "counting_identity_H0": counting_identity(bm, 0),
            "stage_homology": {str(r): h.to_dict() for r, h in self.stage_homology.items()},
            "summand_homology": {",".join(map(str, J)) or "()": h.to_dict() for J, h in self.summand_homology.items()},
            "H": bm.to_dict(matrices),
            "coarse_splitting": self.coarse_ok,
            "wedge_homology": self.wedge_ok,
            "triangularity": None if self.triangularity is None else self.triangularity.to_dict(),
            **self.details,
        }


def verify_theorem_splitting(space: SimplicialSpace, n: int, triangularity: bool = True) -> SplitReport:
    bm = build_H(space, n)
    stages = {r: homology(normalized_chains(stage_quotient(space, n, r))) for r in range(n + 1)}
    summands = {J: h.groups for J, h in bm.blocks}
    coarse_ok = bm.source.groups == sum_groups(list(stages.values()))
    wedge_ok = all(
        stages[r] == sum_groups([h for J, h in summands.items() if len(J) == r]) for r in range(n + 1)
    )
    tri = verify_block_triangularity(space, n) if triangularity else None
    counts = {str(r): {"summands": comb(n, r), "count_C(n+1,r)": comb(n + 1, r)} for r in range(n + 1)}
    return SplitReport(n, stages, summands, bm, coarse_ok, wedge_ok, tri, {"summand_counts": counts})


def verify_restriction(space: SimplicialSpace, n: int, t: int) -> Report:
    """Components with ``|J| < t`` kill ``S^t(X_n)``; the rest restrict to an isomorphism."""
    rep = Report("restriction", {"space": space.name, "n": n, "t": t})
    X = space.level(n)
    members = filtration_stage(space, n, t).members
    for r in range(t):
        for J in enumerate_admissible(n - 1, r):
            lam = hopf_component(space, n, J)
            for g in members:
                y = lam(X.generator(g))
                if y is not None and not y.word:
                    rep.violations.append({"J": J, "simplex": repr(g), "image": repr(y)})
    bm = build_H(space, n, t)
    if not bm.is_isomorphism:
        rep.violations.append({"problem": "restricted map is not an isomorphism", "witness": bm.witness})
    rep.details.update(
        stage_size=len(members),
        source=bm.source.groups.to_dict(),
        counting_identity_H0=counting_identity(bm, 0),
        chain_unitriangular=bm.chain_unitriangular,
        cone_acyclic=bm.cone_acyclic,
    )
    return rep


def verify_block_triangularity(space: SimplicialSpace, n: int) -> Report:
    """``lambda_I`` composed with the inclusion of ``s_J(X_{n-r})``.

    For ``I = J`` this must be the collapse onto the summand (identity
    diagonal block); for ``(|I|, I) < (|J|, J)`` it must vanish.  Checked on
    chains and on homology.
    """
    rep = Report("block_triangularity", {"space": space.name, "n": n})
    seqs = [J for r in range(n + 1) for J in enumerate_admissible(n - 1, r)]
    rank = {J: k for k, J in enumerate(seqs)}
    X = space.level(n)
    pairs = 0
    for J in seqs:
        s_obj = summand(space, n, J)
        inc = PointedQuotient(X, s_obj.numerator, frozenset(), f"s_{J}(X)")
        src = _hwb(space, ("image", n, J), inc)
        for I in seqs:
            if rank[I] > rank[J]:
                continue
            pairs += 1
            lam = hopf_component(space, n, I)
            tgt = summand_homology(space, n, I)
            f = simplicial_chain_map(lam, src.complex, tgt.complex, lam.target, inc)
            ind = induced_map(f, src, tgt, cone=False)
            if I == J:
                q = simplicial_chain_map(lambda x: x, src.complex, tgt.complex, lam.target, inc)
                if any(f.at(d) != q.at(d) for d in src.complex.degrees):
                    rep.violations.append({"I": I, "J": J, "problem": "diagonal block is not the collapse on chains"})
                qi = induced_map(q, src, tgt, cone=False)
                if any(ind.degrees[d] != qi.degrees[d] for d in ind.degrees):
                    rep.violations.append({"I": I, "J": J, "problem": "diagonal block differs in homology"})
            else:
                if any(not f.at(d).is_zero() for d in src.complex.degrees if d >= 0):
                    rep.violations.append({"I": I, "J": J, "problem": "block above the diagonal is nonzero on chains"})
                if any(not ind.is_zero(d) for d in ind.degrees if d >= 0):
                    rep.violations.append({"I": I, "J": J, "problem": "block above the diagonal is nonzero in homology"})
    rep.details["pairs"] = pairs
    return rep


def verify_naturality(f: SimplicialSpaceMap, n: int) -> Report:
    """``H(n) f_* = (sum of f_*) H(n)`` on homology, checked summand by summand."""
    X, Y = f.source, f.target
    rep = Report("naturality", {"source": X.name, "target": Y.name, "n": n})
    src = level_homology(X, n)
    ysrc_obj = _stage_source(Y, n, 0)
    ysrc = level_homology(Y, n)
    fn = f[n]
    f_level = simplicial_chain_map(fn, src.complex, ysrc.complex, ysrc_obj, _stage_source(X, n, 0))
    for r in range(n + 1):
        for J in enumerate_admissible(n - 1, r):
            lx = hopf_component(X, n, J)
            ly = hopf_component(Y, n, J)
            hx = summand_homology(X, n, J)
            hy = summand_homology(Y, n, J)
            lam_x = simplicial_chain_map(lx, src.complex, hx.complex, lx.target)
            lam_y = simplicial_chain_map(ly, ysrc.complex, hy.complex, ly.target)
            f_J = simplicial_chain_map(fn, hx.complex, hy.complex, ly.target, lx.target)
            a = lam_y.compose(f_level)
            b = f_J.compose(lam_x)
            chain_ok = all(a.at(d) == b.at(d) for d in src.complex.degrees)
            ia = induced_map(a, src, hy, cone=False)
            ib = induced_map(b, src, hy, cone=False)
            hom_ok = all(ia.degrees[d] == ib.degrees[d] for d in ia.degrees)
            if not (chain_ok and hom_ok):
                rep.violations.append({"J": J, "chain_commutes": chain_ok, "homology_commutes": hom_ok})
    rep.details["source"] = src.groups.to_dict()
    rep.details["target"] = ysrc.groups.to_dict()
    return rep
