"""The degeneracy filtration ``S^t(X_n)`` and its wedge decomposition.

``S^t(X_n)`` collects the level-``n`` simplices that are ``t``-fold horizontal
degeneracies.  A simplex ``x`` lies in the image of ``s_i`` exactly when
``s_i d_i x = x``, and the set of such ``i`` is the index set of its unique
admissible decomposition, so the degree is the size of that set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Hashable

from .calculus import chi, enumerate_admissible, horizontal_degeneracy, horizontal_face
from .reports import Report
from .simplicial import FiniteSimplicialSet, SimplexRef
from .space import SimplicialSpace


@dataclass(frozen=True)
class PointedQuotient:
    """``numerator / denominator`` inside an ambient simplicial set.

    Both parts are sets of generators closed under faces; ``numerator=None``
    means the whole ambient set.  An empty denominator gives the numerator
    itself, unpointed.
    """

    ambient: FiniteSimplicialSet
    numerator: frozenset | None = None
    denominator: frozenset = frozenset()
    label: str = ""

    @property
    def pointed(self) -> bool:
        return bool(self.denominator)

    def contains(self, gen: Hashable) -> bool:
        return self.numerator is None or gen in self.numerator

    def basis(self, d: int) -> list[Hashable]:
        """Generators of dimension ``d`` that survive the collapse."""
        if d > self.ambient.truncation:
            return []
        return [g for g in self.ambient.generators[d] if self.contains(g) and g not in self.denominator]

    def size(self) -> int:
        """Number of surviving generators (the basepoint not counted)."""
        return sum(len(self.basis(d)) for d in range(self.ambient.truncation + 1))


@dataclass(frozen=True)
class FiltrationStage:
    level: int
    stage: int
    members: frozenset
    ambient: FiniteSimplicialSet

    def as_quotient(self) -> PointedQuotient:
        return PointedQuotient(self.ambient, self.members, frozenset(), f"S^{self.stage}(X_{self.level})")

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class WedgeWitness:
    n: int
    r: int
    summands: list[tuple[tuple[int, ...], frozenset]]
    quotient_classes: int
    cover: bool
    disjoint: bool
    injective: bool
    counterexample: str | None = None
    # sequences with entries in 0..n; only entries up to n-1 index degeneracies into level n
    wide_count: int = 0
    details: dict = field(default_factory=dict)

    @property
    def multiplicity(self) -> int:
        return len(self.summands)

    @property
    def passed(self) -> bool:
        return self.cover and self.disjoint and self.injective and self.multiplicity == comb(self.n, self.r)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "multiplicity": self.multiplicity,
            "expected_multiplicity": comb(self.n, self.r),
            "count_C(n+1,r)": self.wide_count,
            "summand_sizes": [[list(J), len(m)] for J, m in self.summands],
            "quotient_classes": self.quotient_classes,
            "cover": self.cover,
            "disjoint": self.disjoint,
            "injective": self.injective,
            "counterexample": self.counterexample,
            "passed": self.passed,
        }


def horizontal_decomposition(space: SimplicialSpace, n: int, gen: Hashable) -> tuple[tuple[int, ...], SimplexRef]:
    """Return ``(J, y)`` with ``gen = s_J(y)``, ``J`` admissible and ``y`` nondegenerate."""

    def compute():
        x = space.level(n).generator(gen)
        J = tuple(i for i in range(n - 1, -1, -1) if space.hdeg(n - 1, i, space.hface(n, i, x)) == x)
        y = horizontal_face(space, n, x, chi(J))
        if horizontal_degeneracy(space, n - len(J), y, J) != x:
            raise RuntimeError(f"decomposition of {gen!r} on level {n} does not recompose")
        return J, y

    return space.memo(("decomp", n, gen), compute)


def degeneracy_degree(space: SimplicialSpace, n: int, x: SimplexRef) -> int:
    """Largest ``t`` with ``x`` in ``S^t(X_n)``; vertical degeneracies do not change it."""
    if n == 0:
        return 0
    return len(horizontal_decomposition(space, n, x.gen)[0])


def filtration_stage(space: SimplicialSpace, n: int, t: int) -> FiltrationStage:
    if not 0 <= n <= space.max_level or not 0 <= t <= n + 1:
        raise ValueError(f"stage S^{t}(X_{n}) out of range")

    def compute():
        X = space.level(n)
        members = frozenset(g for g in X.all_generators() if degeneracy_degree(space, n, X.generator(g)) >= t)
        return FiltrationStage(n, t, members, X)

    return space.memo(("stage", n, t), compute)


def stage_quotient(space: SimplicialSpace, n: int, t: int) -> PointedQuotient:
    """``S^t(X_n) / S^{t+1}(X_n)``; unpointed for ``t = n``."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    num = filtration_stage(space, n, t).members
    den = filtration_stage(space, n, t + 1).members
    return PointedQuotient(space.level(n), num, den, f"S^{t}/S^{t+1}(X_{n})")


def summand(space: SimplicialSpace, n: int, J: tuple[int, ...]) -> PointedQuotient:
    """The wedge summand ``s_J(X_{n-r}) / s_J S(X_{n-r})`` as a subquotient of ``X_n``."""

    def compute():
        r = len(J)
        src = space.level(n - r)
        sing = filtration_stage(space, n - r, 1).members
        num, den = set(), set()
        for g in src.all_generators():
            y = horizontal_degeneracy(space, n - r, src.generator(g), J)
            if y.degenerate:
                raise RuntimeError("horizontal degeneracy is not injective")
            num.add(y.gen)
            if g in sing:
                den.add(y.gen)
        return PointedQuotient(space.level(n), frozenset(num), frozenset(den), f"s_{J}(X_{n - r})^")

    return space.memo(("summand", n, tuple(J)), compute)


def wedge_decomposition(space: SimplicialSpace, n: int, r: int) -> WedgeWitness:
    """Check that the summands ``s_J`` cover ``S^r/S^{r+1}`` and meet only at the basepoint."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    q = stage_quotient(space, n, r)
    classes = frozenset(g for g in q.numerator if g not in q.denominator)
    summands = []
    injective = True
    counter = None
    for J in enumerate_admissible(n - 1, r):
        s = summand(space, n, J)
        live = s.numerator - s.denominator
        if len(s.numerator) != len(space.level(n - r).all_generators()):
            injective = False
            counter = counter or f"s_{J} identifies two generators"
        stray = live - classes
        if stray and counter is None:
            injective = False
            counter = f"{next(iter(stray))!r} from J={J} is not a class of exact degree {r}"
        summands.append((J, live))
    covered = frozenset().union(*(m for _, m in summands)) if summands else frozenset()
    cover = covered == classes
    if not cover and counter is None:
        missing = classes - covered
        counter = f"class {next(iter(missing))!r} not hit" if missing else "extra classes hit"
    total = sum(len(m) for _, m in summands)
    disjoint = total == len(covered)
    if not disjoint and counter is None:
        seen: set = set()
        for J, m in summands:
            dup = seen & m
            if dup:
                counter = f"{next(iter(dup))!r} lies in two summands"
                break
            seen |= m
    return WedgeWitness(
        n, r, summands, len(classes), cover, disjoint, injective, counter, wide_count=comb(n + 1, r)
    )


def intersection_check(space: SimplicialSpace, n: int, r: int) -> Report:
    """Every simplex in ``s_I(X_{n-r})`` and ``s_J(X_{n-r})`` for ``I != J`` has degree ``>= r + 1``."""
    rep = Report("intersection", {"space": space.name, "n": n, "r": r})
    seqs = enumerate_admissible(n - 1, r)
    images = [(J, summand(space, n, J).numerator) for J in seqs]
    X = space.level(n)
    checked = 0
    for a, (I, im_i) in enumerate(images):
        for J, im_j in images[a + 1:]:
            for g in im_i & im_j:
                checked += 1
                if degeneracy_degree(space, n, X.generator(g)) < r + 1:
                    rep.violations.append({"I": I, "J": J, "simplex": repr(g)})
    rep.details["common_simplices"] = checked
    return rep
