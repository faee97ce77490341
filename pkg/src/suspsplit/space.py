"""Simplicial objects whose levels are finite simplicial sets.

Level ``n`` is a :class:`FiniteSimplicialSet` (the "vertical" direction); the
horizontal faces ``X_n -> X_{n-1}`` and degeneracies ``X_n -> X_{n+1}`` are
:class:`SimplicialMap` instances.  Discrete levels (only 0-simplices) model
plain simplicial sets such as commuting nerves.
"""
from __future__ import annotations

import threading
from typing import Callable, Hashable, Mapping, Sequence

from .reports import Report
from .simplicial import FiniteSimplicialSet, SimplexRef, SimplicialMap


class SimplicialSpace:
    def __init__(
        self,
        levels: Sequence[FiniteSimplicialSet],
        faces: Mapping[tuple[int, int], SimplicialMap],
        degeneracies: Mapping[tuple[int, int], SimplicialMap],
        name: str = "",
    ):
        self.levels = tuple(levels)
        self.name = name
        self._faces = dict(faces)
        self._degs = dict(degeneracies)
        for n in range(1, len(self.levels)):
            for i in range(n + 1):
                if (n, i) not in self._faces:
                    raise ValueError(f"missing horizontal face d_{i} on level {n}")
        for n in range(len(self.levels) - 1):
            for i in range(n + 1):
                if (n, i) not in self._degs:
                    raise ValueError(f"missing horizontal degeneracy s_{i} on level {n}")
        self._memo: dict = {}
        self._memo_lock = threading.RLock()

    @property
    def max_level(self) -> int:
        return len(self.levels) - 1

    @property
    def discrete(self) -> bool:
        return all(X.dimension <= 0 for X in self.levels)

    def level(self, n: int) -> FiniteSimplicialSet:
        if not 0 <= n <= self.max_level:
            raise IndexError(f"level {n} outside 0..{self.max_level}")
        return self.levels[n]

    def face_map(self, n: int, i: int) -> SimplicialMap:
        """Horizontal ``d_i: X_n -> X_{n-1}``."""
        return self._faces[(n, i)]

    def degeneracy_map(self, n: int, i: int) -> SimplicialMap:
        """Horizontal ``s_i: X_n -> X_{n+1}``."""
        if (n, i) not in self._degs:
            raise IndexError(f"s_{i} on level {n} is outside the horizontal truncation")
        return self._degs[(n, i)]

    def hface(self, n: int, i: int, x: SimplexRef) -> SimplexRef:
        return self._faces[(n, i)](x)

    def hdeg(self, n: int, i: int, x: SimplexRef) -> SimplexRef:
        return self.degeneracy_map(n, i)(x)

    def memo(self, key, compute: Callable):
        """Lazily computed, lock-protected per-space cache."""
        with self._memo_lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._memo_lock:
            return self._memo.setdefault(key, value)

    def __repr__(self) -> str:
        sizes = [sum(len(g) for g in X.generators) for X in self.levels]
        return f"SimplicialSpace({self.name or '?'}, levels={sizes})"

    def validate(self) -> Report:
        """Check horizontal identities on generators and vertical compatibility."""
        rep = Report("horizontal_identities", {"name": self.name, "max_level": self.max_level})
        for key, f in list(self._faces.items()) + list(self._degs.items()):
            sub = f.check()
            for v in sub.violations:
                rep.violations.append({"operator": key, **v})
        N = self.max_level
        for n, X in enumerate(self.levels):
            for g in X.all_generators():
                x = X.generator(g)
                for j in range(n + 1 if n >= 2 else 0):
                    for i in range(j):
                        if self.hface(n - 1, i, self.hface(n, j, x)) != self.hface(n - 1, j - 1, self.hface(n, i, x)):
                            rep.violations.append({"level": n, "gen": repr(g), "relation": f"d{i}d{j}"})
                if n + 1 <= N:
                    for j in range(n + 1):
                        y = self.hdeg(n, j, x)
                        if y.degenerate:
                            rep.violations.append({"level": n, "gen": repr(g), "relation": f"s{j} not injective"})
                        for i in range(n + 2):
                            lhs = self.hface(n + 1, i, y)
                            if i < j:
                                rhs = self.hdeg(n - 1, j - 1, self.hface(n, i, x))
                            elif i in (j, j + 1):
                                rhs = x
                            else:
                                rhs = self.hdeg(n - 1, j, self.hface(n, i - 1, x))
                            if lhs != rhs:
                                rep.violations.append({"level": n, "gen": repr(g), "relation": f"d{i}s{j}"})
                if n + 2 <= N:
                    for j in range(n + 1):
                        for i in range(j + 1):
                            lhs = self.hdeg(n + 1, i, self.hdeg(n, j, x))
                            rhs = self.hdeg(n + 1, j + 1, self.hdeg(n, i, x))
                            if lhs != rhs:
                                rep.violations.append({"level": n, "gen": repr(g), "relation": f"s{i}s{j}"})
        return rep


class SimplicialSpaceMap:
    """Levelwise simplicial maps commuting with the horizontal operators."""

    def __init__(self, source: SimplicialSpace, target: SimplicialSpace, level_maps: Sequence[SimplicialMap]):
        if len(level_maps) != source.max_level + 1 or target.max_level < source.max_level:
            raise ValueError("level maps do not match the horizontal truncation")
        self.source = source
        self.target = target
        self.level_maps = tuple(level_maps)

    def __getitem__(self, n: int) -> SimplicialMap:
        return self.level_maps[n]

    def check(self) -> Report:
        rep = Report("space_map", {"source": self.source.name, "target": self.target.name})
        for n, f in enumerate(self.level_maps):
            for v in f.check().violations:
                rep.violations.append({"level": n, **v})
            for g in self.source.level(n).all_generators():
                x = self.source.level(n).generator(g)
                for i in range(n + 1):
                    if n >= 1 and self.target.hface(n, i, f(x)) != self.level_maps[n - 1](self.source.hface(n, i, x)):
                        rep.violations.append({"level": n, "gen": repr(g), "operator": f"d{i}"})
                    if n < self.source.max_level and self.target.hdeg(n, i, f(x)) != self.level_maps[n + 1](self.source.hdeg(n, i, x)):
                        rep.violations.append({"level": n, "gen": repr(g), "operator": f"s{i}"})
        return rep


def discrete_space(
    levels: Sequence[Sequence[Hashable]],
    face: Callable[[int, int, Hashable], Hashable],
    deg: Callable[[int, int, Hashable], Hashable],
    name: str = "",
) -> SimplicialSpace:
    """Build a simplicial space with discrete levels from label-level operators.

    ``face(n, i, x)`` and ``deg(n, i, x)`` act on labels of level ``n``.
    """
    sets = [FiniteSimplicialSet([list(lv)], truncation=0, name=f"{name}[{n}]") for n, lv in enumerate(levels)]
    N = len(sets) - 1

    def as_map(src, tgt, fn):
        return SimplicialMap(src, tgt, {x: SimplexRef((), fn(x), 0) for x in src.generators[0]})

    faces = {}
    degs = {}
    for n in range(N + 1):
        for i in range(n + 1):
            if n >= 1:
                faces[(n, i)] = as_map(sets[n], sets[n - 1], lambda x, n=n, i=i: face(n, i, x))
            if n < N:
                degs[(n, i)] = as_map(sets[n], sets[n + 1], lambda x, n=n, i=i: deg(n, i, x))
    return SimplicialSpace(sets, faces, degs, name=name)


def discrete_space_map(
    source: SimplicialSpace, target: SimplicialSpace, fn: Callable[[int, Hashable], Hashable]
) -> SimplicialSpaceMap:
    maps = []
    for n, X in enumerate(source.levels):
        maps.append(SimplicialMap(X, target.level(n), {x: SimplexRef((), fn(n, x), 0) for x in X.generators[0]}))
    return SimplicialSpaceMap(source, target, maps)
