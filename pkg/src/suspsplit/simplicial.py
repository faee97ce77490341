"""Finite truncated simplicial sets in Eilenberg-Zilber normal form.

Every simplex is stored as a pair (admissible degeneracy word, nondegenerate
generator).  Degenerate simplices are never tabulated: faces of degenerate
simplices are computed by pushing the face operator through the word with the
simplicial identities and then reading the stored face table of the generator.

Words are plain tuples of ints ``(i_r, ..., i_1)`` standing for the composite
``s_{i_r} ... s_{i_1}``, applied right to left.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Mapping, Sequence

from .reports import Report

__all__ = [
    "SimplexRef",
    "FiniteSimplicialSet",
    "SimplicialMap",
    "TruncationError",
    "normal_form",
    "is_admissible",
    "face",
    "degeneracy",
    "simplices",
    "validate_identities",
]


class TruncationError(ValueError):
    """Raised when an operation would leave the truncation range."""


def is_admissible(word: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(word, word[1:])) and all(i >= 0 for i in word)


def _push_degeneracy(i: int, word: tuple[int, ...]) -> tuple[int, ...]:
    # s_i s_j = s_{j+1} s_i for i <= j
    out = []
    for k, j in enumerate(word):
        if i > j:
            return tuple(out) + (i,) + word[k:]
        out.append(j + 1)
    return tuple(out) + (i,)


def normal_form(word: Sequence[int]) -> tuple[int, ...]:
    """Return the admissible word equal to ``word`` as a composite operator.

    >>> normal_form((0, 0))
    (1, 0)
    >>> normal_form((0, 1))
    (2, 0)
    """
    result: tuple[int, ...] = ()
    for i in reversed(tuple(word)):
        if i < 0:
            raise ValueError(f"negative degeneracy index {i}")
        result = _push_degeneracy(i, result)
    return result


@dataclass(frozen=True)
class SimplexRef:
    """A simplex ``s_word(gen)`` with ``word`` admissible and ``gen`` nondegenerate."""

    word: tuple[int, ...]
    gen: Hashable
    gdim: int

    @property
    def dim(self) -> int:
        return self.gdim + len(self.word)

    @property
    def degenerate(self) -> bool:
        return bool(self.word)

    def __repr__(self) -> str:
        if not self.word:
            return f"<{self.gen!r}>"
        ops = "".join(f"s{i}" for i in self.word)
        return f"<{ops} {self.gen!r}>"


def _ref(x, gdim: int) -> SimplexRef:
    if isinstance(x, SimplexRef):
        return x
    return SimplexRef((), x, gdim)


class FiniteSimplicialSet:
    """A simplicial set truncated at dimension ``truncation``.

    Parameters
    ----------
    generators : sequence of sequences
        ``generators[d]`` lists the nondegenerate ``d``-simplices.  Labels must
        be hashable and unique across all dimensions.
    faces : mapping
        For every generator of dimension ``d >= 1`` the ``d + 1`` faces, each a
        :class:`SimplexRef` of dimension ``d - 1`` or a bare generator label.
    truncation : int, optional
        Highest dimension handled.  Defaults to the top generator dimension.
    complete : bool
        True when no nondegenerate simplices exist above the truncation, so
        homology in every degree is exact.
    """

    def __init__(
        self,
        generators: Sequence[Sequence[Hashable]],
        faces: Mapping[Hashable, Sequence] | None = None,
        truncation: int | None = None,
        basepoint: SimplexRef | Hashable | None = None,
        name: str = "",
        complete: bool = True,
    ):
        gens = [list(g) for g in generators]
        if truncation is None:
            truncation = max(len(gens) - 1, 0)
        if len(gens) > truncation + 1 and any(gens[truncation + 1:]):
            raise TruncationError("generators above the truncation")
        while len(gens) < truncation + 1:
            gens.append([])
        self.truncation = truncation
        self.generators: tuple[tuple[Hashable, ...], ...] = tuple(tuple(g) for g in gens[: truncation + 1])
        self.name = name
        self.complete = complete
        self._gdim: dict[Hashable, int] = {}
        self._order: dict[Hashable, int] = {}
        for d, gs in enumerate(self.generators):
            for g in gs:
                if g in self._gdim:
                    raise ValueError(f"duplicate generator label {g!r}")
                self._gdim[g] = d
                self._order[g] = len(self._order)
        faces = faces or {}
        self._faces: dict[Hashable, tuple[SimplexRef, ...]] = {}
        for d, gs in enumerate(self.generators):
            if d == 0:
                continue
            for g in gs:
                if g not in faces:
                    raise ValueError(f"missing face table for generator {g!r}")
                fs = tuple(_ref(f, d - 1) for f in faces[g])
                if len(fs) != d + 1:
                    raise ValueError(f"generator {g!r} of dimension {d} needs {d + 1} faces, got {len(fs)}")
                self._faces[g] = fs
        self.basepoint = None if basepoint is None else _ref(basepoint, 0)

    # -- basic queries --------------------------------------------------
    def gdim(self, gen: Hashable) -> int:
        return self._gdim[gen]

    def order_key(self, gen: Hashable) -> int:
        return self._order[gen]

    def __contains__(self, gen) -> bool:
        return gen in self._gdim

    def generator(self, gen: Hashable) -> SimplexRef:
        return SimplexRef((), gen, self._gdim[gen])

    def face_table(self, gen: Hashable) -> tuple[SimplexRef, ...]:
        return self._faces[gen]

    @property
    def dimension(self) -> int:
        """Top dimension carrying a generator (-1 when empty)."""
        return max((d for d, gs in enumerate(self.generators) if gs), default=-1)

    def all_generators(self) -> list[Hashable]:
        return [g for gs in self.generators for g in gs]

    def __repr__(self) -> str:
        counts = [len(g) for g in self.generators]
        return f"FiniteSimplicialSet({self.name or '?'}, N={self.truncation}, generators={counts})"

    # -- operators ------------------------------------------------------
    def face(self, x: SimplexRef, i: int) -> SimplexRef:
        return face(self, x, i)

    def degeneracy(self, x: SimplexRef, i: int) -> SimplexRef:
        return degeneracy(self, x, i)

    def apply_word(self, x: SimplexRef, word: Sequence[int]) -> SimplexRef:
        """Apply ``s_word`` (right to left) to ``x``."""
        for i in reversed(tuple(word)):
            x = degeneracy(self, x, i)
        return x

    def simplices(self, n: int) -> list[SimplexRef]:
        return simplices(self, n)


def face(X: FiniteSimplicialSet, x: SimplexRef, i: int) -> SimplexRef:
    """``d_i(x)`` in normal form."""
    if x.dim < 1 or not 0 <= i <= x.dim:
        raise ValueError(f"invalid face index {i} for a simplex of dimension {x.dim}")
    prefix: list[int] = []
    word = x.word
    for k, j in enumerate(word):
        if i < j:
            # d_i s_j = s_{j-1} d_i
            prefix.append(j - 1)
        elif i == j or i == j + 1:
            return SimplexRef(normal_form(prefix + list(word[k + 1:])), x.gen, x.gdim)
        else:
            # d_i s_j = s_j d_{i-1}
            prefix.append(j)
            i -= 1
    f = X._faces[x.gen][i]
    return SimplexRef(normal_form(prefix + list(f.word)), f.gen, f.gdim)


def degeneracy(X: FiniteSimplicialSet, x: SimplexRef, i: int) -> SimplexRef:
    """``s_i(x)`` in normal form."""
    if not 0 <= i <= x.dim:
        raise ValueError(f"invalid degeneracy index {i} for a simplex of dimension {x.dim}")
    if x.dim + 1 > X.truncation:
        raise TruncationError(f"s_{i} leaves the truncation N={X.truncation}")
    return SimplexRef(_push_degeneracy(i, x.word), x.gen, x.gdim)


def _words(n: int, r: int) -> list[tuple[int, ...]]:
    """Admissible words of length r landing in dimension n, lexicographic."""
    return sorted(tuple(sorted(c, reverse=True)) for c in combinations(range(n), r))


def simplices(X: FiniteSimplicialSet, n: int) -> list[SimplexRef]:
    """All ``n``-simplices, each once, ordered by generator then word."""
    if not 0 <= n <= X.truncation:
        raise TruncationError(f"dimension {n} outside truncation 0..{X.truncation}")
    out = []
    for d in range(n + 1):
        words = _words(n, n - d)
        for g in X.generators[d]:
            out.extend(SimplexRef(w, g, d) for w in words)
    out.sort(key=lambda s: (X.order_key(s.gen), s.word))
    return out


def validate_identities(X: FiniteSimplicialSet) -> Report:
    """List every violated simplicial identity on generators.

    Checks face-table shape, ``d_i d_j = d_{j-1} d_i`` for ``i < j`` and the
    mixed relations ``d_i s_j`` on every generator below the truncation.
    """
    rep = Report("simplicial_identities", {"name": X.name, "truncation": X.truncation})
    for g, fs in X._faces.items():
        d = X.gdim(g)
        for i, f in enumerate(fs):
            if f.gen not in X or X.gdim(f.gen) != f.gdim:
                rep.violations.append({"generator": repr(g), "face": i, "problem": "unknown face generator"})
            elif f.dim != d - 1 or not is_admissible(f.word) or any(w > f.dim - 1 - k for k, w in enumerate(f.word)):
                rep.violations.append({"generator": repr(g), "face": i, "problem": "malformed face"})
    if rep.violations:
        return rep
    checked = 0
    for d, gs in enumerate(X.generators):
        for g in gs:
            x = X.generator(g)
            if d >= 2:
                for j in range(d + 1):
                    for i in range(j):
                        lhs = face(X, face(X, x, j), i)
                        rhs = face(X, face(X, x, i), j - 1)
                        checked += 1
                        if lhs != rhs:
                            rep.violations.append(
                                {"generator": repr(g), "i": i, "j": j, "lhs": repr(lhs), "rhs": repr(rhs)}
                            )
            if d < X.truncation:
                for j in range(d + 1):
                    y = degeneracy(X, x, j)
                    for i in range(d + 2):
                        lhs = face(X, y, i)
                        if i < j:
                            rhs = degeneracy(X, face(X, x, i), j - 1)
                        elif i in (j, j + 1):
                            rhs = x
                        else:
                            rhs = degeneracy(X, face(X, x, i - 1), j)
                        checked += 1
                        if lhs != rhs:
                            rep.violations.append(
                                {"generator": repr(g), "relation": f"d{i}s{j}", "lhs": repr(lhs), "rhs": repr(rhs)}
                            )
    rep.details["checked"] = checked
    return rep


class SimplicialMap:
    """A dimension-preserving map determined by its values on generators."""

    def __init__(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet, images: Mapping[Hashable, SimplexRef]):
        self.source = source
        self.target = target
        self.images = dict(images)
        for g in source.all_generators():
            if g not in self.images:
                raise ValueError(f"no image for generator {g!r}")
            if self.images[g].dim != source.gdim(g):
                raise ValueError(f"image of {g!r} has the wrong dimension")

    def __call__(self, x: SimplexRef) -> SimplexRef:
        y = self.images[x.gen]
        if not x.word:
            return y
        return SimplexRef(normal_form(x.word + y.word), y.gen, y.gdim)

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """``self`` after ``first``."""
        return SimplicialMap(first.source, self.target, {g: self(y) for g, y in first.images.items()})

    def check(self) -> Report:
        """Report every generator on which the map fails to commute with a face."""
        rep = Report("simplicial_map", {"source": self.source.name, "target": self.target.name})
        for g in self.source.all_generators():
            d = self.source.gdim(g)
            if d == 0:
                continue
            x = self.source.generator(g)
            for i in range(d + 1):
                lhs = self.target.face(self(x), i)
                rhs = self(self.source.face(x, i))
                if lhs != rhs:
                    rep.violations.append({"generator": repr(g), "i": i, "lhs": repr(lhs), "rhs": repr(rhs)})
        return rep

    @classmethod
    def identity(cls, X: FiniteSimplicialSet) -> "SimplicialMap":
        return cls(X, X, {g: X.generator(g) for g in X.all_generators()})

