"""The algebras kQ/I for the doubled cyclic quiver with m vertices.

Arrows are ``a_i : i -> i+1`` and ``abar_i : i+1 -> i``; the ideal is
generated by ``a_{i+1} a_i``, ``abar_{i-1} abar_i`` and the difference of the
two length-2N cycles at each vertex.  Words are written right to left, as
tuples ``(w_1, ..., w_n)`` where ``w_n`` is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import CompositionError, ParameterError

A, ABAR = 0, 1


class Letter(NamedTuple):
    """An arrow (``inverted=False``) or its formal inverse.

    Tuple order (kind, index, inverted) is the total order used for
    canonical forms.
    """

    kind: int
    index: int
    inverted: bool = False

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, not self.inverted)

    @property
    def arrow(self) -> "Letter":
        return Letter(self.kind, self.index, False)

    def __str__(self):
        base = ("a" if self.kind == A else "A") + str(self.index)
        return base + "-" if self.inverted else base


def arrow_source(kind: int, index: int, m: int) -> int:
    return index % m if kind == A else (index + 1) % m


def arrow_target(kind: int, index: int, m: int) -> int:
    return (index + 1) % m if kind == A else index % m


def source(letter: Letter, m: int) -> int:
    if letter.inverted:
        return arrow_target(letter.kind, letter.index, m)
    return arrow_source(letter.kind, letter.index, m)


def target(letter: Letter, m: int) -> int:
    if letter.inverted:
        return arrow_source(letter.kind, letter.index, m)
    return arrow_target(letter.kind, letter.index, m)


def a(i: int) -> Letter:
    return Letter(A, i)


def abar(i: int) -> Letter:
    return Letter(ABAR, i)


@dataclass(frozen=True)
class Algebra:
    m: int
    N: int
    kappa: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or not isinstance(self.N, int):
            raise ParameterError("m and N must be integers", m=self.m, N=self.N)
        if self.m < 3:
            raise ParameterError(f"need m >= 3, got m={self.m}", m=self.m)
        if self.N < 1:
            raise ParameterError(f"need N >= 1, got N={self.N}", N=self.N)
        object.__setattr__(self, "kappa", self.m // 2)

    def __repr__(self):
        return f"Algebra(m={self.m}, N={self.N})"

    def vertex(self, i: int) -> int:
        return i % self.m

    def letter(self, kind: int, index: int, inverted: bool = False) -> Letter:
        return Letter(kind, index % self.m, inverted)

    @property
    def arrows(self) -> tuple[Letter, ...]:
        return tuple(Letter(k, i) for k in (A, ABAR) for i in range(self.m))

    def arrows_from(self, v: int) -> tuple[Letter, Letter]:
        v %= self.m
        return (Letter(A, v), Letter(ABAR, (v - 1) % self.m))

    def arrows_into(self, v: int) -> tuple[Letter, Letter]:
        v %= self.m
        return (Letter(A, (v - 1) % self.m), Letter(ABAR, v))

    def source(self, letter: Letter) -> int:
        return source(letter, self.m)

    def target(self, letter: Letter) -> int:
        return target(letter, self.m)

    def max_run(self) -> int:
        """Longest nonzero path that is not a socle element."""
        return 2 * self.N - 1


def make_algebra(m: int, N: int) -> Algebra:
    return Algebra(m, N)


@dataclass(frozen=True)
class PathElement:
    """A nonzero path modulo the ideal, in normal form; ``ZERO`` otherwise.

    Socle paths are normalised to the cycle whose first applied arrow is
    ``a_start``.
    """

    start: int | None
    letters: tuple[Letter, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.start is None

    def __len__(self):
        return len(self.letters)

    def end(self, m: int) -> int:
        return target(self.letters[0], m) if self.letters else self.start

    def __str__(self):
        if self.is_zero:
            return "0"
        if not self.letters:
            return f"e{self.start}"
        return " ".join(str(x) for x in self.letters)


ZERO = PathElement(None)


def socle_path(alg: Algebra, v: int) -> PathElement:
    """``(abar_v a_v)^N`` written right to left."""
    v %= alg.m
    return PathElement(v, (Letter(ABAR, v), Letter(A, v)) * alg.N)


def path_product(alg: Algebra, letters: Sequence[Letter], start: int | None = None) -> PathElement:
    """Normal form of the product ``w_1 w_2 ... w_n`` (``w_n`` applied first)."""
    letters = tuple(Letter(x.kind, x.index % alg.m, False) if not x.inverted else x for x in letters)
    if any(x.inverted for x in letters):
        raise CompositionError("paths contain arrows only", letters=letters)
    if not letters:
        if start is None:
            raise CompositionError("empty path needs a start vertex")
        return PathElement(start % alg.m)
    for j in range(len(letters) - 1):
        if alg.source(letters[j]) != alg.target(letters[j + 1]):
            raise CompositionError(
                f"{letters[j]} cannot follow {letters[j + 1]}", position=j
            )
    first = alg.source(letters[-1])
    if start is not None and start % alg.m != first:
        raise CompositionError("path does not start at the given vertex", start=start)
    for j in range(len(letters) - 1):
        if letters[j].kind == letters[j + 1].kind:
            return ZERO
    n = len(letters)
    if n > 2 * alg.N:
        return ZERO
    if n == 2 * alg.N:
        return socle_path(alg, first)
    return PathElement(first, letters)


def paths_from(alg: Algebra, v: int) -> list[PathElement]:
    """Basis of the indecomposable projective at ``v``: nonzero paths starting there.

    Order: the trivial path, the arm through ``a_v``, the arm through
    ``abar_{v-1}``, and the socle last.
    """
    v %= alg.m
    out = [PathElement(v)]
    for first in alg.arrows_from(v):
        word = [first]
        while len(word) < 2 * alg.N:
            out.append(PathElement(v, tuple(reversed(word))))
            nxt = Letter(1 - word[-1].kind, word[-1].index)
            word.append(nxt)
    out.append(socle_path(alg, v))
    return out


def left_multiply(alg: Algebra, arrow: Letter, p: PathElement) -> PathElement:
    if p.is_zero:
        return ZERO
    end = p.end(alg.m)
    if alg.source(arrow) != end:
        return ZERO
    return path_product(alg, (arrow,) + p.letters, start=p.start)


def projective(alg: Algebra, i: int):
    from .representations import projective_module

    return projective_module(alg, i)
