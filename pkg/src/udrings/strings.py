"""Strings: validity, equivalence, hooks and co-hooks, and the named families.

A string is stored as its word ``(w_1, ..., w_n)`` read right to left
(``w_n`` is walked first) together with its end vertices.  ``1_v`` is the
trivial string at ``v``.

For trivial strings the two sides are told apart by a fixed convention: the
right side (start side) uses the arrows joining ``v-1`` and ``v``; the left
side (end side) uses those joining ``v`` and ``v+1``.  This makes
``(1_i)_h = c_i`` and ``_h(1_i) = d_i`` for the hook words used by the
classifier.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .algebra import A, ABAR, Algebra, Letter
from .errors import (
    CompositionError,
    ForbiddenSubwordError,
    HookUndefinedError,
    NotAHookError,
    NotReducedError,
    OutOfRangeError,
    ParameterError,
    ParityError,
    ParseError,
)


@dataclass(frozen=True, order=True)
class StringRep:
    letters: tuple[Letter, ...]
    s: int
    t: int

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def inverse(self) -> "StringRep":
        if not self.letters:
            return self
        return StringRep(tuple(x.inverse() for x in reversed(self.letters)), self.t, self.s)

    @property
    def canonical(self) -> bool:
        return self.letters <= self.inverse().letters

    def canonical_form(self) -> "StringRep":
        return self if self.canonical else self.inverse()

    def key(self) -> tuple:
        """Hashable identifier of the equivalence class."""
        c = self.canonical_form()
        return (c.letters, c.s)

    @property
    def is_directed(self) -> bool:
        return bool(self.letters) and not any(x.inverted for x in self.letters)

    def vertices(self, m: int) -> list[int]:
        """``v(j)``: the vertex carrying basis vector ``z_j``, for j = 0..n."""
        out = [self.t]
        for x in self.letters:
            out.append(_src(x, m))
        return out

    def __str__(self):
        return format_string(self)


def _src(x: Letter, m: int) -> int:
    if x.inverted:
        return (x.index + 1) % m if x.kind == A else x.index % m
    return x.index % m if x.kind == A else (x.index + 1) % m


def _tgt(x: Letter, m: int) -> int:
    if x.inverted:
        return x.index % m if x.kind == A else (x.index + 1) % m
    return (x.index + 1) % m if x.kind == A else x.index % m


def trivial(alg: Algebra, v: int) -> StringRep:
    v %= alg.m
    return StringRep((), v, v)


# -- validity ------------------------------------------------------------

def find_violation(alg: Algebra, letters: Sequence[Letter]):
    """Return ``None`` for a valid word, else ``(code, position, subword)``.

    Raises ``CompositionError`` when consecutive letters do not compose.
    """
    m, limit = alg.m, 2 * alg.N - 1
    run = 0
    for j, x in enumerate(letters):
        if j:
            prev = letters[j - 1]
            if _src(prev, m) != _tgt(x, m):
                raise CompositionError(f"{prev} cannot follow {x}", position=j - 1)
            if prev == x.inverse():
                return ("NOT_REDUCED", j - 1, (prev, x))
            if prev.inverted == x.inverted:
                if prev.kind == x.kind:
                    return ("FORBIDDEN_SUBWORD", j - 1, (prev, x))
                run += 1
                if run > limit:
                    return ("FORBIDDEN_SUBWORD", j - run + 1, tuple(letters[j - run + 1 : j + 1]))
                continue
        run = 1
        if run > limit:
            return ("FORBIDDEN_SUBWORD", j, (x,))
    return None


def validate(alg: Algebra, word, vertex: int | None = None) -> StringRep:
    """Check a word and return it as a :class:`StringRep`.

    ``word`` is a sequence of letters, a ``StringRep`` or the text syntax;
    an empty word needs ``vertex``.
    """
    if isinstance(word, str):
        return parse(alg, word)
    if isinstance(word, StringRep):
        letters = word.letters
        if not letters:
            vertex = word.s
    else:
        letters = tuple(word)
    letters = tuple(Letter(x.kind, x.index % alg.m, bool(x.inverted)) for x in letters)
    if not letters:
        if vertex is None:
            raise ParameterError("trivial string needs a vertex")
        return trivial(alg, vertex)
    bad = find_violation(alg, letters)
    if bad is not None:
        code, pos, sub = bad
        text = " ".join(str(x) for x in sub)
        if code == "NOT_REDUCED":
            raise NotReducedError(f"not reduced at position {pos}: {text}", position=pos, subword=text)
        raise ForbiddenSubwordError(
            f"forbidden subword {text} at position {pos}", position=pos, subword=text
        )
    return StringRep(letters, _src(letters[-1], alg.m), _tgt(letters[0], alg.m))


def is_string(alg: Algebra, letters: Sequence[Letter]) -> bool:
    try:
        return find_violation(alg, letters) is None
    except CompositionError:
        return False


def equivalent(c: StringRep, d: StringRep) -> bool:
    return c == d or c.inverse() == d


def compose(alg: Algebra, c: StringRep, d: StringRep) -> StringRep:
    """``CD``: requires ``s(C) = t(D)``; no orientation flipping."""
    if c.s != d.t:
        raise CompositionError(f"s({c}) = {c.s} differs from t({d}) = {d.t}")
    if c.is_trivial:
        return d
    if d.is_trivial:
        return c
    letters = c.letters + d.letters
    if not is_string(alg, letters):
        raise CompositionError(f"{format_string(c)} . {format_string(d)} is not a string")
    return validate(alg, letters)


# -- text syntax ---------------------------------------------------------

_TOKEN = re.compile(r"^([aAe])(-?\d+)(-?)$")


def parse(alg: Algebra, text: str) -> StringRep:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty string text")
    letters = []
    for tok in tokens:
        mt = _TOKEN.match(tok)
        if not mt:
            raise ParseError(f"bad token {tok!r}", token=tok)
        head, idx, inv = mt.groups()
        if head == "e":
            if len(tokens) != 1 or inv:
                raise ParseError("a trivial string e<i> must stand alone", token=tok)
            return trivial(alg, int(idx))
        letters.append(Letter(A if head == "a" else ABAR, int(idx) % alg.m, inv == "-"))
    return validate(alg, letters)


def format_string(c: StringRep) -> str:
    if c.is_trivial:
        return f"e{c.s}"
    return " ".join(str(x) for x in c.letters)


# -- peaks, deeps, hooks ---------------------------------------------------

class Side(str, Enum):
    LEFT = "LEFT"
    RIGHT = "RIGHT"


class HookKind(str, Enum):
    HOOK = "HOOK"
    COHOOK = "COHOOK"


class Direction(str, Enum):
    ADD = "ADD"
    STRIP = "STRIP"


def _candidates(alg: Algebra, c: StringRep, side: Side, inverted: bool) -> list[Letter]:
    """Letters x (arrows, or inverses if ``inverted``) with Cx resp. xC a string."""
    m = alg.m
    if side is Side.RIGHT:
        v = c.s
        pool = [Letter(k, i, inverted) for k in (A, ABAR) for i in ((v - 1) % m, v)]
        pool = [x for x in pool if _tgt(x, m) == v]
        if c.is_trivial:
            return [x for x in pool if x.index == (v - 1) % m]
        return [x for x in pool if is_string(alg, c.letters + (x,))]
    v = c.t
    pool = [Letter(k, i, inverted) for k in (A, ABAR) for i in ((v - 1) % m, v)]
    pool = [x for x in pool if _src(x, m) == v]
    if c.is_trivial:
        return [x for x in pool if x.index == v]
    return [x for x in pool if is_string(alg, (x,) + c.letters)]


def _any_extension(alg: Algebra, c: StringRep, side: Side, inverted: bool) -> bool:
    # peak/deep status uses the plain definition, without the trivial convention
    m = alg.m
    v = c.s if side is Side.RIGHT else c.t
    for k in (A, ABAR):
        for i in ((v - 1) % m, v):
            x = Letter(k, i, inverted)
            if side is Side.RIGHT:
                if _tgt(x, m) == v and is_string(alg, c.letters + (x,)):
                    return True
            elif _src(x, m) == v and is_string(alg, (x,) + c.letters):
                return True
    return False


def peak_deep_status(alg: Algebra, c: StringRep) -> dict[str, bool]:
    return {
        "starts_on_peak": not _any_extension(alg, c, Side.RIGHT, False),
        "starts_in_deep": not _any_extension(alg, c, Side.RIGHT, True),
        "ends_on_peak": not _any_extension(alg, c, Side.LEFT, True),
        "ends_in_deep": not _any_extension(alg, c, Side.LEFT, False),
    }


def _flip(x: Letter) -> Letter:
    return Letter(1 - x.kind, x.index, x.inverted)


def maximal_run(alg: Algebra, beta: Letter) -> tuple[Letter, ...]:
    """The maximal directed string whose leftmost and rightmost letter is ``beta``."""
    out = [beta]
    while len(out) < 2 * alg.N - 1:
        out.append(_flip(out[-1]))
    return tuple(out)


def maximal_directed(alg: Algebra) -> list[StringRep]:
    out = []
    for i in range(alg.m):
        out.append(validate(alg, maximal_run(alg, Letter(A, i))))
        out.append(validate(alg, maximal_run(alg, Letter(ABAR, (i - 1) % alg.m))))
    return sorted(out, key=lambda c: c.letters)


def _other(pair: Sequence[Letter], x: Letter) -> Letter:
    rest = [y for y in pair if y != x]
    return rest[0]


def _add(alg: Algebra, c: StringRep, side: Side, kind: HookKind) -> StringRep:
    inverted = kind is HookKind.COHOOK if side is Side.RIGHT else kind is HookKind.HOOK
    cands = _candidates(alg, c, side, inverted)
    if not cands:
        where = "starts" if side is Side.RIGHT else "ends"
        what = "on a peak" if (kind is HookKind.HOOK) else "in a deep"
        raise HookUndefinedError(f"{format_string(c)} {where} {what}")
    x = cands[0]
    arrow = x.arrow
    if side is Side.RIGHT and kind is HookKind.HOOK:
        beta = _other(alg.arrows_from(alg.source(arrow)), arrow)
        tail = tuple(y.inverse() for y in maximal_run(alg, beta))
        letters = c.letters + (x,) + tail
    elif side is Side.RIGHT:
        beta = _other(alg.arrows_into(alg.target(arrow)), arrow)
        letters = c.letters + (x,) + maximal_run(alg, beta)
    elif kind is HookKind.HOOK:
        beta = _other(alg.arrows_from(alg.source(arrow)), arrow)
        letters = maximal_run(alg, beta) + (x,) + c.letters
    else:
        beta = _other(alg.arrows_into(alg.target(arrow)), arrow)
        head = tuple(y.inverse() for y in maximal_run(alg, beta))
        letters = head + (x,) + c.letters
    if not is_string(alg, letters):
        raise HookUndefinedError(f"extension of {format_string(c)} is not a string")
    return validate(alg, letters)


def _strip(alg: Algebra, c: StringRep, side: Side, kind: HookKind) -> StringRep:
    k = 2 * alg.N
    if len(c) < k:
        raise NotAHookError(f"{format_string(c)} is too short to end with a {kind.value.lower()}")
    if side is Side.RIGHT:
        rest, x = c.letters[:-k], c.letters[-k]
        v = _tgt(x, alg.m)
    else:
        rest, x = c.letters[k:], c.letters[k - 1]
        v = _src(x, alg.m)
    smaller = validate(alg, rest, vertex=v)
    try:
        again = _add(alg, smaller, side, kind)
    except HookUndefinedError:
        again = None
    if again != c:
        raise NotAHookError(f"{format_string(c)} does not end with a {side.value.lower()} {kind.value.lower()}")
    return smaller


def modify_hook(alg: Algebra, c: StringRep, side, kind, direction) -> StringRep:
    side, kind, direction = Side(side), HookKind(kind), Direction(direction)
    if direction is Direction.ADD:
        return _add(alg, c, side, kind)
    return _strip(alg, c, side, kind)


def hook_right(alg, c):
    return _add(alg, c, Side.RIGHT, HookKind.HOOK)


def hook_left(alg, c):
    return _add(alg, c, Side.LEFT, HookKind.HOOK)


def cohook_right(alg, c):
    return _add(alg, c, Side.RIGHT, HookKind.COHOOK)


def cohook_left(alg, c):
    return _add(alg, c, Side.LEFT, HookKind.COHOOK)


def try_modify(alg, c, side, kind, direction):
    try:
        return modify_hook(alg, c, side, kind, direction)
    except (HookUndefinedError, NotAHookError):
        return None


def hooks_left(alg: Algebra, c: StringRep, n: int) -> StringRep:
    for _ in range(n):
        c = hook_left(alg, c)
    return c


def hooks_right(alg: Algebra, c: StringRep, n: int) -> StringRep:
    for _ in range(n):
        c = hook_right(alg, c)
    return c


# -- named families --------------------------------------------------------

class Family(str, Enum):
    Z_PRIME = "Z_PRIME"
    Z_DOUBLE_PRIME = "Z_DOUBLE_PRIME"
    Z_LEVEL = "Z_LEVEL"
    W_LEVEL = "W_LEVEL"
    THETA = "THETA"
    HOOK_CHAIN_C = "HOOK_CHAIN_C"
    COHOOK_CHAIN_D = "COHOOK_CHAIN_D"
    MAXIMAL_DIRECTED = "MAXIMAL_DIRECTED"
    S_CHAIN = "S_CHAIN"
    T_CHAIN = "T_CHAIN"


@dataclass(frozen=True)
class FamilySpec:
    """Parameters of a named string.

    ``variant`` picks a branch: ``"prime"``/``"double_prime"`` for the
    zigzags, ``"first"``/``"second"`` for the theta words, ``"a"``/``"abar"``
    for maximal directed strings.  ``choices`` lists explicit later branch
    selections for the inductive families; when omitted, every later step
    uses the only branch that yields a string (the other one always contains
    a relation).
    """

    name: Family
    base: int = 0
    level: int = 0
    variant: str | None = None
    choices: tuple[str, ...] | None = None


def zigzag(alg: Algebra, i: int, first_direct: bool, length: int) -> StringRep:
    """Alternating string walking forward from ``i``; first walked letter ``a_i`` or ``abar_i^-1``."""
    m = alg.m
    walked = []
    direct = first_direct
    for k in range(length):
        v = (i + k) % m
        walked.append(Letter(A, v) if direct else Letter(ABAR, v, True))
        direct = not direct
    if not walked:
        return trivial(alg, i)
    return validate(alg, tuple(reversed(walked)))


def _zigzag_length(alg: Algebra) -> int:
    return alg.m - 1 if alg.m % 2 else alg.m


def _theta_step(alg: Algebra, k: int, branch: str) -> tuple[Letter, ...]:
    m = alg.m
    if branch == "first":  # abar_{k+1}^-1 a_k
        return (Letter(ABAR, (k + 1) % m, True), Letter(A, k % m))
    if branch == "second":  # a_{k+1} abar_k^-1
        return (Letter(A, (k + 1) % m), Letter(ABAR, k % m, True))
    raise ParameterError(f"unknown theta branch {branch!r}")


def _grow(alg: Algebra, c: StringRep, steps: int, choices) -> StringRep:
    for step in range(steps):
        k = c.t
        if choices is not None:
            word = _theta_step(alg, k, choices[step]) + c.letters
            c = validate(alg, word)
            continue
        options = [
            _theta_step(alg, k, b) + c.letters
            for b in ("first", "second")
            if is_string(alg, _theta_step(alg, k, b) + c.letters)
        ]
        if len(options) != 1:
            raise OutOfRangeError(f"{len(options)} admissible continuations at vertex {k}")
        c = validate(alg, options[0])
    return c


def c_bar(alg: Algebra, k: int) -> tuple[Letter, ...]:
    m, N = alg.m, alg.N
    return (Letter(A, (k - 1) % m), Letter(ABAR, (k - 2) % m, True)) + (
        Letter(A, (k - 2) % m, True),
        Letter(ABAR, (k - 2) % m, True),
    ) * (N - 1)


def d_bar(alg: Algebra, k: int) -> tuple[Letter, ...]:
    m, N = alg.m, alg.N
    return (Letter(A, (k + 1) % m), Letter(ABAR, (k + 1) % m)) * (N - 1) + (
        Letter(A, (k + 1) % m),
        Letter(ABAR, k % m, True),
    )


def hook_chain_c(alg: Algebra, i: int, n: int) -> StringRep:
    """``c_i c_{i-2} ... c_{i-2(n-1)}``, ending at ``i``."""
    if n == 0:
        return trivial(alg, i)
    word = ()
    for j in range(n):
        word += c_bar(alg, i - 2 * j)
    return validate(alg, word)


def cohook_chain_d(alg: Algebra, i: int, n: int) -> StringRep:
    """``d_{i+2(n-1)} ... d_{i+2} d_i``, starting at ``i``."""
    if n == 0:
        return trivial(alg, i)
    word = ()
    for j in reversed(range(n)):
        word += d_bar(alg, i + 2 * j)
    return validate(alg, word)


def s_chain(alg: Algebra, i: int, level: int) -> StringRep:
    if not 0 <= level <= alg.N - 1:
        raise OutOfRangeError(f"S-chain level must lie in [0, {alg.N - 1}]", level=level)
    return validate(alg, (Letter(A, i % alg.m), Letter(ABAR, i % alg.m)) * level + (Letter(A, i % alg.m),))


def t_seed(alg: Algebra, i: int) -> StringRep:
    """``D_{i+1, kappa-1} a_i``."""
    d = cohook_chain_d(alg, i + 1, alg.kappa - 1)
    return validate(alg, d.letters + (Letter(A, i % alg.m),))


def t_chain(alg: Algebra, i: int, level: int) -> StringRep:
    if alg.m % 2:
        raise ParityError("T-chain is defined for even m only", m=alg.m)
    if level < 0:
        raise OutOfRangeError("level must be >= 0", level=level)
    seed = t_seed(alg, i)
    glue = (Letter(ABAR, (i - 1) % alg.m, True),)
    word = seed.letters
    for _ in range(level):
        word = word + glue + seed.letters
    return validate(alg, word)


def build_family(alg: Algebra, spec: FamilySpec) -> StringRep:
    name = Family(spec.name)
    i, level, variant = spec.base % alg.m, spec.level, spec.variant
    if level < 0:
        raise OutOfRangeError("level must be >= 0", level=level)
    if name is Family.Z_PRIME:
        return zigzag(alg, i, True, _zigzag_length(alg))
    if name is Family.Z_DOUBLE_PRIME:
        return zigzag(alg, i, False, _zigzag_length(alg))
    if name in (Family.Z_LEVEL, Family.W_LEVEL):
        base = zigzag(alg, i, variant != "double_prime", _zigzag_length(alg))
        if alg.m % 2:
            if name is Family.Z_LEVEL and level > 0:
                raise ParityError("levels above 0 need even m", m=alg.m)
            return base
        return _grow(alg, base, level, spec.choices)
    if name is Family.THETA:
        if level < 1:
            raise OutOfRangeError("theta level must be >= 1", level=level)
        first = validate(alg, _theta_step(alg, i, variant or "first"))
        later = spec.choices[: level - 1] if spec.choices is not None else None
        return _grow(alg, first, level - 1, later)
    if name is Family.HOOK_CHAIN_C:
        return hook_chain_c(alg, i, level)
    if name is Family.COHOOK_CHAIN_D:
        return cohook_chain_d(alg, i, level)
    if name is Family.MAXIMAL_DIRECTED:
        beta = Letter(ABAR, (i - 1) % alg.m) if variant == "abar" else Letter(A, i)
        return validate(alg, maximal_run(alg, beta))
    if name is Family.S_CHAIN:
        return s_chain(alg, i, level)
    if name is Family.T_CHAIN:
        return t_chain(alg, i, level)
    raise ParameterError(f"unknown family {name}")


# -- enumeration -----------------------------------------------------------

def _extensions(alg: Algebra, word: tuple[Letter, ...], v: int) -> list[Letter]:
    """Letters x with ``word + (x,)`` a string; ``v`` is the start vertex of ``word``."""
    m, limit = alg.m, 2 * alg.N - 1
    out = []
    for k in (A, ABAR):
        for i in sorted({(v - 1) % m, v}):
            for inv in (False, True):
                x = Letter(k, i, inv)
                if _tgt(x, m) != v:
                    continue
                if word:
                    last = word[-1]
                    if last == x.inverse():
                        continue
                    if last.inverted == inv:
                        if last.kind == k:
                            continue
                        run = 1
                        for y in reversed(word):
                            if y.inverted != inv:
                                break
                            run += 1
                        if run > limit:
                            continue
                out.append(x)
    return out


def enumerate_strings(alg: Algebra, max_len: int) -> Iterator[StringRep]:
    """Every string of length <= ``max_len``, once per equivalence class, canonical orientation."""
    if max_len < 0:
        raise OutOfRangeError("max_len must be >= 0")
    m = alg.m
    frontier = []
    for v in range(m):
        yield trivial(alg, v)
        frontier.append(((), v, v))
    for _ in range(max_len):
        nxt = []
        for word, s, t in frontier:
            for x in _extensions(alg, word, s):
                w2 = word + (x,)
                s2 = _src(x, m)
                t2 = t if word else _tgt(x, m)
                nxt.append((w2, s2, t2))
        nxt.sort()
        for w2, s2, t2 in nxt:
            c = StringRep(w2, s2, t2)
            if c.canonical:
                yield c
        frontier = nxt
