"""Homomorphisms between representations.

Two independent routes are provided.  :func:`hom_oracle` solves the
intertwining equations directly.  :func:`hom_basis` builds the canonical
basis of a Hom space between string modules from pairs of substring
occurrences (a quotient occurrence in the source, a submodule occurrence in
the target).  The test-suite checks that the two agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import Algebra, paths_from
from .errors import IdentificationFailed, ZeroModuleError
from .fields import QQ
from .linalg import _reducer, mat_mul, mat_rank, nullspace, rank, reduced_echelon, zeros
from .representations import (
    Rep,
    direct_sum,
    path_positions,
    projective_module,
    string_basis_positions,
    string_module,
    top_basis,
    zero_module,
)
from .strings import StringRep


@dataclass(frozen=True, eq=False)
class HomElement:
    """A family of matrices ``f_v : X_v -> Y_v`` (rows index Y_v)."""

    source: Rep
    target: Rep
    blocks: tuple  # one matrix per vertex

    @property
    def field(self):
        return self.source.field

    def to_vector(self) -> dict:
        out, base = {}, 0
        for v, blk in enumerate(self.blocks):
            cols = self.source.dims[v]
            for r, row in enumerate(blk):
                for c, x in enumerate(row):
                    if x:
                        out[base + r * cols + c] = x
            base += self.target.dims[v] * cols
        return out

    def is_intertwining(self) -> bool:
        X, Y, alg = self.source, self.target, self.source.alg
        red = _reducer(X.field)
        for g in alg.arrows:
            s, t = alg.source(g), alg.target(g)
            left = mat_mul(self.blocks[t], X.mats[g], X.field, ncols=X.dims[s])
            right = mat_mul(Y.mats[g], self.blocks[s], X.field, ncols=X.dims[s])
            for ra, rb in zip(left, right):
                for x, y in zip(ra, rb):
                    if red(X.field(x) - X.field(y)):
                        return False
        return True

    def compose(self, first: "HomElement") -> "HomElement":
        """``self o first``."""
        blocks = tuple(
            mat_mul(self.blocks[v], first.blocks[v], self.field, ncols=first.source.dims[v])
            for v in range(len(self.blocks))
        )
        return HomElement(first.source, self.target, blocks)

    def rank(self) -> int:
        return sum(mat_rank(b, self.field) for b in self.blocks)

    def is_zero(self) -> bool:
        red = _reducer(self.field)
        return all(not red(self.field(x)) for b in self.blocks for row in b for x in row)

    def is_isomorphism(self) -> bool:
        X, Y = self.source, self.target
        if X.dims != Y.dims:
            return False
        return all(mat_rank(b, self.field) == X.dims[v] for v, b in enumerate(self.blocks))


def hom_from_vector(X: Rep, Y: Rep, vec: dict) -> HomElement:
    blocks, base = [], 0
    for v in range(X.alg.m):
        rows, cols = Y.dims[v], X.dims[v]
        blk = zeros(rows, cols)
        for r in range(rows):
            for c in range(cols):
                x = vec.get(base + r * cols + c)
                if x:
                    blk[r][c] = x
        blocks.append(blk)
        base += rows * cols
    return HomElement(X, Y, tuple(blocks))


def hom_variable_count(X: Rep, Y: Rep) -> int:
    return sum(a * b for a, b in zip(X.dims, Y.dims))


def hom_equations(X: Rep, Y: Rep) -> list[dict]:
    """Rows of the linear system ``f_t X_g - Y_g f_s = 0`` over all arrows g."""
    alg = X.alg
    base, acc = [], 0
    for v in range(alg.m):
        base.append(acc)
        acc += X.dims[v] * Y.dims[v]
    rows = []
    for g in alg.arrows:
        s, t = alg.source(g), alg.target(g)
        xs, yt = X.dims[s], Y.dims[t]
        if not xs or not yt:
            continue
        col_x = [[] for _ in range(xs)]
        for k, c, x in X.entries[g]:
            col_x[c].append((k, x))
        row_y = [[] for _ in range(yt)]
        for r, k, y in Y.entries[g]:
            row_y[r].append((k, y))
        xt, xs_cols = X.dims[t], X.dims[s]
        for R in range(yt):
            for C in range(xs):
                eq: dict = {}
                for k, x in col_x[C]:
                    var = base[t] + R * xt + k
                    eq[var] = eq.get(var, 0) + x
                for k, y in row_y[R]:
                    var = base[s] + k * xs_cols + C
                    eq[var] = eq.get(var, 0) - y
                if eq:
                    rows.append(eq)
    return rows


def hom_oracle(X: Rep, Y: Rep, field=None) -> tuple[int, list[HomElement]]:
    """Dimension and a basis of Hom(X, Y), by solving the intertwining equations."""
    if X.alg != Y.alg:
        raise ValueError("representations over different algebras")
    field = field or X.field
    n = hom_variable_count(X, Y)
    basis = nullspace(hom_equations(X, Y), n, field)
    return len(basis), [hom_from_vector(X, Y, b) for b in basis]


def hom_dim(X: Rep, Y: Rep) -> int:
    return len(nullspace(hom_equations(X, Y), hom_variable_count(X, Y), X.field))


# -- canonical basis between string modules ---------------------------------

@dataclass(frozen=True)
class Occurrence:
    """A substring shared by two strings, placed as a quotient of S and a submodule of T.

    ``source_start`` is the index of the first basis vector of the substring
    inside M[S]; ``target_start`` likewise inside M[T]; ``length`` is the
    number of letters.  ``reversed`` records that the substring reads
    backwards in T, so that ``x_{j+t}`` goes to ``y_{k+length-t}``.
    """

    substring: StringRep
    source_start: int
    target_start: int
    length: int
    reversed: bool

    def pairs(self) -> tuple[tuple[int, int], ...]:
        j, k, n = self.source_start, self.target_start, self.length
        if self.reversed:
            return tuple((j + t, k + n - t) for t in range(n + 1))
        return tuple((j + t, k + t) for t in range(n + 1))


def _quotient_segments(c: StringRep):
    """Segments [j, j+l] of M[C] spanning a quotient: the complement is a submodule."""
    w, n = c.letters, len(c.letters)
    for j in range(n + 1):
        if j > 0 and w[j - 1].inverted:
            continue  # the letter left of z_j must be direct
        for end in range(j, n + 1):
            if end < n and not w[end].inverted:
                continue  # the letter right of z_end must be inverse
            yield j, end


def _sub_segments(c: StringRep):
    w, n = c.letters, len(c.letters)
    for j in range(n + 1):
        if j > 0 and not w[j - 1].inverted:
            continue
        for end in range(j, n + 1):
            if end < n and w[end].inverted:
                continue
            yield j, end


def admissible_occurrences(alg: Algebra, S: StringRep, T: StringRep) -> list[Occurrence]:
    m = alg.m
    vs, vt = S.vertices(m), T.vertices(m)
    subs: dict = {}
    for k, end in _sub_segments(T):
        word = T.letters[k:end]
        subs.setdefault(word, []).append((k, end))
    out, seen = [], set()
    for j, end in _quotient_segments(S):
        word = S.letters[j:end]
        n = end - j
        options = []
        for k, _ in subs.get(word, ()):
            options.append((k, False))
        if n:
            inv = tuple(x.inverse() for x in reversed(word))
            for k, _ in subs.get(inv, ()):
                options.append((k, True))
        for k, rev in options:
            if n == 0 and vs[j] != vt[k]:
                continue
            sub = StringRep(word, vs[end], vs[j]) if n else StringRep((), vs[j], vs[j])
            occ = Occurrence(sub, j, k, n, rev)
            key = occ.pairs()
            if key in seen:
                continue
            seen.add(key)
            out.append(occ)
    return out


def hom_from_pairs(X: Rep, Y: Rep, S: StringRep, T: StringRep, pairs) -> HomElement:
    alg = X.alg
    px = string_basis_positions(alg, S)
    py = string_basis_positions(alg, T)
    blocks = [zeros(Y.dims[v], X.dims[v]) for v in range(alg.m)]
    for a, b in pairs:
        v, ca = px[a]
        w, rb = py[b]
        if v != w:
            raise ValueError("a canonical map must preserve vertices")
        blocks[v][rb][ca] = 1
    return HomElement(X, Y, tuple(blocks))


def canonical_hom(alg: Algebra, S: StringRep, T: StringRep, occ: Occurrence,
                  field=QQ, modules=None) -> HomElement:
    X, Y = modules or (string_module(alg, S, field), string_module(alg, T, field))
    return hom_from_pairs(X, Y, S, T, occ.pairs())


def hom_basis(alg: Algebra, S: StringRep, T: StringRep, field=QQ) -> list[tuple[Occurrence, HomElement]]:
    X, Y = string_module(alg, S, field), string_module(alg, T, field)
    return [(occ, hom_from_pairs(X, Y, S, T, occ.pairs()))
            for occ in admissible_occurrences(alg, S, T)]


def hom_basis_size(alg: Algebra, S: StringRep, T: StringRep) -> int:
    return len(admissible_occurrences(alg, S, T))


def independent(homs: list[HomElement]) -> bool:
    if not homs:
        return True
    return rank([h.to_vector() for h in homs], homs[0].field) == len(homs)


# -- projective covers and stable Hom ---------------------------------------

def _walk(X: Rep, word, v: int, vec: dict) -> dict:
    for g in reversed(word):
        if not vec:
            return vec
        vec = X.act(g, v, vec)
        v = X.alg.target(g)
    return vec


def projective_cover(X: Rep) -> tuple[Rep, HomElement]:
    """``P(X) -> X``: one indecomposable projective per top basis vector."""
    alg = X.alg
    if X.dim == 0:
        raise ZeroModuleError("the zero module has no projective cover")
    tops = [(v, k) for v in range(alg.m) for k in top_basis(X, v)]
    P = zero_module(alg, X.field)
    blocks = [zeros(X.dims[v], 0) for v in range(alg.m)]
    for v, k in tops:
        Q = projective_module(alg, v, X.field)
        # columns of Q sit after the current columns of P at every vertex
        new_blocks = [[row + [0] * Q.dims[w] for row in blocks[w]] for w in range(alg.m)]
        for p, (w, loc) in zip(paths_from(alg, v), path_positions(alg, v)):
            image = _walk(X, p.letters, v, {k: 1})
            col = P.dims[w] + loc
            for r, x in image.items():
                new_blocks[w][r][col] = x
        blocks = new_blocks
        P = direct_sum(P, Q)
    return P, HomElement(P, X, tuple(blocks))


def _subrep(X: Rep, bases: list) -> tuple[Rep, HomElement]:
    """The subrepresentation spanned by reduced echelon ``bases`` (one list per vertex)."""
    alg, field = X.alg, X.field
    red = _reducer(field)
    dims = tuple(len(b) for b in bases)
    mats = {}
    for g in alg.arrows:
        s, t = alg.source(g), alg.target(g)
        mat = zeros(dims[t], dims[s])
        for c, (_, vec) in enumerate(bases[s]):
            image = X.act(g, s, vec)
            rest = dict(image)
            for r, (pv, row) in enumerate(bases[t]):
                coef = image.get(pv)
                if coef:
                    mat[r][c] = coef
                    for key, y in row.items():
                        z = red(rest.get(key, 0) - coef * y)
                        if z:
                            rest[key] = z
                        else:
                            rest.pop(key, None)
            if rest:
                raise ArithmeticError("subspace is not closed under the arrow action")
        mats[g] = mat
    K = Rep(alg, dims, mats, (), field)
    blocks = []
    for v in range(alg.m):
        blk = zeros(X.dims[v], dims[v])
        for c, (_, vec) in enumerate(bases[v]):
            for r, x in vec.items():
                blk[r][c] = x
        blocks.append(blk)
    return K, HomElement(K, X, tuple(blocks))


def kernel(f: HomElement) -> tuple[Rep, HomElement]:
    """The kernel of ``f`` as a representation, with its inclusion.

    The basis at each vertex is the reduced echelon basis of ``ker f_v``, so
    coordinates of a kernel vector are read off at the pivot positions.
    """
    X, field = f.source, f.field
    bases = []
    for v in range(X.alg.m):
        rows = [{c: x for c, x in enumerate(row) if x} for row in f.blocks[v]]
        bases.append(reduced_echelon(nullspace(rows, X.dims[v], field), field))
    return _subrep(X, bases)


def image(f: HomElement) -> tuple[Rep, HomElement]:
    """The image of ``f`` as a subrepresentation of the target, with its inclusion."""
    Y, field = f.target, f.field
    bases = []
    for v in range(Y.alg.m):
        blk = f.blocks[v]
        cols = [{r: blk[r][c] for r in range(len(blk)) if blk[r][c]} for c in range(f.source.dims[v])]
        bases.append(reduced_echelon(cols, field))
    return _subrep(Y, bases)


def same_subspace(f: HomElement, g: HomElement) -> bool:
    """Whether two maps into the same target have the same image."""
    if f.target.dims != g.target.dims:
        raise ValueError("maps into different targets")
    for v in range(f.target.alg.m):
        def cols(h):
            blk = h.blocks[v]
            return [{r: blk[r][c] for r in range(len(blk)) if blk[r][c]} for c in range(h.source.dims[v])]
        a, b = cols(f), cols(g)
        ra, rb = rank(a, f.field), rank(b, f.field)
        if ra != rb or rank(a + b, f.field) != ra:
            return False
    return True


def factoring_rank(X: Rep, Y: Rep) -> int:
    """Dimension of the maps X -> Y that factor through a projective."""
    if X.dim == 0 or Y.dim == 0:
        return 0
    P, epi = projective_cover(Y)
    _, lifts = hom_oracle(X, P)
    return rank([epi.compose(h).to_vector() for h in lifts], X.field)


def stable_hom_dim(X: Rep, Y: Rep) -> int:
    if X.dim == 0 or Y.dim == 0:
        return 0
    return hom_dim(X, Y) - factoring_rank(X, Y)


def find_isomorphism(X: Rep, Y: Rep, seed: int = 0, retries: int = 32) -> HomElement | None:
    """A random combination of a Hom basis that is invertible, or ``None``."""
    if X.dims != Y.dims:
        return None
    _, basis = hom_oracle(X, Y)
    if not basis:
        return None if X.dim else HomElement(X, Y, tuple(zeros(0, 0) for _ in X.dims))
    rng = random.Random(seed)
    red = _reducer(X.field)
    vecs = [b.to_vector() for b in basis]
    for _ in range(retries):
        coefs = [rng.randint(-9, 9) for _ in vecs]
        total: dict = {}
        for c, vec in zip(coefs, vecs):
            for key, x in vec.items():
                total[key] = red(total.get(key, 0) + c * x)
        f = hom_from_vector(X, Y, total)
        if f.is_isomorphism():
            return f
    return None


def require_isomorphism(X: Rep, Y: Rep, seed: int = 0) -> HomElement:
    f = find_isomorphism(X, Y, seed)
    if f is None:
        raise IdentificationFailed("no isomorphism found after the retry budget")
    return f
