"""Finite-dimensional representations of the quiver, with exact entries.

A :class:`Rep` stores, per vertex, a dimension, and per arrow a dense
matrix whose rows index the target space and columns the source space.
Global basis indices run vertex by vertex (all of vertex 0 first).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache

from .algebra import A, ABAR, Algebra, Letter, PathElement, left_multiply, paths_from
from .fields import QQ
from .linalg import _reducer, mat_mul, zeros
from .strings import StringRep, validate


@dataclass(frozen=True, eq=False)
class Rep:
    alg: Algebra
    dims: tuple[int, ...]
    mats: dict  # Letter (arrow) -> matrix, shape dims[target] x dims[source]
    labels: tuple = ()  # one tag per global basis vector
    field: object = dc_field(default=QQ)

    def __post_init__(self):
        alg = self.alg
        object.__setattr__(self, "mats", dict(self.mats))
        object.__setattr__(self, "dims", tuple(self.dims))
        if len(self.dims) != alg.m:
            raise ValueError("need one dimension per vertex")
        for g in alg.arrows:
            mat = self.mats.get(g)
            rows, cols = self.dims[alg.target(g)], self.dims[alg.source(g)]
            if mat is None:
                self.mats[g] = zeros(rows, cols)
                continue
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError(f"matrix of {g} has the wrong shape")

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return tuple(out)

    def global_index(self, v: int, local: int) -> int:
        return self.offsets[v % self.alg.m] + local

    def local_index(self, g: int) -> tuple[int, int]:
        for v in reversed(range(self.alg.m)):
            if g >= self.offsets[v] and self.dims[v]:
                return v, g - self.offsets[v]
        raise IndexError(g)

    @cached_property
    def entries(self) -> dict:
        """Per arrow, the nonzero entries as ``(row, col, value)`` triples."""
        out = {}
        for g, mat in self.mats.items():
            out[g] = [(r, c, x) for r, row in enumerate(mat) for c, x in enumerate(row) if x]
        return out

    def act(self, arrow: Letter, v: int, vec: dict) -> dict:
        """Apply an arrow to a local vector (dict local index -> value) at its source."""
        red = _reducer(self.field)
        out: dict = {}
        for r, c, x in self.entries[arrow]:
            y = vec.get(c)
            if y:
                out[r] = red(out.get(r, 0) + self.field(x) * y)
        return {k: y for k, y in out.items() if y}

    def dimension_vector(self) -> tuple[int, ...]:
        return self.dims

    def __repr__(self):
        return f"Rep(dims={self.dims})"


def _matrix_for(dims, alg, arrow, pairs):
    """Matrix of ``arrow`` with entry 1 at every (row, col) in ``pairs``."""
    mat = zeros(dims[alg.target(arrow)], dims[alg.source(arrow)])
    for r, c in pairs:
        mat[r][c] = 1
    return mat


def string_module(alg: Algebra, c: StringRep, field=QQ) -> Rep:
    """The canonical representation of a string: one basis vector z_j per position."""
    c = validate(alg, c)
    verts = c.vertices(alg.m)
    dims = [0] * alg.m
    local = []
    for v in verts:
        local.append(dims[v])
        dims[v] += 1
    pairs: dict = {g: [] for g in alg.arrows}
    for j, x in enumerate(c.letters, start=1):
        # x sits between z_{j-1} and z_j
        if x.inverted:
            pairs[x.arrow].append((local[j], local[j - 1]))
        else:
            pairs[x].append((local[j - 1], local[j]))
    mats = {g: _matrix_for(dims, alg, g, p) for g, p in pairs.items()}
    order = sorted(range(len(verts)), key=lambda j: (verts[j], local[j]))
    labels = tuple(f"z{j}" for j in order)
    return Rep(alg, tuple(dims), mats, labels, field)


def string_basis_positions(alg: Algebra, c: StringRep) -> list[tuple[int, int]]:
    """``(vertex, local index)`` of each z_j in :func:`string_module`."""
    counts = [0] * alg.m
    out = []
    for v in c.vertices(alg.m):
        out.append((v, counts[v]))
        counts[v] += 1
    return out


def _path_key(p: PathElement):
    return (p.start, p.letters)


def projective_module(alg: Algebra, i: int, field=QQ) -> Rep:
    """The indecomposable projective at ``i``, with basis the nonzero paths from ``i``."""
    dims, mats, labels = _projective_data(alg, i, field)
    return Rep(alg, dims, {g: [row[:] for row in mat] for g, mat in mats.items()}, labels, field)


@lru_cache(maxsize=None)
def _projective_data(alg: Algebra, i: int, field):
    paths = paths_from(alg, i)
    ends = [p.end(alg.m) for p in paths]
    dims = [0] * alg.m
    local = {}
    for p, v in zip(paths, ends):
        local[_path_key(p)] = dims[v]
        dims[v] += 1
    mats = {}
    for g in alg.arrows:
        pairs = []
        for p, v in zip(paths, ends):
            q = left_multiply(alg, g, p)
            if not q.is_zero:
                pairs.append((local[_path_key(q)], local[_path_key(p)]))
        mats[g] = _matrix_for(dims, alg, g, pairs)
    order = sorted(range(len(paths)), key=lambda j: (ends[j], local[_path_key(paths[j])]))
    labels = tuple(str(paths[j]) for j in order)
    return tuple(dims), mats, labels


def path_positions(alg: Algebra, i: int) -> list[tuple[int, int]]:
    """``(vertex, local index)`` of each path of :func:`paths_from` in the projective."""
    counts = [0] * alg.m
    out = []
    for p in paths_from(alg, i):
        v = p.end(alg.m)
        out.append((v, counts[v]))
        counts[v] += 1
    return out


def simple_module(alg: Algebra, i: int, field=QQ) -> Rep:
    dims = [0] * alg.m
    dims[i % alg.m] = 1
    return Rep(alg, tuple(dims), {}, ("s",), field)


def zero_module(alg: Algebra, field=QQ) -> Rep:
    return Rep(alg, (0,) * alg.m, {}, (), field)


def _compose_arrows(X: Rep, word: tuple[Letter, ...]):
    """Matrix of the path ``w_1 ... w_n`` (``w_n`` applied first) acting on X."""
    alg = X.alg
    start = alg.source(word[-1])
    mat = [[1 if r == c else 0 for c in range(X.dims[start])] for r in range(X.dims[start])]
    for g in reversed(word):
        mat = mat_mul(X.mats[g], mat, X.field, ncols=X.dims[start])
    return mat


def check_relations(alg: Algebra, X: Rep) -> bool:
    """True iff the zero relations hold and the two 2N-cycles at each vertex agree."""
    red = _reducer(X.field)
    for i in range(alg.m):
        for word in ((Letter(A, (i + 1) % alg.m), Letter(A, i)),
                     (Letter(ABAR, (i - 1) % alg.m), Letter(ABAR, i))):
            if any(red(X.field(x)) for row in _compose_arrows(X, word) for x in row):
                return False
        left = _compose_arrows(X, (Letter(ABAR, i), Letter(A, i)) * alg.N)
        prev = (i - 1) % alg.m
        right = _compose_arrows(X, (Letter(A, prev), Letter(ABAR, prev)) * alg.N)
        for ra, rb in zip(left, right):
            for x, y in zip(ra, rb):
                if red(X.field(x) - X.field(y)):
                    return False
    return True


def direct_sum(X: Rep, Y: Rep) -> Rep:
    if X.alg != Y.alg:
        raise ValueError("representations over different algebras")
    alg = X.alg
    dims = tuple(a + b for a, b in zip(X.dims, Y.dims))
    mats = {}
    for g in alg.arrows:
        s, t = alg.source(g), alg.target(g)
        mat = zeros(dims[t], dims[s])
        for r, c, x in X.entries[g]:
            mat[r][c] = x
        for r, c, x in Y.entries[g]:
            mat[X.dims[t] + r][X.dims[s] + c] = x
        mats[g] = mat
    labels = ()
    if X.labels and Y.labels:
        # reorder to the vertex-major layout of the sum
        xs = [X.local_index(j) for j in range(X.dim)]
        ys = [Y.local_index(j) for j in range(Y.dim)]
        tagged = [((v, k), "0:" + X.labels[j]) for j, (v, k) in enumerate(xs)]
        tagged += [((v, X.dims[v] + k), "1:" + Y.labels[j]) for j, (v, k) in enumerate(ys)]
        labels = tuple(t for _, t in sorted(tagged))
    return Rep(alg, dims, mats, labels, X.field)


def radical_images(X: Rep, v: int) -> list[dict]:
    """Spanning vectors of ``rad(X)_v``: images of all arrows ending at v."""
    out = []
    for g in X.alg.arrows_into(v):
        for c in range(X.dims[X.alg.source(g)]):
            col = {r: x for r, cc, x in X.entries[g] if cc == c}
            if col:
                out.append(col)
    return out


def top_basis(X: Rep, v: int) -> list[int]:
    """Local indices at v of standard vectors spanning a complement of ``rad(X)_v``."""
    from .linalg import echelon, in_span

    ech = echelon(radical_images(X, v), X.field)
    out = []
    for k in range(X.dims[v]):
        vec = {k: 1}
        if not in_span(vec, ech, X.field):
            out.append(k)
            row = {k: X.field.one}
            ech = echelon(list(ech.values()) + [row], X.field)
    return out


def top_dim(X: Rep) -> int:
    return sum(len(top_basis(X, v)) for v in range(X.alg.m))


def socle_dim(X: Rep) -> int:
    from .linalg import nullspace

    total = 0
    for v in range(X.alg.m):
        rows = []
        for g in X.alg.arrows_from(v):
            for r in range(X.dims[X.alg.target(g)]):
                row = {c: x for rr, c, x in X.entries[g] if rr == r}
                if row:
                    rows.append(row)
        total += len(nullspace(rows, X.dims[v], X.field))
    return total
