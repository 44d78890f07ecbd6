"""Sparse exact linear algebra over a field from :mod:`udrings.fields`.

Vectors and equation rows are ``dict[int, element]`` with zero entries
omitted.  Systems arising from string modules and projectives have at most
two terms per equation; those are solved by a weighted union-find, which is
exact elimination specialised to that shape.  Anything else goes through
incremental sparse Gaussian elimination.
"""

from __future__ import annotations

from typing import Iterable

from .fields import QQ


def _reducer(field):
    p = field.characteristic
    if p:
        return lambda x: x % p
    return lambda x: x


def _coerce_row(row: dict, field, red) -> dict:
    out = {}
    for k, v in row.items():
        v = red(field(v))
        if v:
            out[k] = v
    return out


def nullspace(rows: Iterable[dict], nvars: int, field=QQ) -> list[dict]:
    """Basis of ``{x : row . x = 0 for every row}`` in ``field**nvars``."""
    red = _reducer(field)
    rows = [r for r in (_coerce_row(r, field, red) for r in rows) if r]
    if all(len(r) <= 2 for r in rows):
        return _nullspace_binary(rows, nvars, field, red)
    return _nullspace_general(rows, nvars, field, red)


def _nullspace_binary(rows, nvars, field, red):
    # each variable is weight[x] * value(root(x)); a dead root is forced to 0
    parent = list(range(nvars))
    weight = [field.one] * nvars
    dead = [False] * nvars

    def find(x):
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        root = x
        # compress, accumulating weights from the root downwards
        acc = field.one
        for y in reversed(path):
            acc = red(acc * weight[y])
            weight[y] = acc
            parent[y] = root
        return root

    for row in rows:
        items = list(row.items())
        if len(items) == 1:
            dead[find(items[0][0])] = True
            continue
        (x, cx), (y, cy) = items
        # cx*x + cy*y = 0  ->  x = r*y
        r = red(-cy * field.inv(cx))
        rx, ry = find(x), find(y)
        wx = weight[x] if x != rx else field.one
        wy = weight[y] if y != ry else field.one
        if rx == ry:
            if red(wx - r * wy):
                dead[rx] = True
            continue
        # wx*rx = r*wy*ry  ->  rx = (r*wy/wx) * ry
        parent[rx] = ry
        weight[rx] = red(r * wy * field.inv(wx))
        dead[ry] = dead[ry] or dead[rx]

    comps: dict[int, dict] = {}
    for v in range(nvars):
        root = find(v)
        if dead[root]:
            continue
        w = weight[v] if v != root else field.one
        comps.setdefault(root, {})[v] = w
    return [comps[r] for r in sorted(comps)]


def _nullspace_general(rows, nvars, field, red):
    pivots = echelon(rows, field, red)
    # back-substitute to reduced echelon form
    order = list(reversed(list(pivots)))  # latest pivot first: its row holds no other pivot
    for pv in order:
        row = pivots[pv]
        for other in order:
            if other != pv and pv in pivots[other]:
                _axpy(pivots[other], row, -pivots[other][pv], red)
    basis = []
    for free in range(nvars):
        if free in pivots:
            continue
        vec = {free: field.one}
        for pv, row in pivots.items():
            c = row.get(free)
            if c:
                vec[pv] = red(-c)
        basis.append(vec)
    return basis


def _axpy(target: dict, row: dict, c, red) -> None:
    """target += c * row, in place."""
    for k, v in row.items():
        nv = red(target.get(k, 0) + c * v)
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def echelon(rows: Iterable[dict], field=QQ, red=None) -> dict[int, dict]:
    """Incremental echelon form; returns ``{pivot_var: row}`` with unit pivots."""
    red = red or _reducer(field)
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {k: red(field(v)) for k, v in raw.items()}
        row = {k: v for k, v in row.items() if v}
        while row:
            hit = next((k for k in row if k in pivots), None)
            if hit is None:
                break
            _axpy(row, pivots[hit], -row[hit], red)
        if not row:
            continue
        pv = min(row)
        c = field.inv(row[pv])
        pivots[pv] = {k: red(v * c) for k, v in row.items()}
    return pivots


def rank(vectors: Iterable[dict], field=QQ) -> int:
    return len(echelon(vectors, field))


def in_span(vector: dict, basis_echelon: dict[int, dict], field=QQ) -> bool:
    red = _reducer(field)
    row = {k: red(field(v)) for k, v in vector.items()}
    row = {k: v for k, v in row.items() if v}
    while row:
        hit = next((k for k in row if k in basis_echelon), None)
        if hit is None:
            return False
        _axpy(row, basis_echelon[hit], -row[hit], red)
    return True


# dense helpers: matrices are lists (or tuples) of rows

def zeros(r: int, c: int) -> list[list]:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> list[list]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b, field=QQ, ncols=None):
    red = _reducer(field)
    cols = ncols if ncols is not None else (len(b[0]) if b else 0)
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                x = field(x)
                brow = b[k]
                for j in range(cols):
                    y = brow[j]
                    if y:
                        acc[j] = red(acc[j] + x * field(y))
        out.append(acc)
    return out


def mat_rank(a, field=QQ) -> int:
    return rank(({j: x for j, x in enumerate(row) if x} for row in a), field)


def mat_is_zero(a, field=QQ) -> bool:
    red = _reducer(field)
    return all(not red(field(x)) for row in a for x in row)


def mat_equal(a, b, field=QQ) -> bool:
    red = _reducer(field)
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if red(field(x) - field(y)):
                return False
    return True


def reduced_echelon(vectors: Iterable[dict], field=QQ) -> list[tuple[int, dict]]:
    """Reduced row echelon basis of the span, as ``(pivot, row)`` sorted by pivot."""
    red = _reducer(field)
    pivots = echelon(vectors, field, red)
    order = list(reversed(list(pivots)))  # latest pivot first: its row holds no other pivot
    for pv in order:
        row = pivots[pv]
        for other in order:
            if other != pv and pv in pivots[other]:
                _axpy(pivots[other], row, -pivots[other][pv], red)
    return [(pv, pivots[pv]) for pv in sorted(pivots)]
