"""Syzygies, their inverses, the translate tau = Omega^2, and Ext^1.

``omega`` computes the kernel of the projective cover of a string module
and reads the kernel back as a string: in the reduced echelon basis the
arrows act monomially, so the basis forms a walk that spells the string.
The walk comes with an explicit isomorphism, which is checked.  When the
walk does not apply, candidates with the same dimension vector are tested
with a randomized isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Algebra, Letter
from .errors import IdentificationFailed
from .fields import QQ
from .homs import HomElement, find_isomorphism, kernel, projective_cover, stable_hom_dim
from .linalg import zeros
from .representations import Rep, string_basis_positions, string_module
from .strings import StringRep, enumerate_strings, format_string, is_string, validate


@dataclass(frozen=True, eq=False)
class OmegaResult:
    string: StringRep
    witness_kernel: Rep
    witness_iso: HomElement  # kernel -> M[string]
    cover_dim: int

    def verify(self) -> bool:
        iso = self.witness_iso
        return (
            iso.source is self.witness_kernel
            and iso.is_intertwining()
            and iso.is_isomorphism()
            and self.witness_kernel.dim == self.string.length + 1
        )


def string_from_rep(K: Rep) -> tuple[StringRep, HomElement] | None:
    """Read a monomial representation as a string module, with an isomorphism.

    Returns ``None`` when the arrow action is not a walk spelling a valid
    string.
    """
    alg, field = K.alg, K.field
    n = K.dim
    if n == 0:
        return None
    # edges between global basis indices
    adj: dict[int, list] = {g: [] for g in range(n)}
    for arrow in alg.arrows:
        s, t = alg.source(arrow), alg.target(arrow)
        for r, c, x in K.entries[arrow]:
            u, w = K.global_index(s, c), K.global_index(t, r)
            adj[u].append((w, arrow, field(x), "out"))
            adj[w].append((u, arrow, field(x), "in"))
    if sum(len(e) for e in adj.values()) != 2 * (n - 1):
        return None
    ends = [u for u in range(n) if len(adj[u]) <= 1]
    if not ends or any(len(e) > 2 for e in adj.values()):
        return None
    for start in ends[:2] if n > 1 else ends:
        walked = _walk(field, adj, start, n)
        if walked is None:
            return None
        nodes, letters, scales = walked
        if not is_string(alg, letters):
            return None
        if letters:
            c = validate(alg, letters)
        else:
            v, _ = K.local_index(start)
            c = StringRep((), v, v)
        if n > 1 and not c.canonical:
            continue
        M = string_module(alg, c, field)
        pos = string_basis_positions(alg, c)
        blocks = [zeros(M.dims[v], K.dims[v]) for v in range(alg.m)]
        for j, node in enumerate(nodes):
            v, col = K.local_index(node)
            w, row = pos[j]
            if v != w:
                return None
            blocks[v][row][col] = field.inv(scales[j])
        return c, HomElement(K, M, tuple(blocks))
    return None


def _walk(field, adj, start, n):
    # z_j = scales[j] * e_{nodes[j]} makes every arrow act with coefficient 1
    nodes, letters, scales = [start], [], [field.one]
    prev, cur = None, start
    while True:
        nxt = [e for e in adj[cur] if e[0] != prev]
        if not nxt:
            break
        w, arrow, x, how = nxt[0]
        if how == "in":
            # the arrow sends w to cur, so the letter is the arrow itself
            letters.append(arrow)
            scales.append(_red(field, scales[-1] * field.inv(x)))
        else:
            letters.append(Letter(arrow.kind, arrow.index, True))
            scales.append(_red(field, scales[-1] * x))
        nodes.append(w)
        prev, cur = cur, w
        if len(nodes) > n:
            return None
    if len(nodes) != n:
        return None
    return nodes, tuple(letters), scales


def _red(field, x):
    p = field.characteristic
    return x % p if p else x


def _candidates_by_dims(alg: Algebra, dims: tuple[int, ...]):
    total = sum(dims)
    for c in enumerate_strings(alg, total - 1):
        if c.length != total - 1:
            continue
        counts = [0] * alg.m
        for v in c.vertices(alg.m):
            counts[v] += 1
        if tuple(counts) == tuple(dims):
            yield c


def identify(K: Rep, seed: int = 0) -> tuple[StringRep, HomElement]:
    """Find the string whose module is isomorphic to ``K``."""
    found = string_from_rep(K)
    if found is not None and found[1].is_intertwining() and found[1].is_isomorphism():
        return found
    for c in _candidates_by_dims(K.alg, K.dims):
        M = string_module(K.alg, c, K.field)
        iso = find_isomorphism(K, M, seed)
        if iso is not None:
            return c, iso
    raise IdentificationFailed("kernel matches no string module", dims=K.dims)


@lru_cache(maxsize=None)
def _omega_cached(alg: Algebra, c: StringRep, field, seed: int) -> OmegaResult:
    X = string_module(alg, c, field)
    P, epi = projective_cover(X)
    K, _ = kernel(epi)
    d, iso = identify(K, seed)
    return OmegaResult(d, K, iso, P.dim)


def omega(alg: Algebra, c: StringRep, field=QQ, seed: int = 0) -> OmegaResult:
    c = validate(alg, c).canonical_form()
    res = _omega_cached(alg, c, field, seed)
    if not res.verify():
        raise IdentificationFailed(f"witness for the syzygy of {format_string(c)} does not verify")
    return res


def omega_string(alg: Algebra, c: StringRep, field=QQ) -> StringRep:
    return _omega_cached(alg, validate(alg, c).canonical_form(), field, 0).string


def dual_string(alg: Algebra, c: StringRep) -> StringRep:
    """String of the dual module, carried back along the isomorphism with the opposite algebra.

    Each letter swaps ``a`` and ``abar`` and toggles inversion; the index
    stays.  This is an involution.
    """
    if c.is_trivial:
        return c
    return validate(alg, tuple(Letter(1 - x.kind, x.index, not x.inverted) for x in c.letters))


def omega_inverse(alg: Algebra, c: StringRep, field=QQ) -> StringRep:
    """The string D with Omega(D) equivalent to C.

    The candidate comes from duality (Omega^-1 = D Omega D) and is always
    confirmed by applying :func:`omega`; if it fails, candidates of the
    expected dimension are searched and confirmed the same way.
    """
    c = validate(alg, c)
    guess = dual_string(alg, omega_string(alg, dual_string(alg, c), field)).canonical_form()
    if omega_string(alg, guess, field).key() == c.key():
        return guess
    X = string_module(alg, c, field)
    expected = _injective_hull_dim(X) - X.dim
    for d in enumerate_strings(alg, expected - 1):
        if d.length == expected - 1 and omega_string(alg, d, field).key() == c.key():
            return d
    raise IdentificationFailed(f"no string has syzygy {format_string(c)}")


def _injective_hull_dim(X: Rep) -> int:
    # projectives are injective with simple socle, one per socle basis vector
    from .representations import socle_dim

    return 4 * X.alg.N * socle_dim(X)


def tau(alg: Algebra, c: StringRep, field=QQ) -> StringRep:
    return omega_string(alg, omega_string(alg, c, field), field)


def tau_inverse(alg: Algebra, c: StringRep, field=QQ) -> StringRep:
    return omega_inverse(alg, omega_inverse(alg, c, field), field)


def omega_power(alg: Algebra, c: StringRep, k: int, field=QQ) -> StringRep:
    c = validate(alg, c).canonical_form()
    for _ in range(abs(k)):
        c = omega_string(alg, c, field) if k > 0 else omega_inverse(alg, c, field)
    return c


def omega_orbit(alg: Algebra, c: StringRep, radius: int, field=QQ) -> list[StringRep]:
    """``[Omega^-r C, ..., C, ..., Omega^r C]``."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    c = validate(alg, c).canonical_form()
    back, fwd = [], []
    x = y = c
    for _ in range(radius):
        x = omega_inverse(alg, x, field)
        back.append(x)
        y = omega_string(alg, y, field)
        fwd.append(y)
    return list(reversed(back)) + [c] + fwd


@lru_cache(maxsize=None)
def _stable_hom_strings(alg: Algebra, s: StringRep, t: StringRep, field) -> int:
    return stable_hom_dim(string_module(alg, s, field), string_module(alg, t, field))


def stable_hom_strings(alg: Algebra, s: StringRep, t: StringRep, field=QQ) -> int:
    return _stable_hom_strings(alg, validate(alg, s), validate(alg, t), field)


def stable_end_dim(alg: Algebra, c: StringRep, field=QQ) -> int:
    c = validate(alg, c).canonical_form()
    return _stable_hom_strings(alg, c, c, field)


def ext1_dim(alg: Algebra, s: StringRep, t: StringRep, field=QQ) -> int:
    """dim Ext^1(M[S], M[T]) as the stable Hom from the syzygy of M[S]."""
    return stable_hom_strings(alg, omega_string(alg, s, field), t, field)
