"""Locating string modules in their stable AR components and labelling their
universal deformation rings.

The location walks the syzygy orbit of a string.  At each orbit element it
strips hooks from one side for as long as the exact strip-and-re-add check
allows, and matches what is left against the known minimal strings:
simples, single arrows, maximal directed strings, and zigzags.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field as dc_field
from enum import Enum
from functools import lru_cache

from .algebra import Algebra
from .errors import AlgebraError, ChainInvalid, CheckFailed, CrossCheckFailed, IdentificationFailed, SearchBudgetExceeded
from .fields import QQ
from .homs import hom_basis, image, kernel, same_subspace
from .strings import (
    HookKind,
    Side,
    StringRep,
    equivalent,
    format_string,
    trivial,
    try_modify,
    validate,
)
from .syzygy import ext1_dim, identify, omega_inverse, omega_string, stable_end_dim, tau


class Locus(str, Enum):
    A_SIMPLE = "A_SIMPLE"
    B_ARROW = "B_ARROW"
    THETA = "THETA"
    ZIGZAG_GENERAL = "ZIGZAG_GENERAL"
    TUBE = "TUBE"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


class Ring(str, Enum):
    K = "K"
    K_T_MOD_TN = "K_T_MOD_TN"
    K_POWER_SERIES = "K_POWER_SERIES"
    NOT_CLASSIFIED_STABLE_END_NOT_K = "NOT_CLASSIFIED_STABLE_END_NOT_K"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"


@dataclass(frozen=True)
class ComponentLocus:
    family: Locus
    base_vertex: int | None = None
    orbit_index: int = 0  # hook steps from the minimal string; negative on the right for simples/arrows
    side: str | None = None  # LEFT or RIGHT, where the hooks sit
    omega_steps: int = 0  # j with Omega^j(input) equal to the hooked representative
    base: str | None = None  # the minimal string, in text syntax
    representative: str | None = None

    @property
    def omega_shifted(self) -> bool:
        return self.omega_steps % 2 == 1

    def to_dict(self) -> dict:
        out = asdict(self)
        out["family"] = self.family.value
        out["omega_shifted"] = self.omega_shifted
        return out


@dataclass(frozen=True)
class UDRLabel:
    ring: Ring
    exponent: int | None = None  # N for k[[t]]/(t^N)
    justification: str = ""
    ext1_self: int | None = None
    stable_end: int | None = None
    locus: ComponentLocus | None = dc_field(default=None)

    def ring_text(self) -> str:
        if self.ring is Ring.K:
            return "k"
        if self.ring is Ring.K_T_MOD_TN:
            return f"k[[t]]/(t^{self.exponent})"
        if self.ring is Ring.K_POWER_SERIES:
            return "k[[t]]"
        if self.ring is Ring.NOT_CLASSIFIED_STABLE_END_NOT_K:
            return "unclassified"
        return "out-of-scope"


# -- endomorphism ring k, combinatorially ------------------------------------

def is_zigzag(c: StringRep) -> bool:
    """Letters alternate between arrows and inverse arrows."""
    w = c.letters
    return all(w[j].inverted != w[j + 1].inverted for j in range(len(w) - 1))


def end_is_k(alg: Algebra, c: StringRep) -> bool:
    """Whether End M[C] is k, decided from the word alone.

    True for trivial strings, single letters, zigzags of length at most
    m - 1 (any m) or m (m even), and even-length zigzags when m is even.
    """
    c = validate(alg, c)
    n = c.length
    if n <= 1:
        return True
    if not is_zigzag(c):
        return False
    if alg.m % 2:
        return n <= alg.m - 1
    return n <= alg.m or n % 2 == 0


# -- component location --------------------------------------------------------

def _strip_side(alg: Algebra, c: StringRep, side: Side) -> tuple[StringRep, int]:
    n = 0
    while True:
        smaller = try_modify(alg, c, side, HookKind.HOOK, "STRIP")
        if smaller is None:
            return c, n
        c, n = smaller, n + 1


def _base_family(alg: Algebra, base: StringRep) -> Locus | None:
    n = base.length
    if n == 0:
        return Locus.A_SIMPLE
    if base.is_directed and n == 2 * alg.N - 1:
        return Locus.TUBE
    if n == 1:
        if alg.N >= 2 and not base.letters[0].inverted:
            return Locus.B_ARROW
        return None
    if is_zigzag(base) and end_is_k(alg, base):
        return Locus.THETA if n % 2 == 0 else Locus.ZIGZAG_GENERAL
    return None


def _match(alg: Algebra, d: StringRep, j: int) -> list[ComponentLocus]:
    found = []
    for orient in (d, d.inverse()):
        for side in (Side.LEFT, Side.RIGHT):
            base, n = _strip_side(alg, orient, side)
            fam = _base_family(alg, base)
            if fam is None:
                continue
            if n == 0 and side is Side.RIGHT:
                continue  # already reported with the left side
            if fam is Locus.B_ARROW or fam is Locus.A_SIMPLE:
                index = n if side is Side.LEFT else -n
            else:
                index = n
            if fam is Locus.TUBE and base.letters[0].inverted:
                continue  # report the directed orientation only
            vertex = base.s
            found.append(ComponentLocus(
                fam, vertex, index, side.value if n else None, j,
                format_string(base), format_string(orient),
            ))
    return found


def _is_minimal(alg: Algebra, d: StringRep) -> bool:
    for orient in (d, d.inverse()):
        for side in (Side.LEFT, Side.RIGHT):
            for kind in (HookKind.HOOK, HookKind.COHOOK):
                if try_modify(alg, orient, side, kind, "STRIP") is not None:
                    return False
    return True


def _stranded(alg: Algebra, d: StringRep, j: int) -> ComponentLocus | None:
    """A reading of ``d`` as hooks on a minimal string that is not a known one."""
    for orient in (d, d.inverse()):
        for side in (Side.LEFT, Side.RIGHT):
            base, n = _strip_side(alg, orient, side)
            if _base_family(alg, base) is None and _is_minimal(alg, base):
                return ComponentLocus(Locus.OUT_OF_SCOPE, None, n, side.value if n else None, j,
                                      format_string(base), format_string(orient))
    return None


def default_radius(alg: Algebra, c: StringRep) -> int:
    return c.length // (2 * alg.N) + 4


def locate_component(alg: Algebra, c: StringRep, radius: int | None = None,
                     field=QQ) -> ComponentLocus:
    """Walk Omega^j(C) for j = 0, 1, -1, 2, -2, ... and match a hooked minimal string.

    Among all matches within the radius the one with a nonnegative index
    and the smallest |j| wins, and at one orbit element the shortest
    minimal string wins.  An orbit element from which no hook or
    cohook can be stripped, and which is none of the known minimal strings,
    puts the module outside the covered components.
    """
    c = validate(alg, c).canonical_form()
    radius = default_radius(alg, c) if radius is None else radius
    fwd = {0: c}
    back = {0: c}
    best = None
    stranded = None
    for step in range(radius + 1):
        for j in ((0,) if step == 0 else (step, -step)):
            if j > 0:
                fwd[j] = omega_string(alg, fwd[j - 1], field)
                d = fwd[j]
            elif j < 0:
                back[-j] = omega_inverse(alg, back[-j - 1], field)
                d = back[-j]
            else:
                d = c
            # the shortest minimal string is the most stripped-down reading
            for loc in sorted(_match(alg, d, j), key=lambda x: len(x.base.split())):
                if loc.orbit_index >= 0:
                    return loc
                if best is None:
                    best = loc
            if stranded is None:
                stranded = _stranded(alg, d, j)
    if best is not None:
        return best
    if stranded is not None:
        return stranded
    raise SearchBudgetExceeded(
        f"no minimal string found within {radius} syzygy steps of {format_string(c)}",
        radius=radius,
    )


# -- deformation ring labels ---------------------------------------------------------

def _table(alg: Algebra, loc: ComponentLocus) -> tuple[Ring, str]:
    kappa, m = alg.kappa, alg.m
    n = loc.orbit_index
    fam = loc.family
    if fam is Locus.A_SIMPLE:
        return Ring.K, "simple-component"
    if fam is Locus.THETA:
        return Ring.K, "theta-component"
    if fam is Locus.B_ARROW:
        if n == 0:
            note = "/top-coincides-with-n=0" if kappa == 1 else ""
            return Ring.K_T_MOD_TN, "arrow-component/n=0" + note
        if 0 < n < kappa - 1:
            return Ring.K, f"arrow-component/0<n<kappa-1"
        if n == kappa - 1:
            if m % 2:
                return Ring.K, "arrow-component/n=kappa-1/m-odd"
            return Ring.K_POWER_SERIES, "arrow-component/n=kappa-1/m-even"
        return Ring.OUT_OF_SCOPE, f"arrow-component/index {n} outside the table"
    if fam is Locus.ZIGZAG_GENERAL:
        if 0 <= n < kappa - 1:
            return Ring.K, "zigzag-component/j<kappa-1"
        if n == kappa - 1:
            return Ring.K_POWER_SERIES, "zigzag-component/j=kappa-1"
        return Ring.OUT_OF_SCOPE, f"zigzag-component/index {n} outside the table"
    if fam is Locus.TUBE:
        if 0 <= n < kappa - 1:
            return Ring.K, "tube/j<kappa-1"
        if n == kappa - 1:
            if m % 2:
                return Ring.K, "tube/j=kappa-1/m-odd"
            return Ring.K_POWER_SERIES, "tube/j=kappa-1/m-even"
        return Ring.OUT_OF_SCOPE, f"tube/index {n} outside the table"
    return Ring.OUT_OF_SCOPE, "no matching component"


def udr(alg: Algebra, c: StringRep, radius: int | None = None, field=QQ,
        check: bool = True) -> UDRLabel:
    """Universal deformation ring label of M[C], cross-checked against Ext^1."""
    return _udr(alg, validate(alg, c).canonical_form(), radius, field, check)


@lru_cache(maxsize=None)
def _udr(alg: Algebra, c: StringRep, radius, field, check: bool) -> UDRLabel:
    send = stable_end_dim(alg, c, field)
    if send != 1:
        return UDRLabel(Ring.NOT_CLASSIFIED_STABLE_END_NOT_K,
                        justification=f"stable End has dimension {send}", stable_end=send)
    ext = ext1_dim(alg, c, c, field)
    loc = locate_component(alg, c, radius, field)
    ring, why = _table(alg, loc)
    exponent = alg.N if ring is Ring.K_T_MOD_TN else None
    label = UDRLabel(ring, exponent, why, ext, send, loc)
    if check and ring is not Ring.OUT_OF_SCOPE:
        want = 0 if ring is Ring.K else 1
        if ext != want:
            raise CrossCheckFailed(
                f"{format_string(c)}: table gives {label.ring_text()} but Ext^1 has dimension {ext}",
                ring=label.ring_text(), ext1=ext, locus=loc.family.value, index=loc.orbit_index,
            )
    return label


# -- lift chains ---------------------------------------------------------------

class ChainKind(str, Enum):
    CLAIM1 = "CLAIM1"  # (a_i abar_i)^l a_i over a_i
    CLAIM2 = "CLAIM2"  # copies of the seed glued by abar_{i-1}^-1, m even


@dataclass(frozen=True)
class LiftChainReport:
    kind: str
    vertex: int
    depth: int
    chain: str
    base: str
    dims: tuple[int, ...]  # dim M[chain_l] for l = 0..depth
    nilpotency: int | None
    kernel_string: str | None
    image_string: str | None
    free: bool
    exact: bool
    ext1_top_to_base: int | None  # Ext^1(M[S_{N-1}], M[a_i]); CLAIM1 at depth N-1 only
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _chain_strings(alg: Algebra, kind: ChainKind, i: int, depth: int):
    from .strings import s_chain, t_chain, t_seed

    try:
        if kind is ChainKind.CLAIM1:
            if not 1 <= depth <= alg.N - 1:
                raise ChainInvalid(f"CLAIM1 depth must lie in [1, {alg.N - 1}]", depth=depth)
            return [s_chain(alg, i, l) for l in range(depth + 1)]
        if alg.m % 2:
            raise ChainInvalid("CLAIM2 needs m even", m=alg.m)
        if depth < 1:
            raise ChainInvalid("CLAIM2 depth must be >= 1", depth=depth)
        return [t_seed(alg, i)] + [t_chain(alg, i, l) for l in range(1, depth + 1)]
    except ChainInvalid:
        raise
    except AlgebraError as exc:
        raise ChainInvalid(f"chain string cannot be built: {exc}", **exc.details) from exc


def _chain_endomorphism(alg, top, prev, field):
    """The canonical endomorphism of M[top] whose image is M[prev]."""
    for occ, h in hom_basis(alg, top, top, field):
        if occ.length == prev.length and h.rank() == prev.length + 1:
            return h
    return None


def _identify_string(X) -> StringRep | None:
    try:
        return identify(X)[0]
    except IdentificationFailed:
        return None


def verify_lift_chain(alg: Algebra, kind, vertex: int = 0, depth: int = 1, field=QQ,
                      strict: bool = True) -> LiftChainReport:
    """Check that M[chain_depth] is a free k[t]/(t^{depth+1})-module lifting the base.

    t acts by the canonical endomorphism through the previous chain string.
    With ``strict`` a failed check raises ``CheckFailed`` carrying the report.
    """
    kind = ChainKind(kind)
    chain = _chain_strings(alg, kind, vertex, depth)
    base, prev, top = chain[0], chain[-2], chain[-1]
    dims = tuple(c.length + 1 for c in chain)
    failures = []
    d_base = base.length + 1

    sigma = _chain_endomorphism(alg, top, prev, field)
    nil = kernel_s = image_s = None
    free = exact = False
    if sigma is None:
        failures.append("no canonical endomorphism through the previous chain string")
    else:
        power, ranks = sigma, [sigma.source.dim]
        for _ in range(depth + 1):
            ranks.append(power.rank())
            if power.is_zero():
                break
            power = sigma.compose(power)
        nil = len(ranks) - 1 if ranks[-1] == 0 else None
        if nil != depth + 1:
            failures.append(f"nilpotency order {nil}, expected {depth + 1}")
        want = [(depth + 1 - k) * d_base for k in range(depth + 2)]
        free = dims[-1] == (depth + 1) * d_base and ranks == want[: len(ranks)] and nil == depth + 1
        if not free:
            failures.append(f"ranks of powers {ranks}, free action needs {want}")

        K, _ = kernel(sigma)
        kc = _identify_string(K)
        kernel_s = format_string(kc) if kc is not None else None
        if kc is None or not equivalent(kc, base):
            failures.append(f"kernel is {kernel_s}, expected {format_string(base)}")
        I, inc = image(sigma)
        ic = _identify_string(I)
        image_s = format_string(ic) if ic is not None else None
        if ic is None or not equivalent(ic, prev):
            failures.append(f"image is {image_s}, expected {format_string(prev)}")

        # 0 -> t M -> M -> base -> 0 via a canonical surjection onto the base
        for occ, pi in hom_basis(alg, top, base, field):
            if pi.rank() == d_base and same_subspace(kernel(pi)[1], inc):
                exact = True
                break
        if not exact:
            failures.append("no surjection onto the base has kernel t M")

    ext = None
    if kind is ChainKind.CLAIM1 and depth == alg.N - 1:
        ext = ext1_dim(alg, top, base, field)
        if ext != 0:
            failures.append(f"Ext^1 from the top chain string to the base is {ext}")

    report = LiftChainReport(kind.value, vertex % alg.m, depth, format_string(top), format_string(base),
                             dims, nil, kernel_s, image_s, free, exact, ext, tuple(failures))
    if strict and failures:
        raise CheckFailed(f"{kind.value} chain check failed: {failures[0]}", report=report.to_dict())
    return report


# -- orbit censuses -------------------------------------------------------------

class CensusScope(str, Enum):
    TUBES = "TUBES"
    COMPONENT = "COMPONENT"


@dataclass(frozen=True)
class CensusRow:
    representative: str
    side: str | None
    index: int
    stable_end: int
    ring: str | None
    omega_orbit: int  # rows sharing this number lie in one syzygy orbit
    tau_orbits: int  # number of Omega^2-orbits the syzygy orbit splits into


@dataclass(frozen=True)
class TubeRow:
    boundary: str
    tau_period: int
    qualifying_levels: int  # levels (hook counts) whose modules have stable End k
    level_rings: tuple[str, ...]


@dataclass(frozen=True)
class CensusReport:
    scope: str
    family: str | None
    base: str | None
    window: int  # hook counts 0..window were scanned on each side
    rows: tuple = ()
    tubes: tuple = ()
    omega_orbits: int = 0  # qualifying syzygy orbits
    tau_orbits: int = 0  # qualifying Omega^2-orbits in the component together with its syzygy shift

    def to_dict(self) -> dict:
        return asdict(self)


def omega_period(alg: Algebra, c: StringRep, bound: int, field=QQ) -> int | None:
    """Smallest p in [1, bound] with Omega^p(C) equivalent to C."""
    c = validate(alg, c).canonical_form()
    d = c
    for p in range(1, bound + 1):
        d = omega_string(alg, d, field)
        if d.key() == c.key():
            return p
    return None


def _orbit_keys(alg, c, radius, field):
    keys = {c.key()}
    x = y = c
    for _ in range(radius):
        x = omega_string(alg, x, field)
        y = omega_inverse(alg, y, field)
        keys.add(x.key())
        keys.add(y.key())
    return keys


def _hooked(alg, base, side, n):
    from .strings import hooks_left, hooks_right

    try:
        return (hooks_left if side is Side.LEFT else hooks_right)(alg, base, n)
    except AlgebraError:
        return None


def _scan(alg, base, window, field, sides=(Side.LEFT, Side.RIGHT)):
    """(side, n, string) for every defined hooking of ``base`` up to ``window`` steps."""
    out = [(None, 0, base)]
    for side in sides:
        for n in range(1, window + 1):
            c = _hooked(alg, base, side, n)
            if c is None:
                break
            out.append((side.value, n, c))
    return out


def _label_text(alg, c, field):
    try:
        return udr(alg, c, field=field, check=False).ring_text()
    except AlgebraError as exc:
        return exc.code


def _split_count(alg, c, field, bound):
    p = omega_period(alg, c, bound, field)
    return 1 if p is not None and p % 2 else 2


def component_census(alg: Algebra, c: StringRep, window: int | None = None, radius: int | None = None,
                     field=QQ) -> CensusReport:
    """Qualifying orbits in the component of M[C] together with its syzygy shift.

    The component is generated from its minimal string by hooks on either
    side, scanned up to ``window`` steps; rows are then grouped into syzygy
    orbits by a bounded search of ``radius`` steps.
    """
    loc = locate_component(alg, c, field=field)
    if loc.family is Locus.OUT_OF_SCOPE:
        return CensusReport(CensusScope.COMPONENT.value, loc.family.value, loc.base, 0)
    from .strings import parse

    base = parse(alg, loc.base)
    window = alg.kappa + 1 if window is None else window
    radius = 2 * alg.kappa + 4 if radius is None else radius
    scanned = _scan(alg, base, window, field)
    rows, orbits = [], []
    for side, n, x in scanned:
        x = x.canonical_form()
        send = stable_end_dim(alg, x, field)
        ring = _label_text(alg, x, field) if send == 1 else None
        for k, keys in enumerate(orbits):
            if x.key() in keys:
                orbit = k
                break
        else:
            orbits.append(_orbit_keys(alg, x, radius, field))
            orbit = len(orbits) - 1
        index = -n if side == Side.RIGHT.value and loc.family in (Locus.A_SIMPLE, Locus.B_ARROW) else n
        rows.append(CensusRow(format_string(x), side, index, send, ring, orbit,
                              _split_count(alg, x, field, 4 * alg.m)))
    qualifying = {r.omega_orbit: r.tau_orbits for r in rows if r.stable_end == 1}
    return CensusReport(CensusScope.COMPONENT.value, loc.family.value, format_string(base), window,
                        tuple(rows), (), len(qualifying), sum(qualifying.values()))


def tube_census(alg: Algebra, window: int | None = None, field=QQ) -> CensusReport:
    """Tubes through the maximal directed strings: one row per Omega^2-orbit of mouths."""
    from .strings import maximal_directed

    window = alg.kappa + 1 if window is None else window
    seen, tubes = set(), []
    for b in sorted(maximal_directed(alg), key=lambda s: s.key()):
        b = b.canonical_form()
        if b.key() in seen:
            continue
        period, x = 0, b
        while True:
            x = tau(alg, x, field)
            seen.add(x.key())
            period += 1
            if x.key() == b.key():
                break
            if period > 2 * alg.m:
                raise SearchBudgetExceeded("tube mouth is not tau-periodic within 2m steps",
                                           boundary=format_string(b))
        rings, qualifying = [], 0
        for side, n, y in _scan(alg, b, window, field):
            if side is None and n:
                continue
            if n and side != _hook_side(alg, b).value:
                continue
            send = stable_end_dim(alg, y, field)
            if send == 1:
                qualifying += 1
                rings.append(_label_text(alg, y, field))
            else:
                rings.append("unclassified")
        tubes.append(TubeRow(format_string(b), period, qualifying, tuple(rings)))
    return CensusReport(CensusScope.TUBES.value, Locus.TUBE.value, None, window, (), tuple(tubes),
                        0, sum(t.qualifying_levels for t in tubes))


def _hook_side(alg, b):
    """The side on which a maximal directed string takes hooks."""
    return Side.LEFT if _hooked(alg, b, Side.LEFT, 1) is not None else Side.RIGHT


def census(alg: Algebra, scope, subject: StringRep | None = None, field=QQ, **kw) -> CensusReport:
    scope = CensusScope(scope)
    if scope is CensusScope.TUBES:
        return tube_census(alg, field=field, **kw)
    if subject is None:
        raise ValueError("COMPONENT census needs a subject string")
    return component_census(alg, subject, field=field, **kw)
