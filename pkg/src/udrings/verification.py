"""The acceptance checks, shared by the test suite and ``udrings verify``.

Each check returns a :class:`CheckResult`; ``detail`` lists what failed.
Scopes default to the full acceptance sizes; smaller ones can be passed in.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import A, ABAR, Algebra, Letter
from .classifier import (
    Ring,
    census,
    end_is_k,
    udr,
    verify_lift_chain,
)
from .errors import AlgebraError, CrossCheckFailed
from .fields import QQ
from .homs import hom_basis_size, hom_dim
from .representations import string_module
from .strings import (
    StringRep,
    cohook_left,
    enumerate_strings,
    equivalent,
    format_string,
    hooks_left,
    hooks_right,
    trivial,
    validate,
    zigzag,
)
from .syzygy import ext1_dim, omega_inverse, omega_string


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool = True
    checked: int = 0
    detail: list = dc_field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        if len(self.detail) < 50:
            self.detail.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail[0]})" if self.detail else ""
        return f"[{status}] {self.criterion}. {self.name}: {self.checked} checks{extra}"

    def to_dict(self) -> dict:
        return {"criterion": self.criterion, "name": self.name, "passed": self.passed,
                "checked": self.checked, "detail": list(self.detail)}


def classes(alg: Algebra, max_len: int) -> list[StringRep]:
    """One string per equivalence class, up to ``max_len`` letters."""
    return [c for c in enumerate_strings(alg, max_len) if c.canonical]


@lru_cache(maxsize=None)
def _module(alg, c, field):
    return string_module(alg, c, field)


def max_string(alg: Algebra, kind: int, i: int) -> StringRep:
    """(a_i abar_i)^{N-1} a_i for kind A, (abar_i a_i)^{N-1} abar_i for kind ABAR."""
    first = Letter(kind, i % alg.m)
    other = Letter(1 - kind, i % alg.m)
    return validate(alg, (first, other) * (alg.N - 1) + (first,))


# -- 1 -----------------------------------------------------------------------

def check_hom_basis(algebras=((3, 1), (3, 2), (4, 2)), max_len: int = 6, field=QQ) -> CheckResult:
    res = CheckResult(1, "hom basis size equals intertwiner dimension")
    for m, N in algebras:
        alg = Algebra(m, N)
        cs = classes(alg, max_len)
        for s in cs:
            X = _module(alg, s, field)
            for t in cs:
                res.checked += 1
                a, b = hom_basis_size(alg, s, t), hom_dim(X, _module(alg, t, field))
                if a != b:
                    res.fail(f"({m},{N}) {format_string(s)} -> {format_string(t)}: basis {a}, oracle {b}")
    return res


# -- 2 -----------------------------------------------------------------------

def check_end_is_k(algebras=((3, 1), (3, 2), (4, 1), (4, 2), (5, 2), (6, 2)), max_len: int = 12,
                   field=QQ) -> CheckResult:
    res = CheckResult(2, "combinatorial End = k test matches dim End")
    for m, N in algebras:
        alg = Algebra(m, N)
        for c in classes(alg, max_len):
            res.checked += 1
            X = string_module(alg, c, field)
            exact = hom_dim(X, X) == 1
            if end_is_k(alg, c) != exact:
                res.fail(f"({m},{N}) {format_string(c)}: combinatorial {not exact}, computed {exact}")
    return res


# -- 3 -----------------------------------------------------------------------

def syzygy_identities(alg: Algebra) -> list[tuple[str, StringRep, StringRep]]:
    """(label, module string, expected syzygy string) for the stated identities."""
    m, N = alg.m, alg.N
    out = []
    for i in range(m):
        p = (i - 1) % m
        if N == 1:
            core = trivial(alg, p)
        else:
            core = validate(alg, (Letter(ABAR, p), Letter(A, p)) * (N - 1))
        out.append((f"simple e{i}", trivial(alg, i), cohook_left(alg, core)))
        if N >= 2:
            core = validate(alg, (Letter(A, i),) + (Letter(ABAR, i), Letter(A, i)) * (N - 2))
            out.append((f"arrow a{i}", validate(alg, (Letter(A, i),)), cohook_left(alg, core)))
        out.append((f"maximal a{i}", max_string(alg, A, i), max_string(alg, ABAR, p)))
    if m % 2:
        out.append(("tube mouth a0 (m odd)", max_string(alg, A, 0), max_string(alg, ABAR, m - 1)))
    else:
        out.append(("tube mouth a0 (m even)", max_string(alg, A, 0), max_string(alg, ABAR, 1)))
        out.append(("tube mouth abar_{m-1} (m even)", max_string(alg, ABAR, m - 1), max_string(alg, ABAR, 0)))
    return out


def check_syzygy_identities(algebras=((3, 1), (3, 2), (4, 2), (5, 2), (6, 2)), field=QQ) -> CheckResult:
    res = CheckResult(3, "syzygy identities")
    for m, N in algebras:
        alg = Algebra(m, N)
        for label, c, want in syzygy_identities(alg):
            res.checked += 1
            got = omega_string(alg, c, field)
            if not equivalent(got, want):
                res.fail(f"({m},{N}) {label}: Omega gives {format_string(got)}, stated {format_string(want)}")
    return res


# -- 4 -----------------------------------------------------------------------

def ext_expectations(alg: Algebra) -> list[tuple[str, StringRep, int]]:
    """(label, string, expected dim Ext^1(M, M)) for the stated Ext values."""
    m, N, kappa = alg.m, alg.N, alg.kappa
    top = 0 if m % 2 else 1
    out = []
    for i in range(m):
        a = validate(alg, (Letter(A, i),))
        if N >= 2:
            out.append((f"a{i}", a, 1))
            for n in range(1, kappa):
                want = 0 if n < kappa - 1 else top
                out.append((f"arrow a{i} V_{n}", hooks_left(alg, a, n), want))
        e = trivial(alg, i)
        for n in range(0, kappa + 2):
            out.append((f"simple e{i} left {n}", hooks_left(alg, e, n), 0))
            if n:
                out.append((f"simple e{i} right {n}", hooks_right(alg, e, n), 0))
        mouth = max_string(alg, A, i)
        for j in range(kappa):
            want = 0 if j < kappa - 1 else top
            out.append((f"tube a{i} level {j}", hooks_left(alg, mouth, j), want))
    return out


def check_ext_table(ms=(3, 4, 5, 6), Ns=(1, 2, 3), field=QQ) -> CheckResult:
    res = CheckResult(4, "Ext^1 table")
    for m in ms:
        for N in Ns:
            alg = Algebra(m, N)
            for label, c, want in ext_expectations(alg):
                res.checked += 1
                got = ext1_dim(alg, c, c, field)
                if got != want:
                    res.fail(f"({m},{N}) {label}: Ext^1 = {got}, expected {want}")
    return res


# -- 5 -----------------------------------------------------------------------

def odd_zigzags(alg: Algebra) -> list[StringRep]:
    """Odd zigzags of length >= 3 whose endomorphism ring is k, starting at vertex 0."""
    out = []
    for n in range(3, alg.m + 1, 2):
        for first in (True, False):
            z = zigzag(alg, 0, first, n)
            if end_is_k(alg, z):
                out.append(z)
    return out


def check_censuses(ms=(3, 4, 5, 6), Ns=(2, 3), tube_Ns=(1, 2, 3), field=QQ) -> CheckResult:
    res = CheckResult(5, "orbit censuses")
    for m in ms:
        for N in sorted(set(Ns) | set(tube_Ns)):
            alg = Algebra(m, N)
            k = alg.kappa
            if N in tube_Ns:
                for tube in census(alg, "TUBES", field=field).tubes:
                    res.checked += 1
                    if tube.qualifying_levels != k:
                        res.fail(f"({m},{N}) tube {tube.boundary}: {tube.qualifying_levels} levels, expected {k}")
            if N not in Ns:
                continue
            rep = census(alg, "COMPONENT", validate(alg, (Letter(A, 0),)), field=field)
            res.checked += 1
            if rep.omega_orbits != k:
                res.fail(f"({m},{N}) arrow component: {rep.omega_orbits} orbits, expected {k}")
            for z in odd_zigzags(alg):
                rep = census(alg, "COMPONENT", z, field=field)
                res.checked += 1
                if rep.tau_orbits != 2 * k:
                    res.fail(f"({m},{N}) zigzag {format_string(z)}: {rep.tau_orbits} orbits, expected {2 * k}")
    return res


# -- 6 -----------------------------------------------------------------------

def check_tubes(ms=(3, 4, 5, 6), Ns=(1, 2), field=QQ) -> CheckResult:
    res = CheckResult(6, "tube census")
    for m in ms:
        for N in Ns:
            alg = Algebra(m, N)
            tubes = census(alg, "TUBES", field=field, window=0).tubes
            res.checked += 1
            want_count, want_period = (2, m) if m % 2 else (4, m // 2)
            periods = sorted(t.tau_period for t in tubes)
            if periods != [want_period] * want_count:
                res.fail(f"({m},{N}) tau periods {periods}, expected {want_count} x {want_period}")
    return res


# -- 7 -----------------------------------------------------------------------

def check_lift_chains(claim1=((3, 2), (3, 3), (4, 3)), claim2=((4, 2), (6, 2)), depth2: int = 3,
                      field=QQ) -> CheckResult:
    res = CheckResult(7, "lift-chain witnesses")
    jobs = [(m, N, "CLAIM1", d) for m, N in claim1 for d in range(1, N)]
    jobs += [(m, N, "CLAIM2", d) for m, N in claim2 for d in range(1, depth2 + 1)]
    for m, N, kind, d in jobs:
        alg = Algebra(m, N)
        for i in range(m):
            res.checked += 1
            try:
                rep = verify_lift_chain(alg, kind, i, d, field, strict=False)
            except AlgebraError as exc:
                res.fail(f"({m},{N}) {kind} i={i} depth {d}: {exc}")
                continue
            if not rep.passed:
                res.fail(f"({m},{N}) {kind} i={i} depth {d}: {rep.failures[0]}")
    return res


# -- 8 -----------------------------------------------------------------------

def check_lambda31(window: int = 4, radius: int = 2, field=QQ) -> CheckResult:
    res = CheckResult(8, "Lambda_{3,1} regression")
    alg = Algebra(3, 1)
    for i in range(3):
        e = trivial(alg, i)
        seeds = [e] + [hooks_left(alg, e, n) for n in range(1, window + 1)]
        seeds += [hooks_right(alg, e, n) for n in range(1, window + 1)]
        for s in seeds:
            x = y = s
            for _ in range(radius + 1):
                for c in {x.canonical_form(), y.canonical_form()}:
                    res.checked += 1
                    lab = udr(alg, c, field=field)
                    if lab.stable_end != 1 or lab.ring is not Ring.K:
                        res.fail(f"{format_string(c)}: stable End {lab.stable_end}, ring {lab.ring_text()}")
                x, y = omega_string(alg, x, field), omega_inverse(alg, y, field)
    for tube in census(alg, "TUBES", field=field).tubes:
        res.checked += 1
        if tube.qualifying_levels != 1 or tube.level_rings[0] != "k":
            res.fail(f"tube {tube.boundary}: {tube.qualifying_levels} qualifying, rings {tube.level_rings}")
    return res


# -- 9 -----------------------------------------------------------------------

def check_classifier(algebras=((3, 1), (4, 2), (5, 2), (6, 2)), max_len: int = 10, field=QQ) -> CheckResult:
    res = CheckResult(9, "classifier coherence")
    for m, N in algebras:
        alg = Algebra(m, N)
        for c in classes(alg, max_len):
            res.checked += 1
            try:
                lab = udr(alg, c, field=field)
            except CrossCheckFailed as exc:
                res.fail(f"({m},{N}) {exc}")
                continue
            if lab.ring in (Ring.NOT_CLASSIFIED_STABLE_END_NOT_K, Ring.OUT_OF_SCOPE):
                continue
            try:
                shifted = udr(alg, omega_string(alg, c, field), field=field)
            except CrossCheckFailed as exc:
                res.fail(f"({m},{N}) syzygy of {format_string(c)}: {exc}")
                continue
            if shifted.ring is not lab.ring:
                res.fail(f"({m},{N}) {format_string(c)}: {lab.ring_text()} but its syzygy gives {shifted.ring_text()}")
    return res


CHECKS = {
    1: check_hom_basis,
    2: check_end_is_k,
    3: check_syzygy_identities,
    4: check_ext_table,
    5: check_censuses,
    6: check_tubes,
    7: check_lift_chains,
    8: check_lambda31,
    9: check_classifier,
}


def run(criteria=None, field=QQ) -> list[CheckResult]:
    return [CHECKS[k](field=field) for k in (criteria or sorted(CHECKS))]
