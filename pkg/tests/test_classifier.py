import pytest

from udrings.algebra import A, Algebra, Letter
from udrings.classifier import (
    ChainKind,
    CensusScope,
    Locus,
    Ring,
    census,
    end_is_k,
    locate_component,
    udr,
    verify_lift_chain,
)
from udrings.errors import AlgebraError, CrossCheckFailed
from udrings.homs import hom_dim
from udrings.representations import string_module
from udrings.strings import (
    Family,
    FamilySpec,
    build_family,
    cohook_chain_d,
    enumerate_strings,
    format_string,
    hooks_right,
    parse,
    t_seed,
    trivial,
    validate,
)
from udrings.syzygy import ext1_dim, omega_string


def arrow_orbit_rep(alg, i, n):
    """D_{i+1,n} a_i, the n-th module of the arrow component."""
    return validate(alg, cohook_chain_d(alg, i + 1, n).letters + (Letter(A, i % alg.m),))


def test_end_is_k_examples():
    alg = Algebra(4, 2)
    assert end_is_k(alg, trivial(alg, 0))
    assert not end_is_k(alg, parse(alg, "a0 A0"))
    alg6 = Algebra(6, 2)
    for level in range(4):
        w = build_family(alg6, FamilySpec(Family.W_LEVEL, 0, level))
        assert end_is_k(alg6, w)


@pytest.mark.parametrize("m,N", [(3, 1), (4, 2), (5, 2)])
def test_end_is_k_matches_endomorphisms(m, N):
    alg = Algebra(m, N)
    for c in enumerate_strings(alg, 7):
        X = string_module(alg, c)
        assert end_is_k(alg, c) == (hom_dim(X, X) == 1), format_string(c)


def test_locate_simple_and_arrow():
    alg = Algebra(4, 2)
    loc = locate_component(alg, trivial(alg, 2))
    assert loc.family is Locus.A_SIMPLE and loc.orbit_index == 0
    for n in range(alg.kappa):
        loc = locate_component(alg, arrow_orbit_rep(alg, 1, n))
        assert loc.family is Locus.B_ARROW and loc.orbit_index == n


def test_locate_tube_at_n1():
    alg = Algebra(3, 1)
    loc = locate_component(alg, parse(alg, "a0"))
    assert loc.family is Locus.TUBE and loc.orbit_index == 0


def test_locate_follows_syzygy():
    alg = Algebra(4, 2)
    c = omega_string(alg, parse(alg, "a0"))
    loc = locate_component(alg, c)
    assert loc.family is Locus.B_ARROW and loc.omega_shifted


@pytest.mark.parametrize("m,N", [(3, 2), (4, 2), (5, 3), (6, 2)])
def test_arrow_ring(m, N):
    alg = Algebra(m, N)
    lab = udr(alg, parse(alg, "a1"))
    assert lab.ring is Ring.K_T_MOD_TN and lab.exponent == N
    assert lab.ext1_self == 1
    assert lab.ring_text() == f"k[[t]]/(t^{N})"


@pytest.mark.parametrize("m", [4, 6])
def test_arrow_component_top_even(m):
    alg = Algebra(m, 2)
    lab = udr(alg, arrow_orbit_rep(alg, 0, alg.kappa - 1))
    assert lab.ring is Ring.K_POWER_SERIES and lab.ext1_self == 1


def test_lambda31_simple_component():
    alg = Algebra(3, 1)
    for c in [trivial(alg, 0), omega_string(alg, trivial(alg, 0))]:
        assert udr(alg, c).ring is Ring.K


def test_not_classified_when_stable_end_large():
    # V_{-n}: n right hooks on an arrow, stable End bigger than k once N >= 3
    alg = Algebra(4, 3)
    for n in (1, 2):
        lab = udr(alg, hooks_right(alg, parse(alg, "a0"), n))
        assert lab.ring is Ring.NOT_CLASSIFIED_STABLE_END_NOT_K
        assert lab.stable_end >= 2


def test_label_invariant_small():
    for m, N in [(3, 1), (5, 2)]:
        alg = Algebra(m, N)
        for c in enumerate_strings(alg, 6):
            lab = udr(alg, c)
            if lab.ring in (Ring.NOT_CLASSIFIED_STABLE_END_NOT_K, Ring.OUT_OF_SCOPE):
                continue
            assert (lab.ring is Ring.K) == (lab.ext1_self == 0)


def test_even_zigzag_table_disagreement_is_detected():
    # frozen: this unhooked odd zigzag at (4,2) has Ext^1 = 1, against the table's k
    alg = Algebra(4, 2)
    S = parse(alg, "a2 A1- a0")
    assert ext1_dim(alg, S, S) == 1
    with pytest.raises(CrossCheckFailed):
        udr(alg, S)
    assert udr(alg, S, check=False).ring is Ring.K


def test_claim1_depth1():
    alg = Algebra(3, 2)
    rep = verify_lift_chain(alg, ChainKind.CLAIM1, 0, 1)
    assert rep.passed
    assert rep.dims == (2, 4)
    assert rep.kernel_string == "a0"
    assert rep.chain == "a0 A0 a0"


@pytest.mark.parametrize("m,N,depth", [(3, 3, 2), (4, 3, 2)])
def test_claim1_deeper(m, N, depth):
    for i in range(m):
        assert verify_lift_chain(Algebra(m, N), ChainKind.CLAIM1, i, depth).passed


def test_claim2_dimensions():
    alg = Algebra(4, 2)
    rep = verify_lift_chain(alg, ChainKind.CLAIM2, 0, 2)
    assert rep.passed
    w = t_seed(alg, 0).length + 1
    assert rep.dims[-1] == 3 * w


def test_claim2_odd_m_rejected():
    with pytest.raises(AlgebraError):
        verify_lift_chain(Algebra(5, 2), ChainKind.CLAIM2, 0, 1)


def test_tube_census():
    rep = census(Algebra(5, 2), CensusScope.TUBES)
    assert len(rep.tubes) == 2
    assert all(t.tau_period == 5 and t.qualifying_levels == 2 for t in rep.tubes)
    rep = census(Algebra(4, 1), CensusScope.TUBES)
    assert len(rep.tubes) == 4
    assert all(t.tau_period == 2 for t in rep.tubes)


def test_arrow_component_census():
    alg = Algebra(4, 2)
    rep = census(alg, CensusScope.COMPONENT, parse(alg, "a0"))
    assert rep.omega_orbits == alg.kappa


def test_lambda31_tube_census():
    rep = census(Algebra(3, 1), CensusScope.TUBES)
    for t in rep.tubes:
        assert t.qualifying_levels == 1
        assert t.level_rings[0] == "k"
