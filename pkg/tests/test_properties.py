from hypothesis import given, settings, strategies as st

from udrings.algebra import Algebra
from udrings.classifier import end_is_k
from udrings.homs import hom_basis, hom_dim
from udrings.representations import check_relations, string_module
from udrings.strings import _extensions, _src, equivalent, format_string, parse, validate
from udrings.syzygy import omega_inverse, omega_string, stable_end_dim

ALGEBRAS = [Algebra(m, N) for m, N in [(3, 1), (3, 2), (4, 1), (4, 2), (5, 2), (6, 2)]]


@st.composite
def strings(draw, max_len=8, algebras=ALGEBRAS):
    """A random walk that only takes letters keeping the word a string."""
    alg = draw(st.sampled_from(algebras))
    v = draw(st.integers(0, alg.m - 1))
    word = ()
    s = v
    for _ in range(draw(st.integers(0, max_len))):
        options = _extensions(alg, word, s)
        if not options:
            break
        x = draw(st.sampled_from(options))
        word += (x,)
        s = _src(x, alg.m)
    c = validate(alg, word, vertex=v) if word else parse(alg, f"e{v}")
    return alg, c


@given(strings())
def test_format_parse_round_trip(pair):
    alg, c = pair
    assert parse(alg, format_string(c)) == c


@given(strings())
def test_inverse_equivalent_and_involutive(pair):
    _, c = pair
    assert c.inverse().inverse() == c
    assert equivalent(c, c.inverse())


@given(strings())
def test_string_module_is_a_module(pair):
    alg, c = pair
    X = string_module(alg, c)
    assert X.dim == c.length + 1
    assert check_relations(alg, X)


@settings(max_examples=60, deadline=None)
@given(strings(max_len=10))
def test_end_is_k_equivalence(pair):
    alg, c = pair
    X = string_module(alg, c)
    assert end_is_k(alg, c) == (hom_dim(X, X) == 1)


@settings(max_examples=40, deadline=None)
@given(strings(max_len=5), strings(max_len=5))
def test_hom_basis_size(p, q):
    alg, S = p
    _, T = q
    if q[0] != alg:
        return
    assert len(hom_basis(alg, S, T)) == hom_dim(string_module(alg, S), string_module(alg, T))


@settings(max_examples=30, deadline=None)
@given(strings(max_len=6, algebras=ALGEBRAS[:4]))
def test_syzygy_round_trip(pair):
    alg, c = pair
    if stable_end_dim(alg, c) == 0:
        return
    assert omega_string(alg, omega_inverse(alg, c)) == c.canonical_form()
    assert omega_inverse(alg, omega_string(alg, c)) == c.canonical_form()
