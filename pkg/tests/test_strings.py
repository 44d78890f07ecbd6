import itertools

import pytest

from udrings.algebra import A, ABAR, Algebra, Letter, path_product
from udrings.errors import CompositionError, ForbiddenSubwordError, NotReducedError, ParseError
from udrings.strings import (
    Family,
    FamilySpec,
    HookKind,
    Side,
    build_family,
    compose,
    enumerate_strings,
    equivalent,
    format_string,
    hooks_left,
    hooks_right,
    maximal_directed,
    modify_hook,
    parse,
    peak_deep_status,
    trivial,
    try_modify,
    validate,
)


def _all_letters(m):
    return [Letter(k, i, inv) for k in (A, ABAR) for i in range(m) for inv in (False, True)]


def _brute_is_string(alg, word):
    """Composable, reduced, and every maximal one-direction run is a nonzero non-socle path."""
    m = alg.m
    for x, y in zip(word, word[1:]):
        src_x = alg.target(x.arrow) if x.inverted else alg.source(x)
        tgt_y = alg.source(y.arrow) if y.inverted else alg.target(y)
        if src_x != tgt_y or x == y.inverse():
            return False
    j = 0
    while j < len(word):
        k = j
        while k + 1 < len(word) and word[k + 1].inverted == word[j].inverted:
            k += 1
        run = word[j : k + 1]
        arrows = [x.arrow for x in run]
        if run[0].inverted:
            arrows = list(reversed(arrows))
        p = path_product(alg, arrows)
        if p.is_zero or len(arrows) >= 2 * alg.N:
            return False
        j = k + 1
    return m >= 3


def _brute_count(alg, max_len):
    letters = _all_letters(alg.m)
    classes = set()
    for n in range(1, max_len + 1):
        for word in itertools.product(letters, repeat=n):
            if _brute_is_string(alg, word):
                inv = tuple(x.inverse() for x in reversed(word))
                classes.add(min(word, inv))
    return alg.m + len(classes)


@pytest.mark.parametrize("m,N,L", [(3, 1, 4), (3, 2, 4), (4, 2, 4), (4, 1, 5)])
def test_enumeration_matches_brute_force(m, N, L):
    alg = Algebra(m, N)
    assert sum(1 for _ in enumerate_strings(alg, L)) == _brute_count(alg, L)


@pytest.mark.parametrize("m,N,L,count", [(3, 1, 1, 9), (3, 2, 6, 309), (4, 2, 6, 412)])
def test_enumeration_counts_frozen(m, N, L, count):
    # counts from the brute-force walk above, frozen
    assert sum(1 for _ in enumerate_strings(Algebra(m, N), L)) == count


def test_enumeration_one_per_class():
    alg = Algebra(4, 2)
    seen = [c.key() for c in enumerate_strings(alg, 6)]
    assert len(seen) == len(set(seen))


def test_forbidden_and_unreduced_words():
    alg = Algebra(3, 1)
    with pytest.raises(ForbiddenSubwordError):
        validate(alg, [Letter(A, 1), Letter(A, 0)])
    with pytest.raises(ForbiddenSubwordError):
        validate(alg, [Letter(A, 0), Letter(ABAR, 0)])
    with pytest.raises(NotReducedError):
        validate(alg, [Letter(A, 0), Letter(A, 0, True)])
    with pytest.raises(CompositionError):
        validate(alg, [Letter(A, 0), Letter(A, 0)])


def test_parse_errors():
    alg = Algebra(3, 2)
    for bad in ("", "x0", "a0a0", "e0 a1"):
        with pytest.raises(ParseError):
            parse(alg, bad)


def test_inverse_is_equivalent():
    alg = Algebra(3, 2)
    c = parse(alg, "a0 A0 a0")
    assert equivalent(c, c.inverse())
    d = parse(alg, "a1 A0- a2 A1-")
    assert equivalent(d, d.inverse())
    assert not equivalent(c, d)


def test_compose_with_trivial_and_undefined():
    alg = Algebra(3, 1)
    c = parse(alg, "a1 A0-")
    assert compose(alg, c, trivial(alg, c.s)) == c
    with pytest.raises(CompositionError):
        compose(alg, parse(alg, "a1"), parse(alg, "a0"))


def test_compose_builds_zigzag():
    alg = Algebra(6, 1)
    left = validate(alg, [Letter(ABAR, 5, True)])
    right = parse(alg, "a4 A3- a2 A1- a0")
    assert format_string(compose(alg, left, right)) == "A5- a4 A3- a2 A1- a0"


def test_peak_status():
    assert peak_deep_status(Algebra(3, 1), parse(Algebra(3, 1), "a0"))["starts_on_peak"]
    assert not peak_deep_status(Algebra(3, 2), parse(Algebra(3, 2), "a0"))["starts_on_peak"]
    for m, N in [(3, 1), (4, 2)]:
        alg = Algebra(m, N)
        for v in range(m):
            assert not peak_deep_status(alg, trivial(alg, v))["starts_on_peak"]


def test_maximal_directed():
    alg = Algebra(3, 1)
    got = {format_string(c) for c in maximal_directed(alg)}
    assert got == {"a0", "a1", "a2", "A0", "A1", "A2"}
    assert "a0 A0 a0" in {format_string(c) for c in maximal_directed(Algebra(3, 2))}


def test_double_hooks_on_trivial():
    alg = Algebra(4, 2)
    one = trivial(alg, 1)
    twice_r = modify_hook(alg, modify_hook(alg, one, Side.RIGHT, HookKind.HOOK, "ADD"), Side.RIGHT, HookKind.HOOK, "ADD")
    twice_l = modify_hook(alg, modify_hook(alg, one, Side.LEFT, HookKind.HOOK, "ADD"), Side.LEFT, HookKind.HOOK, "ADD")
    assert twice_r == hooks_right(alg, one, 2)
    assert twice_l == hooks_left(alg, one, 2)
    # each hook adds 2N letters
    assert twice_r.length == twice_l.length == 4 * alg.N


def test_hook_strip_round_trip():
    alg = Algebra(5, 2)
    for c in enumerate_strings(alg, 4):
        for side in Side:
            bigger = try_modify(alg, c, side, HookKind.HOOK, "ADD")
            if bigger is None:
                continue
            assert modify_hook(alg, bigger, side, HookKind.HOOK, "STRIP") == c


def test_zigzag_families():
    alg = Algebra(6, 2)
    zp = build_family(alg, FamilySpec(Family.Z_PRIME, 0))
    zpp = build_family(alg, FamilySpec(Family.Z_DOUBLE_PRIME, 0))
    assert format_string(zp) == "A5- a4 A3- a2 A1- a0"
    assert format_string(zpp) == "a5 A4- a3 A2- a1 A0-"
    for m in (3, 4, 5, 6, 7):
        z = build_family(Algebra(m, 1), FamilySpec(Family.Z_PRIME, 1))
        assert z.length == (m - 1 if m % 2 else m)


def test_format_parse_round_trip():
    alg = Algebra(4, 2)
    for c in enumerate_strings(alg, 5):
        assert parse(alg, format_string(c)) == c
