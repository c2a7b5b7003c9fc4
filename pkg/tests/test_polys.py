import random
from fractions import Fraction

import pytest

from lapspec import (
    LAMBDA,
    MPoly,
    count_real_roots,
    divides,
    integer_roots,
    isolate_roots,
    parse_poly,
    sign_at,
    sturm_count,
)


def lam():
    return MPoly.var(LAMBDA)


def test_ring_arithmetic_basics():
    x = lam()
    assert (x - 1) * (x - 1) == parse_poly("λ^2 - 2*λ + 1")
    assert (x + 2) ** 3 == parse_poly("λ^3 + 6*λ^2 + 12*λ + 8")
    p = parse_poly("λ^2 - 6*λ + 6")
    assert p.eval_at({LAMBDA: 1}) == 1
    assert p.eval_at({LAMBDA: Fraction(1, 2)}) == Fraction(13, 4)


def test_parser_round_trip_and_literal_powers():
    p = parse_poly("λ^6 - 16*λ^5 + 3*λ - 7")
    assert parse_poly(p.to_text()) == p
    # an integer raised to a power is just an integer
    assert parse_poly("15^2").constant_value() == 225
    with pytest.raises(ValueError):
        parse_poly("λ +* 2")


def test_symbolic_substitution_matches_printed_evaluations():
    p = parse_poly(
        "λ^6+(-2*s-12)*λ^5+(s^2+18*s+55)*λ^4+(-6*s^2-56*s-120)*λ^3"
        "+(10*s^2+70*s+125)*λ^2+(-4*s^2-30*s-50)*λ",
        variables=(LAMBDA, "s"),
    )
    assert p.substitute({LAMBDA: 1}) == parse_poly("s^2 - 1")
    assert p.substitute({LAMBDA: 2}) == parse_poly("-4*s")


def test_integer_roots_examples():
    rep = integer_roots(parse_poly("λ^3 - 4*λ^2 + 3*λ"))
    assert rep.integer_roots == ((3, 1), (1, 1), (0, 1))
    assert rep.residual == 1
    rep = integer_roots(parse_poly("λ^4 - 12*λ^3 + 50*λ^2 - 84*λ + 48"))
    assert dict(rep.integer_roots) == {2: 1, 4: 1}
    assert rep.residual == parse_poly("λ^2 - 6*λ + 6")
    rep = integer_roots(parse_poly("λ^2 + 1"))
    assert rep.integer_roots == () and rep.residual == parse_poly("λ^2 + 1")
    assert rep.isolating_intervals == ()
    with pytest.raises(ValueError):
        integer_roots(MPoly.zero((LAMBDA,)))


def test_integer_roots_recovers_random_linear_factorizations():
    rng = random.Random(42)
    x = lam()
    for _ in range(60):
        roots = {}
        poly = MPoly.const(rng.choice([1, 1, 2, -3]), (LAMBDA,))
        for _ in range(rng.randint(1, 5)):
            r = rng.randint(-6, 6)
            roots[r] = roots.get(r, 0) + 1
            poly = poly * (x - r)
        rep = integer_roots(poly)
        assert dict(rep.integer_roots) == roots
        assert rep.residual.degree() == 0
        assert rep.reconstructs() or rep.residual != 1  # non-monic keeps the unit


def test_root_report_reconstruction_invariant():
    rng = random.Random(7)
    x = lam()
    for _ in range(40):
        poly = MPoly.const(1, (LAMBDA,))
        for _ in range(rng.randint(1, 3)):
            poly = poly * (x - rng.randint(-4, 4))
        if rng.random() < 0.6:
            poly = poly * parse_poly("λ^2 + λ + 1")
        rep = integer_roots(poly)
        assert rep.reconstructs()


def test_sturm_counts():
    p = parse_poly("λ^2 - 6*λ + 6")
    assert sturm_count(p, 1, 2) == 1
    assert sturm_count(p, 4, 5) == 1
    assert sturm_count(p, 2, 4) == 0
    assert sturm_count(parse_poly("λ^2 + 1"), -10, 10) == 0
    with pytest.raises(ValueError):
        sturm_count(p, 2, 2)
    # repeated roots count once; the half-open end includes its root
    q = parse_poly("(λ-2)^2*(λ-1)")
    assert sturm_count(q, 0, 2) == 2
    assert sturm_count(q, 1, 2) == 1
    assert sturm_count(q, 2, 3) == 0


def test_sturm_against_known_root_multisets():
    # polynomials with fully known roots: counts are literal comparisons
    rng = random.Random(61)
    x = lam()
    for _ in range(50):
        roots = sorted(rng.randint(-6, 6) for _ in range(rng.randint(1, 6)))
        poly = MPoly.const(1, (LAMBDA,))
        for r in roots:
            poly = poly * (x - r)
        a = Fraction(rng.randint(-16, 12), 2)
        b = a + Fraction(rng.randint(1, 16), 2)
        expected = len({r for r in roots if a < r <= b})
        assert sturm_count(poly, a, b) == expected, (roots, a, b)


def test_sturm_partition_additivity():
    rng = random.Random(13)
    x = lam()
    for _ in range(30):
        poly = MPoly.const(1, (LAMBDA,))
        for _ in range(rng.randint(2, 6)):
            poly = poly * (x - rng.randint(-5, 5))
        pts = sorted(rng.sample(range(-8, 9), 4))
        a, m1, m2, b = (Fraction(p, 2) for p in pts)
        total = sturm_count(poly, a, b)
        parts = sturm_count(poly, a, m1) + sturm_count(poly, m1, m2) + sturm_count(poly, m2, b)
        assert total == parts


def test_eval_mul_homomorphism():
    rng = random.Random(99)
    for _ in range(40):
        a = MPoly.zero((LAMBDA, "s"))
        b = MPoly.zero((LAMBDA, "s"))
        for _ in range(4):
            a = a + MPoly((LAMBDA, "s"), {(rng.randint(0, 3), rng.randint(0, 2)): rng.randint(-5, 5)})
            b = b + MPoly((LAMBDA, "s"), {(rng.randint(0, 3), rng.randint(0, 2)): rng.randint(-5, 5)})
        at = {LAMBDA: Fraction(rng.randint(-6, 6), rng.randint(1, 4)), "s": rng.randint(-3, 3)}
        assert (a * b).eval_at(at) == a.eval_at(at) * b.eval_at(at)


def test_isolate_roots():
    ivs = isolate_roots(parse_poly("λ^2 - 6*λ + 6"), Fraction(1, 100))
    assert len(ivs) == 2
    for (lo, hi), target in zip(ivs, (Fraction(1268, 1000), Fraction(4732, 1000))):
        assert hi - lo <= Fraction(1, 100)
        assert lo < target < hi or abs((lo + hi) / 2 - target) < Fraction(1, 100)
    ivs = isolate_roots(parse_poly("λ^2 - 7*λ + 8"), Fraction(1, 100))
    mids = [float((lo + hi) / 2) for lo, hi in ivs]
    assert round(mids[0], 2) == 1.44 and round(mids[1], 2) == 5.56
    assert isolate_roots(parse_poly("λ - 5")) == [(5, 5)]


def test_isolation_handles_repeated_and_rational_roots():
    p = parse_poly("(2*λ-1)^2*(λ-3)*(λ^2-2)")
    ivs = isolate_roots(p, Fraction(1, 1000))
    assert len(ivs) == len(set(ivs)) == 4
    assert (Fraction(1, 2), Fraction(1, 2)) in ivs
    assert (3, 3) in ivs
    assert count_real_roots(p) == 4


def test_divides():
    ok, quo = divides(parse_poly("λ - 1"), parse_poly("λ^2 - 1"))
    assert ok and quo == parse_poly("λ + 1")
    ok, quo = divides(parse_poly("λ^2 - 6*λ"), parse_poly("λ^2 - 6*λ"))
    assert ok and quo == 1
    ok, quo = divides(parse_poly("λ^2 + 1"), parse_poly("λ^3 - 4*λ^2 + 3*λ"))
    assert not ok and quo is None
    with pytest.raises(ValueError):
        divides(MPoly.zero((LAMBDA,)), parse_poly("λ"))


def test_sign_at():
    p = parse_poly("λ^2 - 2")
    assert sign_at(p, 1) == -1
    assert sign_at(p, Fraction(3, 2)) == 1
    assert sign_at(parse_poly("λ - 5"), 5) == 0


def test_close_roots_are_separated():
    # 1 and 1 + 2^-20: both rational, both recovered exactly
    p = parse_poly("(λ - 1)*(1048576*λ - 1048577)")
    ivs = isolate_roots(p, Fraction(1, 2**30))
    assert ivs == [(1, 1), (Fraction(1048577, 1048576), Fraction(1048577, 1048576))]
    assert sturm_count(p, Fraction(1, 2), 1) == 1
    assert sturm_count(p, 1, 2) == 1


def test_negative_leading_coefficient():
    rep = integer_roots(parse_poly("-1*λ^3 + λ"))
    assert dict(rep.integer_roots) == {0: 1, 1: 1, -1: 1}
    assert rep.residual == -1
    assert rep.reconstructs()


def test_big_coefficient_isolation_is_fast_and_bounded():
    rng = random.Random(1)
    for _ in range(10):
        coeffs = [rng.randint(-(10**9), 10**9) for _ in range(13)]
        coeffs[-1] = abs(coeffs[-1]) or 1
        poly = MPoly.from_univariate(coeffs)
        assert 0 <= count_real_roots(poly) <= 12


def test_equality_and_hash_ignore_dead_variables():
    a = parse_poly("s^2 - 1", variables=("s",))
    b = parse_poly("s^2 - 1", variables=("λ", "s", "t"))
    assert a == b
    assert hash(a) == hash(b)
    assert MPoly.const(3, ()) == 3 and hash(MPoly.const(3, ("s",))) == hash(MPoly.const(3, ()))
