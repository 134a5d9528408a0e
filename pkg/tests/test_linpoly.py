"""Twisted linearized polynomials: evaluation, composition, division,
interpolation, and induced-map ranks."""

import random

import pytest

from rankfuzz.errors import (
    BadTwist,
    DependentPoints,
    DependentRestriction,
    DivisionByZeroPoly,
    LengthMismatch,
    MismatchedField,
    TwistMismatch,
)
from rankfuzz.fields import element_rank, ext_field
from rankfuzz.linpoly import LinearizedPoly, interpolate, moore_matrix

F4 = ext_field(2, 2)
F16 = ext_field(2, 4)
F27 = ext_field(3, 3)
F243 = ext_field(3, 5)
OMEGA = 2  # generator digit x in F_4; OMEGA^2 = OMEGA + 1


def rand_poly(field, s, max_deg, rng, nonzero=False):
    while True:
        deg = rng.randrange(0, max_deg + 1)
        coeffs = [field.random_element(rng) for _ in range(deg + 1)]
        p = LinearizedPoly(field, s, coeffs)
        if not nonzero or not p.is_zero:
            return p


# ---------------------------------------------------------------------------
# Construction.


def test_trailing_zero_trim_and_degree():
    p = LinearizedPoly(F16, 1, [3, 0, 0])
    assert p.degree == 0
    assert LinearizedPoly(F16, 1, []).is_zero
    assert LinearizedPoly(F16, 1, [0, 0]).degree == -1
    assert LinearizedPoly.monomial(F16, 1, 2).degree == 2
    assert LinearizedPoly.identity(F16, 1)(7) == 7


def test_twist_validation():
    with pytest.raises(BadTwist):
        LinearizedPoly(F16, 2, [1])  # gcd(2, 4) = 2
    with pytest.raises(BadTwist):
        LinearizedPoly(F16, 0, [1])
    with pytest.raises(BadTwist):
        LinearizedPoly(F16, 4, [1])
    LinearizedPoly(F16, 3, [1])  # gcd(3, 4) = 1: fine


def test_mixed_operand_rejection():
    p = LinearizedPoly(F16, 1, [1])
    q3 = LinearizedPoly(F16, 3, [1])
    other = LinearizedPoly(F4, 1, [1])
    with pytest.raises(TwistMismatch):
        p + q3
    with pytest.raises(MismatchedField):
        p + other
    with pytest.raises(TwistMismatch):
        p.compose(q3)


def test_immutability():
    p = LinearizedPoly(F16, 1, [1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (0,)


# ---------------------------------------------------------------------------
# Evaluation.


def test_monomial_evaluation_is_iterated_frobenius():
    rng = random.Random(2)
    for field, s in [(F16, 1), (F16, 3), (F27, 1), (F27, 2)]:
        for _ in range(100):
            a = field.random_element(rng)
            i = rng.randrange(0, 4)
            mono = LinearizedPoly.monomial(field, s, i)
            assert mono(a) == field.frobenius(a, s * i)


def test_evaluation_is_additive_and_scalar_linear():
    rng = random.Random(3)
    for field, s in [(F16, 1), (F27, 2), (F243, 3)]:
        for _ in range(200):
            p = rand_poly(field, s, 3, rng)
            a, b = field.random_element(rng), field.random_element(rng)
            assert p(field.add(a, b)) == field.add(p(a), p(b))
            c = rng.randrange(field.q)  # base-field scalar embeds as a digit
            assert p(field.mul(c, a)) == field.mul(c, p(a))


def test_evaluate_all_matches_pointwise():
    rng = random.Random(4)
    for field, s in [(F16, 1), (F16, 3), (F27, 1), (F27, 2), (ext_field(5, 2), 1)]:
        for _ in range(20):
            p = rand_poly(field, s, 3, rng)
            table = p.evaluate_all()
            assert len(table) == field.order
            for a in range(field.order):
                assert table[a] == p(a)


def test_zero_polynomial_evaluates_to_zero():
    z = LinearizedPoly(F16, 1, [])
    assert z(0) == 0 and z(11) == 0
    assert all(v == 0 for v in z.evaluate_all())


# ---------------------------------------------------------------------------
# Ring operations.


def test_addition_matches_evaluation():
    rng = random.Random(5)
    for _ in range(200):
        p = rand_poly(F27, 1, 3, rng)
        q = rand_poly(F27, 1, 3, rng)
        a = F27.random_element(rng)
        assert (p + q)(a) == F27.add(p(a), q(a))
        assert (p - q)(a) == F27.sub(p(a), q(a))
        assert (-p)(a) == F27.neg(p(a))


def test_compose_agrees_with_chained_evaluation():
    rng = random.Random(6)
    for field, s in [(F16, 1), (F16, 3), (F27, 2), (F243, 2)]:
        for _ in range(150):
            p = rand_poly(field, s, 3, rng)
            q = rand_poly(field, s, 3, rng)
            pq = p.compose(q)
            for _ in range(5):
                a = field.random_element(rng)
                assert pq(a) == p(q(a))


def test_compose_small_known_cases():
    # scaling by the generator before/after one twist differ by a conjugate
    w_x = LinearizedPoly(F4, 1, [OMEGA])  # a -> w * a
    x_q = LinearizedPoly.monomial(F4, 1, 1)  # a -> a^2
    left = w_x.compose(x_q)  # a -> w * a^2
    assert left.coeffs == (0, OMEGA)
    right = x_q.compose(w_x)  # a -> (w a)^2 = w^2 a^2
    w_sq = F4.mul(OMEGA, OMEGA)
    assert right.coeffs == (0, w_sq)
    assert w_sq == OMEGA ^ 1  # w^2 = w + 1 in this representation


def test_compose_raw_degrees_add():
    rng = random.Random(7)
    for _ in range(100):
        p = rand_poly(F16, 1, 4, rng, nonzero=True)
        q = rand_poly(F16, 1, 4, rng, nonzero=True)
        raw = p.compose(q, reduce=False)
        assert raw.degree == p.degree + q.degree


def test_compose_associative():
    rng = random.Random(8)
    for _ in range(80):
        p = rand_poly(F27, 1, 3, rng)
        q = rand_poly(F27, 1, 3, rng)
        r = rand_poly(F27, 1, 3, rng)
        assert p.compose(q.compose(r)).reduced() == p.compose(q).compose(r).reduced()


def test_compose_distributes_over_addition():
    rng = random.Random(9)
    for _ in range(80):
        p = rand_poly(F16, 3, 3, rng)
        q = rand_poly(F16, 3, 3, rng)
        r = rand_poly(F16, 3, 3, rng)
        assert p.compose(q + r) == (p.compose(q) + p.compose(r)).reduced()
        assert (p + q).compose(r) == (p.compose(r) + q.compose(r)).reduced()


def test_reduced_preserves_the_induced_map():
    rng = random.Random(10)
    for _ in range(60):
        p = rand_poly(F16, 1, 3, rng)
        q = rand_poly(F16, 1, 3, rng)
        raw = p.compose(q, reduce=False)
        folded = raw.reduced()
        assert folded.degree < F16.m or folded.is_zero
        for _ in range(4):
            a = F16.random_element(rng)
            assert raw(a) == folded(a)


# ---------------------------------------------------------------------------
# Division.


@pytest.mark.parametrize("field,s", [(F16, 1), (F16, 3), (F27, 1), (F27, 2), (F243, 4)])
def test_right_division_reconstructs(field, s):
    rng = random.Random(100)
    for _ in range(200):
        f = rand_poly(field, s, 5, rng)
        g = rand_poly(field, s, 3, rng, nonzero=True)
        q, r = f.divmod_right(g)
        assert r.degree < g.degree or r.is_zero
        assert q.compose(g, reduce=False) + r == f


@pytest.mark.parametrize("field,s", [(F16, 1), (F16, 3), (F27, 1), (F27, 2), (F243, 4)])
def test_left_division_reconstructs(field, s):
    rng = random.Random(101)
    for _ in range(200):
        f = rand_poly(field, s, 5, rng)
        g = rand_poly(field, s, 3, rng, nonzero=True)
        q, r = f.divmod_left(g)
        assert r.degree < g.degree or r.is_zero
        assert (g.compose(q, reduce=False) + r) == f


def test_division_by_zero_poly_rejected():
    f = LinearizedPoly(F16, 1, [1, 1])
    z = LinearizedPoly(F16, 1, [])
    with pytest.raises(DivisionByZeroPoly):
        f.divmod_right(z)
    with pytest.raises(DivisionByZeroPoly):
        f.divmod_left(z)


def test_division_small_degree_cases():
    rng = random.Random(102)
    for _ in range(50):
        f = rand_poly(F27, 1, 1, rng)
        g = rand_poly(F27, 1, 2, rng, nonzero=True)
        for q, r in (f.divmod_right(g), f.divmod_left(g)):
            if g.degree > f.degree:
                assert q.is_zero and r == f


def test_exact_division_roundtrip():
    rng = random.Random(103)
    for _ in range(100):
        g = rand_poly(F16, 1, 3, rng, nonzero=True)
        q = rand_poly(F16, 1, 3, rng, nonzero=True)
        f = q.compose(g, reduce=False)
        q2, r2 = f.divmod_right(g)
        assert r2.is_zero and q2 == q
        f = g.compose(q, reduce=False)
        q3, r3 = f.divmod_left(g)
        assert r3.is_zero and q3 == q


# ---------------------------------------------------------------------------
# Moore matrices and interpolation.


def test_moore_matrix_small_case():
    # points 1 and the generator, one twist: second row squares
    mat = moore_matrix(F4, 1, 2, [1, OMEGA])
    assert mat == [[1, OMEGA], [1, F4.mul(OMEGA, OMEGA)]]
    assert mat[1][1] == 3


def test_moore_matrix_entries_are_iterated_frobenius():
    rng = random.Random(11)
    pts = [F243.random_element(rng) for _ in range(4)]
    for s in (1, 2, 3, 4):
        mat = moore_matrix(F243, s, 3, pts)
        for i in range(3):
            for j in range(4):
                assert mat[i][j] == F243.frobenius(pts[j], s * i)


def test_interpolation_recovers_known_maps():
    # scaling map through two independent points
    target = LinearizedPoly(F4, 1, [OMEGA])
    got = interpolate(F4, 1, [1, OMEGA], [target(1), target(OMEGA)])
    assert got == target
    # pure twist map
    target = LinearizedPoly.monomial(F4, 1, 1)
    got = interpolate(F4, 1, [1, OMEGA], [target(1), target(OMEGA)])
    assert got == target


def test_interpolation_roundtrip_random():
    rng = random.Random(12)
    for field, s in [(F16, 1), (F16, 3), (F27, 2), (F243, 3)]:
        for _ in range(100):
            n = rng.randrange(1, field.m + 1)
            while True:
                pts = [field.random_element(rng) for _ in range(n)]
                if element_rank(field, pts) == n:
                    break
            p = rand_poly(field, s, n - 1, rng)
            got = interpolate(field, s, pts, [p(x) for x in pts])
            for x in pts:
                assert got(x) == p(x)
            assert got.degree < n or got.is_zero
            # agreement on the whole span, not only the nodes
            for _ in range(3):
                coeffs = [rng.randrange(field.q) for _ in range(n)]
                span_pt = 0
                for c, x in zip(coeffs, pts):
                    span_pt = field.add(span_pt, field.mul(c, x))
                assert got(span_pt) == p(span_pt)


def test_interpolation_unique_at_full_degree():
    rng = random.Random(13)
    for _ in range(50):
        pts = []
        while element_rank(F16, pts) != 4:
            pts = [F16.random_element(rng) for _ in range(4)]
        p = rand_poly(F16, 1, 3, rng)
        assert interpolate(F16, 1, pts, [p(x) for x in pts]) == p


def test_interpolation_rejects_dependent_points():
    with pytest.raises(DependentPoints):
        interpolate(F16, 1, [1, 2, 3], [1, 2, 3])  # 3 = 1 + 2
    with pytest.raises(DependentPoints):
        interpolate(F16, 1, [0], [0])
    with pytest.raises(LengthMismatch):
        interpolate(F16, 1, [1, 2], [1])


# ---------------------------------------------------------------------------
# Induced-map rank.


def test_map_rank_matches_image_dimension():
    rng = random.Random(14)
    for field, s in [(F16, 1), (F27, 1), (F27, 2)]:
        basis = [field.q**i for i in range(field.m)]
        for _ in range(100):
            p = rand_poly(field, s, field.m - 1, rng)
            images = [p(b) for b in basis]
            assert p.map_rank() == element_rank(field, images)


def test_map_rank_kernel_size_consistency():
    rng = random.Random(15)
    for _ in range(40):
        p = rand_poly(F16, 1, 3, rng)
        r = p.map_rank()
        zeros = sum(1 for v in p.evaluate_all() if v == 0)
        assert zeros == 2 ** (4 - r)


def test_map_rank_with_restriction():
    rng = random.Random(16)
    p = LinearizedPoly.monomial(F16, 1, 1) - LinearizedPoly.identity(F16, 1)
    # kernel of a - a^2 is the base field, so rank is m - 1
    assert p.map_rank() == 3
    # restricted to a basis containing 1, one direction collapses
    assert p.map_rank(restriction=[1, 2]) == 1
    with pytest.raises(DependentRestriction):
        p.map_rank(restriction=[1, 2, 3])


def test_trace_map_has_rank_one():
    # sum of all conjugates lands in the base field
    trace = LinearizedPoly(F16, 1, [1, 1, 1, 1])
    assert trace.map_rank() == 1
    for a in range(16):
        assert trace(a) in (0, 1)
