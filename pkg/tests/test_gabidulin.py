"""Evaluation codes in the rank metric: bounds, encoding, decoding."""

import itertools
import random

import pytest

from rankfuzz.errors import (
    BadDimensions,
    BadDistance,
    BadRange,
    DecodingFailure,
    DependentPoints,
    InfeasibleShape,
    LengthMismatch,
    TooLarge,
)
from rankfuzz.fields import element_rank, ext_field, rank_distance
from rankfuzz.gabidulin import (
    GabidulinCode,
    min_distance_exhaustive,
    random_rank_error,
    singleton_bound,
)
from rankfuzz.linpoly import LinearizedPoly

F16 = ext_field(2, 4)
F256 = ext_field(2, 8)
F243 = ext_field(3, 5)


def basis_points(field, n):
    return tuple(field.q**i for i in range(n))


def all_codewords(code):
    coords = itertools.product(range(code.field.order), repeat=code.k)
    for msg in coords:
        yield code.encode(msg)


# ---------------------------------------------------------------------------
# Construction and bounds.


def test_parameter_validation():
    with pytest.raises(BadDimensions):
        GabidulinCode(F16, 5, 2, 1, (1, 2, 4, 8, 3))  # n > m
    with pytest.raises(BadDimensions):
        GabidulinCode(F16, 3, 0, 1, basis_points(F16, 3))
    with pytest.raises(BadDimensions):
        GabidulinCode(F16, 3, 4, 1, basis_points(F16, 3))  # k > n
    with pytest.raises(LengthMismatch):
        GabidulinCode(F16, 3, 1, 1, basis_points(F16, 4))
    with pytest.raises(DependentPoints):
        GabidulinCode(F16, 3, 1, 1, (1, 2, 3))


def test_tolerated_rank():
    assert GabidulinCode(F256, 8, 4, 1, basis_points(F256, 8)).t == 2
    assert GabidulinCode(F16, 4, 1, 1, basis_points(F16, 4)).t == 1
    assert GabidulinCode(F16, 4, 4, 1, basis_points(F16, 4)).t == 0


def test_singleton_bound_values():
    # short side dominates one way, tall side the other
    assert singleton_bound(2, 4, 4, 3) == 2**8
    assert singleton_bound(2, 4, 4, 1) == 2**16
    assert singleton_bound(2, 6, 3, 2) == min(2 ** (6 * 2), 2 ** (3 * 5))
    with pytest.raises(BadDistance):
        singleton_bound(2, 4, 4, 5)
    with pytest.raises(BadDistance):
        singleton_bound(2, 4, 4, 0)
    # wide matrix shapes are fine: the bound is transpose symmetric
    assert singleton_bound(2, 3, 4, 1) == singleton_bound(2, 4, 3, 1)


def test_generator_matrix_rows_are_twisted_powers():
    pts = basis_points(F243, 4)
    code = GabidulinCode(F243, 4, 3, 2, pts)
    G = code.generator_matrix()
    for i in range(3):
        for j in range(4):
            assert G[i][j] == F243.frobenius(pts[j], 2 * i)


def test_encode_small_case():
    # one-coefficient message scales the evaluation points
    w = 2
    code = GabidulinCode(ext_field(2, 2), 2, 1, 1, (1, w))
    cw = code.encode((w,))
    F4 = ext_field(2, 2)
    assert cw == (w, F4.mul(w, w))
    assert cw == (2, 3)


def test_encode_is_linear():
    rng = random.Random(1)
    code = GabidulinCode(F256, 6, 3, 1, basis_points(F256, 6))
    for _ in range(100):
        m1 = F256.random_vector(3, rng)
        m2 = F256.random_vector(3, rng)
        sum_msg = tuple(F256.add(a, b) for a, b in zip(m1, m2))
        summed = tuple(
            F256.add(a, b) for a, b in zip(code.encode(m1), code.encode(m2))
        )
        assert code.encode(sum_msg) == summed


def test_codeword_is_polynomial_evaluation():
    rng = random.Random(2)
    code = GabidulinCode(F243, 5, 2, 3, basis_points(F243, 5))
    for _ in range(50):
        msg = F243.random_vector(2, rng)
        p = LinearizedPoly(F243, 3, msg)
        assert code.encode(msg) == tuple(p(x) for x in code.points)


# ---------------------------------------------------------------------------
# Distance properties (exhaustive at toy scale).


@pytest.mark.parametrize("k", [1, 2, 3])
def test_minimum_distance_meets_design(k):
    code = GabidulinCode(F16, 4, k, 1, basis_points(F16, 4))
    assert min_distance_exhaustive(code) == 4 - k + 1


def test_cardinality_meets_singleton_with_equality():
    for k in (1, 2, 3):
        d = 4 - k + 1
        assert 2 ** (4 * k) == singleton_bound(2, 4, 4, d)


def test_min_distance_guard():
    big = GabidulinCode(F256, 8, 4, 1, basis_points(F256, 8))
    with pytest.raises(TooLarge):
        min_distance_exhaustive(big)


def test_nonzero_codewords_have_min_rank():
    code = GabidulinCode(F16, 4, 2, 3, basis_points(F16, 4))
    seen = set()
    for cw in all_codewords(code):
        r = element_rank(F16, list(cw))
        seen.add(r)
        assert cw == (0, 0, 0, 0) or r >= 3
    assert 3 in seen and 4 in seen


# ---------------------------------------------------------------------------
# Error sampling.


def test_random_rank_error_exact_rank():
    rng = random.Random(3)
    for field, n in [(F256, 8), (F243, 5), (F16, 3)]:
        for target in range(0, min(field.m, n) + 1):
            for _ in range(20):
                e = random_rank_error(field, n, target, rng)
                assert len(e) == n
                assert element_rank(field, list(e)) == target


def test_random_rank_error_bad_rank():
    rng = random.Random(4)
    with pytest.raises(BadRange):
        random_rank_error(F16, 3, 4, rng)  # rank > n
    with pytest.raises(BadRange):
        random_rank_error(F16, 4, -1, rng)
    with pytest.raises(BadRange):
        random_rank_error(ext_field(2, 2), 2, 3, rng)  # rank > m


# ---------------------------------------------------------------------------
# Decoding.


def add_vec(field, a, b):
    return tuple(field.add(x, y) for x, y in zip(a, b))


@pytest.mark.parametrize(
    "q,m,n,k,s",
    [
        (2, 8, 8, 4, 1),
        (2, 8, 8, 4, 3),
        (2, 6, 5, 1, 1),
        (3, 5, 5, 1, 2),
        (3, 5, 4, 2, 1),
        (5, 4, 4, 2, 3),
    ],
)
def test_decode_roundtrip_within_radius(q, m, n, k, s):
    field = ext_field(q, m)
    rng = random.Random(1000 * q + 10 * n + k)
    for trial in range(60):
        while True:
            pts = field.random_vector(n, rng)
            if element_rank(field, list(pts)) == n:
                break
        code = GabidulinCode(field, n, k, s, pts)
        msg = field.random_vector(k, rng)
        e = rng.randrange(code.t + 1)
        err = random_rank_error(field, n, e, rng)
        got, got_rank = code.decode(add_vec(field, code.encode(msg), err))
        assert got == msg
        assert got_rank == e


def test_decode_clean_word_any_shape():
    rng = random.Random(5)
    for n, k in [(1, 1), (2, 1), (3, 3), (8, 7)]:
        code = GabidulinCode(F256, n, k, 1, basis_points(F256, n))
        msg = F256.random_vector(k, rng)
        got, r = code.decode(code.encode(msg))
        assert got == msg and r == 0


def test_decode_failure_when_no_codeword_close():
    """Exhaustive oracle: any word at rank distance > t from every
    codeword must raise instead of returning something."""
    code = GabidulinCode(F16, 4, 2, 1, basis_points(F16, 4))  # t = 1
    rng = random.Random(6)
    words = list(all_codewords(code))
    tried = 0
    while tried < 25:
        w = F16.random_vector(4, rng)
        nearest = min(rank_distance(F16, w, cw) for cw in words)
        if nearest <= code.t:
            continue
        tried += 1
        with pytest.raises(DecodingFailure):
            code.decode(w)


def test_decode_never_returns_wrong_message_within_radius():
    # whenever decode succeeds the output codeword is within t of input
    code = GabidulinCode(F16, 4, 2, 1, basis_points(F16, 4))
    rng = random.Random(7)
    successes = 0
    for _ in range(300):
        w = F16.random_vector(4, rng)
        try:
            msg, r = code.decode(w)
        except DecodingFailure:
            continue
        successes += 1
        cw = code.encode(msg)
        assert rank_distance(F16, w, cw) == r
        assert r <= code.t
    assert successes > 10


def test_decode_validates_length():
    code = GabidulinCode(F16, 4, 2, 1, basis_points(F16, 4))
    with pytest.raises(LengthMismatch):
        code.decode((0, 0, 0))


def test_decode_all_twists_agree_on_clean_words():
    rng = random.Random(8)
    for s in (1, 2, 3, 4):
        code = GabidulinCode(F243, 5, 3, s, basis_points(F243, 5))
        msg = F243.random_vector(3, rng)
        got, r = code.decode(code.encode(msg))
        assert got == msg and r == 0
