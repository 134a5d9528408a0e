"""Generalized Gabidulin codes in the rank metric.

A code is determined by n independent evaluation points g_1..g_n in
F_{q^m} and a twist s with gcd(s, m) = 1: codewords are the evaluations
(f(g_1), ..., f(g_n)) of linearized polynomials f of degree below k in
the s-twisted ledger.  Distance is rank distance: the rank over F_q of
the coordinate matrix of the difference vector.  These codes attain the
rank-metric Singleton bound, and the decoder below corrects every error
of rank at most t = floor((n - k) / 2).
"""

from __future__ import annotations

import itertools

from .errors import (
    BadDimensions,
    BadDistance,
    BadRange,
    DecodingFailure,
    DependentPoints,
    InfeasibleShape,
    LengthMismatch,
    TooLarge,
)
from .fields import (
    ExtField,
    element_rank,
    is_independent,
    kernel_ext,
    rank_distance,
    rank_fq,
)
from .linpoly import LinearizedPoly, _check_twist, moore_matrix

_EXHAUSTIVE_LIMIT = 1 << 20


class GabidulinCode:
    """[n, k] evaluation code over F_{q^m} with twist s."""

    def __init__(self, field: ExtField, n: int, k: int, s: int, points):
        _check_twist(field, s)
        pts = field.check_vector(points)
        if len(pts) != n:
            raise LengthMismatch(f"n={n} but {len(pts)} evaluation points")
        if not 1 <= k <= n or n > field.m:
            raise BadDimensions(f"need 1 <= k <= n <= m, got k={k}, n={n}, m={field.m}")
        if not is_independent(field, pts):
            raise DependentPoints("evaluation points are dependent over F_q")
        self.field = field
        self.n = n
        self.k = k
        self.s = s
        self.points = pts

    def __repr__(self):
        return (
            f"GabidulinCode(q={self.field.q}, m={self.field.m}, "
            f"n={self.n}, k={self.k}, s={self.s})"
        )

    @property
    def t(self) -> int:
        """Guaranteed decoding radius."""
        return (self.n - self.k) // 2

    def generator_matrix(self) -> list[list[int]]:
        return moore_matrix(self.field, self.s, self.k, self.points)

    def message_poly(self, message) -> LinearizedPoly:
        msg = self.field.check_vector(message)
        if len(msg) != self.k:
            raise LengthMismatch(f"message length {len(msg)}, expected {self.k}")
        return LinearizedPoly(self.field, self.s, msg)

    def encode(self, message) -> tuple[int, ...]:
        poly = self.message_poly(message)
        return tuple(poly(g) for g in self.points)

    def decode(self, received):
        """Recover (message, error_rank) from a word within rank distance t
        of a codeword; raise DecodingFailure otherwise.

        Reconstruction approach: find a nonzero pair (L, V) with
        deg L <= t, deg V <= t + k - 1 and L(received_i) = V(points_i)
        for all i, then read the message off the exact left division
        V = L o f.  Any nonzero solution of the linear system yields the
        same f whenever a codeword is in range.
        """
        field = self.field
        received = field.check_vector(received)
        if len(received) != self.n:
            raise LengthMismatch(f"received length {len(received)}, expected {self.n}")
        t, k, s = self.t, self.k, self.s
        frob, neg = field.frobenius, field.neg
        sm = s % field.m
        lam_cols = [list(received)]
        for _ in range(t):
            lam_cols.append([frob(x, sm) for x in lam_cols[-1]])
        val_cols = [list(self.points)]
        for _ in range(t + k - 1):
            val_cols.append([frob(x, sm) for x in val_cols[-1]])
        rows = [
            [col[i] for col in lam_cols] + [neg(col[i]) for col in val_cols]
            for i in range(self.n)
        ]
        kernel = kernel_ext(field, rows)
        if not kernel:
            raise DecodingFailure("no reconstruction pair exists")
        vec = kernel[0]
        locator = LinearizedPoly(field, s, vec[: t + 1])
        values = LinearizedPoly(field, s, vec[t + 1 :])
        if locator.is_zero:
            raise DecodingFailure("degenerate reconstruction pair")
        quotient, remainder = values.divmod_left(locator)
        if not remainder.is_zero or quotient.degree >= k:
            raise DecodingFailure("error rank exceeds decoding radius")
        message = quotient.coeffs + (0,) * (k - len(quotient.coeffs))
        codeword = self.encode(message)
        err = rank_distance(field, received, codeword)
        if err > t:
            raise DecodingFailure(f"nearest reconstruction lies at rank {err} > t={t}")
        return message, err


def singleton_bound(q: int, m: int, n: int, d: int) -> int:
    """Largest possible cardinality of a length-n code over F_{q^m} with
    minimum rank distance d."""
    if n < 1 or m < 1:
        raise BadDimensions(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    if not 1 <= d <= min(n, m):
        raise BadDistance(f"need 1 <= d <= min(n, m) = {min(n, m)}, got d={d}")
    return min(q ** (m * (n - d + 1)), q ** (n * (m - d + 1)))


def min_distance_exhaustive(code: GabidulinCode) -> int:
    """Minimum rank weight over all nonzero codewords, by enumeration."""
    field = code.field
    total = field.order**code.k
    if total > _EXHAUSTIVE_LIMIT:
        raise TooLarge(f"{total} codewords exceed the enumeration guard")
    best = None
    for message in itertools.product(field.elements(), repeat=code.k):
        if not any(message):
            continue
        w = element_rank(field, code.encode(message))
        if best is None or w < best:
            best = w
    return best


def random_rank_error(field: ExtField, n: int, rank: int, rng, max_tries: int = 10**4):
    """Length-n vector whose coordinate matrix has the exact given rank:
    sum of rank many products a_j * row_j with independent a_j in F_{q^m}
    and independent row_j in F_q^n."""
    if not 0 <= rank <= min(n, field.m):
        raise BadRange(f"rank must lie in 0..min(n, m), got {rank}")
    if rank == 0:
        return (0,) * n
    tries = 0
    scalars: list[int] = []
    while len(scalars) < rank:
        tries += 1
        if tries > max_tries:
            raise InfeasibleShape("could not sample independent multipliers")
        c = field.random_element(rng)
        if element_rank(field, scalars + [c]) == len(scalars) + 1:
            scalars.append(c)
    rows: list[list[int]] = []
    while len(rows) < rank:
        tries += 1
        if tries > max_tries:
            raise InfeasibleShape("could not sample independent support rows")
        r = [rng.randrange(field.q) for _ in range(n)]
        if rank_fq(rows + [r], field.q) == len(rows) + 1:
            rows.append(r)
    add, mul = field.add, field.mul
    out = []
    for i in range(n):
        acc = 0
        for a, row in zip(scalars, rows):
            if row[i]:
                acc = add(acc, mul(a, row[i]))
        out.append(acc)
    return tuple(out)
