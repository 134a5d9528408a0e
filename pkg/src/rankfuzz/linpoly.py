"""Twisted linearized polynomials over F_{q^m}.

A polynomial here is a coefficient list (f_0, f_1, ..., f_d) standing for
the map a |-> sum_i f_i * a^(q^(s*i)), where the twist s satisfies
gcd(s, m) = 1.  These maps are F_q-linear, and under composition they
form a non-commutative ring.

Coefficient lists may be longer than m: compositions and divisions run
on the raw ledgers of the skew ring, and reduced() folds a ledger back
to the canonical representative of the induced map (exponent k becomes
k mod m, since a^(q^m) = a for every field element).  Evaluation always
reduces exponents, so f(a) == f.reduced()(a) regardless.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    BadDimensions,
    BadTwist,
    DependentPoints,
    DependentRestriction,
    DivisionByZeroPoly,
    LengthMismatch,
    MismatchedField,
    TooLarge,
    TwistMismatch,
)
from .fields import ExtField, element_rank, is_independent, rank_fq, solve_ext

_EVAL_ALL_LIMIT = 1 << 20


def _check_twist(field: ExtField, s: int) -> int:
    m = field.m
    if m == 1:
        if s != 1:
            raise BadTwist(f"m = 1 requires s = 1, got {s}")
        return s
    if not isinstance(s, int) or s < 1 or s >= m or gcd(s, m) != 1:
        raise BadTwist(f"s must satisfy 1 <= s < {m} and gcd(s, m) = 1, got {s!r}")
    return s


class LinearizedPoly:
    """Immutable twisted linearized polynomial."""

    __slots__ = ("field", "s", "coeffs")

    def __init__(self, field: ExtField, s: int, coeffs=()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "s", _check_twist(field, s))
        cs = [field.check(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LinearizedPoly is immutable")

    @classmethod
    def monomial(cls, field: ExtField, s: int, i: int, c: int = 1) -> "LinearizedPoly":
        return cls(field, s, (0,) * i + (c,))

    @classmethod
    def identity(cls, field: ExtField, s: int) -> "LinearizedPoly":
        return cls(field, s, (1,))

    # -- basics -------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, LinearizedPoly)
            and self.field is other.field
            and self.s == other.s
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.s, self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return f"LinearizedPoly(s={self.s}, 0)"
        terms = ", ".join(f"({i}, {self.field.to_hex(c)})" for i, c in enumerate(self.coeffs) if c)
        return f"LinearizedPoly(s={self.s}, [{terms}])"

    def pairs_hex(self) -> list[tuple[int, str]]:
        """Nonzero coefficients as (index, hex) pairs, ascending index."""
        return [(i, self.field.to_hex(c)) for i, c in enumerate(self.coeffs) if c]

    def _check_pair(self, other: "LinearizedPoly"):
        if not isinstance(other, LinearizedPoly) or other.field is not self.field:
            raise MismatchedField("polynomials belong to different fields")
        if other.s != self.s:
            raise TwistMismatch(f"twists differ: {self.s} vs {other.s}")

    # -- evaluation ---------------------------------------------------------

    def __call__(self, a: int) -> int:
        field = self.field
        add, mul, frob, s = field.add, field.mul, field.frobenius, self.s
        acc = 0
        power = a
        for i, c in enumerate(self.coeffs):
            if i:
                power = frob(power, s)
            if c:
                acc = add(acc, mul(c, power))
        return acc

    def evaluate_all(self) -> list[int]:
        """Images of every field element, indexed by element, computed
        through F_q-linearity from the images of the polynomial basis."""
        field = self.field
        if field.order > _EVAL_ALL_LIMIT:
            raise TooLarge(f"field too large to enumerate ({field.order} elements)")
        base = [self(p) for p in field._qpow_m]
        out = [0] * field.order
        if field.q == 2:
            for v in range(1, field.order):
                lsb = v & -v
                out[v] = out[v ^ lsb] ^ base[lsb.bit_length() - 1]
            return out
        q = field.q
        add, mul = field.add, field.mul
        scaled = [[0] + [mul(d, b) for d in range(1, q)] for b in base]
        qpow = field._qpow
        for v in range(1, field.order):
            t, j = v, 0
            while t % q == 0:
                t //= q
                j += 1
            d = t % q
            out[v] = add(out[v - d * qpow[j]], scaled[j][d])
        return out

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        self._check_pair(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return LinearizedPoly(self.field, self.s, out)

    def __neg__(self) -> "LinearizedPoly":
        neg = self.field.neg
        return LinearizedPoly(self.field, self.s, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        self._check_pair(other)
        return self + (-other)

    def scale(self, c: int) -> "LinearizedPoly":
        c = self.field.check(c)
        mul = self.field.mul
        return LinearizedPoly(self.field, self.s, [mul(c, x) for x in self.coeffs])

    def reduced(self) -> "LinearizedPoly":
        """Canonical representative of the induced map: exponent ledger
        folded mod m."""
        m = self.field.m
        if len(self.coeffs) <= m:
            return self
        out = [0] * m
        add = self.field.add
        for i, c in enumerate(self.coeffs):
            out[i % m] = add(out[i % m], c)
        return LinearizedPoly(self.field, self.s, out)

    # -- ring structure -----------------------------------------------------

    def _compose_raw(self, other: "LinearizedPoly") -> list[int]:
        # coefficient k of self o other is sum over i+j=k of
        # self_i * other_j^(q^(s*i))
        field, s = self.field, self.s
        f, g = self.coeffs, other.coeffs
        if not f or not g:
            return []
        add, mul, frob = field.add, field.mul, field.frobenius
        out = [0] * (len(f) + len(g) - 1)
        twisted = list(g)
        for i, fi in enumerate(f):
            if i:
                twisted = [frob(x, s) for x in twisted]
            if fi:
                for j, gj in enumerate(twisted):
                    if gj:
                        out[i + j] = add(out[i + j], mul(fi, gj))
        return out

    def compose(self, other: "LinearizedPoly", reduce: bool = True) -> "LinearizedPoly":
        """self o other, i.e. the map a |-> self(other(a)).

        With reduce=True (default) the exponent ledger is folded mod m;
        reduce=False keeps the raw skew-ring product.
        """
        self._check_pair(other)
        out = LinearizedPoly(self.field, self.s, self._compose_raw(other))
        return out.reduced() if reduce else out

    def divmod_right(self, g: "LinearizedPoly"):
        """(quotient, remainder) with self = quotient o g + remainder and
        remainder of lower degree than g, on raw ledgers."""
        return self._divmod(g, left=False)

    def divmod_left(self, g: "LinearizedPoly"):
        """(quotient, remainder) with self = g o quotient + remainder."""
        return self._divmod(g, left=True)

    def _divmod(self, g: "LinearizedPoly", left: bool):
        self._check_pair(g)
        if g.is_zero:
            raise DivisionByZeroPoly("division by the zero polynomial")
        field, s, m = self.field, self.s, self.field.m
        add, sub, mul, inv, frob = field.add, field.sub, field.mul, field.inv, field.frobenius
        dg = g.degree
        ge = g.coeffs[-1]
        r = list(self.coeffs)
        qq = [0] * max(len(r) - dg, 0)
        while len(r) - 1 >= dg:
            if r[-1] == 0:
                r.pop()
                continue
            c = len(r) - 1 - dg
            if left:
                # leading term of g o (qc x^[s c]) is ge * qc^(q^(s*dg))
                qc = frob(mul(r[-1], inv(ge)), (-s * dg) % m)
                for j, gj in enumerate(g.coeffs):
                    if gj:
                        r[c + j] = sub(r[c + j], mul(gj, frob(qc, (s * j) % m)))
            else:
                # leading term of (qc x^[s c]) o g is qc * ge^(q^(s*c))
                e = (s * c) % m
                qc = mul(r[-1], inv(frob(ge, e)))
                for j, gj in enumerate(g.coeffs):
                    if gj:
                        r[c + j] = sub(r[c + j], mul(qc, frob(gj, e)))
            qq[c] = add(qq[c], qc)
            r.pop()  # leading coefficient cancelled exactly
        return (
            LinearizedPoly(field, s, qq),
            LinearizedPoly(field, s, r),
        )

    # -- rank ---------------------------------------------------------------

    def map_rank(self, restriction=None) -> int:
        """Rank over F_q of the induced linear map, optionally restricted
        to the span of the given independent elements."""
        field = self.field
        if restriction is None:
            basis = list(field._qpow_m)
        else:
            basis = [field.check(b) for b in restriction]
            if not is_independent(field, basis):
                raise DependentRestriction("restriction basis is dependent")
        images = [self(b) for b in basis]
        return element_rank(field, images)


def moore_matrix(field: ExtField, s: int, k: int, points) -> list[list[int]]:
    """k x n matrix with entry (i, j) = points_j^(q^(s*i))."""
    _check_twist(field, s)
    if k < 1:
        raise BadDimensions(f"need at least one row, got k={k}")
    pts = list(field.check_vector(points))
    if not pts:
        raise LengthMismatch("need at least one point")
    rows = [pts]
    frob, sm = field.frobenius, s % field.m
    for _ in range(k - 1):
        rows.append([frob(x, sm) for x in rows[-1]])
    return rows


def interpolate(field: ExtField, s: int, xs, ys) -> LinearizedPoly:
    """Unique linearized polynomial of degree < len(xs) through the given
    (x, y) pairs; requires the x's to be independent over F_q."""
    _check_twist(field, s)
    xs = list(field.check_vector(xs))
    ys = list(field.check_vector(ys))
    if len(xs) != len(ys):
        raise LengthMismatch(f"{len(xs)} points but {len(ys)} values")
    if not xs:
        raise LengthMismatch("need at least one point")
    if not is_independent(field, xs):
        raise DependentPoints("interpolation points are dependent over F_q")
    n = len(xs)
    # row i: sum_j f_j * xs_i^(q^(s*j)) = ys_i
    mat = [moore_row for moore_row in zip(*moore_matrix(field, s, n, xs))]
    coeffs = solve_ext(field, [list(r) for r in mat], ys)
    if coeffs is None:  # cannot happen for independent points
        raise DependentPoints("interpolation system is singular")
    return LinearizedPoly(field, s, coeffs)
