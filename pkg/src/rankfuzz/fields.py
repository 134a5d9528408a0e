"""Arithmetic for small prime fields F_q and their extensions F_{q^m}.

An element of F_{q^m} is a plain Python int: the element with coordinates
(c_0, ..., c_{m-1}) in the polynomial basis {1, x, ..., x^{m-1}} is the
integer c_0 + c_1*q + ... + c_{m-1}*q**(m-1).  The zero int is the zero
element and the ints 0..q-1 are the embedded base-field scalars.  All
operations take and return such ints, in the style of classic finite
field libraries that keep elements unboxed.

The reduction modulus is never a caller choice: for each (q, m) the field
uses the monic irreducible polynomial of degree m whose coefficient
vector (c_0, ..., c_{m-1}), read as the integer sum c_i * q**i, is
smallest.  Two fields with equal (q, m) are therefore interchangeable,
and the ext_field() factory returns a shared instance.

Fields of at most 2**16 elements build discrete log tables on first
multiplication; larger fields (up to the supported m <= 64) fall back to
polynomial arithmetic.  Arithmetic methods assume canonical ints and do
not re-validate their inputs on every call; use check() / check_vector()
at API boundaries.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import (
    DegreeOutOfRange,
    DimensionMismatch,
    DivisionByZero,
    LengthMismatch,
    MismatchedField,
    NonPrimeQ,
)

_TABLE_LIMIT = 1 << 16

# Degree cap keeps q**m comfortably inside exact int range for the
# exhaustive guards used elsewhere.
_MAX_DEGREE = 64
_MAX_PRIME = 251


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Dense polynomials over F_q, little-endian coefficient lists.  Only what
# the modulus search needs lives here.


def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _ptrim(out)


def _pmod(a: list[int], mod: list[int], q: int) -> list[int]:
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            off = len(a) - 1 - dm
            for j in range(dm):
                a[off + j] = (a[off + j] - lead * mod[j]) % q
        a.pop()
    return _ptrim(a)


def _pgcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], -1, q)
        monic = [(c * inv) % q for c in b]
        a, b = b, _pmod(a, monic, q)
    return a


def _ppowmod(base: list[int], e: int, mod: list[int], q: int) -> list[int]:
    result = [1]
    acc = _pmod(base, mod, q)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, q), mod, q)
        acc = _pmod(_pmul(acc, acc, q), mod, q)
        e >>= 1
    return result


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(poly: list[int], q: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_q.

    Walks t = x^(q^i) mod poly one Frobenius step at a time so the
    subfield gcd checks reuse the intermediate powers.
    """
    m = len(poly) - 1
    if m == 1:
        return True
    checkpoints = {m // r for r in _prime_divisors(m)}
    t = _pmod([0, 1], poly, q)
    for i in range(1, m + 1):
        t = _ppowmod(t, q, poly, q)
        if i in checkpoints:
            diff = list(t) + [0] * max(0, 2 - len(t))
            diff[1] = (diff[1] - 1) % q
            if len(_pgcd(poly, _ptrim(diff), q)) - 1 > 0:
                return False
    return t == _pmod([0, 1], poly, q)


def canonical_modulus(q: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m with the smallest low-coefficient
    vector, ordered by the integer value sum c_i * q**i."""
    for low in range(q**m):
        digits = []
        v = low
        for _ in range(m):
            v, r = divmod(v, q)
            digits.append(r)
        cand = digits + [1]
        if _is_irreducible(cand, q):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class ExtField:
    """Context for F_{q^m} with elements represented as ints.

    Do not call the constructor directly in normal use; go through
    ext_field(q, m) so equal parameters share one instance.
    """

    def __init__(self, q: int, m: int):
        if not isinstance(q, int) or not is_prime(q) or q > _MAX_PRIME:
            raise NonPrimeQ(f"q must be a prime <= {_MAX_PRIME}, got {q!r}")
        if not isinstance(m, int) or m < 1 or m > _MAX_DEGREE:
            raise DegreeOutOfRange(f"m must be in 1..{_MAX_DEGREE}, got {m!r}")
        self.q = q
        self.m = m
        self.order = q**m
        self.modulus = canonical_modulus(q, m)
        self._qpow = [q**i for i in range(m + 1)]
        self._qpow_m = self._qpow[:m]
        # reductions of x^(m+j) for j = 0..m-2, as digit lists
        self._red = []
        rem = [(-c) % q for c in self.modulus[:m]]  # x^m = -(low part)
        self._red.append(list(rem))
        for _ in range(m - 2):
            # shift up by one, then fold the new x^m term back down
            rem = [0] + rem
            carry = rem.pop()
            if carry:
                base = self._red[0]
                rem = [(rem[i] + carry * base[i]) % q for i in range(m)]
            self._red.append(list(rem))
        if q == 2:
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
        self._exp = None
        self._log = None
        self._frob1 = None
        self._normal = None
        if self.order > _TABLE_LIMIT:
            # tables will never exist; skip the lazy check on every call
            self.mul = self._mul_basic
            self.inv = self._inv_basic

    def __repr__(self):
        return f"ExtField(q={self.q}, m={self.m})"

    # -- representation -----------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or a < 0 or a >= self.order:
            raise MismatchedField(f"{a!r} is not an element of {self!r}")
        return a

    def check_vector(self, vec) -> tuple[int, ...]:
        return tuple(self.check(a) for a in vec)

    def digits(self, a: int) -> tuple[int, ...]:
        q = self.q
        out = []
        for _ in range(self.m):
            a, r = divmod(a, q)
            out.append(r)
        return tuple(out)

    def from_digits(self, ds) -> int:
        ds = list(ds)
        if len(ds) != self.m:
            raise LengthMismatch(f"need {self.m} digits, got {len(ds)}")
        v = 0
        for i, d in enumerate(ds):
            if not 0 <= d < self.q:
                raise MismatchedField(f"digit {d!r} out of range for q={self.q}")
            v += d * self._qpow[i]
        return v

    def to_bytes(self, a: int) -> bytes:
        return bytes(self.digits(a))

    def from_bytes(self, data: bytes) -> int:
        if len(data) != self.m:
            raise LengthMismatch(f"need {self.m} bytes, got {len(data)}")
        return self.from_digits(list(data))

    def to_hex(self, a: int) -> str:
        return self.to_bytes(a).hex()

    def from_hex(self, text: str) -> int:
        try:
            data = bytes.fromhex(text.strip())
        except ValueError as exc:
            raise MismatchedField(f"bad hex element {text!r}") from exc
        return self.from_bytes(data)

    def vec_to_bytes(self, vec) -> bytes:
        return b"".join(self.to_bytes(a) for a in vec)

    def vec_from_bytes(self, data: bytes) -> tuple[int, ...]:
        if len(data) % self.m:
            raise LengthMismatch("byte length is not a multiple of m")
        m = self.m
        return tuple(self.from_bytes(data[i : i + m]) for i in range(0, len(data), m))

    def elements(self):
        return range(self.order)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:  # overridden with xor when q == 2
        q = self.q
        v = 0
        for p in self._qpow_m:
            v += ((a + b) % q) * p
            a //= q
            b //= q
        return v

    def sub(self, a: int, b: int) -> int:
        q = self.q
        v = 0
        for p in self._qpow_m:
            v += ((a - b) % q) * p
            a //= q
            b //= q
        return v

    def neg(self, a: int) -> int:
        q = self.q
        v = 0
        for p in self._qpow_m:
            v += ((-a) % q) * p
            a //= q
        return v

    def _mul_basic(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        q, m = self.q, self.m
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        low = [c % q for c in conv[:m]]
        for j in range(m - 1):
            c = conv[m + j] % q
            if c:
                red = self._red[j]
                for i in range(m):
                    low[i] = (low[i] + c * red[i]) % q
        v = 0
        for i, d in enumerate(low):
            v += d * self._qpow[i]
        return v

    def mul(self, a: int, b: int) -> int:
        # only reached before the tables exist; _ensure_tables installs
        # instance-level fast paths that shadow this method
        self._ensure_tables()
        return self.mul(a, b)

    def _inv_basic(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self.pow_(a, self.order - 2)

    def inv(self, a: int) -> int:
        self._ensure_tables()
        return self.inv(a)

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        result = 1
        acc = a
        mul = self.mul
        while e:
            if e & 1:
                result = mul(result, acc)
            acc = mul(acc, acc)
            e >>= 1
        return result

    def frobenius(self, a: int, i: int = 1) -> int:
        i %= self.m
        if self._exp is None:
            self._ensure_tables()
        frob1 = self._frob1
        if frob1 is not None:
            for _ in range(i):
                a = frob1[a]
            return a
        for _ in range(i):
            a = self.pow_(a, self.q)
        return a

    def _ensure_tables(self):
        if self._exp is not None or self.order > _TABLE_LIMIT:
            return
        n = self.order - 1
        if n == 0:
            return
        primes = _prime_divisors(n)
        g = None
        for cand in range(2, self.order):
            if all(self._pow_basic(cand, n // p) != 1 for p in primes):
                g = cand
                break
        if g is None:  # order == 2: the only unit is 1
            g = 1
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._mul_basic(exp[i - 1], g)
        log = [-1] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        frob1 = [0] * self.order
        q = self.q
        for i, v in enumerate(exp):
            frob1[v] = exp[(i * q) % n]
        self._exp, self._log, self._frob1 = exp, log, frob1

        def mul(a, b, exp=exp, log=log, n=n):
            if a == 0 or b == 0:
                return 0
            return exp[(log[a] + log[b]) % n]

        def inv(a, exp=exp, log=log, n=n):
            if a == 0:
                raise DivisionByZero("zero has no inverse")
            return exp[(n - log[a]) % n]

        def pow_(a, e, exp=exp, log=log, n=n):
            if a == 0:
                if e < 0:
                    raise DivisionByZero("zero has no inverse")
                return 0 if e else 1
            return exp[(log[a] * e) % n]

        self.mul = mul
        self.inv = inv
        self.pow_ = pow_

    def _pow_basic(self, a: int, e: int) -> int:
        result = 1
        acc = a
        while e:
            if e & 1:
                result = self._mul_basic(result, acc)
            acc = self._mul_basic(acc, acc)
            e >>= 1
        return result

    # -- sampling -----------------------------------------------------------

    def random_element(self, rng) -> int:
        """Uniform element, one base-q digit at a time (no rejection)."""
        v = 0
        for p in self._qpow_m:
            v += rng.randrange(self.q) * p
        return v

    def random_vector(self, n: int, rng) -> tuple[int, ...]:
        return tuple(self.random_element(rng) for _ in range(n))

    # -- vectors and matrices ----------------------------------------------

    def vec_to_mat(self, vec) -> np.ndarray:
        """m x n matrix over F_q whose column j holds the digits of vec[j]."""
        out = np.zeros((self.m, len(vec)), dtype=np.uint8)
        for j, v in enumerate(vec):
            out[:, j] = self.digits(v)
        return out

    def mat_to_vec(self, mat) -> tuple[int, ...]:
        mat = np.asarray(mat)
        if mat.ndim != 2 or mat.shape[0] != self.m:
            raise DimensionMismatch(f"need an {self.m}-row matrix")
        if mat.size and int(mat.max()) >= self.q:
            raise MismatchedField("matrix entry out of range for F_q")
        return tuple(self.from_digits([int(x) for x in mat[:, j]]) for j in range(mat.shape[1]))


@functools.lru_cache(maxsize=None)
def ext_field(q: int, m: int) -> ExtField:
    """Shared field instance for (q, m)."""
    return ExtField(q, m)


# ---------------------------------------------------------------------------
# Linear algebra over F_q (numpy int matrices, entries reduced mod q).


def _as_matrix(mat) -> np.ndarray:
    arr = np.array(mat, dtype=np.int64)
    if arr.ndim != 2:
        raise DimensionMismatch("expected a 2-d matrix")
    return arr


def _rref_fq(mat: np.ndarray, q: int):
    mat = mat % q
    rows, cols = mat.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = None
        for i in range(r, rows):
            if mat[i, c]:
                hit = i
                break
        if hit is None:
            continue
        if hit != r:
            mat[[r, hit]] = mat[[hit, r]]
        mat[r] = (mat[r] * pow(int(mat[r, c]), -1, q)) % q
        col = mat[:, c].copy()
        col[r] = 0
        if col.any():
            mat = (mat - np.outer(col, mat[r])) % q
        pivots.append(c)
        r += 1
    return mat, pivots


def rank_fq(mat, q: int) -> int:
    arr = _as_matrix(mat)
    if arr.size == 0:
        return 0
    return len(_rref_fq(arr, q)[1])


class LinearSolution:
    """Result of solve_fq: a particular solution (or None when the system
    is inconsistent) and a basis of the homogeneous kernel."""

    __slots__ = ("solution", "kernel")

    def __init__(self, solution, kernel):
        self.solution = solution
        self.kernel = kernel

    @property
    def consistent(self) -> bool:
        return self.solution is not None


def solve_fq(A, b, q: int) -> LinearSolution:
    """Solve A x = b over F_q.  Kernel vectors are produced by giving each
    free column, in ascending order, the value 1."""
    A = _as_matrix(A)
    b = np.array(b, dtype=np.int64) % q
    if b.ndim != 1 or b.shape[0] != A.shape[0]:
        raise DimensionMismatch("right-hand side length does not match")
    rows, cols = A.shape
    aug = np.concatenate([A % q, b.reshape(-1, 1)], axis=1)
    rref, pivots = _rref_fq(aug, q)
    piv_cols = [c for c in pivots if c < cols]
    inconsistent = any(c == cols for c in pivots)
    solution = None
    if not inconsistent:
        solution = np.zeros(cols, dtype=np.int64)
        for r_idx, c in enumerate(piv_cols):
            solution[c] = rref[r_idx, cols]
    free = [c for c in range(cols) if c not in piv_cols]
    kernel = []
    for f in free:
        vec = np.zeros(cols, dtype=np.int64)
        vec[f] = 1
        for r_idx, c in enumerate(piv_cols):
            vec[c] = (-rref[r_idx, f]) % q
        kernel.append(vec)
    return LinearSolution(solution, kernel)


def kernel_fq(A, q: int) -> list:
    A = _as_matrix(A)
    return solve_fq(A, np.zeros(A.shape[0], dtype=np.int64), q).kernel


# ---------------------------------------------------------------------------
# Linear algebra over F_{q^m} itself (lists of element ints).


def _rref_ext(field: ExtField, mat: list[list[int]]):
    mat = [list(row) for row in mat]
    if not mat:
        return mat, []
    rows, cols = len(mat), len(mat[0])
    mul, sub, inv = field.mul, field.sub, field.inv
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = None
        for i in range(r, rows):
            if mat[i][c]:
                hit = i
                break
        if hit is None:
            continue
        if hit != r:
            mat[r], mat[hit] = mat[hit], mat[r]
        scale = inv(mat[r][c])
        mat[r] = [mul(scale, x) for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                row_i, row_r = mat[i], mat[r]
                mat[i] = [sub(row_i[j], mul(f, row_r[j])) for j in range(cols)]
        pivots.append(c)
        r += 1
    return mat, pivots


def kernel_ext(field: ExtField, mat) -> list[tuple[int, ...]]:
    """Kernel basis of a matrix over F_{q^m}, free columns ascending."""
    mat = [list(row) for row in mat]
    if not mat:
        return []
    cols = len(mat[0])
    rref, pivots = _rref_ext(field, mat)
    free = [c for c in range(cols) if c not in pivots]
    out = []
    neg = field.neg
    for f in free:
        vec = [0] * cols
        vec[f] = 1
        for r_idx, c in enumerate(pivots):
            vec[c] = neg(rref[r_idx][f])
        out.append(tuple(vec))
    return out


def solve_ext(field: ExtField, mat, rhs):
    """One solution of a square-or-rectangular system over F_{q^m}, or None."""
    mat = [list(row) for row in mat]
    rows = len(mat)
    if rows != len(rhs):
        raise DimensionMismatch("right-hand side length does not match")
    cols = len(mat[0]) if rows else 0
    aug = [mat[i] + [rhs[i]] for i in range(rows)]
    rref, pivots = _rref_ext(field, aug)
    if any(c == cols for c in pivots):
        return None
    solution = [0] * cols
    for r_idx, c in enumerate(pivots):
        solution[c] = rref[r_idx][cols]
    return tuple(solution)


# ---------------------------------------------------------------------------
# Rank-metric helpers.


def element_rank(field: ExtField, elems) -> int:
    """Dimension of the F_q-span of the given field elements."""
    elems = list(elems)
    if not elems:
        return 0
    if field.q == 2:
        # over F_2 the int value is the digit column; reduce by xor
        basis: list[int] = []
        for v in elems:
            for b in basis:
                if (v ^ b) < v:
                    v ^= b
            if v:
                basis.append(v)
                basis.sort(reverse=True)
        return len(basis)
    return rank_fq(field.vec_to_mat(elems), field.q)


def is_independent(field: ExtField, elems) -> bool:
    elems = list(elems)
    return element_rank(field, elems) == len(elems)


def rank_distance(field: ExtField, x, y) -> int:
    """Rank over F_q of the coordinate matrix of x - y."""
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise LengthMismatch("vectors differ in length")
    diff = [field.sub(a, b) for a, b in zip(x, y)]
    return element_rank(field, diff)


def find_normal_element(field: ExtField) -> int:
    """Smallest element whose Frobenius orbit is a basis of F_{q^m}."""
    if field._normal is None:
        for a in field.elements():
            orbit = []
            b = a
            for _ in range(field.m):
                orbit.append(b)
                b = field.frobenius(b)
            if element_rank(field, orbit) == field.m:
                field._normal = a
                break
    return field._normal


# ---------------------------------------------------------------------------
# Canonical matrix serialization: rows and cols as 4-byte little-endian
# counts, then row-major digit bytes.


def mat_to_bytes(mat) -> bytes:
    arr = np.asarray(mat, dtype=np.uint8)
    if arr.ndim != 2:
        raise DimensionMismatch("expected a 2-d matrix")
    rows, cols = arr.shape
    return (
        rows.to_bytes(4, "little")
        + cols.to_bytes(4, "little")
        + arr.tobytes(order="C")
    )


def mat_from_bytes(data: bytes) -> np.ndarray:
    if len(data) < 8:
        raise LengthMismatch("matrix blob shorter than its header")
    rows = int.from_bytes(data[:4], "little")
    cols = int.from_bytes(data[4:8], "little")
    body = data[8:]
    if len(body) != rows * cols:
        raise LengthMismatch("matrix blob length does not match header")
    return np.frombuffer(body, dtype=np.uint8).reshape(rows, cols).copy()


def modulus_string(field: ExtField) -> str:
    """Human-readable form of the reduction modulus, highest degree first."""
    terms = []
    for i in range(field.m, -1, -1):
        c = field.modulus[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
    return " + ".join(terms) if terms else "0"
