"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored as rational coefficient vectors over the power basis
1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
Reducing modulo z^N - 1 instead would introduce zero divisors and break
exact zero tests such as (3)_{z3} = 0.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


class CyclotomicError(ValueError):
    pass


def _poly_divexact(num, den):
    # integer polynomials, lowest degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise CyclotomicError("order must be positive, got %r" % (n,))
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


@lru_cache(maxsize=None)
def euler_phi(n):
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n):
    """Reduced coefficient vectors of z^k for 0 <= k < 2*phi(n)."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(2 * phi + 1):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _zeta_power_ints(n, e):
    e %= n
    table = _power_table(n)
    phi = euler_phi(n)
    if e < len(table):
        return table[e]
    # square-and-multiply on integer vectors
    acc = table[0]
    base = table[1]
    while e:
        if e & 1:
            acc = _mul_ints(n, acc, base)
        base = _mul_ints(n, base, base)
        e >>= 1
    assert len(acc) == phi
    return acc


def _mul_ints(n, a, b):
    phi = len(a)
    prod = [0] * (2 * phi - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    return _reduce(n, prod)


def _reduce(n, prod):
    phi = euler_phi(n)
    table = _power_table(n)
    out = list(prod[:phi]) + [0] * max(0, phi - len(prod))
    for k in range(phi, len(prod)):
        c = prod[k]
        if c:
            row = table[k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


class CycNum:
    """An element of Q(zeta_N); immutable and hashable."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs):
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise CyclotomicError(
                "expected %d coefficients for order %d, got %d" % (phi, order, len(coeffs)))
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zeta(cls, order, e=1):
        return cls._raw(order, tuple(Fraction(c) for c in _zeta_power_ints(order, e)))

    @classmethod
    def rational(cls, order, value):
        phi = euler_phi(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def one(cls, order):
        return cls.rational(order, 1)

    @classmethod
    def zero(cls, order):
        return cls.rational(order, 0)

    # predicates

    def is_zero(self):
        return not any(self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    # arithmetic

    def _check(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise CyclotomicError(
                    "order mismatch: %d vs %d (embed first)" % (self.order, other.order))
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycNum._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not any(b[1:]):
            c = b[0]
            return CycNum._raw(self.order, tuple(x * c for x in a))
        if not any(a[1:]):
            c = a[0]
            return CycNum._raw(self.order, tuple(x * c for x in b))
        phi = len(a)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum._raw(self.order, tuple(Fraction(c) for c in _reduce(self.order, prod)))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        a = self.coeffs
        if not any(a[1:]):
            return CycNum._raw(self.order, (1 / a[0],) + a[1:])
        # solve (multiplication-by-self matrix) * y = e_0
        phi = len(a)
        n = self.order
        cols = []
        for k in range(phi):
            basis = [0] * phi
            basis[k] = 1
            cols.append(_reduce_fracs(n, _convolve(a, basis)))
        mat = [[cols[k][r] for k in range(phi)] + [Fraction(int(r == 0))] for r in range(phi)]
        sol = _solve_dense(mat, phi)
        return CycNum._raw(n, tuple(sol))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        acc = CycNum.one(self.order)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # comparison

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.order, self.coeffs))
        return self._hash

    # presentation

    def root_exponent(self):
        """Return e with self == z^e, or None if self is not a power of zeta_N."""
        return _root_lookup(self.order).get(self.coeffs)

    def signed_root_exponent(self):
        """Return (sign, e) with self == sign * z^e, or None."""
        e = self.root_exponent()
        if e is not None:
            return (1, e)
        e = (-self).root_exponent()
        if e is not None:
            return (-1, e)
        return None

    def pretty(self):
        n = self.order
        sr = self.signed_root_exponent()
        if sr is not None:
            sign, e = sr
            if e == 0:
                body = "1"
            elif e == 1:
                body = "z%d" % n
            else:
                body = "z%d^%d" % (n, e)
            return body if sign > 0 else "-" + body
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z%d" % n if k == 1 else "z%d^%d" % (n, k))
            if k == 0:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = "%s*%s" % (c, mono)
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def sort_key(self):
        """Canonical ordering key: roots of unity by exponent first."""
        sr = self.signed_root_exponent()
        if sr is not None and sr[0] > 0:
            return (0, sr[1], ())
        if sr is not None:
            return (1, sr[1], ())
        return (2, 0, self.coeffs)

    def to_complex(self):
        import cmath
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return "CycNum(%d, %s)" % (self.order, self.pretty())

    __str__ = pretty


def _convolve(a, b):
    prod = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    return prod


def _reduce_fracs(n, prod):
    return tuple(Fraction(c) for c in _reduce(n, prod))


def _solve_dense(mat, ncols):
    rows = len(mat)
    r = 0
    piv = []
    for c in range(ncols):
        p = next((i for i in range(r, rows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv.append(c)
        r += 1
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv):
        sol[c] = mat[i][ncols]
    return sol


@lru_cache(maxsize=None)
def _root_lookup(n):
    out = {}
    for e in range(n):
        key = tuple(Fraction(c) for c in _zeta_power_ints(n, e))
        out.setdefault(key, e)
    return out


def zeta(order, e=1):
    """z_N^e as a CycNum."""
    return CycNum.zeta(order, e)


def embed(x, M):
    """Image of x in Q(zeta_M) under zeta_N -> zeta_M^(M/N)."""
    n = x.order
    if M % n != 0:
        raise CyclotomicError("cannot embed order %d into order %d: %d does not divide %d"
                              % (n, M, n, M))
    step = M // n
    acc = [Fraction(0)] * euler_phi(M)
    for k, c in enumerate(x.coeffs):
        if c:
            row = _zeta_power_ints(M, k * step)
            for j, v in enumerate(row):
                if v:
                    acc[j] += c * v
    return CycNum._raw(M, tuple(acc))


def restrict(x, n):
    """Inverse of embed: express x (order M) as an element of Q(zeta_n).

    Raises CyclotomicError if x does not lie in the subfield.
    """
    M = x.order
    if M % n != 0:
        raise CyclotomicError("order %d does not divide %d" % (n, M))
    phi_n = euler_phi(n)
    phi_m = euler_phi(M)
    step = M // n
    cols = [_zeta_power_ints(M, k * step) for k in range(phi_n)]
    mat = [[Fraction(cols[k][r]) for k in range(phi_n)] + [x.coeffs[r]] for r in range(phi_m)]
    sol = _solve_dense(mat, phi_n)
    back = embed(CycNum._raw(n, tuple(sol)), M)
    if back != x:
        raise CyclotomicError("%s is not in Q(zeta_%d)" % (x.pretty(), n))
    return CycNum._raw(n, tuple(sol))


def common_order(*orders):
    out = 1
    for o in orders:
        out = out * o // gcd(out, o)
    return out


# q-combinatorics

class QPoly:
    """Integer polynomial in t, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    def shift(self, k):
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return QPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def __call__(self, q):
        """Horner evaluation at a CycNum, int or Fraction."""
        if isinstance(q, CycNum):
            acc = CycNum.zero(q.order)
        else:
            acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "QPoly(%r)" % (list(self.coeffs),)


def q_int_poly(n):
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_binom_poly(n, k):
    """binom(n, k)_t built by the Pascal recurrence; zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return QPoly([])
    if k == 0 or k == n:
        return QPoly([1])
    # binom(n,k) = binom(n-1,k-1) + t^k binom(n-1,k)
    return q_binom_poly(n - 1, k - 1) + q_binom_poly(n - 1, k).shift(k)


def q_factorial_poly(n):
    acc = QPoly([1])
    for i in range(1, n + 1):
        acc = acc * q_int_poly(i)
    return acc


def q_int(n, q):
    return q_int_poly(n)(q)


def q_factorial(n, q):
    return q_factorial_poly(n)(q)


def q_binom(n, k, q):
    return q_binom_poly(n, k)(q)


def multiplicative_order(q):
    """Order of q in the unit group, or None if q is not a root of unity."""
    if q.is_zero():
        raise CyclotomicError("zero has no multiplicative order")
    # roots of unity in Q(zeta_N) have order dividing lcm(2, N)
    limit = common_order(2, q.order)
    acc = q
    for k in range(1, limit + 1):
        if acc.is_one():
            return k
        acc = acc * q
    return None


def label_bound(q):
    """min{m >= 0 : (m+1)_q = 0}, or None when no such m exists."""
    if q.is_zero():
        raise CyclotomicError("label must be nonzero")
    if q.is_one():
        return None
    o = multiplicative_order(q)
    return None if o is None else o - 1
