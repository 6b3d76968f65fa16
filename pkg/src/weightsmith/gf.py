"""Exact arithmetic in finite fields F_{p^k}.

Elements of F_{p^k} = F_p[x]/(f) are encoded as integers ``c_0 + c_1 p + ...
+ c_{k-1} p^{k-1}`` where ``c_0 + c_1 x + ...`` is the reduced representative.
The modulus ``f`` is the smallest monic irreducible polynomial of degree ``k``
under the same integer encoding of its lower coefficients, so every field
context is reproducible from ``(p, k)`` alone.

Scalar work goes through :class:`FieldElem`; bulk work (matrices, torus
enumeration) uses the vectorised methods of :class:`FieldCtx`, which act on
numpy arrays of codes.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

MAX_FIELD_SIZE = 1 << 20


class FieldError(ValueError):
    """Raised for unsupported fields or mixed-context arithmetic."""


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
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


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return prime_factors(n) == [n]


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q = p**k``; raise if ``q`` is not a prime power."""
    fs = prime_factors(q) if q > 1 else []
    if len(fs) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = fs[0]
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


# ----------------------------------------------------------------------------
# polynomials over F_p as coefficient lists, lowest degree first
# ----------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_powmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic ``f`` over F_p."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]

    def x_pow_minus_x(e: int) -> list[int]:
        r = _poly_powmod(x, p ** e, f, p)
        r = r + [0] * (2 - len(r))
        r[1] = (r[1] - 1) % p
        return _trim(r)

    if x_pow_minus_x(k):
        return False
    for r in prime_factors(k):
        g = _poly_gcd(list(f), x_pow_minus_x(k // r), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``k`` over F_p, lowest coefficient first."""
    for code in range(p ** k):
        lower = [(code // p ** i) % p for i in range(k)]
        f = lower + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


# ----------------------------------------------------------------------------
# field contexts
# ----------------------------------------------------------------------------

class FieldCtx:
    """The field F_{p^k} with its deterministic modulus and log tables."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be positive")
        if p ** k > MAX_FIELD_SIZE:
            raise FieldError(f"F_{p}^{k} exceeds the supported size bound 2^20")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = smallest_irreducible(p, k) if k > 1 else (0, 1)
        self._powers = np.array([p ** i for i in range(k)], dtype=np.int64)
        self._build_tables()

    # -- construction ------------------------------------------------------
    def _slow_mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = _poly_mod(_poly_mul(da, db, self.p), self.modulus, self.p)
        return self.from_digits(prod)

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        factors = prime_factors(order) if order > 1 else []
        gen = None
        for cand in range(1, q):
            ok = True
            for r in factors:
                if self._slow_pow(cand, order // r) == 1:
                    ok = False
                    break
            if ok:
                gen = cand
                break
        assert gen is not None
        self.generator = gen
        # exp[i] = g^i, log[exp[i]] = i; exp padded to length 2*order for sums
        exp = np.zeros(max(2 * order, 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        if self.k == 1:
            x = 1
            for i in range(order):
                exp[i] = x
                log[x] = i
                x = x * gen % self.p
        else:
            # multiplication by gen as an F_p-linear map on digit vectors
            cols = [self.digits(self._slow_mul(self.from_digits([0] * i + [1]), gen)) for i in range(self.k)]
            mat = np.array([c + [0] * (self.k - len(c)) for c in cols], dtype=np.int64).T
            v = np.zeros(self.k, dtype=np.int64)
            v[0] = 1
            for i in range(order):
                code = int(v @ self._powers)
                exp[i] = code
                log[code] = i
                v = mat @ v % self.p
        if order:
            exp[order:2 * order] = exp[:order]
        self._exp = exp
        self._log = log
        digits = np.zeros((q, self.k), dtype=np.int64)
        rest = np.arange(q, dtype=np.int64)
        for i in range(self.k):
            digits[:, i] = rest % self.p
            rest //= self.p
        self._digit_table = digits

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    # -- encoding ----------------------------------------------------------
    def digits(self, code: int) -> list[int]:
        return [(code // self.p ** i) % self.p for i in range(self.k)]

    def from_digits(self, digs: Iterable[int]) -> int:
        return sum((int(d) % self.p) * self.p ** i for i, d in enumerate(digs))

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, k={self.k})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    # -- scalar arithmetic on codes ---------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.from_digits(-x for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def frobenius(self, a: int, e: int = 1) -> int:
        return self.pow(a, self.p ** (e % self.k))

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        return n // gcd(n, int(self._log[a]))

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field, as a code."""
        return n % self.p

    def exp(self, i: int) -> int:
        """``g^i`` for the fixed primitive element ``g``."""
        return int(self._exp[i % (self.q - 1)])

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of zero")
        return int(self._log[a])

    # -- vectorised arithmetic --------------------------------------------
    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        d = (self._digit_table[a] + self._digit_table[b]) % self.p
        return d @ self._powers

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        return ((-self._digit_table[a]) % self.p) @ self._powers

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return a * b % self.p
        la, lb = self._log[a], self._log[b]
        zero = (la < 0) | (lb < 0)
        out = self._exp[np.where(zero, 0, la + lb)]
        return np.where(zero, 0, out)

    def vpow(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        la = self._log[a]
        zero = la < 0
        if e < 0 and zero.any():
            raise ZeroDivisionError("negative power of zero")
        out = self._exp[np.where(zero, 0, la * e % (self.q - 1))]
        return np.where(zero, 0 if e != 0 else 1, out)

    def to_coeffs(self, a: np.ndarray) -> np.ndarray:
        """Digit planes: array of shape ``(k,) + a.shape``."""
        return np.moveaxis(self._digit_table[np.asarray(a, dtype=np.int64)], -1, 0)

    def from_coeffs(self, c: np.ndarray) -> np.ndarray:
        return np.tensordot(self._powers, c % self.p, axes=(0, 0))

    @property
    def _reduction(self) -> np.ndarray:
        return _reduction_table(self.p, self.modulus)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Product of (batched) matrices of codes."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return _exact_matmul(a, b) % self.p
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        k = self.k
        shape = np.broadcast_shapes(a.shape[:-1] + (1,), b.shape[:-2] + (1, b.shape[-1]))
        conv = np.zeros((2 * k - 1,) + shape, dtype=np.int64)
        for i in range(k):
            for j in range(k):
                conv[i + j] += _exact_matmul(ca[i], cb[j])
        conv %= self.p
        red = self._reduction  # (2k-1, k): x^m mod f
        out = np.tensordot(red.T, conv, axes=(1, 0)) % self.p
        return self.from_coeffs(out)

    def matpow(self, a: np.ndarray, e: int) -> np.ndarray:
        n = a.shape[-1]
        result = np.broadcast_to(np.eye(n, dtype=np.int64), a.shape).copy()
        base = np.asarray(a, dtype=np.int64)
        while e:
            if e & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            e >>= 1
        return result

    def matinv(self, a: np.ndarray) -> np.ndarray:
        """Inverse of a single square matrix of codes by Gauss-Jordan."""
        a = np.asarray(a, dtype=np.int64)
        n = a.shape[0]
        m = [[int(x) for x in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                raise FieldError("matrix is singular")
            m[col], m[piv] = m[piv], m[col]
            inv = self.inv(m[col][col])
            m[col] = [self.mul(inv, x) for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    c = m[r][col]
                    m[r] = [self.sub(x, self.mul(c, y)) for x, y in zip(m[r], m[col])]
        return np.array([row[n:] for row in m], dtype=np.int64)

    # -- element-level helpers --------------------------------------------
    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self, code)

    def __call__(self, n: int) -> "FieldElem":
        """Embed an integer through the prime field."""
        return FieldElem(self, self.from_int(n))

    def x(self) -> "FieldElem":
        """The class of the indeterminate ``x`` of a proper extension."""
        if self.k == 1:
            raise FieldError("a prime field has no adjoined root")
        return FieldElem(self, self.from_digits([0, 1]))

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, c) for c in range(self.q)]

    def nonzero(self) -> list["FieldElem"]:
        return [FieldElem(self, c) for c in range(1, self.q)]

    def primitive(self) -> "FieldElem":
        return FieldElem(self, self.generator)

    def roots_of_unity(self, n: int) -> list["FieldElem"]:
        return roots_of_unity(n, self)


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product through float64 BLAS when it is provably exact."""
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * a.shape[-1]
    if bound < (1 << 52):
        return np.rint(np.matmul(a.astype(np.float64), b.astype(np.float64))).astype(np.int64)
    return np.matmul(a, b)


@lru_cache(maxsize=None)
def _reduction_table(p: int, modulus: tuple[int, ...]) -> np.ndarray:
    k = len(modulus) - 1
    rows = []
    for m in range(2 * k - 1):
        r = _poly_mod([0] * m + [1], modulus, p)
        rows.append(r + [0] * (k - len(r)))
    return np.array(rows, dtype=np.int64)


@lru_cache(maxsize=None)
def field(q_or_p: int, k: int | None = None) -> FieldCtx:
    """Cached field context, from ``q`` (a prime power) or from ``(p, k)``."""
    if k is None:
        p, k = prime_power(q_or_p)
    else:
        p = q_or_p
    return FieldCtx(p, k)


class FieldElem:
    """An element of a finite field, tied to its :class:`FieldCtx`."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = int(code)

    def _coerce(self, other: object) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise FieldError("arithmetic between elements of different fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return self.ctx.from_int(int(other))
        raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.code, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.code, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self._coerce(other), self.code))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.code, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.code, self.ctx.inv(self._coerce(other))))

    def __rtruediv__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self._coerce(other), self.ctx.inv(self.code)))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.code, int(e)))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def frobenius(self, e: int = 1) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.frobenius(self.code, e))

    def order(self) -> int:
        return self.ctx.order(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == self.ctx.from_int(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.k, self.code))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        if self.ctx.k == 1:
            return f"{self.code} (mod {self.ctx.p})"
        terms = []
        for i, c in enumerate(self.ctx.digits(self.code)):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}{'' if i == 0 else '*' + mono}")
        return (" + ".join(reversed(terms)) or "0") + f" in F_{self.ctx.q}"


def multiplicative_order(x: FieldElem) -> int:
    return x.order()


def frobenius(x: FieldElem, e: int = 1) -> FieldElem:
    """``x^(p^e)``."""
    return x.frobenius(e)


def roots_of_unity(n: int, ctx: FieldCtx) -> list[FieldElem]:
    """All solutions of ``z^n = 1`` in the field, in increasing log order."""
    if n <= 0:
        raise FieldError("roots of unity need a positive order")
    d = gcd(n, ctx.q - 1)
    step = (ctx.q - 1) // d
    return [FieldElem(ctx, ctx.exp(step * i)) for i in range(d)]


def embedding(small: FieldCtx, big: FieldCtx) -> np.ndarray:
    """Code table of a field embedding ``small -> big``.

    The image of ``x`` is the smallest code in ``big`` that is a root of the
    modulus of ``small``.
    """
    if small.p != big.p or big.k % small.k:
        raise FieldError(f"F_{small.q} does not embed in F_{big.q}")
    if small.k == 1:
        return np.arange(small.q, dtype=np.int64)
    root = None
    for cand in range(big.q):
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, cand), c)
        if acc == 0:
            root = cand
            break
    assert root is not None
    images = np.zeros(small.q, dtype=np.int64)
    for code in range(small.q):
        acc = 0
        for c in reversed(small.digits(code)):
            acc = big.add(big.mul(acc, root), c)
        images[code] = acc
    return images
