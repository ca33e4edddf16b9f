"""Finite fields F_{p^m} with integer-coded elements.

An element is the integer ``sum(c_i * p**i)`` of its coefficient vector
``(c_0, ..., c_{m-1})`` in the polynomial basis ``1, t, ..., t^{m-1}``.
Code 0 is zero and code 1 is one.  Subfields are never materialised:
an element of F_{p^m} lies in the subfield of order p^s iff a^{p^s} == a.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    """Base class for field construction and arithmetic errors."""


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class NotASubfield(FieldError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(order: int) -> tuple[int, int]:
    """Split ``order`` as ``(p, m)`` with ``order == p**m``."""
    for p in range(2, order + 1):
        if order % p == 0:
            m, rest = 0, order
            while rest % p == 0:
                rest //= p
                m += 1
            if rest != 1 or not is_prime(p):
                raise NotPrime(f"{order} is not a prime power")
            return p, m
    raise NotPrime(f"{order} is not a prime power")


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as little-endian coefficient lists -----------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _poly_trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree m under the encoding sum c_i p^i."""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        cand = low + [1]
        if low[0] != 0 and is_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible of degree {m} over F_{p}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^m} = F_p[t]/(modulus).

    Build instances with :func:`make_field`; the constructor trusts its
    arguments.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    _exp: np.ndarray | None = dc_field(default=None, compare=False, repr=False)
    _log: np.ndarray | None = dc_field(default=None, compare=False, repr=False)
    _zech: np.ndarray | None = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.order <= TABLE_LIMIT:
            exp, log = self._build_tables()
            object.__setattr__(self, "_exp", exp)
            object.__setattr__(self, "_log", log)

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def char(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    # -- scalar arithmetic on codes ------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**i) % p for i in range(self.m)]

    def from_digits(self, ds: Iterable[int]) -> int:
        return sum((d % self.p) * self.p**i for i, d in enumerate(ds))

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, pw = self.p, 0, 1
        for _ in range(self.m):
            out += ((a % p + b % p) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, pw = self.p, 0, 1
        for _ in range(self.m):
            out += ((-(a % p)) % p) * pw
            a //= p
            pw *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _polymul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            prod = 0
            while b:
                if b & 1:
                    prod ^= a
                a <<= 1
                b >>= 1
            mod = sum(c << i for i, c in enumerate(self.modulus))
            for deg in range(prod.bit_length() - 1, m - 1, -1):
                if prod >> deg & 1:
                    prod ^= mod << (deg - m)
            return prod
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_poly_mod(prod, self.modulus, p))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return self._polymul(a, b)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if e == 0 else 0
        n = self.order - 1
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) * e) % n])
        e %= n
        out, base = 1, a
        while e:
            if e & 1:
                out = self._polymul(out, base)
            base = self._polymul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self.pow(a, -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, s: int = 1) -> int:
        return self.pow(a, self.p**s)

    def prime_subfield(self, c: int) -> int:
        """Code of the integer c viewed in F_p."""
        return c % self.p

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def pretty(self, a: int, var: str = "a") -> str:
        """Polynomial string such as ``a^2+a+1``."""
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if not c:
                continue
            mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if c == 1:
                terms.append(mono)
            elif i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}{mono}")
        return "+".join(terms) if terms else "0"

    # -- vectorised arithmetic on integer arrays -----------------------------

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        zech = self._zech_table()
        if zech is not None:
            # a + b = a (1 + b/a), with Zech logs for 1 + g^k
            la, lb = self._log[a], self._log[b]
            z = zech[(lb - la) % (self.order - 1)]
            out = np.where(z < 0, 0, self._exp[la + np.maximum(z, 0)])
            out = np.where(a == 0, b, np.where(b == 0, a, out))
            return out
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.m):
            out += ((a // pw % p + b // pw % p) % p) * pw
            pw *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self._log is not None:
            half = (self.order - 1) // 2  # -1 = g^half
            return np.where(a == 0, 0, self._exp[self._log[a] + half])
        p = self.p
        out = np.zeros_like(a)
        pw = 1
        for _ in range(self.m):
            out += ((-(a // pw % p)) % p) * pw
            pw *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._log is None:
            fn = np.vectorize(self.mul, otypes=[np.int64])
            return fn(a, b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._log is None:
            fn = np.vectorize(lambda x: self.pow(x, e), otypes=[np.int64])
            return fn(a)
        if e == 0:
            return np.ones_like(a)
        if e < 0 and np.any(a == 0):
            raise DivisionByZero("0 has no inverse")
        n = self.order - 1
        out = self._exp[(self._log[a] * e) % n]
        return np.where(a == 0, 0, out)

    def vinv(self, a) -> np.ndarray:
        return self.vpow(a, -1)

    # -- internals -----------------------------------------------------------

    def _zech_table(self) -> np.ndarray | None:
        """zech[k] = log(1 + g^k), or -1 where 1 + g^k = 0 (odd p only)."""
        if self._log is None:
            return None
        if self._zech is None:
            n = self.order - 1
            zech = np.empty(n, dtype=np.int64)
            for k in range(n):
                s = self.add(1, int(self._exp[k]))
                zech[k] = -1 if s == 0 else self._log[s]
            object.__setattr__(self, "_zech", zech)
        return self._zech

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        n = self.order - 1
        if n == 1:
            exp = np.ones(4, dtype=np.int64)
            log = np.zeros(2, dtype=np.int64)
            return exp, log
        factors = _prime_factors(n)
        for g in range(2, self.order):
            if all(self._slowpow(g, n // r) != 1 for r in factors):
                break
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(self.order, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._polymul(x, g)
        exp[n:] = exp[:n]
        return exp, log

    def _slowpow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._polymul(out, a)
            a = self._polymul(a, a)
            e >>= 1
        return out

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


@lru_cache(maxsize=None)
def _make_field_cached(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if modulus is None:
        modulus = default_modulus(p, m)
    else:
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree m")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over F_{p}")
    return FieldSpec(p, m, tuple(modulus))


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated F_{p^m}; the default modulus is the least irreducible one."""
    return _make_field_cached(p, m, None if modulus is None else tuple(modulus))


def GF(order: int) -> FieldSpec:
    p, m = prime_power(order)
    return make_field(p, m)


def field_from_dict(d: dict) -> FieldSpec:
    return make_field(int(d["p"]), int(d["m"]), d.get("modulus"))


def _check_subfield(F: FieldSpec, suborder: int) -> int:
    p, s = prime_power(suborder)
    if p != F.p or F.m % s:
        raise NotASubfield(f"F_{suborder} is not a subfield of {F!r}")
    return s


def in_subfield(F: FieldSpec, a: int, suborder: int) -> bool:
    _check_subfield(F, suborder)
    return F.pow(a, suborder) == a


def rel_trace(F: FieldSpec, a: int, suborder: int) -> int:
    """Trace of a from F down to its subfield of order ``suborder``."""
    s = _check_subfield(F, suborder)
    out, cur = 0, a
    for _ in range(F.m // s):
        out = F.add(out, cur)
        cur = F.pow(cur, suborder)
    return out


def vrel_trace(F: FieldSpec, a, suborder: int) -> np.ndarray:
    s = _check_subfield(F, suborder)
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros_like(a)
    cur = a
    for _ in range(F.m // s):
        out = F.vadd(out, cur)
        cur = F.vpow(cur, suborder)
    return out


@lru_cache(maxsize=64)
def _additive_fibres(F: FieldSpec, qprime: int, mu: int) -> dict[int, tuple[int, ...]]:
    T = np.arange(F.order, dtype=np.int64)
    vals = F.vadd(F.vpow(T, qprime), F.vmul(T, mu))
    order = np.argsort(vals, kind="stable")
    svals = vals[order]
    cuts = np.flatnonzero(np.diff(svals)) + 1
    fibres = {}
    for chunk in np.split(order, cuts):
        fibres[int(vals[chunk[0]])] = tuple(int(t) for t in np.sort(chunk))
    return fibres


def additive_roots(F: FieldSpec, qprime: int, mu: int, c: int) -> list[int]:
    """All roots in F of T^{qprime} + mu*T = c, ascending by code.

    Found by scanning the whole field once per (qprime, mu); the scan is
    cached so repeated right-hand sides are dictionary lookups.
    """
    if mu == 0:
        raise FieldError("mu must be nonzero")
    pq, _ = prime_power(qprime)
    if pq != F.p or qprime > F.order:
        raise FieldError(f"{qprime} is not a power of {F.p} within {F!r}")
    return list(_additive_fibres(F, qprime, mu).get(c, ()))


@dataclass(frozen=True)
class Felt:
    """A field element bound to its field; thin operator wrapper over codes."""

    field: FieldSpec
    code: int

    def _other(self, other: "Felt | int") -> int:
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.code
        return self.field.prime_subfield(int(other))

    def __add__(self, other):
        return Felt(self.field, self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Felt(self.field, self.field.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return Felt(self.field, self.field.sub(self._other(other), self.code))

    def __mul__(self, other):
        return Felt(self.field, self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Felt(self.field, self.field.div(self.code, self._other(other)))

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return Felt(self.field, self.field.pow(self.code, e))

    def inv(self) -> "Felt":
        return Felt(self.field, self.field.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"Felt({self.field.pretty(self.code)})"
