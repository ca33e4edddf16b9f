"""Carlitz module arithmetic and genus numerology of cyclotomic function fields.

Additive polynomials rho_f(u) = sum_i c_i(x) u^{q^i} are stored as lists of
coefficients c_i, each a polynomial in x over F_q given as a tuple of
element codes (constant term first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .divisors import NonIntegralGenus
from .field import FieldSpec, GF, prime_power

Poly = tuple[int, ...]


def _trim(a) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(F: FieldSpec, a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(F.add(s, t) for s, t in zip(a, b))


def pmul(F: FieldSpec, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, s in enumerate(a):
        if s:
            for j, t in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(s, t))
    return _trim(out)


def pscale(F: FieldSpec, c: int, a: Poly) -> Poly:
    return _trim(F.mul(c, t) for t in a)


def frob_x(F: FieldSpec, a: Poly, k: int) -> Poly:
    """a(x)^{q^k} = a^{(k)}(x^{q^k}), where a^{(k)} raises each coefficient to q^k."""
    if not a:
        return ()
    step = F.order**k
    out = [0] * ((len(a) - 1) * step + 1)
    for i, c in enumerate(a):
        out[i * step] = F.pow(c, step)
    return _trim(out)


@dataclass(frozen=True)
class CarlitzPoly:
    q: int
    coeffs: tuple[Poly, ...]

    @property
    def field(self) -> FieldSpec:
        return GF(self.q)

    @property
    def u_degree(self) -> int:
        return self.q ** (len(self.coeffs) - 1) if self.coeffs else 0

    def __add__(self, other: "CarlitzPoly") -> "CarlitzPoly":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [()] * (n - len(self.coeffs))
        b = list(other.coeffs) + [()] * (n - len(other.coeffs))
        return _carlitz(self.q, [padd(F, s, t) for s, t in zip(a, b)])

    def compose(self, other: "CarlitzPoly") -> "CarlitzPoly":
        """self(other(u)) = sum_{i,j} a_i b_j^{q^i} u^{q^{i+j}}."""
        F = self.field
        out: list[Poly] = [()] * max(0, len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = padd(F, out[i + j], pmul(F, a, frob_x(F, b, i)))
        return _carlitz(self.q, out)

    def scale(self, c: Poly) -> "CarlitzPoly":
        F = self.field
        return _carlitz(self.q, [pmul(F, c, a) for a in self.coeffs])

    def __str__(self) -> str:
        F = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cx = " + ".join(
                (F.pretty(v) if k == 0 else (("" if v == 1 else F.pretty(v) + "*") + ("x" if k == 1 else f"x^{k}")))
                for k, v in enumerate(c)
                if v
            )
            u = "u" if i == 0 else f"u^{self.q ** i}"
            terms.append(u if cx == "1" else f"({cx})*{u}")
        return " + ".join(terms) or "0"


def _carlitz(q: int, coeffs) -> CarlitzPoly:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return CarlitzPoly(q, tuple(tuple(c) for c in coeffs))


def carlitz_x(q: int) -> CarlitzPoly:
    """rho_x(u) = u^q + x u."""
    return CarlitzPoly(q, ((0, 1), (1,)))


def carlitz_poly(q: int, f) -> CarlitzPoly:
    """rho_f for f in F_q[x] (coefficient codes, constant first), by Horner in rho_x."""
    F = GF(q)
    f = _trim(f)
    rx = carlitz_x(q)
    acc = CarlitzPoly(q, ())
    for c in reversed(f):
        acc = rx.compose(acc) + CarlitzPoly(q, ((c,),) if c else ())
    return acc if f else CarlitzPoly(q, ())


def binomial_support(p: int, i: int, n: int) -> list[int]:
    """j in [0, min(i, n-1)] with C(i, j) nonzero mod p."""
    return [j for j in range(min(i, n - 1) + 1) if comb(i, j) % p]


def carlitz_identity_check(q: int, i: int, n: int) -> bool:
    """rho_{(x+1)^i} = sum_j C(i,j) rho_{x^j}, checked coefficientwise.

    Terms with j >= n are dropped on the right and on the left they must
    come from x^n-multiples, which annihilate x^n-torsion.  We compare
    after reducing the polynomial (x+1)^i modulo x^n.
    """
    F = GF(q)
    p = F.p
    lhs_poly = (1,)
    for _ in range(i):
        lhs_poly = pmul(F, lhs_poly, (1, 1))
    truncated = _trim(lhs_poly[:n])
    lhs = carlitz_poly(q, truncated)
    rhs = CarlitzPoly(q, ())
    for j in binomial_support(p, i, n):
        c = comb(i, j) % p
        rhs = rhs + carlitz_poly(q, (0,) * j + (c,))
    full = carlitz_poly(q, lhs_poly)
    untruncated = CarlitzPoly(q, ())
    for j in range(i + 1):
        if comb(i, j) % p:
            untruncated = untruncated + carlitz_poly(q, (0,) * j + (comb(i, j) % p,))
    return lhs == rhs and full == untruncated


def _lucas_nonzero(p: int, i: int, j: int) -> bool:
    while i or j:
        if j % p > i % p:
            return False
        i //= p
        j //= p
    return True


def e_sequence(p: int, count: int, n: int) -> list[int]:
    """e_1..e_count with e_i the least j in [1, min(i, n-1)] such that p does not divide C(i, j)."""
    out = []
    for i in range(1, count + 1):
        hi = min(i, n - 1)
        e = next((j for j in range(1, hi + 1) if _lucas_nonzero(p, i, j)), None)
        if e is None:
            raise ValueError(f"no admissible j for i={i}, n={n}")
        out.append(e)
    return out


def log_ceil(q: int, n: int) -> int:
    """Least m with q^m >= n."""
    m, t = 0, 1
    while t < n:
        t *= q
        m += 1
    return m


def genus_Kn(q: int, n: int, force: bool = False) -> int:
    """Genus of K_n from 2g - 2 = q^{-m}(q^{n-1}(n(q-1) - q - 1) - sum q^{e_i})."""
    if q not in (2, 3) and not force:
        raise ValueError("the containment hypothesis behind this formula is only known for q in {2, 3}")
    if n < 2:
        raise ValueError("n must be >= 2")
    p, _ = prime_power(q)
    m = log_ceil(q, n)
    s = sum(q**e for e in e_sequence(p, q**m - 1, n))
    num = q ** (n - 1) * (n * (q - 1) - q - 1) - s
    den = q**m
    if num % den or (num // den) % 2:
        raise NonIntegralGenus(f"2g - 2 = {num}/{den} is not an even integer")
    g = (num // den) // 2 + 1
    if g < 0:
        raise NonIntegralGenus(f"negative genus {g}")
    return g


@dataclass
class CyclotomicParams:
    q: int
    n: int
    m: int
    e: list[int]
    genus: int
    length: int
    dimension: int
    D: str
    G: str
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "m": self.m,
            "e": self.e,
            "q_pow_e": [self.q**v for v in self.e],
            "genus": self.genus,
            "length": self.length,
            "dimension": self.dimension,
            "D": self.D,
            "G": self.G,
            "notes": self.notes,
        }


def cyclotomic_code_params(q: int, n: int) -> CyclotomicParams:
    """Length and dimension of the binary or ternary lifted cyclotomic code on K_n."""
    m = log_ceil(q, n)
    e = e_sequence(q, q**m - 1, n)
    g = genus_Kn(q, n)
    if q == 2:
        length, dim = 2 ** (n - m), 2 ** (n - m - 1)
        D, G = "P_{x+1} + P_inf", "P_{x^2+x+1} - 2 P_x"
    elif q == 3:
        if n - m - 1 < 0:
            raise ValueError("ternary construction needs n >= m + 1")
        length, dim = 4 * 3 ** (n - m - 1), 2 * 3 ** (n - m - 1)
        D, G = "Q1_{x-2} + Q2_{x-2}", "Q_x - Q_inf"
    else:
        raise ValueError("only q in {2, 3}")
    notes = {
        "sum_q_pow_e": sum(q**v for v in e),
        "two_g_minus_two": 2 * g - 2,
        "n(q-1)-q-1": n * (q - 1) - q - 1,
    }
    return CyclotomicParams(q, n, m, e, g, length, dim, D, G, notes)
