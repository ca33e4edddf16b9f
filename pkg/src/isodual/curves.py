"""Concrete curve models: place enumeration, splitting, censuses.

Every model knows its constant field, its genus, the places it uses as
code coordinates and the ramification table of its defining extension.
Splitting is always decided by counting roots over the constant field;
trace criteria are kept only as cross-checks.

Place ordering is ascending by the integer code of x, then of y, then z.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from math import gcd
from typing import Sequence

import numpy as np

from .divisors import Divisor, ExtensionDescriptor, Fiber, Place, riemann_hurwitz
from .field import FieldError, FieldSpec, GF, additive_roots, prime_power, vrel_trace


class CurveError(ValueError):
    pass


def poly_eval(F: FieldSpec, coeffs: Sequence[int], a: int) -> int:
    """Horner evaluation of a little-endian polynomial with code coefficients."""
    out = 0
    for c in reversed(coeffs):
        out = F.add(F.mul(out, a), c)
    return out


def vpoly_eval(F: FieldSpec, coeffs: Sequence[int], a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    out = np.zeros_like(a)
    for c in reversed(coeffs):
        out = F.vadd(F.vmul(out, a), c)
    return out


@lru_cache(maxsize=32)
def _power_fibres(F: FieldSpec, e: int) -> dict[int, tuple[int, ...]]:
    vals = F.vpow(np.arange(F.order), e)
    out: dict[int, list[int]] = {}
    for b, v in enumerate(vals.tolist()):
        out.setdefault(v, []).append(b)
    return {v: tuple(bs) for v, bs in out.items()}


def power_roots(F: FieldSpec, e: int, c: int) -> list[int]:
    """All b in F with b^e == c, ascending."""
    return list(_power_fibres(F, e).get(c, ()))


def evaluate_monomials(F: FieldSpec, exponents: Sequence[Sequence[int]], points) -> np.ndarray:
    """Matrix of monomial values: row i is prod_j coord_j ** exponents[i][j].

    Negative exponents are allowed when the coordinate is nonzero at every
    point; a zero coordinate raised to a negative power raises
    :class:`~isodual.field.DivisionByZero`.
    """
    pts = np.asarray(points, dtype=np.int64)
    if pts.ndim == 1:
        pts = pts[:, None]
    out = np.ones((len(exponents), pts.shape[0]), dtype=np.int64)
    for i, exps in enumerate(exponents):
        row = np.ones(pts.shape[0], dtype=np.int64)
        for j, e in enumerate(exps):
            if e:
                row = F.vmul(row, F.vpow(pts[:, j], e))
        out[i] = row
    return out


@dataclass
class FibreInfo:
    alpha: int | None  # None for the place at infinity
    size: int
    ramification: list[int]
    coords: list[tuple[int, ...]]
    tag: str

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "size": self.size,
            "ramification": self.ramification,
            "coords": [list(c) for c in self.coords],
            "tag": self.tag,
        }


@dataclass
class SplitReport:
    curve: str
    degree: int
    fibres: list[FibreInfo]
    notes: dict = dc_field(default_factory=dict)

    def count(self, tag: str) -> int:
        return sum(1 for f in self.fibres if f.tag == tag)

    @property
    def rational_places(self) -> int:
        return sum(len(f.coords) if f.alpha is not None else 1 for f in self.fibres)

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "degree": self.degree,
            "fibres": [f.to_dict() for f in self.fibres],
            "notes": self.notes,
        }


class RationalLine:
    """The rational function field K(x)."""

    genus = 0

    def __init__(self, F: FieldSpec):
        self.F = F
        self.name = f"P1/{F.p}^{F.m}"

    def place(self, alpha: int) -> Place:
        return Place.affine(self.name, alpha)

    @property
    def infinity(self) -> Place:
        return Place.infinite(self.name)


class ElemAbelian:
    """y^q' + mu*y = f(x) over F, with q' a power of the characteristic."""

    family = "eab"

    def __init__(self, F: FieldSpec, qprime: int, mu: int, f: Sequence[int], name: str | None = None):
        f = list(f)
        while f and f[-1] == 0:
            f.pop()
        self.F, self.qprime, self.mu, self.f = F, qprime, mu, tuple(f)
        if mu == 0:
            raise CurveError("mu must be nonzero")
        p, _ = prime_power(qprime)
        if p != F.p or qprime > F.order:
            raise CurveError(f"{qprime} is not a power of the characteristic {F.p} inside {F!r}")
        self.m = len(self.f) - 1
        if self.m < 1:
            raise CurveError("f must be nonconstant")
        if gcd(self.m, qprime) != 1:
            raise CurveError(f"gcd(deg f, q') = gcd({self.m}, {qprime}) != 1")
        kernel = additive_roots(F, qprime, mu, 0)
        if len(kernel) != qprime:
            raise CurveError(f"T^{qprime} + mu*T has only {len(kernel)} roots in {F!r}")
        self.kernel = kernel
        self.base = RationalLine(F)
        self.name = name or f"eab(q'={qprime},mu={mu},f={list(self.f)})/{F.p}^{F.m}"

    @property
    def genus(self) -> int:
        return (self.qprime - 1) * (self.m - 1) // 2

    @property
    def different_exponent(self) -> int:
        return (self.qprime - 1) * (self.m + 1)

    def f_at(self, a: int) -> int:
        return poly_eval(self.F, self.f, a)

    def fibre(self, alpha: int) -> list[int]:
        return additive_roots(self.F, self.qprime, self.mu, self.f_at(alpha))

    @cached_property
    def _fibres(self) -> list[list[int]]:
        vals = vpoly_eval(self.F, self.f, np.arange(self.F.order)).tolist()
        return [additive_roots(self.F, self.qprime, self.mu, v) for v in vals]

    def split_alphas(self) -> list[int]:
        return [a for a, roots in enumerate(self._fibres) if len(roots) == self.qprime]

    def split_report(self) -> SplitReport:
        fibres = []
        for a, roots in enumerate(self._fibres):
            tag = "split" if len(roots) == self.qprime else "nonsplit"
            fibres.append(FibreInfo(a, len(roots), [1] * len(roots), [(a, b) for b in roots], tag))
        fibres.append(FibreInfo(None, 1, [self.qprime], [], "totally_ramified"))
        return SplitReport(self.name, self.qprime, fibres)

    def place(self, alpha: int, beta: int) -> Place:
        return Place.affine(self.name, alpha, beta)

    @property
    def infinity(self) -> Place:
        return Place.infinite(self.name)

    def points_over(self, alphas: Sequence[int]) -> list[tuple[int, int]]:
        return [(a, b) for a in sorted(alphas) for b in self._fibres[a]]

    def descriptor(self) -> ExtensionDescriptor:
        d = self.different_exponent
        split = {
            self.base.place(a): tuple(self.place(a, b) for b in self._fibres[a])
            for a in self.split_alphas()
        }
        return ExtensionDescriptor(
            base=self.base.name,
            top=self.name,
            degree=self.qprime,
            fibers={self.base.infinity: (Fiber(self.infinity, self.qprime, d),)},
            base_genus=0,
            top_genus=self.genus,
            char=self.F.p,
            splitting=split,
        )

    def riemann_roch_basis(self, r: int) -> list[tuple[int, int]]:
        """Exponents (a, b) of x^a y^b spanning L(r Q_inf), ordered by (b, a)."""
        out = []
        for b in range(self.qprime):
            a = 0
            while self.qprime * a + self.m * b <= r:
                out.append((a, b))
                a += 1
        return out


class Hermitian:
    """y^{q+1} = x^q + x over F_{q^2}, a Kummer cover of degree q+1 of K(x)."""

    family = "hermitian"

    def __init__(self, q: int, F: FieldSpec | None = None):
        prime_power(q)
        self.q = q
        self.F = F or GF(q * q)
        if self.F.order != q * q:
            raise CurveError("Hermitian curve lives over F_{q^2}")
        self.base = RationalLine(self.F)
        self.name = f"hermitian(q={q})"

    @property
    def genus(self) -> int:
        return self.q * (self.q - 1) // 2

    def norm_trace(self, a: int) -> int:
        """a^q + a."""
        return self.F.add(self.F.pow(a, self.q), a)

    def ramified_alphas(self) -> list[int]:
        return [a for a in self.F.elements() if self.norm_trace(a) == 0]

    def split_alphas(self) -> list[int]:
        return [a for a in self.F.elements() if self.norm_trace(a) != 0]

    def fibre(self, alpha: int) -> list[int]:
        return power_roots(self.F, self.q + 1, self.norm_trace(alpha))

    def place(self, alpha: int, beta: int) -> Place:
        return Place.affine(self.name, alpha, beta)

    @property
    def infinity(self) -> Place:
        return Place.infinite(self.name)

    def ramified_places(self) -> list[Place]:
        return [self.place(a, 0) for a in self.ramified_alphas()]

    def points_over(self, alphas: Sequence[int]) -> list[tuple[int, int]]:
        return [(a, b) for a in sorted(alphas) for b in self.fibre(a)]

    def split_points(self) -> list[tuple[int, int]]:
        return self.points_over(self.split_alphas())

    def hermitian_places(self) -> SplitReport:
        fibres = []
        for a in self.F.elements():
            roots = self.fibre(a)
            if self.norm_trace(a) == 0:
                fibres.append(FibreInfo(a, 1, [self.q + 1], [(a, 0)], "totally_ramified"))
            else:
                fibres.append(FibreInfo(a, len(roots), [1] * len(roots), [(a, b) for b in roots], "split"))
        fibres.append(FibreInfo(None, 1, [self.q + 1], [], "totally_ramified"))
        rep = SplitReport(self.name, self.q + 1, fibres)
        rep.notes = {
            "ramified_affine": rep.count("totally_ramified") - 1,
            "split_alphas": rep.count("split"),
            "rational_places": rep.rational_places,
        }
        return rep

    def descriptor(self) -> ExtensionDescriptor:
        q = self.q
        fibers = {self.base.infinity: (Fiber(self.infinity, q + 1, q),)}
        for a in self.ramified_alphas():
            fibers[self.base.place(a)] = (Fiber(self.place(a, 0), q + 1, q),)
        split = {
            self.base.place(a): tuple(self.place(a, b) for b in self.fibre(a))
            for a in self.split_alphas()
        }
        return ExtensionDescriptor(
            base=self.base.name,
            top=self.name,
            degree=q + 1,
            fibers=fibers,
            base_genus=0,
            top_genus=self.genus,
            char=self.F.p,
            splitting=split,
        )

    def divisor_of_y(self) -> Divisor:
        """(y) = sum Q_i - q Q_inf, the Q_i being the ramified affine places."""
        return Divisor.sum_of(self.ramified_places()) - self.q * Divisor.of(self.infinity)

    def canonical_divisor_dt_over_t(self) -> Divisor:
        """Divisor of (1/t)dt, t = (x^{q^2} - x)/(x^q + x).

        Fixed formula -D + (q^2-2)(sum Q_i + Q_inf), D the sum of all split
        places.
        """
        q = self.q
        D = Divisor.sum_of(self.place(a, b) for a, b in self.split_points())
        return -D + (q * q - 2) * (Divisor.sum_of(self.ramified_places()) + Divisor.of(self.infinity))


class CurveX:
    """z^{q+1} = y^q + y, y^{q+1} = x^q + x over F_{q^2}, as M over the Hermitian F."""

    family = "curveX"

    def __init__(self, q: int):
        self.q = q
        self.herm = Hermitian(q)
        self.F = self.herm.F
        self.name = f"curveX(q={q})"

    @property
    def genus(self) -> int:
        return self.q**3 - self.q

    def y_trace(self, b: int) -> int:
        return self.F.add(self.F.pow(b, self.q), b)

    def z_fibre(self, beta: int) -> list[int]:
        return power_roots(self.F, self.q + 1, self.y_trace(beta))

    def place(self, a: int, b: int, c: int) -> Place:
        return Place.affine(self.name, a, b, c)

    @property
    def infinity(self) -> Place:
        return Place.infinite(self.name)

    def herm_affine_points(self) -> list[tuple[int, int]]:
        pts = [(a, 0) for a in self.herm.ramified_alphas()]
        return sorted(pts + self.herm.split_points())

    def descriptor(self) -> ExtensionDescriptor:
        """Ramification of M/F: the places of F with y^q + y = 0, and Q_inf."""
        q, H = self.q, self.herm
        fibers = {H.infinity: (Fiber(self.infinity, q + 1, q),)}
        split = {}
        for a, b in self.herm_affine_points():
            zs = self.z_fibre(b)
            if self.y_trace(b) == 0:
                fibers[H.place(a, b)] = (Fiber(self.place(a, b, 0), q + 1, q),)
            elif len(zs) == q + 1:
                split[H.place(a, b)] = tuple(self.place(a, b, c) for c in zs)
        return ExtensionDescriptor(
            base=H.name,
            top=self.name,
            degree=q + 1,
            fibers=fibers,
            base_genus=H.genus,
            top_genus=self.genus,
            char=self.F.p,
            splitting=split,
        )

    def _classify_alpha(self, a: int) -> str:
        """S0/S1/S2 by irreducibility of T^2 + (a^q + a) over F_q."""
        F, q = self.F, self.q
        c = self.herm.norm_trace(a)
        if c == 0:
            return "S0"
        subfield = [t for t in F.elements() if F.pow(t, q) == t]
        has_root = any(F.add(F.mul(t, t), c) == 0 for t in subfield)
        return "S2" if has_root else "S1"

    def census(self) -> dict:
        """Brute-force count over F_{q^2}^3 plus per-alpha splitting profile."""
        F, q = self.F, self.q
        xs = np.arange(F.order)
        tr = F.vadd(F.vpow(xs, q), xs)  # t -> t^q + t
        pw = F.vpow(xs, q + 1)  # t -> t^{q+1}
        on_herm = pw[None, :] == tr[:, None]  # [x, y]
        on_top = pw[None, :] == tr[:, None]  # [y, z]
        affine = int(np.einsum("xy,yz->", on_herm.astype(np.int64), on_top.astype(np.int64)))
        profile = []
        mismatches = []
        for a in F.elements():
            betas = np.flatnonzero(on_herm[a]).tolist()
            ram = [b for b in betas if int(on_top[b].sum()) == 1]
            spl = [b for b in betas if int(on_top[b].sum()) == q + 1]
            cls = self._classify_alpha(a)
            expected = {"S0": 1, "S1": 2, "S2": 0}[cls]
            entry = {
                "alpha": a,
                "class": cls,
                "herm_points": len(betas),
                "ramified_in_M": len(ram),
                "split_in_M": len(spl),
            }
            profile.append(entry)
            if len(ram) != expected:
                mismatches.append(a)
        counts = {c: sum(1 for e in profile if e["class"] == c) for c in ("S0", "S1", "S2")}
        fully_split = sum(1 for e in profile if e["class"] != "S0" and e["ramified_in_M"] == 0)
        return {
            "curve": "curveX",
            "q": q,
            "affine": affine,
            "total": affine + 1,
            "expected_total": q**4 + 1,
            "genus_riemann_hurwitz": riemann_hurwitz(self.descriptor()),
            "class_counts": counts,
            "alphas_with_fibre_fully_split_in_M": fully_split,
            "classification_mismatches": len(mismatches),
            "profile": profile,
        }


class SuzukiLocus:
    """Splitting locus of y^q + y = x^{q0}(x^q + x) over F_{q^4}, q = 2^{2s+1}."""

    family = "suzuki"

    def __init__(self, q: int):
        p, e = prime_power(q)
        if p != 2 or e % 2 == 0 or e < 3:
            raise CurveError("Suzuki curves need q = 2^(2s+1) with s >= 1")
        self.q = q
        self.q0 = 2 ** ((e - 1) // 2)
        self.F = GF(q**4)
        self.name = f"suzuki(q={q})"

    @property
    def genus(self) -> int:
        return self.q0 * (self.q - 1)

    @property
    def different_exponent(self) -> int:
        # single totally ramified rational place over K(x): d = 2g - 2 + 2[M:F]
        return 2 * self.genus - 2 + 2 * self.q

    def f_values(self) -> np.ndarray:
        F, xs = self.F, np.arange(self.F.order)
        return F.vmul(F.vpow(xs, self.q0), F.vadd(F.vpow(xs, self.q), xs))

    def census(self) -> dict:
        F, q = self.F, self.q
        xs = np.arange(F.order)
        fvals = self.f_values().tolist()
        root_counts = np.array([len(additive_roots(F, q, 1, v)) for v in fvals])
        split = root_counts == q
        trace0 = vrel_trace(F, xs, q) == 0
        not_in_Fq = F.vadd(F.vpow(xs, q), xs) != 0
        locus = trace0 & not_in_Fq
        return {
            "curve": "suzuki",
            "q": q,
            "locus_count": int(locus.sum()),
            "locus_split_by_root_count": int((split & locus).sum()),
            "locus_all_split": bool(np.all(split[locus])),
            "split_total": int(split.sum()),
            "affine": int(split.sum()) * q,
            "total": int(split.sum()) * q + 1,
            "hasse_weil_max": q**4 + 1 + 2 * self.genus * q * q,
        }

    def descriptor(self) -> ExtensionDescriptor:
        base = RationalLine(self.F)
        return ExtensionDescriptor(
            base=base.name,
            top=self.name,
            degree=self.q,
            fibers={base.infinity: (Fiber(Place.infinite(self.name), self.q, self.different_exponent),)},
            base_genus=0,
            top_genus=self.genus,
            char=2,
        )


def suzuki_split_count(q: int) -> int:
    """#{a in F_{q^4}: Tr_{q^4/q}(a) = 0, a^q + a != 0}.

    This is the trace locus only.  Root counting (see
    :meth:`SuzukiLocus.census`) shows that not every element of it splits;
    for q = 8 just 56 of the 504 do, while 736 alphas split in total.
    """
    return SuzukiLocus(q).census()["locus_count"]


class GGSCover(ElemAbelian):
    """y^{q^2} - y = x^{(q^r+1)/(q+1)} over F_{q^{2r}}, r odd >= 3."""

    family = "ggs"

    def __init__(self, q: int, r: int):
        if r < 3 or r % 2 == 0:
            raise CurveError("r must be odd and >= 3")
        prime_power(q)
        F = GF(q ** (2 * r))
        M = (q**r + 1) // (q + 1)
        f = [0] * M + [1]
        self.q, self.r = q, r
        super().__init__(F, q * q, F.neg(1), f, name=f"ggs(q={q},r={r})")

    def trace_split_alphas(self) -> list[int]:
        F = self.F
        vals = vpoly_eval(F, self.f, np.arange(F.order))
        tr = vrel_trace(F, vals, self.q * self.q)
        return np.flatnonzero(tr == 0).tolist()


def hermitian_places(q: int) -> SplitReport:
    return Hermitian(q).hermitian_places()


def curveX_census(q: int) -> dict:
    return CurveX(q).census()


def make_extension_descriptor(model) -> ExtensionDescriptor:
    return model.descriptor()


def genus(model) -> int:
    return model.genus
