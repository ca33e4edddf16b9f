"""Places, divisors and ramification data for extensions of function fields.

Divisors are finite formal sums of symbolic places.  An
:class:`ExtensionDescriptor` records how base places decompose in an
extension M/F: ramified fibres carry ramification indices and different
exponents, while completely split rational places are listed separately.
Descriptors are produced by :mod:`isodual.curves` from root counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class DivisorError(ValueError):
    pass


class UnknownFiber(DivisorError):
    pass


class NonIntegralGenus(DivisorError):
    pass


class OddDifferentExponent(DivisorError):
    def __init__(self, message: str, diagnostics: dict[str, bool] | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class NonSplitPlace(DivisorError):
    pass


class SupportOverlap(DivisorError):
    pass


class LiftInconsistent(DivisorError):
    pass


_KIND_ORDER = {"affine": 0, "infinite": 1, "labeled": 2}


@dataclass(frozen=True)
class Place:
    """A place of the function field of ``curve``.

    ``kind`` is ``"affine"`` (rational place with coordinates given as
    field codes), ``"infinite"`` or ``"labeled"`` (an abstract place known
    only by name and degree).
    """

    curve: str
    kind: str
    coords: tuple[int, ...] = ()
    label: str = ""
    degree: int = 1

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise DivisorError(f"unknown place kind {self.kind!r}")
        if self.degree < 1:
            raise DivisorError("place degree must be >= 1")
        if self.kind != "labeled" and self.degree != 1:
            raise DivisorError("coordinate places are rational")

    @classmethod
    def affine(cls, curve: str, *coords: int) -> "Place":
        return cls(curve, "affine", tuple(int(c) for c in coords))

    @classmethod
    def infinite(cls, curve: str) -> "Place":
        return cls(curve, "infinite")

    @classmethod
    def labeled(cls, curve: str, label: str, degree: int = 1) -> "Place":
        return cls(curve, "labeled", (), label, degree)

    def sort_key(self):
        return (self.curve, _KIND_ORDER[self.kind], self.coords, self.label)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind == "infinite":
            return f"{self.curve}:inf"
        if self.kind == "labeled":
            return f"{self.curve}:{self.label}"
        return f"{self.curve}:{self.coords}"

    def to_dict(self) -> dict:
        d = {"curve": self.curve, "kind": self.kind}
        if self.kind == "affine":
            d["coords"] = list(self.coords)
        if self.kind == "labeled":
            d["label"] = self.label
            d["degree"] = self.degree
        return d


def place_from_dict(d: Mapping) -> Place:
    return Place(
        d["curve"],
        d["kind"],
        tuple(d.get("coords", ())),
        d.get("label", ""),
        int(d.get("degree", 1)),
    )


class Divisor(Mapping[Place, int]):
    """Immutable finite sum of places with nonzero integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[Place, int] | Iterable[tuple[Place, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[Place, int] = {}
        for P, n in items:
            c[P] = c.get(P, 0) + int(n)
        self._c = {P: n for P, n in sorted(c.items()) if n != 0}
        self._hash = None

    @classmethod
    def of(cls, P: Place, n: int = 1) -> "Divisor":
        return cls({P: n})

    @classmethod
    def sum_of(cls, places: Iterable[Place]) -> "Divisor":
        return cls((P, 1) for P in places)

    def __getitem__(self, P: Place) -> int:
        return self._c.get(P, 0)

    def __iter__(self) -> Iterator[Place]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __contains__(self, P) -> bool:
        return P in self._c

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._c
        return isinstance(other, Divisor) and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other: "Divisor") -> "Divisor":
        if isinstance(other, int) and other == 0:
            return self
        return Divisor(list(self._c.items()) + list(other._c.items()))

    __radd__ = __add__

    def __neg__(self) -> "Divisor":
        return Divisor({P: -n for P, n in self._c.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({P: k * n for P, n in self._c.items()})

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        return sum(n * P.degree for P, n in self._c.items())

    @property
    def support(self) -> frozenset[Place]:
        return frozenset(self._c)

    def is_effective(self) -> bool:
        return all(n > 0 for n in self._c.values())

    def __repr__(self) -> str:
        if not self._c:
            return "Divisor(0)"
        return "Divisor(" + " + ".join(f"{n}*{P}" for P, n in self._c.items()) + ")"

    def to_list(self) -> list[dict]:
        return [{"place": P.to_dict(), "coeff": n} for P, n in self._c.items()]


def divisor_from_list(items: Iterable[Mapping]) -> Divisor:
    return Divisor((place_from_dict(it["place"]), int(it["coeff"])) for it in items)


@dataclass(frozen=True)
class Fiber:
    place: Place
    e: int
    d: int


@dataclass(frozen=True)
class ExtensionDescriptor:
    """Ramification table of a finite geometric extension M/F.

    ``fibers`` lists the ramified base places.  ``splitting`` maps rational
    base places that split completely to their fibre (each with e=1, d=0).
    """

    base: str
    top: str
    degree: int
    fibers: Mapping[Place, tuple[Fiber, ...]]
    base_genus: int
    top_genus: int
    char: int
    splitting: Mapping[Place, tuple[Place, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for P, fib in self.fibers.items():
            total = sum(f.e * f.place.degree for f in fib)
            if total != self.degree * P.degree:
                raise DivisorError(
                    f"fundamental equality fails over {P}: {total} != {self.degree}*{P.degree}"
                )
        for P, fib in self.splitting.items():
            if len(fib) != self.degree:
                raise DivisorError(f"{P} is listed as split but has {len(fib)} places above it")

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "top": self.top,
            "degree": self.degree,
            "base_genus": self.base_genus,
            "top_genus": self.top_genus,
            "char": self.char,
            "fibers": [
                {
                    "base_place": P.to_dict(),
                    "above": [{"place": f.place.to_dict(), "e": f.e, "d": f.d} for f in fib],
                }
                for P, fib in sorted(self.fibers.items())
            ],
            "split_places": len(self.splitting),
        }


def conorm(ext: ExtensionDescriptor, D: Divisor) -> Divisor:
    """Con(sum n_P P) = sum n_P sum_{Q|P} e(Q|P) Q."""
    out: list[tuple[Place, int]] = []
    for P, n in D.items():
        if P in ext.fibers:
            out.extend((f.place, n * f.e) for f in ext.fibers[P])
        elif P in ext.splitting:
            out.extend((Q, n) for Q in ext.splitting[P])
        else:
            raise UnknownFiber(f"no decomposition data for {P}")
    return Divisor(out)


def different(ext: ExtensionDescriptor) -> Divisor:
    return Divisor((f.place, f.d) for fib in ext.fibers.values() for f in fib)


def riemann_hurwitz(ext: ExtensionDescriptor) -> int:
    """Genus of M from 2g_M - 2 = [M:F](2g_F - 2) + deg Diff."""
    twice = ext.degree * (2 * ext.base_genus - 2) + different(ext).degree + 2
    if twice % 2 or twice < 0:
        raise NonIntegralGenus(f"2g' = {twice} is not a nonnegative even integer")
    return twice // 2


def _p_part(e: int, p: int) -> int:
    out = 1
    while e % p == 0:
        e //= p
        out *= p
    return out


def even_exponent_conditions(ext: ExtensionDescriptor) -> dict[str, bool]:
    """Which of the standard sufficient conditions for even exponents hold."""
    p = ext.char
    fibs = [(P, f) for P, fib in ext.fibers.items() for f in fib]
    deg_is_p_power = _p_part(ext.degree, p) == ext.degree
    artin_schreier = p % 2 == 1 and deg_is_p_power and all(f.e == ext.degree for _, f in fibs)
    tame_odd = ext.degree % 2 == 1 and all(f.e % p for _, f in fibs)
    weakly = bool(fibs) and all(
        f.e % p == 0 and f.d == (f.e - 1) + (_p_part(f.e, p) - 1) for _, f in fibs
    )
    single = (
        len(ext.fibers) == 1
        and all(
            P.degree == 1 and len(fib) == 1 and fib[0].e == ext.degree
            for P, fib in ext.fibers.items()
        )
    )
    return {
        "artin_schreier_odd_char": artin_schreier,
        "tame_odd_degree": tame_odd,
        "weakly_ramified": weakly,
        "single_totally_ramified_rational": single,
    }


def half_different(ext: ExtensionDescriptor) -> Divisor:
    odd = [(P, f) for P, fib in ext.fibers.items() for f in fib if f.d % 2]
    if odd:
        P, f = odd[0]
        diag = even_exponent_conditions(ext)
        held = [k for k, v in diag.items() if v] or ["none"]
        raise OddDifferentExponent(
            f"different exponent d({f.place}|{P}) = {f.d} is odd; "
            f"{len(odd)} odd exponent(s); sufficient conditions holding: {', '.join(held)}",
            diag,
        )
    return Divisor((f.place, f.d // 2) for fib in ext.fibers.values() for f in fib)


def isodual_degree_check(D: Divisor, G: Divisor, g: int) -> bool:
    """deg D even and deg G = (deg D + 2g - 2) / 2."""
    n = D.degree
    return n % 2 == 0 and 2 * G.degree == n + 2 * g - 2


def lift_divisors(ext: ExtensionDescriptor, D: Divisor, G: Divisor) -> tuple[Divisor, Divisor]:
    """Lift (D, G) on F to (Con(D), Con(G) + Diff/2) on M.

    Every place of D must be rational and split completely; every
    different exponent must be even.
    """
    if D.support & G.support:
        raise SupportOverlap("supp(D) and supp(G) intersect")
    for P, n in D.items():
        if n != 1 or P.degree != 1:
            raise NonSplitPlace(f"{P} must be a rational place with coefficient 1")
        if P not in ext.splitting:
            raise NonSplitPlace(f"{P} does not split completely in {ext.top}/{ext.base}")
    half = half_different(ext)
    D_lift = conorm(ext, D)
    G_lift = conorm(ext, G) + half
    if D_lift.support & G_lift.support:
        raise SupportOverlap("lifted supports intersect")
    if isodual_degree_check(D, G, ext.base_genus):
        if 2 * G_lift.degree != D_lift.degree + 2 * ext.top_genus - 2:
            raise LiftInconsistent(
                f"deg G~ = {G_lift.degree} but (deg D~ + 2g_M - 2)/2 = "
                f"{(D_lift.degree + 2 * ext.top_genus - 2) / 2}"
            )
    return D_lift, G_lift
