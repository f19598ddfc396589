"""Edge-count bookkeeping and exact maximization of the density polynomial.

The six-part construction with part proportions (x, x, y, x, x, y) has,
per unit of C(n, 3), the asymptotic density

    c3 x^3 + c30 y^3 + c21 x^2 y + c12 x y^2

whose coefficients are re-derived here from the five finite edge layers
rather than hard-coded: transversal triples contribute by classifying the
sixteen allowed part triples, the two pair layers contribute the leading
terms of their binomial counts, the inner blow-ups contribute through the
fixed-point density of the iterated blow-up, and the bipartite-style layer
through the leading term of its closed-form count.

All coefficient work is exact rational; the constrained optimum on
4x + 2y = 1 reduces to a univariate cubic whose stationary points live in
a real quadratic field, kept symbolically as a + b*sqrt(d) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .constructions import (
    ALLOWED_PART_TRIPLES,
    SixPartParams,
    bipartite_g_edge_count,
    six_part_h,
)
from .criteria import de_caen_bound
from .errors import ConsistencyError, ParameterError
from .hypergraph import S6_EDGES

_X_PARTS = frozenset({1, 2, 4, 5})  # parts of proportional size x; 3, 6 have y


@dataclass(frozen=True)
class Quad:
    """Exact element a + b*sqrt(d) of a real quadratic field, d squarefree."""

    a: Fraction
    b: Fraction
    d: int

    def _check(self, other: "Quad") -> None:
        if self.d != other.d:
            raise ParameterError(f"mixed radicands {self.d} and {other.d}")

    @classmethod
    def rational(cls, value, d: int) -> "Quad":
        return cls(Fraction(value), Fraction(0), d)

    def __add__(self, other: "Quad") -> "Quad":
        self._check(other)
        return Quad(self.a + other.a, self.b + other.b, self.d)

    def __sub__(self, other: "Quad") -> "Quad":
        self._check(other)
        return Quad(self.a - other.a, self.b - other.b, self.d)

    def __mul__(self, other: "Quad") -> "Quad":
        self._check(other)
        return Quad(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    def scale(self, c) -> "Quad":
        c = Fraction(c)
        return Quad(self.a * c, self.b * c, self.d)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d ** 0.5

    def is_positive(self) -> bool:
        """Exact sign test of a + b*sqrt(d) > 0."""
        if self.b == 0:
            return self.a > 0
        if self.a == 0:
            return self.b > 0
        if self.a > 0 and self.b > 0:
            return True
        if self.a < 0 and self.b < 0:
            return False
        # opposite signs: compare a^2 with b^2 d on the dominant side
        if self.a > 0:
            return self.a * self.a > self.b * self.b * self.d
        return self.a * self.a < self.b * self.b * self.d

    def __lt__(self, other: "Quad") -> bool:
        return (other - self).is_positive()


def _squarefree_split(value: int) -> tuple[int, int]:
    """value = s^2 * d with d squarefree; returns (s, d)."""
    s, d = 1, 1
    rest = value
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            power = 0
            while rest % p == 0:
                rest //= p
                power += 1
            s *= p ** (power // 2)
            if power % 2:
                d *= p
        p += 1
    return s, d * rest


@dataclass(frozen=True)
class DensityPolynomial:
    """c_x3 x^3 + c_y3 y^3 + c_x2y x^2 y + c_xy2 x y^2, coefficients >= 0."""

    c_x3: Fraction
    c_y3: Fraction
    c_x2y: Fraction
    c_xy2: Fraction

    def __post_init__(self) -> None:
        if min(self.c_x3, self.c_y3, self.c_x2y, self.c_xy2) < 0:
            raise ParameterError("density coefficients must be nonnegative")

    def evaluate(self, x: Fraction, y: Fraction) -> Fraction:
        return (
            self.c_x3 * x**3
            + self.c_y3 * y**3
            + self.c_x2y * x**2 * y
            + self.c_xy2 * x * y**2
        )

    def evaluate_quad(self, x: Quad, y: Quad) -> Quad:
        out = x * x * x
        out = out.scale(self.c_x3)
        out = out + (y * y * y).scale(self.c_y3)
        out = out + (x * x * y).scale(self.c_x2y)
        out = out + (x * y * y).scale(self.c_xy2)
        return out


@dataclass(frozen=True)
class OptimumResult:
    x_star: float
    y_star: float
    value: float
    exact_x: Quad
    exact_y: Quad
    exact_value: Quad
    cross_check_value: float
    method: str


def s6_star_limit_density(parts: int = 6, pattern_edges: int = len(S6_EDGES)) -> Fraction:
    """Fixed point of e(n) = pattern_edges (n/parts)^3 + parts e(n/parts),
    normalized by n^3/6."""
    # c = pattern_edges/parts^3 + c/parts^2  =>  c = pattern_edges/(parts(parts^2-1))
    c = Fraction(pattern_edges, parts * (parts**2 - 1))
    return 6 * c


def h_density_poly() -> DensityPolynomial:
    """Re-derive the density polynomial from the five finite edge layers."""
    # layer (a): classify allowed part triples by their size types
    n3x = sum(1 for t in ALLOWED_PART_TRIPLES if sum(p in _X_PARTS for p in t) == 3)
    n2x = sum(1 for t in ALLOWED_PART_TRIPLES if sum(p in _X_PARTS for p in t) == 2)
    n1x = sum(1 for t in ALLOWED_PART_TRIPLES if sum(p in _X_PARTS for p in t) == 1)
    c_x3 = Fraction(n3x)
    c_x2y = Fraction(n2x)
    c_xy2 = Fraction(n1x)
    c_y3 = Fraction(0)
    # layers (b) and (c): 4 y n C(x n, 2) and 4 x n C(y n, 2); C(m,2) ~ m^2/2
    c_x2y += 4 * Fraction(1, 2)
    c_xy2 += 4 * Fraction(1, 2)
    # layer (d): inner blow-ups at the limit density, 4 parts of size x n and
    # 2 of size y n; C(m,3) ~ m^3/6 and the normalization cancels the 6
    inner = s6_star_limit_density() / 6
    c_x3 += 4 * inner
    c_y3 += 2 * inner
    # layer (e): two copies between x-parts; (m-1)m(2m-1)/3 ~ (2/3) m^3
    c_x3 += 2 * Fraction(2, 3)
    # normalize per C(n,3) ~ n^3/6
    return DensityPolynomial(6 * c_x3, 6 * c_y3, 6 * c_x2y, 6 * c_xy2)


def exact_count(
    p: SixPartParams,
    s6_edge_counts: tuple[int, ...],
    g_edge_counts: tuple[int, ...],
) -> int:
    """Exact edge count of the six-part construction from its layer counts.

    The per-part inner blow-up counts and the two between-pair counts are
    supplied by the constructions module; the result is cross-checked
    against the built graph and a mismatch raises.
    """
    if len(s6_edge_counts) != 6:
        raise ParameterError("need six inner blow-up edge counts")
    if len(g_edge_counts) != 2:
        raise ParameterError("need two between-pair edge counts")
    s = p.sizes
    transversal = sum(
        s[a - 1] * s[b - 1] * s[c - 1] for a, b, c in ALLOWED_PART_TRIPLES
    )
    pair_in_y = comb(s[2], 2) * (s[0] + s[1]) + comb(s[5], 2) * (s[3] + s[4])
    pair_in_x = (comb(s[0], 2) + comb(s[1], 2)) * s[5] + (
        comb(s[3], 2) + comb(s[4], 2)
    ) * s[2]
    total = (
        transversal
        + pair_in_y
        + pair_in_x
        + sum(s6_edge_counts)
        + sum(g_edge_counts)
    )
    built = six_part_h(p).edge_count
    if built != total:
        raise ConsistencyError(
            f"layer bookkeeping gives {total} edges but the built graph has {built}")
    return total


def _golden_section_max(fn, lo: float, hi: float, tol: float = 1e-13) -> float:
    """Maximum value of a unimodal-enough fn on [lo, hi] (endpoint aware)."""
    invphi = (5**0.5 - 1) / 2
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
    return max(fn(lo), fn(hi), fc, fd)


def maximize_constrained(poly: DensityPolynomial) -> OptimumResult:
    """Maximize the polynomial on x, y >= 0 with 4x + 2y = 1.

    Substituting y = (1 - 4x)/2 reduces to a cubic on [0, 1/4]; stationary
    points come from the quadratic formula applied to its derivative and are
    compared exactly against the endpoints.  A golden-section search on the
    reduced cubic must agree with the exact value to 1e-9.
    """
    # reduced cubic g(x) = sum poly monomials with y = (1-4x)/2
    half = Fraction(1, 2)
    # y = 1/2 - 2x; expand symbolically over rational coefficient arrays
    # indexed by x-power
    y_poly = (half, Fraction(-2))          # y  as polynomial in x
    y2 = _poly_mul(y_poly, y_poly)
    y3 = _poly_mul(y2, y_poly)
    x_poly = (Fraction(0), Fraction(1))
    x2 = _poly_mul(x_poly, x_poly)
    x3 = _poly_mul(x2, x_poly)
    g = _poly_add(
        _poly_scale(x3, poly.c_x3),
        _poly_scale(y3, poly.c_y3),
        _poly_scale(_poly_mul(x2, y_poly), poly.c_x2y),
        _poly_scale(_poly_mul(x_poly, y2), poly.c_xy2),
    )
    # g has degree <= 3; derivative is a quadratic a2 x^2 + a1 x + a0
    a0 = g[1] if len(g) > 1 else Fraction(0)
    a1 = 2 * g[2] if len(g) > 2 else Fraction(0)
    a2 = 3 * g[3] if len(g) > 3 else Fraction(0)

    lo, hi = Fraction(0), Fraction(1, 4)
    disc_num = a1 * a1 - 4 * a2 * a0
    d_field = 1
    candidates: list[Quad] = []
    if a2 != 0 and disc_num > 0:
        s, d_field = _squarefree_split(
            disc_num.numerator * disc_num.denominator)
        root_coeff = Fraction(s, disc_num.denominator)  # sqrt(disc) = s/den * sqrt(d)
        for sign in (-1, 1):
            x = Quad(-a1 / (2 * a2), sign * root_coeff / (2 * a2), d_field)
            if not (Quad.rational(lo, d_field) < x) or not (x < Quad.rational(hi, d_field)):
                continue
            candidates.append(x)
    elif a2 == 0 and a1 != 0:
        x0 = -a0 / a1
        if lo < x0 < hi:
            candidates.append(Quad.rational(x0, d_field))
    candidates.append(Quad.rational(lo, d_field))
    candidates.append(Quad.rational(hi, d_field))

    def value_at(x: Quad) -> Quad:
        y = Quad.rational(half, x.d) - x.scale(2)
        return poly.evaluate_quad(x, y)

    best_x = candidates[0]
    best_val = value_at(best_x)
    for x in candidates[1:]:
        val = value_at(x)
        if best_val < val:
            best_x, best_val = x, val
    best_y = Quad.rational(half, best_x.d) - best_x.scale(2)

    def g_float(x: float) -> float:
        return sum(float(c) * x**i for i, c in enumerate(g))

    cross = _golden_section_max(g_float, 0.0, 0.25)
    if abs(cross - float(best_val)) > 1e-9:
        raise ConsistencyError(
            f"golden-section value {cross!r} disagrees with exact optimum "
            f"{float(best_val)!r}")
    return OptimumResult(
        x_star=float(best_x),
        y_star=float(best_y),
        value=float(best_val),
        exact_x=best_x,
        exact_y=best_y,
        exact_value=best_val,
        cross_check_value=cross,
        method="reduced-cubic stationary points vs endpoints",
    )


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_add(*polys):
    size = max(len(p) for p in polys)
    out = [Fraction(0)] * size
    for p in polys:
        for i, a in enumerate(p):
            out[i] += a
    return tuple(out)


def _poly_scale(p, c):
    return tuple(a * c for a in p)


@dataclass(frozen=True)
class ReferenceBound:
    name: str
    exact: Quad | Fraction
    value: float
    kind: str  # "lower" | "upper"


def reference_bounds() -> dict[str, ReferenceBound]:
    """Literature constants the new optimum is compared against."""
    chung_lu = Quad(Fraction(1, 4), Fraction(1, 12), 17)  # (3 + sqrt 17)/12
    table = {
        "chung_lu_k4_upper": ReferenceBound(
            "chung_lu_k4_upper", chung_lu, float(chung_lu), "upper"),
        "baber_k4_upper": ReferenceBound(
            "baber_k4_upper", Fraction(5615, 10000), 0.5615, "upper"),
        "bcl_k5minus_lower": ReferenceBound(
            "bcl_k5minus_lower", Fraction(58656, 100000), 0.58656, "lower"),
        "de_caen_k4_upper": ReferenceBound(
            "de_caen_k4_upper", de_caen_bound(4, 3), float(de_caen_bound(4, 3)),
            "upper"),
    }
    return table
