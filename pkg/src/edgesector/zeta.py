"""Ihara determinant, its edge-sector factorization, and the correction series.

The reciprocal zeta function det(I - wT) factors exactly as

    det(I - wT) = det(I - (w/2) L) * C(w),

where L is the line-graph adjacency and the correction factor C(w) is a
reduced rational function (for P3 it is 1/(1 - w^2/4), so it is genuinely
non-polynomial in general).  Everything in this module is exact; the only
floating-point work in the package lives in bounds.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .edge_space import build_hashimoto, build_incidence, edge_space, sector_blocks
from .graphs import Graph, is_bipartite, is_connected
from .matrices import Matrix, det_resolvent
from .polynomials import (
    Poly,
    PowerSeries,
    RatFunc,
    first_difference,
    ratfunc_reduce,
    series_log,
    series_of,
)

DEFAULT_ORDER = 12


@lru_cache(maxsize=4096)
def hashimoto_det(g: Graph) -> Poly:
    """det(I - wT), an integer polynomial with constant term 1."""
    t = build_hashimoto(edge_space(g))
    p = det_resolvent(t)
    assert p.is_integer() and p[0] == 1
    return p


@lru_cache(maxsize=4096)
def line_factor(g: Graph) -> Poly:
    """det(I - (w/2) L); dyadic rational coefficients, constant term 1."""
    blocks = sector_blocks(edge_space(g))
    return det_resolvent(blocks.L, Fraction(1, 2))


def _vertex_space_det(g: Graph) -> Poly:
    """det(I - w A + w^2 (D - I)) by exact evaluation-interpolation.

    The determinant has degree at most 2n, so evaluating at 2n+1 integer
    points and interpolating recovers it exactly.
    """
    n = g.n
    a = g.adjacency()
    d_minus_i = Matrix.diagonal([d - 1 for d in g.degrees()])
    ident = Matrix.identity(n)
    points = []
    for w in range(2 * n + 1):
        mat = ident - a.scaled(w) + d_minus_i.scaled(w * w)
        points.append((w, mat.det()))
    return Poly.interpolate(points)


def bass_det(g: Graph) -> Poly:
    """(1 - w^2)^(m-n) det(I - w A + w^2 (D - I)), as an exact polynomial.

    For m < n the prefactor exponent is negative; the quotient is computed
    as an exact rational function and asserted to be polynomial (trees give
    the constant 1).
    """
    vertex = _vertex_space_det(g)
    k = g.m - g.n
    one_minus_w2 = Poly((1, 0, -1))
    if k >= 0:
        out = vertex * one_minus_w2**k
    else:
        out = vertex.exact_div(one_minus_w2 ** (-k))
    assert out.is_integer()
    return out


@dataclass(frozen=True)
class ZetaFactorization:
    hashimoto_det: Poly
    line_factor: Poly
    correction: RatFunc
    correction_series: PowerSeries

    def identity_holds(self) -> bool:
        """hashimoto_det * den(C) == line_factor * num(C), exactly."""
        lhs = self.hashimoto_det * self.correction.den
        rhs = self.line_factor * self.correction.num
        return lhs == rhs


@lru_cache(maxsize=1024)
def factorize(g: Graph, order: int = DEFAULT_ORDER) -> ZetaFactorization:
    det = hashimoto_det(g)
    line = line_factor(g)
    correction = ratfunc_reduce(det, line)
    return ZetaFactorization(det, line, correction, series_of(correction, order))


def correction_series(g: Graph, order: int = DEFAULT_ORDER) -> PowerSeries:
    return factorize(g, order).correction_series


def schur_series_check(g: Graph, order: int) -> bool:
    """Check the Schur-complement form of the correction factor.

    Builds I + (w/2) S + (w^2/4) M^T (I - (w/2) L)^{-1} M with truncated
    power-series entries, takes its determinant by Gaussian elimination in
    the series ring (every pivot is 1 + O(w), so no pivoting is needed), and
    compares with the correction series from the determinant quotient.
    """
    if order < 1:
        raise ValueError("series order must be at least 1")
    blocks = sector_blocks(edge_space(g))
    m = g.m
    half = Fraction(1, 2)

    # truncated resolvent sum_{j<=order} (w/2)^j L^j, entrywise series
    resolvent = [[[0] * (order + 1) for _ in range(m)] for _ in range(m)]
    power = Matrix.identity(m)
    coeff = Fraction(1)
    for j in range(order + 1):
        for i in range(m):
            prow = power[i]
            for k in range(m):
                if prow[k]:
                    resolvent[i][k][j] = prow[k] * coeff
        if j < order:
            power = power * blocks.L
            coeff *= half
    res_series = [
        [PowerSeries(order, resolvent[i][k]) for k in range(m)] for i in range(m)
    ]

    mt = blocks.M.transpose()
    # E = I + (w/2) S + (w^2/4) M^T R(w) M, entrywise in the series ring
    mat: list[list[PowerSeries]] = []
    quarter = Fraction(1, 4)
    for i in range(m):
        row = []
        for k in range(m):
            base = [0] * (order + 1)
            base[0] = 1 if i == k else 0
            if order >= 1:
                base[1] = half * blocks.S[i][k]
            cell = PowerSeries(order, base)
            mixed = None
            for u in range(m):
                if mt[i][u] == 0:
                    continue
                inner = None
                for v in range(m):
                    if blocks.M[v][k] == 0:
                        continue
                    term = res_series[u][v] * blocks.M[v][k]
                    inner = term if inner is None else inner + term
                if inner is not None:
                    term = inner * mt[i][u]
                    mixed = term if mixed is None else mixed + term
            if mixed is not None:
                shifted = [0, 0] + [quarter * c for c in mixed.coeffs[: order - 1]]
                cell = cell + PowerSeries(order, shifted)
            row.append(cell)
        mat.append(row)

    # determinant by elimination; the matrix is I + O(w) throughout
    det = PowerSeries(order, [1])
    for col in range(m):
        pivot = mat[col][col]
        if pivot.coeffs[0] == 0:
            raise ArithmeticError("series pivot lost its unit constant term")
        det = det * pivot
        inv = pivot.inverse()
        for i in range(col + 1, m):
            factor = mat[i][col] * inv
            if all(c == 0 for c in factor.coeffs):
                continue
            mat[i] = [
                mat[i][k] - factor * mat[col][k] for k in range(m)
            ]
    return det == correction_series(g, order)


@dataclass(frozen=True)
class TrivialRootReport:
    """Where the trivial roots w = +-1 sit, against the kernel dimensions.

    ord_correction_at_plus1 is the zero-order at w = 1 of the reduced
    correction factor (a rational function, so the order can drop when the
    line factor also vanishes there: the Petersen graph has line-factor
    order 5 and correction order 1 at w = 1).  The invariant that always
    holds is the combined order: ord(line at 1) + ord(C at 1) >= m - n + 1
    for connected graphs with m >= n.
    """

    m_minus_n: int
    ord_line_at_minus1: int
    ord_line_at_plus1: int
    ord_correction_at_plus1: int
    ker_dim_D: int
    ker_dim_absD: int
    bipartite: bool

    def ok(self) -> bool:
        mn = self.m_minus_n
        expected_absd = mn + 1 if self.bipartite else mn
        if self.ker_dim_absD != expected_absd:
            return False
        if self.ker_dim_D != mn + 1:
            return False
        # ker |D| forces eigenvalue -2 of L, hence (1+w)^ker there
        if self.ord_line_at_minus1 < self.ker_dim_absD:
            return False
        needed = mn + 1 if mn >= 0 else 0
        return self.ord_line_at_plus1 + self.ord_correction_at_plus1 >= needed


def trivial_roots(g: Graph) -> TrivialRootReport:
    if not is_connected(g):
        raise ValueError("trivial-root localization requires a connected graph")
    d, absd = build_incidence(edge_space(g))
    ker_d = g.m - d.rank()
    ker_absd = g.m - absd.rank()
    line = line_factor(g)
    correction = factorize(g).correction
    return TrivialRootReport(
        m_minus_n=g.m - g.n,
        ord_line_at_minus1=line.root_order(-1),
        ord_line_at_plus1=line.root_order(1),
        ord_correction_at_plus1=correction.zero_order_at(1),
        ker_dim_D=ker_d,
        ker_dim_absD=ker_absd,
        bipartite=is_bipartite(g),
    )


def log_trace_check(g: Graph, order: int) -> bool:
    """log C(w) == -sum_k (w^k/k) (tr T^k - 2^-k tr L^k), exactly to the order."""
    if order < 1:
        raise ValueError("series order must be at least 1")
    lhs = series_log(correction_series(g, order))
    t = build_hashimoto(edge_space(g))
    line = sector_blocks(edge_space(g)).L
    t_traces = t.power_traces(order)
    l_traces = line.power_traces(order)
    rhs = [0]
    for k in range(1, order + 1):
        rhs.append(-Fraction(t_traces[k - 1] - Fraction(l_traces[k - 1], 2**k), k))
    return lhs == PowerSeries(order, rhs)


@dataclass(frozen=True)
class PairDivergence:
    """Where two graphs' Ihara data split, for the resolution principle."""

    line_cospectral: bool
    det_first_diff_order: int | None
    correction_first_diff_order: int | None
    diff_values: tuple | None  # (coefficient of g, coefficient of h) at the det order

    def consistent(self) -> bool:
        """For line-cospectral pairs the two divergence orders must agree
        whenever both are observable at the compared order."""
        if not self.line_cospectral:
            return True
        if self.det_first_diff_order is None:
            return self.correction_first_diff_order is None
        return self.det_first_diff_order == self.correction_first_diff_order


def resolution_compare(g: Graph, h: Graph, order: int = DEFAULT_ORDER) -> PairDivergence:
    fg, fh = factorize(g, order), factorize(h, order)
    line_cospectral = fg.line_factor == fh.line_factor
    det_order = first_difference(fg.hashimoto_det, fh.hashimoto_det)
    corr_order = first_difference(fg.correction_series, fh.correction_series)
    values = None
    if det_order is not None:
        values = (fg.hashimoto_det[det_order], fh.hashimoto_det[det_order])
    return PairDivergence(line_cospectral, det_order, corr_order, values)
