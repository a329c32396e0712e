import random
from fractions import Fraction

import pytest

from edgesector.graphs import corpus_graph
from edgesector.edge_space import build_hashimoto, edge_space
from edgesector.matrices import DimensionError, Matrix, det_resolvent
from edgesector.polynomials import Poly, series_log, series_of, ratfunc_reduce, PowerSeries


def naive_polymatrix_det(rows):
    """Cofactor-expansion determinant for matrices with Poly entries.

    Exponential; an independent oracle for small resolvent determinants.
    """
    n = len(rows)
    if n == 0:
        return Poly.one()
    if n == 1:
        return rows[0][0]
    out = Poly.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * naive_polymatrix_det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def resolvent_oracle(mat, scale=1):
    """det(I - w*scale*mat) by direct cofactor expansion over Poly entries."""
    n = mat.nrows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            const = 1 if i == j else 0
            row.append(Poly((const, -scale * mat[i][j])))
        rows.append(row)
    return naive_polymatrix_det(rows)


def test_charpoly_examples():
    assert Matrix.zeros(3, 3).charpoly() == Poly((0, 0, 0, 1))
    assert corpus_graph("K3").adjacency().charpoly() == Poly((-2, -3, 0, 1))
    assert corpus_graph("K2").adjacency().charpoly() == Poly((-1, 0, 1))
    assert Matrix([[]] * 0).charpoly() == Poly.one()


def test_charpoly_vs_faddeev_leverrier():
    rng = random.Random(10)
    for _ in range(40):
        n = rng.randint(1, 12) if rng.random() < 0.3 else rng.randint(1, 6)
        m = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        assert m.charpoly() == m.faddeev_leverrier()


def test_charpoly_rational_entries():
    m = Matrix([[Fraction(1, 2), 1], [0, Fraction(-1, 3)]])
    p = m.charpoly()
    assert p == Poly((Fraction(-1, 6), Fraction(-1, 6), 1))


def test_cayley_hamilton_small_dims():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 6)
        m = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        p = m.charpoly()
        acc = Matrix.zeros(n, n)
        power = Matrix.identity(n)
        for c in p.coeffs:
            acc = acc + power.scaled(c)
            power = power * m
        assert acc == Matrix.zeros(n, n)


def test_det_resolvent_examples():
    t = build_hashimoto(edge_space(corpus_graph("K3")))
    assert det_resolvent(t) == Poly((1, 0, 0, -2, 0, 0, 1))  # (1 - w^3)^2
    assert det_resolvent(t) == resolvent_oracle(t)  # brute-force 6x6 expansion
    assert det_resolvent(Matrix.zeros(4, 4)) == Poly.one()
    line_k3 = corpus_graph("K3").adjacency()
    expect = Poly((1, -1)) * Poly((1, Fraction(1, 2))) ** 2
    assert det_resolvent(line_k3, Fraction(1, 2)) == expect


def test_det_resolvent_vs_oracle_random():
    rng = random.Random(12)
    for _ in range(15):
        n = rng.randint(1, 5)
        m = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        assert det_resolvent(m) == resolvent_oracle(m)


def test_det_resolvent_constant_term_and_reversal():
    rng = random.Random(13)
    for _ in range(10):
        n = rng.randint(1, 6)
        m = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        p = det_resolvent(m)
        assert p[0] == 1
        assert p.degree() <= n
        # coefficients are the reversed charpoly coefficients
        cp = m.charpoly()
        assert all(p[k] == cp[n - k] for k in range(n + 1))


def test_rank_examples():
    for name in ["K3", "C5", "paperG", "star4"]:
        g = corpus_graph(name)
        from edgesector.edge_space import build_incidence

        d, absd = build_incidence(edge_space(g))
        assert d.rank() == g.n - 1  # connected
    c4 = corpus_graph("C4")
    from edgesector.edge_space import build_incidence

    _, absd = build_incidence(edge_space(c4))
    assert absd.rank() == 3  # bipartite: n - 1
    assert Matrix.identity(5).rank() == 5
    assert Matrix.zeros(3, 7).rank() == 0


def test_rank_transpose_and_symmetric_charpoly_valuation():
    rng = random.Random(14)
    for _ in range(15):
        n = rng.randint(1, 6)
        raw = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i):
                raw[i][j] = raw[j][i]
        m = Matrix(raw)
        assert m.rank() == m.transpose().rank()
        p = m.charpoly()
        val = 0
        while p[val] == 0:
            val += 1
        assert m.rank() == n - val  # symmetric: rank = dim - order of x-power


def test_det_matches_charpoly_constant():
    rng = random.Random(15)
    for _ in range(15):
        n = rng.randint(1, 6)
        m = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        p = m.charpoly()
        assert m.det() == (-1) ** n * p[0]


def test_log_trace_identity_random_matrices():
    # series_log(det_resolvent(X)) == -sum w^k/k tr(X^k), exact
    rng = random.Random(16)
    order = 6
    for _ in range(12):
        n = rng.randint(1, 8)
        m = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        p = det_resolvent(m)
        lhs = series_log(series_of(ratfunc_reduce(p, Poly.one()), order))
        traces = m.power_traces(order)
        rhs = PowerSeries(
            order, [0] + [Fraction(-traces[k - 1], k) for k in range(1, order + 1)]
        )
        assert lhs == rhs


def test_dimension_errors():
    with pytest.raises(DimensionError):
        Matrix([[1, 2]]).charpoly()
    with pytest.raises(DimensionError):
        Matrix([[1, 2]]) * Matrix([[1, 2]])
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3, 4]]) + Matrix([[1]])


def test_power_traces():
    a = corpus_graph("K3").adjacency()
    assert a.power_traces(3) == [0, 6, 6]  # tr A, tr A^2 = 2m, tr A^3 = 6 triangles
