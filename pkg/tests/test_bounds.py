import cmath
import random

import pytest

from edgesector.graphs import corpus, corpus_graph
from edgesector.edge_space import edge_space, sector_blocks
from edgesector.matrices import Matrix
from edgesector.bounds import (
    check_bounds,
    hashimoto_spectrum,
    hermitian_part_spectrum_check,
    spectral_radius,
    sym_spectrum,
)
from conftest import random_connected_graph


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def test_sym_spectrum_line_k3():
    eig = sym_spectrum(sector_blocks(edge_space(corpus_graph("K3"))).L)
    assert len(eig) == 3
    assert close(eig[0], -1, 1e-10) and close(eig[1], -1, 1e-10) and close(eig[2], 2, 1e-10)


def test_sym_spectrum_identity():
    assert all(close(x, 1) for x in sym_spectrum(Matrix.identity(6)))


def test_sym_spectrum_laplacian_c4():
    g = corpus_graph("C4")
    eig = sym_spectrum(g.degree_matrix() - g.adjacency())
    expect = [0, 2, 2, 4]
    assert all(close(a, b, 1e-10) for a, b in zip(eig, expect))


def test_sym_spectrum_rejects_asymmetric():
    with pytest.raises(ValueError):
        sym_spectrum(Matrix([[0, 1], [0, 0]]))


def test_sym_spectrum_empty_and_trace():
    assert sym_spectrum(Matrix.zeros(0, 0)) == []
    rng = random.Random(60)
    for _ in range(10):
        n = rng.randint(1, 8)
        raw = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i):
                raw[i][j] = raw[j][i]
        m = Matrix(raw)
        eig = sym_spectrum(m)
        assert close(sum(eig), float(m.trace()), 1e-8)


def test_tree_spectrum_all_zero():
    for name in ["K2", "P3", "star5"]:
        s = hashimoto_spectrum(corpus_graph(name))
        assert all(z == 0 for z in s.eigenvalues)
        assert len(s.eigenvalues) == 2 * corpus_graph(name).m
        assert s.max_residual == 0.0


def test_cycle_spectrum_roots_of_unity():
    for n in [4, 5, 6, 8]:
        g = corpus_graph(f"C{n}")
        s = hashimoto_spectrum(g)
        assert len(s.eigenvalues) == 2 * n
        assert all(m == 2 for _, m in s.clusters)
        assert len(s.clusters) == n
        roots = sorted((z for z, _ in s.clusters), key=lambda z: cmath.phase(z))
        expect = sorted(
            (cmath.exp(2j * cmath.pi * k / n) for k in range(n)),
            key=lambda z: cmath.phase(z),
        )
        assert all(abs(a - b) < 1e-9 for a, b in zip(roots, expect))


def test_paper_graph_spectrum():
    s = hashimoto_spectrum(corpus_graph("paperG"))
    assert len(s.eigenvalues) == 44
    assert s.max_residual < 1e-8
    assert abs(sum(s.eigenvalues)) < 1e-9  # tr T = 0


def test_spectrum_multiplicity_of_trivial_roots():
    # connected non-bipartite: eigenvalue 1 with multiplicity m - n + 1;
    # -1 shows up with multiplicity ker|D| = m - n
    g = corpus_graph("petersen")
    s = hashimoto_spectrum(g)
    mult = {round(z.real, 6): m for z, m in s.clusters if abs(z.imag) < 1e-9}
    assert mult[1.0] == 6
    assert mult[-1.0] == 5


def test_bounds_corpus():
    for entry in corpus():
        rep = check_bounds(entry.graph)
        assert rep.ok, (entry.name, rep.violations)


def test_bounds_random():
    rng = random.Random(61)
    for _ in range(15):
        g = random_connected_graph(rng, n_max=8)
        rep = check_bounds(g)
        assert rep.ok, rep.violations


def test_star_bound_beats_perron():
    rep = check_bounds(corpus_graph("star5"))
    assert close(rep.rho_L / 2, 2.0, 1e-9)  # rho(L(K_{1,5})) = 4
    assert rep.d_max - 1 == 4
    assert rep.rho_L / 2 < rep.d_max - 1
    assert rep.rho_T == 0.0  # star Hashimoto is nilpotent


def test_cycle_real_bound_tight():
    for n in [5, 6, 7]:
        rep = check_bounds(corpus_graph(f"C{n}"))
        assert close(rep.re_max, 1.0, 1e-9)
        assert close(rep.rho_L / 2, 1.0, 1e-9)


def test_sigma_consistency():
    # sigma_max(M)^2 equals the top eigenvalue of M^T M
    for name in ["K4", "exA_G1", "C6"]:
        g = corpus_graph(name)
        blocks = sector_blocks(edge_space(g))
        top = max(sym_spectrum(blocks.M.transpose() * blocks.M))
        rep = check_bounds(g)
        assert close(rep.sigma_max_M**2, top, 1e-8)


def test_hermitian_part_split():
    for name in ["K3", "C5", "K4", "exB_G2", "star4", "paperH"]:
        assert hermitian_part_spectrum_check(corpus_graph(name))


def test_spectral_radius_values():
    g = corpus_graph("K4")
    assert close(spectral_radius(g.adjacency()), 3.0, 1e-9)
    assert close(spectral_radius(g.degree_matrix() - g.adjacency()), 4.0, 1e-9)
