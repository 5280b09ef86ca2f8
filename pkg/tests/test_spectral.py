"""Numeric spectral layer: clustering, eigen multisets, joint spectra."""

import numpy as np
import pytest

from monogamy.diagrams import (
    SiteOperator,
    jm_sum_brauer,
    jm_sum_sym,
    pair_operators,
    projectors,
)
from monogamy.extendibility import p_w_complete
from monogamy.graphs import edge_average_hamiltonian, make_family
from monogamy.spectral import cluster, joint_spectrum, lambda_max, sym_eigen


class TestCluster:
    def test_groups_within_tolerance(self):
        reps, counts = cluster([1.0, 1.0 + 1e-10, 2.0, 2.0, 3.0], tol=1e-8)
        assert reps == (1.0, 2.0, 3.0)
        assert counts == (2, 2, 1)

    def test_sorts_input(self):
        reps, counts = cluster([3.0, 1.0, 2.0])
        assert reps == (1.0, 2.0, 3.0)
        assert counts == (1, 1, 1)


class TestSymEigen:
    def test_flip_spectrum(self):
        _, _, f = pair_operators(2)
        spec = sym_eigen(f)
        assert spec.as_pairs() == [
            pytest.approx((-1.0, 1)),
            pytest.approx((1.0, 3)),
        ]

    def test_w_spectrum(self):
        w, _, _ = pair_operators(2)
        spec = sym_eigen(w)
        assert spec.eigenvalues == pytest.approx((0.0, 2.0), abs=1e-12)
        assert spec.multiplicities == (3, 1)

    def test_reconstruction(self):
        _, p_11, _ = projectors(3)
        h = edge_average_hamiltonian(make_family("complete", 3), p_11)
        _, w, v = sym_eigen(h, vectors=True)
        dense = h.to_dense()
        assert np.max(np.abs(v @ np.diag(w) @ v.T - dense)) < 1e-8

    def test_jm_sym_42_multiset(self):
        # two-row labels of size 4: contents 6, 2, 0 with total dims 5, 9, 2
        spec = sym_eigen(jm_sum_sym(4, 2))
        got = {round(v): m for v, m in spec.as_pairs()}
        assert got == {6: 5, 2: 9, 0: 2}
        assert spec.dimension == 16

    def test_rejects_non_symmetric(self):
        with pytest.raises(ValueError):
            sym_eigen(SiteOperator(1, 2, {(0, 1): 1}))


class TestLambdaMax:
    def test_complete_graph_werner(self):
        h = edge_average_hamiltonian(make_family("complete", 3), projectors(2)[1])
        assert lambda_max(h) == pytest.approx(float(p_w_complete(3, 2)), abs=1e-12)

    def test_projector(self):
        _, p_11, _ = projectors(2)
        assert lambda_max(p_11) == pytest.approx(1.0, abs=1e-12)

    def test_sparse_path_large_dimension(self):
        # dim 4096 exceeds the dense cutoff and exercises the Lanczos branch;
        # the top eigenvalue of the transposition sum is the full-row content
        assert lambda_max(jm_sum_sym(12, 2)) == pytest.approx(66.0, abs=1e-7)


class TestJointSpectrum:
    def test_two_site_qubit_pairs(self):
        js = joint_spectrum(jm_sum_sym(2, 2), jm_sum_brauer(2, 2))
        got = {
            (round(a), round(b)): m for (a, b), m in zip(js.pairs, js.multiplicities)
        }
        assert got == {(-1, -1): 1, (1, -1): 1, (1, 1): 2}
        assert js.dimension == 4

    def test_rejects_non_commuting(self):
        _, _, f = pair_operators(2)
        diag = SiteOperator(2, 2, {(i, i): i for i in range(4)})
        with pytest.raises(ValueError):
            joint_spectrum(f, diag)

    def test_rejects_shape_mismatch(self):
        a = SiteOperator.identity(2, 2)
        b = SiteOperator.identity(3, 2)
        with pytest.raises(ValueError):
            joint_spectrum(a, b)
