import numpy as np
import pytest

from eudx.core import CameraModel, Pose6DoF, project
from eudx.core import rotation as rot
from eudx.errors import (DegenerateHomogeneous, DimMismatch,
                         NotPositiveDefinite, SingularDiagonal,
                         SingularSchur, SingularTriangular)
from eudx.kernels import (BlockingPolicy, BlockStructuredMatrix, OpCounter,
                          backward_substitute, cholesky, forward_substitute,
                          invert_block_structured, kalman_gain,
                          load_matrix_csv, marginalize, mat_mul, project_map,
                          save_matrix_csv, transpose)

POLICIES = [BlockingPolicy(1), BlockingPolicy(4), BlockingPolicy(8), None]


def naive_mat_mul(a, b):
    m, k = a.shape
    n = b.shape[1]
    out = np.zeros((m, n))
    for i in range(m):
        for j in range(n):
            s = 0.0
            for p in range(k):
                s += a[i, p] * b[p, j]
            out[i, j] = s
    return out


def random_spd(rng, n, scale=1.0):
    A = rng.normal(size=(n, n))
    return scale * (A.T @ A) + np.eye(n)


class TestMatMul:
    def test_identity(self):
        rng = np.random.default_rng(0)
        A = rng.normal(size=(6, 6))
        assert np.array_equal(mat_mul(A, np.eye(6)), A)

    def test_camera_shape(self):
        rng = np.random.default_rng(1)
        C = rng.normal(size=(3, 4))
        X = rng.normal(size=(4, 37))
        assert mat_mul(C, X).shape == (3, 37)

    def test_matches_naive_oracle_all_blockings(self):
        rng = np.random.default_rng(2)
        A = rng.normal(size=(17, 13))
        B = rng.normal(size=(13, 9))
        want = naive_mat_mul(A, B)
        for policy in POLICIES:
            got = mat_mul(A, B, policy)
            assert np.max(np.abs(got - want)) < 1e-12

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            mat_mul(np.ones((2, 3)), np.ones((2, 3)))

    def test_blocking_invariance(self):
        rng = np.random.default_rng(3)
        A = rng.normal(size=(23, 31))
        B = rng.normal(size=(31, 11))
        ref = mat_mul(A, B)
        denom = max(1.0, np.max(np.abs(ref)))
        for policy in POLICIES[:-1]:
            assert np.max(np.abs(mat_mul(A, B, policy) - ref)) / denom < 1e-10


class TestTranspose:
    def test_involution(self):
        rng = np.random.default_rng(4)
        A = rng.normal(size=(5, 7))
        assert np.array_equal(transpose(transpose(A)), A)

    def test_symmetric_fixed_point(self):
        rng = np.random.default_rng(5)
        S = random_spd(rng, 6)
        assert np.array_equal(transpose(S), S)

    def test_index_swap_oracle(self):
        rng = np.random.default_rng(6)
        A = rng.normal(size=(5, 7))
        T = transpose(A)
        for i in range(5):
            for j in range(7):
                assert T[j, i] == A[i, j]


class TestCholesky:
    def test_identity(self):
        assert np.array_equal(cholesky(np.eye(4)), np.eye(4))

    def test_diagonal(self):
        got = cholesky(np.diag([4.0, 9.0]))
        assert np.allclose(got, np.diag([2.0, 3.0]), atol=1e-15)

    def test_reconstruction_oracle(self):
        rng = np.random.default_rng(7)
        A = random_spd(rng, 20)
        L = cholesky(A)
        assert np.allclose(np.triu(L, 1), 0.0)
        assert np.all(np.diag(L) > 0)
        rel = np.max(np.abs(L @ L.T - A)) / np.max(np.abs(A))
        assert rel < 1e-9

    def test_not_positive_definite(self):
        with pytest.raises(NotPositiveDefinite):
            cholesky(np.diag([1.0, -1.0]))

    def test_rejects_asymmetric(self):
        with pytest.raises(DimMismatch):
            cholesky(np.array([[1.0, 2.0], [0.0, 1.0]]))


class TestSubstitution:
    def test_identity(self):
        rng = np.random.default_rng(8)
        B = rng.normal(size=(5, 3))
        assert np.array_equal(forward_substitute(np.eye(5), B), B)
        assert np.array_equal(backward_substitute(np.eye(5), B), B)

    def test_scalar(self):
        X = forward_substitute(np.array([[2.0]]), np.array([[4.0]]))
        assert X[0, 0] == 2.0

    def test_matches_dense_solve_oracle(self):
        rng = np.random.default_rng(9)
        L = np.tril(rng.normal(size=(12, 12))) + 5 * np.eye(12)
        B = rng.normal(size=(12, 4))
        X = forward_substitute(L, B)
        want = np.linalg.solve(L, B)
        assert np.max(np.abs(X - want)) / np.max(np.abs(want)) < 1e-9

        U = np.triu(rng.normal(size=(12, 12))) + 5 * np.eye(12)
        X = backward_substitute(U, B)
        want = np.linalg.solve(U, B)
        assert np.max(np.abs(X - want)) / np.max(np.abs(want)) < 1e-9

    def test_singular(self):
        L = np.eye(3)
        L[1, 1] = 0.0
        with pytest.raises(SingularTriangular):
            forward_substitute(L, np.ones((3, 1)))


class TestKalmanGain:
    def test_identity_case(self):
        res = kalman_gain(np.eye(2), np.eye(2), np.eye(2))
        assert np.allclose(res.S, 2 * np.eye(2), atol=1e-15)
        assert np.allclose(res.k_eq, 0.5 * np.eye(2), atol=1e-12)

    def test_no_observability(self):
        P = random_spd(np.random.default_rng(10), 5)
        R = np.eye(3)
        res = kalman_gain(np.zeros((3, 5)), P, R)
        assert np.allclose(res.S, R, atol=1e-15)
        assert np.allclose(res.k_eq, 0.0, atol=1e-15)

    def test_matches_dense_inverse_oracle(self):
        rng = np.random.default_rng(11)
        H = rng.normal(size=(4, 6))
        P = random_spd(rng, 6)
        R = np.eye(4)
        res = kalman_gain(H, P, R, compute_residual=True)
        S = H @ P @ H.T + R
        want = np.linalg.inv(S) @ (H @ P)
        assert np.max(np.abs(res.k_eq - want)) / np.max(np.abs(want)) < 1e-8
        assert res.residual <= 1e-8
        # conventional gain is the transpose of the solved unknown
        K = P @ H.T @ np.linalg.inv(S)
        assert np.allclose(res.gain, K, atol=1e-8)

    def test_s_exactly_symmetric(self):
        rng = np.random.default_rng(12)
        H = rng.normal(size=(7, 9))
        P = random_spd(rng, 9)
        R = random_spd(rng, 7, 0.1)
        R = 0.5 * (R + R.T)
        res = kalman_gain(H, P, R)
        assert np.array_equal(res.S, res.S.T)

    def test_residual_property_random(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            h, n = rng.integers(2, 12), rng.integers(2, 16)
            H = rng.normal(size=(h, n))
            P = random_spd(rng, n)
            R = np.eye(h) * rng.uniform(0.5, 2.0)
            res = kalman_gain(H, P, R, compute_residual=True)
            assert res.residual <= 1e-8

    def test_symmetric_s_flop_bound(self):
        # forming S must cost at most half of a dense H P H^T plus O(h^2)
        rng = np.random.default_rng(14)
        for h, n in [(4, 6), (20, 15), (9, 40), (33, 33)]:
            H = rng.normal(size=(h, n))
            P = random_spd(rng, n)
            R = np.eye(h)
            counter = OpCounter()
            kalman_gain(H, P, R, counter=counter)
            full = 2 * h * n * n + 2 * h * h * n + h * h
            assert counter.tags["innovation_matrix"] <= 0.5 * full + 2 * h * h

    def test_not_positive_definite(self):
        H = np.eye(2)
        P = np.zeros((2, 2))
        R = np.zeros((2, 2))
        with pytest.raises(NotPositiveDefinite):
            kalman_gain(H, P, R)


class TestProjectMap:
    def test_canonical_camera(self):
        C = np.hstack([np.eye(3), np.zeros((3, 1))])
        X = np.array([[1.0], [2.0], [3.0], [1.0]])
        got = project_map(C, X)
        assert np.allclose(got[:, 0], [1 / 3, 2 / 3], atol=1e-15)

    def test_degenerate_w(self):
        C = np.hstack([np.eye(3), np.zeros((3, 1))])
        X = np.array([[1.0], [2.0], [0.0], [1.0]])
        with pytest.raises(DegenerateHomogeneous):
            project_map(C, X)

    def test_matches_pointwise_projection_oracle(self):
        rng = np.random.default_rng(15)
        cam = CameraModel(fx=150.0, fy=140.0, cx=320.0, cy=240.0,
                          baseline=0.2, width=640, height=480)
        q = rot.quat_normalize(rng.normal(size=4))
        pose = Pose6DoF(rng.normal(size=3), q)
        C = cam.projection_matrix(pose)
        pts = pose.apply(np.stack([rng.uniform(-2, 2, 100),
                                   rng.uniform(-2, 2, 100),
                                   rng.uniform(1, 8, 100)], axis=1))
        X = np.vstack([pts.T, np.ones(100)])
        got = project_map(C, X)
        for j in range(100):
            want = project(cam, pose, pts[j])
            assert np.max(np.abs(got[:, j] - want)) < 1e-12


def random_block_structured(rng, n, d=6):
    diag = rng.uniform(0.5, 3.0, size=n)
    B = rng.normal(size=(n, d))
    D0 = rng.normal(size=(d, d))
    schur_floor = B.T @ (B / diag[:, None])
    D = D0.T @ D0 + schur_floor + np.eye(d)
    return BlockStructuredMatrix(diag, B, D)


class TestInvertBlockStructured:
    def test_block_identity(self):
        m = BlockStructuredMatrix(np.ones(1), np.zeros((1, 6)), np.eye(6))
        assert np.allclose(invert_block_structured(m), np.eye(7), atol=1e-12)

    def test_decoupled_blocks(self):
        m = BlockStructuredMatrix(np.full(10, 2.0), np.zeros((10, 6)), 3 * np.eye(6))
        want = np.diag([0.5] * 10 + [1 / 3] * 6)
        assert np.allclose(invert_block_structured(m), want, atol=1e-12)

    def test_matches_dense_inversion_oracle(self):
        rng = np.random.default_rng(16)
        m = random_block_structured(rng, 20)
        got = invert_block_structured(m)
        want = np.linalg.inv(m.as_dense())
        assert np.max(np.abs(got - want)) / np.max(np.abs(want)) < 1e-8
        assert np.max(np.abs(m.as_dense() @ got - np.eye(26))) < 1e-8

    def test_random_instances_up_to_64(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            n = int(rng.integers(1, 59))
            m = random_block_structured(rng, n)
            got = invert_block_structured(m)
            resid = np.max(np.abs(m.as_dense() @ got - np.eye(n + 6)))
            assert resid < 1e-8

    def test_diag_only(self):
        m = BlockStructuredMatrix(np.array([2.0, 4.0]))
        assert np.allclose(invert_block_structured(m), np.diag([0.5, 0.25]))

    def test_singular_diagonal(self):
        m = BlockStructuredMatrix(np.array([1.0, 0.0]), np.zeros((2, 6)), np.eye(6))
        with pytest.raises(SingularDiagonal):
            invert_block_structured(m)

    def test_singular_schur(self):
        m = BlockStructuredMatrix(np.ones(2), np.zeros((2, 6)), np.zeros((6, 6)))
        with pytest.raises(SingularSchur):
            invert_block_structured(m)


def random_joint_system(rng, n, d, r):
    A_mm = random_block_structured(rng, n, d)
    A_mr = rng.normal(size=(n + d, r))
    C0 = rng.normal(size=(r, r))
    Minv = np.linalg.inv(A_mm.as_dense())
    A_rr = C0.T @ C0 + A_mr.T @ Minv @ A_mr + np.eye(r)
    b_m = rng.normal(size=n + d)
    b_r = rng.normal(size=r)
    return A_mm, A_mr, A_rr, b_m, b_r


class TestMarginalize:
    def test_decoupled(self):
        rng = np.random.default_rng(18)
        A_mm = random_block_structured(rng, 5)
        A_rr = random_spd(rng, 4)
        b_m = rng.normal(size=11)
        b_r = rng.normal(size=4)
        red, rhs = marginalize(A_mm, np.zeros((11, 4)), A_rr, b_m, b_r)
        assert np.array_equal(red, A_rr)
        assert np.array_equal(rhs, b_r)

    def test_scalar_hand_case(self):
        A_mm = BlockStructuredMatrix(np.array([2.0]))
        red, rhs = marginalize(A_mm, np.array([[1.0]]), np.array([[3.0]]),
                               np.array([2.0]), np.array([1.0]))
        assert abs(red[0, 0] - 2.5) < 1e-15
        assert abs(rhs[0] - 0.0) < 1e-15

    def test_solution_matches_full_solve_oracle(self):
        rng = np.random.default_rng(19)
        for _ in range(10):
            n, d, r = int(rng.integers(2, 20)), 6, int(rng.integers(2, 10))
            A_mm, A_mr, A_rr, b_m, b_r = random_joint_system(rng, n, d, r)
            red, rhs = marginalize(A_mm, A_mr, A_rr, b_m, b_r)
            x_r = np.linalg.solve(red, rhs)
            M = np.block([[A_mm.as_dense(), A_mr], [A_mr.T, A_rr]])
            full = np.linalg.solve(M, np.concatenate([b_m, b_r]))
            denom = max(1.0, np.max(np.abs(full)))
            assert np.max(np.abs(x_r - full[n + d:])) / denom < 1e-8

    def test_symmetric_output(self):
        rng = np.random.default_rng(20)
        A_mm, A_mr, A_rr, b_m, b_r = random_joint_system(rng, 8, 6, 5)
        red, _ = marginalize(A_mm, A_mr, A_rr, b_m, b_r)
        assert np.max(np.abs(red - red.T)) < 1e-9

    def test_blocking_invariance(self):
        rng = np.random.default_rng(21)
        A_mm, A_mr, A_rr, b_m, b_r = random_joint_system(rng, 12, 6, 7)
        ref, ref_rhs = marginalize(A_mm, A_mr, A_rr, b_m, b_r)
        denom = max(1.0, np.max(np.abs(ref)))
        for policy in POLICIES[:-1]:
            red, rhs = marginalize(A_mm, A_mr, A_rr, b_m, b_r, policy)
            assert np.max(np.abs(red - ref)) / denom < 1e-10
            assert np.max(np.abs(rhs - ref_rhs)) / denom < 1e-10


class TestCsvInterchange:
    def test_roundtrip(self, tmp_path):
        rng = np.random.default_rng(22)
        A = rng.normal(size=(5, 3))
        p = tmp_path / "m.csv"
        save_matrix_csv(p, A)
        assert np.array_equal(load_matrix_csv(p), A)

    def test_fixture_files(self, fixtures_dir):
        # committed fixtures: kernel(input fixtures) must reproduce the
        # stored outputs, which were computed by the independent oracles
        A = load_matrix_csv(fixtures_dir / "matmul_a.csv")
        B = load_matrix_csv(fixtures_dir / "matmul_b.csv")
        want = load_matrix_csv(fixtures_dir / "matmul_ab.csv")
        assert np.max(np.abs(mat_mul(A, B, BlockingPolicy(4)) - want)) < 1e-12

        S = load_matrix_csv(fixtures_dir / "cholesky_a.csv")
        want = load_matrix_csv(fixtures_dir / "cholesky_l.csv")
        assert np.max(np.abs(cholesky(S) - want)) < 1e-9

        H = load_matrix_csv(fixtures_dir / "gain_h.csv")
        P = load_matrix_csv(fixtures_dir / "gain_p.csv")
        R = load_matrix_csv(fixtures_dir / "gain_r.csv")
        want = load_matrix_csv(fixtures_dir / "gain_keq.csv")
        res = kalman_gain(H, P, R)
        assert np.max(np.abs(res.k_eq - want)) < 1e-8
