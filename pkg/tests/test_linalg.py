import numpy as np
import pytest

from ringforge import GF
from ringforge import linalg as la
from ringforge.gl import det_batch, enumerate_gl, gl_generators, gl_order

from oracles import raw_gl


def random_matrices(F, s, count, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, F.q, size=(count, s, s), dtype=np.int64)


def random_invertible(F, s, seed):
    rng = np.random.default_rng(seed)
    while True:
        A = rng.integers(0, F.q, size=(s, s), dtype=np.int64)
        if la.det(F, A) != 0:
            return A


# -- rref ------------------------------------------------------------------

@pytest.mark.parametrize("q,r", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
def test_rref_properties(q, r):
    F = GF(q, r)
    for i, M in enumerate(random_matrices(F, 3, 30, seed=q * 10 + r)):
        R, pivots = la.rref(F, M)
        assert len(pivots) == la.rank(F, M)
        assert list(pivots) == sorted(pivots)
        # pivot columns carry unit entries with zeros elsewhere
        for row, col in enumerate(pivots):
            assert R[row, col] == 1
            assert (np.delete(R[:, col], row) == 0).all()
        # row space unchanged: stacking adds no rank
        stacked = np.vstack([M, R[: len(pivots)]])
        assert la.rank(F, stacked) == len(pivots)
        # idempotent
        R2, piv2 = la.rref(F, R)
        assert np.array_equal(R, R2) and list(piv2) == list(pivots)


@pytest.mark.parametrize("q,r", [(3, 1), (2, 2)])
def test_rref_batch_matches_scalar(q, r):
    F = GF(q, r)
    stack = np.random.default_rng(5).integers(0, F.q, size=(60, 2, 4), dtype=np.int64)
    R, ranks = la.rref_batch(F, stack)
    for i in range(len(stack)):
        Ri, piv = la.rref(F, stack[i])
        assert np.array_equal(R[i], Ri)
        assert ranks[i] == len(piv)


# -- inverse, det, solve ---------------------------------------------------

@pytest.mark.parametrize("q,r", [(2, 1), (3, 1), (5, 1), (2, 2)])
def test_inverse_round_trip(q, r):
    F = GF(q, r)
    I = la.identity(3)
    for seed in range(8):
        A = random_invertible(F, 3, seed)
        assert np.array_equal(la.mat_mul(F, A, la.inv_mat(F, A)), I)
        assert np.array_equal(la.mat_mul(F, la.inv_mat(F, A), A), I)


def test_singular_rejected():
    F = GF(3)
    with pytest.raises(ValueError, match="singular"):
        la.inv_mat(F, la.mat(F, [[1, 2], [2, 1]]))  # det = 1 - 4 = 0 mod 3


@pytest.mark.parametrize("q,r", [(5, 1), (2, 2)])
def test_det_multiplicative(q, r):
    F = GF(q, r)
    for seed in range(10):
        A = random_matrices(F, 3, 1, seed)[0]
        B = random_matrices(F, 3, 1, seed + 100)[0]
        assert la.det(F, la.mat_mul(F, A, B)) == F.mul(la.det(F, A), la.det(F, B))


def test_det_identity_and_swap():
    F = GF(7)
    assert la.det(F, la.identity(4)) == 1
    M = la.identity(4)[[1, 0, 2, 3]]
    assert la.det(F, M) == F.neg(1)


def test_solve_round_trip():
    F = GF(3, 2)
    for seed in range(6):
        A = random_invertible(F, 3, seed)
        x = np.random.default_rng(seed).integers(0, 9, size=3, dtype=np.int64)
        b = la.mat_vec(F, A, x)
        assert np.array_equal(la.solve(F, A, b), x)


# -- kron and vec-action ---------------------------------------------------

def test_kron_mixed_product():
    F = GF(3)
    rng = np.random.default_rng(11)
    A, B, C, D = (rng.integers(0, 3, size=(2, 2), dtype=np.int64) for _ in range(4))
    left = la.mat_mul(F, la.kron(F, A, B), la.kron(F, C, D))
    right = la.kron(F, la.mat_mul(F, A, C), la.mat_mul(F, B, D))
    assert np.array_equal(left, right)


def test_kron_batch_matches_scalar():
    F = GF(2, 2)
    C = np.random.default_rng(3).integers(0, 4, size=(5, 2, 2), dtype=np.int64)
    K = la.kron_batch(F, C)
    for i in range(5):
        assert np.array_equal(K[i], la.kron(F, C[i], C[i]))


def test_vec_action_is_congruence():
    # vec(C^T A C) = vec(A) . (C kron C)
    F = GF(5)
    rng = np.random.default_rng(9)
    for seed in range(5):
        A = rng.integers(0, 5, size=(3, 3), dtype=np.int64)
        C = random_invertible(F, 3, seed + 50)
        direct = la.mat_mul(F, la.mat_mul(F, la.transpose(C), A), C)
        via_vec = la.linmap_apply(F, A.reshape(1, 9), la.kron(F, C, C)).reshape(3, 3)
        assert np.array_equal(direct, via_vec)


# -- integer codes ---------------------------------------------------------

def test_encode_decode_round_trip():
    rng = np.random.default_rng(2)
    rows = rng.integers(0, 3, size=(20, 5), dtype=np.int64)
    codes = la.encode_rows(rows, 3)
    assert np.array_equal(la.decode_codes(codes, 3, 5), rows)


def test_encode_is_msf_base_q():
    # first coordinate is the most significant digit
    assert la.encode_rows(np.array([[1, 0, 0]]), 5)[0] == 25
    assert la.encode_rows(np.array([[0, 0, 1]]), 5)[0] == 1
    assert la.encode_rows(np.array([[2, 1]]), 3)[0] == 7


# -- GL --------------------------------------------------------------------

def test_gl_order_values():
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 48
    assert gl_order(2, 3) == 168
    assert gl_order(4, 2) == 180
    assert gl_order(3, 3) == 11232


@pytest.mark.parametrize("q,s", [(2, 2), (3, 2), (2, 3)])
def test_enumerate_gl_against_raw(q, s):
    F = GF(q)
    G = enumerate_gl(F, s)
    assert len(G) == gl_order(q, s)
    got = {tuple(C.ravel()) for C in G}
    want = {tuple(C.ravel()) for C in raw_gl(q, s)}
    assert got == want


def test_enumerate_gl_extension_field():
    F = GF(2, 2)
    G = enumerate_gl(F, 2)
    assert len(G) == gl_order(4, 2)
    assert (det_batch(F, G) != 0).all()


def test_det_batch_matches_scalar():
    F = GF(3)
    stack = np.random.default_rng(4).integers(0, 3, size=(40, 3, 3), dtype=np.int64)
    d = det_batch(F, stack)
    for i in range(40):
        assert d[i] == la.det(F, stack[i])


@pytest.mark.parametrize("q,r,s", [(2, 1, 2), (3, 1, 2), (2, 1, 3), (2, 2, 2)])
def test_generators_span_group(q, r, s):
    F = GF(q, r)
    gens = gl_generators(F, s)
    assert (det_batch(F, gens) != 0).all()
    frontier = [la.identity(s)]
    seen = {tuple(la.identity(s).ravel())}
    while frontier:
        nxt = []
        for M in frontier:
            for g in gens:
                P = la.mat_mul(F, M, g)
                key = tuple(P.ravel())
                if key not in seen:
                    seen.add(key)
                    nxt.append(P)
        frontier = nxt
    assert len(seen) == gl_order(F.q, s)
