import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from progen.ffalg import (
    Echelon,
    FieldSpec,
    Matrix,
    SparseMatrix,
    canonical_modulus,
    embedding,
    gf,
    is_irreducible,
    kernel,
    kron,
    rank,
    rref,
    solve,
)
from progen.ffalg import poly
from progen.ffalg.gf2 import pack, rank_packed, unpack

FIELDS = [2, 3, 4, 5, 7, 8, 9]


def test_rref_examples():
    R, r, piv = rref(Matrix.of(5, np.eye(3, dtype=int).tolist()))
    assert r == 3 and piv == [0, 1, 2]
    assert rref(Matrix.of(5, [[0, 0], [0, 0]]))[1] == 0
    R, r, piv = rref(Matrix.of(5, [[1, 2], [2, 4]]))
    assert r == 1 and piv == [0]
    assert R.entries.tolist() == [[1, 2], [0, 0]]


def test_kernel_examples():
    assert kernel(Matrix.of(3, np.eye(3, dtype=int).tolist())).rows == 0
    assert rank(kernel(Matrix.of(3, np.zeros((4, 4), dtype=int).tolist()))) == 4
    K = kernel(Matrix.of(2, [[1, 1]]))
    assert K.entries.tolist() == [[1, 1]]


def test_solve_examples():
    F = gf(7)
    b = np.array([3, 5, 6])
    assert solve(Matrix(F, F.eye(3)), b).tolist() == b.tolist()
    assert solve(Matrix.of(2, [[0]]), [1]) is None
    assert solve(Matrix.of(3, [[1, 2], [0, 1]]), [0, 1]).tolist() == [1, 1]


def test_kron_examples():
    F = gf(2)
    assert kron(Matrix(F, F.eye(2)), Matrix(F, F.eye(3))) == Matrix(F, F.eye(6))
    A = Matrix.of(2, [[1, 0, 1], [1, 1, 0]])
    assert kron(A, Matrix.of(2, [[1]])) == A
    U = Matrix.of(2, [[1, 1], [0, 1]])
    expected = [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]]
    assert kron(U, U).entries.tolist() == expected
    with pytest.raises(ValueError):
        kron(U, Matrix.of(3, [[1]]))


def test_canonical_moduli():
    assert canonical_modulus(2, 2) == (1, 1, 1)
    assert canonical_modulus(2, 3) == (1, 1, 0, 1)
    assert canonical_modulus(3, 2) == (1, 0, 1)
    assert canonical_modulus(5, 2) == (2, 0, 1)
    assert FieldSpec.canonical(49) == FieldSpec.canonical(49)


@pytest.mark.parametrize("p,e", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 8)])
def test_canonical_modulus_irreducible_against_sympy(p, e):
    m = canonical_modulus(p, e)
    x = sympy.symbols("x")
    f = sympy.Poly(sum(c * x**i for i, c in enumerate(m)), x, modulus=p)
    assert f.is_irreducible
    assert is_irreducible(m, p)
    # lexicographic minimality among irreducibles of the same degree
    for code in range(sum(c * p ** (i) for i, c in enumerate(m[:-1]))):
        coeffs = [(code // p**i) % p for i in range(e)] + [1]
        assert not is_irreducible(coeffs, p)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1)).validate()


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25])
def test_field_axioms(q):
    F = gf(q)
    a = np.arange(q)
    M, A = F.mul_table, F.add_table
    assert (M[a[:, None], a[None, :]] == M.T).all()
    assert (A[A[a[:, None, None], a[None, :, None]], a[None, None, :]] == A[a[:, None, None], A[a[None, :, None], a[None, None, :]]]).all()
    lhs = M[a[:, None, None], A[a[None, :, None], a[None, None, :]]]
    rhs = A[M[a[:, None, None], a[None, :, None]], M[a[:, None, None], a[None, None, :]]]
    assert (lhs == rhs).all()
    assert all(M[x, F.inv_table[x]] == 1 for x in range(1, q))
    g = F.primitive_element()
    assert len({F.pow(g, k) for k in range(q - 1)}) == q - 1


def test_embedding():
    for small, big in [(4, 16), (2, 8), (3, 9), (9, 81)]:
        Fs, Fb = gf(small), gf(big)
        emb = embedding(Fs, Fb)
        a = np.arange(small)
        assert (emb[Fs.mul_table[a[:, None], a[None, :]]] == Fb.mul_table[emb[a][:, None], emb[a][None, :]]).all()
        assert (emb[Fs.add_table[a[:, None], a[None, :]]] == Fb.add_table[emb[a][:, None], emb[a][None, :]]).all()


@settings(max_examples=40, deadline=None)
@given(q=st.sampled_from(FIELDS), m=st.integers(0, 40), n=st.integers(0, 40), seed=st.integers(0, 2**31), low=st.booleans())
def test_rank_nullity(q, m, n, seed, low):
    F = gf(q)
    rng = np.random.default_rng(seed)
    if low and m and n:
        k = int(rng.integers(0, min(m, n) + 1))
        A = F.matmul(F.random((m, k), rng), F.random((k, n), rng))
    else:
        A = F.random((m, n), rng)
    M = Matrix(F, A.reshape(m, n))
    R, r, piv = rref(M)
    K = kernel(M)
    assert r == rank(R) == n - K.rows
    assert not F.matmul(A.reshape(m, n), K.entries.T).any()
    assert rank(K) == K.rows
    # row space preserved
    assert rank(Matrix(F, np.vstack([A.reshape(m, n), R.entries]))) == r


@pytest.mark.parametrize("q", FIELDS)
def test_rank_nullity_200(q):
    F = gf(q)
    rng = np.random.default_rng(q)
    A = F.matmul(F.random((200, 150), rng), F.random((150, 200), rng))
    r = rank(Matrix(F, A))
    assert r == 200 - kernel(Matrix(F, A)).rows
    assert r <= 150


@settings(max_examples=40, deadline=None)
@given(q=st.sampled_from(FIELDS), m=st.integers(1, 30), n=st.integers(1, 30), seed=st.integers(0, 2**31))
def test_solve_round_trip(q, m, n, seed):
    F = gf(q)
    rng = np.random.default_rng(seed)
    A = F.random((m, n), rng)
    x = F.random(n, rng)
    b = F.matmul(A, x)
    x2 = solve(Matrix(F, A), b)
    assert x2 is not None and (F.matmul(A, x2) == b).all()


@settings(max_examples=30, deadline=None)
@given(q=st.sampled_from(FIELDS), seed=st.integers(0, 2**31), density=st.floats(0.01, 0.5))
def test_sparse_dense_agree(q, seed, density):
    F = gf(q)
    rng = np.random.default_rng(seed)
    A = (F.random((50, 40), rng) * (rng.random((50, 40)) < density)).astype(np.uint8)
    S = SparseMatrix.from_dense(F, A)
    assert S == A
    assert S.rank() == rank(Matrix(F, A))
    assert S.transpose().rank() == S.rank()


def test_sparse_duplicates_sum():
    F = gf(3)
    S = SparseMatrix(F, (2, 2), [0, 0, 1], [0, 0, 1], [1, 2, 2])
    assert S.to_dense().tolist() == [[0, 0], [0, 2]]


@settings(max_examples=20, deadline=None)
@given(q=st.sampled_from(FIELDS), seed=st.integers(0, 2**31))
def test_kron_mixed_product(q, seed):
    F = gf(q)
    rng = np.random.default_rng(seed)
    A, B, C, D = (Matrix(F, F.random(s, rng)) for s in [(2, 3), (3, 2), (3, 4), (2, 3)])
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


def test_gf2_packing():
    rng = np.random.default_rng(0)
    A = (rng.random((70, 300)) < 0.3).astype(np.uint8)
    assert (unpack(pack(A), 300) == A).all()
    F = gf(2)
    B = F.matmul(F.random((400, 90), rng), F.random((90, 300), rng))
    E = Echelon(F, 300)
    E.add(B)
    assert rank_packed(B) == E.rank == 90


def test_matrix_text_round_trip():
    M = Matrix.of(9, [[0, 8, 3], [4, 5, 6]])
    text = M.to_text()
    assert text.splitlines()[0] == "9 2 3"
    assert Matrix.from_text(text) == M
    with pytest.raises(ValueError):
        Matrix.from_text("3 1 2\n0 3\n")


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_charpoly_cayley_hamilton_and_factor(q):
    F = gf(q)
    rng = np.random.default_rng(q)
    for n in [1, 5, 12]:
        A = F.random((n, n), rng)
        cp = poly.charpoly(F, A)
        assert poly.deg(cp) == n
        assert not poly.eval_matrix(F, cp, A).any()
        prod = np.array([1], np.uint8)
        for g, mult in poly.factor(F, cp):
            assert poly.distinct_degree(F, g)[0][1] == poly.deg(g)
            for _ in range(mult):
                prod = poly.mul(F, prod, g)
        assert (prod == cp).all()


def test_charpoly_matches_sympy():
    rng = np.random.default_rng(5)
    x = sympy.symbols("x")
    for p in [2, 3, 7]:
        F = gf(p)
        A = F.random((6, 6), rng)
        ref = sympy.Matrix(A.astype(int).tolist()).charpoly(x)
        ref = sympy.Poly(ref.as_expr(), x, modulus=p)
        assert [int(c) % p for c in ref.all_coeffs()[::-1]] == [int(c) for c in poly.charpoly(F, A)]
