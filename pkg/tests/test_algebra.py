import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerkit import algebra as alg
from brauerkit import cyclic as cyc
from brauerkit.errors import DescriptorMismatch, UnsupportedError, ValidationError
from brauerkit.fields import QQ, finite_field, parse_extension

from oracles import hamilton_mul, matmul_mod, matrix_unit, quaternion_norm, rank_mod, rank_q, right_ideal_dims_matrix

F2, F3, F5 = finite_field(2), finite_field(3), finite_field(5)


def hamilton():
    return cyc.build_cyclic_algebra(parse_extension("Q(i)/Q"), QQ(-1))


def test_matrix_units_against_oracle():
    n, p = 2, 3
    A = alg.matrix_algebra(F3, n)
    for i in range(n * n):
        for j in range(n * n):
            X = matrix_unit(n, i // n, i % n)
            Y = matrix_unit(n, j // n, j % n)
            Z = matmul_mod(X, Y, p)
            assert list(A.table[i][j]) == [Z[a][b] for a in range(n) for b in range(n)]
    e12, e21 = A.basis_vector(1), A.basis_vector(2)
    assert A.mul(e12, e21) == A.basis_vector(0)


def test_unit_and_associativity_checks():
    A = alg.matrix_algebra(F3, 2)
    x = (1, 2, 0, 1)
    assert A.mul(A.unit, x) == x and A.mul(x, A.unit) == x
    # e1 * e0 = e1 breaks the unit law for the claimed unit e1
    with pytest.raises(ValidationError):
        alg.StructureConstantAlgebra(F3, [[[1, 0], [0, 1]], [[0, 1], [1, 1]]], unit=[0, 1])
    # e0 unit, e1 e2 = e1, e2 e2 = e1: (e1 e2) e2 = e1 but e1 (e2 e2) = 0
    e = lambda i: [1 if k == i else 0 for k in range(3)]
    z = [0, 0, 0]
    table = [[e(0), e(1), e(2)], [e(1), z, e(1)], [e(2), z, e(1)]]
    with pytest.raises(ValidationError, match="associative"):
        alg.StructureConstantAlgebra(F3, table)
    with pytest.raises(ValidationError, match="unit"):
        alg.StructureConstantAlgebra(F3, [[z[:2], z[:2]], [z[:2], z[:2]]])


def test_quaternion_table_matches_oracle():
    for a, b in [(-1, -1), (2, 3), (-1, 5)]:
        H = alg.quaternion_algebra(QQ, a, b)
        for i in range(4):
            for j in range(4):
                x = tuple(1 if k == i else 0 for k in range(4))
                y = tuple(1 if k == j else 0 for k in range(4))
                assert tuple(H.mul(H.basis_vector(i), H.basis_vector(j))) == tuple(map(Fraction, hamilton_mul(x, y, a, b)))
        x = (QQ(1), QQ(2), QQ(-1), QQ(3))
        assert H.nrd.value(x) == quaternion_norm((1, 2, -1, 3), a, b)


def test_cyclic_presentation_twists():
    K = parse_extension("F9/F3")
    A = cyc.build_cyclic_algebra(K, 2)
    m = 2
    for j in range(m):
        # u * x^j = sigma(x^j) * u
        xj = A.basis_vector(j)
        u = A.basis_vector(m)
        sig = K.sigma(K.pow(K.gen, j))
        want = [0] * 4
        for jj, c in enumerate(K.to_coords(sig)):
            want[m + jj] = c
        assert list(A.mul(u, xj)) == want


def test_center_examples():
    assert alg.center(alg.matrix_algebra(F3, 2)).dim == 1
    assert alg.center(alg.matrix_algebra(F3, 2)).basis == [(1, 0, 0, 1)]
    F9 = parse_extension("F9/F3")
    assert alg.center(alg.extension_as_algebra(F9)).dim == 2
    assert alg.center(hamilton()).dim == 1


def test_radical_examples():
    assert alg.radical(alg.matrix_algebra(F5, 2)).dim == 0
    R = alg.radical(alg.truncated_polynomials(QQ, 2))
    assert R.dim == 1 and R.basis == [(QQ(0), QQ(1))]
    assert alg.radical(alg.field_as_algebra(F5)).dim == 0
    assert alg.radical(alg.field_as_algebra(QQ)).dim == 0
    # small characteristic: trace form is degenerate but the fallback decides
    assert alg.radical(alg.matrix_algebra(F2, 3)).dim == 0
    assert alg.radical(alg.matrix_algebra(F3, 2)).dim == 0
    assert alg.radical(alg.truncated_polynomials(F2, 2)).dim == 1


def test_radical_small_characteristic_search():
    # F4 (x) F4 = F4 x F4 over F2 has a totally degenerate trace form
    A = alg.extension_as_algebra(parse_extension("F4/F2"))
    assert alg.radical(alg.tensor_product(A, A)).dim == 0
    T = alg.tensor_product(alg.truncated_polynomials(F2, 2), alg.matrix_algebra(F2, 2))
    assert alg.radical(T).dim == 4


def test_radical_small_characteristic_unsupported():
    F16 = finite_field(16)
    T = alg.tensor_product(alg.truncated_polynomials(F16, 2), alg.matrix_algebra(F16, 2))
    with pytest.raises(UnsupportedError):
        alg.radical(T)


def test_central_simple_examples():
    assert alg.is_central_simple(alg.matrix_algebra(F2, 3))
    assert alg.degree(alg.matrix_algebra(F2, 3)) == 3
    assert not alg.is_central_simple(alg.extension_as_algebra(parse_extension("F4/F2")))
    H = hamilton()
    assert alg.is_central_simple(H) and H.dim == 4


def test_tensor_examples():
    H3 = alg.quaternion_algebra(F3, -1, -1)
    T = alg.tensor_product(H3, H3)
    T.verify()
    assert T.dim == 16 and alg.is_central_simple(T)
    assert alg.find_zero_divisor(T).is_proved
    A = alg.matrix_algebra(F3, 2)
    Ak = alg.tensor_product(A, alg.field_as_algebra(F3))
    assert Ak.table == A.table
    with pytest.raises(DescriptorMismatch):
        alg.tensor_product(A, alg.matrix_algebra(F5, 2))


def test_opposite_examples():
    C = alg.extension_as_algebra(parse_extension("F9/F3"))
    assert alg.opposite(C).table == C.table
    O = alg.opposite(alg.matrix_algebra(F3, 2))
    assert alg.is_central_simple(O) and O.dim == 4


def test_sandwich_examples():
    assert alg.sandwich_map(alg.field_as_algebra(F3)).matrix == [[1]]
    S = alg.sandwich_map(alg.matrix_algebra(F3, 2))
    assert S.rank == 16 and S.full
    S = alg.sandwich_map(hamilton())
    assert S.rank == 16 and rank_q(S.matrix) == 16
    S = alg.sandwich_map(alg.matrix_algebra(F2, 3))
    assert S.rank == 81 == rank_mod(S.matrix, 2)
    S = alg.sandwich_map(alg.truncated_polynomials(QQ, 2))
    assert not S.full


def test_zero_divisor_examples():
    A = alg.matrix_algebra(F2, 2)
    e11, e22 = A.basis_vector(0), A.basis_vector(3)
    assert A.is_zero(A.mul(e11, e22))
    assert alg.find_zero_divisor(A).is_proved
    H3 = alg.quaternion_algebra(F3, -1, -1)
    v = alg.find_zero_divisor(H3)
    x, y = v.payload["x"], v.payload["y"]
    assert v.is_proved and H3.is_zero(H3.mul(x, y)) and not H3.is_zero(x) and not H3.is_zero(y)
    assert quaternion_norm((1, 1, 1, 0)) % 3 == 0
    v = alg.find_zero_divisor(hamilton(), bound=10)
    assert v.is_refuted and v.kind == "sign certificate"
    assert alg.find_zero_divisor(alg.extension_as_algebra(parse_extension("F9/F3"))).is_refuted


def test_zero_divisor_search_exhaustive_refutation():
    # a finite division algebra is a field; F9 over F3 has no zero divisors
    C = alg.extension_as_algebra(parse_extension("F9/F3"))
    v = alg.search_zero_divisor(C)
    assert v.is_refuted and v.kind == "exhaustive enumeration"


def test_minimal_right_ideals():
    A = alg.matrix_algebra(F2, 2)
    I = alg.minimal_right_ideal(A, A.basis_vector(0))
    assert I.dim == 2 and set(I.basis) == {(1, 0, 0, 0), (0, 1, 0, 0)}
    A3 = alg.matrix_algebra(F2, 3)
    for I in alg.right_ideals(A3):
        if I.dim:
            J = alg.minimal_right_ideal(A3, I.basis[0])
            assert J.dim == 3
    with pytest.raises(ValidationError):
        alg.minimal_right_ideal(hamilton())


def test_right_ideal_dimensions():
    assert alg.right_ideal_dimensions(alg.matrix_algebra(F2, 2)) == {0, 2, 4} == right_ideal_dims_matrix(2, 2)
    assert alg.right_ideal_dimensions(alg.matrix_algebra(F2, 3)) == {0, 3, 6, 9} == right_ideal_dims_matrix(3, 2)
    assert alg.right_ideal_dimensions(alg.field_as_algebra(F3)) == {0, 1}


def test_complements():
    A = alg.matrix_algebra(F2, 2)
    ideals = alg.right_ideals(A)
    for I in ideals:
        J = alg.complement_right_ideal(A, I, ideals)
        assert J is not None and I.dim + J.dim == 4


def test_json_round_trip_algebra():
    for A in (alg.matrix_algebra(F3, 2), hamilton(), alg.quaternion_algebra(F5, 2, 3)):
        B = alg.StructureConstantAlgebra.from_json(json.loads(json.dumps(A.to_json())))
        assert B == A and B.names == A.names


def test_from_json_literals():
    obj = {"field": "Q", "basis": ["1", "e"], "unit": 0,
           "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]]}
    A = alg.StructureConstantAlgebra.from_json(obj)
    assert A.dim == 2 and alg.radical(A).dim == 1
    with pytest.raises(ValidationError):
        alg.StructureConstantAlgebra.from_json({"field": "Q"})


# -- properties ---------------------------------------------------------------

ALGEBRAS = [alg.matrix_algebra(F3, 2), alg.quaternion_algebra(F5, 2, 3),
            cyc.build_cyclic_algebra(parse_extension("F8/F2"), 1)]


def _vec(A, data):
    return tuple(data.draw(st.sampled_from(list(A.field.elements()))) for _ in range(A.dim))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALGEBRAS), st.data())
def test_opposite_is_involution_and_reverses(A, data):
    O = alg.opposite(A)
    assert alg.opposite(O) == A
    x, y = _vec(A, data), _vec(A, data)
    assert O.mul(x, y) == A.mul(y, x)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_nrd_multiplicative(data):
    K = parse_extension("F9/F3")
    a = data.draw(st.sampled_from([1, 2]))
    A = cyc.build_cyclic_algebra(K, a)
    x, y = _vec(A, data), _vec(A, data)
    assert A.nrd.value(A.mul(x, y)) == A.field.mul(A.nrd.value(x), A.nrd.value(y))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_hamilton_nrd_multiplicative(vals):
    H = hamilton()
    x = tuple(QQ(v) for v in vals[:4])
    y = tuple(QQ(v) for v in vals[4:])
    assert H.nrd.value(H.mul(x, y)) == H.nrd.value(x) * H.nrd.value(y)
