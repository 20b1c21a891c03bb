import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerkit import algebra as alg
from brauerkit import cyclic as cyc
from brauerkit.errors import DescriptorMismatch, ValidationError
from brauerkit.fields import QQ, constant_field_extension, finite_cyclic_extension, finite_field, parse_extension

from oracles import curve_rule, function_field_period, quaternion_norm

QI = parse_extension("Q(i)/Q")


def test_build_examples():
    H = cyc.build_cyclic_algebra(QI, QQ(-1))
    assert H.dim == 4 and alg.is_central_simple(H)
    assert alg.center(H).dim == 1
    A = cyc.build_cyclic_algebra(parse_extension("F9/F3"), 2)  # -1 in F3
    assert alg.is_central_simple(A) and alg.find_zero_divisor(A).is_proved
    A = cyc.build_cyclic_algebra(QI, QQ(1))
    u = A.basis_vector(2)
    assert A.is_zero(A.mul(A.sub(u, A.unit), A.add(u, A.unit)))


def test_hamilton_nrd_is_sum_of_squares():
    form = cyc.reduced_norm(QI, QQ(-1))
    for x in [(1, 0, 0, 0), (1, 2, 3, 4), (0, -1, 5, 2)]:
        assert form.value(tuple(QQ(c) for c in x)) == quaternion_norm(x)
    assert form.format() == "x0^2 + x1^2 + x2^2 + x3^2"


def test_splitting_representation_scalar_and_homomorphism():
    K = parse_extension("F27/F3")
    R = cyc.splitting_representation(K, 2)
    A = cyc.build_cyclic_algebra(K, 2)
    assert R.verify_homomorphism(A)
    # an element of k maps to a scalar matrix
    c = [0] * A.dim
    c[0] = 2
    M = R.image(c)
    assert all(M[i][j] == (K.embed(2) if i == j else 0) for i in range(3) for j in range(3))


def test_is_split_examples():
    for q, m in [(2, 2), (3, 2), (2, 3), (4, 2), (5, 3)]:
        K = finite_cyclic_extension(finite_field(q), m)
        for a in K.base.nonzero_elements():
            v = cyc.is_split(cyc.CyclicBrauerClass(K, a))
            assert v.is_proved
            zd = v.payload["zero_divisor"]
            A = cyc.build_cyclic_algebra(K, a)
            assert A.is_zero(A.mul(zd["x"], zd["y"]))
    v = cyc.is_split(cyc.CyclicBrauerClass(QI, QQ(-1)))
    assert v.is_refuted and v.kind == "sign certificate"
    v = cyc.is_split(cyc.CyclicBrauerClass(QI, QQ(2)))
    assert v.is_proved and v.payload["norm_witness"] == QI("1+i")


def test_period_examples():
    assert cyc.period(cyc.CyclicBrauerClass(QI, QQ(-1))).payload == 2
    assert cyc.period(cyc.CyclicBrauerClass(QI, QQ(1))).payload == 1
    for p in (2, 3, 5):
        for m in (2, 3, 4, 6):
            E = constant_field_extension(finite_field(p), m)
            v = cyc.period(cyc.CyclicBrauerClass(E, E.base("t")))
            assert v.is_proved and v.payload == m and v.kind == "degree certificate"


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_function_field_period_of_powers(d):
    E = constant_field_extension(finite_field(2), 6)
    v = cyc.period(cyc.CyclicBrauerClass(E, E.base(f"t^{d}")))
    assert v.is_proved and v.payload == function_field_period(6, d)


def test_period_unknown_carries_bounds():
    v = cyc.period(cyc.CyclicBrauerClass(QI, QQ(3)))
    assert v.is_unknown and v.payload == {"lower": 1, "upper": 2}


def test_index_examples():
    assert cyc.index_bounds(cyc.CyclicBrauerClass(QI, QQ(2))).as_tuple() == (1, 1)
    assert cyc.index_bounds(cyc.CyclicBrauerClass(QI, QQ(-1))).as_tuple() == (2, 2)
    E = constant_field_extension(finite_field(2), 6)
    assert cyc.index_bounds(cyc.CyclicBrauerClass(E, E.base("t"))).as_tuple() == (6, 6)
    b = cyc.index_bounds(cyc.CyclicBrauerClass(E, E.base("t^2")))
    assert b.as_tuple() == (3, 3)
    b = cyc.index_bounds(cyc.CyclicBrauerClass(QI, QQ(3)))
    assert b.lower == 1 and b.upper == 2 and not b.decisive


def test_primary_decomposition_period_six():
    E = constant_field_extension(finite_field(2), 6)
    c = cyc.CyclicBrauerClass(E, E.base("t"))
    parts = cyc.primary_decomposition(c)
    assert [p.a for p in parts] == [E.base("t^3"), E.base("t^-2")]
    assert [cyc.period(p).payload for p in parts] == [2, 3]
    prod = parts[0] * parts[1]
    assert prod.equals(c).is_proved


def test_primary_decomposition_trivial_cases():
    E = constant_field_extension(finite_field(3), 2)
    assert cyc.primary_decomposition(cyc.CyclicBrauerClass(E, E.base.one)) == []
    c = cyc.CyclicBrauerClass(E, E.base("t"))
    assert cyc.primary_decomposition(c) == [c]


def test_class_group_operations():
    E = constant_field_extension(finite_field(2), 6)
    c = cyc.CyclicBrauerClass(E, E.base("t"))
    assert cyc.is_split(c * c.inverse()).is_proved
    assert c.power(6).equals(cyc.CyclicBrauerClass(E, E.base.one)).is_proved
    assert c.power(2).equals(c).is_refuted
    with pytest.raises(DescriptorMismatch):
        c * cyc.CyclicBrauerClass(QI, QQ(2))


def test_class_validation():
    with pytest.raises(ValidationError):
        cyc.CyclicBrauerClass(QI, QQ(0))
    with pytest.raises(DescriptorMismatch):
        cyc.CyclicBrauerClass(finite_field(3), 1)


def test_format():
    K = parse_extension("F9/F3")
    assert cyc.CyclicBrauerClass(K, 2).format() == "(F9/F3,2)"
    E = parse_extension("F9t/F3t")
    assert cyc.CyclicBrauerClass(E, E.base("t")).format() == "(F9t/F3t,t)"


def test_curve_constraints_examples():
    assert cyc.curve_constraints(3, 6, 3)
    assert not cyc.curve_constraints(3, 4, 3)
    assert cyc.curve_constraints(2, 1, 1)
    assert not cyc.curve_constraints(4, 3, 1)


def test_curve_constraints_oracle():
    rng = random.Random(11)
    for _ in range(2000):
        t = (rng.randint(1, 12), rng.randint(-30, 30), rng.randint(-30, 30))
        assert cyc.curve_constraints(*t) == curve_rule(*t)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 3))
def test_is_split_agrees_with_norm_group_finite(q_idx, a_idx, m_idx):
    q = [2, 3, 4, 5, 7][q_idx - 1]
    m = [2, 2, 3, 3][m_idx]
    K = finite_cyclic_extension(finite_field(q), m)
    a = list(K.base.nonzero_elements())[(a_idx - 1) % (q - 1)]
    assert cyc.is_split(cyc.CyclicBrauerClass(K, a)).is_proved
