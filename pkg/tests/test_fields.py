from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerkit.errors import DescriptorMismatch, SizeLimitExceeded, ValidationError
from brauerkit.fields import (QQ, constant_field_extension, field_from_descriptor, finite_cyclic_extension,
                              finite_field, hilbert90_witness, is_irreducible, make_finite_field, norm,
                              norm_membership, nth_root, parse_element, parse_extension, parse_field,
                              rational_functions, trace)

from oracles import GF, gf_norm_to_prime, gf_trace_to_prime, is_sum_of_two_rational_squares, smallest_irreducible

PRIME_POWERS = [4, 8, 9, 16, 25, 27, 49]


def test_canonical_moduli():
    assert make_finite_field(2, 2).modulus == (1, 1, 1)
    assert make_finite_field(3, 2).modulus == (1, 0, 1)
    for p, k in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]:
        assert tuple(make_finite_field(p, k).modulus) == smallest_irreducible(p, k)


def test_non_prime_rejected():
    with pytest.raises(ValidationError):
        make_finite_field(4, 1)
    with pytest.raises(ValidationError):
        finite_field(6)


def test_size_limit():
    with pytest.raises(SizeLimitExceeded):
        make_finite_field(2, 30)


@pytest.mark.parametrize("q", PRIME_POWERS)
def test_finite_field_arithmetic_matches_oracle(q):
    F = finite_field(q)
    p = F.characteristic
    k = {4: 2, 8: 3, 9: 2, 16: 4, 25: 2, 27: 3, 49: 2}[q]
    G = GF(p, k)
    els = list(range(q))
    for a in els:
        for b in els[:: max(1, q // 9)]:
            assert F.mul(a, b) == G.mul(a, b)
            assert F.add(a, b) == G.add(a, b)
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27])
def test_norm_and_trace_match_oracle(q):
    K = finite_field(q)
    G = GF(K.characteristic, {4: 2, 8: 3, 9: 2, 25: 2, 27: 3}[q])
    for x in range(q):
        assert norm(K, x) == gf_norm_to_prime(G, x)
        assert trace(K, x) == gf_trace_to_prime(G, x)


def test_norm_examples():
    F4 = finite_field(4)
    w = F4("x")
    assert norm(F4, w) == 1
    assert trace(F4, w) == 1
    F9 = finite_field(9)
    assert norm(F9, F9("1+x")) == 2
    assert trace(F9, F9.one) == 2
    assert norm(F9, F9.one) == 1
    assert trace(F9, F9.zero) == 0


def test_norm_membership_examples():
    F9 = finite_field(9)
    v = norm_membership(F9, 2)
    assert v.is_proved and norm(F9, v.payload) == 2
    assert v.payload == F9("1+x")
    assert norm_membership(F9, 1).payload == F9.one

    QI = parse_extension("Q(i)/Q")
    v = norm_membership(QI, QQ(2))
    assert v.is_proved and v.payload == QI("1+i")
    v = norm_membership(QI, QQ(-1))
    assert v.is_refuted and v.kind == "sign certificate"
    assert norm_membership(QI, QQ(3)).is_unknown

    for p, m in [(2, 2), (3, 3), (5, 2), (2, 6)]:
        E = constant_field_extension(finite_field(p), m)
        v = norm_membership(E, E.base("t"))
        assert v.is_refuted and v.kind == "degree certificate"


@pytest.mark.parametrize("a", ["2", "5", "1/2", "25/4", "13", "10", "3", "-2", "7", "6", "9"])
def test_gaussian_membership_never_contradicts_fermat(a):
    QI = parse_extension("Q(i)/Q")
    x = QQ(a)
    v = norm_membership(QI, x)
    truth = is_sum_of_two_rational_squares(x)
    if v.is_proved:
        assert truth and QI.norm(v.payload) == x
    if v.is_refuted:
        assert not truth
    if truth and Fraction(a).numerator <= 25 and Fraction(a).denominator <= 4:
        assert v.is_proved


def test_function_field_membership_constructive():
    E = parse_extension("F9t/F3t")
    k = E.base
    v = norm_membership(E, k("t^2"))
    assert v.is_proved and E.norm(v.payload) == k("t^2")
    v = norm_membership(E, k("t^2+1"))
    assert v.is_proved and E.norm(v.payload) == k("t^2+1")


def test_hilbert90_examples():
    F9 = finite_field(9)
    assert hilbert90_witness(F9, F9.one) == F9.one
    i = F9("x")
    f = hilbert90_witness(F9, i)
    assert F9.div(f, F9.sigma(f)) == i
    F25 = finite_field(25)
    ones = [x for x in F25.nonzero_elements() if norm(F25, x) == 1]
    assert len(ones) == 6
    for lam in ones:
        f = hilbert90_witness(F25, lam)
        assert f != 0 and F25.div(f, F25.sigma(f)) == lam


def test_hilbert90_rejects_bad_input():
    F9 = finite_field(9)
    with pytest.raises(ValidationError):
        hilbert90_witness(F9, F9("1+x"))


def test_hilbert90_over_q_and_function_field():
    QI = parse_extension("Q(i)/Q")
    lam = QI("(3+4*i)/5")
    f = hilbert90_witness(QI, lam)
    assert QI.div(f, QI.sigma(f)) == lam
    E = parse_extension("F9t/F3t")
    y = E("x*t + 1")
    lam = E.div(y, E.sigma(y))
    f = hilbert90_witness(E, lam)
    assert E.div(f, E.sigma(f)) == lam


def test_irreducibility_examples():
    F2 = finite_field(2)
    assert is_irreducible((1, 1, 1, 1, 1), F2)
    assert is_irreducible((1, 1, 1), F2)
    assert not is_irreducible((-1, 0, 1), QQ)
    assert not is_irreducible((1, 0, 1), F2)
    assert is_irreducible((1, 0, 1), finite_field(3))
    assert is_irreducible((2, 0, 0, 1), QQ)


def test_rational_functions_canonical():
    T = rational_functions(finite_field(3))
    a = T("(t^2-1)/(2*t-2)")
    assert a == T("2*t + 2")
    assert T.format(T("(1+t)/t^2")) == "(1+t)/t^2"
    assert T.format(T("1/t^2")) == "1/t^2"
    num, den = T("(t+1)/(2*t)")
    assert den[-1] == 1


def test_parse_and_format():
    QI = parse_extension("Q(i)/Q")
    x = QI("(1+2*i)^2")
    assert x == QI("-3+4*i")
    assert QQ.format(QQ("6/4")) == "3/2"
    F9 = parse_field("F9")
    assert parse_element(F9, "x^2") == F9.neg(F9.one)
    assert parse_element(F9, "x^-1") == F9.inv(F9("x"))
    with pytest.raises(ValidationError):
        parse_element(F9, "y")
    with pytest.raises(ValidationError):
        parse_element(F9, "1+")


def test_descriptor_round_trip():
    for name in ["Q", "F2", "F9", "F3t", "F8", "Q(i)", "Q(sqrt(2))", "F9t"]:
        F = parse_field(name)
        assert field_from_descriptor(F.descriptor()) == F
    with pytest.raises(DescriptorMismatch):
        d = make_finite_field(3, 2).descriptor()
        d["modulus"] = [2, 2, 1]
        field_from_descriptor(d)


def test_perfect_square_quadratic_rejected():
    with pytest.raises(ValidationError):
        parse_field("Q(sqrt(4))")


def test_nth_root():
    assert nth_root(QQ, QQ("8/27"), 3) == QQ("2/3")
    assert nth_root(QQ, QQ(2), 2) is None
    F7 = finite_field(7)
    assert nth_root(F7, 2, 3) is None  # the cubes in F7* are 1 and 6
    assert F7.pow(nth_root(F7, 6, 3), 3) == 6
    T = rational_functions(finite_field(2))
    assert nth_root(T, T("t^3"), 3) == T("t")


def test_tower_extension():
    E = finite_cyclic_extension(finite_field(4), 2)
    assert E.order == 16 and E.degree == 2
    norms = {E.norm(x) for x in E.nonzero_elements()}
    assert norms == set(E.base.nonzero_elements())


# -- properties ---------------------------------------------------------------

FIELDS = [finite_field(q) for q in (4, 8, 9, 25)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_norm_multiplicative(K, data):
    x = data.draw(st.integers(0, K.order - 1))
    y = data.draw(st.integers(0, K.order - 1))
    assert norm(K, K.mul(x, y)) == K.base.mul(norm(K, x), norm(K, y))
    assert trace(K, K.add(x, y)) == K.base.add(trace(K, x), trace(K, y))


@settings(max_examples=100, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_norm_multiplicative_gaussian(a, b, c, d):
    QI = parse_extension("Q(i)/Q")
    x, y = QI.from_coords([QQ(a), QQ(b)]), QI.from_coords([QQ(c), QQ(d)])
    assert QI.norm(QI.mul(x, y)) == QQ.mul(QI.norm(x), QI.norm(y))
    assert QI.norm(x) == QQ(a * a + b * b)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS + [QQ, parse_field("F3t"), parse_field("Q(i)")]), st.randoms(use_true_random=False))
def test_json_round_trip(F, rnd):
    x = F.random_element(rnd)
    assert F.from_json(F.to_json(x)) == x
    assert parse_element(F, F.format(x)) == x
