import random
from itertools import permutations, product

import pytest

from brauerkit import algebra as alg
from brauerkit import circles as cir
from brauerkit import cyclic as cyc
from brauerkit.errors import DescriptorMismatch, ValidationError
from brauerkit.fields import finite_field, norm_membership, parse_extension

from oracles import conjugacy_orbits_of_edges, perm_compose

F5 = finite_field(5)
F9 = parse_extension("F9/F3")


def brute_force_section(F, lambdas):
    """Nonzero alpha with alpha_{i+1} = lambda_i alpha_i (indices mod m), by search."""
    m = len(lambdas)
    for alpha in product(list(F.nonzero_elements()), repeat=m):
        if all(F.mul(lambdas[i], alpha[i]) == alpha[(i + 1) % m] for i in range(m)):
            return alpha
    return None


def test_c1_examples():
    L = cir.SplitLineBundle(cir.SplitCircle(3, F5), [2, 3, 1])
    t = cir.c1_split(L)
    assert t.invariant == 1 and t.trivial and t.witness == (1, 2, 1)
    assert cir.c1_split(cir.SplitLineBundle(cir.SplitCircle(3, F5), [1, 1, 1])).invariant == 1
    t = cir.c1_split(cir.SplitLineBundle(cir.SplitCircle(3, F5), [2, 1, 1]))
    assert t.invariant == 2 and not t.trivial


def test_nodal_cubic():
    L = cir.SplitLineBundle(cir.SplitCircle(1, F5), [3])
    assert cir.c1_split(L).invariant == 3
    assert cir.c1_split(cir.SplitLineBundle(cir.SplitCircle(1, F5), [1])).trivial


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (3, 3), (4, 2), (5, 2), (5, 3)])
def test_split_triviality_matches_section_search(q, m):
    F = finite_field(q)
    for lams in product(list(F.nonzero_elements()), repeat=m):
        t = cir.c1_split(cir.SplitLineBundle(cir.SplitCircle(m, F), lams))
        assert t.trivial == (brute_force_section(F, lams) is not None)


def test_galois_class_examples():
    C = cir.GaloisCircle(F9)
    t = cir.galois_class(cir.GaloisLineBundle(C, 1))
    assert t.invariant == 1 and t.trivial
    i = F9("x")
    t = cir.galois_class(cir.GaloisLineBundle(C, i))
    assert t.invariant == 1 and t.trivial and F9.div(t.witness, F9.sigma(t.witness)) == i
    t = cir.galois_class(cir.GaloisLineBundle(C, F9("1+x")))
    assert t.invariant == 2 and not t.trivial


def test_pullback_examples():
    C = cir.GaloisCircle(F9)
    assert cir.pullback(cir.GaloisLineBundle(C, 1)).lambdas == (1, 1)
    P = cir.pullback(cir.GaloisLineBundle(C, F9("1+x")))
    assert F9.prod(P.lambdas) == 2


@pytest.mark.parametrize("ext", ["F4/F2", "F9/F3", "F8/F2", "F25/F5", "F27/F3"])
def test_galois_class_is_c1_of_pullback(ext):
    K = parse_extension(ext)
    C = cir.GaloisCircle(K)
    for lam in K.nonzero_elements():
        L = cir.GaloisLineBundle(C, lam)
        g = cir.galois_class(L)
        s = cir.c1_split(cir.pullback(L))
        assert s.invariant == K.embed(g.invariant)
        assert g.trivial == s.trivial


def test_pushforward_examples():
    P = cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, F9), [1, 1]))
    assert P.geometrically_split and P.decomposes
    i = F9("x")
    P = cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, F9), [i, 1]))
    assert not P.geometrically_split and P.decomposes
    P = cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, F9), [2, 1]))
    assert P.geometrically_split


def test_pushforward_peels_gluing():
    # the monodromy of the pushforward is diagonal with the conjugates of prod lambda
    K = parse_extension("F27/F3")
    rng = random.Random(5)
    for _ in range(10):
        lams = [rng.choice(list(K.nonzero_elements())) for _ in range(3)]
        P = cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(3, K), lams))
        T = P.bundle.monodromy()
        conj = K.conjugates(K.prod(lams))
        assert all(T[i][j] == (conj[i] if i == j else 0) for i in range(3) for j in range(3))


def test_pushforward_rejects_mismatch():
    with pytest.raises(ValidationError):
        cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(3, F9), [1, 1, 1]))
    with pytest.raises(DescriptorMismatch):
        cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, F5), [1, 1]))


def test_end_algebra_examples():
    E = cir.global_end_algebra(cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, F9), [1, 1])).bundle)
    assert E.dim == 4 and alg.is_central_simple(E) and alg.find_zero_divisor(E).is_proved
    K = parse_extension("F25/F5")
    rng = random.Random(2)
    for _ in range(5):
        a = rng.choice(list(K.nonzero_elements()))
        c = rng.choice(list(K.base.nonzero_elements()))
        b = K.div(K.embed(c), a)
        P = cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, K), [a, b]))
        E = cir.global_end_algebra(P.bundle)
        assert E.dim == 4 and alg.center(E).dim == 1 and alg.radical(E).dim == 0
        assert alg.find_zero_divisor(E).is_proved == norm_membership(K, c).is_proved


def test_end_algebra_rank_one():
    E = cir.global_end_algebra(cir.GluedBundle(cir.GaloisCircle(F9), [[1]]))
    assert E.dim == 1


def test_end_algebra_matrices_commute_with_gluing():
    P = cir.pushforward(cir.SplitLineBundle(cir.SplitCircle(2, F9), [F9("x"), F9("x")]))
    B = P.bundle
    E = cir.global_end_algebra(B)
    K = F9
    from brauerkit import linalg as la
    for Phi in E.matrices:
        left = la.matmul(K, Phi, B.matrix)
        right = la.matmul(K, B.matrix, [[K.sigma(c) for c in row] for row in Phi])
        assert left == right


def test_class_of_circle_bundle():
    c = cir.class_of_circle_bundle(cir.SplitLineBundle(cir.SplitCircle(2, F9), [2, 1]))
    assert c.format() == "(F9/F3,2)" and cyc.is_split(c).is_proved
    assert cir.class_of_circle_bundle(cir.SplitLineBundle(cir.SplitCircle(2, F9), [1, 1])).a == 1
    E = parse_extension("F9t/F3t")
    t = E("t")
    c = cir.class_of_circle_bundle(cir.SplitLineBundle(cir.SplitCircle(2, E), [t, E.one]))
    assert cyc.period(c).payload == 2
    with pytest.raises(ValidationError):
        cir.class_of_circle_bundle(cir.SplitLineBundle(cir.SplitCircle(2, F9), [F9("x"), 1]))


def test_abel_invariant_examples():
    C = cir.SplitCircle(2, F5)
    assert cir.abel_invariant(C, [[2], [3]], [[2], [3]]) == 1
    assert cir.abel_invariant(C, [[2], [3]], [[3], [4]]) == 2
    with pytest.raises(ValidationError):
        cir.abel_invariant(C, [[0], [3]], [[3], [4]])


def _brute_realizable(F, zeros, poles):
    """Search scalars b_j with f_{j-1}(inf) = f_j(0) around the circle."""
    m = len(zeros)
    for b in product(list(F.nonzero_elements()), repeat=m):
        ok = True
        for j in range(m):
            prev = b[j - 1]  # f_{j-1}(inf) = b_{j-1}
            at0 = F.mul(b[j], F.div(F.prod(zeros[j]), F.prod(poles[j])))  # sign (-1)^deg cancels
            if prev != at0:
                ok = False
                break
        if ok:
            return True
    return False


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_abel_invariant_matches_brute_force(q):
    F = finite_field(q)
    rng = random.Random(q)
    pts = list(F.nonzero_elements())
    for _ in range(60):
        m = rng.randint(1, 3)
        zeros, poles = [], []
        for _ in range(m):
            d = rng.randint(0, 2)
            zeros.append([rng.choice(pts) for _ in range(d)])
            poles.append([rng.choice(pts) for _ in range(d)])
        C = cir.SplitCircle(m, F)
        inv = cir.abel_invariant(C, zeros, poles)
        assert (inv == F.one) == _brute_realizable(F, zeros, poles)
        assert (cir.section_with_divisor(C, zeros, poles) is not None) == (inv == F.one)


def test_abel_invariant_multiplicative():
    C = cir.SplitCircle(2, F5)
    z1, p1 = [[2], [3]], [[4], [1]]
    z2, p2 = [[3], [3]], [[2], [4]]
    cat_z = [a + b for a, b in zip(z1, z2)]
    cat_p = [a + b for a, b in zip(p1, p2)]
    assert cir.abel_invariant(C, cat_z, cat_p) == F5.mul(cir.abel_invariant(C, z1, p1),
                                                         cir.abel_invariant(C, z2, p2))


def test_galois_abel_invariant_is_norm():
    C = cir.GaloisCircle(F9)
    x = F9("x")
    assert cir.abel_invariant(C, [x], [1]) == F9.norm(F9.inv(x))
    assert cir.abel_invariant(C, [F9("1+x")], [1]) == F9.base.inv(2)


# -- universal curves ---------------------------------------------------------

def test_universal_curve_small_cases():
    C = cir.build_universal_curve(cir.cyclic_group(2), [1])
    assert (C.node_count, C.component_count, len(C.orbits)) == (2, 2, 1)
    C = cir.build_universal_curve(cir.cyclic_group(4), [1, 3])
    assert (C.node_count, C.component_count, len(C.orbits)) == (4, 8, 2)
    table, elems = cir.symmetric_group(3)
    C = cir.build_universal_curve(table, cir.transpositions(elems))
    assert (C.node_count, C.component_count, len(C.orbits)) == (6, 18, 3) and C.is_connected()


def test_universal_curve_orbits_against_oracle():
    elems = sorted(permutations(range(3)))
    inv = lambda p: tuple(sorted(range(3), key=lambda x: p[x]))
    trans = [p for p in elems if sum(1 for i, x in enumerate(p) if i != x) == 2]
    orbits = conjugacy_orbits_of_edges(elems, perm_compose, inv, trans)
    assert len(orbits) == 3 and all(len(o) == 6 for o in orbits)
    table, e2 = cir.symmetric_group(3)
    C = cir.build_universal_curve(table, cir.transpositions(e2))
    assert sorted(len(v) for v in C.orbits.values()) == sorted(len(o) for o in orbits)


def test_every_node_meets_two_branches_per_generator():
    C = cir.build_universal_curve(cir.cyclic_group(4), [1, 3])
    for v, branches in C.adjacency().items():
        assert len(branches) == 4


def test_universal_curve_validation():
    with pytest.raises(ValidationError):
        cir.build_universal_curve(cir.cyclic_group(4), [2])  # does not generate
    table, elems = cir.symmetric_group(3)
    with pytest.raises(ValidationError):
        cir.build_universal_curve(table, cir.transpositions(elems)[:1] + [1])
    with pytest.raises(ValidationError):
        cir.build_universal_curve([[0, 1], [0, 1]], [1])
