"""Built-in verification suites shared by ``selftest`` and the acceptance tests.

Each suite compares library results against brute-force enumeration that
does not go through the code path being checked.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from sympy import factorint

from . import algebra as alg
from . import circles as cir
from . import cyclic as cyc
from . import sbfinite as sb
from .errors import ValidationError
from .fields import (QQ, constant_field_extension, finite_cyclic_extension, finite_field,
                     gaussian_rationals, hilbert90_witness, norm_membership)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures, {self.seconds:.2f}s"


def prime_powers(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if len(factorint(q)) == 1]


def _timed(fn):
    def run(*args, **kwargs):
        res = SuiteResult(fn.__name__.replace("suite_", ""))
        t0 = time.perf_counter()
        fn(res, *args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def suite_wedderburn(res, limit: int = 6561):
    """Norms from F_{q^m}* onto F_q* for every q^m <= limit, m >= 2."""
    cases = 0
    for q in prime_powers(isqrt(limit)):
        k = finite_field(q)
        m = 2
        while q ** m <= limit:
            K = finite_cyclic_extension(k, m)
            image = {K.norm(x) for x in K.nonzero_elements()}
            res.check(image == set(k.nonzero_elements()), f"norm not onto for F{q ** m}/F{q}")
            for a in k.nonzero_elements():
                res.check(norm_membership(K, a).is_proved, f"{a} not a norm in F{q ** m}/F{q}")
            if q ** (m * m) <= 9 ** 4:
                for a in k.nonzero_elements():
                    res.check(cyc.is_split(cyc.CyclicBrauerClass(K, a)).is_proved, f"class ({q}^{m},{a}) not split")
            cases += 1
            m += 1
    res.details["extensions"] = cases


@_timed
def suite_points(res):
    """Point counts of P^n(F_q)."""
    for n in range(0, 5):
        for q in prime_powers(9):
            if q ** (n + 1) > 10 ** 5:
                continue
            pts = sb.projective_points(n, q)
            res.check(len(pts) == (q ** (n + 1) - 1) // (q - 1), f"count P^{n}(F{q})")
            res.check(len(set(pts)) == len(pts), f"duplicates in P^{n}(F{q})")


@_timed
def suite_eigen(res, trials: int = 200, seed: int = 1):
    """Zero loci of tangent sections against the brute-force eigenvector locus."""
    rng = random.Random(seed)
    for n in range(1, 4):
        for q in prime_powers(7):
            F = finite_field(q)
            elems = list(F.elements())
            done = 0
            while done < trials:
                M = [[rng.choice(elems) for _ in range(n + 1)] for _ in range(n + 1)]
                S = sb.TangentSection(F, M)
                if S.is_scalar():
                    continue
                locus = sb.section_zero_locus(S)
                res.check(locus == sb.brute_force_locus(F, M, n), f"locus mismatch n={n} q={q} A={M}")
                done += 1


@_timed
def suite_division(res, bound: int = 10):
    """Hamilton quaternions over Q: a division algebra."""
    Qi = gaussian_rationals()
    c = cyc.CyclicBrauerClass(Qi, -1)
    v = cyc.is_split(c, bound)
    res.check(v.is_refuted and v.kind == "sign certificate", "split verdict is not a sign refutation")
    H = c.algebra()
    s = alg.search_zero_divisor(H, bound)
    res.check(s.is_unknown and s.bound == bound, "zero divisor found below the bound")
    res.details["candidates"] = (s.payload or {}).get("searched")
    p = cyc.period(c, bound)
    res.check(p.is_proved and p.payload == 2, "period is not 2")
    res.check(cyc.index_bounds(c, bound).as_tuple() == (2, 2), "index bounds are not (2, 2)")


@_timed
def suite_splitq(res):
    """(Q(i)/Q, conj, 2) is split with witness 1+i."""
    Qi = gaussian_rationals()
    c = cyc.CyclicBrauerClass(Qi, 2)
    v = cyc.is_split(c)
    res.check(v.is_proved and v.payload["norm_witness"] == (Fraction(1), Fraction(1)), "witness is not 1+i")
    z = alg.search_zero_divisor(c.algebra(), 4)
    res.check(z.is_proved, "no zero divisor at height <= 4")
    if z.is_proved:
        res.details["zero_divisor"] = z.payload["x"]


@_timed
def suite_ffperiods(res):
    """Period of t over F_p(t) for the constant extension of degree m is m."""
    for p in (2, 3, 5):
        for m in (2, 3, 4, 6):
            L = constant_field_extension(finite_field(p), m)
            v = cyc.period(cyc.CyclicBrauerClass(L, L.base.t))
            res.check(v.is_proved and v.payload == m and v.kind == "degree certificate", f"period p={p} m={m}: {v}")


@_timed
def suite_primary(res):
    """Primary decomposition of the period-6 class [t] over F_2(t)."""
    L = constant_field_extension(finite_field(2), 6)
    c = cyc.CyclicBrauerClass(L, L.base.t)
    parts = cyc.primary_decomposition(c)
    periods = sorted(cyc.period(x).payload for x in parts)
    res.check(periods == [2, 3], f"part periods {periods}")
    prod = parts[0]
    for x in parts[1:]:
        prod = prod * x
    res.check(prod.equals(c).is_proved, "product is not norm-equivalent to [t]")
    res.details["parts"] = [x.format() for x in parts]


@_timed
def suite_hilbert90(res, limit: int = 729):
    """Norm-one elements against f/sigma(f), both by exhaustion."""
    for q in prime_powers(isqrt(limit)):
        k = finite_field(q)
        m = 2
        while q ** m <= limit:
            K = finite_cyclic_extension(k, m)
            units = list(K.nonzero_elements())
            kernel = {x for x in units if K.norm(x) == k.one}
            image = {K.div(f, K.sigma(f)) for f in units}
            res.check(kernel == image, f"kernel != image for F{q ** m}/F{q}")
            for lam in sorted(kernel):
                f = hilbert90_witness(K, lam)
                res.check(f != K.zero and K.mul(lam, K.sigma(f)) == f, f"bad witness for {lam} in F{q ** m}")
            m += 1


def _split_sections(F, lambdas):
    """Brute force: nonzero alpha in F^m with alpha_{i+1} = lambda_i alpha_i (indices mod m)."""
    from itertools import product
    m = len(lambdas)
    for alpha in product(list(F.elements()), repeat=m):
        if all(a == F.zero for a in alpha):
            continue
        if all(alpha[(i + 1) % m] == F.mul(lambdas[i], alpha[i]) for i in range(m)):
            return alpha
    return None


@_timed
def suite_picard(res):
    """Triviality of degree-0 line bundles on split and Galois circles."""
    from itertools import product
    for q in (2, 3, 4, 5):
        F = finite_field(q)
        units = list(F.nonzero_elements())
        for m in (1, 2, 3):
            for lam in product(units, repeat=m):
                L = cir.SplitLineBundle(cir.SplitCircle(m, F), lam)
                res.check(cir.c1_split(L).trivial == (_split_sections(F, lam) is not None), f"split {q} {lam}")
        for m in (2, 3):
            K = finite_cyclic_extension(F, m)
            G = cir.GaloisCircle(K)
            for lam in K.nonzero_elements():
                L = cir.GaloisLineBundle(G, lam)
                brute = any(K.mul(lam, K.sigma(f)) == f for f in K.nonzero_elements())
                t = cir.galois_class(L)
                res.check(t.trivial == brute, f"Galois {q}^{m} {lam}")
                res.check(t.invariant == K.project(cir.c1_split(cir.pullback(L)).invariant),
                          f"functoriality {q}^{m} {lam}")


@_timed
def suite_endalg(res, trials: int = 50, seed: int = 7):
    """End algebras of geometrically split pushforwards are split quaternion-type algebras."""
    rng = random.Random(seed)
    for q in (3, 5):
        k = finite_field(q)
        K = finite_cyclic_extension(k, 2)
        units = list(K.nonzero_elements())
        kunits = list(k.nonzero_elements())
        for _ in range(trials):
            lam0 = rng.choice(units)
            c = K.embed(rng.choice(kunits))
            L = cir.SplitLineBundle(cir.SplitCircle(2, K), (lam0, K.div(c, lam0)))
            r = cir.pushforward(L)
            res.check(r.geometrically_split, "pushforward not geometrically split")
            A = cir.global_end_algebra(r.bundle)
            res.check(A.dim == 4, f"End dim {A.dim}")
            res.check(alg.center(A).dim == 1, "center not 1-dimensional")
            res.check(alg.radical(A).is_zero(), "radical nonzero")
            z = alg.find_zero_divisor(A)
            nm = norm_membership(K, K.project(r.product))
            res.check(z.is_proved == nm.is_proved, "split verdict disagrees with norm membership")
            cls = cir.class_of_circle_bundle(L)
            res.check(cyc.is_split(cls).is_proved == z.is_proved, "class split verdict disagrees")


@_timed
def suite_sandwich(res):
    """Sandwich maps are bijective for central simple algebras."""
    cases = {
        "M2(F3)": alg.matrix_algebra(finite_field(3), 2),
        "M3(F2)": alg.matrix_algebra(finite_field(2), 3),
        "Hamilton/Q": cyc.build_cyclic_algebra(gaussian_rationals(), -1),
        "(F9/F3,-1)": cyc.build_cyclic_algebra(finite_cyclic_extension(finite_field(3), 2), 2),
    }
    for name, A in cases.items():
        s = alg.sandwich_map(A)
        res.check(s.full and s.size == A.dim ** 2, f"{name} rank {s.rank}/{s.size}")
        res.details[name] = s.rank


@_timed
def suite_curves(res):
    """Universal curves for (Z/2,{1}), (Z/4,{1,3}), (S3, transpositions)."""
    table, elems = cir.symmetric_group(3)
    cases = [
        ("Z2", cir.cyclic_group(2), [1], (2, 2, 1)),
        ("Z4", cir.cyclic_group(4), [1, 3], (4, 8, 2)),
        ("S3", table, cir.transpositions(elems), (6, 18, 3)),
    ]
    for name, tab, gens, expected in cases:
        C = cir.build_universal_curve(tab, gens)
        got = (C.node_count, C.component_count, len(C.orbits))
        res.check(got == expected, f"{name}: {got}")
        res.check(C.is_connected(), f"{name} not connected")
        res.check(all(len(v) == len(tab) for v in C.orbits.values()), f"{name} orbit not free")
        res.details[name] = got


def curve_constraints_oracle(ind, deg, chi):
    """Restatement with gcds."""
    if ind % 2 == 1:
        return gcd(ind, deg) == ind and gcd(ind, chi) == ind
    half = ind // 2
    return gcd(ind, deg + chi) == ind and gcd(half, chi) == half


@_timed
def suite_divisibility(res, trials: int = 1000, seed: int = 3):
    """Right-ideal dimensions in M_{n+1}(F_2) and the curve divisibility rule."""
    F2 = finite_field(2)
    for n in range(0, 3):
        A = alg.matrix_algebra(F2, n + 1)
        ideals = alg.right_ideals(A)
        dims = sorted({I.dim for I in ideals})
        res.check(dims == [(n + 1) * j for j in range(n + 2)], f"dims for n={n}: {dims}")
        for I in ideals:
            res.check(I.dim % (n + 1) == 0, "dimension not divisible")
            J = alg.complement_right_ideal(A, I, ideals)
            res.check(J is not None and I.dim + J.dim == (n + 1) ** 2, "no complement")
    rng = random.Random(seed)
    for _ in range(trials):
        ind = rng.randint(1, 12)
        deg = rng.randint(-30, 30)
        chi = rng.randint(-30, 30)
        res.check(cyc.curve_constraints(ind, deg, chi) == curve_constraints_oracle(ind, deg, chi),
                  f"curve rule ({ind},{deg},{chi})")
    for args, want in (((3, 6, 3), True), ((3, 4, 3), False), ((2, 1, 1), True), ((4, 3, 1), False)):
        res.check(cyc.curve_constraints(*args) == want, f"curve rule {args}")


SUITES = {
    "wedderburn": suite_wedderburn,
    "points": suite_points,
    "eigen": suite_eigen,
    "division": suite_division,
    "splitq": suite_splitq,
    "ffperiods": suite_ffperiods,
    "primary": suite_primary,
    "hilbert90": suite_hilbert90,
    "picard": suite_picard,
    "endalg": suite_endalg,
    "sandwich": suite_sandwich,
    "curves": suite_curves,
    "divisibility": suite_divisibility,
}


def run_suite(name: str) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}; known: all, {', '.join(SUITES)}")
    return [SUITES[name]()]
