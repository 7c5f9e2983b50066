import cmath
import math

import numpy as np
import pytest

from specnorm import (
    INFINITY_ROOT,
    anti_eigen_census,
    apply_unitary,
    build_pq,
    build_uv,
    candidate_roots,
    eval_form,
    exceptionality,
    fixed_point_polynomial,
    hs_norm,
    is_nonsingular,
    make_state,
    normalize,
    random_state,
    spectral_norm,
    witness,
)
from specnorm.errors import (
    ExceptionalFamily,
    NotReal,
    QVanishes,
    SdVanishes,
    ZeroState,
)
from specnorm.golden import case
from specnorm.polynomials import poly_eval
from specnorm.states import binomial_weights


def product_state(d, t):
    # f = (x0 + t x1)^d, the archetypal sigma = 1 singular state
    return normalize(make_state(d, [t ** j for j in range(d + 1)]))


class TestPq:
    def test_coefficients(self):
        st = make_state(3, [1.0, 2.0, 3.0, 4.0])
        pq = build_pq(st)
        assert np.allclose(pq.p.coeffs, [2.0, 6.0, 4.0])
        assert np.allclose(pq.q.coeffs, [1.0, 4.0, 3.0])

    def test_form_splits_through_pq(self, rng):
        # f(x0,x1) = x0 * Q(x0,x1) + x1 * P(x0,x1) with P, Q the degree d-1
        # homogenizations of p and q
        for _ in range(30):
            d = int(rng.integers(2, 9))
            st = random_state(d, rng)
            pq = build_pq(st)
            x0 = complex(rng.standard_normal(), rng.standard_normal())
            x1 = complex(rng.standard_normal(), rng.standard_normal())
            z = x1 / x0
            qh = x0 ** (d - 1) * poly_eval(pq.q, z)
            ph = x0 ** (d - 1) * poly_eval(pq.p, z)
            f = eval_form(st, x0, x1)
            assert abs(x0 * qh + x1 * ph - f) <= 1e-10 * (1.0 + abs(f))


class TestUv:
    def test_composition_at_points(self, rng):
        # u(z) = sum_j C(d-1,j) conj(s_{j+1}) p(z)^j q(z)^{d-1-j}, same for v
        # with conj(s_j); the stored pair carries exp(-logscale)
        for _ in range(50):
            d = int(rng.integers(2, 8))
            st = random_state(d, rng)
            pq = build_pq(st)
            uv = build_uv(st, pq)
            z = 0.8 * complex(rng.standard_normal(), rng.standard_normal())
            pz = poly_eval(pq.p, z)
            qz = poly_eval(pq.q, z)
            w = binomial_weights(d - 1)
            du = sum(w[j] * np.conj(st.s[j + 1]) * pz ** j * qz ** (d - 1 - j)
                     for j in range(d))
            dv = sum(w[j] * np.conj(st.s[j]) * pz ** j * qz ** (d - 1 - j)
                     for j in range(d))
            lift = math.exp(uv.logscale)
            assert poly_eval(uv.u, z) * lift == pytest.approx(du, rel=1e-8, abs=1e-12)
            assert poly_eval(uv.v, z) * lift == pytest.approx(dv, rel=1e-8, abs=1e-12)

    def test_fixed_point_polynomial_is_zv_minus_u(self, rng):
        st = random_state(5, rng)
        uv = build_uv(st)
        w = fixed_point_polynomial(uv)
        for z in (0.3 + 0.1j, -1.2 + 0.7j):
            want = z * poly_eval(uv.v, z) - poly_eval(uv.u, z)
            assert poly_eval(w, z) == pytest.approx(want, rel=1e-12)

    def test_degree_bound(self, rng):
        for d in (3, 5, 8):
            st = random_state(d, rng)
            w = fixed_point_polynomial(build_uv(st))
            assert w.degree <= (d - 1) ** 2 + 1

    def test_scaling_keeps_64bit_range_at_d32(self, rng):
        st = random_state(32, rng)
        uv = build_uv(st)
        assert np.all(np.isfinite(uv.u.coeffs)) and np.all(np.isfinite(uv.v.coeffs))
        assert np.abs(uv.u.coeffs).max() < 1e100

    def test_exceptionality_zero_for_monomial(self):
        st = normalize(make_state(4, [0, 0, 1.0, 0, 0]))
        assert exceptionality(build_uv(st)) == pytest.approx(0.0, abs=1e-14)

    def test_exceptionality_positive_generic(self, rng):
        st = random_state(5, rng)
        assert exceptionality(build_uv(st)) > 1e-6


class TestCandidateRoots:
    def test_a2_portrait(self):
        st = normalize(make_state(3, case("A.2").coeffs))
        cands = candidate_roots(st)
        got = sorted((c.z for c in cands), key=lambda t: (t.real, t.imag))
        want = sorted([complex(1 / math.sqrt(3)), complex(-1 / math.sqrt(3)),
                       1j, -1j], key=lambda t: (t.real, t.imag))
        for g, w in zip(got, want):
            assert abs(g - w) < 1e-6
        assert all(c.in_R for c in cands)

    def test_membership_flags_consistent(self, rng):
        for _ in range(10):
            d = int(rng.integers(3, 9))
            st = random_state(d, rng)
            for c in candidate_roots(st):
                if c.in_R:
                    assert c.in_R1
                if c.in_Rprime:
                    assert c.in_R and c.in_R1prime
                if c.in_R1prime:
                    assert abs(c.z.imag) <= 1e-6 * (1.0 + abs(c.z.real))
                assert c.lambda_q >= 0.0 and c.lambda_v >= 0.0

    def test_a4_exclusions(self):
        rc = case("A.4")
        st = normalize(make_state(4, rc.coeffs))
        cands = candidate_roots(st)
        out = [c.z for c in cands if not c.in_R]
        assert len(out) == len(rc.excluded)
        for w in rc.excluded:
            assert min(abs(z - w) for z in out) < 2e-3

    def test_exceptional_raises(self):
        st = normalize(make_state(4, [0, 0, 1.0, 0, 0]))
        with pytest.raises(ExceptionalFamily):
            candidate_roots(st)

    def test_zero_state_raises(self):
        with pytest.raises(ZeroState):
            candidate_roots(make_state(3, [0, 0, 0, 0]))


class TestWitness:
    def test_generic_witness_attains_sigma(self, rng):
        for _ in range(15):
            d = int(rng.integers(3, 9))
            st = random_state(d, rng)
            res = spectral_norm(st, "complex")
            v = res.witness
            assert abs(abs(v.x0) ** 2 + abs(v.x1) ** 2 - 1.0) < 1e-12
            assert abs(eval_form(st, v.x0, v.x1)) == pytest.approx(res.sigma, abs=1e-9)

    def test_real_witness_is_real(self, rng):
        for _ in range(10):
            d = int(rng.integers(3, 8))
            st = random_state(d, rng, real=True)
            res = spectral_norm(st, "real")
            assert res.witness.is_real
            assert abs(eval_form(st, res.witness.x0, res.witness.x1)) == pytest.approx(
                res.sigma, abs=1e-9)

    def test_phase_convention_complex(self, rng):
        # f at the complex witness is real nonnegative
        st = random_state(5, rng)
        res = spectral_norm(st, "complex")
        f = eval_form(st, res.witness.x0, res.witness.x1)
        assert f.imag == pytest.approx(0.0, abs=1e-9)
        assert f.real >= 0.0

    def test_infinity_root(self):
        st = make_state(3, [0, 0, 0, 0.5])
        v = witness(st, INFINITY_ROOT)
        assert v.x0 == 0.0
        assert abs(v.x1) == pytest.approx(1.0)
        assert abs(eval_form(st, v.x0, v.x1)) == pytest.approx(0.5)

    def test_infinity_root_needs_sd(self):
        st = make_state(3, [0.5, 0, 0, 0])
        with pytest.raises(SdVanishes):
            witness(st, INFINITY_ROOT)

    def test_far_root_no_overflow(self):
        # near-degenerate leading structure can push roots out to ~1e148;
        # the reconstruction must stay finite and unit-norm out there
        st = make_state(3, [0.4, -0.3, 0.2, 0.1])
        for z in (1e148 + 7e147j, -3e200 + 0j):
            v = witness(st, z)
            n2 = abs(v.x0) ** 2 + abs(v.x1) ** 2
            assert math.isfinite(n2) and abs(n2 - 1.0) < 1e-12
            assert abs(v.x0) < 1e-100

    def test_q_vanishes(self):
        # q has only the s_0 term; its root z = 0 never satisfies q(root) != 0
        st = make_state(2, [0.0, 1.0, 0.0])
        with pytest.raises(QVanishes):
            witness(st, 0.0 + 0.0j)

    def test_real_field_rejects_complex_root(self, rng):
        st = random_state(4, rng, real=True)
        with pytest.raises(NotReal):
            witness(st, 0.3 + 0.4j, field="real")


class TestSpectralNorm:
    def test_d2_matches_svd(self, rng):
        for _ in range(25):
            st = random_state(2, rng)
            m = np.array([[st.s[0], st.s[1]], [st.s[1], st.s[2]]])
            want = float(np.linalg.svd(m, compute_uv=False)[0])
            got = spectral_norm(st, "complex")
            assert got.sigma == pytest.approx(want, abs=1e-12)
            assert got.method == "matrix-d2"

    def test_d2_real_is_spectral_radius(self, rng):
        for _ in range(25):
            st = random_state(2, rng, real=True)
            m = np.array([[st.s[0], st.s[1]], [st.s[1], st.s[2]]]).real
            want = float(np.abs(np.linalg.eigvalsh(m)).max())
            got = spectral_norm(st, "real")
            assert got.sigma == pytest.approx(want, abs=1e-12)

    def test_sigma_scales_linearly(self, rng):
        st = random_state(5, rng)
        st3 = make_state(5, 3.0 * st.s)
        a = spectral_norm(st, "complex").sigma
        b = spectral_norm(st3, "complex").sigma
        assert b == pytest.approx(3.0 * a, rel=1e-12)

    def test_product_state_sigma_one(self):
        for d, t in ((3, 0.7), (5, -1.3), (8, 0.2)):
            res = spectral_norm(product_state(d, t), "complex")
            assert res.sigma == pytest.approx(1.0, abs=1e-9)

    def test_sd_only_state(self):
        res = spectral_norm(make_state(4, [0, 0, 0, 0, 2.0]), "complex")
        assert res.sigma == pytest.approx(2.0, abs=1e-14)
        assert res.witness_root == INFINITY_ROOT

    def test_generic_method_tag(self, rng):
        st = random_state(6, rng)
        assert spectral_norm(st, "complex").method == "generic"

    def test_real_field_needs_real_state(self, rng):
        with pytest.raises(NotReal):
            spectral_norm(random_state(4, rng), "real")

    def test_zero_state(self):
        with pytest.raises(ZeroState):
            spectral_norm(make_state(3, [0, 0, 0, 0]), "complex")

    def test_monomial_dispatch(self):
        st = normalize(make_state(6, [0, 0, 0, 1.0, 0, 0, 0]))
        res = spectral_norm(st, "complex")
        assert res.method == "exceptional-monomial"
        d, k = 6, 3
        want = math.comb(d, k) * (1 - k / d) ** ((d - k) / 2) * (k / d) ** (k / 2) / math.sqrt(math.comb(d, k))
        assert res.sigma == pytest.approx(want, rel=1e-12)

    def test_golden_a1(self):
        st = normalize(make_state(3, case("A.1").coeffs))
        assert spectral_norm(st, "complex").sigma == pytest.approx(0.7027, abs=5e-4)
        assert spectral_norm(st, "real").sigma == pytest.approx(0.6205, abs=5e-4)


class TestNonsingularAndCensus:
    def test_product_state_singular(self):
        assert not is_nonsingular(product_state(4, 0.7))

    def test_sd_only_singular(self):
        assert not is_nonsingular(make_state(4, [0, 0, 0, 0, 1.0]))

    def test_random_states_nonsingular(self, rng):
        hits = sum(is_nonsingular(random_state(5, rng)) for _ in range(20))
        assert hits == 20

    def test_d32_certificate(self, rng):
        assert is_nonsingular(random_state(32, rng))

    def test_census_a1(self):
        st = normalize(make_state(3, case("A.1").coeffs))
        cen = anti_eigen_census(st)
        assert cen.nonsingular
        assert cen.mu_reported == 5
        assert cen.lower_bound == 1 and cen.upper_bound == 5
        assert cen.bounds_satisfied

    def test_census_bounds_random(self, rng):
        for _ in range(10):
            d = int(rng.integers(3, 9))
            cen = anti_eigen_census(random_state(d, rng))
            if cen.nonsingular:
                lo = math.ceil(((d - 1) ** 2 - 1) / d)
                hi = (d - 1) ** 2 + 1
                assert cen.lower_bound == lo and cen.upper_bound == hi
                assert lo <= cen.mu_reported <= hi
                assert cen.bounds_satisfied

    def test_census_singular_bounds_not_applied(self):
        cen = anti_eigen_census(product_state(4, 0.7))
        assert not cen.nonsingular
        assert cen.bounds_satisfied is None


class TestUnitaryInvariance:
    def test_sigma_invariant(self, rng):
        for d in (3, 6, 10):
            st = random_state(d, rng)
            a = rng.normal(size=4)
            a /= np.linalg.norm(a)
            u = np.array([[a[0] + 1j * a[1], a[2] + 1j * a[3]],
                          [-a[2] + 1j * a[3], a[0] - 1j * a[1]]])
            s1 = spectral_norm(st, "complex").sigma
            s2 = spectral_norm(apply_unitary(st, u), "complex").sigma
            assert s2 == pytest.approx(s1, abs=1e-7)
