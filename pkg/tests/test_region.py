import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sampling import annulus, exponents
from trinom.bohl import count_roots
from trinom.config import DEFAULT
from trinom.core import CertificateKind, NormalizedTrinomial, Trinomial, ZeroCoefficient
from trinom.oracle import spectral_verdict
from trinom.region import (
    InvalidParameters,
    NotInProjection,
    RegionPoint,
    RegionTag,
    ZeroV,
    classify_region,
    classify_uv,
    compose_parameters,
    decompose_parameters,
    is_schur_stable,
    omega_uv,
    project_pi,
    real_stability_c1c2,
    real_stability_c2_prime,
    sign_flip_table,
    t_bound,
)


def test_projection_examples():
    p = project_pi(NormalizedTrinomial(4, 3, -2j, 0.3 + 0.4j))
    assert (p.x, p.y) == pytest.approx((2.0, 0.5))
    e = cmath.exp(0.6j)
    p = project_pi(NormalizedTrinomial(11, 10, -e, -0.05 * e))
    assert (p.x, p.y) == pytest.approx((1.0, -0.05))
    p = project_pi(NormalizedTrinomial(3, 1, 1, 1))
    assert (p.x, p.y) == (1.0, -1.0)


def test_region_point_sign_convention():
    with pytest.raises(InvalidParameters):
        RegionPoint(1.0, 0.5, 3, 1)
    with pytest.raises(InvalidParameters):
        RegionPoint(-1.0, 0.5, 4, 1)
    RegionPoint(1.0, -0.5, 3, 1)


def test_omega_uv_unimodular():
    for n, m in [(3, 1), (5, 4), (7, 2)]:
        for c in (0.1, 0.5, 0.9):
            assert 2 * omega_uv(1.0, c, n, m) == pytest.approx((n + m) * math.acos(c / 2) / math.pi)


def test_omega_uv_on_hypotenuse():
    # u + |v| = 1 is a degenerate triangle with the unit side as the sum
    for u in (0.2, 0.5, 0.9):
        assert omega_uv(u, 1 - u, 4, 3) == pytest.approx(2.0)
        # both law-of-cosines arguments sit at the ends of [-1, 1]
        v = 1 - u
        assert (u * u + v * v - 1) / (2 * u * v) == pytest.approx(-1.0)
        assert (1 - u * u + v * v) / (2 * v) == pytest.approx(1.0)


def test_omega_uv_errors():
    with pytest.raises(ZeroV):
        omega_uv(0.5, 0.0, 3, 1)


def test_classify_region_examples():
    assert classify_region(RegionPoint(0.3, 0.3, 4, 3)).tag is RegionTag.GAMMA
    assert classify_region(RegionPoint(1.0, -0.05, 11, 10)).tag is RegionTag.DELTA
    assert classify_region(RegionPoint(1.0, 0.5, 4, 1)).tag is RegionTag.OUTSIDE


def test_off_quadrant_cohn():
    rc = classify_uv(0.3, -0.3, 4, 3)
    assert rc.tag is RegionTag.COHN
    assert classify_uv(-1.5, 0.3, 4, 3).tag is RegionTag.OUTSIDE


def test_hypotenuse_is_delta_and_marginal():
    rc = classify_uv(0.5, 0.5, 4, 3)
    assert rc.tag is RegionTag.DELTA and rc.marginal


def test_stable_projection_with_unstable_rotation():
    assert is_schur_stable(Trinomial(11, 10, 1, 1, -0.05)).stable
    e = cmath.exp(0.6j)
    v = is_schur_stable(Trinomial(11, 10, 1, -e, -0.05 * e))
    assert not v.stable and not v.marginal


@pytest.mark.parametrize("c", [0.05, 0.25, 0.5, 0.75, 0.95])
def test_lambert_stable(c):
    assert is_schur_stable(Trinomial(2, 1, 1, 1, c)).stable


@pytest.mark.parametrize("c", [-0.95, -0.5, -0.05, 1.0, 1.3])
def test_lambert_unstable(c):
    assert not is_schur_stable(Trinomial(2, 1, 1, 1, c)).stable


def test_certificates():
    v = is_schur_stable(Trinomial(5, 2, 1, 0.1, 0.1))
    assert v.certificate.kind is CertificateKind.COHN_MEMBERSHIP
    v = is_schur_stable(Trinomial(5, 2, 1, 0.1, 1.5))
    assert v.certificate.kind is CertificateKind.PRODUCT_BOUND and not v.stable
    v = is_schur_stable(Trinomial(11, 10, 1, 1, -0.05))
    cert = v.certificate
    assert cert.kind is CertificateKind.PARAMETRIZATION
    assert abs(cert.t) < cert.t_bound
    v = is_schur_stable(Trinomial(4, 1, 1, 1, 0.5))
    assert v.certificate.kind is CertificateKind.BOHL_COUNT
    assert v.certificate.count < 4
    v = is_schur_stable(Trinomial(3, 1, 0, 1, 0.5))
    assert v.certificate.kind is CertificateKind.DEGENERATE_TABLE


def test_verdict_matches_oracle_and_disc_count(rng):
    checked = 0
    for _ in range(3000):
        n, m = exponents(rng)
        b, c = annulus(rng, 2, 0.05, 1.5)
        t = Trinomial(n, m, 1, b, c)
        v = is_schur_stable(t)
        sv = spectral_verdict(t)
        dc = count_roots(t, 1.0)
        if v.marginal or sv.marginal or dc.marginal:
            continue
        assert v.stable == sv.stable
        assert v.stable == (dc.count == n)
        checked += 1
    assert checked > 2900


def test_outside_is_never_stable(rng):
    seen = 0
    for _ in range(3000):
        n, m = exponents(rng)
        b, c = annulus(rng, 2, 0.05, 1.0)
        nt = NormalizedTrinomial(n, m, b, c)
        rc = classify_region(project_pi(nt))
        if rc.tag is not RegionTag.OUTSIDE or rc.marginal:
            continue
        assert spectral_verdict(nt.as_trinomial()).rho >= 1 - 1e-9
        seen += 1
    assert seen > 100


def test_decompose_canonical_form():
    p = decompose_parameters(NormalizedTrinomial(4, 3, 0.7, 0.2))
    assert (p.x, p.y, p.s, p.t) == pytest.approx((0.7, 0.2, 0.0, 0.0), abs=1e-15)
    p = decompose_parameters(NormalizedTrinomial(5, 2, 0.7, -0.2))
    assert (p.x, p.y, p.s, p.t) == pytest.approx((0.7, -0.2, 0.0, 0.0), abs=1e-15)


def test_decompose_extremal_t():
    n, m = 5, 3
    nt = NormalizedTrinomial(n, m, 0.4 * cmath.exp(1j * math.pi / n), -0.3)
    p = decompose_parameters(nt)
    assert abs(p.t) == pytest.approx(math.pi / n, abs=1e-12)
    back = compose_parameters(p.x, p.y, p.s, p.t, n, m)
    assert back.b == pytest.approx(nt.b, abs=1e-12)
    assert back.c == pytest.approx(nt.c, abs=1e-12)


@settings(max_examples=300)
@given(st.integers(2, 12), st.integers(1, 11), st.floats(0.05, 3), st.floats(-math.pi, math.pi),
       st.floats(0.05, 3), st.floats(-math.pi, math.pi))
def test_compose_decompose_round_trip(n, m, xb, pb, xc, pc):
    if m >= n or math.gcd(n, m) != 1:
        return
    nt = NormalizedTrinomial(n, m, xb * cmath.exp(1j * pb), xc * cmath.exp(1j * pc))
    p = decompose_parameters(nt)
    assert abs(p.t) <= math.pi / n + 1e-12
    assert 0 <= p.s <= 2 * math.pi
    back = compose_parameters(p.x, p.y, p.s, p.t, n, m)
    assert abs(back.b - nt.b) <= 1e-12 * max(1, abs(nt.b))
    assert abs(back.c - nt.c) <= 1e-12 * max(1, abs(nt.c))


def test_compose_validation():
    with pytest.raises(InvalidParameters):
        compose_parameters(0, 0.5, 0, 0, 3, 1)
    with pytest.raises(InvalidParameters):
        compose_parameters(0.5, 0, 0, 0, 3, 1)
    with pytest.raises(InvalidParameters):
        compose_parameters(0.5, 0.5, 7.0, 0, 3, 1)


def test_gamma_with_t0_s_pi_is_real_and_stable():
    n, m, x, y = 4, 3, 0.3, 0.4
    nt = compose_parameters(x, y, math.pi, 0.0, n, m)
    assert nt.b == pytest.approx(-x) and nt.c == pytest.approx(y)
    assert is_schur_stable(nt.as_trinomial()).stable


def test_delta0_reflection_not_reachable():
    # (4, 3) Delta point: the real trinomial with flipped constant term is unstable
    x, y = 1.0, 0.3
    assert classify_region(RegionPoint(x, y, 4, 3)).tag is RegionTag.DELTA
    assert is_schur_stable(Trinomial(4, 3, 1, x, y)).stable
    assert not is_schur_stable(Trinomial(4, 3, 1, x, -y)).stable


def test_unimodular_complex_threshold():
    n = 4
    cabs = 0.2
    assert (n - 1) * math.pi / (2 * n - 1) < math.acos(cabs / 2)
    rc = classify_region(RegionPoint(1.0, cabs, n, n - 1))
    expected = ((2 * n - 1) * math.acos(cabs / 2) - (n - 1) * math.pi) / n
    assert t_bound(rc, n) == pytest.approx(expected)


def test_gamma_bound_inclusive():
    n, m = 5, 2
    nt = compose_parameters(0.3, -0.2, 0.4, math.pi / n, n, m)
    v = is_schur_stable(nt.as_trinomial())
    assert v.stable
    assert spectral_verdict(nt.as_trinomial()).stable


def test_real_conditions_examples():
    assert real_stability_c1c2(0.3, -0.4, 5, 2)
    # sign condition fails with |x| + |y| >= 1
    assert not real_stability_c1c2(1.0, 0.3, 3, 1)
    # n = 2, m = 1, x = 1, y = -0.5 is not stable (Lambert: need 0 < y < 1)
    assert not real_stability_c1c2(1.0, -0.5, 2, 1)
    assert not real_stability_c2_prime(1.0, -0.5, 2, 1)
    assert real_stability_c1c2(1.0, 0.5, 2, 1)
    assert real_stability_c2_prime(1.0, 0.5, 2, 1)


def test_real_conditions_against_oracle(rng):
    for _ in range(2000):
        n, m = exponents(rng, 8)
        x, y = rng.uniform(-2, 2, 2)
        sv = spectral_verdict(Trinomial(n, m, 1, x, y))
        if sv.marginal:
            continue
        assert real_stability_c1c2(x, y, n, m) == sv.stable
        assert real_stability_c2_prime(x, y, n, m) == sv.stable


def test_sign_flip_examples():
    table = sign_flip_table(0.2, 0.3, 4, 3)
    assert all(table.values())
    table = sign_flip_table(1.0, 0.3, 4, 3)
    assert table == {(1, 1): True, (-1, 1): True, (1, -1): False, (-1, -1): False}
    table = sign_flip_table(0.9, -0.3, 3, 1)
    assert table == {(1, 1): True, (-1, 1): False, (1, -1): True, (-1, -1): False}
    with pytest.raises(NotInProjection):
        sign_flip_table(1.0, 0.5, 4, 1)


def test_config_tolerance_controls_marginality():
    nt = NormalizedTrinomial(4, 3, 0.5, 0.5 + 1e-7)
    assert classify_uv(0.5, 0.5 + 1e-7, 4, 3).tag is RegionTag.DELTA
    loose = DEFAULT.updated(tau_tri=1e-6)
    assert classify_uv(abs(nt.b), abs(nt.c), 4, 3, loose).marginal
