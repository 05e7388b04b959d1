"""Acceptance sweep: twelve end-to-end criteria, one test (and one printed
pass/fail line) each.  All comparisons are exact."""

import itertools
import time

from modmacd.combinat import Partition, SequencePair, partitions_of
from modmacd.exactalg import ExactPolynomial, P, sym
from modmacd.lattice import (fused_L_recurrence, fused_vertex_bruteforce,
                             rll_check)
from modmacd.modmac import (cauchy_check, duality_check, kostka_qt,
                            modified_H, modified_HL, w_reduction_check)
from modmacd.phi import (g_poly, phi_finite, phi_normalized, phi_positive,
                         phi_prime, phi_prime_series, phi_series, rotate)

Q = sym("q")
T = sym("t")
Z = sym("z")
X = sym("x")


def _report(number, budget, started):
    elapsed = time.time() - started
    print("CRITERION %d: PASS (%.1fs)" % (number, elapsed))
    assert elapsed < budget, \
        "criterion %d exceeded its %ds budget" % (number, budget)


def _nondecreasing(bound, length):
    for tup in itertools.product(range(bound + 1), repeat=length):
        if all(tup[i] <= tup[i + 1] for i in range(length - 1)):
            yield tup


def _dominated_pairs(bound, nmax):
    for N in range(1, nmax + 1):
        for nut in _nondecreasing(bound, N):
            for nu in _nondecreasing(bound, N - 1):
                full = nu + (nut[-1],)
                if any(full[i] > full[i + 1] for i in range(N - 1)):
                    continue
                if any(a > b for a, b in zip(full, nut)):
                    continue
                yield SequencePair(full, nut)


def _all_pairs(bound, nmax):
    for N in range(1, nmax + 1):
        for nut in _nondecreasing(bound, N):
            for nu in _nondecreasing(bound, N - 1):
                full = nu + (nut[-1],)
                if any(full[i] > full[i + 1] for i in range(N - 1)):
                    continue
                yield SequencePair(full, nut)


_H_TABLES = {}


def _h_table(lam, route):
    key = (lam.parts, route)
    if key not in _H_TABLES:
        N = max(len(lam), lam.part(1), 1)
        _H_TABLES[key] = modified_H(lam, N=N, route=route).coeffs
    return _H_TABLES[key]


def test_criterion_01_phi_worked_example():
    t0 = time.time()
    sp = SequencePair((1, 3, 4, 5), (2, 3, 5, 5))
    one = P(1)
    expected = T ** 8 * Z ** 3 \
        + P(2) * (one + T) * (one + T + T ** 2) * T ** 4 * Z ** 2 \
        + (one + T + T ** 2) * (one + P(3) * T + T ** 2) * T * Z \
        + (one + T)
    assert phi_series(sp) == expected
    assert phi_finite(sp) == expected
    assert phi_positive(sp) == expected
    _report(1, 1, t0)


def test_criterion_02_phi_routes_exhaustive():
    t0 = time.time()
    count = 0
    for sp in _dominated_pairs(6, 4):
        a = phi_series(sp)
        assert a == phi_finite(sp)
        assert a == phi_positive(sp)
        assert a.is_nonnegative()
        count += 1
    assert count > 5000
    _report(2, 120, t0)


def test_criterion_03_rotation_and_prime_relation():
    t0 = time.time()
    for sp in _all_pairs(4, 3):
        base = phi_normalized(sp)
        for k in range(1, sp.N + 1):
            rotated, shift = rotate(sp, k)
            assert ExactPolynomial.monomial({"z": shift}) \
                * phi_normalized(rotated) == base
        assert phi_prime_series(sp) == phi_prime(sp)
    _report(3, 60, t0)


def test_criterion_04_g_polynomial():
    t0 = time.time()
    for m in range(4):
        for n in (1, 2, 3):
            for a in itertools.product(range(5), repeat=n):
                for b in itertools.product(range(5), repeat=n):
                    s = g_poly(m, a, b, form="sum")
                    p = g_poly(m, a, b, form="positive")
                    assert s == p
                    assert p.is_nonnegative()
    _report(4, 60, t0)


def test_criterion_05_fusion_identification():
    t0 = time.time()
    minus = ExactPolynomial.constant(-1)
    for n in (1, 2):
        for J in (1, 2, 3):
            for lam in itertools.product(range(3), repeat=n):
                if sum(lam) > J:
                    continue
                for mu in itertools.product(range(3), repeat=n):
                    if sum(mu) > J:
                        continue
                    for lamp in itertools.product(range(3), repeat=n):
                        mup = tuple(x + y - w
                                    for x, y, w in zip(lam, lamp, mu))
                        if any(v < 0 or v > 2 for v in mup):
                            continue
                        spec = fused_L_recurrence(
                            lam, mu, lamp, mup).substitute(
                                {"z": minus * T ** J * X})
                        assert spec == fused_vertex_bruteforce(
                            J, lam, mu, lamp, mup)
    _report(5, 120, t0)


def test_criterion_06_exchange_relation():
    t0 = time.time()
    assert rll_check(1, 3)
    assert rll_check(2, 3)
    _report(6, 120, t0)


def test_criterion_07_h_routes_identical():
    t0 = time.time()
    for w in range(1, 7):
        for lam in partitions_of(w):
            a = _h_table(lam, "lattice_x")
            b = _h_table(lam, "lattice_dual")
            c = _h_table(lam, "oracle")
            assert a == b == c
            for poly in a.values():
                assert poly.is_nonnegative()
    _report(7, 600, t0)


def test_criterion_08_hall_littlewood_collapse():
    t0 = time.time()
    for w in range(1, 7):
        for lam in partitions_of(w):
            N = max(len(lam), lam.part(1), 1)
            full = _h_table(lam, "lattice_x")
            at0 = {mu: p.substitute({"q": P(0)}) for mu, p in full.items()}
            at0 = {mu: p for mu, p in at0.items() if not p.is_zero()}
            assert at0 == modified_HL(lam, N)
    _report(8, 120, t0)


def test_criterion_09_reduction_square():
    t0 = time.time()
    for w in range(1, 5):
        for lam in partitions_of(w):
            assert w_reduction_check(lam, w)
    _report(9, 180, t0)


def test_criterion_10_duality():
    t0 = time.time()
    for w in range(1, 6):
        for lam in partitions_of(w):
            assert duality_check(lam)
    _report(10, 120, t0)


def test_criterion_11_cauchy_identities():
    t0 = time.time()
    for name in ("PQ", "dual", "W", "mixedQ", "mixedP"):
        assert cauchy_check(name, 2, 2, 3)
    _report(11, 300, t0)


def test_criterion_12_kostka_positivity_and_triangularity():
    t0 = time.time()
    zeros = {"q": P(0), "t": P(0)}
    for w in range(1, 7):
        for lam in partitions_of(w):
            table = kostka_qt(lam)
            for nu, poly in table.items():
                # Positivity is asserted inside the extraction as well; the
                # explicit check keeps this criterion self-contained.
                assert poly.is_nonnegative()
                val = poly.substitute(zeros)
                assert val.is_zero() or val == P(1)
                if not val.is_zero() and nu != lam:
                    # Off-diagonal survivors would break triangularity.
                    raise AssertionError(
                        "unexpected entry at %r for %r" % (nu, lam))
            assert table[lam].substitute(zeros) == P(1)
    _report(12, 180, t0)
