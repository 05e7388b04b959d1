"""Lattice vertex weights: rank-one, fused, R-matrix, exchange relation,
column weights and the partition function."""

import itertools

import pytest

from modmacd.combinat import Partition, SequencePair, conjugate, multiplicity
from modmacd.errors import TopMismatch
from modmacd.exactalg import (ExactPolynomial, P, RationalFunction, sym)
from modmacd.lattice import (FaceState, chi_column, chi_exponent,
                             column_weight, fundamental_L,
                             fused_L_recurrence, fused_vertex_bruteforce,
                             partition_function_coeffs, r_matrix, rll_check,
                             weight_fused, weight_fused_x, weight_fused_z,
                             weight_hl, weight_hl_factorization_check)
from modmacd.phi import phi_at_one
from modmacd.qseries import gauss_binomial

Q = sym("q")
T = sym("t")
X = sym("x")
Z = sym("z")


def small_faces(n, occ):
    rng = range(occ + 1)
    for sig in itertools.product(rng, repeat=n):
        for st in itertools.product(rng, repeat=n):
            for rho in itertools.product(rng, repeat=n):
                rt = tuple(s + r - t_ for s, t_, r in zip(sig, st, rho))
                if any(v < 0 or v > occ for v in rt):
                    continue
                yield FaceState(sig, st, rho, rt)


def test_face_state_conservation():
    f = FaceState((1, 0), (0, 1), (0, 1), (1, 0))
    assert f.conserves()
    g = FaceState((1, 0), (0, 0), (0, 0), (0, 0))
    assert not g.conserves()
    with pytest.raises(ValueError):
        FaceState((1,), (1, 0), (1,), (1,))


def test_rank_one_weight_values():
    assert weight_hl(0, 1, 1, 0) == X
    assert weight_hl(1, 2, 1, 0) == T * X ** 2
    assert weight_hl(0, 0, 2, 2) == P(1)
    assert weight_hl(1, 1, 1, 1) == (P(1) + T) * X
    assert weight_hl(1, 0, 0, 0).is_zero()


def test_fused_weight_specializations():
    for f in small_faces(2, 2):
        full = weight_fused(f)
        assert full.substitute({"z": P(0)}) == weight_fused_x(f)
        assert full.substitute({"x": P(0)}) == weight_fused_z(f)


def test_fused_weight_factorizes_into_rank_one():
    for f in small_faces(2, 2):
        assert weight_hl_factorization_check(f)


def test_fundamental_L_values():
    # Conservation I + e_j = K + e_i; elements depend on the incoming state.
    I = (2, 1)
    assert fundamental_L(0, 0, I, I) == P(1)
    assert fundamental_L(2, 0, I, (2, 2)) == P(1)
    # Diagonal: x times t to the occupation above the colour.
    assert fundamental_L(1, 1, I, I) == X * T
    assert fundamental_L(2, 2, I, I) == X
    # Strictly increasing colour or entry from colour 0.
    assert fundamental_L(0, 1, I, (1, 1)) == X * (P(1) - T ** 2) * T
    assert fundamental_L(1, 2, (2, 1), (3, 0)) == X * (P(1) - T)
    # Colour cannot decrease across the vertex.
    assert fundamental_L(2, 1, (2, 2), (1, 3)).is_zero()
    # Violating conservation gives zero.
    assert fundamental_L(1, 1, I, (2, 2)).is_zero()


def test_r_matrix_row_sums_are_one():
    # Summing over outgoing labels at fixed incoming labels gives one.
    one = RationalFunction(P(1))
    for n in (1, 2):
        for ia in range(n + 1):
            for ib in range(n + 1):
                acc = RationalFunction(P(0))
                for ja in range(n + 1):
                    for jb in range(n + 1):
                        if ja + jb != ia + ib and {ja, jb} != {ia, ib}:
                            continue
                        if sorted((ja, jb)) != sorted((ia, ib)):
                            continue
                        acc = acc + r_matrix(ia, ja, ib, jb)
                assert acc == one


def test_exchange_relation():
    assert rll_check(1, 2)
    assert rll_check(2, 2)


def test_fused_vertex_matches_recurrence_at_fusion_point():
    minus = ExactPolynomial.constant(-1)
    for J in (1, 2):
        for lam in itertools.product(range(2), repeat=2):
            if sum(lam) > J:
                continue
            for mu in itertools.product(range(2), repeat=2):
                if sum(mu) > J:
                    continue
                for lamp in itertools.product(range(2), repeat=2):
                    mup = tuple(a + b - c
                                for a, b, c in zip(lam, lamp, mu))
                    if any(v < 0 for v in mup):
                        continue
                    spec = fused_L_recurrence(lam, mu, lamp, mup).substitute(
                        {"z": minus * T ** J * X})
                    brute = fused_vertex_bruteforce(J, lam, mu, lamp, mup)
                    assert spec == brute


def test_fused_recurrence_matches_kappa_sum():
    for f in small_faces(2, 2):
        if not f.conserves():
            continue
        got = fused_L_recurrence(f.sigma, f.sigmatilde, f.rho, f.rhotilde)
        assert got == weight_fused(
            FaceState(f.sigma, f.sigmatilde, f.rho, f.rhotilde))


def test_column_weight_hl_variant():
    lam = Partition((2, 2, 1))
    conj = conjugate(lam)
    # Column 1 of lambda = (2,2,1): tops are lambda'_1 = 3 and lambda'_2 = 2.
    nu = (0, 2)
    nut = (1, 3)
    w = column_weight(1, lam, (nu, nut), variant="hl")
    d1, d2 = 1, 2
    expect = T ** (d1 * (d1 - 1) // 2 + d2 * (d2 - 1) // 2) \
        * gauss_binomial(nut[1] - nu[0], nut[0] - nu[0]) \
        * sym("x1") ** 1 * sym("x2") ** 2
    assert w == RationalFunction(expect)
    with pytest.raises(TopMismatch):
        column_weight(1, lam, ((0, 1), (1, 2)), variant="hl")


def test_column_weight_single_column_shape():
    # For a single-column lambda the normalizer is trivial and the only
    # factor is the diagonal one, evaluated at argument one.
    lam = Partition((1, 1))
    nu = (0, 2)
    nut = (1, 2)
    sp = SequencePair(nu, nut)
    w = column_weight(1, lam, {1: (nu, nut)}, variant="x")
    expo = chi_column(1, {1: (nu, nut)})
    expect = T ** expo * phi_at_one(sp) \
        * sym("x1") ** 1 * sym("x2") ** 1
    assert w == RationalFunction(expect)
    with pytest.raises(TopMismatch):
        column_weight(1, lam, {1: ((0, 1), (1, 1))}, variant="x")


def test_partition_function_routes_agree():
    for w in range(1, 4):
        from modmacd.combinat import partitions_of
        for lam in partitions_of(w):
            N = max(len(lam), lam.part(1), 1)
            a = partition_function_coeffs(lam, N, formula="x")
            b = partition_function_coeffs(lam, N, formula="z")
            assert a == b


def test_partition_function_hl_matches_q_zero():
    for lam in (Partition((2,)), Partition((1, 1)), Partition((2, 1))):
        N = max(len(lam), lam.part(1), 1)
        full = partition_function_coeffs(lam, N, formula="x")
        at0 = {mu: p.substitute({"q": P(0)}) for mu, p in full.items()}
        at0 = {mu: p for mu, p in at0.items() if not p.is_zero()}
        assert at0 == partition_function_coeffs(lam, N, formula="hl")


def test_partition_function_known_tables():
    got = partition_function_coeffs(Partition((2,)), 2, formula="x")
    assert got == {Partition((2,)): P(1), Partition((1, 1)): P(1) + Q}
    got = partition_function_coeffs(Partition((1, 1)), 2, formula="x")
    assert got == {Partition((2,)): T, Partition((1, 1)): P(1) + T}
