"""Presentations: rule counts, determinant, antipode tables, zero testing."""

from itertools import product
from math import comb

import pytest

from qsphere.freealg import DINV, NcPoly, u, z, zs
from qsphere.presentations import (
    antipode_matrix,
    build,
    build_free_matrix,
    build_torus,
    check_central,
    check_matrix_identities,
    check_star_closure,
    check_star_involution,
    dinv_split,
    embed_sphere,
    quantum_determinant,
)
from qsphere.scalars import DeformationContext, ONE

ctx = DeformationContext.standard()
q = ctx.q


# -- rule counts ------------------------------------------------------------


@pytest.mark.parametrize("N", [1, 2, 3])
def test_mq_rule_count(N):
    # one oriented rule per unordered pair of distinct generators
    P = build("mq", N)
    assert len(P.system.rules) == comb(N * N, 2)


def test_sphere_rule_count():
    # z-z, zs-zs, mixed off-diagonal, diagonal straightening, unit relation
    for N in (1, 2, 3):
        P = build("sphere", N)
        want = 2 * comb(N, 2) + N * (N - 1) + N + 1
        assert len(P.system.rules) == want


# -- quantum determinant ----------------------------------------------------


def test_det_n1_n2_explicit():
    assert quantum_determinant(1) == NcPoly.gen(u(1, 1))
    d2 = NcPoly.monomial((u(1, 1), u(2, 2))) - NcPoly.monomial((u(1, 2), u(2, 1)), q)
    assert quantum_determinant(2) == d2


def test_det_column_expansion_oracle():
    # independent construction: expand along the last row with quantum signs
    def det_rec(rows, cols):
        if not rows:
            return NcPoly.unit()
        r = rows[-1]
        out = NcPoly()
        for pos, c in enumerate(cols):
            minor = det_rec(rows[:-1], cols[:pos] + cols[pos + 1 :])
            sign = (-q) ** (len(cols) - 1 - pos)
            out = out + (minor * NcPoly.gen(u(r, c))).scale(sign)
        return out

    for N in (2, 3):
        rows = cols = list(range(1, N + 1))
        assert quantum_determinant(N) == det_rec(rows, cols)


@pytest.mark.parametrize("N", [2, 3])
def test_det_central_in_mq(N):
    P = build("mq", N)
    assert check_central(quantum_determinant(N), P)


def test_det_leading_coefficient():
    d = quantum_determinant(3)
    lead = (u(1, 3), u(2, 2), u(3, 1))
    assert d.coeff(lead) == (-q) ** 3


# -- antipode tables --------------------------------------------------------


def test_antipode_table_n2_sl():
    S = antipode_matrix(2, "sl")
    assert S[0][0] == NcPoly.gen(u(2, 2))
    assert S[0][1] == NcPoly.gen(u(1, 2), -(q ** (-1)))
    assert S[1][0] == NcPoly.gen(u(2, 1), -q)
    assert S[1][1] == NcPoly.gen(u(1, 1))


def test_antipode_table_gl_has_dinv_factor():
    G = antipode_matrix(2, "gl")
    assert G[0][0] == NcPoly.monomial((DINV, u(2, 2)))


# -- star structure ---------------------------------------------------------


@pytest.mark.parametrize("name,N", [("sphere", 2), ("sphere", 3),
                                    ("suq", 2), ("suq", 3),
                                    ("uq", 1), ("uq", 2)])
def test_star_closure_and_involution(name, N):
    P = build(name, N)
    assert check_star_closure(P)
    assert check_star_involution(P)


# -- exact zero testing beyond confluence -----------------------------------


def test_suq_det_is_one():
    for N in (2, 3):
        P = build("suq", N)
        assert P.equals(quantum_determinant(N), NcPoly.unit())


def test_suq3_quotient_catches_nonconfluent_zero():
    # (D - 1) u^2_1 is zero in suq(3) but its normal form is a nonzero
    # irreducible polynomial; the quotient reduction must decide it
    P = build("suq", 3)
    g = NcPoly.gen(u(2, 1))
    dm1 = quantum_determinant(3) - NcPoly.unit()
    residuals = [P.nf(dm1 * g), P.nf(g * dm1)]
    assert any(not r.is_zero for r in residuals)
    for r in residuals:
        assert P.is_zero_elem(r)
        assert P.quotient_reduce(r).is_zero


def test_uq2_localization_catches_nonconfluent_zero():
    # S(dinv u - u dinv) normalizes to a nonzero irreducible element that
    # vanishes after clearing dinv through the determinant
    P = build("uq", 2)
    qi = q ** (-1)
    a = (
        NcPoly.monomial((u(1, 1), u(2, 2), u(2, 2), DINV), qi * qi)
        - NcPoly.monomial((u(1, 2), u(2, 1), u(2, 2), DINV), qi)
        - NcPoly.monomial((u(2, 2),), qi * qi)
    )
    assert not P.nf(a).is_zero
    assert P.is_zero_elem(a)


def test_uq_dinv_inverts_det():
    P = build("uq", 2)
    d = quantum_determinant(2)
    assert P.is_zero_elem(d * NcPoly.gen(DINV) - NcPoly.unit())
    assert P.is_zero_elem(NcPoly.gen(DINV) * d - NcPoly.unit())


def test_is_zero_elem_sound_on_nonzero():
    P = build("uq", 2)
    assert not P.is_zero_elem(NcPoly.gen(u(1, 2)))
    assert not P.is_zero_elem(NcPoly.gen(DINV) - NcPoly.unit())
    Q = build("suq", 3)
    assert not Q.is_zero_elem(NcPoly.gen(u(1, 2)))


def test_dinv_split():
    assert dinv_split((u(1, 1), DINV, DINV)) == ((u(1, 1),), 2)
    assert dinv_split((u(1, 1),)) == ((u(1, 1),), 0)
    assert dinv_split(()) == ((), 0)


# -- basis counts against combinatorial oracles -----------------------------


def _sphere_dim_oracle(N, d):
    # ordered monomials z^a zs^b with |a| + |b| = d, excluding those where
    # both z_N and zs_N occur (the unit relation removes exactly these)
    count = 0
    for a in product(range(d + 1), repeat=N):
        for b in product(range(d + 1), repeat=N):
            if sum(a) + sum(b) == d and not (a[N - 1] > 0 and b[N - 1] > 0):
                count += 1
    return count


@pytest.mark.parametrize("N", [2, 3])
def test_sphere_basis_counts(N):
    P = build("sphere", N)
    assert P.system.check_confluence().confluent
    graded = P.system.enumerate_basis(4)
    for d in range(5):
        assert len(graded[d]) == _sphere_dim_oracle(N, d)


@pytest.mark.parametrize("N", [2, 3])
def test_mq_pbw_counts(N):
    P = build("mq", N)
    assert P.system.check_confluence().confluent
    graded = P.system.enumerate_basis(4)
    for d in range(5):
        assert len(graded[d]) == comb(d + N * N - 1, N * N - 1)


# -- matrix identities ------------------------------------------------------


@pytest.mark.parametrize("name,N", [("suq", 2), ("uq", 2)])
def test_matrix_identities(name, N):
    report = check_matrix_identities(build(name, N))
    assert all(report.values())
    if name == "uq":
        assert "E-relation-left" in report and "E-relation-right" in report


def test_matrix_identities_wrong_algebra():
    with pytest.raises(ValueError):
        check_matrix_identities(build("mq", 2))


# -- embedding and auxiliary presentations ----------------------------------


@pytest.mark.parametrize("N", [2, 3])
def test_embed_sphere(N):
    phi = embed_sphere(N)
    assert phi.apply(NcPoly.gen(z(1))) == NcPoly.gen(u(1, 1))


def test_embed_sphere_n1_rejected():
    with pytest.raises(ValueError):
        embed_sphere(1)


def test_torus_confluent_and_unitary():
    P = build_torus(2)
    assert P.system.check_confluence().confluent
    t, ts = ("T", 1), ("Ts", 1)
    assert P.nf(NcPoly.monomial((t, ts))) == NcPoly.unit()
    assert P.nf(NcPoly.monomial((ts, t))) == NcPoly.unit()
    assert P.nf(NcPoly.monomial((("T", 2), ("Ts", 1), ("Ts", 2)))) == NcPoly.gen(ts)


def test_free_matrix_has_no_relations():
    P = build_free_matrix(2)
    assert P.system.rules == []
    assert P.structure.antipode is None


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build("nope", 2)
    with pytest.raises(ValueError):
        build("mq", 0)
