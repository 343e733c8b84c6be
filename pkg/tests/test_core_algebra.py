from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mfstab.algebra import (Ainf, Dinf, GradedPoly, Monomial, S, normal_form, parse_poly, ring_piece_basis, x,
                            y)
from mfstab.fields import GF, QQ, CharacteristicError, parse_field

from oracles import F_AINF, F_DINF, ring_monomials


# --- fields -------------------------------------------------------------


def test_characteristic_two_rejected():
    with pytest.raises(CharacteristicError, match="characteristic"):
        GF(2)
    with pytest.raises(CharacteristicError):
        parse_field("fp:2")


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        GF(9)


def test_prime_field_arithmetic():
    F = GF(5)
    a, b = F(3), F(4)
    assert a + b == F(2)
    assert a * b == F(2)
    assert a / b == F(2)
    assert -a == F(2)
    assert F("1/2") * 2 == F.one
    assert F.to_str(F(4)) == "-1"
    with pytest.raises(ZeroDivisionError):
        a / F(0)


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("fp:101") == GF(101)
    with pytest.raises(ValueError):
        parse_field("real")


# --- normal forms and pieces -----------------------------------------------


def test_normal_form_examples():
    R, Rp = Dinf(), Ainf()
    assert normal_form(GradedPoly.monomial(S(), 3, 2), R).is_zero()
    assert normal_form(GradedPoly.monomial(S(), 1, 1), R) == x(R) * y(R)
    p = parse_poly("x^2 + x^2*y", S())
    assert normal_form(p, Rp).is_zero()


def test_ring_piece_basis_examples():
    R, Rp = Dinf(), Ainf()
    assert ring_piece_basis(R, 0) == [Monomial(0, 0), Monomial(1, 1)]
    assert ring_piece_basis(R, 3) == [Monomial(3, 0)]
    assert ring_piece_basis(Rp, 2) == []


@pytest.mark.parametrize("ring,f", [(Dinf(), F_DINF), (Ainf(), F_AINF)])
def test_piece_basis_matches_enumeration(ring, f):
    for d in range(-50, 51):
        got = sorted((m.a, m.b) for m in ring_piece_basis(ring, d))
        assert got == sorted(ring_monomials(f, d, bound=120))


def test_dimension_profiles():
    for d in range(-50, 51):
        assert len(ring_piece_basis(Dinf(), d)) == (1 if d >= 1 else 2)
        assert len(ring_piece_basis(Ainf(), d)) == (0 if d >= 2 else 1 if d == 1 else 2)


def test_deg_f():
    assert Dinf().deg_f == 1 and Dinf().f.degree == 1
    assert Ainf().deg_f == 2 and Ainf().f.degree == 2


def test_multiplication_examples():
    R, Rp = Dinf(), Ainf()
    assert (x(R) * (x(R) * y(R))).is_zero()
    assert x(R) * x(R) == x(R, 2)
    assert y(Rp, 3) * x(Rp) == GradedPoly.monomial(Rp, 1, 3)


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        x(Dinf()) + x(Ainf())


def test_degree_queries():
    R = Dinf()
    assert (x(R) + x(R) * x(R)).degree() is None
    assert (x(R) * y(R) + GradedPoly.monomial(R, 0, 0)).degree() == 0


# --- property tests ---------------------------------------------------------

monos = st.tuples(st.integers(0, 5), st.integers(0, 5))
coeffs = st.integers(-5, 5).map(Fraction)
polys = st.dictionaries(monos, coeffs, max_size=6)


def _mk(ring, d):
    return GradedPoly(ring, {Monomial(*m): c for m, c in d.items()})


@settings(max_examples=80, deadline=None)
@given(polys, polys, st.sampled_from(["Dinf", "Ainf"]))
def test_normal_form_idempotent_and_linear(p, q, kind):
    ring = Dinf() if kind == "Dinf" else Ainf()
    P, Q = _mk(S(), p), _mk(S(), q)
    nP = normal_form(P, ring)
    assert normal_form(nP, ring) == nP
    assert normal_form(P + Q, ring) == normal_form(P, ring) + normal_form(Q, ring)
    assert normal_form(P.scale(Fraction(3)), ring) == nP.scale(Fraction(3))
    assert not any(ring.is_zero_monomial(m) for m in nP.terms)


@settings(max_examples=80, deadline=None)
@given(monos, monos, coeffs, coeffs)
def test_degree_multiplicative(m1, m2, c1, c2):
    ring = S()
    p = GradedPoly(ring, {Monomial(*m1): c1 or Fraction(1)})
    q = GradedPoly(ring, {Monomial(*m2): c2 or Fraction(1)})
    assert (p * q).degree() == p.degree() + q.degree()


@settings(max_examples=80, deadline=None)
@given(polys)
def test_parse_format_roundtrip(p):
    for ring in (S(), Dinf(), Ainf(), Dinf(GF(7))):
        P = GradedPoly(ring, {Monomial(*m): ring.field(c) for m, c in p.items()})
        assert parse_poly(str(P), ring) == P if P.terms else str(P) == "0"


def test_parse_juxtaposition_and_rationals():
    R = S()
    assert parse_poly("xy - 3/2*x^2*y^3", R) == GradedPoly(R, {Monomial(1, 1): Fraction(1),
                                                               Monomial(2, 3): Fraction(-3, 2)})
    with pytest.raises(ValueError):
        parse_poly("x^^2", R)
