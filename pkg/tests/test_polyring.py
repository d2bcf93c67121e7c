import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclodec.codec import ErrorPattern, LocatorPoly, code_new, syndromes
from cyclodec.finite_field import Field
from cyclodec.polyring import (
    MonomialOrder,
    PolyParseError,
    PolyRing,
    Variable,
    evaluate,
    locator_var,
    mono_mul,
    sigma_var,
    syndrome_var,
)

LEX_RING = PolyRing(MonomialOrder((
    sigma_var(1),
    syndrome_var(5), syndrome_var(3), syndrome_var(1),
    locator_var(1), locator_var(2),
)))

BLOCK_RING = PolyRing(MonomialOrder(
    LEX_RING.order.priority,
    ((1, "lex"), (3, "grevlex"), (2, "grevlex")),
))


def p(text, ring=LEX_RING):
    return ring.parse_poly(text)


# -- hypothesis strategies ------------------------------------------------------

def monomials(ring):
    return st.tuples(*[st.integers(min_value=0, max_value=4)] * ring.nvars)


def polys(ring):
    return st.frozensets(monomials(ring), max_size=6).map(lambda ms: ring.poly(ms))


# -- arithmetic -----------------------------------------------------------------

def test_add_self_cancels():
    f = p("s1*S1 + S3")
    assert not (f + f)


def test_add_zero_identity():
    f = p("s1 + S1^2")
    assert f + LEX_RING.zero == f


def test_add_cancellation_example():
    assert p("s1 + S1") + p("s1 + S3") == p("S1 + S3")


def test_mul_frobenius_square():
    assert p("Z1 + Z2") * p("Z1 + Z2") == p("Z1^2 + Z2^2")


def test_mul_unit():
    f = p("s1*S1^3 + S3")
    assert f * LEX_RING.one == f


def test_mul_hand_expansion():
    assert p("Z1 + Z2") * p("Z1 + Z2 + 1") == p("Z1^2 + Z2^2 + Z1 + Z2")


@settings(max_examples=300)
@given(polys(LEX_RING), polys(LEX_RING), polys(LEX_RING))
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


# -- monomial orders -------------------------------------------------------------

@pytest.mark.parametrize("ring", [LEX_RING, BLOCK_RING], ids=["lex", "block"])
@settings(max_examples=300)
@given(u=st.data())
def test_order_is_multiplicative_and_well_founded(ring, u):
    a = u.draw(monomials(ring))
    b = u.draw(monomials(ring))
    c = u.draw(monomials(ring))
    key = ring.mono_key
    if key(a) < key(b):
        assert key(mono_mul(a, c)) < key(mono_mul(b, c))
    # 1 is minimal
    assert key(ring.unit_mono) <= key(a)


def test_lex_ignores_total_degree():
    f = p("s1 + S1*S3")
    assert f.leading_monomial() == LEX_RING.monomial({sigma_var(1): 1})
    g = p("S5 + S1^3")
    assert g.leading_monomial() == LEX_RING.monomial({syndrome_var(5): 1})


def test_lex_compares_first_exponent():
    ring = PolyRing(MonomialOrder((locator_var(1), locator_var(2))))
    f = ring.parse_poly("Z1*Z2 + Z1^2")
    assert f.leading_monomial() == ring.monomial({locator_var(1): 2})


def test_zero_poly_has_no_leading_monomial():
    with pytest.raises(ValueError):
        LEX_RING.zero.leading_monomial()


def test_grevlex_block_prefers_lower_last_variable():
    # within the grevlex Z-block, Z1*Z2 > Z2^2 iff the last variable's
    # exponent is smaller; priority order is Z1 > Z2 here
    ring = PolyRing(MonomialOrder((locator_var(1), locator_var(2)), ((2, "grevlex"),)))
    f = ring.parse_poly("Z1*Z2 + Z2^2")
    assert f.leading_monomial() == ring.monomial({locator_var(1): 1, locator_var(2): 1})


# -- evaluation -------------------------------------------------------------------

def test_evaluate_zero_poly():
    field = Field(3)
    assert evaluate(LEX_RING.zero, {}, field=field) == field.zero


def test_evaluate_char2_cancellation():
    field = Field(3)
    a = field.element(5)
    out = evaluate(p("s1 + S1"), {sigma_var(1): a, syndrome_var(1): a})
    assert out == field.zero


def test_evaluate_missing_variable_named():
    field = Field(3)
    with pytest.raises(ValueError, match="S3"):
        evaluate(p("s1 + S3"), {sigma_var(1): field.one})


def test_evaluate_weight2_power_sum_identity():
    # S1^3 + S3 equals s2 * S1 on spectra of weight-2 words over GF(16)
    code = code_new(15, (1, 2, 3, 4, 6, 8, 9, 12))
    ring = PolyRing(MonomialOrder((syndrome_var(1), syndrome_var(3))))
    f = ring.parse_poly("S1^3 + S3")
    for pair in [(0, 1), (2, 9), (5, 14), (3, 7)]:
        pattern = ErrorPattern(frozenset(pair))
        syn = syndromes(pattern.apply((0,) * 15), code)
        sigma2 = LocatorPoly.from_pattern(pattern, code).coeffs[2]
        got = evaluate(f, {syndrome_var(1): syn[1], syndrome_var(3): syn[3]})
        assert got == sigma2 * syn[1]


@settings(max_examples=100)
@given(polys(LEX_RING), polys(LEX_RING))
def test_evaluate_is_ring_homomorphism(f, g):
    field = Field(4)
    point = {v: field.element((17 * i + 3) % 16) for i, v in enumerate(LEX_RING.variables)}
    ef, eg = evaluate(f, point, field=field), evaluate(g, point, field=field)
    assert evaluate(f + g, point, field=field) == ef + eg
    assert evaluate(f * g, point, field=field) == ef * eg


# -- text round trip ---------------------------------------------------------------

def test_format_parse_roundtrip_examples():
    for text in ["s1*S1^3 + S3", "0", "1", "Z1^2*Z2 + Z1*Z2^2", "S5 + S3 + 1"]:
        f = p(text)
        assert p(LEX_RING.format_poly(f)) == f


@settings(max_examples=200)
@given(polys(LEX_RING))
def test_format_parse_roundtrip_random(f):
    assert p(LEX_RING.format_poly(f)) == f


def test_parse_rejects_out_of_universe_variable():
    with pytest.raises(PolyParseError, match="S99"):
        p("S1 + S99")


def test_parse_rejects_garbage_with_column():
    with pytest.raises(PolyParseError) as err:
        p("S1 + @")
    assert err.value.column == 6


def test_parse_rejects_dangling_operator():
    with pytest.raises(PolyParseError):
        p("S1 + ")
    with pytest.raises(PolyParseError):
        p("S1 * + S3")
    with pytest.raises(PolyParseError):
        p("S1 ^")


def test_variable_names_roundtrip():
    for v in [sigma_var(2), syndrome_var(11), locator_var(1), Variable("r", 0)]:
        assert Variable.from_name(v.name) == v


def test_convert_between_rings():
    other = PolyRing(MonomialOrder((
        syndrome_var(1), syndrome_var(3), syndrome_var(5), sigma_var(1),
        locator_var(2), locator_var(1),
    )))
    f = p("s1*S1^3 + S3 + Z2")
    g = other.convert(f, source=LEX_RING)
    assert other.format_poly(g) == "S1^3*s1 + S3 + Z2"
    assert LEX_RING.convert(g, source=other) == f
