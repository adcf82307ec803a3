"""Ring-spec grammar, canonical names and validation."""
import pytest
from hypothesis import given, settings, strategies as st

from chevlab.algebra.errors import InvalidSpec, RingSpecSyntaxError
from chevlab.algebra.finring import make_ring
from chevlab.algebra.ringspec import (
    PolyQuotientSpec,
    ProductSpec,
    ZmodNSpec,
    format_polynomial,
    parse_polynomial,
    parse_ring_spec,
    spec_name,
)


def monic(degree_max: int = 3):
    return st.integers(1, degree_max).flatmap(
        lambda d: st.lists(st.integers(-3, 3), min_size=d, max_size=d).map(lambda cs: cs + [1])
    )


specs = st.recursive(
    st.integers(2, 30).map(lambda n: ZmodNSpec(n=n)),
    lambda inner: st.one_of(
        st.tuples(inner, monic()).map(lambda bm: PolyQuotientSpec(base=bm[0], modulus=bm[1])),
        st.lists(inner, min_size=2, max_size=3).map(lambda fs: ProductSpec(factors=fs)),
    ),
    max_leaves=4,
)


class TestParse:
    def test_zmod(self):
        assert parse_ring_spec("Z/12") == ZmodNSpec(n=12)

    def test_prime_field_is_zmod(self):
        assert parse_ring_spec("F3") == ZmodNSpec(n=3)
        assert parse_ring_spec("F_7") == ZmodNSpec(n=7)

    def test_poly_quotient(self):
        spec = parse_ring_spec("F3[x]/(x^2)")
        assert spec == PolyQuotientSpec(base=ZmodNSpec(n=3), modulus=[0, 0, 1])

    def test_product(self):
        spec = parse_ring_spec("Z/4 x Z/3")
        assert isinstance(spec, ProductSpec)
        assert spec.factors == [ZmodNSpec(n=4), ZmodNSpec(n=3)]

    def test_poly_over_product(self):
        spec = parse_ring_spec("(Z/2 x Z/2)[x]/(x^2+x+1)")
        assert isinstance(spec, PolyQuotientSpec)
        assert isinstance(spec.base, ProductSpec)
        assert spec.modulus == [1, 1, 1]

    def test_syntax_error_reports_position(self):
        with pytest.raises(RingSpecSyntaxError) as info:
            parse_ring_spec("Q/3")
        assert info.value.position == 0

    def test_trailing_input(self):
        with pytest.raises(RingSpecSyntaxError):
            parse_ring_spec("Z/4 Z/3")

    def test_non_prime_field(self):
        with pytest.raises(InvalidSpec):
            parse_ring_spec("F4")


class TestPolynomials:
    def test_format(self):
        assert format_polynomial([-1, -1, 0, 1]) == "x^3-x-1"
        assert format_polynomial([1, 2]) == "2x+1"
        assert format_polynomial([0, 0]) == "0"

    def test_parse(self):
        assert parse_polynomial("x^3 - x - 1") == [-1, -1, 0, 1]
        assert parse_polynomial("2*x^2 + 1") == [1, 0, 2]


class TestNames:
    def test_canonical_names(self):
        assert spec_name(parse_ring_spec("F3[x]/(x^2)")) == "Z/3[x]/(x^2)"
        assert spec_name(parse_ring_spec("(Z/2 x Z/3) x Z/5")) == "(Z/2 x Z/3) x Z/5"

    @settings(max_examples=200, deadline=None)
    @given(specs)
    def test_name_parses_back(self, spec):
        assert parse_ring_spec(spec_name(spec)) == spec


class TestValidation:
    @pytest.mark.parametrize("text", ["Z/1", "Z/0", "Z/4[x]/(2x^2+1)"])
    def test_rejected(self, text):
        with pytest.raises(InvalidSpec):
            make_ring(text)

    def test_order_limit(self):
        with pytest.raises(InvalidSpec):
            make_ring("Z/5000")
        with pytest.raises(InvalidSpec):
            make_ring("Z/16", max_order=8)

    def test_leading_coefficient_reduced_mod_characteristic(self):
        ring = make_ring("Z/3[x]/(4x^2+1)")
        assert ring.size == 9
        assert (ring.mul_table == make_ring("F3[x]/(x^2+1)").mul_table).all()
        with pytest.raises(InvalidSpec):
            make_ring("(Z/2 x Z/3)[x]/(3x^2+1)")
