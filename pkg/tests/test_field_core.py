from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from galnumrange.field_core import (
    FieldError,
    ext_tables,
    finite_field,
    least_irreducible,
    parse_field,
    rational_field,
)

from conftest import FINITE, any_ctxs, ctx_and_scalars, finite_ctxs, k_scalars, scalars


def test_parse_field_examples():
    f4 = parse_field("finite:p=2,m=1")
    assert f4.q == 2 and f4.char == 2 and f4.eps == 1
    qi = parse_field("rational:alpha=-1")
    assert qi.alpha == -1 and not qi.is_finite
    f9 = parse_field("finite:p=3,m=1")
    assert f9.alpha == 2
    # 2 is the least non-square of F_3 by direct scan
    assert [x for x in range(1, 3) if all(y * y % 3 != x for y in range(3))][0] == 2


@pytest.mark.parametrize(
    "spec",
    ["finite:p=4,m=1", "finite:p=1,m=1", "finite:p=3,m=0", "rational:alpha=4", "rational:alpha=1", "rational:alpha=0", "rational:alpha=12", "bogus"],
)
def test_parse_field_rejects(spec):
    with pytest.raises(FieldError):
        parse_field(spec)


def test_spec_roundtrip():
    for p, m in FINITE:
        ctx = finite_field(p, m)
        assert parse_field(ctx.spec()) == ctx
    assert parse_field(rational_field(-7).spec()) == rational_field(-7)


def test_least_irreducible_brute_force():
    # a monic quadratic over F_p is irreducible iff it has no root;
    # candidates are ordered by (c1, c0)
    for p in (2, 3, 5, 7):
        cands = [(a1, a0) for a1 in range(p) for a0 in range(p) if all((x * x + a1 * x + a0) % p for x in range(p))]
        a1, a0 = cands[0]
        assert least_irreducible(p, 2) == (a0, a1, 1)
    assert least_irreducible(2, 2) == (1, 1, 1)


def test_k_arith_examples():
    f3 = finite_field(3, 1)
    assert f3.k_arith(2, 2, "add") == 1
    q = rational_field(-1)
    assert q.k_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    k4 = finite_field(2, 2)  # K = F_4 with modulus t^2 + t + 1
    t = k4.base.from_digits([0, 1])
    assert k4.k_mul(t, t) == k4.base.from_digits([1, 1])
    with pytest.raises(ZeroDivisionError):
        q.k_arith(Fraction(1), Fraction(0), "div")
    with pytest.raises(FieldError):
        q.k_arith(1, 1, "pow")


def test_ext_arith_examples(f4, qi):
    assert (qi(1, 1) * qi(1, -1)) == qi(2)
    b = f4.beta
    assert b * b == b + 1
    assert b**3 == f4.one
    assert qi(3, 2).conj() == qi(3, -2)
    assert b.conj() == b + 1
    assert qi(1, 1).norm() == 2
    assert b.norm() == 1
    assert rational_field(2)(1, 1).norm() == -1
    assert qi(3, 2).re_im() == (3, 2)
    assert b.re_im() == (0, 1)
    with pytest.raises(ZeroDivisionError):
        qi.one / qi.zero


def test_beta_relation_at_construction():
    for p, m in FINITE:
        ctx = finite_field(p, m)
        b = ctx.beta
        if ctx.char == 2:
            assert b * b == b + ctx.embed(ctx.eps)
            # t^2 + t + eps has no root in K
            assert all(ctx.k_add(ctx.k_add(ctx.k_mul(x, x), x), ctx.eps) != 0 for x in ctx.k_elements())
        else:
            assert b * b == ctx.embed(ctx.alpha)
            assert not ctx.base.is_square(ctx.alpha)


@pytest.mark.parametrize("pm", FINITE)
def test_frobenius_is_sigma_exhaustive(pm):
    ctx = finite_field(*pm)
    for z in ctx.l_elements():
        assert z.conj() == z**ctx.q


@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_norm_surjective_and_q_plus_one_to_one(pm):
    ctx = finite_field(*pm)
    counts = {}
    for z in ctx.l_elements():
        if not z.is_zero():
            counts[z.norm()] = counts.get(z.norm(), 0) + 1
    assert sorted(counts) == list(range(1, ctx.q))
    assert set(counts.values()) == {ctx.q + 1}


@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2)])
def test_multiplicative_group_cyclic(pm):
    ctx = finite_field(*pm)
    order = ctx.q**2 - 1
    nonzero = [z for z in ctx.l_elements() if not z.is_zero()]
    assert any(len({g**k for k in range(order)}) == order for g in nonzero)


@given(ctx_and_scalars(3))
def test_field_axioms(data):
    ctx, a, b, c = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ctx.zero
    if not a.is_zero():
        assert a * a.inverse() == ctx.one
        assert (b / a) * a == b


@given(ctx_and_scalars(2))
def test_sigma_properties(data):
    ctx, a, b = data
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a.conj() == a) == a.in_base == (a.im == ctx.k_zero)
    assert ctx.k_mul(a.norm(), b.norm()) == (a * b).norm()
    assert ctx.k_add(a.trace(), b.trace()) == (a + b).trace()


@given(any_ctxs.flatmap(lambda c: st.tuples(st.just(c), k_scalars(c), scalars(c))))
def test_trace_k_linear(data):
    ctx, k, z = data
    assert (ctx.embed(k) * z).trace() == ctx.k_mul(k, z.trace())


@given(ctx_and_scalars(1))
def test_re_im_and_string_roundtrip(data):
    ctx, z = data
    x, y = z.re_im()
    assert ctx(0, 0) + ctx.embed(x) + ctx.embed(y) * ctx.beta == z
    assert ctx.parse(str(z)) == z


@given(finite_ctxs.flatmap(lambda c: st.tuples(st.just(c), scalars(c), scalars(c))))
def test_tables_match_scalar_arithmetic(data):
    ctx, a, b = data
    T = ext_tables(ctx)
    assert ctx.from_code(T.add[a.code, b.code]) == a + b
    assert ctx.from_code(T.mul[a.code, b.code]) == a * b
    assert ctx.from_code(T.conj[a.code]) == a.conj()
    assert T.norm[a.code] == a.norm()


def test_canonical_order(f9):
    elems = list(f9.l_elements())
    assert [z.code for z in elems] == list(range(9))
    assert sorted(elems) == elems


def test_k_format_parse_extension_base():
    k9 = finite_field(3, 2)
    for a in k9.k_elements():
        assert k9.k_parse(k9.k_format(a)) == a
    assert k9.k_format(k9.alpha).startswith("[")
    assert np.all(ext_tables(k9).norm < 9)
