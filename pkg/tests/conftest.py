from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from galnumrange.field_core import finite_field, rational_field

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FINITE = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]


@pytest.fixture(scope="session")
def f4():
    return finite_field(2, 1)


@pytest.fixture(scope="session")
def f9():
    return finite_field(3, 1)


@pytest.fixture(scope="session")
def qi():
    return rational_field(-1)


finite_ctxs = st.sampled_from(FINITE).map(lambda pm: finite_field(*pm))
rational_ctxs = st.sampled_from([-1, -2, -3, 2, 3, 5, -7]).map(rational_field)
any_ctxs = st.one_of(finite_ctxs, rational_ctxs)

small_fractions = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 7))


def scalars(ctx):
    if ctx.is_finite:
        return st.integers(0, ctx.q * ctx.q - 1).map(ctx.from_code)
    return st.builds(ctx, small_fractions, small_fractions)


def k_scalars(ctx):
    if ctx.is_finite:
        return st.integers(0, ctx.q - 1)
    return small_fractions


@st.composite
def ctx_and_scalars(draw, k=2, ctxs=any_ctxs):
    ctx = draw(ctxs)
    return (ctx, *[draw(scalars(ctx)) for _ in range(k)])
