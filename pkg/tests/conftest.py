import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from naxes.config import validate
from naxes.genmove import SampleParams, sample_config
from naxes.kernel import GF, QQ, GeometryError, point

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIELDS = [QQ, GF(10007)]
field_ids = ["QQ", "GF10007"]

small = st.integers(-10, 10)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def finite_points(draw, fld=QQ, bound=10):
    return point(draw(st.integers(-bound, bound)), draw(st.integers(-bound, bound)), field=fld)


@st.composite
def rationals(draw, bound=10):
    return Fraction(draw(st.integers(-bound, bound)), draw(st.integers(1, 5)))


def random_configs(n, fld, count, seed=0):
    return [sample_config(SampleParams(n, fld, seed), k) for k in range(count)]


def try_validate(pts, fld=None):
    try:
        return validate(pts, fld)
    except GeometryError:
        return None


@pytest.fixture(params=FIELDS, ids=field_ids)
def fld(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(12345)
