import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from coxflag.constructions import random_finite_type_graph

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def finite_graphs(draw, min_vertices=3, max_vertices=7):
    """Random weighted graphs whose flag complexes only carry finite groups."""
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_vertices, max_vertices))
    return random_finite_type_graph(random.Random(seed), n_vertices=n)


@pytest.fixture
def data_dir(tmp_path):
    return tmp_path
