import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from polygroup.exact_geometry import Polytope, extreme_points

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

T = extreme_points([(0, 0), (1, 0), (0, 1)])
SQUARE = extreme_points([(0, 0), (1, 0), (0, 1), (1, 1)])


def poly(*pts) -> Polytope:
    return extreme_points(pts)


@st.composite
def polytopes(draw, n=2, bound=4, min_points=1, max_points=6):
    pts = draw(
        st.lists(
            st.tuples(*[st.integers(-bound, bound)] * n),
            min_size=min_points,
            max_size=max_points,
        )
    )
    return extreme_points(pts)


@st.composite
def full_polytopes(draw, n=2, bound=4):
    """Full-dimensional: a simplex plus a few random points."""
    base = draw(st.tuples(*[st.integers(-bound, bound - 1)] * n))
    pts = [base] + [tuple(b + (i == j) for j, b in enumerate(base)) for i in range(n)]
    pts += draw(st.lists(st.tuples(*[st.integers(-bound, bound)] * n), max_size=4))
    return extreme_points(pts)


def seeded_rng(seed: int) -> random.Random:
    return random.Random(seed)
