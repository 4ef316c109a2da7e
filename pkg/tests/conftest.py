from hypothesis import settings
from hypothesis import strategies as st

from oracles import graph_from_triangle_bits

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    """Uniform-ish random graphs via a random upper-triangle bitmask."""
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_triangle_bits(n, bits)
