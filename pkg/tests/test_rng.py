from hypothesis import given
from hypothesis import strategies as st

from sslab.rng import rng, subseed


@given(st.integers(0, 2**64 - 1), st.text(max_size=20))
def test_same_seed_and_label_same_stream(seed, label):
    assert (rng(seed, label).integers(0, 1 << 30, 8) == rng(seed, label).integers(0, 1 << 30, 8)).all()


def test_labels_and_seeds_separate_streams():
    a = rng(0, "a").integers(0, 1 << 62, 4)
    b = rng(0, "b").integers(0, 1 << 62, 4)
    c = rng(1, "a").integers(0, 1 << 62, 4)
    assert (a != b).any() and (a != c).any()
    assert subseed(0, "x") == subseed(0, "x") != subseed(0, "y")
