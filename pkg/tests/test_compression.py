import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import join_of_meets
from tuintersect.compression import VulnerabilityVector, compress, lex_compare, vulnerability
from tuintersect.core import SolutionBundle
from tuintersect.errors import LengthMismatch
from tuintersect.lexsolver import lex_weights


def bundles(max_n=6, max_d=12):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_d).flatmap(
            lambda d: st.lists(
                st.lists(st.integers(0, 1), min_size=d, max_size=d), min_size=n, max_size=n
            )
        )
    )


def test_compress_two_vectors():
    c = compress(SolutionBundle([[1, 0, 1], [1, 1, 0]]))
    assert c.layers == ((1, 1, 1), (1, 0, 0))


def test_compress_identical_vectors():
    v = (0, 1, 1, 0)
    assert compress([v, v, v]).layers == (v, v, v)


def test_compress_count_two_each():
    bundle = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    assert compress(bundle).layers == ((1, 1, 1), (1, 1, 1), (0, 0, 0))
    assert vulnerability(bundle).values == (3, 3, 0)


def test_vulnerability_examples():
    assert vulnerability([[1, 0, 1], [1, 0, 1]]).values == (2, 2)
    f = vulnerability([[1, 0, 1], [0, 1, 1]])
    assert f.values == (3, 1) and f.critical == 1


def test_lex_compare_examples():
    assert lex_compare((3, 1), (2, 2)) == -1
    assert lex_compare((4, 0), (4, 0)) == 0
    assert lex_compare((5, 2, 0), (4, 2, 0)) == 1
    with pytest.raises(LengthMismatch):
        lex_compare((1,), (1, 0))


def test_vector_ordering_uses_lex_rule():
    vs = [VulnerabilityVector(v) for v in [(2, 2), (3, 1), (4, 0)]]
    assert min(vs).values == (4, 0)
    assert sorted(vs) == [vs[2], vs[1], vs[0]]


@settings(max_examples=200, deadline=None)
@given(bundles())
def test_layer_sums_equal_bundle_sums(vectors):
    c = compress(vectors)
    assert [sum(col) for col in zip(*c.layers)] == [sum(col) for col in zip(*vectors)]
    assert all(a >= b for hi, lo in zip(c.layers, c.layers[1:]) for a, b in zip(hi, lo))
    f = vulnerability(vectors).values
    assert list(f) == sorted(f, reverse=True)
    assert f == tuple(sum(layer) for layer in c.layers)


@settings(max_examples=200, deadline=None)
@given(bundles())
def test_idempotent(vectors):
    c = compress(vectors)
    assert compress(c.layers) == c


@settings(max_examples=200, deadline=None)
@given(bundles(max_n=3, max_d=4))
def test_matches_join_of_meets(vectors):
    assert list(compress(vectors).layers) == join_of_meets(vectors)


@settings(max_examples=200, deadline=None)
@given(bundles(), st.randoms(use_true_random=False))
def test_equal_sums_give_equal_compressions(vectors, rng):
    # shuffling each column between vectors preserves column sums
    cols = [list(col) for col in zip(*vectors)]
    for col in cols:
        rng.shuffle(col)
    other = [list(row) for row in zip(*cols)]
    assert compress(other) == compress(vectors)


vec = st.lists(st.integers(0, 3), min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(vec, vec, vec)
def test_lex_compare_total_order(f, g, h):
    assert lex_compare(f, g) == -lex_compare(g, f)
    assert (lex_compare(f, g) == 0) == (f == g)
    if lex_compare(f, g) <= 0 and lex_compare(g, h) <= 0:
        assert lex_compare(f, h) <= 0


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_weights_order_like_lex(data):
    n = data.draw(st.integers(1, 5))
    d = data.draw(st.integers(1, 6))
    gen = st.lists(st.lists(st.integers(0, 1), min_size=d, max_size=d), min_size=n, max_size=n)
    x, y = data.draw(gen), data.draw(gen)
    c = lex_weights(d, n)
    diff = c.value(compress(y).layers) - c.value(compress(x).layers)
    sign = (diff > 0) - (diff < 0)
    assert lex_compare(vulnerability(x), vulnerability(y)) == -sign
