import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import determinant_leibniz, pfaffian_matchings, pfaffian_recursive
from pfaffrep.errors import RingMismatch, ShapeError
from pfaffrep.pfaffian import (SkewMatrix, SquareMatrix, congruence,
                               delete_rows_cols, determinant, pfaffian,
                               skew_from_upper)
from pfaffrep.polynomial import PolynomialRing
from pfaffrep.ring import QQ, ZZ, IntegersMod, make_ring

G = PolynomialRing(ZZ, ("a12", "a13", "a14", "a23", "a24", "a34"))
g = dict(zip(G.variables, G.gens()))


def generic4():
    return skew_from_upper(G, 4, [(int(n[1]), int(n[2]), v) for n, v in g.items()])


def random_skew(ring, size, rng):
    return skew_from_upper(ring, size, [(i, j, ring.random_element(rng))
                                        for i in range(1, size + 1)
                                        for j in range(i + 1, size + 1)])


def random_square(ring, size, rng):
    return SquareMatrix(ring, [[ring.random_element(rng) for _ in range(size)]
                               for _ in range(size)])


def test_size_two_base_case():
    a = skew_from_upper(G, 2, [(1, 2, g["a12"])])
    assert pfaffian(a) == g["a12"]
    assert a.entry(2, 1) == -g["a12"]
    assert a.entry(1, 1) == G.zero


def test_empty_matrices():
    assert pfaffian(skew_from_upper(ZZ, 4, [])) == 0
    assert pfaffian(skew_from_upper(ZZ, 0, [])) == 1


def test_construction_errors():
    with pytest.raises(ShapeError):
        skew_from_upper(ZZ, 3, [])
    with pytest.raises(IndexError):
        skew_from_upper(ZZ, 4, [(2, 1, 5)])
    with pytest.raises(IndexError):
        skew_from_upper(ZZ, 4, [(1, 5, 5)])
    with pytest.raises(IndexError):
        skew_from_upper(ZZ, 4, [(1, 2, 5), (1, 2, 6)])
    with pytest.raises(RingMismatch):
        skew_from_upper(ZZ, 2, [(1, 2, QQ.one)])


def test_zero_values_dropped():
    a = skew_from_upper(ZZ, 4, [(1, 2, 0), (3, 4, 2)])
    assert a.upper == {(3, 4): 2}


def test_delete_rows_cols():
    a = generic4()
    sub = delete_rows_cols(a, 1, 2)
    assert sub.size == 2 and pfaffian(sub) == g["a34"]
    assert pfaffian(delete_rows_cols(a, 1, 4)) == g["a23"]
    assert pfaffian(delete_rows_cols(a, 3, 1)) == g["a24"]
    empty = delete_rows_cols(skew_from_upper(G, 2, [(1, 2, g["a12"])]), 1, 2)
    assert empty.size == 0 and pfaffian(empty) == G.one
    for i, j in [(1, 1), (0, 2), (1, 5)]:
        with pytest.raises(IndexError):
            delete_rows_cols(a, i, j)


def test_generic_4x4(backend):
    expected = g["a12"] * g["a34"] - g["a13"] * g["a24"] + g["a14"] * g["a23"]
    assert pfaffian(generic4()) == expected
    assert pfaffian_recursive(generic4()) == expected


def test_integer_4x4_instance():
    a = skew_from_upper(ZZ, 4, [(1, 2, 2), (1, 3, 3), (1, 4, 1), (2, 3, 4), (2, 4, 7), (3, 4, 5)])
    assert pfaffian_matchings(a.rows()) == -7
    assert pfaffian(a) == -7


def test_block_diagonal():
    a = skew_from_upper(G, 4, [(1, 2, g["a12"]), (3, 4, g["a34"])])
    assert pfaffian(a) == g["a12"] * g["a34"]


def test_determinant_examples(backend):
    assert determinant(SquareMatrix.identity(ZZ, 5)) == 1
    a = skew_from_upper(G, 2, [(1, 2, g["a12"])])
    assert determinant(a) == g["a12"] ** 2
    rng = random.Random(6)
    for _ in range(20):
        a = random_skew(ZZ, 6, rng)
        assert determinant(a) == pfaffian(a) ** 2


def test_determinant_matches_leibniz(rng):
    for n in range(1, 7):
        for _ in range(5):
            m = random_square(ZZ, n, rng)
            assert determinant(m) == determinant_leibniz(m.rows)


def test_pfaffian_matches_matchings(rng):
    for size in (2, 4, 6, 8):
        for _ in range(10):
            a = random_skew(ZZ, size, rng)
            assert pfaffian(a) == pfaffian_matchings(a.rows())


def test_congruence_examples():
    a = generic4()
    assert congruence(SquareMatrix.identity(G, 4), a) == a
    c = G.gen("a12") + 3
    x = SquareMatrix.diagonal(G, [c, G.one, G.one, G.one])
    b = congruence(x, a)
    for (i, j), v in a.upper.items():
        assert b.upper[(i, j)] == (v * c if i == 1 else v)
    assert pfaffian(b) == c * pfaffian(a)
    with pytest.raises(ShapeError):
        congruence(SquareMatrix.identity(G, 2), a)


@pytest.mark.parametrize("spec", ["int", "rat", "mod:6"])
@pytest.mark.parametrize("size", [2, 4, 6, 8, 10])
def test_det_equals_pf_squared(spec, size):
    ring = make_ring(spec)
    rng = random.Random(f"{spec}{size}")
    for _ in range(50):
        a = random_skew(ring, size, rng)
        assert determinant(a) == pfaffian(a) * pfaffian(a)


@pytest.mark.parametrize("spec", ["int", "mod:6", "mod:2"])
@pytest.mark.parametrize("size", [4, 6])
def test_congruence_covariance(spec, size):
    ring = make_ring(spec)
    rng = random.Random(f"c{spec}{size}")
    for _ in range(50):
        a = random_skew(ring, size, rng)
        x = random_square(ring, size, rng)
        assert pfaffian(congruence(x, a)) == determinant(x) * pfaffian(a)


def test_scaling_and_zero_row(rng):
    for size in (2, 4, 6, 8):
        a = random_skew(ZZ, size, rng)
        c = rng.randint(-5, 5)
        assert pfaffian(a.scale(c)) == c ** (size // 2) * pfaffian(a)
        k = rng.randint(1, size)
        zeroed = SkewMatrix(ZZ, size, {key: v for key, v in a.upper.items() if k not in key})
        assert pfaffian(zeroed) == 0


@pytest.mark.parametrize("size", [2, 4, 6, 8])
def test_memoized_agrees_with_naive(size, backend):
    rng = random.Random(size)
    for ring in (ZZ, IntegersMod(6), make_ring("int[u,v]")):
        for _ in range(10):
            a = random_skew(ring, size, rng)
            assert pfaffian(a) == pfaffian_recursive(a)


def test_char_two_stays_alternating():
    r = IntegersMod(2)
    a = skew_from_upper(r, 2, [(1, 2, r.one)])
    assert a.entry(2, 1) == r.one
    assert a.entry(1, 1) == r.zero
    assert pfaffian(a) == r.one and determinant(a) == r.one


def test_json_roundtrip():
    ring = make_ring("int[T1,T2]")
    a = skew_from_upper(ring, 4, [(1, 2, ring.parse_element("T1 - 2")), (3, 4, ring.one)])
    assert SkewMatrix.from_json(ring, a.to_json()) == a


entries = st.lists(st.integers(-9, 9), min_size=15, max_size=15)


@settings(max_examples=100, deadline=None)
@given(entries)
def test_det_pf_property_6x6(vals):
    it = iter(vals)
    a = skew_from_upper(ZZ, 6, [(i, j, next(it)) for i in range(1, 7) for j in range(i + 1, 7)])
    assert determinant(a) == pfaffian(a) ** 2
