from fractions import Fraction
from itertools import product
import random

import pytest

from oracles import pfaffian_recursive
from pfaffrep.errors import (AmbiguousDegree, DegreeError, RequiresSymbolicRing,
                             RingMismatch, ShapeError, UnsupportedDegree)
from pfaffrep.pfaffian import determinant, pfaffian, skew_from_upper
from pfaffrep.ring import QQ, ZZ, IntegersMod, make_ring
from pfaffrep import representation as rp
from pfaffrep.representation import (CoefficientVector, Representation, build,
                                     build_m1, build_m2, build_m4, build_m5,
                                     coeffs_from_poly, derived_entries,
                                     form_ring, generic_coeffs, generic_form,
                                     is_nice, poly_from_coeffs, represent, verify)

FZ = form_ring(ZZ)


def cv(d, values, ring=ZZ):
    return CoefficientVector(d, values, ring)


def unit(d, k, ring=ZZ):
    vals = [0] * len(rp.MONOMIALS[d])
    vals[k - 1] = 1
    return cv(d, vals, ring)


@pytest.mark.parametrize("d,count", [(1, 3), (2, 6), (3, 10), (4, 15), (5, 21)])
def test_slot_tables_are_bijective(d, count):
    mons = rp.MONOMIALS[d]
    all_mons = {e for e in product(range(d + 1), repeat=3) if sum(e) == d}
    assert len(mons) == count == len(set(mons)) == len(all_mons)
    assert set(mons) == all_mons


def test_symbol_names():
    assert rp.symbol_names(2) == ("T1", "T2", "T3", "T4", "T5", "T6")
    assert rp.symbol_names(5)[-1] == "P21"
    with pytest.raises(UnsupportedDegree):
        rp.symbol_names(6)


@pytest.mark.parametrize("d", rp.DEGREES)
def test_generic_identity_against_naive_oracle(d, backend):
    rep = build(generic_coeffs(d))
    assert pfaffian_recursive(rep.pencil()) == generic_form(d)
    assert rep.pfaffian() == generic_form(d)


def test_generic_quadric_text():
    rep = build_m2(generic_coeffs(2))
    assert str(rep.pfaffian()) == "T1*x^2 + T4*x*y + T5*x*z + T2*y^2 + T6*y*z + T3*z^2"


def test_m2_unit_hand_check():
    rep = build_m2(unit(2, 1))
    m = rep.pencil()
    x = FZ.gen("x")
    hand = m.entry(1, 2) * m.entry(3, 4) - m.entry(1, 3) * m.entry(2, 4) + m.entry(1, 4) * m.entry(2, 3)
    assert hand == x * x
    assert rep.pfaffian() == x * x


def test_m4_entries():
    T = generic_coeffs(4)
    rep = build_m4(T)
    expect_a = {(1, 2): T[1], (1, 3): T[6], (1, 5): T[4], (3, 4): 1, (3, 5): T[15],
                (3, 8): T[9], (5, 6): 1, (5, 8): T[8], (7, 8): 1}
    expect_b = {(1, 3): T[2], (1, 5): T[5], (2, 6): -1, (2, 8): T[14], (3, 5): T[11],
                (4, 8): -1, (5, 7): -1}
    expect_c = {(1, 2): T[7], (1, 3): T[10], (1, 5): T[13], (1, 6): -1, (2, 7): 1,
                (3, 5): T[12], (3, 8): T[3], (4, 5): 1}
    for m, exp in ((rep.A, expect_a), (rep.B, expect_b), (rep.C, expect_c)):
        assert m.upper == {k: T.ring.coerce(v) for k, v in exp.items()}


def test_m4_without_row7_flip_gives_negated_form():
    rep = build_m4(generic_coeffs(4))
    flip = {(7, 8), (5, 7), (2, 7)}
    mats = [m.__class__(m.ring, m.size, {k: (-v if k in flip else v) for k, v in m.upper.items()})
            for m in (rep.A, rep.B, rep.C)]
    printed = Representation(4, *mats)
    assert printed.pfaffian() == -generic_form(4)


def test_m4_specializations():
    x = FZ.gen("x")
    assert build_m4(unit(4, 1)).pfaffian() == x ** 4
    assert pfaffian_recursive(build_m4(unit(4, 1)).pencil()) == x ** 4
    assert build_m4(cv(4, [0] * 15)).pfaffian() == FZ.zero


def test_derived_entries_examples():
    zero = derived_entries(cv(5, [0] * 21))
    assert zero["a23"] == 1 and zero["b69"] == -1
    assert all(zero[k] == 0 for k in rp.DERIVED_NAMES if k not in ("a23", "b69"))
    vals = [0] * 21
    vals[4] = vals[2] = 1  # P5 = P3 = 1
    assert derived_entries(cv(5, vals))["a39"] == -1
    vals = [0] * 21
    vals[5] = vals[10] = 1  # P6 = P11 = 1
    d = derived_entries(cv(5, vals))
    assert d["b68"] == 1 and d["b29"] == -1
    with pytest.raises(DegreeError):
        derived_entries(cv(4, [0] * 15))


def test_derived_coefficient_two_in_char_two():
    r = IntegersMod(2)
    vals = [r.zero] * 21
    for k in (3, 5, 6):
        vals[k - 1] = r.one
    # -2*P6*P5*P3 vanishes; the remaining terms of a23 are 1
    assert derived_entries(CoefficientVector(5, vals, r))["a23"] == r.one


def test_m5_specializations():
    x = FZ.gen("x")
    rep = build_m5(unit(5, 1))
    assert rep.pfaffian() == x ** 5
    assert pfaffian_recursive(rep.pencil()) == x ** 5
    zero_rep = build_m5(cv(5, [0] * 21))
    assert zero_rep.A.upper[(2, 3)] == 1 and zero_rep.B.upper[(6, 9)] == -1
    assert zero_rep.pfaffian() == FZ.zero
    assert pfaffian_recursive(zero_rep.pencil()) == FZ.zero


def test_m5_derived_slots():
    c = generic_coeffs(5)
    rep = build_m5(c)
    d = rep.derived
    for name in rp.DERIVED_NAMES:
        mat = {"a": rep.A, "b": rep.B, "c": rep.C}[name[0]]
        assert mat.upper[(int(name[1]), int(name[2:]))] == d[name]


def test_m1():
    x, y, z = FZ.gens()
    assert build_m1(cv(1, [1, 0, 0])).pfaffian() == x
    assert build_m1(cv(1, [1, 1, 1])).pfaffian() == x + y + z
    assert build_m1(cv(1, [0, 0, 0])).pfaffian() == FZ.zero


def test_builder_degree_mismatch():
    with pytest.raises(DegreeError):
        build_m4(cv(2, [0] * 6))
    with pytest.raises(DegreeError):
        build_m5(cv(4, [0] * 15))
    with pytest.raises(ShapeError):
        cv(2, [0] * 5)


def test_coeffs_from_poly():
    f = FZ.parse_element("x^4")
    assert coeffs_from_poly(f, 4).slots == tuple([1] + [0] * 14)
    with pytest.raises(DegreeError):
        coeffs_from_poly(FZ.parse_element("3*x*y - z"), 2)
    with pytest.raises(UnsupportedDegree):
        coeffs_from_poly(f, 6)
    assert coeffs_from_poly(generic_form(4), 4) == generic_coeffs(4)


@pytest.mark.parametrize("spec", ["int", "rat", "mod:6"])
@pytest.mark.parametrize("d", rp.DEGREES)
def test_coefficient_roundtrip(spec, d):
    ring = make_ring(spec)
    rng = random.Random(f"{spec}{d}")
    for _ in range(20):
        c = CoefficientVector(d, [ring.random_element(rng) for _ in rp.MONOMIALS[d]], ring)
        assert coeffs_from_poly(poly_from_coeffs(c), d) == c


def test_represent_examples():
    f = FZ.parse_element("x^5 + y^5 + z^5")
    rep = represent(f)
    assert rep.size == 10 and verify(rep, f)
    assert pfaffian_recursive(rep.pencil()) == f
    F6 = form_ring(IntegersMod(6))
    g = F6.parse_element("x*y")
    rep6 = represent(g)
    assert rep6.size == 4 and rep6.pfaffian() == g
    with pytest.raises(UnsupportedDegree):
        represent(FZ.parse_element("x^6"))
    with pytest.raises(DegreeError):
        represent(FZ.parse_element("x^2 + y"))
    with pytest.raises(AmbiguousDegree):
        represent(FZ.zero)
    with pytest.raises(UnsupportedDegree):
        represent(FZ.parse_element("7"))
    with pytest.raises(DegreeError):
        represent(FZ.parse_element("x^2"), 3)
    zero = represent(FZ.zero, 3)
    assert zero.size == 6 and verify(zero, FZ.zero)


def test_verify_random_quartics(rng):
    for _ in range(100):
        f = poly_from_coeffs(cv(4, [rng.randint(-10, 10) for _ in range(15)]))
        assert verify(represent(f, 4), f)


def test_tampered_entry_fails(rng):
    for d in rp.DEGREES:
        f = poly_from_coeffs(cv(d, [rng.randint(1, 10) for _ in rp.MONOMIALS[d]]))
        rep = represent(f)
        key = sorted(rep.A.upper)[0]
        bumped = dict(rep.A.upper)
        bumped[key] = bumped[key] + 1
        tampered = Representation(d, rep.A.__class__(ZZ, rep.size, bumped), rep.B, rep.C)
        assert not verify(tampered, f)


def test_zero_matrices_represent_zero():
    z = skew_from_upper(ZZ, 4, [])
    assert verify(Representation(2, z, z, z), FZ.zero)


def test_verify_ring_mismatch():
    f = form_ring(QQ).parse_element("x^2")
    rep = represent(FZ.parse_element("x^2"))
    with pytest.raises(RingMismatch):
        verify(rep, f)


def test_pencil_is_linear():
    for d in rp.DEGREES:
        m = build(generic_coeffs(d)).pencil()
        for v in m.upper.values():
            assert v.is_homogeneous(1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_det_cross_check_symbolic(d, rng):
    for _ in range(3):
        f = poly_from_coeffs(cv(d, [rng.randint(-10, 10) for _ in rp.MONOMIALS[d]]))
        rep = represent(f, d)
        assert determinant(rep.pencil()) == f * f
        assert verify(rep, f, cross_check=True)


def test_det_cross_check_points_degree5(rng):
    f = poly_from_coeffs(cv(5, [rng.randint(-10, 10) for _ in range(21)]))
    pts = [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(5)]
    assert verify(represent(f), f, cross_check=True, points=pts)


def test_at_point_matches_pencil_evaluation(rng):
    f = poly_from_coeffs(cv(3, [rng.randint(-10, 10) for _ in range(10)]))
    rep = represent(f)
    pt = (2, -1, 3)
    assert pfaffian(rep.at(pt)) == f.evaluate(pt)


def test_is_nice_verdicts():
    for d in (1, 2, 3, 4):
        report = is_nice(build(generic_coeffs(d)))
        assert report.nice and not report.violations
    report = is_nice(build_m5(generic_coeffs(5)))
    assert not report
    where = {(v.matrix, v.i, v.j) for v in report.violations if v.rule == "entry"}
    assert ("A", 2, 3) in where
    a23 = next(v for v in report.violations if (v.matrix, v.i, v.j) == ("A", 2, 3))
    assert a23.value.degree() == 3


def test_is_nice_duplicate_coefficient():
    c = generic_coeffs(2)
    rep = build_m2(c)
    A = dict(rep.A.upper)
    A[(2, 3)] = c[1]
    dup = Representation(2, rep.A.__class__(c.ring, 4, A), rep.B, rep.C)
    report = is_nice(dup)
    assert not report
    assert [v.rule for v in report.violations] == ["unique"]
    assert "T1" in report.violations[0].detail


def test_is_nice_requires_symbolic_ring():
    with pytest.raises(RequiresSymbolicRing):
        is_nice(build_m2(unit(2, 1)))


def test_json_roundtrip():
    for d in rp.DEGREES:
        rep = build(generic_coeffs(d))
        doc = rp.to_json(rep)
        assert doc["ring"] == rep.ring.spec() and doc["size"] == 2 * d
        assert ("derived" in doc) == (d == 5)
        back = rp.from_json(doc)
        assert back == rep
        if d == 5:
            assert back.derived == rep.derived
    rq = represent(form_ring(QQ).parse_element("1/2*x^2 - y*z"))
    assert rp.from_json(rp.to_json(rq)) == rq


def test_from_json_rejects_bad_size():
    doc = rp.to_json(build(generic_coeffs(2)))
    doc["size"] = 6
    with pytest.raises(ShapeError):
        rp.from_json(doc)


def test_latex_layout():
    tex = rp.to_latex(build_m2(generic_coeffs(2)))
    assert "0&1&\\Theta_{4}&\\Theta_{5}\\\\" in tex
    assert tex.count("\\begin{smallmatrix}") == 3
    assert "*&&&0" in tex


def test_rational_representation():
    f = form_ring(QQ).parse_element("1/2*x^3 - 2/3*x*y*z + z^3")
    rep = represent(f)
    assert rep.pfaffian() == f
    assert rep.A.upper[(1, 2)] == Fraction(1, 2)
