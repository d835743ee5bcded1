import pytest
from hypothesis import given

from realdet.autgroup import (
    AutClass,
    component_signs,
    compose,
    from_generator_exponents,
    generator,
    generator_names,
    identity,
    ind2,
    invert,
    is_identity,
    minus_one,
    power,
)
from realdet.curve import RealCurve, f_minus_basis, poincare_dual
from realdet.errors import CurveMismatch, LengthMismatch, UnknownGenerator
from realdet.f2 import F2Matrix, F2Vector, gf2_solve_affine

from .strategies import curve_and_auts


def test_generator_names():
    assert generator_names(RealCurve(2, 1, False)) == ["f0", "f1", "f2"]
    assert generator_names(RealCurve(4, 3, True)) == ["f0", "f1", "f2", "f3", "g3"]
    assert generator_names(RealCurve(0, 1, True)) == ["f0"]


def test_f0_relation():
    # f0 f1 ... f_top = -1
    for curve in (RealCurve(3, 2, False), RealCurve(4, 3, True), RealCurve(0, 1, True)):
        top = curve.genus if not curve.separating else curve.components - 1
        prod = generator(curve, "f0")
        for i in range(1, top + 1):
            prod = compose(prod, generator(curve, f"f{i}"))
        assert prod == minus_one(curve)


def test_subscript_names_and_errors():
    c = RealCurve(2, 1, False)
    assert generator(c, "f₂") == generator(c, "f2")
    with pytest.raises(UnknownGenerator):
        generator(c, "g1")
    with pytest.raises(UnknownGenerator):
        generator(c, "f3")


def test_ind2_of_generators_is_dual_basis():
    c = RealCurve(4, 1, True)  # m = 2
    fm = f_minus_basis(c)
    names = generator_names(c)[1:]
    for name, phi in zip(names, fm):
        assert ind2(c, generator(c, name)) == phi
    # g_i pairs to b_i - b_{i+m}, mod 2 the sum
    g1 = generator(c, "g1")
    assert ind2(c, g1) == poincare_dual(c, c.b(1) + c.b(3))


def test_length_and_curve_checks():
    c = RealCurve(2, 1, False)
    with pytest.raises(LengthMismatch):
        AutClass(c, 0, (1,))
    with pytest.raises(CurveMismatch):
        compose(identity(c), identity(RealCurve(2, 2, False)))
    with pytest.raises(LengthMismatch):
        from_generator_exponents(RealCurve(4, 3, True), 0, [0, 0, 0], [])


def test_from_generator_exponents_folds_f0():
    c = RealCurve(2, 1, False)
    f = from_generator_exponents(c, 0, [1, 0], f0=1)
    assert f == AutClass(c, 1, (0, -1))


@given(curve_and_auts(3))
def test_group_laws(data):
    curve, x, y, z = data
    assert compose(compose(x, y), z) == compose(x, compose(y, z))
    assert compose(x, y) == compose(y, x)
    assert is_identity(compose(x, invert(x)))
    assert power(x, 2) == compose(x, x)
    assert compose(x, identity(curve)) == x


@given(curve_and_auts(2))
def test_ind2_and_signs_are_homomorphisms(data):
    curve, x, y = data
    xy = compose(x, y)
    assert ind2(curve, xy) == ind2(curve, x) + ind2(curve, y)
    assert component_signs(curve, xy) == component_signs(curve, x) + component_signs(curve, y)
    phi = ind2(curve, x)
    if curve.genus:
        gf2_solve_affine(F2Matrix.from_columns(f_minus_basis(curve), curve.dim), phi)


@given(curve_and_auts(1))
def test_ind2_kernel_mod_two(data):
    curve, x = data
    if ind2(curve, x).is_zero():
        assert all(e % 2 == 0 for e in x.exponents)
    assert ind2(curve, minus_one(curve)).is_zero()


@given(curve_and_auts(1))
def test_component_sign_versus_index_on_b(data):
    curve, f = data
    cs, phi = component_signs(curve, f), ind2(curve, f)
    for i in range(1, curve.components):
        assert cs[i] ^ cs[0] == phi.dot(curve.b(i))


def test_minus_one_signs():
    c = RealCurve(3, 4, True)
    assert component_signs(c, minus_one(c)) == F2Vector.ones(4)
