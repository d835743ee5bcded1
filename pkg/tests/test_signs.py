import pytest
from hypothesis import given, strategies as st

from realdet.autgroup import (
    AutClass,
    component_signs,
    compose,
    generator,
    generator_names,
    identity,
    ind2,
    minus_one,
)
from realdet.curve import RealCurve, admissible_w1, valid_topologies
from realdet.errors import BadParity, LengthMismatch, MissingBasepoint, RankMismatch
from realdet.signs import (
    FullAutClass,
    RealBundle,
    SLClass,
    beta0,
    canonical_w,
    det_orientation_sign,
    eps_pin,
    loop_orientability,
    minus_id_class,
    minus_id_sign,
    picard_w1,
    s_n,
    s_top,
    sign_bit_at,
)
from realdet.spin import arf_delta

from .strategies import aut_classes, curves

TORUS = RealCurve(1, 1, False)
SPHERE = RealCurve(0, 1, True)


def test_bundle_parity_enforced():
    with pytest.raises(BadParity):
        RealBundle(TORUS, 1, 1, [0])
    with pytest.raises(RankMismatch):
        RealBundle(TORUS, 0, 0, [0])


def test_beta0_examples():
    c = RealCurve(3, 4, True)
    assert beta0(c, identity(c), [0, 1, 0, 1]) == 0
    assert beta0(c, minus_one(c), [0, 1, 0, 0]) == 1
    for w in admissible_w1(c, 0):
        assert beta0(c, generator(c, "f2"), w) == 1 ^ w[2]


def test_canonical_w_is_admissible():
    for curve in valid_topologies(6):
        assert canonical_w(curve).weight() % 2 == (curve.genus + 1) % 2


@pytest.mark.parametrize("curve", valid_topologies(4), ids=lambda c: c.label())
def test_s_top_does_not_depend_on_w(curve):
    for name in generator_names(curve) + ["minus_one"]:
        f = generator(curve, name)
        values = {beta0(curve, f, w) ^ arf_delta(curve, f, w) for w in admissible_w1(curve)}
        assert values == {s_top(curve, f)}


@pytest.mark.parametrize("curve", [c for c in valid_topologies(5) if c.separating], ids=lambda c: c.label())
def test_separating_s_top_vanishes(curve):
    for name in generator_names(curve) + ["minus_one"]:
        assert s_top(curve, generator(curve, name)) == 0


def test_torus_f1_examples():
    b = RealBundle(TORUS, 1, 0, [0])
    f1 = generator(TORUS, "f1")
    assert s_top(TORUS, f1) == 1
    assert s_n(b, f1) == 1
    assert det_orientation_sign(b, f1) == -1
    assert arf_delta(TORUS, f1, [0]) == 1


def test_sphere_minus_one():
    b = RealBundle(SPHERE, 1, 0, [0])
    assert det_orientation_sign(b, minus_one(SPHERE)) == -1
    assert minus_id_sign(b) == -1
    # preserved when the real part is non-orientable
    assert det_orientation_sign(RealBundle(SPHERE, 1, 1, [1]), minus_one(SPHERE)) == 1


def test_minus_id_sign_values():
    assert minus_id_sign(RealBundle(TORUS, 1, 0, [0])) == 1
    assert minus_id_sign(RealBundle(RealCurve(1, 2, True), 1, 1, [1, 0])) == -1


@pytest.mark.parametrize("curve", valid_topologies(4), ids=lambda c: c.label())
def test_minus_one_riemann_roch(curve):
    for d in range(-6, 7):
        for w in admissible_w1(curve, d):
            b = RealBundle(curve, 1, d, w)
            assert det_orientation_sign(b, minus_one(curve)) == minus_id_sign(b)
            assert s_n(b, minus_one(curve)) == (d + 1 + curve.genus) % 2


@pytest.mark.parametrize("curve", valid_topologies(3), ids=lambda c: c.label())
def test_rank_two_minus_id_matches_index_parity(curve):
    # -id on rank 2 acts by (-1)^(deg + 2(1-g)) = (-1)^deg
    for d in range(-3, 4):
        for w in admissible_w1(curve, d):
            b = RealBundle(curve, 2, d, w)
            assert det_orientation_sign(b, minus_id_class(b)) == (-1) ** (d % 2)


def test_eps_pin_examples():
    c = RealCurve(1, 2, True)
    b = RealBundle(c, 2, 1, [1, 0])
    assert eps_pin(b, SLClass((0, 0))) == 1
    assert eps_pin(b, SLClass((0, 3))) == -1
    assert eps_pin(b, minus_id_class(b).sl_part) == -1
    with pytest.raises(RankMismatch):
        eps_pin(RealBundle(c, 1, 1, [1, 0]), SLClass((0, 0)))


def test_sl_canonical_form():
    c = RealCurve(1, 2, True)
    assert SLClass((3, 5)).canonical(RealBundle(c, 2, 1, [1, 0])).entries == (1, 5)
    assert SLClass((3, -4)).canonical(RealBundle(c, 3, 1, [0, 1])).entries == (1, 0)
    with pytest.raises(LengthMismatch):
        SLClass((1,)).canonical(RealBundle(c, 2, 0, [0, 0]))


def test_loop_orientability():
    c = RealCurve(2, 3, True)
    b = RealBundle(c, 2, 1, [1, 0, 0])
    assert loop_orientability(b, SLClass((0, 0, 0)))
    assert not loop_orientability(b, SLClass((1, 0, 0)))
    assert loop_orientability(b, SLClass((1, 0, -1)))
    with pytest.raises(RankMismatch):
        loop_orientability(RealBundle(c, 1, 1, [1, 0, 0]), SLClass((0, 0, 0)))


def test_rank_mismatches():
    b2 = RealBundle(TORUS, 2, 0, [0])
    with pytest.raises(RankMismatch):
        det_orientation_sign(b2, identity(TORUS))
    with pytest.raises(RankMismatch):
        det_orientation_sign(RealBundle(TORUS, 1, 0, [0]), FullAutClass(identity(TORUS), SLClass((0,))))
    with pytest.raises(RankMismatch):
        minus_id_class(RealBundle(TORUS, 3, 0, [0]))


@st.composite
def bundle_and_pair(draw):
    curve = draw(curves)
    rank = draw(st.integers(1, 3))
    d = draw(st.integers(-4, 4))
    w = draw(st.sampled_from(admissible_w1(curve, d)))
    b = RealBundle(curve, rank, d, w)

    def full():
        det = draw(aut_classes(curve))
        if rank == 1:
            return FullAutClass(det)
        sl = draw(st.lists(st.integers(-5, 5), min_size=curve.components, max_size=curve.components))
        return FullAutClass(det, SLClass(tuple(sl)))

    return b, full(), full()


@given(bundle_and_pair())
def test_sign_homomorphism(data):
    b, x, y = data
    assert det_orientation_sign(b, x * y) == det_orientation_sign(b, x) * det_orientation_sign(b, y)


@given(bundle_and_pair())
def test_degree_route(data):
    b, x, _ = data
    curve = b.curve
    if (b.degree - curve.genus - 1) % 2 == 0:
        assert s_n(b.det_bundle(), x.det_part) == arf_delta(curve, x.det_part, b.w1)


@given(bundle_and_pair())
def test_positive_and_spin_preserving_is_positive(data):
    b, x, _ = data
    if b.rank != 1:
        return
    curve, f = b.curve, x.det_part
    # make f positive on every component: sign 0 and even exponents on ovals
    exps = list(f.exponents)
    for i in range(curve.components - 1):
        exps[i] = 2 * exps[i]
    f = AutClass(curve, 0, tuple(exps))
    if all(arf_delta(curve, f, w) == 0 for w in admissible_w1(curve)):
        assert det_orientation_sign(b, f) == 1


def test_separating_sign_counts_orientable_negative_components():
    c = RealCurve(4, 3, True)
    for d in range(-2, 3):
        for w in admissible_w1(c, d):
            b = RealBundle(c, 1, d, w)
            for name in generator_names(c):
                f = generator(c, name)
                cs = component_signs(c, f)
                orientable_negative = sum(1 for i in range(3) if cs[i] and not w[i])
                assert det_orientation_sign(b, f) == (-1) ** orientable_negative


def test_sign_bit_at_components():
    c = RealCurve(3, 4, True)
    for name in generator_names(c) + ["minus_one"]:
        f = generator(c, name)
        assert [sign_bit_at(c, f, i) for i in range(4)] == component_signs(c, f).to_list()


class TestPicard:
    sep = RealCurve(1, 2, True)
    nonsep = RealCurve(1, 1, False)

    def test_even_degree_separating(self):
        r = picard_w1(self.sep, 0, [0, 0])
        assert (r.applies, r.functional_on_Fminus, r.orientable) == ("picp", (1,), False)
        assert picard_w1(self.sep, 2, [1, 1]).functional_on_Fminus == (0,)

    def test_odd_degree_needs_basepoint(self):
        with pytest.raises(MissingBasepoint):
            picard_w1(self.sep, 1, [1, 0])
        r = picard_w1(self.sep, 1, [1, 0], basepoint=0)
        assert r.applies == "pic" and r.w_used.to_list() == [0, 0]
        assert not r.orientable
        assert picard_w1(self.sep, 1, [1, 0], basepoint=1).orientable

    def test_parity_error(self):
        with pytest.raises(BadParity):
            picard_w1(self.sep, 0, [1, 0])

    def test_nonseparating(self):
        r = picard_w1(self.nonsep, 0, [0])
        assert r.functional_on_Fminus == (1,) and not r.orientable

    def test_evaluate(self):
        c = RealCurve(2, 1, False)
        r = picard_w1(c, 1, [1])
        for name in generator_names(c)[1:]:
            f = generator(c, name)
            assert r.evaluate(f) == arf_delta(c, f, [1])
        f = compose(generator(c, "f1"), generator(c, "f2"))
        assert r.evaluate(ind2(c, f)) == r.evaluate(f)
