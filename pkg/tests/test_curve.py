import pytest

from realdet.curve import (
    RealCurve,
    admissible_w1,
    c_star_integer,
    c_star_mod2,
    f_minus_basis,
    f_plus_basis,
    poincare_dual,
    real_component_class,
    valid_topologies,
)
from realdet.errors import InvalidTopology
from realdet.f2 import F2Matrix, F2Vector, gf2_rank, symplectic_pairing

CURVES6 = valid_topologies(6)


@pytest.mark.parametrize(
    "g,k,sep,invariant",
    [
        (-1, 1, False, "genus_nonnegative"),
        (2, 0, False, "real_part_nonempty"),
        (1, 3, True, "harnack_bound"),
        (0, 1, False, "genus_zero"),
        (2, 2, True, "separating_parity"),
        (2, 3, False, "nonseparating_bound"),
    ],
)
def test_invalid_topologies(g, k, sep, invariant):
    with pytest.raises(InvalidTopology) as err:
        RealCurve(g, k, sep)
    assert err.value.invariant == invariant


def test_topology_counts():
    # genus 1: (1,1,nonsep), (1,2,sep); genus 2: k=1,2 nonsep plus k=1,3 sep
    labels = {(c.genus, c.components, c.separating) for c in valid_topologies(2)}
    assert labels == {
        (0, 1, True),
        (1, 1, False), (1, 2, True),
        (2, 1, False), (2, 2, False), (2, 1, True), (2, 3, True),
    }


def test_genus_zero_is_empty():
    c = RealCurve(0, 1, True)
    assert c.dim == 0 and c.m == 0
    assert f_plus_basis(c) == []
    assert real_component_class(c, 0) == F2Vector.zeros(0)


def test_torus_matrices():
    nonsep = RealCurve(1, 1, False)
    assert c_star_integer(nonsep) == ((1, 1), (0, -1))
    sep = RealCurve(1, 2, True)
    assert c_star_integer(sep) == ((1, 0), (0, -1))


def test_separating_swap_block():
    c = RealCurve(3, 2, True)  # m = 1, a_2 <-> a_3
    assert c.m == 1
    C = c_star_integer(c)
    cols = [[C[i][j] for i in range(6)] for j in range(6)]
    assert cols[1] == [0, 0, 1, 0, 0, 0]
    assert cols[4] == [0, 0, 0, 0, 0, -1]


@pytest.mark.parametrize("curve", CURVES6, ids=lambda c: c.label())
def test_involution_and_symplectic(curve):
    n = curve.dim
    C = c_star_integer(curve)
    for i in range(n):
        for j in range(n):
            assert sum(C[i][l] * C[l][j] for l in range(n)) == (i == j)
    M = c_star_mod2(curve)
    for i in range(n):
        for j in range(n):
            x, y = F2Vector.unit(n, i), F2Vector.unit(n, j)
            assert symplectic_pairing(curve.genus, M @ x, M @ y) == symplectic_pairing(curve.genus, x, y)


@pytest.mark.parametrize("curve", CURVES6, ids=lambda c: c.label())
def test_fix_dimension(curve):
    n = curve.dim
    M = c_star_mod2(curve) + F2Matrix.identity(n) if n else None
    fix_dim = n - gf2_rank(M) if n else 0
    assert fix_dim == curve.genus + curve.components - 1
    for i in range(curve.components):
        rc = real_component_class(curve, i)
        assert c_star_mod2(curve) @ rc == rc


@pytest.mark.parametrize("curve", CURVES6, ids=lambda c: c.label())
def test_lagrangians(curve):
    g, n = curve.genus, curve.dim
    fp, fm = f_plus_basis(curve), f_minus_basis(curve)
    assert len(fp) == len(fm) == g
    if g:
        assert gf2_rank(F2Matrix.from_rows(fp)) == g
    for x in fp:
        assert c_star_mod2(curve) @ x == x
        for y in fp:
            assert symplectic_pairing(g, x, y) == 0
        for phi in fm:
            assert phi.dot(x) == 0
    for x in fp:
        for y in (F2Vector.unit(n, j) for j in range(n)):
            assert poincare_dual(curve, x).dot(y) == symplectic_pairing(g, x, y)


def test_admissible_w1_counts():
    c = RealCurve(4, 3, True)
    ws = admissible_w1(c)
    assert len(ws) == 4
    assert all(w.weight() % 2 == 1 for w in ws)
    assert len(admissible_w1(c, 0)) == 4


def test_json_shape():
    assert RealCurve(2, 1, True).to_json() == {"genus": 2, "real_components": 1, "separating": True}
