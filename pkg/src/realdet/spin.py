"""Real Spin structures as quadratic refinements of the mod-2 intersection form.

A form is determined by its values on the basis a_1..a_g, b_1..b_g;
everything else follows from ``q(x + y) = q(x) + q(y) + x.y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .autgroup import AutClass, ind2
from .curve import (
    RealCurve,
    c_star_mod2,
    pd_inverse,
    real_component_class,
    real_w1,
)
from .errors import BadW1Parity, LengthMismatch, NotRealSpin
from .f2 import F2Matrix, F2Vector, gf2_solve_affine

__all__ = [
    "QuadraticForm",
    "BordismClass",
    "quad_eval",
    "is_real_spin",
    "arf",
    "spin_w1",
    "act",
    "find_real_spin",
    "enumerate_real_spin",
    "arf_delta",
    "bordism_class",
]


@dataclass(frozen=True)
class QuadraticForm:
    basis_values: F2Vector

    @classmethod
    def from_ab(cls, q_a: Sequence[int], q_b: Sequence[int]) -> "QuadraticForm":
        if len(q_a) != len(q_b):
            raise LengthMismatch(f"q_a has {len(q_a)} entries, q_b has {len(q_b)}")
        return cls(F2Vector.from_bits(list(q_a) + list(q_b)) if q_a else F2Vector.zeros(0))

    @property
    def genus(self) -> int:
        return self.basis_values.n // 2

    @property
    def q_a(self) -> list[int]:
        return self.basis_values.to_list()[: self.genus]

    @property
    def q_b(self) -> list[int]:
        return self.basis_values.to_list()[self.genus:]

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.basis_values)


@dataclass(frozen=True)
class BordismClass:
    w1: F2Vector
    arf: int


def _check_form(curve: RealCurve, q: QuadraticForm) -> None:
    if q.basis_values.n != curve.dim:
        raise LengthMismatch(f"form has {q.basis_values.n} basis values, {curve.label()} needs {curve.dim}")


def _cross(g: int, x: F2Vector) -> int:
    # sum over i<j of x_i x_j (e_i . e_j); only the pairs (a_i, b_i) meet
    low = (1 << g) - 1
    return ((x.bits & low) & (x.bits >> g)).bit_count() & 1


def quad_eval(curve: RealCurve, q: QuadraticForm, x: F2Vector) -> int:
    _check_form(curve, q)
    if x.n != curve.dim:
        raise LengthMismatch(f"class has length {x.n}, expected {curve.dim}")
    return q.basis_values.dot(x) ^ _cross(curve.genus, x)


def is_real_spin(curve: RealCurve, q: QuadraticForm) -> bool:
    _check_form(curve, q)
    c = c_star_mod2(curve)
    for j in range(curve.dim):
        e = F2Vector.unit(curve.dim, j)
        if quad_eval(curve, q, c @ e) != quad_eval(curve, q, e):
            return False
    return True


def _require_real(curve: RealCurve, q: QuadraticForm) -> None:
    if not is_real_spin(curve, q):
        raise NotRealSpin(f"form {q.basis_values!r} is not invariant under the real structure of {curve.label()}")


def arf(curve: RealCurve, q: QuadraticForm) -> int:
    _check_form(curve, q)
    g = curve.genus
    v = q.basis_values.bits
    return ((v & ((1 << g) - 1)) & (v >> g)).bit_count() & 1


def spin_w1(curve: RealCurve, q: QuadraticForm) -> F2Vector:
    """First Stiefel-Whitney class of the real part: w_i = 1 + q([component i])."""
    _require_real(curve, q)
    return F2Vector.from_bits(
        1 ^ quad_eval(curve, q, real_component_class(curve, i)) for i in range(curve.components)
    )


def act(curve: RealCurve, f: AutClass, q: QuadraticForm) -> QuadraticForm:
    """Pull-back of ``q`` by ``f``: translation by the mod-2 index of ``f``."""
    _require_real(curve, q)
    return QuadraticForm(q.basis_values + ind2(curve, f))


def _check_w(curve: RealCurve, w) -> F2Vector:
    w = real_w1(curve, w)
    if w.weight() % 2 != (curve.genus + 1) % 2:
        raise BadW1Parity(
            f"w1 = {w.to_list()} has total {w.weight()}, needs parity g+1 = {curve.genus + 1} mod 2"
        )
    return w


def _real_spin_system(curve: RealCurve, w: F2Vector) -> tuple[F2Matrix, F2Vector]:
    """Linear system in the 2g basis values cutting out the w-orbit.

    Realness at e_j reads sum_l (C[l][j] + delta_lj) q_l = cross(C e_j);
    the w condition reads q(component i) = 1 + w_i.
    """
    n = curve.dim
    c = c_star_mod2(curve)
    rows, rhs = [], []
    for j, img in enumerate(c.columns()):
        rows.append(img + F2Vector.unit(n, j))
        rhs.append(_cross(curve.genus, img))
    for i in range(curve.components):
        rc = real_component_class(curve, i)
        rows.append(rc)
        rhs.append((1 + w[i] + _cross(curve.genus, rc)) % 2)
    return F2Matrix(tuple(rows), n), F2Vector.from_bits(rhs) if rhs else F2Vector.zeros(0)


@lru_cache(maxsize=4096)
def _orbit(curve: RealCurve, w: F2Vector) -> tuple[QuadraticForm, ...]:
    A, b = _real_spin_system(curve, w)
    forms = [QuadraticForm(x) for x in gf2_solve_affine(A, b).solutions()]
    return tuple(sorted(forms, key=QuadraticForm.sort_key))


def find_real_spin(curve: RealCurve, w) -> QuadraticForm:
    """The lexicographically smallest real Spin structure with class ``w``."""
    w = _check_w(curve, w)
    return _orbit(curve, w)[0]


def enumerate_real_spin(curve: RealCurve, w) -> list[QuadraticForm]:
    """All 2^g real Spin structures with class ``w``, sorted by basis values."""
    w = _check_w(curve, w)
    return list(_orbit(curve, w))


def arf_delta(curve: RealCurve, f: AutClass, w) -> int:
    """Change of Arf invariant under ``f`` on the w-orbit: q((f_*)^pd)."""
    q = find_real_spin(curve, w)
    return quad_eval(curve, q, pd_inverse(curve, ind2(curve, f)))


def bordism_class(curve: RealCurve, q: QuadraticForm) -> BordismClass:
    return BordismClass(spin_w1(curve, q), arf(curve, q))
