"""Topological types of real curves and their real symplectic bases.

A real curve is recorded by ``(genus, components, separating)``.  Every
derived object is expressed in a fixed basis ``a_1..a_g, b_1..b_g`` of
first homology, stored as coordinates ``0..g-1`` (the a's) and
``g..2g-1`` (the b's).  Real components are indexed ``0..k-1``; component
0 carries the base point and, for ``1 <= i <= k-1``, component ``i`` is
represented by ``a_i``.

Covectors (mod-2 cohomology classes) are ``F2Vector`` of length ``2g``
acting on homology by the dot product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidTopology, LengthMismatch
from .f2 import F2Matrix, F2Vector, symplectic_pairing

__all__ = [
    "RealCurve",
    "make_curve",
    "valid_topologies",
    "c_star_integer",
    "c_star_mod2",
    "real_component_class",
    "f_plus_basis",
    "f_minus_basis",
    "poincare_dual",
    "pd_inverse",
    "real_w1",
    "admissible_w1",
]


@dataclass(frozen=True)
class RealCurve:
    genus: int
    components: int
    separating: bool
    # Derived data, filled once at construction.
    _c_int: tuple = field(init=False, repr=False, compare=False)
    _c_mod2: F2Matrix = field(init=False, repr=False, compare=False)
    _f_plus: tuple = field(init=False, repr=False, compare=False)
    _rc: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _validate(self.genus, self.components, self.separating)
        c_int = _build_c_star(self)
        object.__setattr__(self, "_c_int", c_int)
        object.__setattr__(self, "_c_mod2", F2Matrix.from_lists(c_int, 2 * self.genus))
        object.__setattr__(self, "_f_plus", _build_f_plus(self))
        object.__setattr__(self, "_rc", _build_real_classes(self))

    @property
    def g(self) -> int:
        return self.genus

    @property
    def k(self) -> int:
        return self.components

    @property
    def m(self) -> int:
        """Genus of one half of the complement; 0 for non-separating curves."""
        if not self.separating:
            return 0
        return (self.genus + 1 - self.components) // 2

    @property
    def dim(self) -> int:
        return 2 * self.genus

    def a(self, i: int) -> F2Vector:
        """Homology class a_i, 1-based as in the usual notation."""
        if not 1 <= i <= self.genus:
            raise IndexError(f"a_{i} does not exist in genus {self.genus}")
        return F2Vector.unit(self.dim, i - 1)

    def b(self, i: int) -> F2Vector:
        if not 1 <= i <= self.genus:
            raise IndexError(f"b_{i} does not exist in genus {self.genus}")
        return F2Vector.unit(self.dim, self.genus + i - 1)

    def pairing(self, x: F2Vector, y: F2Vector) -> int:
        return symplectic_pairing(self.genus, x, y)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "real_components": self.components,
            "separating": self.separating,
        }

    def label(self) -> str:
        return f"(g={self.genus}, k={self.components}, {'sep' if self.separating else 'nonsep'})"


def _validate(g: int, k: int, separating: bool) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 0:
        raise InvalidTopology(f"genus must be a non-negative integer, got {g!r}", "genus_nonnegative")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidTopology(f"need at least one real component, got k={k!r}", "real_part_nonempty")
    if k > g + 1:
        raise InvalidTopology(f"k={k} exceeds the Harnack bound g+1={g + 1}", "harnack_bound")
    if g == 0 and not (k == 1 and separating):
        raise InvalidTopology("a genus-0 real curve with real points has k=1 and is separating", "genus_zero")
    if separating and (k - g - 1) % 2:
        raise InvalidTopology(f"separating curve needs k = g+1 mod 2, got g={g}, k={k}", "separating_parity")
    if not separating and k > g:
        raise InvalidTopology(f"curves with k = g+1 = {k} components are separating", "nonseparating_bound")


def make_curve(g: int, k: int, separating: bool) -> RealCurve:
    return RealCurve(g, k, bool(separating))


def valid_topologies(max_genus: int) -> list[RealCurve]:
    """Every valid topological type with genus at most ``max_genus``."""
    out = []
    for g in range(max_genus + 1):
        for k in range(1, g + 2):
            for sep in (False, True):
                try:
                    out.append(RealCurve(g, k, sep))
                except InvalidTopology:
                    pass
    return out


def _build_c_star(curve: RealCurve) -> tuple:
    g, k, m = curve.genus, curve.components, curve.m
    # column j = image of basis vector j
    cols = [[0] * (2 * g) for _ in range(2 * g)]

    def A(i):
        return i - 1

    def B(i):
        return g + i - 1

    if not curve.separating:
        for i in range(1, g + 1):
            cols[A(i)][A(i)] = 1
            cols[B(i)][B(i)] = -1
            if i >= k:
                cols[B(i)][A(i)] = 1
    else:
        for i in range(1, k):
            cols[A(i)][A(i)] = 1
            cols[B(i)][B(i)] = -1
        for i in range(k, k + m):
            cols[A(i)][A(i + m)] = 1
            cols[A(i + m)][A(i)] = 1
            cols[B(i)][B(i + m)] = -1
            cols[B(i + m)][B(i)] = -1
    return tuple(tuple(cols[j][i] for j in range(2 * g)) for i in range(2 * g))


def _build_f_plus(curve: RealCurve) -> tuple:
    g, k, m = curve.genus, curve.components, curve.m
    if not curve.separating:
        return tuple(curve.a(i) for i in range(1, g + 1))
    out = [curve.a(i) for i in range(1, k)]
    out += [curve.a(i) + curve.a(i + m) for i in range(k, k + m)]
    out += [curve.b(i) + curve.b(i + m) for i in range(k, k + m)]
    return tuple(out)


def _build_real_classes(curve: RealCurve) -> tuple:
    g, k = curve.genus, curve.components
    top = g if not curve.separating else k - 1
    rc0 = F2Vector.zeros(2 * g)
    for j in range(1, top + 1):
        rc0 = rc0 + curve.a(j)
    return (rc0,) + tuple(curve.a(i) for i in range(1, k))


def c_star_integer(curve: RealCurve) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of the involution on H_1, columns are images of a_1..a_g, b_1..b_g."""
    return curve._c_int


def c_star_mod2(curve: RealCurve) -> F2Matrix:
    return curve._c_mod2


def real_component_class(curve: RealCurve, i: int) -> F2Vector:
    if not 0 <= i < curve.components:
        raise IndexError(f"component {i} out of range 0..{curve.components - 1}")
    return curve._rc[i]


def f_plus_basis(curve: RealCurve) -> list[F2Vector]:
    """Basis of the mod-2 reduction of the +1 eigenlattice, a lagrangian of dimension g.

    Order: the oval classes a_1..a_{k-1}, then (separating only) the
    sums a_i + a_{i+m} and b_i + b_{i+m}; non-separating curves use
    a_1..a_g.  This order matches the exponent order of ``AutClass``.
    """
    return list(curve._f_plus)


def poincare_dual(curve: RealCurve, x: F2Vector) -> F2Vector:
    """The covector ``y -> x . y``; swaps the a and b halves of x."""
    g = curve.genus
    if x.n != 2 * g:
        raise LengthMismatch(f"expected length {2 * g}, got {x.n}")
    low = (1 << g) - 1
    return F2Vector(2 * g, ((x.bits & low) << g) | (x.bits >> g))


def pd_inverse(curve: RealCurve, phi: F2Vector) -> F2Vector:
    # the half swap is an involution
    return poincare_dual(curve, phi)


def f_minus_basis(curve: RealCurve) -> list[F2Vector]:
    return [poincare_dual(curve, x) for x in curve._f_plus]


def real_w1(curve: RealCurve, bits: Sequence[int] | F2Vector) -> F2Vector:
    """A class in H^1 of the real part, one bit per component."""
    v = bits if isinstance(bits, F2Vector) else F2Vector.from_bits(bits)
    if v.n != curve.components:
        raise LengthMismatch(f"w1 has {v.n} entries but the curve has {curve.components} real components")
    return v


def admissible_w1(curve: RealCurve, parity: int | None = None) -> list[F2Vector]:
    """All w in H^1(real part) with total ``parity`` (default g+1 mod 2)."""
    if parity is None:
        parity = curve.genus + 1
    k = curve.components
    return [F2Vector(k, mask) for mask in range(1 << k) if mask.bit_count() % 2 == parity % 2]
