"""Orientation signs of bundle automorphisms on the determinant line.

Bits live in {0, 1}; a ``Sign`` is the int +1 or -1 with 0 -> +1.

The class of an automorphism of a rank-r bundle is carried as a pair
(determinant class, SL class) through the splitting N = det N + trivial.
Both sign maps are homomorphisms, so the splitting choice never shows up
in an output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .autgroup import AutClass, component_signs, compose, identity, ind2, minus_one
from .curve import RealCurve, f_minus_basis, real_w1
from .errors import BadParity, CurveMismatch, LengthMismatch, MissingBasepoint, RankMismatch
from .f2 import F2Matrix, F2Vector, gf2_solve_affine
from .spin import arf_delta

__all__ = [
    "RealBundle",
    "SLClass",
    "FullAutClass",
    "to_sign",
    "beta0",
    "canonical_w",
    "s_top",
    "s_n",
    "eps_pin",
    "det_orientation_sign",
    "minus_id_sign",
    "minus_id_class",
    "loop_orientability",
    "picard_w1",
    "PicardW1",
    "sign_bit_at",
]


def to_sign(bit: int) -> int:
    return -1 if bit % 2 else 1


@dataclass(frozen=True)
class RealBundle:
    curve: RealCurve
    rank: int
    degree: int
    w1: F2Vector

    def __post_init__(self):
        if self.rank < 1:
            raise RankMismatch(f"rank must be at least 1, got {self.rank}")
        object.__setattr__(self, "w1", real_w1(self.curve, self.w1))
        if self.w1.weight() % 2 != self.degree % 2:
            raise BadParity(
                f"w1 = {self.w1.to_list()} sums to {self.w1.weight()}, "
                f"which must equal the degree {self.degree} mod 2"
            )

    def det_bundle(self) -> "RealBundle":
        return RealBundle(self.curve, 1, self.degree, self.w1)


@dataclass(frozen=True)
class SLClass:
    """Per-component class of the restriction to the real part.

    Entries are integers; only their parity is significant on components
    where ``pi_0`` is Z/2 (rank >= 3, or rank 2 over a non-orientable
    component), and ``canonical`` reduces those.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def trivial(cls, k: int) -> "SLClass":
        return cls((0,) * k)

    def canonical(self, bundle: RealBundle) -> "SLClass":
        if len(self.entries) != bundle.curve.components:
            raise LengthMismatch(f"SL class has {len(self.entries)} entries, expected {bundle.curve.components}")
        out = []
        for i, e in enumerate(self.entries):
            if bundle.rank >= 3 or bundle.w1[i]:
                e %= 2
            out.append(e)
        return SLClass(tuple(out))

    def parities(self) -> F2Vector:
        return F2Vector.from_bits(e % 2 for e in self.entries) if self.entries else F2Vector.zeros(0)

    def __add__(self, other: "SLClass") -> "SLClass":
        if len(self.entries) != len(other.entries):
            raise LengthMismatch(f"{len(self.entries)} vs {len(other.entries)} components")
        return SLClass(tuple(a + b for a, b in zip(self.entries, other.entries)))


@dataclass(frozen=True)
class FullAutClass:
    det_part: AutClass
    sl_part: SLClass | None = None

    def __post_init__(self):
        if self.sl_part is not None and len(self.sl_part.entries) != self.det_part.curve.components:
            raise LengthMismatch(
                f"SL part has {len(self.sl_part.entries)} entries, curve has {self.det_part.curve.components} components"
            )

    def __mul__(self, other: "FullAutClass") -> "FullAutClass":
        if (self.sl_part is None) != (other.sl_part is None):
            raise RankMismatch("cannot compose a rank-1 class with a higher-rank class")
        sl = None if self.sl_part is None else self.sl_part + other.sl_part
        return FullAutClass(compose(self.det_part, other.det_part), sl)


def _check_curve(curve: RealCurve, f: AutClass) -> None:
    if f.curve != curve:
        raise CurveMismatch(f"{f.curve.label()} vs {curve.label()}")


def beta0(curve: RealCurve, f: AutClass, w) -> int:
    """Number of components with w_i = 0 on which f is negative, mod 2."""
    _check_curve(curve, f)
    w = real_w1(curve, w)
    eps = component_signs(curve, f)
    return (eps.bits & ~w.bits).bit_count() & 1


def canonical_w(curve: RealCurve) -> F2Vector:
    """Admissible class used to evaluate s_top: ones on components >= 1."""
    k = curve.components
    bits = [(curve.genus + k) % 2] + [1] * (k - 1)
    return F2Vector.from_bits(bits)


def s_top(curve: RealCurve, f: AutClass) -> int:
    w = canonical_w(curve)
    return beta0(curve, f, w) ^ arf_delta(curve, f, w)


def s_n(bundle: RealBundle, f: AutClass) -> int:
    if bundle.rank != 1:
        raise RankMismatch(f"s_N is defined on line bundles; got rank {bundle.rank}")
    return s_top(bundle.curve, f) ^ beta0(bundle.curve, f, bundle.w1)


def eps_pin(bundle: RealBundle, sl: SLClass) -> int:
    """Signature of the permutation induced on Pin structures of the real part.

    Each component with an odd entry swaps its two structures.
    """
    if bundle.rank < 2:
        raise RankMismatch(f"Pin permutation needs rank >= 2, got {bundle.rank}")
    sl = sl.canonical(bundle)
    return to_sign(sum(e % 2 for e in sl.entries))


def _as_full(bundle: RealBundle, f) -> FullAutClass:
    if isinstance(f, AutClass):
        if bundle.rank != 1:
            raise RankMismatch(f"rank-{bundle.rank} bundle needs an SL part for its automorphism class")
        return FullAutClass(f)
    return f


def det_orientation_sign(bundle: RealBundle, f: FullAutClass | AutClass) -> int:
    """Sign (+1 or -1) of the action of ``f`` on orientations of the determinant bundle."""
    f = _as_full(bundle, f)
    _check_curve(bundle.curve, f.det_part)
    if bundle.rank == 1:
        if f.sl_part is not None:
            raise RankMismatch("a rank-1 bundle has no SL part")
        return to_sign(s_n(bundle, f.det_part))
    if f.sl_part is None:
        raise RankMismatch(f"rank-{bundle.rank} bundle needs an SL part")
    return eps_pin(bundle, f.sl_part) * to_sign(s_n(bundle.det_bundle(), f.det_part))


def minus_id_sign(bundle: RealBundle) -> int:
    """Sign of -1 on a line bundle from the parity of its real index, deg + 1 - g."""
    if bundle.rank != 1:
        raise RankMismatch(f"expected a line bundle, got rank {bundle.rank}")
    return to_sign(bundle.degree + 1 - bundle.curve.genus)


def minus_id_class(bundle: RealBundle) -> FullAutClass:
    """Class of -id for rank 1 and 2.

    In rank 2 the determinant is 1 and the restriction to component i is
    the nontrivial class exactly when the bundle is non-orientable there.
    """
    curve = bundle.curve
    if bundle.rank == 1:
        return FullAutClass(minus_one(curve))
    if bundle.rank == 2:
        return FullAutClass(identity(curve), SLClass(tuple(bundle.w1)))
    raise RankMismatch(f"-id is only classified here for rank 1 and 2, got {bundle.rank}")


def loop_orientability(bundle: RealBundle, clutching: SLClass) -> bool:
    """Orientability of the determinant over a loop of operators with SL clutching.

    Orientable iff an even number of real families fail to carry a Pin structure.
    """
    if bundle.rank < 2:
        raise RankMismatch(f"loops are classified for rank >= 2, got {bundle.rank}")
    return eps_pin(bundle, clutching) == 1


def sign_bit_at(curve: RealCurve, f: AutClass, component: int) -> int:
    """Sign coordinate of ``f`` when the base point sits on ``component``.

    Moving the base point to component i sends (eps, alpha) to
    (eps + alpha(b_i), alpha); the result is the sign of f on that component.
    """
    if component == 0:
        return f.sign
    return (f.sign + ind2(curve, f)[curve.genus + component - 1]) % 2


@dataclass(frozen=True)
class PicardW1:
    curve: RealCurve
    applies: str
    w_used: F2Vector
    functional_on_Fminus: tuple[int, ...]

    def evaluate(self, mu) -> int:
        """Value on a monodromy class: an ``AutClass`` or a covector in F^-."""
        if isinstance(mu, AutClass):
            _check_curve(self.curve, mu)
            coords = [e % 2 for e in mu.exponents]
        else:
            basis = f_minus_basis(self.curve)
            sol = gf2_solve_affine(F2Matrix.from_columns(basis, self.curve.dim), mu)
            coords = list(sol.particular)
        return sum(c * v for c, v in zip(coords, self.functional_on_Fminus)) % 2

    @property
    def orientable(self) -> bool:
        return not any(self.functional_on_Fminus)


def picard_w1(curve: RealCurve, d: int, w, basepoint: int | None = None) -> PicardW1:
    """First Stiefel-Whitney class of the determinant over a real Picard component.

    The component is (degree d, class w).  For d = g-1 mod 2 the answer
    is the Arf shift for w; for d = g mod 2 the base point's component has
    its bit flipped first.  Reported as values on the F^- generators.
    """
    w = real_w1(curve, w)
    if w.weight() % 2 != d % 2:
        raise BadParity(f"w1 = {w.to_list()} does not have parity of the degree {d}")
    if (d - curve.genus + 1) % 2 == 0:
        applies, w_used = "picp", w
    else:
        if basepoint is None:
            raise MissingBasepoint(f"degree {d} has the parity of g = {curve.genus}; a base point is required")
        if not 0 <= basepoint < curve.components:
            raise MissingBasepoint(f"base point component {basepoint} out of range", "basepoint_range")
        applies, w_used = "pic", w.flip(basepoint)
    values = []
    for j in range(curve.genus):
        unit = tuple(1 if i == j else 0 for i in range(curve.genus))
        values.append(arf_delta(curve, AutClass(curve, 0, unit), w_used))
    return PicardW1(curve, applies, w_used, tuple(values))
