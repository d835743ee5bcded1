"""Homotopy classes of real automorphisms of a real line bundle.

The group is ``Z/2 x Z^g``.  An element is stored as a sign bit (the
factor -1) and one integer exponent per generator, in the order

* non-separating curves: ``f1 .. fg``
* separating curves: ``f1 .. f{k+m-1}`` then ``g{k} .. g{k+m-1}``

The generator ``f0`` (the class around the base-point component) is not a
coordinate: it is eliminated through the relation ``-1 = f0 f1 ... f_top``
where ``top = g`` (non-separating) or ``k-1`` (separating).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .curve import RealCurve, f_minus_basis
from .errors import CurveMismatch, LengthMismatch, UnknownGenerator
from .f2 import F2Vector

__all__ = [
    "AutClass",
    "generator_names",
    "generator",
    "identity",
    "minus_one",
    "compose",
    "invert",
    "power",
    "ind2",
    "component_signs",
    "is_identity",
    "from_generator_exponents",
]


@dataclass(frozen=True)
class AutClass:
    curve: RealCurve
    sign: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (0, 1):
            raise ValueError(f"sign bit must be 0 or 1, got {self.sign!r}")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) != self.curve.genus:
            raise LengthMismatch(
                f"{self.curve.label()} needs {self.curve.genus} exponents, got {len(self.exponents)}"
            )

    def __mul__(self, other: "AutClass") -> "AutClass":
        return compose(self, other)

    @property
    def f_exponents(self) -> tuple[int, ...]:
        return self.exponents[: _n_f(self.curve)]

    @property
    def g_exponents(self) -> tuple[int, ...]:
        return self.exponents[_n_f(self.curve):]


def _n_f(curve: RealCurve) -> int:
    return curve.genus if not curve.separating else curve.components + curve.m - 1


def _top(curve: RealCurve) -> int:
    return curve.genus if not curve.separating else curve.components - 1


def generator_names(curve: RealCurve) -> list[str]:
    """Names of the generating family, ``f0`` first."""
    names = [f"f{i}" for i in range(_n_f(curve) + 1)]
    if curve.separating:
        k, m = curve.components, curve.m
        names += [f"g{i}" for i in range(k, k + m)]
    return names


def identity(curve: RealCurve) -> AutClass:
    return AutClass(curve, 0, (0,) * curve.genus)


def minus_one(curve: RealCurve) -> AutClass:
    return AutClass(curve, 1, (0,) * curve.genus)


_NAME = re.compile(r"^([fg])(\d+)$")
_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


def generator(curve: RealCurve, name: str) -> AutClass:
    """The class of a named generator, or ``minus_one`` / ``identity``."""
    if name in ("minus_one", "-1"):
        return minus_one(curve)
    if name in ("identity", "1"):
        return identity(curve)
    name = name.translate(_SUBSCRIPTS)
    m_ = _NAME.match(name)
    if m_ is None or name not in generator_names(curve):
        raise UnknownGenerator(f"no generator {name!r} on {curve.label()}; valid: {generator_names(curve)}")
    letter, idx = m_.group(1), int(m_.group(2))
    g = curve.genus
    if letter == "f" and idx == 0:
        exps = [0] * g
        for i in range(1, _top(curve) + 1):
            exps[i - 1] = -1
        return AutClass(curve, 1, tuple(exps))
    if letter == "f":
        pos = idx - 1
    else:
        pos = _n_f(curve) + (idx - curve.components)
    exps = [0] * g
    exps[pos] = 1
    return AutClass(curve, 0, tuple(exps))


def _same(x: AutClass, y: AutClass) -> None:
    if x.curve != y.curve:
        raise CurveMismatch(f"{x.curve.label()} vs {y.curve.label()}")


def compose(x: AutClass, y: AutClass) -> AutClass:
    _same(x, y)
    return AutClass(x.curve, (x.sign + y.sign) % 2, tuple(a + b for a, b in zip(x.exponents, y.exponents)))


def invert(x: AutClass) -> AutClass:
    return AutClass(x.curve, x.sign, tuple(-a for a in x.exponents))


def power(x: AutClass, n: int) -> AutClass:
    return AutClass(x.curve, (x.sign * n) % 2, tuple(a * n for a in x.exponents))


def is_identity(x: AutClass) -> bool:
    return x.sign == 0 and not any(x.exponents)


def ind2(curve: RealCurve, f: AutClass) -> F2Vector:
    """Mod-2 winding numbers of ``f`` as a covector; lies in F^-.

    Each generator's index is the Poincaré dual of the matching F_+ basis
    vector, so this is the exponent vector mod 2 pushed through that basis.
    """
    if f.curve != curve:
        raise CurveMismatch(f"{f.curve.label()} vs {curve.label()}")
    out = F2Vector.zeros(curve.dim)
    for e, phi in zip(f.exponents, f_minus_basis(curve)):
        if e % 2:
            out = out + phi
    return out


def component_signs(curve: RealCurve, f: AutClass) -> F2Vector:
    """Bit i is 1 iff ``f`` is negative on real component i."""
    if f.curve != curve:
        raise CurveMismatch(f"{f.curve.label()} vs {curve.label()}")
    mask = f.sign
    for i in range(1, curve.components):
        if (f.sign + f.exponents[i - 1]) % 2:
            mask |= 1 << i
    return F2Vector(curve.components, mask)


def from_generator_exponents(curve: RealCurve, sign: int, f_exponents: Sequence[int],
                             g_exponents: Sequence[int] = (), f0: int = 0) -> AutClass:
    """Build a class from exponents as written in the external schema."""
    n_f, n_g = _n_f(curve), curve.genus - _n_f(curve)
    if len(f_exponents) != n_f:
        raise LengthMismatch(f"{curve.label()} expects {n_f} f_exponents (f1..f{n_f}), got {len(f_exponents)}")
    if len(g_exponents) != n_g:
        raise LengthMismatch(f"{curve.label()} expects {n_g} g_exponents, got {len(g_exponents)}")
    base = AutClass(curve, sign % 2, tuple(f_exponents) + tuple(g_exponents))
    if f0:
        base = compose(base, power(generator(curve, "f0"), f0))
    return base
