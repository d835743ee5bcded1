"""Conversion between JSON documents and the domain objects.

Every ``*_to_json`` output parses back to an equal value with the
matching ``parse_*``.
"""

from __future__ import annotations

from typing import Any

from .autgroup import AutClass, from_generator_exponents, generator, _n_f
from .curve import RealCurve, real_w1
from .errors import SchemaError
from .f2 import F2Vector
from .signs import FullAutClass, RealBundle, SLClass
from .spin import QuadraticForm

__all__ = [
    "parse_curve",
    "parse_bundle",
    "parse_automorphism",
    "parse_full_automorphism",
    "parse_form",
    "parse_w",
    "parse_sl",
    "automorphism_to_json",
    "full_automorphism_to_json",
    "form_to_json",
    "bundle_to_json",
]


def _field(doc: dict, key: str, kind=None, default: Any = ...):
    if not isinstance(doc, dict):
        raise SchemaError(f"expected a JSON object, got {type(doc).__name__}")
    if key not in doc:
        if default is ...:
            raise SchemaError(f"missing field {key!r}")
        return default
    v = doc[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise SchemaError(f"field {key!r} must be an integer, got {v!r}")
    if kind is bool and not isinstance(v, bool):
        raise SchemaError(f"field {key!r} must be true or false, got {v!r}")
    if kind is list and not isinstance(v, list):
        raise SchemaError(f"field {key!r} must be a list, got {v!r}")
    return v


def _int_list(values, key: str) -> list[int]:
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise SchemaError(f"entries of {key!r} must be integers, got {v!r}")
    return list(values)


def _bits(values, key: str) -> list[int]:
    values = _int_list(values, key)
    if any(v not in (0, 1) for v in values):
        raise SchemaError(f"entries of {key!r} must be 0 or 1, got {values}")
    return values


def parse_curve(doc: dict) -> RealCurve:
    return RealCurve(
        _field(doc, "genus", int),
        _field(doc, "real_components", int),
        _field(doc, "separating", bool),
    )


def parse_w(curve: RealCurve, values) -> F2Vector:
    if isinstance(values, dict):
        values = _field(values, "w1", list)
    if not isinstance(values, list):
        raise SchemaError(f"w1 must be a list of bits, got {values!r}")
    return real_w1(curve, _bits(values, "w1"))


def parse_bundle(curve: RealCurve, doc: dict) -> RealBundle:
    return RealBundle(
        curve,
        _field(doc, "rank", int, 1),
        _field(doc, "degree", int),
        parse_w(curve, _field(doc, "w1", list)),
    )


def bundle_to_json(bundle: RealBundle) -> dict:
    return {"rank": bundle.rank, "degree": bundle.degree, "w1": bundle.w1.to_list()}


def parse_automorphism(curve: RealCurve, doc: dict) -> AutClass:
    """Either ``{"generator": name}`` or the exponent form; both may not be mixed."""
    if "generator" in doc:
        name = doc["generator"]
        if not isinstance(name, str):
            raise SchemaError(f"generator must be a string, got {name!r}")
        if any(key in doc for key in ("sign", "f_exponents", "g_exponents", "f0")):
            raise SchemaError("give either a generator name or exponents, not both")
        return generator(curve, name)
    sign = _field(doc, "sign", int, 0)
    if sign not in (0, 1):
        raise SchemaError(f"sign must be 0 or 1, got {sign}")
    n_f = _n_f(curve)
    f_exp = _int_list(_field(doc, "f_exponents", list, [0] * n_f), "f_exponents")
    g_exp = _int_list(_field(doc, "g_exponents", list, [0] * (curve.genus - n_f)), "g_exponents")
    return from_generator_exponents(curve, sign, f_exp, g_exp, _field(doc, "f0", int, 0))


def automorphism_to_json(f: AutClass) -> dict:
    out = {"sign": f.sign, "f_exponents": list(f.f_exponents)}
    if f.curve.separating:
        out["g_exponents"] = list(f.g_exponents)
    return out


def parse_sl(curve: RealCurve, values) -> SLClass:
    if not isinstance(values, list):
        raise SchemaError(f"SL class must be a list of integers, got {values!r}")
    sl = SLClass(tuple(_int_list(values, "sl")))
    if len(sl.entries) != curve.components:
        raise SchemaError(f"SL class needs {curve.components} entries, got {len(sl.entries)}", "length_mismatch")
    return sl


def parse_full_automorphism(bundle: RealBundle, doc: dict) -> FullAutClass:
    det_doc = {key: v for key, v in doc.items() if key != "sl"}
    det = parse_automorphism(bundle.curve, det_doc)
    if bundle.rank == 1:
        if "sl" in doc:
            raise SchemaError("a rank-1 bundle takes no \"sl\" part", "rank")
        return FullAutClass(det)
    sl = parse_sl(bundle.curve, doc["sl"]) if "sl" in doc else SLClass.trivial(bundle.curve.components)
    return FullAutClass(det, sl)


def full_automorphism_to_json(f: FullAutClass) -> dict:
    out = automorphism_to_json(f.det_part)
    if f.sl_part is not None:
        out["sl"] = list(f.sl_part.entries)
    return out


def parse_form(curve: RealCurve, doc: dict) -> QuadraticForm:
    q_a = _bits(_field(doc, "q_a", list), "q_a")
    q_b = _bits(_field(doc, "q_b", list), "q_b")
    if len(q_a) != curve.genus or len(q_b) != curve.genus:
        raise SchemaError(
            f"q_a and q_b need {curve.genus} entries each, got {len(q_a)} and {len(q_b)}", "length_mismatch"
        )
    return QuadraticForm.from_ab(q_a, q_b)


def form_to_json(q: QuadraticForm) -> dict:
    return {"q_a": q.q_a, "q_b": q.q_b}
