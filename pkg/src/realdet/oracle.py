"""Brute-force checks that do not route through the formula layer.

Forms are evaluated from a Gray-code table built straight from the
polarization identity, realness is tested on every vector, and the basis
changes are random products of symplectic transvections.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .autgroup import (
    AutClass,
    compose,
    component_signs,
    generator,
    generator_names,
    ind2,
    minus_one,
)
from .curve import (
    RealCurve,
    admissible_w1,
    c_star_integer,
    c_star_mod2,
    f_minus_basis,
    f_plus_basis,
    real_component_class,
    valid_topologies,
)
from .errors import BoundExceeded, InvalidTopology
from .f2 import F2Matrix, F2Vector, gf2_rank, symplectic_pairing
from .signs import (
    FullAutClass,
    RealBundle,
    SLClass,
    beta0,
    det_orientation_sign,
    minus_id_sign,
    s_top,
)
from .spin import QuadraticForm, arf, arf_delta, enumerate_real_spin

__all__ = [
    "DEFAULT_BOUND",
    "Check",
    "VerificationReport",
    "enumerate_all_quadratic_forms",
    "form_table",
    "brute_arf",
    "brute_real_forms",
    "random_symplectic",
    "is_symplectic",
    "verify_curve_suite",
    "verify_topology",
    "verify_all",
]

DEFAULT_BOUND = 6


@dataclass
class Check:
    name: str
    topology: dict
    passed: bool
    counterexample: dict | None = None
    skipped: bool = False

    def to_json(self) -> dict:
        out = {"name": self.name, "topology": self.topology, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.skipped:
            out["skipped"] = True
        return out


@dataclass
class VerificationReport:
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> dict:
        checks = sorted(self.checks, key=lambda c: (c.name, sorted(c.topology.items())))
        return {
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_json() for c in checks],
        }


def enumerate_all_quadratic_forms(g: int, bound: int = DEFAULT_BOUND) -> Iterator[QuadraticForm]:
    """Every refinement in genus g, lexicographic in (q(a_1), ..., q(b_g))."""
    if g > bound:
        raise BoundExceeded(f"exhaustive enumeration capped at genus {bound}, asked for {g}")
    n = 2 * g
    for mask in range(1 << n):
        # lexicographic on the tuple means coordinate 0 is the most significant
        bits = 0
        for j in range(n):
            if (mask >> (n - 1 - j)) & 1:
                bits |= 1 << j
        yield QuadraticForm(F2Vector(n, bits))


def form_table(g: int, q: QuadraticForm) -> list[int]:
    """Values of q on all 2^{2g} classes, indexed by bit mask.

    Built along a Gray code: adding basis vector j to y changes q by
    q(e_j) + e_j.y, and e_j.y is the bit of y at the partner index.
    """
    n = 2 * g
    qv = q.basis_values.bits
    t = [0] * (1 << n)
    y = 0
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        partner = j + g if j < g else j - g
        t[y ^ (1 << j)] = t[y] ^ ((qv >> j) & 1) ^ ((y >> partner) & 1)
        y ^= 1 << j
    return t


def brute_arf(g: int, table: list[int]) -> int:
    """Majority value of the form: 0 when q vanishes on 2^{g-1}(2^g+1) classes."""
    if g == 0:
        return 0
    zeros = table.count(0)
    return 0 if zeros > (1 << (2 * g - 1)) else 1


def _c_image_table(curve: RealCurve) -> list[int]:
    cols = [c.bits for c in c_star_mod2(curve).columns()]
    n = curve.dim
    img = [0] * (1 << n)
    for x in range(1, 1 << n):
        j = (x & -x).bit_length() - 1
        img[x] = img[x & (x - 1)] ^ cols[j]
    return img


def brute_real_forms(curve: RealCurve) -> list[QuadraticForm]:
    """All forms with q(c x) = q(x) on every class, by exhaustion."""
    img = _c_image_table(curve)
    out = []
    for q in enumerate_all_quadratic_forms(curve.genus):
        t = form_table(curve.genus, q)
        if all(t[img[x]] == t[x] for x in range(len(t))):
            out.append(q)
    return out


def is_symplectic(g: int, M: F2Matrix) -> bool:
    n = 2 * g
    cols = M.columns()
    for i in range(n):
        for j in range(i + 1, n):
            want = symplectic_pairing(g, F2Vector.unit(n, i), F2Vector.unit(n, j))
            if symplectic_pairing(g, cols[i], cols[j]) != want:
                return False
    return gf2_rank(M) == n


def random_symplectic(g: int, seed: int, n_transvections: int | None = None) -> F2Matrix:
    """Product of random transvections T_v(x) = x + (v.x) v."""
    rng = random.Random(seed)
    n = 2 * g
    if n_transvections is None:
        n_transvections = 4 * n + 4
    cols = [F2Vector.unit(n, j) for j in range(n)]
    for _ in range(n_transvections):
        if n == 0:
            break
        v = F2Vector(n, rng.randrange(1, 1 << n))
        cols = [c + v if symplectic_pairing(g, v, c) else c for c in cols]
    return F2Matrix.from_columns(cols, n)


def _arf_in_basis(g: int, q: QuadraticForm, M: F2Matrix) -> int:
    # new basis vectors are the columns of M; evaluate q on each via the table
    t = form_table(g, q)
    vals = [t[c.bits] for c in M.columns()]
    return sum(vals[i] * vals[g + i] for i in range(g)) % 2


def _random_class(curve: RealCurve, rng: random.Random, spread: int = 3) -> AutClass:
    return AutClass(
        curve,
        rng.randrange(2),
        tuple(rng.randint(-spread, spread) for _ in range(curve.genus)),
    )


def _aut_json(f: AutClass) -> dict:
    return {"sign": f.sign, "exponents": list(f.exponents)}


def _form_json(q: QuadraticForm) -> dict:
    return {"q_a": q.q_a, "q_b": q.q_b}


class _Suite:
    def __init__(self, curve: RealCurve, seed: int):
        self.curve = curve
        self.rng = random.Random(seed)
        self.report = VerificationReport(seed)
        self.topo = curve.to_json()

    def record(self, name: str, counterexample: dict | None) -> None:
        if counterexample is not None:
            counterexample = {"curve": self.topo, **counterexample}
        self.report.checks.append(Check(name, self.topo, counterexample is None, counterexample))

    def run(self, name, fn) -> None:
        try:
            self.record(name, fn())
        except Exception as exc:  # a crash is a failed check, not an abort
            self.record(name, {"exception": f"{type(exc).__name__}: {exc}"})


def verify_curve_suite(curve: RealCurve, seed: int = 0, arf_trials: int = 100,
                       random_pairs: int = 200, bound: int = DEFAULT_BOUND) -> VerificationReport:
    """Run every brute-force check on one topology; failures are reported, not raised."""
    if curve.genus > bound:
        raise BoundExceeded(f"verification capped at genus {bound}, asked for {curve.genus}")
    s = _Suite(curve, seed)
    g, k, n = curve.genus, curve.components, curve.dim
    C = c_star_integer(curve)

    def involution():
        for i in range(n):
            for j in range(n):
                v = sum(C[i][l] * C[l][j] for l in range(n))
                if v != (1 if i == j else 0):
                    return {"entry": [i, j], "value": v}
        cm = c_star_mod2(curve)
        for i in range(n):
            for j in range(n):
                x, y = F2Vector.unit(n, i), F2Vector.unit(n, j)
                if symplectic_pairing(g, cm @ x, cm @ y) != symplectic_pairing(g, x, y):
                    return {"pair": [i, j]}
        return None

    def fix_dimension():
        cm = c_star_mod2(curve)
        img = _c_image_table(curve)
        fixed = sum(1 for x in range(1 << n) if img[x] == x)
        dim = fixed.bit_length() - 1
        if dim != g + k - 1:
            return {"fix_dimension": dim, "expected": g + k - 1}
        for i in range(k):
            rc = real_component_class(curve, i)
            if cm @ rc != rc:
                return {"component": i, "class": rc.to_list()}
        fp, fm = f_plus_basis(curve), f_minus_basis(curve)
        if gf2_rank(F2Matrix.from_rows(fp, n) if fp else F2Matrix.zero(0, n)) != g:
            return {"f_plus_rank": "deficient"}
        for x in fp:
            for y in fp:
                if symplectic_pairing(g, x, y):
                    return {"f_plus_not_isotropic": [x.to_list(), y.to_list()]}
            for phi in fm:
                if phi.dot(x):
                    return {"f_minus_nonzero_on": x.to_list(), "phi": phi.to_list()}
        return None

    brute = brute_real_forms(curve)
    brute_w = {}

    def partition():
        img_rc = [real_component_class(curve, i).bits for i in range(k)]
        for q in brute:
            t = form_table(g, q)
            w = tuple(1 ^ t[b] for b in img_rc)
            brute_w.setdefault(w, []).append(q)
        if len(brute) != 1 << (g + k - 1):
            return {"total": len(brute), "expected": 1 << (g + k - 1)}
        for w in admissible_w1(curve):
            fast = enumerate_real_spin(curve, w)
            want = sorted(brute_w.get(tuple(w), []), key=QuadraticForm.sort_key)
            if fast != want:
                return {"w1": w.to_list(), "formula": len(fast), "brute": len(want)}
            if len(fast) != 1 << g:
                return {"w1": w.to_list(), "count": len(fast)}
        if sorted(brute_w) != sorted(tuple(w) for w in admissible_w1(curve)):
            return {"w_classes": [list(w) for w in sorted(brute_w)]}
        return None

    def lemma_tr():
        checks = []
        if curve.separating:
            m = curve.m
            for i in range(k, k + m):
                checks.append((curve.a(i) + curve.a(i + m), 0))
                checks.append((curve.b(i) + curve.b(i + m), 0))
        else:
            for i in range(k, g + 1):
                checks.append((curve.a(i), 1))
        for q in brute:
            t = form_table(g, q)
            for x, want in checks:
                if t[x.bits] != want:
                    return {"form": _form_json(q), "class": x.to_list(), "value": t[x.bits]}
        return None

    def arf_formula():
        for q in enumerate_all_quadratic_forms(g):
            if arf(curve, q) != brute_arf(g, form_table(g, q)):
                return {"form": _form_json(q)}
        return None

    gens = [generator(curve, name) for name in generator_names(curve)]

    def arf_delta_independence():
        for w in admissible_w1(curve):
            orbit = enumerate_real_spin(curve, w)
            for f in gens + [minus_one(curve)]:
                want = arf_delta(curve, f, w)
                for q in orbit:
                    moved = QuadraticForm(q.basis_values + ind2(curve, f))
                    got = arf(curve, moved) ^ arf(curve, q)
                    if got != want:
                        return {"w1": w.to_list(), "automorphism": _aut_json(f), "form": _form_json(q)}
        for _ in range(random_pairs):
            x, y = _random_class(curve, s.rng), _random_class(curve, s.rng)
            w = s.rng.choice(admissible_w1(curve))
            lhs = arf_delta(curve, compose(x, y), w)
            if lhs != arf_delta(curve, x, w) ^ arf_delta(curve, y, w):
                return {"w1": w.to_list(), "x": _aut_json(x), "y": _aut_json(y)}
        return None

    def affine_constancy():
        for f in gens + [minus_one(curve)]:
            vals = {beta0(curve, f, w) ^ arf_delta(curve, f, w) for w in admissible_w1(curve)}
            if len(vals) != 1:
                return {"automorphism": _aut_json(f)}
        return None

    def s_top_table():
        for name, f in zip(generator_names(curve), gens):
            idx = int(name[1:])
            if name[0] == "f" and (idx <= k - 1 or curve.separating):
                want = 0
            elif name[0] == "f":
                want = 1
            else:
                want = 0
            if s_top(curve, f) != want:
                return {"generator": name, "s_top": s_top(curve, f), "expected": want}
        want = 0 if curve.separating else (g - k + 1) % 2
        got = s_top(curve, minus_one(curve))
        if got != want:
            return {"generator": "minus_one", "s_top": got, "expected": want}
        return None

    def bundles(ranks=(1, 2, 3), degrees=range(-3, 4)):
        for r in ranks:
            for d in degrees:
                for w in admissible_w1(curve, d):
                    yield RealBundle(curve, r, d, w)

    def _full(f: AutClass, r: int) -> FullAutClass:
        if r == 1:
            return FullAutClass(f)
        return FullAutClass(f, SLClass(tuple(s.rng.randint(-3, 3) for _ in range(k))))

    def homomorphism():
        all_b = list(bundles())
        for _ in range(random_pairs):
            b = s.rng.choice(all_b)
            x = _full(_random_class(curve, s.rng), b.rank)
            y = _full(_random_class(curve, s.rng), b.rank)
            if det_orientation_sign(b, x * y) != det_orientation_sign(b, x) * det_orientation_sign(b, y):
                return {"bundle": {"rank": b.rank, "degree": b.degree, "w1": b.w1.to_list()},
                        "x": _aut_json(x.det_part), "y": _aut_json(y.det_part)}
        return None

    def minus_id():
        for d in range(-6, 7):
            for w in admissible_w1(curve, d):
                b = RealBundle(curve, 1, d, w)
                if det_orientation_sign(b, minus_one(curve)) != minus_id_sign(b):
                    return {"bundle": {"rank": 1, "degree": d, "w1": w.to_list()}}
        return None

    def degree_route():
        # deg = g+1 mod 2: sign must be (-1)^{arf shift}
        for d in range(-5, 6):
            if (d - g - 1) % 2:
                continue
            for w in admissible_w1(curve, d):
                b = RealBundle(curve, 1, d, w)
                for f in gens + [minus_one(curve)] + [_random_class(curve, s.rng) for _ in range(5)]:
                    want = -1 if arf_delta(curve, f, w) else 1
                    if det_orientation_sign(b, f) != want:
                        return {"bundle": {"rank": 1, "degree": d, "w1": w.to_list()}, "automorphism": _aut_json(f)}
        return None

    def arf_symplectic():
        if g == 0:
            return None
        forms = list(enumerate_all_quadratic_forms(g)) if g <= 2 else [
            QuadraticForm(F2Vector(n, s.rng.randrange(1 << n))) for _ in range(16)
        ]
        for q in forms:
            base = arf(curve, q)
            for _ in range(arf_trials):
                M = random_symplectic(g, s.rng.randrange(1 << 30))
                if not is_symplectic(g, M):
                    return {"not_symplectic": M.to_lists()}
                if _arf_in_basis(g, q, M) != base:
                    return {"form": _form_json(q), "matrix": M.to_lists()}
        return None

    def epsf():
        for f in gens + [_random_class(curve, s.rng) for _ in range(20)]:
            cs = component_signs(curve, f)
            phi = ind2(curve, f)
            for i in range(1, k):
                if cs[i] ^ cs[0] != phi.dot(curve.b(i)):
                    return {"automorphism": _aut_json(f), "component": i}
        return None

    s.run("c_star_involution", involution)
    s.run("fix_dimension", fix_dimension)
    s.run("real_spin_partition", partition)
    s.run("invariant_class_values", lemma_tr)
    s.run("arf_majority", arf_formula)
    s.run("arf_delta_independence", arf_delta_independence)
    s.run("s_top_constancy", affine_constancy)
    s.run("s_top_generator_table", s_top_table)
    s.run("component_sign_vs_index", epsf)
    s.run("sign_homomorphism", homomorphism)
    s.run("minus_id_cross_check", minus_id)
    s.run("degree_route", degree_route)
    s.run("arf_symplectic_invariance", arf_symplectic)
    return s.report


def verify_topology(g: int, k: int, separating: bool, seed: int = 0, **kw) -> VerificationReport:
    """Like ``verify_curve_suite`` but an invalid topology is reported as skipped."""
    topo = {"genus": g, "real_components": k, "separating": separating}
    try:
        curve = RealCurve(g, k, separating)
    except InvalidTopology:
        rep = VerificationReport(seed)
        rep.checks.append(Check("construction", topo, True, None, skipped=True))
        return rep
    return verify_curve_suite(curve, seed, **kw)


def verify_all(max_genus: int, seed: int = 0, **kw) -> VerificationReport:
    report = VerificationReport(seed)
    for i, curve in enumerate(valid_topologies(max_genus)):
        report.extend(verify_curve_suite(curve, seed + i, **kw))
    return report
