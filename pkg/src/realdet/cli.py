"""Command-line front end: one JSON document in, one JSON document out.

Exit status is 0 on success, 1 when ``verify`` finds a failing check and
2 when the input is rejected.  Rejections print
``{"error": {"type", "invariant", "message"}}`` on stdout and a one-line
diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .curve import admissible_w1
from .errors import RealDetError, SchemaError
from .jsonio import (
    bundle_to_json,
    form_to_json,
    parse_automorphism,
    parse_bundle,
    parse_curve,
    parse_form,
    parse_full_automorphism,
    parse_sl,
    parse_w,
)
from .oracle import DEFAULT_BOUND, verify_all, verify_curve_suite
from .signs import (
    det_orientation_sign,
    eps_pin,
    loop_orientability,
    picard_w1,
    s_n,
    s_top,
)
from .spin import act, arf, arf_delta, bordism_class, enumerate_real_spin

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INVALID = 0, 1, 2


def _require(doc: dict, key: str) -> Any:
    if key not in doc:
        raise SchemaError(f"input is missing {key!r}")
    return doc[key]


def cmd_detsign(doc: dict) -> dict:
    curve = parse_curve(_require(doc, "curve"))
    bundle = parse_bundle(curve, _require(doc, "bundle"))
    f = parse_full_automorphism(bundle, _require(doc, "automorphism"))
    det_bundle = bundle.det_bundle()
    w = bundle.w1
    delta = None
    if w.weight() % 2 == (curve.genus + 1) % 2:
        delta = arf_delta(curve, f.det_part, w)
    return {
        "sign": det_orientation_sign(bundle, f),
        "s_top": s_top(curve, f.det_part),
        "s_N": s_n(det_bundle, f.det_part),
        "eps_pin": 1 if f.sl_part is None else eps_pin(bundle, f.sl_part),
        "arf_delta": delta,
    }


def cmd_spin_enumerate(doc: dict) -> dict:
    curve = parse_curve(_require(doc, "curve"))
    if "w1" in doc:
        ws = [parse_w(curve, doc["w1"])]
    else:
        ws = admissible_w1(curve)
    forms = []
    for w in ws:
        for q in enumerate_real_spin(curve, w):
            forms.append({**form_to_json(q), "arf": arf(curve, q), "w1": w.to_list()})
    return {"count": len(forms), "forms": forms}


def cmd_spin_act(doc: dict) -> dict:
    curve = parse_curve(_require(doc, "curve"))
    q = parse_form(curve, _require(doc, "form"))
    f = parse_automorphism(curve, _require(doc, "automorphism"))
    return {"form": form_to_json(act(curve, f, q))}


def cmd_spin_bordism(doc: dict) -> dict:
    curve = parse_curve(_require(doc, "curve"))
    q = parse_form(curve, _require(doc, "form"))
    b = bordism_class(curve, q)
    return {"w1": b.w1.to_list(), "arf": b.arf}


def cmd_picard(doc: dict) -> dict:
    curve = parse_curve(_require(doc, "curve"))
    d = _require(doc, "d")
    if isinstance(d, bool) or not isinstance(d, int):
        raise SchemaError(f"d must be an integer, got {d!r}")
    w = parse_w(curve, _require(doc, "w1"))
    p = doc.get("basepoint")
    if p is not None and (isinstance(p, bool) or not isinstance(p, int)):
        raise SchemaError(f"basepoint must be a component index, got {p!r}")
    res = picard_w1(curve, d, w, p)
    out = {
        "applies": res.applies,
        "w_used": res.w_used.to_list(),
        "functional_on_Fminus": list(res.functional_on_Fminus),
        "orientable": res.orientable,
    }
    if "monodromy" in doc:
        mu = parse_automorphism(curve, doc["monodromy"])
        out["value"] = res.evaluate(mu)
    return out


def cmd_loop(doc: dict) -> dict:
    curve = parse_curve(_require(doc, "curve"))
    bundle = parse_bundle(curve, _require(doc, "bundle"))
    clutching = parse_sl(curve, _require(doc, "clutching"))
    return {
        "orientable": loop_orientability(bundle, clutching),
        "eps_pin": eps_pin(bundle, clutching),
        "bundle": bundle_to_json(bundle),
    }


def cmd_verify(doc: dict | None, seed: int, max_genus: int) -> tuple[dict, int]:
    if max_genus > DEFAULT_BOUND:
        raise SchemaError(f"--max-genus is capped at {DEFAULT_BOUND}", "genus_bound")
    if doc and "curve" in doc:
        report = verify_curve_suite(parse_curve(doc["curve"]), seed)
    else:
        report = verify_all(max_genus, seed)
    return report.to_json(), (EXIT_OK if report.passed else EXIT_VERIFY_FAILED)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="JSON problem file (default: standard input)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="realdet",
        description="Orientation signs of real determinant lines over real curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("detsign", parents=[common], help="sign of an automorphism on the determinant line")
    spin = sub.add_parser("spin", help="real Spin structures")
    spin_sub = spin.add_subparsers(dest="spin_command", required=True)
    for name in ("enumerate", "act", "bordism"):
        spin_sub.add_parser(name, parents=[common])
    sub.add_parser("picard", parents=[common], help="w1 of the determinant over a real Picard component")
    sub.add_parser("loop", parents=[common], help="orientability over a loop of operators")
    verify = sub.add_parser("verify", parents=[common], help="run the brute-force verification suite")
    verify.add_argument("--max-genus", type=int, default=3)
    return parser


def _read_input(path: str | None, optional: bool = False) -> dict | None:
    if path is None:
        if optional and sys.stdin.isatty():
            return None
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    if optional and not text.strip():
        return None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input is not valid JSON: {exc}", "json") from exc
    if not isinstance(doc, dict):
        raise SchemaError("input must be a JSON object")
    return doc


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


_HANDLERS = {
    "detsign": cmd_detsign,
    "picard": cmd_picard,
    "loop": cmd_loop,
    ("spin", "enumerate"): cmd_spin_enumerate,
    ("spin", "act"): cmd_spin_act,
    ("spin", "bordism"): cmd_spin_bordism,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            out, code = cmd_verify(_read_input(args.input, optional=True), args.seed, args.max_genus)
            _emit(out)
            return code
        key = ("spin", args.spin_command) if args.command == "spin" else args.command
        _emit(_HANDLERS[key](_read_input(args.input)))
        return EXIT_OK
    except (RealDetError, OSError) as exc:
        invariant = getattr(exc, "invariant", "io")
        _emit({"error": {"type": type(exc).__name__, "invariant": invariant, "message": str(exc)}})
        print(f"realdet: {invariant}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
