"""Command-line interface: JSON in, canonical JSON out.

Exit codes: 0 success, 1 a verification reported failures (or an internal
check tripped), 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Callable

import jsonschema

from .cartan import CartanData, builtin_cartan, cartan_from_json
from .errors import BoundExceeded, InputError, QSchubertError, SchemaError
from .exponents import a_inverse, a_matrix, b_matrix
from .frames import PiElement, frame_bicharacter, identity_pi, xi_enumerate
from .subexpr import lp, rp
from .sweeps import SUITES, verify_suites
from .twist import matrix_correspondence_check, reverse_exponents_agree, twist_indices
from .weyl import bruhat_leq, from_word, is_reduced, length, roots_of_word

FRAME_BUNDLE_BOUND = 12

Handler = Callable[[CartanData | None, dict], tuple[Any, bool]]


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def parse_word(text: str | list | None) -> tuple[int, ...]:
    """``"1,2,1"``, ``"1 2 1"``, ``"[1,2,1]"`` or a list; empty string is the empty word."""
    if text is None:
        return ()
    if isinstance(text, (list, tuple)):
        return tuple(int(x) for x in text)
    text = text.strip().strip("[]")
    if not text or text.lower() == "e":
        return ()
    try:
        return tuple(int(x) for x in re.split(r"[,\s]+", text) if x)
    except ValueError as exc:
        raise SchemaError(f"cannot parse word {text!r}") from exc


def load_cartan(source: str | dict | None) -> CartanData:
    """Cartan data from inline JSON, a JSON file, or shorthand like ``B2``."""
    if source is None:
        raise SchemaError("this command needs --cartan")
    if isinstance(source, dict):
        return cartan_from_json(source)
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", source)
    if m:
        return builtin_cartan(m.group(1), int(m.group(2)))
    if os.path.exists(source):
        with open(source) as fh:
            return cartan_from_json(json.load(fh))
    try:
        return cartan_from_json(json.loads(source))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"--cartan is neither shorthand, a file, nor JSON: {source!r}") from exc


def _need(cartan: CartanData | None) -> CartanData:
    if cartan is None:
        raise SchemaError("this command needs --cartan")
    return cartan


def _elem(cartan: CartanData, params: dict, key: str):
    return from_word(cartan, parse_word(params.get(key)))


def cmd_cartan(cartan, params):
    return _need(cartan).to_json(), True


def cmd_word(cartan, params):
    cartan = _need(cartan)
    word = parse_word(params.get("word"))
    out = {"word": list(word), "reduced": is_reduced(cartan, word),
           "length": length(from_word(cartan, word))}
    if out["reduced"]:
        out["roots"] = [list(b) for b in roots_of_word(cartan, word)]
    return out, True


def cmd_positive_subexpr(cartan, params):
    cartan = _need(cartan)
    word = parse_word(params.get("word"))
    roots_of_word(cartan, word)
    u = _elem(cartan, params, "u")
    side = params.get("side", "right")
    D = rp(cartan, word, u) if side == "right" else lp(cartan, word, u)
    return {"D": sorted(D), "side": side, "word": list(word), "u": list(u.word)}, True


def cmd_bruhat(cartan, params):
    cartan = _need(cartan)
    u, w = _elem(cartan, params, "u"), _elem(cartan, params, "w")
    return {"u": list(u.word), "w": list(w.word), "leq": bruhat_leq(u, w)}, True


def cmd_exponent_matrix(cartan, params):
    cartan = _need(cartan)
    word = parse_word(params.get("word"))
    u = _elem(cartan, params, "u")
    which = params.get("which", "a")
    if which == "b":
        return b_matrix(cartan, word, u).to_json(), True
    out = a_matrix(cartan, word, u).to_json()
    if which == "ainv":
        out["entries"] = a_inverse(cartan, word, u)
        out["columns"] = out["rows"]
    return out, True


def _parse_pi(text, n: int) -> PiElement:
    if text in (None, "", "identity"):
        return identity_pi(n)
    if text == "reversal":
        return PiElement(tuple(range(n, 0, -1)))
    return PiElement(parse_word(text))


def export_frame_bundle(cartan: CartanData, word, u, bound: int = FRAME_BUNDLE_BOUND) -> dict:
    """Toric frame records for every ``pi`` in ``Xi_N``."""
    word = tuple(word)
    if len(word) > bound:
        raise BoundExceeded(f"N = {len(word)} exceeds the full-enumeration bound {bound}; "
                            "pass --pi to export a single frame instead")
    roots_of_word(cartan, word)
    frames = [frame_bicharacter(cartan, word, u, pi).to_json() for pi in xi_enumerate(len(word))]
    return {"word": list(word), "u": list(u.word), "count": len(frames), "frames": frames}


def cmd_frame(cartan, params):
    cartan = _need(cartan)
    word = parse_word(params.get("word"))
    u = _elem(cartan, params, "u")
    if params.get("all"):
        return export_frame_bundle(cartan, word, u, int(params.get("bound", FRAME_BUNDLE_BOUND))), True
    roots_of_word(cartan, word)
    return frame_bicharacter(cartan, word, u, _parse_pi(params.get("pi"), len(word))).to_json(), True


def cmd_xi_enumerate(cartan, params):
    n = int(params.get("n", 0))
    if n < 0:
        raise SchemaError("n must be non-negative")
    perms = [list(p.perm) for p in xi_enumerate(n)]
    return {"n": n, "count": len(perms), "permutations": perms}, True


def cmd_twist_check(cartan, params):
    cartan = _need(cartan)
    word = parse_word(params.get("word"))
    u = _elem(cartan, params, "u")
    corr = twist_indices(cartan, word, u)
    out = corr.to_json()
    out["matrix_correspondence"] = matrix_correspondence_check(cartan, word, u)
    out["reverse_exponents_agree"] = reverse_exponents_agree(cartan, word, u)
    ok = out["consistent"] and out["matrix_correspondence"] and out["reverse_exponents_agree"]
    return out, ok


def cmd_qmatrix(cartan, params):
    from .qmatrix import all_u, build_model, verify_theorem_main, verify_theorem_main2
    model = build_model(int(params.get("m", 2)), int(params.get("n", 2)))
    if params.get("all_u"):
        us = all_u(model)
    else:
        us = [from_word(model.cartan, parse_word(params.get("u")))]
    reports = []
    for u in us:
        for k in range(1, model.N + 1):
            reports.append(verify_theorem_main(model, u, k).to_json())
            reports.append(verify_theorem_main2(model, u, k).to_json())
    ok = all(r["equal"] for r in reports)
    return {"m": model.m, "n": model.n, "word": list(model.word),
            "positions": [list(p) for p in model.positions], "reports": reports,
            "passed": sum(r["equal"] for r in reports), "total": len(reports)}, ok


def cmd_verify(cartan, params):
    suites = params.get("suite") or []
    shape = (int(params.get("m", 2)), int(params.get("n", 2)))
    sample = params.get("sample")
    report = verify_suites(suites, max_length=int(params.get("max_length", 6)),
                           jobs=int(params.get("jobs", 1)), qmatrix_shape=shape,
                           sample=None if sample is None else int(sample),
                           seed=int(params.get("seed", 0)))
    return report, report["failures"] == 0


COMMANDS: dict[str, Handler] = {
    "cartan": cmd_cartan,
    "word": cmd_word,
    "positive-subexpr": cmd_positive_subexpr,
    "bruhat": cmd_bruhat,
    "exponent-matrix": cmd_exponent_matrix,
    "frame": cmd_frame,
    "xi-enumerate": cmd_xi_enumerate,
    "twist-check": cmd_twist_check,
    "qmatrix": cmd_qmatrix,
    "verify": cmd_verify,
}

JOB_SCHEMA = {
    "type": "object",
    "required": ["command"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": sorted(COMMANDS)},
        "cartan": {"anyOf": [{"type": "string"}, {"type": "object"}]},
        "params": {"type": "object"},
        "out": {"type": ["string", "null"]},
    },
}


def run(jobspec: dict) -> tuple[str, int]:
    """Execute one job; returns ``(canonical JSON text, exit code)``."""
    try:
        jsonschema.validate(jobspec, JOB_SCHEMA)
    except jsonschema.ValidationError as exc:
        return canonical_json({"error": "SchemaError", "message": exc.message}), 2
    try:
        source = jobspec.get("cartan")
        cartan = load_cartan(source) if source is not None else None
        payload, ok = COMMANDS[jobspec["command"]](cartan, dict(jobspec.get("params") or {}))
    except QSchubertError as exc:
        return canonical_json({"error": exc.code, "message": str(exc)}), 2 if isinstance(exc, InputError) else 1
    return canonical_json(payload), 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cartan", default=argparse.SUPPRESS,
                        help="Cartan data: shorthand (A3, B2, G2), inline JSON, or a JSON file")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(prog="qschubert", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("cartan", parents=[common], help="print Cartan matrix and symmetrizer")
    p = sub.add_parser("word", parents=[common], help="reducedness, length and roots of a word")
    p.add_argument("--word", required=True)
    p = sub.add_parser("positive-subexpr", parents=[common], help="right/left positive subexpression")
    p.add_argument("--word", required=True)
    p.add_argument("--u", default="")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p = sub.add_parser("bruhat", parents=[common], help="Bruhat comparison u <= w")
    p.add_argument("--u", default="")
    p.add_argument("--w", required=True)
    p = sub.add_parser("exponent-matrix", parents=[common], help="a- or b-exponent matrix")
    p.add_argument("--word", required=True)
    p.add_argument("--u", default="")
    p.add_argument("--which", choices=("a", "b", "ainv"), default="a")
    p = sub.add_parser("frame", parents=[common], help="toric frame for one pi, or all of them")
    p.add_argument("--word", required=True)
    p.add_argument("--u", default="")
    p.add_argument("--pi", default=None, help="one-line permutation, 'identity' or 'reversal'")
    p.add_argument("--all", action="store_true", help="export every pi in Xi_N")
    p.add_argument("--bound", type=int, default=FRAME_BUNDLE_BOUND)
    p = sub.add_parser("xi-enumerate", parents=[common], help="list the permutations with interval prefixes")
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("twist-check", parents=[common], help="twist correspondence checks")
    p.add_argument("--word", required=True)
    p.add_argument("--u", default="")
    p = sub.add_parser("qmatrix", parents=[common], help="quantum-matrix oracle")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--u", default="")
    p.add_argument("--all-u", action="store_true")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", default=None,
                   help=f"repeatable, one of: {', '.join(SUITES)}; none gives an empty report")
    p.add_argument("--max-length", type=int, default=6)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("run", parents=[common], help="execute a JSON job spec")
    p.add_argument("job", help="job spec file, or '-' for stdin")
    return parser


_GLOBAL = {"cartan", "out", "jobs", "command", "action"}


def main(argv: list[str] | None = None) -> int:
    args = vars(_build_parser().parse_args(argv))
    out_path = args.get("out")
    if args["command"] == "run":
        try:
            raw = sys.stdin.read() if args["job"] == "-" else open(args["job"]).read()
            job = json.loads(raw)
        except (OSError, json.JSONDecodeError) as exc:
            text, code = canonical_json({"error": "SchemaError", "message": str(exc)}), 2
        else:
            if isinstance(job, dict) and "cartan" in args and "cartan" not in job:
                job["cartan"] = args["cartan"]
            text, code = run(job)
            out_path = out_path or (job.get("out") if isinstance(job, dict) else None)
    else:
        params = {k: v for k, v in args.items() if k not in _GLOBAL}
        if "jobs" in args:
            params["jobs"] = args["jobs"]
        job = {"command": args["command"], "params": params}
        if "cartan" in args:
            job["cartan"] = args["cartan"]
        text, code = run(job)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
