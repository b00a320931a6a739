"""``vbk`` command line.

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rings
from .hopf import (
    FUNCTIONALS,
    HopfError,
    check_hopf_axioms,
    check_quasitriangular,
    check_ribbon,
    check_right_integral,
    evaluate_trace,
    load_hopf,
)
from .matrix import DimensionError, ExactMatrix
from .presentations import FORBIDDEN, NAMES, PresentationError, forbidden_relators, relators
from .representations import (
    HeckeRep,
    RepresentationError,
    VirtualRep,
    load_hecke,
    load_rho,
    verify_relators,
)
from .rewrite import certify_equal, slide_normalize, to_classical, to_stringy
from .ribbon import evaluate_tangle, load_ribbon
from .tangle import TangleError, concentrate, format_traces, load_tangle, parse_tangle, rotation_numbers
from .words import WordError, format_word, free_reduce, parse_word, permutation_of
from .ybe import algebraic_to_braided, check_aybe, check_braided_ybe, check_hecke_quadratic


class UsageError(Exception):
    pass


def _emit(args, text: str, obj: dict) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(text)


def _word(args):
    return parse_word(args.word, args.n)


def _word_json(w) -> dict:
    return {"format": 1, "n": w.n, "word": format_word(w)}


def _matrix_text(m: ExactMatrix) -> str:
    if m.shape == (1, 1):
        return rings.fmt(m[0, 0], m.ring)
    return m.format()


# -- word commands -------------------------------------------------------------


def cmd_parse(args) -> int:
    w = _word(args)
    _emit(args, format_word(w), _word_json(w))
    return 0


def cmd_reduce(args) -> int:
    w = free_reduce(_word(args))
    _emit(args, format_word(w), _word_json(w))
    return 0


def cmd_perm(args) -> int:
    p = permutation_of(_word(args))
    _emit(args, str(p), {"format": 1, "n": p.n, "image": list(p.image)})
    return 0


def cmd_to_stringy(args) -> int:
    w = to_stringy(_word(args))
    _emit(args, format_word(w), _word_json(w))
    return 0


def cmd_to_classical(args) -> int:
    w = to_classical(_word(args))
    _emit(args, format_word(w), _word_json(w))
    return 0


def cmd_decompose(args) -> int:
    pure, tail = slide_normalize(_word(args))
    _emit(args, f"pure: {format_word(pure)}\ntail: {tail}",
          {"format": 1, "n": pure.n, "pure": format_word(pure), "tail": list(tail.image)})
    return 0


def cmd_equal(args) -> int:
    w1, w2 = parse_word(args.left, args.n), parse_word(args.right, args.n)
    reps = []
    if args.rho:
        rho, d = load_rho(args.rho)
        reps.append(VirtualRep(rho, d, args.n, validate=False))
    verdict = certify_equal(w1, w2, reps)
    _emit(args, verdict.value, {"format": 1, "verdict": verdict.value})
    return 0


# -- presentations and representations --------------------------------------------


def _presentation(args):
    if args.name.startswith("forbidden_"):
        return forbidden_relators(args.name.removeprefix("forbidden_"), args.n)
    return relators(args.name, args.n, dedup=not args.no_dedup)


def cmd_relators(args) -> int:
    pres = _presentation(args)
    lines = [f"{r.label}: {format_word(r.word) or '(empty)'}" for r in pres.relators]
    _emit(args, "\n".join(lines), pres.to_json())
    return 0


def cmd_verify(args) -> int:
    pres = _presentation(args)
    if args.hecke:
        h = load_hecke(args.hecke)
        rep = HeckeRep(h.r, h.z, h.d, args.n, validate=False)
    else:
        rho, d = load_rho(args.rho)
        rep = VirtualRep(rho, d, args.n, validate=False)
    report = verify_relators(pres, rep)
    text = report.summary()
    if report.failures and not report.expect_fail:
        text += "\nfailed: " + ", ".join(report.failures)
    _emit(args, text, report.to_json())
    return 0 if report.ok else 1


def _pass(flag: bool) -> str:
    return "pass" if flag else "fail"


def cmd_ybe_check(args) -> int:
    rho, d = load_rho(args.rho, validate=False)
    aybe = check_aybe(rho, d)
    braided = check_braided_ybe(algebraic_to_braided(rho, d), d)
    text = f"algebraic Yang-Baxter: {_pass(aybe)}\nbraided Yang-Baxter of rho P: {_pass(braided)}"
    _emit(args, text, {"format": 1, "aybe": aybe, "braided": braided})
    return 0 if aybe and braided else 1


def cmd_hecke_check(args) -> int:
    h = load_hecke(args.hecke, validate=False)
    braided = check_braided_ybe(h.r, h.d)
    quad = check_hecke_quadratic(h.r, h.z)
    text = (f"braided Yang-Baxter: {_pass(braided)}\n"
            f"R^2 = zR + I with z = {rings.fmt(h.z, h.r.ring)}: {_pass(quad)}")
    _emit(args, text, {"format": 1, "braided": braided, "quadratic": quad,
                       "z": rings.to_json(h.z, h.r.ring)})
    return 0 if braided and quad else 1


def cmd_rep_eval(args) -> int:
    w = _word(args)
    if args.hecke:
        h = load_hecke(args.hecke)
        m = HeckeRep(h.r, h.z, h.d, w.n, validate=False).evaluate(w)
    else:
        rho, d = load_rho(args.rho)
        m = VirtualRep(rho, d, w.n, validate=False).evaluate(w)
    _emit(args, m.format(), m.to_json())
    return 0


# -- tangles and Hopf algebras -------------------------------------------------------


def _tangle(args):
    if args.diagram is not None:
        return parse_tangle(args.diagram)
    if args.tangle is None:
        raise UsageError("give --tangle FILE or --diagram TEXT")
    return load_tangle(args.tangle)


def cmd_tangle_eval(args) -> int:
    d = _tangle(args)
    data = load_ribbon(args.data)
    m = evaluate_tangle(d, data)
    _emit(args, _matrix_text(m), {"format": 1, "diagram": str(d), "data": data.name, "value": m.to_json()})
    return 0


def cmd_trace_word(args) -> int:
    d = _tangle(args)
    words = concentrate(d)
    text = format_traces(words, ascii_only=args.ascii)
    obj = {"format": 1, "diagram": str(d), "rotation_numbers": rotation_numbers(d),
           "trace": format_traces(words, ascii_only=args.ascii), "components": [w.to_json() for w in words]}
    if args.hopf:
        h = load_hopf(args.hopf)
        value = evaluate_trace(words, h, args.functional)
        text += f"\nvalue ({h.name}, {args.functional}): {rings.fmt(value, 'rat')}"
        obj["value"] = rings.to_json(value, "rat")
    _emit(args, text, obj)
    return 0


_HOPF_CHECKS = {
    "hopf": check_hopf_axioms,
    "quasitriangular": check_quasitriangular,
    "ribbon": check_ribbon,
    "integral": check_right_integral,
}


def cmd_hopf_check(args) -> int:
    h = load_hopf(args.hopf)
    names = args.checks.split(",") if args.checks else None
    if names is None:
        names = ["hopf"]
        names += ["quasitriangular"] if h.rho is not None else []
        names += ["ribbon"] if h.G is not None else []
        names += ["integral"] if h.integral is not None else []
    lines, reports = [], []
    for name in names:
        if name not in _HOPF_CHECKS:
            raise UsageError(f"unknown check {name!r}; expected some of {sorted(_HOPF_CHECKS)}")
        rep = _HOPF_CHECKS[name](h)
        reports.append(rep)
        for axiom, ok in rep.results.items():
            lines.append(f"{rep.title}: {axiom}: {_pass(ok)}")
    _emit(args, "\n".join(lines), {"format": 1, "name": h.name, "reports": [r.to_json() for r in reports]})
    return 0 if all(r.ok for r in reports) else 1


def cmd_selftest(args) -> int:
    from .selftest import run_selftest
    results = run_selftest(args.seed, args.count)
    lines = [f"{name}: {_pass(ok)}" for name, ok in results.items()]
    _emit(args, "\n".join(lines), {"format": 1, "seed": args.seed, "count": args.count, "results": results})
    return 0 if all(results.values()) else 1


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="vbk", description="Virtual braids, connecting strings and "
                                     "Yang-Baxter representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def word_args(p):
        p.add_argument("-n", type=int, required=True, help="number of strands")
        p.add_argument("-w", "--word", required=True, help='e.g. "s1 v2 M1,3"')

    for name, func, help_text in (
        ("parse", cmd_parse, "parse and echo a word"),
        ("reduce", cmd_reduce, "free reduction"),
        ("perm", cmd_perm, "underlying permutation"),
        ("to-stringy", cmd_to_stringy, "rewrite σ in connecting strings"),
        ("to-classical", cmd_to_classical, "rewrite connecting strings in σ and v"),
        ("decompose", cmd_decompose, "pure part and permutation tail"),
    ):
        word_args(add(name, func, help_text))

    p = add("equal", cmd_equal, "certify equality or inequality of two words")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-a", "--left", required=True)
    p.add_argument("-b", "--right", required=True)
    p.add_argument("--rho", help="representation used to separate words")

    names = list(NAMES) + [f"forbidden_{f}" for f in FORBIDDEN]
    p = add("relators", cmd_relators, "list a relator table")
    p.add_argument("--name", required=True, choices=names)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--no-dedup", action="store_true")

    p = add("verify", cmd_verify, "evaluate every relator of a table")
    p.add_argument("--name", required=True, choices=names)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--rho", default="builtin:hecke2")
    p.add_argument("--hecke", help="use the Hecke representation T instead (σ and v tables only)")
    p.add_argument("--no-dedup", action="store_true")

    p = add("ybe-check", cmd_ybe_check, "algebraic and braided Yang-Baxter checks")
    p.add_argument("--rho", default="builtin:hecke2")

    p = add("hecke-check", cmd_hecke_check, "Hecke quadratic and braided Yang-Baxter checks")
    p.add_argument("--hecke", default="builtin:hecke2")

    p = add("rep-eval", cmd_rep_eval, "matrix of a word")
    word_args(p)
    p.add_argument("--rho", default="builtin:hecke2")
    p.add_argument("--hecke", help="evaluate with the Hecke representation T")

    def tangle_args(p):
        p.add_argument("--tangle", help="diagram file or builtin:NAME")
        p.add_argument("--diagram", help='inline diagram, e.g. "u / n"')

    p = add("tangle-eval", cmd_tangle_eval, "matrix or scalar of a tangle diagram")
    tangle_args(p)
    p.add_argument("--data", default="builtin:bracket")

    p = add("trace-word", cmd_trace_word, "concentrate a closed diagram into formal traces")
    tangle_args(p)
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--hopf", help="also evaluate with this Hopf algebra")
    p.add_argument("--functional", choices=FUNCTIONALS, default="regular")

    p = add("hopf-check", cmd_hopf_check, "Hopf algebra axiom checks")
    p.add_argument("--hopf", required=True)
    p.add_argument("--checks", help="comma list of hopf,quasitriangular,ribbon,integral")

    p = add("selftest", cmd_selftest, "seeded random property checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    return parser


_INPUT_ERRORS = (UsageError, WordError, PresentationError, RepresentationError, TangleError, HopfError,
                 DimensionError, rings.RingError, OSError, json.JSONDecodeError, KeyError, ValueError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"vbk {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
