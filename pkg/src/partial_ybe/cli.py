"""Command-line front end: ``partial-ybe <command> ...``.

Exit codes: 0 the property holds or the operation succeeded, 1 it fails or
the result is undefined, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import codec
from .catalog import EXAMPLES, example
from .cycles import (are_isomorphic, decompose, derive_cycle_set, multipermutation_level, retract,
                     verify_cycle_set)
from .errors import MissingWindow, NotSquareFree, PartialYBEError, SchemaError
from .monoid import format_word, parse_word, psi, words_equal
from .reversing import Closed, NoRelation, oplus, reverse
from .solution import SOLUTION_AXIOMS, Axiom, verify
from .thompson import f_normal_form, f_words_equal, format_fword, parse_fword, window_checks


class UsageError(Exception):
    pass


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _solution(args, prefix=""):
    ex = getattr(args, f"{prefix}example")
    path = getattr(args, f"{prefix}file")
    flag = f"--{prefix.replace('_', '-')}"
    if (ex is None) == (path is None):
        raise UsageError(f"exactly one of {flag}example or {flag}file is required")
    return example(ex) if ex is not None else codec.load_file(path)


def _needs_window(S, args):
    if not S.carrier.is_finite and args.window is None:
        raise UsageError("--window is required for countable carriers")


def _fun_json(f):
    return {"domain": repr(f.domain), "support": {str(k): v for k, v in f.support}}


def cmd_verify(args):
    S = _solution(args)
    _needs_window(S, args)
    axioms = SOLUTION_AXIOMS if args.axiom == "all" else (Axiom.parse(args.axiom),)
    reports = [verify(S, a, args.window, args.parallel) for a in axioms]
    lines = []
    for r in reports:
        status = "holds" if r.holds else f"FAILS {r.witness}"
        lines.append(f"{r.axiom.value}: {status} (checked {r.checked}, skipped {r.skipped})")
    _emit(args, [r.to_json() for r in reports], "\n".join(lines))
    return 0 if all(r.holds for r in reports) else 1


def cmd_apply(args):
    S = _solution(args)
    out = S.r(args.x, args.y)
    _emit(args, {"x": args.x, "y": args.y, "r": None if out is None else list(out)},
          f"r({args.x},{args.y}) = " + ("undefined" if out is None else f"({out[0]},{out[1]})"))
    return 0 if out is not None else 1


def cmd_embed(args):
    S = _solution(args)
    e = psi(S, parse_word(args.word))
    _emit(args, {"word": args.word, "pi": _fun_json(e.fun), "sigma": repr(e.bij)},
          f"pi    = {e.fun!r}\nsigma = {e.bij!r}")
    return 0


def cmd_eq(args):
    S = _solution(args)
    _needs_window(S, args)
    same = words_equal(S, parse_word(args.w1), parse_word(args.w2), args.window)
    _emit(args, {"equal": same}, "equal" if same else "distinct")
    return 0 if same else 1


def cmd_oplus(args):
    S = _solution(args)
    _needs_window(S, args)
    err = _precondition(S, None if S.carrier.is_finite else args.window)
    if err:
        raise NotSquareFree(err)
    out = oplus(S, parse_word(args.g), parse_word(args.h), args.max_steps)
    _emit(args, {"sum": None if out is None else format_word(out)},
          "undefined" if out is None else (format_word(out) or "1"))
    return 0 if out is not None else 1


def _precondition(S, window):
    from .solution import satisfies_all
    bad = satisfies_all(S, window)
    return None if bad is None else f"{bad.axiom.value} fails: {bad.witness}"


def cmd_reverse(args):
    S = _solution(args)
    out = reverse(S, parse_word(args.w1), parse_word(args.w2), args.max_steps)
    diagram = out.diagram
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(diagram.to_dot() + "\n")
    if isinstance(out, Closed):
        summary = f"Closed u={format_word(out.u) or '-'} v={format_word(out.v) or '-'}"
        payload = {"outcome": "Closed", "u": format_word(out.u), "v": format_word(out.v)}
        code = 0
    elif isinstance(out, NoRelation):
        summary = str(out)
        payload = {"outcome": "NoRelation", "position": list(out.position),
                   "letters": [str(l) for l in out.letters]}
        code = 1
    else:
        summary = f"StepLimit after {out.steps} steps"
        payload = {"outcome": "StepLimit", "steps": out.steps}
        code = 1
    payload["squares"] = [str(sq) for sq in diagram.squares]
    text = "\n".join([str(sq) for sq in diagram.squares] + [summary])
    _emit(args, payload, text)
    return code


def cmd_cycleset(args):
    S = _solution(args)
    _needs_window(S, args)
    reports = verify_cycle_set(derive_cycle_set(S), args.window)
    _emit(args, [r.to_json() for r in reports],
          "\n".join(f"{r.axiom.value}: {'holds' if r.holds else 'FAILS ' + str(r.witness)}"
                    f" (skipped {r.skipped})" for r in reports))
    return 0 if all(r.holds for r in reports) else 1


def cmd_retract(args):
    res = retract(_solution(args))
    payload = {"classes": list(res.class_of), "quotient": codec.save(res.quotient),
               "verified": res.verified,
               "failure": None if res.failure is None else res.failure.to_json()}
    text = (f"classes: {' '.join(map(str, res.class_of))}\n"
            f"quotient size: {res.quotient.size}\n"
            f"quotient verified: {res.verified}")
    _emit(args, payload, text)
    return 0 if res.verified else 1


def cmd_mpl(args):
    res = multipermutation_level(_solution(args), args.max_iter)
    _emit(args, {"level": res.level, "reason": res.reason, "sizes": list(res.sizes)},
          f"level: {'none' if res.level is None else res.level} ({res.reason}; sizes "
          f"{' -> '.join(map(str, res.sizes))})")
    return 0 if res.level is not None else 1


def cmd_decompose(args):
    part = decompose(_solution(args), args.limit)
    _emit(args, {"partition": None if part is None else [list(p) for p in part]},
          "indecomposable" if part is None else
          f"{{{', '.join(map(str, part[0]))}}} | {{{', '.join(map(str, part[1]))}}}")
    return 0 if part is not None else 1


def cmd_iso(args):
    alpha = are_isomorphic(_solution(args), _solution(args, "other_"), args.limit)
    _emit(args, {"bijection": None if alpha is None else list(alpha)},
          "not isomorphic" if alpha is None else
          " ".join(f"{x}->{y}" for x, y in enumerate(alpha)))
    return 0 if alpha is not None else 1


def cmd_thompson_nf(args):
    nf = f_normal_form(parse_fword(args.word))
    _emit(args, {"normal_form": str(nf), "pos": list(nf.pos), "neg": list(nf.neg)},
          str(nf) or "1")
    return 0


def cmd_thompson_eq(args):
    same = f_words_equal(parse_fword(args.w1), parse_fword(args.w2))
    _emit(args, {"equal": same}, "equal" if same else "distinct")
    return 0 if same else 1


def cmd_thompson_check(args):
    if args.window < 3:
        raise UsageError("--window must be at least 3")
    rep = window_checks(args.window)
    d = rep.to_json()
    text = "\n".join([f"relations: {rep.relation_count}"] + [f"  {r}" for r in d["relations"]] + [
        f"undefined pairs: {' '.join(f'({a},{b})' for a, b in rep.undefined_pairs)}",
        f"irretractable: {rep.irretractable}",
        f"invariant subsets: {rep.invariant_subsets}",
        f"presentation match: {rep.presentation_match}",
        f"sigma inverse closed form: {rep.sigma_inverse_closed_form}",
        f"holds: {rep.holds}"])
    _emit(args, d, text)
    return 0 if rep.holds else 1


def cmd_examples(args):
    rows = []
    for name in sorted(EXAMPLES):
        S = example(name)
        rows.append({"name": name, "size": S.size if S.carrier.is_finite else "countable"})
    _emit(args, rows, "\n".join(f"{r['name']}\t{r['size']}" for r in rows))
    return 0


def _source(p, prefix=""):
    flag = prefix.replace("_", "-")
    p.add_argument(f"--{flag}example", dest=f"{prefix}example", choices=sorted(EXAMPLES),
                   help="built-in solution")
    p.add_argument(f"--{flag}file", dest=f"{prefix}file", help="solution JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partial-ybe",
        description="Partial set-theoretic solutions of the Yang-Baxter equation.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_, source=True, window=False):
        p = sub.add_parser(name, help=help_)
        if source:
            _source(p)
        if window:
            p.add_argument("--window", type=int, help="index bound for countable carriers")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "check the solution axioms", window=True)
    p.add_argument("--axiom", default="all",
                   help="all, NonDegenerate, Involutive, Braided or SquareFree")
    p.add_argument("--parallel", action="store_true", help="split the check across processes")
    p = add("apply", cmd_apply, "evaluate r(x, y)")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p = add("embed", cmd_embed, "compute psi(w) = (pi(w), sigma_w)")
    p.add_argument("word", help="e.g. \"0 2 1'\"")
    p = add("eq", cmd_eq, "compare two words by their psi images", window=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p = add("oplus", cmd_oplus, "partial-brace sum g + h via right reversing", window=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--max-steps", type=int)
    p = add("reverse", cmd_reverse, "right-reverse a pair of words")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--dot", help="write the diagram as a DOT graph to this path")
    add("cycleset", cmd_cycleset, "verify the derived cycle set", window=True)
    add("retract", cmd_retract, "retraction by equality of sigma maps")
    p = add("mpl", cmd_mpl, "multipermutation level")
    p.add_argument("--max-iter", type=int, default=32)
    p = add("decompose", cmd_decompose, "split into two invariant subsets")
    p.add_argument("--limit", type=int, default=12)
    p = add("iso", cmd_iso, "search for an isomorphism between two solutions")
    _source(p, "other_")
    p.add_argument("--limit", type=int, default=8)
    p = add("thompson-nf", cmd_thompson_nf, "normal form in Thompson's group F", source=False)
    p.add_argument("word", help='e.g. "0 1 0^-1"')
    p = add("thompson-eq", cmd_thompson_eq, "word problem in F", source=False)
    p.add_argument("w1")
    p.add_argument("w2")
    p = add("thompson-check", cmd_thompson_check, "window checks of the Thompson solution",
            source=False)
    p.add_argument("--window", type=int, default=5)
    add("examples", cmd_examples, "list built-in solutions", source=False)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if hasattr(args, "max_steps") and args.max_steps is not None and args.max_steps < 1:
        print("error: --max-steps must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, SchemaError, MissingWindow, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except (NotSquareFree, PartialYBEError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
