"""``braidcover`` command line.

Every command prints one run report: JSON by default, aligned ``key: value``
text with ``--format text``. Exit status 2 means bad usage or unparsable
input, 3 a violated mathematical precondition, 4 a failed required check in
a ``verify`` run.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable

from braidcover import __version__
from braidcover.alexander import (
    covering_invariants,
    linking_formula,
    palindromy_summary,
    theorem_dd,
    unknot_evidence,
)
from braidcover.braidword import (
    BraidWord,
    artin_images,
    b_family,
    closure_component_count,
    exponent_sum,
    freely_reduce,
    parse_braid_word,
    phi_psi_words,
    pi1_presentation,
    underlying_permutation,
)
from braidcover.cover import FAMILIES, _rejection, closed_matrix, homology_monodromy, oracle_matrix
from braidcover.errors import BadIndexError, DomainError, InputError
from braidcover.exactmatrix import char_poly, det
from braidcover.laurent import normalize_unit, symmetrize
from braidcover.swcalc import (
    E1,
    covering_fiber_data,
    distinguish,
    e1_family_invariant,
    sw_link_surgery,
    total_sw,
)
from braidcover import verify as sweeps

TOOL = "braidcover"
EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DISCREPANCY = 0, 2, 3, 4


class UsageError(InputError):
    pass


@dataclass
class Outcome:
    results: dict
    discrepancies: list[dict] = field(default_factory=list)
    required_failed: bool = False


# -- argument helpers ---------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _word(args, m_means: str = "strands") -> BraidWord:
    """Braid from ``--word``/``--strands`` or from the family parameters.

    ``m_means`` is ``"strands"`` when ``--m`` counts strands of B(m,k), or
    ``"half"`` when it is half the strand count.
    """
    if args.word is not None:
        _need(args, "strands")
        return parse_braid_word(args.word, args.strands)
    k = args.k if args.k is not None else 0
    if args.n is not None:
        return b_family(args.n, k)
    if args.m is not None:
        return b_family(args.m if m_means == "strands" else 2 * args.m, k)
    raise UsageError("give --word with --strands, or family parameters")


def _half_m(args) -> int:
    """Half strand count from ``--m`` or an even ``--n``."""
    if args.m is not None:
        return args.m
    if args.n is not None:
        if args.n % 2:
            raise BadIndexError(f"an even strand count 2m is required, got {args.n}")
        return args.n // 2
    raise UsageError("missing --m")


def _k(args) -> int:
    return args.k if args.k is not None else 0


# -- braid ------------------------------------------------------------------------


def cmd_braid_parse(args) -> Outcome:
    _need(args, "word", "strands")
    w = parse_braid_word(args.word, args.strands)
    return Outcome({"input": args.word, "word": w.to_json(), "length": len(w)})


def cmd_braid_family(args) -> Outcome:
    _need(args, "m")
    k = _k(args)
    w = b_family(args.m, k)
    phi, psi = phi_psi_words(args.m)
    return Outcome({"m": args.m, "k": k, "word": w.to_json(), "phi": str(phi), "psi": str(psi)})


def cmd_braid_info(args) -> Outcome:
    w = _word(args)
    perm = underlying_permutation(w)
    return Outcome(
        {
            "word": w.to_json(),
            "length": len(w),
            "exponent_sum": exponent_sum(w),
            "freely_reduced": str(freely_reduce(w)),
            "permutation": perm.to_json(),
            "closure_components": closure_component_count(w),
        }
    )


def cmd_braid_artin(args) -> Outcome:
    w = _word(args)
    images = [{"generator": f"mu{i}", "image": img.tokens()} for i, img in enumerate(artin_images(w), start=1)]
    return Outcome({"word": w.to_json(), "images": images, "presentation": pi1_presentation(w)})


# -- cover -------------------------------------------------------------------


def cmd_cover_monodromy(args) -> Outcome:
    w = _word(args, m_means="half")
    if w.strands < 2:
        raise BadIndexError("monodromy needs at least 2 strands")
    omega = homology_monodromy(w)
    return Outcome(
        {"word": w.to_json(), "monodromy": omega.to_json(), "det": str(det(omega)), "char_poly": char_poly(omega).to_json()}
    )


def _family_params(args) -> dict:
    family = args.family
    if family == "gamma":
        _need(args, "n")
        return {"n": args.n, "k": _k(args)}
    m = _half_m(args)
    return {"m": m} if family == "psi" else {"m": m, "k": _k(args)}


def cmd_cover_closed_form(args) -> Outcome:
    _need(args, "family")
    params = _family_params(args)
    reason = _rejection(args.family, params)
    if reason:
        raise BadIndexError(reason)
    closed = closed_matrix(args.family, params)
    oracle = oracle_matrix(args.family, params)
    out = Outcome(
        {
            "family": args.family,
            "params": params,
            "closed": closed.to_json(),
            "oracle": oracle.to_json(),
            "equal": closed == oracle,
        }
    )
    if closed != oracle:
        level = sweeps.REQUIRED if args.family == "gamma" else sweeps.EXPECTED
        out.discrepancies.append(
            {"sweep": args.family, "check": f"{args.family}_closed_form", "level": level, "params": params, "detail": "closed form differs from oracle"}
        )
    return out


def cmd_cover_compare(args) -> Outcome:
    _need(args, "family")
    r = sweeps.sweep_closed_form(args.family, args.m_max, args.k_max, args.n_max, args.jobs)
    return Outcome(r.payload, r.discrepancies, False)


# -- alexander ---------------------------------------------------------------


def cmd_alexander_invariants(args) -> Outcome:
    m, k = _half_m(args), _k(args)
    inv = covering_invariants(m, k)
    res = inv.to_json()
    res["palindromy"] = palindromy_summary(inv)
    return Outcome(res)


def cmd_alexander_theorem_dd(args) -> Outcome:
    m, k = _half_m(args), _k(args)
    closed = normalize_unit(theorem_dd(m, k))
    oracle = covering_invariants(m, k).reduced_alexander
    out = Outcome({"m": m, "k": k, "theorem_dd": closed.to_json(), "text": str(closed), "oracle": oracle.to_json(), "equal": closed == oracle})
    if closed != oracle:
        out.discrepancies.append(
            {"sweep": "dd", "check": "theorem_dd", "level": sweeps.EXPECTED, "params": {"m": m, "k": k}, "detail": f"oracle {oracle}"}
        )
    return out


def cmd_alexander_linking(args) -> Outcome:
    m, k = _half_m(args), _k(args)
    inv = covering_invariants(m, k)
    formula = linking_formula(m, k)
    out = Outcome(
        {
            "m": m,
            "k": k,
            "linking_formula": str(formula),
            "oracle_value_at_one": str(inv.linking_eval),
            "oracle_linking_abs": str(inv.linking_abs),
            "equal": inv.linking_eval == -formula,
        }
    )
    if inv.linking_eval != -formula:
        out.discrepancies.append(
            {"sweep": "linking", "check": "linking_formula", "level": sweeps.EXPECTED, "params": {"m": m, "k": k}, "detail": "value differs"}
        )
    return out


def cmd_alexander_unknot_check(args) -> Outcome:
    w = _word(args)
    word_id = args.word if args.word is not None else f"B({w.strands},{_k(args)})"
    return Outcome(unknot_evidence(w, word_id).to_json())


# -- sw ---------------------------------------------------------------------------


def cmd_sw_e1(args) -> Outcome:
    m, k = _half_m(args), _k(args)
    delta = covering_invariants(m, k).reduced_alexander
    sym = symmetrize(delta)
    sw = sw_link_surgery(sym, [E1, E1])
    return Outcome(
        {
            "m": m,
            "k": k,
            "delta_sym": sym.to_json(),
            "sw": sw.to_json(),
            "sw_text": str(sw),
            "total_sw": str(total_sw(sw)),
            "e1_family_invariant": str(e1_family_invariant(m, k)),
        }
    )


def cmd_sw_distinguish(args) -> Outcome:
    _need(args, "i", "j")
    m = _half_m(args)
    verdict = distinguish(m, args.i, args.j, not args.sw_zero)
    return Outcome({"m": m, "i": args.i, "j": args.j, "sw_nonzero": not args.sw_zero, "verdict": verdict})


def cmd_sw_fiber_data(args) -> Outcome:
    if args.n is not None:
        return Outcome(covering_fiber_data(args.n))
    _need(args, "m")
    return Outcome(covering_fiber_data(2 * args.m))


# -- verify ------------------------------------------------------------------


def _from_sweeps(results: list[sweeps.SweepResult]) -> Outcome:
    payload = {r.name: r.payload for r in results}
    discrepancies = [d for r in results for d in r.discrepancies]
    return Outcome(payload, discrepancies, any(r.required_failed for r in results))


def _verify(fn: Callable[[argparse.Namespace], list[sweeps.SweepResult]]):
    return lambda args: _from_sweeps(fn(args))


VERIFY = {
    "gamma": lambda a: [sweeps.sweep_closed_form("gamma", a.m_max, a.k_max, a.n_max, a.jobs)],
    "phi": lambda a: [sweeps.sweep_closed_form("phi", a.m_max, a.k_max, jobs=a.jobs)],
    "psi": lambda a: [sweeps.sweep_closed_form("psi", a.m_max, a.k_max, jobs=a.jobs)],
    "omega": lambda a: [sweeps.sweep_closed_form("omega", a.m_max, a.k_max, jobs=a.jobs)],
    "dd": lambda a: [sweeps.sweep_dd(a.m_max, a.k_max, a.jobs)],
    "linking": lambda a: [sweeps.sweep_linking(a.m_max, a.k_max, a.jobs)],
    "unknots": lambda a: [sweeps.sweep_unknots(a.strands_max, a.k_max, a.jobs)],
    "all": lambda a: [
        sweeps.sweep_core(a.samples, a.seed),
        *(sweeps.sweep_closed_form(f, a.m_max, a.k_max, a.n_max if f == "gamma" else None, a.jobs) for f in FAMILIES),
        sweeps.sweep_dd(a.m_max, a.k_max, a.jobs),
        sweeps.sweep_linking(a.m_max, a.k_max, a.jobs),
        sweeps.sweep_unknots(a.strands_max, a.k_max, a.jobs),
        sweeps.sweep_distinct(a.m_max, a.k_max),
    ],
}


# -- parser and dispatch -----------------------------------------------------------


COMMANDS = {
    "braid": {"parse": cmd_braid_parse, "family": cmd_braid_family, "info": cmd_braid_info, "artin": cmd_braid_artin},
    "cover": {
        "monodromy": cmd_cover_monodromy,
        "closed-form": cmd_cover_closed_form,
        "compare": cmd_cover_compare,
        "alexander": cmd_alexander_invariants,
    },
    "alexander": {
        "invariants": cmd_alexander_invariants,
        "theorem-dd": cmd_alexander_theorem_dd,
        "linking": cmd_alexander_linking,
        "unknot-check": cmd_alexander_unknot_check,
    },
    "sw": {"e1": cmd_sw_e1, "distinguish": cmd_sw_distinguish, "fiber-data": cmd_sw_fiber_data},
    "verify": {name: _verify(fn) for name, fn in VERIFY.items()},
}

# not part of the parameter echo, so reports do not depend on them
_PRESENTATION_FLAGS = {"format", "out", "jobs", "group", "command"}
_SWEEP_FLAGS = {"m_max", "k_max", "n_max", "strands_max", "samples", "seed"}


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, help="family parameter (strand count for braid commands, half of it elsewhere)")
    common.add_argument("--k", type=int, help="twist exponent")
    common.add_argument("--n", type=int, help="strand count")
    common.add_argument("--word", help="braid word text, e.g. '1.-2.Gamma(2)^3'")
    common.add_argument("--strands", type=int, help="strand count for --word")
    common.add_argument("--family", choices=FAMILIES, help="closed-form family")
    common.add_argument("--i", type=int, help="first k for sw distinguish")
    common.add_argument("--j", type=int, help="second k for sw distinguish")
    common.add_argument("--sw-zero", action="store_true", help="treat SW of the summand as zero")
    common.add_argument("--m-max", type=_positive, default=5)
    common.add_argument("--k-max", type=_nonnegative, default=5)
    common.add_argument("--n-max", type=_positive, default=None, help="largest n for the gamma sweep (default 2*m-max)")
    common.add_argument("--strands-max", type=_positive, default=8, help="largest strand count for the unknot sweep")
    common.add_argument("--samples", type=_nonnegative, default=200, help="randomized pairs in verify all")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=_positive, default=1, help="parallel sweep width; output order is unaffected")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog=TOOL, description="Braid families, covering-link monodromy and invariants.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)
    for group, commands in COMMANDS.items():
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="command", required=True)
        for name in commands:
            sub.add_parser(name, parents=[common])
    return parser


def _parameters(args) -> dict:
    skip = set(_PRESENTATION_FLAGS)
    if args.group != "verify" and args.command != "compare":
        skip |= _SWEEP_FLAGS
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None and v is not False}


def make_report(args, outcome: Outcome | None, status: int, error: Exception | None = None) -> dict:
    report = {
        "tool": TOOL,
        "version": __version__,
        "command": f"{args.group} {args.command}",
        "parameters": _parameters(args),
        "results": outcome.results if outcome else None,
        "discrepancies": outcome.discrepancies if outcome else [],
        "exit_status": status,
    }
    if error is not None:
        report["error"] = {"type": type(error).__name__, "message": str(error)}
    return report


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def _text_lines(prefix: str, value, out: list[tuple[str, str]]):
    if isinstance(value, dict):
        if set(value) >= {"rank", "rows"} and all(isinstance(r, list) for r in value["rows"]) and value["rows"] and all(
            isinstance(x, str) for r in value["rows"] for x in r
        ):
            width = max(len(x) for r in value["rows"] for x in r)
            for i, r in enumerate(value["rows"]):
                out.append((f"{prefix}[{i + 1}]", " ".join(x.rjust(width) for x in r)))
            return
        if set(value) >= {"variable", "terms"}:
            from braidcover.laurent import LaurentPoly

            out.append((prefix, str(LaurentPoly.from_json(value))))
            return
        if not value:
            out.append((prefix, "{}"))
        for k, v in value.items():
            _text_lines(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            out.append((prefix, " ".join(_scalar(x) for x in value) if value else "[]"))
        else:
            for i, x in enumerate(value):
                _text_lines(f"{prefix}[{i}]", x, out)
    else:
        out.append((prefix, _scalar(value)))


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    pairs: list[tuple[str, str]] = []
    _text_lines("", report, pairs)
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)} : {v}\n" for k, v in pairs)


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.group][args.command]
    try:
        outcome = handler(args)
    except (InputError, ValueError) as exc:
        _emit(render(make_report(args, None, EXIT_USAGE, exc), args.format), args.out)
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        _emit(render(make_report(args, None, EXIT_DOMAIN, exc), args.format), args.out)
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    status = EXIT_DISCREPANCY if outcome.required_failed else EXIT_OK
    _emit(render(make_report(args, outcome, status), args.format), args.out)
    for d in outcome.discrepancies:
        print(f"{TOOL}: {d['level']}: {d['check']} {d['params']}: {d['detail']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
