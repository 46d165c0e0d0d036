"""Command-line front end (``gfz``).

Exit status: 0 when every check passes, 1 when a check fails (the witness is
printed), 2 on usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import islice
from pathlib import Path

from .errors import AssociativityViolation, GammaFuzzError, InvalidZero
from .extension import extend
from .formats import dump, format_gsg, format_ifs, format_set, load_gsg, load_ifs, parse_set
from .gamma import (
    PRIME_CRITERIA,
    SIDES,
    enumerate_ideals,
    is_commutative,
    is_ideal,
    is_regular,
    make_modular,
    prime_failure,
    semiprime_failure,
)
from .ideals import compose, compose_explain, is_if_ideal, is_ifpi, is_ifspi
from .ifs import characteristic_pair, format_degree, level_cut

DEFAULT_RESULTS = "gfz-results"
CRISP_CHECKS = ("ideal", "prime", "semiprime")
IF_CHECKS = ("ifli", "ifri", "ifi", "ifpi", "ifspi")
_IF_SIDE = {"ifli": "left", "ifri": "right", "ifi": "two-sided"}

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, **fields) -> None:
    """Print either the human line or a key=value record, depending on --machine."""
    if getattr(args, "machine", False):
        print(" ".join(f"{k}={v}" for k, v in fields.items()))
    else:
        print(text)


def _members(G, spec: str) -> frozenset[str]:
    """A subset from "a,b c", or from a .set file when the value names one."""
    if spec.endswith(".set") and Path(spec).is_file():
        members = parse_set(Path(spec).read_text(encoding="utf-8"))
    else:
        members = frozenset(t for t in spec.replace(",", " ").split())
    if not members:
        raise UsageError("the subset is empty")
    G.indices(members)  # rejects unknown ids
    return members


def _show(G, members) -> str:
    return "{" + ", ".join(G.ordered(members)) + "}"


def _write_or_print(text: str, out) -> None:
    if out:
        dump(out, text)
    else:
        sys.stdout.write(text)


# subcommands


def cmd_validate(args) -> int:
    try:
        G = load_gsg(args.gsg)
    except (AssociativityViolation, InvalidZero) as e:
        _emit(args, f"invalid: {e}", valid="no", violation=str(e).replace(" ", "_"))
        return FAILED
    reg = is_regular(G)
    comm = is_commutative(G)
    zero = G.zero if G.zero is not None else "-"
    parts = [
        "valid",
        f"|S|={G.size}",
        f"|Γ|={G.gamma_size}",
        "commutative" if comm else "non-commutative",
        "regular" if reg else f"non-regular (witness c={reg.failing})",
        f"zero={zero}",
    ]
    _emit(
        args, ", ".join(parts),
        valid="yes", size=G.size, gamma=G.gamma_size, commutative="yes" if comm else "no",
        regular="yes" if reg else "no", failing=reg.failing or "-", zero=zero,
    )
    return OK


def _check_crisp(args, G) -> int:
    if args.set is None:
        raise UsageError(f"check {args.what} needs --set")
    I = _members(G, args.set)
    label = _show(G, I)
    if args.what == "ideal":
        ok = is_ideal(G, I, args.side)
        _emit(args, f"{label} is {'' if ok else 'not '}a {args.side} ideal",
              check="ideal", side=args.side, verdict="pass" if ok else "fail")
        return OK if ok else FAILED
    if not is_ideal(G, I, "two-sided"):
        _emit(args, f"{label} is not a two-sided ideal", check=args.what, verdict="fail",
              witness="not-an-ideal")
        return FAILED
    finder = prime_failure if args.what == "prime" else semiprime_failure
    witness = finder(G, I, args.criterion)
    degenerate = len(I) == G.size
    note = " (degenerate: I = S)" if degenerate else ""
    if witness is None:
        _emit(args, f"{label} is {args.what} under the {args.criterion} criterion{note}",
              check=args.what, criterion=args.criterion, verdict="pass",
              degenerate="yes" if degenerate else "no")
        return OK
    if isinstance(witness, tuple):
        shown = " ".join(_show(G, w) if isinstance(w, frozenset) else w for w in witness)
    else:
        shown = _show(G, witness) if isinstance(witness, frozenset) else witness
    _emit(args, f"{label} is not {args.what} under the {args.criterion} criterion; witness {shown}",
          check=args.what, criterion=args.criterion, verdict="fail", witness=shown.replace(" ", ","))
    return FAILED


def _check_if(args, G) -> int:
    if args.set is not None:
        A = characteristic_pair(G, _members(G, args.set))
    elif args.ifs is not None:
        A = load_ifs(args.ifs, G)
    else:
        raise UsageError(f"check {args.what} needs an IFS file or --set")
    if args.what in _IF_SIDE:
        verdict = is_if_ideal(G, A, _IF_SIDE[args.what])
    else:
        verdict = (is_ifpi if args.what == "ifpi" else is_ifspi)(G, A)
    fields = dict(check=args.what, verdict="pass" if verdict else "fail")
    if not verdict:
        fields["condition"] = verdict.condition
        fields["witness"] = ",".join(verdict.witness)
    _emit(args, f"{args.what}: {verdict.describe()}", **fields)
    return OK if verdict else FAILED


def cmd_check(args) -> int:
    G = load_gsg(args.gsg)
    if args.what in CRISP_CHECKS:
        return _check_crisp(args, G)
    return _check_if(args, G)


def cmd_compose(args) -> int:
    G = load_gsg(args.gsg)
    A, B = load_ifs(args.a, G), load_ifs(args.b, G)
    C = compose(G, A, B)
    _write_or_print(format_ifs(C), args.out)
    if args.explain:
        for x, best in compose_explain(G, A, B).items():
            if best is None:
                print(f"# {x}: no factorization, (0, 1)")
            else:
                (mu_f, nu_f) = best
                print(f"# {x}: mu via {' '.join(mu_f)}, nu via {' '.join(nu_f)}")
    return OK


def cmd_extend(args) -> int:
    G = load_gsg(args.gsg)
    A = load_ifs(args.ifs, G)
    _write_or_print(format_ifs(extend(G, args.by, A)), args.out)
    return OK


def cmd_cut(args) -> int:
    space = load_gsg(args.gsg) if args.gsg else None
    A = load_ifs(args.ifs, space)
    cut = level_cut(A, args.t, args.kind)
    if args.machine:
        print(f"kind={cut.kind} t={format_degree(cut.threshold)} members={','.join(x for x in A.carrier if x in cut.members) or '-'}")
    else:
        _write_or_print(format_set(cut.members, A.carrier), args.out)
    return OK


def cmd_enumerate_ideals(args) -> int:
    G = load_gsg(args.gsg)
    for I in enumerate_ideals(G, args.side):
        if args.machine:
            print(f"side={args.side} members={','.join(G.ordered(I))}")
        else:
            print(_show(G, I))
    return OK


def cmd_verify(args) -> int:
    from .harness import exit_status, machine_report, run_all, select_cases, summary_matrix

    if args.budget < 0:
        raise UsageError("--budget must be non-negative")
    ids = select_cases(args.cases)
    out = Path(args.out or os.environ.get("GFZ_RESULTS_DIR") or DEFAULT_RESULTS)
    out.mkdir(parents=True, exist_ok=True)
    reports = run_all(args.budget, args.seed, ids, out)
    records = machine_report(reports)
    dump(out / "report.txt", records)
    if args.machine:
        sys.stdout.write(records)
    else:
        sys.stdout.write(summary_matrix(reports, timing=args.timing))
        print(f"records written to {out / 'report.txt'}")
    return exit_status(reports)


def cmd_gen(args) -> int:
    from .harness import InstanceGenerator, generate_gsemigroups, load_catalog

    out = Path(args.out)
    if args.source == "modular":
        if args.n is None or args.gamma is None:
            raise UsageError("gen modular needs --n and --gamma")
        gamma = [int(t) for t in args.gamma.replace(",", " ").split()]
        G = make_modular(args.n, gamma, close=args.close)
        if out.suffix == ".gsg":
            out.parent.mkdir(parents=True, exist_ok=True)
            dump(out, format_gsg(G))
            print(out)
        else:
            out.mkdir(parents=True, exist_ok=True)
            path = out / f"z{args.n}-g{''.join(G.gamma)}.gsg"
            dump(path, format_gsg(G))
            print(path)
        return OK
    out.mkdir(parents=True, exist_ok=True)
    if args.source == "catalog":
        wanted = set(args.names or ())
        known = {e.name for e in load_catalog()}
        if wanted - known:
            raise UsageError(f"unknown catalog names: {', '.join(sorted(wanted - known))}")
        for entry in load_catalog():
            if not wanted or entry.name in wanted:
                path = out / f"{entry.name}.gsg"
                dump(path, format_gsg(entry.G))
                print(path)
        return OK
    spec = InstanceGenerator(args.family, sizes=(args.min_size, args.max_size), seed=args.seed)
    for i, G in enumerate(islice(generate_gsemigroups(spec), args.count)):
        path = out / f"{args.family}-{args.seed}-{i:03d}.gsg"
        dump(path, format_gsg(G))
        print(path)
    return OK


# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gfz", description="Finite Γ-semigroups and their intuitionistic fuzzy ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--machine", action="store_true", help="print key=value records")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate, "validate a .gsg file and summarise it")
    sp.add_argument("gsg")

    sp = add("check", cmd_check, "check a crisp or IF predicate")
    sp.add_argument("what", choices=CRISP_CHECKS + IF_CHECKS)
    sp.add_argument("gsg")
    sp.add_argument("ifs", nargs="?", help="IFS file (IF checks)")
    sp.add_argument("--set", help='subset as "a,b" or a .set file; for IF checks its characteristic pair')
    sp.add_argument("--criterion", choices=PRIME_CRITERIA, default="pairs")
    sp.add_argument("--side", choices=SIDES, default="two-sided")

    sp = add("compose", cmd_compose, "sup-min / inf-max composition A∘B")
    sp.add_argument("gsg")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--out")
    sp.add_argument("--explain", action="store_true", help="show an achieving factorization per element")

    sp = add("extend", cmd_extend, "extension <x,A>")
    sp.add_argument("gsg")
    sp.add_argument("ifs")
    sp.add_argument("--by", required=True, metavar="X")
    sp.add_argument("--out")

    sp = add("cut", cmd_cut, "upper cut of μ or lower cut of ν")
    sp.add_argument("ifs")
    sp.add_argument("--t", required=True, help="threshold, e.g. 1/2")
    sp.add_argument("--kind", choices=("upper", "lower"), default="upper")
    sp.add_argument("--gsg", help="carrier order and id check")
    sp.add_argument("--out")

    sp = add("enumerate-ideals", cmd_enumerate_ideals, "list every ideal of a side")
    sp.add_argument("gsg")
    sp.add_argument("--side", choices=SIDES, default="two-sided")

    sp = add("verify", cmd_verify, "run the theorem harness")
    sp.add_argument("--cases", default="all", help='"all" or comma-separated ids / prefixes')
    sp.add_argument("--budget", type=int, default=100, help="samples per case")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help=f"results directory (default $GFZ_RESULTS_DIR or {DEFAULT_RESULTS})")
    sp.add_argument("--timing", action="store_true", help="add wall-clock seconds to the summary")

    sp = add("gen", cmd_gen, "write catalog, modular or generated instances")
    sp.add_argument("source", choices=("catalog", "modular", "random"))
    sp.add_argument("--out", required=True)
    sp.add_argument("--names", nargs="*", help="catalog entries to write (default all)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--gamma", help='Γ ⊆ Z_n, e.g. "0,2"')
    sp.add_argument("--close", action="store_true", help="replace Γ by its closure")
    sp.add_argument("--family", choices=("modular", "table-mutation", "catalog"), default="modular")
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--min-size", type=int, default=1)
    sp.add_argument("--max-size", type=int, default=4)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GammaFuzzError, UsageError, OSError, ValueError) as e:
        print(f"gfz: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
