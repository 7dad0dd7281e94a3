"""Command-line front end: exact branching computations, JSON or TSV out.

Exit codes: 0 success, 1 selftest failure, 2 parse error, 3 validation error,
4 stable-range violation.  Group names follow the matrix size conventions
O5, GL4, Sp6 (the symplectic numeral is 2k).  All counts are serialized as
decimal strings so arbitrary precision survives JSON consumers.
"""

import argparse
import json
import sys
import time

from . import __version__, branching, oracles, selftest
from . import partitions as pt
from .branching import StableRangeError
from .lr import generalized_lr
from .partitions import Group, InvalidLabelError
from .tableaux import tableau_text

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_RANGE = 4


class ParseError(ValueError):
    """Malformed command-line text (as opposed to an invalid label)."""


def _parse(kind, func, text):
    try:
        return func(text)
    except (InvalidLabelError, ValueError) as exc:
        raise ParseError(f"bad {kind} {text!r}: {exc}") from exc


def _parse_group(text) -> Group:
    return _parse("group", Group.parse, text)


def _parse_label(group: Group, text):
    if group.family == "GL":
        return _parse("label", lambda t: pt.parse_gl_text(t, group.rank), text)
    return _parse("label", pt.parse_partition, text)


def _format_label(group: Group, label) -> str:
    if group.family == "GL":
        return pt.format_gl_label(label, group.rank)
    return pt.format_partition(label)


def _parse_weight(text) -> tuple:
    return _parse("weight", pt.parse_weight, text)


def _parse_blocks(text) -> tuple:
    blocks = _parse("blocks", lambda t: tuple(int(x) for x in t.split(",")), text)
    if not blocks or any(b < 1 for b in blocks):
        raise ParseError(f"bad blocks {text!r}: entries must be positive")
    return blocks


def _tableau_payload(group: Group, item):
    if group.family == "GL":
        return [tableau_text(item[0]), tableau_text(item[1])]
    return tableau_text(item, barred=group.family == "Sp")


def _table_payload(table) -> dict:
    return {pt.format_weight(delta): str(count)
            for delta, count in sorted(table.items())}


def _respond(args, command, inputs, result, started) -> None:
    if args.format == "json":
        payload = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "elapsed_ms": int((time.monotonic() - started) * 1000),
            "version": __version__,
        }
        print(json.dumps(payload))
        return
    for key, value in result.items():
        if isinstance(value, dict):
            for subkey, subvalue in value.items():
                print(f"{subkey}\t{subvalue}")
        elif isinstance(value, list):
            for entry in value:
                if isinstance(entry, dict):
                    print("\t".join(
                        "|".join(v) if isinstance(v, list) else str(v)
                        for v in entry.values()))
                elif isinstance(entry, list):
                    print(f"{key}\t" + "|".join(entry))
                else:
                    print(f"{key}\t{entry}")
        else:
            print(f"{key}\t{value}")


def _cmd_branch(args, started) -> int:
    group = _parse_group(args.group)
    lam = _parse_label(group, args.lam)
    inputs = {"group": group.display(), "lambda": _format_label(group, lam)}
    if args.weight is not None:
        delta = _parse_weight(args.weight)
        inputs["weight"] = pt.format_weight(delta)
        count = branching.k_tableau_count(group, lam, delta)
        result = {"multiplicity": str(count)}
        if args.list:
            result["tableaux"] = [
                _tableau_payload(group, item)
                for item in branching.enumerate_k_tableaux(group, lam, delta)]
    else:
        table = branching.k_tableau_table(group, lam)
        result = {"table": _table_payload(table)}
        if args.list:
            result["tableaux"] = [
                {"weight": pt.format_weight(branching.k_tableau_weight(group, item)),
                 "tableau": _tableau_payload(group, item)}
                for item in branching.enumerate_k_tableaux(group, lam)]
    _respond(args, "branch", inputs, result, started)
    return EXIT_OK


def _cmd_tableaux(args, started) -> int:
    group = _parse_group(args.group)
    lam = _parse_label(group, args.lam)
    inputs = {"group": group.display(), "lambda": _format_label(group, lam)}
    delta = None
    if args.weight is not None:
        delta = _parse_weight(args.weight)
        inputs["weight"] = pt.format_weight(delta)
    listing = []
    for item in branching.enumerate_k_tableaux(group, lam, delta):
        entry = {"weight": pt.format_weight(branching.k_tableau_weight(group, item)),
                 "tableau": _tableau_payload(group, item)}
        listing.append(entry)
    result = {"count": str(len(listing)), "tableaux": listing}
    _respond(args, "tableaux", inputs, result, started)
    return EXIT_OK


def _cmd_stable_branch(args, started) -> int:
    group = _parse_group(args.group)
    blocks = _parse_blocks(args.blocks)
    lam = _parse_label(group, args.lam)
    mu_texts = args.mu.split(";") if args.mu else []
    if len(mu_texts) != len(blocks):
        raise InvalidLabelError(
            f"got {len(mu_texts)} mu labels for {len(blocks)} blocks")
    mus = [_parse_label(Group(group.family, b), text)
           for b, text in zip(blocks, mu_texts)]
    inputs = {
        "group": group.display(),
        "blocks": ",".join(str(b) for b in blocks),
        "lambda": _format_label(group, lam),
        "mu": ";".join(_format_label(Group(group.family, b), mu)
                       for b, mu in zip(blocks, mus)),
    }
    if group.family == "GL":
        if args.p is None or args.q is None:
            raise ParseError("GL stable branching needs --p and --q")
        n_or_pq = (args.p, args.q)
        inputs["p"], inputs["q"] = str(args.p), str(args.q)
    else:
        if args.n is None:
            raise ParseError(f"{group.display()} stable branching needs --n")
        n_or_pq = args.n
        inputs["n"] = str(args.n)
    value = branching.stable_branch(group, blocks, lam, mus, n_or_pq)
    _respond(args, "stable-branch", inputs, {"multiplicity": str(value)}, started)
    return EXIT_OK


def _cmd_lrc(args, started) -> int:
    lam = _parse("label", pt.parse_partition, args.lam)
    mu_texts = args.mu.split(";") if args.mu else []
    mus = [_parse("label", pt.parse_partition, text) for text in mu_texts]
    value = generalized_lr(lam, mus)
    inputs = {"lambda": pt.format_partition(lam),
              "mu": ";".join(pt.format_partition(mu) for mu in mus)}
    _respond(args, "lrc", inputs, {"coefficient": str(value)}, started)
    return EXIT_OK


def _cmd_dim(args, started) -> int:
    group = _parse_group(args.group)
    lam = _parse_label(group, args.lam)
    value = oracles.group_dimension(group, lam)
    inputs = {"group": group.display(), "lambda": _format_label(group, lam)}
    _respond(args, "dim", inputs, {"dimension": str(value)}, started)
    return EXIT_OK


def _cmd_selftest(args, started) -> int:
    checks = []
    failed = 0
    total_instances = 0
    for name, instances, failure in selftest.run_checks(args.level):
        entry = {"name": name, "status": "fail" if failure else "pass",
                 "instances": instances}
        if failure:
            entry["detail"] = failure
            failed += 1
        checks.append(entry)
        total_instances += instances
    result = {
        "level": args.level,
        "passed": len(checks) - failed,
        "failed": failed,
        "instances": str(total_instances),
        "checks": checks,
    }
    _respond(args, "selftest", {"level": args.level}, result, started)
    return EXIT_SELFTEST if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branchtab",
        description="Exact branching multiplicities for classical groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, weight=True):
        p.add_argument("--group", required=True,
                       help="O<k>, GL<k>, or Sp<2k> (e.g. O5, GL4, Sp6)")
        p.add_argument("--lambda", dest="lam", required=True,
                       help="partition '2,2' ('0' for empty); GL also accepts "
                            "'2,1,-2,-2' or 'plus|minus'")
        if weight:
            p.add_argument("--weight", help="minimal-subgroup weight '0,0,0,0,0'")
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    p_branch = sub.add_parser("branch", help="minimal-subgroup multiplicities")
    add_common(p_branch)
    p_branch.add_argument("--list", action="store_true",
                          help="include the tableaux in text form")

    p_tab = sub.add_parser("tableaux", help="list the tableaux themselves")
    add_common(p_tab)

    p_stable = sub.add_parser("stable-branch",
                              help="stable rule for arbitrary blocks")
    add_common(p_stable, weight=False)
    p_stable.add_argument("--blocks", required=True, help="block sizes '3,2'")
    p_stable.add_argument("--mu", required=True,
                          help="';'-separated labels, one per block")
    p_stable.add_argument("--n", type=int, help="duality parameter (O and Sp)")
    p_stable.add_argument("--p", type=int, help="duality parameter (GL)")
    p_stable.add_argument("--q", type=int, help="duality parameter (GL)")

    p_lrc = sub.add_parser("lrc", help="generalized Littlewood-Richardson count")
    p_lrc.add_argument("--lambda", dest="lam", required=True)
    p_lrc.add_argument("--mu", required=True, help="';'-separated partitions")
    p_lrc.add_argument("--format", choices=("json", "tsv"), default="json")

    p_dim = sub.add_parser("dim", help="irreducible representation dimension")
    add_common(p_dim, weight=False)

    p_self = sub.add_parser("selftest", help="run the oracle equivalence suites")
    p_self.add_argument("--level", choices=("quick", "full"), default="quick")
    p_self.add_argument("--format", choices=("json", "tsv"), default="json")
    return parser


_HANDLERS = {
    "branch": _cmd_branch,
    "tableaux": _cmd_tableaux,
    "stable-branch": _cmd_stable_branch,
    "lrc": _cmd_lrc,
    "dim": _cmd_dim,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with code 2 on usage errors
    started = time.monotonic()
    try:
        return _HANDLERS[args.command](args, started)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StableRangeError as exc:
        print(f"stable range violated: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except InvalidLabelError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
