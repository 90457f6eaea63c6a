"""Command-line interface: ``omkit <command> ...``.

Exit status is 0 on success, 1 when a checked condition fails or a system is
infeasible, and 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .crn import (
    SubspacePair,
    check_robust_existence,
    check_unique_existence,
    condition_closure_minors,
    condition_closure_sign_vectors,
    condition_faces,
    condition_nondegenerate,
    condition_uniqueness_minors,
    condition_uniqueness_sign_vectors,
    deficiency,
    is_weakly_reversible,
)
from .elementary import elementary_vectors
from .errors import OmkitError
from .feasibility import exists_vector
from .io import box_from_json, dumps, load_json, matrix_from_json, network_from_json, scalar_to_json
from .matrix import ExactMatrix
from .oriented_matroids import chirotope, cocircuits_from_matrix, covectors_from_matrix
from .scalars import AssumptionSet, format_scalar, parse_scalar
from .sign_vectors import sorted_signs

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class CommandError(OmkitError):
    pass


def _vector_text(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def _sign_char(s: int) -> str:
    return {1: "+", -1: "-", 0: "0"}[s]


def _flag(value: bool) -> str:
    return "true" if value else "false"


def parse_substitutions(text: str | None, declared) -> dict:
    """``a=1/2,b=1`` -> ``{"a": Fraction(1, 2), "b": Fraction(1)}``."""
    if not text:
        return {}
    values = {}
    for item in text.split(","):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise CommandError(f"bad substitution {item!r}; expected name=value")
        if name not in declared:
            raise CommandError(f"cannot substitute undeclared symbol {name!r}")
        parsed = parse_scalar(value, ())
        values[name] = Fraction(parsed)
    return values


def parse_assumptions(text: str | None, declared) -> AssumptionSet:
    if not text:
        return AssumptionSet()
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [n for n in names if n not in declared]
    if unknown:
        raise CommandError(f"--assume-positive names undeclared symbols {unknown}")
    return AssumptionSet(names)


def _load_matrix(path, args) -> ExactMatrix:
    data = load_json(path)
    M = matrix_from_json(data)
    declared = set((data.get("variables") or ()) if isinstance(data, dict) else ())
    values = parse_substitutions(getattr(args, "at", None), declared)
    return M.substitute(values) if values else M


def _declared(path) -> set:
    data = load_json(path)
    return set((data.get("variables") or ()) if isinstance(data, dict) else ())


def _emit(args, text: str, payload) -> None:
    if args.output == "json":
        print(dumps(payload))
    else:
        print(text)


# commands ---------------------------------------------------------------


def cmd_minors(args) -> int:
    M = _load_matrix(args.matrix, args)
    minors = M.maximal_minors()
    _emit(args, "[" + ", ".join(format_scalar(m) for m in minors) + "]", [scalar_to_json(m) for m in minors])
    return EXIT_OK


def cmd_elementary_vectors(args) -> int:
    M = _load_matrix(args.matrix, args)
    evs = elementary_vectors(M, kernel=not args.row_space, dedup=not args.no_dedup)
    text = "[" + ", ".join(_vector_text(v) for v in evs) + "]"
    _emit(args, text, [[scalar_to_json(x) for x in v] for v in evs])
    return EXIT_OK


def _signs_command(args, fn) -> int:
    M = _load_matrix(args.matrix, args)
    assumptions = parse_assumptions(args.assume_positive, _declared(args.matrix))
    signs = sorted_signs(fn(M, kernel=not args.row_space, assumptions=assumptions))
    _emit(args, "{" + ", ".join(str(s) for s in signs) + "}", [s.compact() for s in signs])
    return EXIT_OK


def cmd_cocircuits(args) -> int:
    return _signs_command(args, cocircuits_from_matrix)


def cmd_covectors(args) -> int:
    return _signs_command(args, covectors_from_matrix)


def cmd_chirotope(args) -> int:
    M = _load_matrix(args.matrix, args)
    if args.row_space:
        M = M.kernel_matrix()
    assumptions = parse_assumptions(args.assume_positive, _declared(args.matrix))
    signs = chirotope(M, assumptions)
    compact = "".join(_sign_char(s) for s in signs)
    _emit(args, f"({compact})", compact)
    return EXIT_OK


def cmd_exists_vector(args) -> int:
    M = _load_matrix(args.matrix, args)
    box = box_from_json(load_json(args.intervals))
    result = exists_vector(M, box, want_witness=args.witness)
    lines = [f"intervals: {box}", f"feasible: {_flag(result.feasible)}"]
    payload: dict = {"feasible": result.feasible, "intervals": box.to_json()}
    if result.witness is not None:
        lines.append(f"witness: {_vector_text(result.witness)}")
        payload["witness"] = [format_scalar(x) for x in result.witness]
    if result.certificate is not None:
        lines.append(f"certificate: {_vector_text(result.certificate)}")
        payload["certificate"] = [format_scalar(x) for x in result.certificate]
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if result.feasible else EXIT_FALSE


def _load_pair(args):
    declared = _declared(args.W) | _declared(args.Wt)
    values = parse_substitutions(args.at, declared)
    W = matrix_from_json(load_json(args.W))
    Wt = matrix_from_json(load_json(args.Wt))
    if values:
        W, Wt = W.substitute(values), Wt.substitute(values)
    assumptions = parse_assumptions(args.assume_positive, declared - set(values))
    return SubspacePair(W, Wt), assumptions


def _region_or_flag(args, name: str, pair, assumptions, minors_fn, signs_fn) -> int:
    if pair.is_rational:
        verdict = signs_fn(pair)
        _emit(args, f"{name}: {_flag(verdict)}", {name: verdict})
        return EXIT_OK if verdict else EXIT_FALSE
    region = minors_fn(pair, assumptions)
    _emit(args, f"{name}: {region}", {name: region.to_json()})
    return EXIT_OK if region.satisfiable else EXIT_FALSE


def cmd_crn_closure(args) -> int:
    pair, assumptions = _load_pair(args)
    return _region_or_flag(args, "closure", pair, assumptions, condition_closure_minors, condition_closure_sign_vectors)


def cmd_crn_uniqueness(args) -> int:
    pair, assumptions = _load_pair(args)
    if not pair.is_rational:
        try:
            verdict = condition_uniqueness_sign_vectors(pair, assumptions)
        except OmkitError:
            pass
        else:
            _emit(args, f"uniqueness: {_flag(verdict)}", {"uniqueness": verdict})
            return EXIT_OK if verdict else EXIT_FALSE
    return _region_or_flag(
        args, "uniqueness", pair, assumptions, condition_uniqueness_minors, condition_uniqueness_sign_vectors
    )


def cmd_crn_faces(args) -> int:
    pair, _ = _load_pair(args)
    verdict = condition_faces(pair)
    _emit(args, f"faces: {_flag(verdict)}", {"faces": verdict})
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_crn_nondegenerate(args) -> int:
    pair, _ = _load_pair(args)
    verdict = condition_nondegenerate(pair)
    _emit(args, f"nondegenerate: {_flag(verdict)}", {"nondegenerate": verdict})
    return EXIT_OK if verdict else EXIT_FALSE


def _load_network(args):
    data = load_json(args.network)
    net = network_from_json(data)
    declared = set(net.variables)
    values = parse_substitutions(getattr(args, "at", None), declared)
    if values:
        net = net.substitute(values)
    assumptions = parse_assumptions(getattr(args, "assume_positive", None), declared - set(values))
    return net, assumptions


def cmd_crn_deficiency(args) -> int:
    net, assumptions = _load_network(args)
    defs = deficiency(net, assumptions)
    wr = is_weakly_reversible(net)
    text = "\n".join([
        f"deficiency: {defs.stoichiometric}",
        f"kinetic deficiency: {defs.kinetic}",
        f"weakly reversible: {_flag(wr)}",
    ])
    _emit(args, text, {"deficiency": defs.stoichiometric, "kinetic_deficiency": defs.kinetic,
                       "weakly_reversible": wr})
    return EXIT_OK


def _report_lines(report) -> list:
    lines = [report.summary()]
    if report.deficiency is not None:
        lines.append(f"  deficiency: {report.deficiency}")
    if report.kinetic_deficiency is not None:
        lines.append(f"  kinetic deficiency: {report.kinetic_deficiency}")
    if report.weakly_reversible is not None:
        lines.append(f"  weakly reversible: {_flag(report.weakly_reversible)}")
    for c in report.conditions:
        if c.holds is not None:
            detail = _flag(c.holds)
        elif c.region is not None:
            detail = str(c.region)
        else:
            detail = f"undetermined ({c.note})"
        lines.append(f"  {c.name}: {detail}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return lines


def cmd_crn_check(args) -> int:
    net, assumptions = _load_network(args)
    robust = check_robust_existence(net, assumptions)
    unique = check_unique_existence(net, assumptions)
    text = "\n".join(_report_lines(robust) + _report_lines(unique))
    _emit(args, text, {"robust_existence": robust.to_json(), "unique_existence": unique.to_json()})
    return EXIT_FALSE if False in (robust.holds, unique.holds) else EXIT_OK


# parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="omkit", description="Elementary vectors, sign vectors and oriented matroids.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_command(name, fn, help_text, row_space=True, assume=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--matrix", required=True, help="matrix JSON file")
        p.add_argument("--at", help="substitute symbols first, e.g. a=1/2,b=1")
        if row_space:
            p.add_argument("--row-space", action="store_true", help="use the row space instead of the kernel")
        if assume:
            p.add_argument("--assume-positive", help="comma-separated symbols assumed > 0")
        p.set_defaults(func=fn)
        return p

    matrix_command("minors", cmd_minors, "maximal minors in lexicographic order", row_space=False)
    p = matrix_command("elementary-vectors", cmd_elementary_vectors, "elementary vectors of the kernel")
    p.add_argument("--no-dedup", action="store_true", help="keep vectors with repeated supports")
    matrix_command("cocircuits", cmd_cocircuits, "cocircuits of the oriented matroid", assume=True)
    matrix_command("covectors", cmd_covectors, "all covectors of the oriented matroid", assume=True)
    matrix_command("chirotope", cmd_chirotope, "signs of the maximal minors", assume=True)
    p = matrix_command("exists-vector", cmd_exists_vector, "does the row space meet a box?", row_space=False)
    p.add_argument("--intervals", required=True, help="interval box JSON file")
    p.add_argument("--witness", action="store_true", help="also print a point in the intersection")

    crn = sub.add_parser("crn", help="reaction network conditions")
    crn_sub = crn.add_subparsers(dest="crn_command", required=True)
    for name, fn in (
        ("closure", cmd_crn_closure),
        ("uniqueness", cmd_crn_uniqueness),
        ("faces", cmd_crn_faces),
        ("nondegenerate", cmd_crn_nondegenerate),
    ):
        p = crn_sub.add_parser(name, parents=[common])
        p.add_argument("--W", required=True, help="matrix JSON with S = ker W")
        p.add_argument("--Wt", required=True, help="matrix JSON with St = ker Wt")
        p.add_argument("--at", help="substitute symbols first, e.g. a=1/2")
        p.add_argument("--assume-positive", help="comma-separated symbols assumed > 0")
        p.set_defaults(func=fn)
    for name, fn in (("check", cmd_crn_check), ("deficiency", cmd_crn_deficiency)):
        p = crn_sub.add_parser(name, parents=[common])
        p.add_argument("--network", required=True, help="network JSON file")
        p.add_argument("--at", help="substitute symbols first, e.g. a=2,b=1,c=1")
        p.add_argument("--assume-positive", help="comma-separated symbols assumed > 0")
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OmkitError as exc:
        print(f"omkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
