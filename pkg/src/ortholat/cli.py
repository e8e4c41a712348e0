"""Command-line driver.

Reports are flat `key value` lines with sorted keys, printed only after a
subcommand fully succeeds. Exit codes: 0 success, 1 input or validation
error, 2 a --expect assertion failed, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from .checks import (
    check_distributive,
    check_modular,
    check_order_implies_compat,
    check_orthomodular,
    defect_pairs,
)
from .enumeration import DEFAULT_WORK_BUDGET, enumerate_ortholattices
from .errors import BudgetExceeded, OrtholatError
from .families import gen_boolean, gen_mo, gen_o6, gen_subspace_mo, greechie_paste
from .lattice import OrthoLattice, atoms, is_atomic
from .olf import export_dot, export_olf, parse_gdf, parse_olf
from .questions import capacity, excess_information_witness
from .relevance import is_irrelevant, strictly_greater_relevant

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ortholat")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("file", help="lattice file (OLF)")
        return p

    p = with_file("check", help="orthomodularity verdict and defect pairs")
    p.add_argument("--expect", choices=["orthomodular", "non-orthomodular"])
    with_file("props", help="distributivity, modularity, orthomodularity, compatibility")
    with_file("defects", help="list defect pairs")
    p = with_file("relevance", help="relevance classification relative to one question")
    p.add_argument("element", help="element name (or index)")
    p = with_file("capacity", help="maximum relevance-preserving sequence length")
    p.add_argument("--max-len", type=int, default=None)
    with_file("witness", help="defect pair with relevance-preserving certificate")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write to file instead of stdout")

    gen = sub.add_parser("generate", help="emit a named family as OLF")
    family = gen.add_subparsers(dest="family", required=True)
    family.add_parser("boolean", parents=[out]).add_argument("k", type=int)
    family.add_parser("mo", parents=[out]).add_argument("m", type=int)
    family.add_parser("o6", parents=[out])
    family.add_parser("subspace", parents=[out]).add_argument("p", type=int)
    paste = family.add_parser("paste", parents=[out])
    paste.add_argument("gdf", help="block diagram file (GDF)")
    paste.add_argument("--allow-violations", action="store_true")

    p = sub.add_parser("enumerate", help="all ortholattice classes up to a size")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--orthomodular-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_WORK_BUDGET)
    p.add_argument("--out", help="directory for one OLF file per class")

    p = sub.add_parser("dot", help="covering graph for graphviz", parents=[out])
    p.add_argument("file", help="lattice file (OLF)")
    return parser


def _load(path: str) -> OrthoLattice:
    return parse_olf(Path(path).read_text())


def _emit_report(pairs: dict[str, object]) -> None:
    for key in sorted(pairs):
        print(f"{key} {_fmt(pairs[key])}")


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value) if value else "-"
    return str(value)


def _pair_names(L: OrthoLattice, pairs) -> list[str]:
    return [f"({L.names[x]},{L.names[y]})" for x, y in pairs]


def _write_or_print(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve_element(L: OrthoLattice, token: str) -> int:
    try:
        return L.index_of(token)
    except KeyError:
        pass
    try:
        idx = int(token)
    except ValueError:
        raise OrtholatError(f"no element named {token!r}") from None
    L.poset.check_index(idx)
    return idx


def _cmd_check(args) -> int:
    L = _load(args.file)
    defects = defect_pairs(L)
    oml = not defects
    report = {
        "n": L.n,
        "orthomodular": oml,
        "defects": _pair_names(L, defects),
    }
    if args.expect is not None and (args.expect == "orthomodular") != oml:
        print(f"expected {args.expect}, found "
              f"{'orthomodular' if oml else 'non-orthomodular'}", file=sys.stderr)
        return 2
    _emit_report(report)
    return 0


def _cmd_props(args) -> int:
    L = _load(args.file)
    report: dict[str, object] = {"n": L.n}
    for rep in (check_distributive(L), check_modular(L), check_orthomodular(L),
                check_order_implies_compat(L)):
        key = rep.property.replace("-", "_")
        report[key] = rep.verdict
        report[key + "_witness"] = (
            "(" + ",".join(L.names[v] for v in rep.witnesses[0]) + ")"
            if rep.witnesses else "-")
    report["atomic"] = is_atomic(L)
    report["atoms"] = ",".join(L.names[a] for a in sorted(atoms(L)))
    _emit_report(report)
    return 0


def _cmd_defects(args) -> int:
    L = _load(args.file)
    defects = defect_pairs(L)
    _emit_report({"count": len(defects), "defects": _pair_names(L, defects)})
    return 0


def _cmd_relevance(args) -> int:
    L = _load(args.file)
    a = _resolve_element(L, args.element)
    relevant = [b for b in range(L.n) if not is_irrelevant(L, b, a)]
    irrelevant = [b for b in range(L.n) if is_irrelevant(L, b, a)]
    _emit_report({
        "element": L.names[a],
        "relevant": ",".join(L.names[b] for b in relevant) or "-",
        "irrelevant": ",".join(L.names[b] for b in irrelevant) or "-",
        "strictly_greater_relevant":
            ",".join(L.names[b] for b in strictly_greater_relevant(L, a)) or "-",
    })
    return 0


def _cmd_capacity(args) -> int:
    L = _load(args.file)
    rep = capacity(L, max_len=args.max_len)
    _emit_report({
        "capacity": rep.capacity,
        "exact": rep.exact,
        "measure": rep.measure,
        "sequence": ",".join(L.names[q] for q in rep.sequence),
    })
    return 0


def _cmd_witness(args) -> int:
    L = _load(args.file)
    found = excess_information_witness(L)
    report: dict[str, object] = {"orthomodular": found is None}
    if found is None:
        report["witness"] = "-"
        report["certificate"] = "-"
    else:
        a, b, cert = found
        report["witness"] = f"({L.names[a]},{L.names[b]})"
        report["certificate"] = ",".join(L.names[q] for q in cert)
    _emit_report(report)
    return 0


def _cmd_generate(args) -> int:
    if args.family == "boolean":
        L = gen_boolean(args.k)
    elif args.family == "mo":
        L = gen_mo(args.m)
    elif args.family == "o6":
        L = gen_o6()
    elif args.family == "subspace":
        L = gen_subspace_mo(args.p)
    else:
        diagram = parse_gdf(Path(args.gdf).read_text())
        L = greechie_paste(diagram, allow_violations=args.allow_violations)
    _write_or_print(export_olf(L), args.output)
    return 0


def _summary_report(summary) -> dict[str, object]:
    report: dict[str, object] = {"complete": summary.complete, "total": len(summary.classes)}
    for size in summary.completed_sizes:
        report[f"count{size}"] = summary.count(size)
    return report


def _cmd_enumerate(args) -> int:
    code = 0
    try:
        summary = enumerate_ortholattices(
            args.max_size, orthomodular_only=args.orthomodular_only,
            jobs=args.jobs, budget=args.budget)
    except BudgetExceeded as err:
        print(err, file=sys.stderr)
        summary = err.partial
        code = 3
    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        for cls in summary.classes:
            digest = hashlib.sha256(cls.form).hexdigest()[:12]
            (directory / f"n{cls.size:02d}_{digest}.olf").write_text(export_olf(cls.lattice))
    _emit_report(_summary_report(summary))
    return code


def _cmd_dot(args) -> int:
    L = _load(args.file)
    _write_or_print(export_dot(L), args.output)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "props": _cmd_props,
    "defects": _cmd_defects,
    "relevance": _cmd_relevance,
    "capacity": _cmd_capacity,
    "witness": _cmd_witness,
    "generate": _cmd_generate,
    "enumerate": _cmd_enumerate,
    "dot": _cmd_dot,
}

def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as err:
        print(err, file=sys.stderr)
        return 3
    except (OrtholatError, OSError, IndexError, ValueError) as err:
        print(err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
