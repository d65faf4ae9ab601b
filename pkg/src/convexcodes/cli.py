"""Command-line frontend: analyze, code-of, verify, gen, link.

Exit-code contract: 0 for operational success (verdicts are report content,
never exit codes), 1 for operational errors such as parse failures, 2 for a
verification mismatch.  All output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .codes import (
    NeuralCode,
    Word,
    maximal_codewords,
    simplicial_complex,
    word,
    word_key,
    word_label,
)
from .formats import ParseError, parse_arrangement, parse_code, serialize_arrangement, serialize_code
from .generators import (
    CorpusEntry,
    corpus_entry,
    corpus_names,
    gen_an,
    gen_cn,
    gen_sn,
    realization_an_r2,
    realization_cn_rn,
    realization_sn_r2,
)
from .geometry import TopologyError, code_of_arrangement
from .topology import (
    Contractibility,
    ContractibilityResult,
    contractibility,
    is_locally_good,
    link,
    mandatory_codewords,
    reduced_homology,
)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything cmd_analyze prints, recomputable from the code alone."""

    code: NeuralCode
    maximal: tuple[Word, ...]
    max_intersection_complete: bool
    incompleteness_witness: tuple[tuple[Word, ...], Word] | None
    mandatory_table: tuple[tuple[Word, ContractibilityResult, bool], ...]
    locally_good: bool | None
    locally_good_checked: tuple[tuple[Word, ContractibilityResult], ...]
    betti: tuple[int, ...] | None


def build_analysis(code: NeuralCode, include_homology: bool = False) -> AnalysisReport:
    from .codes import is_max_intersection_complete

    cpx = simplicial_complex(code)
    mic = is_max_intersection_complete(code)
    witness = None
    if not mic.complete:
        witness = (mic.witness_sets, mic.witness_value)
    table = tuple(
        (f, res, f in code.words)
        for f, res in mandatory_codewords(cpx).items()
    )
    lg = is_locally_good(code)
    betti = reduced_homology(cpx) if include_homology else None
    return AnalysisReport(
        code=code,
        maximal=tuple(sorted(maximal_codewords(code), key=word_key)),
        max_intersection_complete=mic.complete,
        incompleteness_witness=witness,
        mandatory_table=table,
        locally_good=lg.verdict,
        locally_good_checked=lg.checked,
        betti=betti,
    )


def render_analysis(report: AnalysisReport) -> str:
    lines = [
        f"code: {report.code.n} neurons, {len(report.code.words)} codewords",
        "maximal codewords: " + " ".join(word_label(w) for w in report.maximal),
    ]
    if report.max_intersection_complete:
        lines.append("max-intersection complete: true")
    else:
        sets, value = report.incompleteness_witness
        inter = " & ".join(word_label(w) for w in sets)
        lines.append(
            f"max-intersection complete: false (witness: {inter} = {word_label(value)} not in code)"
        )
    if report.locally_good is True:
        verdict = "true"
    elif report.locally_good is False:
        verdict = "false"
    else:
        verdict = "unknown"
    lines.append(f"locally good: {verdict}")
    if report.locally_good_checked:
        for f, res in report.locally_good_checked:
            lines.append(f"  checked face {word_label(f)}: {res.describe()}")
    else:
        lines.append("  checked faces: none (all intersections of maximal codewords present)")
    lines.append("mandatory codewords of the code complex:")
    for f, res, in_code in report.mandatory_table:
        if res.status is Contractibility.NON_CONTRACTIBLE:
            kind = "mandatory"
        elif res.status is Contractibility.CONTRACTIBLE:
            kind = "non-mandatory"
        else:
            kind = "undetermined"
        lines.append(
            f"  face {word_label(f)}: {kind} ({res.describe()}), in code: {'yes' if in_code else 'no'}"
        )
    if report.betti is not None:
        rendered = " ".join(str(b) for b in report.betti)
        lines.append(f"reduced betti numbers of the code complex: {rendered}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def cmd_analyze(args: argparse.Namespace) -> int:
    code = parse_code(_read(args.code_file))
    report = build_analysis(code, include_homology=args.homology)
    sys.stdout.write(render_analysis(report))
    return 0


def cmd_code_of(args: argparse.Namespace) -> int:
    arr = parse_arrangement(_read(args.arrangement_file))
    sys.stdout.write(serialize_code(code_of_arrangement(arr)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    arr = parse_arrangement(_read(args.arrangement_file))
    given = parse_code(_read(args.code_file))
    extracted = code_of_arrangement(arr)
    if extracted.n == given.n and extracted.words == given.words:
        sys.stdout.write("ok: arrangement realizes the code\n")
        return 0
    lines = ["mismatch: arrangement code differs from the given code"]
    if extracted.n != given.n:
        lines.append(f"  set count {extracted.n} != neuron count {given.n}")
    only_arr = sorted(extracted.words - given.words, key=word_key)
    only_given = sorted(given.words - extracted.words, key=word_key)
    if only_arr:
        lines.append("  only in arrangement code:")
        lines.extend(f"    {word_label(w)}" for w in only_arr)
    if only_given:
        lines.append("  only in given code:")
        lines.extend(f"    {word_label(w)}" for w in only_given)
    sys.stdout.write("\n".join(lines) + "\n")
    return 2


_FAMILY_REALIZATIONS = {
    ("an", "r2"): realization_an_r2,
    ("sn", "r2"): realization_sn_r2,
    ("cn", "rn"): realization_cn_rn,
}

_FAMILY_CODES = {"an": gen_an, "sn": gen_sn, "cn": gen_cn}


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8", newline="\n")
    print(f"wrote {path}")


def cmd_gen(args: argparse.Namespace) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    family = args.family
    if family in _FAMILY_CODES:
        if args.n is None:
            raise ValueError(f"family {family!r} needs --n")
        n = args.n
        code = _FAMILY_CODES[family](n)
        _write(out / f"{family}_{n}.code", serialize_code(code))
        if args.realization is not None:
            builder = _FAMILY_REALIZATIONS.get((family, args.realization))
            if builder is None:
                raise ValueError(
                    f"family {family!r} has no {args.realization!r} realization"
                )
            arr = builder(n)
            _write(
                out / f"{family}_{args.realization}_{n}.arr", serialize_arrangement(arr)
            )
        return 0
    if family in corpus_names():
        entry: CorpusEntry = corpus_entry(family)
        if args.n is not None:
            raise ValueError(f"corpus entry {family!r} does not take --n")
        _write(out / f"{entry.name}.code", serialize_code(entry.code))
        for real in entry.realizations:
            _write(out / f"{real.stem}.arr", serialize_arrangement(real.arrangement))
        return 0
    raise ValueError(f"unknown family {family!r}")


def cmd_link(args: argparse.Namespace) -> int:
    code = parse_code(_read(args.code_file))
    try:
        face = word(int(t) for t in args.face.split())
    except ValueError as exc:
        raise ValueError(f"bad --face value: {exc}") from None
    cpx = simplicial_complex(code)
    if not cpx.has_face(face):
        raise ValueError(
            f"face {word_label(face)} is not in the code's simplicial complex"
        )
    lk = link(cpx, face)
    res = contractibility(lk)
    facets = " ".join(word_label(f) for f in lk.sorted_facets())
    sys.stdout.write(f"face: {word_label(face)}\n")
    sys.stdout.write(f"link facets: {facets}\n")
    sys.stdout.write(f"link status: {res.describe()}\n")
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; 2 is reserved for
    # verification mismatches here, so route usage errors through ValueError
    def error(self, message: str):  # noqa: D102
        raise ValueError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="convexcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a code file")
    p.add_argument("code_file")
    p.add_argument("--homology", action="store_true", help="include reduced betti numbers")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("code-of", help="extract the code of an arrangement file")
    p.add_argument("arrangement_file")
    p.set_defaults(func=cmd_code_of)

    p = sub.add_parser("verify", help="check that an arrangement realizes a code")
    p.add_argument("arrangement_file")
    p.add_argument("code_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write generated code/arrangement files")
    p.add_argument("family", help="an | sn | cn | a corpus entry name")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--realization", choices=["r2", "rn"], default=None)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("link", help="print the link of a face and its status")
    p.add_argument("code_file")
    p.add_argument("--face", required=True, help='face as space-separated indices, e.g. "1 3"')
    p.set_defaults(func=cmd_link)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, TopologyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
