"""twistkit command line: verify | show | export."""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import suites
from .liealg import (
    ABSTRACT_FAMILIES,
    CONCRETE_FAMILIES,
    EmbeddingRecipe,
    LieAlgebraDef,
    LieAlgebraError,
    build_abstract,
    build_concrete,
    build_embedding,
    dualize,
)
from .hopf import render_tensor
from .rmat import classical_r, pushforward
from .scalars import GaussianParseError
from .twistengine import (
    CARRIER,
    DISPLAY,
    FACTOR_FAMILIES,
    TWIST_FAMILIES,
    TwistContext,
    table_entries,
    twisted_coproduct,
)
from .uea import EnvelopingAlgebra, render

MAX_ORDER = 6
DEFAULT_SHOW_PARAMS = "γ=1,δ=1,μ=i"
GOLDEN_PARAMS = "γ=3/2,δ=-1+1/2i,μ=2/3i"


class UsageError(Exception):
    pass


def _split(values):
    out = []
    for v in values or []:
        out += [x for x in v.split(",") if x]
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", action="append",
                        help="twist family (FP, FPprime, F, Ftilde, Fprime, Ftildeprime); "
                             "for 'show algebra' also an algebra name")
    common.add_argument("--algebra", "--target", dest="algebra",
                        help=f"algebra: one of {', '.join(ABSTRACT_FAMILIES + CONCRETE_FAMILIES)}")
    common.add_argument("--algebra-file", type=Path, help="algebra definition JSON")
    common.add_argument("--embedding-file", type=Path, help="embedding recipe JSON")
    common.add_argument("--n", type=int, default=None, help="rank parameter of the target")
    common.add_argument("--params", help="γ=..,δ=..,μ=.. as Gaussian rationals")
    common.add_argument("--order", type=int, default=4, help="truncation order N (0..6)")
    common.add_argument("--trials", type=int, default=5, help="random parameter triples")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verbatim", action="store_true",
                        help="use embedding formulas exactly as printed")
    common.add_argument("--strict-paper", action="store_true",
                        help="treat recorded formula mismatches as failures")
    common.add_argument("--timing", action="store_true", help="include timings in reports")
    common.add_argument("--output", "-o", type=Path, help="write the report here")

    p = argparse.ArgumentParser(prog="twistkit",
                                description="Exact verification of twisted enveloping algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append",
                   help=f"one of {', '.join(suites.SUITES)} or all (repeatable)")
    s = sub.add_parser("show", parents=[common], help="print algebras, twists, coproducts")
    s.add_argument("what", choices=("algebra", "embedding", "twist", "primitives",
                                    "coproduct", "rmatrix"))
    s.add_argument("--generator", action="append", help="generator for 'show coproduct'")
    e = sub.add_parser("export", parents=[common], help="write JSON documents or golden files")
    e.add_argument("what", choices=("algebra", "embedding", "golden", "schema"))
    e.add_argument("--out", type=Path, required=True, help="output file or directory")
    return p


def _check_common(args):
    if not 0 <= args.order <= MAX_ORDER:
        raise UsageError(f"--order must be in [0, {MAX_ORDER}]")
    if args.trials < 0:
        raise UsageError("--trials must be nonnegative")
    fams = _split(args.family)
    return fams


def _twist_families(fams):
    if not fams:
        return list(TWIST_FAMILIES)
    bad = [f for f in fams if f not in TWIST_FAMILIES]
    if bad:
        raise UsageError(f"unknown twist family {bad[0]!r}")
    return fams


def _load_json(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _targets(args, name):
    """Embedding recipes selected by --algebra/--n/--embedding-file."""
    if args.embedding_file:
        return [EmbeddingRecipe.from_json(_load_json(args.embedding_file))]
    if name in CONCRETE_FAMILIES:
        if args.n is None and name != "poincare":
            return [build_embedding(f, n, verbatim=args.verbatim)
                    for f, n in suites.REFERENCE_EMBEDDINGS if f == name]
        return [build_embedding(name, args.n or 0, verbatim=args.verbatim)]
    return []


def cmd_verify(args) -> tuple[dict, int]:
    fams = _twist_families(_check_common(args))
    wanted = _split(args.suite) or ["all"]
    name = args.algebra
    if name and name not in ABSTRACT_FAMILIES + CONCRETE_FAMILIES:
        raise UsageError(f"unknown algebra {name!r}")
    targets = _targets(args, name)
    extra = []
    if args.algebra_file:
        extra.append(LieAlgebraDef.from_json(_load_json(args.algebra_file)))
    if name in CONCRETE_FAMILIES or args.embedding_file:
        pass
    elif "embedding" in wanted and not targets:
        targets = [build_embedding(f, n, verbatim=args.verbatim)
                   for f, n in suites.REFERENCE_EMBEDDINGS]
    if args.params:
        param_sets = [suites.parse_params(args.params)]
    elif targets and (name in CONCRETE_FAMILIES or args.embedding_file):
        param_sets = []
        for rec in targets:
            if rec.params not in param_sets:
                param_sets.append(rec.params)
    else:
        param_sets = (suites.reference_parameter_sets()
                      + suites.random_parameter_sets(args.trials, args.seed))
    if args.verbatim:
        # verbatim recipes only make sense for the Lie-level checks
        wanted = [w for w in wanted if w in ("jacobi", "embedding")] or ["embedding"]
    config = suites.SuiteConfig(
        suites=tuple(wanted), families=tuple(fams), param_sets=param_sets,
        order=args.order, targets=targets, extra_algebras=extra,
        strict_paper=args.strict_paper, verbatim=args.verbatim)
    try:
        results = suites.run(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results.sort(key=lambda r: (r.check, r.subject))
    summary = suites.summarize(results)
    code = 1 if summary["fail"] else 0
    report = {
        "tool": "twistkit",
        "command": "verify",
        "config": {
            "suites": sorted(wanted),
            "families": list(fams),
            "algebra": name,
            "n": args.n,
            "params": [suites.format_params(p) for p in param_sets],
            "order": args.order,
            "trials": args.trials,
            "seed": args.seed,
            "verbatim": args.verbatim,
            "strict_paper": args.strict_paper,
        },
        "results": [r.to_json(args.timing) for r in results],
        "summary": summary,
        "typo_ledger": suites.typo_ledger(results),
        "exit_code": code,
    }
    return report, code


def render_verify_text(report: dict) -> str:
    lines = []
    for r in report["results"]:
        t = f" ({r['seconds']:.3f}s)" if "seconds" in r else ""
        lines.append(f"[{r['status'].upper():>17}] {r['check']}: {r['subject']}{t}")
        if r["status"] in ("fail", "recorded-mismatch"):
            lines.append(f"    residual: {r['residual']}")
    if report["typo_ledger"]:
        lines.append("")
        lines.append("formula ledger:")
        for e in report["typo_ledger"]:
            lines.append(f"  ({e['table']}) Δ({e['generator']}): {e['note']}")
            lines.append(f"    printed:  {e['verbatim']}")
            lines.append(f"    computed: {e['corrected']}")
    s = report["summary"]
    lines.append("")
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in s.items()))
    return "\n".join(lines)


def _show_params(args):
    return suites.parse_params(args.params or DEFAULT_SHOW_PARAMS)


def _algebra_for_show(args, fams):
    if args.algebra_file:
        return LieAlgebraDef.from_json(_load_json(args.algebra_file))
    name = args.algebra or (fams[0] if fams else "L")
    if name in ABSTRACT_FAMILIES:
        g, d, m = _show_params(args)
        return build_abstract(name, g, d, m if name in ("L", "Lprime") else None)
    if name in CONCRETE_FAMILIES:
        default_n = {"isu": 4, "iso": 4, "schrodinger": 2, "poincare": 0}[name]
        return build_concrete(name, args.n if args.n is not None else default_n)
    raise UsageError(f"unknown algebra {name!r}")


def algebra_text(alg: LieAlgebraDef) -> str:
    lines = [f"{alg.name}: {alg.dim} generators"]
    lines.append("  " + ", ".join(f"{s}[z^{d}]" if d else s
                                  for s, d in zip(alg.symbols, alg.zdegrees)))
    for (i, j), rhs in sorted(alg.brackets.items()):
        lines.append(f"  [{alg.symbols[i]}, {alg.symbols[j]}] = {alg.render(rhs)}")
    return "\n".join(lines)


def cmd_show(args) -> tuple[object, int]:
    fams = _check_common(args)
    if args.what == "algebra":
        alg = _algebra_for_show(args, fams)
        return (alg.to_json() if args.format == "json" else algebra_text(alg)), 0
    if args.what == "embedding":
        name = args.algebra or (fams[0] if fams else "poincare")
        recs = _targets(args, name)
        if not recs:
            raise UsageError("show embedding needs a concrete --algebra")
        if args.format == "json":
            return [r.to_json() for r in recs], 0
        out = []
        for rec in recs:
            out.append(f"{rec.label}: {suites.format_params(rec.params)}")
            for s in rec.source.symbols:
                out.append(f"  {s} -> {rec.target.render(rec.images[s])}")
        return "\n".join(out), 0

    all_fams = TWIST_FAMILIES + FACTOR_FAMILIES
    fams = fams or ["F"]
    for f in fams:
        if f not in all_fams:
            raise UsageError(f"unknown twist family {f!r}")
    g, d, m = _show_params(args)
    docs, lines = [], []
    for fam in fams:
        ctx = TwistContext(EnvelopingAlgebra(build_abstract(CARRIER[fam], g, d, m), args.order))
        tw = ctx.bundle(fam)
        if args.what == "twist":
            docs.append({"family": fam, "subject": tw.subject,
                         "element": render_tensor(tw.element),
                         "inverse": render_tensor(tw.inverse)})
            lines += [tw.subject, f"  element: {render_tensor(tw.element)}",
                      f"  inverse: {render_tensor(tw.inverse)}"]
        elif args.what == "primitives":
            for k, v in ctx.prims.as_dict().items():
                if v is not None:
                    docs.append({"name": k, "series": render(v)})
                    lines.append(f"{k} = {render(v)}")
        elif args.what == "coproduct":
            gens = _split(args.generator) or list(ctx.alg.symbols)
            for s in gens:
                if s not in ctx.alg.symbols:
                    raise UsageError(f"{s!r} is not a generator of {ctx.alg.name}")
                entries = [e for e in table_entries(fam) if e.generator == s]
                printed = entries[0].verbatim if entries else None
                value = twisted_coproduct(tw, ctx.U.gen(s))
                docs.append({"family": fam, "generator": s, "printed": printed,
                             "series": render_tensor(value)})
                lines.append(f"Δ_{DISPLAY[fam]}({s}) on {ctx.alg.name}, "
                             f"{suites.format_params((g, d, m))}, N={args.order}")
                if printed:
                    lines.append(f"  formula: {printed}")
                lines.append(f"  series:  {render_tensor(value)}")
        elif args.what == "rmatrix":
            low = TwistContext(EnvelopingAlgebra(ctx.alg, 2)).bundle(fam)
            r = classical_r(low)
            symbolic = _symbolic_r(fam)
            doc = {"family": fam, "formula": symbolic, "r": r.to_json()}
            lines.append(f"r[{DISPLAY[fam]}] = {symbolic}")
            lines.append(f"  = {r}   ({suites.format_params((g, d, m))})")
            if args.algebra in CONCRETE_FAMILIES or args.embedding_file:
                for rec in _targets(args, args.algebra):
                    src = rec if CARRIER[fam] == "L" else dualize(rec)
                    ctx2 = TwistContext(EnvelopingAlgebra(src.source, 2))
                    rt = pushforward(classical_r(ctx2.bundle(fam)), src)
                    doc.setdefault("pushforward", {})[rec.label] = rt.to_json()
                    lines.append(f"  in {rec.label}: {rt}")
            docs.append(doc)
    return (docs if args.format == "json" else "\n".join(lines)), 0


def _symbolic_r(fam: str) -> str:
    base = "A∧B + (γ/δ)H∧E"
    return {
        "F": "J∧B + " + base, "Ftilde": "-J∧B + " + base,
        "Fprime": "J∧A + " + base, "Ftildeprime": "-J∧A + " + base,
    }.get(fam, base)


def golden_documents(order: int = 4) -> dict:
    """Renderings of every coproduct-table generator, keyed by file name."""
    g, d, m = suites.parse_params(GOLDEN_PARAMS)
    files = {}
    for fam in TWIST_FAMILIES:
        ctx = TwistContext(EnvelopingAlgebra(build_abstract(CARRIER[fam], g, d, m), order))
        tw = ctx.bundle(fam)
        lines = [f"# twisted coproducts, {tw.subject}"]
        for s in ctx.alg.symbols:
            entries = [e for e in table_entries(fam) if e.generator == s]
            printed = entries[0].verbatim if entries else None
            lines.append(f"Δ({s})  [{'printed: ' + printed if printed else 'no printed formula'}]")
            lines.append(render_tensor(twisted_coproduct(tw, ctx.U.gen(s))))
        files[f"coproducts_{fam}.txt"] = "\n".join(lines) + "\n"
    return files


def report_schema() -> dict:
    text = resources.files("twistkit").joinpath("schemas/report.schema.json").read_text("utf-8")
    return json.loads(text)


def cmd_export(args) -> tuple[object, int]:
    fams = _check_common(args)
    out: Path = args.out
    if args.what == "golden":
        out.mkdir(parents=True, exist_ok=True)
        docs = golden_documents(args.order)
        for name, text in docs.items():
            (out / name).write_text(text, encoding="utf-8")
        return f"wrote {len(docs)} golden files to {out}", 0
    if args.what == "schema":
        doc = report_schema()
    elif args.what == "algebra":
        doc = _algebra_for_show(args, fams).to_json()
    else:
        recs = _targets(args, args.algebra or "poincare")
        if not recs:
            raise UsageError("export embedding needs a concrete --algebra")
        doc = recs[0].to_json() if len(recs) == 1 else [r.to_json() for r in recs]
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return f"wrote {out}", 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2, --help with 0
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            report, code = cmd_verify(args)
            text = (json.dumps(report, indent=2, ensure_ascii=False)
                    if args.format == "json" else render_verify_text(report))
        elif args.command == "show":
            payload, code = cmd_show(args)
            text = (json.dumps(payload, indent=2, ensure_ascii=False)
                    if args.format == "json" else payload)
        else:
            text, code = cmd_export(args)
    except (UsageError, LieAlgebraError, GaussianParseError, ValueError, KeyError) as exc:
        print(f"twistkit: error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "output", None) and args.command != "export":
        args.output.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
