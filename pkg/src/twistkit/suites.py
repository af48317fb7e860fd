"""Named verification suites run by the CLI and the acceptance tests."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .liealg import (
    EmbeddingRecipe,
    LieAlgebraDef,
    build_abstract,
    build_embedding,
    dualize,
    embedding_check,
    jacobi_check,
)
from .report import CheckResult, status_of
from .rmat import classical_r, cybe_check, closed_form_r, poincare_r, pushforward, qybe_check
from .scalars import GaussianRational, gr, gr_format
from .twistengine import (
    CARRIER,
    DISPLAY,
    PRIMITIVES,
    TWIST_FAMILIES,
    TwistContext,
    classical_limit_check,
    cocycle_check,
    coproduct_table_check,
    counit_check,
    factorization_check,
    homomorphism_check,
    inverse_check,
    primitivity_check,
    twisted_coassociativity_check,
)
from .uea import EnvelopingAlgebra

SUITES = ("jacobi", "embedding", "cocycle", "counit", "coproducts", "factorization",
          "coassoc", "homomorphism", "primitives", "rmatrix", "cybe", "qybe",
          "classical-limit")

REFERENCE_EMBEDDINGS = (("poincare", 0), ("isu", 4), ("isu", 5), ("isu", 6),
                    ("iso", 4), ("iso", 5), ("schrodinger", 2), ("schrodinger", 3))

FACTORIZATIONS_FOR = {
    "FP": ("fac-FP", "fac-PhiP"),
    "FPprime": ("fac-FPprime", "fac-PhiPprime"),
    "F": ("fac-Phi",),
    "Ftilde": ("fac-Phi21",),
    "Fprime": ("fac-Phi",),
    "Ftildeprime": ("fac-Phi21",),
}


def reference_parameter_sets() -> list:
    """(γ, δ, μ) of the isu, iso, Schrödinger and Poincaré embeddings."""
    out = []
    for fam, n in (("isu", 4), ("iso", 4), ("schrodinger", 2), ("poincare", 0)):
        out.append(build_embedding(fam, n).params)
    return out


def _random_gr(rng: random.Random) -> GaussianRational:
    while True:
        re = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        im = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
        x = GaussianRational(re, im)
        if x:
            return x


def random_parameter_sets(trials: int, seed: int) -> list:
    rng = random.Random(seed)
    return [tuple(_random_gr(rng) for _ in range(3)) for _ in range(trials)]


def parse_params(text: str) -> tuple:
    """``γ=1,δ=1,μ=i`` (also gamma/delta/mu or g/d/m) -> (γ, δ, μ)."""
    keys = {"γ": 0, "gamma": 0, "g": 0, "δ": 1, "delta": 1, "d": 1,
            "μ": 2, "mu": 2, "m": 2}
    vals = [None, None, None]
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise ValueError(f"parameter {part!r} is not of the form name=value")
        k, v = part.split("=", 1)
        k = k.strip()
        if k not in keys:
            raise ValueError(f"unknown parameter {k!r}")
        vals[keys[k]] = gr(v.strip())
    if any(v is None for v in vals):
        raise ValueError("need all of γ, δ, μ")
    if any(not v for v in vals):
        raise ValueError("γ, δ, μ must be nonzero")
    return tuple(vals)


def format_params(p) -> str:
    return "γ={},δ={},μ={}".format(*(gr_format(x) for x in p))


@dataclass
class SuiteConfig:
    suites: tuple = ("all",)
    families: tuple = TWIST_FAMILIES
    param_sets: list = field(default_factory=list)
    order: int = 4
    qybe_order: int | None = None
    targets: list = field(default_factory=list)  # EmbeddingRecipe
    extra_algebras: list = field(default_factory=list)  # LieAlgebraDef for jacobi
    strict_paper: bool = False
    verbatim: bool = False


class _Contexts:
    def __init__(self, order):
        self.order = order
        self._cache = {}

    def get(self, carrier, params, order=None) -> TwistContext:
        order = self.order if order is None else order
        key = (carrier, params, order)
        if key not in self._cache:
            g, d, m = params
            self._cache[key] = TwistContext(
                EnvelopingAlgebra(build_abstract(carrier, g, d, m), order))
        return self._cache[key]


def _timed(fn, *args):
    t0 = time.perf_counter()
    res = fn(*args)
    dt = time.perf_counter() - t0
    items = res if isinstance(res, list) else [res]
    for r in items:
        r.seconds = dt / max(len(items), 1)
    return items


def embedding_results(rec: EmbeddingRecipe) -> list:
    rep = embedding_check(rec)
    out = []
    for rel in rep.relations:
        x, y = rel.lhs
        out.append(CheckResult("embedding", f"{rec.label}: [{x}, {y}] = {rel.expected}",
                               status_of(rel.passed), rel.residual))
    return out


def jacobi_result(alg: LieAlgebraDef) -> CheckResult:
    rep = jacobi_check(alg)
    residual = "; ".join(f"{t}: {r}" for t, r in rep.violations) or "0"
    return CheckResult("jacobi", alg.name, status_of(rep.passed), residual,
                       {"triples": rep.triples_checked})


def run(config: SuiteConfig) -> list:
    wanted = set(SUITES) if "all" in config.suites else set(config.suites)
    unknown = wanted - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    ctxs = _Contexts(config.order)
    results: list = []

    if "jacobi" in wanted:
        for p in config.param_sets:
            for fam in ("L", "Lprime"):
                results += _timed(jacobi_result, build_abstract(fam, *p))
        for rec in config.targets:
            results += _timed(jacobi_result, rec.target)
        for alg in config.extra_algebras:
            results += _timed(jacobi_result, alg)

    if "embedding" in wanted:
        for rec in config.targets:
            results += _timed(embedding_results, rec)
            if not config.verbatim:
                results += _timed(embedding_results, dualize(rec))

    for p in config.param_sets:
        for fam in config.families:
            ctx = ctxs.get(CARRIER[fam], p)
            tw = ctx.bundle(fam)
            if "cocycle" in wanted:
                results += _timed(cocycle_check, tw)
            if "counit" in wanted:
                results += _timed(counit_check, tw)
                results += _timed(inverse_check, tw)
            if "coproducts" in wanted:
                results += _timed(coproduct_table_check, ctx, fam, config.strict_paper)
            if "factorization" in wanted:
                for which in FACTORIZATIONS_FOR[fam]:
                    results += _timed(factorization_check, which, ctx)
            if "coassoc" in wanted:
                for i, s in enumerate(ctx.alg.symbols):
                    results += _timed(twisted_coassociativity_check, tw, ctx.U.gen(i), s)
            if "homomorphism" in wanted:
                n = ctx.alg.dim
                for i in range(n):
                    for j in range(i + 1, n):
                        results += _timed(homomorphism_check, tw, i, j)
            if "primitives" in wanted:
                for text in PRIMITIVES[fam]:
                    results += _timed(primitivity_check, tw, ctx, text)
            if "classical-limit" in wanted:
                results += _timed(classical_limit_check, tw)
            if "rmatrix" in wanted or "cybe" in wanted:
                rctx = ctxs.get(CARRIER[fam], p, min(config.order, 2))
                r = classical_r(rctx.bundle(fam))
                if "rmatrix" in wanted:
                    expected = closed_form_r(rctx.alg, fam)
                    diff = r - expected
                    results.append(CheckResult(
                        "rmatrix", f"{tw.subject}: r = {expected}",
                        status_of(diff.is_zero()), str(diff), {"computed": str(r)}))
                if "cybe" in wanted:
                    results += _timed(cybe_check, r, f"{tw.subject}: r = {r}")
            if "qybe" in wanted:
                qctx = ctxs.get(CARRIER[fam], p, config.qybe_order or min(config.order, 3))
                results += _timed(qybe_check, qctx.bundle(fam))

    if ("rmatrix" in wanted or "cybe" in wanted) and not config.verbatim:
        for rec in config.targets:
            results += target_rmatrix_results(rec, config.families, wanted)
    return results


def target_rmatrix_results(rec: EmbeddingRecipe, families, wanted) -> list:
    """Push the carrier r-matrices into the target; compare with the Poincaré formula."""
    out = []
    if not embedding_check(rec).passed:
        return [CheckResult("rmatrix", f"{rec.label}: pushforward", "fail",
                            "recipe is not a Lie homomorphism")]
    for fam in families:
        src = rec if CARRIER[fam] == "L" else dualize(rec)
        ctx = TwistContext(EnvelopingAlgebra(src.source, 2))
        r_t = pushforward(classical_r(ctx.bundle(fam)), src)
        subject = f"{src.label}: {DISPLAY[fam]} r pushed forward"
        if "cybe" in wanted:
            t0 = time.perf_counter()
            c = cybe_check(r_t, subject)
            c.seconds = time.perf_counter() - t0
            out.append(c)
        if "rmatrix" in wanted and rec.target.family == "poincare" and fam in ("F", "Ftilde"):
            sign = 1 if fam == "F" else -1
            diff = r_t - poincare_r(rec.target, sign)
            out.append(CheckResult("rmatrix", f"{subject} vs (±J_3+P_+)∧(J_-+iK_-)"
                                   f" + 2iK_3∧(P_t-P_3), sign {'+' if sign > 0 else '-'}",
                                   status_of(diff.is_zero()), str(diff),
                                   {"computed": str(r_t)}))
    return out


def summarize(results) -> dict:
    out = {s: 0 for s in ("pass", "fail", "recorded-mismatch", "vacuous")}
    for r in results:
        out[r.status] += 1
    return out


def typo_ledger(results) -> list:
    seen = {}
    for r in results:
        for entry in r.ledger:
            key = (entry["table"], entry["generator"], entry["corrected"])
            seen.setdefault(key, entry)
    return [seen[k] for k in sorted(seen)]
