"""Acceptance criteria, one test each; every comparison is exact.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary, or to stdout when this file is run as a script.
"""

import random
import time

import pytest

from twistkit.hopf import TensorElement, apply_deltas, coproduct, counit_leg
from twistkit.liealg import (
    build_abstract,
    build_concrete,
    build_embedding,
    embedding_check,
    jacobi_check,
)
from twistkit.rmat import (
    classical_r,
    closed_form_r,
    cybe_check,
    poincare_r,
    pushforward,
    qybe_check,
)
from twistkit.scalars import GaussianRational
from twistkit.suites import (
    FACTORIZATIONS_FOR,
    REFERENCE_EMBEDDINGS,
    random_parameter_sets,
    reference_parameter_sets,
)
from twistkit.twistengine import (
    CARRIER,
    TWIST_FAMILIES,
    TwistContext,
    cocycle_check,
    coproduct_table_check,
    counit_check,
    factorization_check,
    twisted_coproduct,
)
from twistkit.uea import EnvelopingAlgebra

from oracles import naive_normal_order

PARAM_SETS = reference_parameter_sets() + random_parameter_sets(5, 0)
_CONTEXTS: dict = {}


def context(carrier, params, order=4):
    key = (carrier, tuple(params), order)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = TwistContext(EnvelopingAlgebra(build_abstract(carrier, *params), order))
    return _CONTEXTS[key]


def record(log, number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    log.append(line)
    print(line)
    assert ok, line


def test_criterion_1_cocycle(acceptance_log):
    slow = []
    failures = []
    for fam in TWIST_FAMILIES:
        t0 = time.perf_counter()
        for p in PARAM_SETS:
            res = cocycle_check(context(CARRIER[fam], p).bundle(fam))
            if res.status != "pass":
                failures.append(res.subject)
        elapsed = time.perf_counter() - t0
        if elapsed >= 60:
            slow.append(f"{fam} {elapsed:.1f}s")
    checked = len(TWIST_FAMILIES) * len(PARAM_SETS)
    record(acceptance_log, 1, "cocycle residual is zero at N=4", not failures and not slow,
           f"{checked} twist/parameter pairs; failures={failures}; slow={slow}")


def test_criterion_2_counit(acceptance_log):
    bad = [res.subject for fam in TWIST_FAMILIES for p in PARAM_SETS
           for res in [counit_check(context(CARRIER[fam], p).bundle(fam))] if not res.ok]
    record(acceptance_log, 2, "counit conditions hold for all six families", not bad,
           f"failures={bad}")


def test_criterion_3_coproduct_tables(acceptance_log):
    failures, ledger = [], set()
    complete = True
    for fam in TWIST_FAMILIES:
        for p in PARAM_SETS:
            for res in coproduct_table_check(context(CARRIER[fam], p), fam):
                if res.status == "fail":
                    failures.append(res.subject)
                for entry in res.ledger:
                    ledger.add((entry["table"], entry["generator"]))
                    complete &= bool(entry["verbatim"]) and bool(entry["corrected"])
    expected = {("Delta_F~", "A"), ("Delta_F", "H")}
    record(acceptance_log, 3, "coproduct tables match up to the shipped typo ledger",
           not failures and ledger == expected and complete,
           f"ledger={sorted(ledger)}; failures={failures}")


def test_criterion_4_factorizations(acceptance_log):
    failures = []
    count = 0
    for fam in TWIST_FAMILIES:
        for which in FACTORIZATIONS_FOR[fam]:
            for p in PARAM_SETS:
                for res in factorization_check(which, context(CARRIER[fam], p)):
                    count += 1
                    if not res.ok:
                        failures.append(res.subject)
    record(acceptance_log, 4, "factorization identities hold at N=4", not failures,
           f"{count} identities; failures={failures}")


def test_criterion_5_classical_r(acceptance_log):
    failures = []
    for fam in ("F", "Ftilde", "Fprime", "Ftildeprime"):
        for p in PARAM_SETS:
            r = classical_r(context(CARRIER[fam], p, order=2).bundle(fam))
            if r != closed_form_r(r.algebra, fam):
                failures.append(f"{fam} closed form {p}")
            if not cybe_check(r).ok:
                failures.append(f"{fam} CYBE {p}")
    record(acceptance_log, 5, "classical r-matrices match the closed forms and solve CYBE",
           not failures, f"failures={failures}")


def test_criterion_6_embeddings(acceptance_log):
    failures = []
    for fam, n in REFERENCE_EMBEDDINGS:
        report = embedding_check(build_embedding(fam, n))
        if len(report.relations) != 10 or not report.passed:
            failures.append(report.label)
    verbatim_ok = True
    for n in (2, 3):
        report = embedding_check(build_embedding("schrodinger", n, verbatim=True))
        named = {r.lhs for r in report.failures}
        # [J, H] holds for either H, so it is excluded from the failing set
        h_relations = {r.lhs for r in report.relations if "H" in r.lhs} - {("J", "H")}
        verbatim_ok &= named == h_relations == {("H", "E"), ("H", "A"), ("H", "B")}
    record(acceptance_log, 6, "embeddings pass; verbatim Schrödinger fails exactly on H",
           not failures and verbatim_ok, f"failures={failures}; verbatim ok={verbatim_ok}")


def test_criterion_7_poincare(acceptance_log):
    t0 = time.perf_counter()
    rec = build_embedding("poincare")
    ctx = TwistContext(EnvelopingAlgebra(rec.source, 2))
    r = pushforward(classical_r(ctx.bundle("F")), rec)
    matches = r == poincare_r(rec.target, 1)
    solves = cybe_check(r).ok
    elapsed = time.perf_counter() - t0
    record(acceptance_log, 7, "Poincaré pushforward equals the closed form and solves CYBE",
           matches and solves and elapsed < 10,
           f"match={matches}, cybe={solves}, {elapsed:.2f}s")


def test_criterion_8_qybe(acceptance_log):
    bad = []
    for fam in TWIST_FAMILIES:
        for p in PARAM_SETS[:2] + PARAM_SETS[4:5]:
            res = qybe_check(context(CARRIER[fam], p, order=3).bundle(fam))
            if not res.ok:
                bad.append(res.subject)
    record(acceptance_log, 8, "QYBE holds at N=3 for all six families", not bad, f"failures={bad}")


def _random_element(rng, U, n_terms=4, max_len=3):
    x = U.zero()
    for _ in range(n_terms):
        w = tuple(rng.randrange(U.alg.dim) for _ in range(rng.randint(0, max_len)))
        x = x + U.normal_order(w) * GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
    return x


def test_criterion_9_infrastructure(acceptance_log):
    problems = []
    g, d, m = PARAM_SETS[4]
    algebras = [build_abstract(f, g, d, m if f in ("L", "Lprime") else None)
                for f in ("Lc", "Lcd", "L", "Lprime")]
    algebras += [build_concrete("poincare")]
    algebras += [build_concrete(f, n) for f in ("isu", "iso", "schrodinger") for n in range(2, 9)]
    algebras += [build_embedding(f, n).target for f, n in REFERENCE_EMBEDDINGS]
    problems += [a.name for a in algebras if not jacobi_check(a).passed]

    rng = random.Random(0)
    alg = build_abstract("L", *PARAM_SETS[5])
    U = EnvelopingAlgebra(alg, 4)
    for _ in range(120):
        w = tuple(rng.randrange(alg.dim) for _ in range(rng.randint(0, 6)))
        if U.normal_order(w).terms != naive_normal_order(alg, w, 4):
            problems.append(f"normal order {w}")
    for _ in range(100):
        a, b, c = (_random_element(rng, U) for _ in range(3))
        if (a * b) * c != a * (b * c):
            problems.append("associativity")
    for _ in range(40):
        x = _random_element(rng, U)
        d = coproduct(x)
        if apply_deltas(d, "first") != apply_deltas(d, "second"):
            problems.append("coassociativity")
        if counit_leg(d, 0) != x or counit_leg(d, 1) != x:
            problems.append("counit")
    for fam in TWIST_FAMILIES:
        ctx = context(CARRIER[fam], PARAM_SETS[0], order=0)
        tw = ctx.bundle(fam)
        if tw.element != TensorElement.unit(ctx.U):
            problems.append(f"N=0 twist {fam}")
        for x in ctx.U.gens():
            if twisted_coproduct(tw, x) != coproduct(x):
                problems.append(f"N=0 coproduct {fam}")
    record(acceptance_log, 9, "infrastructure properties", not problems,
           f"{len(algebras)} algebras; problems={problems[:5]}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
