from math import factorial

import pytest

from twistkit.hopf import TensorElement, coproduct, flip21, tensor, texp, tinverse
from twistkit.liealg import build_abstract
from twistkit.scalars import I, ONE, ZERO, gr
from twistkit.suites import reference_parameter_sets, random_parameter_sets
from twistkit.twistengine import (
    TWIST_FAMILIES,
    TwistBundle,
    TwistContext,
    build_primitives,
    classical_limit_check,
    cocycle_check,
    coproduct_table_check,
    counit_check,
    factorization_check,
    homomorphism_check,
    inverse_check,
    primitivity_check,
    twisted_coassociativity_check,
    twisted_coproduct,
)
from twistkit.uea import EnvelopingAlgebra, series_apply

PARAMS = reference_parameter_sets() + random_parameter_sets(5, 0)
ODD = (gr("3/2"), gr("-1+1/2i"), gr("2/3i"))


def ctx_for(family, params=ODD, order=4):
    return TwistContext.for_params(family, *params, order=order)


# -- series -------------------------------------------------------------------


def test_sigma_mercator():
    U = EnvelopingAlgebra(build_abstract("L", 1, 1, I), 3)
    p = build_primitives(U)
    E = U.gen("E")
    assert p.sigma == E - E * E / 2 + E * E * E / 3


@pytest.mark.parametrize("params", PARAMS[:6])
def test_primitive_series_invariants(params):
    g, d, m = params
    for fam in ("L", "Lprime"):
        U = EnvelopingAlgebra(build_abstract(fam, g, d, m), 4)
        p = build_primitives(U)
        E, A, B = U.gen("E"), U.gen("A"), U.gen("B")
        assert series_apply("exp", p.sigma * d) == E * g + 1
        if fam == "L":
            e_minus = series_apply("exp", p.sigma * -d)
            assert series_apply("exp", p.rho * m) == B * e_minus * m + 1
        else:
            assert series_apply("exp", p.rho_prime * m) == A * m + 1


def test_rho_prime_series():
    U = EnvelopingAlgebra(build_abstract("Lprime", 1, 1, 1), 4)
    A = U.gen("A")
    assert build_primitives(U).rho_prime == A - A ** 2 / 2 + A ** 3 / 3 - A ** 4 / 4


# -- twist elements -------------------------------------------------------------


def phi_j_oracle(U, gamma, delta):
    """e^{H⊗σ} = Σ H^k ⊗ σ^k / k!, with σ^k expanded as a polynomial in E."""
    N = U.order
    sigma = [ZERO] + [gr((-1) ** (j + 1)) * gamma ** j / (j * delta) for j in range(1, N + 1)]
    h, e = U.alg.index("H"), U.alg.index("E")
    terms = {}
    power = [ONE] + [ZERO] * N  # σ^0
    for k in range(N + 1):
        for j, c in enumerate(power):
            if c:
                left = ((h, k),) if k else ()
                right = ((e, j),) if j else ()
                terms[(left, right)] = c / factorial(k)
        power = [sum((power[a] * sigma[j - a] for a in range(j + 1)), ZERO)
                 for j in range(N + 1)]
    return TensorElement(U, 2, terms)


def test_phi_j_small_example():
    ctx = TwistContext(EnvelopingAlgebra(build_abstract("L", 1, 1, I), 2))
    U = ctx.U
    one, H, E = U.one(), U.gen("H"), U.gen("E")
    expected = (TensorElement.unit(U) + tensor(H, E) - tensor(H, E * E) / 2
                + tensor(H * H, E * E) / 2)
    assert ctx.bundle("Phi_j").element == expected


@pytest.mark.parametrize("params", PARAMS)
def test_phi_j_matches_oracle(params):
    ctx = ctx_for("Phi_j", params)
    assert ctx.bundle("Phi_j").element == phi_j_oracle(ctx.U, params[0], params[1])


def test_composites_are_products_in_order():
    ctx = ctx_for("F")
    b = ctx.bundle
    assert b("FP").element == b("Phi_P").element * b("Phi_j").element
    assert b("F").element == b("Phi").element * b("FP").element
    assert b("Ftilde").element == flip21(b("Phi").element) * b("FP").element
    assert len(b("F").factors) == 3
    ctxp = ctx_for("Fprime")
    bp = ctxp.bundle
    assert bp("Ftildeprime").element == flip21(bp("PhiPrime").element) * bp("FPprime").element


def test_incompatible_family_rejected():
    ctx = ctx_for("FPprime")
    with pytest.raises(ValueError):
        ctx.bundle("F")
    with pytest.raises(ValueError):
        ctx.bundle("nonsense")


@pytest.mark.parametrize("family", TWIST_FAMILIES)
def test_inverse_and_counit(family):
    tw = ctx_for(family).bundle(family)
    assert inverse_check(tw).ok
    assert counit_check(tw).ok


@pytest.mark.parametrize("family", TWIST_FAMILIES)
@pytest.mark.parametrize("params", PARAMS, ids=lambda p: ",".join(map(str, p)))
def test_cocycle(family, params):
    res = cocycle_check(ctx_for(family, params).bundle(family))
    assert res.status == "pass", res.residual


def test_cocycle_on_four_dimensional_carriers():
    for carrier, fam in (("Lc", "FP"), ("Lcd", "FPprime")):
        U = EnvelopingAlgebra(build_abstract(carrier, *ODD[:2]), 4)
        assert cocycle_check(TwistContext(U).bundle(fam)).ok


def test_cocycle_catches_dropped_factor():
    # Φ_P without its e^{-δσ} factor is not a twist on L
    ctx = ctx_for("FP")
    U = ctx.U
    bad = texp(tensor(U.gen("A"), U.gen("B"))) * ctx.bundle("Phi_j").element
    tw = TwistBundle("FP", U, [bad], bad, tinverse(bad), ctx.alg.params)
    res = cocycle_check(tw)
    assert res.status == "fail"
    assert res.residual != "0"


def test_cocycle_reports_degree_counts():
    res = cocycle_check(ctx_for("F").bundle("F"))
    counts = res.details["lhs_terms_by_degree"]
    assert set(counts) == {"0", "1", "2", "3", "4"}


# -- twisted coproducts ---------------------------------------------------------


def test_coproduct_examples_built_by_hand():
    g, d, m = ODD
    ctx = ctx_for("F")
    U = ctx.U
    one, J, E, A, B = U.one(), U.gen("J"), U.gen("E"), U.gen("A"), U.gen("B")
    e_dsigma = E * g + 1  # e^{δσ}
    e_minus_dsigma = series_apply("inverse", E * g)  # (1+γE)^{-1}
    e_minus_murho = series_apply("inverse", B * e_minus_dsigma * m)
    assert twisted_coproduct(ctx.bundle("FP"), E) == tensor(E, e_dsigma) + tensor(one, E)
    assert twisted_coproduct(ctx.bundle("F"), J) == tensor(J, e_minus_murho) + tensor(one, J)
    assert twisted_coproduct(ctx.bundle("FP"), J) == coproduct(J)
    ctxp = ctx_for("FPprime")
    Ap = ctxp.U.gen("A")
    assert twisted_coproduct(ctxp.bundle("FPprime"), Ap) == coproduct(Ap)


@pytest.mark.parametrize("family", TWIST_FAMILIES)
@pytest.mark.parametrize("params", PARAMS[3:6], ids=lambda p: ",".join(map(str, p)))
def test_coproduct_tables(family, params):
    results = coproduct_table_check(ctx_for(family, params), family)
    status = {r.subject.split(": ")[1]: r.status for r in results}
    assert "fail" not in status.values(), results
    mismatches = {k for k, v in status.items() if v == "recorded-mismatch"}
    if family == "Ftilde":
        assert mismatches == {"Δ(A) [Delta_F~]"}
    elif family == "F" and params[1] != 1:
        assert mismatches == {"Δ(H) [Delta_F]"}
    else:
        assert not mismatches
    if family in ("Ftilde", "Fprime"):
        table = "Delta_F~" if family == "Ftilde" else "Delta_F'"
        assert status[f"Δ(H) [{table}]"] == "vacuous"


def test_printed_f_table_h_formula_holds_at_unit_delta():
    ctx = ctx_for("F", (gr(2), ONE, gr("1/3i")))
    results = coproduct_table_check(ctx, "F")
    assert all(r.status == "pass" for r in results)


def test_ftilde_table_reading_adjudication():
    ctx = ctx_for("Ftilde")
    res = [r for r in coproduct_table_check(ctx, "Ftilde") if "Δ(A)" in r.subject][0]
    entry = res.ledger[0]
    assert entry["reading"] == "e^{-δσ} in the last factor"
    assert entry["rejected_readings"] == ["e^{-μρ} in the last factor"]
    assert entry["corrected"].endswith("J e^{-δσ}")
    strict = [r for r in coproduct_table_check(ctx, "Ftilde", strict=True) if "Δ(A)" in r.subject]
    assert strict[0].status == "fail"


def test_omitted_formulas_are_computed():
    res = [r for r in coproduct_table_check(ctx_for("Fprime"), "Fprime") if "Δ(H)" in r.subject]
    assert res[0].status == "vacuous"
    rendered = res[0].residual
    assert rendered.startswith("1 · (1 | H) + ") and " 1 · (H | 1) " in rendered
    assert "(J | A)" in rendered


@pytest.mark.parametrize("family", TWIST_FAMILIES)
def test_twisted_coassociativity_and_homomorphism(family):
    ctx = ctx_for(family, order=3)
    tw = ctx.bundle(family)
    for i, s in enumerate(ctx.alg.symbols):
        assert twisted_coassociativity_check(tw, ctx.U.gen(i), s).ok
    n = ctx.alg.dim
    for i in range(n):
        for j in range(i + 1, n):
            assert homomorphism_check(tw, i, j).ok


@pytest.mark.parametrize("family, elements", [
    ("FP", ["σ", "B e^{-δσ}", "J"]),
    ("FPprime", ["σ", "A", "J"]),
    ("F", ["σ", "ρ"]), ("Ftilde", ["σ", "ρ"]),
    ("Fprime", ["σ", "ρ'"]), ("Ftildeprime", ["σ", "ρ'"]),
])
def test_primitive_elements(family, elements):
    ctx = ctx_for(family)
    tw = ctx.bundle(family)
    for text in elements:
        assert primitivity_check(tw, ctx, text).ok, text
    # H is never primitive under these twists
    assert not primitivity_check(tw, ctx, "H").ok


# -- factorizations ---------------------------------------------------------------


@pytest.mark.parametrize("which, carrier", [
    ("fac-FP", "F"), ("fac-PhiP", "F"), ("fac-FPprime", "Fprime"), ("fac-PhiPprime", "Fprime"),
    ("fac-Phi", "F"), ("fac-Phi21", "F"), ("fac-Phi", "Fprime"), ("fac-Phi21", "Fprime"),
])
def test_factorizations(which, carrier):
    for params in (ODD, PARAMS[0]):
        results = factorization_check(which, ctx_for(carrier, params))
        assert len(results) == 2
        assert all(r.ok for r in results), [r.residual for r in results]


def test_factorization_with_wrong_coproduct_fails():
    # ρ is not primitive under the undeformed Δ, so (id⊗Δ)(Φ) does not split
    from twistkit.hopf import apply_deltas, leg_embed
    ctx = ctx_for("F")
    psi = ctx.bundle("Phi").element
    res = apply_deltas(psi, "second") - leg_embed(psi, "12") * leg_embed(psi, "13")
    assert not res.is_zero()
    # J is primitive, so the left identity holds even for Δ
    res = apply_deltas(psi, "first") - leg_embed(psi, "13") * leg_embed(psi, "23")
    assert res.is_zero()


# -- classical limit -------------------------------------------------------------


@pytest.mark.parametrize("family", TWIST_FAMILIES)
def test_classical_limit(family):
    results = classical_limit_check(ctx_for(family).bundle(family))
    assert all(r.status in ("pass", "vacuous") for r in results)
    vacuous = {r.subject.split("(")[-1][0] for r in results if r.status == "vacuous"}
    assert vacuous == ({"E", "B"} if family in ("FP", "F", "Ftilde") else {"E", "A"})


def test_order_zero_twist_is_trivial():
    for family in TWIST_FAMILIES:
        ctx = ctx_for(family, order=0)
        tw = ctx.bundle(family)
        assert tw.element == TensorElement.unit(ctx.U)
        H = ctx.U.gen("H")
        assert twisted_coproduct(tw, H) == coproduct(H)
