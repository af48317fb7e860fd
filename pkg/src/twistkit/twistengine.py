"""Twisting elements on the carrier algebras and the identities they satisfy.

Families::

    Phi_j       = exp(H ⊗ σ)                σ  = ln(1 + γE)/δ
    Phi_P       = exp(A ⊗ B e^{-δσ})        (L^c, L)
    Phi_Pprime  = exp(A ⊗ B)                (L'^c, L')
    Phi         = exp(J ⊗ ρ)                ρ  = ln(1 + μ B e^{-δσ})/μ   (L)
    PhiPrime    = exp(J ⊗ ρ')               ρ' = ln(1 + μA)/μ            (L')
    FP = Phi_P Phi_j,   FPprime = Phi_Pprime Phi_j
    F  = Phi FP,        Ftilde  = Phi_21 FP
    Fprime = PhiPrime FPprime,  Ftildeprime = PhiPrime_21 FPprime

Products are written left to right as typeset: ``Phi FP`` puts Phi on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .formula import FormulaEnv, evaluate, evaluate_tensor
from .hopf import (
    TensorElement,
    apply_deltas,
    coproduct,
    counit_leg,
    flip21,
    leg_embed,
    render_tensor,
    tensor,
    texp,
    tinverse,
)
from .liealg import LieAlgebraDef, build_abstract
from .report import CheckResult, status_of
from .uea import EnvelopingAlgebra, UEAElement, render, series_apply

TWIST_FAMILIES = ("FP", "FPprime", "F", "Ftilde", "Fprime", "Ftildeprime")
FACTOR_FAMILIES = ("Phi_j", "Phi_P", "Phi_Pprime", "Phi", "Phi21", "PhiPrime",
                   "PhiPrime21")
ALL_FAMILIES = TWIST_FAMILIES + FACTOR_FAMILIES

# which carrier algebras a family may be built on
_COMPATIBLE = {
    "Phi_j": {"Lc", "Lcd", "L", "Lprime"},
    "Phi_P": {"Lc", "L"},
    "FP": {"Lc", "L"},
    "Phi_Pprime": {"Lcd", "Lprime"},
    "FPprime": {"Lcd", "Lprime"},
    "Phi": {"L"},
    "Phi21": {"L"},
    "F": {"L"},
    "Ftilde": {"L"},
    "PhiPrime": {"Lprime"},
    "PhiPrime21": {"Lprime"},
    "Fprime": {"Lprime"},
    "Ftildeprime": {"Lprime"},
}

# default carrier for each family
CARRIER = {
    "FP": "L", "F": "L", "Ftilde": "L", "Phi": "L", "Phi21": "L", "Phi_P": "L",
    "FPprime": "Lprime", "Fprime": "Lprime", "Ftildeprime": "Lprime",
    "PhiPrime": "Lprime", "PhiPrime21": "Lprime", "Phi_Pprime": "Lprime",
    "Phi_j": "L",
}

DISPLAY = {
    "FP": "F_P", "FPprime": "F_P'", "F": "F", "Ftilde": "F~", "Fprime": "F'",
    "Ftildeprime": "F~'", "Phi_j": "Phi_j", "Phi_P": "Phi_P",
    "Phi_Pprime": "Phi_P'", "Phi": "Phi", "Phi21": "Phi_21", "PhiPrime": "Phi'",
    "PhiPrime21": "Phi'_21",
}


class TwistError(ValueError):
    pass


@dataclass
class PrimitiveSeries:
    sigma: UEAElement
    rho: UEAElement | None = None
    rho_prime: UEAElement | None = None
    exp_cache: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"sigma": self.sigma, "rho": self.rho, "rho_prime": self.rho_prime}


@dataclass
class TwistBundle:
    family: str
    algebra: EnvelopingAlgebra
    factors: list
    element: TensorElement
    inverse: TensorElement
    params: tuple

    @property
    def alg(self) -> LieAlgebraDef:
        return self.algebra.alg

    @property
    def subject(self) -> str:
        g, d, m = (str(p) for p in self.params)
        return f"{DISPLAY[self.family]} on {self.alg.name}(γ={g},δ={d},μ={m}) N={self.algebra.order}"


def build_primitives(U: EnvelopingAlgebra) -> PrimitiveSeries:
    """σ, and ρ (L family) or ρ' (L' family), as truncated series."""
    alg = U.alg
    if alg.family not in _COMPATIBLE["Phi_j"]:
        raise TwistError(f"{alg.name} is not a carrier algebra")
    gamma, delta, mu = alg.params
    sigma = series_apply("log1p", U.gen("E") * gamma) / delta
    prims = PrimitiveSeries(sigma)
    e_minus = series_apply("exp", sigma * -delta)
    prims.exp_cache["e^{-δσ}"] = e_minus
    if alg.family in ("L", "Lc") and mu:
        Y = U.gen("B") * e_minus
        prims.rho = series_apply("log1p", Y * mu) / mu
    if alg.family in ("Lprime", "Lcd") and mu:
        prims.rho_prime = series_apply("log1p", U.gen("A") * mu) / mu
    return prims


class TwistContext:
    """All twists on one truncated carrier algebra, built lazily and cached."""

    def __init__(self, U: EnvelopingAlgebra):
        self.U = U
        self.alg = U.alg
        self._bundles: dict = {}

    @classmethod
    def for_params(cls, family: str, gamma, delta, mu, order: int = 4) -> "TwistContext":
        carrier = CARRIER.get(family, family)
        return cls(EnvelopingAlgebra(build_abstract(carrier, gamma, delta, mu), order))

    @cached_property
    def prims(self) -> PrimitiveSeries:
        return build_primitives(self.U)

    @cached_property
    def env(self) -> FormulaEnv:
        return FormulaEnv(self.U, self.alg.params, self.prims.as_dict())

    def expr(self, text: str) -> UEAElement:
        return evaluate(text, self.env)

    def texpr(self, text: str) -> TensorElement:
        return evaluate_tensor(text, self.env)

    def _factor(self, family: str) -> TensorElement:
        U, p = self.U, self.prims
        if family == "Phi_j":
            return texp(tensor(U.gen("H"), p.sigma))
        if family == "Phi_P":
            return texp(tensor(U.gen("A"), U.gen("B") * p.exp_cache["e^{-δσ}"]))
        if family == "Phi_Pprime":
            return texp(tensor(U.gen("A"), U.gen("B")))
        if family == "Phi":
            return texp(tensor(U.gen("J"), p.rho))
        if family == "Phi21":
            return flip21(self.bundle("Phi").element)
        if family == "PhiPrime":
            return texp(tensor(U.gen("J"), p.rho_prime))
        if family == "PhiPrime21":
            return flip21(self.bundle("PhiPrime").element)
        raise TwistError(f"unknown factor {family!r}")

    _COMPOSITE = {
        "FP": ("Phi_P", "Phi_j"),
        "FPprime": ("Phi_Pprime", "Phi_j"),
        "F": ("Phi", "FP"),
        "Ftilde": ("Phi21", "FP"),
        "Fprime": ("PhiPrime", "FPprime"),
        "Ftildeprime": ("PhiPrime21", "FPprime"),
    }

    def bundle(self, family: str) -> TwistBundle:
        if family in self._bundles:
            return self._bundles[family]
        if family not in _COMPATIBLE:
            raise TwistError(f"unknown twist family {family!r}")
        if self.alg.family not in _COMPATIBLE[family]:
            raise TwistError(f"{DISPLAY[family]} cannot be built on {self.alg.name}")
        if family in self._COMPOSITE:
            left, right = (self.bundle(f) for f in self._COMPOSITE[family])
            factors = left.factors + right.factors
            element = left.element * right.element
        else:
            element = self._factor(family)
            factors = [element]
        tw = TwistBundle(family, self.U, factors, element, tinverse(element),
                         self.alg.params)
        self._bundles[family] = tw
        return tw


def build_twist(family: str, alg: LieAlgebraDef, order: int = 4) -> TwistBundle:
    return TwistContext(EnvelopingAlgebra(alg, order)).bundle(family)


# ---------------------------------------------------------------------------
# basic identities


def twisted_coproduct(tw: TwistBundle, x: UEAElement) -> TensorElement:
    """Δ_F(x) = F Δ(x) F^{-1}."""
    return tw.element * coproduct(x) * tw.inverse


def _residual_result(check, subject, residual: TensorElement | UEAElement, **details):
    if isinstance(residual, TensorElement):
        text = render_tensor(residual)
        details.setdefault("residual_terms_by_degree",
                           {str(k): v for k, v in sorted(residual.degree_counts().items())})
    else:
        text = render(residual)
    return CheckResult(check, subject, status_of(residual.is_zero()), text, details)


def inverse_check(tw: TwistBundle) -> CheckResult:
    one = TensorElement.unit(tw.algebra, 2)
    res = (tw.element * tw.inverse - one) + (tw.inverse * tw.element - one)
    return _residual_result("inverse", tw.subject, res)


def counit_check(tw: TwistBundle) -> CheckResult:
    """(ε⊗id)(F) = (id⊗ε)(F) = 1."""
    one = tw.algebra.one()
    left = counit_leg(tw.element, 0) - one
    right = counit_leg(tw.element, 1) - one
    ok = left.is_zero() and right.is_zero()
    return CheckResult("counit", tw.subject, status_of(ok),
                       f"(ε⊗id): {render(left)}; (id⊗ε): {render(right)}")


def cocycle_check(tw: TwistBundle) -> CheckResult:
    """F_12 (Δ⊗id)(F) - F_23 (id⊗Δ)(F) in three legs."""
    F = tw.element
    lhs = leg_embed(F, "12") * apply_deltas(F, "first")
    rhs = leg_embed(F, "23") * apply_deltas(F, "second")
    res = lhs - rhs
    return _residual_result(
        "cocycle", tw.subject, res,
        lhs_terms_by_degree={str(k): v for k, v in sorted(lhs.degree_counts().items())})


def twisted_coassociativity_check(tw: TwistBundle, x: UEAElement, name: str = "") -> CheckResult:
    d = twisted_coproduct(tw, x)
    res = apply_deltas(d, "first", tw) - apply_deltas(d, "second", tw)
    return _residual_result("coassoc", f"{tw.subject}: {name or render(x)}", res)


def homomorphism_check(tw: TwistBundle, i: int, j: int) -> CheckResult:
    """Δ_F([x_i, x_j]) = [Δ_F(x_i), Δ_F(x_j)]."""
    U = tw.algebra
    xi, xj = U.gen(i), U.gen(j)
    di, dj = twisted_coproduct(tw, xi), twisted_coproduct(tw, xj)
    res = twisted_coproduct(tw, xi * xj - xj * xi) - (di * dj - dj * di)
    s = U.alg.symbols
    return _residual_result("homomorphism", f"{tw.subject}: [{s[i]}, {s[j]}]", res)


def primitivity_check(tw: TwistBundle, ctx: TwistContext, text: str) -> CheckResult:
    x = ctx.expr(text)
    res = twisted_coproduct(tw, x) - tensor(x, tw.algebra.one()) - tensor(tw.algebra.one(), x)
    return _residual_result("primitive", f"{tw.subject}: {text}", res)


# ---------------------------------------------------------------------------
# coproduct tables


@dataclass(frozen=True)
class TableEntry:
    label: str  # name of the coproduct table
    family: str
    generator: str
    verbatim: str | None  # None: not given in print; computed for the record only
    readings: tuple = ()  # alternative readings, (name, formula)
    note: str = ""


COPRODUCT_TABLES = (
    # Δ_P on L^c / L
    TableEntry("Delta_P", "FP", "H", "H ⊗ e^{-δσ} + 1 ⊗ H - δ A ⊗ B e^{-2δσ}"),
    TableEntry("Delta_P", "FP", "A", "A ⊗ e^{-δσ} + 1 ⊗ A"),
    TableEntry("Delta_P", "FP", "B", "B ⊗ e^{δσ} + e^{δσ} ⊗ B"),
    TableEntry("Delta_P", "FP", "E", "E ⊗ e^{δσ} + 1 ⊗ E"),
    TableEntry("Delta_J", "FP", "J", "J ⊗ 1 + 1 ⊗ J"),
    # Δ_P' on L'^c / L'
    TableEntry("Delta_P'", "FPprime", "H", "H ⊗ e^{-δσ} + 1 ⊗ H - δ A ⊗ B e^{-δσ}"),
    TableEntry("Delta_P'", "FPprime", "A", "A ⊗ 1 + 1 ⊗ A"),
    TableEntry("Delta_P'", "FPprime", "B", "B ⊗ 1 + e^{δσ} ⊗ B"),
    TableEntry("Delta_P'", "FPprime", "E", "E ⊗ e^{δσ} + 1 ⊗ E"),
    TableEntry("Delta_J", "FPprime", "J", "J ⊗ 1 + 1 ⊗ J"),
    # Δ_F on L
    TableEntry("Delta_F", "F", "J", "J ⊗ e^{-μρ} + 1 ⊗ J"),
    TableEntry(
        "Delta_F", "F", "H",
        "H ⊗ e^{-δσ} + 1 ⊗ H - J ⊗ e^{-μρ} {(δ-1) B e^{-δσ} + B e^{-2δσ}}"
        " - δ A ⊗ B e^{-2δσ-μρ}",
        readings=(("δ B e^{-2δσ} in the J term",
                   "H ⊗ e^{-δσ} + 1 ⊗ H - δ J ⊗ e^{-μρ} B e^{-2δσ} - δ A ⊗ B e^{-2δσ-μρ}"),),
        note="printed J-term coefficient agrees with the series only at δ = 1",
    ),
    TableEntry("Delta_F", "F", "A", "A ⊗ e^{-δσ-μρ} + 1 ⊗ A - γ J ⊗ E e^{-δσ-μρ}"),
    TableEntry("Delta_F", "F", "B", "B ⊗ e^{δσ+μρ} + e^{δσ} ⊗ B"),
    TableEntry("Delta_F", "F", "E", "E ⊗ e^{δσ} + 1 ⊗ E"),
    # Δ_F~ on L
    TableEntry("Delta_F~", "Ftilde", "J", "J ⊗ 1 + e^{-μρ} ⊗ J"),
    TableEntry("Delta_F~", "Ftilde", "H", None, note="not given in print"),
    TableEntry(
        "Delta_F~", "Ftilde", "A",
        "A ⊗ e^{-δσ} + e^{-μρ} ⊗ A - γ E e^{-δσ-μρ} ⊗ J e^{-σμ}",
        readings=(
            ("e^{-μρ} in the last factor",
             "A ⊗ e^{-δσ} + e^{-μρ} ⊗ A - γ E e^{-δσ-μρ} ⊗ J e^{-μρ}"),
            ("e^{-δσ} in the last factor",
             "A ⊗ e^{-δσ} + e^{-μρ} ⊗ A - γ E e^{-δσ-μρ} ⊗ J e^{-δσ}"),
        ),
        note="printed last factor e^{-σμ}",
    ),
    TableEntry("Delta_F~", "Ftilde", "B", "B ⊗ e^{δσ} + e^{δσ+μρ} ⊗ B"),
    TableEntry("Delta_F~", "Ftilde", "E", "E ⊗ e^{δσ} + 1 ⊗ E"),
    # Δ_F' on L'
    TableEntry("Delta_F'", "Fprime", "J", "J ⊗ e^{-μρ'} + 1 ⊗ J"),
    TableEntry("Delta_F'", "Fprime", "H", None, note="not given in print"),
    TableEntry("Delta_F'", "Fprime", "A", "A ⊗ e^{μρ'} + 1 ⊗ A"),
    TableEntry("Delta_F'", "Fprime", "B",
               "B ⊗ e^{-μρ'} + e^{δσ} ⊗ B + γ J e^{δσ} ⊗ E e^{-μρ'}"),
    TableEntry("Delta_F'", "Fprime", "E", "E ⊗ e^{δσ} + 1 ⊗ E"),
    # Δ_F~' on L'
    TableEntry("Delta_F~'", "Ftildeprime", "J", "J ⊗ 1 + e^{-μρ'} ⊗ J"),
    TableEntry("Delta_F~'", "Ftildeprime", "H",
               "H ⊗ e^{-δσ} + 1 ⊗ H + (δ/μ)(e^{-μρ'} - 1) ⊗ J e^{-δσ}"
               " - δ A e^{-μρ'} ⊗ B e^{-δσ}"),
    TableEntry("Delta_F~'", "Ftildeprime", "A", "A ⊗ 1 + e^{μρ'} ⊗ A"),
    TableEntry("Delta_F~'", "Ftildeprime", "B",
               "B ⊗ 1 + e^{δσ-μρ'} ⊗ B + γ E e^{-μρ'} ⊗ J"),
    TableEntry("Delta_F~'", "Ftildeprime", "E", "E ⊗ e^{δσ} + 1 ⊗ E"),
)

# elements claimed primitive under each twisted coproduct
PRIMITIVES = {
    "FP": ("σ", "B e^{-δσ}", "J"),
    "FPprime": ("σ", "A", "J"),
    "F": ("σ", "ρ"),
    "Ftilde": ("σ", "ρ"),
    "Fprime": ("σ", "ρ'"),
    "Ftildeprime": ("σ", "ρ'"),
}


def table_entries(family: str):
    return [e for e in COPRODUCT_TABLES if e.family == family]


def coproduct_table_check(ctx: TwistContext, family: str, strict: bool = False) -> list:
    """Compare Δ_F of each generator with the stored formulas.

    A printed formula that disagrees with the computed series but agrees with
    one of the entry's alternative readings is reported as
    ``recorded-mismatch`` (``fail`` when ``strict``), with both forms in the ledger.
    """
    tw = ctx.bundle(family)
    out = []
    for entry in table_entries(family):
        if entry.generator not in ctx.alg.symbols:
            continue
        x = ctx.U.gen(entry.generator)
        actual = twisted_coproduct(tw, x)
        subject = f"{tw.subject}: Δ({entry.generator}) [{entry.label}]"
        if entry.verbatim is None:
            out.append(CheckResult("coproducts", subject, "vacuous", render_tensor(actual),
                                   {"note": entry.note, "computed": True}))
            continue
        diff = actual - ctx.texpr(entry.verbatim)
        if diff.is_zero():
            out.append(CheckResult("coproducts", subject, "pass", "0",
                                   {"formula": entry.verbatim}))
            continue
        matched, rejected = None, []
        for name, text in entry.readings:
            if (actual - ctx.texpr(text)).is_zero():
                matched = (name, text)
            else:
                rejected.append(name)
        if matched is None:
            out.append(CheckResult("coproducts", subject, "fail", render_tensor(diff),
                                   {"formula": entry.verbatim, "rejected_readings": rejected}))
            continue
        ledger = [{
            "table": entry.label,
            "generator": entry.generator,
            "verbatim": entry.verbatim,
            "corrected": matched[1],
            "reading": matched[0],
            "rejected_readings": rejected,
            "note": entry.note,
        }]
        out.append(CheckResult("coproducts", subject, "fail" if strict else "recorded-mismatch",
                               render_tensor(diff), {"formula": entry.verbatim}, ledger))
    return out


# ---------------------------------------------------------------------------
# factorization identities


def _factor_pair(check, subject, left_delta, right_delta, psi: TensorElement):
    """(Δ_a⊗id)(Ψ) = Ψ_13 Ψ_23 and (id⊗Δ_b)(Ψ) = Ψ_12 Ψ_13."""
    res1 = apply_deltas(psi, "first", left_delta) - leg_embed(psi, "13") * leg_embed(psi, "23")
    res2 = apply_deltas(psi, "second", right_delta) - leg_embed(psi, "12") * leg_embed(psi, "13")
    return [
        _residual_result(check, f"{subject}: (Δ⊗id)(Ψ) = Ψ13 Ψ23", res1),
        _residual_result(check, f"{subject}: (id⊗Δ)(Ψ) = Ψ12 Ψ13", res2),
    ]


FACTORIZATIONS = ("fac-FP", "fac-FPprime", "fac-PhiP", "fac-PhiPprime", "fac-Phi", "fac-Phi21")


def factorization_check(which: str, ctx: TwistContext) -> list:
    """The factorization identities; ``ctx`` must be on L (or L') as needed.

    fac-FP / fac-FPprime: Δ on the left, Δ_F on the right, Ψ = F.
    fac-PhiP: Δ_j on the left, Δ_P on the right, Ψ = Phi_P.
    fac-PhiPprime: Δ_P' on the left, Δ_j on the right, Ψ = Phi_P'.
    fac-Phi: (α, f, Ψ) = (P, F, Φ) on L or (P', F', Φ') on L'.
    fac-Phi21: (α, f, Ψ) = (P, F~, Φ_21) on L or (P', F~', Φ'_21) on L'.
    """
    b = ctx.bundle
    primed = ctx.alg.family in ("Lprime", "Lcd")
    tag = DISPLAY
    if which in ("fac-FP", "fac-FPprime"):
        fam = "FP" if which == "fac-FP" else "FPprime"
        tw = b(fam)
        return _factor_pair(which, f"{tw.subject}", None, tw, tw.element)
    if which == "fac-PhiP":
        tw = b("Phi_P")
        return _factor_pair(which, f"{tw.subject}", b("Phi_j"), b("FP"), tw.element)
    if which == "fac-PhiPprime":
        tw = b("Phi_Pprime")
        return _factor_pair(which, f"{tw.subject}", b("FPprime"), b("Phi_j"), tw.element)
    if which == "fac-Phi":
        alpha, f, psi = ("FPprime", "Fprime", "PhiPrime") if primed else ("FP", "F", "Phi")
        subject = f"(α,f,Ψ)=({tag[alpha]},{tag[f]},{tag[psi]}) on {b(f).subject}"
        return _factor_pair(which, subject, b(alpha), b(f), b(psi).element)
    if which == "fac-Phi21":
        alpha, f, psi = (("FPprime", "Ftildeprime", "PhiPrime21") if primed
                         else ("FP", "Ftilde", "Phi21"))
        subject = f"(α,f,Ψ)=({tag[alpha]},{tag[f]},{tag[psi]}) on {b(f).subject}"
        return _factor_pair(which, subject, b(f), b(alpha), b(psi).element)
    raise TwistError(f"unknown factorization {which!r}")


# ---------------------------------------------------------------------------
# classical limit


def classical_limit_check(tw: TwistBundle) -> list:
    """z -> 0: the twist degenerates to 1⊗1 and Δ_F to Δ on degree-0 parts."""
    out = []
    U0 = EnvelopingAlgebra(tw.alg, 0)
    tw0 = TwistContext(U0).bundle(tw.family)
    res0 = tw0.element - TensorElement.unit(U0, 2)
    out.append(_residual_result("classical-limit", f"{tw.subject}: element at N=0", res0))
    for i, s in enumerate(tw.alg.symbols):
        x = tw.algebra.gen(i)
        subject = f"{tw.subject}: Δ_F({s}) degree 0"
        if tw.alg.zdegrees[i] > 0:
            out.append(CheckResult("classical-limit", subject, "vacuous", "0",
                                   {"note": f"{s} has z-degree {tw.alg.zdegrees[i]}"}))
            continue
        res = twisted_coproduct(tw, x).homogeneous(0) - coproduct(x).homogeneous(0)
        out.append(_residual_result("classical-limit", subject, res))
    return out
