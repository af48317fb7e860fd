"""Universal and classical r-matrices.

Orientation: with R = F_21 F^{-1} = 1⊗1 + z R_1 + O(z^2), the classical
r-matrix returned here is ``r = -R_1 = f - f_21`` where f is the degree-one
part of F.  In wedge form (x∧y = x⊗y - y⊗x) this is the convention under which
the Jordanian factor exp(H⊗σ) has r = (γ/δ) H∧E.  CYBE is insensitive to the
overall sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .hopf import TensorElement, flip21, leg_embed, render_tensor
from .liealg import EmbeddingRecipe, LieAlgebraDef, embedding_check, lc_add
from .report import CheckResult, status_of
from .scalars import ONE, ZERO, gr, gr_format
from .uea import UNIT, format_coef, join_terms


class RMatrixError(ValueError):
    pass


@dataclass
class ClassicalR:
    """Σ c_ij x_i ∧ x_j over pairs i < j."""

    algebra: LieAlgebraDef
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), c in list(self.terms.items()):
            if not i < j:
                raise RMatrixError(f"wedge key {(i, j)} must satisfy i < j")
            if not c:
                del self.terms[(i, j)]

    @classmethod
    def from_wedges(cls, alg: LieAlgebraDef, wedges) -> "ClassicalR":
        """Build from pairs of linear combinations: Σ u_k ∧ v_k, with coefficients."""
        acc: dict = {}
        for coef, u, v in wedges:
            for (a, ca), (b, cb) in itertools.product(u.items(), v.items()):
                if a == b:
                    continue
                c = gr(coef) * ca * cb
                key, s = ((a, b), c) if a < b else ((b, a), -c)
                acc[key] = acc.get(key, ZERO) + s
        return cls(alg, {k: v for k, v in acc.items() if v})

    def tensor_terms(self) -> dict:
        """The same element as Σ r^{ab} x_a ⊗ x_b."""
        out: dict = {}
        for (i, j), c in self.terms.items():
            out[(i, j)] = c
            out[(j, i)] = -c
        return out

    def __sub__(self, other):
        keys = set(self.terms) | set(other.terms)
        return ClassicalR(self.algebra, {k: self.terms.get(k, ZERO) - other.terms.get(k, ZERO)
                                         for k in keys})

    def __mul__(self, c):
        c = gr(c)
        return ClassicalR(self.algebra, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassicalR):
            return NotImplemented
        return self.algebra.symbols == other.algebra.symbols and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list:
        s = self.algebra.symbols
        return [{"pair": [s[i], s[j]], "coef": gr_format(c)}
                for (i, j), c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        s = self.algebra.symbols
        return join_terms([f"{_wedge_coef(c)}{s[i]}∧{s[j]}"
                           for (i, j), c in sorted(self.terms.items())])

    __repr__ = __str__


def _wedge_coef(c) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "-"
    return format_coef(c) + " "


def universal_R(tw) -> TensorElement:
    """R = F_21 F^{-1}."""
    return flip21(tw.element) * tw.inverse


def extract_classical_r(R: TensorElement) -> ClassicalR:
    alg = R.parent.alg
    if R.terms.get((UNIT, UNIT), ZERO) != ONE or any(
            d == 0 and k != (UNIT, UNIT) for k, _, d in R.graded_terms()):
        raise RMatrixError("degree-0 part of R is not 1⊗1")
    tensor_part: dict = {}
    for (m0, m1), c in R.homogeneous(1).terms.items():
        if len(m0) != 1 or len(m1) != 1 or m0[0][1] != 1 or m1[0][1] != 1:
            raise RMatrixError("degree-1 part of R is not bilinear in the generators")
        tensor_part[(m0[0][0], m1[0][0])] = c
    terms = {}
    for (a, b), c in tensor_part.items():
        if tensor_part.get((b, a), ZERO) != -c:
            raise RMatrixError("degree-1 part of R is not antisymmetric")
        if a < b:
            terms[(a, b)] = -c
    return ClassicalR(alg, terms)


def classical_r(tw) -> ClassicalR:
    return extract_classical_r(universal_R(tw))


def cybe(r: ClassicalR) -> dict:
    """[r12, r13] + [r12, r23] + [r13, r23] in g⊗g⊗g, keyed by index triples."""
    alg = r.algebra
    t = list(r.tensor_terms().items())
    out: dict = {}

    def add(key, c):
        v = out.get(key, ZERO) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for ((a, b), x), ((c, d), y) in itertools.product(t, repeat=2):
        xy = x * y
        for k, v in alg.bracket_gens(a, c).items():
            add((k, b, d), xy * v)
        for k, v in alg.bracket_gens(b, c).items():
            add((a, k, d), xy * v)
        for k, v in alg.bracket_gens(b, d).items():
            add((a, c, k), xy * v)
    return out


def render_triple_tensor(alg: LieAlgebraDef, terms: dict) -> str:
    if not terms:
        return "0"
    s = alg.symbols
    return join_terms([f"{format_coef(c)} ({s[a]} | {s[b]} | {s[d]})"
                       for (a, b, d), c in sorted(terms.items())])


def cybe_check(r: ClassicalR, subject: str = "") -> CheckResult:
    res = cybe(r)
    return CheckResult("cybe", subject or f"{r.algebra.name}: {r}", status_of(not res),
                       render_triple_tensor(r.algebra, res))


def pushforward(r: ClassicalR, rec: EmbeddingRecipe, check: bool = True) -> ClassicalR:
    """Image of r under images ⊗ images, re-canonicalized in the target basis."""
    if r.algebra.symbols != rec.source.symbols:
        raise RMatrixError("r-matrix and recipe have different source algebras")
    if check and not embedding_check(rec).passed:
        raise RMatrixError(f"recipe {rec.label} is not a Lie homomorphism")
    s = r.algebra.symbols
    return ClassicalR.from_wedges(
        rec.target,
        [(c, rec.images[s[i]], rec.images[s[j]]) for (i, j), c in r.terms.items()])


def qybe_check(tw) -> CheckResult:
    """R12 R13 R23 = R23 R13 R12 in three legs at the bundle's order."""
    R = universal_R(tw)
    r12, r13, r23 = (leg_embed(R, p) for p in ("12", "13", "23"))
    res = r12 * r13 * r23 - r23 * r13 * r12
    return CheckResult("qybe", tw.subject, status_of(res.is_zero()), render_tensor(res))


# expected classical r-matrices in the carrier algebras


def closed_form_r(alg: LieAlgebraDef, family: str) -> ClassicalR:
    """±J∧B + A∧B + (γ/δ)H∧E on L, ±J∧A + A∧B + (γ/δ)H∧E on L'."""
    gamma, delta, _ = alg.params
    g = alg.gen
    wedges = [(ONE, g("A"), g("B")), (gamma / delta, g("H"), g("E"))]
    sign = {"F": 1, "Ftilde": -1, "Fprime": 1, "Ftildeprime": -1}.get(family, 0)
    if sign:
        partner = "B" if family in ("F", "Ftilde") else "A"
        wedges.append((gr(sign), g("J"), g(partner)))
    return ClassicalR.from_wedges(alg, wedges)


def poincare_r(target: LieAlgebraDef, sign: int = 1) -> ClassicalR:
    """(±J_3 + P_+) ∧ (J_- + i K_-) + 2i K_3 ∧ (P_t - P_3)."""
    from .scalars import I

    g = target.gen
    P_plus = lc_add(g("P_1"), g("P_2"), I)
    J_minus = lc_add(g("J_1"), g("J_2"), -I)
    K_minus = lc_add(g("K_1"), g("K_2"), -I)
    left = lc_add(P_plus, g("J_3"), gr(sign))
    right = lc_add(J_minus, K_minus, I)
    return ClassicalR.from_wedges(target, [
        (ONE, left, right),
        (2 * I, g("K_3"), lc_add(g("P_t"), g("P_3"), -1)),
    ])
