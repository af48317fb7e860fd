"""Tensor powers U^{⊗2}, U^{⊗3} with the undeformed (cocommutative) Hopf structure."""

from __future__ import annotations

from itertools import product
from math import comb

from .scalars import ONE, ZERO, GaussianRational, gr
from .uea import UNIT, EnvelopingAlgebra, UEAElement, format_coef, join_terms, render_monomial

PLACEMENTS = {"12": (0, 1), "13": (0, 2), "23": (1, 2)}


def _acc(target: dict, key, v) -> None:
    old = target.get(key)
    if old is not None:
        v = old + v
        if v:
            target[key] = v
        else:
            del target[key]
    elif v:
        target[key] = v


class TensorElement:
    """Element of U^{⊗legs}; keys are tuples of PBW monomials, one per leg.

    Truncation is on the total z-degree summed across legs.
    """

    __slots__ = ("parent", "legs", "terms", "_graded")

    def __init__(self, parent: EnvelopingAlgebra, legs: int, terms: dict):
        if legs not in (2, 3):
            raise ValueError("only 2 or 3 tensor legs are supported")
        self.parent = parent
        self.legs = legs
        deg = parent.degree
        N = parent.order
        self.terms = {k: c for k, c in terms.items()
                      if c and sum(deg(m) for m in k) <= N}
        self._graded = None

    @classmethod
    def unit(cls, parent, legs=2) -> "TensorElement":
        return cls(parent, legs, {(UNIT,) * legs: ONE})

    @classmethod
    def zero(cls, parent, legs=2) -> "TensorElement":
        return cls(parent, legs, {})

    def graded_terms(self):
        if self._graded is None:
            deg = self.parent.degree
            self._graded = sorted(
                ((k, c, sum(deg(m) for m in k)) for k, c in self.terms.items()),
                key=lambda t: t[2])
        return self._graded

    def homogeneous(self, d: int) -> "TensorElement":
        return TensorElement(self.parent, self.legs,
                             {k: c for k, c, e in self.graded_terms() if e == d})

    def positive_part(self) -> "TensorElement":
        return TensorElement(self.parent, self.legs,
                             {k: c for k, c, e in self.graded_terms() if e > 0})

    def degree_counts(self) -> dict:
        out: dict = {}
        for _, _, d in self.graded_terms():
            out[d] = out.get(d, 0) + 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected TensorElement, got {type(other).__name__}")
        if other.legs != self.legs:
            raise ValueError("tensor elements have different numbers of legs")
        if other.parent is not self.parent and (
                other.parent.alg is not self.parent.alg
                or other.parent.order != self.parent.order):
            raise ValueError("tensor elements belong to different algebras or orders")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            other = TensorElement.unit(self.parent, self.legs) * gr(other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(self.parent, self.legs, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.parent, self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            c = gr(other)
            return TensorElement(self.parent, self.legs,
                                 {k: v * c for k, v in self.terms.items()})
        return tmul(self, other)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (ONE / gr(other))

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return (self.legs == other.legs and self.parent.alg is other.parent.alg
                    and self.terms == other.terms)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"TensorElement({render_tensor(self)})"

    def __str__(self):
        return render_tensor(self)


def tmul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Leg-wise product, truncated at total degree N."""
    a._check(b)
    N = a.parent.order
    mono_mul = a.parent.mono_mul
    out: dict = {}
    bg = b.graded_terms()
    if a.legs == 2:
        for (a0, a1), ca, da in a.graded_terms():
            for (b0, b1), cb, db in bg:
                if da + db > N:
                    break
                cab = ca * cb
                p1 = mono_mul(a1, b1)
                for m0, c0 in mono_mul(a0, b0).items():
                    c0 = cab if c0 is ONE else cab * c0
                    for m1, c1 in p1.items():
                        _acc(out, (m0, m1), c0 if c1 is ONE else c0 * c1)
    else:
        for (a0, a1, a2), ca, da in a.graded_terms():
            for (b0, b1, b2), cb, db in bg:
                if da + db > N:
                    break
                cab = ca * cb
                p1 = mono_mul(a1, b1)
                p2 = mono_mul(a2, b2)
                for m0, c0 in mono_mul(a0, b0).items():
                    c0 = cab if c0 is ONE else cab * c0
                    for m1, c1 in p1.items():
                        c01 = c0 if c1 is ONE else c0 * c1
                        for m2, c2 in p2.items():
                            _acc(out, (m0, m1, m2), c01 if c2 is ONE else c01 * c2)
    return TensorElement(a.parent, a.legs, out)


def tensor(*factors: UEAElement) -> TensorElement:
    """x ⊗ y (⊗ z) from enveloping-algebra elements."""
    parent = factors[0].parent
    out: dict = {}
    for combo in product(*(f.terms.items() for f in factors)):
        c = ONE
        for _, v in combo:
            c = c * v
        _acc(out, tuple(m for m, _ in combo), c)
    return TensorElement(parent, len(factors), out)


def _split(mono):
    """All (left, right, multiplicity) with left * right = mono in the PBW sense."""
    choices = [[(q, p - q, comb(p, q)) for q in range(p + 1)] for _, p in mono]
    for pick in product(*choices):
        left = tuple((i, q) for (i, _), (q, _, _) in zip(mono, pick) if q)
        right = tuple((i, r) for (i, _), (_, r, _) in zip(mono, pick) if r)
        mult = 1
        for _, _, c in pick:
            mult *= c
        yield left, right, mult


def coproduct(x: UEAElement) -> TensorElement:
    """Δ extended multiplicatively from Δ(g) = g⊗1 + 1⊗g.

    For an ordered monomial the legs commute, so
    Δ(x^p) = Σ_{q ≤ p} C(p, q) x^q ⊗ x^{p-q} with both legs still ordered.
    """
    out: dict = {}
    for m, c in x.terms.items():
        for left, right, mult in _split(m):
            _acc(out, (left, right), c * mult)
    return TensorElement(x.parent, 2, out)


def counit(x: UEAElement) -> GaussianRational:
    return x.constant_term()


def counit_leg(t: TensorElement, leg: int) -> UEAElement | TensorElement:
    """Apply ε on one leg (0-based); a 2-leg input returns a UEAElement."""
    out: dict = {}
    for k, c in t.terms.items():
        if k[leg] == UNIT:
            rest = k[:leg] + k[leg + 1:]
            _acc(out, rest if len(rest) > 1 else rest[0], c)
    if t.legs == 2:
        return UEAElement(t.parent, out)
    return TensorElement(t.parent, 2, out)


def leg_embed(x: TensorElement, placement: str) -> TensorElement:
    """x_{12}, x_{13} or x_{23}: the unit goes in the unused leg."""
    if x.legs != 2:
        raise ValueError("leg_embed expects a 2-leg element")
    i, j = PLACEMENTS[placement]
    out = {}
    for (m0, m1), c in x.terms.items():
        key = [UNIT, UNIT, UNIT]
        key[i], key[j] = m0, m1
        out[tuple(key)] = c
    return TensorElement(x.parent, 3, out)


def flip21(x: TensorElement) -> TensorElement:
    if x.legs != 2:
        raise ValueError("flip21 expects a 2-leg element")
    return TensorElement(x.parent, 2, {(m1, m0): c for (m0, m1), c in x.terms.items()})


def delta_on_leg(x: TensorElement, which: str) -> TensorElement:
    """(Δ⊗id)(x) for which='first', (id⊗Δ)(x) for which='second'."""
    if x.legs != 2:
        raise ValueError("delta_on_leg expects a 2-leg element")
    out: dict = {}
    for (m0, m1), c in x.terms.items():
        if which == "first":
            for l, r, k in _split(m0):
                _acc(out, (l, r, m1), c * k)
        elif which == "second":
            for l, r, k in _split(m1):
                _acc(out, (m0, l, r), c * k)
        else:
            raise ValueError("which must be 'first' or 'second'")
    return TensorElement(x.parent, 3, out)


def apply_deltas(x: TensorElement, which: str, twist=None) -> TensorElement:
    """(Δ⊗id) or (id⊗Δ) on a 2-leg element; with ``twist`` (a TwistBundle or
    any object with ``element``/``inverse``) Δ is replaced by Δ_F = F Δ(·) F^{-1}.
    """
    out = delta_on_leg(x, which)
    if twist is None:
        return out
    place = "12" if which == "first" else "23"
    return leg_embed(twist.element, place) * out * leg_embed(twist.inverse, place)


def texp(x: TensorElement) -> TensorElement:
    """exp(x) for x with no degree-0 part (terminates under truncation)."""
    if any(d == 0 for _, _, d in x.graded_terms()):
        raise ValueError("tensor exponential argument must have positive z-degree")
    result = TensorElement.unit(x.parent, x.legs)
    term = result
    for k in range(1, x.parent.order + 1):
        term = (term * x) / k
        if term.is_zero():
            break
        result = result + term
    return result


def tinverse(x: TensorElement) -> TensorElement:
    """Order-by-order inverse of c(1 + X), X of positive degree."""
    unit_key = (UNIT,) * x.legs
    if any(d == 0 and k != unit_key for k, _, d in x.graded_terms()):
        raise ValueError("inverse needs the degree-0 part to be a scalar")
    c0 = x.terms.get(unit_key, ZERO)
    if not c0:
        raise ZeroDivisionError("degree-0 part vanishes; element is not invertible")
    X = x.positive_part() / c0
    result = TensorElement.unit(x.parent, x.legs)
    term = result
    for _ in range(x.parent.order):
        term = -(term * X)
        if term.is_zero():
            break
        result = result + term
    return result / c0


def render_tensor(t: TensorElement) -> str:
    """``coef · (m1 | m2 | m3)`` with terms sorted."""
    if not t.terms:
        return "0"
    syms = t.parent.alg.symbols
    parts = []
    for k in sorted(t.terms):
        legs = " | ".join(render_monomial(m, syms) for m in k)
        parts.append(f"{format_coef(t.terms[k])} · ({legs})")
    return join_terms(parts)
