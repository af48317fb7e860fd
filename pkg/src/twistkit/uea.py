"""Truncated universal enveloping algebra of a graded Lie algebra.

Elements live in the PBW basis: monomials are tuples of ``(index, power)``
pairs with strictly increasing indices.  Because every bracket is homogeneous
for the z-grading, a product of monomials is homogeneous of the summed degree,
so truncating at total degree ``N`` never drops anything that could later
contribute to a degree ``<= N``.
"""

from __future__ import annotations

from math import factorial

from .liealg import LieAlgebraDef
from .scalars import ONE, ZERO, GaussianRational, gr, gr_format

UNIT = ()  # the empty monomial


class TruncationError(ValueError):
    pass


class EnvelopingAlgebra:
    """U(g) truncated at z-degree ``order``; owns the monomial product cache.

    The cache is keyed on monomials only (products are homogeneous), so it is
    shared by every element of this algebra regardless of truncation.
    """

    def __init__(self, alg: LieAlgebraDef, order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.alg = alg
        self.order = order
        self._gen_cache: dict = {}
        self._mono_cache: dict = {}
        self._brackets = [[alg.bracket_gens(i, j) for j in range(alg.dim)]
                          for i in range(alg.dim)]
        self._zdeg = alg.zdegrees

    def __repr__(self):
        return f"EnvelopingAlgebra({self.alg.name}, N={self.order})"

    # -- monomials -----------------------------------------------------------

    def degree(self, mono) -> int:
        zd = self._zdeg
        return sum(p * zd[i] for i, p in mono)

    def _gen_times(self, g: int, mono) -> dict:
        """x_g * mono in PBW form."""
        key = (g, mono)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        if not mono or g < mono[0][0]:
            result = {((g, 1),) + mono: ONE}
        elif g == mono[0][0]:
            result = {((g, mono[0][1] + 1),) + mono[1:]: ONE}
        else:
            a, p = mono[0]
            rest = ((a, p - 1),) + mono[1:] if p > 1 else mono[1:]
            # x_g x_a rest = x_a (x_g rest) + [x_g, x_a] rest
            result: dict = {}
            for m, c in self._gen_times(g, rest).items():
                _accumulate(result, self._gen_times(a, m), c)
            for k, c in self._brackets[g][a].items():
                _accumulate(result, self._gen_times(k, rest), c)
        self._gen_cache[key] = result
        return result

    def mono_mul(self, m1, m2) -> dict:
        if not m1:
            return {m2: ONE}
        if not m2:
            return {m1: ONE}
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        if m1[-1][0] < m2[0][0]:
            result = {m1 + m2: ONE}
        elif m1[-1][0] == m2[0][0]:
            i = m1[-1][0]
            result = {m1[:-1] + ((i, m1[-1][1] + m2[0][1]),) + m2[1:]: ONE}
        else:
            # peel the last generator off m1 and push it into m2
            i, p = m1[-1]
            head = m1[:-1] + (((i, p - 1),) if p > 1 else ())
            result = {}
            for m, c in self._gen_times(i, m2).items():
                _accumulate(result, self.mono_mul(head, m), c)
        self._mono_cache[key] = result
        return result

    def normal_order(self, word) -> "UEAElement":
        """Product of the generators listed in ``word`` (indices or symbols)."""
        idx = [self.alg.index(w) if isinstance(w, str) else w for w in word]
        if sum(self._zdeg[i] for i in idx) > self.order:
            return self.zero()
        terms = {UNIT: ONE}
        for i in reversed(idx):
            new: dict = {}
            for m, c in terms.items():
                _accumulate(new, self._gen_times(i, m), c)
            terms = new
        return UEAElement(self, terms)

    # -- constructors --------------------------------------------------------

    def zero(self) -> "UEAElement":
        return UEAElement(self, {})

    def one(self) -> "UEAElement":
        return UEAElement(self, {UNIT: ONE})

    def scalar(self, c) -> "UEAElement":
        c = gr(c)
        return UEAElement(self, {UNIT: c} if c else {})

    def gen(self, symbol) -> "UEAElement":
        i = self.alg.index(symbol) if isinstance(symbol, str) else symbol
        if self._zdeg[i] > self.order:
            return self.zero()
        return UEAElement(self, {((i, 1),): ONE})

    def gens(self):
        return [self.gen(i) for i in range(self.alg.dim)]

    def from_lincomb(self, comb) -> "UEAElement":
        out = self.zero()
        for i, c in comb.items():
            out = out + self.gen(i) * c
        return out

    def monomial(self, mono, coef=ONE) -> "UEAElement":
        return UEAElement(self, {tuple(mono): gr(coef)})


def _accumulate(target: dict, src: dict, scale) -> None:
    for m, c in src.items():
        v = c * scale
        old = target.get(m)
        if old is not None:
            v = old + v
            if v:
                target[m] = v
            else:
                del target[m]
        elif v:
            target[m] = v


class UEAElement:
    """Immutable element of a truncated enveloping algebra."""

    __slots__ = ("parent", "terms", "_graded")

    def __init__(self, parent: EnvelopingAlgebra, terms: dict):
        self.parent = parent
        N = parent.order
        self.terms = {m: c for m, c in terms.items() if c and parent.degree(m) <= N}
        self._graded = None

    # -- structure -----------------------------------------------------------

    def graded_terms(self):
        """List of (monomial, coef, degree) sorted by degree."""
        if self._graded is None:
            deg = self.parent.degree
            self._graded = sorted(((m, c, deg(m)) for m, c in self.terms.items()),
                                  key=lambda t: t[2])
        return self._graded

    def constant_term(self) -> GaussianRational:
        return self.terms.get(UNIT, ZERO)

    def min_degree(self):
        g = self.graded_terms()
        return g[0][2] if g else None

    def homogeneous(self, d: int) -> "UEAElement":
        deg = self.parent.degree
        return UEAElement(self.parent, {m: c for m, c in self.terms.items() if deg(m) == d})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "UEAElement"):
        if not isinstance(other, UEAElement):
            raise TypeError(f"expected UEAElement, got {type(other).__name__}")
        if other.parent is not self.parent:
            if (other.parent.alg is not self.parent.alg
                    or other.parent.order != self.parent.order):
                raise ValueError("elements belong to different algebras or orders")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            other = self.parent.scalar(other)
        self._check(other)
        out = dict(self.terms)
        _accumulate(out, other.terms, ONE)
        return UEAElement(self.parent, out)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.parent, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UEAElement):
            other = self.parent.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            c = gr(other)
            if not c:
                return self.parent.zero()
            return UEAElement(self.parent, {m: v * c for m, v in self.terms.items()})
        self._check(other)
        N = self.parent.order
        mono_mul = self.parent.mono_mul
        out: dict = {}
        b = other.graded_terms()
        for ma, ca, da in self.graded_terms():
            for mb, cb, db in b:
                if da + db > N:
                    break
                _accumulate(out, mono_mul(ma, mb), ca * cb)
        return UEAElement(self.parent, out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (ONE / gr(other))

    def __pow__(self, k: int):
        result = self.parent.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, UEAElement):
            return self.parent.alg is other.parent.alg and self.terms == other.terms
        try:
            return self == self.parent.scalar(other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"UEAElement({render(self)})"

    def __str__(self):
        return render(self)


def commutator(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b - b * a


def mul(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b


def normal_order(alg: LieAlgebraDef, word, order: int) -> UEAElement:
    return EnvelopingAlgebra(alg, order).normal_order(word)


# -- series -------------------------------------------------------------------


def _series_coeffs(f: str, N: int, exponent=None):
    """Maclaurin coefficients c_0..c_N of f."""
    if f == "exp":
        return [GaussianRational(1) / factorial(k) for k in range(N + 1)]
    if f == "log1p":
        return [ZERO] + [gr((-1) ** (k + 1)) / k for k in range(1, N + 1)]
    if f == "inverse":
        return [gr((-1) ** k) for k in range(N + 1)]
    if f == "power":
        # generalised binomial (1+x)^s for rational s
        s = gr(exponent)
        out = [ONE]
        for k in range(1, N + 1):
            out.append(out[-1] * (s - (k - 1)) / k)
        return out
    raise ValueError(f"unknown series {f!r}")


def series_apply(f: str, x: UEAElement, exponent=None) -> UEAElement:
    """exp(x), log(1+x), (1+x)^-1 or (1+x)^s, truncated at the algebra order.

    ``x`` must have no term of z-degree 0; otherwise the series would not
    terminate under the truncation.
    """
    for m, c, d in x.graded_terms():
        if d == 0:
            raise TruncationError(
                "series does not terminate: argument has a z-degree 0 term "
                f"({render(UEAElement(x.parent, {m: c}))})"
            )
    N = x.parent.order
    coeffs = _series_coeffs(f, N, exponent)
    result = x.parent.scalar(coeffs[0])
    power = x.parent.one()
    for k in range(1, N + 1):
        power = power * x
        if power.is_zero():
            break
        result = result + power * coeffs[k]
    return result


# -- rendering ----------------------------------------------------------------


def render_monomial(mono, symbols) -> str:
    if not mono:
        return "1"
    return " ".join(symbols[i] if p == 1 else f"{symbols[i]}^{p}" for i, p in mono)


def format_coef(c) -> str:
    s = gr_format(c)
    return f"({s})" if ("+" in s[1:] or "-" in s[1:]) else s


def join_terms(parts) -> str:
    """Join rendered terms, folding a leading minus into the separator."""
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


def sort_key(mono):
    return (len(mono), mono)


def render(x: UEAElement) -> str:
    """Terms sorted by monomial, each as ``coef · g1^p1 g2^p2``."""
    if not x.terms:
        return "0"
    syms = x.parent.alg.symbols
    return join_terms([
        f"{format_coef(x.terms[m])} · {render_monomial(m, syms)}"
        for m in sorted(x.terms)
    ])
