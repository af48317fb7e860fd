"""Graded Lie algebras given by structure constants, the carrier algebras
L^c, L'^c, L, L' of the twists, the inhomogeneous algebras they embed in,
and Lie-homomorphism checks for those embeddings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, I, gr, gr_format

LinComb = dict  # generator index -> GaussianRational

ABSTRACT_FAMILIES = ("Lc", "Lcd", "L", "Lprime")
CONCRETE_FAMILIES = ("isu", "iso", "schrodinger", "poincare")
DUAL_FAMILY = {"Lc": "Lcd", "Lcd": "Lc", "L": "Lprime", "Lprime": "L"}


class LieAlgebraError(ValueError):
    pass


def lc_add(u: LinComb, v: LinComb, scale=ONE) -> LinComb:
    out = dict(u)
    for k, c in v.items():
        c = out.get(k, ZERO) + scale * c
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


def lc_scale(u: LinComb, s) -> LinComb:
    s = gr(s)
    if not s:
        return {}
    return {k: c * s for k, c in u.items()}


@dataclass(frozen=True, eq=False)
class LieAlgebraDef:
    """Structure constants ``[x_i, x_j] = sum_k c^k_ij x_k`` stored for ``i < j``.

    ``zdegrees`` is the grading used for truncation in the enveloping algebra;
    every stored bracket must be homogeneous of degree ``deg x_i + deg x_j``.
    """

    name: str
    symbols: tuple
    zdegrees: tuple
    brackets: Mapping  # (i, j), i < j -> LinComb
    params: tuple = ()  # (gamma, delta, mu) for abstract families
    family: str = ""
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(self.symbols) != len(self.zdegrees):
            raise LieAlgebraError("symbols and zdegrees differ in length")
        if len(set(self.symbols)) != len(self.symbols):
            raise LieAlgebraError("duplicate generator symbols")
        self._index.update({s: i for i, s in enumerate(self.symbols)})
        for (i, j), rhs in self.brackets.items():
            if not i < j:
                raise LieAlgebraError(f"bracket key {(i, j)} must satisfy i < j")
            want = self.zdegrees[i] + self.zdegrees[j]
            for k, c in rhs.items():
                if not c:
                    raise LieAlgebraError("zero coefficient stored in bracket")
                if self.zdegrees[k] != want:
                    raise LieAlgebraError(
                        f"grading violated: [{self.symbols[i]}, {self.symbols[j]}] "
                        f"contains {self.symbols[k]} of degree {self.zdegrees[k]} != {want}"
                    )

    @property
    def dim(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise KeyError(f"{symbol!r} is not a generator of {self.name}") from None

    def gen(self, symbol: str) -> LinComb:
        return {self.index(symbol): ONE}

    def bracket_gens(self, i: int, j: int) -> LinComb:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return lc_scale(self.brackets.get((j, i), {}), -1)

    def bracket(self, u: LinComb, v: LinComb) -> LinComb:
        out: LinComb = {}
        for i, a in u.items():
            for j, b in v.items():
                if i == j:
                    continue
                br = self.bracket_gens(i, j)
                if br:
                    out = lc_add(out, br, a * b)
        return out

    def render(self, u: LinComb) -> str:
        return render_lincomb(u, self.symbols)

    def with_zdegrees(self, zdegrees) -> "LieAlgebraDef":
        return LieAlgebraDef(self.name, self.symbols, tuple(zdegrees),
                             dict(self.brackets), self.params, self.family)

    # -- JSON document -------------------------------------------------------

    def to_json(self) -> dict:
        doc = {
            "name": self.name,
            "generators": [
                {"symbol": s, "zdegree": d} for s, d in zip(self.symbols, self.zdegrees)
            ],
            "brackets": [
                {
                    "lhs": [self.symbols[i], self.symbols[j]],
                    "rhs": [{"coef": gr_format(c), "gen": self.symbols[k]}
                            for k, c in sorted(rhs.items())],
                }
                for (i, j), rhs in sorted(self.brackets.items())
            ],
        }
        if self.family:
            doc["family"] = self.family
        if self.params:
            doc["params"] = dict(zip(("gamma", "delta", "mu"),
                                     (gr_format(p) for p in self.params)))
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "LieAlgebraDef":
        symbols = tuple(g["symbol"] for g in doc["generators"])
        zdeg = tuple(int(g.get("zdegree", 0)) for g in doc["generators"])
        index = {s: i for i, s in enumerate(symbols)}
        brackets: dict = {}
        for entry in doc.get("brackets", []):
            x, y = entry["lhs"]
            i, j = index[x], index[y]
            rhs: LinComb = {}
            for t in entry["rhs"]:
                rhs = lc_add(rhs, {index[t["gen"]]: gr(t["coef"])})
            if i > j:
                i, j, rhs = j, i, lc_scale(rhs, -1)
            elif i == j:
                raise LieAlgebraError(f"bracket [{x}, {x}] must not be given")
            if (i, j) in brackets:
                raise LieAlgebraError(f"bracket [{x}, {y}] given twice")
            if rhs:
                brackets[(i, j)] = rhs
        params = ()
        if "params" in doc:
            p = doc["params"]
            params = (gr(p["gamma"]), gr(p["delta"]), gr(p.get("mu", "0")))
        return cls(doc["name"], symbols, zdeg, brackets, params, doc.get("family", ""))


def render_lincomb(u: LinComb, symbols) -> str:
    if not u:
        return "0"
    parts = []
    for k in sorted(u):
        c = u[k]
        if c == 1:
            s = symbols[k]
        elif c == -1:
            s = "-" + symbols[k]
        else:
            cs = gr_format(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            s = f"{cs}*{symbols[k]}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class _Builder:
    """Collects brackets given on (possibly unordered) generator pairs."""

    def __init__(self, symbols):
        self.symbols = tuple(symbols)
        self.index = {s: i for i, s in enumerate(self.symbols)}
        self.brackets: dict = {}

    def set(self, x: str, y: str, rhs: Iterable):
        i, j = self.index[x], self.index[y]
        comb: LinComb = {}
        for c, g in rhs:
            comb = lc_add(comb, {self.index[g]: gr(c)})
        if i == j:
            if comb:
                raise LieAlgebraError(f"[{x}, {x}] must vanish")
            return
        if i > j:
            i, j, comb = j, i, lc_scale(comb, -1)
        old = self.brackets.get((i, j))
        if old is not None and old != comb:
            raise LieAlgebraError(f"conflicting values for [{x}, {y}]")
        if comb:
            self.brackets[(i, j)] = comb

    def build(self, name, zdegrees=None, params=(), family=""):
        if zdegrees is None:
            zdegrees = (0,) * len(self.symbols)
        return LieAlgebraDef(name, self.symbols, tuple(zdegrees), self.brackets,
                             params, family)


# ---------------------------------------------------------------------------
# carrier algebras


def build_abstract(family: str, gamma, delta, mu=None) -> LieAlgebraDef:
    """Carrier algebra of the twist.

    ``Lc``/``Lcd`` have generators (H, E, A, B); ``L``/``Lprime`` prepend J.
    Degree one is given to E, B (L family) or E, A (L' family).
    """
    if family not in ABSTRACT_FAMILIES:
        raise LieAlgebraError(f"unknown abstract family {family!r}")
    g, d = gr(gamma), gr(delta)
    if not g or not d:
        raise LieAlgebraError("gamma and delta must be nonzero")
    extended = family in ("L", "Lprime")
    primed = family in ("Lcd", "Lprime")
    m = gr(mu) if mu is not None else ZERO
    if extended and not m:
        raise LieAlgebraError("mu must be nonzero for L and L'")
    symbols = (("J",) if extended else ()) + ("H", "E", "A", "B")
    b = _Builder(symbols)
    b.set("H", "E", [(d, "E")])
    b.set("A", "B", [(g, "E")])
    if primed:
        b.set("H", "A", [(d, "A")])
    else:
        b.set("H", "B", [(d, "B")])
    if extended:
        sgn = 1 if primed else -1
        b.set("J", "A", [(m * sgn, "A")])
        b.set("J", "B", [(m * -sgn, "B")])
    graded = {"E", "A"} if primed else {"E", "B"}
    zdeg = [1 if s in graded else 0 for s in symbols]
    params = (g, d, m) if extended else (g, d, ZERO)
    names = {"Lc": "L^c", "Lcd": "L'^c", "L": "L", "Lprime": "L'"}
    return b.build(names[family], zdeg, params, family)


# ---------------------------------------------------------------------------
# inhomogeneous algebras


def _isu(n: int) -> LieAlgebraDef:
    U = lambda a, b: f"U^{a}_{b}"
    Pu = lambda a: f"P^{a}"
    Pl = lambda a: f"P_{a}"
    r = range(1, n + 1)
    symbols = [U(a, b) for a in r for b in r] + [Pu(a) for a in r] + [Pl(a) for a in r]
    bl = _Builder(symbols)
    for a, b, c, d in itertools.product(r, repeat=4):
        rhs = []
        if b == c:
            rhs.append((1, U(a, d)))
        if d == a:
            rhs.append((-1, U(c, b)))
        # both orders of each pair get visited; _Builder checks they agree
        bl.set(U(a, b), U(c, d), rhs)
    for a, b, c in itertools.product(r, repeat=3):
        bl.set(U(a, b), Pu(c), [(1, Pu(a))] if b == c else [])
        bl.set(U(a, b), Pl(c), [(-1, Pl(b))] if a == c else [])
    return bl.build(f"isu({n})", family="isu")


def _Y(a: int, b: int):
    """(sign, symbol) of the antisymmetric generator Y_ab, or None for a == b."""
    if a == b:
        return None
    if a < b:
        return 1, f"Y_{{{a},{b}}}"
    return -1, f"Y_{{{b},{a}}}"


def _iso(n: int) -> LieAlgebraDef:
    r = range(1, n + 1)
    pairs = [(a, b) for a in r for b in r if a < b]
    P = lambda a: f"P_{a}"
    symbols = [_Y(a, b)[1] for a, b in pairs] + [P(a) for a in r]
    bl = _Builder(symbols)
    delta = lambda x, y: 1 if x == y else 0
    for (a, b), (c, d) in itertools.product(pairs, repeat=2):
        acc: dict = {}
        for coef, (p, q) in ((delta(b, c), (a, d)), (delta(a, d), (b, c)),
                             (-delta(b, d), (a, c)), (-delta(a, c), (b, d))):
            y = _Y(p, q)
            if coef and y:
                acc[y[1]] = acc.get(y[1], 0) + coef * y[0]
        bl.set(_Y(a, b)[1], _Y(c, d)[1], [(v, s) for s, v in acc.items() if v])
    for (a, b), c in itertools.product(pairs, r):
        rhs = []
        if b == c:
            rhs.append((1, P(a)))
        if a == c:
            rhs.append((-1, P(b)))
        bl.set(_Y(a, b)[1], P(c), rhs)
    return bl.build(f"iso({n})", family="iso")


def _Jsch(a: int, b: int):
    if a == b:
        return None
    if a < b:
        return 1, f"J_{{{a},{b}}}"
    return -1, f"J_{{{b},{a}}}"


def _schrodinger(n: int) -> LieAlgebraDef:
    r = range(1, n + 1)
    pairs = [(a, b) for a in r for b in r if a < b]
    P = lambda a: f"P_{a}"
    G = lambda a: f"G_{a}"
    symbols = (["P_t"] + [P(a) for a in r] + [G(a) for a in r]
               + [_Jsch(a, b)[1] for a, b in pairs] + ["K", "D", "M"])
    bl = _Builder(symbols)
    bl.set("P_t", "D", [(2, "P_t")])
    bl.set("P_t", "K", [(1, "D")])
    bl.set("D", "K", [(2, "K")])
    for a in r:
        bl.set("P_t", G(a), [(1, P(a))])
        bl.set(P(a), "D", [(1, P(a))])
        bl.set(P(a), "K", [(1, G(a))])
        bl.set("D", G(a), [(1, G(a))])
        for b in r:
            bl.set(P(a), G(b), [(1, "M")] if a == b else [])
    delta = lambda x, y: 1 if x == y else 0
    for a in r:
        for b, c in pairs:
            for X in (P, G):
                rhs = []
                if delta(a, c):
                    rhs.append((1, X(b)))
                if delta(a, b):
                    rhs.append((-1, X(c)))
                bl.set(X(a), _Jsch(b, c)[1], rhs)
    for (a, b), (c, d) in itertools.product(pairs, repeat=2):
        acc: dict = {}
        for coef, (p, q) in ((delta(a, c), (b, d)), (delta(b, d), (a, c)),
                             (-delta(a, d), (b, c)), (-delta(b, c), (a, d))):
            y = _Jsch(p, q)
            if coef and y:
                acc[y[1]] = acc.get(y[1], 0) + coef * y[0]
        bl.set(_Jsch(a, b)[1], _Jsch(c, d)[1], [(v, s) for s, v in acc.items() if v])
    return bl.build(f"schrodinger({n})", family="schrodinger")


def _levi_civita(a: int, b: int, c: int) -> int:
    if len({a, b, c}) < 3:
        return 0
    return 1 if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


def _poincare() -> LieAlgebraDef:
    r = (1, 2, 3)
    symbols = (["P_t"] + [f"P_{a}" for a in r] + [f"J_{a}" for a in r]
               + [f"K_{a}" for a in r])
    bl = _Builder(symbols)
    for a, b in itertools.product(r, repeat=2):
        eps = [(_levi_civita(a, b, c), c) for c in r if _levi_civita(a, b, c)]
        bl.set(f"J_{a}", f"J_{b}", [(e, f"J_{c}") for e, c in eps])
        bl.set(f"J_{a}", f"P_{b}", [(e, f"P_{c}") for e, c in eps])
        bl.set(f"J_{a}", f"K_{b}", [(e, f"K_{c}") for e, c in eps])
        bl.set(f"K_{a}", f"K_{b}", [(-e, f"J_{c}") for e, c in eps])
        bl.set(f"P_{a}", f"K_{b}", [(1, "P_t")] if a == b else [])
    for a in r:
        bl.set("P_t", f"K_{a}", [(1, f"P_{a}")])
    return bl.build("poincare", family="poincare")


_MIN_N = {"isu": 2, "iso": 2, "schrodinger": 1, "poincare": 0}


def build_concrete(family: str, n: int = 0) -> LieAlgebraDef:
    """isu(n) (all U^a_b plus P^a, P_a), iso(n), Schrödinger in 1+n, Poincaré in 1+3.

    Generator order is the declaration order of each builder; all z-degrees are 0.
    """
    if family not in CONCRETE_FAMILIES:
        raise LieAlgebraError(f"unknown concrete family {family!r}")
    if family != "poincare" and n < _MIN_N[family]:
        raise LieAlgebraError(f"{family} needs n >= {_MIN_N[family]}, got {n}")
    if family == "isu":
        return _isu(n)
    if family == "iso":
        return _iso(n)
    if family == "schrodinger":
        return _schrodinger(n)
    return _poincare()


def build_algebra(name: str, n: int = 0, params=None) -> LieAlgebraDef:
    if name in ABSTRACT_FAMILIES:
        gamma, delta, mu = params or (ONE, ONE, I)
        return build_abstract(name, gamma, delta, mu)
    return build_concrete(name, n)


# ---------------------------------------------------------------------------
# checks


@dataclass
class JacobiReport:
    algebra: str
    violations: list  # ((sym_i, sym_j, sym_k), rendered residual)
    triples_checked: int

    @property
    def passed(self) -> bool:
        return not self.violations


def jacobi_check(alg: LieAlgebraDef) -> JacobiReport:
    """Evaluate the Jacobiator on every triple i < j < k of generators."""
    violations = []
    count = 0
    gens = [{i: ONE} for i in range(alg.dim)]
    for i, j, k in itertools.combinations(range(alg.dim), 3):
        count += 1
        x, y, z = gens[i], gens[j], gens[k]
        res = alg.bracket(alg.bracket(x, y), z)
        res = lc_add(res, alg.bracket(alg.bracket(y, z), x))
        res = lc_add(res, alg.bracket(alg.bracket(z, x), y))
        if res:
            violations.append(((alg.symbols[i], alg.symbols[j], alg.symbols[k]),
                               alg.render(res)))
    return JacobiReport(alg.name, violations, count)


@dataclass(frozen=True, eq=False)
class EmbeddingRecipe:
    """Images of the carrier-algebra generators inside a target algebra."""

    source: LieAlgebraDef
    target: LieAlgebraDef
    images: Mapping  # source symbol -> LinComb over target indices
    alpha: tuple = ()
    beta: tuple = ()
    label: str = ""

    @property
    def params(self) -> tuple:
        return self.source.params

    def image(self, u: LinComb) -> LinComb:
        out: LinComb = {}
        for i, c in u.items():
            out = lc_add(out, self.images[self.source.symbols[i]], c)
        return out

    def to_json(self) -> dict:
        g, d, m = self.params
        return {
            "label": self.label,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "params": {"gamma": gr_format(g), "delta": gr_format(d), "mu": gr_format(m)},
            "alpha": [gr_format(a) for a in self.alpha],
            "beta": [gr_format(b) for b in self.beta],
            "images": {
                s: [{"coef": gr_format(c), "gen": self.target.symbols[k]}
                    for k, c in sorted(self.images[s].items())]
                for s in self.source.symbols
            },
        }

    @classmethod
    def from_json(cls, doc: dict) -> "EmbeddingRecipe":
        source = LieAlgebraDef.from_json(doc["source"])
        target = LieAlgebraDef.from_json(doc["target"])
        if "params" in doc and not source.params:
            p = doc["params"]
            source = LieAlgebraDef(source.name, source.symbols, source.zdegrees,
                                   dict(source.brackets),
                                   (gr(p["gamma"]), gr(p["delta"]), gr(p["mu"])),
                                   source.family)
        images = {}
        for s in source.symbols:
            comb: LinComb = {}
            for t in doc["images"][s]:
                comb = lc_add(comb, {target.index(t["gen"]): gr(t["coef"])})
            images[s] = comb
        return cls(source, target, images,
                   tuple(gr(a) for a in doc.get("alpha", [])),
                   tuple(gr(b) for b in doc.get("beta", [])),
                   doc.get("label", ""))


def _k_range(n: int):
    """k = 2, ..., floor(n/2)."""
    return range(2, n // 2 + 1)


def _sch_k_range(n: int):
    """Odd k from 1 to n-1 (even n) or n-2 (odd n)."""
    top = n - 1 if n % 2 == 0 else n - 2
    return range(1, top + 1, 2)


def _parse_terms(target: LieAlgebraDef, terms) -> LinComb:
    out: LinComb = {}
    for c, s in terms:
        out = lc_add(out, {target.index(s): gr(c)})
    return out


def build_embedding(family: str, n: int = 0, alpha=None, beta=None,
                    verbatim: bool = False) -> EmbeddingRecipe:
    """Carrier algebra L inside isu(n), iso(n), Schrödinger(1+n) or Poincaré.

    ``alpha``/``beta`` default to all ones.  ``verbatim`` reproduces the printed
    formulas where they differ from the working embedding (isu(n) pairs index k
    with n-k instead of n-k+1; the Schrödinger H equals J).
    """
    if family not in CONCRETE_FAMILIES:
        raise LieAlgebraError(f"unknown embedding family {family!r}")
    i = I
    if family in ("isu", "iso"):
        if n < 4:
            raise LieAlgebraError(f"{family}(n) embedding needs n >= 4, got {n}")
        ks = list(_k_range(n))
        alpha = tuple(gr(a) for a in (alpha or [1] * len(ks)))
        beta = tuple(gr(b) for b in (beta or [1] * len(ks)))
        if len(alpha) != len(ks) or len(beta) != len(ks):
            raise LieAlgebraError(f"{family}({n}) needs {len(ks)} alpha and beta values")
        gamma = -2 * sum((a * b for a, b in zip(alpha, beta)), ZERO)
        if not gamma:
            raise LieAlgebraError("gamma = -2 sum alpha_k beta_k must be nonzero")
        target = build_concrete(family, n)
        if family == "isu":
            delta, mu = ONE, i
            pair = (lambda k: n - k) if verbatim else (lambda k: n - k + 1)
            U = lambda a, b: f"U^{a}_{b}"
            J, A, B = [], [], []
            for k, a, b in zip(ks, alpha, beta):
                m = pair(k)
                J += [(1, U(k, m)), (-1, U(m, k))]
                A += [(a, f"P^{k}"), (-a, f"P_{k}"), (-i * a, f"P^{m}"), (i * a, f"P_{m}")]
                B += [(b, U(1, k)), (b, U(k, n)), (i * b, U(1, m)), (i * b, U(m, n))]
            H = [(1, U(1, 1)), (-1, U(n, n))]
            E = [(1, "P^1"), (1, f"P_{n}")]
        else:
            delta, mu = i, i
            Y = lambda a, b: _Y(a, b)

            def y(c, a, b):
                s, sym = Y(a, b)
                return (c * s, sym)

            J, A, B = [], [], []
            for k, a, b in zip(ks, alpha, beta):
                m = n - k + 1
                J.append(y(1, k, m))
                A += [(a, f"P_{k}"), (-i * a, f"P_{m}")]
                B += [y(b, 1, k), y(-i * b, k, n), y(i * b, 1, m), y(b, m, n)]
            H = [y(1, 1, n)]
            E = [(1, "P_1"), (i, f"P_{n}")]
        source = build_abstract("L", gamma, delta, mu)
        label = f"{family}({n})"
    elif family == "schrodinger":
        if n < 2:
            raise LieAlgebraError(f"schrodinger embedding needs n >= 2, got {n}")
        ks = list(_sch_k_range(n))
        alpha = tuple(gr(a) for a in (alpha or [1] * len(ks)))
        if len(alpha) != len(ks):
            raise LieAlgebraError(f"schrodinger({n}) needs {len(ks)} alpha values")
        if any(not a for a in alpha):
            raise LieAlgebraError("alpha_k must be nonzero")
        beta = ()
        gamma, delta, mu = gr(-1), gr(2), gr(-2)
        target = build_concrete("schrodinger", n)
        rot = [(i, _Jsch(k, k + 1)[1]) for k in ks]
        J = rot + [(1, "D")]
        H = rot + [(1, "D")] if verbatim else rot + [(-1, "D")]
        B = [(1, "P_t")]
        A, E = [], []
        for k, a in zip(ks, alpha):
            A += [(a, f"G_{k}"), (i * a, f"G_{k + 1}")]
            E += [(a, f"P_{k}"), (i * a, f"P_{k + 1}")]
        source = build_abstract("L", gamma, delta, mu)
        label = f"schrodinger({n})"
    else:
        alpha = beta = ()
        target = build_concrete("poincare")
        J = [(1, "J_3")]
        H = [(1, "K_3")]
        E = [(1, "P_t"), (-1, "P_3")]
        A = [(1, "P_1"), (i, "P_2")]
        B = [(1, "J_1"), (-i, "J_2"), (i, "K_1"), (1, "K_2")]
        source = build_abstract("L", 2 * i, 1, i)
        label = "poincare"
    if verbatim:
        label += " [verbatim]"
    images = {s: _parse_terms(target, t)
              for s, t in zip(("J", "H", "E", "A", "B"), (J, H, E, A, B))}
    return EmbeddingRecipe(source, target, images, alpha, beta, label)


def identity_recipe(alg: LieAlgebraDef) -> EmbeddingRecipe:
    images = {s: {k: ONE} for k, s in enumerate(alg.symbols)}
    return EmbeddingRecipe(alg, alg, images, label=f"id[{alg.name}]")


@dataclass
class RelationResult:
    lhs: tuple  # (x, y) source symbols
    expected: str  # image of [x, y] in the source algebra
    residual: str
    passed: bool


@dataclass
class EmbeddingReport:
    label: str
    relations: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.relations)

    @property
    def failures(self) -> list:
        return [r for r in self.relations if not r.passed]


def embedding_check(rec: EmbeddingRecipe) -> EmbeddingReport:
    """Compare ``[img x, img y]`` with ``img [x, y]`` for every source pair."""
    src, tgt = rec.source, rec.target
    results = []
    for i, j in itertools.combinations(range(src.dim), 2):
        x, y = src.symbols[i], src.symbols[j]
        lhs = tgt.bracket(rec.images[x], rec.images[y])
        rhs = rec.image(src.bracket_gens(i, j))
        res = lc_add(lhs, rhs, -1)
        results.append(RelationResult((x, y), tgt.render(rhs), tgt.render(res), not res))
    return EmbeddingReport(rec.label, results)


def dualize(obj):
    """Transport along H->H, E->E, A->-B, B->A (J->J) between L and L' families.

    Works on a carrier algebra or on an embedding recipe; applying it twice
    negates the images of A and B.
    """
    if isinstance(obj, LieAlgebraDef):
        if obj.family not in DUAL_FAMILY:
            raise LieAlgebraError("dualize needs an abstract carrier algebra")
        g, d, m = obj.params
        fam = DUAL_FAMILY[obj.family]
        return build_abstract(fam, g, d, m if fam in ("L", "Lprime") else None)
    if isinstance(obj, EmbeddingRecipe):
        src = dualize(obj.source)
        images = dict(obj.images)
        images["A"] = dict(obj.images["B"])
        images["B"] = lc_scale(obj.images["A"], -1)
        label = obj.label + "'" if not obj.label.endswith("'") else obj.label[:-1]
        return EmbeddingRecipe(src, obj.target, images, obj.alpha, obj.beta, label)
    raise TypeError(f"cannot dualize {type(obj).__name__}")
