"""Tiny parser for coproduct formulas written the way they are typeset, e.g.

    H ⊗ e^{-δσ} + 1 ⊗ H - δ A ⊗ B e^{-2δσ}

Juxtaposition is the enveloping-algebra product, ``⊗`` builds a 2-leg tensor,
``e^{...}`` is the truncated exponential.  Atoms: single-letter generators,
integers, ``i``, the parameters γ δ μ and the primitive series σ ρ ρ'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import TensorElement, tensor
from .scalars import I
from .uea import UEAElement, series_apply


class FormulaError(ValueError):
    def __init__(self, message, text, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset} in {text!r}")


@dataclass
class Token:
    kind: str
    value: str
    pos: int


_SINGLE = {"+": "+", "-": "-", "−": "-", "(": "(", ")": ")", "{": "{", "}": "}",
           "/": "/", "⊗": "TENSOR", "^": "^"}


def tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in _SINGLE:
            toks.append(Token(_SINGLE[ch], ch, pos))
            pos += 1
        elif ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            toks.append(Token("NUM", text[pos:end], pos))
            pos = end
        elif ch in "ρ" and pos + 1 < len(text) and text[pos + 1] in "'′":
            toks.append(Token("NAME", "ρ'", pos))
            pos += 2
        elif ch.isalpha():
            toks.append(Token("NAME", ch, pos))
            pos += 1
        else:
            raise FormulaError(f"unexpected character {ch!r}", text, pos)
    toks.append(Token("END", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, env):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.env = env

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok.kind != kind:
            raise FormulaError(f"expected {kind}, found {tok.value or 'end'!r}",
                               self.text, tok.pos)
        self.i += 1
        return tok

    # tensor level
    def tensor_expr(self) -> TensorElement:
        sign = 1
        if self.peek().kind in "+-":
            sign = -1 if self.take().kind == "-" else 1
        total = self.tensor_term() * sign
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
            total = total + self.tensor_term() * sign
        self.take("END")
        return total

    def tensor_term(self) -> TensorElement:
        left = self.product()
        self.take("TENSOR")
        right = self.product()
        return tensor(left, right)

    # algebra level
    def sum_expr(self) -> UEAElement:
        sign = 1
        if self.peek().kind in "+-":
            sign = -1 if self.take().kind == "-" else 1
        total = self.product() * sign
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
            total = total + self.product() * sign
        return total

    def product(self) -> UEAElement:
        value = self.atom()
        while True:
            tok = self.peek()
            if tok.kind == "/":
                self.take()
                den = self.atom()
                if any(m for m in den.terms):
                    raise FormulaError("division by a non-scalar", self.text, tok.pos)
                value = value / den.constant_term()
            elif tok.kind in ("NUM", "NAME", "(", "{"):
                value = value * self.atom()
            else:
                return value

    def atom(self) -> UEAElement:
        tok = self.take()
        U = self.env.U
        if tok.kind == "NUM":
            return U.scalar(int(tok.value))
        if tok.kind in ("(", "{"):
            inner = self.sum_expr()
            self.take(")" if tok.kind == "(" else "}")
            return inner
        if tok.kind == "NAME":
            if tok.value == "e" and self.peek().kind == "^":
                self.take("^")
                self.take("{")
                arg = self.sum_expr()
                self.take("}")
                return series_apply("exp", arg)
            return self.env.lookup(tok.value, tok.pos, self.text)
        raise FormulaError(f"unexpected {tok.value or 'end'!r}", self.text, tok.pos)


class FormulaEnv:
    """Names available in formulas: generators, γ δ μ, i, σ ρ ρ'."""

    def __init__(self, U, params, series: dict):
        self.U = U
        self.params = params
        self.series = series

    def lookup(self, name, pos, text) -> UEAElement:
        U = self.U
        if name in U.alg.symbols:
            return U.gen(name)
        g, d, m = self.params
        scalars = {"γ": g, "δ": d, "μ": m, "i": I}
        if name in scalars:
            return U.scalar(scalars[name])
        named = {"σ": "sigma", "ρ": "rho", "ρ'": "rho_prime"}
        if name in named:
            val = self.series.get(named[name])
            if val is None:
                raise FormulaError(f"{name} is not defined for {U.alg.name}", text, pos)
            return val
        raise FormulaError(f"unknown name {name!r}", text, pos)


def evaluate_tensor(text: str, env: FormulaEnv) -> TensorElement:
    return _Parser(text, env).tensor_expr()


def evaluate(text: str, env: FormulaEnv) -> UEAElement:
    p = _Parser(text, env)
    out = p.sum_expr()
    p.take("END")
    return out
