"""Element literals: ``1+i``, ``x^2 - 3*x/2``, ``(t+1)/(t^2+2)``."""
from __future__ import annotations

import re

from ..errors import ValidationError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokens(text: str):
    out = []
    for num, name, op in _TOKEN.findall(text):
        if num:
            out.append(("num", int(num)))
        elif name:
            out.append(("name", name))
        elif op.strip():
            if op not in "+-*/^()":
                raise ValidationError(f"unexpected character {op!r} in literal {text!r}")
            out.append(("op", op))
    return out


class _Parser:
    def __init__(self, F, text):
        self.F = F
        self.text = text
        self.toks = _tokens(text)
        self.pos = 0
        self.syms = F.symbols()

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok != ("op", op):
            raise ValidationError(f"expected {op!r} in literal {self.text!r}")
        self.pos += 1
        return tok

    def expr(self):
        F = self.F
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = self.take()[1]
            v = self.term()
            v = F.neg(v) if sign == "-" else v
        else:
            v = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            w = self.term()
            v = F.add(v, w) if op == "+" else F.sub(v, w)
        return v

    def term(self):
        F = self.F
        v = self.factor()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                w = self.factor()
                if tok[1] == "*":
                    v = F.mul(v, w)
                else:
                    if F.is_zero(w):
                        raise ValidationError(f"division by zero in literal {self.text!r}")
                    v = F.div(v, w)
            elif tok[0] in ("num", "name") or tok == ("op", "("):
                v = F.mul(v, self.factor())  # implicit product, e.g. 2x
            else:
                return v

    def factor(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            neg = False
            if self.peek() == ("op", "-"):
                self.take()
                neg = True
            kind, e = self.take()
            if kind != "num":
                raise ValidationError(f"exponent must be an integer in literal {self.text!r}")
            if neg and self.F.is_zero(v):
                raise ValidationError(f"0 to a negative power in literal {self.text!r}")
            v = self.F.pow(v, -e if neg else e)
        return v

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.F.from_int(val)
        if kind == "name":
            if val not in self.syms:
                raise ValidationError(f"unknown symbol {val!r} for {self.F.name}; known: {sorted(self.syms)}")
            return self.syms[val]
        if (kind, val) == ("op", "("):
            v = self.expr()
            self.take(")")
            return v
        raise ValidationError(f"malformed literal {self.text!r}")


def parse_element(F, text: str):
    """Evaluate a literal over ``F`` using the generator names in ``F.symbols()``."""
    p = _Parser(F, text)
    if not p.toks:
        raise ValidationError("empty literal")
    v = p.expr()
    if p.pos != len(p.toks):
        raise ValidationError(f"trailing input in literal {text!r}")
    return v
