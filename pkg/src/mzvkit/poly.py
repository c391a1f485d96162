"""Exact polynomials over Q in the four formal variables r, T, V, L.

L stands for log 2.  Terms are stored sparsely as a map from exponent
4-tuples to nonzero Fractions; every operation is exact.
"""
from __future__ import annotations

import re
from fractions import Fraction

VARS = ("r", "T", "V", "L")
_VAR_POS = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0, 0, 0, 0)


def _term_key(exps):
    # canonical term order: total degree first, then exponent tuple, descending
    return (sum(exps), exps)


class CoeffPoly:
    """A polynomial in r, T, V, L with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms must already be clean: no zero coefficients
        self.terms: dict[tuple, Fraction] = terms if terms is not None else {}

    @classmethod
    def const(cls, q) -> "CoeffPoly":
        q = Fraction(q)
        return cls({} if q == 0 else {_ZERO_EXP: q})

    @classmethod
    def var(cls, name: str, exp: int = 1, coeff=1) -> "CoeffPoly":
        if name not in _VAR_POS:
            raise ValueError(f"unknown variable {name!r}")
        if exp < 0:
            raise ValueError("negative exponent")
        coeff = Fraction(coeff)
        if coeff == 0:
            return cls()
        exps = [0, 0, 0, 0]
        exps[_VAR_POS[name]] = exp
        return cls({tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, CoeffPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == CoeffPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "CoeffPoly":
        if not isinstance(other, CoeffPoly):
            other = CoeffPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CoeffPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "CoeffPoly":
        if not isinstance(other, CoeffPoly):
            other = CoeffPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "CoeffPoly":
        return CoeffPoly.const(other) - self

    def __mul__(self, other) -> "CoeffPoly":
        if not isinstance(other, CoeffPoly):
            q = Fraction(other)
            if q == 0:
                return CoeffPoly()
            return CoeffPoly({e: c * q for e, c in self.terms.items()})
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return CoeffPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CoeffPoly":
        if n < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def substitute(self, name: str, value) -> "CoeffPoly":
        """Substitute an exact rational for one variable."""
        pos = _VAR_POS[name]
        value = Fraction(value)
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            k = e[pos]
            if k:
                c = c * value**k
                e = e[:pos] + (0,) + e[pos + 1:]
            if c:
                s = out.get(e, 0) + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return CoeffPoly(out)

    def eval_float(self, bindings: dict[str, float]) -> float:
        """Evaluate at float bindings; every variable that occurs must be bound."""
        total = 0.0
        for e, c in self.terms.items():
            x = float(c)
            for pos, k in enumerate(e):
                if k:
                    name = VARS[pos]
                    if name not in bindings or bindings[name] is None:
                        raise ValueError(f"unbound variable {name!r}")
                    x *= bindings[name] ** k
            total += x
        return total

    def variables(self) -> set[str]:
        out = set()
        for e in self.terms:
            for pos, k in enumerate(e):
                if k:
                    out.add(VARS[pos])
        return out

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self.terms.values()), default=Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_term_key, reverse=True):
            c = self.terms[e]
            factors = [f"{VARS[i]}^{k}" if k > 1 else VARS[i]
                       for i, k in enumerate(e) if k]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CoeffPoly({self})"


ZERO = CoeffPoly()
ONE = CoeffPoly.const(1)
R = CoeffPoly.var("r")
T = CoeffPoly.var("T")
V = CoeffPoly.var("V")
L = CoeffPoly.var("L")

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([rTVL])|(\^)|(\*)|(\+)|(-))")


def parse_poly(text: str) -> CoeffPoly:
    """Parse the canonical rendering produced by str(CoeffPoly)."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"bad polynomial syntax at position {pos}: {text!r}")
            break
        tokens.append(m)
        pos = m.end()

    result = ZERO
    i = 0
    n = len(tokens)

    def term():
        nonlocal i
        coeff = Fraction(1)
        exps = [0, 0, 0, 0]
        saw = False
        if i < n and tokens[i].group(1):
            coeff = Fraction(tokens[i].group(1))
            i += 1
            saw = True
        while i < n and tokens[i].group(2):
            v = tokens[i].group(2)
            i += 1
            k = 1
            if i < n and tokens[i].group(3):
                i += 1
                if i >= n or not tokens[i].group(1) or "/" in tokens[i].group(1):
                    raise ValueError("expected integer exponent")
                k = int(tokens[i].group(1))
                i += 1
            exps[_VAR_POS[v]] += k
            saw = True
            if i < n and tokens[i].group(4):  # optional '*' between variable factors
                i += 1
        if not saw:
            raise ValueError("expected a term")
        return CoeffPoly({tuple(exps): coeff}) if coeff else ZERO

    sign = 1
    if i < n and tokens[i].group(6):
        sign = -1
        i += 1
    elif i < n and tokens[i].group(5):
        i += 1
    result = result + term() * sign
    while i < n:
        if tokens[i].group(5):
            sign = 1
        elif tokens[i].group(6):
            sign = -1
        else:
            raise ValueError(f"expected '+' or '-' in {text!r}")
        i += 1
        result = result + term() * sign
    return result
