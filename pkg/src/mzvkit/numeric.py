"""Floating-point evaluation of multiple zeta / t values and value expressions.

The nested sums are evaluated in one streaming pass over m = 1..N (or the
first N odd integers), keeping one running accumulator per depth level.
The pass is chunked: inside a chunk each level is a cumulative sum over
the chunk, and only the per-level boundary values cross chunks, with
compensated carries.  Chunk boundaries are fixed by N alone, so results
are bit-identical for a given N regardless of scheduling.

The reported value includes an analytic tail estimate: the outer-level
tail with the level-2 accumulator frozen, plus the leading drift of that
accumulator (this drift carries the log factor when the second exponent
is 1).  err upper-bounds what the model leaves out; it is validated by
the doubling test, not proven.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .harmonic import contraction_expand
from .poly import CoeffPoly
from .values import StarAtomError, ValueExpr
from .words import Index, index_of_word, is_admissible

_EPS = 2.0 ** -52
_CHUNK = 1 << 20

# Bernoulli numbers B_2, B_4, B_6, B_8 and |B_10| for Euler-Maclaurin tails
_B = (Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30))
_B10 = Fraction(5, 66)


@dataclass(frozen=True)
class NumResult:
    """A float value with an error upper estimate and the cutoff used."""

    value: float
    err: float
    cutoff: int

    def to_json(self) -> dict:
        return {"value": repr(self.value), "err": repr(self.err), "N": self.cutoff}

    @classmethod
    def from_json(cls, data: dict) -> "NumResult":
        return cls(float(data["value"]), float(data["err"]), int(data["N"]))


@dataclass
class Bindings:
    """Numeric assignments for the formal variables; L defaults to log 2."""

    r: float | None = None
    T: float | None = None
    V: float | None = None
    L: float = math.log(2.0)

    def as_dict(self) -> dict:
        return {"r": self.r, "T": self.T, "V": self.V, "L": self.L}


def _rising(s: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= s + i
    return out


def zeta_const(s: int, target_err: float = 1e-13) -> NumResult:
    """Riemann zeta at an integer s >= 2: direct sum plus the
    Euler-Maclaurin tail through the B_8 term."""
    if s < 2:
        raise ValueError("zeta_const needs s >= 2")
    if target_err <= 0:
        raise ValueError("target_err must be positive")
    M = 64
    while True:
        a = M + 1
        resid = float(_B10) / math.factorial(10) * _rising(s, 9) * float(a) ** (-s - 9)
        if resid <= target_err / 4 or M >= (1 << 20):
            break
        M *= 2
    head = math.fsum(m ** (-float(s)) for m in range(1, M + 1))
    af = float(M + 1)
    tail = af ** (1.0 - s) / (s - 1.0) + 0.5 * af ** (-float(s))
    for k, b in enumerate(_B, start=1):
        tail += float(b) / math.factorial(2 * k) * _rising(s, 2 * k - 1) \
            * af ** (-float(s + 2 * k - 1))
    value = head + tail
    err = resid + 8.0 * _EPS * value
    if err > target_err:
        raise ValueError(f"cannot reach target_err={target_err} in double precision")
    return NumResult(value, err, M)


def _pow_arrays(inv: np.ndarray, exps: set) -> dict:
    """inv**k for each needed k, built by repeated multiplication."""
    out = {1: inv}
    maxk = max(exps)
    cur = inv
    for k in range(2, maxk + 1):
        cur = cur * inv
        if k in exps or k < maxk:
            out[k] = cur
    return {k: out[k] for k in exps}


def _stream(ks: Index, N: int, odd: bool):
    """One streaming pass; returns (total, suffix) where suffix[j] is the
    final value of the level-j accumulator (suffix sums from level j)."""
    depth = len(ks)
    carry = [0.0] * (depth + 1)   # carry[j] for levels 2..depth
    comp = [0.0] * (depth + 1)
    total, total_c = 0.0, 0.0
    exps = set(ks)
    for lo in range(0, N, _CHUNK):
        hi = min(lo + _CHUNK, N)
        base = np.arange(lo, hi, dtype=np.float64)
        x = 2.0 * base + 1.0 if odd else base + 1.0
        inv = 1.0 / x
        pw = _pow_arrays(inv, exps)
        shifted = None  # level j+1 running values at m-1, within this chunk
        for j in range(depth, 0, -1):
            inc = pw[ks[j - 1]] if shifted is None else pw[ks[j - 1]] * shifted
            if j == 1:
                t = float(np.sum(inc))
                # Neumaier update of the outer total
                s = total + t
                if abs(total) >= abs(t):
                    total_c += (total - s) + t
                else:
                    total_c += (t - s) + total
                total = s
            else:
                cs = np.cumsum(inc)
                start = carry[j] + comp[j]
                shifted = np.empty_like(cs)
                shifted[0] = start
                shifted[1:] = start + cs[:-1]
                t = float(cs[-1])
                s = carry[j] + t
                if abs(carry[j]) >= abs(t):
                    comp[j] += (carry[j] - s) + t
                else:
                    comp[j] += (t - s) + carry[j]
                carry[j] = s
    suffix = [0.0] * (depth + 2)
    suffix[depth + 1] = 1.0
    for j in range(2, depth + 1):
        suffix[j] = carry[j] + comp[j]
    if depth >= 1:
        suffix[1] = total + total_c
    return total + total_c, suffix


def _tail_and_err(ks: Index, N: int, odd: bool, suffix: list):
    """Analytic tail correction and error bound for the streamed sum."""
    depth = len(ks)
    k1 = ks[0]
    if odd:
        a = 2.0 * N + 1.0

        def tau(s):
            return a ** (1.0 - s) / (2.0 * (s - 1.0)) + 0.5 * a ** (-float(s)) \
                + s / 6.0 * a ** (-1.0 - s)

        def tau_next(s):
            return s * (s + 1) * (s + 2) / 90.0 * a ** (-3.0 - s)
        drift_scale = 0.25
    else:
        a = N + 1.0

        def tau(s):
            return a ** (1.0 - s) / (s - 1.0) + 0.5 * a ** (-float(s)) \
                + s / 12.0 * a ** (-1.0 - s)

        def tau_next(s):
            return s * (s + 1) * (s + 2) / 720.0 * a ** (-3.0 - s)
        drift_scale = 1.0

    s2 = suffix[2] if depth >= 2 else 1.0
    s3 = suffix[3] if depth >= 3 else (1.0 if depth == 2 else 0.0)
    s4 = suffix[4] if depth >= 4 else (1.0 if depth == 3 else 0.0)

    tail = s2 * tau(k1)
    err = abs(s2) * tau_next(k1)
    if depth >= 2:
        k2 = ks[1]
        if k2 == 1:
            drift = s3 * drift_scale * a ** (1.0 - k1) / (k1 - 1) ** 2
            d_err = 0.5 * abs(drift)
            # consecutive 1s after position 1 add higher log powers
            run = 1
            while 1 + run < depth and ks[1 + run] == 1:
                run += 1
            if run >= 2:
                extra = 4.0 * abs(s4) * drift_scale * a ** (1.0 - k1) / (k1 - 1) ** 3
                extra *= max(1.5 * math.log(a), 1.0) ** (run - 2)
                d_err += extra
        else:
            drift = s3 * drift_scale * a ** (2.0 - k1 - k2) / (k2 - 1) \
                * (1.0 / (k1 - 1) - 1.0 / (k1 + k2 - 2))
            d_err = 0.75 * abs(drift) + 4.0 * abs(s3) * a ** (1.0 - k1 - k2)
        tail += drift
        err += d_err
    return tail, err


_series_cache: dict = {}


def _series_num(ks: Index, N: int, odd: bool) -> NumResult:
    if not is_admissible(ks):
        raise ValueError(f"non-admissible index {ks}")
    if N < 100:
        raise ValueError("cutoff N must be >= 100")
    key = (ks, N, odd)
    got = _series_cache.get(key)
    if got is not None:
        return got
    total, suffix = _stream(ks, N, odd)
    tail, err = _tail_and_err(ks, N, odd, suffix)
    value = total + tail
    err += 32.0 * _EPS * len(ks) * (math.sqrt(N) + 64.0) * max(1.0, abs(value))
    out = NumResult(value, err, N)
    _series_cache[key] = out
    return out


def mzv_num(idx: Index, N: int) -> NumResult:
    """Multiple zeta value by direct streaming summation to cutoff N."""
    return _series_num(tuple(idx), N, odd=False)


def mtv_num(idx: Index, N: int) -> NumResult:
    """Multiple t value: the same streaming sum over the first N odd integers."""
    return _series_num(tuple(idx), N, odd=True)


def _atom_num(atom, N: int) -> NumResult:
    if atom.star:
        raise StarAtomError(f"cannot evaluate star atom {atom.render()}")
    if not atom.index:
        return NumResult(1.0, 0.0, 0)
    if not is_admissible(atom.index):
        raise ValueError(f"non-admissible atom {atom.render()}")
    if atom.flavor == "zeta":
        if len(atom.index) == 1:
            return zeta_const(atom.index[0])
        return mzv_num(atom.index, N)
    return mtv_num(atom.index, N)


def value_expr_num(expr: ValueExpr, b: Bindings, N: int) -> NumResult:
    """Evaluate a star-free ValueExpr: atoms by the series evaluators,
    coefficients at the bindings, errors by the triangle inequality."""
    bind = b.as_dict()
    values, errs = [], []
    for mono, coeff in expr.terms.items():
        c = coeff.eval_float(bind)
        prod, bound = 1.0, 0.0
        for atom in mono:
            res = _atom_num(atom, N)
            bound = bound * (abs(res.value) + res.err) + abs(prod) * res.err
            prod *= res.value
        c_err = 4.0 * _EPS * abs(c)
        values.append(c * prod)
        errs.append(abs(c) * bound + c_err * (abs(prod) + bound))
    value = math.fsum(values)
    err = math.fsum(errs) + 4.0 * _EPS * math.fsum(abs(v) for v in values)
    return NumResult(value, err, N)


def interp_num(idx: Index, kind: str, r_val, N: int) -> NumResult:
    """Interpolated multiple zeta/t value at an exact rational r: expand the
    comma/plus contractions, bind r, and combine the contracted series."""
    if kind not in ("zeta", "t"):
        raise ValueError("kind must be 'zeta' or 't'")
    idx = tuple(idx)
    if not is_admissible(idx):
        raise ValueError(f"non-admissible index {idx}")
    r_val = Fraction(r_val)
    expansion = contraction_expand(idx)
    values, errs = [], []
    for w, coeff in expansion.terms.items():
        c = float(coeff.substitute("r", r_val).const_value())
        if not c:
            continue
        sub = index_of_word(w)
        if kind == "zeta":
            res = zeta_const(sub[0]) if len(sub) == 1 else mzv_num(sub, N)
        else:
            res = mtv_num(sub, N)
        values.append(c * res.value)
        errs.append(abs(c) * res.err + 4.0 * _EPS * abs(c * res.value))
    value = math.fsum(values)
    err = math.fsum(errs) + 4.0 * _EPS * math.fsum(abs(v) for v in values)
    return NumResult(value, err, N)
