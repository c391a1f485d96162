"""The twelve numerically discovered r = 1/2 identities and their checker.

Each identity equates an interpolated value at r = 1/2 with a rational
combination of zeta values, t values, and interpolated weight-4 factors.
The left side is evaluated through the contraction expansion; the right
side is a ValueExpr whose interpolated factors keep a symbolic r that is
bound to 1/2 at evaluation time, so both sides combine the same
contracted series.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .numeric import Bindings, NumResult, interp_num, value_expr_num
from .report import Report, make_report
from .values import Atom, ValueExpr, expand_value
from .words import Index, word_of_index

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Identity:
    ident: str
    flavor: str      # "zeta" | "t"
    index: Index
    rhs: ValueExpr   # may contain r (bound to 1/2 when evaluated)


def _Z(s: int) -> ValueExpr:
    return ValueExpr.from_atom(Atom("zeta", False, (s,)))


def _T2() -> ValueExpr:
    return ValueExpr.from_atom(Atom("t", False, (2,)))


def _interp22(flavor: str) -> ValueExpr:
    return expand_value(word_of_index((2, 2)), flavor, "interp")


def _combo(*terms) -> ValueExpr:
    out = ValueExpr.zero()
    for coeff, expr in terms:
        out = out + expr.scale(Fraction(coeff))
    return out


def _build_table() -> dict[str, Identity]:
    iz, it = _interp22("zeta"), _interp22("t")
    t2 = _T2()
    table = [
        Identity("zeta-232", "zeta", (2, 3, 2), _combo(
            (-5, _Z(2) * _Z(5)), (Fraction(73, 8), _Z(7)))),
        Identity("zeta-2322", "zeta", (2, 3, 2, 2), _combo(
            (2, iz * _Z(5)), (Fraction(115, 8), _Z(2) * _Z(7)),
            (Fraction(-105, 4), _Z(9)))),
        Identity("zeta-2232", "zeta", (2, 2, 3, 2), _combo(
            (-7, iz * _Z(5)), (Fraction(-155, 16), _Z(2) * _Z(7)),
            (Fraction(105, 4), _Z(9)))),
        Identity("zeta-212", "zeta", (2, 1, 2), _combo(
            (Fraction(-3, 2), _Z(2) * _Z(3)), (Fraction(17, 4), _Z(5)))),
        Identity("zeta-2122", "zeta", (2, 1, 2, 2), _combo(
            (Fraction(3, 5), iz * _Z(3)), (Fraction(11, 2), _Z(2) * _Z(5)),
            (Fraction(-301, 32), _Z(7)))),
        Identity("zeta-2212", "zeta", (2, 2, 1, 2), _combo(
            (Fraction(-21, 10), iz * _Z(3)), (Fraction(-13, 4), _Z(2) * _Z(5)),
            (Fraction(301, 32), _Z(7)))),
        Identity("t-232", "t", (2, 3, 2), _combo(
            (Fraction(381, 1024), _Z(7)))),
        Identity("t-2322", "t", (2, 3, 2, 2), _combo(
            (Fraction(5, 48), it * _Z(5)), (Fraction(87, 1024), t2 * _Z(7)))),
        Identity("t-2232", "t", (2, 2, 3, 2), _combo(
            (Fraction(-5, 48), it * _Z(5)), (Fraction(461, 2048), t2 * _Z(7)))),
        Identity("t-212", "t", (2, 1, 2), _combo(
            (Fraction(31, 64), _Z(5)))),
        Identity("t-2122", "t", (2, 1, 2, 2), _combo(
            (Fraction(1, 8), it * _Z(3)), (Fraction(29, 256), t2 * _Z(5)))),
        Identity("t-2212", "t", (2, 2, 1, 2), _combo(
            (Fraction(-1, 8), it * _Z(3)), (Fraction(1, 4), t2 * _Z(5)))),
    ]
    return {rec.ident: rec for rec in table}


IDENTITIES: dict[str, Identity] = _build_table()
IDENTITY_IDS = tuple(IDENTITIES)


def check_identity_record(rec: Identity, N: int, tol: float) -> Report:
    """Compare both sides of one identity numerically.  Passes only when the
    difference is within tol and within four times the combined error
    estimates."""
    t0 = time.perf_counter()
    lhs = interp_num(rec.index, rec.flavor, _HALF, N)
    rhs = value_expr_num(rec.rhs, Bindings(r=0.5), N)
    diff = abs(lhs.value - rhs.value)
    budget = 4.0 * (lhs.err + rhs.err)
    witness = None
    if diff > tol or diff > budget:
        witness = (f"|lhs-rhs| = {diff:.3e} exceeds "
                   f"{'tol %.1e' % tol if diff > tol else 'error budget %.3e' % budget}"
                   f" (lhs={lhs.value!r}, rhs={rhs.value!r})")
    return make_report(rec.ident, (N, tol), witness, time.perf_counter() - t0)


def check_identity(ident: str, N: int = 10_000_000, tol: float = 1e-5) -> Report:
    """Check one of the twelve identities by id, e.g. "zeta-232"."""
    if ident not in IDENTITIES:
        raise ValueError(f"unknown identity {ident!r}")
    return check_identity_record(IDENTITIES[ident], N, tol)
