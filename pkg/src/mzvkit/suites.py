"""Reproducible verification suites over configurable parameter bounds."""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core_checks import check_core_identity
from .harmonic import contraction_expand, first_difference, s_r
from .identities import IDENTITY_IDS, check_identity
from .report import Report, make_report
from .theorems import (COROLLARY_NAMES, THEOREM_NAMES, lemma33_cross,
                       verify_theorem)
from .words import word_of_index, z

SUITES = ("core", "theorems", "corollaries", "numeric", "all")

_CONCRETE_POOL = (z(1), z(2), z(3))
_FREE_POOL = ((0,), (1,), (0, 1))
_FREE_LETTER = (0, 1)
_SEED = 20230817


@dataclass
class SuiteConfig:
    suite: str = "all"
    max_p: int = 6
    max_q: int = 6
    max_weight: int = 9
    N: int = 10_000_000
    tol: float = 1e-5
    fmt: str = "json"

    def validate(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; pick one of {SUITES}")
        if min(self.max_p, self.max_q, self.max_weight) < 1 or self.N < 100:
            raise ValueError("parameter bounds must be positive (and N >= 100)")
        if self.tol <= 0:
            raise ValueError("tolerance must be > 0")
        if self.fmt not in ("json", "text"):
            raise ValueError("format must be json or text")


def _letter_name(a) -> str:
    return f"z{len(a)}" if all(g == 0 for g in a) else "m" + "".join(map(str, a))


def _random_word(rng: random.Random, max_weight: int, concrete: bool = True):
    w = []
    budget = rng.randint(1, max_weight)
    while budget > 0:
        k = rng.randint(1, min(4, budget))
        w.append(z(k) if concrete else tuple(sorted(
            rng.choice((0, 1)) for _ in range(k))))
        budget -= k
    return tuple(w)


def core_checks(max_weight: int = 9, seed: int = _SEED):
    """The structural identity battery plus the definition-equivalence scan."""
    rng = random.Random(seed)
    reports: list[Report] = []

    # mixed letter sequences for the head-contraction recurrence
    seqs = [(a,) for a in _CONCRETE_POOL]
    seqs += [(a, b) for a in _CONCRETE_POOL for b in _CONCRETE_POOL]
    seqs += [(a, b, c) for a in _CONCRETE_POOL for b in _CONCRETE_POOL
             for c in _CONCRETE_POOL]
    for _ in range(30):
        n = rng.randint(4, 5)
        seqs.append(tuple(rng.choice(_CONCRETE_POOL) for _ in range(n)))
    for _ in range(20):
        n = rng.randint(2, 5)
        seqs.append(tuple(rng.choice(_FREE_POOL) for _ in range(n)))
    for letters in seqs:
        rep = check_core_identity("lemma2.1", (), letters)
        rep.params = tuple(_letter_name(a) for a in letters)
        reports.append(rep)

    for a in (*_CONCRETE_POOL, _FREE_LETTER):
        for n in range(0, 9):
            rep = check_core_identity("prop2.2", (n,), (a,))
            rep.params = (n, _letter_name(a))
            reports.append(rep)
        for n in range(1, 9):
            rep = check_core_identity("eqS1", (n,), (a,))
            rep.params = (n, _letter_name(a))
            reports.append(rep)

    pairs = [(z(2), z(3)), (z(2), z(1)), (z(3), z(2)), (z(1), z(2)),
             ((0,), (1,))]
    for a1, a2 in pairs:
        top = 6 if all(g == 0 for g in a1 + a2) else 4
        for name in ("prop2.4", "prop2.5"):
            for k in range(0, top + 1):
                rep = check_core_identity(name, (k,), (a1, a2))
                rep.params = (k, _letter_name(a1), _letter_name(a2))
                reports.append(rep)

    for i in range(100):
        a = rng.choice(_CONCRETE_POOL if i % 2 else _FREE_POOL)
        w = _random_word(rng, 8, concrete=bool(i % 2))
        rep = check_core_identity("remark-circle", (), (a, *w))
        rep.params = (i, _letter_name(a))
        reports.append(rep)

    # the interpolation map agrees with the comma/plus contraction definition
    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    for weight in range(2, max_weight + 1):
        for idx in compositions(weight):
            if idx[0] < 2:
                continue
            t0 = time.perf_counter()
            witness = first_difference(s_r(word_of_index(idx)),
                                       contraction_expand(idx))
            reports.append(make_report("sr-contraction", idx, witness,
                                       time.perf_counter() - t0))

    for rep in reports:
        rep.suite = "core"
    return reports


def theorem_checks(max_p: int = 6, max_q: int = 6):
    reports = []
    for name in THEOREM_NAMES:
        top = max_p if name.endswith("L") else max_q
        for k in range(top + 1):
            reports.append(verify_theorem(name, p=k, q=k))
    for p in range(min(5, max_p) + 1):
        for q in range(min(5, max_q) + 1):
            reports.append(lemma33_cross(p, q))
    for rep in reports:
        rep.suite = "theorems"
    return reports


def corollary_checks(max_p: int = 6, max_q: int = 6):
    reports = []
    for name in COROLLARY_NAMES:
        top = max_p if name.endswith("a") else max_q
        for k in range(top + 1):
            reports.append(verify_theorem(name, p=k, q=k))
    for rep in reports:
        rep.suite = "corollaries"
    return reports


def numeric_checks(N: int = 10_000_000, tol: float = 1e-5):
    workers = max(1, int(os.environ.get("MZVKIT_WORKERS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(
                lambda ident: check_identity(ident, N, tol), IDENTITY_IDS))
    else:
        reports = [check_identity(ident, N, tol) for ident in IDENTITY_IDS]
    for rep in reports:
        rep.suite = "numeric"
    return reports


def run_suite(config: SuiteConfig):
    """Run the configured suites; reports come out in canonical order."""
    config.validate()
    out: list[Report] = []
    if config.suite in ("core", "all"):
        out.extend(core_checks(config.max_weight))
    if config.suite in ("theorems", "all"):
        out.extend(theorem_checks(config.max_p, config.max_q))
    if config.suite in ("corollaries", "all"):
        out.extend(corollary_checks(config.max_p, config.max_q))
    if config.suite in ("numeric", "all"):
        out.extend(numeric_checks(config.N, config.tol))
    out.sort(key=lambda r: (r.suite, r.name, tuple(str(p) for p in r.params)))
    return out
