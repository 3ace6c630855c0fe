"""Restricted supernomial polynomials S and S~ in 1/q.

Both families are Laurent polynomials with support in [-(m^2 - l^2), 0] and
nonnegative coefficients.  They are computed from their explicit double-sum
definitions; the seven shift recurrences relating them are verification
targets, never used in the computation itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .qcore import QSeries, q_binomial


@lru_cache(maxsize=None)
def S(m: int, l: int) -> QSeries:
    """S_{m,l}(q) = sum_nu q^{(nu+l-m)(nu+l) + nu(nu-m)} [m,nu]_q [nu,m-l-nu]_q.

    Zero for |l| > m; S_{m,m} = 1.
    """
    if m < 0:
        raise ValueError("S needs m >= 0")
    out = QSeries.zero(None)
    for nu in range(m + 1):
        inner = q_binomial(nu, m - l - nu)
        if inner.is_zero():
            continue
        exp = (nu + l - m) * (nu + l) + nu * (nu - m)
        out = out + (q_binomial(m, nu) * inner).shift(exp)
    return out


@lru_cache(maxsize=None)
def S_tilde(m: int, l: int) -> QSeries:
    """Companion family: same sum with exponent (nu+l-m)(nu+l-1) + nu(nu-m)."""
    if m < 0:
        raise ValueError("S_tilde needs m >= 0")
    out = QSeries.zero(None)
    for nu in range(m + 1):
        inner = q_binomial(nu, m - l - nu)
        if inner.is_zero():
            continue
        exp = (nu + l - m) * (nu + l - 1) + nu * (nu - m)
        out = out + (q_binomial(m, nu) * inner).shift(exp)
    return out


SImpl = Callable[[int, int], QSeries]


@dataclass(frozen=True)
class RecurrenceCheck:
    identity: str
    m: int
    l: int
    ok: bool
    detail: str


def _identity_table(s: SImpl, st: SImpl):
    # Each entry: name -> (lhs, rhs) as callables of (m, l); identities hold
    # for all integers l, stepping m -> m+1.
    return {
        "sym": lambda m, l: (s(m, -l), s(m, l)),
        "sym~": lambda m, l: (st(m, -l), st(m, l).shift(l)),
        "rec1": lambda m, l: (
            s(m + 1, l),
            s(m, l + 1).shift(-m - l - 1) + s(m, l) + st(m, l - 1).shift(-m + l - 1),
        ),
        "rec2": lambda m, l: (
            s(m + 1, l),
            s(m, l + 1).shift(-m - l - 1) + st(m, l).shift(-m) + s(m, l - 1),
        ),
        "rec3": lambda m, l: (
            s(m + 1, l),
            st(m, l + 1).shift(-m) + s(m, l) + s(m, l - 1).shift(-m + l - 1),
        ),
        "rec4": lambda m, l: (
            st(m + 1, l),
            s(m, l + 1).shift(-l) + s(m, l) + st(m, l - 1).shift(-m + l - 1),
        ),
        "rec5": lambda m, l: (
            st(m + 1, l),
            s(m, l + 1).shift(-l) + st(m, l).shift(-m) + s(m, l - 1),
        ),
        "rec6": lambda m, l: (
            st(m + 1, l),
            st(m, l + 1).shift(-m - l) + s(m, l).shift(-l) + s(m, l - 1),
        ),
    }


def verify_S_recurrences(m_max: int,
                         s_impl: SImpl = S,
                         s_tilde_impl: SImpl = S_tilde) -> list[RecurrenceCheck]:
    """Check the symmetry and all six step recurrences for 0 <= m < m_max,
    |l| <= m + 1.  Failures are collected, not raised, so a deliberately
    perturbed implementation shows up as failing cases.
    """
    table = _identity_table(s_impl, s_tilde_impl)
    out: list[RecurrenceCheck] = []
    for name, pair in table.items():
        for m in range(m_max):
            for l in range(-(m + 1), m + 2):
                lhs, rhs = pair(m, l)
                ok = lhs == rhs
                detail = "exact" if ok else f"lhs {lhs!r} != rhs {rhs!r}"
                out.append(RecurrenceCheck(name, m, l, ok, detail))
    return out


def S_table(m_max: int, l_max: Optional[int] = None) -> dict:
    """JSON-ready rectangle of S and S~ values for 0 <= m <= m_max, |l| <= l_max."""
    lm = m_max if l_max is None else l_max
    cells = []
    for m in range(m_max + 1):
        for l in range(-lm, lm + 1):
            cells.append({
                "m": m,
                "l": l,
                "S": S(m, l).to_json_obj(),
                "S_tilde": S_tilde(m, l).to_json_obj(),
            })
    return {"m_max": m_max, "l_max": lm, "cells": cells}
