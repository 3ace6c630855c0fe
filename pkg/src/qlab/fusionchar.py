"""Fused-string characters and the graded decomposition they induce.

The weighted characters of fused strings of two- and three-dimensional
factors are Gaussian binomials and the S polynomials in 1/q.  Combining them
with an alternating Weyl sum (the Euler-characteristic route) reproduces the
finite polynomials I_m from the path decomposition; summing over m recovers
full minimal-model characters.  All checks are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .qcore import QSeries, QZChar, compare, poch_inv, q_binomial, supernomial2
from .report import CaseResult
from .supernomial import S
from .pathweights import ModelParams, delta
from .vircharacters import I_m, rocha_caridi


def ch_pi1_fused(m: int) -> QZChar:
    """Character of a fused string of m two-dimensional factors: the
    weight-l component is the Gaussian binomial [m, (m+l)/2]_q."""
    if m < 0:
        raise ValueError("m must be >= 0")
    comps = {}
    for l in range(-m, m + 1, 2):
        comps[l] = q_binomial(m, (m + l) // 2)
    return QZChar(comps)


def ch_pi2_fused(m: int) -> QZChar:
    """Character of a fused string of m three-dimensional factors: the
    weight-2l component is S_{m,l}(1/q)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    comps = {}
    for l in range(-m, m + 1):
        comps[2 * l] = S(m, l).flip()
    return QZChar(comps)


def weight_string(j: int) -> QZChar:
    """z-character of a single (j+1)-dimensional factor at q-degree zero."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return QZChar({w: QSeries.one(None) for w in range(-j, j + 1, 2)})


def verify_exact_sequence_chars(k1_max: int, k2_max: int) -> list[CaseResult]:
    """Character identity of the fusion short exact sequence, specialized to
    strings: [2k1, k2; a] = [2k1-2, k2+1; a] + q^{2k1+k2-1} [2k1-2, k2; a]."""
    out = []
    for k1 in range(1, k1_max + 1):
        for k2 in range(k2_max + 1):
            amax = k1 + k2
            ok_all = True
            bad = ""
            for a in range(-amax, amax + 1):
                lhs = supernomial2(2 * k1, k2, a)
                rhs = (supernomial2(2 * k1 - 2, k2 + 1, a)
                       + supernomial2(2 * k1 - 2, k2, a).shift(2 * k1 + k2 - 1))
                if lhs != rhs:
                    ok_all = False
                    bad = f" first failure at a={a}"
                    break
            out.append(CaseResult(
                f"exactseq k1={k1} k2={k2}", ok_all,
                ("exact for all weights" if ok_all else "mismatch") + bad))
    return out


def level1_char(i: int, cutoff: int | Fraction) -> QZChar:
    """Basic-module character at level one, sector i in {0, 1}: the component
    at weight 2n+i is q^{n^2 + n i} / (q)_infinity."""
    if i not in (0, 1):
        raise ValueError("sector must be 0 or 1")
    cut = Fraction(cutoff)
    comps: dict[int, QSeries] = {}
    n = 0
    while n * n + n * i < cut or n * n - n * i < cut:
        for nn in {n, -n}:
            e = nn * nn + nn * i
            if e < cut:
                comps[2 * nn + i] = poch_inv(None, cut - e).shift(e)
        n += 1
    return QZChar(comps)


def verify_pi2pi3(cutoff: int | Fraction) -> list[CaseResult]:
    """Level-one character as a q^{m^2}/(q)_m-weighted sum of flipped
    three-dimensional string characters, checked per weight component."""
    cut = Fraction(cutoff)
    lhs = level1_char(0, cut)
    out = []
    for l in range(-math.isqrt(int(cut)) - 1, math.isqrt(int(cut)) + 2):
        total = QSeries.zero(cut)
        quiet = 0
        m = abs(l)
        cap = int(cut) + abs(l) + 4
        while quiet < 3 and m <= cap:
            poly = S(m, l).shift(m * m)  # S_{m,l}(q) = flipped component at weight 2l
            if poly.floor >= cut:
                quiet += 1
            else:
                quiet = 0
                total = total + poly * poch_inv(m, cut - poly.floor)
            m += 1
        cmp = compare(total, lhs.component(2 * l).truncate(cut))
        out.append(CaseResult(f"pi2pi3 l={l}", cmp.ok, cmp.detail()))
    return out


def verify_pmn(N_max: int) -> list[CaseResult]:
    """Finite counterpart: q^{N^2} [2N, N+l]_{1/q} =
    sum_{m} q^{m^2} [N, m]_q S_{m,l}(q), exactly, for every weight."""
    out = []
    for N in range(N_max + 1):
        for l in range(-N, N + 1):
            lhs = q_binomial(2 * N, N + l).flip().shift(N * N)
            rhs = QSeries.zero(None)
            for m in range(abs(l), N + 1):
                rhs = rhs + (q_binomial(N, m) * S(m, l)).shift(m * m)
            ok = lhs == rhs
            detail = "exact" if ok else f"{lhs!r} != {rhs!r}"
            out.append(CaseResult(f"pmn N={N} l={l}", ok, detail))
    return out


def euler_multiplicity(V: QZChar, k: int, l: int,
                       cutoff: Optional[int | Fraction] = None) -> QSeries:
    """Alternating Weyl sum extracting the level-k sector-l multiplicity:
    sum_lam q^{-(k+2) lam^2 + (l+1) lam} (V^{2(k+2)lam - l} - V^{2(k+2)lam - l - 2}).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    ws = V.weights()
    out = QSeries.zero(None)
    if ws:
        step = 2 * (k + 2)
        lam_lo = math.ceil(Fraction(ws[0] + l, step))
        lam_hi = math.floor(Fraction(ws[-1] + l + 2, step))
        for lam in range(lam_lo, lam_hi + 1):
            diff = V.component(step * lam - l) - V.component(step * lam - l - 2)
            if diff.is_zero() and diff.is_exact:
                continue
            out = out + diff.shift(-(k + 2) * lam * lam + (l + 1) * lam)
    return out if cutoff is None else out.truncate(cutoff)


def abf_finitized(N: int, k: int, j: int, l: int) -> QSeries:
    """Finitized character: alternating sum of Gaussian binomials on a lattice
    strip of width 2N.  Identically zero when l and j have opposite parity
    (all binomial indices would be half-integers)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if not 0 <= j <= k:
        raise ValueError("j outside 0..k")
    if not 0 <= l <= k + 1:
        raise ValueError("l outside 0..k+1")
    if (l - j) % 2 != 0:
        return QSeries.zero(None)
    pq = (k + 2) * (k + 3)
    out = QSeries.zero(None)
    for base, lin, shift in (
        ((2 * N - l + j) // 2, (k + 3) * (j + 1) - (k + 2) * (l + 1), 0),
        ((2 * N - l - j - 2) // 2, -((k + 3) * (j + 1) + (k + 2) * (l + 1)),
         (j + 1) * (l + 1)),
    ):
        sign = 1 if shift == 0 else -1
        lam_lo = math.ceil(Fraction(-base, k + 3))
        lam_hi = math.floor(Fraction(2 * N - base, k + 3))
        for lam in range(lam_lo, lam_hi + 1):
            e = pq * lam * lam + lin * lam + shift
            term = q_binomial(2 * N, base + (k + 3) * lam).shift(e)
            out = out + term if sign == 1 else out - term
    return out.shift(Fraction((l - j) ** 2, 4))


def unitary_params(k: int) -> ModelParams:
    if k < 1:
        raise ValueError("k must be >= 1")
    return ModelParams(k + 2, k + 3)


def graded_13_char(k: int, r: int, s: int, m: int,
                   cutoff: int | Fraction) -> QSeries:
    """Character of the m-th graded piece of the degree filtration:
    q^{delta(r,s)} I_{r,s,r+i,m} / (q)_m with i = r - s mod 2.

    ``cutoff`` counts degrees above the leading exponent delta(r,s); the
    returned series is truncated below delta(r,s) + cutoff.
    """
    params = unitary_params(k)
    i = (r - s) % 2
    d = delta(params, r, s)
    cut_abs = d + Fraction(cutoff)
    poly = I_m(params, r, s, r + i, m).shift(d)
    if poly.is_zero():
        return QSeries.zero(cut_abs)
    return poly * poch_inv(m, cut_abs - poly.floor)


def verify_grading(k: int, m_max: int, cutoff: int | Fraction) -> list[CaseResult]:
    """Three checks per sector (r, s) of the unitary model at level k:
    nonnegativity of each graded piece (m <= m_max), recovery of the full
    character by the m-sum (below the cutoff), and agreement of the two
    routes to the graded piece (Euler-sum route for r = s mod 2, reflection
    route otherwise) as exact polynomial identities."""
    params = unitary_params(k)
    p, pp = params.p, params.pp
    cut = Fraction(cutoff)
    out = []
    for r in range(1, p):
        for s in range(1, pp):
            i = (r - s) % 2
            d = delta(params, r, s)

            neg = []
            for m in range(m_max + 1):
                g = graded_13_char(k, r, s, m, cut)
                neg.extend(f"m={m} q^{e}" for e, c in g.items() if c < 0)
            out.append(CaseResult(
                f"grading-nonneg k={k} r={r} s={s}", not neg,
                "all coefficients >= 0" if not neg else "negative at " + ", ".join(neg[:4])))

            total = QSeries.zero(d + cut)
            quiet = 0
            seen = False
            m = 0
            cap = int(cut) + 2
            while quiet < 3 and m <= cap:
                g = graded_13_char(k, r, s, m, cut)
                if g.is_zero():
                    if seen:
                        quiet += 1
                else:
                    seen = True
                    quiet = 0
                    total = total + g
                m += 1
            target = rocha_caridi(params, r, s, cut).shift(d)
            cmp = compare(total, target)
            out.append(CaseResult(
                f"grading-sum k={k} r={r} s={s}", cmp.ok, cmp.detail()))

            route_ok = True
            route_detail = "exact"
            for m in range(m_max + 1):
                direct = I_m(params, r, s, r + i, m)
                if i == 0:
                    V = ch_pi2_fused(m).flip_q().convolve(weight_string(r - 1))
                    alt = euler_multiplicity(V, k + 1, s - 1)
                    lhs = alt.shift(m * m)
                    rhs = direct.shift(Fraction((s - r) ** 2, 4))
                else:
                    lhs = I_m(params, p - r, pp - s, p - r, m)
                    rhs = direct
                if lhs != rhs:
                    route_ok = False
                    route_detail = f"routes disagree at m={m}"
                    break
            out.append(CaseResult(
                f"grading-route k={k} r={r} s={s} i={i}", route_ok, route_detail))
    return out


def verify_i1_sector(k: int, cutoff: int | Fraction, m_max: int = 8) -> list[CaseResult]:
    """Odd sectors match their reflection: the graded pieces at (r, s) and
    (p - r, p' - s) agree for r - s odd."""
    params = unitary_params(k)
    p, pp = params.p, params.pp
    out = []
    for r in range(1, p):
        for s in range(1, pp):
            if (r - s) % 2 != 1:
                continue
            ok = True
            detail = "exact"
            for m in range(m_max + 1):
                a = graded_13_char(k, r, s, m, cutoff)
                b = graded_13_char(k, p - r, pp - s, m, cutoff)
                cmp = compare(a, b)
                if not cmp.ok:
                    ok = False
                    detail = f"m={m}: {cmp.detail()}"
                    break
            out.append(CaseResult(f"i1 k={k} r={r} s={s}", ok, detail))
    return out


def verify_abf(k: int, N: int, deg: int) -> list[CaseResult]:
    """Finitized sums at strip width 2N against minimal-model characters
    through degree ``deg``; opposite-parity sectors must vanish identically."""
    params = unitary_params(k)
    out = []
    for j in range(k + 1):
        for l in range(k + 2):
            fin = abf_finitized(N, k, j, l)
            case_id = f"abf k={k} j={j} l={l}"
            if (l - j) % 2 != 0:
                ok = fin.is_zero()
                out.append(CaseResult(
                    case_id, ok,
                    "vanishes identically" if ok else f"unexpected terms {fin!r}"))
                continue
            off = Fraction((l - j) ** 2, 4)
            target = rocha_caridi(params, j + 1, l + 1,
                                  Fraction(deg + 1) - off).shift(off)
            cmp = compare(fin, target)
            out.append(CaseResult(case_id, cmp.ok, cmp.detail()))
    return out
