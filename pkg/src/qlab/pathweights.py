"""Weighted step paths on the A-type strip and their configuration sums.

The strip has sites 1..p'-1 for coprime integers p < p' < 2p.  Paths move by
steps of -2, 0, +2 with the two corner repeats (1,1) and (p'-1,p'-1)
forbidden.  Each interior triple carries a rational weight built from the
slope t = p'/p and a three-letter site labelling (1A / 1B / 2); the labelled
table is validated against every structural fact it must satisfy before use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .qcore import QSeries

Path = tuple[int, ...]


@dataclass(frozen=True)
class ModelParams:
    """Coprime pair (p, p') with 3 <= p < p' < 2p, so 1 < p'/p < 2."""

    p: int
    pp: int

    def __post_init__(self) -> None:
        if self.p < 3:
            raise ValueError("need p >= 3")
        if not (self.p < self.pp < 2 * self.p):
            raise ValueError("need p < p' < 2p")
        if math.gcd(self.p, self.pp) != 1:
            raise ValueError("p and p' must be coprime")

    @property
    def t(self) -> Fraction:
        return Fraction(self.pp, self.p)


def delta(params: ModelParams, r: int, s: int) -> Fraction:
    """Conformal weight ((r t - s)^2 - (t - 1)^2) / (4 t)."""
    t = params.t
    return ((r * t - s) ** 2 - (t - 1) ** 2) / (4 * t)


def _frac(x: Fraction) -> Fraction:
    return x - math.floor(x)


def tau(params: ModelParams, b: int) -> int:
    """floor((b+1)/t) - floor((b-1)/t); always 1 or 2 on the strip."""
    t = params.t
    val = math.floor(Fraction(b + 1) / t) - math.floor(Fraction(b - 1) / t)
    if val not in (1, 2):
        raise ValueError(f"tau({b}) = {val} out of range for {params}")
    return val


@dataclass(frozen=True)
class TauTable:
    """Site data for one model: tau values and 1A/1B/2 labels, index 1..p'-1."""

    params: ModelParams
    taus: tuple[int, ...]      # taus[s], index 0 unused
    labels: tuple[str, ...]    # labels[s], index 0 unused

    def tau_of(self, s: int) -> int:
        if not 1 <= s <= self.params.pp - 1:
            raise ValueError(f"site {s} off the strip")
        return self.taus[s]

    def label(self, s: int) -> str:
        if not 1 <= s <= self.params.pp - 1:
            raise ValueError(f"site {s} off the strip")
        return self.labels[s]


def _build_labels(params: ModelParams, taus: list[int]) -> list[str]:
    pp, t = params.pp, params.t
    labels = ["?"] * pp
    if t <= Fraction(5, 3):
        # Low-slope regime: the strip midpoint separates the two letters.
        for s in range(1, pp):
            if taus[s] == 2:
                labels[s] = "2"
            else:
                labels[s] = "1A" if 2 * s < pp else "1B"
        if t > Fraction(3, 2):
            # Here tau(2) = tau(p'-2) = 1 and both letters are pinned: the
            # two-step weight constraint forces 1B at site 2, and the strip
            # reflection forces its mirror to 1A.
            labels[2] = "1B"
            labels[pp - 2] = "1A"
    else:
        # High-slope regime: letters alternate inside each run of tau=1,
        # restarting at 1B after every tau=2 site.
        nxt = "1A"
        for s in range(1, pp):
            if taus[s] == 2:
                labels[s] = "2"
                nxt = "1B"
            else:
                labels[s] = nxt
                nxt = "1B" if nxt == "1A" else "1A"
    return labels


def _validate_table(params: ModelParams, taus: list[int], labels: list[str]) -> None:
    pp, t = params.pp, params.t

    def fail(msg: str) -> None:
        raise ValueError(f"tau table invalid for (p,p')=({params.p},{params.pp}): {msg}")

    for s in range(1, pp):
        if taus[s] not in (1, 2):
            fail(f"tau({s}) = {taus[s]}")
        if (taus[s] == 2) != (labels[s] == "2"):
            fail(f"label({s}) = {labels[s]} inconsistent with tau = {taus[s]}")
    if taus[1] != 1 or labels[1] != "1A":
        fail("site 1 must be 1A")
    if taus[pp - 1] != 2:
        fail("site p'-1 must have tau = 2")
    for s in range(2, pp - 1):
        if taus[s] != taus[pp - s]:
            fail(f"tau({s}) != tau({pp - s})")
    if pp % 2 == 0 and taus[pp // 2] != 2:
        fail("even p' needs tau(p'/2) = 2")
    if t > Fraction(3, 2):
        if pp >= 3 and labels[2] != "1B":
            fail("site 2 must be 1B when t > 3/2")
        for s in range(1, pp - 1):
            if taus[s] == 2 and taus[s + 1] == 2:
                fail(f"adjacent tau=2 at {s},{s + 1} with t > 3/2")
    elif pp >= 3 and taus[2] != 2:
        fail("site 2 must have tau = 2 when t < 3/2")
    # Reflection exchanges the letters on interior tau=1 sites.
    for s in range(2, pp - 1):
        if taus[s] == 1:
            a, b = labels[s], labels[pp - s]
            if (a == "1A") != (b == "1B"):
                fail(f"labels at {s}/{pp - s} break the reflection rule")
    # A 1B site is never followed two later by 1A.
    for s in range(1, pp - 3):
        if labels[s] == "1B" and labels[s + 2] == "1A":
            fail(f"1B at {s} followed by 1A at {s + 2}")
    if t > Fraction(5, 3):
        # Runs of tau=1: the first has odd length, later ones even length;
        # letters alternate, every run ends in 1A.
        runs: list[tuple[int, int]] = []
        s = 1
        while s < pp:
            if taus[s] == 1:
                start = s
                while s < pp and taus[s] == 1:
                    s += 1
                runs.append((start, s - 1))
            else:
                s += 1
        for idx, (lo, hi) in enumerate(runs):
            length = hi - lo + 1
            first = "1A" if idx == 0 else "1B"
            if idx == 0 and length % 2 == 0:
                fail("first tau=1 run has even length")
            if idx > 0 and length % 2 == 1:
                fail(f"tau=1 run at {lo}..{hi} has odd length")
            want = first
            for x in range(lo, hi + 1):
                if labels[x] != want:
                    fail(f"label({x}) = {labels[x]}, expected {want}")
                want = "1B" if want == "1A" else "1A"
            if labels[hi] != "1A":
                fail(f"tau=1 run at {lo}..{hi} does not end in 1A")


def make_tau_table(params: ModelParams) -> TauTable:
    """Construct and fully revalidate the site table; hard-fails on any defect."""
    pp = params.pp
    taus = [0] + [tau(params, s) for s in range(1, pp)]
    labels = _build_labels(params, taus)
    _validate_table(params, taus, labels)
    return TauTable(params, tuple(taus), tuple(labels))


def _edge_ok(params: ModelParams, s: int, s2: int) -> bool:
    if not (1 <= s2 <= params.pp - 1) or s2 - s not in (-2, 0, 2):
        return False
    if s == s2 == 1 or s == s2 == params.pp - 1:
        return False
    return True


def weight(a: int, b: int, c: int, table: TauTable) -> Fraction:
    """Weight of the admissible triple (a, b, c); raises on invalid triples."""
    params = table.params
    pp, t = params.pp, params.t
    for s in (a, b, c):
        if not 1 <= s <= pp - 1:
            raise ValueError(f"site {s} off the strip")
    if not (_edge_ok(params, a, b) and _edge_ok(params, b, c)):
        raise ValueError(f"triple ({a},{b},{c}) is not admissible")

    def x_of(site: int) -> int:
        return {"1A": 2, "1B": 3, "2": 2}[table.label(site)]

    def y_of(site: int) -> int:
        return {"1A": 3, "1B": 2, "2": 4}[table.label(site)]

    da, dc = a - b, c - b
    if (da, dc) in ((2, -2), (-2, 2)):
        return 2 / t
    if (da, dc) in ((-2, 0), (0, -2)):
        return 2 - _frac(Fraction(b - 1) / t)
    if (da, dc) in ((0, 2), (2, 0)):
        return 1 + _frac(Fraction(b + 1) / t)
    if (da, dc) == (0, 0):
        return Fraction(3 - table.tau_of(b))
    if (da, dc) == (-2, -2):
        return -2 * _frac(Fraction(b - 1) / t) + x_of(b - 2)
    if (da, dc) == (2, 2):
        return 2 * _frac(Fraction(b + 3) / t) - 4 / t + y_of(b + 2)
    raise AssertionError("unreachable")


def b_of(r: int, a: int, params: ModelParams) -> int:
    """Endpoint of the same parity as a minimizing the conformal weight.

    Raises on a tie (which the arithmetic of coprime (p, p') rules out, but
    the guard keeps the contract explicit).
    """
    if not 1 <= r <= params.p - 1:
        raise ValueError("r out of range")
    if not 1 <= a <= params.pp - 1:
        raise ValueError("a out of range")
    cands = [b for b in range(1, params.pp) if (b - a) % 2 == 0]
    best = min(delta(params, r, b) for b in cands)
    winners = [b for b in cands if delta(params, r, b) == best]
    if len(winners) != 1:
        raise ValueError(f"tie among minimizing endpoints {winners}")
    return winners[0]


def enumerate_paths(a: int, b: int, m: int, params: ModelParams) -> list[Path]:
    """All admissible paths (s_0, ..., s_m) with s_0 = a and s_m = b,
    in lexicographic order."""
    if m < 0:
        raise ValueError("m must be >= 0")
    for s in (a, b):
        if not 1 <= s <= params.pp - 1:
            raise ValueError(f"site {s} off the strip")
    out: list[Path] = []

    def go(prefix: list[int]) -> None:
        if len(prefix) == m + 1:
            if prefix[-1] == b:
                out.append(tuple(prefix))
            return
        s = prefix[-1]
        for s2 in (s - 2, s, s + 2):
            if _edge_ok(params, s, s2):
                prefix.append(s2)
                go(prefix)
                prefix.pop()

    go([a])
    return out


def count_paths(a: int, b: int, m: int, params: ModelParams) -> int:
    """Transfer-matrix path count; independent of the recursive enumeration."""
    pp = params.pp
    vec = [0] * pp
    vec[a] = 1
    for _ in range(m):
        nxt = [0] * pp
        for s in range(1, pp):
            if vec[s]:
                for s2 in (s - 2, s, s + 2):
                    if _edge_ok(params, s, s2):
                        nxt[s2] += vec[s]
        vec = nxt
    return vec[b]


def energy(path: Path, table: TauTable) -> Fraction:
    """sum_i i * w(s_{i-1}, s_i, s_{i+1}) over interior positions of the path."""
    total = Fraction(0)
    for i in range(1, len(path) - 1):
        total += i * weight(path[i - 1], path[i], path[i + 1], table)
    return total


def _x_valid(params: ModelParams, a: int, b: int, c: int) -> bool:
    pp = params.pp
    if not (1 <= a <= pp - 1 and 1 <= b <= pp - 1 and 1 <= c <= pp - 1):
        return False
    if (a - b) % 2 != 0:
        return False
    return _edge_ok(params, b, c)


_X_CACHE: dict[tuple, QSeries] = {}


def config_sum_X(a: int, b: int, c: int, m: int, table: TauTable) -> QSeries:
    """Energy generating sum over paths (s_0..s_{m+1}) with s_0 = a, s_m = b,
    s_{m+1} = c.  Computed by the endpoint recurrence; zero off the domain."""
    if m < 0:
        raise ValueError("m must be >= 0")
    params = table.params
    if not _x_valid(params, a, b, c):
        return QSeries.zero(None)
    key = (params.p, params.pp, a, b, c, m)
    hit = _X_CACHE.get(key)
    if hit is not None:
        return hit
    if m == 0:
        out = QSeries.one(None) if a == b else QSeries.zero(None)
    else:
        out = QSeries.zero(None)
        for d in (b - 2, b, b + 2):
            if not _x_valid(params, a, d, b):
                continue
            part = config_sum_X(a, d, b, m - 1, table)
            if part.is_zero():
                continue
            out = out + part.shift(m * weight(d, b, c, table))
    _X_CACHE[key] = out
    return out


def brute_config_sum_X(a: int, b: int, c: int, m: int, table: TauTable) -> QSeries:
    """Direct enumeration oracle for config_sum_X."""
    params = table.params
    if not _x_valid(params, a, b, c):
        return QSeries.zero(None)
    out = QSeries.zero(None)
    for path in enumerate_paths(a, b, m, params):
        full = path + (c,)
        out = out + QSeries.monomial(energy(full, table))
    return out


# -- closed-form side of the configuration sum -------------------------------


def f_function(a: int, b: int, c: int, m: int, table: TauTable) -> QSeries:
    """Single supernomial summand f_{a,b,c,m}; a may be any integer of the
    parity of b, while b and c must lie on the strip with c in {b, b+-2}."""
    from .supernomial import S, S_tilde

    params = table.params
    pp, t = params.pp, params.t
    if not 1 <= b <= pp - 1:
        raise ValueError("b off the strip")
    if m < 0:
        raise ValueError("m must be >= 0")
    if not 1 <= c <= pp - 1 or c - b not in (-2, 0, 2):
        return QSeries.zero(None)
    if (a - b) % 2 != 0:
        return QSeries.zero(None)
    l = (b - a) // 2
    base = Fraction(m * m - l * l)
    if c == b + 2:
        exp = Fraction(l * (l + 1)) / t + base + (m - l) * _frac(Fraction(b + 1) / t)
        fac = S_tilde(m, l) if table.label(c) == "1A" else S(m, l)
    elif c == b:
        exp = Fraction(l * (l - 1)) / t + base + l * (1 - _frac(Fraction(b - 1) / t))
        if table.label(b) in ("1A", "1B"):
            fac = S(m, l).shift(m)
        else:
            fac = S_tilde(m, l).shift(l)
    else:  # c == b - 2
        exp = Fraction(l * (l - 1)) / t + base + (m + l) * (1 - _frac(Fraction(b - 1) / t))
        if table.label(c) in ("1A", "2"):
            fac = S(m, l)
        else:
            fac = S_tilde(m, l).shift(l)
    return fac.shift(exp)


def f_sum(a: int, b: int, c: int, m: int, table: TauTable) -> QSeries:
    """Alternating sum over the reflection orbit of a:
    sum_{eps=+-1} eps * sum_n f_{eps(a + 2 p' n), b, c, m}."""
    pp = table.params.pp
    out = QSeries.zero(None)
    for eps in (1, -1):
        # Only arguments with |(b - arg)/2| <= m contribute.
        lo, hi = b - 2 * m, b + 2 * m
        # eps * (a + 2 p' n) in [lo, hi]
        lo_n = math.ceil(Fraction(eps * lo - a, 2 * pp)) if eps == 1 else math.ceil(Fraction(-hi - a, 2 * pp))
        hi_n = math.floor(Fraction(eps * hi - a, 2 * pp)) if eps == 1 else math.floor(Fraction(-lo - a, 2 * pp))
        for n in range(lo_n, hi_n + 1):
            term = f_function(eps * (a + 2 * pp * n), b, c, m, table)
            out = out + term if eps == 1 else out - term
    return out


@dataclass(frozen=True)
class XandfCheck:
    a: int
    b: int
    c: int
    m: int
    ok: bool
    detail: str


def x_configs(params: ModelParams) -> list[tuple[int, int, int]]:
    """All (a, b, c) on which the configuration sum is defined and not
    trivially zero by parity or adjacency."""
    pp = params.pp
    out = []
    for b in range(1, pp):
        for c in (b - 2, b, b + 2):
            if not _edge_ok(params, b, c):
                continue
            for a in range(1, pp):
                if (a - b) % 2 == 0:
                    out.append((a, b, c))
    return sorted(out)


def verify_Xandf(table: TauTable, m_max: int,
                 configs: Optional[Iterable[tuple[int, int, int]]] = None) -> list[XandfCheck]:
    """Exact equality of the path recurrence and the supernomial f-sum."""
    cfgs = list(configs) if configs is not None else x_configs(table.params)
    out: list[XandfCheck] = []
    for a, b, c in cfgs:
        for m in range(m_max + 1):
            lhs = config_sum_X(a, b, c, m, table)
            rhs = f_sum(a, b, c, m, table)
            ok = lhs == rhs
            detail = "exact" if ok else f"paths {lhs!r} != f-sum {rhs!r}"
            out.append(XandfCheck(a, b, c, m, ok, detail))
    return out
