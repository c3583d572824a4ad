"""Seifert invariants and the delta_t / h_t criterion for OSz-simplicity.

For Seifert data ``(g; a, r_1/q_1, ..., r_n/q_n)`` and parameters
``(t, xi0, xi_1..xi_n)``::

    delta_t(s) = (-1)^(s+1) t + xi0 + a s + sum_i floor((xi_i + r_i s) / q_i)
    h_t(s)     = sum_{i=0}^{s-1} delta_t(i)        (s > 0)
               = 0                                 (s = 0)
               = -sum_{i=s}^{-1} delta_t(i)        (s < 0)

With ``lam = a + sum r_i/q_i`` the exact bounds

    xi0 - |t| + sum (xi_i - q_i + 1)/q_i + lam s  <=  delta_t(s)
    delta_t(s)  <=  xi0 + |t| + sum xi_i/q_i + lam s

pin the sign of delta_t outside a finite window, so every scan below is a
finite, exact computation.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import ContractError
from .plumbing import PlumbingGraph, star


class UndecidableError(ValueError):
    """The criterion cannot be settled (zero slope lam)."""


class UnsupportedError(ValueError):
    pass


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertData:
    genus: int
    a: int
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fibers = tuple((int(r), int(q)) for r, q in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        if self.genus < 0:
            raise ContractError("genus must be nonnegative")
        for r, q in fibers:
            if q < 1:
                raise ContractError(f"fiber {r}/{q}: q must be positive")
            if r == 0:
                raise ContractError(f"fiber {r}/{q}: r must be nonzero")
            if math.gcd(r, q) != 1:
                raise ContractError(f"fiber {r}/{q} is not in lowest terms")

    @property
    def lam(self) -> Fraction:
        return self.a + sum((Fraction(r, q) for r, q in self.fibers), Fraction(0))

    def normalized(self) -> "SeifertData":
        """Equivalent data with every fiber 0 < r < q; integer parts move into ``a``.

        delta_t is literally unchanged by this rewrite, since
        floor((xi + (kq + r') s)/q) = floor((xi + r' s)/q) + k s.
        """
        a = self.a
        fibers = []
        for r, q in self.fibers:
            k, rr = divmod(r, q)
            a += k
            if rr:
                fibers.append((rr, q))
        return SeifertData(self.genus, a, tuple(fibers))

    def to_json(self) -> dict:
        return {"genus": self.genus, "a": self.a, "fibers": [list(f) for f in self.fibers]}

    @classmethod
    def from_json(cls, data) -> "SeifertData":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data.get("genus", 0)), int(data["a"]),
                   tuple((int(r), int(q)) for r, q in data.get("fibers", [])))


@dataclass(frozen=True)
class DeltaParams:
    t: int
    xi0: int
    xi: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(int(x) for x in self.xi))

    def check(self, data: SeifertData) -> None:
        if abs(self.t) > data.genus:
            raise ContractError(f"|t| = {abs(self.t)} exceeds genus {data.genus}")
        if len(self.xi) != len(data.fibers):
            raise ContractError(f"{len(self.xi)} xi values for {len(data.fibers)} fibers")


def delta_t(data: SeifertData, p: DeltaParams, s: int) -> int:
    p.check(data)
    val = (-1) ** (s + 1) * p.t + p.xi0 + data.a * s
    for (r, q), x in zip(data.fibers, p.xi):
        val += (x + r * s) // q  # floor toward -infinity
    return val


def h_t(data: SeifertData, p: DeltaParams, s: int) -> int:
    if s > 0:
        return sum(delta_t(data, p, i) for i in range(s))
    if s < 0:
        return -sum(delta_t(data, p, i) for i in range(s, 0))
    return 0


def delta_bounds(data: SeifertData, p: DeltaParams) -> tuple[Fraction, Fraction, Fraction]:
    """(lower, upper, lam) with lower + lam s <= delta_t(s) <= upper + lam s."""
    lower = Fraction(p.xi0 - abs(p.t))
    upper = Fraction(p.xi0 + abs(p.t))
    for (r, q), x in zip(data.fibers, p.xi):
        lower += Fraction(x - q + 1, q)
        upper += Fraction(x, q)
    return lower, upper, data.lam


def certain_window(data: SeifertData, p: DeltaParams) -> tuple[int, int]:
    """Smallest window [lo, hi] outside which delta_t has a provably constant sign.

    For lam > 0: delta_t < 0 for all s <= lo and delta_t > 0 for all s >= hi.
    For lam < 0 the two signs are swapped.
    """
    p.check(data)
    lower, upper, lam = delta_bounds(data, p)
    if lam == 0:
        raise UndecidableError("lam = a + sum r_i/q_i is zero; delta_t has no linear drift")
    if lam > 0:
        lo = math.ceil(-upper / lam) - 1
        hi = math.floor(-lower / lam) + 1
    else:
        lo = math.ceil(-lower / lam) - 1
        hi = math.floor(-upper / lam) + 1
    return lo, hi


@dataclass(frozen=True)
class SignChangeReport:
    changes: int
    up: int
    down: int
    tail_certain: bool
    window: tuple[int, int]
    lam_zero: bool = False


def sign_change_count(data: SeifertData, p: DeltaParams, window: Sequence[int]) -> SignChangeReport:
    """Count s in the window where "delta_t(s) > 0" flips between s and s + 1."""
    lo, hi = window
    if not lo < hi:
        raise ContractError("window needs s_lo < s_hi")
    p.check(data)
    pos = [delta_t(data, p, s) > 0 for s in range(lo, hi + 1)]
    up = sum(1 for u, v in zip(pos, pos[1:]) if not u and v)
    down = sum(1 for u, v in zip(pos, pos[1:]) if u and not v)
    if data.lam == 0:
        return SignChangeReport(up + down, up, down, False, (lo, hi), lam_zero=True)
    clo, chi = certain_window(data, p)
    return SignChangeReport(up + down, up, down, lo <= clo and hi >= chi, (lo, hi))


def _count_plateau_minima(values: Sequence[int]) -> int:
    plateaus = [v for k, v in enumerate(values) if k == 0 or values[k - 1] != v]
    return sum(
        1 for k in range(1, len(plateaus) - 1)
        if plateaus[k - 1] > plateaus[k] < plateaus[k + 1]
    )


def local_minima(data: SeifertData, p: DeltaParams) -> int:
    """Number of local-minimum plateaus of h_t over the whole of Z."""
    lo, hi = certain_window(data, p)
    # one extra point on each side; the edges lie on strictly monotone tails
    vals = []
    h = h_t(data, p, lo - 1)
    for s in range(lo - 1, hi + 3):
        vals.append(h)
        h += delta_t(data, p, s)
    return _count_plateau_minima(vals)


def unique_local_min(data: SeifertData, p: DeltaParams) -> bool:
    return local_minima(data, p) == 1


def default_xi0(data: SeifertData) -> int:
    """A very negative xi0 making delta_t(s) < 0 for s <= 0 whenever lam > 0."""
    return -(sum(q for _, q in data.fibers) + abs(data.a) + data.genus + 1)


@dataclass(frozen=True)
class ScanResult:
    params: DeltaParams
    changes: SignChangeReport
    unique_min: bool

    @property
    def ok(self) -> bool:
        return self.unique_min and self.changes.changes == 1 and self.changes.tail_certain


@dataclass
class LSpaceReport:
    data: SeifertData
    normalized: SeifertData
    applicable: bool
    scans: list[ScanResult] = field(default_factory=list)
    diagnostic: str = ""

    @property
    def verdict(self) -> bool:
        return self.applicable and all(s.ok for s in self.scans)


def enumerate_params(data: SeifertData, xi0: int | None = None, t_values=None, xi_values=None):
    """All (t, xi) tuples: t in [-g, g], xi_i over residues [0, q_i)."""
    xi0 = default_xi0(data) if xi0 is None else xi0
    ts = range(-data.genus, data.genus + 1) if t_values is None else t_values
    if xi_values is None:
        xis = itertools.product(*(range(q) for _, q in data.fibers))
    else:
        xis = [tuple(xi_values)]
    xis = list(xis)
    return [DeltaParams(t, xi0, xi) for t in ts for xi in xis]


def scan(data: SeifertData, p: DeltaParams, window: int | None = None) -> ScanResult:
    """Run both checks for one tuple. ``window`` (a half-width) overrides the certain window."""
    if window is None:
        win = certain_window(data, p)
    else:
        win = (-window, window)
    return ScanResult(p, sign_change_count(data, p, win), unique_local_min(data, p))


def lspace_check(data: SeifertData, xi0: int | None = None, t_values=None, xi_values=None,
                 window: int | None = None, executor=None) -> LSpaceReport:
    """Apply the a > 2g test and scan every (t, xi) tuple.

    The test reads ``a`` from the normalized invariants (0 < r_i < q_i).
    """
    norm = data.normalized()
    if norm.a <= 2 * norm.genus:
        return LSpaceReport(data, norm, False, diagnostic=(
            f"criterion not applicable: a = {norm.a} <= 2g = {2 * norm.genus} "
            "(normalized invariants)"))
    params = enumerate_params(norm, xi0, t_values, xi_values)
    if executor is None:
        scans = [scan(norm, p, window) for p in params]
    else:
        scans = list(executor.map(scan, [norm] * len(params), params, [window] * len(params)))
    report = LSpaceReport(data, norm, True, scans)
    bad = [s for s in scans if not s.ok]
    if bad:
        report.diagnostic = f"{len(bad)} of {len(scans)} scans failed; first: {bad[0].params}"
    return report


def osz_simple_sufficient(data: SeifertData, xi0: int | None = None) -> bool:
    """True when a > 2g and every (t, xi) scan shows a single upward sign change."""
    return lspace_check(data, xi0).verdict


def neg_continued_fraction(p: int, q: int) -> list[int]:
    """Coefficients c_i <= -2 with p/q = c_1 - 1/(c_2 - 1/(... - 1/c_k)).

    Accepts any sign of q (the fraction is reduced first); requires p/q < -1.
    """
    if q == 0:
        raise DomainError("q must be nonzero")
    x = Fraction(p, q)
    if x >= -1:
        raise DomainError(f"{x} has no expansion with coefficients <= -2 (need p/q < -1)")
    out = []
    while x.denominator != 1:
        c = math.floor(x)
        out.append(c)
        x = -1 / (x - c)
    out.append(int(x))
    return out


def eval_neg_continued_fraction(coeffs: Sequence[int]) -> Fraction:
    x = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        x = c - 1 / x
    return x


def seifert_to_plumbing(data: SeifertData) -> PlumbingGraph:
    """Star-shaped plumbing: center weight a, one chain per fiber expanding -q/r.

    Data is normalized first, so every chain has entries <= -2.
    """
    if data.genus != 0:
        raise UnsupportedError("only genus-0 (star-shaped) plumbings are supported")
    norm = data.normalized()
    return star(norm.a, [neg_continued_fraction(-q, r) for r, q in norm.fibers])
