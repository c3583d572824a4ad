"""Surgeries on parallel tori as Dehn-twist regluing, and the b2+ certificate.

Curves on the tori ``T^2 x {t}`` are ordered by level ``t``.  Surgery on
``s_i`` parallel copies of ``C_i`` at levels ``t_1 < ... < t_k`` reglues by
``D_{C_k}^{s_k} o ... o D_{C_1}^{s_1}``, so the highest level is the leftmost
factor of the resulting word.

Certificate
-----------
Handles attached along curves ``c_i`` at distinct levels with framing -1
relative to the torus have a formal linking pairing

    Q(c_i, c_i) = -1,   Q(c_i, c_j) = sign(t_j - t_i) * <c_i, c_j> / 2,

which is the linking number on every null-homologous combination.  We store
``2Q`` so that everything stays integral.  For ten handles in level order
``y y x x x y x x x y`` (``|<x, y>| = 1``) the combinations

    x1-x2, x2-x3, x3-x4, x4-x5, x5-x6, y3-y4, y2-y4, y1-y2

are produced by eight handle slides and span the 8-vertex plumbing with
determinant -3.  Every certificate replays those slides on ``2Q`` and checks
the resulting block exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import ContractError, Inertia, IntMatrix, apply_slides, det_exact, inertia
from .mcg import SL2, Slope, TwistWord, Factor, omega, twist_matrix
from .plumbing import PlumbingGraph, catalog, intersection_matrix


class NotRealizableError(ValueError):
    """Negative twists cannot be realized by Legendrian surgery."""


@dataclass(frozen=True)
class SurgeryLayer:
    level: Fraction
    slope: Slope
    count: int


@dataclass(frozen=True)
class SurgeryConfig:
    layers: tuple[SurgeryLayer, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        object.__setattr__(self, "layers", layers)
        for layer in layers:
            if not 0 < layer.level < 1:
                raise ContractError(f"level {layer.level} outside (0, 1)")
            if layer.count < 1:
                raise ContractError("surgery counts must be positive")
        if any(u.level >= v.level for u, v in zip(layers, layers[1:])):
            raise ContractError("levels must be strictly increasing")


def regluing_matrix(cfg: SurgeryConfig) -> SL2:
    out = SL2.identity()
    for layer in reversed(cfg.layers):
        out = out @ twist_matrix(layer.slope) ** layer.count
    return out


def config_from_word(w: TwistWord, levels: Sequence | None = None) -> SurgeryConfig:
    """One layer per factor; the rightmost factor sits lowest.

    Default levels are i/(k+1) for i = 1..k in ascending order.
    """
    factors = w.factors
    if any(f.exp < 0 for f in factors):
        raise NotRealizableError("word has a negative exponent; only right-handed twists are realizable")
    k = len(factors)
    if levels is None:
        levels = [Fraction(i, k + 1) for i in range(1, k + 1)]
    levels = [Fraction(t) for t in levels]
    if len(levels) != k:
        raise ContractError(f"{len(levels)} levels for {k} factors")
    return SurgeryConfig(tuple(
        SurgeryLayer(t, f.slope, f.exp) for t, f in zip(levels, reversed(factors))
    ))


def word_from_config(cfg: SurgeryConfig) -> TwistWord:
    return TwistWord(tuple(Factor(l.slope, l.count) for l in reversed(cfg.layers)))


def doubled_linking_form(curves: Sequence[Slope]) -> IntMatrix:
    """2Q for handles along ``curves`` listed in ascending level order."""
    n = len(curves)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -2
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = omega(curves[i], curves[j])
    return IntMatrix.from_rows(rows)


ROLE_PATTERN = ("y1", "y2", "x1", "x2", "x3", "y3", "x4", "x5", "x6", "y4")
# (over, slid, c): handle `slid` becomes slid + c * over
SLIDE_SCRIPT = (
    ("x2", "x1", -1), ("x3", "x2", -1), ("x4", "x3", -1), ("x5", "x4", -1), ("x6", "x5", -1),
    ("y2", "y1", -1), ("y4", "y2", -1), ("y4", "y3", -1),
)
# block order matching the catalog Plum vertices m1..m5, top1..top3
PLUM_ORDER = ("x1", "x2", "x3", "x4", "x5", "y3", "y2", "y1")


@dataclass
class GammaCertificate:
    found: bool
    normalization: str | None = None
    positions: tuple[int, int] | None = None
    rotation: int = 0
    roles: dict | None = None
    canonical: bool = False
    handles: dict | None = None
    script: list | None = None
    block: IntMatrix | None = None
    matches_plum: bool = False
    plumbing: PlumbingGraph | None = None
    det: int | None = None
    inertia: Inertia | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"found": self.found, "normalization": self.normalization,
               "positions": [str(k) for k in self.positions] if self.positions else None}
        if self.found:
            out.update({
                "rotation": str(self.rotation),
                "roles": {k: v.to_json() for k, v in self.roles.items()},
                "canonical": self.canonical,
                "handles": {k: str(v) for k, v in self.handles.items()},
                "script": [[str(v) for v in s] for s in self.script],
                "matches_plum": self.matches_plum,
                "det": str(self.det),
                "inertia": [str(x) for x in self.inertia.astuple()],
            })
        return out


def _block_match(factors: Sequence[Factor], start: int):
    block = factors[start:start + 6]
    if len(block) < 6:
        return None
    x, y = block[0].slope, block[1].slope
    if x == y or abs(omega(x, y)) != 1:
        return None
    if any(block[k].slope != (x if k % 2 == 0 else y) for k in range(6)):
        return None
    e1, f1, e2, f2, e3, f3 = (f.exp for f in block)
    if min(e1, e2, e3) >= 3 and min(f1, f2) >= 1 and f3 >= 2:
        return x, y, (e1, f1, e2, f2, e3, f3) == (3, 1, 3, 1, 3, 2)
    return None


def _greedy_roles(levels: Sequence[Slope], x: Slope, y: Slope, offset: int = 0,
                  descending: bool = False):
    """Pick handles for ROLE_PATTERN greedily; returns {role: level index} or None."""
    order = range(len(levels) - 1, -1, -1) if descending else range(len(levels))
    want = iter(ROLE_PATTERN)
    role = next(want)
    picked = {}
    for k in order:
        if levels[k] == (x if role[0] == "x" else y):
            picked[role] = k + offset
            role = next(want, None)
            if role is None:
                return picked
    return None


def _sign_normalize_tree(block: list[list[int]]) -> list[list[int]]:
    n = len(block)
    sign = [0] * n
    sign[0] = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if v != u and block[u][v] and not sign[v]:
                sign[v] = sign[u] * (1 if block[u][v] > 0 else -1)
                stack.append(v)
    sign = [s or 1 for s in sign]
    return [[sign[i] * sign[j] * block[i][j] for j in range(n)] for i in range(n)]


def _certify(levels: Sequence[Slope], roles: dict) -> tuple[list, IntMatrix, bool]:
    form = doubled_linking_form(levels)
    script = [(roles[o], roles[s], c) for o, s, c in SLIDE_SCRIPT]
    slid = apply_slides(form, script)
    idx = [roles[r] for r in PLUM_ORDER]
    doubled = slid.submatrix(idx)
    if any(v % 2 for v in doubled.entries):
        return script, doubled, False
    block = IntMatrix.from_rows([[v // 2 for v in r] for r in doubled.tolist()])
    plum = intersection_matrix(catalog("Plum"))
    ok = _sign_normalize_tree(block.tolist()) == plum.tolist()
    return script, block, ok


def _rotations(factors: tuple[Factor, ...]):
    yield 0, factors
    for r in range(1, len(factors)):
        yield r, TwistWord(factors[r:] + factors[:r]).normalized().factors


def gamma_pattern(w: TwistWord, relaxed: bool = False) -> GammaCertificate:
    """Search for the pattern x^e1 y^f1 x^e2 y^f2 x^e3 y^f3 (e >= 3, f1, f2 >= 1, f3 >= 2).

    Search order: the word as given, then its cyclic rotations.  The roles of
    x and y are read off the matched block, so both a->b role assignments are
    covered.  With ``relaxed`` the search finally falls back to the ten-handle
    subsequence ``y y x x x y x x x y`` in level order (or its mirror), which
    is exactly what the slide argument consumes.
    """
    if any(f.exp < 0 for f in w.factors):
        raise ContractError("pattern search needs positive exponents")
    factors = w.normalized().factors
    if not factors:
        return GammaCertificate(False)

    for r, rotated in _rotations(factors):
        for start in range(len(rotated)):
            hit = _block_match(rotated, start)
            if hit is None:
                continue
            x, y, canonical = hit
            block_curves = TwistWord(rotated[start:start + 6]).curves()
            all_curves = TwistWord(rotated).curves()
            # curve offset of the block, in ascending level order
            after = sum(f.exp for f in rotated[start + 6:])
            levels = list(reversed(all_curves))
            roles = _greedy_roles(list(reversed(block_curves)), x, y, offset=after)
            return _finish(GammaCertificate(
                True, "literal" if r == 0 else "cyclic-rotation", (start, start + 6), r,
                {"x": x, "y": y}, canonical), levels, roles)

    if relaxed:
        for r, rotated in _rotations(factors):
            levels = list(reversed(TwistWord(rotated).curves()))
            slopes = sorted(set(levels))
            for x in slopes:
                for y in slopes:
                    if x == y or abs(omega(x, y)) != 1:
                        continue
                    for descending in (False, True):
                        roles = _greedy_roles(levels, x, y, descending=descending)
                        if roles is None:
                            continue
                        name = "subsequence" + ("-mirror" if descending else "")
                        if r:
                            name += "+cyclic-rotation"
                        span = sorted(roles.values())
                        return _finish(GammaCertificate(
                            True, name, (span[0], span[-1] + 1), r, {"x": x, "y": y}, False),
                            levels, roles)
    return GammaCertificate(False)


def _finish(cert: GammaCertificate, levels, roles) -> GammaCertificate:
    script, block, ok = _certify(levels, roles)
    cert.handles = dict(roles)
    cert.script = script
    cert.block = block
    cert.matches_plum = ok
    cert.plumbing = catalog("Plum")
    cert.det = det_exact(block)
    cert.inertia = inertia(block)
    if cert.normalization.startswith("subsequence"):
        cert.notes.append("positions are handle indices in ascending level order")
    return cert


def b2plus_certificate(w: TwistWord, relaxed: bool = False) -> GammaCertificate:
    cert = gamma_pattern(w, relaxed=relaxed)
    if cert.found:
        if not cert.matches_plum:
            raise AssertionError("slide script did not reproduce the plumbing block")
        if cert.inertia.n_plus < 1:
            raise AssertionError("plumbing block has no positive direction")
    return cert
