"""Toric layer decompositions: boundary slopes, gluing maps and the torsion script.

A decomposition ``L_0 u_{phi_0} L_1 u_{phi_1} ... L_m`` glues the right
boundary of ``L_i`` to the left boundary of ``L_{i+1}`` by ``phi_i``.  Slopes of
``L_{i+1}`` are written in its own coordinates; to read them in the
coordinates of ``L_i`` apply ``phi_i^-1``.  That is the convention fixed by
``A^-1 (0, 1) = (-1, 1)``.

Only slopes are tracked.  Signs of basic slices carry no computable content at
this level and show up as annotations in the trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .cobordism import SurgeryConfig, SurgeryLayer, regluing_matrix
from .linalg import ContractError
from .mcg import INF, SL2, ZERO, Slope, act_on_slope, twist_matrix


@dataclass(frozen=True)
class ToricLayer:
    name: str
    left: Slope
    right: Slope

    def __str__(self) -> str:
        return f"{self.name}({self.left}, {self.right})"


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[ToricLayer, ...]
    gluings: tuple[SL2, ...] = None

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise ContractError("a decomposition needs at least one layer")
        gl = tuple(self.gluings) if self.gluings is not None else (SL2.identity(),) * (len(layers) - 1)
        if len(gl) != len(layers) - 1:
            raise ContractError(f"{len(gl)} gluings for {len(layers)} layers")
        object.__setattr__(self, "layers", layers)
        object.__setattr__(self, "gluings", gl)

    @classmethod
    def of(cls, *layers) -> "LayerDecomposition":
        """``of(("N1", 0, "inf"), ("N2", "inf", 0), ...)`` with identity gluings."""
        return cls(tuple(ToricLayer(n, Slope.of(l), Slope.of(r)) for n, l, r in layers))

    def index(self, name: str) -> int:
        for k, layer in enumerate(self.layers):
            if layer.name == name:
                return k
        raise KeyError(name)

    def __str__(self) -> str:
        parts = [str(self.layers[0])]
        for g, layer in zip(self.gluings, self.layers[1:]):
            parts.append(" u " if g.is_identity() else f" u_{g} ")
            parts.append(str(layer))
        return "".join(parts)


def split_and_twist(d: LayerDecomposition, at: int, C, k: int) -> LayerDecomposition:
    """k parallel Legendrian surgeries along C at interface ``at``.

    The curve sits on the torus between layers ``at`` and ``at + 1``; the
    gluing there becomes ``phi o D_C^k``.
    """
    C = Slope.of(C)
    if not 0 <= at < len(d.gluings):
        raise ContractError(f"interface {at} out of range")
    if k < 0:
        raise ContractError("surgery count must be nonnegative")
    if k == 0:
        return d
    phi = d.gluings[at]
    left, right = d.layers[at], d.layers[at + 1]
    if left.right != C or act_on_slope(phi, C) != right.left:
        raise ContractError(
            f"slope {C} does not match interface {at} ({left.name} right {left.right}, "
            f"{right.name} left {right.left})")
    gl = list(d.gluings)
    gl[at] = phi @ twist_matrix(C) ** k
    return replace(d, gluings=tuple(gl))


def _transport(d: LayerDecomposition, start: int, j: int) -> SL2:
    """Map from the coordinates of layer j to those of layer start."""
    out = SL2.identity()
    for i in range(start, j):
        out = out @ d.gluings[i].inverse()
    return out


def outer_slopes(d: LayerDecomposition, start: int = 0, stop: int | None = None) -> tuple[Slope, Slope]:
    """Boundary slopes of layers[start:stop], in the coordinates of layers[start]."""
    stop = len(d.layers) if stop is None else stop
    if not 0 <= start < stop <= len(d.layers):
        raise ContractError(f"bad layer range [{start}, {stop})")
    P = _transport(d, start, stop - 1)
    return d.layers[start].left, act_on_slope(P, d.layers[stop - 1].right)


def normalize(d: LayerDecomposition) -> LayerDecomposition:
    """Rewrite every layer in the coordinates of the first one; all gluings become identity."""
    out = []
    P = SL2.identity()
    for j, layer in enumerate(d.layers):
        if j:
            P = P @ d.gluings[j - 1].inverse()
        out.append(ToricLayer(layer.name, act_on_slope(P, layer.left), act_on_slope(P, layer.right)))
    return LayerDecomposition(tuple(out))


def merge(d: LayerDecomposition, start: int, stop: int, name: str) -> LayerDecomposition:
    """Replace layers[start:stop] by one layer with the same outer slopes.

    The gluing to the next layer becomes phi_{stop-1} o ... o phi_start so the
    rest of the decomposition is untouched.
    """
    left, right = outer_slopes(d, start, stop)
    layers = d.layers[:start] + (ToricLayer(name, left, right),) + d.layers[stop:]
    gl = list(d.gluings[:start])
    if stop < len(d.layers):
        psi = SL2.identity()
        for i in range(start, stop):
            psi = d.gluings[i] @ psi
        gl.append(psi)
        gl.extend(d.gluings[stop:])
    return LayerDecomposition(layers, tuple(gl))


def basic_slice_surgery(s0, s, s1) -> tuple[ToricLayer, ToricLayer]:
    """Surgery along the common slope s of B0 = (s0, s) and B1 = (s, s1).

    Returns B0 and the new B1' = (s, D_s^-1 s1) read in B0 coordinates.
    """
    d = LayerDecomposition.of(("B0", s0, s), ("B1", s, s1))
    d = normalize(split_and_twist(d, 0, s, 1))
    return d.layers[0], ToricLayer("B1'", d.layers[1].left, d.layers[1].right)


# --- the torsion-reduction script ---------------------------------------

@dataclass
class TraceStep:
    step: int
    surgery: str
    interface: str
    gluings: list
    outer: tuple[Slope, Slope]
    note: str = ""
    region: ToricLayer | None = None


@dataclass
class TorsionTrace:
    n: int
    steps: list[TraceStep] = field(default_factory=list)
    milestones: list[tuple[Slope, Slope]] = field(default_factory=list)
    config: SurgeryConfig | None = None
    regluing: SL2 | None = None
    final: LayerDecomposition | None = None

    def to_json(self) -> dict:
        def pair(p):
            return [p[0].to_json(), p[1].to_json()]
        return {
            "n": str(self.n),
            "steps": [{
                "step": str(s.step), "surgery": s.surgery, "interface": s.interface,
                "gluings": [[[str(v) for v in r] for r in g.rows()] for g in s.gluings],
                "outer": pair(s.outer),
                "region": None if s.region is None else
                {"name": s.region.name, "slopes": pair((s.region.left, s.region.right))},
                "note": s.note,
            } for s in self.steps],
            "milestones": [pair(m) for m in self.milestones],
            "regluing": [[str(v) for v in r] for r in self.regluing.rows()],
            "final": [{"name": l.name, "slopes": pair((l.left, l.right))} for l in self.final.layers],
            "final_gluings_identity": all(g.is_identity() for g in self.final.gluings),
        }


# interface index -> (torus label, level used for the regluing cross-check)
_INTERFACES = {
    0: ("T_-d", Fraction(1, 7)),
    1: ("T_0", Fraction(2, 7)),
    2: ("T_1/4", Fraction(3, 7)),
    3: ("T_1/2", Fraction(4, 7)),
    4: ("T_3/4", Fraction(5, 7)),
    5: ("T_1", Fraction(6, 7)),
}


def initial_decomposition(n: int) -> LayerDecomposition:
    """N0 is a thin collar holding the torus T_-d; N1..N6 as in the construction."""
    return LayerDecomposition((
        ToricLayer("N0", ZERO, ZERO),
        ToricLayer("N1", ZERO, INF),
        ToricLayer("N2", INF, ZERO),
        ToricLayer("N3", ZERO, INF),
        ToricLayer("N4", INF, ZERO),
        ToricLayer("N5", ZERO, INF),
        ToricLayer("N6", INF, Slope.of(n)),
    ))


def reduce_torsion_script(n: int) -> TorsionTrace:
    """Replay the twelve Legendrian surgeries that undo a Lutz twist.

    Outer slopes are those of the region from N1 up to (not including) N6,
    read in N1 coordinates.
    """
    if n < 1:
        raise ContractError("n must be a positive integer")
    d = initial_decomposition(n)
    trace = TorsionTrace(n)
    surgeries: dict[int, tuple[Slope, int]] = {}

    def region_range():
        return d.index("N1"), d.index("N6")

    def record(label, at, note="", region=None):
        start, stop = region_range()
        trace.steps.append(TraceStep(
            len(trace.steps) + 1, label, _INTERFACES[at][0] if at is not None else "-",
            list(d.gluings), outer_slopes(d, start, stop), note, region))

    def surgery(label, at, C):
        nonlocal d
        # a curve on interface `at`: find it by the names around it
        d = split_and_twist(d, at, C, 1)
        slope, count = surgeries.get(at, (C, 0))
        surgeries[at] = (slope, count + 1)
        record(label, at)

    def iface(left_name):
        return d.index(left_name)

    def collapse(start_name, stop_name, name, note):
        nonlocal d
        d = normalize(d)
        d = merge(d, d.index(start_name), d.index(stop_name) + 1, name)
        region = d.layers[d.index(name)]
        record("normalize", None, note, region)
        trace.milestones.append((region.left, region.right))

    for k in (1, 2, 3):
        surgery(f"D^{k}_1", iface("N5"), INF)
    surgery("C_3/4", iface("N4"), ZERO)
    trace.milestones.append(trace.steps[-1].outer)
    for k in (1, 2, 3):
        surgery(f"D^{k}_1/2", iface("N3"), INF)
        trace.milestones.append(trace.steps[-1].outer)
    collapse("N4", "N5", "N5'", "N3 u_B3 N4 u_A N5 = N3 u N4 u N5'")
    surgery("C_1/4", iface("N2"), ZERO)
    collapse("N3", "N5'", "N4'", "N1 u N2 u_A N3 u N4 u N5' = N1 u N2 u N3 u N4'")
    for k in (1, 2, 3):
        surgery(f"D^{k}_0", iface("N1"), INF)
    surgery("C_-d", iface("N0"), ZERO)

    trace.config = SurgeryConfig(tuple(
        SurgeryLayer(_INTERFACES[at][1], slope, count) for at, (slope, count) in sorted(surgeries.items())
    ))
    trace.regluing = regluing_matrix(trace.config)
    if not trace.regluing.is_identity():
        raise AssertionError(f"accumulated regluing is {trace.regluing}, not the identity")

    d = normalize(d)
    start, stop = region_range()
    d = merge(d, start, stop, "N1")
    record("normalize", None, "N0 u N1..N5 u N6 with identity gluings; the Lutz layer is gone",
           d.layers[d.index("N1")])
    trace.final = d
    return trace
