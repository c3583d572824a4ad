"""Plumbing graphs of spheres, their intersection forms and boundary homology.

The catalog reproduces the graphs used for the elliptic and parabolic torus
bundles and the plumbing inside the surgery cobordism.  Vertex order for
every catalog entry is fixed and documented in :func:`catalog`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .linalg import (
    AbelianGroup,
    Inertia,
    IntMatrix,
    cokernel_invariants,
    det_exact,
    inertia,
)


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class PlumbingGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    arrow: int | None = None
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "edges", tuple(tuple(sorted(map(int, e))) for e in self.edges))
        n = len(self.weights)
        if n < 1:
            raise CatalogError("a plumbing graph needs at least one vertex")
        for i, j in self.edges:
            if i == j:
                raise CatalogError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise CatalogError(f"edge ({i}, {j}) out of range")
        if self.arrow is not None and not 0 <= self.arrow < n:
            raise CatalogError(f"arrow index {self.arrow} out of range")
        if self.labels and len(self.labels) != n:
            raise CatalogError("one label per vertex")

    @property
    def n(self) -> int:
        return len(self.weights)

    def degree(self, v: int) -> int:
        return sum((i == v) + (j == v) for i, j in self.edges)

    def reweight(self, v: int, weight: int) -> "PlumbingGraph":
        w = list(self.weights)
        w[v] = weight
        return PlumbingGraph(tuple(w), self.edges, self.arrow, self.labels)

    def delete(self, v: int) -> "PlumbingGraph":
        keep = [i for i in range(self.n) if i != v]
        new = {old: k for k, old in enumerate(keep)}
        arrow = None if self.arrow in (None, v) else new[self.arrow]
        return PlumbingGraph(
            tuple(self.weights[i] for i in keep),
            tuple((new[i], new[j]) for i, j in self.edges if v not in (i, j)),
            arrow,
            tuple(self.labels[i] for i in keep) if self.labels else (),
        )

    def to_json(self) -> dict:
        out = {"vertices": [{"weight": w} for w in self.weights], "edges": [list(e) for e in self.edges]}
        if self.arrow is not None:
            out["arrow"] = self.arrow
        return out

    @classmethod
    def from_json(cls, data) -> "PlumbingGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            weights = tuple(int(v["weight"]) for v in data["vertices"])
            edges = tuple((int(i), int(j)) for i, j in data.get("edges", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise CatalogError(f"malformed plumbing JSON: {exc}") from exc
        return cls(weights, edges, data.get("arrow"))


def intersection_matrix(G: PlumbingGraph) -> IntMatrix:
    rows = [[0] * G.n for _ in range(G.n)]
    for v, w in enumerate(G.weights):
        rows[v][v] = w
    for i, j in G.edges:
        rows[i][j] += 1
        rows[j][i] += 1
    return IntMatrix.from_rows(rows)


def boundary_homology(G: PlumbingGraph) -> AbelianGroup:
    """H_1 of the boundary 3-manifold (the cokernel of the intersection form)."""
    return cokernel_invariants(intersection_matrix(G))


def betti_signature(G: PlumbingGraph) -> Inertia:
    return inertia(intersection_matrix(G))


def bad_vertex_count(G: PlumbingGraph) -> int:
    """Vertices whose weight exceeds minus their degree."""
    return sum(1 for v in range(G.n) if G.weights[v] > -G.degree(v))


def analyze(G: PlumbingGraph) -> dict:
    return {
        "det": det_exact(intersection_matrix(G)),
        "inertia": betti_signature(G),
        "homology": boundary_homology(G),
        "bad_vertices": bad_vertex_count(G),
    }


def _path(start: int, length: int) -> list[tuple[int, int]]:
    return [(start + k, start + k + 1) for k in range(length - 1)]


def chain(weights: Sequence[int]) -> PlumbingGraph:
    return PlumbingGraph(tuple(weights), tuple(_path(0, len(weights))))


def star(center: int, arms: Sequence[Sequence[int]]) -> PlumbingGraph:
    """Star-shaped graph: vertex 0 is the center, then each arm in order, innermost first."""
    weights = [center]
    edges = []
    for arm in arms:
        prev = 0
        for w in arm:
            weights.append(w)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    return PlumbingGraph(tuple(weights), tuple(edges))


CATALOG_NAMES = (
    "E6tilde", "E7tilde", "E8tilde", "SeifParabolic", "Plum",
    "VillaA", "VillaB", "Chain", "Dtype", "LensChain",
)


def catalog(name: str, *params) -> PlumbingGraph:
    """Graphs from the figures, all weights -2 unless stated.

    ``E6tilde``: n1..n5 path, n6 on n3, n7 on n6; arrow n5 (index 4).
    ``E7tilde``: m1..m7 path, m8 on m4; arrow m7 (index 6).
    ``E8tilde``: p1..p8 path, p10 on p3; arrow p8 (index 7).
    ``SeifParabolic``: n1, n2, n3, n4, n5 with center n2 joined to the rest;
    arrow n3 (index 2).
    ``Plum``: m1..m5 path, then top1..top3 path hanging off m3.
    ``VillaA(n)``: weights (-2, -2, -1, n, -1, -2, -2); m1, m2 on m3, path
    m3-m4-m5, m6 and m7 on m5.
    ``VillaB(n)``, n > 0: n1, n2 (arrow, index 1) on n3, then a path of n - 1
    vertices from n3 to n6, and n7, n8 on n6.
    ``Chain(length, weight)``, ``Dtype(n)`` (n >= 4; path 0..n-2 with the last
    vertex on n-3) and ``LensChain(c1, c2, ...)``.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise CatalogError(f"unknown catalog id {name!r}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise CatalogError(f"bad parameters for {name}: {exc}") from None


def _e6():
    return PlumbingGraph((-2,) * 7, (*_path(0, 5), (2, 5), (5, 6)), arrow=4,
                         labels=("n1", "n2", "n3", "n4", "n5", "n6", "n7"))


def _e7():
    return PlumbingGraph((-2,) * 8, (*_path(0, 7), (3, 7)), arrow=6,
                         labels=tuple(f"m{k}" for k in range(1, 9)))


def _e8():
    return PlumbingGraph((-2,) * 9, (*_path(0, 8), (2, 8)), arrow=7,
                         labels=(*(f"p{k}" for k in range(1, 9)), "p10"))


def _seif():
    return PlumbingGraph((-2,) * 5, ((0, 1), (1, 2), (1, 3), (1, 4)), arrow=2,
                         labels=("n1", "n2", "n3", "n4", "n5"))


def _plum():
    return PlumbingGraph((-2,) * 8, (*_path(0, 5), (2, 5), (5, 6), (6, 7)),
                         labels=("m1", "m2", "m3", "m4", "m5", "top1", "top2", "top3"))


def _villa_a(n: int):
    return PlumbingGraph((-2, -2, -1, int(n), -1, -2, -2),
                         ((0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)),
                         labels=("m1", "m2", "m3", "m4", "m5", "m6", "m7"))


def _villa_b(n: int):
    n = int(n)
    if n <= 0:
        raise CatalogError("VillaB needs n > 0")
    k = n - 1
    # 0:n1 1:n2 2:n3, 3..3+k-1 the middle path, then n6, n7, n8
    n6 = 3 + k
    edges = [(0, 2), (1, 2)]
    prev = 2
    for v in range(3, 3 + k):
        edges.append((prev, v))
        prev = v
    edges += [(prev, n6), (n6, n6 + 1), (n6, n6 + 2)]
    return PlumbingGraph((-2,) * (n + 5), tuple(edges), arrow=1)


def _chain(length: int, weight: int):
    if length < 1:
        raise CatalogError("Chain needs length >= 1")
    return chain([weight] * length)


def _dtype(n: int):
    if n < 4:
        raise CatalogError("Dtype needs n >= 4")
    return PlumbingGraph((-2,) * n, (*_path(0, n - 1), (n - 3, n - 1)))


def _lens_chain(*coeffs: int):
    if not coeffs:
        raise CatalogError("LensChain needs at least one coefficient")
    return chain(coeffs)


_BUILDERS = {
    "E6tilde": _e6,
    "E7tilde": _e7,
    "E8tilde": _e8,
    "SeifParabolic": _seif,
    "Plum": _plum,
    "VillaA": _villa_a,
    "VillaB": _villa_b,
    "Chain": _chain,
    "Dtype": _dtype,
    "LensChain": _lens_chain,
}
