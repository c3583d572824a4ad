import json

import pytest

from twistkit.linalg import AbelianGroup, Inertia
from twistkit.plumbing import (
    CATALOG_NAMES,
    CatalogError,
    PlumbingGraph,
    analyze,
    bad_vertex_count,
    betti_signature,
    boundary_homology,
    catalog,
    chain,
    intersection_matrix,
)

# frozen from scripts/make_oracles.py (sympy Smith form / charpoly)
ORACLE_HOMOLOGY = {
    "E6tilde": AbelianGroup(1, (3,)),
    "E7tilde": AbelianGroup(1, (2,)),
    "E8tilde": AbelianGroup(1, ()),
    "SeifParabolic": AbelianGroup(1, (2, 2)),
    "Plum": AbelianGroup(0, (3,)),
}


@pytest.mark.parametrize("name", sorted(ORACLE_HOMOLOGY))
def test_catalog_homology(name):
    assert boundary_homology(catalog(name)) == ORACLE_HOMOLOGY[name]


@pytest.mark.parametrize("name,det", [("E6tilde", 3), ("E7tilde", -2), ("E8tilde", 1), ("SeifParabolic", 4)])
def test_reweighted_arrow(name, det):
    from twistkit.linalg import det_exact
    g = catalog(name)
    assert det_exact(intersection_matrix(g.reweight(g.arrow, -1))) == det


def test_catalog_sizes():
    assert catalog("E6tilde").n == 7
    assert catalog("E7tilde").n == 8
    assert catalog("E8tilde").n == 9
    assert catalog("Plum").n == 8
    assert catalog("VillaB", 3).n == 8
    for name in CATALOG_NAMES:
        assert name in ("VillaA", "VillaB", "Chain", "Dtype", "LensChain") or catalog(name).n > 0


def test_catalog_errors():
    with pytest.raises(CatalogError):
        catalog("nope")
    with pytest.raises(CatalogError):
        catalog("VillaB", 0)
    with pytest.raises(CatalogError):
        catalog("Chain")


def test_villa_parity():
    for n in range(0, 7):
        expect = AbelianGroup(1, (2, 2)) if n % 2 == 0 else AbelianGroup(1, (4,))
        assert boundary_homology(catalog("VillaA", n)) == expect


def test_plum_inertia():
    assert betti_signature(catalog("Plum")) == Inertia(1, 0, 7)
    assert betti_signature(catalog("Chain", 5, -2)) == Inertia(0, 0, 5)


def test_chain_lens_spaces():
    for k in range(1, 11):
        assert boundary_homology(catalog("Chain", k, -2)) == AbelianGroup(0, (k + 1,))


def test_lens_chain_and_dtype():
    # [-2, -4] is -7/4: L(7, 4)
    assert boundary_homology(catalog("LensChain", -2, -4)) == AbelianGroup(0, (7,))
    assert boundary_homology(catalog("Dtype", 4)) == AbelianGroup(0, (2, 2))


def test_bad_vertices():
    assert bad_vertex_count(catalog("Chain", 3, -2)) == 0
    # m3 has weight -2 and degree 3, so it counts under weight > -degree
    assert bad_vertex_count(catalog("Plum")) == 1
    assert bad_vertex_count(chain([-1, -3])) == 0
    assert bad_vertex_count(chain([0, -3])) == 1


def test_analyze_keys():
    res = analyze(catalog("Plum"))
    assert res["det"] == -3 and res["bad_vertices"] == 1


def test_json_roundtrip():
    g = catalog("E7tilde")
    back = PlumbingGraph.from_json(json.dumps(g.to_json()))
    assert back == g
    with pytest.raises(CatalogError):
        PlumbingGraph.from_json({"vertices": [{"w": 1}]})


def test_graph_validation():
    with pytest.raises(CatalogError):
        PlumbingGraph((-2, -2), ((0, 0),))
    with pytest.raises(CatalogError):
        PlumbingGraph((-2,), ((0, 1),))
    with pytest.raises(CatalogError):
        PlumbingGraph(())


def test_delete_remaps_arrow():
    g = catalog("E6tilde").delete(0)
    assert g.n == 6 and g.arrow == 3
