"""The claims suite behind ``twistkit verify-paper``.

Each claim recomputes one number or identity and compares it with an expected
value.  Expected values are tagged by provenance:

* ``paper``: stated in the source text and typed in here literally;
* ``derived``: frozen in ``data/oracles.json`` by ``scripts/make_oracles.py``,
  which uses sympy and brute force and never imports this package;
* ``trivial``: follows from the definitions.

Comparison is exact, on a JSON normal form where integers become decimal
strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .cobordism import b2plus_certificate, config_from_word, regluing_matrix
from .layers import basic_slice_surgery, reduce_torsion_script
from .linalg import AbelianGroup, Inertia, IntMatrix, det_exact
from .mcg import SL2, Slope, conjugate_word, eval_word, layer_slopes, twist_matrix
from .plumbing import analyze, boundary_homology, catalog, intersection_matrix
from .seifert import SeifertData, seifert_to_plumbing
from .wordparse import parse_word


@lru_cache(maxsize=None)
def oracles() -> dict:
    return json.loads(resources.files("twistkit").joinpath("data/oracles.json").read_text())


def to_plain(v):
    """JSON normal form used for both display and comparison."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Slope):
        return v.to_json()
    if isinstance(v, SL2):
        return to_plain(v.rows())
    if isinstance(v, IntMatrix):
        return to_plain(v.tolist())
    if isinstance(v, Inertia):
        return to_plain(list(v.astuple()))
    if isinstance(v, AbelianGroup):
        return {"free_rank": str(v.free_rank), "torsion": [str(d) for d in v.torsion]}
    if isinstance(v, dict):
        return {str(k): to_plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_plain(x) for x in v]
    raise TypeError(f"no JSON form for {type(v).__name__}")


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    description: str
    provenance: str
    anchor: str
    expected: object
    computed: object
    status: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "description": self.description,
            "expected": {"value": self.expected, "provenance": self.provenance, "anchor": self.anchor},
            "computed": self.computed,
            "status": self.status,
        }


def _result(cid, desc, prov, anchor, expected, compute) -> ClaimResult:
    exp = to_plain(expected)
    try:
        got = to_plain(compute())
    except Exception as exc:  # a crash is a failed claim, not an error
        got = f"error: {type(exc).__name__}: {exc}"
    return ClaimResult(cid, desc, prov, anchor, exp, got, "pass" if exp == got else "fail")


I2 = [[1, 0], [0, 1]]


def _group(entry) -> AbelianGroup:
    free, torsion = entry
    return AbelianGroup(free, tuple(torsion))


def _ell_index(name):
    return {"E6tilde": 6, "E7tilde": 7, "E8tilde": 8}[name]


def _newword(n: int) -> str:
    c = f"(b^{n} a b^-{n})"
    return f"{c}^4 b {c}^3 b {c}^3 b^4 {c} b^3 {c} b^3"


def _newword_twists(n: int):
    """The same word with each b^n a b^-n read as one twist along b^n(0) = -n."""
    return conjugate_word(parse_word("a^4 b a^3 b a^3 b^4 a b^3 a b^3"), parse_word(f"b^{n}"))


def _claim_specs():
    """(id, description, provenance, anchor, expected thunk, compute thunk)."""
    O = oracles
    specs = []
    add = specs.append
    ev = lambda text: eval_word(parse_word(text))

    # relations in SL(2, Z)
    add(("rel-aba-bab", "aba and bab evaluate to the same matrix", "paper", "relation aba = bab",
         lambda: True, lambda: ev("a b a") == ev("b a b")))
    add(("rel-ab6", "(ab)^6 is the identity", "paper", "relation (ab)^6 = 1",
         lambda: I2, lambda: ev("(a b)^6")))
    add(("rel-a3b-cubed", "(a^3 b)^3 is the identity", "paper", "relation (a^3 b)^3 = 1",
         lambda: I2, lambda: ev("(a^3 b)^3")))
    add(("rel-b3a-cubed", "(b^3 a)^3 is the identity", "paper", "relation (b^3 a)^3 = 1",
         lambda: I2, lambda: ev("(b^3 a)^3")))
    add(("ab-order", "ab is elliptic of order 6", "derived", "ab = [[0,1],[-1,1]]",
         lambda: [O()["ab-trace"], O()["ab-order"]],
         lambda: [ev("a b").trace, _order(ev("a b"))]))
    add(("gamma-equals-b", "gamma = a^3 b a^3 b a^3 b^2 evaluates to the matrix of b", "derived",
         "gamma = (a^3 b)^3 b", lambda: O()["gamma-matrix"], lambda: ev("a^3 b a^3 b a^3 b^2")))
    add(("gamma-config-equals-b", "layers 0,inf,0,inf,0,inf with counts 3,1,3,1,3,2 at increasing levels reglue by b",
         "derived", "surgery order composition", lambda: O()["gamma-matrix"],
         lambda: regluing_matrix(config_from_word(parse_word("b^2 a^3 b a^3 b a^3")))))

    # the identity words
    add(("eword-identity", "a(a^3b)^3(b^3a)^3a^-1 evaluates to the identity", "paper",
         "1 = a(a^3b)^3(b^3a)^3a^-1", lambda: I2,
         lambda: ev("a (a^3 b)^3 (b^3 a)^3 a^-1")))
    add(("eword-normal-form", "normal form a^4 b a^3 b a^3 b^4 a b^3 a b^3", "paper",
         "1 = a^4ba^3ba^3b^4ab^3ab^3", lambda: "a^4 b a^3 b a^3 b^4 a b^3 a b^3",
         lambda: str(parse_word("a (a^3 b)^3 (b^3 a)^3 a^-1"))))
    for n in range(1, 6):
        add((f"enewword-identity-n{n}", f"the b^{n}-conjugated word evaluates to the identity", "paper",
             "conjugated word by b^n", lambda: I2, lambda n=n: ev(_newword(n))))
        add((f"enewword-slopes-n{n}", f"twist slopes of the b^{n}-conjugated word", "paper",
             "slopes -n, inf, ... (ten factors)",
             lambda n=n: [str(-n), "inf"] * 5,
             lambda n=n: layer_slopes(_newword_twists(n))))
        add((f"enewword-twists-identity-n{n}", f"the slope -{n} twist form also evaluates to the identity",
             "paper", "conjugated word by b^n", lambda: I2, lambda n=n: eval_word(_newword_twists(n))))
        add((f"twist-minus-{n}", f"twist along slope -{n}", "derived", "twist matrix formula",
             lambda n=n: O()[f"twist-minus-{n}"], lambda n=n: twist_matrix(Slope(1, -n))))

    # plumbings
    plum = catalog("Plum")
    add(("fplum-det", "determinant of the 8-vertex plumbing", "paper", "plumbing Plum: determinant -3",
         lambda: -3, lambda: det_exact(intersection_matrix(plum))))
    add(("fplum-nplus-positive", "the 8-vertex plumbing has a positive direction", "paper",
         "plumbing Plum: b2+ >= 1", lambda: True, lambda: analyze(plum)["inertia"].n_plus >= 1))
    add(("fplum-inertia", "inertia of the 8-vertex plumbing", "derived", "plumbing Plum: inertia",
         lambda: O()["Plum-inertia"], lambda: analyze(plum)["inertia"]))
    add(("fplum-homology", "boundary homology of the 8-vertex plumbing", "derived", "plumbing Plum: H_1",
         lambda: _group(O()["Plum-homology"]), lambda: boundary_homology(plum)))
    for name in ("E6tilde", "E7tilde", "E8tilde"):
        i = _ell_index(name)
        g = catalog(name)
        add((f"fell-homology-Y{i}", f"boundary of {name} has H_1 = Z + Z/{9 - i}", "paper",
             "elliptic plumbings: H_1 = Z + Z/(9-i)",
             lambda i=i: [1, 9 - i],
             lambda g=g: [boundary_homology(g).free_rank, _torsion_order(boundary_homology(g))]))
        add((f"fell-lens-Y{i}", f"{name} with the arrowed vertex at -1 bounds L({9 - i}, 1)", "paper",
             "elliptic plumbings: lens spaces L(9-i, 1)",
             lambda i=i: 9 - i,
             lambda g=g: abs(det_exact(intersection_matrix(g.reweight(g.arrow, -1))))))
        add((f"fell-reweighted-det-Y{i}", f"signed determinant of reweighted {name}", "derived",
             "elliptic plumbings: reweighted arrow",
             lambda name=name: O()[f"{name}-reweighted-det"],
             lambda g=g: det_exact(intersection_matrix(g.reweight(g.arrow, -1)))))
    villa_set = [AbelianGroup(1, (2, 2)), AbelianGroup(1, (4,))]
    for n in range(1, 7):
        g = catalog("VillaA", n)
        add((f"fvilla-n{n}-in-set", f"VillaA({n}) boundary homology is Z+Z/2+Z/2 or Z+Z/4", "paper",
             "parabolic plumbings: H_1 choices", lambda: True,
             lambda g=g: boundary_homology(g) in villa_set))
        add((f"fvilla-n{n}", f"VillaA({n}) boundary homology", "derived", "parabolic plumbings: H_1 by parity",
             lambda n=n: _group(O()[f"VillaA-{n}-homology"]), lambda g=g: boundary_homology(g)))
    add(("fvilla-n0-seif", "VillaA(0) and SeifParabolic have the same boundary homology", "derived",
         "parabolic plumbings: n = 0",
         lambda: _group(O()["SeifParabolic-homology"]),
         lambda: boundary_homology(catalog("VillaA", 0))))
    add(("fseif-symbol", "M(0; 1/2, 1/2, -1/2, -1/2) plumbs to SeifParabolic's homology", "derived",
         "Seifert fibered parabolic boundary",
         lambda: _group(O()["seif-star-homology"]),
         lambda: boundary_homology(seifert_to_plumbing(
             SeifertData(0, 0, ((1, 2), (1, 2), (-1, 2), (-1, 2)))))))

    # certificate
    for cid, text, found in (("eword", "a (a^3 b)^3 (b^3 a)^3 a^-1", True),
                             ("gamma", "a^3 b a^3 b a^3 b^2", True),
                             ("a3ba3b", "a^3 b a^3 b", False)):
        add((f"gamma-pattern-{cid}", f"pattern search on {text}", "paper",
             "word contains the element gamma",
             lambda found=found: found, lambda text=text: b2plus_certificate(parse_word(text)).found))
    add(("certificate-plum", "certificate for the identity word carries the Plum block", "paper",
         "plumbing Plum: determinant -3",
         lambda: [True, -3, True],
         lambda: _cert_summary("a (a^3 b)^3 (b^3 a)^3 a^-1")))
    add(("certificate-inertia", "certificate inertia", "derived", "plumbing Plum: inertia",
         lambda: O()["Plum-inertia"],
         lambda: b2plus_certificate(parse_word("a (a^3 b)^3 (b^3 a)^3 a^-1")).inertia))

    # contact layers
    add(("reducetorsion-trace", "slope sequence of the torsion-reduction script (n = 1)", "paper",
         "torsion reduction: displayed slopes",
         lambda: [["0", "-1"], ["0", "0"], ["0", "1"], ["0", "2"], ["inf", "2"], ["0", "-2"]],
         lambda: reduce_torsion_script(1).milestones))
    add(("reducetorsion-trace-oracle", "slope sequence replayed independently", "derived",
         "torsion reduction: displayed slopes", lambda: O()["torsion-milestones"],
         lambda: reduce_torsion_script(1).milestones))
    add(("reducetorsion-regluing", "accumulated regluing of the script is the identity", "paper",
         "(B^3 A)^3 = 1", lambda: I2, lambda: reduce_torsion_script(1).regluing))
    add(("reducetorsion-relation", "B^3 A B^3 A B^3 A is the identity", "paper", "(B^3 A)^3 = 1",
         lambda: O()["torsion-relation"], lambda: ev("b^3 a b^3 a b^3 a")))
    add(("reducetorsion-n-independent", "milestones agree for n = 1..5", "derived",
         "torsion reduction: n-independence",
         lambda: [O()["torsion-milestones"]] * 5,
         lambda: [reduce_torsion_script(n).milestones for n in range(1, 6)]))
    add(("basicslices", "A^-1 (n, -1) = (n + 1, -1) for n = 1..10", "paper", "basic slices: D_C^-1",
         lambda: [[str(n + 1), "-1"] for n in range(1, 11)],
         lambda: [list(SL2(1, -1, 0, 1).apply((n, -1))) for n in range(1, 11)]))
    add(("basicslices-layer", "surgery on B0 = (1, 0), B1 = (0, -1/3) gives B1' = (0, -1/4)", "paper",
         "basic slices: -1/n to -1/(n+1)",
         lambda: ["0", "-1/4"],
         lambda: [s.to_json() for s in _b1_prime(3)]))
    return specs


def _order(M: SL2, bound: int = 12):
    P = M
    for k in range(1, bound + 1):
        if P.is_identity():
            return k
        P = P @ M
    return None


def _torsion_order(G: AbelianGroup) -> int:
    out = 1
    for d in G.torsion:
        out *= d
    return out


def _cert_summary(text):
    c = b2plus_certificate(parse_word(text))
    return [c.found, c.det, c.matches_plum]


def _b1_prime(n):
    _, b1 = basic_slice_surgery(1, 0, f"-1/{n}")
    return b1.left, b1.right


def claim_ids() -> list[str]:
    return [s[0] for s in _claim_specs()]


def run_claim(cid: str) -> ClaimResult:
    for spec in _claim_specs():
        if spec[0] == cid:
            c, desc, prov, anchor, expected, compute = spec
            return _result(c, desc, prov, anchor, expected(), compute)
    raise KeyError(cid)


def verify_paper(executor=None) -> list[ClaimResult]:
    """Run every claim. Output order is fixed whether or not an executor is used."""
    if executor is None:
        return [_result(c, d, p, a, e(), f) for c, d, p, a, e, f in _claim_specs()]
    return list(executor.map(run_claim, claim_ids()))
