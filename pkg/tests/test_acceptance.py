"""Acceptance gate: one recorded PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in the
terminal summary under "acceptance criteria".
"""

import random
from math import gcd

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from twistkit.cobordism import b2plus_certificate, gamma_pattern
from twistkit.layers import (
    LayerDecomposition,
    ToricLayer,
    normalize,
    outer_slopes,
    reduce_torsion_script,
    split_and_twist,
)
from twistkit.linalg import AbelianGroup, Inertia, IntMatrix, congruence_slide, det_exact, inertia, smith_normal_form
from twistkit.mcg import INF, SL2, ZERO, Slope, act_on_slope, conjugate_word, eval_word, layer_slopes, twist_matrix
from twistkit.plumbing import boundary_homology, catalog, intersection_matrix
from twistkit.seifert import DeltaParams, SeifertData, delta_t, h_t, lspace_check
from twistkit.wordparse import parse_word

I2 = SL2.identity()
CASES = 1000
PROPS = settings(max_examples=CASES, deadline=None, derandomize=True, database=None,
                 suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large,
                                        HealthCheck.large_base_example])


def ev(text):
    return eval_word(parse_word(text))


def test_01_relations(criterion):
    ok = (ev("aba") == ev("bab") and ev("(ab)^6") == I2
          and ev("(a^3 b)^3") == I2 and ev("(b^3 a)^3") == I2)
    criterion("1  relations aba=bab, (ab)^6, (a^3b)^3, (b^3a)^3 exact", ok)


def test_02_identity_words(criterion):
    base = parse_word("a (a^3 b)^3 (b^3 a)^3 a^-1")
    ok = eval_word(base) == I2 and str(base) == "a^4 b a^3 b a^3 b^4 a b^3 a b^3"
    for n in range(1, 6):
        w = conjugate_word(base, parse_word(f"b^{n}"))
        literal = ev(f"(b^{n} a b^-{n})^4 b (b^{n} a b^-{n})^3 b (b^{n} a b^-{n})^3 b^4 "
                     f"(b^{n} a b^-{n}) b^3 (b^{n} a b^-{n}) b^3")
        ok = ok and eval_word(w) == I2 and literal == I2
        ok = ok and layer_slopes(w) == [Slope(1, -n), INF] * 5
    criterion("2  identity word, conjugated words n=1..5, slope sequence -n,inf x5", ok)


def test_03_plum(criterion):
    M = intersection_matrix(catalog("Plum"))
    i = inertia(M)
    ok = det_exact(M) == -3 and i.n_plus >= 1 and i == Inertia(1, 0, 7)
    criterion("3  Plum det -3, n_plus >= 1, inertia (1,0,7)", ok, f"det {det_exact(M)}, inertia {i.astuple()}")


def test_04_elliptic(criterion):
    ok = True
    for name, i in (("E6tilde", 6), ("E7tilde", 7), ("E8tilde", 8)):
        g = catalog(name)
        h = boundary_homology(g)
        torsion_ok = list(h.torsion) == ([9 - i] if 9 - i > 1 else [])
        lens = abs(det_exact(intersection_matrix(g.reweight(g.arrow, -1)))) == 9 - i
        ok = ok and h.free_rank == 1 and torsion_ok and lens
    criterion("4  Y6,Y7,Y8 homology Z+Z/(9-i), reweighted |det| = 9-i", ok)


def test_05_villa(criterion):
    choices = {AbelianGroup(1, (2, 2)), AbelianGroup(1, (4,))}
    groups = [boundary_homology(catalog("VillaA", n)) for n in range(1, 7)]
    ok = all(g in choices for g in groups)
    ok = ok and boundary_homology(catalog("VillaA", 0)) == boundary_homology(catalog("SeifParabolic"))
    criterion("5  VillaA(n) homology in {Z+Z/2+Z/2, Z+Z/4}; n=0 matches SeifParabolic", ok,
              ", ".join(str(g) for g in groups))


def _random_seifert(rng):
    g = rng.randint(0, 3)
    fibers = []
    for _ in range(rng.randint(0, 3)):
        q = rng.randint(2, 7)
        r = rng.choice([r for r in range(-q, 2 * q) if r and gcd(r, q) == 1])
        fibers.append((r, q))
    shift = sum(r // q for r, q in fibers)
    return SeifertData(g, 2 * g + rng.randint(1, 4) - shift, tuple(fibers))


def test_06_seifert(criterion):
    rng = random.Random(20240611)
    instances = [_random_seifert(rng) for _ in range(20)]
    ok = True
    scans = 0
    for d in instances:
        rep = lspace_check(d)
        ok = ok and rep.applicable and rep.normalized.a > 2 * d.genus
        for s in rep.scans:
            scans += 1
            one_change = s.changes.changes == 1 and s.changes.tail_certain
            ok = ok and one_change and s.unique_min == one_change
    criterion("6  20 random Seifert data with a > 2g: one sign change, tail-certain, h unique min agrees",
              ok, f"{scans} scans")


def test_07_gamma(criterion):
    e = b2plus_certificate(parse_word("a (a^3 b)^3 (b^3 a)^3 a^-1"))
    g = b2plus_certificate(parse_word("a^3 b a^3 b a^3 b^2"))
    miss = gamma_pattern(parse_word("a^3 b a^3 b"))
    ok = e.found and g.found and not miss.found
    for c in (e, g):
        ok = ok and c.plumbing == catalog("Plum") and c.matches_plum and c.det == -3 and c.inertia.n_plus >= 1
    criterion("7  gamma pattern fires on identity word and gamma, not on a^3ba^3b; Plum attached", ok)


def test_08_torsion_trace(criterion):
    t = reduce_torsion_script(1)
    want = [(ZERO, Slope.of(-1)), (ZERO, ZERO), (ZERO, Slope.of(1)), (ZERO, Slope.of(2)),
            (INF, Slope.of(2)), (ZERO, Slope.of(-2))]
    ok = t.milestones == want and t.regluing == I2 and ev("b^3 a b^3 a b^3 a") == I2
    criterion("8  torsion script slopes (0,-1),(0,0),(0,1),(0,2),(inf,2),(0,-2); regluing = I", ok)


def test_09_basic_slices(criterion):
    M = SL2(1, -1, 0, 1)
    ok = all(act_on_slope(M, (n, -1)) == Slope(n + 1, -1) and M.apply((n, -1)) == (n + 1, -1)
             for n in range(1, 11))
    criterion("9  [[1,-1],[0,1]] (n,-1) = (n+1,-1) for n = 1..10", ok)


# --- criterion 10: property suites ---------------------------------------
#
# Each case draws one seed from hypothesis and builds its inputs with a plain
# random.Random; composite strategies cost more than the checks themselves.

rngs = st.integers(0, 2 ** 32 - 1).map(random.Random)


def rand_matrix(rng):
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    return IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)])


def rand_symmetric(rng):
    n = rng.randint(1, 6)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(-9, 9)
    return IntMatrix.from_rows(rows)


def rand_slope(rng):
    while True:
        x, y = rng.randint(-30, 30), rng.randint(-30, 30)
        if (x, y) != (0, 0):
            g = gcd(x, y)
            return Slope(x // g, y // g)


def rand_sl2(rng):
    M = I2
    for _ in range(rng.randint(0, 6)):
        M = M @ twist_matrix(rng.choice([ZERO, INF])) ** rng.choice([-3, -2, -1, 1, 2, 3])
    return M


def rand_decomposition(rng):
    n = rng.randint(1, 5)
    layers = tuple(ToricLayer(f"L{k}", rand_slope(rng), rand_slope(rng)) for k in range(n))
    return LayerDecomposition(layers, tuple(rand_sl2(rng) for _ in range(n - 1)))


def rand_seifert(rng):
    g = rng.randint(0, 2)
    fibers = []
    for _ in range(rng.randint(0, 3)):
        q = rng.randint(1, 7)
        r = rng.choice([r for r in range(-10, 11) if r and gcd(r, q) == 1])
        fibers.append((r, q))
    d = SeifertData(g, rng.randint(-5, 5), tuple(fibers))
    p = DeltaParams(rng.randint(-g, g), rng.randint(-20, 20), tuple(rng.randint(-10, 10) for _ in fibers))
    return d, p


def _run_counted(test):
    calls = []
    test(calls)
    return len(calls)


def test_10a_snf(criterion):
    @PROPS
    @given(rngs)
    def prop(calls, rng):
        calls.append(1)
        M = rand_matrix(rng)
        r = smith_normal_form(M)
        assert r.U @ M @ r.V == r.D
        assert abs(det_exact(r.U)) == 1 and abs(det_exact(r.V)) == 1
        d = r.diagonal
        assert all(x >= 0 for x in d)
        assert all(d[k + 1] % d[k] == 0 if d[k] else d[k + 1] == 0 for k in range(len(d) - 1))
        for i in range(r.D.rows):
            for j in range(r.D.cols):
                assert i == j or r.D[i, j] == 0

    n = _run_counted(prop)
    criterion("10a SNF: U M V = D, unimodular, divisibility chain", n >= CASES, f"{n} cases")


def test_10b_inertia_slide(criterion):
    @PROPS
    @given(rngs)
    def prop(calls, rng):
        calls.append(1)
        M = rand_symmetric(rng)
        n = M.rows
        if n < 2:
            assert inertia(M) == inertia(M.tolist())
            return
        i, j = rng.sample(range(n), 2)
        S = congruence_slide(M, i, j, rng.randint(-4, 4))
        assert inertia(S) == inertia(M)
        assert det_exact(S) == det_exact(M)

    n = _run_counted(prop)
    criterion("10b inertia invariant under congruence_slide", n >= CASES, f"{n} cases")


def test_10c_twist_conjugation(criterion):
    @PROPS
    @given(rngs)
    def prop(calls, rng):
        calls.append(1)
        M, c = rand_sl2(rng), rand_slope(rng)
        assert twist_matrix(act_on_slope(M, c)) == M @ twist_matrix(c) @ M.inverse()

    n = _run_counted(prop)
    criterion("10c twist(M c) = M twist(c) M^-1", n >= CASES, f"{n} cases")


def test_10d_h_telescoping(criterion):
    @PROPS
    @given(rngs)
    def prop(calls, rng):
        calls.append(1)
        d, p = rand_seifert(rng)
        s = rng.randint(-40, 40)
        assert h_t(d, p, s + 1) - h_t(d, p, s) == delta_t(d, p, s)

    n = _run_counted(prop)
    criterion("10d h(s+1) - h(s) = delta(s)", n >= CASES, f"{n} cases")


def test_10e_normalize(criterion):
    @PROPS
    @given(rngs)
    def prop(calls, rng):
        calls.append(1)
        d = rand_decomposition(rng)
        n1 = normalize(d)
        assert normalize(n1) == n1
        assert all(g.is_identity() for g in n1.gluings)
        assert outer_slopes(n1) == outer_slopes(d)
        # every sub-range agrees once read in the same coordinates
        k = len(d.layers)
        P = I2
        for start in range(k):
            if start:
                P = P @ d.gluings[start - 1].inverse()
            for stop in range(start + 1, k + 1):
                left, right = outer_slopes(d, start, stop)
                assert outer_slopes(n1, start, stop) == (act_on_slope(P, left), act_on_slope(P, right))
        if k > 1:
            assert split_and_twist(d, 0, d.layers[0].right, 0) == d

    n = _run_counted(prop)
    criterion("10e normalize idempotent, outer_slopes invariant", n >= CASES, f"{n} cases")
