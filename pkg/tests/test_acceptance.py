"""Acceptance criteria, one test per criterion.

Each test prints ``criterion N: PASS|FAIL - summary``.  Every comparison is
exact equality over Q or GF(p); there are no tolerances.  Run with ``-s`` to
see the lines, or execute this file directly.
"""

import json
import random
import sys
import tempfile
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import BIG_BUDGET, gallery_pairs  # noqa: E402
from dorroh.cli import run  # noqa: E402
from dorroh.document import parse_document, serialize_document  # noqa: E402
from dorroh.dorroh import extend, extend_algebra, extend_coalgebra  # noqa: E402
from dorroh.fields import GF, Q  # noqa: E402
from dorroh.gallery import (  # noqa: E402
    EX42_IDEAL,
    SWEEDLER_DEGREES,
    ex42_pair,
    gallery,
    gallery_names,
    group_algebra_c2,
    kc2_pair,
    line_algebra,
    line_coalgebra,
    sweedler_hopf,
    zt_fail_pair,
    zt_pass_pair,
)
from dorroh.hopf import (  # noqa: E402
    bialgebra_equations,
    check_bialgebra_conditions,
    check_trivial_ext_bialgebra,
    direct_bialgebra_check,
    radford_subalgebra,
    solve_antipode,
    split_graded_hopf,
    verify_antipode_identities,
)
from dorroh.ideals import (  # noqa: E402
    check_ideal_criteria,
    check_trivial_ext_ideal,
    classify_unitization_ideals,
    decompose_ideal,
    enumerate_ideals,
    ideal_quotient_isos,
    is_ideal,
    verify_ideal_exact_sequences,
)
from dorroh.linalg import Subspace, enumerate_subspaces  # noqa: E402
from dorroh.structures import (  # noqa: E402
    Algebra,
    BicomoduleCoaction,
    BimoduleAction,
    Coalgebra,
    DorrohPair,
    DorrohPairAlgebras,
    DorrohPairCoalgebras,
    counitization,
    ground_hopf,
    scalar_action,
    scalar_coaction,
    unitization,
)
from dorroh.subcoalgebras import (  # noqa: E402
    annihilator_duality,
    check_subcoalgebra_criteria,
    check_trivial_coext_subcoalgebra,
    classify_counitization_subcoalgebras,
    decompose_subcoalgebra,
    enumerate_subcoalgebras,
    is_subcoalgebra,
    subcoalgebra_quotient_isos,
    verify_coalgebra_exact_sequences,
)


def verdict(n, ok, summary):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {summary}")
    assert ok, summary


def sweedler_pair(F=Q):
    return split_graded_hopf(sweedler_hopf(F), SWEEDLER_DEGREES).split.pair


def bialgebra_fixtures(F):
    """Every gallery fixture over ``F`` that carries both structures, as a full pair."""
    out = []
    for name in gallery_names():
        try:
            doc = gallery(name, F)
        except ValueError:
            continue
        if doc.pair is None:
            out.append((name, sweedler_pair(F)))
        elif doc.has_algebra_data and doc.has_coalgebra_data:
            out.append((name, doc.dorroh_pair()))
    return out


def random_matrix(F, rows, cols, rng, density):
    return [[rng.choice(F.elements()) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def random_candidate(F, rng):
    from dorroh.linalg import Matrix

    H = rng.choice([ground_hopf(F), group_algebra_c2(F)])
    h, n = H.dim, rng.choice([1, 2])
    d = rng.choice([0.2, 0.4])
    rm = lambda r, c: Matrix(F, random_matrix(F, r, c, rng, d), c)  # noqa: E731
    if h == 1 and rng.random() < 0.7:
        act, co = scalar_action(H.algebra, n), scalar_coaction(H.coalgebra, n)
    else:
        act = BimoduleAction(rm(n, h * n), rm(n, n * h))
        co = BicomoduleCoaction(rm(h * n, n), rm(n * h, n))
    return DorrohPair(
        DorrohPairAlgebras(H.algebra, Algebra(F, rm(n, n * n)), act),
        DorrohPairCoalgebras(H.coalgebra, Coalgebra(F, rm(n * n, n)), co),
        H.antipode,
    )


def convolution_by_hand(ext, S):
    """``sum S(u_1) u_2`` and ``sum u_1 S(u_2)`` against ``eps(u) 1`` for every basis ``u``, term by term."""
    F, t = ext.field, ext.dim
    A, C = ext.algebra, ext.coalgebra
    e = lambda i: tuple(F.one if j == i else F.zero for j in range(t))  # noqa: E731
    for u in range(t):
        d = C.coproduct(e(u))
        left = [F.zero] * t
        right = [F.zero] * t
        for idx, c in enumerate(d):
            if not c:
                continue
            a, b = divmod(idx, t)
            pl = A.product(S.apply(e(a)), e(b))
            pr = A.product(e(a), S.apply(e(b)))
            left = [F.reduce(x + c * y) for x, y in zip(left, pl)]
            right = [F.reduce(x + c * y) for x, y in zip(right, pr)]
        want = tuple(F.reduce(C.counit[u] * x) for x in A.unit)
        if tuple(left) != want or tuple(right) != want:
            return False
    return True


# 1 ---------------------------------------------------------------------------------------

def test_criterion_01_bialgebra_iff():
    start = time.perf_counter()
    fixtures = bialgebra_fixtures(Q) + bialgebra_fixtures(GF(3))
    fixture_ok = all(bialgebra_equations(p).passed == direct_bialgebra_check(extend(p)).passed for _, p in fixtures)
    F, rng = GF(3), random.Random(1)
    valid = agree = positive = 0
    while valid < 200:
        pair = random_candidate(F, rng)
        if not pair.validate().passed:
            continue
        valid += 1
        eqs = bialgebra_equations(pair).passed
        direct = direct_bialgebra_check(extend(pair)).passed
        agree += eqs == direct
        positive += direct
    elapsed = time.perf_counter() - start
    ok = fixture_ok and agree == valid == 200 and positive > 0 and elapsed < 30
    verdict(1, ok, f"{len(fixtures)} fixtures and {valid} random GF(3) pairs ({positive} bialgebras), "
                   f"equations == direct check on all, {elapsed:.1f}s")


# 2 ---------------------------------------------------------------------------------------

def test_criterion_02_antipode():
    from dorroh.dorroh import block_antipode

    results = []
    for name, pair in (("kc2", kc2_pair(Q)), ("sweedler", sweedler_pair())):
        sol = solve_antipode(pair)
        total = block_antipode(pair.antipode, sol.antipode)
        results.append(sol.exists and convolution_by_hand(extend(pair), total))
    H4 = sweedler_hopf(Q)
    restriction = H4.antipode.submatrix([2, 3], [2, 3])
    matches = H4.validate().passed and solve_antipode(sweedler_pair()).antipode == restriction
    verdict(2, all(results) and matches, "kc2 and sweedler antipodes are convolution inverses of id; "
                                         "sweedler S_I equals the restriction of the H4 antipode")


# 3 ---------------------------------------------------------------------------------------

def test_criterion_03_antipode_identities():
    checked = 0
    ok = True
    for F in (Q, GF(3), GF(5)):
        for name, pair in bialgebra_fixtures(F):
            if pair.antipode is None or not check_bialgebra_conditions(pair).is_bialgebra:
                continue
            sol = solve_antipode(pair)
            if sol.exists:
                checked += 1
                ok &= verify_antipode_identities(pair, pair.antipode, sol.antipode).passed
    verdict(3, ok and checked > 0, f"six reversal identities hold on all {checked} solved fixtures")


# 4 ---------------------------------------------------------------------------------------

def test_criterion_04_radford():
    kc2 = radford_subalgebra(kc2_pair(Q))
    sw = radford_subalgebra(sweedler_pair())
    ok = (
        kc2.via_projection == kc2.via_coinvariants and kc2.report.passed
        and sw.via_projection == sw.via_coinvariants and sw.report.passed
        and sw.via_projection.dim * 2 == 4
    )
    verdict(4, ok, f"projection image equals k1 + coinvariants; sweedler {sw.via_projection.dim}*2 = 4")


# 5 ---------------------------------------------------------------------------------------

def test_criterion_05_ideal_iff():
    start = time.perf_counter()
    total = 0
    ok = True
    for F in (GF(2), GF(3)):
        for name, pair in gallery_pairs(F, "algebra"):
            ext = extend_algebra(pair)
            if ext.dim > 4:
                continue
            for K in enumerate_subspaces(ext.dim, F, BIG_BUDGET):
                rep = check_ideal_criteria(decompose_ideal(ext, K), ext)
                d = rep["ideal.direct"].passed
                ok &= rep.all_pass(["ideal.a", "ideal.b", "ideal.c"]) == d
                ok &= rep.all_pass(["ideal.a", "ideal.b-weak", "ideal.c-weak"]) == d
                ok &= rep.all_pass(["ideal.a", "ideal.bar.b", "ideal.bar.c"]) == d
                ok &= rep.all_pass(["ideal.a", "ideal.bar.b-weak", "ideal.bar.c-weak"]) == d
                total += 1
    elapsed = time.perf_counter() - start
    verdict(5, ok and elapsed < 60, f"{total} subspaces over GF(2)/GF(3), all criteria variants match the direct check, {elapsed:.1f}s")


# 6 ---------------------------------------------------------------------------------------

def test_criterion_06_ideal_sequences():
    count = 0
    ok = True
    for F in (GF(2), GF(3)):
        for name, pair in gallery_pairs(F, "algebra"):
            ext = extend_algebra(pair)
            if ext.dim > 4:
                continue
            for K in enumerate_ideals(ext, BIG_BUDGET):
                dec = decompose_ideal(ext, K)
                ok &= K.dim == dec.L.dim + dec.B.dim == dec.Z.dim + dec.J.dim
                ok &= verify_ideal_exact_sequences(dec, ext).passed
                ok &= ideal_quotient_isos(dec, ext).report.passed
                count += 1
    ext = extend_algebra(ex42_pair(Q))
    dims = ideal_quotient_isos(decompose_ideal(ext, Subspace(Q, 3, EX42_IDEAL)), ext).dims
    verdict(6, ok and dims == (1, 1, 1), f"{count} ideals: exact sequences and quotient isomorphisms verified; ex42 chain {dims}")


# 7 ---------------------------------------------------------------------------------------

def test_criterion_07_unitization_classification():
    cases = []
    ok = True
    for F in (GF(2), GF(3)):
        squares = [0, 1] + ([-2] if F.characteristic == 3 else [])
        algebras = [line_algebra(F, s) for s in squares] + [ex42_pair(F).ideal]
        for I in algebras:
            listed = classify_unitization_ideals(I, budget=BIG_BUDGET, verify=False)
            brute = set(enumerate_ideals(extend_algebra(unitization(I)), BIG_BUDGET))
            ok &= {c.K for c in listed} == brute and len(listed) == len(brute)
            cases.append(len(brute))
    verdict(7, ok, f"classified ideals equal enumerated ideals; counts {cases}")


# 8 ---------------------------------------------------------------------------------------

def test_criterion_08_subcoalgebra_mirror():
    F = GF(2)
    total = subs = 0
    ok = True
    for name, pair in gallery_pairs(F, "coalgebra"):
        ext = extend_coalgebra(pair)
        if ext.dim > 3:
            continue
        for T in enumerate_subspaces(ext.dim, F):
            dec = decompose_subcoalgebra(ext, T)
            rep = check_subcoalgebra_criteria(dec, ext)
            d = rep["subcoal.direct"].passed
            ok &= rep.all_pass(["subcoal.a", "subcoal.b", "subcoal.c"]) == d
            ok &= rep.all_pass(["subcoal.bar.a", "subcoal.b", "subcoal.bar.c"]) == d
            ok &= annihilator_duality(pair, T).passed
            if d:
                ok &= T.dim == dec.R.dim + dec.D.dim == dec.E.dim + dec.Q.dim
                ok &= verify_coalgebra_exact_sequences(dec, ext).passed
                ok &= subcoalgebra_quotient_isos(dec, ext).report.passed
                subs += 1
            total += 1
    verdict(8, ok, f"{total} subspaces over GF(2) ({subs} subcoalgebras): criteria, sequences, quotients, annihilator duality")


# 9 ---------------------------------------------------------------------------------------

def test_criterion_09_counitization_classification():
    ok = True
    counts = []
    for F in (GF(2), GF(3)):
        for c in (0, 1):
            P = line_coalgebra(F, c)
            listed = classify_counitization_subcoalgebras(P, budget=BIG_BUDGET, verify=False)
            ext = extend_coalgebra(counitization(P))
            brute = set(enumerate_subcoalgebras(ext))
            ok &= {x.T for x in listed} == brute and len(listed) == len(brute)
            # span{(1,0)} is (k, 0): case b with Q = 0
            base_line = [x for x in listed if x.T == Subspace(F, 2, [(1, 0)])]
            ok &= len(base_line) == 1 and base_line[0].case == "b" and base_line[0].data["Q"].dim == 0
            counts.append(len(brute))
    verdict(9, ok, f"classified subcoalgebras equal enumerated ones; counts {counts}; span{{(1,0)}} filed under case b")


# 10 --------------------------------------------------------------------------------------

def test_criterion_10_trivial_extension_checkers():
    checked = 0
    ok = True
    for F in (GF(2), GF(3)):
        for name, pair in gallery_pairs(F, "algebra"):
            if not name.startswith("trivext-") or not pair.ideal.is_zero_product():
                continue
            ext = extend_algebra(pair)
            for K in enumerate_subspaces(ext.dim, F, BIG_BUDGET):
                rep = check_trivial_ext_ideal(pair, K)
                ok &= all(c.passed for c in rep if c.id != "ideal.direct") == is_ideal(ext, K).passed
                checked += 1
        for name, pair in gallery_pairs(F, "coalgebra"):
            if not name.startswith("trivext-") or not pair.carried.is_zero_coproduct():
                continue
            ext = extend_coalgebra(pair)
            for T in enumerate_subspaces(ext.dim, F, BIG_BUDGET):
                rep = check_trivial_coext_subcoalgebra(pair, T)
                ok &= all(c.passed for c in rep if c.id != "subcoal.direct") == is_subcoalgebra(ext, T).passed
                checked += 1
    verdict(10, ok and checked > 0, f"{checked} subspaces of trivext fixtures: specialized criteria match the direct checks")


# 11 --------------------------------------------------------------------------------------

def test_criterion_11_cross_terms():
    p = zt_pass_pair(Q)
    H = group_algebra_c2(Q)
    pass_special = check_trivial_ext_bialgebra(H, p.ideal_labels, p.algebras.action, p.coalgebras.coaction).passed
    pass_generic = bialgebra_equations(p).passed
    f = zt_fail_pair(Q)
    fail_special = check_trivial_ext_bialgebra(ground_hopf(Q), f.ideal_labels, f.algebras.action, f.coalgebras.coaction)
    fail_eqs = bialgebra_equations(f)
    localized = [c.id for c in fail_eqs.failures()] == ["bialg.comult-product-compatible"]
    ok = pass_special and pass_generic and not fail_special.passed and not fail_eqs.passed and localized
    verdict(11, ok, "zt-pass passes both checkers; zt-fail fails both, localized to the product-coproduct equation")


# 12 --------------------------------------------------------------------------------------

def test_criterion_12_parser_and_cli():
    round_trip = all(parse_document(serialize_document(gallery(n))) == gallery(n) for n in gallery_names())
    with tempfile.TemporaryDirectory() as tmp:
        def fixture(name):
            path = Path(tmp) / f"{name}.dorroh"
            path.write_text(run(["gallery", name])[1] + "\n", encoding="utf-8")
            return str(path)

        ok_path, bad_path = fixture("kc2"), fixture("kc2-broken-delta")
        broken = Path(tmp) / "broken.dorroh"
        broken.write_text("field Q\nspace I 1 [x]\nmult I (0,0) = 1\n", encoding="utf-8")
        first = run(["check-bialgebra", ok_path, "--format", "machine"])
        second = run(["check-bialgebra", ok_path, "--format", "machine"])
        codes = (first[0], run(["check-bialgebra", bad_path])[0], run(["validate", str(broken)])[0])
        json.loads(first[1])
    ok = round_trip and first == second and codes == (0, 1, 2)
    verdict(12, ok, f"round trip on {len(gallery_names())} fixtures, byte-identical reports, exit codes {codes}")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
