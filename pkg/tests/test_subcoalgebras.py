import random

import pytest

from conftest import BIG_BUDGET, gallery_pairs
from dorroh.dorroh import extend_coalgebra
from dorroh.fields import GF, Q
from dorroh.gallery import coext_kc2_pair, line_coalgebra
from dorroh.linalg import Matrix, Subspace, enumerate_subspaces
from dorroh.structures import Coalgebra, counitization, zero_coalgebra
from dorroh.subcoalgebras import (
    NotASubcoalgebra,
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


def grouplike_counit(F=Q):
    return extend_coalgebra(counitization(line_coalgebra(F, 1)))


def subcoalgebra_by_hand(ext, T):
    """Delta(t) in T(x)T, tested by the rank of T(x)T with Delta(t) appended."""
    F, t = ext.field, ext.dim
    TT = [tuple(F.reduce(a * b) for a in u for b in v) for u in T.basis for v in T.basis]
    base_rank = Matrix(F, TT, t * t).rank() if TT else 0
    for v in T.basis:
        d = ext.coalgebra.coproduct(v)
        if Matrix(F, TT + [d], t * t).rank() != base_rank:
            return False
    return True


def test_zero_and_total():
    ext = grouplike_counit()
    assert is_subcoalgebra(ext, Subspace.zero(Q, 2)) and is_subcoalgebra(ext, Subspace.full(Q, 2))


def test_grouplike_line():
    ext = grouplike_counit()
    assert is_subcoalgebra(ext, Subspace(Q, 2, [(1, 1)]))
    c = is_subcoalgebra(ext, Subspace(Q, 2, [(0, 1)]))
    assert not c.passed and c.witnesses[0]["element"] == "x"


def test_decompose_base_part():
    ext = grouplike_counit()
    dec = decompose_subcoalgebra(ext, Subspace(Q, 2, [(1, 0)]))
    assert dec.D == dec.E == Subspace.full(Q, 1) and dec.Q.dim == dec.R.dim == 0


def test_decompose_grouplike_line():
    ext = grouplike_counit()
    dec = decompose_subcoalgebra(ext, Subspace(Q, 2, [(1, 1)]))
    assert dec.D == Subspace.full(Q, 1) and dec.E.dim == 0
    assert dec.Q == Subspace.full(Q, 1) and dec.R.dim == 0
    assert dec.eta_rep((1,)) == (1,)


def test_decompose_total():
    ext = grouplike_counit()
    dec = decompose_subcoalgebra(ext, Subspace.full(Q, 2))
    assert dec.D == dec.E and dec.Q == dec.R and dec.eta.shape == (0, 1)


def test_grouplike_line_criteria():
    ext = grouplike_counit()
    rep = check_subcoalgebra_criteria(decompose_subcoalgebra(ext, Subspace(Q, 2, [(1, 1)])), ext)
    assert rep.passed and rep["subcoal.eta-coalgebra-map"].passed


def test_carried_part_without_base_fails():
    ext = grouplike_counit()
    rep = check_subcoalgebra_criteria(decompose_subcoalgebra(ext, Subspace(Q, 2, [(0, 1)])), ext)
    assert not rep["subcoal.b"].passed and not rep["subcoal.direct"].passed


def test_base_plus_subcoalgebra_passes():
    ext = grouplike_counit()
    assert check_subcoalgebra_criteria(decompose_subcoalgebra(ext, Subspace.full(Q, 2)), ext).passed


@pytest.mark.parametrize("T,dims", [([(1, 1)], (1, 1, 1)), ([(1, 0), (0, 1)], (0, 0, 0)), ([], (0, 0, 0))],
                         ids=["grouplike", "total", "zero"])
def test_sequences_and_quotients(T, dims):
    ext = grouplike_counit()
    dec = decompose_subcoalgebra(ext, Subspace(Q, 2, T))
    assert verify_coalgebra_exact_sequences(dec, ext).passed
    assert dec.T.dim == dec.R.dim + dec.D.dim == dec.E.dim + dec.Q.dim
    isos = subcoalgebra_quotient_isos(dec, ext)
    assert isos.report.passed and isos.dims == dims


def test_quotients_need_a_subcoalgebra():
    ext = grouplike_counit()
    with pytest.raises(NotASubcoalgebra):
        subcoalgebra_quotient_isos(decompose_subcoalgebra(ext, Subspace(Q, 2, [(0, 1)])), ext)


def test_enumerate_grouplike_gf2():
    F = GF(2)
    found = set(enumerate_subcoalgebras(grouplike_counit(F)))
    assert found == {Subspace.zero(F, 2), Subspace(F, 2, [(1, 1)]), Subspace(F, 2, [(1, 0)]), Subspace.full(F, 2)}


def test_enumerate_zero_coproduct_gf2():
    F = GF(2)
    ext = extend_coalgebra(counitization(line_coalgebra(F, 0)))
    found = set(enumerate_subcoalgebras(ext))
    assert Subspace(F, 2, [(1, 1)]) not in found
    assert found == {Subspace.zero(F, 2), Subspace(F, 2, [(1, 0)]), Subspace.full(F, 2)}


def test_classify_grouplike_gf2():
    out = classify_counitization_subcoalgebras(line_coalgebra(GF(2), 1))
    cases = {c.T.basis: c.case for c in out}
    assert cases[((1, 1),)] == "c" and cases[((1, 0),)] == "b"
    assert sorted(cases.values()) == ["a", "b", "b", "c"]


def test_classify_zero_carried():
    F = GF(2)
    out = classify_counitization_subcoalgebras(zero_coalgebra(F, ()))
    assert {c.T for c in out} == {Subspace.zero(F, 1), Subspace.full(F, 1)}


def test_classify_single_subcoalgebra_over_rationals():
    (c,) = classify_counitization_subcoalgebras(line_coalgebra(Q, 1), Subspace(Q, 2, [(1, 1)]))
    assert c.case == "c" and c.data["x"] == (1,) and c.data["R"].dim == 0


def test_trivial_coextension_examples():
    pair = coext_kc2_pair(Q)
    assert check_trivial_coext_subcoalgebra(pair, Subspace(Q, 3, [(1, 0, 0)])).passed
    assert check_trivial_coext_subcoalgebra(pair, Subspace.full(Q, 3)).passed
    rep = check_trivial_coext_subcoalgebra(pair, Subspace(Q, 3, [(1, 0, 1)]))
    assert not rep["trivcoext-subcoal.c"].passed and not rep["subcoal.direct"].passed


# -- properties -----------------------------------------------------------------------------

def _random_subspace(F, n, rng):
    k = rng.randint(0, n)
    return Subspace(F, n, [tuple(rng.choice(F.elements()) for _ in range(n)) for _ in range(k)])


def test_criteria_iff_direct_on_random_subspaces():
    rng = random.Random(13)
    fixtures = [(F, pair) for F in (GF(2), GF(3)) for _, pair in gallery_pairs(F, "coalgebra")]
    positives = 0
    for _ in range(500):
        F, pair = rng.choice(fixtures)
        ext = extend_coalgebra(pair)
        T = _random_subspace(F, ext.dim, rng)
        dec = decompose_subcoalgebra(ext, T)
        rep = check_subcoalgebra_criteria(dec, ext)
        direct = subcoalgebra_by_hand(ext, T)
        assert rep["subcoal.direct"].passed == direct
        assert rep.all_pass(["subcoal.a", "subcoal.b", "subcoal.c"]) == direct
        assert rep.all_pass(["subcoal.bar.a", "subcoal.b", "subcoal.bar.c"]) == direct
        if direct:
            assert rep["subcoal.eta-coalgebra-map"].passed
        assert dec.reconstruct() == T
        positives += direct
    assert positives > 0


def test_duality_on_every_small_subspace():
    F = GF(2)
    for _, pair in gallery_pairs(F, "coalgebra"):
        ext = extend_coalgebra(pair)
        if ext.dim > 3:
            continue
        for T in enumerate_subspaces(ext.dim, F):
            assert annihilator_duality(pair, T).passed


def test_classification_never_lists_twice():
    for F in (GF(2), GF(3)):
        for P in (line_coalgebra(F, 0), line_coalgebra(F, 1),
                  Coalgebra.from_coproducts(F, 2, {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1}, basis=["a", "b"])):
            out = classify_counitization_subcoalgebras(P, budget=BIG_BUDGET)
            assert len({c.T for c in out}) == len(out)
