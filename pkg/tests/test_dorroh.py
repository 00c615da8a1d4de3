from itertools import product

import pytest

from dorroh.dorroh import (
    NotBiideal,
    NotDirectSum,
    NotSubbialgebra,
    check_canonical_maps,
    extend,
    extend_algebra,
    extend_coalgebra,
    split_bialgebra_extension,
)
from dorroh.fields import GF, Q
from dorroh.gallery import ex42_pair, group_algebra_c2, kc2_pair, line_algebra, line_coalgebra, sweedler_hopf, zt_pass_pair
from dorroh.linalg import Matrix
from dorroh.structures import Bialgebra, InvalidStructure, counitization, unitization


def test_dual_numbers():
    ext = extend_algebra(unitization(line_algebra(Q, 0, "m")))
    A = ext.algebra
    assert A.product((0, 1), (0, 1)) == (0, 0)
    assert A.unit == (1, 0)
    for v in [(1, 0), (0, 1), (3, -2)]:
        assert A.product(A.unit, v) == A.product(v, A.unit) == tuple(Q(x) for x in v)


def test_kc2_extension_is_group_algebra():
    ext = extend_algebra(unitization(line_algebra(Q, -2)))
    assert ext.algebra.product((0, 1), (0, 1)) == (0, -2)
    # (alpha, beta x) -> alpha + beta (g - 1) in the basis 1, g
    P = Matrix(Q, [[1, -1], [0, 1]])
    C2 = group_algebra_c2(Q).algebra
    assert P @ ext.algebra.mult == C2.mult @ P.kron(P)


def test_ex42_product_matches_expansion():
    F = Q
    ext = extend_algebra(ex42_pair(F))
    samples = [F(c) for c in (0, 1, -2, 3)]
    for al, be, u, al2, be2, u2 in product(samples, repeat=6):
        if (al, be, u, al2) == (0, 0, 0, 0) and (be2, u2) != (1, 1):
            continue
        got = ext.algebra.product((al, be, u), (al2, be2, u2))
        # (a,(b,u))(a',(b',u')) = (aa', (ab' + ba' + bb', au' + ua'))
        want = (al * al2, al * be2 + be * al2 + be * be2, al * u2 + u * al2)
        assert got == want


def test_coalgebra_extension_zero_carried_restricts():
    C = group_algebra_c2(Q).coalgebra
    from dorroh.structures import BicomoduleCoaction, DorrohPairCoalgebras, zero_coalgebra

    pair = DorrohPairCoalgebras(C, zero_coalgebra(Q, ()), BicomoduleCoaction(Matrix.zeros(Q, 0, 0), Matrix.zeros(Q, 0, 0)))
    ext = extend_coalgebra(pair)
    assert ext.coalgebra.comult == C.comult


def test_counitization_four_terms():
    ext = extend_coalgebra(counitization(line_coalgebra(Q, 1)))
    # Delta(0,x) = (1,0)(x)(0,x) + (0,x)(x)(1,0) + (0,x)(x)(0,x); index i*2 + j
    assert ext.coalgebra.coproduct((0, 1)) == (0, 1, 1, 1)
    assert ext.coalgebra.counit == (1, 0)  # eps(alpha, p) = alpha


def test_invalid_pair_rejected():
    from dorroh.structures import BimoduleAction, DorrohPairAlgebras, ground_algebra

    bad = DorrohPairAlgebras(ground_algebra(Q), line_algebra(Q, 1), BimoduleAction(Matrix(Q, [[2]]), Matrix(Q, [[1]])))
    with pytest.raises(InvalidStructure):
        extend_algebra(bad)


@pytest.mark.parametrize("pair", [kc2_pair(Q), zt_pass_pair(Q), kc2_pair(GF(3))], ids=["kc2", "zt-pass", "kc2-gf3"])
def test_canonical_maps(pair):
    rep = check_canonical_maps(extend(pair))
    assert rep.passed, rep.failures()


def test_projection_to_ideal_multiplicative_only_without_action():
    from dorroh.structures import Algebra, BimoduleAction, DorrohPairAlgebras

    F = Q
    nonunital_k = Algebra(F, Matrix(F, [[1]]), None, ("one",))
    pair = DorrohPairAlgebras(nonunital_k, line_algebra(F, 1), BimoduleAction(Matrix(F, [[0]]), Matrix(F, [[0]])))
    cond = check_canonical_maps(extend_algebra(pair))["maps.pi-ideal-multiplicative-iff-zero-action"]
    assert cond.passed and "projection to the ideal multiplicative: True" in cond.detail
    cond = check_canonical_maps(extend_algebra(unitization(line_algebra(F, 1))))["maps.pi-ideal-multiplicative-iff-zero-action"]
    assert cond.passed and "projection to the ideal multiplicative: False" in cond.detail


def test_split_group_algebra():
    s = split_bialgebra_extension(group_algebra_c2(Q), [(1, 0)], [(-1, 1)])
    pair = s.pair
    assert pair.coalgebras.carried.comult == Matrix(Q, [[1]])      # (g-1) -> (g-1)(x)(g-1)
    assert pair.coalgebras.coaction.left == Matrix(Q, [[1]])       # 1 (x) (g-1)
    assert pair.coalgebras.coaction.right == Matrix(Q, [[1]])      # (g-1) (x) 1
    assert pair.algebras.ideal.mult == Matrix(Q, [[-2]])           # (g-1)^2 = -2(g-1)


def test_split_sweedler_reconstructs():
    H4 = sweedler_hopf(Q)
    assert H4.validate().passed
    s = split_bialgebra_extension(H4, [(1, 0, 0, 0), (0, 1, 0, 0)], [(0, 0, 1, 0), (0, 0, 0, 1)])
    P = s.basis_change
    assert P @ s.extension.algebra.mult == H4.algebra.mult @ P.kron(P)
    assert P.kron(P) @ s.extension.coalgebra.comult == H4.coalgebra.comult @ P


def test_split_rejects_base_without_unit():
    with pytest.raises(NotSubbialgebra):
        split_bialgebra_extension(group_algebra_c2(Q), [(0, 1)], [(1, -1)])


def test_split_rejects_non_direct_sum():
    with pytest.raises(NotDirectSum):
        split_bialgebra_extension(group_algebra_c2(Q), [(1, 0)], [(1, 0)])


def test_split_rejects_non_biideal():
    # g . g = 1 leaves span{g}
    with pytest.raises(NotBiideal):
        split_bialgebra_extension(group_algebra_c2(Q), [(1, 0)], [(0, 1)])


@pytest.mark.parametrize("pair", [kc2_pair(Q), zt_pass_pair(Q)], ids=["kc2", "zt-pass"])
def test_round_trip_extend_then_split(pair):
    ext = extend(pair)
    t = ext.dim
    e = lambda i: tuple(1 if j == i else 0 for j in range(t))  # noqa: E731
    B = Bialgebra(ext.algebra, ext.coalgebra)
    s = split_bialgebra_extension(B, [e(i) for i in range(ext.h)], [e(i) for i in range(ext.h, t)])
    got, want = s.pair, pair
    assert got.algebras.base.mult == want.algebras.base.mult
    assert got.algebras.ideal.mult == want.algebras.ideal.mult
    assert got.algebras.action == want.algebras.action
    assert got.coalgebras.base.comult == want.coalgebras.base.comult
    assert got.coalgebras.carried.comult == want.coalgebras.carried.comult
    assert got.coalgebras.coaction == want.coalgebras.coaction
    assert got.algebras.base.unit == want.algebras.base.unit
