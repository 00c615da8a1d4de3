"""One-line statements for every condition id the library reports."""

from __future__ import annotations

from .hopf import DESCRIPTIONS as _BIALGEBRA

CONDITIONS: dict[str, str] = {
    # axioms of the pieces
    "algebra.associative": "multiplication is associative",
    "algebra.unit-left": "unit is a left identity",
    "algebra.unit-right": "unit is a right identity",
    "coalgebra.coassociative": "comultiplication is coassociative",
    "coalgebra.counit-left": "counit is a left counit",
    "coalgebra.counit-right": "counit is a right counit",
    "bimodule.left-associative": "(ab).x = a.(b.x)",
    "bimodule.right-associative": "x.(ab) = (x.a).b",
    "bimodule.middle": "(a.x).b = a.(x.b)",
    "bimodule.left-unital": "1.x = x",
    "bimodule.right-unital": "x.1 = x",
    "bicomodule.left-coassociative": "left coaction is coassociative",
    "bicomodule.right-coassociative": "right coaction is coassociative",
    "bicomodule.compatible": "left and right coactions commute",
    "bicomodule.left-counital": "left coaction is counital",
    "bicomodule.right-counital": "right coaction is counital",
    "pair-alg.left-compatible": "a.(xy) = (a.x)y",
    "pair-alg.middle-compatible": "(x.a)y = x(a.y)",
    "pair-alg.right-compatible": "(xy).a = x(y.a)",
    "pair-coalg.left-compatible": "left coaction and comultiplication of I are compatible",
    "pair-coalg.middle-compatible": "right and left coactions of the two tensor factors of Delta(p) agree",
    "pair-coalg.right-compatible": "right coaction and comultiplication of I are compatible",
    "bialgebra.comult-multiplicative": "comultiplication is multiplicative",
    "bialgebra.comult-unit": "Delta(1) = 1 (x) 1",
    "bialgebra.counit-multiplicative": "counit is multiplicative",
    "bialgebra.counit-unit": "counit of the unit is 1",
    "grading.respected": "all structure maps preserve the degree",
    # the extension
    "maps.pi-base-tau-base": "projection to the base after inclusion of the base is the identity",
    "maps.pi-ideal-tau-ideal": "projection to I after inclusion of I is the identity",
    "maps.pi-ideal-tau-base": "projection to I kills the base",
    "maps.pi-base-tau-ideal": "projection to the base kills I",
    "maps.sum-identity": "the two idempotents sum to the identity",
    "maps.tau-base-multiplicative": "inclusion of the base is multiplicative",
    "maps.tau-ideal-multiplicative": "inclusion of I is multiplicative",
    "maps.pi-base-multiplicative": "projection to the base is multiplicative",
    "maps.pi-ideal-multiplicative-iff-zero-action": "projection to I is multiplicative exactly when the action is zero",
    "maps.tau-base-unital": "inclusion of the base preserves the unit",
    "maps.tau-base-comultiplicative": "inclusion of the base is comultiplicative",
    "maps.pi-base-comultiplicative": "projection to the base is comultiplicative",
    "maps.pi-ideal-comultiplicative": "projection to I is comultiplicative",
    "maps.pi-base-counital": "projection to the base preserves the counit",
    # bialgebra and antipode
    **_BIALGEBRA,
    "bialg.comult-unit": "comultiplication of the extension preserves the unit",
    "bialg.counit-multiplicative": "counit of the extension is multiplicative",
    "bialg.counit-unit": "counit of the extension sends the unit to 1",
    "trivext.zt-vanishes": "the two cross terms of the product expansion cancel on M (x) M",
    "antipode.left": "S(u_1) u_2 = eps(u) 1",
    "antipode.right": "u_1 S(u_2) = eps(u) 1",
    "antipode.exists": "the linear system for the antipode of I has a solution",
    "antipode.routes-agree": "the pair system and the convolution system agree on solvability",
    "antipode.matches-given": "the solved antipode of I equals the restriction of the given antipode",
    "antipode.reverses-left-action": "S(a.x) = S(x).S(a)",
    "antipode.reverses-right-action": "S(x.a) = S(a).S(x)",
    "antipode.reverses-product": "S(xy) = S(y)S(x)",
    "antipode.reverses-left-coaction": "right coaction of S(x) is the flipped left coaction of x under S",
    "antipode.reverses-right-coaction": "left coaction of S(x) is the flipped right coaction of x under S",
    "antipode.reverses-coproduct": "Delta(S(x)) = S(x_2) (x) S(x_1)",
    "radford.routes-agree": "image of the projection equals k1 + coinvariants of I",
    "radford.closed-under-product": "the image is a subalgebra",
    "radford.contains-unit": "the image contains the unit",
    "radford.dimension": "dim B * dim H = dim of the extension",
    "radford.idempotent": "the projection is idempotent",
    # ideals
    "ideal.direct": "K absorbs products by every basis vector on both sides",
    "ideal.a": "B and Z are ideals of the base",
    "ideal.b": "J is a subalgebra and subbimodule; L is an ideal of I and a subbimodule",
    "ideal.b-weak": "J and L are subbimodules",
    "ideal.c": "phi is a multiplicative bimodule map and ay - xy, ya - yx lie in L when phi(x) = a + Z",
    "ideal.c-weak": "phi is a bimodule map and ay - xy, ya - yx lie in L when phi(x) = a + Z",
    "ideal.bar.b": "J is a subalgebra and subbimodule; L is an ideal of I and a subbimodule",
    "ideal.bar.b-weak": "J and L are subbimodules",
    "ideal.bar.c": "phi_bar: J/L -> B/Z is a multiplicative bimodule bijection with the absorption property",
    "ideal.bar.c-weak": "phi_bar: J/L -> B/Z is a bimodule bijection with the absorption property",
    "ideal.seq.L-K-B": "0 -> L -> K -> B -> 0 is exact",
    "ideal.seq.Z-K-J": "0 -> Z -> K -> J -> 0 is exact",
    "ideal.quot.W-ideal-of-K": "Z + L is an ideal of K",
    "ideal.quot.K-W-to-B-Z": "K/(Z + L) -> B/Z is an algebra isomorphism",
    "ideal.quot.B-Z-to-J-L": "B/Z -> J/L is an algebra isomorphism",
    "trivext-ideal.a": "B and Z are ideals and B B lies in Z",
    "trivext-ideal.b": "J is a subbimodule",
    "trivext-ideal.c": "phi is a bimodule epimorphism and B M + M B lies in L",
    # subcoalgebras
    "subcoal.direct": "Delta(T) lies in T (x) T",
    "subcoal.a": "D is a subcoalgebra of the base",
    "subcoal.b": "Q a subcoalgebra and subbicomodule, R a coideal of Q and a subbicomodule, coactions of Q land in D",
    "subcoal.c": "eta is a bicomodule map matching the coactions of Q with its coproduct",
    "subcoal.bar.a": "D and E are subcoalgebras of the base",
    "subcoal.bar.c": "eta_bar: D/E -> Q/R is a bijective bicomodule map matching the coactions of Q with its coproduct",
    "subcoal.eta-coalgebra-map": "eta is a coalgebra map",
    "subcoal.seq.R-T-D": "0 -> R -> T -> D -> 0 is exact",
    "subcoal.seq.E-T-Q": "0 -> E -> T -> Q -> 0 is exact",
    "subcoal.quot.W-coideal-of-T": "E + R is a coideal of T",
    "subcoal.quot.T-W-to-D-E": "T/(E + R) -> D/E is a coalgebra isomorphism",
    "subcoal.quot.D-E-to-Q-R": "D/E -> Q/R is a coalgebra isomorphism",
    "subcoal.dual-annihilator-ideal": "T is a subcoalgebra exactly when its annihilator is an ideal of the dual",
    "trivcoext-subcoal.a": "E and D are subcoalgebras and Delta(D) lies in E (x) D + D (x) E",
    "trivcoext-subcoal.b": "Q and R are subbicomodules with the coactions of Q landing in E",
    "trivcoext-subcoal.c": "eta is a bicomodule map",
    # classification and enumeration
    "enumerate.criteria-agree": "criteria and direct check agree on every subspace",
    "classify.matches-enumeration": "the classified list equals the brute-force list",
}


def describe(cid: str) -> str:
    """Statement for an id, ignoring any leading space prefix such as ``base.`` or ``H.``."""
    parts = cid.split(".")
    for i in range(len(parts)):
        key = ".".join(parts[i:])
        if key in CONDITIONS:
            return CONDITIONS[key]
    return ""
