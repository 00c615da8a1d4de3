"""Built-in fixtures, as Python objects and as documents."""

from __future__ import annotations

from typing import Callable

from .document import StructureDocument, validate_document
from .fields import GF, Q, Field
from .linalg import Matrix
from .structures import (
    Algebra,
    Bialgebra,
    BicomoduleCoaction,
    BimoduleAction,
    Coalgebra,
    DorrohPair,
    DorrohPairAlgebras,
    DorrohPairCoalgebras,
    counitization,
    scalar_pair,
    trivial_coextension,
    trivial_extension,
    unitization,
    zero_algebra,
    zero_coalgebra,
)


class GalleryError(ValueError):
    pass


def _odd(field: Field, name: str) -> None:
    if field.characteristic == 2:
        raise GalleryError(f"fixture {name!r} needs a field of characteristic other than 2")


# -- objects ------------------------------------------------------------------

def line_algebra(field: Field, square: int, label: str = "x") -> Algebra:
    """One-dimensional algebra ``x * x = square * x``."""
    return Algebra.from_products(field, 1, {(0, 0, 0): square}, basis=[label])


def line_coalgebra(field: Field, coefficient: int, label: str = "x") -> Coalgebra:
    """One-dimensional coalgebra ``Delta(x) = coefficient * x (x) x``."""
    return Coalgebra.from_coproducts(field, 1, {(0, 0, 0): coefficient}, basis=[label])


def kc2_pair(field: Field, broken: bool = False) -> DorrohPair:
    """``k (+) kx`` with ``x^2 = -2x`` and ``Delta(x) = x (x) x``; ``1 + x`` is grouplike."""
    _odd(field, "kc2")
    return scalar_pair(line_algebra(field, -2), line_coalgebra(field, 0 if broken else 1))


def group_algebra_c2(field: Field) -> Bialgebra:
    """``kC_2`` with basis ``1, g``."""
    labels = ("1", "g")
    A = Algebra.from_products(field, 2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}, (1, 0), labels)
    C = Coalgebra.from_coproducts(field, 2, {(0, 0, 0): 1, (1, 1, 1): 1}, (1, 1), labels)
    return Bialgebra(A, C, Matrix.identity(field, 2))


def sweedler_hopf(field: Field) -> Bialgebra:
    """Four-dimensional Hopf algebra on ``1, g, x, gx`` with ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``."""
    _odd(field, "sweedler")
    labels = ("1", "g", "x", "gx")
    word = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}
    exps = {v: k for k, v in word.items()}
    products = {}
    for i in range(4):
        a, b = exps[i]
        for j in range(4):
            c, d = exps[j]
            if b + d < 2:
                # g^a x^b g^c x^d = (-1)^(b c) g^(a+c) x^(b+d)
                products[(i, j, word[((a + c) % 2, b + d)])] = (-1) ** (b * c)
    A = Algebra.from_products(field, 4, products, (1, 0, 0, 0), labels)
    coproducts = {
        (0, 0, 0): 1,
        (1, 1, 1): 1,
        (2, 2, 0): 1, (2, 1, 2): 1,   # x -> x(x)1 + g(x)x
        (3, 3, 1): 1, (3, 0, 3): 1,   # gx -> gx(x)g + 1(x)gx
    }
    C = Coalgebra.from_coproducts(field, 4, coproducts, (1, 1, 0, 0), labels)
    S = Matrix.from_entries(field, 4, 4, {(0, 0): 1, (1, 1): 1, (3, 2): -1, (2, 3): 1})
    return Bialgebra(A, C, S)


SWEEDLER_DEGREES = (0, 0, 1, 1)


def ex42_pair(field: Field) -> DorrohPairAlgebras:
    """Unitization of ``k x U`` with ``U`` one-dimensional and ``U^2 = 0``."""
    I = Algebra.from_products(field, 2, {(0, 0, 0): 1}, basis=["a", "u"])
    return unitization(I)


EX42_IDEAL = ((1, -1, 0), (0, 0, 1))  # {(t, -t, u)}


def zt_pass_pair(field: Field) -> DorrohPair:
    """``kC_2 (+) M`` with ``M`` two-dimensional, zero product and coproduct, cross terms cancelling."""
    _odd(field, "trivext-zt-pass")
    H = group_algebra_c2(field)
    M = ("m0", "m1")
    # g.m0 = m1, g.m1 = m0, m0.g = -m1, m1.g = -m0; the unit acts as the identity
    left = Matrix.from_entries(field, 2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1, (0, 3): 1})
    right = Matrix.from_entries(field, 2, 4, {(0, 0): 1, (1, 2): 1, (1, 1): -1, (0, 3): -1})
    # m0 -> 1(x)m0, m1 -> g(x)m1 ; m0 -> m0(x)g, m1 -> m1(x)1
    rl = Matrix.from_entries(field, 4, 2, {(0, 0): 1, (3, 1): 1})
    rr = Matrix.from_entries(field, 4, 2, {(1, 0): 1, (2, 1): 1})
    return DorrohPair(
        DorrohPairAlgebras(H.algebra, zero_algebra(field, M), BimoduleAction(left, right)),
        DorrohPairCoalgebras(H.coalgebra, zero_coalgebra(field, M), BicomoduleCoaction(rl, rr)),
        H.antipode,
    )


def zt_fail_pair(field: Field) -> DorrohPair:
    """``k (+) km`` with zero product and coproduct and scalar (co)actions."""
    return scalar_pair(line_algebra(field, 0, "m"), line_coalgebra(field, 0, "m"))


def idempotents_pair(field: Field) -> DorrohPairAlgebras:
    """``k x k`` acting on ``M = k`` through the first factor on both sides."""
    A = Algebra.from_products(field, 2, {(0, 0, 0): 1, (1, 1, 1): 1}, (1, 1), ["e1", "e2"])
    act = Matrix.from_entries(field, 1, 2, {(0, 0): 1})
    return trivial_extension(A, ("m",), BimoduleAction(act, act))


def coext_kc2_pair(field: Field) -> DorrohPairCoalgebras:
    """``kC_2`` coacting on ``M = k`` by ``m -> g (x) m`` and ``m -> m (x) g``."""
    C = group_algebra_c2(field).coalgebra
    rl = Matrix.from_entries(field, 2, 1, {(1, 0): 1})
    rr = Matrix.from_entries(field, 2, 1, {(1, 0): 1})
    return trivial_coextension(C, ("m",), BicomoduleCoaction(rl, rr))


# -- documents ---------------------------------------------------------------

def _pair_document(field: Field, pair, subs=None) -> StructureDocument:
    if isinstance(pair, DorrohPair):
        alg, coal = pair.algebras, pair.coalgebras
    elif isinstance(pair, DorrohPairAlgebras):
        alg, coal = pair, None
    else:
        alg, coal = None, pair
    H = alg.base if alg else coal.base
    I = alg.ideal if alg else coal.carried
    doc = StructureDocument(field)
    doc.add_space("H", H.basis)
    doc.add_space("I", I.basis)
    doc.pair = ("H", "I")
    h = H.dim
    if alg is not None:
        doc.set_algebra("H", alg.base)
        doc.set_algebra("I", alg.ideal)
        doc.set_action("I", h, alg.action)
    if coal is not None:
        doc.set_coalgebra("H", coal.base)
        doc.set_coalgebra("I", coal.carried)
        doc.set_coaction("I", h, coal.coaction)
    if isinstance(pair, DorrohPair) and pair.antipode is not None:
        doc.set_antipode("H", pair.antipode)
    for name, vecs in (subs or {}).items():
        doc.subs[name] = tuple(tuple(field(x) for x in v) for v in vecs)
    return doc


def _hopf_document(field: Field, B: Bialgebra, degrees=None) -> StructureDocument:
    doc = StructureDocument(field)
    doc.add_space("A", B.basis)
    doc.set_algebra("A", B.algebra)
    doc.set_coalgebra("A", B.coalgebra)
    if B.antipode is not None:
        doc.set_antipode("A", B.antipode)
    if degrees is not None:
        doc.set_degrees("A", degrees)
    return doc


_BUILDERS: dict[str, tuple[Callable[[Field], StructureDocument], Field, str]] = {
    "dualnum": (lambda F: _pair_document(F, unitization(line_algebra(F, 0, "m"))), Q,
                "unitization of km with m^2 = 0"),
    "kc2": (lambda F: _pair_document(F, kc2_pair(F)), Q,
            "k (+) kx with x^2 = -2x, Delta(x) = x(x)x: the group algebra of C2"),
    "kc2-broken-delta": (lambda F: _pair_document(F, kc2_pair(F, broken=True)), Q,
                         "as kc2 but Delta(x) = 0: not a bialgebra"),
    "sweedler": (lambda F: _hopf_document(F, sweedler_hopf(F), SWEEDLER_DEGREES), Q,
                 "four-dimensional graded Hopf algebra, degrees (0,0,1,1)"),
    "ex42": (lambda F: _pair_document(F, ex42_pair(F), {"K": EX42_IDEAL}), Q,
             "unitization of k x U with U^2 = 0, and the ideal {(t,-t,u)}"),
    "trivext-zt-pass": (lambda F: _pair_document(F, zt_pass_pair(F)), Q,
                        "kC2 (+) M, zero product on M, Hopf bimodule with vanishing cross terms"),
    "trivext-zt-fail": (lambda F: _pair_document(F, zt_fail_pair(F)), Q,
                        "k (+) km with zero product: cross terms give 2 m(x)m"),
    "trivext-idempotents": (lambda F: _pair_document(F, idempotents_pair(F)), Q,
                            "k x k acting on k through the first factor"),
    "trivext-coext-kc2": (lambda F: _pair_document(F, coext_kc2_pair(F)), Q,
                          "kC2 coacting on k by the grouplike g"),
    "counit-grouplike": (lambda F: _pair_document(F, counitization(line_coalgebra(F, 1)), {"T": ((1, 1),)}), Q,
                         "counitization of kx with Delta(x) = x(x)x, and the grouplike line T = k(1,x)"),
    "gf2-enum-zero": (lambda F: _pair_document(F, unitization(line_algebra(F, 0))), GF(2),
                      "unitization of kx with x^2 = 0"),
    "gf2-enum-idem": (lambda F: _pair_document(F, unitization(line_algebra(F, 1))), GF(2),
                      "unitization of kx with x^2 = x"),
    "gf2-enum-grouplike": (lambda F: _pair_document(F, counitization(line_coalgebra(F, 1))), GF(2),
                           "counitization of kx with Delta(x) = x(x)x"),
    "gf2-enum-cozero": (lambda F: _pair_document(F, counitization(line_coalgebra(F, 0))), GF(2),
                        "counitization of kx with Delta(x) = 0"),
}


def gallery_names() -> list[str]:
    return list(_BUILDERS)


def gallery_description(name: str) -> str:
    return _BUILDERS[name][2]


def gallery(name: str, field: Field | None = None) -> StructureDocument:
    """Build a fixture document (over its default field unless one is given) and validate it."""
    if name not in _BUILDERS:
        raise GalleryError(f"unknown fixture {name!r}; known: {', '.join(_BUILDERS)}")
    build, default, _ = _BUILDERS[name]
    doc = build(field or default)
    rep = validate_document(doc)
    if not rep.passed:
        raise GalleryError(f"fixture {name!r} fails validation: {[c.id for c in rep.failures()]}")
    return doc

