"""The Dorroh extension ``H (+) I`` of a pair, and the inverse split of a bialgebra."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import Field
from .linalg import Matrix, Subspace, Vector, twist
from .report import AnalysisReport, Condition, ConsistencyError, Labels, compare, render_vector
from .structures import (
    Algebra,
    BicomoduleCoaction,
    Bialgebra,
    BimoduleAction,
    Coalgebra,
    DorrohPair,
    DorrohPairAlgebras,
    DorrohPairCoalgebras,
    ident,
    require_valid,
)


class NotDirectSum(ValueError):
    pass


class NotSubbialgebra(ValueError):
    pass


class NotBiideal(ValueError):
    pass


def _total_labels(a: Labels, b: Labels) -> Labels:
    out = list(a)
    for x in b:
        y = x
        while y in out:
            y += "'"
        out.append(y)
    return tuple(out)


def inclusion_maps(field: Field, h: int, n: int) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """``(tau_H, tau_I, pi_H, pi_I)`` for ``H (+) I`` with the ``H`` coordinates first."""
    t = h + n
    tau_h = Matrix.from_entries(field, t, h, {(i, i): 1 for i in range(h)})
    tau_i = Matrix.from_entries(field, t, n, {(h + i, i): 1 for i in range(n)})
    return tau_h, tau_i, tau_h.T, tau_i.T


@dataclass(frozen=True, eq=False)
class DorrohExtension:
    field: Field
    h: int
    n: int
    labels: Labels
    algebra: Algebra | None
    coalgebra: Coalgebra | None
    algebras: DorrohPairAlgebras | None
    coalgebras: DorrohPairCoalgebras | None
    antipode_base: Matrix | None = None

    @property
    def dim(self) -> int:
        return self.h + self.n

    @property
    def maps(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        return inclusion_maps(self.field, self.h, self.n)

    @property
    def base_labels(self) -> Labels:
        return self.labels[: self.h]

    @property
    def ideal_labels(self) -> Labels:
        return self.labels[self.h :]

    def embed_base(self, v: Sequence) -> Vector:
        return tuple(self.field(x) for x in v) + (self.field.zero,) * self.n

    def embed_ideal(self, v: Sequence) -> Vector:
        return (self.field.zero,) * self.h + tuple(self.field(x) for x in v)

    def base_part(self, v: Sequence) -> Vector:
        return tuple(v[: self.h])

    def ideal_part(self, v: Sequence) -> Vector:
        return tuple(v[self.h :])

    def embed_base_subspace(self, s: Subspace) -> Subspace:
        return Subspace(self.field, self.dim, [self.embed_base(v) for v in s.basis])

    def embed_ideal_subspace(self, s: Subspace) -> Subspace:
        return Subspace(self.field, self.dim, [self.embed_ideal(v) for v in s.basis])

    def render(self, v: Sequence) -> str:
        return render_vector(self.field, v, [self.labels])

    @property
    def bialgebra(self) -> Bialgebra:
        if self.algebra is None or self.coalgebra is None:
            raise ValueError("extension carries only one of the two structures")
        return Bialgebra(self.algebra, self.coalgebra)


def _extension_algebra(pair: DorrohPairAlgebras, labels: Labels) -> Algebra:
    H, I = pair.base, pair.ideal
    F, h, n = pair.field, H.dim, I.dim
    tau_h, tau_i, pi_h, pi_i = inclusion_maps(F, h, n)
    lam, rho = pair.action.left, pair.action.right
    mult = tau_h @ H.mult @ pi_h.kron(pi_h) + tau_i @ (
        lam @ pi_h.kron(pi_i) + rho @ pi_i.kron(pi_h) + I.mult @ pi_i.kron(pi_i)
    )
    unit = tau_h.apply(H.unit) if H.unit is not None else None
    return Algebra(F, mult, unit, labels)


def _extension_coalgebra(pair: DorrohPairCoalgebras, labels: Labels) -> Coalgebra:
    C, P = pair.base, pair.carried
    F, h, n = pair.field, C.dim, P.dim
    tau_h, tau_i, pi_h, pi_i = inclusion_maps(F, h, n)
    rl, rr = pair.coaction.left, pair.coaction.right
    comult = (
        tau_h.kron(tau_h) @ C.comult @ pi_h
        + (tau_h.kron(tau_i) @ rl + tau_i.kron(tau_h) @ rr + tau_i.kron(tau_i) @ P.comult) @ pi_i
    )
    counit = pi_h.T.apply(C.counit) if C.counit is not None else None
    return Coalgebra(F, comult, counit, labels)


def extend_algebra(pair: DorrohPairAlgebras | DorrohPair) -> DorrohExtension:
    """Algebra structure on ``H (+) I``: ``(a, x)(b, y) = (ab, a.y + x.b + xy)``."""
    if isinstance(pair, DorrohPair):
        pair = pair.algebras
    require_valid(pair.validate(), "algebra pair")
    labels = _total_labels(pair.base.basis, pair.ideal.basis)
    A = _extension_algebra(pair, labels)
    _recheck(A)
    return DorrohExtension(pair.field, pair.base.dim, pair.ideal.dim, labels, A, None, pair, None)


def extend_coalgebra(pair: DorrohPairCoalgebras | DorrohPair) -> DorrohExtension:
    """Coalgebra structure on ``C (+) P`` built from both coactions and both comultiplications."""
    if isinstance(pair, DorrohPair):
        pair = pair.coalgebras
    require_valid(pair.validate(), "coalgebra pair")
    labels = _total_labels(pair.base.basis, pair.carried.basis)
    C = _extension_coalgebra(pair, labels)
    _recheck(C)
    return DorrohExtension(pair.field, pair.base.dim, pair.carried.dim, labels, None, C, None, pair)


def extend(pair: DorrohPair) -> DorrohExtension:
    """Both structures at once; whether they form a bialgebra is a separate question."""
    require_valid(pair.validate(), "pair")
    labels = _total_labels(pair.base_labels, pair.ideal_labels)
    A = _extension_algebra(pair.algebras, labels)
    C = _extension_coalgebra(pair.coalgebras, labels)
    _recheck(A)
    _recheck(C)
    return DorrohExtension(pair.field, pair.h, pair.n, labels, A, C, pair.algebras, pair.coalgebras, pair.antipode)


def _recheck(S: Algebra | Coalgebra) -> None:
    from .structures import validate_algebra, validate_coalgebra

    rep = validate_algebra(S) if isinstance(S, Algebra) else validate_coalgebra(S)
    if not rep.passed:
        raise ConsistencyError(f"extension of a valid pair fails {[c.id for c in rep.failures()]}")


# -- canonical maps -----------------------------------------------------------

def check_canonical_maps(ext: DorrohExtension) -> AnalysisReport:
    """Identities and (co)multiplicativity of the inclusions and projections."""
    F, h, n = ext.field, ext.h, ext.n
    tau_h, tau_i, pi_h, pi_i = ext.maps
    Hl, Il, T = ext.base_labels, ext.ideal_labels, ext.labels
    conds = [
        compare("maps.pi-base-tau-base", pi_h @ tau_h, ident(F, h), [Hl], [Hl]),
        compare("maps.pi-ideal-tau-ideal", pi_i @ tau_i, ident(F, n), [Il], [Il]),
        compare("maps.pi-ideal-tau-base", pi_i @ tau_h, Matrix.zeros(F, n, h), [Hl], [Il]),
        compare("maps.pi-base-tau-ideal", pi_h @ tau_i, Matrix.zeros(F, h, n), [Il], [Hl]),
        compare("maps.sum-identity", tau_h @ pi_h + tau_i @ pi_i, ident(F, h + n), [T], [T]),
    ]
    if ext.algebra is not None:
        mu = ext.algebra.mult
        H, I = ext.algebras.base, ext.algebras.ideal
        conds += [
            compare("maps.tau-base-multiplicative", mu @ tau_h.kron(tau_h), tau_h @ H.mult, [Hl, Hl], [T]),
            compare("maps.tau-ideal-multiplicative", mu @ tau_i.kron(tau_i), tau_i @ I.mult, [Il, Il], [T]),
            compare("maps.pi-base-multiplicative", pi_h @ mu, H.mult @ pi_h.kron(pi_h), [T, T], [Hl]),
        ]
        acts_trivially = ext.algebras.action.left.is_zero() and ext.algebras.action.right.is_zero()
        pi_i_mult = (pi_i @ mu) == (I.mult @ pi_i.kron(pi_i))
        conds.append(
            Condition(
                "maps.pi-ideal-multiplicative-iff-zero-action",
                pi_i_mult == acts_trivially,
                f"projection to the ideal multiplicative: {pi_i_mult}; zero action: {acts_trivially}",
            )
        )
        if H.unit is not None:
            conds.append(compare("maps.tau-base-unital", tau_h @ ext.algebras.base.unit_map(), ext.algebra.unit_map(), [], [T]))
    if ext.coalgebra is not None:
        d = ext.coalgebra.comult
        C, P = ext.coalgebras.base, ext.coalgebras.carried
        conds += [
            compare("maps.tau-base-comultiplicative", d @ tau_h, tau_h.kron(tau_h) @ C.comult, [Hl], [T, T]),
            compare("maps.pi-base-comultiplicative", pi_h.kron(pi_h) @ d, C.comult @ pi_h, [T], [Hl, Hl]),
            compare("maps.pi-ideal-comultiplicative", pi_i.kron(pi_i) @ d, P.comult @ pi_i, [T], [Il, Il]),
        ]
        if C.counit is not None:
            conds.append(compare("maps.pi-base-counital", C.counit_map() @ pi_h, ext.coalgebra.counit_map(), [T], []))
    return AnalysisReport(tuple(conds))


# -- splitting a bialgebra ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class Split:
    pair: DorrohPair
    basis_change: Matrix  # columns: the chosen H basis, then the I basis
    antipode_ideal: Matrix | None
    extension: DorrohExtension


def _vectors(field: Field, n: int, sub: Subspace | Sequence[Sequence]) -> list[Vector]:
    if isinstance(sub, Subspace):
        return list(sub.basis)
    vecs = [tuple(field(x) for x in v) for v in sub]
    if any(len(v) != n for v in vecs):
        raise ValueError(f"basis vectors must have length {n}")
    if Subspace(field, n, vecs).dim != len(vecs):
        raise ValueError("basis vectors are linearly dependent")
    return vecs


def _vector_label(field: Field, v: Vector, names: Labels) -> str:
    nz = [i for i, c in enumerate(v) if c != 0]
    if len(nz) == 1 and v[nz[0]] == 1:
        return names[nz[0]]
    return "(" + render_vector(field, v, [names]).replace(" ", "") + ")"


def split_bialgebra_extension(
    A: Bialgebra, base: Subspace | Sequence[Sequence], ideal: Subspace | Sequence[Sequence]
) -> Split:
    """Recover a pair from ``A = H (+) I`` with ``H`` a subbialgebra and ``I`` a biideal.

    Returns the pair written in the chosen bases; extending it reproduces the
    structure constants of ``A`` in those bases exactly.
    """
    F, N = A.field, A.dim
    hv, iv = _vectors(F, N, base), _vectors(F, N, ideal)
    if len(hv) + len(iv) != N or Subspace(F, N, hv + iv).dim != N:
        raise NotDirectSum(f"subspaces of dimensions {len(hv)} and {len(iv)} do not give a direct sum of dimension {N}")
    Hs, Is = Subspace(F, N, hv), Subspace(F, N, iv)
    alg, coal = A.algebra, A.coalgebra
    names = A.basis
    show = lambda v: render_vector(F, v, [names])  # noqa: E731

    if alg.unit is not None and alg.unit not in Hs:
        raise NotSubbialgebra(f"unit {show(alg.unit)} is not in the base subspace")
    for a in hv:
        for b in hv:
            p = alg.product(a, b)
            if p not in Hs:
                raise NotSubbialgebra(f"product {show(a)}·{show(b)} = {show(p)} leaves the base subspace")
    HH = Hs.tensor(Hs)
    for a in hv:
        d = coal.coproduct(a)
        if d not in HH:
            raise NotSubbialgebra(f"coproduct of {show(a)} leaves the base subspace tensor square")
    full = Subspace.full(F, N)
    for x in iv:
        for e in range(N):
            u = tuple(F.one if j == e else F.zero for j in range(N))
            for p, side in ((alg.product(u, x), "left"), (alg.product(x, u), "right")):
                if p not in Is:
                    raise NotBiideal(f"{side} product of {show(x)} with {names[e]} gives {show(p)}, outside the ideal")
    coideal = Is.tensor(full) + full.tensor(Is)
    for x in iv:
        if coal.coproduct(x) not in coideal:
            raise NotBiideal(f"coproduct of {show(x)} is not in I⊗A + A⊗I")
        if coal.counit is not None and F.reduce(sum(a * b for a, b in zip(coal.counit, x))) != 0:
            raise NotBiideal(f"counit does not vanish on {show(x)}")

    h, n = len(hv), len(iv)
    P = Matrix.from_columns(F, hv + iv, N)
    Pinv = P.inverse()
    mu = Pinv @ alg.mult @ P.kron(P)
    d = Pinv.kron(Pinv) @ coal.comult @ P
    tau_h, tau_i, pi_h, pi_i = inclusion_maps(F, h, n)
    hl = tuple(_vector_label(F, v, names) for v in hv)
    il = tuple(_vector_label(F, v, names) for v in iv)

    H_alg = Algebra(F, pi_h @ mu @ tau_h.kron(tau_h), pi_h.apply(Pinv.apply(alg.unit)) if alg.unit is not None else None, hl)
    I_alg = Algebra(F, pi_i @ mu @ tau_i.kron(tau_i), None, il)
    action = BimoduleAction(pi_i @ mu @ tau_h.kron(tau_i), pi_i @ mu @ tau_i.kron(tau_h))
    H_coal = Coalgebra(F, pi_h.kron(pi_h) @ d @ tau_h, (Matrix.row(F, coal.counit) @ P @ tau_h).rows[0] if coal.counit is not None else None, hl)
    I_coal = Coalgebra(F, pi_i.kron(pi_i) @ d @ tau_i, None, il)
    coaction = BicomoduleCoaction(pi_h.kron(pi_i) @ d @ tau_i, pi_i.kron(pi_h) @ d @ tau_i)

    S_h = S_i = None
    if A.antipode is not None:
        S = Pinv @ A.antipode @ P
        S_h = pi_h @ S @ tau_h
        if (pi_i @ S @ tau_h).is_zero() and (pi_h @ S @ tau_i).is_zero():
            S_i = pi_i @ S @ tau_i

    pair = DorrohPair(
        DorrohPairAlgebras(H_alg, I_alg, action),
        DorrohPairCoalgebras(H_coal, I_coal, coaction),
        S_h,
    )
    ext = extend(pair)
    if ext.algebra.mult != mu or ext.coalgebra.comult != d:
        raise ConsistencyError("extension of the recovered pair differs from the input in the chosen basis")
    return Split(pair, P, S_i, ext)


def block_antipode(S_h: Matrix, S_i: Matrix) -> Matrix:
    """``S_H (+) S_I`` on ``H (+) I``."""
    F = S_h.field
    h, n = S_h.nrows, S_i.nrows
    tau_h, tau_i, pi_h, pi_i = inclusion_maps(F, h, n)
    return tau_h @ S_h @ pi_h + tau_i @ S_i @ pi_i


def total_swap(field: Field, a: int, b: int, c: int, d: int) -> Matrix:
    """``1 (x) twist (x) 1`` on ``A (x) B (x) C (x) D``."""
    return ident(field, a).kron(twist(field, b, c)).kron(ident(field, d))

