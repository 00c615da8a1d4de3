"""Algebras, coalgebras, (co)module data and Dorroh pairs as structure-constant matrices.

Matrix shapes (``n = dim`` of the carrier, ``h = dim`` of the base):

* multiplication ``n x n^2``, entry ``[k, i*n + j]`` is the coefficient of
  ``e_k`` in ``e_i e_j``; unit is a length-``n`` vector;
* comultiplication ``n^2 x n``, entry ``[i*n + j, k]`` is the coefficient of
  ``e_i (x) e_j`` in ``Delta(e_k)``; counit is a length-``n`` row;
* left action ``H (x) I -> I`` is ``n x h*n``, right action ``I (x) H -> I`` is
  ``n x n*h``;
* left coaction ``I -> H (x) I`` is ``h*n x n``, right coaction ``I -> I (x) H``
  is ``n*h x n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .fields import Field
from .linalg import Matrix, Vector, twist
from .report import AnalysisReport, Condition, Labels, compare, report


class StructureError(ValueError):
    """Structure constants have the wrong shape or are otherwise malformed."""


class InvalidStructure(ValueError):
    """The data fails an axiom; ``report`` lists every failing condition."""

    def __init__(self, message: str, report: AnalysisReport):
        super().__init__(message)
        self.report = report


def default_labels(prefix: str, n: int) -> Labels:
    return tuple(f"{prefix}{i}" for i in range(n))


def _labels(basis: Sequence[str] | None, prefix: str, n: int) -> Labels:
    if not basis:
        return default_labels(prefix, n)
    if len(basis) != n or len(set(basis)) != n:
        raise StructureError(f"need {n} distinct basis labels, got {list(basis)}")
    return tuple(basis)


def _shape(name: str, m: Matrix, shape: tuple[int, int]) -> None:
    if m.shape != shape:
        raise StructureError(f"{name} has shape {m.shape}, expected {shape}")


def _table_matrix(field: Field, nrows: int, ncols: int, table) -> Matrix:
    if isinstance(table, Matrix):
        return table
    if isinstance(table, Mapping):
        return Matrix.from_entries(field, nrows, ncols, dict(table))
    return Matrix(field, table, ncols)


def ident(field: Field, n: int) -> Matrix:
    return Matrix.identity(field, n)


# -- algebras and coalgebras ----------------------------------------------

@dataclass(frozen=True, eq=False)
class Algebra:
    field: Field
    mult: Matrix
    unit: Vector | None = None
    basis: Labels = ()

    def __post_init__(self):
        n = self.mult.nrows
        _shape("multiplication", self.mult, (n, n * n))
        object.__setattr__(self, "basis", _labels(self.basis, "e", n))
        if self.unit is not None:
            if len(self.unit) != n:
                raise StructureError(f"unit has length {len(self.unit)}, expected {n}")
            object.__setattr__(self, "unit", tuple(self.field(x) for x in self.unit))

    @classmethod
    def from_products(
        cls, field: Field, dim: int, products: Mapping[tuple[int, int, int], object], unit=None, basis=None
    ) -> Algebra:
        """``products[(i, j, k)]`` is the coefficient of ``e_k`` in ``e_i e_j``."""
        entries = {(k, i * dim + j): v for (i, j, k), v in products.items()}
        return cls(field, Matrix.from_entries(field, dim, dim * dim, entries), unit, tuple(basis or ()))

    @property
    def dim(self) -> int:
        return self.mult.nrows

    def unit_map(self) -> Matrix:
        if self.unit is None:
            raise StructureError("algebra has no unit")
        return Matrix.column(self.field, self.unit)

    def product(self, u: Sequence, v: Sequence) -> Vector:
        return self.mult.apply(_kron_vec(self.field, u, v))

    @cached_property
    def left_mults(self) -> list[Matrix]:
        """``L_i : x -> e_i x`` for every basis element."""
        n, F = self.dim, self.field
        return [self.mult @ Matrix.column(F, _unit_vec(F, n, i)).kron(ident(F, n)) for i in range(n)]

    @cached_property
    def right_mults(self) -> list[Matrix]:
        n, F = self.dim, self.field
        return [self.mult @ ident(F, n).kron(Matrix.column(F, _unit_vec(F, n, i))) for i in range(n)]

    def is_zero_product(self) -> bool:
        return self.mult.is_zero()


@dataclass(frozen=True, eq=False)
class Coalgebra:
    field: Field
    comult: Matrix
    counit: Vector | None = None
    basis: Labels = ()

    def __post_init__(self):
        n = self.comult.ncols
        _shape("comultiplication", self.comult, (n * n, n))
        object.__setattr__(self, "basis", _labels(self.basis, "e", n))
        if self.counit is not None:
            if len(self.counit) != n:
                raise StructureError(f"counit has length {len(self.counit)}, expected {n}")
            object.__setattr__(self, "counit", tuple(self.field(x) for x in self.counit))

    @classmethod
    def from_coproducts(
        cls, field: Field, dim: int, coproducts: Mapping[tuple[int, int, int], object], counit=None, basis=None
    ) -> Coalgebra:
        """``coproducts[(k, i, j)]`` is the coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``."""
        entries = {(i * dim + j, k): v for (k, i, j), v in coproducts.items()}
        return cls(field, Matrix.from_entries(field, dim * dim, dim, entries), counit, tuple(basis or ()))

    @property
    def dim(self) -> int:
        return self.comult.ncols

    def counit_map(self) -> Matrix:
        if self.counit is None:
            raise StructureError("coalgebra has no counit")
        return Matrix.row(self.field, self.counit)

    def coproduct(self, v: Sequence) -> Vector:
        return self.comult.apply(v)

    def is_zero_coproduct(self) -> bool:
        return self.comult.is_zero()


def _unit_vec(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def _kron_vec(field: Field, u: Sequence, v: Sequence) -> Vector:
    red = field.reduce
    return tuple(red(a * b) if a and b else field.zero for a in u for b in v)


kron_vec = _kron_vec
unit_vec = _unit_vec


@dataclass(frozen=True)
class BimoduleAction:
    left: Matrix   # H (x) I -> I
    right: Matrix  # I (x) H -> I


@dataclass(frozen=True)
class BicomoduleCoaction:
    left: Matrix   # I -> H (x) I
    right: Matrix  # I -> I (x) H


# -- validators -------------------------------------------------------------

def validate_algebra(A: Algebra, prefix: str = "") -> AnalysisReport:
    F, n, m = A.field, A.dim, A.mult
    e = ident(F, n)
    L = A.basis
    conds = [compare(prefix + "algebra.associative", m @ m.kron(e), m @ e.kron(m), [L, L, L], [L])]
    if A.unit is not None:
        u = A.unit_map()
        conds.append(compare(prefix + "algebra.unit-left", m @ u.kron(e), e, [L], [L]))
        conds.append(compare(prefix + "algebra.unit-right", m @ e.kron(u), e, [L], [L]))
    return AnalysisReport(tuple(conds))


def validate_coalgebra(C: Coalgebra, prefix: str = "") -> AnalysisReport:
    F, n, d = C.field, C.dim, C.comult
    e = ident(F, n)
    L = C.basis
    conds = [compare(prefix + "coalgebra.coassociative", d.kron(e) @ d, e.kron(d) @ d, [L], [L, L, L])]
    if C.counit is not None:
        c = C.counit_map()
        conds.append(compare(prefix + "coalgebra.counit-left", c.kron(e) @ d, e, [L], [L]))
        conds.append(compare(prefix + "coalgebra.counit-right", e.kron(c) @ d, e, [L], [L]))
    return AnalysisReport(tuple(conds))


def validate_bimodule(H: Algebra, labels: Labels, action: BimoduleAction, prefix: str = "") -> AnalysisReport:
    F, h, n = H.field, H.dim, len(labels)
    lam, rho = action.left, action.right
    _shape("left action", lam, (n, h * n))
    _shape("right action", rho, (n, n * h))
    eh, ei = ident(F, h), ident(F, n)
    Hl, L = H.basis, labels
    conds = [
        compare(prefix + "bimodule.left-associative", lam @ H.mult.kron(ei), lam @ eh.kron(lam), [Hl, Hl, L], [L]),
        compare(prefix + "bimodule.right-associative", rho @ ei.kron(H.mult), rho @ rho.kron(eh), [L, Hl, Hl], [L]),
        compare(prefix + "bimodule.middle", rho @ lam.kron(eh), lam @ eh.kron(rho), [Hl, L, Hl], [L]),
    ]
    if H.unit is not None:
        u = H.unit_map()
        conds.append(compare(prefix + "bimodule.left-unital", lam @ u.kron(ei), ei, [L], [L]))
        conds.append(compare(prefix + "bimodule.right-unital", rho @ ei.kron(u), ei, [L], [L]))
    return AnalysisReport(tuple(conds))


def validate_bicomodule(H: Coalgebra, labels: Labels, coaction: BicomoduleCoaction, prefix: str = "") -> AnalysisReport:
    F, h, n = H.field, H.dim, len(labels)
    rl, rr = coaction.left, coaction.right
    _shape("left coaction", rl, (h * n, n))
    _shape("right coaction", rr, (n * h, n))
    eh, ei = ident(F, h), ident(F, n)
    Hl, L = H.basis, labels
    conds = [
        compare(prefix + "bicomodule.left-coassociative", H.comult.kron(ei) @ rl, eh.kron(rl) @ rl, [L], [Hl, Hl, L]),
        compare(prefix + "bicomodule.right-coassociative", rr.kron(eh) @ rr, ei.kron(H.comult) @ rr, [L], [L, Hl, Hl]),
        compare(prefix + "bicomodule.compatible", eh.kron(rr) @ rl, rl.kron(eh) @ rr, [L], [Hl, L, Hl]),
    ]
    if H.counit is not None:
        c = H.counit_map()
        conds.append(compare(prefix + "bicomodule.left-counital", c.kron(ei) @ rl, ei, [L], [L]))
        conds.append(compare(prefix + "bicomodule.right-counital", ei.kron(c) @ rr, ei, [L], [L]))
    return AnalysisReport(tuple(conds))


# -- Dorroh pairs -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DorrohPairAlgebras:
    """A base algebra, a second algebra, and a bimodule action of the first on the second."""

    base: Algebra
    ideal: Algebra
    action: BimoduleAction

    def __post_init__(self):
        if self.base.field != self.ideal.field:
            raise StructureError("base and ideal live over different fields")
        h, n = self.base.dim, self.ideal.dim
        _shape("left action", self.action.left, (n, h * n))
        _shape("right action", self.action.right, (n, n * h))

    @property
    def field(self) -> Field:
        return self.base.field

    def validate(self) -> AnalysisReport:
        H, I = self.base, self.ideal
        F, h, n = self.field, H.dim, I.dim
        lam, rho, mu = self.action.left, self.action.right, I.mult
        eh, ei = ident(F, h), ident(F, n)
        Hl, L = H.basis, I.basis
        compat = [
            compare("pair-alg.left-compatible", lam @ eh.kron(mu), mu @ lam.kron(ei), [Hl, L, L], [L]),
            compare("pair-alg.middle-compatible", mu @ rho.kron(ei), mu @ ei.kron(lam), [L, Hl, L], [L]),
            compare("pair-alg.right-compatible", rho @ mu.kron(eh), mu @ ei.kron(rho), [L, L, Hl], [L]),
        ]
        return report(
            validate_algebra(H, "base."),
            validate_algebra(AlgebraView(I), "ideal."),
            validate_bimodule(H, L, self.action),
            *compat,
        )


def AlgebraView(A: Algebra) -> Algebra:
    """The ideal side is never required to be unital."""
    return Algebra(A.field, A.mult, None, A.basis)


def CoalgebraView(C: Coalgebra) -> Coalgebra:
    return Coalgebra(C.field, C.comult, None, C.basis)


@dataclass(frozen=True, eq=False)
class DorrohPairCoalgebras:
    """A base coalgebra, a second coalgebra, and a bicomodule coaction of the first on the second."""

    base: Coalgebra
    carried: Coalgebra
    coaction: BicomoduleCoaction

    def __post_init__(self):
        if self.base.field != self.carried.field:
            raise StructureError("base and carried coalgebra live over different fields")
        h, n = self.base.dim, self.carried.dim
        _shape("left coaction", self.coaction.left, (h * n, n))
        _shape("right coaction", self.coaction.right, (n * h, n))

    @property
    def field(self) -> Field:
        return self.base.field

    def validate(self) -> AnalysisReport:
        C, P = self.base, self.carried
        F, h, n = self.field, C.dim, P.dim
        rl, rr, d = self.coaction.left, self.coaction.right, P.comult
        eh, ei = ident(F, h), ident(F, n)
        Cl, L = C.basis, P.basis
        compat = [
            compare("pair-coalg.right-compatible", ei.kron(rr) @ d, d.kron(eh) @ rr, [L], [L, L, Cl]),
            compare("pair-coalg.left-compatible", rl.kron(ei) @ d, eh.kron(d) @ rl, [L], [Cl, L, L]),
            compare("pair-coalg.middle-compatible", rr.kron(ei) @ d, ei.kron(rl) @ d, [L], [L, Cl, L]),
        ]
        return report(
            validate_coalgebra(C, "base."),
            validate_coalgebra(CoalgebraView(P), "carried."),
            validate_bicomodule(C, L, self.coaction),
            *compat,
        )


@dataclass(frozen=True, eq=False)
class DorrohPair:
    """Algebra and coalgebra data on the same pair of spaces, plus an optional base antipode."""

    algebras: DorrohPairAlgebras
    coalgebras: DorrohPairCoalgebras
    antipode: Matrix | None = None

    def __post_init__(self):
        a, c = self.algebras, self.coalgebras
        if a.field != c.field:
            raise StructureError("algebra and coalgebra data live over different fields")
        if a.base.dim != c.base.dim or a.ideal.dim != c.carried.dim:
            raise StructureError("algebra and coalgebra data have different dimensions")
        if a.base.basis != c.base.basis or a.ideal.basis != c.carried.basis:
            raise StructureError("algebra and coalgebra data use different basis labels")
        if self.antipode is not None:
            _shape("base antipode", self.antipode, (a.base.dim, a.base.dim))

    @property
    def field(self) -> Field:
        return self.algebras.field

    @property
    def h(self) -> int:
        return self.algebras.base.dim

    @property
    def n(self) -> int:
        return self.algebras.ideal.dim

    @property
    def base_labels(self) -> Labels:
        return self.algebras.base.basis

    @property
    def ideal_labels(self) -> Labels:
        return self.algebras.ideal.basis

    @property
    def base_bialgebra(self) -> Bialgebra:
        return Bialgebra(self.algebras.base, self.coalgebras.base, self.antipode)

    def validate(self) -> AnalysisReport:
        return self.algebras.validate() + self.coalgebras.validate()


@dataclass(frozen=True, eq=False)
class Bialgebra:
    """One space with algebra, coalgebra and optional antipode data."""

    algebra: Algebra
    coalgebra: Coalgebra
    antipode: Matrix | None = None

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim or self.algebra.field != self.coalgebra.field:
            raise StructureError("algebra and coalgebra parts do not match")
        if self.algebra.basis != self.coalgebra.basis:
            raise StructureError("algebra and coalgebra parts use different basis labels")
        if self.antipode is not None:
            _shape("antipode", self.antipode, (self.dim, self.dim))

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis(self) -> Labels:
        return self.algebra.basis

    def validate(self, prefix: str = "") -> AnalysisReport:
        A, C = self.algebra, self.coalgebra
        F, n = self.field, self.dim
        L = A.basis
        mu, d = A.mult, C.comult
        sw = ident(F, n).kron(twist(F, n, n)).kron(ident(F, n))
        out = [
            validate_algebra(A, prefix),
            validate_coalgebra(C, prefix),
            compare(prefix + "bialgebra.comult-multiplicative", d @ mu, mu.kron(mu) @ sw @ d.kron(d), [L, L], [L, L]),
        ]
        if A.unit is not None:
            u = A.unit_map()
            out.append(compare(prefix + "bialgebra.comult-unit", d @ u, u.kron(u), [], [L, L]))
        if C.counit is not None:
            e = C.counit_map()
            out.append(compare(prefix + "bialgebra.counit-multiplicative", e @ mu, e.kron(e), [L, L], []))
            if A.unit is not None:
                out.append(compare(prefix + "bialgebra.counit-unit", e @ A.unit_map(), ident(F, 1), [], []))
        if self.antipode is not None:
            out.append(antipode_conditions(self, self.antipode, prefix))
        return report(*out)


def antipode_conditions(B: Bialgebra, S: Matrix, prefix: str = "") -> AnalysisReport:
    """Convolution-inverse identities ``mu (S (x) 1) Delta = u eps = mu (1 (x) S) Delta``."""
    F, n = B.field, B.dim
    L = B.basis
    e = ident(F, n)
    mu, d = B.algebra.mult, B.coalgebra.comult
    ue = B.algebra.unit_map() @ B.coalgebra.counit_map()
    return report(
        compare(prefix + "antipode.left", mu @ S.kron(e) @ d, ue, [L], [L]),
        compare(prefix + "antipode.right", mu @ e.kron(S) @ d, ue, [L], [L]),
    )


# -- ground field and standard constructions ----------------------------------

def ground_algebra(field: Field, label: str = "one") -> Algebra:
    return Algebra(field, Matrix(field, [[1]]), (1,), (label,))


def ground_coalgebra(field: Field, label: str = "one") -> Coalgebra:
    return Coalgebra(field, Matrix(field, [[1]]), (1,), (label,))


def ground_hopf(field: Field, label: str = "one") -> Bialgebra:
    return Bialgebra(ground_algebra(field, label), ground_coalgebra(field, label), Matrix(field, [[1]]))


def zero_algebra(field: Field, labels: Labels) -> Algebra:
    n = len(labels)
    return Algebra(field, Matrix.zeros(field, n, n * n), None, labels)


def zero_coalgebra(field: Field, labels: Labels) -> Coalgebra:
    n = len(labels)
    return Coalgebra(field, Matrix.zeros(field, n * n, n), None, labels)


def scalar_action(H: Algebra, n: int) -> BimoduleAction:
    """Both actions of the unit of a one-dimensional unital algebra are the identity."""
    if H.dim != 1 or H.unit is None or H.unit[0] == 0:
        raise StructureError("scalar action needs a one-dimensional unital base")
    F = H.field
    c = F.inv(H.unit[0])  # e = c * 1, so e . x = c x
    m = ident(F, n).scale(c)
    return BimoduleAction(m, m)


def scalar_coaction(H: Coalgebra, n: int) -> BicomoduleCoaction:
    """``x -> e (x) x / eps(e)`` on both sides, the only counital choice."""
    if H.dim != 1 or H.counit is None or H.counit[0] == 0:
        raise StructureError("scalar coaction needs a one-dimensional counital base")
    F = H.field
    m = ident(F, n).scale(F.inv(H.counit[0]))
    return BicomoduleCoaction(m, m)


def unitization(I: Algebra, field_label: str = "one") -> DorrohPairAlgebras:
    k = ground_algebra(I.field, field_label)
    return DorrohPairAlgebras(k, AlgebraView(I), scalar_action(k, I.dim))


def counitization(P: Coalgebra, field_label: str = "one") -> DorrohPairCoalgebras:
    k = ground_coalgebra(P.field, field_label)
    return DorrohPairCoalgebras(k, CoalgebraView(P), scalar_coaction(k, P.dim))


def trivial_extension(A: Algebra, labels: Labels, action: BimoduleAction) -> DorrohPairAlgebras:
    """The pair ``(A, M)`` with zero product on the bimodule ``M``."""
    return DorrohPairAlgebras(A, zero_algebra(A.field, tuple(labels)), action)


def trivial_coextension(C: Coalgebra, labels: Labels, coaction: BicomoduleCoaction) -> DorrohPairCoalgebras:
    return DorrohPairCoalgebras(C, zero_coalgebra(C.field, tuple(labels)), coaction)


def scalar_pair(I_alg: Algebra, I_coalg: Coalgebra, field_label: str = "one") -> DorrohPair:
    """Pair over the ground Hopf algebra with scalar (co)actions."""
    H = ground_hopf(I_alg.field, field_label)
    n = I_alg.dim
    return DorrohPair(
        DorrohPairAlgebras(H.algebra, AlgebraView(I_alg), scalar_action(H.algebra, n)),
        DorrohPairCoalgebras(H.coalgebra, CoalgebraView(I_coalg), scalar_coaction(H.coalgebra, n)),
        H.antipode,
    )


def dual_pair(pair: DorrohPairCoalgebras) -> DorrohPairAlgebras:
    """Transpose every structure map: a coalgebra pair becomes an algebra pair on the dual spaces."""
    C, P = pair.base, pair.carried
    dual = lambda lbls: tuple(f"{x}*" for x in lbls)  # noqa: E731
    base = Algebra(C.field, C.comult.T, C.counit, dual(C.basis))
    ideal = Algebra(P.field, P.comult.T, None, dual(P.basis))
    return DorrohPairAlgebras(base, ideal, BimoduleAction(pair.coaction.left.T, pair.coaction.right.T))


def require_valid(rep: AnalysisReport, what: str) -> AnalysisReport:
    if not rep.passed:
        failed = ", ".join(c.id for c in rep.failures())
        raise InvalidStructure(f"{what} fails: {failed}", rep)
    return rep


def single(cid: str, ok: bool, detail: str = "", **witness) -> Condition:
    return Condition(cid, ok, detail, () if ok or not witness else (witness,))
