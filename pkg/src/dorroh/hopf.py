"""When a Dorroh extension is a bialgebra or Hopf algebra, and the split theorems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dorroh import DorrohExtension, Split, block_antipode, extend, split_bialgebra_extension, total_swap
from .fields import Field
from .linalg import Matrix, Subspace, Vector, solve_linear, twist
from .report import AnalysisReport, Condition, ConsistencyError, compare, render_vector, report
from .structures import (
    Bialgebra,
    BicomoduleCoaction,
    BimoduleAction,
    DorrohPair,
    DorrohPairAlgebras,
    DorrohPairCoalgebras,
    antipode_conditions,
    ident,
    require_valid,
    validate_bicomodule,
    validate_bimodule,
    zero_algebra,
    zero_coalgebra,
)


class BialgebraConditionsUnmet(ValueError):
    def __init__(self, message: str, report: AnalysisReport):
        super().__init__(message)
        self.report = report


class InvalidAntipode(ValueError):
    pass


class GradingError(ValueError):
    def __init__(self, message: str, witnesses: list[str]):
        super().__init__(message)
        self.witnesses = witnesses


# condition ids of the bialgebra criterion, in the order they are evaluated
BIALGEBRA_CONDITIONS = (
    "bialg.base-multiplicative",
    "bialg.comult-left-linear",
    "bialg.comult-right-linear",
    "bialg.left-coaction-left-linear",
    "bialg.left-coaction-right-linear",
    "bialg.right-coaction-left-linear",
    "bialg.right-coaction-right-linear",
    "bialg.left-coaction-multiplicative",
    "bialg.right-coaction-multiplicative",
    "bialg.comult-product-compatible",
)

DESCRIPTIONS = {
    "bialg.base-multiplicative": "comultiplication of the base is multiplicative",
    "bialg.comult-left-linear": "comultiplication of I is a left module map",
    "bialg.comult-right-linear": "comultiplication of I is a right module map",
    "bialg.left-coaction-left-linear": "left coaction commutes with the left action",
    "bialg.left-coaction-right-linear": "left coaction commutes with the right action",
    "bialg.right-coaction-left-linear": "right coaction commutes with the left action",
    "bialg.right-coaction-right-linear": "right coaction commutes with the right action",
    "bialg.left-coaction-multiplicative": "left coaction is multiplicative on I",
    "bialg.right-coaction-multiplicative": "right coaction is multiplicative on I",
    "bialg.comult-product-compatible": "comultiplication of a product in I expands into seven terms",
    "bialg.direct": "comultiplication of the extension is multiplicative (direct check)",
}


@dataclass(frozen=True)
class BialgebraConditionReport:
    equations: AnalysisReport
    direct_oracle: Condition
    unit_counit: AnalysisReport

    @property
    def conditions_hold(self) -> bool:
        return self.equations.passed

    @property
    def is_bialgebra(self) -> bool:
        return self.direct_oracle.passed and self.unit_counit.passed

    @property
    def report(self) -> AnalysisReport:
        return report(self.equations, self.direct_oracle, self.unit_counit)


def _structure_maps(pair: DorrohPair):
    a, c = pair.algebras, pair.coalgebras
    return (
        a.base.mult, a.ideal.mult, a.action.left, a.action.right,
        c.base.comult, c.carried.comult, c.coaction.left, c.coaction.right,
    )


def bialgebra_equations(pair: DorrohPair) -> AnalysisReport:
    """Every compatibility equation between the two pair structures, as a map identity."""
    F, h, n = pair.field, pair.h, pair.n
    muH, muI, lam, rho, dH, dI, rl, rr = _structure_maps(pair)
    H, I = pair.base_labels, pair.ideal_labels
    sw = lambda a, b, c, d: total_swap(F, a, b, c, d)  # noqa: E731

    t1 = lam.kron(rho) @ sw(h, n, n, h) @ rl.kron(rr)
    t2 = lam.kron(muI) @ sw(h, n, n, n) @ rl.kron(dI)
    t3 = rho.kron(lam) @ sw(n, h, h, n) @ rr.kron(rl)
    t4 = muI.kron(lam) @ sw(n, h, n, n) @ rr.kron(dI)
    t5 = rho.kron(muI) @ sw(n, n, h, n) @ dI.kron(rl)
    t6 = muI.kron(rho) @ sw(n, n, n, h) @ dI.kron(rr)
    t7 = muI.kron(muI) @ sw(n, n, n, n) @ dI.kron(dI)
    seven = t1 + t2 + t3 + t4 + t5 + t6 + t7

    return AnalysisReport((
        compare(BIALGEBRA_CONDITIONS[0], dH @ muH, muH.kron(muH) @ sw(h, h, h, h) @ dH.kron(dH), [H, H], [H, H]),
        compare(BIALGEBRA_CONDITIONS[1], dI @ lam, lam.kron(lam) @ sw(h, h, n, n) @ dH.kron(dI), [H, I], [I, I]),
        compare(BIALGEBRA_CONDITIONS[2], dI @ rho, rho.kron(rho) @ sw(n, n, h, h) @ dI.kron(dH), [I, H], [I, I]),
        compare(BIALGEBRA_CONDITIONS[3], rl @ lam, muH.kron(lam) @ sw(h, h, h, n) @ dH.kron(rl), [H, I], [H, I]),
        compare(BIALGEBRA_CONDITIONS[4], rl @ rho, muH.kron(rho) @ sw(h, n, h, h) @ rl.kron(dH), [I, H], [H, I]),
        compare(BIALGEBRA_CONDITIONS[5], rr @ lam, lam.kron(muH) @ sw(h, h, n, h) @ dH.kron(rr), [H, I], [I, H]),
        compare(BIALGEBRA_CONDITIONS[6], rr @ rho, rho.kron(muH) @ sw(n, h, h, h) @ rr.kron(dH), [I, H], [I, H]),
        compare(BIALGEBRA_CONDITIONS[7], rl @ muI, muH.kron(muI) @ sw(h, n, h, n) @ rl.kron(rl), [I, I], [H, I]),
        compare(BIALGEBRA_CONDITIONS[8], rr @ muI, muI.kron(muH) @ sw(n, h, n, h) @ rr.kron(rr), [I, I], [I, H]),
        compare(BIALGEBRA_CONDITIONS[9], dI @ muI, seven, [I, I], [I, I]),
    ))


def direct_bialgebra_check(ext: DorrohExtension) -> Condition:
    F, t = ext.field, ext.dim
    mu, d = ext.algebra.mult, ext.coalgebra.comult
    T = ext.labels
    return compare("bialg.direct", d @ mu, mu.kron(mu) @ total_swap(F, t, t, t, t) @ d.kron(d), [T, T], [T, T])


def _unit_counit(ext: DorrohExtension) -> AnalysisReport:
    """The unit/counit axioms of the extension (they only involve the base)."""
    A, C = ext.algebra, ext.coalgebra
    F = ext.field
    T = ext.labels
    out = []
    if A.unit is not None:
        u = A.unit_map()
        out.append(compare("bialg.comult-unit", C.comult @ u, u.kron(u), [], [T, T]))
    if C.counit is not None:
        e = C.counit_map()
        out.append(compare("bialg.counit-multiplicative", e @ A.mult, e.kron(e), [T, T], []))
        if A.unit is not None:
            out.append(compare("bialg.counit-unit", e @ A.unit_map(), ident(F, 1), [], []))
    return AnalysisReport(tuple(out))


def check_bialgebra_conditions(pair: DorrohPair) -> BialgebraConditionReport:
    """Decide whether ``H (+) I`` is a bialgebra, by the pair equations and directly.

    The two routes must agree; a disagreement raises :class:`ConsistencyError`.
    """
    ext = extend(pair)
    eqs = bialgebra_equations(pair)
    direct = direct_bialgebra_check(ext)
    if eqs.passed != direct.passed:
        raise ConsistencyError(f"pair equations say {eqs.passed}, direct check says {direct.passed}")
    return BialgebraConditionReport(eqs, direct, _unit_counit(ext))


# -- antipode -----------------------------------------------------------------

@dataclass(frozen=True)
class AntipodeSolution:
    exists: bool
    antipode: Matrix | None           # S_I
    solution_space_dim: int           # dimension of the homogeneous solutions
    report: AnalysisReport            # verification on the total space, empty if none exists


def antipode_system(pair: DorrohPair, S_h: Matrix) -> tuple[Matrix, Vector]:
    """Linear system ``M s = b`` whose solutions ``s`` (row-major ``S_I``) are the antipodes of ``I``.

    The rows stack the two convolution equations restricted to ``I``.
    """
    F, n = pair.field, pair.n
    _, muI, lam, rho, _, dI, rl, rr = _structure_maps(pair)
    ei = ident(F, n)

    def left(S: Matrix) -> Matrix:
        return rho @ S.kron(ident(F, pair.h)) @ rr + muI @ S.kron(ei) @ dI

    def right(S: Matrix) -> Matrix:
        return lam @ ident(F, pair.h).kron(S) @ rl + muI @ ei.kron(S) @ dI

    const_l = lam @ S_h.kron(ei) @ rl
    const_r = rho @ ei.kron(S_h) @ rr
    cols = []
    for r in range(n):
        for c in range(n):
            E = Matrix.from_entries(F, n, n, {(r, c): 1})
            cols.append(_flat(left(E)) + _flat(right(E)))
    rhs = tuple(F.reduce(-x) for x in _flat(const_l) + _flat(const_r))
    return Matrix.from_columns(F, cols, 2 * n * n), rhs


def _flat(m: Matrix) -> tuple:
    return tuple(x for r in m.rows for x in r)


def _unflat(field: Field, v: Sequence, n: int) -> Matrix:
    return Matrix._trusted(field, [tuple(v[r * n : (r + 1) * n]) for r in range(n)], n)


def _require_hopf_base(pair: DorrohPair, S_h: Matrix | None) -> Matrix:
    S_h = S_h if S_h is not None else pair.antipode
    if S_h is None:
        raise InvalidAntipode("no antipode given for the base")
    if S_h.shape != (pair.h, pair.h):
        raise InvalidAntipode(f"base antipode has shape {S_h.shape}")
    rep = antipode_conditions(pair.base_bialgebra, S_h)
    if not rep.passed:
        raise InvalidAntipode("the given map is not an antipode of the base: " + ", ".join(rep.ids))
    return S_h


def solve_antipode(pair: DorrohPair, S_h: Matrix | None = None) -> AntipodeSolution:
    """Solve the linear equations for ``S_I``; verify any solution on the whole extension."""
    bc = check_bialgebra_conditions(pair)
    if not bc.is_bialgebra:
        raise BialgebraConditionsUnmet("the extension is not a bialgebra", bc.report)
    S_h = _require_hopf_base(pair, S_h)
    F, n = pair.field, pair.n
    M, b = antipode_system(pair, S_h)
    x, kernel = solve_linear(M, b)
    if x is None:
        return AntipodeSolution(False, None, kernel.dim, AnalysisReport())
    S_i = _unflat(F, x, n)
    ext = extend(pair)
    total = block_antipode(S_h, S_i)
    rep = antipode_conditions(ext.bialgebra, total) + verify_antipode_identities(pair, S_h, S_i)
    return AntipodeSolution(True, S_i, kernel.dim, rep)


def antipode_exists_by_convolution(pair: DorrohPair, S_h: Matrix | None = None) -> bool:
    """Independent route: solve the convolution identities on ``H (+) I`` for the ``I`` block."""
    S_h = _require_hopf_base(pair, S_h)
    ext = extend(pair)
    F, n, t = pair.field, pair.n, ext.dim
    mu, d = ext.algebra.mult, ext.coalgebra.comult
    ue = ext.algebra.unit_map() @ ext.coalgebra.counit_map()
    e = ident(F, t)

    def residual(S_i: Matrix) -> tuple:
        S = block_antipode(S_h, S_i)
        return _flat(mu @ S.kron(e) @ d - ue) + _flat(mu @ e.kron(S) @ d - ue)

    base = residual(Matrix.zeros(F, n, n))
    cols = []
    for r in range(n):
        for c in range(n):
            E = Matrix.from_entries(F, n, n, {(r, c): 1})
            cols.append(tuple(F.reduce(a - b) for a, b in zip(residual(E), base)))
    M = Matrix.from_columns(F, cols, len(base))
    x, _ = solve_linear(M, tuple(F.reduce(-v) for v in base))
    return x is not None


def verify_antipode_identities(pair: DorrohPair, S_h: Matrix, S_i: Matrix) -> AnalysisReport:
    """``S_I`` reverses the action, product, coaction and coproduct structure."""
    F, h, n = pair.field, pair.h, pair.n
    _, muI, lam, rho, _, dI, rl, rr = _structure_maps(pair)
    H, I = pair.base_labels, pair.ideal_labels
    return AnalysisReport((
        compare("antipode.reverses-left-action", S_i @ lam, rho @ S_i.kron(S_h) @ twist(F, h, n), [H, I], [I]),
        compare("antipode.reverses-right-action", S_i @ rho, lam @ S_h.kron(S_i) @ twist(F, n, h), [I, H], [I]),
        compare("antipode.reverses-product", S_i @ muI, muI @ S_i.kron(S_i) @ twist(F, n, n), [I, I], [I]),
        compare("antipode.reverses-left-coaction", rr @ S_i, S_i.kron(S_h) @ twist(F, h, n) @ rl, [I], [I, H]),
        compare("antipode.reverses-right-coaction", rl @ S_i, S_h.kron(S_i) @ twist(F, n, h) @ rr, [I], [H, I]),
        compare("antipode.reverses-coproduct", dI @ S_i, S_i.kron(S_i) @ twist(F, n, n) @ dI, [I], [I, I]),
    ))


# -- coinvariants and the projection onto them ---------------------------------

def coinvariants(pair: DorrohPair) -> Subspace:
    """``{x in I : rho_r(x) = x (x) 1}``."""
    F, n = pair.field, pair.n
    u = pair.algebras.base.unit_map()
    return (pair.coalgebras.coaction.right - ident(F, n).kron(u)).nullspace()


@dataclass(frozen=True)
class RadfordResult:
    projection: Matrix          # mu (1 (x) tau_H S_H pi_H) Delta on the extension
    via_projection: Subspace    # image of the projection
    via_coinvariants: Subspace  # span{unit} + coinvariants of I
    report: AnalysisReport

    @property
    def subalgebra(self) -> Subspace:
        return self.via_projection


def radford_subalgebra(pair: DorrohPair, S_h: Matrix | None = None) -> RadfordResult:
    """Compute the subalgebra ``B`` twice and check ``dim B * dim H = dim (H (+) I)``."""
    S_h = _require_hopf_base(pair, S_h)
    ext = extend(pair)
    F, h, t = pair.field, pair.h, ext.dim
    tau_h, tau_i, pi_h, _ = ext.maps
    mu, d = ext.algebra.mult, ext.coalgebra.comult
    Pi = mu @ ident(F, t).kron(tau_h @ S_h @ pi_h) @ d
    via_pi = Pi.column_space()
    unit = ext.algebra.unit
    via_co = Subspace(F, t, [unit]) + ext.embed_ideal_subspace(coinvariants(pair))
    closed = all(ext.algebra.product(a, b) in via_pi for a in via_pi.basis for b in via_pi.basis)
    rep = AnalysisReport((
        Condition("radford.routes-agree", via_pi == via_co, f"dims {via_pi.dim} and {via_co.dim}"),
        Condition("radford.closed-under-product", closed),
        Condition("radford.contains-unit", unit in via_pi),
        Condition("radford.dimension", via_pi.dim * h == t, f"{via_pi.dim} * {h} vs {t}"),
        compare("radford.idempotent", Pi @ Pi, Pi, [ext.labels], [ext.labels]),
    ))
    return RadfordResult(Pi, via_pi, via_co, rep)


# -- grouplike elements, trivial extensions -------------------------------------

def grouplike_elements(ext: DorrohExtension, candidates: Sequence[Sequence] = ()) -> list[Vector]:
    """Elements ``(1, x)`` with ``Delta(1, x) = (1, x) (x) (1, x)``.

    Needs a one-dimensional base coalgebra.  Over a finite field every ``x`` is
    tried; otherwise ``x = 0`` and the given candidates.
    """
    if ext.h != 1 or ext.coalgebra is None:
        raise ValueError("grouplike search needs a coalgebra extension of a one-dimensional base")
    F, n = ext.field, ext.n
    base = ext.coalgebras.base
    one = F.inv(base.counit[0]) if base.counit is not None else F.one
    pool = F.vectors(n) if F.is_finite() else [(F.zero,) * n, *candidates]
    out = []
    for x in pool:
        v = (one,) + tuple(F(c) for c in x)
        if ext.coalgebra.coproduct(v) == tuple(F.reduce(a * b) for a in v for b in v):
            out.append(v)
    return out


def trivial_extension_pair(H: Bialgebra, labels: Sequence[str], action: BimoduleAction, coaction: BicomoduleCoaction) -> DorrohPair:
    F = H.field
    M = tuple(labels)
    return DorrohPair(
        DorrohPairAlgebras(H.algebra, zero_algebra(F, M), action),
        DorrohPairCoalgebras(H.coalgebra, zero_coalgebra(F, M), coaction),
        H.antipode,
    )


def zt_map(pair: DorrohPair) -> Matrix:
    """``M (x) M -> M (x) M``: the two cross terms of the seven-term expansion."""
    F, h, n = pair.field, pair.h, pair.n
    _, _, lam, rho, _, _, rl, rr = _structure_maps(pair)
    return (
        lam.kron(rho) @ total_swap(F, h, n, n, h) @ rl.kron(rr)
        + rho.kron(lam) @ total_swap(F, n, h, h, n) @ rr.kron(rl)
    )


def check_trivial_ext_bialgebra(
    H: Bialgebra, labels: Sequence[str], action: BimoduleAction, coaction: BicomoduleCoaction
) -> AnalysisReport:
    """``H (+) M`` with zero product and coproduct on ``M``: Hopf-bimodule conditions plus ``ZT = 0``.

    Cross-checked against the direct multiplicativity test when the data form a pair.
    """
    pair = trivial_extension_pair(H, labels, action, coaction)
    F, n = H.field, len(labels)
    M = tuple(labels)
    eqs = bialgebra_equations(pair)
    conds = [
        H.validate("base."),
        validate_bimodule(H.algebra, M, action),
        validate_bicomodule(H.coalgebra, M, coaction),
        *(eqs[cid] for cid in BIALGEBRA_CONDITIONS[:7]),
        compare("trivext.zt-vanishes", zt_map(pair), Matrix.zeros(F, n * n, n * n), [M, M], [M, M]),
    ]
    rep = report(*conds)
    structural = report(*conds[:3])
    if structural.passed:
        direct = direct_bialgebra_check(extend(pair))
        if direct.passed != rep.passed:
            raise ConsistencyError(f"trivial-extension criterion says {rep.passed}, direct check says {direct.passed}")
        rep = rep + AnalysisReport((direct,))
    return rep


# -- graded split ------------------------------------------------------------------

@dataclass(frozen=True)
class GradedSplit:
    split: Split
    solution: AntipodeSolution
    antipode_matches: bool


def grading_violations(A: Bialgebra, degree: Sequence[int]) -> list[str]:
    n = A.dim
    names = A.basis
    deg = list(degree)
    if len(deg) != n or any(d < 0 for d in deg):
        return [f"need {n} non-negative degrees, got {deg}"]
    bad = []
    mu, d = A.algebra.mult, A.coalgebra.comult
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mu[k, i * n + j] != 0 and deg[k] != deg[i] + deg[j]:
                    bad.append(f"{names[i]}·{names[j]} has a component on {names[k]} of degree {deg[k]}")
                if d[i * n + j, k] != 0 and deg[i] + deg[j] != deg[k]:
                    bad.append(f"coproduct of {names[k]} has a component on {names[i]}⊗{names[j]}")
    for k in range(n):
        if A.algebra.unit is not None and A.algebra.unit[k] != 0 and deg[k] != 0:
            bad.append(f"unit has a component on {names[k]} of degree {deg[k]}")
        if A.coalgebra.counit is not None and A.coalgebra.counit[k] != 0 and deg[k] != 0:
            bad.append(f"counit is nonzero on {names[k]} of degree {deg[k]}")
    if A.antipode is not None:
        for i in range(n):
            for j in range(n):
                if A.antipode[j, i] != 0 and deg[i] != deg[j]:
                    bad.append(f"antipode of {names[i]} has a component on {names[j]}")
    return bad


def split_graded_hopf(A: Bialgebra, degree: Sequence[int]) -> GradedSplit:
    """Split a graded Hopf algebra as degree zero (+) positive degrees and re-derive ``S_I``."""
    if A.antipode is None:
        raise InvalidAntipode("graded split needs an antipode")
    require_valid(A.validate(), "Hopf algebra")
    bad = grading_violations(A, degree)
    if bad:
        raise GradingError(f"not a grading: {bad[0]}", bad)
    F, n = A.field, A.dim
    unit = lambda i: tuple(F.one if j == i else F.zero for j in range(n))  # noqa: E731
    hv = [unit(i) for i in range(n) if degree[i] == 0]
    iv = [unit(i) for i in range(n) if degree[i] > 0]
    split = split_bialgebra_extension(A, hv, iv)
    sol = solve_antipode(split.pair)
    matches = sol.exists and split.antipode_ideal is not None and sol.antipode == split.antipode_ideal
    return GradedSplit(split, sol, matches)


def render(field: Field, v: Sequence, labels) -> str:
    return render_vector(field, v, [labels])
