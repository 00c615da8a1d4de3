"""Subcoalgebras of a Dorroh extension ``C (+) P`` of coalgebras.

A subspace ``T`` is described by

* ``D``, ``Q``: the projections of ``T`` to ``C`` and to ``P``;
* ``E``, ``R``: the parts of ``T`` lying inside ``C`` and inside ``P``;
* ``eta : D -> Q/R`` with ``eta(c) = p + R`` whenever ``(c, p)`` is in ``T``.

Closure conditions are tested as memberships in tensor subspaces of the
ambient space: a map into ``Q/R`` is replaced by a lift ``C -> P`` and
"equal modulo R" becomes "the difference lies in ``R (x) Q``" and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .dorroh import DorrohExtension, extend_algebra, extend_coalgebra
from .fields import Field
from .linalg import DEFAULT_BUDGET, Matrix, Quotient, Subspace, Vector, enumerate_subspaces, solve_linear
from .report import AnalysisReport, Condition, ConsistencyError, render_vector
from .structures import Coalgebra, DorrohPairCoalgebras, counitization, dual_pair


class NotASubcoalgebra(ValueError):
    pass


class NotTrivialCoextension(ValueError):
    pass


def _sub(field: Field, u: Sequence, v: Sequence) -> Vector:
    return tuple(field.reduce(a - b) for a, b in zip(u, v))


def _wit(**kw) -> dict:
    return {k: str(v) for k, v in kw.items()}


def _cond(cid: str, failures: list[dict], detail: str = "") -> Condition:
    return Condition(cid, not failures, detail, tuple(failures))


def _extension_map(field: Field, n: int, dom: Sequence[Vector], images: Sequence[Vector], target_dim: int) -> Matrix:
    """Linear map on ``field ** n`` sending ``dom[i]`` to ``images[i]`` and a complement of their span to 0."""
    comp = Subspace(field, n, dom).complement_basis()
    basis = Matrix.from_columns(field, list(dom) + comp, n)
    cols = list(images) + [(field.zero,) * target_dim] * len(comp)
    return Matrix.from_columns(field, cols, target_dim) @ basis.inverse()


@dataclass(frozen=True, eq=False)
class SubcoalgebraDecomposition:
    T: Subspace
    D: Subspace
    E: Subspace
    Q: Subspace
    R: Subspace
    eta: Matrix            # dim(Q/R) x dim D, in the basis of D and the representatives of Q/R
    D_mod_E: Quotient
    Q_mod_R: Quotient

    @property
    def eta_bar(self) -> Matrix:
        """``D/E -> Q/R`` on the representatives of ``D/E``."""
        cols = [self.eta.apply(self.D.coords(r)) for r in self.D_mod_E.reps]
        return Matrix.from_columns(self.D.field, cols, self.Q_mod_R.dim)

    def eta_rep(self, c: Sequence) -> Vector:
        """A representative in ``P`` of ``eta(c)``."""
        return self.Q_mod_R.lift(self.eta.apply(self.D.coords(c)))

    def eta_lift(self) -> Matrix:
        """``C -> P``: ``eta_rep`` on ``D``, zero on the standard complement of ``D``."""
        F = self.D.field
        return _extension_map(F, self.D.ambient_dim, self.D.basis, [self.eta_rep(c) for c in self.D.basis], self.Q.ambient_dim)

    def eta_bar_lift(self) -> Matrix:
        """The same lift assembled from ``eta_bar``: ``E`` goes to 0, the ``D/E`` representatives to lifts."""
        F = self.D.field
        pb = self.eta_bar
        dom = list(self.E.basis) + list(self.D_mod_E.reps)
        imgs = [(F.zero,) * self.Q.ambient_dim] * self.E.dim
        imgs += [self.Q_mod_R.lift(pb.col(i)) for i in range(self.D_mod_E.dim)]
        return _extension_map(F, self.D.ambient_dim, dom, imgs, self.Q.ambient_dim)

    def reconstruct(self) -> Subspace:
        F = self.D.field
        h, n = self.D.ambient_dim, self.Q.ambient_dim
        vecs = [tuple(c) + tuple(self.eta_rep(c)) for c in self.D.basis]
        vecs += [(F.zero,) * h + tuple(r) for r in self.R.basis]
        return Subspace(F, h + n, vecs)


def decompose_subcoalgebra(ext: DorrohExtension, T: Subspace) -> SubcoalgebraDecomposition:
    """Read off ``(D, E, Q, R, eta)`` from any subspace of the extension."""
    F, h, n = ext.field, ext.h, ext.n
    if T.ambient_dim != h + n:
        raise ValueError(f"subspace lives in dimension {T.ambient_dim}, extension has {h + n}")
    D = Subspace(F, h, [ext.base_part(v) for v in T.basis])
    Q = Subspace(F, n, [ext.ideal_part(v) for v in T.basis])
    E = Subspace(F, h, [ext.base_part(v) for v in (T & ext.embed_base_subspace(Subspace.full(F, h))).basis])
    R = Subspace(F, n, [ext.ideal_part(v) for v in (T & ext.embed_ideal_subspace(Subspace.full(F, n))).basis])
    de, qr = Quotient(D, E), Quotient(Q, R)
    TC = Matrix.from_columns(F, [ext.base_part(v) for v in T.basis], h)
    cols = []
    for c in D.basis:
        coeffs, _ = solve_linear(TC, c)
        if coeffs is None:
            raise ConsistencyError("D is the projection of T but a basis vector has no preimage")
        cols.append(qr.coords(ext.ideal_part(T.combine(coeffs))))
    dec = SubcoalgebraDecomposition(T, D, E, Q, R, Matrix.from_columns(F, cols, qr.dim), de, qr)
    if dec.reconstruct() != T:
        raise ConsistencyError("decomposition does not reconstruct the subspace")
    return dec


def is_subcoalgebra(ext: DorrohExtension, T: Subspace) -> Condition:
    """Direct check: the coproduct of each basis vector of ``T`` lies in ``T (x) T``."""
    C = ext.coalgebra
    TT = T.tensor(T)
    out = []
    for t in T.basis:
        d = C.coproduct(t)
        if d not in TT:
            out.append({"element": ext.render(t), "coproduct": render_vector(ext.field, d, [ext.labels, ext.labels])})
    return Condition("subcoal.direct", not out, "", tuple(out))


# -- closure helpers -----------------------------------------------------------

def _show(C: Coalgebra, v: Sequence) -> str:
    return render_vector(C.field, v, [C.basis])


def _closed(C: Coalgebra, S: Subspace, target: Subspace, what: str) -> list[dict]:
    """Failures of ``Delta(s) in target`` for ``s`` in a basis of ``S``."""
    return [_wit(element=_show(C, s), problem=what) for s in S.basis if C.coproduct(s) not in target]


def _mapped(C: Coalgebra, m: Matrix, S: Subspace, target: Subspace, what: str) -> list[dict]:
    return [_wit(element=_show(C, s), problem=what) for s in S.basis if m.apply(s) not in target]


def _full(field: Field, n: int) -> Subspace:
    return Subspace.full(field, n)


# -- criteria ---------------------------------------------------------------------

def _eta_parts(pair: DorrohPairCoalgebras, dec: SubcoalgebraDecomposition, lift: Matrix, key: str) -> dict[str, list[dict]]:
    """The bicomodule-map and coaction/coproduct matching conditions for a lift ``C -> P`` of ``eta``."""
    F, C, P = pair.field, pair.base, pair.carried
    h, n = C.dim, P.dim
    rl, rr = pair.coaction.left, pair.coaction.right
    one_h, one_n = Matrix.identity(F, h), Matrix.identity(F, n)
    D, Q, R = dec.D, dec.Q, dec.R
    C_R, R_C = _full(F, h).tensor(R), R.tensor(_full(F, h))
    C_D, D_C = _full(F, h).tensor(D), D.tensor(_full(F, h))
    R_Q, Q_R = R.tensor(Q), Q.tensor(R)
    left_lift, right_lift = one_h.kron(lift), lift.kron(one_h)
    out: dict[str, list[dict]] = {f"{key}-bicomodule": [], f"{key}-matches-coproduct": []}
    for c in D.basis:
        p = lift.apply(c)
        dc = C.coproduct(c)
        if dc not in C_D or dc not in D_C:
            out[f"{key}-bicomodule"].append(_wit(element=_show(C, c), problem="coproduct leaves C(x)D or D(x)C"))
            continue
        if _sub(F, rl.apply(p), left_lift.apply(dc)) not in C_R:
            out[f"{key}-bicomodule"].append(_wit(element=_show(C, c), side="left", image=_show(P, p)))
        if _sub(F, rr.apply(p), right_lift.apply(dc)) not in R_C:
            out[f"{key}-bicomodule"].append(_wit(element=_show(C, c), side="right", image=_show(P, p)))
    for q in Q.basis:
        dq = P.coproduct(q)
        # sum eta(q_(-1)) (x) q_(0) = sum pi(q_1) (x) q_2, and the mirror image
        if _sub(F, lift.kron(one_n).apply(rl.apply(q)), dq) not in R_Q:
            out[f"{key}-matches-coproduct"].append(_wit(element=_show(P, q), side="left"))
        if _sub(F, one_n.kron(lift).apply(rr.apply(q)), dq) not in Q_R:
            out[f"{key}-matches-coproduct"].append(_wit(element=_show(P, q), side="right"))
    return out


def _criteria_parts(ext: DorrohExtension, dec: SubcoalgebraDecomposition) -> dict[str, list[dict]]:
    pair = ext.coalgebras
    F, C, P = ext.field, pair.base, pair.carried
    h, n = ext.h, ext.n
    rl, rr = pair.coaction.left, pair.coaction.right
    D, E, Q, R = dec.D, dec.E, dec.Q, dec.R
    Ch, Pn = _full(F, h), _full(F, n)
    out: dict[str, list[dict]] = {
        "D-subcoalgebra": _closed(C, D, D.tensor(D), "coproduct leaves D(x)D"),
        "E-subcoalgebra": _closed(C, E, E.tensor(E), "coproduct leaves E(x)E"),
        "Q-subcoalgebra": _closed(P, Q, Q.tensor(Q), "coproduct leaves Q(x)Q"),
        "Q-subbicomodule": _mapped(P, rl, Q, Ch.tensor(Q), "left coaction leaves C(x)Q")
        + _mapped(P, rr, Q, Q.tensor(Ch), "right coaction leaves Q(x)C"),
        "R-coideal-of-Q": _closed(P, R, R.tensor(Q) + Q.tensor(R), "coproduct leaves R(x)Q + Q(x)R"),
        "R-subbicomodule": _mapped(P, rl, R, Ch.tensor(R), "left coaction leaves C(x)R")
        + _mapped(P, rr, R, R.tensor(Ch), "right coaction leaves R(x)C"),
        "Q-coacted-by-D": _mapped(P, rl, Q, D.tensor(Pn), "left coaction leaves D(x)P")
        + _mapped(P, rr, Q, Pn.tensor(D), "right coaction leaves P(x)D"),
    }
    out.update(_eta_parts(pair, dec, dec.eta_lift(), "eta"))
    bar = dec.eta_bar
    out["eta-bar-bijective"] = [] if bar.is_invertible() else [_wit(shape=bar.shape, rank=bar.rank())]
    out.update(_eta_parts(pair, dec, dec.eta_bar_lift(), "eta-bar"))
    return out


def _eta_coalgebra_map(pair: DorrohPairCoalgebras, dec: SubcoalgebraDecomposition) -> Condition:
    """``Delta(eta(c)) = (eta (x) eta) Delta(c)`` modulo ``R (x) Q + Q (x) R``."""
    F, C, P = pair.field, pair.base, pair.carried
    lift = dec.eta_lift()
    kernel = dec.R.tensor(dec.Q) + dec.Q.tensor(dec.R)
    bad = [
        _wit(element=_show(C, c))
        for c in dec.D.basis
        if _sub(F, P.coproduct(lift.apply(c)), lift.kron(lift).apply(C.coproduct(c))) not in kernel
    ]
    return _cond("subcoal.eta-coalgebra-map", bad)


def check_subcoalgebra_criteria(dec: SubcoalgebraDecomposition, ext: DorrohExtension) -> AnalysisReport:
    """The structural criteria for ``T`` to be a subcoalgebra, cross-checked against :func:`is_subcoalgebra`.

    ``subcoal.a``: D a subcoalgebra.  ``subcoal.b``: Q a subcoalgebra and a
    subbicomodule, R a coideal of Q and a subbicomodule, both coactions of Q
    landing on the D side.  ``subcoal.c``: eta a bicomodule map matching the
    coactions of Q with its coproduct.  ``subcoal.bar.a`` adds that E is a
    subcoalgebra; ``subcoal.bar.c`` asks eta_bar to be a bijective bicomodule
    map with the same matching.  When the direct check passes, eta is also
    checked to be a coalgebra map.
    """
    p = _criteria_parts(ext, dec)
    c = {
        "subcoal.a": p["D-subcoalgebra"],
        "subcoal.b": p["Q-subcoalgebra"] + p["Q-subbicomodule"] + p["R-coideal-of-Q"] + p["R-subbicomodule"] + p["Q-coacted-by-D"],
        "subcoal.c": p["eta-bicomodule"] + p["eta-matches-coproduct"],
        "subcoal.bar.a": p["D-subcoalgebra"] + p["E-subcoalgebra"],
        "subcoal.bar.c": p["eta-bar-bijective"] + p["eta-bar-bicomodule"] + p["eta-bar-matches-coproduct"],
    }
    conds = [_cond(k, v) for k, v in c.items()]
    direct = is_subcoalgebra(ext, dec.T)
    conds.append(direct)
    if direct.passed:
        hom = _eta_coalgebra_map(ext.coalgebras, dec)
        if not hom.passed:
            raise ConsistencyError("eta of a subcoalgebra is not a coalgebra map")
        conds.append(hom)
    rep = AnalysisReport(tuple(conds))
    for group in (("subcoal.a", "subcoal.b", "subcoal.c"), ("subcoal.bar.a", "subcoal.b", "subcoal.bar.c")):
        if rep.all_pass(group) != direct.passed:
            raise ConsistencyError(f"criteria {group} give {rep.all_pass(group)}, direct check gives {direct.passed}")
    return rep


# -- exact sequences and quotients ---------------------------------------------------

def _kernel_of_projection(ext: DorrohExtension, T: Subspace, to_base: bool) -> Subspace:
    F = ext.field
    part = ext.base_part if to_base else ext.ideal_part
    P = Matrix.from_columns(F, [part(v) for v in T.basis], ext.h if to_base else ext.n)
    return Subspace(F, ext.dim, [T.combine(c) for c in P.nullspace().basis])


def verify_coalgebra_exact_sequences(dec: SubcoalgebraDecomposition, ext: DorrohExtension) -> AnalysisReport:
    """``0 -> R -> T -> D -> 0`` and ``0 -> E -> T -> Q -> 0``, kernels computed independently."""
    T = dec.T
    R_in = ext.embed_ideal_subspace(dec.R)
    E_in = ext.embed_base_subspace(dec.E)
    proj_d = Subspace(ext.field, ext.h, [ext.base_part(v) for v in T.basis])
    proj_q = Subspace(ext.field, ext.n, [ext.ideal_part(v) for v in T.basis])
    ker_d = _kernel_of_projection(ext, T, True)
    ker_q = _kernel_of_projection(ext, T, False)
    return AnalysisReport((
        Condition("subcoal.seq.R-T-D", R_in <= T and proj_d == dec.D and ker_d == R_in and T.dim == dec.R.dim + dec.D.dim,
                  f"dim T = {T.dim}, dim R + dim D = {dec.R.dim} + {dec.D.dim}"),
        Condition("subcoal.seq.E-T-Q", E_in <= T and proj_q == dec.Q and ker_q == E_in and T.dim == dec.E.dim + dec.Q.dim,
                  f"dim T = {T.dim}, dim E + dim Q = {dec.E.dim} + {dec.Q.dim}"),
    ))


@dataclass(frozen=True)
class CoalgebraQuotientIsos:
    T_mod_W_to_D_mod_E: Matrix
    D_mod_E_to_Q_mod_R: Matrix
    dims: tuple[int, int, int]    # dim T/W, dim D/E, dim Q/R
    report: AnalysisReport


def _quotient_coproduct(C: Coalgebra, q: Quotient) -> Matrix:
    """Comultiplication of ``top/bottom`` on its representatives (``bottom`` must be a coideal of ``top``)."""
    pr = q.projector
    return Matrix.from_columns(C.field, [pr.kron(pr).apply(C.coproduct(r)) for r in q.reps], q.dim * q.dim)


def subcoalgebra_quotient_isos(dec: SubcoalgebraDecomposition, ext: DorrohExtension) -> CoalgebraQuotientIsos:
    """``T/(E + R) ~ D/E ~ Q/R`` as coalgebras, each verified as a comultiplicative bijection."""
    if not is_subcoalgebra(ext, dec.T):
        raise NotASubcoalgebra("quotient isomorphisms need a subcoalgebra")
    F = ext.field
    total, C, P = ext.coalgebra, ext.coalgebras.base, ext.coalgebras.carried
    T = dec.T
    W = ext.embed_base_subspace(dec.E) + ext.embed_ideal_subspace(dec.R)
    tw, de, qr = Quotient(T, W), dec.D_mod_E, dec.Q_mod_R

    w_coideal = all(total.coproduct(w) in T.tensor(W) + W.tensor(T) for w in W.basis)
    theta = Matrix.from_columns(F, [de.coords(ext.base_part(r)) for r in tw.reps], de.dim)
    theta_ok = theta.is_invertible() and theta.kron(theta) @ _quotient_coproduct(total, tw) == _quotient_coproduct(C, de) @ theta
    bar = dec.eta_bar
    bar_ok = bar.is_invertible() and bar.kron(bar) @ _quotient_coproduct(C, de) == _quotient_coproduct(P, qr) @ bar
    rep = AnalysisReport((
        Condition("subcoal.quot.W-coideal-of-T", w_coideal),
        Condition("subcoal.quot.T-W-to-D-E", theta_ok, f"{tw.dim} -> {de.dim}"),
        Condition("subcoal.quot.D-E-to-Q-R", bar_ok, f"{de.dim} -> {qr.dim}"),
    ))
    return CoalgebraQuotientIsos(theta, bar, (tw.dim, de.dim, qr.dim), rep)


# -- enumeration and the counitization classification -----------------------------

def enumerate_subcoalgebras(ext: DorrohExtension, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    return [T for T in enumerate_subspaces(ext.dim, ext.field, budget) if is_subcoalgebra(ext, T)]


def iter_subcoalgebra_reports(
    ext: DorrohExtension, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[Subspace, AnalysisReport]]:
    for T in enumerate_subspaces(ext.dim, ext.field, budget):
        yield T, check_subcoalgebra_criteria(decompose_subcoalgebra(ext, T), ext)


@dataclass(frozen=True)
class ClassifiedSubcoalgebra:
    T: Subspace
    case: str           # "a": T = 0; "b": T = (k, Q); "c": T = k(1, x) + (0, R)
    data: dict


def _graph_ok(P: Coalgebra, R: Subspace, x: Vector) -> bool:
    """``Delta(x) - x(x)x in R(x)R``, ``Delta(r) - x(x)r in R(x)(kx+R)``, ``Delta(r) - r(x)x in (kx+R)(x)R``."""
    F = P.field
    xR = R + Subspace(F, P.dim, [x])
    kron = lambda u, v: tuple(F.reduce(a * b) for a in u for b in v)  # noqa: E731
    if _sub(F, P.coproduct(x), kron(x, x)) not in R.tensor(R):
        return False
    for r in R.basis:
        d = P.coproduct(r)
        if _sub(F, d, kron(x, r)) not in R.tensor(xR) or _sub(F, d, kron(r, x)) not in xR.tensor(R):
            return False
    return True


def _counitization_case(dec: SubcoalgebraDecomposition) -> tuple[str, dict]:
    if dec.T.dim == 0:
        return "a", {}
    if dec.E.dim == 1:
        return "b", {"Q": dec.Q}
    return "c", {"x": dec.eta_rep(dec.D.basis[0]), "R": dec.R}


def classify_counitization_subcoalgebras(
    P: Coalgebra, T: Subspace | None = None, budget: int = DEFAULT_BUDGET, verify: bool = True
) -> list[ClassifiedSubcoalgebra]:
    """Subcoalgebras of ``k (+) P`` by type.

    ``span{(1, 0)}`` is ``(k, 0)``, listed under case ``b`` with ``Q = 0``.
    With ``T`` given, classify that subcoalgebra (any field).  Otherwise
    generate every case from the subcoalgebras and coideals of ``P`` (finite
    fields only); with ``verify`` the list is compared with brute force.
    """
    ext = extend_coalgebra(counitization(P))
    F, n = P.field, P.dim
    if T is not None:
        if not is_subcoalgebra(ext, T):
            raise NotASubcoalgebra("subspace is not a subcoalgebra of the counitization")
        case, data = _counitization_case(decompose_subcoalgebra(ext, T))
        if case == "c" and not _graph_ok(P, data["R"], data["x"]):
            raise ConsistencyError("graph-type subcoalgebra fails the coideal conditions")
        return [ClassifiedSubcoalgebra(T, case, data)]

    out = [ClassifiedSubcoalgebra(Subspace.zero(F, 1 + n), "a", {})]
    subspaces = list(enumerate_subspaces(n, F, budget))
    for Q in subspaces:
        if all(P.coproduct(q) in Q.tensor(Q) for q in Q.basis):
            out.append(ClassifiedSubcoalgebra(Subspace(F, 1 + n, [(F.one,) + (F.zero,) * n] + [(F.zero,) + q for q in Q.basis]), "b", {"Q": Q}))
    full = Subspace.full(F, n)
    for R in subspaces:
        if not all(P.coproduct(r) in R.tensor(full) + full.tensor(R) for r in R.basis):
            continue
        comp = R.complement_basis()
        for coeffs in F.vectors(len(comp)):
            if not any(coeffs):
                continue
            x = tuple(F.reduce(sum(c * v[j] for c, v in zip(coeffs, comp))) for j in range(n))
            if _graph_ok(P, R, x):
                Tc = Subspace(F, 1 + n, [(F.one,) + x] + [(F.zero,) + r for r in R.basis])
                out.append(ClassifiedSubcoalgebra(Tc, "c", {"x": x, "R": R}))
    if verify:
        listed = [c.T for c in out]
        if len(set(listed)) != len(listed):
            raise ConsistencyError("classification lists some subcoalgebra under two cases")
        brute = set(enumerate_subcoalgebras(ext, budget))
        if set(listed) != brute:
            raise ConsistencyError(f"classification lists {len(listed)} subcoalgebras, enumeration finds {len(brute)}")
    return out


# -- trivial coextensions -----------------------------------------------------------

def check_trivial_coext_subcoalgebra(pair: DorrohPairCoalgebras, T: Subspace) -> AnalysisReport:
    """Subcoalgebras of ``C (+) M`` with zero coproduct on ``M``, cross-checked against :func:`is_subcoalgebra`.

    ``trivcoext-subcoal.a``: E and D subcoalgebras, ``Delta(D) <= E(x)D + D(x)E``;
    ``trivcoext-subcoal.b``: Q and R subbicomodules, ``rho_l(Q) <= E(x)Q``, ``rho_r(Q) <= Q(x)E``;
    ``trivcoext-subcoal.c``: eta a bicomodule map.
    """
    if not pair.carried.is_zero_coproduct():
        raise NotTrivialCoextension("the carried coalgebra has a nonzero coproduct")
    if pair.base.counit is None:
        raise NotTrivialCoextension("the base coalgebra must be counital")
    ext = extend_coalgebra(pair)
    dec = decompose_subcoalgebra(ext, T)
    C, M = pair.base, pair.carried
    rl, rr = pair.coaction.left, pair.coaction.right
    D, E, Q = dec.D, dec.E, dec.Q
    p = _criteria_parts(ext, dec)
    spread = _closed(C, D, E.tensor(D) + D.tensor(E), "coproduct leaves E(x)D + D(x)E")
    small = _mapped(M, rl, Q, E.tensor(Q), "left coaction leaves E(x)Q") + _mapped(M, rr, Q, Q.tensor(E), "right coaction leaves Q(x)E")
    conds = (
        _cond("trivcoext-subcoal.a", p["D-subcoalgebra"] + p["E-subcoalgebra"] + spread),
        _cond("trivcoext-subcoal.b", p["Q-subbicomodule"] + p["R-subbicomodule"] + small),
        _cond("trivcoext-subcoal.c", p["eta-bicomodule"]),
    )
    direct = is_subcoalgebra(ext, T)
    if all(c.passed for c in conds) != direct.passed:
        raise ConsistencyError(f"trivial-coextension criteria disagree with the direct check ({direct.passed})")
    return AnalysisReport(conds + (direct,))


# -- duality --------------------------------------------------------------------------

def annihilator_duality(pair: DorrohPairCoalgebras, T: Subspace) -> Condition:
    """``T`` is a subcoalgebra of ``C (+) P`` exactly when its annihilator is an ideal of the dual extension."""
    from .ideals import is_ideal

    ext = extend_coalgebra(pair)
    dual = extend_algebra(dual_pair(pair))
    if dual.algebra.mult != ext.coalgebra.comult.T:
        raise ConsistencyError("dual extension is not the transpose of the coalgebra extension")
    sub = is_subcoalgebra(ext, T).passed
    ideal = is_ideal(dual, T.annihilator()).passed
    return Condition("subcoal.dual-annihilator-ideal", sub == ideal, f"subcoalgebra: {sub}; annihilator ideal: {ideal}")

