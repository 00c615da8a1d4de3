"""Ideals of a Dorroh extension ``A (+) I`` of algebras.

An ideal ``K`` is described by four subspaces and a linear map:

* ``B``, ``J``: the projections of ``K`` to ``A`` and to ``I``;
* ``Z``, ``L``: the parts of ``K`` lying inside ``A`` and inside ``I``;
* ``phi : J -> B/Z`` with ``phi(x) = a + Z`` whenever ``(a, -x)`` is in ``K``.

Conversely any such data with the right closure properties gives back the
ideal ``{(a, -x) : phi(x) = a + Z} + (0, L)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .dorroh import DorrohExtension, extend_algebra
from .fields import Field
from .linalg import DEFAULT_BUDGET, Matrix, Quotient, Subspace, Vector, enumerate_subspaces, solve_linear
from .report import AnalysisReport, Condition, ConsistencyError, render_vector
from .structures import Algebra, DorrohPairAlgebras, unit_vec, unitization


class NotAnIdeal(ValueError):
    pass


class NotTrivialExtension(ValueError):
    pass


def _neg(field: Field, v: Sequence) -> Vector:
    return tuple(field.reduce(-x) for x in v)


def _sub(field: Field, u: Sequence, v: Sequence) -> Vector:
    return tuple(field.reduce(a - b) for a, b in zip(u, v))


def _basis(field: Field, n: int) -> list[Vector]:
    return [unit_vec(field, n, i) for i in range(n)]


@dataclass(frozen=True, eq=False)
class IdealDecomposition:
    K: Subspace
    B: Subspace
    Z: Subspace
    J: Subspace
    L: Subspace
    phi: Matrix           # dim(B/Z) x dim J, in the bases of J and of B/Z
    B_mod_Z: Quotient
    J_mod_L: Quotient

    @property
    def phi_bar(self) -> Matrix:
        """``J/L -> B/Z``, in the representative bases of both quotients."""
        cols = [self.phi.apply(self.J.coords(r)) for r in self.J_mod_L.reps]
        return Matrix.from_columns(self.B.field, cols, self.B_mod_Z.dim)

    def phi_coords(self, x: Sequence) -> Vector:
        return self.phi.apply(self.J.coords(x))

    def phi_rep(self, x: Sequence) -> Vector:
        """A representative in ``A`` of ``phi(x)``."""
        return self.B_mod_Z.lift(self.phi_coords(x))

    def reconstruct(self) -> Subspace:
        F = self.B.field
        h, n = self.B.ambient_dim, self.J.ambient_dim
        vecs = [tuple(self.phi_rep(x)) + _neg(F, x) for x in self.J.basis]
        vecs += [tuple(z) + (F.zero,) * n for z in self.Z.basis]
        vecs += [(F.zero,) * h + tuple(l) for l in self.L.basis]
        return Subspace(F, h + n, vecs)


def decompose_ideal(ext: DorrohExtension, K: Subspace) -> IdealDecomposition:
    """Read off ``(B, Z, J, L, phi)`` from a subspace of the extension (any subspace, not only ideals)."""
    F, h, n = ext.field, ext.h, ext.n
    if K.ambient_dim != h + n:
        raise ValueError(f"subspace lives in dimension {K.ambient_dim}, extension has {h + n}")
    B = Subspace(F, h, [ext.base_part(v) for v in K.basis])
    J = Subspace(F, n, [ext.ideal_part(v) for v in K.basis])
    Z = Subspace(F, h, [ext.base_part(v) for v in (K & ext.embed_base_subspace(Subspace.full(F, h))).basis])
    L = Subspace(F, n, [ext.ideal_part(v) for v in (K & ext.embed_ideal_subspace(Subspace.full(F, n))).basis])
    bz, jl = Quotient(B, Z), Quotient(J, L)
    # phi(x): pick (a, -x) in K by solving for coefficients over the basis of K
    KI = Matrix.from_columns(F, [ext.ideal_part(v) for v in K.basis], n)
    cols = []
    for x in J.basis:
        c, _ = solve_linear(KI, _neg(F, x))
        if c is None:
            raise ConsistencyError("J is the projection of K but a basis vector has no preimage")
        a = ext.base_part(K.combine(c))
        cols.append(bz.coords(a))
    phi = Matrix.from_columns(F, cols, bz.dim)
    dec = IdealDecomposition(K, B, Z, J, L, phi, bz, jl)
    if dec.reconstruct() != K:
        raise ConsistencyError("decomposition does not reconstruct the subspace")
    return dec


def is_ideal(ext: DorrohExtension, K: Subspace) -> Condition:
    """Direct check: ``u k`` and ``k u`` lie in ``K`` for basis ``u`` and ``k`` in a basis of ``K``."""
    A = ext.algebra
    out = []
    for i in range(ext.dim):
        for k in K.basis:
            for side, p in (("left", A.left_mults[i].apply(k)), ("right", A.right_mults[i].apply(k))):
                if p not in K:
                    out.append({"side": side, "by": ext.labels[i], "element": ext.render(k), "product": ext.render(p)})
    return Condition("ideal.direct", not out, "", tuple(out))


# -- closure helpers -----------------------------------------------------------

def _wit(**kw) -> dict:
    return {k: str(v) for k, v in kw.items()}


def _is_ideal_of(A: Algebra, S: Subspace, within: Subspace | None = None) -> list[dict]:
    """Failures of ``A S + S A <= S`` (``within`` restricts the multipliers to a subspace)."""
    F = A.field
    mults = within.basis if within is not None else _basis(F, A.dim)
    bad = []
    for a in mults:
        for s in S.basis:
            for side, p in (("left", A.product(a, s)), ("right", A.product(s, a))):
                if p not in S:
                    bad.append(_wit(side=side, by=render_vector(F, a, [A.basis]), element=render_vector(F, s, [A.basis])))
    return bad


def _is_subbimodule(pair: DorrohPairAlgebras, S: Subspace) -> list[dict]:
    F, H, I = pair.field, pair.base, pair.ideal
    bad = []
    for a in _basis(F, H.dim):
        for s in S.basis:
            for side, p in (("left", _left(pair, a, s)), ("right", _right(pair, s, a))):
                if p not in S:
                    bad.append(_wit(side=side, by=render_vector(F, a, [H.basis]), element=render_vector(F, s, [I.basis])))
    return bad


def _kron(F: Field, u: Sequence, v: Sequence) -> Vector:
    return tuple(F.reduce(a * b) for a in u for b in v)


def _left(pair: DorrohPairAlgebras, a: Sequence, x: Sequence) -> Vector:
    return pair.action.left.apply(_kron(pair.field, a, x))


def _right(pair: DorrohPairAlgebras, x: Sequence, a: Sequence) -> Vector:
    return pair.action.right.apply(_kron(pair.field, x, a))


def _cond(cid: str, failures: list[dict], detail: str = "") -> Condition:
    return Condition(cid, not failures, detail, tuple(failures))


# -- criteria ---------------------------------------------------------------------

def _criteria_parts(ext: DorrohExtension, dec: IdealDecomposition) -> dict[str, list[dict]]:
    """Every elementary closure statement used by the criteria, keyed by a short name."""
    pair = ext.algebras
    F, H, I = ext.field, pair.base, pair.ideal
    h, n = ext.h, ext.n
    K, B, Z, J, L = dec.K, dec.B, dec.Z, dec.J, dec.L
    out: dict[str, list[dict]] = {}
    out["B-ideal"] = _is_ideal_of(H, B)
    out["Z-ideal"] = _is_ideal_of(H, Z)
    out["J-subbimodule"] = _is_subbimodule(pair, J)
    out["J-subalgebra"] = [
        _wit(product=f"{render_vector(F, x, [I.basis])}·{render_vector(F, y, [I.basis])}")
        for x in J.basis for y in J.basis if I.product(x, y) not in J
    ]
    out["L-subbimodule"] = _is_subbimodule(pair, L)
    out["L-ideal-of-I"] = _is_ideal_of(I, L)

    # graph conditions, over pairs (a_k, -x_k) running through a basis of K
    graph_bimodule, graph_mult, graph_absorb = [], [], []
    kb = [(ext.base_part(v), _neg(F, ext.ideal_part(v))) for v in K.basis]
    for a, x in kb:
        for e in _basis(F, h):
            for side, ex, ea in (("left", _left(pair, e, x), H.product(e, a)), ("right", _right(pair, x, e), H.product(a, e))):
                if ex not in J:
                    graph_bimodule.append(_wit(side=side, by=H.basis[e.index(F.one)], element=render_vector(F, x, [I.basis]), problem="product leaves J"))
                elif _sub(F, ea, dec.phi_rep(ex)) not in Z:
                    graph_bimodule.append(_wit(side=side, by=H.basis[e.index(F.one)], element=render_vector(F, x, [I.basis]), problem="phi not linear over the base"))
        for y in _basis(F, n):
            for side, d in (
                ("left", _sub(F, _right(pair, y, a), I.product(y, x))),
                ("right", _sub(F, _left(pair, a, y), I.product(x, y))),
            ):
                if d not in L:
                    graph_absorb.append(_wit(side=side, by=render_vector(F, y, [I.basis]), element=render_vector(F, x, [I.basis])))
    for a1, x1 in kb:
        for a2, x2 in kb:
            xy = I.product(x1, x2)
            if xy not in J:
                graph_mult.append(_wit(product=f"{render_vector(F, x1, [I.basis])}·{render_vector(F, x2, [I.basis])}", problem="product leaves J"))
            elif _sub(F, H.product(a1, a2), dec.phi_rep(xy)) not in Z:
                graph_mult.append(_wit(product=f"{render_vector(F, x1, [I.basis])}·{render_vector(F, x2, [I.basis])}", problem="phi not multiplicative"))
    out["phi-bimodule"] = graph_bimodule
    out["phi-multiplicative"] = graph_mult
    out["phi-absorbs"] = graph_absorb
    return out


def _bar_parts(ext: DorrohExtension, dec: IdealDecomposition) -> dict[str, list[dict]]:
    """The same graph conditions phrased through ``phi_bar : J/L -> B/Z`` on quotient representatives."""
    pair = ext.algebras
    F, H, I = ext.field, pair.base, pair.ideal
    h, n = ext.h, ext.n
    jl, bz = dec.J_mod_L, dec.B_mod_Z
    pb = dec.phi_bar
    lift = lambda r: bz.lift(pb.apply(jl.coords(r)))  # noqa: E731
    reps = jl.reps
    gens = [(lift(r), r) for r in reps]
    out: dict[str, list[dict]] = {"phi-bar-bijective": [] if pb.is_invertible() else [_wit(shape=pb.shape, rank=pb.rank())]}
    bim, mult, absorb = [], [], []
    for b, r in gens:
        for e in _basis(F, h):
            for side, er, eb in (("left", _left(pair, e, r), H.product(e, b)), ("right", _right(pair, r, e), H.product(b, e))):
                if er not in dec.J:
                    bim.append(_wit(side=side, element=render_vector(F, r, [I.basis]), problem="product leaves J"))
                elif _sub(F, eb, lift(er)) not in dec.Z:
                    bim.append(_wit(side=side, element=render_vector(F, r, [I.basis]), problem="phi_bar not linear over the base"))
        for y in _basis(F, n):
            if _sub(F, _right(pair, y, b), I.product(y, r)) not in dec.L or _sub(F, _left(pair, b, y), I.product(r, y)) not in dec.L:
                absorb.append(_wit(by=render_vector(F, y, [I.basis]), element=render_vector(F, r, [I.basis])))
    for b1, r1 in gens:
        for b2, r2 in gens:
            rr = I.product(r1, r2)
            if rr not in dec.J:
                mult.append(_wit(problem="product leaves J"))
            elif _sub(F, H.product(b1, b2), lift(rr)) not in dec.Z:
                mult.append(_wit(product=f"{render_vector(F, r1, [I.basis])}·{render_vector(F, r2, [I.basis])}"))
    # the kernel part: (z, 0) and (0, l) also have to absorb I
    for y in _basis(F, n):
        for z in dec.Z.basis:
            if _left(pair, z, y) not in dec.L or _right(pair, y, z) not in dec.L:
                absorb.append(_wit(by=render_vector(F, y, [I.basis]), element=render_vector(F, z, [H.basis])))
        for l in dec.L.basis:
            if I.product(l, y) not in dec.L or I.product(y, l) not in dec.L:
                absorb.append(_wit(by=render_vector(F, y, [I.basis]), element=render_vector(F, l, [I.basis])))
    out["phi-bar-bimodule"] = bim
    out["phi-bar-multiplicative"] = mult
    out["phi-bar-absorbs"] = absorb
    return out


def check_ideal_criteria(dec: IdealDecomposition, ext: DorrohExtension) -> AnalysisReport:
    """The structural criteria for ``K`` to be an ideal, cross-checked against :func:`is_ideal`.

    Conditions: ``ideal.a`` (B and Z ideals of the base), ``ideal.b``
    (J a subalgebra and subbimodule, L an ideal of I and a subbimodule),
    ``ideal.b-weak`` (J and L subbimodules), ``ideal.c`` (phi a bimodule and
    algebra map absorbing I), ``ideal.c-weak`` (phi a bimodule map absorbing I),
    and the ``ideal.bar.*`` versions phrased through ``phi_bar``.  Both
    conjunctions (a, b, c) and (a, b-weak, c-weak) must equal the direct check.
    """
    p = _criteria_parts(ext, dec)
    q = _bar_parts(ext, dec)
    c = {
        "ideal.a": p["B-ideal"] + p["Z-ideal"],
        "ideal.b": p["J-subalgebra"] + p["J-subbimodule"] + p["L-ideal-of-I"] + p["L-subbimodule"],
        "ideal.b-weak": p["J-subbimodule"] + p["L-subbimodule"],
        "ideal.c": p["phi-bimodule"] + p["phi-multiplicative"] + p["phi-absorbs"],
        "ideal.c-weak": p["phi-bimodule"] + p["phi-absorbs"],
        "ideal.bar.b": p["J-subalgebra"] + p["J-subbimodule"] + p["L-ideal-of-I"] + p["L-subbimodule"],
        "ideal.bar.b-weak": p["J-subbimodule"] + p["L-subbimodule"],
        "ideal.bar.c": q["phi-bar-bijective"] + q["phi-bar-bimodule"] + q["phi-bar-multiplicative"] + q["phi-bar-absorbs"],
        "ideal.bar.c-weak": q["phi-bar-bijective"] + q["phi-bar-bimodule"] + q["phi-bar-absorbs"],
    }
    conds = [_cond(k, v) for k, v in c.items()]
    direct = is_ideal(ext, dec.K)
    rep = AnalysisReport(tuple(conds) + (direct,))
    for group in (("ideal.a", "ideal.b", "ideal.c"), ("ideal.a", "ideal.b-weak", "ideal.c-weak"),
                  ("ideal.a", "ideal.bar.b", "ideal.bar.c"), ("ideal.a", "ideal.bar.b-weak", "ideal.bar.c-weak")):
        if rep.all_pass(group) != direct.passed:
            raise ConsistencyError(f"criteria {group} give {rep.all_pass(group)}, direct check gives {direct.passed}")
    return rep


# -- exact sequences and quotients ---------------------------------------------------

def _kernel_of_projection(ext: DorrohExtension, K: Subspace, to_base: bool) -> Subspace:
    F = ext.field
    part = ext.base_part if to_base else ext.ideal_part
    m = len(part(K.basis[0])) if K.basis else (ext.h if to_base else ext.n)
    P = Matrix.from_columns(F, [part(v) for v in K.basis], m)
    return Subspace(F, ext.dim, [K.combine(c) for c in P.nullspace().basis])


def verify_ideal_exact_sequences(dec: IdealDecomposition, ext: DorrohExtension) -> AnalysisReport:
    """``0 -> L -> K -> B -> 0`` and ``0 -> Z -> K -> J -> 0``, with the kernels computed independently."""
    K = dec.K
    L_in = ext.embed_ideal_subspace(dec.L)
    Z_in = ext.embed_base_subspace(dec.Z)
    proj_b = Subspace(ext.field, ext.h, [ext.base_part(v) for v in K.basis])
    proj_j = Subspace(ext.field, ext.n, [ext.ideal_part(v) for v in K.basis])
    ker_b = _kernel_of_projection(ext, K, True)
    ker_j = _kernel_of_projection(ext, K, False)
    return AnalysisReport((
        Condition("ideal.seq.L-K-B", L_in <= K and proj_b == dec.B and ker_b == L_in and K.dim == dec.L.dim + dec.B.dim,
                  f"dim K = {K.dim}, dim L + dim B = {dec.L.dim} + {dec.B.dim}"),
        Condition("ideal.seq.Z-K-J", Z_in <= K and proj_j == dec.J and ker_j == Z_in and K.dim == dec.Z.dim + dec.J.dim,
                  f"dim K = {K.dim}, dim Z + dim J = {dec.Z.dim} + {dec.J.dim}"),
    ))


@dataclass(frozen=True)
class QuotientIsos:
    K_mod_W_to_B_mod_Z: Matrix
    B_mod_Z_to_J_mod_L: Matrix
    dims: tuple[int, int, int]    # dim K/W, dim B/Z, dim J/L
    report: AnalysisReport


def ideal_quotient_isos(dec: IdealDecomposition, ext: DorrohExtension) -> QuotientIsos:
    """``K/(Z + L) ~ B/Z ~ J/L`` as algebras, each verified as a multiplicative bijection."""
    if not is_ideal(ext, dec.K):
        raise NotAnIdeal("quotient isomorphisms need an ideal")
    F = ext.field
    A, H, I = ext.algebra, ext.algebras.base, ext.algebras.ideal
    K = dec.K
    W = ext.embed_base_subspace(dec.Z) + ext.embed_ideal_subspace(dec.L)
    kw, bz, jl = Quotient(K, W), dec.B_mod_Z, dec.J_mod_L

    w_ideal = all(A.product(k, w) in W and A.product(w, k) in W for k in K.basis for w in W.basis)
    theta = Matrix.from_columns(F, [bz.coords(ext.base_part(r)) for r in kw.reps], bz.dim)
    theta_mult = theta.is_invertible() and all(
        theta.apply(kw.coords(A.product(r1, r2))) == bz.coords(H.product(bz.lift(theta.apply(kw.coords(r1))), bz.lift(theta.apply(kw.coords(r2)))))
        for r1 in kw.reps for r2 in kw.reps
    )
    pb = dec.phi_bar
    invertible = pb.is_invertible()
    psi = pb.inverse() if invertible else None
    psi_mult = invertible
    if invertible:
        for i in range(bz.dim):
            for j in range(bz.dim):
                bi, bj = unit_vec(F, bz.dim, i), unit_vec(F, bz.dim, j)
                prod_b = bz.coords(H.product(bz.lift(bi), bz.lift(bj)))
                xy = I.product(jl.lift(psi.apply(bi)), jl.lift(psi.apply(bj)))
                if xy not in dec.J or psi.apply(prod_b) != jl.coords(xy):
                    psi_mult = False
    rep = AnalysisReport((
        Condition("ideal.quot.W-ideal-of-K", w_ideal),
        Condition("ideal.quot.K-W-to-B-Z", theta_mult, f"{kw.dim} -> {bz.dim}"),
        Condition("ideal.quot.B-Z-to-J-L", psi_mult, f"{bz.dim} -> {jl.dim}"),
    ))
    return QuotientIsos(theta, psi if psi is not None else pb, (kw.dim, bz.dim, jl.dim), rep)


# -- enumeration and the unitization classification --------------------------------

def enumerate_ideals(ext: DorrohExtension, budget: int = DEFAULT_BUDGET) -> list[Subspace]:
    return [K for K in enumerate_subspaces(ext.dim, ext.field, budget) if is_ideal(ext, K)]


@dataclass(frozen=True)
class ClassifiedIdeal:
    K: Subspace
    case: str           # "a": K = (0, L); "b": K = (k, I); "c": graph of an algebra map J -> k
    data: dict


def _unitization_case(dec: IdealDecomposition) -> str:
    if dec.B.dim == 0:
        return "a"
    if dec.Z.dim == 1:
        return "b"
    return "c"


def classify_unitization_ideals(
    I: Algebra, K: Subspace | None = None, budget: int = DEFAULT_BUDGET, verify: bool = True
) -> list[ClassifiedIdeal]:
    """Ideals of ``k (+) I`` by type.

    With ``K`` given, classify that ideal.  Otherwise generate all three types
    from the ideals, subalgebras and characters of ``I`` (finite fields only);
    with ``verify`` the result is compared with brute-force enumeration.
    """
    ext = extend_algebra(unitization(I))
    F, n = I.field, I.dim
    if K is not None:
        if not is_ideal(ext, K):
            raise NotAnIdeal("subspace is not an ideal of the unitization")
        dec = decompose_ideal(ext, K)
        case = _unitization_case(dec)
        return [ClassifiedIdeal(K, case, _case_data(dec, case))]

    out: list[ClassifiedIdeal] = []
    subspaces = list(enumerate_subspaces(n, F, budget))
    for L in subspaces:
        if not _is_ideal_of(I, L):
            out.append(ClassifiedIdeal(ext.embed_ideal_subspace(L), "a", {"L": L}))
    out.append(ClassifiedIdeal(Subspace.full(F, 1 + n), "b", {}))
    for J in subspaces:
        if J.dim == 0 or any(I.product(x, y) not in J for x in J.basis for y in J.basis):
            continue
        for f in F.vectors(J.dim):
            if not any(f):
                continue
            phi = lambda v, f=f, J=J: F.reduce(sum(c * d for c, d in zip(f, J.coords(v))))  # noqa: E731
            if _character_ok(I, J, phi):
                Kc = Subspace(F, 1 + n, [(phi(x),) + _neg(F, x) for x in J.basis])
                out.append(ClassifiedIdeal(Kc, "c", {"J": J, "phi": tuple(f)}))
    if verify:
        brute = set(enumerate_ideals(ext, budget))
        listed = [c.K for c in out]
        if len(set(listed)) != len(listed):
            raise ConsistencyError("classification lists some ideal under two cases")
        if set(listed) != brute:
            raise ConsistencyError(f"classification lists {len(set(listed))} ideals, enumeration finds {len(brute)}")
        for c in out:
            if not is_ideal(ext, c.K):
                raise ConsistencyError(f"type {c.case} candidate is not an ideal")
    return out


def _character_ok(I: Algebra, J: Subspace, phi) -> bool:
    """``phi`` multiplicative on ``J`` and ``phi(x) y - x y``, ``phi(x) y - y x`` in ``J`` and killed by ``phi``."""
    F = I.field
    for x in J.basis:
        for y in J.basis:
            if phi(I.product(x, y)) != F.reduce(phi(x) * phi(y)):
                return False
        a = phi(x)
        for y in _basis(F, I.dim):
            ay = tuple(F.reduce(a * c) for c in y)
            for d in (_sub(F, ay, I.product(x, y)), _sub(F, ay, I.product(y, x))):
                if d not in J or phi(d) != 0:
                    return False
    return True


def _case_data(dec: IdealDecomposition, case: str) -> dict:
    if case == "a":
        return {"L": dec.L}
    if case == "b":
        return {}
    return {"J": dec.J, "phi": tuple(dec.phi.rows[0]) if dec.phi.rows else ()}


# -- trivial extensions ------------------------------------------------------------

def check_trivial_ext_ideal(pair: DorrohPairAlgebras, K: Subspace) -> AnalysisReport:
    """Ideals of ``A (+) M`` with ``M^2 = 0`` and ``A`` unital, cross-checked against :func:`is_ideal`.

    ``trivext-ideal.a``: B and Z are ideals and B B lies in Z;
    ``trivext-ideal.b``: J is a subbimodule;
    ``trivext-ideal.c``: phi is a bimodule epimorphism and B M + M B lies in L.
    """
    if not pair.ideal.is_zero_product():
        raise NotTrivialExtension("the carried algebra has a nonzero product")
    if pair.base.unit is None:
        raise NotTrivialExtension("the base algebra must be unital")
    ext = extend_algebra(pair)
    dec = decompose_ideal(ext, K)
    F, H = ext.field, pair.base
    p = _criteria_parts(ext, dec)
    BB = [_wit(product="B·B") for a in dec.B.basis for b in dec.B.basis if H.product(a, b) not in dec.Z]
    BM = [
        _wit(by=render_vector(F, b, [H.basis]), element=pair.ideal.basis[i])
        for b in dec.B.basis for i in range(ext.n)
        if _left(pair, b, unit_vec(F, ext.n, i)) not in dec.L or _right(pair, unit_vec(F, ext.n, i), b) not in dec.L
    ]
    onto = [] if dec.phi.rank() == dec.B_mod_Z.dim else [_wit(rank=dec.phi.rank(), target=dec.B_mod_Z.dim)]
    conds = (
        _cond("trivext-ideal.a", p["B-ideal"] + p["Z-ideal"] + BB),
        _cond("trivext-ideal.b", p["J-subbimodule"]),
        _cond("trivext-ideal.c", p["phi-bimodule"] + onto + BM),
    )
    direct = is_ideal(ext, K)
    rep = AnalysisReport(conds + (direct,))
    if all(c.passed for c in conds) != direct.passed:
        raise ConsistencyError(f"trivial-extension criteria give {not direct.passed}, direct check gives {direct.passed}")
    return rep


def iter_ideal_reports(ext: DorrohExtension, budget: int = DEFAULT_BUDGET) -> Iterator[tuple[Subspace, AnalysisReport]]:
    """Criteria report for every subspace of the extension (consistency is enforced per subspace)."""
    for K in enumerate_subspaces(ext.dim, ext.field, budget):
        yield K, check_ideal_criteria(decompose_ideal(ext, K), ext)
