"""Exact dense linear algebra over a :class:`~dorroh.fields.Field`.

Conventions used throughout the package:

* a linear map ``V -> W`` is a ``dim W x dim V`` :class:`Matrix` acting on
  column vectors;
* the basis of ``V (x) W`` is ordered lexicographically with the first factor
  major, i.e. ``e_i (x) f_j`` has index ``i * dim W + j``.  :meth:`Matrix.kron`
  follows the same order, so ``(f (x) g)`` is ``f.kron(g)``;
* a :class:`Subspace` is stored by its reduced row echelon basis, which makes
  equality of subspaces plain equality of bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod
from typing import Iterable, Iterator, Sequence

from .fields import Field, Scalar

Vector = tuple  # tuple of field scalars

#: default enumeration budget on ``p ** (n * n)``; admits n <= 4 over GF(2) and n <= 3 over GF(3)
DEFAULT_BUDGET = 2**16


class DimensionError(ValueError):
    """Shapes or ambient dimensions do not match."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration was refused."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


def _rref(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    red, inv = field.reduce, field.inv
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        lead = m[r][c]
        if lead != 1:
            iv = inv(lead)
            m[r] = [red(x * iv) for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [red(a - f * b) for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in m[:r]], pivots


class Matrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        self._set(field, rows, len(rows), ncols)

    def _set(self, field, rows, nrows, ncols):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _trusted(cls, field: Field, rows, ncols: int) -> Matrix:
        m = cls.__new__(cls)
        m._set(field, tuple(rows), len(rows), ncols)
        return m

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        z = field.zero
        return cls._trusted(field, [(z,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls._trusted(field, [tuple(o if i == j else z for j in range(n)) for i in range(n)], n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> Matrix:
        cols = [tuple(field(x) for x in c) for c in columns]
        return cls._trusted(field, [tuple(c[i] for c in cols) for i in range(nrows)], len(cols))

    @classmethod
    def column(cls, field: Field, vector: Sequence) -> Matrix:
        return cls._trusted(field, [(field(x),) for x in vector], 1)

    @classmethod
    def row(cls, field: Field, vector: Sequence) -> Matrix:
        return cls._trusted(field, [tuple(field(x) for x in vector)], len(vector))

    @classmethod
    def from_entries(cls, field: Field, nrows: int, ncols: int, entries: dict[tuple[int, int], Scalar]) -> Matrix:
        rows = [[field.zero] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            rows[i][j] = field.reduce(rows[i][j] + field(v))
        return cls._trusted(field, [tuple(r) for r in rows], ncols)

    # -- basic protocol ---------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        fmt = self.field.format
        return f"Matrix({self.field!r}, {[[fmt(x) for x in r] for r in self.rows]})"

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    # -- arithmetic -------------------------------------------------------
    def _check_same(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        red = self.field.reduce
        return Matrix._trusted(
            self.field, [tuple(red(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        red = self.field.reduce
        return Matrix._trusted(
            self.field, [tuple(red(a - b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)], self.ncols
        )

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c) -> Matrix:
        red = self.field.reduce
        c = self.field(c)
        return Matrix._trusted(self.field, [tuple(red(c * x) for x in r) for r in self.rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot compose {self.shape} @ {other.shape}")
        red = self.field.reduce
        brows = other.rows
        n = other.ncols
        out = []
        for row in self.rows:
            acc = [0] * n
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(brows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(red(x) for x in acc))
        return Matrix._trusted(self.field, out, n)

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.ncols:
            raise DimensionError(f"vector of length {len(vector)} for matrix {self.shape}")
        red = self.field.reduce
        return tuple(red(sum((a * b for a, b in zip(r, vector) if a and b), 0)) for r in self.rows)

    def kron(self, other: Matrix) -> Matrix:
        red = self.field.reduce
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append(tuple(red(a * b) if a and b else self.field.zero for a in r for b in s))
        return Matrix._trusted(self.field, rows, self.ncols * other.ncols)

    @property
    def T(self) -> Matrix:
        if not self.nrows:
            return Matrix.zeros(self.field, self.ncols, 0)
        return Matrix._trusted(self.field, list(zip(*self.rows)), self.nrows)

    def hstack(self, other: Matrix) -> Matrix:
        if self.nrows != other.nrows:
            raise DimensionError("row counts differ")
        return Matrix._trusted(self.field, [r + s for r, s in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return Matrix._trusted(self.field, self.rows + other.rows, self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix._trusted(self.field, [tuple(self.rows[i][j] for j in cols) for i in rows], len(cols))

    # -- elimination ------------------------------------------------------
    def rref(self) -> tuple[Matrix, list[int]]:
        rows, pivots = _rref(self.field, self.rows, self.ncols)
        return Matrix._trusted(self.field, rows, self.ncols), pivots

    def rank(self) -> int:
        return len(_rref(self.field, self.rows, self.ncols)[1])

    def nullspace(self) -> Subspace:
        """``{v : self @ v = 0}``."""
        rows, pivots = _rref(self.field, self.rows, self.ncols)
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        vecs = []
        for f in free:
            v = [self.field.zero] * self.ncols
            v[f] = self.field.one
            for r, p in zip(rows, pivots):
                v[p] = self.field.reduce(-r[f])
            vecs.append(tuple(v))
        return Subspace(self.field, self.ncols, vecs)

    def column_space(self) -> Subspace:
        return Subspace(self.field, self.nrows, self.columns())

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise DimensionError("only square matrices are invertible")
        n = self.nrows
        aug = self.hstack(Matrix.identity(self.field, n))
        rows, pivots = _rref(self.field, aug.rows, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._trusted(self.field, [r[n:] for r in rows], n)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def tensor(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, first factor major."""
    return a.kron(b)


def tensor_all(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = out.kron(m)
    return out


def permutation(field: Field, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Matrix of ``V_0 (x) ... (x) V_k -> V_perm[0] (x) ... (x) V_perm[k]`` reordering factors."""
    n = prod(dims)
    out_dims = [dims[p] for p in perm]
    entries = {}
    for idx in product(*(range(d) for d in dims)):
        src = 0
        for i, d in zip(idx, dims):
            src = src * d + i
        dst = 0
        for p, d in zip(perm, out_dims):
            dst = dst * d + idx[p]
        entries[(dst, src)] = 1
    return Matrix.from_entries(field, n, n, entries)


def twist(field: Field, m: int, n: int) -> Matrix:
    """``V (x) W -> W (x) V`` with ``dim V = m``, ``dim W = n``."""
    return permutation(field, (m, n), (1, 0))


def swap_middle(field: Field, a: int, b: int, c: int, d: int) -> Matrix:
    """``1 (x) twist (x) 1 : A (x) B (x) C (x) D -> A (x) C (x) B (x) D``."""
    return permutation(field, (a, b, c, d), (0, 2, 1, 3))


def solve_linear(a: Matrix, b: Sequence) -> tuple[Vector | None, Subspace]:
    """One solution of ``a x = b`` (free coordinates set to zero) and the kernel of ``a``."""
    if len(b) != a.nrows:
        raise DimensionError(f"right-hand side of length {len(b)} for a {a.shape} system")
    field = a.field
    aug = [r + (field(x),) for r, x in zip(a.rows, b)]
    rows, pivots = _rref(field, aug, a.ncols + 1)
    kernel = a.nullspace()
    if pivots and pivots[-1] == a.ncols:
        return None, kernel
    x = [field.zero] * a.ncols
    for r, p in zip(rows, pivots):
        x[p] = r[-1]
    return tuple(x), kernel


class Subspace:
    """A subspace of ``field ** ambient_dim`` in canonical (RREF) form."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = [tuple(field(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise DimensionError(f"vector length differs from ambient dimension {ambient_dim}")
        rows, pivots = _rref(field, vecs, ambient_dim)
        self._set(field, ambient_dim, tuple(rows), tuple(pivots))

    def _set(self, field, n, basis, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient_dim", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def _trusted(cls, field: Field, n: int, basis, pivots) -> Subspace:
        s = cls.__new__(cls)
        s._set(field, n, tuple(basis), tuple(pivots))
        return s

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls._trusted(field, n, (), ())

    @classmethod
    def full(cls, field: Field, n: int) -> Subspace:
        return cls._trusted(field, n, Matrix.identity(field, n).rows, range(n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        """Basis as the rows of a matrix."""
        return Matrix._trusted(self.field, self.basis, self.ambient_dim)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        fmt = self.field.format
        return f"Subspace({self.ambient_dim}, {[[fmt(x) for x in v] for v in self.basis]})"

    def _check(self, other: Subspace) -> None:
        if other.ambient_dim != self.ambient_dim or other.field != self.field:
            raise DimensionError(f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    def residue(self, v: Sequence) -> list:
        """``v`` minus its projection along the canonical basis; zero iff ``v`` is in the span."""
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        red = self.field.reduce
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                w = [red(a - c * b) if b else a for a, b in zip(w, row)]
        return w

    def __contains__(self, v: Sequence) -> bool:
        return not any(self.residue(v))

    def coords(self, v: Sequence) -> Vector:
        """Coordinates of ``v`` in the canonical basis (``v`` must lie in the subspace)."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coords: Sequence) -> Vector:
        red = self.field.reduce
        out = [0] * self.ambient_dim
        for c, row in zip(coords, self.basis):
            if c:
                for j, b in enumerate(row):
                    if b:
                        out[j] += c * b
        return tuple(red(x) for x in out)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, self.ambient_dim)
        # (a, b) with a.U + b.V = 0 gives a.U in the intersection
        stacked = Matrix._trusted(self.field, self.basis + other.basis, self.ambient_dim)
        left_kernel = stacked.T.nullspace()
        k = self.dim
        return Subspace(self.field, self.ambient_dim, [self.combine(c[:k]) for c in left_kernel.basis])

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(v in other for v in self.basis)

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def tensor(self, other: Subspace) -> Subspace:
        """``U (x) W``; the Kronecker product of two RREF bases is again RREF."""
        if self.field != other.field:
            raise DimensionError("fields differ")
        m = other.ambient_dim
        red = self.field.reduce
        rows = [tuple(red(a * b) for a in u for b in w) for u in self.basis for w in other.basis]
        pivots = [p * m + q for p in self.pivots for q in other.pivots]
        return Subspace._trusted(self.field, self.ambient_dim * m, rows, pivots)

    def image(self, m: Matrix) -> Subspace:
        if m.ncols != self.ambient_dim:
            raise DimensionError("matrix does not act on this ambient space")
        return Subspace(self.field, m.nrows, [m.apply(v) for v in self.basis])

    def annihilator(self) -> Subspace:
        """``{f : f(u) = 0 for all u}`` in dual coordinates."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient_dim)
        return self.matrix().nullspace()

    def complement_basis(self) -> list[Vector]:
        """Standard basis vectors at the non-pivot columns (a complement of the subspace)."""
        piv = set(self.pivots)
        z, o = self.field.zero, self.field.one
        return [tuple(o if j == i else z for j in range(self.ambient_dim)) for i in range(self.ambient_dim) if i not in piv]

    def quotient_basis(self, other: Subspace) -> list[Vector]:
        """Lift of a basis of ``self / (self & other)``."""
        return Quotient(self, self & other).reps


@dataclass(frozen=True)
class SubspaceOps:
    sum: Subspace
    intersection: Subspace
    contains: bool  # the second argument lies inside the first
    quotient_basis: tuple[Vector, ...]


def subspace_ops(u: Subspace, v: Subspace) -> SubspaceOps:
    u._check(v)
    inter = u & v
    return SubspaceOps(u + v, inter, v <= u, tuple(Quotient(u, inter).reps))


class Quotient:
    """``top / bottom`` for ``bottom <= top``, with lifted representatives.

    ``projector`` is a ``dim x ambient`` matrix whose restriction to ``top``
    sends a vector to its coordinates modulo ``bottom``.
    """

    def __init__(self, top: Subspace, bottom: Subspace):
        top._check(bottom)
        if not bottom <= top:
            raise ValueError("quotient needs bottom <= top")
        self.top, self.bottom = top, bottom
        field, n = top.field, top.ambient_dim
        running = bottom
        reps = []
        for v in top.basis:
            if v not in running:
                reps.append(v)
                running = Subspace(field, n, running.basis + (v,))
        self.reps = reps
        basis = list(bottom.basis) + reps
        span = Subspace(field, n, basis)
        for e in span.complement_basis():
            basis.append(e)
        full = Matrix.from_columns(field, basis, n)
        inv = full.inverse()
        k = bottom.dim
        self.projector = inv.submatrix(range(k, k + len(reps)), range(n))

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v: Sequence) -> Vector:
        if v not in self.top:
            raise ValueError("vector is not in the numerator space")
        return self.projector.apply(v)

    def lift(self, coords: Sequence) -> Vector:
        field = self.top.field
        out = [0] * self.top.ambient_dim
        for c, r in zip(coords, self.reps):
            if c:
                for j, b in enumerate(r):
                    out[j] += c * b
        return tuple(field.reduce(x) for x in out)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(n: int, field: Field, budget: int = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """Every subspace of ``field ** n`` exactly once, by RREF pivot pattern."""
    if not field.is_finite():
        raise BudgetExceeded(f"cannot enumerate subspaces over infinite {field!r}", count=-1)
    p = field.characteristic
    if p ** (n * n) > budget:
        total = count_subspaces(n, p)
        raise BudgetExceeded(
            f"{p}^{n * n} exceeds the budget {budget}: refusing to enumerate {total} subspaces of GF({p})^{n}",
            count=total,
        )
    return _enumerate(n, field)


def _enumerate(n: int, field: Field) -> Iterator[Subspace]:
    elements = field.elements()
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            pset = set(pivots)
            free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pset]
            for vals in product(elements, repeat=len(free)):
                rows = [[field.zero] * n for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = field.one
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                yield Subspace._trusted(field, n, [tuple(r) for r in rows], pivots)
