"""Line-oriented text format for structure constants.

Grammar (one statement per line, ``#`` starts a comment)::

    document  = { line } ;
    line      = field | space | pair | entry | sub ;
    field     = "field" ( "Q" | "GF" prime ) ;
    space     = "space" name dim [ "[" label { "," label } "]" ] ;
    pair      = "pair" name name ;
    entry     = key name "(" index { "," index } ")" "=" scalar ;
    key       = "mult" | "unit" | "comult" | "counit" | "antipode" | "deg"
              | "actL" | "actR" | "coactL" | "coactR" ;
    sub       = "sub" name "=" "[" [ vector { "," vector } ] "]" ;
    vector    = "(" scalar { "," scalar } ")" ;
    scalar    = integer [ "/" integer ] [ "mod" prime ] ;

Spaces must be declared before they are used, and ``pair`` before any
action or coaction entry.  Unlisted entries are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .fields import Field, FieldError, Scalar, field_from_spec, field_spec
from .linalg import Matrix, Subspace, Vector
from .report import AnalysisReport, Condition
from .structures import (
    Algebra,
    Bialgebra,
    BicomoduleCoaction,
    BimoduleAction,
    Coalgebra,
    DorrohPair,
    DorrohPairAlgebras,
    DorrohPairCoalgebras,
)

# arity and which space each index refers to ("S" the named space, "H" the pair base)
KEYS: dict[str, tuple[str, ...]] = {
    "mult": ("S", "S", "S"),
    "unit": ("S",),
    "comult": ("S", "S", "S"),
    "counit": ("S",),
    "antipode": ("S", "S"),
    "deg": ("S",),
    "actL": ("H", "S", "S"),
    "actR": ("S", "H", "S"),
    "coactL": ("S", "H", "S"),
    "coactR": ("S", "S", "H"),
}
ALGEBRA_KEYS = ("mult", "unit", "actL", "actR")
COALGEBRA_KEYS = ("comult", "counit", "coactL", "coactR")

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_LABEL = r"[^\s,\[\]()=#]+"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.col = line, col


class DocumentError(ValueError):
    """The document is well formed but lacks what a command needs."""


@dataclass
class StructureDocument:
    field: Field
    spaces: dict[str, tuple[str, ...]] = dc_field(default_factory=dict)
    pair: tuple[str, str] | None = None
    tables: dict[tuple[str, str], dict[tuple[int, ...], Scalar]] = dc_field(default_factory=dict)
    subs: dict[str, tuple[Vector, ...]] = dc_field(default_factory=dict)

    # -- building ---------------------------------------------------------
    def add_space(self, name: str, labels: Sequence[str]) -> None:
        if name in self.spaces:
            raise DocumentError(f"space {name} declared twice")
        self.spaces[name] = tuple(labels)

    def table(self, key: str, space: str) -> dict[tuple[int, ...], Scalar]:
        return self.tables.setdefault((key, space), {})

    def has(self, key: str, space: str) -> bool:
        return (key, space) in self.tables

    def set_algebra(self, name: str, A: Algebra) -> None:
        n = A.dim
        t = self.table("mult", name)
        for k in range(n):
            for ij in range(n * n):
                if A.mult[k, ij]:
                    t[(ij // n, ij % n, k)] = A.mult[k, ij]
        if A.unit is not None:
            u = self.table("unit", name)
            u.update({(i,): c for i, c in enumerate(A.unit) if c})

    def set_coalgebra(self, name: str, C: Coalgebra) -> None:
        n = C.dim
        t = self.table("comult", name)
        for ij in range(n * n):
            for k in range(n):
                if C.comult[ij, k]:
                    t[(k, ij // n, ij % n)] = C.comult[ij, k]
        if C.counit is not None:
            c = self.table("counit", name)
            c.update({(i,): x for i, x in enumerate(C.counit) if x})

    def set_antipode(self, name: str, S: Matrix) -> None:
        t = self.table("antipode", name)
        for i in range(S.ncols):
            for j in range(S.nrows):
                if S[j, i]:
                    t[(i, j)] = S[j, i]

    def set_degrees(self, name: str, degrees: Sequence[int]) -> None:
        t = self.table("deg", name)
        t.update({(i,): int(d) for i, d in enumerate(degrees) if d})

    def set_action(self, name: str, h: int, action: BimoduleAction) -> None:
        n = len(self.spaces[name])
        left, right = self.table("actL", name), self.table("actR", name)
        for y in range(n):
            for a in range(h):
                for x in range(n):
                    if action.left[y, a * n + x]:
                        left[(a, x, y)] = action.left[y, a * n + x]
                    if action.right[y, x * h + a]:
                        right[(x, a, y)] = action.right[y, x * h + a]

    def set_coaction(self, name: str, h: int, coaction: BicomoduleCoaction) -> None:
        n = len(self.spaces[name])
        left, right = self.table("coactL", name), self.table("coactR", name)
        for x in range(n):
            for a in range(h):
                for y in range(n):
                    if coaction.left[a * n + y, x]:
                        left[(x, a, y)] = coaction.left[a * n + y, x]
                    if coaction.right[y * h + a, x]:
                        right[(x, y, a)] = coaction.right[y * h + a, x]

    # -- reading back -----------------------------------------------------
    def _dim(self, name: str) -> int:
        if name not in self.spaces:
            raise DocumentError(f"unknown space {name}")
        return len(self.spaces[name])

    def _matrix(self, nrows: int, ncols: int, entries) -> Matrix:
        return Matrix.from_entries(self.field, nrows, ncols, entries)

    def algebra(self, name: str) -> Algebra:
        n = self._dim(name)
        mult = self._matrix(n, n * n, {(k, i * n + j): v for (i, j, k), v in self.tables.get(("mult", name), {}).items()})
        unit = None
        if self.has("unit", name):
            u = [self.field.zero] * n
            for (i,), v in self.tables[("unit", name)].items():
                u[i] = v
            unit = tuple(u)
        return Algebra(self.field, mult, unit, self.spaces[name])

    def coalgebra(self, name: str) -> Coalgebra:
        n = self._dim(name)
        comult = self._matrix(n * n, n, {(i * n + j, k): v for (k, i, j), v in self.tables.get(("comult", name), {}).items()})
        counit = None
        if self.has("counit", name):
            c = [self.field.zero] * n
            for (i,), v in self.tables[("counit", name)].items():
                c[i] = v
            counit = tuple(c)
        return Coalgebra(self.field, comult, counit, self.spaces[name])

    def antipode(self, name: str) -> Matrix | None:
        if not self.has("antipode", name):
            return None
        n = self._dim(name)
        return self._matrix(n, n, {(j, i): v for (i, j), v in self.tables[("antipode", name)].items()})

    def degrees(self, name: str) -> list[int] | None:
        if not self.has("deg", name):
            return None
        d = [0] * self._dim(name)
        for (i,), v in self.tables[("deg", name)].items():
            d[i] = int(v)
        return d

    def bialgebra(self, name: str | None = None) -> Bialgebra:
        name = name or self.single_space()
        return Bialgebra(self.algebra(name), self.coalgebra(name), self.antipode(name))

    def single_space(self) -> str:
        if len(self.spaces) != 1:
            raise DocumentError(f"expected exactly one space, found {len(self.spaces)}")
        return next(iter(self.spaces))

    @property
    def has_algebra_data(self) -> bool:
        """Algebra data is declared, or nothing at all is (the zero algebra)."""
        return any(k in ALGEBRA_KEYS for k, _ in self.tables) or not self.has_coalgebra_data

    @property
    def has_coalgebra_data(self) -> bool:
        return any(k in COALGEBRA_KEYS for k, _ in self.tables)

    def _pair_names(self) -> tuple[str, str]:
        if self.pair is None:
            raise DocumentError("document declares no pair")
        return self.pair

    def pair_algebras(self) -> DorrohPairAlgebras:
        H, I = self._pair_names()
        h, n = self._dim(H), self._dim(I)
        left = self._matrix(n, h * n, {(y, a * n + x): v for (a, x, y), v in self.tables.get(("actL", I), {}).items()})
        right = self._matrix(n, n * h, {(y, x * h + a): v for (x, a, y), v in self.tables.get(("actR", I), {}).items()})
        return DorrohPairAlgebras(self.algebra(H), self.algebra(I), BimoduleAction(left, right))

    def pair_coalgebras(self) -> DorrohPairCoalgebras:
        H, I = self._pair_names()
        h, n = self._dim(H), self._dim(I)
        left = self._matrix(h * n, n, {(a * n + y, x): v for (x, a, y), v in self.tables.get(("coactL", I), {}).items()})
        right = self._matrix(n * h, n, {(y * h + a, x): v for (x, y, a), v in self.tables.get(("coactR", I), {}).items()})
        return DorrohPairCoalgebras(self.coalgebra(H), self.coalgebra(I), BicomoduleCoaction(left, right))

    def dorroh_pair(self) -> DorrohPair:
        H, _ = self._pair_names()
        return DorrohPair(self.pair_algebras(), self.pair_coalgebras(), self.antipode(H))

    @property
    def ambient_dim(self) -> int:
        if self.pair is not None:
            return sum(self._dim(s) for s in self.pair)
        return self._dim(self.single_space())

    def subspace(self, name: str) -> Subspace:
        if name not in self.subs:
            raise DocumentError(f"unknown subspace {name}")
        return Subspace(self.field, self.ambient_dim, self.subs[name])


# -- parsing ----------------------------------------------------------------

_FIELD_RE = re.compile(r"^field\s+(.+?)\s*$")
_SPACE_RE = re.compile(rf"^space\s+({_NAME})\s+(\d+)\s*(?:\[\s*(.*?)\s*\])?\s*$")
_PAIR_RE = re.compile(rf"^pair\s+({_NAME})\s+({_NAME})\s*$")
_ENTRY_RE = re.compile(rf"^({_NAME})\s+({_NAME})\s*\(\s*([^)]*)\)\s*=\s*(.+?)\s*$")
_SUB_RE = re.compile(rf"^sub\s+({_NAME})\s*=\s*\[(.*)\]\s*$")
_LABEL_RE = re.compile(rf"^{_LABEL}$")


def _col(raw: str, token: str) -> int:
    i = raw.find(token)
    return i + 1 if i >= 0 else 1


def parse_document(text: str) -> StructureDocument:
    doc: StructureDocument | None = None
    seen: set[tuple[str, str, tuple[int, ...]]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        err = lambda msg, tok=line: ParseError(msg, lineno, _col(raw, tok))  # noqa: E731
        if (m := _FIELD_RE.match(line)) is not None:
            if doc is not None:
                raise err("field declared twice")
            try:
                doc = StructureDocument(field_from_spec(m.group(1)))
            except FieldError as e:
                raise err(str(e), m.group(1)) from None
            continue
        if doc is None:
            raise err("the first statement must be 'field'")
        keyword = line.split()[0]
        if keyword == "space":
            m = _SPACE_RE.match(line)
            if m is None:
                raise err("malformed space declaration")
            name, dim = m.group(1), int(m.group(2))
            if name in doc.spaces:
                raise err(f"space {name} declared twice", name)
            if m.group(3) is None:
                labels = tuple(f"{name.lower()}{i}" for i in range(dim))
            else:
                labels = tuple(x.strip() for x in m.group(3).split(",")) if m.group(3) else ()
                bad = [x for x in labels if not _LABEL_RE.match(x)]
                if bad:
                    raise err(f"bad basis label {bad[0]!r}", bad[0] or "[")
                if len(labels) != dim or len(set(labels)) != dim:
                    raise err(f"space {name} needs {dim} distinct labels", "[")
            doc.spaces[name] = labels
        elif keyword == "pair":
            m = _PAIR_RE.match(line)
            if m is None:
                raise err("malformed pair declaration")
            if doc.pair is not None:
                raise err("pair declared twice")
            for s in m.groups():
                if s not in doc.spaces:
                    raise err(f"unknown space {s}", s)
            if m.group(1) == m.group(2):
                raise err("a pair needs two different spaces", m.group(2))
            doc.pair = (m.group(1), m.group(2))
        elif keyword == "sub":
            m = _SUB_RE.match(line)
            if m is None:
                raise err("malformed sub declaration")
            name = m.group(1)
            if name in doc.subs:
                raise err(f"sub {name} declared twice", name)
            try:
                n = doc.ambient_dim
            except DocumentError as e:
                raise err(str(e)) from None
            vecs = []
            body = m.group(2).strip()
            for vm in re.finditer(r"\(([^()]*)\)", body):
                parts = [p.strip() for p in vm.group(1).split(",")] if vm.group(1).strip() else []
                if len(parts) != n:
                    raise err(f"vector of length {len(parts)} in ambient dimension {n}", vm.group(0))
                try:
                    vecs.append(tuple(doc.field.parse(p) for p in parts))
                except FieldError as e:
                    raise err(str(e), vm.group(0)) from None
            if re.sub(r"\(([^()]*)\)", "", body).replace(",", "").strip():
                raise err("sub expects a list of parenthesised vectors", "[")
            doc.subs[name] = tuple(vecs)
        elif keyword in KEYS:
            m = _ENTRY_RE.match(line)
            if m is None:
                raise err(f"malformed {keyword} entry")
            key, space, idx_text, value = m.groups()
            if space not in doc.spaces:
                raise err(f"unknown space {space}", space)
            roles = KEYS[key]
            if "H" in roles:
                if doc.pair is None or doc.pair[1] != space:
                    raise err(f"{key} entries need 'pair H {space}' declared first", space)
            try:
                idx = tuple(int(p) for p in idx_text.split(","))
            except ValueError:
                raise err("indices must be integers", idx_text) from None
            if len(idx) != len(roles):
                raise err(f"{key} takes {len(roles)} indices, got {len(idx)}", idx_text)
            for i, role in zip(idx, roles):
                bound = len(doc.spaces[doc.pair[0] if role == "H" else space])
                if not 0 <= i < bound:
                    raise err(f"index {i} out of range 0..{bound - 1}", idx_text)
            if (key, space, idx) in seen:
                raise err(f"duplicate {key} entry for {space} {idx}", idx_text)
            seen.add((key, space, idx))
            try:
                v = int(value) if key == "deg" else doc.field.parse(value)
            except (FieldError, ValueError) as e:
                raise err(str(e), value) from None
            if key == "deg" and v < 0:
                raise err("degrees must be non-negative", value)
            t = doc.table(key, space)
            if v != 0:
                t[idx] = v
        else:
            raise err(f"unknown key {keyword!r}", keyword)
    if doc is None:
        raise ParseError("empty document: expected 'field'", 1, 1)
    return doc


def _scalar(field: Field, v) -> str:
    if field.characteristic:
        return str(v % field.characteristic)
    return str(v)


def serialize_document(doc: StructureDocument) -> str:
    F = doc.field
    out = [f"field {field_spec(F)}"]
    for name, labels in doc.spaces.items():
        out.append(f"space {name} {len(labels)} [{','.join(labels)}]")
    if doc.pair is not None:
        out.append(f"pair {doc.pair[0]} {doc.pair[1]}")
    order = {k: i for i, k in enumerate(KEYS)}
    space_order = {s: i for i, s in enumerate(doc.spaces)}
    for key, space in sorted(doc.tables, key=lambda ks: (space_order[ks[1]], order[ks[0]])):
        entries = doc.tables[(key, space)]
        if not entries:
            if not doc.spaces[space]:
                continue
            zero = (0,) * len(KEYS[key])
            out.append(f"{key} {space} ({','.join(map(str, zero))}) = 0")
        for idx in sorted(entries):
            v = entries[idx]
            out.append(f"{key} {space} ({','.join(map(str, idx))}) = {v if key == 'deg' else _scalar(F, v)}")
    for name, vecs in doc.subs.items():
        body = ", ".join("(" + ",".join(_scalar(F, x) for x in v) + ")" for v in vecs)
        out.append(f"sub {name} = [{body}]")
    return "\n".join(out) + "\n"


def validate_document(doc: StructureDocument) -> AnalysisReport:
    """Every axiom the declared data must satisfy on its own (no bialgebra compatibility)."""
    from .hopf import grading_violations
    from .structures import validate_algebra, validate_coalgebra

    parts: list[AnalysisReport] = []
    alg, coal = doc.has_algebra_data, doc.has_coalgebra_data
    if doc.pair is not None:
        if alg:
            parts.append(doc.pair_algebras().validate())
        if coal:
            parts.append(doc.pair_coalgebras().validate())
        H = doc.pair[0]
        if alg and coal and doc.has("antipode", H):
            parts.append(_bialgebra_only(doc.bialgebra(H), "base."))
    else:
        for name in doc.spaces:
            if alg:
                parts.append(validate_algebra(doc.algebra(name), f"{name}."))
            if coal:
                parts.append(validate_coalgebra(doc.coalgebra(name), f"{name}."))
            if alg and coal:
                B = doc.bialgebra(name)
                parts.append(_bialgebra_only(B, f"{name}."))
                deg = doc.degrees(name)
                if deg is not None:
                    bad = grading_violations(B, deg)
                    parts.append(AnalysisReport((
                        Condition(f"{name}.grading.respected", not bad, "", tuple({"violation": b} for b in bad)),
                    )))
    out = AnalysisReport()
    for p in parts:
        out = out + p
    return out


def _bialgebra_only(B: Bialgebra, prefix: str) -> AnalysisReport:
    rep = B.validate(prefix)
    keep = tuple(c for c in rep.conditions if ".algebra." not in "." + c.id and ".coalgebra." not in "." + c.id)
    return AnalysisReport(keep)
