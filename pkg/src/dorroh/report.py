"""Pass/fail ledgers with exact witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import prod
from typing import Iterable, Iterator, Sequence

from .fields import Field
from .linalg import Matrix

Labels = tuple[str, ...]


class ConsistencyError(AssertionError):
    """Two independent decision routes disagreed."""


@dataclass(frozen=True)
class Condition:
    id: str
    passed: bool
    detail: str = ""
    witnesses: tuple[dict, ...] = ()

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
            "witnesses": [dict(w) for w in self.witnesses],
        }


@dataclass(frozen=True)
class AnalysisReport:
    conditions: tuple[Condition, ...] = ()
    tags: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __bool__(self) -> bool:
        return self.passed

    def __iter__(self) -> Iterator[Condition]:
        return iter(self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)

    def __getitem__(self, cid: str) -> Condition:
        for c in self.conditions:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def __contains__(self, cid: str) -> bool:
        return any(c.id == cid for c in self.conditions)

    def __add__(self, other: AnalysisReport) -> AnalysisReport:
        return AnalysisReport(self.conditions + other.conditions, {**self.tags, **other.tags})

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.conditions]

    def failures(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    def all_pass(self, ids: Iterable[str]) -> bool:
        return all(self[i].passed for i in ids)

    def prefixed(self, prefix: str) -> AnalysisReport:
        return AnalysisReport(
            tuple(Condition(prefix + c.id, c.passed, c.detail, c.witnesses) for c in self.conditions), self.tags
        )


def report(*conds: Condition | AnalysisReport) -> AnalysisReport:
    out: list[Condition] = []
    for c in conds:
        out.extend(c.conditions if isinstance(c, AnalysisReport) else [c])
    return AnalysisReport(tuple(out))


# -- rendering -------------------------------------------------------------

def basis_tuple(index: int, spaces: Sequence[Labels]) -> tuple[str, ...]:
    """Decode a tensor index (first factor major) into basis labels."""
    out = []
    for labels in reversed(spaces):
        index, r = divmod(index, len(labels))
        out.append(labels[r])
    return tuple(reversed(out))


def _coeff(field: Field, c) -> str:
    if field.characteristic:
        c = c % field.characteristic
        return str(c)
    return str(c)


def render_vector(field: Field, v: Sequence, spaces: Sequence[Labels]) -> str:
    """``2·x⊗x + -1/2·g⊗x``; coefficients are exact, ``0`` for the zero vector."""
    terms = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        name = "⊗".join(basis_tuple(i, spaces)) if spaces else "1"
        s = _coeff(field, c)
        terms.append(name if s == "1" else f"{s}·{name}")
    return " + ".join(terms) if terms else "0"


def compare(
    cid: str,
    lhs: Matrix,
    rhs: Matrix,
    domain: Sequence[Labels],
    codomain: Sequence[Labels],
    detail: str = "",
) -> Condition:
    """Equality of two linear maps, with one witness per differing basis input."""
    if lhs.shape != rhs.shape:
        raise ValueError(f"{cid}: shapes {lhs.shape} and {rhs.shape} differ")
    if lhs.rows == rhs.rows:
        return Condition(cid, True, detail)
    field = lhs.field
    witnesses = []
    for j in range(lhs.ncols):
        a, b = lhs.col(j), rhs.col(j)
        if a != b:
            witnesses.append(
                {
                    "input": "⊗".join(basis_tuple(j, domain)) if domain else "1",
                    "lhs": render_vector(field, a, codomain),
                    "rhs": render_vector(field, b, codomain),
                }
            )
    return Condition(cid, False, detail, tuple(witnesses))


def check(cid: str, items: Iterable[tuple[bool, dict]], detail: str = "") -> Condition:
    """Fold ``(ok, witness)`` pairs into one condition."""
    wit = tuple(w for ok, w in items if not ok)
    return Condition(cid, not wit, detail, wit)


def tensor_labels(*spaces: Labels) -> list[Labels]:
    return list(spaces)


def space_dim(spaces: Sequence[Labels]) -> int:
    return prod(len(s) for s in spaces)
