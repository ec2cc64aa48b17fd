"""Classical linear codes: canonical representation, duals, weights, files.

A code is stored by the reduced row echelon form of its generator matrix,
so two codes are equal exactly when they describe the same row space.
Minimum and relative minimum weights come from exhaustive enumeration of
the codeword set, guarded by an explicit visit budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .enumeration import DEFAULT_BUDGET, minimum_weight_scan
from .errors import CodeFormatError, FieldMismatchError
from .fields import FiniteField, field_from_designator
from .linalg import MatrixGF, mat_vec, rank, row_space, row_space_intersect, stack


@dataclass(frozen=True)
class WeightReport:
    """Outcome of a minimum-weight computation.

    value is None exactly when the target set was empty.  exact is False
    for reports that only carry an algebraic lower bound; enumerated is
    the number of codewords visited to produce the report.
    """

    value: int | None
    exact: bool
    enumerated: int

    @property
    def is_empty(self) -> bool:
        return self.value is None

    def as_dict(self) -> dict:
        return {"value": self.value, "exact": self.exact, "enumerated": self.enumerated}

    def display(self) -> str:
        if self.value is None:
            return "empty"
        return str(self.value) if self.exact else f">={self.value}"


class LinearCode:
    """A linear [n, k] code over a finite field, kept in canonical form."""

    def __init__(self, field: FiniteField, gen: MatrixGF):
        if gen.field != field:
            raise FieldMismatchError(f"{gen.field} generator for {field} code")
        self.field = field
        self.n = gen.cols
        canonical = row_space(gen)
        self.k = canonical.rows
        self.gen = canonical

    @classmethod
    def from_rows(cls, field: FiniteField, rows: Iterable[Sequence[int]], n: int | None = None) -> "LinearCode":
        rows = [list(r) for r in rows]
        if rows:
            return cls(field, MatrixGF.from_rows(field, rows))
        if n is None:
            raise ValueError("length n required for a code with no rows")
        return cls(field, MatrixGF.zeros(field, 0, n))

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "LinearCode":
        return cls(field, MatrixGF.zeros(field, 0, n))

    @classmethod
    def full(cls, field: FiniteField, n: int) -> "LinearCode":
        return cls(field, MatrixGF.identity(field, n))

    @cached_property
    def parity_check(self) -> MatrixGF:
        """Generator of the dual code; x is a codeword iff its syndrome is 0."""
        from .linalg import null_space

        return null_space(self.gen)

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.parity_check)

    def contains(self, vec: Sequence[int]) -> bool:
        v = np.asarray(vec, dtype=np.int64)
        if v.shape != (self.n,):
            raise ValueError(f"expected a length-{self.n} vector")
        if self.k == 0:
            return not v.any()
        if self.k == self.n:
            return True
        return not mat_vec(self.parity_check, v).any()

    def is_subcode_of(self, other: "LinearCode") -> bool:
        if self.field != other.field or self.n != other.n:
            return False
        return rank(stack(other.gen, self.gen)) == other.k

    def intersect(self, other: "LinearCode") -> "LinearCode":
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return LinearCode(self.field, row_space_intersect(self.gen, other.gen))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.gen == other.gen

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.gen))

    def __repr__(self) -> str:
        return f"[{self.n},{self.k}] code over GF({self.field.designator})"


def code_from_rows(field: FiniteField, rows: Iterable[Sequence[int]], n: int | None = None) -> LinearCode:
    return LinearCode.from_rows(field, rows, n=n)


def dual(code: LinearCode) -> LinearCode:
    return code.dual()


def symplectic_weight(vec: Sequence[int]) -> int:
    """Number of positions i with (a_i, b_i) != (0, 0) for vec = (a | b)."""
    v = np.asarray(vec, dtype=np.int64)
    if v.ndim != 1 or v.size % 2 != 0:
        raise ValueError("symplectic weight needs a flat (a | b) vector of even length")
    half = v.size // 2
    return int((v[:half] | v[half:]).astype(bool).sum())


def min_weight(code: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightReport:
    """Exact minimum Hamming weight by exhaustive enumeration.

    The zero code has no nonzero codeword, reported as the empty marker.
    Raises BudgetExceededError before visiting anything when q^k > budget.
    """
    if code.k == 0:
        return WeightReport(value=None, exact=True, enumerated=0)
    value, visited = minimum_weight_scan(code.gen.entries, code.field, budget=budget)
    assert value is not None
    return WeightReport(value=value, exact=True, enumerated=visited)


def relative_min_weight(a: LinearCode, b: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightReport:
    """Minimum weight of codewords of a outside the intersection with b.

    This is the minimum over a \\ (a intersect b); the empty marker is
    returned when a is contained in b (decided without enumeration).
    """
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    if a.is_subcode_of(b):
        return WeightReport(value=None, exact=True, enumerated=0)
    if b.k == 0:
        return min_weight(a, budget=budget)

    check = b.parity_check

    def member(vec: np.ndarray) -> bool:
        if check.rows == 0:
            return True
        return not mat_vec(check, vec).any()

    value, visited = minimum_weight_scan(
        a.gen.entries, a.field, is_member=member, budget=budget
    )
    assert value is not None, "non-subcode must have a word outside b"
    return WeightReport(value=value, exact=True, enumerated=visited)


# -- code files ---------------------------------------------------------

def format_code(code: LinearCode) -> str:
    lines = [
        f"field {code.field.designator}",
        f"n {code.n}",
        f"k {code.k}",
    ]
    for i in range(code.k):
        lines.append("row " + " ".join(str(v) for v in code.gen.row(i)))
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    """Parse the code file format; raises CodeFormatError with a location."""
    tokens: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            tokens.append((lineno, body.split()))

    def expect_header(index: int, name: str) -> tuple[int, list[str]]:
        if index >= len(tokens):
            raise CodeFormatError(f"missing '{name}' header")
        lineno, parts = tokens[index]
        if parts[0] != name:
            raise CodeFormatError(f"expected '{name}' header, got {parts[0]!r}", lineno)
        if len(parts) != 2:
            raise CodeFormatError(f"'{name}' header needs exactly one value", lineno)
        return lineno, parts

    lineno, parts = expect_header(0, "field")
    try:
        field = field_from_designator(parts[1])
    except ValueError as exc:
        raise CodeFormatError(str(exc), lineno, 2) from None

    def int_header(index: int, name: str) -> int:
        lineno, parts = expect_header(index, name)
        try:
            value = int(parts[1])
        except ValueError:
            raise CodeFormatError(f"'{name}' must be an integer", lineno, 2) from None
        if value < 0:
            raise CodeFormatError(f"'{name}' must be nonnegative", lineno, 2)
        return value

    n = int_header(1, "n")
    k = int_header(2, "k")
    if n < 1:
        raise CodeFormatError("'n' must be positive", tokens[1][0], 2)
    if k > n:
        raise CodeFormatError(f"k={k} exceeds n={n}", tokens[2][0], 2)

    rows = []
    for i in range(k):
        index = 3 + i
        if index >= len(tokens):
            raise CodeFormatError(f"expected {k} 'row' lines, found {i}")
        lineno, parts = tokens[index]
        if parts[0] != "row":
            raise CodeFormatError(f"expected 'row', got {parts[0]!r}", lineno, 1)
        if len(parts) != n + 1:
            raise CodeFormatError(
                f"row needs {n} entries, found {len(parts) - 1}", lineno
            )
        row = []
        for j, tok in enumerate(parts[1:], start=2):
            try:
                v = int(tok)
            except ValueError:
                raise CodeFormatError(f"bad entry {tok!r}", lineno, j) from None
            if not 0 <= v < field.order:
                raise CodeFormatError(
                    f"entry {v} outside GF({field.designator})", lineno, j
                )
            row.append(v)
        rows.append(row)
    if len(tokens) > 3 + k:
        lineno, parts = tokens[3 + k]
        raise CodeFormatError(f"unexpected extra line starting {parts[0]!r}", lineno)

    code = LinearCode.from_rows(field, rows, n=n)
    if code.k != k:
        raise CodeFormatError(
            f"declared k={k} but rows span only {code.k} dimensions"
        )
    return code


def read_code_file(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read())


def write_code_file(code: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(code))
