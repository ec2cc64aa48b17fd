"""Asymmetric entanglement-assisted code parameters from classical pairs.

A pair of classical codes C1, C2 of the same length over the same field
determines an asymmetric EAQECC with parameters [[n, n-k1-k2+c, dz/dx; c]]_q
where c is the rank of the pairing between the two codes,
dz is the minimum weight of dual(C1) outside C2, and dx the minimum
weight of dual(C2) outside C1.  This module computes those parameters,
the symplectic-rank form of c, the puncturing trade-off, and a small
demonstration that growing C1 raises dz without touching dx.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode, WeightReport, min_weight, relative_min_weight
from .enumeration import DEFAULT_BUDGET
from .errors import BudgetExceededError, DegeneratePairError, FieldMismatchError
from .fields import FiniteField
from .linalg import MatrixGF, mat_mul, rank, row_space_intersect, stack


@dataclass(frozen=True)
class AsymEaqeccParams:
    """Parameters [[n, k, dz/dx; c]]_q; k1 and k2 are kept when known."""

    q: int
    n: int
    k: int
    dz: WeightReport
    dx: WeightReport
    c: int
    k1: int | None = None
    k2: int | None = None

    def __post_init__(self):
        if self.q < 2 or self.n < 1:
            raise ValueError("need q >= 2 and n >= 1")
        if self.k < 0 or self.c < 0:
            raise ValueError("k and c must be nonnegative")
        if (self.k1 is None) != (self.k2 is None):
            raise ValueError("k1 and k2 must be supplied together")
        if self.k1 is not None:
            if self.k != self.n - self.k1 - self.k2 + self.c:
                raise ValueError("k does not match n - k1 - k2 + c")
            if not self.k1 + self.k2 - self.n <= self.c <= min(self.k1, self.k2):
                raise ValueError("c outside [k1 + k2 - n, min(k1, k2)]")

    def display(self) -> str:
        return (
            f"[[{self.n}, {self.k}, {self.dz.display()}/{self.dx.display()};"
            f" {self.c}]]_{self.q}"
        )

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "dz": self.dz.as_dict(),
            "dx": self.dx.as_dict(),
            "c": self.c,
            "k1": self.k1,
            "k2": self.k2,
        }


def _check_pair(c1: LinearCode, c2: LinearCode) -> None:
    if c1.field != c2.field:
        raise FieldMismatchError(f"{c1.field} vs {c2.field}")
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")


def entanglement_c(c1: LinearCode, c2: LinearCode) -> int:
    """Number of entangled pairs the code pair consumes.

    This is the rank of G1 G2^T for any generator matrices of the two
    codes; it vanishes exactly when C2 is orthogonal to C1.
    """
    _check_pair(c1, c2)
    c = rank(mat_mul(c1.gen, c2.gen.transpose()))
    # the rank of a pairing can be read off either factor
    assert c == c1.k - row_space_intersect(c1.gen, c2.parity_check).rows
    assert c == c2.k - row_space_intersect(c2.gen, c1.parity_check).rows
    return c


def _relative_or_floor(a: LinearCode, b: LinearCode, budget, floor, label):
    try:
        report = relative_min_weight(a, b, budget=budget)
    except BudgetExceededError:
        if floor is None:
            raise
        return WeightReport(value=floor, exact=False, enumerated=0)
    if report.is_empty:
        raise DegeneratePairError(
            f"{label} is undefined: dual code lies inside the other code"
        )
    if floor is not None:
        assert report.value >= floor, f"{label} bound {floor} above exact value"
    return report


def asym_params(
    c1: LinearCode,
    c2: LinearCode,
    budget: int = DEFAULT_BUDGET,
    *,
    dz_floor: int | None = None,
    dx_floor: int | None = None,
) -> AsymEaqeccParams:
    """Parameters of the asymmetric EAQECC built from (C1, C2).

    dz_floor and dx_floor are algebraic lower bounds used when the
    corresponding exhaustive distance computation exceeds the budget; the
    resulting report then carries exact=False.  Without a floor the
    budget error propagates.
    """
    _check_pair(c1, c2)
    c = entanglement_c(c1, c2)
    n, k1, k2 = c1.n, c1.k, c2.k
    dz = _relative_or_floor(c1.dual(), c2, budget, dz_floor, "dz")
    dx = _relative_or_floor(c2.dual(), c1, budget, dx_floor, "dx")
    return AsymEaqeccParams(
        q=c1.field.order, n=n, k=n - k1 - k2 + c, dz=dz, dx=dx, c=c, k1=k1, k2=k2
    )


def css_stack(c1: LinearCode, c2: LinearCode) -> tuple[MatrixGF, MatrixGF]:
    """Stacked check matrices (HX, HZ) with X checks from C1, Z from C2."""
    _check_pair(c1, c2)
    field = c1.field
    hx = stack(c1.gen, MatrixGF.zeros(field, c2.k, c1.n))
    hz = stack(MatrixGF.zeros(field, c1.k, c1.n), c2.gen)
    return hx, hz


def symplectic_c(hx: MatrixGF, hz: MatrixGF) -> int:
    """Entanglement count from check matrices: rank(HX HZ^T - HZ HX^T)/2.

    The matrix is alternating, so its rank is even in every
    characteristic; an odd rank would mean a bug, not bad input.
    """
    if hx.field != hz.field:
        raise FieldMismatchError(f"{hx.field} vs {hz.field}")
    if hx.shape != hz.shape:
        raise ValueError(f"shape mismatch: {hx.shape} vs {hz.shape}")
    field = hx.field
    prod = mat_mul(hx, hz.transpose())
    neg = MatrixGF(field, field.neg_table[mat_mul(hz, hx.transpose()).entries])
    form = MatrixGF(field, field.add_table[prod.entries, neg.entries])
    r = rank(form)
    assert r % 2 == 0, "alternating form with odd rank"
    return r // 2


def punctured_params(
    c1: LinearCode,
    c2: LinearCode,
    c: int,
    budget: int = DEFAULT_BUDGET,
) -> AsymEaqeccParams:
    """Trade c qudits of length for c entangled pairs, given C2 inside C1.

    Requires 1 <= c <= min(d(dual C1), d(C2)) - 1.  The distances reported
    are computed from the unpunctured pair: dz = wt(dual(C2) \\ dual(C1)),
    dx = wt(C1 \\ C2).
    """
    _check_pair(c1, c2)
    if not c2.is_subcode_of(c1):
        raise ValueError("puncturing needs C2 contained in C1")
    d_dual1 = min_weight(c1.dual(), budget=budget)
    d_2 = min_weight(c2, budget=budget)
    if d_dual1.is_empty or d_2.is_empty:
        raise ValueError("puncturing needs both d(dual C1) and d(C2) defined")
    cap = min(d_dual1.value, d_2.value) - 1
    if not 1 <= c <= cap:
        raise ValueError(f"c must lie in [1, {cap}], got {c}")
    dz = relative_min_weight(c2.dual(), c1.dual(), budget=budget)
    dx = relative_min_weight(c1, c2, budget=budget)
    assert not dz.is_empty and not dx.is_empty  # strict nesting
    return AsymEaqeccParams(
        q=c1.field.order,
        n=c1.n - c,
        k=c1.k - c2.k + c,
        dz=dz,
        dx=dx,
        c=c,
    )


def enlargement_demo(
    field: FiniteField, budget: int = DEFAULT_BUDGET
) -> tuple[AsymEaqeccParams, AsymEaqeccParams]:
    """Show that enlarging C1 raises dz while dx and the rate stand still.

    Over a field with q >= 4 elements and n = q - 1, the pair
    (E_{2}, E_{0, n-1}) of evaluation codes has dz = 2; replacing the
    first code by E_{1, 2} gives dz >= 3 at the same k and dx.  At q = 4
    the length is too short and the construction degenerates.
    """
    from .bch import evaluation_code

    if field.order < 4:
        raise ValueError("demonstration needs a field with at least 4 elements")
    n = field.order - 1
    c1 = evaluation_code(field, n, [2]).code
    c2 = evaluation_code(field, n, [0, n - 1]).code
    enlarged = evaluation_code(field, n, [1, 2]).code
    before = asym_params(c1, c2, budget=budget)
    after = asym_params(enlarged, c2, budget=budget)
    assert after.dx == before.dx, "dx must not move"
    assert after.k == before.k and after.n == before.n, "rate must not move"
    assert after.dz.value > before.dz.value, "dz must grow"
    return before, after
