"""BCH-style constructions: cosets, evaluation codes, subfield-subcodes.

A length n coprime to q splits {0,...,n-1} into q-cyclotomic cosets.
Unions of cosets select monomial exponent sets Delta; evaluating those
monomials at the n-th roots of unity in a big field GF(p^l) and cutting
down to GF(q) by the trace yields the classical codes whose pairs drive
the asymmetric EAQECC factory at the bottom of this module.  Distance
floors come from the consecutive-run (BCH) bound and the
arithmetic-progression (Hartmann-Tzeng) generalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .codes import LinearCode, WeightReport
from .eaqecc import AsymEaqeccParams, asym_params
from .enumeration import DEFAULT_BUDGET
from .errors import FieldMismatchError
from .fields import (
    FiniteField,
    field_create,
    prime_power_decomposition,
    primitive_nth_root,
    subfield_embedding,
)
from .linalg import MatrixGF


class CosetStructure:
    """The q-cyclotomic cosets of {0,...,n-1} with sorted representatives."""

    def __init__(self, n: int, q: int):
        prime_power_decomposition(q)
        if n < 1:
            raise ValueError("n must be positive")
        if gcd(n, q) != 1:
            raise ValueError(f"n={n} and q={q} must be coprime")
        self.n = n
        self.q = q
        rep_of: dict[int, int] = {}
        cosets = []
        for a in range(n):
            if a in rep_of:
                continue
            orbit = [a]
            x = (a * q) % n
            while x != a:
                orbit.append(x)
                x = (x * q) % n
            for x in orbit:
                rep_of[x] = a
            cosets.append(tuple(sorted(orbit)))
        self._rep_of = rep_of
        self.cosets = tuple(cosets)
        self.reps = tuple(c[0] for c in cosets)
        self.sizes = tuple(len(c) for c in cosets)
        self._coset_by_rep = {c[0]: c for c in cosets}

    @property
    def z(self) -> int:
        """Index of the last nonzero representative (reps are a_0..a_z)."""
        return len(self.reps) - 1

    def rep_of(self, x: int) -> int:
        return self._rep_of[x % self.n]

    def coset_of(self, x: int) -> tuple[int, ...]:
        return self._coset_by_rep[self.rep_of(x)]

    def size_of(self, x: int) -> int:
        return len(self.coset_of(x))

    def closure(self, labels: Iterable[int]) -> tuple[int, ...]:
        """Union of the cosets through the given elements, sorted."""
        out: set[int] = set()
        for a in labels:
            out.update(self.coset_of(a))
        return tuple(sorted(out))

    def is_closed(self, delta: Iterable[int]) -> bool:
        d = set(delta)
        return all((a * self.q) % self.n in d for a in d)

    def reps_in(self, delta: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted({self.rep_of(a) for a in delta}))

    def __repr__(self) -> str:
        return f"CosetStructure(n={self.n}, q={self.q}, reps={list(self.reps)})"


@lru_cache(maxsize=None)
def cyclotomic_cosets(n: int, q: int) -> CosetStructure:
    return CosetStructure(n, q)


def reciprocal_rep(structure: CosetStructure, a: int) -> int:
    """Representative of the coset containing n - a."""
    if a not in structure._coset_by_rep:
        raise ValueError(f"{a} is not a coset representative mod {structure.n}")
    rep = structure.rep_of((structure.n - a) % structure.n)
    assert structure.size_of(rep) == structure.size_of(a)  # negation keeps orbit size
    return rep


@lru_cache(maxsize=None)
def splitting_field(n: int, q: int) -> FiniteField:
    """The smallest field containing GF(q) whose units have order n."""
    p, r = prime_power_decomposition(q)
    if gcd(n, q) != 1:
        raise ValueError(f"n={n} and q={q} must be coprime")
    order = 1
    power = q % n
    while power != 1:
        power = (power * q) % n
        order += 1
    return field_create(p, r * order)


class EvaluationCode:
    """Code spanned by evaluations of monomials X^a at the roots of unity.

    The points are the powers 1, alpha, ..., alpha^(n-1) of the canonical
    primitive n-th root, so the generator matrix is reproducible.
    """

    def __init__(self, big_field: FiniteField, n: int, delta: Iterable[int]):
        if n < 1 or (big_field.order - 1) % n != 0:
            raise ValueError(f"n={n} must divide {big_field.order} - 1")
        delta = tuple(sorted(set(delta)))
        if delta and not 0 <= delta[0] <= delta[-1] < n:
            raise ValueError("exponents must lie in [0, n)")
        self.big_field = big_field
        self.n = n
        self.delta = delta
        alpha = primitive_nth_root(big_field, n)
        points = [1]
        for _ in range(n - 1):
            points.append(big_field.mul(points[-1], alpha))
        self.points = tuple(points)
        rows = [[points[(i * a) % n] for i in range(n)] for a in delta]
        if rows:
            self.gen = MatrixGF.from_rows(big_field, rows)
        else:
            self.gen = MatrixGF.zeros(big_field, 0, n)

    @property
    def code(self) -> LinearCode:
        code = LinearCode(self.big_field, self.gen)
        assert code.k == len(self.delta)  # Vandermonde rows are independent
        return code


def evaluation_code(big_field: FiniteField, n: int, delta: Iterable[int]) -> EvaluationCode:
    return EvaluationCode(big_field, n, delta)


def subfield_subcode(ev: EvaluationCode, q: int) -> LinearCode:
    """Restriction of an evaluation code to GF(q) coordinates.

    The generator comes from componentwise traces tr(gamma * ev(X^a)) with
    a running over the coset representatives inside Delta and gamma over a
    basis of the big field over GF(q).  Delta must be a union of
    q-cyclotomic cosets; the dimension is checked against the coset sizes.
    """
    p, r = prime_power_decomposition(q)
    big = ev.big_field
    if big.p != p or big.degree % r != 0:
        raise FieldMismatchError(f"GF({q}) is not a subfield of {big}")
    structure = cyclotomic_cosets(ev.n, q)
    if not structure.is_closed(ev.delta):
        raise ValueError("exponent set is not a union of cyclotomic cosets")
    small = field_create(p, r)
    emb = subfield_embedding(small, big)
    m = big.degree // r
    gammas = [1]
    if m > 1:
        x_class = p  # the class of X generates the big field over GF(q)
        for _ in range(m - 1):
            gammas.append(big.mul(gammas[-1], x_class))
    rows = []
    reps = structure.reps_in(ev.delta)
    for a in reps:
        row = ev.gen.row(ev.delta.index(a))
        for gamma in gammas:
            rows.append([emb.relative_trace(big.mul(gamma, int(v))) for v in row])
    code = LinearCode.from_rows(small, rows, n=ev.n)
    expected = sum(structure.size_of(a) for a in reps)
    assert code.k == expected, f"trace construction spans {code.k}, expected {expected}"
    return code


def coset_code(n: int, q: int, labels: Iterable[int]) -> LinearCode:
    """Subfield-subcode over GF(q) from the closure of the given labels."""
    structure = cyclotomic_cosets(n, q)
    delta = structure.closure(labels)
    big = splitting_field(n, q)
    return subfield_subcode(evaluation_code(big, n, delta), q)


def dual_defining_set(structure: CosetStructure, delta: Iterable[int]) -> tuple[int, ...]:
    """Exponent set of the dual of the subfield-subcode of E_delta.

    Pairing ev(X^a) against ev(X^b) is nonzero exactly when a + b = 0
    mod n, so the dual keeps the exponents whose negation is missing from
    delta.  The identity is re-verified here by comparing canonical
    generator matrices, so a wrong complement cannot slip through.
    """
    delta = tuple(sorted(set(delta)))
    if not structure.is_closed(delta):
        raise ValueError("exponent set is not a union of cyclotomic cosets")
    n, q = structure.n, structure.q
    negated = {(n - a) % n for a in delta}
    result = tuple(sorted(set(range(n)) - negated))
    big = splitting_field(n, q)
    primal = subfield_subcode(evaluation_code(big, n, delta), q)
    claimed = subfield_subcode(evaluation_code(big, n, result), q)
    if claimed != primal.dual():
        raise RuntimeError(
            f"dual defining set mismatch for n={n}, q={q}, delta={delta}"
        )
    return result


def bch_bound(structure: CosetStructure, t: int) -> int:
    """Dual-distance floor a_(t+1) + 1 from t+1 leading cosets."""
    if not 0 <= t < structure.z:
        raise ValueError(f"t must lie in [0, {structure.z - 1}]")
    return structure.reps[t + 1] + 1


# -- Hartmann-Tzeng bound ----------------------------------------------

_ht_cache: dict[tuple[int, tuple[int, ...]], int] = {}


def hartmann_tzeng_bound(n: int, defining_set: Iterable[int]) -> int:
    """Distance floor from arithmetic progressions inside the root set.

    Searches all patterns {b + i*a1 + j*a2 : 0 <= i <= delta-2, 0 <= j <= s}
    contained in the set, with gcd(a1, n) = 1 and gcd(a2, n) < delta, and
    returns the best delta + s.  Runs of distinct translates only, so s
    stays below n / gcd(a2, n).  The empty set gives 1; the full set (a
    code with only the zero word) gives n + 1.
    """
    t_set = frozenset(x % n for x in defining_set)
    key = (n, tuple(sorted(t_set)))
    if key in _ht_cache:
        return _ht_cache[key]
    size = len(t_set)
    if size == 0:
        result = 1
    elif size == n:
        result = n + 1
    else:
        result = _ht_search(n, t_set)
    _ht_cache[key] = result
    return result


def _ht_search(n: int, t_set: frozenset) -> int:
    best = 2  # any root rules out weight-1 words
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    run = [0] * n
    for u in units:
        in_tu = bytearray(n)
        for x in t_set:
            in_tu[(u * x) % n] = 1
        for m in range(1, n):
            g = gcd(m, n)
            period = n // g
            for start in range(g):
                cycle = [(start + i * m) % n for i in range(period)]
                wall = next((i for i, x in enumerate(cycle) if not in_tu[x]), None)
                if wall is None:
                    for x in cycle:
                        run[x] = period  # full orbit: s is capped here
                    continue
                run[cycle[wall]] = 0
                acc = 0
                for back in range(1, period):
                    x = cycle[wall - back]
                    acc = acc + 1 if in_tu[x] else 0
                    run[x] = acc
            best = max(best, _best_window(run, g))
    return best


def _best_window(run: Sequence[int], min_width: int) -> int:
    """Max of (window width + min run inside) over windows of consecutive
    positions avoiding zeros, width at least min_width.  Zeros act as
    walls, and some wall always exists."""
    n = len(run)
    start = next(i for i, v in enumerate(run) if v == 0)
    order = [(start + 1 + i) % n for i in range(n)]
    best = 0
    stack: list[tuple[int, int]] = []  # (run value, width of >= value to the left)
    for pos in order:
        value = run[pos]
        width = 1
        while stack and stack[-1][0] >= value:
            v, w = stack.pop()
            if w >= min_width and v + w > best:
                best = v + w
            width += w
        if value == 0:
            stack.clear()
        else:
            stack.append((value, width))
    return best


# -- the asymmetric EAQECC factory -------------------------------------

@dataclass(frozen=True)
class BchConstruction:
    params: AsymEaqeccParams
    c1: LinearCode
    c2: LinearCode
    delta1: tuple[int, ...]
    delta2: tuple[int, ...]
    dz_bound: int
    dx_bound: int


def bch_asym_code(
    structure: CosetStructure, s: int, t: int, budget: int = DEFAULT_BUDGET
) -> BchConstruction:
    """Asymmetric EAQECC from the first t+1 cosets against the reciprocals
    of the first s+1.

    C1 collects the cosets of a_0..a_t; C2 collects the reciprocal cosets
    of a_0..a_s, which makes c coincide with dim C2.  Distances default to
    the consecutive-run floors a_(t+1)+1 and a_(s+1)+1 and are upgraded
    to exact values when the enumeration budget allows.
    """
    if not 0 <= s < t <= structure.z - 1:
        raise ValueError(f"need 0 <= s < t <= {structure.z - 1}")
    n, q = structure.n, structure.q
    delta1 = structure.closure(structure.reps[: t + 1])
    recip = [reciprocal_rep(structure, a) for a in structure.reps[: s + 1]]
    delta2 = structure.closure(recip)
    big = splitting_field(n, q)
    c1 = subfield_subcode(evaluation_code(big, n, delta1), q)
    c2 = subfield_subcode(evaluation_code(big, n, delta2), q)
    dz_bound = bch_bound(structure, t)
    dx_bound = structure.reps[s + 1] + 1
    params = asym_params(c1, c2, budget, dz_floor=dz_bound, dx_floor=dx_bound)
    k2 = sum(structure.sizes[: s + 1])
    assert params.k1 == sum(structure.sizes[: t + 1])
    assert params.k2 == k2
    assert params.c == k2  # the pairing with reciprocal cosets is full rank
    return BchConstruction(
        params=params,
        c1=c1,
        c2=c2,
        delta1=delta1,
        delta2=delta2,
        dz_bound=dz_bound,
        dx_bound=dx_bound,
    )


def _ceil_fraction(num: int, den: int) -> int:
    return -(-num // den)


def closed_form_bch_params(
    p: int,
    r: int,
    ell: int,
    n: int,
    s: int,
    t: int,
    enforce_conditions: bool = True,
) -> AsymEaqeccParams:
    """Closed-form parameters [[n, n - (l/r)t - 1, ..; (l/r)s + 1]] over p^r.

    Valid when every nonzero coset involved has the full size l/r, which
    the two classical admissibility conditions guarantee: the length must
    satisfy q^floor(l/2r) < n <= p^l - 1, and a_(t+1) must stay below
    n * q^floor(l/2r) / (p^l - 1).  Pass enforce_conditions=False to skip
    those checks; the result is still verified against the constructed
    codes, so an inconsistent tuple cannot be returned.
    """
    if r < 1 or ell % r != 0:
        raise ValueError("need r dividing ell")
    q = p**r
    if (p**ell - 1) % n != 0:
        raise ValueError(f"n={n} must divide p^ell - 1 = {p ** ell - 1}")
    structure = cyclotomic_cosets(n, q)
    if not 0 <= s < t <= structure.z - 1:
        raise ValueError(f"need 0 <= s < t <= {structure.z - 1}")
    a_t1 = structure.reps[t + 1]
    a_s1 = structure.reps[s + 1]
    m = ell // r
    if enforce_conditions:
        half = q ** (ell // (2 * r))
        if not half < n <= p**ell - 1:
            raise ValueError(f"length condition fails: {half} < {n} <= {p ** ell - 1}")
        if not (2 <= a_t1 <= n and a_t1 * (p**ell - 1) <= n * half):
            raise ValueError(
                f"coset condition fails: a={a_t1} exceeds {n}*{half}/{p ** ell - 1}"
            )
        if t != _ceil_fraction((a_t1 - 1) * (q - 1), q):
            raise ValueError("t does not match the predicted coset count")
        if s != _ceil_fraction((a_s1 - 1) * (q - 1), q):
            raise ValueError("s does not match the predicted coset count")
    params = AsymEaqeccParams(
        q=q,
        n=n,
        k=n - m * t - 1,
        dz=WeightReport(value=a_t1 + 1, exact=False, enumerated=0),
        dx=WeightReport(value=a_s1 + 1, exact=False, enumerated=0),
        c=m * s + 1,
        k1=m * t + 1,
        k2=m * s + 1,
    )
    built = bch_asym_code(structure, s, t, budget=0).params
    agree = (
        built.n == params.n
        and built.k == params.k
        and built.c == params.c
        and built.k1 == params.k1
        and built.k2 == params.k2
        and built.dz.value == params.dz.value
        and built.dx.value == params.dx.value
    )
    if not agree:
        raise RuntimeError(
            "closed form disagrees with the constructed codes; "
            f"some coset size differs from {m}"
        )
    return params
