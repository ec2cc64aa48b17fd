"""Finite fields GF(p^r) with table-based arithmetic.

Elements are integers encoding polynomial-basis coordinates: the element
c_0 + c_1*x + ... + c_{r-1}*x^{r-1} over GF(p) has encoding
c_0 + c_1*p + ... + c_{r-1}*p^{r-1}.  The reduction modulus is the monic
irreducible polynomial of the requested degree with the lowest encoding,
found by a deterministic scan, so a field built twice is identical down
to every table entry.

Multiplication runs on log/antilog tables over a fixed generator (the
lowest-encoding primitive element).  Fields small enough also carry dense
q x q addition and multiplication tables used by the vectorized linear
algebra elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import FieldMismatchError

# Dense pair tables are kept for orders up to this bound; log/antilog
# tables alone serve larger fields.
_PAIR_TABLE_LIMIT = 2048
_LOG_TABLE_LIMIT = 1 << 16


def _prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and _prime_factors(p) == [p]


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Write q as p^r with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = _prime_factors(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fac[0]
    r = 0
    while q % p == 0:
        q //= p
        r += 1
    if q != 1:
        raise ValueError(f"{q * p**r} is not a prime power")
    return p, r


def _decode(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _encode(coeffs: list[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = list(a)
    d = len(mod) - 1
    while len(a) > d:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - d
            for i in range(d):
                a[shift + i] = (a[shift + i] - lead * mod[i]) % p
        a.pop()
    return _poly_trim(a)


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_rem(list(base), mod, p)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, base, p), mod, p)
        base = _poly_rem(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        inv_lead = pow(b[-1], -1, p)
        b_monic = [(c * inv_lead) % p for c in b]
        r = list(a)
        d = len(b_monic) - 1
        while len(r) > d:
            lead = r[-1]
            if lead:
                shift = len(r) - 1 - d
                for i in range(d):
                    r[shift + i] = (r[shift + i] - lead * b_monic[i]) % p
            r.pop()
        a, b = b, _poly_trim(r)
    return a


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    mod = list(coeffs)
    d = len(mod) - 1
    if d < 1 or mod[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    x = [0, 1]
    if _poly_powmod(x, p**d, mod, p) != _poly_rem(list(x), mod, p):
        return False
    for t in _prime_factors(d):
        h = _poly_powmod(x, p ** (d // t), mod, p)
        # h - x
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        diff = _poly_trim(diff)
        g = _poly_gcd(mod, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def default_modulus(p: int, degree: int) -> tuple[int, ...]:
    """Monic irreducible polynomial of given degree with lowest encoding."""
    for m in range(p**degree):
        coeffs = _decode(m, p, degree) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    """GF(p^degree) with a fixed modulus and precomputed operation tables."""

    def __init__(self, p: int, degree: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if degree < 1:
            raise ValueError(f"degree must be positive, got {degree}")
        self.p = p
        self.degree = degree
        self.order = p**degree
        if modulus is None:
            modulus = default_modulus(p, degree)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of the field's degree")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        if self.order > _LOG_TABLE_LIMIT:
            raise ValueError(f"field order {self.order} beyond supported table size")
        self._build_tables()

    # -- construction helpers -------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        pa = _poly_trim(_decode(a, self.p, self.degree))
        pb = _poly_trim(_decode(b, self.p, self.degree))
        prod = _poly_rem(_poly_mul(pa, pb, self.p), list(self.modulus), self.p)
        return _encode(prod + [0] * (self.degree - len(prod)), self.p)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        p, q = self.p, self.order
        fac = _prime_factors(q - 1) if q > 2 else []
        gen = None
        for v in range(1, q):
            if all(self._pow_raw(v, (q - 1) // t) != 1 for t in fac):
                gen = v
                break
        assert gen is not None
        self.generator = gen

        exp = np.zeros(2 * (q - 1) if q > 2 else 2, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_raw(cur, gen)
        exp[q - 1 :] = exp[: len(exp) - (q - 1)]
        self._exp = exp
        self._log = log

        vals = np.arange(q, dtype=np.int64)
        powers = p ** np.arange(self.degree, dtype=np.int64)
        digits = (vals[:, None] // powers[None, :]) % p
        self._neg = (((p - digits) % p) * powers[None, :]).sum(axis=1)

        inv = np.zeros(q, dtype=np.int64)
        if q > 1:
            inv[1:] = exp[(q - 1) - log[1:]]
        self._inv = inv

        if q <= _PAIR_TABLE_LIMIT:
            sums = (digits[:, None, :] + digits[None, :, :]) % p
            self._add2 = (sums * powers[None, None, :]).sum(axis=2).astype(np.int16)
            mul = np.zeros((q, q), dtype=np.int16)
            nz = vals[1:]
            mul[1:, 1:] = exp[log[nz][:, None] + log[nz][None, :]].astype(np.int16)
            self._mul2 = mul
        else:
            self._add2 = None
            self._mul2 = None

    # -- scalar operations ----------------------------------------------

    def check_value(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element encoding of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        if self._add2 is not None:
            return int(self._add2[a, b])
        p = self.p
        out, mult = 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return int(self._inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError(f"0 has no inverse in {self}")
            return 1 if e == 0 else 0
        return int(self._exp[(self._log[a] * e) % (self.order - 1)])

    def trace(self, a: int, subfield_degree: int = 1) -> int:
        """Trace onto GF(p^subfield_degree), returned in this field's encoding.

        The result lies in the subfield fixed by x -> x^(p^subfield_degree);
        for the prime subfield the encoding is the subfield value itself.
        """
        if self.degree % subfield_degree != 0:
            raise ValueError(
                f"GF({self.p}^{subfield_degree}) is not a subfield of {self}"
            )
        sub_q = self.p**subfield_degree
        acc = 0
        for i in range(self.degree // subfield_degree):
            acc = self.add(acc, self.pow(a, sub_q**i))
        return acc

    # -- conveniences ----------------------------------------------------

    @property
    def designator(self) -> str:
        return f"{self.p}^{self.degree}" if self.degree > 1 else str(self.p)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check_value(value))

    def elements(self) -> range:
        return range(self.order)

    @property
    def add_table(self) -> np.ndarray:
        if self._add2 is None:
            raise ValueError(f"{self} is too large for dense pair tables")
        return self._add2

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul2 is None:
            raise ValueError(f"{self} is too large for dense pair tables")
        return self._mul2

    @property
    def neg_table(self) -> np.ndarray:
        return self._neg

    @property
    def inv_table(self) -> np.ndarray:
        return self._inv

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (
            self.p == other.p
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.designator})"


@dataclass(frozen=True)
class FieldElement:
    """A single field element; arithmetic checks both operands share a field."""

    field: FiniteField
    value: int

    def _same_field(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value}@{self.field.designator}"


@lru_cache(maxsize=None)
def field_create(p: int, degree: int = 1) -> FiniteField:
    """Cached field constructor with the canonical modulus."""
    return FiniteField(p, degree)


def field_from_designator(text: str) -> FiniteField:
    """Parse 'p' or 'p^r' into a field."""
    parts = text.strip().split("^")
    try:
        if len(parts) == 1:
            p, r = int(parts[0]), 1
        elif len(parts) == 2:
            p, r = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"malformed field designator {text!r}") from None
    if not is_prime(p):
        # accept prime-power shorthand like "4" by splitting it
        try:
            p, extra = prime_power_decomposition(p)
        except ValueError:
            raise ValueError(f"field designator {text!r} is not a prime power") from None
        r *= extra
    return field_create(p, r)


def multiplicative_order(field: FiniteField, a: int) -> int:
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    return (field.order - 1) // int(np.gcd(int(field._log[a]), field.order - 1))


def primitive_nth_root(field: FiniteField, n: int) -> int:
    """Lowest-encoded element of multiplicative order exactly n."""
    if n < 1 or (field.order - 1) % n != 0:
        raise ValueError(f"no element of order {n} in {field}")
    for v in range(1, field.order):
        if multiplicative_order(field, v) == n:
            return v
    raise AssertionError("cyclic group must contain the root")  # pragma: no cover


class SubfieldEmbedding:
    """GF(p^r) inside GF(p^l), r | l, via the lowest-encoded modulus root.

    embed() maps small-field encodings to big-field encodings; retract()
    inverts it on the image; relative_trace() sends a big-field element to
    the small field through the trace of the extension.
    """

    def __init__(self, small: FiniteField, big: FiniteField):
        if small.p != big.p or big.degree % small.degree != 0:
            raise ValueError(f"{small} does not embed into {big}")
        self.small = small
        self.big = big
        beta = None
        for v in range(big.order):
            acc = 0
            for c in reversed(small.modulus):
                acc = big.add(big.mul(acc, v), c % big.p)
            if acc == 0:
                beta = v
                break
        assert beta is not None, "modulus must split in the extension"
        self.beta = beta
        table = np.zeros(small.order, dtype=np.int64)
        for x in range(small.order):
            coeffs = _decode(x, small.p, small.degree)
            acc = 0
            for c in reversed(coeffs):
                acc = big.add(big.mul(acc, beta), c)
            table[x] = acc
        self._embed = table
        self._retract = {int(v): x for x, v in enumerate(table)}

    def embed(self, value: int) -> int:
        return int(self._embed[self.small.check_value(value)])

    def retract(self, value: int) -> int:
        try:
            return self._retract[value]
        except KeyError:
            raise ValueError(
                f"{value} is not in the embedded copy of {self.small}"
            ) from None

    def relative_trace(self, value: int) -> int:
        """Trace from the big field onto the embedded small field."""
        acc = self.big.trace(value, self.small.degree)
        return self.retract(acc)


@lru_cache(maxsize=None)
def subfield_embedding(small: FiniteField, big: FiniteField) -> SubfieldEmbedding:
    return SubfieldEmbedding(small, big)
