"""Exact arithmetic in prime fields F_q and extensions F_{q^n}.

Elements of F_{q^n} are coefficient vectors over F_q (constant term
first) reduced modulo a fixed monic irreducible polynomial.  All
arithmetic is pure and field contexts are immutable, so they can be
shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, FieldMismatch, NotPrime


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise NotPrime(f"{self.q} is not prime")


def make_prime_field(q: int) -> PrimeField:
    return PrimeField(q)


def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul_mod_q(a, b, q):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return tuple(_poly_trim(out))


def _poly_divmod_mod_q(a, b, q):
    """Division with remainder of coefficient tuples over F_q; b != 0."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, q - 2, q)
    quo = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and _poly_trim(tuple(a)):
        da = len(_poly_trim(tuple(a))) - 1
        if da < db:
            break
        a = list(_poly_trim(tuple(a)))
        c = a[-1] * inv_lb % q
        quo[da - db] = c
        for j in range(db + 1):
            a[da - db + j] = (a[da - db + j] - c * b[j]) % q
    return tuple(_poly_trim(tuple(quo))), tuple(_poly_trim(tuple(a)))


def _is_irreducible(poly, q):
    """Trial division by all monic polynomials of degree <= n/2."""
    n = len(poly) - 1
    if n == 1:
        return True
    for deg in range(1, n // 2 + 1):
        for d in _monic_polys(q, deg):
            _, rem = _poly_divmod_mod_q(poly, d, q)
            if not rem:
                return False
    return True


def _monic_polys(q, deg):
    """Monic degree-deg coefficient tuples in lexicographic order (c0 fastest)."""
    total = q**deg
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(deg):
            coeffs.append(c % q)
            c //= q
        yield tuple(coeffs) + (1,)


@lru_cache(maxsize=None)
def find_irreducible(q: int, n: int) -> tuple:
    """Lexicographically least monic irreducible of degree n over F_q.

    Deterministic so that serialized field descriptors are reproducible.
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    for cand in _monic_polys(q, n):
        if _is_irreducible(cand, q):
            return cand
    raise AssertionError("unreachable: an irreducible of every degree exists")


class ExtField:
    """The field F_{q^n} presented as F_q[x]/(modulus)."""

    def __init__(self, q: int, n: int, modulus=None):
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = find_irreducible(q, n)
        modulus = tuple(c % q for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not _is_irreducible(modulus, q):
            raise ValueError("modulus is reducible over F_q")
        self.q = q
        self.n = n
        self.modulus = modulus
        # x^(n+k) mod modulus for k = 0 .. n-2, as length-n vectors
        self._red = []
        tail = [(-c) % q for c in modulus[:-1]]  # x^n == tail
        cur = list(tail)
        for _ in range(n - 1):
            self._red.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [(cur[i] + lead * tail[i]) % q for i in range(n)]

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and (self.q, self.n, self.modulus) == (other.q, other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.q, self.n, self.modulus))

    def __repr__(self):
        return f"ExtField(q={self.q}, n={self.n}, modulus={list(self.modulus)})"

    @property
    def order(self) -> int:
        return self.q**self.n

    # -- element constructors -------------------------------------------

    def elem(self, coeffs) -> "Felem":
        if isinstance(coeffs, int):
            coeffs = (coeffs,) + (0,) * (self.n - 1)
        coeffs = tuple(c % self.q for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        return Felem(self, coeffs)

    def zero(self) -> "Felem":
        return self.elem(0)

    def one(self) -> "Felem":
        return self.elem(1)

    def from_int(self, code: int) -> "Felem":
        """Element with index `code` in the q-ary enumeration (c0 fastest)."""
        coeffs = []
        for _ in range(self.n):
            coeffs.append(code % self.q)
            code //= self.q
        return self.elem(coeffs)

    def elements(self):
        for code in range(self.order):
            yield self.from_int(code)

    # -- raw coefficient-tuple arithmetic -------------------------------

    def _add(self, a, b):
        return tuple((x + y) % self.q for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple((x - y) % self.q for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.q for x in a)

    def _mul(self, a, b):
        n, q = self.n, self.q
        if n == 1:
            return (a[0] * b[0] % q,)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % q
        out = prod[:n]
        for k in range(n - 1):
            c = prod[n + k]
            if c:
                red = self._red[k]
                for i in range(n):
                    out[i] = (out[i] + c * red[i]) % q
        return tuple(out)

    def _inv(self, a):
        if not any(a):
            raise DivisionByZero("inverse of zero")
        if self.n == 1:
            return (pow(a[0], self.q - 2, self.q),)
        return self._pow(a, self.order - 2)

    def _pow(self, a, e):
        if e < 0:
            return self._pow(self._inv(a), -e)
        result = (1,) + (0,) * (self.n - 1)
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result


class Felem:
    """An element of an ExtField; immutable, compares coefficient-wise."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other):
        if not isinstance(other, Felem):
            raise TypeError(f"cannot combine Felem with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return Felem(self.field, self.field._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Felem(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return Felem(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return Felem(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        self._check(other)
        return Felem(self.field, self.field._mul(self.coeffs, self.field._inv(other.coeffs)))

    def inv(self):
        return Felem(self.field, self.field._inv(self.coeffs))

    def __pow__(self, e: int):
        return Felem(self.field, self.field._pow(self.coeffs, e))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Felem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.field.q, self.field.n))

    def __repr__(self):
        return f"Felem{list(self.coeffs)}"

    def to_list(self):
        return list(self.coeffs)


def arith(op: str, a: Felem, b=None) -> Felem:
    """Named dispatch over the element operators; b is an exponent for pow."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


def field_descriptor(field: ExtField) -> dict:
    """JSON descriptor used by every file format."""
    return {"q": field.q, "n": field.n, "modulus": list(field.modulus)}


def field_from_descriptor(d: dict) -> ExtField:
    q = int(d["q"])
    n = int(d.get("n", 1))
    modulus = d.get("modulus")
    return ExtField(q, n, modulus)
