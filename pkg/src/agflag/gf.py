"""Exact arithmetic in small finite fields GF(p^k).

Elements are encoded as integers in ``[0, q)``: the residue
``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` is stored as ``c_0 + c_1 p + ...``.
All arithmetic goes through precomputed tables, so every operation is exact
and O(1).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16
_FULL_TABLE_LIMIT = 512


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- polynomials over GF(p), coefficient lists low-to-high -----------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    m = _trim([x % p for x in m])
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_eval(c: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for ci in reversed(c):
        acc = (acc * x + ci) % p
    return acc


def _monics(degree: int, p: int) -> Iterator[list[int]]:
    for idx in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(idx % p)
            idx //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Root search for degree <= 3, trial division by lower-degree monics otherwise."""
    m = _trim([c % p for c in modulus])
    k = len(m) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    if k <= 3:
        return all(_poly_eval(m, x, p) != 0 for x in range(p))
    for d in range(1, k // 2 + 1):
        for f in _monics(d, p):
            if not _poly_mod(m, f, p):
                return False
    return True


class FieldSpec:
    """The field GF(p^k) = GF(p)[x] / (modulus).

    ``symbol`` is only used for printing powers of the primitive element.
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int], symbol: str = "a"):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise ValueError("degree must be >= 1")
        if p ** k > MAX_ORDER:
            raise FieldTooLarge(f"GF({p}^{k}) exceeds {MAX_ORDER} elements")
        mod = [int(c) % p for c in modulus]
        if len(_trim(list(mod))) != k + 1 or mod[k] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"{mod} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = tuple(mod)
        self.symbol = symbol
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: Sequence[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _polymul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        r = _poly_mod(prod, self.modulus, self.p)
        return self._encode(r + [0] * (self.k - len(r)))

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        digits = [self._digits(a) for a in range(q)]
        self._add = [
            [self._encode([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
            for a in range(q)
        ]
        self._neg = [self._encode([(-x) % p for x in digits[a]]) for a in range(q)]

        # least primitive element in canonical encoding
        order = q - 1
        primitive = None
        for g in range(1, q):
            powers = [1]
            x = 1
            for _ in range(order - 1):
                x = self._polymul(x, g)
                if x == 1:
                    break
                powers.append(x)
            if len(powers) == order:
                primitive = g
                self._exp = powers
                break
        assert primitive is not None, "finite field without primitive element"
        self._primitive = primitive
        self._log = [-1] * q
        for e, x in enumerate(self._exp):
            self._log[x] = e
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._exp[(-self._log[a]) % order]
        if q <= _FULL_TABLE_LIMIT:
            self._mul = [[self._mul_log(a, b) for b in range(q)] for a in range(q)]
        else:
            self._mul = None

    def _mul_log(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    # -- integer-level arithmetic (hot path) -------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_log(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def exp(self, e: int) -> int:
        return self._exp[e % (self.q - 1)]

    # -- public helpers ----------------------------------------------------

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive(self) -> int:
        return self._primitive

    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self._primitive)

    def gen_power(self, e: int) -> FieldElement:
        """The element g^e for the chosen primitive element g."""
        return FieldElement(self, self.exp(e))

    def enumerate(self) -> list[FieldElement]:
        """0, 1, g, g^2, ..., g^(q-2)."""
        return [FieldElement(self, 0)] + [FieldElement(self, x) for x in self._exp]

    def enumerate_ints(self) -> list[int]:
        return [0] + list(self._exp)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def in_prime_field(self, a: int) -> bool:
        return a < self.p

    def format(self, a: int) -> str:
        """Power-of-primitive notation; prime-subfield elements print as integers."""
        if a < self.p:
            return str(a)
        e = self._log[a]
        return self.symbol if e == 1 else f"{self.symbol}^{e}"

    def parse(self, text: str | int) -> int:
        """Inverse of :meth:`format`; also accepts plain integers and ``-1``."""
        if isinstance(text, int):
            return text % self.q if text >= 0 else self._neg[(-text) % self.p]
        t = str(text).strip().replace(" ", "")
        if t.lstrip("-").isdigit():
            v = int(t)
            return v % self.p if v >= 0 else self._neg[(-v) % self.p]
        if t == self.symbol:
            return self._exp[1 % (self.q - 1)]
        if t.startswith(self.symbol + "^"):
            return self.exp(int(t[len(self.symbol) + 1:].strip("{}")))
        raise ValueError(f"cannot parse field element {text!r}")

    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(add, mul, neg, inv) as int64 arrays, for compiled kernels."""
        return self._np_tables

    @cached_property
    def _np_tables(self):
        q = self.q
        add = np.array(self._add, dtype=np.int64)
        mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        neg = np.array(self._neg, dtype=np.int64)
        inv = np.array(self._inv, dtype=np.int64)
        return add, mul, neg, inv

    def to_config(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_config(cls, cfg: dict, symbol: str = "a") -> FieldSpec:
        return cls(int(cfg["p"]), int(cfg["k"]), [int(c) for c in cfg["modulus"]],
                   symbol=cfg.get("symbol", symbol))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"


class FieldElement:
    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        if not 0 <= value < spec.q:
            raise ValueError(f"{value} is not a canonical element of GF({spec.q})")
        self.spec = spec
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise MixedFields("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.spec.parse(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(b)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == self.spec.parse(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return self.spec.format(self.value)


def field_new(p: int, k: int, modulus: Sequence[int], symbol: str = "a") -> FieldSpec:
    return FieldSpec(p, k, modulus, symbol=symbol)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


# Fields used by the built-in curve models.
def gf2() -> FieldSpec:
    return FieldSpec(2, 1, [0, 1])


def gf4() -> FieldSpec:
    """GF(4) with a^2 + a + 1 = 0."""
    return FieldSpec(2, 2, [1, 1, 1], symbol="a")


def gf8() -> FieldSpec:
    """GF(8) with w^3 + w + 1 = 0."""
    return FieldSpec(2, 3, [1, 1, 0, 1], symbol="w")


def gf9() -> FieldSpec:
    """GF(9) with a^2 - a - 1 = 0."""
    return FieldSpec(3, 2, [2, 2, 1], symbol="a")


def gf7() -> FieldSpec:
    return FieldSpec(7, 1, [0, 1])
