"""Arithmetic in GF(2^m) for even m.

Field elements are plain ints: bit k of the int is the coefficient of
alpha^k in the polynomial basis {1, alpha, ..., alpha^(m-1)}, where alpha
is the root of the primitive polynomial.  Addition is XOR; multiplication
goes through precomputed log/antilog tables (q <= 65536, so the tables are
cheap and enumeration-heavy callers get O(1) multiply).

A field always has m = 2s, and carries the trace to GF(2), the index-2
subfield GF(2^s), and the trace from that subfield down to GF(2).

The coordinate order used by all code constructions is fixed here:
index 0 is the zero element, index i >= 1 is alpha^(i-1).
"""

from __future__ import annotations

import numpy as np

# Default primitive polynomials, LSB = constant term.
#   m=4:  x^4+x+1            m=6:  x^6+x+1       m=8: x^8+x^4+x^3+x^2+1
#   m=10: x^10+x^3+1          m=12: x^12+x^6+x^4+x+1
DEFAULT_PRIMITIVE_POLYS = {
    4: 0x13,
    6: 0x43,
    8: 0x11D,
    10: 0x409,
    12: 0x1053,
}


class UnsupportedM(ValueError):
    """m is odd, out of the supported 4..16 range, or has no built-in polynomial."""


class NonPrimitivePolynomial(ValueError):
    """Supplied polynomial is not primitive of the right degree."""


class NotInSubfield(ValueError):
    """Element is not in the index-2 subfield GF(2^s)."""


class IndexOutOfRange(IndexError):
    """Element index outside [0, q-1]."""


class Field:
    """GF(2^m) with a fixed primitive element, m = 2s even.

    Attributes:
        m, s: extension degrees (m = 2s)
        q, n: field size 2^m and multiplicative order q-1
        poly: primitive polynomial as an int, bit k = coeff of x^k
    """

    def __init__(self, m: int, poly: int | None = None):
        if m % 2 != 0 or not 4 <= m <= 16:
            raise UnsupportedM(f"m must be even with 4 <= m <= 16, got {m}")
        if poly is None:
            poly = DEFAULT_PRIMITIVE_POLYS.get(m)
            if poly is None:
                raise UnsupportedM(f"no built-in primitive polynomial for m={m}; supply one")
        if poly.bit_length() - 1 != m:
            raise NonPrimitivePolynomial(f"polynomial {poly:#x} has degree {poly.bit_length() - 1}, need {m}")
        if not poly & 1:
            raise NonPrimitivePolynomial(f"polynomial {poly:#x} has zero constant term (x divides it)")

        self.m = m
        self.s = m // 2
        self.q = 1 << m
        self.n = self.q - 1
        self.poly = poly

        # log/antilog tables; building them doubles as the primitivity check:
        # x must return to 1 first after exactly n multiplications.
        exp = [0] * (2 * self.n)
        log = [0] * self.q
        x = 1
        for i in range(self.n):
            if x == 1 and i > 0:
                raise NonPrimitivePolynomial(f"root of {poly:#x} has order {i} < {self.n}")
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.q:
                x ^= poly
        if x != 1:
            raise NonPrimitivePolynomial(f"{poly:#x} is not primitive")
        for i in range(self.n, 2 * self.n):
            exp[i] = exp[i - self.n]
        self._exp = exp
        self._log = log

        # Trace to GF(2): tr(x) = x + x^2 + ... + x^(2^(m-1)).
        trace = bytearray(self.q)
        for v in range(self.q):
            t, y = 0, v
            for _ in range(m):
                t ^= y
                y = self.mul(y, y)
            assert t in (0, 1)
            trace[v] = t
        self._trace = bytes(trace)

        # Index-2 subfield GF(2^s) = {x : x^(2^s) = x} and its trace to GF(2).
        half = 1 << self.s
        in_sub = bytearray(self.q)
        sub_trace = bytearray(self.q)
        for v in range(self.q):
            if self.pow(v, half) == v:
                in_sub[v] = 1
                t, y = 0, v
                for _ in range(self.s):
                    t ^= y
                    y = self.mul(y, y)
                assert t in (0, 1)
                sub_trace[v] = t
        self._in_subfield = bytes(in_sub)
        self._sub_trace = bytes(sub_trace)

        # numpy views shared by the enumeration-heavy modules (read-only).
        self.exp_np = np.array(exp, dtype=np.int64)
        self.log_np = np.array(log, dtype=np.int64)
        self.trace_np = np.frombuffer(self._trace, dtype=np.uint8)
        self.sub_trace_np = np.frombuffer(self._sub_trace, dtype=np.uint8)
        self.in_subfield_np = np.frombuffer(self._in_subfield, dtype=np.uint8)

    # -- arithmetic --------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % self.n]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[self.n - self._log[a]]

    def alpha_pow(self, i: int) -> int:
        """alpha^i for any integer i."""
        return self._exp[i % self.n]

    # -- traces and subfield -----------------------------------------------

    def trace(self, x: int) -> int:
        """Trace from GF(2^m) onto GF(2)."""
        return self._trace[x]

    def in_subfield(self, x: int) -> bool:
        """True iff x lies in the index-2 subfield GF(2^s)."""
        return bool(self._in_subfield[x])

    def subfield_trace(self, x: int) -> int:
        """Trace from GF(2^s) onto GF(2), defined on subfield elements only."""
        if not self._in_subfield[x]:
            raise NotInSubfield(f"element {x:#x} is not in GF(2^{self.s})")
        return self._sub_trace[x]

    def subfield_elements(self) -> list[int]:
        return [v for v in range(self.q) if self._in_subfield[v]]

    # -- coordinate order ---------------------------------------------------

    def element(self, i: int) -> int:
        """Element at coordinate i: 0 -> zero, i >= 1 -> alpha^(i-1)."""
        if not 0 <= i <= self.n:
            raise IndexOutOfRange(f"index {i} outside [0, {self.n}]")
        return 0 if i == 0 else self._exp[i - 1]

    def index(self, x: int) -> int:
        """Inverse of element(): coordinate of a field element."""
        if not 0 <= x < self.q:
            raise IndexOutOfRange(f"value {x} is not a field element")
        return 0 if x == 0 else self._log[x] + 1

    def elements_in_order(self) -> np.ndarray:
        """All q elements in coordinate order [0, 1, alpha, alpha^2, ...]."""
        out = np.empty(self.q, dtype=np.int64)
        out[0] = 0
        out[1:] = self.exp_np[: self.n]
        return out

    def power_table(self, e: int) -> np.ndarray:
        """x^e for every x in coordinate order (0^e = 0 for e >= 1)."""
        out = np.empty(self.q, dtype=np.int64)
        out[0] = 0
        out[1:] = self.exp_np[(np.arange(self.n, dtype=np.int64) * e) % self.n]
        return out

    def scalar_mul_vec(self, a: int, xs: np.ndarray) -> np.ndarray:
        """a * x elementwise for a vector of field elements."""
        if a == 0:
            return np.zeros_like(xs)
        la = self._log[a]
        out = np.zeros_like(xs)
        nz = xs != 0
        out[nz] = self.exp_np[(la + self.log_np[xs[nz]]) % self.n]
        return out

    def __repr__(self):
        return f"Field(m={self.m}, poly={self.poly:#x})"


def make_field(m: int, poly: int | None = None) -> Field:
    """Build GF(2^m), verifying primitivity of the (default or given) polynomial."""
    return Field(m, poly)
