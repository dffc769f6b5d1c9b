"""Arithmetic over GF(4) in a two-bit-plane representation.

An element e of GF(4) = {0, 1, w, W} (W = w^2 = w + 1) is encoded as a
pair of bits (a, b) with e = a + b*w.  A length-n vector stores the
a-coefficients and the b-coefficients of all coordinates as two integer
bitsets ("planes"), so vector addition is XOR of the planes and Hamming
weight is a popcount of their OR.

Element-level helpers work on small ints 0..3 with bit 0 = a, bit 1 = b:
0 -> 0, 1 -> 1, 2 -> w, 3 -> W.
"""

from __future__ import annotations

from dataclasses import dataclass

ZERO, ONE, OMEGA, OMEGA_BAR = 0, 1, 2, 3

_ELEMENT_CHARS = "01wW"
_CHAR_TO_ELEMENT = {c: e for e, c in enumerate(_ELEMENT_CHARS)}


def gf4_add(x: int, y: int) -> int:
    """Addition in GF(4): component-wise XOR of the (a, b) bits."""
    return x ^ y


def gf4_mul(x: int, y: int) -> int:
    """Multiplication in GF(4) using w^2 = w + 1.

    (a1 + b1*w)(a2 + b2*w) = (a1*a2 + b1*b2) + (a1*b2 + a2*b1 + b1*b2)*w
    """
    a1, b1 = x & 1, x >> 1
    a2, b2 = y & 1, y >> 1
    a = (a1 & a2) ^ (b1 & b2)
    b = (a1 & b2) ^ (a2 & b1) ^ (b1 & b2)
    return a | (b << 1)


def gf4_square(x: int) -> int:
    return gf4_mul(x, x)


def gf4_trace_form(x: int, y: int) -> int:
    """x*y^2 + x^2*y, always 0 or 1 (the GF(2)-valued symplectic form)."""
    t = gf4_add(gf4_mul(x, gf4_square(y)), gf4_mul(gf4_square(x), y))
    assert t in (0, 1)
    return t


def _check_mask(value: int, n: int, name: str) -> None:
    if value < 0 or value >> n:
        raise ValueError(f"{name} has bits outside length {n}")


@dataclass(frozen=True)
class GF4Vector:
    """Length-n vector over GF(4), stored as two bit planes.

    Coordinate i holds the element (bit i of a, bit i of b).
    """

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ValueError("length must be positive")
        _check_mask(self.a, self.n, "plane a")
        _check_mask(self.b, self.n, "plane b")

    @staticmethod
    def zero(n: int) -> "GF4Vector":
        return GF4Vector(n, 0, 0)

    @staticmethod
    def from_elements(elements) -> "GF4Vector":
        elements = list(elements)
        a = b = 0
        for i, e in enumerate(elements):
            if not 0 <= e <= 3:
                raise ValueError(f"not a GF(4) element: {e}")
            a |= (e & 1) << i
            b |= (e >> 1) << i
        return GF4Vector(len(elements), a, b)

    def element(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return ((self.a >> i) & 1) | (((self.b >> i) & 1) << 1)

    def elements(self) -> list[int]:
        return [self.element(i) for i in range(self.n)]

    def __add__(self, other: "GF4Vector") -> "GF4Vector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return GF4Vector(self.n, self.a ^ other.a, self.b ^ other.b)

    def __str__(self) -> str:
        return "".join(_ELEMENT_CHARS[self.element(i)] for i in range(self.n))

    @staticmethod
    def parse(text: str) -> "GF4Vector":
        """Inverse of str(); alphabet {0,1,w,W}."""
        try:
            return GF4Vector.from_elements(_CHAR_TO_ELEMENT[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"bad vector character: {exc.args[0]!r}") from None


def vec_add(x: GF4Vector, y: GF4Vector) -> GF4Vector:
    return x + y


def scalar_mul_omega(x: GF4Vector) -> GF4Vector:
    """Multiply every coordinate by w: (a, b) -> (b, a^b)."""
    return GF4Vector(x.n, x.b, x.a ^ x.b)


def trace_inner_product(x: GF4Vector, y: GF4Vector) -> int:
    """Symplectic trace form sum_i (x_i y_i^2 + x_i^2 y_i) in GF(2).

    In bit planes this is the parity of (x.a & y.b) ^ (x.b & y.a);
    the equivalence with the field-arithmetic definition is checked
    exhaustively in the test suite.
    """
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    return ((x.a & y.b) ^ (x.b & y.a)).bit_count() & 1


def hamming_weight(x: GF4Vector) -> int:
    """Number of non-zero coordinates: popcount of the OR of the planes."""
    return (x.a | x.b).bit_count()
