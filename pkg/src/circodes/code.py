"""Self-dual additive GF(4) codes from graphs.

C(G) is the additive code generated over GF(2) by the rows of A + w*I,
where A is the adjacency matrix of a simple graph.  In the (a, b)
bit-plane encoding, generator row i has plane a = adjacency row i and
plane b = the unit vector e_i, so the b plane of any codeword equals its
GF(2) message; that identity drives all the weight engines.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .gf4 import GF4Vector, hamming_weight, trace_inner_product
from .graphs import BitGraph, CirculantSupport, adjacency


class TypeClass(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True)
class GraphCode:
    """Generator description of C(G): adjacency rows plus implicit w*I."""

    n: int
    graph: BitGraph

    @property
    def rows(self) -> tuple[GF4Vector, ...]:
        return tuple(
            GF4Vector(self.n, self.graph.rows[i], 1 << i) for i in range(self.n)
        )

    def support(self) -> CirculantSupport | None:
        """The circulant support if the underlying graph is circulant."""
        if not self.graph.is_circulant():
            return None
        return CirculantSupport(
            self.n, tuple(j + 1 for j in range(self.n) if (self.graph.rows[0] >> j) & 1)
        )


def build(graph: BitGraph) -> GraphCode:
    """Construct C(G) and assert self-orthogonality of all row pairs.

    For rows of A + w*I the trace form of rows i, j reduces to
    a_ij + a_ji (+ 2 a_ii), so self-orthogonality is exactly symmetry
    plus zero diagonal of A; BitGraph already enforces both, and the
    O(n^2) check here catches any transcription error immediately.
    """
    code = GraphCode(graph.v, graph)
    rows = code.rows
    for i in range(code.n):
        for j in range(i, code.n):
            if trace_inner_product(rows[i], rows[j]) != 0:
                raise ValueError(f"generators {i}, {j} not orthogonal")
    return code


def from_support(support: CirculantSupport) -> GraphCode:
    return build(adjacency(support))


def encode(code: GraphCode, message: int) -> GF4Vector:
    """Codeword for a GF(2) message bitset: sum of the selected rows.

    plane a = message * A (mod 2), plane b = message.
    """
    if message < 0 or message >> code.n:
        raise ValueError("message does not fit code length")
    a = 0
    m = message
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        a ^= code.graph.rows[i]
    return GF4Vector(code.n, a, message)


def codeword_weight(code: GraphCode, message: int) -> int:
    return hamming_weight(encode(code, message))


def type_of_by_support(support: CirculantSupport) -> TypeClass:
    """Type from the support alone: Type II iff n even and n/2+1 in S.

    Equivalently (by the support symmetry) iff |S| is odd; odd-length
    circulant codes are always Type I.
    """
    if support.n % 2 == 1:
        return TypeClass.TYPE_I
    if support.n // 2 + 1 in support.positions:
        return TypeClass.TYPE_II
    return TypeClass.TYPE_I


def type_of_by_enumeration(code: GraphCode, cap: int = 28) -> TypeClass:
    """Direct definition: Type II iff every codeword weight is even.

    Exhaustive over all 2^n codewords; oracle for the support criterion.
    """
    if code.n > cap:
        raise ValueError(f"length {code.n} too large for exhaustive typing")
    from .weights import full_weight_distribution

    dist = full_weight_distribution(code).distribution
    if any(w % 2 == 1 and cnt for w, cnt in dist.items()):
        return TypeClass.TYPE_I
    return TypeClass.TYPE_II


@dataclass(frozen=True)
class QuantumParameters:
    """A [[n, 0, d]] quantum code derived from a self-dual code."""

    n: int
    k: int
    d: int | None
    certification: str

    def __str__(self) -> str:
        d = "?" if self.d is None else self.d
        return f"[[{self.n},{self.k},{d}]] ({self.certification})"


def quantum_parameters(code: GraphCode, weight_report) -> QuantumParameters:
    if weight_report.n != code.n:
        raise ValueError("weight report does not belong to this code")
    return QuantumParameters(
        n=code.n, k=0, d=weight_report.d_min,
        certification=weight_report.certification.describe(),
    )


def write_descriptor(path, support: CirculantSupport, type_class: TypeClass,
                     claimed_d: int | None) -> None:
    """Code descriptor record: {n, support, type, claimed_d} as JSON."""
    record = {
        "n": support.n,
        "support": list(support.positions),
        "type": type_class.value,
        "claimed_d": claimed_d,
    }
    with open(path, "w") as fh:
        json.dump(record, fh)
        fh.write("\n")


def read_descriptor(path) -> tuple[CirculantSupport, TypeClass, int | None]:
    with open(path) as fh:
        record = json.load(fh)
    support = CirculantSupport(record["n"], tuple(record["support"]))
    return support, TypeClass(record["type"]), record["claimed_d"]
