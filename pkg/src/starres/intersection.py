"""Intersection theory on labelled trees.

The pairing matrix of a labelled tree, exact negative-definiteness, the
fundamental cycle by Laufer-style increments (with a brute-force search as
independent oracle), reducedness, and the rational canonical cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import PreconditionError
from .linalg import det, solve


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric matrix: diagonal = self-intersections, off-diagonal = edge counts."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]


def matrix_from_graph(graph) -> IntersectionMatrix:
    """Build the pairing matrix from anything carrying .labels and .edges."""
    k = len(graph.labels)
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        rows[i][i] = graph.labels[i]
    for i, j in graph.edges:
        rows[i][j] += 1
        rows[j][i] += 1
    return IntersectionMatrix(tuple(tuple(r) for r in rows))


def is_negative_definite(m: IntersectionMatrix) -> bool:
    """Leading principal minors alternate in sign, checked exactly."""
    for k in range(1, m.size + 1):
        minor = det([row[:k] for row in m.entries[:k]])
        if (-1) ** k * minor <= 0:
            return False
    return True


def pair(m: IntersectionMatrix, a, b) -> Fraction:
    """The bilinear pairing a^T M b of two cycles."""
    if len(a) != m.size or len(b) != m.size:
        raise PreconditionError("cycle length does not match the matrix")
    return sum(
        Fraction(a[i]) * m.entries[i][j] * Fraction(b[j])
        for i in range(m.size)
        for j in range(m.size)
    )


def _pair_with_vertex(m: IntersectionMatrix, z, i: int):
    return sum(zj * m.entries[i][j] for j, zj in enumerate(z))


def fundamental_cycle(m: IntersectionMatrix) -> tuple[int, ...]:
    """Laufer increments from the lowest-index vertex.

    Start at Z = E_0; while some Z . E_i > 0, add E_i.  The result is the
    unique smallest positive cycle pairing nonpositively with every vertex,
    independent of increment order.
    """
    if not is_negative_definite(m):
        raise PreconditionError("fundamental cycle needs a negative definite matrix")
    z = [0] * m.size
    z[0] = 1
    while True:
        i = next((i for i in range(m.size) if _pair_with_vertex(m, z, i) > 0), None)
        if i is None:
            return tuple(z)
        z[i] += 1


def fundamental_cycle_brute(m: IntersectionMatrix, bound: int = 4) -> tuple[int, ...]:
    """Independent oracle: componentwise minimum over the box [1, bound]^V.

    Enumerates every candidate cycle in the box satisfying Z . E_i <= 0 for
    all i and returns the coordinatewise minimum, verifying it is itself a
    candidate (the theory guarantees a unique smallest element).
    """
    candidates = [
        z
        for z in product(range(1, bound + 1), repeat=m.size)
        if all(_pair_with_vertex(m, z, i) <= 0 for i in range(m.size))
    ]
    if not candidates:
        raise PreconditionError(f"no candidate cycle within the box [1, {bound}]^V")
    low = tuple(min(z[i] for z in candidates) for i in range(m.size))
    if any(_pair_with_vertex(m, low, i) > 0 for i in range(m.size)):
        raise PreconditionError("coordinatewise minimum is not itself a candidate")
    return low


def is_reduced(z) -> bool:
    """All coefficients one: the cycle is reduced with full support."""
    coeffs = []
    for c in z:
        f = Fraction(c)
        if f.denominator != 1:
            raise PreconditionError(f"reducedness is only defined for integer cycles, got {c}")
        coeffs.append(f.numerator)
    return all(c == 1 for c in coeffs)


def canonical_cycle(m: IntersectionMatrix) -> tuple[Fraction, ...]:
    """The rational cycle Z with Z . E_i = E_i^2 + 2 for every vertex."""
    rhs = [m.entries[i][i] + 2 for i in range(m.size)]
    try:
        return solve(m.entries, rhs)
    except ValueError as exc:
        raise PreconditionError("canonical cycle needs an invertible matrix") from exc
