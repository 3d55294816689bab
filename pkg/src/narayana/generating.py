"""Descent generating functions and the exact identities connecting them.

Tallies stream over the enumerators without materializing object lists, so
memory stays proportional to the polynomial degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import Partition, _ballot_sequences, _check_budget, syt_count_hook
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an exact coefficient-wise comparison of two integer
    vectors, with the first mismatch (if any) pinned down."""

    passed: bool
    description: str
    left: tuple[int, ...]
    right: tuple[int, ...]
    mismatch_index: int | None = None

    def __bool__(self) -> bool:
        return self.passed

    def detail(self) -> str:
        if self.passed:
            return f"{self.description}: ok"
        i = self.mismatch_index or 0
        left = self.left[i] if i < len(self.left) else 0
        right = self.right[i] if i < len(self.right) else 0
        return (
            f"{self.description}: index {i} differs, left={left} right={right}; "
            f"left={list(self.left)} right={list(self.right)}"
        )


def compare_sequences(
    description: str, left: Sequence[int], right: Sequence[int]
) -> IdentityReport:
    mismatch = None
    for i in range(max(len(left), len(right))):
        a = left[i] if i < len(left) else 0
        b = right[i] if i < len(right) else 0
        if a != b:
            mismatch = i
            break
    return IdentityReport(mismatch is None, description, tuple(left), tuple(right), mismatch)


def compare_polynomials(
    description: str, left: IntPolynomial, right: IntPolynomial
) -> IdentityReport:
    return compare_sequences(description, left.coefficients, right.coefficients)


def narayana_polynomial(n: int, m: int, max_cells: int | None = None) -> IntPolynomial:
    """Descent generating function over all lattice words with m symbols,
    each used n times.

    Coefficient of t^k counts the words with exactly k descents; the constant
    term is 1 because the sorted word is the unique descent-free word. By
    convention the polynomial is 1 when n or m is zero.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    _check_budget(n * m, max_cells)
    tallies = [0] * max(1, n * m)
    for word in _ballot_sequences((n,) * m):
        descents = 0
        for a, b in zip(word, word[1:]):
            if a > b:
                descents += 1
        tallies[descents] += 1
    return IntPolynomial(tallies)


def syt_descent_polynomial(shape: Partition, max_cells: int | None = None) -> IntPolynomial:
    """Descent generating function over all standard fillings of the shape.

    Coefficient of t^k counts the tableaux in which exactly k entries have
    their successor in a strictly lower row.
    """
    _check_budget(shape.cells, max_cells)
    p = shape.cells
    parts = shape.parts
    tallies = [0] * max(1, p)
    for row_word in _ballot_sequences(parts):
        rows: list[list[int]] = [[] for _ in parts]
        for entry, row in enumerate(row_word, start=1):
            rows[row - 1].append(entry)
        row_of = [0] * (p + 1)
        for index, row in enumerate(rows, start=1):
            for entry in row:
                row_of[entry] = index
        descents = sum(1 for k in range(1, p) if row_of[k + 1] > row_of[k])
        tallies[descents] += 1
    return IntPolynomial(tallies)


def rectangular_catalan(n: int, m: int) -> int:
    """Count of the lattice words, equivalently of the standard fillings of
    the m-by-n rectangle, via hook lengths (no enumeration, so no budget)."""
    return syt_count_hook(Partition.rectangle(n, m))


def verify_tableau_identity(
    n: int, m: int, max_cells: int | None = None
) -> IdentityReport:
    """Check, coefficient by coefficient, that the word descent polynomial
    times t^(m-1) equals the tableau descent polynomial of the m-by-n
    rectangle. The cleared form avoids negative exponents."""
    left = narayana_polynomial(n, m, max_cells).shift(max(m - 1, 0))
    right = syt_descent_polynomial(Partition.rectangle(n, m), max_cells)
    return compare_polynomials(f"tableau identity n={n} m={m}", left, right)


def verify_sulanke_equidistribution(
    n: int, m: int, max_cells: int | None = None
) -> IdentityReport:
    """Check Sulanke's equidistribution on ballot paths: the ascent generating
    function equals the descent generating function shifted down by m-1.

    Paths are produced by relabeling each enumerated word (symbol s becomes
    the step in coordinate m-s+1) and both statistics are tallied on the
    step sequences.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    _check_budget(n * m, max_cells)
    size = max(1, n * m)
    ascent_tallies = [0] * size
    descent_tallies = [0] * size
    for word in _ballot_sequences((n,) * m):
        steps = [m - s + 1 for s in word]
        ascents = 0
        descents = 0
        for a, b in zip(steps, steps[1:]):
            if a < b:
                ascents += 1
            elif a > b:
                descents += 1
        ascent_tallies[ascents] += 1
        descent_tallies[descents] += 1
    left = IntPolynomial(ascent_tallies).shift(max(m - 1, 0))
    right = IntPolynomial(descent_tallies)
    return compare_polynomials(f"path equidistribution n={n} m={m}", left, right)
