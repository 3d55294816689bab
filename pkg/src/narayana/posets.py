"""Labeled posets: linear extensions, Jordan-Holder permutations, Eulerian
polynomials, and order polynomials.

A poset is given by cover relations on elements 1..p plus a bijective
labeling; the full order is the transitive closure. Ferrers posets (cells of
a partition under the componentwise order) with column-strict labelings are
the family of main interest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from heapq import heapify, heappop, heappush
from math import comb
from typing import Iterator, Sequence

from .combinatorics import BudgetExceededError, Partition
from .generating import IdentityReport, compare_sequences, syt_descent_polynomial
from .polynomials import IntPolynomial

DEFAULT_MAX_EXTENSION_ELEMENTS = 12
DEFAULT_MAX_BRUTE_ELEMENTS = 8


@dataclass(frozen=True)
class LabeledPoset:
    """Finite poset on elements 1..size with a bijective labeling.

    ``covers`` lists (lower, upper) pairs; they must generate an acyclic
    order. Covers are stored deduplicated and sorted, so structurally equal
    posets compare equal.
    """

    size: int
    covers: tuple[tuple[int, int], ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("size must be nonnegative")
        covers = tuple(sorted({(int(a), int(b)) for a, b in self.covers}))
        object.__setattr__(self, "covers", covers)
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        for a, b in covers:
            if not (1 <= a <= self.size and 1 <= b <= self.size):
                raise ValueError(f"cover ({a},{b}) is outside 1..{self.size}")
            if a == b:
                raise ValueError(f"cover ({a},{b}) relates an element to itself")
        if sorted(labels) != list(range(1, self.size + 1)):
            raise ValueError(f"labels must be a permutation of 1..{self.size}")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        indegree = [0] * (self.size + 1)
        above: list[list[int]] = [[] for _ in range(self.size + 1)]
        for a, b in self.covers:
            indegree[b] += 1
            above[a].append(b)
        ready = [e for e in range(1, self.size + 1) if indegree[e] == 0]
        seen = 0
        while ready:
            element = ready.pop()
            seen += 1
            for other in above[element]:
                indegree[other] -= 1
                if indegree[other] == 0:
                    ready.append(other)
        if seen != self.size:
            raise ValueError("cover relations contain a cycle")

    @classmethod
    def with_identity_labels(
        cls, size: int, covers: Sequence[tuple[int, int]]
    ) -> "LabeledPoset":
        return cls(size, tuple(covers), tuple(range(1, size + 1)))

    @cached_property
    def strictly_below(self) -> frozenset[tuple[int, int]]:
        """All pairs (a, b) with a strictly below b in the generated order."""
        above: list[set[int]] = [set() for _ in range(self.size + 1)]
        for a, b in self.covers:
            above[a].add(b)
        pairs: set[tuple[int, int]] = set()
        for start in range(1, self.size + 1):
            stack = list(above[start])
            reached: set[int] = set()
            while stack:
                element = stack.pop()
                if element in reached:
                    continue
                reached.add(element)
                stack.extend(above[element])
            pairs.update((start, other) for other in reached)
        return frozenset(pairs)

    def leq(self, a: int, b: int) -> bool:
        return a == b or (a, b) in self.strictly_below

    def label_of(self, element: int) -> int:
        return self.labels[element - 1]

    def is_naturally_labeled(self) -> bool:
        """True when labels weakly increase along the order."""
        return all(self.labels[a - 1] < self.labels[b - 1] for a, b in self.covers)

    def relabeled(self, labels: Sequence[int]) -> "LabeledPoset":
        return LabeledPoset(self.size, self.covers, tuple(labels))

    def canonical_key(self) -> str:
        covers = ";".join(f"{a}<{b}" for a, b in self.covers)
        labels = ",".join(str(v) for v in self.labels)
        return f"p={self.size}|covers={covers}|labels={labels}"

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "covers": [list(pair) for pair in self.covers],
            "labels": list(self.labels),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LabeledPoset":
        try:
            size = int(data["size"])
            covers = tuple((int(a), int(b)) for a, b in data["covers"])
            labels = tuple(int(v) for v in data["labels"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"invalid poset description: {exc}") from exc
        return cls(size, covers, labels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LabeledPoset":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid poset description: {exc}") from exc
        return cls.from_dict(data)


def chain_poset(size: int, labels: Sequence[int] | None = None) -> LabeledPoset:
    covers = tuple((e, e + 1) for e in range(1, size))
    return LabeledPoset(size, covers, tuple(labels) if labels else tuple(range(1, size + 1)))


def antichain_poset(size: int, labels: Sequence[int] | None = None) -> LabeledPoset:
    return LabeledPoset(size, (), tuple(labels) if labels else tuple(range(1, size + 1)))


def ferrers_cells(shape: Partition) -> tuple[tuple[int, int], ...]:
    """Cells (row, column) of the shape in row-major order, 1-indexed."""
    return tuple(
        (i, j) for i, length in enumerate(shape.parts, start=1) for j in range(1, length + 1)
    )


def ferrers_poset(shape: Partition) -> LabeledPoset:
    """Cells of the shape under the componentwise order, with identity labels.

    Element ids follow row-major cell order; covers go to the right neighbor
    and to the cell below.
    """
    cells = ferrers_cells(shape)
    index = {cell: e for e, cell in enumerate(cells, start=1)}
    covers = []
    for (i, j), e in index.items():
        if (i, j + 1) in index:
            covers.append((e, index[(i, j + 1)]))
        if (i + 1, j) in index:
            covers.append((e, index[(i + 1, j)]))
    return LabeledPoset.with_identity_labels(len(cells), covers)


def column_strict_labeling(shape: Partition) -> tuple[tuple[int, ...], ...]:
    """The canonical labeling that decreases down columns and increases along
    rows: bottom row first, each row left to right, ascending."""
    rows: list[list[int]] = [[0] * length for length in shape.parts]
    label = 1
    for i in range(len(shape.parts) - 1, -1, -1):
        for j in range(shape.parts[i]):
            rows[i][j] = label
            label += 1
    return tuple(tuple(row) for row in rows)


def is_column_strict(labeling: Sequence[Sequence[int]]) -> bool:
    """Check the two cell inequalities: strictly larger than the cell below,
    strictly smaller than the cell to the right."""
    rows = [tuple(row) for row in labeling]
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if j + 1 < len(row) and not value < row[j + 1]:
                return False
            if i + 1 < len(rows) and j < len(rows[i + 1]) and not value > rows[i + 1][j]:
                return False
    return True


def column_strict_ferrers_poset(
    shape: Partition, labeling: Sequence[Sequence[int]] | None = None
) -> LabeledPoset:
    """Ferrers poset of the shape carrying a column-strict labeling (the
    canonical one unless another valid labeling is supplied)."""
    rows = (
        column_strict_labeling(shape)
        if labeling is None
        else tuple(tuple(row) for row in labeling)
    )
    if tuple(len(row) for row in rows) != shape.parts:
        raise ValueError(f"labeling does not match shape ({shape})")
    if not is_column_strict(rows):
        raise ValueError("labeling is not column strict")
    flat = tuple(value for row in rows for value in row)
    return ferrers_poset(shape).relabeled(flat)


def linear_extensions(
    poset: LabeledPoset, max_elements: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Every order-compatible arrangement of the elements, exactly once,
    ordered lexicographically by element id."""
    cap = DEFAULT_MAX_EXTENSION_ELEMENTS if max_elements is None else max_elements
    if poset.size > cap:
        raise BudgetExceededError(
            f"poset has {poset.size} elements, extension cap is {cap} "
            f"(override with max_elements)"
        )
    p = poset.size
    if p == 0:
        yield ()
        return
    predecessor_mask = [0] * (p + 1)
    for a, b in poset.covers:
        predecessor_mask[b] |= 1 << a
    prefix: list[int] = []

    def extend(placed_mask: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == p:
            yield tuple(prefix)
            return
        for element in range(1, p + 1):
            bit = 1 << element
            if placed_mask & bit:
                continue
            if predecessor_mask[element] & ~placed_mask:
                continue
            prefix.append(element)
            yield from extend(placed_mask | bit)
            prefix.pop()

    yield from extend(0)


def jordan_holder_set(
    poset: LabeledPoset, max_elements: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Permutations obtained by reading the labels along each linear
    extension; in bijection with the extensions."""
    labels = poset.labels
    for extension in linear_extensions(poset, max_elements):
        yield tuple(labels[e - 1] for e in extension)


def eulerian_polynomial(
    poset: LabeledPoset, max_elements: int | None = None
) -> IntPolynomial:
    """Descent generating function over the Jordan-Holder permutations.

    For an antichain this is the classical Eulerian polynomial of the
    symmetric group, whatever the labeling.
    """
    tallies = [0] * max(1, poset.size)
    for pi in jordan_holder_set(poset, max_elements):
        descents = sum(1 for a, b in zip(pi, pi[1:]) if a > b)
        tallies[descents] += 1
    return IntPolynomial(tallies)


def _assignment_count(poset: LabeledPoset, n: int) -> int:
    # Elements are processed in a topological order, so when an element is
    # placed all of its lower covers already hold values and give an upper
    # bound (off by one across strict drops). Elements nothing depends on
    # contribute a plain factor instead of a branch.
    p = poset.size
    if p == 0:
        return 1
    if n <= 0:
        return 0
    indegree = [0] * (p + 1)
    above: list[list[int]] = [[] for _ in range(p + 1)]
    for a, b in poset.covers:
        indegree[b] += 1
        above[a].append(b)
    order: list[int] = []
    ready = [e for e in range(1, p + 1) if indegree[e] == 0]
    heapify(ready)
    while ready:
        element = heappop(ready)
        order.append(element)
        for other in above[element]:
            indegree[other] -= 1
            if indegree[other] == 0:
                heappush(ready, other)
    position = {element: idx for idx, element in enumerate(order)}
    bounds: list[list[tuple[int, int]]] = [[] for _ in range(p)]
    has_dependent = [False] * p
    labels = poset.labels
    for a, b in poset.covers:
        drop = 1 if labels[a - 1] > labels[b - 1] else 0
        bounds[position[b]].append((position[a], drop))
        has_dependent[position[a]] = True
    values = [0] * p

    def count_from(idx: int) -> int:
        if idx == p:
            return 1
        limit = n
        for source, drop in bounds[idx]:
            candidate = values[source] - drop
            if candidate < limit:
                limit = candidate
        if limit <= 0:
            return 0
        if not has_dependent[idx]:
            return limit * count_from(idx + 1)
        total = 0
        for value in range(limit, 0, -1):
            values[idx] = value
            total += count_from(idx + 1)
        return total

    return count_from(0)


def _series_value(poset: LabeledPoset, n: int, w: IntPolynomial | None = None) -> int:
    if w is None:
        w = eulerian_polynomial(poset)
    p = poset.size
    if n == 0:
        return 1 if p == 0 else 0
    k = n - 1
    return sum(c * comb(k - j + p, p) for j, c in enumerate(w.coefficients))


def order_polynomial_value(
    poset: LabeledPoset,
    n: int,
    method: str = "auto",
    max_brute_elements: int | None = None,
) -> int:
    """Number of maps from the elements into {1..n} that weakly drop along
    the order and strictly drop across label inversions.

    ``method`` selects "brute" (assignment search with bound propagation) or
    "series" (Eulerian numerator expanded against binomials); "auto" uses
    brute force for small posets and the series beyond that. The two methods
    are independent and cross-validate each other.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = DEFAULT_MAX_BRUTE_ELEMENTS if max_brute_elements is None else max_brute_elements
    if method == "auto":
        method = "brute" if poset.size <= cap else "series"
    if method == "brute":
        if poset.size > cap:
            raise BudgetExceededError(
                f"poset has {poset.size} elements, brute-force cap is {cap} "
                f"(override with max_brute_elements)"
            )
        return _assignment_count(poset, n)
    if method == "series":
        return _series_value(poset, n)
    raise ValueError(f"unknown method {method!r}")


def order_polynomial_interpolation(poset: LabeledPoset) -> tuple[int, ...]:
    """Convenience: values at 1..size+1, enough to pin the degree-size
    polynomial pointwise. No claim beyond the values themselves."""
    return tuple(order_polynomial_value(poset, k) for k in range(1, poset.size + 2))


def verify_order_gf(poset: LabeledPoset, terms: int = 10) -> IdentityReport:
    """Check that brute-force order polynomial values agree with the series
    expansion of the Eulerian numerator over (1-t)^(p+1).

    Compares the count at argument k+1 with sum_j w_j * C(k-j+p, p) for
    0 <= k <= terms, exactly.
    """
    w = eulerian_polynomial(poset)
    p = poset.size
    brute = tuple(
        order_polynomial_value(poset, k + 1, method="brute") for k in range(terms + 1)
    )
    series = tuple(
        sum(c * comb(k - j + p, p) for j, c in enumerate(w.coefficients))
        for k in range(terms + 1)
    )
    return compare_sequences(f"order series p={p}", brute, series)


def verify_ferrers_eulerian_identity(
    shape: Partition, labeling: Sequence[Sequence[int]] | None = None
) -> IdentityReport:
    """Check that the Eulerian polynomial of the column-strict labeled
    Ferrers poset equals the tableau descent polynomial of the shape,
    computed independently."""
    poset = column_strict_ferrers_poset(shape, labeling)
    left = eulerian_polynomial(poset)
    right = syt_descent_polynomial(shape)
    return compare_sequences(
        f"ferrers eulerian identity shape={shape}", left.coefficients, right.coefficients
    )
