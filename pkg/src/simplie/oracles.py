"""Brute-force oracles kept independent of the basis machinery.

These deliberately avoid the Lyndon-tree normal form: they work with
left-normed bracket spans and raw tensor-algebra coordinates, so they can
arbitrate the optimized paths (basis enumeration, normalized slices).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .lie import (
    FreeGradedLie,
    GeneratorSymbol,
    LieElement,
    LieMonomial,
    bracket_trees,
    monomial_degree,
)


def _left_normed(letters: Sequence[LieMonomial]) -> LieElement:
    e = LieElement.from_monomial(letters[0])
    for letter in letters[1:]:
        e = bracket_trees(e, LieElement.from_monomial(letter))
    return e


def _int_row_rank(rows: list[dict[int, int]]) -> int:
    """Fraction-free elimination on sparse integer rows."""
    rank = 0
    rows = [r for r in (dict(r) for r in rows) if r]
    while rows:
        rows.sort(key=len, reverse=True)
        row = rows.pop()
        pivot = min(row)
        pv = row[pivot]
        rank += 1
        reduced = []
        for other in rows:
            ov = other.get(pivot)
            if ov:
                merged = {col: val * pv for col, val in other.items()}
                for col, val in row.items():
                    new = merged.get(col, 0) - val * ov
                    if new:
                        merged[col] = new
                    elif col in merged:
                        del merged[col]
                if merged:
                    g = 0
                    for val in merged.values():
                        g = _gcd(g, abs(val))
                        if g == 1:
                            break
                    if g > 1:
                        merged = {c: v // g for c, v in merged.items()}
                other = merged
            if other:
                reduced.append(other)
        rows = reduced
    return rank


def _envelope_rows(algebra: FreeGradedLie, elements: Sequence[LieElement]):
    """Integer envelope coordinate rows (cleared denominators) of a family."""
    index: dict[tuple, int] = {}
    rows = []
    for e in elements:
        env = algebra.envelope(e)
        lcm = 1
        for c in env.values():
            lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
        row = {}
        for word, coeff in env.items():
            if word not in index:
                index[word] = len(index)
            row[index[word]] = int(coeff * lcm)
        rows.append(row)
    return rows


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def span_rank(
    algebra: FreeGradedLie, generators: Sequence[GeneratorSymbol], degree: int
) -> int:
    """Rank of the span of all left-normed bracketings of the given degree."""
    letters = [LieMonomial.leaf(g) for g in generators]
    elements: list[LieElement] = []
    max_weight = degree  # degrees are >= 1

    def sequences(remaining: int, slots: int, acc: list[LieMonomial]):
        if remaining == 0 and acc:
            elements.append(_left_normed(acc))
            return
        if slots == 0:
            return
        for letter in letters:
            d = monomial_degree(letter)
            if d <= remaining:
                acc.append(letter)
                sequences(remaining - d, slots - 1, acc)
                acc.pop()

    sequences(degree, max_weight, [])
    return _int_row_rank(_envelope_rows(algebra, elements))


def independence_rank(algebra: FreeGradedLie, elements: Sequence[LieElement]) -> int:
    """Rank of an arbitrary family of elements via envelope coordinates."""
    return _int_row_rank(_envelope_rows(algebra, [e for e in elements]))


def _lie_spanning_family(obj, s: int, t: int) -> list[LieElement]:
    """All left-normed bracketings of level-s letters with total degree t."""
    letters = [LieMonomial.leaf(gen, word) for word, gen in obj.level_generators(s)]
    out: list[LieElement] = []

    def sequences(start_degree_left: int, acc: list[LieMonomial]):
        if start_degree_left == 0 and acc:
            out.append(_left_normed(acc))
            return
        for letter in letters:
            d = monomial_degree(letter)
            if d <= start_degree_left:
                acc.append(letter)
                sequences(start_degree_left - d, acc)
                acc.pop()

    sequences(t, [])
    return out


class _QuotientSpace:
    """Envelope-coordinate workspace modulo a degenerate subspace."""

    def __init__(self, algebra: FreeGradedLie, degenerate: Sequence[LieElement]):
        self.algebra = algebra
        self.index: dict[tuple, int] = {}
        self.echelon: dict[int, dict[int, Fraction]] = {}
        for e in degenerate:
            self.reduce(e, insert=True)

    def _vector(self, e: LieElement) -> dict[int, Fraction]:
        vec: dict[int, Fraction] = {}
        for word, coeff in self.algebra.envelope(e).items():
            idx = self.index.setdefault(word, len(self.index))
            vec[idx] = coeff
        return vec

    def reduce(self, e: LieElement, insert: bool = False) -> dict[int, Fraction]:
        vec = self._vector(e)
        for pivot in sorted(self.echelon):
            if pivot in vec and vec[pivot]:
                factor = vec[pivot]
                row = self.echelon[pivot]
                for col, val in row.items():
                    new = vec.get(col, Fraction(0)) - factor * val
                    if new == 0:
                        vec.pop(col, None)
                    else:
                        vec[col] = new
        vec = {c: v for c, v in vec.items() if v}
        if insert and vec:
            pivot = min(vec)
            pv = vec[pivot]
            self.echelon[pivot] = {c: v / pv for c, v in vec.items()}
        return vec


def dense_e2_rank(obj, s: int, t: int) -> int:
    """Second-page rank at (s, t) computed without the basis machinery.

    Works with spanning families of left-normed brackets in raw envelope
    coordinates and quotients out the degeneracy images directly.
    """
    algebra = obj.algebra

    def degenerate_family(level: int) -> list[LieElement]:
        if level == 0:
            return []
        out = []
        below = _lie_spanning_family(obj, level - 1, t)
        from .lie import apply_degeneracy_index

        for j in range(level):
            out.extend(apply_degeneracy_index(j, e) for e in below)
        return out

    def alternating_boundary(level: int, e: LieElement) -> LieElement:
        out = LieElement.zero()
        for i in range(0, obj.max_face_index(level) + 1):
            term = obj.face(level, i, e)
            out = out + (term if i % 2 == 0 else -term)
        return out

    here = _lie_spanning_family(obj, s, t)

    # a basis of the normalized slice at s, as representatives
    basis_here: list[LieElement] = []
    probe = _QuotientSpace(algebra, degenerate_family(s))
    for e in here:
        if probe.reduce(e, insert=True):
            basis_here.append(e)

    if s == 0:
        cycle_count = len(basis_here)
    else:
        quotient_below = _QuotientSpace(algebra, degenerate_family(s - 1))
        rows = []
        col_index: dict[int, int] = {}
        for e in basis_here:
            vec = quotient_below.reduce(alternating_boundary(s, e))
            rows.append(vec)
        matrix_rows: list[list[Fraction]] = []
        for vec in rows:
            for col in vec:
                col_index.setdefault(col, len(col_index))
        for vec in rows:
            matrix_rows.append(
                [vec.get(col, Fraction(0)) for col in sorted(col_index, key=col_index.get)]
            )
        from . import linalg

        boundary_rank = linalg.rank(matrix_rows)
        cycle_count = len(basis_here) - boundary_rank

    above = _lie_spanning_family(obj, s + 1, t)
    image_probe = _QuotientSpace(algebra, degenerate_family(s))
    image_rank = 0
    for e in above:
        if image_probe.reduce(alternating_boundary(s + 1, e), insert=True):
            image_rank += 1
    return cycle_count - image_rank
