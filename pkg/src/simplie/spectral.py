"""First-page slices, normalized boundaries and exact second-page homology.

A slice at bidegree (s, t) is the span of the non-degenerate basis monomials
of internal reduced degree t on the level-s decorated generators; degenerate
monomials (some index in every leaf word) are discarded, which computes the
normalized complex.  The boundary is the alternating face sum, assembled
through full normalization; everything downstream is exact rational (or
integer lattice) linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from . import linalg
from .errors import BoundError, DomainError
from .lie import LieElement, LieMonomial, is_degenerate, monomial_leaves
from .simplicial import SimplicialLieObject

__all__ = [
    "Bidegree",
    "ChainSlice",
    "HomologyReport",
    "CrossTermBasis",
    "alternating_boundary",
    "chain_slice",
    "e2_report",
    "e2_table",
    "is_boundary",
    "cross_term_basis",
    "cross_e2_rank",
]


@dataclass(frozen=True)
class Bidegree:
    """Filtration (simplicial level) s and internal reduced degree t."""

    s: int
    t: int

    def __post_init__(self):
        if self.s < 0:
            raise DomainError(f"filtration must be >= 0, got {self.s}")
        if self.t < 1:
            raise DomainError(f"internal degree must be >= 1, got {self.t}")


@dataclass
class ChainSlice:
    """A normalized slice with its exact boundary matrix.

    ``boundary`` has one row per monomial of the (s-1)-slice basis and one
    column per basis monomial here.
    """

    bidegree: Bidegree
    basis: tuple[LieMonomial, ...]
    target_basis: tuple[LieMonomial, ...]
    boundary: list[list[Fraction]]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _slice_basis(obj, s: int, t: int) -> tuple[LieMonomial, ...]:
    letters = [LieMonomial.leaf(gen, word) for word, gen in obj.level_generators(s)]
    trees = obj.algebra.hall_basis_letters(letters, t)
    return tuple(tree for tree in trees if not is_degenerate(tree))


def alternating_boundary(obj, s: int, e: LieElement) -> LieElement:
    """The normalized-complex boundary: the alternating sum of all faces."""
    out = LieElement.zero()
    for i in range(0, obj.max_face_index(s) + 1):
        term = obj.face(s, i, e)
        out = out + (term if i % 2 == 0 else -term)
    return out


def _boundary_element(obj, s: int, mono: LieMonomial) -> LieElement:
    return alternating_boundary(obj, s, LieElement.from_monomial(mono))


def _coordinates(
    obj, element: LieElement, basis_index: Mapping[LieMonomial, int], dim: int
) -> list[Fraction]:
    coords = [Fraction(0)] * dim
    for mono, coeff in obj.algebra.normalize(element).terms():
        if is_degenerate(mono):
            continue
        idx = basis_index.get(mono)
        if idx is None:
            raise DomainError("element does not lie in the slice's span")
        coords[idx] = coeff
    return coords


def chain_slice(obj, s: int, t: int, max_dim: int | None = None) -> ChainSlice:
    """The (s, t) slice and its boundary into the (s-1) slice."""
    bidegree = Bidegree(s, t)
    basis = _slice_basis(obj, s, t)
    if max_dim is not None and len(basis) > max_dim:
        raise BoundError(
            f"slice ({s},{t}) has dimension {len(basis)} > bound {max_dim}"
        )
    if s == 0:
        return ChainSlice(bidegree, basis, (), [[] for _ in range(0)])
    target = _slice_basis(obj, s - 1, t)
    index = {mono: i for i, mono in enumerate(target)}
    columns = [
        _coordinates(obj, _boundary_element(obj, s, mono), index, len(target))
        for mono in basis
    ]
    matrix = [[col[r] for col in columns] for r in range(len(target))]
    return ChainSlice(bidegree, basis, target, matrix)


@dataclass
class HomologyReport:
    """Exact homology of the normalized complex at one bidegree."""

    bidegree: Bidegree
    dim: int
    cycle_rank: int
    boundary_rank: int
    rational_rank: int
    cycle_basis: list[list[Fraction]]
    boundary_image: list[list[Fraction]]
    torsion: list[int] | None = None

    def as_record(self) -> dict:
        record = {
            "s": self.bidegree.s,
            "t": self.bidegree.t,
            "dim": self.dim,
            "rank": self.rational_rank,
        }
        if self.torsion is not None:
            record["torsion"] = list(self.torsion)
        return record


def e2_report(obj, s: int, t: int, integral: bool = False, max_dim: int | None = None) -> HomologyReport:
    """Second-page homology at (s, t); with ``integral``, lattice torsion too."""
    slice_s = chain_slice(obj, s, t, max_dim=max_dim)
    slice_up = chain_slice(obj, s + 1, t, max_dim=max_dim)
    dim = slice_s.dim
    if s == 0:
        cycles = [[Fraction(1) if i == j else Fraction(0) for i in range(dim)] for j in range(dim)]
    else:
        cycles = linalg.nullspace(slice_s.boundary, ncols=dim)
    image_cols = [
        [slice_up.boundary[r][c] for r in range(dim)] for c in range(slice_up.dim)
    ]
    boundary_rank = linalg.rank(image_cols)
    report = HomologyReport(
        bidegree=Bidegree(s, t),
        dim=dim,
        cycle_rank=len(cycles),
        boundary_rank=boundary_rank,
        rational_rank=len(cycles) - boundary_rank,
        cycle_basis=cycles,
        boundary_image=image_cols,
    )
    if integral:
        report.torsion = _lattice_torsion(slice_s, slice_up)
    return report


def _require_integer(matrix: Sequence[Sequence[Fraction]], what: str) -> list[list[int]]:
    out = []
    for row in matrix:
        ints = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise DomainError(
                    f"{what} has non-integer entries; the integral mode needs an "
                    "integral CW basis (no rationalized attachings)"
                )
            ints.append(f.numerator)
        out.append(ints)
    return out


def _lattice_torsion(slice_s: ChainSlice, slice_up: ChainSlice) -> list[int]:
    dim = slice_s.dim
    d_s = _require_integer(slice_s.boundary, "the boundary matrix")
    d_up = _require_integer(
        [[slice_up.boundary[r][c] for c in range(slice_up.dim)] for r in range(dim)],
        "the boundary matrix",
    )
    if slice_s.bidegree.s == 0 or not d_s:
        kernel = [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]
    else:
        kernel = linalg.integer_kernel_basis(d_s, dim)
    if not kernel:
        return []
    # coordinates of the incoming boundaries in the saturated kernel lattice
    k_cols = [[Fraction(kernel[j][i]) for j in range(len(kernel))] for i in range(dim)]
    incoming = []
    for c in range(slice_up.dim):
        column = [Fraction(d_up[r][c]) for r in range(dim)]
        x = linalg.solve(k_cols, column)
        if x is None:
            raise DomainError("boundary image escapes the cycle lattice")
        if any(v.denominator != 1 for v in x):
            raise DomainError("kernel basis failed to saturate the cycle lattice")
        incoming.append([v.numerator for v in x])
    if not incoming:
        return []
    rows = [[incoming[c][r] for c in range(len(incoming))] for r in range(len(kernel))]
    divisors = linalg.elementary_divisors(rows)
    return [d for d in divisors if d not in (0, 1)]


def e2_table(
    obj,
    s_range: Sequence[int],
    t_range: Sequence[int],
    integral: bool = False,
    max_dim: int | None = None,
) -> list[dict]:
    """Rank records over a bidegree window, ordered by (t, s)."""
    records = []
    for t in sorted(set(t_range)):
        for s in sorted(set(s_range)):
            report = e2_report(obj, s, t, integral=integral, max_dim=max_dim)
            records.append(report.as_record())
    return records


def is_boundary(obj, s: int, t: int, e: LieElement, max_dim: int | None = None) -> LieElement | None:
    """An exact preimage of ``e`` under the incoming boundary, if one exists."""
    slice_s = chain_slice(obj, s, t, max_dim=max_dim)
    index = {mono: i for i, mono in enumerate(slice_s.basis)}
    target = _coordinates(obj, e, index, slice_s.dim)
    slice_up = chain_slice(obj, s + 1, t, max_dim=max_dim)
    matrix = [
        [slice_up.boundary[r][c] for c in range(slice_up.dim)] for r in range(slice_s.dim)
    ]
    x = linalg.solve(matrix, target)
    if x is None:
        return None
    out = LieElement.zero()
    for coeff, mono in zip(x, slice_up.basis):
        if coeff:
            out = out + LieElement.from_monomial(mono, coeff)
    return out


@dataclass
class CrossTermBasis:
    """A slice basis split into pure and mixed (cross-term) monomials."""

    bidegree: Bidegree
    pure: tuple[LieMonomial, ...]
    cross: tuple[LieMonomial, ...]
    boundary_closed: bool
    cross_boundary: list[list[Fraction]]


def _monomial_groups(mono: LieMonomial, grouping: Callable) -> set:
    return {grouping(leaf.gen) for leaf in monomial_leaves(mono)}


def cross_term_basis(obj, grouping, s: int, t: int, max_dim: int | None = None) -> CrossTermBasis:
    """Split the slice by a generator grouping; restrict the boundary to the cross part.

    ``grouping`` maps generator symbols to opaque labels; monomials touching a
    single label are pure, the rest form the cross-term.
    """
    if isinstance(grouping, Mapping):
        table = dict(grouping)
        grouping_fn = lambda gen: table[gen]
    else:
        grouping_fn = grouping
    slice_s = chain_slice(obj, s, t, max_dim=max_dim)
    pure, cross = [], []
    for mono in slice_s.basis:
        (cross if len(_monomial_groups(mono, grouping_fn)) > 1 else pure).append(mono)
    cross_idx = [i for i, mono in enumerate(slice_s.basis) if mono in set(cross)]
    target_cross = {
        i
        for i, mono in enumerate(slice_s.target_basis)
        if len(_monomial_groups(mono, grouping_fn)) > 1
    }
    closed = True
    restricted = []
    for r in sorted(target_cross):
        restricted.append([slice_s.boundary[r][c] for c in cross_idx])
    for r in range(len(slice_s.target_basis)):
        if r in target_cross:
            continue
        if any(slice_s.boundary[r][c] != 0 for c in cross_idx):
            closed = False
    return CrossTermBasis(
        bidegree=Bidegree(s, t),
        pure=tuple(pure),
        cross=tuple(cross),
        boundary_closed=closed,
        cross_boundary=restricted,
    )


def cross_e2_rank(obj, grouping, s: int, t: int, max_dim: int | None = None) -> int:
    """Rank of the cross-term homology at (s, t) (boundary restricted)."""
    here = cross_term_basis(obj, grouping, s, t, max_dim=max_dim)
    above = cross_term_basis(obj, grouping, s + 1, t, max_dim=max_dim)
    if not here.boundary_closed or not above.boundary_closed:
        raise DomainError("the cross-term span is not boundary-closed here")
    dim = len(here.cross)
    if s == 0:
        cycle_rank = dim
    else:
        cycle_rank = len(linalg.nullspace(here.cross_boundary, ncols=dim))
    boundary_rank = linalg.rank(
        [[above.cross_boundary[r][c] for c in range(len(above.cross))] for r in range(dim)]
    ) if above.cross else 0
    return cycle_rank - boundary_rank
