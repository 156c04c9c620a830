"""Constructors for the named resolutions, attaching elements and fixtures.

Everything here is assembled term by term from the shuffle/sign calculus, so
the built expressions keep their displayed shapes; semantic checks go through
the algebra.  Wedge-of-sphere constructions use the Whitehead sign
convention, the differential graded fixtures the chain-level one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .combinatorics import (
    DegreeVector,
    IndexSet,
    ShufflePartition,
    enumerate_multi_index_shuffles,
    enumerate_restricted_shuffles,
    koszul_sign,
)
from .errors import DomainError, IncompleteSystemError, MalformedElementError
from .lie import (
    CHAIN_ALGEBRA,
    WHITEHEAD_ALGEBRA,
    FreeGradedLie,
    GeneratorSymbol,
    LieElement,
    LieMonomial,
    bracket_trees,
    generator_element,
    apply_degeneracy_word,
)
from .simplicial import (
    CWGenerator,
    SimplicialLieObject,
    is_moore_cycle,
    suspension_resolution,
)

__all__ = [
    "omega_hat",
    "omega_triple",
    "shuffle_bracket_sum",
    "FatWedgeSummary",
    "fat_wedge_summands",
    "wp_symbol",
    "phi_s",
    "higher_wp_resolution",
    "cpn_symbols",
    "gamma_element",
    "cpn_resolution",
    "comparison_coefficient",
    "cpn_comparison_map",
    "ChainMapReport",
    "verify_chain_map",
    "DifferentialGradedLie",
    "DefiningSystem",
    "lie_massey_obstruction",
    "DefiningSystemReport",
    "verify_defining_system",
    "BMFFixture",
    "bmf_fixture",
    "example_triple_system",
    "partial_boundary_identities",
]


def shuffle_bracket_sum(
    first: LieElement, second: LieElement, n: int, k: int
) -> LieElement:
    """Sum of sgn<I, J> [s_I first, s_J second] over (k, n-k) multi-indices."""
    out = LieElement.zero()
    for partition in enumerate_multi_index_shuffles(n, k):
        I, J = partition.blocks
        term = bracket_trees(
            apply_degeneracy_word(I.elements, first),
            apply_degeneracy_word(J.elements, second),
        )
        out = out + term.scale(partition.sign())
    return out


def omega_hat(
    p: int, q: int, k: int, l: int, algebra: FreeGradedLie = WHITEHEAD_ALGEBRA
) -> tuple[SimplicialLieObject, LieElement]:
    """The two-sphere wedge resolution and its bracket representative.

    ``p`` and ``q`` are sphere dimensions (>= 2).  The representative lives
    at level ``k + l`` and carries the k-letter degeneracy words on the first
    generator, so its home level is ``l`` (and the second generator's is
    ``k``).
    """
    if p < 2 or q < 2:
        raise DomainError("sphere dimensions must be >= 2")
    if not 0 <= l <= k:
        raise DomainError("degeneracy counts must satisfy k >= l >= 0")
    ip = GeneratorSymbol("ip", p - 1, home_dim=l)
    iq = GeneratorSymbol("iq", q - 1, home_dim=k)
    obj = SimplicialLieObject(
        label=f"wedge_p{p}q{q}_k{k}l{l}",
        generators=(CWGenerator(ip), CWGenerator(iq)),
        algebra=algebra,
    )
    element = shuffle_bracket_sum(
        generator_element(ip), generator_element(iq), k + l, k
    )
    return obj, element


def omega_triple(
    p: int, q: int, r: int, algebra: FreeGradedLie = WHITEHEAD_ALGEBRA
) -> tuple[SimplicialLieObject, LieElement]:
    """The weight-three representative over a three-sphere wedge at level 3.

    Built by composing the one-one expression into the two-one shuffle sum,
    exactly as the nested display.  ``p, q, r`` are sphere dimensions.
    """
    if min(p, q, r) < 2:
        raise DomainError("sphere dimensions must be >= 2")
    ip = GeneratorSymbol("ip", p - 1, home_dim=1)
    iq = GeneratorSymbol("iq", q - 1, home_dim=1)
    ir = GeneratorSymbol("ir", r - 1, home_dim=1)
    obj = SimplicialLieObject(
        label=f"triple_p{p}q{q}r{r}",
        generators=(CWGenerator(ip), CWGenerator(iq), CWGenerator(ir)),
        algebra=algebra,
    )
    inner = shuffle_bracket_sum(generator_element(ip), generator_element(iq), 2, 1)
    element = shuffle_bracket_sum(inner, generator_element(ir), 3, 1)
    return obj, element


# ---------------------------------------------------------------------------
# fat wedges and higher Whitehead data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FatWedgeSummary:
    """Cell data of the k-th fat wedge of a list of spheres."""

    sphere_dims: tuple[int, ...]
    k: int
    summands: tuple[tuple[tuple[int, ...], int], ...]


def fat_wedge_summands(sphere_dims: Sequence[int], k: int) -> FatWedgeSummary:
    """Attaching-wedge summands: subcollections of size m-k+1, spheres S^(N-1)."""
    dims = tuple(int(d) for d in sphere_dims)
    m = len(dims)
    if any(d < 2 for d in dims):
        raise DomainError("fat wedges are built from simply-connected spheres")
    if not 0 < k < m:
        raise DomainError(f"fat wedge order k must satisfy 0 < k < {m}")
    size = m - k + 1
    summands = tuple(
        (combo, sum(dims[i - 1] for i in combo) - 1)
        for combo in itertools.combinations(range(1, m + 1), size)
    )
    return FatWedgeSummary(dims, k, summands)


def wp_symbol(degrees: DegreeVector | Sequence[int], tau: Sequence[int]) -> GeneratorSymbol:
    """The generator indexed by an ascending subset tau of sphere positions."""
    degs = degrees if isinstance(degrees, DegreeVector) else DegreeVector(tuple(degrees))
    tau = tuple(tau)
    if not tau or any(a >= b for a, b in zip(tau, tau[1:])):
        raise DomainError(f"subset must be ascending and non-empty, got {tau}")
    if tau[0] < 1 or tau[-1] > len(degs):
        raise DomainError(f"subset {tau} escapes the degree vector")
    name = "i" + "".join(str(i) for i in tau)
    degree = sum(degs[i - 1] for i in tau)
    return GeneratorSymbol(name, degree, home_dim=len(tau) - 1)


def phi_s(degrees: DegreeVector | Sequence[int], tau: Sequence[int] | None = None) -> LieElement:
    """The attaching element of the generator indexed by ``tau``.

    Runs over splittings of ``tau`` into sub-generator pairs (restricted when
    the two halves have equal size), weighted by the global sign
    ``(-1)**(deg(sigma') + k)``, the Koszul sign of the splitting and the
    inner shuffle sign of the degeneracy words.
    """
    degs = degrees if isinstance(degrees, DegreeVector) else DegreeVector(tuple(degrees))
    if tau is None:
        tau = tuple(range(1, len(degs) + 1))
    tau = tuple(tau)
    m = len(tau)
    if m < 2:
        raise DomainError("attaching elements need at least two spheres")
    local = DegreeVector(tuple(degs[i - 1] for i in tau))
    out = LieElement.zero()
    for k in range(1, m // 2 + 1):
        for split in enumerate_restricted_shuffles(m, m - k):
            sigma1, sigma2 = split.blocks
            deg1 = sum(local[i - 1] for i in sigma1)
            global_sign = -1 if (deg1 + k) % 2 else 1
            graded = koszul_sign(local, split)
            gen1 = wp_symbol(degs, tuple(tau[i - 1] for i in sigma1))
            gen2 = wp_symbol(degs, tuple(tau[i - 1] for i in sigma2))
            inner = shuffle_bracket_sum(
                generator_element(gen1), generator_element(gen2), m - 2, k - 1
            )
            out = out + inner.scale(global_sign * graded)
    return out


def higher_wp_resolution(
    degrees: DegreeVector | Sequence[int], algebra: FreeGradedLie = WHITEHEAD_ALGEBRA
) -> SimplicialLieObject:
    """The resolution with one generator per non-empty subset of the spheres."""
    degs = degrees if isinstance(degrees, DegreeVector) else DegreeVector(tuple(degrees))
    n = len(degs)
    if n < 2:
        raise DomainError("a higher product needs at least two spheres")
    generators = []
    for size in range(1, n + 1):
        for tau in itertools.combinations(range(1, n + 1), size):
            symbol = wp_symbol(degs, tau)
            attaching = None if size == 1 else phi_s(degs, tau)
            generators.append(CWGenerator(symbol, attaching))
    label = "hwp_" + "_".join(str(d) for d in degs.degrees)
    return SimplicialLieObject(label=label, generators=tuple(generators), algebra=algebra)


# ---------------------------------------------------------------------------
# the projective-space tower
# ---------------------------------------------------------------------------


def cpn_symbols(n: int) -> list[GeneratorSymbol]:
    if n < 1:
        raise DomainError("the tower needs n >= 1")
    return [GeneratorSymbol(f"i{k + 2}", k + 1, home_dim=k) for k in range(n)]


def gamma_element(k: int, symbols: Sequence[GeneratorSymbol] | None = None) -> LieElement:
    """The attaching element gamma_k (level k-1), rational at k = 1."""
    if k < 1:
        raise DomainError("gamma is defined for k >= 1")
    if symbols is None:
        symbols = cpn_symbols(k + 1)
    by_name = {g.name: g for g in symbols}

    def gen(sphere_dim: int) -> GeneratorSymbol:
        return by_name[f"i{sphere_dim}"]

    if k == 1:
        i2 = generator_element(gen(2))
        return bracket_trees(i2, i2).scale(Fraction(1, 2))
    out = LieElement.zero()
    for j in range(2, (k + 3) // 2 + 1):
        sign_nj = -1 if (k * j) % 2 else 1
        symmetric = (k - j + 3) == j
        for partition in enumerate_multi_index_shuffles(k - 1, j - 2):
            I, J = partition.blocks
            if symmetric and 0 not in I:
                continue
            term = bracket_trees(
                apply_degeneracy_word(I.elements, generator_element(gen(k - j + 3))),
                apply_degeneracy_word(J.elements, generator_element(gen(j))),
            )
            out = out + term.scale(sign_nj * partition.sign())
    return out


def cpn_resolution(n: int, algebra: FreeGradedLie = WHITEHEAD_ALGEBRA) -> SimplicialLieObject:
    """One generator per level 0..n-1, attached by the gamma elements."""
    symbols = cpn_symbols(n)
    generators = []
    for k, symbol in enumerate(symbols):
        if k == 0:
            generators.append(CWGenerator(symbol))
        else:
            generators.append(
                CWGenerator(symbol, gamma_element(k, symbols), rationalized=(k == 1))
            )
    return SimplicialLieObject(label=f"cpn_{n}", generators=tuple(generators), algebra=algebra)


def comparison_coefficient(k: int) -> int:
    """(-1)**floor(k/2) * (k+1)!"""
    if k < 0:
        raise DomainError("the coefficient ladder starts at k = 0")
    return (-1) ** (k // 2) * math.factorial(k + 1)


def cpn_comparison_map(n: int) -> dict[GeneratorSymbol, LieElement]:
    """Generator assignment from the (n+1)-fold unit-degree wedge resolution."""
    if n < 1:
        raise DomainError("the tower needs n >= 1")
    degs = DegreeVector((1,) * (n + 1))
    targets = cpn_symbols(n)
    assignment: dict[GeneratorSymbol, LieElement] = {}
    for size in range(1, n + 1):
        k = size - 1
        value = generator_element(targets[k]).scale(comparison_coefficient(k))
        for tau in itertools.combinations(range(1, n + 2), size):
            assignment[wp_symbol(degs, tau)] = value
    return assignment


@dataclass
class ChainMapReport:
    checked: int = 0
    defects: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.defects


def verify_chain_map(
    assignment: Mapping[GeneratorSymbol, LieElement],
    source: SimplicialLieObject,
    target: SimplicialLieObject,
    up_to_level: int,
) -> ChainMapReport:
    """Check d_0 f = f d_0 on every basis generator with home level in 1..bound."""
    report = ChainMapReport()
    algebra = target.algebra
    for cw in source.generators:
        home = cw.symbol.home_dim
        if home < 1 or home > up_to_level:
            continue
        image = assignment.get(cw.symbol)
        if image is None:
            continue
        lhs = target.face(home, 0, image)
        rhs = algebra.apply_lie_map(assignment, source.attaching_of(cw.symbol), normalized=False)
        report.checked += 1
        diff = lhs - rhs
        if not algebra.is_zero(diff):
            report.defects.append((cw.symbol, diff))
    return report


# ---------------------------------------------------------------------------
# differential graded fixtures and bracket systems
# ---------------------------------------------------------------------------


class DifferentialGradedLie:
    """A free differential graded Lie algebra on finitely many generators."""

    def __init__(
        self,
        label: str,
        generators: Sequence[GeneratorSymbol],
        differentials: Mapping[GeneratorSymbol, LieElement],
        algebra: FreeGradedLie = CHAIN_ALGEBRA,
    ):
        self.label = label
        self.generators = tuple(generators)
        self.algebra = algebra
        self.differentials = {g: differentials.get(g, LieElement.zero()) for g in self.generators}
        for gen, value in self.differentials.items():
            if value.is_syntactically_zero:
                continue
            if value.homogeneous_degree() != gen.reduced_degree - 1:
                raise MalformedElementError(
                    f"the differential of {gen.name} must drop the degree by one"
                )

    def d(self, e: LieElement) -> LieElement:
        return self.algebra.apply_derivation(self.differentials, e)

    def d_squared_defects(self) -> list[tuple[GeneratorSymbol, LieElement]]:
        out = []
        for gen in self.generators:
            residue = self.d(self.differentials[gen])
            if not self.algebra.is_zero(residue):
                out.append((gen, residue))
        return out

    def is_cycle(self, e: LieElement) -> bool:
        return self.algebra.is_zero(self.d(e))

    def chain_basis(self, degree: int) -> list[LieMonomial]:
        return self.algebra.hall_basis(self.generators, degree)

    def boundary_witness(self, e: LieElement) -> LieElement | None:
        """Solve d(x) = e exactly in the free algebra, if possible."""
        degree = self.algebra.normalize(e).homogeneous_degree()
        if degree is None:
            if self.algebra.is_zero(e):
                return LieElement.zero()
            raise DomainError("boundary queries need homogeneous elements")
        chains = self.chain_basis(degree + 1)
        basis = self.chain_basis(degree)
        index = {mono: i for i, mono in enumerate(basis)}

        def coords(x: LieElement) -> list[Fraction]:
            v = [Fraction(0)] * len(basis)
            for mono, coeff in self.algebra.normalize(x).terms():
                v[index[mono]] = coeff
            return v

        columns = [coords(self.d(LieElement.from_monomial(c))) for c in chains]
        matrix = [[col[r] for col in columns] for r in range(len(basis))]
        solution = linalg.solve(matrix, coords(e))
        if solution is None:
            return None
        out = LieElement.zero()
        for coeff, mono in zip(solution, chains):
            if coeff:
                out = out + LieElement.from_monomial(mono, coeff)
        return out

    def homologous(self, a: LieElement, b: LieElement) -> bool:
        return self.boundary_witness(a - b) is not None


@dataclass
class DefiningSystem:
    """Inputs x_1..x_n and entries x_I for proper index tuples."""

    dgl: DifferentialGradedLie
    inputs: tuple[LieElement, ...]
    entries: dict[tuple[int, ...], LieElement]

    def entry(self, I: tuple[int, ...]) -> LieElement:
        if len(I) == 1:
            idx = I[0]
            if not 1 <= idx <= len(self.inputs):
                raise IncompleteSystemError(f"input index {idx} out of range")
            return self.inputs[idx - 1]
        if I not in self.entries:
            raise IncompleteSystemError(f"missing defining-system entry for {I}")
        return self.entries[I]

    def entry_degree(self, I: tuple[int, ...]) -> int:
        degree = self.entry(I).homogeneous_degree()
        if degree is None:
            raise MalformedElementError(f"entry {I} is not homogeneous")
        return degree


def _subsequence_splittings(I: tuple[int, ...]):
    """Ordered pairs (J, K) of disjoint subsequences covering I with j1 < k1."""
    n = len(I)
    for mask in range(1, 2 ** n - 1):
        J = tuple(I[i] for i in range(n) if mask & (1 << i))
        K = tuple(I[i] for i in range(n) if not mask & (1 << i))
        if J[0] < K[0]:
            yield J, K


def lie_massey_obstruction(system: DefiningSystem, I: Sequence[int]) -> LieElement:
    """The signed sum of brackets [x_J, x_K] prescribed for the tuple I."""
    I = tuple(I)
    if len(I) < 2 or any(a >= b for a, b in zip(I, I[1:])):
        raise DomainError(f"index tuples must be ascending of length >= 2, got {I}")
    out = LieElement.zero()
    for J, K in _subsequence_splittings(I):
        epsilon = 0
        for j in J:
            dj = system.entry_degree((j,))
            for k in K:
                if k < j:
                    epsilon += (dj + 1) * (system.entry_degree((k,)) + 1)
        sign_exp = epsilon + system.entry_degree(J) + 1
        sign = -1 if sign_exp % 2 else 1
        out = out + bracket_trees(system.entry(J), system.entry(K)).scale(sign)
    return out


@dataclass
class DefiningSystemReport:
    valid: bool
    defects: list
    value: LieElement
    value_is_cycle: bool
    bounding_witness: LieElement | None

    @property
    def value_bounds(self) -> bool:
        return self.bounding_witness is not None


def verify_defining_system(system: DefiningSystem) -> DefiningSystemReport:
    """Check d(x_I) = x~_I throughout; return the top value and its homology."""
    dgl = system.dgl
    defects = []
    for i, x in enumerate(system.inputs, start=1):
        if not dgl.is_cycle(x):
            defects.append(((i,), dgl.d(x)))
    for I in sorted(system.entries):
        required = lie_massey_obstruction(system, I)
        diff = dgl.d(system.entry(I)) - required
        if not dgl.algebra.is_zero(diff):
            defects.append((I, dgl.algebra.normalize(diff)))
    full = tuple(range(1, len(system.inputs) + 1))
    value = lie_massey_obstruction(system, full)
    value_is_cycle = dgl.is_cycle(value)
    witness = dgl.boundary_witness(value) if value_is_cycle else None
    return DefiningSystemReport(
        valid=not defects,
        defects=defects,
        value=value,
        value_is_cycle=value_is_cycle,
        bounding_witness=witness,
    )


@dataclass
class BMFFixture:
    """The sphere-bundle differential graded fixture.

    ``differential_candidates`` holds the two readable differentials for the
    top degree-7 class; the default object carries the coproduct-derived one.
    """

    dgl: DifferentialGradedLie
    alpha: LieElement
    differential_candidates: dict[str, LieElement]

    def degree6_dgl(self) -> DifferentialGradedLie:
        """The sub-algebra generated below degree 7 (for degree-6 homology)."""
        kept = tuple(g for g in self.dgl.generators if g.reduced_degree < 7)
        return DifferentialGradedLie(
            "bmf_le6",
            kept,
            {g: self.dgl.differentials[g] for g in kept},
            algebra=self.dgl.algebra,
        )

    def with_candidate(self, name: str) -> DifferentialGradedLie:
        gens = self.dgl.generators
        diffs = dict(self.dgl.differentials)
        top = next(g for g in gens if g.name == "w")
        diffs[top] = self.differential_candidates[name]
        return DifferentialGradedLie("bmf_" + name, gens, diffs, algebra=self.dgl.algebra)

    def triple_system(self) -> DefiningSystem:
        """The system for the bracket of (y, x, x) with the doubled entries."""
        by_name = {g.name: g for g in self.dgl.generators}
        x = generator_element(by_name["x"])
        y = generator_element(by_name["y"])
        yx2 = generator_element(by_name["yx"]).scale(2)
        xx2 = generator_element(by_name["xx"]).scale(2)
        return DefiningSystem(
            dgl=self.degree6_dgl(),
            inputs=(y, x, x),
            entries={(1, 2): yx2, (1, 3): yx2, (2, 3): xx2},
        )


def bmf_fixture() -> BMFFixture:
    x = GeneratorSymbol("x", 1)
    y = GeneratorSymbol("y", 3)
    xx = GeneratorSymbol("xx", 3)
    yx = GeneratorSymbol("yx", 5)
    xxx = GeneratorSymbol("xxx", 5)
    z = GeneratorSymbol("z", 6)
    yy = GeneratorSymbol("yy", 7)
    w = GeneratorSymbol("w", 7)

    def el(g):
        return generator_element(g)

    half = Fraction(1, 2)
    alpha = bracket_trees(el(yx), el(x)).scale(2) + bracket_trees(el(xx), el(y))
    candidates = {
        "coproduct": el(z) + bracket_trees(el(y), el(y)) + alpha,
        "table": el(z) + bracket_trees(el(y), el(y)).scale(half) + alpha.scale(half),
    }
    differentials = {
        xx: bracket_trees(el(x), el(x)).scale(half),
        yx: bracket_trees(el(y), el(x)).scale(half),
        xxx: bracket_trees(el(xx), el(x)),
        yy: bracket_trees(el(y), el(y)).scale(half),
        w: candidates["coproduct"],
    }
    dgl = DifferentialGradedLie(
        "bmf", (x, y, xx, yx, xxx, z, yy, w), differentials, algebra=CHAIN_ALGEBRA
    )
    return BMFFixture(dgl=dgl, alpha=alpha, differential_candidates=candidates)


def example_triple_system(
    p: int, q: int, r: int
) -> tuple[DefiningSystem, SimplicialLieObject, LieElement]:
    """The odd-degree triple bracket: its system, resolution and attaching.

    Returns the defining system in the free differential algebra, the
    three-sphere resolution whose top cell realizes the bracket, and the
    attaching element of that cell.
    """
    if any(d % 2 == 0 or d < 1 for d in (p, q, r)):
        raise DomainError("this construction expects odd positive degrees")
    xp = GeneratorSymbol("xp", p)
    xq = GeneratorSymbol("xq", q)
    xr = GeneratorSymbol("xr", r)
    pairs = {
        (1, 2): GeneratorSymbol("xpq", p + q + 1),
        (1, 3): GeneratorSymbol("xpr", p + r + 1),
        (2, 3): GeneratorSymbol("xqr", q + r + 1),
    }
    singles = {1: xp, 2: xq, 3: xr}
    differentials = {}
    for (a, b), gen in pairs.items():
        sign = -1 if (singles[a].reduced_degree + 1) % 2 else 1
        differentials[gen] = bracket_trees(
            generator_element(singles[a]), generator_element(singles[b])
        ).scale(sign)
    top = GeneratorSymbol("xpqr", p + q + r + 2)
    gens = (xp, xq, xr, *pairs.values(), top)
    dgl = DifferentialGradedLie("triple_system", gens, differentials, algebra=CHAIN_ALGEBRA)
    system = DefiningSystem(
        dgl=dgl,
        inputs=(generator_element(xp), generator_element(xq), generator_element(xr)),
        entries={key: generator_element(gen) for key, gen in pairs.items()},
    )
    full_diffs = dict(differentials)
    full_diffs[top] = lie_massey_obstruction(system, (1, 2, 3))
    dgl_full = DifferentialGradedLie("triple_system", gens, full_diffs, algebra=CHAIN_ALGEBRA)
    system = DefiningSystem(
        dgl=dgl_full, inputs=system.inputs, entries=system.entries
    )

    ip = GeneratorSymbol("ip", p, home_dim=0)
    iq = GeneratorSymbol("iq", q, home_dim=0)
    ir = GeneratorSymbol("ir", r, home_dim=0)
    ipq = GeneratorSymbol("ipq", p + q, home_dim=1)
    ipr = GeneratorSymbol("ipr", p + r, home_dim=1)
    iqr = GeneratorSymbol("iqr", q + r, home_dim=1)

    def pair_attaching(a, b):
        return bracket_trees(generator_element(a), generator_element(b))

    phi = (
        bracket_trees(
            apply_degeneracy_word((0,), generator_element(ip)), generator_element(iqr)
        )
        + bracket_trees(
            generator_element(ipq), apply_degeneracy_word((0,), generator_element(ir))
        )
        + bracket_trees(
            generator_element(ipr), apply_degeneracy_word((0,), generator_element(iq))
        )
    )
    im = GeneratorSymbol("im", p + q + r, home_dim=2)
    resolution = SimplicialLieObject(
        label=f"triple_cell_p{p}q{q}r{r}",
        generators=(
            CWGenerator(ip),
            CWGenerator(iq),
            CWGenerator(ir),
            CWGenerator(ipq, pair_attaching(ip, iq)),
            CWGenerator(ipr, pair_attaching(ip, ir)),
            CWGenerator(iqr, pair_attaching(iq, ir)),
            CWGenerator(im, phi),
        ),
        algebra=WHITEHEAD_ALGEBRA,
    )
    return system, resolution, phi


# ---------------------------------------------------------------------------
# the partial-boundary ledger (degeneracy-pair identities)
# ---------------------------------------------------------------------------


def partial_boundary_identities(
    p: int = 4, q: int = 4
) -> tuple[SimplicialLieObject, list[tuple[LieElement, LieElement, int]]]:
    """The six level-4 boundary identities over a (3,3)-wedge.

    Returns the resolution plus triples (cycle, witness, sign) asserting
    ``alternating_boundary(witness) = sign * cycle`` exactly.
    """
    ip = GeneratorSymbol("ip", p - 1, home_dim=3)
    iq = GeneratorSymbol("iq", q - 1, home_dim=3)
    obj = SimplicialLieObject(
        label=f"wedge_p{p}q{q}_k3l3",
        generators=(CWGenerator(ip), CWGenerator(iq)),
        algebra=WHITEHEAD_ALGEBRA,
    )

    def term(word_p, word_q, coeff=1):
        return bracket_trees(
            LieElement.from_monomial(LieMonomial.leaf(ip, word_p)),
            LieElement.from_monomial(LieMonomial.leaf(iq, word_q)),
        ).scale(coeff)

    x = term((0, 1), (2, 4))
    y = term((0, 1), (2, 3))
    identities = [
        (term((0,), (3,)), x, 1),
        (term((0,), (2,)), y, 1),
        (term((1,), (3,)), term((0, 2), (1, 4)) - x, -1),
        (term((1,), (2,)) + term((0,), (1,)), term((0, 2), (1, 3)) - y, -1),
        (term((1,), (2,)) + term((1,), (0,)), term((1, 2), (0, 3)), -1),
        (term((2,), (3,)) - term((0,), (1,)), term((0, 3), (1, 4)), -1),
    ]
    return obj, identities
