"""Named verification suites shared by the CLI and the acceptance tests.

Each suite runs a closed list of exact checks and returns a deterministic
report; nothing here is sampled unless a seed is passed explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import linalg, oracles
from .combinatorics import (
    DegreeVector,
    IndexSet,
    ShufflePartition,
    enumerate_multi_index_shuffles,
    hat_shift,
    koszul_sign,
    multi_shuffle_sign,
    shuffle_sign,
)
from .catalog import (
    bmf_fixture,
    comparison_coefficient,
    cpn_comparison_map,
    cpn_resolution,
    cpn_symbols,
    example_triple_system,
    gamma_element,
    higher_wp_resolution,
    omega_hat,
    omega_triple,
    partial_boundary_identities,
    phi_s,
    verify_chain_map,
    verify_defining_system,
    wp_symbol,
)
from .expr import parse_element
from .lie import (
    CHAIN_ALGEBRA,
    WHITEHEAD_ALGEBRA,
    GeneratorSymbol,
    LieElement,
    LieMonomial,
    generator_element,
)
from .simplicial import (
    SimplicialLieObject,
    CWGenerator,
    is_moore_chain,
    is_moore_cycle,
    splice,
    suspension_resolution,
    verify_simplicial_identities,
)
from .spectral import (
    alternating_boundary,
    chain_slice,
    cross_e2_rank,
    e2_report,
    is_boundary,
)

__all__ = ["CheckResult", "SuiteResult", "run_suite", "SUITES"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))


# ---------------------------------------------------------------------------
# 1. sign calculus
# ---------------------------------------------------------------------------


def _subsets(ground: Sequence[int]):
    for r in range(len(ground) + 1):
        yield from itertools.combinations(ground, r)


def suite_signs(max_ground: int = 8, max_graded: int = 6) -> SuiteResult:
    result = SuiteResult("signs")
    ground = range(max_ground)

    bad = 0
    total = 0
    for assignment in itertools.product((0, 1, 2), repeat=max_ground):
        I = tuple(i for i in ground if assignment[i] == 1)
        J = tuple(i for i in ground if assignment[i] == 2)
        k, l = len(I), len(J)
        total += 1
        if shuffle_sign(I, J) != (-1) ** (k * l) * shuffle_sign(J, I):
            bad += 1
    result.add("sgn-complement-swap", bad == 0, f"{total} pairs")

    bad = 0
    total = 0
    for assignment in itertools.product((0, 1, 2, 3), repeat=max_ground):
        K = tuple(i for i in ground if assignment[i] in (1, 3))
        L = tuple(i for i in ground if assignment[i] in (2, 3))
        hk = hat_shift(IndexSet(K), prepend_zero=True)
        hl = hat_shift(IndexSet(L))
        total += 1
        if shuffle_sign(hk, hl) != shuffle_sign(K, L):
            bad += 1
            continue
        # the swap form; the exponent reads |L - K|, which is |L| on the
        # disjoint pairs the displayed identity is quoted for
        l_prime = len(set(L) - set(K))
        if shuffle_sign(hl, hk) != (-1) ** l_prime * shuffle_sign(L, K):
            bad += 1
    result.add("sgn-hat-shifts", bad == 0, f"{total} pairs")

    bad = 0
    total = 0
    for n in range(0, max_ground + 1):
        for assignment in itertools.product((0, 1, 2), repeat=n):
            M = tuple(i for i in range(n) if assignment[i] == 0)
            N = tuple(i for i in range(n) if assignment[i] == 1)
            P = tuple(i for i in range(n) if assignment[i] == 2)
            total += 1
            three = multi_shuffle_sign(M, N, P)
            left = shuffle_sign(M, N + P) * shuffle_sign(N, P)
            right = shuffle_sign(M + N, P) * shuffle_sign(M, N)
            if not (left == three == right):
                bad += 1
    result.add("sgn-three-block", bad == 0, f"{total} decompositions")

    bad = 0
    total = 0
    for i_swap in range(max_ground - 1):
        for assignment in itertools.product((0, 1, 2), repeat=max_ground):
            I = [i for i in ground if assignment[i] == 1]
            J = [i for i in ground if assignment[i] == 2]
            if (i_swap in I) == (i_swap in J):
                continue
            if (i_swap in I and i_swap + 1 not in J) or (
                i_swap in J and i_swap + 1 not in I
            ):
                continue
            I2 = sorted(set(I) ^ {i_swap, i_swap + 1})
            J2 = sorted(set(J) ^ {i_swap, i_swap + 1})
            total += 1
            if shuffle_sign(I2, J2) != -shuffle_sign(I, J):
                bad += 1
    result.add("sgn-pair-swap", bad == 0, f"{total} swaps")

    bad = 0
    total = 0
    for n in range(1, max_graded + 1):
        colorings = list(itertools.product((0, 1), repeat=n))
        partitions = []
        for coloring in colorings:
            first = IndexSet(tuple(i + 1 for i in range(n) if coloring[i] == 0))
            second = IndexSet(tuple(i + 1 for i in range(n) if coloring[i] == 1))
            partitions.append((ShufflePartition((first, second)), ShufflePartition((second, first))))
        for degrees in itertools.product((1, 2, 3), repeat=n):
            vector = DegreeVector(degrees)
            for forward, backward in partitions:
                k = len(forward.blocks[0])
                l = n - k
                deg1 = sum(degrees[i - 1] for i in forward.blocks[0])
                deg2 = sum(degrees[i - 1] for i in forward.blocks[1])
                total += 1
                expected = (-1) ** (deg1 * deg2 + k * l) * koszul_sign(vector, backward)
                if koszul_sign(vector, forward) != expected:
                    bad += 1
    result.add("gsn-degree-switch", bad == 0, f"{total} splittings")

    bad = 0
    total = 0
    for n in range(1, max_graded + 1):
        coloring_data = []
        for coloring in itertools.product((0, 1, 2), repeat=n):
            sp = tuple(i + 1 for i in range(n) if coloring[i] == 0)
            tp = tuple(i + 1 for i in range(n) if coloring[i] == 1)
            tpp = tuple(i + 1 for i in range(n) if coloring[i] == 2)
            union_sp_tp = tuple(sorted(sp + tp))
            spp = tuple(sorted(tp + tpp))
            coloring_data.append(
                (
                    ShufflePartition.of(union_sp_tp, tpp),
                    ShufflePartition.of(sp, tp),
                    ShufflePartition.of(sp, spp),
                    ShufflePartition.of(tp, tpp),
                )
            )
        for degrees in itertools.product((1, 2, 3), repeat=n):
            vector = DegreeVector(degrees)
            for left, a, b, c in coloring_data:
                total += 1
                lhs = koszul_sign(vector, left)
                rhs = koszul_sign(vector, a) * koszul_sign(vector, b) * koszul_sign(vector, c)
                if lhs != rhs:
                    bad += 1
    result.add("gsn-union-factorization", bad == 0, f"{total} triples")
    return result


# ---------------------------------------------------------------------------
# 2. the bracket representatives, verbatim
# ---------------------------------------------------------------------------


def _expected(obj: SimplicialLieObject, text: str) -> LieElement:
    symbols = {cw.symbol.name: cw.symbol for cw in obj.generators}
    return parse_element(text, symbols)


ONE_ONE = "[s0 ip, s1 iq] - [s1 ip, s0 iq]"
TWO_ONE = "[s1s0 ip, s2 iq] - [s2s0 ip, s1 iq] + [s2s1 ip, s0 iq]"
TRIPLE = (
    "[[s1s0 ip, s2s0 iq], s2s1 ir] - [[s1s0 ip, s2s1 iq], s2s0 ir]"
    " + [[s2s0 ip, s2s1 iq], s1s0 ir] - [[s2s0 ip, s1s0 iq], s2s1 ir]"
    " + [[s2s1 ip, s1s0 iq], s2s0 ir] - [[s2s1 ip, s2s0 iq], s1s0 ir]"
)


def suite_omega() -> SuiteResult:
    result = SuiteResult("omega")
    for p, q in ((3, 3), (3, 4), (4, 5)):
        obj, element = omega_hat(p, q, 1, 1)
        result.add(
            f"one-one p={p} q={q}",
            element == _expected(obj, ONE_ONE),
            str(element),
        )
        obj, element = omega_hat(p, q, 2, 1)
        result.add(
            f"two-one p={p} q={q}",
            element == _expected(obj, TWO_ONE),
            str(element),
        )
    for p, q, r in ((3, 3, 3), (3, 4, 5)):
        obj, element = omega_triple(p, q, r)
        result.add(
            f"triple p={p} q={q} r={r}",
            element == _expected(obj, TRIPLE),
            f"{len(element.terms())} terms",
        )
    obj, element = omega_hat(3, 4, 0, 0)
    result.add("zero-zero", element == _expected(obj, "[ip, iq]"), str(element))
    return result


# ---------------------------------------------------------------------------
# 3. Moore cycles at desk scale
# ---------------------------------------------------------------------------


def suite_moore(full: bool = True) -> SuiteResult:
    result = SuiteResult("moore")
    sphere_dims = (3, 4, 5) if full else (3,)
    max_k = 3 if full else 2
    bad = []
    total = 0
    for p in sphere_dims:
        for q in sphere_dims:
            for k in range(max_k + 1):
                for l in range(k + 1):
                    obj, element = omega_hat(p, q, k, l)
                    total += 1
                    if not is_moore_cycle(obj, k + l, element):
                        bad.append((p, q, k, l))
    result.add("wedge-representatives", not bad, f"{total} cases" + (f"; failed {bad}" if bad else ""))

    bad = []
    total = 0
    degree_values = (1, 2, 3) if full else (1, 2)
    sizes = (3, 4) if full else (3,)
    for n in sizes:
        for degrees in itertools.product(degree_values, repeat=n):
            obj = higher_wp_resolution(degrees)
            element = phi_s(degrees)
            total += 1
            if not is_moore_cycle(obj, n - 2, element):
                bad.append(degrees)
    result.add(
        "attaching-cycles", not bad, f"{total} degree vectors" + (f"; failed {bad}" if bad else "")
    )

    if full:
        degrees = (1, 1, 1, 1, 1)
        obj = higher_wp_resolution(degrees)
        element = phi_s(degrees)
        result.add("attaching-chain n=5", is_moore_chain(obj, 3, element))
        result.add("attaching-cycle n=5", is_moore_cycle(obj, 3, element))
    return result


# ---------------------------------------------------------------------------
# 4. the level-four boundary ledger
# ---------------------------------------------------------------------------


def suite_boundaries() -> SuiteResult:
    result = SuiteResult("boundaries")
    obj, identities = partial_boundary_identities(4, 4)
    algebra = obj.algebra
    for idx, (cycle, witness, sign) in enumerate(identities, start=1):
        boundary = alternating_boundary(obj, 5, witness)
        result.add(
            f"witness-{idx}",
            algebra.is_zero(boundary - cycle.scale(sign)),
            f"sign {sign:+d}",
        )
        solved = is_boundary(obj, 4, 6, cycle)
        ok = solved is not None and algebra.is_zero(
            alternating_boundary(obj, 5, solved) - cycle
        )
        result.add(f"solver-{idx}", ok)

    wedge22, element22 = omega_hat(4, 4, 2, 2)
    grouping = {cw.symbol: cw.symbol.name for cw in wedge22.generators}
    rank = cross_e2_rank(wedge22, grouping, 2, 6)
    result.add("cross-term-rank-zero", rank == 0, f"rank {rank}")

    cycle_ok = wedge22.algebra.is_zero(alternating_boundary(wedge22, 4, element22))
    not_hit = is_boundary(wedge22, 4, 6, element22) is None
    nonzero = not wedge22.algebra.is_zero(element22)
    result.add("representative-survives", cycle_ok and not_hit and nonzero)
    report = e2_report(wedge22, 4, 6)
    result.add("representative-rank", report.rational_rank >= 1, f"rank {report.rational_rank}")
    return result


# ---------------------------------------------------------------------------
# 5. higher product attachings, verbatim
# ---------------------------------------------------------------------------


QUADRUPLE = (
    "[i234, s1s0 i1] + [i134, s1s0 i2] + [i124, s1s0 i3] + [i123, s1s0 i4]"
    " + [s0 i12, s1 i34] - [s1 i12, s0 i34] + [s0 i13, s1 i24]"
    " - [s1 i13, s0 i24] + [s0 i14, s1 i23] - [s1 i14, s0 i23]"
)


def _triple_expected(p: int, q: int, r: int) -> LieElement:
    degrees = (p, q, r)
    symbols = {}
    for size in (1, 2):
        for tau in itertools.combinations((1, 2, 3), size):
            sym = wp_symbol(degrees, tau)
            symbols[sym.name] = sym
    expr = []
    sign1 = "-" if (p + q + 1) % 2 else "+"
    sign2 = "-" if (p + r + q * r) % 2 else "+"
    sign3 = "-" if ((p + 1) * (q + r) + 1) % 2 else "+"
    expr.append(f"{sign1}[i12, s0 i3]")
    expr.append(f"{sign2}[i13, s0 i2]")
    expr.append(f"{sign3}[i23, s0 i1]")
    return parse_element(" ".join(expr), symbols)


def suite_higher_wp() -> SuiteResult:
    result = SuiteResult("higher-wp")
    bad = []
    total = 0
    for degrees in itertools.product((1, 2, 3), repeat=3):
        total += 1
        if phi_s(degrees) != _triple_expected(*degrees):
            bad.append(degrees)
    result.add("triple-closed-form", not bad, f"{total} degree vectors" + (f"; failed {bad}" if bad else ""))

    degrees = (1, 1, 1, 1)
    symbols = {}
    for size in (1, 2, 3):
        for tau in itertools.combinations((1, 2, 3, 4), size):
            sym = wp_symbol(degrees, tau)
            symbols[sym.name] = sym
    result.add(
        "quadruple-unit-degrees",
        phi_s(degrees) == parse_element(QUADRUPLE, symbols),
        f"{len(phi_s(degrees).terms())} terms",
    )
    return result


# ---------------------------------------------------------------------------
# 6. the projective tower
# ---------------------------------------------------------------------------


def suite_cpn(n: int = 6) -> SuiteResult:
    result = SuiteResult("cpn")
    symbols = {g.name: g for g in cpn_symbols(max(n, 4))}
    gamma2 = gamma_element(2)
    expected2 = parse_element("[i3, s0 i2]", symbols)
    result.add("gamma-2", WHITEHEAD_ALGEBRA.equivalent(gamma2, expected2) and gamma2 == expected2, str(gamma2))
    gamma3 = gamma_element(3)
    expected3 = parse_element("[i4, s1s0 i2] - [s0 i3, s1 i3]", symbols)
    result.add("gamma-3", gamma3 == expected3, str(gamma3))

    coeffs = [comparison_coefficient(k) for k in range(6)]
    result.add(
        "coefficient-ladder",
        coeffs == [1, 2, -6, -24, 120, 720],
        str(coeffs),
    )

    assignment = cpn_comparison_map(4)
    quadruple = phi_s((1, 1, 1, 1))
    image = WHITEHEAD_ALGEBRA.apply_lie_map(assignment, quadruple, normalized=False)
    target = gamma_element(3).scale(-24)
    result.add("minus-24", WHITEHEAD_ALGEBRA.equivalent(image, target))

    for size in range(1, n + 1):
        tower = cpn_resolution(size)
        wedge = higher_wp_resolution((1,) * (size + 1))
        report = verify_chain_map(cpn_comparison_map(size), wedge, tower, size - 1)
        result.add(
            f"chain-map n={size}",
            report.ok and report.checked > 0,
            f"{report.checked} generators",
        )
    identities = verify_simplicial_identities(cpn_resolution(min(n, 5)), max_level=min(n, 5))
    result.add("tower-identities", identities.ok, f"{identities.checked} identities")
    return result


# ---------------------------------------------------------------------------
# 7. splices
# ---------------------------------------------------------------------------


def suite_splice() -> SuiteResult:
    result = SuiteResult("splice")
    for n in (3, 4):
        tower = cpn_resolution(n)
        junction = n - 1
        gamma = gamma_element(n)
        cap = GeneratorSymbol("cap", n + 1)
        upper = suspension_resolution([cap], junction, label=f"cap_{n}")
        cap_placed = upper.symbol("cap")
        spliced = splice(upper, tower, {cap_placed: gamma}, junction)
        report = verify_simplicial_identities(spliced, max_level=junction + 2)
        result.add(
            f"tower-splice n={n}",
            report.ok and report.checked > 0,
            f"{report.checked} identities",
        )

    for (p, q, k, l) in ((4, 4, 2, 1), (4, 4, 2, 2), (3, 5, 3, 2)):
        wedge_obj, element = omega_hat(p, q, k, l)
        junction = k + l
        cap = GeneratorSymbol("cap", p + q - 2)
        upper = suspension_resolution([cap], junction, label=f"cap_w{k}{l}")
        cap_placed = upper.symbol("cap")
        spliced = splice(upper, wedge_obj, {cap_placed: element}, junction)
        report = verify_simplicial_identities(spliced, max_level=junction + 2)
        result.add(
            f"wedge-splice k={k} l={l}",
            report.ok and report.checked > 0,
            f"{report.checked} identities",
        )

    # canary: a junction value that is not a cycle must surface violations
    wedge_obj, _ = omega_hat(4, 4, 1, 1)
    bad_value = generator_element(wedge_obj.symbol("ip"), (0, 1))
    cap = GeneratorSymbol("cap", 3)
    upper = suspension_resolution([cap], 2, label="bad_cap")
    cap_placed = upper.symbol("cap")
    spliced = splice(upper, wedge_obj, {cap_placed: bad_value}, 2, check_cycles=False)
    report = verify_simplicial_identities(spliced, max_level=4)
    result.add("corrupted-junction-canary", not report.ok, f"{len(report.violations)} violations")
    return result


# ---------------------------------------------------------------------------
# 8. bracket systems
# ---------------------------------------------------------------------------


def suite_lie_massey() -> SuiteResult:
    result = SuiteResult("lie-massey")
    system, resolution, phi = example_triple_system(1, 3, 5)
    report = verify_defining_system(system)
    result.add("triple-system-valid", report.valid, f"{len(report.defects)} defects")
    by_name = {g.name: g for g in system.dgl.generators}
    expected = parse_element("[xp, xqr] + [xpq, xr] + [xpr, xq]", by_name)
    result.add("triple-value-shape", report.value == expected, str(report.value))
    result.add("triple-value-cycle", report.value_is_cycle)
    result.add("triple-cell-cycle", is_moore_cycle(resolution, 2, phi))
    d2 = system.dgl.d_squared_defects()
    result.add("triple-d-squared", not d2)

    fixture = bmf_fixture()
    for name in sorted(fixture.differential_candidates):
        dgl = fixture.with_candidate(name)
        defects = dgl.d_squared_defects()
        result.add(f"bmf-d-squared-{name}", not defects, f"{len(defects)} defects")
    result.add("bmf-alpha-cycle", fixture.dgl.is_cycle(fixture.alpha))

    triple = fixture.triple_system()
    report = verify_defining_system(triple)
    result.add("bmf-system-valid", report.valid, f"{len(report.defects)} defects")
    result.add("bmf-value-cycle", report.value_is_cycle)
    doubled = fixture.alpha.scale(2)
    dgl6 = triple.dgl
    result.add("bmf-value-homologous", dgl6.homologous(report.value, doubled))
    result.add("bmf-value-not-exact", report.bounding_witness is None)

    # canary: corrupt one entry, expect a located defect
    corrupted = dict(triple.entries)
    corrupted[(2, 3)] = corrupted[(2, 3)].scale(3)
    from .catalog import DefiningSystem

    bad = verify_defining_system(
        DefiningSystem(dgl=triple.dgl, inputs=triple.inputs, entries=corrupted)
    )
    result.add(
        "corrupted-entry-canary",
        (not bad.valid) and any(key == (2, 3) for key, _ in bad.defects),
    )
    return result


# ---------------------------------------------------------------------------
# 9. oracle agreement
# ---------------------------------------------------------------------------


def _oracle_generator_sets() -> list[tuple[GeneratorSymbol, ...]]:
    sets = []
    for count in (1, 2, 3):
        for degrees in itertools.combinations_with_replacement((1, 2, 3), count):
            sets.append(
                tuple(
                    GeneratorSymbol(f"g{i + 1}", degree)
                    for i, degree in enumerate(degrees)
                )
            )
    return sets


def suite_oracles(max_degree: int = 8, max_slice_dim: int = 30) -> SuiteResult:
    result = SuiteResult("oracles")
    bad = []
    total = 0
    for algebra in (WHITEHEAD_ALGEBRA, CHAIN_ALGEBRA):
        for gens in _oracle_generator_sets():
            for target in range(1, max_degree + 1):
                basis = algebra.hall_basis(gens, target)
                oracle = oracles.span_rank(algebra, gens, target)
                independent = oracles.independence_rank(
                    algebra, [LieElement.from_monomial(m) for m in basis]
                )
                total += 1
                if len(basis) != oracle or independent != len(basis):
                    bad.append((algebra.signs, tuple(g.reduced_degree for g in gens), target))
    result.add(
        "basis-dimensions",
        not bad,
        f"{total} (generators, degree) pairs" + (f"; failed {bad}" if bad else ""),
    )

    slice_specs = []
    wedge22, _ = omega_hat(4, 4, 2, 2)
    for s in range(0, 5):
        for t in (3, 6, 9):
            slice_specs.append((wedge22, s, t))
    tower = cpn_resolution(3)
    for s in range(0, 4):
        for t in range(1, 7):
            slice_specs.append((tower, s, t))
    triple = higher_wp_resolution((1, 1, 1))
    for s in range(0, 4):
        for t in range(1, 5):
            slice_specs.append((triple, s, t))

    bad = []
    checked = 0
    skipped = 0
    for obj, s, t in slice_specs:
        slice_s = chain_slice(obj, s, t)
        if slice_s.dim > max_slice_dim:
            skipped += 1
            continue
        report = e2_report(obj, s, t)
        dense = oracles.dense_e2_rank(obj, s, t)
        checked += 1
        if report.rational_rank != dense:
            bad.append((obj.label, s, t, report.rational_rank, dense))
        if report.cycle_rank + linalg.rank(slice_s.boundary) != slice_s.dim and s > 0:
            bad.append((obj.label, s, t, "rank-nullity"))
        if s > 0:
            upper = chain_slice(obj, s + 1, t)
            prod = linalg.mat_mul(slice_s.boundary, upper.boundary)
            if any(any(x != 0 for x in row) for row in prod):
                bad.append((obj.label, s, t, "square"))
    result.add(
        "slice-homology",
        not bad,
        f"{checked} slices checked, {skipped} over the bound" + (f"; failed {bad}" if bad else ""),
    )
    return result


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[[], SuiteResult]] = {
    "signs": suite_signs,
    "omega": suite_omega,
    "moore": suite_moore,
    "boundaries": suite_boundaries,
    "higher-wp": suite_higher_wp,
    "cpn": suite_cpn,
    "splice": suite_splice,
    "lie-massey": suite_lie_massey,
    "oracles": suite_oracles,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name == "all":
        combined = SuiteResult("all")
        for key in SUITES:
            sub = SUITES[key]()
            for check in sub.checks:
                combined.add(f"{key}:{check.name}", check.passed, check.detail)
        return combined
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**kwargs)
