"""Simplicial objects in free graded Lie algebras, presented by CW bases.

Level s of a CW object is the free graded Lie algebra on the decorated
generators ``s_I g`` with ``|I| = s - home(g)``, ``I`` ascending inside
``{0..s-1}``.  Face maps are Lie homomorphisms determined by the simplicial
identities together with ``d_0 g = attaching(g)`` and ``d_i g = 0`` for
``i >= 1`` on basis generators.

Splices are restricted objects (faces only); their junction level takes
``d_0 = d_0 o fhat`` into the lower part and kills the faces ``1..m``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    DomainError,
    MalformedElementError,
    MalformedSpliceError,
    NamingError,
)
from .lie import (
    WHITEHEAD_ALGEBRA,
    FreeGradedLie,
    GeneratorSymbol,
    LieElement,
    LieMonomial,
    apply_degeneracy_index,
    apply_degeneracy_word,
    generator_element,
)

__all__ = [
    "CWGenerator",
    "SimplicialLieObject",
    "SplicedResolution",
    "ConstantProlongation",
    "IdentityReport",
    "wedge",
    "shift_T",
    "suspension_resolution",
    "constant_prolongation",
    "splice",
    "is_moore_chain",
    "is_moore_cycle",
    "verify_simplicial_identities",
]


@dataclass(frozen=True)
class CWGenerator:
    """A CW-basis generator together with its attaching element.

    ``attaching`` lives in level ``home_dim - 1`` and is homogeneous of the
    generator's reduced degree; ``None`` means the zero attaching map (and is
    the only option at home dimension 0).  ``rationalized`` marks attachings
    that encode a non-Lie class through a rational multiple.
    """

    symbol: GeneratorSymbol
    attaching: LieElement | None = None
    rationalized: bool = False


def _face_word(i: int, word: tuple[int, ...]) -> tuple[tuple[int, ...], int | None]:
    """Rewrite d_i s_W.

    Returns ``(word', residual)`` meaning ``s_{word'} d_residual`` applied to
    the underlying generator, with ``residual=None`` when the face was
    absorbed by the word.
    """
    if not word:
        return (), i
    j = word[-1]
    rest = word[:-1]
    if i < j:
        inner, residual = _face_word(i, rest)
        return inner + (j - 1,), residual
    if i == j or i == j + 1:
        return rest, None
    inner, residual = _face_word(i - 1, rest)
    return inner + (j,), residual


class SimplicialLieObject:
    """A simplicial free graded Lie algebra with a chosen CW basis."""

    def __init__(
        self,
        label: str,
        generators: Sequence[CWGenerator],
        truncation: int | None = None,
        zero_faces_added: int = 0,
        algebra: FreeGradedLie = WHITEHEAD_ALGEBRA,
    ):
        self.label = label
        self.generators = tuple(generators)
        self.truncation = truncation
        self.zero_faces_added = zero_faces_added
        self.algebra = algebra
        self._by_symbol = {}
        names = set()
        for cw in self.generators:
            if cw.symbol.name in names:
                raise NamingError(f"duplicate generator name {cw.symbol.name!r}")
            names.add(cw.symbol.name)
            self._by_symbol[cw.symbol] = cw
        if truncation is not None:
            beyond = [cw.symbol.name for cw in self.generators if cw.symbol.home_dim > truncation]
            if beyond:
                raise DomainError(f"generators above the truncation: {beyond}")
        for cw in self.generators:
            self._validate_attaching(cw)

    def _validate_attaching(self, cw: CWGenerator) -> None:
        if cw.attaching is None or cw.attaching.is_syntactically_zero:
            return
        if cw.symbol.home_dim == 0:
            raise MalformedElementError(
                f"{cw.symbol.name} has home dimension 0 and cannot attach"
            )
        degree = cw.attaching.homogeneous_degree()
        if degree != cw.symbol.reduced_degree:
            raise MalformedElementError(
                f"attaching element of {cw.symbol.name} must be homogeneous of "
                f"degree {cw.symbol.reduced_degree}"
            )
        self.validate_level(cw.symbol.home_dim - 1, cw.attaching)

    # -- structure ----------------------------------------------------------

    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        return tuple(cw.symbol for cw in self.generators)

    def symbol(self, name: str) -> GeneratorSymbol:
        for cw in self.generators:
            if cw.symbol.name == name:
                return cw.symbol
        raise KeyError(name)

    def attaching_of(self, symbol: GeneratorSymbol) -> LieElement:
        cw = self._by_symbol.get(symbol)
        if cw is None:
            raise KeyError(symbol.name)
        if cw.attaching is None:
            return LieElement.zero()
        return cw.attaching

    def max_face_index(self, s: int) -> int:
        return s + self.zero_faces_added

    def _check_level(self, s: int) -> None:
        if s < 0:
            raise DomainError(f"level must be >= 0, got {s}")
        if self.truncation is not None and s > self.truncation:
            raise DomainError(
                f"level {s} exceeds the truncation {self.truncation} of {self.label!r}"
            )

    def level_generators(self, s: int) -> list[tuple[tuple[int, ...], GeneratorSymbol]]:
        """All decorated generators s_I g spanning level s."""
        self._check_level(s)
        out = []
        for cw in self.generators:
            m = cw.symbol.home_dim
            if m > s:
                continue
            for word in itertools.combinations(range(s), s - m):
                out.append((word, cw.symbol))
        out.sort(key=lambda wg: (wg[1].reduced_degree, wg[1].name, wg[0]))
        return out

    def validate_level(self, s: int, e: LieElement) -> None:
        """Check every leaf of ``e`` is admissible at level ``s``."""
        self._check_level(s)
        for leaf in e.leaves():
            gen = leaf.gen
            cw = self._by_symbol.get(gen)
            if cw is None:
                raise MalformedElementError(
                    f"generator {gen.name!r} does not belong to {self.label!r}"
                )
            if len(leaf.word) != s - gen.home_dim or any(i >= s for i in leaf.word):
                raise MalformedElementError(
                    f"word {leaf.word} on {gen.name} is not admissible at level {s}"
                )

    # -- simplicial operators -------------------------------------------------

    def face(self, s: int, i: int, e: LieElement) -> LieElement:
        """The Lie-homomorphic face d_i at level s."""
        self._check_level(s)
        if not 0 <= i <= self.max_face_index(s):
            raise DomainError(f"face index {i} out of range at level {s}")
        if i > s:
            return LieElement.zero()

        def face_leaf(leaf: LieMonomial) -> LieElement:
            word, residual = _face_word(i, leaf.word)
            if residual is None:
                return LieElement.from_monomial(LieMonomial.leaf(leaf.gen, word))
            if residual == 0:
                attaching = self.attaching_of(leaf.gen)
                return apply_degeneracy_word(word, attaching)
            return LieElement.zero()

        def face_monomial(mono: LieMonomial) -> LieElement:
            if mono.is_leaf:
                return face_leaf(mono)
            from .lie import bracket_trees

            return bracket_trees(face_monomial(mono.left), face_monomial(mono.right))

        out = LieElement.zero()
        for mono, coeff in e.terms():
            out = out + face_monomial(mono).scale(coeff)
        return out

    def degeneracy(self, s: int, j: int, e: LieElement) -> LieElement:
        """The Lie-homomorphic degeneracy s_j at level s."""
        self._check_level(s)
        if not 0 <= j <= s:
            raise DomainError(f"degeneracy index {j} out of range at level {s}")
        if self.truncation is not None and s + 1 > self.truncation:
            raise DomainError("degeneracy leaves the truncated range")
        return apply_degeneracy_index(j, e)


def is_moore_chain(obj, s: int, e: LieElement) -> bool:
    """True when d_i e = 0 for all 1 <= i <= arity(s)."""
    for i in range(1, obj.max_face_index(s) + 1):
        if not obj.algebra.is_zero(obj.face(s, i, e)):
            return False
    return True


def is_moore_cycle(obj, s: int, e: LieElement) -> bool:
    """A Moore chain killed by d_0 as well (everything at level 0)."""
    if not is_moore_chain(obj, s, e):
        return False
    if s == 0:
        return True
    return obj.algebra.is_zero(obj.face(s, 0, e))


@dataclass
class IdentityReport:
    """Outcome of an exhaustive d_i d_j = d_{j-1} d_i sweep."""

    label: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_simplicial_identities(obj, max_level: int, max_degree: int | None = None) -> IdentityReport:
    """Check d_i d_j = d_{j-1} d_i (i < j) on every decorated generator."""
    report = IdentityReport(label=obj.label)
    top = max_level
    if getattr(obj, "truncation", None) is not None:
        top = min(top, obj.truncation)
    for s in range(2, top + 1):
        for word, gen in obj.level_generators(s):
            if max_degree is not None and gen.reduced_degree > max_degree:
                continue
            e = generator_element(gen, word)
            arity = obj.max_face_index(s)
            for j in range(1, arity + 1):
                dj = obj.face(s, j, e)
                for i in range(0, j):
                    lhs = obj.face(s - 1, i, dj)
                    rhs = obj.face(s - 1, j - 1, obj.face(s, i, e))
                    report.checked += 1
                    diff = lhs - rhs
                    if not obj.algebra.is_zero(diff):
                        report.violations.append((s, (i, j), e, diff))
    return report


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def wedge(x: SimplicialLieObject, y: SimplicialLieObject, label: str | None = None) -> SimplicialLieObject:
    """Coproduct: free Lie algebra on the disjoint union of CW bases."""
    if x.algebra.signs != y.algebra.signs:
        raise DomainError("wedge factors must share a sign convention")
    if x.zero_faces_added != y.zero_faces_added:
        raise DomainError("wedge factors must share their added zero faces")
    collisions = {cw.symbol.name for cw in x.generators} & {
        cw.symbol.name for cw in y.generators
    }
    if collisions:
        raise NamingError(f"wedge summands share generator names: {sorted(collisions)}")
    if x.truncation is None:
        truncation = y.truncation
    elif y.truncation is None:
        truncation = x.truncation
    else:
        truncation = min(x.truncation, y.truncation)
    return SimplicialLieObject(
        label=label or f"{x.label}_v_{y.label}",
        generators=x.generators + y.generators,
        truncation=truncation,
        zero_faces_added=x.zero_faces_added,
        algebra=x.algebra,
    )


def shift_T(x: SimplicialLieObject, n: int) -> SimplicialLieObject:
    """Add n extra zero top faces at every level."""
    if n < 0:
        raise DomainError(f"shift count must be >= 0, got {n}")
    if n == 0:
        return x
    return SimplicialLieObject(
        label=x.label if n == 0 else f"T^{n}_{x.label}",
        generators=x.generators,
        truncation=x.truncation,
        zero_faces_added=x.zero_faces_added + n,
        algebra=x.algebra,
    )


def truncate(x: SimplicialLieObject, level: int, label: str | None = None) -> SimplicialLieObject:
    """Restrict to levels <= level, keeping the generators that fit."""
    kept = tuple(cw for cw in x.generators if cw.symbol.home_dim <= level)
    return SimplicialLieObject(
        label=label or f"{x.label}_le{level}",
        generators=kept,
        truncation=level,
        zero_faces_added=x.zero_faces_added,
        algebra=x.algebra,
    )


def suspension_resolution(
    generators: Sequence[GeneratorSymbol],
    m: int,
    label: str | None = None,
    algebra: FreeGradedLie = WHITEHEAD_ALGEBRA,
) -> SimplicialLieObject:
    """The resolution of an m-fold suspension: generators at home m, zero attaching."""
    if m < 1:
        raise DomainError(f"suspension level must be >= 1, got {m}")
    placed = tuple(
        GeneratorSymbol(g.name, g.reduced_degree, m) for g in generators
    )
    return SimplicialLieObject(
        label=label or ("susp_" + "_".join(g.name for g in placed)),
        generators=tuple(CWGenerator(g) for g in placed),
        algebra=algebra,
    )


class ConstantProlongation:
    """Levels >= n spanned by s_0-iterates of fixed generators.

    Faces follow d_i s_0 = Id for i in {0, 1} and d_i s_0 = s_0 d_{i-1} for
    i >= 2; at the base level the generators behave like CW basis elements
    (d_0 attaches, higher faces vanish).
    """

    def __init__(
        self,
        label: str,
        generators: Sequence[CWGenerator],
        from_level: int,
        algebra: FreeGradedLie = WHITEHEAD_ALGEBRA,
    ):
        if from_level < 0:
            raise DomainError("from_level must be >= 0")
        self.label = label
        self.from_level = from_level
        self.algebra = algebra
        self.zero_faces_added = 0
        self.truncation = None
        self._inner = SimplicialLieObject(
            label=f"{label}_base",
            generators=tuple(
                CWGenerator(
                    GeneratorSymbol(cw.symbol.name, cw.symbol.reduced_degree, from_level),
                    cw.attaching,
                    cw.rationalized,
                )
                for cw in generators
            ),
            algebra=algebra,
        )

    def max_face_index(self, s: int) -> int:
        return s

    def level_generators(self, s: int):
        if s < self.from_level:
            return []
        word = tuple(range(s - self.from_level))
        return [(word, cw.symbol) for cw in self._inner.generators]

    def face(self, s: int, i: int, e: LieElement) -> LieElement:
        if s <= self.from_level:
            raise DomainError("faces are modeled only above the base level")
        return self._inner.face(s, i, e)

    def degeneracy(self, s: int, j: int, e: LieElement) -> LieElement:
        if j != 0:
            raise DomainError("constant prolongations only carry s_0")
        return self._inner.degeneracy(s, j, e)


def constant_prolongation(
    generators: Sequence[CWGenerator],
    from_level: int,
    label: str | None = None,
    algebra: FreeGradedLie = WHITEHEAD_ALGEBRA,
) -> ConstantProlongation:
    return ConstantProlongation(
        label or f"const_from_{from_level}", generators, from_level, algebra
    )


class SplicedResolution:
    """Two resolutions glued along a junction map (a restricted object).

    Levels below the junction come from the lower object; levels at and above
    it come from the upper one.  The junction faces are
    ``d_0 = d_0(lower) o fhat`` and ``d_i = 0`` for ``1 <= i <= junction``.
    """

    def __init__(
        self,
        label: str,
        lower: SimplicialLieObject,
        upper: SimplicialLieObject,
        fhat: Mapping[GeneratorSymbol, LieElement],
        junction: int,
        check_cycles: bool = True,
    ):
        if lower.algebra.signs != upper.algebra.signs:
            raise MalformedSpliceError("splice halves must share a sign convention")
        self.label = label
        self.lower = lower
        self.upper = upper
        self.junction = junction
        self.fhat = dict(fhat)
        self.algebra = lower.algebra
        self.truncation = upper.truncation
        self.zero_faces_added = 0

        junction_gens = [
            cw.symbol for cw in upper.generators if cw.symbol.home_dim == junction
        ]
        if not junction_gens:
            raise MalformedSpliceError("the upper object has no generators at the junction")
        low = min(cw.symbol.home_dim for cw in upper.generators)
        if low < junction:
            raise MalformedSpliceError(
                "the upper object has generators below the junction level"
            )
        for gen in junction_gens:
            value = self.fhat.get(gen)
            if value is None:
                raise MalformedSpliceError(f"fhat misses the junction generator {gen.name}")
            if not value.is_syntactically_zero:
                if value.homogeneous_degree() != gen.reduced_degree:
                    raise MalformedSpliceError(
                        f"fhat must preserve the degree of {gen.name}"
                    )
                try:
                    lower.validate_level(junction, value)
                except MalformedElementError as exc:
                    raise MalformedSpliceError(str(exc)) from exc
        if check_cycles:
            defects = [
                gen.name
                for gen in junction_gens
                if not is_moore_cycle(lower, junction, self.fhat[gen])
            ]
            if defects:
                raise MalformedSpliceError(
                    f"fhat values are not Moore cycles at the junction: {defects}"
                )

    def max_face_index(self, s: int) -> int:
        if s >= self.junction:
            return s + self.upper.zero_faces_added
        return s + self.lower.zero_faces_added

    def level_generators(self, s: int):
        if s >= self.junction:
            return self.upper.level_generators(s)
        return self.lower.level_generators(s)

    def face(self, s: int, i: int, e: LieElement) -> LieElement:
        if s > self.junction:
            return self.upper.face(s, i, e)
        if s < self.junction:
            return self.lower.face(s, i, e)
        if not 0 <= i <= self.max_face_index(s):
            raise DomainError(f"face index {i} out of range at level {s}")
        if i >= 1:
            return LieElement.zero()

        def image(mono: LieMonomial) -> LieElement:
            if mono.is_leaf:
                if mono.word:
                    raise MalformedElementError(
                        "junction level leaves must be undecorated generators"
                    )
                value = self.fhat.get(mono.gen)
                if value is None:
                    raise MalformedElementError(
                        f"{mono.gen.name} is not a junction generator"
                    )
                return self.lower.face(self.junction, 0, value)
            from .lie import bracket_trees

            return bracket_trees(image(mono.left), image(mono.right))

        out = LieElement.zero()
        for mono, coeff in e.terms():
            out = out + image(mono).scale(coeff)
        return out


def splice(
    upper: SimplicialLieObject,
    lower: SimplicialLieObject,
    fhat: Mapping[GeneratorSymbol, LieElement],
    junction: int,
    label: str | None = None,
    check_cycles: bool = True,
) -> SplicedResolution:
    """Glue ``upper`` (levels >= junction) onto ``lower`` along ``fhat``.

    ``fhat`` sends the upper object's junction generators to level-junction
    elements of ``lower``; the retained lower part is the truncation to
    levels <= junction - 1.
    """
    if junction < 1:
        raise MalformedSpliceError("the junction level must be >= 1")
    return SplicedResolution(
        label or f"{upper.label}_on_{lower.label}",
        lower,
        upper,
        fhat,
        junction,
        check_cycles=check_cycles,
    )
