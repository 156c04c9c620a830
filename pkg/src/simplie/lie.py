"""Exact arithmetic in free graded Lie algebras of bracket monomials.

Elements are rational combinations of bracket trees whose leaves are
degeneracy-decorated generators.  Semantic questions (zero tests, normal
forms) are answered through the embedding into the tensor algebra, which is
exact over the rationals, and normal forms are written on the super-Lyndon
basis (Lyndon bracketings plus squares ``[u, u]`` of odd-degree basis
elements).

Two antisymmetry conventions are supported, selected per algebra:

* ``"whitehead"``: ``[a, b] = (-1)**((p+1)*(q+1)) [b, a]`` with p, q the
  reduced degrees (signs follow sphere dimensions);
* ``"chain"``: ``[a, b] = -(-1)**(p*q) [b, a]`` (the usual convention for
  chain-level differential graded Lie algebras).

The two differ by the degree twist ``a -> (-1)**deg(a) a`` applied to the
first bracket slot, so they share one tensor-algebra backend.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from . import linalg
from .errors import (
    DomainError,
    MalformedElementError,
    MalformedMapError,
    UnboundGeneratorError,
)

WHITEHEAD = "whitehead"
CHAIN = "chain"

_RESERVED_NAME = re.compile(r"s\d")
_VALID_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


@dataclass(frozen=True)
class GeneratorSymbol:
    """A free generator: name, reduced degree p (class in pi_{p+1}), home level."""

    name: str
    reduced_degree: int
    home_dim: int = 0

    def __post_init__(self):
        if not _VALID_NAME.match(self.name) or _RESERVED_NAME.match(self.name):
            raise DomainError(
                f"invalid generator name {self.name!r} (identifiers only; "
                "the prefix s<digit> is reserved for degeneracies)"
            )
        if self.reduced_degree < 1:
            raise DomainError(f"reduced degree must be >= 1, got {self.reduced_degree}")
        if self.home_dim < 0:
            raise DomainError(f"home dimension must be >= 0, got {self.home_dim}")

    @property
    def sphere_dim(self) -> int:
        return self.reduced_degree + 1


@dataclass(frozen=True)
class LieMonomial:
    """A bracket tree.  Leaves carry a canonical ascending degeneracy word."""

    word: tuple[int, ...] | None = None
    gen: GeneratorSymbol | None = None
    left: "LieMonomial | None" = None
    right: "LieMonomial | None" = None

    @classmethod
    def leaf(cls, gen: GeneratorSymbol, word: Iterable[int] = ()) -> "LieMonomial":
        w = tuple(word)
        if any(a >= b for a, b in zip(w, w[1:])):
            raise MalformedElementError(f"degeneracy word must be ascending, got {w}")
        if any(i < 0 for i in w):
            raise MalformedElementError(f"degeneracy indices must be >= 0, got {w}")
        return cls(word=w, gen=gen)

    @classmethod
    def bracket(cls, left: "LieMonomial", right: "LieMonomial") -> "LieMonomial":
        return cls(left=left, right=right)

    @property
    def is_leaf(self) -> bool:
        return self.gen is not None

    def __str__(self) -> str:
        from .expr import format_monomial

        return format_monomial(self)


@functools.lru_cache(maxsize=None)
def monomial_degree(m: LieMonomial) -> int:
    """Reduced degree; additive in brackets."""
    if m.is_leaf:
        return m.gen.reduced_degree
    return monomial_degree(m.left) + monomial_degree(m.right)


@functools.lru_cache(maxsize=None)
def monomial_weight(m: LieMonomial) -> int:
    if m.is_leaf:
        return 1
    return monomial_weight(m.left) + monomial_weight(m.right)


@functools.lru_cache(maxsize=None)
def monomial_leaves(m: LieMonomial) -> tuple[LieMonomial, ...]:
    if m.is_leaf:
        return (m,)
    return monomial_leaves(m.left) + monomial_leaves(m.right)


def letter_key(leaf: LieMonomial) -> tuple:
    g = leaf.gen
    return (g.reduced_degree, g.name, g.home_dim, leaf.word)


@functools.lru_cache(maxsize=None)
def monomial_key(m: LieMonomial) -> tuple:
    if m.is_leaf:
        return (0, letter_key(m))
    return (1, monomial_key(m.left), monomial_key(m.right))


def term_order(m: LieMonomial) -> tuple:
    return (monomial_weight(m), monomial_key(m))


def is_degenerate(m: LieMonomial) -> bool:
    """True when some index j occurs in every leaf word (the s_j image test)."""
    leaves = monomial_leaves(m)
    common = set(leaves[0].word)
    for leaf in leaves[1:]:
        if not common:
            return False
        common &= set(leaf.word)
    return bool(common)


class LieElement:
    """A finite rational combination of bracket trees.

    Addition and scalar action merge syntactically identical trees only;
    semantic identities (antisymmetry, Jacobi) are applied by the algebra's
    ``normalize``/``is_zero``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[LieMonomial, Fraction] | Iterable[tuple[LieMonomial, Fraction]] = ()):
        data: dict[LieMonomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            new = data.get(mono, Fraction(0)) + coeff
            if new == 0:
                data.pop(mono, None)
            else:
                data[mono] = new
        self._terms = data

    @classmethod
    def zero(cls) -> "LieElement":
        return cls()

    @classmethod
    def from_monomial(cls, mono: LieMonomial, coeff=1) -> "LieElement":
        return cls([(mono, Fraction(coeff))])

    def terms(self) -> tuple[tuple[LieMonomial, Fraction], ...]:
        return tuple(sorted(self._terms.items(), key=lambda kv: term_order(kv[0])))

    def monomials(self) -> tuple[LieMonomial, ...]:
        return tuple(m for m, _ in self.terms())

    def coefficient(self, mono: LieMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    @property
    def is_syntactically_zero(self) -> bool:
        return not self._terms

    def leaves(self) -> Iterator[LieMonomial]:
        for mono in self._terms:
            yield from monomial_leaves(mono)

    def generators(self) -> set[GeneratorSymbol]:
        return {leaf.gen for leaf in self.leaves()}

    def homogeneous_degree(self) -> int | None:
        """The common reduced degree, or None when mixed or zero."""
        degrees = {monomial_degree(m) for m in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def __add__(self, other: "LieElement") -> "LieElement":
        data = dict(self._terms)
        for mono, coeff in other._terms.items():
            new = data.get(mono, Fraction(0)) + coeff
            if new == 0:
                data.pop(mono, None)
            else:
                data[mono] = new
        return LieElement(data)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement({m: -c for m, c in self._terms.items()})

    def scale(self, factor) -> "LieElement":
        factor = Fraction(factor)
        if factor == 0:
            return LieElement()
        return LieElement({m: c * factor for m, c in self._terms.items()})

    def __rmul__(self, factor) -> "LieElement":
        return self.scale(factor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        from .expr import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"LieElement({str(self)!r})"


def zero() -> LieElement:
    return LieElement()


def generator_element(gen: GeneratorSymbol, word: Iterable[int] = ()) -> LieElement:
    return LieElement.from_monomial(LieMonomial.leaf(gen, word))


def bracket_trees(a: LieElement, b: LieElement) -> LieElement:
    """Bilinear bracket building raw trees, no normalization."""
    out: dict[LieMonomial, Fraction] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            mono = LieMonomial.bracket(ma, mb)
            out[mono] = out.get(mono, Fraction(0)) + ca * cb
    return LieElement(out)


def apply_degeneracy_index(j: int, e: LieElement) -> LieElement:
    """Post-compose with s_j, re-canonicalizing every leaf word."""
    if j < 0:
        raise DomainError(f"degeneracy index must be >= 0, got {j}")

    def push(mono: LieMonomial) -> LieMonomial:
        if mono.is_leaf:
            word = tuple(sorted((w + 1 if w >= j else w) for w in mono.word))
            word = tuple(sorted(word + (j,)))
            return LieMonomial.leaf(mono.gen, word)
        return LieMonomial.bracket(push(mono.left), push(mono.right))

    return LieElement({push(m): c for m, c in e._terms.items()})


def apply_degeneracy_word(word: Iterable[int], e: LieElement) -> LieElement:
    """Apply the composite s_W for an ascending word W (smallest applied first)."""
    for j in sorted(word):
        e = apply_degeneracy_index(j, e)
    return e


# ---------------------------------------------------------------------------
# Lyndon machinery (over an arbitrary totally ordered finite alphabet)
# ---------------------------------------------------------------------------


def _distinct_permutations(letters: tuple) -> Iterator[tuple]:
    """Distinct permutations of a sorted letter multiset."""
    if not letters:
        yield ()
        return
    seen = set()
    for head_idx in range(len(letters)):
        head = letters[head_idx]
        if head in seen:
            continue
        seen.add(head)
        rest = letters[:head_idx] + letters[head_idx + 1:]
        for tail in _distinct_permutations(rest):
            yield (head,) + tail


def _is_lyndon(word: tuple, keys: tuple) -> bool:
    n = len(word)
    if n == 0:
        return False
    if n == 1:
        return True
    for i in range(1, n):
        if keys[i:] + keys[:i] <= keys:
            return False
    return True


def _standard_bracketing(word: tuple[LieMonomial, ...]) -> LieMonomial:
    """Right-factor standard bracketing of a Lyndon word of leaves."""
    if len(word) == 1:
        return word[0]
    keys = tuple(letter_key(leaf) for leaf in word)
    best = None
    for i in range(1, len(word)):
        suffix = keys[i:]
        if best is None or suffix < keys[best:]:
            best = i
    left = word[:best]
    right = word[best:]
    return LieMonomial.bracket(_standard_bracketing(left), _standard_bracketing(right))


class FreeGradedLie:
    """Operations of a free graded Lie algebra under one sign convention."""

    def __init__(self, signs: str = WHITEHEAD):
        if signs not in (WHITEHEAD, CHAIN):
            raise DomainError(f"unknown sign convention {signs!r}")
        self.signs = signs
        self._sector_cache: dict = {}
        self._solver_cache: dict = {}
        self._envelope_cache: dict[LieMonomial, dict] = {}

    # -- sign conventions --------------------------------------------------

    def swap_sign(self, deg_a: int, deg_b: int) -> int:
        """Sign in [a, b] = swap_sign * [b, a]."""
        if self.signs == WHITEHEAD:
            return -1 if ((deg_a + 1) * (deg_b + 1)) % 2 else 1
        return -1 if (deg_a * deg_b + 1) % 2 else 1

    def square_vanishes(self, degree: int) -> bool:
        """True when [x, x] = 0 is forced for an element of this degree."""
        return self.swap_sign(degree, degree) == -1

    # -- tensor-algebra envelope --------------------------------------------

    def _envelope_monomial(self, m: LieMonomial) -> dict[tuple, Fraction]:
        cached = self._envelope_cache.get(m)
        if cached is not None:
            return cached
        if m.is_leaf:
            out = {(m,): Fraction(1)}
        else:
            left = self._envelope_monomial(m.left)
            right = self._envelope_monomial(m.right)
            da = monomial_degree(m.left)
            db = monomial_degree(m.right)
            koszul = -1 if (da * db) % 2 else 1
            twist = 1
            if self.signs == WHITEHEAD and da % 2:
                twist = -1
            out: dict[tuple, Fraction] = {}
            for wa, ca in left.items():
                for wb, cb in right.items():
                    coeff = twist * ca * cb
                    w1 = wa + wb
                    out[w1] = out.get(w1, Fraction(0)) + coeff
                    w2 = wb + wa
                    out[w2] = out.get(w2, Fraction(0)) - koszul * coeff
            out = {w: c for w, c in out.items() if c != 0}
        self._envelope_cache[m] = out
        return out

    def envelope(self, e: LieElement) -> dict[tuple, Fraction]:
        out: dict[tuple, Fraction] = {}
        for mono, coeff in e._terms.items():
            for word, c in self._envelope_monomial(mono).items():
                new = out.get(word, Fraction(0)) + coeff * c
                if new == 0:
                    out.pop(word, None)
                else:
                    out[word] = new
        return out

    def is_zero(self, e: LieElement) -> bool:
        return not self.envelope(e)

    def equivalent(self, a: LieElement, b: LieElement) -> bool:
        return self.is_zero(a - b)

    # -- normal forms --------------------------------------------------------

    def _sector_basis(self, multiset: tuple[LieMonomial, ...]) -> tuple[LieMonomial, ...]:
        """Super-Lyndon basis trees with exactly this leaf multiset."""
        cached = self._sector_cache.get(multiset)
        if cached is not None:
            return cached
        trees = []
        for word in _distinct_permutations(multiset):
            keys = tuple(letter_key(leaf) for leaf in word)
            if _is_lyndon(word, keys):
                trees.append(_standard_bracketing(word))
        counts: dict[LieMonomial, int] = {}
        for leaf in multiset:
            counts[leaf] = counts.get(leaf, 0) + 1
        if multiset and all(c % 2 == 0 for c in counts.values()):
            half = tuple(
                sorted(
                    (leaf for leaf, c in counts.items() for _ in range(c // 2)),
                    key=letter_key,
                )
            )
            for word in _distinct_permutations(half):
                keys = tuple(letter_key(leaf) for leaf in word)
                if _is_lyndon(word, keys):
                    tree = _standard_bracketing(word)
                    if not self.square_vanishes(monomial_degree(tree)):
                        trees.append(LieMonomial.bracket(tree, tree))
        trees.sort(key=monomial_key)
        result = tuple(trees)
        self._sector_cache[multiset] = result
        return result

    def _sector_solver(self, multiset: tuple[LieMonomial, ...]):
        """Cached exact coordinate map envelope -> super-Lyndon coefficients."""
        cached = self._solver_cache.get(multiset)
        if cached is not None:
            return cached
        trees = self._sector_basis(multiset)
        columns = [self._envelope_monomial(t) for t in trees]
        words = sorted({w for col in columns for w in col}, key=self._word_key)
        word_index = {w: i for i, w in enumerate(words)}
        matrix = [
            [col.get(w, Fraction(0)) for col in columns] for w in words
        ]
        pivot_rows: list[int] = []
        if trees:
            transpose = [[matrix[r][c] for r in range(len(words))] for c in range(len(trees))]
            _, pivots = linalg.rref(transpose)
            pivot_rows = pivots
            if len(pivot_rows) != len(trees):
                raise MalformedElementError(
                    "internal error: dependent basis trees in sector"
                )
        square = [[matrix[r][c] for c in range(len(trees))] for r in pivot_rows]
        solver = (trees, word_index, matrix, pivot_rows, square)
        self._solver_cache[multiset] = solver
        return solver

    @staticmethod
    def _word_key(word: tuple) -> tuple:
        return tuple(letter_key(leaf) for leaf in word)

    def normalize(self, e: LieElement) -> LieElement:
        """Canonical super-Lyndon representative; zero iff e is zero."""
        env = self.envelope(e)
        sectors: dict[tuple, dict[tuple, Fraction]] = {}
        for word, coeff in env.items():
            key = tuple(sorted(word, key=letter_key))
            sectors.setdefault(key, {})[word] = coeff
        out: dict[LieMonomial, Fraction] = {}
        for multiset, target in sorted(sectors.items(), key=lambda kv: self._word_key(kv[0])):
            trees, word_index, matrix, pivot_rows, square = self._sector_solver(multiset)
            if not trees:
                raise MalformedElementError(
                    "element is not a Lie element (empty basis sector hit)"
                )
            missing = [w for w in target if w not in word_index]
            if missing:
                raise MalformedElementError(
                    "element is not a Lie element (envelope support escapes sector)"
                )
            b_full = [Fraction(0)] * len(word_index)
            for w, c in target.items():
                b_full[word_index[w]] = c
            b = [b_full[r] for r in pivot_rows]
            x = linalg.solve(square, b)
            if x is None:
                raise MalformedElementError("element is not a Lie element")
            for r, row in enumerate(matrix):
                acc = sum((row[c] * x[c] for c in range(len(trees))), Fraction(0))
                if acc != b_full[r]:
                    raise MalformedElementError("element is not a Lie element")
            for tree, coeff in zip(trees, x):
                if coeff != 0:
                    out[tree] = out.get(tree, Fraction(0)) + coeff
        return LieElement(out)

    # -- public operations ----------------------------------------------------

    def bracket(self, a: LieElement, b: LieElement) -> LieElement:
        """Bilinear bracket, normalized."""
        return self.normalize(bracket_trees(a, b))

    def hall_basis(
        self,
        generators: Sequence[GeneratorSymbol],
        target_reduced_degree: int,
        max_weight: int | None = None,
    ) -> list[LieMonomial]:
        """All basis monomials of the target degree and weight <= max_weight."""
        letters = tuple(LieMonomial.leaf(g) for g in generators)
        return self.hall_basis_letters(letters, target_reduced_degree, max_weight)

    def hall_basis_letters(
        self,
        letters: Sequence[LieMonomial],
        target_reduced_degree: int,
        max_weight: int | None = None,
    ) -> list[LieMonomial]:
        if target_reduced_degree < 1:
            raise DomainError("target reduced degree must be >= 1")
        uniq = sorted(set(letters), key=letter_key)
        for letter in uniq:
            if not letter.is_leaf:
                raise DomainError("letters must be leaf monomials")
        cap = target_reduced_degree  # every letter has degree >= 1
        if max_weight is not None:
            cap = min(cap, max_weight)
        out: list[LieMonomial] = []
        for multiset in self._letter_multisets(uniq, target_reduced_degree, cap):
            out.extend(self._sector_basis(multiset))
        out.sort(key=term_order)
        return out

    @staticmethod
    def _letter_multisets(
        letters: list[LieMonomial], degree: int, max_weight: int
    ) -> Iterator[tuple[LieMonomial, ...]]:
        """Sorted letter multisets with total degree ``degree``, size <= max_weight."""

        def rec(start: int, remaining: int, slots: int, acc: list[LieMonomial]):
            if remaining == 0:
                if acc:
                    yield tuple(acc)
                return
            if slots == 0:
                return
            for i in range(start, len(letters)):
                d = monomial_degree(letters[i])
                if d > remaining:
                    continue
                acc.append(letters[i])
                yield from rec(i, remaining - d, slots - 1, acc)
                acc.pop()

        yield from rec(0, degree, max_weight, [])

    def apply_lie_map(
        self,
        assignment: Mapping[GeneratorSymbol, LieElement],
        e: LieElement,
        normalized: bool = True,
    ) -> LieElement:
        """Bracket-preserving extension of a degree-preserving generator map."""
        for gen, value in assignment.items():
            if not value.is_syntactically_zero:
                deg = value.homogeneous_degree()
                if deg is None or deg != gen.reduced_degree:
                    raise MalformedMapError(
                        f"image of {gen.name} must be homogeneous of degree "
                        f"{gen.reduced_degree}"
                    )

        def image(mono: LieMonomial) -> LieElement:
            if mono.is_leaf:
                if mono.gen not in assignment:
                    raise UnboundGeneratorError(mono.gen.name)
                return apply_degeneracy_word(mono.word, assignment[mono.gen])
            return bracket_trees(image(mono.left), image(mono.right))

        out = LieElement()
        for mono, coeff in e._terms.items():
            out = out + image(mono).scale(coeff)
        return self.normalize(out) if normalized else out

    def apply_derivation(
        self,
        assignment: Mapping[GeneratorSymbol, LieElement],
        e: LieElement,
        normalized: bool = True,
    ) -> LieElement:
        """Degree -1 derivation: d[x, y] = [dx, y] + (-1)**deg(x) [x, dy]."""
        for gen, value in assignment.items():
            if not value.is_syntactically_zero:
                deg = value.homogeneous_degree()
                if deg is None or deg != gen.reduced_degree - 1:
                    raise MalformedMapError(
                        f"derivation must lower the degree of {gen.name} by one"
                    )

        def derive(mono: LieMonomial) -> LieElement:
            if mono.is_leaf:
                if mono.gen not in assignment:
                    raise UnboundGeneratorError(mono.gen.name)
                return apply_degeneracy_word(mono.word, assignment[mono.gen])
            left = LieElement.from_monomial(mono.left)
            right = LieElement.from_monomial(mono.right)
            sign = -1 if monomial_degree(mono.left) % 2 else 1
            return bracket_trees(derive(mono.left), right) + bracket_trees(
                left, derive(mono.right)
            ).scale(sign)

        out = LieElement()
        for mono, coeff in e._terms.items():
            out = out + derive(mono).scale(coeff)
        return self.normalize(out) if normalized else out


#: Shared algebra instances; objects default to the Whitehead convention.
WHITEHEAD_ALGEBRA = FreeGradedLie(WHITEHEAD)
CHAIN_ALGEBRA = FreeGradedLie(CHAIN)
