"""simplie: exact bracket calculus for simplicial resolutions of spheres.

Modules:

* ``combinatorics``: shuffle enumeration and the two sign functions
* ``lie``: free graded Lie algebra arithmetic and normal forms
* ``simplicial``: CW-based simplicial objects, splices, Moore cycles
* ``spectral``: normalized slices, boundaries, second-page homology
* ``catalog``: the named resolutions, attaching elements and fixtures
* ``verify``: the closed verification suites behind the CLI
"""

from .combinatorics import (
    DegreeVector,
    IndexSet,
    ShufflePartition,
    enumerate_restricted_shuffles,
    enumerate_shuffles,
    hat_shift,
    koszul_sign,
    shuffle_sign,
)
from .lie import (
    CHAIN_ALGEBRA,
    WHITEHEAD_ALGEBRA,
    FreeGradedLie,
    GeneratorSymbol,
    LieElement,
    LieMonomial,
    generator_element,
)
from .simplicial import (
    CWGenerator,
    SimplicialLieObject,
    is_moore_chain,
    is_moore_cycle,
    shift_T,
    splice,
    suspension_resolution,
    verify_simplicial_identities,
    wedge,
)
from .spectral import chain_slice, cross_term_basis, e2_report, is_boundary

__version__ = "0.1.0"
