"""Lattice knots on the bounded cubic grid.

Exact integer knots, the tug/wiggle/wag move calculus and its finite ambient
groups, orbit search and equivalence decision, curve-to-lattice
approximation with length/linking functionals and variational quotients, a
small quantum simulator over the knot basis, and the conjectured refinement
images of the generators.
"""

from .errors import (
    CapExceeded,
    DegenerateGeometry,
    DuplicateEdge,
    EmptyGraph,
    InvalidBound,
    LatticeError,
    LimitExceeded,
    NotTwoComponents,
    NotTwoValent,
    OutOfBounds,
    ScriptSyntaxError,
    TooCoarse,
    UnknownKnot,
    UnsupportedVariant,
)
from .lattice import (
    Edge,
    LatticeGraph,
    LatticeKnot,
    Order,
    Vertex,
    components,
    edge_lex_compare,
    inject,
    knot,
    left_perm,
    refine,
    right_perm,
    translate,
    validate_knot,
)
from .moves import (
    MoveConfig,
    MoveId,
    MoveKind,
    apply,
    apply_word,
    face_edges,
    generators,
    move_config,
    move_fires,
    move_in_bounds,
    total_move,
    tug,
    wag,
    wag_tug_lemma_check,
    wiggle,
)
from .orbits import (
    Basis,
    Equivalence,
    LatticeNumberResult,
    Orbit,
    basis_permutation,
    enumerate_knots,
    equivalent,
    equivalent_escalating,
    lattice_number,
    orbit,
    orbit_partition,
    random_knot,
    random_knots,
)
from .geometry import (
    SampledCurve,
    VariationalReport,
    gauss_linking,
    length,
    preferred_vertex_map,
    pv_approx,
    variational_derivative,
    variational_gradient,
)
from .quantum import (
    Hamiltonian,
    Observable,
    QuantumKnotState,
    apply_move_unitary,
    apply_word_unitary,
    basis_state,
    evolve,
    hamiltonian,
    invariant_observable,
    is_invariant,
    measure_distribution,
    orbit_projector,
    superposition,
    symmetrize_diagonal,
)
from .refinement import QuandleWord, conjecture_check, quandle, refine_generator

__version__ = "0.1.0"
