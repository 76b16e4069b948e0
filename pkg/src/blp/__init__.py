"""Logic programs over Belnap's four-valued bilattice.

Parse a program, ground it, and compute its fixpoint semantics
parameterized by a default value for atoms the rules say nothing about:
F (pessimistic), T (optimistic), U (skeptical), or I (inconsistent).
The package also provides the consensus of the pessimistic and
optimistic semantics, an independent set-based computation path, and
classical three-valued oracles (well-founded, Kripke-Kleene, stable
models) for cross-validation on conventional programs.
"""

from .bilattice import (
    TruthValue,
    big_join_k,
    big_join_t,
    big_meet_k,
    big_meet_t,
    check_bilattice_laws,
    conflation,
    know_join,
    know_meet,
    leq_k,
    leq_t,
    make_product,
    negation,
    truth_join,
    truth_meet,
)
from .bottomup import alpha_fixed_semantics
from .engine import (
    InternalInvariantError,
    SemanticsResult,
    compare_semantics,
    consensus_semantics,
    fix_f_t,
    fix_i,
    fix_u,
    immediate_consequence,
    is_alpha_fixed_model,
    is_model,
    semantics,
    stability,
)
from .grounder import Base, GroundAtom, GroundProgram, ground, herbrand_base
from .oracles import (
    ConventionalityError,
    ThreeValuation,
    enumerate_stable_models,
    gl_transform,
    kripke_kleene,
    well_founded,
)
from .syntax import ParseError, Program, is_conventional, parse_program, render_program
from .valuation import (
    BaseMismatchError,
    Interpretation,
    PseudoInterpretation,
    Valuation,
    const_valuation,
    contrajoin_eval,
    from_interpretation,
    pseudo_eval,
    to_interpretation,
)

__version__ = "0.1.0"
