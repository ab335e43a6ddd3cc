//! Pure-strategy equilibria of supermodular games by lattice fixed-point
//! iteration, and their approximation through Galois-connection abstractions
//! of the strategy spaces.

pub mod abstract_game;
pub mod abstraction;
pub mod error;
pub mod game;
pub mod lattice;
pub mod models;
pub mod powerset;
pub mod rational;
pub mod solver;

pub use abstract_game::{
    abstract_best_response_game, abstract_profile_space, best_correct_approx,
    best_correct_approx_with, best_response_approx, check_complete_approx, check_correct_approx,
    check_correct_approx_with, check_em_dominance, check_theorem_condition, restrict_game,
    AbstractGame, ApproxCounterexample, CompletenessVerdict, CorrectnessVerdict, DominanceVerdict,
    Scheme, TheoremFailure, TheoremVerdict,
};
pub use abstraction::{
    alpha_s, ceil_abstraction, ceil_digits, compose_product, decompose_product, gamma_s,
    gc_from_subset, is_principal_filter, is_relational, validate_gc, ClosureOperator,
    GaloisConnection, GcFlags, GcValidation,
};
pub use error::{Error, Result};
pub use game::{
    best_response, cartesian, check_lattice_property, is_supermodular_game, player_best_response,
    Correspondence, Counterexample, Game, PropertyMode, PropertyVerdict, SupermodularityReport,
    Utility,
};
pub use lattice::{Elem, ElemSet, Lattice};
pub use powerset::{extremal_membership, powerset_compare, ExtremalFlags, SetRelation};
pub use rational::{q, Rational};
pub use solver::{
    enumerate_equilibria, fix_set_multivalued, gfp_multivalued, lfp_multivalued, rt_solve,
    rt_solve_with, solve_game, Direction, EquilibriumReport, FixSet, RtOptions, SolveTrace,
};
