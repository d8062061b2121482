//! Higher-order games over finite move and outcome sets.
//!
//! Players are modelled by selection functions (which moves are good in a
//! context) rather than payoffs. The crate evaluates a fixed palette of
//! selection functions and quantifiers, checks closedness and attainment by
//! exhaustive enumeration, and computes quantifier and selection equilibria.

pub mod builtins;
pub mod dsl;
pub mod error;
pub mod game;
pub mod hof;
pub mod report;

pub use builtins::{builtin, catalog, payoff_fixture, UnknownBuiltin};
pub use dsl::{parse_game, parse_selection, render_game, GameSource, ParseDiagnostic, ParsedGame};
pub use error::{GameError, HofError};
pub use game::{
    brute_force_nash, classical_game, EquilibriumReport, Game, OutcomeFn, PayoffMatrix, Player,
    PlayerAnalysis, ReportRow, StrategyProfile, DEFAULT_PROFILE_BUDGET,
};
pub use hof::{
    attains, closure_of, contexts, eval_quantifier, eval_selection, image, is_closed,
    lift_quantifier, lift_selection, AttainmentWitness, ClosednessWitness, GameContext, MoveIds,
    MoveSet, Outcome, OutcomeSpace, PreferenceOrder, Quantifier, Rational, SelectionFunction,
    SelectionTable, DEFAULT_CONTEXT_BUDGET,
};
