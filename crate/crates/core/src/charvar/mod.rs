//! Characteristic varieties: tori, ranks on tori and obstruction checks.

mod obstruction;
mod rank;
mod torus;

pub use obstruction::{verify_obstruction, ObstructionReport, ObstructionWitness, PairReport, TorusReport};
pub use rank::{
    charvar_depth, depth_from_rank, fitting_minors, generic_rank, laurent_det, laurent_rank, rank_on_component,
    rank_on_torus,
};
pub use torus::{
    parse_constraint, parse_tori, render_tori, solve_pl_constraint, substitute, torus_intersect, Canonical, Constraint,
    Root, TorsionTorus, TorusParametrization,
};
