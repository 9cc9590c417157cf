//! Rating engines for round-based leagues, built around score spreads.
//!
//! The crate has three layers:
//!
//! * [`matchlog`] holds the input model: a validated list of matches grouped
//!   into rounds, plus points-table bookkeeping.
//! * Rating engines. [`massey`] solves the classic least-squares system over
//!   a whole log and reports on its spectrum; [`temporal`] runs the
//!   round-by-round mean recurrence and can unfold any rating into per-match
//!   coefficients; [`variants`] carries the neighbouring methods used for
//!   comparison (constant-coefficient recurrence, Colley in both static and
//!   round-by-round form, Elo, weighted least squares).
//! * [`eval`] turns any engine into round-indexed rating tables and scores
//!   them: rank correlation between methods, next-round prediction accuracy,
//!   home-field calibration, and a deterministic synthetic schedule generator.
//!
//! Matrix code lives in [`linalg`]: the systems here are small and dense
//! (a league is tens of teams), so the crate carries its own LU/Cholesky
//! solvers and a cyclic Jacobi eigensolver instead of pulling in a linear
//! algebra stack.

pub mod eval;
pub mod linalg;
pub mod massey;
pub mod matchlog;
pub mod temporal;
pub mod variants;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Input text could not be parsed; `line` is 1-based and counts the header.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The CSV header did not match the expected column list.
    #[error("unknown header: expected `{expected}`, got `{got}`")]
    UnknownHeader { expected: String, got: String },

    /// A team was scheduled twice in the same round.
    #[error("team `{team}` appears twice in round {round}")]
    DuplicateTeamRound { team: String, round: u32 },

    /// A team name was not found in the log.
    #[error("unknown team `{0}`")]
    UnknownTeam(String),

    /// A round index fell outside the log's range.
    #[error("round {round} out of range (log has rounds 1..={max})")]
    RoundOutOfRange { round: u32, max: u32 },

    /// The match graph does not connect all teams, so a unique zero-sum
    /// rating does not exist. Wait for more matches or rate components
    /// separately (see `massey::solve_by_component`).
    #[error("match graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },

    /// An operation that divides by a team's match count found a team with
    /// zero matches.
    #[error("team `{0}` has no matches in the requested range")]
    TeamWithoutMatches(String),

    /// A linear system was numerically singular.
    #[error("linear system is singular or numerically unstable")]
    SingularSystem,

    /// A configuration value was outside its documented domain.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
