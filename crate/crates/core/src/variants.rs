//! The comparison methods that sit next to the mean recurrence: a
//! constant-coefficient variant of it, Colley's method in whole-log and
//! round-by-round form, Elo, and a row-weighted version of the whole-log
//! least-squares rating.

use serde::Serialize;

use crate::linalg::{self, Matrix};
use crate::massey::{build_incidence, build_normal_weighted, solve_massey, IncidenceSystem, RatingVector};
use crate::matchlog::{MatchLog, MatchOutcome, Round, TeamIdx};
use crate::temporal::{trace_engine, CoefficientTrace, InitialStrengths, RatingHistory};
use crate::{Error, Result};

/// Fixed-gain update `r_i <- alpha r_i + beta (r_j + s_i)` with
/// `beta = 1 - alpha`. Unlike the mean recurrence the own-history weight
/// does not grow with the match count, so old results decay geometrically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantCoeffConfig {
    alpha: f64,
}

impl ConstantCoeffConfig {
    /// `alpha` must lie strictly inside (0, 1).
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "alpha must be in (0, 1), got {alpha}"
            )));
        }
        Ok(ConstantCoeffConfig { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        1.0 - self.alpha
    }
}

/// Runs the constant-coefficient recurrence over rounds `1..=upto`.
pub fn rate_constant(
    log: &MatchLog,
    cfg: ConstantCoeffConfig,
    rho: &InitialStrengths,
    upto: Round,
) -> Result<RatingHistory> {
    let n = log.team_count();
    if rho.values.len() != n {
        return Err(Error::InvalidConfig(format!(
            "{} initial strengths for {} teams",
            rho.values.len(),
            n
        )));
    }
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let (alpha, beta) = (cfg.alpha(), cfg.beta());
    let mut columns = vec![rho.values.clone()];
    let mut counts = vec![vec![0u32; n]];
    for t in 1..=upto {
        let prev = columns.last().unwrap().clone();
        let mut col = prev.clone();
        let mut cnt = counts.last().unwrap().clone();
        for m in log.matches_in_round(t) {
            cnt[m.home] += 1;
            cnt[m.away] += 1;
            let s = m.spread() as f64;
            col[m.home] = alpha * prev[m.home] + beta * (prev[m.away] + s);
            col[m.away] = alpha * prev[m.away] + beta * (prev[m.home] - s);
        }
        columns.push(col);
        counts.push(cnt);
    }
    Ok(RatingHistory::from_parts(log.team_names().to_vec(), columns, counts))
}

/// Coefficient unfolding for the constant-coefficient recurrence. Column
/// sums are `beta` for every round in which all teams play, instead of the
/// mean recurrence's `1/l`.
pub fn trace_constant_coefficients(
    log: &MatchLog,
    cfg: ConstantCoeffConfig,
    team: TeamIdx,
    upto: Round,
) -> Result<CoefficientTrace> {
    trace_engine(log, team, upto, |_| (cfg.alpha(), cfg.beta()))
}

fn wins_minus_losses(log: &MatchLog, upto: Round) -> Vec<f64> {
    // Draws count half a win and half a loss, so they cancel here.
    let mut wml = vec![0.0; log.team_count()];
    for m in log.matches_upto(upto) {
        match m.outcome() {
            MatchOutcome::HomeWin => {
                wml[m.home] += 1.0;
                wml[m.away] -= 1.0;
            }
            MatchOutcome::AwayWin => {
                wml[m.away] += 1.0;
                wml[m.home] -= 1.0;
            }
            MatchOutcome::Draw => {}
        }
    }
    wml
}

/// Whole-log Colley rating: solves the fixed point
/// `r_i = (1 + (w_i - l_i) + sum_j A_ij r_j) / (2 + D_ii)`.
/// With no matches every rating is 1/2; the mean is always 1/2.
pub fn rate_colley_static(log: &MatchLog, upto: Round) -> Result<RatingVector> {
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let n = log.team_count();
    if n == 0 {
        return Ok(RatingVector { values: vec![] });
    }
    let mut c = Matrix::zeros(n, n);
    for i in 0..n {
        c.set(i, i, 2.0);
    }
    for m in log.matches_upto(upto) {
        c.add_at(m.home, m.home, 1.0);
        c.add_at(m.away, m.away, 1.0);
        c.add_at(m.home, m.away, -1.0);
        c.add_at(m.away, m.home, -1.0);
    }
    let b: Vec<f64> = wins_minus_losses(log, upto).iter().map(|w| 1.0 + w).collect();
    // Strictly diagonally dominant and symmetric, hence positive definite.
    let values = linalg::cholesky_solve(&c, &b)?;
    Ok(RatingVector { values })
}

/// Round-by-round Colley: at round `t` each playing team is re-scored as
/// `(1 + (w - l) + sum of opponents' pre-match ratings) / (2 + m)` over its
/// matches so far, starting from 1/2. Draws add half a win and half a loss.
pub fn rate_colley_temporal(log: &MatchLog, upto: Round) -> Result<RatingHistory> {
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let n = log.team_count();
    let mut columns = vec![vec![0.5; n]];
    let mut counts = vec![vec![0u32; n]];
    let mut wml = vec![0.0; n];
    let mut opp_sum = vec![0.0; n];
    for t in 1..=upto {
        let prev = columns.last().unwrap().clone();
        let mut col = prev.clone();
        let mut cnt = counts.last().unwrap().clone();
        for m in log.matches_in_round(t) {
            cnt[m.home] += 1;
            cnt[m.away] += 1;
            opp_sum[m.home] += prev[m.away];
            opp_sum[m.away] += prev[m.home];
            match m.outcome() {
                MatchOutcome::HomeWin => {
                    wml[m.home] += 1.0;
                    wml[m.away] -= 1.0;
                }
                MatchOutcome::AwayWin => {
                    wml[m.away] += 1.0;
                    wml[m.home] -= 1.0;
                }
                MatchOutcome::Draw => {}
            }
            for side in [m.home, m.away] {
                col[side] = (1.0 + wml[side] + opp_sum[side]) / (2.0 + cnt[side] as f64);
            }
        }
        columns.push(col);
        counts.push(cnt);
    }
    Ok(RatingHistory::from_parts(log.team_names().to_vec(), columns, counts))
}

/// Elo parameters. Defaults are the chess-style constants: gain 25,
/// logistic scale 400, everyone starting from 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EloConfig {
    pub kappa: f64,
    pub zeta: f64,
    pub initial: f64,
    /// Whether a home-field offset passed to [`rate_elo`] also enters the
    /// expected-score formula (it always enters prediction downstream).
    pub hfa_in_update: bool,
}

impl Default for EloConfig {
    fn default() -> Self {
        EloConfig { kappa: 25.0, zeta: 400.0, initial: 0.0, hfa_in_update: true }
    }
}

/// Expected home score for a rating difference `d` (home minus away,
/// home-field offset already applied): `1 / (1 + 10^(-d/zeta))`.
pub fn elo_expected(d: f64, zeta: f64) -> f64 {
    1.0 / (1.0 + 10f64.powf(-d / zeta))
}

fn outcome_score(outcome: MatchOutcome) -> f64 {
    match outcome {
        MatchOutcome::HomeWin => 1.0,
        MatchOutcome::Draw => 0.5,
        MatchOutcome::AwayWin => 0.0,
    }
}

/// Standard Elo over rounds `1..=upto`. Updates within a round read the
/// previous round's ratings, like every other engine here. The update is
/// exactly zero-sum, so the rating total stays at `n * initial`.
pub fn rate_elo(log: &MatchLog, cfg: EloConfig, hfa: f64, upto: Round) -> Result<RatingHistory> {
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    if cfg.zeta <= 0.0 || cfg.kappa <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "kappa and zeta must be positive, got kappa={} zeta={}",
            cfg.kappa, cfg.zeta
        )));
    }
    let n = log.team_count();
    let update_hfa = if cfg.hfa_in_update { hfa } else { 0.0 };
    let mut columns = vec![vec![cfg.initial; n]];
    let mut counts = vec![vec![0u32; n]];
    for t in 1..=upto {
        let prev = columns.last().unwrap().clone();
        let mut col = prev.clone();
        let mut cnt = counts.last().unwrap().clone();
        for m in log.matches_in_round(t) {
            cnt[m.home] += 1;
            cnt[m.away] += 1;
            let d = prev[m.home] - prev[m.away] + update_hfa;
            let mu = elo_expected(d, cfg.zeta);
            let delta = cfg.kappa * (outcome_score(m.outcome()) - mu);
            col[m.home] = prev[m.home] + delta;
            col[m.away] = prev[m.away] - delta;
        }
        columns.push(col);
        counts.push(cnt);
    }
    Ok(RatingHistory::from_parts(log.team_names().to_vec(), columns, counts))
}

/// Per-match row weights for the weighted least-squares rating.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WeightMode {
    /// All matches weigh 1; identical to the unweighted rating.
    Unit,
    /// A match in round `t` weighs `t`, so recent form dominates.
    LinearByRound,
}

impl WeightVector {
    pub fn unit(len: usize) -> Self {
        WeightVector { values: vec![1.0; len] }
    }

    pub fn for_mode(sys: &IncidenceSystem, mode: WeightMode) -> Self {
        match mode {
            WeightMode::Unit => WeightVector::unit(sys.rounds.len()),
            WeightMode::LinearByRound => WeightVector {
                values: sys.rounds.iter().map(|&r| r as f64).collect(),
            },
        }
    }
}

/// Weighted whole-log rating: solves `X^T W X r = X^T W y` with the same
/// zero-sum pinning as the unweighted system. Unit weights reproduce it
/// exactly.
pub fn rate_massey_weighted(log: &MatchLog, w: &WeightVector, upto: Round) -> Result<RatingVector> {
    let sys = build_incidence(log, upto)?;
    if w.values.len() != sys.x.rows() {
        return Err(Error::InvalidConfig(format!(
            "{} weights for {} matches",
            w.values.len(),
            sys.x.rows()
        )));
    }
    if let Some(bad) = w.values.iter().find(|&&v| !(v > 0.0)) {
        return Err(Error::InvalidConfig(format!("weights must be positive, got {bad}")));
    }
    let normal = build_normal_weighted(&sys, Some(&w.values));
    solve_massey(&normal)
}
