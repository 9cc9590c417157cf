//! Whole-log least-squares ratings and their spectral diagnostics.
//!
//! Every match contributes one linear equation: winner rating minus loser
//! rating should equal the goal spread (a draw equates the two sides). The
//! normal equations of that overdetermined system have the matrix
//! `M = D - A`, with `D` the diagonal of match counts and `A` the pairwise
//! meeting counts; `M` is exactly the Laplacian of the match graph, which is
//! what ties rating quality to graph connectivity. `M` is rank-deficient by
//! one on a connected graph, so the solver pins the rating sum to zero.

use serde::Serialize;

use crate::linalg::{self, Matrix};
use crate::matchlog::{MatchLog, MatchOutcome, Round};
use crate::{Error, Result};

/// The raw match-by-match system `X r = y`.
///
/// One row per match: +1 for the winner, -1 for the loser, spread on the
/// right-hand side. Draws keep the home side on +1 with a zero spread.
#[derive(Debug, Clone)]
pub struct IncidenceSystem {
    pub names: Vec<String>,
    pub x: Matrix,
    pub y: Vec<f64>,
    /// Round of each row, kept for round-based row weighting.
    pub rounds: Vec<Round>,
}

/// Normal equations `M r = p` plus the pieces `M` decomposes into.
#[derive(Debug, Clone)]
pub struct MasseySystem {
    pub names: Vec<String>,
    /// `M = D - A`, the match-graph Laplacian.
    pub m: Matrix,
    /// Accumulated spreads per team, `X^T y`. Sums to zero.
    pub p: Vec<f64>,
    /// Matches played per team (diagonal of `D`).
    pub games: Vec<u32>,
    /// Pairwise meeting counts (`A`, symmetric, zero diagonal).
    pub pair_counts: Matrix,
}

/// Ratings, one per team, summing to zero for spread-based methods.
#[derive(Debug, Clone, Serialize)]
pub struct RatingVector {
    pub values: Vec<f64>,
}

impl RatingVector {
    pub fn to_csv(&self, names: &[String]) -> String {
        let mut out = String::from("team,rating\n");
        for (name, v) in names.iter().zip(&self.values) {
            out.push_str(&format!("{name},{v:.6}\n"));
        }
        out
    }
}

/// Builds the incidence system over rounds `1..=upto`.
pub fn build_incidence(log: &MatchLog, upto: Round) -> Result<IncidenceSystem> {
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let n = log.team_count();
    let rows: Vec<_> = log.matches_upto(upto).collect();
    let mut x = Matrix::zeros(rows.len(), n);
    let mut y = vec![0.0; rows.len()];
    let mut rounds = vec![0; rows.len()];
    for (k, m) in rows.iter().enumerate() {
        let (winner, loser) = match m.outcome() {
            MatchOutcome::AwayWin => (m.away, m.home),
            // draws orient the row toward the home side
            MatchOutcome::HomeWin | MatchOutcome::Draw => (m.home, m.away),
        };
        x.set(k, winner, 1.0);
        x.set(k, loser, -1.0);
        y[k] = m.spread().abs() as f64;
        rounds[k] = m.round;
    }
    Ok(IncidenceSystem {
        names: log.team_names().to_vec(),
        x,
        y,
        rounds,
    })
}

/// Forms `M = X^T X` and `p = X^T y` and splits `M` into `D` and `A`.
pub fn build_normal(sys: &IncidenceSystem) -> MasseySystem {
    build_normal_weighted(sys, None)
}

/// Weighted variant, `M = X^T W X`, `p = X^T W y` with diagonal `W`.
pub fn build_normal_weighted(sys: &IncidenceSystem, weights: Option<&[f64]>) -> MasseySystem {
    let m = match weights {
        Some(w) => sys.x.weighted_gram(w),
        None => sys.x.gram(),
    };
    let p = sys.x.transpose_weighted_vec(weights, &sys.y);
    let n = sys.x.cols();
    // True match counts, independent of row weights.
    let mut games = vec![0u32; n];
    for k in 0..sys.x.rows() {
        for i in 0..n {
            if sys.x.at(k, i) != 0.0 {
                games[i] += 1;
            }
        }
    }
    let mut pair_counts = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pair_counts.set(i, j, -m.at(i, j));
            }
        }
    }
    MasseySystem { names: sys.names.clone(), m, p, games, pair_counts }
}

/// Component id per team in the match graph (edge = at least one meeting).
pub fn components(sys: &MasseySystem) -> Vec<usize> {
    let n = sys.names.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX && sys.pair_counts.at(i, j) > 0.0 {
                    comp[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    comp
}

fn component_count(sys: &MasseySystem) -> usize {
    components(sys).iter().max().map_or(0, |&m| m + 1)
}

/// Solves `M r = p` with the sum of ratings pinned to zero, by replacing the
/// last row of `M` with all ones (and its right-hand side with 0). Requires
/// a connected match graph; otherwise individual components float freely.
pub fn solve_massey(sys: &MasseySystem) -> Result<RatingVector> {
    let n = sys.names.len();
    if n == 0 {
        return Ok(RatingVector { values: vec![] });
    }
    let comps = component_count(sys);
    if comps != 1 {
        return Err(Error::DisconnectedGraph { components: comps });
    }
    let mut a = sys.m.clone();
    let mut b = sys.p.clone();
    for j in 0..n {
        a.set(n - 1, j, 1.0);
    }
    b[n - 1] = 0.0;
    let values = linalg::solve(&a, &b)?;
    Ok(RatingVector { values })
}

/// Like [`solve_massey`] but rates each connected component on its own,
/// zero-sum within the component; isolated teams sit at 0. Always defined,
/// which is what the evaluation harness needs early in a season.
pub fn solve_by_component(sys: &MasseySystem) -> Result<RatingVector> {
    let n = sys.names.len();
    let comp = components(sys);
    let ncomp = comp.iter().max().map_or(0, |&m| m + 1);
    let mut values = vec![0.0; n];
    for c in 0..ncomp {
        let members: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
        let k = members.len();
        if k < 2 {
            continue;
        }
        let mut a = Matrix::zeros(k, k);
        let mut b = vec![0.0; k];
        for (ii, &i) in members.iter().enumerate() {
            for (jj, &j) in members.iter().enumerate() {
                a.set(ii, jj, sys.m.at(i, j));
            }
            b[ii] = sys.p[i];
        }
        for jj in 0..k {
            a.set(k - 1, jj, 1.0);
        }
        b[k - 1] = 0.0;
        let x = linalg::solve(&a, &b)?;
        for (ii, &i) in members.iter().enumerate() {
            values[i] = x[ii];
        }
    }
    Ok(RatingVector { values })
}

/// Schedule-strength / own-performance split of a rating.
///
/// `schedule[i] = (sum_j A_ij r_j) / D_ii` and `performance[i] = p_i / D_ii`;
/// the two add back up to `r_i`. Every team must have played.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub schedule: Vec<f64>,
    pub performance: Vec<f64>,
}

pub fn decompose_rating(sys: &MasseySystem, r: &RatingVector) -> Result<Decomposition> {
    let n = sys.names.len();
    let mut schedule = vec![0.0; n];
    let mut performance = vec![0.0; n];
    for i in 0..n {
        if sys.games[i] == 0 {
            return Err(Error::TeamWithoutMatches(sys.names[i].clone()));
        }
        let mut opp = 0.0;
        for j in 0..n {
            if j != i {
                opp += sys.pair_counts.at(i, j) * r.values[j];
            }
        }
        // Divide by the diagonal of M itself so the split stays exact for
        // weighted systems too.
        let d = sys.m.at(i, i);
        schedule[i] = opp / d;
        performance[i] = sys.p[i] / d;
    }
    Ok(Decomposition { schedule, performance })
}

/// Spectrum of `M` and what it says about the schedule.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    /// Ascending eigenvalues of the match-graph Laplacian.
    pub eigenvalues: Vec<f64>,
    /// Second-smallest eigenvalue (algebraic connectivity); `None` with
    /// fewer than two teams.
    pub algebraic_connectivity: Option<f64>,
    /// Number of connected components (eigenvalues below 1e-8).
    pub components: usize,
    pub connected: bool,
    /// `||p|| (n - l2) / (n l2)`, the radius around the idealized
    /// round-robin rating `p/n` that the true rating is confined to when
    /// no pairing is repeated. Repeated pairings can push `l2` past `n`
    /// and the number goes meaningless (even negative); compare it with
    /// `deviation` only on simple schedules. `None` when disconnected.
    pub bound_rhs: Option<f64>,
    /// `||r - p/n||` for the supplied rating.
    pub deviation: f64,
}

const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

pub fn spectral_report(sys: &MasseySystem, r: &RatingVector) -> Result<SpectralReport> {
    let n = sys.names.len();
    let eigenvalues = linalg::symmetric_eigenvalues(&sys.m)?;
    let components = eigenvalues.iter().filter(|&&l| l < ZERO_EIGENVALUE_TOL).count();
    let connected = components <= 1;
    let algebraic_connectivity = (n >= 2).then(|| eigenvalues[1]);
    let p_norm = linalg::norm2(&sys.p);
    let bound_rhs = match (connected, algebraic_connectivity) {
        (true, Some(l2)) if l2 > ZERO_EIGENVALUE_TOL => {
            Some(p_norm * (n as f64 - l2) / (n as f64 * l2))
        }
        _ => None,
    };
    let nf = n as f64;
    let dev_vec: Vec<f64> = r
        .values
        .iter()
        .zip(&sys.p)
        .map(|(ri, pi)| ri - pi / nf)
        .collect();
    Ok(SpectralReport {
        eigenvalues,
        algebraic_connectivity,
        components,
        connected,
        bound_rhs,
        deviation: linalg::norm2(&dev_vec),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FOUR_TEAM_CSV: &str = "\
round,date,home,away,home_goals,away_goals
1,,A,C,2,1
1,,B,D,2,1
2,,A,D,3,0
2,,B,C,1,1
3,,A,B,1,0
3,,C,D,1,0
";

    fn example_log() -> MatchLog {
        MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn incidence_rows_orient_toward_winner() {
        let log = example_log();
        let sys = build_incidence(&log, 3).unwrap();
        assert_eq!(sys.x.rows(), 6);
        // A (idx 0) beat C (idx 1) 2-1
        assert_eq!(sys.x.at(0, 0), 1.0);
        assert_eq!(sys.x.at(0, 1), -1.0);
        assert_eq!(sys.y[0], 1.0);
        // B (idx 2) drew C (idx 1): home keeps +1, zero spread
        assert_eq!(sys.x.at(3, 2), 1.0);
        assert_eq!(sys.x.at(3, 1), -1.0);
        assert_eq!(sys.y[3], 0.0);
        // every row: one +1, one -1
        for k in 0..sys.x.rows() {
            let row: Vec<f64> = (0..4).map(|j| sys.x.at(k, j)).collect();
            assert_eq!(row.iter().filter(|&&v| v == 1.0).count(), 1);
            assert_eq!(row.iter().filter(|&&v| v == -1.0).count(), 1);
            assert_eq!(row.iter().filter(|&&v| v == 0.0).count(), 2);
        }
    }

    #[test]
    fn normal_equations_on_complete_round_robin() {
        let log = example_log();
        let sys = build_normal(&build_incidence(&log, 3).unwrap());
        // Indices: A=0, C=1, B=2, D=3 (first-appearance order).
        for i in 0..4 {
            assert_eq!(sys.games[i], 3);
            assert_eq!(sys.m.at(i, i), 3.0);
            for j in 0..4 {
                if i != j {
                    assert_eq!(sys.m.at(i, j), -1.0);
                    assert_eq!(sys.pair_counts.at(i, j), 1.0);
                }
            }
        }
        let a = log.team_index("A").unwrap();
        let d = log.team_index("D").unwrap();
        assert_eq!(sys.p[a], 5.0);
        assert_eq!(sys.p[d], -5.0);
        assert!(close(sys.p.iter().sum::<f64>(), 0.0, 1e-12));
    }

    #[test]
    fn complete_round_robin_solution_is_p_over_n() {
        let log = example_log();
        let sys = build_normal(&build_incidence(&log, 3).unwrap());
        let r = solve_massey(&sys).unwrap();
        for i in 0..4 {
            assert!(close(r.values[i], sys.p[i] / 4.0, 1e-9));
        }
        assert!(close(r.values.iter().sum::<f64>(), 0.0, 1e-9));
        // residual of the original (un-replaced) normal equations
        let res: Vec<f64> = sys
            .m
            .mul_vec(&r.values)
            .iter()
            .zip(&sys.p)
            .map(|(a, b)| a - b)
            .collect();
        assert!(linalg::norm2(&res) <= 1e-9 * linalg::norm2(&sys.p).max(1.0));
    }

    #[test]
    fn decomposition_adds_back_up() {
        let log = example_log();
        let sys = build_normal(&build_incidence(&log, 3).unwrap());
        let r = solve_massey(&sys).unwrap();
        let d = decompose_rating(&sys, &r).unwrap();
        let a = log.team_index("A").unwrap();
        assert!(close(d.performance[a], 5.0 / 3.0, 1e-12));
        assert!(close(d.schedule[a], -r.values[a] / 3.0, 1e-9));
        for i in 0..4 {
            assert!(close(d.schedule[i] + d.performance[i], r.values[i], 1e-9));
        }
    }

    #[test]
    fn spectral_report_on_complete_graph() {
        let log = example_log();
        let sys = build_normal(&build_incidence(&log, 3).unwrap());
        let r = solve_massey(&sys).unwrap();
        let rep = spectral_report(&sys, &r).unwrap();
        let expect = [0.0, 4.0, 4.0, 4.0];
        for (got, want) in rep.eigenvalues.iter().zip(expect) {
            assert!(close(*got, want, 1e-9));
        }
        assert_eq!(rep.components, 1);
        assert!(rep.connected);
        assert!(close(rep.algebraic_connectivity.unwrap(), 4.0, 1e-9));
        // complete graph: bound collapses to zero and so does the deviation
        assert!(rep.bound_rhs.unwrap().abs() <= 1e-9);
        assert!(rep.deviation <= 1e-9);
    }

    #[test]
    fn first_round_is_disconnected() {
        let log = example_log();
        let sys = build_normal(&build_incidence(&log, 1).unwrap());
        match solve_massey(&sys) {
            Err(Error::DisconnectedGraph { components }) => assert_eq!(components, 2),
            other => panic!("expected disconnected, got {other:?}"),
        }
        // per-component solve still works: A beat C by 1, B beat D by 1
        let r = solve_by_component(&sys).unwrap();
        let a = log.team_index("A").unwrap();
        let c = log.team_index("C").unwrap();
        assert!(close(r.values[a], 0.5, 1e-12));
        assert!(close(r.values[c], -0.5, 1e-12));
        let rep = spectral_report(&sys, &r).unwrap();
        assert_eq!(rep.components, 2);
        assert!(!rep.connected);
        assert!(rep.bound_rhs.is_none());
    }

    #[test]
    fn empty_log_has_no_rating() {
        let log = MatchLog::parse_csv("round,date,home,away,home_goals,away_goals\n").unwrap();
        let sys = build_normal(&build_incidence(&log, 0).unwrap());
        let r = solve_massey(&sys).unwrap();
        assert!(r.values.is_empty());
    }

    #[test]
    fn unplayed_team_blocks_decomposition() {
        let text = "round,date,home,away,home_goals,away_goals\n1,,A,B,1,0\n2,,C,D,2,0\n";
        let log = MatchLog::parse_csv(text).unwrap();
        let sys = build_normal(&build_incidence(&log, 1).unwrap());
        let r = RatingVector { values: vec![0.0; 4] };
        match decompose_rating(&sys, &r) {
            Err(Error::TeamWithoutMatches(name)) => assert_eq!(name, "C"),
            other => panic!("expected TeamWithoutMatches, got {other:?}"),
        }
    }

    #[test]
    fn repeated_pairings_break_the_simple_graph_bound() {
        // Same two teams three times: spectrum {0, 6}, above n = 2. The
        // p/n deviation bound assumes each pair meets at most once; this
        // pins down why the property tests sample simple schedules.
        let text = "round,date,home,away,home_goals,away_goals\n1,,A,B,1,0\n2,,A,B,2,0\n3,,A,B,3,0\n";
        let log = MatchLog::parse_csv(text).unwrap();
        let sys = build_normal(&build_incidence(&log, 3).unwrap());
        let r = solve_massey(&sys).unwrap();
        let rep = spectral_report(&sys, &r).unwrap();
        assert!(close(*rep.eigenvalues.last().unwrap(), 6.0, 1e-9));
        assert!(close(r.values[0], 1.0, 1e-9)); // spreads 1,2,3 -> mean 2, split +-1
    }
}
