//! Round-by-round rating: each match replaces a team's rating with the
//! running mean of (spread + opponent's previous rating) over its matches
//! so far, which updates in O(1) per match:
//!
//! `r_i(t) = ((m-1)/m) r_i(t-1) + (s_i(t) + r_j(t-1)) / m`
//!
//! with `m` the team's match count through round `t`. All matches of a
//! round read the previous round's column, so in-round order is irrelevant;
//! teams not playing carry their rating forward. Round 0 holds the initial
//! strengths.
//!
//! Because the update is affine, any rating unfolds into nonnegative
//! coefficients over realized spreads plus a mix of initial strengths; see
//! [`trace_coefficients`]. The per-spread coefficient columns sum to `1/l`
//! for round `l` when every team plays every round, so the total spread
//! mass through round `t` is the harmonic number `H_t`: early rounds keep
//! a sizable say all season, but never a dominant one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::matchlog::{MatchLog, Round, TeamIdx};
use crate::{Error, Result};

/// Pre-season ratings (round-0 column), `0` for teams without a prior.
#[derive(Debug, Clone, PartialEq)]
pub struct InitialStrengths {
    pub values: Vec<f64>,
}

impl InitialStrengths {
    pub fn zeros(n: usize) -> Self {
        InitialStrengths { values: vec![0.0; n] }
    }

    /// Seeds strengths from a `team,rating` CSV (for example a previous
    /// season's final ratings), scaled by `scale`. Teams absent from the
    /// file stay at 0; file rows naming unknown teams are returned so the
    /// caller can warn about them.
    pub fn from_prior_csv(text: &str, log: &MatchLog, scale: f64) -> Result<(Self, Vec<String>)> {
        let mut rho = InitialStrengths::zeros(log.team_count());
        let mut unmatched = Vec::new();
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        for record in rdr.records() {
            let record = record.map_err(|e| Error::Parse {
                line: e.position().map(|p| p.line() as usize).unwrap_or(0),
                msg: e.to_string(),
            })?;
            let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
            let name = record.get(0).unwrap_or("");
            let value: f64 = record.get(1).unwrap_or("").parse().map_err(|_| Error::Parse {
                line,
                msg: format!("rating `{}` is not a number", record.get(1).unwrap_or("")),
            })?;
            match log.team_index(name) {
                Some(idx) => rho.values[idx] = value * scale,
                None => unmatched.push(name.to_string()),
            }
        }
        Ok((rho, unmatched))
    }
}

/// Ratings and match counts for every team at every round `0..=upto`.
#[derive(Debug, Clone, Serialize)]
pub struct RatingHistory {
    pub names: Vec<String>,
    /// `columns[t][i]` is team `i`'s rating at the end of round `t`.
    columns: Vec<Vec<f64>>,
    /// `counts[t][i]` is how many matches team `i` has played through `t`.
    counts: Vec<Vec<u32>>,
}

impl RatingHistory {
    pub(crate) fn from_parts(
        names: Vec<String>,
        columns: Vec<Vec<f64>>,
        counts: Vec<Vec<u32>>,
    ) -> Self {
        debug_assert_eq!(columns.len(), counts.len());
        RatingHistory { names, columns, counts }
    }

    pub fn team_count(&self) -> usize {
        self.names.len()
    }

    /// Last round in the table.
    pub fn upto(&self) -> Round {
        (self.columns.len() - 1) as Round
    }

    pub fn rating(&self, team: TeamIdx, t: Round) -> f64 {
        self.columns[t as usize][team]
    }

    pub fn column(&self, t: Round) -> &[f64] {
        &self.columns[t as usize]
    }

    pub fn games(&self, team: TeamIdx, t: Round) -> u32 {
        self.counts[t as usize][team]
    }

    /// `team,round,rating,games` rows, teams in index order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("team,round,rating,games\n");
        for (i, name) in self.names.iter().enumerate() {
            for t in 0..self.columns.len() {
                out.push_str(&format!(
                    "{},{},{:.6},{}\n",
                    name, t, self.columns[t][i], self.counts[t][i]
                ));
            }
        }
        out
    }
}

/// One match's worth of update for both sides.
///
/// `m_home`/`m_away` are the match counts *including* this match; `spread`
/// is from the home side's view. Both new ratings read the pre-round values.
pub fn step_update(
    r_home_prev: f64,
    r_away_prev: f64,
    spread: f64,
    m_home: u32,
    m_away: u32,
) -> (f64, f64) {
    debug_assert!(m_home >= 1 && m_away >= 1);
    let mh = m_home as f64;
    let ma = m_away as f64;
    let home = ((mh - 1.0) * r_home_prev + spread + r_away_prev) / mh;
    let away = ((ma - 1.0) * r_away_prev - spread + r_home_prev) / ma;
    (home, away)
}

/// Runs the recurrence over rounds `1..=upto`.
pub fn rate_temporal(log: &MatchLog, rho: &InitialStrengths, upto: Round) -> Result<RatingHistory> {
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
    let mut columns = Vec::with_capacity(upto as usize + 1);
    let mut counts = Vec::with_capacity(upto as usize + 1);
    columns.push(rho.values.clone());
    counts.push(vec![0u32; n]);
    for t in 1..=upto {
        let prev = columns.last().unwrap().clone();
        let mut col = prev.clone();
        let mut cnt = counts.last().unwrap().clone();
        for m in log.matches_in_round(t) {
            cnt[m.home] += 1;
            cnt[m.away] += 1;
            let (h, a) = step_update(
                prev[m.home],
                prev[m.away],
                m.spread() as f64,
                cnt[m.home],
                cnt[m.away],
            );
            col[m.home] = h;
            col[m.away] = a;
        }
        columns.push(col);
        counts.push(cnt);
    }
    Ok(RatingHistory { names: log.team_names().to_vec(), columns, counts })
}

/// A rating unfolded into its inputs: one nonnegative coefficient per
/// (team, round) spread cell plus a convex-ish mix over initial strengths.
///
/// `r_team(upto) = sum coeff[(k,l)] * s_k(l) + sum init_coeffs[k] * rho_k`.
#[derive(Debug, Clone, Serialize)]
pub struct CoefficientTrace {
    pub team: TeamIdx,
    pub upto: Round,
    /// Sparse, keyed by (team index, round); only played cells appear.
    pub spread_coeffs: BTreeMap<(TeamIdx, Round), f64>,
    /// Dense over teams; sums to 1.
    pub init_coeffs: Vec<f64>,
}

impl CoefficientTrace {
    pub fn coeff(&self, team: TeamIdx, round: Round) -> f64 {
        self.spread_coeffs.get(&(team, round)).copied().unwrap_or(0.0)
    }

    /// Sum of coefficients per round column.
    pub fn column_sums(&self) -> BTreeMap<Round, f64> {
        let mut out = BTreeMap::new();
        for (&(_, l), &v) in &self.spread_coeffs {
            *out.entry(l).or_insert(0.0) += v;
        }
        out
    }

    /// Total spread mass, bounded by the harmonic number `H_upto`.
    pub fn total_mass(&self) -> f64 {
        self.spread_coeffs.values().sum()
    }

    /// `team,round,coefficient` rows in (team, round) order.
    pub fn to_csv(&self, names: &[String]) -> String {
        let mut out = String::from("team,round,coefficient\n");
        for (&(k, l), &v) in &self.spread_coeffs {
            out.push_str(&format!("{},{},{:.6}\n", names[k], l, v));
        }
        out
    }
}

/// Shared engine for the mean recurrence and the constant-coefficient
/// variant: both update as `C_i <- a C_i + b E_i + b C_j` on spread
/// coefficients and `g_i <- a g_i + b g_j` on initial-strength mixes,
/// differing only in how `(a, b)` depends on the match count.
pub(crate) fn trace_engine(
    log: &MatchLog,
    team: TeamIdx,
    upto: Round,
    coeff_pair: impl Fn(u32) -> (f64, f64),
) -> Result<CoefficientTrace> {
    let n = log.team_count();
    if team >= n {
        return Err(Error::UnknownTeam(format!("#{team}")));
    }
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let mut spread: Vec<BTreeMap<(TeamIdx, Round), f64>> = vec![BTreeMap::new(); n];
    let mut init: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            e
        })
        .collect();
    let mut games = vec![0u32; n];
    for t in 1..=upto {
        let mut updates: Vec<(TeamIdx, BTreeMap<(TeamIdx, Round), f64>, Vec<f64>)> = Vec::new();
        for m in log.matches_in_round(t) {
            for (me, other) in [(m.home, m.away), (m.away, m.home)] {
                let (a, b) = coeff_pair(games[me] + 1);
                let mut c: BTreeMap<(TeamIdx, Round), f64> = BTreeMap::new();
                for (&key, &v) in &spread[me] {
                    let w = a * v;
                    if w != 0.0 {
                        c.insert(key, w);
                    }
                }
                for (&key, &v) in &spread[other] {
                    *c.entry(key).or_insert(0.0) += b * v;
                }
                *c.entry((me, t)).or_insert(0.0) += b;
                let g: Vec<f64> = init[me]
                    .iter()
                    .zip(&init[other])
                    .map(|(gi, gj)| a * gi + b * gj)
                    .collect();
                updates.push((me, c, g));
            }
        }
        for m in log.matches_in_round(t) {
            games[m.home] += 1;
            games[m.away] += 1;
        }
        for (me, c, g) in updates {
            spread[me] = c;
            init[me] = g;
        }
    }
    Ok(CoefficientTrace {
        team,
        upto,
        spread_coeffs: std::mem::take(&mut spread[team]),
        init_coeffs: std::mem::take(&mut init[team]),
    })
}

/// Unfolds `team`'s rating at round `upto` into per-spread coefficients for
/// the mean recurrence: `(a, b) = ((m-1)/m, 1/m)` at its `m`-th match.
pub fn trace_coefficients(log: &MatchLog, team: TeamIdx, upto: Round) -> Result<CoefficientTrace> {
    trace_engine(log, team, upto, |m| {
        let mf = m as f64;
        ((mf - 1.0) / mf, 1.0 / mf)
    })
}

/// Evaluates a trace against the realized spreads and initial strengths.
/// Always equals the corresponding table entry up to rounding noise.
pub fn reconstruct_from_trace(
    trace: &CoefficientTrace,
    log: &MatchLog,
    rho: &InitialStrengths,
) -> f64 {
    let mut acc = 0.0;
    for (&(k, l), &v) in &trace.spread_coeffs {
        acc += v * log.point_spread(k, l) as f64;
    }
    for (g, r) in trace.init_coeffs.iter().zip(&rho.values) {
        acc += g * r;
    }
    acc
}

/// `(H_t, H_t * min spread, H_t * max spread)`: the harmonic total of
/// coefficient mass through round `t` and the rating range it implies when
/// every team plays every round (min/max over realized per-round spreads).
pub fn harmonic_range(log: &MatchLog, t: Round) -> Result<(f64, f64, f64)> {
    if t < 1 || t > log.rounds() {
        return Err(Error::RoundOutOfRange { round: t, max: log.rounds() });
    }
    let h: f64 = (1..=t).map(|l| 1.0 / l as f64).sum();
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for m in log.matches_upto(t) {
        let s = m.spread();
        lo = lo.min(s.min(-s));
        hi = hi.max(s.max(-s));
    }
    if lo > hi {
        return Err(Error::InvalidConfig(format!("no matches through round {t}")));
    }
    Ok((h, h * lo as f64, h * hi as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchlog::MatchLog;

    const FOUR_TEAM_CSV: &str = "\
round,date,home,away,home_goals,away_goals
1,,A,C,2,1
1,,B,D,2,1
2,,A,D,3,0
2,,B,C,1,1
3,,A,B,1,0
3,,C,D,1,0
";

    /// Round 4 replays the opening pairings; scores there are irrelevant to
    /// coefficient traces, which depend on the schedule alone.
    const FOUR_TEAM_CSV_R4: &str = "\
round,date,home,away,home_goals,away_goals
1,,A,C,2,1
1,,B,D,2,1
2,,A,D,3,0
2,,B,C,1,1
3,,A,B,1,0
3,,C,D,1,0
4,,A,C,1,0
4,,B,D,0,0
";

    fn log3() -> MatchLog {
        MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap()
    }

    fn ids(log: &MatchLog) -> [TeamIdx; 4] {
        ["A", "B", "C", "D"].map(|n| log.team_index(n).unwrap())
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn hand_worked_three_rounds() {
        let log = log3();
        let [a, b, c, d] = ids(&log);
        let h = rate_temporal(&log, &InitialStrengths::zeros(4), 3).unwrap();
        let expect = [
            (1, [1.0, 1.0, -1.0, -1.0]),
            (2, [1.5, 0.0, 0.0, -1.5]),
            (3, [4.0 / 3.0, 1.0 / 6.0, -1.0 / 6.0, -4.0 / 3.0]),
        ];
        for (t, vals) in expect {
            for (team, want) in [a, b, c, d].into_iter().zip(vals) {
                assert!(
                    close(h.rating(team, t), want, 1e-12),
                    "round {t}: got {} want {want}",
                    h.rating(team, t)
                );
            }
        }
        for (team, games) in [a, b, c, d].into_iter().zip([3, 3, 3, 3]) {
            assert_eq!(h.games(team, 3), games);
        }
    }

    #[test]
    fn nonplayers_carry_their_rating() {
        let text = "round,date,home,away,home_goals,away_goals\n1,,A,B,2,0\n2,,A,C,1,0\n";
        let log = MatchLog::parse_csv(text).unwrap();
        let b = log.team_index("B").unwrap();
        let h = rate_temporal(&log, &InitialStrengths::zeros(3), 2).unwrap();
        assert_eq!(h.rating(b, 1), h.rating(b, 2));
        assert_eq!(h.games(b, 2), 1);
    }

    #[test]
    fn first_match_forgets_own_prior() {
        // With m = 1 the recurrence keeps only spread + opponent prior.
        let text = "round,date,home,away,home_goals,away_goals\n1,,A,B,3,1\n";
        let log = MatchLog::parse_csv(text).unwrap();
        let rho = InitialStrengths { values: vec![10.0, -4.0] };
        let h = rate_temporal(&log, &rho, 1).unwrap();
        assert!(close(h.rating(0, 1), 2.0 + -4.0, 1e-12));
        assert!(close(h.rating(1, 1), -2.0 + 10.0, 1e-12));
    }

    #[test]
    fn trace_matches_hand_worked_matrices() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV_R4).unwrap();
        let [a, b, c, d] = ids(&log);

        let t1 = trace_coefficients(&log, a, 1).unwrap();
        assert_eq!(t1.spread_coeffs.len(), 1);
        assert!(close(t1.coeff(a, 1), 1.0, 1e-15));

        let t2 = trace_coefficients(&log, a, 2).unwrap();
        for (cell, want) in [((a, 1), 0.5), ((a, 2), 0.5), ((d, 1), 0.5)] {
            assert!(close(t2.coeff(cell.0, cell.1), want, 1e-15));
        }
        assert_eq!(t2.spread_coeffs.len(), 3);

        let t3 = trace_coefficients(&log, a, 3).unwrap();
        let want3 = [
            ((a, 1), 1.0 / 3.0),
            ((a, 2), 1.0 / 3.0),
            ((a, 3), 1.0 / 3.0),
            ((b, 1), 1.0 / 6.0),
            ((b, 2), 1.0 / 6.0),
            ((c, 1), 1.0 / 6.0),
            ((d, 1), 1.0 / 3.0),
        ];
        for ((k, l), want) in want3 {
            assert!(close(t3.coeff(k, l), want, 1e-15), "({k},{l})");
        }
        assert_eq!(t3.spread_coeffs.len(), 7);

        let t4 = trace_coefficients(&log, a, 4).unwrap();
        let want4 = [
            ((a, 1), 7.0 / 24.0),
            ((a, 2), 1.0 / 4.0),
            ((a, 3), 1.0 / 4.0),
            ((a, 4), 1.0 / 4.0),
            ((b, 1), 5.0 / 24.0),
            ((b, 2), 1.0 / 8.0),
            ((c, 1), 5.0 / 24.0),
            ((c, 2), 1.0 / 12.0),
            ((c, 3), 1.0 / 12.0),
            ((d, 1), 7.0 / 24.0),
            ((d, 2), 1.0 / 24.0),
        ];
        for ((k, l), want) in want4 {
            assert!(close(t4.coeff(k, l), want, 1e-12), "({k},{l})");
        }
        assert_eq!(t4.spread_coeffs.len(), 11);

        // initial-strength mix at round 4: (5/24, 7/24, 7/24, 5/24) on
        // (rho_A, rho_B, rho_C, rho_D)
        let want_init = [
            (a, 5.0 / 24.0),
            (b, 7.0 / 24.0),
            (c, 7.0 / 24.0),
            (d, 5.0 / 24.0),
        ];
        for (team, want) in want_init {
            assert!(close(t4.init_coeffs[team], want, 1e-12));
        }
        assert!(close(t4.init_coeffs.iter().sum::<f64>(), 1.0, 1e-12));
    }

    #[test]
    fn full_round_robin_columns_sum_to_reciprocal_round() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV_R4).unwrap();
        for team in 0..4 {
            let tr = trace_coefficients(&log, team, 4).unwrap();
            for (l, sum) in tr.column_sums() {
                assert!(close(sum, 1.0 / l as f64, 1e-12), "round {l}: {sum}");
            }
            let h: f64 = (1..=4).map(|l| 1.0 / l as f64).sum();
            assert!(close(tr.total_mass(), h, 1e-12));
        }
    }

    #[test]
    fn reconstruction_matches_table() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV_R4).unwrap();
        let rho = InitialStrengths { values: vec![0.3, -1.1, 2.0, 0.25] };
        let h = rate_temporal(&log, &rho, 4).unwrap();
        for team in 0..4 {
            for t in 0..=4 {
                let tr = trace_coefficients(&log, team, t).unwrap();
                let v = reconstruct_from_trace(&tr, &log, &rho);
                assert!(
                    close(v, h.rating(team, t), 1e-12),
                    "team {team} round {t}: {v} vs {}",
                    h.rating(team, t)
                );
            }
        }
    }

    #[test]
    fn harmonic_range_brackets_ratings() {
        let log = log3();
        let (h, lo, hi) = harmonic_range(&log, 3).unwrap();
        assert!(close(h, 11.0 / 6.0, 1e-12));
        assert!(close(lo, -3.0 * 11.0 / 6.0, 1e-12));
        assert!(close(hi, 3.0 * 11.0 / 6.0, 1e-12));
        let table = rate_temporal(&log, &InitialStrengths::zeros(4), 3).unwrap();
        for team in 0..4 {
            let r = table.rating(team, 3);
            assert!(lo <= r && r <= hi);
        }
    }

    #[test]
    fn prior_csv_loader_scales_and_reports_unknowns() {
        let log = log3();
        let text = "team,rating\nA,2.0\nd,-1.0\nZed,9.9\n";
        let (rho, unmatched) = InitialStrengths::from_prior_csv(text, &log, 0.5).unwrap();
        let a = log.team_index("A").unwrap();
        let d = log.team_index("D").unwrap();
        assert!(close(rho.values[a], 1.0, 1e-15));
        assert!(close(rho.values[d], -0.5, 1e-15));
        assert_eq!(unmatched, vec!["Zed".to_string()]);
    }
}
