//! Backtesting harness: turns every rating method into a round-indexed
//! table, ranks the tables, and scores them against each other (rank
//! correlation) and against the future (next-round winner prediction, with
//! an optional home-field offset and a grid calibrator for it). Also grows
//! synthetic round-robin seasons for experiments with known ground truth.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;

use crate::massey::{build_incidence, build_normal, build_normal_weighted, solve_by_component};
use crate::matchlog::{
    official_standings, LogBuilder, MatchLog, MatchOutcome, MatchRecord, Round, TeamIdx,
};
use crate::temporal::{rate_temporal, InitialStrengths};
use crate::variants::{
    rate_colley_static, rate_colley_temporal, rate_constant, rate_elo, ConstantCoeffConfig,
    EloConfig, WeightMode, WeightVector,
};
use crate::{Error, Result};

/// A fully parameterized rating method, as the harness sees it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum MethodSpec {
    /// Whole-log least squares, re-solved per round (components rated
    /// separately while the early-season graph is still disconnected).
    Massey,
    /// Round-by-round mean recurrence.
    MasseyTemporal,
    /// Constant-coefficient recurrence.
    MasseyConstant(ConstantCoeffConfig),
    /// Whole-log Colley, re-solved per round.
    Colley,
    /// Round-by-round Colley.
    ColleyTemporal,
    Elo(EloConfig),
    /// Row-weighted whole-log least squares, re-solved per round.
    MasseyWeighted(WeightMode),
    /// 3-1-0 points table; prediction rating is points + goal_diff / 1000.
    Official,
}

impl MethodSpec {
    pub fn id(&self) -> &'static str {
        match self {
            MethodSpec::Massey => "massey",
            MethodSpec::MasseyTemporal => "tmassey",
            MethodSpec::MasseyConstant(_) => "cmassey",
            MethodSpec::Colley => "colley",
            MethodSpec::ColleyTemporal => "tcolley",
            MethodSpec::Elo(_) => "elo",
            MethodSpec::MasseyWeighted(_) => "wmassey",
            MethodSpec::Official => "official",
        }
    }

    /// Whether the rating table itself depends on the home-field offset
    /// (only Elo feeds it into its updates).
    pub fn table_uses_hfa(&self) -> bool {
        matches!(self, MethodSpec::Elo(cfg) if cfg.hfa_in_update)
    }

    /// Calibration grid matched to the method's rating scale: goal spreads
    /// for the least-squares family (and the points scale), Elo points for
    /// Elo, Colley's (0,1) band for Colley.
    pub fn default_hfa_grid(&self) -> HfaGrid {
        match self {
            MethodSpec::Elo(_) => HfaGrid { min: 0.0, max: 200.0, step: 1.0 },
            MethodSpec::Colley | MethodSpec::ColleyTemporal => {
                HfaGrid { min: 0.0, max: 0.2, step: 0.001 }
            }
            _ => HfaGrid { min: 0.0, max: 2.0, step: 0.01 },
        }
    }
}

/// Rating column per round, `table[t][i]`, `t = 0..=upto`.
///
/// `rho` seeds the recurrence methods (round-0 column); the whole-log and
/// points methods ignore it. `hfa` only matters for Elo (update side).
pub fn rating_table(
    log: &MatchLog,
    spec: &MethodSpec,
    rho: &InitialStrengths,
    hfa: f64,
    upto: Round,
) -> Result<Vec<Vec<f64>>> {
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let n = log.team_count();
    let table = match spec {
        MethodSpec::MasseyTemporal => {
            let h = rate_temporal(log, rho, upto)?;
            (0..=upto).map(|t| h.column(t).to_vec()).collect()
        }
        MethodSpec::MasseyConstant(cfg) => {
            let h = rate_constant(log, *cfg, rho, upto)?;
            (0..=upto).map(|t| h.column(t).to_vec()).collect()
        }
        MethodSpec::ColleyTemporal => {
            let h = rate_colley_temporal(log, upto)?;
            (0..=upto).map(|t| h.column(t).to_vec()).collect()
        }
        MethodSpec::Elo(cfg) => {
            let h = rate_elo(log, *cfg, hfa, upto)?;
            (0..=upto).map(|t| h.column(t).to_vec()).collect()
        }
        MethodSpec::Massey => {
            let mut table = Vec::with_capacity(upto as usize + 1);
            for t in 0..=upto {
                let sys = build_normal(&build_incidence(log, t)?);
                table.push(solve_by_component(&sys)?.values);
            }
            table
        }
        MethodSpec::MasseyWeighted(mode) => {
            let mut table = Vec::with_capacity(upto as usize + 1);
            for t in 0..=upto {
                let inc = build_incidence(log, t)?;
                let w = WeightVector::for_mode(&inc, *mode);
                let sys = build_normal_weighted(&inc, Some(&w.values));
                table.push(solve_by_component(&sys)?.values);
            }
            table
        }
        MethodSpec::Colley => {
            let mut table = Vec::with_capacity(upto as usize + 1);
            for t in 0..=upto {
                table.push(rate_colley_static(log, t)?.values);
            }
            table
        }
        MethodSpec::Official => {
            let mut table = Vec::with_capacity(upto as usize + 1);
            table.push(vec![0.0; n]);
            for t in 1..=upto {
                let st = official_standings(log, t)?;
                let mut col = vec![0.0; n];
                for row in &st.rows {
                    col[row.team] = row.points as f64 + row.goal_diff as f64 / 1000.0;
                }
                table.push(col);
            }
            table
        }
    };
    Ok(table)
}

/// Ranks at one round: `ranks[i]` is team `i`'s 1-based position, standard
/// competition style (tied teams share the smallest position).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankingSnapshot {
    pub round: Round,
    pub ranks: Vec<u32>,
}

/// Snapshot from a rating column; ties only where values are exactly equal.
pub fn snapshot_from_ratings(round: Round, values: &[f64]) -> RankingSnapshot {
    let n = values.len();
    let mut order: Vec<TeamIdx> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap().then(a.cmp(&b)));
    let mut ranks = vec![0u32; n];
    for (pos, &team) in order.iter().enumerate() {
        ranks[team] = if pos > 0 && values[team] == values[order[pos - 1]] {
            ranks[order[pos - 1]]
        } else {
            pos as u32 + 1
        };
    }
    RankingSnapshot { round, ranks }
}

/// Snapshot of the official table; teams tie when points, goal difference,
/// and goals scored are all equal (the table's id tiebreak orders them for
/// display but does not separate them as ranks).
pub fn snapshot_official(log: &MatchLog, upto: Round) -> Result<RankingSnapshot> {
    let st = official_standings(log, upto)?;
    let mut ranks = vec![0u32; log.team_count()];
    let mut prev_key: Option<(u32, i64, u32)> = None;
    let mut prev_rank = 0u32;
    for (pos, row) in st.rows.iter().enumerate() {
        let key = (row.points, row.goal_diff, row.goals_for);
        let rank = match prev_key {
            Some(k) if k == key => prev_rank,
            _ => pos as u32 + 1,
        };
        ranks[row.team] = rank;
        prev_key = Some(key);
        prev_rank = rank;
    }
    Ok(RankingSnapshot { round: upto, ranks })
}

/// Kendall rank correlation with tie correction (the tau-b form):
/// `(P - Q) / sqrt((n0 - ties_a)(n0 - ties_b))` over all team pairs.
/// Returns 0 when either ranking is one big tie.
pub fn kendall_tau(a: &RankingSnapshot, b: &RankingSnapshot) -> f64 {
    assert_eq!(a.ranks.len(), b.ranks.len(), "rankings cover different team sets");
    let n = a.ranks.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    let mut ties_a = 0i64;
    let mut ties_b = 0i64;
    let mut total = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            total += 1;
            let da = a.ranks[i].cmp(&a.ranks[j]);
            let db = b.ranks[i].cmp(&b.ranks[j]);
            if da == std::cmp::Ordering::Equal {
                ties_a += 1;
            }
            if db == std::cmp::Ordering::Equal {
                ties_b += 1;
            }
            if da != std::cmp::Ordering::Equal && db != std::cmp::Ordering::Equal {
                if da == db {
                    concordant += 1;
                } else {
                    discordant += 1;
                }
            }
        }
    }
    let denom = ((total - ties_a) as f64 * (total - ties_b) as f64).sqrt();
    if denom == 0.0 {
        return 0.0;
    }
    (concordant - discordant) as f64 / denom
}

/// One tau value between two methods' rankings at one round.
#[derive(Debug, Clone, Serialize)]
pub struct KendallPoint {
    pub round: Round,
    pub method_a: String,
    pub method_b: String,
    pub tau: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct KendallSeries {
    pub points: Vec<KendallPoint>,
}

impl KendallSeries {
    pub fn at(&self, round: Round, a: &str, b: &str) -> Option<f64> {
        self.points
            .iter()
            .find(|p| {
                p.round == round
                    && ((p.method_a == a && p.method_b == b)
                        || (p.method_a == b && p.method_b == a))
            })
            .map(|p| p.tau)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("round,method_a,method_b,tau\n");
        for p in &self.points {
            out.push_str(&format!("{},{},{},{:.6}\n", p.round, p.method_a, p.method_b, p.tau));
        }
        out
    }
}

/// Pairwise rank correlation between methods for each round in
/// `from..=to`. The official ranking keeps its own tie structure; rating
/// methods tie only on exactly equal values.
pub fn correlation_series(
    log: &MatchLog,
    methods: &[MethodSpec],
    from: Round,
    to: Round,
) -> Result<KendallSeries> {
    if from < 1 || from > to {
        return Err(Error::InvalidConfig(format!("bad round range {from}..{to}")));
    }
    if to > log.rounds() {
        return Err(Error::RoundOutOfRange { round: to, max: log.rounds() });
    }
    let rho = InitialStrengths::zeros(log.team_count());
    let mut snapshots: Vec<Vec<RankingSnapshot>> = Vec::new();
    for spec in methods {
        let mut per_round = Vec::new();
        if matches!(spec, MethodSpec::Official) {
            for t in from..=to {
                per_round.push(snapshot_official(log, t)?);
            }
        } else {
            let table = rating_table(log, spec, &rho, 0.0, to)?;
            for t in from..=to {
                per_round.push(snapshot_from_ratings(t, &table[t as usize]));
            }
        }
        snapshots.push(per_round);
    }
    let mut points = Vec::new();
    for (ti, t) in (from..=to).enumerate() {
        for i in 0..methods.len() {
            for j in (i + 1)..methods.len() {
                points.push(KendallPoint {
                    round: t,
                    method_a: methods[i].id().to_string(),
                    method_b: methods[j].id().to_string(),
                    tau: kendall_tau(&snapshots[i][ti], &snapshots[j][ti]),
                });
            }
        }
    }
    Ok(KendallSeries { points })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Correct,
    Incorrect,
    /// Drawn matches never count, in the numerator or the denominator.
    ExcludedDraw,
}

/// One match's prediction, made from ratings at the end of the previous
/// round (plus the home-field offset on the home side; exact ties go home).
#[derive(Debug, Clone, Serialize)]
pub struct PredictionOutcome {
    pub round: Round,
    pub home: TeamIdx,
    pub away: TeamIdx,
    pub predicted: TeamIdx,
    pub outcome: MatchOutcome,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundAccuracy {
    pub round: Round,
    pub correct: u32,
    pub decisive: u32,
}

impl RoundAccuracy {
    pub fn accuracy(&self) -> Option<f64> {
        (self.decisive > 0).then(|| self.correct as f64 / self.decisive as f64)
    }
}

/// Foresight scorecard over one season for one method.
#[derive(Debug, Clone, Serialize)]
pub struct AccuracyReport {
    pub method: String,
    pub hfa: f64,
    /// Rounds `1..=warmup` are not predicted.
    pub warmup: Round,
    pub outcomes: Vec<PredictionOutcome>,
    pub per_round: Vec<RoundAccuracy>,
    pub correct: u32,
    pub decisive: u32,
    /// `correct / decisive`; `None` for a season with no decisive matches
    /// in the predicted range.
    pub aggregate: Option<f64>,
}

impl AccuracyReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("round,correct,decisive,accuracy\n");
        for r in &self.per_round {
            match r.accuracy() {
                Some(a) => out.push_str(&format!("{},{},{},{:.6}\n", r.round, r.correct, r.decisive, a)),
                None => out.push_str(&format!("{},{},{},\n", r.round, r.correct, r.decisive)),
            }
        }
        out
    }
}

/// Predictions against a prebuilt rating table: round `t` is predicted by
/// column `t-1` for every `t` in `warmup+1 ..= upto`.
pub fn predictions_from_table(
    log: &MatchLog,
    table: &[Vec<f64>],
    hfa: f64,
    warmup: Round,
) -> Vec<PredictionOutcome> {
    let upto = (table.len() - 1) as Round;
    let mut out = Vec::new();
    for t in (warmup + 1)..=upto {
        let col = &table[(t - 1) as usize];
        for m in log.matches_in_round(t) {
            let predicted = if col[m.home] + hfa >= col[m.away] { m.home } else { m.away };
            let outcome = m.outcome();
            let verdict = match outcome {
                MatchOutcome::Draw => Verdict::ExcludedDraw,
                MatchOutcome::HomeWin if predicted == m.home => Verdict::Correct,
                MatchOutcome::AwayWin if predicted == m.away => Verdict::Correct,
                _ => Verdict::Incorrect,
            };
            out.push(PredictionOutcome {
                round: t,
                home: m.home,
                away: m.away,
                predicted,
                outcome,
                verdict,
            });
        }
    }
    out
}

fn report_from_outcomes(
    method: &MethodSpec,
    hfa: f64,
    warmup: Round,
    upto: Round,
    outcomes: Vec<PredictionOutcome>,
) -> AccuracyReport {
    let mut per_round: Vec<RoundAccuracy> = ((warmup + 1)..=upto)
        .map(|round| RoundAccuracy { round, correct: 0, decisive: 0 })
        .collect();
    let mut correct = 0;
    let mut decisive = 0;
    for o in &outcomes {
        if o.verdict == Verdict::ExcludedDraw {
            continue;
        }
        let slot = &mut per_round[(o.round - warmup - 1) as usize];
        slot.decisive += 1;
        decisive += 1;
        if o.verdict == Verdict::Correct {
            slot.correct += 1;
            correct += 1;
        }
    }
    AccuracyReport {
        method: method.id().to_string(),
        hfa,
        warmup,
        outcomes,
        per_round,
        correct,
        decisive,
        aggregate: (decisive > 0).then(|| correct as f64 / decisive as f64),
    }
}

/// Predicts every round after the warmup from the previous round's ratings
/// and scores the hits. Draws are left out entirely.
pub fn foresight_accuracy(
    log: &MatchLog,
    spec: &MethodSpec,
    hfa: f64,
    warmup: Round,
) -> Result<AccuracyReport> {
    let upto = log.rounds();
    let rho = InitialStrengths::zeros(log.team_count());
    let table = rating_table(log, spec, &rho, hfa, upto)?;
    let outcomes = predictions_from_table(log, &table, hfa, warmup);
    Ok(report_from_outcomes(spec, hfa, warmup, upto, outcomes))
}

/// Inclusive arithmetic grid for home-field calibration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HfaGrid {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl HfaGrid {
    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut k = 0u32;
        loop {
            let v = self.min + self.step * k as f64;
            if v > self.max + 1e-12 {
                break;
            }
            out.push(v);
            k += 1;
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Calibration {
    pub method: String,
    pub hfa: f64,
    pub accuracy: Option<f64>,
    /// Accuracy the grid's first point (usually 0) achieves, for reference.
    pub baseline: Option<f64>,
}

/// Exhaustive grid search for the home-field offset that maximizes
/// aggregate foresight accuracy; the smallest maximizing offset wins ties.
/// When the grid starts at 0 the result can never score below no-offset.
pub fn calibrate_hfa(
    log: &MatchLog,
    spec: &MethodSpec,
    grid: &HfaGrid,
    warmup: Round,
) -> Result<Calibration> {
    if !(grid.step > 0.0) || grid.max < grid.min {
        return Err(Error::InvalidConfig(format!(
            "bad grid {}..{} step {}",
            grid.min, grid.max, grid.step
        )));
    }
    let upto = log.rounds();
    let rho = InitialStrengths::zeros(log.team_count());
    // The table depends on hfa only for Elo-with-update-offset; everyone
    // else gets it built once.
    let fixed_table = if spec.table_uses_hfa() {
        None
    } else {
        Some(rating_table(log, spec, &rho, 0.0, upto)?)
    };
    let mut best: Option<(f64, f64)> = None; // (accuracy, hfa)
    let mut baseline = None;
    for (i, h) in grid.values().into_iter().enumerate() {
        let outcomes = match &fixed_table {
            Some(t) => predictions_from_table(log, t, h, warmup),
            None => {
                let t = rating_table(log, spec, &rho, h, upto)?;
                predictions_from_table(log, &t, h, warmup)
            }
        };
        let rep = report_from_outcomes(spec, h, warmup, upto, outcomes);
        let acc = rep.aggregate.unwrap_or(0.0);
        if i == 0 {
            baseline = rep.aggregate;
        }
        if best.map_or(true, |(ba, _)| acc > ba) {
            best = Some((acc, h));
        }
    }
    let (accuracy, hfa) = best.ok_or_else(|| Error::InvalidConfig("empty grid".into()))?;
    Ok(Calibration {
        method: spec.id().to_string(),
        hfa,
        accuracy: (log.matches().iter().any(|m| m.outcome() != MatchOutcome::Draw))
            .then_some(accuracy),
        baseline,
    })
}

/// Per-round accuracies bucketed into ten bins `[0,0.1) .. [0.9,1.0]`;
/// an exact 1.0 lands in the top bin. Rounds with no decisive matches are
/// counted separately, not binned.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub bins: Vec<u32>,
    pub skipped_rounds: u32,
}

pub fn accuracy_histogram(report: &AccuracyReport) -> Histogram {
    let mut bins = vec![0u32; 10];
    let mut skipped = 0;
    for r in &report.per_round {
        match r.accuracy() {
            None => skipped += 1,
            Some(a) => {
                let idx = ((a * 10.0).floor() as usize).min(9);
                bins[idx] += 1;
            }
        }
    }
    Histogram { bins, skipped_rounds: skipped }
}

#[derive(Debug, Clone, Serialize)]
pub struct TrajectoryPoint {
    pub round: Round,
    pub rating: f64,
    pub rank: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct TeamTrajectory {
    pub team: TeamIdx,
    pub name: String,
    pub points: Vec<TrajectoryPoint>,
}

/// Rating and rank of the chosen teams across rounds `from..=to`.
pub fn trajectory(
    log: &MatchLog,
    spec: &MethodSpec,
    teams: &[TeamIdx],
    from: Round,
    to: Round,
) -> Result<Vec<TeamTrajectory>> {
    if from < 1 || from > to {
        return Err(Error::InvalidConfig(format!("bad round range {from}..{to}")));
    }
    if to > log.rounds() {
        return Err(Error::RoundOutOfRange { round: to, max: log.rounds() });
    }
    for &t in teams {
        if t >= log.team_count() {
            return Err(Error::UnknownTeam(format!("#{t}")));
        }
    }
    let rho = InitialStrengths::zeros(log.team_count());
    let table = rating_table(log, spec, &rho, 0.0, to)?;
    let mut snapshots = Vec::new();
    for t in from..=to {
        if matches!(spec, MethodSpec::Official) {
            snapshots.push(snapshot_official(log, t)?);
        } else {
            snapshots.push(snapshot_from_ratings(t, &table[t as usize]));
        }
    }
    Ok(teams
        .iter()
        .map(|&team| TeamTrajectory {
            team,
            name: log.team_name(team).to_string(),
            points: (from..=to)
                .map(|t| TrajectoryPoint {
                    round: t,
                    rating: table[t as usize][team],
                    rank: snapshots[(t - from) as usize].ranks[team],
                })
                .collect(),
        })
        .collect())
}

pub fn trajectory_csv(trajectories: &[TeamTrajectory]) -> String {
    let mut out = String::from("team,round,rating,rank\n");
    for tr in trajectories {
        for p in &tr.points {
            out.push_str(&format!("{},{},{:.6},{}\n", tr.name, p.round, p.rating, p.rank));
        }
    }
    out
}

/// Deterministic synthetic season: a circle-method round robin over
/// `strengths.len()` teams (even), played twice with venues swapped when
/// `double`. Spreads are `strength difference + noise * N(0,1)`, rounded;
/// zero spreads become 0-0 draws.
pub fn synthetic_roundrobin(
    strengths: &[f64],
    double: bool,
    noise: f64,
    seed: u64,
) -> Result<MatchLog> {
    let n = strengths.len();
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidConfig(format!(
            "team count must be even and at least 2, got {n}"
        )));
    }
    if noise < 0.0 {
        return Err(Error::InvalidConfig(format!("noise must be nonnegative, got {noise}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let width = (n as f64).log10().floor() as usize + 1;
    let mut builder = LogBuilder::new();
    let ids: Vec<TeamIdx> = (0..n)
        .map(|i| builder.team(&format!("T{:0width$}", i + 1)).expect("fresh name"))
        .collect();
    let single = (n - 1) as Round;
    let rounds = if double { 2 * single } else { single };
    for round in 1..=rounds {
        let base = ((round - 1) % single) as usize;
        let mirrored = round > single;
        // circle method: team 0 fixed, the rest rotate one step per round
        let pos = |i: usize| -> usize {
            if i == 0 {
                0
            } else {
                1 + (i - 1 + base) % (n - 1)
            }
        };
        for k in 0..n / 2 {
            let a = pos(k);
            let b = pos(n - 1 - k);
            // alternate venues within the first cycle so nobody hosts a
            // long streak; the second cycle mirrors the first exactly
            let (mut home, mut away) = if (base + k) % 2 == 0 { (a, b) } else { (b, a) };
            if mirrored {
                std::mem::swap(&mut home, &mut away);
            }
            let z: f64 = normal.sample(&mut rng);
            let diff = strengths[home] - strengths[away] + noise * z;
            let spread = diff.round().clamp(-99.0, 99.0) as i64;
            builder.push(MatchRecord {
                round,
                date: None,
                home: ids[home],
                away: ids[away],
                home_goals: spread.max(0) as u32,
                away_goals: (-spread).max(0) as u32,
            })?;
        }
    }
    builder.finish()
}

/// One row of a method-comparison table: accuracy without the home-field
/// offset and with a calibrated one.
#[derive(Debug, Clone, Serialize)]
pub struct MethodComparison {
    pub method: String,
    pub accuracy_plain: Option<f64>,
    pub hfa: f64,
    pub accuracy_calibrated: Option<f64>,
}

/// Compares methods on one season: plain accuracy and calibrated accuracy
/// over each method's default grid.
pub fn compare_methods(
    log: &MatchLog,
    specs: &[MethodSpec],
    warmup: Round,
) -> Result<Vec<MethodComparison>> {
    let mut out = Vec::new();
    for spec in specs {
        let plain = foresight_accuracy(log, spec, 0.0, warmup)?;
        let cal = calibrate_hfa(log, spec, &spec.default_hfa_grid(), warmup)?;
        out.push(MethodComparison {
            method: spec.id().to_string(),
            accuracy_plain: plain.aggregate,
            hfa: cal.hfa,
            accuracy_calibrated: cal.accuracy,
        });
    }
    Ok(out)
}

pub fn comparison_csv(rows: &[MethodComparison]) -> String {
    let mut out = String::from("method,accuracy,hfa,accuracy_with_hfa\n");
    for r in rows {
        let fmt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x:.6}"));
        out.push_str(&format!(
            "{},{},{:.6},{}\n",
            r.method,
            fmt(r.accuracy_plain),
            r.hfa,
            fmt(r.accuracy_calibrated)
        ));
    }
    out
}

/// Round-by-round column sums of a table, handy when eyeballing the
/// conservation properties in tests and notebooks.
pub fn column_totals(table: &[Vec<f64>]) -> Vec<f64> {
    table.iter().map(|col| col.iter().sum()).collect()
}
