//! Input model: a season is a list of matches grouped into rounds.
//!
//! Teams are interned to dense indices `0..n`. Rounds are 1-based; round 0
//! is reserved for the pre-season state (initial ratings). A team plays at
//! most once per round, which is what lets the round-by-round engines treat
//! a round as one synchronous update step.
//!
//! The canonical CSV format is
//! `round,date,home,away,home_goals,away_goals` with an optional date.
//! Feeds that carry dates but no round labels go through [`infer_rounds`].

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// Dense team index, `0..n` in first-appearance order.
pub type TeamIdx = usize;

/// 1-based round number; 0 denotes the pre-season state.
pub type Round = u32;

pub const CSV_HEADER: &str = "round,date,home,away,home_goals,away_goals";

/// One played match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchRecord {
    pub round: Round,
    pub date: Option<String>,
    pub home: TeamIdx,
    pub away: TeamIdx,
    pub home_goals: u32,
    pub away_goals: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatchOutcome {
    HomeWin,
    AwayWin,
    Draw,
}

impl MatchRecord {
    /// Goal spread from the home side's point of view.
    pub fn spread(&self) -> i64 {
        self.home_goals as i64 - self.away_goals as i64
    }

    pub fn outcome(&self) -> MatchOutcome {
        match self.home_goals.cmp(&self.away_goals) {
            std::cmp::Ordering::Greater => MatchOutcome::HomeWin,
            std::cmp::Ordering::Less => MatchOutcome::AwayWin,
            std::cmp::Ordering::Equal => MatchOutcome::Draw,
        }
    }

    /// Spread seen by `team`, 0 if the team is not involved.
    pub fn spread_for(&self, team: TeamIdx) -> i64 {
        if team == self.home {
            self.spread()
        } else if team == self.away {
            -self.spread()
        } else {
            0
        }
    }
}

/// Validated season log. Matches are stored sorted by round (stable over
/// input order within a round).
#[derive(Debug, Clone)]
pub struct MatchLog {
    names: Vec<String>,
    index: HashMap<String, TeamIdx>,
    matches: Vec<MatchRecord>,
    rounds: Round,
}

/// Normalization used for team identity: surrounding whitespace and case
/// are not significant.
pub fn normalize_name(name: &str) -> String {
    name.trim().to_lowercase()
}

impl MatchLog {
    pub fn team_count(&self) -> usize {
        self.names.len()
    }

    pub fn team_names(&self) -> &[String] {
        &self.names
    }

    pub fn team_name(&self, team: TeamIdx) -> &str {
        &self.names[team]
    }

    pub fn team_index(&self, name: &str) -> Option<TeamIdx> {
        self.index.get(&normalize_name(name)).copied()
    }

    pub fn matches(&self) -> &[MatchRecord] {
        &self.matches
    }

    /// Highest round present; 0 for an empty log.
    pub fn rounds(&self) -> Round {
        self.rounds
    }

    pub fn matches_upto(&self, upto: Round) -> impl Iterator<Item = &MatchRecord> {
        self.matches.iter().filter(move |m| m.round <= upto)
    }

    pub fn matches_in_round(&self, round: Round) -> impl Iterator<Item = &MatchRecord> {
        self.matches.iter().filter(move |m| m.round == round)
    }

    /// Signed goal spread collected by `team` in `round`; 0 when it did not
    /// play. Antisymmetric between the two sides of a match.
    pub fn point_spread(&self, team: TeamIdx, round: Round) -> i64 {
        self.matches_in_round(round).map(|m| m.spread_for(team)).sum()
    }

    /// Sum of `point_spread` over rounds `1..=upto`.
    pub fn cumulative_spread(&self, team: TeamIdx, upto: Round) -> i64 {
        self.matches_upto(upto).map(|m| m.spread_for(team)).sum()
    }

    /// Checks stored-data invariants and returns every violation found.
    /// A log built through [`LogBuilder`] or the parsers is always clean;
    /// this is for logs assembled by hand or mutated downstream.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen: HashMap<(TeamIdx, Round), ()> = HashMap::new();
        let mut prev_round = 0;
        for (idx, m) in self.matches.iter().enumerate() {
            if m.round == 0 {
                out.push(Violation::PreSeasonRound { index: idx });
            }
            if m.round < prev_round {
                out.push(Violation::UnsortedRounds { index: idx });
            }
            prev_round = m.round;
            if m.home == m.away {
                out.push(Violation::SelfMatch { index: idx });
            }
            for side in [m.home, m.away] {
                if side >= self.names.len() {
                    out.push(Violation::UnknownTeamIndex { index: idx, team: side });
                } else if m.home != m.away && seen.insert((side, m.round), ()).is_some() {
                    out.push(Violation::DuplicateTeamRound {
                        team: self.names[side].clone(),
                        round: m.round,
                    });
                }
            }
        }
        let mut keys: HashMap<String, &str> = HashMap::new();
        for name in &self.names {
            if let Some(first) = keys.insert(normalize_name(name), name) {
                out.push(Violation::DuplicateTeamName {
                    a: first.to_string(),
                    b: name.clone(),
                });
            }
        }
        out
    }

    /// Canonical CSV rendering of the log.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for m in &self.matches {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                m.round,
                m.date.as_deref().unwrap_or(""),
                self.names[m.home],
                self.names[m.away],
                m.home_goals,
                m.away_goals
            ));
        }
        out
    }

    /// Parses the canonical CSV format. Errors carry 1-based line numbers
    /// (the header is line 1).
    pub fn parse_csv(text: &str) -> Result<MatchLog> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = rdr
            .headers()
            .map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?
            .clone();
        let got: Vec<String> = headers.iter().map(|h| h.trim().to_lowercase()).collect();
        let expected: Vec<&str> = CSV_HEADER.split(',').collect();
        if got != expected {
            return Err(Error::UnknownHeader {
                expected: CSV_HEADER.to_string(),
                got: headers.iter().collect::<Vec<_>>().join(","),
            });
        }
        let mut builder = LogBuilder::new();
        for record in rdr.records() {
            let record = record.map_err(|e| Error::Parse {
                line: e
                    .position()
                    .map(|p| p.line() as usize)
                    .unwrap_or(0),
                msg: e.to_string(),
            })?;
            let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
            let field = |i: usize| record.get(i).unwrap_or("");
            let round: Round = field(0)
                .parse()
                .map_err(|_| bad_line(line, format!("round `{}` is not a natural number", field(0))))?;
            if round == 0 {
                return Err(bad_line(line, "round must be >= 1 (0 is the pre-season state)".into()));
            }
            let date = match field(1) {
                "" => None,
                d => Some(d.to_string()),
            };
            let parse_goals = |i: usize| -> Result<u32> {
                field(i)
                    .parse()
                    .map_err(|_| bad_line(line, format!("score `{}` is not a nonnegative integer", field(i))))
            };
            let home_goals = parse_goals(4)?;
            let away_goals = parse_goals(5)?;
            let home = builder.team(field(2)).map_err(|e| relabel(e, line))?;
            let away = builder.team(field(3)).map_err(|e| relabel(e, line))?;
            builder
                .push(MatchRecord { round, date, home, away, home_goals, away_goals })
                .map_err(|e| relabel(e, line))?;
        }
        builder.finish()
    }
}

fn bad_line(line: usize, msg: String) -> Error {
    Error::Parse { line, msg }
}

fn relabel(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

/// Incremental construction with the same invariants as the parsers.
#[derive(Debug, Default)]
pub struct LogBuilder {
    names: Vec<String>,
    index: HashMap<String, TeamIdx>,
    matches: Vec<MatchRecord>,
}

impl LogBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns a team name and returns its dense index.
    pub fn team(&mut self, name: &str) -> Result<TeamIdx> {
        let key = normalize_name(name);
        if key.is_empty() {
            return Err(Error::Parse { line: 0, msg: "empty team name".into() });
        }
        if let Some(&idx) = self.index.get(&key) {
            return Ok(idx);
        }
        let idx = self.names.len();
        self.names.push(name.trim().to_string());
        self.index.insert(key, idx);
        Ok(idx)
    }

    pub fn push(&mut self, m: MatchRecord) -> Result<()> {
        if m.round == 0 {
            return Err(Error::Parse { line: 0, msg: "round must be >= 1".into() });
        }
        if m.home == m.away {
            return Err(Error::Parse {
                line: 0,
                msg: format!("team `{}` cannot play itself", self.names[m.home]),
            });
        }
        if m.home >= self.names.len() || m.away >= self.names.len() {
            return Err(Error::Parse { line: 0, msg: "team index out of range".into() });
        }
        self.matches.push(m);
        Ok(())
    }

    /// Sorts by round (stable) and checks the one-match-per-team-per-round
    /// invariant.
    pub fn finish(self) -> Result<MatchLog> {
        let LogBuilder { names, index, mut matches } = self;
        matches.sort_by_key(|m| m.round);
        let mut seen: HashMap<(TeamIdx, Round), ()> = HashMap::new();
        for m in &matches {
            for side in [m.home, m.away] {
                if seen.insert((side, m.round), ()).is_some() {
                    return Err(Error::DuplicateTeamRound {
                        team: names[side].clone(),
                        round: m.round,
                    });
                }
            }
        }
        let rounds = matches.iter().map(|m| m.round).max().unwrap_or(0);
        Ok(MatchLog { names, index, matches, rounds })
    }
}

/// A fixture from a feed that has no round labels yet.
#[derive(Debug, Clone)]
pub struct RawMatch {
    pub date: Option<String>,
    pub home: String,
    pub away: String,
    pub home_goals: u32,
    pub away_goals: u32,
}

/// Assigns rounds to a date-ordered fixture list: each match gets the
/// smallest round in which neither team has already been scheduled, never
/// earlier than a previous match of either team. Teams untouched so far can
/// land in round 1 regardless of how late their first fixture is.
pub fn infer_rounds(fixtures: &[RawMatch]) -> Result<MatchLog> {
    let mut builder = LogBuilder::new();
    let mut last_round: HashMap<TeamIdx, Round> = HashMap::new();
    for f in fixtures {
        let home = builder.team(&f.home)?;
        let away = builder.team(&f.away)?;
        let next = |t: TeamIdx, lr: &HashMap<TeamIdx, Round>| lr.get(&t).map_or(1, |r| r + 1);
        let round = next(home, &last_round).max(next(away, &last_round));
        last_round.insert(home, round);
        last_round.insert(away, round);
        builder.push(MatchRecord {
            round,
            date: f.date.clone(),
            home,
            away,
            home_goals: f.home_goals,
            away_goals: f.away_goals,
        })?;
    }
    builder.finish()
}

/// Adapter for the common public fixture format (`Date,HomeTeam,AwayTeam,
/// FTHG,FTAG`, extra columns ignored, case-insensitive header aliases).
/// Keeps input order, which such feeds already have chronological; feed the
/// result to [`infer_rounds`].
pub fn parse_fixture_csv(text: &str) -> Result<Vec<RawMatch>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let headers = rdr
        .headers()
        .map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?
        .clone();
    let find = |aliases: &[&str]| -> Option<usize> {
        headers
            .iter()
            .position(|h| aliases.iter().any(|a| h.trim().eq_ignore_ascii_case(a)))
    };
    let date_col = find(&["date"]);
    let home_col = find(&["hometeam", "home"]);
    let away_col = find(&["awayteam", "away"]);
    let hg_col = find(&["fthg", "home_goals", "hg"]);
    let ag_col = find(&["ftag", "away_goals", "ag"]);
    let (home_col, away_col, hg_col, ag_col) = match (home_col, away_col, hg_col, ag_col) {
        (Some(h), Some(a), Some(hg), Some(ag)) => (h, a, hg, ag),
        _ => {
            return Err(Error::UnknownHeader {
                expected: "HomeTeam,AwayTeam,FTHG,FTAG (plus optional Date)".to_string(),
                got: headers.iter().collect::<Vec<_>>().join(","),
            })
        }
    };
    let mut out = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map(|p| p.line() as usize).unwrap_or(0),
            msg: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let get = |i: usize| record.get(i).unwrap_or("").to_string();
        // Public season files sometimes end with blank lines.
        if record.iter().all(|f| f.is_empty()) {
            continue;
        }
        let goals = |i: usize| -> Result<u32> {
            record
                .get(i)
                .unwrap_or("")
                .parse()
                .map_err(|_| bad_line(line, format!("score `{}` is not a nonnegative integer", get(i))))
        };
        out.push(RawMatch {
            date: date_col.map(|i| get(i)).filter(|d| !d.is_empty()),
            home: get(home_col),
            away: get(away_col),
            home_goals: goals(hg_col)?,
            away_goals: goals(ag_col)?,
        });
    }
    Ok(out)
}

/// One row of a points table.
#[derive(Debug, Clone, Serialize)]
pub struct StandingRow {
    pub team: TeamIdx,
    pub name: String,
    pub rank: u32,
    pub points: u32,
    pub wins: u32,
    pub draws: u32,
    pub losses: u32,
    pub goals_for: u32,
    pub goals_against: u32,
    pub goal_diff: i64,
}

/// Points table after a given round, 3-1-0 scoring. Rows are sorted by rank;
/// ties broken by points, then goal difference, then goals scored, then
/// team index, so ranks are a strict permutation of `1..=n`.
#[derive(Debug, Clone, Serialize)]
pub struct Standings {
    pub upto: Round,
    pub rows: Vec<StandingRow>,
}

impl Standings {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("rank,team,points,wins,draws,losses,goals_for,goals_against,goal_diff\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.rank, r.name, r.points, r.wins, r.draws, r.losses, r.goals_for, r.goals_against, r.goal_diff
            ));
        }
        out
    }
}

/// 3-1-0 points table over rounds `1..=upto`.
pub fn official_standings(log: &MatchLog, upto: Round) -> Result<Standings> {
    if upto > log.rounds() {
        return Err(Error::RoundOutOfRange { round: upto, max: log.rounds() });
    }
    let n = log.team_count();
    let mut rows: Vec<StandingRow> = (0..n)
        .map(|i| StandingRow {
            team: i,
            name: log.team_name(i).to_string(),
            rank: 0,
            points: 0,
            wins: 0,
            draws: 0,
            losses: 0,
            goals_for: 0,
            goals_against: 0,
            goal_diff: 0,
        })
        .collect();
    for m in log.matches_upto(upto) {
        let (h, a) = (m.home, m.away);
        rows[h].goals_for += m.home_goals;
        rows[h].goals_against += m.away_goals;
        rows[a].goals_for += m.away_goals;
        rows[a].goals_against += m.home_goals;
        match m.outcome() {
            MatchOutcome::HomeWin => {
                rows[h].wins += 1;
                rows[h].points += 3;
                rows[a].losses += 1;
            }
            MatchOutcome::AwayWin => {
                rows[a].wins += 1;
                rows[a].points += 3;
                rows[h].losses += 1;
            }
            MatchOutcome::Draw => {
                rows[h].draws += 1;
                rows[a].draws += 1;
                rows[h].points += 1;
                rows[a].points += 1;
            }
        }
    }
    for r in &mut rows {
        r.goal_diff = r.goals_for as i64 - r.goals_against as i64;
    }
    rows.sort_by(|x, y| {
        y.points
            .cmp(&x.points)
            .then(y.goal_diff.cmp(&x.goal_diff))
            .then(y.goals_for.cmp(&x.goals_for))
            .then(x.team.cmp(&y.team))
    });
    for (pos, r) in rows.iter_mut().enumerate() {
        r.rank = pos as u32 + 1;
    }
    Ok(Standings { upto, rows })
}

/// A stored-data invariant breach found by [`MatchLog::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    PreSeasonRound { index: usize },
    UnsortedRounds { index: usize },
    SelfMatch { index: usize },
    UnknownTeamIndex { index: usize, team: TeamIdx },
    DuplicateTeamRound { team: String, round: Round },
    DuplicateTeamName { a: String, b: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PreSeasonRound { index } => {
                write!(f, "match #{index} is assigned to round 0")
            }
            Violation::UnsortedRounds { index } => {
                write!(f, "match #{index} breaks the nondecreasing round order")
            }
            Violation::SelfMatch { index } => write!(f, "match #{index} pairs a team with itself"),
            Violation::UnknownTeamIndex { index, team } => {
                write!(f, "match #{index} references unknown team index {team}")
            }
            Violation::DuplicateTeamRound { team, round } => {
                write!(f, "team `{team}` plays twice in round {round}")
            }
            Violation::DuplicateTeamName { a, b } => {
                write!(f, "team names `{a}` and `{b}` collide after normalization")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const FOUR_TEAM_CSV: &str = "\
round,date,home,away,home_goals,away_goals
1,,A,C,2,1
1,,B,D,2,1
2,,A,D,3,0
2,,B,C,1,1
3,,A,B,1,0
3,,C,D,1,0
";

    #[test]
    fn parses_canonical_csv() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap();
        assert_eq!(log.team_count(), 4);
        assert_eq!(log.matches().len(), 6);
        assert_eq!(log.rounds(), 3);
        assert_eq!(log.team_index("a"), Some(0));
        assert_eq!(log.team_index(" C "), Some(1));
        assert!(log.validate().is_empty());
    }

    #[test]
    fn cumulative_spreads_match_hand_table() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap();
        let a = log.team_index("A").unwrap();
        let b = log.team_index("B").unwrap();
        let c = log.team_index("C").unwrap();
        let d = log.team_index("D").unwrap();
        let table: Vec<Vec<i64>> = [a, b, c, d]
            .iter()
            .map(|&t| (1..=3).map(|r| log.cumulative_spread(t, r)).collect())
            .collect();
        assert_eq!(table[0], vec![1, 4, 5]);
        assert_eq!(table[1], vec![1, 1, 0]);
        assert_eq!(table[2], vec![-1, -1, 0]);
        assert_eq!(table[3], vec![-1, -4, -5]);
    }

    #[test]
    fn spread_is_antisymmetric() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap();
        for m in log.matches() {
            assert_eq!(m.spread_for(m.home) + m.spread_for(m.away), 0);
        }
        // non-participant
        let b = log.team_index("B").unwrap();
        assert_eq!(log.matches()[0].spread_for(b), 0);
    }

    #[test]
    fn rejects_wrong_header() {
        let err = MatchLog::parse_csv("a,b,c\n").unwrap_err();
        assert!(matches!(err, Error::UnknownHeader { .. }));
    }

    #[test]
    fn rejects_bad_score_with_line_number() {
        let text = "round,date,home,away,home_goals,away_goals\n1,,A,B,2,x\n";
        match MatchLog::parse_csv(text).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_round_zero_and_self_match() {
        let z = "round,date,home,away,home_goals,away_goals\n0,,A,B,1,0\n";
        assert!(matches!(MatchLog::parse_csv(z), Err(Error::Parse { line: 2, .. })));
        let s = "round,date,home,away,home_goals,away_goals\n1,,A,a,1,0\n";
        assert!(matches!(MatchLog::parse_csv(s), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn rejects_duplicate_team_round() {
        let text = "round,date,home,away,home_goals,away_goals\n1,,A,B,1,0\n1,,A,C,1,0\n";
        match MatchLog::parse_csv(text).unwrap_err() {
            Error::DuplicateTeamRound { team, round } => {
                assert_eq!(team, "A");
                assert_eq!(round, 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    fn raw(home: &str, away: &str) -> RawMatch {
        RawMatch {
            date: None,
            home: home.into(),
            away: away.into(),
            home_goals: 1,
            away_goals: 0,
        }
    }

    #[test]
    fn infer_rounds_packs_greedily() {
        let log = infer_rounds(&[raw("A", "C"), raw("B", "D"), raw("A", "D")]).unwrap();
        let rounds: Vec<Round> = log.matches().iter().map(|m| m.round).collect();
        assert_eq!(rounds, vec![1, 1, 2]);

        let log = infer_rounds(&[raw("A", "B"), raw("A", "C"), raw("A", "D")]).unwrap();
        let rounds: Vec<Round> = log.matches().iter().map(|m| m.round).collect();
        assert_eq!(rounds, vec![1, 2, 3]);

        let log = infer_rounds(&[raw("A", "B"), raw("C", "D"), raw("B", "A")]).unwrap();
        let rounds: Vec<Round> = log.matches().iter().map(|m| m.round).collect();
        assert_eq!(rounds, vec![1, 1, 2]);
    }

    #[test]
    fn fixture_adapter_reads_public_format() {
        let text = "\
Div,Date,HomeTeam,AwayTeam,FTHG,FTAG,FTR
I1,22/08/15,Verona,Roma,1,1,D
I1,22/08/15,Lazio,Bologna,2,1,H
I1,23/08/15,Roma,Verona,2,0,H
";
        let raws = parse_fixture_csv(text).unwrap();
        assert_eq!(raws.len(), 3);
        assert_eq!(raws[0].home, "Verona");
        assert_eq!(raws[0].home_goals, 1);
        let log = infer_rounds(&raws).unwrap();
        let rounds: Vec<Round> = log.matches().iter().map(|m| m.round).collect();
        assert_eq!(rounds, vec![1, 1, 2]);
        assert!(log.validate().is_empty());
    }

    #[test]
    fn standings_after_each_round() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap();
        let s1 = official_standings(&log, 1).unwrap();
        assert_eq!(
            s1.rows.iter().map(|r| (r.name.as_str(), r.points)).collect::<Vec<_>>(),
            vec![("A", 3), ("B", 3), ("C", 0), ("D", 0)]
        );
        // B and C tie on points, goal difference, and goals scored; the
        // dense-id tiebreak puts C first (it was interned from match 1).
        let s3 = official_standings(&log, 3).unwrap();
        assert_eq!(
            s3.rows.iter().map(|r| (r.name.as_str(), r.points, r.rank)).collect::<Vec<_>>(),
            vec![("A", 9, 1), ("C", 4, 2), ("B", 4, 3), ("D", 0, 4)]
        );
        // 5 decisive + 1 draw
        let total: u32 = s3.rows.iter().map(|r| r.points).sum();
        assert_eq!(total, 3 * 5 + 2);
    }

    #[test]
    fn standings_rejects_future_round() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap();
        assert!(matches!(
            official_standings(&log, 4),
            Err(Error::RoundOutOfRange { round: 4, max: 3 })
        ));
    }

    #[test]
    fn csv_roundtrip_is_stable() {
        let log = MatchLog::parse_csv(FOUR_TEAM_CSV).unwrap();
        let text = log.to_csv();
        assert_eq!(text, FOUR_TEAM_CSV);
        let log2 = MatchLog::parse_csv(&text).unwrap();
        assert_eq!(log2.matches(), log.matches());
    }
}
