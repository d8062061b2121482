//! Higher-order games and their two equilibrium concepts.
//!
//! A game is a list of players, each with a move set and a selection
//! function, plus an outcome function on strategy profiles. Player `i`'s
//! unilateral context at profile `s` is the map `x -> q(s[i := x])`. A profile
//! is a quantifier equilibrium when every player's realized outcome is among
//! the outcomes of their good moves in that context, and a selection
//! equilibrium when every player's own move is itself a good move.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{GameError, HofError};
use crate::hof::{
    attains, is_closed, lift_selection, AttainmentWitness, ClosednessWitness, GameContext, MoveSet,
    Outcome, OutcomeSpace, Rational, SelectionFunction,
};

/// Default cap on `|X_1 x ... x X_n|` for exhaustive enumeration.
pub const DEFAULT_PROFILE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Player {
    pub name: String,
    pub moves: Arc<MoveSet>,
    pub selection: SelectionFunction,
}

impl Player {
    pub fn new(name: impl Into<String>, moves: MoveSet, selection: SelectionFunction) -> Self {
        Self {
            name: name.into(),
            moves: Arc::new(moves),
            selection,
        }
    }
}

/// The outcome function `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutcomeFn {
    /// Label chosen by most players; odd player count over one shared binary move set.
    Majority,
    /// The profile itself, as a tuple in the product of the move sets.
    Identity,
    /// One outcome per profile, in lexicographic profile order.
    Table(Vec<Outcome>),
}

/// One move index per player.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrategyProfile(pub Vec<usize>);

impl StrategyProfile {
    pub fn moves(&self) -> &[usize] {
        &self.0
    }

    fn with(&self, player: usize, mv: usize) -> StrategyProfile {
        let mut v = self.0.clone();
        v[player] = mv;
        StrategyProfile(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    name: String,
    players: Vec<Player>,
    outcomes: Arc<OutcomeSpace>,
    outcome_fn: OutcomeFn,
}

impl Game {
    pub fn new(
        name: impl Into<String>,
        players: Vec<Player>,
        outcomes: OutcomeSpace,
        outcome_fn: OutcomeFn,
    ) -> Result<Self, GameError> {
        let game = Self {
            name: name.into(),
            players,
            outcomes: Arc::new(outcomes),
            outcome_fn,
        };
        game.validate()?;
        Ok(game)
    }

    fn validate(&self) -> Result<(), GameError> {
        let invalid = |m: String| Err(GameError::InvalidGame(m));
        if self.players.is_empty() {
            return invalid("a game needs at least one player".into());
        }
        let mut names = BTreeSet::new();
        for p in &self.players {
            if !names.insert(p.name.as_str()) {
                return invalid(format!("player `{}` declared twice", p.name));
            }
        }
        match &self.outcome_fn {
            OutcomeFn::Majority => {
                let first = &self.players[0].moves;
                if self.players.len().is_multiple_of(2) {
                    return invalid("majority needs an odd number of players".into());
                }
                if first.len() != 2 || self.players.iter().any(|p| !p.moves.same_labels(first)) {
                    return invalid("majority needs identical binary move sets".into());
                }
                match &*self.outcomes {
                    OutcomeSpace::Atoms(a) if a.same_labels(first) => {}
                    _ => {
                        return invalid(
                            "majority needs the outcome atoms to equal the move set".into(),
                        )
                    }
                }
            }
            OutcomeFn::Identity => {
                let coords: Vec<MoveSet> =
                    self.players.iter().map(|p| (*p.moves).clone()).collect();
                if *self.outcomes != OutcomeSpace::Product(coords) {
                    return invalid(
                        "identity needs the outcome space to be the product of the move sets"
                            .into(),
                    );
                }
            }
            OutcomeFn::Table(t) => {
                let n = self.profile_count();
                if n != Some(t.len() as u128) {
                    return invalid(format!(
                        "outcome table has {} entries, expected {:?}",
                        t.len(),
                        n
                    ));
                }
                if let Some(o) = t.iter().find(|o| !self.outcomes.contains(o)) {
                    return invalid(format!("outcome {o} is not in the outcome space"));
                }
            }
        }
        for p in &self.players {
            let wrap = |source| GameError::Player {
                player: p.name.clone(),
                source,
            };
            p.selection.check(&p.moves, &self.outcomes).map_err(wrap)?;
            if p.selection.may_be_empty() {
                return Err(wrap(HofError::TypeMismatch(format!(
                    "`{}` may select no move; wrap it in lex(...)",
                    p.selection
                ))));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn players(&self) -> &[Player] {
        &self.players
    }

    pub fn outcomes(&self) -> &OutcomeSpace {
        &self.outcomes
    }

    pub fn outcome_fn(&self) -> &OutcomeFn {
        &self.outcome_fn
    }

    pub fn profile_count(&self) -> Option<u128> {
        self.players
            .iter()
            .try_fold(1u128, |acc, p| acc.checked_mul(p.moves.len() as u128))
    }

    /// Builds a profile from one label per player.
    pub fn profile<S: AsRef<str>>(&self, labels: &[S]) -> Result<StrategyProfile, GameError> {
        if labels.len() != self.players.len() {
            return Err(GameError::InvalidProfile(format!(
                "expected {} moves, got {}",
                self.players.len(),
                labels.len()
            )));
        }
        labels
            .iter()
            .zip(&self.players)
            .map(|(l, p)| {
                p.moves.index_of(l.as_ref()).ok_or_else(|| {
                    GameError::InvalidProfile(format!(
                        "`{}` is not a move of {}",
                        l.as_ref(),
                        p.name
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(StrategyProfile)
    }

    pub fn profile_labels(&self, s: &StrategyProfile) -> Vec<&str> {
        s.0.iter()
            .zip(&self.players)
            .map(|(&m, p)| p.moves.label(m))
            .collect()
    }

    /// Compact rendering: `AAB` when every label is one character, `(E,G)` otherwise.
    pub fn profile_string(&self, s: &StrategyProfile) -> String {
        let labels = self.profile_labels(s);
        let single = self
            .players
            .iter()
            .all(|p| p.moves.labels().iter().all(|l| l.chars().count() == 1));
        if single {
            labels.concat()
        } else {
            format!("({})", labels.join(","))
        }
    }

    fn check_profile(&self, s: &StrategyProfile) -> Result<(), GameError> {
        if s.0.len() != self.players.len() {
            return Err(GameError::InvalidProfile(format!(
                "expected {} moves, got {}",
                self.players.len(),
                s.0.len()
            )));
        }
        for (k, (&m, p)) in s.0.iter().zip(&self.players).enumerate() {
            if m >= p.moves.len() {
                return Err(GameError::InvalidProfile(format!(
                    "move index {m} out of range for player {}",
                    k + 1
                )));
            }
        }
        Ok(())
    }

    fn flat_index(&self, s: &StrategyProfile) -> usize {
        s.0.iter()
            .zip(&self.players)
            .fold(0, |acc, (&m, p)| acc * p.moves.len() + m)
    }

    fn outcome_unchecked(&self, s: &StrategyProfile) -> Outcome {
        match &self.outcome_fn {
            OutcomeFn::Majority => {
                let moves = &self.players[0].moves;
                let labels = self.profile_labels(s);
                let first = labels.iter().filter(|l| **l == moves.label(0)).count();
                let winner = if 2 * first > labels.len() {
                    moves.label(0)
                } else {
                    moves.label(1)
                };
                Outcome::Atom(winner.to_string())
            }
            OutcomeFn::Identity => Outcome::tuple(self.profile_labels(s)),
            OutcomeFn::Table(t) => t[self.flat_index(s)].clone(),
        }
    }

    /// `q(s)`.
    pub fn outcome(&self, s: &StrategyProfile) -> Result<Outcome, GameError> {
        self.check_profile(s)?;
        Ok(self.outcome_unchecked(s))
    }

    /// `U_i(s)`: the context `x -> q(s[i := x])` for player `i` (0-based).
    pub fn unilateral_context(
        &self,
        s: &StrategyProfile,
        i: usize,
    ) -> Result<GameContext, GameError> {
        self.check_profile(s)?;
        if i >= self.players.len() {
            return Err(GameError::PlayerOutOfRange {
                index: i,
                players: self.players.len(),
            });
        }
        Ok(self.unilateral_unchecked(s, i))
    }

    fn unilateral_unchecked(&self, s: &StrategyProfile, i: usize) -> GameContext {
        let moves = &self.players[i].moves;
        let table = (0..moves.len())
            .map(|x| self.outcome_unchecked(&s.with(i, x)))
            .collect();
        GameContext::new_unchecked(Arc::clone(moves), Arc::clone(&self.outcomes), table)
    }

    fn player_error(&self, i: usize, source: HofError) -> GameError {
        GameError::Player {
            player: self.players[i].name.clone(),
            source,
        }
    }

    /// Players `i` with `q(s)` outside the lifted selection of `U_i(s)`.
    pub fn quantifier_defectors(&self, s: &StrategyProfile) -> Result<Vec<usize>, GameError> {
        self.check_profile(s)?;
        let q = self.outcome_unchecked(s);
        let mut out = Vec::new();
        for (i, p) in self.players.iter().enumerate() {
            let ctx = self.unilateral_unchecked(s, i);
            let good = lift_selection(&p.selection)
                .eval(&ctx)
                .map_err(|e| self.player_error(i, e))?;
            if !good.contains(&q) {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Players `i` whose own move is not selected in `U_i(s)`.
    pub fn selection_defectors(&self, s: &StrategyProfile) -> Result<Vec<usize>, GameError> {
        self.check_profile(s)?;
        let mut out = Vec::new();
        for (i, p) in self.players.iter().enumerate() {
            let ctx = self.unilateral_unchecked(s, i);
            let good = p
                .selection
                .eval(&ctx)
                .map_err(|e| self.player_error(i, e))?;
            if !good.contains(&s.0[i]) {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn is_quantifier_equilibrium(&self, s: &StrategyProfile) -> Result<bool, GameError> {
        Ok(self.quantifier_defectors(s)?.is_empty())
    }

    pub fn is_selection_equilibrium(&self, s: &StrategyProfile) -> Result<bool, GameError> {
        Ok(self.selection_defectors(s)?.is_empty())
    }

    /// Full report row for one profile.
    pub fn analyze_profile(&self, s: &StrategyProfile) -> Result<ReportRow, GameError> {
        Ok(ReportRow {
            outcome: self.outcome(s)?,
            quantifier_defectors: self.quantifier_defectors(s)?,
            selection_defectors: self.selection_defectors(s)?,
            profile: s.clone(),
        })
    }

    /// All profiles in lexicographic order of move declaration, first player most significant.
    pub fn profiles(&self, budget: u64) -> Result<Profiles, GameError> {
        let total = self.profile_count();
        match total {
            Some(t) if t <= budget as u128 => Ok(Profiles {
                radix: self.players.iter().map(|p| p.moves.len()).collect(),
                next: Some(vec![0; self.players.len()]),
            }),
            _ => Err(GameError::BudgetExceeded {
                needed: total,
                budget,
            }),
        }
    }

    /// One row per profile with both equilibrium verdicts.
    pub fn enumerate_equilibria(&self, budget: u64) -> Result<EquilibriumReport, GameError> {
        let rows = self
            .profiles(budget)?
            .map(|s| self.analyze_profile(&s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EquilibriumReport {
            players: self.players.iter().map(|p| p.name.clone()).collect(),
            rows,
        })
    }
}

pub struct Profiles {
    radix: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for Profiles {
    type Item = StrategyProfile;

    fn next(&mut self) -> Option<StrategyProfile> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for (d, &r) in succ.iter_mut().zip(&self.radix).rev() {
            *d += 1;
            if *d < r {
                self.next = Some(succ);
                break;
            }
            *d = 0;
        }
        Some(StrategyProfile(cur))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub profile: StrategyProfile,
    pub outcome: Outcome,
    pub quantifier_defectors: Vec<usize>,
    pub selection_defectors: Vec<usize>,
}

impl ReportRow {
    pub fn quantifier_eq(&self) -> bool {
        self.quantifier_defectors.is_empty()
    }

    pub fn selection_eq(&self) -> bool {
        self.selection_defectors.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquilibriumReport {
    pub players: Vec<String>,
    pub rows: Vec<ReportRow>,
}

impl EquilibriumReport {
    pub fn quantifier_equilibria(&self) -> Vec<&StrategyProfile> {
        self.rows
            .iter()
            .filter(|r| r.quantifier_eq())
            .map(|r| &r.profile)
            .collect()
    }

    pub fn selection_equilibria(&self) -> Vec<&StrategyProfile> {
        self.rows
            .iter()
            .filter(|r| r.selection_eq())
            .map(|r| &r.profile)
            .collect()
    }

    /// Every selection equilibrium is a quantifier equilibrium; returns violating rows.
    pub fn refinement_violations(&self) -> Vec<&ReportRow> {
        self.rows
            .iter()
            .filter(|r| r.selection_eq() && !r.quantifier_eq())
            .collect()
    }
}

/// A classical normal-form game with exact payoffs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PayoffMatrix {
    players: Vec<String>,
    moves: Vec<MoveSet>,
    payoffs: Vec<Vec<Rational>>,
}

impl PayoffMatrix {
    /// `payoffs` lists one payoff vector per profile, lexicographic with the
    /// first player most significant.
    pub fn new(
        players: Vec<String>,
        moves: Vec<MoveSet>,
        payoffs: Vec<Vec<Rational>>,
    ) -> Result<Self, GameError> {
        if moves.is_empty() || players.len() != moves.len() {
            return Err(GameError::InvalidGame(
                "payoff matrix needs one move set per player".into(),
            ));
        }
        let total = moves
            .iter()
            .try_fold(1usize, |acc, m| acc.checked_mul(m.len()));
        if total != Some(payoffs.len()) {
            return Err(GameError::InvalidGame(format!(
                "payoff matrix has {} cells, expected {:?}",
                payoffs.len(),
                total
            )));
        }
        if payoffs.iter().any(|v| v.len() != moves.len()) {
            return Err(GameError::InvalidGame(
                "every payoff vector needs one entry per player".into(),
            ));
        }
        Ok(Self {
            players,
            moves,
            payoffs,
        })
    }

    /// Integer payoffs with players named `P1..Pn`.
    pub fn from_ints(moves: Vec<MoveSet>, payoffs: &[&[i64]]) -> Result<Self, GameError> {
        let players = (1..=moves.len()).map(|i| format!("P{i}")).collect();
        let payoffs = payoffs
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(x)).collect())
            .collect();
        Self::new(players, moves, payoffs)
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn moves(&self) -> &[MoveSet] {
        &self.moves
    }

    pub fn payoffs(&self) -> &[Vec<Rational>] {
        &self.payoffs
    }
}

/// Each player maximises their own coordinate of the payoff vector.
pub fn classical_game(name: impl Into<String>, m: &PayoffMatrix) -> Game {
    let values = m.payoffs.iter().flatten().copied();
    let space = OutcomeSpace::vector(m.moves.len(), values).expect("validated matrix is nonempty");
    let players = m
        .players
        .iter()
        .zip(&m.moves)
        .enumerate()
        .map(|(i, (name, moves))| {
            Player::new(
                name.clone(),
                moves.clone(),
                SelectionFunction::ArgmaxCoord(i + 1),
            )
        })
        .collect();
    let table = m
        .payoffs
        .iter()
        .map(|v| Outcome::Vector(v.clone()))
        .collect();
    Game::new(name, players, space, OutcomeFn::Table(table)).expect("classical game is well formed")
}

/// Pure Nash equilibria by direct best-response comparison on the payoff
/// table: no player gains strictly by deviating alone. Shares no code with
/// [`Game::enumerate_equilibria`].
pub fn brute_force_nash(m: &PayoffMatrix, budget: u64) -> Result<Vec<Vec<usize>>, GameError> {
    let sizes: Vec<usize> = m.moves.iter().map(MoveSet::len).collect();
    let cells = m.payoffs.len();
    if cells as u128 > budget as u128 {
        return Err(GameError::BudgetExceeded {
            needed: Some(cells as u128),
            budget,
        });
    }
    // stride[k]: distance in the flat table between adjacent moves of player k
    let mut stride = vec![1usize; sizes.len()];
    for k in (0..sizes.len().saturating_sub(1)).rev() {
        stride[k] = stride[k + 1] * sizes[k + 1];
    }
    let mut out = Vec::new();
    for cell in 0..cells {
        let digits: Vec<usize> = (0..sizes.len())
            .map(|k| (cell / stride[k]) % sizes[k])
            .collect();
        let stable = (0..sizes.len()).all(|k| {
            let base = cell - digits[k] * stride[k];
            let mine = m.payoffs[cell][k];
            (0..sizes[k]).all(|alt| m.payoffs[base + alt * stride[k]][k] <= mine)
        });
        if stable {
            out.push(digits);
        }
    }
    Ok(out)
}

/// Closedness and attainment verdicts for one player over all contexts
/// from their moves into the game's outcome space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerAnalysis {
    pub player: String,
    pub selection: String,
    /// `None` when the selection function is closed.
    pub not_closed: Option<ClosednessWitness>,
    /// `None` when the selection function attains its own lift.
    pub lift_failure: Option<AttainmentWitness>,
}

impl PlayerAnalysis {
    pub fn closed(&self) -> bool {
        self.not_closed.is_none()
    }

    pub fn attains_lift(&self) -> bool {
        self.lift_failure.is_none()
    }
}

impl Game {
    pub fn analyze_players(&self, budget: u64) -> Result<Vec<PlayerAnalysis>, GameError> {
        self.players
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let err = |e| self.player_error(i, e);
                let not_closed =
                    is_closed(&p.selection, &p.moves, &self.outcomes, budget).map_err(err)?;
                let lift = lift_selection(&p.selection);
                let lift_failure =
                    attains(&p.selection, &lift, &p.moves, &self.outcomes, budget).map_err(err)?;
                Ok(PlayerAnalysis {
                    player: p.name.clone(),
                    selection: p.selection.to_string(),
                    not_closed,
                    lift_failure,
                })
            })
            .collect()
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hof::PreferenceOrder;

    fn ab() -> MoveSet {
        MoveSet::new(["A", "B"]).unwrap()
    }

    fn prefers(best: &str, worst: &str) -> SelectionFunction {
        SelectionFunction::ArgmaxOrder(
            PreferenceOrder::new(vec![Outcome::atom(best), Outcome::atom(worst)]).unwrap(),
        )
    }

    fn voting(sel: [SelectionFunction; 3]) -> Game {
        let players = sel
            .into_iter()
            .enumerate()
            .map(|(i, e)| Player::new(format!("J{}", i + 1), ab(), e))
            .collect();
        Game::new(
            "voting",
            players,
            OutcomeSpace::atoms(["A", "B"]).unwrap(),
            OutcomeFn::Majority,
        )
        .unwrap()
    }

    fn classical() -> Game {
        voting([prefers("A", "B"), prefers("A", "B"), prefers("B", "A")])
    }

    fn keynes() -> Game {
        voting([
            prefers("A", "B"),
            SelectionFunction::Fix,
            SelectionFunction::Fix,
        ])
    }

    fn labels(g: &Game, ss: Vec<&StrategyProfile>) -> Vec<String> {
        ss.into_iter().map(|s| g.profile_string(s)).collect()
    }

    #[test]
    fn majority_outcomes() {
        let g = keynes();
        assert_eq!(
            g.outcome(&g.profile(&["B", "B", "B"]).unwrap()).unwrap(),
            Outcome::atom("B")
        );
        assert_eq!(
            g.outcome(&g.profile(&["A", "A", "B"]).unwrap()).unwrap(),
            Outcome::atom("A")
        );
        assert_eq!(
            g.outcome(&g.profile(&["A", "B", "B"]).unwrap()).unwrap(),
            Outcome::atom("B")
        );
    }

    #[test]
    fn unilateral_contexts() {
        let g = classical();
        let bbb = g.profile(&["B", "B", "B"]).unwrap();
        assert_eq!(
            g.unilateral_context(&bbb, 0).unwrap().table(),
            &[Outcome::atom("B"), Outcome::atom("B")]
        );
        let bba = g.profile(&["B", "B", "A"]).unwrap();
        assert_eq!(
            g.unilateral_context(&bba, 0).unwrap().table(),
            &[Outcome::atom("A"), Outcome::atom("B")]
        );
        let k = keynes();
        let aab = k.profile(&["A", "A", "B"]).unwrap();
        assert_eq!(
            k.unilateral_context(&aab, 2).unwrap().table(),
            &[Outcome::atom("A"), Outcome::atom("A")]
        );
        assert!(matches!(
            g.unilateral_context(&bbb, 3),
            Err(GameError::PlayerOutOfRange { .. })
        ));
    }

    #[test]
    fn invalid_profiles() {
        let g = classical();
        assert!(matches!(
            g.profile(&["A", "B"]),
            Err(GameError::InvalidProfile(_))
        ));
        assert!(matches!(
            g.profile(&["A", "B", "C"]),
            Err(GameError::InvalidProfile(_))
        ));
        assert!(matches!(
            g.outcome(&StrategyProfile(vec![0, 0, 5])),
            Err(GameError::InvalidProfile(_))
        ));
    }

    #[test]
    fn classical_voting_checks() {
        let g = classical();
        let bbb = g.profile(&["B", "B", "B"]).unwrap();
        assert!(g.is_quantifier_equilibrium(&bbb).unwrap());
        let bba = g.profile(&["B", "B", "A"]).unwrap();
        // J2 also prefers A and is pivotal at BBA, so both J1 and J2 defect.
        assert_eq!(g.quantifier_defectors(&bba).unwrap(), vec![0, 1]);
        let r = g.enumerate_equilibria(DEFAULT_PROFILE_BUDGET).unwrap();
        assert_eq!(labels(&g, r.quantifier_equilibria()), ["AAA", "AAB", "BBB"]);
        assert_eq!(labels(&g, r.selection_equilibria()), ["AAA", "AAB", "BBB"]);
    }

    #[test]
    fn keynes_checks() {
        let g = keynes();
        let aab = g.profile(&["A", "A", "B"]).unwrap();
        assert!(g.is_quantifier_equilibrium(&aab).unwrap());
        assert_eq!(g.selection_defectors(&aab).unwrap(), vec![2]);
        assert!(g
            .is_selection_equilibrium(&g.profile(&["A", "B", "B"]).unwrap())
            .unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            classical().enumerate_equilibria(7),
            Err(GameError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn majority_rejects_even_players() {
        let players = (0..2)
            .map(|i| Player::new(format!("J{i}"), ab(), SelectionFunction::Fix))
            .collect();
        let err = Game::new(
            "x",
            players,
            OutcomeSpace::atoms(["A", "B"]).unwrap(),
            OutcomeFn::Majority,
        );
        assert!(matches!(err, Err(GameError::InvalidGame(_))));
    }

    #[test]
    fn possibly_empty_player_rejected() {
        let players = vec![
            Player::new("W", ab(), SelectionFunction::target_coord(1, "A")),
            Player::new("H", ab(), SelectionFunction::Coord),
        ];
        let space = OutcomeSpace::product(vec![ab(), ab()]).unwrap();
        let err = Game::new("x", players, space, OutcomeFn::Identity).unwrap_err();
        assert!(matches!(err, GameError::Player { ref player, .. } if player == "W"));
    }

    #[test]
    fn nash_trivial_cases() {
        let single =
            PayoffMatrix::from_ints(vec![MoveSet::new(["a", "b"]).unwrap()], &[&[0], &[1]])
                .unwrap();
        assert_eq!(brute_force_nash(&single, 100).unwrap(), vec![vec![1]]);
        let flat = PayoffMatrix::from_ints(vec![ab(), ab()], &[&[1, 1], &[1, 1], &[1, 1], &[1, 1]])
            .unwrap();
        assert_eq!(brute_force_nash(&flat, 100).unwrap().len(), 4);
    }

    #[test]
    fn classical_game_shape() {
        let m = PayoffMatrix::from_ints(vec![ab(), ab()], &[&[3, 2], &[1, 1], &[0, 0], &[2, 3]])
            .unwrap();
        let g = classical_game("bos", &m);
        assert_eq!(g.players()[1].selection, SelectionFunction::ArgmaxCoord(2));
        assert_eq!(g.outcomes().arity(), Some(2));
        let r = g.enumerate_equilibria(100).unwrap();
        assert_eq!(labels(&g, r.selection_equilibria()), ["AA", "BB"]);
    }
}
