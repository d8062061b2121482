use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HofError {
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("coordinate {index} out of range for arity {arity}")]
    CoordinateOutOfRange { index: usize, arity: usize },
    #[error("preference order does not rank outcome {0}")]
    IncompleteOrder(String),
    #[error("invalid set: {0}")]
    InvalidSet(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("selection table has no entry for context {0}")]
    TableMiss(String),
    #[error("{}", budget_message(*needed, *budget, "contexts"))]
    BudgetExceeded { needed: Option<u128>, budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid game: {0}")]
    InvalidGame(String),
    #[error("player {player}: {source}")]
    Player { player: String, source: HofError },
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("player index {index} out of range for {players} players")]
    PlayerOutOfRange { index: usize, players: usize },
    #[error("{}", budget_message(*needed, *budget, "profiles"))]
    BudgetExceeded { needed: Option<u128>, budget: u64 },
    #[error(transparent)]
    Hof(#[from] HofError),
}

impl GameError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            GameError::BudgetExceeded { .. }
                | GameError::Hof(HofError::BudgetExceeded { .. })
                | GameError::Player {
                    source: HofError::BudgetExceeded { .. },
                    ..
                }
        )
    }
}

fn budget_message(needed: Option<u128>, budget: u64, what: &str) -> String {
    match needed {
        Some(n) => format!("{n} {what} exceed the budget of {budget}"),
        None => format!("number of {what} overflows; budget is {budget}"),
    }
}
