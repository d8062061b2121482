//! Named example games used as fixtures and CLI presets.

use crate::game::{Game, OutcomeFn, PayoffMatrix, Player};
use crate::hof::{MoveSet, Outcome, OutcomeSpace, PreferenceOrder, SelectionFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuiltinEntry {
    pub name: &'static str,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown builtin game `{0}`")]
pub struct UnknownBuiltin(pub String);

const CATALOG: &[BuiltinEntry] = &[
    BuiltinEntry {
        name: "voting-intro",
        note: "beauty contest as first posed: J1 prefers A, J2 and J3 want to vote for the winner",
    },
    BuiltinEntry {
        name: "voting-classical",
        note: "three judges, majority rule; J1 and J2 prefer A, J3 prefers B",
    },
    BuiltinEntry {
        name: "voting-keynes",
        note: "Keynesian beauty contest: J1 prefers A, J2 and J3 play fix",
    },
    BuiltinEntry {
        name: "voting-allfix",
        note: "every judge wants to vote for the winner (fix, fix, fix)",
    },
    BuiltinEntry {
        name: "voting-allpunk",
        note: "every judge wants to be in the minority (nonfix, nonfix, nonfix)",
    },
    BuiltinEntry {
        name: "meeting-ny",
        note: "meeting in New York: each player fixes on the other's location",
    },
    BuiltinEntry {
        name: "matching-pennies",
        note: "P1 coordinates with P2, P2 anti-coordinates with P1",
    },
    BuiltinEntry {
        name: "bos-lex",
        note: "battle of the sexes, lexicographic: coordinate first, then own favourite",
    },
    BuiltinEntry {
        name: "bos-agreement",
        note: "bos-lex where a husband alone at football goes to the ballet",
    },
];

pub fn catalog() -> &'static [BuiltinEntry] {
    CATALOG
}

pub fn builtin(name: &str) -> Result<Game, UnknownBuiltin> {
    let game = match name {
        "voting-intro" => voting(
            name,
            [
                prefers(&["A", "B"]),
                SelectionFunction::Fix,
                SelectionFunction::Fix,
            ],
        ),
        "voting-classical" => voting(
            name,
            [
                prefers(&["A", "B"]),
                prefers(&["A", "B"]),
                prefers(&["B", "A"]),
            ],
        ),
        "voting-keynes" => voting(
            name,
            [
                prefers(&["A", "B"]),
                SelectionFunction::Fix,
                SelectionFunction::Fix,
            ],
        ),
        "voting-allfix" => voting(
            name,
            [
                SelectionFunction::Fix,
                SelectionFunction::Fix,
                SelectionFunction::Fix,
            ],
        ),
        "voting-allpunk" => voting(
            name,
            [
                SelectionFunction::NonFix,
                SelectionFunction::NonFix,
                SelectionFunction::NonFix,
            ],
        ),
        "meeting-ny" => two_player(
            name,
            &["E", "G"],
            SelectionFunction::FixProj(2),
            SelectionFunction::FixProj(1),
            OutcomeFn::Identity,
        ),
        "matching-pennies" => two_player(
            name,
            &["H", "T"],
            SelectionFunction::FixProj(2),
            SelectionFunction::NonFixProj(1),
            OutcomeFn::Identity,
        ),
        "bos-lex" => bos(name, OutcomeFn::Identity),
        "bos-agreement" => {
            // (wife, husband); a husband alone at the football match goes to the ballet
            let q = [["B", "B"], ["B", "B"], ["F", "B"], ["F", "F"]];
            bos(
                name,
                OutcomeFn::Table(q.iter().map(|t| Outcome::tuple(*t)).collect()),
            )
        }
        other => return Err(UnknownBuiltin(other.to_string())),
    };
    Ok(game)
}

fn ab() -> MoveSet {
    MoveSet::new(["A", "B"]).expect("static labels")
}

fn prefers(best_first: &[&str]) -> SelectionFunction {
    let ord = PreferenceOrder::new(best_first.iter().map(|l| Outcome::atom(*l)).collect())
        .expect("static order");
    SelectionFunction::ArgmaxOrder(ord)
}

fn voting(name: &str, judges: [SelectionFunction; 3]) -> Game {
    let players = judges
        .into_iter()
        .enumerate()
        .map(|(i, e)| Player::new(format!("J{}", i + 1), ab(), e))
        .collect();
    let space = OutcomeSpace::Atoms(ab());
    Game::new(name, players, space, OutcomeFn::Majority).expect("builtin voting game")
}

fn two_player(
    name: &str,
    labels: &[&str],
    first: SelectionFunction,
    second: SelectionFunction,
    q: OutcomeFn,
) -> Game {
    two_named(name, ["P1", "P2"], labels, first, second, q)
}

fn two_named(
    name: &str,
    names: [&str; 2],
    labels: &[&str],
    first: SelectionFunction,
    second: SelectionFunction,
    q: OutcomeFn,
) -> Game {
    let moves = MoveSet::new(labels.iter().copied()).expect("static labels");
    let space = OutcomeSpace::Product(vec![moves.clone(), moves.clone()]);
    let players = vec![
        Player::new(names[0], moves.clone(), first),
        Player::new(names[1], moves, second),
    ];
    Game::new(name, players, space, q).expect("builtin two-player game")
}

fn bos(name: &str, q: OutcomeFn) -> Game {
    let wife = SelectionFunction::lex(
        SelectionFunction::Coord,
        SelectionFunction::target_coord(1, "B"),
    );
    let husband = SelectionFunction::lex(
        SelectionFunction::Coord,
        SelectionFunction::target_coord(2, "F"),
    );
    two_named(name, ["W", "H"], &["B", "F"], wife, husband, q)
}

/// Payoff-matrix encodings of the example games, for checking the classical bridge.
pub fn payoff_fixture(name: &str) -> Option<PayoffMatrix> {
    let ab3 = || vec![ab(), ab(), ab()];
    let pair = |l: [&str; 2]| {
        let m = MoveSet::new(l).expect("static labels");
        vec![m.clone(), m]
    };
    // Cells in lexicographic profile order: AAA, AAB, ABA, ABB, BAA, BAB, BBA, BBB.
    let m = match name {
        // Judges 2 and 3 score 1 when they vote with the majority.
        "voting-intro" => PayoffMatrix::from_ints(
            ab3(),
            &[
                &[1, 1, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
                &[0, 0, 1],
                &[0, 1, 0],
                &[0, 1, 1],
            ],
        ),
        "voting-classical" => PayoffMatrix::from_ints(
            ab3(),
            &[
                &[1, 1, 0],
                &[1, 1, 0],
                &[1, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[0, 0, 1],
                &[0, 0, 1],
                &[0, 0, 1],
            ],
        ),
        "voting-allfix" => PayoffMatrix::from_ints(
            ab3(),
            &[
                &[1, 1, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[0, 1, 1],
                &[1, 0, 1],
                &[1, 1, 0],
                &[1, 1, 1],
            ],
        ),
        // Judges score 1 when alone in the minority.
        "voting-allpunk" => PayoffMatrix::from_ints(
            ab3(),
            &[
                &[0, 0, 0],
                &[0, 0, 1],
                &[0, 1, 0],
                &[1, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[0, 0, 0],
            ],
        ),
        "meeting-ny" => {
            PayoffMatrix::from_ints(pair(["E", "G"]), &[&[1, 1], &[0, 0], &[0, 0], &[1, 1]])
        }
        "matching-pennies" => {
            PayoffMatrix::from_ints(pair(["H", "T"]), &[&[1, -1], &[-1, 1], &[-1, 1], &[1, -1]])
        }
        "bos" => PayoffMatrix::from_ints(pair(["B", "F"]), &[&[3, 2], &[1, 1], &[0, 0], &[2, 3]]),
        _ => return None,
    };
    Some(m.expect("static payoff matrix"))
}

pub const PAYOFF_FIXTURES: &[&str] = &[
    "voting-intro",
    "voting-classical",
    "voting-allfix",
    "voting-allpunk",
    "meeting-ny",
    "matching-pennies",
    "bos",
];
