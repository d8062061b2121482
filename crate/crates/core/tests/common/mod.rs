#![allow(dead_code)]

use std::sync::Arc;

use hog_core::{
    closure_of, Game, MoveSet, Outcome, OutcomeFn, OutcomeSpace, PayoffMatrix, Player,
    PreferenceOrder, Quantifier, SelectionFunction,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const LABELS: [&str; 3] = ["A", "B", "C"];

pub fn moves(n: usize) -> MoveSet {
    MoveSet::new(LABELS[..n].iter().copied()).unwrap()
}

pub fn random_order(rng: &mut ChaCha8Rng, space: &OutcomeSpace) -> PreferenceOrder {
    let n = space.size().unwrap();
    let mut outs: Vec<Outcome> = (0..n).map(|i| space.outcome_at(i)).collect();
    outs.shuffle(rng);
    PreferenceOrder::new(outs).unwrap()
}

/// Random ε usable by a player whose moves are also the atoms of the outcome space.
fn self_map_selection(rng: &mut ChaCha8Rng, space: &OutcomeSpace) -> SelectionFunction {
    match rng.gen_range(0..6) {
        0 => SelectionFunction::Fix,
        1 => SelectionFunction::NonFix,
        2 => closure_of(&SelectionFunction::Fix),
        3 => SelectionFunction::Preimage(Box::new(Quantifier::FixQ)),
        4 => SelectionFunction::Preimage(Box::new(Quantifier::MaxOrder(random_order(rng, space)))),
        _ => SelectionFunction::ArgmaxOrder(random_order(rng, space)),
    }
}

/// Random ε for player `me` (0-based) when outcomes are tuples over a shared move set.
fn product_selection(
    rng: &mut ChaCha8Rng,
    space: &OutcomeSpace,
    me: usize,
    players: usize,
    labels: &MoveSet,
) -> SelectionFunction {
    let other = {
        let o = rng.gen_range(0..players - 1);
        if o >= me {
            o + 1
        } else {
            o
        }
    };
    let v = labels.label(rng.gen_range(0..labels.len())).to_string();
    match rng.gen_range(0..8) {
        0 => SelectionFunction::FixProj(other + 1),
        1 => SelectionFunction::NonFixProj(other + 1),
        2 => SelectionFunction::Coord,
        3 => SelectionFunction::lex(
            SelectionFunction::Coord,
            SelectionFunction::target_coord(me + 1, v),
        ),
        4 => SelectionFunction::lex(
            SelectionFunction::FixProj(other + 1),
            SelectionFunction::target_coord(me + 1, v),
        ),
        5 => SelectionFunction::lex(
            SelectionFunction::NonFixProj(other + 1),
            SelectionFunction::ArgmaxOrder(random_order(rng, space)),
        ),
        6 => SelectionFunction::Preimage(Box::new(Quantifier::MaxOrder(random_order(rng, space)))),
        _ => SelectionFunction::ArgmaxOrder(random_order(rng, space)),
    }
}

/// A random game built only from palette constructors.
pub fn random_palette_game(rng: &mut ChaCha8Rng, tag: usize) -> Game {
    let name = format!("random-{tag}");
    match rng.gen_range(0..5) {
        // majority voting
        0 => {
            let n = [1, 3, 3, 5][rng.gen_range(0..4)];
            let space = OutcomeSpace::Atoms(moves(2));
            let players = (0..n)
                .map(|i| {
                    Player::new(
                        format!("J{}", i + 1),
                        moves(2),
                        self_map_selection(rng, &space),
                    )
                })
                .collect();
            Game::new(name, players, space, OutcomeFn::Majority).unwrap()
        }
        // random table into the shared move labels
        1 => {
            let n = rng.gen_range(2..=3);
            let k = rng.gen_range(2..=3);
            let space = OutcomeSpace::Atoms(moves(k));
            let cells = k.pow(n as u32);
            let table = (0..cells)
                .map(|_| Outcome::atom(LABELS[rng.gen_range(0..k)]))
                .collect();
            let players = (0..n)
                .map(|i| {
                    Player::new(
                        format!("P{}", i + 1),
                        moves(k),
                        self_map_selection(rng, &space),
                    )
                })
                .collect();
            Game::new(name, players, space, OutcomeFn::Table(table)).unwrap()
        }
        // identity into the product of move sets
        2 | 3 => {
            let n = rng.gen_range(2..=3);
            let k = rng.gen_range(2..=3);
            let m = moves(k);
            let space = OutcomeSpace::Product(vec![m.clone(); n]);
            let q = if rng.gen_bool(0.5) {
                OutcomeFn::Identity
            } else {
                let cells = k.pow(n as u32) as u128;
                OutcomeFn::Table(
                    (0..cells)
                        .map(|_| space.outcome_at(rng.gen_range(0..space.size().unwrap())))
                        .collect(),
                )
            };
            let players = (0..n)
                .map(|i| {
                    Player::new(
                        format!("P{}", i + 1),
                        m.clone(),
                        product_selection(rng, &space, i, n, &m),
                    )
                })
                .collect();
            Game::new(name, players, space, q).unwrap()
        }
        // payoff vectors
        _ => {
            let m = random_matrix(rng);
            hog_core::classical_game(name, &m)
        }
    }
}

/// 2-3 players, 2-3 moves each, integer payoffs in `0..=3`.
pub fn random_matrix(rng: &mut ChaCha8Rng) -> PayoffMatrix {
    let n = rng.gen_range(2..=3);
    let ms: Vec<MoveSet> = (0..n).map(|_| moves(rng.gen_range(2..=3))).collect();
    let cells: usize = ms.iter().map(MoveSet::len).product();
    let rows: Vec<Vec<i64>> = (0..cells)
        .map(|_| (0..n).map(|_| rng.gen_range(0..=3)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    PayoffMatrix::from_ints(ms, &refs).unwrap()
}

/// Every outcome space with at most three elements, plus the move sets of size 1..=3.
pub fn small_spaces() -> Vec<Arc<OutcomeSpace>> {
    let mut out = Vec::new();
    for k in 1..=3 {
        out.push(OutcomeSpace::Atoms(moves(k)));
        out.push(OutcomeSpace::Product(vec![moves(1), moves(k)]));
        out.push(OutcomeSpace::Product(vec![moves(k), moves(1)]));
        let vals = (0..k as i64).map(hog_core::Rational::from_integer);
        out.push(OutcomeSpace::vector(1, vals).unwrap());
    }
    out.push(OutcomeSpace::vector(2, [hog_core::Rational::from_integer(0)]).unwrap());
    out.dedup();
    out.into_iter().map(Arc::new).collect()
}

fn permutations(items: Vec<Outcome>) -> Vec<Vec<Outcome>> {
    if items.len() <= 1 {
        return vec![items];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let head = rest.remove(i);
        for mut tail in permutations(rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Every palette quantifier that type-checks on `X -> R`.
pub fn palette_quantifiers(x: &MoveSet, r: &OutcomeSpace) -> Vec<Quantifier> {
    let mut qs = Vec::new();
    let n = r.size().unwrap();
    for perm in permutations((0..n).map(|i| r.outcome_at(i)).collect()) {
        qs.push(Quantifier::MaxOrder(PreferenceOrder::new(perm).unwrap()));
    }
    if let Some(a) = r.arity() {
        for i in 1..=a {
            qs.push(Quantifier::MaxCoord(i));
        }
    }
    qs.push(Quantifier::FixQ);
    for e in base_selections(x, r) {
        qs.push(Quantifier::Lifted(Box::new(e)));
    }
    qs.retain(|q| q.check(x, r).is_ok());
    qs
}

/// Every non-composite palette selection function that type-checks on `X -> R`.
pub fn base_selections(x: &MoveSet, r: &OutcomeSpace) -> Vec<SelectionFunction> {
    let mut es = vec![
        SelectionFunction::Fix,
        SelectionFunction::NonFix,
        SelectionFunction::Coord,
    ];
    let n = r.size().unwrap();
    for perm in permutations((0..n).map(|i| r.outcome_at(i)).collect()) {
        es.push(SelectionFunction::ArgmaxOrder(
            PreferenceOrder::new(perm).unwrap(),
        ));
    }
    if let Some(a) = r.arity() {
        for i in 1..=a {
            es.push(SelectionFunction::ArgmaxCoord(i));
            es.push(SelectionFunction::FixProj(i));
            es.push(SelectionFunction::NonFixProj(i));
            if let OutcomeSpace::Product(cs) = r {
                for v in cs[i - 1].labels() {
                    es.push(SelectionFunction::target_coord(i, v.clone()));
                }
            }
        }
    }
    es.retain(|e| e.check(x, r).is_ok());
    es
}

/// Base selections plus lex pairs, preimages and closures built from them.
pub fn palette_selections(x: &MoveSet, r: &OutcomeSpace) -> Vec<SelectionFunction> {
    let base = base_selections(x, r);
    let mut es = base.clone();
    for a in &base {
        for b in &base {
            es.push(SelectionFunction::lex(a.clone(), b.clone()));
        }
        es.push(closure_of(a));
    }
    for q in palette_quantifiers(x, r) {
        es.push(SelectionFunction::Preimage(Box::new(q)));
    }
    es
}
