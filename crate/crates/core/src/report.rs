//! Text and JSON renderings of equilibrium and closedness reports.
//!
//! Both renderers read the same [`EquilibriumReport`]; nothing is recomputed.

use std::fmt::Write;

use serde::Serialize;

use crate::game::{EquilibriumReport, Game, PlayerAnalysis};

pub const SCHEMA_VERSION: u32 = 1;

/// Which equilibrium concept(s) to summarise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Concept {
    Selection,
    Quantifier,
    #[default]
    Both,
}

impl Concept {
    fn shows_quantifier(self) -> bool {
        matches!(self, Concept::Quantifier | Concept::Both)
    }

    fn shows_selection(self) -> bool {
        matches!(self, Concept::Selection | Concept::Both)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Concept::Selection => "selection",
            Concept::Quantifier => "quantifier",
            Concept::Both => "both",
        }
    }
}

const HEADERS: [&str; 6] = [
    "Strategy",
    "Outcome",
    "QuantifierEq",
    "QDefects",
    "SelectionEq",
    "SDefects",
];

fn names(report: &EquilibriumReport, idx: &[usize]) -> String {
    idx.iter()
        .map(|&i| report.players[i].as_str())
        .collect::<Vec<_>>()
        .join(", ")
}

fn flag(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "-"
    }
}

/// Fixed-width table, one row per profile, followed by the equilibrium sets
/// of the requested concept(s).
pub fn render_table(game: &Game, report: &EquilibriumReport, concept: Concept) -> String {
    let rows: Vec<[String; 6]> = report
        .rows
        .iter()
        .map(|r| {
            [
                game.profile_string(&r.profile),
                r.outcome.to_string(),
                flag(r.quantifier_eq()).to_string(),
                names(report, &r.quantifier_defectors),
                flag(r.selection_eq()).to_string(),
                names(report, &r.selection_defectors),
            ]
        })
        .collect();
    let mut widths = HEADERS.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let mut l = String::new();
        for (k, (cell, w)) in cells.iter().zip(widths).enumerate() {
            l.push_str(cell);
            if k + 1 < cells.len() {
                l.extend(std::iter::repeat_n(' ', w - cell.chars().count() + 2));
            }
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&HEADERS);
    for row in &rows {
        line(&row.each_ref().map(String::as_str));
    }
    let set = |ps: Vec<&crate::game::StrategyProfile>| {
        ps.into_iter()
            .map(|p| game.profile_string(p))
            .collect::<Vec<_>>()
            .join(", ")
    };
    out.push('\n');
    if concept.shows_quantifier() {
        writeln!(
            out,
            "Quantifier equilibria: {{{}}}",
            set(report.quantifier_equilibria())
        )
        .unwrap();
    }
    if concept.shows_selection() {
        writeln!(
            out,
            "Selection equilibria: {{{}}}",
            set(report.selection_equilibria())
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct JsonRow {
    strategy: Vec<String>,
    profile: String,
    outcome: String,
    quantifier_eq: bool,
    quantifier_defectors: Vec<String>,
    selection_eq: bool,
    selection_defectors: Vec<String>,
}

#[derive(Serialize)]
struct JsonReport {
    schema_version: u32,
    game: String,
    players: Vec<String>,
    concept: &'static str,
    rows: Vec<JsonRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quantifier_equilibria: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    selection_equilibria: Option<Vec<String>>,
}

/// Pretty-printed JSON mirroring the report, byte-stable for a fixed input.
pub fn render_json(game: &Game, report: &EquilibriumReport, concept: Concept) -> String {
    let who = |idx: &[usize]| idx.iter().map(|&i| report.players[i].clone()).collect();
    let set = |ps: Vec<&crate::game::StrategyProfile>| {
        ps.into_iter().map(|p| game.profile_string(p)).collect()
    };
    let doc = JsonReport {
        schema_version: SCHEMA_VERSION,
        game: game.name().to_string(),
        players: report.players.clone(),
        concept: concept.as_str(),
        rows: report
            .rows
            .iter()
            .map(|r| JsonRow {
                strategy: game
                    .profile_labels(&r.profile)
                    .into_iter()
                    .map(String::from)
                    .collect(),
                profile: game.profile_string(&r.profile),
                outcome: r.outcome.to_string(),
                quantifier_eq: r.quantifier_eq(),
                quantifier_defectors: who(&r.quantifier_defectors),
                selection_eq: r.selection_eq(),
                selection_defectors: who(&r.selection_defectors),
            })
            .collect(),
        quantifier_equilibria: concept
            .shows_quantifier()
            .then(|| set(report.quantifier_equilibria())),
        selection_equilibria: concept
            .shows_selection()
            .then(|| set(report.selection_equilibria())),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_analysis_table(game: &Game, analysis: &[PlayerAnalysis]) -> String {
    let mut out = format!("Game: {}\n", game.name());
    for a in analysis {
        writeln!(out, "{} = {}", a.player, a.selection).unwrap();
        match &a.not_closed {
            None => writeln!(out, "  closed: yes").unwrap(),
            Some(w) => writeln!(out, "  closed: no ({w})").unwrap(),
        }
        match &a.lift_failure {
            None => writeln!(out, "  attains own lift: yes").unwrap(),
            Some(w) => writeln!(out, "  attains own lift: no ({w})").unwrap(),
        }
    }
    out
}

#[derive(Serialize)]
struct JsonPlayerAnalysis {
    player: String,
    selection: String,
    closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<JsonWitness>,
    attains_lift: bool,
}

#[derive(Serialize)]
struct JsonWitness {
    context: Vec<(String, String)>,
    selected: String,
    excluded: String,
}

#[derive(Serialize)]
struct JsonAnalysis {
    schema_version: u32,
    game: String,
    players: Vec<JsonPlayerAnalysis>,
}

pub fn render_analysis_json(game: &Game, analysis: &[PlayerAnalysis]) -> String {
    let doc = JsonAnalysis {
        schema_version: SCHEMA_VERSION,
        game: game.name().to_string(),
        players: analysis
            .iter()
            .map(|a| JsonPlayerAnalysis {
                player: a.player.clone(),
                selection: a.selection.clone(),
                closed: a.closed(),
                witness: a.not_closed.as_ref().map(|w| {
                    let d = w.context.domain();
                    JsonWitness {
                        context: (0..d.len())
                            .map(|k| (d.label(k).to_string(), w.context.apply(k).to_string()))
                            .collect(),
                        selected: d.label(w.good).to_string(),
                        excluded: d.label(w.excluded).to_string(),
                    }
                }),
                attains_lift: a.attains_lift(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("analysis serializes");
    s.push('\n');
    s
}
