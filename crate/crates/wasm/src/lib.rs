//! Browser bindings. The exported functions take `.hog` source text and return
//! rendered reports; errors come back as diagnostic text.
//!
//! Everything testable lives in [`demo`], which has no JS types and runs on
//! native targets.

use wasm_bindgen::prelude::*;

pub mod demo {
    use std::fmt::Write;

    use hog_core::builtins::catalog;
    use hog_core::report::{self, Concept};
    use hog_core::{
        builtin, parse_game, render_game, Game, GameSource, DEFAULT_CONTEXT_BUDGET,
        DEFAULT_PROFILE_BUDGET,
    };

    /// Budgets are lower than the CLI defaults so a tab never hangs.
    pub const PROFILE_BUDGET: u64 = 100_000;
    pub const CONTEXT_BUDGET: u64 = 100_000;

    const _: () = assert!(PROFILE_BUDGET <= DEFAULT_PROFILE_BUDGET);
    const _: () = assert!(CONTEXT_BUDGET <= DEFAULT_CONTEXT_BUDGET);

    fn load(source: &str) -> Result<(Game, String), String> {
        match parse_game(&GameSource::new(source)) {
            Ok(p) => {
                let warnings = p
                    .warnings
                    .iter()
                    .map(|w| format!("{w}\n"))
                    .collect::<String>();
                Ok((p.game, warnings))
            }
            Err(diags) => Err(diags
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join("\n")),
        }
    }

    fn concept(name: &str) -> Result<Concept, String> {
        match name {
            "selection" => Ok(Concept::Selection),
            "quantifier" => Ok(Concept::Quantifier),
            "both" | "" => Ok(Concept::Both),
            other => Err(format!("unknown concept `{other}`")),
        }
    }

    pub fn builtin_names() -> Vec<String> {
        catalog().iter().map(|e| e.name.to_string()).collect()
    }

    pub fn builtin_source(name: &str) -> Result<String, String> {
        let g = builtin(name).map_err(|e| e.to_string())?;
        let src = render_game(&g).map_err(|e| e.to_string())?;
        let note = catalog()
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.note)
            .unwrap_or_default();
        Ok(format!("# {note}\n{}", src.text))
    }

    /// Equilibrium report as a table or JSON.
    pub fn solve(source: &str, json: bool, concept_name: &str) -> Result<String, String> {
        let c = concept(concept_name)?;
        let (g, warnings) = load(source)?;
        let r = g
            .enumerate_equilibria(PROFILE_BUDGET)
            .map_err(|e| e.to_string())?;
        let body = if json {
            report::render_json(&g, &r, c)
        } else {
            report::render_table(&g, &r, c)
        };
        Ok(warnings + &body)
    }

    /// Closedness and attainment per player.
    pub fn analyze(source: &str) -> Result<String, String> {
        let (g, warnings) = load(source)?;
        let a = g
            .analyze_players(CONTEXT_BUDGET)
            .map_err(|e| e.to_string())?;
        Ok(warnings + &report::render_analysis_table(&g, &a))
    }

    /// One profile, with every player's unilateral context and good moves.
    pub fn explain_profile(source: &str, profile: &str) -> Result<String, String> {
        let (g, _) = load(source)?;
        let labels: Vec<&str> = profile
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let s = g.profile(&labels).map_err(|e| e.to_string())?;
        let row = g.analyze_profile(&s).map_err(|e| e.to_string())?;
        let mut out = format!("{} -> {}\n", g.profile_string(&s), row.outcome);
        for (i, p) in g.players().iter().enumerate() {
            let u = g.unilateral_context(&s, i).map_err(|e| e.to_string())?;
            let good = p.selection.eval(&u).map_err(|e| e.to_string())?;
            let verdict = match (
                row.quantifier_defectors.contains(&i),
                row.selection_defectors.contains(&i),
            ) {
                (false, false) => "stays",
                (false, true) => "defects (selection only)",
                (true, _) => "defects",
            };
            writeln!(
                out,
                "{}: context {u}, good moves {{{}}}, plays {}: {verdict}",
                p.name,
                u.labels_of(&good).join(", "),
                p.moves.label(s.0[i]),
            )
            .unwrap();
        }
        Ok(out)
    }
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = builtinNames)]
pub fn builtin_names() -> Vec<String> {
    demo::builtin_names()
}

#[wasm_bindgen(js_name = builtinSource)]
pub fn builtin_source(name: &str) -> Result<String, JsValue> {
    js(demo::builtin_source(name))
}

#[wasm_bindgen]
pub fn solve(source: &str, json: bool, concept: &str) -> Result<String, JsValue> {
    js(demo::solve(source, json, concept))
}

#[wasm_bindgen]
pub fn analyze(source: &str) -> Result<String, JsValue> {
    js(demo::analyze(source))
}

#[wasm_bindgen(js_name = explainProfile)]
pub fn explain_profile(source: &str, profile: &str) -> Result<String, JsValue> {
    js(demo::explain_profile(source, profile))
}
