//! The `.hog` text format for higher-order games.
//!
//! ```text
//! # Keynesian beauty contest
//! game voting-keynes
//! moves J1 = { A, B }
//! moves J2 = { A, B }
//! moves J3 = { A, B }
//! outcomes = { A, B }
//! outcome_fn = majority
//! player J1 = argmax(order: B < A)
//! player J2 = fix
//! player J3 = fix
//! ```
//!
//! Declarations start with a keyword and may appear in any order, except that
//! a `player` line must follow the `moves` line of the same player. Player
//! order is the order of the `moves` lines. `outcomes = moves` (or `product`)
//! is the product of all move sets. `vectors <n>` takes its value set from the
//! outcome table unless an explicit `values { ... }` clause follows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::GameError;
use crate::game::{Game, OutcomeFn, Player};
use crate::hof::{MoveSet, Outcome, OutcomeSpace, PreferenceOrder, Rational, SelectionFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSource {
    pub text: String,
    pub name: Option<String>,
}

impl GameSource {
    pub fn new(text: impl Into<String>) -> Self {
        Self {
            text: text.into(),
            name: None,
        }
    }

    pub fn named(text: impl Into<String>, name: impl Into<String>) -> Self {
        Self {
            text: text.into(),
            name: Some(name.into()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    SyntaxError,
    UnknownConstructor,
    TypeMismatch,
    ArityError,
    DuplicateDefinition,
    MissingDefinition,
    InvalidGame,
    UnreachableOutcome,
}

/// A located message. `line` and `column` are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(
            f,
            "{}:{}: {sev}[{:?}]: {}",
            self.line, self.column, self.kind, self.message
        )
    }
}

/// A successfully parsed game plus any warnings.
#[derive(Clone, Debug)]
pub struct ParsedGame {
    pub game: Game,
    pub warnings: Vec<ParseDiagnostic>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
struct Pos {
    line: usize,
    col: usize,
}

fn diag(kind: DiagnosticKind, pos: Pos, message: impl Into<String>) -> ParseDiagnostic {
    ParseDiagnostic {
        severity: Severity::Error,
        kind,
        message: message.into(),
        line: pos.line,
        column: pos.col,
    }
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Lt,
    Colon,
    Arrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Lt => f.write_str("`<`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Arrow => f.write_str("`->`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: Pos,
    /// First token on its line.
    bol: bool,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<Token>, ParseDiagnostic> {
    let mut toks = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        let mut bol = true;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: ln + 1,
                col: i + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let next = chars.get(i + 1).copied();
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '<' => Tok::Lt,
                ':' => Tok::Colon,
                '-' if next == Some('>') => {
                    i += 1;
                    Tok::Arrow
                }
                c if is_word_char(c) || (c == '-' && next.is_some_and(|n| n.is_ascii_digit())) => {
                    let start = i;
                    i += 1;
                    while i < chars.len() {
                        let n = chars.get(i + 1).copied();
                        let joins = is_word_char(chars[i])
                            || (chars[i] == '-' && n.is_some_and(is_word_char))
                            || (chars[i] == '/' && n.is_some_and(|n| n.is_ascii_digit()));
                        if !joins {
                            break;
                        }
                        i += 1;
                    }
                    toks.push(Token {
                        tok: Tok::Word(chars[start..i].iter().collect()),
                        pos,
                        bol,
                    });
                    bol = false;
                    continue;
                }
                other => {
                    return Err(diag(
                        DiagnosticKind::SyntaxError,
                        pos,
                        format!("unexpected character `{other}`"),
                    ));
                }
            };
            toks.push(Token { tok, pos, bol });
            bol = false;
            i += 1;
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Raw syntax

#[derive(Clone, Debug)]
enum RawValue {
    Atom(String),
    Tuple(Vec<String>),
}

#[derive(Clone, Debug)]
enum RawSel {
    ArgmaxOrder(Vec<RawValue>),
    ArgmaxCoord(usize),
    Fix(Option<usize>),
    NonFix(Option<usize>),
    Coord,
    Target(usize, String),
    Lex(Box<RawSel>, Box<RawSel>),
}

#[derive(Clone, Debug)]
enum RawOutcomes {
    Moves,
    Atoms(Vec<String>),
    Vectors {
        dim: usize,
        values: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug)]
struct TableEntry {
    key: Vec<String>,
    value: RawValue,
    pos: Pos,
}

#[derive(Clone, Debug)]
enum RawOutcomeFn {
    Majority,
    Identity,
    Table {
        entries: Vec<TableEntry>,
        close: Pos,
    },
}

#[derive(Clone, Debug)]
enum Stmt {
    Game(String),
    Moves(String, Vec<String>),
    Outcomes(RawOutcomes),
    OutcomeFn(RawOutcomeFn),
    Player(String, RawSel),
}

const KEYWORDS: [&str; 5] = ["game", "moves", "outcomes", "outcome_fn", "player"];

struct Parser<'a> {
    toks: &'a [Token],
    i: usize,
    eof: Pos,
}

type PResult<T> = Result<T, ParseDiagnostic>;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.i)
    }

    fn pos(&self) -> Pos {
        self.peek().map_or(self.eof, |t| t.pos)
    }

    fn unexpected(&self, want: &str) -> ParseDiagnostic {
        match self.peek() {
            Some(t) => diag(
                DiagnosticKind::SyntaxError,
                t.pos,
                format!("expected {want}, found {}", t.tok),
            ),
            None => diag(
                DiagnosticKind::SyntaxError,
                self.eof,
                format!("expected {want}, found end of input"),
            ),
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<Pos> {
        match self.peek() {
            Some(t) if t.tok == tok => {
                self.i += 1;
                Ok(t.pos)
            }
            _ => Err(self.unexpected(&tok.to_string())),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().is_some_and(|t| &t.tok == tok) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self, what: &str) -> PResult<String> {
        match self.peek() {
            Some(Token {
                tok: Tok::Word(w), ..
            }) => {
                self.i += 1;
                Ok(w.clone())
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Token {
                tok: Tok::Word(w), ..
            }) if w == kw => {
                self.i += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn number(&mut self, what: &str) -> PResult<usize> {
        let pos = self.pos();
        let w = self.word(what)?;
        w.parse::<usize>().map_err(|_| {
            diag(
                DiagnosticKind::SyntaxError,
                pos,
                format!("expected {what}, found `{w}`"),
            )
        })
    }

    /// `{ a, b, ... }`
    fn label_set(&mut self) -> PResult<Vec<String>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.push(self.word("a label")?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            self.expect(Tok::Comma)?;
        }
    }

    /// `( a, b, ... )`
    fn tuple(&mut self) -> PResult<Vec<String>> {
        self.expect(Tok::LParen)?;
        let mut out = vec![self.word("a value")?];
        while self.eat(&Tok::Comma) {
            out.push(self.word("a value")?);
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn value(&mut self) -> PResult<RawValue> {
        if self.peek().is_some_and(|t| t.tok == Tok::LParen) {
            Ok(RawValue::Tuple(self.tuple()?))
        } else {
            Ok(RawValue::Atom(self.word("an outcome value")?))
        }
    }

    fn coord_arg(&mut self) -> PResult<usize> {
        self.keyword("coord")?;
        self.expect(Tok::Colon)?;
        self.number("a coordinate index")
    }

    fn sel(&mut self) -> PResult<RawSel> {
        let pos = self.pos();
        let name = self.word("a selection function")?;
        let has_args = self.peek().is_some_and(|t| t.tok == Tok::LParen);
        let sel = match name.as_str() {
            "argmax" => {
                self.expect(Tok::LParen)?;
                let kpos = self.pos();
                let key = self.word("`order` or `coord`")?;
                self.expect(Tok::Colon)?;
                let s = match key.as_str() {
                    "order" => {
                        let mut vals = vec![self.value()?];
                        while self.eat(&Tok::Lt) {
                            vals.push(self.value()?);
                        }
                        RawSel::ArgmaxOrder(vals)
                    }
                    "coord" => RawSel::ArgmaxCoord(self.number("a coordinate index")?),
                    other => {
                        return Err(diag(
                            DiagnosticKind::SyntaxError,
                            kpos,
                            format!("expected `order` or `coord`, found `{other}`"),
                        ))
                    }
                };
                self.expect(Tok::RParen)?;
                s
            }
            "fix" | "nonfix" => {
                let coord = if has_args {
                    self.expect(Tok::LParen)?;
                    let c = self.coord_arg()?;
                    self.expect(Tok::RParen)?;
                    Some(c)
                } else {
                    None
                };
                if name == "fix" {
                    RawSel::Fix(coord)
                } else {
                    RawSel::NonFix(coord)
                }
            }
            "coord" => RawSel::Coord,
            "target" => {
                self.expect(Tok::LParen)?;
                let c = self.coord_arg()?;
                self.expect(Tok::Comma)?;
                self.keyword("value")?;
                self.expect(Tok::Colon)?;
                let v = self.word("a label")?;
                self.expect(Tok::RParen)?;
                RawSel::Target(c, v)
            }
            "lex" => {
                self.expect(Tok::LParen)?;
                let a = self.sel()?;
                self.expect(Tok::Comma)?;
                let b = self.sel()?;
                self.expect(Tok::RParen)?;
                RawSel::Lex(Box::new(a), Box::new(b))
            }
            other => {
                return Err(diag(
                    DiagnosticKind::UnknownConstructor,
                    pos,
                    format!("unknown selection function `{other}`"),
                ))
            }
        };
        Ok(sel)
    }

    fn outcomes(&mut self) -> PResult<RawOutcomes> {
        if self.peek().is_some_and(|t| t.tok == Tok::LBrace) {
            return Ok(RawOutcomes::Atoms(self.label_set()?));
        }
        let pos = self.pos();
        match self
            .word("`moves`, `product`, `vectors` or a label set")?
            .as_str()
        {
            "moves" | "product" => Ok(RawOutcomes::Moves),
            "vectors" => {
                let dim = self.number("a dimension")?;
                let values = if self
                    .peek()
                    .is_some_and(|t| t.tok == Tok::Word("values".into()))
                {
                    self.i += 1;
                    Some(self.label_set()?)
                } else {
                    None
                };
                Ok(RawOutcomes::Vectors { dim, values })
            }
            other => Err(diag(
                DiagnosticKind::UnknownConstructor,
                pos,
                format!("unknown outcome space `{other}`"),
            )),
        }
    }

    fn outcome_fn(&mut self) -> PResult<RawOutcomeFn> {
        let pos = self.pos();
        match self.word("`majority`, `identity` or `table`")?.as_str() {
            "majority" => Ok(RawOutcomeFn::Majority),
            "identity" => Ok(RawOutcomeFn::Identity),
            "table" => {
                self.expect(Tok::LBrace)?;
                let mut entries = Vec::new();
                loop {
                    if let Some(t) = self.peek() {
                        if t.tok == Tok::RBrace {
                            self.i += 1;
                            return Ok(RawOutcomeFn::Table {
                                entries,
                                close: t.pos,
                            });
                        }
                    }
                    let epos = self.pos();
                    let key = self.tuple()?;
                    self.expect(Tok::Arrow)?;
                    let value = self.value()?;
                    self.eat(&Tok::Semi);
                    entries.push(TableEntry {
                        key,
                        value,
                        pos: epos,
                    });
                }
            }
            other => Err(diag(
                DiagnosticKind::UnknownConstructor,
                pos,
                format!("unknown outcome function `{other}`"),
            )),
        }
    }

    fn stmt(&mut self) -> PResult<(Stmt, Pos)> {
        let pos = self.pos();
        let kw = self.word("a declaration")?;
        let stmt = match kw.as_str() {
            "game" => Stmt::Game(self.word("a game name")?),
            "moves" => {
                let p = self.word("a player name")?;
                self.expect(Tok::Eq)?;
                Stmt::Moves(p, self.label_set()?)
            }
            "outcomes" => {
                self.expect(Tok::Eq)?;
                Stmt::Outcomes(self.outcomes()?)
            }
            "outcome_fn" => {
                self.expect(Tok::Eq)?;
                Stmt::OutcomeFn(self.outcome_fn()?)
            }
            "player" => {
                let p = self.word("a player name")?;
                self.expect(Tok::Eq)?;
                Stmt::Player(p, self.sel()?)
            }
            other => {
                return Err(diag(
                    DiagnosticKind::SyntaxError,
                    pos,
                    format!("expected one of {}, found `{other}`", KEYWORDS.join(", ")),
                ))
            }
        };
        // A declaration ends at the end of its line (tables may span lines).
        if let Some(t) = self.peek() {
            if !t.bol {
                return Err(diag(
                    DiagnosticKind::SyntaxError,
                    t.pos,
                    format!("unexpected {} after declaration", t.tok),
                ));
            }
        }
        Ok((stmt, pos))
    }

    fn recover(&mut self) {
        while let Some(t) = self.peek() {
            if t.bol && matches!(&t.tok, Tok::Word(w) if KEYWORDS.contains(&w.as_str())) {
                return;
            }
            self.i += 1;
        }
    }
}

fn parse_statements(text: &str) -> Result<Vec<(Stmt, Pos)>, Vec<ParseDiagnostic>> {
    let toks = lex(text).map_err(|d| vec![d])?;
    let eof = Pos {
        line: text.lines().count().max(1),
        col: text.lines().last().map_or(1, |l| l.chars().count() + 1),
    };
    let mut p = Parser {
        toks: &toks,
        i: 0,
        eof,
    };
    let mut stmts = Vec::new();
    let mut errors = Vec::new();
    while p.peek().is_some() {
        let start = p.i;
        match p.stmt() {
            Ok(s) => stmts.push(s),
            Err(d) => {
                errors.push(d);
                if p.i == start {
                    p.i += 1;
                }
                p.recover();
            }
        }
    }
    if errors.is_empty() {
        Ok(stmts)
    } else {
        Err(errors)
    }
}

// ---------------------------------------------------------------------------
// Resolution

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().ok()?;
            let d: i64 = d.parse().ok()?;
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

/// Resolves a raw value against an outcome space shape, without checking membership.
fn resolve_value(v: &RawValue, space: &RawSpace) -> Result<Outcome, String> {
    match (space, v) {
        (RawSpace::Atoms, RawValue::Atom(a)) => Ok(Outcome::Atom(a.clone())),
        (RawSpace::Product(n), RawValue::Tuple(ls)) if ls.len() == *n => {
            Ok(Outcome::Tuple(ls.clone()))
        }
        (RawSpace::Vector(n), RawValue::Tuple(vs)) if vs.len() == *n => vs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number")))
            .collect::<Result<Vec<_>, _>>()
            .map(Outcome::Vector),
        (RawSpace::Atoms, _) => Err("expected an atom label".into()),
        (RawSpace::Product(n), _) => Err(format!("expected a tuple of {n} labels")),
        (RawSpace::Vector(n), _) => Err(format!("expected a vector of {n} numbers")),
    }
}

enum RawSpace {
    Atoms,
    Product(usize),
    Vector(usize),
}

fn raw_space(space: &OutcomeSpace) -> RawSpace {
    match space {
        OutcomeSpace::Atoms(_) => RawSpace::Atoms,
        OutcomeSpace::Product(cs) => RawSpace::Product(cs.len()),
        OutcomeSpace::Vector { dim, .. } => RawSpace::Vector(*dim),
    }
}

fn resolve_sel(raw: &RawSel, space: &OutcomeSpace) -> Result<SelectionFunction, String> {
    Ok(match raw {
        RawSel::ArgmaxOrder(vals) => {
            let shape = raw_space(space);
            let outs = vals
                .iter()
                .map(|v| resolve_value(v, &shape))
                .collect::<Result<Vec<_>, _>>()?;
            let ord = PreferenceOrder::ascending(outs).map_err(|e| e.to_string())?;
            if !ord.covers(space) {
                return Err("preference order must rank every outcome exactly once".into());
            }
            SelectionFunction::ArgmaxOrder(ord)
        }
        RawSel::ArgmaxCoord(i) => SelectionFunction::ArgmaxCoord(*i),
        RawSel::Fix(None) => SelectionFunction::Fix,
        RawSel::Fix(Some(i)) => SelectionFunction::FixProj(*i),
        RawSel::NonFix(None) => SelectionFunction::NonFix,
        RawSel::NonFix(Some(i)) => SelectionFunction::NonFixProj(*i),
        RawSel::Coord => SelectionFunction::Coord,
        RawSel::Target(i, v) => SelectionFunction::TargetCoord(*i, v.clone()),
        RawSel::Lex(a, b) => SelectionFunction::lex(resolve_sel(a, space)?, resolve_sel(b, space)?),
    })
}

/// Parses a standalone selection expression such as `lex(coord, target(coord: 1, value: B))`
/// against a known outcome space.
pub fn parse_selection(
    text: &str,
    space: &OutcomeSpace,
) -> Result<SelectionFunction, Vec<ParseDiagnostic>> {
    let toks = lex(text).map_err(|d| vec![d])?;
    let eof = Pos {
        line: 1,
        col: text.chars().count() + 1,
    };
    let mut p = Parser {
        toks: &toks,
        i: 0,
        eof,
    };
    let raw = p.sel().map_err(|d| vec![d])?;
    if p.peek().is_some() {
        return Err(vec![p.unexpected("end of expression")]);
    }
    resolve_sel(&raw, space).map_err(|m| {
        vec![diag(
            DiagnosticKind::TypeMismatch,
            Pos { line: 1, col: 1 },
            m,
        )]
    })
}

#[derive(Default)]
struct Decls {
    name: Option<(String, Pos)>,
    moves: Vec<(String, Vec<String>, Pos)>,
    outcomes: Option<(RawOutcomes, Pos)>,
    outcome_fn: Option<(RawOutcomeFn, Pos)>,
    players: BTreeMap<String, (RawSel, Pos)>,
}

fn collect(stmts: Vec<(Stmt, Pos)>, errors: &mut Vec<ParseDiagnostic>) -> Decls {
    let mut d = Decls::default();
    let dup = |what: &str, pos: Pos| {
        diag(
            DiagnosticKind::DuplicateDefinition,
            pos,
            format!("{what} declared twice"),
        )
    };
    for (stmt, pos) in stmts {
        match stmt {
            Stmt::Game(n) => {
                if d.name.is_some() {
                    errors.push(dup("game name", pos));
                } else {
                    d.name = Some((n, pos));
                }
            }
            Stmt::Moves(p, labels) => {
                if d.moves.iter().any(|(q, _, _)| *q == p) {
                    errors.push(dup(&format!("moves of `{p}`"), pos));
                } else {
                    d.moves.push((p, labels, pos));
                }
            }
            Stmt::Outcomes(o) => {
                if d.outcomes.is_some() {
                    errors.push(dup("outcome space", pos));
                } else {
                    d.outcomes = Some((o, pos));
                }
            }
            Stmt::OutcomeFn(f) => {
                if d.outcome_fn.is_some() {
                    errors.push(dup("outcome function", pos));
                } else {
                    d.outcome_fn = Some((f, pos));
                }
            }
            Stmt::Player(p, sel) => {
                if !d.moves.iter().any(|(q, _, _)| *q == p) {
                    errors.push(diag(
                        DiagnosticKind::SyntaxError,
                        pos,
                        format!("player `{p}` must follow its `moves` declaration"),
                    ));
                } else {
                    match d.players.entry(p) {
                        std::collections::btree_map::Entry::Occupied(e) => {
                            errors.push(dup(&format!("player `{}`", e.key()), pos));
                        }
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert((sel, pos));
                        }
                    }
                }
            }
        }
    }
    d
}

/// Parses and validates a game. On failure returns every error found, each
/// with a 1-based location.
pub fn parse_game(src: &GameSource) -> Result<ParsedGame, Vec<ParseDiagnostic>> {
    let stmts = parse_statements(&src.text)?;
    let mut errors = Vec::new();
    let d = collect(stmts, &mut errors);
    let origin = Pos { line: 1, col: 1 };

    let name = match (&d.name, &src.name) {
        (Some((n, _)), _) => n.clone(),
        (None, Some(n)) => n.clone(),
        (None, None) => {
            errors.push(diag(
                DiagnosticKind::MissingDefinition,
                origin,
                "missing `game <name>` declaration",
            ));
            String::new()
        }
    };

    let mut move_sets = Vec::new();
    for (p, labels, pos) in &d.moves {
        match MoveSet::new(labels.iter().cloned()) {
            Ok(m) => move_sets.push(m),
            Err(e) => errors.push(diag(
                DiagnosticKind::TypeMismatch,
                *pos,
                format!("moves of `{p}`: {e}"),
            )),
        }
        if !d.players.contains_key(p) {
            errors.push(diag(
                DiagnosticKind::MissingDefinition,
                *pos,
                format!("no `player {p} = ...` declaration"),
            ));
        }
    }
    if d.moves.is_empty() {
        errors.push(diag(
            DiagnosticKind::MissingDefinition,
            origin,
            "no `moves` declarations",
        ));
    }
    let Some((raw_outcomes, out_pos)) = &d.outcomes else {
        errors.push(diag(
            DiagnosticKind::MissingDefinition,
            origin,
            "missing `outcomes = ...` declaration",
        ));
        return Err(errors);
    };
    let Some((raw_fn, fn_pos)) = &d.outcome_fn else {
        errors.push(diag(
            DiagnosticKind::MissingDefinition,
            origin,
            "missing `outcome_fn = ...` declaration",
        ));
        return Err(errors);
    };
    if !errors.is_empty() {
        return Err(errors);
    }

    // Outcome table first: vector spaces take their values from it.
    let shape = match raw_outcomes {
        RawOutcomes::Moves => RawSpace::Product(move_sets.len()),
        RawOutcomes::Atoms(_) => RawSpace::Atoms,
        RawOutcomes::Vectors { dim, .. } => RawSpace::Vector(*dim),
    };
    let table = match raw_fn {
        RawOutcomeFn::Table { entries, close } => Some(resolve_table(
            entries,
            *close,
            &d.moves,
            &move_sets,
            &shape,
            &mut errors,
        )),
        _ => None,
    };
    let space = match raw_outcomes {
        RawOutcomes::Moves => OutcomeSpace::product(move_sets.clone()).map_err(|e| e.to_string()),
        RawOutcomes::Atoms(ls) => {
            OutcomeSpace::atoms(ls.iter().cloned()).map_err(|e| e.to_string())
        }
        RawOutcomes::Vectors {
            dim,
            values: Some(vs),
        } => vs
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number")))
            .collect::<Result<Vec<_>, _>>()
            .and_then(|vs| OutcomeSpace::vector(*dim, vs).map_err(|e| e.to_string())),
        RawOutcomes::Vectors { dim, values: None } => match &table {
            Some(Some(t)) => {
                let vals = t.iter().flat_map(|o| match o {
                    Outcome::Vector(vs) => vs.clone(),
                    _ => Vec::new(),
                });
                OutcomeSpace::vector(*dim, vals).map_err(|e| e.to_string())
            }
            Some(None) => return Err(errors),
            None => Err(
                "`vectors` outcomes need a `table` outcome function or a `values { ... }` clause"
                    .into(),
            ),
        },
    };
    let space = match space {
        Ok(s) => s,
        Err(m) => {
            errors.push(diag(DiagnosticKind::TypeMismatch, *out_pos, m));
            return Err(errors);
        }
    };

    let outcome_fn = match (raw_fn, table) {
        (RawOutcomeFn::Majority, _) => OutcomeFn::Majority,
        (RawOutcomeFn::Identity, _) => OutcomeFn::Identity,
        (_, Some(Some(t))) => {
            for (o, e) in t.iter().zip(table_entry_positions(raw_fn)) {
                if !space.contains(o) {
                    errors.push(diag(
                        DiagnosticKind::TypeMismatch,
                        e,
                        format!("outcome {o} is not in the outcome space"),
                    ));
                }
            }
            OutcomeFn::Table(t)
        }
        _ => return Err(errors),
    };

    let mut players = Vec::new();
    for ((p, _, _), moves) in d.moves.iter().zip(move_sets) {
        let (raw, pos) = &d.players[p];
        match resolve_sel(raw, &space) {
            Ok(sel) => {
                if let Err(e) = sel.check(&moves, &space) {
                    errors.push(diag(
                        DiagnosticKind::TypeMismatch,
                        *pos,
                        format!("player `{p}`: {e}"),
                    ));
                } else if sel.may_be_empty() {
                    errors.push(diag(
                        DiagnosticKind::TypeMismatch,
                        *pos,
                        format!("player `{p}`: `{sel}` may select no move; wrap it in lex(...)"),
                    ));
                }
                players.push(Player::new(p.clone(), moves, sel));
            }
            Err(m) => errors.push(diag(
                DiagnosticKind::TypeMismatch,
                *pos,
                format!("player `{p}`: {m}"),
            )),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let game = Game::new(name, players, space, outcome_fn).map_err(|e| {
        let (kind, pos) = match &e {
            GameError::Player { player, .. } => (DiagnosticKind::TypeMismatch, d.players[player].1),
            _ => (DiagnosticKind::TypeMismatch, *fn_pos),
        };
        vec![diag(kind, pos, e.to_string())]
    })?;

    let mut warnings = Vec::new();
    if let (OutcomeSpace::Atoms(atoms), OutcomeFn::Table(t)) = (game.outcomes(), game.outcome_fn())
    {
        for a in atoms.labels() {
            if !t.contains(&Outcome::Atom(a.clone())) {
                warnings.push(ParseDiagnostic {
                    severity: Severity::Warning,
                    kind: DiagnosticKind::UnreachableOutcome,
                    message: format!("outcome `{a}` is never produced by the outcome table"),
                    line: out_pos.line,
                    column: out_pos.col,
                });
            }
        }
    }
    Ok(ParsedGame { game, warnings })
}

fn table_entry_positions(raw: &RawOutcomeFn) -> Vec<Pos> {
    match raw {
        RawOutcomeFn::Table { entries, .. } => entries.iter().map(|e| e.pos).collect(),
        _ => Vec::new(),
    }
}

/// Returns the outcome per profile in lexicographic order, or `None` after
/// pushing diagnostics.
fn resolve_table(
    entries: &[TableEntry],
    close: Pos,
    decls: &[(String, Vec<String>, Pos)],
    moves: &[MoveSet],
    shape: &RawSpace,
    errors: &mut Vec<ParseDiagnostic>,
) -> Option<Vec<Outcome>> {
    let before = errors.len();
    let mut cells: BTreeMap<usize, Outcome> = BTreeMap::new();
    for e in entries {
        if e.key.len() != moves.len() {
            errors.push(diag(
                DiagnosticKind::ArityError,
                e.pos,
                format!(
                    "profile has {} moves, expected {}",
                    e.key.len(),
                    moves.len()
                ),
            ));
            continue;
        }
        let mut flat = 0usize;
        let mut ok = true;
        for ((label, m), (p, _, _)) in e.key.iter().zip(moves).zip(decls) {
            match m.index_of(label) {
                Some(k) => flat = flat * m.len() + k,
                None => {
                    errors.push(diag(
                        DiagnosticKind::TypeMismatch,
                        e.pos,
                        format!("`{label}` is not a move of `{p}`"),
                    ));
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        match resolve_value(&e.value, shape) {
            Ok(o) => {
                if cells.insert(flat, o).is_some() {
                    errors.push(diag(
                        DiagnosticKind::DuplicateDefinition,
                        e.pos,
                        format!("profile ({}) listed twice", e.key.join(",")),
                    ));
                }
            }
            Err(m) => errors.push(diag(DiagnosticKind::TypeMismatch, e.pos, m)),
        }
    }
    if errors.len() > before {
        return None;
    }
    let total: usize = moves.iter().map(MoveSet::len).product();
    let missing: Vec<String> = (0..total)
        .filter(|k| !cells.contains_key(k))
        .take(4)
        .map(|mut k| {
            let mut ls = vec![""; moves.len()];
            for (slot, m) in ls.iter_mut().zip(moves).rev() {
                *slot = m.label(k % m.len());
                k /= m.len();
            }
            format!("({})", ls.join(","))
        })
        .collect();
    if !missing.is_empty() {
        errors.push(diag(
            DiagnosticKind::ArityError,
            close,
            format!(
                "outcome table covers {} of {total} profiles; missing {}{}",
                cells.len(),
                missing.join(", "),
                if total - cells.len() > missing.len() {
                    ", ..."
                } else {
                    ""
                }
            ),
        ));
        return None;
    }
    Some(cells.into_values().collect())
}

// ---------------------------------------------------------------------------
// Rendering

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("not expressible in the game format: {0}")]
    NotExpressible(String),
}

fn is_word(s: &str) -> bool {
    lex(s).is_ok_and(|t| t.len() == 1 && matches!(&t[0].tok, Tok::Word(w) if w == s))
}

fn check_word(s: &str, what: &str) -> Result<(), RenderError> {
    if is_word(s) {
        Ok(())
    } else {
        Err(RenderError::NotExpressible(format!(
            "{what} `{s}` is not a plain label"
        )))
    }
}

fn render_sel(e: &SelectionFunction) -> Result<String, RenderError> {
    match e {
        SelectionFunction::Table(_) | SelectionFunction::Preimage(_) => Err(
            RenderError::NotExpressible(format!("selection function `{e}`")),
        ),
        SelectionFunction::TargetCoord(_, v) => {
            check_word(v, "target value")?;
            Ok(e.to_string())
        }
        SelectionFunction::Lex(a, b) => Ok(format!("lex({}, {})", render_sel(a)?, render_sel(b)?)),
        _ => Ok(e.to_string()),
    }
}

/// Renders a game in the `.hog` format. `parse_game` of the result yields a
/// structurally equal game.
pub fn render_game(g: &Game) -> Result<GameSource, RenderError> {
    use std::fmt::Write;
    let mut out = String::new();
    check_word(g.name(), "game name")?;
    writeln!(out, "game {}", g.name()).unwrap();
    for p in g.players() {
        check_word(&p.name, "player name")?;
        for l in p.moves.labels() {
            check_word(l, "move label")?;
        }
        writeln!(
            out,
            "moves {} = {{ {} }}",
            p.name,
            p.moves.labels().join(", ")
        )
        .unwrap();
    }
    let move_product =
        OutcomeSpace::Product(g.players().iter().map(|p| (*p.moves).clone()).collect());
    match g.outcomes() {
        OutcomeSpace::Atoms(a) => {
            for l in a.labels() {
                check_word(l, "outcome label")?;
            }
            writeln!(out, "outcomes = {{ {} }}", a.labels().join(", ")).unwrap();
        }
        s @ OutcomeSpace::Product(_) if *s == move_product => {
            writeln!(out, "outcomes = moves").unwrap()
        }
        OutcomeSpace::Product(_) => {
            return Err(RenderError::NotExpressible(
                "product space other than the product of the move sets".into(),
            ))
        }
        OutcomeSpace::Vector { dim, values } => {
            let derived: BTreeSet<Rational> = match g.outcome_fn() {
                OutcomeFn::Table(t) => t
                    .iter()
                    .flat_map(|o| match o {
                        Outcome::Vector(vs) => vs.clone(),
                        _ => Vec::new(),
                    })
                    .collect(),
                _ => BTreeSet::new(),
            };
            if derived.iter().eq(values.iter()) {
                writeln!(out, "outcomes = vectors {dim}").unwrap();
            } else {
                let vs: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                writeln!(
                    out,
                    "outcomes = vectors {dim} values {{ {} }}",
                    vs.join(", ")
                )
                .unwrap();
            }
        }
    }
    match g.outcome_fn() {
        OutcomeFn::Majority => writeln!(out, "outcome_fn = majority").unwrap(),
        OutcomeFn::Identity => writeln!(out, "outcome_fn = identity").unwrap(),
        OutcomeFn::Table(t) => {
            writeln!(out, "outcome_fn = table {{").unwrap();
            let profiles = g.profiles(u64::MAX).expect("unbounded budget");
            for (s, o) in profiles.zip(t) {
                if let Outcome::Tuple(ls) = o {
                    for l in ls {
                        check_word(l, "outcome label")?;
                    }
                }
                writeln!(out, "  ({}) -> {o}", g.profile_labels(&s).join(", ")).unwrap();
            }
            writeln!(out, "}}").unwrap();
        }
    }
    for p in g.players() {
        writeln!(out, "player {} = {}", p.name, render_sel(&p.selection)?).unwrap();
    }
    Ok(GameSource::named(out, g.name()))
}
