//! Finite game contexts, selection functions and quantifiers.
//!
//! A game context is a total map `p : X -> R` from one player's moves to
//! outcomes. A selection function picks the moves a player considers good in a
//! context, a quantifier picks the outcomes. Everything here is multi-valued
//! and canonically ordered: move sets are `BTreeSet<usize>` of declaration
//! indices, outcome sets are `Vec<Outcome>` sorted by position in the outcome
//! space.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;

use crate::error::HofError;

pub type Rational = Rational64;

/// Indices into a [`MoveSet`], ordered by declaration.
pub type MoveIds = BTreeSet<usize>;

/// Default cap on the number of contexts `|R|^|X|` the law checkers enumerate.
pub const DEFAULT_CONTEXT_BUDGET: u64 = 1_000_000;

/// A nonempty, duplicate-free, ordered set of labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoveSet {
    labels: Vec<String>,
}

impl MoveSet {
    pub fn new<I, S>(labels: I) -> Result<Self, HofError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(HofError::InvalidSet("label set is empty".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(HofError::InvalidSet(format!("duplicate label `{l}`")));
            }
        }
        Ok(Self { labels })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same labels, ignoring order.
    pub fn same_labels(&self, other: &MoveSet) -> bool {
        self.len() == other.len() && self.labels.iter().all(|l| other.index_of(l).is_some())
    }

    pub fn all(&self) -> MoveIds {
        (0..self.len()).collect()
    }
}

/// A single outcome value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Atom(String),
    Tuple(Vec<String>),
    Vector(Vec<Rational>),
}

impl Outcome {
    pub fn atom(label: impl Into<String>) -> Self {
        Outcome::Atom(label.into())
    }

    pub fn tuple<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Outcome::Tuple(labels.into_iter().map(Into::into).collect())
    }

    pub fn ints<I: IntoIterator<Item = i64>>(values: I) -> Self {
        Outcome::Vector(values.into_iter().map(Rational::from_integer).collect())
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Atom(a) => f.write_str(a),
            Outcome::Tuple(ls) => write!(f, "({})", ls.join(",")),
            Outcome::Vector(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// The set `R` of outcomes a context may map into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutcomeSpace {
    Atoms(MoveSet),
    Product(Vec<MoveSet>),
    /// `values` is sorted ascending and duplicate-free.
    Vector {
        dim: usize,
        values: Vec<Rational>,
    },
}

impl OutcomeSpace {
    pub fn atoms<I, S>(labels: I) -> Result<Self, HofError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ok(OutcomeSpace::Atoms(MoveSet::new(labels)?))
    }

    pub fn product(coords: Vec<MoveSet>) -> Result<Self, HofError> {
        if coords.is_empty() {
            return Err(HofError::InvalidSet(
                "product space needs at least one coordinate".into(),
            ));
        }
        Ok(OutcomeSpace::Product(coords))
    }

    pub fn vector(
        dim: usize,
        values: impl IntoIterator<Item = Rational>,
    ) -> Result<Self, HofError> {
        if dim == 0 {
            return Err(HofError::InvalidSet(
                "vector space needs dimension >= 1".into(),
            ));
        }
        let values: BTreeSet<Rational> = values.into_iter().collect();
        if values.is_empty() {
            return Err(HofError::InvalidSet(
                "vector space needs at least one value".into(),
            ));
        }
        Ok(OutcomeSpace::Vector {
            dim,
            values: values.into_iter().collect(),
        })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            OutcomeSpace::Atoms(_) => "atoms",
            OutcomeSpace::Product(_) => "product",
            OutcomeSpace::Vector { .. } => "vector",
        }
    }

    /// Number of coordinates for product and vector spaces.
    pub fn arity(&self) -> Option<usize> {
        match self {
            OutcomeSpace::Atoms(_) => None,
            OutcomeSpace::Product(cs) => Some(cs.len()),
            OutcomeSpace::Vector { dim, .. } => Some(*dim),
        }
    }

    /// `|R|`, or `None` if it does not fit in a `u128`.
    pub fn size(&self) -> Option<u128> {
        match self {
            OutcomeSpace::Atoms(a) => Some(a.len() as u128),
            OutcomeSpace::Product(cs) => cs
                .iter()
                .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128)),
            OutcomeSpace::Vector { dim, values } => {
                (values.len() as u128).checked_pow(u32::try_from(*dim).ok()?)
            }
        }
    }

    /// Position of `o` in the canonical enumeration of the space.
    pub fn index_of(&self, o: &Outcome) -> Option<u128> {
        match (self, o) {
            (OutcomeSpace::Atoms(a), Outcome::Atom(l)) => a.index_of(l).map(|i| i as u128),
            (OutcomeSpace::Product(cs), Outcome::Tuple(ls)) if ls.len() == cs.len() => {
                let mut idx = 0u128;
                for (c, l) in cs.iter().zip(ls) {
                    idx = idx * c.len() as u128 + c.index_of(l)? as u128;
                }
                Some(idx)
            }
            (OutcomeSpace::Vector { dim, values }, Outcome::Vector(vs)) if vs.len() == *dim => {
                let mut idx = 0u128;
                for v in vs {
                    idx = idx.checked_mul(values.len() as u128)?
                        + values.binary_search(v).ok()? as u128;
                }
                Some(idx)
            }
            _ => None,
        }
    }

    pub fn contains(&self, o: &Outcome) -> bool {
        self.index_of(o).is_some()
    }

    /// Inverse of [`OutcomeSpace::index_of`]; the last coordinate varies fastest.
    pub fn outcome_at(&self, mut idx: u128) -> Outcome {
        match self {
            OutcomeSpace::Atoms(a) => Outcome::Atom(a.label(idx as usize).to_string()),
            OutcomeSpace::Product(cs) => {
                let mut ls = vec![String::new(); cs.len()];
                for (slot, c) in ls.iter_mut().zip(cs).rev() {
                    *slot = c.label((idx % c.len() as u128) as usize).to_string();
                    idx /= c.len() as u128;
                }
                Outcome::Tuple(ls)
            }
            OutcomeSpace::Vector { dim, values } => {
                let n = values.len() as u128;
                let mut vs = vec![Rational::from_integer(0); *dim];
                for slot in vs.iter_mut().rev() {
                    *slot = values[(idx % n) as usize];
                    idx /= n;
                }
                Outcome::Vector(vs)
            }
        }
    }

    /// Sorts and deduplicates outcomes into canonical order. Outcomes outside
    /// the space sort last, in their natural order.
    pub fn canonical(&self, mut outs: Vec<Outcome>) -> Vec<Outcome> {
        outs.sort_by(|a, b| {
            let ka = self.index_of(a).unwrap_or(u128::MAX);
            let kb = self.index_of(b).unwrap_or(u128::MAX);
            ka.cmp(&kb).then_with(|| a.cmp(b))
        });
        outs.dedup();
        outs
    }
}

/// A total map from a move set into an outcome space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameContext {
    domain: Arc<MoveSet>,
    codomain: Arc<OutcomeSpace>,
    table: Vec<Outcome>,
}

impl GameContext {
    /// `table[k]` is the outcome of move `k`.
    pub fn new(
        domain: Arc<MoveSet>,
        codomain: Arc<OutcomeSpace>,
        table: Vec<Outcome>,
    ) -> Result<Self, HofError> {
        if table.len() != domain.len() {
            return Err(HofError::InvalidContext(format!(
                "context table has {} entries for {} moves",
                table.len(),
                domain.len()
            )));
        }
        if let Some(o) = table.iter().find(|o| !codomain.contains(o)) {
            return Err(HofError::InvalidContext(format!(
                "outcome {o} is not in the {} outcome space",
                codomain.kind_name()
            )));
        }
        Ok(Self {
            domain,
            codomain,
            table,
        })
    }

    pub(crate) fn new_unchecked(
        domain: Arc<MoveSet>,
        codomain: Arc<OutcomeSpace>,
        table: Vec<Outcome>,
    ) -> Self {
        debug_assert_eq!(domain.len(), table.len());
        Self {
            domain,
            codomain,
            table,
        }
    }

    pub fn domain(&self) -> &MoveSet {
        &self.domain
    }

    pub fn codomain(&self) -> &OutcomeSpace {
        &self.codomain
    }

    pub fn table(&self) -> &[Outcome] {
        &self.table
    }

    pub fn apply(&self, mv: usize) -> &Outcome {
        &self.table[mv]
    }

    pub fn labels_of<'a>(&'a self, moves: &MoveIds) -> Vec<&'a str> {
        moves.iter().map(|&m| self.domain.label(m)).collect()
    }

    /// Moves whose outcome lies in `good`.
    pub fn preimage(&self, good: &[Outcome]) -> MoveIds {
        (0..self.table.len())
            .filter(|&x| good.contains(&self.table[x]))
            .collect()
    }

    /// Outcomes of the given moves, canonically ordered.
    pub fn push_forward(&self, moves: &MoveIds) -> Vec<Outcome> {
        self.codomain
            .canonical(moves.iter().map(|&x| self.table[x].clone()).collect())
    }
}

impl fmt::Display for GameContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, o) in self.table.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}", self.domain.label(k), o)?;
        }
        f.write_str("}")
    }
}

/// `Im(p)`.
pub fn image(p: &GameContext) -> Vec<Outcome> {
    p.codomain.canonical(p.table.clone())
}

/// A strict total order on outcomes, best first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceOrder {
    ranking: Vec<Outcome>,
}

impl PreferenceOrder {
    pub fn new(best_first: Vec<Outcome>) -> Result<Self, HofError> {
        if best_first.is_empty() {
            return Err(HofError::InvalidSet("preference order is empty".into()));
        }
        let mut seen = HashSet::new();
        for o in &best_first {
            if !seen.insert(o) {
                return Err(HofError::InvalidSet(format!("outcome {o} ranked twice")));
            }
        }
        Ok(Self {
            ranking: best_first,
        })
    }

    /// Builds an order from a worst-to-best listing, as written `B < A`.
    pub fn ascending(worst_first: Vec<Outcome>) -> Result<Self, HofError> {
        let mut r = worst_first;
        r.reverse();
        Self::new(r)
    }

    pub fn ranking(&self) -> &[Outcome] {
        &self.ranking
    }

    /// 0 is best.
    pub fn rank(&self, o: &Outcome) -> Option<usize> {
        self.ranking.iter().position(|r| r == o)
    }

    pub fn covers(&self, space: &OutcomeSpace) -> bool {
        match space.size() {
            Some(n) if n == self.ranking.len() as u128 => {
                self.ranking.iter().all(|o| space.contains(o))
            }
            _ => false,
        }
    }

    fn rank_checked(&self, o: &Outcome) -> Result<usize, HofError> {
        self.rank(o)
            .ok_or_else(|| HofError::IncompleteOrder(o.to_string()))
    }
}

/// Explicit tabulation of a selection function, keyed by the context table.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SelectionTable {
    entries: BTreeMap<Vec<Outcome>, MoveIds>,
}

impl SelectionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, context: &[Outcome], good: MoveIds) -> Result<(), HofError> {
        if good.is_empty() {
            return Err(HofError::InvalidSet(
                "table selection entries must be nonempty".into(),
            ));
        }
        if good.iter().any(|&m| m >= context.len()) {
            return Err(HofError::InvalidSet(
                "table selection names a move outside the context".into(),
            ));
        }
        self.entries.insert(context.to_vec(), good);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn lookup(&self, p: &GameContext) -> Result<MoveIds, HofError> {
        self.entries
            .get(p.table())
            .cloned()
            .ok_or_else(|| HofError::TableMiss(p.to_string()))
    }
}

/// Selection functions `(X -> R) -> P(X)` built from a fixed palette.
///
/// Coordinate indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectionFunction {
    ArgmaxOrder(PreferenceOrder),
    ArgmaxCoord(usize),
    Fix,
    FixProj(usize),
    NonFix,
    NonFixProj(usize),
    Coord,
    /// May evaluate to the empty set; only meaningful inside [`SelectionFunction::Lex`].
    TargetCoord(usize, String),
    Lex(Box<SelectionFunction>, Box<SelectionFunction>),
    Table(SelectionTable),
    /// `{ x | p(x) in f(p) }`, the selection function induced by a quantifier.
    Preimage(Box<Quantifier>),
}

/// Quantifiers `(X -> R) -> P(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantifier {
    MaxOrder(PreferenceOrder),
    MaxCoord(usize),
    FixQ,
    /// `{ p(x) | x in e(p) }`, the smallest quantifier `e` attains.
    Lifted(Box<SelectionFunction>),
}

impl SelectionFunction {
    pub fn argmax_order(order: PreferenceOrder) -> Self {
        SelectionFunction::ArgmaxOrder(order)
    }

    pub fn argmax_coord(i: usize) -> Self {
        SelectionFunction::ArgmaxCoord(i)
    }

    pub fn fix() -> Self {
        SelectionFunction::Fix
    }

    pub fn fix_proj(i: usize) -> Self {
        SelectionFunction::FixProj(i)
    }

    pub fn nonfix() -> Self {
        SelectionFunction::NonFix
    }

    pub fn nonfix_proj(i: usize) -> Self {
        SelectionFunction::NonFixProj(i)
    }

    pub fn coord() -> Self {
        SelectionFunction::Coord
    }

    pub fn target_coord(i: usize, value: impl Into<String>) -> Self {
        SelectionFunction::TargetCoord(i, value.into())
    }

    pub fn lex(primary: SelectionFunction, secondary: SelectionFunction) -> Self {
        SelectionFunction::Lex(Box::new(primary), Box::new(secondary))
    }

    /// Tabulates `self` on every context `X -> R`.
    pub fn tabulate(
        &self,
        domain: &Arc<MoveSet>,
        codomain: &Arc<OutcomeSpace>,
        budget: u64,
    ) -> Result<SelectionFunction, HofError> {
        let mut table = SelectionTable::new();
        for p in contexts(domain, codomain, budget)? {
            let good = self.eval(&p)?;
            let good = if good.is_empty() { domain.all() } else { good };
            table.insert(p.table(), good)?;
        }
        Ok(SelectionFunction::Table(table))
    }

    /// True if evaluation can return the empty set on a compatible context.
    pub fn may_be_empty(&self) -> bool {
        match self {
            SelectionFunction::TargetCoord(..) => true,
            SelectionFunction::Preimage(q) => q.may_be_empty(),
            _ => false,
        }
    }

    /// Checks that the selection function can be applied to contexts `domain -> codomain`.
    pub fn check(&self, domain: &MoveSet, codomain: &OutcomeSpace) -> Result<(), HofError> {
        match self {
            SelectionFunction::ArgmaxOrder(ord) => check_order(ord, codomain),
            SelectionFunction::ArgmaxCoord(i) => vector_coord(codomain, *i).map(|_| ()),
            SelectionFunction::Fix | SelectionFunction::NonFix => self_map(domain, codomain),
            SelectionFunction::FixProj(i) | SelectionFunction::NonFixProj(i) => {
                let coord = product_coord(codomain, *i)?;
                if coord.same_labels(domain) {
                    Ok(())
                } else {
                    Err(HofError::TypeMismatch(format!(
                        "coordinate {i} of the outcome space does not range over the player's moves"
                    )))
                }
            }
            SelectionFunction::Coord => match codomain {
                OutcomeSpace::Product(cs) if cs.len() >= 2 => Ok(()),
                _ => Err(HofError::TypeMismatch(
                    "coord needs a product outcome space with at least two coordinates".into(),
                )),
            },
            SelectionFunction::TargetCoord(i, v) => {
                let coord = product_coord(codomain, *i)?;
                if coord.index_of(v).is_some() {
                    Ok(())
                } else {
                    Err(HofError::TypeMismatch(format!(
                        "`{v}` is not a value of coordinate {i}"
                    )))
                }
            }
            SelectionFunction::Lex(a, b) => {
                a.check(domain, codomain)?;
                b.check(domain, codomain)
            }
            SelectionFunction::Table(_) => Ok(()),
            SelectionFunction::Preimage(q) => q.check(domain, codomain),
        }
    }

    pub fn eval(&self, p: &GameContext) -> Result<MoveIds, HofError> {
        let all = || p.domain().all();
        let or_all = |s: MoveIds| if s.is_empty() { all() } else { s };
        let moves = 0..p.domain().len();
        Ok(match self {
            SelectionFunction::ArgmaxOrder(ord) => {
                let ranks = p
                    .table()
                    .iter()
                    .map(|o| ord.rank_checked(o))
                    .collect::<Result<Vec<_>, _>>()?;
                let best = ranks.iter().copied().min().unwrap_or(0);
                moves.filter(|&x| ranks[x] == best).collect()
            }
            SelectionFunction::ArgmaxCoord(i) => {
                vector_coord(p.codomain(), *i)?;
                let vals: Vec<Rational> =
                    p.table().iter().map(|o| vector_component(o, *i)).collect();
                let best = vals.iter().copied().max().expect("nonempty domain");
                moves.filter(|&x| vals[x] == best).collect()
            }
            SelectionFunction::Fix => {
                self_map(p.domain(), p.codomain())?;
                or_all(moves.filter(|&x| is_self_atom(p, x)).collect())
            }
            SelectionFunction::NonFix => {
                self_map(p.domain(), p.codomain())?;
                or_all(moves.filter(|&x| !is_self_atom(p, x)).collect())
            }
            SelectionFunction::FixProj(i) => {
                self.check(p.domain(), p.codomain())?;
                or_all(
                    moves
                        .filter(|&x| tuple_component(p.apply(x), *i) == p.domain().label(x))
                        .collect(),
                )
            }
            SelectionFunction::NonFixProj(i) => {
                self.check(p.domain(), p.codomain())?;
                or_all(
                    moves
                        .filter(|&x| tuple_component(p.apply(x), *i) != p.domain().label(x))
                        .collect(),
                )
            }
            SelectionFunction::Coord => {
                self.check(p.domain(), p.codomain())?;
                or_all(
                    moves
                        .filter(|&x| {
                            tuple_component(p.apply(x), 1) == tuple_component(p.apply(x), 2)
                        })
                        .collect(),
                )
            }
            SelectionFunction::TargetCoord(i, v) => {
                self.check(p.domain(), p.codomain())?;
                moves
                    .filter(|&x| tuple_component(p.apply(x), *i) == v)
                    .collect()
            }
            SelectionFunction::Lex(a, b) => {
                let first = a.eval(p)?;
                let second = b.eval(p)?;
                let both: MoveIds = first.intersection(&second).copied().collect();
                if !both.is_empty() {
                    both
                } else {
                    or_all(first)
                }
            }
            SelectionFunction::Table(t) => t.lookup(p)?,
            SelectionFunction::Preimage(q) => p.preimage(&q.eval(p)?),
        })
    }
}

impl Quantifier {
    pub fn max_order(order: PreferenceOrder) -> Self {
        Quantifier::MaxOrder(order)
    }

    pub fn max_coord(i: usize) -> Self {
        Quantifier::MaxCoord(i)
    }

    pub fn fix() -> Self {
        Quantifier::FixQ
    }

    pub fn may_be_empty(&self) -> bool {
        match self {
            Quantifier::Lifted(e) => e.may_be_empty(),
            _ => false,
        }
    }

    pub fn check(&self, domain: &MoveSet, codomain: &OutcomeSpace) -> Result<(), HofError> {
        match self {
            Quantifier::MaxOrder(ord) => check_order(ord, codomain),
            Quantifier::MaxCoord(i) => vector_coord(codomain, *i).map(|_| ()),
            Quantifier::FixQ => self_map(domain, codomain),
            Quantifier::Lifted(e) => e.check(domain, codomain),
        }
    }

    pub fn eval(&self, p: &GameContext) -> Result<Vec<Outcome>, HofError> {
        Ok(match self {
            Quantifier::MaxOrder(ord) => {
                let mut best: Option<(usize, &Outcome)> = None;
                for o in p.table() {
                    let r = ord.rank_checked(o)?;
                    if best.is_none_or(|(b, _)| r < b) {
                        best = Some((r, o));
                    }
                }
                best.map(|(_, o)| vec![o.clone()]).unwrap_or_default()
            }
            Quantifier::MaxCoord(i) => {
                vector_coord(p.codomain(), *i)?;
                let best = p
                    .table()
                    .iter()
                    .map(|o| vector_component(o, *i))
                    .max()
                    .expect("nonempty domain");
                image(p)
                    .into_iter()
                    .filter(|o| vector_component(o, *i) == best)
                    .collect()
            }
            Quantifier::FixQ => p.push_forward(&SelectionFunction::Fix.eval(p)?),
            Quantifier::Lifted(e) => p.push_forward(&e.eval(p)?),
        })
    }
}

impl fmt::Display for SelectionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectionFunction::ArgmaxOrder(ord) => {
                let asc: Vec<String> = ord.ranking().iter().rev().map(|o| o.to_string()).collect();
                write!(f, "argmax(order: {})", asc.join(" < "))
            }
            SelectionFunction::ArgmaxCoord(i) => write!(f, "argmax(coord: {i})"),
            SelectionFunction::Fix => f.write_str("fix"),
            SelectionFunction::FixProj(i) => write!(f, "fix(coord: {i})"),
            SelectionFunction::NonFix => f.write_str("nonfix"),
            SelectionFunction::NonFixProj(i) => write!(f, "nonfix(coord: {i})"),
            SelectionFunction::Coord => f.write_str("coord"),
            SelectionFunction::TargetCoord(i, v) => write!(f, "target(coord: {i}, value: {v})"),
            SelectionFunction::Lex(a, b) => write!(f, "lex({a}, {b})"),
            SelectionFunction::Table(t) => write!(f, "<table of {} contexts>", t.len()),
            SelectionFunction::Preimage(q) => write!(f, "preimage({q})"),
        }
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantifier::MaxOrder(ord) => {
                let asc: Vec<String> = ord.ranking().iter().rev().map(|o| o.to_string()).collect();
                write!(f, "max(order: {})", asc.join(" < "))
            }
            Quantifier::MaxCoord(i) => write!(f, "max(coord: {i})"),
            Quantifier::FixQ => f.write_str("fixq"),
            Quantifier::Lifted(e) => write!(f, "lift({e})"),
        }
    }
}

fn check_order(ord: &PreferenceOrder, codomain: &OutcomeSpace) -> Result<(), HofError> {
    match ord.ranking().iter().find(|o| !codomain.contains(o)) {
        Some(o) => Err(HofError::TypeMismatch(format!(
            "ranked outcome {o} is not in the {} outcome space",
            codomain.kind_name()
        ))),
        None => Ok(()),
    }
}

fn self_map(domain: &MoveSet, codomain: &OutcomeSpace) -> Result<(), HofError> {
    match codomain {
        OutcomeSpace::Atoms(a) if a.same_labels(domain) => Ok(()),
        _ => Err(HofError::TypeMismatch(
            "fixpoint selection needs the outcome atoms to equal the move set".into(),
        )),
    }
}

fn product_coord(codomain: &OutcomeSpace, i: usize) -> Result<&MoveSet, HofError> {
    match codomain {
        OutcomeSpace::Product(cs) => match i.checked_sub(1).and_then(|k| cs.get(k)) {
            Some(c) => Ok(c),
            None => Err(HofError::CoordinateOutOfRange {
                index: i,
                arity: cs.len(),
            }),
        },
        other => Err(HofError::TypeMismatch(format!(
            "projection needs a product outcome space, found {}",
            other.kind_name()
        ))),
    }
}

fn vector_coord(codomain: &OutcomeSpace, i: usize) -> Result<usize, HofError> {
    match codomain {
        OutcomeSpace::Vector { dim, .. } if (1..=*dim).contains(&i) => Ok(i),
        OutcomeSpace::Vector { dim, .. } => Err(HofError::CoordinateOutOfRange {
            index: i,
            arity: *dim,
        }),
        other => Err(HofError::TypeMismatch(format!(
            "coordinate argmax needs a vector outcome space, found {}",
            other.kind_name()
        ))),
    }
}

fn is_self_atom(p: &GameContext, x: usize) -> bool {
    matches!(p.apply(x), Outcome::Atom(a) if a == p.domain().label(x))
}

fn tuple_component(o: &Outcome, i: usize) -> &str {
    match o {
        Outcome::Tuple(ls) => &ls[i - 1],
        _ => unreachable!("shape checked before projection"),
    }
}

fn vector_component(o: &Outcome, i: usize) -> Rational {
    match o {
        Outcome::Vector(vs) => vs[i - 1],
        _ => unreachable!("shape checked before projection"),
    }
}

pub fn eval_selection(e: &SelectionFunction, p: &GameContext) -> Result<MoveIds, HofError> {
    e.eval(p)
}

pub fn eval_quantifier(f: &Quantifier, p: &GameContext) -> Result<Vec<Outcome>, HofError> {
    f.eval(p)
}

/// `e` to the quantifier of outcomes of its good moves.
pub fn lift_selection(e: &SelectionFunction) -> Quantifier {
    Quantifier::Lifted(Box::new(e.clone()))
}

/// `f` to the selection function of moves leading to good outcomes.
pub fn lift_quantifier(f: &Quantifier) -> SelectionFunction {
    SelectionFunction::Preimage(Box::new(f.clone()))
}

/// The closure `e` lifted twice: all moves sharing an outcome with a good move.
pub fn closure_of(e: &SelectionFunction) -> SelectionFunction {
    lift_quantifier(&lift_selection(e))
}

/// Iterates every total context `domain -> codomain` in lexicographic order,
/// first move most significant. Fails if `|R|^|X|` exceeds `budget`.
pub fn contexts(
    domain: &Arc<MoveSet>,
    codomain: &Arc<OutcomeSpace>,
    budget: u64,
) -> Result<ContextIter, HofError> {
    let r = codomain.size();
    let total = r.and_then(|r| r.checked_pow(u32::try_from(domain.len()).ok()?));
    match total {
        Some(t) if t <= budget as u128 => Ok(ContextIter {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            digits: vec![0; domain.len()],
            radix: r.unwrap_or(0),
            done: t == 0,
        }),
        _ => Err(HofError::BudgetExceeded {
            needed: total,
            budget,
        }),
    }
}

pub struct ContextIter {
    domain: Arc<MoveSet>,
    codomain: Arc<OutcomeSpace>,
    digits: Vec<u128>,
    radix: u128,
    done: bool,
}

impl Iterator for ContextIter {
    type Item = GameContext;

    fn next(&mut self) -> Option<GameContext> {
        if self.done {
            return None;
        }
        let table = self
            .digits
            .iter()
            .map(|&d| self.codomain.outcome_at(d))
            .collect();
        let ctx =
            GameContext::new_unchecked(Arc::clone(&self.domain), Arc::clone(&self.codomain), table);
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.radix {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(ctx)
    }
}

/// A context in which a good move shares its outcome with a move that is not good.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosednessWitness {
    pub context: GameContext,
    pub good: usize,
    pub excluded: usize,
}

impl fmt::Display for ClosednessWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.context.domain();
        write!(
            f,
            "p = {}: {} is selected, {} is not, both reach {}",
            self.context,
            d.label(self.good),
            d.label(self.excluded),
            self.context.apply(self.good)
        )
    }
}

/// A context in which a good move's outcome is not a good outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttainmentWitness {
    pub context: GameContext,
    pub good: usize,
    pub outcome: Outcome,
}

impl fmt::Display for AttainmentWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p = {}: {} is selected but its outcome {} is not",
            self.context,
            self.context.domain().label(self.good),
            self.outcome
        )
    }
}

/// Finds the first context over `X -> R` in which `e` is not closed, if any.
pub fn is_closed(
    e: &SelectionFunction,
    domain: &Arc<MoveSet>,
    codomain: &Arc<OutcomeSpace>,
    budget: u64,
) -> Result<Option<ClosednessWitness>, HofError> {
    for p in contexts(domain, codomain, budget)? {
        let good = e.eval(&p)?;
        for &x in &good {
            let hit = (0..domain.len()).find(|x2| !good.contains(x2) && p.apply(*x2) == p.apply(x));
            if let Some(x2) = hit {
                return Ok(Some(ClosednessWitness {
                    context: p,
                    good: x,
                    excluded: x2,
                }));
            }
        }
    }
    Ok(None)
}

/// Finds the first context over `X -> R` in which `e` fails to attain `f`, if any.
pub fn attains(
    e: &SelectionFunction,
    f: &Quantifier,
    domain: &Arc<MoveSet>,
    codomain: &Arc<OutcomeSpace>,
    budget: u64,
) -> Result<Option<AttainmentWitness>, HofError> {
    for p in contexts(domain, codomain, budget)? {
        let good = e.eval(&p)?;
        let outs = f.eval(&p)?;
        if let Some(&x) = good.iter().find(|&&x| !outs.contains(p.apply(x))) {
            let outcome = p.apply(x).clone();
            return Ok(Some(AttainmentWitness {
                context: p,
                good: x,
                outcome,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Arc<MoveSet> {
        Arc::new(MoveSet::new(["A", "B"]).unwrap())
    }

    fn ab_atoms() -> Arc<OutcomeSpace> {
        Arc::new(OutcomeSpace::atoms(["A", "B"]).unwrap())
    }

    fn atom_ctx(outs: &[&str]) -> GameContext {
        GameContext::new(
            ab(),
            ab_atoms(),
            outs.iter().map(|o| Outcome::atom(*o)).collect(),
        )
        .unwrap()
    }

    fn ids(v: &[usize]) -> MoveIds {
        v.iter().copied().collect()
    }

    fn b_below_a() -> PreferenceOrder {
        PreferenceOrder::ascending(vec![Outcome::atom("B"), Outcome::atom("A")]).unwrap()
    }

    fn vec_ctx(moves: &[&str], outs: &[&[i64]]) -> GameContext {
        let vals: BTreeSet<Rational> = outs
            .iter()
            .flat_map(|o| o.iter().map(|&v| Rational::from_integer(v)))
            .collect();
        let space = OutcomeSpace::vector(outs[0].len(), vals).unwrap();
        GameContext::new(
            Arc::new(MoveSet::new(moves.iter().copied()).unwrap()),
            Arc::new(space),
            outs.iter()
                .map(|o| Outcome::ints(o.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    fn bf_product_ctx(outs: &[(&str, &str)]) -> GameContext {
        let bf = MoveSet::new(["B", "F"]).unwrap();
        let space = OutcomeSpace::product(vec![bf.clone(), bf.clone()]).unwrap();
        GameContext::new(
            Arc::new(bf),
            Arc::new(space),
            outs.iter().map(|(a, b)| Outcome::tuple([*a, *b])).collect(),
        )
        .unwrap()
    }

    #[test]
    fn move_set_rejects_duplicates_and_empty() {
        assert!(MoveSet::new(["A", "A"]).is_err());
        assert!(MoveSet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn image_cases() {
        assert_eq!(
            image(&atom_ctx(&["A", "B"])),
            vec![Outcome::atom("A"), Outcome::atom("B")]
        );
        assert_eq!(image(&atom_ctx(&["A", "A"])), vec![Outcome::atom("A")]);
        let abc = Arc::new(MoveSet::new(["a", "b", "c"]).unwrap());
        let r = Arc::new(OutcomeSpace::atoms(["r1", "r2"]).unwrap());
        let p = GameContext::new(
            abc,
            r,
            vec![
                Outcome::atom("r1"),
                Outcome::atom("r1"),
                Outcome::atom("r2"),
            ],
        )
        .unwrap();
        assert_eq!(image(&p), vec![Outcome::atom("r1"), Outcome::atom("r2")]);
    }

    #[test]
    fn context_rejects_foreign_outcome() {
        let bad = GameContext::new(
            ab(),
            ab_atoms(),
            vec![Outcome::atom("A"), Outcome::atom("C")],
        );
        assert!(matches!(bad, Err(HofError::InvalidContext(_))));
    }

    #[test]
    fn fix_examples() {
        assert_eq!(
            SelectionFunction::Fix.eval(&atom_ctx(&["A", "A"])).unwrap(),
            ids(&[0])
        );
        assert_eq!(
            SelectionFunction::Fix.eval(&atom_ctx(&["B", "A"])).unwrap(),
            ids(&[0, 1])
        );
    }

    #[test]
    fn argmax_order_examples() {
        let e = SelectionFunction::argmax_order(b_below_a());
        assert_eq!(e.eval(&atom_ctx(&["A", "B"])).unwrap(), ids(&[0]));
        assert_eq!(e.eval(&atom_ctx(&["B", "B"])).unwrap(), ids(&[0, 1]));
        let a_below_b =
            PreferenceOrder::ascending(vec![Outcome::atom("A"), Outcome::atom("B")]).unwrap();
        assert_eq!(
            SelectionFunction::argmax_order(a_below_b)
                .eval(&atom_ctx(&["A", "B"]))
                .unwrap(),
            ids(&[1])
        );
    }

    #[test]
    fn argmax_order_incomplete() {
        let only_a = PreferenceOrder::new(vec![Outcome::atom("A")]).unwrap();
        let err = SelectionFunction::argmax_order(only_a).eval(&atom_ctx(&["A", "B"]));
        assert!(matches!(err, Err(HofError::IncompleteOrder(_))));
    }

    #[test]
    fn max_order_examples() {
        let q = Quantifier::max_order(b_below_a());
        assert_eq!(
            q.eval(&atom_ctx(&["B", "B"])).unwrap(),
            vec![Outcome::atom("B")]
        );
        assert_eq!(
            q.eval(&atom_ctx(&["A", "B"])).unwrap(),
            vec![Outcome::atom("A")]
        );
    }

    #[test]
    fn argmax_coord_examples() {
        let p = vec_ctx(&["a", "b"], &[&[1, 0], &[0, 1]]);
        assert_eq!(
            SelectionFunction::argmax_coord(1).eval(&p).unwrap(),
            ids(&[0])
        );
        assert_eq!(
            SelectionFunction::argmax_coord(2).eval(&p).unwrap(),
            ids(&[1])
        );
        let tie = vec_ctx(&["a", "b"], &[&[1, 0], &[1, 9]]);
        assert_eq!(
            SelectionFunction::argmax_coord(1).eval(&tie).unwrap(),
            ids(&[0, 1])
        );
        assert!(matches!(
            SelectionFunction::argmax_coord(3).eval(&p),
            Err(HofError::CoordinateOutOfRange { index: 3, arity: 2 })
        ));
        assert!(matches!(
            SelectionFunction::argmax_coord(1).eval(&atom_ctx(&["A", "B"])),
            Err(HofError::TypeMismatch(_))
        ));
    }

    #[test]
    fn max_coord_examples() {
        let p = vec_ctx(&["a", "b"], &[&[3, 0], &[1, 9]]);
        assert_eq!(
            Quantifier::max_coord(1).eval(&p).unwrap(),
            vec![Outcome::ints([3, 0])]
        );
        let tie = vec_ctx(&["a", "b"], &[&[1, 0], &[1, 9]]);
        let sel = lift_quantifier(&Quantifier::max_coord(1));
        assert_eq!(sel.eval(&tie).unwrap(), ids(&[0, 1]));
    }

    #[test]
    fn nonfix_examples() {
        assert_eq!(
            SelectionFunction::NonFix
                .eval(&atom_ctx(&["A", "B"]))
                .unwrap(),
            ids(&[0, 1])
        );
        assert_eq!(
            SelectionFunction::NonFix
                .eval(&atom_ctx(&["A", "A"]))
                .unwrap(),
            ids(&[1])
        );
    }

    #[test]
    fn fix_proj_example() {
        let eg = MoveSet::new(["E", "G"]).unwrap();
        let space = OutcomeSpace::product(vec![eg.clone(), eg.clone()]).unwrap();
        let p = GameContext::new(
            Arc::new(eg),
            Arc::new(space),
            vec![Outcome::tuple(["E", "G"]), Outcome::tuple(["G", "G"])],
        )
        .unwrap();
        assert_eq!(SelectionFunction::fix_proj(2).eval(&p).unwrap(), ids(&[1]));
        assert_eq!(
            SelectionFunction::nonfix_proj(2).eval(&p).unwrap(),
            ids(&[0])
        );
        assert!(matches!(
            SelectionFunction::fix_proj(3).eval(&p),
            Err(HofError::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn fix_rejects_product_codomain() {
        let p = bf_product_ctx(&[("B", "B"), ("F", "B")]);
        assert!(matches!(
            SelectionFunction::Fix.eval(&p),
            Err(HofError::TypeMismatch(_))
        ));
    }

    #[test]
    fn coord_and_target_examples() {
        let p = bf_product_ctx(&[("B", "B"), ("F", "B")]);
        assert_eq!(SelectionFunction::coord().eval(&p).unwrap(), ids(&[0]));
        assert_eq!(
            SelectionFunction::target_coord(1, "B").eval(&p).unwrap(),
            ids(&[0])
        );
        let constant = bf_product_ctx(&[("B", "B"), ("B", "B")]);
        assert!(SelectionFunction::target_coord(2, "F")
            .eval(&constant)
            .unwrap()
            .is_empty());
        assert!(matches!(
            SelectionFunction::target_coord(1, "X").eval(&p),
            Err(HofError::TypeMismatch(_))
        ));
    }

    #[test]
    fn lex_examples() {
        let wife = SelectionFunction::lex(
            SelectionFunction::coord(),
            SelectionFunction::target_coord(1, "B"),
        );
        assert_eq!(
            wife.eval(&bf_product_ctx(&[("B", "B"), ("F", "B")]))
                .unwrap(),
            ids(&[0])
        );
        assert_eq!(
            wife.eval(&bf_product_ctx(&[("B", "F"), ("F", "F")]))
                .unwrap(),
            ids(&[1])
        );
        let both_empty = SelectionFunction::lex(
            SelectionFunction::target_coord(2, "F"),
            SelectionFunction::target_coord(2, "F"),
        );
        assert_eq!(
            both_empty
                .eval(&bf_product_ctx(&[("B", "B"), ("B", "B")]))
                .unwrap(),
            ids(&[0, 1])
        );
        let p = atom_ctx(&["B", "A"]);
        let fix = SelectionFunction::Fix;
        assert_eq!(
            SelectionFunction::lex(fix.clone(), fix.clone())
                .eval(&p)
                .unwrap(),
            fix.eval(&p).unwrap()
        );
    }

    #[test]
    fn lift_examples() {
        let fix = SelectionFunction::Fix;
        assert_eq!(
            lift_selection(&fix).eval(&atom_ctx(&["A", "A"])).unwrap(),
            vec![Outcome::atom("A")]
        );
        let am = SelectionFunction::argmax_order(b_below_a());
        assert_eq!(
            lift_selection(&am).eval(&atom_ctx(&["B", "B"])).unwrap(),
            vec![Outcome::atom("B")]
        );
        assert_eq!(
            lift_selection(&SelectionFunction::NonFix)
                .eval(&atom_ctx(&["A", "A"]))
                .unwrap(),
            vec![Outcome::atom("A")]
        );
        let mx = lift_quantifier(&Quantifier::max_order(b_below_a()));
        assert_eq!(mx.eval(&atom_ctx(&["A", "B"])).unwrap(), ids(&[0]));
        assert_eq!(
            lift_quantifier(&Quantifier::FixQ)
                .eval(&atom_ctx(&["A", "A"]))
                .unwrap(),
            ids(&[0, 1])
        );
    }

    #[test]
    fn closure_of_fix_adds_preimage() {
        assert_eq!(
            closure_of(&SelectionFunction::Fix)
                .eval(&atom_ctx(&["A", "A"]))
                .unwrap(),
            ids(&[0, 1])
        );
    }

    #[test]
    fn contexts_enumerate_in_order() {
        let all: Vec<String> = contexts(&ab(), &ab_atoms(), 100)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            all,
            [
                "{A->A, B->A}",
                "{A->A, B->B}",
                "{A->B, B->A}",
                "{A->B, B->B}"
            ]
        );
        assert!(matches!(
            contexts(&ab(), &ab_atoms(), 3),
            Err(HofError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn fix_not_closed_with_witness() {
        let w = is_closed(
            &SelectionFunction::Fix,
            &ab(),
            &ab_atoms(),
            DEFAULT_CONTEXT_BUDGET,
        )
        .unwrap()
        .expect("fix is not closed");
        assert_eq!(w.context, atom_ctx(&["A", "A"]));
        assert_eq!((w.good, w.excluded), (0, 1));
    }

    #[test]
    fn argmax_closed() {
        let am = SelectionFunction::argmax_order(b_below_a());
        assert!(is_closed(&am, &ab(), &ab_atoms(), DEFAULT_CONTEXT_BUDGET)
            .unwrap()
            .is_none());
        let tab = closure_of(&SelectionFunction::Fix)
            .tabulate(&ab(), &ab_atoms(), 100)
            .unwrap();
        assert!(is_closed(&tab, &ab(), &ab_atoms(), DEFAULT_CONTEXT_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn attainment_examples() {
        let b = DEFAULT_CONTEXT_BUDGET;
        let am = SelectionFunction::argmax_order(b_below_a());
        let mx = Quantifier::max_order(b_below_a());
        assert!(attains(&am, &mx, &ab(), &ab_atoms(), b).unwrap().is_none());
        assert!(attains(
            &SelectionFunction::Fix,
            &Quantifier::FixQ,
            &ab(),
            &ab_atoms(),
            b
        )
        .unwrap()
        .is_none());
        // Exhaustive: nonfix attains fixq on all four contexts over {A,B}.
        assert!(attains(
            &SelectionFunction::NonFix,
            &Quantifier::FixQ,
            &ab(),
            &ab_atoms(),
            b
        )
        .unwrap()
        .is_none());
        let w = attains(&SelectionFunction::NonFix, &mx, &ab(), &ab_atoms(), b)
            .unwrap()
            .expect("fails");
        assert_eq!(w.context, atom_ctx(&["A", "B"]));
        assert_eq!(w.outcome, Outcome::atom("B"));
    }

    #[test]
    fn table_selection_misses_unknown_context() {
        let mut t = SelectionTable::new();
        t.insert(&[Outcome::atom("A"), Outcome::atom("A")], ids(&[0]))
            .unwrap();
        let e = SelectionFunction::Table(t);
        assert_eq!(e.eval(&atom_ctx(&["A", "A"])).unwrap(), ids(&[0]));
        assert!(matches!(
            e.eval(&atom_ctx(&["B", "A"])),
            Err(HofError::TableMiss(_))
        ));
    }

    #[test]
    fn outcome_space_index_round_trip() {
        let bf = MoveSet::new(["B", "F"]).unwrap();
        let prod = OutcomeSpace::product(vec![bf.clone(), bf]).unwrap();
        let vecs = OutcomeSpace::vector(3, [0, 1, 2].map(Rational::from_integer)).unwrap();
        for space in [prod, vecs] {
            let n = space.size().unwrap();
            for k in 0..n {
                assert_eq!(space.index_of(&space.outcome_at(k)), Some(k));
            }
        }
    }
}
