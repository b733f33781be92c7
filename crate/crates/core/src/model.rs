//! Standard models: explicit finite-state transition systems (LTS, DTMC, MDP)
//! with integer transition weights, their `.sm` text format, validation and
//! basic graph queries.
//!
//! Probabilities are never stored as floats. A DTMC/MDP transition carries a
//! nonnegative integer weight; the probability of a transition is its weight
//! divided by the total outgoing weight of its state (DTMC) or of its
//! state/action pair (MDP). A zero-weight transition is permitted and
//! semantically absent.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use sha2::{Digest, Sha256};
use thiserror::Error;

/// Dense state index assigned in declaration order.
pub type StateId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Lts,
    Dtmc,
    Mdp,
}

impl ModelKind {
    fn from_token(tok: &str) -> Option<ModelKind> {
        match tok {
            "lts" => Some(ModelKind::Lts),
            "dtmc" => Some(ModelKind::Dtmc),
            "mdp" => Some(ModelKind::Mdp),
            _ => None,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::Lts => write!(f, "lts"),
            ModelKind::Dtmc => write!(f, "dtmc"),
            ModelKind::Mdp => write!(f, "mdp"),
        }
    }
}

/// One transition. Shape depends on the model kind: LTS carries an optional
/// action and no weight, DTMC a weight and no action, MDP both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub source: StateId,
    pub action: Option<String>,
    pub weight: Option<u64>,
    pub target: StateId,
}

/// A validated finite-state model. Immutable after construction; all
/// operations are pure, so models can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct StandardModel {
    kind: ModelKind,
    states: Vec<String>,
    index: HashMap<String, StateId>,
    init: StateId,
    labels: BTreeMap<String, BTreeSet<StateId>>,
    transitions: Vec<Transition>,
    outgoing: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("line {line}, col {col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: negative weight `{token}`")]
    NegativeWeight { line: usize, token: String },
    #[error("line {line}: duplicate init declaration")]
    DuplicateInit { line: usize },
    #[error("missing init declaration")]
    MissingInit,
    #[error("first declaration must be `kind lts|dtmc|mdp`")]
    MissingKind,
    #[error("line {line}: {kind} transitions take the form `{expected}`")]
    TransitionShape {
        line: usize,
        kind: ModelKind,
        expected: &'static str,
    },
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("transition shape does not match model kind {0}")]
    BadTransition(ModelKind),
}

/// Structure digest used as the verification-task cache key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelDigest([u8; 32]);

impl fmt::Display for ModelDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            write!(f, "{:02x}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModelDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModelDigest({})", self)
    }
}

impl StandardModel {
    /// Builds and validates a model from parts. State ids in `transitions`,
    /// `init` and `labels` must index into `states`.
    pub fn new(
        kind: ModelKind,
        states: Vec<String>,
        init: StateId,
        labels: BTreeMap<String, BTreeSet<StateId>>,
        transitions: Vec<Transition>,
    ) -> Result<StandardModel, ModelError> {
        let n = states.len();
        let check = |id: StateId| -> Result<(), ModelError> {
            if id < n {
                Ok(())
            } else {
                Err(ModelError::UnknownState(format!("#{id}")))
            }
        };
        check(init)?;
        for set in labels.values() {
            for &s in set {
                check(s)?;
            }
        }
        for t in &transitions {
            check(t.source)?;
            check(t.target)?;
            let shape_ok = match kind {
                ModelKind::Lts => t.weight.is_none(),
                ModelKind::Dtmc => t.weight.is_some() && t.action.is_none(),
                ModelKind::Mdp => t.weight.is_some() && t.action.is_some(),
            };
            if !shape_ok {
                return Err(ModelError::BadTransition(kind));
            }
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in states.iter().enumerate() {
            index.insert(name.clone(), i);
        }
        let mut outgoing = vec![Vec::new(); n];
        for (i, t) in transitions.iter().enumerate() {
            outgoing[t.source].push(i);
        }
        Ok(StandardModel {
            kind,
            states,
            index,
            init,
            labels,
            transitions,
            outgoing,
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_name(&self, id: StateId) -> &str {
        &self.states[id]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied()
    }

    pub fn init(&self) -> StateId {
        self.init
    }

    pub fn labels(&self) -> &BTreeMap<String, BTreeSet<StateId>> {
        &self.labels
    }

    pub fn label_states(&self, label: &str) -> Option<&BTreeSet<StateId>> {
        self.labels.get(label)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn outgoing(&self, s: StateId) -> impl Iterator<Item = &Transition> {
        self.outgoing[s].iter().map(|&i| &self.transitions[i])
    }

    /// Outgoing transitions that are semantically present: for weighted kinds
    /// a zero-weight transition is absent.
    pub fn live_outgoing(&self, s: StateId) -> impl Iterator<Item = &Transition> {
        self.outgoing(s).filter(|t| t.weight != Some(0))
    }

    /// Forward closure from the initial state over live transitions.
    pub fn reachable_states(&self) -> BTreeSet<StateId> {
        let mut seen = vec![false; self.states.len()];
        let mut queue = VecDeque::new();
        seen[self.init] = true;
        queue.push_back(self.init);
        while let Some(s) = queue.pop_front() {
            for t in self.live_outgoing(s) {
                if !seen[t.target] {
                    seen[t.target] = true;
                    queue.push_back(t.target);
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter_map(|(i, &v)| v.then_some(i))
            .collect()
    }

    /// Reachable states with no live outgoing transition.
    pub fn deadlock_states(&self) -> BTreeSet<StateId> {
        self.reachable_states()
            .into_iter()
            .filter(|&s| self.live_outgoing(s).next().is_none())
            .collect()
    }

    /// Digest of the normalized structure: sorted labels, transitions merged
    /// per (source, action, target) and sorted, zero-weight entries dropped.
    /// Invariant under comment, whitespace and declaration-order changes that
    /// do not change the semantics.
    pub fn canonical_hash(&self) -> ModelDigest {
        let mut h = Sha256::new();
        let put = |h: &mut Sha256, s: &str| {
            h.update((s.len() as u64).to_le_bytes());
            h.update(s.as_bytes());
        };
        put(&mut h, "kind");
        put(&mut h, &self.kind.to_string());
        put(&mut h, "init");
        put(&mut h, &self.states[self.init]);
        for (label, set) in &self.labels {
            put(&mut h, "label");
            put(&mut h, label);
            let mut names: Vec<&str> = set.iter().map(|&s| self.states[s].as_str()).collect();
            names.sort_unstable();
            for name in names {
                put(&mut h, name);
            }
        }
        let mut merged: BTreeMap<(&str, Option<&str>, &str), u64> = BTreeMap::new();
        for t in &self.transitions {
            let key = (
                self.states[t.source].as_str(),
                t.action.as_deref(),
                self.states[t.target].as_str(),
            );
            *merged.entry(key).or_insert(0) += t.weight.unwrap_or(0);
        }
        for ((src, action, dst), total) in merged {
            if self.kind != ModelKind::Lts && total == 0 {
                continue;
            }
            put(&mut h, "trans");
            put(&mut h, src);
            put(&mut h, action.unwrap_or(""));
            put(&mut h, dst);
            if self.kind != ModelKind::Lts {
                h.update(total.to_le_bytes());
            }
        }
        ModelDigest(h.finalize().into())
    }

    /// Renders the model back to `.sm` text. Re-parsing yields a model with
    /// the same canonical hash (state ids may be renumbered).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("kind {}\n", self.kind));
        out.push_str(&format!("init {}\n", self.states[self.init]));
        for (label, set) in &self.labels {
            out.push_str(&format!("label {}", label));
            for &s in set {
                out.push(' ');
                out.push_str(&self.states[s]);
            }
            out.push('\n');
        }
        for t in &self.transitions {
            out.push_str("trans ");
            out.push_str(&self.states[t.source]);
            if let Some(a) = &t.action {
                out.push(' ');
                out.push_str(a);
            }
            out.push(' ');
            out.push_str(&self.states[t.target]);
            if let Some(w) = t.weight {
                out.push_str(&format!(" {}", w));
            }
            out.push('\n');
        }
        out
    }
}

/// Verifiable properties. `Reach` is boolean on LTS and probabilistic on
/// DTMC; `ReachMin`/`ReachMax` are valid only on MDPs; `DeadlockFree` on any
/// kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Reach(String),
    ReachMin(String),
    ReachMax(String),
    DeadlockFree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed property `{0}`: expected `reach <label>`, `reachmin <label>`, `reachmax <label>` or `deadlockfree`")]
pub struct PropertyError(pub String);

impl Property {
    pub fn parse(s: &str) -> Result<Property, PropertyError> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks.as_slice() {
            ["reach", l] => Ok(Property::Reach(l.to_string())),
            ["reachmin", l] => Ok(Property::ReachMin(l.to_string())),
            ["reachmax", l] => Ok(Property::ReachMax(l.to_string())),
            ["deadlockfree"] => Ok(Property::DeadlockFree),
            _ => Err(PropertyError(s.to_string())),
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            Property::Reach(l) | Property::ReachMin(l) | Property::ReachMax(l) => Some(l),
            Property::DeadlockFree => None,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Reach(l) => write!(f, "reach {}", l),
            Property::ReachMin(l) => write!(f, "reachmin {}", l),
            Property::ReachMax(l) => write!(f, "reachmax {}", l),
            Property::DeadlockFree => write!(f, "deadlockfree"),
        }
    }
}

/// A token with its 1-based source position.
pub(crate) struct Tok<'a> {
    pub text: &'a str,
    pub line: usize,
    pub col: usize,
}

/// Splits text into comment-free, whitespace-separated token lines.
/// Shared by the `.sm` and `.mm` parsers.
pub(crate) fn token_lines(text: &str) -> Vec<Vec<Tok<'_>>> {
    let mut lines = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut toks = Vec::new();
        let mut chars = content.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            toks.push(Tok {
                text: &content[start..end],
                line: lineno + 1,
                col: start + 1,
            });
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    lines
}

/// Incremental model builder used by the parser and by template
/// instantiation; states are interned densely in first-mention order.
pub(crate) struct ModelBuilder {
    kind: ModelKind,
    states: Vec<String>,
    index: HashMap<String, StateId>,
    init: Option<StateId>,
    labels: BTreeMap<String, BTreeSet<StateId>>,
    transitions: Vec<Transition>,
}

impl ModelBuilder {
    pub fn new(kind: ModelKind) -> ModelBuilder {
        ModelBuilder {
            kind,
            states: Vec::new(),
            index: HashMap::new(),
            init: None,
            labels: BTreeMap::new(),
            transitions: Vec::new(),
        }
    }

    pub fn intern(&mut self, name: &str) -> StateId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.states.len();
        self.states.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn set_init(&mut self, name: &str, line: usize) -> Result<(), ModelError> {
        if self.init.is_some() {
            return Err(ModelError::DuplicateInit { line });
        }
        let id = self.intern(name);
        self.init = Some(id);
        Ok(())
    }

    pub fn add_label(&mut self, label: &str, states: &[&str]) {
        let ids: Vec<StateId> = states.iter().map(|s| self.intern(s)).collect();
        self.labels.entry(label.to_string()).or_default().extend(ids);
    }

    pub fn add_transition(
        &mut self,
        source: &str,
        action: Option<&str>,
        target: &str,
        weight: Option<u64>,
    ) {
        let source = self.intern(source);
        let target = self.intern(target);
        self.transitions.push(Transition {
            source,
            action: action.map(str::to_string),
            weight,
            target,
        });
    }

    pub fn finish(self) -> Result<StandardModel, ModelError> {
        let init = self.init.ok_or(ModelError::MissingInit)?;
        StandardModel::new(self.kind, self.states, init, self.labels, self.transitions)
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ModelError {
    ModelError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

pub(crate) fn parse_weight(tok: &Tok<'_>) -> Result<u64, ModelError> {
    if tok.text.starts_with('-') && tok.text[1..].chars().all(|c| c.is_ascii_digit()) {
        return Err(ModelError::NegativeWeight {
            line: tok.line,
            token: tok.text.to_string(),
        });
    }
    tok.text
        .parse::<u64>()
        .map_err(|_| syntax(tok.line, tok.col, format!("expected weight, found `{}`", tok.text)))
}

pub(crate) fn parse_kind_line(lines: &[Vec<Tok<'_>>]) -> Result<ModelKind, ModelError> {
    let first = lines.first().ok_or(ModelError::MissingKind)?;
    if first[0].text != "kind" || first.len() != 2 {
        return Err(ModelError::MissingKind);
    }
    ModelKind::from_token(first[1].text)
        .ok_or_else(|| syntax(first[1].line, first[1].col, format!("unknown kind `{}`", first[1].text)))
}

/// Parses `.sm` text into a validated model. Dense state ids are assigned in
/// first-mention order.
pub fn parse_model(text: &str) -> Result<StandardModel, ModelError> {
    let lines = token_lines(text);
    let kind = parse_kind_line(&lines)?;
    let mut b = ModelBuilder::new(kind);
    for toks in lines.iter().skip(1) {
        let head = &toks[0];
        match head.text {
            "init" => {
                if toks.len() != 2 {
                    return Err(syntax(head.line, head.col, "init takes one state"));
                }
                b.set_init(toks[1].text, head.line)?;
            }
            "label" => {
                if toks.len() < 3 {
                    return Err(syntax(
                        head.line,
                        head.col,
                        "label takes a name and at least one state",
                    ));
                }
                let states: Vec<&str> = toks[2..].iter().map(|t| t.text).collect();
                b.add_label(toks[1].text, &states);
            }
            "trans" => {
                let rest = &toks[1..];
                match kind {
                    ModelKind::Lts => match rest {
                        [src, dst] => b.add_transition(src.text, None, dst.text, None),
                        [src, act, dst] => {
                            b.add_transition(src.text, Some(act.text), dst.text, None)
                        }
                        _ => {
                            return Err(ModelError::TransitionShape {
                                line: head.line,
                                kind,
                                expected: "trans <src> [<action>] <dst>",
                            })
                        }
                    },
                    ModelKind::Dtmc => match rest {
                        [src, dst, w] => {
                            let w = parse_weight(w)?;
                            b.add_transition(src.text, None, dst.text, Some(w));
                        }
                        _ => {
                            return Err(ModelError::TransitionShape {
                                line: head.line,
                                kind,
                                expected: "trans <src> <dst> <weight>",
                            })
                        }
                    },
                    ModelKind::Mdp => match rest {
                        [src, act, dst, w] => {
                            let w = parse_weight(w)?;
                            b.add_transition(src.text, Some(act.text), dst.text, Some(w));
                        }
                        _ => {
                            return Err(ModelError::TransitionShape {
                                line: head.line,
                                kind,
                                expected: "trans <src> <action> <dst> <weight>",
                            })
                        }
                    },
                }
            }
            "kind" => {
                return Err(syntax(head.line, head.col, "duplicate kind declaration"));
            }
            other => {
                return Err(syntax(head.line, head.col, format!("unknown directive `{other}`")));
            }
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(m: &StandardModel, ids: &BTreeSet<StateId>) -> BTreeSet<String> {
        ids.iter().map(|&i| m.state_name(i).to_string()).collect()
    }

    fn set(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_dtmc() {
        let m = parse_model("kind dtmc\ninit s0\nlabel goal s1\ntrans s0 s1 1\ntrans s0 s2 1").unwrap();
        assert_eq!(m.kind(), ModelKind::Dtmc);
        assert_eq!(m.state_count(), 3);
        assert_eq!(m.state_name(m.init()), "s0");
        assert_eq!(m.label_states("goal").unwrap().len(), 1);
    }

    #[test]
    fn parses_lts_self_loop() {
        let m = parse_model("kind lts\ninit s0\ntrans s0 a s0").unwrap();
        assert_eq!(m.kind(), ModelKind::Lts);
        assert_eq!(m.state_count(), 1);
        assert_eq!(m.transitions().len(), 1);
        assert_eq!(m.transitions()[0].action.as_deref(), Some("a"));
    }

    #[test]
    fn rejects_negative_weight() {
        let err = parse_model("kind dtmc\ninit s0\ntrans s0 s1 -2").unwrap_err();
        assert!(matches!(err, ModelError::NegativeWeight { line: 3, .. }));
    }

    #[test]
    fn rejects_duplicate_init() {
        let err = parse_model("kind dtmc\ninit s0\ninit s1\ntrans s0 s1 1").unwrap_err();
        assert!(matches!(err, ModelError::DuplicateInit { line: 3 }));
    }

    #[test]
    fn rejects_missing_init() {
        assert!(matches!(
            parse_model("kind dtmc\ntrans s0 s1 1"),
            Err(ModelError::MissingInit)
        ));
    }

    #[test]
    fn rejects_shape_mismatch() {
        let err = parse_model("kind dtmc\ninit s0\ntrans s0 s1").unwrap_err();
        assert!(matches!(err, ModelError::TransitionShape { .. }));
        let err = parse_model("kind mdp\ninit s0\ntrans s0 s1 1").unwrap_err();
        assert!(matches!(err, ModelError::TransitionShape { .. }));
    }

    #[test]
    fn rejects_empty_label() {
        let err = parse_model("kind dtmc\ninit s0\nlabel goal\ntrans s0 s0 1").unwrap_err();
        assert!(matches!(err, ModelError::Syntax { line: 3, .. }));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let m = parse_model("# header\nkind lts\n\ninit s0  # trailing\ntrans s0 s0\n").unwrap();
        assert_eq!(m.state_count(), 1);
    }

    #[test]
    fn reachable_single_state() {
        let m = parse_model("kind lts\ninit s0").unwrap();
        assert_eq!(names(&m, &m.reachable_states()), set(&["s0"]));
    }

    #[test]
    fn reachable_chain() {
        let m = parse_model("kind lts\ninit s0\ntrans s0 s1\ntrans s1 s2").unwrap();
        assert_eq!(names(&m, &m.reachable_states()), set(&["s0", "s1", "s2"]));
    }

    #[test]
    fn zero_weight_transition_is_absent() {
        let m = parse_model("kind dtmc\ninit s0\ntrans s0 s1 0\ntrans s0 s2 1").unwrap();
        assert_eq!(names(&m, &m.reachable_states()), set(&["s0", "s2"]));
    }

    #[test]
    fn deadlock_absorbing_goal() {
        let m = parse_model("kind dtmc\ninit s0\nlabel goal g\ntrans s0 g 1").unwrap();
        assert_eq!(names(&m, &m.deadlock_states()), set(&["g"]));
    }

    #[test]
    fn deadlock_none_with_self_loops() {
        let m = parse_model("kind dtmc\ninit s0\ntrans s0 s1 1\ntrans s1 s1 1\ntrans s0 s0 1").unwrap();
        assert!(m.deadlock_states().is_empty());
    }

    #[test]
    fn unreachable_sink_is_not_a_deadlock() {
        let m = parse_model("kind dtmc\ninit s0\ntrans s0 s0 1\ntrans s1 s2 1").unwrap();
        assert!(m.deadlock_states().is_empty());
    }

    #[test]
    fn deadlocks_subset_of_reachable() {
        let m = parse_model("kind dtmc\ninit s0\ntrans s0 s1 1\ntrans s2 s3 1").unwrap();
        let reach = m.reachable_states();
        for d in m.deadlock_states() {
            assert!(reach.contains(&d));
        }
    }

    #[test]
    fn hash_ignores_label_line_order() {
        let a = parse_model("kind dtmc\ninit s0\nlabel g s1\nlabel h s2\ntrans s0 s1 1\ntrans s0 s2 1").unwrap();
        let b = parse_model("kind dtmc\ninit s0\nlabel h s2\nlabel g s1\ntrans s0 s1 1\ntrans s0 s2 1").unwrap();
        assert_eq!(a.canonical_hash(), b.canonical_hash());
    }

    #[test]
    fn hash_distinguishes_weights() {
        let a = parse_model("kind dtmc\ninit s0\ntrans s0 s1 2").unwrap();
        let b = parse_model("kind dtmc\ninit s0\ntrans s0 s1 3").unwrap();
        assert_ne!(a.canonical_hash(), b.canonical_hash());
    }

    #[test]
    fn hash_ignores_transition_line_order() {
        // Permuting transition lines changes dense-id assignment but not the
        // structure.
        let a = parse_model("kind dtmc\ninit s0\nlabel g s2\ntrans s0 s1 1\ntrans s0 s2 2\ntrans s1 s2 1").unwrap();
        let b = parse_model("kind dtmc\ninit s0\nlabel g s2\ntrans s1 s2 1\ntrans s0 s2 2\ntrans s0 s1 1").unwrap();
        assert_eq!(a.canonical_hash(), b.canonical_hash());
    }

    #[test]
    fn hash_merges_parallel_edges() {
        let a = parse_model("kind dtmc\ninit s0\ntrans s0 s1 1\ntrans s0 s1 1").unwrap();
        let b = parse_model("kind dtmc\ninit s0\ntrans s0 s1 2").unwrap();
        assert_eq!(a.canonical_hash(), b.canonical_hash());
    }

    #[test]
    fn text_round_trip_preserves_structure() {
        let m = parse_model("kind mdp\ninit s0\nlabel g s2\ntrans s0 a s1 1\ntrans s0 a s2 2\ntrans s0 b s2 1").unwrap();
        let again = parse_model(&m.to_text()).unwrap();
        assert_eq!(m.canonical_hash(), again.canonical_hash());
        assert_eq!(m.state_count(), again.state_count());
    }

    #[test]
    fn reachability_is_monotone_under_added_transitions() {
        let base = "kind lts\ninit s0\ntrans s0 s1\ntrans s2 s3";
        let m = parse_model(base).unwrap();
        let m2 = parse_model(&format!("{base}\ntrans s1 s2")).unwrap();
        let before = names(&m, &m.reachable_states());
        let after = names(&m2, &m2.reachable_states());
        assert!(before.is_subset(&after));
    }

    #[test]
    fn property_parse_and_display() {
        for s in ["reach g", "reachmin g", "reachmax g", "deadlockfree"] {
            assert_eq!(Property::parse(s).unwrap().to_string(), s);
        }
        assert!(Property::parse("until g").is_err());
        assert!(Property::parse("reach").is_err());
    }
}
