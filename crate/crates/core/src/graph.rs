//! Finite edge-labeled directed graphs and their basic constructions.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prefix marking the reversed copy of a label in the bar-graph.
pub const BAR_PREFIX: &str = "~";
/// Prefix marking vertices introduced by internal constructions.
pub const FRESH_PREFIX: &str = "__";

/// A vertex name or label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Token(String);

impl Token {
    /// Builds a user-supplied token; reserved prefixes are rejected.
    pub fn new(text: impl Into<String>) -> Result<Token> {
        let token = Token::internal(text)?;
        if token.is_reserved() {
            return Err(Error::ReservedToken(token.0));
        }
        Ok(token)
    }

    /// Builds a token that may carry a reserved prefix.
    pub fn internal(text: impl Into<String>) -> Result<Token> {
        let text = text.into();
        if text.is_empty() || text.chars().any(char::is_whitespace) {
            return Err(Error::InvalidToken(text));
        }
        Ok(Token(text))
    }

    /// The fresh vertex `__name`.
    pub fn fresh(name: &str) -> Token {
        Token(format!("{FRESH_PREFIX}{name}"))
    }

    /// The involution `a <-> ~a`.
    pub fn bar(&self) -> Token {
        match self.0.strip_prefix(BAR_PREFIX) {
            Some(rest) if !rest.is_empty() => Token(rest.to_string()),
            _ => Token(format!("{BAR_PREFIX}{}", self.0)),
        }
    }

    pub fn is_bar(&self) -> bool {
        self.0.starts_with(BAR_PREFIX)
    }

    pub fn is_reserved(&self) -> bool {
        self.0.starts_with(BAR_PREFIX) || self.0.starts_with(FRESH_PREFIX)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Token> {
        Token::new(s)
    }
}

impl TryFrom<String> for Token {
    type Error = Error;

    fn try_from(text: String) -> Result<Token> {
        Token::internal(text)
    }
}

impl From<Token> for String {
    fn from(token: Token) -> String {
        token.0
    }
}

/// A labeled edge `src --label--> dst`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub src: Token,
    pub label: Token,
    pub dst: Token,
}

impl Edge {
    pub fn new(src: Token, label: Token, dst: Token) -> Edge {
        Edge { src, label, dst }
    }
}

/// A sequence of letters; a letter `~a` walks an `a`-edge backwards.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<Token>);

/// Words over the bar alphabet share the representation of plain words.
pub type ChainWord = Word;

impl Word {
    pub fn new(letters: Vec<Token>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Parses whitespace-separated letters.
    pub fn parse(text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(Token::internal)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Token] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Token) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    /// Reverses the word and bars every letter.
    pub fn mirror_bar(&self) -> Word {
        Word(self.0.iter().rev().map(Token::bar).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// A non-empty finite set of labeled edges.
///
/// Vertices and labels are kept sorted; index-based accessors refer to
/// positions in [`Graph::vertices`] and [`Graph::labels`].
#[derive(Clone)]
pub struct Graph {
    edges: BTreeSet<Edge>,
    vertices: Vec<Token>,
    labels: Vec<Token>,
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(
                self.edges
                    .iter()
                    .map(|e| format!("({} {} {})", e.src, e.label, e.dst)),
            )
            .finish()
    }
}

impl Graph {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut vertex_set = BTreeSet::new();
        let mut label_set = BTreeSet::new();
        for e in &edges {
            vertex_set.insert(e.src.clone());
            vertex_set.insert(e.dst.clone());
            label_set.insert(e.label.clone());
        }
        let vertices: Vec<Token> = vertex_set.into_iter().collect();
        let labels: Vec<Token> = label_set.into_iter().collect();
        let mut out = vec![Vec::new(); vertices.len()];
        let mut inc = vec![Vec::new(); vertices.len()];
        for e in &edges {
            let s = vertices.binary_search(&e.src).unwrap();
            let t = vertices.binary_search(&e.dst).unwrap();
            let a = labels.binary_search(&e.label).unwrap();
            out[s].push((a, t));
            inc[t].push((a, s));
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Graph {
            edges,
            vertices,
            labels,
            out,
            inc,
        })
    }

    /// Convenience constructor from string triples; reserved prefixes allowed.
    pub fn from_triples(triples: &[(&str, &str, &str)]) -> Result<Graph> {
        let edges = triples
            .iter()
            .map(|(s, a, t)| {
                Ok(Edge::new(
                    Token::internal(*s)?,
                    Token::internal(*a)?,
                    Token::internal(*t)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Graph::new(edges)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Token] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Token] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &Token {
        &self.vertices[i]
    }

    pub fn label(&self, a: usize) -> &Token {
        &self.labels[a]
    }

    pub fn vertex_index(&self, v: &Token) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn label_index(&self, a: &Token) -> Option<usize> {
        self.labels.binary_search(a).ok()
    }

    pub fn require_vertex(&self, v: &Token) -> Result<usize> {
        self.vertex_index(v)
            .ok_or_else(|| Error::UnknownVertex(v.clone()))
    }

    pub fn contains_edge(&self, src: &Token, label: &Token, dst: &Token) -> bool {
        self.edges
            .contains(&Edge::new(src.clone(), label.clone(), dst.clone()))
    }

    /// Outgoing `(label, target)` pairs of vertex `v`, sorted.
    pub fn out_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.out[v]
    }

    /// Incoming `(label, source)` pairs of vertex `v`, sorted.
    pub fn in_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    /// Least `a`-successor of `v`; the only one in a deterministic graph.
    pub fn successor(&self, v: usize, a: usize) -> Option<usize> {
        let list = &self.out[v];
        let i = list.partition_point(|&(b, _)| b < a);
        list.get(i).filter(|&&(b, _)| b == a).map(|&(_, t)| t)
    }

    /// Least `a`-predecessor of `v`.
    pub fn predecessor(&self, v: usize, a: usize) -> Option<usize> {
        let list = &self.inc[v];
        let i = list.partition_point(|&(b, _)| b < a);
        list.get(i).filter(|&&(b, _)| b == a).map(|&(_, s)| s)
    }

    pub fn successors(&self, v: usize, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v]
            .iter()
            .filter(move |&&(b, _)| b == a)
            .map(|&(_, t)| t)
    }

    pub fn predecessors(&self, v: usize, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[v]
            .iter()
            .filter(move |&&(b, _)| b == a)
            .map(|&(_, s)| s)
    }

    pub fn is_deterministic(&self) -> bool {
        self.out
            .iter()
            .all(|list| list.windows(2).all(|w| w[0].0 != w[1].0))
    }

    pub fn is_co_deterministic(&self) -> bool {
        self.inc
            .iter()
            .all(|list| list.windows(2).all(|w| w[0].0 != w[1].0))
    }

    /// Vertices reachable from `starts`, as a membership vector.
    pub fn reachable_from(&self, starts: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in starts {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &(_, t) in &self.out[v] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    pub(crate) fn token_set(&self, members: &[bool]) -> BTreeSet<Token> {
        members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.vertices[i].clone())
            .collect()
    }
}

fn parse_token(raw: &str, line: usize) -> Result<Token> {
    let token = Token::internal(raw).map_err(|_| Error::Syntax {
        line,
        message: format!("invalid token `{raw}`"),
    })?;
    if token.is_reserved() {
        return Err(Error::ReservedPrefix {
            line,
            token: raw.to_string(),
        });
    }
    Ok(token)
}

/// Parses the `src label dst` edge-list format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Syntax {
                line,
                message: format!("expected `src label dst`, found {} fields", fields.len()),
            });
        }
        edges.push(Edge::new(
            parse_token(fields[0], line)?,
            parse_token(fields[1], line)?,
            parse_token(fields[2], line)?,
        ));
    }
    Graph::new(edges)
}

/// Canonical text form: one line per edge in lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.src, e.label, e.dst));
    }
    out
}

pub fn inverse(g: &Graph) -> Graph {
    Graph::new(
        g.edges()
            .map(|e| Edge::new(e.dst.clone(), e.label.clone(), e.src.clone())),
    )
    .expect("inverse of a non-empty graph is non-empty")
}

pub fn restrict_vertices(g: &Graph, p: &BTreeSet<Token>) -> Result<Graph> {
    Graph::new(
        g.edges()
            .filter(|e| p.contains(&e.src) && p.contains(&e.dst))
            .cloned(),
    )
    .map_err(|_| Error::EmptyResult)
}

pub fn restrict_labels(g: &Graph, p: &BTreeSet<Token>) -> Result<Graph> {
    Graph::new(g.edges().filter(|e| p.contains(&e.label)).cloned())
        .map_err(|_| Error::EmptyResult)
}

/// The induced subgraph on the vertices reachable from `p`.
pub fn accessible_subgraph(g: &Graph, p: &BTreeSet<Token>) -> Result<Graph> {
    let starts = p
        .iter()
        .map(|v| g.require_vertex(v))
        .collect::<Result<Vec<_>>>()?;
    let reach = g.token_set(&g.reachable_from(&starts));
    restrict_vertices(g, &reach)
}

/// Adds the edge `t --~a--> s` for every edge `s --a--> t`.
pub fn bar_graph(g: &Graph) -> Graph {
    let reversed = g
        .edges()
        .map(|e| Edge::new(e.dst.clone(), e.label.bar(), e.src.clone()));
    Graph::new(g.edges().cloned().chain(reversed).collect::<Vec<_>>())
        .expect("bar graph of a non-empty graph is non-empty")
}

enum Step {
    Forward(usize),
    Backward(usize),
}

fn resolve(g: &Graph, letter: &Token) -> Result<Step> {
    if let Some(a) = g.label_index(letter) {
        return Ok(Step::Forward(a));
    }
    if let Some(a) = g.label_index(&letter.bar()) {
        return Ok(Step::Backward(a));
    }
    Err(Error::UnknownLabel(letter.clone()))
}

/// All vertices reachable from `s` along `w`; `~a` letters walk backwards.
pub fn run_word(g: &Graph, s: &Token, w: &Word) -> Result<BTreeSet<Token>> {
    let start = g.require_vertex(s)?;
    let steps = w
        .letters()
        .iter()
        .map(|l| resolve(g, l))
        .collect::<Result<Vec<_>>>()?;
    let mut current = vec![false; g.vertex_count()];
    current[start] = true;
    for step in steps {
        let mut next = vec![false; g.vertex_count()];
        for (v, _) in current.iter().enumerate().filter(|(_, &m)| m) {
            match step {
                Step::Forward(a) => g.successors(v, a).for_each(|t| next[t] = true),
                Step::Backward(a) => g.predecessors(v, a).for_each(|t| next[t] = true),
            }
        }
        current = next;
    }
    Ok(g.token_set(&current))
}
