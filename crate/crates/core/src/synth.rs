//! Operation tables synthesized from graphs, and the graph completions used
//! to obtain them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::{axiom_report, closure, ClosureMode, GeneratorSet, MagmaTable};
use crate::build::Labeling;
use crate::error::{Error, Result};
use crate::graph::{bar_graph, restrict_labels, Edge, Graph, Token, Word};
use crate::props::{
    is_commutative, is_root_at, locally_commutative, loop_propagating, one_propagating, out_simple,
    pair_closure, propagating, source_complete_at, target_complete_at, in_simple,
};

/// Name of the vertex added by [`hat_graph`].
pub fn fresh_root() -> Token {
    Token::fresh("root")
}

fn precondition(message: impl Into<String>) -> Error {
    Error::PreconditionFailed(message.into())
}

fn contradiction(message: impl Into<String>) -> Error {
    Error::InternalContradiction(message.into())
}

fn check_deterministic(g: &Graph) -> Result<()> {
    if g.is_deterministic() {
        Ok(())
    } else {
        Err(precondition("not deterministic"))
    }
}

fn check_co_deterministic(g: &Graph) -> Result<()> {
    if g.is_co_deterministic() {
        Ok(())
    } else {
        Err(precondition("not co-deterministic"))
    }
}

/// An injective map from labels to vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<Token, Token>", into = "BTreeMap<Token, Token>")]
pub struct Injection(BTreeMap<Token, Token>);

impl Injection {
    pub fn new(map: BTreeMap<Token, Token>) -> Result<Injection> {
        let image: BTreeSet<&Token> = map.values().collect();
        if image.len() != map.len() {
            return Err(Error::MalformedInjection("not injective".into()));
        }
        Ok(Injection(map))
    }

    pub fn get(&self, label: &Token) -> Option<&Token> {
        self.0.get(label)
    }

    pub fn map(&self) -> &BTreeMap<Token, Token> {
        &self.0
    }

    pub fn image(&self) -> BTreeSet<Token> {
        self.0.values().cloned().collect()
    }

    fn indices(&self, g: &Graph) -> Result<Vec<usize>> {
        let domain: Vec<&Token> = self.0.keys().collect();
        if domain != g.labels().iter().collect::<Vec<_>>() {
            return Err(Error::MalformedInjection("domain must be the label set".into()));
        }
        self.0
            .values()
            .map(|v| {
                g.vertex_index(v)
                    .ok_or_else(|| Error::MalformedInjection(format!("`{v}` is not a vertex")))
            })
            .collect()
    }
}

impl TryFrom<BTreeMap<Token, Token>> for Injection {
    type Error = Error;

    fn try_from(map: BTreeMap<Token, Token>) -> Result<Injection> {
        Injection::new(map)
    }
}

impl From<Injection> for BTreeMap<Token, Token> {
    fn from(i: Injection) -> BTreeMap<Token, Token> {
        i.0
    }
}

/// For every vertex reachable from the anchor, a word leading to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessWords {
    pub anchor: Token,
    pub words: BTreeMap<Token, Word>,
}

/// Breadth-first words from `r`, ties broken by label order.
fn bfs_words(g: &Graph, r: usize) -> Vec<Option<Vec<usize>>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; g.vertex_count()];
    words[r] = Some(Vec::new());
    let mut queue = VecDeque::from([r]);
    while let Some(v) = queue.pop_front() {
        for &(a, t) in g.out_edges(v) {
            if words[t].is_none() {
                let mut w = words[v].clone().unwrap();
                w.push(a);
                words[t] = Some(w);
                queue.push_back(t);
            }
        }
    }
    words
}

fn run_det(g: &Graph, s: usize, word: &[usize]) -> Option<usize> {
    word.iter().try_fold(s, |v, &a| g.successor(v, a))
}

fn to_word(g: &Graph, word: &[usize]) -> Word {
    Word::new(word.iter().map(|&a| g.label(a).clone()).collect())
}

pub fn witness_words(g: &Graph, r: &Token) -> Result<WitnessWords> {
    let ri = g.require_vertex(r)?;
    let words = bfs_words(g, ri)
        .into_iter()
        .enumerate()
        .filter_map(|(t, w)| w.map(|w| (g.vertex(t).clone(), to_word(g, &w))))
        .collect();
    Ok(WitnessWords {
        anchor: r.clone(),
        words,
    })
}

/// The labeling `q -> a` for every edge `r --a--> q`; `r` must be out-simple.
pub fn anchor_labeling(g: &Graph, r: &Token) -> Result<Labeling> {
    let ri = g.require_vertex(r)?;
    if !out_simple(g, ri) {
        return Err(precondition(format!("`{r}` is not out-simple")));
    }
    Labeling::new(
        g.out_edges(ri)
            .iter()
            .map(|&(a, q)| (g.vertex(q).clone(), g.label(a).clone()))
            .collect(),
    )
}

/// Renames labels through `map`; labels outside its domain are kept.
pub fn relabel(g: &Graph, map: &BTreeMap<Token, Token>) -> Graph {
    Graph::new(
        g.edges()
            .map(|e| {
                let label = map.get(&e.label).unwrap_or(&e.label).clone();
                Edge::new(e.src.clone(), label, e.dst.clone())
            })
            .collect::<Vec<_>>(),
    )
    .expect("relabeling keeps the graph non-empty")
}

fn table_from(g: &Graph, f: impl Fn(usize, usize) -> Result<usize>) -> Result<MagmaTable> {
    let n = g.vertex_count();
    let mut products = vec![0; n * n];
    for s in 0..n {
        for t in 0..n {
            products[s * n + t] = f(s, t)?;
        }
    }
    MagmaTable::from_fn(g.vertices().to_vec(), |s, t| products[s * n + t])
}

/// `s ×_r t` is the target of the `a`-edge from `s` for any `r --a--> t`.
pub fn edge_operation(g: &Graph, r: &Token) -> Result<MagmaTable> {
    let ri = g.require_vertex(r)?;
    check_deterministic(g)?;
    let labels_to: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|t| {
            g.out_edges(ri)
                .iter()
                .filter(|&&(_, q)| q == t)
                .map(|&(a, _)| a)
                .collect()
        })
        .collect();
    if labels_to.iter().any(Vec::is_empty) {
        return Err(precondition(format!("`{r}` is not a 1-root")));
    }
    if !one_propagating(g, ri) {
        return Err(precondition(format!("`{r}` is not 1-propagating")));
    }
    let table = table_from(g, |s, t| {
        let mut targets = labels_to[t].iter().map(|&a| g.successor(s, a));
        let first = targets.next().flatten();
        match first {
            Some(p) if targets.all(|q| q == Some(p)) => Ok(p),
            _ => Err(Error::InconsistentProduct {
                left: g.vertex(s).clone(),
                right: g.vertex(t).clone(),
            }),
        }
    })?;
    let report = axiom_report(&table);
    if !report.left_identities.contains(r) {
        return Err(contradiction(format!("`{r}` is not a left identity of the edge operation")));
    }
    if loop_propagating(g, ri) && report.identity.as_ref() != Some(r) {
        return Err(contradiction(format!("loop-propagating `{r}` is not an identity")));
    }
    if locally_commutative(g, ri) && !report.commutative {
        return Err(contradiction("locally commutative anchor but non-commutative table"));
    }
    if g.is_co_deterministic() && !report.right_cancellative {
        return Err(contradiction("co-deterministic graph but table is not right-cancellative"));
    }
    Ok(table)
}

/// `s ∗_r t` follows from `s` the breadth-first witness word of `t`.
pub fn path_operation(g: &Graph, r: &Token) -> Result<MagmaTable> {
    let ri = g.require_vertex(r)?;
    check_deterministic(g)?;
    if !is_root_at(g, ri) {
        return Err(precondition(format!("`{r}` is not a root")));
    }
    if !propagating(g, ri) {
        return Err(precondition(format!("`{r}` is not propagating")));
    }
    let words = bfs_words(g, ri);
    let table = table_from(g, |s, t| {
        let w = words[t].as_ref().expect("root reaches every vertex");
        run_det(g, s, w).ok_or_else(|| Error::RunFailed {
            from: g.vertex(s).clone(),
            target: g.vertex(t).clone(),
        })
    })?;
    let report = axiom_report(&table);
    if !report.associative || report.identity.as_ref() != Some(r) {
        return Err(contradiction(format!("path operation at `{r}` is not a monoid of identity `{r}`")));
    }
    Ok(table)
}

/// The path operation of the bar-graph, on the vertices of `g`.
pub fn chain_operation(g: &Graph, r: &Token) -> Result<MagmaTable> {
    let ri = g.require_vertex(r)?;
    check_deterministic(g)?;
    check_co_deterministic(g)?;
    if !crate::props::structural_report(g).connected {
        return Err(precondition("not connected"));
    }
    let bar = bar_graph(g);
    let bi = bar.require_vertex(r)?;
    if !propagating(&bar, bi) {
        return Err(precondition(format!("`{r}` is not chain-propagating")));
    }
    let table = path_operation(&bar, r)?;
    let report = axiom_report(&table);
    if !report.right_cancellative {
        return Err(contradiction("chain operation is not right-cancellative"));
    }
    if source_complete_at(g, ri) && target_complete_at(g, ri) {
        if !report.is_group() {
            return Err(contradiction("chain operation is not a group"));
        }
        let successors = GeneratorSet::new(g.out_edges(ri).iter().map(|&(_, q)| g.vertex(q).clone()))?;
        if closure(&table, &successors, ClosureMode::Group)? != table.carrier_set() {
            return Err(contradiction("successors of the anchor do not generate the group"));
        }
        if in_simple(g, ri) && out_simple(g, ri) {
            let completed = group_completion(g)?;
            if path_operation(&completed, r)? != table {
                return Err(contradiction("group completion disagrees with the chain operation"));
            }
        }
    }
    if is_commutative(&bar) && !report.commutative {
        return Err(contradiction("chain-commutative graph but non-commutative table"));
    }
    Ok(table)
}

struct Anchor {
    r: usize,
    in_q: Vec<bool>,
}

fn magma_anchor(g: &Graph, r: &Token) -> Result<Anchor> {
    let ri = g.require_vertex(r)?;
    check_deterministic(g)?;
    if !(0..g.vertex_count()).all(|v| source_complete_at(g, v)) {
        return Err(precondition("not source-complete"));
    }
    if !out_simple(g, ri) {
        return Err(precondition(format!("`{r}` is not out-simple")));
    }
    let mut in_q = vec![false; g.vertex_count()];
    for &(_, q) in g.out_edges(ri) {
        in_q[q] = true;
    }
    Ok(Anchor { r: ri, in_q })
}

fn edge(g: &Graph, s: usize, label: usize, t: usize) -> Edge {
    Edge::new(g.vertex(s).clone(), g.vertex(label).clone(), g.vertex(t).clone())
}

/// `{ s --q--> t | s --a--> t, r --a--> q }` and `{ r --s--> s | s not in Q }`.
fn shared_blocks(g: &Graph, anchor: &Anchor) -> Vec<Edge> {
    let mut edges = Vec::new();
    for s in 0..g.vertex_count() {
        for &(a, t) in g.out_edges(s) {
            let q = g.successor(anchor.r, a).expect("source-complete anchor");
            edges.push(edge(g, s, q, t));
        }
    }
    for s in (0..g.vertex_count()).filter(|&s| !anchor.in_q[s]) {
        edges.push(edge(g, anchor.r, s, s));
    }
    edges
}

fn assert_completion(g: &Graph, r: &Token, completed: &Graph) -> Result<()> {
    let ri = completed.require_vertex(r)?;
    let n = completed.vertex_count();
    let rep = crate::props::structural_report(completed);
    if !(rep.deterministic && rep.source_complete && out_simple(completed, ri)) {
        return Err(contradiction("completion is not deterministic, source-complete, out-simple"));
    }
    if !rep.one_roots.contains(r) || n != g.vertex_count() {
        return Err(contradiction("anchor is not a 1-root of the completion"));
    }
    let labeling = anchor_labeling(g, r)?;
    let q: BTreeSet<Token> = labeling.domain();
    let restored = relabel(&restrict_labels(completed, &q)?, labeling.map());
    if &restored != g {
        return Err(contradiction("completion does not restrict to the input graph"));
    }
    Ok(())
}

pub fn construct_g1(g: &Graph, r: &Token) -> Result<Graph> {
    let anchor = magma_anchor(g, r)?;
    let mut edges = shared_blocks(g, &anchor);
    for s in (0..g.vertex_count()).filter(|&s| s != anchor.r) {
        for t in (0..g.vertex_count()).filter(|&t| !anchor.in_q[t]) {
            edges.push(edge(g, s, t, anchor.r));
        }
    }
    let out = Graph::new(edges)?;
    assert_completion(g, r, &out)?;
    Ok(out)
}

pub fn construct_g2(g: &Graph, r: &Token) -> Result<Graph> {
    let anchor = magma_anchor(g, r)?;
    let ri = anchor.r;
    let mut edges = shared_blocks(g, &anchor);
    for s in (0..g.vertex_count()).filter(|&s| s != ri) {
        if !anchor.in_q[ri] {
            edges.push(edge(g, s, ri, s));
        }
        for t in (0..g.vertex_count()).filter(|&t| !anchor.in_q[t] && t != ri) {
            edges.push(edge(g, s, t, ri));
        }
    }
    let out = Graph::new(edges)?;
    assert_completion(g, r, &out)?;
    if loop_propagating(g, ri) && !loop_propagating(&out, out.require_vertex(r)?) {
        return Err(contradiction("loop propagation lost in the completion"));
    }
    Ok(out)
}

pub fn construct_g3(g: &Graph, r: &Token) -> Result<Graph> {
    let anchor = magma_anchor(g, r)?;
    let ri = anchor.r;
    if !loop_propagating(g, ri) {
        return Err(precondition(format!("`{r}` is not loop-propagating")));
    }
    if !locally_commutative(g, ri) {
        return Err(precondition(format!("`{r}` is not locally commutative")));
    }
    let n = g.vertex_count();
    let outside = |v: usize| !anchor.in_q[v] && v != ri;
    let mut edges = shared_blocks(g, &anchor);
    if !anchor.in_q[ri] {
        for s in (0..n).filter(|&s| s != ri) {
            edges.push(edge(g, s, ri, s));
        }
    }
    for s in (0..n).filter(|&s| outside(s)) {
        for t in (0..n).filter(|&t| outside(t)) {
            edges.push(edge(g, s, t, ri));
        }
        for &(a, t) in g.out_edges(s) {
            let q = g.successor(ri, a).expect("source-complete anchor");
            if q != ri {
                edges.push(edge(g, q, s, t));
            }
        }
    }
    let out = Graph::new(edges)?;
    assert_completion(g, r, &out)?;
    if !locally_commutative(&out, out.require_vertex(r)?) {
        return Err(contradiction("anchor is not locally commutative in the completion"));
    }
    let report = axiom_report(&edge_operation(&out, r)?);
    if !report.commutative || report.identity.as_ref() != Some(r) {
        return Err(contradiction("completion does not yield a commutative unital magma"));
    }
    Ok(out)
}

/// Adds the fresh root with an `a`-edge to `i(a)` for every label `a`.
pub fn hat_graph(g: &Graph, i: &Injection) -> Result<Graph> {
    i.indices(g)?;
    let root = fresh_root();
    let extra = i
        .map()
        .iter()
        .map(|(a, v)| Edge::new(root.clone(), a.clone(), v.clone()));
    Graph::new(g.edges().cloned().chain(extra).collect::<Vec<_>>())
}

/// Adds `t --~a--> s` for every edge `s --a--> t` with no edge at all from `t` to `s`.
pub fn group_completion(g: &Graph) -> Result<Graph> {
    check_deterministic(g)?;
    check_co_deterministic(g)?;
    let extra: Vec<Edge> = g
        .edges()
        .filter(|e| !g.edges().any(|f| f.src == e.dst && f.dst == e.src))
        .map(|e| Edge::new(e.dst.clone(), e.label.bar(), e.src.clone()))
        .collect();
    Graph::new(g.edges().cloned().chain(extra).collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupVariant {
    Plain,
    Commutative,
    Cancellative,
    CancellativeCommutative,
    Semilattice,
}

impl SemigroupVariant {
    fn cancellative(self) -> bool {
        matches!(self, SemigroupVariant::Cancellative | SemigroupVariant::CancellativeCommutative)
    }

    fn commutative(self) -> bool {
        matches!(
            self,
            SemigroupVariant::Commutative
                | SemigroupVariant::CancellativeCommutative
                | SemigroupVariant::Semilattice
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InjectionSearch {
    Found(Injection),
    Exhausted,
    Capped,
}

pub const DEFAULT_SEARCH_CAP: u64 = 1_000_000;

/// Plain condition for the labels assigned so far: for every `s`, the
/// anchors `(i(a), s·a)` close without obstruction.
fn plain_partial(g: &Graph, assigned: &[usize]) -> bool {
    (0..g.vertex_count()).all(|s| {
        let anchors: Option<Vec<(usize, usize)>> = assigned
            .iter()
            .enumerate()
            .map(|(a, &v)| g.successor(s, a).map(|t| (v, t)))
            .collect();
        anchors.is_some_and(|anchors| pair_closure(g, &anchors).is_ok())
    })
}

fn commutes(g: &Graph, assigned: &[usize], a: usize, b: usize) -> bool {
    match (g.successor(assigned[a], b), g.successor(assigned[b], a)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}

/// Reverse direction of the cancellative equivalence at every `i(c)`:
/// the anchors `(i(c)·a, i(a))` close without obstruction.
fn cancellative_reverse(g: &Graph, assigned: &[usize]) -> bool {
    assigned.iter().all(|&ic| {
        let anchors: Vec<(usize, usize)> = assigned
            .iter()
            .enumerate()
            .filter_map(|(a, &ia)| g.successor(ic, a).map(|p| (p, ia)))
            .collect();
        pair_closure(g, &anchors).is_ok()
    })
}

fn idempotent_witnesses(g: &Graph, assigned: &[usize]) -> Result<bool> {
    let i = injection_from(g, assigned);
    let hat = hat_graph(g, &i)?;
    let root = hat.require_vertex(&fresh_root())?;
    let words = bfs_words(&hat, root);
    Ok(g.vertices().iter().all(|v| {
        let s = hat.vertex_index(v).unwrap();
        words[s]
            .as_ref()
            .is_some_and(|w| run_det(&hat, s, w) == Some(s))
    }))
}

fn injection_from(g: &Graph, assigned: &[usize]) -> Injection {
    Injection(
        assigned
            .iter()
            .enumerate()
            .map(|(a, &v)| (g.label(a).clone(), g.vertex(v).clone()))
            .collect(),
    )
}

fn full_check(g: &Graph, assigned: &[usize], variant: SemigroupVariant) -> Result<bool> {
    if !g.reachable_from(assigned).iter().all(|&m| m) {
        return Ok(false);
    }
    if !plain_partial(g, assigned) {
        return Ok(false);
    }
    let k = assigned.len();
    if variant.commutative() && !(0..k).all(|a| (0..k).all(|b| commutes(g, assigned, a, b))) {
        return Ok(false);
    }
    if variant.cancellative() && !cancellative_reverse(g, assigned) {
        return Ok(false);
    }
    if variant == SemigroupVariant::Semilattice && !idempotent_witnesses(g, assigned)? {
        return Ok(false);
    }
    Ok(true)
}

fn check_variant_preconditions(g: &Graph, variant: SemigroupVariant) -> Result<()> {
    check_deterministic(g)?;
    if variant.cancellative() {
        check_co_deterministic(g)?;
    }
    Ok(())
}

/// Whether `i` satisfies the conditions of `variant`.
pub fn check_injection(g: &Graph, i: &Injection, variant: SemigroupVariant) -> Result<bool> {
    check_variant_preconditions(g, variant)?;
    let assigned = i.indices(g)?;
    full_check(g, &assigned, variant)
}

struct Search<'a> {
    g: &'a Graph,
    variant: SemigroupVariant,
    cap: u64,
    visited: u64,
    assigned: Vec<usize>,
    used: Vec<bool>,
}

enum Step {
    Found,
    Exhausted,
    Capped,
}

impl Search<'_> {
    fn extend(&mut self) -> Result<Step> {
        let k = self.g.labels().len();
        if self.assigned.len() == k {
            return Ok(if full_check(self.g, &self.assigned, self.variant)? {
                Step::Found
            } else {
                Step::Exhausted
            });
        }
        let a = self.assigned.len();
        for v in 0..self.g.vertex_count() {
            if self.used[v] {
                continue;
            }
            self.visited += 1;
            if self.visited > self.cap {
                return Ok(Step::Capped);
            }
            self.assigned.push(v);
            self.used[v] = true;
            let viable = plain_partial(self.g, &self.assigned)
                && (!self.variant.commutative()
                    || (0..=a).all(|b| commutes(self.g, &self.assigned, a, b)));
            if viable {
                match self.extend()? {
                    Step::Exhausted => {}
                    other => return Ok(other),
                }
            }
            self.assigned.pop();
            self.used[v] = false;
        }
        Ok(Step::Exhausted)
    }
}

/// Lexicographic search for the least injection satisfying `variant`,
/// visiting at most `cap` partial assignments.
pub fn search_semigroup_injection(
    g: &Graph,
    variant: SemigroupVariant,
    cap: u64,
) -> Result<InjectionSearch> {
    check_variant_preconditions(g, variant)?;
    let k = g.labels().len();
    let n = g.vertex_count();
    if k > n || !(0..n).all(|v| source_complete_at(g, v)) {
        return Ok(InjectionSearch::Exhausted);
    }
    let mut search = Search {
        g,
        variant,
        cap,
        visited: 0,
        assigned: Vec::with_capacity(k),
        used: vec![false; n],
    };
    Ok(match search.extend()? {
        Step::Found => InjectionSearch::Found(injection_from(g, &search.assigned)),
        Step::Exhausted => InjectionSearch::Exhausted,
        Step::Capped => InjectionSearch::Capped,
    })
}

/// Exhaustive version of [`search_semigroup_injection`].
pub fn find_semigroup_injection(g: &Graph, variant: SemigroupVariant) -> Result<Option<Injection>> {
    match search_semigroup_injection(g, variant, u64::MAX)? {
        InjectionSearch::Found(i) => Ok(Some(i)),
        _ => Ok(None),
    }
}

/// The path operation of the hat graph at its fresh root, on the vertices of `g`.
pub fn semigroup_table(g: &Graph, i: &Injection) -> Result<MagmaTable> {
    let hat = hat_graph(g, i)?;
    let full = path_operation(&hat, &fresh_root())?;
    full.restrict(&g.vertices().iter().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_table;
    use crate::catalog;

    fn g(triples: &[(&str, &str, &str)]) -> Graph {
        Graph::from_triples(triples).unwrap()
    }

    fn t(s: &str) -> Token {
        Token::new(s).unwrap()
    }

    fn inj(pairs: &[(&str, &str)]) -> Injection {
        Injection::new(pairs.iter().map(|(a, v)| (t(a), t(v))).collect()).unwrap()
    }

    fn z3() -> Graph {
        g(&[("0", "a", "1"), ("1", "a", "2"), ("2", "a", "0")])
    }

    fn mon3() -> Graph {
        g(&[
            ("r", "a", "r"),
            ("r", "b", "s"),
            ("r", "c", "t"),
            ("s", "a", "s"),
            ("s", "b", "s"),
            ("s", "c", "t"),
            ("t", "a", "t"),
            ("t", "b", "s"),
            ("t", "c", "t"),
        ])
    }

    fn semi3() -> Graph {
        g(&[
            ("p", "a", "p"),
            ("p", "b", "r"),
            ("q", "a", "r"),
            ("q", "b", "q"),
            ("r", "a", "r"),
            ("r", "b", "r"),
        ])
    }

    fn mag4_full() -> Graph {
        let table = catalog::mag4();
        let q = GeneratorSet::new(table.carrier().iter().cloned()).unwrap();
        crate::build::cayley_graph(&table, &q, &crate::build::default_labeling(&q)).unwrap()
    }

    #[test]
    fn edge_operation_examples() {
        assert_eq!(edge_operation(&mon3(), &t("r")).unwrap(), catalog::mon3());
        assert_eq!(edge_operation(&mag4_full(), &t("r")).unwrap(), catalog::mag4());
        let one = edge_operation(&g(&[("x", "a", "x")]), &t("x")).unwrap();
        assert_eq!(one, parse_table("elements x\nx: x\n").unwrap());
        assert!(matches!(
            edge_operation(&z3(), &t("0")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn path_operation_examples() {
        assert_eq!(path_operation(&mon3(), &t("r")).unwrap(), catalog::mon3());
        assert_eq!(path_operation(&z3(), &t("0")).unwrap(), catalog::cyclic(3));
        assert!(matches!(
            path_operation(&g(&[("r", "a", "s")]), &t("r")),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            path_operation(&mon3(), &t("s")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn witness_words_are_breadth_first() {
        let w = witness_words(&mon3(), &t("r")).unwrap();
        assert_eq!(w.words[&t("r")], Word::empty());
        assert_eq!(w.words[&t("s")], Word::parse("b").unwrap());
        assert_eq!(w.words[&t("t")], Word::parse("c").unwrap());
    }

    #[test]
    fn semilattice_pipeline() {
        let table = semigroup_table(&semi3(), &inj(&[("a", "p"), ("b", "q")])).unwrap();
        assert_eq!(table, catalog::semi3());
        assert_eq!(
            hat_graph(&semi3(), &inj(&[("a", "p"), ("b", "q")])).unwrap(),
            g(&[
                ("p", "a", "p"),
                ("p", "b", "r"),
                ("q", "a", "r"),
                ("q", "b", "q"),
                ("r", "a", "r"),
                ("r", "b", "r"),
                ("__root", "a", "p"),
                ("__root", "b", "q"),
            ])
        );
    }

    #[test]
    fn chain_operation_examples() {
        assert_eq!(chain_operation(&z3(), &t("0")).unwrap(), catalog::cyclic(3));
        let z2 = g(&[("0", "a", "1"), ("1", "a", "0")]);
        assert_eq!(chain_operation(&z2, &t("0")).unwrap(), catalog::cyclic(2));
        let loops = g(&[("0", "a", "1"), ("1", "a", "0"), ("0", "b", "0"), ("1", "b", "1")]);
        assert_eq!(chain_operation(&loops, &t("0")).unwrap(), catalog::cyclic(2));
        assert!(matches!(
            chain_operation(&mon3(), &t("r")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn g1_and_g2_examples() {
        let h = g(&[("r", "a", "s"), ("s", "a", "s")]);
        assert_eq!(
            construct_g1(&h, &t("r")).unwrap(),
            g(&[("r", "s", "s"), ("s", "s", "s"), ("r", "r", "r"), ("s", "r", "r")])
        );
        assert_eq!(
            construct_g2(&h, &t("r")).unwrap(),
            g(&[("r", "s", "s"), ("s", "s", "s"), ("r", "r", "r"), ("s", "r", "s")])
        );
        assert!(matches!(
            construct_g1(&g(&[("r", "a", "s")]), &t("r")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn g3_examples() {
        assert_eq!(
            construct_g3(&g(&[("r", "a", "r")]), &t("r")).unwrap(),
            g(&[("r", "r", "r")])
        );
        let mag4 = g(&[
            ("r", "a", "p"),
            ("r", "b", "q"),
            ("p", "a", "r"),
            ("p", "b", "s"),
            ("q", "a", "s"),
            ("q", "b", "r"),
            ("s", "a", "p"),
            ("s", "b", "q"),
        ]);
        let g3 = construct_g3(&mag4, &t("r")).unwrap();
        assert_eq!(edge_operation(&g3, &t("r")).unwrap(), catalog::mag4());
        assert!(matches!(
            construct_g3(&mag4, &t("p")),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn group_completion_examples() {
        let z2 = g(&[("0", "a", "1"), ("1", "a", "0")]);
        assert_eq!(group_completion(&z2).unwrap(), z2);
        assert_eq!(
            group_completion(&g(&[("r", "a", "s")])).unwrap(),
            g(&[("r", "a", "s"), ("s", "~a", "r")])
        );
        assert_eq!(
            group_completion(&z3()).unwrap(),
            g(&[
                ("0", "a", "1"),
                ("1", "a", "2"),
                ("2", "a", "0"),
                ("1", "~a", "0"),
                ("2", "~a", "1"),
                ("0", "~a", "2"),
            ])
        );
        assert!(group_completion(&mon3()).is_err());
    }

    #[test]
    fn injection_search_examples() {
        assert_eq!(
            find_semigroup_injection(&semi3(), SemigroupVariant::Semilattice).unwrap(),
            Some(inj(&[("a", "p"), ("b", "q")]))
        );
        assert_eq!(
            find_semigroup_injection(&g(&[("r", "a", "s")]), SemigroupVariant::Plain).unwrap(),
            None
        );
        assert_eq!(
            find_semigroup_injection(&z3(), SemigroupVariant::CancellativeCommutative).unwrap(),
            Some(inj(&[("a", "0")]))
        );
        assert!(check_injection(&z3(), &inj(&[("a", "1")]), SemigroupVariant::CancellativeCommutative).unwrap());
        assert_eq!(
            find_semigroup_injection(&mon3(), SemigroupVariant::Plain).unwrap(),
            Some(inj(&[("a", "r"), ("b", "s"), ("c", "t")]))
        );
        assert_eq!(
            search_semigroup_injection(&semi3(), SemigroupVariant::Plain, 1).unwrap(),
            InjectionSearch::Capped
        );
        assert!(matches!(
            find_semigroup_injection(&mon3(), SemigroupVariant::Cancellative),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn malformed_injections() {
        assert!(Injection::new([(t("a"), t("p")), (t("b"), t("p"))].into()).is_err());
        assert!(matches!(
            hat_graph(&semi3(), &inj(&[("a", "p")])),
            Err(Error::MalformedInjection(_))
        ));
        assert!(matches!(
            hat_graph(&semi3(), &inj(&[("a", "p"), ("b", "x")])),
            Err(Error::MalformedInjection(_))
        ));
    }
}
