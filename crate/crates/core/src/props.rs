//! Vertex- and graph-level predicates, decided by direct scans or by the
//! forced-morphism pair closure.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bar_graph, Graph, Token};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub deterministic: bool,
    pub co_deterministic: bool,
    pub simple: bool,
    pub out_simple_vertices: BTreeSet<Token>,
    pub in_simple_vertices: BTreeSet<Token>,
    pub source_complete: bool,
    pub source_complete_vertices: BTreeSet<Token>,
    pub target_complete: bool,
    pub target_complete_vertices: BTreeSet<Token>,
    pub roots: BTreeSet<Token>,
    pub co_roots: BTreeSet<Token>,
    pub one_roots: BTreeSet<Token>,
    pub one_coroots: BTreeSet<Token>,
    pub connected: bool,
    pub strongly_connected: bool,
}

/// A morphism from the subgraph accessible from `source_anchor` into the
/// subgraph accessible from `target_anchor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismWitness {
    pub mapping: BTreeMap<Token, Token>,
    pub source_anchor: Token,
    pub target_anchor: Token,
    pub is_isomorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionKind {
    /// The target side has no edge with the required label.
    MissingEdge,
    /// `vertex` would be sent to both `first` and `second`.
    Conflict {
        vertex: Token,
        first: Token,
        second: Token,
    },
}

/// Why a pair closure failed: the pair being expanded and the label followed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub pair: (Token, Token),
    pub label: Option<Token>,
    pub kind: ObstructionKind,
}

pub(crate) fn out_simple(g: &Graph, v: usize) -> bool {
    let mut targets: Vec<usize> = g.out_edges(v).iter().map(|&(_, t)| t).collect();
    let n = targets.len();
    targets.sort_unstable();
    targets.dedup();
    targets.len() == n
}

pub(crate) fn in_simple(g: &Graph, v: usize) -> bool {
    let mut sources: Vec<usize> = g.in_edges(v).iter().map(|&(_, s)| s).collect();
    let n = sources.len();
    sources.sort_unstable();
    sources.dedup();
    sources.len() == n
}

fn distinct_labels(list: &[(usize, usize)]) -> usize {
    let mut count = 0;
    let mut last = None;
    for &(a, _) in list {
        if last != Some(a) {
            count += 1;
            last = Some(a);
        }
    }
    count
}

pub(crate) fn source_complete_at(g: &Graph, v: usize) -> bool {
    distinct_labels(g.out_edges(v)) == g.labels().len()
}

pub(crate) fn target_complete_at(g: &Graph, v: usize) -> bool {
    distinct_labels(g.in_edges(v)) == g.labels().len()
}

pub(crate) fn is_root_at(g: &Graph, v: usize) -> bool {
    g.reachable_from(&[v]).iter().all(|&m| m)
}

fn co_reachable(g: &Graph, v: usize) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(p) = queue.pop_front() {
        for &(_, s) in g.in_edges(p) {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
    }
    seen
}

fn is_connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(p) = queue.pop_front() {
        for &(_, q) in g.out_edges(p).iter().chain(g.in_edges(p)) {
            if !seen[q] {
                seen[q] = true;
                queue.push_back(q);
            }
        }
    }
    seen.iter().all(|&m| m)
}

/// Least root of `g`, if any.
pub(crate) fn first_root(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| is_root_at(g, v))
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let n = g.vertex_count();
    let pick = |pred: &dyn Fn(usize) -> bool| -> BTreeSet<Token> {
        (0..n).filter(|&v| pred(v)).map(|v| g.vertex(v).clone()).collect()
    };
    let out_simple_vertices = pick(&|v| out_simple(g, v));
    let in_simple_vertices = pick(&|v| in_simple(g, v));
    let source_complete_vertices = pick(&|v| source_complete_at(g, v));
    let target_complete_vertices = pick(&|v| target_complete_at(g, v));
    let roots = pick(&|v| is_root_at(g, v));
    let co_roots = pick(&|v| co_reachable(g, v).iter().all(|&m| m));
    let one_roots = pick(&|v| {
        let mut hit = vec![false; n];
        g.out_edges(v).iter().for_each(|&(_, t)| hit[t] = true);
        hit.iter().all(|&m| m)
    });
    let one_coroots = pick(&|v| {
        let mut hit = vec![false; n];
        g.in_edges(v).iter().for_each(|&(_, s)| hit[s] = true);
        hit.iter().all(|&m| m)
    });
    StructuralReport {
        deterministic: g.is_deterministic(),
        co_deterministic: g.is_co_deterministic(),
        simple: out_simple_vertices.len() == n,
        source_complete: source_complete_vertices.len() == n,
        target_complete: target_complete_vertices.len() == n,
        strongly_connected: roots.len() == n,
        connected: is_connected(g),
        out_simple_vertices,
        in_simple_vertices,
        source_complete_vertices,
        target_complete_vertices,
        roots,
        co_roots,
        one_roots,
        one_coroots,
    }
}

pub fn is_out_simple(g: &Graph, v: &Token) -> Result<bool> {
    Ok(out_simple(g, g.require_vertex(v)?))
}

pub fn is_in_simple(g: &Graph, v: &Token) -> Result<bool> {
    Ok(in_simple(g, g.require_vertex(v)?))
}

pub(crate) fn locally_commutative(g: &Graph, v: usize) -> bool {
    for &(a, x) in g.out_edges(v) {
        for &(b, s) in g.out_edges(x) {
            let swapped = g
                .successors(v, b)
                .any(|y| g.successors(y, a).any(|t| t == s));
            if !swapped {
                return false;
            }
        }
    }
    true
}

pub fn is_locally_commutative(g: &Graph, v: &Token) -> Result<bool> {
    Ok(locally_commutative(g, g.require_vertex(v)?))
}

pub fn is_commutative(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| locally_commutative(g, v))
}

pub(crate) fn loop_propagating(g: &Graph, v: usize) -> bool {
    g.out_edges(v)
        .iter()
        .filter(|&&(_, t)| t == v)
        .all(|&(a, _)| (0..g.vertex_count()).all(|s| g.successors(s, a).any(|t| t == s)))
}

pub fn is_loop_propagating(g: &Graph, v: &Token) -> Result<bool> {
    Ok(loop_propagating(g, g.require_vertex(v)?))
}

fn common_target(g: &Graph, v: usize, a: usize, b: usize) -> bool {
    g.successors(v, a).any(|t| g.successors(v, b).any(|u| u == t))
}

pub(crate) fn one_propagating(g: &Graph, r: usize) -> bool {
    let k = g.labels().len();
    for a in 0..k {
        for b in a..k {
            if common_target(g, r, a, b)
                && !(0..g.vertex_count()).all(|s| common_target(g, s, a, b))
            {
                return false;
            }
        }
    }
    true
}

pub fn is_1_propagating_vertex(g: &Graph, r: &Token) -> Result<bool> {
    Ok(one_propagating(g, g.require_vertex(r)?))
}

pub(crate) fn require_deterministic(g: &Graph) -> Result<()> {
    if g.is_deterministic() {
        Ok(())
    } else {
        Err(Error::NotDeterministic)
    }
}

pub(crate) fn require_co_deterministic(g: &Graph) -> Result<()> {
    if g.is_co_deterministic() {
        Ok(())
    } else {
        Err(Error::NotCoDeterministic)
    }
}

/// Paired breadth-first closure from several anchor pairs at once.
///
/// The result maps every vertex accessible from the left anchors. `g` must be
/// deterministic.
#[allow(clippy::result_large_err)]
pub(crate) fn pair_closure(
    g: &Graph,
    anchors: &[(usize, usize)],
) -> std::result::Result<Vec<Option<usize>>, Obstruction> {
    let mut image: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    let conflict = |pair: (usize, usize), label: Option<usize>, p: usize, first: usize, second: usize| {
        Obstruction {
            pair: (g.vertex(pair.0).clone(), g.vertex(pair.1).clone()),
            label: label.map(|a| g.label(a).clone()),
            kind: ObstructionKind::Conflict {
                vertex: g.vertex(p).clone(),
                first: g.vertex(first).clone(),
                second: g.vertex(second).clone(),
            },
        }
    };
    for &(p, q) in anchors {
        match image[p] {
            Some(prev) if prev != q => return Err(conflict((p, q), None, p, prev, q)),
            Some(_) => {}
            None => {
                image[p] = Some(q);
                queue.push_back((p, q));
            }
        }
    }
    while let Some((p, q)) = queue.pop_front() {
        for &(a, p2) in g.out_edges(p) {
            let Some(q2) = g.successor(q, a) else {
                return Err(Obstruction {
                    pair: (g.vertex(p).clone(), g.vertex(q).clone()),
                    label: Some(g.label(a).clone()),
                    kind: ObstructionKind::MissingEdge,
                });
            };
            match image[p2] {
                Some(prev) if prev != q2 => return Err(conflict((p, q), Some(a), p2, prev, q2)),
                Some(_) => {}
                None => {
                    image[p2] = Some(q2);
                    queue.push_back((p2, q2));
                }
            }
        }
    }
    Ok(image)
}

pub(crate) fn morphism_exists(g: &Graph, r: usize, s: usize) -> bool {
    pair_closure(g, &[(r, s)]).is_ok()
}

/// The forced morphism from `g↓r` to `g↓s` sending `r` to `s`, or the
/// obstruction met by the pair closure.
pub fn explain_forced_morphism(
    g: &Graph,
    r: &Token,
    s: &Token,
) -> Result<std::result::Result<MorphismWitness, Obstruction>> {
    require_deterministic(g)?;
    let ri = g.require_vertex(r)?;
    let si = g.require_vertex(s)?;
    let forward = match pair_closure(g, &[(ri, si)]) {
        Ok(image) => image,
        Err(obstruction) => return Ok(Err(obstruction)),
    };
    let is_isomorphism = match pair_closure(g, &[(si, ri)]) {
        Ok(back) => forward
            .iter()
            .enumerate()
            .all(|(p, q)| q.is_none_or(|q| back[q] == Some(p))),
        Err(_) => false,
    };
    let mapping = forward
        .iter()
        .enumerate()
        .filter_map(|(p, q)| q.map(|q| (g.vertex(p).clone(), g.vertex(q).clone())))
        .collect();
    Ok(Ok(MorphismWitness {
        mapping,
        source_anchor: r.clone(),
        target_anchor: s.clone(),
        is_isomorphism,
    }))
}

pub fn forced_morphism(g: &Graph, r: &Token, s: &Token) -> Result<Option<MorphismWitness>> {
    Ok(explain_forced_morphism(g, r, s)?.ok())
}

pub(crate) fn propagating(g: &Graph, r: usize) -> bool {
    (0..g.vertex_count()).all(|s| morphism_exists(g, r, s))
}

pub fn is_propagating_vertex(g: &Graph, r: &Token) -> Result<bool> {
    require_deterministic(g)?;
    Ok(propagating(g, g.require_vertex(r)?))
}

pub(crate) fn forward_vertex_transitive(g: &Graph) -> bool {
    let n = g.vertex_count();
    match first_root(g) {
        Some(r) => g
            .out_edges(r)
            .iter()
            .all(|&(_, s)| morphism_exists(g, r, s) && morphism_exists(g, s, r)),
        None => (0..n).all(|r| (0..n).all(|s| morphism_exists(g, r, s))),
    }
}

pub fn is_forward_vertex_transitive(g: &Graph) -> Result<bool> {
    require_deterministic(g)?;
    Ok(forward_vertex_transitive(g))
}

pub fn is_propagating_graph(g: &Graph) -> Result<bool> {
    is_forward_vertex_transitive(g)
}

fn require_det_codet(g: &Graph) -> Result<()> {
    require_deterministic(g)?;
    require_co_deterministic(g)
}

pub fn is_chain_propagating_vertex(g: &Graph, v: &Token) -> Result<bool> {
    require_det_codet(g)?;
    g.require_vertex(v)?;
    let bar = bar_graph(g);
    Ok(propagating(&bar, bar.require_vertex(v)?))
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    require_det_codet(g)?;
    Ok(forward_vertex_transitive(&bar_graph(g)))
}

pub fn is_chain_commutative(g: &Graph) -> bool {
    is_commutative(&bar_graph(g))
}
