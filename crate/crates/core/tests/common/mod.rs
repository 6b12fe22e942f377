//! Exhaustive corpora and brute-force oracles shared by the integration tests.
//!
//! Nothing here calls the deciders under test; every oracle works on a plain
//! transition array.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use cayley_core::classify::ClassId;
use cayley_core::{Edge, Graph, Token};

/// A deterministic graph as a transition array `delta[s * k + a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Det {
    pub n: usize,
    pub k: usize,
    pub delta: Vec<Option<usize>>,
}

pub type Key = Det;

impl Det {
    pub fn of(g: &Graph) -> Det {
        let n = g.vertices().len();
        let k = g.labels().len();
        let vi = |t: &Token| g.vertices().iter().position(|v| v == t).unwrap();
        let li = |t: &Token| g.labels().iter().position(|v| v == t).unwrap();
        let mut delta = vec![None; n * k];
        for e in g.edges() {
            let slot = &mut delta[vi(&e.src) * k + li(&e.label)];
            assert!(slot.is_none(), "graph is not deterministic");
            *slot = Some(vi(&e.dst));
        }
        Det { n, k, delta }
    }

    pub fn succ(&self, s: usize, a: usize) -> Option<usize> {
        self.delta[s * self.k + a]
    }

    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.n {
            for a in 0..self.k {
                if let Some(t) = self.succ(s, a) {
                    out.push((s, a, t));
                }
            }
        }
        out
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.edges().into_iter().map(|(s, a, t)| {
            Edge::new(vertex_name(s), label_name(a), vertex_name(t))
        }))
        .unwrap()
    }

    pub fn run(&self, s: usize, word: &[usize]) -> Option<usize> {
        let mut v = s;
        for &a in word {
            v = self.succ(v, a)?;
        }
        Some(v)
    }

    pub fn is_co_deterministic(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges().into_iter().all(|(_, a, t)| seen.insert((a, t)))
    }

    /// Bar-graph of a co-deterministic graph: label `k + a` reverses `a`.
    pub fn bar(&self) -> Det {
        let k = 2 * self.k;
        let mut delta = vec![None; self.n * k];
        for (s, a, t) in self.edges() {
            delta[s * k + a] = Some(t);
            assert!(delta[t * k + self.k + a].is_none());
            delta[t * k + self.k + a] = Some(s);
        }
        Det { n: self.n, k, delta }
    }
}

pub fn vertex_name(v: usize) -> Token {
    Token::new(v.to_string()).unwrap()
}

pub fn label_name(a: usize) -> Token {
    Token::new(((b'a' + a as u8) as char).to_string()).unwrap()
}

/// Every deterministic graph on vertices `0..n` (`n ≤ 3`) over labels `a` or
/// `a, b`, in which every vertex and label occurs.
pub fn det_corpus() -> Vec<Det> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        for k in 1..=2 {
            let slots = n * k;
            let total = (n + 1).pow(slots as u32);
            for code in 0..total {
                let mut c = code;
                let delta: Vec<Option<usize>> = (0..slots)
                    .map(|_| {
                        let d = c % (n + 1);
                        c /= n + 1;
                        d.checked_sub(1)
                    })
                    .collect();
                let d = Det { n, k, delta };
                let edges = d.edges();
                let used_vertices: BTreeSet<usize> =
                    edges.iter().flat_map(|&(s, _, t)| [s, t]).collect();
                let used_labels: BTreeSet<usize> = edges.iter().map(|&(_, a, _)| a).collect();
                if used_vertices.len() == n && used_labels.len() == k {
                    out.push(d);
                }
            }
        }
    }
    out
}

pub fn corpus() -> Vec<(Det, Graph)> {
    det_corpus()
        .into_iter()
        .map(|d| {
            let g = d.graph();
            (d, g)
        })
        .collect()
}

pub fn accessible(d: &Det, r: usize) -> Vec<usize> {
    let mut seen = vec![false; d.n];
    let mut stack = vec![r];
    seen[r] = true;
    while let Some(v) = stack.pop() {
        for a in 0..d.k {
            if let Some(t) = d.succ(v, a) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    (0..d.n).filter(|&v| seen[v]).collect()
}

/// Calls `f` on every map from `domain` into `codomain`.
fn for_each_map(domain: &[usize], codomain: &[usize], mut f: impl FnMut(&HashMap<usize, usize>)) {
    let m = codomain.len();
    let total = m.pow(domain.len() as u32);
    for code in 0..total {
        let mut c = code;
        let map: HashMap<usize, usize> = domain
            .iter()
            .map(|&x| {
                let y = codomain[c % m];
                c /= m;
                (x, y)
            })
            .collect();
        f(&map);
    }
}

fn is_morphism(d: &Det, domain: &[usize], h: &HashMap<usize, usize>) -> bool {
    domain.iter().all(|&p| {
        (0..d.k).all(|a| match d.succ(p, a) {
            None => true,
            Some(q) => d.succ(h[&p], a) == Some(h[&q]),
        })
    })
}

/// All morphisms from `G↓r` into `G↓s` sending `r` to `s`.
pub fn brute_morphisms(d: &Det, r: usize, s: usize) -> Vec<HashMap<usize, usize>> {
    let dom = accessible(d, r);
    let cod = accessible(d, s);
    let mut out = Vec::new();
    for_each_map(&dom, &cod, |h| {
        if h[&r] == s && is_morphism(d, &dom, h) {
            out.push(h.clone());
        }
    });
    out
}

/// Whether some morphism `G↓r -> G↓s` with `r ↦ s` is a bijection whose
/// inverse is also a morphism.
pub fn brute_accessible_iso(d: &Det, r: usize, s: usize) -> bool {
    let dom = accessible(d, r);
    let cod = accessible(d, s);
    if dom.len() != cod.len() {
        return false;
    }
    brute_morphisms(d, r, s).into_iter().any(|h| {
        let image: BTreeSet<usize> = h.values().copied().collect();
        if image.len() != dom.len() {
            return false;
        }
        let inv: HashMap<usize, usize> = h.iter().map(|(&x, &y)| (y, x)).collect();
        is_morphism(d, &cod, &inv)
    })
}

pub fn brute_forward_vertex_transitive(d: &Det) -> bool {
    (0..d.n).all(|r| (0..d.n).all(|s| brute_accessible_iso(d, r, s)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn automorphisms(d: &Det) -> Vec<Vec<usize>> {
    let edges: HashSet<(usize, usize, usize)> = d.edges().into_iter().collect();
    permutations(d.n)
        .into_iter()
        .filter(|p| {
            edges
                .iter()
                .all(|&(s, a, t)| edges.contains(&(p[s], a, p[t])))
        })
        .collect()
}

pub fn brute_vertex_transitive(d: &Det) -> bool {
    let autos = automorphisms(d);
    (0..d.n).all(|r| (0..d.n).all(|s| autos.iter().any(|p| p[r] == s)))
}

/// For all words `u, v` of length at most `max_len` with `r -u-> t <-v- r`,
/// both are runnable from `s` to a common vertex.
pub fn word_pair_condition(d: &Det, r: usize, s: usize, max_len: usize) -> bool {
    // For every target t of r, the set of endpoints of the same words from s.
    let mut ends: HashMap<usize, HashSet<Option<usize>>> = HashMap::new();
    let mut stack = vec![(r, Some(s), 0usize)];
    while let Some((p, q, len)) = stack.pop() {
        ends.entry(p).or_default().insert(q);
        if len == max_len {
            continue;
        }
        for a in 0..d.k {
            if let Some(p2) = d.succ(p, a) {
                stack.push((p2, q.and_then(|q| d.succ(q, a)), len + 1));
            }
        }
    }
    ends.values()
        .all(|set| set.len() == 1 && set.iter().next().unwrap().is_some())
}

/// Every word pair runnable to a common target from `r` is so from every vertex.
pub fn brute_propagating(d: &Det, r: usize) -> bool {
    (0..d.n).all(|s| word_pair_condition(d, r, s, d.n * d.n))
}

pub fn brute_source_complete(d: &Det) -> bool {
    d.delta.iter().all(Option::is_some)
}

pub fn brute_target_complete(d: &Det) -> bool {
    let edges = d.edges();
    (0..d.n).all(|t| (0..d.k).all(|a| edges.iter().any(|&(_, b, u)| b == a && u == t)))
}

pub fn brute_simple(d: &Det) -> bool {
    (0..d.n).all(|s| {
        let targets: Vec<usize> = (0..d.k).filter_map(|a| d.succ(s, a)).collect();
        let distinct: BTreeSet<usize> = targets.iter().copied().collect();
        distinct.len() == targets.len()
    })
}

pub fn brute_commutative(d: &Det) -> bool {
    (0..d.n).all(|s| {
        (0..d.k).all(|a| {
            (0..d.k).all(|b| match d.run(s, &[a, b]) {
                Some(t) => d.run(s, &[b, a]) == Some(t),
                None => true,
            })
        })
    })
}

/// A finite magma on `0..m` with `op[x * m + y] = x·y`.
#[derive(Clone, Debug)]
pub struct Table {
    pub m: usize,
    pub op: Vec<usize>,
}

impl Table {
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.op[x * self.m + y]
    }

    pub fn all(m: usize) -> impl Iterator<Item = Table> {
        let cells = m * m;
        (0..m.pow(cells as u32)).map(move |code| {
            let mut c = code;
            let op = (0..cells)
                .map(|_| {
                    let d = c % m;
                    c /= m;
                    d
                })
                .collect();
            Table { m, op }
        })
    }

    fn elems(&self) -> std::ops::Range<usize> {
        0..self.m
    }

    pub fn associative(&self) -> bool {
        self.elems().all(|x| {
            self.elems().all(|y| {
                self.elems()
                    .all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    pub fn commutative(&self) -> bool {
        self.elems()
            .all(|x| self.elems().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn idempotent(&self) -> bool {
        self.elems().all(|x| self.mul(x, x) == x)
    }

    pub fn has_left_identity(&self) -> bool {
        self.elems().any(|e| self.elems().all(|x| self.mul(e, x) == x))
    }

    pub fn identity(&self) -> Option<usize> {
        self.elems()
            .find(|&e| self.elems().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn left_cancellative(&self) -> bool {
        self.elems().all(|x| {
            let row: BTreeSet<usize> = self.elems().map(|y| self.mul(x, y)).collect();
            row.len() == self.m
        })
    }

    pub fn right_cancellative(&self) -> bool {
        self.elems().all(|y| {
            let col: BTreeSet<usize> = self.elems().map(|x| self.mul(x, y)).collect();
            col.len() == self.m
        })
    }

    pub fn group(&self) -> bool {
        self.associative()
            && self.identity().is_some_and(|e| {
                self.elems().all(|x| self.elems().any(|y| {
                    self.mul(x, y) == e && self.mul(y, x) == e
                }))
            })
    }

    /// Closure of `q` under products, optionally with the identity added.
    pub fn generated(&self, q: &[usize], with_identity: Option<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = q.iter().copied().chain(with_identity).collect();
        loop {
            let next: BTreeSet<usize> = set
                .iter()
                .flat_map(|&x| set.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .chain(set.iter().copied())
                .collect();
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }
}

/// The generalized Cayley graph of `t` on `q`, where `q[j]` carries label `j`.
pub fn cayley_det(t: &Table, q: &[usize]) -> Det {
    let k = q.len();
    let mut delta = vec![None; t.m * k];
    for p in 0..t.m {
        for (j, &x) in q.iter().enumerate() {
            delta[p * k + j] = Some(t.mul(p, x));
        }
    }
    Det { n: t.m, k, delta }
}

/// Ordered generator lists of size 1 or 2 on `0..m`.
fn generator_lists(m: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..m).map(|x| vec![x]).collect();
    for x in 0..m {
        for y in 0..m {
            if x != y {
                out.push(vec![x, y]);
            }
        }
    }
    out
}

/// For every class, the set of corpus graphs that are Cayley graphs of an
/// algebra of that class, found by building every Cayley graph of every
/// table on at most three elements.
pub fn brute_class_members() -> HashMap<ClassId, HashSet<Key>> {
    let mut members: HashMap<ClassId, HashSet<Key>> =
        ClassId::ALL.iter().map(|&c| (c, HashSet::new())).collect();
    for m in 1..=3 {
        for t in Table::all(m) {
            let assoc = t.associative();
            let comm = t.commutative();
            let left_id = t.has_left_identity();
            let id = t.identity();
            let lc = t.left_cancellative();
            let rc = t.right_cancellative();
            let idem = t.idempotent();
            let group = t.group();
            let monoid = assoc && id.is_some();
            for q in generator_lists(m) {
                let key = cayley_det(&t, &q);
                let full_set = t.generated(&q, None).len() == m;
                let monoid_gen = id.is_some_and(|e| t.generated(&q, Some(e)).len() == m);
                let mut add = |c: ClassId, cond: bool| {
                    if cond {
                        members.get_mut(&c).unwrap().insert(key.clone());
                    }
                };
                add(ClassId::MagmaLeftIdentity, left_id);
                add(ClassId::UnitalMagma, id.is_some());
                add(ClassId::CommutativeUnitalMagma, id.is_some() && comm);
                add(ClassId::FullMagmaVariants, left_id && q.len() == m);
                let mg = monoid && monoid_gen;
                add(ClassId::Monoid, mg);
                add(ClassId::CommutativeMonoid, mg && comm);
                add(ClassId::RightCancellativeMonoid, mg && rc);
                add(ClassId::LeftCancellativeMonoid, mg && lc);
                add(ClassId::CancellativeMonoid, mg && lc && rc);
                add(ClassId::LeftCancellativeCommutativeMonoid, mg && lc && comm);
                add(ClassId::CancellativeCommutativeMonoid, mg && lc && rc && comm);
                let sg = assoc && full_set;
                add(ClassId::Semigroup, sg);
                add(ClassId::CommutativeSemigroup, sg && comm);
                add(ClassId::CancellativeSemigroup, sg && lc && rc);
                add(ClassId::CancellativeCommutativeSemigroup, sg && lc && rc && comm);
                add(ClassId::Semilattice, sg && comm && idem);
                add(ClassId::Group, group && full_set);
                add(ClassId::AbelianGroup, group && full_set && comm);
            }
        }
    }
    members
}
