//! Per-class decisions: is a graph a (generalized) Cayley graph of an algebra
//! of the class, with a checked witness or a refutation reason.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{axiom_report, AxiomReport, GeneratorSet, MagmaTable};
use crate::build::{cayley_graph, Labeling};
use crate::error::{Error, Result};
use crate::graph::{bar_graph, Graph, Token};
use crate::props::{
    forward_vertex_transitive, in_simple, is_commutative, is_root_at, locally_commutative,
    loop_propagating, out_simple, propagating, source_complete_at, structural_report,
    target_complete_at, StructuralReport,
};
use crate::synth::{
    anchor_labeling, chain_operation, construct_g1, construct_g2, construct_g3, edge_operation,
    path_operation, search_semigroup_injection, semigroup_table, Injection, InjectionSearch,
    SemigroupVariant, DEFAULT_SEARCH_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassId {
    MagmaLeftIdentity,
    UnitalMagma,
    CommutativeUnitalMagma,
    FullMagmaVariants,
    Monoid,
    CommutativeMonoid,
    RightCancellativeMonoid,
    LeftCancellativeMonoid,
    CancellativeMonoid,
    LeftCancellativeCommutativeMonoid,
    CancellativeCommutativeMonoid,
    Semigroup,
    CommutativeSemigroup,
    CancellativeSemigroup,
    CancellativeCommutativeSemigroup,
    Semilattice,
    Group,
    AbelianGroup,
}

impl ClassId {
    pub const ALL: [ClassId; 18] = [
        ClassId::MagmaLeftIdentity,
        ClassId::UnitalMagma,
        ClassId::CommutativeUnitalMagma,
        ClassId::FullMagmaVariants,
        ClassId::Monoid,
        ClassId::CommutativeMonoid,
        ClassId::RightCancellativeMonoid,
        ClassId::LeftCancellativeMonoid,
        ClassId::CancellativeMonoid,
        ClassId::LeftCancellativeCommutativeMonoid,
        ClassId::CancellativeCommutativeMonoid,
        ClassId::Semigroup,
        ClassId::CommutativeSemigroup,
        ClassId::CancellativeSemigroup,
        ClassId::CancellativeCommutativeSemigroup,
        ClassId::Semilattice,
        ClassId::Group,
        ClassId::AbelianGroup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::MagmaLeftIdentity => "magma_left_identity",
            ClassId::UnitalMagma => "unital_magma",
            ClassId::CommutativeUnitalMagma => "commutative_unital_magma",
            ClassId::FullMagmaVariants => "full_magma_variants",
            ClassId::Monoid => "monoid",
            ClassId::CommutativeMonoid => "commutative_monoid",
            ClassId::RightCancellativeMonoid => "right_cancellative_monoid",
            ClassId::LeftCancellativeMonoid => "left_cancellative_monoid",
            ClassId::CancellativeMonoid => "cancellative_monoid",
            ClassId::LeftCancellativeCommutativeMonoid => "left_cancellative_commutative_monoid",
            ClassId::CancellativeCommutativeMonoid => "cancellative_commutative_monoid",
            ClassId::Semigroup => "semigroup",
            ClassId::CommutativeSemigroup => "commutative_semigroup",
            ClassId::CancellativeSemigroup => "cancellative_semigroup",
            ClassId::CancellativeCommutativeSemigroup => "cancellative_commutative_semigroup",
            ClassId::Semilattice => "semilattice",
            ClassId::Group => "group",
            ClassId::AbelianGroup => "abelian_group",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence for a positive verdict. `labeling` names each generator of the
/// table by the graph label it carries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertex: Option<Token>,
    pub injection: Option<Injection>,
    pub table: Option<MagmaTable>,
    pub labeling: Option<Labeling>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub class: ClassId,
    pub holds: bool,
    /// Set when the injection search hit its cap before deciding.
    #[serde(default)]
    pub undecided: bool,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
    #[serde(default)]
    pub details: BTreeMap<String, bool>,
}

impl ClassVerdict {
    fn yes(class: ClassId, witness: Witness) -> ClassVerdict {
        ClassVerdict {
            class,
            holds: true,
            undecided: false,
            witness: Some(witness),
            reason: None,
            details: BTreeMap::new(),
        }
    }

    fn no(class: ClassId, reason: impl Into<String>) -> ClassVerdict {
        ClassVerdict {
            class,
            holds: false,
            undecided: false,
            witness: None,
            reason: Some(reason.into()),
            details: BTreeMap::new(),
        }
    }

    fn unknown(class: ClassId) -> ClassVerdict {
        ClassVerdict {
            undecided: true,
            ..ClassVerdict::no(class, "unknown: search capped")
        }
    }

    pub fn table(&self) -> Option<&MagmaTable> {
        self.witness.as_ref().and_then(|w| w.table.as_ref())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub structural: StructuralReport,
    pub verdicts: Vec<ClassVerdict>,
}

impl ClassificationReport {
    pub fn verdict(&self, class: ClassId) -> &ClassVerdict {
        self.verdicts
            .iter()
            .find(|v| v.class == class)
            .expect("every class has a verdict")
    }

    pub fn holds(&self, class: ClassId) -> bool {
        self.verdict(class).holds
    }

    pub fn holding(&self) -> Vec<ClassId> {
        self.verdicts.iter().filter(|v| v.holds).map(|v| v.class).collect()
    }
}

fn internal(err: Error) -> Error {
    match err {
        Error::InternalContradiction(_) => err,
        other => Error::InternalContradiction(other.to_string()),
    }
}

fn contradiction(message: impl Into<String>) -> Error {
    Error::InternalContradiction(message.into())
}

/// Rebuilds the Cayley graph of the witness and compares it with `g`.
fn round_trip(g: &Graph, class: ClassId, table: &MagmaTable, labeling: &Labeling) -> Result<()> {
    let q = GeneratorSet::new(labeling.domain()).map_err(internal)?;
    if &cayley_graph(table, &q, labeling).map_err(internal)? != g {
        return Err(contradiction(format!("{class}: witness does not rebuild the input graph")));
    }
    Ok(())
}

fn check_axioms(class: ClassId, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(contradiction(format!("{class}: witness table fails the class axioms")))
    }
}

fn anchored_witness(
    g: &Graph,
    class: ClassId,
    r: usize,
    table: MagmaTable,
    axioms: impl Fn(&AxiomReport, &Token) -> bool,
) -> Result<ClassVerdict> {
    let vertex = g.vertex(r).clone();
    let labeling = anchor_labeling(g, &vertex).map_err(internal)?;
    round_trip(g, class, &table, &labeling)?;
    check_axioms(class, axioms(&axiom_report(&table), &vertex))?;
    Ok(ClassVerdict::yes(
        class,
        Witness {
            vertex: Some(vertex),
            injection: None,
            table: Some(table),
            labeling: Some(labeling),
        },
    ))
}

fn first_vertex(g: &Graph, pred: impl Fn(usize) -> bool) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| pred(v))
}

fn det_source_complete(s: &StructuralReport) -> Option<&'static str> {
    if !s.deterministic {
        Some("not deterministic")
    } else if !s.source_complete {
        Some("not source-complete")
    } else {
        None
    }
}

fn magma_with(s: &StructuralReport, g: &Graph, class: ClassId) -> Result<ClassVerdict> {
    if let Some(reason) = det_source_complete(s) {
        return Ok(ClassVerdict::no(class, reason));
    }
    let (pred, missing): (&dyn Fn(usize) -> bool, &str) = match class {
        ClassId::MagmaLeftIdentity => (&|v| out_simple(g, v), "no out-simple vertex"),
        ClassId::UnitalMagma => (
            &|v| out_simple(g, v) && loop_propagating(g, v),
            "no out-simple loop-propagating vertex",
        ),
        _ => (
            &|v| out_simple(g, v) && loop_propagating(g, v) && locally_commutative(g, v),
            "no out-simple, loop-propagating, locally commutative vertex",
        ),
    };
    let Some(r) = first_vertex(g, pred) else {
        return Ok(ClassVerdict::no(class, missing));
    };
    let anchor = g.vertex(r).clone();
    let completed = match class {
        ClassId::MagmaLeftIdentity => construct_g1(g, &anchor),
        ClassId::UnitalMagma => construct_g2(g, &anchor),
        _ => construct_g3(g, &anchor),
    }
    .map_err(internal)?;
    let table = edge_operation(&completed, &anchor).map_err(internal)?;
    anchored_witness(g, class, r, table, |rep, v| match class {
        ClassId::MagmaLeftIdentity => rep.left_identities.contains(v),
        ClassId::UnitalMagma => rep.identity.as_ref() == Some(v),
        _ => rep.identity.as_ref() == Some(v) && rep.commutative,
    })
}

/// Generalized Cayley graphs of magmas with a left identity, an identity,
/// or an identity and commutativity.
pub fn classify_magma(g: &Graph) -> Result<Vec<ClassVerdict>> {
    let s = structural_report(g);
    [
        ClassId::MagmaLeftIdentity,
        ClassId::UnitalMagma,
        ClassId::CommutativeUnitalMagma,
    ]
    .into_iter()
    .map(|class| magma_with(&s, g, class))
    .collect()
}

/// `g = C⟦M⟧` over the full carrier, with sub-flags for the properties of `M`.
pub fn classify_full_magma(g: &Graph) -> Result<ClassVerdict> {
    let class = ClassId::FullMagmaVariants;
    let s = structural_report(g);
    if let Some(reason) = det_source_complete(&s) {
        return Ok(ClassVerdict::no(class, reason));
    }
    let Some(r) = first_vertex(g, |v| out_simple(g, v) && s.one_roots.contains(g.vertex(v))) else {
        return Ok(ClassVerdict::no(class, "no out-simple 1-root"));
    };
    let anchor = g.vertex(r).clone();
    let flags = [
        ("commutative", locally_commutative(g, r)),
        ("identity", loop_propagating(g, r)),
        ("left_cancellative", s.simple),
        ("right_cancellative", s.co_deterministic),
        ("left_invertible", target_complete_at(g, r)),
        ("right_invertible", s.one_coroots.contains(&anchor)),
    ];
    let table = edge_operation(g, &anchor).map_err(internal)?;
    let mut verdict = anchored_witness(g, class, r, table, |rep, v| {
        let actual = [
            rep.commutative,
            rep.identity.as_ref() == Some(v),
            rep.left_cancellative,
            rep.right_cancellative,
            rep.left_invertible_wrt.contains(v),
            rep.right_invertible_wrt.contains(v),
        ];
        rep.left_identities.contains(v) && flags.iter().zip(actual).all(|((_, f), a)| *f == a)
    })?;
    verdict.details = flags.iter().map(|(k, f)| (k.to_string(), *f)).collect();
    Ok(verdict)
}

fn monoid_root(g: &Graph, extra: impl Fn(usize) -> bool) -> Option<usize> {
    first_vertex(g, |v| {
        is_root_at(g, v) && out_simple(g, v) && propagating(g, v) && extra(v)
    })
}

fn monoid_verdict(
    g: &Graph,
    class: ClassId,
    r: usize,
    axioms: impl Fn(&AxiomReport) -> bool,
) -> Result<ClassVerdict> {
    let table = path_operation(g, g.vertex(r)).map_err(internal)?;
    anchored_witness(g, class, r, table, |rep, v| {
        rep.is_monoid() && rep.identity.as_ref() == Some(v) && axioms(rep)
    })
}

/// Cayley graphs of monoids and of their commutative and cancellative kinds.
pub fn classify_monoid(g: &Graph) -> Result<Vec<ClassVerdict>> {
    let s = structural_report(g);
    let mut out = Vec::new();

    let det_sc = det_source_complete(&s);
    let simple_fvt = || -> Option<&'static str> {
        if !s.deterministic {
            Some("not deterministic")
        } else if s.roots.is_empty() {
            Some("not rooted")
        } else if !s.simple {
            Some("not simple")
        } else if !forward_vertex_transitive(g) {
            Some("not forward vertex-transitive")
        } else {
            None
        }
    };

    for (class, need_codet, need_comm) in [
        (ClassId::Monoid, false, false),
        (ClassId::CommutativeMonoid, false, true),
        (ClassId::RightCancellativeMonoid, true, false),
    ] {
        let verdict = if let Some(reason) = det_sc {
            ClassVerdict::no(class, reason)
        } else if need_codet && !s.co_deterministic {
            ClassVerdict::no(class, "not co-deterministic")
        } else {
            let root = monoid_root(g, |v| !need_comm || locally_commutative(g, v));
            match root {
                None if need_comm => ClassVerdict::no(
                    class,
                    "no propagating, locally commutative, out-simple root",
                ),
                None => ClassVerdict::no(class, "no propagating out-simple root"),
                Some(r) => monoid_verdict(g, class, r, |rep| {
                    (!need_comm || rep.commutative) && (!need_codet || rep.right_cancellative)
                })?,
            }
        };
        out.push(verdict);
    }

    for (class, need_codet, need_comm) in [
        (ClassId::LeftCancellativeMonoid, false, false),
        (ClassId::CancellativeMonoid, true, false),
        (ClassId::LeftCancellativeCommutativeMonoid, false, true),
        (ClassId::CancellativeCommutativeMonoid, true, true),
    ] {
        let reason = simple_fvt().or_else(|| {
            if need_codet && !s.co_deterministic {
                Some("not co-deterministic")
            } else if need_comm && !is_commutative(g) {
                Some("not commutative")
            } else {
                None
            }
        });
        if need_comm {
            let alternative = s.deterministic
                && (!need_codet || s.co_deterministic)
                && forward_vertex_transitive(g)
                && monoid_root(g, |v| locally_commutative(g, v)).is_some();
            if alternative != reason.is_none() {
                return Err(contradiction(format!(
                    "{class}: the two commutative characterizations disagree"
                )));
            }
        }
        let verdict = match reason {
            Some(reason) => ClassVerdict::no(class, reason),
            None => {
                let r = monoid_root(g, |_| true)
                    .ok_or_else(|| contradiction(format!("{class}: no propagating root")))?;
                monoid_verdict(g, class, r, |rep| {
                    rep.left_cancellative
                        && (!need_codet || rep.right_cancellative)
                        && (!need_comm || rep.commutative)
                })?
            }
        };
        out.push(verdict);
    }
    Ok(out)
}

const SEMIGROUP_CLASSES: [(ClassId, SemigroupVariant); 5] = [
    (ClassId::Semigroup, SemigroupVariant::Plain),
    (ClassId::CommutativeSemigroup, SemigroupVariant::Commutative),
    (ClassId::CancellativeSemigroup, SemigroupVariant::Cancellative),
    (
        ClassId::CancellativeCommutativeSemigroup,
        SemigroupVariant::CancellativeCommutative,
    ),
    (ClassId::Semilattice, SemigroupVariant::Semilattice),
];

/// Cayley graphs of semigroups, decided by an injection search visiting at
/// most `cap` partial assignments per class.
pub fn classify_semigroup(g: &Graph, cap: u64) -> Result<Vec<ClassVerdict>> {
    let mut out = Vec::new();
    for (class, variant) in SEMIGROUP_CLASSES {
        let cancellative = matches!(
            variant,
            SemigroupVariant::Cancellative | SemigroupVariant::CancellativeCommutative
        );
        let verdict = if !g.is_deterministic() {
            ClassVerdict::no(class, "not deterministic")
        } else if cancellative && !g.is_co_deterministic() {
            ClassVerdict::no(class, "not co-deterministic")
        } else {
            match search_semigroup_injection(g, variant, cap).map_err(internal)? {
                InjectionSearch::Capped => ClassVerdict::unknown(class),
                InjectionSearch::Exhausted => {
                    ClassVerdict::no(class, "no injection of labels into vertices satisfies the conditions")
                }
                InjectionSearch::Found(i) => semigroup_verdict(g, class, variant, i)?,
            }
        };
        out.push(verdict);
    }
    Ok(out)
}

fn semigroup_verdict(
    g: &Graph,
    class: ClassId,
    variant: SemigroupVariant,
    i: Injection,
) -> Result<ClassVerdict> {
    let table = semigroup_table(g, &i).map_err(internal)?;
    let labeling = Labeling::new(i.map().iter().map(|(a, v)| (v.clone(), a.clone())).collect())
        .map_err(internal)?;
    round_trip(g, class, &table, &labeling)?;
    let rep = axiom_report(&table);
    let ok = rep.associative
        && match variant {
            SemigroupVariant::Plain => true,
            SemigroupVariant::Commutative => rep.commutative,
            SemigroupVariant::Cancellative => rep.is_cancellative(),
            SemigroupVariant::CancellativeCommutative => rep.is_cancellative() && rep.commutative,
            SemigroupVariant::Semilattice => rep.commutative && rep.idempotent,
        };
    check_axioms(class, ok)?;
    Ok(ClassVerdict::yes(
        class,
        Witness {
            vertex: None,
            injection: Some(i),
            table: Some(table),
            labeling: Some(labeling),
        },
    ))
}

fn group_base(s: &StructuralReport) -> Option<&'static str> {
    if !s.deterministic {
        Some("not deterministic")
    } else if !s.co_deterministic {
        Some("not co-deterministic")
    } else if !s.connected {
        Some("not connected")
    } else {
        None
    }
}

fn route_b_vertex(g: &Graph, abelian: bool) -> Option<usize> {
    let s = structural_report(g);
    if group_base(&s).is_some() {
        return None;
    }
    let bar = bar_graph(g);
    first_vertex(g, |v| {
        source_complete_at(g, v)
            && target_complete_at(g, v)
            && in_simple(g, v)
            && out_simple(g, v)
            && (!abelian || locally_commutative(g, v))
            && propagating(&bar, bar.vertex_index(g.vertex(v)).unwrap())
    })
}

fn route_c_reason(g: &Graph, abelian: bool) -> Option<&'static str> {
    let s = structural_report(g);
    group_base(&s).or_else(|| {
        if !s.simple {
            Some("not simple")
        } else if !forward_vertex_transitive(&bar_graph(g)) {
            Some("not vertex-transitive")
        } else if abelian && !is_commutative(g) {
            Some("not commutative")
        } else {
            None
        }
    })
}

/// Least chain-propagating, source- and target-complete, in- and out-simple
/// vertex of a connected deterministic and co-deterministic graph.
pub fn group_route_b(g: &Graph) -> Option<Token> {
    route_b_vertex(g, false).map(|v| g.vertex(v).clone())
}

/// Connected, simple, deterministic, co-deterministic and vertex-transitive.
pub fn group_route_c(g: &Graph) -> bool {
    route_c_reason(g, false).is_none()
}

/// [`group_route_b`] restricted to locally commutative vertices.
pub fn abelian_route_b(g: &Graph) -> Option<Token> {
    route_b_vertex(g, true).map(|v| g.vertex(v).clone())
}

/// [`group_route_c`] for a commutative graph.
pub fn abelian_route_c(g: &Graph) -> bool {
    route_c_reason(g, true).is_none()
}

/// Cayley graphs of groups and abelian groups. Both characterizations are
/// evaluated and must agree.
pub fn classify_group(g: &Graph) -> Result<Vec<ClassVerdict>> {
    let mut out = Vec::new();
    for (class, abelian) in [(ClassId::Group, false), (ClassId::AbelianGroup, true)] {
        let reason = route_c_reason(g, abelian);
        let vertex = route_b_vertex(g, abelian);
        if reason.is_none() != vertex.is_some() {
            return Err(contradiction(format!("{class}: the two group characterizations disagree")));
        }
        let verdict = match (reason, vertex) {
            (Some(reason), _) => ClassVerdict::no(class, reason),
            (None, Some(r)) => {
                let table = chain_operation(g, g.vertex(r)).map_err(internal)?;
                anchored_witness(g, class, r, table, |rep, v| {
                    rep.is_group() && rep.identity.as_ref() == Some(v) && (!abelian || rep.commutative)
                })?
            }
            (None, None) => unreachable!(),
        };
        out.push(verdict);
    }
    Ok(out)
}

const IMPLICATIONS: [(ClassId, ClassId); 8] = [
    (ClassId::AbelianGroup, ClassId::Group),
    (ClassId::CancellativeMonoid, ClassId::LeftCancellativeMonoid),
    (ClassId::CancellativeMonoid, ClassId::RightCancellativeMonoid),
    (ClassId::CommutativeMonoid, ClassId::Monoid),
    (ClassId::Semilattice, ClassId::CommutativeSemigroup),
    (ClassId::Group, ClassId::CancellativeMonoid),
    (ClassId::UnitalMagma, ClassId::MagmaLeftIdentity),
    (ClassId::CommutativeUnitalMagma, ClassId::UnitalMagma),
];

fn check_monotonicity(report: &ClassificationReport) -> Result<()> {
    for (stronger, weaker) in IMPLICATIONS {
        let w = report.verdict(weaker);
        if report.holds(stronger) && !w.holds && !w.undecided {
            return Err(contradiction(format!("{stronger} holds but {weaker} does not")));
        }
    }
    Ok(())
}

pub fn classify_all(g: &Graph) -> Result<ClassificationReport> {
    classify_all_with_cap(g, DEFAULT_SEARCH_CAP)
}

pub fn classify_all_with_cap(g: &Graph, cap: u64) -> Result<ClassificationReport> {
    let mut verdicts = classify_magma(g)?;
    verdicts.push(classify_full_magma(g)?);
    verdicts.extend(classify_monoid(g)?);
    verdicts.extend(classify_semigroup(g, cap)?);
    verdicts.extend(classify_group(g)?);
    verdicts.sort_by_key(|v| v.class);
    let report = ClassificationReport {
        structural: structural_report(g),
        verdicts,
    };
    check_monotonicity(&report)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn g(triples: &[(&str, &str, &str)]) -> Graph {
        Graph::from_triples(triples).unwrap()
    }

    fn t(s: &str) -> Token {
        Token::new(s).unwrap()
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

    fn mag4() -> Graph {
        g(&[
            ("r", "a", "p"),
            ("r", "b", "q"),
            ("p", "a", "r"),
            ("p", "b", "s"),
            ("q", "a", "s"),
            ("q", "b", "r"),
            ("s", "a", "p"),
            ("s", "b", "q"),
        ])
    }

    fn vertex_of(v: &ClassVerdict) -> Option<&Token> {
        v.witness.as_ref().and_then(|w| w.vertex.as_ref())
    }

    #[test]
    fn magma_examples() {
        let verdicts = classify_magma(&mag4()).unwrap();
        assert!(verdicts.iter().all(|v| v.holds));
        assert_eq!(vertex_of(&verdicts[2]), Some(&t("r")));
        assert_eq!(verdicts[2].table(), Some(&catalog::mag4()));

        let single = classify_magma(&g(&[("r", "a", "s")])).unwrap();
        assert!(!single[0].holds);
        assert_eq!(single[0].reason.as_deref(), Some("not source-complete"));

        let h = classify_magma(&g(&[("r", "a", "s"), ("s", "a", "s")])).unwrap();
        assert!(h[0].holds);
        assert_eq!(vertex_of(&h[0]), Some(&t("r")));
    }

    #[test]
    fn full_magma_examples() {
        let v = classify_full_magma(&mon3()).unwrap();
        assert!(v.holds);
        assert_eq!(vertex_of(&v), Some(&t("r")));
        assert!(!v.details["left_cancellative"]);
        assert!(v.details["identity"]);
        assert!(!classify_full_magma(&z3()).unwrap().holds);
        let one = classify_full_magma(&g(&[("x", "a", "x")])).unwrap();
        assert!(one.holds && one.details.values().all(|&f| f));
    }

    #[test]
    fn monoid_examples() {
        let m = classify_monoid(&mon3()).unwrap();
        assert!(m[0].holds);
        assert_eq!(vertex_of(&m[0]), Some(&t("r")));
        assert_eq!(m[0].table(), Some(&catalog::mon3()));
        assert!(classify_monoid(&z3()).unwrap().iter().all(|v| v.holds));
        let single = classify_monoid(&g(&[("r", "a", "s")])).unwrap();
        assert_eq!(single[0].reason.as_deref(), Some("not source-complete"));
    }

    #[test]
    fn semigroup_examples() {
        let s = classify_semigroup(&semi3(), DEFAULT_SEARCH_CAP).unwrap();
        let lattice = &s[4];
        assert_eq!(lattice.class, ClassId::Semilattice);
        assert!(lattice.holds);
        let i = lattice.witness.as_ref().unwrap().injection.as_ref().unwrap();
        assert_eq!(i.get(&t("a")), Some(&t("p")));
        assert_eq!(i.get(&t("b")), Some(&t("q")));
        assert_eq!(lattice.table(), Some(&catalog::semi3()));
        assert!(!classify_semigroup(&g(&[("r", "a", "s")]), DEFAULT_SEARCH_CAP).unwrap()[0].holds);
        assert!(classify_semigroup(&mon3(), DEFAULT_SEARCH_CAP).unwrap()[0].holds);
        let capped = classify_semigroup(&semi3(), 1).unwrap();
        assert!(capped[0].undecided && !capped[0].holds);
        assert_eq!(capped[0].reason.as_deref(), Some("unknown: search capped"));
    }

    #[test]
    fn group_examples() {
        let z = classify_group(&z3()).unwrap();
        assert!(z[0].holds && z[1].holds);
        assert_eq!(z[0].table(), Some(&catalog::cyclic(3)));
        let z2 = classify_group(&g(&[("0", "a", "1"), ("1", "a", "0")])).unwrap();
        assert!(z2[0].holds && z2[1].holds);
        let m = classify_group(&mon3()).unwrap();
        assert_eq!(m[0].reason.as_deref(), Some("not co-deterministic"));
        assert_eq!(group_route_b(&z3()), Some(t("0")));
        assert!(group_route_c(&z3()));
    }

    #[test]
    fn classify_all_examples() {
        let z = classify_all(&z3()).unwrap();
        for class in ClassId::ALL {
            let expected = !matches!(
                class,
                ClassId::Semilattice | ClassId::FullMagmaVariants
            );
            assert_eq!(z.holds(class), expected, "{class}");
        }
        let s = classify_all(&semi3()).unwrap();
        assert!(s.holds(ClassId::Semilattice) && s.holds(ClassId::CommutativeSemigroup));
        assert!(!s.holds(ClassId::Monoid));
        let nondet = classify_all(&g(&[("r", "a", "s"), ("r", "a", "t")])).unwrap();
        for v in &nondet.verdicts {
            assert!(!v.holds);
            assert!(v.reason.as_deref().unwrap().contains("not deterministic"), "{}", v.class);
        }
    }

    #[test]
    fn report_serializes() {
        let report = classify_all(&semi3()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert!(text.contains("\"class\":\"semilattice\""));
    }
}
