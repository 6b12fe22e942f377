//! Generalized Cayley graphs of operation tables.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{GeneratorSet, MagmaTable};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Token};

/// An injective naming of generators by labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<Token, Token>", into = "BTreeMap<Token, Token>")]
pub struct Labeling(BTreeMap<Token, Token>);

impl Labeling {
    pub fn new(map: BTreeMap<Token, Token>) -> Result<Labeling> {
        let images: BTreeSet<&Token> = map.values().collect();
        if images.len() != map.len() {
            return Err(Error::LabelingDomainMismatch("labeling is not injective".into()));
        }
        Ok(Labeling(map))
    }

    pub fn get(&self, q: &Token) -> Option<&Token> {
        self.0.get(q)
    }

    pub fn map(&self) -> &BTreeMap<Token, Token> {
        &self.0
    }

    pub fn domain(&self) -> BTreeSet<Token> {
        self.0.keys().cloned().collect()
    }
}

impl TryFrom<BTreeMap<Token, Token>> for Labeling {
    type Error = Error;

    fn try_from(map: BTreeMap<Token, Token>) -> Result<Labeling> {
        Labeling::new(map)
    }
}

impl From<Labeling> for BTreeMap<Token, Token> {
    fn from(lab: Labeling) -> BTreeMap<Token, Token> {
        lab.0
    }
}

/// The identity labeling `q -> q`.
pub fn default_labeling(q: &GeneratorSet) -> Labeling {
    Labeling(q.iter().map(|x| (x.clone(), x.clone())).collect())
}

/// `{ p --[q]--> p·q | p in M, q in Q }`.
pub fn cayley_graph(t: &MagmaTable, q: &GeneratorSet, lab: &Labeling) -> Result<Graph> {
    for x in q.iter() {
        t.require(x)?;
    }
    if &lab.domain() != q.elements() {
        return Err(Error::LabelingDomainMismatch(
            "labeling must be defined exactly on the generators".into(),
        ));
    }
    let mut edges = Vec::with_capacity(t.size() * q.len());
    for p in t.carrier() {
        for x in q.iter() {
            edges.push(Edge::new(
                p.clone(),
                lab.get(x).unwrap().clone(),
                t.product(p, x)?.clone(),
            ));
        }
    }
    let g = Graph::new(edges)?;
    if g.vertex_count() != t.size() {
        return Err(Error::InternalContradiction(
            "some element is isolated in the Cayley graph".into(),
        ));
    }
    Ok(g)
}
