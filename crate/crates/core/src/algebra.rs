//! Finite operation tables and their axioms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Token;

/// A finite carrier with a total binary operation.
///
/// Equality ignores the declared carrier order.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct MagmaTable {
    carrier: Vec<Token>,
    index: BTreeMap<Token, usize>,
    op: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    elements: Vec<Token>,
    rows: Vec<Vec<Token>>,
}

impl TryFrom<TableRepr> for MagmaTable {
    type Error = Error;

    fn try_from(repr: TableRepr) -> Result<MagmaTable> {
        MagmaTable::new(repr.elements, repr.rows)
    }
}

impl From<MagmaTable> for TableRepr {
    fn from(t: MagmaTable) -> TableRepr {
        TableRepr {
            rows: t.rows(),
            elements: t.carrier,
        }
    }
}

impl MagmaTable {
    /// Builds a table from its carrier and rows; `rows[i][j]` is `x_i · x_j`.
    pub fn new(carrier: Vec<Token>, rows: Vec<Vec<Token>>) -> Result<MagmaTable> {
        let index = carrier_index(&carrier)?;
        if rows.len() != carrier.len() {
            return Err(Error::InvalidTable(format!(
                "{} rows for {} elements",
                rows.len(),
                carrier.len()
            )));
        }
        let mut op = Vec::with_capacity(carrier.len() * carrier.len());
        for row in &rows {
            if row.len() != carrier.len() {
                return Err(Error::InvalidTable(format!(
                    "row of length {} for {} elements",
                    row.len(),
                    carrier.len()
                )));
            }
            for entry in row {
                op.push(
                    *index
                        .get(entry)
                        .ok_or_else(|| Error::UnknownElement(entry.clone()))?,
                );
            }
        }
        Ok(MagmaTable { carrier, index, op })
    }

    /// Builds a table from an index-level operation.
    pub fn from_fn(carrier: Vec<Token>, f: impl Fn(usize, usize) -> usize) -> Result<MagmaTable> {
        let index = carrier_index(&carrier)?;
        let n = carrier.len();
        let mut op = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let k = f(i, j);
                if k >= n {
                    return Err(Error::InvalidTable(format!("product index {k} out of range")));
                }
                op.push(k);
            }
        }
        Ok(MagmaTable { carrier, index, op })
    }

    pub fn carrier(&self) -> &[Token] {
        &self.carrier
    }

    pub fn carrier_set(&self) -> BTreeSet<Token> {
        self.carrier.iter().cloned().collect()
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn index_of(&self, x: &Token) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn require(&self, x: &Token) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::UnknownElement(x.clone()))
    }

    pub fn element(&self, i: usize) -> &Token {
        &self.carrier[i]
    }

    /// `x_i · x_j` by index.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.op[i * self.carrier.len() + j]
    }

    pub fn product(&self, x: &Token, y: &Token) -> Result<&Token> {
        Ok(&self.carrier[self.mul(self.require(x)?, self.require(y)?)])
    }

    pub fn rows(&self) -> Vec<Vec<Token>> {
        let n = self.carrier.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.carrier[self.mul(i, j)].clone()).collect())
            .collect()
    }

    /// The sub-table on a subset closed under the operation.
    pub fn restrict(&self, subset: &BTreeSet<Token>) -> Result<MagmaTable> {
        let kept: Vec<Token> = self
            .carrier
            .iter()
            .filter(|x| subset.contains(*x))
            .cloned()
            .collect();
        if let Some(missing) = subset.iter().find(|x| !self.index.contains_key(*x)) {
            return Err(Error::UnknownElement(missing.clone()));
        }
        let rows = kept
            .iter()
            .map(|x| {
                kept.iter()
                    .map(|y| self.product(x, y).cloned())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        MagmaTable::new(kept, rows).map_err(|e| match e {
            Error::UnknownElement(x) => {
                Error::InvalidTable(format!("subset is not closed: contains product {x} outside it"))
            }
            other => other,
        })
    }
}

fn carrier_index(carrier: &[Token]) -> Result<BTreeMap<Token, usize>> {
    if carrier.is_empty() {
        return Err(Error::InvalidTable("empty carrier".into()));
    }
    let mut index = BTreeMap::new();
    for (i, x) in carrier.iter().enumerate() {
        if index.insert(x.clone(), i).is_some() {
            return Err(Error::InvalidTable(format!("duplicate element {x}")));
        }
    }
    Ok(index)
}

impl PartialEq for MagmaTable {
    fn eq(&self, other: &MagmaTable) -> bool {
        table_equal(self, other)
    }
}

impl Eq for MagmaTable {}

impl fmt::Debug for MagmaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize_table(self).trim_end().replace('\n', "; "))
    }
}

/// Equal carriers as sets and pointwise-equal products.
pub fn table_equal(t1: &MagmaTable, t2: &MagmaTable) -> bool {
    if t1.carrier_set() != t2.carrier_set() {
        return false;
    }
    t1.carrier.iter().all(|x| {
        t1.carrier
            .iter()
            .all(|y| t1.product(x, y).ok() == t2.product(x, y).ok())
    })
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_element(raw: &str, line: usize) -> Result<Token> {
    let token = Token::internal(raw).map_err(|_| syntax(line, format!("invalid token `{raw}`")))?;
    if token.is_reserved() {
        return Err(Error::ReservedPrefix {
            line,
            token: raw.into(),
        });
    }
    Ok(token)
}

/// Parses the `elements ...` / `x: y1 ... yn` table format.
pub fn parse_table(text: &str) -> Result<MagmaTable> {
    let mut carrier: Option<(Vec<Token>, BTreeMap<Token, usize>)> = None;
    let mut rows: Vec<Option<Vec<Token>>> = Vec::new();
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((elements, index)) = &carrier else {
            let mut fields = trimmed.split_whitespace();
            if fields.next() != Some("elements") {
                return Err(syntax(line, "expected `elements` header"));
            }
            let elements = fields
                .map(|f| {
                    if f.contains(':') {
                        Err(syntax(line, format!("element `{f}` contains `:`")))
                    } else {
                        parse_element(f, line)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            if elements.is_empty() {
                return Err(syntax(line, "empty carrier"));
            }
            let index = carrier_index(&elements).map_err(|e| syntax(line, e.to_string()))?;
            rows = vec![None; elements.len()];
            carrier = Some((elements, index));
            continue;
        };
        let (head, rest) = trimmed
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `element: products`"))?;
        let head = parse_element(head.trim(), line)?;
        let i = *index
            .get(&head)
            .ok_or_else(|| syntax(line, format!("row for unknown element `{head}`")))?;
        if rows[i].is_some() {
            return Err(syntax(line, format!("duplicate row for `{head}`")));
        }
        let entries: Vec<&str> = rest.split_whitespace().collect();
        if entries.len() != elements.len() {
            return Err(Error::RaggedRow {
                line,
                expected: elements.len(),
                found: entries.len(),
            });
        }
        let row = entries
            .iter()
            .map(|e| {
                let token = parse_element(e, line)?;
                if index.contains_key(&token) {
                    Ok(token)
                } else {
                    Err(Error::NotClosed {
                        line,
                        token: e.to_string(),
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        rows[i] = Some(row);
    }
    let Some((elements, _)) = carrier else {
        return Err(syntax(last_line.max(1), "missing `elements` header"));
    };
    let rows = rows
        .into_iter()
        .zip(&elements)
        .map(|(row, x)| row.ok_or_else(|| syntax(last_line, format!("missing row for `{x}`"))))
        .collect::<Result<Vec<_>>>()?;
    MagmaTable::new(elements, rows)
}

pub fn serialize_table(t: &MagmaTable) -> String {
    let mut out = String::from("elements");
    for x in t.carrier() {
        out.push(' ');
        out.push_str(x.as_str());
    }
    out.push('\n');
    for (x, row) in t.carrier().iter().zip(t.rows()) {
        out.push_str(x.as_str());
        out.push(':');
        for y in row {
            out.push(' ');
            out.push_str(y.as_str());
        }
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub associative: bool,
    pub left_identities: BTreeSet<Token>,
    pub right_identities: BTreeSet<Token>,
    pub identity: Option<Token>,
    pub commutative: bool,
    pub left_cancellative: bool,
    pub right_cancellative: bool,
    pub idempotent: bool,
    pub left_invertible_wrt: BTreeSet<Token>,
    pub right_invertible_wrt: BTreeSet<Token>,
}

impl AxiomReport {
    pub fn is_monoid(&self) -> bool {
        self.associative && self.identity.is_some()
    }

    pub fn is_group(&self) -> bool {
        match &self.identity {
            Some(e) => {
                self.associative
                    && self.left_invertible_wrt.contains(e)
                    && self.right_invertible_wrt.contains(e)
            }
            None => false,
        }
    }

    pub fn is_cancellative(&self) -> bool {
        self.left_cancellative && self.right_cancellative
    }
}

pub fn axiom_report(t: &MagmaTable) -> AxiomReport {
    let n = t.size();
    let all = || 0..n;
    let associative = all().all(|p| {
        all().all(|q| all().all(|r| t.mul(t.mul(p, q), r) == t.mul(p, t.mul(q, r))))
    });
    let pick = |pred: &dyn Fn(usize) -> bool| -> BTreeSet<Token> {
        all().filter(|&e| pred(e)).map(|e| t.element(e).clone()).collect()
    };
    let left_identities = pick(&|e| all().all(|p| t.mul(e, p) == p));
    let right_identities = pick(&|e| all().all(|p| t.mul(p, e) == p));
    let identity = left_identities.intersection(&right_identities).next().cloned();
    let injective = |f: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; n];
        all().all(|p| !std::mem::replace(&mut seen[f(p)], true))
    };
    AxiomReport {
        associative,
        commutative: all().all(|p| all().all(|q| t.mul(p, q) == t.mul(q, p))),
        left_cancellative: all().all(|r| injective(&|p| t.mul(r, p))),
        right_cancellative: all().all(|r| injective(&|p| t.mul(p, r))),
        idempotent: all().all(|p| t.mul(p, p) == p),
        left_invertible_wrt: pick(&|e| all().all(|p| all().any(|b| t.mul(b, p) == e))),
        right_invertible_wrt: pick(&|e| all().all(|p| all().any(|b| t.mul(p, b) == e))),
        left_identities,
        right_identities,
        identity,
    }
}

/// A non-empty set of generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorSet(BTreeSet<Token>);

impl GeneratorSet {
    pub fn new(elements: impl IntoIterator<Item = Token>) -> Result<GeneratorSet> {
        let set: BTreeSet<Token> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        Ok(GeneratorSet(set))
    }

    pub fn elements(&self) -> &BTreeSet<Token> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Token> + '_ {
        self.0.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureMode {
    Semigroup,
    Monoid,
    Group,
}

/// The sub-semigroup, submonoid or subgroup generated by `q`.
pub fn closure(t: &MagmaTable, q: &GeneratorSet, mode: ClosureMode) -> Result<BTreeSet<Token>> {
    let n = t.size();
    let mut member = vec![false; n];
    for x in q.iter() {
        member[t.require(x)?] = true;
    }
    let report = axiom_report(t);
    let identity = match mode {
        ClosureMode::Semigroup => None,
        ClosureMode::Monoid => Some(
            report
                .identity
                .clone()
                .ok_or_else(|| Error::ModePreconditionFailed("monoid closure needs an identity".into()))?,
        ),
        ClosureMode::Group => {
            if !report.is_group() {
                return Err(Error::ModePreconditionFailed("group closure needs a group".into()));
            }
            report.identity.clone()
        }
    };
    let identity = identity.map(|e| t.require(&e)).transpose()?;
    if let Some(e) = identity {
        member[e] = true;
    }
    loop {
        let mut grew = false;
        for i in 0..n {
            for j in 0..n {
                if member[i] && member[j] && !member[t.mul(i, j)] {
                    member[t.mul(i, j)] = true;
                    grew = true;
                }
            }
            if let (ClosureMode::Group, Some(e), true) = (mode, identity, member[i]) {
                if let Some(inv) = (0..n).find(|&b| t.mul(i, b) == e) {
                    if !member[inv] {
                        member[inv] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok((0..n).filter(|&i| member[i]).map(|i| t.element(i).clone()).collect())
}
