//! Small named algebras used for round trips and examples.
//!
//! Element names are chosen so that the identity, when present, is the
//! lexicographically least element.

use crate::algebra::{parse_table, MagmaTable};
use crate::graph::Token;

fn names(items: impl IntoIterator<Item = String>) -> Vec<Token> {
    items
        .into_iter()
        .map(|s| Token::new(s).expect("catalog names are valid tokens"))
        .collect()
}

fn table(carrier: Vec<Token>, f: impl Fn(usize, usize) -> usize) -> MagmaTable {
    MagmaTable::from_fn(carrier, f).expect("catalog tables are closed")
}

/// Integers modulo `n` under addition.
pub fn cyclic(n: usize) -> MagmaTable {
    assert!(n >= 1);
    table(names((0..n).map(|i| i.to_string())), |i, j| (i + j) % n)
}

/// Pairs of bits under exclusive or.
pub fn klein_four() -> MagmaTable {
    table(names(["00", "01", "10", "11"].map(String::from)), |i, j| i ^ j)
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Permutations of `{1,2,3}` written by their images; `p·q` applies `p` first.
pub fn symmetric3() -> MagmaTable {
    let carrier = names(PERMS.iter().map(|p| p.iter().map(|&k| char::from(b'1' + k as u8)).collect()));
    table(carrier, |i, j| {
        let composed = [0, 1, 2].map(|k| PERMS[j][PERMS[i][k]]);
        PERMS.iter().position(|p| *p == composed).unwrap()
    })
}

/// `{0,1}` under maximum.
pub fn semilattice2() -> MagmaTable {
    table(names(["0", "1"].map(String::from)), |i, j| i.max(j))
}

/// `{0,1,2}` under maximum.
pub fn chain3() -> MagmaTable {
    table(names(["0", "1", "2"].map(String::from)), |i, j| i.max(j))
}

/// All maps `{0,1} -> {0,1}`: identity `e`, constants `f0` and `f1`, swap `s`;
/// `x·y` applies `x` first.
pub fn transformations2() -> MagmaTable {
    let maps: [[usize; 2]; 4] = [[0, 1], [0, 0], [1, 1], [1, 0]];
    table(names(["e", "f0", "f1", "s"].map(String::from)), |i, j| {
        let composed = [0, 1].map(|k| maps[j][maps[i][k]]);
        maps.iter().position(|m| *m == composed).unwrap()
    })
}

pub const MON3_TEXT: &str = "elements r s t\nr: r s t\ns: s s t\nt: t s t\n";
pub const MAG4_TEXT: &str = "elements r p q s\nr: r p q s\np: p r s p\nq: q s r q\ns: s p q r\n";
pub const SEMI3_TEXT: &str = "elements p q r\np: p r r\nq: r q r\nr: r r r\n";

/// A three-element monoid with identity `r`.
pub fn mon3() -> MagmaTable {
    parse_table(MON3_TEXT).unwrap()
}

/// A four-element commutative unital magma that is not associative.
pub fn mag4() -> MagmaTable {
    parse_table(MAG4_TEXT).unwrap()
}

/// A three-element semilattice without identity.
pub fn semi3() -> MagmaTable {
    parse_table(SEMI3_TEXT).unwrap()
}

/// Every catalog entry with its name.
pub fn all() -> Vec<(String, MagmaTable)> {
    let mut out: Vec<(String, MagmaTable)> =
        (2..=6).map(|n| (format!("Z{n}"), cyclic(n))).collect();
    out.push(("klein4".into(), klein_four()));
    out.push(("S3".into(), symmetric3()));
    out.push(("semilattice2".into(), semilattice2()));
    out.push(("chain3".into(), chain3()));
    out.push(("T2".into(), transformations2()));
    out.push(("MON3".into(), mon3()));
    out.push(("MAG4".into(), mag4()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::axiom_report;

    #[test]
    fn expected_axioms() {
        for n in 2..=6 {
            assert!(axiom_report(&cyclic(n)).is_group());
        }
        let k = axiom_report(&klein_four());
        assert!(k.is_group() && k.commutative && k.identity.unwrap().as_str() == "00");
        let s = axiom_report(&symmetric3());
        assert!(s.is_group() && !s.commutative && s.identity.unwrap().as_str() == "123");
        for t in [semilattice2(), chain3()] {
            let r = axiom_report(&t);
            assert!(r.is_monoid() && r.commutative && r.idempotent && !r.is_group());
            assert_eq!(r.identity.unwrap().as_str(), "0");
        }
        let tr = axiom_report(&transformations2());
        assert!(tr.is_monoid() && !tr.commutative && !tr.left_cancellative);
        assert_eq!(tr.identity.unwrap().as_str(), "e");
    }

    #[test]
    fn identity_is_least_element() {
        for (name, t) in all() {
            if let Some(e) = axiom_report(&t).identity {
                if name != "MAG4" {
                    assert_eq!(&e, t.carrier().iter().min().unwrap(), "{name}");
                }
            }
        }
    }
}
