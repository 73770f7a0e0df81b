//! Monomials (exponent vectors) and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// An exponent vector of fixed length (the ring's variable count).
///
/// The derived `Ord` is only the canonical key order for term maps;
/// algorithms compare monomials through a [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(index: usize, num_vars: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (*a).max(*b))
                .collect(),
        )
    }

    /// True when the supports are disjoint (Buchberger's first criterion).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Embed into a ring with `count` fresh variables prepended.
    pub fn shifted(&self, count: usize) -> Monomial {
        let mut e = vec![0; count];
        e.extend_from_slice(&self.0);
        Monomial(e)
    }

    /// Drop the first `count` exponents (all must be zero).
    pub fn truncated(&self, count: usize) -> Option<Monomial> {
        if self.0[..count].iter().any(|&e| e != 0) {
            return None;
        }
        Some(Monomial(self.0[count..].to_vec()))
    }
}

/// A total, multiplicative monomial order with 1 minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Pure lexicographic with the ring's variable order (first variable largest).
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Block order: the exponent vector splits into consecutive blocks of
    /// the given lengths; blocks are compared grevlex, earlier blocks first.
    /// Used as the elimination order with fresh variables in block 0.
    Block(Vec<usize>),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: larger is the one whose last nonzero entry of a - b is negative.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Elimination order for a ring with `fresh` prepended variables over
    /// `main` original ones.
    pub fn elimination(fresh: usize, main: usize) -> MonomialOrder {
        MonomialOrder::Block(vec![fresh, main])
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(splits) => {
                debug_assert_eq!(splits.iter().sum::<usize>(), a.len());
                let mut start = 0;
                for len in splits {
                    let end = start + len;
                    match grevlex(&a[start..end], &b[start..end]) {
                        Ordering::Equal => start = end,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        // x vs y^2 in k[x,y]
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn grevlex_prefers_degree() {
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0]), &m(&[0, 2])),
            Ordering::Less
        );
    }

    #[test]
    fn grevlex_ties_on_last_nonzero() {
        // x*z vs y^2 in k[x,y,z]: same degree, z-entry of difference is positive
        // for x*z, so x*z < y^2.
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        // Classic: x^2*y*z < x*y^3 in grevlex? deg 4 both; compare from the back.
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[2, 1, 1]), &m(&[1, 3, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_eliminates_first_block() {
        // Ring (t, x, y): any monomial with positive t beats any without.
        let ord = MonomialOrder::elimination(1, 2);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 2])), Ordering::Less);
    }

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, n).prop_map(Monomial::new)
    }

    fn arb_order(n: usize) -> impl Strategy<Value = MonomialOrder> {
        let mut blocks = vec![MonomialOrder::Block(vec![n])];
        if n >= 2 {
            blocks.push(MonomialOrder::Block(vec![1, n - 1]));
        }
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            prop::sample::select(blocks),
        ]
    }

    proptest! {
        // The three order axioms: totality (antisymmetric comparability),
        // multiplicativity, and 1 minimal.
        #[test]
        fn order_is_total_and_consistent(
            (a, b, ord) in (2usize..4).prop_flat_map(|n| (arb_monomial(n), arb_monomial(n), arb_order(n)))
        ) {
            let ab = ord.cmp(&a, &b);
            let ba = ord.cmp(&b, &a);
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }

        #[test]
        fn order_is_multiplicative(
            (a, b, w, ord) in (2usize..4).prop_flat_map(|n| (arb_monomial(n), arb_monomial(n), arb_monomial(n), arb_order(n)))
        ) {
            let before = ord.cmp(&a, &b);
            let after = ord.cmp(&a.mul(&w), &b.mul(&w));
            prop_assert_eq!(before, after);
        }

        #[test]
        fn one_is_minimal(
            (a, ord) in (2usize..4).prop_flat_map(|n| (arb_monomial(n), arb_order(n)))
        ) {
            let one = Monomial::one(a.num_vars());
            prop_assert_ne!(ord.cmp(&a, &one), Ordering::Less);
        }

        #[test]
        fn order_is_transitive(
            (a, b, c, ord) in (2usize..4).prop_flat_map(|n| (arb_monomial(n), arb_monomial(n), arb_monomial(n), arb_order(n)))
        ) {
            let mut v = vec![a, b, c];
            v.sort_by(|x, y| ord.cmp(x, y));
            prop_assert_ne!(ord.cmp(&v[0], &v[1]), Ordering::Greater);
            prop_assert_ne!(ord.cmp(&v[1], &v[2]), Ordering::Greater);
            prop_assert_ne!(ord.cmp(&v[0], &v[2]), Ordering::Greater);
        }
    }
}
