//! Sparse exact multivariate polynomials.
//!
//! Terms live in a `BTreeMap` keyed by the canonical monomial key order, so
//! equality is structural and iteration is deterministic. The leading term
//! under an arbitrary [`MonomialOrder`] is found by a linear scan; term maps
//! at this problem scale are small.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::RingDescriptor;

/// A single term: coefficient times monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

/// Immutable sparse polynomial over the ring's coefficient field.
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingDescriptor>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingDescriptor>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingDescriptor>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<RingDescriptor>, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !ring.field().is_zero(&c) {
            terms.insert(Monomial::one(ring.num_vars()), c);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn variable(ring: &Arc<RingDescriptor>, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(index, ring.num_vars()), ring.field().one());
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn from_terms(
        ring: &Arc<RingDescriptor>,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            debug_assert_eq!(m.num_vars(), ring.num_vars());
            p.add_term_in_place(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<RingDescriptor> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// True for a nonzero constant (a unit of S).
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    fn add_term_in_place(&mut self, m: Monomial, c: Coeff) {
        let field = self.ring.field().clone();
        if field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = field.add(&old, &c);
                if !field.is_zero(&sum) {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Coefficientwise sum; errors on ring mismatch.
    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.add(other))
    }

    /// Convolution product; errors on ring mismatch.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term_in_place(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = Polynomial::zero(&self.ring);
        let field = self.ring.field().clone();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term_in_place(ma.mul(mb), field.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field().clone();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), field.mul(tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.num_vars()), c)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Maximal term under `ord`; errors on the zero polynomial.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<Term> {
        let m = self
            .terms
            .keys()
            .max_by(|a, b| ord.cmp(a, b))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(Term {
            coeff: self.terms[m].clone(),
            monomial: m.clone(),
        })
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.monomial)
    }

    /// Monic rescaling: divide by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Result<Polynomial> {
        let lt = self.leading_term(ord)?;
        let inv = self.ring.field().inv(&lt.coeff)?;
        Ok(self.scale(&inv))
    }

    /// Exact division: `Ok(Some(q))` with `q * d == self`, `Ok(None)` when no
    /// such polynomial exists, `Err` when `d` is zero.
    ///
    /// Greedy leading-term division: whenever `self = q*d`, the leading term
    /// of the running remainder stays divisible by the leading term of `d`,
    /// so a single failed step certifies non-divisibility.
    pub fn exact_divide(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.same_ring(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ord = MonomialOrder::GrevLex;
        let field = self.ring.field().clone();
        let dlt = d.leading_term(&ord).expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while !rem.is_zero() {
            let rlt = rem.leading_term(&ord).expect("nonzero remainder");
            let Some(m) = rlt.monomial.checked_div(&dlt.monomial) else {
                return Ok(None);
            };
            let c = field.div(&rlt.coeff, &dlt.coeff)?;
            let t = Polynomial::from_terms(&self.ring, [(m.clone(), c.clone())]);
            quot = quot.add(&t);
            rem = rem.sub(&d.mul_term(&m, &c));
        }
        Ok(Some(quot))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        matches!(other.exact_divide(self), Ok(Some(_)))
    }

    /// Embed into `target`, a ring extending this one by `count` prepended
    /// fresh variables.
    pub fn embedded(&self, target: &Arc<RingDescriptor>, count: usize) -> Polynomial {
        debug_assert_eq!(target.num_vars(), self.ring.num_vars() + count);
        Polynomial {
            ring: Arc::clone(target),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shifted(count), c.clone()))
                .collect(),
        }
    }

    /// Project back to `target` by dropping `count` prepended fresh
    /// variables; `None` when any fresh variable occurs.
    pub fn restricted(&self, target: &Arc<RingDescriptor>, count: usize) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.truncated(count)?, c.clone());
        }
        Some(Polynomial {
            ring: Arc::clone(target),
            terms,
        })
    }

    /// True when no prepended fresh variable (the first `count`) occurs.
    pub fn free_of_fresh(&self, count: usize) -> bool {
        self.terms
            .keys()
            .all(|m| m.exponents()[..count].iter().all(|&e| e == 0))
    }

    /// Canonical text form with terms sorted descending under `ord`:
    /// `x^2*y - 3/2*z`.
    pub fn to_text(&self, ord: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let field = self.ring.field();
        let mut monomials: Vec<&Monomial> = self.terms.keys().collect();
        monomials.sort_by(|a, b| ord.cmp(b, a));
        let mut out = String::new();
        for (i, m) in monomials.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = field.is_display_negative(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = field.display_abs(c);
            let coeff_txt = field.format(&mag);
            let mon_txt = monomial_text(self.ring.variables(), m);
            match (&mon_txt[..], field.is_one(&mag)) {
                ("", _) => out.push_str(&coeff_txt),
                (_, true) => out.push_str(&mon_txt),
                (_, false) => {
                    out.push_str(&coeff_txt);
                    out.push('*');
                    out.push_str(&mon_txt);
                }
            }
        }
        out
    }
}

fn monomial_text(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(&MonomialOrder::GrevLex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::parse::parse_polynomial;
    use proptest::prelude::*;

    fn ring2() -> Arc<RingDescriptor> {
        RingDescriptor::new(["x", "y"], CoefficientField::Rationals).unwrap()
    }

    fn ring3() -> Arc<RingDescriptor> {
        RingDescriptor::new(["x", "y", "z"], CoefficientField::Rationals).unwrap()
    }

    fn p(ring: &Arc<RingDescriptor>, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn add_cancellation_and_identity() {
        let r = ring2();
        assert_eq!(p(&r, "x + y").add(&p(&r, "-y")), p(&r, "x"));
        let f = p(&r, "x^2*y - 3/2*y");
        assert_eq!(f.add(&Polynomial::zero(&r)), f);
    }

    #[test]
    fn add_char2_cancellation() {
        let r = RingDescriptor::new(["x"], CoefficientField::prime_field(2).unwrap()).unwrap();
        let f = parse_polynomial("x^2", &r).unwrap();
        assert!(f.add(&f).is_zero());
    }

    #[test]
    fn mul_distributes_and_identity() {
        let r = ring3();
        assert_eq!(p(&r, "x").mul(&p(&r, "y + z")), p(&r, "x*y + x*z"));
        let f = p(&r, "x^2 - y*z + 7");
        assert_eq!(f.mul(&Polynomial::one(&r)), f);
        assert_eq!(
            p(&r, "x+y").mul(&p(&r, "x-y")),
            p(&r, "x^2 - y^2")
        );
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r2 = ring2();
        let r3 = ring3();
        let err = p(&r2, "x").checked_add(&p(&r3, "x")).unwrap_err();
        assert_eq!(err, Error::RingMismatch);
        assert!(p(&r2, "x").checked_mul(&p(&r3, "y")).is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        assert_eq!(p(&r, "x*y").exact_divide(&p(&r, "x")).unwrap(), Some(p(&r, "y")));
        assert_eq!(p(&r, "x^2 + y").exact_divide(&p(&r, "x")).unwrap(), None);
        // Multiply-back oracle for the frozen quotient x - y.
        let f = p(&r, "x^2*y - x*y^2");
        let d = p(&r, "x*y");
        let q = f.exact_divide(&d).unwrap().unwrap();
        assert_eq!(q.mul(&d), f);
        assert_eq!(q, p(&r, "x - y"));
        assert_eq!(p(&r, "x").exact_divide(&Polynomial::zero(&r)), Err(Error::DivisionByZero));
    }

    #[test]
    fn leading_terms() {
        let r = ring2();
        let f = p(&r, "x + y^2");
        let lex = f.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(lex.monomial, Monomial::new(vec![1, 0]));
        let grevlex = f.leading_term(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(grevlex.monomial, Monomial::new(vec![0, 2]));
        let c = p(&r, "5/3");
        assert_eq!(
            c.leading_term(&MonomialOrder::Lex).unwrap().monomial,
            Monomial::one(2)
        );
        assert_eq!(
            Polynomial::zero(&r).leading_term(&MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn canonical_text_form() {
        let r = ring3();
        let f = p(&r, "x^2*y - 3/2*z");
        assert_eq!(f.to_text(&MonomialOrder::GrevLex), "x^2*y - 3/2*z");
        assert_eq!(Polynomial::zero(&r).to_text(&MonomialOrder::Lex), "0");
        assert_eq!(p(&r, "-x - 1").to_text(&MonomialOrder::Lex), "-x - 1");
        // Lex vs grevlex ordering of the printed terms.
        let g = p(&r, "x + y^2");
        assert_eq!(g.to_text(&MonomialOrder::Lex), "x + y^2");
        assert_eq!(g.to_text(&MonomialOrder::GrevLex), "y^2 + x");
    }

    prop_compose! {
        fn arb_poly(ring: Arc<RingDescriptor>)(
            terms in prop::collection::vec(
                (prop::collection::vec(0u32..4, 3), -4i64..=4),
                0..6,
            )
        ) -> Polynomial {
            let field = ring.field().clone();
            Polynomial::from_terms(
                &ring,
                terms.into_iter().map(|(e, c)| (Monomial::new(e), field.from_integer(c))),
            )
        }
    }

    proptest! {
        #[test]
        fn ring_axioms((f, g, h) in {
            let r = ring3();
            (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
        }) {
            prop_assert_eq!(f.add(&g), g.add(&f));
            prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }

        #[test]
        fn exact_divide_roundtrip((f, d) in {
            let r = ring3();
            (arb_poly(r.clone()), arb_poly(r))
        }) {
            prop_assume!(!d.is_zero());
            let prod = f.mul(&d);
            let q = prod.exact_divide(&d).unwrap();
            prop_assert_eq!(q, Some(f));
        }

        #[test]
        fn leading_term_multiplicative((f, g) in {
            let r = ring3();
            (arb_poly(r.clone()), arb_poly(r))
        }) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let ord = MonomialOrder::GrevLex;
            let lt_f = f.leading_term(&ord).unwrap();
            let lt_g = g.leading_term(&ord).unwrap();
            let lt_fg = f.mul(&g).leading_term(&ord).unwrap();
            prop_assert_eq!(lt_fg.monomial, lt_f.monomial.mul(&lt_g.monomial));
            let field = f.ring().field();
            prop_assert_eq!(lt_fg.coeff, field.mul(&lt_f.coeff, &lt_g.coeff));
        }

        #[test]
        fn text_roundtrip(f in arb_poly(ring3())) {
            let ord = MonomialOrder::GrevLex;
            let text = f.to_text(&ord);
            let back = parse_polynomial(&text, f.ring()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
