//! The computable vanishing test for H^2 of a pair, plus the certificate
//! exponent search and weak-proregularity bookkeeping.
//!
//! For nonzero f, g in S = k[x_1..x_n] with d = gcd(f, g), the second Cech
//! cohomology H^2_{f,g}(S) vanishes exactly when d lies in the radical of
//! the reduced-pair ideal (f/d, g/d)S. When it does not vanish, the
//! saturation of the reduced pair by d is a proper ideal whose height is
//! forced to 2: the reduced pair is coprime, so no principal (height-one)
//! prime contains it, and two generators cap the height at 2. That
//! saturated ideal, with its recomputed height, is the nonvanishing
//! witness. The equivalent power condition `(fg)^n in (f^{n+1}, g^{n+1})`
//! gives finite certificates for the vanishing case.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    height_and_grade, ideal_membership, normal_form, radical_membership_with_trace, saturation,
    IdealHandle, ReductionTrace,
};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// Evidence attached to an H^2 verdict.
#[derive(Debug, Clone)]
pub enum H2Evidence {
    /// Vanishing: a division trace showing 1 in (f/d, g/d, 1 - t*d) in the
    /// extended ring (radical membership of d in the reduced pair).
    RadicalTrace(ReductionTrace),
    /// Nonvanishing: the saturation of the reduced pair by d, a proper
    /// ideal of height exactly 2.
    HeightTwoWitness { ideal: IdealHandle, height: usize },
}

/// Outcome of the H^2_{f,g}(S) vanishing decision.
#[derive(Debug, Clone)]
pub struct H2Verdict {
    pub vanishes: bool,
    pub gcd: Polynomial,
    pub reduced_pair: (Polynomial, Polynomial),
    pub evidence: H2Evidence,
}

impl H2Verdict {
    pub fn evidence_kind(&self) -> &'static str {
        match self.evidence {
            H2Evidence::RadicalTrace(_) => "radical_trace",
            H2Evidence::HeightTwoWitness { .. } => "height_two_witness",
        }
    }

    pub fn height_two_witness(&self) -> Option<(&IdealHandle, usize)> {
        match &self.evidence {
            H2Evidence::HeightTwoWitness { ideal, height } => Some((ideal, *height)),
            H2Evidence::RadicalTrace(_) => None,
        }
    }
}

/// A power certificate for the vanishing case:
/// `(fg)^n in (f^{n+1}, g^{n+1})` with a zero-remainder trace.
#[derive(Debug, Clone)]
pub struct CertificateN {
    pub n: u32,
    pub trace: ReductionTrace,
}

/// Result of the bounded certificate search.
#[derive(Debug, Clone)]
pub enum CertificateOutcome {
    Found(CertificateN),
    NotFoundUpTo(u32),
}

impl CertificateOutcome {
    pub fn found_n(&self) -> Option<u32> {
        match self {
            CertificateOutcome::Found(c) => Some(c.n),
            CertificateOutcome::NotFoundUpTo(_) => None,
        }
    }
}

/// Why a sequence is known to be weakly proregular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProregularityReason {
    /// Every sequence in a Noetherian ring is weakly proregular.
    AmbientNoetherian,
    /// The sequence lies in the conductor Q, so weak proregularity
    /// transfers between R = k + Q and the Noetherian ambient ring.
    ConductorTransfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProregularityStatus {
    pub holds: bool,
    pub reason: ProregularityReason,
}

/// Where a weak-proregularity question is being asked.
pub enum ProregularityContext {
    /// The ambient polynomial ring S.
    AmbientS,
    /// The subring R = k + Q, described by its conductor ideal Q in S.
    KqRing { conductor: IdealHandle },
}

/// Decide whether H^2_{f,g}(S) vanishes.
pub fn h2_vanishes(f: &Polynomial, g: &Polynomial) -> Result<H2Verdict> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let ord = MonomialOrder::GrevLex;

    // Degenerate pairs (f | g or g | f) have a unit in the reduced pair, so
    // the verdict is vanishing before any basis computation.
    let gcd = if f.divides(g) {
        f.monic(&ord)?
    } else if g.divides(f) {
        g.monic(&ord)?
    } else {
        crate::groebner::multivariate_gcd(f, g)?
    };

    let reduced_f = f.exact_divide(&gcd)?.expect("gcd divides f");
    let reduced_g = g.exact_divide(&gcd)?.expect("gcd divides g");
    let reduced_ideal = IdealHandle::new(f.ring(), vec![reduced_f.clone(), reduced_g.clone()])?;

    let (vanishes, trace) = radical_membership_with_trace(&gcd, &reduced_ideal)?;
    let evidence = if vanishes {
        H2Evidence::RadicalTrace(trace.expect("trace accompanies membership"))
    } else {
        let witness = saturation(&reduced_ideal, &gcd)?;
        if witness.is_unit_ideal() {
            return Err(Error::Invariant(
                "saturated witness must be proper when d is outside the radical".into(),
            ));
        }
        let height = height_and_grade(&witness)?;
        if height != 2 {
            return Err(Error::Invariant(format!(
                "nonvanishing witness has height {height}, expected 2"
            )));
        }
        H2Evidence::HeightTwoWitness {
            ideal: witness,
            height,
        }
    };
    Ok(H2Verdict {
        vanishes,
        gcd,
        reduced_pair: (reduced_f, reduced_g),
        evidence,
    })
}

/// Search for the smallest n <= n_max with `(fg)^n in (f^{n+1}, g^{n+1})`.
pub fn h2_certificate_search(
    f: &Polynomial,
    g: &Polynomial,
    n_max: u32,
) -> Result<CertificateOutcome> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    if n_max < 1 {
        return Err(Error::Invariant("certificate bound must be positive".into()));
    }
    let fg = f.mul(g);
    for n in 1..=n_max {
        let target = fg.pow(n);
        let powers = IdealHandle::new(f.ring(), vec![f.pow(n + 1), g.pow(n + 1)])?;
        let trace = normal_form(&target, &powers, &MonomialOrder::GrevLex)?;
        if trace.remainder.is_zero() {
            return Ok(CertificateOutcome::Found(CertificateN { n, trace }));
        }
    }
    Ok(CertificateOutcome::NotFoundUpTo(n_max))
}

/// Weak proregularity of a sequence, by context.
pub fn weakly_proregular_status(
    seq: &[Polynomial],
    context: &ProregularityContext,
) -> Result<ProregularityStatus> {
    if seq.is_empty() {
        return Err(Error::Invariant("empty sequence".into()));
    }
    match context {
        ProregularityContext::AmbientS => Ok(ProregularityStatus {
            holds: true,
            reason: ProregularityReason::AmbientNoetherian,
        }),
        ProregularityContext::KqRing { conductor } => {
            for f in seq {
                let (inside, _) = ideal_membership(f, conductor)?;
                if !inside {
                    return Err(Error::NotInConductor(f.to_string()));
                }
            }
            Ok(ProregularityStatus {
                holds: true,
                reason: ProregularityReason::ConductorTransfer,
            })
        }
    }
}
