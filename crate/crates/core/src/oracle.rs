//! Brute-force ground truth for certificates.
//!
//! Everything here is group multiplication and counting; no Fourier
//! transforms, no spectra. Thresholds on uniform measures are compared as
//! integer counts, with the float `r` converted to an exact rational.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::action::{inner, FiniteAction, PointSet, Representation};
use crate::bohr::{bohr_set, translate, BohrSpec};
use crate::engine::{spectral_bound, Certificate, CertificateInputs, Theorem};
use crate::error::{Error, Result};
use crate::groups::{ElementSet, Group};
use crate::repr::IrrepCatalog;

/// Largest `|A| |B|^2` the triple loop will run.
pub const ORACLE_STEP_CAP: u128 = 100_000_000;

/// One failed check: the element, what was measured, and what was required.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation(pub usize, pub f64, pub f64);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub min_margin: f64,
    /// Whether the recorded spectrum respects the recomputed size bound.
    pub bound_holds: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.bound_holds
    }

    pub fn counterexamples(&self) -> Vec<usize> {
        self.violations.iter().map(|v| v.0).collect()
    }
}

/// `A B B^-1 = { a b c^-1 }` by a direct triple loop.
pub fn triple_product(group: &Group, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    a.same_group(group)?;
    b.same_group(group)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("triple product needs nonempty A and B"));
    }
    let steps = a.len() as u128 * (b.len() as u128).pow(2);
    if steps > ORACLE_STEP_CAP {
        return Err(Error::OracleTooLarge { steps, cap: ORACLE_STEP_CAP });
    }
    let b_elems = b.to_vec();
    let b_inv: Vec<usize> = b_elems.iter().map(|&x| group.inv(x)).collect();
    let mut out = ElementSet::empty(group);
    let mut filled = 0;
    'outer: for x in a.iter() {
        for &y in &b_elems {
            let xy = group.mul(x, y);
            for &z in &b_inv {
                let g = group.mul(xy, z);
                if !out.contains(g) {
                    out.insert(g);
                    filled += 1;
                    if filled == group.order() {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `|A B ∩ g B|` for every group element `g`, where `A B = ∪_{a in A} a . B`.
pub fn overlap_counts(action: &FiniteAction, a: &ElementSet, b: &PointSet) -> Result<Vec<usize>> {
    a.same_group(action.group())?;
    if b.points() != action.points() {
        return Err(Error::DimensionMismatch { expected: action.points(), got: b.points() });
    }
    if b.is_empty() {
        return Err(Error::EmptySet("B must be nonempty"));
    }
    let group = action.group();
    let steps = (a.len() as u128 + group.order() as u128) * b.len() as u128;
    if steps > ORACLE_STEP_CAP {
        return Err(Error::OracleTooLarge { steps, cap: ORACLE_STEP_CAP });
    }
    let mut ab = vec![false; action.points()];
    for x in a.iter() {
        for y in b.iter() {
            ab[action.act(x, y)] = true;
        }
    }
    let b_points: Vec<usize> = b.iter().collect();
    Ok(group
        .elements()
        .map(|g| b_points.iter().filter(|&&y| ab[action.act(g, y)]).count())
        .collect())
}

fn exact(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::Domain(format!("{x} is not finite")))
}

/// Smallest integer count `c` with `c > scale * x`, computed exactly.
fn smallest_count_above(scale: usize, x: f64) -> Result<usize> {
    let t = exact(x)? * BigRational::from_integer(BigInt::from(scale));
    if t.is_negative() {
        return Ok(0);
    }
    let floor = t.floor().to_integer();
    (floor + 1u32).to_usize().ok_or_else(|| Error::Domain("threshold too large".into()))
}

/// `{ g : nu(A B ∩ g B) > threshold }`, exact with respect to the binary
/// value of `threshold`.
pub fn level_set(
    action: &FiniteAction,
    a: &ElementSet,
    b: &PointSet,
    threshold: f64,
) -> Result<ElementSet> {
    let counts = overlap_counts(action, a, b)?;
    let need = smallest_count_above(action.points(), threshold)?;
    Ok(ElementSet::from_predicate(action.group(), |g| counts[g] >= need))
}

/// Reports every element of `claimed` missing from `target`.
pub fn check_containment(claimed: &ElementSet, target: &ElementSet) -> Result<VerificationReport> {
    claimed.same_group(target.group())?;
    let violations: Vec<Violation> =
        claimed.iter().filter(|&g| !target.contains(g)).map(|g| Violation(g, 0.0, 1.0)).collect();
    let min_margin = if violations.is_empty() { 1.0 } else { 0.0 };
    Ok(VerificationReport { checked: claimed.len(), violations, min_margin, bound_holds: true })
}

/// Checks `nu(A B ∩ g B) > beta r` on every `g` in `claimed`, with
/// `beta r |Y| = |B| r` compared as an exact count.
pub fn check_level_set(
    claimed: &ElementSet,
    action: &FiniteAction,
    a: &ElementSet,
    b: &PointSet,
    r: f64,
) -> Result<VerificationReport> {
    let counts = overlap_counts(action, a, b)?;
    let need = smallest_count_above(b.len(), r)?;
    let points = action.points() as f64;
    let required = b.len() as f64 * r / points;
    let mut violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    for g in claimed.iter() {
        let measured = counts[g] as f64 / points;
        min_margin = min_margin.min(measured - required);
        if counts[g] < need {
            violations.push(Violation(g, measured, required));
        }
    }
    Ok(VerificationReport { checked: claimed.len(), violations, min_margin, bound_holds: true })
}

/// Checks `|A|^-1 sum_{a in A} Re <pi(a) u, pi(g) u> > r` on every `g` in
/// `claimed` by direct double summation.
pub fn check_correlation(
    claimed: &ElementSet,
    rep: &Representation,
    a: &ElementSet,
    u: &[Complex64],
    r: f64,
) -> Result<VerificationReport> {
    rep.check_vector(u)?;
    a.same_group(rep.group())?;
    if a.is_empty() {
        return Err(Error::EmptySet("A must be nonempty"));
    }
    let translates: Vec<Vec<Complex64>> = a.iter().map(|x| rep.apply(x, u)).collect();
    let mut violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    for g in claimed.iter() {
        let pg = rep.apply(g, u);
        let measured =
            translates.iter().map(|pa| inner(pa, &pg).re).sum::<f64>() / translates.len() as f64;
        min_margin = min_margin.min(measured - r);
        if !(measured > r) {
            violations.push(Violation(g, measured, r));
        }
    }
    Ok(VerificationReport { checked: claimed.len(), violations, min_margin, bound_holds: true })
}

fn mismatch(what: &str, recorded: f64, recomputed: f64) -> Result<()> {
    if (recorded - recomputed).abs() <= 1e-12 * recomputed.abs().max(1.0) {
        Ok(())
    } else {
        Err(Error::InstanceMismatch(format!(
            "{what}: certificate records {recorded}, inputs give {recomputed}"
        )))
    }
}

/// Re-derives the certificate's claim from the raw inputs: recomputes the
/// Bohr set from the recorded spectrum and radius, translates it by the
/// recorded base point, and checks it against the brute-force target.
pub fn verify_certificate(
    cert: &Certificate,
    catalog: &IrrepCatalog,
    inputs: &CertificateInputs,
) -> Result<VerificationReport> {
    let group = catalog.group();
    if cert.group != group.name() {
        return Err(Error::InstanceMismatch(format!(
            "certificate is for {}, catalog is for {}",
            cert.group,
            group.name()
        )));
    }
    let (tag, a) = match inputs {
        CertificateInputs::Comb { a, .. } => (Theorem::Comb, a),
        CertificateInputs::Erg { a, .. } => (Theorem::Erg, a),
        CertificateInputs::Uni { a, .. } => (Theorem::Uni, a),
    };
    if tag != cert.theorem {
        return Err(Error::InstanceMismatch(format!(
            "certificate is for theorem {:?}, inputs for {:?}",
            cert.theorem, tag
        )));
    }
    a.same_group(group)?;
    let alpha = a.len() as f64 / group.order() as f64;
    let (beta, r) = match inputs {
        CertificateInputs::Comb { b, .. } => (b.len() as f64 / group.order() as f64, 0.0),
        CertificateInputs::Erg { b, r, .. } => (b.measure(), *r),
        CertificateInputs::Uni { beta, r, .. } => (*beta, *r),
    };
    mismatch("alpha", cert.alpha, alpha)?;
    mismatch("beta", cert.beta, beta)?;
    mismatch("r", cert.r, r)?;
    let bound = spectral_bound(alpha, beta, r, catalog.d_min().unwrap_or(1))?;
    mismatch("bound", cert.bound, bound)?;
    if cert.spectrum_size != cert.spectrum.len() {
        return Err(Error::InstanceMismatch("spectrum_size disagrees with spectrum".into()));
    }
    group.check_element(cert.base_point)?;

    let spec = BohrSpec::new(cert.spectrum.clone(), cert.eps)?;
    let claimed = translate(group, cert.base_point, &bohr_set(catalog, &spec)?)?;
    let mut report = match inputs {
        CertificateInputs::Comb { a, b } => {
            let target = triple_product(group, a, b)?;
            check_containment(&claimed, &target)?
        }
        CertificateInputs::Erg { a, action, b, r } => check_level_set(&claimed, action, a, b, *r)?,
        CertificateInputs::Uni { a, rep, u, r, .. } => check_correlation(&claimed, rep, a, u, *r)?,
    };
    report.bound_holds = (cert.spectrum.len() as f64) <= bound;
    Ok(report)
}

/// `nu(A B ∩ g B)` as an exact rational, for tests and diagnostics.
pub fn overlap_measure(action: &FiniteAction, a: &ElementSet, b: &PointSet, g: usize) -> Result<BigRational> {
    let counts = overlap_counts(action, a, b)?;
    Ok(BigRational::new(BigInt::from(counts[g]), BigInt::from(action.points())))
}
