//! The certificate pipeline.
//!
//! For a set `A` of density `alpha` and a unit vector `u` with
//! `||P u||^2 >= beta`, the pipeline
//!
//! 1. fixes `T = 17` and `delta = (beta - r) / (4 + 2/T)`,
//! 2. takes `mu_A` uniform on `A` and its large spectrum
//!    `S = { sigma != 1 : ||sigma(mu_A)||_op > delta }`,
//! 3. picks `a_o in A` maximizing `Re <theta(mu_A) u, pi(a) u>`,
//! 4. claims that every `g in a_o U_{S, (beta - r)/2}` has correlation
//!    above `r`, with `|S| <= 17 (1 - alpha^2) / (d_min alpha^2 (beta - r)^2)`.
//!
//! With `u = u_B` in a permutation representation the correlation is
//! `nu(A B ∩ g B) / nu(B)` on average over `A`, which gives the level-set and
//! triple-product forms. Verdicts come from the [`oracle`](crate::oracle).

pub use crate::action::{inner, norm_sq, FiniteAction, PointSet, Representation};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bohr::{boundary_margin, bohr_set, translate, BohrSpec};
use crate::error::{Error, Result};
use crate::groups::ElementSet;
use crate::matrix::op_norm;
use crate::oracle::{self, VerificationReport};
use crate::repr::{fourier_of_measure, seminorm_set, GroupMeasure, Irrep, IrrepCatalog, IrrepId};

/// The fixed choice of `T`: the smallest integer with
/// `(1 - 1/2T)(1 + 1/2T)^2 > 1` and `(4 + 2/T)^2 <= 17`.
pub const T_FIXED: f64 = 17.0;

/// Ties in the base-point argmax are resolved towards the smallest index
/// among values within this distance of the maximum.
const TIE_TOLERANCE: f64 = 1e-12;

/// Slack allowed on `value >= ||P v||^2` at the chosen base point.
const BASE_POINT_SLACK: f64 = 1e-9;

/// `((1 - 1/2T)(1 + 1/2T)^2, (4 + 2/T)^2)`.
pub fn t_conditions(t: f64) -> (f64, f64) {
    let h = 1.0 / (2.0 * t);
    ((1.0 - h) * (1.0 + h).powi(2), (4.0 + 2.0 / t).powi(2))
}

/// Checks `(4 + 2/T)^2 <= 17` and `(1 - 1/2T)(1 + 1/2T)^2 > 1` for `T_FIXED`.
pub fn check_t_fixed() -> Result<()> {
    let (growth, square) = t_conditions(T_FIXED);
    if growth > 1.0 && square <= 17.0 {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "T = {T_FIXED} violates the choice conditions: growth {growth}, square {square}"
        )))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub t: f64,
    pub delta: f64,
    pub beta: f64,
    pub r: f64,
}

/// `T = 17`, `delta = (beta - r) / (4 + 2/17)`.
pub fn choose_constants(beta: f64, r: f64) -> Result<Constants> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::Domain(format!("beta = {beta} must lie in (0, 1]")));
    }
    if !(r >= 0.0 && r < beta) {
        return Err(Error::Domain(format!("r = {r} must satisfy 0 <= r < beta = {beta}")));
    }
    check_t_fixed()?;
    let t = T_FIXED;
    let delta = (beta - r) / (4.0 + 2.0 / t);
    Ok(Constants { t, delta, beta, r })
}

/// Uniform probability measure on `A`; its density `d mu_A / dm` is bounded
/// by `1 / alpha`.
pub fn uniform_measure_on(a: &ElementSet) -> Result<GroupMeasure> {
    GroupMeasure::uniform_on(a)
}

/// `S_delta = { sigma nontrivial : ||sigma(mu)||_op > delta }` in catalog order.
pub fn large_spectrum(catalog: &IrrepCatalog, mu: &GroupMeasure, delta: f64) -> Result<Vec<IrrepId>> {
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("delta = {delta} must be positive")));
    }
    let flags: Vec<bool> = catalog
        .items()
        .par_iter()
        .map(|sigma| -> Result<bool> {
            Ok(!sigma.is_trivial() && op_norm(&fourier_of_measure(sigma, mu)?) > delta)
        })
        .collect::<Result<_>>()?;
    Ok(catalog
        .items()
        .iter()
        .zip(flags)
        .filter(|(_, keep)| *keep)
        .map(|(s, _)| s.id().clone())
        .collect())
}

/// `17 (1 - alpha^2) / (d_min alpha^2 (beta - r)^2)`, and `0` at `alpha = 1`.
pub fn spectral_bound(alpha: f64, beta: f64, r: f64, d_min: usize) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("alpha = {alpha} must lie in (0, 1]")));
    }
    if !(r >= 0.0 && r < beta) {
        return Err(Error::Domain(format!("need 0 <= r < beta, got r = {r}, beta = {beta}")));
    }
    if d_min == 0 {
        return Err(Error::Domain("d_min must be at least 1".into()));
    }
    if alpha == 1.0 {
        return Ok(0.0);
    }
    Ok(17.0 * (1.0 - alpha * alpha) / (d_min as f64 * alpha * alpha * (beta - r).powi(2)))
}

/// `Re <theta(mu) u, pi(g) u>`, i.e. `sum_a mu(a) Re <pi(a) u, pi(g) u>`.
pub fn correlation(mu: &GroupMeasure, rep: &Representation, u: &[Complex64], g: usize) -> Result<f64> {
    rep.group().check_element(g)?;
    let w = rep.apply_measure(mu, u)?;
    Ok(inner(&w, &rep.apply(g, u)).re)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasePoint {
    pub element: usize,
    /// `Re <theta(mu) v, theta(k_o) v>` at the chosen element.
    pub value: f64,
    /// `||P v||^2`.
    pub invariant_mass: f64,
}

/// The element `k_o` of `supp mu` maximizing `Re <theta(mu) v, theta(k) v>`.
///
/// The average of this functional against `mu` is `||theta(mu) v||^2 >=
/// ||P v||^2`, so the maximum is at least `||P v||^2`; a shortfall beyond
/// `1e-9` means the representation is not what it claims to be.
pub fn base_point(mu: &GroupMeasure, rep: &Representation, v: &[Complex64]) -> Result<BasePoint> {
    if norm_sq(v) == 0.0 {
        return Err(Error::Domain("base point needs a nonzero vector".into()));
    }
    let w = rep.apply_measure(mu, v)?;
    let values: Vec<(usize, f64)> =
        mu.support().map(|k| (k, inner(&w, &rep.apply(k, v)).re)).collect();
    let best = values.iter().map(|&(_, x)| x).fold(f64::NEG_INFINITY, f64::max);
    let &(element, value) = values
        .iter()
        .find(|&&(_, x)| x >= best - TIE_TOLERANCE)
        .ok_or(Error::EmptySet("measure has empty support"))?;
    let invariant_mass = norm_sq(&rep.invariant_projection(v)?);
    if value < invariant_mass - BASE_POINT_SLACK {
        return Err(Error::Invariant(format!(
            "base point value {value} below invariant mass {invariant_mass}"
        )));
    }
    Ok(BasePoint { element, value, invariant_mass })
}

/// Minimum over `k in G` of the slack in
/// `Re <theta(mu) v, theta(k_o k) v> >= ||P v||^2 - (2 delta + |k|_{S_delta}) ||v||^2`
/// with `k_o` the base point. Nonnegative (up to rounding) for every input.
pub fn compact_inclusion_slack(
    catalog: &IrrepCatalog,
    mu: &GroupMeasure,
    rep: &Representation,
    v: &[Complex64],
    delta: f64,
) -> Result<f64> {
    let spectrum = resolve(catalog, &large_spectrum(catalog, mu, delta)?)?;
    let k_o = base_point(mu, rep, v)?;
    let w = rep.apply_measure(mu, v)?;
    let v_sq = norm_sq(v);
    let group = catalog.group();
    Ok(group
        .elements()
        .into_par_iter()
        .map(|k| {
            let lhs = inner(&w, &rep.apply(group.mul(k_o.element, k), v)).re;
            let rhs = k_o.invariant_mass
                - (2.0 * delta + seminorm_set(spectrum.iter().copied(), k)) * v_sq;
            lhs - rhs
        })
        .reduce(|| f64::INFINITY, f64::min))
}

/// Slack in `|<theta(mu) v, theta(k) v> - <theta(mu) v, theta(l) v>| <=
/// (2 delta + |k^-1 l|_{S_delta}) ||v||^2`.
pub fn lipschitz_slack(
    catalog: &IrrepCatalog,
    mu: &GroupMeasure,
    rep: &Representation,
    v: &[Complex64],
    delta: f64,
    k: usize,
    l: usize,
) -> Result<f64> {
    let spectrum = resolve(catalog, &large_spectrum(catalog, mu, delta)?)?;
    let w = rep.apply_measure(mu, v)?;
    let group = catalog.group();
    let diff = inner(&w, &rep.apply(k, v)) - inner(&w, &rep.apply(l, v));
    let allowed = (2.0 * delta
        + seminorm_set(spectrum.iter().copied(), group.mul(group.inv(k), l)))
        * norm_sq(v);
    Ok(allowed - diff.norm())
}

fn resolve<'a>(catalog: &'a IrrepCatalog, ids: &[IrrepId]) -> Result<Vec<&'a Irrep>> {
    ids.iter().map(|id| catalog.get(id)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `A B B^-1 ⊇ a_o U_{S, beta/2}`.
    Comb,
    /// `{ g : nu(A B ∩ g B) > beta r } ⊇ a_o U_{S, (beta - r)/2}`.
    Erg,
    /// Correlation of a unit vector above `r` on `a_o U_{S, (beta - r)/2}`.
    Uni,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Margins {
    /// `min_{g in U} (eps - |g|_S)`.
    pub bohr: f64,
    /// Smallest excess of the measured quantity over its threshold on `a_o U`.
    pub levelset: f64,
    /// `bound - |S|`.
    pub bound: f64,
}

/// Output of a theorem run. Field order is the JSON order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub group: String,
    pub theorem: Theorem,
    pub alpha: f64,
    pub beta: f64,
    pub r: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub delta: f64,
    pub spectrum: Vec<IrrepId>,
    pub eps: f64,
    pub base_point: usize,
    pub bound: f64,
    pub spectrum_size: usize,
    pub margins: Margins,
    pub verdict: Verdict,
    pub counterexamples: Vec<usize>,
    pub oracle: VerificationReport,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn bohr_spec(&self) -> Result<BohrSpec> {
        BohrSpec::new(self.spectrum.clone(), self.eps)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

/// The raw instance a certificate speaks about.
#[derive(Clone, Debug)]
pub enum CertificateInputs {
    Comb { a: ElementSet, b: ElementSet },
    Erg { a: ElementSet, action: FiniteAction, b: PointSet, r: f64 },
    Uni { a: ElementSet, rep: Representation, u: Vec<Complex64>, beta: f64, r: f64 },
}

struct Pipeline {
    constants: Constants,
    spectrum: Vec<IrrepId>,
    base: BasePoint,
}

fn run_pipeline(
    catalog: &IrrepCatalog,
    a: &ElementSet,
    rep: &Representation,
    v: &[Complex64],
    beta: f64,
    r: f64,
) -> Result<Pipeline> {
    let constants = choose_constants(beta, r)?;
    let mu = uniform_measure_on(a)?;
    let spectrum = large_spectrum(catalog, &mu, constants.delta)?;
    let base = base_point(&mu, rep, v)?;
    Ok(Pipeline { constants, spectrum, base })
}

struct Claim {
    spec: BohrSpec,
    claimed: ElementSet,
    bohr_margin: f64,
}

fn claim(catalog: &IrrepCatalog, spectrum: Vec<IrrepId>, eps: f64, base: usize) -> Result<Claim> {
    let spec = BohrSpec::new(spectrum, eps)?;
    let u = bohr_set(catalog, &spec)?;
    let bohr_margin = boundary_margin(catalog, &spec, &u)?;
    let claimed = translate(catalog.group(), base, &u)?;
    Ok(Claim { spec, claimed, bohr_margin })
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    catalog: &IrrepCatalog,
    theorem: Theorem,
    alpha: f64,
    constants: Constants,
    claim: Claim,
    base_point: usize,
    report: VerificationReport,
) -> Result<Certificate> {
    let bound = spectral_bound(alpha, constants.beta, constants.r, catalog.d_min().unwrap_or(1))?;
    let size = claim.spec.frequencies.len();
    let mut report = report;
    report.bound_holds = size as f64 <= bound;
    if !report.bound_holds {
        return Err(Error::Invariant(format!("|S| = {size} exceeds the bound {bound}")));
    }
    let verdict = if report.passed() { Verdict::Pass } else { Verdict::Fail };
    Ok(Certificate {
        group: catalog.group().name().to_string(),
        theorem,
        alpha,
        beta: constants.beta,
        r: constants.r,
        t: constants.t,
        delta: constants.delta,
        spectrum: claim.spec.frequencies,
        eps: claim.spec.radius,
        base_point,
        bound,
        spectrum_size: size,
        margins: Margins { bohr: claim.bohr_margin, levelset: report.min_margin, bound: bound - size as f64 },
        verdict,
        counterexamples: report.counterexamples(),
        oracle: report,
    })
}

/// Triple-product certificate: `A B B^-1 ⊇ a_o U_{S, beta/2}`.
pub fn thm_comb_certificate(catalog: &IrrepCatalog, a: &ElementSet, b: &ElementSet) -> Result<Certificate> {
    let group = catalog.group();
    a.same_group(group)?;
    b.same_group(group)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("A and B must be nonempty"));
    }
    let alpha = a.density();
    let beta = b.density();
    let triple = oracle::triple_product(group, a, b)?;
    let b_points = PointSet::from_element_set(b);
    let action = FiniteAction::translation(group);

    if a.is_full() {
        // A B B^-1 is the whole group; S is empty.
        let constants = choose_constants(beta, 0.0)?;
        let claim = claim(catalog, Vec::new(), beta / 2.0, group.identity())?;
        let mut report = oracle::check_containment(&claim.claimed, &triple)?;
        report.min_margin = level_margin(&claim.claimed, &action, a, &b_points, 0.0)?;
        return assemble(catalog, Theorem::Comb, alpha, constants, claim, group.identity(), report);
    }

    let rep = Representation::Permutation(action.clone());
    let u_b = b_points.normalized_indicator()?;
    let p = run_pipeline(catalog, a, &rep, &u_b, beta, 0.0)?;
    let claim = claim(catalog, p.spectrum, beta / 2.0, p.base.element)?;
    let mut report = oracle::check_containment(&claim.claimed, &triple)?;
    report.min_margin = level_margin(&claim.claimed, &action, a, &b_points, 0.0)?;
    if !report.violations.is_empty() {
        report.min_margin = report.min_margin.min(0.0);
    }
    assemble(catalog, Theorem::Comb, alpha, p.constants, claim, p.base.element, report)
}

/// `min_{g in claimed} (nu(A B ∩ g B) - beta r)`.
fn level_margin(
    claimed: &ElementSet,
    action: &FiniteAction,
    a: &ElementSet,
    b: &PointSet,
    r: f64,
) -> Result<f64> {
    Ok(oracle::check_level_set(claimed, action, a, b, r)?.min_margin)
}

/// Level-set certificate for a finite measure-preserving action:
/// `{ g : nu(A B ∩ g B) > beta r } ⊇ a_o U_{S, (beta - r)/2}`.
pub fn thm_erg_certificate(
    catalog: &IrrepCatalog,
    a: &ElementSet,
    action: &FiniteAction,
    b: &PointSet,
    r: f64,
) -> Result<Certificate> {
    let group = catalog.group();
    a.same_group(group)?;
    if action.group().name() != group.name() {
        return Err(Error::GroupMismatch(action.group().name().into(), group.name().into()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("A and B must be nonempty"));
    }
    let beta = b.measure();
    let rep = Representation::Permutation(action.clone());
    let u_b = b.normalized_indicator()?;
    let p = run_pipeline(catalog, a, &rep, &u_b, beta, r)?;
    let claim = claim(catalog, p.spectrum, (beta - r) / 2.0, p.base.element)?;
    let report = oracle::check_level_set(&claim.claimed, action, a, b, r)?;
    assemble(catalog, Theorem::Erg, a.density(), p.constants, claim, p.base.element, report)
}

/// Correlation certificate for a unit vector `u` with `||P u||^2 >= beta`.
pub fn thm_uni_certificate(
    catalog: &IrrepCatalog,
    a: &ElementSet,
    rep: &Representation,
    u: &[Complex64],
    beta: f64,
    r: f64,
) -> Result<Certificate> {
    let group = catalog.group();
    a.same_group(group)?;
    if rep.group().name() != group.name() {
        return Err(Error::GroupMismatch(rep.group().name().into(), group.name().into()));
    }
    if a.is_empty() {
        return Err(Error::EmptySet("A must be nonempty"));
    }
    rep.check_vector(u)?;
    let n = norm_sq(u);
    if (n.sqrt() - 1.0).abs() > 1e-9 {
        return Err(Error::Domain(format!("u has norm {}, not 1", n.sqrt())));
    }
    let projected = norm_sq(&rep.invariant_projection(u)?);
    if projected < beta - 1e-9 {
        return Err(Error::Domain(format!("||P u||^2 = {projected} is below beta = {beta}")));
    }
    let p = run_pipeline(catalog, a, rep, u, beta, r)?;
    let claim = claim(catalog, p.spectrum, (beta - r) / 2.0, p.base.element)?;
    let report = oracle::check_correlation(&claim.claimed, rep, a, u, r)?;
    assemble(catalog, Theorem::Uni, a.density(), p.constants, claim, p.base.element, report)
}

/// Runs the certificate matching `inputs`.
pub fn certify(catalog: &IrrepCatalog, inputs: &CertificateInputs) -> Result<Certificate> {
    match inputs {
        CertificateInputs::Comb { a, b } => thm_comb_certificate(catalog, a, b),
        CertificateInputs::Erg { a, action, b, r } => thm_erg_certificate(catalog, a, action, b, *r),
        CertificateInputs::Uni { a, rep, u, beta, r } => thm_uni_certificate(catalog, a, rep, u, *beta, *r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_cyclic_product, make_dihedral, Group};
    use crate::repr::irreps;

    fn z12() -> Group {
        make_cyclic_product(&[12]).unwrap()
    }

    #[test]
    fn t_seventeen_satisfies_both_conditions() {
        let (growth, square) = t_conditions(17.0);
        assert!((square - 16.955_017_301_038_06).abs() < 1e-12);
        assert!(square <= 17.0);
        assert!((growth - 1.028_521_270_099_735_5).abs() < 1e-12);
        assert!(growth > 1.0);
        // 16 fails the square condition
        assert!(t_conditions(16.0).1 > 17.0);
    }

    #[test]
    fn delta_values() {
        let c = choose_constants(1.0 / 6.0, 0.0).unwrap();
        assert!((c.delta - (1.0 / 6.0) / (70.0 / 17.0)).abs() < 1e-15);
        assert!((c.delta - 0.040_476).abs() < 1e-6);
        let c = choose_constants(1.0, 0.0).unwrap();
        assert!((c.delta - 17.0 / 70.0).abs() < 1e-15);
        assert!(choose_constants(0.5, 0.5).is_err());
        assert!(choose_constants(0.0, 0.0).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(spectral_bound(1.0, 0.5, 0.0, 1).unwrap(), 0.0);
        assert!((spectral_bound(1.0 / 3.0, 1.0 / 6.0, 0.0, 1).unwrap() - 4896.0).abs() < 1e-9);
        assert!((spectral_bound(0.5, 0.5, 0.0, 3).unwrap() - 68.0).abs() < 1e-12);
        assert!(spectral_bound(0.0, 0.5, 0.0, 1).is_err());
        assert!(spectral_bound(0.5, 0.5, 0.5, 1).is_err());
    }

    #[test]
    fn uniform_measure_examples() {
        let g = z12();
        let a = ElementSet::from_indices(&g, [0, 3, 6, 9]).unwrap();
        let mu = uniform_measure_on(&a).unwrap();
        assert_eq!(mu.support().collect::<Vec<_>>(), vec![0, 3, 6, 9]);
        assert!((mu.sup_density() - 3.0).abs() < 1e-12);
        let full = uniform_measure_on(&ElementSet::full(&g)).unwrap();
        assert!(full.weights().iter().all(|&w| (w - 1.0 / 12.0).abs() < 1e-15));
        let point = uniform_measure_on(&ElementSet::from_indices(&g, [0]).unwrap()).unwrap();
        assert_eq!(point.weight(0), 1.0);
        assert!(uniform_measure_on(&ElementSet::empty(&g)).is_err());
    }

    #[test]
    fn large_spectrum_examples() {
        let g = z12();
        let cat = irreps(&g);
        let full = uniform_measure_on(&ElementSet::full(&g)).unwrap();
        assert!(large_spectrum(&cat, &full, 1e-6).unwrap().is_empty());
        let a = ElementSet::from_indices(&g, [0, 3, 6, 9]).unwrap();
        let mu = uniform_measure_on(&a).unwrap();
        let s = large_spectrum(&cat, &mu, 0.5).unwrap();
        assert_eq!(s, vec![IrrepId::from("chi(4)"), IrrepId::from("chi(8)")]);
    }

    #[test]
    fn correlation_examples() {
        let g = make_dihedral(4).unwrap();
        let rep = Representation::regular(&g);
        let u: Vec<Complex64> = (0..8).map(|i| Complex64::new(i as f64, 1.0)).collect();
        let point = uniform_measure_on(&ElementSet::from_indices(&g, [0]).unwrap()).unwrap();
        assert!((correlation(&point, &rep, &u, 0).unwrap() - norm_sq(&u)).abs() < 1e-12);
        let fixed = vec![Complex64::new(0.5, 0.0); 8];
        let mu = uniform_measure_on(&ElementSet::from_indices(&g, [1, 5, 6]).unwrap()).unwrap();
        for x in g.elements() {
            assert!((correlation(&mu, &rep, &fixed, x).unwrap() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn base_point_examples() {
        let g = z12();
        let rep = Representation::regular(&g);
        let v: Vec<Complex64> = (0..12).map(|i| Complex64::new((i * i % 7) as f64, 0.0)).collect();
        let point = GroupMeasure::point_mass(&g, 5).unwrap();
        assert_eq!(base_point(&point, &rep, &v).unwrap().element, 5);
        let a = ElementSet::from_indices(&g, [2, 3, 7]).unwrap();
        let mu = uniform_measure_on(&a).unwrap();
        let fixed = vec![Complex64::new(1.0, 0.0); 12];
        assert_eq!(base_point(&mu, &rep, &fixed).unwrap().element, 2);
    }

    #[test]
    fn z12_comb_certificate() {
        let g = z12();
        let cat = irreps(&g);
        let a = ElementSet::from_indices(&g, [0, 3, 6, 9]).unwrap();
        let b = ElementSet::from_indices(&g, [0, 1]).unwrap();
        let cert = thm_comb_certificate(&cat, &a, &b).unwrap();
        assert_eq!(cert.spectrum, vec![IrrepId::from("chi(4)"), IrrepId::from("chi(8)")]);
        assert!((cert.eps - 1.0 / 12.0).abs() < 1e-15);
        assert!((cert.bound - 4896.0).abs() < 1e-9);
        assert!(a.contains(cert.base_point));
        let u = bohr_set(&cat, &cert.bohr_spec().unwrap()).unwrap();
        assert_eq!(u.to_vec(), vec![0, 3, 6, 9]);
        assert!(cert.passed());
        assert!(cert.counterexamples.is_empty());
        // the proof's chain for every k in G
        let mu = uniform_measure_on(&a).unwrap();
        let rep = Representation::regular(&g);
        let u_b = PointSet::from_element_set(&b).normalized_indicator().unwrap();
        let slack = compact_inclusion_slack(&cat, &mu, &rep, &u_b, cert.delta).unwrap();
        assert!(slack >= -1e-8);
    }

    #[test]
    fn full_a_shortcut() {
        let g = z12();
        let cat = irreps(&g);
        let b = ElementSet::from_indices(&g, [0, 1]).unwrap();
        let cert = thm_comb_certificate(&cat, &ElementSet::full(&g), &b).unwrap();
        assert!(cert.passed());
        assert!(cert.spectrum.is_empty());
        assert_eq!(cert.bound, 0.0);
    }

    #[test]
    fn erg_with_translation_action_at_r_zero_matches_comb() {
        let g = make_dihedral(5).unwrap();
        let cat = irreps(&g);
        let a = ElementSet::from_indices(&g, [1, 4, 6]).unwrap();
        let b = ElementSet::from_indices(&g, [0, 2, 9]).unwrap();
        let comb = thm_comb_certificate(&cat, &a, &b).unwrap();
        let erg = thm_erg_certificate(
            &cat,
            &a,
            &FiniteAction::translation(&g),
            &PointSet::from_element_set(&b),
            0.0,
        )
        .unwrap();
        assert_eq!(comb.spectrum, erg.spectrum);
        assert_eq!(comb.base_point, erg.base_point);
        assert_eq!(comb.eps, erg.eps);
        assert!(comb.passed() && erg.passed());
    }

    #[test]
    fn z12_erg_at_half_beta() {
        let g = z12();
        let cat = irreps(&g);
        let a = ElementSet::from_indices(&g, [0, 3, 6, 9]).unwrap();
        let b = PointSet::from_indices(12, [0, 1]).unwrap();
        let cert =
            thm_erg_certificate(&cat, &a, &FiniteAction::translation(&g), &b, 1.0 / 12.0).unwrap();
        assert!(cert.passed());
        // beta r = 1/72, so one shared point (measure 1/12) is enough everywhere
        assert!(cert.margins.levelset >= 1.0 / 12.0 - 1.0 / 72.0 - 1e-15);
    }

    #[test]
    fn uni_rejects_bad_vectors() {
        let g = make_dihedral(4).unwrap();
        let cat = irreps(&g);
        let rep = Representation::regular(&g);
        let a = ElementSet::from_indices(&g, [0, 1]).unwrap();
        let not_unit = vec![Complex64::new(1.0, 0.0); 8];
        assert!(thm_uni_certificate(&cat, &a, &rep, &not_unit, 0.5, 0.0).is_err());
        let mut e0 = vec![Complex64::new(0.0, 0.0); 8];
        e0[0] = Complex64::new(1.0, 0.0);
        // ||P e0||^2 = 1/8
        assert!(thm_uni_certificate(&cat, &a, &rep, &e0, 0.5, 0.0).is_err());
        assert!(thm_uni_certificate(&cat, &a, &rep, &e0, 0.125, 0.125).is_err());
        assert!(thm_uni_certificate(&cat, &a, &rep, &e0, 0.125, 0.0).unwrap().passed());
    }

    #[test]
    fn uni_with_invariant_vector() {
        let g = make_dihedral(6).unwrap();
        let cat = irreps(&g);
        let rep = Representation::regular(&g);
        let u = vec![Complex64::new(1.0 / 12f64.sqrt(), 0.0); 12];
        let a = ElementSet::from_indices(&g, [3, 7]).unwrap();
        for r in [0.0, 0.5, 0.99] {
            let cert = thm_uni_certificate(&cat, &a, &rep, &u, 1.0, r).unwrap();
            assert!(cert.passed());
            assert!(cert.margins.levelset > 1.0 - r - 1e-12);
        }
    }
}
