//! Batch harness: seeded instance grids and exhaustive enumerations, run in
//! parallel, each certificate re-verified by the oracle, rows emitted in
//! instance order.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{certify, Certificate, CertificateInputs, FiniteAction, PointSet, Theorem};
use crate::error::{Error, Result};
use crate::groups::{make_cyclic_product, make_dihedral, parse_group, ElementSet, Group};
use crate::instances::{random_action, random_points, random_set};
use crate::oracle::verify_certificate;
use crate::repr::{irreps, IrrepCatalog};

/// Largest group order accepted by [`exhaustive_comb`]: `(2^n - 1)^2` rows.
pub const EXHAUSTIVE_MAX_ORDER: usize = 10;

/// One problem instance, or the reason it could not be built.
pub struct Instance {
    pub catalog: Arc<IrrepCatalog>,
    pub inputs: Result<CertificateInputs>,
    pub theorem: Theorem,
    /// `r / beta` for level-set instances, 0 otherwise.
    pub r_fraction: f64,
}

/// One CSV row; field order is the column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub group: String,
    pub theorem: Theorem,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub r: Option<f64>,
    pub spectrum_size: Option<usize>,
    pub bound: Option<f64>,
    pub eps: Option<f64>,
    pub base_point: Option<usize>,
    pub margin_bohr: Option<f64>,
    pub margin_levelset: Option<f64>,
    pub margin_bound: Option<f64>,
    pub verdict: RowVerdict,
    pub error: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowVerdict {
    Pass,
    Fail,
    Error,
}

pub const CSV_COLUMNS: &str = "index,group,theorem,alpha,beta,r,spectrum_size,bound,eps,base_point,\
margin_bohr,margin_levelset,margin_bound,verdict,error";

/// Certificate plus independent re-verification. The row passes only if the
/// certificate's own verdict and the re-derived oracle report both pass.
pub fn run_instance(index: usize, inst: &Instance) -> (SweepRow, Option<Certificate>) {
    let group = inst.catalog.group().name().to_string();
    let outcome = inst.inputs.as_ref().map_err(|e| e.to_string()).and_then(|inputs| {
        let cert = certify(&inst.catalog, inputs).map_err(|e| e.to_string())?;
        let report = verify_certificate(&cert, &inst.catalog, inputs).map_err(|e| e.to_string())?;
        Ok((cert, report.passed()))
    });
    match outcome {
        Ok((cert, verified)) => {
            let verdict = if cert.passed() && verified { RowVerdict::Pass } else { RowVerdict::Fail };
            let row = SweepRow {
                index,
                group,
                theorem: cert.theorem,
                alpha: Some(cert.alpha),
                beta: Some(cert.beta),
                r: Some(cert.r),
                spectrum_size: Some(cert.spectrum_size),
                bound: Some(cert.bound),
                eps: Some(cert.eps),
                base_point: Some(cert.base_point),
                margin_bohr: Some(cert.margins.bohr),
                margin_levelset: Some(cert.margins.levelset),
                margin_bound: Some(cert.margins.bound),
                verdict,
                error: String::new(),
            };
            (row, Some(cert))
        }
        Err(msg) => {
            let row = SweepRow {
                index,
                group,
                theorem: inst.theorem,
                alpha: None,
                beta: None,
                r: None,
                spectrum_size: None,
                bound: None,
                eps: None,
                base_point: None,
                margin_bohr: None,
                margin_levelset: None,
                margin_bound: None,
                verdict: RowVerdict::Error,
                error: msg,
            };
            (row, None)
        }
    }
}

/// Runs every instance on the current rayon pool; rows come back in
/// instance order.
pub fn run_all(instances: &[Instance]) -> Vec<SweepRow> {
    instances.par_iter().enumerate().map(|(i, inst)| run_instance(i, inst).0).collect()
}

pub fn pass_rate(rows: &[SweepRow]) -> f64 {
    if rows.is_empty() {
        return 0.0;
    }
    rows.iter().filter(|r| r.verdict == RowVerdict::Pass).count() as f64 / rows.len() as f64
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

/// Every pair of nonempty subsets `(A, B)` of the group, theorem comb.
pub fn exhaustive_comb(group: &Group) -> Result<Vec<Instance>> {
    let n = group.order();
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::OrderTooLarge { order: n as u128, cap: EXHAUSTIVE_MAX_ORDER });
    }
    let catalog = Arc::new(irreps(group));
    let subsets: Vec<ElementSet> = (1u32..1 << n)
        .map(|mask| ElementSet::from_predicate(group, |g| mask >> g & 1 == 1))
        .collect();
    let mut out = Vec::with_capacity(subsets.len() * subsets.len());
    for a in &subsets {
        for b in &subsets {
            out.push(Instance {
                catalog: catalog.clone(),
                inputs: Ok(CertificateInputs::Comb { a: a.clone(), b: b.clone() }),
                theorem: Theorem::Comb,
                r_fraction: 0.0,
            });
        }
    }
    Ok(out)
}

/// Which groups a grid draws from.
#[derive(Clone, Debug)]
pub enum GroupPool {
    /// Fixed descriptors, each used `per_group` times.
    Listed(Vec<String>),
    /// Random `Z_N` (12..=256), `Z_a x Z_b` (2..=16 each) or `D_n` (3..=24).
    Mixed,
}

#[derive(Clone, Debug)]
pub struct GridConfig {
    pub pool: GroupPool,
    /// Instances per listed group, or total draws for the mixed pool.
    pub count: usize,
    /// Fixed density targets; drawn from `[0.05, 0.9]` when absent.
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    /// Level-set thresholds as fractions of `beta`; one row each.
    pub r_fractions: Vec<f64>,
    pub theorems: Vec<Theorem>,
    pub seed: u64,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            pool: GroupPool::Mixed,
            count: 200,
            alpha: None,
            beta: None,
            r_fractions: vec![0.0, 0.25, 0.5],
            theorems: vec![Theorem::Comb, Theorem::Erg],
            seed: 0,
        }
    }
}

pub fn random_group(rng: &mut impl Rng) -> Group {
    match rng.gen_range(0..3) {
        0 => make_cyclic_product(&[rng.gen_range(12..=256)]).expect("order within cap"),
        1 => make_cyclic_product(&[rng.gen_range(2..=16), rng.gen_range(2..=16)]).expect("order within cap"),
        _ => make_dihedral(rng.gen_range(3..=24)).expect("n within cap"),
    }
}

/// Builds the grid. Draw `k` uses its own ChaCha stream, so instance `k`
/// does not depend on how many rows earlier draws produced.
pub fn random_grid(config: &GridConfig) -> Result<Vec<Instance>> {
    if config.count == 0 || config.theorems.is_empty() {
        return Err(Error::Domain("grid is empty".into()));
    }
    if config.theorems.contains(&Theorem::Uni) {
        return Err(Error::Domain("sweeps cover comb and erg only".into()));
    }
    if config.theorems.contains(&Theorem::Erg) && config.r_fractions.is_empty() {
        return Err(Error::Domain("erg sweeps need at least one r fraction".into()));
    }
    let mut draws: Vec<Option<Group>> = Vec::new();
    match &config.pool {
        GroupPool::Listed(names) => {
            if names.is_empty() {
                return Err(Error::Domain("grid is empty".into()));
            }
            for name in names {
                let g = parse_group(name)?;
                draws.extend(std::iter::repeat_n(Some(g), config.count));
            }
        }
        GroupPool::Mixed => draws.extend(std::iter::repeat_n(None, config.count)),
    }

    let mut catalogs: BTreeMap<String, Arc<IrrepCatalog>> = BTreeMap::new();
    let mut out = Vec::new();
    for (k, fixed) in draws.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(k as u64);
        let group = fixed.unwrap_or_else(|| random_group(&mut rng));
        let catalog = catalogs.entry(group.name().to_string()).or_insert_with(|| Arc::new(irreps(&group))).clone();
        let alpha = config.alpha.unwrap_or_else(|| rng.gen_range(0.05..0.9));
        let beta = config.beta.unwrap_or_else(|| rng.gen_range(0.05..0.9));
        let a = random_set(&group, alpha, &mut rng);
        for &theorem in &config.theorems {
            match theorem {
                Theorem::Comb => {
                    let inputs = a.clone().and_then(|a| {
                        Ok(CertificateInputs::Comb { a, b: random_set(&group, beta, &mut rng)? })
                    });
                    out.push(Instance { catalog: catalog.clone(), inputs, theorem, r_fraction: 0.0 });
                }
                Theorem::Erg => {
                    let base = a.clone().and_then(|a| {
                        let action = random_action(&group, &mut rng)?;
                        let b = random_points(action.points(), beta, &mut rng)?;
                        Ok((a, action, b))
                    });
                    for &frac in &config.r_fractions {
                        out.push(Instance {
                            catalog: catalog.clone(),
                            inputs: erg_inputs(&base, frac),
                            theorem,
                            r_fraction: frac,
                        });
                    }
                }
                Theorem::Uni => unreachable!("rejected above"),
            }
        }
    }
    Ok(out)
}

fn erg_inputs(base: &Result<(ElementSet, FiniteAction, PointSet)>, frac: f64) -> Result<CertificateInputs> {
    let (a, action, b) = base.as_ref().map_err(Clone::clone)?;
    if !(0.0..1.0).contains(&frac) {
        return Err(Error::Domain(format!("r fraction {frac} outside [0, 1)")));
    }
    Ok(CertificateInputs::Erg { a: a.clone(), action: action.clone(), b: b.clone(), r: frac * b.measure() })
}
