//! The invariant suite behind `bohrcert selftest`.

use std::time::Instant;

use serde::Serialize;

use crate::engine::{compact_inclusion_slack, uniform_measure_on, Representation};
use crate::error::Result;
use crate::groups::{make_alternating5, make_cyclic_product, make_dihedral, Group};
use crate::instances::{random_measure, random_set, random_vector, rng};
use crate::matrix::CMatrix;
use crate::repr::{
    irreps, max_homomorphism_defect, max_unitarity_defect, parseval_sum, seminorm_set, Irrep,
    IrrepCatalog,
};
use crate::sweep::{exhaustive_comb, pass_rate, run_all};

/// Unitarity and homomorphism laws, entrywise.
pub const LAW_TOLERANCE: f64 = 1e-10;
/// Character orthogonality, Parseval and subadditivity.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
    pub seconds: f64,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SelftestOptions {
    /// Replace the `D_6` catalog by one whose 2-dimensional irreps carry a
    /// sign error on reflections.
    pub mutate: bool,
    pub seed: u64,
}

fn sample_groups() -> Vec<Group> {
    vec![
        make_cyclic_product(&[12]).expect("valid"),
        make_cyclic_product(&[2, 3]).expect("valid"),
        make_cyclic_product(&[4, 6]).expect("valid"),
        make_dihedral(5).expect("valid"),
        make_dihedral(6).expect("valid"),
        make_dihedral(8).expect("valid"),
        make_alternating5(),
    ]
}

/// `D_n` catalog with entry `(0, 0)` of every 2-dimensional reflection
/// matrix negated.
pub fn mutated_dihedral_catalog(group: &Group) -> Result<IrrepCatalog> {
    let n = group.dihedral_n().expect("dihedral group");
    let items = irreps(group)
        .items()
        .iter()
        .map(|sigma| {
            if sigma.dim() != 2 {
                return Ok(sigma.clone());
            }
            let matrices = group
                .elements()
                .map(|g| {
                    let mut m: CMatrix = sigma.matrix(g);
                    if g >= n {
                        m[(0, 0)] = -m[(0, 0)];
                    }
                    m
                })
                .collect();
            Irrep::tabulated(&sigma.id().to_string(), group, matrices)
        })
        .collect::<Result<Vec<_>>>()?;
    IrrepCatalog::from_items(group, items)
}

fn catalogs(options: &SelftestOptions) -> Result<Vec<IrrepCatalog>> {
    sample_groups()
        .into_iter()
        .map(|g| {
            if options.mutate && g.dihedral_n() == Some(6) {
                mutated_dihedral_catalog(&g)
            } else {
                Ok(irreps(&g))
            }
        })
        .collect()
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult { name: name.into(), passed, detail }
}

pub fn run(options: &SelftestOptions) -> Result<SelftestReport> {
    let start = Instant::now();
    let cats = catalogs(options)?;
    let mut checks = Vec::new();

    for cat in &cats {
        let g = cat.group();
        let name = g.name();
        let sum = cat.completeness_sum();
        checks.push(check(
            &format!("completeness {name}"),
            sum == g.order(),
            format!("sum d^2 = {sum}, |G| = {}", g.order()),
        ));
        let unit = cat.items().iter().map(|s| max_unitarity_defect(s, g.elements())).fold(0.0, f64::max);
        checks.push(check(&format!("unitarity {name}"), unit <= LAW_TOLERANCE, format!("max defect {unit:e}")));
        let pairs: Vec<(usize, usize)> =
            g.elements().flat_map(|a| g.elements().map(move |b| (a, b))).collect();
        let hom = cat
            .items()
            .iter()
            .map(|s| max_homomorphism_defect(s, pairs.iter().copied()))
            .fold(0.0, f64::max);
        checks.push(check(&format!("homomorphism {name}"), hom <= LAW_TOLERANCE, format!("max defect {hom:e}")));
        let orth = cat.max_orthogonality_defect();
        checks.push(check(&format!("orthogonality {name}"), orth <= TOLERANCE, format!("max defect {orth:e}")));

        let mut worst_sub = f64::INFINITY;
        for a in g.elements() {
            for b in g.elements() {
                let lhs = seminorm_set(cat.nontrivial(), g.mul(a, b));
                let rhs = seminorm_set(cat.nontrivial(), a) + seminorm_set(cat.nontrivial(), b);
                worst_sub = worst_sub.min(rhs - lhs);
            }
        }
        checks.push(check(
            &format!("subadditivity {name}"),
            worst_sub >= -TOLERANCE,
            format!("min slack {worst_sub:e}"),
        ));

        let mut r = rng(options.seed ^ g.order() as u64);
        let mut worst_parseval: f64 = 0.0;
        for _ in 0..20 {
            let mu = random_measure(g, &mut r)?;
            let diff = (parseval_sum(cat, &mu)? - mu.l2_density_sq()).abs();
            worst_parseval = worst_parseval.max(diff);
        }
        checks.push(check(
            &format!("parseval {name}"),
            worst_parseval <= TOLERANCE,
            format!("max deviation {worst_parseval:e}"),
        ));

        let rep = Representation::regular(g);
        let mut worst_slack = f64::INFINITY;
        for _ in 0..10 {
            let a = random_set(g, 0.4, &mut r)?;
            let mu = uniform_measure_on(&a)?;
            let v = random_vector(g.order(), &mut r);
            for delta in [0.05, 0.2, 0.6] {
                worst_slack = worst_slack.min(compact_inclusion_slack(cat, &mu, &rep, &v, delta)?);
            }
        }
        checks.push(check(
            &format!("compact inclusion {name}"),
            worst_slack >= -1e-8,
            format!("min slack {worst_slack:e}"),
        ));
    }

    let z8 = make_cyclic_product(&[8])?;
    let rows = run_all(&exhaustive_comb(&z8)?);
    let rate = pass_rate(&rows);
    checks.push(check(
        "exhaustive Z8 comb",
        rows.len() == 255 * 255 && rate == 1.0,
        format!("{} rows, pass rate {rate}", rows.len()),
    ));

    Ok(SelftestReport { checks, seconds: start.elapsed().as_secs_f64() })
}
