//! Bohr sets `U_{S, eps} = { g : |g|_sigma < eps for all sigma in S }`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{ElementSet, Group};
use crate::repr::{seminorm_set, Irrep, IrrepCatalog, IrrepId};

/// Semi-norms never exceed 2, so larger radii are clamped.
pub const MAX_RADIUS: f64 = 2.0;

/// Frequency set `S` and radius `eps`. Serializes as `{"freqs": [..], "eps": ..}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BohrSpec {
    #[serde(rename = "freqs")]
    pub frequencies: Vec<IrrepId>,
    #[serde(rename = "eps")]
    pub radius: f64,
}

impl BohrSpec {
    pub fn new(frequencies: Vec<IrrepId>, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidBohrSpec(format!("radius {radius} must be positive")));
        }
        let mut seen = HashSet::new();
        for id in &frequencies {
            if !seen.insert(id) {
                return Err(Error::InvalidBohrSpec(format!("frequency {id} repeats")));
            }
        }
        Ok(Self { frequencies, radius: radius.min(MAX_RADIUS) })
    }

    /// Looks up every frequency in `catalog`, rejecting the trivial irrep.
    pub fn resolve<'a>(&self, catalog: &'a IrrepCatalog) -> Result<Vec<&'a Irrep>> {
        self.frequencies
            .iter()
            .map(|id| {
                let sigma = catalog.get(id)?;
                if sigma.is_trivial() {
                    Err(Error::InvalidBohrSpec(format!("{id} is the trivial irrep")))
                } else {
                    Ok(sigma)
                }
            })
            .collect()
    }
}

/// Enumerates `U_{S, eps}` by a full sweep over the group.
pub fn bohr_set(catalog: &IrrepCatalog, spec: &BohrSpec) -> Result<ElementSet> {
    let freqs = spec.resolve(catalog)?;
    let group = catalog.group();
    let inside: Vec<usize> = group
        .elements()
        .into_par_iter()
        .filter(|&g| freqs.iter().all(|s| crate::repr::seminorm_gamma(s, g) < spec.radius))
        .collect();
    ElementSet::from_indices(group, inside)
}

/// `min_{g in set} (eps - |g|_S)`; positive iff every element of `set` lies
/// strictly inside the radius.
pub fn boundary_margin(catalog: &IrrepCatalog, spec: &BohrSpec, set: &ElementSet) -> Result<f64> {
    let freqs = spec.resolve(catalog)?;
    let worst = set
        .to_vec()
        .into_par_iter()
        .map(|g| seminorm_set(freqs.iter().copied(), g))
        .reduce(|| 0.0, f64::max);
    Ok(spec.radius - worst)
}

/// Left translate `a U`.
pub fn translate(group: &Group, a: usize, set: &ElementSet) -> Result<ElementSet> {
    group.check_element(a)?;
    set.same_group(group)?;
    ElementSet::from_indices(group, set.iter().map(|u| group.mul(a, u)))
}
