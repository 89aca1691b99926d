//! Finite groups with dense element indexing.
//!
//! Elements of every group are the indices `0..order`. The encoding is
//! family specific:
//!
//! * cyclic products `Z_{n_0} x ... x Z_{n_{k-1}}` use mixed radix with the
//!   first coordinate least significant,
//! * the dihedral group `D_n` stores `r^k s^f` at index `k + n * f`,
//! * `A5` stores the even permutations of `{0, .., 4}` in lexicographic order.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted for cyclic products.
pub const CYCLIC_ORDER_CAP: usize = 1_000_000;
/// Largest rotation count accepted for `D_n` (order `2n <= 1024`).
pub const DIHEDRAL_MAX_N: usize = 512;

/// Shared handle to an immutable group.
pub type Group = Arc<GroupTable>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    CyclicProduct,
    Dihedral,
    Alternating5,
}

#[derive(Debug)]
pub(crate) enum Law {
    Cyclic { moduli: Vec<usize> },
    Dihedral { n: usize },
    Alternating5 { perms: Vec<[u8; 5]>, table: Vec<u8>, inverse: Vec<u8> },
}

/// A finite group given by its multiplication and inversion on indices.
#[derive(Debug)]
pub struct GroupTable {
    name: String,
    order: usize,
    pub(crate) law: Law,
}

impl GroupTable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn family(&self) -> Family {
        match self.law {
            Law::Cyclic { .. } => Family::CyclicProduct,
            Law::Dihedral { .. } => Family::Dihedral,
            Law::Alternating5 { .. } => Family::Alternating5,
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Moduli of a cyclic product, `None` for the other families.
    pub fn moduli(&self) -> Option<&[usize]> {
        match &self.law {
            Law::Cyclic { moduli } => Some(moduli),
            _ => None,
        }
    }

    /// Rotation count `n` of `D_n`, `None` for the other families.
    pub fn dihedral_n(&self) -> Option<usize> {
        match self.law {
            Law::Dihedral { n } => Some(n),
            _ => None,
        }
    }

    /// The permutation of `{0, .., 4}` encoded by `g`, for `A5` only.
    pub fn permutation(&self, g: usize) -> Option<[u8; 5]> {
        match &self.law {
            Law::Alternating5 { perms, .. } => perms.get(g).copied(),
            _ => None,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.law {
            Law::Cyclic { moduli } => {
                if let [n] = moduli.as_slice() {
                    return (a + b) % n;
                }
                let (mut a, mut b) = (a, b);
                let (mut out, mut stride) = (0, 1);
                for &n in moduli {
                    out += ((a % n + b % n) % n) * stride;
                    a /= n;
                    b /= n;
                    stride *= n;
                }
                out
            }
            Law::Dihedral { n } => {
                let (ka, fa) = (a % n, a / n);
                let (kb, fb) = (b % n, b / n);
                // r^ka s^fa r^kb s^fb = r^(ka +- kb) s^(fa + fb)
                let k = if fa == 0 { (ka + kb) % n } else { (ka + n - kb) % n };
                k + n * ((fa + fb) % 2)
            }
            Law::Alternating5 { table, .. } => table[a * 60 + b] as usize,
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        debug_assert!(a < self.order);
        match &self.law {
            Law::Cyclic { moduli } => {
                let mut a = a;
                let (mut out, mut stride) = (0, 1);
                for &n in moduli {
                    out += ((n - a % n) % n) * stride;
                    a /= n;
                    stride *= n;
                }
                out
            }
            Law::Dihedral { n } => {
                if a < *n {
                    (n - a) % n
                } else {
                    a
                }
            }
            Law::Alternating5 { inverse, .. } => inverse[a] as usize,
        }
    }

    /// Coordinates of `g` in a cyclic product.
    pub fn coordinates(&self, g: usize) -> Option<Vec<usize>> {
        let moduli = self.moduli()?;
        let mut g = g;
        Some(
            moduli
                .iter()
                .map(|&n| {
                    let c = g % n;
                    g /= n;
                    c
                })
                .collect(),
        )
    }

    /// Index of the element with the given cyclic-product coordinates.
    pub fn from_coordinates(&self, coords: &[usize]) -> Option<usize> {
        let moduli = self.moduli()?;
        if coords.len() != moduli.len() {
            return None;
        }
        let mut out = 0;
        for (&c, &n) in coords.iter().zip(moduli).rev() {
            out = out * n + c % n;
        }
        Some(out)
    }

    pub fn is_abelian(&self) -> bool {
        match self.law {
            Law::Cyclic { .. } => true,
            _ => self.order <= 2,
        }
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index: g, order: self.order })
        }
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `Z_{n_1} x ... x Z_{n_k}`.
pub fn make_cyclic_product(moduli: &[usize]) -> Result<Group> {
    if moduli.is_empty() {
        return Err(Error::InvalidGroup("empty modulus list".into()));
    }
    if moduli.contains(&0) {
        return Err(Error::InvalidGroup("moduli must be at least 1".into()));
    }
    let order = moduli.iter().try_fold(1u128, |acc, &n| {
        let next = acc * n as u128;
        (next <= CYCLIC_ORDER_CAP as u128).then_some(next).ok_or(next)
    });
    let order = match order {
        Ok(o) => o as usize,
        Err(o) => return Err(Error::OrderTooLarge { order: o, cap: CYCLIC_ORDER_CAP }),
    };
    let name = moduli.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x");
    Ok(Arc::new(GroupTable { name, order, law: Law::Cyclic { moduli: moduli.to_vec() } }))
}

/// The dihedral group of order `2n`.
pub fn make_dihedral(n: usize) -> Result<Group> {
    if !(3..=DIHEDRAL_MAX_N).contains(&n) {
        return Err(Error::InvalidGroup(format!(
            "dihedral n = {n} outside 3..={DIHEDRAL_MAX_N}"
        )));
    }
    Ok(Arc::new(GroupTable { name: format!("D{n}"), order: 2 * n, law: Law::Dihedral { n } }))
}

fn is_even(p: &[u8; 5]) -> bool {
    let mut inversions = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn all_permutations() -> Vec<[u8; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut p = [0u8; 5];
    fn rec(depth: usize, used: u8, p: &mut [u8; 5], out: &mut Vec<[u8; 5]>) {
        if depth == 5 {
            out.push(*p);
            return;
        }
        for v in 0..5u8 {
            if used & (1 << v) == 0 {
                p[depth] = v;
                rec(depth + 1, used | (1 << v), p, out);
            }
        }
    }
    rec(0, 0, &mut p, &mut out);
    out
}

/// Composition `(p q)(x) = p(q(x))`.
pub fn compose(p: &[u8; 5], q: &[u8; 5]) -> [u8; 5] {
    let mut out = [0u8; 5];
    for x in 0..5 {
        out[x] = p[q[x] as usize];
    }
    out
}

/// The alternating group on five points.
pub fn make_alternating5() -> Group {
    let perms: Vec<[u8; 5]> = all_permutations().into_iter().filter(is_even).collect();
    debug_assert_eq!(perms.len(), 60);
    let rank = |p: &[u8; 5]| perms.binary_search(p).expect("even permutations are closed");
    let mut table = vec![0u8; 3600];
    let mut inverse = vec![0u8; 60];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let k = rank(&compose(p, q));
            table[i * 60 + j] = k as u8;
            if k == 0 {
                inverse[i] = j as u8;
            }
        }
    }
    Arc::new(GroupTable {
        name: "A5".into(),
        order: 60,
        law: Law::Alternating5 { perms, table, inverse },
    })
}

/// Parses `"Z12"`, `"Z2xZ3"`, `"D8"` or `"A5"`.
pub fn parse_group(descriptor: &str) -> Result<Group> {
    let d = descriptor.trim();
    let bad = || Error::BadDescriptor(descriptor.to_string());
    if d.eq_ignore_ascii_case("A5") {
        return Ok(make_alternating5());
    }
    if let Some(rest) = d.strip_prefix('D').or_else(|| d.strip_prefix('d')) {
        let n = rest.parse::<usize>().map_err(|_| bad())?;
        return make_dihedral(n);
    }
    let moduli = d
        .split(['x', 'X'])
        .map(|part| {
            part.trim()
                .strip_prefix('Z')
                .or_else(|| part.trim().strip_prefix('z'))
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    make_cyclic_product(&moduli)
}

/// A subset of a group stored as a membership bitset.
#[derive(Clone, Debug)]
pub struct ElementSet {
    group: Group,
    bits: FixedBitSet,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.group.name() == other.group.name() && self.bits == other.bits
    }
}

impl Eq for ElementSet {}

impl ElementSet {
    pub fn empty(group: &Group) -> Self {
        Self { group: group.clone(), bits: FixedBitSet::with_capacity(group.order()) }
    }

    pub fn full(group: &Group) -> Self {
        let mut s = Self::empty(group);
        s.bits.insert_range(..);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(group: &Group, indices: I) -> Result<Self> {
        let mut s = Self::empty(group);
        for g in indices {
            group.check_element(g)?;
            s.bits.insert(g);
        }
        Ok(s)
    }

    pub fn from_predicate(group: &Group, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(group);
        for g in group.elements() {
            if pred(g) {
                s.bits.insert(g);
            }
        }
        s
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn contains(&self, g: usize) -> bool {
        self.bits.contains(g)
    }

    pub fn insert(&mut self, g: usize) {
        self.bits.insert(g);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.bits.union_with(&other.bits);
    }

    /// `|self| / |G|`.
    pub fn density(&self) -> f64 {
        self.len() as f64 / self.group.order() as f64
    }

    pub(crate) fn same_group(&self, other: &Group) -> Result<()> {
        if self.group.name() == other.name() {
            Ok(())
        } else {
            Err(Error::GroupMismatch(self.group.name().into(), other.name().into()))
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic-product" => Ok(Family::CyclicProduct),
            "dihedral" => Ok(Family::Dihedral),
            "alternating5" => Ok(Family::Alternating5),
            _ => Err(Error::Parse { what: "group family", input: s.into() }),
        }
    }
}
