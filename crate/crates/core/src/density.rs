//! Densities of integer sets along sequences of finite windows, and Weyl
//! averages `|T_n|^-1 sum_{t in T_n} e(theta t)` as ergodicity diagnostics.
//!
//! Nothing here proves ergodicity; the outputs are numerical evidence.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A nested sequence of finite sets `T_1 ⊂ T_2 ⊂ ...` of positive integers,
/// with `T_n` of size `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IndexSequence {
    /// `T_n = {1, .., n}`.
    FolnerIntervals,
    /// `T_n = { floor(k^exponent) : k = 1..n }`, `exponent > 1`.
    PowerFloor { exponent: f64 },
}

impl IndexSequence {
    pub fn power_floor(exponent: f64) -> Result<Self> {
        if !(exponent > 1.0) || !exponent.is_finite() {
            return Err(Error::Domain(format!("power-floor exponent {exponent} must exceed 1")));
        }
        Ok(IndexSequence::PowerFloor { exponent })
    }

    /// The `k`-th term (`k >= 1`), so that `T_n` is the first `n` terms.
    pub fn term(&self, k: u64) -> u64 {
        match *self {
            IndexSequence::FolnerIntervals => k,
            IndexSequence::PowerFloor { exponent } => power_floor(k, exponent),
        }
    }

    /// `T_n` in increasing order.
    pub fn terms(&self, n: u64) -> Vec<u64> {
        (1..=n).map(|k| self.term(k)).collect()
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSequence::FolnerIntervals => f.write_str("intervals"),
            IndexSequence::PowerFloor { exponent } => write!(f, "power:{exponent}"),
        }
    }
}

impl FromStr for IndexSequence {
    type Err = Error;

    /// `"intervals"` or `"power:<exponent>"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "intervals" {
            return Ok(IndexSequence::FolnerIntervals);
        }
        let exponent = s
            .strip_prefix("power:")
            .and_then(|e| e.parse::<f64>().ok())
            .ok_or_else(|| Error::Parse { what: "index sequence", input: s.into() })?;
        IndexSequence::power_floor(exponent)
    }
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `floor(k^exponent)`, exact for half-integer exponents via an integer
/// square root of `k^(2 exponent)`.
fn power_floor(k: u64, exponent: f64) -> u64 {
    let twice = 2.0 * exponent;
    if twice.fract() == 0.0 {
        if let Some(p) = (k as u128).checked_pow(twice as u32) {
            return isqrt(p) as u64;
        }
    }
    (k as f64).powf(exponent).floor() as u64
}

/// `d_n = |B ∩ T_n| / |T_n|` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityProfile {
    pub densities: Vec<f64>,
}

impl DensityProfile {
    /// Maximum of `d_n` over the final quartile of indices, a finite proxy for
    /// the upper density.
    pub fn limsup_proxy(&self) -> f64 {
        let n = self.densities.len();
        let start = n - n.div_ceil(4);
        self.densities[start..].iter().copied().fold(0.0, f64::max)
    }

    pub fn last(&self) -> f64 {
        *self.densities.last().expect("n_max >= 1")
    }
}

pub fn density_along(
    set: impl Fn(u64) -> bool,
    seq: &IndexSequence,
    n_max: u64,
) -> Result<DensityProfile> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let mut hits = 0u64;
    let densities = (1..=n_max)
        .map(|n| {
            if set(seq.term(n)) {
                hits += 1;
            }
            hits as f64 / n as f64
        })
        .collect();
    Ok(DensityProfile { densities })
}

/// `max_m |B ∩ [m, m + window)| / window` over `m` in `starts`: interval
/// windows are the Følner family of `Z`, so this lower-bounds the upper
/// Banach density.
pub fn banach_window_density(
    set: impl Fn(i64) -> bool,
    window: u64,
    starts: std::ops::Range<i64>,
) -> Result<f64> {
    if window == 0 || starts.is_empty() {
        return Err(Error::Domain("window and start range must be nonempty".into()));
    }
    let w = window as i64;
    let mut count = (starts.start..starts.start + w).filter(|&x| set(x)).count() as i64;
    let mut best = count;
    for m in starts.start + 1..starts.end {
        count += set(m + w - 1) as i64 - set(m - 1) as i64;
        best = best.max(count);
    }
    Ok(best as f64 / window as f64)
}

/// A frequency `theta` for Weyl sums, either a float or a quadratic
/// irrational `(p + q sqrt(d)) / s` evaluated with exact integer parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Theta {
    Float(f64),
    Quadratic { p: i64, q: i64, d: u64, s: u64 },
}

impl Theta {
    pub fn value(&self) -> f64 {
        match *self {
            Theta::Float(x) => x,
            Theta::Quadratic { p, q, d, s } => (p as f64 + q as f64 * (d as f64).sqrt()) / s as f64,
        }
    }

    /// Fractional part of `theta * t` in `[0, 1)`.
    pub fn frac_times(&self, t: u64) -> f64 {
        match *self {
            Theta::Float(x) => (x * t as f64).rem_euclid(1.0),
            Theta::Quadratic { p, q, d, s } => {
                // q t sqrt(d) = sign(q) (m + f) with m = isqrt(q^2 t^2 d)
                let qt = q.unsigned_abs() as u128 * t as u128;
                let big = qt * qt * d as u128;
                let m = isqrt(big);
                let f = (big - m * m) as f64 / ((big as f64).sqrt() + m as f64);
                let sign = if q < 0 { -1 } else { 1 };
                let int_part = p as i128 * t as i128 + sign * m as i128;
                let reduced = int_part.rem_euclid(s as i128) as f64;
                ((reduced + sign as f64 * f) / s as f64).rem_euclid(1.0)
            }
        }
    }
}

impl FromStr for Theta {
    type Err = Error;

    /// Accepts decimals (`0.25`), fractions (`1/2`) and quadratic irrationals
    /// such as `sqrt2-1`, `(sqrt5-1)/2` or `3*sqrt7+2`.
    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "theta", input: input.into() };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if let Ok(x) = s.parse::<f64>() {
            return Ok(Theta::Float(x));
        }
        let (body, denom) = match s.rsplit_once('/') {
            Some((b, d)) => (b, d.parse::<u64>().map_err(|_| bad())?),
            None => (s.as_str(), 1),
        };
        if denom == 0 {
            return Err(bad());
        }
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
        let (mut p, mut q, mut d) = (0i64, 0i64, 0u64);
        let mut rest = body;
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = tail.find(['+', '-']).unwrap_or(tail.len());
            let term = &tail[..end];
            rest = &tail[end..];
            if let Some(pos) = term.find("sqrt") {
                let coeff = match term[..pos].trim_end_matches('*') {
                    "" => 1,
                    c => c.parse::<i64>().map_err(|_| bad())?,
                };
                let radicand = term[pos + 4..].parse::<u64>().map_err(|_| bad())?;
                if q != 0 && radicand != d {
                    return Err(bad());
                }
                d = radicand;
                q += sign * coeff;
            } else {
                p += sign * term.parse::<i64>().map_err(|_| bad())?;
            }
        }
        if q == 0 {
            return Ok(Theta::Float(p as f64 / denom as f64));
        }
        Ok(Theta::Quadratic { p, q, d, s: denom })
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Theta::Float(x) => write!(f, "{x}"),
            Theta::Quadratic { p, q, d, s } => {
                let coeff = match q {
                    1 => String::new(),
                    -1 => "-".into(),
                    q => format!("{q}*"),
                };
                let offset = if p == 0 { String::new() } else { format!("{p:+}") };
                if s == 1 {
                    write!(f, "{coeff}sqrt{d}{offset}")
                } else {
                    write!(f, "({coeff}sqrt{d}{offset})/{s}")
                }
            }
        }
    }
}

/// Running Weyl averages `|T_n|^-1 |sum_{t in T_n} e(theta t)|` for
/// `n = 1..=n_max`.
pub fn weyl_profile(seq: &IndexSequence, theta: &Theta, n_max: u64) -> Vec<f64> {
    let mut acc = Complex64::new(0.0, 0.0);
    (1..=n_max)
        .map(|n| {
            acc += Complex64::from_polar(1.0, 2.0 * PI * theta.frac_times(seq.term(n)));
            acc.norm() / n as f64
        })
        .collect()
}

/// `|T_n|^-1 |sum_{t in T_n} e(theta t)|`.
pub fn weyl_average(seq: &IndexSequence, theta: &Theta, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if theta.value() == 0.0 {
        return Ok(1.0);
    }
    let sum: Complex64 = (1..=n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * theta.frac_times(seq.term(k))))
        .sum();
    Ok((sum.norm() / n as f64).min(1.0))
}

/// Subsets of the positive integers used in density demos.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegerSet {
    All,
    /// `{ x : x = residue mod modulus }`.
    Residue { residue: u64, modulus: u64 },
    /// Perfect squares.
    Squares,
}

impl IntegerSet {
    pub fn contains(&self, x: u64) -> bool {
        match *self {
            IntegerSet::All => true,
            IntegerSet::Residue { residue, modulus } => x % modulus == residue,
            IntegerSet::Squares => {
                let s = x.isqrt();
                s * s == x
            }
        }
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegerSet::All => f.write_str("all"),
            IntegerSet::Residue { residue, modulus } => write!(f, "residue:{residue}:{modulus}"),
            IntegerSet::Squares => f.write_str("squares"),
        }
    }
}

impl FromStr for IntegerSet {
    type Err = Error;

    /// `"all"`, `"even"`, `"odd"`, `"squares"`, `"multiples:<m>"` or
    /// `"residue:<a>:<m>"`.
    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "integer set", input: input.to_string() };
        let parts: Vec<&str> = input.trim().split(':').collect();
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
        let set = match parts.as_slice() {
            ["all"] => IntegerSet::All,
            ["squares"] => IntegerSet::Squares,
            ["even"] => IntegerSet::Residue { residue: 0, modulus: 2 },
            ["odd"] => IntegerSet::Residue { residue: 1, modulus: 2 },
            ["multiples", m] => IntegerSet::Residue { residue: 0, modulus: num(m)? },
            ["residue", a, m] => IntegerSet::Residue { residue: num(a)?, modulus: num(m)? },
            _ => return Err(bad()),
        };
        if let IntegerSet::Residue { residue, modulus } = set {
            if modulus == 0 || residue >= modulus {
                return Err(bad());
            }
        }
        Ok(set)
    }
}
