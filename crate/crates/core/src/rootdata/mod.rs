//! Weight lattice and Weyl group combinatorics for D5 and its Levi GL5.
//!
//! Weights live in the standard ε-basis. Internally every coordinate is stored
//! doubled, so a weight is a vector of integers that are either all even
//! (integral weight) or all odd (spinorial weight). ρ = (4,3,2,1,0) serves both
//! flavors.

mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{Error, Result};

pub use lr::lr_coefficients;

pub const RANK: usize = 5;

/// ρ, doubled.
const RHO2: [i64; RANK] = [8, 6, 4, 2, 0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    D5,
    GL5,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::D5 => "D5",
            Flavor::GL5 => "GL5",
        }
    }
}

/// A weight of D5 (or of the GL5 Levi) in ε-coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    doubled: [i64; RANK],
}

impl Weight {
    pub const ZERO: Weight = Weight { doubled: [0; RANK] };

    pub fn from_ints(coords: [i64; RANK]) -> Self {
        Weight {
            doubled: coords.map(|c| 2 * c),
        }
    }

    /// Builds a weight from coordinates given in units of 1/2.
    pub fn from_doubled(doubled: [i64; RANK]) -> Result<Self> {
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|c| c.rem_euclid(2) != parity) {
            let w = Weight { doubled };
            return Err(Error::MixedParity(w.to_string()));
        }
        Ok(Weight { doubled })
    }

    pub fn from_rationals(coords: [Rational64; RANK]) -> Result<Self> {
        let mut doubled = [0i64; RANK];
        for (d, c) in doubled.iter_mut().zip(coords.iter()) {
            let two_c = *c * Rational64::from_integer(2);
            if !two_c.is_integer() {
                return Err(Error::NotHalfInteger(c.to_string()));
            }
            *d = two_c.to_integer();
        }
        Self::from_doubled(doubled)
    }

    /// (k/2, …, k/2), the weight of the line bundle O(k) on the spinor variety.
    pub fn uniform_half(k: i64) -> Self {
        Weight { doubled: [k; RANK] }
    }

    pub fn rho() -> Self {
        Weight { doubled: RHO2 }
    }

    pub fn doubled(&self) -> [i64; RANK] {
        self.doubled
    }

    pub fn coords(&self) -> [Rational64; RANK] {
        self.doubled.map(|d| Rational64::new(d, 2))
    }

    pub fn is_integral(&self) -> bool {
        self.doubled[0].rem_euclid(2) == 0
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        let mut d = self.doubled;
        for (x, y) in d.iter_mut().zip(other.doubled.iter()) {
            *x += y;
        }
        Weight::from_doubled(d)
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        let mut d = self.doubled;
        for (x, y) in d.iter_mut().zip(other.doubled.iter()) {
            *x -= y;
        }
        Weight::from_doubled(d)
    }

    /// Twist by O(k): adds (k/2, …, k/2).
    pub fn twist(&self, k: i64) -> Weight {
        Weight {
            doubled: self.doubled.map(|d| d + k),
        }
    }

    /// Highest weight of the dual GL5 representation: negate and reverse.
    pub fn dual(&self) -> Weight {
        let mut d = self.doubled;
        d.reverse();
        Weight {
            doubled: d.map(|x| -x),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(str::trim)
            .collect();
        if parts.len() != RANK {
            return Err(Error::MalformedWeight(s.to_string()));
        }
        let mut coords = [Rational64::from_integer(0); RANK];
        for (c, p) in coords.iter_mut().zip(parts.iter()) {
            *c = p
                .parse::<Rational64>()
                .map_err(|_| Error::MalformedWeight(s.to_string()))?;
        }
        Weight::from_rationals(coords)
    }
}

pub fn is_dominant(w: &Weight, flavor: Flavor) -> bool {
    let d = &w.doubled;
    let decreasing = d.windows(2).all(|p| p[0] >= p[1]);
    match flavor {
        Flavor::GL5 => decreasing,
        Flavor::D5 => decreasing && d[3] >= d[4].abs(),
    }
}

/// Positive roots as (i, j, sign): ε_i − ε_j for sign −1, ε_i + ε_j for sign +1.
fn positive_roots(flavor: Flavor) -> impl Iterator<Item = (usize, usize, i64)> {
    let signs: &'static [i64] = match flavor {
        Flavor::GL5 => &[-1],
        Flavor::D5 => &[-1, 1],
    };
    (0..RANK).flat_map(move |i| {
        ((i + 1)..RANK).flat_map(move |j| signs.iter().map(move |&s| (i, j, s)))
    })
}

fn pairing(doubled: &[i64; RANK], root: (usize, usize, i64)) -> i64 {
    let (i, j, s) = root;
    doubled[i] + s * doubled[j]
}

/// Outcome of the ρ-shifted regularization for a regular weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Regularized {
    /// Number of positive roots pairing negatively with λ + ρ.
    pub length: u32,
    /// The strictly D5-dominant element of the Weyl orbit of λ + ρ.
    pub dominant: Weight,
}

/// Returns `None` when λ + ρ lies on a wall of the D5 Weyl chambers.
pub fn bbw_regularize(lam: &Weight) -> Option<Regularized> {
    let v = lam.add(&Weight::rho()).ok()?;
    let d = v.doubled;
    for i in 0..RANK {
        for j in (i + 1)..RANK {
            if d[i].abs() == d[j].abs() {
                return None;
            }
        }
    }
    let length = positive_roots(Flavor::D5)
        .filter(|&r| pairing(&d, r) < 0)
        .count() as u32;

    let negatives = d.iter().filter(|&&x| x < 0).count();
    let mut abs = d.map(i64::abs);
    abs.sort_unstable_by(|a, b| b.cmp(a));
    // A zero entry absorbs any leftover sign; it is always last after sorting.
    if negatives % 2 == 1 && abs[RANK - 1] != 0 {
        abs[RANK - 1] = -abs[RANK - 1];
    }
    Some(Regularized {
        length,
        dominant: Weight { doubled: abs },
    })
}

/// Weyl dimension formula. Rejects weights that are not dominant for `flavor`.
///
/// Panics if an intermediate product overflows `i128`, which needs weights far
/// outside anything the bundle calculus produces.
pub fn weyl_dim(lam: &Weight, flavor: Flavor) -> Result<u64> {
    if !is_dominant(lam, flavor) {
        return Err(Error::NotDominant {
            weight: lam.to_string(),
            flavor: flavor.name(),
        });
    }
    let shifted = lam.add(&Weight::rho())?.doubled;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for root in positive_roots(flavor) {
        let a = pairing(&shifted, root) as i128;
        let b = pairing(&RHO2, root) as i128;
        num = num.checked_mul(a).expect("Weyl dimension overflow");
        den = den.checked_mul(b).expect("Weyl dimension overflow");
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    Ok(u64::try_from(num / den).expect("Weyl dimension out of range"))
}

/// Formal sum of irreducible GL5 representations, keyed by highest weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DecompositionMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl DecompositionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Weight) -> Result<Self> {
        let mut m = Self::new();
        m.insert(w, 1)?;
        Ok(m)
    }

    pub fn insert(&mut self, w: Weight, mult: u64) -> Result<()> {
        if !is_dominant(&w, Flavor::GL5) {
            return Err(Error::NotDominant {
                weight: w.to_string(),
                flavor: Flavor::GL5.name(),
            });
        }
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn merge(&mut self, other: &DecompositionMultiset, scale: u64) {
        for (w, m) in &other.entries {
            if m * scale > 0 {
                *self.entries.entry(*w).or_insert(0) += m * scale;
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Σ multiplicity · dim as GL5 representations.
    pub fn dimension(&self) -> u64 {
        self.entries
            .iter()
            .map(|(w, m)| m * weyl_dim(w, Flavor::GL5).expect("entries are GL5-dominant"))
            .sum()
    }

    /// Applies `f` to every weight; `f` must preserve GL5-dominance.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        let mut out = BTreeMap::new();
        for (w, m) in &self.entries {
            *out.entry(f(w)).or_insert(0) += m;
        }
        DecompositionMultiset { entries: out }
    }
}

/// GL5 tensor product decomposition by Littlewood–Richardson on the partitions
/// obtained after splitting off a power of the determinant.
pub fn tensor_decompose(lam: &Weight, mu: &Weight) -> Result<DecompositionMultiset> {
    for w in [lam, mu] {
        if !is_dominant(w, Flavor::GL5) {
            return Err(Error::NotDominant {
                weight: w.to_string(),
                flavor: Flavor::GL5.name(),
            });
        }
    }
    let (lam_part, lam_shift) = split_determinant(lam);
    let (mu_part, mu_shift) = split_determinant(mu);
    let shift = lam_shift + mu_shift;

    let mut out = DecompositionMultiset::new();
    for (nu, c) in lr_coefficients(&lam_part, &mu_part) {
        let doubled = nu.map(|x| 2 * x as i64 + shift);
        out.insert(Weight::from_doubled(doubled)?, c)?;
    }
    Ok(out)
}

/// Splits a GL5-dominant weight into a partition and a (doubled) determinant power.
fn split_determinant(w: &Weight) -> ([u32; RANK], i64) {
    let shift = w.doubled[RANK - 1];
    let part = w.doubled.map(|d| ((d - shift) / 2) as u32);
    (part, shift)
}
