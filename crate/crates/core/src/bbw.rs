//! Equivariant vector bundles on the spinor tenfold Σ = LGr₊(10) and their
//! cohomology by Borel–Bott–Weil.
//!
//! A bundle is a formal sum of irreducible bundles, each named by its
//! GL5-dominant highest weight. O(1) has weight (1/2,…,1/2) and the dual of the
//! tautological bundle U has weight (1,0,0,0,0); these two normalizations pin
//! the weight-to-bundle convention (H⁰(O(1)) = 16, H⁰(U*) = 10).

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

use crate::error::Result;
use crate::rootdata::{
    bbw_regularize, is_dominant, tensor_decompose, weyl_dim, DecompositionMultiset, Flavor,
    Weight,
};

/// Dimension of the spinor tenfold.
pub const SPINOR_DIM: u32 = 10;

/// Index of Σ: K_Σ = O(−8).
pub const SPINOR_INDEX: i64 = 8;

/// Expression tree over O and U with dual, tensor and twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleExpr {
    O,
    U,
    Dual(Box<BundleExpr>),
    Tensor(Vec<BundleExpr>),
    Twist(Box<BundleExpr>, i64),
}

impl BundleExpr {
    pub fn twist(self, k: i64) -> Self {
        BundleExpr::Twist(Box::new(self), k)
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::O => write!(f, "O"),
            BundleExpr::U => write!(f, "U"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Tensor(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    match x {
                        BundleExpr::Tensor(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            BundleExpr::Twist(e, k) => match e.as_ref() {
                BundleExpr::Tensor(_) => write!(f, "({e})({k})"),
                _ => write!(f, "{e}({k})"),
            },
        }
    }
}

/// A homogeneous bundle on Σ in decomposed form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomogBundle {
    summands: DecompositionMultiset,
    rank: u64,
}

impl HomogBundle {
    pub fn zero() -> Self {
        HomogBundle {
            summands: DecompositionMultiset::new(),
            rank: 0,
        }
    }

    pub fn irreducible(w: Weight) -> Result<Self> {
        Ok(Self::from_summands(DecompositionMultiset::singleton(w)?))
    }

    pub fn from_summands(summands: DecompositionMultiset) -> Self {
        let rank = summands.dimension();
        HomogBundle { summands, rank }
    }

    pub fn structure_sheaf() -> Self {
        Self::line(0)
    }

    /// O(k).
    pub fn line(k: i64) -> Self {
        Self::irreducible(Weight::uniform_half(k)).expect("uniform weights are dominant")
    }

    /// The tautological rank-5 subbundle U₊.
    pub fn tautological() -> Self {
        Self::irreducible(Weight::from_ints([0, 0, 0, 0, -1])).expect("dominant")
    }

    pub fn summands(&self) -> &DecompositionMultiset {
        &self.summands
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn dual(&self) -> Self {
        Self::from_summands(self.summands.map_weights(Weight::dual))
    }

    pub fn twist(&self, k: i64) -> Self {
        Self::from_summands(self.summands.map_weights(|w| w.twist(k)))
    }

    pub fn tensor(&self, other: &HomogBundle) -> Result<Self> {
        let mut out = DecompositionMultiset::new();
        for (a, ma) in self.summands.iter() {
            for (b, mb) in other.summands.iter() {
                out.merge(&tensor_decompose(a, b)?, ma * mb);
            }
        }
        Ok(Self::from_summands(out))
    }

    pub fn direct_sum(&self, other: &HomogBundle) -> Self {
        let mut out = self.summands.clone();
        out.merge(&other.summands, 1);
        Self::from_summands(out)
    }

    /// `n` copies of the bundle (tensor with a trivial n-dimensional space).
    pub fn copies(&self, n: u64) -> Self {
        let mut out = DecompositionMultiset::new();
        out.merge(&self.summands, n);
        Self::from_summands(out)
    }
}

impl fmt::Display for HomogBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(w, m)| {
                if *m == 1 {
                    format!("E{w}")
                } else {
                    format!("{m}·E{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Evaluates a bundle expression to its decomposed form.
pub fn make_bundle(expr: &BundleExpr) -> Result<HomogBundle> {
    match expr {
        BundleExpr::O => Ok(HomogBundle::structure_sheaf()),
        BundleExpr::U => Ok(HomogBundle::tautological()),
        BundleExpr::Dual(e) => Ok(make_bundle(e)?.dual()),
        BundleExpr::Twist(e, k) => Ok(make_bundle(e)?.twist(*k)),
        BundleExpr::Tensor(factors) => {
            let mut acc = HomogBundle::structure_sheaf();
            for f in factors {
                acc = acc.tensor(&make_bundle(f)?)?;
            }
            Ok(acc)
        }
    }
}

/// Cohomology dimensions by degree, with the Euler characteristic.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CohomologyTable {
    dims: BTreeMap<u32, u64>,
}

impl CohomologyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut t = Self::new();
        for (d, n) in pairs {
            t.add(d, n);
        }
        t
    }

    pub fn add(&mut self, degree: u32, n: u64) {
        if n > 0 {
            *self.dims.entry(degree).or_insert(0) += n;
        }
    }

    pub fn get(&self, degree: u32) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.dims.iter().map(|(d, n)| (*d, *n))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.dims.keys().next_back().copied()
    }

    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .map(|(d, n)| if d % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    pub fn scaled(&self, k: u64) -> Self {
        Self::from_pairs(self.iter().map(|(d, n)| (d, n * k)))
    }

    /// Degree reversal `i ↦ top − i`, as in Serre duality.
    pub fn reversed(&self, top: u32) -> Self {
        Self::from_pairs(self.iter().map(|(d, n)| {
            assert!(d <= top, "degree {d} above {top}");
            (top - d, n)
        }))
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, n)| format!("{d}: {n}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// H•(Σ, b) by Borel–Bott–Weil, summand by summand.
pub fn cohomology(b: &HomogBundle) -> CohomologyTable {
    let mut table = CohomologyTable::new();
    let rho = Weight::rho();
    for (lam, mult) in b.summands().iter() {
        if let Some(reg) = bbw_regularize(lam) {
            let top = reg.dominant.sub(&rho).expect("same parity as λ");
            debug_assert!(is_dominant(&top, Flavor::D5));
            let dim = weyl_dim(&top, Flavor::D5).expect("regularized weight is dominant");
            table.add(reg.length, mult * dim);
        }
    }
    table
}

/// χ(Σ, b(k)).
pub fn hilbert(b: &HomogBundle, k: i64) -> i64 {
    cohomology(&b.twist(k)).euler()
}

/// Leading coefficient of the degree-10 polynomial k ↦ χ(Σ, b(k)), via the tenth
/// forward difference.
pub fn hilbert_leading_coefficient(b: &HomogBundle) -> Rational64 {
    let n = SPINOR_DIM as i64;
    let values: Vec<i64> = (0..=n).map(|k| hilbert(b, k)).collect();
    let mut diff: i64 = 0;
    let mut binom: i64 = 1;
    for i in 0..=n {
        let sign = if (n - i) % 2 == 0 { 1 } else { -1 };
        diff += sign * binom * values[i as usize];
        binom = binom * (n - i) / (i + 1);
    }
    let factorial: i64 = (1..=n).product();
    Rational64::new(diff, factorial)
}

/// deg Σ ⊂ P¹⁵, i.e. 10! times the leading Hilbert coefficient of O.
pub fn spinor_degree() -> i64 {
    let factorial: i64 = (1..=SPINOR_DIM as i64).product();
    let d = hilbert_leading_coefficient(&HomogBundle::structure_sheaf())
        * Rational64::from_integer(factorial);
    d.to_integer()
}
