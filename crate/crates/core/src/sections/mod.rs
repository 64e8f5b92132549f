//! Cohomology on generic linear sections Y = Σ ∩ P^{15−c} via the Koszul
//! resolution, and long-exact-sequence splicing for bundles that are not
//! homogeneous.
//!
//! Codimension 6 is the index-2 fourfold, 7 the threefold X, 8 the K3 surface
//! S and 9 the genus-7 curve.

pub mod fiber;
mod splice;

use std::fmt;

use num_integer::binomial;

use crate::bbw::{cohomology, CohomologyTable, HomogBundle, SPINOR_DIM, SPINOR_INDEX};
use crate::error::{Error, Result};

pub use splice::{splice_solve, SpliceProblem, SpliceTerm};

pub const CODIM_FOURFOLD: u32 = 6;
pub const CODIM_THREEFOLD: u32 = 7;
pub const CODIM_K3: u32 = 8;
pub const CODIM_CURVE: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    /// The table is the true cohomology.
    Exact,
    /// Only the Euler characteristic is certain; the tables are bounds.
    EulerOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::EulerOnly => "euler_only",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cohomology of a sheaf on a section, exact or bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionResult {
    pub status: Status,
    /// Exact table, or per-degree upper bounds.
    pub table: CohomologyTable,
    /// Per-degree lower bounds; equal to `table` when exact.
    pub lower: CohomologyTable,
    pub euler: i64,
    /// Dimension of the space the sheaf lives on.
    pub dim: u32,
}

impl SectionResult {
    pub fn exact(table: CohomologyTable, dim: u32) -> Self {
        let euler = table.euler();
        SectionResult {
            status: Status::Exact,
            lower: table.clone(),
            table,
            euler,
            dim,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// The table, if it is certain.
    pub fn exact_table(&self) -> Option<&CohomologyTable> {
        self.is_exact().then_some(&self.table)
    }

    /// n copies (tensor with a trivial vector space of dimension n).
    pub fn copies(&self, n: u64) -> Self {
        SectionResult {
            status: self.status,
            table: self.table.scaled(n),
            lower: self.lower.scaled(n),
            euler: self.euler * n as i64,
            dim: self.dim,
        }
    }
}

/// One nonzero entry E₁^{−p,q} = H^q(Σ, b(−p)) ⊗ Λ^p C^c of the Koszul page.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PageEntry {
    pub p: u32,
    pub q: u32,
    pub dim: u64,
}

impl PageEntry {
    pub fn total_degree(&self) -> i64 {
        self.q as i64 - self.p as i64
    }
}

fn check_codim(codim: u32) -> Result<()> {
    if (1..=9).contains(&codim) {
        Ok(())
    } else {
        Err(Error::CodimOutOfRange(codim))
    }
}

/// Dimension of the codimension-c section.
pub fn section_dim(codim: u32) -> u32 {
    SPINOR_DIM - codim
}

/// The canonical twist of the section: K_Y = O(c − 8).
pub fn canonical_twist(codim: u32) -> i64 {
    codim as i64 - SPINOR_INDEX
}

/// The E₁ page of the Koszul spectral sequence for b restricted to the section.
pub fn koszul_page(b: &HomogBundle, codim: u32) -> Result<Vec<PageEntry>> {
    check_codim(codim)?;
    let mut page = Vec::new();
    for p in 0..=codim {
        let mult = binomial(codim as u64, p as u64);
        for (q, d) in cohomology(&b.twist(-(p as i64))).iter() {
            page.push(PageEntry { p, q, dim: d * mult });
        }
    }
    Ok(page)
}

/// True when some differential d_r, r ≥ 1, could join two nonzero entries.
fn differential_possible(page: &[PageEntry]) -> bool {
    // d_r: E^{−p,q} → E^{−p+r, q−r+1}
    page.iter().any(|src| {
        page.iter().any(|dst| {
            src.p > dst.p && {
                let r = src.p - dst.p;
                src.q + 1 >= r && dst.q == src.q + 1 - r
            }
        })
    })
}

/// H•(Y, b|_Y) for the generic codimension-`codim` linear section Y of Σ.
pub fn section_cohomology(b: &HomogBundle, codim: u32) -> Result<SectionResult> {
    let page = koszul_page(b, codim)?;
    let dim = section_dim(codim);
    let euler: i64 = page
        .iter()
        .map(|e| if e.total_degree().rem_euclid(2) == 0 { e.dim as i64 } else { -(e.dim as i64) })
        .sum();

    let mut bounds = CohomologyTable::new();
    for e in &page {
        let n = e.total_degree();
        if (0..=dim as i64).contains(&n) {
            bounds.add(n as u32, e.dim);
        }
    }

    let collapses = !differential_possible(&page);
    let in_range = page
        .iter()
        .all(|e| (0..=dim as i64).contains(&e.total_degree()));
    if collapses {
        debug_assert!(in_range, "degenerate page with entries outside [0, dim]");
        debug_assert_eq!(bounds.euler(), euler);
        return Ok(SectionResult::exact(bounds, dim));
    }
    Ok(SectionResult {
        status: Status::EulerOnly,
        table: bounds,
        lower: CohomologyTable::new(),
        euler,
        dim,
    })
}

/// χ(Y, O(k)) on the codimension-`codim` section.
pub fn section_hilbert(codim: u32, k: i64) -> Result<i64> {
    Ok(section_cohomology(&HomogBundle::line(k), codim)?.euler)
}

/// Genus of the curve section, 1 − χ(O_C).
pub fn curve_genus() -> i64 {
    1 - section_hilbert(CODIM_CURVE, 0).expect("codimension 9 is valid")
}
