//! Cohomology of the rank-2 bundles E₁y on X (y a point of the dual curve) and
//! E₂y on S, extracted from exact sequences whose other terms are homogeneous.
//!
//! E₁y(−H) and E₁y ⊗ U*(−H) come from 0 → U₋y ⊗ O → U* → i_*E₁y → 0 on the
//! fourfold X̂ ⊃ X. Everything else is spliced from those two on X itself.
//! U₋y is a fixed 5-dimensional vector space and V is the 10-dimensional one.

use crate::bbw::HomogBundle;
use crate::error::{Error, Result};

use super::{
    section_cohomology, section_dim, splice_solve, SectionResult, SpliceProblem, SpliceTerm,
    CODIM_FOURFOLD, CODIM_K3, CODIM_THREEFOLD,
};

const FIBER_RANK: u64 = 5;
const V_DIM: u64 = 10;

/// E₁y* ≅ E₁y(−H_X): det E₁y = O(H_X) for a rank-2 bundle.
const E1Y_DUAL_TWIST: i64 = -1;

/// One spliced computation: the sequence used and what it yields.
#[derive(Debug, Clone)]
pub struct FiberComputation {
    pub name: &'static str,
    pub target: &'static str,
    pub sequence: &'static str,
    pub problem: SpliceProblem,
    pub result: SectionResult,
}

fn u() -> HomogBundle {
    HomogBundle::tautological()
}

fn on(b: &HomogBundle, codim: u32) -> Result<SpliceTerm> {
    Ok(SpliceTerm::Known(section_cohomology(b, codim)?))
}

fn copies(b: &HomogBundle, n: u64, codim: u32) -> Result<SpliceTerm> {
    Ok(SpliceTerm::Known(section_cohomology(b, codim)?.copies(n)))
}

fn known(r: &SectionResult) -> SpliceTerm {
    SpliceTerm::Known(r.clone())
}

/// Re-reads a result computed on an ambient space as living on a subvariety of
/// dimension `dim` (pushforward along a closed embedding preserves cohomology).
fn restrict_dim(mut r: SectionResult, dim: u32) -> Result<SectionResult> {
    if let Some(d) = r.table.max_degree() {
        if d > dim {
            return Err(Error::Precondition(format!(
                "sheaf supported in dimension {dim} has cohomology in degree {d}"
            )));
        }
    }
    r.dim = dim;
    Ok(r)
}

fn run(
    name: &'static str,
    target: &'static str,
    sequence: &'static str,
    terms: Vec<SpliceTerm>,
    dim: u32,
    support_dim: u32,
) -> Result<FiberComputation> {
    let problem = SpliceProblem::new(terms, dim)?;
    let result = restrict_dim(splice_solve(&problem)?, support_dim)?;
    Ok(FiberComputation {
        name,
        target,
        sequence,
        problem,
        result,
    })
}

/// H•(X, E₁y(−H)).
pub fn e1y_minus_h() -> Result<FiberComputation> {
    let c = CODIM_FOURFOLD;
    run(
        "E1y(-1)",
        "H(X, E1y(-H))",
        "0 -> U-_y (x) O(-1) -> U*(-1) -> i_* E1y(-1) -> 0 on the fourfold",
        vec![
            copies(&HomogBundle::line(-1), FIBER_RANK, c)?,
            on(&u().dual().twist(-1), c)?,
            SpliceTerm::Unknown,
        ],
        section_dim(c),
        section_dim(CODIM_THREEFOLD),
    )
}

/// H•(X, E₁y ⊗ U*(−H)).
pub fn e1y_dual_u_minus_h() -> Result<FiberComputation> {
    let c = CODIM_FOURFOLD;
    let du = u().dual();
    run(
        "E1y*dual(U)(-1)",
        "H(X, E1y (x) U*(-H))",
        "0 -> U-_y (x) U*(-1) -> U* (x) U*(-1) -> i_* E1y (x) U*(-1) -> 0 on the fourfold",
        vec![
            copies(&du.twist(-1), FIBER_RANK, c)?,
            on(&du.tensor(&du.twist(-1))?, c)?,
            SpliceTerm::Unknown,
        ],
        section_dim(c),
        section_dim(CODIM_THREEFOLD),
    )
}

/// H•(X, E₁y(−2H)), from the restricted four-term sequence twisted by O(−H).
pub fn e1y_minus_2h() -> Result<FiberComputation> {
    let c = CODIM_THREEFOLD;
    let minus_h = e1y_minus_h()?.result;
    debug_assert_eq!(E1Y_DUAL_TWIST - 1, -2);
    run(
        "E1y(-2)",
        "H(X, E1y(-2H))",
        "0 -> E1y*(-1) = E1y(-2) -> U-_y (x) O(-1) -> U*(-1) -> E1y(-1) -> 0",
        vec![
            SpliceTerm::Unknown,
            copies(&HomogBundle::line(-1), FIBER_RANK, c)?,
            on(&u().dual().twist(-1), c)?,
            known(&minus_h),
        ],
        section_dim(c),
        section_dim(c),
    )
}

/// H•(S, E₂y(−H_S)) for y on the curve, via restriction from X.
pub fn e2y_minus_h() -> Result<FiberComputation> {
    let c = CODIM_THREEFOLD;
    let minus_2h = e1y_minus_2h()?.result;
    let minus_h = e1y_minus_h()?.result;
    run(
        "E2y(-1)",
        "H(S, E2y(-H))",
        "0 -> E1y(-2) -> E1y(-1) -> E2y(-1) -> 0 on X",
        vec![known(&minus_2h), known(&minus_h), SpliceTerm::Unknown],
        section_dim(c),
        section_dim(CODIM_K3),
    )
}

/// H•(X, E₁y ⊗ U(−H)), from 0 → U → V ⊗ O → U* → 0.
pub fn e1y_u_minus_h() -> Result<FiberComputation> {
    let c = CODIM_THREEFOLD;
    let minus_h = e1y_minus_h()?.result;
    let dual_u_minus_h = e1y_dual_u_minus_h()?.result;
    run(
        "E1y*U(-1)",
        "H(X, E1y (x) U(-H))",
        "0 -> E1y (x) U(-1) -> V (x) E1y(-1) -> E1y (x) U*(-1) -> 0",
        vec![SpliceTerm::Unknown, known(&minus_h.copies(V_DIM)), known(&dual_u_minus_h)],
        section_dim(c),
        section_dim(c),
    )
}

/// H•(X, E₁y ⊗ U*(−2H)), the fiber of the left adjoint applied to U*.
pub fn e1y_dual_u_minus_2h() -> Result<FiberComputation> {
    let c = CODIM_THREEFOLD;
    let dual_u_minus_h = e1y_dual_u_minus_h()?.result;
    let du = u().dual();
    run(
        "E1y*dual(U)(-2)",
        "H(X, E1y (x) U*(-2H))",
        "0 -> E1y (x) U*(-2) -> U (x) U*(-1) -> U-_y* (x) U*(-1) -> E1y (x) U*(-1) -> 0",
        vec![
            SpliceTerm::Unknown,
            on(&u().tensor(&du.twist(-1))?, c)?,
            copies(&du.twist(-1), FIBER_RANK, c)?,
            known(&dual_u_minus_h),
        ],
        section_dim(c),
        section_dim(c),
    )
}

/// Every spliced computation, in dependency order.
pub fn all() -> Result<Vec<FiberComputation>> {
    Ok(vec![
        e1y_minus_h()?,
        e1y_dual_u_minus_h()?,
        e1y_minus_2h()?,
        e2y_minus_h()?,
        e1y_u_minus_h()?,
        e1y_dual_u_minus_2h()?,
    ])
}
