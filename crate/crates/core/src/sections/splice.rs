//! Long exact cohomology sequences with a single unknown term.
//!
//! For 0 → A → B → C → 0 the cohomology groups form one long exact sequence
//! A⁰ B⁰ C⁰ A¹ B¹ C¹ …; writing ρ_k for the rank of the k-th map, exactness says
//! dim V_k = ρ_{k−1} + ρ_k. Known terms constrain the ranks, the unknown term is
//! read off from them. The constraints form a chain, so forward and backward
//! pruning of the rank domains gives the exact set of feasible ranks.
//!
//! Four-term sequences are split at the image K of the middle map into two short
//! exact sequences.

use crate::bbw::CohomologyTable;
use crate::error::{Error, Result};

use super::{SectionResult, Status};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpliceTerm {
    Known(SectionResult),
    Unknown,
}

/// An exact sequence of sheaves 0 → T₁ → … → T_n → 0 (n = 3 or 4) on a space of
/// dimension `dim`, with exactly one unknown term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceProblem {
    terms: Vec<SpliceTerm>,
    dim: u32,
}

impl SpliceProblem {
    pub fn new(terms: Vec<SpliceTerm>, dim: u32) -> Result<Self> {
        if !(3..=4).contains(&terms.len()) {
            return Err(Error::SpliceShape(format!(
                "expected 3 or 4 terms, got {}",
                terms.len()
            )));
        }
        let unknowns = terms.iter().filter(|t| matches!(t, SpliceTerm::Unknown)).count();
        if unknowns != 1 {
            return Err(Error::SpliceShape(format!(
                "expected exactly one unknown term, got {unknowns}"
            )));
        }
        for t in &terms {
            if let SpliceTerm::Known(r) = t {
                if let Some(d) = r.table.max_degree() {
                    if d > dim {
                        return Err(Error::SpliceShape(format!(
                            "known term has cohomology in degree {d} above dimension {dim}"
                        )));
                    }
                }
            }
        }
        Ok(SpliceProblem { terms, dim })
    }

    pub fn terms(&self) -> &[SpliceTerm] {
        &self.terms
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    fn unknown_index(&self) -> usize {
        self.terms
            .iter()
            .position(|t| matches!(t, SpliceTerm::Unknown))
            .expect("validated")
    }
}

/// Solves for the unknown term.
pub fn splice_solve(p: &SpliceProblem) -> Result<SectionResult> {
    match p.terms.len() {
        3 => solve_short(&p.terms, p.dim),
        _ => solve_four(p),
    }
}

fn solve_four(p: &SpliceProblem) -> Result<SectionResult> {
    let t = &p.terms;
    let u = p.unknown_index();
    let unknown = || SpliceTerm::Unknown;
    // 0 → A → B → K → 0 and 0 → K → C → D → 0
    if u <= 1 {
        let k = solve_short(&[unknown(), t[2].clone(), t[3].clone()], p.dim)?;
        solve_short(&[t[0].clone(), t[1].clone(), SpliceTerm::Known(k)], p.dim)
    } else {
        let k = solve_short(&[t[0].clone(), t[1].clone(), unknown()], p.dim)?;
        solve_short(&[SpliceTerm::Known(k), t[2].clone(), t[3].clone()], p.dim)
    }
}

/// Feasible ranks of one map, as a sorted list of candidate values.
type Domain = Vec<u64>;

fn solve_short(terms: &[SpliceTerm], dim: u32) -> Result<SectionResult> {
    debug_assert_eq!(terms.len(), 3);
    let width = terms.len();
    let slots = width * (dim as usize + 1);

    // (lo, hi) per slot; None for the unknown term
    let bounds: Vec<Option<(u64, u64)>> = (0..slots)
        .map(|k| {
            let (deg, idx) = ((k / width) as u32, k % width);
            match &terms[idx] {
                SpliceTerm::Known(r) => Some((r.lower.get(deg), r.table.get(deg))),
                SpliceTerm::Unknown => None,
            }
        })
        .collect();

    // ρ_k is the rank of slot k → slot k+1, for k in 0..slots-1
    let maps = slots - 1;
    let mut domains: Vec<Domain> = (0..maps)
        .map(|k| {
            let cap = match (bounds[k], bounds[k + 1]) {
                (Some((_, a)), Some((_, b))) => a.min(b),
                (Some((_, a)), None) | (None, Some((_, a))) => a,
                (None, None) => unreachable!("unknown slots are never adjacent"),
            };
            (0..=cap).collect()
        })
        .collect();

    let fits = |k: usize, left: u64, right: u64| match bounds[k] {
        Some((lo, hi)) => (lo..=hi).contains(&(left + right)),
        None => true,
    };

    // forward: keep ρ_k values with a compatible ρ_{k−1}
    for k in 0..maps {
        let keep: Domain = domains[k]
            .iter()
            .copied()
            .filter(|&v| {
                if k == 0 {
                    fits(0, 0, v)
                } else {
                    domains[k - 1].iter().any(|&u| fits(k, u, v))
                }
            })
            .collect();
        domains[k] = keep;
    }
    // the last slot maps to zero
    if maps > 0 {
        let last = slots - 1;
        let keep: Domain = domains[maps - 1]
            .iter()
            .copied()
            .filter(|&u| fits(last, u, 0))
            .collect();
        domains[maps - 1] = keep;
    }
    // backward: keep ρ_{k−1} values with a compatible ρ_k
    for k in (1..maps).rev() {
        let keep: Domain = domains[k - 1]
            .iter()
            .copied()
            .filter(|&u| domains[k].iter().any(|&v| fits(k, u, v)))
            .collect();
        domains[k - 1] = keep;
    }
    if let Some(k) = domains.iter().position(|d| d.is_empty()) {
        let (deg, idx) = (k / width, k % width);
        return Err(Error::SpliceInconsistent(format!(
            "no rank is feasible for the map out of term {} in degree {deg}",
            idx + 1
        )));
    }

    let range = |k: Option<usize>| -> (u64, u64) {
        match k {
            None => (0, 0),
            Some(k) => (domains[k][0], *domains[k].last().expect("nonempty")),
        }
    };

    let u = terms
        .iter()
        .position(|t| matches!(t, SpliceTerm::Unknown))
        .expect("one unknown");
    let mut lower = CohomologyTable::new();
    let mut upper = CohomologyTable::new();
    let mut exact = true;
    for deg in 0..=dim {
        let k = deg as usize * width + u;
        let incoming = (k > 0).then(|| k - 1);
        let outgoing = (k < maps).then_some(k);
        let (a_lo, a_hi) = range(incoming);
        let (b_lo, b_hi) = range(outgoing);
        exact &= a_lo == a_hi && b_lo == b_hi;
        lower.add(deg, a_lo + b_lo);
        upper.add(deg, a_hi + b_hi);
    }

    // additivity: χ(T₁) − χ(T₂) + χ(T₃) = 0
    let sign = |i: usize| if i % 2 == 0 { 1 } else { -1 };
    let known_sum: i64 = terms
        .iter()
        .enumerate()
        .filter_map(|(i, t)| match t {
            SpliceTerm::Known(r) => Some(sign(i) * r.euler),
            SpliceTerm::Unknown => None,
        })
        .sum();
    let euler = -known_sum * sign(u);

    if exact {
        if upper.euler() != euler {
            return Err(Error::SpliceInconsistent(format!(
                "solved table {upper} has Euler characteristic {} but additivity forces {euler}",
                upper.euler()
            )));
        }
        return Ok(SectionResult::exact(upper, dim));
    }
    Ok(SectionResult {
        status: Status::EulerOnly,
        table: upper,
        lower,
        euler,
        dim,
    })
}
