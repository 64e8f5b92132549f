//! Independent reference computations: brute-force D5 Weyl group, signed Weyl
//! products, Kostka numbers by tableau enumeration, Brauer-Klimyk products.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::Ratio;
use v12_core::rootdata::Weight;

pub const RANK: usize = 5;
/// ρ of D5, doubled.
pub const RHO2: [i64; RANK] = [8, 6, 4, 2, 0];

/// A D5 Weyl group element: (w v)_i = sign_i · v_{perm_i}, with an even number
/// of sign flips.
#[derive(Debug, Clone, Copy)]
pub struct WeylElement {
    pub perm: [usize; RANK],
    pub sign: [i64; RANK],
}

impl WeylElement {
    pub fn apply(&self, v: &[i64; RANK]) -> [i64; RANK] {
        std::array::from_fn(|i| self.sign[i] * v[self.perm[i]])
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> u32 {
        positive_roots()
            .iter()
            .filter(|r| {
                let image = self.apply(r);
                image.iter().find(|&&x| x != 0).copied().unwrap_or(0) < 0
            })
            .count() as u32
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All 1920 elements.
pub fn weyl_group() -> Vec<WeylElement> {
    let mut out = Vec::new();
    for p in permutations(RANK) {
        for mask in 0u32..32 {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let sign = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            out.push(WeylElement {
                perm: p.clone().try_into().unwrap(),
                sign,
            });
        }
    }
    out
}

/// Positive roots e_i ± e_j (i < j) as vectors.
pub fn positive_roots() -> Vec<[i64; RANK]> {
    let mut out = Vec::new();
    for i in 0..RANK {
        for j in (i + 1)..RANK {
            for s in [-1, 1] {
                let mut r = [0; RANK];
                r[i] = 1;
                r[j] = s;
                out.push(r);
            }
        }
    }
    out
}

fn dot(a: &[i64; RANK], b: &[i64; RANK]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Π ⟨v, α⟩ / ⟨ρ, α⟩ over positive roots, for a doubled vector v = λ + ρ.
/// This is the Weyl dimension for dominant λ and χ(Σ, E_λ) in general.
pub fn signed_weyl(shifted2: &[i64; RANK]) -> i64 {
    let mut acc = Ratio::<i128>::from_integer(1);
    for r in positive_roots() {
        acc *= Ratio::new(dot(shifted2, &r) as i128, dot(&RHO2, &r) as i128);
    }
    assert!(acc.is_integer());
    i64::try_from(acc.to_integer()).unwrap()
}

fn strictly_dominant(v: &[i64; RANK]) -> bool {
    v[0] > v[1] && v[1] > v[2] && v[2] > v[3] && v[3] > v[4].abs()
}

/// (degree, dimension) of the unique nonzero cohomology of E_λ on Σ, found by
/// scanning the whole Weyl group; `None` when λ + ρ is singular.
pub fn bbw(group: &[WeylElement], lam2: &[i64; RANK]) -> Option<(u32, u64)> {
    let shifted: [i64; RANK] = std::array::from_fn(|i| lam2[i] + RHO2[i]);
    let hits: Vec<&WeylElement> = group
        .iter()
        .filter(|w| strictly_dominant(&w.apply(&shifted)))
        .collect();
    assert!(hits.len() <= 1, "several chambers contain w(λ+ρ)");
    hits.first().map(|w| {
        let top = w.apply(&shifted);
        (w.length(), signed_weyl(&top) as u64)
    })
}

/// χ(Σ, E_λ).
pub fn euler(lam2: &[i64; RANK]) -> i64 {
    signed_weyl(&std::array::from_fn(|i| lam2[i] + RHO2[i]))
}

/// GL5-dominant doubled weights with |coordinate| ≤ `bound` (in undoubled
/// units), integral and half-integral.
pub fn gl5_weights(bound: i64) -> Vec<[i64; RANK]> {
    let mut out = Vec::new();
    for parity in [0, 1] {
        let values: Vec<i64> = (-2 * bound..=2 * bound)
            .filter(|x| x.rem_euclid(2) == parity)
            .collect();
        fn rec(values: &[i64], prefix: &mut Vec<i64>, out: &mut Vec<[i64; RANK]>) {
            if prefix.len() == RANK {
                out.push(prefix.clone().try_into().unwrap());
                return;
            }
            for &v in values {
                if prefix.last().is_none_or(|&p| v <= p) {
                    prefix.push(v);
                    rec(values, prefix, out);
                    prefix.pop();
                }
            }
        }
        rec(&values, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions with at most five parts, each at most `max_part`.
pub fn partitions(max_part: u32) -> Vec<[i64; RANK]> {
    gl5_weights(max_part as i64)
        .into_iter()
        .filter(|w| w.iter().all(|x| x % 2 == 0 && *x >= 0))
        .map(|w| w.map(|x| x / 2))
        .collect()
}

/// Weight multiplicities of the GL5 irreducible with highest weight μ (a
/// partition), by enumerating semistandard tableaux with entries 1..=5.
pub fn kostka(mu: &[i64; RANK]) -> BTreeMap<[i64; RANK], u64> {
    let rows: Vec<usize> = mu.iter().map(|&m| m as usize).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&n| vec![0; n]).collect();
    let mut out = BTreeMap::new();
    fn fill(
        rows: &[usize],
        grid: &mut Vec<Vec<usize>>,
        r: usize,
        c: usize,
        out: &mut BTreeMap<[i64; RANK], u64>,
    ) {
        if r == rows.len() || rows[r] == 0 {
            let mut content = [0i64; RANK];
            for row in grid.iter() {
                for &x in row {
                    content[x] += 1;
                }
            }
            *out.entry(content).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 == rows[r] { (r + 1, 0) } else { (r, c + 1) };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for x in lo_row.max(lo_col)..RANK {
            grid[r][c] = x;
            fill(rows, grid, nr, nc, out);
        }
    }
    fill(&rows, &mut grid, 0, 0, &mut out);
    out
}

/// V_λ ⊗ V_μ for partitions λ, μ by the Brauer-Klimyk formula.
pub fn klimyk(lam: &[i64; RANK], mu: &[i64; RANK]) -> BTreeMap<[i64; RANK], i64> {
    const RHO: [i64; RANK] = [4, 3, 2, 1, 0];
    let mut out: BTreeMap<[i64; RANK], i64> = BTreeMap::new();
    for (nu, m) in kostka(mu) {
        let mut v: [i64; RANK] = std::array::from_fn(|i| lam[i] + nu[i] + RHO[i]);
        // bubble sort into decreasing order, tracking the sign
        let mut sign = 1;
        for i in 0..RANK {
            for j in 0..RANK - 1 - i {
                if v[j] < v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if v.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        let top: [i64; RANK] = std::array::from_fn(|i| v[i] - RHO[i]);
        *out.entry(top).or_insert(0) += sign * m as i64;
    }
    out.retain(|_, m| *m != 0);
    out
}

pub fn weight(lam2: &[i64; RANK]) -> Weight {
    Weight::from_doubled(*lam2).unwrap()
}

pub fn undoubled(w: &Weight) -> [i64; RANK] {
    w.doubled().map(|x| x / 2)
}
