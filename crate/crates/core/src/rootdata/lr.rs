//! Littlewood–Richardson coefficients for partitions with at most five rows.

use std::collections::BTreeMap;

use super::RANK;

type Shape = [u32; RANK];

/// c^ν_{λμ} for all ν with at most five rows.
///
/// Boxes of μ are added label by label as horizontal strips. A strip of label k
/// is admissible when, for every row r, the number of k's in rows ≤ r does not
/// exceed the number of (k−1)'s in rows < r (the reverse reading word stays a
/// lattice word).
pub fn lr_coefficients(lam: &Shape, mu: &Shape) -> BTreeMap<Shape, u64> {
    let mut out = BTreeMap::new();
    let labels: Vec<u32> = mu.iter().copied().take_while(|&m| m > 0).collect();
    place_label(*lam, None, &labels, &mut out);
    out
}

fn place_label(
    shape: Shape,
    prev_counts: Option<Shape>,
    labels: &[u32],
    out: &mut BTreeMap<Shape, u64>,
) {
    let Some((&count, rest)) = labels.split_first() else {
        *out.entry(shape).or_insert(0) += 1;
        return;
    };
    let mut added = [0u32; RANK];
    strips(&shape, prev_counts.as_ref(), 0, count, 0, 0, &mut added, &mut |added| {
        let mut next = shape;
        for (row, a) in next.iter_mut().zip(added.iter()) {
            *row += a;
        }
        place_label(next, Some(*added), rest, out);
    });
}

/// Enumerates horizontal strips of `remaining` boxes on `shape`, row by row.
#[allow(clippy::too_many_arguments)]
fn strips(
    shape: &Shape,
    prev_counts: Option<&Shape>,
    row: usize,
    remaining: u32,
    placed_so_far: u32,
    prev_so_far: u32,
    added: &mut Shape,
    emit: &mut dyn FnMut(&Shape),
) {
    if remaining == 0 {
        for a in added[row..].iter_mut() {
            *a = 0;
        }
        emit(added);
        return;
    }
    if row == RANK {
        return;
    }
    let cap = if row == 0 {
        remaining
    } else {
        (shape[row - 1] - shape[row]).min(remaining)
    };
    let lattice_cap = match prev_counts {
        None => cap,
        Some(_) => (prev_so_far - placed_so_far).min(cap),
    };
    let prev_here = prev_counts.map_or(0, |p| p[row]);
    for a in 0..=lattice_cap {
        added[row] = a;
        strips(
            shape,
            prev_counts,
            row + 1,
            remaining - a,
            placed_so_far + a,
            prev_so_far + prev_here,
            added,
            emit,
        );
    }
    added[row] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pieri_single_box() {
        let out = lr_coefficients(&[1, 0, 0, 0, 0], &[1, 0, 0, 0, 0]);
        assert_eq!(out.len(), 2);
        assert_eq!(out[&[2, 0, 0, 0, 0]], 1);
        assert_eq!(out[&[1, 1, 0, 0, 0]], 1);
    }

    #[test]
    fn classic_coefficient_two() {
        // s_{21} * s_{21} contains s_{321} with multiplicity 2
        let out = lr_coefficients(&[2, 1, 0, 0, 0], &[2, 1, 0, 0, 0]);
        assert_eq!(out[&[3, 2, 1, 0, 0]], 2);
        assert_eq!(out[&[4, 2, 0, 0, 0]], 1);
        assert_eq!(out[&[2, 2, 1, 1, 0]], 1);
        assert_eq!(out.values().sum::<u64>(), 8);
    }

    #[test]
    fn truncates_to_five_rows() {
        let out = lr_coefficients(&[1, 1, 1, 1, 1], &[1, 0, 0, 0, 0]);
        assert_eq!(out.len(), 1);
        assert_eq!(out[&[2, 1, 1, 1, 1]], 1);
    }
}
