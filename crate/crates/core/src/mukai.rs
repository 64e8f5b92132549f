//! Euler pairings and cohomological Fourier–Mukai transforms.
//!
//! A transform with kernel K on source × target acts on Chern characters by
//! a ↦ ± p_*(q*(ch(a)·td(source)) · ch(K)); a shift [n] contributes (−1)ⁿ.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intersect::linalg;
use crate::intersect::{
    euler_pairing, pushpull, push_sheaf, q, tautological_ch, todd, universal_ch, ChernData,
    CohClass, Direction, Geometry, MapId, Space, Q,
};

/// Degree of a conic against H.
pub const CONIC_DEGREE: i64 = 2;

/// χ(a, b) = ∫ ch(a)^∨ · ch(b) · td.
pub fn euler(geom: &Geometry, a: &ChernData, b: &ChernData) -> Result<Q> {
    euler_pairing(geom, a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelName {
    /// Φ₁: C∨ → X, kernel E₁.
    Phi1,
    /// Left adjoint Φ₁*, kernel E₁(−2H_X − H_C)[3].
    Phi1Left,
    /// Right adjoint Φ₁^!, kernel E₁*(H_C)[1].
    Phi1Shriek,
    /// Φ₂: S∨ → S, kernel E₂.
    Phi2,
    /// Left adjoint Φ₂*, kernel E₂(−H_S − H_S∨)[2].
    Phi2Left,
    /// Right adjoint Φ₂^!, kernel E₂*[2].
    Phi2Shriek,
    /// X → S∨ with kernel Ẽ(−H_X − H_S∨)[3].
    ETilde,
}

impl KernelName {
    pub const ALL: [KernelName; 7] = [
        KernelName::Phi1,
        KernelName::Phi1Left,
        KernelName::Phi1Shriek,
        KernelName::Phi2,
        KernelName::Phi2Left,
        KernelName::Phi2Shriek,
        KernelName::ETilde,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            KernelName::Phi1 => "phi1",
            KernelName::Phi1Left => "phi1-left",
            KernelName::Phi1Shriek => "phi1-shriek",
            KernelName::Phi2 => "phi2",
            KernelName::Phi2Left => "phi2-left",
            KernelName::Phi2Shriek => "phi2-shriek",
            KernelName::ETilde => "E-tilde",
        }
    }
}

impl fmt::Display for KernelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KernelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelName::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownName(format!("kernel {s}")))
    }
}

/// A kernel on a product space, read as a transform between its factors.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelSpec {
    pub source: Space,
    pub target: Space,
    product: Space,
    source_is_first: bool,
    kernel: ChernData,
    parity: i8,
}

impl KernelSpec {
    pub fn new(source: Space, target: Space, kernel: ChernData, parity: i8) -> Result<Self> {
        let product = kernel.ch().model().space();
        let source_is_first = match product.factors() {
            Some((a, b)) if a == source && b == target => true,
            Some((a, b)) if a == target && b == source => false,
            _ => {
                return Err(Error::Precondition(format!(
                    "kernel on {product} does not join {source} and {target}"
                )))
            }
        };
        if parity != 1 && parity != -1 {
            return Err(Error::Precondition(format!("shift parity {parity} is not ±1")));
        }
        Ok(KernelSpec {
            source,
            target,
            product,
            source_is_first,
            kernel,
            parity,
        })
    }

    pub fn kernel(&self) -> &ChernData {
        &self.kernel
    }

    pub fn parity(&self) -> i8 {
        self.parity
    }

    pub fn product(&self) -> Space {
        self.product
    }

    fn source_projection(&self) -> MapId {
        if self.source_is_first {
            MapId::First(self.product)
        } else {
            MapId::Second(self.product)
        }
    }

    fn target_projection(&self) -> MapId {
        if self.source_is_first {
            MapId::Second(self.product)
        } else {
            MapId::First(self.product)
        }
    }
}

fn pull(geom: &Geometry, map: MapId, c: &CohClass) -> Result<CohClass> {
    pushpull(geom, map, Direction::Pull, c)
}

fn hyper(geom: &Geometry, space: Space) -> Result<CohClass> {
    match space {
        Space::CDual => Ok(geom.class(space, "pt")?.scale(q(12))),
        _ => geom.class(space, "H"),
    }
}

/// e^{xH_first + yH_second} on a product.
fn twist_class(geom: &Geometry, product: Space, x: i64, y: i64) -> Result<CohClass> {
    let (a, b) = product.factors().expect("product space");
    let h = &pull(geom, MapId::First(product), &hyper(geom, a)?.scale(q(x)))?
        + &pull(geom, MapId::Second(product), &hyper(geom, b)?.scale(q(y)))?;
    Ok(h.exp())
}

/// ch(Ẽ) = ch(U₊*) ⊠ 1 − 1 ⊠ ch(U₋) on X × S∨.
pub fn etilde_ch(geom: &Geometry) -> Result<ChernData> {
    let p = Space::XxSDual;
    let plus = pull(geom, MapId::First(p), tautological_ch(geom, Space::X)?.dual().ch())?;
    let minus = pull(geom, MapId::Second(p), tautological_ch(geom, Space::SDual)?.ch())?;
    Ok(ChernData::new(&plus - &minus))
}

pub fn kernel(geom: &Geometry, name: KernelName) -> Result<KernelSpec> {
    use KernelName::*;
    let e1 = || universal_ch(geom, Space::XxC).map(|u| u.chern);
    let e2 = || universal_ch(geom, Space::SxSDual).map(|u| u.chern);
    let tw = |c: ChernData, p, x, y| -> Result<ChernData> {
        Ok(ChernData::new(c.ch() * &twist_class(geom, p, x, y)?))
    };
    match name {
        Phi1 => KernelSpec::new(Space::CDual, Space::X, e1()?, 1),
        Phi1Left => KernelSpec::new(Space::X, Space::CDual, tw(e1()?, Space::XxC, -2, -1)?, -1),
        Phi1Shriek => KernelSpec::new(Space::X, Space::CDual, tw(e1()?.dual(), Space::XxC, 0, 1)?, -1),
        Phi2 => KernelSpec::new(Space::SDual, Space::S, e2()?, 1),
        Phi2Left => KernelSpec::new(Space::S, Space::SDual, tw(e2()?, Space::SxSDual, -1, -1)?, 1),
        Phi2Shriek => KernelSpec::new(Space::S, Space::SDual, e2()?.dual(), 1),
        ETilde => KernelSpec::new(Space::X, Space::SDual, tw(etilde_ch(geom)?, Space::XxSDual, -1, -1)?, -1),
    }
}

/// ch of the image of `a` under the transform with kernel `k`.
pub fn transform(geom: &Geometry, k: &KernelSpec, a: &ChernData) -> Result<ChernData> {
    let src = geom.model(k.source);
    if **a.ch().model() != **src {
        return Err(Error::ModelMismatch {
            expected: src.describe(),
            found: a.ch().model().describe(),
        });
    }
    let td = todd(geom, k.source)?;
    let pulled = pull(geom, k.source_projection(), &(a.ch() * &td))?;
    let pushed = pushpull(
        geom,
        k.target_projection(),
        Direction::Push,
        &pulled.checked_mul(k.kernel.ch())?,
    )?;
    Ok(ChernData::new(pushed.scale(q(k.parity as i64))))
}

/// ch(O_R) for a conic R ⊂ X: deg·L plus the point multiple fixed by χ(O_R) = 1.
pub fn conic_ch(geom: &Geometry) -> Result<ChernData> {
    let l = geom.class(Space::X, "L")?.scale(q(CONIC_DEGREE));
    let p = geom.class(Space::X, "P")?;
    let td = todd(geom, Space::X)?;
    // arithmetic genus 0
    let t = Q::one() - (&l * &td).integrate();
    Ok(ChernData::new(&l + &p.scale(t)))
}

/// Named classes on the spaces involved.
pub fn named_class(geom: &Geometry, name: &str) -> Result<ChernData> {
    let x = Space::X;
    match name {
        "O" | "O_X" => Ok(ChernData::new(geom.one(x))),
        "U" | "U-plus" => tautological_ch(geom, x),
        "dual(U)" | "U-plus-dual" => Ok(tautological_ch(geom, x)?.dual()),
        "O_R" => conic_ch(geom),
        "E1y" => transform(geom, &kernel(geom, KernelName::Phi1)?, &point(geom, Space::CDual)?),
        "phi1(1)" => transform(geom, &kernel(geom, KernelName::Phi1)?, &ChernData::new(geom.one(Space::CDual))),
        "phi1(pt)" => named_class(geom, "E1y"),
        _ => Err(Error::UnknownName(format!("class {name}"))),
    }
}

pub fn point(geom: &Geometry, space: Space) -> Result<ChernData> {
    let m = geom.model(space);
    Ok(ChernData::new(CohClass::basis_at(m, m.top_index())))
}

/// A pairing matrix χ(c_i, c_j) with its verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct GramReport {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<Q>>,
}

impl GramReport {
    pub fn is_exceptional(&self, i: usize) -> bool {
        self.matrix[i][i].is_one()
    }

    /// χ(c_j, c_i) = 0 for j in `later` and i in `earlier`.
    pub fn is_semiorthogonal(&self, earlier: std::ops::Range<usize>, later: std::ops::Range<usize>) -> bool {
        later
            .clone()
            .all(|j| earlier.clone().all(|i| self.matrix[j][i].is_zero()))
    }

    /// Blocks of the given sizes, in order, are mutually semiorthogonal.
    pub fn is_block_upper_triangular(&self, sizes: &[usize]) -> bool {
        let mut starts = vec![0];
        for s in sizes {
            starts.push(starts.last().unwrap() + s);
        }
        if *starts.last().unwrap() != self.labels.len() {
            return false;
        }
        (0..sizes.len()).all(|a| {
            (a + 1..sizes.len())
                .all(|b| self.is_semiorthogonal(starts[a]..starts[a + 1], starts[b]..starts[b + 1]))
        })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_block_upper_triangular(&vec![1; self.labels.len()])
    }

    pub fn has_unit_diagonal(&self, range: std::ops::Range<usize>) -> bool {
        range.into_iter().all(|i| self.is_exceptional(i))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }
}

pub fn gram(geom: &Geometry, collection: &[(String, ChernData)]) -> Result<GramReport> {
    let matrix = collection
        .iter()
        .map(|(_, a)| {
            collection
                .iter()
                .map(|(_, b)| euler(geom, a, b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GramReport {
        labels: collection.iter().map(|(l, _)| l.clone()).collect(),
        matrix,
    })
}

/// Rank of the span of the given classes in their cohomology.
pub fn lattice_rank(classes: &[ChernData]) -> usize {
    let rows: Vec<Vec<Q>> = classes.iter().map(|c| c.ch().coeffs().to_vec()).collect();
    linalg::rank(&rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationSide {
    Left,
    Right,
}

/// Right: χ(a, e)·e − a. Left: χ(e, a)·e − a.
pub fn mutate(geom: &Geometry, a: &ChernData, through: &ChernData, side: MutationSide) -> Result<ChernData> {
    let k = match side {
        MutationSide::Right => euler(geom, a, through)?,
        MutationSide::Left => euler(geom, through, a)?,
    };
    Ok(ChernData::new(&through.ch().scale(k) - a.ch()))
}

/// Both sides of the comparison between Φ₁* followed by β_* and α* followed
/// by Φ₂*.
#[derive(Debug, Clone, PartialEq)]
pub struct CommdiagReport {
    /// Transform of a under the Ẽ kernel.
    pub etilde: CohClass,
    /// β_*Φ₁*(a) − Φ₂*(α*a).
    pub difference: CohClass,
}

impl CommdiagReport {
    pub fn holds(&self) -> bool {
        self.etilde.is_zero() && self.difference.is_zero()
    }
}

/// Computes both routes without checking orthogonality.
pub fn commdiag_routes(geom: &Geometry, a: &ChernData) -> Result<CommdiagReport> {
    let etilde = transform(geom, &kernel(geom, KernelName::ETilde)?, a)?.ch().clone();
    let phi1 = transform(geom, &kernel(geom, KernelName::Phi1Left)?, a)?;
    let route1 = push_sheaf(geom, MapId::Beta, phi1.ch())?;
    let restricted = ChernData::new(pull(geom, MapId::Alpha, a.ch())?);
    let route2 = transform(geom, &kernel(geom, KernelName::Phi2Left)?, &restricted)?;
    let difference = &(&route1 - route2.ch()) - &etilde;
    Ok(CommdiagReport {
        etilde,
        difference,
    })
}

/// For a numerically in ⟂⟨U₊, O_X⟩, checks that Φ₂* ∘ α* and β_* ∘ Φ₁* agree.
pub fn commdiag_check(geom: &Geometry, a: &ChernData) -> Result<bool> {
    let u = tautological_ch(geom, Space::X)?;
    let o = ChernData::new(geom.one(Space::X));
    let (xu, xo) = (euler(geom, a, &u)?, euler(geom, a, &o)?);
    if !xu.is_zero() || !xo.is_zero() {
        return Err(Error::Precondition(format!(
            "χ(a, U) = {xu} and χ(a, O) = {xo} must vanish"
        )));
    }
    Ok(commdiag_routes(geom, a)?.holds())
}

/// Basis of {a on X : χ(a, U₊) = χ(a, O_X) = 0}.
pub fn orthogonal_complement(geom: &Geometry) -> Result<Vec<ChernData>> {
    let x = geom.model(Space::X);
    let u = tautological_ch(geom, Space::X)?;
    let o = ChernData::new(geom.one(Space::X));
    let basis: Vec<ChernData> = (0..x.len())
        .map(|i| ChernData::new(CohClass::basis_at(x, i)))
        .collect();
    // linear functionals a ↦ χ(a, U), χ(a, O) on the basis
    let rows: Vec<Vec<Q>> = [&u, &o]
        .iter()
        .map(|t| basis.iter().map(|b| euler(geom, b, t)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(null_space(&rows)
        .into_iter()
        .map(|v| {
            ChernData::new(
                CohClass::from_coeffs(x, v).expect("basis-sized vector"),
            )
        })
        .collect())
}

fn null_space(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<Q>> = Vec::new();
    // try unit vectors for the free coordinates, solving for the rest
    for free in 0..n {
        let mut cols: Vec<usize> = (0..n).filter(|&c| c != free).collect();
        cols.truncate(n - 1);
        let a: Vec<Vec<Q>> = rows.iter().map(|r| cols.iter().map(|&c| r[c]).collect()).collect();
        let b: Vec<Q> = rows.iter().map(|r| -r[free]).collect();
        // least-constrained particular solution: zero the last free columns
        if let Some(v) = particular(&a, &b) {
            let mut full = vec![Q::zero(); n];
            full[free] = Q::one();
            for (c, x) in cols.iter().zip(v) {
                full[*c] = x;
            }
            let mut candidate = out.clone();
            candidate.push(full.clone());
            if linalg::rank(&candidate) == candidate.len() {
                out.push(full);
            }
        }
        if out.len() + linalg::rank(rows) == n {
            break;
        }
    }
    out
}

fn particular(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map_or(0, Vec::len);
    // fix extra unknowns to zero one at a time until the system is square
    for mask in 0u32..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let sub: Vec<Vec<Q>> = a.iter().map(|r| keep.iter().map(|&c| r[c]).collect()).collect();
        if let linalg::Solution::Unique(x) = linalg::solve(&sub, b) {
            let mut v = vec![Q::zero(); n];
            for (c, val) in keep.iter().zip(x) {
                v[*c] = val;
            }
            return Some(v);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::frac;

    fn geom() -> &'static Geometry {
        Geometry::standard()
    }

    fn on(space: Space, terms: &[(&str, Q)]) -> ChernData {
        let g = geom();
        ChernData::new(terms.iter().fold(g.zero(space), |acc, (n, v)| {
            &acc + &g.class(space, n).unwrap().scale(*v)
        }))
    }

    #[test]
    fn basic_pairings() {
        let g = geom();
        let o = named_class(g, "O").unwrap();
        let u = named_class(g, "U").unwrap();
        assert_eq!(euler(g, &o, &o).unwrap(), q(1));
        assert_eq!(euler(g, &o, &u).unwrap(), q(0));
        assert_eq!(euler(g, &u, &o).unwrap(), q(10));
        assert_eq!(euler(g, &u, &u).unwrap(), q(1));
    }

    #[test]
    fn phi1_of_a_point() {
        let g = geom();
        let e = named_class(g, "E1y").unwrap();
        assert_eq!(e, on(Space::X, &[("1", q(2)), ("H", q(1)), ("L", q(1)), ("P", frac(-1, 2))]));
        assert_eq!(e.c(1), g.class(Space::X, "H").unwrap());
        assert_eq!(e.c(2), g.class(Space::X, "L").unwrap().scale(q(5)));
        assert_eq!(euler(g, &e, &e).unwrap(), q(0));
    }

    #[test]
    fn conic() {
        let g = geom();
        let r = conic_ch(g).unwrap();
        assert_eq!(r, on(Space::X, &[("L", q(2))]));
        let o = named_class(g, "O").unwrap();
        let u = named_class(g, "U").unwrap();
        assert_eq!(euler(g, &r, &o).unwrap(), q(1));
        assert_eq!(euler(g, &r, &u).unwrap(), q(1));
        let shriek = kernel(g, KernelName::Phi1Shriek).unwrap();
        assert_eq!(transform(g, &shriek, &r).unwrap(), on(Space::CDual, &[("pt", q(2))]));
    }

    #[test]
    fn zero_kernel() {
        let g = geom();
        let k = KernelSpec::new(Space::CDual, Space::X, ChernData::new(g.zero(Space::XxC)), 1).unwrap();
        assert!(transform(g, &k, &point(g, Space::CDual).unwrap()).unwrap().ch().is_zero());
        assert!(KernelSpec::new(Space::S, Space::X, ChernData::new(g.zero(Space::XxC)), 1).is_err());
    }

    #[test]
    fn adjunctions() {
        let g = geom();
        let basis = |s: Space| -> Vec<ChernData> {
            let m = g.model(s);
            (0..m.len()).map(|i| ChernData::new(CohClass::basis_at(m, i))).collect()
        };
        for (fwd, left, right, src, tgt) in [
            (KernelName::Phi1, KernelName::Phi1Left, KernelName::Phi1Shriek, Space::CDual, Space::X),
            (KernelName::Phi2, KernelName::Phi2Left, KernelName::Phi2Shriek, Space::SDual, Space::S),
        ] {
            let (f, l, r) = (kernel(g, fwd).unwrap(), kernel(g, left).unwrap(), kernel(g, right).unwrap());
            for b in basis(src) {
                let fb = transform(g, &f, &b).unwrap();
                for a in basis(tgt) {
                    let ra = transform(g, &r, &a).unwrap();
                    let la = transform(g, &l, &a).unwrap();
                    assert_eq!(euler(g, &fb, &a).unwrap(), euler(g, &b, &ra).unwrap(), "{fwd}^!");
                    assert_eq!(euler(g, &la, &b).unwrap(), euler(g, &a, &fb).unwrap(), "{fwd}*");
                }
            }
        }
    }

    #[test]
    fn gram_of_the_decomposition() {
        let g = geom();
        let coll: Vec<(String, ChernData)> = ["U", "O", "phi1(1)", "phi1(pt)"]
            .iter()
            .map(|n| (n.to_string(), named_class(g, n).unwrap()))
            .collect();
        let r = gram(g, &coll).unwrap();
        assert!(r.is_block_upper_triangular(&[1, 1, 2]));
        assert!(r.has_unit_diagonal(0..2));
        assert_eq!(r.matrix[0][1], q(10));
        assert_eq!(r.matrix[2][3], q(1));
        assert_eq!(r.matrix[3][2], q(-1));
        assert_eq!(r.rank(), 4);
        let classes: Vec<ChernData> = coll.into_iter().map(|(_, c)| c).collect();
        assert_eq!(lattice_rank(&classes), 4);
    }

    #[test]
    fn mutations() {
        let g = geom();
        let o = named_class(g, "O").unwrap();
        let u = named_class(g, "U").unwrap();
        let r = mutate(g, &u, &o, MutationSide::Right).unwrap();
        assert_eq!(r, named_class(g, "dual(U)").unwrap());
        assert_eq!(mutate(g, &r, &o, MutationSide::Left).unwrap(), u);
        let coll = vec![("O".to_string(), o.clone()), ("dual(U)".to_string(), r)];
        let rep = gram(g, &coll).unwrap();
        assert!(rep.is_upper_triangular() && rep.has_unit_diagonal(0..2));
        // orthogonal mutation
        let e = named_class(g, "E1y").unwrap();
        assert_eq!(mutate(g, &e, &o, MutationSide::Right).unwrap(), e.scale(-Q::one()));
    }

    #[test]
    fn commutative_square() {
        let g = geom();
        let comp = orthogonal_complement(g).unwrap();
        assert_eq!(comp.len(), 2);
        for a in &comp {
            assert!(commdiag_check(g, a).unwrap());
        }
        assert!(commdiag_check(g, &named_class(g, "E1y").unwrap()).unwrap());
        assert!(matches!(
            commdiag_check(g, &named_class(g, "O").unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn etilde_transform_splits() {
        // Ẽ(a) = χ(a, U)·ch O(−H) − χ(a, O)·ch U₋(−H) on S∨
        let g = geom();
        let k = kernel(g, KernelName::ETilde).unwrap();
        let u = named_class(g, "U").unwrap();
        let o = named_class(g, "O").unwrap();
        let h = g.class(Space::SDual, "H").unwrap().scale(-Q::one()).exp();
        let um = tautological_ch(g, Space::SDual).unwrap();
        let x = g.model(Space::X);
        for i in 0..x.len() {
            let a = ChernData::new(CohClass::basis_at(x, i));
            let lhs = transform(g, &k, &a).unwrap();
            let rhs = &h.scale(euler(g, &a, &u).unwrap())
                - &(um.ch() * &h).scale(euler(g, &a, &o).unwrap());
            assert_eq!(lhs.ch(), &rhs);
        }
    }

    #[test]
    fn etilde_from_its_filtration() {
        // 0 → μ₁_*E₁(−H_X) → Ẽ → μ₂_*E₂ → 0
        let g = geom();
        let e1 = universal_ch(g, Space::XxC).unwrap().chern;
        let e2 = universal_ch(g, Space::SxSDual).unwrap().chern;
        let h = pull(g, MapId::First(Space::XxSDual), &g.class(Space::X, "H").unwrap()).unwrap();
        let first = &push_sheaf(g, MapId::Mu1, e1.ch()).unwrap() * &h.scale(-Q::one()).exp();
        let second = push_sheaf(g, MapId::Mu2, e2.ch()).unwrap();
        assert_eq!(&first + &second, etilde_ch(g).unwrap().ch().clone());
    }

    #[test]
    fn euler_characteristics_of_the_families() {
        let g = geom();
        // Rq_*E₁(−H_X) = 0 fibrewise, q_*E₂ = U₋*
        let e1 = universal_ch(g, Space::XxC).unwrap().chern;
        let hx = pull(g, MapId::First(Space::XxC), &g.class(Space::X, "H").unwrap()).unwrap();
        let tw = e1.twist(&hx.scale(-Q::one())).unwrap();
        let o = ChernData::new(g.one(Space::XxC));
        assert_eq!(euler(g, &o, &tw).unwrap(), q(0));
        let e2 = universal_ch(g, Space::SxSDual).unwrap().chern;
        let o2 = ChernData::new(g.one(Space::SxSDual));
        let u_minus_dual = tautological_ch(g, Space::SDual).unwrap().dual();
        let o_sd = ChernData::new(g.one(Space::SDual));
        assert_eq!(euler(g, &o2, &e2).unwrap(), euler(g, &o_sd, &u_minus_dual).unwrap());
        assert_eq!(euler(g, &o2, &e2).unwrap(), q(10));
    }

    #[test]
    fn phi2_is_invertible() {
        let g = geom();
        let k = kernel(g, KernelName::Phi2).unwrap();
        let m = g.model(Space::SDual);
        let rows: Vec<Vec<Q>> = (0..m.len())
            .map(|i| {
                transform(g, &k, &ChernData::new(CohClass::basis_at(m, i)))
                    .unwrap()
                    .ch()
                    .coeffs()
                    .to_vec()
            })
            .collect();
        assert_eq!(linalg::rank(&rows), 3);
    }
}
