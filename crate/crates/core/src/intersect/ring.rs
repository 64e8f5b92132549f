use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// The spaces carrying a truncated cohomology ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Point,
    /// The V12 threefold.
    X,
    /// Its K3 hyperplane section.
    S,
    /// The orthogonal K3 surface.
    SDual,
    /// The orthogonal genus-7 curve.
    CDual,
    XxC,
    SxSDual,
    SxC,
    XxSDual,
}

impl Space {
    pub const FACTORS: [Space; 4] = [Space::X, Space::S, Space::SDual, Space::CDual];
    pub const PRODUCTS: [Space; 4] = [Space::XxC, Space::SxSDual, Space::SxC, Space::XxSDual];

    pub fn factors(self) -> Option<(Space, Space)> {
        match self {
            Space::XxC => Some((Space::X, Space::CDual)),
            Space::SxSDual => Some((Space::S, Space::SDual)),
            Space::SxC => Some((Space::S, Space::CDual)),
            Space::XxSDual => Some((Space::X, Space::SDual)),
            _ => None,
        }
    }

    pub fn dim(self) -> u8 {
        match self.factors() {
            Some((a, b)) => a.dim() + b.dim(),
            None => match self {
                Space::Point => 0,
                Space::X => 3,
                Space::S | Space::SDual => 2,
                Space::CDual => 1,
                _ => unreachable!(),
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::Point => "point",
            Space::X => "X",
            Space::S => "S",
            Space::SDual => "S_dual",
            Space::CDual => "C_dual",
            Space::XxC => "XxC_dual",
            Space::SxSDual => "SxS_dual",
            Space::SxC => "SxC_dual",
            Space::XxSDual => "XxS_dual",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A truncated rational cohomology ring: a graded basis, structure constants and
/// integration against the top class.
///
/// Two products carry one extra codimension-2 class standing for a Künneth
/// component outside the algebraic basis: `eta` in H³(X) ⊗ H¹(C∨) on X × C∨ and
/// `gamma` in H²(S)_prim ⊗ H²(S∨)_prim on S × S∨. It annihilates every
/// pulled-back class of positive codimension and squares to `extra_square`
/// times the point class.
#[derive(Debug, Clone)]
pub struct RingModel {
    space: Space,
    names: Vec<String>,
    codims: Vec<u8>,
    /// products[i * n + j] = basis_i · basis_j in basis coordinates
    products: Vec<Vec<Q>>,
    top: usize,
    extra: Option<usize>,
    extra_square: Q,
}

impl PartialEq for RingModel {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.extra_square == other.extra_square
    }
}

impl RingModel {
    fn factor(space: Space) -> Self {
        // (names, codims, nonzero products (i, j, k, coeff) with i <= j)
        let (names, codims, rules): (&[&str], &[u8], &[(usize, usize, usize, i64)]) = match space {
            Space::Point => (&["1"], &[0], &[]),
            Space::X => (&["1", "H", "L", "P"], &[0, 1, 2, 3], &[(1, 1, 2, 12), (1, 2, 3, 1)]),
            Space::S | Space::SDual => (&["1", "H", "P"], &[0, 1, 2], &[(1, 1, 2, 12)]),
            Space::CDual => (&["1", "pt"], &[0, 1], &[]),
            _ => unreachable!("not a factor"),
        };
        let n = names.len();
        let mut products = vec![vec![Q::zero(); n]; n * n];
        for i in 0..n {
            products[i][i] = Q::one();
            products[i * n][i] = Q::one();
        }
        for &(i, j, k, c) in rules {
            products[i * n + j][k] = q(c);
            products[j * n + i][k] = q(c);
        }
        RingModel {
            space,
            names: names.iter().map(|s| s.to_string()).collect(),
            codims: codims.to_vec(),
            products,
            top: n - 1,
            extra: None,
            extra_square: Q::zero(),
        }
    }

    fn product(space: Space, extra_square: Q) -> Self {
        let (fa, fb) = space.factors().expect("product space");
        let (a, b) = (Self::factor(fa), Self::factor(fb));
        let (na, nb) = (a.len(), b.len());
        let extra_name = Self::extra_name_of(space);
        let n = na * nb + usize::from(extra_name.is_some());

        let mut names = Vec::with_capacity(n);
        let mut codims = Vec::with_capacity(n);
        for i in 0..na {
            for j in 0..nb {
                names.push(format!("{}*{}", a.names[i], b.names[j]));
                codims.push(a.codims[i] + b.codims[j]);
            }
        }
        let top = na * nb - 1;
        let mut products = vec![vec![Q::zero(); n]; n * n];
        for (i, k) in (0..na).flat_map(|i| (0..nb).map(move |k| (i, k))) {
            for (j, l) in (0..na).flat_map(|j| (0..nb).map(move |l| (j, l))) {
                let left = i * nb + k;
                let right = j * nb + l;
                let pa = &a.products[i * na + j];
                let pb = &b.products[k * nb + l];
                for (x, ca) in pa.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (y, cb) in pb.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        products[left * n + right][x * nb + y] += ca * cb;
                    }
                }
            }
        }
        let extra = extra_name.map(|name| {
            let e = n - 1;
            names.push(name.to_string());
            codims.push(2);
            products[e * n][e] = Q::one();
            products[e][e] = Q::one();
            products[e * n + e][top] = extra_square;
            e
        });
        RingModel {
            space,
            names,
            codims,
            products,
            top,
            extra,
            extra_square: if extra.is_some() { extra_square } else { Q::zero() },
        }
    }

    fn extra_name_of(space: Space) -> Option<&'static str> {
        match space {
            Space::XxC => Some("eta"),
            Space::SxSDual => Some("gamma"),
            _ => None,
        }
    }

    /// Builds the model of `space`; `extra_square` is ignored on spaces
    /// without an extra class.
    pub fn new(space: Space, extra_square: Q) -> Self {
        match space.factors() {
            Some(_) => Self::product(space, extra_square),
            None => Self::factor(space),
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn codim(&self, i: usize) -> u8 {
        self.codims[i]
    }

    pub fn dim(&self) -> u8 {
        self.space.dim()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(format!("{name} (on {})", self.space)))
    }

    pub fn extra_index(&self) -> Option<usize> {
        self.extra
    }

    pub fn extra_name(&self) -> Option<&'static str> {
        Self::extra_name_of(self.space)
    }

    pub fn extra_square(&self) -> Q {
        self.extra_square
    }

    pub fn top_index(&self) -> usize {
        self.top
    }

    fn product_of(&self, i: usize, j: usize) -> &[Q] {
        &self.products[i * self.len() + j]
    }

    pub fn describe(&self) -> String {
        if let Some(name) = self.extra_name() {
            format!("{} ({name}^2 = {})", self.space, self.extra_square)
        } else {
            self.space.to_string()
        }
    }
}

/// A rational class in a ring model.
#[derive(Clone, PartialEq)]
pub struct CohClass {
    model: Arc<RingModel>,
    coeffs: Vec<Q>,
}

impl CohClass {
    pub fn zero(model: &Arc<RingModel>) -> Self {
        CohClass {
            model: model.clone(),
            coeffs: vec![Q::zero(); model.len()],
        }
    }

    pub fn one(model: &Arc<RingModel>) -> Self {
        Self::basis_at(model, 0)
    }

    pub fn basis_at(model: &Arc<RingModel>, i: usize) -> Self {
        let mut c = Self::zero(model);
        c.coeffs[i] = Q::one();
        c
    }

    pub fn basis(model: &Arc<RingModel>, name: &str) -> Result<Self> {
        Ok(Self::basis_at(model, model.index(name)?))
    }

    pub fn from_coeffs(model: &Arc<RingModel>, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != model.len() {
            return Err(Error::MalformedClass(format!(
                "{} coefficients for a basis of size {}",
                coeffs.len(),
                model.len()
            )));
        }
        Ok(CohClass {
            model: model.clone(),
            coeffs,
        })
    }

    pub fn from_map(model: &Arc<RingModel>, map: &BTreeMap<String, Q>) -> Result<Self> {
        let mut c = Self::zero(model);
        for (name, v) in map {
            c.coeffs[model.index(name)?] += v;
        }
        Ok(c)
    }

    /// Nonzero coefficients keyed by basis name.
    pub fn to_map(&self) -> BTreeMap<String, Q> {
        self.model
            .names
            .iter()
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| (n.clone(), *c))
            .collect()
    }

    pub fn model(&self) -> &Arc<RingModel> {
        &self.model
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, name: &str) -> Result<Q> {
        Ok(self.coeffs[self.model.index(name)?])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &CohClass) -> Result<()> {
        if *self.model == *other.model {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                expected: self.model.describe(),
                found: other.model.describe(),
            })
        }
    }

    pub fn checked_add(&self, other: &CohClass) -> Result<CohClass> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CohClass {
            model: self.model.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &CohClass) -> Result<CohClass> {
        self.check_same(other)?;
        let n = self.model.len();
        let mut out = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                for (k, c) in self.model.product_of(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += a * b * c;
                    }
                }
            }
        }
        Ok(CohClass {
            model: self.model.clone(),
            coeffs: out,
        })
    }

    pub fn scale(&self, s: Q) -> CohClass {
        CohClass {
            model: self.model.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Degree of the top component.
    pub fn integrate(&self) -> Q {
        self.coeffs[self.model.top]
    }

    /// The homogeneous component of codimension `k`.
    pub fn part(&self, k: u8) -> CohClass {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if self.model.codims[i] == k { *c } else { Q::zero() })
            .collect();
        CohClass {
            model: self.model.clone(),
            coeffs,
        }
    }

    /// Multiplies the codimension-k part by (−1)^k, the effect of dualizing on a
    /// Chern character.
    pub fn dual(&self) -> CohClass {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if self.model.codims[i] % 2 == 1 { -c } else { *c })
            .collect();
        CohClass {
            model: self.model.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, k: u32) -> CohClass {
        (0..k).fold(CohClass::one(&self.model), |acc, _| &acc * self)
    }

    /// exp of a class; the series stops at the dimension of the space.
    pub fn exp(&self) -> CohClass {
        let mut out = CohClass::one(&self.model);
        let mut term = CohClass::one(&self.model);
        for k in 1..=self.model.dim() as i64 {
            term = (&term * self).scale(frac(1, k));
            out = &out + &term;
        }
        out
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.model.describe(), self)
    }
}

impl std::ops::Add for &CohClass {
    type Output = CohClass;

    /// Panics on a model mismatch; use [`CohClass::checked_add`] for user input.
    fn add(self, rhs: &CohClass) -> CohClass {
        self.checked_add(rhs).expect("classes on the same model")
    }
}

impl std::ops::Sub for &CohClass {
    type Output = CohClass;

    fn sub(self, rhs: &CohClass) -> CohClass {
        self.checked_add(&rhs.scale(-Q::one()))
            .expect("classes on the same model")
    }
}

impl std::ops::Mul for &CohClass {
    type Output = CohClass;

    fn mul(self, rhs: &CohClass) -> CohClass {
        self.checked_mul(rhs).expect("classes on the same model")
    }
}

impl std::ops::Neg for &CohClass {
    type Output = CohClass;

    fn neg(self) -> CohClass {
        self.scale(-Q::one())
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, c) in self.model.names.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if *c < Q::zero() { ("-", -c) } else { ("+", *c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if name == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag} {name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Multiplication with a model check.
pub fn mul(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    a.checked_mul(b)
}

pub fn integrate(a: &CohClass) -> Q {
    a.integrate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(s: Space) -> Arc<RingModel> {
        Arc::new(RingModel::new(s, q(14)))
    }

    #[test]
    fn threefold_relations() {
        let x = model(Space::X);
        let h = CohClass::basis(&x, "H").unwrap();
        let l = CohClass::basis(&x, "L").unwrap();
        assert_eq!(&h * &h, l.scale(q(12)));
        assert_eq!(h.pow(3).integrate(), q(12));
        assert_eq!(CohClass::one(&x).integrate(), q(0));
    }

    #[test]
    fn product_basis_and_eta() {
        let m = model(Space::XxC);
        assert_eq!(m.len(), 9);
        let eta = CohClass::basis(&m, "eta").unwrap();
        let h = CohClass::basis(&m, "H*1").unwrap();
        let pt = CohClass::basis(&m, "1*pt").unwrap();
        assert!((&eta * &h).is_zero());
        assert!((&eta * &pt).is_zero());
        assert_eq!((&eta * &eta).integrate(), q(14));
        assert_eq!((&eta * &CohClass::one(&m)), eta);
        let p = CohClass::basis(&m, "P*1").unwrap();
        assert_eq!((&p * &pt).integrate(), q(1));
    }

    #[test]
    fn associativity_and_commutativity() {
        for s in Space::FACTORS.iter().chain(Space::PRODUCTS.iter()) {
            let m = model(*s);
            let basis: Vec<_> = (0..m.len()).map(|i| CohClass::basis_at(&m, i)).collect();
            for a in &basis {
                for b in &basis {
                    assert_eq!(a * b, b * a, "{s}");
                    for c in &basis {
                        assert_eq!(&(a * b) * c, a * &(b * c), "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = CohClass::one(&model(Space::X));
        let b = CohClass::one(&model(Space::S));
        assert!(matches!(mul(&a, &b), Err(Error::ModelMismatch { .. })));
        let c = CohClass::one(&Arc::new(RingModel::new(Space::XxC, q(0))));
        let d = CohClass::one(&Arc::new(RingModel::new(Space::XxC, q(14))));
        assert!(c.checked_add(&d).is_err());
    }

    #[test]
    fn exp_and_display() {
        let x = model(Space::X);
        let h = CohClass::basis(&x, "H").unwrap();
        let e = h.scale(q(-1)).exp();
        // 1 − H + 6L − 2P
        assert_eq!(e.to_string(), "1 - H + 6 L - 2 P");
        assert_eq!(CohClass::zero(&x).to_string(), "0");
    }
}
