//! Chern characters, Todd classes and the universal bundles.

use num_traits::{One, Zero};

use super::linalg::{solve, Solution};
use super::maps::{pushpull, Direction, MapId};
use super::ring::{frac, q, CohClass, Space, Q};
use super::Geometry;
use crate::bbw::HomogBundle;
use crate::error::{Error, Result};
use crate::rootdata::{weyl_dim, Flavor};
use crate::sections::{
    canonical_twist, section_cohomology, CODIM_CURVE, CODIM_K3, CODIM_THREEFOLD,
};

/// A Chern character with its rank.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernData {
    ch: CohClass,
}

impl ChernData {
    pub fn new(ch: CohClass) -> Self {
        ChernData { ch }
    }

    pub fn from_chern(rank: Q, c: &[CohClass]) -> Result<Self> {
        Ok(ChernData {
            ch: ch_from_chern(rank, c)?,
        })
    }

    pub fn ch(&self) -> &CohClass {
        &self.ch
    }

    pub fn rank(&self) -> Q {
        self.ch.coeffs()[0]
    }

    /// ch_k, the codimension-k part.
    pub fn ch_part(&self, k: u8) -> CohClass {
        self.ch.part(k)
    }

    /// Total Chern classes c₀, c₁, …, c_dim.
    pub fn chern(&self) -> Vec<CohClass> {
        chern_classes(&self.ch)
    }

    pub fn c(&self, k: usize) -> CohClass {
        self.chern()
            .get(k)
            .cloned()
            .unwrap_or_else(|| CohClass::zero(self.ch.model()))
    }

    pub fn dual(&self) -> Self {
        ChernData { ch: self.ch.dual() }
    }

    /// Tensor with the line bundle of first Chern class `h`.
    pub fn twist(&self, h: &CohClass) -> Result<Self> {
        Ok(ChernData {
            ch: self.ch.checked_mul(&h.exp())?,
        })
    }

    pub fn scale(&self, s: Q) -> Self {
        ChernData { ch: self.ch.scale(s) }
    }
}

fn factorial(k: usize) -> Q {
    (1..=k as i64).fold(Q::one(), |acc, i| acc * q(i))
}

/// ch from rank and Chern classes c₁, c₂, … by Newton's identities.
pub fn ch_from_chern(rank: Q, c: &[CohClass]) -> Result<CohClass> {
    let model = match c.first() {
        Some(x) => x.model().clone(),
        None => return Err(Error::MalformedClass("no Chern classes given".into())),
    };
    let dim = model.dim() as usize;
    let zero = CohClass::zero(&model);
    let e = |i: usize| -> CohClass { c.get(i - 1).cloned().unwrap_or_else(|| zero.clone()) };
    for x in c {
        if **x.model() != *model {
            return Err(Error::ModelMismatch {
                expected: model.describe(),
                found: x.model().describe(),
            });
        }
    }
    // power sums p_k = Σ x_j^k
    let mut p: Vec<CohClass> = vec![CohClass::one(&model).scale(rank)];
    for k in 1..=dim {
        let mut pk = e(k).scale(q(k as i64) * sign(k - 1));
        for i in 1..k {
            pk = &pk + &(&e(i) * &p[k - i]).scale(sign(i - 1));
        }
        p.push(pk);
    }
    let mut ch = p[0].clone();
    for (k, pk) in p.iter().enumerate().skip(1) {
        ch = &ch + &pk.scale(Q::one() / factorial(k));
    }
    Ok(ch)
}

fn sign(k: usize) -> Q {
    if k % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Chern classes [1, c₁, …, c_dim] of a Chern character.
pub fn chern_classes(ch: &CohClass) -> Vec<CohClass> {
    let model = ch.model();
    let dim = model.dim() as usize;
    let p: Vec<CohClass> = (0..=dim)
        .map(|k| ch.part(k as u8).scale(factorial(k)))
        .collect();
    let mut e = vec![CohClass::one(model)];
    for k in 1..=dim {
        let mut acc = CohClass::zero(model);
        for i in 1..=k {
            acc = &acc + &(&e[k - i] * &p[i]).scale(sign(i - 1));
        }
        e.push(acc.scale(frac(1, k as i64)));
    }
    e
}

/// td(N)⁻¹ = (1 − e^{−x})/x for a line bundle with first Chern class x.
pub fn inverse_todd_line(x: &CohClass) -> CohClass {
    let model = x.model();
    let mut out = CohClass::zero(model);
    for k in 0..=model.dim() as usize {
        out = &out + &x.pow(k as u32).scale(sign(k) / factorial(k + 1));
    }
    out
}

fn codim_of(space: Space) -> Option<u32> {
    match space {
        Space::X => Some(CODIM_THREEFOLD),
        Space::S | Space::SDual => Some(CODIM_K3),
        Space::CDual => Some(CODIM_CURVE),
        _ => None,
    }
}

/// The hyperplane class of a factor space (12 points on the curve).
fn hyperplane(geom: &Geometry, space: Space) -> Result<CohClass> {
    match space {
        Space::CDual => Ok(geom.class(space, "pt")?.scale(q(12))),
        _ => geom.class(space, "H"),
    }
}

/// Chern classes [1, c₁, c₂] of the tangent bundle of a factor space (c₁ only
/// on the curve): c₁ from K = O(c − 8), c₂ fixed by χ(O) from sections via
/// Riemann–Roch. On X the top class c₃ is not determined and is omitted.
pub fn tangent_chern(geom: &Geometry, space: Space) -> Result<Vec<CohClass>> {
    let Some(codim) = codim_of(space) else {
        return Ok(vec![geom.one(space)]);
    };
    let h = hyperplane(geom, space)?;
    let c1 = h.scale(q(-canonical_twist(codim)));
    let chi = q(section_cohomology(&HomogBundle::structure_sheaf(), codim)?.euler);
    let mut c = vec![geom.one(space), c1.clone()];
    match geom.model(space).dim() {
        1 => {}
        2 => {
            // ∫td = (c₁² + c₂)/12
            let p = geom.class(space, "P")?;
            let t = chi * q(12) - (&c1 * &c1).integrate();
            c.push(p.scale(t));
        }
        3 => {
            // ∫td = c₁c₂/24 with c₂ = t·L
            let l = geom.class(space, "L")?;
            let t = chi * q(24) / (&c1 * &l).integrate();
            c.push(l.scale(t));
        }
        d => unreachable!("factor of dimension {d}"),
    }
    Ok(c)
}

fn todd_factor(geom: &Geometry, space: Space) -> Result<CohClass> {
    let c = tangent_chern(geom, space)?;
    let one = geom.one(space);
    let zero = geom.zero(space);
    let get = |k: usize| c.get(k).unwrap_or(&zero);
    let (c1, c2) = (get(1), get(2));
    let td2 = &(c1 * c1) + c2;
    let td3 = c1 * c2;
    Ok(&(&(&one + &c1.scale(frac(1, 2))) + &td2.scale(frac(1, 12))) + &td3.scale(frac(1, 24)))
}

/// Todd class of the tangent bundle; multiplicative across products.
pub fn todd(geom: &Geometry, space: Space) -> Result<CohClass> {
    match space.factors() {
        None => todd_factor(geom, space),
        Some((a, b)) => {
            let ta = pushpull(geom, MapId::First(space), Direction::Pull, &todd_factor(geom, a)?)?;
            let tb = pushpull(geom, MapId::Second(space), Direction::Pull, &todd_factor(geom, b)?)?;
            Ok(&ta * &tb)
        }
    }
}

/// χ(a, b) = ∫ ch(a)^∨ · ch(b) · td.
pub fn euler_pairing(geom: &Geometry, a: &ChernData, b: &ChernData) -> Result<Q> {
    let td = todd(geom, a.ch().model().space())?;
    Ok(a.ch().dual().checked_mul(b.ch())?.checked_mul(&td)?.integrate())
}

/// c₁ of a homogeneous bundle as a multiple of H.
fn first_chern_coefficient(b: &HomogBundle) -> Result<Q> {
    // det of an irreducible summand of highest weight w is O(k) with
    // 5k/2 = dim · Σw
    let mut total = Q::zero();
    for (w, mult) in b.summands().iter() {
        let dim = weyl_dim(w, Flavor::GL5)? as i64;
        let sum: i64 = w.doubled().iter().sum();
        total += q(*mult as i64 * dim * sum) / q(5);
    }
    Ok(total)
}

/// ch of the tautological bundle: U₊ on X and S, U₋ on S∨ and C∨.
pub fn tautological_ch(geom: &Geometry, space: Space) -> Result<ChernData> {
    let codim = codim_of(space).ok_or_else(|| {
        Error::Precondition(format!("no tautological bundle on {space}"))
    })?;
    let u = HomogBundle::tautological();
    let m = geom.model(space);
    let rank = q(u.rank() as i64);
    let h = hyperplane(geom, space)?;
    let c1 = h.scale(first_chern_coefficient(&u)?);
    let top = CohClass::basis_at(m, m.top_index());
    let td = todd(geom, space)?;

    // ch = rank + c₁ + t·[top] below the top degree on the curve, ch₂ = 0 on X
    let base = if m.dim() >= 2 { &geom.one(space).scale(rank) + &c1 } else { geom.one(space).scale(rank) };
    let chi = q(section_cohomology(&u, codim)?.euler);
    let t = chi - (&base * &td).integrate();
    let ch = &base + &top.scale(t);

    match space {
        Space::X => {
            let check = ChernData::new(ch.clone())
                .dual()
                .twist(&h.scale(-Q::one()))?;
            let expected = q(section_cohomology(&u.dual().twist(-1), codim)?.euler);
            let found = (check.ch() * &td).integrate();
            if found != expected {
                return Err(Error::NoSolution(format!(
                    "χ(U*(−1)) = {found} but sections give {expected}"
                )));
            }
        }
        Space::CDual => {
            if ch != &geom.one(space).scale(rank) + &c1 {
                return Err(Error::NoSolution(format!("ch(U) = {ch} on the curve disagrees with c₁")));
            }
        }
        _ => {}
    }
    Ok(ChernData::new(ch))
}

/// E₁ on X × C∨ or E₂ on S × S∨, with the solved ansatz coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct UniversalBundle {
    pub product: Space,
    pub chern: ChernData,
    pub c1: CohClass,
    pub c2: CohClass,
    pub ch3: CohClass,
    /// (name, value) of the unknowns in the c₂ ansatz.
    pub coefficients: Vec<(String, Q)>,
}

/// ch(E) from ch(U₊*) − ch(U₋) = 2ch₁(E) + 2ch₃(E) and the rank-2 relation
/// 3c₁c₂ = ch₁³ − 6ch₃.
pub fn universal_ch(geom: &Geometry, product: Space) -> Result<UniversalBundle> {
    universal_ch_with(geom, product, true)
}

/// As [`universal_ch`]; with `with_extra = false` the Künneth class outside
/// the algebraic basis (η or γ) is left out of c₂.
pub fn universal_ch_with(geom: &Geometry, product: Space, with_extra: bool) -> Result<UniversalBundle> {
    let (a, b) = match product {
        Space::XxC | Space::SxSDual => product.factors().expect("product"),
        _ => {
            return Err(Error::Precondition(format!(
                "no universal bundle on {product}"
            )))
        }
    };
    let pull1 = |c: &CohClass| pushpull(geom, MapId::First(product), Direction::Pull, c);
    let pull2 = |c: &CohClass| pushpull(geom, MapId::Second(product), Direction::Pull, c);

    let d = &pull1(tautological_ch(geom, a)?.dual().ch())? - &pull2(tautological_ch(geom, b)?.ch())?;
    for k in [0u8, 2, 4] {
        if !d.part(k).is_zero() {
            return Err(Error::NoSolution(format!(
                "ch(U₊*) − ch(U₋) has a nonzero even part in codimension {k}"
            )));
        }
    }
    let ch1 = d.part(1).scale(frac(1, 2));
    let ch3 = d.part(3).scale(frac(1, 2));
    let c1 = ch1.clone();

    let ha = pull1(&hyperplane(geom, a)?)?;
    let hb = pull2(&hyperplane(geom, b)?)?;
    let fiber_name = if a == Space::X { "L" } else { "P" };
    let fa = pull1(&geom.class(a, fiber_name)?)?;
    let mut unknowns: Vec<(String, CohClass)> = vec![
        ("a".into(), &ha * &hb),
        ("b".into(), fa),
    ];
    if product == Space::SxSDual {
        unknowns.push(("c".into(), pull2(&geom.class(b, "P")?)?));
    }
    let fixed = match geom.model(product).extra_name() {
        Some(name) if with_extra => geom.class(product, name)?,
        _ => geom.zero(product),
    };

    // 3c₁c₂ = ch₁³ − 6ch₃ in codimension 3
    let rhs = &(&ch1 * &(&ch1 * &ch1)) - &ch3.scale(q(6));
    let rhs = &rhs - &(&c1 * &fixed).scale(q(3));
    let m = geom.model(product);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut vals: Vec<Q> = Vec::new();
    let lhs: Vec<CohClass> = unknowns.iter().map(|(_, u)| (&c1 * u).scale(q(3))).collect();
    for i in (0..m.len()).filter(|&i| m.codim(i) == 3) {
        rows.push(lhs.iter().map(|l| l.coeffs()[i]).collect());
        vals.push(rhs.coeffs()[i]);
    }

    if product == Space::SxSDual {
        // λ₁*c₂(E₁) = λ₂*c₂(E₂) on S × C∨
        let e1 = universal_ch_with(geom, Space::XxC, with_extra)?;
        let target = pushpull(geom, MapId::Lambda1, Direction::Pull, &e1.c2)?;
        let pulled: Vec<CohClass> = unknowns
            .iter()
            .map(|(_, u)| pushpull(geom, MapId::Lambda2, Direction::Pull, u))
            .collect::<Result<_>>()?;
        let sc = geom.model(Space::SxC);
        for i in (0..sc.len()).filter(|&i| sc.codim(i) == 2) {
            rows.push(pulled.iter().map(|p| p.coeffs()[i]).collect());
            vals.push(target.coeffs()[i]);
        }
    }

    let x = match solve(&rows, &vals) {
        Solution::Unique(x) => x,
        Solution::Underdetermined(free) => {
            return Err(Error::Underdetermined(format!(
                "c₂ ansatz on {product} leaves {free} free coefficient(s)"
            )))
        }
        Solution::Inconsistent => {
            return Err(Error::NoSolution(format!("c₂ ansatz on {product} is inconsistent")))
        }
    };
    let mut c2 = fixed;
    for ((_, u), v) in unknowns.iter().zip(&x) {
        c2 = &c2 + &u.scale(*v);
    }
    let ch = ch_from_chern(q(2), &[c1.clone(), c2.clone()])?;
    if ch.part(1) != ch1 || ch.part(3) != ch3 {
        return Err(Error::NoSolution(format!(
            "solved c₂ = {c2} does not reproduce ch₃ = {ch3}"
        )));
    }
    Ok(UniversalBundle {
        product,
        chern: ChernData::new(ch),
        c1,
        c2,
        ch3,
        coefficients: unknowns.into_iter().map(|(n, _)| n).zip(x).collect(),
    })
}

/// The solved square of the extra Künneth class (η on X × C∨, γ on S × S∨),
/// as a multiple of the point class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtraSquare {
    pub product: Space,
    pub value: Q,
    /// χ(E, E) imposed by the relative Ext sheaves over the moduli space.
    pub euler_target: Q,
    /// χ(E, E) as an affine function of the square: constant and slope.
    pub euler_constant: Q,
    pub euler_slope: Q,
}

impl ExtraSquare {
    pub fn is_positive(&self) -> bool {
        self.value > Q::zero()
    }
}

fn geometry_with(product: Space, value: Q) -> Geometry {
    match product {
        Space::XxC => Geometry::new(value, Q::zero()),
        _ => Geometry::new(Q::zero(), value),
    }
}

fn self_pairing(product: Space, value: Q, with_extra: bool) -> Result<Q> {
    let geom = geometry_with(product, value);
    let u = universal_ch_with(&geom, product, with_extra)?;
    euler_pairing(&geom, &u.chern, &u.chern)
}

/// χ(M, O) and χ(M, T_M) on a factor space.
fn structure_and_tangent_euler(geom: &Geometry, m: Space) -> Result<(Q, Q)> {
    let td = todd(geom, m)?;
    let c = tangent_chern(geom, m)?;
    let dim = q(geom.model(m).dim() as i64);
    let ch_t = ch_from_chern(dim, &c[1..])?;
    Ok((td.integrate(), (&ch_t * &td).integrate()))
}

/// χ(E, E) for the universal family over the moduli space M (the second
/// factor): Ext⁰ = O_M and Ext¹ = T_M on the curve, plus Ext² = O_M over the
/// K3 surface where the fibres have trivial canonical class.
fn relative_ext_euler(product: Space) -> Result<Q> {
    let geom = geometry_with(product, Q::zero());
    let (_, m) = product.factors().expect("product");
    let (o, t) = structure_and_tangent_euler(&geom, m)?;
    Ok(match product {
        Space::XxC => o - t,
        _ => o - t + o,
    })
}

/// Solves χ(E, E) = Σ (−1)^p χ(M, Ext^p) for the square of the extra class.
pub fn extra_square_solve(product: Space, with_extra: bool) -> Result<ExtraSquare> {
    if !matches!(product, Space::XxC | Space::SxSDual) {
        return Err(Error::Precondition(format!("no universal bundle on {product}")));
    }
    let target = relative_ext_euler(product)?;
    let at0 = self_pairing(product, Q::zero(), with_extra)?;
    let slope = self_pairing(product, Q::one(), with_extra)? - at0;
    if slope.is_zero() {
        return Err(Error::NoSolution(format!(
            "χ(E, E) = {at0} on {product} does not depend on the extra class, target {target}"
        )));
    }
    let value = (target - at0) / slope;
    let check = self_pairing(product, value, with_extra)?;
    if check != target {
        return Err(Error::NoSolution(format!(
            "χ(E, E) is not affine in the extra square: {check} at {value}"
        )));
    }
    Ok(ExtraSquare {
        product,
        value,
        euler_target: target,
        euler_constant: at0,
        euler_slope: slope,
    })
}

/// η² from χ_{X×C∨}(E₁, E₁) = 2g − 2.
pub fn eta_square_solve() -> Result<ExtraSquare> {
    extra_square_solve(Space::XxC, true)
}

/// γ² from χ_{S×S∨}(E₂, E₂) = 2χ(O) − χ(T) = 24.
pub fn gamma_square_solve() -> Result<ExtraSquare> {
    extra_square_solve(Space::SxSDual, true)
}
