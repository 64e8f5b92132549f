//! Pushforward and pullback along the embeddings α: S → X, β: C∨ → S∨, their
//! products, and the projections of the product spaces.
//!
//! Every map is a product f × g of maps between factors (a single space A is
//! read as A × point), so the matrices on product bases are Kronecker
//! products. The class η dies under every such map.

use num_traits::Zero;

use super::chern::{inverse_todd_line, todd};
use super::ring::{q, CohClass, Space, Q};
use super::Geometry;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapId {
    /// S → X
    Alpha,
    /// C∨ → S∨
    Beta,
    /// α × id: S × C∨ → X × C∨
    Lambda1,
    /// id × β: S × C∨ → S × S∨
    Lambda2,
    /// id × β: X × C∨ → X × S∨
    Mu1,
    /// α × id: S × S∨ → X × S∨
    Mu2,
    /// α × β: S × C∨ → X × S∨
    Nu,
    /// Projection of a product onto its first factor.
    First(Space),
    /// Projection of a product onto its second factor.
    Second(Space),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Push,
    Pull,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    Id(Space),
    Alpha,
    Beta,
    ToPoint(Space),
}

impl Factor {
    fn source(self) -> Space {
        match self {
            Factor::Id(s) | Factor::ToPoint(s) => s,
            Factor::Alpha => Space::S,
            Factor::Beta => Space::CDual,
        }
    }

    fn target(self) -> Space {
        match self {
            Factor::Id(s) => s,
            Factor::ToPoint(_) => Space::Point,
            Factor::Alpha => Space::X,
            Factor::Beta => Space::SDual,
        }
    }

    /// Row t: pullback of target basis element t in source coordinates.
    fn pull(self) -> Vec<Vec<Q>> {
        let rows: Vec<Vec<i64>> = match self {
            Factor::Id(s) => {
                let n = basis_len(s);
                (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
            }
            Factor::ToPoint(s) => {
                let n = basis_len(s);
                vec![(0..n).map(|j| i64::from(j == 0)).collect()]
            }
            Factor::Alpha => vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]],
            Factor::Beta => vec![vec![1, 0], vec![0, 12], vec![0, 0]],
        };
        to_q(rows)
    }

    /// Row s: pushforward of source basis element s in target coordinates.
    fn push(self) -> Vec<Vec<Q>> {
        let rows: Vec<Vec<i64>> = match self {
            Factor::Id(_) => return self.pull(),
            Factor::ToPoint(s) => {
                let n = basis_len(s);
                (0..n).map(|i| vec![i64::from(i == n - 1)]).collect()
            }
            Factor::Alpha => vec![vec![0, 1, 0, 0], vec![0, 0, 12, 0], vec![0, 0, 0, 1]],
            Factor::Beta => vec![vec![0, 1, 0], vec![0, 0, 1]],
        };
        to_q(rows)
    }
}

fn to_q(rows: Vec<Vec<i64>>) -> Vec<Vec<Q>> {
    rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()
}

fn basis_len(s: Space) -> usize {
    match s {
        Space::Point => 1,
        Space::X => 4,
        Space::S | Space::SDual => 3,
        Space::CDual => 2,
        _ => unreachable!("factor spaces only"),
    }
}

fn split(s: Space) -> (Space, Space) {
    s.factors().unwrap_or((s, Space::Point))
}

impl MapId {
    fn factors(self) -> Result<(Factor, Factor)> {
        use Factor::*;
        Ok(match self {
            MapId::Alpha => (Alpha, Id(Space::Point)),
            MapId::Beta => (Beta, Id(Space::Point)),
            MapId::Lambda1 => (Alpha, Id(Space::CDual)),
            MapId::Lambda2 => (Id(Space::S), Beta),
            MapId::Mu1 => (Id(Space::X), Beta),
            MapId::Mu2 => (Alpha, Id(Space::SDual)),
            MapId::Nu => (Alpha, Beta),
            MapId::First(p) | MapId::Second(p) => {
                let (a, b) = p.factors().ok_or_else(|| {
                    Error::Precondition(format!("{p} is not a product space"))
                })?;
                if matches!(self, MapId::First(_)) {
                    (Id(a), ToPoint(b))
                } else {
                    (ToPoint(a), Id(b))
                }
            }
        })
    }

    fn space_of(f: Space, g: Space) -> Space {
        if g == Space::Point {
            return f;
        }
        if f == Space::Point {
            return g;
        }
        Space::PRODUCTS
            .into_iter()
            .find(|p| p.factors() == Some((f, g)))
            .expect("known product")
    }

    pub fn source(self) -> Space {
        let (f, g) = self.factors().expect("valid map");
        Self::space_of(f.source(), g.source())
    }

    pub fn target(self) -> Space {
        let (f, g) = self.factors().expect("valid map");
        Self::space_of(f.target(), g.target())
    }

    pub fn name(self) -> String {
        match self {
            MapId::Alpha => "alpha".into(),
            MapId::Beta => "beta".into(),
            MapId::Lambda1 => "lambda1".into(),
            MapId::Lambda2 => "lambda2".into(),
            MapId::Mu1 => "mu1".into(),
            MapId::Mu2 => "mu2".into(),
            MapId::Nu => "nu".into(),
            MapId::First(p) => format!("pr1[{p}]"),
            MapId::Second(p) => format!("pr2[{p}]"),
        }
    }

    /// True for closed embeddings, false for projections.
    pub fn is_embedding(self) -> bool {
        !matches!(self, MapId::First(_) | MapId::Second(_))
    }
}

fn expect_model(geom: &Geometry, space: Space, a: &CohClass) -> Result<()> {
    let m = geom.model(space);
    if **m == **a.model() {
        Ok(())
    } else {
        Err(Error::ModelMismatch {
            expected: m.describe(),
            found: a.model().describe(),
        })
    }
}

/// Class-level pushforward or pullback of `a` along `map`.
pub fn pushpull(geom: &Geometry, map: MapId, dir: Direction, a: &CohClass) -> Result<CohClass> {
    let (f, g) = map.factors()?;
    let (from, to, mf, mg) = match dir {
        Direction::Pull => (map.target(), map.source(), f.pull(), g.pull()),
        Direction::Push => (map.source(), map.target(), f.push(), g.push()),
    };
    expect_model(geom, from, a)?;
    let (fa, fb, ta, tb) = match dir {
        Direction::Pull => (f.target(), g.target(), f.source(), g.source()),
        Direction::Push => (f.source(), g.source(), f.target(), g.target()),
    };
    let (fa, fb, ta, tb) = (basis_len(fa), basis_len(fb), basis_len(ta), basis_len(tb));
    let mut out = vec![Q::zero(); geom.model(to).len()];
    for i in 0..fa {
        for j in 0..fb {
            let c = a.coeffs()[i * fb + j];
            if c.is_zero() {
                continue;
            }
            for k in 0..ta {
                let x = mf[i][k];
                if x.is_zero() {
                    continue;
                }
                for l in 0..tb {
                    out[k * tb + l] += c * x * mg[j][l];
                }
            }
        }
    }
    CohClass::from_coeffs(geom.model(to), out)
}

/// H restricted to C∨, which is 12 points.
fn hyperplane_on_curve(geom: &Geometry) -> Result<CohClass> {
    Ok(geom.class(Space::CDual, "pt")?.scale(q(12)))
}

/// Relative Todd class of `map` on its source: td(N)⁻¹ for an embedding,
/// the Todd class of the fibre for a projection.
fn relative_todd(geom: &Geometry, map: MapId) -> Result<CohClass> {
    let (f, g) = map.factors()?;
    let src = map.source();
    let (sa, sb) = split(src);
    let mut out = geom.one(src);
    for (factor, first) in [(f, true), (g, false)] {
        let piece = match factor {
            Factor::Id(_) => continue,
            Factor::Alpha => inverse_todd_line(&geom.class(Space::S, "H")?),
            Factor::Beta => inverse_todd_line(&hyperplane_on_curve(geom)?),
            Factor::ToPoint(s) => todd(geom, s)?,
        };
        let lifted = if src == piece.model().space() {
            piece
        } else {
            let proj = if first { MapId::First(src) } else { MapId::Second(src) };
            debug_assert!(sa != Space::Point && sb != Space::Point);
            pushpull(geom, proj, Direction::Pull, &piece)?
        };
        out = &out * &lifted;
    }
    Ok(out)
}

/// ch(f_* F) from ch(F) by Grothendieck–Riemann–Roch.
pub fn push_sheaf(geom: &Geometry, map: MapId, ch: &CohClass) -> Result<CohClass> {
    expect_model(geom, map.source(), ch)?;
    let td = relative_todd(geom, map)?;
    pushpull(geom, map, Direction::Push, &(ch * &td))
}
