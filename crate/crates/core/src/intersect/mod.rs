//! Truncated cohomology rings of X, S, S∨, C∨ and their products, with
//! Chern character arithmetic and the universal bundles E₁ on X × C∨ and E₂ on
//! S × S∨.

mod chern;
pub mod linalg;
mod maps;
mod ring;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

pub use chern::{
    ch_from_chern, chern_classes, eta_square_solve, euler_pairing, extra_square_solve,
    gamma_square_solve, inverse_todd_line, tautological_ch, todd, universal_ch,
    universal_ch_with, ChernData, ExtraSquare, UniversalBundle,
};
pub use maps::{push_sheaf, pushpull, Direction, MapId};
pub use ring::{frac, integrate, mul, q, CohClass, RingModel, Space, Q};

use crate::error::Result;

/// One ring model per space, with chosen values of η² and γ².
#[derive(Debug, Clone)]
pub struct Geometry {
    eta_square: Q,
    gamma_square: Q,
    models: BTreeMap<Space, Arc<RingModel>>,
}

impl Geometry {
    pub fn new(eta_square: Q, gamma_square: Q) -> Self {
        let models = [Space::Point]
            .into_iter()
            .chain(Space::FACTORS)
            .chain(Space::PRODUCTS)
            .map(|s| {
                let sq = match s {
                    Space::XxC => eta_square,
                    Space::SxSDual => gamma_square,
                    _ => Q::from_integer(0),
                };
                (s, Arc::new(RingModel::new(s, sq)))
            })
            .collect();
        Geometry {
            eta_square,
            gamma_square,
            models,
        }
    }

    /// The geometry with η² and γ² fixed by [`eta_square_solve`] and
    /// [`gamma_square_solve`].
    pub fn standard() -> &'static Geometry {
        static STANDARD: OnceLock<Geometry> = OnceLock::new();
        STANDARD.get_or_init(|| {
            let e = eta_square_solve().expect("η² is determined");
            let g = gamma_square_solve().expect("γ² is determined");
            Geometry::new(e.value, g.value)
        })
    }

    pub fn eta_square(&self) -> Q {
        self.eta_square
    }

    pub fn gamma_square(&self) -> Q {
        self.gamma_square
    }

    pub fn model(&self, space: Space) -> &Arc<RingModel> {
        &self.models[&space]
    }

    pub fn one(&self, space: Space) -> CohClass {
        CohClass::one(self.model(space))
    }

    pub fn class(&self, space: Space, name: &str) -> Result<CohClass> {
        CohClass::basis(self.model(space), name)
    }

    pub fn zero(&self, space: Space) -> CohClass {
        CohClass::zero(self.model(space))
    }
}
