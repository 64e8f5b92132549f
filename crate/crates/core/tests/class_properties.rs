use proptest::prelude::*;
use v12_core::intersect::{
    ch_from_chern, chern_classes, euler_pairing, frac, pushpull, q, ChernData, CohClass,
    Direction, Geometry, MapId, Space, Q,
};
use v12_core::mukai::{euler, kernel, transform, KernelName};

fn coeffs(len: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d)), len)
}

fn class(space: Space) -> impl Strategy<Value = CohClass> {
    let model = Geometry::standard().model(space).clone();
    coeffs(model.len()).prop_map(move |c| CohClass::from_coeffs(&model, c).unwrap())
}

fn chern(space: Space) -> impl Strategy<Value = ChernData> {
    class(space).prop_map(ChernData::new)
}

const MAPS: [MapId; 6] = [
    MapId::Alpha,
    MapId::Beta,
    MapId::Lambda1,
    MapId::Lambda2,
    MapId::Mu1,
    MapId::Mu2,
];

fn map_and_classes() -> impl Strategy<Value = (MapId, CohClass, CohClass)> {
    prop::sample::select(MAPS.to_vec())
        .prop_flat_map(|m| (Just(m), class(m.source()), class(m.target())))
}

/// ch(ω) for the canonical bundle of a single factor.
fn canonical(space: Space) -> CohClass {
    let geom = Geometry::standard();
    let h = match space {
        Space::X => geom.class(space, "H").unwrap().scale(q(-1)),
        Space::S | Space::SDual => geom.zero(space),
        Space::CDual => geom.class(space, "pt").unwrap().scale(q(12)),
        _ => unreachable!(),
    };
    h.exp()
}

fn dim_sign(space: Space) -> Q {
    if space.dim() % 2 == 0 {
        q(1)
    } else {
        q(-1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn newton_round_trip(c in class(Space::X)) {
        let cs = chern_classes(&c);
        prop_assert_eq!(ch_from_chern(c.coeff("1").unwrap(), &cs[1..]).unwrap(), c);
    }

    #[test]
    fn projection_formula((m, a, b) in map_and_classes()) {
        let geom = Geometry::standard();
        let pulled = pushpull(geom, m, Direction::Pull, &b).unwrap();
        let lhs = pushpull(geom, m, Direction::Push, &(&a * &pulled)).unwrap();
        let rhs = &pushpull(geom, m, Direction::Push, &a).unwrap() * &b;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_is_a_ring_map((m, b, c) in prop::sample::select(MAPS.to_vec())
        .prop_flat_map(|m| (Just(m), class(m.target()), class(m.target()))))
    {
        let geom = Geometry::standard();
        let pull = |x: &CohClass| pushpull(geom, m, Direction::Pull, x).unwrap();
        prop_assert_eq!(pull(&(&b * &c)), &pull(&b) * &pull(&c));
        prop_assert_eq!(pull(&geom.one(m.target())), geom.one(m.source()));
    }

    #[test]
    fn euler_pairing_serre_duality((space, a, b) in prop::sample::select(vec![Space::X, Space::S, Space::CDual])
        .prop_flat_map(|s| (Just(s), chern(s), chern(s))))
    {
        let geom = Geometry::standard();
        let twisted = ChernData::new(a.ch() * &canonical(space));
        prop_assert_eq!(
            euler_pairing(geom, &a, &b).unwrap(),
            dim_sign(space) * euler_pairing(geom, &b, &twisted).unwrap()
        );
    }

    #[test]
    fn phi1_adjunctions(b in chern(Space::CDual), a in chern(Space::X)) {
        let geom = Geometry::standard();
        let fb = transform(geom, &kernel(geom, KernelName::Phi1).unwrap(), &b).unwrap();
        let ra = transform(geom, &kernel(geom, KernelName::Phi1Shriek).unwrap(), &a).unwrap();
        let la = transform(geom, &kernel(geom, KernelName::Phi1Left).unwrap(), &a).unwrap();
        prop_assert_eq!(euler(geom, &fb, &a).unwrap(), euler(geom, &b, &ra).unwrap());
        prop_assert_eq!(euler(geom, &a, &fb).unwrap(), euler(geom, &la, &b).unwrap());
    }

    #[test]
    fn phi2_adjunctions(b in chern(Space::SDual), a in chern(Space::S)) {
        let geom = Geometry::standard();
        let fb = transform(geom, &kernel(geom, KernelName::Phi2).unwrap(), &b).unwrap();
        let ra = transform(geom, &kernel(geom, KernelName::Phi2Shriek).unwrap(), &a).unwrap();
        let la = transform(geom, &kernel(geom, KernelName::Phi2Left).unwrap(), &a).unwrap();
        prop_assert_eq!(euler(geom, &fb, &a).unwrap(), euler(geom, &b, &ra).unwrap());
        prop_assert_eq!(euler(geom, &a, &fb).unwrap(), euler(geom, &la, &b).unwrap());
    }

    #[test]
    fn dual_is_an_involution(c in class(Space::XxC)) {
        prop_assert_eq!(c.dual().dual(), c.clone());
        prop_assert_eq!((&c * &c).dual(), &c.dual() * &c.dual());
    }
}
