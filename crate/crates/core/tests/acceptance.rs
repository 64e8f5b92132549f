//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

mod oracle;

use std::time::Instant;

use num_traits::{Signed, Zero};
use v12_core::bbw::{cohomology, spinor_degree, CohomologyTable, HomogBundle};
use v12_core::intersect::{
    euler_pairing, eta_square_solve, frac, mul, q, tautological_ch, universal_ch, ChernData,
    CohClass, Geometry, Space, Q,
};
use v12_core::mukai::{
    commdiag_check, commdiag_routes, euler, gram, kernel, lattice_rank, named_class,
    orthogonal_complement, point, transform, KernelName,
};
use v12_core::rootdata::{tensor_decompose, weyl_dim, Flavor};
use v12_core::sections::{
    canonical_twist, fiber, section_cohomology, section_dim, CODIM_CURVE, CODIM_FOURFOLD,
    CODIM_K3, CODIM_THREEFOLD,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Display>(what: &str, expected: T, got: T) -> Result<(), String> {
    ensure(expected == got, || format!("{what}: expected {expected}, got {got}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn table(pairs: &[(u32, u64)]) -> CohomologyTable {
    CohomologyTable::from_pairs(pairs.iter().copied())
}

fn u() -> HomogBundle {
    HomogBundle::tautological()
}

fn class(geom: &Geometry, space: Space, terms: &[(&str, Q)]) -> Result<CohClass, String> {
    let mut acc = geom.zero(space);
    for (n, v) in terms {
        acc = &acc + &geom.class(space, n).map_err(err)?.scale(*v);
    }
    Ok(acc)
}

fn bbw_base_cases() -> Outcome {
    same("H(O(1))", table(&[(0, 16)]), cohomology(&HomogBundle::line(1)))?;
    same("H(dual(U))", table(&[(0, 10)]), cohomology(&u().dual()))?;
    for k in 1..=7 {
        same(&format!("H(O(-{k}))"), table(&[]), cohomology(&HomogBundle::line(-k)))?;
    }
    same("H(O(-8))", table(&[(10, 1)]), cohomology(&HomogBundle::line(-8)))?;
    Ok("O(1): {0: 16}, dual(U): {0: 10}, O(-1..-7) acyclic, O(-8): {10: 1}".into())
}

fn degree() -> Outcome {
    same("10! * leading coefficient", 12, spinor_degree())?;
    // tenth difference of k -> chi(O(k)) from the signed Weyl product
    let values: Vec<i64> = (0..=10).map(|k| oracle::euler(&[k; 5])).collect();
    let mut diff = 0i64;
    let mut binom = 1i64;
    for i in 0..=10i64 {
        let sign = if (10 - i) % 2 == 0 { 1 } else { -1 };
        diff += sign * binom * values[i as usize];
        binom = binom * (10 - i) / (i + 1);
    }
    same("oracle degree", 12, diff)?;
    Ok("deg = 12 (library and Weyl-product oracle)".into())
}

fn exact_on_x(b: &HomogBundle, expected: CohomologyTable, what: &str) -> Result<(), String> {
    let r = section_cohomology(b, CODIM_THREEFOLD).map_err(err)?;
    ensure(r.is_exact(), || format!("{what}: status {}", r.status))?;
    same(what, expected, r.table)
}

fn exceptional_pair() -> Outcome {
    let end_u = u().dual().tensor(&u()).map_err(err)?;
    exact_on_x(&end_u, table(&[(0, 1)]), "Ext(U,U)")?;
    exact_on_x(&HomogBundle::structure_sheaf(), table(&[(0, 1)]), "Ext(O,O)")?;
    exact_on_x(&u(), table(&[]), "H(X,U)")?;
    Ok("Ext(U,U) = Ext(O,O) = {0: 1}, H(X,U) = {} (exact)".into())
}

fn twisted_tautological() -> Outcome {
    let b = u().tensor(&u().dual().twist(-1)).map_err(err)?;
    exact_on_x(&b, table(&[(3, 1)]), "H(X, U*dual(U)(-1))")?;
    exact_on_x(&u().dual().twist(-1), table(&[]), "H(X, dual(U)(-1))")?;
    Ok("H(X, U*dual(U)(-1)) = {3: 1}, H(X, dual(U)(-1)) = {} (exact)".into())
}

fn splice_pipelines() -> Outcome {
    let cases = [
        ("E1y(-1)", fiber::e1y_minus_h()),
        ("E1y(-2)", fiber::e1y_minus_2h()),
        ("E2y(-1)", fiber::e2y_minus_h()),
        ("E1y*U(-1)", fiber::e1y_u_minus_h()),
        ("E1y*dual(U)(-2)", fiber::e1y_dual_u_minus_2h()),
    ];
    let mut detail = Vec::new();
    for (name, r) in cases {
        let r = r.map_err(|e| format!("{name}: {e}"))?.result;
        ensure(r.is_exact(), || format!("{name}: status {}", r.status))?;
        let t = &r.table;
        match name {
            "E1y(-1)" | "E1y*U(-1)" => same(name, table(&[]), t.clone())?,
            "E1y*dual(U)(-2)" => same(name, table(&[(3, 1)]), t.clone())?,
            // the stated vanishing, plus the full table
            "E1y(-2)" => {
                same("E1y(-2) h1", 0, t.get(1))?;
                same(name, table(&[(3, 5)]), t.clone())?;
            }
            "E2y(-1)" => {
                same("E2y(-1) h0", 0, t.get(0))?;
                same(name, table(&[(2, 5)]), t.clone())?;
            }
            _ => unreachable!(),
        }
        detail.push(format!("{name} {t}"));
    }
    Ok(format!("{} (all exact)", detail.join(", ")))
}

fn universal_cherns() -> Outcome {
    let geom = Geometry::standard();
    let e1 = universal_ch(geom, Space::XxC).map_err(err)?;
    // (7/12) H_X H_C with H_C = 12 pt
    let c2e1 = class(geom, Space::XxC, &[("H*pt", q(7)), ("L*1", q(5)), ("eta", q(1))])?;
    same("c2(E1)", c2e1.to_string(), e1.c2.to_string())?;
    let ch3 = class(geom, Space::XxC, &[("P*1", frac(-1, 2))])?;
    same("ch3(E1)", ch3.to_string(), e1.ch3.to_string())?;

    let e2 = universal_ch(geom, Space::SxSDual).map_err(err)?;
    let algebraic = class(geom, Space::SxSDual, &[("H*H", frac(7, 12)), ("P*1", q(5)), ("1*P", q(5))])?;
    let gamma = e2.c2.coeff("gamma").map_err(err)?;
    let without_gamma = &e2.c2 - &geom.class(Space::SxSDual, "gamma").map_err(err)?.scale(gamma);
    same("algebraic part of c2(E2)", algebraic.to_string(), without_gamma.to_string())?;
    same("gamma coefficient of c2(E2)", q(1), gamma)?;
    Ok(format!("c2(E1) = {}, c2(E2) = {}, ch3(E1) = {}", e1.c2, e2.c2, e1.ch3))
}

fn eta_square() -> Outcome {
    let s = eta_square_solve().map_err(err)?;
    same("|eta^2|", q(14), s.value.abs())?;
    ensure(s.is_positive(), || "eta^2 is negative".into())?;
    // direct pairing at the solved value
    let geom = Geometry::standard();
    let e1 = universal_ch(geom, Space::XxC).map_err(err)?.chern;
    same("chi(E1, E1)", q(12), euler_pairing(geom, &e1, &e1).map_err(err)?)?;
    Ok(format!("eta^2 = {} (sign +), chi(E1, E1) = 12", s.value))
}

fn fiber_euler() -> Outcome {
    let geom = Geometry::standard();
    let e1y = named_class(geom, "E1y").map_err(err)?;
    same("chi_X(E1y, E1y)", Q::zero(), euler(geom, &e1y, &e1y).map_err(err)?)?;
    let phi2 = kernel(geom, KernelName::Phi2).map_err(err)?;
    let e2y = transform(geom, &phi2, &point(geom, Space::SDual).map_err(err)?).map_err(err)?;
    same("chi_S(E2y, E2y)", Q::zero(), euler(geom, &e2y, &e2y).map_err(err)?)?;
    Ok("chi_X(E1y, E1y) = 0, chi_S(E2y, E2y) = 0".into())
}

fn numerical_sod() -> Outcome {
    let geom = Geometry::standard();
    let coll: Vec<(String, ChernData)> = ["U", "O", "phi1(1)", "phi1(pt)"]
        .iter()
        .map(|n| Ok((n.to_string(), named_class(geom, n).map_err(err)?)))
        .collect::<Result<_, String>>()?;
    let r = gram(geom, &coll).map_err(err)?;
    ensure(r.has_unit_diagonal(0..2), || format!("diagonal {:?}", r.matrix))?;
    ensure(r.is_block_upper_triangular(&[1, 1, 2]), || format!("matrix {:?}", r.matrix))?;
    for i in 2..4 {
        for j in 0..2 {
            same(&format!("chi({}, {})", r.labels[i], r.labels[j]), Q::zero(), r.matrix[i][j])?;
        }
    }
    let classes: Vec<ChernData> = coll.into_iter().map(|(_, c)| c).collect();
    same("lattice rank", 4, lattice_rank(&classes))?;
    same("Gram rank", 4, r.rank())?;
    Ok("block upper triangular [1, 1, 2], unit diagonal on (U, O), rank 4".into())
}

fn commdiag() -> Outcome {
    let geom = Geometry::standard();
    let basis = orthogonal_complement(geom).map_err(err)?;
    same("complement rank", 2, lattice_rank(&basis))?;
    same("complement size", 2, basis.len())?;
    for a in &basis {
        let routes = commdiag_routes(geom, a).map_err(err)?;
        ensure(routes.etilde.is_zero(), || format!("E-tilde transform of {} is {}", a.ch(), routes.etilde))?;
        ensure(commdiag_check(geom, a).map_err(err)?, || format!("routes differ on {}", a.ch()))?;
    }
    let names: Vec<String> = basis.iter().map(|a| a.ch().to_string()).collect();
    Ok(format!("holds on basis [{}]", names.join("; ")))
}

fn conics() -> Outcome {
    let geom = Geometry::standard();
    let u_ch = tautological_ch(geom, Space::X).map_err(err)?;
    let r_class = geom.class(Space::X, "L").map_err(err)?.scale(q(2));
    let deg = mul(&u_ch.c(1), &r_class).map_err(err)?.integrate();
    same("deg U|R", q(-4), deg)?;
    let o_r = named_class(geom, "O_R").map_err(err)?;
    same("chi(O_R, O)", q(1), euler(geom, &o_r, &ChernData::new(geom.one(Space::X))).map_err(err)?)?;
    same("chi(O_R, U)", q(1), euler(geom, &o_r, &u_ch).map_err(err)?)?;
    let shriek = kernel(geom, KernelName::Phi1Shriek).map_err(err)?;
    let out = transform(geom, &shriek, &o_r).map_err(err)?;
    let two_pt = point(geom, Space::CDual).map_err(err)?.scale(q(2));
    same("Phi1^!(O_R)", two_pt.ch().to_string(), out.ch().to_string())?;
    Ok(format!("deg = -4, chi = 1, 1, Phi1^!(O_R) = {}", out.ch()))
}

fn serre_bbw(group: &[oracle::WeylElement]) -> Result<usize, String> {
    let mut n = 0;
    for lam in oracle::gl5_weights(3) {
        let b = HomogBundle::irreducible(oracle::weight(&lam)).map_err(err)?;
        for k in -9..=9 {
            let e = b.twist(k);
            let h = cohomology(&e);
            let dual = cohomology(&e.dual().twist(-8));
            same(&format!("Serre on E{lam:?}({k})"), h.reversed(10), dual)?;
            if k == 0 {
                let expected = oracle::bbw(group, &lam)
                    .map(|(d, n)| table(&[(d, n)]))
                    .unwrap_or_default();
                same(&format!("oracle on E{lam:?}"), expected, h)?;
            }
            n += 1;
        }
    }
    Ok(n)
}

fn serre_sections() -> Result<usize, String> {
    let mut n = 0;
    for lam in oracle::gl5_weights(1) {
        let b = HomogBundle::irreducible(oracle::weight(&lam)).map_err(err)?;
        for codim in [CODIM_FOURFOLD, CODIM_THREEFOLD, CODIM_K3, CODIM_CURVE] {
            let d = section_dim(codim);
            for k in -9..=9 {
                let e = b.twist(k);
                let r = section_cohomology(&e, codim).map_err(err)?;
                let s = section_cohomology(&e.dual().twist(canonical_twist(codim)), codim).map_err(err)?;
                let sign = if d % 2 == 0 { 1 } else { -1 };
                same(&format!("Serre euler E{lam:?}({k}) codim {codim}"), r.euler, sign * s.euler)?;
                if r.is_exact() && s.is_exact() {
                    same(&format!("Serre E{lam:?}({k}) codim {codim}"), r.table.reversed(d), s.table)?;
                }
                // Euler characteristic survives whatever the spectral status
                let oracle: i64 = (0..=codim)
                    .map(|p| {
                        let twisted: [i64; 5] = std::array::from_fn(|i| lam[i] + k - p as i64);
                        let sign = if p % 2 == 0 { 1 } else { -1 };
                        sign * binomial(codim as i64, p as i64) * oracle::euler(&twisted)
                    })
                    .sum();
                same(&format!("euler E{lam:?}({k}) codim {codim}"), oracle, r.euler)?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn adjunctions() -> Result<usize, String> {
    let geom = Geometry::standard();
    let basis = |s: Space| -> Vec<ChernData> {
        let m = geom.model(s);
        (0..m.len()).map(|i| ChernData::new(CohClass::basis_at(m, i))).collect()
    };
    let mut n = 0;
    for (fwd, left, right, src, tgt) in [
        (KernelName::Phi1, KernelName::Phi1Left, KernelName::Phi1Shriek, Space::CDual, Space::X),
        (KernelName::Phi2, KernelName::Phi2Left, KernelName::Phi2Shriek, Space::SDual, Space::S),
    ] {
        let f = kernel(geom, fwd).map_err(err)?;
        let l = kernel(geom, left).map_err(err)?;
        let r = kernel(geom, right).map_err(err)?;
        for b in basis(src) {
            let fb = transform(geom, &f, &b).map_err(err)?;
            for a in basis(tgt) {
                let ra = transform(geom, &r, &a).map_err(err)?;
                let la = transform(geom, &l, &a).map_err(err)?;
                same(
                    &format!("{fwd} right adjoint on ({}, {})", b.ch(), a.ch()),
                    euler(geom, &fb, &a).map_err(err)?,
                    euler(geom, &b, &ra).map_err(err)?,
                )?;
                same(
                    &format!("{fwd} left adjoint on ({}, {})", a.ch(), b.ch()),
                    euler(geom, &a, &fb).map_err(err)?,
                    euler(geom, &la, &b).map_err(err)?,
                )?;
                n += 2;
            }
        }
    }
    Ok(n)
}

fn lr_sweep() -> Result<usize, String> {
    let parts = oracle::partitions(3);
    let mut n = 0;
    for lam in &parts {
        for mu in &parts {
            let wl = oracle::weight(&lam.map(|x| 2 * x));
            let wm = oracle::weight(&mu.map(|x| 2 * x));
            let dec = tensor_decompose(&wl, &wm).map_err(err)?;
            let product = weyl_dim(&wl, Flavor::GL5).map_err(err)? * weyl_dim(&wm, Flavor::GL5).map_err(err)?;
            same(&format!("dim {lam:?} x {mu:?}"), product, dec.dimension())?;
            let got: std::collections::BTreeMap<[i64; 5], i64> = dec
                .iter()
                .map(|(w, m)| (oracle::undoubled(w), *m as i64))
                .collect();
            let expected = oracle::klimyk(lam, mu);
            ensure(got == expected, || format!("{lam:?} x {mu:?}: LR {got:?}, Klimyk {expected:?}"))?;
            n += 1;
        }
    }
    // half-integral and negative weights: conservation only
    let weights = oracle::gl5_weights(1);
    for lam in &weights {
        for mu in &weights {
            let (wl, wm) = (oracle::weight(lam), oracle::weight(mu));
            let dec = tensor_decompose(&wl, &wm).map_err(err)?;
            let product = weyl_dim(&wl, Flavor::GL5).map_err(err)? * weyl_dim(&wm, Flavor::GL5).map_err(err)?;
            same(&format!("dim {lam:?} x {mu:?}"), product, dec.dimension())?;
            n += 1;
        }
    }
    Ok(n)
}

fn property_suites() -> Outcome {
    let group = oracle::weyl_group();
    same("Weyl group order", 1920, group.len())?;
    let a = serre_bbw(&group)?;
    let b = serre_sections()?;
    let c = adjunctions()?;
    let d = lr_sweep()?;
    Ok(format!(
        "Serre/BBW oracle {a} cases, sections Serre+Euler {b}, adjunctions {c}, LR/Klimyk {d}"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("BBW base cases", bbw_base_cases),
        ("degree of the spinor tenfold", degree),
        ("exceptional pair cohomology on X", exceptional_pair),
        ("twisted tautological cohomology", twisted_tautological),
        ("splice pipelines for the fiber bundles", splice_pipelines),
        ("Chern classes of the universal bundles", universal_cherns),
        ("eta^2", eta_square),
        ("Euler pairings of the fiber bundles", fiber_euler),
        ("numerical semiorthogonal decomposition", numerical_sod),
        ("commutative square on the orthogonal complement", commdiag),
        ("conics", conics),
        ("exhaustive property sweeps", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{ms} ms]", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {reason} [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
