use std::sync::Arc;

use invsys::limit::{dual_tower, reconstruct, section_lift, verify_lis, TowerOptions};
use invsys::rees::{socle_product_check, MonoidIdeal};
use invsys::{Exponent, Ideal, Polynomial, RingContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NAMES: [&str; 4] = ["a", "b", "c", "e"];

/// A form with a handful of random terms.
fn random_form(ctx: &RingContext, rng: &mut ChaCha8Rng, degree: u32) -> Polynomial {
    let monomials = Exponent::all_of_degree(ctx.nvars(), degree);
    let mut p = ctx.zero();
    for _ in 0..rng.gen_range(3..=5) {
        let e = monomials[rng.gen_range(0..monomials.len())].clone();
        let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p = &p + &ctx.monomial(e).scale(&ctx.field().from_int(c));
    }
    p
}

/// A graded complete intersection of codimension `n - d` with the last `d`
/// variables as a system of parameters; resamples until the tower accepts.
fn complete_intersection(seed: u64, n: usize, d: usize) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctx = Arc::new(RingContext::graded(&NAMES[..n], &NAMES[n - d..n]));
    loop {
        let gens: Vec<Polynomial> = (0..n - d)
            .map(|_| {
                let deg = rng.gen_range(2..=3);
                random_form(&ctx, &mut rng, deg)
            })
            .collect();
        if gens.iter().any(Polynomial::is_zero) {
            continue;
        }
        let i = Ideal::new(ctx.clone(), gens).unwrap();
        if dual_tower(&i, 1, &TowerOptions::default()).is_ok() {
            return i;
        }
    }
}

fn roundtrip(i: &Ideal, bound: u32) {
    let tower = dual_tower(i, bound, &TowerOptions::default()).unwrap();
    let h = section_lift(&tower).unwrap();
    let report = verify_lis(&h);
    assert!(report.passed(), "{:?}", report.failures());
    let rec = reconstruct(&h).unwrap();
    assert!(rec.stable);
    assert!(rec.ideal.same_ideal(i).unwrap());
    let again = section_lift(&dual_tower(&rec.ideal, bound, &TowerOptions::default()).unwrap()).unwrap();
    assert!(again.equivalent(&h).unwrap());
}

#[test]
fn monomial_curves_in_the_plane() {
    for gens in [["y^2"], ["y^3"]] {
        let ctx = Arc::new(RingContext::graded(&["y", "z"], &["z"]));
        roundtrip(&Ideal::parse(ctx, &gens).unwrap(), 4);
    }
}

#[test]
fn random_complete_intersections() {
    for (seed, n, d) in [(1, 3, 1), (2, 3, 2), (3, 4, 1), (4, 4, 2), (5, 4, 2), (6, 4, 1)] {
        let i = complete_intersection(seed, n, d);
        let bound = i.generators().iter().filter_map(Polynomial::degree).max().unwrap() + 2;
        roundtrip(&i, bound);
        let ctx = i.context().clone();
        let h: Vec<Polynomial> = ctx.zvars().iter().map(|&z| ctx.var(z)).collect();
        let m = MonoidIdeal::diagonal(&vec![2; d]).unwrap();
        assert!(socle_product_check(&i, &h, &m).unwrap().passed);
    }
}

