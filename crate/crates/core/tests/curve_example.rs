use std::sync::Arc;

use invsys::duality::{perp_ideal, DualModule};
use invsys::limit::{dual_tower, reconstruct, section_lift, verify_lis, verify_lis_with, DegreeConvention, TowerOptions};
use invsys::{Ideal, RingContext};

const GENS: [&str; 5] = ["w - x*y", "y*z - x^3", "x*z^2 - y^4", "z^3 - x^2*y^3", "y^5 - x^4*z"];

const PUBLISHED: [[&str; 2]; 7] = [
    ["Y^3", "Z^2"],
    ["X*Y^3+Y^2*W", "X*Z^2+Y^4"],
    ["X^2*Y^3+X*Y^2*W+Y*W^2+Z^3", "X^2*Z^2+X*Y^4+Y^3*W"],
    [
        "X^3*Y^3+X^2*Y^2*W+X*Y*W^2+X*Z^3+Y^4*Z+W^3",
        "X^3*Z^2+X^2*Y^4+X*Y^3*W+Y*Z^3+Y^2*W^2",
    ],
    [
        "X^4*Y^3+X^3*Y^2*W+X^2*Y*W^2+X^2*Z^3+X*Y^4*Z+X*W^3+Y^3*Z*W",
        "X^4*Z^2+X^3*Y^4+X^2*Y^3*W+X*Y*Z^3+X*Y^2*W^2+Z^3*W+Y*W^3+Y^5*Z",
    ],
    [
        "X^5*Y^3+X^3*Z^3+X^4*Y^2*W+X^3*Y*W^2+X^2*Y^4*Z+X^2*W^3+X*Y^3*Z*W+Y^2*Z*W^2+Y*Z^4",
        "X^5*Z^2+X^4*Y^4+X^3*Y^3*W+X^2*Y*Z^3+X^2*Y^2*W^2+X*Z^3*W+X*Y*W^3+X*Y^5*Z+Y^4*Z*W+W^4",
    ],
    [
        "X^6*Y^3+X^5*Y^2*W+X^4*Z^3+X^4*Y*W^2+X^3*Y^4*Z+X^3*W^3+X^2*Y^3*Z*W+X*Y^2*Z*W^2+X*Y*Z^4+Z^4*W+Y*Z*W^3+Y^5*Z^2",
        "X^6*Z^2+X^5*Y^4+X^4*Y^3*W+X^3*Y*Z^3+X^3*Y^2*W^2+X^2*Z^3*W+X^2*Y*W^3+X^2*Y^5*Z+X*Y^4*Z*W+X*W^4+Y^2*Z^4+Y^3*Z*W^2",
    ],
];

fn curve() -> Ideal {
    let ctx = Arc::new(RingContext::local(&["x", "y", "z", "w"], &["x"]));
    Ideal::parse(ctx, &GENS).unwrap()
}

fn published(ctx: &Arc<RingContext>, m: usize) -> DualModule {
    let h: Vec<_> = PUBLISHED[m - 1].iter().map(|s| ctx.parse_dual(s).unwrap()).collect();
    DualModule::closure(ctx.clone(), &h).unwrap()
}

#[test]
fn tower_lengths_and_socles() {
    let i = curve();
    let ctx = i.context().clone();
    let tower = dual_tower(&i, 7, &TowerOptions::default()).unwrap();
    for m in 1..=7u32 {
        assert_eq!(tower.get(&[m]).unwrap().dim(), 6 * m as usize);
    }
    assert!(tower.surjectivity_failure().is_none());
    let expected = [["z^2", "y^3"], ["x*z^2", "x*y^3"], ["x^2*z^2", "x^2*y^3"]];
    for (k, soc) in expected.iter().enumerate() {
        let m = k as u32 + 1;
        let im = i.add_generators([ctx.parse(&format!("x^{m}")).unwrap()]).unwrap();
        let computed = im.socle_basis().unwrap();
        assert_eq!(computed.len(), 2);
        let expected_ideal = im.add_generators(soc.iter().map(|s| ctx.parse(s).unwrap())).unwrap();
        let computed_ideal = im.add_generators(computed).unwrap();
        assert!(expected_ideal.same_ideal(&computed_ideal).unwrap(), "m={m}");
    }
}

#[test]
fn lifted_system_matches_published_closures() {
    let i = curve();
    let ctx = i.context().clone();
    let tower = dual_tower(&i, 7, &TowerOptions::default()).unwrap();
    let h = section_lift(&tower).unwrap();
    assert_eq!((h.d(), h.r(), h.s()), (1, 2, 3));
    for m in 1..=7usize {
        let ours = h.module(&[m as u32]).unwrap();
        assert_eq!(ours, published(&ctx, m), "m={m}");
        assert_eq!(&ours, tower.get(&[m as u32]).unwrap());
    }
    let report = verify_lis(&h);
    assert!(report.passed(), "{:?}", report.failures());
    assert!(!verify_lis_with(&h, DegreeConvention::ZBlock).passed());
}

#[test]
fn published_perps_are_the_reductions() {
    let i = curve();
    let ctx = i.context().clone();
    for m in 1..=4usize {
        let im = i.add_generators([ctx.parse(&format!("x^{m}")).unwrap()]).unwrap();
        assert_eq!(perp_ideal(&im).unwrap(), published(&ctx, m));
    }
}

#[test]
fn reconstruction_recovers_the_curve() {
    let i = curve();
    let tower = dual_tower(&i, 7, &TowerOptions { jobs: 3, ..Default::default() }).unwrap();
    let h = section_lift(&tower).unwrap();
    let rec = reconstruct(&h).unwrap();
    assert!(rec.stable);
    let again = dual_tower(&rec.ideal, 7, &TowerOptions::default()).unwrap();
    for m in 1..=7u32 {
        assert_eq!(again.get(&[m]), tower.get(&[m]), "m={m}");
    }
    assert!(rec.ideal.same_ideal(&i).unwrap());
}
