use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use invsys::limit::LimitInverseSystem;
use invsys::{Exponent, Field, Ideal, Mode, Polynomial, RingContext};
use invsys_cli::format::{parse_ideal_file, parse_limit_file, print_ideal_file, print_limit_json, print_limit_text};
use proptest::prelude::*;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["invsys"];
    argv.extend_from_slice(args);
    let code = invsys_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn socle_of_second_reduction() {
    let (code, out, _) = run(&["socle", "-i", &data("example.ideal"), "--m", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines.len(), 2);
    assert!(out.contains("# type: 2"));
}

#[test]
fn hilbert_profile_of_first_reduction() {
    let (code, out, _) = run(&["hilbert", "-i", &data("example.ideal"), "--m", "1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("(1,2,2,1)\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.ideal", "field Q\nring graded vars x\nideal:\nx + q\n");
    let (code, _, err) = run(&["socle", "-i", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 4"));
    assert_eq!(run(&["socle", "-i", &data("example.ideal")]).0, 1);
    assert_eq!(run(&["socle"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["socle", "-i", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    let plane = write(&dir, "plane.ideal", "field Q\nring graded vars x,y\nideal:\nx*y\n");
    assert_eq!(run(&["rees-check", "-i", &plane, "--g", "x+y", "--lmax", "3"]).0, 0);
    assert_eq!(run(&["rees-check", "-i", &plane, "--g", "x"]).0, 1);
}

#[test]
fn limit_output_is_deterministic_and_reloadable() {
    let example = data("example.ideal");
    let (c1, a, _) = run(&["limit", "-i", &example, "--mmax", "4"]);
    let (c2, b, _) = run(&["limit", "-i", &example, "--mmax", "4", "--jobs", "3"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let h = parse_limit_file(&a).unwrap();
    assert_eq!((h.d(), h.r(), h.s(), h.bound()), (1, 2, 3, 4));
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "h.txt", &a);
    assert_eq!(run(&["verify", "-i", &path]).0, 0);
    let (code, _, _) = run(&["verify", "-i", &path, "--convention", "zblock"]);
    assert_eq!(code, 1);
}

#[test]
fn reconstruct_from_json_contains_original_generators() {
    let dir = tempfile::tempdir().unwrap();
    let hpath = dir.path().join("H.json").display().to_string();
    let (code, _, err) = run(&["limit", "-i", &data("example.ideal"), "--mmax", "7", "--json", "-o", &hpath]);
    assert_eq!(code, 0, "{err}");
    let (code, out, err) = run(&["reconstruct", "-i", &hpath, "--json"]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "reconstruct");
    assert_eq!(v["diagnostics"]["stable"], true);
    let (ctx, original) = parse_ideal_file(&std::fs::read_to_string(data("example.ideal")).unwrap()).unwrap();
    let gens: Vec<Polynomial> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| ctx.parse(s.as_str().unwrap()).unwrap())
        .collect();
    let rebuilt = Ideal::new(ctx, gens).unwrap();
    for g in original.generators() {
        assert!(rebuilt.contains(g).unwrap());
    }
    let (code, text, _) = run(&["reconstruct", "-i", &hpath]);
    assert_eq!(code, 0);
    let (_, reread) = parse_ideal_file(&text).unwrap();
    assert!(reread.same_ideal(&original).unwrap());
}

#[test]
fn json_envelope_shape() {
    let (code, out, _) = run(&["perp", "-i", &data("example.ideal"), "--m", "1", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    for key in ["command", "inputs", "ring", "results", "diagnostics"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["results"].as_array().unwrap().len(), 6);
    assert_eq!(v["ring"]["zvars"][0], "x");
}

#[test]
fn field_and_order_flags() {
    let (code, out, _) = run(&["reduce", "-i", &data("example.ideal"), "--m", "1", "--order", "lex", "--field", "fp:7", "--poly", "y^4 + x"]);
    assert_eq!(code, 0);
    assert!(out.contains("normal_forms"));
    assert_eq!(run(&["socle", "-i", &data("example.ideal"), "--field", "fp:8"]).0, 2);
}

#[test]
fn monoid_socle_command() {
    let (code, out, _) = run(&["monoid-socle", "2,0;0,2"]);
    assert_eq!((code, out.as_str()), (0, "(1,1)\n"));
    assert_eq!(run(&["monoid-socle", "0,0"]).0, 2);
}

fn ring_strategy() -> impl Strategy<Value = Arc<RingContext>> {
    (1usize..=4, any::<bool>(), 0usize..=2, prop_oneof![Just(Field::Rational), Just(Field::Prime(31))]).prop_map(
        |(n, local, d, field)| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let z: Vec<String> = names[n - d.min(n)..].to_vec();
            let mode = if local { Mode::Local } else { Mode::Graded };
            Arc::new(RingContext::new(field, &names, mode, &z).unwrap())
        },
    )
}

fn poly_in(ctx: Arc<RingContext>, terms: Vec<(Vec<u32>, i64, i64)>) -> Polynomial {
    let n = ctx.nvars();
    let f = ctx.field();
    let mut p = ctx.zero();
    for (e, num, den) in terms {
        let e = Exponent::new(e.into_iter().take(n).chain(std::iter::repeat(0)).take(n).collect());
        let c = f.from_int(num).div(&f.from_int(den));
        p = &p + &ctx.monomial(e).scale(&c);
    }
    p
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 4), -9i64..=9, 1i64..=5), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_files_roundtrip(ctx in ring_strategy(), gens in prop::collection::vec(terms(), 0..4)) {
        let gens: Vec<Polynomial> = gens.into_iter().map(|t| poly_in(ctx.clone(), t)).filter(|p| !p.is_zero()).collect();
        let text = print_ideal_file(&ctx, &gens);
        let (ctx2, ideal) = parse_ideal_file(&text).unwrap();
        prop_assert_eq!(&ctx2, &ctx);
        prop_assert_eq!(ideal.generators(), &gens[..]);
    }

    #[test]
    fn limit_files_roundtrip(ctx in ring_strategy(), blocks in prop::collection::vec(prop::collection::vec(terms(), 1..3), 1..4)) {
        let d = ctx.d();
        let mut family = BTreeMap::new();
        for (k, b) in blocks.into_iter().enumerate() {
            let m = vec![k as u32 + 1; d];
            family.insert(m, b.into_iter().map(|t| poly_in(ctx.clone(), t)).collect::<Vec<_>>());
            if d == 0 {
                break;
            }
        }
        let h = LimitInverseSystem::new(ctx, 2, 3, 3, family).unwrap();
        prop_assert_eq!(&parse_limit_file(&print_limit_text(&h)).unwrap(), &h);
        prop_assert_eq!(&parse_limit_file(&print_limit_json(&h)).unwrap(), &h);
    }
}
