use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use torelli_cli::format::{parse, write_surface};
use torelli_core::surface::{gen_extremal, gen_random};

const BANANA: &str = "vertex x genus=1\nvertex y genus=1\nedge b1 x y weight=2\nedge b2 x y weight=-2\n";
const THETA: &str = "vertex x genus=0\nvertex y genus=0\nedge c1 x y weight=1\nedge c2 x y weight=-1\nedge c3 x y\n";

fn torelli(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_torelli"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn banana_is_torelli() {
    let o = torelli(&["check-torelli", "-"], BANANA);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "YES\n"));
    let o = torelli(&["--format", "text", "decompose", "-"], BANANA);
    assert_eq!(stdout(&o), "BP b2 b1 -2\n");
    let o = torelli(&["classify", "-"], BANANA);
    assert_eq!(stdout(&o), "b1 b 0\nb2 b 0\n");
}

#[test]
fn theta_names_the_first_c_edge() {
    let o = torelli(&["check-torelli", "-"], THETA);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO c-type edge c1 has nonzero exponent\n");
    assert_eq!(stdout(&torelli(&["classify", "-"], THETA)), "c1 c\nc2 c\nc3 c\n");
    assert_eq!(stdout(&torelli(&["rank", "-"], THETA)), "0\n");
    let o = torelli(&["decompose", "-"], THETA);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn level_m_check() {
    let scaled = THETA.replace("weight=1", "weight=3").replace("weight=-1", "weight=-6");
    let o = torelli(&["check-mod", "3", "-"], &scaled);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "YES\n"));
    let o = torelli(&["check-mod", "2", "-"], &scaled);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(torelli(&["check-mod", "1", "-"], &scaled).status.code(), Some(2));
}

#[test]
fn homology_agrees_on_banana_and_tree() {
    let o = torelli(&["verify-homology", "-"], BANANA);
    assert_eq!(stdout(&o), "torelli YES\nidentity-action YES\nAGREE\n");
    let bad = BANANA.replace("weight=-2", "weight=1");
    let o = torelli(&["verify-homology", "-"], &bad);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "torelli NO\nidentity-action NO\nAGREE\n"));
}

#[test]
fn conjecture_demo_is_identity() {
    let o = torelli(&["conjecture-demo"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("product is identity YES"));
    assert!(out.contains("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"));
}

#[test]
fn input_errors_exit_2() {
    let cases = [
        ("vertex x\nedge e x nowhere\n", "line 2, column 10: unknown vertex `nowhere`"),
        ("# comments only\n", "empty graph"),
        ("vertex x\nvertex x\n", "duplicate vertex identifier `x`"),
        ("vertex x genus=two\n", "malformed integer `two`"),
        ("vertex x\nvertex y\n", "graph is disconnected"),
    ];
    for (text, message) in cases {
        let o = torelli(&["rank", "-"], text);
        assert_eq!(o.status.code(), Some(2), "{text}");
        assert!(String::from_utf8_lossy(&o.stderr).contains(message), "{text}: {:?}", o.stderr);
    }
    let o = torelli(&["bounds", "-"], "vertex x\nvertex y genus=1\nedge e x y\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex x has no genus field"));
    let o = torelli(&["bounds", "-"], "vertex x genus=0\nvertex y genus=1\nedge e x y\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("genus 0 and degree 1"));
    assert_eq!(torelli(&["rank", "/no/such/file"], "").status.code(), Some(2));
}

#[test]
fn extremal_bounds_are_tight() {
    for g in 2..=10 {
        let text = stdout(&torelli(&["gen-extremal", &g.to_string()], ""));
        let o = torelli(&["bounds", "-"], &text);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0));
        assert!(out.contains(&format!("genus {g}\n")));
        assert!(out.contains("vertex-bound HOLDS slack 0\nomega-bound HOLDS slack 0\n"), "{out}");
    }
}

#[test]
fn generators_are_deterministic_and_reparse() {
    for (g, seed) in [(2u64, 0u64), (5, 7), (8, 12345)] {
        let args = ["gen-random", &g.to_string(), &seed.to_string()].map(String::from);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = torelli(&args, "");
        let b = torelli(&args, "");
        assert_eq!(a.stdout, b.stdout);
        let s = parse(&stdout(&a)).unwrap().surface().unwrap();
        assert_eq!(write_surface(&s), stdout(&a));
        assert_eq!(torelli(&["bounds", "-"], &stdout(&a)).status.code(), Some(0));
    }
    assert_eq!(torelli(&["gen-extremal", "1"], "").status.code(), Some(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_models_round_trip(g in 2u64..=8, seed in any::<u64>()) {
        let s = gen_random(g, seed).unwrap();
        let back = parse(&write_surface(&s)).unwrap().surface().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn documents_round_trip_through_display(g in 2u64..=6, seed in any::<u64>(), weights in prop::collection::vec(-1000i64..1000, 16)) {
        let s = gen_random(g, seed).unwrap();
        let mut doc = parse(&write_surface(&s)).unwrap();
        for (e, w) in doc.edges.iter_mut().zip(&weights) {
            e.weight = (*w).into();
        }
        let again = parse(&doc.to_string()).unwrap();
        prop_assert_eq!(again.multitwist().unwrap(), doc.multitwist().unwrap());
        prop_assert_eq!(again.surface().unwrap(), s);
    }
}

#[test]
fn extremal_round_trips() {
    for g in 2..=10 {
        let s = gen_extremal(g).unwrap();
        assert_eq!(parse(&write_surface(&s)).unwrap().surface().unwrap(), s);
    }
}
