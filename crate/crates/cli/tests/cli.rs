//! End-to-end checks of the `tcheck` binary over stdin/stdout.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tcheck_core::{generate, serialize, GeneratorSpec, JourneySemantics};

fn tcheck(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tcheck"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn flag(s: JourneySemantics) -> &'static str {
    match s {
        JourneySemantics::Strict => "--strict",
        JourneySemantics::NonStrict => "--non-strict",
    }
}

fn random_teg(rng: &mut ChaCha8Rng) -> (usize, String) {
    let n = rng.gen_range(1..=9);
    let k = rng.gen_range(0..=10);
    let p = [0.1, 0.2, 0.35][rng.gen_range(0..3)];
    let g = generate(&GeneratorSpec::bernoulli(n, k, p, rng.gen())).unwrap();
    (n, serialize(&g))
}

#[test]
fn connected_agrees_with_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (_, teg) = random_teg(&mut rng);
        for s in JourneySemantics::ALL {
            let engine = tcheck(&["connected", "--in", "-", flag(s)], teg.as_bytes());
            let oracle = tcheck(&["connected", "--in", "-", flag(s), "--oracle"], teg.as_bytes());
            assert_eq!(engine.status.code(), oracle.status.code(), "{teg}");
            assert_eq!(engine.stdout, oracle.stdout, "{teg}");
            assert!(matches!(engine.status.code(), Some(0 | 1)));
        }
    }
}

#[test]
fn queries_on_closure_file_match_queries_on_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let (n, teg) = random_teg(&mut rng);
        let s = JourneySemantics::ALL[rng.gen_range(0..2)];
        let closed = tcheck(&["close", "--in", "-", "--out", "-", flag(s)], teg.as_bytes());
        assert!(closed.status.success());
        for _ in 0..3 {
            let u = rng.gen_range(0..n).to_string();
            let v = rng.gen_range(0..n).to_string();
            let direct = tcheck(&["query", "--in", "-", &u, &v, flag(s)], teg.as_bytes());
            let via_tc = tcheck(&["query", "--in", "-", &u, &v], &closed.stdout);
            assert!(direct.status.success());
            assert_eq!(direct.stdout, via_tc.stdout, "{u} -> {v} in {teg}");
        }
    }
}

#[test]
fn generate_is_deterministic() {
    let args = ["generate", "--n", "30", "--k", "5", "--mu", "4", "--seed", "9", "--out", "-"];
    let a = tcheck(&args, b"");
    let b = tcheck(&args, b"");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with(b"teg 30 5\n"));
}
