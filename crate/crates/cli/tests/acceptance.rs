//! Acceptance gate: one test per criterion, each printing a single
//! `criterion N: PASS|FAIL` line (visible with `--nocapture`).

use std::process::Command;
use std::time::Instant;

use delsch_core::harness::{
    run, sieve_primes, CheckSelection, EngineChoice, ParamPolicy, RunConfig,
};
use delsch_core::{identities, quotients, report, sequences};
use delsch_core::{Engine, PrimePowerModulus, SequenceKind};

fn criterion(n: u32, description: &str, pass: bool) {
    println!(
        "criterion {}: {} - {}",
        n,
        if pass { "PASS" } else { "FAIL" },
        description
    );
    assert!(pass, "criterion {n} failed: {description}");
}

fn config(p_min: u64, p_max: u64, checks: CheckSelection) -> RunConfig {
    let mut c = RunConfig::new(p_min, p_max);
    c.checks = checks;
    c
}

/// Every proved check over every applicable odd prime up to 1000: exhaustive
/// parameters through 200, then 32 seeded x samples per prime above that.
#[test]
fn criterion_1_proved_checks_to_1000() {
    let start = Instant::now();
    let low = run(&config(3, 200, CheckSelection::Theorems)).unwrap();
    let mut high_config = config(201, 1000, CheckSelection::Theorems);
    high_config.x_policy = ParamPolicy::Sample { count: 32, seed: 2024 };
    let high = run(&high_config).unwrap();
    let pass = low.exit_code() == 0
        && high.exit_code() == 0
        && low.summary.primes + high.summary.primes == 167
        && start.elapsed().as_secs() < 600;
    criterion(
        1,
        "proved checks hold for all odd p <= 1000 (exhaustive through 200)",
        pass,
    );
}

/// Conjecture checks to 500, the fourth-power check capped at 300. A failure
/// only counts if it reproduces under the second engine.
#[test]
fn criterion_2_conjectures_to_500() {
    let ids: Vec<String> = [
        "conj1.1-eq1.9",
        "conj1.1-eq1.10",
        "conj1.1-d",
        "conj1.1-e",
        "conj1.2-A",
        "conj1.2-B",
        "conj1.2-C",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let wide = run(&config(3, 500, CheckSelection::Ids(ids.clone()))).unwrap();
    let deep = run(&config(3, 300, CheckSelection::Ids(vec!["conj1.1-c".into()]))).unwrap();

    let mut confirmed_failures = 0usize;
    for rep in [&wide, &deep] {
        for f in rep.failures() {
            // a counterexample must survive re-evaluation with the other engine
            let mut rerun = config(f.p, f.p, CheckSelection::Ids(vec![f.check_id.into()]));
            rerun.engine = EngineChoice::Holonomic;
            let again = run(&rerun).unwrap();
            if again.failures().any(|g| g.params == f.params && g.lhs == f.lhs) {
                confirmed_failures += 1;
            }
        }
    }
    criterion(
        2,
        "conjecture checks hold for all applicable p <= 500 (quartic modulus <= 300)",
        confirmed_failures == 0 && wide.exit_code() == 0 && deep.exit_code() == 0,
    );
}

/// Ten hand-verified residues must round-trip bit-exactly through the full
/// pipeline and the JSONL encoder.
#[test]
fn criterion_3_golden_records() {
    let golden = [
        ("thm1.1-eq1.1", 5, r#"{"schema":1,"p":5,"check":"thm1.1-eq1.1","params":{},"modulus":5,"lhs":3,"rhs":3,"pass":true,"status":"theorem","engine":"dp","us":0}"#),
        ("thm1.1-eq1.2", 3, r#"{"schema":1,"p":3,"check":"thm1.1-eq1.2","params":{},"modulus":3,"lhs":2,"rhs":2,"pass":true,"status":"theorem","engine":"dp","us":0}"#),
        ("thm1.2-eq1.11", 5, r#"{"schema":1,"p":5,"check":"thm1.2-eq1.11","params":{"m":2},"modulus":5,"lhs":4,"rhs":4,"pass":true,"status":"theorem","engine":"dp","us":0}"#),
        ("lem2.2-eq2.2", 3, r#"{"schema":1,"p":3,"check":"lem2.2-eq2.2","params":{},"modulus":9,"lhs":8,"rhs":8,"pass":true,"status":"lemma","engine":"dp","us":0}"#),
        ("rem1.1-a", 5, r#"{"schema":1,"p":5,"check":"rem1.1-a","params":{},"modulus":125,"lhs":26,"rhs":26,"pass":true,"status":"remark","engine":"dp","us":0}"#),
        ("rem1.1-c", 5, r#"{"schema":1,"p":5,"check":"rem1.1-c","params":{},"modulus":125,"lhs":75,"rhs":75,"pass":true,"status":"remark","engine":"dp","us":0}"#),
        ("conj1.1-eq1.10", 5, r#"{"schema":1,"p":5,"check":"conj1.1-eq1.10","params":{},"modulus":25,"lhs":17,"rhs":17,"pass":true,"status":"conjecture","engine":"dp","us":0}"#),
        ("conj1.1-c", 5, r#"{"schema":1,"p":5,"check":"conj1.1-c","params":{},"modulus":625,"lhs":360,"rhs":360,"pass":true,"status":"conjecture","engine":"dp","us":0}"#),
        ("conj1.1-d", 13, r#"{"schema":1,"p":13,"check":"conj1.1-d","params":{},"modulus":13,"lhs":10,"rhs":10,"pass":true,"status":"conjecture","engine":"dp","us":0}"#),
        ("conj1.2-B", 5, r#"{"schema":1,"p":5,"check":"conj1.2-B","params":{"sum":"x=1/2"},"modulus":25,"lhs":23,"rhs":23,"pass":true,"status":"conjecture","engine":"dp","us":0}"#),
    ];
    let mut all = true;
    for (id, p, expected) in golden {
        let rep = run(&config(p, p, CheckSelection::Ids(vec![id.into()]))).unwrap();
        let found = rep.records.iter().map(report::jsonl_line).any(|l| l == expected);
        if !found {
            eprintln!("golden mismatch for {id} p={p}:");
            for r in &rep.records {
                eprintln!("  got {}", report::jsonl_line(r));
            }
            all = false;
        }
    }
    criterion(3, "ten golden records reproduce bit-exactly", all);
}

/// The O(n^2) lattice recurrences and the three-term holonomic recurrence
/// must build identical tables for both sequence families they share.
#[test]
fn criterion_4_engine_equivalence() {
    let mut pass = true;
    for p in sieve_primes(3, 257) {
        for e in [1u32, 2] {
            let md = PrimePowerModulus::new(p, e).unwrap();
            let n_max = (p - 1) as usize;
            let mut kinds = vec![SequenceKind::Delannoy];
            for x in [0i64, 1, 2, 3, p as i64 - 1] {
                kinds.push(SequenceKind::DelannoyX(md.residue(x)));
            }
            for (num, den) in [(-1i64, 4i64), (1, 2), (1, 8)] {
                kinds.push(SequenceKind::DelannoyX(
                    md.residue_of_rational(num, den).unwrap(),
                ));
            }
            for kind in kinds {
                let dp = sequences::build(kind, n_max, md, Engine::Dp).unwrap();
                let ho = sequences::build(kind, n_max, md, Engine::Holonomic).unwrap();
                if dp.values() != ho.values() {
                    eprintln!("engine divergence: p={p} e={e} kind={kind:?}");
                    pass = false;
                }
            }
        }
    }
    criterion(4, "dp and holonomic tables agree for p <= 257, e in {1,2}", pass);
}

/// The binomial-sum identities behind the congruences, checked over exact
/// rationals.
#[test]
fn criterion_5_exact_identities() {
    let start = Instant::now();
    let alt = (0..=300).all(identities::lemma31_check);
    let plain = (0..=300).all(identities::remark31_identity_check);
    let points = identities::symmetric_sample_points(20);
    let sym = points.len() == 41 && identities::remark12_symmetry_check(40, &points);
    let pass = alt && plain && sym && start.elapsed().as_secs() < 60;
    criterion(5, "exact identities hold (n <= 300; symmetry n <= 40, 41 points)", pass);
}

/// The divided quadratic-ring quotient must only depend on x mod p, not on
/// the lift chosen mod p^2.
#[test]
fn criterion_6_lift_invariance() {
    let mut pass = true;
    for p in sieve_primes(3, 97) {
        let lifted = PrimePowerModulus::new(p, 2).unwrap();
        for x in 0..p {
            let a = quotients::rhs_eq13(lifted.residue_u64(x)).unwrap();
            let b = quotients::rhs_eq13(lifted.residue_u64(x + p)).unwrap();
            if a != b {
                eprintln!("lift sensitivity at p={p} x={x}: {} vs {}", a, b);
                pass = false;
            }
        }
    }
    criterion(6, "divided quotient depends only on x mod p (p <= 97)", pass);
}

/// Every division by p the quotient layer performs must be exact for all
/// odd p <= 1000: Fermat, Pell, Fibonacci, Lucas, and the quadratic ring.
#[test]
fn criterion_7_divisibility_preconditions() {
    let mut pass = true;
    for p in sieve_primes(3, 1000) {
        if quotients::fermat_quotient_2(p).is_err() || quotients::pell_quotient(p).is_err() {
            eprintln!("divisibility failure at p={p}");
            pass = false;
        }
        if p != 5
            && (quotients::fibonacci_quotient(p).is_err() || quotients::lucas_term(p).is_err())
        {
            eprintln!("divisibility failure at p={p}");
            pass = false;
        }
        let lifted = PrimePowerModulus::new(p, 2).unwrap();
        for x in [0, 1, 2, 3, p - 1, p / 2, p / 3, 5 % p, 7 % p, 11 % p, 13 % p, 17 % p, 19 % p] {
            if quotients::rhs_eq13(lifted.residue_u64(x)).is_err() {
                eprintln!("quadratic-ring divisibility failure at p={p} x={x}");
                pass = false;
            }
        }
    }
    criterion(7, "all p-divisions are exact for odd p <= 1000", pass);
}

/// Identical CLI invocations must produce byte-identical machine output, and
/// the thread pool must not influence the records.
#[test]
fn criterion_8_determinism() {
    let delsch = env!("CARGO_BIN_EXE_delsch");
    let invoke = || {
        let out = Command::new(delsch)
            .args([
                "verify", "--checks", "all", "--pmin", "3", "--pmax", "200", "--engine",
                "both", "--format", "jsonl",
            ])
            .output()
            .expect("delsch runs");
        assert!(out.status.success(), "verify exited nonzero");
        out.stdout
    };
    let first = invoke();
    let second = invoke();

    let mut parallel_config = config(3, 120, CheckSelection::All);
    parallel_config.engine = EngineChoice::Both;
    let par = run(&parallel_config).unwrap();
    parallel_config.parallel = false;
    let ser = run(&parallel_config).unwrap();
    let serial_matches = par.records.len() == ser.records.len()
        && par
            .records
            .iter()
            .zip(&ser.records)
            .all(|(a, b)| report::jsonl_line(a) == report::jsonl_line(b));

    criterion(
        8,
        "byte-identical reruns and thread-count independence",
        !first.is_empty() && first == second && serial_matches,
    );
}
