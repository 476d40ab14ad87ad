//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use nonstoch_core::region::DEFAULT_BUDGET;
use nonstoch_core::{
    capacity_region, oracle_region, presets, single_user_capacity, synthesize_code, verify_zero_error, Bounds,
    MuTriple, Strategy, DEFAULT_WORLD_CAP,
};
use nonstoch_testkit::{confusability, independence_number, suites};

type Outcome = Result<String, String>;

fn region_equality() -> Outcome {
    let start = Instant::now();
    let mut compared = Vec::new();
    for (name, ch) in presets::corpus() {
        for n in [1, 2] {
            let oracle = oracle_region(&ch, n, None, DEFAULT_BUDGET).map_err(|e| format!("{name} n={n}: {e}"))?;
            if !oracle.region.is_downward_closed() {
                return Err(format!("{name} n={n}: oracle region is not downward closed"));
            }
            let strategies: &[Strategy] = if n == 1 {
                &[Strategy::Exhaustive, Strategy::Packing]
            } else {
                &[Strategy::Auto]
            };
            for &s in strategies {
                let r = capacity_region(&ch, n, &Bounds::default(), s).map_err(|e| format!("{name} n={n}: {e}"))?;
                if r.region.points() != oracle.region.points() {
                    return Err(format!("{name} n={n} {s:?}: structure and oracle regions differ"));
                }
            }
            compared.push(format!("{name}/{n}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!(
        "{} channel/blocklength pairs equal in {elapsed:.1?}",
        compared.len()
    ))
}

fn pentagon_capacity() -> Outcome {
    let start = Instant::now();
    let ch = presets::pentagon();
    for (n, expected) in [(1, 2), (2, 5)] {
        let c = single_user_capacity(&ch, n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let (_, adj) = confusability(&ch, n);
        let alpha = independence_number(&adj);
        if c.cells != expected || alpha != expected {
            return Err(format!(
                "n={n}: search {} independence {alpha} expected {expected}",
                c.cells
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("2 codewords at n=1, 5 at n=2, in {elapsed:.1?}"))
}

fn adder_landmarks() -> Outcome {
    let ch = presets::binary_adder();
    let r = capacity_region(&ch, 1, &Bounds::default(), Strategy::Exhaustive).map_err(|e| e.to_string())?;
    let oracle = oracle_region(&ch, 1, None, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    for mu in [MuTriple::new(3, 1, 1), MuTriple::new(1, 2, 1), MuTriple::new(1, 1, 2)] {
        if !r.region.contains(&mu) || !oracle.region.contains(&mu) {
            return Err(format!("{mu} should be achievable"));
        }
    }
    for mu in [MuTriple::new(1, 2, 2), MuTriple::new(4, 1, 1)] {
        if r.region.contains(&mu) || oracle.region.contains(&mu) {
            return Err(format!("{mu} should not be achievable"));
        }
    }
    let mut verified = 0;
    for mu in r.region.points() {
        let (_, s) = r.witness_for(mu).ok_or(format!("{mu} has no witness"))?;
        let code = synthesize_code(&ch, s, DEFAULT_WORLD_CAP)
            .and_then(|c| c.code.restrict(*mu))
            .map_err(|e| e.to_string())?;
        if !verify_zero_error(&ch, &code, DEFAULT_WORLD_CAP)
            .map_err(|e| e.to_string())?
            .ok
        {
            return Err(format!("synthesized code for {mu} fails verification"));
        }
        verified += 1;
    }
    Ok(format!("landmarks hold; {verified} synthesized codes verified"))
}

fn tally(t: suites::Tally, what: &str) -> Outcome {
    if t.is_clean() {
        Ok(format!("{} {what} checks, 0 violations", t.checks))
    } else {
        Err(format!(
            "{} of {} {what} checks failed; first: {}",
            t.violations.len(),
            t.checks,
            t.violations[0]
        ))
    }
}

fn properties() -> Outcome {
    tally(suites::property_suite(1200, 0x5eed), "property")
}

fn maximality() -> Outcome {
    tally(suites::maximality_suite(5000, 0xcafe), "maximality")
}

fn rate_equality() -> Outcome {
    let mut all = suites::Tally::default();
    for (name, ch) in presets::corpus() {
        all.merge(suites::rate_equality_suite(&ch, 1, &Bounds::default()).map_err(|e| format!("{name}: {e}"))?);
    }
    let one_u = Bounds {
        max_u: Some(1),
        ..Bounds::default()
    };
    all.merge(suites::rate_equality_suite(&presets::binary_adder(), 2, &one_u).map_err(|e| e.to_string())?);
    tally(all, "structure")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run_cli(args: &[String]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nonstoch"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let synthesized: PathBuf = dir.path().join("code.json");
    let (code, status) = run_cli(&[
        "synthesize".into(),
        "--channel".into(),
        fixture("pentagon.json"),
        "--structure".into(),
        fixture("structure_pentagon.json"),
    ])?;
    if status != 0 {
        return Err("synthesize failed".into());
    }
    std::fs::write(&synthesized, code).map_err(|e| e.to_string())?;

    let line = |s: &str| -> Vec<String> {
        s.split_whitespace()
            .map(|t| match t.strip_prefix('@') {
                Some(f) => fixture(f),
                None if t == "$code" => synthesized.display().to_string(),
                None => t.to_string(),
            })
            .collect()
    };
    let commands = [
        "info --world @world_xy.json --vars X,Y",
        "cond-info --world @world_cond.json --vars X,Y --given W",
        "partition --world @world_xy.json --vars X,Y",
        "nc-info --world @world_nc.json --vars X1,X2,Y",
        "synthesize --channel @adder.json --structure @structure_adder.json",
        "synthesize --channel @pentagon.json --structure @structure_pentagon.json",
        "verify --channel @adder.json --code @code_adder_injective.json",
        "verify --channel @pentagon.json --code $code",
        "region --channel @adder.json --n 1",
        "region --channel @adder.json --n 1 --format csv",
        "region --channel @xor.json --n 2",
        "region --channel @pentagon.json --n 2",
        "region --channel @identity.json --n 2 --format csv",
        "oracle-region --channel @adder.json --n 2",
        "oracle-region --channel @and.json --n 2 --format csv",
        "oracle-region --channel @pentagon.json --n 1",
        "single-user --channel @pentagon.json --n 2",
    ];
    for c in commands {
        let base = line(c);
        let (reference, status) = run_cli(&base)?;
        if status != 0 || reference.is_empty() {
            return Err(format!("`{c}` exited with {status}"));
        }
        for threads in ["1", "2", "4"] {
            for _ in 0..2 {
                let mut args = base.clone();
                args.extend(["--threads".to_string(), threads.to_string()]);
                let (again, status) = run_cli(&args)?;
                if status != 0 || again != reference {
                    return Err(format!("`{c}` differs with --threads {threads}"));
                }
            }
        }
    }
    Ok(format!("{} commands byte-identical across 7 runs each", commands.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        (
            "1 structure region equals code-search region on the corpus",
            region_equality,
        ),
        ("2 pentagon single-user capacities", pentagon_capacity),
        ("3 adder landmark points with verified codes", adder_landmarks),
        ("4 dual-implementation properties on random worlds", properties),
        ("5 maximality against brute-force common variables", maximality),
        ("6 synthesized rates equal structure information", rate_equality),
        ("7 byte-identical CLI reports", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
