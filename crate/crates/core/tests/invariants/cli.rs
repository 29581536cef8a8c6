use std::process::Command;

use super::{ensure, Check, Outcome};

pub const CHECKS: &[Check] = &[
    ("cli: output independent of workers", output_is_identical_across_worker_counts),
    ("cli: exit-code contract", exit_codes),
];

pub fn ramseries(args: &[&str], workers: &str) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramseries"))
        .args(args)
        .env("RAMSERIES_WORKERS", workers)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

pub fn output_is_identical_across_worker_counts() -> Outcome {
    let runs: &[&[&str]] = &[
        &["table", "phi", "--a", "-0.75:1.5:0.75", "--b", "0.25:2.25:0.5", "--n", "0..3", "--format", "csv"],
        &["table", "psi", "--a", "-1.5:0.5:0.5", "--b", "1", "--beta", "-1:1:0.5", "--alpha", "0..1", "--format", "jsonl"],
        &["verify", "shifts", "--format", "jsonl"],
        &["verify", "series", "--format", "csv"],
        &["coeffs", "--p", "-0.5", "--b", "0.25", "--m", "6", "--format", "jsonl"],
    ];
    for args in runs {
        let (c1, o1) = ramseries(args, "1");
        let (c4, o4) = ramseries(args, "4");
        ensure(c1 == c4 && !o1.is_empty() && o1 == o4, || format!("{args:?} differs between 1 and 4 workers"))?;
    }
    Ok(())
}

pub fn exit_codes() -> Outcome {
    let cases: &[(&[&str], i32)] = &[
        (&["eval", "zeta", "--s", "2", "--q", "1"], 0),
        (&["eval", "zeta", "--s", "1", "--q", "1"], 2),
        (&["verify", "nope"], 2),
        (&["verify", "series", "--tol", "1e-300"], 1),
        (&["verify", "errata"], 0),
    ];
    for &(args, want) in cases {
        let (code, _) = ramseries(args, "2");
        ensure(code == want, || format!("{args:?}: exit {code}, want {want}"))?;
    }
    Ok(())
}
