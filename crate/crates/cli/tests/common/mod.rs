//! End-to-end command cases shared by the golden tests and the acceptance run.

// each test target uses a different subset
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// Set to regenerate the golden documents.
pub const BLESS_ENV: &str = "PROPER_SPLIT_BLESS";

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "analyze_marginal", args: &["analyze", "t_marginal.txt", "u_marginal.txt"], exit: 2 },
    Case { name: "analyze_lower", args: &["analyze", "t_lower.txt", "u_lower.txt"], exit: 0 },
    Case { name: "analyze_identity_split", args: &["analyze", "t_marginal.txt", "t_marginal.txt"], exit: 0 },
    Case { name: "analyze_complex", args: &["analyze", "t_complex.txt", "u_complex.txt"], exit: 0 },
    Case { name: "analyze_shape_mismatch", args: &["analyze", "t_diag.txt", "one.txt"], exit: 1 },
    Case { name: "analyze_missing_file", args: &["analyze", "absent.txt", "one.txt"], exit: 1 },
    Case { name: "analyze_not_proper", args: &["analyze", "t_worked.txt", "t_lower.txt"], exit: 3 },
    Case { name: "analyze_malformed", args: &["analyze", "malformed.txt", "u_marginal.txt"], exit: 1 },
    Case { name: "construct_polar", args: &["construct", "t_worked.txt", "--method", "polar"], exit: 0 },
    Case { name: "construct_projection", args: &["construct", "t_worked.txt", "--method", "projection"], exit: 0 },
    Case {
        name: "construct_range_projector_not_normal",
        args: &["construct", "t_worked.txt", "--method", "range-projector"],
        exit: 3,
    },
    Case { name: "construct_projection_nilpotent", args: &["construct", "nilpotent.txt", "--method", "projection"], exit: 3 },
    Case { name: "solve_scalar", args: &["solve", "one.txt", "two.txt", "one.txt"], exit: 0 },
    Case {
        name: "solve_basis_file",
        args: &["solve", "t_diag.txt", "u_diag.txt", "w_diag.txt", "--subspace", "basis_diag.txt"],
        exit: 0,
    },
    Case {
        name: "solve_not_a_complement",
        args: &["solve", "t_diag.txt", "u_diag.txt", "w_diag.txt", "--subspace", "basis_null.txt"],
        exit: 3,
    },
    Case { name: "solve_unsolvable", args: &["solve", "t_diag.txt", "u_diag.txt", "w_outside.txt"], exit: 5 },
    Case { name: "solve_max_iter", args: &["solve", "one.txt", "two.txt", "one.txt", "--max-iter", "5"], exit: 4 },
    Case { name: "compare_by_v", args: &["compare", "one.txt", "two.txt", "three.txt", "--by", "V"], exit: 0 },
    Case { name: "compare_by_v_reversed", args: &["compare", "one.txt", "three.txt", "two.txt", "--by", "V"], exit: 2 },
    Case { name: "compare_by_u_chain", args: &["compare", "one.txt", "u_low.txt", "u_high.txt", "--by", "U"], exit: 4 },
    Case {
        name: "compare_by_u_above",
        args: &["compare", "one.txt", "two.txt", "three.txt", "--by", "U-above"],
        exit: 0,
    },
    Case {
        name: "compare_mismatched_t",
        args: &["compare", "one.txt", "two.txt", "three.txt", "--by", "V", "--t2", "two.txt"],
        exit: 1,
    },
];

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

pub struct Run {
    pub exit: i32,
    pub json: String,
    pub stderr: String,
}

/// Runs the binary from the fixtures directory with the report sent to stdout.
pub fn run_case(case: &Case) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_proper-split"))
        .current_dir(fixtures())
        .env_remove("PROPER_SPLIT_TOL_RANK")
        .args(case.args)
        .args(["--json", "-"])
        .output()
        .expect("binary runs");
    Run {
        exit: out.status.code().unwrap_or(-1),
        json: String::from_utf8(out.stdout).expect("UTF-8 report"),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// `Ok(())` when exit code and document match the golden file; blesses
/// instead when [`BLESS_ENV`] is set.
pub fn check_case(case: &Case) -> Result<(), String> {
    let run = run_case(case);
    if run.exit != case.exit {
        return Err(format!("{}: exit {} (expected {}); stderr: {}", case.name, run.exit, case.exit, run.stderr.trim()));
    }
    let path = golden_path(case.name);
    if std::env::var_os(BLESS_ENV).is_some() {
        std::fs::write(&path, &run.json).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if golden != run.json {
        return Err(format!("{}: report differs from {}", case.name, path.display()));
    }
    Ok(())
}
