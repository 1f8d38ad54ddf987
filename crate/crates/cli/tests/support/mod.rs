#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Run the built binary inside the fixture directory.
pub fn catk(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_catk"));
    cmd.current_dir(fixtures()).args(args).env_remove("CATK_INSTANCE_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

/// `(expected file stem, arguments, exit code)`. Each case is run with
/// `--format json` and compared with `fixtures/expected/<stem>.json`.
pub const JSON_CASES: &[(&str, &[&str], i32)] = &[
    ("check_walking_arrow", &["check", "walking_arrow.cat"], 0),
    ("check_s3", &["check", "s3.cat"], 0),
    ("check_nonassoc", &["check", "nonassoc.cat"], 1),
    ("check_empty", &["check", "empty.cat"], 0),
    ("check_functor_arrow", &["check-functor", "arrow_to_z2.fun"], 0),
    ("check_functor_chain", &["check-functor", "chain_to_z2.fun"], 1),
    ("natural_pick", &["check-natural", "pick_a.fun", "pick_b.fun", "--component", "pt=f"], 0),
    ("natural_s3", &["check-natural", "s3_identity.fun", "s3_identity.fun", "--component", "pt=p102"], 1),
    ("compose_chain", &["compose", "chain.cat", "f", "g"], 0),
    ("commutes_chain", &["commutes", "chain.cat", "f;g", "h"], 0),
    ("commutes_parallel", &["commutes", "parallel.cat", "f", "g"], 1),
    ("opposite_chain", &["opposite", "chain.cat"], 0),
    ("paths_ab_count", &["paths", "ab.qv", "A", "A", "--max-len", "4", "--count"], 0),
    ("paths_ab", &["paths", "ab.qv", "A", "B", "--max-len", "3"], 0),
    ("paths_edgeless", &["paths", "edgeless.qv", "A", "A", "--max-len", "5"], 0),
    ("free_eval_ab", &["free-eval", "ab.qv", "ab.asg", "a;b;a"], 0),
    ("terminal_div12", &["terminal", "div12.cat"], 0),
    ("initial_div12", &["initial", "div12.cat"], 0),
    ("terminal_discrete", &["terminal", "discrete2.cat"], 1),
    ("product_div12_2_3", &["product", "div12.cat", "2", "3"], 0),
    ("product_div12_4_6", &["product", "div12.cat", "4", "6"], 0),
    ("product_discrete", &["product", "discrete2.cat", "X0", "X1"], 1),
    ("coproduct_div12_2_3", &["coproduct", "div12.cat", "2", "3"], 0),
    ("monoidal_div12", &["monoidal-from-products", "div12.cat"], 0),
    ("symmetric_div30", &["check-symmetric", "div30.cat"], 0),
    ("monoidal_z2_products", &["check-monoidal", "z2.cat"], 1),
    ("symmetric_z2_monoid", &["check-symmetric", "z2.cat", "--tensor", "monoid"], 0),
    ("cat_three", &["cat", "trivial.cat", "walking_arrow.cat", "z2.cat"], 0),
    ("functors_arrow", &["functors", "walking_arrow.cat", "walking_arrow.cat"], 0),
    ("functors_arrow_count", &["functors", "walking_arrow.cat", "walking_arrow.cat", "--count"], 0),
    ("smc_equal_involution", &["smc-equal", "sig.sig", "sym(x,x) ; sym(x,x)", "id(x.x)"], 0),
    ("smc_equal_swap", &["smc-equal", "sig.sig", "sym(x,x)", "id(x.x)"], 1),
    ("smc_enum_count", &["smc-enum", "sig.sig", "x.x.x", "x", "--max-boxes", "2", "--count"], 0),
    ("smc_enum_swap", &["smc-enum", "sig.sig", "x.x", "x.x", "--max-boxes", "0"], 0),
    ("smc_check", &["smc-check", "sig.sig", "--max-boxes", "1", "--max-word", "3"], 0),
];

/// `(label, arguments, environment, exit code)` for the exit-code matrix.
pub type ExitCase = (&'static str, &'static [&'static str], &'static [(&'static str, &'static str)], i32);

pub const EXIT_CASES: &[ExitCase] = &[
    ("lawful category", &["check", "div30.cat"], &[], 0),
    ("violated associativity", &["check", "nonassoc.cat"], &[], 1),
    ("violated functor law", &["check-functor", "chain_to_z2.fun"], &[], 1),
    ("absent terminal", &["terminal", "discrete2.cat"], &[], 1),
    ("false predicate", &["commutes", "parallel.cat", "f", "g"], &[], 1),
    ("unequal diagrams", &["smc-equal", "sig.sig", "m", "sym(x,x) ; m"], &[], 1),
    ("help", &["--help"], &[], 0),
    ("verb help", &["paths", "--help"], &[], 0),
    ("no verb", &[], &[], 2),
    ("unknown verb", &["frobnicate"], &[], 2),
    ("missing argument", &["compose", "chain.cat", "f"], &[], 2),
    ("bad format", &["--format", "yaml", "check", "z2.cat"], &[], 2),
    ("missing file", &["check", "nowhere.cat"], &[], 2),
    ("wrong document kind", &["check", "ab.qv"], &[], 2),
    ("unknown extension", &["check", "expected"], &[], 2),
    ("not composable", &["compose", "chain.cat", "g", "f"], &[], 2),
    ("unknown morphism", &["compose", "chain.cat", "f", "k"], &[], 2),
    ("unknown object", &["product", "div12.cat", "5", "2"], &[], 2),
    ("endpoint mismatch", &["commutes", "chain.cat", "f", "h"], &[], 2),
    ("missing component", &["check-natural", "pick_a.fun", "pick_b.fun"], &[], 2),
    ("ill-typed component", &["check-natural", "pick_a.fun", "pick_b.fun", "--component", "pt=id_A"], &[], 2),
    ("monoid tensor needs one object", &["check-monoidal", "div12.cat", "--tensor", "monoid"], &[], 2),
    ("bad term", &["smc-equal", "sig.sig", "m m", "m"], &[], 2),
    ("ill-typed term", &["smc-equal", "sig.sig", "m ; m", "m"], &[], 2),
    ("unknown word token", &["smc-enum", "sig.sig", "y", "x"], &[], 2),
    ("bad path", &["free-eval", "ab.qv", "ab.asg", "a;a"], &[], 2),
    ("unknown node", &["paths", "ab.qv", "A", "C"], &[], 2),
    ("budget exceeded", &["cat", "trivial.cat", "walking_arrow.cat"], &[("CATK_INSTANCE_BUDGET", "3")], 2),
    ("budget sufficient", &["cat", "trivial.cat", "walking_arrow.cat"], &[("CATK_INSTANCE_BUDGET", "7")], 0),
    ("budget malformed", &["cat", "trivial.cat"], &[("CATK_INSTANCE_BUDGET", "lots")], 2),
];
