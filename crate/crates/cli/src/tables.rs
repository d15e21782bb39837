use std::path::Path;

use anyhow::Result;
use fracsolve::reference::reproduce_all;
use fracsolve::SolverConfig;
use serde_json::json;

use crate::output::{OutDir, RunManifest};
use crate::{EXIT_MISMATCH, EXIT_OK};

pub fn run(config: &SolverConfig<f64>, alpha: Option<f64>, out: Option<&Path>) -> Result<u8> {
    let checks = reproduce_all(config, alpha);
    for c in &checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        let kind = if c.accelerated { "accelerated" } else { "plain" };
        print!(
            "{verdict}  table {} ({kind:<11}) iterations {:>3} (expected {:>2}), max error {:.2e}",
            c.table, c.iterations, c.expected_iterations, c.max_value_error
        );
        match &c.error {
            Some(e) => println!(", {e}"),
            None => println!(),
        }
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    println!("{passed}/{} tables reproduced", checks.len());

    if let Some(dir) = out {
        let out = OutDir::create(dir)?;
        out.json("tables.json", &checks)?;
        let inputs = json!({ "alpha_override": alpha });
        out.manifest(&RunManifest::new("reproduce-tables", *config, None, &inputs))?;
    }
    Ok(if passed == checks.len() { EXIT_OK } else { EXIT_MISMATCH })
}
