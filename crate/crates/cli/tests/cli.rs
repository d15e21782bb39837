use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

/// Runs the binary with a whitespace-separated argument line.
fn fracsolve(line: &str) -> Output {
    fracsolve_env(line, &[])
}

fn fracsolve_env(line: &str, env: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracsolve"))
        .args(line.split_whitespace())
        .envs(env.iter().copied())
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

const CUBIC: &str = r#"{"n": 1, "components": [[{"coef": 1, "exp": [3]}, {"coef": -1, "exp": [1]}]]}"#;
// x^2 - 2x - 3, stationary at x = 1.
const QUADRATIC: &str =
    r#"{"n": 1, "components": [[{"coef": 1, "exp": [2]}, {"coef": -2, "exp": [1]}, {"coef": -3, "exp": [0]}]]}"#;

#[test]
fn accelerated_receiver_trace_has_thirteen_rows() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("run");
    let o = fracsolve(&format!(
        "solve receiver --dni 900 --tair 20 --alpha 0.89825 --method quasi-newton-accelerated \
         --delta 13 --x0 3000,3000 --out-dir {}",
        out.display()
    ));
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(out.join("trace.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "i,x_1,x_2,step_norm,residual_norm");
    assert_eq!(lines.len(), 14);
    assert!(lines[1].starts_with("1,2048.52627"));
    assert!(lines[1].ends_with(",1.35398E+03,2.01348E+03"));
    let last: Vec<f64> = lines[13].split(',').map(|c| c.parse().unwrap()).collect();
    assert_eq!(last[0], 13.0);
    assert!((last[1] - 51.56211284).abs() < 1e-5);
    assert!((last[2] - 22.08753788).abs() < 1e-5);
    assert!(last[4] <= 1e-8);

    let report = json(&out.join("report.json"));
    assert_eq!(report["iterations"], 13);
    assert_eq!(report["convergence"]["classification"], "Ord2");
    let manifest = json(&out.join("manifest.json"));
    assert_eq!(manifest["command"], "solve receiver");
    assert_eq!(manifest["inputs_digest"].as_str().unwrap().len(), 64);
    assert!(out.join("trace.json").exists());
}

#[test]
fn unit_order_receiver_run_converges() {
    let tmp = TempDir::new().unwrap();
    let o = fracsolve(&format!(
        "solve receiver --dni 900 --tair 20 --alpha 1 --method quasi-newton --out-dir {}",
        tmp.path().display()
    ));
    assert_eq!(code(&o), 0);
}

#[test]
fn params_file_matches_flags() {
    let tmp = TempDir::new().unwrap();
    let params = write(tmp.path(), "p.json", r#"{"DNI": 900, "T_air": 20, "constants": {}}"#);
    let a = tmp.path().join("a");
    let b = tmp.path().join("b");
    assert_eq!(code(&fracsolve(&format!("solve receiver --params {params} --out-dir {}", a.display()))), 0);
    assert_eq!(code(&fracsolve(&format!("solve receiver --dni 900 --tair 20 --out-dir {}", b.display()))), 0);
    assert_eq!(fs::read(a.join("trace.csv")).unwrap(), fs::read(b.join("trace.csv")).unwrap());
}

#[test]
fn exit_codes() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("o");
    let dir = dir.display();

    let o = fracsolve(&format!("solve receiver --dni 900 --tair 20 --max-iter 5 --out-dir {dir}"));
    assert_eq!(code(&o), 2);

    let quad = write(tmp.path(), "quad.json", QUADRATIC);
    let o = fracsolve(&format!("solve poly {quad} --x0 1 --alpha 1 --method quasi-newton --out-dir {dir}"));
    assert_eq!(code(&o), 3);

    let broken = write(tmp.path(), "broken.json", "{\"n\": 1,\n \"components\": [[{\"coef\": 1 \"exp\": [2]}]]}");
    let o = fracsolve(&format!("solve poly {broken} --x0 1 --out-dir {dir}"));
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("broken.json:2:"), "{err}");

    assert_eq!(code(&fracsolve(&format!("solve poly /nonexistent/system.json --x0 1 --out-dir {dir}"))), 1);
    assert_eq!(code(&fracsolve(&format!("solve receiver --dni 900 --out-dir {dir}"))), 1);
    assert_eq!(code(&fracsolve("solve receiver --bogus")), 1);
}

#[test]
fn poly_solve_writes_a_trace() {
    let tmp = TempDir::new().unwrap();
    let cubic = write(tmp.path(), "cubic.json", CUBIC);
    let out = tmp.path().join("o");
    let o = fracsolve(&format!("solve poly {cubic} --alpha 0.5 --method fnr --x0 0.6 --out-dir {}", out.display()));
    assert!(matches!(code(&o), 0 | 2));
    let csv = fs::read_to_string(out.join("trace.csv")).unwrap();
    assert!(csv.starts_with("i,x_1,step_norm,residual_norm\n1,"));
}

#[test]
fn reproduce_tables_passes_and_detects_perturbations() {
    let o = fracsolve("reproduce-tables");
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6);

    let o = fracsolve("reproduce-tables --step-tol 1e-2");
    assert_ne!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));

    assert_ne!(code(&fracsolve("reproduce-tables --alpha 0.5")), 0);
}

#[test]
fn simulation_is_deterministic() {
    let tmp = TempDir::new().unwrap();
    let dirs = ["a", "b", "c"].map(|d| tmp.path().join(d));
    for (k, dir) in dirs.iter().enumerate() {
        let threads = if k == 2 { "1" } else { "0" };
        let line = format!("simulate --n 200 --seed 11 --out-dir {}", dir.display());
        assert_eq!(code(&fracsolve_env(&line, &[("FRACSOLVE_THREADS", threads)])), 0);
    }
    for f in ["samples.csv", "histogram.json", "summary.json", "manifest.json"] {
        let first = fs::read(dirs[0].join(f)).unwrap();
        assert_eq!(first, fs::read(dirs[1].join(f)).unwrap(), "{f}");
        assert_eq!(first, fs::read(dirs[2].join(f)).unwrap(), "{f} on one thread");
    }
    let csv = fs::read_to_string(dirs[0].join("samples.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "DNI,T_air,T_cell,T_hot,T_cold,eta_cell,eta_TEG,iterations,converged");
    assert_eq!(csv.lines().count(), 201);
    assert_eq!(json(&dirs[0].join("manifest.json"))["seed"], 11);
}

#[test]
fn degenerate_simulation_hits_the_reference_point() {
    let tmp = TempDir::new().unwrap();
    let o =
        fracsolve(&format!("simulate --n 1 --dni-range 900,900 --tair-range 20,20 --out-dir {}", tmp.path().display()));
    assert_eq!(code(&o), 0);
    let csv = fs::read_to_string(tmp.path().join("samples.csv")).unwrap();
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    let v = |k: usize| row[k].parse::<f64>().unwrap();
    assert!((v(3) - 51.56211284).abs() < 1e-5);
    assert!((v(4) - 22.08753788).abs() < 1e-5);
    assert!((v(2) - 53.76746288).abs() < 1e-5);
    assert!((v(5) - 0.42430980).abs() < 1e-5);
    assert_eq!(row[8], "true");
}

#[test]
fn simulation_from_file() {
    let tmp = TempDir::new().unwrap();
    let input = write(tmp.path(), "pts.csv", "DNI,T_air\n900,20\n574.319,16.832\n");
    let o = fracsolve(&format!("simulate --distribution file --input {input} --out-dir {}", tmp.path().display()));
    assert_eq!(code(&o), 0);
    let csv = fs::read_to_string(tmp.path().join("samples.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
    assert!(json(&tmp.path().join("manifest.json")).get("seed").is_none());
}

#[test]
fn cubic_sweep_finds_several_roots() {
    let tmp = TempDir::new().unwrap();
    let cubic = write(tmp.path(), "cubic.json", CUBIC);
    let out = tmp.path().join("s");
    let o = fracsolve(&format!(
        "sweep poly {cubic} --x0 0.6 --alphas 0.1:0.05:1.9 --skip-integers --out-dir {}",
        out.display()
    ));
    assert_eq!(code(&o), 0);
    assert!(json(&out.join("roots.json"))["roots"].as_array().unwrap().len() >= 2);
    let csv = fs::read_to_string(out.join("sweep.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 36);
    assert!(!csv.lines().any(|l| l.starts_with("1.0,")));
}

#[test]
fn sweep_marks_the_singular_order() {
    let tmp = TempDir::new().unwrap();
    let quad = write(tmp.path(), "quad.json", QUADRATIC);
    let out = tmp.path().join("s");
    let o = fracsolve(&format!(
        "sweep poly {quad} --x0 1 --alphas 0.5,1 --method quasi-newton --out-dir {}",
        out.display()
    ));
    assert_eq!(code(&o), 0);
    let csv = fs::read_to_string(out.join("sweep.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert!(rows[0].starts_with("0.5,true,"));
    assert!(rows[1].starts_with("1.0,false,0,singular_matrix,"));
}
