//! Output directory handling and the run manifest.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use fracsolve::{MethodSpec, SolverConfig};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Written next to every set of outputs. Two runs with equal manifests
/// produce byte-identical files.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config: SolverConfig<f64>,
    pub method: Option<MethodSpec<f64>>,
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunManifest {
    pub fn new(
        command: &str,
        config: SolverConfig<f64>,
        method: Option<MethodSpec<f64>>,
        inputs: &serde_json::Value,
    ) -> RunManifest {
        RunManifest { command: command.into(), config, method, inputs_digest: digest(inputs), seed: None }
    }
}

/// SHA-256 of the compact JSON encoding.
pub fn digest(value: &serde_json::Value) -> String {
    let bytes = serde_json::to_vec(value).expect("JSON values serialize");
    hex::encode(Sha256::digest(&bytes))
}

pub struct OutDir(PathBuf);

impl OutDir {
    pub fn create(path: &Path) -> Result<OutDir> {
        fs::create_dir_all(path).with_context(|| format!("cannot create {}", path.display()))?;
        Ok(OutDir(path.to_path_buf()))
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }

    pub fn writer(&self, name: &str) -> Result<BufWriter<fs::File>> {
        let path = self.path(name);
        let file = fs::File::create(&path).with_context(|| format!("cannot write {}", path.display()))?;
        Ok(BufWriter::new(file))
    }

    pub fn json<T: Serialize + ?Sized>(&self, name: &str, value: &T) -> Result<()> {
        let mut w = self.writer(name)?;
        serde_json::to_writer_pretty(&mut w, value)?;
        writeln!(w)?;
        w.flush()?;
        Ok(())
    }

    pub fn manifest(&self, manifest: &RunManifest) -> Result<()> {
        self.json("manifest.json", manifest)
    }
}

/// Shortest decimal that round-trips, or an empty cell.
pub fn cell(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

/// Shortest round-trip form; switches to exponent notation for very small
/// and very large magnitudes.
pub fn num(v: f64) -> String {
    format!("{v:?}")
}
