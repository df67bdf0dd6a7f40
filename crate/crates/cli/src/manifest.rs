//! Run manifests: every emitted artifact embeds one.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub input: String,
    /// 1-based sink vertex actually used.
    pub sink: usize,
    pub command: String,
    pub seed: Option<u64>,
    pub version: &'static str,
    pub wall_time_ms: u128,
}

impl RunManifest {
    pub fn new(input: &str, sink_zero_based: usize, command: &str, seed: Option<u64>) -> Self {
        RunManifest {
            input: input.to_string(),
            sink: sink_zero_based + 1,
            command: command.to_string(),
            seed,
            version: env!("CARGO_PKG_VERSION"),
            wall_time_ms: 0,
        }
    }

    /// Lines for the pretty format header.
    pub fn pretty_header(&self) -> String {
        let seed = self
            .seed
            .map(|s| s.to_string())
            .unwrap_or_else(|| "-".to_string());
        format!(
            "# input: {}\n# sink: {}\n# command: {}\n# seed: {}\n# version: {}\n# wall_time_ms: {}\n",
            self.input, self.sink, self.command, seed, self.version, self.wall_time_ms
        )
    }
}
