use clap::ValueEnum;
use jcoker::combinatorics::Partition;
use jcoker::Error;

use crate::{Cli, Command, Fault};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Everything a command needs, validated once up front.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: &'static str,
    pub k: Option<usize>,
    pub g: Option<usize>,
    pub partitions: Vec<Partition>,
    pub format: Option<Format>,
    pub seed: u64,
    pub watermark: usize,
    pub fault: Option<Fault>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, Error> {
        let (command, k, g, partitions) = match &cli.command {
            Command::Witt { k, .. } => ("witt", Some(*k as usize), None, vec![]),
            Command::Decompose { k, g, .. } => ("decompose", Some(*k), Some(*g), vec![]),
            Command::Detect { k, g, .. } => ("detect", Some(*k), Some(*g), vec![]),
            Command::BrauerChar { k, g } => ("brauer-char", Some(*k), Some(*g), vec![]),
            Command::Kw { shape } => ("kw", None, None, vec![shape.clone()]),
            Command::Branch { shape, g } => ("branch", None, Some(*g), vec![shape.clone()]),
            Command::Selftest { .. } => ("selftest", None, None, vec![]),
        };
        if k == Some(0) {
            return Err(Error::Precondition("k must be at least 1".into()));
        }
        if g == Some(0) {
            return Err(Error::Precondition("g must be at least 1".into()));
        }
        if cli.watermark == 0 {
            return Err(Error::Precondition("watermark must be positive".into()));
        }
        Ok(RunConfig {
            command,
            k,
            g,
            partitions,
            format: cli.format,
            seed: cli.seed,
            watermark: cli.watermark,
            fault: cli.inject_fault,
        })
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    /// `k` and `g`, present for every command that reads them.
    pub fn kg(&self) -> (usize, usize) {
        (self.k.expect("command takes k"), self.g.expect("command takes g"))
    }
}
