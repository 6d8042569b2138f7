use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::SpectrumSide;
use crate::error::{Error, Result};
use crate::graph::DoubleStarlikeParams;

/// Resumable state of one exhaustive scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchCheckpoint {
    pub params: DoubleStarlikeParams,
    pub order: usize,
    pub side: SpectrumSide,
    /// Last level sequence whose tree has been examined.
    pub last_level_sequence: Option<Vec<usize>>,
    pub mates: Vec<String>,
    pub trees_examined: usize,
    pub elapsed: f64,
}

impl SearchCheckpoint {
    pub fn new(params: DoubleStarlikeParams, order: usize, side: SpectrumSide) -> Self {
        SearchCheckpoint {
            params,
            order,
            side,
            last_level_sequence: None,
            mates: Vec::new(),
            trees_examined: 0,
            elapsed: 0.0,
        }
    }

    pub(crate) fn validate(&self, params: DoubleStarlikeParams, order: usize, side: SpectrumSide) -> Result<()> {
        if self.params != params || self.order != order || self.side != side {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for {} (order {}), not {params} (order {order})",
                self.params, self.order
            )));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_slice(&fs::read(path)?)?)
    }
}

/// Grid progress: reports already in the results file, plus the scan in
/// flight, if any.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridCheckpoint {
    pub completed: usize,
    pub current: Option<SearchCheckpoint>,
}

/// Writes `bytes` to a sibling temporary file and renames it over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    {
        let mut f = fs::File::create(tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(tmp, path)?;
    Ok(())
}
