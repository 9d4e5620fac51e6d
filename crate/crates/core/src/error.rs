// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of an operation: bad qubit index,
    /// mismatched dimensions, odd qubit count for a balanced code, ...
    #[error("domain error: {0}")]
    Domain(String),

    /// Incomplete or inconsistent scenario configuration.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
