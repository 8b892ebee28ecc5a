//! Per-thread tracking of the largest live tensor seen, with an optional
//! abort limit for the heavy pipeline stages.
//!
//! Tensor constructors call [`record`]; pipeline stages call [`check`]
//! between steps, which turns an exceeded limit into [`Error::TermLimit`].

use std::cell::Cell;

use crate::error::{Error, Result};

/// Environment variable consulted by [`default_limit`].
pub const ENV_VAR: &str = "JCOKER_WATERMARK";

pub const DEFAULT_LIMIT: usize = 4_000_000;

thread_local! {
    static PEAK: Cell<usize> = const { Cell::new(0) };
    static LIMIT: Cell<Option<usize>> = const { Cell::new(None) };
    static TRIPPED: Cell<usize> = const { Cell::new(0) };
}

pub fn record(live: usize) {
    PEAK.with(|p| {
        if live > p.get() {
            p.set(live);
        }
    });
    LIMIT.with(|l| {
        if let Some(limit) = l.get() {
            if live > limit {
                TRIPPED.with(|t| t.set(t.get().max(live)));
            }
        }
    });
}

pub fn peak() -> usize {
    PEAK.with(Cell::get)
}

/// Clears the peak and any tripped state; the limit is kept.
pub fn reset() {
    PEAK.with(|p| p.set(0));
    TRIPPED.with(|t| t.set(0));
}

pub fn set_limit(limit: Option<usize>) {
    LIMIT.with(|l| l.set(limit));
}

pub fn limit() -> Option<usize> {
    LIMIT.with(Cell::get)
}

/// Fails if any tensor built since the last [`reset`] exceeded the limit.
pub fn check() -> Result<()> {
    let tripped = TRIPPED.with(Cell::get);
    match limit() {
        Some(limit) if tripped > 0 => Err(Error::TermLimit {
            live: tripped,
            limit,
        }),
        _ => Ok(()),
    }
}

/// Limit from [`ENV_VAR`] when set and parseable, otherwise [`DEFAULT_LIMIT`].
pub fn default_limit() -> usize {
    std::env::var(ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &usize| v > 0)
        .unwrap_or(DEFAULT_LIMIT)
}
