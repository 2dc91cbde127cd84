//! Shared helpers for the bolz binary and its tests.

pub mod textgen;
