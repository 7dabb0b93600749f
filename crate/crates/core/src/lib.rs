//! Reversible prime event structures, Petri nets with inhibitor arcs, the
//! causal and occurrence net subclasses, and translations between them.

#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod classes;
pub mod cli;
pub mod encode;
pub mod es;
pub mod fixtures;
pub mod format;
pub mod net;
