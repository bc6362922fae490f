//! Exact computation with Collatz up-down words.
//!
//! A Collatz sequence walks the map `c -> 3c+1` (odd `c`, letter `u`) or
//! `c -> c/2` (even `c`, letter `d`). Fixing a finite up-down word, the start
//! values `M` and end values `N` of all sequences realizing that word form
//! arithmetic progressions with steps `2^D` and `3^S` (`D` downs, `S` ups).
//! This crate computes those realization families exactly — via coupled
//! recurrences, their closed-form solution, and a general construction built
//! on a solver for `3^m x - 2^n y = c` — and cross-checks everything against
//! a brute-force trajectory oracle. It also builds and analyzes the Collatz
//! tree (the preimage tree rooted at 8).
//!
//! All arithmetic is arbitrary precision; there is no floating point and no
//! silent overflow anywhere.
//!
//! ```
//! use collatz_words::{engine, pattern, words};
//!
//! let word = words::parse_word("sdsds").unwrap();
//! let family = pattern::general_families(word.as_tuple().unwrap());
//! let (m, n) = family.member(3);
//! let trajectory = engine::run_word(&m, &word).unwrap();
//! assert_eq!(trajectory.end(), &n);
//! assert_eq!(m, 97u32.into());
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `collatz-words` binary exposes the same functionality as subcommands.

pub mod arith;
pub mod cli;
pub mod diophantine;
pub mod engine;
pub mod pattern;
pub mod tree;
pub mod words;

pub use engine::{run_word, Trajectory};
pub use pattern::{general_families, RealizationFamily};
pub use words::{parse_word, Word};
