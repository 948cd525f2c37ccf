//! Digit-concatenation constants of additive arithmetic functions.
//!
//! For an additive function `f` (such as `Omega` or `omega`) and a base `b`,
//! the constant `0.(f_y(1))(f_y(2))...` concatenates the last
//! `K_y(n) = ceil(y * lnlnln(n) / ln b)` base-`b` digits of each `f(n)`.
//! This crate builds those digit streams at scale and measures them:
//!
//! * [`additive`]: spec files, exact factoring, a segmented factoring sieve,
//!   and prime moments.
//! * [`digit_stream`]: truncation, the length schedule `K_y`, concatenated and
//!   windowed streams, text and packed binary stream formats.
//! * [`block_stats`]: overlapping block censuses, the indicator-sum count of
//!   in-string occurrences, chi-square uniformity scores.
//! * [`expsum`]: exponential sums `sum e(a f(n) / b^m)`, their
//!   Selberg–Delange main terms, the complex gamma function.
//! * [`classify`]: "almost constant on primes" and "weakly additive"
//!   diagnostics, Erdős–Kac statistics, the high-digit bias demonstration.
//! * [`cli`]: the `additive-digits` command line.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod additive;
pub mod block_stats;
pub mod classify;
pub mod cli;
pub mod digit_stream;
pub mod error;
pub mod expsum;

pub use additive::{AdditiveFunctionSpec, ExecConfig, Value};
pub use digit_stream::{Base, DigitString, LengthSchedule};
pub use error::{Error, Result};
