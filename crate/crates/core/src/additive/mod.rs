//! Additive functions and their bulk evaluation.

pub mod factor;
mod histogram;
mod moments;
pub mod primes;
mod sieve;
mod spec;

pub use histogram::ValueHistogram;
pub use moments::{prime_moments, PrimeMoments};
pub use sieve::{
    map_segments, sieve_range, ExecConfig, FactoredRange, RangeValues, DEFAULT_MEMORY_BUDGET,
    DEFAULT_SEGMENT_LEN,
};
pub use spec::{evaluate, AdditiveFunctionSpec, Mode, PrimeRule, Value, ValueKind, MAX_INTEGER_VALUE};
