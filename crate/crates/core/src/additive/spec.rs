//! Additive function specifications.
//!
//! An additive function is fixed by its values on prime powers. A spec
//! records how those values are produced: a rule for `f(p)`, a mode that
//! extends it to higher powers, and an optional table of explicit `f(p^k)`
//! overrides.
//!
//! # Spec file format
//!
//! Plain text, one `key = value` entry per line; `#` starts a comment.
//!
//! ```text
//! # f(p) = 1 except at a few primes, f(2^2) pinned
//! mode = table-with-default
//! c = 1
//! 3 = 2          # f(3) = 2
//! 2^2 = 5        # f(4) = 5
//! ```
//!
//! * `mode`: `completely-additive`, `strongly-additive` or `table-with-default`.
//! * `c`: the nominal constant on primes; also the default `f(p)`.
//! * `p = v`: sets `f(p)` for a prime `p`.
//! * `p^k = v`: sets `f(p^k)` (only allowed in `table-with-default` mode).
//!
//! Any other key is an error. When every value is an integer the spec is
//! integer-valued and is evaluated in exact 64-bit arithmetic. When `c` is
//! absent it is estimated as the median of `f(p)` over `p <= 10^5`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use super::factor::{factorize, is_prime};
use super::primes::for_each_prime_below;
use crate::error::{Error, Result};

/// Largest value accepted for an integer-valued spec, so sums of up to 64
/// prime-power values cannot overflow a `u64` and every value is exact in
/// binary64.
pub const MAX_INTEGER_VALUE: f64 = 9_007_199_254_740_992.0; // 2^53

const C_ESTIMATE_BOUND: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `f(p^k) = k f(p)`
    CompletelyAdditive,
    /// `f(p^k) = f(p)`
    StronglyAdditive,
    /// `f(p^k)` from the override table, falling back to `k f(p)`.
    TableWithDefault,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::CompletelyAdditive => "completely-additive",
            Mode::StronglyAdditive => "strongly-additive",
            Mode::TableWithDefault => "table-with-default",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "completely-additive" => Ok(Mode::CompletelyAdditive),
            "strongly-additive" => Ok(Mode::StronglyAdditive),
            "table-with-default" => Ok(Mode::TableWithDefault),
            other => Err(Error::Config(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Integer,
    Real,
}

/// How `f(p)` is produced.
#[derive(Clone)]
pub enum PrimeRule {
    /// `f(p) = c` for every prime.
    Constant,
    /// Explicit values, `c` elsewhere.
    Table(BTreeMap<u64, f64>),
    /// Arbitrary rule; must return finite non-negative values.
    Function(Arc<dyn Fn(u64) -> f64 + Send + Sync>),
}

impl fmt::Debug for PrimeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeRule::Constant => f.write_str("Constant"),
            PrimeRule::Table(t) => f.debug_tuple("Table").field(t).finish(),
            PrimeRule::Function(_) => f.write_str("Function(..)"),
        }
    }
}

/// A value of an additive function: exact for integer-valued specs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Int(u64),
    Real(f64),
}

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Int(v) => v as f64,
            Value::Real(v) => v,
        }
    }

    /// `floor(value)`, saturating at `u64::MAX`.
    pub fn floor(self) -> u64 {
        match self {
            Value::Int(v) => v,
            Value::Real(v) => v.floor() as u64,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Real(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AdditiveFunctionSpec {
    name: String,
    mode: Mode,
    prime_rule: PrimeRule,
    c: f64,
    c_estimated: bool,
    overrides: BTreeMap<(u64, u32), f64>,
    kind: ValueKind,
}

fn is_integral(v: f64) -> bool {
    v.fract() == 0.0 && v <= MAX_INTEGER_VALUE
}

fn check_value(v: f64, what: &str) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::Config(format!(
            "{what} must be a finite non-negative number, got {v}"
        )));
    }
    Ok(())
}

impl AdditiveFunctionSpec {
    /// `Omega(n)`: prime factors counted with multiplicity.
    pub fn big_omega() -> Self {
        Self::simple("Omega", Mode::CompletelyAdditive, 1.0)
    }

    /// `omega(n)`: distinct prime factors.
    pub fn omega() -> Self {
        Self::simple("omega", Mode::StronglyAdditive, 1.0)
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self::simple("zero", Mode::CompletelyAdditive, 0.0)
    }

    fn simple(name: &str, mode: Mode, c: f64) -> Self {
        AdditiveFunctionSpec {
            name: name.to_string(),
            mode,
            prime_rule: PrimeRule::Constant,
            c,
            c_estimated: false,
            overrides: BTreeMap::new(),
            kind: ValueKind::Integer,
        }
    }

    /// Looks up a built-in by name (`Omega`, `omega`, `zero`).
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "Omega" => Some(Self::big_omega()),
            "omega" => Some(Self::omega()),
            "zero" => Some(Self::zero()),
            _ => None,
        }
    }

    /// A built-in name or, failing that, a path to a spec file.
    pub fn resolve(source: &str) -> Result<Self> {
        match Self::builtin(source) {
            Some(spec) => Ok(spec),
            None => Self::from_file(source),
        }
    }

    /// A real-valued spec whose prime values come from `rule`.
    pub fn from_fn(
        name: &str,
        mode: Mode,
        c: f64,
        rule: impl Fn(u64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        check_value(c, "c")?;
        if mode == Mode::TableWithDefault {
            return Err(Error::Config(
                "function rules support completely- or strongly-additive modes only".into(),
            ));
        }
        Ok(AdditiveFunctionSpec {
            name: name.to_string(),
            mode,
            prime_rule: PrimeRule::Function(Arc::new(rule)),
            c,
            c_estimated: false,
            overrides: BTreeMap::new(),
            kind: ValueKind::Real,
        })
    }

    /// Builds a spec from explicit tables. `c = None` estimates `c` as the
    /// median of `f(p)` over `p <= 10^5`.
    pub fn from_tables(
        name: &str,
        mode: Mode,
        c: Option<f64>,
        prime_values: BTreeMap<u64, f64>,
        overrides: BTreeMap<(u64, u32), f64>,
    ) -> Result<Self> {
        if let Some(c) = c {
            check_value(c, "c")?;
        }
        for (&p, &v) in &prime_values {
            if !is_prime(p) {
                return Err(Error::Config(format!("prime rule key {p} is not prime")));
            }
            check_value(v, &format!("f({p})"))?;
        }
        for (&(p, k), &v) in &overrides {
            if !is_prime(p) || k == 0 {
                return Err(Error::Config(format!("override key {p}^{k} is not a prime power")));
            }
            check_value(v, &format!("f({p}^{k})"))?;
            if mode != Mode::TableWithDefault && k >= 2 {
                return Err(Error::Config(format!(
                    "override {p}^{k} conflicts with {} mode",
                    mode.as_str()
                )));
            }
        }
        // k = 1 overrides are just prime values
        let mut prime_values = prime_values;
        let mut overrides = overrides;
        overrides.retain(|&(p, k), v| {
            if k == 1 {
                prime_values.insert(p, *v);
                false
            } else {
                true
            }
        });
        let integral = c.is_none_or(is_integral)
            && prime_values.values().all(|&v| is_integral(v))
            && overrides.values().all(|&v| is_integral(v));
        let mut spec = AdditiveFunctionSpec {
            name: name.to_string(),
            mode,
            prime_rule: if prime_values.is_empty() {
                PrimeRule::Constant
            } else {
                PrimeRule::Table(prime_values)
            },
            c: c.unwrap_or(0.0),
            c_estimated: c.is_none(),
            overrides,
            kind: if integral { ValueKind::Integer } else { ValueKind::Real },
        };
        if c.is_none() {
            spec.c = spec.estimate_c();
            if spec.kind == ValueKind::Integer && !is_integral(spec.c) {
                spec.kind = ValueKind::Real;
            }
        }
        if spec.kind == ValueKind::Integer && spec.mode == Mode::CompletelyAdditive {
            // k f(p) must stay exact for every k <= 64
            let max_p = spec.max_listed_prime_value();
            if max_p * 64.0 > MAX_INTEGER_VALUE {
                spec.kind = ValueKind::Real;
            }
        }
        Ok(spec)
    }

    fn max_listed_prime_value(&self) -> f64 {
        match &self.prime_rule {
            PrimeRule::Table(t) => t.values().fold(self.c, |a, &b| a.max(b)),
            _ => self.c,
        }
    }

    /// Median of `f(p)` over `p <= 10^5` (the lower median for even counts).
    fn estimate_c(&self) -> f64 {
        let mut values = Vec::new();
        for_each_prime_below(C_ESTIMATE_BOUND + 1, |p| values.push(self.prime_value(p)));
        values.sort_by(f64::total_cmp);
        values[(values.len() - 1) / 2]
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Config(format!("cannot read spec file {}: {e}", path.display()))
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "custom".into());
        Self::parse(&name, &text)
    }

    /// Parses the plain-text spec format described in the module docs.
    pub fn parse(name: &str, text: &str) -> Result<Self> {
        let mut mode = None;
        let mut c = None;
        let mut prime_values = BTreeMap::new();
        let mut overrides = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = |v: &str| -> Result<f64> {
                v.parse::<f64>()
                    .map_err(|_| err(format!("`{v}` is not a number")))
            };
            match key {
                "mode" => {
                    if mode.is_some() {
                        return Err(err("duplicate `mode`".into()));
                    }
                    mode = Some(value.parse::<Mode>().map_err(|e| err(e.to_string()))?);
                }
                "c" => {
                    if c.is_some() {
                        return Err(err("duplicate `c`".into()));
                    }
                    c = Some(number(value)?);
                }
                _ => {
                    let (p, k) = match key.split_once('^') {
                        Some((p, k)) => (p.trim(), Some(k.trim())),
                        None => (key, None),
                    };
                    let p: u64 = p
                        .parse()
                        .map_err(|_| err(format!("unknown key `{key}`")))?;
                    let v = number(value)?;
                    let dup = match k {
                        None => prime_values.insert(p, v).is_some(),
                        Some(k) => {
                            let k: u32 = k
                                .parse()
                                .map_err(|_| err(format!("bad exponent in `{key}`")))?;
                            overrides.insert((p, k), v).is_some()
                        }
                    };
                    if dup {
                        return Err(err(format!("duplicate entry `{key}`")));
                    }
                }
            }
        }
        let mode = mode.ok_or_else(|| Error::Config("spec file is missing `mode`".into()))?;
        Self::from_tables(name, mode, c, prime_values, overrides)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The nominal constant on primes.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Whether `c` was estimated rather than supplied.
    pub fn c_estimated(&self) -> bool {
        self.c_estimated
    }

    pub fn kind(&self) -> ValueKind {
        self.kind
    }

    pub fn is_integer(&self) -> bool {
        self.kind == ValueKind::Integer
    }

    pub fn prime_rule(&self) -> &PrimeRule {
        &self.prime_rule
    }

    /// `f(p)`.
    pub fn prime_value(&self, p: u64) -> f64 {
        match &self.prime_rule {
            PrimeRule::Constant => self.c,
            PrimeRule::Table(t) => t.get(&p).copied().unwrap_or(self.c),
            PrimeRule::Function(rule) => {
                let v = rule(p);
                debug_assert!(v.is_finite() && v >= 0.0, "f({p}) = {v}");
                v
            }
        }
    }

    /// `f(p^k)` for `k >= 1`; `f(p^0) = 0`.
    pub fn value_at(&self, p: u64, k: u32) -> f64 {
        if k == 0 {
            return 0.0;
        }
        if let Some(&v) = self.overrides.get(&(p, k)) {
            return v;
        }
        let fp = self.prime_value(p);
        match self.mode {
            Mode::StronglyAdditive => fp,
            Mode::CompletelyAdditive | Mode::TableWithDefault => k as f64 * fp,
        }
    }

    /// `f(p^k)` as an exact integer. Only meaningful for integer specs.
    pub fn int_value_at(&self, p: u64, k: u32) -> u64 {
        debug_assert!(self.is_integer());
        self.value_at(p, k) as u64
    }

    /// `f(p^k)` wrapped in the spec's value kind.
    pub fn typed_value_at(&self, p: u64, k: u32) -> Value {
        match self.kind {
            ValueKind::Integer => Value::Int(self.int_value_at(p, k)),
            ValueKind::Real => Value::Real(self.value_at(p, k)),
        }
    }

    /// `f(n)` by factoring `n`.
    pub fn evaluate(&self, n: u64) -> Value {
        assert!(n >= 1, "additive functions are defined on n >= 1");
        let factors = factorize(n);
        match self.kind {
            ValueKind::Integer => Value::Int(
                factors
                    .iter()
                    .map(|&(p, k)| self.int_value_at(p, k))
                    .sum(),
            ),
            ValueKind::Real => Value::Real(
                factors.iter().map(|&(p, k)| self.value_at(p, k)).sum(),
            ),
        }
    }

    /// One-line description used in output headers.
    pub fn describe(&self) -> String {
        format!(
            "{} (mode={}, c={}{}, kind={})",
            self.name,
            self.mode.as_str(),
            self.c,
            if self.c_estimated { " estimated" } else { "" },
            match self.kind {
                ValueKind::Integer => "integer",
                ValueKind::Real => "real",
            }
        )
    }
}

/// `f(n)` for `n >= 1`.
pub fn evaluate(spec: &AdditiveFunctionSpec, n: u64) -> Value {
    spec.evaluate(n)
}
