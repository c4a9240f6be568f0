//! Pass/fail checkers for the volume and positivity identities, plus a
//! seeded random-instance generator and parallel suites.

mod checks;
mod numeric;
mod random;
mod suites;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::class::ClassError;
use crate::positivity::PositivityError;
use crate::rational::{self, Rational};

pub use checks::{
    check_corollary_c, check_corollary_e, check_diskant, check_fujita, check_fujita_sections,
    check_integral_formula, check_kt, check_morse, check_ortho, check_restricted, check_theorem_a,
    check_theorem_d, proportionality, Proportionality,
};
pub use numeric::interpolate;
pub use random::{random_instance, RandomInstance, RandomSpec, Sampler};
pub use suites::{run_suite, CaseResult, SuiteKind, SuiteReport};

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Positivity(#[from] PositivityError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("interpolation did not stabilize after {0} halvings")]
    NotStabilized(u32),
    #[error("integration grid exhausted at depth {0}")]
    GridExhausted(u32),
}

impl From<crate::polytope::GeometryError> for VerifyError {
    fn from(e: crate::polytope::GeometryError) -> Self {
        VerifyError::Positivity(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    HoldsWithEquality,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self != Verdict::Fails
    }

    /// Verdict of an exact inequality `margin >= 0`.
    pub fn of_margin(margin: &Rational) -> Self {
        use num_traits::{Signed, Zero};
        if margin.is_zero() {
            Verdict::HoldsWithEquality
        } else if margin.is_positive() {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn of_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HoldsWithEquality => "holds-with-equality",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Approximate(u32),
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Mode::Exact => s.serialize_str("exact"),
            Mode::Approximate(p) => s.serialize_str(&format!("approximate({p})")),
        }
    }
}

/// An exact rational or a decimal rendering of an enclosure.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Exact(Rational),
    Decimal(String),
}

impl Quantity {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Quantity::Exact(r) => Some(r),
            Quantity::Decimal(_) => None,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(r) => f.write_str(&rational::format_rational(r)),
            Quantity::Decimal(d) => f.write_str(d),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Rational> for Quantity {
    fn from(r: Rational) -> Self {
        Quantity::Exact(r)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionReport {
    pub name: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub margin: Quantity,
    pub verdict: Verdict,
    pub mode: Mode,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl IntersectionReport {
    /// Exact inequality `lhs >= rhs`.
    pub fn inequality(name: &str, lhs: Rational, rhs: Rational) -> Self {
        let margin = &lhs - &rhs;
        Self {
            name: name.into(),
            verdict: Verdict::of_margin(&margin),
            lhs: lhs.into(),
            rhs: rhs.into(),
            margin: margin.into(),
            mode: Mode::Exact,
            details: BTreeMap::new(),
        }
    }

    /// Exact identity `lhs = rhs`.
    pub fn identity(name: &str, lhs: Rational, rhs: Rational) -> Self {
        let margin = &lhs - &rhs;
        Self {
            name: name.into(),
            verdict: Verdict::of_bool(lhs == rhs),
            lhs: lhs.into(),
            rhs: rhs.into(),
            margin: margin.into(),
            mode: Mode::Exact,
            details: BTreeMap::new(),
        }
    }

    pub fn detail(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.details.insert(key.into(), value.to_string());
        self
    }

    pub fn fail_unless(mut self, ok: bool) -> Self {
        if !ok {
            self.verdict = Verdict::Fails;
        }
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivativeReport {
    #[serde(serialize_with = "rational::serialize_rationals")]
    pub direction: Vec<Rational>,
    /// The right derivative; the left one is reported separately.
    #[serde(serialize_with = "rational::serialize_rational")]
    pub exact_derivative: Rational,
    #[serde(serialize_with = "rational::serialize_rational")]
    pub left_derivative: Rational,
    #[serde(serialize_with = "rational::serialize_rational")]
    pub formula_value: Rational,
    /// Half-widths of the certified windows `[0, ε]` and `[-ε, 0]`.
    #[serde(serialize_with = "rational::serialize_rationals")]
    pub window: Vec<Rational>,
    /// One-sided second derivatives (right, left).
    #[serde(serialize_with = "rational::serialize_rationals")]
    pub second_derivatives: Vec<Rational>,
    pub verdict: Verdict,
}

impl DerivativeReport {
    /// Whether the volume is visibly not twice differentiable at the point.
    pub fn second_order_jump(&self) -> bool {
        self.second_derivatives[0] != self.second_derivatives[1]
    }
}
