//! Seeded randomized suites, run in parallel across seeds.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::*;
use super::random::{RandomSpec, Sampler};
use super::{Verdict, VerifyError};
use crate::class::ToricClass;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    TheoremA,
    Orthogonality,
    Fujita,
    Kt,
    Diskant,
    TheoremD,
    Integral,
    Restricted,
    CorollaryC,
    Morse,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 10] = [
        SuiteKind::TheoremA,
        SuiteKind::Orthogonality,
        SuiteKind::Fujita,
        SuiteKind::Kt,
        SuiteKind::Diskant,
        SuiteKind::TheoremD,
        SuiteKind::Integral,
        SuiteKind::Restricted,
        SuiteKind::CorollaryC,
        SuiteKind::Morse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::TheoremA => "theorem-a",
            SuiteKind::Orthogonality => "orthogonality",
            SuiteKind::Fujita => "fujita",
            SuiteKind::Kt => "kt",
            SuiteKind::Diskant => "diskant",
            SuiteKind::TheoremD => "theorem-d",
            SuiteKind::Integral => "integral",
            SuiteKind::Restricted => "restricted",
            SuiteKind::CorollaryC => "corollary-c",
            SuiteKind::Morse => "morse",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Case count used by the full `suite` run in each dimension.
    pub fn default_count(self, dim: usize) -> u64 {
        match (self, dim) {
            (SuiteKind::TheoremA, 2) => 200,
            (SuiteKind::TheoremA, _) => 50,
            (SuiteKind::Diskant, 2) | (SuiteKind::TheoremD, _) | (SuiteKind::Restricted, _) => 100,
            (SuiteKind::Diskant, _) | (SuiteKind::Integral, _) => 25,
            (SuiteKind::CorollaryC, _) => 50,
            _ => 200,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub seed: u64,
    pub verdict: Verdict,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    pub dim: usize,
    pub base_seed: u64,
    pub passed: usize,
    pub failed: usize,
    /// Cases whose exact verdict was an equality.
    pub equalities: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Subdivision count cycles with the seed so both smooth and subdivided
/// fans occur.
pub(crate) fn spec_for(seed: u64, dim: usize) -> RandomSpec {
    let subdivisions = if dim <= 2 { (seed / 4 % 3) as usize } else { (seed / 4 % 2) as usize };
    RandomSpec::new(seed, dim).with_subdivisions(subdivisions)
}

pub(crate) fn proportional_partner(s: &mut Sampler, alpha: &ToricClass) -> ToricClass {
    let c = Rational::new(s.rng().gen_range(1..=6i64).into(), s.rng().gen_range(1..=3i64).into());
    let dim = alpha.dim();
    let shift: Vec<Rational> = (0..dim).map(|_| Rational::from_integer(s.rng().gen_range(-3..=3i64).into())).collect();
    alpha.scale(&c).add_linear(&shift)
}

fn run_case(kind: SuiteKind, seed: u64, dim: usize) -> Result<CaseResult, VerifyError> {
    let mut s = Sampler::new(&spec_for(seed, dim));
    let precision = 60;
    let (verdict, summary) = match kind {
        SuiteKind::TheoremA => {
            let a = s.big();
            let g = s.class();
            let r = check_theorem_a(&a, &g)?;
            (r.verdict, format!("derivative {} / {} vs {}", r.exact_derivative, r.left_derivative, r.formula_value))
        }
        SuiteKind::Orthogonality => {
            let a = s.psef();
            let r = check_ortho(&a)?;
            (r.verdict, format!("{} = {}", r.lhs, r.rhs))
        }
        SuiteKind::Fujita => {
            let a = s.psef();
            let r = check_fujita(&a)?;
            (r.verdict, format!("{} = {}", r.lhs, r.rhs))
        }
        SuiteKind::Kt => {
            let tuple: Vec<ToricClass> = (0..dim).map(|_| s.psef()).collect();
            let r = check_kt(&tuple)?;
            // Repeated arguments (α, …, α, β): equality iff proportional.
            let a = s.big_nef();
            let b = if seed.is_multiple_of(3) { proportional_partner(&mut s, &a) } else { s.big_nef() };
            let mut rep = vec![a.clone(); dim - 1];
            rep.push(b.clone());
            let eq = check_kt(&rep)?;
            let prop = proportionality(&a, &b)?;
            let equality = eq.margin.exact().is_some_and(num_traits::Zero::is_zero);
            let ok = r.verdict.passed() && eq.verdict.passed() && equality == prop.proportional;
            let v = if ok { r.verdict } else { Verdict::Fails };
            (v, format!("margin {}; repeated margin {} proportional {}", r.margin, eq.margin, prop.proportional))
        }
        SuiteKind::Diskant => {
            let a = s.big_nef();
            let b = if seed.is_multiple_of(5) { proportional_partner(&mut s, &a) } else { s.big_nef() };
            let r = check_diskant(&a, &b, precision)?;
            let prop = proportionality(&a, &b)?;
            // Proportional pairs give equality; the converse fails (e.g. when
            // Nw(α) = s·Nw(β) + segment), so it is only recorded.
            let ok = r.verdict.passed() && (!prop.proportional || r.verdict == Verdict::HoldsWithEquality);
            (if ok { r.verdict } else { Verdict::Fails }, format!("margin {} proportional {}", r.margin, prop.proportional))
        }
        SuiteKind::TheoremD => {
            let a = s.big_nef();
            let b = if seed.is_multiple_of(3) { proportional_partner(&mut s, &a) } else { s.big_nef() };
            let d = check_theorem_d(&a, &b)?;
            let e = check_corollary_e(&a, &b, precision)?;
            let ok = d.verdict.passed() && e.verdict.passed();
            let v = if !ok { Verdict::Fails } else { e.verdict };
            (v, format!("conditions {:?}; concavity margin {}", d.details, e.margin))
        }
        SuiteKind::Integral => {
            let a = s.big_nef();
            let b = s.big_nef();
            let r = check_integral_formula(&a, &b, 4, 9)?;
            (r.verdict, format!("{} vs {}", r.lhs, r.rhs))
        }
        SuiteKind::Restricted => {
            let a = s.big();
            let rho = s.ray();
            let r = check_restricted(&a, rho)?;
            (r.verdict, format!("ray {rho}: {} vs {}", r.lhs, r.rhs))
        }
        SuiteKind::CorollaryC => {
            let a = s.big();
            let rho = s.ray();
            let r = check_corollary_c(&a, rho)?;
            (r.verdict, format!("ray {rho}: {} vs {}", r.lhs, r.rhs))
        }
        SuiteKind::Morse => {
            let a = s.nef();
            let b = s.nef();
            let r = check_morse(&a, &b)?;
            (r.verdict, format!("{} >= {}", r.lhs, r.rhs))
        }
    };
    Ok(CaseResult { seed, verdict, summary })
}

/// Runs `count` cases with seeds `base_seed..base_seed + count`; results
/// are sorted by seed.
pub fn run_suite(kind: SuiteKind, dim: usize, count: u64, base_seed: u64) -> SuiteReport {
    let mut cases: Vec<CaseResult> = (0..count)
        .into_par_iter()
        .map(|i| {
            let seed = base_seed.wrapping_add(i);
            run_case(kind, seed, dim)
                .unwrap_or_else(|e| CaseResult { seed, verdict: Verdict::Fails, summary: format!("error: {e}") })
        })
        .collect();
    cases.sort_by_key(|c| c.seed);
    let failed = cases.iter().filter(|c| !c.verdict.passed()).count();
    let equalities = cases.iter().filter(|c| c.verdict == Verdict::HoldsWithEquality).count();
    SuiteReport { suite: kind, dim, base_seed, passed: cases.len() - failed, failed, equalities, cases }
}
