//! Seeded random fans and classes.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::class::ToricClass;
use crate::fan::Fan;
use crate::positivity;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub dim: usize,
    pub subdivisions: usize,
    pub value_range: u32,
}

impl RandomSpec {
    pub fn new(seed: u64, dim: usize) -> Self {
        Self { seed, dim, subdivisions: 0, value_range: 16 }
    }

    pub fn with_subdivisions(mut self, subdivisions: usize) -> Self {
        self.subdivisions = subdivisions;
        self
    }

    pub fn with_value_range(mut self, value_range: u32) -> Self {
        self.value_range = value_range.max(1);
        self
    }
}

#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub spec: RandomSpec,
    pub fan: Arc<Fan>,
    pub classes: Vec<ToricClass>,
}

/// A fan drawn from a `RandomSpec` together with the RNG stream that produced it,
/// for drawing further classes.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    pub fan: Arc<Fan>,
    range: i64,
}

impl Sampler {
    /// Base fan is projective space when bit 1 of the seed is clear and a
    /// product of lines otherwise; then `subdivisions` stellar subdivisions
    /// at uniformly drawn cones of dimension at least 2.
    pub fn new(spec: &RandomSpec) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let mut fan = if (spec.seed >> 1) & 1 == 0 {
            Fan::projective_space(spec.dim)
        } else {
            Fan::product_of_lines(spec.dim)
        };
        for _ in 0..spec.subdivisions {
            let faces = fan.faces(2);
            let face = &faces[rng.gen_range(0..faces.len())];
            fan = fan.stellar_subdivision(face).expect("stellar subdivision of a valid fan").0;
        }
        Self { rng, fan: Arc::new(fan), range: spec.value_range.max(1) as i64 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `p/q` with `|p| <= range` and `1 <= q <= range`.
    pub fn value(&mut self) -> Rational {
        let p = self.rng.gen_range(-self.range..=self.range);
        let q = self.rng.gen_range(1..=self.range);
        Rational::new(p.into(), q.into())
    }

    pub fn integer(&mut self) -> Rational {
        Rational::from_integer(self.rng.gen_range(-self.range..=self.range).into())
    }

    pub fn class(&mut self) -> ToricClass {
        let values = (0..self.fan.rays().len()).map(|_| self.value()).collect();
        ToricClass::new(self.fan.clone(), values).unwrap()
    }

    pub fn integral_class(&mut self) -> ToricClass {
        let values = (0..self.fan.rays().len()).map(|_| self.integer()).collect();
        ToricClass::new(self.fan.clone(), values).unwrap()
    }

    fn ample(&self) -> ToricClass {
        ToricClass::ample(self.fan.clone())
    }

    /// Adds the fan's ample class until `accept` holds.
    fn push_until(&self, mut c: ToricClass, accept: impl Fn(&ToricClass) -> bool) -> ToricClass {
        let omega = self.ample();
        while !accept(&c) {
            c = c.add(&omega).unwrap();
        }
        c
    }

    pub fn big(&mut self) -> ToricClass {
        let c = self.class();
        self.push_until(c, positivity::is_big)
    }

    pub fn integral_big(&mut self) -> ToricClass {
        let c = self.integral_class();
        let omega = self.ample();
        if omega.values().iter().all(|v| v.is_integer()) {
            self.push_until(c, positivity::is_big)
        } else {
            let den = crate::rational::common_denominator(omega.values());
            let w = omega.scale(&Rational::from_integer(den));
            let mut c = c;
            while !positivity::is_big(&c) {
                c = c.add(&w).unwrap();
            }
            c
        }
    }

    /// Psef classes; every fourth draw lands on the boundary of the psef
    /// cone as `α - slope(α, β)·β`.
    pub fn psef(&mut self) -> ToricClass {
        if self.rng.gen_range(0..4) == 0 {
            let a = self.big();
            let b = self.big();
            let s = positivity::slope(&a, &b).expect("big classes have a slope");
            return a.add_scaled(&-s, &b).unwrap();
        }
        let c = self.class();
        self.push_until(c, positivity::is_psef)
    }

    /// Nef classes `γ + C·ω` with `C` minimal.
    pub fn nef(&mut self) -> ToricClass {
        let c = self.class();
        c.nef_difference(None).expect("fan carries an ample class").positive
    }

    pub fn big_nef(&mut self) -> ToricClass {
        let c = self.nef();
        self.push_until(c, positivity::is_big)
    }

    pub fn ray(&mut self) -> usize {
        self.rng.gen_range(0..self.fan.rays().len())
    }
}

/// The fan of a `RandomSpec` plus three arbitrary classes on it.
pub fn random_instance(spec: &RandomSpec) -> RandomInstance {
    let mut s = Sampler::new(spec);
    let classes = (0..3).map(|_| s.class()).collect();
    RandomInstance { spec: *spec, fan: s.fan.clone(), classes }
}
