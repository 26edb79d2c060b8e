use crate::arith::{mat_vec, RMatrix, RVector, Rational};
use crate::error::{Error, Result};
use crate::model::FeasibilityInstance;

/// The splitmix64 generator (Steele, Lea, Flood; Vigna's reference constants).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw from `lo..=hi` as `lo + next_u64() mod (hi - lo + 1)`.
    /// The modulo bias is part of the reproducible contract.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let offset = (self.next_u64() as u128 % span) as i128;
        (lo as i128 + offset) as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Plant {
    None,
    Feasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub m: usize,
    pub n: usize,
    pub num_min: i64,
    pub num_max: i64,
    pub den_min: i64,
    pub den_max: i64,
    pub plant: Plant,
    pub max_dim: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            m: 2,
            n: 2,
            num_min: -9,
            num_max: 9,
            den_min: 1,
            den_max: 4,
            plant: Plant::None,
            max_dim: 12,
        }
    }
}

impl GeneratorConfig {
    pub fn new(seed: u64, m: usize, n: usize) -> Self {
        GeneratorConfig {
            seed,
            m,
            n,
            ..Default::default()
        }
    }

    pub fn planted(mut self) -> Self {
        self.plant = Plant::Feasible;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m", self.m), ("n", self.n)] {
            if v == 0 || v > self.max_dim {
                return Err(Error::Config(format!(
                    "{name} = {v} is outside 1..={}",
                    self.max_dim
                )));
            }
        }
        if self.num_min > self.num_max {
            return Err(Error::Config("empty numerator range".into()));
        }
        if self.den_min < 1 || self.den_min > self.den_max {
            return Err(Error::Config(
                "denominator range must be a nonempty range of positive integers".into(),
            ));
        }
        Ok(())
    }

    fn draw(&self, rng: &mut SplitMix64, num_lo: i64, num_hi: i64) -> Rational {
        let p = rng.next_in(num_lo, num_hi);
        let q = rng.next_in(self.den_min, self.den_max);
        Rational::new(p, q).expect("positive denominator")
    }
}

pub fn gen_instance(cfg: &GeneratorConfig) -> Result<FeasibilityInstance> {
    gen_planted(cfg).map(|(inst, _)| inst)
}

/// Generates an instance and, under [`Plant::Feasible`], the planted solution.
///
/// Stream order: `x*` (planted only, `n` draws), then `A` row-major, then
/// either `b` (`m` draws) or the planted slacks `δ`. Each rational is a
/// numerator draw followed by a denominator draw. Planted slacks take their
/// numerator from `0..=max(num_max, 0)`, and `bᵢ = (Ax*)ᵢ - δᵢ`.
pub fn gen_planted(cfg: &GeneratorConfig) -> Result<(FeasibilityInstance, Option<RVector>)> {
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let xstar = match cfg.plant {
        Plant::Feasible => Some(RVector::new(
            (0..cfg.n)
                .map(|_| cfg.draw(&mut rng, cfg.num_min, cfg.num_max))
                .collect(),
        )?),
        Plant::None => None,
    };
    let entries = (0..cfg.m * cfg.n)
        .map(|_| cfg.draw(&mut rng, cfg.num_min, cfg.num_max))
        .collect();
    let a = RMatrix::new(cfg.m, cfg.n, entries)?;
    let b = match &xstar {
        None => RVector::new(
            (0..cfg.m)
                .map(|_| cfg.draw(&mut rng, cfg.num_min, cfg.num_max))
                .collect(),
        )?,
        Some(x) => {
            let ax = mat_vec(&a, x)?;
            let top = cfg.num_max.max(0);
            RVector::new(ax.iter().map(|v| v - cfg.draw(&mut rng, 0, top)).collect())?
        }
    };
    Ok((FeasibilityInstance::new(a, b)?, xstar))
}
