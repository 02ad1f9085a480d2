use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::algebra::{binomial, Rational};

/// Append-only cache of `B_0..B_N` with `B_1 = -1/2`.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    values: RwLock<Vec<Rational>>,
}

impl BernoulliCache {
    pub const fn new() -> Self {
        BernoulliCache { values: RwLock::new(Vec::new()) }
    }

    pub fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.values.read().unwrap().get(n) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= n {
            // Σ_{k=0..m} C(m+1,k) B_k = 0
            let m = values.len();
            let next = if m == 0 {
                Rational::one()
            } else {
                let acc: Rational = values
                    .iter()
                    .enumerate()
                    .map(|(k, b)| b * Rational::from_integer(binomial(m + 1, k)))
                    .fold(Rational::zero(), |a, x| a + x);
                -acc / Rational::from_integer((m + 1).into())
            };
            values.push(next);
        }
        values[n].clone()
    }
}

static BERNOULLI: BernoulliCache = BernoulliCache::new();

pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.get(n)
}
