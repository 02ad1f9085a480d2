//! Generating-function kernels in `t` whose Taylor coefficients at a fixed
//! rational `z` reproduce `Li_{-n}(z)`.
//!
//! Coefficient relations, with `c_n` the coefficient of `t^n`:
//!
//! | kernel | `n >= 1`                  | `n = 0`               |
//! |--------|---------------------------|-----------------------|
//! | `Ka`   | `n! c_n = Li_{-n}(z)`     | `c_0 = 1 + Li_0(z)`   |
//! | `Kb`   | `n! c_n = (-1)^n Li_{-n}` | `c_0 = Li_0(z)`       |
//! | `Kc`   | `n! c_n = (-1)^n Li_{-n}` | `c_0 = 1 + Li_0(z)`   |
//! | `Kd`   | `n! c_n = Li_{-n}(z)`     | `c_0 = 1/2 + Li_0(z)` |
//! | `Kp`   | `n! c_n = Li_{-n}(z)`     | not pinned            |

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{GaussianRational, Rational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::eval::eval_exact;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GFKernel {
    /// `1/(1 - z e^t)`
    Ka,
    /// `z/(e^t - z)`
    Kb,
    /// `e^t/(e^t - z)`, the `t`-derivative of `log(e^t - z)`.
    Kc,
    /// `(1/2)(1 + z e^t)/(1 - z e^t)`
    Kd,
    /// `(i/2) P(-i w, i t/2)` with `P(x,t) = (x + tan t)/(1 - x tan t)` and
    /// `w = (1+z)/(1-z)`, expanded over the Gaussian rationals.
    Kp,
}

impl GFKernel {
    pub const ALL: [GFKernel; 5] = [GFKernel::Ka, GFKernel::Kb, GFKernel::Kc, GFKernel::Kd, GFKernel::Kp];

    pub fn name(self) -> &'static str {
        match self {
            GFKernel::Ka => "K_a",
            GFKernel::Kb => "K_b",
            GFKernel::Kc => "K_c",
            GFKernel::Kd => "K_d",
            GFKernel::Kp => "K_P",
        }
    }
}

impl fmt::Display for GFKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GFKernel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s) || k.name().replace('_', "").eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown kernel {s:?}"))
    }
}

/// Exact Taylor coefficients `c_0..c_order` of `kernel` at the point `z`.
pub fn gf_taylor(kernel: GFKernel, z: &Rational, order: usize) -> Result<Vec<Rational>> {
    if z.is_one() {
        return Err(Error::PoleAtUnity { order: 0 });
    }
    let exp = TruncatedSeries::<Rational>::exp(order);
    let one = TruncatedSeries::one(order);
    let z_exp = exp.scale(z);
    let z_const = TruncatedSeries::constant(z.clone(), order);
    let series = match kernel {
        GFKernel::Ka => (&one - &z_exp).inverse()?,
        GFKernel::Kb => &z_const * &(&exp - &z_const).inverse()?,
        GFKernel::Kc => &exp * &(&exp - &z_const).inverse()?,
        GFKernel::Kd => {
            let half = Rational::new(1.into(), 2.into());
            (&(&one + &z_exp) * &(&one - &z_exp).inverse()?).scale(&half)
        }
        GFKernel::Kp => return kp_taylor(z, order),
    };
    Ok(series.into_coeffs())
}

fn kp_taylor(z: &Rational, order: usize) -> Result<Vec<Rational>> {
    type G = GaussianRational;
    let lift = |r: Rational| G::new(r, Rational::zero());
    let i = G::new(Rational::zero(), Rational::one());
    let w = (Rational::one() + z) / (Rational::one() - z);
    let x = TruncatedSeries::constant(-(i.clone() * lift(w)), order);
    let one = TruncatedSeries::<G>::one(order);
    // tan(i t/2) = i (e^t - 1)/(e^t + 1)
    let exp = TruncatedSeries::<G>::exp(order);
    let tan = (&(&exp - &one) * &(&exp + &one).inverse()?).scale(&i);
    let p = &(&x + &tan) * &(&one - &(&x * &tan)).inverse()?;
    let half_i = i * lift(Rational::new(1.into(), 2.into()));
    let series = p.scale(&half_i);
    series
        .into_coeffs()
        .into_iter()
        .map(|c| {
            if c.im.is_zero() {
                Ok(c.re)
            } else {
                Err(Error::NonVanishingImaginaryPart { order })
            }
        })
        .collect()
}

/// The value `n! c_n` is pinned to for `kernel` at `z`, or `None` where no
/// relation is stated (`Kp` at `n = 0`).
pub fn pinned_egf_value(kernel: GFKernel, n: usize, z: &Rational) -> Result<Option<Rational>> {
    let li = eval_exact(n, z)?;
    let alternating = if n.is_multiple_of(2) { li.clone() } else { -li.clone() };
    let value = match (kernel, n) {
        (GFKernel::Ka | GFKernel::Kc, 0) => Rational::one() + li,
        (GFKernel::Kd, 0) => Rational::new(1.into(), 2.into()) + li,
        (GFKernel::Kp, 0) => return Ok(None),
        (GFKernel::Kb, _) | (GFKernel::Kc, _) => alternating,
        (GFKernel::Ka | GFKernel::Kd | GFKernel::Kp, _) => li,
    };
    Ok(Some(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factorial, int, rat};

    fn egf(c: &[Rational], n: usize) -> Rational {
        &c[n] * Rational::from_integer(factorial(n))
    }

    #[test]
    fn spot_values() {
        let kb = gf_taylor(GFKernel::Kb, &rat(1, 2), 0).unwrap();
        assert_eq!(kb, vec![int(1)]);
        let ka = gf_taylor(GFKernel::Ka, &rat(1, 2), 2).unwrap();
        assert_eq!(egf(&ka, 2), int(6));
        let kd = gf_taylor(GFKernel::Kd, &rat(1, 3), 1).unwrap();
        assert_eq!(kd[1], rat(3, 4));
        let ka = gf_taylor(GFKernel::Ka, &rat(1, 3), 4).unwrap();
        assert_eq!(ka[0], rat(3, 2));
    }

    #[test]
    fn relations_hold() {
        for z in [rat(1, 3), rat(-2, 5), int(3)] {
            for kernel in GFKernel::ALL {
                let c = gf_taylor(kernel, &z, 12).unwrap();
                for n in 0..=12 {
                    if let Some(v) = pinned_egf_value(kernel, n, &z).unwrap() {
                        assert_eq!(egf(&c, n), v, "{kernel} n={n} z={z}");
                    }
                }
            }
        }
    }

    #[test]
    fn kp_matches_kd() {
        let z = rat(1, 3);
        assert_eq!(gf_taylor(GFKernel::Kp, &z, 10).unwrap(), gf_taylor(GFKernel::Kd, &z, 10).unwrap());
    }

    #[test]
    fn pole_rejected() {
        for kernel in GFKernel::ALL {
            assert_eq!(gf_taylor(kernel, &int(1), 4), Err(Error::PoleAtUnity { order: 0 }));
        }
    }

    #[test]
    fn kernel_names_parse() {
        assert_eq!("K_P".parse::<GFKernel>().unwrap(), GFKernel::Kp);
        assert_eq!("ka".parse::<GFKernel>().unwrap(), GFKernel::Ka);
    }
}
