//! Randomized property suites over seeded inputs.
//!
//! Each suite draws its inputs from [`crate::random`] and records one line
//! per failing trial, so a report with no failures is a complete pass.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::dermap::{
    build_phi, fixed_points, multiplier, periodic_report, product_formula, psi_sequence, res_disc_check, AffineMap,
    DEFAULT_SIZE_CAP,
};
use crate::error::{Error, Result};
use crate::moduli::{conjugate_form, conjugate_map};
use crate::polyalg::{BiForm, Field, UniPoly};
use crate::random::{self, Rng8};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Euler's relation and the fixed-point form of `phi_F`.
    Euler,
    /// `Res(phi_F) = (-1)^(d(d-1)/2) d^(d-2) Disc(F)`.
    ResDisc,
    /// Conjugating `phi_F` is `phi` of the conjugated form.
    Family,
    /// Exactness and degree law of the `Psi_n` recursion.
    Psi,
    /// Multiplier charpoly, the fixed-point relation and the product formula.
    Multipliers,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Euler, Suite::ResDisc, Suite::Family, Suite::Psi, Suite::Multipliers];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Euler => "euler",
            Suite::ResDisc => "resdisc",
            Suite::Family => "family",
            Suite::Psi => "psi",
            Suite::Multipliers => "multipliers",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> usize {
        self.trials - self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

const COEFF_BOUND: i64 = 9;

/// Degree in `lo..=hi` not divisible by the characteristic.
fn degree<T: Field>(rng: &mut Rng8, ctx: &T::Ctx, lo: usize, hi: usize) -> usize {
    let p = T::characteristic(ctx);
    loop {
        let d = rng.gen_range(lo..=hi);
        if p == 0 || !(d as u64).is_multiple_of(p) {
            return d;
        }
    }
}

pub fn run<T: Field>(suite: Suite, ctx: &T::Ctx, seed: u64, trials: usize) -> CheckReport {
    let mut rng = random::rng(seed);
    let mut failures = Vec::new();
    for i in 0..trials {
        let outcome = match suite {
            Suite::Euler => euler_trial::<T>(&mut rng, ctx),
            Suite::ResDisc => resdisc_trial::<T>(&mut rng, ctx),
            Suite::Family => family_trial::<T>(&mut rng, ctx),
            Suite::Psi => psi_trial::<T>(&mut rng, ctx),
            Suite::Multipliers => multipliers_trial::<T>(&mut rng, ctx),
        };
        match outcome {
            Ok(None) => {}
            Ok(Some(msg)) => failures.push(format!("trial {i}: {msg}")),
            Err(e) => failures.push(format!("trial {i}: error: {e}")),
        }
    }
    CheckReport { suite, seed, trials, failures }
}

type Trial = Result<Option<String>>;

fn euler_trial<T: Field>(rng: &mut Rng8, ctx: &T::Ctx) -> Trial {
    let d = degree::<T>(rng, ctx, 3, 8);
    let f = random::squarefree_form::<T>(rng, ctx, d, COEFF_BOUND);
    if !euler_holds(&f) {
        return Ok(Some(format!("Euler relation fails for {f}")));
    }
    if !build_phi(&f)?.fixed_point_form().is_scalar_multiple_of(&f) {
        return Ok(Some(format!("fixed-point form not proportional to {f}")));
    }
    Ok(None)
}

fn resdisc_trial<T: Field>(rng: &mut Rng8, ctx: &T::Ctx) -> Trial {
    let d = degree::<T>(rng, ctx, 3, 8);
    let f = random::squarefree_form::<T>(rng, ctx, d, COEFF_BOUND);
    let r = res_disc_check(&f)?;
    Ok((!r.holds).then(|| format!("{f}: Res = {}, Disc = {}", r.res, r.disc)))
}

fn family_trial<T: Field>(rng: &mut Rng8, ctx: &T::Ctx) -> Trial {
    let d = degree::<T>(rng, ctx, 3, 6);
    let f = random::squarefree_form::<T>(rng, ctx, d, COEFF_BOUND);
    let g = random::moebius::<T>(rng, ctx, 5);
    let lhs = build_phi(&conjugate_form(&f, &g))?;
    let rhs = conjugate_map(&build_phi(&f)?, &g);
    Ok((lhs != rhs).then(|| format!("closure fails for F = {f}, g = {g}")))
}

fn psi_trial<T: Field>(rng: &mut Rng8, ctx: &T::Ctx) -> Trial {
    let d = degree::<T>(rng, ctx, 3, 4);
    let n = rng.gen_range(1..=3);
    let f = random::squarefree_form::<T>(rng, ctx, d, COEFF_BOUND);
    let phi = build_phi(&f)?;
    let dd = T::from_i64(ctx, d as i64);
    for step in psi_sequence(&f, n, DEFAULT_SIZE_CAP)? {
        if !step.degree_law_holds() {
            return Ok(Some(format!("{f}: deg Psi_{} = {}, expected {}", step.n, step.degree(), step.expected_degree)));
        }
        let iterate = AffineMap::new(step.a.clone(), step.b.clone())?;
        if iterate != phi.iterate(step.n, DEFAULT_SIZE_CAP)?.to_affine() {
            return Ok(Some(format!("{f}: A_{0}/B_{0} is not the iterate", step.n)));
        }
        // phi~^n(x) - x = d Psi^_n / B_n
        let x = UniPoly::x(ctx);
        let diff = AffineMap::new(&step.a - &(&x * &step.b), step.b.clone())?;
        let scaled = step.psi.scale(&(dd.clone() * step.psi_scale.clone()));
        if diff != AffineMap::new(scaled, step.b.clone())? {
            return Ok(Some(format!("{f}: iterate minus x differs from d Psi_{}/B_{}", step.n, step.n)));
        }
    }
    Ok(None)
}

fn multipliers_trial<T: Field>(rng: &mut Rng8, ctx: &T::Ctx) -> Trial {
    let d = degree::<T>(rng, ctx, 3, 5);
    let f = random::squarefree_form::<T>(rng, ctx, d, COEFF_BOUND);
    let phi = build_phi(&f)?;
    let one_minus_d = T::from_i64(ctx, 1 - d as i64);

    let r1 = periodic_report(&f, 1, DEFAULT_SIZE_CAP)?;
    let k = r1.psi.degree().unwrap_or(0);
    let expected = UniPoly::linear_root(&one_minus_d).pow(k);
    if r1.multiplier_charpoly != expected {
        return Ok(Some(format!("{f}: charpoly {} is not (t - (1-d))^{k}", r1.multiplier_charpoly)));
    }

    let report = fixed_points(&phi)?;
    if report.all_rational {
        if let Some(sum) = &report.relation_sum {
            if !sum.is_one() {
                return Ok(Some(format!("{f}: sum 1/(1 - lambda) = {sum}")));
            }
        }
    }

    for n in 1..=2 {
        let rep = periodic_report(&f, n, DEFAULT_SIZE_CAP)?;
        for (pt, m) in &rep.rational_points {
            if *m != multiplier(&phi, pt, n)? {
                return Ok(Some(format!("{f}: reported multiplier differs at {pt}")));
            }
            if let Some(x) = pt.affine_value() {
                if let Some(pf) = product_formula(&f, x, n) {
                    if pf != *m {
                        return Ok(Some(format!("{f}: product formula {pf} vs chain rule {m} at {pt}, n = {n}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Euler's relation `X F_X + Y F_Y = d F`.
pub fn euler_holds<T: Field>(f: &BiForm<T>) -> bool {
    let (fx, fy) = f.partials();
    &fx.times_x() + &fy.times_y() == f.scale(&T::from_i64(f.ctx(), f.degree() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{Fp, Modulus, Rational};

    #[test]
    fn suites_pass_over_q() {
        for suite in Suite::ALL {
            let r = run::<Rational>(suite, &(), 11, 8);
            assert!(r.ok(), "{suite}: {:?}", r.failures);
        }
    }

    #[test]
    fn suites_pass_over_f101() {
        let p = Modulus::new(101).unwrap();
        for suite in Suite::ALL {
            let r = run::<Fp>(suite, &p, 5, 6);
            assert!(r.ok(), "{suite}: {:?}", r.failures);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
