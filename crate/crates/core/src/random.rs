//! Seeded generators for forms, Moebius transformations, curves and
//! parameters. All randomized checks draw from a `ChaCha8Rng` so runs are
//! reproducible from the seed.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::lattes::EllCurve;
use crate::moduli::Moebius;
use crate::polyalg::{squarefree, BiForm, Field, ProjPoint, Rational};

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A form of degree `d` with coefficients drawn from `-bound..=bound`,
/// redrawn until it is squarefree.
pub fn squarefree_form<T: Field>(rng: &mut Rng8, ctx: &T::Ctx, d: usize, bound: i64) -> BiForm<T> {
    loop {
        let coeffs = (0..=d).map(|_| T::from_i64(ctx, rng.gen_range(-bound..=bound))).collect();
        let f = BiForm::from_ascending(ctx, coeffs);
        if !f.is_zero() && squarefree(&f) {
            return f;
        }
    }
}

pub fn moebius<T: Field>(rng: &mut Rng8, ctx: &T::Ctx, bound: i64) -> Moebius<T> {
    loop {
        let e = [(); 4].map(|_| rng.gen_range(-bound..=bound));
        if let Ok(g) = Moebius::from_i64s(ctx, e) {
            return g;
        }
    }
}

pub fn curve<T: Field>(rng: &mut Rng8, ctx: &T::Ctx, bound: i64) -> EllCurve<T> {
    loop {
        let [a, b, c] = [(); 3].map(|_| rng.gen_range(-bound..=bound));
        if let Ok(e) = EllCurve::from_i64s(ctx, a, b, c) {
            return e;
        }
    }
}

/// `p/q` with `|p| <= bound`, `1 <= q <= bound`, avoiding 0 and 1.
pub fn alpha(rng: &mut Rng8, bound: i64) -> Rational {
    loop {
        let p = rng.gen_range(-bound..=bound);
        let q = rng.gen_range(1..=bound);
        if p != 0 && p != q {
            return crate::polyalg::q2(p, q);
        }
    }
}

/// `k` distinct points with numerators and denominators up to `bound`;
/// infinity is appended when `with_infinity` is set.
pub fn distinct_points(rng: &mut Rng8, k: usize, bound: i64, with_infinity: bool) -> Vec<ProjPoint<Rational>> {
    let mut pts: Vec<ProjPoint<Rational>> = Vec::with_capacity(k + 1);
    while pts.len() < k {
        let p = ProjPoint::affine(crate::polyalg::q2(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound)));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    if with_infinity {
        pts.push(ProjPoint::infinity(&()));
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_forms() {
        let a: Vec<_> = (0..5).map({
            let mut r = rng(7);
            move |_| squarefree_form::<Rational>(&mut r, &(), 4, 9)
        }).collect();
        let b: Vec<_> = (0..5).map({
            let mut r = rng(7);
            move |_| squarefree_form::<Rational>(&mut r, &(), 4, 9)
        }).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|f| f.degree() == 4 && squarefree(f)));
    }

    #[test]
    fn points_are_distinct() {
        let pts = distinct_points(&mut rng(1), 6, 3, true);
        for (i, p) in pts.iter().enumerate() {
            assert!(!pts[..i].contains(p));
        }
        assert!(pts.last().unwrap().is_infinity());
    }
}
