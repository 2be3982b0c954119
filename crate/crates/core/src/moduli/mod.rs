//! The PGL2 action on maps and forms: conjugation, normal forms of the
//! fixed-point configuration, the degree-4 alpha family and automorphisms.

mod alpha;
mod moebius;

pub use alpha::{alpha_family_form, pythagorean_alphas, two_periodic_points, AlphaFamily, TwoPeriodic};
pub use moebius::Moebius;

use std::cmp::Ordering;

use crate::dermap::ProjMap;
use crate::error::{Error, Result};
use crate::polyalg::{rational_roots, squarefree, BiForm, Field, ProjPoint};

/// `g^-1 ∘ phi ∘ g`.
pub fn conjugate_map<T: Field>(phi: &ProjMap<T>, g: &Moebius<T>) -> ProjMap<T> {
    let [a, b, c, d] = g.entries();
    let p = phi.p().substitute(a, b, c, d);
    let q = phi.q().substitute(a, b, c, d);
    let gi = g.inverse();
    let [ia, ib, ic, id] = gi.entries();
    ProjMap::from_coprime(&p.scale(ia) + &q.scale(ib), &p.scale(ic) + &q.scale(id))
}

/// `F ∘ g = F(aX + bY, cX + dY)`, normalized. Its roots are the images of
/// the roots of `F` under `g^-1`, and `phi` of it is the conjugate of `phi_F`.
pub fn conjugate_form<T: Field>(f: &BiForm<T>, g: &Moebius<T>) -> BiForm<T> {
    let [a, b, c, d] = g.entries();
    f.substitute(a, b, c, d).normalized()
}

pub fn is_automorphism<T: Field>(phi: &ProjMap<T>, g: &Moebius<T>) -> bool {
    conjugate_map(phi, g) == *phi
}

/// `chi(g)` with `F ∘ g = chi(g) F`, or `None` when `F` is not semi-invariant.
pub fn invariance_check<T: Field>(f: &BiForm<T>, g: &Moebius<T>) -> Option<T> {
    let [a, b, c, d] = g.entries();
    f.ratio_to(&f.substitute(a, b, c, d))
}

/// The six values `alpha, 1 - alpha, 1/alpha, 1/(1 - alpha), alpha/(alpha - 1),
/// (alpha - 1)/alpha` obtained by relabeling four points, distinct values
/// sorted.
pub fn cross_ratio_orbit<T: Field>(alpha: &T) -> Result<Vec<T>> {
    let ctx = alpha.ctx();
    let one = T::one(&ctx);
    let am1 = alpha.clone() - one.clone();
    if alpha.is_zero() || am1.is_zero() {
        return Err(Error::InvalidParameter("cross ratio must avoid 0 and 1".into()));
    }
    let mut orbit = vec![
        alpha.clone(),
        one.clone() - alpha.clone(),
        alpha.inv()?,
        (one.clone() - alpha.clone()).inv()?,
        alpha.checked_div(&am1)?,
        am1.checked_div(alpha)?,
    ];
    orbit.sort_by(|x, y| x.canonical_cmp(y));
    orbit.dedup();
    Ok(orbit)
}

/// The order in which roots are assigned to `0, 1, infinity`: those three
/// values first (when present), then the remaining affine points ascending.
pub fn canonical_order<T: Field>(points: &mut [ProjPoint<T>]) {
    fn rank<T: Field>(p: &ProjPoint<T>) -> u8 {
        match p.affine_value() {
            None => 2,
            Some(v) if v.is_zero() => 0,
            Some(v) if v.is_one() => 1,
            Some(_) => 3,
        }
    }
    points.sort_by(|p, q| match rank(p).cmp(&rank(q)) {
        Ordering::Equal => p.canonical_cmp(q),
        other => other,
    });
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm<T: Field> {
    /// Images of the fourth and later roots once the first three sit at
    /// `0, 1, infinity`.
    pub alphas: Vec<T>,
    /// Sends the first three ordered roots to `0, 1, infinity`.
    pub moebius: Moebius<T>,
    /// The roots of `F` in the order used.
    pub ordered_points: Vec<ProjPoint<T>>,
    /// `F ∘ g^-1`, whose roots are `0, 1, infinity` and the alphas.
    pub form: BiForm<T>,
    pub cross_ratio_orbits: Vec<Vec<T>>,
}

pub fn normal_form<T: Field>(f: &BiForm<T>) -> Result<NormalForm<T>> {
    let d = f.degree();
    if d < 3 {
        return Err(Error::DegreeTooSmall { op: "normal form", min: 3, got: d });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !squarefree(f) {
        return Err(Error::MultipleRoots);
    }
    let mut points: Vec<ProjPoint<T>> = rational_roots(f)?.into_iter().map(|(p, _)| p).collect();
    if points.len() < d {
        let split = BiForm::from_roots(f.ctx(), &points);
        let rest = f.exact_div(&split).expect("linear factors of roots divide F");
        return Err(Error::IrrationalFixedPoints { factor: rest.normalized().to_string() });
    }
    canonical_order(&mut points);
    let g = Moebius::from_three_points(&points[0], &points[1], &points[2])?;
    let alphas: Vec<T> = points[3..]
        .iter()
        .map(|p| g.apply(p).affine_value().cloned().expect("only the third root goes to infinity"))
        .collect();
    let cross_ratio_orbits = alphas.iter().map(cross_ratio_orbit).collect::<Result<_>>()?;
    Ok(NormalForm { form: conjugate_form(f, &g.inverse()), alphas, moebius: g, ordered_points: points, cross_ratio_orbits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dermap::build_phi;
    use crate::polyalg::{q, q2, Rational};

    fn form(desc: &[i64]) -> BiForm<Rational> {
        BiForm::from_i64s_desc(&(), desc)
    }

    #[test]
    fn conjugation_examples() {
        let swap = ProjMap::new(form(&[0, 1]), form(&[1, 0])).unwrap();
        assert_eq!(conjugate_map(&swap, &Moebius::swap(&())), swap);
        let phi = build_phi(&form(&[1, 0, 0, 0, 1])).unwrap();
        let g = Moebius::diag(q(-1), q(1)).unwrap();
        assert_eq!(conjugate_map(&phi, &g), phi);
        assert_eq!(conjugate_map(&phi, &Moebius::identity(&())), phi);
    }

    #[test]
    fn conjugate_form_examples() {
        let xy = form(&[0, 1, 0]);
        assert_eq!(conjugate_form(&xy, &Moebius::swap(&())), xy);
        // roots {0,1,2,inf}; g sends (0,1,inf) to (1,2,0)
        let f = form(&[0, 1, -3, 2, 0]);
        let g = Moebius::<Rational>::from_i64s(&(), [0, 2, -1, 2]).unwrap();
        let pts = ["0", "1", "inf"].map(|s| ProjPoint::parse(&(), s).unwrap());
        let imgs: Vec<String> = pts.iter().map(|p| g.apply(p).to_string()).collect();
        assert_eq!(imgs, ["1", "2", "0"]);
        let h = conjugate_form(&f, &g);
        assert_eq!(build_phi(&h).unwrap(), conjugate_map(&build_phi(&f).unwrap(), &g));
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&form(&[0, 1, -3, 2, 0])).unwrap();
        assert_eq!(nf.alphas, vec![q(2)]);
        assert!(nf.moebius.is_identity());
        assert_eq!(nf.cross_ratio_orbits[0], vec![q(-1), q2(1, 2), q(2)]);

        let nf = normal_form(&form(&[1, 0, -1, 0])).unwrap();
        assert!(nf.alphas.is_empty());

        // roots {0, 1, inf, 1/2}
        let f = form(&[0, 2, -3, 1, 0]);
        assert_eq!(normal_form(&f).unwrap().alphas, vec![q2(1, 2)]);
    }

    #[test]
    fn normal_form_moves_roots() {
        // roots {-1, 3, 5, 7}
        let f = BiForm::from_roots(&(), &[-1, 3, 5, 7].map(|v| ProjPoint::affine(q(v))));
        let nf = normal_form(&f).unwrap();
        let roots: Vec<ProjPoint<Rational>> = rational_roots(&nf.form).unwrap().into_iter().map(|(p, _)| p).collect();
        let mut expected: Vec<ProjPoint<Rational>> =
            [q(0), q(1), nf.alphas[0].clone()].into_iter().map(ProjPoint::affine).collect();
        expected.sort_by(|a, b| a.canonical_cmp(b));
        expected.push(ProjPoint::infinity(&()));
        assert_eq!(roots, expected);
    }

    #[test]
    fn normal_form_reports_irrational_factor() {
        let f = form(&[1, 0, -2, 0]); // X (X^2 - 2Y^2)
        match normal_form(&f) {
            Err(Error::IrrationalFixedPoints { factor }) => assert_eq!(factor, "X^2 - 2*Y^2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn automorphism_examples() {
        let g = Moebius::diag(q(-1), q(1)).unwrap();
        assert!(is_automorphism(&build_phi(&form(&[1, 0, 0, 0, 1])).unwrap(), &g));
        assert!(!is_automorphism(&build_phi(&form(&[0, 1, -3, 2, 0])).unwrap(), &g));
        let phi = build_phi(&form(&[1, 0, -1])).unwrap();
        assert!(is_automorphism(&phi, &Moebius::identity(&())));
    }

    #[test]
    fn invariance_examples() {
        let g = Moebius::diag(q(-1), q(1)).unwrap();
        let s = Moebius::swap(&());
        assert_eq!(invariance_check(&form(&[1, 0, 0, 0, 1]), &g), Some(q(1)));
        assert_eq!(invariance_check(&form(&[0, 1, 0]), &s), Some(q(1)));
        assert_eq!(invariance_check(&form(&[1, 0, -1]), &s), Some(q(-1)));
        let f = form(&[1, 0, 5, 0]); // X^3 + 5 X Y^2
        assert_eq!(invariance_check(&f, &g), Some(q(-1)));
        assert!(is_automorphism(&build_phi(&f).unwrap(), &g));
        assert_eq!(invariance_check(&form(&[0, 1, -3, 2, 0]), &g), None);
        // The character depends on the representative, not only the class.
        let g2 = Moebius::diag(q(1), q(-1)).unwrap();
        assert_eq!(g, g2);
        assert_eq!(invariance_check(&f, &g2), Some(q(1)));
    }
}
