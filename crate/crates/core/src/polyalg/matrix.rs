//! Dense square matrices over a field: determinant and characteristic
//! polynomial. Sizes here stay small (Sylvester matrices of forms of degree
//! at most a few dozen), so plain elimination is enough.

use crate::polyalg::field::Field;
use crate::polyalg::unipoly::UniPoly;

/// Determinant by Gaussian elimination with nonzero pivoting.
pub fn determinant<T: Field>(ctx: &T::Ctx, mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one(ctx);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return T::zero(ctx);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let inv = m[col][col].inv().expect("pivot is nonzero");
        det = det * m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..n {
                let v = m[r][c].clone() - factor.clone() * m[col][c].clone();
                m[r][c] = v;
            }
        }
    }
    det
}

/// Characteristic polynomial `det(t I - M)`, monic of degree `n`.
///
/// Reduces to upper Hessenberg form by similarity, then runs the standard
/// three-term recurrence on the leading principal minors.
pub fn charpoly<T: Field>(ctx: &T::Ctx, mut h: Vec<Vec<T>>) -> UniPoly<T> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = h[m][m - 1].inv().expect("pivot is nonzero");
        for i in m + 1..n {
            if h[i][m - 1].is_zero() {
                continue;
            }
            let u = h[i][m - 1].clone() * inv.clone();
            for j in 0..n {
                let v = h[i][j].clone() - u.clone() * h[m][j].clone();
                h[i][j] = v;
            }
            for row in h.iter_mut() {
                let v = row[m].clone() + u.clone() * row[i].clone();
                row[m] = v;
            }
        }
    }

    // p[k] = charpoly of the leading k x k block.
    let t = UniPoly::x(ctx);
    let mut p: Vec<UniPoly<T>> = vec![UniPoly::one(ctx)];
    for k in 1..=n {
        let diag = &t - &UniPoly::constant(h[k - 1][k - 1].clone());
        let mut next = &diag * &p[k - 1];
        let mut prod = T::one(ctx);
        for i in (1..k).rev() {
            prod = prod * h[i][i - 1].clone();
            let coef = h[i - 1][k - 1].clone() * prod.clone();
            if !coef.is_zero() {
                next = &next - &p[i - 1].scale(&coef);
            }
        }
        p.push(next);
    }
    p.pop().expect("at least the empty minor")
}
