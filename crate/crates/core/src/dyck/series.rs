use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{enumerate, PathConstraint};
use crate::exact_math::{Monomial, MultiPoly};

/// Coefficients of `t^0 ..= t^order` of the continued fraction
/// `1 / (1 - t u_1 / (1 - t u_2 / ( ... / (1 - t u_N))))` with `N = n_vars`.
///
/// The coefficient of `t^r` is the Dyck polynomial `P_{r|N}`.
pub fn gen_series(order: usize, n_vars: usize) -> Vec<MultiPoly> {
    let len = order + 1;
    let mut inner = vec![MultiPoly::zero(); len];
    inner[0] = MultiPoly::one();
    // innermost level first: G_k = 1 / (1 - t u_k G_{k+1}), with G_{N+1} = 1
    for level in (1..=n_vars as u32).rev() {
        let weighted: Vec<MultiPoly> = inner
            .iter()
            .map(|c| c.mul_monomial(&Monomial::var(level)))
            .collect();
        // F = 1 + t (u_k G_{k+1}) F, solved coefficient by coefficient
        let mut f: Vec<MultiPoly> = Vec::with_capacity(len);
        f.push(MultiPoly::one());
        for m in 1..len {
            let mut c = MultiPoly::zero();
            for i in 0..m {
                if weighted[i].is_zero() || f[m - 1 - i].is_zero() {
                    continue;
                }
                c = c + &weighted[i] * &f[m - 1 - i];
            }
            f.push(c);
        }
        inner = f;
    }
    inner
}

/// `Q_r`: sum over Dyck paths of size `r` of `prod_i t_i^{alpha_i}`, where
/// `alpha_i` counts the maximal up-runs of length `i`. Variable `k` of the
/// returned polynomial stands for `t_k`.
pub fn u_segment_poly(r: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for p in enumerate(&PathConstraint::unrestricted(r)) {
        let m = Monomial::from_pairs(p.u_segments().into_iter().map(|len| (len as u32, 1)));
        out.add_term(m, BigInt::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{catalan, dyck_poly_rec, restrict_height};

    #[test]
    fn leading_coefficients() {
        let g = gen_series(2, 2);
        assert_eq!(g[0], MultiPoly::one());
        assert_eq!(g[1], MultiPoly::var(1));
        assert_eq!(g[2].to_string(), "u1^2 + u1*u2");
    }

    #[test]
    fn full_p5_at_five_variables() {
        let g = gen_series(5, 5);
        assert_eq!(g[5], dyck_poly_rec(5, 0, 0));
        assert_eq!(g[5].len(), 16);
    }

    #[test]
    fn one_variable_gives_zigzag_only() {
        let g = gen_series(7, 1);
        for (r, c) in g.iter().enumerate() {
            assert_eq!(*c, MultiPoly::var(1).pow(r as u32));
        }
    }

    #[test]
    fn no_variables_truncates_to_one() {
        let g = gen_series(3, 0);
        assert_eq!(g, vec![MultiPoly::one(), MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero()]);
    }

    #[test]
    fn series_matches_restricted_dyck_polynomials() {
        for n_vars in 0..=8 {
            let g = gen_series(8, n_vars);
            for (r, c) in g.iter().enumerate() {
                assert_eq!(*c, restrict_height(&dyck_poly_rec(r as i64, 0, 0), n_vars));
            }
        }
    }

    #[test]
    fn segment_polynomials() {
        assert_eq!(u_segment_poly(0), MultiPoly::one());
        assert_eq!(u_segment_poly(2).display_with("t").to_string(), "t1^2 + t2");
        assert_eq!(
            u_segment_poly(3).display_with("t").to_string(),
            "t1^3 + 3*t1*t2 + t3"
        );
        for r in 0..=9 {
            assert_eq!(
                u_segment_poly(r).coefficient_sum(),
                BigInt::from(catalan(r as u64))
            );
        }
    }
}
