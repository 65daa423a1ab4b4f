use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PathConstraint;
use crate::exact_math::{Monomial, MultiPoly};

/// `P_{r|h}^{(a,b)}` as the plain sum of path weights over the enumerated family.
pub fn dyck_poly_enum(c: &PathConstraint) -> MultiPoly {
    let mut levels = vec![0u32; c.r];
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    c.for_each(|steps| {
        levels.iter_mut().for_each(|e| *e = 0);
        let mut h = 0usize;
        for s in steps {
            if *s == super::Step::Up {
                h += 1;
                levels[h - 1] += 1;
            } else {
                h -= 1;
            }
        }
        *counts.entry(levels.clone()).or_insert(0) += 1;
    });
    MultiPoly::from_terms(
        counts
            .into_iter()
            .map(|(e, n)| (Monomial::from_dense(&e), BigInt::from(n))),
    )
}

/// Drops every term that involves some `u_k` with `k > h`.
pub fn restrict_height(p: &MultiPoly, h: usize) -> MultiPoly {
    p.retain_terms(|m| m.max_var().is_none_or(|v| v as usize <= h))
}

/// Memo table for the unrestricted polynomials `P_r^{(a,b)}`.
///
/// Safe to share between threads; concurrent misses on the same key may both
/// compute it, and the first stored result wins.
#[derive(Debug, Default)]
pub struct DyckPolyCache {
    table: RwLock<HashMap<(usize, usize, usize), Arc<MultiPoly>>>,
}

impl DyckPolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `P_r^{(a,b)}` from the first-return recurrences.
    ///
    /// Negative indices and `a > r` or `b > r` give the zero polynomial.
    pub fn get(&self, r: i64, a: i64, b: i64) -> Arc<MultiPoly> {
        if r < 0 || a < 0 || b < 0 || a > r || b > r {
            return Arc::new(MultiPoly::zero());
        }
        if r == 0 {
            return Arc::new(MultiPoly::one());
        }
        // every nonempty path starts with an up and ends with a down
        let key = (r as usize, a.max(1) as usize, b.max(1) as usize);
        if let Some(hit) = self.table.read().expect("cache lock poisoned").get(&key) {
            return Arc::clone(hit);
        }
        let value = Arc::new(self.compute(key));
        let mut table = self.table.write().expect("cache lock poisoned");
        Arc::clone(table.entry(key).or_insert(value))
    }

    fn compute(&self, (size, a, b): (usize, usize, usize)) -> MultiPoly {
        // a path of size s + 1 is u·p·d·q with p of size i and q of size s - i
        let s = size as i64 - 1;
        let (a, b) = (a as i64, b as i64);
        let u1 = Monomial::var(1);
        let mut total = MultiPoly::zero();
        if a == 1 && b == 1 {
            for i in 0..=s {
                let raised = self.get(i, 0, 0).shift(1);
                let rest = self.get(s - i, 0, 0);
                total = total + (&raised * &*rest).mul_monomial(&u1);
            }
            return total;
        }
        // q nonempty: p carries the leading ups, q the trailing downs
        for i in 0..s {
            let raised = self.get(i, a - 1, 0);
            if raised.is_zero() {
                continue;
            }
            let rest = self.get(s - i, 0, b);
            if rest.is_zero() {
                continue;
            }
            total = total + (&raised.shift(1) * &*rest).mul_monomial(&u1);
        }
        // q empty: the whole path is p raised by one level
        let whole = self.get(s, a - 1, b - 1);
        total + whole.shift(1).mul_monomial(&u1)
    }
}

fn shared_cache() -> &'static DyckPolyCache {
    static CACHE: OnceLock<DyckPolyCache> = OnceLock::new();
    CACHE.get_or_init(DyckPolyCache::new)
}

/// `P_r^{(a,b)}` by the memoized recurrence, using a process-wide cache.
pub fn dyck_poly_rec(r: i64, a: i64, b: i64) -> MultiPoly {
    (*shared_cache().get(r, a, b)).clone()
}

/// `P_{r|h}^{(a,b)}`: the recurrence result restricted to height `h`.
pub fn dyck_poly(r: usize, h: usize, a: usize, b: usize) -> MultiPoly {
    let full = shared_cache().get(r as i64, a as i64, b as i64);
    if h >= r {
        (*full).clone()
    } else {
        restrict_height(&full, h)
    }
}

/// Both sides of
/// `P_{r+2}^{(a,b)} - P_{r+2}^{(a+2,b)} = u_{a-1} u_a P_r^{(a-2,b)} + (u_a + u_{a+1}) P_{r+1}^{(a,b)}`
/// with `u_k = 0` for `k <= 0`.
pub fn lemma_lhs_rhs(r: i64, a: i64, b: i64) -> (MultiPoly, MultiPoly) {
    let cache = shared_cache();
    let lhs = &*cache.get(r + 2, a, b) - &*cache.get(r + 2, a + 2, b);
    let u = |k: i64| {
        if k >= 1 {
            MultiPoly::var(k as u32)
        } else {
            MultiPoly::zero()
        }
    };
    let rhs = &(&(&u(a - 1) * &u(a)) * &*cache.get(r, a - 2, b))
        + &(&(&u(a) + &u(a + 1)) * &*cache.get(r + 1, a, b));
    (lhs, rhs)
}
