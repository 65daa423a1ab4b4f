//! Weighted Dyck path combinatorics.
//!
//! A Dyck path of size `r` is a word of `r` up steps and `r` down steps whose
//! every prefix has at least as many ups as downs. An up step ending at height
//! `k` sits at level `k` and contributes the variable `u_k` to the path weight.
//! Dyck polynomials sum these weights over families of paths constrained by
//! height and by the number of leading ups and trailing downs.

mod polys;
mod series;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_math::Monomial;

pub use polys::{
    dyck_poly, dyck_poly_enum, dyck_poly_rec, lemma_lhs_rhs, restrict_height, DyckPolyCache,
};
pub use series::{gen_series, u_segment_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path of up and down steps that never drops below the axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) {
            return Err(Error::InvalidWord(format!("odd length {}", steps.len())));
        }
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::InvalidWord(format!(
                    "prefix of length {} goes below the axis",
                    i + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidWord(format!("path ends at height {h}")));
        }
        Ok(Self { steps })
    }

    /// Height-1 zigzag `udud...ud` of size `r`.
    pub fn zigzag(r: usize) -> Self {
        Self {
            steps: (0..r).flat_map(|_| [Step::Up, Step::Down]).collect(),
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn height(&self) -> usize {
        let mut h = 0usize;
        let mut max = 0;
        for s in &self.steps {
            match s {
                Step::Up => {
                    h += 1;
                    max = max.max(h);
                }
                Step::Down => h -= 1,
            }
        }
        max
    }

    /// Product of `u_k` over the up steps, `k` being the level the step ends at.
    pub fn weight(&self) -> Monomial {
        let mut levels = vec![0u32; self.height()];
        let mut h = 0usize;
        for s in &self.steps {
            match s {
                Step::Up => {
                    h += 1;
                    levels[h - 1] += 1;
                }
                Step::Down => h -= 1,
            }
        }
        Monomial::from_dense(&levels)
    }

    pub fn leading_ups(&self) -> usize {
        self.steps.iter().take_while(|&&s| s == Step::Up).count()
    }

    pub fn trailing_downs(&self) -> usize {
        self.steps.iter().rev().take_while(|&&s| s == Step::Down).count()
    }

    /// Lengths of the maximal runs of consecutive up steps, left to right.
    pub fn u_segments(&self) -> Vec<usize> {
        self.steps
            .split(|&s| s == Step::Down)
            .map(<[Step]>::len)
            .filter(|&len| len > 0)
            .collect()
    }

    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| if *s == Step::Up { 'u' } else { 'd' })
            .collect()
    }

    pub fn parse_word(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'u' => Ok(Step::Up),
                'd' => Ok(Step::Down),
                other => Err(Error::InvalidWord(format!(
                    "character {other:?} at position {i}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_word(s)
    }
}

/// The path family `D_{r|h}^{(a,b)}`: size `r`, height at most `h`, at least
/// `a` leading ups and at least `b` trailing downs.
///
/// `h >= r` is the same as no height restriction. `a > r` or `b > r` is a
/// valid constraint describing the empty family, as is `h = 0` with `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathConstraint {
    pub r: usize,
    pub h: usize,
    pub a: usize,
    pub b: usize,
}

impl PathConstraint {
    pub fn new(r: usize, h: usize, a: usize, b: usize) -> Self {
        Self { r, h, a, b }
    }

    pub fn unrestricted(r: usize) -> Self {
        Self::new(r, r, 0, 0)
    }

    pub fn with_ends(r: usize, a: usize, b: usize) -> Self {
        Self::new(r, r, a, b)
    }

    pub fn with_height(r: usize, h: usize) -> Self {
        Self::new(r, h, 0, 0)
    }

    pub fn contains(&self, p: &DyckPath) -> bool {
        p.size() == self.r
            && p.height() <= self.h
            && p.leading_ups() >= self.a
            && p.trailing_downs() >= self.b
    }

    /// Visits every member in lexicographic word order (`u < d`).
    pub(crate) fn for_each<F: FnMut(&[Step])>(&self, mut visit: F) {
        let r = self.r;
        if self.a > r || self.b > r {
            return;
        }
        let len = 2 * r;
        let mut buf = Vec::with_capacity(len);
        walk(self, len, 0, 0, &mut buf, &mut visit);
    }
}

fn walk<F: FnMut(&[Step])>(
    c: &PathConstraint,
    len: usize,
    height: usize,
    ups: usize,
    buf: &mut Vec<Step>,
    visit: &mut F,
) {
    let pos = buf.len();
    if pos == len {
        visit(buf);
        return;
    }
    let tail_start = len - c.b;
    let forced_up = pos < c.a;
    let forced_down = pos >= tail_start;
    // an up step must leave room to come back down, and to sit at height
    // exactly `b` when the forced tail of downs begins
    let up_ok = !forced_down
        && ups < c.r
        && height < c.h
        && height < len - pos - 1
        && (pos + 1 > tail_start || height < tail_start - pos - 1 + c.b);
    if up_ok {
        buf.push(Step::Up);
        walk(c, len, height + 1, ups + 1, buf, visit);
        buf.pop();
    }
    if !forced_up && height > 0 {
        let fits_tail = pos + 1 > tail_start || height - 1 + (tail_start - pos - 1) >= c.b;
        if fits_tail {
            buf.push(Step::Down);
            walk(c, len, height - 1, ups, buf, visit);
            buf.pop();
        }
    }
}

/// All members of `D_{r|h}^{(a,b)}`, in lexicographic word order with `u < d`.
pub fn enumerate(c: &PathConstraint) -> Vec<DyckPath> {
    let mut out = Vec::new();
    c.for_each(|steps| {
        out.push(DyckPath {
            steps: steps.to_vec(),
        })
    });
    out
}

pub fn count(c: &PathConstraint) -> u64 {
    let mut n = 0u64;
    c.for_each(|_| n += 1);
    n
}

pub fn catalan(r: u64) -> BigUint {
    // C_r = binom(2r, r) / (r + 1)
    let mut c = BigUint::one();
    for i in 0..r {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(c: PathConstraint) -> Vec<String> {
        enumerate(&c).iter().map(DyckPath::word).collect()
    }

    #[test]
    fn size_three_words() {
        assert_eq!(
            words(PathConstraint::unrestricted(3)),
            ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]
        );
    }

    #[test]
    fn empty_path_only_for_size_zero() {
        let all = enumerate(&PathConstraint::unrestricted(0));
        assert_eq!(all, vec![DyckPath::empty()]);
        assert_eq!(count(&PathConstraint::new(0, 0, 0, 0)), 1);
        assert_eq!(count(&PathConstraint::new(0, 0, 1, 0)), 0);
    }

    #[test]
    fn height_zero_with_positive_size_is_empty() {
        assert_eq!(count(&PathConstraint::new(4, 0, 0, 0)), 0);
    }

    #[test]
    fn restricted_counts() {
        assert_eq!(count(&PathConstraint::with_height(3, 2)), 4);
        assert_eq!(count(&PathConstraint::with_height(3, 1)), 1);
        assert_eq!(count(&PathConstraint::with_ends(5, 3, 2)), 10);
        assert_eq!(count(&PathConstraint::with_ends(2, 3, 0)), 0);
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        // every binary word of length 2r, filtered by the definition
        for r in 0..=6usize {
            let mut all = Vec::new();
            for mask in 0u32..(1 << (2 * r)) {
                let steps: Vec<Step> = (0..2 * r)
                    .rev()
                    .map(|i| if mask >> i & 1 == 0 { Step::Up } else { Step::Down })
                    .collect();
                if let Ok(p) = DyckPath::from_steps(steps) {
                    all.push(p);
                }
            }
            all.sort();
            for h in 0..=r + 1 {
                for a in 0..=r + 1 {
                    for b in 0..=r + 1 {
                        let c = PathConstraint::new(r, h, a, b);
                        let expected: Vec<DyckPath> =
                            all.iter().filter(|p| c.contains(p)).cloned().collect();
                        assert_eq!(enumerate(&c), expected, "{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn heights() {
        let p: DyckPath = "uududduudd".parse().unwrap();
        assert_eq!(p.height(), 2);
        assert_eq!(DyckPath::empty().height(), 0);
        let hs: Vec<usize> = enumerate(&PathConstraint::unrestricted(3))
            .iter()
            .map(DyckPath::height)
            .collect();
        assert_eq!(hs, [3, 2, 2, 2, 1]);
    }

    #[test]
    fn weights() {
        let p: DyckPath = "uududduudd".parse().unwrap();
        assert_eq!(p.weight(), Monomial::from_dense(&[2, 3]));
        let ws: Vec<String> = enumerate(&PathConstraint::unrestricted(3))
            .iter()
            .map(|p| p.weight().to_string())
            .collect();
        assert_eq!(ws, ["u1*u2*u3", "u1*u2^2", "u1^2*u2", "u1^2*u2", "u1^3"]);
        assert_eq!(DyckPath::parse_word("ud").unwrap().weight(), Monomial::var(1));
        assert!(DyckPath::empty().weight().is_one());
    }

    #[test]
    fn words_round_trip_and_reject_garbage() {
        let p = DyckPath::parse_word("uududduudd").unwrap();
        assert_eq!(p.word(), "uududduudd");
        assert_eq!(DyckPath::parse_word("").unwrap(), DyckPath::empty());
        assert_eq!(DyckPath::parse_word(&"ud".repeat(4)).unwrap(), DyckPath::zigzag(4));
        assert_eq!(DyckPath::zigzag(4).height(), 1);
        for bad in ["udu", "du", "uxdd", "uudddu", "uuud"] {
            assert!(
                matches!(DyckPath::parse_word(bad), Err(Error::InvalidWord(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn segments() {
        let p = DyckPath::parse_word("uududduudd").unwrap();
        assert_eq!(p.u_segments(), [2, 1, 2]);
        assert_eq!(p.leading_ups(), 2);
        assert_eq!(p.trailing_downs(), 2);
        assert!(DyckPath::empty().u_segments().is_empty());
    }

    #[test]
    fn catalan_numbers() {
        let first: Vec<u64> = (0..=10)
            .map(|r| catalan(r).try_into().unwrap())
            .collect();
        assert_eq!(first, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }
}
