use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Product of variables `u_k^e` with `k >= 1` and `e >= 1`.
///
/// Factors are kept sorted by variable index. The [`Ord`] implementation is
/// the canonical term order used for printing and serialization: higher total
/// degree first, then lexicographic with `u1 > u2 > u3 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Self {
            factors: vec![(index, 1)],
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    /// Repeated variables are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut merged: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in pairs {
            assert!(v >= 1, "variable indices start at 1");
            *merged.entry(v).or_insert(0) += e;
        }
        Self {
            factors: merged.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    /// Monomial `u_1^{e[0]} u_2^{e[1]} ...` from a dense exponent vector.
    pub fn from_dense(exponents: &[u32]) -> Self {
        Self {
            factors: exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32 + 1, e))
                .collect(),
        }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        self.factors
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn max_var(&self) -> Option<u32> {
        self.factors.last().map(|&(v, _)| v)
    }

    pub fn min_var(&self) -> Option<u32> {
        self.factors.first().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// Relabels every `u_k` as `u_{k+s}`.
    pub fn shift(&self, s: u32) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|&(v, e)| (v + s, e)).collect(),
        }
    }

    fn fmt_with(&self, prefix: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{prefix}{v}")?;
            } else {
                write!(f, "{prefix}{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match other.degree().cmp(&self.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // `a` has a smaller variable that `b` lacks, so `a` leads
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match eb.cmp(&ea) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with("u", f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with("u", f)
    }
}

/// Sparse polynomial in `u_1, u_2, ...` with big-integer coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn var(index: u32) -> Self {
        Self::from_monomial(Monomial::var(index))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        Self { terms }
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn from_hash(acc: HashMap<Monomial, BigInt>) -> Self {
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn max_var(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }

    pub fn shift(&self, s: u32) -> MultiPoly {
        if s == 0 {
            return self.clone();
        }
        // shifting preserves the relative order of terms
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shift(s), c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> MultiPoly {
        let c = c.into();
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * &c))
                .collect(),
        }
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn retain_terms<F: FnMut(&Monomial) -> bool>(&self, mut keep: F) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation; every variable present must be assigned.
    pub fn substitute(&self, values: &BTreeMap<u32, Rational>) -> Result<Rational> {
        self.evaluate(|v| values.get(&v).cloned())
    }

    /// Exact evaluation with values supplied by a lookup function.
    pub fn evaluate<F: Fn(u32) -> Option<Rational>>(&self, value_of: F) -> Result<Rational> {
        let mut cache: HashMap<u32, Rational> = HashMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = Rational::from_integer(c.clone());
            for &(v, e) in m.factors() {
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value_of(v).ok_or(Error::MissingVariable(v))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                term *= num_traits::pow(x, e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluates every variable at 1, i.e. the sum of coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Renders the polynomial with variables named `{prefix}{index}`.
    pub fn display_with<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        DisplayWith { poly: self, prefix }
    }

    /// Parses the text form written by [`MultiPoly::display_with`], e.g.
    /// `"u1^3 + 2*u1^2*u2 - 3"`. Repeated variables and terms are combined.
    pub fn parse_with(s: &str, prefix: &str) -> Result<MultiPoly> {
        let bad = |what: &str| Error::Parse(format!("{what} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = MultiPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if negative || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = BigInt::one();
            let mut pairs = Vec::new();
            for factor in term.split('*') {
                if let Some(var) = factor.strip_prefix(prefix).filter(|_| !prefix.is_empty()) {
                    let (idx, exp) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let idx: u32 = idx.parse().map_err(|_| bad("bad variable index"))?;
                    if idx == 0 {
                        return Err(bad("variable index 0"));
                    }
                    pairs.push((idx, exp));
                } else {
                    let c: BigInt = factor.parse().map_err(|_| bad("bad factor"))?;
                    coeff *= c;
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }

    pub fn to_json_terms(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .map(|(m, c)| PolyTerm {
                coeff: c.to_string(),
                exponents: m.factors().iter().map(|&(v, e)| [v, e]).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[PolyTerm]) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for t in terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if t.exponents.iter().any(|&[v, _]| v == 0) {
                return Err(Error::Parse("variable index 0 is not allowed".into()));
            }
            out.add_term(
                Monomial::from_pairs(t.exponents.iter().map(|&[v, e]| (v, e))),
                c,
            );
        }
        Ok(out)
    }
}

struct DisplayWith<'a> {
    poly: &'a MultiPoly,
    prefix: &'a str,
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                m.fmt_with(self.prefix, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("u").fmt(f)
    }
}

impl std::str::FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiPoly::parse_with(s, "u")
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON shape of one polynomial term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub coeff: String,
    pub exponents: Vec<[u32; 2]>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<PolyTerm>::deserialize(deserializer)?;
        MultiPoly::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(rhs.len()).min(1 << 16));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                *acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += prod;
            }
        }
        MultiPoly::from_hash(acc)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rational::int;
    use proptest::prelude::*;

    fn u(k: u32) -> MultiPoly {
        MultiPoly::var(k)
    }

    fn p2() -> MultiPoly {
        &u(1) * &u(1) + &u(1) * &u(2)
    }

    #[test]
    fn add_identity_and_cancellation() {
        assert_eq!(u(1) + MultiPoly::zero(), u(1));
        let lhs = p2() + (-(&u(1) * &u(2)));
        assert_eq!(lhs, &u(1) * &u(1));
        assert_eq!(lhs.len(), 1);
    }

    #[test]
    fn doubling_p2() {
        let twice = p2() + p2();
        assert_eq!(twice.to_string(), "2*u1^2 + 2*u1*u2");
    }

    #[test]
    fn products() {
        assert_eq!(&u(1) * &u(2), MultiPoly::from_monomial(Monomial::from_dense(&[1, 1])));
        // u1 * (u1^2 + u1 u2), expanded term by term
        let expected = MultiPoly::from_terms([
            (Monomial::from_dense(&[3]), BigInt::one()),
            (Monomial::from_dense(&[2, 1]), BigInt::one()),
        ]);
        assert_eq!(&u(1) * &p2(), expected);
        assert_eq!((&u(1) * &p2()).to_string(), "u1^3 + u1^2*u2");
    }

    #[test]
    fn shifting_relabels_indices() {
        assert_eq!(u(1).shift(1), u(2));
        assert_eq!(p2().shift(1).to_string(), "u2^2 + u2*u3");
        assert_eq!(p2().shift(2).to_string(), "u3^2 + u3*u4");
    }

    #[test]
    fn substitution() {
        let vals: BTreeMap<u32, Rational> = [(1, int(2))].into_iter().collect();
        assert_eq!(u(1).substitute(&vals).unwrap(), int(2));
        let vals: BTreeMap<u32, Rational> = [(1, int(2)), (2, int(2))].into_iter().collect();
        assert_eq!(p2().substitute(&vals).unwrap(), int(8));
        let only_u1: BTreeMap<u32, Rational> = [(1, int(2))].into_iter().collect();
        assert_eq!(p2().substitute(&only_u1), Err(Error::MissingVariable(2)));
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let mut ms = [Monomial::from_dense(&[1, 1, 1]),
            Monomial::from_dense(&[3]),
            Monomial::from_dense(&[1, 2]),
            Monomial::from_dense(&[2, 1]),
            Monomial::from_dense(&[1]),
            Monomial::one(),
            Monomial::from_dense(&[0, 0, 1])];
        ms.sort();
        let rendered: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            rendered,
            ["u1^3", "u1^2*u2", "u1*u2^2", "u1*u2*u3", "u1", "u3", "1"]
        );
    }

    #[test]
    fn display_signs_and_constants() {
        let p = MultiPoly::constant(3) - &u(2).scale(2);
        assert_eq!(p.to_string(), "-2*u2 + 3");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::one().to_string(), "1");
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&p2()).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"1","exponents":[[1,2]]},{"coeff":"1","exponents":[[1,1],[2,1]]}]"#
        );
        let back: MultiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p2());
        assert!(serde_json::from_str::<MultiPoly>(r#"[{"coeff":"1","exponents":[[0,1]]}]"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (
            -5i64..=5,
            proptest::collection::vec((1u32..=4, 0u32..=3), 0..4),
        );
        proptest::collection::vec(term, 0..6).prop_map(|ts| {
            MultiPoly::from_terms(
                ts.into_iter()
                    .map(|(c, ps)| (Monomial::from_pairs(ps), BigInt::from(c))),
            )
        })
    }

    #[test]
    fn parse_examples() {
        let p: MultiPoly = "u1*u2*u3 + u1*u2^2 + 2*u1^2*u2 + u1^3".parse().unwrap();
        assert_eq!(p.to_string(), "u1^3 + 2*u1^2*u2 + u1*u2^2 + u1*u2*u3");
        assert_eq!("0".parse::<MultiPoly>().unwrap(), MultiPoly::zero());
        assert_eq!("-3 + u2 - u2".parse::<MultiPoly>().unwrap(), MultiPoly::constant(-3));
        assert_eq!(
            MultiPoly::parse_with("t1^3 + 3*t1*t2 + t3", "t").unwrap().display_with("t").to_string(),
            "t1^3 + 3*t1*t2 + t3"
        );
        for bad in ["", "u1 +", "u0", "x1", "u1^", "2**u1"] {
            assert!(bad.parse::<MultiPoly>().is_err(), "{bad:?}");
        }
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly()) {
            prop_assert_eq!(p.to_string().parse::<MultiPoly>().unwrap(), p);
        }

        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
            prop_assert!((&p - &p).is_zero());
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn substitution_is_a_ring_homomorphism(
            p in arb_poly(),
            q in arb_poly(),
            vals in proptest::collection::vec((-6i64..=6, 1i64..=4), 4),
        ) {
            let map: BTreeMap<u32, Rational> = vals
                .iter()
                .enumerate()
                .map(|(i, &(n, d))| (i as u32 + 1, Rational::new(n.into(), d.into())))
                .collect();
            let sp = p.substitute(&map).unwrap();
            let sq = q.substitute(&map).unwrap();
            prop_assert_eq!((&p * &q).substitute(&map).unwrap(), &sp * &sq);
            prop_assert_eq!((&p + &q).substitute(&map).unwrap(), &sp + &sq);
        }

        #[test]
        fn json_round_trip(p in arb_poly()) {
            let s = serde_json::to_string(&p).unwrap();
            let back: MultiPoly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
            prop_assert_eq!(back, p);
        }
    }
}
