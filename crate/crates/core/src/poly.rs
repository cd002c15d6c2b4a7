//! Sparse Laurent polynomials in `q` and `t` with exact integer coefficients.
//!
//! Both polynomial types are generic over the coefficient ring. The engine
//! itself runs on arbitrary-precision integers (see the aliases at the crate
//! root); fixed-width integers are handy for tests and small experiments.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Integer-like coefficient ring usable by the polynomial types.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + Hash + Integer + Signed + FromPrimitive + ToPrimitive
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + fmt::Display + Hash + Integer + Signed + FromPrimitive + ToPrimitive
{
}

/// A monomial `q^a t^b`, ordered lexicographically on `(a, b)`.
pub type Monomial = (i32, i32);

/// A finitely supported sum `Σ c_{a,b} q^a t^b`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    pub fn monomial(c: C, q: i32, t: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((q, t), c);
        p
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// `z = q - q^{-1}`.
    pub fn z() -> Self {
        Self::from_terms([((1, 0), C::one()), ((-1, 0), -C::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of `(q-exponent, t-exponent)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, q: i32, t: i32) -> C {
        self.terms.get(&(q, t)).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<(Monomial, &C)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn trailing(&self) -> Option<(Monomial, &C)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Inclusive range of `t`-exponents, `None` for zero.
    pub fn t_range(&self) -> Option<(i32, i32)> {
        let lo = self.terms.keys().map(|m| m.1).min()?;
        let hi = self.terms.keys().map(|m| m.1).max()?;
        Some((lo, hi))
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|m| m.1 == 0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x.clone() * c.clone())).collect(),
        }
    }

    pub fn shift(&self, dq: i32, dt: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| ((m.0 + dq, m.1 + dt), x.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `q ↦ q^{-1}, t ↦ t^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| ((-m.0, -m.1), x.clone())).collect(),
        }
    }

    /// Value at `q = ±1`, as a Laurent polynomial in `t` (keyed by `t`-exponent).
    fn at_q_sign(&self, negative: bool) -> BTreeMap<i32, C> {
        let mut out: BTreeMap<i32, C> = BTreeMap::new();
        for (m, c) in &self.terms {
            let c = if negative && m.0.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            let e = out.entry(m.1).or_insert_with(C::zero);
            *e = e.clone() + c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Whether `q - q^{-1}` divides `self` in `Z[q^±, t^±]`.
    pub fn divisible_by_z(&self) -> bool {
        self.at_q_sign(false).is_empty() && self.at_q_sign(true).is_empty()
    }

    /// Exact quotient `self / divisor`, or `None` when the division is not exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (lt_b, lc_b) = divisor.leading().map(|(m, c)| (m, c.clone()))?;
        let (lt_a, _) = self.leading()?;
        let (low_a, _) = self.trailing()?;
        let (low_b, _) = divisor.trailing()?;
        let q_hi = (lt_a.0 - lt_b.0, lt_a.1 - lt_b.1);
        let q_lo = (low_a.0 - low_b.0, low_a.1 - low_b.1);
        if q_lo > q_hi {
            return None;
        }
        let (ta, tb) = (self.t_range()?, divisor.t_range()?);
        let t_bounds = (ta.0 - tb.0, ta.1 - tb.1);

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((lt_r, lc_r)) = rem.leading().map(|(m, c)| (m, c.clone())) {
            let m = (lt_r.0 - lt_b.0, lt_r.1 - lt_b.1);
            if m < q_lo || m > q_hi || m.1 < t_bounds.0 || m.1 > t_bounds.1 {
                return None;
            }
            let (c, r) = lc_r.div_rem(&lc_b);
            if !r.is_zero() {
                return None;
            }
            rem -= &divisor.shift(m.0, m.1).scale(&c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Convert the coefficient ring.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<C: Coefficient> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<C: Coefficient> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term((ma.0 + mb.0, ma.1 + mb.1), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $f:ident) => {
        impl<C: Coefficient> $tr for $ty<C> {
            type Output = $ty<C>;
            fn $f(self, rhs: $ty<C>) -> $ty<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(LaurentPoly, Add, add);
forward_binop!(LaurentPoly, Sub, sub);
forward_binop!(LaurentPoly, Mul, mul);

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

/// Render a single monomial `c*q^a*t^b` with unit factors elided.
/// `c` is the absolute value of the coefficient.
pub(crate) fn render_monomial<C: Coefficient>(c: &C, vars: &[(&str, i32)]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let unit = c.is_one();
    if !unit {
        parts.push(c.to_string());
    }
    for (name, e) in vars {
        match *e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Join signed terms as `a + b - c`. Terms are `(negative, body)`.
pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Displays terms from the highest monomial down, e.g. `t - t^-1`.
impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self.terms.iter().rev().map(|((a, b), c)| {
            (c.is_negative(), render_monomial(&c.abs(), &[("q", *a), ("t", *b)]))
        }));
        f.write_str(&s)
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Laurent polynomial in `q` alone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoly<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coefficient> Default for QPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> QPoly<C> {
    pub fn zero() -> Self {
        QPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn monomial(c: C, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i32) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i32, &C)> {
        self.terms.iter()
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        QPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Whether every exponent is strictly negative (membership in `q^{-1}Z[q^{-1}]`).
    pub fn in_negative_part(&self) -> bool {
        self.terms.keys().all(|e| *e < 0)
    }

    /// Whether every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_laurent(&self) -> LaurentPoly<C> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| ((*e, 0), c.clone())))
    }

    /// The `t`-free part of a bivariate polynomial, or `None` if `t` occurs.
    pub fn from_laurent(p: &LaurentPoly<C>) -> Option<Self> {
        if !p.is_t_free() {
            return None;
        }
        Some(QPoly::from_terms(p.terms().map(|(m, c)| (m.0, c.clone()))))
    }
}

impl<C: Coefficient> AddAssign<&QPoly<C>> for QPoly<C> {
    fn add_assign(&mut self, rhs: &QPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coefficient> Add for &QPoly<C> {
    type Output = QPoly<C>;
    fn add(self, rhs: &QPoly<C>) -> QPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Sub for &QPoly<C> {
    type Output = QPoly<C>;
    fn sub(self, rhs: &QPoly<C>) -> QPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &QPoly<C> {
    type Output = QPoly<C>;
    fn mul(self, rhs: &QPoly<C>) -> QPoly<C> {
        let mut out = QPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &QPoly<C> {
    type Output = QPoly<C>;
    fn neg(self) -> QPoly<C> {
        QPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

forward_binop!(QPoly, Add, add);
forward_binop!(QPoly, Sub, sub);
forward_binop!(QPoly, Mul, mul);

impl<C: Coefficient> fmt::Display for QPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(
            self.terms
                .iter()
                .rev()
                .map(|(e, c)| (c.is_negative(), render_monomial(&c.abs(), &[("q", *e)]))),
        );
        f.write_str(&s)
    }
}

impl<C: Coefficient> fmt::Debug for QPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    fn q(e: i32) -> P {
        P::monomial(1, e, 0)
    }

    #[test]
    fn exact_div_examples() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let a = &q(2) - &q(-2);
        assert_eq!(a.exact_div(&P::z()), Some(&q(1) + &q(-1)));
        assert_eq!(q(1).exact_div(&q(1)), Some(P::one()));
        // q + 1 is not a multiple of z: it does not vanish at q = 1
        let b = &q(1) + &P::one();
        assert_eq!(b.exact_div(&P::z()), None);
    }

    #[test]
    fn exact_div_rejects_non_integral_quotient() {
        let a = P::monomial(3, 1, 0);
        assert_eq!(a.exact_div(&P::monomial(2, 0, 0)), None);
    }

    #[test]
    fn divisibility_by_z_matches_long_division() {
        let t = P::t();
        let tinv = P::monomial(1, 0, -1);
        let delta_num = &t - &tinv;
        assert!(!delta_num.divisible_by_z());
        assert_eq!(delta_num.exact_div(&P::z()), None);
        let mixed = &(&P::z() * &t) + &delta_num;
        assert_eq!(mixed.divisible_by_z(), mixed.exact_div(&P::z()).is_some());
        let prod = &P::z() * &(&t + &q(3));
        assert!(prod.divisible_by_z());
    }

    #[test]
    fn display_descends() {
        let p = &P::t() - &P::monomial(1, 0, -1);
        assert_eq!(p.to_string(), "t - t^-1");
        let p = &P::monomial(2, 1, -1) - &q(-1);
        assert_eq!(p.to_string(), "2*q*t^-1 - q^-1");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::constant(-3).to_string(), "-3");
    }

    #[test]
    fn qpoly_bar_and_parts() {
        let g = QPoly::<i64>::from_terms([(1, 1), (-1, -1)]);
        assert_eq!(g.bar(), -&g);
        assert!(QPoly::<i64>::monomial(1, -2).in_negative_part());
        assert!(!QPoly::<i64>::one().in_negative_part());
    }
}

/// Split `a + b - c` (spaces optional) into signed terms, ignoring signs that
/// belong to exponents.
pub(crate) fn split_terms(s: &str) -> Vec<(bool, String)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                out.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push((neg, cur));
    }
    out
}

/// Parse one monomial `c*q^a*t^b` over the given variable names.
pub(crate) fn parse_monomial<C: Coefficient>(body: &str, vars: &[&str]) -> Option<(C, Vec<i32>)> {
    let mut coeff = C::one();
    let mut exps = vec![0; vars.len()];
    for factor in body.split('*') {
        if factor.is_empty() {
            return None;
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            coeff = coeff * C::from_str_radix(factor, 10).ok()?;
            continue;
        }
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<i32>().ok()?),
            None => (factor, 1),
        };
        let idx = vars.iter().position(|v| *v == name)?;
        exps[idx] += e;
    }
    Some((coeff, exps))
}

impl<C: Coefficient> std::str::FromStr for LaurentPoly<C> {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut p = LaurentPoly::zero();
        for (neg, body) in split_terms(s) {
            let (c, e) =
                parse_monomial::<C>(&body, &["q", "t"]).ok_or_else(|| format!("bad term `{body}`"))?;
            p.add_term((e[0], e[1]), if neg { -c } else { c });
        }
        Ok(p)
    }
}

impl<C: Coefficient> std::str::FromStr for QPoly<C> {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut p = QPoly::zero();
        for (neg, body) in split_terms(s) {
            let (c, e) =
                parse_monomial::<C>(&body, &["q"]).ok_or_else(|| format!("bad term `{body}`"))?;
            p.add_term(e[0], if neg { -c } else { c });
        }
        Ok(p)
    }
}

#[cfg(test)]
mod parse_tests {
    use super::*;

    #[test]
    fn display_round_trips() {
        for s in ["0", "t - t^-1", "2*q*t^-1 - q^-1", "-3", "q^2*t^3 + 5"] {
            let p: LaurentPoly<i64> = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let p: QPoly<i64> = "q^-1 + 2*q^-3".parse().unwrap();
        assert_eq!(p.coeff(-3), 2);
    }

    #[test]
    fn rejects_unknown_variables() {
        assert!("x + 1".parse::<LaurentPoly<i64>>().is_err());
        assert!("t".parse::<QPoly<i64>>().is_err());
    }
}
