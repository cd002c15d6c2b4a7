//! Elements of `Z[q^±, t^±, 1/z]` with `z = q - q^{-1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Result, SkeinError};
use crate::poly::{Coefficient, LaurentPoly, QPoly};

/// `num / z^zpow` in canonical form: `zpow == 0` or `z` does not divide `num`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZFraction<C> {
    num: LaurentPoly<C>,
    zpow: u32,
}

impl<C: Coefficient> Default for ZFraction<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> ZFraction<C> {
    /// Canonical form of `num / z^k`.
    pub fn reduce(mut num: LaurentPoly<C>, mut k: u32) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let z = LaurentPoly::z();
        while k > 0 && num.divisible_by_z() {
            num = num.exact_div(&z).expect("z divides a polynomial vanishing at q = ±1");
            k -= 1;
        }
        ZFraction { num, zpow: k }
    }

    pub fn zero() -> Self {
        ZFraction { num: LaurentPoly::zero(), zpow: 0 }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly<C>) -> Self {
        ZFraction { num, zpow: 0 }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(C::from_i64(c).expect("integer fits")))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(C::one(), e, 0))
    }

    pub fn t_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(C::one(), 0, e))
    }

    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::z())
    }

    /// The loop value `δ = (t - t^{-1}) / z`.
    pub fn delta() -> Self {
        let num = LaurentPoly::from_terms([((0, 1), C::one()), ((0, -1), -C::one())]);
        Self::reduce(num, 1)
    }

    pub fn num(&self) -> &LaurentPoly<C> {
        &self.num
    }

    pub fn zpow(&self) -> u32 {
        self.zpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.zpow == 0 && self.num.is_one()
    }

    pub fn pow(&self, k: u32) -> Self {
        ZFraction { num: self.num.pow(k), zpow: self.zpow * k }.renormalized()
    }

    fn renormalized(self) -> Self {
        Self::reduce(self.num, self.zpow)
    }

    /// `num · z^{target - zpow}`, i.e. the numerator over the common denominator `z^target`.
    fn lifted(&self, target: u32) -> LaurentPoly<C> {
        &self.num * &LaurentPoly::z().pow(target - self.zpow)
    }

    /// `q ↦ q^{-1}, t ↦ t^{-1}`, hence `z ↦ -z`.
    pub fn bar(&self) -> Self {
        let num = self.num.bar();
        let num = if self.zpow % 2 == 1 { -num } else { num };
        ZFraction { num, zpow: self.zpow }
    }

    /// The `t`-free, denominator-free part as a `Z[q^±]` element, if that is all there is.
    pub fn to_qpoly(&self) -> Option<QPoly<C>> {
        if self.zpow != 0 {
            return None;
        }
        QPoly::from_laurent(&self.num)
    }

    pub fn from_qpoly(p: &QPoly<C>) -> Self {
        Self::from_poly(p.to_laurent())
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> ZFraction<D> {
        ZFraction::reduce(self.num.map_coeffs(f), self.zpow)
    }
}

/// The unique `r ∈ q^{-1}Z[q^{-1}]` with `r - bar(r) = g`.
pub fn negative_part_solve<C: Coefficient>(g: &QPoly<C>) -> Result<QPoly<C>> {
    if !(g.bar() + g.clone()).is_zero() {
        return Err(SkeinError::NotAntisymmetric(g.to_string()));
    }
    Ok(QPoly::from_terms(g.terms().filter(|(e, _)| **e < 0).map(|(e, c)| (*e, c.clone()))))
}

impl<C: Coefficient> Zero for ZFraction<C> {
    fn zero() -> Self {
        ZFraction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Coefficient> One for ZFraction<C> {
    fn one() -> Self {
        ZFraction::one()
    }
}

impl<C: Coefficient> Add for &ZFraction<C> {
    type Output = ZFraction<C>;
    fn add(self, rhs: &ZFraction<C>) -> ZFraction<C> {
        let k = self.zpow.max(rhs.zpow);
        ZFraction::reduce(&self.lifted(k) + &rhs.lifted(k), k)
    }
}

impl<C: Coefficient> Sub for &ZFraction<C> {
    type Output = ZFraction<C>;
    fn sub(self, rhs: &ZFraction<C>) -> ZFraction<C> {
        let k = self.zpow.max(rhs.zpow);
        ZFraction::reduce(&self.lifted(k) - &rhs.lifted(k), k)
    }
}

impl<C: Coefficient> Mul for &ZFraction<C> {
    type Output = ZFraction<C>;
    fn mul(self, rhs: &ZFraction<C>) -> ZFraction<C> {
        ZFraction::reduce(&self.num * &rhs.num, self.zpow + rhs.zpow)
    }
}

impl<C: Coefficient> Neg for &ZFraction<C> {
    type Output = ZFraction<C>;
    fn neg(self) -> ZFraction<C> {
        ZFraction { num: -&self.num, zpow: self.zpow }
    }
}

impl<C: Coefficient> Neg for ZFraction<C> {
    type Output = ZFraction<C>;
    fn neg(self) -> ZFraction<C> {
        -&self
    }
}

crate::poly::forward_binop!(ZFraction, Add, add);
crate::poly::forward_binop!(ZFraction, Sub, sub);
crate::poly::forward_binop!(ZFraction, Mul, mul);

impl<C: Coefficient> fmt::Display for ZFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zpow == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/z^{}", self.num, self.zpow)
        }
    }
}

impl<C: Coefficient> fmt::Debug for ZFraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coefficient> std::str::FromStr for ZFraction<C> {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest.rsplit_once(")/z^").ok_or_else(|| format!("bad scalar `{s}`"))?;
            let k: u32 = den.trim().parse().map_err(|_| format!("bad z power in `{s}`"))?;
            Ok(ZFraction::reduce(num.parse()?, k))
        } else {
            Ok(ZFraction::from_poly(s.parse()?))
        }
    }
}
