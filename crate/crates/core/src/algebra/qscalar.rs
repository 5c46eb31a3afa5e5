use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{format_rational, rat, Rational};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Element of the fraction field of Laurent polynomials in `t = q^(1/M)`.
///
/// Stored as `t^shift * num(t) / den(t)` with `num(0) != 0`, `den(0) != 0`,
/// `gcd(num, den) = 1`, `den` monic and `M` the smallest lattice divisor
/// that represents the value. Equal values therefore have identical fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QScalar {
    lattice: u32,
    shift: i64,
    num: Poly,
    den: Poly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { lattice: 1, shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        QScalar::from_rational(&Rational::one())
    }

    pub fn from_rational(r: &Rational) -> Self {
        if r.is_zero() {
            return QScalar::zero();
        }
        QScalar { lattice: 1, shift: 0, num: Poly::constant(r.clone()), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QScalar::from_rational(&rat(n))
    }

    /// `c * q^exponent` for a rational exponent.
    pub fn monomial(c: Rational, exponent: &Rational) -> Self {
        if c.is_zero() {
            return QScalar::zero();
        }
        let m = exponent.denom().clone();
        let m: u32 = u32::try_from(m).expect("lattice divisor out of range");
        let e: i64 = i64::try_from(exponent.numer().clone()).expect("exponent out of range");
        QScalar { lattice: m, shift: e, num: Poly::constant(c), den: Poly::one() }
    }

    /// `q^exponent`.
    pub fn q_pow(exponent: &Rational) -> Self {
        QScalar::monomial(Rational::one(), exponent)
    }

    /// `q^(k/m)`.
    pub fn q_frac(k: i64, m: u32) -> Self {
        QScalar::q_pow(&Rational::new(BigInt::from(k), BigInt::from(m)))
    }

    /// `q`.
    pub fn q() -> Self {
        QScalar::q_frac(1, 1)
    }

    /// Builds a Laurent polynomial from exponent/coefficient pairs.
    pub fn from_laurent<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (&'a Rational, &'a Rational)>,
    {
        terms.into_iter().fold(QScalar::zero(), |acc, (e, c)| acc.add(&QScalar::monomial(c.clone(), e)))
    }

    /// Exponent/coefficient map when the value is a Laurent polynomial in `q^(1/M)`.
    pub fn to_laurent(&self) -> Option<BTreeMap<Rational, Rational>> {
        if !self.den.is_one() {
            return None;
        }
        let m = BigInt::from(self.lattice);
        let mut out = BTreeMap::new();
        for (k, c) in self.num.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.insert(Rational::new(BigInt::from(self.shift + k as i64), m.clone()), c.clone());
            }
        }
        Some(out)
    }

    /// Laurent numerator and denominator with `self = num / den`.
    pub fn fraction(&self) -> (QScalar, QScalar) {
        let num = QScalar::build(self.lattice, self.shift, self.num.clone(), Poly::one(), false);
        let den = QScalar::build(self.lattice, 0, self.den.clone(), Poly::one(), false);
        (num, den)
    }

    pub fn lattice(&self) -> u32 {
        self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value if the scalar is constant in `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.shift == 0 && self.den.is_one() && self.num.coeffs().len() == 1 {
            Some(self.num.coeffs()[0].clone())
        } else {
            None
        }
    }

    fn lift(&self, to: u32) -> (i64, Poly, Poly) {
        let r = (to / self.lattice) as usize;
        (self.shift * r as i64, self.num.expand(r), self.den.expand(r))
    }

    fn build(lattice: u32, shift: i64, num: Poly, den: Poly, reduce_gcd: bool) -> Self {
        if num.is_zero() {
            return QScalar::zero();
        }
        let (mut num, mut den) = (num, den);
        let mut shift = shift;
        let v = num.valuation();
        if v > 0 {
            num = num.shift_down(v);
            shift += v as i64;
        }
        let w = den.valuation();
        if w > 0 {
            den = den.shift_down(w);
            shift -= w as i64;
        }
        if reduce_gcd && !den.is_one() && den.degree() > 0 && num.degree() > 0 {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        let mut g = num.exponent_gcd().gcd(&den.exponent_gcd());
        g = g.gcd(&(lattice as usize)).gcd(&(shift.unsigned_abs() as usize));
        let mut lattice = lattice;
        if g > 1 {
            num = num.compress(g);
            den = den.compress(g);
            shift /= g as i64;
            lattice /= g as u32;
        }
        QScalar { lattice, shift, num, den }
    }

    pub fn add(&self, o: &QScalar) -> QScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let l = self.lattice.lcm(&o.lattice);
        let (e1, n1, d1) = self.lift(l);
        let (e2, n2, d2) = o.lift(l);
        let e = e1.min(e2);
        let a = n1.shift_up((e1 - e) as usize);
        let b = n2.shift_up((e2 - e) as usize);
        if d1 == d2 {
            let reduce = !d1.is_one();
            QScalar::build(l, e, a.add(&b), d1, reduce)
        } else {
            QScalar::build(l, e, a.mul(&d2).add(&b.mul(&d1)), d1.mul(&d2), true)
        }
    }

    pub fn neg(&self) -> QScalar {
        QScalar { lattice: self.lattice, shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &QScalar) -> QScalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QScalar) -> QScalar {
        if self.is_zero() || o.is_zero() {
            return QScalar::zero();
        }
        let l = self.lattice.lcm(&o.lattice);
        let (e1, n1, d1) = self.lift(l);
        let (e2, n2, d2) = o.lift(l);
        let (n1, d2) = cancel(n1, d2);
        let (n2, d1) = cancel(n2, d1);
        QScalar::build(l, e1 + e2, n1.mul(&n2), d1.mul(&d2), false)
    }

    pub fn inv(&self) -> Result<QScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QScalar::build(self.lattice, -self.shift, self.den.clone(), self.num.clone(), false))
    }

    pub fn div(&self, o: &QScalar) -> Result<QScalar> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<QScalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = QScalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Value at `q = 1`; an error if the reduced denominator vanishes there.
    pub fn specialize_at_one(&self) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let one = Rational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(&one) / d)
    }

    fn fmt_part(f: &mut fmt::Formatter<'_>, lattice: u32, shift: i64, p: &Poly) -> fmt::Result {
        let mut first = true;
        for (k, c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let e = Rational::new(BigInt::from(shift + k as i64), BigInt::from(lattice));
            if e.is_zero() {
                write!(f, "{}", format_rational(&a))?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{}*", format_rational(&a))?;
            }
            if e.is_one() {
                write!(f, "q")?;
            } else if e.denom().is_one() {
                write!(f, "q^{}", e.numer())?;
            } else {
                write!(f, "q^({})", format_rational(&e))?;
            }
        }
        Ok(())
    }
}

fn cancel(n: Poly, d: Poly) -> (Poly, Poly) {
    if d.is_one() || d.degree() == 0 || n.degree() == 0 {
        return (n, d);
    }
    let g = n.gcd(&d);
    if g.is_one() {
        (n, d)
    } else {
        (n.div_rem(&g).0, d.div_rem(&g).0)
    }
}

/// Balanced q-integer `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
pub fn q_int(n: i64, d: i64) -> QScalar {
    if n < 0 {
        return q_int(-n, d).neg();
    }
    let mut acc = QScalar::zero();
    for k in 0..n {
        acc = acc.add(&QScalar::q_frac(d * (n - 1 - 2 * k), 1));
    }
    acc
}

/// `[n]_{q^d}!`.
pub fn q_factorial(n: i64, d: i64) -> QScalar {
    (1..=n).fold(QScalar::one(), |acc, k| acc.mul(&q_int(k, d)))
}

impl super::field::Field for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QScalar::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QScalar::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QScalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        QScalar::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        QScalar::inv(self)
    }
    fn from_rational(r: &Rational) -> Self {
        QScalar::from_rational(r)
    }
    fn weight(&self) -> (usize, u64) {
        (self.num.degree() + self.den.degree(), self.num.bit_size() + self.den.bit_size())
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.den.is_one() {
            return QScalar::fmt_part(f, self.lattice, self.shift, &self.num);
        }
        write!(f, "(")?;
        QScalar::fmt_part(f, self.lattice, self.shift, &self.num)?;
        write!(f, ")/(")?;
        QScalar::fmt_part(f, self.lattice, 0, &self.den)?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::ratio;

    fn q() -> QScalar {
        QScalar::q()
    }

    #[test]
    fn self_division_is_one() {
        let t = QScalar::q_frac(1, 4);
        let x = t.sub(&t.inv().unwrap());
        assert_eq!(x.div(&x).unwrap(), QScalar::one());
    }

    #[test]
    fn q_plus_q() {
        assert_eq!(q().add(&q()), QScalar::monomial(rat(2), &rat(1)));
    }

    #[test]
    fn polynomial_quotient_reduces() {
        let num = q().mul(&q()).sub(&QScalar::one());
        let den = q().sub(&QScalar::one());
        assert_eq!(num.div(&den).unwrap(), q().add(&QScalar::one()));
    }

    #[test]
    fn specialization_examples() {
        let x = q().sub(&q().inv().unwrap()).div(&q().sub(&QScalar::one())).unwrap();
        assert_eq!(x.specialize_at_one().unwrap(), rat(2));
        assert_eq!(QScalar::q_frac(5, 4).specialize_at_one().unwrap(), rat(1));
        let pole = QScalar::one().div(&q().sub(&QScalar::one())).unwrap();
        assert_eq!(pole.specialize_at_one(), Err(Error::Pole));
        assert!(QScalar::zero().inv().is_err());
    }

    #[test]
    fn lattice_is_minimal() {
        let a = QScalar::q_frac(2, 4);
        assert_eq!(a.lattice(), 2);
        let b = QScalar::q_frac(1, 4).mul(&QScalar::q_frac(3, 4));
        assert_eq!(b, q());
        assert_eq!(b.lattice(), 1);
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(2, 1), q().add(&q().inv().unwrap()));
        assert_eq!(q_int(1, 3), QScalar::one());
        assert_eq!(q_int(3, 1).specialize_at_one().unwrap(), rat(3));
        assert_eq!(q_factorial(3, 2).specialize_at_one().unwrap(), rat(6));
        let lhs = q_int(3, 1);
        let rhs = q().pow(3).unwrap().sub(&q().pow(-3).unwrap()).div(&q().sub(&q().inv().unwrap())).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_round_trip() {
        let x = QScalar::monomial(ratio(-1, 3), &ratio(5, 4)).add(&QScalar::from_int(2));
        let m = x.to_laurent().unwrap();
        assert_eq!(QScalar::from_laurent(m.iter()), x);
        assert_eq!(x.to_string(), "-1/3*q^(5/4) + 2");
    }
}
