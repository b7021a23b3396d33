//! Dense univariate polynomials over [`Rational`].
//!
//! The same type is used for polynomials in `x` (the orthogonal families) and
//! in the Gegenbauer parameter `a` (the `X_n(a)` family); the variable name is
//! only a matter of display.

mod modp;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

pub use modp::{reduce_mod_prime, PolyModP};
pub use sturm::{isolate_roots, isolate_roots_with_width, sturm_count, RootBox, SturmSequence};

/// Coefficient `i` multiplies `variable^i`. The highest stored coefficient is
/// never zero, so the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `variable`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `variable + c`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * at + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Multiplies by `variable^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `(p - p(0)) / x`: drop the constant term and shift every coefficient down.
    pub fn deflate_at_zero(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Splits into an integer coefficient vector and a common positive denominator.
    pub fn to_integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient,
    /// obtained by a positive rational rescaling.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ints, _) = self.to_integer_parts();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.leading().is_some_and(Signed::is_negative) {
            content = -content;
        }
        Self {
            coeffs: ints
                .into_iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        }
    }

    /// Same sign pattern as `primitive_part`, but never flips the overall sign.
    pub(crate) fn positive_rescale(&self) -> Self {
        let p = self.primitive_part();
        if self.leading().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(lead) = divisor.leading() else {
            return Err(Error::ZeroDivisor);
        };
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lead = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd - 1] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient `q` with `self = q * divisor` exactly.
    pub fn exact_divide(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonZeroRemainder {
                remainder_degree: r.degree(),
            })
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.positive_rescale();
        let mut b = other.positive_rescale();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.positive_rescale();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree() < 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_divide(&g).expect("gcd divides the polynomial")
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
                if !mono.is_empty() {
                    out.push('*');
                }
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i);
        let y = b.get(i);
        let v = match (x, y, negate_b) {
            (Some(x), Some(y), false) => x + y,
            (Some(x), Some(y), true) => x - y,
            (Some(x), None, _) => x.clone(),
            (None, Some(y), false) => y.clone(),
            (None, Some(y), true) => -y,
            (None, None, _) => unreachable!(),
        };
        out.push(v);
    }
    Poly::new(out)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// Convolution over integers with one reduction per output coefficient;
// rational-by-rational products would pay a gcd on every term.
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (a, da) = self.to_integer_parts();
        let (b, db) = rhs.to_integer_parts();
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                acc[i + j] += x * y;
            }
        }
        let den = da * db;
        Poly::new(
            acc.into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        )
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
