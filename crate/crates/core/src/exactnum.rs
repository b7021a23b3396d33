//! Exact scalars: arbitrary-precision rationals and the combinatorial numbers
//! (binomials, rising factorials, harmonic and Stirling numbers) that the
//! integral formulas are written in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

/// `"p/q"` form used in every serialized output; the denominator is always written.
pub fn to_ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
///
/// With `require_canonical`, the fraction must already be in lowest terms with a
/// positive denominator; otherwise it is reduced.
pub fn parse_rational(s: &str, require_canonical: bool) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("'{s}' is not a rational of the form p/q"));
    let (num, den) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::InvalidParameter(format!("'{s}' has a zero denominator")));
    }
    if require_canonical {
        if !den.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "'{s}' must have a positive denominator"
            )));
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::InvalidParameter(format!("'{s}' is not in lowest terms")));
        }
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!`.
///
/// Zero for `k < 0`. Negative `n` is allowed, so that
/// `binomial(-x + y, y) == (-1)^y binomial(x - 1, y)` holds literally.
/// The falling product over `k!` is always an integer for integer `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // symmetric shortcut only valid for the ordinary range
    let k = if n >= 0 && 2 * k > n { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binom(n, 0..=n)` by the multiplicative recurrence.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut b = BigInt::one();
    row.push(b.clone());
    for k in 0..n {
        b = b * (n - k) / (k + 1);
        row.push(b.clone());
    }
    row
}

/// Rows `0..=n` of Pascal's triangle, for sweeps that need many binomials.
#[derive(Debug, Clone)]
pub struct PascalTable {
    rows: Vec<Vec<BigInt>>,
}

impl PascalTable {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        rows.push(vec![BigInt::one()]);
        for m in 1..=n {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigInt::one());
            for k in 1..m {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        Self { rows }
    }

    /// `binom(n, k)` for `0 <= n <= size`; zero outside `0 <= k <= n`.
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        self.rows[n][k as usize].clone()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

/// Rising factorial `x(x+1)...(x+n-1)`; `1` when `n == 0`.
pub fn pochhammer(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += BigInt::one();
    }
    acc
}

pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| acc + frac(1, k as i64))
}

/// Row `n` of the unsigned Stirling numbers of the first kind,
/// `c(n, 0..=n)`, built from `c(m+1, j) = m c(m, j) + c(m, j-1)`.
pub fn stirling1_unsigned_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, c) in row.iter().enumerate() {
            next[j] += c * m;
            next[j + 1] += c;
        }
        row = next;
    }
    row
}

/// Unsigned Stirling number of the first kind `c(n, j)`; the signed value is
/// `(-1)^(n-j) c(n, j)` and is applied by callers.
pub fn stirling1_unsigned(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    stirling1_unsigned_row(n).swap_remove(j)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in WITNESSES {
        if q.is_multiple_of(p) {
            return q == p;
        }
    }
    let mut d = q - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, q);
        if x == 1 || x == q - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, q);
            if x == q - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A machine-size prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(q: u64) -> Result<Self> {
        if is_prime(q) {
            Ok(Self(q))
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Residue of an arbitrary integer in `[0, q)`.
    pub fn reduce(self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("residue fits in u64")
    }

    pub fn inverse(self, v: u64) -> Option<u64> {
        let v = v % self.0;
        (v != 0).then(|| pow_mod(v, self.0 - 2, self.0))
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.0)
    }

    /// Reduces `p/q` through the modular inverse of the denominator.
    pub fn reduce_rational(self, r: &Rational) -> Result<u64> {
        let den = self.reduce(r.denom());
        let inv = self.inverse(den).ok_or_else(|| Error::DenominatorNotInvertible {
            denominator: r.denom().to_string(),
            modulus: self.0,
        })?;
        Ok(self.mul(self.reduce(r.numer()), inv))
    }
}
