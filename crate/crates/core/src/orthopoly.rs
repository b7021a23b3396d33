//! The five classical families, generated exactly.
//!
//! Every family satisfies a three-term recurrence
//! `A_{n+1} = (alpha_n x + beta_n) A_n - gamma_n A_{n-1}` with `A_0 = 1`;
//! [`Recurrence`] exposes those coefficients so that the exact generator and
//! the floating-point quadrature share a single description. Laguerre is the
//! exception on the exact side: it is expanded from its explicit sum.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, frac, pochhammer, rat, Rational};
use crate::polyring::Poly;

/// Validated Gegenbauer parameter: `a > -1/2` and `a != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GegenbauerParam(Rational);

impl GegenbauerParam {
    pub fn new(a: Rational) -> Result<Self> {
        if a <= frac(-1, 2) || a.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "Gegenbauer parameter must satisfy a > -1/2 and a != 0, got {a}"
            )));
        }
        Ok(Self(a))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Legendre,
    Hermite,
    ChebyshevT,
    ChebyshevU,
    Laguerre,
    Gegenbauer(GegenbauerParam),
}

impl Family {
    pub const FIXED: [Family; 5] = [
        Family::Legendre,
        Family::Hermite,
        Family::ChebyshevT,
        Family::ChebyshevU,
        Family::Laguerre,
    ];

    pub fn gegenbauer(a: Rational) -> Result<Self> {
        GegenbauerParam::new(a).map(Family::Gegenbauer)
    }

    /// Builds a family from its name; `param` is required for Gegenbauer and
    /// rejected otherwise.
    pub fn from_name(name: &str, param: Option<Rational>) -> Result<Self> {
        let kind: FamilyKind = name.parse()?;
        match (kind, param) {
            (FamilyKind::Gegenbauer, Some(a)) => Self::gegenbauer(a),
            (FamilyKind::Gegenbauer, None) => Err(Error::InvalidParameter(
                "the Gegenbauer family needs a parameter a".into(),
            )),
            (_, Some(_)) => Err(Error::InvalidParameter(format!(
                "the {name} family takes no parameter"
            ))),
            (kind, None) => Ok(match kind {
                FamilyKind::Legendre => Family::Legendre,
                FamilyKind::Hermite => Family::Hermite,
                FamilyKind::ChebyshevT => Family::ChebyshevT,
                FamilyKind::ChebyshevU => Family::ChebyshevU,
                FamilyKind::Laguerre => Family::Laguerre,
                FamilyKind::Gegenbauer => unreachable!(),
            }),
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Legendre => FamilyKind::Legendre,
            Family::Hermite => FamilyKind::Hermite,
            Family::ChebyshevT => FamilyKind::ChebyshevT,
            Family::ChebyshevU => FamilyKind::ChebyshevU,
            Family::Laguerre => FamilyKind::Laguerre,
            Family::Gegenbauer(_) => FamilyKind::Gegenbauer,
        }
    }

    pub fn name(&self) -> &'static str {
        self.kind().name()
    }

    pub fn param(&self) -> Option<&Rational> {
        match self {
            Family::Gegenbauer(a) => Some(a.value()),
            _ => None,
        }
    }

    /// Weight is even about the origin.
    pub fn is_symmetric(&self) -> bool {
        !matches!(self, Family::Laguerre)
    }

    /// The transcendental factor every integral against this weight carries.
    pub fn tag(&self) -> ConstantTag {
        match self {
            Family::Legendre | Family::Laguerre => ConstantTag::One,
            Family::Hermite => ConstantTag::SqrtPi,
            Family::ChebyshevT | Family::ChebyshevU => ConstantTag::Pi,
            Family::Gegenbauer(_) => ConstantTag::Mu0,
        }
    }

    pub fn recurrence(&self) -> Recurrence<'_> {
        Recurrence { family: self }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gegenbauer(a) => write!(f, "gegenbauer(a={})", a.value()),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Legendre,
    Hermite,
    ChebyshevT,
    ChebyshevU,
    Laguerre,
    Gegenbauer,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Legendre => "legendre",
            FamilyKind::Hermite => "hermite",
            FamilyKind::ChebyshevT => "chebyshev-t",
            FamilyKind::ChebyshevU => "chebyshev-u",
            FamilyKind::Laguerre => "laguerre",
            FamilyKind::Gegenbauer => "gegenbauer",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match norm.as_str() {
            "legendre" => FamilyKind::Legendre,
            "hermite" => FamilyKind::Hermite,
            "chebyshev-t" | "chebyshevt" | "t" => FamilyKind::ChebyshevT,
            "chebyshev-u" | "chebyshevu" | "u" => FamilyKind::ChebyshevU,
            "laguerre" => FamilyKind::Laguerre,
            "gegenbauer" => FamilyKind::Gegenbauer,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family '{s}' (expected legendre, hermite, chebyshev-t, chebyshev-u, laguerre or gegenbauer)"
                )))
            }
        })
    }
}

/// Symbolic constant multiplying an exact rational integral value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantTag {
    One,
    Pi,
    SqrtPi,
    /// Total Gegenbauer weight mass `integral_{-1}^{1} (1 - x^2)^(a - 1/2) dx`.
    Mu0,
}

impl ConstantTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstantTag::One => "ONE",
            ConstantTag::Pi => "PI",
            ConstantTag::SqrtPi => "SQRT_PI",
            ConstantTag::Mu0 => "MU0",
        }
    }

    /// Numeric value; `Mu0` needs the Gegenbauer parameter.
    pub fn to_f64(self, param: Option<&Rational>) -> Option<f64> {
        use std::f64::consts::PI;
        match self {
            ConstantTag::One => Some(1.0),
            ConstantTag::Pi => Some(PI),
            ConstantTag::SqrtPi => Some(PI.sqrt()),
            ConstantTag::Mu0 => param.map(|a| gegenbauer_mass_f64(a.to_f64().unwrap_or(f64::NAN))),
        }
    }
}

impl fmt::Display for ConstantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstantTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ONE" => Ok(ConstantTag::One),
            "PI" => Ok(ConstantTag::Pi),
            "SQRT_PI" => Ok(ConstantTag::SqrtPi),
            "MU0" => Ok(ConstantTag::Mu0),
            _ => Err(Error::InvalidParameter(format!("unknown constant tag '{s}'"))),
        }
    }
}

/// `sqrt(pi) Gamma(a + 1/2) / Gamma(a + 1)`.
pub fn gegenbauer_mass_f64(a: f64) -> f64 {
    use statrs::function::gamma::ln_gamma;
    std::f64::consts::PI.sqrt() * (ln_gamma(a + 0.5) - ln_gamma(a + 1.0)).exp()
}

/// Exact integral value `coeff * tag`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralValue {
    pub coeff: Rational,
    pub tag: ConstantTag,
}

impl IntegralValue {
    pub fn new(coeff: Rational, tag: ConstantTag) -> Self {
        Self { coeff, tag }
    }

    pub fn zero(tag: ConstantTag) -> Self {
        Self::new(Rational::zero(), tag)
    }

    /// Sum of two values with the same tag; mixing tags is refused.
    pub fn try_add(&self, other: &IntegralValue) -> Result<IntegralValue> {
        if self.tag != other.tag {
            return Err(Error::MixedConstantTags {
                left: self.tag.as_str(),
                right: other.tag.as_str(),
            });
        }
        Ok(Self::new(&self.coeff + &other.coeff, self.tag))
    }

    pub fn scale(&self, c: &Rational) -> IntegralValue {
        Self::new(&self.coeff * c, self.tag)
    }

    pub fn to_f64(&self, param: Option<&Rational>) -> Option<f64> {
        Some(self.coeff.to_f64()? * self.tag.to_f64(param)?)
    }
}

impl fmt::Display for IntegralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.coeff, self.tag)
    }
}

/// Three-term recurrence coefficients of a family.
#[derive(Debug, Clone, Copy)]
pub struct Recurrence<'a> {
    family: &'a Family,
}

impl Recurrence<'_> {
    /// `(alpha_n, beta_n, gamma_n)` with
    /// `A_{n+1} = (alpha_n x + beta_n) A_n - gamma_n A_{n-1}`.
    pub fn step(&self, n: u64) -> (Rational, Rational, Rational) {
        let ni = n as i64;
        let zero = Rational::zero;
        match self.family {
            Family::Legendre => (frac(2 * ni + 1, ni + 1), zero(), frac(ni, ni + 1)),
            Family::Hermite => (rat(2), zero(), rat(2 * ni)),
            Family::ChebyshevT if n == 0 => (rat(1), zero(), zero()),
            Family::ChebyshevT | Family::ChebyshevU => (rat(2), zero(), rat(1)),
            Family::Laguerre => (frac(-1, ni + 1), frac(2 * ni + 1, ni + 1), frac(ni, ni + 1)),
            Family::Gegenbauer(a) => {
                let a = a.value();
                let n1 = rat(ni + 1);
                (
                    (rat(ni) + a) * rat(2) / &n1,
                    zero(),
                    (rat(ni - 1) + a * rat(2)) / &n1,
                )
            }
        }
    }

    pub fn step_f64(&self, n: u64) -> (f64, f64, f64) {
        let (a, b, c) = self.step(n);
        let f = |r: Rational| r.to_f64().unwrap_or(f64::NAN);
        (f(a), f(b), f(c))
    }
}

/// Per-computation cache of a family's members, grown sequentially on demand.
#[derive(Debug, Clone)]
pub struct FamilyTable {
    family: Family,
    polys: Vec<Poly>,
}

impl FamilyTable {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            polys: Vec::new(),
        }
    }

    /// Table already holding every member up to degree `n`.
    pub fn up_to(family: Family, n: usize) -> Self {
        let mut t = Self::new(family);
        t.ensure(n);
        t
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn ensure(&mut self, n: usize) {
        if let Family::Laguerre = self.family {
            while self.polys.len() <= n {
                let k = self.polys.len();
                self.polys.push(laguerre_explicit(k as u64));
            }
            return;
        }
        let rec = self.family.recurrence();
        while self.polys.len() <= n {
            let k = self.polys.len();
            let next = match k {
                0 => Poly::one(),
                _ => {
                    let (alpha, beta, gamma) = rec.step(k as u64 - 1);
                    let cur = &self.polys[k - 1];
                    let mut p = &cur.shift_up(1).scale(&alpha) + &cur.scale(&beta);
                    if k >= 2 {
                        p = &p - &self.polys[k - 2].scale(&gamma);
                    }
                    p
                }
            };
            self.polys.push(next);
        }
    }

    pub fn get(&mut self, n: usize) -> &Poly {
        self.ensure(n);
        &self.polys[n]
    }

    /// Members generated so far, indexed by degree.
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }
}

/// Degree-`n` member of the family.
pub fn generate(family: &Family, n: usize) -> Poly {
    let mut t = FamilyTable::new(family.clone());
    t.ensure(n);
    t.polys.swap_remove(n)
}

/// `L_n(x) = sum_k (-1)^k / k! * binom(n, k) x^k`.
pub fn laguerre_explicit(n: u64) -> Poly {
    Poly::new(
        (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                Rational::new(sign * binomial(n as i64, k as i64), factorial(k))
            })
            .collect(),
    )
}

/// Gegenbauer member from the explicit sum
/// `sum_k (-1)^k (a)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}`,
/// with `Gamma(n-k+a)/Gamma(a)` written as the rising factorial `(a)_{n-k}`.
pub fn gegenbauer_explicit(a: &GegenbauerParam, n: u64) -> Poly {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let deg = n - 2 * k;
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let c = sign * pochhammer(a.value(), n - k) * Rational::from_integer(BigInt::from(2).pow(deg as u32))
            / Rational::from_integer(factorial(k) * factorial(deg));
        coeffs[deg as usize] = c;
    }
    Poly::new(coeffs)
}

/// Closed-form value of the degree-`n` member at `x = 0`.
pub fn value_at_zero(family: &Family, n: u64) -> Rational {
    let odd = n % 2 == 1;
    let m = n / 2;
    let alt = if m.is_multiple_of(2) { rat(1) } else { rat(-1) };
    if odd && family.is_symmetric() {
        return Rational::zero();
    }
    match family {
        Family::Legendre => {
            alt * Rational::new(binomial(2 * m as i64, m as i64), BigInt::from(4).pow(m as u32))
        }
        Family::Hermite => alt * Rational::new(factorial(n), factorial(m)),
        Family::ChebyshevT | Family::ChebyshevU => alt,
        Family::Laguerre => Rational::one(),
        Family::Gegenbauer(a) => {
            alt * pochhammer(a.value(), m) / Rational::from_integer(factorial(m))
        }
    }
}

/// Squared norm of the degree-`n` member under the family weight.
///
/// For Gegenbauer the coefficient is relative to the total mass `mu0(a)`:
/// `a (2a)_n / (n! (n + a))`, the normalization with every Gamma quotient
/// folded by the duplication formula.
pub fn norm_constant(family: &Family, n: u64) -> IntegralValue {
    let ni = n as i64;
    let coeff = match family {
        Family::Legendre => frac(2, 2 * ni + 1),
        Family::Hermite => Rational::from_integer(BigInt::from(2).pow(n as u32) * factorial(n)),
        Family::ChebyshevT if n == 0 => rat(1),
        Family::ChebyshevT | Family::ChebyshevU => frac(1, 2),
        Family::Laguerre => rat(1),
        Family::Gegenbauer(a) => {
            let a = a.value();
            a * pochhammer(&(a * rat(2)), n)
                / (Rational::from_integer(factorial(n)) * (rat(ni) + a))
        }
    };
    IntegralValue::new(coeff, family.tag())
}
