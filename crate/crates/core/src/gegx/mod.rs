//! Gegenbauer filter integrals as functions of the parameter `a`, and the
//! polynomial family `X_n(a)` that carries the even-index case.
//!
//! All Gegenbauer integrals are reported relative to the weight mass
//! `mu0(a) = sqrt(pi) Gamma(a + 1/2) / Gamma(a + 1)`. Dividing the closed forms
//! by `mu0(a)` and folding `Gamma(a + 1/2)` with the duplication formula
//! `Gamma(2a) = 2^(2a-1) Gamma(a) Gamma(a + 1/2) / sqrt(pi)` removes every
//! Gamma quotient:
//!
//! * odd `n = 2m+1`: `gamma_n / mu0 = 2a (2a)_n / n! = 2^(2m+2) a (a+1/2)_m (a)_(m+1) / (2m+1)!`
//! * even `n = 2m`: `gamma_n / mu0 = 4a (a)_m X_m(a) / (2m)!`
//! * the inhomogeneous term of the integral recurrence:
//!   `4a (n+a-1) (2a)_(n-1) / (n n!)`
//!
//! The `gamma_reductions_match_double_precision_gamma` test re-derives these
//! numerically from the unreduced Gamma expressions.

mod interlace;
mod wz;
mod xn;

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactnum::{factorial, frac, pochhammer, pow2, rat, Rational};
use crate::integrate::filter_integral;
use crate::orthopoly::{Family, GegenbauerParam};
use crate::par::Execution;
use crate::polyring::Poly;
use crate::report::{CheckEntry, VerificationReport};

pub use interlace::{interlacing_check, verify_interlacing, z_polynomial};
pub use wz::{verify_wz, wz_check, wz_f, wz_g};
pub use xn::{
    verify_xn_congruences, verify_xn_properties, verify_xn_routes, xn_closed,
    xn_coefficients_rho, xn_mod_prime, xn_properties, xn_recurrence_first, xn_root_certificate, xn_value_properties,
    xn_recurrence_first_table, xn_recurrence_second, xn_recurrence_second_table, xn_sum,
};

/// `(a + shift)(a + shift + 1)...(a + shift + n - 1)` as a polynomial in `a`.
pub fn rising_factorial_poly(shift: &Rational, n: u64) -> Poly {
    let mut acc = Poly::one();
    let mut s = shift.clone();
    for _ in 0..n {
        acc = &acc * &Poly::linear(s.clone());
        s += BigInt::one();
    }
    acc
}

/// Polynomial in `x` whose coefficients are polynomials in `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamPoly {
    coeffs: Vec<Poly>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficient of `x^i`, a polynomial in `a`.
    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Specializes `a`, leaving a polynomial in `x`.
    pub fn eval_param(&self, a: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.eval(a)).collect())
    }

    pub fn deflate_at_zero(&self) -> Self {
        Self::new(self.coeffs.iter().skip(1).cloned().collect())
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return ParamPoly::new(Vec::new());
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in rhs.coeffs.iter().enumerate() {
                if !q.is_zero() {
                    out[i + j] = &out[i + j] + &(p * q);
                }
            }
        }
        ParamPoly::new(out)
    }
}

/// `C_n^(a)(x)` from the explicit sum, with coefficients exact in `a`.
pub fn gegenbauer_symbolic(n: u64) -> ParamPoly {
    let mut coeffs = vec![Poly::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let deg = n - 2 * k;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let scalar = Rational::new(
            BigInt::from(sign) * pow2(deg),
            factorial(k) * factorial(deg),
        );
        coeffs[deg as usize] = rising_factorial_poly(&Rational::zero(), n - k).scale(&scalar);
    }
    ParamPoly::new(coeffs)
}

/// `gamma_n(a) / mu0(a)` by squaring the deflated `C_n^(a)` at fixed `a` and
/// integrating against the Gegenbauer moments.
pub fn gamma_ratio_direct(n: u64, a: &Rational) -> Result<Rational> {
    let family = Family::gegenbauer(a.clone())?;
    Ok(filter_integral(&family, n).coeff)
}

/// `gamma_n(a) / mu0(a)` from the closed forms, Gamma quotients pre-reduced.
pub fn gamma_closed_ratio(n: u64, a: &Rational) -> Result<Rational> {
    GegenbauerParam::new(a.clone())?;
    let m = n / 2;
    Ok(if n % 2 == 1 {
        Rational::from_integer(pow2(2 * m + 2)) * a
            * pochhammer(&(a + frac(1, 2)), m)
            * pochhammer(a, m + 1)
            / Rational::from_integer(factorial(n))
    } else if m == 0 {
        Rational::zero()
    } else {
        rat(4) * a * pochhammer(a, m) * xn_closed(m).eval(a) / Rational::from_integer(factorial(n))
    })
}

/// `gamma_n(a) / mu0(a)` for `0..=n_max` by the integral recurrence
/// `gamma_n = 4a (n+a-1) (2a)_(n-1) / (n n!) + ((n+2a-2)/n)^2 gamma_(n-2)`
/// from `gamma_0 = 0`, `gamma_1 = 4a^2`.
pub fn gamma_recurrence_ratios(a: &Rational, n_max: u64) -> Vec<Rational> {
    let mut g = vec![Rational::zero(), rat(4) * a * a];
    let two_a = a * rat(2);
    // (2a)_(n-1), advanced once per step
    let mut rising = two_a.clone();
    for n in 2..=n_max {
        let ni = n as i64;
        let nn = rat(ni);
        let inhom = rat(4) * a * (rat(ni - 1) + a) * &rising
            / (Rational::from_integer(factorial(n)) * &nn);
        let ratio = (rat(ni - 2) + &two_a) / &nn;
        let next = inhom + &ratio * &ratio * &g[n as usize - 2];
        g.push(next);
        rising *= &two_a + rat(ni - 1);
    }
    g.truncate(n_max as usize + 1);
    g
}

/// Upper bound on the `a`-degree of `gamma_n(a)/mu0(a) * (a+1)_(n-1)`.
///
/// The `x^i` coefficient of `C_n^(a)` has `a`-degree `(n+i)/2`, so the
/// `x^(2j)` coefficient of the squared deflation has degree at most `n+j+1`;
/// the moment `(1/2)_j/(a+1)_j` times `(a+1)_(n-1)` adds `n-1-j`. The closed
/// side, of degree `n+1`, times `(a+1)_(n-1)` meets the same bound.
pub fn cleared_degree_bound(n: u64) -> u64 {
    2 * n
}

/// `gamma_n(a)/mu0(a) * (a+1)_(n-1)` computed symbolically in `a`.
pub fn cleared_direct_symbolic(n: u64) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let deflated = gegenbauer_symbolic(n).deflate_at_zero();
    let square = &deflated * &deflated;
    let mut acc = Poly::zero();
    for (i, c) in square.coeffs().iter().enumerate() {
        if i % 2 == 1 || c.is_zero() {
            continue;
        }
        let j = (i / 2) as u64;
        let weight = rising_factorial_poly(&rat(j as i64 + 1), n - 1 - j)
            .scale(&pochhammer(&frac(1, 2), j));
        acc = &acc + &(c * &weight);
    }
    acc
}

/// Closed-form side of the same cleared identity, symbolically in `a`.
pub fn cleared_closed_symbolic(n: u64) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let m = n / 2;
    let a = Poly::x();
    let closed = if n % 2 == 1 {
        (&a * &rising_factorial_poly(&frac(1, 2), m))
            .mul(&rising_factorial_poly(&Rational::zero(), m + 1))
            .scale(&Rational::new(pow2(2 * m + 2), factorial(n)))
    } else {
        (&a * &rising_factorial_poly(&Rational::zero(), m))
            .mul(&xn_closed(m))
            .scale(&Rational::new(BigInt::from(4), factorial(n)))
    };
    &closed * &rising_factorial_poly(&rat(1), n - 1)
}

/// Certifies `gamma_ratio_direct = gamma_closed_ratio` as an identity in `a`
/// for each `1 <= n <= n_max`.
///
/// Both sides times `(a+1)_(n-1)` are polynomials of degree at most
/// [`cleared_degree_bound`], and `(a+1)_(n-1)` does not vanish at the
/// positive integer sample points, so agreement at `bound + 1` samples
/// `a = 1, 2, ...` proves the identity. The symbolic cleared numerators are
/// also compared directly and their degree checked against the bound.
pub fn verify_gegenbauer_symbolic(n_max: u64, exec: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(format!("gegenbauer symbolic identity n<={n_max}"));
    let rows = exec.map_range(1..=n_max, |n| {
        let bound = cleared_degree_bound(n);
        let mut entries = Vec::new();
        let bad: Vec<String> = (1..=bound as i64 + 1)
            .filter_map(|s| {
                let a = rat(s);
                let d = gamma_ratio_direct(n, &a).expect("positive sample");
                let c = gamma_closed_ratio(n, &a).expect("positive sample");
                (d != c).then(|| format!("a={s}: direct {d} vs closed {c}"))
            })
            .collect();
        entries.push(CheckEntry::holds(
            n,
            format!("direct = closed at {} samples (degree bound {bound})", bound + 1),
            bad.is_empty(),
            || bad.join("; "),
        ));
        let direct = cleared_direct_symbolic(n);
        let closed = cleared_closed_symbolic(n);
        entries.push(CheckEntry::holds(
            n,
            "cleared numerator within degree bound",
            direct.degree() <= bound as isize,
            || format!("degree {}", direct.degree()),
        ));
        entries.push(CheckEntry::compare(
            n,
            "cleared numerators agree symbolically",
            &closed.display_in("a"),
            &direct.display_in("a"),
        ));
        entries
    });
    for e in rows.into_iter().flatten() {
        report.push(e);
    }
    report
}

/// Direct integration vs the closed form at a fixed `a`, for `1 <= n <= n_max`.
pub fn verify_fixed_parameter(a: &Rational, n_max: u64, exec: Execution) -> Result<VerificationReport> {
    GegenbauerParam::new(a.clone())?;
    let mut report = VerificationReport::new(format!("gegenbauer ratios a={a} n<={n_max}"));
    let rows = exec.map_range(1..=n_max, |n| {
        let direct = gamma_ratio_direct(n, a).expect("validated");
        let closed = gamma_closed_ratio(n, a).expect("validated");
        CheckEntry::compare(n, "gamma_ratio_direct = gamma_closed_ratio", &closed, &direct)
    });
    for e in rows {
        report.push(e);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::orthopoly::{gegenbauer_explicit, generate};

    #[test]
    fn symbolic_examples() {
        let a = Poly::x();
        assert_eq!(gegenbauer_symbolic(0), ParamPoly::new(vec![Poly::one()]));
        assert_eq!(
            gegenbauer_symbolic(1),
            ParamPoly::new(vec![Poly::zero(), a.scale(&rat(2))])
        );
        // 2a(a+1) x^2 - a
        let two_a_a1 = Poly::from_ints(&[0, 2, 2]);
        assert_eq!(
            gegenbauer_symbolic(2),
            ParamPoly::new(vec![-&a, Poly::zero(), two_a_a1])
        );
    }

    #[test]
    fn symbolic_agrees_with_fixed_parameter_generation() {
        for a in [frac(1, 2), rat(1), frac(7, 3), frac(-1, 3)] {
            let fam = Family::gegenbauer(a.clone()).unwrap();
            let Family::Gegenbauer(param) = &fam else { unreachable!() };
            for n in 0..=25 {
                let g = generate(&fam, n);
                assert_eq!(gegenbauer_symbolic(n as u64).eval_param(&a), g, "n={n} a={a}");
                assert_eq!(gegenbauer_explicit(param, n as u64), g);
            }
        }
    }

    #[test]
    fn direct_ratio_examples() {
        assert_eq!(gamma_ratio_direct(1, &rat(2)).unwrap(), rat(16));
        assert_eq!(gamma_ratio_direct(2, &rat(1)).unwrap(), rat(4));
        assert_eq!(gamma_ratio_direct(2, &frac(1, 2)).unwrap(), frac(3, 4));
        assert!(matches!(gamma_ratio_direct(1, &rat(0)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn closed_ratio_examples() {
        for a in [rat(1), rat(2), frac(7, 3)] {
            assert_eq!(gamma_closed_ratio(1, &a).unwrap(), rat(4) * &a * &a);
            assert_eq!(gamma_ratio_direct(1, &a).unwrap(), rat(4) * &a * &a);
        }
        assert_eq!(gamma_closed_ratio(2, &rat(1)).unwrap(), rat(4));
        assert_eq!(gamma_closed_ratio(3, &frac(1, 2)).unwrap(), rat(1));
        assert!(gamma_closed_ratio(3, &frac(-1, 2)).is_err());
    }

    #[test]
    fn recurrence_ratios_match_closed() {
        for a in [frac(1, 2), rat(1), frac(3, 2), rat(2), frac(7, 3)] {
            let g = gamma_recurrence_ratios(&a, 30);
            for n in 0..=30u64 {
                assert_eq!(g[n as usize], gamma_closed_ratio(n, &a).unwrap(), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn legendre_and_chebyshev_u_special_cases() {
        // a = 1/2 is Legendre with mu0 = 2; a = 1 is Chebyshev U with mu0 = pi/2
        for n in 1..15u64 {
            let leg = crate::integrate::closed_form(&Family::Legendre, n).coeff;
            assert_eq!(gamma_closed_ratio(n, &frac(1, 2)).unwrap() * rat(2), leg);
            let u = crate::integrate::closed_form(&Family::ChebyshevU, n).coeff;
            assert_eq!(gamma_closed_ratio(n, &rat(1)).unwrap() / rat(2), u);
        }
    }

    #[test]
    fn cleared_identity_small_n() {
        for n in 1..=8 {
            let d = cleared_direct_symbolic(n);
            assert!(d.degree() <= cleared_degree_bound(n) as isize);
            assert_eq!(d, cleared_closed_symbolic(n), "n={n}");
        }
    }

    #[test]
    fn symbolic_verification_examples() {
        let r = verify_gegenbauer_symbolic(4, Execution::Sequential);
        assert!(r.passed(), "{r}");
        assert!(r.entries[0].claim.contains("3 samples"));
        assert!(r.entries[3].claim.contains("5 samples"));
    }

    /// Double-precision Gamma versions of the unreduced closed forms.
    mod gamma_numeric {
        use statrs::function::gamma::gamma;
        use std::f64::consts::PI;

        pub fn mu0(a: f64) -> f64 {
            PI.sqrt() * gamma(a + 0.5) / gamma(a + 1.0)
        }

        pub fn gamma_odd(m: u64, a: f64) -> f64 {
            let n = (2 * m + 1) as f64;
            PI * gamma(2.0 * a + n) / (2f64.powf(2.0 * a - 2.0) * gamma(n + 1.0) * gamma(a).powi(2))
        }

        pub fn gamma_even(m: u64, a: f64, xm: f64) -> f64 {
            let mf = m as f64;
            PI * gamma(2.0 * a) * gamma(a + mf) * xm
                / (2f64.powf(2.0 * a - 3.0) * gamma(2.0 * mf + 1.0) * gamma(a).powi(3))
        }

        pub fn recurrence_term(n: u64, a: f64) -> f64 {
            let nf = n as f64;
            PI * (nf + a - 1.0) * gamma(nf - 1.0 + 2.0 * a)
                / (2f64.powf(2.0 * a - 3.0) * nf * gamma(nf + 1.0) * gamma(a).powi(2))
        }

        pub fn norm(n: u64, a: f64) -> f64 {
            let nf = n as f64;
            PI * gamma(nf + 2.0 * a) / (2f64.powf(2.0 * a - 1.0) * (nf + a) * gamma(nf + 1.0) * gamma(a).powi(2))
        }

        pub fn first(a: f64) -> f64 {
            4.0 * a * PI.sqrt() * gamma(a + 0.5) / gamma(a)
        }
    }

    #[test]
    fn gamma_reductions_match_double_precision_gamma() {
        use num_traits::ToPrimitive;
        let samples = [frac(3, 7), frac(13, 10), frac(29, 11), frac(-1, 5), frac(41, 9)];
        let rel = |x: f64, y: f64| ((x - y) / y).abs();
        for a in &samples {
            let af = a.to_f64().unwrap();
            let mu0 = gamma_numeric::mu0(af);
            for n in 1..=9u64 {
                let m = n / 2;
                let exact = gamma_closed_ratio(n, a).unwrap().to_f64().unwrap() * mu0;
                let numeric = if n % 2 == 1 {
                    gamma_numeric::gamma_odd(m, af)
                } else {
                    gamma_numeric::gamma_even(m, af, xn_closed(m).eval(a).to_f64().unwrap())
                };
                assert!(rel(exact, numeric) < 1e-10, "n={n} a={a}: {exact} vs {numeric}");

                let ni = n as i64;
                let two_a = a * rat(2);
                let term = rat(4) * a * (rat(ni - 1) + a) * pochhammer(&two_a, n - 1)
                    / (Rational::from_integer(factorial(n)) * rat(ni));
                let t = term.to_f64().unwrap() * mu0;
                assert!(rel(t, gamma_numeric::recurrence_term(n, af)) < 1e-10);

                let norm = crate::orthopoly::norm_constant(
                    &Family::gegenbauer(a.clone()).unwrap(),
                    n,
                );
                assert!(rel(norm.coeff.to_f64().unwrap() * mu0, gamma_numeric::norm(n, af)) < 1e-10);
            }
            assert!(rel(4.0 * af * af * mu0, gamma_numeric::first(af)) < 1e-10);
        }
    }
}
