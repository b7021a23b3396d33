use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rising_factorial_poly;
use crate::error::Result;
use crate::exactnum::{
    binomial, factorial, frac, pochhammer, pow2, rat, stirling1_unsigned_row, PrimeModulus,
    Rational,
};
use crate::par::Execution;
use crate::polyring::{reduce_mod_prime, Poly, PolyModP, SturmSequence};
use crate::report::{CheckEntry, VerificationReport};

const RANGE_NOTE: &str = "special values X_n(-k) checked for 1 <= k <= n-1, the range used by the \
symmetry relation; the alternative range 1-n <= k <= -1 leaves (1/2)_k undefined";

fn binom_rat(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n as i64, k as i64))
}

/// `X_n(a) = 2^(2n-1) (a+1/2)_n - C(2n-1, n-1) (a)_n`, with `X_0 = 0`.
pub fn xn_closed(n: u64) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let first = rising_factorial_poly(&frac(1, 2), n).scale(&Rational::from_integer(pow2(2 * n - 1)));
    let second = rising_factorial_poly(&Rational::zero(), n).scale(&binom_rat(2 * n - 1, n - 1));
    &first - &second
}

/// `X_0..=X_n_max` from
/// `X_n = (2/n)(a+n-1)(2n-1) X_(n-1) + ((2n+a-1)/n) 2^(2n-2) (a+1/2)_(n-1)`.
pub fn xn_recurrence_first_table(n_max: u64) -> Vec<Poly> {
    let mut out = vec![Poly::zero()];
    // (a+1/2)_(n-1)
    let mut rising = Poly::one();
    for n in 1..=n_max {
        let ni = n as i64;
        let prev = &out[n as usize - 1];
        let hom = (&Poly::linear(rat(ni - 1)) * prev).scale(&frac(2 * (2 * ni - 1), ni));
        let inhom = (&Poly::linear(rat(2 * ni - 1)) * &rising)
            .scale(&Rational::new(pow2(2 * n - 2), BigInt::from(n)));
        out.push(&hom + &inhom);
        rising = &rising * &Poly::linear(frac(2 * ni - 1, 2));
    }
    out
}

pub fn xn_recurrence_first(n: u64) -> Poly {
    xn_recurrence_first_table(n).pop().expect("table is nonempty")
}

/// `X_0..=X_n_max` from the three-term recurrence
/// `n(2n+a-3) X_n = 2(2n+a-2)(4n^2+4an-8n-3a+3) X_(n-1)
///                 - 4(a+n-2)(2n-3)(2a+2n-3)(2n+a-1) X_(n-2)`,
/// dividing by `n(2n+a-3)` exactly in `Q[a]`.
pub fn xn_recurrence_second_table(n_max: u64) -> Result<Vec<Poly>> {
    let mut out = vec![Poly::zero(), Poly::from_ints(&[1, 1])];
    for n in 2..=n_max {
        let ni = n as i64;
        let k = n as usize;
        // 4n^2 - 8n + 3 + (4n - 3) a
        let quad = Poly::from_ints(&[4 * ni * ni - 8 * ni + 3, 4 * ni - 3]);
        let t1 = (&Poly::from_ints(&[2 * ni - 2, 1]) * &quad).scale(&rat(2)) * &out[k - 1];
        let t2 = Poly::from_ints(&[ni - 2, 1])
            * Poly::from_ints(&[2 * ni - 3, 2])
            * Poly::from_ints(&[2 * ni - 1, 1]);
        let t2 = t2.scale(&rat(4 * (2 * ni - 3))) * &out[k - 2];
        let divisor = Poly::from_ints(&[2 * ni - 3, 1]).scale(&rat(ni));
        out.push((&t1 - &t2).exact_divide(&divisor)?);
    }
    out.truncate(n_max as usize + 1);
    Ok(out)
}

pub fn xn_recurrence_second(n: u64) -> Result<Poly> {
    Ok(xn_recurrence_second_table(n)?.pop().expect("table is nonempty"))
}

/// `X_n = (1/8) C(2n,n) sum_k 2^(2k) / ((2k-1) C(2k-2,k-1)) (2k+a-1) (a+1/2)_(k-1) (a+k)_(n-k)`.
pub fn xn_sum(n: u64) -> Poly {
    let mut acc = Poly::zero();
    for k in 1..=n {
        let ki = k as i64;
        let factor = Rational::from_integer(pow2(2 * k))
            / (rat(2 * ki - 1) * binom_rat(2 * k - 2, k - 1));
        let term = Poly::linear(rat(2 * ki - 1))
            * rising_factorial_poly(&frac(1, 2), k - 1)
            * rising_factorial_poly(&rat(ki), n - k);
        acc = &acc + &term.scale(&factor);
    }
    acc.scale(&(binom_rat(2 * n, n) / rat(8)))
}

/// Coefficients `rho_(n,r)` of `X_n` through unsigned Stirling numbers `c(n,j)`:
/// `rho_(n,r) = sum_(j>=r) 2^(2n-1-j+r) C(j,r) c(n,j) - C(2n-1,n-1) c(n,r)`.
pub fn xn_coefficients_rho(n: u64) -> Vec<Rational> {
    let c = stirling1_unsigned_row(n as usize);
    let central = binomial(2 * n as i64 - 1, n as i64 - 1);
    (0..=n)
        .map(|r| {
            let mut s = BigInt::zero();
            for j in r..=n {
                s += pow2(2 * n - 1 - j + r) * binomial(j as i64, r as i64) * &c[j as usize];
            }
            Rational::from_integer(s - &central * &c[r as usize])
        })
        .collect()
}

/// `(-1)^k 2^(2n-1) (1/2)_k (1/2)_(n-k)`.
fn special_value(n: u64, k: u64) -> Rational {
    let v = Rational::from_integer(pow2(2 * n - 1))
        * pochhammer(&frac(1, 2), k)
        * pochhammer(&frac(1, 2), n - k);
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Exact checks of the coefficient and value properties of `X_n`, plus a Sturm
/// certificate that all `n` roots are real and lie in `(-n-1, 0)`.
pub fn xn_properties(n: u64) -> VerificationReport {
    let mut report = xn_value_properties(n);
    report.extend(xn_root_certificate(n));
    report
}

/// [`xn_properties`] without the Sturm certificate.
pub fn xn_value_properties(n: u64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("X_{n} properties"));
    let x = xn_closed(n);
    report.push(CheckEntry::compare(n, "degree n", &(n as isize), &x.degree()));

    let minus_n = rat(-(n as i64));
    report.push(CheckEntry::compare(n, "X_n(-n) = 0", &Rational::zero(), &x.eval(&minus_n)));
    report.push(CheckEntry::holds(
        n,
        "a+n divides X_n",
        x.exact_divide(&Poly::linear(rat(n as i64))).is_ok(),
        || "nonzero remainder".into(),
    ));

    let constant = Rational::new(factorial(2 * n), factorial(n) * BigInt::from(2));
    report.push(CheckEntry::compare(n, "constant term (2n)!/(2 n!)", &constant, &x.constant_term()));

    let lead = Rational::from_integer(pow2(2 * n - 1)) - binom_rat(2 * n, n) / rat(2);
    report.push(CheckEntry::compare(
        n,
        "leading coefficient 2^(2n-1) - C(2n,n)/2",
        &lead,
        &x.leading().cloned().unwrap_or_default(),
    ));

    let rho = xn_coefficients_rho(n);
    let coeffs: Vec<Rational> = (0..=n as usize).map(|i| x.coeff(i)).collect();
    report.push(CheckEntry::holds(n, "rho_(n,r) equal the coefficients", rho == coeffs, || {
        format!("{rho:?}")
    }));
    report.push(CheckEntry::holds(
        n,
        "rho_(n,r) are positive integers",
        rho.iter().all(|r| r.is_integer() && r.is_positive()),
        || format!("{rho:?}"),
    ));

    let mut bad_special = Vec::new();
    let mut bad_symmetry = Vec::new();
    for k in 1..n {
        let at_minus_k = x.eval(&rat(-(k as i64)));
        if at_minus_k != special_value(n, k) {
            bad_special.push(k);
        }
        let mirrored = x.eval(&rat(k as i64 - n as i64));
        let expected = if n % 2 == 1 { -&at_minus_k } else { at_minus_k };
        if mirrored != expected {
            bad_symmetry.push(k);
        }
    }
    report.push(CheckEntry::holds(
        n,
        "X_n(-k) = (-1)^k 2^(2n-1) (1/2)_k (1/2)_(n-k), 1 <= k <= n-1",
        bad_special.is_empty(),
        || format!("fails at k = {bad_special:?}"),
    ));
    report.push(CheckEntry::holds(
        n,
        "X_n(k-n) = (-1)^n X_n(-k), 1 <= k <= n-1",
        bad_symmetry.is_empty(),
        || format!("fails at k = {bad_symmetry:?}"),
    ));
    report.note(RANGE_NOTE);
    report
}

/// Sturm certificate: `X_n` is squarefree with `n` real roots, all in `(-n-1, 0)`.
pub fn xn_root_certificate(n: u64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("X_{n} roots"));
    let sturm = SturmSequence::new(&xn_closed(n));
    report.push(CheckEntry::compare(
        n,
        "X_n squarefree",
        &(n as isize),
        &sturm.base().map_or(-1, Poly::degree),
    ));
    report.push(CheckEntry::compare(n, "real roots on the line", &(n as usize), &sturm.total_real_roots()));
    let lo = rat(-(n as i64) - 1);
    match sturm.count(&lo, &Rational::zero()) {
        Ok(c) => report.push(CheckEntry::compare(n, "roots in (-n-1, 0)", &(n as usize), &c)),
        Err(e) => report.push(CheckEntry::holds(n, "roots in (-n-1, 0)", false, || e.to_string())),
    }
    report
}

/// `X_q mod q` against `a^q - a`.
pub fn xn_mod_prime(q: PrimeModulus) -> VerificationReport {
    let mut report = VerificationReport::new(format!("X_{} mod {}", q.get(), q.get()));
    let expected = PolyModP::frobenius_minus_identity(q);
    let entry = match reduce_mod_prime(&xn_closed(q.get()), q) {
        Ok(actual) => CheckEntry::compare(q.get(), "X_q = a^q - a (mod q)", &expected, &actual),
        Err(e) => CheckEntry::holds(q.get(), "X_q = a^q - a (mod q)", false, || e.to_string()),
    };
    report.push(entry);
    report
}

/// Congruence check for every prime `q <= q_max`.
pub fn verify_xn_congruences(q_max: u64, exec: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(format!("X_q congruences q<={q_max}"));
    let primes: Vec<PrimeModulus> = (2..=q_max).filter_map(|q| PrimeModulus::new(q).ok()).collect();
    for r in exec.map(primes, xn_mod_prime) {
        report.extend(r);
    }
    report
}

/// The four constructions of `X_n` agree for `1 <= n <= n_max`.
pub fn verify_xn_routes(n_max: u64, exec: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(format!("X_n routes n<={n_max}"));
    let first = xn_recurrence_first_table(n_max);
    let second = xn_recurrence_second_table(n_max);
    let rows = exec.map_range(1..=n_max, |n| {
        let closed = xn_closed(n);
        let k = n as usize;
        let mut entries = vec![
            CheckEntry::compare(n, "closed = first recurrence", &closed, &first[k]),
            CheckEntry::compare(n, "closed = sum", &closed, &xn_sum(n)),
        ];
        entries.push(match &second {
            Ok(t) => CheckEntry::compare(n, "closed = second recurrence", &closed, &t[k]),
            Err(e) => CheckEntry::holds(n, "closed = second recurrence", false, || e.to_string()),
        });
        entries
    });
    for e in rows.into_iter().flatten() {
        report.push(e);
    }
    report
}

/// [`xn_properties`] for `1 <= n <= n_max`, Sturm certificates up to `sturm_max`.
pub fn verify_xn_properties(n_max: u64, sturm_max: u64, exec: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(format!("X_n properties n<={n_max}"));
    let rows = exec.map_range(1..=n_max, |n| {
        if n <= sturm_max {
            xn_properties(n)
        } else {
            xn_value_properties(n)
        }
    });
    for r in rows {
        report.extend(r);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_examples() {
        assert_eq!(xn_closed(0), Poly::zero());
        assert_eq!(xn_closed(1), Poly::from_ints(&[1, 1]));
        assert_eq!(xn_closed(2), Poly::from_ints(&[6, 13, 5]));
        assert_eq!(xn_closed(3), Poly::from_ints(&[60, 164, 114, 22]));
    }

    #[test]
    fn route_examples() {
        assert_eq!(xn_recurrence_first(1), Poly::from_ints(&[1, 1]));
        assert_eq!(xn_recurrence_second(2).unwrap(), Poly::from_ints(&[6, 13, 5]));
        assert_eq!(xn_sum(2), Poly::from_ints(&[6, 13, 5]));
        assert_eq!(xn_sum(1), Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn routes_agree_small() {
        assert!(verify_xn_routes(15, Execution::Sequential).passed());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(xn_coefficients_rho(1), vec![rat(1), rat(1)]);
        assert_eq!(xn_coefficients_rho(2), vec![rat(6), rat(13), rat(5)]);
        assert_eq!(xn_coefficients_rho(3), vec![rat(60), rat(164), rat(114), rat(22)]);
    }

    #[test]
    fn property_examples() {
        let x2 = xn_closed(2);
        assert_eq!(x2.eval(&rat(-1)), rat(-2));
        assert_eq!(special_value(2, 1), rat(-2));
        let x3 = xn_closed(3);
        assert_eq!(x3.eval(&rat(-1)), rat(-12));
        assert_eq!(x3.eval(&rat(-2)), rat(12));
        for n in 1..=12 {
            let r = xn_properties(n);
            assert!(r.passed(), "{r}");
            assert!(r.notes.iter().any(|s| s.contains("1 <= k <= n-1")));
        }
    }

    #[test]
    fn congruence_examples() {
        for q in [2, 3, 5, 7] {
            let r = xn_mod_prime(PrimeModulus::new(q).unwrap());
            assert!(r.passed(), "{r}");
        }
        let p = reduce_mod_prime(&xn_closed(2), PrimeModulus::new(2).unwrap()).unwrap();
        assert_eq!(p.coeffs(), &[0, 1, 1]);
        assert_eq!(p.to_string(), "a^2 + a (mod 2)");
    }

    #[test]
    fn congruence_fails_for_composite_index() {
        // X_4 mod 2 is not a^4 - a; the statement needs q prime
        let two = PrimeModulus::new(2).unwrap();
        let p = reduce_mod_prime(&xn_closed(4), two).unwrap();
        assert_ne!(p, PolyModP::frobenius_minus_identity(two));
    }
}
