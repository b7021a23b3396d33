//! WZ certificate for `X_n(-n) = 0`.
//!
//! `F(n,k) = (2k-1-n) C(2n-1,2k-2) / (k^2 (2k-1) C(n,k)^2)` sums to zero over
//! `1 <= k <= n` because `F(n,k) = G(n,k+1) - G(n,k)` with
//! `G(n,k) = (k-n-1) C(2n-1,2k-2) / (k^2 C(n,k)^2)`. The upper boundary value
//! `G(n,n+1)` is `0/0` as written, so it is checked as `G(n,n) + F(n,n)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::{binomial_row, frac, Rational};
use crate::par::Execution;
use crate::report::{CheckEntry, VerificationReport};

struct Rows {
    odd: Vec<BigInt>,
    n: Vec<BigInt>,
}

impl Rows {
    fn new(n: u64) -> Self {
        Self {
            odd: binomial_row(2 * n - 1),
            n: binomial_row(n),
        }
    }

    fn f(&self, n: u64, k: u64) -> Rational {
        let (ni, ki) = (n as i64, k as i64);
        let c = &self.n[k as usize];
        Rational::new(
            BigInt::from(2 * ki - 1 - ni) * &self.odd[2 * k as usize - 2],
            BigInt::from(ki * ki * (2 * ki - 1)) * c * c,
        )
    }

    fn g(&self, n: u64, k: u64) -> Rational {
        let (ni, ki) = (n as i64, k as i64);
        let c = &self.n[k as usize];
        Rational::new(
            BigInt::from(ki - ni - 1) * &self.odd[2 * k as usize - 2],
            BigInt::from(ki * ki) * c * c,
        )
    }
}

/// `F(n,k)` for `1 <= k <= n`.
pub fn wz_f(n: u64, k: u64) -> Rational {
    Rows::new(n).f(n, k)
}

/// `G(n,k)` for `1 <= k <= n`.
pub fn wz_g(n: u64, k: u64) -> Rational {
    Rows::new(n).g(n, k)
}

pub fn wz_check(n: u64) -> VerificationReport {
    let mut report = VerificationReport::new(format!("WZ pair n={n}"));
    let rows = Rows::new(n);
    let f: Vec<Rational> = (1..=n).map(|k| rows.f(n, k)).collect();
    let g: Vec<Rational> = (1..=n).map(|k| rows.g(n, k)).collect();

    let broken: Vec<u64> = (1..n)
        .filter(|&k| {
            let i = k as usize - 1;
            f[i] != &g[i + 1] - &g[i]
        })
        .collect();
    report.push(CheckEntry::holds(
        n,
        "F(n,k) = G(n,k+1) - G(n,k), 1 <= k <= n-1",
        broken.is_empty(),
        || format!("fails at k = {broken:?}"),
    ));
    let sum = f.iter().fold(Rational::zero(), |acc, v| acc + v);
    report.push(CheckEntry::compare(n, "sum_k F(n,k) = 0", &Rational::zero(), &sum));
    let minus_inv = frac(-1, n as i64);
    report.push(CheckEntry::compare(n, "G(n,1) = -1/n", &minus_inv, &g[0]));
    let last = n as usize - 1;
    report.push(CheckEntry::compare(n, "G(n,n) + F(n,n) = -1/n", &minus_inv, &(&g[last] + &f[last])));
    report
}

pub fn verify_wz(n_max: u64, exec: Execution) -> VerificationReport {
    let mut report = VerificationReport::new(format!("WZ pair n<={n_max}"));
    for r in exec.map_range(1..=n_max, wz_check) {
        report.extend(r);
    }
    report
}
