use crate::error::{Error, Result};
use crate::exactnum::rat;
use crate::par::Execution;
use crate::polyring::{Poly, RootBox, SturmSequence};
use crate::report::{CheckEntry, VerificationReport};

use super::xn_closed;

/// `Z_n = X_n / (a + n)`.
pub fn z_polynomial(n: u64) -> Result<Poly> {
    xn_closed(n).exact_divide(&Poly::linear(rat(n as i64)))
}

/// Refines the two box lists until no box of one overlaps a box of the other.
fn separate(
    sa: &SturmSequence,
    a: &mut [RootBox],
    sb: &SturmSequence,
    b: &mut [RootBox],
) {
    loop {
        let mut clean = true;
        for x in a.iter_mut() {
            for y in b.iter_mut() {
                if !x.disjoint_from(y) {
                    clean = false;
                    *x = sa.bisect(x);
                    *y = sb.bisect(y);
                }
            }
        }
        if clean {
            return;
        }
    }
}

/// Whether the roots of `Z_(n-1)` strictly interlace those of `Z_n`.
///
/// The verdict is informational: interlacing is an open conjecture here.
pub fn interlacing_check(n: u64) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("interlacing needs n >= 2, got {n}")));
    }
    let mut report = VerificationReport::new(format!("Z_{n} / Z_{} interlacing", n - 1));
    let zn = z_polynomial(n)?;
    let zm = z_polynomial(n - 1)?;
    report.push(CheckEntry::compare(n, "deg Z_n = n-1", &(n as isize - 1), &zn.degree()));

    let sn = SturmSequence::new(&zn);
    let sm = SturmSequence::new(&zm);
    // coarse boxes; `separate` refines only where the two sets overlap
    let width = rat(1);
    let mut bn = sn.isolate(&width);
    let mut bm = sm.isolate(&width);

    let shared = zn.gcd(&zm).degree() > 0;
    let outcome = if shared || bn.len() != n as usize - 1 || bm.len() + 1 != bn.len() {
        false
    } else {
        separate(&sn, &mut bn, &sm, &mut bm);
        // roots of Z_n sit at even positions, Z_(n-1) at odd ones
        let mut merged: Vec<(bool, &RootBox)> = bn.iter().map(|b| (true, b)).collect();
        merged.extend(bm.iter().map(|b| (false, b)));
        merged.sort_by(|x, y| x.1.lo.cmp(&y.1.lo));
        merged.iter().enumerate().all(|(i, (is_n, _))| *is_n == (i % 2 == 0))
    };
    report.push(CheckEntry::informational(
        n,
        "exactly one root of Z_(n-1) between consecutive roots of Z_n",
        outcome,
    ));
    Ok(report)
}

pub fn verify_interlacing(n_max: u64, exec: Execution) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("interlacing n<={n_max}"));
    for r in exec.map_range(2..=n_max, interlacing_check) {
        report.extend(r?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn verdict(r: &VerificationReport) -> bool {
        r.entries
            .iter()
            .find_map(|e| match e.verdict {
                Verdict::Informational(v) => Some(v),
                _ => None,
            })
            .unwrap()
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_polynomial(1).unwrap(), Poly::one());
        assert_eq!(z_polynomial(2).unwrap(), Poly::from_ints(&[3, 5]));
        assert_eq!(z_polynomial(3).unwrap(), Poly::from_ints(&[20, 48, 22]));
    }

    #[test]
    fn small_cases() {
        let r2 = interlacing_check(2).unwrap();
        assert!(r2.passed());
        assert!(verdict(&r2));
        assert!(verdict(&interlacing_check(3).unwrap()));
        assert!(verdict(&interlacing_check(4).unwrap()));
        assert!(interlacing_check(1).is_err());
    }
}
