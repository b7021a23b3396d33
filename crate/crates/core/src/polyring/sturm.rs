//! Sturm sequences and real-root isolation by exact bisection.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{frac, Rational};

/// Half-open interval `(lo, hi]` holding `count` distinct real roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBox {
    pub lo: Rational,
    pub hi: Rational,
    pub count: usize,
}

impl RootBox {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Midpoint approximation of the enclosed root.
    pub fn midpoint_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / BigInt::from(2))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// True when the two intervals share no point.
    pub fn disjoint_from(&self, other: &RootBox) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }
}

/// Sturm chain of the squarefree part of a polynomial.
///
/// Each remainder is rescaled by a positive rational to integer content 1,
/// which keeps the sign pattern while bounding coefficient growth.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Poly>,
    // integer coefficients of each chain element, for sign evaluation
    ints: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &Poly) -> Self {
        if p.is_zero() {
            return Self {
                chain: Vec::new(),
                ints: Vec::new(),
            };
        }
        let base = p.squarefree_part().positive_rescale();
        let mut chain = vec![base.clone()];
        if base.degree() >= 1 {
            chain.push(base.derivative().positive_rescale());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2]
                    .div_rem(&chain[n - 1])
                    .expect("chain elements are nonzero");
                if r.is_zero() {
                    break;
                }
                chain.push((-r).positive_rescale());
            }
        }
        let ints = chain.iter().map(|p| p.to_integer_parts().0).collect();
        Self { chain, ints }
    }

    /// The squarefree polynomial the chain was built from.
    pub fn base(&self) -> Option<&Poly> {
        self.chain.first()
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    fn sign(v: &Rational) -> i8 {
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn variations_at(&self, at: &Rational) -> usize {
        let (num, den) = (at.numer(), at.denom());
        let max_deg = self.ints.iter().map(Vec::len).max().unwrap_or(0);
        let mut den_pows = vec![BigInt::one()];
        for i in 1..max_deg {
            let next = &den_pows[i - 1] * den;
            den_pows.push(next);
        }
        Self::count_changes(self.ints.iter().map(|c| {
            // sign of den^d p(num/den), with den > 0
            let d = c.len() - 1;
            let mut acc = c[d].clone();
            for i in (0..d).rev() {
                acc = acc * num + &c[i] * &den_pows[d - i];
            }
            match acc.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            }
        }))
    }

    fn variations_at_infinity(&self, negative: bool) -> usize {
        Self::count_changes(self.chain.iter().map(|p| {
            let s = Self::sign(p.leading().expect("nonzero chain element"));
            if negative && p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots on the whole line.
    pub fn total_real_roots(&self) -> usize {
        self.variations_at_infinity(true) - self.variations_at_infinity(false)
    }

    /// Distinct real roots in `(lo, hi]`; neither endpoint may be a root.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: Box::new(lo.clone()),
                hi: Box::new(hi.clone()),
            });
        }
        let base = self.base().ok_or_else(|| Error::BoundaryRoot(Box::new(lo.clone())))?;
        for end in [lo, hi] {
            if base.eval(end).is_zero() {
                return Err(Error::BoundaryRoot(Box::new(end.clone())));
            }
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }

    fn is_root(&self, at: &Rational) -> bool {
        self.base().is_some_and(|b| b.eval(at).is_zero())
    }

    /// A split point strictly inside `(lo, hi)` that is not a root.
    fn split_point(&self, lo: &Rational, hi: &Rational) -> Rational {
        let w = hi - lo;
        let mut den = 2i64;
        loop {
            for num in 1..den {
                let t = lo + &w * frac(num, den);
                if !self.is_root(&t) {
                    return t;
                }
            }
            den += 1;
        }
    }

    /// Halves a single-root box, keeping the half that holds the root.
    pub fn bisect(&self, b: &RootBox) -> RootBox {
        let mid = self.split_point(&b.lo, &b.hi);
        let left = self.count(&b.lo, &mid).expect("split point is not a root");
        if left >= 1 {
            RootBox {
                lo: b.lo.clone(),
                hi: mid,
                count: left,
            }
        } else {
            RootBox {
                lo: mid,
                hi: b.hi.clone(),
                count: b.count,
            }
        }
    }

    /// Refines a single-root box until its width is at most `width`.
    pub fn refine(&self, b: &RootBox, width: &Rational) -> RootBox {
        let mut b = b.clone();
        while &b.width() > width {
            b = self.bisect(&b);
        }
        b
    }

    /// Disjoint single-root boxes of width at most `width`, ascending.
    pub fn isolate(&self, width: &Rational) -> Vec<RootBox> {
        let Some(base) = self.base() else {
            return Vec::new();
        };
        if base.degree() < 1 {
            return Vec::new();
        }
        let bound = root_bound(base);
        let lo = -&bound;
        let total = self.count(&lo, &bound).expect("bound exceeds every root");
        let mut pending = vec![RootBox {
            lo,
            hi: bound,
            count: total,
        }];
        let mut done = Vec::new();
        while let Some(b) = pending.pop() {
            if b.count == 0 {
                continue;
            }
            if b.count == 1 && &b.width() <= width {
                done.push(b);
                continue;
            }
            let mid = self.split_point(&b.lo, &b.hi);
            let left = self.count(&b.lo, &mid).expect("split point is not a root");
            pending.push(RootBox {
                lo: mid.clone(),
                hi: b.hi,
                count: b.count - left,
            });
            pending.push(RootBox {
                lo: b.lo,
                hi: mid,
                count: left,
            });
        }
        done.sort_by(|a, b| a.lo.cmp(&b.lo));
        done
    }
}

/// Power of two strictly larger than the Cauchy bound `1 + max |c_i / c_n|`.
fn root_bound(p: &Poly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let max_ratio = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    let cauchy = max_ratio + Rational::one();
    let mut b = Rational::one();
    while b <= cauchy {
        b *= BigInt::from(2);
    }
    b
}

/// Distinct real roots of `p` in `(lo, hi]`, after squarefree reduction.
pub fn sturm_count(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    SturmSequence::new(p).count(lo, hi)
}

/// Isolating boxes of width at most `1/1024`.
pub fn isolate_roots(p: &Poly) -> Vec<RootBox> {
    isolate_roots_with_width(p, &frac(1, 1024))
}

pub fn isolate_roots_with_width(p: &Poly, width: &Rational) -> Vec<RootBox> {
    SturmSequence::new(p).isolate(width)
}
