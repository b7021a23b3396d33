//! Double-precision Gauss rules, an independent numeric check on the exact values.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::integrate::weight_moment;
use crate::orthopoly::Family;

const MAX_ITER: usize = 100;
const TOL: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub family: Family,
    pub order: usize,
}

impl QuadRule {
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

/// Monic three-term data: `p_(k+1) = (x - b_k) p_k - c_k p_(k-1)`.
struct Jacobi {
    b: Vec<f64>,
    c: Vec<f64>,
    mass: f64,
}

impl Jacobi {
    fn new(family: &Family, m: usize) -> Self {
        let rec = family.recurrence();
        let steps: Vec<(f64, f64, f64)> = (0..=m as u64).map(|k| rec.step_f64(k)).collect();
        let b = steps.iter().map(|(al, be, _)| -be / al).collect();
        let mut c = vec![0.0];
        for k in 1..=m {
            c.push(steps[k].2 / (steps[k].0 * steps[k - 1].0));
        }
        let mass = weight_moment(family, 0)
            .to_f64(family.param())
            .expect("finite mass");
        Self { b, c, mass }
    }

    /// Orthonormal `q_0..q_m` and `q_m'` at `x`.
    fn eval(&self, m: usize, x: f64) -> (Vec<f64>, f64) {
        let mut q = Vec::with_capacity(m + 1);
        q.push(1.0 / self.mass.sqrt());
        let mut dprev = 0.0;
        let mut d = 0.0;
        let mut prev = 0.0;
        for k in 0..m {
            let s_next = self.c[k + 1].sqrt();
            let s_k = self.c[k].sqrt();
            let next = ((x - self.b[k]) * q[k] - s_k * prev) / s_next;
            let dnext = (q[k] + (x - self.b[k]) * d - s_k * dprev) / s_next;
            prev = q[k];
            dprev = d;
            d = dnext;
            q.push(next);
        }
        (q, d)
    }

    fn newton(&self, m: usize, mut x: f64) -> Option<f64> {
        for _ in 0..MAX_ITER {
            let (q, d) = self.eval(m, x);
            let step = q[m] / d;
            if !step.is_finite() {
                return None;
            }
            x -= step;
            if step.abs() <= TOL * x.abs().max(1.0) {
                return Some(x);
            }
        }
        // accept a residual stuck at rounding level
        let (q, d) = self.eval(m, x);
        (q[m].abs() <= 64.0 * f64::EPSILON * d.abs() * x.abs().max(1.0)).then_some(x)
    }

    /// Gershgorin bound on the nodes.
    fn radius(&self, m: usize) -> f64 {
        (0..m)
            .map(|k| {
                let left = self.c[k].sqrt();
                let right = if k + 1 < m { self.c[k + 1].sqrt() } else { 0.0 };
                self.b[k].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    fn weight(&self, m: usize, x: f64) -> f64 {
        let (q, _) = self.eval(m, x);
        1.0 / q[..m].iter().map(|v| v * v).sum::<f64>()
    }
}

fn initial_guesses(family: &Family, jac: &Jacobi, m: usize) -> Option<Vec<f64>> {
    let mf = m as f64;
    match family {
        Family::Hermite => {
            let mut roots = Vec::with_capacity(m);
            for i in 0..m.div_ceil(2) {
                let z = match i {
                    0 => (2.0 * mf + 1.0).sqrt() - 1.85575 * (2.0 * mf + 1.0).powf(-1.0 / 6.0),
                    1 => roots[0] - 1.14 * mf.powf(0.426) / roots[0],
                    2 => 1.86 * roots[1] - 0.86 * roots[0],
                    3 => 1.91 * roots[2] - 0.91 * roots[1],
                    _ => 2.0 * roots[i - 1] - roots[i - 2],
                };
                roots.push(jac.newton(m, z)?);
            }
            Some(roots)
        }
        Family::Laguerre => {
            let mut roots: Vec<f64> = Vec::with_capacity(m);
            for i in 0..m {
                let z = match i {
                    0 => 3.0 / (1.0 + 2.4 * mf),
                    1 => roots[0] + 15.0 / (1.0 + 2.5 * mf),
                    _ => {
                        let ai = (i - 1) as f64;
                        roots[i - 1] + (1.0 + 2.55 * ai) / (1.9 * ai) * (roots[i - 1] - roots[i - 2])
                    }
                };
                roots.push(jac.newton(m, z)?);
            }
            Some(roots)
        }
        _ => (1..=m)
            .map(|i| jac.newton(m, (PI * (i as f64 - 0.25) / (mf + 0.5)).cos()))
            .collect(),
    }
}

/// Completes a descending half set of Hermite nodes by symmetry.
fn mirror(mut half: Vec<f64>, m: usize) -> Vec<f64> {
    if m % 2 == 1 {
        *half.last_mut().expect("m >= 1") = 0.0;
    }
    let mut all = half.clone();
    all.extend(half.iter().take(m / 2).map(|x| -x));
    all.sort_by(f64::total_cmp);
    all
}

/// Forces an even weight's rule to be exactly symmetric about 0.
fn symmetrize(nodes: &mut [f64], weights: &mut [f64]) {
    let m = nodes.len();
    for i in 0..m / 2 {
        let j = m - 1 - i;
        let x = 0.5 * (nodes[j] - nodes[i]);
        let w = 0.5 * (weights[i] + weights[j]);
        (nodes[i], nodes[j]) = (-x, x);
        (weights[i], weights[j]) = (w, w);
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
}

fn well_formed(family: &Family, nodes: &[f64], m: usize) -> bool {
    let (lo, hi) = match family {
        Family::Hermite => (f64::NEG_INFINITY, f64::INFINITY),
        Family::Laguerre => (0.0, f64::INFINITY),
        _ => (-1.0, 1.0),
    };
    nodes.len() == m
        && nodes.iter().all(|x| x.is_finite() && *x > lo && *x < hi)
        && nodes.windows(2).all(|w| w[0] < w[1] && (w[1] - w[0]) > 1e-9 * w[1].abs().max(1.0))
}

/// Sign changes of `q_m` on a grid inside the Gershgorin disc, then Newton.
fn bracket_fallback(family: &Family, jac: &Jacobi, m: usize) -> Result<Vec<f64>> {
    let r = jac.radius(m) * 1.0001 + 1e-12;
    let (lo, hi) = match family {
        Family::Laguerre => (0.0, r),
        Family::Hermite => (-r, r),
        _ => (-1.0, 1.0),
    };
    let fail = |node| Error::ConvergenceFailure {
        family: family.name().to_string(),
        order: m,
        node,
    };
    let mut grid = 64 * m;
    while grid <= 1 << 20 {
        // offset grid, so no sample lands on a symmetric root such as 0
        let at = |i: usize| lo + (hi - lo) * (i as f64 + 0.2917) / (grid as f64 + 1.0);
        let f = |x: f64| jac.eval(m, x).0[m];
        let mut roots = Vec::new();
        let mut x0 = at(0);
        let mut f0 = f(x0);
        for i in 1..=grid {
            let x1 = at(i);
            let f1 = f(x1);
            if f0 != 0.0 && f1 != 0.0 && f0.signum() == f1.signum() {
                x0 = x1;
                f0 = f1;
                continue;
            }
            let (mut a, mut b, mut fa) = (x0, x1, f0);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                let fm = f(mid);
                if fm == 0.0 || b - a <= TOL * mid.abs().max(1.0) {
                    a = mid;
                    b = mid;
                    break;
                }
                if fa != 0.0 && fm.signum() == fa.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            let mid = 0.5 * (a + b);
            roots.push(jac.newton(m, mid).unwrap_or(mid));
            x0 = x1;
            f0 = f1;
        }
        if well_formed(family, &roots, m) {
            return Ok(roots);
        }
        grid *= 4;
    }
    Err(fail(0))
}

/// `m`-point Gauss rule for the family weight.
pub fn gauss_rule(family: &Family, m: usize) -> Result<QuadRule> {
    if m == 0 {
        return Err(Error::InvalidParameter("a Gauss rule needs m >= 1".into()));
    }
    let mf = m as f64;
    let (nodes, weights) = match family {
        Family::ChebyshevT => {
            let mut nodes: Vec<f64> = (1..=m)
                .map(|i| (PI * (2 * i - 1) as f64 / (2.0 * mf)).cos())
                .collect();
            nodes.reverse();
            if m % 2 == 1 {
                nodes[m / 2] = 0.0;
            }
            (nodes, vec![PI / mf; m])
        }
        Family::ChebyshevU => {
            let t = |i: usize| PI * i as f64 / (mf + 1.0);
            let mut nodes: Vec<f64> = (1..=m).map(|i| t(i).cos()).collect();
            let mut weights: Vec<f64> = (1..=m).map(|i| PI / (mf + 1.0) * t(i).sin().powi(2)).collect();
            nodes.reverse();
            weights.reverse();
            if m % 2 == 1 {
                nodes[m / 2] = 0.0;
            }
            (nodes, weights)
        }
        _ => {
            let jac = Jacobi::new(family, m);
            let nodes = initial_guesses(family, &jac, m).map(|mut v| {
                if matches!(family, Family::Hermite) {
                    v = mirror(v, m);
                } else {
                    v.sort_by(f64::total_cmp);
                }
                v
            });
            let mut nodes = match nodes {
                Some(v) if well_formed(family, &v, m) => v,
                _ => bracket_fallback(family, &jac, m)?,
            };
            let mut weights: Vec<f64> = nodes.iter().map(|x| jac.weight(m, *x)).collect();
            if !matches!(family, Family::Laguerre) {
                symmetrize(&mut nodes, &mut weights);
            }
            (nodes, weights)
        }
    };
    Ok(QuadRule {
        nodes,
        weights,
        family: family.clone(),
        order: m,
    })
}

/// `A_n(x)` and `(A_n(x) - A_n(0)) / x` by running the recurrence for both,
/// `D_(k+1) = alpha_k A_k + beta_k D_k - gamma_k D_(k-1)`.
pub fn deflated_value(family: &Family, n: usize, x: f64) -> (f64, f64) {
    let rec = family.recurrence();
    let (mut a_prev, mut a) = (0.0, 1.0);
    let (mut d_prev, mut d) = (0.0, 0.0);
    for k in 0..n {
        let (al, be, ga) = rec.step_f64(k as u64);
        let a_next = (al * x + be) * a - ga * a_prev;
        let d_next = al * a + be * d - ga * d_prev;
        a_prev = a;
        a = a_next;
        d_prev = d;
        d = d_next;
    }
    (a, d)
}

/// Filter integral from an `m`-point rule; exact up to rounding when `m >= n`.
pub fn numeric_filter_integral(family: &Family, n: usize, m: usize) -> Result<f64> {
    if m < n {
        return Err(Error::InvalidParameter(format!(
            "an {m}-point rule is not exact for degree {}",
            2 * n as isize - 2
        )));
    }
    let rule = gauss_rule(family, m.max(1))?;
    Ok(rule.apply(|x| deflated_value(family, n, x).1.powi(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, rat};
    use approx::assert_relative_eq;

    #[test]
    fn small_rules() {
        let t = gauss_rule(&Family::ChebyshevT, 1).unwrap();
        assert_eq!(t.nodes, vec![0.0]);
        assert_relative_eq!(t.weights[0], PI);
        let l = gauss_rule(&Family::Legendre, 2).unwrap();
        assert_relative_eq!(l.nodes[0], -1.0 / 3f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(l.nodes[1], 1.0 / 3f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(l.weights[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(l.weights[1], 1.0, max_relative = 1e-14);
        let h = gauss_rule(&Family::Hermite, 1).unwrap();
        assert!(h.nodes[0].abs() < 1e-15);
        assert_relative_eq!(h.weights[0], PI.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn mass_and_ordering() {
        let fams = [
            Family::Legendre,
            Family::Hermite,
            Family::ChebyshevT,
            Family::ChebyshevU,
            Family::Laguerre,
            Family::gegenbauer(frac(3, 2)).unwrap(),
            Family::gegenbauer(frac(-1, 4)).unwrap(),
        ];
        for f in &fams {
            let mass = weight_moment(f, 0).to_f64(f.param()).unwrap();
            for m in [1, 2, 3, 7, 20, 40, 64] {
                let r = gauss_rule(f, m).unwrap();
                assert!(well_formed(f, &r.nodes, m), "{f} m={m}");
                assert!(r.weights.iter().all(|w| *w > 0.0));
                let s: f64 = r.weights.iter().sum();
                assert_relative_eq!(s, mass, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn numeric_examples() {
        assert_relative_eq!(numeric_filter_integral(&Family::Legendre, 3, 8).unwrap(), 2.0, max_relative = 1e-12);
        assert_relative_eq!(numeric_filter_integral(&Family::Laguerre, 2, 8).unwrap(), 2.5, max_relative = 1e-10);
        assert_relative_eq!(numeric_filter_integral(&Family::ChebyshevT, 4, 8).unwrap(), 4.0 * PI, max_relative = 1e-10);
        assert!(numeric_filter_integral(&Family::Legendre, 5, 3).is_err());
    }

    #[test]
    fn deflated_value_matches_exact_polynomial() {
        let fam = Family::gegenbauer(rat(2)).unwrap();
        let p = crate::orthopoly::generate(&fam, 9).deflate_at_zero();
        for x in [-0.7, 0.0, 0.3, 0.99] {
            let (_, d) = deflated_value(&fam, 9, x);
            assert_relative_eq!(d, p.eval_f64(x), max_relative = 1e-12);
        }
    }
}
