use super::Poly;
use crate::error::Result;
use crate::exactnum::PrimeModulus;

/// Polynomial over the prime field `Z/qZ`, residues in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyModP {
    coeffs: Vec<u64>,
    modulus: PrimeModulus,
}

impl PolyModP {
    pub fn new(coeffs: Vec<u64>, modulus: PrimeModulus) -> Self {
        let q = modulus.get();
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % q).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs, modulus }
    }

    /// `a^q - a` over `Z/qZ`, i.e. `a^q + (q-1) a`.
    pub fn frobenius_minus_identity(modulus: PrimeModulus) -> Self {
        let q = modulus.get();
        let mut coeffs = vec![0; q as usize + 1];
        coeffs[q as usize] = 1;
        coeffs[1] = q - 1;
        Self::new(coeffs, modulus)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }
}

impl std::fmt::Display for PolyModP {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 (mod {})", self.modulus.get())
        } else {
            write!(f, "{} (mod {})", terms.join(" + "), self.modulus.get())
        }
    }
}

/// Coefficient-wise reduction, dividing by each denominator through its inverse mod `q`.
pub fn reduce_mod_prime(p: &Poly, q: PrimeModulus) -> Result<PolyModP> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| q.reduce_rational(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyModP::new(coeffs, q))
}
