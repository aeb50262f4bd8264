//! Irreducibility of a module given by generating matrices.
//!
//! Randomized in the usual MeatAxe way, but never wrong: a `Reducible` verdict
//! carries an explicit invariant subspace, and an `Irreducible` verdict is
//! certified by Norton's criterion. Random algebra elements (combinations of
//! random words in the generators) are tested against every monic irreducible
//! polynomial of degree at most three; a polynomial `p` with
//! `dim ker p(A) = deg p` is a Norton element.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf3::Gf3;
use crate::linalg::{EchelonBasis, Gf3Matrix, SparseMatrix, Subspace, SubquotientSpace, Vector};

pub const DEFAULT_ATTEMPTS: usize = 256;

/// Evidence for an irreducibility verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NortonCertificate {
    pub seed: u64,
    /// Number of random elements drawn before the certificate was found.
    pub attempts: usize,
    /// Monic irreducible factor, coefficients from constant term upwards.
    pub factor: Vec<Gf3>,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible(NortonCertificate),
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }

    pub fn witness(&self) -> Option<&Subspace> {
        match self {
            Irreducibility::Reducible(w) => Some(w),
            Irreducibility::Irreducible(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeatAxe {
    pub seed: u64,
    pub max_attempts: usize,
}

impl Default for MeatAxe {
    fn default() -> Self {
        MeatAxe { seed: 0, max_attempts: DEFAULT_ATTEMPTS }
    }
}

/// Smallest subspace containing `seeds` and invariant under `generators`.
pub fn spin_up(generators: &[SparseMatrix], seeds: &[Vector], dim: usize) -> Subspace {
    let mut basis = EchelonBasis::new(dim);
    let mut queue: Vec<Vector> = Vec::new();
    for s in seeds {
        if let Some(v) = basis.insert(s) {
            queue.push(v.clone());
        }
    }
    let mut next = 0;
    while next < queue.len() && basis.dim() < dim {
        let v = queue[next].clone();
        next += 1;
        for g in generators {
            let w = g.mul_vec(&v);
            if let Some(added) = basis.insert(&w) {
                queue.push(added.clone());
                if basis.dim() == dim {
                    break;
                }
            }
        }
    }
    if basis.dim() == dim {
        Subspace::full(dim)
    } else {
        basis.to_subspace()
    }
}

/// Monic irreducible polynomials over GF(3) of degree 1..=3, constant term
/// first. In degree at most three, irreducible means root-free.
fn small_irreducibles() -> Vec<Vec<Gf3>> {
    let mut out = Vec::new();
    for degree in 1..=3usize {
        let count = 3usize.pow(degree as u32);
        for code in 0..count {
            let mut coeffs: Vec<Gf3> = (0..degree)
                .map(|k| Gf3::new(((code / 3usize.pow(k as u32)) % 3) as u8))
                .collect();
            coeffs.push(Gf3::ONE);
            let has_root = Gf3::ALL.iter().any(|&x| {
                coeffs.iter().rev().fold(Gf3::ZERO, |acc, &c| acc * x + c).is_zero()
            });
            if degree == 1 || !has_root {
                out.push(coeffs);
            }
        }
    }
    out
}

impl MeatAxe {
    pub fn with_seed(seed: u64) -> Self {
        MeatAxe { seed, ..Self::default() }
    }

    pub fn is_irreducible(&self, operators: &[Gf3Matrix], dim: usize) -> Result<Irreducibility> {
        if dim == 0 {
            return Err(Error::EmptyModule);
        }
        for op in operators {
            if op.rows() != dim || op.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: op.rows() });
            }
        }
        if operators.is_empty() {
            return Ok(self.verdict_without_operators(dim));
        }
        let sparse: Vec<SparseMatrix> = operators.iter().map(SparseMatrix::from_dense).collect();
        let sparse_t: Vec<SparseMatrix> =
            operators.iter().map(|m| SparseMatrix::from_dense(&m.transpose())).collect();
        let factors = small_irreducibles();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        // Candidates are random combinations of every word built so far.
        // Single words and short sums are nearly nilpotent for graded
        // modules, so they rarely pass Norton's test.
        let mut pool: Vec<Gf3Matrix> = operators.to_vec();

        for attempt in 1..=self.max_attempts {
            let (i, j) = (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()));
            let word = if i < operators.len() { sparse[i].mul_dense(&pool[j]) } else { pool[i].matmul(&pool[j]) };
            pool.push(word);
            let mut a = Gf3Matrix::zeros(dim, dim);
            for w in &pool {
                let c = Gf3::new(rng.gen_range(0..3));
                if !c.is_zero() {
                    a.add_scaled(w, c);
                }
            }
            let a2 = a.matmul(&a);
            let a3 = a2.matmul(&a);
            let powers = [Gf3Matrix::identity(dim), a, a2, a3];

            for p in &factors {
                let mut n = Gf3Matrix::zeros(dim, dim);
                for (k, c) in p.iter().enumerate() {
                    n.add_scaled(&powers[k], *c);
                }
                let kernel = n.kernel();
                if kernel.is_zero() {
                    continue;
                }
                let v = kernel.basis().row(0).to_vec();
                let orbit = spin_up(&sparse, &[v], dim);
                if !orbit.is_full() {
                    return Ok(Irreducibility::Reducible(orbit));
                }
                let degree = p.len() - 1;
                if kernel.dim() != degree {
                    continue;
                }
                let dual_kernel = n.transpose().kernel();
                let w = dual_kernel.basis().row(0).to_vec();
                let dual_orbit = spin_up(&sparse_t, &[w], dim);
                if !dual_orbit.is_full() {
                    return Ok(Irreducibility::Reducible(dual_orbit.annihilator()));
                }
                return Ok(Irreducibility::Irreducible(NortonCertificate {
                    seed: self.seed,
                    attempts: attempt,
                    factor: p.clone(),
                    nullity: kernel.dim(),
                }));
            }
        }
        Err(Error::RetriesExhausted { attempts: self.max_attempts, seed: self.seed })
    }

    fn verdict_without_operators(&self, dim: usize) -> Irreducibility {
        if dim == 1 {
            Irreducibility::Irreducible(NortonCertificate {
                seed: self.seed,
                attempts: 0,
                factor: vec![Gf3::ZERO, Gf3::ONE],
                nullity: 1,
            })
        } else {
            Irreducibility::Reducible(Subspace::coordinate(dim, [0]))
        }
    }

    /// Enlarges a proper invariant subspace to a maximal one by repeatedly
    /// splitting the quotient module.
    pub fn maximal_submodule(
        &self,
        operators: &[Gf3Matrix],
        invariant: &Subspace,
    ) -> Result<Subspace> {
        let dim = invariant.ambient();
        let mut current = invariant.clone();
        loop {
            let quotient = SubquotientSpace::new(&Subspace::full(dim), &current)?;
            let q = quotient.dim();
            if q <= 1 {
                return Ok(current);
            }
            let induced: Vec<Gf3Matrix> = operators
                .iter()
                .map(|op| {
                    let cols: Vec<Vector> = (0..q)
                        .map(|k| quotient.project(&op.mul_vec(quotient.representative(k))))
                        .collect::<Result<_>>()?;
                    Gf3Matrix::from_columns(q, &cols)
                })
                .collect::<Result<_>>()?;
            match self.is_irreducible(&induced, q)? {
                Irreducibility::Irreducible(_) => return Ok(current),
                Irreducibility::Reducible(w) => {
                    let lifted: Vec<Vector> = w
                        .basis_vectors()
                        .iter()
                        .map(|coords| quotient.representatives().vec_mul(coords))
                        .collect();
                    current = current.sum(&Subspace::span(dim, &lifted))?;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_polynomial_counts() {
        let ps = small_irreducibles();
        let by_degree = |d: usize| ps.iter().filter(|p| p.len() == d + 1).count();
        assert_eq!((by_degree(1), by_degree(2), by_degree(3)), (3, 3, 8));
    }

    #[test]
    fn identity_on_plane_is_reducible() {
        let verdict = MeatAxe::default().is_irreducible(&[Gf3Matrix::identity(2)], 2).unwrap();
        assert_eq!(verdict, Irreducibility::Reducible(Subspace::coordinate(2, [0])));
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let zero = Gf3Matrix::zeros(1, 1);
        assert!(MeatAxe::default().is_irreducible(&[zero], 1).unwrap().is_irreducible());
    }

    #[test]
    fn empty_module_is_an_error() {
        assert_eq!(MeatAxe::default().is_irreducible(&[], 0), Err(Error::EmptyModule));
    }

    #[test]
    fn full_matrix_algebra_generators() {
        // E12 and E21 generate all 2x2 matrices.
        let e = Gf3Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let f = Gf3Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        assert!(MeatAxe::default().is_irreducible(&[e.clone(), f], 2).unwrap().is_irreducible());
        let verdict = MeatAxe::default().is_irreducible(&[e], 2).unwrap();
        assert_eq!(verdict.witness(), Some(&Subspace::coordinate(2, [0])));
    }

    #[test]
    fn irreducible_but_not_absolutely() {
        // Multiplication by a generator of GF(9) on GF(3)^2: x^2 + 1 has no root.
        let j = Gf3Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        assert!(MeatAxe::default().is_irreducible(&[j], 2).unwrap().is_irreducible());
    }

    #[test]
    fn maximal_submodule_of_a_chain() {
        // A single 3x3 nilpotent Jordan block: submodules form a chain.
        let n = Gf3Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let bottom = Subspace::coordinate(3, [0]);
        let top = MeatAxe::default().maximal_submodule(&[n], &bottom).unwrap();
        assert_eq!(top, Subspace::coordinate(3, [0, 1]));
    }
}
