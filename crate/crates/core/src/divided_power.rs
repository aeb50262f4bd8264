//! The divided power algebra `O(1;n)` with basis `x^(i)`, `0 <= i < 3^n`.
//!
//! `x^(i) x^(j) = C(i+j, i) x^(i+j)`, truncated to zero at `i + j >= 3^n`.
//! `x^(k)` is also zero for negative `k`, so the derivation
//! `x^(i) -> x^(i-1)` sends `x^(0)` to zero.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::gf3::{binom_mod3, Gf3};
use crate::linalg::{self, Gf3Matrix, Subspace, Vector};

pub const MIN_N: u32 = 1;
pub const MAX_N: u32 = 3;

pub fn check_n(n: u32) -> Result<()> {
    if (MIN_N..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedN(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DividedPowerAlgebra {
    n: u32,
    dim: usize,
}

impl DividedPowerAlgebra {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(DividedPowerAlgebra { n, dim: 3usize.pow(n) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `3^n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(i: usize) -> String {
        format!("x^({})", i)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim).map(Self::label).collect()
    }

    pub fn basis(&self, i: usize) -> Vector {
        linalg::unit_vector(self.dim, i)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, bound: self.dim })
        }
    }

    /// `x^(i) x^(j)` as `(index, coefficient)`, or `None` when it vanishes.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> Option<(usize, Gf3)> {
        let k = i + j;
        if k >= self.dim {
            return None;
        }
        let c = binom_mod3(k as u64, i as u64);
        (!c.is_zero()).then_some((k, c))
    }

    pub fn dp_multiply(&self, i: usize, j: usize) -> Result<Vector> {
        self.check_index(i)?;
        self.check_index(j)?;
        let mut v = linalg::zero_vector(self.dim);
        if let Some((k, c)) = self.basis_product(i, j) {
            v[k] = c;
        }
        Ok(v)
    }

    pub fn multiply(&self, f: &[Gf3], g: &[Gf3]) -> Vector {
        let mut out = linalg::zero_vector(self.dim);
        for (i, a) in f.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in g.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if let Some((k, c)) = self.basis_product(i, j) {
                    out[k] += *a * *b * c;
                }
            }
        }
        out
    }

    /// `x^(i) -> x^(i-1)`, `x^(0) -> 0`.
    pub fn partial(&self, f: &[Gf3]) -> Vector {
        let mut out = linalg::zero_vector(self.dim);
        out[..self.dim - 1].copy_from_slice(&f[1..]);
        out
    }

    /// Action of `f d` on `g` in the second module structure: `d(fg)`.
    pub fn div_action(&self, f: &[Gf3], g: &[Gf3]) -> Vector {
        self.partial(&self.multiply(f, g))
    }

    /// Natural action of `f d` on `g`: `f d(g)`.
    pub fn witt_action(&self, f: &[Gf3], g: &[Gf3]) -> Vector {
        self.multiply(f, &self.partial(g))
    }

    pub fn partial_matrix(&self) -> Gf3Matrix {
        Gf3Matrix::from_fn(self.dim, self.dim, |r, c| if c == r + 1 { Gf3::ONE } else { Gf3::ZERO })
    }

    /// Matrix of `g -> f g`.
    pub fn mult_matrix(&self, f: &[Gf3]) -> Gf3Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.multiply(f, &self.basis(j))).collect();
        Gf3Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Matrices of the div action of the basis `x^(i) d`.
    pub fn div_operators(&self) -> Vec<Gf3Matrix> {
        let d = self.partial_matrix();
        (0..self.dim).map(|i| d.matmul(&self.mult_matrix(&self.basis(i)))).collect()
    }

    /// `O'`: span of `x^(i)` for `i <= 3^n - 2`.
    pub fn o_prime(&self) -> Subspace {
        Subspace::coordinate(self.dim, 0..self.dim - 1)
    }

    /// `O(1;n)` as a commutative structure-constant algebra.
    pub fn to_structure_algebra(&self) -> StructureAlgebra {
        StructureAlgebra::from_fn(
            format!("O(1;{})", self.n),
            self.labels(),
            alloc::vec![0; self.dim],
            |i, j| self.dp_multiply(i, j).expect("indices in range"),
        )
        .expect("consistent dimensions")
        .with_degrees((0..self.dim as i64).collect())
        .expect("consistent dimensions")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(n: u32) -> DividedPowerAlgebra {
        DividedPowerAlgebra::new(n).unwrap()
    }

    fn term(dim: usize, k: usize, c: i64) -> Vector {
        linalg::scaled(&linalg::unit_vector(dim, k), Gf3::from_i64(c))
    }

    #[test]
    fn multiply_examples() {
        let a = o(2);
        for j in 0..9 {
            assert_eq!(a.dp_multiply(0, j).unwrap(), a.basis(j));
        }
        assert_eq!(a.dp_multiply(1, 1).unwrap(), term(9, 2, 2));
        assert_eq!(a.dp_multiply(1, 2).unwrap(), linalg::zero_vector(9));
        assert!(a.dp_multiply(9, 0).is_err());
        assert_eq!(DividedPowerAlgebra::new(0), Err(Error::UnsupportedN(0)));
    }

    #[test]
    fn partial_examples() {
        let a = o(1);
        assert!(linalg::is_zero(&a.partial(&a.basis(0))));
        assert_eq!(a.partial(&a.basis(2)), a.basis(1));
        // d(x * x) = d(2 x^(2)) = 2x, and x d(x) + d(x) x = 2x.
        let x = a.basis(1);
        let lhs = a.partial(&a.multiply(&x, &x));
        let rhs = linalg::add(&a.multiply(&x, &a.partial(&x)), &a.multiply(&a.partial(&x), &x));
        assert_eq!(lhs, term(3, 1, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn div_action_examples() {
        let a = o(1);
        for i in 1..3 {
            assert_eq!(a.div_action(&a.basis(0), &a.basis(i)), a.basis(i - 1));
        }
        assert_eq!(a.div_action(&a.basis(1), &a.basis(0)), a.basis(0));
        assert_eq!(a.div_action(&a.basis(1), &a.basis(1)), term(3, 1, 2));
    }

    #[test]
    fn o_prime_dimension() {
        let p = o(1).o_prime();
        assert_eq!(p.dim(), 2);
        assert_eq!(p, Subspace::coordinate(3, [0, 1]));
    }

    #[test]
    fn partial_is_nilpotent_of_full_length() {
        for n in 1..=3 {
            let a = o(n);
            let d = a.partial_matrix();
            assert_eq!(d.nilpotency_index(), Some(a.dim() as u32));
        }
    }
}
