//! The Witt algebra `W(1;n)`, the superalgebra `O(1,1;n) = O(1;n) ⊗ Λ(θ)`,
//! the contact superalgebra `K(1,1;n)` and its presentation `W ⊕ O_div`.
//!
//! Basis orderings:
//! - `W(1;n)`: `x^(i)d` at index `i`.
//! - `O(1,1;n)` and `K(1,1;n)`: `x^(i)` at `i` (even), `x^(i)th` at `3^n + i` (odd).
//! - `W ⊕ O_div`: `x^(i)d` at `i` (even), `x^(i)` at `3^n + i` (odd). The
//!   derived variant keeps only the odd `x^(i)` with `i <= 3^n - 2`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{
    self, check_super_simple_criterion, derived_algebra, derived_of, IdentityReport,
    LinearAlgebraMap, StructureAlgebra, SuperSimplicityReport,
};
use crate::divided_power::DividedPowerAlgebra;
use crate::error::Result;
use crate::gf3::Gf3;
use crate::linalg::{self, Gf3Matrix, Subspace, Vector};
use crate::meataxe::MeatAxe;

pub fn witt_label(i: usize) -> String {
    format!("x^({})d", i)
}

/// `W(1;n)` with `[f d, g d] = (f d(g) - g d(f)) d`.
pub fn build_witt(n: u32) -> Result<StructureAlgebra> {
    let o = DividedPowerAlgebra::new(n)?;
    let dim = o.dim();
    let labels = (0..dim).map(witt_label).collect();
    StructureAlgebra::from_fn(format!("W(1;{})", n), labels, vec![0; dim], |i, j| {
        witt_bracket(&o, &o.basis(i), &o.basis(j))
    })?
    .with_degrees((0..dim as i64).map(|i| i - 1).collect())
}

/// Coefficient function of `[f d, g d]`.
pub fn witt_bracket(o: &DividedPowerAlgebra, f: &[Gf3], g: &[Gf3]) -> Vector {
    linalg::sub(&o.witt_action(f, g), &o.witt_action(g, f))
}

/// `O(1,1;n)`: elements `f + g θ` stored as `(f, g)` concatenated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperO {
    o: DividedPowerAlgebra,
}

impl SuperO {
    pub fn new(n: u32) -> Result<Self> {
        Ok(SuperO { o: DividedPowerAlgebra::new(n)? })
    }

    pub fn even_dim(&self) -> usize {
        self.o.dim()
    }

    pub fn dim(&self) -> usize {
        2 * self.o.dim()
    }

    pub fn base(&self) -> &DividedPowerAlgebra {
        &self.o
    }

    pub fn labels(&self) -> Vec<String> {
        let n = self.o.dim();
        (0..n)
            .map(DividedPowerAlgebra::label)
            .chain((0..n).map(|i| format!("x^({})th", i)))
            .collect()
    }

    pub fn parity(&self) -> Vec<u8> {
        let n = self.o.dim();
        (0..2 * n).map(|i| u8::from(i >= n)).collect()
    }

    pub fn basis(&self, k: usize) -> Vector {
        linalg::unit_vector(self.dim(), k)
    }

    /// `x^(i)`
    pub fn even(&self, i: usize) -> Vector {
        self.basis(i)
    }

    /// `x^(i) θ`
    pub fn odd(&self, i: usize) -> Vector {
        self.basis(self.o.dim() + i)
    }

    fn split<'v>(&self, a: &'v [Gf3]) -> (&'v [Gf3], &'v [Gf3]) {
        a.split_at(self.o.dim())
    }

    fn join(f: Vector, g: Vector) -> Vector {
        let mut v = f;
        v.extend(g);
        v
    }

    /// `(f1 + g1 θ)(f2 + g2 θ) = f1 f2 + (f1 g2 + g1 f2) θ`, since `θ² = 0`.
    pub fn multiply(&self, a: &[Gf3], b: &[Gf3]) -> Vector {
        let (f1, g1) = self.split(a);
        let (f2, g2) = self.split(b);
        let even = self.o.multiply(f1, f2);
        let odd = linalg::add(&self.o.multiply(f1, g2), &self.o.multiply(g1, f2));
        Self::join(even, odd)
    }

    /// `d(f + g θ) = d(f) + d(g) θ`.
    pub fn partial(&self, a: &[Gf3]) -> Vector {
        let (f, g) = self.split(a);
        Self::join(self.o.partial(f), self.o.partial(g))
    }

    /// `d_θ(f + g θ) = g`.
    pub fn partial_theta(&self, a: &[Gf3]) -> Vector {
        let (_, g) = self.split(a);
        Self::join(g.to_vec(), linalg::zero_vector(self.o.dim()))
    }

    fn matrix_of(&self, f: impl Fn(&[Gf3]) -> Vector) -> Gf3Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|k| f(&self.basis(k))).collect();
        Gf3Matrix::from_columns(self.dim(), &cols).expect("square")
    }

    pub fn mult_matrix(&self, a: &[Gf3]) -> Gf3Matrix {
        self.matrix_of(|b| self.multiply(a, b))
    }

    pub fn partial_matrix(&self) -> Gf3Matrix {
        self.matrix_of(|b| self.partial(b))
    }

    pub fn partial_theta_matrix(&self) -> Gf3Matrix {
        self.matrix_of(|b| self.partial_theta(b))
    }

    /// The operator `D_K(a)` on `O(1,1;n)`, linear in `a`:
    /// `D_K(x^(i)) = θ x^(i-1) d_θ + 2 x^(i) d` and
    /// `D_K(x^(i) θ) = x^(i) d_θ + x^(i) θ d`, with `x^(-1) = 0`.
    pub fn d_k(&self, a: &[Gf3]) -> Gf3Matrix {
        let n = self.o.dim();
        let d = self.partial_matrix();
        let dt = self.partial_theta_matrix();
        let mut out = Gf3Matrix::zeros(self.dim(), self.dim());
        for (k, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let term = if k < n {
                let i = k;
                let mut t = self.mult_matrix(&self.even(i)).matmul(&d).scale(Gf3::TWO);
                if i > 0 {
                    t = t.add(&self.mult_matrix(&self.odd(i - 1)).matmul(&dt));
                }
                t
            } else {
                let i = k - n;
                self.mult_matrix(&self.even(i))
                    .matmul(&dt)
                    .add(&self.mult_matrix(&self.odd(i)).matmul(&d))
            };
            out.add_scaled(&term, *c);
        }
        out
    }

    /// `[a, b] = D_K(a)(b) - 2 d(a) b`.
    pub fn contact_bracket(&self, a: &[Gf3], b: &[Gf3]) -> Vector {
        let first = self.d_k(a).mul_vec(b);
        let second = self.multiply(&self.partial(a), b);
        linalg::sub(&first, &linalg::scaled(&second, Gf3::TWO))
    }
}

/// `K(1,1;n)` on the basis of `O(1,1;n)`.
pub fn build_contact_k(n: u32) -> Result<StructureAlgebra> {
    let s = SuperO::new(n)?;
    let d = s.partial_matrix();
    let dk: Vec<Gf3Matrix> = (0..s.dim()).map(|k| s.d_k(&s.basis(k))).collect();
    StructureAlgebra::from_fn(format!("K(1,1;{})", n), s.labels(), s.parity(), |i, j| {
        let b = s.basis(j);
        let da = d.column(i);
        linalg::sub(&dk[i].mul_vec(&b), &linalg::scaled(&s.multiply(&da, &b), Gf3::TWO))
    })
}

/// `W ⊕ O_div`, or with `derived` set, `W ⊕ O'`.
///
/// Even part is `W`, even-odd is the div action `f d . g = d(fg)`, odd-odd
/// is `[x, y] = -xy d`.
pub fn build_contact_presentation(n: u32, derived: bool) -> Result<StructureAlgebra> {
    let o = DividedPowerAlgebra::new(n)?;
    let m = o.dim();
    let odd_count = if derived { m - 1 } else { m };
    let dim = m + odd_count;
    let mut labels: Vec<String> = (0..m).map(witt_label).collect();
    labels.extend((0..odd_count).map(DividedPowerAlgebra::label));
    let parity = (0..dim).map(|k| u8::from(k >= m)).collect();
    let embed_odd = |v: Vector| -> Vector {
        let mut out = linalg::zero_vector(dim);
        for (i, c) in v.into_iter().enumerate() {
            if i < odd_count {
                out[m + i] = c;
            } else {
                assert!(c.is_zero(), "odd part leaves O'");
            }
        }
        out
    };
    let embed_even = |v: Vector| -> Vector {
        let mut out = linalg::zero_vector(dim);
        out[..m].copy_from_slice(&v);
        out
    };
    let name = if derived {
        format!("W(1;{n}) + O'")
    } else {
        format!("W(1;{n}) + O_div")
    };
    let algebra = StructureAlgebra::from_fn(name, labels, parity, |i, j| {
        match (i < m, j < m) {
            (true, true) => embed_even(witt_bracket(&o, &o.basis(i), &o.basis(j))),
            (true, false) => embed_odd(o.div_action(&o.basis(i), &o.basis(j - m))),
            (false, true) => embed_odd(linalg::scaled(
                &o.div_action(&o.basis(j), &o.basis(i - m)),
                -Gf3::ONE,
            )),
            (false, false) => embed_even(linalg::scaled(
                &o.multiply(&o.basis(i - m), &o.basis(j - m)),
                -Gf3::ONE,
            )),
        }
    })?;
    Ok(algebra)
}

/// Matrix of `x^(i) -> -x^(i)d`, `x^(j)θ -> x^(j)` from `K(1,1;n)` to
/// `W ⊕ O_div`.
pub fn contact_isomorphism_matrix(n: u32) -> Result<Gf3Matrix> {
    let m = DividedPowerAlgebra::new(n)?.dim();
    Ok(Gf3Matrix::from_fn(2 * m, 2 * m, |r, c| {
        if r != c {
            Gf3::ZERO
        } else if c < m {
            -Gf3::ONE
        } else {
            Gf3::ONE
        }
    }))
}

pub fn contact_isomorphism<'a>(
    n: u32,
    contact: &'a StructureAlgebra,
    presentation: &'a StructureAlgebra,
) -> Result<LinearAlgebraMap<'a>> {
    LinearAlgebraMap::new(contact, presentation, contact_isomorphism_matrix(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedContactReport {
    pub n: u32,
    pub derived_dim: usize,
    pub expected_dim: usize,
    /// The derived algebra equals `W ⊕ O'` as a subspace.
    pub equals_w_plus_o_prime: bool,
    pub even_part_is_all_of_w: bool,
    /// Deriving a second time changes nothing.
    pub perfect: bool,
    pub criterion: SuperSimplicityReport,
}

impl DerivedContactReport {
    pub fn passed(&self) -> bool {
        self.derived_dim == self.expected_dim
            && self.equals_w_plus_o_prime
            && self.even_part_is_all_of_w
            && self.perfect
            && self.criterion.passed()
    }
}

pub fn verify_derived_contact(n: u32, meataxe: &MeatAxe) -> Result<DerivedContactReport> {
    let full = build_contact_presentation(n, false)?;
    let m = DividedPowerAlgebra::new(n)?.dim();
    let derived = derived_algebra(&full);
    let expected = Subspace::coordinate(2 * m, (0..m).chain(m..2 * m - 1));
    let even_w = Subspace::coordinate(2 * m, 0..m);
    let even_part_is_all_of_w = derived.contains_subspace(&even_w);
    let perfect = derived_of(&full, &derived)? == derived;
    let criterion = check_super_simple_criterion(&build_contact_presentation(n, true)?, meataxe)?;
    Ok(DerivedContactReport {
        n,
        derived_dim: derived.dim(),
        expected_dim: 2 * m - 1,
        equals_w_plus_o_prime: derived == expected,
        even_part_is_all_of_w,
        perfect,
        criterion,
    })
}

/// `[D_K(a), D_K(b)] = D_K([a, b])` on all basis pairs, the left side being
/// the super-commutator of operators.
pub fn verify_dk_compatibility(n: u32) -> Result<IdentityReport> {
    let s = SuperO::new(n)?;
    let k = build_contact_k(n)?;
    let parity = s.parity();
    let dk: Vec<Gf3Matrix> = (0..s.dim()).map(|i| s.d_k(&s.basis(i))).collect();
    let mut report = IdentityReport::new("D_K compatibility");
    for a in 0..s.dim() {
        for b in 0..s.dim() {
            let sign = if parity[a] & parity[b] == 1 { -Gf3::ONE } else { Gf3::ONE };
            let mut lhs = dk[a].matmul(&dk[b]);
            lhs.add_scaled(&dk[b].matmul(&dk[a]), -sign);
            let rhs = s.d_k(&k.product_basis(a, b));
            report.record(&[a, b], lhs.entries(), rhs.entries());
        }
    }
    Ok(report)
}

/// Even subalgebra of `K(1,1;n)` compared with `W(1;n)` under `x^(i) -> -x^(i)d`.
pub fn even_part_matches_witt(n: u32) -> Result<bool> {
    let k = build_contact_k(n)?;
    let m = DividedPowerAlgebra::new(n)?.dim();
    let even = k.restrict(&(0..m).collect::<Vec<_>>(), "K even")?;
    let w = build_witt(n)?;
    let phi = LinearAlgebraMap::new(&even, &w, Gf3Matrix::identity(m).scale(-Gf3::ONE))?;
    Ok(algebra::verify_homomorphism(&phi).is_isomorphism())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_super_jacobi, check_super_skew, verify_homomorphism};

    fn vec_of(dim: usize, terms: &[(usize, i64)]) -> Vector {
        let mut v = linalg::zero_vector(dim);
        for &(k, c) in terms {
            v[k] += Gf3::from_i64(c);
        }
        v
    }

    #[test]
    fn witt_examples() {
        let w = build_witt(1).unwrap();
        assert_eq!(w.product_basis(0, 1), vec_of(3, &[(0, 1)]));
        assert_eq!(w.product_basis(0, 2), vec_of(3, &[(1, 1)]));
        assert_eq!(w.product_basis(1, 2), vec_of(3, &[(2, 1)]));
        assert!(linalg::is_zero(&w.product_basis(1, 1)));
    }

    #[test]
    fn d_k_examples() {
        let s = SuperO::new(1).unwrap();
        let d = s.partial_matrix();
        let dt = s.partial_theta_matrix();
        assert_eq!(s.d_k(&s.even(0)), d.scale(Gf3::TWO));
        let theta = s.odd(0);
        let expected = s.mult_matrix(&theta).matmul(&dt).add(&s.mult_matrix(&s.even(1)).matmul(&d).scale(Gf3::TWO));
        assert_eq!(s.d_k(&s.even(1)), expected);
        assert_eq!(s.d_k(&theta), dt.add(&s.mult_matrix(&theta).matmul(&d)));
        assert_eq!(s.d_k(&theta).mul_vec(&theta), s.even(0));
    }

    #[test]
    fn contact_bracket_examples() {
        let k = build_contact_k(1).unwrap();
        // [1, x] = 2, [θ, θ] = 1
        assert_eq!(k.product_basis(0, 1), vec_of(6, &[(0, 2)]));
        assert_eq!(k.product_basis(3, 3), vec_of(6, &[(0, 1)]));
        // [x, θ] = -[θ, x] since x is even.
        assert_eq!(k.product_basis(1, 3), linalg::scaled(&k.product_basis(3, 1), -Gf3::ONE));
    }

    #[test]
    fn presentation_examples() {
        let p = build_contact_presentation(1, false).unwrap();
        // odd-odd [1, 1] = -d, [1, x] = -x d; even-odd [x d, 1] = 1.
        assert_eq!(p.product_basis(3, 3), vec_of(6, &[(0, -1)]));
        assert_eq!(p.product_basis(3, 4), vec_of(6, &[(1, -1)]));
        assert_eq!(p.product_basis(1, 3), vec_of(6, &[(3, 1)]));
        assert_eq!(build_contact_presentation(1, true).unwrap().dim(), 5);
    }

    #[test]
    fn isomorphism_examples() {
        let phi = contact_isomorphism_matrix(1).unwrap();
        assert_eq!(phi.column(0), vec_of(6, &[(0, 2)]));
        assert_eq!(phi.column(4), vec_of(6, &[(4, 1)]));
        let k = build_contact_k(1).unwrap();
        let p = build_contact_presentation(1, false).unwrap();
        let lhs = phi.mul_vec(&k.product_basis(3, 3));
        let rhs = p.bracket(&phi.column(3), &phi.column(3)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, vec_of(6, &[(0, -1)]));
        let map = contact_isomorphism(1, &k, &p).unwrap();
        assert!(verify_homomorphism(&map).is_isomorphism());
    }

    #[test]
    fn contact_algebras_are_lie_superalgebras() {
        for n in 1..=2 {
            for a in [build_contact_k(n).unwrap(), build_contact_presentation(n, false).unwrap()] {
                assert!(check_super_skew(&a).passed(), "{}", a.name());
                assert!(check_super_jacobi(&a).passed(), "{}", a.name());
            }
        }
    }

    #[test]
    fn dk_compatibility_small() {
        let r = verify_dk_compatibility(1).unwrap();
        assert!(r.passed(), "{:?}", r.first_witness());
        assert_eq!(r.checked, 36);
    }

    #[test]
    fn even_part_is_witt() {
        assert!(even_part_matches_witt(1).unwrap());
        assert!(even_part_matches_witt(2).unwrap());
    }

    #[test]
    fn out_of_range_n() {
        assert!(build_witt(0).is_err());
        assert!(build_contact_k(4).is_err());
    }
}
