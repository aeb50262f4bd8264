//! Finite-dimensional (super)algebras given by structure constants, and the
//! identity, simplicity, grading and homomorphism checks run against them.
//!
//! Failed checks never produce `Err`: they come back as reports listing the
//! offending basis tuples together with the two sides that disagreed.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf3::Gf3;
use crate::linalg::{self, Gf3Matrix, SparseMatrix, Subspace, Vector};
use crate::meataxe::{self, Irreducibility, MeatAxe, NortonCertificate};

/// Reports keep at most this many witnesses; the full count is kept separately.
pub const MAX_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Basis indices of the failing tuple, in the order the identity names them.
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub checked: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

impl IdentityReport {
    pub fn new(identity: &'static str) -> Self {
        IdentityReport { identity, checked: 0, violation_count: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Records one evaluated instance; a violation when `lhs != rhs`.
    pub fn record(&mut self, indices: &[usize], lhs: &[Gf3], rhs: &[Gf3]) {
        self.checked += 1;
        if lhs != rhs {
            self.violation_count += 1;
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(Violation {
                    indices: indices.to_vec(),
                    lhs: lhs.to_vec(),
                    rhs: rhs.to_vec(),
                });
            }
        }
    }

    pub fn merge(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_WITNESSES {
                self.violations.push(v);
            }
        }
    }

    pub fn first_witness(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Parity of a basis element: 0 even, 1 odd.
pub type Parity = u8;

#[inline]
fn sign(p: Parity, q: Parity) -> Gf3 {
    if p & q == 1 {
        -Gf3::ONE
    } else {
        Gf3::ONE
    }
}

/// A bilinear product on a labelled basis, `b_i b_j = sum_k c_ij^k b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    name: String,
    labels: Vec<String>,
    parity: Vec<Parity>,
    degree: Option<Vec<i64>>,
    table: Vec<Vec<(usize, Gf3)>>,
}

impl StructureAlgebra {
    /// Builds the table from a closure returning `b_i b_j` as a coordinate
    /// vector.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        parity: Vec<Parity>,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let dim = labels.len();
        if parity.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: parity.len() });
        }
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                table.push(sparse(&v));
            }
        }
        Ok(StructureAlgebra { name: name.into(), labels, parity, degree: None, table })
    }

    /// The algebra with every product zero.
    pub fn abelian(name: impl Into<String>, labels: Vec<String>, parity: Vec<Parity>) -> Result<Self> {
        let dim = labels.len();
        Self::from_fn(name, labels, parity, |_, _| linalg::zero_vector(dim))
    }

    pub fn with_degrees(mut self, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: degrees.len() });
        }
        self.degree = Some(degrees);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Overwrites one structure constant; used for fault injection in tests.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, c: Gf3) {
        let dim = self.dim();
        let mut v = self.product_basis(i, j);
        v[k] = c;
        self.table[i * dim + j] = sparse(&v);
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degree.as_deref()
    }

    pub fn is_purely_even(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    pub fn indices_of_parity(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == p).collect()
    }

    /// Sparse `b_i b_j`.
    #[inline]
    pub fn constants(&self, i: usize, j: usize) -> &[(usize, Gf3)] {
        &self.table[i * self.dim() + j]
    }

    pub fn product_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = linalg::zero_vector(self.dim());
        for &(k, c) in self.constants(i, j) {
            v[k] = c;
        }
        v
    }

    /// All nonzero constants `(i, j, k, c)` in lexicographic index order.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, Gf3)> + '_ {
        let dim = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |&(k, c)| (ij / dim, ij % dim, k, c)))
    }

    pub fn bracket(&self, x: &[Gf3], y: &[Gf3]) -> Result<Vector> {
        let dim = self.dim();
        for v in [x, y] {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
        }
        let mut out = linalg::zero_vector(dim);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let c = *a * *b;
                for &(k, t) in self.constants(i, j) {
                    out[k] += c * t;
                }
            }
        }
        Ok(out)
    }

    /// `b_i (b_j b_k)` accumulated into `out` with coefficient `c`.
    fn accumulate_left_nested(&self, out: &mut [Gf3], c: Gf3, i: usize, j: usize, k: usize) {
        for &(l, t) in self.constants(j, k) {
            let ct = c * t;
            for &(m, s) in self.constants(i, l) {
                out[m] += ct * s;
            }
        }
    }

    /// Matrix of `x -> b_i x`.
    pub fn left_mult(&self, i: usize) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(self.dim(), self.dim());
        for j in 0..self.dim() {
            for &(k, c) in self.constants(i, j) {
                m[(k, j)] = c;
            }
        }
        m
    }

    /// Matrix of `x -> x b_i`.
    pub fn right_mult(&self, i: usize) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(self.dim(), self.dim());
        for j in 0..self.dim() {
            for &(k, c) in self.constants(j, i) {
                m[(k, j)] = c;
            }
        }
        m
    }

    /// Matrix of `ad x = [x, -]`.
    pub fn ad(&self, x: &[Gf3]) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(self.dim(), self.dim());
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            m.add_scaled(&self.left_mult(i), *a);
        }
        m
    }

    pub fn adjoint_operators(&self) -> Vec<Gf3Matrix> {
        (0..self.dim()).map(|i| self.left_mult(i)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|row| row.is_empty())
    }

    /// The subalgebra on a subset of basis vectors; fails if not closed.
    pub fn restrict(&self, indices: &[usize], name: impl Into<String>) -> Result<Self> {
        let mut position = vec![None; self.dim()];
        for (new, &old) in indices.iter().enumerate() {
            position[old] = Some(new);
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let parity = indices.iter().map(|&i| self.parity[i]).collect();
        let mut closed = true;
        let restricted = Self::from_fn(name, labels, parity, |a, b| {
            let mut v = linalg::zero_vector(indices.len());
            for &(k, c) in self.constants(indices[a], indices[b]) {
                match position[k] {
                    Some(p) => v[p] = c,
                    None => closed = false,
                }
            }
            v
        })?;
        if !closed {
            return Err(Error::NotClosed(alloc::format!(
                "basis subset of {} is not closed under the product",
                self.name
            )));
        }
        let degree = self.degree.as_ref().map(|d| indices.iter().map(|&i| d[i]).collect());
        Ok(StructureAlgebra { degree, ..restricted })
    }

    /// The algebra induced on a subspace closed under the product, in the
    /// subspace's echelon basis. Labels are taken from pivot columns.
    pub fn on_subspace(&self, s: &Subspace, name: impl Into<String>) -> Result<Self> {
        let basis = s.basis_vectors();
        let labels = s.pivots().iter().map(|&p| self.labels[p].clone()).collect();
        let parity = s.pivots().iter().map(|&p| self.parity[p]).collect();
        let mut products = Vec::with_capacity(basis.len() * basis.len());
        for x in &basis {
            for y in &basis {
                let z = self.bracket(x, y)?;
                products.push(s.coordinates(&z).ok_or_else(|| {
                    Error::NotClosed(alloc::format!("subspace of {} is not a subalgebra", self.name))
                })?);
            }
        }
        let d = basis.len();
        Self::from_fn(name, labels, parity, |i, j| products[i * d + j].clone())
    }

    /// Direct sum with block-diagonal constants.
    pub fn direct_sum(&self, other: &Self, name: impl Into<String>) -> Result<Self> {
        let (d1, d2) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(d1 + d2);
        labels.extend(self.labels.iter().map(|l| alloc::format!("{}#1", l)));
        labels.extend(other.labels.iter().map(|l| alloc::format!("{}#2", l)));
        let parity = self.parity.iter().chain(&other.parity).copied().collect();
        let out = Self::from_fn(name, labels, parity, |i, j| {
            let mut v = linalg::zero_vector(d1 + d2);
            if i < d1 && j < d1 {
                for &(k, c) in self.constants(i, j) {
                    v[k] = c;
                }
            } else if i >= d1 && j >= d1 {
                for &(k, c) in other.constants(i - d1, j - d1) {
                    v[d1 + k] = c;
                }
            }
            v
        })?;
        match (&self.degree, &other.degree) {
            (Some(a), Some(b)) => out.with_degrees(a.iter().chain(b).copied().collect()),
            _ => Ok(out),
        }
    }
}

fn sparse(v: &[Gf3]) -> Vec<(usize, Gf3)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, *c)).collect()
}

/// `[x,y] = -(-1)^{|x||y|} [y,x]` on all basis pairs.
pub fn check_super_skew(a: &StructureAlgebra) -> IdentityReport {
    let mut report = IdentityReport::new("super-skew");
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = a.product_basis(i, j);
            let rhs = linalg::scaled(&a.product_basis(j, i), -sign(a.parity[i], a.parity[j]));
            report.record(&[i, j], &lhs, &rhs);
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    /// The graded Jacobi identity on every basis triple.
    pub multilinear: IdentityReport,
    /// Odd basis elements checked for `[[x,x],x] = 0`.
    pub cubic_checked: usize,
    /// Odd basis indices where `[[x,x],x] != 0`. Informational only.
    pub cubic_failures: Vec<usize>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.multilinear.passed()
    }

    pub fn cubic_holds(&self) -> bool {
        self.cubic_failures.is_empty()
    }
}

/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0`
/// on all basis triples, plus the odd cubic condition as a separate flag.
pub fn check_super_jacobi(a: &StructureAlgebra) -> JacobiReport {
    let dim = a.dim();
    let p = &a.parity;
    let mut multilinear = IdentityReport::new("super-jacobi");
    let zero = linalg::zero_vector(dim);
    let mut acc = linalg::zero_vector(dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                acc.iter_mut().for_each(|x| *x = Gf3::ZERO);
                a.accumulate_left_nested(&mut acc, sign(p[i], p[k]), i, j, k);
                a.accumulate_left_nested(&mut acc, sign(p[j], p[i]), j, k, i);
                a.accumulate_left_nested(&mut acc, sign(p[k], p[j]), k, i, j);
                multilinear.record(&[i, j, k], &acc, &zero);
            }
        }
    }
    let odd = a.indices_of_parity(1);
    let mut cubic_failures = Vec::new();
    for &x in &odd {
        let xx = a.product_basis(x, x);
        let e = linalg::unit_vector(dim, x);
        let v = a.bracket(&xx, &e).expect("dimensions agree");
        if !linalg::is_zero(&v) {
            cubic_failures.push(x);
        }
    }
    JacobiReport { multilinear, cubic_checked: odd.len(), cubic_failures }
}

/// Span of all products of basis elements.
pub fn derived_algebra(a: &StructureAlgebra) -> Subspace {
    let vs: Vec<Vector> =
        (0..a.dim()).flat_map(|i| (0..a.dim()).map(move |j| (i, j))).map(|(i, j)| a.product_basis(i, j)).collect();
    Subspace::span(a.dim(), &vs)
}

/// Span of all products of elements of `s`.
pub fn derived_of(a: &StructureAlgebra, s: &Subspace) -> Result<Subspace> {
    let basis = s.basis_vectors();
    let mut vs = Vec::with_capacity(basis.len() * basis.len());
    for x in &basis {
        for y in &basis {
            vs.push(a.bracket(x, y)?);
        }
    }
    Subspace::try_span(a.dim(), &vs)
}

/// Smallest two-sided ideal containing `seeds`.
pub fn ideal_closure(a: &StructureAlgebra, seeds: &[Vector]) -> Result<Subspace> {
    for s in seeds {
        if s.len() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: s.len() });
        }
    }
    let mut gens: Vec<SparseMatrix> = Vec::with_capacity(2 * a.dim());
    for i in 0..a.dim() {
        gens.push(SparseMatrix::from_dense(&a.left_mult(i)));
        gens.push(SparseMatrix::from_dense(&a.right_mult(i)));
    }
    Ok(meataxe::spin_up(&gens, seeds, a.dim()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple(NortonCertificate),
    /// The product vanishes identically.
    Abelian,
    /// A proper nonzero ideal.
    ProperIdeal(Subspace),
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple(_))
    }

    pub fn ideal(&self) -> Option<&Subspace> {
        match self {
            Simplicity::ProperIdeal(s) => Some(s),
            _ => None,
        }
    }
}

/// Simplicity decided through irreducibility of the module spanned by the
/// given multiplication operators, provided the product is nonzero.
pub fn simplicity_from_operators(
    product_nonzero: bool,
    operators: &[Gf3Matrix],
    dim: usize,
    meataxe: &MeatAxe,
) -> Result<Simplicity> {
    if !product_nonzero {
        return Ok(Simplicity::Abelian);
    }
    Ok(match meataxe.is_irreducible(operators, dim)? {
        Irreducibility::Irreducible(cert) => Simplicity::Simple(cert),
        Irreducibility::Reducible(w) => Simplicity::ProperIdeal(w),
    })
}

/// A Lie algebra is simple iff it is nonabelian and its adjoint module is
/// irreducible.
pub fn check_simple(a: &StructureAlgebra, meataxe: &MeatAxe) -> Result<Simplicity> {
    if !a.is_purely_even() {
        return Err(Error::NotClosed(alloc::format!(
            "{} has odd basis elements; use the super criterion",
            a.name
        )));
    }
    simplicity_from_operators(!a.is_abelian(), &a.adjoint_operators(), a.dim(), meataxe)
}

/// The sufficient criterion for simplicity of a Lie superalgebra: simple even
/// part, irreducible odd part, nonzero odd-odd bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSimplicityReport {
    pub even_part: Simplicity,
    pub odd_module: Irreducibility,
    pub odd_odd_nonzero: bool,
}

impl SuperSimplicityReport {
    pub fn passed(&self) -> bool {
        self.even_part.is_simple() && self.odd_module.is_irreducible() && self.odd_odd_nonzero
    }
}

pub fn check_super_simple_criterion(
    a: &StructureAlgebra,
    meataxe: &MeatAxe,
) -> Result<SuperSimplicityReport> {
    let even = a.indices_of_parity(0);
    let odd = a.indices_of_parity(1);
    if even.is_empty() || odd.is_empty() {
        return Err(Error::NotClosed(alloc::format!("{} has trivial parity", a.name)));
    }
    let even_alg = a.restrict(&even, alloc::format!("{} (even part)", a.name))?;
    let even_part = check_simple(&even_alg, meataxe)?;
    let ops: Vec<Gf3Matrix> = even.iter().map(|&e| a.left_mult(e).select(&odd, &odd)).collect();
    let odd_module = meataxe.is_irreducible(&ops, odd.len())?;
    let odd_odd_nonzero = odd.iter().any(|&x| odd.iter().any(|&y| !a.constants(x, y).is_empty()));
    Ok(SuperSimplicityReport { even_part, odd_module, odd_odd_nonzero })
}

/// A linear map between two structure algebras, as a `target.dim x source.dim`
/// matrix acting on coordinate columns.
#[derive(Clone, Debug)]
pub struct LinearAlgebraMap<'a> {
    pub source: &'a StructureAlgebra,
    pub target: &'a StructureAlgebra,
    pub matrix: Gf3Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub parity_preserving: bool,
    pub brackets: IdentityReport,
    pub invertible: bool,
}

impl HomomorphismReport {
    pub fn is_homomorphism(&self) -> bool {
        self.parity_preserving && self.brackets.passed()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_homomorphism() && self.invertible
    }
}

impl<'a> LinearAlgebraMap<'a> {
    pub fn new(
        source: &'a StructureAlgebra,
        target: &'a StructureAlgebra,
        matrix: Gf3Matrix,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(LinearAlgebraMap { source, target, matrix })
    }

    pub fn identity(a: &'a StructureAlgebra) -> Self {
        LinearAlgebraMap { source: a, target: a, matrix: Gf3Matrix::identity(a.dim()) }
    }

    pub fn apply(&self, x: &[Gf3]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &LinearAlgebraMap<'a>) -> Result<LinearAlgebraMap<'a>> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source.dim(),
                found: first.target.dim(),
            });
        }
        Ok(LinearAlgebraMap {
            source: first.source,
            target: self.target,
            matrix: self.matrix.matmul(&first.matrix),
        })
    }

    pub fn is_parity_preserving(&self) -> bool {
        (0..self.source.dim()).all(|j| {
            (0..self.target.dim())
                .all(|i| self.matrix[(i, j)].is_zero() || self.source.parity[j] == self.target.parity[i])
        })
    }
}

/// Checks `phi([b_i, b_j]) = [phi(b_i), phi(b_j)]` on all basis pairs.
pub fn verify_homomorphism(phi: &LinearAlgebraMap<'_>) -> HomomorphismReport {
    let mut brackets = IdentityReport::new("homomorphism");
    let images: Vec<Vector> = (0..phi.source.dim()).map(|j| phi.matrix.column(j)).collect();
    for i in 0..phi.source.dim() {
        for j in 0..phi.source.dim() {
            let lhs = phi.apply(&phi.source.product_basis(i, j));
            let rhs = phi.target.bracket(&images[i], &images[j]).expect("dimensions checked");
            brackets.record(&[i, j], &lhs, &rhs);
        }
    }
    HomomorphismReport {
        parity_preserving: phi.is_parity_preserving(),
        brackets,
        invertible: phi.matrix.is_square() && phi.matrix.rank() == phi.matrix.rows(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub checked: u64,
    /// `(i, j, k)` with `c_ij^k != 0` but `deg k != deg i + deg j`.
    pub violations: Vec<(usize, usize, usize)>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn grading_report(a: &StructureAlgebra, compatible: impl Fn(usize, usize, usize) -> bool) -> GradingReport {
    let mut report = GradingReport { checked: 0, violations: Vec::new() };
    for (i, j, k, _) in a.nonzero_constants() {
        report.checked += 1;
        if !compatible(i, j, k) && report.violations.len() < MAX_WITNESSES {
            report.violations.push((i, j, k));
        }
    }
    report
}

/// Z-grading: every nonzero constant respects additivity of degrees.
pub fn check_grading(a: &StructureAlgebra, degrees: &[i64]) -> Result<GradingReport> {
    if degrees.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: degrees.len() });
    }
    Ok(grading_report(a, |i, j, k| degrees[k] == degrees[i] + degrees[j]))
}

/// Grading by `Z/m`: additivity of degrees modulo `modulus`.
pub fn check_grading_mod(a: &StructureAlgebra, degrees: &[i64], modulus: i64) -> Result<GradingReport> {
    if degrees.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: degrees.len() });
    }
    Ok(grading_report(a, |i, j, k| (degrees[k] - degrees[i] - degrees[j]).rem_euclid(modulus) == 0))
}

/// Z/2-grading by the stored parities.
pub fn check_parity_grading(a: &StructureAlgebra) -> GradingReport {
    let p = &a.parity;
    grading_report(a, |i, j, k| p[k] == (p[i] + p[j]) % 2)
}

/// `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
pub fn check_derivation(a: &StructureAlgebra, d: &Gf3Matrix) -> Result<IdentityReport> {
    if d.rows() != a.dim() || d.cols() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: d.rows() });
    }
    let mut report = IdentityReport::new("derivation");
    let images: Vec<Vector> = (0..a.dim()).map(|j| d.column(j)).collect();
    for i in 0..a.dim() {
        let ei = linalg::unit_vector(a.dim(), i);
        for j in 0..a.dim() {
            let ej = linalg::unit_vector(a.dim(), j);
            let lhs = d.mul_vec(&a.product_basis(i, j));
            let rhs = linalg::add(&a.bracket(&images[i], &ej)?, &a.bracket(&ei, &images[j])?);
            report.record(&[i, j], &lhs, &rhs);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| alloc::format!("b{}", i)).collect()
    }

    /// sl2 in the basis (e, h, f).
    fn sl2() -> StructureAlgebra {
        let table = |i: usize, j: usize| -> Vector {
            let v = |xs: [i64; 3]| xs.iter().map(|&x| Gf3::from_i64(x)).collect::<Vector>();
            match (i, j) {
                (0, 1) => v([-2, 0, 0]),
                (1, 0) => v([2, 0, 0]),
                (0, 2) => v([0, 1, 0]),
                (2, 0) => v([0, -1, 0]),
                (1, 2) => v([0, 0, -2]),
                (2, 1) => v([0, 0, 2]),
                _ => v([0, 0, 0]),
            }
        };
        StructureAlgebra::from_fn("sl2", labels(3), vec![0; 3], table).unwrap()
    }

    #[test]
    fn bracket_with_zero_is_zero() {
        let a = sl2();
        let y = vec![Gf3::ONE, Gf3::TWO, Gf3::ONE];
        assert!(linalg::is_zero(&a.bracket(&linalg::zero_vector(3), &y).unwrap()));
        assert!(a.bracket(&[Gf3::ONE], &y).is_err());
    }

    #[test]
    fn corrupted_constant_breaks_skew() {
        let mut a = sl2();
        assert!(check_super_skew(&a).passed());
        a.set_constant(0, 1, 0, Gf3::ZERO);
        let report = check_super_skew(&a);
        assert!(!report.passed());
        assert_eq!(report.first_witness().unwrap().indices, [0, 1]);
    }

    #[test]
    fn abelian_algebra_properties() {
        let a = StructureAlgebra::abelian("ab", labels(2), vec![0, 0]).unwrap();
        assert!(check_super_jacobi(&a).passed());
        assert!(derived_algebra(&a).is_zero());
        assert!(ideal_closure(&a, &[linalg::zero_vector(2)]).unwrap().is_zero());
        let one = StructureAlgebra::abelian("ab1", labels(1), vec![0]).unwrap();
        assert_eq!(check_simple(&one, &MeatAxe::default()).unwrap(), Simplicity::Abelian);
    }

    #[test]
    fn sl2_is_simple_in_characteristic_three() {
        let a = sl2();
        assert!(check_super_jacobi(&a).passed());
        assert!(check_simple(&a, &MeatAxe::default()).unwrap().is_simple());
    }

    #[test]
    fn zero_map_is_homomorphism_not_isomorphism() {
        let a = sl2();
        let zero = LinearAlgebraMap::new(&a, &a, Gf3Matrix::zeros(3, 3)).unwrap();
        let r = verify_homomorphism(&zero);
        assert!(r.is_homomorphism());
        assert!(!r.is_isomorphism());
        assert!(verify_homomorphism(&LinearAlgebraMap::identity(&a)).is_isomorphism());
    }

    #[test]
    fn derivation_examples() {
        let a = sl2();
        let zero = Gf3Matrix::zeros(3, 3);
        assert!(check_derivation(&a, &zero).unwrap().passed());
        assert_eq!(zero.nilpotency_index(), Some(1));
        assert!(!check_derivation(&a, &Gf3Matrix::identity(3)).unwrap().passed());
        let ad_e = a.ad(&linalg::unit_vector(3, 0));
        assert!(check_derivation(&a, &ad_e).unwrap().passed());
        assert_eq!(ad_e.nilpotency_index(), Some(3));
    }

    #[test]
    fn grading_fault_injection() {
        let a = sl2();
        assert!(check_grading(&a, &[2, 0, -2]).unwrap().passed());
        assert!(check_grading(&a, &[0, 0, 0]).unwrap().passed());
        assert!(!check_grading(&a, &[2, 1, -2]).unwrap().passed());
        assert!(check_grading(&a, &[2, 0]).is_err());
        assert!(check_parity_grading(&a).passed());
    }

    #[test]
    fn restrict_requires_closure() {
        let a = sl2();
        assert!(a.restrict(&[0, 2], "ef").is_err());
        let b = a.restrict(&[0, 1], "borel").unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.label(1), "b1".to_string());
    }
}
