//! J-ternary algebras and their Jordan algebras.
//!
//! A J-ternary algebra is a space `X` with a trilinear product `xyz`
//! satisfying
//!
//! 1. `xy(uvw) - uv(xyw) = (xyu)vw + u(yxv)w`
//! 2. `xyz - zyx = zxy - xzy`
//!
//! The operators `<x,y>z = yzx - xzy` span a Jordan algebra `J` with
//! `(a•b) = (ab + ba)/2`. By axiom 2, `<x,y> = L_{x,y} - L_{y,x}` where
//! `L_{x,y}z = xyz`.
//!
//! On `O(1;n)` the product `L_{f,g}h = fg dh - hg df` gives a simple
//! J-ternary algebra whose form is nondegenerate while `J ≅ (O, •)` is
//! neither simple nor nondegenerate.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    self, HomomorphismReport, IdentityReport, LinearAlgebraMap, Simplicity, StructureAlgebra,
};
use crate::divided_power::DividedPowerAlgebra;
use crate::error::{Error, Result};
use crate::frank::{self, Block};
use crate::gf3::Gf3;
use crate::linalg::{self, Gf3Matrix, Subspace, Vector};
use crate::meataxe::{Irreducibility, MeatAxe};

/// Largest dimension for which axiom 1 is swept exhaustively.
pub const EXHAUSTIVE_AXIOM_DIM: usize = 9;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JTernaryAlgebra {
    name: String,
    labels: Vec<String>,
    // `b_i b_j b_k` at `(i * dim + j) * dim + k`.
    table: Vec<Vec<(usize, Gf3)>>,
}

impl JTernaryAlgebra {
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize, usize) -> Vector,
    ) -> Result<Self> {
        let d = labels.len();
        let mut table = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = product(i, j, k);
                    if v.len() != d {
                        return Err(Error::DimensionMismatch { expected: d, found: v.len() });
                    }
                    table.push(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l, *c)).collect());
                }
            }
        }
        Ok(JTernaryAlgebra { name: name.into(), labels, table })
    }

    /// The zero product on a `dim`-dimensional space.
    pub fn zero(dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("b{}", i)).collect();
        Self::from_fn("zero", labels, |_, _, _| linalg::zero_vector(dim)).expect("consistent dimensions")
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

    pub fn constants(&self, i: usize, j: usize, k: usize) -> &[(usize, Gf3)] {
        let d = self.dim();
        &self.table[(i * d + j) * d + k]
    }

    /// Overwrites the coefficient of `b_l` in `b_i b_j b_k`.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, l: usize, c: Gf3) {
        let d = self.dim();
        let entry = &mut self.table[(i * d + j) * d + k];
        entry.retain(|&(m, _)| m != l);
        if !c.is_zero() {
            entry.push((l, c));
            entry.sort_unstable_by_key(|&(m, _)| m);
        }
    }

    pub fn product_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        let mut v = linalg::zero_vector(self.dim());
        for &(l, c) in self.constants(i, j, k) {
            v[l] = c;
        }
        v
    }

    pub fn product(&self, x: &[Gf3], y: &[Gf3], z: &[Gf3]) -> Vector {
        let d = self.dim();
        let mut out = linalg::zero_vector(d);
        let nz = |v: &[Gf3]| -> Vec<(usize, Gf3)> {
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, *c)).collect()
        };
        let (xs, ys, zs) = (nz(x), nz(y), nz(z));
        for &(i, a) in &xs {
            for &(j, b) in &ys {
                for &(k, c) in &zs {
                    let s = a * b * c;
                    for &(l, t) in self.constants(i, j, k) {
                        out[l] += s * t;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(|e| e.is_empty())
    }

    /// Matrix of `z -> b_i b_j z`.
    pub fn left_pair(&self, i: usize, j: usize) -> Gf3Matrix {
        self.operator_from(|k| self.constants(i, j, k))
    }

    /// Matrix of `z -> b_i z b_j`.
    pub fn middle(&self, i: usize, j: usize) -> Gf3Matrix {
        self.operator_from(|k| self.constants(i, k, j))
    }

    /// Matrix of `z -> z b_i b_j`.
    pub fn right_pair(&self, i: usize, j: usize) -> Gf3Matrix {
        self.operator_from(|k| self.constants(k, i, j))
    }

    fn operator_from<'a>(&'a self, column: impl Fn(usize) -> &'a [(usize, Gf3)]) -> Gf3Matrix {
        let d = self.dim();
        let mut m = Gf3Matrix::zeros(d, d);
        for k in 0..d {
            for &(l, c) in column(k) {
                m[(l, k)] = c;
            }
        }
        m
    }

    /// `L_{x,y}`: the matrix of `z -> xyz`.
    pub fn l_operator(&self, x: &[Gf3], y: &[Gf3]) -> Gf3Matrix {
        let d = self.dim();
        let mut m = Gf3Matrix::zeros(d, d);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                m.add_scaled(&self.left_pair(i, j), *a * *b);
            }
        }
        m
    }

    /// Every position operator `z -> b_i b_j z`, `b_i z b_j`, `z b_i b_j`.
    pub fn position_operators(&self) -> Vec<Gf3Matrix> {
        let d = self.dim();
        let mut ops = Vec::with_capacity(3 * d * d);
        for i in 0..d {
            for j in 0..d {
                ops.push(self.left_pair(i, j));
                ops.push(self.middle(i, j));
                ops.push(self.right_pair(i, j));
            }
        }
        ops
    }

    pub fn direct_sum(&self, other: &Self, name: impl Into<String>) -> Self {
        let (d1, d2) = (self.dim(), other.dim());
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{}#1", l))
            .chain(other.labels.iter().map(|l| format!("{}#2", l)))
            .collect();
        Self::from_fn(name, labels, |i, j, k| {
            let mut v = linalg::zero_vector(d1 + d2);
            if i < d1 && j < d1 && k < d1 {
                for &(l, c) in self.constants(i, j, k) {
                    v[l] = c;
                }
            } else if i >= d1 && j >= d1 && k >= d1 {
                for &(l, c) in other.constants(i - d1, j - d1, k - d1) {
                    v[d1 + l] = c;
                }
            }
            v
        })
        .expect("consistent dimensions")
    }
}

/// `O(1;n)` with `L_{f,g}h = fg dh - hg df`.
pub fn build_o_jternary(n: u32) -> Result<JTernaryAlgebra> {
    let o = DividedPowerAlgebra::new(n)?;
    JTernaryAlgebra::from_fn(format!("O(1;{})", n), o.labels(), |i, j, k| {
        l_fg(&o, &o.basis(i), &o.basis(j), &o.basis(k))
    })
}

/// `L_{f,g}h = fg dh - hg df` on `O`.
pub fn l_fg(o: &DividedPowerAlgebra, f: &[Gf3], g: &[Gf3], h: &[Gf3]) -> Vector {
    let fg = o.multiply(f, g);
    let hg = o.multiply(h, g);
    linalg::sub(&o.multiply(&fg, &o.partial(h)), &o.multiply(&hg, &o.partial(f)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomMode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

impl AxiomMode {
    /// Exhaustive up to [`EXHAUSTIVE_AXIOM_DIM`], sampled beyond.
    pub fn auto(dim: usize, seed: u64, samples: u64) -> Self {
        if dim <= EXHAUSTIVE_AXIOM_DIM {
            AxiomMode::Exhaustive
        } else {
            AxiomMode::Sampled { seed, samples }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub mode: AxiomMode,
    /// One entry per `(x, y, u, v, w)`; each compares a full vector.
    pub axiom1: IdentityReport,
    pub axiom2: IdentityReport,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axiom1.passed() && self.axiom2.passed()
    }

    /// Scalar equations behind the axiom 1 count.
    pub fn axiom1_scalar_checks(&self, dim: usize) -> u64 {
        self.axiom1.checked * dim as u64
    }
}

pub fn check_axioms(x: &JTernaryAlgebra, mode: AxiomMode) -> AxiomReport {
    let axiom1 = match mode {
        AxiomMode::Exhaustive => axiom1_exhaustive(x),
        AxiomMode::Sampled { seed, samples } => axiom1_sampled(x, seed, samples),
    };
    AxiomReport { mode, axiom1, axiom2: axiom2(x) }
}

/// Axiom 1 in operator form, `[L_{x,y}, L_{u,v}] = L_{xyu,v} + L_{u,yxv}`,
/// compared column by column.
fn axiom1_exhaustive(x: &JTernaryAlgebra) -> IdentityReport {
    let d = x.dim();
    let mut report = IdentityReport::new("jternary-axiom-1");
    let ls: Vec<Gf3Matrix> = (0..d * d).map(|p| x.left_pair(p / d, p % d)).collect();
    let l = |i: usize, j: usize| &ls[i * d + j];
    for a in 0..d {
        for b in 0..d {
            for u in 0..d {
                for v in 0..d {
                    let lhs = l(a, b).commutator(l(u, v));
                    let mut rhs = Gf3Matrix::zeros(d, d);
                    for &(k, c) in x.constants(a, b, u) {
                        rhs.add_scaled(l(k, v), c);
                    }
                    for &(k, c) in x.constants(b, a, v) {
                        rhs.add_scaled(l(u, k), c);
                    }
                    for w in 0..d {
                        report.record(&[a, b, u, v, w], &lhs.column(w), &rhs.column(w));
                    }
                }
            }
        }
    }
    report
}

fn axiom1_sampled(x: &JTernaryAlgebra, seed: u64, samples: u64) -> IdentityReport {
    let d = x.dim();
    let mut report = IdentityReport::new("jternary-axiom-1");
    if d == 0 {
        return report;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = |i: usize| linalg::unit_vector(d, i);
    for _ in 0..samples {
        let t: [usize; 5] = core::array::from_fn(|_| rng.gen_range(0..d));
        let [a, b, u, v, w] = t;
        let lhs = linalg::sub(
            &x.product(&e(a), &e(b), &x.product_basis(u, v, w)),
            &x.product(&e(u), &e(v), &x.product_basis(a, b, w)),
        );
        let rhs = linalg::add(
            &x.product(&x.product_basis(a, b, u), &e(v), &e(w)),
            &x.product(&e(u), &x.product_basis(b, a, v), &e(w)),
        );
        report.record(&t, &lhs, &rhs);
    }
    report
}

fn axiom2(x: &JTernaryAlgebra) -> IdentityReport {
    let d = x.dim();
    let mut report = IdentityReport::new("jternary-axiom-2");
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = linalg::sub(&x.product_basis(i, j, k), &x.product_basis(k, j, i));
                let rhs = linalg::sub(&x.product_basis(k, i, j), &x.product_basis(i, k, j));
                report.record(&[i, j, k], &lhs, &rhs);
            }
        }
    }
    report
}

/// `<x,y>`: the matrix of `z -> yzx - xzy`.
pub fn angle_operator(x: &JTernaryAlgebra, a: &[Gf3], b: &[Gf3]) -> Gf3Matrix {
    let d = x.dim();
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let z = linalg::unit_vector(d, k);
            linalg::sub(&x.product(b, &z, a), &x.product(a, &z, b))
        })
        .collect();
    Gf3Matrix::from_columns(d, &cols).expect("square")
}

/// The operator `z -> zyx - xyz`, with the operand in the outer slots.
pub fn outer_slot_operator(x: &JTernaryAlgebra, a: &[Gf3], b: &[Gf3]) -> Gf3Matrix {
    let d = x.dim();
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let z = linalg::unit_vector(d, k);
            linalg::sub(&x.product(&z, b, a), &x.product(a, b, &z))
        })
        .collect();
    Gf3Matrix::from_columns(d, &cols).expect("square")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleReport {
    /// `<f,h>` is multiplication by `f dh - h df`.
    pub closed_form: IdentityReport,
    /// `<x,y> = L_{x,y} - L_{y,x}`.
    pub reexpression: IdentityReport,
}

impl AngleReport {
    pub fn passed(&self) -> bool {
        self.closed_form.passed() && self.reexpression.passed()
    }
}

pub fn verify_angle_formula(n: u32) -> Result<AngleReport> {
    let o = DividedPowerAlgebra::new(n)?;
    let x = build_o_jternary(n)?;
    let d = o.dim();
    let mut closed_form = IdentityReport::new("angle-closed-form");
    let mut reexpression = IdentityReport::new("angle-reexpression");
    for i in 0..d {
        for j in 0..d {
            let (f, h) = (o.basis(i), o.basis(j));
            let angle = angle_operator(&x, &f, &h);
            let b = linalg::sub(&o.multiply(&f, &o.partial(&h)), &o.multiply(&h, &o.partial(&f)));
            closed_form.record(&[i, j], angle.entries(), o.mult_matrix(&b).entries());
            let l = x.left_pair(i, j).sub(&x.left_pair(j, i));
            reexpression.record(&[i, j], angle.entries(), l.entries());
        }
    }
    Ok(AngleReport { closed_form, reexpression })
}

/// `J` as a commutative algebra on a basis of operators on `X`.
#[derive(Clone, Debug)]
pub struct JordanAlgebraData {
    operators: Vec<Gf3Matrix>,
    algebra: StructureAlgebra,
}

impl JordanAlgebraData {
    pub fn dim(&self) -> usize {
        self.operators.len()
    }

    pub fn operators(&self) -> &[Gf3Matrix] {
        &self.operators
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }
}

/// `(a•b) = 2(ab + ba)` as operators; `1/2 = 2` in GF(3).
pub fn jordan_product(a: &Gf3Matrix, b: &Gf3Matrix) -> Gf3Matrix {
    a.matmul(b).add(&b.matmul(a)).scale(Gf3::TWO)
}

/// The span of all `<b_i, b_j>` with the product `•`.
pub fn build_jordan_j(x: &JTernaryAlgebra) -> Result<JordanAlgebraData> {
    let d = x.dim();
    let flat: Vec<Vector> = (0..d * d)
        .map(|p| {
            let (i, j) = (p / d, p % d);
            angle_operator(x, &linalg::unit_vector(d, i), &linalg::unit_vector(d, j)).entries().to_vec()
        })
        .collect();
    let span = Subspace::span(d * d, &flat);
    let operators: Vec<Gf3Matrix> = span
        .basis_vectors()
        .iter()
        .map(|v| Gf3Matrix::from_rows(d, &v.chunks(d.max(1)).map(<[Gf3]>::to_vec).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let m = operators.len();
    let mut table = Vec::with_capacity(m * m);
    for a in &operators {
        for b in &operators {
            let p = jordan_product(a, b);
            let c = span
                .coordinates(p.entries())
                .ok_or_else(|| Error::NotClosed("J is not closed under the Jordan product".into()))?;
            table.push(c);
        }
    }
    let labels = (0..m).map(|k| format!("J{}", k)).collect();
    let algebra = StructureAlgebra::from_fn(format!("J({})", x.name()), labels, vec![0; m], |i, j| {
        table[i * m + j].clone()
    })?;
    Ok(JordanAlgebraData { operators, algebra })
}

/// Commutativity and `(a•b)•(a•a) = a•(b•(a•a))` on basis pairs.
pub fn check_jordan_identity(j: &StructureAlgebra) -> Result<IdentityReport> {
    let d = j.dim();
    let mut report = IdentityReport::new("jordan-identity");
    for a in 0..d {
        let ea = linalg::unit_vector(d, a);
        let aa = j.product_basis(a, a);
        for b in 0..d {
            report.record(&[a, b, 0], &j.product_basis(a, b), &j.product_basis(b, a));
            let eb = linalg::unit_vector(d, b);
            let lhs = j.bracket(&j.product_basis(a, b), &aa)?;
            let rhs = j.bracket(&ea, &j.bracket(&eb, &aa)?)?;
            report.record(&[a, b, 1], &lhs, &rhs);
        }
    }
    Ok(report)
}

/// The identification `J -> (O, •)`, `R_b -> b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanIdentification {
    /// Every basis operator of `J` is multiplication by its value at `1`.
    pub multiplication_operators: bool,
    pub matrix: Gf3Matrix,
    pub homomorphism: HomomorphismReport,
    pub dim_j: usize,
    pub dim_o: usize,
}

impl JordanIdentification {
    pub fn passed(&self) -> bool {
        self.multiplication_operators && self.homomorphism.is_isomorphism() && self.dim_j == self.dim_o
    }
}

/// `(O, •)`: for commutative `O`, `a•b = (ab + ba)/2 = ab`.
pub fn o_jordan(n: u32) -> Result<StructureAlgebra> {
    let o = DividedPowerAlgebra::new(n)?;
    Ok(o.to_structure_algebra().with_name(format!("(O(1;{}), •)", n)))
}

pub fn identify_j_with_o(n: u32, j: &JordanAlgebraData) -> Result<JordanIdentification> {
    let o = DividedPowerAlgebra::new(n)?;
    let target = o_jordan(n)?;
    let one = o.basis(0);
    let mut multiplication_operators = true;
    let mut cols = Vec::with_capacity(j.dim());
    for op in j.operators() {
        if op.rows() != o.dim() {
            return Err(Error::DimensionMismatch { expected: o.dim(), found: op.rows() });
        }
        let b = op.mul_vec(&one);
        multiplication_operators &= *op == o.mult_matrix(&b);
        cols.push(b);
    }
    let matrix = Gf3Matrix::from_columns(o.dim(), &cols)?;
    let map = LinearAlgebraMap::new(j.algebra(), &target, matrix.clone())?;
    Ok(JordanIdentification {
        multiplication_operators,
        matrix,
        homomorphism: algebra::verify_homomorphism(&map),
        dim_j: j.dim(),
        dim_o: o.dim(),
    })
}

/// Simple iff the product is nonzero and `X` is irreducible under all
/// position operators.
pub fn check_jternary_simple(x: &JTernaryAlgebra, meataxe: &MeatAxe) -> Result<Simplicity> {
    if x.dim() == 0 || x.is_zero_product() {
        return Ok(Simplicity::Abelian);
    }
    algebra::simplicity_from_operators(true, &x.position_operators(), x.dim(), meataxe)
}

/// Simplicity of a commutative algebra through its multiplication operators.
/// A reducible verdict is widened to a maximal ideal.
pub fn check_jordan_simple(j: &StructureAlgebra, meataxe: &MeatAxe) -> Result<Simplicity> {
    if j.dim() == 0 || j.is_abelian() {
        return Ok(Simplicity::Abelian);
    }
    let ops: Vec<Gf3Matrix> = (0..j.dim()).map(|i| j.left_mult(i)).collect();
    match meataxe.is_irreducible(&ops, j.dim())? {
        Irreducibility::Irreducible(cert) => Ok(Simplicity::Simple(cert)),
        Irreducibility::Reducible(w) => Ok(Simplicity::ProperIdeal(meataxe.maximal_submodule(&ops, &w)?)),
    }
}

/// `U_b a = 2 b•(b•a) - (b•b)•a`.
pub fn u_operator(j: &StructureAlgebra, b: &[Gf3]) -> Result<Gf3Matrix> {
    let d = j.dim();
    let bb = j.bracket(b, b)?;
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let a = linalg::unit_vector(d, k);
            let first = j.bracket(b, &j.bracket(b, &a)?)?;
            let second = j.bracket(&bb, &a)?;
            Ok(linalg::sub(&linalg::scaled(&first, Gf3::TWO), &second))
        })
        .collect::<Result<_>>()?;
    Gf3Matrix::from_columns(d, &cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegeneracySearch {
    Basis,
    Exhaustive,
    Randomized { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyWitness {
    pub vector: Vector,
    pub found_by: DegeneracySearch,
}

/// Searches for a nonzero `b` with `U_b = 0`: basis vectors from the top
/// index down, then every vector when `dim <= 4`, otherwise random vectors.
pub fn check_jordan_degenerate(
    j: &StructureAlgebra,
    seed: u64,
    samples: u64,
) -> Result<Option<DegeneracyWitness>> {
    let d = j.dim();
    let absolute_zero = |b: &[Gf3]| -> Result<bool> { Ok(u_operator(j, b)?.is_zero()) };
    for k in (0..d).rev() {
        let b = linalg::unit_vector(d, k);
        if absolute_zero(&b)? {
            return Ok(Some(DegeneracyWitness { vector: b, found_by: DegeneracySearch::Basis }));
        }
    }
    if d <= 4 {
        for code in 1..3usize.pow(d as u32) {
            let b: Vector = (0..d).map(|i| Gf3::new(((code / 3usize.pow(i as u32)) % 3) as u8)).collect();
            if absolute_zero(&b)? {
                return Ok(Some(DegeneracyWitness { vector: b, found_by: DegeneracySearch::Exhaustive }));
            }
        }
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let b = linalg::random_vector(d, &mut rng);
        if !linalg::is_zero(&b) && absolute_zero(&b)? {
            return Ok(Some(DegeneracyWitness { vector: b, found_by: DegeneracySearch::Randomized { seed } }));
        }
    }
    Ok(None)
}

/// Radicals of the operator-valued form `(x, y) -> <x,y>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    /// `{x : <x, b_j> = 0 for all j}`.
    pub left_radical: Subspace,
    /// `{y : <b_i, y> = 0 for all i}`.
    pub right_radical: Subspace,
}

impl FormReport {
    pub fn nondegenerate(&self) -> bool {
        self.left_radical.is_zero()
    }
}

pub fn check_form_nondegenerate(x: &JTernaryAlgebra) -> FormReport {
    let d = x.dim();
    // Column i of `left` stacks the entries of <b_i, b_j> over all j.
    let radical = |left: bool| -> Subspace {
        let mut m = Gf3Matrix::zeros(d * d * d, d);
        for i in 0..d {
            for j in 0..d {
                let (a, b) = if left { (i, j) } else { (j, i) };
                let op = angle_operator(x, &linalg::unit_vector(d, a), &linalg::unit_vector(d, b));
                for (e, c) in op.entries().iter().enumerate() {
                    m[(j * d * d + e, i)] = *c;
                }
            }
        }
        m.kernel()
    };
    FormReport { left_radical: radical(true), right_radical: radical(false) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrankLinkReport {
    /// `[[u⊗f, v⊗g], u⊗h] = u⊗L_{f,g}h`.
    pub u_variant: IdentityReport,
    /// `[[v⊗f, u⊗g], v⊗h] = -v⊗L_{f,g}h`.
    pub v_variant: IdentityReport,
    /// `[L_{x,y}, L_{a,b}] = L_{L_{x,y}a, b} + L_{a, L_{y,x}b}`.
    pub operator: IdentityReport,
    pub operator_exhaustive: bool,
}

impl FrankLinkReport {
    pub fn passed(&self) -> bool {
        self.u_variant.passed() && self.v_variant.passed() && self.operator.passed()
    }
}

/// Checks the three identities tying `F(n)` to the product on `O`. The
/// operator identity is exhaustive up to [`EXHAUSTIVE_AXIOM_DIM`] and
/// otherwise sampled on `samples / dim²` quadruples.
pub fn verify_frank_link(n: u32, seed: u64, samples: u64) -> Result<FrankLinkReport> {
    let fr = frank::build_frank(n)?;
    let x = build_o_jternary(n)?;
    let o = fr.o();
    let l = fr.algebra();
    let d = o.dim();
    let mut u_variant = IdentityReport::new("frank-link-u");
    let mut v_variant = IdentityReport::new("frank-link-v");
    for f in 0..d {
        for g in 0..d {
            let uv = l.product_basis(fr.index(Block::U, f), fr.index(Block::V, g));
            let vu = l.product_basis(fr.index(Block::V, f), fr.index(Block::U, g));
            for h in 0..d {
                let lfg = x.product_basis(f, g, h);
                let lhs = l.bracket(&uv, &fr.basis(Block::U, h))?;
                u_variant.record(&[f, g, h], &lhs, &fr.element(Block::U, &lfg));
                let lhs = l.bracket(&vu, &fr.basis(Block::V, h))?;
                let rhs = fr.element(Block::V, &linalg::scaled(&lfg, -Gf3::ONE));
                v_variant.record(&[f, g, h], &lhs, &rhs);
            }
        }
    }
    let operator_exhaustive = d <= EXHAUSTIVE_AXIOM_DIM;
    let quadruples: Vec<[usize; 4]> = if operator_exhaustive {
        (0..d.pow(4)).map(|c| [c / (d * d * d), (c / (d * d)) % d, (c / d) % d, c % d]).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let count = (samples / (d * d) as u64).max(1);
        (0..count).map(|_| core::array::from_fn(|_| rng.gen_range(0..d))).collect()
    };
    let mut operator = IdentityReport::new("frank-link-operator");
    for [a, b, p, q] in quadruples {
        let lhs = x.left_pair(a, b).commutator(&x.left_pair(p, q));
        let rhs = x
            .l_operator(&x.product_basis(a, b, p), &o.basis(q))
            .add(&x.l_operator(&o.basis(p), &x.product_basis(b, a, q)));
        operator.record(&[a, b, p, q], lhs.entries(), rhs.entries());
    }
    Ok(FrankLinkReport { u_variant, v_variant, operator, operator_exhaustive })
}

/// Every stage of the counterexample to "simple iff `J` simple and `<,>`
/// nondegenerate".
#[derive(Clone, Debug)]
pub struct HeinReport {
    pub axioms: AxiomReport,
    pub jternary_simple: Simplicity,
    pub form: FormReport,
    pub jordan_dim: usize,
    pub jordan_identity: IdentityReport,
    pub jordan_simple: Simplicity,
    pub degeneracy: Option<DegeneracyWitness>,
    /// Present for the `O(1;n)` case only.
    pub identification: Option<JordanIdentification>,
}

impl HeinReport {
    /// A simple J-ternary algebra with nondegenerate form whose Jordan
    /// algebra is not simple.
    pub fn is_counterexample(&self) -> bool {
        self.axioms.passed()
            && self.jternary_simple.is_simple()
            && self.form.nondegenerate()
            && matches!(self.jordan_simple, Simplicity::ProperIdeal(_))
    }
}

pub fn hein_pipeline(
    x: &JTernaryAlgebra,
    meataxe: &MeatAxe,
    samples: u64,
) -> Result<HeinReport> {
    let axioms = check_axioms(x, AxiomMode::auto(x.dim(), meataxe.seed, samples));
    let jternary_simple = check_jternary_simple(x, meataxe)?;
    let form = check_form_nondegenerate(x);
    let j = build_jordan_j(x)?;
    let jordan_identity = check_jordan_identity(j.algebra())?;
    let jordan_simple = check_jordan_simple(j.algebra(), meataxe)?;
    let degeneracy = check_jordan_degenerate(j.algebra(), meataxe.seed, samples)?;
    Ok(HeinReport {
        axioms,
        jternary_simple,
        form,
        jordan_dim: j.dim(),
        jordan_identity,
        jordan_simple,
        degeneracy,
        identification: None,
    })
}

/// The pipeline on `O(1;n)`, with the identification `J ≅ (O, •)`.
pub fn hein_counterexample(n: u32, meataxe: &MeatAxe, samples: u64) -> Result<HeinReport> {
    let x = build_o_jternary(n)?;
    let mut report = hein_pipeline(&x, meataxe, samples)?;
    let j = build_jordan_j(&x)?;
    report.identification = Some(identify_j_with_o(n, &j)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: i64) -> Gf3 {
        Gf3::from_i64(x)
    }

    #[test]
    fn product_examples() {
        let o = DividedPowerAlgebra::new(1).unwrap();
        let x = build_o_jternary(1).unwrap();
        for f in 0..3 {
            for h in 0..3 {
                assert!(linalg::is_zero(&x.product_basis(f, h, f)));
            }
        }
        assert_eq!(x.product_basis(0, 0, 1), o.basis(0));
        assert_eq!(x.product_basis(1, 0, 2), o.basis(2));
    }

    #[test]
    fn axioms_hold_exhaustively() {
        for n in 1..=2 {
            let x = build_o_jternary(n).unwrap();
            let r = check_axioms(&x, AxiomMode::Exhaustive);
            assert!(r.passed(), "n = {}", n);
            let d = x.dim() as u64;
            assert_eq!(r.axiom1.checked, d.pow(5));
            assert_eq!(r.axiom1_scalar_checks(x.dim()), d.pow(6));
        }
    }

    #[test]
    fn corrupted_constant_breaks_axiom_one() {
        let mut x = build_o_jternary(1).unwrap();
        x.set_constant(0, 0, 1, 0, g(2));
        let r = check_axioms(&x, AxiomMode::Exhaustive);
        assert!(!r.axiom1.passed());
        assert_eq!(r.axiom1.first_witness().unwrap().indices.len(), 5);
    }

    #[test]
    fn sampled_axioms_agree() {
        let x = build_o_jternary(2).unwrap();
        let r = check_axioms(&x, AxiomMode::Sampled { seed: 3, samples: 2000 });
        assert!(r.passed());
        assert_eq!(r.axiom1.checked, 2000);
    }

    #[test]
    fn angle_examples() {
        let o = DividedPowerAlgebra::new(1).unwrap();
        let x = build_o_jternary(1).unwrap();
        assert!(angle_operator(&x, &o.basis(1), &o.basis(1)).is_zero());
        assert_eq!(angle_operator(&x, &o.basis(0), &o.basis(1)), Gf3Matrix::identity(3));
        assert_eq!(angle_operator(&x, &o.basis(0), &o.basis(2)), o.mult_matrix(&o.basis(1)));
        for n in 1..=2 {
            assert!(verify_angle_formula(n).unwrap().passed());
        }
    }

    #[test]
    fn outer_slot_operator_is_not_a_multiplication() {
        // z -> zyx - xyz sends z to y(x dz - z dx), which involves dz.
        let o = DividedPowerAlgebra::new(1).unwrap();
        let x = build_o_jternary(1).unwrap();
        let op = outer_slot_operator(&x, &o.basis(1), &o.basis(0));
        assert_ne!(op, o.mult_matrix(&op.mul_vec(&o.basis(0))));
    }

    #[test]
    fn jordan_algebra_is_o() {
        for n in 1..=2 {
            let x = build_o_jternary(n).unwrap();
            let j = build_jordan_j(&x).unwrap();
            assert_eq!(j.dim(), 3usize.pow(n));
            assert!(check_jordan_identity(j.algebra()).unwrap().passed());
            let id = identify_j_with_o(n, &j).unwrap();
            assert!(id.passed());
        }
        // x • x = 2 x^(2)
        let o = o_jordan(1).unwrap();
        assert_eq!(o.product_basis(1, 1), linalg::scaled(&linalg::unit_vector(3, 2), g(2)));
    }

    #[test]
    fn simplicity_verdicts() {
        let ma = MeatAxe::default();
        for n in 1..=2 {
            assert!(check_jternary_simple(&build_o_jternary(n).unwrap(), &ma).unwrap().is_simple());
        }
        let x = build_o_jternary(1).unwrap();
        let sum = x.direct_sum(&x, "O + O");
        let verdict = check_jternary_simple(&sum, &ma).unwrap();
        let w = verdict.ideal().unwrap();
        assert!(*w == Subspace::coordinate(6, 0..3) || *w == Subspace::coordinate(6, 3..6));
    }

    #[test]
    fn jordan_simplicity_and_degeneracy() {
        let ma = MeatAxe::default();
        let j = build_jordan_j(&build_o_jternary(1).unwrap()).unwrap();
        let ideal = check_jordan_simple(j.algebra(), &ma).unwrap();
        assert_eq!(ideal.ideal().unwrap().dim(), 2);
        let w = check_jordan_degenerate(j.algebra(), 0, 10).unwrap().unwrap();
        assert_eq!(w.vector, linalg::unit_vector(3, 2));

        let unit = StructureAlgebra::from_fn("k", vec!["1".into()], vec![0], |_, _| vec![Gf3::ONE]).unwrap();
        assert!(check_jordan_simple(&unit, &ma).unwrap().is_simple());
        assert_eq!(check_jordan_degenerate(&unit, 0, 10).unwrap(), None);
    }

    #[test]
    fn form_radicals() {
        for n in 1..=2 {
            let r = check_form_nondegenerate(&build_o_jternary(n).unwrap());
            assert!(r.nondegenerate() && r.right_radical.is_zero());
        }
        assert!(!check_form_nondegenerate(&JTernaryAlgebra::zero(1)).nondegenerate());
    }

    #[test]
    fn frank_link() {
        for n in 1..=2 {
            let r = verify_frank_link(n, 0, 0).unwrap();
            assert!(r.passed() && r.operator_exhaustive, "n = {}", n);
        }
    }

    #[test]
    fn counterexample_pipeline() {
        let r = hein_counterexample(1, &MeatAxe::default(), 1000).unwrap();
        assert!(r.is_counterexample());
        assert!(r.identification.as_ref().unwrap().passed());
        let control = hein_pipeline(&JTernaryAlgebra::zero(1), &MeatAxe::default(), 10).unwrap();
        assert!(!control.is_counterexample());
    }
}
