//! Objects of `Rep(α₃)` as spaces with a cube-zero endomorphism, and the
//! semisimplification of a Lie algebra with a cube-zero derivation.
//!
//! The indecomposables are the nilpotent Jordan blocks `(1)`, `(2)`, `(3)`.
//! Semisimplification kills `(3)`, keeps `(1)` as the even part and `(2)` as
//! the odd part:
//!
//! - even: `ker d / (ker d ∩ im d)`
//! - odd: `ker d² / (ker d + (im d ∩ ker d²))`
//!
//! Brackets of class representatives `w_x, w_y`: even-even and mixed pairs
//! project `[w_x, w_y]`; odd-odd pairs project `[d w_x, w_y] - [w_x, d w_y]`
//! to the even part.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self, HomomorphismReport, LinearAlgebraMap, StructureAlgebra};
use crate::error::{Error, Result};
use crate::frank::{self, Block};
use crate::gf3::Gf3;
use crate::linalg::{self, Gf3Matrix, Subspace, SubquotientSpace, Vector};
use crate::witt_contact;

/// Multiplicities of the blocks `(1)`, `(2)`, `(3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct JordanType {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
}

impl JordanType {
    pub fn dim(&self) -> usize {
        self.m1 + 2 * self.m2 + 3 * self.m3
    }
}

impl core::ops::Add for JordanType {
    type Output = JordanType;
    fn add(self, o: JordanType) -> JordanType {
        JordanType { m1: self.m1 + o.m1, m2: self.m2 + o.m2, m3: self.m3 + o.m3 }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m1, self.m2, self.m3)
    }
}

/// A finite-dimensional space with an endomorphism `f`, `f³ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepAlpha3Object {
    f: Gf3Matrix,
}

impl RepAlpha3Object {
    pub fn new(f: Gf3Matrix) -> Result<Self> {
        if !f.is_square() {
            return Err(Error::DimensionMismatch { expected: f.rows(), found: f.cols() });
        }
        if !f.pow(3).is_zero() {
            return Err(Error::CubeNotZero);
        }
        Ok(RepAlpha3Object { f })
    }

    /// `k` copies of the trivial object `(1)`.
    pub fn trivial(k: usize) -> Self {
        RepAlpha3Object { f: Gf3Matrix::zeros(k, k) }
    }

    /// The indecomposable `(size)`: basis `e_1, .., e_size`, `f(e_i) = e_{i+1}`.
    pub fn block(size: usize) -> Result<Self> {
        if !(1..=3).contains(&size) {
            return Err(Error::CubeNotZero);
        }
        Ok(RepAlpha3Object { f: shift_block(size) })
    }

    pub fn dim(&self) -> usize {
        self.f.rows()
    }

    pub fn f(&self) -> &Gf3Matrix {
        &self.f
    }

    pub fn jordan_type(&self) -> JordanType {
        let r1 = self.f.rank();
        let r2 = self.f.pow(2).rank();
        JordanType { m1: self.dim() + r2 - 2 * r1, m2: r1 - 2 * r2, m3: r2 }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        RepAlpha3Object { f: block_diag(&self.f, &other.f) }
    }

    /// `f ⊗ 1 + 1 ⊗ f` on the Kronecker product.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let f = self
            .f
            .kron(&Gf3Matrix::identity(other.dim()))
            .add(&Gf3Matrix::identity(self.dim()).kron(&other.f));
        Self::new(f)
    }
}

pub fn jordan_type(f: &Gf3Matrix) -> Result<JordanType> {
    Ok(RepAlpha3Object::new(f.clone())?.jordan_type())
}

fn shift_block(size: usize) -> Gf3Matrix {
    Gf3Matrix::from_fn(size, size, |r, c| if r == c + 1 { Gf3::ONE } else { Gf3::ZERO })
}

pub(crate) fn block_diag(a: &Gf3Matrix, b: &Gf3Matrix) -> Gf3Matrix {
    let (n1, n2) = (a.rows(), b.rows());
    let (c1, c2) = (a.cols(), b.cols());
    Gf3Matrix::from_fn(n1 + n2, c1 + c2, |r, c| match (r < n1, c < c1) {
        (true, true) => a[(r, c)],
        (false, false) => b[(r - n1, c - c1)],
        _ => Gf3::ZERO,
    })
}

/// `v ⊗ w -> w ⊗ v` on `V ⊗ W` with `dim V = a`, `dim W = b`.
pub fn swap_matrix(a: usize, b: usize) -> Gf3Matrix {
    Gf3Matrix::from_fn(a * b, a * b, |r, c| {
        let (i, j) = (c / b, c % b);
        if r == j * a + i {
            Gf3::ONE
        } else {
            Gf3::ZERO
        }
    })
}

/// Sign of the braiding on the odd line of `(2) ⊗ (2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidingReport {
    pub annihilated: bool,
    pub outside_image: bool,
    pub negated_by_swap: bool,
}

impl BraidingReport {
    pub fn passed(&self) -> bool {
        self.annihilated && self.outside_image && self.negated_by_swap
    }
}

/// In `(2) ⊗ (2)` the vector `e1⊗e2 - e2⊗e1` spans the trivial summand: it is
/// killed by the tensor endomorphism, lies outside its image and is negated
/// by the swap.
pub fn braiding_sign_check() -> BraidingReport {
    let two = RepAlpha3Object::block(2).expect("valid block");
    let t = two.tensor(&two).expect("cube zero in characteristic three");
    // index of e_i ⊗ e_j is 2i + j
    let mut e = linalg::zero_vector(4);
    e[1] = Gf3::ONE;
    e[2] = -Gf3::ONE;
    BraidingReport {
        annihilated: linalg::is_zero(&t.f().mul_vec(&e)),
        outside_image: !t.f().image().contains(&e),
        negated_by_swap: swap_matrix(2, 2).mul_vec(&e) == linalg::scaled(&e, -Gf3::ONE),
    }
}

/// The image of a Lie algebra with cube-zero derivation under
/// semisimplification. Basis: even classes, then odd classes.
#[derive(Clone, Debug)]
pub struct SemisimplifiedAlgebra {
    d: Gf3Matrix,
    even: SubquotientSpace,
    odd: SubquotientSpace,
    algebra: StructureAlgebra,
}

impl SemisimplifiedAlgebra {
    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn derivation(&self) -> &Gf3Matrix {
        &self.d
    }

    pub fn even(&self) -> &SubquotientSpace {
        &self.even
    }

    pub fn odd(&self) -> &SubquotientSpace {
        &self.odd
    }

    pub fn even_dim(&self) -> usize {
        self.even.dim()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd.dim()
    }

    /// Coordinates of the class of an element of `ker d` in the even part.
    pub fn even_class(&self, v: &[Gf3]) -> Result<Vector> {
        self.even.project(v)
    }

    /// Coordinates of the class of an element of `ker d²` in the odd part.
    pub fn odd_class(&self, v: &[Gf3]) -> Result<Vector> {
        self.odd.project(v)
    }
}

/// The numerator and denominator of the even and odd parts.
pub fn semisimplification_spaces(d: &Gf3Matrix) -> Result<[(Subspace, Subspace); 2]> {
    let ker1 = d.kernel();
    let ker2 = d.pow(2).kernel();
    let im = d.image();
    let even_den = ker1.intersect(&im)?;
    let odd_den = ker1.sum(&im.intersect(&ker2)?)?;
    Ok([(ker1, even_den), (ker2, odd_den)])
}

fn check_input(l: &StructureAlgebra, d: &Gf3Matrix) -> Result<()> {
    if d.rows() != l.dim() || d.cols() != l.dim() {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: d.rows() });
    }
    if !d.pow(3).is_zero() {
        return Err(Error::CubeNotZero);
    }
    let report = algebra::check_derivation(l, d)?;
    if let Some(w) = report.first_witness() {
        return Err(Error::NotDerivation(w.indices[0], w.indices[1]));
    }
    Ok(())
}

pub fn semisimplify(l: &StructureAlgebra, d: &Gf3Matrix) -> Result<SemisimplifiedAlgebra> {
    semisimplify_with_reps(l, d, None, None)
}

/// As [`semisimplify`], with caller-chosen class representatives.
pub fn semisimplify_with_reps(
    l: &StructureAlgebra,
    d: &Gf3Matrix,
    even_reps: Option<&[Vector]>,
    odd_reps: Option<&[Vector]>,
) -> Result<SemisimplifiedAlgebra> {
    check_input(l, d)?;
    let [(k1, den0), (k2, den1)] = semisimplification_spaces(d)?;
    let even = match even_reps {
        Some(r) => SubquotientSpace::with_representatives(&k1, &den0, r)?,
        None => SubquotientSpace::new(&k1, &den0)?,
    };
    let odd = match odd_reps {
        Some(r) => SubquotientSpace::with_representatives(&k2, &den1, r)?,
        None => SubquotientSpace::new(&k2, &den1)?,
    };
    let (m0, m1) = (even.dim(), odd.dim());
    let dim = m0 + m1;
    let reps: Vec<Vector> = (0..m0)
        .map(|k| even.representative(k).to_vec())
        .chain((0..m1).map(|k| odd.representative(k).to_vec()))
        .collect();
    let d_reps: Vec<Vector> = reps.iter().map(|r| d.mul_vec(r)).collect();

    let mut table = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        for y in 0..dim {
            let mut out = linalg::zero_vector(dim);
            match (x < m0, y < m0) {
                (true, true) => {
                    let c = even.project(&l.bracket(&reps[x], &reps[y])?)?;
                    out[..m0].copy_from_slice(&c);
                }
                (false, false) => {
                    let v = linalg::sub(
                        &l.bracket(&d_reps[x], &reps[y])?,
                        &l.bracket(&reps[x], &d_reps[y])?,
                    );
                    out[..m0].copy_from_slice(&even.project(&v)?);
                }
                _ => {
                    let c = odd.project(&l.bracket(&reps[x], &reps[y])?)?;
                    out[m0..].copy_from_slice(&c);
                }
            }
            table.push(out);
        }
    }
    let labels = (0..dim).map(|k| class_label(l, &reps[k], k < m0, if k < m0 { k } else { k - m0 })).collect();
    let parity = (0..dim).map(|k| u8::from(k >= m0)).collect();
    let algebra = StructureAlgebra::from_fn(format!("ss({})", l.name()), labels, parity, |i, j| {
        table[i * dim + j].clone()
    })?;
    Ok(SemisimplifiedAlgebra { d: d.clone(), even, odd, algebra })
}

fn class_label(l: &StructureAlgebra, rep: &[Gf3], even: bool, k: usize) -> String {
    let support: Vec<usize> = (0..rep.len()).filter(|&i| !rep[i].is_zero()).collect();
    match support.as_slice() {
        [i] if rep[*i] == Gf3::ONE => format!("[{}]", l.label(*i)),
        _ => format!("{}{}", if even { "c0_" } else { "c1_" }, k),
    }
}

/// Result of re-deriving the semisimplification with perturbed representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationReport {
    pub trials: usize,
    /// Trials whose induced change of basis was not the identity.
    pub nontrivial_basis_change: usize,
    /// Trials whose structure constants differ after the basis change.
    pub mismatches: Vec<usize>,
}

impl PerturbationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Adds random denominator vectors to every representative and compares the
/// resulting structure constants through the induced change of basis.
pub fn representative_independence(
    l: &StructureAlgebra,
    d: &Gf3Matrix,
    trials: usize,
    seed: u64,
) -> Result<PerturbationReport> {
    let base = semisimplify(l, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PerturbationReport { trials, nontrivial_basis_change: 0, mismatches: Vec::new() };
    for t in 0..trials {
        let even_reps = perturb(&base.even, &mut rng);
        let odd_reps = perturb(&base.odd, &mut rng);
        let other = semisimplify_with_reps(l, d, Some(&even_reps), Some(&odd_reps))?;
        let change = induced_basis_change(&base, &other)?;
        if change != Gf3Matrix::identity(change.rows()) {
            report.nontrivial_basis_change += 1;
        }
        let map = LinearAlgebraMap::new(other.algebra(), base.algebra(), change)?;
        if !algebra::verify_homomorphism(&map).is_isomorphism() {
            report.mismatches.push(t);
        }
    }
    Ok(report)
}

fn perturb<R: Rng>(space: &SubquotientSpace, rng: &mut R) -> Vec<Vector> {
    let den = space.denominator().basis_vectors();
    (0..space.dim())
        .map(|k| {
            let mut r = space.representative(k).to_vec();
            for b in &den {
                linalg::add_scaled(&mut r, b, Gf3::new(rng.gen_range(0..3)));
            }
            r
        })
        .collect()
}

/// Matrix sending class coordinates in `other` to class coordinates in `base`.
pub fn induced_basis_change(
    base: &SemisimplifiedAlgebra,
    other: &SemisimplifiedAlgebra,
) -> Result<Gf3Matrix> {
    let even = class_matrix(&base.even, &other.even)?;
    let odd = class_matrix(&base.odd, &other.odd)?;
    Ok(block_diag(&even, &odd))
}

fn class_matrix(base: &SubquotientSpace, other: &SubquotientSpace) -> Result<Gf3Matrix> {
    let cols: Vec<Vector> =
        (0..other.dim()).map(|k| base.project(other.representative(k))).collect::<Result<_>>()?;
    Gf3Matrix::from_columns(base.dim(), &cols)
}

/// Report for the identification of a semisimplified algebra with a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplificationReport {
    pub even_dim: usize,
    pub odd_dim: usize,
    pub jordan_type: JordanType,
    pub skew: algebra::IdentityReport,
    pub homomorphism: HomomorphismReport,
}

impl SemisimplificationReport {
    pub fn passed(&self) -> bool {
        self.skew.passed()
            && self.homomorphism.is_isomorphism()
            && self.even_dim == self.jordan_type.m1
            && self.odd_dim == self.jordan_type.m2
    }
}

/// Compares `ss` with `target` through the map sending the class of
/// `even_sources[i]` to target basis `i` and the class of `odd_sources[j]` to
/// target basis `even_sources.len() + j`.
pub fn identify_semisimplification(
    ss: &SemisimplifiedAlgebra,
    target: &StructureAlgebra,
    even_sources: &[Vector],
    odd_sources: &[Vector],
) -> Result<SemisimplificationReport> {
    let to_cols = |space: &SubquotientSpace, sources: &[Vector]| -> Result<Gf3Matrix> {
        let cols: Vec<Vector> = sources.iter().map(|s| space.project(s)).collect::<Result<_>>()?;
        Gf3Matrix::from_columns(space.dim(), &cols)
    };
    let p0 = to_cols(&ss.even, even_sources)?;
    let p1 = to_cols(&ss.odd, odd_sources)?;
    let p = block_diag(&p0, &p1);
    let matrix = p
        .inverse()
        .ok_or_else(|| Error::InvalidRepresentatives("sources do not form a class basis".into()))?;
    let map = LinearAlgebraMap::new(ss.algebra(), target, matrix)?;
    Ok(SemisimplificationReport {
        even_dim: ss.even_dim(),
        odd_dim: ss.odd_dim(),
        jordan_type: jordan_type(&ss.d)?,
        skew: algebra::check_super_skew(ss.algebra()),
        homomorphism: algebra::verify_homomorphism(&map),
    })
}

/// Semisimplifies `F(n)` along `ad(e⊗1)` and checks the map
/// `class(Id⊗w) -> w`, `class(v⊗o) -> o` onto `W(1;n) + O_div`.
pub fn verify_frank_semisimplification(n: u32) -> Result<SemisimplificationReport> {
    let fr = frank::build_frank(n)?;
    let d = frank::frank_derivation(&fr);
    let ss = semisimplify(fr.algebra(), &d)?;
    let target = witt_contact::build_contact_presentation(n, false)?;
    let m = fr.block_len();
    let even: Vec<Vector> = (0..m).map(|i| fr.basis(Block::Id, i)).collect();
    let odd: Vec<Vector> = (0..m).map(|i| fr.basis(Block::V, i)).collect();
    identify_semisimplification(&ss, &target, &even, &odd)
}

/// A pair `(L, d)` summed blockwise.
pub fn direct_sum_pair(
    a: (&StructureAlgebra, &Gf3Matrix),
    b: (&StructureAlgebra, &Gf3Matrix),
) -> Result<(StructureAlgebra, Gf3Matrix)> {
    let l = a.0.direct_sum(b.0, format!("{} + {}", a.0.name(), b.0.name()))?;
    Ok((l, block_diag(a.1, b.1)))
}

/// Checks that semisimplification commutes with direct sums: the
/// semisimplification of `A ⊕ B` is isomorphic to that of `A` plus that of
/// `B`, through the map regrouping even and odd classes.
pub fn direct_sum_functoriality(
    a: (&StructureAlgebra, &Gf3Matrix),
    b: (&StructureAlgebra, &Gf3Matrix),
) -> Result<HomomorphismReport> {
    let ssa = semisimplify(a.0, a.1)?;
    let ssb = semisimplify(b.0, b.1)?;
    let (l, d) = direct_sum_pair(a, b)?;
    let ss = semisimplify(&l, &d)?;
    let sum = ssa.algebra().direct_sum(ssb.algebra(), "ss(A) + ss(B)")?;
    let (da, db) = (a.0.dim(), b.0.dim());
    let embed = |v: &[Gf3], first: bool| -> Vector {
        let mut out = linalg::zero_vector(da + db);
        let off = if first { 0 } else { da };
        out[off..off + v.len()].copy_from_slice(v);
        out
    };
    // Images in `ss` of the class basis of `ss(A) + ss(B)`, in its order.
    let mut cols = Vec::with_capacity(sum.dim());
    for (part, first) in [(&ssa, true), (&ssb, false)] {
        for k in 0..part.even_dim() {
            let c = ss.even_class(&embed(part.even.representative(k), first))?;
            cols.push([c, vec![Gf3::ZERO; ss.odd_dim()]].concat());
        }
        for k in 0..part.odd_dim() {
            let c = ss.odd_class(&embed(part.odd.representative(k), first))?;
            cols.push([vec![Gf3::ZERO; ss.even_dim()], c].concat());
        }
    }
    let matrix = Gf3Matrix::from_columns(ss.algebra().dim(), &cols)?;
    let map = LinearAlgebraMap::new(&sum, ss.algebra(), matrix)?;
    Ok(algebra::verify_homomorphism(&map))
}
