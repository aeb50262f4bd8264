//! Dense linear algebra over GF(3).
//!
//! Vectors are plain `Vec<Gf3>`. Matrices are dense and row-major. Every
//! subspace is stored by its reduced row echelon basis, which is unique, so
//! subspace equality is basis equality. Row reduction always picks the
//! leftmost available pivot.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul};

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf3::Gf3;

pub type Vector = Vec<Gf3>;

pub fn zero_vector(len: usize) -> Vector {
    vec![Gf3::ZERO; len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Gf3::ONE;
    v
}

pub fn is_zero(v: &[Gf3]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `dst += c * src`
#[inline]
pub fn add_scaled(dst: &mut [Gf3], src: &[Gf3], c: Gf3) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * *s;
    }
}

pub fn scaled(v: &[Gf3], c: Gf3) -> Vector {
    v.iter().map(|x| *x * c).collect()
}

pub fn sub(a: &[Gf3], b: &[Gf3]) -> Vector {
    a.iter().zip(b).map(|(x, y)| *x - *y).collect()
}

pub fn add(a: &[Gf3], b: &[Gf3]) -> Vector {
    a.iter().zip(b).map(|(x, y)| *x + *y).collect()
}

pub fn dot(a: &[Gf3], b: &[Gf3]) -> Gf3 {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

pub fn random_vector<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vector {
    (0..len).map(|_| Gf3::new(rng.gen_range(0..3))).collect()
}

/// Index of the first nonzero entry.
pub fn leading_index(v: &[Gf3]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf3Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf3>,
}

impl fmt::Debug for Gf3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf3Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for x in self.row(r) {
                write!(f, "{}", x)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Gf3Matrix {
    type Output = Gf3;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Gf3 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Gf3Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Gf3 {
        &mut self.data[r * self.cols + c]
    }
}

impl Gf3Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf3Matrix { rows, cols, data: vec![Gf3::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Gf3::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gf3) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Gf3Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Gf3Matrix { rows: rows.len(), cols, data })
    }

    /// Convenience for literals: entries are reduced modulo 3.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| Gf3::from_i64(rows[r][c]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns)?.transpose())
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(rows, cols, |_, _| Gf3::new(rng.gen_range(0..3)))
    }

    /// A uniformly random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Gf3] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Gf3] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Gf3]) {
        for (r, x) in v.iter().enumerate() {
            self[(r, c)] = *x;
        }
    }

    pub fn entries(&self) -> &[Gf3] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn scale(&self, c: Gf3) -> Self {
        Gf3Matrix { rows: self.rows, cols: self.cols, data: scaled(&self.data, c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Gf3Matrix { rows: self.rows, cols: self.cols, data: add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Gf3Matrix { rows: self.rows, cols: self.cols, data: sub(&self.data, &other.data) }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Self, c: Gf3) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        add_scaled(&mut self.data, &other.data, c);
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        let mut acc = vec![0u32; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self[(i, k)].value() as u32;
                if a == 0 {
                    continue;
                }
                for (slot, b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a * b.value() as u32;
                }
            }
            for (o, a) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = Gf3::new((*a % 3) as u8);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Gf3]) -> Vector {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Gf3]) -> Vector {
        assert_eq!(self.rows, v.len(), "vec_mul shape mismatch");
        let mut out = zero_vector(self.cols);
        for (r, c) in v.iter().enumerate() {
            add_scaled(&mut out, self.row(r), *c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.matmul(self);
        }
        out
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            self[(r / other.rows, c / other.cols)] * other[(r % other.rows, c % other.cols)]
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])])
    }

    /// Reduced row echelon form with leftmost pivots normalized to 1.
    pub fn row_reduce(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != rank {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, rank * m.cols + c);
                }
            }
            let inv = m[(rank, col)].inverse().unwrap();
            for x in m.row_mut(rank) {
                *x *= inv;
            }
            let pivot_row = m.row(rank).to_vec();
            for r in 0..m.rows {
                if r != rank {
                    let factor = m[(r, col)];
                    if !factor.is_zero() {
                        add_scaled(m.row_mut(r), &pivot_row, -factor);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        RowEchelon { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Right kernel `{x : Mx = 0}`.
    pub fn kernel(&self) -> Subspace {
        let ech = self.row_reduce();
        let mut is_pivot = vec![None; self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = zero_vector(self.cols);
            v[free] = Gf3::ONE;
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.matrix[(r, free)];
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning_matrix(&self.transpose())
    }

    /// Row space.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_spanning_matrix(self)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)]
            } else if c - n == r {
                Gf3::ONE
            } else {
                Gf3::ZERO
            }
        });
        let ech = aug.row_reduce();
        if ech.pivots.len() < n || ech.pivots[..n].iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(ech.matrix.select(&rows, &cols))
    }

    /// Least `k >= 1` with `M^k = 0`, if any (checked up to the dimension).
    pub fn nilpotency_index(&self) -> Option<u32> {
        assert!(self.is_square());
        let mut power = self.clone();
        for k in 1..=(self.rows as u32).max(1) {
            if power.is_zero() {
                return Some(k);
            }
            power = power.matmul(self);
        }
        None
    }
}

impl Mul for &Gf3Matrix {
    type Output = Gf3Matrix;
    fn mul(self, rhs: &Gf3Matrix) -> Gf3Matrix {
        self.matmul(rhs)
    }
}

#[derive(Clone, Debug)]
pub struct RowEchelon {
    /// Full reduced matrix, zero rows included at the bottom.
    pub matrix: Gf3Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A subspace of `GF(3)^ambient`, held by its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Gf3Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Gf3Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Gf3Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the rows of `m`.
    pub fn from_spanning_matrix(m: &Gf3Matrix) -> Self {
        let ech = m.row_reduce();
        let rows: Vec<usize> = (0..ech.rank).collect();
        let cols: Vec<usize> = (0..m.cols()).collect();
        Subspace { ambient: m.cols(), basis: ech.matrix.select(&rows, &cols), pivots: ech.pivots }
    }

    /// Panics if a vector has the wrong length; use [`Subspace::try_span`]
    /// for untrusted input.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        Self::try_span(ambient, vectors).expect("vector length must equal ambient dimension")
    }

    pub fn try_span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        Ok(Self::from_spanning_matrix(&Gf3Matrix::from_rows(ambient, vectors)?))
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vector> = axes.into_iter().map(|i| unit_vector(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Gf3Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Reduces `v` against the echelon basis; the residual is zero iff `v`
    /// lies in the subspace. Returns `(coordinates, residual)`.
    pub fn reduce(&self, v: &[Gf3]) -> (Vector, Vector) {
        let mut w = v.to_vec();
        let mut coords = zero_vector(self.dim());
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if !c.is_zero() {
                coords[r] = c;
                add_scaled(&mut w, self.basis.row(r), -c);
            }
        }
        (coords, w)
    }

    pub fn contains(&self, v: &[Gf3]) -> bool {
        v.len() == self.ambient && is_zero(&self.reduce(v).1)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Gf3]) -> Option<Vector> {
        let (c, res) = self.reduce(v);
        is_zero(&res).then_some(c)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Subspace::span(self.ambient, &vs))
    }

    /// Intersection by the Zassenhaus algorithm.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let rows = self.dim() + other.dim();
        let m = Gf3Matrix::from_fn(rows, 2 * n, |r, c| {
            if r < self.dim() {
                self.basis[(r, c % n)]
            } else if c < n {
                other.basis[(r - self.dim(), c)]
            } else {
                Gf3::ZERO
            }
        });
        let ech = m.row_reduce();
        let vs: Vec<Vector> = (0..ech.rank)
            .filter(|&r| ech.pivots[r] >= n)
            .map(|r| ech.matrix.row(r)[n..].to_vec())
            .collect();
        Ok(Subspace::span(n, &vs))
    }

    /// `{x : <y, x> = 0 for all y in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Gf3Matrix) -> Subspace {
        let vs: Vec<Vector> = (0..self.dim()).map(|r| m.mul_vec(self.basis.row(r))).collect();
        Subspace::span(m.rows(), &vs)
    }

    /// True if every operator maps the subspace into itself.
    pub fn is_invariant_under(&self, operators: &[Gf3Matrix]) -> bool {
        operators
            .iter()
            .all(|op| (0..self.dim()).all(|r| self.contains(&op.mul_vec(self.basis.row(r)))))
    }
}

/// Incrementally built echelon basis, kept fully reduced so insertion order
/// does not matter.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        EchelonBasis { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reduce(&self, v: &mut [Gf3]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                add_scaled(v, row, -c);
            }
        }
    }

    /// Inserts `v` if independent; returns the reduced, normalized vector that
    /// was added.
    pub fn insert(&mut self, v: &[Gf3]) -> Option<&Vector> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let p = leading_index(&w)?;
        let inv = w[p].inverse().unwrap();
        w.iter_mut().for_each(|x| *x *= inv);
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                add_scaled(row, &w, -c);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        self.rows.last()
    }

    pub fn contains(&self, v: &[Gf3]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(self.ambient, &self.rows)
    }
}

/// A sparse copy of a matrix for fast repeated matrix-vector products.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, Gf3)>>,
}

impl SparseMatrix {
    pub fn from_dense(m: &Gf3Matrix) -> Self {
        let entries = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c, *x))
                    .collect()
            })
            .collect();
        SparseMatrix { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_vec(&self, v: &[Gf3]) -> Vector {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&(c, x)| x * v[c]).sum())
            .collect()
    }

    /// Dense product `self * rhs`.
    pub fn mul_dense(&self, rhs: &Gf3Matrix) -> Gf3Matrix {
        let mut out = Gf3Matrix::zeros(self.rows, rhs.cols());
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, x) in row {
                add_scaled(out.row_mut(r), rhs.row(c), x);
            }
        }
        out
    }
}

/// A subspace taken modulo a smaller subspace, with chosen class
/// representatives and the coordinate projection onto them.
#[derive(Clone, Debug)]
pub struct SubquotientSpace {
    numerator: Subspace,
    denominator: Subspace,
    representatives: Gf3Matrix,
    // Rows: representatives followed by the denominator basis.
    combined: Gf3Matrix,
    // Columns on which `combined` restricts to an invertible square matrix,
    // and that inverse.
    probe_columns: Vec<usize>,
    probe_inverse: Gf3Matrix,
}

impl SubquotientSpace {
    /// Representatives are the echelon-basis vectors of the numerator whose
    /// pivots are not pivots of the denominator.
    pub fn new(numerator: &Subspace, denominator: &Subspace) -> Result<Self> {
        if numerator.ambient() != denominator.ambient() {
            return Err(Error::DimensionMismatch {
                expected: numerator.ambient(),
                found: denominator.ambient(),
            });
        }
        if !numerator.contains_subspace(denominator) {
            return Err(Error::NotASubspace("denominator is not contained in numerator".into()));
        }
        let reps: Vec<Vector> = numerator
            .pivots()
            .iter()
            .enumerate()
            .filter(|(_, p)| !denominator.pivots().contains(p))
            .map(|(r, _)| numerator.basis().row(r).to_vec())
            .collect();
        Self::with_representatives(numerator, denominator, &reps)
    }

    /// Uses caller-chosen representatives; they must complete the denominator
    /// to a basis of the numerator.
    pub fn with_representatives(
        numerator: &Subspace,
        denominator: &Subspace,
        representatives: &[Vector],
    ) -> Result<Self> {
        let n = numerator.ambient();
        if !numerator.contains_subspace(denominator) {
            return Err(Error::NotASubspace("denominator is not contained in numerator".into()));
        }
        let expected = numerator.dim() - denominator.dim();
        if representatives.len() != expected {
            return Err(Error::InvalidRepresentatives(alloc::format!(
                "expected {} representatives, got {}",
                expected,
                representatives.len()
            )));
        }
        if representatives.iter().any(|r| !numerator.contains(r)) {
            return Err(Error::InvalidRepresentatives("representative outside numerator".into()));
        }
        let mut rows = representatives.to_vec();
        rows.extend(denominator.basis_vectors());
        let combined = Gf3Matrix::from_rows(n, &rows)?;
        let probe_columns = numerator.pivots().to_vec();
        let all_rows: Vec<usize> = (0..combined.rows()).collect();
        let square = combined.select(&all_rows, &probe_columns);
        let probe_inverse = square.inverse().ok_or_else(|| {
            Error::InvalidRepresentatives("representatives are dependent modulo denominator".into())
        })?;
        let representatives = Gf3Matrix::from_rows(n, representatives)?;
        Ok(SubquotientSpace {
            numerator: numerator.clone(),
            denominator: denominator.clone(),
            representatives,
            combined,
            probe_columns,
            probe_inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.rows()
    }

    pub fn ambient(&self) -> usize {
        self.numerator.ambient()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    pub fn representatives(&self) -> &Gf3Matrix {
        &self.representatives
    }

    pub fn representative(&self, k: usize) -> &[Gf3] {
        self.representatives.row(k)
    }

    /// Coordinates of the class of `v` in the representative basis.
    pub fn project(&self, v: &[Gf3]) -> Result<Vector> {
        if v.len() != self.ambient() {
            return Err(Error::DimensionMismatch { expected: self.ambient(), found: v.len() });
        }
        let probe: Vector = self.probe_columns.iter().map(|&c| v[c]).collect();
        let coeffs = self.probe_inverse.vec_mul(&probe);
        if self.combined.vec_mul(&coeffs) != v {
            return Err(Error::ProjectionUndefined);
        }
        Ok(coeffs[..self.dim()].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gf3::from_i64(x)).collect()
    }

    #[test]
    fn row_reduce_examples() {
        let z = Gf3Matrix::zeros(3, 4).row_reduce();
        assert_eq!(z.rank, 0);
        let id = Gf3Matrix::identity(3).row_reduce();
        assert_eq!(id.rank, 3);
        assert_eq!(id.pivots, [0, 1, 2]);
        let m = Gf3Matrix::from_ints(&[&[1, 2], &[2, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Gf3Matrix::identity(3).kernel().is_zero());
        let k = Gf3Matrix::from_ints(&[&[0, 1], &[0, 0]]).kernel();
        assert_eq!(k, Subspace::span(2, &[v(&[1, 0])]));
    }

    #[test]
    fn intersect_with_self() {
        let u = Subspace::span(4, &[v(&[1, 2, 0, 1]), v(&[0, 1, 1, 0])]);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert!(u.intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..8 {
            let m = Gf3Matrix::random_invertible(n, &mut rng);
            let inv = m.inverse().unwrap();
            assert_eq!(m.matmul(&inv), Gf3Matrix::identity(n));
        }
        assert!(Gf3Matrix::from_ints(&[&[1, 2], &[2, 1]]).inverse().is_none());
    }

    #[test]
    fn subquotient_examples() {
        let full = Subspace::full(2);
        let q = SubquotientSpace::new(&full, &full).unwrap();
        assert_eq!(q.dim(), 0);

        let q = SubquotientSpace::new(&full, &Subspace::zero(2)).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&v(&[2, 1])).unwrap(), v(&[2, 1]));

        let num = Subspace::coordinate(3, [0, 1]);
        let den = Subspace::coordinate(3, [1]);
        let q = SubquotientSpace::new(&num, &den).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.representative(0), &v(&[1, 0, 0])[..]);
        assert_eq!(q.project(&v(&[1, 0, 0])).unwrap(), v(&[1]));
        assert_eq!(q.project(&v(&[0, 2, 0])).unwrap(), v(&[0]));
        assert_eq!(q.project(&v(&[0, 0, 1])), Err(Error::ProjectionUndefined));
    }

    #[test]
    fn subquotient_rejects_non_inclusion() {
        let num = Subspace::coordinate(3, [0]);
        let den = Subspace::coordinate(3, [1]);
        assert!(matches!(SubquotientSpace::new(&num, &den), Err(Error::NotASubspace(_))));
    }

    #[test]
    fn subquotient_custom_representatives() {
        let num = Subspace::coordinate(3, [0, 1]);
        let den = Subspace::coordinate(3, [1]);
        let q = SubquotientSpace::with_representatives(&num, &den, &[v(&[1, 2, 0])]).unwrap();
        assert_eq!(q.project(&v(&[2, 0, 0])).unwrap(), v(&[2]));
        assert!(SubquotientSpace::with_representatives(&num, &den, &[v(&[0, 1, 0])]).is_err());
    }

    #[test]
    fn nilpotency() {
        let n = Gf3Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(n.nilpotency_index(), Some(3));
        assert_eq!(Gf3Matrix::zeros(2, 2).nilpotency_index(), Some(1));
        assert_eq!(Gf3Matrix::identity(2).nilpotency_index(), None);
    }

    #[test]
    fn echelon_basis_insert_order_irrelevant() {
        let vs = [v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 2, 1])];
        let mut a = EchelonBasis::new(3);
        let mut b = EchelonBasis::new(3);
        for x in &vs {
            a.insert(x);
        }
        for x in vs.iter().rev() {
            b.insert(x);
        }
        assert_eq!(a.to_subspace(), b.to_subspace());
        assert_eq!(a.dim(), 2);
    }
}
