//! The Frank algebra `F(n) = U ⊗ O_div ⊕ sl(U) ⊗ O ⊕ Id ⊗ W`.
//!
//! `U` has basis `(u, v)` with `λ(u, v) = 1`; `sl(U)` has basis
//! `e = E12`, `h = E11 - E22`, `f = E21`. Basis blocks of length `3^n`, in
//! order: `u⊗x^(i)`, `v⊗x^(i)` (odd), `e⊗x^(i)`, `h⊗x^(i)`, `f⊗x^(i)`,
//! `Id⊗x^(i)d` (even).
//!
//! `F(n)` is an ordinary Lie algebra: the stored super-parity is trivial and
//! the odd/even split of the blocks is a `Z/2`-grading kept alongside.
//!
//! Bracket table (`w, w'` in `W`; `s, t` in `sl(U)`; `a, b` in `U`):
//! - `[Id⊗w, Id⊗w'] = Id⊗[w, w']`
//! - `[Id⊗p d, s⊗g] = s⊗p d(g)`
//! - `[s⊗f, t⊗g] = [s, t]⊗fg`
//! - `[Id⊗p d, a⊗g] = a⊗d(pg)`
//! - `[s⊗f, a⊗g] = s(a)⊗fg`
//! - `[a⊗f, b⊗g] = φ(a, b)⊗(f d(g) - g d(f)) + Id⊗λ(a, b) fg d`
//!
//! with `φ(a, b)(c) = λ(a, c) b + λ(b, c) a`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{self, StructureAlgebra};
use crate::divided_power::DividedPowerAlgebra;
use crate::error::Result;
use crate::gf3::Gf3;
use crate::linalg::{self, Gf3Matrix, Vector};
use crate::rep_alpha3::{JordanType, RepAlpha3Object};
use crate::witt_contact::witt_bracket;

/// Blocks of the Frank basis, in storage order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    U,
    V,
    E,
    H,
    F,
    Id,
}

impl Block {
    pub const ALL: [Block; 6] = [Block::U, Block::V, Block::E, Block::H, Block::F, Block::Id];

    pub fn offset(self) -> usize {
        self as usize
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Block::U | Block::V)
    }

    /// Weight under the torus spanned by `h`.
    pub fn weight(self) -> i64 {
        match self {
            Block::U => 1,
            Block::V => -1,
            Block::E => 2,
            Block::H | Block::Id => 0,
            Block::F => -2,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Block::U => "u",
            Block::V => "v",
            Block::E => "e",
            Block::H => "h",
            Block::F => "f",
            Block::Id => "Id",
        }
    }
}

/// The symplectic form on `U`, coordinates in the basis `(u, v)`.
pub fn lambda(a: [Gf3; 2], b: [Gf3; 2]) -> Gf3 {
    a[0] * b[1] - a[1] * b[0]
}

/// `φ(a, b)` as a 2x2 matrix acting on columns in the basis `(u, v)`.
pub fn phi(a: [Gf3; 2], b: [Gf3; 2]) -> Gf3Matrix {
    let mut m = Gf3Matrix::zeros(2, 2);
    for (col, c) in [[Gf3::ONE, Gf3::ZERO], [Gf3::ZERO, Gf3::ONE]].into_iter().enumerate() {
        let la = lambda(a, c);
        let lb = lambda(b, c);
        for row in 0..2 {
            m[(row, col)] = la * b[row] + lb * a[row];
        }
    }
    m
}

pub const U_VEC: [Gf3; 2] = [Gf3::ONE, Gf3::ZERO];
pub const V_VEC: [Gf3; 2] = [Gf3::ZERO, Gf3::ONE];

/// The sl(U) basis `(e, h, f)` as matrices.
pub fn sl_basis() -> [Gf3Matrix; 3] {
    [
        Gf3Matrix::from_ints(&[&[0, 1], &[0, 0]]),
        Gf3Matrix::from_ints(&[&[1, 0], &[0, -1]]),
        Gf3Matrix::from_ints(&[&[0, 0], &[1, 0]]),
    ]
}

/// Coordinates of a trace-zero 2x2 matrix in `(e, h, f)`.
fn sl_coords(m: &Gf3Matrix) -> [Gf3; 3] {
    debug_assert_eq!(m[(0, 0)], -m[(1, 1)]);
    [m[(0, 1)], m[(0, 0)], m[(1, 0)]]
}

#[derive(Clone, Debug)]
pub struct FrankAlgebra {
    n: u32,
    o: DividedPowerAlgebra,
    algebra: StructureAlgebra,
}

impl FrankAlgebra {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> StructureAlgebra {
        self.algebra
    }

    pub fn o(&self) -> &DividedPowerAlgebra {
        &self.o
    }

    pub fn block_len(&self) -> usize {
        self.o.dim()
    }

    pub fn dim(&self) -> usize {
        6 * self.o.dim()
    }

    pub fn index(&self, block: Block, i: usize) -> usize {
        block.offset() * self.o.dim() + i
    }

    pub fn locate(&self, k: usize) -> (Block, usize) {
        (Block::ALL[k / self.o.dim()], k % self.o.dim())
    }

    /// `block ⊗ g` for `g` in `O`.
    pub fn element(&self, block: Block, g: &[Gf3]) -> Vector {
        let mut v = linalg::zero_vector(self.dim());
        let start = self.index(block, 0);
        v[start..start + self.o.dim()].copy_from_slice(g);
        v
    }

    pub fn basis(&self, block: Block, i: usize) -> Vector {
        linalg::unit_vector(self.dim(), self.index(block, i))
    }

    /// The `Z/2`-grading: 1 on `U⊗O`, 0 elsewhere.
    pub fn z2_degrees(&self) -> Vec<i64> {
        (0..self.dim()).map(|k| i64::from(self.locate(k).0.is_odd())).collect()
    }

    /// Torus weights per basis element.
    pub fn weights(&self) -> Vec<i64> {
        (0..self.dim()).map(|k| self.locate(k).0.weight()).collect()
    }
}

pub fn block_label(block: Block, i: usize) -> String {
    if block == Block::Id {
        format!("Id*x^({})d", i)
    } else {
        format!("{}*x^({})", block.prefix(), i)
    }
}

pub fn build_frank(n: u32) -> Result<FrankAlgebra> {
    let o = DividedPowerAlgebra::new(n)?;
    let m = o.dim();
    let dim = 6 * m;
    let labels = (0..dim).map(|k| block_label(Block::ALL[k / m], k % m)).collect();
    let parity = vec![0; dim];
    let sl = sl_basis();
    let u_coords = |b: Block| if b == Block::U { U_VEC } else { V_VEC };
    let sl_index = |b: Block| match b {
        Block::E => 0,
        Block::H => 1,
        _ => 2,
    };

    let product = |i: usize, j: usize| -> Vector {
        let (bi, p) = (Block::ALL[i / m], i % m);
        let (bj, q) = (Block::ALL[j / m], j % m);
        let (xp, xq) = (o.basis(p), o.basis(q));
        let mut out = linalg::zero_vector(dim);
        let mut put = |block: Block, coeff: Gf3, g: &[Gf3]| {
            let start = block.offset() * m;
            linalg::add_scaled(&mut out[start..start + m], g, coeff);
        };
        let sl_put = |put: &mut dyn FnMut(Block, Gf3, &[Gf3]), mat: &Gf3Matrix, g: &[Gf3]| {
            let c = sl_coords(mat);
            put(Block::E, c[0], g);
            put(Block::H, c[1], g);
            put(Block::F, c[2], g);
        };
        let u_put = |put: &mut dyn FnMut(Block, Gf3, &[Gf3]), vec: [Gf3; 2], g: &[Gf3]| {
            put(Block::U, vec[0], g);
            put(Block::V, vec[1], g);
        };
        let act_sl_on_u = |s: &Gf3Matrix, a: [Gf3; 2]| -> [Gf3; 2] {
            let r = s.mul_vec(&a);
            [r[0], r[1]]
        };
        use Block::*;
        match (bi, bj) {
            (Id, Id) => put(Id, Gf3::ONE, &witt_bracket(&o, &xp, &xq)),
            (Id, E | H | F) => put(bj, Gf3::ONE, &o.witt_action(&xp, &xq)),
            (E | H | F, Id) => put(bi, -Gf3::ONE, &o.witt_action(&xq, &xp)),
            (E | H | F, E | H | F) => {
                let comm = sl[sl_index(bi)].commutator(&sl[sl_index(bj)]);
                sl_put(&mut put, &comm, &o.multiply(&xp, &xq));
            }
            (Id, U | V) => put(bj, Gf3::ONE, &o.div_action(&xp, &xq)),
            (U | V, Id) => put(bi, -Gf3::ONE, &o.div_action(&xq, &xp)),
            (E | H | F, U | V) => {
                let image = act_sl_on_u(&sl[sl_index(bi)], u_coords(bj));
                u_put(&mut put, image, &o.multiply(&xp, &xq));
            }
            (U | V, E | H | F) => {
                let image = act_sl_on_u(&sl[sl_index(bj)], u_coords(bi));
                let neg: [Gf3; 2] = [-image[0], -image[1]];
                u_put(&mut put, neg, &o.multiply(&xq, &xp));
            }
            (U | V, U | V) => {
                let (a, b) = (u_coords(bi), u_coords(bj));
                sl_put(&mut put, &phi(a, b), &witt_bracket(&o, &xp, &xq));
                put(Id, lambda(a, b), &o.multiply(&xp, &xq));
            }
        }
        out
    };

    let algebra = StructureAlgebra::from_fn(format!("F({})", n), labels, parity, product)?;
    let weights = (0..dim).map(|k| Block::ALL[k / m].weight()).collect();
    let algebra = algebra.with_degrees(weights)?;
    Ok(FrankAlgebra { n, o, algebra })
}

/// `d = ad(e ⊗ 1)` with `e = E12`.
pub fn frank_derivation(frank: &FrankAlgebra) -> Gf3Matrix {
    frank.algebra.ad(&frank.basis(Block::E, 0))
}

pub fn frank_jordan_type(frank: &FrankAlgebra) -> Result<JordanType> {
    Ok(RepAlpha3Object::new(frank_derivation(frank))?.jordan_type())
}

/// The set of weights that actually occur.
pub fn weight_set(frank: &FrankAlgebra) -> Vec<i64> {
    let mut ws = frank.weights();
    ws.sort_unstable();
    ws.dedup();
    ws
}

/// `ad(x)^3 = 0` for every weight-2 basis element `x`.
pub fn weight_two_cubes_vanish(frank: &FrankAlgebra) -> bool {
    (0..frank.block_len()).all(|i| frank.algebra.ad(&frank.basis(Block::E, i)).pow(3).is_zero())
}

/// Check used to refute a wrong parity or weight assignment.
pub fn gradings_hold(frank: &FrankAlgebra) -> bool {
    algebra::check_grading_mod(&frank.algebra, &frank.z2_degrees(), 2).is_ok_and(|r| r.passed())
        && algebra::check_grading(&frank.algebra, &frank.weights()).is_ok_and(|r| r.passed())
}
