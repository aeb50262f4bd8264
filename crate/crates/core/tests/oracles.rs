//! Independent oracles for derived values.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gf3lie::divided_power::DividedPowerAlgebra;
use gf3lie::gf3::{binom_mod3, Gf3};
use gf3lie::linalg::{self, Gf3Matrix, Vector};
use gf3lie::rep_alpha3::{jordan_type, JordanType, RepAlpha3Object};
use gf3lie::witt_contact::{build_witt, witt_bracket};

/// Pascal's triangle over the integers, reduced mod 3 only at the end.
fn pascal(rows: usize) -> Vec<Vec<BigUint>> {
    let mut t: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u32)]];
    for i in 1..=rows {
        let prev = &t[i - 1];
        let mut row = vec![BigUint::from(1u32); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        t.push(row);
    }
    t
}

fn mod3(x: &BigUint) -> Gf3 {
    let r = x % BigUint::from(3u32);
    Gf3::new(r.to_u32_digits().first().copied().unwrap_or(0) as u8)
}

#[test]
fn lucas_binomials_match_pascal() {
    let t = pascal(100);
    for (i, row) in t.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            assert_eq!(binom_mod3(i as u64, j as u64), mod3(c), "C({}, {})", i, j);
        }
        assert_eq!(binom_mod3(i as u64, i as u64 + 1), Gf3::ZERO);
    }
}

#[test]
fn divided_power_constants_match_integer_binomials() {
    let t = pascal(60);
    for n in 1..=3 {
        let o = DividedPowerAlgebra::new(n).unwrap();
        let d = o.dim();
        for i in 0..d {
            for j in 0..d {
                let expected = if i + j < d {
                    linalg::scaled(&o.basis(i + j), mod3(&t[i + j][i]))
                } else {
                    linalg::zero_vector(d)
                };
                assert_eq!(o.dp_multiply(i, j).unwrap(), expected);
            }
        }
    }
}

/// `W(1;n)` acts faithfully on `O` by `f d`, so its bracket is the commutator
/// of the operators `M_f ∘ D`.
#[test]
fn witt_bracket_matches_operator_commutators() {
    for n in 1..=2 {
        let o = DividedPowerAlgebra::new(n).unwrap();
        let w = build_witt(n).unwrap();
        let op = |f: &[Gf3]| o.mult_matrix(f).matmul(&o.partial_matrix());
        for i in 0..o.dim() {
            for j in 0..o.dim() {
                let (f, g) = (o.basis(i), o.basis(j));
                let comm = op(&f).commutator(&op(&g));
                assert_eq!(op(&witt_bracket(&o, &f, &g)), comm);
                assert_eq!(op(&w.product_basis(i, j)), comm);
            }
        }
    }
}

fn conjugated_blocks(sizes: &[usize], rng: &mut ChaCha8Rng) -> Gf3Matrix {
    let dim: usize = sizes.iter().sum();
    let mut f = Gf3Matrix::zeros(dim, dim);
    let mut off = 0;
    for &s in sizes {
        for k in 1..s {
            f[(off + k, off + k - 1)] = Gf3::ONE;
        }
        off += s;
    }
    let p = Gf3Matrix::random_invertible(dim, rng);
    p.matmul(&f).matmul(&p.inverse().unwrap())
}

/// Random 12-dimensional cube-zero matrices built as conjugates of a known
/// block-diagonal canonical form.
#[test]
fn jordan_type_matches_canonical_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let mut sizes = Vec::new();
        let mut left = 12;
        while left > 0 {
            let s = rng.gen_range(1..=left.min(3));
            sizes.push(s);
            left -= s;
        }
        let count = |k| sizes.iter().filter(|&&s| s == k).count();
        let f = conjugated_blocks(&sizes, &mut rng);
        let expected = JordanType { m1: count(1), m2: count(2), m3: count(3) };
        assert_eq!(jordan_type(&f).unwrap(), expected);

        // Spin-up of a vector outside ker f² has dimension three when there is a 3-block.
        if expected.m3 > 0 {
            let f2 = f.pow(2);
            let v = (0..12).map(|i| linalg::unit_vector(12, i)).find(|v| !linalg::is_zero(&f2.mul_vec(v))).unwrap();
            let orbit: Vec<Vector> = vec![v.clone(), f.mul_vec(&v), f2.mul_vec(&v)];
            assert_eq!(Gf3Matrix::from_rows(12, &orbit).unwrap().rank(), 3);
        }
    }
}

#[test]
fn tensor_of_blocks_by_brute_force_kernel_counts() {
    // The number of vectors killed by f is 3^(m1 + m2 + m3).
    for a in 1..=3 {
        for b in 1..=3 {
            let t = RepAlpha3Object::block(a).unwrap().tensor(&RepAlpha3Object::block(b).unwrap()).unwrap();
            let jt = t.jordan_type();
            let dim = t.dim();
            let killed = (0..3usize.pow(dim as u32))
                .filter(|code| {
                    let v: Vector = (0..dim).map(|i| Gf3::new(((code / 3usize.pow(i as u32)) % 3) as u8)).collect();
                    linalg::is_zero(&t.f().mul_vec(&v))
                })
                .count();
            assert_eq!(killed, 3usize.pow((jt.m1 + jt.m2 + jt.m3) as u32), "({}) ⊗ ({})", a, b);
            assert_eq!(jt.dim(), a * b);
        }
    }
}
