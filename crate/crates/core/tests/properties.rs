use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gf3lie::algebra::{verify_homomorphism, LinearAlgebraMap, StructureAlgebra};
use gf3lie::divided_power::DividedPowerAlgebra;
use gf3lie::error::Error;
use gf3lie::gf3::Gf3;
use gf3lie::linalg::{self, Gf3Matrix, SparseMatrix, Subspace, SubquotientSpace, Vector};
use gf3lie::meataxe::{spin_up, MeatAxe};
use gf3lie::rep_alpha3::RepAlpha3Object;
use gf3lie::witt_contact::build_witt;

fn gf3() -> impl Strategy<Value = Gf3> {
    (0u8..3).prop_map(Gf3::new)
}

fn vector(len: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(gf3(), len)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf3Matrix> {
    vector(rows * cols).prop_map(move |v| Gf3Matrix::from_fn(rows, cols, |r, c| v[r * cols + c]))
}

fn sized_matrix() -> impl Strategy<Value = Gf3Matrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))
}

fn vectors(count: usize, len: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector(len), 0..=count)
}

fn all_vectors(dim: usize) -> impl Iterator<Item = Vector> {
    (0..3usize.pow(dim as u32))
        .map(move |code| (0..dim).map(|i| Gf3::new(((code / 3usize.pow(i as u32)) % 3) as u8)).collect())
}

/// Irreducible iff every nonzero vector spins up to the whole space.
fn brute_force_irreducible(ops: &[Gf3Matrix], dim: usize) -> bool {
    let sparse: Vec<SparseMatrix> = ops.iter().map(SparseMatrix::from_dense).collect();
    all_vectors(dim).filter(|v| !linalg::is_zero(v)).all(|v| spin_up(&sparse, &[v], dim).is_full())
}

proptest! {
    #[test]
    fn field_axioms(a in gf3(), b in gf3(), c in gf3()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a - a, Gf3::ZERO);
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a * inv, Gf3::ONE);
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn rank_of_transpose(m in sized_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn kernel_size_by_enumeration(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let killed = all_vectors(m.cols()).filter(|v| linalg::is_zero(&m.mul_vec(v))).count();
        prop_assert_eq!(killed, 3usize.pow(m.kernel().dim() as u32));
    }

    #[test]
    fn dimension_formula(u in vectors(4, 6), v in vectors(4, 6)) {
        let (u, v) = (Subspace::span(6, &u), Subspace::span(6, &v));
        let cap = u.intersect(&v).unwrap();
        let sum = u.sum(&v).unwrap();
        prop_assert_eq!(cap.dim() + sum.dim(), u.dim() + v.dim());
        prop_assert!(u.contains_subspace(&cap) && v.contains_subspace(&cap));
    }

    #[test]
    fn intersection_by_enumeration(u in vectors(3, 4), v in vectors(3, 4)) {
        let (u, v) = (Subspace::span(4, &u), Subspace::span(4, &v));
        let common = all_vectors(4).filter(|x| u.contains(x) && v.contains(x)).count();
        prop_assert_eq!(common, 3usize.pow(u.intersect(&v).unwrap().dim() as u32));
    }

    #[test]
    fn subquotient_projection(num in vectors(5, 7), den_pick in vector(5), shift in vector(5)) {
        let num = Subspace::span(7, &num);
        let basis = num.basis_vectors();
        let den_vecs: Vec<Vector> = basis.iter().zip(&den_pick).filter(|(_, c)| !c.is_zero()).map(|(b, _)| b.clone()).collect();
        let den = Subspace::span(7, &den_vecs);
        let q = SubquotientSpace::new(&num, &den).unwrap();
        prop_assert_eq!(q.dim(), num.dim() - den.dim());
        for k in 0..q.dim() {
            let mut r = q.representative(k).to_vec();
            prop_assert_eq!(q.project(&r).unwrap(), linalg::unit_vector(q.dim(), k));
            for (b, c) in den.basis_vectors().iter().zip(&shift) {
                linalg::add_scaled(&mut r, b, *c);
            }
            prop_assert_eq!(q.project(&r).unwrap(), linalg::unit_vector(q.dim(), k));
        }
        if !num.is_full() {
            let outside = (0..7).map(|i| linalg::unit_vector(7, i)).find(|e| !num.contains(e)).unwrap();
            prop_assert_eq!(q.project(&outside), Err(Error::ProjectionUndefined));
        }
    }

    #[test]
    fn meataxe_agrees_with_brute_force(ops in (1usize..4, 1usize..3).prop_flat_map(|(d, k)| prop::collection::vec(matrix(d, d), k)), seed in 0u64..1000) {
        let dim = ops[0].rows();
        let truth = brute_force_irreducible(&ops, dim);
        match MeatAxe::with_seed(seed).is_irreducible(&ops, dim) {
            Ok(verdict) => {
                prop_assert_eq!(verdict.is_irreducible(), truth);
                if let Some(w) = verdict.witness() {
                    prop_assert!(!w.is_zero() && !w.is_full() && w.is_invariant_under(&ops));
                }
            }
            Err(Error::RetriesExhausted { .. }) => prop_assert!(truth),
            Err(e) => prop_assert!(false, "unexpected error {:?}", e),
        }
    }

    #[test]
    fn meataxe_invariant_under_conjugation(ops in prop::collection::vec(matrix(4, 4), 1..3), seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Gf3Matrix::random_invertible(4, &mut rng);
        let pi = p.inverse().unwrap();
        let conj: Vec<Gf3Matrix> = ops.iter().map(|m| pi.matmul(m).matmul(&p)).collect();
        let ma = MeatAxe::with_seed(seed);
        if let (Ok(a), Ok(b)) = (ma.is_irreducible(&ops, 4), ma.is_irreducible(&conj, 4)) {
            prop_assert_eq!(a.is_irreducible(), b.is_irreducible());
        }
    }

    #[test]
    fn transported_witt_algebra(seed in 0u64..500, n in 1u32..3) {
        // Transport W along a random basis change P; P is then an isomorphism
        // and composing with its inverse gives the identity.
        let w = build_witt(n).unwrap();
        let d = w.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Gf3Matrix::random_invertible(d, &mut rng);
        let pi = p.inverse().unwrap();
        let moved = StructureAlgebra::from_fn("W^P", w.labels().to_vec(), vec![0; d], |i, j| {
            pi.mul_vec(&w.bracket(&p.column(i), &p.column(j)).unwrap())
        }).unwrap();
        let there = LinearAlgebraMap::new(&moved, &w, p.clone()).unwrap();
        let back = LinearAlgebraMap::new(&w, &moved, pi.clone()).unwrap();
        prop_assert!(verify_homomorphism(&there).is_isomorphism());
        prop_assert!(verify_homomorphism(&back).is_isomorphism());
        let round = back.compose(&there).unwrap();
        prop_assert_eq!(&round.matrix, &Gf3Matrix::identity(d));
    }

    #[test]
    fn divided_powers_commutative_associative(n in 1u32..3, seed in 0u64..1000) {
        let o = DividedPowerAlgebra::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (linalg::random_vector(o.dim(), &mut rng), linalg::random_vector(o.dim(), &mut rng), linalg::random_vector(o.dim(), &mut rng));
        prop_assert_eq!(o.multiply(&f, &g), o.multiply(&g, &f));
        prop_assert_eq!(o.multiply(&o.multiply(&f, &g), &h), o.multiply(&f, &o.multiply(&g, &h)));
        // d is a derivation
        let lhs = o.partial(&o.multiply(&f, &g));
        let rhs = linalg::add(&o.multiply(&o.partial(&f), &g), &o.multiply(&f, &o.partial(&g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn div_action_is_a_module(n in 1u32..3, seed in 0u64..1000) {
        let o = DividedPowerAlgebra::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g, h) = (linalg::random_vector(o.dim(), &mut rng), linalg::random_vector(o.dim(), &mut rng), linalg::random_vector(o.dim(), &mut rng));
        let lhs = linalg::sub(&o.div_action(&f, &o.div_action(&g, &h)), &o.div_action(&g, &o.div_action(&f, &h)));
        let fg = gf3lie::witt_contact::witt_bracket(&o, &f, &g);
        prop_assert_eq!(lhs, o.div_action(&fg, &h));
    }

    #[test]
    fn jordan_type_additive(a in 1usize..4, b in 1usize..4, k in 0usize..3) {
        let x = RepAlpha3Object::block(a).unwrap().direct_sum(&RepAlpha3Object::trivial(k));
        let y = RepAlpha3Object::block(b).unwrap();
        prop_assert_eq!(x.direct_sum(&y).jordan_type(), x.jordan_type() + y.jordan_type());
    }
}
