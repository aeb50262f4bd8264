//! Canonical text dumps of structure constants.
//!
//! ```text
//! # <name>
//! dim <d>
//! basis <i> <label> parity=<0|1> degree=<integer|->
//! [<label_i>, <label_j>] = <1|2> * <label_k>
//! ```
//!
//! Constant lines are sorted by `(label_i, label_j, label_k)` as strings. A
//! ternary product uses `<label_i, label_j, label_k> = c * label_l`.

use std::fmt::Write as _;

use gf3lie::algebra::StructureAlgebra;
use gf3lie::jternary::JTernaryAlgebra;

pub fn algebra_text(a: &StructureAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", a.name());
    let _ = writeln!(out, "dim {}", a.dim());
    for i in 0..a.dim() {
        let degree = a.degrees().map_or_else(|| "-".to_string(), |d| d[i].to_string());
        let _ = writeln!(out, "basis {} {} parity={} degree={}", i, a.label(i), a.parity()[i], degree);
    }
    let mut lines: Vec<(&str, &str, &str, u8)> = a
        .nonzero_constants()
        .map(|(i, j, k, c)| (a.label(i), a.label(j), a.label(k), c.value()))
        .collect();
    lines.sort_unstable();
    for (i, j, k, c) in lines {
        let _ = writeln!(out, "[{}, {}] = {} * {}", i, j, c, k);
    }
    out
}

pub fn jternary_text(x: &JTernaryAlgebra) -> String {
    let mut out = String::new();
    let d = x.dim();
    let labels = x.labels();
    let _ = writeln!(out, "# {}", x.name());
    let _ = writeln!(out, "dim {}", d);
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "basis {} {} parity=0 degree=-", i, l);
    }
    let mut lines = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for &(l, c) in x.constants(i, j, k) {
                    lines.push((&labels[i], &labels[j], &labels[k], &labels[l], c.value()));
                }
            }
        }
    }
    lines.sort_unstable();
    for (i, j, k, l, c) in lines {
        let _ = writeln!(out, "<{}, {}, {}> = {} * {}", i, j, k, c, l);
    }
    out
}

pub fn constant_lines(text: &str) -> usize {
    text.lines().filter(|l| l.starts_with('[') || l.starts_with('<')).count()
}

pub fn basis_lines(text: &str) -> usize {
    text.lines().filter(|l| l.starts_with("basis ")).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use gf3lie::witt_contact::build_witt;

    #[test]
    fn witt_one_dump() {
        let t = algebra_text(&build_witt(1).unwrap());
        assert_eq!(basis_lines(&t), 3);
        assert_eq!(constant_lines(&t), 6);
        assert!(t.contains("[x^(0)d, x^(1)d] = 1 * x^(0)d"));
    }
}
