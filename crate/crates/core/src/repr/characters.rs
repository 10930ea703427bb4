//! Character tables by joint diagonalization of the class-sum operators
//! (Burnside–Dixon over the complex numbers).
//!
//! Convolution by a class sum acts on class functions, commutes with every
//! other such operator and has its adjoint in the family (the inverse
//! class). In an orthonormal basis of class functions a random real
//! combination of the Hermitian and anti-Hermitian parts is therefore a
//! single Hermitian matrix whose eigenvectors are the irreducible
//! characters, up to normalization.

use std::cmp::Ordering;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{hermitian_eigen, phase, root_of_unity, CMatrix, ZERO};

const MAX_ATTEMPTS: usize = 8;
const SEED: u64 = 0x00c1_a55e;

/// Irreducible characters of a finite group, one row per irrep label.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `chars[j][c]` is the character of irrep `j` on class `c`.
    pub chars: Vec<Vec<C64>>,
    pub dims: Vec<usize>,
}

impl CharacterTable {
    pub fn num_irreps(&self) -> usize {
        self.dims.len()
    }

    /// χ_j(g)
    pub fn value(&self, j: usize, g: usize) -> C64 {
        self.chars[j][self.class_of[g]]
    }

    /// Largest deviation of `Σ_c |c| χ_j(c) χ_k(c)*` from `N δ_jk`.
    pub fn row_orthogonality_residual(&self) -> f64 {
        let n: usize = self.classes.iter().map(Vec::len).sum();
        let mut worst: f64 = 0.0;
        for (j, row_j) in self.chars.iter().enumerate() {
            for (k, row_k) in self.chars.iter().enumerate() {
                let s: C64 = self
                    .classes
                    .iter()
                    .zip(row_j.iter().zip(row_k))
                    .map(|(c, (a, b))| a * b.conj() * c.len() as f64)
                    .sum();
                let expect = if j == k { n as f64 } else { 0.0 };
                worst = worst.max((s - expect).norm());
            }
        }
        worst
    }
}

/// Computes the character table of `group`. Row 0 is the trivial character;
/// the remaining rows are sorted by dimension and then lexicographically by
/// their values over the classes in class order, each value compared by
/// phase in `[0, 2π)` and then modulus.
pub fn character_table(group: &GroupTable) -> Result<CharacterTable> {
    let n = group.order();
    let classes = group.conjugacy_classes();
    let k = classes.len();
    let mut class_of = vec![0; n];
    for (c, members) in classes.iter().enumerate() {
        for &x in members {
            class_of[x] = c;
        }
    }

    // Convolution by class sum r in the value basis:
    // (T_r f)(t) = Σ_{y ∈ C_r} f(t y⁻¹)
    // and then in the orthonormal basis e_s = √(N/|C_s|) 1_{C_s}.
    let weight: Vec<f64> = classes.iter().map(|c| (c.len() as f64 / n as f64).sqrt()).collect();
    let operators: Vec<CMatrix> = classes
        .iter()
        .map(|members| {
            let mut m = DMatrix::from_element(k, k, ZERO);
            for (t, reps) in classes.iter().enumerate() {
                let rep = reps[0];
                for &y in members {
                    let s = class_of[group.mul(rep, group.inv(y))];
                    m[(t, s)] += C64::new(weight[t] / weight[s], 0.0);
                }
            }
            m
        })
        .collect();

    let i = C64::new(0.0, 1.0);
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + attempt as u64);
        let mut h = DMatrix::from_element(k, k, ZERO);
        for a in &operators {
            let alpha: f64 = rng.random_range(-1.0..1.0);
            let beta: f64 = rng.random_range(-1.0..1.0);
            let adj = a.adjoint();
            h += (a + &adj).scale(alpha) + (a - &adj) * (i * beta);
        }
        let (values, vectors) = hermitian_eigen(&h);
        let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if values.windows(2).any(|w| w[1] - w[0] < 1e-7 * scale) {
            continue;
        }

        let mut rows = Vec::with_capacity(k);
        let mut dims = Vec::with_capacity(k);
        let mut ok = true;
        for col in vectors.column_iter() {
            let at_e = col[0];
            let unit = at_e.conj() / at_e.norm();
            let row: Vec<C64> = (0..k).map(|s| col[s] * unit / weight[s]).collect();
            let dim = row[0].re.round();
            if dim < 1.0 || (row[0].re - dim).abs() > 1e-6 {
                ok = false;
                break;
            }
            dims.push(dim as usize);
            rows.push(row);
        }
        if !ok || dims.iter().map(|d| d * d).sum::<usize>() != n {
            continue;
        }

        // linear characters take root-of-unity values; make them exact
        for (row, &dim) in rows.iter_mut().zip(&dims) {
            if dim == 1 {
                for (s, value) in row.iter_mut().enumerate() {
                    let ord = group.element_order(classes[s][0]);
                    let turns = phase(*value, 1e-9) * ord as f64 / std::f64::consts::TAU;
                    *value = root_of_unity(turns.round() as usize, ord);
                }
            }
        }

        let mut order: Vec<usize> = (0..k).collect();
        let keys: Vec<Vec<(i64, i64)>> = rows.iter().map(|r| row_key(r)).collect();
        let is_trivial = |j: usize| dims[j] == 1 && rows[j].iter().all(|v| (v - 1.0).norm() < 1e-9);
        order.sort_by(|&a, &b| match (is_trivial(a), is_trivial(b)) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => dims[a].cmp(&dims[b]).then_with(|| keys[a].cmp(&keys[b])),
        });

        return Ok(CharacterTable {
            chars: order.iter().map(|&j| rows[j].clone()).collect(),
            dims: order.iter().map(|&j| dims[j]).collect(),
            classes,
            class_of,
        });
    }
    Err(Error::DegenerateEigenproblem(MAX_ATTEMPTS))
}

fn row_key(row: &[C64]) -> Vec<(i64, i64)> {
    row.iter()
        .map(|&v| {
            if v.norm() < 1e-7 {
                (0, 0)
            } else {
                ((phase(v, 1e-9) * 1e6).round() as i64, (v.norm() * 1e6).round() as i64)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn f21() -> GroupTable {
        build_group(&GroupSpec::semidirect(
            GroupSpec::cyclic(7),
            GroupSpec::cyclic(3),
            vec![0, 2, 4, 6, 1, 3, 5],
        ))
        .unwrap()
    }

    #[test]
    fn trivial_group() {
        let t = character_table(&build_group(&GroupSpec::cyclic(1)).unwrap()).unwrap();
        assert_eq!(t.dims, vec![1]);
        assert_eq!(t.chars, vec![vec![C64::new(1.0, 0.0)]]);
    }

    #[test]
    fn cyclic_three_labels_follow_root_of_unity_formula() {
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        let t = character_table(&g).unwrap();
        for j in 0..3 {
            for x in 0..3 {
                assert!((t.value(j, x) - root_of_unity(j * x, 3)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn cyclic_labels_general() {
        for n in [5usize, 7, 9, 15] {
            let g = build_group(&GroupSpec::cyclic(n)).unwrap();
            let t = character_table(&g).unwrap();
            for j in 0..n {
                for x in 0..n {
                    assert!((t.value(j, x) - root_of_unity(j * x, n)).norm() < 1e-15, "C{n} j={j} x={x}");
                }
            }
        }
    }

    #[test]
    fn f21_dimensions_and_orthogonality() {
        let t = character_table(&f21()).unwrap();
        assert_eq!(t.dims, vec![1, 1, 1, 3, 3]);
        assert!(t.row_orthogonality_residual() < 1e-10);
        assert!(t.chars[0].iter().all(|v| (v - 1.0).norm() < 1e-15));
    }

    #[test]
    fn column_orthogonality() {
        // Σ_j χ_j(a) χ_j(b)* = δ_ab N / |C_a|
        let g = f21();
        let t = character_table(&g).unwrap();
        for a in 0..t.classes.len() {
            for b in 0..t.classes.len() {
                let s: C64 = (0..t.num_irreps()).map(|j| t.chars[j][a] * t.chars[j][b].conj()).sum();
                let expect = if a == b { 21.0 / t.classes[a].len() as f64 } else { 0.0 };
                assert!((s - expect).norm() < 1e-10);
            }
        }
    }
}
