//! Dense exact linear algebra: row echelon forms, rank, kernels, inverses.
//!
//! Prime fields go through a `u64` kernel that postpones modular reduction
//! while the accumulated value provably fits in 64 bits.

use crate::field::Field;

/// Row-reduced basis of a row space.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<E> {
    /// Pivot rows (leading entry 1), in increasing pivot column order.
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Echelon form over `GF(p)`. With `reduced`, entries above pivots are cleared too.
pub fn echelon_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64, reduced: bool) -> Echelon<u64> {
    let max_acc = u64::MAX / ((p - 1) * (p - 1)).max(1);
    // pivot rows sorted by pivot column; `order[k]` indexes into `basis`
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut row in rows.drain(..) {
        debug_assert_eq!(row.len(), ncols);
        let mut pending = 0u64;
        for (k, &pc) in pivots.iter().enumerate() {
            let c = row[pc] % p;
            if c == 0 {
                row[pc] = 0;
                continue;
            }
            if pending + 1 >= max_acc {
                for x in row.iter_mut() {
                    *x %= p;
                }
                pending = 0;
            }
            let f = p - c;
            let prow = &basis[k];
            for j in pc..ncols {
                row[j] += f * prow[j];
            }
            pending += 1;
        }
        for x in row.iter_mut() {
            *x %= p;
        }
        let Some(lead) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        let inv = inv_mod(row[lead], p);
        for x in row[lead..].iter_mut() {
            *x = *x * inv % p;
        }
        let at = pivots.partition_point(|&c| c < lead);
        pivots.insert(at, lead);
        basis.insert(at, row);
    }
    if reduced {
        back_substitute_mod_p(&mut basis, &pivots, p);
    }
    Echelon {
        rows: basis,
        pivots,
        ncols,
    }
}

fn back_substitute_mod_p(basis: &mut [Vec<u64>], pivots: &[usize], p: u64) {
    for k in (0..basis.len()).rev() {
        let (upper, lower) = basis.split_at_mut(k);
        let prow = &lower[0];
        let pc = pivots[k];
        for row in upper.iter_mut() {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            let f = p - c;
            for j in pc..row.len() {
                row[j] = (row[j] + f * prow[j]) % p;
            }
        }
    }
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn echelon_generic<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize, reduced: bool) -> Echelon<F::Elem> {
    let mut basis: Vec<Vec<F::Elem>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut row in rows {
        for (k, &pc) in pivots.iter().enumerate() {
            if field.is_zero(&row[pc]) {
                continue;
            }
            let c = row[pc].clone();
            let prow = &basis[k];
            for j in pc..ncols {
                if !field.is_zero(&prow[j]) {
                    field.sub_mul_assign(&mut row[j], &c, &prow[j]);
                }
            }
        }
        let Some(lead) = row.iter().position(|x| !field.is_zero(x)) else {
            continue;
        };
        let inv = field.inv(&row[lead]).expect("nonzero");
        for x in row[lead..].iter_mut() {
            if !field.is_zero(x) {
                *x = field.mul(x, &inv);
            }
        }
        let at = pivots.partition_point(|&c| c < lead);
        pivots.insert(at, lead);
        basis.insert(at, row);
    }
    if reduced {
        for k in (0..basis.len()).rev() {
            let (upper, lower) = basis.split_at_mut(k);
            let prow = &lower[0];
            let pc = pivots[k];
            for row in upper.iter_mut() {
                if field.is_zero(&row[pc]) {
                    continue;
                }
                let c = row[pc].clone();
                for j in pc..ncols {
                    if !field.is_zero(&prow[j]) {
                        field.sub_mul_assign(&mut row[j], &c, &prow[j]);
                    }
                }
            }
        }
    }
    Echelon {
        rows: basis,
        pivots,
        ncols,
    }
}

/// Echelon form of the row space spanned by `rows` (each of length `ncols`).
pub fn echelon<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize, reduced: bool) -> Echelon<F::Elem> {
    if let Some(p) = field.modulus() {
        let rows64 = rows
            .into_iter()
            .map(|r| r.iter().map(|x| field.to_u64(x).expect("prime field")).collect())
            .collect();
        let e = echelon_mod_p(rows64, ncols, p, reduced);
        return Echelon {
            rows: e
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| field.from_u64(x)).collect())
                .collect(),
            pivots: e.pivots,
            ncols,
        };
    }
    echelon_generic(field, rows, ncols, reduced)
}

pub fn rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> usize {
    echelon(field, rows, ncols, false).rank()
}

/// Basis of `{ x : A x = 0 }` for the `m x n` matrix with the given rows.
pub fn kernel<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let e = echelon(field, rows, ncols, true);
    let mut is_pivot = vec![false; ncols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &pc) in e.rows.iter().zip(&e.pivots) {
            if !field.is_zero(&row[free]) {
                v[pc] = field.neg(&row[free]);
            }
        }
        out.push(v);
    }
    out
}

/// Determinant by elimination.
pub fn determinant<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    let mut det = field.one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !field.is_zero(&m[r][c])) else {
            return field.zero();
        };
        if r != c {
            m.swap(r, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("nonzero pivot");
        for r in c + 1..n {
            if field.is_zero(&m[r][c]) {
                continue;
            }
            let f = field.mul(&m[r][c], &inv);
            for j in c..n {
                let t = m[c][j].clone();
                field.sub_mul_assign(&mut m[r][j], &f, &t);
            }
        }
    }
    det
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let e = echelon(field, rows, 2 * n, true);
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = field.zero();
                    for k in 0..inner {
                        acc = field.add(&acc, &field.mul(&row[k], &b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn kernel_of_small_rational_matrix() {
        let q = Rationals;
        let rows = vec![
            vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)],
            vec![q.from_i64(2), q.from_i64(4), q.from_i64(6)],
        ];
        let k = kernel(&q, rows.clone(), 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &rows {
                let dot = r.iter().zip(v).fold(q.zero(), |acc, (a, b)| q.add(&acc, &q.mul(a, b)));
                assert!(q.is_zero(&dot));
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        let m = vec![vec![2, 3, 0], vec![1, 0, 5], vec![7, 7, 7]];
        let inv = inverse(&f, &m).unwrap();
        let prod = mat_mul(&f, &m, &inv);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { 1 } else { 0 });
            }
        }
        assert!(inverse(&f, &[vec![1, 2], vec![2, 4]]).is_none());
        assert_eq!(determinant(&f, vec![vec![1, 2], vec![2, 4]]), 0);
    }

    proptest! {
        #[test]
        fn fast_and_generic_paths_agree(entries in proptest::collection::vec(0u32..7, 20)) {
            let f = PrimeField::new(7).unwrap();
            let rows: Vec<Vec<u32>> = entries.chunks(5).map(|c| c.to_vec()).collect();
            let fast = echelon(&f, rows.clone(), 5, true);
            let slow = echelon_generic(&f, rows, 5, true);
            prop_assert_eq!(fast, slow);
        }
    }
}
