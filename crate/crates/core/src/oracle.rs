//! Brute-force verifiers. They are slow on purpose and avoid the code paths
//! they check: the monomial colon is searched exhaustively, and free ranks
//! are recomputed on the dual side by Gaussian elimination over F_p.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::finvariants::{frobenius_colon, q_for, RingPresentation};
use crate::monomial::{minimalize, MonomialIdeal};
use crate::polyring::{Coeff, Monomial, PrimeField};

/// Largest dense coordinate space `dual_rank_aq` will build.
pub const MAX_COORDINATES: u128 = 1 << 22;

/// Row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrixFp {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<Coeff>,
}

impl DenseMatrixFp {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, field.reduce(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Coeff {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.entries[i * self.cols + j] = v % self.field.p();
    }

    /// Rank by forward elimination on a copy.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(a[rank * cols + col]);
            for j in col..cols {
                a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
            }
            for r in rank + 1..rows {
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = f.mul(factor, a[rank * cols + j]);
                    a[r * cols + j] = f.sub(a[r * cols + j], sub);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Incremental row echelon form over sparse rows. Every stored row has its
/// pivot as its smallest column with coefficient 1.
struct SparseEchelon {
    field: PrimeField,
    pivots: HashMap<usize, Vec<(usize, Coeff)>>,
}

impl SparseEchelon {
    fn new(field: PrimeField) -> Self {
        Self {
            field,
            pivots: HashMap::new(),
        }
    }

    fn insert(&mut self, row: Vec<(usize, Coeff)>) {
        let f = self.field;
        let mut row: std::collections::BTreeMap<usize, Coeff> =
            row.into_iter().filter(|(_, c)| *c != 0).collect();
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .map(|(&c, &v)| (c, v))
                .find(|(c, _)| self.pivots.contains_key(c));
            let Some((col, val)) = next else { break };
            for &(j, pv) in &self.pivots[&col] {
                let e = row.entry(j).or_insert(0);
                *e = f.sub(*e, f.mul(val, pv));
                if *e == 0 {
                    row.remove(&j);
                }
            }
            cursor = col + 1;
        }
        let Some((&lead, &lv)) = row.iter().next() else {
            return;
        };
        let inv = f.inv(lv);
        let normalized = row.into_iter().map(|(j, v)| (j, f.mul(v, inv))).collect();
        self.pivots.insert(lead, normalized);
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn divisible_by_any(m: &[u64], gens: &[Vec<u64>]) -> bool {
    gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
}

/// Exhaustive `(J : I)` over the box `[0, cap]^n`. Correct whenever `cap`
/// is at least the largest exponent of `J`'s generators, since every
/// generator of the colon divides an lcm of generators of `J`.
pub fn brute_mono_colon(j: &MonomialIdeal, i: &MonomialIdeal, cap: u64) -> Result<MonomialIdeal> {
    let n = j.nvars();
    let needed = j
        .min_gens()
        .iter()
        .flat_map(|g| g.exponents().iter().copied())
        .max()
        .unwrap_or(0);
    if cap < needed {
        return Err(Error::BoxTooSmall { cap, needed });
    }
    let jg: Vec<Vec<u64>> = j.min_gens().iter().map(|g| g.exponents().to_vec()).collect();
    let ig: Vec<Vec<u64>> = i.min_gens().iter().map(|g| g.exponents().to_vec()).collect();
    let mut found: Vec<Vec<u64>> = Vec::new();
    let mut point = vec![0u64; n];
    'walk: loop {
        let ok = ig.iter().all(|u| {
            let prod: Vec<u64> = point.iter().zip(u).map(|(a, b)| a + b).collect();
            divisible_by_any(&prod, &jg)
        });
        if ok && !divisible_by_any(&point, &found) {
            found.retain(|f| !f.iter().zip(&point).all(|(a, b)| b <= a));
            found.push(point.clone());
        }
        for k in (0..n).rev() {
            point[k] += 1;
            if point[k] <= cap {
                continue 'walk;
            }
            point[k] = 0;
        }
        break;
    }
    Ok(minimalize(
        n,
        found.iter().map(|e| Monomial::from_exponents(e)).collect(),
    ))
}

/// `a_q` from the dual side: the F_p-dimension of
/// `((I^{[q]}:I) + m^{[q]}) / m^{[q]}`, as the rank of the span of `g·μ`
/// truncated to the box of exponents `< q`.
pub fn dual_rank_aq(r: &RingPresentation, e: u32) -> Result<u64> {
    let q = q_for(r.p() as u64, e)?;
    let n = r.nvars();
    let coords = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if coords > MAX_COORDINATES {
        return Err(Error::TooManyCoordinates(coords));
    }
    let coords = coords as usize;
    let colon = frobenius_colon(r, e)?;
    let field = r.ring().field();
    let index = |m: &[u64]| -> Option<usize> {
        let mut idx = 0usize;
        for &x in m {
            if x >= q {
                return None;
            }
            idx = idx * q as usize + x as usize;
        }
        Some(idx)
    };
    let gens = colon.gb();
    let mut rows: Vec<Vec<(usize, Coeff)>> = Vec::new();
    let mut mu = vec![0u64; n];
    for g in gens {
        'box_walk: loop {
            let row: Vec<(usize, Coeff)> = g
                .terms()
                .iter()
                .filter_map(|(m, c)| {
                    let shifted: Vec<u64> = m.exponents().iter().zip(&mu).map(|(a, b)| a + b).collect();
                    index(&shifted).map(|i| (i, *c))
                })
                .collect();
            if !row.is_empty() {
                rows.push(row);
            }
            for k in (0..n).rev() {
                mu[k] += 1;
                if mu[k] < q {
                    continue 'box_walk;
                }
                mu[k] = 0;
            }
            break;
        }
    }
    if (rows.len() as u128) * (coords as u128) <= 1 << 20 {
        let mut dense = DenseMatrixFp::zeros(field, rows.len(), coords);
        for (i, row) in rows.iter().enumerate() {
            for &(j, c) in row {
                let cur = dense.get(i, j);
                dense.set(i, j, field.add(cur, c));
            }
        }
        return Ok(dense.rank() as u64);
    }
    let mut ech = SparseEchelon::new(field);
    for mut row in rows {
        row.sort_unstable_by_key(|t| t.0);
        ech.insert(row);
    }
    Ok(ech.rank() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        minimalize(n, gens.iter().map(|e| Monomial::from_exponents(e)).collect())
    }

    #[test]
    fn brute_colon_examples() {
        let j = ideal(2, &[&[3, 0], &[0, 3]]);
        assert_eq!(
            brute_mono_colon(&j, &ideal(2, &[&[1, 1]]), 4).unwrap(),
            ideal(2, &[&[2, 0], &[0, 2]])
        );
        assert_eq!(brute_mono_colon(&j, &MonomialIdeal::unit(2), 4).unwrap(), j);
        let j3 = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert_eq!(
            brute_mono_colon(&j3, &ideal(3, &[&[2, 2, 0]]), 4).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 3]])
        );
        assert!(matches!(
            brute_mono_colon(&j3, &MonomialIdeal::unit(3), 2),
            Err(Error::BoxTooSmall { cap: 2, needed: 3 })
        ));
        assert!(brute_mono_colon(&j, &MonomialIdeal::zero(2), 3)
            .unwrap()
            .is_unit());
    }

    #[test]
    fn dense_rank() {
        let f = PrimeField::new(3).unwrap();
        let m = DenseMatrixFp::from_rows(f, 3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]);
        // second row = 2 * first row mod 3
        assert_eq!(m.rank(), 2);
        let f5 = PrimeField::new(5).unwrap();
        let m = DenseMatrixFp::from_rows(f5, 3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]);
        assert_eq!(m.rank(), 3);
        assert_eq!(DenseMatrixFp::zeros(f5, 2, 2).rank(), 0);
    }

    #[test]
    fn sparse_echelon_matches_dense() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let f = PrimeField::new(3).unwrap();
        for _ in 0..50 {
            let (rows, cols) = (rng.gen_range(1..8), rng.gen_range(1..8));
            let data: Vec<Vec<u64>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..3) } else { 0 })
                        .collect()
                })
                .collect();
            let dense = DenseMatrixFp::from_rows(f, cols, &data);
            let mut ech = SparseEchelon::new(f);
            for r in &data {
                ech.insert(
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(j, &v)| (j, v as Coeff))
                        .collect(),
                );
            }
            assert_eq!(ech.rank(), dense.rank());
        }
    }
}
