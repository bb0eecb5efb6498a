//! The binomial matrices M(n; a): construction, closed-form determinant,
//! an independent elimination-based determinant, and exact linear solves.
//!
//! The closed formula and the elimination routine cross-validate each other
//! in the test sweeps; neither is derived from the other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{binomial_in, Coefficient, ExactRat, FieldTag};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum MatrixError {
    #[error("index set must be strictly increasing and positive")]
    BadIndexSet,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: matrix is {0}x{0}, rhs has length {1}")]
    DimensionMismatch(usize, usize),
}

/// A strictly increasing set a_1 < a_2 < ... < a_e of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    a: Vec<u64>,
}

impl IndexSet {
    pub fn new(a: Vec<u64>) -> Result<IndexSet, MatrixError> {
        if a.is_empty() || a[0] == 0 || a.windows(2).any(|w| w[0] >= w[1]) {
            return Err(MatrixError::BadIndexSet);
        }
        Ok(IndexSet { a })
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn values(&self) -> &[u64] {
        &self.a
    }

    pub fn max(&self) -> u64 {
        *self.a.last().unwrap()
    }
}

/// Square matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: Vec<Vec<Coefficient>>,
    tag: FieldTag,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<Coefficient>>, tag: FieldTag) -> ExactMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        assert!(rows.iter().flatten().all(|c| c.tag() == tag));
        ExactMatrix { rows, tag }
    }

    pub fn identity(n: usize, tag: FieldTag) -> ExactMatrix {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Coefficient::one(tag) } else { Coefficient::zero(tag) })
                    .collect()
            })
            .collect();
        ExactMatrix { rows, tag }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Coefficient {
        &self.rows[i][j]
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }
}

/// M(n; a) with entry (i, j) = C(n, a_i - (j-1)), indices 1-based, using the
/// zero convention for out-of-range binomials.
pub fn build_matrix(n: u64, a: &IndexSet) -> ExactMatrix {
    let e = a.size();
    let rows = (0..e)
        .map(|i| {
            (0..e)
                .map(|j| binomial_in(n, a.values()[i] as i64 - j as i64, FieldTag::Char0))
                .collect()
        })
        .collect();
    ExactMatrix { rows, tag: FieldTag::Char0 }
}

/// det M(n; a) by the closed formula: the Vandermonde factor of a times the
/// falling factorials (n+e-i)(n+e-i-1)...(n+e-a_i), divided by prod a_i!.
pub fn det_closed_form(n: u64, a: &IndexSet) -> ExactRat {
    let e = a.size() as i64;
    let n = n as i64;
    let mut num = BigInt::one();
    for (i, &ai) in a.values().iter().enumerate() {
        for (j, &aj) in a.values().iter().enumerate().skip(i + 1) {
            debug_assert!(j > i);
            num *= BigInt::from(aj - ai);
        }
    }
    for (i0, &ai) in a.values().iter().enumerate() {
        let i = i0 as i64 + 1;
        let top = n + e - i;
        let bottom = n + e - ai as i64;
        // a_i >= i always, so top >= bottom; a_i = i gives the single factor
        let mut f = bottom;
        while f <= top {
            num *= BigInt::from(f);
            f += 1;
        }
    }
    let mut den = BigInt::one();
    for &ai in a.values() {
        for f in 1..=ai {
            den *= BigInt::from(f);
        }
    }
    BigRational::new(num, den)
}

/// Exact determinant by elimination, independent of the closed formula.
/// Integer matrices over Q go through fraction-free Bareiss elimination;
/// everything else uses ordinary Gaussian elimination over the field.
pub fn det_bruteforce(m: &ExactMatrix) -> Coefficient {
    if m.dim() == 0 {
        return Coefficient::one(m.tag);
    }
    if m.tag == FieldTag::Char0 {
        if let Some(int_rows) = integer_rows(m) {
            return Coefficient::Rat(ExactRat::from(det_bareiss(int_rows)));
        }
    }
    det_gauss(m)
}

fn integer_rows(m: &ExactMatrix) -> Option<Vec<Vec<BigInt>>> {
    m.rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| {
                    let r = c.as_rat()?;
                    if r.denom().is_one() {
                        Some(r.numer().clone())
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 { -d } else { d }
}

fn det_gauss(m: &ExactMatrix) -> Coefficient {
    let n = m.dim();
    let tag = m.tag;
    let mut rows = m.rows.clone();
    let mut det = Coefficient::one(tag);
    for k in 0..n {
        let pivot_row = match (k..n).find(|&r| !rows[r][k].is_zero()) {
            Some(r) => r,
            None => return Coefficient::zero(tag),
        };
        if pivot_row != k {
            rows.swap(k, pivot_row);
            det = det.neg();
        }
        let pivot = rows[k][k].clone();
        det = det.mul(&pivot);
        let pinv = pivot.inv().expect("pivot is nonzero");
        for i in k + 1..n {
            let factor = rows[i][k].mul(&pinv);
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let v = rows[i][j].sub(&factor.mul(&rows[k][j]));
                rows[i][j] = v;
            }
        }
    }
    det
}

/// True iff det M(n; a) != 0. Whenever n + e - a_e > 0 this must hold.
pub fn is_regular_matrix(n: u64, a: &IndexSet) -> bool {
    !det_closed_form(n, a).is_zero()
}

/// Exact solution of M x = rhs by Gaussian elimination over the field.
pub fn solve_linear(m: &ExactMatrix, rhs: &[Coefficient]) -> Result<Vec<Coefficient>, MatrixError> {
    let n = m.dim();
    if rhs.len() != n {
        return Err(MatrixError::DimensionMismatch(n, rhs.len()));
    }
    let mut rows: Vec<Vec<Coefficient>> = m
        .rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !rows[r][k].is_zero())
            .ok_or(MatrixError::Singular)?;
        rows.swap(k, pivot_row);
        let pinv = rows[k][k].inv().expect("pivot is nonzero");
        for j in k..=n {
            rows[k][j] = rows[k][j].mul(&pinv);
        }
        for i in 0..n {
            if i == k || rows[i][k].is_zero() {
                continue;
            }
            let factor = rows[i][k].clone();
            for j in k..=n {
                let v = rows[i][j].sub(&factor.mul(&rows[k][j]));
                rows[i][j] = v;
            }
        }
    }
    Ok(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Basis of the right kernel of a rectangular system, by reduced row
/// echelon form over the field. Rows may be empty (no constraints).
pub fn nullspace(rows: &[Vec<Coefficient>], ncols: usize, tag: FieldTag) -> Vec<Vec<Coefficient>> {
    let mut m: Vec<Vec<Coefficient>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        if r >= m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for j in c..ncols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let v = m[i][j].sub(&f.mul(&m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for fc in 0..ncols {
        if pivot_cols.contains(&fc) {
            continue;
        }
        let mut v = vec![Coefficient::zero(tag); ncols];
        v[fc] = Coefficient::one(tag);
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = m[ri][fc].neg();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Coefficient {
        Coefficient::from_int(v, FieldTag::Char0)
    }

    fn rat(n: i64, d: i64) -> Coefficient {
        Coefficient::Rat(ExactRat::new(BigInt::from(n), BigInt::from(d)))
    }

    fn idx(a: &[u64]) -> IndexSet {
        IndexSet::new(a.to_vec()).unwrap()
    }

    #[test]
    fn build_matrix_examples() {
        let m = build_matrix(1, &idx(&[1]));
        assert_eq!(m.entry(0, 0), &q(1));

        let m = build_matrix(3, &idx(&[1, 2]));
        assert_eq!(m.entry(0, 0), &q(3));
        assert_eq!(m.entry(0, 1), &q(1));
        assert_eq!(m.entry(1, 0), &q(3));
        assert_eq!(m.entry(1, 1), &q(3));

        // zero convention: entries with a_i-(j-1) < 0 or > n vanish
        let m = build_matrix(2, &idx(&[3, 4]));
        assert_eq!(m.entry(0, 0), &q(0));
        assert_eq!(m.entry(0, 1), &q(1));
        assert_eq!(m.entry(1, 0), &q(0));
        assert_eq!(m.entry(1, 1), &q(0));
    }

    #[test]
    fn det_closed_form_examples() {
        assert_eq!(det_closed_form(3, &idx(&[1, 2])), ExactRat::from(BigInt::from(6)));
        assert_eq!(det_closed_form(1, &idx(&[1])), ExactRat::one());
        assert!(det_closed_form(2, &idx(&[3, 4])).is_zero());
    }

    #[test]
    fn det_bruteforce_examples() {
        assert_eq!(det_bruteforce(&ExactMatrix::identity(3, FieldTag::Char0)), q(1));
        let m = build_matrix(3, &idx(&[1, 2]));
        assert_eq!(det_bruteforce(&m), q(6));
        let z = ExactMatrix::from_rows(
            vec![vec![q(0), q(0)], vec![q(0), q(0)]],
            FieldTag::Char0,
        );
        assert_eq!(det_bruteforce(&z), q(0));
    }

    #[test]
    fn det_gauss_matches_bareiss_on_rational_entries() {
        let m = ExactMatrix::from_rows(
            vec![
                vec![rat(1, 2), rat(1, 3)],
                vec![rat(1, 5), rat(2, 7)],
            ],
            FieldTag::Char0,
        );
        // 1/2*2/7 - 1/3*1/5 = 1/7 - 1/15 = 8/105
        assert_eq!(det_bruteforce(&m), rat(8, 105));
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular_matrix(3, &idx(&[1, 2])));
        assert!(!is_regular_matrix(2, &idx(&[3, 4])));
    }

    #[test]
    fn regularity_guarantee_sweep() {
        for n in 0..=10u64 {
            for a in sweep_index_sets(3, 8) {
                let e = a.size() as i64;
                if n as i64 + e - a.max() as i64 > 0 {
                    assert!(is_regular_matrix(n, &a), "n={} a={:?}", n, a.values());
                    assert!(!det_bruteforce(&build_matrix(n, &a)).is_zero());
                }
            }
        }
    }

    #[test]
    fn closed_form_equals_bruteforce_small_sweep() {
        for n in 0..=8u64 {
            for a in sweep_index_sets(3, 6) {
                let cf = det_closed_form(n, &a);
                let bf = det_bruteforce(&build_matrix(n, &a));
                assert_eq!(Coefficient::Rat(cf), bf, "n={} a={:?}", n, a.values());
            }
        }
    }

    pub(crate) fn sweep_index_sets(max_e: usize, max_a: u64) -> Vec<IndexSet> {
        let mut out = Vec::new();
        fn rec(cur: &mut Vec<u64>, start: u64, max_e: usize, max_a: u64, out: &mut Vec<IndexSet>) {
            if !cur.is_empty() {
                out.push(IndexSet::new(cur.clone()).unwrap());
            }
            if cur.len() == max_e {
                return;
            }
            for v in start..=max_a {
                cur.push(v);
                rec(cur, v + 1, max_e, max_a, out);
                cur.pop();
            }
        }
        rec(&mut Vec::new(), 1, max_e, max_a, &mut out);
        out
    }

    #[test]
    fn solve_linear_examples() {
        let id = ExactMatrix::identity(3, FieldTag::Char0);
        let rhs = vec![q(4), q(-2), q(9)];
        assert_eq!(solve_linear(&id, &rhs).unwrap(), rhs);

        let m = build_matrix(3, &idx(&[1, 2]));
        let x = solve_linear(&m, &[q(0), q(1)]).unwrap();
        assert_eq!(x, vec![rat(-1, 6), rat(1, 2)]);

        let z = build_matrix(2, &idx(&[3, 4]));
        assert_eq!(solve_linear(&z, &[q(0), q(1)]), Err(MatrixError::Singular));
    }

    #[test]
    fn solve_substitution_check() {
        let m = build_matrix(6, &idx(&[1, 3, 4, 6]));
        let rhs = vec![q(1), q(-2), q(0), q(5)];
        let x = solve_linear(&m, &rhs).unwrap();
        for i in 0..4 {
            let mut acc = Coefficient::zero(FieldTag::Char0);
            for j in 0..4 {
                acc = acc.add(&m.entry(i, j).mul(&x[j]));
            }
            assert_eq!(acc, rhs[i]);
        }
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(vec![]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
        assert!(IndexSet::new(vec![2, 2]).is_err());
        assert!(IndexSet::new(vec![3, 1]).is_err());
    }

    #[test]
    fn nullspace_basic() {
        // x + y + z = 0 over Q: kernel dimension 2, and every basis vector
        // satisfies the equation
        let rows = vec![vec![q(1), q(1), q(1)]];
        let ker = nullspace(&rows, 3, FieldTag::Char0);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s = v.iter().fold(Coefficient::zero(FieldTag::Char0), |a, b| a.add(b));
            assert!(s.is_zero());
        }
        // no constraints: full space
        assert_eq!(nullspace(&[], 4, FieldTag::Char0).len(), 4);
        // full rank: trivial kernel
        let rows = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert!(nullspace(&rows, 2, FieldTag::Char0).is_empty());
    }

    #[test]
    fn binomial_convention_in_entries() {
        // entries outside [0, n] are zero
        let a = idx(&[5, 6, 7]);
        let m = build_matrix(2, &a);
        for i in 0..3 {
            for j in 0..3usize {
                let k = a.values()[i] as i64 - j as i64;
                if k < 0 || k > 2 {
                    assert!(m.entry(i, j).is_zero());
                }
            }
        }
        let _ = crate::arith::binomial(2, -1);
    }
}
