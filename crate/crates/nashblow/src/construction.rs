//! The constructive machinery behind the regularity criterion: echelon
//! algebra bases h_i, the homogeneous pieces f_{n,j} and their sum f_n, the
//! first-order deformation coefficient g_n, symbolic-power membership, and
//! an independent deformation-space oracle.
//!
//! Everything here runs over Q; the criterion this module certifies is a
//! characteristic-0 statement.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{
    divide_by_binomial_power, substitute_y_zero, y_linear_coefficient, ArithError, BivariatePoly,
    Coefficient, FieldTag, TruncatedSeries,
};
use crate::binom_matrix::{build_matrix, nullspace, solve_linear, IndexSet, MatrixError};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ConstructionError {
    #[error("truncation order too small: need at least {0}")]
    TruncationTooSmall(u32),
    #[error("generator must be nonzero with positive order")]
    BadGenerator,
    #[error("construction did not terminate within j_max = {0}")]
    NonTermination(u32),
    #[error("degree bound too small: verdicts at {0} and {1} disagree")]
    DegreeBoundTooSmall(u32, u32),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// The normalized standard basis {h_i : i in S, i <= trunc} of a curve
/// algebra R inside k[[x]], satisfying the four echelon conditions:
/// h_0 = 1; h_i monic of order i for i in S; h_i absent for gaps; and
/// h_{i,j} = 0 whenever j > 0 and i + j in S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    basis: BTreeMap<u64, TruncatedSeries>,
    trunc: u32,
}

impl EchelonBasis {
    /// The basis of a monomial algebra: h_i = x^i for i in S.
    pub fn monomial(s: &NumericalSemigroup, trunc: u32) -> EchelonBasis {
        let mut basis = BTreeMap::new();
        for i in 0..=trunc as u64 {
            if s.contains(i as i64) {
                basis.insert(
                    i,
                    TruncatedSeries::monomial(i as u32, Coefficient::one(FieldTag::Char0), trunc),
                );
            }
        }
        EchelonBasis { basis, trunc }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn h(&self, i: u64) -> Option<&TruncatedSeries> {
        self.basis.get(&i)
    }

    /// h_{i,j}: the coefficient of x^{i+j} in h_i; 0 when i is a gap.
    pub fn h_coeff(&self, i: u64, j: u32) -> Coefficient {
        match self.basis.get(&i) {
            Some(h) => h.coefficient(i as u32 + j),
            None => Coefficient::zero(FieldTag::Char0),
        }
    }

    /// Remainder of `series` under reduction against the basis, truncated at
    /// the basis truncation. The remainder is supported on gaps of S; it is
    /// zero exactly when the series lies in R modulo x^{trunc+1}.
    pub fn reduce(&self, series: &TruncatedSeries, s: &NumericalSemigroup) -> TruncatedSeries {
        let mut r = series.truncate(self.trunc);
        let mut rem = TruncatedSeries::zero(self.trunc, FieldTag::Char0);
        while let Some(d) = r.ord() {
            let c = r.leading_coefficient().unwrap().clone();
            if s.contains(d as i64) {
                let h = self.basis.get(&(d as u64)).expect("pivot for semigroup element");
                r = r.sub(&h.scale(&c)).expect("same field");
            } else {
                rem.set(d, c);
                r.set(d, Coefficient::zero(FieldTag::Char0));
            }
        }
        rem
    }

    pub fn contains(&self, series: &TruncatedSeries, s: &NumericalSemigroup) -> bool {
        self.reduce(series, s).is_zero()
    }
}

/// A curve algebra R given either by its value semigroup (monomial case) or
/// by explicit series generators with a working truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraPresentation {
    Monomial(NumericalSemigroup),
    General {
        /// sparse generator polynomials: (degree, coefficient) pairs
        gens: Vec<Vec<(u32, Coefficient)>>,
        trunc: u32,
    },
}

impl AlgebraPresentation {
    pub fn is_monomial(&self) -> bool {
        matches!(self, AlgebraPresentation::Monomial(_))
    }

    /// The value semigroup and normalized echelon basis, with basis
    /// truncation at least `min_trunc`.
    pub fn semigroup_and_basis(
        &self,
        min_trunc: u32,
    ) -> Result<(NumericalSemigroup, EchelonBasis), ConstructionError> {
        match self {
            AlgebraPresentation::Monomial(s) => {
                Ok((s.clone(), EchelonBasis::monomial(s, min_trunc)))
            }
            AlgebraPresentation::General { gens, trunc } => {
                let n = (*trunc).max(min_trunc);
                let series: Vec<TruncatedSeries> = gens
                    .iter()
                    .map(|g| {
                        TruncatedSeries::from_coeffs(FieldTag::Char0, n, g.iter().cloned())
                    })
                    .collect();
                compute_value_semigroup(&series, n)
            }
        }
    }
}

/// Computes the value semigroup of the subalgebra generated by `gens` and
/// its normalized echelon basis, working modulo x^{N+1}.
///
/// Monomials in the generators span the algebra up to any finite order;
/// Gaussian elimination by leading order yields pivots whose orders form
/// the value set, which is then validated as a numerical semigroup within
/// the truncation.
pub fn compute_value_semigroup(
    gens: &[TruncatedSeries],
    n: u32,
) -> Result<(NumericalSemigroup, EchelonBasis), ConstructionError> {
    if gens.is_empty() {
        return Err(ConstructionError::BadGenerator);
    }
    let gens: Vec<TruncatedSeries> = gens.iter().map(|g| g.truncate(n)).collect();
    for g in &gens {
        match g.ord() {
            Some(d) if d > 0 => {}
            _ => return Err(ConstructionError::BadGenerator),
        }
    }

    // all monomials in the generators with order <= N
    let one = TruncatedSeries::monomial(0, Coefficient::one(FieldTag::Char0), n);
    let mut pool: Vec<TruncatedSeries> = Vec::new();
    fn expand(
        cur: &TruncatedSeries,
        from: usize,
        gens: &[TruncatedSeries],
        pool: &mut Vec<TruncatedSeries>,
    ) {
        pool.push(cur.clone());
        for (k, g) in gens.iter().enumerate().skip(from) {
            let next = cur.mul(g).expect("same field");
            if next.ord().is_some() {
                expand(&next, k, gens, pool);
            }
        }
    }
    expand(&one, 0, &gens, &mut pool);
    pool.sort_by_key(|s| s.ord().unwrap_or(u32::MAX));

    // echelon reduction by leading order
    let mut pivots: BTreeMap<u64, TruncatedSeries> = BTreeMap::new();
    for mut cand in pool {
        while let Some(d) = cand.ord() {
            match pivots.get(&(d as u64)) {
                Some(p) => {
                    let c = cand.leading_coefficient().unwrap().clone();
                    cand = cand.sub(&p.scale(&c)).expect("same field");
                }
                None => {
                    let inv = cand.leading_coefficient().unwrap().inv().expect("nonzero lead");
                    pivots.insert(d as u64, cand.scale(&inv));
                    break;
                }
            }
        }
    }

    let elements: Vec<u64> = pivots.keys().copied().collect();
    let s = NumericalSemigroup::from_elements(&elements, n as u64).map_err(|e| match e {
        SemigroupError::NotCofinite(_) => ConstructionError::TruncationTooSmall(n + 1),
        other => ConstructionError::Semigroup(other),
    })?;

    // normalize to the four h-conditions: clear tail coefficients sitting at
    // semigroup exponents
    let keys: Vec<u64> = pivots.keys().copied().collect();
    for &i in &keys {
        loop {
            let target = {
                let h = &pivots[&i];
                h.coeffs()
                    .find(|&(&d, _)| d as u64 > i && s.contains(d as i64))
                    .map(|(&d, c)| (d, c.clone()))
            };
            match target {
                Some((d, c)) => {
                    let hd = pivots[&(d as u64)].clone();
                    let hi = pivots.get_mut(&i).unwrap();
                    *hi = hi.sub(&hd.scale(&c)).expect("same field");
                }
                None => break,
            }
        }
    }

    Ok((s, EchelonBasis { basis: pivots, trunc: n }))
}

/// The index data attached to (S, n, j) that shapes each linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSets {
    /// gaps: t < s_n for j = 0, t <= s_n + j for j >= 1
    pub t_set: Vec<u64>,
    /// {s_n} for j = 0; {s_0, ..., s_m} for j >= 1
    pub s_set: Vec<u64>,
    /// sorted union of the two
    pub u_set: Vec<u64>,
    /// m = l_n + j - #t_set, defined for j >= 1
    pub m: Option<u64>,
}

pub fn index_sets(s: &NumericalSemigroup, n: u64, j: u32) -> IndexSets {
    let s_n = s.nth_element(n as i64);
    if j == 0 {
        let t_set: Vec<u64> = s.gaps().iter().copied().filter(|&t| t < s_n).collect();
        let mut u_set = t_set.clone();
        u_set.push(s_n);
        IndexSets { t_set, s_set: vec![s_n], u_set, m: None }
    } else {
        let bound = s_n + j as u64;
        let t_set: Vec<u64> = s.gaps().iter().copied().filter(|&t| t <= bound).collect();
        let l_n = s.l_n(n);
        // at most j gaps lie in (s_n, s_n + j], so m >= 0
        let m = l_n + j as u64 - t_set.len() as u64;
        let s_set: Vec<u64> = (0..=m as i64).map(|k| s.nth_element(k)).collect();
        let mut u_set: Vec<u64> = t_set.iter().chain(s_set.iter()).copied().collect();
        u_set.sort_unstable();
        IndexSets { t_set, s_set, u_set, m: Some(m) }
    }
}

/// The base piece f_{n,0}: homogeneous of degree s_n, exactly divisible by
/// (x+y)^{n+1}, with vanishing coefficients at the gap positions x^t y^{s_n-t}
/// and coefficient 1 at x^{s_n}.
pub fn build_f_n0(s: &NumericalSemigroup, n: u64) -> Result<BivariatePoly, ConstructionError> {
    let idx = index_sets(s, n, 0);
    let l_n = s.l_n(n);
    let u = IndexSet::new(idx.u_set)?;
    let m = build_matrix(n + 1, &u);
    let e = u.size();
    let mut rhs = vec![Coefficient::zero(FieldTag::Char0); e];
    rhs[e - 1] = Coefficient::one(FieldTag::Char0);
    let r = solve_linear(&m, &rhs)?;
    let mut q = BivariatePoly::zero(FieldTag::Char0);
    for (c, rc) in r.into_iter().enumerate() {
        q = q.add(&BivariatePoly::monomial(c as u32, l_n as u32 - c as u32, rc))?;
    }
    let factor = BivariatePoly::xy_binomial_power(n as u32 + 1, FieldTag::Char0);
    Ok(q.mul(&factor)?)
}

/// The full inductive construction for one n: the pieces f_{n,j}, their sum
/// f_n, and the coefficient table c_{i,j}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionState {
    pub n: u64,
    pub s_n: u64,
    pub parts: Vec<BivariatePoly>,
    pub f_n: BivariatePoly,
    /// c_{i,j}: coefficient of x^i y^{s_n+j-i} in f_{n,j}
    pub coeff_table: BTreeMap<(u64, u32), Coefficient>,
    pub terminated_at: u32,
}

/// The construction's own verdict: f_n, its y-linear coefficient g_n, and
/// the order test ord g_n = s_n - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationCertificate {
    pub f_n: BivariatePoly,
    pub g_n: TruncatedSeries,
    /// `None` encodes order infinity (g_n = 0 within the working degrees)
    pub ord_g_n: Option<u32>,
    pub regular: bool,
}

/// Default cap on the number of pieces; termination is proved without an
/// explicit bound, so exceeding the cap is a hard error.
pub fn default_j_max(s: &NumericalSemigroup, n: u64) -> u32 {
    2 * s.conductor_number() as u32 + n as u32 + 2
}

pub fn build_f_n(
    algebra: &AlgebraPresentation,
    n: u64,
    j_max: u32,
) -> Result<ConstructionState, ConstructionError> {
    // basis is consulted for h_{i,a} with i <= frobenius and for the final
    // membership verification of every y-slice of f_n
    let probe = match algebra {
        AlgebraPresentation::Monomial(s) => s.clone(),
        AlgebraPresentation::General { .. } => algebra.semigroup_and_basis(0)?.0,
    };
    let s_n = probe.nth_element(n as i64);
    let needed = s_n as u32 + j_max + probe.conductor_number() as u32 + 2;
    let (s, basis) = algebra.semigroup_and_basis(needed)?;

    let l_n = s.l_n(n);
    let frob = s.frobenius_number();

    let mut coeff_table: BTreeMap<(u64, u32), Coefficient> = BTreeMap::new();
    let mut parts: Vec<BivariatePoly> = Vec::new();

    let record = |table: &mut BTreeMap<(u64, u32), Coefficient>, f: &BivariatePoly, j: u32| {
        for (&(i, _), c) in f.terms() {
            table.insert((i as u64, j), c.clone());
        }
    };

    let f0 = build_f_n0(&s, n)?;
    record(&mut coeff_table, &f0, 0);
    parts.push(f0);

    // a run of zero pieces of length t_l forces every later piece to vanish:
    // the recurrence for c_{i,j} only reaches back t_l steps in j
    let window = frob.max(1) as u32;
    let mut zero_run = 0u32;
    let mut terminated_at: Option<u32> = None;

    for j in 1..=j_max {
        let idx = index_sets(&s, n, j);
        let mut prescribed: BTreeMap<u64, Coefficient> = BTreeMap::new();
        for &i in &idx.t_set {
            let mut acc = Coefficient::zero(FieldTag::Char0);
            for a in 1..=j.min(i as u32) {
                let prev = coeff_table
                    .get(&(i - a as u64, j - a))
                    .cloned()
                    .unwrap_or_else(|| Coefficient::zero(FieldTag::Char0));
                if prev.is_zero() {
                    continue;
                }
                acc = acc.add(&prev.mul(&basis.h_coeff(i - a as u64, a)));
            }
            prescribed.insert(i, acc);
        }
        for &i in &idx.s_set {
            prescribed.insert(i, Coefficient::zero(FieldTag::Char0));
        }

        let u = IndexSet::new(idx.u_set.clone())?;
        let m = build_matrix(n + 1, &u);
        let rhs: Vec<Coefficient> = u.values().iter().map(|i| prescribed[i].clone()).collect();
        let r = solve_linear(&m, &rhs)?;

        let deg_q = l_n as u32 + j;
        let mut q = BivariatePoly::zero(FieldTag::Char0);
        for (c, rc) in r.into_iter().enumerate() {
            q = q.add(&BivariatePoly::monomial(c as u32, deg_q - c as u32, rc))?;
        }
        let factor = BivariatePoly::xy_binomial_power(n as u32 + 1, FieldTag::Char0);
        let fj = q.mul(&factor)?;

        record(&mut coeff_table, &fj, j);
        if fj.is_zero() {
            zero_run += 1;
        } else {
            zero_run = 0;
        }
        parts.push(fj);
        if zero_run >= window {
            terminated_at = Some(j);
            break;
        }
    }

    let terminated_at = terminated_at.ok_or(ConstructionError::NonTermination(j_max))?;

    let mut f_n = BivariatePoly::zero(FieldTag::Char0);
    for p in &parts {
        f_n = f_n.add(p)?;
    }

    // postconditions of the construction
    assert!(
        divide_by_binomial_power(&f_n, n as u32 + 1).is_some(),
        "f_n must be divisible by (x+y)^{{n+1}}"
    );
    let restriction = substitute_y_zero(&f_n);
    assert_eq!(restriction.ord(), Some(s_n as u32), "f_n(x,0) has order s_n");
    assert_eq!(
        restriction.leading_coefficient(),
        Some(&Coefficient::one(FieldTag::Char0)),
        "f_n(x,0) is monic"
    );
    if algebra.is_monomial() {
        // in the monomial case f_n(x,0) is supported in S; in general it is
        // only an element of R, which the slice check below certifies
        for (&d, _) in restriction.coeffs() {
            assert!(s.contains(d as i64), "f_n(x,0) supported in S");
        }
    }
    let max_y = f_n.max_y_degree().unwrap_or(0);
    for m in 0..=max_y {
        let slice = y_slice(&f_n, m);
        assert!(basis.contains(&slice, &s), "y-slice {} of f_n lies in R", m);
    }

    Ok(ConstructionState { n, s_n, parts, f_n, coeff_table, terminated_at })
}

fn y_slice(f: &BivariatePoly, m: u32) -> TruncatedSeries {
    let trunc = f.total_degree().unwrap_or(0);
    let mut s = TruncatedSeries::zero(trunc, f.tag());
    for (&(i, j), c) in f.terms() {
        if j == m {
            s.set(i, c.clone());
        }
    }
    s
}

pub fn extract_g_n(state: &ConstructionState) -> DeformationCertificate {
    let g_n = y_linear_coefficient(&state.f_n);
    let ord = g_n.ord();
    if let Some(o) = ord {
        assert!(
            o as u64 >= state.s_n - 1,
            "g_n order below s_n - 1 signals a construction bug"
        );
    }
    let regular = ord == Some(state.s_n as u32 - 1);
    DeformationCertificate { f_n: state.f_n.clone(), g_n, ord_g_n: ord, regular }
}

/// Membership in the symbolic power: f is divisible by (x+y)^{n+1} in
/// k[x,y] and every y-slice lies in R (modulo the working truncation).
pub fn symbolic_power_membership(
    f: &BivariatePoly,
    n: u64,
    algebra: &AlgebraPresentation,
) -> Result<bool, ConstructionError> {
    if divide_by_binomial_power(f, n as u32 + 1).is_none() {
        return Ok(false);
    }
    let deg = f.total_degree().unwrap_or(0);
    let probe = algebra.semigroup_and_basis(0)?.0;
    let needed = deg + probe.conductor_number() as u32 + 1;
    let (s, basis) = algebra.semigroup_and_basis(needed)?;
    let max_y = f.max_y_degree().unwrap_or(0);
    for m in 0..=max_y {
        if !basis.contains(&y_slice(f, m), &s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The deformation-space oracle's answer at one degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub regular: bool,
    pub degree_bound: u32,
    /// dimension of the computed space of symbolic-power elements
    pub space_dimension: usize,
}

/// Decides regularity by computing an exact basis of
/// {g : total degree <= D, (x+y)^{n+1} | g, g in R[[y]]} and checking
/// whether some basis element has y-linear part of order below s_n.
///
/// The verdict is computed at D and at D + 4; disagreement means the bound
/// was too small.
pub fn deformation_oracle(
    algebra: &AlgebraPresentation,
    n: u64,
    degree_bound: u32,
) -> Result<OracleReport, ConstructionError> {
    let (regular, dim) = oracle_once(algebra, n, degree_bound)?;
    let (check, _) = oracle_once(algebra, n, degree_bound + 4)?;
    if regular != check {
        return Err(ConstructionError::DegreeBoundTooSmall(degree_bound, degree_bound + 4));
    }
    Ok(OracleReport { regular, degree_bound, space_dimension: dim })
}

/// Default degree bound for the oracle.
pub fn oracle_degree_bound(s: &NumericalSemigroup, n: u64) -> u32 {
    (s.frobenius_number().max(0) as u64 + s.nth_element(n as i64) + n + 4) as u32
}

fn oracle_once(
    algebra: &AlgebraPresentation,
    n: u64,
    d: u32,
) -> Result<(bool, usize), ConstructionError> {
    let (s, basis) = algebra.semigroup_and_basis(d)?;
    let s_n = s.nth_element(n as i64);
    if (n as u32) + 1 > d {
        return Err(ConstructionError::TruncationTooSmall(n as u32 + 1));
    }
    match algebra {
        AlgebraPresentation::Monomial(_) => oracle_monomial(&s, n, s_n, d),
        AlgebraPresentation::General { .. } => oracle_general(&s, &basis, n, s_n, d),
    }
}

/// For monomial algebras the membership constraints are monomial-wise, so
/// the space splits into homogeneous components and each total degree is an
/// independent small kernel computation.
fn oracle_monomial(
    s: &NumericalSemigroup,
    n: u64,
    s_n: u64,
    d: u32,
) -> Result<(bool, usize), ConstructionError> {
    let gaps = s.gaps();
    let mut dim = 0usize;
    let mut found = false;
    for deg in (n as u32 + 1)..=d {
        let qdim = (deg - n as u32) as usize;
        let rows: Vec<Vec<Coefficient>> = gaps
            .iter()
            .filter(|&&t| t <= deg as u64)
            .map(|&t| {
                (0..qdim)
                    .map(|c| {
                        crate::arith::binomial_in(n + 1, t as i64 - c as i64, FieldTag::Char0)
                    })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&rows, qdim, FieldTag::Char0);
        dim += kernel.len();
        if deg as u64 <= s_n {
            // a homogeneous g of degree deg has g_1 = c x^{deg-1} y with
            // c = sum_q q_c C(n+1, deg-1-c)
            for v in &kernel {
                let mut c = Coefficient::zero(FieldTag::Char0);
                for (k, qc) in v.iter().enumerate() {
                    c = c.add(&qc.mul(&crate::arith::binomial_in(
                        n + 1,
                        deg as i64 - 1 - k as i64,
                        FieldTag::Char0,
                    )));
                }
                if !c.is_zero() && (deg as u64 - 1) < s_n {
                    found = true;
                }
            }
        }
    }
    Ok((found, dim))
}

fn oracle_general(
    s: &NumericalSemigroup,
    basis: &EchelonBasis,
    n: u64,
    s_n: u64,
    d: u32,
) -> Result<(bool, usize), ConstructionError> {
    let factor = BivariatePoly::xy_binomial_power(n as u32 + 1, FieldTag::Char0);
    let qdeg = d - (n as u32 + 1);
    // unknowns: coefficients of q over monomials x^i y^j, i + j <= qdeg
    let mut unknowns: Vec<(u32, u32)> = Vec::new();
    for i in 0..=qdeg {
        for j in 0..=(qdeg - i) {
            unknowns.push((i, j));
        }
    }
    // constraint rows keyed by (y-degree, gap): the reduction remainder of
    // each y-slice must vanish at every gap exponent
    let mut columns: Vec<BTreeMap<(u32, u64), Coefficient>> = Vec::with_capacity(unknowns.len());
    let mut row_keys: std::collections::BTreeSet<(u32, u64)> = std::collections::BTreeSet::new();
    for &(i, j) in &unknowns {
        let g = BivariatePoly::monomial(i, j, Coefficient::one(FieldTag::Char0)).mul(&factor)?;
        let mut col = BTreeMap::new();
        let max_y = g.max_y_degree().unwrap_or(0);
        for m in 0..=max_y {
            let rem = basis.reduce(&y_slice(&g, m), s);
            for (&t, c) in rem.coeffs() {
                col.insert((m, t as u64), c.clone());
                row_keys.insert((m, t as u64));
            }
        }
        columns.push(col);
    }
    let rows: Vec<Vec<Coefficient>> = row_keys
        .iter()
        .map(|k| {
            columns
                .iter()
                .map(|col| col.get(k).cloned().unwrap_or_else(|| Coefficient::zero(FieldTag::Char0)))
                .collect()
        })
        .collect();
    let kernel = nullspace(&rows, unknowns.len(), FieldTag::Char0);
    let mut found = false;
    for v in &kernel {
        let mut g = BivariatePoly::zero(FieldTag::Char0);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = unknowns[k];
                g = g.add(&BivariatePoly::monomial(i, j, c.clone()))?;
            }
        }
        let g = g.mul(&factor)?;
        let g1 = y_linear_coefficient(&g);
        if let Some(o) = g1.ord() {
            if (o as u64) < s_n {
                found = true;
                break;
            }
        }
    }
    Ok((found, kernel.len()))
}

/// length R / a_n = #{s in S : s < s_n}, which must equal n + 1.
pub fn a_n_length_check(s: &NumericalSemigroup, n: u64) -> u64 {
    let s_n = s.nth_element(n as i64);
    let count = s.elements_upto(s_n.saturating_sub(1)).len() as u64;
    assert_eq!(count, n + 1, "length R/a_n must be n + 1");
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nash_curve::{is_regular, stabilization_index};

    fn q(v: i64) -> Coefficient {
        Coefficient::from_int(v, FieldTag::Char0)
    }

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn mono(gens: &[u64]) -> AlgebraPresentation {
        AlgebraPresentation::Monomial(sg(gens))
    }

    fn general_example() -> AlgebraPresentation {
        // generators x^3 and x^4 + x^5
        AlgebraPresentation::General {
            gens: vec![vec![(3, q(1))], vec![(4, q(1)), (5, q(1))]],
            trunc: 40,
        }
    }

    #[test]
    fn value_semigroup_monomial_gens() {
        let gens = vec![
            TruncatedSeries::monomial(2, q(1), 16),
            TruncatedSeries::monomial(3, q(1), 16),
        ];
        let (s, basis) = compute_value_semigroup(&gens, 16).unwrap();
        assert_eq!(s.gaps(), &[1]);
        for i in [0u64, 2, 3, 4, 5, 6] {
            let h = basis.h(i).unwrap();
            assert_eq!(h.ord(), Some(i as u32));
            assert_eq!(h.coeffs().count(), 1, "h_{} is a plain monomial", i);
        }
        assert!(basis.h(1).is_none());
    }

    #[test]
    fn value_semigroup_general_gens() {
        let gens = vec![
            TruncatedSeries::from_coeffs(FieldTag::Char0, 40, [(3, q(1))]),
            TruncatedSeries::from_coeffs(FieldTag::Char0, 40, [(4, q(1)), (5, q(1))]),
        ];
        let (s, basis) = compute_value_semigroup(&gens, 40).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 5]);
        // h_4 keeps its x^5 tail: 5 is a gap, so condition 4 permits it
        let h4 = basis.h(4).unwrap();
        assert_eq!(h4.coefficient(4), q(1));
        assert_eq!(h4.coefficient(5), q(1));
        // every basis element satisfies the four conditions
        for (i, h) in (0..=20u64).filter_map(|i| basis.h(i).map(|h| (i, h))) {
            assert_eq!(h.coefficient(i as u32), q(1));
            for (&d, c) in h.coeffs() {
                if d as u64 > i && s.contains(d as i64) {
                    assert!(c.is_zero(), "h_{{{},{}}} must vanish", i, d as u64 - i);
                }
            }
        }
        assert_eq!(basis.h(0).unwrap().coeffs().count(), 1);
    }

    #[test]
    fn value_semigroup_5_7() {
        let gens = vec![
            TruncatedSeries::monomial(5, q(1), 60),
            TruncatedSeries::monomial(7, q(1), 60),
        ];
        let (s, _) = compute_value_semigroup(&gens, 60).unwrap();
        assert_eq!(s.frobenius_number(), 23);
        assert_eq!(s.gaps(), sg(&[5, 7]).gaps());
    }

    #[test]
    fn value_semigroup_truncation_too_small() {
        let gens = vec![
            TruncatedSeries::monomial(5, q(1), 12),
            TruncatedSeries::monomial(7, q(1), 12),
        ];
        assert!(matches!(
            compute_value_semigroup(&gens, 12),
            Err(ConstructionError::TruncationTooSmall(_))
        ));
    }

    #[test]
    fn value_semigroup_rejects_bad_generators() {
        let bad = vec![TruncatedSeries::monomial(0, q(1), 10)];
        assert_eq!(
            compute_value_semigroup(&bad, 10),
            Err(ConstructionError::BadGenerator)
        );
        let zero = vec![TruncatedSeries::zero(10, FieldTag::Char0)];
        assert_eq!(
            compute_value_semigroup(&zero, 10),
            Err(ConstructionError::BadGenerator)
        );
    }

    #[test]
    fn index_sets_examples() {
        let s23 = sg(&[2, 3]);
        let idx = index_sets(&s23, 1, 0);
        assert_eq!(idx.t_set, vec![1]);
        assert_eq!(idx.u_set, vec![1, 3]);

        let full = sg(&[1]);
        for n in 0..5 {
            let idx = index_sets(&full, n, 0);
            assert!(idx.t_set.is_empty());
            assert_eq!(idx.u_set, vec![n + 1]);
        }

        let s57 = sg(&[5, 7]);
        let idx = index_sets(&s57, 0, 0);
        assert_eq!(idx.t_set, vec![1, 2, 3, 4]);
        assert_eq!(idx.u_set, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn index_sets_sizes() {
        for gens in [vec![2u64, 3], vec![5, 7], vec![3, 7, 8]] {
            let s = sg(&gens);
            for n in 0..8u64 {
                let l_n = s.l_n(n);
                for j in 1..=12u32 {
                    let idx = index_sets(&s, n, j);
                    assert_eq!(idx.u_set.len() as u64, l_n + j as u64 + 1);
                    assert!(idx.m.is_some());
                }
            }
        }
    }

    #[test]
    fn f_n0_full_semigroup_is_binomial_power() {
        let full = sg(&[1]);
        for n in 0..5u64 {
            let f = build_f_n0(&full, n).unwrap();
            assert_eq!(f, BivariatePoly::xy_binomial_power(n as u32 + 1, FieldTag::Char0));
        }
    }

    #[test]
    fn f_n0_cusp_is_x2_minus_y2() {
        let f = build_f_n0(&sg(&[2, 3]), 0).unwrap();
        let expect = BivariatePoly::from_terms(
            FieldTag::Char0,
            [((2, 0), q(1)), ((0, 2), q(-1))],
        )
        .unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn f_n0_gap_coefficient_pattern() {
        let s = sg(&[5, 7]);
        let f = build_f_n0(&s, 0).unwrap();
        let s_0 = 5u32;
        assert_eq!(f.total_degree(), Some(s_0));
        for t in 1..=4u32 {
            assert!(f.coefficient(t, s_0 - t).is_zero(), "gap {}", t);
        }
        assert_eq!(f.coefficient(s_0, 0), q(1));
    }

    #[test]
    fn build_f_n_cusp_n0() {
        let st = build_f_n(&mono(&[2, 3]), 0, 8).unwrap();
        let expect = BivariatePoly::from_terms(
            FieldTag::Char0,
            [((2, 0), q(1)), ((0, 2), q(-1))],
        )
        .unwrap();
        assert_eq!(st.f_n, expect);
        // monomial algebras: all higher pieces vanish
        for p in &st.parts[1..] {
            assert!(p.is_zero());
        }
    }

    #[test]
    fn build_f_n_5_7_n5() {
        let st = build_f_n(&mono(&[5, 7]), 5, 60).unwrap();
        assert_eq!(st.s_n, 15);
        let restriction = substitute_y_zero(&st.f_n);
        assert_eq!(restriction.ord(), Some(15));
        assert_eq!(restriction.coeffs().count(), 1, "f_5(x,0) = x^15");
    }

    #[test]
    fn build_f_n_general_has_higher_pieces() {
        let st = build_f_n(&general_example(), 1, 40).unwrap();
        assert!(st.parts.iter().skip(1).any(|p| !p.is_zero()));
        assert!(
            symbolic_power_membership(&st.f_n, 1, &general_example()).unwrap(),
            "f_1 lies in the symbolic power"
        );
    }

    #[test]
    fn extract_g_n_verdicts() {
        let alg = mono(&[2, 3]);
        let st = build_f_n(&alg, 0, 8).unwrap();
        let cert = extract_g_n(&st);
        assert_eq!(cert.ord_g_n, None);
        assert!(!cert.regular);

        let st = build_f_n(&alg, 1, 8).unwrap();
        let cert = extract_g_n(&st);
        assert!(cert.regular);

        let st = build_f_n(&mono(&[5, 7]), 11, 80).unwrap();
        let cert = extract_g_n(&st);
        assert!(!cert.regular);
    }

    #[test]
    fn symbolic_power_examples() {
        let alg = mono(&[2, 3]);
        let f = BivariatePoly::from_terms(
            FieldTag::Char0,
            [((2, 0), q(1)), ((0, 2), q(-1))],
        )
        .unwrap();
        assert!(symbolic_power_membership(&f, 0, &alg).unwrap());
        // (x+y)^2 has slice 2x at y-degree 1, and x is not in R
        let sq = BivariatePoly::xy_binomial_power(2, FieldTag::Char0);
        assert!(!symbolic_power_membership(&sq, 1, &alg).unwrap());
        let xsq = BivariatePoly::monomial(2, 0, q(1));
        assert!(!symbolic_power_membership(&xsq, 1, &alg).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let alg = mono(&[2, 3]);
        assert!(!deformation_oracle(&alg, 0, 8).unwrap().regular);
        assert!(deformation_oracle(&alg, 1, 8).unwrap().regular);
        let alg57 = mono(&[5, 7]);
        assert!(deformation_oracle(&alg57, 5, 40).unwrap().regular);
        let alg34 = mono(&[3, 4]);
        assert!(!deformation_oracle(&alg34, 0, 20).unwrap().regular);
    }

    #[test]
    fn oracle_agrees_with_criterion_small_catalog() {
        for gens in [vec![2u64, 3], vec![3, 4], vec![2, 5]] {
            let s = sg(&gens);
            let alg = AlgebraPresentation::Monomial(s.clone());
            for n in 0..=stabilization_index(&s) + 3 {
                let d = oracle_degree_bound(&s, n);
                let rep = deformation_oracle(&alg, n, d).unwrap();
                assert_eq!(rep.regular, is_regular(&s, n), "gens {:?} n {}", gens, n);
            }
        }
    }

    #[test]
    fn general_and_monomial_give_same_singular_indices() {
        let gen_alg = general_example();
        let (s_gen, _) = gen_alg.semigroup_and_basis(0).unwrap();
        let s34 = sg(&[3, 4]);
        assert_eq!(s_gen.gaps(), s34.gaps());
        let top = stabilization_index(&s34) + 3;
        let mut sing_general = Vec::new();
        let mut sing_monomial = Vec::new();
        for n in 0..=top {
            let jm = default_j_max(&s34, n);
            if !extract_g_n(&build_f_n(&gen_alg, n, jm).unwrap()).regular {
                sing_general.push(n);
            }
            if !extract_g_n(&build_f_n(&mono(&[3, 4]), n, jm).unwrap()).regular {
                sing_monomial.push(n);
            }
        }
        assert_eq!(sing_general, sing_monomial);
        assert_eq!(sing_general, vec![0, 2]);
    }

    #[test]
    fn a_n_length_examples() {
        assert_eq!(a_n_length_check(&sg(&[5, 7]), 3), 4);
        assert_eq!(a_n_length_check(&sg(&[2, 3]), 0), 1);
        for n in 0..20 {
            assert_eq!(a_n_length_check(&sg(&[1]), n), n + 1);
        }
    }
}
