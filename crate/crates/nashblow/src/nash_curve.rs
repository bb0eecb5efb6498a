//! The regularity criterion for higher Nash blowups of curve branches,
//! singular-index enumeration, the conductor comparison, and the
//! Jacobian-inside-conductor check for plane monomial curves.

use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CurveError {
    #[error("exponents {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("need 2 <= a < b, got a={0}, b={1}")]
    BadExponents(u64, u64),
}

/// Nash_n(X) is regular iff s_n - 1 lies in S (characteristic 0).
pub fn is_regular(s: &NumericalSemigroup, n: u64) -> bool {
    let sn = s.nth_element(n as i64);
    s.contains(sn as i64 - 1)
}

/// All n with s_n - 1 a gap of S. Finite: once s_n exceeds the conductor,
/// s_n - 1 >= conductor lies in S.
pub fn singular_indices(s: &NumericalSemigroup) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 0u64;
    loop {
        let sn = s.nth_element(n as i64);
        if sn > s.conductor_number() {
            break;
        }
        if !s.contains(sn as i64 - 1) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// Least n0 such that Nash_n(X) is regular for every n >= n0.
pub fn stabilization_index(s: &NumericalSemigroup) -> u64 {
    singular_indices(s).last().map(|&n| n + 1).unwrap_or(0)
}

/// True iff the fiber subscheme Z_n is not contained in the conductor
/// subscheme, i.e. s_n exceeds the conductor number.
pub fn z_outside_conductor(s: &NumericalSemigroup, n: u64) -> bool {
    s.nth_element(n as i64) > s.conductor_number()
}

/// Result of the Jacobian-vs-conductor comparison for the plane monomial
/// curve u = t^a, v = t^b cut out by u^b - v^a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianConductorCheck {
    pub jacobian_valuations: [u64; 2],
    pub conductor_number: u64,
    pub inclusion_holds: bool,
}

/// Valuations of the Jacobian-ideal generators of u^b - v^a against the
/// conductor number (a-1)(b-1) of the semigroup <a, b>.
pub fn jacobian_conductor_check(a: u64, b: u64) -> Result<JacobianConductorCheck, CurveError> {
    if a < 2 || a >= b {
        return Err(CurveError::BadExponents(a, b));
    }
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    if gcd(a, b) != 1 {
        return Err(CurveError::NotCoprime(a, b));
    }
    // d/du (u^b - v^a) = b u^(b-1) has valuation a(b-1);
    // d/dv = -a v^(a-1) has valuation b(a-1)
    let vals = [a * (b - 1), b * (a - 1)];
    let conductor = (a - 1) * (b - 1);
    let holds = vals.iter().all(|&v| v >= conductor);
    Ok(JacobianConductorCheck {
        jacobian_valuations: vals,
        conductor_number: conductor,
        inclusion_holds: holds,
    })
}

/// One row of a regularity report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityRow {
    pub n: u64,
    pub s_n: u64,
    pub s_n_minus_1: u64,
    pub criterion_holds: bool,
    pub regular: bool,
    pub z_outside_conductor: bool,
}

/// Per-n verdicts over 0..=upto, plus the finite singular set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub rows: Vec<RegularityRow>,
    pub singular_indices: Vec<u64>,
    pub stabilization_index: u64,
}

pub fn regularity_report(s: &NumericalSemigroup, upto: u64) -> RegularityReport {
    let rows = (0..=upto)
        .map(|n| {
            let sn = s.nth_element(n as i64);
            let crit = s.contains(sn as i64 - 1);
            RegularityRow {
                n,
                s_n: sn,
                s_n_minus_1: sn - 1,
                criterion_holds: crit,
                regular: crit,
                z_outside_conductor: z_outside_conductor(s, n),
            }
        })
        .collect();
    RegularityReport {
        rows,
        singular_indices: singular_indices(s),
        stabilization_index: stabilization_index(s),
    }
}
