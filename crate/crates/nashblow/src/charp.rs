//! Finite verification procedures for the positive-characteristic
//! statements: Frobenius-power collapse of (x+y)^{p^e}, the cusp witnesses
//! in characteristics 2 and 3, and exact Artinian length computations by
//! semigroup counting.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{binomial, is_prime, BivariatePoly, Coefficient, FieldTag};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CharPError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent e must be >= 1")]
    BadExponent,
    #[error("x^{0} is not in R: {0} is a gap of S")]
    NotInSemigroup(u64),
    #[error("cusp witnesses are defined for p in {{2, 3}}, got {0}")]
    UnsupportedCharacteristic(u64),
}

/// True iff every middle binomial C(p^e, i), 0 < i < p^e, vanishes mod p,
/// i.e. (x+y)^{p^e} = x^{p^e} + y^{p^e} in characteristic p. Checked
/// exhaustively.
pub fn lucas_vanishing(p: u64, e: u32) -> Result<bool, CharPError> {
    if !is_prime(p) {
        return Err(CharPError::NotPrime(p));
    }
    if e == 0 {
        return Err(CharPError::BadExponent);
    }
    let q = p.pow(e);
    let pp = BigInt::from(p);
    let mut all = true;
    // incremental C(q, i+1) = C(q, i) * (q - i) / (i + 1)
    let mut b = BigInt::from(q);
    for i in 1..q {
        if !(&b % &pp).is_zero() {
            all = false;
        }
        b = b * BigInt::from(q - i) / BigInt::from(i + 1);
    }
    Ok(all)
}

/// True iff every term of (x+y)^{p^e} surviving mod p has both exponents in
/// S, i.e. (x+y)^{p^e} lies in R tensor R over F_p. Guaranteed whenever
/// p^e >= conductor.
pub fn frobenius_power_membership(
    s: &NumericalSemigroup,
    p: u64,
    e: u32,
) -> Result<bool, CharPError> {
    if !is_prime(p) {
        return Err(CharPError::NotPrime(p));
    }
    if e == 0 {
        return Err(CharPError::BadExponent);
    }
    let q = p.pow(e);
    let pp = BigInt::from(p);
    for i in 0..=q {
        if (&binomial(q, i as i64) % &pp).is_zero() {
            continue;
        }
        if !s.contains(i as i64) || !s.contains((q - i) as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// length R / x^m R for m in S, which equals the valuation m.
pub fn principal_quotient_length(s: &NumericalSemigroup, m: u64) -> Result<u64, CharPError> {
    if !s.contains(m as i64) {
        return Err(CharPError::NotInSemigroup(m));
    }
    Ok(m)
}

/// length R / (x^{m_1}, ..., x^{m_k}) R as the count of semigroup elements
/// not covered by any translate m_i + S.
pub fn monomial_quotient_length(
    s: &NumericalSemigroup,
    orders: &[u64],
) -> Result<u64, CharPError> {
    for &m in orders {
        if !s.contains(m as i64) {
            return Err(CharPError::NotInSemigroup(m));
        }
    }
    let max = orders.iter().max().copied().unwrap_or(0);
    let bound = max + s.conductor_number();
    let mut count = 0u64;
    for v in 0..=bound {
        if !s.contains(v as i64) {
            continue;
        }
        let covered = orders
            .iter()
            .any(|&m| v >= m && s.contains((v - m) as i64));
        if !covered {
            count += 1;
        }
    }
    Ok(count)
}

/// A verified witness that Nash_n of the cusp Spec k[[x^2, x^3]] is
/// isomorphic to the cusp itself in characteristic p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPWitness {
    pub p: u64,
    pub n: u64,
    pub case_description: String,
    pub ideal_generators: Vec<BivariatePoly>,
    pub membership_verified: bool,
    pub quotient_length: u64,
    pub expected_length: u64,
}

/// Builds the case ideal for the cusp in characteristic 2 or 3, checks that
/// every generator lies in R tensor R (both exponents of every surviving
/// term in S), and that the quotient by the y = 0 images has length n + 1.
pub fn cusp_witness(p: u64, n: u64) -> Result<CharPWitness, CharPError> {
    if p != 2 && p != 3 {
        return Err(CharPError::UnsupportedCharacteristic(p));
    }
    let s = NumericalSemigroup::from_generators(&[2, 3]).expect("cusp semigroup");
    let tag = FieldTag::prime(p).expect("p is prime");
    let nn = n as u32;

    let xy = |m: u32| BivariatePoly::xy_binomial_power(m, tag);
    // x^2 + xy + y^2
    let quad = BivariatePoly::from_terms(
        tag,
        [
            ((2, 0), Coefficient::one(tag)),
            ((1, 1), Coefficient::one(tag)),
            ((0, 2), Coefficient::one(tag)),
        ],
    )
    .expect("same field");
    // x - y
    let x_minus_y = BivariatePoly::from_terms(
        tag,
        [
            ((1, 0), Coefficient::one(tag)),
            ((0, 1), Coefficient::one(tag).neg()),
        ],
    )
    .expect("same field");

    let (case_description, ideal_generators) = if p == 2 {
        if n % 2 == 1 {
            ("p=2, n odd".to_string(), vec![xy(nn + 1)])
        } else {
            (
                "p=2, n even".to_string(),
                vec![xy(nn + 2), quad.mul(&xy(nn + 1)).expect("same field")],
            )
        }
    } else {
        match n % 3 {
            2 => ("p=3, n = 2 mod 3".to_string(), vec![xy(nn + 1)]),
            1 => (
                "p=3, n = 1 mod 3".to_string(),
                vec![xy(nn + 2), quad.mul(&xy(nn + 1)).expect("same field")],
            ),
            _ => (
                "p=3, n = 0 mod 3".to_string(),
                vec![x_minus_y.mul(&xy(nn + 1)).expect("same field"), xy(nn + 3)],
            ),
        }
    };

    let membership_verified = ideal_generators.iter().all(|g| {
        g.terms()
            .all(|(&(i, j), _)| s.contains(i as i64) && s.contains(j as i64))
    });

    let orders: Vec<u64> = ideal_generators
        .iter()
        .filter_map(|g| {
            crate::arith::substitute_y_zero(g).ord().map(|o| o as u64)
        })
        .collect();
    let quotient_length = monomial_quotient_length(&s, &orders)?;

    Ok(CharPWitness {
        p,
        n,
        case_description,
        ideal_generators,
        membership_verified,
        quotient_length,
        expected_length: n + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn lucas_vanishing_examples() {
        assert!(lucas_vanishing(2, 3).unwrap());
        assert!(lucas_vanishing(3, 2).unwrap());
        assert!(lucas_vanishing(5, 1).unwrap());
        assert_eq!(lucas_vanishing(4, 1), Err(CharPError::NotPrime(4)));
        assert_eq!(lucas_vanishing(2, 0), Err(CharPError::BadExponent));
    }

    #[test]
    fn lucas_vanishing_sweep() {
        for p in [2u64, 3, 5, 7] {
            let mut e = 1u32;
            while p.pow(e) <= 1024 {
                assert!(lucas_vanishing(p, e).unwrap(), "p={} e={}", p, e);
                e += 1;
            }
        }
    }

    #[test]
    fn frobenius_membership_examples() {
        assert!(frobenius_power_membership(&sg(&[2, 3]), 2, 1).unwrap());
        assert!(frobenius_power_membership(&sg(&[5, 7]), 2, 5).unwrap());
        assert!(!frobenius_power_membership(&sg(&[5, 7]), 2, 2).unwrap());
    }

    #[test]
    fn frobenius_membership_beyond_conductor() {
        for gens in [vec![2u64, 3], vec![3, 4], vec![5, 7], vec![4, 6, 7]] {
            let s = sg(&gens);
            for p in [2u64, 3, 5, 7] {
                for e in 1..=10u32 {
                    let q = p.pow(e);
                    if q > 1024 {
                        break;
                    }
                    if q >= s.conductor_number() {
                        assert!(
                            frobenius_power_membership(&s, p, e).unwrap(),
                            "gens {:?} p {} e {}",
                            gens,
                            p,
                            e
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn principal_length_examples() {
        assert_eq!(principal_quotient_length(&sg(&[2, 3]), 4).unwrap(), 4);
        assert_eq!(principal_quotient_length(&sg(&[5, 7]), 32).unwrap(), 32);
        assert_eq!(
            principal_quotient_length(&sg(&[2, 3]), 1),
            Err(CharPError::NotInSemigroup(1))
        );
    }

    #[test]
    fn monomial_length_examples() {
        let cusp = sg(&[2, 3]);
        // n = 4: length R/(x^6, x^7) = 5
        assert_eq!(monomial_quotient_length(&cusp, &[6, 7]).unwrap(), 5);
        assert_eq!(monomial_quotient_length(&cusp, &[2]).unwrap(), 2);
        let full = sg(&[1]);
        for m in 1..=10 {
            assert_eq!(monomial_quotient_length(&full, &[m]).unwrap(), m);
        }
        assert_eq!(
            monomial_quotient_length(&cusp, &[1]),
            Err(CharPError::NotInSemigroup(1))
        );
    }

    #[test]
    fn cusp_witness_char2_odd() {
        let w = cusp_witness(2, 3).unwrap();
        assert!(w.membership_verified);
        assert_eq!(w.quotient_length, 4);
        assert_eq!(w.ideal_generators.len(), 1);
        // (x+y)^4 over F_2 = x^4 + y^4
        let g = &w.ideal_generators[0];
        assert_eq!(g.num_terms(), 2);
        assert!(!g.coefficient(4, 0).is_zero());
        assert!(!g.coefficient(0, 4).is_zero());
    }

    #[test]
    fn cusp_witness_char2_even() {
        let w = cusp_witness(2, 2).unwrap();
        assert_eq!(w.ideal_generators.len(), 2);
        assert!(w.membership_verified);
        assert_eq!(w.quotient_length, 3);
    }

    #[test]
    fn cusp_witness_char3_n0_case() {
        let w = cusp_witness(3, 3).unwrap();
        assert_eq!(w.case_description, "p=3, n = 0 mod 3");
        assert!(w.membership_verified);
        assert_eq!(w.quotient_length, 4);
    }

    #[test]
    fn cusp_witness_sweep() {
        for p in [2u64, 3] {
            for n in 0..=30 {
                let w = cusp_witness(p, n).unwrap();
                assert!(w.membership_verified, "p={} n={}", p, n);
                assert_eq!(w.quotient_length, n + 1, "p={} n={}", p, n);
            }
        }
    }

    #[test]
    fn cusp_witness_rejects_other_p() {
        assert_eq!(cusp_witness(5, 1), Err(CharPError::UnsupportedCharacteristic(5)));
    }
}
