//! Numerical semigroups: submonoids of N_0 with finite complement.
//!
//! Membership is tabulated by the standard coin-problem dynamic program up
//! to the conductor; beyond the conductor every integer belongs to S.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    NonPositiveGenerator,
    #[error("gcd of generators is {0}, complement is infinite")]
    InfiniteComplement(u64),
    #[error("element list is not closed under addition: {0} + {1} = {2} missing")]
    NotClosed(u64, u64, u64),
    #[error("element list does not contain 0")]
    MissingZero,
    #[error("element list is not cofinite within bound {0}")]
    NotCofinite(u64),
}

/// A numerical semigroup S ⊆ N_0. `membership[i]` answers i ∈ S for
/// 0 ≤ i ≤ conductor; larger integers are always members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    membership: Vec<bool>,
    gaps: Vec<u64>,
    frobenius: i64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl NumericalSemigroup {
    /// S generated by the given positive integers; requires gcd 1.
    pub fn from_generators(gens: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.iter().any(|&g| g == 0) {
            return Err(SemigroupError::NonPositiveGenerator);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(SemigroupError::InfiniteComplement(g));
        }
        let mut gens: Vec<u64> = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();

        if gens[0] == 1 {
            return Ok(NumericalSemigroup {
                generators: gens,
                membership: vec![true],
                gaps: vec![],
                frobenius: -1,
            });
        }

        // Frobenius number is below a_min * a_max for coprime generators.
        let bound = (gens[0] * gens[gens.len() - 1]) as usize + 1;
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for i in 0..=bound {
            if !reach[i] {
                continue;
            }
            for &g in &gens {
                let j = i + g as usize;
                if j <= bound {
                    reach[j] = true;
                }
            }
        }
        let frobenius = reach
            .iter()
            .rposition(|&b| !b)
            .map(|i| i as i64)
            .unwrap_or(-1);
        Self::from_table(gens, reach, frobenius)
    }

    /// S described by an explicit element list, validated for closure and
    /// cofiniteness up to `bound`. Used by the general-algebra mode, where
    /// the elements come from a value-semigroup computation.
    pub fn from_elements(elements: &[u64], bound: u64) -> Result<NumericalSemigroup, SemigroupError> {
        let mut membership = vec![false; bound as usize + 1];
        for &e in elements {
            if e <= bound {
                membership[e as usize] = true;
            }
        }
        if !membership[0] {
            return Err(SemigroupError::MissingZero);
        }
        let frobenius = membership
            .iter()
            .rposition(|&b| !b)
            .map(|i| i as i64)
            .unwrap_or(-1);
        // cofiniteness: the table must certify that everything beyond the
        // candidate frobenius is attained, which needs headroom in the bound
        if frobenius >= 0 && (bound as i64) < 2 * (frobenius + 1) {
            return Err(SemigroupError::NotCofinite(bound));
        }
        // closure up to the bound
        let conductor = (frobenius + 1) as u64;
        for a in 0..=bound {
            if !membership[a as usize] {
                continue;
            }
            for b in a..=bound {
                if a + b > bound || a + b > 2 * conductor {
                    break;
                }
                if membership[b as usize] && !Self::table_contains(&membership, conductor, a + b) {
                    return Err(SemigroupError::NotClosed(a, b, a + b));
                }
            }
        }
        membership.truncate((frobenius.max(-1) + 2) as usize);
        let gaps: Vec<u64> = (0..membership.len() as u64)
            .filter(|&i| !membership[i as usize])
            .collect();
        Ok(NumericalSemigroup { generators: vec![], membership, gaps, frobenius })
    }

    fn from_table(
        generators: Vec<u64>,
        mut membership: Vec<bool>,
        frobenius: i64,
    ) -> Result<NumericalSemigroup, SemigroupError> {
        membership.truncate((frobenius + 2) as usize);
        let gaps: Vec<u64> = (0..membership.len() as u64)
            .filter(|&i| !membership[i as usize])
            .collect();
        Ok(NumericalSemigroup { generators, membership, gaps, frobenius })
    }

    fn table_contains(table: &[bool], conductor: u64, i: u64) -> bool {
        if i >= conductor {
            true
        } else {
            table[i as usize]
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// True iff S = N_0, the semigroup of a regular curve.
    pub fn is_full(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, i: i64) -> bool {
        if i < 0 {
            return false;
        }
        if i > self.frobenius {
            return true;
        }
        self.membership[i as usize]
    }

    /// s_n in the enumeration 0 = s_{-1} < s_0 < s_1 < ...; `n` ≥ -1.
    pub fn nth_element(&self, n: i64) -> u64 {
        assert!(n >= -1, "nth_element index must be >= -1");
        if n == -1 {
            return 0;
        }
        let mut remaining = n;
        let conductor = (self.frobenius + 1) as u64;
        let mut i = 1u64;
        while i < conductor {
            if self.membership[i as usize] {
                if remaining == 0 {
                    return i;
                }
                remaining -= 1;
            }
            i += 1;
        }
        // 0 = s_{-1} is not part of the enumeration, so the tail starts at
        // max(conductor, 1)
        conductor.max(1) + remaining as u64
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn frobenius_number(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor_number(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// l_n: the number of gaps strictly below s_n.
    pub fn l_n(&self, n: u64) -> u64 {
        let s_n = self.nth_element(n as i64);
        self.gaps.iter().filter(|&&t| t < s_n).count() as u64
    }

    /// Elements of S up to `max`, in increasing order.
    pub fn elements_upto(&self, max: u64) -> Vec<u64> {
        (0..=max).filter(|&i| self.contains(i as i64)).collect()
    }
}
