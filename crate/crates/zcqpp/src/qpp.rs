//! Normalized quadratic permutation polynomials over `Z_N`.
//!
//! A normalized QPP is `π(k) = a·k² + b·k mod N` with zero constant term that
//! bijects `Z_N`. Validity is local: for each prime power `p^α` exactly
//! dividing `N`,
//!
//! - `p` odd: `p | a` and `p ∤ b`
//! - `p = 2`, `α = 1`: `a + b` odd
//! - `p = 2`, `α ≥ 2`: `a` even and `b` odd
//!
//! which is equivalent to the brute-force bijection test.

use crate::arith::{factorize, gcd, radical, euler_phi, Factorization};
use crate::{Error, Result};

/// A validated normalized quadratic permutation polynomial over `Z_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qpp {
    n: u64,
    a: u64,
    b: u64,
}

impl Qpp {
    /// Validates `(a, b)` against the local criterion and wraps it.
    pub fn new(n: u64, a: u64, b: u64) -> Result<Self> {
        if !(3..=crate::arith::MAX_N).contains(&n) {
            return Err(Error::ModulusOutOfRange(n));
        }
        let a = a % n;
        let b = b % n;
        check_qpp_local(n, a, b)?;
        Ok(Qpp { n, a, b })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `π(k) = a·k² + b·k mod N` for any integer `k`.
    pub fn apply(&self, k: i64) -> u64 {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as u64;
        (self.a * k % n * k % n + self.b * k % n) % n
    }

    /// `a ≢ 0 (mod N)`.
    pub fn is_nonzero(&self) -> bool {
        self.a != 0
    }

    /// `gcd(N, 2a) < N`, the standard irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        gcd(self.n, 2 * self.a % self.n) < self.n
    }
}

/// Nonzero/irreducible classification flags for a QPP.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QppClass {
    pub nonzero: bool,
    pub irreducible: bool,
}

impl QppClass {
    pub fn of(qpp: &Qpp) -> Self {
        let class = QppClass {
            nonzero: qpp.is_nonzero(),
            irreducible: qpp.is_irreducible(),
        };
        debug_assert!(!class.irreducible || class.nonzero);
        class
    }
}

/// Local QPP test with a diagnostic naming the first failing prime power.
pub fn check_qpp_local(n: u64, a: u64, b: u64) -> Result<()> {
    let fac = factorize(n)?;
    for &(p, alpha) in fac.factors() {
        let pa = p.pow(alpha);
        let (ap, bp) = (a % pa, b % pa);
        let fail = if p == 2 {
            if alpha == 1 {
                if (ap + bp) % 2 != 1 {
                    Some("a + b must be odd at 2 || N")
                } else {
                    None
                }
            } else if bp % 2 != 1 {
                Some("b must be odd at the 2-adic component")
            } else if ap % 2 != 0 {
                Some("a must be even at the 2-adic component")
            } else {
                None
            }
        } else if bp % p == 0 {
            Some("p | b at an odd prime")
        } else if ap % p != 0 {
            Some("p does not divide a at an odd prime")
        } else {
            None
        };
        if let Some(reason) = fail {
            return Err(Error::NotAQpp {
                n,
                a,
                b,
                reason: format!("{reason} (p^alpha = {p}^{alpha})"),
            });
        }
    }
    Ok(())
}

/// Local QPP test as a plain boolean.
pub fn is_qpp_local(n: u64, a: u64, b: u64) -> bool {
    check_qpp_local(n, a, b).is_ok()
}

/// Independent oracle: does `k ↦ a·k² + b·k` hit every residue mod `n`?
pub fn is_permutation_bruteforce(n: u64, a: u64, b: u64) -> bool {
    assert!(n <= 100_000, "brute force capped at desk scale");
    let mut seen = vec![false; n as usize];
    for k in 0..n {
        let v = (a * k % n * k % n + b * k % n) % n;
        if seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    true
}

/// Which coefficient pairs an enumeration should keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QppFilter {
    /// Every valid normalized QPP, including affine ones (`a ≡ 0`).
    All,
    /// `a ≢ 0 (mod N)`.
    Nonzero,
    /// `gcd(N, 2a) < N`.
    Irreducible,
}

fn a_side_ok(fac: &Factorization, a: u64) -> bool {
    fac.factors().iter().all(|&(p, alpha)| {
        if p == 2 {
            alpha == 1 || a % 2 == 0
        } else {
            a % p == 0
        }
    })
}

/// All valid QPP coefficient pairs mod `n` matching the filter, in
/// lexicographic `(a, b)` order.
pub fn enumerate_qpps(n: u64, filter: QppFilter) -> Result<Vec<Qpp>> {
    if !(3..=2000).contains(&n) {
        return Err(Error::ModulusOutOfRange(n));
    }
    let fac = factorize(n)?;
    let mut out = Vec::new();
    for a in 0..n {
        // the a-side local conditions prune most candidates before the b scan
        if !a_side_ok(&fac, a) {
            continue;
        }
        match filter {
            QppFilter::All => {}
            QppFilter::Nonzero => {
                if a == 0 {
                    continue;
                }
            }
            QppFilter::Irreducible => {
                if gcd(n, 2 * a % n) == n {
                    continue;
                }
            }
        }
        for b in 0..n {
            if is_qpp_local(n, a, b) {
                out.push(Qpp { n, a, b });
            }
        }
    }
    Ok(out)
}

/// `φ(N)·(N/rad(N) − 1)`, the number of nonzero normalized QPP pairs for odd `N`.
pub fn count_nonzero_qpps_closed_form(n: u64) -> Result<u64> {
    if n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    if n < 3 {
        return Err(Error::ModulusOutOfRange(n));
    }
    Ok(euler_phi(n) * (n / radical(n) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_test_known_values() {
        assert!(is_qpp_local(75, 15, 1));
        assert!(!is_qpp_local(75, 15, 5));
        assert!(is_qpp_local(4, 2, 1));
    }

    #[test]
    fn bruteforce_known_values() {
        assert!(is_permutation_bruteforce(45, 15, 1));
        assert!(!is_permutation_bruteforce(5, 1, 1));
        assert!(is_permutation_bruteforce(2, 1, 0));
    }

    #[test]
    fn local_equals_bruteforce() {
        for n in 1..=100u64 {
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(
                        is_qpp_local(n, a, b),
                        is_permutation_bruteforce(n, a, b),
                        "disagreement at n={n}, a={a}, b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_known_counts() {
        let q75 = enumerate_qpps(75, QppFilter::Nonzero).unwrap();
        assert_eq!(q75.len(), 160);
        let a_values: std::collections::BTreeSet<u64> = q75.iter().map(|q| q.a()).collect();
        assert_eq!(a_values.into_iter().collect::<Vec<_>>(), vec![15, 30, 45, 60]);

        assert!(enumerate_qpps(7, QppFilter::Nonzero).unwrap().is_empty());
        assert_eq!(enumerate_qpps(25, QppFilter::Nonzero).unwrap().len(), 80);
    }

    #[test]
    fn closed_form_known_values() {
        assert_eq!(count_nonzero_qpps_closed_form(75).unwrap(), 160);
        assert_eq!(count_nonzero_qpps_closed_form(175).unwrap(), 480);
        assert_eq!(count_nonzero_qpps_closed_form(15).unwrap(), 0);
        assert!(count_nonzero_qpps_closed_form(50).is_err());
    }

    #[test]
    fn closed_form_matches_enumeration_odd() {
        for n in (3..=1000u64).step_by(2) {
            let count = enumerate_qpps(n, QppFilter::Nonzero).unwrap().len() as u64;
            assert_eq!(count, count_nonzero_qpps_closed_form(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn enumerated_qpps_are_permutations() {
        for n in 3..=300u64 {
            for q in enumerate_qpps(n, QppFilter::All).unwrap() {
                assert!(is_permutation_bruteforce(n, q.a(), q.b()));
            }
        }
    }

    #[test]
    fn irreducible_implies_nonzero() {
        for n in 3..=120u64 {
            for q in enumerate_qpps(n, QppFilter::Irreducible).unwrap() {
                let class = QppClass::of(&q);
                assert!(class.irreducible && class.nonzero);
            }
        }
    }

    #[test]
    fn odd_squarefree_nonzero_set_empty() {
        // odd N with 9 not dividing N and no repeated prime >= 5 forces a ≡ 0
        for &n in &[15u64, 21, 33, 35, 105, 3, 5, 7, 11] {
            assert!(enumerate_qpps(n, QppFilter::Nonzero).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn constructor_rejects_small_modulus() {
        assert!(Qpp::new(2, 1, 0).is_err());
        assert!(Qpp::new(1, 0, 0).is_err());
    }
}
