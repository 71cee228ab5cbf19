//! Sequence materialization, CAZAC numerics, and the operational oracle.
//!
//! Sequences are carried as exact integer phase exponents: entry `e` at
//! index `k` stands for the complex value `exp(-iπ·e/N)`, so every sample is
//! a `2N`-th root of unity and equivalence checks never touch floating
//! point. Floats appear only in [`cazac_check`].

use crate::arith::gcd;
use crate::phase::phi_eval;
use crate::qpp::Qpp;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Parameters of an ordinary Zadoff-Chu sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZcParams {
    pub n: u64,
    pub u: u64,
    pub q: u64,
}

impl ZcParams {
    pub fn new(n: u64, u: u64, q: u64) -> Result<Self> {
        if !(2..=crate::arith::MAX_N).contains(&n) {
            return Err(Error::ModulusOutOfRange(n));
        }
        let u = u % n;
        if gcd(u, n) != 1 {
            return Err(Error::RootNotUnit { u, n });
        }
        Ok(ZcParams { n, u, q: q % n })
    }
}

/// A length-`N` sequence of phase exponents mod `2N`, in units of `π/N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSequence {
    pub n: u64,
    pub exps: Vec<u64>,
}

impl ExponentSequence {
    /// Renders the exact exponents as complex samples.
    pub fn to_complex(&self) -> Vec<Complex64> {
        self.exps
            .iter()
            .map(|&e| Complex64::from_polar(1.0, -PI * e as f64 / self.n as f64))
            .collect()
    }
}

/// Generates the ordinary Zadoff-Chu exponent table
/// `u·t·(t + ε_N + 2q) mod 2N`.
pub fn zc_generate(params: ZcParams) -> ExponentSequence {
    let ZcParams { n, u, q } = params;
    let m = 2 * n;
    let eps = n % 2;
    let exps = (0..n)
        .map(|t| u * (t * ((t + eps + 2 * q) % m) % m) % m)
        .collect();
    ExponentSequence { n, exps }
}

/// Generates the QPP-interleaved exponent table `u·Φ(k) mod 2N`.
pub fn interleave(params: ZcParams, qpp: &Qpp) -> Result<ExponentSequence> {
    if qpp.n() != params.n {
        return Err(Error::ModulusMismatch(qpp.n(), params.n));
    }
    let ZcParams { n, u, q } = params;
    let exps = (0..n)
        .map(|k| u * phi_eval(qpp.a(), qpp.b(), q, n, k as i64) % (2 * n))
        .collect();
    Ok(ExponentSequence { n, exps })
}

/// One of the five CAZAC-preserving operations, at exponent level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceOp {
    /// Multiply by the `2N`-th root of unity with exponent `c0`.
    Rotation(u64),
    /// Reindex `k → k + d`.
    Translation(u64),
    /// Reindex `k → r·k` with `r` a unit mod `N`.
    Decimation(u64),
    /// Multiply by `W_N^{λk}`, adding `2λk` to the exponent.
    Lfm(u64),
    /// Complex conjugation: negate exponents mod `2N`.
    Conjugation,
}

/// Applies one operation exactly on the exponent table.
pub fn apply_operation(s: &ExponentSequence, op: SequenceOp) -> Result<ExponentSequence> {
    let n = s.n;
    let m = 2 * n;
    let exps = match op {
        SequenceOp::Rotation(c0) => s.exps.iter().map(|&e| (e + c0) % m).collect(),
        SequenceOp::Translation(d) => (0..n)
            .map(|k| s.exps[((k + d) % n) as usize])
            .collect(),
        SequenceOp::Decimation(r) => {
            if gcd(r % n, n) != 1 {
                return Err(Error::DecimationNotUnit { r: r % n, n });
            }
            (0..n).map(|k| s.exps[(r * k % n) as usize]).collect()
        }
        SequenceOp::Lfm(lambda) => s
            .exps
            .iter()
            .enumerate()
            .map(|(k, &e)| (e + 2 * (lambda % n) * k as u64) % m)
            .collect(),
        SequenceOp::Conjugation => s.exps.iter().map(|&e| (m - e) % m).collect(),
    };
    Ok(ExponentSequence { n, exps })
}

/// A certificate that a sequence equals a transformed Zadoff-Chu sequence.
///
/// The target exponent at `k` is
/// `σ·u'·(rk + d + ε_N + 2q')(rk + d) + 2λk + c0 mod 2N`, with `q'` fixed
/// to zero (the shift folds into `λ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub sigma: i8,
    pub u_prime: u64,
    pub r: u64,
    pub d: u64,
    pub lambda: u64,
    pub q_prime: u64,
    pub c0: u64,
}

impl EquivalenceWitness {
    /// Rebuilds the exponent table this witness describes by composing the
    /// five operations on a plain Zadoff-Chu base sequence.
    pub fn materialize(&self, n: u64) -> Result<ExponentSequence> {
        let base = zc_generate(ZcParams::new(n, self.u_prime, self.q_prime)?);
        let mut s = apply_operation(&base, SequenceOp::Translation(self.d))?;
        s = apply_operation(&s, SequenceOp::Decimation(self.r))?;
        if self.sigma < 0 {
            s = apply_operation(&s, SequenceOp::Conjugation)?;
        }
        s = apply_operation(&s, SequenceOp::Lfm(self.lambda))?;
        apply_operation(&s, SequenceOp::Rotation(self.c0))
    }
}

/// Exhaustively searches the five-operation orbit of the Zadoff-Chu family
/// for an exact exponent-level match with `target`.
///
/// `q'` is fixed to 0 and the rotation exponent is determined at `k = 0`,
/// both without loss for sequences valued in `2N`-th roots of unity. The
/// first witness in the scan order (σ = +1 before −1, then `u'`, `r`, `d`,
/// `λ` ascending) is returned, which is also the lexicographically least.
pub fn operational_equivalence_search(
    target: &ExponentSequence,
    n: u64,
) -> Result<Option<EquivalenceWitness>> {
    assert!(n <= 16, "exhaustive search capped at desk scale");
    if target.n != n {
        return Err(Error::ModulusMismatch(target.n, n));
    }
    let m = 2 * n;
    let eps = n % 2;
    let units: Vec<u64> = (1..n).filter(|&u| gcd(u, n) == 1).collect();
    let base_phase = |u_prime: u64, r: u64, d: u64, k: u64| -> u64 {
        let t = (r * k + d) % n;
        u_prime * (t * ((t + eps) % m) % m) % m
    };
    for sigma in [1i8, -1] {
        for &u_prime in &units {
            for &r in &units {
                for d in 0..n {
                    for lambda in 0..n {
                        let eval = |k: u64| -> u64 {
                            let mut e = base_phase(u_prime, r, d, k);
                            if sigma < 0 {
                                e = (m - e) % m;
                            }
                            (e + 2 * lambda * k) % m
                        };
                        let c0 = (target.exps[0] + m - eval(0)) % m;
                        if (0..n).all(|k| (eval(k) + c0) % m == target.exps[k as usize]) {
                            return Ok(Some(EquivalenceWitness {
                                sigma,
                                u_prime,
                                r,
                                d,
                                lambda,
                                q_prime: 0,
                                c0,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Numerical CAZAC metrics of a complex sequence.
#[derive(Debug, Clone, Copy)]
pub struct CazacReport {
    pub max_amplitude_deviation: f64,
    pub max_offpeak_autocorrelation: f64,
    pub pass: bool,
}

/// Measures `max ||s(k)| − 1|` and the largest off-peak periodic
/// autocorrelation magnitude `|R(τ)|`, `R(τ) = Σ s(k)·conj(s(k+τ))/N`.
pub fn cazac_check(samples: &[Complex64], tol: f64) -> CazacReport {
    let n = samples.len();
    let max_amplitude_deviation = samples
        .iter()
        .map(|s| (s.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let mut max_offpeak = 0.0f64;
    for tau in 1..n {
        let r: Complex64 = (0..n)
            .map(|k| samples[k] * samples[(k + tau) % n].conj())
            .sum::<Complex64>()
            / n as f64;
        max_offpeak = max_offpeak.max(r.norm());
    }
    CazacReport {
        max_amplitude_deviation,
        max_offpeak_autocorrelation: max_offpeak,
        pass: max_amplitude_deviation < tol && max_offpeak < tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::{decide_equivalence, Verdict};
    use crate::phase::{fit_quadratic_phase, LiftedPhase};
    use crate::qpp::{enumerate_qpps, QppFilter};

    fn zc(n: u64, u: u64, q: u64) -> ExponentSequence {
        zc_generate(ZcParams::new(n, u, q).unwrap())
    }

    #[test]
    fn zc_known_values() {
        assert_eq!(zc(3, 1, 0).exps, vec![0, 2, 0]);
        assert_eq!(zc(4, 1, 0).exps, vec![0, 1, 4, 1]);
    }

    #[test]
    fn zc_shift_period() {
        for n in [5u64, 8, 12] {
            let a = zc(n, 1, 1);
            let b = zc(n, 1, 1 + n);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn interleave_identity_permutation() {
        let params = ZcParams::new(9, 2, 0).unwrap();
        let qpp = Qpp::new(9, 0, 1).unwrap();
        assert_eq!(interleave(params, &qpp).unwrap(), zc_generate(params));
    }

    #[test]
    fn interleave_known_value() {
        // T(1) = 16, Phi(1) = 16·17 = 272 ≡ 2 (mod 90)
        let params = ZcParams::new(45, 1, 0).unwrap();
        let qpp = Qpp::new(45, 15, 1).unwrap();
        let s = interleave(params, &qpp).unwrap();
        assert_eq!(s.exps[0], 0);
        assert_eq!(s.exps[1], 2);
    }

    #[test]
    fn interleave_rejects_mismatch() {
        let params = ZcParams::new(45, 1, 0).unwrap();
        let qpp = Qpp::new(75, 15, 1).unwrap();
        assert!(interleave(params, &qpp).is_err());
    }

    #[test]
    fn operation_involutions() {
        let s = zc(10, 3, 1);
        let conj2 = apply_operation(
            &apply_operation(&s, SequenceOp::Conjugation).unwrap(),
            SequenceOp::Conjugation,
        )
        .unwrap();
        assert_eq!(conj2, s);

        let shifted = apply_operation(&s, SequenceOp::Translation(3)).unwrap();
        let back = apply_operation(&shifted, SequenceOp::Translation(7)).unwrap();
        assert_eq!(back, s);

        let l1 = apply_operation(&s, SequenceOp::Lfm(4)).unwrap();
        let l2 = apply_operation(&s, SequenceOp::Lfm(14)).unwrap();
        assert_eq!(l1, l2);

        assert!(apply_operation(&s, SequenceOp::Decimation(5)).is_err());
    }

    #[test]
    fn search_identity_witness() {
        let target = zc(5, 2, 0);
        let w = operational_equivalence_search(&target, 5).unwrap().unwrap();
        assert_eq!(
            (w.sigma, w.u_prime, w.r, w.d, w.lambda, w.c0),
            (1, 2, 1, 0, 0, 0)
        );
    }

    #[test]
    fn search_known_interleaved_witnesses() {
        for (n, a, b) in [(4u64, 2u64, 1u64), (9, 3, 1)] {
            let params = ZcParams::new(n, 1, 0).unwrap();
            let qpp = Qpp::new(n, a, b).unwrap();
            let target = interleave(params, &qpp).unwrap();
            let w = operational_equivalence_search(&target, n)
                .unwrap()
                .unwrap_or_else(|| panic!("expected witness at n={n}"));
            assert_eq!(w.materialize(n).unwrap(), target);
        }
    }

    #[test]
    fn search_agrees_with_fit_and_criterion() {
        for n in 3..=14u64 {
            for qpp in enumerate_qpps(n, QppFilter::Nonzero).unwrap() {
                let target = interleave(ZcParams::new(n, 1, 0).unwrap(), &qpp).unwrap();
                let witness = operational_equivalence_search(&target, n).unwrap();
                let fit = fit_quadratic_phase(&LiftedPhase::from_qpp(&qpp, 1, 0).unwrap());
                let verdict = decide_equivalence(&qpp, 1, 0).unwrap().verdict;
                assert_eq!(witness.is_some(), fit.is_some(), "n={n} a={} b={}", qpp.a(), qpp.b());
                assert_eq!(
                    witness.is_some(),
                    verdict == Verdict::Equivalent,
                    "n={n} a={} b={}",
                    qpp.a(),
                    qpp.b()
                );
                if let Some(w) = witness {
                    assert_eq!(w.materialize(n).unwrap(), target);
                }
            }
        }
    }

    #[test]
    fn zc_sequences_are_cazac() {
        for n in 2..=50u64 {
            for u in (1..n).filter(|&u| gcd(u, n) == 1).take(3) {
                let report = cazac_check(&zc(n, u, 0).to_complex(), 1e-9);
                assert!(report.pass, "n={n} u={u}");
            }
        }
    }

    #[test]
    fn constant_sequence_fails_cazac() {
        let ones = vec![Complex64::new(1.0, 0.0); 8];
        let report = cazac_check(&ones, 1e-9);
        assert!(report.max_amplitude_deviation < 1e-12);
        assert!((report.max_offpeak_autocorrelation - 1.0).abs() < 1e-12);
        assert!(!report.pass);
    }

    #[test]
    fn interleaved_sequences_are_cazac() {
        let qpp = Qpp::new(75, 15, 1).unwrap();
        let s = interleave(ZcParams::new(75, 1, 0).unwrap(), &qpp).unwrap();
        assert!(cazac_check(&s.to_complex(), 1e-9).pass);
    }

    #[test]
    fn operations_preserve_zero_autocorrelation() {
        let s = zc(30, 7, 2);
        let ops = [
            SequenceOp::Rotation(11),
            SequenceOp::Translation(4),
            SequenceOp::Decimation(7),
            SequenceOp::Lfm(9),
            SequenceOp::Conjugation,
        ];
        for op in ops {
            let t = apply_operation(&s, op).unwrap();
            let report = cazac_check(&t.to_complex(), 1e-9);
            assert!(report.pass, "{op:?}");
        }
    }

    #[test]
    fn zc_representative_independent() {
        // exponents computed from t and t + N agree mod 2N
        for n in 3..=40u64 {
            let m = 2 * n;
            let eps = n % 2;
            for t in 0..n {
                let lift = t + n;
                let e1 = t * ((t + eps + 2) % m) % m;
                let e2 = lift * ((lift + eps + 2) % m) % m;
                assert_eq!(e1, e2 % m, "n={n} t={t}");
            }
        }
    }
}
