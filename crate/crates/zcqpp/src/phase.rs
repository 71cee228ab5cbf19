//! The lifted phase modulo `2N` and its quadratic representatives.
//!
//! The interleaved sequence has exponent `F(k) = u·Φ(k) mod 2N` with
//!
//! ```text
//! Φ(X) = (aX² + bX + ε_N + 2q)(aX² + bX),    ε_N = N mod 2.
//! ```
//!
//! `F` is a well-defined function of `k mod N` even though it is computed on
//! integer lifts. The sequence is Zadoff-Chu-equivalent exactly when `F`
//! admits a quadratic representative `Ak² + Bk + C mod 2N` with `gcd(A, N) = 1`
//! and `B ≡ A·ε_N (mod 2)`. Non-existence is detected by the third forward
//! difference `Δ³Φ = 12a(2aX + 3a + b)`; existence is decided by a two-candidate
//! fit and, when the valuation criterion holds, realized constructively by
//! gluing local quadratic representatives with the Chinese remainder theorem.

use crate::arith::{crt, factorize, gcd};
use crate::qpp::Qpp;
use crate::{Error, Result};

/// Evaluates `Φ_{a,b,q,N}(k) mod 2N` on any integer lift `k`.
///
/// Every product is reduced modulo `2N` immediately, so all intermediates
/// stay within 64 bits for `N ≤ 2^31`.
pub fn phi_eval(a: u64, b: u64, q: u64, n: u64, k: i64) -> u64 {
    let m = 2 * n;
    let eps = n % 2;
    let k = k.rem_euclid(n as i64) as u64;
    // T(k) = a k^2 + b k, reduced mod N; the representative of T mod N
    // determines Phi mod 2N
    let t = (a % n * k % n * k % n + b % n * k % n) % n;
    t * ((t + eps + 2 * (q % n)) % m) % m
}

/// `j`-fold forward difference of a value table, mod `m`.
///
/// The table must hold values on consecutive integer lifts (the caller
/// extends past `N − 1` with [`phi_eval`] rather than wrapping cyclically).
/// The result is `j` entries shorter than the input.
pub fn finite_difference(values: &[u64], order: u32, m: u64) -> Result<Vec<u64>> {
    if order > 4 {
        return Err(Error::DifferenceOrderTooHigh(order));
    }
    let mut cur = values.to_vec();
    for _ in 0..order {
        cur = cur
            .windows(2)
            .map(|w| (w[1] + m - w[0]) % m)
            .collect();
    }
    Ok(cur)
}

/// The closed-form third difference `12a(2aX + 3a + b) mod 2N`.
///
/// Independent of `q` and of the parity bit; the parameter is kept in the
/// signature so callers can assert that invariance.
pub fn third_difference_invariant(a: u64, b: u64, n: u64, _q: u64, x: u64) -> u64 {
    let m = 2 * n;
    let a = a % m;
    let b = b % m;
    let inner = (2 * a % m * (x % m) % m + 3 * a % m + b) % m;
    12 % m * a % m * inner % m
}

/// The table of `F(k) = u·Φ_{a,b,q,N}(k) mod 2N` on `k = 0..N−1`.
#[derive(Debug, Clone)]
pub struct LiftedPhase {
    n: u64,
    u: u64,
    q: u64,
    a: u64,
    b: u64,
    eps: u64,
    values: Vec<u64>,
}

impl LiftedPhase {
    pub fn new(n: u64, u: u64, q: u64, a: u64, b: u64) -> Result<Self> {
        if !(3..=crate::arith::MAX_N).contains(&n) {
            return Err(Error::ModulusOutOfRange(n));
        }
        let u = u % n;
        if gcd(u, n) != 1 {
            return Err(Error::RootNotUnit { u, n });
        }
        let values = (0..n)
            .map(|k| u * phi_eval(a, b, q, n, k as i64) % (2 * n))
            .collect();
        Ok(LiftedPhase {
            n,
            u,
            q,
            a: a % n,
            b: b % n,
            eps: n % 2,
            values,
        })
    }

    pub fn from_qpp(qpp: &Qpp, u: u64, q: u64) -> Result<Self> {
        Self::new(qpp.n(), u, q, qpp.a(), qpp.b())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn eps(&self) -> u64 {
        self.eps
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `F` evaluated on an arbitrary integer lift, via [`phi_eval`].
    pub fn eval_lift(&self, k: i64) -> u64 {
        self.u * phi_eval(self.a, self.b, self.q, self.n, k) % (2 * self.n)
    }
}

/// An admissible quadratic phase `Ak² + Bk + C mod 2N`:
/// `gcd(A, N) = 1` and `B ≡ A·ε_N (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadraticPhase {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl QuadraticPhase {
    pub fn eval(&self, n: u64, k: i64) -> u64 {
        let m = 2 * n;
        let k = k.rem_euclid(m as i64) as u64;
        (self.a * k % m * k % m + self.b * k % m + self.c) % m
    }

    /// Checks both admissibility conditions for modulus `n`.
    pub fn is_admissible(&self, n: u64) -> bool {
        gcd(self.a % n, n) == 1 && self.b % 2 == self.a * (n % 2) % 2
    }

    /// True when this phase reproduces `f` at every `k` in `[0, N)`.
    pub fn matches(&self, f: &LiftedPhase) -> bool {
        (0..f.n()).all(|k| self.eval(f.n(), k as i64) == f.values()[k as usize])
    }
}

/// Decides whether `F` has an admissible quadratic representative and
/// returns the lexicographically least one if so.
///
/// `C = F(0)`; the second difference at 0 equals `2A mod 2N`, pinning `A`
/// up to the two lifts `A₀` and `A₀ + N`; `B = ΔF(0) − A`. Each candidate
/// is verified against the whole table and against Definition-level
/// admissibility.
pub fn fit_quadratic_phase(f: &LiftedPhase) -> Option<QuadraticPhase> {
    let n = f.n();
    let m = 2 * n;
    let f0 = f.values()[0];
    let f1 = f.eval_lift(1);
    let f2 = f.eval_lift(2);
    let d1 = (f1 + m - f0) % m;
    let d2 = (f2 + 2 * (m - f1) % m + f0) % m;
    if d2 % 2 != 0 {
        return None; // 2A is even, so an odd second difference is fatal
    }
    let a0 = d2 / 2;
    debug_assert!(a0 < n);
    for a in [a0, a0 + n] {
        let b = (d1 + m - a % m) % m;
        let cand = QuadraticPhase { a, b, c: f0 };
        if cand.is_admissible(n) && cand.matches(f) {
            return Some(cand);
        }
    }
    None
}

/// Builds the admissible quadratic representative promised by the valuation
/// criterion, by gluing per-prime-power local quadratics with the CRT.
///
/// Local rules: on odd components the quartic term vanishes and the cubic
/// collapses to a linear term (`X³ ≡ X mod 3` at the 3-adic boundary, `a ≡ 0`
/// above 3); on a 2-adic component with `α ≥ 2` the work happens mod `2^(α+1)`
/// with `X⁴ → X²` and `X³ → X`; for `2 ∥ N` a two-point fit mod 4 suffices.
/// Even `N` glues directly over the moduli `p^α` / `2^(α+1)`; odd `N` glues
/// the odd components mod `N` and then adjusts parities mod 2.
pub fn construct_quadratic_via_crt(qpp: &Qpp, u: u64, q: u64) -> Result<QuadraticPhase> {
    let n = qpp.n();
    let u = u % n;
    if gcd(u, n) != 1 {
        return Err(Error::RootNotUnit { u, n });
    }
    let report = crate::criterion::decide_equivalence(qpp, u, q)?;
    if let Some(p) = report.first_obstruction {
        return Err(Error::CriterionFails(p));
    }

    let (a, b) = (qpp.a(), qpp.b());
    let eps = n % 2;
    let fac = factorize(n)?;

    // Local representatives (A_p, B_p, C_p) mod m_p.
    let mut local_a = Vec::new();
    let mut local_b = Vec::new();
    let mut local_c = Vec::new();
    for &(p, alpha) in fac.factors() {
        if p == 2 && alpha == 1 {
            // two-point fit mod 4: F(0) = 0, F(1) odd
            let v = u * phi_eval(a, b, q, n, 1) % 4;
            debug_assert_eq!(v % 2, 1);
            local_a.push((v, 4));
            local_b.push((0, 4));
            local_c.push((0, 4));
        } else if p == 2 {
            // nu_2(a) >= alpha - 1 makes X^4 -> X^2 and X^3 -> X exact mod 2^(alpha+1)
            let mp = 2u64.pow(alpha + 1);
            let (am, bm, qm) = (a % mp, b % mp, q % mp);
            let aa = (am * am % mp + bm * bm % mp + 2 * qm * am % mp) % mp;
            let bb = (2 * am * bm % mp + 2 * qm * bm % mp) % mp;
            local_a.push((u % mp * aa % mp, mp));
            local_b.push((u % mp * bb % mp, mp));
            local_c.push((0, mp));
        } else {
            // odd p: a vanishes mod p^alpha for p > 3; at p = 3 the boundary
            // valuation turns 2abX^3 into 2abX and kills a^2 X^4
            let mp = p.pow(alpha);
            let (am, bm) = (a % mp, b % mp);
            let e2q = (eps + 2 * (q % mp)) % mp;
            let aa = (bm * bm % mp + e2q * am % mp) % mp;
            let bb = (2 * am % mp * bm % mp + e2q * bm % mp) % mp;
            local_a.push((u % mp * aa % mp, mp));
            local_b.push((u % mp * bb % mp, mp));
            local_c.push((0, mp));
        }
    }

    let out = if n % 2 == 0 {
        // the moduli multiply to 2N, so one CRT pass gives the global triple
        let (ga, _) = crt(&local_a)?;
        let (gb, _) = crt(&local_b)?;
        let (gc, _) = crt(&local_c)?;
        QuadraticPhase { a: ga, b: gb, c: gc }
    } else {
        // glue the odd components mod N, then force the parity conditions
        let (a0, _) = crt(&local_a)?;
        let (b0, _) = crt(&local_b)?;
        let (c0, _) = crt(&local_c)?;
        let ga = a0;
        let (gb, _) = crt(&[(b0, n), (ga % 2, 2)])?;
        let (gc, _) = crt(&[(c0, n), (0, 2)])?;
        QuadraticPhase { a: ga, b: gb, c: gc }
    };
    debug_assert!(out.is_admissible(n));
    Ok(out)
}

/// Per-prime-power verdict of the generic third-difference screen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenEntry {
    pub p: u64,
    pub alpha: u32,
    /// Modulus the third difference was checked against
    /// (`p^α` for odd `p`, `2^(α+1)` for `p = 2`).
    pub modulus: u64,
    pub vanishes: bool,
}

/// Screens an arbitrary polynomial interleaver `P` (coefficients low-to-high
/// over `Z_N`, degree ≤ 8) by the third difference of its lifted phase.
///
/// A non-vanishing entry certifies Zadoff-Chu inequivalence of the
/// interleaved sequence.
pub fn generic_third_difference_screen(
    coeffs: &[u64],
    q: u64,
    n: u64,
) -> Result<Vec<ScreenEntry>> {
    if coeffs.len() > 9 {
        return Err(Error::DegreeTooHigh(coeffs.len() - 1));
    }
    let m = 2 * n;
    let eps = n % 2;
    // G(k) = (P(k) + eps + 2q) P(k) on integer lifts, mod 2N; three extra
    // entries feed the boundary differences
    let table: Vec<u64> = (0..n + 3)
        .map(|k| {
            let mut pk = 0u64;
            for &c in coeffs.iter().rev() {
                pk = (pk * (k % m) + c % m) % m;
            }
            pk * ((pk + eps + 2 * (q % n)) % m) % m
        })
        .collect();
    let d3 = finite_difference(&table, 3, m)?;
    let fac = factorize(n)?;
    let mut out = Vec::new();
    for &(p, alpha) in fac.factors() {
        let modulus = if p == 2 { 2u64.pow(alpha + 1) } else { p.pow(alpha) };
        let vanishes = d3.iter().all(|&v| v % modulus == 0);
        out.push(ScreenEntry { p, alpha, modulus, vanishes });
    }
    Ok(out)
}

/// Test-only oracle: exhaustively scans all `(A, B, C)` in `[0, 2N)³` for an
/// admissible quadratic representative. Feasible only for very small `N`.
pub fn exhaustive_quadratic_scan(f: &LiftedPhase) -> Option<QuadraticPhase> {
    let n = f.n();
    let m = 2 * n;
    for a in 0..m {
        if gcd(a % n, n) != 1 {
            continue;
        }
        for b in 0..m {
            if b % 2 != a * (n % 2) % 2 {
                continue;
            }
            for c in 0..m {
                let cand = QuadraticPhase { a, b, c };
                if cand.matches(f) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Smallest unit of `Z_N` larger than 1, for modest `n`.
pub fn smallest_unit_above_one(n: u64) -> u64 {
    (2..n).find(|&u| gcd(u, n) == 1).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpp::{enumerate_qpps, QppFilter};

    #[test]
    fn phi_eval_known_values() {
        // reduces to the plain ZC phase k(k+1) when a = 0, b = 1
        assert_eq!(phi_eval(0, 1, 0, 5, 3), 2);
        assert_eq!(phi_eval(15, 1, 0, 75, 0), 0);
    }

    #[test]
    fn phi_eval_representative_independent() {
        for n in 3..=60u64 {
            for a in (0..n).step_by(3) {
                for b in (0..n).step_by(2) {
                    for k in 0..n as i64 {
                        assert_eq!(
                            phi_eval(a, b, 1, n, k),
                            phi_eval(a, b, 1, n, k + n as i64)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_third_differences() {
        let m = 10_000u64;
        let squares: Vec<u64> = (0..20u64).map(|k| k * k % m).collect();
        assert!(finite_difference(&squares, 3, m).unwrap().iter().all(|&v| v == 0));

        let cubes: Vec<u64> = (0..20u64).map(|k| k * k % m * k % m).collect();
        assert!(finite_difference(&cubes, 3, m).unwrap().iter().all(|&v| v == 6));

        let fourths: Vec<u64> = (0..20u64).map(|k| k * k % m * k % m * k % m).collect();
        let d3 = finite_difference(&fourths, 3, m).unwrap();
        assert_eq!(d3[0], 36); // 24X + 36 at X = 0
        assert_eq!(d3[1], 60);
    }

    #[test]
    fn difference_order_capped() {
        assert!(finite_difference(&[0, 1, 2], 5, 10).is_err());
    }

    #[test]
    fn invariant_known_values() {
        // 12 * 15 * 46 = 8280 ≡ 30 (mod 150)
        assert_eq!(third_difference_invariant(15, 1, 75, 0, 0), 30);
        for x in 0..20 {
            assert_eq!(third_difference_invariant(0, 7, 30, 2, x), 0);
        }
        for q in [0u64, 1, 2] {
            assert_eq!(
                third_difference_invariant(15, 1, 75, q, 4),
                third_difference_invariant(15, 1, 75, 0, 4)
            );
        }
    }

    #[test]
    fn third_difference_matches_closed_form() {
        for n in 3..=60u64 {
            let m = 2 * n;
            for a in 0..n {
                for b in 0..n {
                    for q in [0u64, 1, 7] {
                        let table: Vec<u64> = (0..(n + 3) as i64)
                            .map(|k| phi_eval(a, b, q, n, k))
                            .collect();
                        let d3 = finite_difference(&table, 3, m).unwrap();
                        for x in 0..n {
                            assert_eq!(
                                d3[x as usize],
                                third_difference_invariant(a, b, n, q, x),
                                "n={n} a={a} b={b} q={q} x={x}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fit_pure_zc_phase() {
        let f = LiftedPhase::new(5, 3, 0, 0, 1).unwrap();
        assert_eq!(
            fit_quadratic_phase(&f),
            Some(QuadraticPhase { a: 3, b: 3, c: 0 })
        );
    }

    #[test]
    fn fit_known_witness_and_obstruction() {
        let f45 = LiftedPhase::new(45, 1, 0, 15, 1).unwrap();
        let fit = fit_quadratic_phase(&f45).expect("N=45 witness is equivalent");
        assert!(fit.is_admissible(45) && fit.matches(&f45));

        let f75 = LiftedPhase::new(75, 1, 0, 15, 1).unwrap();
        assert!(fit_quadratic_phase(&f75).is_none());
    }

    #[test]
    fn fit_agrees_with_exhaustive_scan() {
        for n in 3..=14u64 {
            for q in enumerate_qpps(n, QppFilter::All).unwrap() {
                let f = LiftedPhase::from_qpp(&q, 1, 0).unwrap();
                let fast = fit_quadratic_phase(&f);
                let slow = exhaustive_quadratic_scan(&f);
                assert_eq!(fast.is_some(), slow.is_some(), "n={n} a={} b={}", q.a(), q.b());
                if let Some(t) = fast {
                    assert!(t.matches(&f) && t.is_admissible(n));
                }
            }
        }
    }

    #[test]
    fn crt_construction_matches_phase() {
        let cases = [
            (45u64, 15u64, 1u64, 1u64, 0u64),
            (50, 25, 26, 1, 0),
            (45, 15, 1, 2, 3),
            (9, 3, 1, 1, 0),
            (16, 8, 1, 3, 1),
            (98, 49, 50, 1, 0),
        ];
        for (n, a, b, u, q) in cases {
            let qpp = Qpp::new(n, a, b).unwrap();
            let triple = construct_quadratic_via_crt(&qpp, u, q).unwrap();
            let f = LiftedPhase::from_qpp(&qpp, u, q).unwrap();
            assert!(triple.is_admissible(n), "n={n}");
            assert!(triple.matches(&f), "n={n} a={a} b={b} u={u} q={q}");
        }
    }

    #[test]
    fn crt_construction_mod9_coefficient() {
        // the mod-9 reduction of the N=45 representative has quadratic
        // coefficient ≡ b² ≡ 1 (mod 3)
        let qpp = Qpp::new(45, 15, 1).unwrap();
        let triple = construct_quadratic_via_crt(&qpp, 1, 0).unwrap();
        assert_eq!(triple.a % 3, 1);
    }

    #[test]
    fn crt_construction_rejects_obstructed_input() {
        let qpp = Qpp::new(75, 15, 1).unwrap();
        assert_eq!(
            construct_quadratic_via_crt(&qpp, 1, 0),
            Err(Error::CriterionFails(5))
        );
    }

    #[test]
    fn parity_of_constructed_triple_odd_n() {
        for (n, a, b) in [(45u64, 15u64, 1u64), (27, 9, 1), (9, 3, 2)] {
            let qpp = Qpp::new(n, a, b).unwrap();
            let triple = construct_quadratic_via_crt(&qpp, 1, 0).unwrap();
            let f = LiftedPhase::from_qpp(&qpp, 1, 0).unwrap();
            for k in 0..n {
                assert_eq!(
                    f.values()[k as usize] % 2,
                    triple.eval(n, k as i64) % 2
                );
            }
        }
    }

    #[test]
    fn screen_degree_one_vanishes() {
        for entry in generic_third_difference_screen(&[0, 7], 1, 60).unwrap() {
            assert!(entry.vanishes, "degree <= 1 has zero third difference");
        }
    }

    #[test]
    fn screen_known_obstructions() {
        let entries = generic_third_difference_screen(&[0, 1, 15], 0, 75).unwrap();
        let five = entries.iter().find(|e| e.p == 5).unwrap();
        assert!(!five.vanishes);

        let entries = generic_third_difference_screen(&[0, 1, 5], 0, 25).unwrap();
        assert!(!entries[0].vanishes); // nu_5(12·5·16) = 1 < 2
    }

    #[test]
    fn screen_rejects_high_degree() {
        assert!(generic_third_difference_screen(&[0; 10], 0, 7).is_err());
    }

    #[test]
    fn odd_n_phase_is_even() {
        for n in [5u64, 9, 45, 75] {
            for q in enumerate_qpps(n, QppFilter::All).unwrap().iter().take(20) {
                for k in 0..n as i64 {
                    assert_eq!(phi_eval(q.a(), q.b(), 3, n, k) % 2, 0);
                }
            }
        }
    }
}
