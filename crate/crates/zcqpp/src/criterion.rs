//! The local valuation criterion and its global consequences.
//!
//! Equivalence of a QPP-interleaved Zadoff-Chu sequence to an ordinary one is
//! decided per prime power `p^α ∥ N` by comparing the capped valuation of the
//! quadratic coefficient against the threshold
//!
//! ```text
//! η(p, α) = 0 (p = 2, α = 1)   α − 1 (p = 2, α ≥ 2)
//!           α − 1 (p = 3)       α (p > 3)
//! ```
//!
//! The divisor calculus packages the same information as divisors of `N`:
//! `M_N` is the divisibility forced on `a` by QPP validity, `E_N = ∏ p^η` is
//! the divisibility equivalent to Zadoff-Chu equivalence, and an equivalent
//! nonzero QPP exists iff `lcm(M_N, E_N) < N`.

use crate::arith::{crt, factorize, gcd, nu_residue, nu_u128, Valuation};
use crate::qpp::Qpp;
use crate::{Error, Result};
use serde::Serialize;

/// The per-prime-power valuation threshold `η(p, α)`.
pub fn eta(p: u64, alpha: u32) -> u32 {
    match (p, alpha) {
        (2, 1) => 0,
        (2, _) => alpha - 1,
        (3, _) => alpha - 1,
        _ => alpha,
    }
}

/// The QPP divisibility exponent `μ(p, α)`.
pub fn mu(p: u64, alpha: u32) -> u32 {
    match (p, alpha) {
        (2, 1) => 0,
        _ => 1,
    }
}

/// `λ(p, α) = max(μ, η)`, the exponent of `p` in `L_N`.
pub fn lambda(p: u64, alpha: u32) -> u32 {
    mu(p, alpha).max(eta(p, alpha))
}

/// One local threshold row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Threshold {
    pub p: u64,
    pub alpha: u32,
    pub eta: u32,
}

/// Outcome of the local valuation criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equivalent,
    Inequivalent,
}

/// Per-prime row of a criterion report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CriterionRow {
    pub p: u64,
    pub alpha: u32,
    /// Capped valuation of `a` in `Z_{p^α}`.
    pub nu_a: u32,
    pub eta: u32,
    pub pass: bool,
}

/// Full report of the valuation criterion for one QPP.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub rows: Vec<CriterionRow>,
    pub verdict: Verdict,
    pub first_obstruction: Option<u64>,
}

/// Applies the valuation criterion to a validated QPP.
///
/// The verdict is independent of the root `u` and shift `q`; they are
/// accepted only so the caller's context is validated (`u` must be a unit).
pub fn decide_equivalence(qpp: &Qpp, u: u64, _q: u64) -> Result<CriterionReport> {
    let n = qpp.n();
    if gcd(u % n, n) != 1 {
        return Err(Error::RootNotUnit { u: u % n, n });
    }
    let a = qpp.a();
    let fac = factorize(n)?;
    let mut rows = Vec::new();
    let mut first_obstruction = None;
    for &(p, alpha) in fac.factors() {
        let nu_a = nu_residue(p, alpha, a % p.pow(alpha));
        let threshold = eta(p, alpha);
        let pass = nu_a >= threshold;
        if !pass && first_obstruction.is_none() {
            first_obstruction = Some(p);
        }
        rows.push(CriterionRow { p, alpha, nu_a, eta: threshold, pass });
    }
    let verdict = if first_obstruction.is_none() {
        Verdict::Equivalent
    } else {
        Verdict::Inequivalent
    };
    Ok(CriterionReport { n, a, b: qpp.b(), rows, verdict, first_obstruction })
}

/// The divisors `M_N`, `E_N`, `L_N` with their exponent tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u64,
    pub m_n: u64,
    pub e_n: u64,
    pub l_n: u64,
    /// `(p, α, μ(p,α), λ(p,α))` per prime power of `N`.
    pub exponents: Vec<(u64, u32, u32, u32)>,
}

/// Computes `M_N = ∏ p^μ`, `E_N = ∏ p^η`, `L_N = ∏ p^λ`.
///
/// `E_N` is cross-checked against its closed form
/// `N / (2 if 2|N) / (3 if 3|N)`.
pub fn divisor_profile(n: u64) -> Result<DivisorProfile> {
    if !(3..=crate::arith::MAX_N).contains(&n) {
        return Err(Error::ModulusOutOfRange(n));
    }
    let fac = factorize(n)?;
    let mut m_n = 1u64;
    let mut e_n = 1u64;
    let mut l_n = 1u64;
    let mut exponents = Vec::new();
    for &(p, alpha) in fac.factors() {
        m_n *= p.pow(mu(p, alpha));
        e_n *= p.pow(eta(p, alpha));
        l_n *= p.pow(lambda(p, alpha));
        exponents.push((p, alpha, mu(p, alpha), lambda(p, alpha)));
    }
    let closed = n / if n % 2 == 0 { 2 } else { 1 } / if n % 3 == 0 { 3 } else { 1 };
    assert_eq!(e_n, closed, "E_N closed form mismatch at N={n}");
    Ok(DivisorProfile { n, m_n, e_n, l_n, exponents })
}

/// Chooses `b` by CRT so that `(a, b)` is a valid QPP mod `n`.
///
/// Locally: `b ≡ 1` on odd components and high 2-adic components; at
/// `2 ∥ N` the parity of `b` is opposite to that of `a`.
fn witness_b_for(n: u64, a: u64) -> Result<u64> {
    let fac = factorize(n)?;
    let mut congruences = Vec::new();
    for &(p, alpha) in fac.factors() {
        let pa = p.pow(alpha);
        if p == 2 && alpha == 1 {
            congruences.push(((a + 1) % 2, 2));
        } else {
            congruences.push((1, pa));
        }
    }
    Ok(crt(&congruences)?.0)
}

/// The lcm test: a nonzero normalized QPP with Zadoff-Chu-equivalent
/// interleaving exists iff `L_N < N`; the witness is `a = L_N`.
pub fn exists_equivalent_nonzero_qpp(n: u64) -> Result<(bool, Option<Qpp>)> {
    let profile = divisor_profile(n)?;
    if profile.l_n >= n {
        return Ok((false, None));
    }
    let a = profile.l_n;
    let b = witness_b_for(n, a)?;
    Ok((true, Some(Qpp::new(n, a, b)?)))
}

/// Classification of a length over all nonzero normalized QPPs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LengthClass {
    /// The nonzero QPP set is nonempty and every member is inequivalent:
    /// `N` odd, `9 ∤ N`, and `p² | N` for some prime `p ≥ 5`.
    AllInequivalentNonvacuous,
    /// Some nonzero QPP interleaving is Zadoff-Chu-equivalent; carries a
    /// constructed witness.
    HasEquivalentWitness(Qpp),
    /// The nonzero QPP set is empty.
    Vacuous,
}

/// Classifies `N` against the corrected nonzero-QPP boundary.
pub fn classify_length_allqpp(n: u64) -> Result<LengthClass> {
    if !(3..=crate::arith::MAX_N).contains(&n) {
        return Err(Error::ModulusOutOfRange(n));
    }
    let fac = factorize(n)?;
    let odd = n % 2 == 1;
    let no_nine = n % 9 != 0;
    let has_repeated_big = fac
        .factors()
        .iter()
        .any(|&(p, alpha)| p >= 5 && alpha >= 2);
    if odd && no_nine {
        return Ok(if has_repeated_big {
            LengthClass::AllInequivalentNonvacuous
        } else {
            // every odd prime factor is squarefree apart from a bare 3, so
            // QPP validity forces N | a
            LengthClass::Vacuous
        });
    }
    let qpp = if !odd {
        let a = n / 2;
        Qpp::new(n, a, witness_b_for(n, a)?)?
    } else {
        Qpp::new(n, n / 3, 1)?
    };
    Ok(LengthClass::HasEquivalentWitness(qpp))
}

/// Classification of a length over irreducible QPPs (`gcd(N, 2a) < N`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrrLengthClass {
    /// Irreducible QPPs exist and all are inequivalent: `9 ∤ N` and
    /// (`8 | N` or `p² | N` for some odd `p`).
    AllIrrInequivalentNonvacuous,
    /// `9 | N`: the witness `a = N/3, b = 1` is irreducible and equivalent.
    HasEquivalentIrrWitness(Qpp),
    /// No irreducible QPP exists mod `N`.
    VacuousIrr,
}

/// Classifies `N` against the irreducible-QPP boundary.
pub fn classify_length_irr(n: u64) -> Result<IrrLengthClass> {
    if !(3..=crate::arith::MAX_N).contains(&n) {
        return Err(Error::ModulusOutOfRange(n));
    }
    let fac = factorize(n)?;
    let nonempty = fac
        .factors()
        .iter()
        .any(|&(p, alpha)| if p == 2 { alpha >= 3 } else { alpha >= 2 });
    if !nonempty {
        return Ok(IrrLengthClass::VacuousIrr);
    }
    if n % 9 == 0 {
        let qpp = Qpp::new(n, n / 3, 1)?;
        debug_assert!(qpp.is_irreducible());
        return Ok(IrrLengthClass::HasEquivalentIrrWitness(qpp));
    }
    Ok(IrrLengthClass::AllIrrInequivalentNonvacuous)
}

/// One per-prime-power row of the `D_{a,b}` screen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScreenRow {
    pub p: u64,
    pub alpha: u32,
    /// Set when the third-difference valuation certifies inequivalence.
    pub flagged: bool,
}

/// The quick screening rule on `D_{a,b} = 12a(3a + b)`, computed as an
/// ordinary integer before taking valuations.
///
/// Flags `p > 3` when `ν_p(D) < α`, `p = 3` when `ν_3(D) < α`, and `p = 2`
/// when `ν_2(D) < α + 1`. For valid QPPs the flag set agrees with
/// [`decide_equivalence`]; for arbitrary `(a, b)` a raised flag still
/// certifies inequivalence but an empty screen is not conclusive.
pub fn screen(a: u64, b: u64, n: u64) -> Result<Vec<ScreenRow>> {
    let d: u128 = 12 * a as u128 * (3 * a as u128 + b as u128);
    let fac = factorize(n)?;
    let mut rows = Vec::new();
    for &(p, alpha) in fac.factors() {
        let bound = if p == 2 { alpha + 1 } else { alpha };
        let flagged = match nu_u128(p, d) {
            Valuation::Infinite => false,
            Valuation::Finite(v) => v < bound,
        };
        rows.push(ScreenRow { p, alpha, flagged });
    }
    Ok(rows)
}
