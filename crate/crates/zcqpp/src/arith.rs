//! Exact integer and residue-ring primitives.
//!
//! Everything here works on `u64` values with moduli at most `2^31`, so all
//! intermediate products fit in 64 bits after reduction. Residues are always
//! stored as canonical representatives in `[0, modulus)`.

use crate::{Error, Result};

/// Upper bound on supported integers (desk scale; trial division suffices).
pub const MAX_N: u64 = 1 << 31;

/// Prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and every exponent is at least 1, so the
/// product of `p^alpha` over the factors recomposes `n` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The `(p, alpha)` pairs in increasing prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The exponent of `p` in `n`, zero if `p` does not divide `n`.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, alpha)| alpha)
    }
}

/// A p-adic valuation, with `Infinite` reserved for the zero argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// `min(self, cap)`, mapping `Infinite` to the cap.
    pub fn capped(self, cap: u32) -> u32 {
        match self {
            Valuation::Finite(v) => v.min(cap),
            Valuation::Infinite => cap,
        }
    }
}

/// Factor `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut alpha = 0u32;
            while rest % p == 0 {
                rest /= p;
                alpha += 1;
            }
            factors.push((p, alpha));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// The p-adic valuation of an integer, with `nu(p, 0) = Infinite`.
pub fn nu(p: u64, x: i64) -> Valuation {
    debug_assert!(p >= 2);
    if x == 0 {
        return Valuation::Infinite;
    }
    let mut m = x.unsigned_abs();
    let mut v = 0u32;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    Valuation::Finite(v)
}

/// Valuation of a 128-bit integer (used for the screening discriminant).
pub fn nu_u128(p: u64, x: u128) -> Valuation {
    if x == 0 {
        return Valuation::Infinite;
    }
    let p = p as u128;
    let mut m = x;
    let mut v = 0u32;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    Valuation::Finite(v)
}

/// Capped valuation of a residue `a` modulo `p^alpha`.
///
/// Returns `min(nu(p, a), alpha)`; the zero residue yields `alpha`, matching
/// the convention that `nu_p(a) >= alpha` means `a ≡ 0 (mod p^alpha)`.
pub fn nu_residue(p: u64, alpha: u32, a: u64) -> u32 {
    nu(p, a as i64).capped(alpha)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Modular inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Chinese remainder theorem for pairwise coprime moduli.
///
/// Returns `(residue, modulus)` with the canonical representative in
/// `[0, product)`. The empty list yields `0 mod 1`.
pub fn crt(congruences: &[(u64, u64)]) -> Result<(u64, u64)> {
    let mut x = 0u64;
    let mut m = 1u64;
    for &(r, modulus) in congruences {
        if gcd(m, modulus) != 1 {
            return Err(Error::NonCoprimeModuli(m, modulus));
        }
        // solve x' ≡ x (mod m), x' ≡ r (mod modulus)
        let inv = mod_inverse(m % modulus, modulus).expect("coprime moduli have an inverse");
        let diff = (r + modulus - x % modulus) % modulus;
        let t = (diff as u128 * inv as u128 % modulus as u128) as u64;
        x += m * t;
        m *= modulus;
        x %= m;
    }
    Ok((x, m))
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let fac = factorize(n).expect("n >= 1");
    let mut phi = 1u64;
    for &(p, alpha) in fac.factors() {
        phi *= p.pow(alpha - 1) * (p - 1);
    }
    phi
}

/// Product of the distinct primes dividing `n`; `radical(1) = 1`.
pub fn radical(n: u64) -> u64 {
    let fac = factorize(n).expect("n >= 1");
    fac.factors().iter().map(|&(p, _)| p).product()
}
