//! Small integer utilities: primality, binomials, integer roots, seeds.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Deterministic Miller-Rabin for u64 (the standard 7-base certificate).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Iterator over primes 2, 3, 5, ... via trial Miller-Rabin.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime_u64(n))
}

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Binomial as u64; panics on overflow (callers stay in desk-scale ranges).
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    use num_traits::ToPrimitive;
    binomial(n, k).to_u64().expect("binomial overflow")
}

/// Largest x with x^k <= n.
pub fn nth_root_floor(n: &BigUint, k: u32) -> BigUint {
    if n.is_zero() || k == 1 {
        return n.clone();
    }
    let bits = n.bits();
    let mut hi = BigUint::one() << (bits / k as u64 + 1);
    let mut lo = BigUint::zero();
    while &lo + 1u32 < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if mid.pow(k) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest x with x^k >= n.
pub fn nth_root_ceil(n: &BigUint, k: u32) -> BigUint {
    let f = nth_root_floor(n, k);
    if f.pow(k) == *n {
        f
    } else {
        f + 1u32
    }
}

/// Exact ceiling of a/b for positive big integers.
pub fn div_ceil_big(a: &BigInt, b: &BigInt) -> BigInt {
    assert!(b.is_positive());
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if r.is_zero() || a.is_negative() {
        q
    } else {
        q + 1
    }
}

/// splitmix64 step, used to derive labeled deterministic seed streams.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// FNV-1a over bytes, for deterministic labeled seeds.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Derive a 32-byte RNG seed from a master seed, a label and an attempt index.
pub fn derive_seed(master: u64, label: &str, attempt: u64) -> [u8; 32] {
    let mut state = master ^ fnv1a(label.as_bytes()) ^ attempt.wrapping_mul(0x9E3779B97F4A7C15);
    let mut out = [0u8; 32];
    for chunk in out.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let ps: Vec<u64> = primes().take(10).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_u64(4, 2), 6);
        assert_eq!(binomial_u64(6, 3), 20);
        assert_eq!(binomial_u64(12, 6), 924);
    }

    #[test]
    fn roots() {
        let n = BigUint::from(1000u32);
        assert_eq!(nth_root_floor(&n, 3), BigUint::from(10u32));
        assert_eq!(nth_root_ceil(&BigUint::from(1001u32), 3), BigUint::from(11u32));
        assert_eq!(nth_root_ceil(&BigUint::from(1000u32), 3), BigUint::from(10u32));
    }
}
