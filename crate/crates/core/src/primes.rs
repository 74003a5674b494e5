use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&p| is_prime(p)).collect()
}

/// Prime divisors of `|n|`; empty for `0` and `±1`.
pub fn prime_divisors(n: &BigInt) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut m = n.abs();
    if m.is_zero() {
        return out;
    }
    if let Some(small) = m.to_u64() {
        let mut m = small;
        let mut d = 2u64;
        while d.saturating_mul(d) <= m {
            while m % d == 0 {
                out.insert(d);
                m /= d;
            }
            d += 1;
        }
        if m > 1 {
            out.insert(m);
        }
        return out;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        while (&m % &d).is_zero() {
            out.insert(d.to_u64().expect("trial divisor fits in u64"));
            m = m.div_floor(&d);
        }
        d += BigInt::one();
    }
    if m > BigInt::one() {
        // a cofactor this large never occurs for boundary-type matrices
        out.insert(m.to_u64().unwrap_or(u64::MAX));
    }
    out
}

/// Prime-power factorization of a positive integer, as `(p, p^k)` pairs.
pub fn prime_power_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            let mut q = 1;
            while m % d == 0 {
                q *= d;
                m /= d;
            }
            out.push(q);
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}
