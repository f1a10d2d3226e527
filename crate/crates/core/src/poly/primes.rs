//! Small prime utilities for choosing color generators.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// The `k` smallest primes strictly greater than `floor`.
pub fn primes_above(floor: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    let mut candidate = floor + 1;
    while out.len() < k {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

pub fn first_primes(k: usize) -> Vec<u64> {
    primes_above(1, k)
}

/// Largest prime dividing `n`, or 1 for `n <= 1`.
pub fn largest_prime_factor(mut n: u64) -> u64 {
    let mut largest = 1;
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p) {
            largest = p;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        largest = n;
    }
    largest
}
