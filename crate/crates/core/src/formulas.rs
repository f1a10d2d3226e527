//! Closed-form minimum percolating set sizes, the two-sided bound for
//! `m(K_n^d, r)`, and exact lattice-point counting for weighted simplices.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, is_positive, pow, Rational};

/// Default cap on the number of enumeration steps in [`count_weighted_simplex`].
pub const DEFAULT_COUNT_BUDGET: u64 = 50_000_000;

/// `C(n, k)`. Panics on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc
            .checked_mul(u128::from(n - i))
            .expect("binomial overflow")
            / u128::from(i + 1);
    }
    acc
}

pub fn ceil_half(r: usize) -> usize {
    r.div_ceil(2)
}

/// `m(K_n, r) = min{n, r}`.
pub fn m_complete(n: usize, r: usize) -> usize {
    n.min(r)
}

/// `m(K_n^2, r)`: `n^2` when `n <= ceil(r/2)` (no vertex can ever be
/// activated), otherwise `floor((r+1)^2 / 4)`.
pub fn m_hamming_dim2(n: usize, r: usize) -> u128 {
    if n <= ceil_half(r) {
        (n as u128) * (n as u128)
    } else {
        let r1 = r as u128 + 1;
        r1 * r1 / 4
    }
}

/// `m_e(K_n^d, r) = C(d+r, d+1)`, valid for `n >= r + 1`.
pub fn me_hamming(n: usize, r: usize, d: usize) -> Result<u128> {
    if d == 0 {
        return Err(Error::precondition("dimension d must be at least 1"));
    }
    if n <= r {
        return Err(Error::precondition(format!(
            "star weak saturation formula needs n >= r + 1, got n={n}, r={r}"
        )));
    }
    Ok(binomial((d + r) as u64, (d + 1) as u64))
}

/// `m(L(K_n), r)`: `floor((r+2)^2 / 8)` when `n >= ceil(r/2) + 2`, and all
/// `C(n, 2)` edges otherwise.
pub fn m_line_complete(n: usize, r: usize) -> Result<u128> {
    if n < 2 {
        return Err(Error::precondition(format!("L(K_n) needs n >= 2, got n={n}")));
    }
    if n >= ceil_half(r) + 2 {
        let r2 = r as u128 + 2;
        Ok(r2 * r2 / 8)
    } else {
        Ok(binomial(n as u64, 2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingBounds {
    pub lower: Rational,
    pub upper: Rational,
}

/// `(d-2)/(d-1)`, the weight on the trailing coordinates of the carved region.
pub fn delta(d: usize) -> Rational {
    Rational::new(BigInt::from(d as i64 - 2), BigInt::from(d as i64 - 1))
}

/// Two-sided bound on `m(K_n^d, r)` for `n >= r + 1`, `d >= 2`, `r >= 1`:
///
/// lower = `C(d+r, d+1) / r`,
/// upper = `((r + 2d - 1)^d - delta^2 (r - 2)^d) / (2 d!)` with `delta = (d-2)/(d-1)`.
pub fn m_hamming_bounds(n: usize, r: usize, d: usize) -> Result<HammingBounds> {
    if d < 2 {
        return Err(Error::precondition("bounds need d >= 2"));
    }
    if r == 0 {
        return Err(Error::precondition("bounds need r >= 1"));
    }
    if n <= r {
        return Err(Error::precondition(format!(
            "bounds are proven only for n >= r + 1, got n={n}, r={r}"
        )));
    }
    let lower = Rational::new(
        BigInt::from(binomial((d + r) as u64, (d + 1) as u64)),
        BigInt::from(r),
    );
    let dl = delta(d);
    let big = pow(&int((r + 2 * d - 1) as i64), d);
    let small = pow(&int(r as i64 - 2), d);
    let factorial: BigInt = (1..=d as u64).map(BigInt::from).product();
    let upper = (big - &dl * &dl * small) / Rational::from_integer(2 * factorial);
    Ok(HammingBounds { lower, upper })
}

/// Number of nonnegative integer points `x` with `a . x <= b`.
///
/// Every `a_i` must be positive. `budget` caps the enumeration steps.
pub fn count_weighted_simplex(a: &[Rational], b: &Rational, budget: u64) -> Result<u128> {
    if let Some(bad) = a.iter().find(|x| !is_positive(x)) {
        return Err(Error::precondition(format!("weights must be positive, got {bad}")));
    }
    if b < &Rational::zero() {
        return Ok(0);
    }
    let mut steps = 0u64;
    count_rec(a, b.clone(), &mut steps, budget)
}

fn count_rec(a: &[Rational], b: Rational, steps: &mut u64, budget: u64) -> Result<u128> {
    *steps += 1;
    if *steps > budget {
        return Err(Error::ResourceLimit {
            what: "simplex enumeration steps",
            requested: u128::from(*steps),
            limit: u128::from(budget),
        });
    }
    match a {
        [] => Ok(1),
        [last] => {
            let top = (b / last).floor().to_integer();
            Ok(top.to_u128().expect("count fits in u128") + 1)
        }
        [first, rest @ ..] => {
            let mut total = 0u128;
            let mut remaining = b;
            while remaining >= Rational::zero() {
                total += count_rec(rest, remaining.clone(), steps, budget)?;
                remaining -= first;
            }
            Ok(total)
        }
    }
}

/// Bounds `(b^k / (k! prod a), (sum a + b)^k / (k! prod a))` on the count
/// returned by [`count_weighted_simplex`], valid when `b >= min a_i`.
pub fn beged_dov_bounds(a: &[Rational], b: &Rational) -> (Rational, Rational) {
    let k = a.len();
    let factorial: BigInt = (1..=k as u64).map(BigInt::from).product();
    let denom: Rational = a.iter().cloned().product::<Rational>() * Rational::from_integer(factorial);
    let sum: Rational = a.iter().cloned().sum();
    (pow(b, k) / &denom, pow(&(sum + b), k) / denom)
}
