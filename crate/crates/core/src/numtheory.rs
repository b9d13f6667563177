//! Exact arithmetic substrate: Möbius, totient, divisors, ordered
//! factorizations, and arbitrary-precision binomial coefficients.
//!
//! Counts are returned as big integers so no supported magnitude can
//! overflow; small parameters stay machine-width. Functions here panic
//! on out-of-domain arguments (callers own the preconditions), unlike
//! the fallible operations in the rest of the crate.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Möbius function μ(n): 0 when a square divides n, otherwise (-1)^(number
/// of prime factors). Panics if `n == 0`.
pub fn mobius(n: u64) -> i32 {
    assert!(n >= 1, "mobius is undefined at 0");
    let mut rest = n;
    let mut prime_factors = 0u32;
    let mut p = 2u64;
    while p <= rest / p {
        if rest % p == 0 {
            rest /= p;
            if rest % p == 0 {
                return 0;
            }
            prime_factors += 1;
        }
        p += 1;
    }
    if rest > 1 {
        prime_factors += 1;
    }
    if prime_factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient φ(n): the number of 1 <= j <= n with gcd(j, n) = 1.
/// Panics if `n == 0`.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is undefined at 0");
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p <= rest / p {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if rest > 1 {
        phi = phi / rest * (rest - 1);
    }
    phi
}

/// All positive divisors of n in ascending order. Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors are undefined at 0");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p <= n / p {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Binomial coefficient C(n, k), exact at any magnitude. Returns 0 when
/// `k > n`.
///
/// ```
/// use necklaces::numtheory::binomial;
/// assert_eq!(binomial(20, 10).to_string(), "184756");
/// ```
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    // after step i the value is C(n - k + i, i), so each division is exact
    for i in 1..=k {
        result *= n - k + i;
        result /= i;
    }
    result
}

/// base^exp as a big integer.
pub fn big_pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Number of ordered t-tuples of integers >= 2 whose product is `a`
/// (0 whenever t >= a, since each factor at least doubles the product).
/// Memoized per call. Panics if `a <= 1` or `t == 0`.
pub fn ordered_factorizations(a: u64, t: u64) -> BigUint {
    assert!(a >= 2, "ordered factorizations need a >= 2");
    assert!(t >= 1, "ordered factorizations need t >= 1");
    let mut memo = HashMap::new();
    tau(a, t, &mut memo)
}

fn tau(a: u64, t: u64, memo: &mut HashMap<(u64, u64), BigUint>) -> BigUint {
    if a == 1 {
        return BigUint::zero();
    }
    if t == 1 {
        return BigUint::one();
    }
    if t >= a {
        return BigUint::zero();
    }
    if let Some(v) = memo.get(&(a, t)) {
        return v.clone();
    }
    // peel the first factor q > 1; the remaining t-1 factors multiply to a/q
    let mut total = BigUint::zero();
    for q in divisors(a) {
        if q > 1 {
            total += tau(a / q, t - 1, memo);
        }
    }
    memo.insert((a, t), total.clone());
    total
}

/// The alternating sum over tuple lengths of ordered factorization
/// counts, sum_{t=1}^{a-1} (-1)^t tau(a, t). This is an independent route
/// to μ(a); the identity verifiers compare it against [`mobius`].
/// Panics if `a <= 1`.
pub fn mobius_from_factorizations(a: u64) -> BigInt {
    assert!(a >= 2, "alternating factorization sum needs a >= 2");
    let mut memo = HashMap::new();
    let mut sum = BigInt::zero();
    for t in 1..a {
        if t >= a {
            break;
        }
        let term = BigInt::from(tau(a, t, &mut memo));
        if t % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    sum
}

/// sum_{s | q} μ(s)/s as an exact rational. This is an independent route
/// to φ(q)/q. Panics if `q <= 1`.
pub fn totient_ratio_from_mobius(q: u64) -> BigRational {
    assert!(q >= 2, "Mobius divisor quotient sum needs q >= 2");
    let mut sum = BigRational::zero();
    for s in divisors(q) {
        sum += BigRational::new(BigInt::from(mobius(s)), BigInt::from(s));
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), m, "mobius({})", i + 1);
        }
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(210), 1);
        assert_eq!(mobius(49), 0);
    }

    #[test]
    #[should_panic(expected = "undefined at 0")]
    fn mobius_rejects_zero() {
        mobius(0);
    }

    // independent totient: count residues coprime to n directly
    fn totient_by_gcd_count(n: u64) -> u64 {
        (1..=n).filter(|&j| gcd(j, n) == 1).count() as u64
    }

    #[test]
    fn totient_matches_gcd_count() {
        assert_eq!(totient(6), 2);
        assert_eq!(totient(1), 1);
        for n in 1..=500 {
            assert_eq!(totient(n), totient_by_gcd_count(n), "totient({n})");
        }
    }

    #[test]
    #[should_panic(expected = "undefined at 0")]
    fn totient_rejects_zero() {
        totient(0);
    }

    #[test]
    fn divisors_are_sorted_and_complete() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(13), vec![1, 13]);
        for n in 1..=300u64 {
            let ds = divisors(n);
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(ds, brute, "divisors({n})");
        }
    }

    #[test]
    fn mobius_divisor_sum_is_unit_indicator() {
        for n in 1..=500u64 {
            let sum: i64 = divisors(n).into_iter().map(|d| mobius(d) as i64).sum();
            assert_eq!(
                sum,
                if n == 1 { 1 } else { 0 },
                "sum of mobius over divisors of {n}"
            );
        }
    }

    #[test]
    fn totient_divisor_sum_is_n() {
        for n in 1..=500u64 {
            let sum: u64 = divisors(n).into_iter().map(totient).sum();
            assert_eq!(sum, n, "sum of totient over divisors of {n}");
        }
    }

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u64> = (0..=60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn binomial_agrees_with_pascal_recomputation() {
        // independently rebuilt Pascal triangle
        let rows = 61usize;
        let mut pascal = vec![vec![BigUint::zero(); rows]; rows];
        for n in 0..rows {
            pascal[n][0] = BigUint::one();
            for k in 1..=n {
                let up_left = pascal[n - 1][k - 1].clone();
                let up = if k < n {
                    pascal[n - 1][k].clone()
                } else {
                    BigUint::zero()
                };
                pascal[n][k] = up_left + up;
            }
        }
        for n in 0..rows {
            for k in 0..rows {
                let expect = if k <= n {
                    pascal[n][k].clone()
                } else {
                    BigUint::zero()
                };
                assert_eq!(binomial(n as u64, k as u64), expect, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_known_values() {
        assert_eq!(binomial(20, 10), BigUint::from(184756u64));
        assert_eq!(binomial(4, 2), BigUint::from(6u64));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
        // C(120, 60) must be exact at full precision
        let big = binomial(120, 60);
        assert_eq!(big.to_string(), "96614908840363322603893139521372656");
    }

    // brute-force tau: cartesian product over divisor components >= 2
    fn tau_by_tuple_enumeration(a: u64, t: u64) -> u64 {
        let parts: Vec<u64> = divisors(a).into_iter().filter(|&d| d >= 2).collect();
        let mut stack = vec![(1u64, 0u64)]; // (product so far, components chosen)
        let mut count = 0u64;
        while let Some((prod, chosen)) = stack.pop() {
            if chosen == t {
                if prod == a {
                    count += 1;
                }
                continue;
            }
            for &q in &parts {
                if prod * q <= a && a % (prod * q) == 0 {
                    stack.push((prod * q, chosen + 1));
                }
            }
        }
        count
    }

    #[test]
    fn ordered_factorizations_match_tuple_enumeration() {
        assert_eq!(ordered_factorizations(12, 2), BigUint::from(4u64)); // (2,6),(3,4),(4,3),(6,2)
        assert_eq!(ordered_factorizations(4, 3), BigUint::zero());
        assert_eq!(ordered_factorizations(2, 1), BigUint::one());
        for a in 2..=60u64 {
            for t in 1..=6u64 {
                assert_eq!(
                    ordered_factorizations(a, t),
                    BigUint::from(tau_by_tuple_enumeration(a, t)),
                    "tau({a},{t})"
                );
            }
        }
    }

    #[test]
    #[should_panic(expected = "a >= 2")]
    fn ordered_factorizations_reject_one() {
        ordered_factorizations(1, 1);
    }

    #[test]
    #[should_panic(expected = "t >= 1")]
    fn ordered_factorizations_reject_zero_tuples() {
        ordered_factorizations(6, 0);
    }

    #[test]
    fn alternating_factorization_sum_equals_mobius() {
        // -tau(2,1) = -1 = mobius(2); a = 4 gives -1 + 1 = 0; a = 6 gives -1 + 2 = 1
        assert_eq!(mobius_from_factorizations(2), BigInt::from(-1));
        assert_eq!(mobius_from_factorizations(4), BigInt::zero());
        assert_eq!(mobius_from_factorizations(6), BigInt::one());
        for a in 2..=200u64 {
            assert_eq!(
                mobius_from_factorizations(a),
                BigInt::from(mobius(a)),
                "alternating sum at {a}"
            );
        }
    }

    #[test]
    fn mobius_quotient_sum_equals_totient_ratio() {
        assert_eq!(
            totient_ratio_from_mobius(2),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
        assert_eq!(
            totient_ratio_from_mobius(6),
            BigRational::new(BigInt::one(), BigInt::from(3))
        );
        for q in 2..=500u64 {
            assert_eq!(
                totient_ratio_from_mobius(q),
                BigRational::new(BigInt::from(totient(q)), BigInt::from(q)),
                "quotient sum at {q}"
            );
        }
    }

    #[test]
    fn big_pow_matches_repeated_multiplication() {
        assert_eq!(big_pow(2, 10), BigUint::from(1024u64));
        assert_eq!(big_pow(3, 0), BigUint::one());
        assert_eq!(big_pow(10, 20).to_string(), "100000000000000000000");
    }
}
