//! Closed-form counts for subsets of Z_k classified by exact rotation
//! period, fixed-density necklaces, and aperiodic (Lyndon) necklaces.
//!
//! Every formula divides an integer divisor sum by a group order; the
//! divisions are performed exactly and a nonzero remainder panics, since
//! it would falsify the counting theorem behind the formula. The
//! brute-force routes in `oracle` and the definitional sums here give
//! independent second opinions on every value.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{big_pow, binomial, divisors, gcd, mobius, totient};

fn check_density(r: u64, k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("modulus k must be at least 1"));
    }
    if r < 1 || r > k {
        return Err(Error::domain(format!(
            "density must satisfy 1 <= r <= k; got r = {r}, k = {k}"
        )));
    }
    Ok(())
}

fn check_length_at_least_two(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::domain(format!(
            "word length must be at least 2; got {k}"
        )));
    }
    Ok(())
}

fn exact_div(numerator: BigUint, divisor: u64, context: &str) -> BigUint {
    let (q, rem) = numerator.div_rem(&BigUint::from(divisor));
    assert!(
        rem.is_zero(),
        "{context}: {numerator} is not divisible by {divisor}"
    );
    q
}

fn nonnegative(sum: BigInt, context: &str) -> BigUint {
    match sum.to_biguint() {
        Some(v) => v,
        None => panic!("{context}: inclusion-exclusion total {sum} is negative"),
    }
}

/// Number of r-element subsets of Z_k whose exact rotation period is n.
///
/// Zero unless n divides k and d = k/n divides r; otherwise, with
/// m = r/d, equals sum over s | gcd(n, m) of mu(s) * C(n/s, m/s).
pub fn exact_period_subset_count(n: u64, r: u64, k: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("period n must be at least 1"));
    }
    check_density(r, k)?;
    if k % n != 0 {
        return Ok(BigUint::zero());
    }
    let d = k / n;
    if r % d != 0 {
        return Ok(BigUint::zero());
    }
    let m = r / d;
    let mut sum = BigInt::zero();
    for s in divisors(gcd(n, m)) {
        match mobius(s) {
            0 => {}
            1 => sum += BigInt::from(binomial(n / s, m / s)),
            _ => sum -= BigInt::from(binomial(n / s, m / s)),
        }
    }
    Ok(nonnegative(sum, "exact-period subset count"))
}

/// Number of rotation classes of r-element subsets of Z_k with exact
/// period n. Each class has exactly n members, so this is the subset
/// count divided (exactly) by n.
pub fn period_class_count(n: u64, r: u64, k: u64) -> Result<BigUint> {
    let subsets = exact_period_subset_count(n, r, k)?;
    Ok(exact_div(subsets, n, "period class count"))
}

/// Number of rotation classes of r-element subsets of Z_k across all
/// periods (binary necklaces of length k with r ones):
/// (1/k) * sum over s | gcd(k, r) of phi(s) * C(k/s, r/s).
pub fn fixed_density_necklace_count(r: u64, k: u64) -> Result<BigUint> {
    check_density(r, k)?;
    let mut sum = BigUint::zero();
    for s in divisors(gcd(k, r)) {
        sum += binomial(k / s, r / s) * BigUint::from(totient(s));
    }
    Ok(exact_div(sum, k, "fixed-density necklace count"))
}

/// The same fixed-density class total assembled period by period:
/// sum over periods n (with n | k and k/n | r) of the class counts.
/// Kept separate from the closed form so the two routes stay
/// independently checkable.
pub fn fixed_density_definitional(r: u64, k: u64) -> Result<BigUint> {
    check_density(r, k)?;
    let mut total = BigUint::zero();
    for n in divisors(k) {
        total += period_class_count(n, r, k)?;
    }
    Ok(total)
}

/// Number of binary aperiodic necklaces (equivalently, binary Lyndon
/// words) of length k >= 2: (1/k) * sum over s | k of mu(s) * 2^(k/s).
pub fn aperiodic_binary_count(k: u64) -> Result<BigUint> {
    check_length_at_least_two(k)?;
    let mut sum = BigInt::zero();
    for s in divisors(k) {
        match mobius(s) {
            0 => {}
            1 => sum += BigInt::from(big_pow(2, k / s)),
            _ => sum -= BigInt::from(big_pow(2, k / s)),
        }
    }
    let total = nonnegative(sum, "aperiodic binary count");
    Ok(exact_div(total, k, "aperiodic binary count"))
}

/// Number of full-period rotation classes of length k >= 2 summed over
/// every density r = 1..k; the definitional route to the aperiodic
/// count.
pub fn full_period_class_total(k: u64) -> Result<BigUint> {
    check_length_at_least_two(k)?;
    let mut total = BigUint::zero();
    for r in 1..=k {
        total += period_class_count(k, r, k)?;
    }
    Ok(total)
}

/// Number of binary necklaces of length k >= 2 in closed form:
/// (1/k) * sum over s | k of phi(s) * 2^(k/s).
pub fn binary_necklace_closed_form(k: u64) -> Result<BigUint> {
    check_length_at_least_two(k)?;
    let mut sum = BigUint::zero();
    for s in divisors(k) {
        sum += big_pow(2, k / s) * BigUint::from(totient(s));
    }
    Ok(exact_div(sum, k, "binary necklace closed form"))
}

/// Total number of binary necklaces of length k >= 2 with at least one
/// 1, assembled density by density. Deliberately definitional; its exact
/// relation to [`binary_necklace_closed_form`] (the all-zeros class is
/// the only candidate difference) is established empirically by the
/// `identities` module.
pub fn nonzero_density_total(k: u64) -> Result<BigUint> {
    check_length_at_least_two(k)?;
    let mut total = BigUint::zero();
    for r in 1..=k {
        total += fixed_density_necklace_count(r, k)?;
    }
    Ok(total)
}

/// Number of aperiodic necklaces (Lyndon words) of length n over an
/// alphabet of the given size: (1/n) * sum over d | n of
/// mu(d) * alphabet^(n/d).
pub fn moreau(n: u64, alphabet: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("length n must be at least 1"));
    }
    if alphabet == 0 {
        return Err(Error::domain("alphabet size must be at least 1"));
    }
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        match mobius(d) {
            0 => {}
            1 => sum += BigInt::from(big_pow(alphabet, n / d)),
            _ => sum -= BigInt::from(big_pow(alphabet, n / d)),
        }
    }
    let total = nonnegative(sum, "aperiodic necklace count");
    Ok(exact_div(total, n, "aperiodic necklace count"))
}

/// Number of necklaces of length n over an alphabet of the given size:
/// (1/n) * sum over d | n of phi(d) * alphabet^(n/d).
pub fn macmahon(n: u64, alphabet: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("length n must be at least 1"));
    }
    if alphabet == 0 {
        return Err(Error::domain("alphabet size must be at least 1"));
    }
    let mut sum = BigUint::zero();
    for d in divisors(n) {
        sum += big_pow(alphabet, n / d) * BigUint::from(totient(d));
    }
    Ok(exact_div(sum, n, "necklace count"))
}

/// A labeled table of (parameter tuple -> count) rows with a fixed
/// parameter schema, serializable as CSV or JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    schema: Vec<String>,
    rows: Vec<CountRow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub params: Vec<u64>,
    pub count: BigUint,
}

impl CountTable {
    pub fn new(schema: impl IntoIterator<Item = impl Into<String>>) -> Self {
        CountTable {
            schema: schema.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Append a row. Panics on arity mismatch or a duplicate parameter
    /// tuple.
    pub fn push(&mut self, params: Vec<u64>, count: BigUint) {
        assert_eq!(
            params.len(),
            self.schema.len(),
            "row arity must match the schema"
        );
        assert!(
            self.rows.iter().all(|row| row.params != params),
            "duplicate parameter tuple {params:?}"
        );
        self.rows.push(CountRow { params, count });
    }

    pub fn schema(&self) -> &[String] {
        &self.schema
    }

    pub fn rows(&self) -> &[CountRow] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Header row of parameter names plus a final `count` column, then
    /// one decimal row per tuple.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.schema.join(","));
        if !self.schema.is_empty() {
            out.push(',');
        }
        out.push_str("count\n");
        for row in &self.rows {
            let mut fields: Vec<String> = row.params.iter().map(|p| p.to_string()).collect();
            fields.push(row.count.to_string());
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON array of row objects; counts are decimal strings so no
    /// magnitude is ever truncated.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut object = serde_json::Map::new();
                for (name, value) in self.schema.iter().zip(&row.params) {
                    object.insert(name.clone(), serde_json::json!(value));
                }
                object.insert(
                    "count".to_string(),
                    serde_json::Value::String(row.count.to_string()),
                );
                serde_json::Value::Object(object)
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn exact_period_subset_count_examples() {
        // Z_4 with two ones: C(4,2) - C(2,1) = 4 subsets of full period
        assert_eq!(exact_period_subset_count(4, 2, 4).unwrap(), big(4));
        assert_eq!(exact_period_subset_count(2, 2, 4).unwrap(), big(2));
        assert_eq!(exact_period_subset_count(1, 2, 4).unwrap(), big(0));
        // period must divide the modulus
        assert_eq!(exact_period_subset_count(3, 2, 4).unwrap(), big(0));
        // d = 2 does not divide r = 3
        assert_eq!(exact_period_subset_count(3, 3, 6).unwrap(), big(0));
        assert_eq!(exact_period_subset_count(6, 3, 6).unwrap(), big(18));
        // full set: period 1 via n = 1, d = k, m = 1
        assert_eq!(exact_period_subset_count(1, 6, 6).unwrap(), big(1));
        assert_eq!(exact_period_subset_count(6, 6, 6).unwrap(), big(0));
    }

    #[test]
    fn exact_period_subset_count_rejects_bad_density() {
        assert!(matches!(
            exact_period_subset_count(2, 0, 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            exact_period_subset_count(2, 5, 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            exact_period_subset_count(0, 2, 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn coprime_density_means_every_subset_has_full_period() {
        for k in 2..=16u64 {
            for r in 1..=k {
                if gcd(k, r) == 1 {
                    assert_eq!(
                        exact_period_subset_count(k, r, k).unwrap(),
                        binomial(k, r),
                        "gcd({k},{r}) = 1"
                    );
                }
            }
        }
    }

    #[test]
    fn period_class_count_examples() {
        assert_eq!(period_class_count(4, 2, 4).unwrap(), big(1));
        assert_eq!(period_class_count(2, 2, 4).unwrap(), big(1));
        assert_eq!(period_class_count(6, 3, 6).unwrap(), big(3));
        assert_eq!(period_class_count(5, 2, 5).unwrap(), big(2));
    }

    #[test]
    fn fixed_density_examples() {
        assert_eq!(fixed_density_necklace_count(2, 4).unwrap(), big(2));
        assert_eq!(fixed_density_necklace_count(3, 6).unwrap(), big(4));
        assert_eq!(fixed_density_necklace_count(1, 1).unwrap(), big(1));
        // a single one-bit always forms one orbit of singletons
        assert_eq!(fixed_density_necklace_count(1, 7).unwrap(), big(1));
        assert_eq!(fixed_density_necklace_count(1, 12).unwrap(), big(1));
        assert_eq!(fixed_density_necklace_count(4, 4).unwrap(), big(1));
        assert!(matches!(
            fixed_density_necklace_count(0, 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            fixed_density_necklace_count(5, 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn definitional_route_agrees_with_closed_form() {
        for k in 1..=20u64 {
            for r in 1..=k {
                assert_eq!(
                    fixed_density_definitional(r, k).unwrap(),
                    fixed_density_necklace_count(r, k).unwrap(),
                    "fixed-density routes at ({r},{k})"
                );
            }
        }
    }

    #[test]
    fn aperiodic_counts() {
        assert_eq!(aperiodic_binary_count(6).unwrap(), big(9));
        assert_eq!(aperiodic_binary_count(4).unwrap(), big(3));
        assert_eq!(aperiodic_binary_count(2).unwrap(), big(1));
        // prime length: (2^p - 2)/p
        assert_eq!(aperiodic_binary_count(7).unwrap(), big(18));
        assert_eq!(aperiodic_binary_count(13).unwrap(), big(630));
        assert!(matches!(aperiodic_binary_count(1), Err(Error::Domain(_))));
        for k in 2..=20u64 {
            assert_eq!(
                full_period_class_total(k).unwrap(),
                aperiodic_binary_count(k).unwrap(),
                "full-period routes at {k}"
            );
        }
    }

    #[test]
    fn necklace_totals() {
        assert_eq!(binary_necklace_closed_form(2).unwrap(), big(3));
        assert_eq!(binary_necklace_closed_form(3).unwrap(), big(4));
        assert_eq!(binary_necklace_closed_form(4).unwrap(), big(6));
        assert_eq!(binary_necklace_closed_form(6).unwrap(), big(14));
        assert_eq!(nonzero_density_total(2).unwrap(), big(2));
        assert_eq!(nonzero_density_total(3).unwrap(), big(3));
        assert_eq!(nonzero_density_total(4).unwrap(), big(5));
        assert!(matches!(nonzero_density_total(1), Err(Error::Domain(_))));
    }

    #[test]
    fn moreau_and_macmahon() {
        assert_eq!(moreau(6, 2).unwrap(), big(9));
        assert_eq!(moreau(4, 3).unwrap(), big(18));
        assert_eq!(moreau(1, 5).unwrap(), big(5));
        assert_eq!(moreau(3, 1).unwrap(), big(0));
        assert_eq!(moreau(1, 1).unwrap(), big(1));
        assert_eq!(macmahon(2, 2).unwrap(), big(3));
        assert_eq!(macmahon(1, 7).unwrap(), big(7));
        // length 1 sits below binary_necklace_closed_form's domain; the
        // general form still covers it
        assert_eq!(macmahon(1, 2).unwrap(), big(2));
        assert_eq!(macmahon(4, 3).unwrap(), big(24));
        assert!(matches!(moreau(0, 2), Err(Error::Domain(_))));
        assert!(matches!(macmahon(3, 0), Err(Error::Domain(_))));
        // binary specializations agree with the dedicated forms
        for k in 2..=24u64 {
            assert_eq!(moreau(k, 2).unwrap(), aperiodic_binary_count(k).unwrap());
            assert_eq!(
                macmahon(k, 2).unwrap(),
                binary_necklace_closed_form(k).unwrap()
            );
        }
    }

    #[test]
    fn count_table_serialization() {
        let mut table = CountTable::new(["k", "r"]);
        table.push(vec![4, 2], big(2));
        table.push(vec![6, 3], big(4));
        assert_eq!(table.to_csv(), "k,r,count\n4,2,2\n6,3,4\n");
        assert_eq!(
            table.to_json().to_string(),
            r#"[{"count":"2","k":4,"r":2},{"count":"4","k":6,"r":3}]"#
        );
        let empty = CountTable::new(["n"]);
        assert_eq!(empty.to_csv(), "n,count\n");
        assert_eq!(empty.to_json().to_string(), "[]");
    }

    #[test]
    #[should_panic(expected = "duplicate parameter tuple")]
    fn count_table_rejects_duplicate_rows() {
        let mut table = CountTable::new(["k"]);
        table.push(vec![4], big(1));
        table.push(vec![4], big(2));
    }
}
