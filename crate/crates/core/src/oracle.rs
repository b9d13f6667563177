//! Brute-force enumeration oracle.
//!
//! Everything here recomputes counts by exhaustive enumeration so the
//! closed forms in `counting` can be checked against ground truth. The
//! subset walks run on raw 64-bit masks (one bit per residue) to keep
//! full censuses feasible at 2^20 subsets and beyond; periods are found
//! by the definition (least fixing shift), not by any divisor shortcut,
//! so the oracle does not assume what the theorems assert.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory;
use crate::residue::{PeriodClass, ResidueSubset};

/// Per-period tallies inside a census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusBucket {
    /// subsets with this exact period
    pub subset_count: u64,
    /// rotation classes with this exact period, counted via canonical
    /// representatives
    pub class_count: u64,
}

/// Exhaustive classification of all r-element subsets of Z_k by exact
/// period. Only realized periods appear as keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodCensus {
    pub k: u64,
    pub r: u64,
    pub by_period: BTreeMap<u64, CensusBucket>,
}

impl PeriodCensus {
    pub fn subset_count(&self, period: u64) -> u64 {
        self.by_period.get(&period).map_or(0, |b| b.subset_count)
    }

    pub fn class_count(&self, period: u64) -> u64 {
        self.by_period.get(&period).map_or(0, |b| b.class_count)
    }

    pub fn total_subsets(&self) -> u64 {
        self.by_period.values().map(|b| b.subset_count).sum()
    }

    pub fn total_classes(&self) -> u64 {
        self.by_period.values().map(|b| b.class_count).sum()
    }
}

/// Enumeration engine with configurable size limits.
///
/// Defaults: subset censuses up to modulus 20 (about 10^6 subsets per
/// census), word enumerations up to length 16, and direct orbit counting
/// up to 2^24 words. Everything is refused loudly beyond the limits; the
/// CLI exposes them via `--max-enum`.
#[derive(Debug, Clone)]
pub struct Oracle {
    max_census_bits: u64,
    max_word_bits: u64,
    max_orbit_words: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_census_bits: 20,
            max_word_bits: 16,
            max_orbit_words: 1 << 24,
        }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Set every limit from one knob: censuses and word enumerations up
    /// to `bits`, direct orbit counting up to 2^bits words.
    pub fn with_max_enum(bits: u64) -> Self {
        let bits = bits.min(63);
        Oracle {
            max_census_bits: bits,
            max_word_bits: bits,
            max_orbit_words: 1u64 << bits.min(40),
        }
    }

    fn check_census_size(&self, k: u64) -> Result<()> {
        if k == 0 {
            return Err(Error::domain("modulus must be at least 1"));
        }
        let cap = self.max_census_bits.min(63);
        if k > cap {
            return Err(Error::EnumerationLimit {
                what: "census modulus",
                requested: k,
                limit: cap,
            });
        }
        Ok(())
    }

    fn check_word_size(&self, length: u64) -> Result<()> {
        if length == 0 {
            return Err(Error::domain("word length must be at least 1"));
        }
        let cap = self.max_word_bits.min(63);
        if length > cap {
            return Err(Error::EnumerationLimit {
                what: "word length",
                requested: length,
                limit: cap,
            });
        }
        Ok(())
    }

    /// Classify every r-element subset of Z_k by exact period, counting
    /// subsets and (via canonical representatives) rotation classes.
    pub fn census(&self, k: u64, r: u64) -> Result<PeriodCensus> {
        self.check_census_size(k)?;
        if r < 1 || r > k {
            return Err(Error::domain(format!(
                "density must satisfy 1 <= r <= k; got r = {r}, k = {k}"
            )));
        }
        let mut by_period: BTreeMap<u64, CensusBucket> = BTreeMap::new();
        for mask in FixedDensityMasks::new(k, r) {
            let period = mask_period(mask, k);
            let bucket = by_period.entry(period).or_default();
            bucket.subset_count += 1;
            if mask == canonical_mask(mask, k) {
                bucket.class_count += 1;
            }
        }
        Ok(PeriodCensus { k, r, by_period })
    }

    /// All r-element subsets of Z_k with exact period n, in ascending
    /// bitmask order.
    pub fn subsets_with_period(&self, k: u64, r: u64, n: u64) -> Result<Vec<ResidueSubset>> {
        self.check_census_size(k)?;
        if r < 1 || r > k {
            return Err(Error::domain(format!(
                "density must satisfy 1 <= r <= k; got r = {r}, k = {k}"
            )));
        }
        if n == 0 {
            return Err(Error::domain("period must be at least 1"));
        }
        Ok(FixedDensityMasks::new(k, r)
            .filter(|&mask| mask_period(mask, k) == n)
            .map(|mask| subset_from_mask(k, mask))
            .collect())
    }

    /// Binary Lyndon words of the given length (optionally of fixed
    /// density), lexicographically sorted. A word qualifies when it is
    /// strictly smaller than every nontrivial rotation of itself.
    pub fn enumerate_lyndon(&self, length: u64, density: Option<u64>) -> Result<Vec<String>> {
        self.check_word_size(length)?;
        let mut words = Vec::new();
        for mask in 0..(1u64 << length) {
            if let Some(d) = density {
                if mask.count_ones() as u64 != d {
                    continue;
                }
            }
            let word = word_from_mask(mask, length);
            if is_lyndon(&word) {
                words.push(String::from_utf8(word.iter().map(|&b| b + b'0').collect()).unwrap());
            }
        }
        words.sort();
        Ok(words)
    }

    /// Same output as [`enumerate_lyndon`](Self::enumerate_lyndon), via
    /// successor generation (extend the current word periodically to the
    /// target length, strip trailing '1's, increment) instead of
    /// filtering all words. Kept separate so the two strategies can
    /// cross-check each other.
    pub fn enumerate_lyndon_duval(&self, length: u64, density: Option<u64>) -> Result<Vec<String>> {
        self.check_word_size(length)?;
        let target = length as usize;
        let mut words = Vec::new();
        let mut w: Vec<u8> = vec![0];
        loop {
            if w.len() == target {
                let ones = w.iter().filter(|&&b| b == 1).count() as u64;
                if density.is_none_or(|d| ones == d) {
                    words.push(String::from_utf8(w.iter().map(|&b| b + b'0').collect()).unwrap());
                }
            }
            let stem = w.clone();
            w = (0..target).map(|i| stem[i % stem.len()]).collect();
            while w.last() == Some(&1) {
                w.pop();
            }
            match w.last_mut() {
                Some(last) => *last = 1,
                None => break,
            }
        }
        Ok(words)
    }

    /// One rotation class per binary word of the given length (optionally
    /// of fixed density), in ascending order of the canonical (smallest)
    /// bitmask. Density 0 yields the single all-zeros class.
    pub fn enumerate_necklace_classes(
        &self,
        length: u64,
        density: Option<u64>,
    ) -> Result<Vec<PeriodClass>> {
        self.check_word_size(length)?;
        let mut classes = Vec::new();
        let mut visit = |mask: u64| {
            if mask == canonical_mask(mask, length) {
                let period = mask_period(mask, length);
                classes.push(PeriodClass::from_canonical(
                    subset_from_mask(length, mask),
                    period,
                ));
            }
        };
        match density {
            Some(d) => {
                if d > length {
                    return Err(Error::domain(format!(
                        "density {d} cannot exceed the word length {length}"
                    )));
                }
                for mask in FixedDensityMasks::new(length, d) {
                    visit(mask);
                }
            }
            None => {
                for mask in 0..(1u64 << length) {
                    visit(mask);
                }
            }
        }
        Ok(classes)
    }

    /// Count rotation orbits of words of the given length over an
    /// `alphabet`-letter alphabet by walking every word and keeping the
    /// ones that are minimal among their rotations.
    pub fn count_rotation_orbits(&self, length: u64, alphabet: u64) -> Result<u64> {
        if length == 0 {
            return Err(Error::domain("word length must be at least 1"));
        }
        if alphabet == 0 {
            return Err(Error::domain("alphabet size must be at least 1"));
        }
        let total = checked_word_count(alphabet, length);
        match total {
            Some(t) if t <= self.max_orbit_words => {}
            _ => {
                return Err(Error::EnumerationLimit {
                    what: "orbit word count for length",
                    requested: length,
                    limit: self.max_orbit_words,
                })
            }
        }
        let n = length as usize;
        let mut word = vec![0u64; n];
        let mut orbits = 0u64;
        loop {
            if is_minimal_rotation(&word) {
                orbits += 1;
            }
            // odometer increment, most significant digit first
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(orbits);
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < alphabet {
                    break;
                }
                word[pos] = 0;
            }
        }
    }
}

/// Average number of words fixed by each rotation: (1/n) * sum over
/// shifts j of alphabet^gcd(j, n). The division is exact (asserted); the
/// result counts rotation orbits.
pub fn burnside_orbit_count(length: u64, alphabet_size: u64) -> Result<BigUint> {
    if length == 0 {
        return Err(Error::domain("word length must be at least 1"));
    }
    if alphabet_size == 0 {
        return Err(Error::domain("alphabet size must be at least 1"));
    }
    let mut fixed_total = BigUint::zero();
    for j in 0..length {
        fixed_total += numtheory::big_pow(alphabet_size, numtheory::gcd(j, length));
    }
    let (orbits, rem) = num_integer::Integer::div_rem(&fixed_total, &BigUint::from(length));
    assert!(
        rem.is_zero(),
        "total fixed-word count must be divisible by the group order {length}"
    );
    Ok(orbits)
}

/// All k-bit masks with exactly r bits set, in ascending order
/// (Gosper's next-combination step).
struct FixedDensityMasks {
    next: Option<u64>,
    limit: u64,
}

impl FixedDensityMasks {
    fn new(k: u64, r: u64) -> Self {
        debug_assert!(k >= 1 && k <= 63 && r <= k);
        let first = if r == 0 { 0 } else { (1u64 << r) - 1 };
        FixedDensityMasks {
            next: Some(first),
            limit: 1u64 << k,
        }
    }
}

impl Iterator for FixedDensityMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let mask = self.next?;
        if mask >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if mask == 0 {
            None
        } else {
            let low = mask & mask.wrapping_neg();
            let carried = mask.wrapping_add(low);
            if carried == 0 {
                None
            } else {
                Some((((carried ^ mask) >> 2) / low) | carried)
            }
        };
        Some(mask)
    }
}

fn checked_word_count(alphabet: u64, length: u64) -> Option<u64> {
    let mut total = 1u64;
    for _ in 0..length {
        total = total.checked_mul(alphabet)?;
    }
    Some(total)
}

fn subset_from_mask(modulus: u64, mask: u64) -> ResidueSubset {
    ResidueSubset::new(modulus, (0..modulus).filter(|&p| mask >> p & 1 == 1))
}

fn word_from_mask(mask: u64, length: u64) -> Vec<u8> {
    (0..length).map(|p| (mask >> p & 1) as u8).collect()
}

/// Rotate a k-bit mask: residue p moves to (p + t) mod k.
fn rotate_mask(mask: u64, t: u64, k: u64) -> u64 {
    debug_assert!(k >= 1 && k <= 63);
    let t = t % k;
    if t == 0 {
        return mask;
    }
    let all = (1u64 << k) - 1;
    ((mask << t) | (mask >> (k - t))) & all
}

/// Least l >= 1 whose rotation fixes the mask, found by scanning every
/// shift in order.
fn mask_period(mask: u64, k: u64) -> u64 {
    (1..=k)
        .find(|&l| rotate_mask(mask, l, k) == mask)
        .expect("rotating by the modulus fixes every mask")
}

/// Smallest rotation of the mask, as an integer.
fn canonical_mask(mask: u64, k: u64) -> u64 {
    (0..k).map(|t| rotate_mask(mask, t, k)).min().unwrap()
}

/// Strictly smaller than every nontrivial rotation (values 0/1).
fn is_lyndon(word: &[u8]) -> bool {
    let n = word.len();
    for t in 1..n {
        // compare word against its rotation by t
        let mut ord = std::cmp::Ordering::Equal;
        for i in 0..n {
            ord = word[i].cmp(&word[(i + t) % n]);
            if ord != std::cmp::Ordering::Equal {
                break;
            }
        }
        if ord != std::cmp::Ordering::Less {
            return false;
        }
    }
    n >= 1
}

/// No rotation is strictly smaller than the word itself.
fn is_minimal_rotation(word: &[u64]) -> bool {
    let n = word.len();
    for t in 1..n {
        for i in 0..n {
            match word[(i + t) % n].cmp(&word[i]) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}
