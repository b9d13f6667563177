//! Subsets of Z_i as bitmasks, with cyclic shifting, exact periods,
//! period decompositions, and rotation classes.
//!
//! A subset is stored one bit per residue in 64-bit limbs, so moduli up
//! to 64 use a single word and larger moduli grow as needed. Values are
//! immutable after construction.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const LIMB_BITS: u64 = 64;

/// A subset of Z_i for a fixed modulus i >= 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueSubset {
    modulus: u64,
    limbs: Vec<u64>,
}

impl ResidueSubset {
    /// The empty subset of Z_modulus. Panics if `modulus == 0`.
    pub fn empty(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        let words = modulus.div_ceil(LIMB_BITS) as usize;
        ResidueSubset {
            modulus,
            limbs: vec![0; words],
        }
    }

    /// Subset of Z_modulus with the given members. Panics if `modulus == 0`
    /// or any member is >= modulus; duplicate members are collapsed.
    pub fn new(modulus: u64, members: impl IntoIterator<Item = u64>) -> Self {
        let mut set = Self::empty(modulus);
        for r in members {
            assert!(
                r < modulus,
                "residue {r} out of range for modulus {modulus}"
            );
            set.set_bit(r);
        }
        set
    }

    /// The full subset {0, 1, ..., modulus-1}.
    pub fn full(modulus: u64) -> Self {
        Self::new(modulus, 0..modulus)
    }

    /// Parse a '0'/'1' string; position p (leftmost = 0) holds residue p.
    /// The word length becomes the modulus.
    pub fn from_binary_word(word: &str) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::domain(
                "binary word must be nonempty (the modulus is its length)",
            ));
        }
        let mut set = Self::empty(word.len() as u64);
        for (p, ch) in word.chars().enumerate() {
            match ch {
                '1' => set.set_bit(p as u64),
                '0' => {}
                other => {
                    return Err(Error::domain(format!(
                        "invalid character {other:?} at position {p} in binary word; expected '0' or '1'"
                    )))
                }
            }
        }
        Ok(set)
    }

    fn set_bit(&mut self, r: u64) {
        self.limbs[(r / LIMB_BITS) as usize] |= 1u64 << (r % LIMB_BITS);
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, r: u64) -> bool {
        r < self.modulus && (self.limbs[(r / LIMB_BITS) as usize] >> (r % LIMB_BITS)) & 1 == 1
    }

    /// Number of members.
    pub fn cardinality(&self) -> u64 {
        self.limbs.iter().map(|l| l.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Members in ascending order.
    pub fn members(&self) -> Vec<u64> {
        (0..self.modulus).filter(|&r| self.contains(r)).collect()
    }

    /// The shifted set A + t = {a + t mod i : a in A}. Any t is accepted;
    /// only t mod i matters.
    pub fn shift(&self, t: u64) -> Self {
        let m = self.modulus;
        let t = t % m;
        let mut out = Self::empty(m);
        for r in self.members() {
            out.set_bit(((r as u128 + t as u128) % m as u128) as u64);
        }
        out
    }

    /// Members of Z_i not in the set.
    pub fn complement(&self) -> Self {
        Self::new(
            self.modulus,
            (0..self.modulus).filter(|&r| !self.contains(r)),
        )
    }

    /// The exact period: the least l >= 1 with A + l = A. Always divides
    /// the modulus (asserted). Refuses the empty set, which carries no
    /// density information.
    pub fn exact_period(&self) -> Result<u64> {
        if self.is_empty() {
            return Err(Error::EmptySubset);
        }
        for l in 1..=self.modulus {
            if self.shift(l) == *self {
                assert!(
                    self.modulus % l == 0,
                    "exact period {l} must divide the modulus {}",
                    self.modulus
                );
                return Ok(l);
            }
        }
        unreachable!("shifting by the modulus fixes every subset")
    }

    /// The period structure (k, r, n, d, m): modulus, cardinality, exact
    /// period, k/n, and r/d. Both divisions must be exact; the set is
    /// also rebuilt from its m distinct residues mod n and compared, so a
    /// structural failure panics rather than returning junk.
    pub fn decompose(&self) -> Result<PeriodDecomposition> {
        let n = self.exact_period()?;
        let k = self.modulus;
        let r = self.cardinality();
        let d = k / n; // exact: the period divides the modulus
        assert!(
            r % d == 0,
            "cardinality {r} must be divisible by d = {d} for a period-{n} subset of Z_{k}"
        );
        let m = r / d;

        // least member in each residue class mod n; periodicity forces it below n
        let mut base_residues = Vec::new();
        for a in self.members() {
            if base_residues.iter().all(|&b| b % n != a % n) {
                base_residues.push(a);
            }
        }
        assert_eq!(
            base_residues.len() as u64,
            m,
            "a period-{n} subset must occupy exactly m = {m} residue classes mod n"
        );
        for &a in &base_residues {
            assert!(
                a < n,
                "least member {a} of a class must lie below the period {n}"
            );
        }
        let rebuilt = ResidueSubset::new(
            k,
            base_residues
                .iter()
                .flat_map(|&a| (0..d).map(move |j| a + j * n)),
        );
        assert_eq!(
            rebuilt, *self,
            "reconstruction from residues mod {n} must reproduce the subset"
        );

        Ok(PeriodDecomposition { k, r, n, d, m })
    }

    /// The rotation class of this subset.
    pub fn period_class(&self) -> Result<PeriodClass> {
        let n = self.exact_period()?;
        let mut representative = self.clone();
        for j in 1..n {
            let candidate = self.shift(j);
            if candidate.value_cmp(&representative) == Ordering::Less {
                representative = candidate;
            }
        }
        Ok(PeriodClass {
            representative,
            length: n,
        })
    }

    /// Render as a '0'/'1' string, residue p at position p (leftmost = 0).
    pub fn as_binary_word(&self) -> String {
        (0..self.modulus)
            .map(|r| if self.contains(r) { '1' } else { '0' })
            .collect()
    }

    /// Compare indicator bitmasks as integers (bit p weighted 2^p).
    fn value_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.modulus, other.modulus);
        for (a, b) in self.limbs.iter().rev().zip(other.limbs.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Order: by modulus, then by bitmask value (bit p weighted 2^p). This is
/// the canonical total order used to pick class representatives; it is
/// not the lexicographic order of the word rendering.
impl Ord for ResidueSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.modulus
            .cmp(&other.modulus)
            .then_with(|| self.value_cmp(other))
    }
}

impl PartialOrd for ResidueSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ResidueSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.members().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}} mod {}", self.modulus)
    }
}

/// The arithmetic chain {start, start + step, ...} filling one residue
/// class mod `step` inside Z_modulus; it has modulus/step members.
/// `step` must divide the modulus and `start` must be a valid residue.
pub fn residue_class_chain(start: u64, step: u64, modulus: u64) -> Result<ResidueSubset> {
    if modulus == 0 {
        return Err(Error::domain("modulus must be at least 1"));
    }
    if step == 0 || modulus % step != 0 {
        return Err(Error::domain(format!(
            "step {step} must be a positive divisor of the modulus {modulus}"
        )));
    }
    if start >= modulus {
        return Err(Error::domain(format!(
            "start {start} must be a residue below the modulus {modulus}"
        )));
    }
    let count = modulus / step;
    Ok(ResidueSubset::new(
        modulus,
        (0..count).map(|j| ((start as u128 + j as u128 * step as u128) % modulus as u128) as u64),
    ))
}

/// Period structure of a subset: k = n*d and r = m*d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodDecomposition {
    /// modulus (word length)
    pub k: u64,
    /// cardinality (number of ones)
    pub r: u64,
    /// exact period
    pub n: u64,
    /// chain length k/n
    pub d: u64,
    /// residue classes occupied mod n, r/d
    pub m: u64,
}

/// A rotation class: the n distinct shifts of a subset with exact period
/// n. The stored representative is the shift whose bitmask value is
/// smallest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodClass {
    representative: ResidueSubset,
    length: u64,
}

impl PeriodClass {
    pub(crate) fn from_canonical(representative: ResidueSubset, length: u64) -> Self {
        PeriodClass {
            representative,
            length,
        }
    }

    pub fn representative(&self) -> &ResidueSubset {
        &self.representative
    }

    /// Class size; equals the exact period of every member.
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn modulus(&self) -> u64 {
        self.representative.modulus()
    }

    /// All member sets, starting from the representative.
    pub fn expand(&self) -> Vec<ResidueSubset> {
        (0..self.length)
            .map(|j| self.representative.shift(j))
            .collect()
    }

    /// Lexicographically least '0'/'1' word over the members. (Bitmask
    /// order and word order differ, so this need not be the word of the
    /// stored representative.)
    pub fn lex_least_word(&self) -> String {
        self.expand()
            .iter()
            .map(|s| s.as_binary_word())
            .min()
            .expect("a period class is never empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(modulus: u64, members: &[u64]) -> ResidueSubset {
        ResidueSubset::new(modulus, members.iter().copied())
    }

    #[test]
    fn shift_wraps_modularly() {
        // {0,2} + 1 = {0,1} in Z_3
        assert_eq!(set(3, &[0, 2]).shift(1), set(3, &[0, 1]));
        assert_eq!(set(4, &[0, 2]).shift(2), set(4, &[0, 2]));
        assert_eq!(set(5, &[0, 1]).shift(7), set(5, &[2, 3]));
        assert_eq!(ResidueSubset::empty(6).shift(3), ResidueSubset::empty(6));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn members_must_fit_modulus() {
        set(4, &[4]);
    }

    #[test]
    fn exact_period_examples() {
        // {0,2} in Z_3 is fixed by no shift short of 3
        assert_eq!(set(3, &[0, 2]).exact_period().unwrap(), 3);
        // {0,2} + 2 = {0,2} in Z_4
        assert_eq!(set(4, &[0, 2]).exact_period().unwrap(), 2);
        assert_eq!(ResidueSubset::full(6).exact_period().unwrap(), 1);
        assert_eq!(set(1, &[0]).exact_period().unwrap(), 1);
        assert_eq!(set(12, &[0, 3, 6, 9]).exact_period().unwrap(), 3);
    }

    #[test]
    fn exact_period_refuses_empty() {
        assert_eq!(
            ResidueSubset::empty(5).exact_period(),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn decompose_examples() {
        let d = set(4, &[0, 2]).decompose().unwrap();
        assert_eq!(
            d,
            PeriodDecomposition {
                k: 4,
                r: 2,
                n: 2,
                d: 2,
                m: 1
            }
        );
        let d = set(5, &[0]).decompose().unwrap();
        assert_eq!(
            d,
            PeriodDecomposition {
                k: 5,
                r: 1,
                n: 5,
                d: 1,
                m: 1
            }
        );
        let d = ResidueSubset::full(4).decompose().unwrap();
        assert_eq!(
            d,
            PeriodDecomposition {
                k: 4,
                r: 4,
                n: 1,
                d: 4,
                m: 1
            }
        );
        let d = set(12, &[0, 1, 4, 5, 8, 9]).decompose().unwrap();
        assert_eq!(
            d,
            PeriodDecomposition {
                k: 12,
                r: 6,
                n: 4,
                d: 3,
                m: 2
            }
        );
    }

    #[test]
    fn chain_examples() {
        assert_eq!(residue_class_chain(0, 2, 4).unwrap(), set(4, &[0, 2]));
        assert_eq!(residue_class_chain(1, 2, 6).unwrap(), set(6, &[1, 3, 5]));
        assert_eq!(residue_class_chain(0, 6, 6).unwrap(), set(6, &[0]));
        assert!(matches!(
            residue_class_chain(0, 3, 4),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            residue_class_chain(6, 2, 6),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn period_class_picks_smallest_bitmask_rotation() {
        // class of {1,3} in Z_4 is {{1,3},{0,2}}; {0,2} has the smaller mask
        let class = set(4, &[1, 3]).period_class().unwrap();
        assert_eq!(class.representative(), &set(4, &[0, 2]));
        assert_eq!(class.length(), 2);
        let members = class.expand();
        assert_eq!(members.len(), 2);
        assert!(members.contains(&set(4, &[1, 3])));
        assert!(members.contains(&set(4, &[0, 2])));
    }

    #[test]
    fn class_members_are_distinct_and_share_the_class() {
        for k in 1..=10u64 {
            for mask in 1..(1u64 << k) {
                let a = ResidueSubset::new(k, (0..k).filter(|&p| mask >> p & 1 == 1));
                let class = a.period_class().unwrap();
                let members = class.expand();
                assert_eq!(members.len() as u64, class.length());
                for (i, x) in members.iter().enumerate() {
                    for y in members.iter().skip(i + 1) {
                        assert_ne!(x, y, "class members must be distinct");
                    }
                    assert_eq!(x.period_class().unwrap(), class);
                }
            }
        }
    }

    #[test]
    fn binary_word_round_trip() {
        let a = set(4, &[0, 2]);
        assert_eq!(a.as_binary_word(), "1010");
        assert_eq!(ResidueSubset::from_binary_word("1010").unwrap(), a);
        assert_eq!(ResidueSubset::empty(3).as_binary_word(), "000");
        assert_eq!(
            ResidueSubset::from_binary_word("000").unwrap(),
            ResidueSubset::empty(3)
        );
        assert_eq!(
            ResidueSubset::from_binary_word("0").unwrap(),
            ResidueSubset::empty(1)
        );
        assert!(matches!(
            ResidueSubset::from_binary_word(""),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            ResidueSubset::from_binary_word("01x0"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn complement_flips_membership() {
        let a = set(6, &[0, 2, 3]);
        let c = a.complement();
        assert_eq!(c, set(6, &[1, 4, 5]));
        assert_eq!(c.complement(), a);
        assert!(ResidueSubset::full(3).complement().is_empty());
    }

    #[test]
    fn large_modulus_uses_multiple_limbs() {
        let a = ResidueSubset::new(130, [0, 64, 129]);
        assert_eq!(a.cardinality(), 3);
        assert!(a.contains(64));
        assert!(!a.contains(63));
        assert_eq!(a.shift(1).members(), vec![0, 1, 65]);
        assert_eq!(a.shift(130), a);
        let chain = residue_class_chain(5, 13, 130).unwrap();
        assert_eq!(chain.cardinality(), 10);
        assert_eq!(chain.exact_period().unwrap(), 13);
    }

    #[test]
    fn lex_least_word_uses_word_order_not_mask_order() {
        // class of {0} in Z_2: words "10" and "01"; lex-least is "01",
        // while the mask-least representative is {0} itself ("10")
        let class = set(2, &[0]).period_class().unwrap();
        assert_eq!(class.representative(), &set(2, &[0]));
        assert_eq!(class.lex_least_word(), "01");
    }
}
