//! Integer partitions, their statistics, and the partition sets used by the
//! even-parts-below-odd-parts identities.
//!
//! Throughout, `π_i` is 1-based and `π_i = 0` for `i > ℓ(π)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::series::{self, TruncOrder, ZQSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Accepts parts in any order and sorts them.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    /// `π_i` (1-based), 0 past the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Distinct sizes with multiplicities, largest size first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((size, mult)) if *size == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn distinct_sizes(&self) -> Vec<u32> {
        let mut sizes = self.0.clone();
        sizes.dedup();
        sizes
    }

    /// Column heights of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for h in out.iter_mut().take(p as usize) {
                *h += 1;
            }
        }
        Partition(out)
    }

    /// Largest even part; 0 when there are none.
    pub fn largest_even_part(&self) -> u32 {
        self.0.iter().copied().find(|p| p % 2 == 0).unwrap_or(0)
    }

    pub fn odd_part_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Even-odd crank: largest even part minus the number of odd parts.
    pub fn eoc(&self) -> i64 {
        self.largest_even_part() as i64 - self.odd_part_count() as i64
    }

    /// Membership in the set of partitions whose even parts lie below their odd
    /// parts and in which only the largest even size has odd multiplicity.
    pub fn is_eo_star(&self) -> bool {
        let min_odd = self.0.iter().copied().filter(|p| p % 2 == 1).min();
        let max_even = self.largest_even_part();
        if let Some(odd) = min_odd {
            if max_even > 0 && max_even >= odd {
                return false;
            }
        }
        self.multiplicities().into_iter().all(|(size, mult)| {
            if size % 2 == 0 && size == max_even {
                mult % 2 == 1
            } else {
                mult % 2 == 0
            }
        })
    }

    pub fn classify_eo(&self) -> EoClass {
        if !self.is_eo_star() {
            EoClass::NotMember
        } else if self.largest_even_part().is_multiple_of(4) {
            EoClass::Eo0
        } else {
            EoClass::Eo2
        }
    }

    /// Largest part equals `k` (so only `∅` has `k = 0`).
    pub fn is_p_exact(&self, k: u32) -> bool {
        self.largest() == k
    }

    pub fn is_p_upto(&self, k: u32) -> bool {
        self.largest() <= k
    }

    /// Number of rows of the largest `k × (k+r+1)` rectangle inside the diagram.
    pub fn durfee_width(&self, r: u32) -> u32 {
        let mut k = 0u32;
        while self.part(k as usize + 1) > k + 1 + r {
            k += 1;
        }
        k
    }

    /// Has a `k`-row, `(k+r+1)`-column Durfee rectangle with every part below it `≤ k+r`.
    pub fn in_q(&self, k: u32, r: u32) -> bool {
        (1..=k as usize).all(|i| self.part(i) > k + r) && self.part(k as usize + 1) <= k + r
    }

    /// The `t` with `π ∈ Q_{t,r}`, if any.
    pub fn q_index(&self, r: u32) -> Option<u32> {
        let t = self.durfee_width(r);
        self.in_q(t, r).then_some(t)
    }

    /// All parts odd, exactly `2k` of them, every size with even multiplicity.
    pub fn is_o_star(&self, k: u32) -> bool {
        self.len() == 2 * k as usize
            && self.0.iter().all(|p| p % 2 == 1)
            && self.multiplicities().iter().all(|&(_, m)| m % 2 == 0)
    }

    /// All parts even, every size with even multiplicity.
    pub fn is_e_star(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0) && self.multiplicities().iter().all(|&(_, m)| m % 2 == 0)
    }

    /// Member with `2k` odd parts and largest even part `2k + 2r`.
    pub fn is_eo_star_kr(&self, k: u32, r: u32) -> bool {
        self.is_eo_star()
            && self.odd_part_count() == 2 * k as usize
            && self.largest_even_part() == 2 * k + 2 * r
    }

    /// One row of `#` per part, largest first.
    pub fn young_diagram(&self) -> String {
        if self.is_empty() {
            return "(empty)\n".to_string();
        }
        self.0
            .iter()
            .map(|&p| "#".repeat(p as usize) + "\n")
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// Residue class of the largest even part of an `𝓔𝓞*` member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EoClass {
    /// Largest even part ≡ 0 (mod 4); includes members with no even part.
    Eo0,
    /// Largest even part ≡ 2 (mod 4).
    Eo2,
    NotMember,
}

/// Calls `f` on every partition of `n` with parts `<= max_part`, in reverse-lexicographic order.
pub fn for_each_partition<F: FnMut(&[u32])>(n: usize, max_part: u32, mut f: F) {
    fn rec<F: FnMut(&[u32])>(rest: usize, max: u32, buf: &mut Vec<u32>, f: &mut F) {
        if rest == 0 {
            f(buf);
            return;
        }
        let top = max.min(rest as u32);
        for p in (1..=top).rev() {
            buf.push(p);
            rec(rest - p as usize, p, buf, f);
            buf.pop();
        }
    }
    rec(n, max_part, &mut Vec::new(), &mut f);
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn gen_partitions(n: usize) -> Vec<Partition> {
    gen_partitions_bounded(n, n as u32)
}

/// Partitions of `n` with largest part `<= max_part`, reverse-lexicographic.
pub fn gen_partitions_bounded(n: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, max_part, |p| out.push(Partition(p.to_vec())));
    out
}

/// Partitions of `n` using only the given sizes (`allowed` sorted descending).
fn partitions_from_sizes(n: usize, allowed: &[u32]) -> Vec<Vec<u32>> {
    fn rec(rest: usize, allowed: &[u32], buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(buf.clone());
            return;
        }
        for (i, &p) in allowed.iter().enumerate() {
            if p as usize <= rest {
                buf.push(p);
                rec(rest - p as usize, &allowed[i..], buf, out);
                buf.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, allowed, &mut Vec::new(), &mut out);
    out
}

/// All `𝓔𝓞*` members of weight `n`, reverse-lexicographic.
///
/// Structured generator: pick the largest even part `2k` (`k = 0` meaning none),
/// then a partition `σ` of `(n - 2k)/2` whose even parts are `<= 2k` and whose
/// odd parts are `> 2k`; the member is `2k` once plus every part of `σ` twice.
pub fn gen_eo_star(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    for k in 0..=n / 2 {
        let top = 2 * k as u32;
        let half = (n - 2 * k) / 2;
        let mut allowed: Vec<u32> = (1..=half as u32)
            .filter(|&p| if p % 2 == 0 { p <= top } else { p > top })
            .collect();
        allowed.reverse();
        for sigma in partitions_from_sizes(half, &allowed) {
            let mut parts = Vec::with_capacity(2 * sigma.len() + 1);
            for p in sigma {
                parts.push(p);
                parts.push(p);
            }
            if top > 0 {
                parts.push(top);
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            out.push(Partition(parts));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `Σ sign · z^zexp · q^{|π|}` over every partition of weight `<= N` accepted by `pred`.
///
/// Walks all partitions, so it doubles as the naive oracle for the structured generators.
pub fn series_of_predicate<P, W>(
    pred: P,
    weight_fn: W,
    order: TruncOrder,
) -> series::Result<ZQSeries>
where
    P: Fn(&Partition) -> bool,
    W: Fn(&Partition) -> (i64, i64),
{
    let mut terms = Vec::new();
    for n in 0..=order.0 {
        for p in gen_partitions(n) {
            if pred(&p) {
                let (m, sign) = weight_fn(&p);
                terms.push((m, n, sign));
            }
        }
    }
    ZQSeries::from_terms(order, terms)
}

/// `Σ_{π ∈ 𝓔𝓞*} z^{eoc(π)} q^{|π|}` to order `N`.
pub fn crank_series(order: TruncOrder) -> series::Result<ZQSeries> {
    let terms =
        (0..=order.0).flat_map(|n| gen_eo_star(n).into_iter().map(move |p| (p.eoc(), n, 1)));
    ZQSeries::from_terms(order, terms)
}

/// Counts of members of weight `n` split by residue class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EoRow {
    pub n: usize,
    pub c0: u64,
    pub c2: u64,
}

/// `(n, eo₀(n), eo₂(n))` for `n = 0..=max_n`.
pub fn eo_table(max_n: usize) -> Vec<EoRow> {
    (0..=max_n)
        .map(|n| {
            let mut row = EoRow { n, c0: 0, c2: 0 };
            for p in gen_eo_star(n) {
                match p.classify_eo() {
                    EoClass::Eo0 => row.c0 += 1,
                    EoClass::Eo2 => row.c2 += 1,
                    EoClass::NotMember => unreachable!("generator produced a non-member {p}"),
                }
            }
            row
        })
        .collect()
}
