//! Overpartitions whose underlying partition lies in `𝓔𝓞*`.
//!
//! An overline is attached to a part *size*: each distinct size of the base
//! partition is either marked or not.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::partitions::{gen_eo_star, EoRow, Partition};
use crate::series::{self, TruncOrder, ZQSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("overlined size {0} does not occur in the base partition")]
pub struct UnknownMarkedSize(pub u32);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    base: Partition,
    marked: BTreeSet<u32>,
}

impl Overpartition {
    pub fn new(base: Partition, marked: BTreeSet<u32>) -> Result<Self, UnknownMarkedSize> {
        if let Some(&bad) = marked.iter().find(|s| !base.parts().contains(s)) {
            return Err(UnknownMarkedSize(bad));
        }
        Ok(Overpartition { base, marked })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn marked(&self) -> &BTreeSet<u32> {
        &self.marked
    }

    pub fn weight(&self) -> usize {
        self.base.weight()
    }

    /// Number of overlined parts.
    pub fn o_count(&self) -> usize {
        self.marked.len()
    }

    /// `+1` when the largest even part of the base is divisible by 4 (0 included), else `-1`.
    pub fn weight_w(&self) -> i64 {
        if self.base.largest_even_part().is_multiple_of(4) {
            1
        } else {
            -1
        }
    }

    /// Young diagram with a trailing `~` on the first row of each marked size.
    pub fn young_diagram(&self) -> String {
        if self.base.is_empty() {
            return "(empty)\n".to_string();
        }
        let mut seen = BTreeSet::new();
        let mut out = String::new();
        for &p in self.base.parts() {
            out.push_str(&"#".repeat(p as usize));
            if self.marked.contains(&p) && seen.insert(p) {
                out.push('~');
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = BTreeSet::new();
        write!(f, "(")?;
        for (i, &p) in self.base.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            if self.marked.contains(&p) && seen.insert(p) {
                write!(f, "~")?;
            }
        }
        write!(f, ")")
    }
}

/// Every overpartition of weight `n` with base in `𝓔𝓞*`.
pub fn gen_eobar_star(n: usize) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for base in gen_eo_star(n) {
        let sizes = base.distinct_sizes();
        for mask in 0u64..(1 << sizes.len()) {
            let marked = sizes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            out.push(Overpartition {
                base: base.clone(),
                marked,
            });
        }
    }
    out
}

/// `Σ [w(π)] z^{o(π)} q^{|π|}` over weights `<= N`; the `w` factor only when `use_w`.
pub fn eobar_weighted_series(order: TruncOrder, use_w: bool) -> series::Result<ZQSeries> {
    let terms = (0..=order.0).flat_map(|n| {
        gen_eobar_star(n).into_iter().map(move |op| {
            let sign = if use_w { op.weight_w() } else { 1 };
            (op.o_count() as i64, n, sign)
        })
    });
    ZQSeries::from_terms(order, terms)
}

/// `(n, eo̅₀(n), eo̅₂(n))`: overpartitions counted by the residue of the base's largest even part.
pub fn eobar_table(max_n: usize) -> Vec<EoRow> {
    (0..=max_n)
        .map(|n| {
            let mut row = EoRow { n, c0: 0, c2: 0 };
            for op in gen_eobar_star(n) {
                if op.weight_w() == 1 {
                    row.c0 += 1;
                } else {
                    row.c2 += 1;
                }
            }
            row
        })
        .collect()
}
