//! Exact q-series, partition enumeration and bijections for partitions in
//! which even parts sit below odd parts (the `𝓔𝓞*` family).

pub mod bijections;
pub mod identities;
pub mod overpartitions;
pub mod partitions;
pub mod series;
