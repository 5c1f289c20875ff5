//! Forward and inverse forms of the Young-diagram bijections behind the crank
//! generating function, with optional step-by-step traces.
//!
//! * [`phi_forward`] / [`phi_inverse`]: `∪ₖ 𝓟ₖ × 𝓟_{≤k+r}  ↔  ∪ₖ 𝓟 × 𝓠_{k,r}`, weight preserving.
//! * [`lemma2_forward`] / [`lemma2_inverse`]: `𝓟ₖ × 𝓟_{≤k+r} ↔ 𝓞*ₖ × 𝓞*_{k+r}`, weight `w ↦ 4w + 2r`.
//! * [`lemma3_forward`] / [`lemma3_inverse`]: `𝓟 × 𝓠_{k,r} ↔ 𝓔* × 𝓔𝓞*_{k,r}`, weight `w ↦ 4w + 2r`.
//! * [`crank_bijection`]: the composite `lemma3 ∘ φ ∘ lemma2⁻¹`.
//!
//! The index `k` is always read off the data; a mismatch is a [`DomainError`].

pub mod harness;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{map}: {reason}")]
pub struct DomainError {
    pub map: &'static str,
    pub reason: String,
}

fn domain(map: &'static str, reason: impl Into<String>) -> DomainError {
    DomainError {
        map,
        reason: reason.into(),
    }
}

type Result<T> = std::result::Result<T, DomainError>;

/// Which branch of `φ` applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PhiCase {
    /// `π` already lies in some `𝓠_{s,r}`.
    Case1,
    /// `π₁ = r + 1` and the Durfee width is 0.
    Case2,
    /// Durfee width `s >= 1` with `π_{s+1} = s + r + 1`.
    Case3 { s: u32 },
}

impl fmt::Display for PhiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiCase::Case1 => write!(f, "CASE1"),
            PhiCase::Case2 => write!(f, "CASE2"),
            PhiCase::Case3 { s } => write!(f, "CASE3(s={s})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub label: String,
    /// Row lengths top to bottom. Intermediate diagrams need not be weakly decreasing.
    pub rows: Vec<u32>,
}

impl TraceStep {
    /// The rows as a partition, when they form one.
    pub fn partition(&self) -> Option<Partition> {
        Partition::new(self.rows.clone()).ok()
    }
}

/// Ordered snapshots of a bijection run. A disabled trace records nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BijectionTrace {
    #[serde(skip)]
    enabled: bool,
    pub steps: Vec<TraceStep>,
}

impl BijectionTrace {
    pub fn new() -> Self {
        BijectionTrace {
            enabled: true,
            steps: Vec::new(),
        }
    }

    pub fn disabled() -> Self {
        BijectionTrace::default()
    }

    fn record(&mut self, label: impl Into<String>, partition: &Partition) {
        self.record_rows(label, partition.parts());
    }

    fn record_rows(&mut self, label: impl Into<String>, rows: &[u32]) {
        if self.enabled {
            self.steps.push(TraceStep {
                label: label.into(),
                rows: rows.to_vec(),
            });
        }
    }

    /// Labels followed by ASCII Young diagrams.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            let shown: Vec<String> = step.rows.iter().map(u32::to_string).collect();
            out.push_str(&format!("{} = ({})\n", step.label, shown.join(",")));
            if step.rows.is_empty() {
                out.push_str("(empty)\n");
            }
            for &row in &step.rows {
                out.push_str(&"#".repeat(row as usize));
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }
}

/// Image of a pair under `φ` (or preimage under `φ⁻¹`), with the branch taken.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiPair {
    pub first: Partition,
    pub second: Partition,
    pub case: PhiCase,
}

/// Splits every cell into a 2×2 block: each part `m` becomes two parts `2m`.
pub fn quadruple(p: &Partition) -> Partition {
    let parts = p.parts().iter().flat_map(|&m| [2 * m, 2 * m]).collect();
    Partition::from_sorted_unchecked(parts)
}

/// Inverse of [`quadruple`]; requires even parts occurring in pairs.
fn unquadruple(p: &Partition, map: &'static str) -> Result<Partition> {
    let parts = p.parts();
    if parts.len() % 2 == 1 || parts.chunks(2).any(|c| c[0] != c[1] || c[0] % 2 == 1) {
        return Err(domain(map, format!("{p} is not a quadrupled diagram")));
    }
    Ok(Partition::from_sorted_unchecked(
        parts.iter().step_by(2).map(|m| m / 2).collect(),
    ))
}

fn remove_largest(p: &Partition) -> Partition {
    Partition::from_sorted_unchecked(p.parts()[1..].to_vec())
}

fn prepend(k: u32, p: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(p.len() + 1);
    parts.push(k);
    parts.extend_from_slice(p.parts());
    Partition::from_sorted_unchecked(parts)
}

/// Inserts `m` (if positive) at its sorted position.
fn insert_part(p: &Partition, m: u32) -> Partition {
    let mut parts = p.parts().to_vec();
    if m > 0 {
        let at = parts.iter().position(|&x| x < m).unwrap_or(parts.len());
        parts.insert(at, m);
    }
    Partition::from_sorted_unchecked(parts)
}

/// Removes one occurrence of `m` (if positive); errors when absent.
fn remove_part(p: &Partition, m: u32, map: &'static str) -> Result<Partition> {
    let mut parts = p.parts().to_vec();
    if m > 0 {
        let at = parts
            .iter()
            .position(|&x| x == m)
            .ok_or_else(|| domain(map, format!("{p} has no part {m}")))?;
        parts.remove(at);
    }
    Ok(Partition::from_sorted_unchecked(parts))
}

/// `φ(λ, π)` for `λ ∈ 𝓟ₖ` (`k = λ₁`) and `π ∈ 𝓟_{≤k+r}`.
pub fn phi_forward(lambda: &Partition, pi: &Partition, r: u32) -> Result<PhiPair> {
    phi_forward_traced(lambda, pi, r, &mut BijectionTrace::disabled())
}

pub fn phi_forward_traced(
    lambda: &Partition,
    pi: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<PhiPair> {
    const MAP: &str = "phi";
    let k = lambda.largest();
    if !pi.is_p_upto(k + r) {
        return Err(domain(
            MAP,
            format!("largest part of π={pi} exceeds k+r={}", k + r),
        ));
    }
    trace.record("input λ", lambda);
    trace.record("input π", pi);

    let s = pi.durfee_width(r);
    let below = pi.part(s as usize + 1);
    if below <= s + r {
        trace.record(format!("CASE1: π ∈ Q_{{{s},{r}}}, μ"), lambda);
        trace.record("ν", pi);
        return Ok(PhiPair {
            first: lambda.clone(),
            second: pi.clone(),
            case: PhiCase::Case1,
        });
    }
    // maximality of s forces the part below the rectangle to be exactly s+r+1
    debug_assert_eq!(below, s + r + 1);
    let mu = remove_largest(lambda);
    if s == 0 {
        let mut parts = pi.parts().to_vec();
        parts[0] += k;
        let nu = Partition::from_sorted_unchecked(parts);
        trace.record("CASE2: delete λ₁ to get μ", &mu);
        trace.record(format!("add λ₁={k} to π₁ to get ν"), &nu);
        return Ok(PhiPair {
            first: mu,
            second: nu,
            case: PhiCase::Case2,
        });
    }

    let s_us = s as usize;
    let base = s + r + 1;
    let excess: Vec<u32> = (1..=s_us).map(|i| pi.part(i) - base).collect();
    trace.record(format!("CASE3 (s={s}): delete λ₁ to get μ"), &mu);
    let mut shifted = Vec::with_capacity(pi.len());
    shifted.push(base);
    shifted.extend(excess.iter().map(|e| base + e));
    shifted.extend_from_slice(&pi.parts()[s_us + 1..]);
    trace.record_rows("move parts right of the rectangle one row down", &shifted);
    shifted[0] += k - s;
    for row in shifted.iter_mut().skip(1).take(s_us) {
        *row += 1;
    }
    let nu = Partition::from_sorted_unchecked(shifted);
    trace.record(
        format!(
            "add λ₁-s={} to row 1 and 1 to the next {s} rows to get ν",
            k - s
        ),
        &nu,
    );
    Ok(PhiPair {
        first: mu,
        second: nu,
        case: PhiCase::Case3 { s },
    })
}

/// `φ⁻¹(μ, ν)` for `μ ∈ 𝓟` and `ν ∈ 𝓠_{t,r}`.
pub fn phi_inverse(mu: &Partition, nu: &Partition, r: u32) -> Result<PhiPair> {
    phi_inverse_traced(mu, nu, r, &mut BijectionTrace::disabled())
}

pub fn phi_inverse_traced(
    mu: &Partition,
    nu: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<PhiPair> {
    const MAP: &str = "phi_inverse";
    let t = nu
        .q_index(r)
        .ok_or_else(|| domain(MAP, format!("ν={nu} lies in no Q_{{t,{r}}}")))?;
    trace.record("input μ", mu);
    trace.record("input ν", nu);
    if nu.largest() <= mu.largest() + r {
        trace.record("CASE1: ν₁ ≤ μ₁+r, λ", mu);
        trace.record("π", nu);
        return Ok(PhiPair {
            first: mu.clone(),
            second: nu.clone(),
            case: PhiCase::Case1,
        });
    }
    let k = nu.largest() - r - 1;
    let lambda = prepend(k, mu);
    if t == 1 {
        let mut parts = nu.parts().to_vec();
        parts[0] = r + 1;
        let pi = Partition::new(parts).map_err(|e| domain(MAP, e.to_string()))?;
        trace.record(format!("CASE2: prepend k={k} to μ to get λ"), &lambda);
        trace.record(format!("replace ν₁ by r+1={} to get π", r + 1), &pi);
        return Ok(PhiPair {
            first: lambda,
            second: pi,
            case: PhiCase::Case2,
        });
    }

    let s = t - 1;
    let s_us = s as usize;
    let base = s + r + 1;
    let mut parts = Vec::with_capacity(nu.len());
    for i in 1..=s_us {
        parts.push(base + (nu.part(i + 1) - (s + r + 2)));
    }
    parts.push(base);
    parts.extend_from_slice(&nu.parts()[s_us + 1..]);
    let pi = Partition::new(parts).map_err(|e| domain(MAP, e.to_string()))?;
    trace.record(
        format!("CASE3 (s={s}): prepend k={k} to μ to get λ"),
        &lambda,
    );
    trace.record(
        "strip row 1, lift the rectangle's right side one row, to get π",
        &pi,
    );
    Ok(PhiPair {
        first: lambda,
        second: pi,
        case: PhiCase::Case3 { s },
    })
}

/// `(λ, π) ↦ (λ*, π*) ∈ 𝓞*ₖ × 𝓞*_{k+r}`.
pub fn lemma2_forward(
    lambda: &Partition,
    pi: &Partition,
    r: u32,
) -> Result<(Partition, Partition)> {
    lemma2_forward_traced(lambda, pi, r, &mut BijectionTrace::disabled())
}

pub fn lemma2_forward_traced(
    lambda: &Partition,
    pi: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<(Partition, Partition)> {
    const MAP: &str = "lemma2";
    let k = lambda.largest();
    if !pi.is_p_upto(k + r) {
        return Err(domain(
            MAP,
            format!("largest part of π={pi} exceeds k+r={}", k + r),
        ));
    }
    trace.record("input λ", lambda);
    trace.record("input π", pi);
    let lq = quadruple(lambda);
    let pq = quadruple(pi);
    trace.record("λ' = split every cell of λ into four", &lq);
    trace.record("π' = split every cell of π into four", &pq);
    let lq_trim = if k > 0 { remove_largest(&lq) } else { lq };
    trace.record(format!("delete one part 2k={} of λ'", 2 * k), &lq_trim);
    let l_star = lq_trim.conjugate();
    trace.record("λ* = conjugate", &l_star);
    let pq_top = insert_part(&pq, 2 * k + 2 * r);
    trace.record(
        format!("append 2k+2r={} on top of π'", 2 * k + 2 * r),
        &pq_top,
    );
    let p_star = pq_top.conjugate();
    trace.record("π* = conjugate", &p_star);
    Ok((l_star, p_star))
}

/// `(λ*, π*) ∈ 𝓞*ₖ × 𝓞*_{k+r} ↦ (λ, π)`, with `k = ℓ(λ*)/2`.
pub fn lemma2_inverse(
    l_star: &Partition,
    p_star: &Partition,
    r: u32,
) -> Result<(Partition, Partition)> {
    lemma2_inverse_traced(l_star, p_star, r, &mut BijectionTrace::disabled())
}

pub fn lemma2_inverse_traced(
    l_star: &Partition,
    p_star: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<(Partition, Partition)> {
    const MAP: &str = "lemma2_inverse";
    if l_star.len() % 2 == 1 {
        return Err(domain(
            MAP,
            format!("λ*={l_star} has an odd number of parts"),
        ));
    }
    let k = (l_star.len() / 2) as u32;
    if !l_star.is_o_star(k) {
        return Err(domain(MAP, format!("λ*={l_star} is not in O*_{k}")));
    }
    if !p_star.is_o_star(k + r) {
        return Err(domain(MAP, format!("π*={p_star} is not in O*_{}", k + r)));
    }
    trace.record("input λ*", l_star);
    trace.record("input π*", p_star);
    let mut lq = l_star.conjugate();
    if k > 0 {
        lq = prepend(2 * k, &lq);
    }
    trace.record(format!("conjugate λ* and restore a part 2k={}", 2 * k), &lq);
    let lambda = unquadruple(&lq, MAP)?;
    trace.record("λ = merge 2×2 blocks", &lambda);
    let pq_top = p_star.conjugate();
    let pq = remove_part(&pq_top, 2 * k + 2 * r, MAP)?;
    trace.record(
        format!("conjugate π* and drop the top part 2k+2r={}", 2 * k + 2 * r),
        &pq,
    );
    let pi = unquadruple(&pq, MAP)?;
    trace.record("π = merge 2×2 blocks", &pi);
    Ok((lambda, pi))
}

/// `(μ, ν) ∈ 𝓟 × 𝓠_{k,r} ↦ (μ*, ν*) ∈ 𝓔* × 𝓔𝓞*_{k,r}`.
pub fn lemma3_forward(mu: &Partition, nu: &Partition, r: u32) -> Result<(Partition, Partition)> {
    lemma3_forward_traced(mu, nu, r, &mut BijectionTrace::disabled())
}

pub fn lemma3_forward_traced(
    mu: &Partition,
    nu: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<(Partition, Partition)> {
    const MAP: &str = "lemma3";
    let k = nu
        .q_index(r)
        .ok_or_else(|| domain(MAP, format!("ν={nu} lies in no Q_{{k,{r}}}")))?;
    trace.record("input μ", mu);
    trace.record("input ν", nu);
    let mu_star = quadruple(mu);
    trace.record("μ* = split every cell of μ into four", &mu_star);
    let nq = quadruple(nu);
    trace.record(
        format!(
            "ν' = split every cell of ν into four (rectangle {}x{})",
            2 * k,
            2 * k + 2 * r
        ),
        &nq,
    );
    let mut parts = nq.into_parts();
    for row in parts.iter_mut().take(2 * k as usize) {
        *row -= 1;
    }
    let trimmed = Partition::from_sorted_unchecked(parts);
    trace.record(
        format!("delete one of the two columns of height {}", 2 * k),
        &trimmed,
    );
    let nu_star = insert_part(&trimmed, 2 * k + 2 * r);
    trace.record(
        format!("ν* = insert 2k+2r={} below the rectangle", 2 * k + 2 * r),
        &nu_star,
    );
    Ok((mu_star, nu_star))
}

/// `(μ*, ν*) ∈ 𝓔* × 𝓔𝓞*_{k,r} ↦ (μ, ν)`, with `k` = half the number of odd parts of `ν*`.
pub fn lemma3_inverse(
    mu_star: &Partition,
    nu_star: &Partition,
    r: u32,
) -> Result<(Partition, Partition)> {
    lemma3_inverse_traced(mu_star, nu_star, r, &mut BijectionTrace::disabled())
}

pub fn lemma3_inverse_traced(
    mu_star: &Partition,
    nu_star: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<(Partition, Partition)> {
    const MAP: &str = "lemma3_inverse";
    if !mu_star.is_e_star() {
        return Err(domain(MAP, format!("μ*={mu_star} is not in E*")));
    }
    let odd = nu_star.odd_part_count();
    if odd % 2 == 1 {
        return Err(domain(
            MAP,
            format!("ν*={nu_star} has an odd number of odd parts"),
        ));
    }
    let k = (odd / 2) as u32;
    if !nu_star.is_eo_star_kr(k, r) {
        return Err(domain(
            MAP,
            format!("ν*={nu_star} is not in EO*_{{{k},{r}}}"),
        ));
    }
    trace.record("input μ*", mu_star);
    trace.record("input ν*", nu_star);
    let mu = unquadruple(mu_star, MAP)?;
    trace.record("μ = merge 2×2 blocks", &mu);
    let without = remove_part(nu_star, 2 * k + 2 * r, MAP)?;
    trace.record(format!("remove one part 2k+2r={}", 2 * k + 2 * r), &without);
    let mut parts = without.into_parts();
    for row in parts.iter_mut().take(2 * k as usize) {
        *row += 1;
    }
    let nq = Partition::from_sorted_unchecked(parts);
    trace.record(format!("restore the column of height {}", 2 * k), &nq);
    let nu = unquadruple(&nq, MAP)?;
    trace.record("ν = merge 2×2 blocks", &nu);
    Ok((mu, nu))
}

/// The composite map `∪ₖ 𝓞*ₖ × 𝓞*_{k+r} → ∪ₖ 𝓔* × 𝓔𝓞*_{k,r}`, weight preserving.
pub fn crank_bijection(
    l_star: &Partition,
    p_star: &Partition,
    r: u32,
) -> Result<(Partition, Partition)> {
    crank_bijection_traced(l_star, p_star, r, &mut BijectionTrace::disabled())
}

pub fn crank_bijection_traced(
    l_star: &Partition,
    p_star: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<(Partition, Partition)> {
    let (lambda, pi) = lemma2_inverse_traced(l_star, p_star, r, trace)?;
    let phi = phi_forward_traced(&lambda, &pi, r, trace)?;
    lemma3_forward_traced(&phi.first, &phi.second, r, trace)
}

/// Inverse of [`crank_bijection`].
pub fn crank_bijection_inverse(
    mu_star: &Partition,
    nu_star: &Partition,
    r: u32,
) -> Result<(Partition, Partition)> {
    crank_bijection_inverse_traced(mu_star, nu_star, r, &mut BijectionTrace::disabled())
}

pub fn crank_bijection_inverse_traced(
    mu_star: &Partition,
    nu_star: &Partition,
    r: u32,
    trace: &mut BijectionTrace,
) -> Result<(Partition, Partition)> {
    let (mu, nu) = lemma3_inverse_traced(mu_star, nu_star, r, trace)?;
    let pre = phi_inverse_traced(&mu, &nu, r, trace)?;
    lemma2_forward_traced(&pre.first, &pre.second, r, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e() -> Partition {
        Partition::empty()
    }

    #[test]
    fn phi_examples() {
        let out = phi_forward(&p(&[2, 1]), &p(&[1, 1]), 1).unwrap();
        assert_eq!(
            (out.first, out.second, out.case),
            (p(&[2, 1]), p(&[1, 1]), PhiCase::Case1)
        );
        let out = phi_forward(&p(&[1]), &p(&[1]), 0).unwrap();
        assert_eq!(
            (out.first, out.second, out.case),
            (e(), p(&[2]), PhiCase::Case2)
        );
        let out = phi_forward(&p(&[2]), &p(&[2, 2]), 0).unwrap();
        assert_eq!(
            (out.first, out.second, out.case),
            (e(), p(&[3, 3]), PhiCase::Case3 { s: 1 })
        );
    }

    #[test]
    fn phi_inverse_examples() {
        let out = phi_inverse(&e(), &p(&[2]), 0).unwrap();
        assert_eq!(
            (out.first, out.second, out.case),
            (p(&[1]), p(&[1]), PhiCase::Case2)
        );
        let out = phi_inverse(&e(), &p(&[3, 3]), 0).unwrap();
        assert_eq!(
            (out.first, out.second, out.case),
            (p(&[2]), p(&[2, 2]), PhiCase::Case3 { s: 1 })
        );
        let out = phi_inverse(&p(&[2, 1]), &p(&[1, 1]), 1).unwrap();
        assert_eq!(
            (out.first, out.second, out.case),
            (p(&[2, 1]), p(&[1, 1]), PhiCase::Case1)
        );
    }

    #[test]
    fn phi_domain_errors() {
        assert!(phi_forward(&p(&[1]), &p(&[3]), 0).is_err());
        // (2,2) is in no Q_{t,0}
        assert!(phi_inverse(&e(), &p(&[2, 2]), 0).is_err());
    }

    #[test]
    fn quadrupling() {
        assert_eq!(quadruple(&e()), e());
        assert_eq!(quadruple(&p(&[1])), p(&[2, 2]));
        assert_eq!(quadruple(&p(&[2, 1])), p(&[4, 4, 2, 2]));
        assert!(unquadruple(&p(&[4, 2]), "t").is_err());
        assert_eq!(unquadruple(&p(&[4, 4, 2, 2]), "t").unwrap(), p(&[2, 1]));
    }

    #[test]
    fn lemma2_examples() {
        assert_eq!(
            lemma2_forward(&p(&[1]), &p(&[1]), 0).unwrap(),
            (p(&[1, 1]), p(&[3, 3]))
        );
        assert_eq!(
            lemma2_forward(&p(&[1]), &e(), 1).unwrap(),
            (p(&[1, 1]), p(&[1, 1, 1, 1]))
        );
        assert_eq!(lemma2_forward(&e(), &e(), 1).unwrap(), (e(), p(&[1, 1])));
        assert_eq!(lemma2_forward(&e(), &e(), 0).unwrap(), (e(), e()));
    }

    #[test]
    fn lemma2_inverse_examples() {
        assert_eq!(
            lemma2_inverse(&p(&[1, 1]), &p(&[3, 3]), 0).unwrap(),
            (p(&[1]), p(&[1]))
        );
        assert_eq!(lemma2_inverse(&e(), &p(&[1, 1]), 1).unwrap(), (e(), e()));
        assert_eq!(
            lemma2_inverse(&p(&[1, 1]), &p(&[1, 1, 1, 1]), 1).unwrap(),
            (p(&[1]), e())
        );
        assert!(lemma2_inverse(&p(&[1, 1]), &p(&[1, 1]), 1).is_err());
        assert!(lemma2_inverse(&p(&[3, 1]), &p(&[1, 1]), 0).is_err());
    }

    #[test]
    fn lemma3_examples() {
        assert_eq!(
            lemma3_forward(&e(), &p(&[2]), 0).unwrap(),
            (e(), p(&[3, 3, 2]))
        );
        assert_eq!(
            lemma3_forward(&p(&[1]), &p(&[1]), 1).unwrap(),
            (p(&[2, 2]), p(&[2, 2, 2]))
        );
        assert_eq!(lemma3_forward(&e(), &e(), 0).unwrap(), (e(), e()));
        assert!(lemma3_forward(&e(), &p(&[2, 2]), 0).is_err());
    }

    #[test]
    fn lemma3_inverse_examples() {
        assert_eq!(
            lemma3_inverse(&e(), &p(&[3, 3, 2]), 0).unwrap(),
            (e(), p(&[2]))
        );
        assert_eq!(
            lemma3_inverse(&p(&[2, 2]), &p(&[2, 2, 2]), 1).unwrap(),
            (p(&[1]), p(&[1]))
        );
        assert_eq!(lemma3_inverse(&e(), &e(), 0).unwrap(), (e(), e()));
        assert!(lemma3_inverse(&p(&[2]), &e(), 0).is_err());
        assert!(lemma3_inverse(&e(), &p(&[3, 3, 2]), 1).is_err());
    }

    #[test]
    fn composite_examples() {
        assert_eq!(
            crank_bijection(&p(&[1, 1]), &p(&[3, 3]), 0).unwrap(),
            (e(), p(&[3, 3, 2]))
        );
        assert_eq!(crank_bijection(&e(), &e(), 0).unwrap(), (e(), e()));
        let (mu_star, nu_star) = crank_bijection(&p(&[1, 1]), &p(&[1, 1, 1, 1]), 1).unwrap();
        assert_eq!((mu_star.clone(), nu_star.clone()), (p(&[2, 2]), p(&[2])));
        assert_eq!(
            crank_bijection_inverse(&mu_star, &nu_star, 1).unwrap(),
            (p(&[1, 1]), p(&[1, 1, 1, 1]))
        );
    }

    #[test]
    fn tracing_does_not_change_results() {
        let mut trace = BijectionTrace::new();
        let traced = phi_forward_traced(&p(&[2]), &p(&[2, 2]), 0, &mut trace).unwrap();
        assert_eq!(traced, phi_forward(&p(&[2]), &p(&[2, 2]), 0).unwrap());
        assert_eq!(trace.steps.last().unwrap().partition(), Some(p(&[3, 3])));
        assert!(trace.render().contains("###\n###\n"));
    }
}
