//! Exhaustive checking of the bijections over all inputs up to a weight bound.
//!
//! Each harness walks the full domain weight by weight, applies the forward
//! map, and checks: the weight law, membership of the image in the codomain,
//! that the inverse recovers the input, that no image repeats within a weight,
//! and that the codomain at the image weight has exactly as many elements as
//! the domain (counted by an independent generator).

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{
    crank_bijection, crank_bijection_inverse, lemma2_forward, lemma2_inverse, lemma3_forward,
    lemma3_inverse, phi_forward, phi_inverse, PhiCase,
};
use crate::partitions::{gen_eo_star, gen_partitions, gen_partitions_bounded, Partition};

const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub map: &'static str,
    pub r: u32,
    pub max_weight: usize,
    /// Domain elements visited.
    pub checked: usize,
    pub case_counts: BTreeMap<String, usize>,
    pub failure_count: usize,
    /// The first few failures, human readable.
    pub failures: Vec<String>,
}

impl HarnessReport {
    fn new(map: &'static str, r: u32, max_weight: usize) -> Self {
        HarnessReport {
            map,
            r,
            max_weight,
            checked: 0,
            case_counts: BTreeMap::new(),
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(msg);
        }
    }

    fn count_case(&mut self, case: impl Into<String>) {
        *self.case_counts.entry(case.into()).or_insert(0) += 1;
    }

    fn check_bijective_count(
        &mut self,
        weight: usize,
        image_weight: usize,
        domain: usize,
        codomain: usize,
    ) {
        if domain != codomain {
            self.fail(format!(
                "weight {weight}: domain has {domain} elements but codomain at weight {image_weight} has {codomain}"
            ));
        }
    }
}

/// All `(λ, π)` with `λ ∈ 𝓟ₖ`, `π ∈ 𝓟_{≤k+r}` and `|λ| + |π| = w`.
fn phi_domain(w: usize, r: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in 0..=w {
        for lambda in gen_partitions(a) {
            let bound = lambda.largest() + r;
            for pi in gen_partitions_bounded(w - a, bound) {
                out.push((lambda.clone(), pi));
            }
        }
    }
    out
}

/// All `(μ, ν)` with `ν ∈ 𝓠_{t,r}` for some `t` and `|μ| + |ν| = w`.
fn phi_codomain(w: usize, r: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in 0..=w {
        let nus: Vec<Partition> = gen_partitions(w - a)
            .into_iter()
            .filter(|nu| nu.q_index(r).is_some())
            .collect();
        for mu in gen_partitions(a) {
            for nu in &nus {
                out.push((mu.clone(), nu.clone()));
            }
        }
    }
    out
}

/// Round trips both ways, weight preservation, codomain membership, case separation,
/// and bijectivity by counting for `φ`.
pub fn phi_harness(r: u32, max_weight: usize) -> HarnessReport {
    let mut report = HarnessReport::new("phi", r, max_weight);
    for w in 0..=max_weight {
        let domain = phi_domain(w, r);
        let mut images = HashSet::with_capacity(domain.len());
        for (lambda, pi) in &domain {
            report.checked += 1;
            let out = match phi_forward(lambda, pi, r) {
                Ok(out) => out,
                Err(e) => {
                    report.fail(format!("φ({lambda}, {pi}) failed: {e}"));
                    continue;
                }
            };
            report.count_case(match out.case {
                PhiCase::Case3 { .. } => "CASE3".to_string(),
                c => c.to_string(),
            });
            let (mu, nu) = (&out.first, &out.second);
            if mu.weight() + nu.weight() != w {
                report.fail(format!(
                    "φ({lambda}, {pi}) = ({mu}, {nu}) changes the weight"
                ));
            }
            let Some(t) = nu.q_index(r) else {
                report.fail(format!("φ({lambda}, {pi}): ν={nu} lies in no Q_{{t,{r}}}"));
                continue;
            };
            let separated = match out.case {
                PhiCase::Case1 => nu.largest() <= mu.largest() + r,
                PhiCase::Case2 => nu.largest() > mu.largest() + r && t == 1,
                PhiCase::Case3 { .. } => nu.largest() > mu.largest() + r && t >= 2,
            };
            if !separated {
                report.fail(format!(
                    "φ({lambda}, {pi}) = ({mu}, {nu}) violates case separation for {}",
                    out.case
                ));
            }
            match phi_inverse(mu, nu, r) {
                Ok(back)
                    if &back.first == lambda && &back.second == pi && back.case == out.case => {}
                Ok(back) => report.fail(format!(
                    "φ⁻¹(φ({lambda}, {pi})) = ({}, {}) [{}]",
                    back.first, back.second, back.case
                )),
                Err(e) => report.fail(format!("φ⁻¹({mu}, {nu}) failed: {e}")),
            }
            if !images.insert((out.first, out.second)) {
                report.fail(format!("φ is not injective at weight {w}"));
            }
        }

        let codomain = phi_codomain(w, r);
        report.check_bijective_count(w, w, domain.len(), codomain.len());
        for (mu, nu) in &codomain {
            match phi_inverse(mu, nu, r) {
                Ok(pre) => {
                    let k = pre.first.largest();
                    if !pre.second.is_p_upto(k + r) {
                        report.fail(format!("φ⁻¹({mu}, {nu}) leaves the domain"));
                    }
                    match phi_forward(&pre.first, &pre.second, r) {
                        Ok(again) if &again.first == mu && &again.second == nu => {}
                        _ => report.fail(format!("φ(φ⁻¹({mu}, {nu})) ≠ ({mu}, {nu})")),
                    }
                }
                Err(e) => report.fail(format!("φ⁻¹({mu}, {nu}) failed: {e}")),
            }
        }
    }
    report
}

/// `counts[k][a]` = number of `𝓞*ₖ` members of weight `a`, for `a <= max`.
///
/// An `𝓞*ₖ` member is an odd partition with `k` parts, each part doubled, so
/// this counts partitions of `a/2` into exactly `k` odd parts.
fn o_star_counts(max: usize) -> Vec<Vec<u64>> {
    let half = max / 2;
    // dp[j][m]: partitions of m into exactly j odd parts
    let mut dp = vec![vec![0u64; half + 1]; half + 1];
    dp[0][0] = 1;
    for part in (1..=half).step_by(2) {
        for j in 1..=half {
            for m in part..=half {
                dp[j][m] += dp[j - 1][m - part];
            }
        }
    }
    let mut counts = vec![vec![0u64; max + 1]; half + 1];
    for (k, row) in dp.iter().enumerate() {
        for (m, &c) in row.iter().enumerate() {
            counts[k][2 * m] = c;
        }
    }
    counts
}

/// Weight law `4|λ|+4|π|+2r`, membership in `𝓞*ₖ × 𝓞*_{k+r}`, inverse, injectivity, counting.
pub fn lemma2_harness(r: u32, max_weight: usize) -> HarnessReport {
    let mut report = HarnessReport::new("lemma2", r, max_weight);
    let max_image = 4 * max_weight + 2 * r as usize;
    let o_counts = o_star_counts(max_image);
    for w in 0..=max_weight {
        let target = 4 * w + 2 * r as usize;
        let domain = phi_domain(w, r);
        let mut images = HashSet::with_capacity(domain.len());
        for (lambda, pi) in &domain {
            report.checked += 1;
            let k = lambda.largest();
            let (l_star, p_star) = match lemma2_forward(lambda, pi, r) {
                Ok(v) => v,
                Err(e) => {
                    report.fail(format!("lemma2({lambda}, {pi}) failed: {e}"));
                    continue;
                }
            };
            report.count_case(format!("k={k}"));
            if l_star.weight() + p_star.weight() != target {
                report.fail(format!(
                    "lemma2({lambda}, {pi}) = ({l_star}, {p_star}) breaks the weight law"
                ));
            }
            if !l_star.is_o_star(k) || !p_star.is_o_star(k + r) {
                report.fail(format!(
                    "lemma2({lambda}, {pi}) = ({l_star}, {p_star}) leaves O*_{k} × O*_{}",
                    k + r
                ));
            }
            match lemma2_inverse(&l_star, &p_star, r) {
                Ok((a, b)) if &a == lambda && &b == pi => {}
                Ok((a, b)) => report.fail(format!("lemma2⁻¹(lemma2({lambda}, {pi})) = ({a}, {b})")),
                Err(e) => report.fail(format!("lemma2⁻¹({l_star}, {p_star}) failed: {e}")),
            }
            if !images.insert((l_star, p_star)) {
                report.fail(format!("lemma2 is not injective at weight {w}"));
            }
        }
        let mut codomain = 0u64;
        for k in 0..o_counts.len() {
            let k2 = k + r as usize;
            if k2 >= o_counts.len() {
                break;
            }
            for a in 0..=target {
                codomain += o_counts[k][a] * o_counts[k2][target - a];
            }
        }
        report.check_bijective_count(w, target, domain.len(), codomain as usize);
    }
    report
}

/// Number of partitions of `m`, by the standard recurrence over part sizes.
fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for m in part..=max {
            p[m] += p[m - part];
        }
    }
    p
}

/// `𝓔𝓞*` members with crank exactly `2r`, counted per weight up to `max`.
fn eo_crank_counts(max: usize, r: u32) -> Vec<u64> {
    (0..=max)
        .map(|n| {
            gen_eo_star(n)
                .iter()
                .filter(|p| p.eoc() == 2 * r as i64)
                .count() as u64
        })
        .collect()
}

/// Weight law `4|μ|+4|ν|+2r`, membership in `𝓔* × 𝓔𝓞*_{k,r}`, inverse, injectivity, counting.
pub fn lemma3_harness(r: u32, max_weight: usize) -> HarnessReport {
    let mut report = HarnessReport::new("lemma3", r, max_weight);
    let max_image = 4 * max_weight + 2 * r as usize;
    let p_counts = partition_counts(max_image / 4 + 1);
    let crank_counts = eo_crank_counts(max_image, r);
    for w in 0..=max_weight {
        let target = 4 * w + 2 * r as usize;
        let domain = phi_codomain(w, r);
        let mut images = HashSet::with_capacity(domain.len());
        for (mu, nu) in &domain {
            report.checked += 1;
            let k = nu.durfee_width(r);
            let (mu_star, nu_star) = match lemma3_forward(mu, nu, r) {
                Ok(v) => v,
                Err(e) => {
                    report.fail(format!("lemma3({mu}, {nu}) failed: {e}"));
                    continue;
                }
            };
            report.count_case(format!("k={k}"));
            if mu_star.weight() + nu_star.weight() != target {
                report.fail(format!(
                    "lemma3({mu}, {nu}) = ({mu_star}, {nu_star}) breaks the weight law"
                ));
            }
            if !mu_star.is_e_star() || !nu_star.is_eo_star_kr(k, r) || nu_star.eoc() != 2 * r as i64
            {
                report.fail(format!(
                    "lemma3({mu}, {nu}) = ({mu_star}, {nu_star}) leaves E* × EO*_{{{k},{r}}}"
                ));
            }
            match lemma3_inverse(&mu_star, &nu_star, r) {
                Ok((a, b)) if &a == mu && &b == nu => {}
                Ok((a, b)) => report.fail(format!("lemma3⁻¹(lemma3({mu}, {nu})) = ({a}, {b})")),
                Err(e) => report.fail(format!("lemma3⁻¹({mu_star}, {nu_star}) failed: {e}")),
            }
            if !images.insert((mu_star, nu_star)) {
                report.fail(format!("lemma3 is not injective at weight {w}"));
            }
        }
        // E* members of weight a are quadrupled partitions of a/4
        let codomain: u64 = (0..=target)
            .filter(|a| a % 4 == 0)
            .map(|a| p_counts[a / 4] * crank_counts[target - a])
            .sum();
        report.check_bijective_count(w, target, domain.len(), codomain as usize);
    }
    report
}

/// `𝓞*` members of weight `n` (any `k`): odd partitions of `n/2` with every part doubled.
fn o_star_members(n: usize) -> Vec<Partition> {
    if n % 2 == 1 {
        return Vec::new();
    }
    gen_partitions(n / 2)
        .into_iter()
        .filter(|p| p.parts().iter().all(|x| x % 2 == 1))
        .map(|p| Partition::from_sorted_unchecked(p.parts().iter().flat_map(|&x| [x, x]).collect()))
        .collect()
}

/// The composite map on every `(λ*, π*) ∈ 𝓞*ₖ × 𝓞*_{k+r}` with `|λ*| + |π*| <= max_weight`.
pub fn crank_harness(r: u32, max_weight: usize) -> HarnessReport {
    let mut report = HarnessReport::new("crank", r, max_weight);
    let o_by_weight: Vec<Vec<Partition>> = (0..=max_weight).map(o_star_members).collect();
    let e_counts = partition_counts(max_weight / 4 + 1);
    let crank_counts = eo_crank_counts(max_weight, r);
    for w in 0..=max_weight {
        let mut domain = 0usize;
        let mut images = HashSet::new();
        for a in 0..=w {
            for l_star in &o_by_weight[a] {
                let k = (l_star.len() / 2) as u32;
                for p_star in o_by_weight[w - a]
                    .iter()
                    .filter(|p| p.len() == 2 * (k + r) as usize)
                {
                    domain += 1;
                    report.checked += 1;
                    let (mu_star, nu_star) = match crank_bijection(l_star, p_star, r) {
                        Ok(v) => v,
                        Err(e) => {
                            report.fail(format!("crank({l_star}, {p_star}) failed: {e}"));
                            continue;
                        }
                    };
                    report.count_case(format!("k'={}", nu_star.odd_part_count() / 2));
                    if mu_star.weight() + nu_star.weight() != w {
                        report.fail(format!(
                            "crank({l_star}, {p_star}) = ({mu_star}, {nu_star}) changes the weight"
                        ));
                    }
                    if !mu_star.is_e_star()
                        || !nu_star.is_eo_star()
                        || nu_star.eoc() != 2 * r as i64
                    {
                        report.fail(format!(
                            "crank({l_star}, {p_star}) = ({mu_star}, {nu_star}) misses E* × EO* with crank {}",
                            2 * r
                        ));
                    }
                    match crank_bijection_inverse(&mu_star, &nu_star, r) {
                        Ok((a2, b2)) if &a2 == l_star && &b2 == p_star => {}
                        Ok((a2, b2)) => report
                            .fail(format!("crank⁻¹(crank({l_star}, {p_star})) = ({a2}, {b2})")),
                        Err(e) => report.fail(format!("crank⁻¹({mu_star}, {nu_star}) failed: {e}")),
                    }
                    if !images.insert((mu_star, nu_star)) {
                        report.fail(format!("crank map is not injective at weight {w}"));
                    }
                }
            }
        }
        let codomain: u64 = (0..=w)
            .filter(|a| a % 4 == 0)
            .map(|a| e_counts[a / 4] * crank_counts[w - a])
            .sum();
        report.check_bijective_count(w, w, domain, codomain as usize);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for r in 0..=2 {
            for report in [
                phi_harness(r, 8),
                lemma2_harness(r, 5),
                lemma3_harness(r, 5),
                crank_harness(r, 16),
            ] {
                assert!(report.passed(), "{report:?}");
                assert!(report.checked > 0);
            }
        }
    }

    #[test]
    fn o_star_counting_matches_filter() {
        let counts = o_star_counts(24);
        for n in 0..=24 {
            for (k, row) in counts.iter().enumerate() {
                let direct = gen_partitions(n)
                    .iter()
                    .filter(|p| p.is_o_star(k as u32))
                    .count() as u64;
                assert_eq!(row[n], direct, "n={n} k={k}");
            }
            let members = o_star_members(n);
            assert!(members.iter().all(|p| p.is_o_star((p.len() / 2) as u32)));
            let direct = gen_partitions(n)
                .iter()
                .filter(|p| p.is_o_star((p.len() / 2) as u32))
                .count();
            assert_eq!(members.len(), direct, "n={n}");
        }
    }

    #[test]
    fn phi_case_counts_cover_all_cases() {
        let report = phi_harness(0, 8);
        for case in ["CASE1", "CASE2", "CASE3"] {
            assert!(
                report.case_counts.get(case).copied().unwrap_or(0) > 0,
                "{case} never exercised"
            );
        }
    }
}
