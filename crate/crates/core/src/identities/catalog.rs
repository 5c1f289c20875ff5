//! Named registry of every verification with its default parameter grid.

use super::{
    verify_bailey_daum, verify_crank_symmetry, verify_eobar_unweighted, verify_eq1, verify_eq2,
    verify_gfover, verify_heine3, verify_lemma1, verify_lemma2, verify_lemma3, verify_qbinomial,
    verify_section3, verify_theorem1, verify_theorem2, HeineParams, QMono, Result,
    VerificationReport, ZChoice,
};
use crate::series::TruncOrder;

/// Names accepted by [`run`], in catalog order.
pub const NAMES: &[&str] = &[
    "eq1",
    "eq2",
    "crank-symmetry",
    "lemma1",
    "lemma2",
    "lemma3",
    "qbinomial",
    "section3",
    "bailey-daum",
    "heine3",
    "gfover",
    "eobar-unweighted",
    "theorem1",
    "theorem2",
];

/// Overrides for the default grids. Unset fields fall back to the grid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyParams {
    pub r: Option<u32>,
    pub z: Option<ZChoice>,
    pub a: Option<QMono>,
    pub b_exp: Option<usize>,
    pub c_exp: Option<usize>,
    pub z_mono: Option<QMono>,
    pub base: Option<usize>,
}

/// The grid for `r` when no override is given.
fn r_grid(name: &str) -> Vec<u32> {
    match name {
        "lemma1" => (0..=4).collect(),
        _ => (0..=2).collect(),
    }
}

/// Runs one catalog entry; `None` for an unknown name.
pub fn run(
    name: &str,
    order: TruncOrder,
    params: &VerifyParams,
) -> Option<Result<Vec<VerificationReport>>> {
    let rs = params.r.map(|r| vec![r]).unwrap_or_else(|| r_grid(name));
    let reports = match name {
        "eq1" => verify_eq1(order).map(|r| vec![r]),
        "eq2" => verify_eq2(order).map(|r| vec![r]),
        "crank-symmetry" => verify_crank_symmetry(order).map(|r| vec![r]),
        "lemma1" => rs.into_iter().map(|r| verify_lemma1(r, order)).collect(),
        "lemma2" => rs.into_iter().map(|r| verify_lemma2(r, order)).collect(),
        "lemma3" => rs.into_iter().map(|r| verify_lemma3(r, order)).collect(),
        "qbinomial" => qbinomial_grid(params)
            .into_iter()
            .map(|(a, z, b)| verify_qbinomial(a, z, b, order))
            .collect(),
        "section3" => verify_section3(order).map(|r| vec![r]),
        "bailey-daum" => {
            let zs = match params.z {
                Some(z) => vec![z],
                None => vec![
                    ZChoice::Generic,
                    ZChoice::QPower(0),
                    ZChoice::QPower(1),
                    ZChoice::Zero,
                ],
            };
            zs.into_iter()
                .map(|z| verify_bailey_daum(z, order))
                .collect()
        }
        "heine3" => heine_grid(params)
            .into_iter()
            .map(|p| verify_heine3(p, order))
            .collect(),
        "gfover" => verify_gfover(order).map(|r| vec![r]),
        "eobar-unweighted" => verify_eobar_unweighted(order).map(|r| vec![r]),
        "theorem1" => Ok(vec![verify_theorem1(order)]),
        "theorem2" => Ok(vec![verify_theorem2(order)]),
        _ => return None,
    };
    Some(reports)
}

/// Runs the whole catalog in order.
pub fn run_all(order: TruncOrder, params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for name in NAMES {
        out.extend(run(name, order, params).expect("catalog names are known")?);
    }
    Ok(out)
}

fn qbinomial_grid(params: &VerifyParams) -> Vec<(Option<QMono>, QMono, usize)> {
    if let Some(z) = params.z_mono {
        return vec![(params.a, z, params.base.unwrap_or(1))];
    }
    vec![
        (Some(QMono::new(1, 2)), QMono::new(-1, 2), 4),
        (None, QMono::new(1, 1), 1),
        (Some(QMono::new(-1, 1)), QMono::new(1, 1), 1),
        (Some(QMono::new(1, 3)), QMono::new(-1, 1), 2),
    ]
}

fn heine_grid(params: &VerifyParams) -> Vec<HeineParams> {
    if let Some(c) = params.c_exp {
        return vec![HeineParams {
            a: params.a.map(|a| a.exp),
            b: params.b_exp,
            c,
            z: params.z_mono.map_or(1, |z| z.exp),
        }];
    }
    let mut grid: Vec<HeineParams> = (0..=2).map(HeineParams::lemma1).collect();
    grid.push(HeineParams {
        a: Some(1),
        b: Some(2),
        c: 3,
        z: 1,
    });
    grid.push(HeineParams {
        a: None,
        b: Some(1),
        c: 2,
        z: 1,
    });
    grid
}
