//! Truncated formal power series with exact integer coefficients.
//!
//! [`ZQSeries`] is Laurent in `z` and truncated in `q`: every series carries a
//! [`TruncOrder`] `N` and is exact for `q^0 ..= q^N`. [`QSeries`] is the
//! univariate shadow obtained by specializing `z`.
//!
//! All arithmetic is checked; an `i64` overflow aborts the computation with
//! [`SeriesError::Overflow`] instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("q-exponent {n} exceeds truncation order {order}")]
    OrderOverflow { n: usize, order: usize },
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient overflow in {0}")]
    Overflow(&'static str),
    #[error("series is not invertible: constant term must be a lone +1 or -1")]
    NotInvertible,
    #[error("infinite product with q-exponent 0 does not converge")]
    NonconvergentProduct,
    #[error("sum did not stabilize: {stalled} consecutive terms failed to raise the q-order")]
    DivergentSum { stalled: usize },
    #[error("cannot substitute a q-power for z in a series with negative z-exponent {0}")]
    NegativeZExponent(i64),
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// Series are exact for q-exponents `0..=N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TruncOrder(pub usize);

impl TruncOrder {
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for TruncOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(SeriesError::Overflow("addition"))
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or(SeriesError::Overflow("multiplication"))
}

/// Univariate truncated series `c_0 + c_1 q + ... + c_N q^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    order: TruncOrder,
    coeffs: Vec<i64>,
}

impl QSeries {
    pub fn zero(order: TruncOrder) -> Self {
        QSeries {
            order,
            coeffs: vec![0; order.0 + 1],
        }
    }

    /// Builds a series from `c_0..c_N`; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        QSeries {
            order: TruncOrder(coeffs.len() - 1),
            coeffs,
        }
    }

    pub fn order(&self) -> TruncOrder {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<i64> {
        self.coeffs
            .get(n)
            .copied()
            .ok_or(SeriesError::OrderOverflow {
                n,
                order: self.order.0,
            })
    }

    pub fn to_zq(&self) -> ZQSeries {
        let mut out = ZQSeries::zero(self.order);
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out.rows[n].insert(0, c);
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_zq(), f)
    }
}

/// Point at which `z` is evaluated to obtain a [`QSeries`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZPoint {
    Zero,
    One,
}

/// One stored coefficient `c · z^m · q^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Term {
    pub n: usize,
    pub m: i64,
    pub c: i64,
}

/// First disagreement between two series, smallest `n` first, then smallest `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub m: i64,
    pub left: i64,
    pub right: i64,
}

/// Bivariate series: for each `n <= N` a sparse map `m -> c` giving `c z^m q^n`.
///
/// Zero coefficients are never stored, so derived equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZQSeries {
    order: TruncOrder,
    rows: Vec<BTreeMap<i64, i64>>,
}

impl ZQSeries {
    pub fn zero(order: TruncOrder) -> Self {
        ZQSeries {
            order,
            rows: vec![BTreeMap::new(); order.0 + 1],
        }
    }

    pub fn one(order: TruncOrder) -> Self {
        let mut s = Self::zero(order);
        s.rows[0].insert(0, 1);
        s
    }

    /// `c · z^m · q^n`.
    pub fn monomial(c: i64, m: i64, n: usize, order: TruncOrder) -> Result<Self> {
        if n > order.0 {
            return Err(SeriesError::OrderOverflow { n, order: order.0 });
        }
        let mut s = Self::zero(order);
        if c != 0 {
            s.rows[n].insert(m, c);
        }
        Ok(s)
    }

    /// `c · z^m · q^n`, or the zero series when `n` lies beyond the order.
    ///
    /// Useful for building terms like `q^{k^2}` whose exponent may run past `N`.
    pub fn monomial_or_zero(c: i64, m: i64, n: usize, order: TruncOrder) -> Self {
        Self::monomial(c, m, n, order).unwrap_or_else(|_| Self::zero(order))
    }

    /// Builds a series from `(m, n, c)` triples, summing duplicates.
    pub fn from_terms<I>(order: TruncOrder, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, usize, i64)>,
    {
        let mut s = Self::zero(order);
        for (m, n, c) in terms {
            if n > order.0 {
                return Err(SeriesError::OrderOverflow { n, order: order.0 });
            }
            s.accumulate(n, m, c)?;
        }
        s.normalize();
        Ok(s)
    }

    pub fn order(&self) -> TruncOrder {
        self.order
    }

    pub fn coeff(&self, m: i64, n: usize) -> Result<i64> {
        let row = self.rows.get(n).ok_or(SeriesError::OrderOverflow {
            n,
            order: self.order.0,
        })?;
        Ok(row.get(&m).copied().unwrap_or(0))
    }

    /// The `z`-polynomial multiplying `q^n`.
    pub fn row(&self, n: usize) -> Result<&BTreeMap<i64, i64>> {
        self.rows.get(n).ok_or(SeriesError::OrderOverflow {
            n,
            order: self.order.0,
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().map(move |(&m, &c)| Term { n, m, c }))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// Smallest `n` with a nonzero row, `None` for the zero series.
    pub fn min_q_order(&self) -> Option<usize> {
        self.rows.iter().position(|row| !row.is_empty())
    }

    fn accumulate(&mut self, n: usize, m: i64, c: i64) -> Result<()> {
        let slot = self.rows[n].entry(m).or_insert(0);
        *slot = checked_add(*slot, c)?;
        Ok(())
    }

    fn normalize(&mut self) {
        for row in &mut self.rows {
            row.retain(|_, c| *c != 0);
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order.0,
                right: other.order.0,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for t in other.terms() {
            out.accumulate(t.n, t.m, t.c)?;
        }
        out.normalize();
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for row in &mut out.rows {
            for c in row.values_mut() {
                *c = -*c;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.order);
        for t in self.terms() {
            out.accumulate(t.n, t.m, checked_mul(t.c, k)?)?;
        }
        out.normalize();
        Ok(out)
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order.0;
        let mut out = Self::zero(self.order);
        for (n1, row1) in self.rows.iter().enumerate() {
            if row1.is_empty() {
                continue;
            }
            for (n2, row2) in other.rows.iter().enumerate().take(order - n1 + 1) {
                for (&m1, &c1) in row1 {
                    for (&m2, &c2) in row2 {
                        out.accumulate(n1 + n2, m1 + m2, checked_mul(c1, c2)?)?;
                    }
                }
            }
        }
        out.normalize();
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse by order-by-order recursion.
    ///
    /// The `q^0` row must be exactly `±1` (no other `z` support there).
    pub fn invert(&self) -> Result<Self> {
        let unit = match self.rows[0].iter().collect::<Vec<_>>().as_slice() {
            [(&0, &c)] if c == 1 || c == -1 => c,
            _ => return Err(SeriesError::NotInvertible),
        };
        let mut inv = Self::zero(self.order);
        inv.rows[0].insert(0, unit);
        for n in 1..=self.order.0 {
            let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
            for j in 1..=n {
                for (&m1, &c1) in &self.rows[j] {
                    for (&m2, &c2) in &inv.rows[n - j] {
                        let slot = acc.entry(m1 + m2).or_insert(0);
                        *slot = checked_add(*slot, checked_mul(c1, c2)?)?;
                    }
                }
            }
            // unit is its own inverse
            let row = acc
                .into_iter()
                .map(|(m, c)| checked_mul(-unit, c).map(|c| (m, c)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            inv.rows[n] = row;
        }
        inv.normalize();
        Ok(inv)
    }

    /// In-place multiplication by the binomial `1 + c·z^m·q^e`.
    fn mul_binomial(&mut self, c: i64, m: i64, e: usize) -> Result<()> {
        if e > self.order.0 {
            return Ok(());
        }
        let source = self.rows.clone();
        for n in e..=self.order.0 {
            for (&m0, &c0) in &source[n - e] {
                let slot = self.rows[n].entry(m0 + m).or_insert(0);
                *slot = checked_add(*slot, checked_mul(c, c0)?)?;
            }
        }
        self.normalize();
        Ok(())
    }

    /// `z ↦ z^{-1}`.
    pub fn mirror_z(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(&m, &c)| (-m, c)).collect())
            .collect();
        ZQSeries {
            order: self.order,
            rows,
        }
    }

    /// Specializes `z` on the expanded series: `One` sums each row, `Zero` keeps the `z^0` entries.
    pub fn eval_z(&self, point: ZPoint) -> Result<QSeries> {
        let coeffs = self
            .rows
            .iter()
            .map(|row| match point {
                ZPoint::Zero => Ok(row.get(&0).copied().unwrap_or(0)),
                ZPoint::One => row.values().try_fold(0i64, |a, &c| checked_add(a, c)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Substitutes `z = q^e`; requires every stored `z`-exponent to be nonnegative.
    pub fn substitute_z_power(&self, e: usize) -> Result<Self> {
        let mut out = Self::zero(self.order);
        for t in self.terms() {
            if t.m < 0 {
                return Err(SeriesError::NegativeZExponent(t.m));
            }
            let n = t.n + t.m as usize * e;
            if n <= self.order.0 {
                out.accumulate(n, 0, t.c)?;
            }
        }
        out.normalize();
        Ok(out)
    }

    /// Same coefficients viewed at a smaller order.
    pub fn truncate(&self, order: TruncOrder) -> Self {
        assert!(order <= self.order, "truncate cannot raise the order");
        ZQSeries {
            order,
            rows: self.rows[..=order.0].to_vec(),
        }
    }
}

/// Compares two series of equal order; `None` means they agree through `q^N`.
pub fn eq_upto(left: &ZQSeries, right: &ZQSeries) -> Result<Option<Mismatch>> {
    left.check_order(right)?;
    for n in 0..=left.order.0 {
        let (a, b) = (&left.rows[n], &right.rows[n]);
        if a == b {
            continue;
        }
        let m = a
            .keys()
            .chain(b.keys())
            .copied()
            .filter(|m| a.get(m) != b.get(m))
            .min()
            .expect("rows differ");
        return Ok(Some(Mismatch {
            n,
            m,
            left: a.get(&m).copied().unwrap_or(0),
            right: b.get(&m).copied().unwrap_or(0),
        }));
    }
    Ok(None)
}

impl fmt::Display for ZQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in self.terms() {
            let (sign, abs) = if t.c < 0 { ("-", -t.c) } else { ("+", t.c) };
            if first {
                if t.c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mut factors = Vec::new();
            match t.m {
                0 => {}
                1 => factors.push("z".to_string()),
                m => factors.push(format!("z^{m}")),
            }
            match t.n {
                0 => {}
                1 => factors.push("q".to_string()),
                n => factors.push(format!("q^{n}")),
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order.0 + 1)
    }
}

/// Number of factors in a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochCount {
    Finite(usize),
    Infinite,
}

/// `∏_{k < count} (1 + sign · z^{z_exp} · q^{q_exp + k·q_step})`.
///
/// `sign` is the sign inside each factor, so `(q;q)_∞` has `sign = -1`.
/// [`PochSpec::new`] builds the spec for `(a; q^step)_count` from the base `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochSpec {
    pub sign: i64,
    pub z_exp: i64,
    pub q_exp: usize,
    pub q_step: usize,
    pub count: PochCount,
}

impl PochSpec {
    /// `(a; q^q_step)_count` with `a = a_sign · z^{z_exp} · q^{q_exp}`.
    pub fn new(a_sign: i64, z_exp: i64, q_exp: usize, q_step: usize, count: PochCount) -> Self {
        PochSpec {
            sign: -a_sign,
            z_exp,
            q_exp,
            q_step,
            count,
        }
    }

    /// `(q^{q_exp}; q^{q_step})_∞`, the most common shape.
    pub fn q(q_exp: usize, q_step: usize) -> Self {
        Self::new(1, 0, q_exp, q_step, PochCount::Infinite)
    }
}

/// Truncated expansion of a q-Pochhammer product.
///
/// Factors whose q-exponent exceeds `N` are `1` to order `N` and are skipped.
pub fn pochhammer(spec: PochSpec, order: TruncOrder) -> Result<ZQSeries> {
    assert!(spec.q_step >= 1, "q_step must be at least 1");
    assert!(spec.sign == 1 || spec.sign == -1, "factor sign must be ±1");
    let limit = match spec.count {
        PochCount::Infinite if spec.q_exp == 0 => return Err(SeriesError::NonconvergentProduct),
        PochCount::Infinite => usize::MAX,
        PochCount::Finite(c) => c,
    };
    let mut s = ZQSeries::one(order);
    for k in 0..limit {
        let e = spec.q_exp + k * spec.q_step;
        if e > order.0 {
            break;
        }
        s.mul_binomial(spec.sign, spec.z_exp, e)?;
    }
    Ok(s)
}

/// Sums `term(0) + term(1) + ...`, stopping at the first term that vanishes to order `N`.
///
/// Callers promise that the minimum q-order of the terms is nondecreasing and
/// unbounded. If `10·(N+2)` consecutive terms fail to raise it the sum is
/// reported as divergent.
pub fn sum_until_stable<F, E>(order: TruncOrder, mut term: F) -> std::result::Result<ZQSeries, E>
where
    F: FnMut(usize) -> std::result::Result<ZQSeries, E>,
    E: From<SeriesError>,
{
    let limit = 10 * (order.0 + 2);
    let mut acc = ZQSeries::zero(order);
    let mut highest: Option<usize> = None;
    let mut stalled = 0usize;
    for k in 0.. {
        let t = term(k)?;
        let Some(min) = t.min_q_order() else { break };
        if highest.is_some_and(|h| min <= h) {
            stalled += 1;
            if stalled >= limit {
                return Err(SeriesError::DivergentSum { stalled }.into());
            }
        } else {
            stalled = 0;
            highest = Some(min);
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}
