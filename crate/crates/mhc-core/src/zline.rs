//! Degree-one cohomology over the integer line and the windowed escape test
//! for the cyclic operator in degree two.
//!
//! The group here is ℤ with the multiplicative twist σ(n) = λⁿ for an exact
//! nonzero base λ. Cochains cannot be tabulated, so functions are carried
//! symbolically (finite support, constants, powers of σ, steps, windowed
//! tables, and linear combinations) and every decision procedure works on a
//! symmetric window [−W, W].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalar::{CycloField, CycloScalar};
use alloc::sync::Arc;

/// Default half-width of the evaluation window.
pub const DEFAULT_WINDOW: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZLineError {
    /// The twist base must be invertible.
    ZeroLambda,
    WindowTooSmall { window: i64, min: i64 },
}

impl core::fmt::Display for ZLineError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ZLineError::ZeroLambda => write!(f, "the twist base must be nonzero"),
            ZLineError::WindowTooSmall { window, min } => {
                write!(f, "window {window} is too small (need at least {min})")
            }
        }
    }
}

impl core::error::Error for ZLineError {}

/// A function ℤ → scalars with enough structure to evaluate exactly at any
/// integer.
#[derive(Debug, Clone, PartialEq)]
pub enum ZFunction {
    /// Zero outside the listed points.
    FiniteSupport(BTreeMap<i64, CycloScalar>),
    Constant(CycloScalar),
    /// n ↦ baseⁿ.
    SigmaPower { base: CycloScalar },
    /// n ↦ 1 for n ≥ threshold, 0 below it.
    Step { threshold: i64 },
    /// Values tabulated from `start` upward; zero outside the table.
    Table { start: i64, values: Vec<CycloScalar> },
    /// Σ coeffᵢ·fᵢ.
    Sum(Vec<(CycloScalar, ZFunction)>),
}

impl ZFunction {
    pub fn eval(&self, n: i64, field: &Arc<CycloField>) -> CycloScalar {
        match self {
            ZFunction::FiniteSupport(map) => {
                map.get(&n).cloned().unwrap_or_else(|| field.zero())
            }
            ZFunction::Constant(v) => v.clone(),
            ZFunction::SigmaPower { base } => base.pow(n),
            ZFunction::Step { threshold } => {
                if n >= *threshold {
                    field.one()
                } else {
                    field.zero()
                }
            }
            ZFunction::Table { start, values } => {
                let offset = n - start;
                if offset >= 0 && (offset as usize) < values.len() {
                    values[offset as usize].clone()
                } else {
                    field.zero()
                }
            }
            ZFunction::Sum(terms) => {
                let mut acc = field.zero();
                for (coeff, f) in terms {
                    acc = &acc + &(coeff * &f.eval(n, field));
                }
                acc
            }
        }
    }

    /// n ↦ a + b·λ⁻ⁿ.
    pub fn geom(
        a: &CycloScalar,
        b: &CycloScalar,
        lambda: &CycloScalar,
    ) -> Result<ZFunction, ZLineError> {
        let inv = lambda.checked_inv().ok_or(ZLineError::ZeroLambda)?;
        Ok(ZFunction::Sum(alloc::vec![
            (a.clone(), ZFunction::Constant(a.field().one())),
            (b.clone(), ZFunction::SigmaPower { base: inv }),
        ]))
    }
}

/// The unique degree-one cocycle with F(1) = c, tabulated on [−W, W]. The
/// cocycle identity F(m+n) = F(n) + F(m)σ(n) pins F(0) = 0 and extends in
/// both directions by F(n+1) = c + F(n)λ.
pub fn solve_hh1_recurrence(
    lambda: &CycloScalar,
    c: &CycloScalar,
    window: i64,
) -> Result<Vec<(i64, CycloScalar)>, ZLineError> {
    let lambda_inv = lambda.checked_inv().ok_or(ZLineError::ZeroLambda)?;
    if window < 1 {
        return Err(ZLineError::WindowTooSmall { window, min: 1 });
    }
    let field = lambda.field().clone();
    let mut table = BTreeMap::new();
    table.insert(0i64, field.zero());
    let mut forward = field.zero();
    for n in 1..=window {
        forward = c + &(&forward * lambda);
        table.insert(n, forward.clone());
    }
    let mut backward = field.zero();
    for n in (-window..0).rev() {
        backward = &(&backward - c) * &lambda_inv;
        table.insert(n, backward.clone());
    }
    Ok(table.into_iter().collect())
}

/// Closed form of the degree-one cocycle for λ ≠ 1: F(n) = β(λⁿ − 1) with
/// β = c/(λ−1). Returns None for λ = 1, where the solution is c·n.
pub fn hh1_closed_form(lambda: &CycloScalar, c: &CycloScalar) -> Option<ZFunction> {
    let field = lambda.field().clone();
    let denom = lambda - &field.one();
    if denom.is_zero() {
        return None;
    }
    let beta = c / &denom;
    Some(ZFunction::Sum(alloc::vec![
        (beta.clone(), ZFunction::SigmaPower {
            base: lambda.clone(),
        }),
        (-&beta, ZFunction::Constant(field.one())),
    ]))
}

/// Dimension of degree-one cohomology over ℤ with twist base λ, decided on
/// the window: for λ ≠ 1 the generating cocycle is fitted with the
/// coboundary β(λⁿ − 1) and checked at every window point (dimension 0);
/// for λ = 1 coboundaries vanish while the cocycle n ↦ n does not
/// (dimension 1).
pub fn hh1_z_dim(lambda: &CycloScalar, window: i64) -> Result<usize, ZLineError> {
    if window < 2 {
        return Err(ZLineError::WindowTooSmall { window, min: 2 });
    }
    let field = lambda.field().clone();
    let c = field.one();
    let table = solve_hh1_recurrence(lambda, &c, window)?;
    if lambda.is_one() {
        let nontrivial = table.iter().any(|(_, v)| !v.is_zero());
        assert!(nontrivial, "the additive cocycle cannot vanish");
        return Ok(1);
    }
    let closed = hh1_closed_form(lambda, &c).expect("lambda is not one");
    for (n, value) in &table {
        assert!(
            *value == closed.eval(*n, &field),
            "recurrence and coboundary fit must agree at {n}"
        );
    }
    Ok(0)
}

/// A function ℤ² → scalars.
#[derive(Debug, Clone, PartialEq)]
pub enum ZTwoFunction {
    /// F(m, n) = q(n) when n = −m, zero elsewhere.
    AntiDiagonal { q: ZFunction },
}

impl ZTwoFunction {
    pub fn eval(&self, m: i64, n: i64, field: &Arc<CycloField>) -> CycloScalar {
        match self {
            ZTwoFunction::AntiDiagonal { q } => {
                if n == -m {
                    q.eval(n, field)
                } else {
                    field.zero()
                }
            }
        }
    }
}

/// Pointwise cyclic operator in degree two over ℤ:
/// (τF)(m, n) = F(−m−n, m)·λⁿ.
pub fn tau2_eval(
    f: &ZTwoFunction,
    m: i64,
    n: i64,
    lambda: &CycloScalar,
) -> CycloScalar {
    let field = lambda.field().clone();
    &f.eval(-m - n, m, &field) * &lambda.pow(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeReport {
    /// True when no affine combination a + b·λⁿ matches the slice up to a
    /// finitely-supported correction on the window.
    pub escapes: bool,
    /// Nonzero count of the best candidate's residual.
    pub residual_size: usize,
    /// Residual counts strictly above this mean escape.
    pub threshold: usize,
    /// Window points where the best candidate misses.
    pub witness_support: Vec<i64>,
}

/// Windowed decision: form F(m, n) = q(n)·[n = −m], apply τ, and read the
/// slice G(n) = (τF)(−n, 0) = q(−n) along the support axis. G is tested for
/// membership in span{1, λⁿ} plus finite support by fitting (a, b) from
/// pairs of far-out samples (plus constant and zero fallbacks) and counting
/// residual nonzeros on [−W, W]; every candidate missing at more than
/// 2·⌈W/3⌉ points means the slice has left the admissible class.
pub fn tau2_escape_check(
    q: &ZFunction,
    lambda: &CycloScalar,
    window: i64,
) -> Result<EscapeReport, ZLineError> {
    if lambda.is_zero() {
        return Err(ZLineError::ZeroLambda);
    }
    if window < 6 {
        return Err(ZLineError::WindowTooSmall { window, min: 6 });
    }
    let field = lambda.field().clone();
    let f = ZTwoFunction::AntiDiagonal { q: q.clone() };
    let slice: BTreeMap<i64, CycloScalar> = (-window..=window)
        .map(|n| (n, tau2_eval(&f, -n, 0, lambda)))
        .collect();

    let samples = [
        -window,
        -window + 1,
        -window + 2,
        window - 2,
        window - 1,
        window,
    ];
    let mut candidates: Vec<(CycloScalar, CycloScalar)> =
        alloc::vec![(field.zero(), field.zero())];
    for &s in &samples {
        candidates.push((slice[&s].clone(), field.zero()));
    }
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let pi = lambda.pow(samples[i]);
            let pj = lambda.pow(samples[j]);
            if pi == pj {
                continue;
            }
            let b = &(&slice[&samples[i]] - &slice[&samples[j]]) / &(&pi - &pj);
            let a = &slice[&samples[i]] - &(&b * &pi);
            candidates.push((a, b));
        }
    }

    let mut best: Option<(usize, Vec<i64>)> = None;
    for (a, b) in &candidates {
        let mut support = Vec::new();
        for n in -window..=window {
            let model = a + &(b * &lambda.pow(n));
            if slice[&n] != model {
                support.push(n);
            }
        }
        let better = match &best {
            None => true,
            Some((count, _)) => support.len() < *count,
        };
        if better {
            best = Some((support.len(), support));
        }
    }
    let (residual_size, witness_support) = best.expect("candidate list is never empty");
    let threshold = (2 * ((window + 2) / 3)) as usize;
    Ok(EscapeReport {
        escapes: residual_size > threshold,
        residual_size,
        threshold,
        witness_support,
    })
}
