//! The cyclic operator on twisted group cochains, the cocyclic identity
//! suite, the argument-reversal comparison with classical group cohomology,
//! and cyclic cohomology computed on the cyclicity-invariant subcomplex.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::cochain::{
    coboundary, codegeneracy, coface, table_len, Cochain, CochainError,
};
use crate::group::Character;
use crate::scalar::{CycloField, ScalarMatrix};

/// τ on degree-n cochains: (τF)(g₁..gₙ) = F((g₁⋯gₙ)⁻¹, g₁, …, g_{n−1})·σ(gₙ);
/// the identity in degree 0.
pub fn tau(sigma: &Character, f: &Cochain) -> Cochain {
    let n = f.degree();
    if n == 0 {
        return f.clone();
    }
    let group = f.group().clone();
    let mut out = Cochain::zero(&group, n).expect("same size as input table");
    let mut src = alloc::vec![0usize; n];
    for idx in 0..f.table().len() {
        let tuple = decode_tuple(group.order(), n, idx);
        let prod = tuple
            .iter()
            .fold(group.identity(), |acc, &g| group.mul(acc, g));
        src[0] = group.inv(prod);
        src[1..].copy_from_slice(&tuple[..n - 1]);
        let base = f.get(&src);
        if base.is_zero() {
            continue;
        }
        out.set(&tuple, base * sigma.value(tuple[n - 1]));
    }
    out
}

fn decode_tuple(order: usize, degree: usize, mut idx: usize) -> Vec<usize> {
    let mut t = alloc::vec![0usize; degree];
    for slot in (0..degree).rev() {
        t[slot] = idx % order;
        idx /= order;
    }
    t
}

/// The signed cyclic operator λ = (−1)ⁿ τ whose fixed points form the cyclic
/// subcomplex.
pub fn lambda(sigma: &Character, f: &Cochain) -> Cochain {
    let t = tau(sigma, f);
    if f.degree().is_multiple_of(2) {
        t
    } else {
        t.scale(&f.field().from_integer(-1))
    }
}

/// F is cyclic when λF = F.
pub fn is_cyclic(sigma: &Character, f: &Cochain) -> bool {
    lambda(sigma, f) == *f
}

/// Averaging projector P = (1/(n+1)) Σ_{k=0}^{n} λᵏ onto the cyclic
/// subspace (λ^{n+1} = id, so the powers stop at n).
pub fn cyclic_projector(sigma: &Character, f: &Cochain) -> Cochain {
    let n = f.degree();
    let mut acc = f.clone();
    let mut power = f.clone();
    for _ in 0..n {
        power = lambda(sigma, &power);
        acc = &acc + &power;
    }
    let weight = f
        .field()
        .from_rational(BigRational::new(1.into(), ((n + 1) as i64).into()));
    acc.scale(&weight)
}

/// Argument reversal with inversion: (ΞF)(g₁..gₙ) = F(gₙ⁻¹, …, g₁⁻¹).
/// An involution.
pub fn xi_transform(f: &Cochain) -> Cochain {
    let n = f.degree();
    let group = f.group().clone();
    let mut out = Cochain::zero(&group, n).expect("same size as input table");
    let mut src = alloc::vec![0usize; n];
    for idx in 0..f.table().len() {
        let tuple = decode_tuple(group.order(), n, idx);
        for (slot, &g) in tuple.iter().rev().enumerate() {
            src[slot] = group.inv(g);
        }
        let v = f.get(&src);
        if !v.is_zero() {
            out.set(&tuple, v.clone());
        }
    }
    out
}

/// The classical group-cohomology differential for the one-dimensional
/// module on which g acts by σ(g)⁻¹:
/// (dF)(g₁..g_{n+1}) = σ(g₁⁻¹)F(g₂..) + Σᵢ(−1)ⁱF(..gᵢgᵢ₊₁..) + (−1)^{n+1}F(g₁..gₙ).
pub fn classical_coboundary(sigma: &Character, f: &Cochain) -> Result<Cochain, CochainError> {
    let n = f.degree();
    let group = f.group().clone();
    let order = group.order();
    let mut out = Cochain::zero(&group, n + 1)?;
    for idx in 0..table_len(order, n + 1)? {
        let tuple = decode_tuple(order, n + 1, idx);
        let head = f.get(&tuple[1..]);
        let mut acc = if head.is_zero() {
            out.field().zero()
        } else {
            head * sigma.value(group.inv(tuple[0]))
        };
        let mut src = alloc::vec![0usize; n];
        for i in 1..=n {
            src[..i - 1].copy_from_slice(&tuple[..i - 1]);
            src[i - 1] = group.mul(tuple[i - 1], tuple[i]);
            src[i..].copy_from_slice(&tuple[i + 1..]);
            let term = f.get(&src);
            acc = if i % 2 == 0 { &acc + term } else { &acc - term };
        }
        let top = f.get(&tuple[..n]);
        acc = if (n + 1).is_multiple_of(2) {
            &acc + top
        } else {
            &acc - top
        };
        out.set(&tuple, acc);
    }
    Ok(out)
}

/// The classical differential as a matrix, for rank comparisons.
pub fn classical_coboundary_matrix(
    sigma: &Character,
    degree: usize,
) -> Result<ScalarMatrix, CochainError> {
    let group = sigma.group().clone();
    let order = group.order();
    let field = CycloField::new(group.exponent());
    let rows = table_len(order, degree + 1)?;
    let cols = table_len(order, degree)?;
    let mut m = ScalarMatrix::zero(rows, cols, &field);
    for col in 0..cols {
        let mut f = Cochain::zero(&group, degree)?;
        let tuple = decode_tuple(order, degree, col);
        f.set(&tuple, field.one());
        let image = classical_coboundary(sigma, &f)?;
        for (row, v) in image.table().iter().enumerate() {
            if !v.is_zero() {
                m.set(row, col, v.clone());
            }
        }
    }
    Ok(m)
}

/// Literal chain-map check Ξ∘b = d∘Ξ on `trials` pseudo-random integer
/// cochains of the given degree. Returns false as soon as one trial fails.
pub fn verify_xi_chain_map(
    sigma: &Character,
    degree: usize,
    trials: usize,
    seed: u64,
) -> Result<bool, CochainError> {
    let group = sigma.group().clone();
    let field = CycloField::new(group.exponent());
    let mut rng = SmallRng::seed_from_u64(seed);
    for _ in 0..trials {
        let f = Cochain::from_fn(&group, degree, |_| {
            field.from_integer(rng.gen_range(-3i64..=3))
        })?;
        let lhs = xi_transform(&coboundary(sigma, &f)?);
        let rhs = classical_coboundary(sigma, &xi_transform(&f))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The global sign s (if any) with Ξ(bF) = s·d(ΞF) for every basis cochain
/// of the degree. `Some(1)` when both sides agree everywhere (including the
/// all-zero case), `Some(-1)` when they are everywhere opposite, `None` when
/// no single sign works.
pub fn xi_comparison_sign(
    sigma: &Character,
    degree: usize,
) -> Result<Option<i8>, CochainError> {
    let group = sigma.group().clone();
    let field = CycloField::new(group.exponent());
    let mut plus_ok = true;
    let mut minus_ok = true;
    for col in 0..table_len(group.order(), degree)? {
        let mut f = Cochain::zero(&group, degree)?;
        let tuple = decode_tuple(group.order(), degree, col);
        f.set(&tuple, field.one());
        let lhs = xi_transform(&coboundary(sigma, &f)?);
        let rhs = classical_coboundary(sigma, &xi_transform(&f))?;
        if lhs != rhs {
            plus_ok = false;
        }
        if lhs != rhs.scale(&field.from_integer(-1)) {
            minus_ok = false;
        }
        if !plus_ok && !minus_ok {
            return Ok(None);
        }
    }
    Ok(if plus_ok {
        Some(1)
    } else if minus_ok {
        Some(-1)
    } else {
        None
    })
}

/// Whether the graded relation Ξ∘b = (−1)^{n+1}·d∘Ξ holds on the full basis
/// in the given degree n.
pub fn xi_graded_identity_holds(
    sigma: &Character,
    degree: usize,
) -> Result<bool, CochainError> {
    let expected: i8 = if (degree + 1).is_multiple_of(2) { 1 } else { -1 };
    let group = sigma.group().clone();
    let field = CycloField::new(group.exponent());
    let sign = field.from_integer(expected as i64);
    for col in 0..table_len(group.order(), degree)? {
        let mut f = Cochain::zero(&group, degree)?;
        let tuple = decode_tuple(group.order(), degree, col);
        f.set(&tuple, field.one());
        let lhs = xi_transform(&coboundary(sigma, &f)?);
        let rhs = classical_coboundary(sigma, &xi_transform(&f))?.scale(&sign);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReport {
    pub identity: &'static str,
    pub degree: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// Verify the compatibility of τ with the cofaces and codegeneracies in the
/// given degree, on every basis cochain:
///
/// * `coface_tau_exchange`:        δ_{p−1} τₙ = τ_{n+1} δ_p   (1 ≤ p ≤ n+1)
/// * `tau_delta0`:                 τ_{n+1} δ₀ = δ_{n+1}
/// * `codegeneracy_tau_exchange`:  τₙ σ_j = σ_{j−1} τ_{n+1}   (2 ≤ j ≤ n+1)
/// * `tau_sigma0`:                 τₙ σ₁ = σ_{n+1} τ_{n+1}²
/// * `tau_power`:                  τₙ^{n+1} = id
pub fn verify_cocyclic_identities(
    sigma: &Character,
    degree: usize,
) -> Result<Vec<CyclicReport>, CochainError> {
    let n = degree;
    let group = sigma.group().clone();
    let order = group.order();
    let mut out = Vec::new();

    let basis_n: Vec<Cochain> = (0..table_len(order, n)?)
        .map(|idx| {
            let mut f = Cochain::zero(&group, n)?;
            let tuple = decode_tuple(order, n, idx);
            f.set(&tuple, f.field().one());
            Ok(f)
        })
        .collect::<Result<_, CochainError>>()?;
    let basis_up: Vec<Cochain> = (0..table_len(order, n + 1)?)
        .map(|idx| {
            let mut f = Cochain::zero(&group, n + 1)?;
            let tuple = decode_tuple(order, n + 1, idx);
            f.set(&tuple, f.field().one());
            Ok(f)
        })
        .collect::<Result<_, CochainError>>()?;

    {
        let mut counterexample = None;
        'outer: for p in 1..=n + 1 {
            for (bidx, f) in basis_n.iter().enumerate() {
                let lhs = coface(sigma, &tau(sigma, f), p - 1)?;
                let rhs = tau(sigma, &coface(sigma, f, p)?);
                if lhs != rhs {
                    counterexample = Some(format!("p={p}, basis index {bidx}"));
                    break 'outer;
                }
            }
        }
        out.push(CyclicReport {
            identity: "coface_tau_exchange",
            degree: n,
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    {
        let mut counterexample = None;
        for (bidx, f) in basis_n.iter().enumerate() {
            let lhs = tau(sigma, &coface(sigma, f, 0)?);
            let rhs = coface(sigma, f, n + 1)?;
            if lhs != rhs {
                counterexample = Some(format!("basis index {bidx}"));
                break;
            }
        }
        out.push(CyclicReport {
            identity: "tau_delta0",
            degree: n,
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    {
        let mut counterexample = None;
        'outer: for j in 2..=n + 1 {
            for (bidx, f) in basis_up.iter().enumerate() {
                let lhs = tau(sigma, &codegeneracy(f, j));
                let rhs = codegeneracy(&tau(sigma, f), j - 1);
                if lhs != rhs {
                    counterexample = Some(format!("j={j}, basis index {bidx}"));
                    break 'outer;
                }
            }
        }
        out.push(CyclicReport {
            identity: "codegeneracy_tau_exchange",
            degree: n,
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    {
        let mut counterexample = None;
        for (bidx, f) in basis_up.iter().enumerate() {
            let lhs = tau(sigma, &codegeneracy(f, 1));
            let rhs = codegeneracy(&tau(sigma, &tau(sigma, f)), n + 1);
            if lhs != rhs {
                counterexample = Some(format!("basis index {bidx}"));
                break;
            }
        }
        out.push(CyclicReport {
            identity: "tau_sigma0",
            degree: n,
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    {
        let mut counterexample = None;
        for (bidx, f) in basis_n.iter().enumerate() {
            let mut acc = f.clone();
            for _ in 0..=n {
                acc = tau(sigma, &acc);
            }
            if acc != *f {
                counterexample = Some(format!("basis index {bidx}"));
                break;
            }
        }
        out.push(CyclicReport {
            identity: "tau_power",
            degree: n,
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocyclicError {
    Capacity(CochainError),
    /// The coboundary of a cyclic cochain failed to be cyclic — the
    /// cocyclic identities do not hold for this data.
    CyclicityViolation { degree: usize },
}

impl core::fmt::Display for CocyclicError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CocyclicError::Capacity(e) => write!(f, "{e}"),
            CocyclicError::CyclicityViolation { degree } => {
                write!(f, "coboundary left the cyclic subspace at degree {degree}")
            }
        }
    }
}

impl core::error::Error for CocyclicError {}

impl From<CochainError> for CocyclicError {
    fn from(e: CochainError) -> Self {
        CocyclicError::Capacity(e)
    }
}

/// Basis of the cyclic subspace { F : λF = F } in the given degree, from the
/// kernel of (λ − id).
pub fn cyclic_basis(sigma: &Character, degree: usize) -> Result<Vec<Cochain>, CochainError> {
    let group = sigma.group().clone();
    let order = group.order();
    let field = CycloField::new(group.exponent());
    let dim = table_len(order, degree)?;
    let mut m = ScalarMatrix::zero(dim, dim, &field);
    for col in 0..dim {
        let mut f = Cochain::zero(&group, degree)?;
        let tuple = decode_tuple(order, degree, col);
        f.set(&tuple, field.one());
        let image = lambda(sigma, &f);
        for (row, v) in image.table().iter().enumerate() {
            let entry = if row == col {
                v - &field.one()
            } else {
                v.clone()
            };
            if !entry.is_zero() {
                m.set(row, col, entry);
            }
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| Cochain::from_table(&group, degree, v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicResult {
    pub degree: usize,
    /// Dimension of the cyclic subspace in this degree.
    pub dim_cyclic: usize,
    pub dim_kernel: usize,
    pub dim_image_prev: usize,
    pub dim: usize,
}

fn restricted_rank(
    sigma: &Character,
    basis: &[Cochain],
    degree: usize,
) -> Result<usize, CocyclicError> {
    if basis.is_empty() {
        return Ok(0);
    }
    let group = sigma.group().clone();
    let field = CycloField::new(group.exponent());
    let rows = table_len(group.order(), degree + 1)?;
    let mut m = ScalarMatrix::zero(rows, basis.len(), &field);
    for (col, f) in basis.iter().enumerate() {
        let image = coboundary(sigma, f)?;
        if !is_cyclic(sigma, &image) {
            return Err(CocyclicError::CyclicityViolation { degree: degree + 1 });
        }
        for (row, v) in image.table().iter().enumerate() {
            if !v.is_zero() {
                m.set(row, col, v.clone());
            }
        }
    }
    Ok(m.rank())
}

/// Cyclic cohomology in the given degree: kernel modulo previous image of
/// the coboundary restricted to the cyclic subcomplex, all as exact ranks.
/// Every restricted image is re-checked to stay cyclic.
pub fn cyclic_cohomology(
    sigma: &Character,
    degree: usize,
) -> Result<CyclicResult, CocyclicError> {
    let basis = cyclic_basis(sigma, degree)?;
    let rank_out = restricted_rank(sigma, &basis, degree)?;
    let dim_cyclic = basis.len();
    let dim_kernel = dim_cyclic - rank_out;
    let dim_image_prev = if degree == 0 {
        0
    } else {
        let prev = cyclic_basis(sigma, degree - 1)?;
        restricted_rank(sigma, &prev, degree - 1)?
    };
    Ok(CyclicResult {
        degree,
        dim_cyclic,
        dim_kernel,
        dim_image_prev,
        dim: dim_kernel - dim_image_prev,
    })
}
