//! Group cochains F: Gⁿ → ℚ(ζ_N) with the coface/codegeneracy structure
//! twisted by a character σ, the resulting coboundary, and Hochschild
//! cohomology computed from exact matrix ranks.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{Character, GroupTable};
use crate::scalar::{CycloField, CycloScalar, ScalarMatrix};

/// Largest cochain table (|G|^degree entries) any operation will materialize.
pub const DEFAULT_TABLE_CAP: usize = 100_000;

/// Largest dense coboundary matrix (entry count) the cohomology routines
/// will build.
pub const DEFAULT_MATRIX_CAP: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CochainError {
    CapacityExceeded { required: usize, cap: usize },
}

impl fmt::Display for CochainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CochainError::CapacityExceeded { required, cap } => {
                write!(f, "computation needs {required} table entries, cap is {cap}")
            }
        }
    }
}

impl core::error::Error for CochainError {}

/// |G|^degree guarded against both overflow and the table cap.
pub fn table_len(order: usize, degree: usize) -> Result<usize, CochainError> {
    let mut acc: u128 = 1;
    for _ in 0..degree {
        acc = acc.saturating_mul(order as u128);
    }
    if acc > DEFAULT_TABLE_CAP as u128 {
        Err(CochainError::CapacityExceeded {
            required: acc.min(usize::MAX as u128) as usize,
            cap: DEFAULT_TABLE_CAP,
        })
    } else {
        Ok(acc as usize)
    }
}

fn index_of(order: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

fn decode(order: usize, degree: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0usize; degree];
    for slot in (0..degree).rev() {
        t[slot] = idx % order;
        idx /= order;
    }
    t
}

/// A function Gⁿ → ℚ(ζ_N), N the group exponent, stored as a flat table with
/// the first argument most significant. Degree 0 is a single scalar.
#[derive(Clone)]
pub struct Cochain {
    group: Arc<GroupTable>,
    field: Arc<CycloField>,
    degree: usize,
    table: Vec<CycloScalar>,
}

impl Cochain {
    pub fn zero(group: &Arc<GroupTable>, degree: usize) -> Result<Self, CochainError> {
        let field = CycloField::new(group.exponent());
        let len = table_len(group.order(), degree)?;
        Ok(Cochain {
            group: Arc::clone(group),
            field: field.clone(),
            degree,
            table: vec![field.zero(); len],
        })
    }

    pub fn from_table(
        group: &Arc<GroupTable>,
        degree: usize,
        table: Vec<CycloScalar>,
    ) -> Result<Self, CochainError> {
        let mut c = Cochain::zero(group, degree)?;
        assert_eq!(table.len(), c.table.len(), "table length");
        for v in &table {
            assert_eq!(v.order(), c.field.order(), "table entry field order");
        }
        c.table = table;
        Ok(c)
    }

    pub fn from_fn(
        group: &Arc<GroupTable>,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> CycloScalar,
    ) -> Result<Self, CochainError> {
        let mut c = Cochain::zero(group, degree)?;
        let order = group.order();
        for idx in 0..c.table.len() {
            let tuple = decode(order, degree, idx);
            let v = f(&tuple);
            assert_eq!(v.order(), c.field.order(), "value field order");
            c.table[idx] = v;
        }
        Ok(c)
    }

    /// The indicator cochain of one tuple.
    pub fn indicator(group: &Arc<GroupTable>, tuple: &[usize]) -> Result<Self, CochainError> {
        let mut c = Cochain::zero(group, tuple.len())?;
        let idx = index_of(group.order(), tuple);
        c.table[idx] = c.field.one();
        Ok(c)
    }

    /// A degree-0 cochain with the given value.
    pub fn constant(group: &Arc<GroupTable>, value: CycloScalar) -> Self {
        let mut c = Cochain::zero(group, 0).expect("degree 0 is always within cap");
        assert_eq!(value.order(), c.field.order(), "value field order");
        c.table[0] = value;
        c
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn table(&self) -> &[CycloScalar] {
        &self.table
    }

    pub fn get(&self, tuple: &[usize]) -> &CycloScalar {
        assert_eq!(tuple.len(), self.degree, "tuple arity");
        &self.table[index_of(self.group.order(), tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], value: CycloScalar) {
        assert_eq!(tuple.len(), self.degree, "tuple arity");
        assert_eq!(value.order(), self.field.order(), "value field order");
        let idx = index_of(self.group.order(), tuple);
        self.table[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(CycloScalar::is_zero)
    }

    pub fn scale(&self, s: &CycloScalar) -> Cochain {
        Cochain {
            group: Arc::clone(&self.group),
            field: Arc::clone(&self.field),
            degree: self.degree,
            table: self.table.iter().map(|v| v * s).collect(),
        }
    }
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.table == other.table
    }
}

impl Eq for Cochain {}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(deg {}", self.degree)?;
        let order = self.group.order();
        for (idx, v) in self.table.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let tuple = decode(order, self.degree, idx);
            write!(f, ", {tuple:?} ↦ {v}")?;
        }
        write!(f, ")")
    }
}

impl core::ops::Add for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        Cochain {
            group: Arc::clone(&self.group),
            field: Arc::clone(&self.field),
            degree: self.degree,
            table: self
                .table
                .iter()
                .zip(&rhs.table)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl core::ops::Sub for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        Cochain {
            group: Arc::clone(&self.group),
            field: Arc::clone(&self.field),
            degree: self.degree,
            table: self
                .table
                .iter()
                .zip(&rhs.table)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

fn sigma_value(sigma: &Character, field: &Arc<CycloField>, g: usize) -> CycloScalar {
    let v = sigma.value(g);
    debug_assert_eq!(v.order(), field.order());
    v.clone()
}

/// The i-th coface C^n → C^{n+1}, 0 ≤ i ≤ n+1:
/// i = 0 drops the first argument, 1 ≤ i ≤ n multiplies arguments i and i+1
/// together, and i = n+1 drops the last argument and pays σ(g_{n+1}).
pub fn coface(sigma: &Character, f: &Cochain, i: usize) -> Result<Cochain, CochainError> {
    let n = f.degree();
    assert!(i <= n + 1, "coface index out of range");
    let group = f.group().clone();
    let order = group.order();
    let mut out = Cochain::zero(&group, n + 1)?;
    for idx in 0..out.table.len() {
        let tuple = decode(order, n + 1, idx);
        let value = if i == 0 {
            f.table[index_of(order, &tuple[1..])].clone()
        } else if i <= n {
            let mut src = Vec::with_capacity(n);
            src.extend_from_slice(&tuple[..i - 1]);
            src.push(group.mul(tuple[i - 1], tuple[i]));
            src.extend_from_slice(&tuple[i + 1..]);
            f.table[index_of(order, &src)].clone()
        } else {
            let base = &f.table[index_of(order, &tuple[..n])];
            if base.is_zero() {
                out.field.zero()
            } else {
                base * &sigma_value(sigma, &out.field, tuple[n])
            }
        };
        out.table[idx] = value;
    }
    Ok(out)
}

/// The j-th codegeneracy C^n → C^{n-1}, 1 ≤ j ≤ n: inserts the group
/// identity as the j-th argument.
pub fn codegeneracy(f: &Cochain, j: usize) -> Cochain {
    let n = f.degree();
    assert!(n >= 1, "codegeneracy needs positive degree");
    assert!((1..=n).contains(&j), "codegeneracy index out of range");
    let group = f.group().clone();
    let order = group.order();
    let mut out = Cochain::zero(&group, n - 1).expect("smaller than input table");
    for idx in 0..out.table.len() {
        let tuple = decode(order, n - 1, idx);
        let mut src = Vec::with_capacity(n);
        src.extend_from_slice(&tuple[..j - 1]);
        src.push(group.identity());
        src.extend_from_slice(&tuple[j - 1..]);
        out.table[idx] = f.table[index_of(order, &src)].clone();
    }
    out
}

/// b = Σ (−1)ⁱ δᵢ, assembled from the generic cofaces.
pub fn coboundary(sigma: &Character, f: &Cochain) -> Result<Cochain, CochainError> {
    let n = f.degree();
    let mut acc = Cochain::zero(f.group(), n + 1)?;
    for i in 0..=n + 1 {
        let face = coface(sigma, f, i)?;
        acc = if i % 2 == 0 { &acc + &face } else { &acc - &face };
    }
    Ok(acc)
}

/// The same coboundary written as one closed formula evaluated per output
/// tuple: (bF)(g₁..g_{n+1}) = F(g₂..) + Σᵢ(−1)ⁱF(..gᵢgᵢ₊₁..) + (−1)^{n+1}F(g₁..gₙ)σ(g_{n+1}).
pub fn coboundary_closed_form(sigma: &Character, f: &Cochain) -> Result<Cochain, CochainError> {
    let n = f.degree();
    let group = f.group().clone();
    let order = group.order();
    let mut out = Cochain::zero(&group, n + 1)?;
    for idx in 0..out.table.len() {
        let tuple = decode(order, n + 1, idx);
        let mut acc = f.table[index_of(order, &tuple[1..])].clone();
        for i in 1..=n {
            let mut src = Vec::with_capacity(n);
            src.extend_from_slice(&tuple[..i - 1]);
            src.push(group.mul(tuple[i - 1], tuple[i]));
            src.extend_from_slice(&tuple[i + 1..]);
            let term = &f.table[index_of(order, &src)];
            acc = if i % 2 == 0 { &acc + term } else { &acc - term };
        }
        let top = &f.table[index_of(order, &tuple[..n])];
        if !top.is_zero() {
            let term = top * &sigma_value(sigma, &out.field, tuple[n]);
            acc = if (n + 1).is_multiple_of(2) { &acc + &term } else { &acc - &term };
        }
        out.table[idx] = acc;
    }
    Ok(out)
}

/// The coboundary C^n → C^{n+1} as a dense matrix over ℚ(ζ_N), columns
/// indexed by source tuples, rows by target tuples. Filled row by row from
/// the closed formula, independently of [`coboundary`].
pub fn coboundary_matrix(sigma: &Character, degree: usize) -> Result<ScalarMatrix, CochainError> {
    let group = sigma.group().clone();
    let order = group.order();
    let field = CycloField::new(group.exponent());
    let rows = table_len(order, degree + 1)?;
    let cols = table_len(order, degree)?;
    if rows.saturating_mul(cols) > DEFAULT_MATRIX_CAP {
        return Err(CochainError::CapacityExceeded {
            required: rows * cols,
            cap: DEFAULT_MATRIX_CAP,
        });
    }
    let mut m = ScalarMatrix::zero(rows, cols, &field);
    let one = field.one();
    for row in 0..rows {
        let tuple = decode(order, degree + 1, row);
        let mut add = |col: usize, positive: bool, scale: Option<&CycloScalar>| {
            let mut v = match scale {
                Some(s) => s.clone(),
                None => one.clone(),
            };
            if !positive {
                v = -&v;
            }
            let updated = &v + m.get(row, col);
            m.set(row, col, updated);
        };
        add(index_of(order, &tuple[1..]), true, None);
        for i in 1..=degree {
            let mut src = Vec::with_capacity(degree);
            src.extend_from_slice(&tuple[..i - 1]);
            src.push(group.mul(tuple[i - 1], tuple[i]));
            src.extend_from_slice(&tuple[i + 1..]);
            add(index_of(order, &src), i % 2 == 0, None);
        }
        let s = sigma_value(sigma, &field, tuple[degree]);
        add(index_of(order, &tuple[..degree]), (degree + 1).is_multiple_of(2), Some(&s));
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub dim_kernel: usize,
    pub dim_image_prev: usize,
    pub dim: usize,
}

/// dim HHⁿ for the σ-twisted complex: kernel of bₙ modulo image of bₙ₋₁,
/// both computed as exact ranks.
pub fn hochschild_cohomology(
    sigma: &Character,
    degree: usize,
) -> Result<CohomologyResult, CochainError> {
    let order = sigma.group().order();
    let source_dim = table_len(order, degree)?;
    let rank_out = coboundary_matrix(sigma, degree)?.rank();
    let dim_kernel = source_dim - rank_out;
    let dim_image_prev = if degree == 0 {
        0
    } else {
        coboundary_matrix(sigma, degree - 1)?.rank()
    };
    Ok(CohomologyResult {
        degree,
        dim_kernel,
        dim_image_prev,
        dim: dim_kernel - dim_image_prev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::characters;
    use proptest::prelude::*;

    fn rational(f: &Arc<CycloField>, n: i64) -> CycloScalar {
        f.from_integer(n)
    }

    #[test]
    fn degree_zero_coboundary_is_one_minus_sigma() {
        let g = GroupTable::cyclic(3).unwrap();
        let sigma = characters(&g)[1].clone();
        let c = Cochain::constant(&g, sigma.field().one());
        let b = coboundary(&sigma, &c).unwrap();
        for h in 0..3 {
            let expect = &c.field().one() - sigma.value(h);
            assert_eq!(b.get(&[h]), &expect);
        }
    }

    #[test]
    fn degree_one_coboundary_table_is_frozen() {
        // Indicator of the point 1 in ℤ/2, trivial twist:
        // (bF)(g₁,g₂) = F(g₂) − F(g₁g₂) + F(g₁).
        let g = GroupTable::cyclic(2).unwrap();
        let sigma = Character::trivial(&g);
        let f = Cochain::indicator(&g, &[1]).unwrap();
        let b = coboundary(&sigma, &f).unwrap();
        let fld = b.field().clone();
        assert_eq!(b.get(&[0, 0]), &fld.zero());
        assert_eq!(b.get(&[0, 1]), &fld.zero());
        assert_eq!(b.get(&[1, 0]), &fld.zero());
        assert_eq!(b.get(&[1, 1]), &rational(&fld, 2));
    }

    #[test]
    fn closed_form_matches_coface_assembly() {
        let g = GroupTable::symmetric3();
        for sigma in characters(&g) {
            for degree in 0..=2usize {
                let mut counter = 0i64;
                let f = Cochain::from_fn(&g, degree, |tuple| {
                    counter += 1;
                    let mix = tuple.iter().fold(counter, |acc, &x| acc * 2 + x as i64 - 1);
                    CycloField::new(g.exponent()).from_integer(mix % 5)
                })
                .unwrap();
                let a = coboundary(&sigma, &f).unwrap();
                let b = coboundary_closed_form(&sigma, &f).unwrap();
                assert_eq!(a, b, "degree {degree}");
            }
        }
    }

    #[test]
    fn matrix_route_agrees_with_application() {
        let g = GroupTable::cyclic(4).unwrap();
        for sigma in [characters(&g)[0].clone(), characters(&g)[1].clone()] {
            for degree in 0..=2usize {
                let m = coboundary_matrix(&sigma, degree).unwrap();
                let f = Cochain::from_fn(&g, degree, |tuple| {
                    let mix = tuple
                        .iter()
                        .enumerate()
                        .fold(1i64, |acc, (i, &x)| acc + (i as i64 + 2) * x as i64);
                    CycloField::new(g.exponent()).from_integer(mix)
                })
                .unwrap();
                let applied = coboundary(&sigma, &f).unwrap();
                let via_matrix = m.mul_vec(f.table());
                assert_eq!(applied.table(), via_matrix.as_slice(), "degree {degree}");
            }
        }
    }

    #[test]
    fn simplicial_coface_identities() {
        // δⱼδᵢ = δᵢδⱼ₋₁ for i < j, on every pair, for both a trivial and a
        // nontrivial twist.
        let g = GroupTable::cyclic(3).unwrap();
        for sigma in characters(&g) {
            let f = Cochain::from_fn(&g, 1, |t| {
                CycloField::new(3).from_integer(1 + 2 * t[0] as i64)
            })
            .unwrap();
            let n = f.degree();
            for j in 0..=n + 2 {
                for i in 0..j {
                    let lhs = coface(&sigma, &coface(&sigma, &f, i).unwrap(), j).unwrap();
                    let rhs = coface(&sigma, &coface(&sigma, &f, j - 1).unwrap(), i).unwrap();
                    assert_eq!(lhs, rhs, "i={i} j={j} sigma={:?}", sigma.exponents());
                }
            }
        }
    }

    #[test]
    fn codegeneracy_sections_collapse_cofaces() {
        // σⱼδⱼ₋₁ = σⱼδⱼ = id for every valid j.
        let g = GroupTable::symmetric3();
        let sigma = characters(&g)[1].clone();
        let f = Cochain::from_fn(&g, 2, |t| {
            CycloField::new(6).from_integer((t[0] * 7 + t[1] * 3) as i64 - 4)
        })
        .unwrap();
        let n = f.degree();
        for j in 1..=n + 1 {
            let up_low = coface(&sigma, &f, j - 1).unwrap();
            assert_eq!(codegeneracy(&up_low, j), f, "σ_{j} ∘ δ_{}", j - 1);
            let up_high = coface(&sigma, &f, j).unwrap();
            assert_eq!(codegeneracy(&up_high, j), f, "σ_{j} ∘ δ_{j}");
        }
    }

    #[test]
    fn capacity_cap_is_enforced() {
        let g = GroupTable::cyclic(6).unwrap();
        assert!(matches!(
            Cochain::zero(&g, 7),
            Err(CochainError::CapacityExceeded { .. })
        ));
        let sigma = Character::trivial(&g);
        let f = Cochain::zero(&g, 6).unwrap();
        assert!(matches!(
            coboundary(&sigma, &f),
            Err(CochainError::CapacityExceeded { .. })
        ));
        // Matrix cap: 6⁴ × 6³ fits, 6⁵ × 6⁴ does not.
        assert!(coboundary_matrix(&sigma, 3).is_ok());
        assert!(matches!(
            coboundary_matrix(&sigma, 4),
            Err(CochainError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn hochschild_dimensions_for_cyclic_two() {
        let g = GroupTable::cyclic(2).unwrap();
        let chars = characters(&g);
        let trivial = &chars[0];
        let sign = &chars[1];

        let h0 = hochschild_cohomology(trivial, 0).unwrap();
        assert_eq!((h0.dim_kernel, h0.dim_image_prev, h0.dim), (1, 0, 1));
        let h0 = hochschild_cohomology(sign, 0).unwrap();
        assert_eq!((h0.dim_kernel, h0.dim_image_prev, h0.dim), (0, 0, 0));

        let h1 = hochschild_cohomology(trivial, 1).unwrap();
        assert_eq!((h1.dim_kernel, h1.dim_image_prev, h1.dim), (0, 0, 0));
        let h1 = hochschild_cohomology(sign, 1).unwrap();
        assert_eq!((h1.dim_kernel, h1.dim_image_prev, h1.dim), (1, 1, 0));
    }

    #[test]
    fn hochschild_vanishes_in_positive_degree() {
        for spec in ["Z3", "S3"] {
            let g = GroupTable::named(spec).unwrap();
            for sigma in characters(&g) {
                for degree in 1..=2usize {
                    let h = hochschild_cohomology(&sigma, degree).unwrap();
                    assert_eq!(h.dim, 0, "{spec} degree {degree}");
                }
                let h0 = hochschild_cohomology(&sigma, 0).unwrap();
                assert_eq!(h0.dim, usize::from(sigma.is_trivial()), "{spec} degree 0");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn coboundary_squares_to_zero(
            entries in proptest::collection::vec(-4i64..=4, 9),
            char_index in 0usize..3,
            degree in 0usize..=1,
        ) {
            let g = GroupTable::cyclic(3).unwrap();
            let sigma = characters(&g)[char_index].clone();
            let len = table_len(3, degree).unwrap();
            let f = Cochain::from_table(
                &g,
                degree,
                entries[..len]
                    .iter()
                    .map(|&e| CycloField::new(3).from_integer(e))
                    .collect(),
            )
            .unwrap();
            let bb = coboundary(&sigma, &coboundary(&sigma, &f).unwrap()).unwrap();
            prop_assert!(bb.is_zero());
        }
    }
}
