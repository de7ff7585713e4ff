//! Exact scalars in cyclotomic number fields ℚ(ζ_N), plus the small amount
//! of dense linear algebra (rank, kernels) the cohomology computations need.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The field ℚ(ζ_N) presented as ℚ[x] modulo the N-th cyclotomic polynomial.
///
/// Scalars hold an `Arc` to their field; fields of equal `order` are
/// interchangeable regardless of which `Arc` they came from.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    order: u32,
    // Coefficients of Φ_N, constant term first, leading coefficient 1.
    modulus: Vec<BigRational>,
}

impl CycloField {
    pub fn new(order: u32) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_polynomial(order);
        Arc::new(CycloField { order, modulus })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of the field over ℚ, i.e. φ(order).
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CycloScalar {
        CycloScalar {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloScalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, value: BigRational) -> CycloScalar {
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        coeffs[0] = value;
        CycloScalar {
            field: Arc::clone(self),
            coeffs,
        }
    }

    pub fn from_integer(self: &Arc<Self>, value: i64) -> CycloScalar {
        self.from_rational(BigRational::from_integer(value.into()))
    }

    /// The distinguished primitive N-th root of unity ζ_N.
    pub fn root(self: &Arc<Self>) -> CycloScalar {
        self.root_power(1)
    }

    /// ζ_N^k for any integer k (negative exponents wrap around).
    pub fn root_power(self: &Arc<Self>, k: i64) -> CycloScalar {
        let n = self.order as i64;
        let k = k.rem_euclid(n) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        self.from_poly(poly)
    }

    /// Build a scalar from arbitrary polynomial coefficients (constant term
    /// first), reducing modulo Φ_N.
    pub fn from_poly(self: &Arc<Self>, poly: Vec<BigRational>) -> CycloScalar {
        let mut rem = if poly.len() > self.degree() {
            let (_, r) = poly_divmod(&poly, &self.modulus);
            r
        } else {
            poly
        };
        rem.resize(self.degree(), BigRational::zero());
        CycloScalar {
            field: Arc::clone(self),
            coeffs: rem,
        }
    }
}

/// An element of ℚ(ζ_N), stored as a reduced polynomial in ζ_N with exactly
/// φ(N) rational coefficients.
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Coefficients in the power basis 1, ζ, ζ², …, constant term first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Some(q) when the element lies in ℚ ⊂ ℚ(ζ_N).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &CycloScalar) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing scalars from different cyclotomic orders"
        );
    }

    pub fn inv(&self) -> CycloScalar {
        self.checked_inv().expect("inverse of zero")
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[x];
    /// `None` for zero.
    pub fn checked_inv(&self) -> Option<CycloScalar> {
        if self.is_zero() {
            return None;
        }
        // gcd(a, Φ_N) is a nonzero constant since Φ_N is irreducible and
        // deg a < deg Φ_N; the Bezout coefficient of a is the inverse up to
        // that constant.
        let mut r0: Vec<BigRational> = self.field.modulus.clone();
        let mut r1: Vec<BigRational> = self.coeffs.clone();
        poly_trim(&mut r1);
        let mut s0: Vec<BigRational> = Vec::new(); // coefficient of `a` in r0
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !poly_is_zero(&r1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        // r0 = gcd, a constant; s0 * a ≡ r0 (mod Φ_N)
        debug_assert_eq!(r0.len(), 1, "cyclotomic modulus must be irreducible");
        let scale = r0[0].recip();
        let bezout: Vec<BigRational> = s0.iter().map(|c| c * &scale).collect();
        Some(self.field.from_poly(bezout))
    }

    pub fn pow(&self, exponent: i64) -> CycloScalar {
        if exponent < 0 {
            return self.inv().pow(-exponent);
        }
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut e = exponent as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Re-express this scalar in ℚ(ζ_M) for any M divisible by the current
    /// order, via ζ_N ↦ ζ_M^{M/N}.
    pub fn embed(&self, target: &Arc<CycloField>) -> CycloScalar {
        assert!(
            target.order.is_multiple_of(self.field.order),
            "can only embed into a field whose order is a multiple"
        );
        if target.order == self.field.order {
            return CycloScalar {
                field: Arc::clone(target),
                coeffs: self.coeffs.clone(),
            };
        }
        let step = (target.order / self.field.order) as i64;
        let zeta = target.root_power(step);
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &zeta;
            if !c.is_zero() {
                acc = &acc + &target.from_rational(c.clone());
            }
        }
        acc
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z^{i}")?;
            } else {
                write!(f, "{mag}*z^{i}")?;
            }
        }
        Ok(())
    }
}

impl core::ops::Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl core::ops::Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl core::ops::Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl core::ops::Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.assert_same_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let product = poly_mul(&self.coeffs, &rhs.coeffs);
        self.field.from_poly(product)
    }
}

impl core::ops::Div for &CycloScalar {
    type Output = CycloScalar;
    // Field division is multiplication by the modular inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &CycloScalar) -> CycloScalar {
        self * &rhs.inv()
    }
}

/// Φ_N as rational coefficients, constant term first. Computed by dividing
/// x^N − 1 by Φ_d for every proper divisor d of N.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    let mut cache: Vec<Vec<BigRational>> = Vec::with_capacity(n as usize + 1);
    cache.push(Vec::new()); // index 0 unused
    for m in 1..=n {
        let mut phi = vec![BigRational::zero(); m as usize + 1];
        phi[0] = -BigRational::one();
        phi[m as usize] = BigRational::one();
        for d in 1..m {
            if m % d == 0 {
                let (q, r) = poly_divmod(&phi, &cache[d as usize]);
                debug_assert!(poly_is_zero(&r), "cyclotomic division must be exact");
                phi = q;
            }
        }
        cache.push(phi);
    }
    cache.swap_remove(n as usize)
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    out
}

/// Division with remainder in ℚ[x]; the divisor may have any nonzero leading
/// coefficient. Returns (quotient, remainder), both trimmed.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = a.to_vec();
    poly_trim(&mut rem);
    let mut div: Vec<BigRational> = b.to_vec();
    poly_trim(&mut div);
    assert!(!div.is_empty(), "polynomial division by zero");
    let db = div.len() - 1;
    let lead = div[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let factor = &rem[da] / &lead;
        quot[da - db] = factor.clone();
        for i in 0..=db {
            if !div[i].is_zero() {
                let t = &div[i] * &factor;
                rem[da - db + i] -= t;
            }
        }
        // The leading term cancels by construction.
        rem.pop();
        poly_trim(&mut rem);
    }
    poly_trim(&mut quot);
    (quot, rem)
}

/// Dense row-major matrix over one cyclotomic field. Row/column counts of
/// zero are allowed; the field is carried so kernels of empty maps still
/// know their scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: Arc<CycloField>,
    rows: usize,
    cols: usize,
    data: Vec<CycloScalar>,
}

impl ScalarMatrix {
    pub fn zero(rows: usize, cols: usize, field: &Arc<CycloField>) -> Self {
        ScalarMatrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &Arc<CycloField>, rows: Vec<Vec<CycloScalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        ScalarMatrix {
            field: Arc::clone(field),
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: CycloScalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut out = ScalarMatrix::zero(self.cols, self.rows, &self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Horizontal concatenation [self | other]; both must have equal rows.
    pub fn hstack(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.rows, other.rows, "hstack requires equal row counts");
        let mut out = ScalarMatrix::zero(self.rows, self.cols + other.cols, &self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycloScalar]) -> Vec<CycloScalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = self.field.zero();
            for (c, vc) in v.iter().enumerate() {
                let a = self.get(r, c);
                if a.is_zero() || vc.is_zero() {
                    continue;
                }
                acc = &acc + &(a * vc);
            }
            out.push(acc);
        }
        out
    }

    /// Rank by forward Gaussian elimination. Pivot choice is deterministic:
    /// scan columns left to right, take the first row with a nonzero entry.
    // The inner loops address two rows of the same storage at once; index
    // loops are the clearest way to write the elimination kernel.
    #[allow(clippy::needless_range_loop)]
    pub fn rank(&self) -> usize {
        let mut m = self.clone_rows();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(sel) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, sel);
            let inv = m[pivot_row][col].inv();
            for j in col..self.cols {
                if !m[pivot_row][j].is_zero() {
                    m[pivot_row][j] = &m[pivot_row][j] * &inv;
                }
            }
            for r in (pivot_row + 1)..self.rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for j in col..self.cols {
                    if !m[pivot_row][j].is_zero() {
                        m[r][j] = &m[r][j] - &(&f * &m[pivot_row][j]);
                    }
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Basis of the right null space { v : M v = 0 }, each vector of length
    /// `cols`, obtained from the reduced row-echelon form (one basis vector
    /// per free column, in column order).
    pub fn kernel_basis(&self) -> Vec<Vec<CycloScalar>> {
        let (m, pivots) = self.rref();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&m[row][free];
            }
            basis.push(v);
        }
        basis
    }

    fn clone_rows(&self) -> Vec<Vec<CycloScalar>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    // Same elimination-kernel shape as `rank`; see the note there.
    #[allow(clippy::needless_range_loop)]
    fn rref(&self) -> (Vec<Vec<CycloScalar>>, Vec<usize>) {
        let mut m = self.clone_rows();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(sel) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, sel);
            let inv = m[pivot_row][col].inv();
            for j in col..self.cols {
                if !m[pivot_row][j].is_zero() {
                    m[pivot_row][j] = &m[pivot_row][j] * &inv;
                }
            }
            for r in 0..self.rows {
                if r == pivot_row || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for j in col..self.cols {
                    if !m[pivot_row][j].is_zero() {
                        m[r][j] = &m[r][j] - &(&f * &m[pivot_row][j]);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic_polynomial(1), vec![int(-1), int(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![int(1), int(1)]);
        assert_eq!(cyclotomic_polynomial(3), vec![int(1), int(1), int(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![int(1), int(0), int(1)]);
        assert_eq!(cyclotomic_polynomial(6), vec![int(1), int(-1), int(1)]);
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![int(1), int(0), int(-1), int(0), int(1)]
        );
    }

    #[test]
    fn product_of_cyclotomics_is_x_n_minus_1() {
        for n in 1u32..=30 {
            let mut prod = vec![int(1)];
            for d in 1..=n {
                if n % d == 0 {
                    prod = poly_mul(&prod, &cyclotomic_polynomial(d));
                }
            }
            let mut expect = vec![int(0); n as usize + 1];
            expect[0] = int(-1);
            expect[n as usize] = int(1);
            assert_eq!(prod, expect, "order {n}");
        }
    }

    #[test]
    fn sixth_root_squares_to_root_minus_one() {
        let f = CycloField::new(6);
        let z = f.root();
        let expect = &z - &f.one();
        assert_eq!(&z * &z, expect);
    }

    #[test]
    fn root_powers_wrap_and_invert() {
        let f = CycloField::new(12);
        let z = f.root();
        assert_eq!(z.pow(12), f.one());
        assert_eq!(z.pow(-1), f.root_power(11));
        assert_eq!(f.root_power(-5), f.root_power(7));
        assert!(z.pow(6).as_rational() == Some(int(-1)));
    }

    #[test]
    fn inverse_round_trips() {
        let f = CycloField::new(12);
        let a = &(&f.root_power(5) * &f.from_rational(rat(2, 3))) + &f.from_integer(7);
        let b = &a * &a.inv();
        assert!(b.is_one());
        assert!(f.zero().checked_inv().is_none());
    }

    #[test]
    fn embedding_is_a_field_map() {
        let f3 = CycloField::new(3);
        let f6 = CycloField::new(6);
        let z3 = f3.root();
        // ζ3 = ζ6²
        assert_eq!(z3.embed(&f6), f6.root_power(2));
        let a = &z3 + &f3.from_integer(2);
        let b = &(&z3 * &z3) - &f3.from_rational(rat(1, 2));
        assert_eq!(
            (&a * &b).embed(&f6),
            &a.embed(&f6) * &b.embed(&f6)
        );
        assert_eq!(
            (&a + &b).embed(&f6),
            &a.embed(&f6) + &b.embed(&f6)
        );
    }

    #[test]
    fn rank_of_dependent_root_matrix_is_one() {
        // Rows (1, ζ3) and (ζ3², 1) are proportional: ζ3²·(1, ζ3) = (ζ3², 1).
        let f = CycloField::new(3);
        let m = ScalarMatrix::from_rows(
            &f,
            vec![
                vec![f.one(), f.root()],
                vec![f.root_power(2), f.one()],
            ],
        );
        assert_eq!(m.rank(), 1);
        assert_eq!(m.transpose().rank(), 1);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for v in &kernel {
            for entry in m.mul_vec(v) {
                assert!(entry.is_zero());
            }
        }
    }

    #[test]
    fn kernel_of_zero_and_empty_maps() {
        let f = CycloField::new(1);
        let z = ScalarMatrix::zero(3, 2, &f);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 2);
        let empty_rows = ScalarMatrix::zero(0, 4, &f);
        assert_eq!(empty_rows.rank(), 0);
        assert_eq!(empty_rows.kernel_basis().len(), 4);
        let empty_cols = ScalarMatrix::zero(4, 0, &f);
        assert_eq!(empty_cols.rank(), 0);
        assert!(empty_cols.kernel_basis().is_empty());
    }

    fn small_scalar(f: &Arc<CycloField>, seed: (i8, i8, i8, i8)) -> CycloScalar {
        let (a, b, c, d) = seed;
        let mut acc = f.from_rational(rat(a as i64, 1 + (b as i64).abs()));
        acc = &acc + &(&f.root() * &f.from_integer(c as i64));
        acc = &acc + &(&f.root_power(3) * &f.from_integer(d as i64));
        acc
    }

    proptest! {
        #[test]
        fn field_axioms_hold(
            x in any::<(i8, i8, i8, i8)>(),
            y in any::<(i8, i8, i8, i8)>(),
            z in any::<(i8, i8, i8, i8)>(),
        ) {
            let f = CycloField::new(12);
            let a = small_scalar(&f, x);
            let b = small_scalar(&f, y);
            let c = small_scalar(&f, z);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, f.zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv()).is_one());
            }
        }

        #[test]
        fn rank_is_transpose_invariant(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let f = CycloField::new(4);
            let mut m = ScalarMatrix::zero(3, 4, &f);
            for (i, &e) in entries.iter().enumerate() {
                // Mix rational and root-of-unity entries.
                let s = if i % 3 == 0 {
                    &f.root() * &f.from_integer(e)
                } else {
                    f.from_integer(e)
                };
                m.set(i / 4, i % 4, s);
            }
            prop_assert_eq!(m.rank(), m.transpose().rank());
            let kernel = m.kernel_basis();
            prop_assert_eq!(kernel.len() + m.rank(), 4);
            for v in &kernel {
                for entry in m.mul_vec(v) {
                    prop_assert!(entry.is_zero());
                }
            }
        }
    }
}
