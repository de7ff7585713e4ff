//! A finite crossed product: functions on Z_N² twisted by the order-two
//! coordinate flip, with a phase-deformed coproduct on the flip generator.
//!
//! The algebra has basis {e_p, e_p·x : p ∈ Z_N²} with e_p e_q = δ_{pq} e_p,
//! x e_p = e_p̂ x (p̂ the coordinate flip), x² = 1, and carries the coproduct
//! Δ(e_r) = Σ_{u+v=r} e_u ⊗ e_v,
//! Δ(e_r x) = Σ_{u+v=r} ζ^{−θ(u,v)} (e_u x) ⊗ (e_v x),
//! where θ(u, v) = u₁v₂ − u₂v₁ and ζ is a primitive N-th root of unity.
//! Everything is finite dimensional, so multipliers are ordinary elements
//! and all checks are plain exact linear algebra.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::scalar::{CycloField, CycloScalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossedError {
    /// The modulus must lie in 2..=6.
    BadModulus { n: usize },
}

impl core::fmt::Display for CrossedError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CrossedError::BadModulus { n } => {
                write!(f, "modulus {n} out of range (2..=6)")
            }
        }
    }
}

impl core::error::Error for CrossedError {}

type Point = (usize, usize);

pub struct CrossedAlgebra {
    n: usize,
    field: Arc<CycloField>,
}

impl CrossedAlgebra {
    pub fn new(n: usize) -> Result<Arc<Self>, CrossedError> {
        if !(2..=6).contains(&n) {
            return Err(CrossedError::BadModulus { n });
        }
        Ok(Arc::new(CrossedAlgebra {
            n,
            field: CycloField::new(n as u32),
        }))
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Linear dimension 2N².
    pub fn dim(&self) -> usize {
        2 * self.n * self.n
    }

    fn points(&self) -> usize {
        self.n * self.n
    }

    fn point_index(&self, p: Point) -> usize {
        p.0 * self.n + p.1
    }

    fn decode_point(&self, idx: usize) -> Point {
        (idx / self.n, idx % self.n)
    }

    fn add(&self, p: Point, q: Point) -> Point {
        ((p.0 + q.0) % self.n, (p.1 + q.1) % self.n)
    }

    fn neg(&self, p: Point) -> Point {
        ((self.n - p.0) % self.n, (self.n - p.1) % self.n)
    }

    fn flip(p: Point) -> Point {
        (p.1, p.0)
    }

    /// θ(p, q) = p₁q₂ − p₂q₁ as a signed exponent.
    fn theta(p: Point, q: Point) -> i64 {
        p.0 as i64 * q.1 as i64 - p.1 as i64 * q.0 as i64
    }

    /// Index of basis element e_p (flagged = false) or e_p·x (flagged = true).
    fn basis_index(&self, p: Point, flagged: bool) -> usize {
        self.point_index(p) + if flagged { self.points() } else { 0 }
    }

    fn decode_basis(&self, idx: usize) -> (Point, bool) {
        if idx < self.points() {
            (self.decode_point(idx), false)
        } else {
            (self.decode_point(idx - self.points()), true)
        }
    }

    /// Product of two basis elements; at most one basis term survives and
    /// its coefficient is 1.
    fn basis_product(&self, a: usize, b: usize) -> Option<usize> {
        let (p, s) = self.decode_basis(a);
        let (q, t) = self.decode_basis(b);
        let matches = if s { p == Self::flip(q) } else { p == q };
        if matches {
            Some(self.basis_index(p, s != t))
        } else {
            None
        }
    }

    pub fn zero_element(self: &Arc<Self>) -> CrossedElement {
        CrossedElement {
            algebra: self.clone(),
            coeffs: alloc::vec![self.field.zero(); self.dim()],
        }
    }

    pub fn basis(self: &Arc<Self>, p: Point, with_x: bool) -> CrossedElement {
        let mut e = self.zero_element();
        e.coeffs[self.basis_index(p, with_x)] = self.field.one();
        e
    }

    pub fn one(self: &Arc<Self>) -> CrossedElement {
        let mut e = self.zero_element();
        for idx in 0..self.points() {
            e.coeffs[idx] = self.field.one();
        }
        e
    }

    /// The flip generator as an element: x = Σ_p e_p·x.
    pub fn x(self: &Arc<Self>) -> CrossedElement {
        let mut e = self.zero_element();
        for idx in 0..self.points() {
            e.coeffs[self.points() + idx] = self.field.one();
        }
        e
    }

    /// σ = f + h·x from two value tables indexed by points.
    pub fn from_tables(
        self: &Arc<Self>,
        f: &[CycloScalar],
        h: &[CycloScalar],
    ) -> CrossedElement {
        assert_eq!(f.len(), self.points());
        assert_eq!(h.len(), self.points());
        let mut e = self.zero_element();
        e.coeffs[..self.points()].clone_from_slice(f);
        e.coeffs[self.points()..].clone_from_slice(h);
        e
    }

    /// Value table of the character p ↦ ζ^{a·p₁ + b·p₂}.
    pub fn character_table(self: &Arc<Self>, a: u32, b: u32) -> Vec<CycloScalar> {
        (0..self.points())
            .map(|idx| {
                let p = self.decode_point(idx);
                self.field
                    .root_power(a as i64 * p.0 as i64 + b as i64 * p.1 as i64)
            })
            .collect()
    }

    pub fn zero_table(self: &Arc<Self>) -> Vec<CycloScalar> {
        alloc::vec![self.field.zero(); self.points()]
    }

    /// ε(e_p) = [p = 0], ε(e_p·x) = [p = 0].
    pub fn counit(self: &Arc<Self>, e: &CrossedElement) -> CycloScalar {
        let origin = self.point_index((0, 0));
        &e.coeffs[origin] + &e.coeffs[self.points() + origin]
    }

    /// S(e_p) = e_{−p}, S(e_p·x) = e_{−p̂}·x; an algebra anti-homomorphism.
    pub fn antipode(self: &Arc<Self>, e: &CrossedElement) -> CrossedElement {
        let mut out = self.zero_element();
        for (idx, v) in e.coeffs.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (p, flagged) = self.decode_basis(idx);
            let target = if flagged {
                self.basis_index(self.neg(Self::flip(p)), true)
            } else {
                self.basis_index(self.neg(p), false)
            };
            out.coeffs[target] = &out.coeffs[target] + v;
        }
        out
    }

    pub fn delta(self: &Arc<Self>, e: &CrossedElement) -> CrossedTensor {
        let mut out = CrossedTensor::zero(self);
        for (idx, coeff) in e.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let (r, flagged) = self.decode_basis(idx);
            for uidx in 0..self.points() {
                let u = self.decode_point(uidx);
                let v = self.add(r, self.neg(u));
                let (left, right, phase) = if flagged {
                    (
                        self.basis_index(u, true),
                        self.basis_index(v, true),
                        self.field.root_power(-Self::theta(u, v)),
                    )
                } else {
                    (
                        self.basis_index(u, false),
                        self.basis_index(v, false),
                        self.field.one(),
                    )
                };
                let slot = &mut out.coeffs[left * self.dim() + right];
                *slot = &*slot + &(coeff * &phase);
            }
        }
        out
    }

    /// W_L(a, b) = (a ⊗ 1)·Δ(b).
    pub fn w_l(
        self: &Arc<Self>,
        a: &CrossedElement,
        b: &CrossedElement,
    ) -> CrossedTensor {
        &CrossedTensor::pure(a, &self.one()) * &self.delta(b)
    }

    /// W_R(a, b) = Δ(a)·(1 ⊗ b).
    pub fn w_r(
        self: &Arc<Self>,
        a: &CrossedElement,
        b: &CrossedElement,
    ) -> CrossedTensor {
        &self.delta(a) * &CrossedTensor::pure(&self.one(), b)
    }

    /// The character δ with base point (i, i) and δ(x) = eps:
    /// δ(e_p) = [p = (i,i)], δ(e_p·x) = eps·[p = (i,i)].
    pub fn eval_character(
        self: &Arc<Self>,
        i: usize,
        eps: i8,
        e: &CrossedElement,
    ) -> CycloScalar {
        assert!(i < self.n);
        assert!(eps == 1 || eps == -1);
        let diag = self.point_index((i, i));
        let sign = self.field.from_integer(eps as i64);
        &e.coeffs[diag] + &(&sign * &e.coeffs[self.points() + diag])
    }

    /// Twisted antipode from the defining relation δ(a)·S_δ(h) = (δ⊗S)W_L(a, h),
    /// computed with the witness a = e_{(i,i)} and re-derived with the
    /// independent witness a = e_{(i,i)}·x; the two routes must agree.
    pub fn twisted_antipode(
        self: &Arc<Self>,
        i: usize,
        eps: i8,
        h: &CrossedElement,
    ) -> CrossedElement {
        let primary = self.basis((i, i), false);
        let first = self.twisted_antipode_via(i, eps, &primary, h);
        let secondary = self.basis((i, i), true);
        let second = self.twisted_antipode_via(i, eps, &secondary, h);
        assert!(
            first == second,
            "twisted antipode must not depend on the defining witness"
        );
        first
    }

    fn twisted_antipode_via(
        self: &Arc<Self>,
        i: usize,
        eps: i8,
        a: &CrossedElement,
        h: &CrossedElement,
    ) -> CrossedElement {
        let denom = self.eval_character(i, eps, a);
        assert!(!denom.is_zero(), "witness must have nonzero character value");
        let tensor = self.w_l(a, h);
        let mut out = self.zero_element();
        for left in 0..self.dim() {
            let mut partial = self.zero_element();
            let mut nonzero = false;
            for right in 0..self.dim() {
                let c = &tensor.coeffs[left * self.dim() + right];
                if c.is_zero() {
                    continue;
                }
                nonzero = true;
                partial.coeffs[right] = c.clone();
            }
            if !nonzero {
                continue;
            }
            let weight = self.eval_character(i, eps, &self.basis_by_index(left));
            if weight.is_zero() {
                continue;
            }
            let moved = self.antipode(&partial);
            for (idx, v) in moved.coeffs.iter().enumerate() {
                if !v.is_zero() {
                    out.coeffs[idx] = &out.coeffs[idx] + &(&weight * v);
                }
            }
        }
        out.scale(&denom.inv())
    }

    fn basis_by_index(self: &Arc<Self>, idx: usize) -> CrossedElement {
        let (p, flagged) = self.decode_basis(idx);
        self.basis(p, flagged)
    }

    /// Whether σ = f + h·x is a nonzero solution of Δ(σ) = σ ⊗ σ.
    pub fn grouplike_check(
        self: &Arc<Self>,
        f: &[CycloScalar],
        h: &[CycloScalar],
    ) -> bool {
        let sigma = self.from_tables(f, h);
        if sigma.is_zero() {
            return false;
        }
        self.delta(&sigma) == CrossedTensor::pure(&sigma, &sigma)
    }

    /// Full modular-pair test for δ = (base point (i,i), sign eps) against
    /// σ = the (a, b) character: σ group-like, δ(σ) = 1, and S_δ² equal to
    /// conjugation by σ on every basis element.
    pub fn mpi_check(self: &Arc<Self>, i: usize, eps: i8, a: u32, b: u32) -> bool {
        let f = self.character_table(a, b);
        let zero = self.zero_table();
        if !self.grouplike_check(&f, &zero) {
            return false;
        }
        let sigma = self.from_tables(&f, &zero);
        if !self.eval_character(i, eps, &sigma).is_one() {
            return false;
        }
        let sigma_inv = self.antipode(&sigma);
        debug_assert!((&sigma * &sigma_inv) == self.one());
        for idx in 0..self.dim() {
            let e = self.basis_by_index(idx);
            let twice = self.twisted_antipode(i, eps, &self.twisted_antipode(i, eps, &e));
            let conj = &(&sigma * &e) * &sigma_inv;
            if twice != conj {
                return false;
            }
        }
        true
    }
}

impl core::fmt::Debug for CrossedAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "CrossedAlgebra(N = {})", self.n)
    }
}

#[derive(Clone)]
pub struct CrossedElement {
    algebra: Arc<CrossedAlgebra>,
    coeffs: Vec<CycloScalar>,
}

impl CrossedElement {
    pub fn coeffs(&self) -> &[CycloScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &CycloScalar) -> CrossedElement {
        CrossedElement {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl PartialEq for CrossedElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.n == other.algebra.n && self.coeffs == other.coeffs
    }
}

impl core::ops::Add for &CrossedElement {
    type Output = CrossedElement;
    fn add(self, rhs: &CrossedElement) -> CrossedElement {
        CrossedElement {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl core::ops::Sub for &CrossedElement {
    type Output = CrossedElement;
    fn sub(self, rhs: &CrossedElement) -> CrossedElement {
        CrossedElement {
            algebra: self.algebra.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl core::ops::Mul for &CrossedElement {
    type Output = CrossedElement;
    fn mul(self, rhs: &CrossedElement) -> CrossedElement {
        let algebra = self.algebra.clone();
        let mut out = algebra.zero_element();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if let Some(target) = algebra.basis_product(i, j) {
                    out.coeffs[target] = &out.coeffs[target] + &(a * b);
                }
            }
        }
        out
    }
}

impl core::fmt::Debug for CrossedElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (p, flagged) = self.algebra.decode_basis(idx);
            let tail = if flagged { "·x" } else { "" };
            terms.push(format!("({c})·e[({},{})]{tail}", p.0, p.1));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

pub struct CrossedTensor {
    algebra: Arc<CrossedAlgebra>,
    /// Flat (dim × dim) coefficients, left factor major.
    coeffs: Vec<CycloScalar>,
}

impl CrossedTensor {
    pub fn zero(algebra: &Arc<CrossedAlgebra>) -> CrossedTensor {
        CrossedTensor {
            algebra: algebra.clone(),
            coeffs: alloc::vec![algebra.field.zero(); algebra.dim() * algebra.dim()],
        }
    }

    pub fn pure(a: &CrossedElement, b: &CrossedElement) -> CrossedTensor {
        let algebra = a.algebra.clone();
        let mut out = CrossedTensor::zero(&algebra);
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out.coeffs[i * algebra.dim() + j] = x * y;
            }
        }
        out
    }

    pub fn get(&self, left: usize, right: usize) -> &CycloScalar {
        &self.coeffs[left * self.algebra.dim() + right]
    }
}

impl PartialEq for CrossedTensor {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.n == other.algebra.n && self.coeffs == other.coeffs
    }
}

impl core::ops::Mul for &CrossedTensor {
    type Output = CrossedTensor;
    fn mul(self, rhs: &CrossedTensor) -> CrossedTensor {
        let algebra = self.algebra.clone();
        let dim = algebra.dim();
        let mut out = CrossedTensor::zero(&algebra);
        for li in 0..dim {
            for ri in 0..dim {
                let c = &self.coeffs[li * dim + ri];
                if c.is_zero() {
                    continue;
                }
                for lj in 0..dim {
                    let left = match algebra.basis_product(li, lj) {
                        Some(t) => t,
                        None => continue,
                    };
                    for rj in 0..dim {
                        let d = &rhs.coeffs[lj * dim + rj];
                        if d.is_zero() {
                            continue;
                        }
                        if let Some(right) = algebra.basis_product(ri, rj) {
                            let slot = &mut out.coeffs[left * dim + right];
                            *slot = &*slot + &(c * d);
                        }
                    }
                }
            }
        }
        out
    }
}

impl core::fmt::Debug for CrossedTensor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let dim = self.algebra.dim();
        let mut terms: Vec<String> = Vec::new();
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (lp, lf) = self.algebra.decode_basis(flat / dim);
            let (rp, rf) = self.algebra.decode_basis(flat % dim);
            let lt = if lf { "·x" } else { "" };
            let rt = if rf { "·x" } else { "" };
            terms.push(format!(
                "({c})·e[({},{})]{lt}⊗e[({},{})]{rt}",
                lp.0, lp.1, rp.0, rp.1
            ));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpiRecord {
    pub base_point: usize,
    pub eps: i8,
    pub exponents: (u32, u32),
    pub mpi: bool,
}

/// Exhaustive modular-pair classification over diagonal base points, both
/// signs on the flip generator, and all characters of Z_N².
pub fn classify_mpi(algebra: &Arc<CrossedAlgebra>) -> Vec<MpiRecord> {
    let n = algebra.modulus() as u32;
    let mut out = Vec::new();
    for i in 0..algebra.modulus() {
        for eps in [1i8, -1] {
            for a in 0..n {
                for b in 0..n {
                    out.push(MpiRecord {
                        base_point: i,
                        eps,
                        exponents: (a, b),
                        mpi: algebra.mpi_check(i, eps, a, b),
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrouplikeRecord {
    /// None encodes the zero table, Some((a, b)) the character table.
    pub f_exponents: Option<(u32, u32)>,
    pub h_exponents: Option<(u32, u32)>,
    pub grouplike: bool,
}

/// Exhaustive group-like classification of σ = f + h·x with f and h drawn
/// from the characters of Z_N² together with zero.
pub fn classify_grouplike(algebra: &Arc<CrossedAlgebra>) -> Vec<GrouplikeRecord> {
    let n = algebra.modulus() as u32;
    let mut candidates: Vec<Option<(u32, u32)>> = alloc::vec![None];
    for a in 0..n {
        for b in 0..n {
            candidates.push(Some((a, b)));
        }
    }
    let table_of = |c: &Option<(u32, u32)>| match c {
        None => algebra.zero_table(),
        Some((a, b)) => algebra.character_table(*a, *b),
    };
    let mut out = Vec::new();
    for fc in &candidates {
        for hc in &candidates {
            out.push(GrouplikeRecord {
                f_exponents: *fc,
                h_exponents: *hc,
                grouplike: algebra.grouplike_check(&table_of(fc), &table_of(hc)),
            });
        }
    }
    out
}
