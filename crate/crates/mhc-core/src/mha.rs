//! The function algebra C(G) of a finite group with its comultiplication
//! carried by the two canonical linear maps on C(G)⊗C(G), plus exhaustive
//! structural verification and a certificate for group-like elements.
//!
//! On basis indicators: W_R(e_p, e_h) = e_{p·h⁻¹} ⊗ e_h and
//! W_L(e_p, e_h) = e_p ⊗ e_{p⁻¹·h}; both are bijections of C(G)⊗C(G) and
//! encode Δ(f)(x, y) = f(xy).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::GroupTable;
use crate::scalar::{CycloField, CycloScalar, ScalarMatrix};

/// Shared context: the group, and the cyclotomic field ℚ(ζ_N) with N the
/// group exponent (big enough for every character value).
#[derive(Debug)]
pub struct FunctionAlgebra {
    group: Arc<GroupTable>,
    field: Arc<CycloField>,
}

impl FunctionAlgebra {
    pub fn new(group: &Arc<GroupTable>) -> Arc<Self> {
        Arc::new(FunctionAlgebra {
            group: Arc::clone(group),
            field: CycloField::new(group.exponent()),
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// The indicator function of one group element.
    pub fn basis(self: &Arc<Self>, g: usize) -> AlgebraElement {
        let mut coeffs = vec![self.field.zero(); self.group.order()];
        coeffs[g] = self.field.one();
        AlgebraElement {
            context: Arc::clone(self),
            coeffs,
        }
    }

    /// The unit: the constant function 1.
    pub fn unit(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement {
            context: Arc::clone(self),
            coeffs: vec![self.field.one(); self.group.order()],
        }
    }

    pub fn from_values(self: &Arc<Self>, coeffs: Vec<CycloScalar>) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.group.order(), "value vector length");
        for c in &coeffs {
            assert_eq!(c.order(), self.field.order(), "value field order");
        }
        AlgebraElement {
            context: Arc::clone(self),
            coeffs,
        }
    }

    pub fn zero_element(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement {
            context: Arc::clone(self),
            coeffs: vec![self.field.zero(); self.group.order()],
        }
    }

    /// Evaluation at the group identity.
    pub fn counit(&self, a: &AlgebraElement) -> CycloScalar {
        a.coeffs[self.group.identity()].clone()
    }

    /// S(f)(x) = f(x⁻¹).
    pub fn antipode(self: &Arc<Self>, a: &AlgebraElement) -> AlgebraElement {
        let n = self.group.order();
        let coeffs = (0..n).map(|x| a.coeffs[self.group.inv(x)].clone()).collect();
        AlgebraElement {
            context: Arc::clone(self),
            coeffs,
        }
    }

    /// W_R(a, b)(x, y) = a(xy)·b(y).
    pub fn w_r(self: &Arc<Self>, a: &AlgebraElement, b: &AlgebraElement) -> TensorElement {
        let n = self.group.order();
        let mut t = TensorElement::zero(self);
        for x in 0..n {
            for y in 0..n {
                let bv = &b.coeffs[y];
                if bv.is_zero() {
                    continue;
                }
                let av = &a.coeffs[self.group.mul(x, y)];
                if av.is_zero() {
                    continue;
                }
                t.set(x, y, av * bv);
            }
        }
        t
    }

    /// W_L(a, b)(x, y) = a(x)·b(xy).
    pub fn w_l(self: &Arc<Self>, a: &AlgebraElement, b: &AlgebraElement) -> TensorElement {
        let n = self.group.order();
        let mut t = TensorElement::zero(self);
        for x in 0..n {
            let av = &a.coeffs[x];
            if av.is_zero() {
                continue;
            }
            for y in 0..n {
                let bv = &b.coeffs[self.group.mul(x, y)];
                if bv.is_zero() {
                    continue;
                }
                t.set(x, y, av * bv);
            }
        }
        t
    }

    /// The comultiplication, assembled column by column from W_R so that it
    /// reflects whatever the multiplication table actually does:
    /// Δ(a)(x, y) = W_R(a, e_y)(x, y).
    pub fn delta(self: &Arc<Self>, a: &AlgebraElement) -> TensorElement {
        let n = self.group.order();
        let mut t = TensorElement::zero(self);
        for y in 0..n {
            let col = self.w_r(a, &self.basis(y));
            for x in 0..n {
                let v = col.get(x, y);
                if !v.is_zero() {
                    t.set(x, y, v.clone());
                }
            }
        }
        t
    }
}

/// A function G → ℚ(ζ_N), i.e. an element of C(G).
#[derive(Clone)]
pub struct AlgebraElement {
    context: Arc<FunctionAlgebra>,
    coeffs: Vec<CycloScalar>,
}

impl AlgebraElement {
    pub fn context(&self) -> &Arc<FunctionAlgebra> {
        &self.context
    }

    pub fn value(&self, g: usize) -> &CycloScalar {
        &self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[CycloScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloScalar::is_zero)
    }

    pub fn scale(&self, s: &CycloScalar) -> AlgebraElement {
        AlgebraElement {
            context: Arc::clone(&self.context),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·e[{}]", self.context.group.name(g))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl core::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        AlgebraElement {
            context: Arc::clone(&self.context),
            coeffs,
        }
    }
}

impl core::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        AlgebraElement {
            context: Arc::clone(&self.context),
            coeffs,
        }
    }
}

/// Pointwise product: C(G) is commutative.
impl core::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a * b)
            .collect();
        AlgebraElement {
            context: Arc::clone(&self.context),
            coeffs,
        }
    }
}

/// An element of C(G)⊗C(G) ≅ C(G×G), stored flat with index x·|G| + y.
#[derive(Clone)]
pub struct TensorElement {
    context: Arc<FunctionAlgebra>,
    coeffs: Vec<CycloScalar>,
}

impl TensorElement {
    pub fn zero(context: &Arc<FunctionAlgebra>) -> Self {
        let n = context.group.order();
        TensorElement {
            context: Arc::clone(context),
            coeffs: vec![context.field.zero(); n * n],
        }
    }

    /// The simple tensor a ⊗ b.
    pub fn pure(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        let context = Arc::clone(&a.context);
        let n = context.group.order();
        let mut t = TensorElement::zero(&context);
        for x in 0..n {
            if a.coeffs[x].is_zero() {
                continue;
            }
            for y in 0..n {
                if b.coeffs[y].is_zero() {
                    continue;
                }
                t.set(x, y, &a.coeffs[x] * &b.coeffs[y]);
            }
        }
        t
    }

    pub fn get(&self, x: usize, y: usize) -> &CycloScalar {
        &self.coeffs[x * self.context.group.order() + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: CycloScalar) {
        let n = self.context.group.order();
        self.coeffs[x * n + y] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloScalar::is_zero)
    }

    pub fn scale(&self, s: &CycloScalar) -> TensorElement {
        TensorElement {
            context: Arc::clone(&self.context),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.context.group.order();
        let mut first = true;
        for x in 0..n {
            for y in 0..n {
                let c = self.get(x, y);
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(
                    f,
                    "({c})·e[{}]⊗e[{}]",
                    self.context.group.name(x),
                    self.context.group.name(y)
                )?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl core::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TensorElement {
            context: Arc::clone(&self.context),
            coeffs,
        }
    }
}

/// Pointwise product in C(G×G).
impl core::ops::Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a * b)
            .collect();
        TensorElement {
            context: Arc::clone(&self.context),
            coeffs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    fn ok(name: &'static str) -> Self {
        CheckResult {
            name,
            pass: true,
            detail: None,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            pass: false,
            detail: Some(detail),
        }
    }
}

/// Run every structural axiom check against the table the context actually
/// carries. All checks range over the full indicator basis, so a corrupted
/// multiplication table shows up as named failures rather than bad numbers
/// downstream.
pub fn verify_structure(ctx: &Arc<FunctionAlgebra>) -> Vec<CheckResult> {
    let n = ctx.group().order();
    let mut out = Vec::new();

    // Bijectivity of the two canonical maps as linear endomorphisms of
    // C(G)⊗C(G): full rank on the basis-pair images.
    for (name, left_variant) in [("w_r_bijective", false), ("w_l_bijective", true)] {
        let mut m = ScalarMatrix::zero(n * n, n * n, ctx.field());
        for p in 0..n {
            for h in 0..n {
                let t = if left_variant {
                    ctx.w_l(&ctx.basis(p), &ctx.basis(h))
                } else {
                    ctx.w_r(&ctx.basis(p), &ctx.basis(h))
                };
                for x in 0..n {
                    for y in 0..n {
                        let v = t.get(x, y);
                        if !v.is_zero() {
                            m.set(x * n + y, p * n + h, v.clone());
                        }
                    }
                }
            }
        }
        let rank = m.rank();
        out.push(if rank == n * n {
            CheckResult::ok(name)
        } else {
            CheckResult::fail(name, alloc::format!("rank {rank} of {}", n * n))
        });
    }

    // W_R(ab, c) = W_R'(a, W_R(b, c)), where W_R' extends W_R(a, ·) to the
    // whole tensor square by bilinearity: W_R'(a, e_b⊗e_c) = (e_b⊗1)·W_R(a, e_c).
    // Expanding through the basis keeps the two sides genuinely independent.
    {
        let name = "w_r_homomorphism";
        let mut failure = None;
        'outer: for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let lhs = ctx.w_r(&(&ctx.basis(p) * &ctx.basis(q)), &ctx.basis(r));
                    let inner = ctx.w_r(&ctx.basis(q), &ctx.basis(r));
                    let mut rhs = TensorElement::zero(ctx);
                    for b in 0..n {
                        for c in 0..n {
                            let coeff = inner.get(b, c);
                            if coeff.is_zero() {
                                continue;
                            }
                            let left_mask = TensorElement::pure(&ctx.basis(b), &ctx.unit());
                            let term = (&left_mask * &ctx.w_r(&ctx.basis(p), &ctx.basis(c)))
                                .scale(coeff);
                            rhs = &rhs + &term;
                        }
                    }
                    if lhs != rhs {
                        failure = Some(alloc::format!("basis triple ({p}, {q}, {r})"));
                        break 'outer;
                    }
                }
            }
        }
        out.push(match failure {
            None => CheckResult::ok(name),
            Some(d) => CheckResult::fail(name, d),
        });
    }

    // (ε⊗id)W_R(a, b) = ab and (id⊗ε)W_L(a, b) = ab on the basis.
    for (name, left_variant) in [("counit_right", false), ("counit_left", true)] {
        let e = ctx.group().identity();
        let mut failure = None;
        'outer: for p in 0..n {
            for h in 0..n {
                let (a, b) = (ctx.basis(p), ctx.basis(h));
                let t = if left_variant {
                    ctx.w_l(&a, &b)
                } else {
                    ctx.w_r(&a, &b)
                };
                let mut contracted = ctx.zero_element();
                for z in 0..n {
                    let v = if left_variant { t.get(z, e) } else { t.get(e, z) };
                    if !v.is_zero() {
                        contracted = &contracted + &ctx.basis(z).scale(v);
                    }
                }
                if contracted != &a * &b {
                    failure = Some(alloc::format!("basis pair ({p}, {h})"));
                    break 'outer;
                }
            }
        }
        out.push(match failure {
            None => CheckResult::ok(name),
            Some(d) => CheckResult::fail(name, d),
        });
    }

    // The antipode as a linear map: full rank, and an involution here since
    // inversion is.
    {
        let mut m = ScalarMatrix::zero(n, n, ctx.field());
        for g in 0..n {
            let s = ctx.antipode(&ctx.basis(g));
            for x in 0..n {
                if !s.value(x).is_zero() {
                    m.set(x, g, s.value(x).clone());
                }
            }
        }
        let rank = m.rank();
        out.push(if rank == n {
            CheckResult::ok("antipode_bijective")
        } else {
            CheckResult::fail("antipode_bijective", alloc::format!("rank {rank} of {n}"))
        });

        let squared_ok = (0..n).all(|g| ctx.antipode(&ctx.antipode(&ctx.basis(g))) == ctx.basis(g));
        out.push(if squared_ok {
            CheckResult::ok("antipode_squares_to_identity")
        } else {
            CheckResult::fail("antipode_squares_to_identity", String::from("S² ≠ id"))
        });
    }

    // m(S⊗id)W_R(a, b) = ε(a)·b and m(id⊗S)W_L(a, b) = ε(b)·a.
    for (name, left_variant) in [("antipode_cancels_w_r", false), ("antipode_cancels_w_l", true)] {
        let mut failure = None;
        'outer: for p in 0..n {
            for h in 0..n {
                let (a, b) = (ctx.basis(p), ctx.basis(h));
                let t = if left_variant {
                    ctx.w_l(&a, &b)
                } else {
                    ctx.w_r(&a, &b)
                };
                // Contract u⊗v ↦ S(u)·v (right variant) or u·S(v) (left).
                let mut result = ctx.zero_element();
                for u in 0..n {
                    for v in 0..n {
                        let c = t.get(u, v);
                        if c.is_zero() {
                            continue;
                        }
                        let term = if left_variant {
                            &ctx.basis(u) * &ctx.antipode(&ctx.basis(v))
                        } else {
                            &ctx.antipode(&ctx.basis(u)) * &ctx.basis(v)
                        };
                        result = &result + &term.scale(c);
                    }
                }
                let expect = if left_variant {
                    a.scale(&ctx.counit(&b))
                } else {
                    b.scale(&ctx.counit(&a))
                };
                if result != expect {
                    failure = Some(alloc::format!("basis pair ({p}, {h})"));
                    break 'outer;
                }
            }
        }
        out.push(match failure {
            None => CheckResult::ok(name),
            Some(d) => CheckResult::fail(name, d),
        });
    }

    // (Δ⊗id)Δ = (id⊗Δ)Δ with Δ assembled from W_R columns; this is the check
    // that catches a corrupted multiplication table even when each slice
    // looks locally plausible.
    {
        let name = "coassociativity";
        let deltas: Vec<TensorElement> = (0..n).map(|g| ctx.delta(&ctx.basis(g))).collect();
        let mut failure = None;
        for g in 0..n {
            let mut lhs = vec![ctx.field().zero(); n * n * n];
            let mut rhs = vec![ctx.field().zero(); n * n * n];
            for a in 0..n {
                for b in 0..n {
                    let c = deltas[g].get(a, b);
                    if c.is_zero() {
                        continue;
                    }
                    for x in 0..n {
                        for y in 0..n {
                            let d = deltas[a].get(x, y);
                            if !d.is_zero() {
                                let idx = (x * n + y) * n + b;
                                lhs[idx] = &lhs[idx] + &(c * d);
                            }
                            let d = deltas[b].get(x, y);
                            if !d.is_zero() {
                                let idx = (a * n + x) * n + y;
                                rhs[idx] = &rhs[idx] + &(c * d);
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                failure = Some(alloc::format!("basis element {g}"));
                break;
            }
        }
        out.push(match failure {
            None => CheckResult::ok(name),
            Some(d) => CheckResult::fail(name, d),
        });
    }

    out
}

/// Certificate that a value vector f defines a group-like element
/// u = Σ f(g)·e_g: u must be nonzero, satisfy the multiplier identity
/// (u⊗u)·W_R(a, b) = W_R(u·a, b) on every basis pair, and have
/// Δ(u) = u ⊗ u on the nose.
pub fn group_like_certificate(ctx: &Arc<FunctionAlgebra>, values: &[CycloScalar]) -> bool {
    let n = ctx.group().order();
    assert_eq!(values.len(), n, "value vector length");
    let u = ctx.from_values(values.to_vec());
    if u.is_zero() {
        return false;
    }
    let uu = TensorElement::pure(&u, &u);
    for p in 0..n {
        for h in 0..n {
            let (a, b) = (ctx.basis(p), ctx.basis(h));
            let lhs = &uu * &ctx.w_r(&a, &b);
            let rhs = ctx.w_r(&(&u * &a), &b);
            if lhs != rhs {
                return false;
            }
        }
    }
    ctx.delta(&u) == uu
}
