//! Modular pairs (δ_g, σ): a point-evaluation functional together with a
//! character twist, the twisted antipode they induce on C(G), and the
//! classification of the pairs whose twisted antipode is an involution.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::group::{characters, Character, GroupTable};
use crate::mha::{AlgebraElement, FunctionAlgebra};

/// A pair (δ_g, σ): evaluation at `base_point` and a character of the group.
#[derive(Debug, Clone)]
pub struct ModularPair {
    ctx: Arc<FunctionAlgebra>,
    base_point: usize,
    sigma: Character,
}

impl ModularPair {
    pub fn new(ctx: &Arc<FunctionAlgebra>, base_point: usize, sigma: Character) -> Self {
        assert!(base_point < ctx.group().order(), "base point out of range");
        assert_eq!(
            sigma.group().order(),
            ctx.group().order(),
            "character belongs to a different group"
        );
        ModularPair {
            ctx: Arc::clone(ctx),
            base_point,
            sigma,
        }
    }

    pub fn context(&self) -> &Arc<FunctionAlgebra> {
        &self.ctx
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.ctx.group()
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn sigma(&self) -> &Character {
        &self.sigma
    }

    /// The twisted antipode S_δ: on indicators S_δ(e_h) = e_{h⁻¹g}, i.e.
    /// S_δ(f)(y) = f(g·y⁻¹). The twist σ cancels out of the closed form.
    ///
    /// Every call also recomputes the value through the defining property —
    /// contracting the first leg of W_L(e_g, ·) at g and applying the plain
    /// antipode — and insists the two routes agree.
    pub fn twisted_antipode(&self, f: &AlgebraElement) -> AlgebraElement {
        let group = self.ctx.group();
        let n = group.order();
        let g = self.base_point;
        let closed = self.ctx.from_values(
            (0..n)
                .map(|y| f.value(group.mul(g, group.inv(y))).clone())
                .collect(),
        );
        let defining = self
            .twisted_antipode_defining(&self.ctx.basis(g), f)
            .expect("δ_g(e_g) = 1 is never zero");
        assert!(
            closed == defining,
            "twisted antipode: closed form and defining property disagree"
        );
        closed
    }

    /// The defining route: S_δ(f) = (δ_g ⊗ S)(W_L(a, f)) / a(g), valid for
    /// any witness a with a(g) ≠ 0 (the result does not depend on a).
    /// Returns `None` when a(g) = 0.
    pub fn twisted_antipode_defining(
        &self,
        a: &AlgebraElement,
        f: &AlgebraElement,
    ) -> Option<AlgebraElement> {
        let group = self.ctx.group();
        let n = group.order();
        let g = self.base_point;
        let scale = a.value(g).checked_inv()?;
        let t = self.ctx.w_l(a, f);
        let values = (0..n)
            .map(|y| t.get(g, group.inv(y)) * &scale)
            .collect();
        Some(self.ctx.from_values(values))
    }

    /// True when σ(g) = 1 and the twisted antipode squares to the identity
    /// (the square sends e_h to e_{g⁻¹hg}, so this amounts to the base point
    /// being central — but it is computed by applying the antipode twice).
    pub fn is_involutive(&self) -> bool {
        if !self.sigma.value(self.base_point).is_one() {
            return false;
        }
        let n = self.ctx.group().order();
        (0..n).all(|h| {
            let e = self.ctx.basis(h);
            self.twisted_antipode(&self.twisted_antipode(&e)) == e
        })
    }
}

/// Every pair (g, σ) in a deterministic order: base points by index, then
/// characters in their enumeration order.
pub fn all_pairs(group: &Arc<GroupTable>) -> Vec<ModularPair> {
    let ctx = FunctionAlgebra::new(group);
    let chars = characters(group);
    let mut out = Vec::new();
    for g in 0..group.order() {
        for chi in &chars {
            out.push(ModularPair::new(&ctx, g, chi.clone()));
        }
    }
    out
}

/// The involutive pairs, in the same order as [`all_pairs`].
pub fn involutive_pairs(group: &Arc<GroupTable>) -> Vec<ModularPair> {
    all_pairs(group)
        .into_iter()
        .filter(ModularPair::is_involutive)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::characters;

    #[test]
    fn twisted_antipode_on_cyclic_four() {
        let g = GroupTable::cyclic(4).unwrap();
        let ctx = FunctionAlgebra::new(&g);
        let sigma = characters(&g)[0].clone();
        let pair = ModularPair::new(&ctx, 1, sigma);
        // e_h ↦ e_{1-h} in additive notation.
        let images = [1usize, 0, 3, 2];
        for (h, &img) in images.iter().enumerate() {
            assert_eq!(pair.twisted_antipode(&ctx.basis(h)), ctx.basis(img));
        }
    }

    #[test]
    fn defining_route_is_witness_independent() {
        let g = GroupTable::cyclic(4).unwrap();
        let ctx = FunctionAlgebra::new(&g);
        let pair = ModularPair::new(&ctx, 1, characters(&g)[2].clone());
        let f = &(&ctx.basis(2) + &ctx.basis(0)) - &ctx.basis(3).scale(&ctx.field().root());

        let with_indicator = pair
            .twisted_antipode_defining(&ctx.basis(1), &f)
            .unwrap();
        let fat_witness = &ctx.basis(1) + &ctx.basis(3);
        let with_fat = pair.twisted_antipode_defining(&fat_witness, &f).unwrap();
        assert_eq!(with_indicator, with_fat);
        assert_eq!(with_indicator, pair.twisted_antipode(&f));

        // A witness vanishing at the base point cannot be divided out.
        assert!(pair
            .twisted_antipode_defining(&ctx.basis(2), &f)
            .is_none());
    }

    #[test]
    fn squared_antipode_is_conjugation() {
        let g = GroupTable::symmetric3();
        let ctx = FunctionAlgebra::new(&g);
        let r = g.index_of("r").unwrap();
        let s = g.index_of("s").unwrap();
        let rs = g.index_of("rs").unwrap();
        let pair = ModularPair::new(&ctx, r, characters(&g)[0].clone());
        // S²(e_s) = e_{r⁻¹·s·r} = e_{rs} ≠ e_s: r is not central.
        let twice = pair.twisted_antipode(&pair.twisted_antipode(&ctx.basis(s)));
        assert_eq!(twice, ctx.basis(rs));
        assert!(!pair.is_involutive());
    }

    #[test]
    fn involutive_iff_central_with_trivial_twist_value() {
        for spec in ["Z4", "S3", "D4", "Q8"] {
            let g = GroupTable::named(spec).unwrap();
            for pair in all_pairs(&g) {
                let direct = g.is_central(pair.base_point())
                    && pair.sigma().value(pair.base_point()).is_one();
                assert_eq!(pair.is_involutive(), direct, "{spec}");
            }
        }
    }

    #[test]
    fn involutive_pair_counts_are_frozen() {
        let cases: &[(&str, usize)] = &[
            ("Z2", 3),
            ("Z3", 5),
            ("S3", 2),
            ("D4", 8),
            ("Q8", 8),
        ];
        for &(spec, expected) in cases {
            let g = GroupTable::named(spec).unwrap();
            assert_eq!(involutive_pairs(&g).len(), expected, "{spec}");
        }
    }

    #[test]
    fn symmetric3_involutive_pairs_are_identity_with_both_characters() {
        let g = GroupTable::symmetric3();
        let pairs = involutive_pairs(&g);
        assert_eq!(pairs.len(), 2);
        for pair in &pairs {
            assert_eq!(g.name(pair.base_point()), "e");
        }
        assert!(pairs[0].sigma().is_trivial());
        assert!(!pairs[1].sigma().is_trivial());
        // The nontrivial one is the sign character: -1 on every reflection.
        let s = g.index_of("s").unwrap();
        let minus_one = pairs[1].sigma().field().from_integer(-1);
        assert_eq!(pairs[1].sigma().value(s), &minus_one);
    }
}
