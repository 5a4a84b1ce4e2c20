//! The extension of a semigroup operation to upfamilies.
//!
//! For upfamilies `A`, `B` the product `A*B` is generated by the sets
//! `⋃_{x∈U} x*V_x` with `U ∈ A` and a choice `V_x ∈ B` for each `x ∈ U`.
//! The product is monotone in every chosen set, so it suffices to let `U`
//! and the `V_x` range over minimal members. Two routes are provided:
//!
//! * [`product`] walks those minimal choices, folding one `x` at a time
//!   and keeping only minimal partial unions;
//! * [`ProductKernel`] uses the equivalent membership test
//!   `T ∈ A*B ⇔ {x : {y : xy ∈ T} ∈ B} ∈ A` on truth tables.

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};
use crate::family::{full_mask, SubsetMask, UpFamily, UpSetBits};

fn check_widths(a: &UpFamily, b: &UpFamily, t: &CayleyTable) -> Result<()> {
    for f in [a, b] {
        if f.order() != t.order() {
            return Err(Error::WidthMismatch {
                left: f.order(),
                right: t.order(),
            });
        }
    }
    Ok(())
}

/// Keeps the inclusion-minimal sets, ascending.
fn minimize(mut sets: Vec<u16>) -> Vec<u16> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u16> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

fn to_family(order: usize, gens: Vec<u16>) -> UpFamily {
    let minimal = minimize(gens)
        .into_iter()
        .map(|bits| SubsetMask::new(order, bits).expect("products of nonempty sets are nonempty"))
        .collect();
    UpFamily::from_minimal_unchecked(order, minimal)
}

pub fn product(a: &UpFamily, b: &UpFamily, t: &CayleyTable) -> Result<UpFamily> {
    check_widths(a, b, t)?;
    let n = t.order();
    // images[x] = minimal sets among x*V, V minimal in b
    let images: Vec<Vec<u16>> = (0..n)
        .map(|x| minimize(b.minimal().iter().map(|v| t.left_image(x, v.bits())).collect()))
        .collect();
    let mut gens = Vec::new();
    for u in a.minimal() {
        let mut partial = vec![0u16];
        for x in u.indices() {
            let mut next = Vec::with_capacity(partial.len() * images[x].len());
            for &p in &partial {
                for &img in &images[x] {
                    next.push(p | img);
                }
            }
            partial = minimize(next);
        }
        gens.extend(partial);
    }
    Ok(to_family(n, gens))
}

/// `⟨A*B : A ∈ a, B ∈ b⟩` with elementwise set products.
pub fn tensor_product(a: &UpFamily, b: &UpFamily, t: &CayleyTable) -> Result<UpFamily> {
    check_widths(a, b, t)?;
    let mut gens = Vec::with_capacity(a.minimal().len() * b.minimal().len());
    for u in a.minimal() {
        for v in b.minimal() {
            let mut set = 0u16;
            for x in u.indices() {
                set |= t.left_image(x, v.bits());
            }
            gens.push(set);
        }
    }
    Ok(to_family(t.order(), gens))
}

/// Truth-table product for a fixed base semigroup.
#[derive(Clone, Debug)]
pub struct ProductKernel {
    order: usize,
    subsets: usize,
    /// `preimage[x * subsets + T] = {y : xy ∈ T}`
    preimage: Vec<u16>,
}

impl ProductKernel {
    pub fn new(t: &CayleyTable) -> Self {
        let n = t.order();
        let subsets = 1usize << n;
        let mut preimage = vec![0u16; n * subsets];
        for x in 0..n {
            for target in 0..subsets {
                preimage[x * subsets + target] = (0..n)
                    .filter(|&y| target >> t.mul(x, y) & 1 == 1)
                    .fold(0, |m, y| m | 1 << y);
            }
        }
        ProductKernel {
            order: n,
            subsets,
            preimage,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// For each target `T`, the set `{x : {y : xy ∈ T} ∈ B}`.
    pub fn right_profile(&self, b: &UpSetBits) -> Vec<u16> {
        (0..self.subsets)
            .map(|target| {
                (0..self.order)
                    .filter(|&x| b.contains(self.preimage[x * self.subsets + target]))
                    .fold(0u16, |m, x| m | 1 << x)
            })
            .collect()
    }

    /// `A*B` given `A` and the right profile of `B`.
    #[inline]
    pub fn product_with_profile(&self, a: &UpSetBits, profile: &[u16]) -> UpSetBits {
        let mut out = UpSetBits::default();
        for (target, &q) in profile.iter().enumerate() {
            if a.contains(q) {
                out.insert(target as u16);
            }
        }
        out
    }

    pub fn product_bits(&self, a: &UpSetBits, b: &UpSetBits) -> UpSetBits {
        self.product_with_profile(a, &self.right_profile(b))
    }

    pub fn product(&self, a: &UpFamily, b: &UpFamily) -> Result<UpFamily> {
        if a.order() != self.order || b.order() != self.order {
            return Err(Error::WidthMismatch {
                left: a.order().max(b.order()),
                right: self.order,
            });
        }
        let bits = self.product_bits(&a.to_bits(), &b.to_bits());
        Ok(UpFamily::from_bits(self.order, &bits))
    }
}

/// Whether `sub ⊆ sup` as families of members.
pub fn is_subfamily(sub: &UpFamily, sup: &UpFamily) -> bool {
    let full = full_mask(sub.order());
    (1..=full).all(|s| !sub.member_bits(s) || sup.member_bits(s))
}
