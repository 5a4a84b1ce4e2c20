//! Upfamilies over a finite carrier.
//!
//! An upfamily is a nonempty family of nonempty subsets closed under
//! supersets. It is stored canonically as the sorted antichain of its
//! minimal members; [`UpSetBits`] is the equivalent membership truth table
//! used by the fast product kernel.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cayley::MAX_ORDER;
use crate::error::{input, Error, Result};

/// A nonempty subset of `0..order` as a bit vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u16,
    order: u8,
}

pub(crate) fn full_mask(order: usize) -> u16 {
    ((1u32 << order) - 1) as u16
}

impl SubsetMask {
    pub fn new(order: usize, bits: u16) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(input(format!("carrier order {order} outside 1..={MAX_ORDER}")));
        }
        if bits == 0 {
            return Err(input("subsets of an upfamily must be nonempty"));
        }
        if bits & !full_mask(order) != 0 {
            return Err(input(format!("subset {bits:#b} exceeds carrier of order {order}")));
        }
        Ok(SubsetMask {
            bits,
            order: order as u8,
        })
    }

    pub fn from_indices(order: usize, indices: &[usize]) -> Result<Self> {
        let mut bits = 0u16;
        for &i in indices {
            if i >= order {
                return Err(input(format!("index {i} outside carrier of order {order}")));
            }
            bits |= 1 << i;
        }
        Self::new(order, bits)
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn order(self) -> usize {
        self.order as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn indices(self) -> Vec<usize> {
        (0..self.order as usize).filter(|i| self.bits >> i & 1 == 1).collect()
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    /// The complement within the carrier, unless it is empty.
    pub fn complement(self) -> Option<SubsetMask> {
        let c = full_mask(self.order()) & !self.bits;
        (c != 0).then_some(SubsetMask {
            bits: c,
            order: self.order,
        })
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Membership truth table of a family: bit `S` is set iff subset `S` is a member.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpSetBits([u64; 4]);

impl UpSetBits {
    #[inline]
    pub fn contains(&self, set: u16) -> bool {
        self.0[(set >> 6) as usize] >> (set & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, set: u16) {
        self.0[(set >> 6) as usize] |= 1 << (set & 63);
    }

    /// Family inclusion (every member of `self` is a member of `other`).
    pub fn is_subfamily_of(&self, other: &UpSetBits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// An upfamily in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpFamily {
    order: u8,
    minimal: Vec<SubsetMask>,
}

/// Which of the classical subspaces a family belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpFamilyFlags {
    pub filter: bool,
    pub ultrafilter: bool,
    pub linked: bool,
    pub maximal_linked: bool,
}

impl UpFamily {
    /// The upper closure of `generators`, reduced to its minimal members.
    pub fn up_closure(order: usize, generators: &[SubsetMask]) -> Result<Self> {
        if generators.is_empty() {
            return Err(input("an upfamily needs at least one generator"));
        }
        if let Some(g) = generators.iter().find(|g| g.order() != order) {
            return Err(Error::WidthMismatch {
                left: order,
                right: g.order(),
            });
        }
        let mut gens: Vec<SubsetMask> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<SubsetMask> = gens
            .iter()
            .copied()
            .filter(|&g| !gens.iter().any(|&h| h != g && h.is_subset_of(g)))
            .collect();
        Ok(UpFamily {
            order: order as u8,
            minimal,
        })
    }

    pub fn from_index_lists(order: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let gens = lists
            .iter()
            .map(|l| SubsetMask::from_indices(order, l))
            .collect::<Result<Vec<_>>>()?;
        Self::up_closure(order, &gens)
    }

    /// `⟨{x}⟩`, the principal ultrafilter at `x`.
    pub fn point(order: usize, x: usize) -> Result<Self> {
        Self::up_closure(order, &[SubsetMask::from_indices(order, &[x])?])
    }

    pub(crate) fn from_minimal_unchecked(order: usize, minimal: Vec<SubsetMask>) -> Self {
        UpFamily {
            order: order as u8,
            minimal,
        }
    }

    /// Decodes a membership table; the table must be a nonempty upset without `∅`.
    pub fn from_bits(order: usize, bits: &UpSetBits) -> Self {
        let full = full_mask(order);
        let mut minimal = Vec::new();
        for s in 1..=full {
            if bits.contains(s) && (0..order).all(|i| s >> i & 1 == 0 || !bits.contains(s & !(1 << i))) {
                minimal.push(SubsetMask {
                    bits: s,
                    order: order as u8,
                });
            }
        }
        debug_assert!(!minimal.is_empty());
        UpFamily {
            order: order as u8,
            minimal,
        }
    }

    pub fn to_bits(&self) -> UpSetBits {
        let mut out = UpSetBits::default();
        for s in 1..=full_mask(self.order()) {
            if self.minimal.iter().any(|m| m.bits & !s == 0) {
                out.insert(s);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn minimal(&self) -> &[SubsetMask] {
        &self.minimal
    }

    pub fn member(&self, s: SubsetMask) -> bool {
        debug_assert_eq!(s.order(), self.order());
        self.minimal.iter().any(|m| m.is_subset_of(s))
    }

    pub(crate) fn member_bits(&self, s: u16) -> bool {
        s != 0 && self.minimal.iter().any(|m| m.bits & !s == 0)
    }

    /// Every member, ascending by bit value.
    pub fn members(&self) -> Vec<SubsetMask> {
        (1..=full_mask(self.order()))
            .filter(|&s| self.member_bits(s))
            .map(|bits| SubsetMask {
                bits,
                order: self.order,
            })
            .collect()
    }

    /// Minimal members as sorted index lists, the JSON shape of a family.
    pub fn index_lists(&self) -> Vec<Vec<usize>> {
        self.minimal.iter().map(|m| m.indices()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.index_lists()).expect("plain integers")
    }

    pub fn from_json(order: usize, json: &str) -> Result<Self> {
        let lists: Vec<Vec<usize>> =
            serde_json::from_str(json).map_err(|e| input(format!("bad family JSON: {e}")))?;
        Self::from_index_lists(order, &lists)
    }

    /// Closed under pairwise intersection, checked over all members.
    pub fn is_filter_by_intersections(&self) -> bool {
        let members = self.members();
        members.iter().all(|a| {
            members
                .iter()
                .all(|b| self.member_bits(a.bits & b.bits))
        })
    }

    pub fn is_linked(&self) -> bool {
        self.minimal
            .iter()
            .all(|a| self.minimal.iter().all(|b| a.bits & b.bits != 0))
    }

    /// Linked, and adding any non-member set breaks linkedness.
    pub fn is_maximal_linked_by_extension(&self) -> bool {
        if !self.is_linked() {
            return false;
        }
        (1..=full_mask(self.order()))
            .filter(|&s| !self.member_bits(s))
            .all(|s| self.minimal.iter().any(|m| m.bits & s == 0))
    }

    /// Exactly one of `S` and its complement is a member, for every nonempty `S`.
    pub fn is_self_dual(&self) -> bool {
        let full = full_mask(self.order());
        self.member_bits(full)
            && (1..full).all(|s| self.member_bits(s) != self.member_bits(full & !s))
    }

    pub fn is_ultrafilter(&self) -> bool {
        self.minimal.len() == 1 && self.minimal[0].len() == 1
    }
}

/// Filter / ultrafilter / linked / maximal-linked flags.
///
/// Both filter tests and both maximality tests are run; a disagreement means
/// the representation is broken and panics.
pub fn classify_upfamily(f: &UpFamily) -> UpFamilyFlags {
    let filter = f.minimal.len() == 1;
    assert_eq!(
        filter,
        f.is_filter_by_intersections(),
        "filter tests disagree on {f}"
    );
    let maximal_linked = f.is_self_dual();
    assert_eq!(
        maximal_linked,
        f.is_maximal_linked_by_extension(),
        "maximality tests disagree on {f}"
    );
    UpFamilyFlags {
        filter,
        ultrafilter: f.is_ultrafilter(),
        linked: f.is_linked(),
        maximal_linked,
    }
}

impl fmt::Display for UpFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.minimal.iter().map(|m| m.to_string()).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}
