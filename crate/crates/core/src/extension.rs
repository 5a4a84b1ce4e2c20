//! Extension semigroups: a space of upfamilies with the extended product.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::cayley::{validate_semigroup, CayleyTable};
use crate::error::{Error, Result};
use crate::family::{UpFamily, UpSetBits};
use crate::order::check_lattice;
use crate::product::ProductKernel;
use crate::space::{enumerate_space, SpaceKind};

/// Product tables larger than this many cells are never memoized.
const MEMO_LIMIT: usize = 1 << 24;
const EMPTY: u32 = u32::MAX;

/// One of the spaces over a base semigroup, with a lazily filled product table.
pub struct ExtensionSemigroup {
    base: CayleyTable,
    kind: SpaceKind,
    carrier: Vec<UpFamily>,
    bits: Vec<UpSetBits>,
    index: HashMap<UpSetBits, u32>,
    kernel: ProductKernel,
    /// right profiles of every carrier element, `subsets` entries each
    profiles: Vec<u16>,
    subsets: usize,
    memo: OnceLock<Vec<AtomicU32>>,
}

pub fn build_extension(t: &CayleyTable, kind: SpaceKind, caps: &Caps) -> Result<ExtensionSemigroup> {
    validate_semigroup(t)?;
    let carrier = enumerate_space(kind, t.order(), caps)?;
    ExtensionSemigroup::from_carrier(t, kind, carrier)
}

impl ExtensionSemigroup {
    pub(crate) fn from_carrier(t: &CayleyTable, kind: SpaceKind, carrier: Vec<UpFamily>) -> Result<Self> {
        let kernel = ProductKernel::new(t);
        let bits: Vec<UpSetBits> = carrier.iter().map(UpFamily::to_bits).collect();
        let index = bits
            .iter()
            .enumerate()
            .map(|(i, b)| (*b, i as u32))
            .collect();
        let subsets = 1usize << t.order();
        let profiles: Vec<u16> = bits
            .par_iter()
            .flat_map_iter(|b| kernel.right_profile(b))
            .collect();
        let ext = ExtensionSemigroup {
            base: t.clone(),
            kind,
            carrier,
            bits,
            index,
            kernel,
            profiles,
            subsets,
            memo: OnceLock::new(),
        };
        ext.check_principal_embedding()?;
        Ok(ext)
    }

    pub fn base(&self) -> &CayleyTable {
        &self.base
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[UpFamily] {
        &self.carrier
    }

    pub fn family(&self, i: usize) -> &UpFamily {
        &self.carrier[i]
    }

    pub fn bits(&self, i: usize) -> &UpSetBits {
        &self.bits[i]
    }

    pub fn kernel(&self) -> &ProductKernel {
        &self.kernel
    }

    pub fn position(&self, f: &UpFamily) -> Option<usize> {
        self.index.get(&f.to_bits()).map(|&i| i as usize)
    }

    pub fn position_of_bits(&self, b: &UpSetBits) -> Option<usize> {
        self.index.get(b).map(|&i| i as usize)
    }

    fn profile(&self, i: usize) -> &[u16] {
        &self.profiles[i * self.subsets..(i + 1) * self.subsets]
    }

    /// Product of carrier elements `i * j` as a truth table.
    #[inline]
    pub fn product_bits(&self, i: usize, j: usize) -> UpSetBits {
        self.kernel.product_with_profile(&self.bits[i], self.profile(j))
    }

    /// `x * carrier[j]` for an arbitrary table `x`.
    #[inline]
    pub fn mul_bits(&self, x: &UpSetBits, j: usize) -> UpSetBits {
        self.kernel.product_with_profile(x, self.profile(j))
    }

    fn locate(&self, i: usize, j: usize, b: &UpSetBits) -> Result<usize> {
        self.position_of_bits(b).ok_or_else(|| Error::ClosureViolation {
            space: format!("{}(X), |X| = {}", self.kind, self.base.order()),
            left: i,
            right: j,
        })
    }

    /// Carrier position of `i * j`; a product outside the carrier is an error.
    pub fn product(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.len();
        if n * n > MEMO_LIMIT {
            return self.locate(i, j, &self.product_bits(i, j));
        }
        let memo = self
            .memo
            .get_or_init(|| (0..n * n).map(|_| AtomicU32::new(EMPTY)).collect());
        let cell = &memo[i * n + j];
        let cached = cell.load(Ordering::Relaxed);
        if cached != EMPTY {
            return Ok(cached as usize);
        }
        let k = self.locate(i, j, &self.product_bits(i, j))?;
        // every writer computes the same value
        cell.store(k as u32, Ordering::Relaxed);
        Ok(k)
    }

    /// `x ↦ ⟨{x}⟩` must be an injective homomorphism into the carrier.
    fn check_principal_embedding(&self) -> Result<()> {
        let n = self.base.order();
        let points: Vec<usize> = (0..n)
            .map(|x| {
                let p = UpFamily::point(n, x)?;
                self.position(&p).ok_or_else(|| {
                    Error::Input(format!("{} does not contain the point {x}", self.kind))
                })
            })
            .collect::<Result<_>>()?;
        for x in 0..n {
            for y in 0..n {
                let k = self.product(points[x], points[y])?;
                if k != points[self.base.mul(x, y)] {
                    return Err(Error::ClosureViolation {
                        space: format!("principal embedding into {}", self.kind),
                        left: points[x],
                        right: points[y],
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks every product lands in the carrier.
    pub fn check_closure(&self) -> Result<()> {
        (0..self.len()).into_par_iter().try_for_each(|i| {
            (0..self.len()).try_for_each(|j| self.locate(i, j, &self.product_bits(i, j)).map(|_| ()))
        })
    }

    /// First `(a, b, c)` with `(ab)c != a(bc)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.product_bits(a, b);
                for c in 0..n {
                    let left = self.mul_bits(&ab, c);
                    let bc = self.product_bits(b, c);
                    let right = self
                        .kernel
                        .product_with_profile(&self.bits[a], &self.kernel.right_profile(&bc));
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// First element with `aa != a`.
    pub fn band_witness(&self) -> Option<usize> {
        (0..self.len())
            .into_par_iter()
            .find_first(|&i| self.product_bits(i, i) != self.bits[i])
    }

    /// First pair `i < j` with `ij != ji`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).into_par_iter().find_map_first(|i| {
            (i + 1..n)
                .find(|&j| self.product_bits(i, j) != self.product_bits(j, i))
                .map(|j| (i, j))
        })
    }

    /// First ordered pair with `ij ∉ {i, j}`.
    pub fn linearity_witness(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).into_par_iter().find_map_first(|i| {
            (0..n)
                .find(|&j| {
                    let p = self.product_bits(i, j);
                    p != self.bits[i] && p != self.bits[j]
                })
                .map(|j| (i, j))
        })
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len())
            .into_par_iter()
            .filter(|&i| self.product_bits(i, i) == self.bits[i])
            .collect()
    }

    /// `x^k` as a truth table, `k >= 1`.
    pub fn power_bits(&self, i: usize, k: usize) -> UpSetBits {
        assert!(k >= 1);
        let mut acc = self.bits[i];
        for _ in 1..k {
            acc = self.mul_bits(&acc, i);
        }
        acc
    }

    /// First element violating `x^(n+1) = x^(m+1) => x^n = x^m`.
    pub fn nm_clifford_witness(&self, n: usize, m: usize) -> Option<usize> {
        (0..self.len()).into_par_iter().find_first(|&i| {
            self.power_bits(i, n + 1) == self.power_bits(i, m + 1)
                && self.power_bits(i, n) != self.power_bits(i, m)
        })
    }

    /// Whether some `g` in this carrier gives `f g f = f`.
    pub fn is_regular_element(&self, f: &UpSetBits) -> bool {
        let f_profile = self.kernel.right_profile(f);
        (0..self.len()).into_par_iter().any(|g| {
            let fg = self.mul_bits(f, g);
            self.kernel.product_with_profile(&fg, &f_profile) == *f
        })
    }

    /// `i <= j` in the idempotent order, i.e. `ij = i`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.product_bits(i, j) == self.bits[i]
    }

    /// The full product table over carrier positions, as Cayley JSON.
    pub fn product_table_json(&self) -> Result<serde_json::Value> {
        let n = self.len();
        let rows: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| self.product(i, j)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(serde_json::json!({ "order": n, "table": rows }))
    }
}

/// Result of [`analyze_extension`]. Witnesses are carrier positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionAnalysis {
    pub band: bool,
    pub commutative: bool,
    pub linear: bool,
    pub semilattice: bool,
    pub idempotents: Vec<usize>,
    pub band_witness: Option<usize>,
    pub commutativity_witness: Option<(usize, usize)>,
    pub linearity_witness: Option<(usize, usize)>,
}

pub fn analyze_extension(e: &ExtensionSemigroup) -> ExtensionAnalysis {
    let band_witness = e.band_witness();
    let commutativity_witness = e.commutativity_witness();
    let linearity_witness = e.linearity_witness();
    ExtensionAnalysis {
        band: band_witness.is_none(),
        commutative: commutativity_witness.is_none(),
        linear: linearity_witness.is_none(),
        semilattice: band_witness.is_none() && commutativity_witness.is_none(),
        idempotents: e.idempotents(),
        band_witness,
        commutativity_witness,
        linearity_witness,
    }
}

/// Serializable analysis with witnesses written out as families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub space: SpaceKind,
    pub base: CayleyTable,
    pub size: usize,
    pub band: bool,
    pub commutative: bool,
    pub linear: bool,
    pub semilattice: bool,
    pub idempotent_count: usize,
    pub band_witness: Option<Vec<Vec<usize>>>,
    pub commutativity_witness: Option<[Vec<Vec<usize>>; 2]>,
    pub linearity_witness: Option<[Vec<Vec<usize>>; 2]>,
    pub wall_ms: u64,
}

impl AnalysisReport {
    pub fn build(e: &ExtensionSemigroup) -> Self {
        let start = Instant::now();
        let a = analyze_extension(e);
        let fam = |i: usize| e.family(i).index_lists();
        AnalysisReport {
            space: e.kind(),
            base: e.base().clone(),
            size: e.len(),
            band: a.band,
            commutative: a.commutative,
            linear: a.linear,
            semilattice: a.semilattice,
            idempotent_count: a.idempotents.len(),
            band_witness: a.band_witness.map(fam),
            commutativity_witness: a.commutativity_witness.map(|(i, j)| [fam(i), fam(j)]),
            linearity_witness: a.linearity_witness.map(|(i, j)| [fam(i), fam(j)]),
            wall_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// (n, m)-Clifford check with the first failing element.
pub fn extension_nm_clifford(e: &ExtensionSemigroup, n: usize, m: usize) -> (bool, Option<usize>) {
    let w = e.nm_clifford_witness(n, m);
    (w.is_none(), w)
}

/// Whether `f * g * f = f` for some `g ∈ υ(X)`.
pub fn is_regular_in_upsilon(f: &UpFamily, t: &CayleyTable, caps: &Caps) -> Result<bool> {
    if f.order() != t.order() {
        return Err(Error::WidthMismatch {
            left: f.order(),
            right: t.order(),
        });
    }
    let upsilon = build_extension(t, SpaceKind::Upsilon, caps)?;
    Ok(upsilon.is_regular_element(&f.to_bits()))
}

/// Meet and join extended to the same space.
pub struct LatticeExtension {
    pub meet: ExtensionSemigroup,
    pub join: ExtensionSemigroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LatticeLaw {
    MeetSemilattice,
    JoinSemilattice,
    /// `(x ∧ y) ∨ y = y`
    MeetThenJoin,
    /// `(x ∨ y) ∧ y = y`
    JoinThenMeet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAnalysis {
    pub is_lattice: bool,
    /// Failed law and the carrier positions `(x, y)` involved.
    pub witness: Option<(LatticeLaw, usize, usize)>,
}

impl LatticeExtension {
    pub fn new(meet: &CayleyTable, join: &CayleyTable, kind: SpaceKind, caps: &Caps) -> Result<Self> {
        check_lattice(meet, join)?;
        Ok(LatticeExtension {
            meet: build_extension(meet, kind, caps)?,
            join: build_extension(join, kind, caps)?,
        })
    }

    pub fn analyze(&self) -> LatticeAnalysis {
        for (law, ext) in [
            (LatticeLaw::MeetSemilattice, &self.meet),
            (LatticeLaw::JoinSemilattice, &self.join),
        ] {
            if let Some(i) = ext.band_witness() {
                return LatticeAnalysis {
                    is_lattice: false,
                    witness: Some((law, i, i)),
                };
            }
            if let Some((i, j)) = ext.commutativity_witness() {
                return LatticeAnalysis {
                    is_lattice: false,
                    witness: Some((law, i, j)),
                };
            }
        }
        let n = self.meet.len();
        let witness = (0..n).into_par_iter().find_map_first(|x| {
            (0..n).find_map(|y| {
                let y_bits = self.meet.bits(y);
                let m = self.meet.product_bits(x, y);
                if self.join.mul_bits(&m, y) != *y_bits {
                    return Some((LatticeLaw::MeetThenJoin, x, y));
                }
                let j = self.join.product_bits(x, y);
                if self.meet.mul_bits(&j, y) != *y_bits {
                    return Some((LatticeLaw::JoinThenMeet, x, y));
                }
                None
            })
        });
        LatticeAnalysis {
            is_lattice: witness.is_none(),
            witness,
        }
    }
}

pub fn analyze_lattice_extension(
    meet: &CayleyTable,
    join: &CayleyTable,
    kind: SpaceKind,
    caps: &Caps,
) -> Result<LatticeAnalysis> {
    Ok(LatticeExtension::new(meet, join, kind, caps)?.analyze())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carriers::named;
    use crate::order::join_table;

    fn fam(order: usize, lists: &[&[usize]]) -> UpFamily {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        UpFamily::from_index_lists(order, &lists).unwrap()
    }

    fn ext(carrier: &str, kind: SpaceKind) -> ExtensionSemigroup {
        build_extension(&named(carrier).unwrap(), kind, &Caps::default()).unwrap()
    }

    #[test]
    fn upsilon_of_two_chain() {
        let e = ext("chain:2", SpaceKind::Upsilon);
        assert_eq!(e.len(), 4);
        let a = analyze_extension(&e);
        assert!(a.band && a.commutative && a.semilattice);
        e.check_closure().unwrap();
    }

    #[test]
    fn lambda_three_is_a_chain_with_delta_above_one() {
        let e = ext("chain:3", SpaceKind::Lambda);
        let a = analyze_extension(&e);
        assert!(a.semilattice && a.linear);
        let p = |lists: &[&[usize]]| e.position(&fam(3, lists)).unwrap();
        let (zero, one, two) = (p(&[&[0]]), p(&[&[1]]), p(&[&[2]]));
        let delta = p(&[&[0, 1], &[0, 2], &[1, 2]]);
        assert!(e.leq(zero, one) && e.leq(one, delta) && e.leq(delta, two));
        assert!(!e.leq(delta, one));
    }

    #[test]
    fn lambda_four_is_not_linear() {
        let e = ext("chain:4", SpaceKind::Lambda);
        let a = analyze_extension(&e);
        assert_eq!(e.len(), 12);
        assert!(a.semilattice && !a.linear);
    }

    #[test]
    fn upsilon_of_vee_is_not_a_band() {
        let e = ext("vee", SpaceKind::Upsilon);
        let a = analyze_extension(&e);
        assert!(!a.band);
        let l = e.position(&fam(3, &[&[1, 2], &[0, 1], &[0, 2]])).unwrap();
        let ll = e.product(l, l).unwrap();
        assert_eq!(e.family(ll), &fam(3, &[&[0]]));
    }

    #[test]
    fn n2_of_vee_is_not_commutative() {
        let e = ext("vee", SpaceKind::N2);
        assert!(e.commutativity_witness().is_some());
        let a = e.position(&fam(3, &[&[1, 2]])).unwrap();
        let b = e.position(&fam(3, &[&[0, 1], &[0, 2]])).unwrap();
        let zero = SubsetMask::from_indices(3, &[0]).unwrap();
        let ab = e.family(e.product(a, b).unwrap()).clone();
        let ba = e.family(e.product(b, a).unwrap()).clone();
        assert!(ab.member(zero) && !ba.member(zero));
    }

    #[test]
    fn regularity() {
        let vee = named("vee").unwrap();
        let l = fam(3, &[&[1, 2], &[0, 1], &[0, 2]]);
        assert!(!is_regular_in_upsilon(&l, &vee, &Caps::default()).unwrap());
        let idem = fam(3, &[&[0]]);
        assert!(is_regular_in_upsilon(&idem, &vee, &Caps::default()).unwrap());
        let c2 = named("chain:2").unwrap();
        for f in enumerate_space(SpaceKind::Phi, 2, &Caps::default()).unwrap() {
            assert!(is_regular_in_upsilon(&f, &c2, &Caps::default()).unwrap());
        }
    }

    #[test]
    fn clifford_examples() {
        assert!(extension_nm_clifford(&ext("chain:3", SpaceKind::Phi), 1, 2).0);
        let phi = ext("vee", SpaceKind::Phi);
        let (ok, w) = extension_nm_clifford(&phi, 1, 2);
        assert!(!ok);
        assert!(w.is_some());
        let f = phi.position(&fam(3, &[&[1, 2]])).unwrap();
        assert_ne!(phi.power_bits(f, 1), phi.power_bits(f, 2));
        assert_eq!(phi.power_bits(f, 2), phi.power_bits(f, 3));
        assert!(!extension_nm_clifford(&ext("vee", SpaceKind::Lambda), 1, 2).0);
    }

    #[test]
    fn lattice_extensions() {
        let caps = Caps::default();
        let c2 = named("chain:2").unwrap();
        let a = analyze_lattice_extension(&c2, &join_table(&c2).unwrap(), SpaceKind::Upsilon, &caps).unwrap();
        assert!(a.is_lattice);
        let c3 = named("chain:3").unwrap();
        let j3 = join_table(&c3).unwrap();
        assert!(!analyze_lattice_extension(&c3, &j3, SpaceKind::Lambda, &caps).unwrap().is_lattice);
        assert!(!analyze_lattice_extension(&c3, &j3, SpaceKind::Phi, &caps).unwrap().is_lattice);
        let vee = named("vee").unwrap();
        assert!(analyze_lattice_extension(&vee, &vee, SpaceKind::Phi, &caps).is_err());
    }

    #[test]
    fn product_table_export() {
        let e = ext("chain:2", SpaceKind::Upsilon);
        let v = e.product_table_json().unwrap();
        assert_eq!(v["order"], 4);
        assert_eq!(v["table"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn refuses_non_associative_base() {
        let t = CayleyTable::from_rows(2, &[vec![1, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            build_extension(&t, SpaceKind::Upsilon, &Caps::default()),
            Err(Error::NotAssociative { .. })
        ));
    }

    use crate::family::SubsetMask;
}
