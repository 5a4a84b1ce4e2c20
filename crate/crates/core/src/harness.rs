//! Exhaustive verification of the characterization theorems.
//!
//! Each theorem is a list of conditions that must be equivalent on every
//! instance of its class. An instance whose truth vector is not constant is
//! a counterexample.

use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::{check, Caps};
use crate::cayley::CayleyTable;
use crate::enumerate::{enumerate_lattices, enumerate_semigroups, SemigroupClass};
use crate::error::{Error, Result};
use crate::extension::{build_extension, ExtensionSemigroup, LatticeExtension};
use crate::order::{is_bush, max_antichain};
use crate::product::tensor_product;
use crate::space::SpaceKind;

/// A base semigroup to test, with its join when it is a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub class: SemigroupClass,
    pub base: CayleyTable,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub join: Option<CayleyTable>,
}

impl Instance {
    pub fn new(class: SemigroupClass, base: CayleyTable) -> Self {
        Instance {
            class,
            base,
            join: None,
        }
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }
}

/// Lazily built extensions of one instance, shared between its conditions.
pub struct InstanceCtx<'a> {
    pub instance: &'a Instance,
    caps: &'a Caps,
    spaces: [OnceLock<Result<ExtensionSemigroup>>; 5],
    lattices: [OnceLock<Result<LatticeExtension>>; 5],
}

fn slot(kind: SpaceKind) -> usize {
    match kind {
        SpaceKind::Upsilon => 0,
        SpaceKind::Phi => 1,
        SpaceKind::Beta => 2,
        SpaceKind::N2 => 3,
        SpaceKind::Lambda => 4,
    }
}

impl<'a> InstanceCtx<'a> {
    pub fn new(instance: &'a Instance, caps: &'a Caps) -> Self {
        InstanceCtx {
            instance,
            caps,
            spaces: Default::default(),
            lattices: Default::default(),
        }
    }

    pub fn base(&self) -> &CayleyTable {
        &self.instance.base
    }

    pub fn space(&self, kind: SpaceKind) -> Result<&ExtensionSemigroup> {
        self.spaces[slot(kind)]
            .get_or_init(|| build_extension(&self.instance.base, kind, self.caps))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn lattice(&self, kind: SpaceKind) -> Result<&LatticeExtension> {
        self.lattices[slot(kind)]
            .get_or_init(|| {
                let join = self
                    .instance
                    .join
                    .as_ref()
                    .ok_or_else(|| Error::NotLattice("instance has no join".into()))?;
                LatticeExtension::new(&self.instance.base, join, kind, self.caps)
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

pub type Predicate = Arc<dyn Fn(&InstanceCtx) -> Result<bool> + Send + Sync>;

#[derive(Clone)]
pub struct Condition {
    pub name: String,
    pub predicate: Predicate,
}

impl Condition {
    pub fn new(
        name: &str,
        predicate: impl Fn(&InstanceCtx) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        Condition {
            name: name.to_string(),
            predicate: Arc::new(predicate),
        }
    }
}

impl fmt::Debug for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Condition").field("name", &self.name).finish()
    }
}

/// Instances of one class with orders in `min_order..=max_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceClass {
    pub class: SemigroupClass,
    pub min_order: usize,
    pub max_order: usize,
}

impl InstanceClass {
    pub fn up_to(class: SemigroupClass, max_order: usize) -> Self {
        InstanceClass {
            class,
            min_order: 1,
            max_order,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremSpec {
    pub id: String,
    pub statement: String,
    pub instances: Vec<InstanceClass>,
    pub conditions: Vec<Condition>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub instance: Instance,
    /// Value of each condition, in the order of `conditions`.
    pub truth: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub class: SemigroupClass,
    pub order: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    pub conditions: Vec<String>,
    pub instances_checked: usize,
    pub instance_counts: Vec<ClassCount>,
    pub result: Verdict,
    /// Total number of instances with a non-constant truth vector.
    pub counterexamples: usize,
    pub witness: Option<Witness>,
    pub wall_ms: u64,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.result == Verdict::Verified
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutOfScope {
    pub id: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub success: bool,
    pub verified: usize,
    pub failed: usize,
    pub reports: Vec<TheoremReport>,
    pub out_of_scope: Vec<OutOfScope>,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HarnessConfig {
    pub caps: Caps,
    /// Lowers the largest instance order of every theorem.
    pub max_order: Option<usize>,
}

/// Rewrites the instance list of a theorem before evaluation (self-tests).
pub type InstanceHook = dyn Fn(&str, &mut Vec<Instance>) + Send + Sync;

fn all_regular(ctx: &InstanceCtx, kind: SpaceKind) -> Result<bool> {
    let upsilon = ctx.space(SpaceKind::Upsilon)?;
    let space = ctx.space(kind)?;
    Ok((0..space.len())
        .into_par_iter()
        .all(|i| upsilon.is_regular_element(space.bits(i))))
}

fn is_linear_semilattice(t: &CayleyTable) -> bool {
    t.is_semilattice() && t.is_linear()
}

fn band(kind: SpaceKind) -> impl Fn(&InstanceCtx) -> Result<bool> {
    move |c| Ok(c.space(kind)?.band_witness().is_none())
}

fn commutative(kind: SpaceKind) -> impl Fn(&InstanceCtx) -> Result<bool> {
    move |c| Ok(c.space(kind)?.commutativity_witness().is_none())
}

fn semilattice(kind: SpaceKind) -> impl Fn(&InstanceCtx) -> Result<bool> {
    move |c| {
        let e = c.space(kind)?;
        Ok(e.band_witness().is_none() && e.commutativity_witness().is_none())
    }
}

fn linear(kind: SpaceKind) -> impl Fn(&InstanceCtx) -> Result<bool> {
    move |c| Ok(c.space(kind)?.linearity_witness().is_none())
}

fn clifford12(kind: SpaceKind) -> impl Fn(&InstanceCtx) -> Result<bool> {
    move |c| Ok(c.space(kind)?.nm_clifford_witness(1, 2).is_none())
}

fn lattice(kind: SpaceKind) -> impl Fn(&InstanceCtx) -> Result<bool> {
    move |c| Ok(c.lattice(kind)?.analyze().is_lattice)
}

/// `A*B = A⊗B` for every pair of upfamilies.
fn product_equals_tensor(ctx: &InstanceCtx) -> Result<bool> {
    let upsilon = ctx.space(SpaceKind::Upsilon)?;
    let t = ctx.base();
    let n = upsilon.len();
    (0..n).into_par_iter().try_fold(
        || true,
        |acc, i| -> Result<bool> {
            if !acc {
                return Ok(false);
            }
            for j in 0..n {
                let tensor = tensor_product(upsilon.family(i), upsilon.family(j), t)?;
                if tensor.to_bits() != upsilon.product_bits(i, j) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    )
    .try_reduce(|| true, |a, b| Ok(a && b))
}

fn spec(id: &str, statement: &str, instances: Vec<InstanceClass>, conditions: Vec<Condition>) -> TheoremSpec {
    TheoremSpec {
        id: id.to_string(),
        statement: statement.to_string(),
        instances,
        conditions,
    }
}

/// The twelve theorem checks at their default instance bounds.
pub fn theorem_specs() -> Vec<TheoremSpec> {
    use SemigroupClass as C;
    use SpaceKind as K;
    let up_to = InstanceClass::up_to;
    let x_linear = || Condition::new("X linear", |c| Ok(c.base().is_linear()));
    let x_linear_semilattice =
        || Condition::new("X finite linear semilattice", |c| Ok(is_linear_semilattice(c.base())));
    vec![
        spec(
            "1.1",
            "X linear ⇔ υ(X) band ⇔ φ(X) band ⇔ λ(X) band",
            vec![up_to(C::All, 3), up_to(C::Band, 4)],
            vec![
                x_linear(),
                Condition::new("υ(X) band", band(K::Upsilon)),
                Condition::new("φ(X) band", band(K::Phi)),
                Condition::new("λ(X) band", band(K::Lambda)),
            ],
        ),
        spec(
            "prop-reg",
            "for bands: X linear ⇔ every element of φ(X) is regular in υ(X) ⇔ every element of λ(X) is regular in υ(X)",
            vec![up_to(C::Band, 4)],
            vec![
                x_linear(),
                Condition::new("φ(X) regular in υ(X)", |c| all_regular(c, K::Phi)),
                Condition::new("λ(X) regular in υ(X)", |c| all_regular(c, K::Lambda)),
            ],
        ),
        spec(
            "1.2-clifford",
            "for semilattices: X linear ⇔ φ(X) (1,2)-Clifford ⇔ λ(X) (1,2)-Clifford",
            vec![up_to(C::Semilattice, 5)],
            vec![
                x_linear(),
                Condition::new("φ(X) (1,2)-Clifford", clifford12(K::Phi)),
                Condition::new("λ(X) (1,2)-Clifford", clifford12(K::Lambda)),
            ],
        ),
        spec(
            "beta-band-finite",
            "for finite bands: β(X) ≅ X is a band and every antichain of X is finite",
            vec![up_to(C::Band, 4)],
            vec![
                Condition::new("β(X) band", band(K::Beta)),
                Condition::new("β(X) ≅ X", |c| Ok(c.space(K::Beta)?.len() == c.base().order())),
                Condition::new("maximum antichain is a finite antichain", |c| {
                    let t = c.base();
                    let a = max_antichain(t);
                    let sound = a.iter().all(|&x| {
                        a.iter().all(|&y| {
                            x == y || {
                                let p = t.mul(x, y);
                                p != x && p != y
                            }
                        })
                    });
                    Ok(sound && !a.is_empty() && a.len() <= t.order())
                }),
            ],
        ),
        spec(
            "2.1",
            "X linear ⇒ A*B = A⊗B for all upfamilies A, B",
            vec![up_to(C::Linear, 4)],
            vec![
                x_linear(),
                Condition::new("A*B = A⊗B on υ(X)", product_equals_tensor),
            ],
        ),
        spec(
            "2.2",
            "for bands: X finite linear semilattice ⇔ υ(X) commutative ⇔ N₂(X) commutative ⇔ λ(X) commutative and (1,2)-Clifford",
            vec![up_to(C::Band, 4)],
            vec![
                x_linear_semilattice(),
                Condition::new("υ(X) commutative", commutative(K::Upsilon)),
                Condition::new("N₂(X) commutative", commutative(K::N2)),
                Condition::new("λ(X) commutative and (1,2)-Clifford", |c| {
                    Ok(commutative(K::Lambda)(c)? && clifford12(K::Lambda)(c)?)
                }),
            ],
        ),
        spec(
            "2.6",
            "for semilattices: λ(X) commutative ⇔ X is a bush",
            vec![up_to(C::Semilattice, 6)],
            vec![
                Condition::new("λ(X) commutative", commutative(K::Lambda)),
                Condition::new("X bush", |c| is_bush(c.base())),
            ],
        ),
        spec(
            "3.1",
            "X finite linear semilattice ⇔ υ(X) semilattice ⇔ λ(X) semilattice ⇔ φ(X) semilattice",
            vec![up_to(C::All, 3), up_to(C::Semilattice, 5)],
            vec![
                x_linear_semilattice(),
                Condition::new("υ(X) semilattice", semilattice(K::Upsilon)),
                Condition::new("λ(X) semilattice", semilattice(K::Lambda)),
                Condition::new("φ(X) semilattice", semilattice(K::Phi)),
            ],
        ),
        spec(
            "4.1",
            "υ(X) linear ⇔ X is a left-zero or right-zero semigroup",
            vec![up_to(C::All, 3), up_to(C::Band, 4)],
            vec![
                Condition::new("υ(X) linear", linear(K::Upsilon)),
                Condition::new("X left-zero or right-zero", |c| {
                    Ok(c.base().is_left_zero() || c.base().is_right_zero())
                }),
            ],
        ),
        spec(
            "4.2",
            "φ(X) linear ⇔ N₂(X) linear ⇔ X left-zero, right-zero, or a semilattice with |X| ≤ 2",
            vec![up_to(C::All, 3), up_to(C::Band, 4)],
            vec![
                Condition::new("φ(X) linear", linear(K::Phi)),
                Condition::new("N₂(X) linear", linear(K::N2)),
                Condition::new("X left-zero, right-zero or small semilattice", |c| {
                    let t = c.base();
                    Ok(t.is_left_zero() || t.is_right_zero() || (t.is_semilattice() && t.order() <= 2))
                }),
            ],
        ),
        spec(
            "4.3",
            "for commutative X: λ(X) linear ⇔ X linear semilattice with |X| ≤ 3",
            vec![up_to(C::Commutative, 4)],
            vec![
                Condition::new("λ(X) linear", linear(K::Lambda)),
                Condition::new("X linear semilattice, |X| ≤ 3", |c| {
                    Ok(is_linear_semilattice(c.base()) && c.base().order() <= 3)
                }),
            ],
        ),
        spec(
            "5-lattice",
            "for lattices: X linear with |X| ≤ 2 ⇔ υ(X) lattice ⇔ λ(X) lattice ⇔ φ(X) lattice",
            vec![up_to(C::Lattice, 5)],
            vec![
                Condition::new("X linear, |X| ≤ 2", |c| {
                    Ok(c.base().is_linear() && c.base().order() <= 2)
                }),
                Condition::new("υ(X) lattice", lattice(K::Upsilon)),
                Condition::new("λ(X) lattice", lattice(K::Lambda)),
                Condition::new("φ(X) lattice", lattice(K::Phi)),
            ],
        ),
    ]
}

pub fn theorem_ids() -> Vec<String> {
    theorem_specs().into_iter().map(|s| s.id).collect()
}

pub fn theorem_spec(id: &str) -> Result<TheoremSpec> {
    theorem_specs()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::Unknown {
            kind: "theorem",
            value: id.to_string(),
        })
}

/// Results that cannot be reached by finite search and are reported as such.
pub fn out_of_scope() -> Vec<OutOfScope> {
    vec![
        OutOfScope {
            id: "beta-band".into(),
            reason: "β(X) band ⇔ no injective sequence with pairwise products outside the pair; \
                     needs infinite carriers, only the finite antichain form is checked"
                .into(),
        },
        OutOfScope {
            id: "2.4".into(),
            reason: "commutativity of β(X) via infinite sequences; no finite instance".into(),
        },
        OutOfScope {
            id: "2.5".into(),
            reason: "commutative β(X) forces finite linear subsemigroups; vacuous for finite X".into(),
        },
    ]
}

fn collect_instances(spec: &TheoremSpec, config: &HarnessConfig) -> Result<(Vec<Instance>, Vec<ClassCount>)> {
    let mut instances = Vec::new();
    let mut counts = Vec::new();
    for ic in &spec.instances {
        let max = config.max_order.map_or(ic.max_order, |m| m.min(ic.max_order));
        for n in ic.min_order..=max {
            check(
                &format!("theorem {} instances ({})", spec.id, ic.class),
                n,
                ic.class.cap(&config.caps),
            )?;
            let found: Vec<Instance> = if ic.class == SemigroupClass::Lattice {
                enumerate_lattices(n, &config.caps)?
                    .into_iter()
                    .map(|(meet, join)| Instance {
                        class: ic.class,
                        base: meet,
                        join: Some(join),
                    })
                    .collect()
            } else {
                enumerate_semigroups(n, ic.class, &config.caps)?
                    .into_iter()
                    .map(|t| Instance::new(ic.class, t))
                    .collect()
            };
            counts.push(ClassCount {
                class: ic.class,
                order: n,
                count: found.len(),
            });
            instances.extend(found);
        }
    }
    Ok((instances, counts))
}

/// Evaluates every condition on one instance from scratch.
pub fn evaluate(spec: &TheoremSpec, instance: &Instance, caps: &Caps) -> Result<Vec<bool>> {
    let ctx = InstanceCtx::new(instance, caps);
    spec.conditions
        .iter()
        .map(|c| (c.predicate)(&ctx))
        .collect()
}

pub fn verify(spec: &TheoremSpec, config: &HarnessConfig) -> Result<TheoremReport> {
    verify_with_hook(spec, config, &|_, _| {})
}

pub fn verify_with_hook(spec: &TheoremSpec, config: &HarnessConfig, hook: &InstanceHook) -> Result<TheoremReport> {
    let start = Instant::now();
    let (mut instances, instance_counts) = collect_instances(spec, config)?;
    hook(&spec.id, &mut instances);
    let truths: Vec<Vec<bool>> = instances
        .par_iter()
        .map(|inst| evaluate(spec, inst, &config.caps))
        .collect::<Result<_>>()?;
    let constant = |v: &Vec<bool>| v.windows(2).all(|w| w[0] == w[1]);
    let counterexamples = truths.iter().filter(|v| !constant(v)).count();
    let witness = instances
        .iter()
        .zip(&truths)
        .find(|(_, v)| !constant(v))
        .map(|(inst, v)| Witness {
            instance: inst.clone(),
            truth: v.clone(),
        });
    Ok(TheoremReport {
        id: spec.id.clone(),
        statement: spec.statement.clone(),
        conditions: spec.conditions.iter().map(|c| c.name.clone()).collect(),
        instances_checked: instances.len(),
        instance_counts,
        result: if witness.is_none() {
            Verdict::Verified
        } else {
            Verdict::Counterexample
        },
        counterexamples,
        witness,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn verify_all(config: &HarnessConfig) -> Result<AggregateReport> {
    verify_all_with_hook(config, &|_, _| {})
}

pub fn verify_all_with_hook(config: &HarnessConfig, hook: &InstanceHook) -> Result<AggregateReport> {
    let start = Instant::now();
    let reports = theorem_specs()
        .iter()
        .map(|s| verify_with_hook(s, config, hook))
        .collect::<Result<Vec<_>>>()?;
    let verified = reports.iter().filter(|r| r.verified()).count();
    Ok(AggregateReport {
        success: verified == reports.len(),
        verified,
        failed: reports.len() - verified,
        reports,
        out_of_scope: out_of_scope(),
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

impl AggregateReport {
    /// Copy with all timing fields zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> AggregateReport {
        let mut r = self.clone();
        r.wall_ms = 0;
        for t in &mut r.reports {
            t.wall_ms = 0;
        }
        r
    }
}
