//! Finite semigroups and their extensions to spaces of upfamilies.
//!
//! A binary operation on a finite carrier `X` extends to the upfamilies on
//! `X` (families of nonempty subsets closed under supersets). This crate
//! builds the space υ(X) of all upfamilies together with its subspaces of
//! filters φ(X), ultrafilters β(X), linked families N₂(X) and maximal linked
//! families λ(X), computes the extended product, and checks algebraic
//! properties of the resulting semigroups by exhaustive search.

pub mod canonical;
pub mod caps;
pub mod carriers;
pub mod cayley;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod family;
pub mod harness;
pub mod hasse;
pub mod order;
pub mod product;
pub mod space;

pub use canonical::{are_isomorphic, canonical_form};
pub use caps::Caps;
pub use carriers::{named, NamedCarrier};
pub use cayley::{classify, validate_semigroup, CayleyTable, StructureFlags, MAX_ORDER};
pub use enumerate::{enumerate_lattices, enumerate_semigroups, SemigroupClass};
pub use error::{Error, Result};
pub use extension::{
    analyze_extension, analyze_lattice_extension, build_extension, extension_nm_clifford,
    is_regular_in_upsilon, AnalysisReport, ExtensionAnalysis, ExtensionSemigroup, LatticeAnalysis,
    LatticeExtension, LatticeLaw,
};
pub use family::{classify_upfamily, SubsetMask, UpFamily, UpFamilyFlags, UpSetBits};
pub use product::{product, tensor_product, ProductKernel};
pub use space::{enumerate_space, lambda4_name, named_lambda4_elements, Lambda4Name, SpaceKind};
pub use harness::{
    theorem_ids, theorem_spec, theorem_specs, verify, verify_all, AggregateReport, HarnessConfig,
    TheoremReport, TheoremSpec, Verdict,
};
pub use hasse::{hasse_diagram, HasseDiagram};
