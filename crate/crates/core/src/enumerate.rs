//! Enumeration of small semigroups up to isomorphism.
//!
//! Tables are filled cell by cell in row-major order and a branch is cut as
//! soon as some fully determined triple violates associativity. Every hit is
//! reduced to its canonical form, so each isomorphism class appears once.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canonical::canonical_form;
use crate::caps::{check, Caps};
use crate::cayley::CayleyTable;
use crate::error::{Error, Result};
use crate::order::join_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemigroupClass {
    All,
    Commutative,
    Band,
    Semilattice,
    Linear,
    /// Meet semilattices with a top element; the join is derived.
    Lattice,
}

impl SemigroupClass {
    pub fn cap(self, caps: &Caps) -> usize {
        match self {
            SemigroupClass::All => caps.all_semigroups,
            SemigroupClass::Commutative => caps.commutative,
            SemigroupClass::Band => caps.bands,
            SemigroupClass::Semilattice => caps.semilattices,
            SemigroupClass::Linear => caps.linear,
            SemigroupClass::Lattice => caps.lattices,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SemigroupClass::All => "all",
            SemigroupClass::Commutative => "commutative",
            SemigroupClass::Band => "band",
            SemigroupClass::Semilattice => "semilattice",
            SemigroupClass::Linear => "linear",
            SemigroupClass::Lattice => "lattice",
        }
    }
}

impl fmt::Display for SemigroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemigroupClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => SemigroupClass::All,
            "commutative" => SemigroupClass::Commutative,
            "band" => SemigroupClass::Band,
            "semilattice" => SemigroupClass::Semilattice,
            "linear" => SemigroupClass::Linear,
            "lattice" | "lattice-pair" => SemigroupClass::Lattice,
            _ => {
                return Err(Error::Unknown {
                    kind: "semigroup class",
                    value: s.to_string(),
                })
            }
        })
    }
}

const UNSET: u8 = u8::MAX;

struct Search {
    n: usize,
    class: SemigroupClass,
    cells: Vec<u8>,
    /// Cells left for the search to choose, in order.
    free: Vec<(usize, usize)>,
    found: BTreeSet<CayleyTable>,
}

impl Search {
    fn new(n: usize, class: SemigroupClass) -> Self {
        let idempotent = matches!(
            class,
            SemigroupClass::Band | SemigroupClass::Semilattice | SemigroupClass::Lattice
        );
        let symmetric = matches!(
            class,
            SemigroupClass::Commutative | SemigroupClass::Semilattice | SemigroupClass::Lattice
        );
        let mut cells = vec![UNSET; n * n];
        let mut free = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if idempotent && x == y {
                    cells[x * n + y] = x as u8;
                } else if !(symmetric && y < x) {
                    free.push((x, y));
                }
            }
        }
        Search {
            n,
            class,
            cells,
            free,
            found: BTreeSet::new(),
        }
    }

    fn candidates(&self, x: usize, y: usize) -> Vec<u8> {
        match self.class {
            SemigroupClass::Linear => {
                if x == y {
                    vec![x as u8]
                } else {
                    vec![x as u8, y as u8]
                }
            }
            // Labelings in which the numeric order extends the semilattice
            // order: every isomorphism class has one, so xy <= min(x, y).
            SemigroupClass::Semilattice | SemigroupClass::Lattice => {
                (0..=x.min(y) as u8).collect()
            }
            _ => (0..self.n as u8).collect(),
        }
    }

    fn get(&self, x: usize, y: usize) -> u8 {
        self.cells[x * self.n + y]
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = self.get(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let left = self.get(ab as usize, c);
                    let right = self.get(a, bc as usize);
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if depth == self.free.len() {
            let t = CayleyTable::from_cells_unchecked(self.n, self.cells.clone());
            if self.class == SemigroupClass::Lattice && join_table(&t).is_err() {
                return;
            }
            self.found.insert(canonical_form(&t));
            return;
        }
        let (x, y) = self.free[depth];
        let symmetric = matches!(
            self.class,
            SemigroupClass::Commutative | SemigroupClass::Semilattice | SemigroupClass::Lattice
        );
        for v in self.candidates(x, y) {
            self.cells[x * self.n + y] = v;
            if symmetric {
                self.cells[y * self.n + x] = v;
            }
            if self.consistent() {
                self.run(depth + 1);
            }
        }
        self.cells[x * self.n + y] = UNSET;
        if symmetric {
            self.cells[y * self.n + x] = UNSET;
        }
    }
}

/// One canonical representative per isomorphism class, sorted.
pub fn enumerate_semigroups(
    n: usize,
    class: SemigroupClass,
    caps: &Caps,
) -> Result<Vec<CayleyTable>> {
    if n == 0 {
        return Err(Error::Input("carrier must be nonempty".into()));
    }
    check(&format!("{class} semigroup enumeration"), n, class.cap(caps))?;
    check("semigroup enumeration", n, crate::cayley::MAX_ORDER)?;
    let mut search = Search::new(n, class);
    search.run(0);
    Ok(search.found.into_iter().collect())
}

/// Enumerated lattices as `(meet, join)` pairs.
pub fn enumerate_lattices(n: usize, caps: &Caps) -> Result<Vec<(CayleyTable, CayleyTable)>> {
    enumerate_semigroups(n, SemigroupClass::Lattice, caps)?
        .into_iter()
        .map(|meet| {
            let join = join_table(&meet)?;
            Ok((meet, join))
        })
        .collect()
}
