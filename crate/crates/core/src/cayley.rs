//! Finite magmas and semigroups stored as Cayley tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// Largest carrier the workbench accepts. Subsets of the carrier are stored
/// in a `u16` and families of subsets in a 256-bit truth table.
pub const MAX_ORDER: usize = 8;

/// A binary operation on `0..order`, row `x` holding the products `x*y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct CayleyTable {
    order: usize,
    cells: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<RawTable> for CayleyTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        CayleyTable::from_rows(raw.order, &raw.table)
    }
}

impl From<CayleyTable> for RawTable {
    fn from(t: CayleyTable) -> Self {
        RawTable {
            order: t.order,
            table: t.rows(),
        }
    }
}

/// Identity-based structure flags of a semigroup.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub commutative: bool,
    pub band: bool,
    pub linear: bool,
    pub semilattice: bool,
    pub left_zero: bool,
    pub right_zero: bool,
}

impl CayleyTable {
    /// Builds a table from rows, checking shape and closure (but not associativity).
    pub fn from_rows<R: AsRef<[usize]>>(order: usize, rows: &[R]) -> Result<Self> {
        if order == 0 {
            return Err(input("carrier must be nonempty"));
        }
        if order > MAX_ORDER {
            return Err(Error::CapExceeded {
                what: "carrier".into(),
                order,
                cap: MAX_ORDER,
            });
        }
        if rows.len() != order {
            return Err(input(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(input(format!(
                    "row {x} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (y, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(input(format!("entry ({x},{y}) = {v} is out of range")));
                }
                cells.push(v as u8);
            }
        }
        Ok(CayleyTable { order, cells })
    }

    /// Builds the table of `op` on `0..order`.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|x| (0..order).map(|y| op(x, y)).collect())
            .collect();
        Self::from_rows(order, &rows)
    }

    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        CayleyTable { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y] as usize
    }

    pub(crate) fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// First triple in lexicographic order with `(xy)z != x(yz)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_band(&self) -> bool {
        (0..self.order).all(|x| self.mul(x, x) == x)
    }

    pub fn is_linear(&self) -> bool {
        (0..self.order).all(|x| {
            (0..self.order).all(|y| {
                let p = self.mul(x, y);
                p == x || p == y
            })
        })
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    pub fn is_left_zero(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == x))
    }

    pub fn is_right_zero(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == y))
    }

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Elements `a` with `a = a s a` for some `s`.
    pub fn regular_elements(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).any(|s| self.mul(self.mul(a, s), a) == a))
            .collect()
    }

    /// First element violating `x^(n+1) = x^(m+1) => x^n = x^m`.
    pub fn nm_clifford_witness(&self, n: usize, m: usize) -> Option<usize> {
        (0..self.order).find(|&x| {
            self.power(x, n + 1) == self.power(x, m + 1) && self.power(x, n) != self.power(x, m)
        })
    }

    pub fn is_nm_clifford(&self, n: usize, m: usize) -> bool {
        self.nm_clifford_witness(n, m).is_none()
    }

    /// The table of the same carrier with the opposite multiplication `x.y = y*x`.
    pub fn transpose(&self) -> CayleyTable {
        CayleyTable::from_fn(self.order, |x, y| self.mul(y, x)).expect("same shape")
    }

    /// Image `x * S` of a subset mask.
    pub fn left_image(&self, x: usize, set: u16) -> u16 {
        let mut out = 0u16;
        let mut rest = set;
        while rest != 0 {
            let y = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.mul(x, y);
        }
        out
    }
}

/// Checks associativity, reporting the first violating triple.
pub fn validate_semigroup(t: &CayleyTable) -> Result<()> {
    match t.associativity_witness() {
        None => Ok(()),
        Some((x, y, z)) => Err(Error::NotAssociative { x, y, z }),
    }
}

pub fn classify(t: &CayleyTable) -> StructureFlags {
    let commutative = t.is_commutative();
    let band = t.is_band();
    StructureFlags {
        commutative,
        band,
        linear: t.is_linear(),
        semilattice: commutative && band,
        left_zero: t.is_left_zero(),
        right_zero: t.is_right_zero(),
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable{:?}", self.rows())
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.cells.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
