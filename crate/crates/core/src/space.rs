//! The spaces β ⊂ φ ⊂ N₂ ⊂ υ and β ⊂ λ ⊂ N₂ of upfamilies on `0..n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::caps::{check, Caps};
use crate::cayley::MAX_ORDER;
use crate::error::{Error, Result};
use crate::family::{full_mask, SubsetMask, UpFamily, UpSetBits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    /// All upfamilies.
    Upsilon,
    /// Filters.
    Phi,
    /// Ultrafilters.
    Beta,
    /// Linked upfamilies.
    N2,
    /// Maximal linked upfamilies.
    Lambda,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 5] = [
        SpaceKind::Upsilon,
        SpaceKind::Phi,
        SpaceKind::Beta,
        SpaceKind::N2,
        SpaceKind::Lambda,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Upsilon => "upsilon",
            SpaceKind::Phi => "phi",
            SpaceKind::Beta => "beta",
            SpaceKind::N2 => "n2",
            SpaceKind::Lambda => "lambda",
        }
    }

    pub fn cap(self, caps: &Caps) -> usize {
        match self {
            SpaceKind::Upsilon => caps.upsilon,
            SpaceKind::Phi => caps.phi,
            SpaceKind::Beta => caps.beta,
            SpaceKind::N2 => caps.n2,
            SpaceKind::Lambda => caps.lambda,
        }
    }

    /// Membership predicate straight from the definitions.
    pub fn contains(self, f: &UpFamily) -> bool {
        match self {
            SpaceKind::Upsilon => true,
            SpaceKind::Phi => f.minimal().len() == 1,
            SpaceKind::Beta => f.is_ultrafilter(),
            SpaceKind::N2 => f.is_linked(),
            SpaceKind::Lambda => f.is_self_dual(),
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "upsilon" | "υ" => SpaceKind::Upsilon,
            "phi" | "φ" => SpaceKind::Phi,
            "beta" | "β" => SpaceKind::Beta,
            "n2" | "N₂" => SpaceKind::N2,
            "lambda" | "λ" => SpaceKind::Lambda,
            _ => {
                return Err(Error::Unknown {
                    kind: "space",
                    value: s.to_string(),
                })
            }
        })
    }
}

/// All monotone Boolean functions on `n` variables as `2^n`-bit truth tables,
/// including the two constants. Built as pairs `f0 <= f1` of functions on
/// `n - 1` variables, `f1` covering the sets that contain element `n - 1`.
pub(crate) fn monotone_tables(n: usize) -> Vec<u64> {
    assert!(n <= 6, "truth tables are limited to 64 bits");
    let mut funcs: Vec<u64> = vec![0, 1];
    for k in 0..n {
        let half = 1u32 << k;
        let mut next = Vec::new();
        for &low in &funcs {
            for &high in &funcs {
                if low & !high == 0 {
                    next.push(low | high << half);
                }
            }
        }
        funcs = next;
    }
    funcs
}

fn bits_from_table(table: u64) -> UpSetBits {
    let mut b = UpSetBits::default();
    for s in 0..64u16 {
        if table >> s & 1 == 1 {
            b.insert(s);
        }
    }
    b
}

/// Self-dual monotone families on `0..n`. Each is determined by its
/// restriction `h` to subsets avoiding `n - 1`, which must satisfy
/// `h <= dual(h)`; the sets containing `n - 1` are then given by duality.
fn lambda_bits(n: usize) -> Vec<UpSetBits> {
    let m = n - 1;
    let full = full_mask(m);
    let mut out = Vec::new();
    for h in monotone_tables(m) {
        let member = |s: u16| h >> s & 1 == 1;
        let dual = |s: u16| !member(full & !s);
        if (0..=full).any(|s| member(s) && !dual(s)) {
            continue;
        }
        let mut b = UpSetBits::default();
        for s in 0..=full {
            if member(s) {
                b.insert(s);
            }
            if dual(s) {
                b.insert(s | 1 << m);
            }
        }
        out.push(b);
    }
    out
}

/// Every member of the space on `0..n`, each once, in ascending family order.
pub fn enumerate_space(kind: SpaceKind, n: usize, caps: &Caps) -> Result<Vec<UpFamily>> {
    if n == 0 {
        return Err(Error::Input("carrier must be nonempty".into()));
    }
    check(&format!("{kind} enumeration"), n, kind.cap(caps))?;
    check(&format!("{kind} enumeration"), n, MAX_ORDER)?;
    let mut out: Vec<UpFamily> = match kind {
        SpaceKind::Beta => (0..n)
            .map(|x| UpFamily::point(n, x))
            .collect::<Result<_>>()?,
        SpaceKind::Phi => (1..=full_mask(n))
            .map(|b| UpFamily::up_closure(n, &[SubsetMask::new(n, b)?]))
            .collect::<Result<_>>()?,
        SpaceKind::Upsilon | SpaceKind::N2 => {
            check(&format!("{kind} enumeration"), n, 6)?;
            let empty = 0u64;
            let everything = if n == 6 { u64::MAX } else { (1u64 << (1 << n)) - 1 };
            monotone_tables(n)
                .into_iter()
                .filter(|&t| t != empty && t != everything)
                .map(|t| UpFamily::from_bits(n, &bits_from_table(t)))
                .filter(|f| kind == SpaceKind::Upsilon || f.is_linked())
                .collect()
        }
        SpaceKind::Lambda => {
            check("lambda enumeration", n, 7)?;
            lambda_bits(n)
                .iter()
                .map(|b| UpFamily::from_bits(n, b))
                .collect()
        }
    };
    out.sort();
    Ok(out)
}

/// Named elements of λ(4) over the chain `0 < 1 < 2 < 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lambda4Name {
    /// `⟨k⟩`, the point family.
    Point(usize),
    /// `Δ_k`: generated by the 2-sets avoiding `k`.
    Delta(usize),
    /// `□_k`: generated by `4 \ {k}` and the 2-sets containing `k`.
    Square(usize),
}

impl fmt::Display for Lambda4Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda4Name::Point(k) => write!(f, "⟨{k}⟩"),
            Lambda4Name::Delta(k) => write!(f, "Δ_{k}"),
            Lambda4Name::Square(k) => write!(f, "□_{k}"),
        }
    }
}

impl Lambda4Name {
    pub fn family(self) -> UpFamily {
        let pairs = |keep: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<usize>> {
            let mut v = Vec::new();
            for a in 0..4 {
                for b in a + 1..4 {
                    if keep(a, b) {
                        v.push(vec![a, b]);
                    }
                }
            }
            v
        };
        let lists = match self {
            Lambda4Name::Point(k) => vec![vec![k]],
            Lambda4Name::Delta(k) => pairs(&|a, b| a != k && b != k),
            Lambda4Name::Square(k) => {
                let mut v = pairs(&|a, b| a == k || b == k);
                v.push((0..4).filter(|&i| i != k).collect());
                v
            }
        };
        UpFamily::from_index_lists(4, &lists).expect("valid on 4 points")
    }
}

/// The twelve values `⟨k⟩`, `Δ_k`, `□_k` for `k ∈ 4`.
pub fn named_lambda4_elements() -> Vec<(Lambda4Name, UpFamily)> {
    (0..4)
        .map(Lambda4Name::Point)
        .chain((0..4).map(Lambda4Name::Delta))
        .chain((0..4).map(Lambda4Name::Square))
        .map(|name| (name, name.family()))
        .collect()
}

/// The catalog name of a family on 4 points, when it has one.
pub fn lambda4_name(f: &UpFamily) -> Option<Lambda4Name> {
    if f.order() != 4 {
        return None;
    }
    named_lambda4_elements()
        .into_iter()
        .find(|(_, g)| g == f)
        .map(|(name, _)| name)
}
