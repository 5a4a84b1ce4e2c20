//! Catalog of the recurring example carriers.

use std::fmt;
use std::str::FromStr;

use crate::cayley::{CayleyTable, MAX_ORDER};
use crate::error::{input, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedCarrier {
    /// `{0,..,n-1}` with `xy = min(x, y)`.
    Chain(usize),
    LeftZero(usize),
    RightZero(usize),
    /// Three-element semilattice `0 < 1, 0 < 2` with `1*2 = 0`.
    Vee,
    /// A root with disjoint chains of the given lengths hanging above it.
    Bush(Vec<usize>),
    Custom(CayleyTable),
}

impl NamedCarrier {
    pub fn order(&self) -> usize {
        match self {
            NamedCarrier::Chain(n) | NamedCarrier::LeftZero(n) | NamedCarrier::RightZero(n) => *n,
            NamedCarrier::Vee => 3,
            NamedCarrier::Bush(b) => 1 + b.iter().sum::<usize>(),
            NamedCarrier::Custom(t) => t.order(),
        }
    }

    pub fn table(&self) -> Result<CayleyTable> {
        let n = self.order();
        if n == 0 || n > MAX_ORDER {
            return Err(input(format!(
                "carrier order {n} outside 1..={MAX_ORDER}"
            )));
        }
        match self {
            NamedCarrier::Chain(n) => CayleyTable::from_fn(*n, usize::min),
            NamedCarrier::LeftZero(n) => CayleyTable::from_fn(*n, |x, _| x),
            NamedCarrier::RightZero(n) => CayleyTable::from_fn(*n, |_, y| y),
            NamedCarrier::Vee => CayleyTable::from_fn(3, |x, y| if x == y { x } else { 0 }),
            NamedCarrier::Bush(branches) => {
                // element -> (branch, height); the root is (usize::MAX, 0)
                let mut place = vec![(usize::MAX, 0usize)];
                for (b, &len) in branches.iter().enumerate() {
                    place.extend((1..=len).map(|h| (b, h)));
                }
                CayleyTable::from_fn(place.len(), |x, y| {
                    let (bx, hx) = place[x];
                    let (by, hy) = place[y];
                    if x == 0 || y == 0 || bx != by {
                        0
                    } else if hx <= hy {
                        x
                    } else {
                        y
                    }
                })
            }
            NamedCarrier::Custom(t) => Ok(t.clone()),
        }
    }

    /// Names accepted by [`FromStr`], for listings.
    pub fn catalog() -> &'static [(&'static str, &'static str)] {
        &[
            ("chain:n", "n-element chain, xy = min(x, y)"),
            ("leftzero:n", "n-element left-zero semigroup, xy = x"),
            ("rightzero:n", "n-element right-zero semigroup, xy = y"),
            ("vee", "3-element semilattice 0 < 1, 0 < 2"),
            ("bush:b1,..,bk", "root with k disjoint chains of lengths b1..bk"),
        ]
    }
}

impl FromStr for NamedCarrier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let size = |arg: Option<&str>| -> Result<usize> {
            let arg = arg.ok_or_else(|| input(format!("carrier `{name}` needs a size")))?;
            let n: usize = arg
                .trim()
                .parse()
                .map_err(|_| input(format!("bad carrier size `{arg}`")))?;
            if n == 0 || n > MAX_ORDER {
                return Err(input(format!("carrier size {n} outside 1..={MAX_ORDER}")));
            }
            Ok(n)
        };
        let carrier = match name {
            "chain" => NamedCarrier::Chain(size(arg)?),
            "leftzero" => NamedCarrier::LeftZero(size(arg)?),
            "rightzero" => NamedCarrier::RightZero(size(arg)?),
            "vee" if arg.is_none() => NamedCarrier::Vee,
            "bush" => {
                let arg = arg.ok_or_else(|| input("bush needs branch lengths"))?;
                let branches = arg
                    .split(',')
                    .map(|b| {
                        b.trim()
                            .parse::<usize>()
                            .ok()
                            .filter(|&len| len > 0)
                            .ok_or_else(|| input(format!("bad branch length `{b}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let c = NamedCarrier::Bush(branches);
                if c.order() > MAX_ORDER {
                    return Err(input(format!("bush has {} > {MAX_ORDER} elements", c.order())));
                }
                c
            }
            _ => {
                return Err(Error::Unknown {
                    kind: "carrier",
                    value: s.to_string(),
                })
            }
        };
        Ok(carrier)
    }
}

impl fmt::Display for NamedCarrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedCarrier::Chain(n) => write!(f, "chain:{n}"),
            NamedCarrier::LeftZero(n) => write!(f, "leftzero:{n}"),
            NamedCarrier::RightZero(n) => write!(f, "rightzero:{n}"),
            NamedCarrier::Vee => write!(f, "vee"),
            NamedCarrier::Bush(b) => {
                let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                write!(f, "bush:{}", parts.join(","))
            }
            NamedCarrier::Custom(t) => write!(f, "custom{:?}", t.rows()),
        }
    }
}

/// Shorthand used throughout the tests and the harness.
pub fn named(s: &str) -> Result<CayleyTable> {
    s.parse::<NamedCarrier>()?.table()
}
