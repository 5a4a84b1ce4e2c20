//! Order-theoretic structure of finite semilattices: `x <= y` iff `xy = x`.

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};

/// The partial order of a semilattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    order: usize,
    leq: Vec<bool>,
    /// Global minimum, when one exists.
    pub min: Option<usize>,
    /// `up[x] = {y : xy = x}` as a bit mask.
    pub up: Vec<u16>,
    /// `down[x] = {y : xy = y}` as a bit mask.
    pub down: Vec<u16>,
}

impl Poset {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.order + y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.order;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y || !self.leq(x, y) {
                    continue;
                }
                let between = (0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn max(&self) -> Option<usize> {
        (0..self.order).find(|&m| (0..self.order).all(|x| self.leq(x, m)))
    }

    fn is_chain(&self, mask: u16) -> bool {
        let elems = bits(mask);
        elems
            .iter()
            .enumerate()
            .all(|(i, &x)| elems[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }
}

pub(crate) fn bits(mask: u16) -> Vec<usize> {
    (0..16).filter(|i| mask >> i & 1 == 1).collect()
}

fn require_semilattice(t: &CayleyTable) -> Result<()> {
    if t.is_semilattice() && t.is_associative() {
        Ok(())
    } else {
        Err(Error::NotSemilattice)
    }
}

pub fn order_structure(t: &CayleyTable) -> Result<Poset> {
    require_semilattice(t)?;
    let n = t.order();
    let leq: Vec<bool> = (0..n * n).map(|i| t.mul(i / n, i % n) == i / n).collect();
    let min = (0..n).find(|&m| (0..n).all(|x| t.mul(m, x) == m));
    let up = (0..n)
        .map(|x| (0..n).filter(|&y| t.mul(x, y) == x).fold(0u16, |m, y| m | 1 << y))
        .collect();
    let down = (0..n)
        .map(|x| (0..n).filter(|&y| t.mul(x, y) == y).fold(0u16, |m, y| m | 1 << y))
        .collect();
    Ok(Poset {
        order: n,
        leq,
        min,
        up,
        down,
    })
}

/// All inclusion-maximal linearly ordered subsets, as ascending bit masks.
pub fn maximal_chains(t: &CayleyTable) -> Result<Vec<u16>> {
    let poset = order_structure(t)?;
    let chains: Vec<u16> = (1u32..1 << t.order())
        .map(|m| m as u16)
        .filter(|&m| poset.is_chain(m))
        .collect();
    Ok(chains
        .iter()
        .copied()
        .filter(|&c| !chains.iter().any(|&d| d != c && d & c == c))
        .collect())
}

/// Bush test straight from the definition: distinct maximal chains multiply to `{min}`.
pub fn is_bush_by_chains(t: &CayleyTable) -> Result<bool> {
    let poset = order_structure(t)?;
    let Some(min) = poset.min else {
        return Ok(false);
    };
    let chains = maximal_chains(t)?;
    for (i, &a) in chains.iter().enumerate() {
        for &b in &chains[i + 1..] {
            let mut product = 0u16;
            for x in bits(a) {
                for y in bits(b) {
                    product |= 1 << t.mul(x, y);
                }
            }
            if product != 1 << min {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pointwise bush test: `X` is a tree and `xy ∈ {x, y, min}` for all `x, y`.
/// Returns a violating pair; for a non-tree, two incomparable points below a
/// common upper bound.
pub fn bush_witness(t: &CayleyTable) -> Result<Option<(usize, usize)>> {
    let poset = order_structure(t)?;
    let n = t.order();
    let Some(min) = poset.min else {
        return Ok(Some((0, 0)));
    };
    for x in 0..n {
        for y in x + 1..n {
            let p = t.mul(x, y);
            if p != x && p != y && p != min {
                return Ok(Some((x, y)));
            }
        }
    }
    for z in 0..n {
        let down = bits(poset.down[z]);
        for (i, &x) in down.iter().enumerate() {
            if let Some(&y) = down[i + 1..].iter().find(|&&y| !poset.comparable(x, y)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn is_bush(t: &CayleyTable) -> Result<bool> {
    Ok(bush_witness(t)?.is_none())
}

/// Every down-set `{x : xz = x}` is a chain.
pub fn is_tree(t: &CayleyTable) -> Result<bool> {
    let poset = order_structure(t)?;
    Ok((0..t.order()).all(|z| poset.is_chain(poset.down[z])))
}

/// A maximum-size subset in which `ab ∉ {a, b}` for all distinct `a, b`.
pub fn max_antichain(t: &CayleyTable) -> Vec<usize> {
    let n = t.order();
    let ok = |a: usize, b: usize| {
        let ab = t.mul(a, b);
        let ba = t.mul(b, a);
        ab != a && ab != b && ba != a && ba != b
    };
    let mut best: u16 = 1;
    for mask in 1u16..(1u16 << n) {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        let elems = bits(mask);
        let is_antichain = elems
            .iter()
            .enumerate()
            .all(|(i, &a)| elems[i + 1..].iter().all(|&b| ok(a, b)));
        if is_antichain {
            best = mask;
        }
    }
    bits(best)
}

/// The join table of a finite semilattice with a top element, i.e. a lattice.
pub fn join_table(meet: &CayleyTable) -> Result<CayleyTable> {
    let poset = order_structure(meet)?;
    let n = meet.order();
    if poset.max().is_none() {
        return Err(Error::NotLattice("no greatest element".into()));
    }
    let mut rows = vec![vec![0usize; n]; n];
    for (x, row) in rows.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            let uppers: Vec<usize> = (0..n)
                .filter(|&u| poset.leq(x, u) && poset.leq(y, u))
                .collect();
            let lub = uppers
                .iter()
                .copied()
                .find(|&u| uppers.iter().all(|&v| poset.leq(u, v)))
                .ok_or_else(|| Error::NotLattice(format!("{x} and {y} have no join")))?;
            *cell = lub;
        }
    }
    CayleyTable::from_rows(n, &rows)
}

/// Both operations are semilattices and the absorption laws hold.
pub fn check_lattice(meet: &CayleyTable, join: &CayleyTable) -> Result<()> {
    if meet.order() != join.order() {
        return Err(Error::WidthMismatch {
            left: meet.order(),
            right: join.order(),
        });
    }
    for (name, t) in [("meet", meet), ("join", join)] {
        if !(t.is_semilattice() && t.is_associative()) {
            return Err(Error::NotLattice(format!("{name} is not a semilattice")));
        }
    }
    let n = meet.order();
    for x in 0..n {
        for y in 0..n {
            if join.mul(meet.mul(x, y), y) != y || meet.mul(join.mul(x, y), y) != y {
                return Err(Error::NotLattice(format!("absorption fails at ({x},{y})")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carriers::named;

    /// 0 < 1, 1 < 2, 1 < 3
    fn fork() -> CayleyTable {
        CayleyTable::from_rows(
            4,
            &[vec![0, 0, 0, 0], vec![0, 1, 1, 1], vec![0, 1, 2, 1], vec![0, 1, 1, 3]],
        )
        .unwrap()
    }

    /// 0 < 1, 2 < 3
    fn diamond() -> CayleyTable {
        CayleyTable::from_rows(
            4,
            &[vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn chain_order() {
        let p = order_structure(&named("chain:3").unwrap()).unwrap();
        assert!(p.leq(0, 1) && p.leq(1, 2) && p.leq(0, 2));
        assert!(!p.leq(2, 1));
        assert_eq!(p.min, Some(0));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn vee_order() {
        let p = order_structure(&named("vee").unwrap()).unwrap();
        assert!(p.leq(0, 1) && p.leq(0, 2));
        assert!(!p.comparable(1, 2));
        assert_eq!(p.min, Some(0));
        assert_eq!(p.up[0], 0b111);
        assert_eq!(p.down[1], 0b011);
    }

    #[test]
    fn bush_order() {
        let p = order_structure(&named("bush:2,1").unwrap()).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn order_refuses_non_semilattices() {
        assert_eq!(
            order_structure(&named("leftzero:3").unwrap()),
            Err(Error::NotSemilattice)
        );
        assert!(maximal_chains(&named("rightzero:2").unwrap()).is_err());
        assert!(is_bush(&named("leftzero:2").unwrap()).is_err());
        assert!(is_tree(&named("leftzero:2").unwrap()).is_err());
    }

    #[test]
    fn chains_of_examples() {
        assert_eq!(maximal_chains(&named("chain:4").unwrap()).unwrap(), vec![0b1111]);
        assert_eq!(maximal_chains(&named("vee").unwrap()).unwrap(), vec![0b011, 0b101]);
        assert_eq!(maximal_chains(&fork()).unwrap(), vec![0b0111, 0b1011]);
        assert_eq!(maximal_chains(&named("chain:8").unwrap()).unwrap(), vec![0xff]);
    }

    #[test]
    fn bush_examples() {
        for s in ["chain:1", "chain:4", "vee", "bush:2,1,1"] {
            let t = named(s).unwrap();
            assert!(is_bush(&t).unwrap(), "{s}");
            assert!(is_bush_by_chains(&t).unwrap(), "{s}");
        }
        assert_eq!(bush_witness(&fork()).unwrap(), Some((2, 3)));
        assert!(!is_bush_by_chains(&fork()).unwrap());
    }

    #[test]
    fn diamond_meets_are_pointwise_fine_but_it_is_no_bush() {
        let d = diamond();
        let min = 0;
        assert!((0..4).all(|x| (0..4).all(|y| [x, y, min].contains(&d.mul(x, y)))));
        assert!(!is_bush_by_chains(&d).unwrap());
        assert!(!is_bush(&d).unwrap());
    }

    #[test]
    fn tree_examples() {
        assert!(is_tree(&named("vee").unwrap()).unwrap());
        assert!(is_tree(&named("bush:2,2").unwrap()).unwrap());
        assert!(is_tree(&fork()).unwrap());
        assert!(!is_tree(&diamond()).unwrap());
    }

    #[test]
    fn antichain_examples() {
        assert_eq!(max_antichain(&named("chain:5").unwrap()).len(), 1);
        assert_eq!(max_antichain(&named("vee").unwrap()), vec![1, 2]);
        assert_eq!(max_antichain(&named("bush:1,1,1").unwrap()), vec![1, 2, 3]);
    }

    #[test]
    fn joins() {
        let j = join_table(&named("chain:3").unwrap()).unwrap();
        assert_eq!(j, CayleyTable::from_fn(3, usize::max).unwrap());
        assert!(check_lattice(&diamond(), &join_table(&diamond()).unwrap()).is_ok());
        assert!(matches!(join_table(&named("vee").unwrap()), Err(Error::NotLattice(_))));
    }
}
