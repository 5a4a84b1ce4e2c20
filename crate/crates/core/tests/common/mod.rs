//! Brute-force oracles, written from the definitions and sharing no code
//! with the library beyond the data types.
#![allow(dead_code)]

use std::collections::BTreeSet;

use upfam::{canonical_form, CayleyTable, UpFamily, UpSetBits};

pub fn full(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

pub fn mul(t: &CayleyTable, x: usize, y: usize) -> usize {
    t.rows()[x][y]
}

/// Every member of `f` as a bitmask.
pub fn members(f: &UpFamily) -> Vec<u16> {
    let n = f.order();
    (1..=full(n))
        .filter(|&s| f.minimal().iter().any(|m| m.bits() & !s == 0))
        .collect()
}

/// Upward closure of a set of generators, as a membership vector.
pub fn closure(n: usize, gens: &BTreeSet<u16>) -> Vec<bool> {
    (0..=full(n) as usize)
        .map(|s| s != 0 && gens.iter().any(|&g| g as usize & !s == 0))
        .collect()
}

pub fn membership(f: &UpFamily) -> Vec<bool> {
    let n = f.order();
    let m: BTreeSet<u16> = members(f).into_iter().collect();
    (0..=full(n) as usize).map(|s| m.contains(&(s as u16))).collect()
}

/// `⟨⋃_{x∈U} x*V_x : U ∈ A, V_x ∈ B⟩` ranging over all members, not just
/// minimal ones.
pub fn literal_product(a: &UpFamily, b: &UpFamily, t: &CayleyTable) -> Vec<bool> {
    let n = t.order();
    let rows = t.rows();
    let bm = members(b);
    let image = |x: usize, v: u16| -> u16 {
        (0..n).filter(|&y| v >> y & 1 == 1).fold(0, |m, y| m | 1 << rows[x][y])
    };
    let mut gens = BTreeSet::new();
    for u in members(a) {
        let xs: Vec<usize> = (0..n).filter(|&x| u >> x & 1 == 1).collect();
        // odometer over choices (V_x) for x in U
        let mut choice = vec![0usize; xs.len()];
        loop {
            let set = xs
                .iter()
                .zip(&choice)
                .fold(0u16, |acc, (&x, &c)| acc | image(x, bm[c]));
            gens.insert(set);
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < bm.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    closure(n, &gens)
}

/// All nonempty upward-closed families of nonempty subsets of `0..n`, found
/// by scanning every family of nonempty subsets.
pub fn brute_upfamilies(n: usize) -> Vec<Vec<bool>> {
    assert!(n <= 4);
    let sets: Vec<u16> = (1..=full(n)).collect();
    let mut out = Vec::new();
    for choice in 1u32..(1u32 << sets.len()) {
        let has = |s: u16| choice >> (s - 1) & 1 == 1;
        let closed = sets
            .iter()
            .all(|&a| !has(a) || sets.iter().all(|&b| a & !b != 0 || has(b)));
        if closed {
            out.push((0..=full(n)).map(|s| s != 0 && has(s)).collect());
        }
    }
    out
}

/// Members pairwise intersect.
pub fn linked(m: &[bool]) -> bool {
    let sets: Vec<usize> = (1..m.len()).filter(|&s| m[s]).collect();
    sets.iter().all(|&a| sets.iter().all(|&b| a & b != 0))
}

/// Linked families not strictly contained in another linked family of the list.
pub fn maximal_linked(all: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let links: Vec<&Vec<bool>> = all.iter().filter(|m| linked(m)).collect();
    let below = |a: &Vec<bool>, b: &Vec<bool>| a != b && a.iter().zip(b).all(|(x, y)| !x || *y);
    links
        .iter()
        .filter(|a| !links.iter().any(|b| below(a, b)))
        .map(|a| (*a).clone())
        .collect()
}

pub fn bits_membership(n: usize, b: &UpSetBits) -> Vec<bool> {
    (0..=full(n)).map(|s| s != 0 && b.contains(s)).collect()
}

/// Canonical forms of all associative tables of order `n` satisfying `keep`.
pub fn brute_semigroups(n: usize, keep: impl Fn(&CayleyTable) -> bool) -> BTreeSet<CayleyTable> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = BTreeSet::new();
    for code in 0..total {
        let mut c = code;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = c % n;
                        c /= n;
                        v
                    })
                    .collect()
            })
            .collect();
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| rows[rows[x][y]][z] == rows[x][rows[y][z]]))
        });
        if !assoc {
            continue;
        }
        let t = CayleyTable::from_rows(n, &rows).unwrap();
        if keep(&t) {
            out.insert(canonical_form(&t));
        }
    }
    out
}

/// Meet semilattices on `0..n`, built from naturally labeled posets
/// (`i < j` only when `i < j` as integers) in which every pair has a meet.
pub fn poset_semilattices(n: usize) -> BTreeSet<CayleyTable> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    for code in 0u64..(1u64 << pairs.len()) {
        let mut le = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            le[i][j] = code >> k & 1 == 1;
        }
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !le[a][b] || (0..n).all(|c| !le[b][c] || le[a][c]))
        });
        if !transitive {
            continue;
        }
        let meet = |x: usize, y: usize| -> Option<usize> {
            let lower: Vec<usize> = (0..n).filter(|&z| le[z][x] && le[z][y]).collect();
            lower.iter().copied().find(|&m| lower.iter().all(|&z| le[z][m]))
        };
        let mut rows = vec![vec![0; n]; n];
        let mut ok = true;
        'outer: for (x, row) in rows.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                match meet(x, y) {
                    Some(m) => *cell = m,
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            out.insert(canonical_form(&CayleyTable::from_rows(n, &rows).unwrap()));
        }
    }
    out
}
