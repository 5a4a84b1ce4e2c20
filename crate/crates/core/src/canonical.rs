//! Canonical forms of Cayley tables under relabeling of the carrier.
//!
//! The canonical form is the lexicographically least row-major table over all
//! `n!` simultaneous relabelings. Brute force, which is fine for `n <= 8`.

use crate::cayley::CayleyTable;

/// Calls `visit` with every permutation of `0..n` (as `perm[old] = new`).
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    // Heap's algorithm
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Relabels `t` by `perm[old] = new`.
pub fn relabel(t: &CayleyTable, perm: &[u8]) -> CayleyTable {
    let n = t.order();
    let mut cells = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            cells[perm[x] as usize * n + perm[y] as usize] = perm[t.mul(x, y)];
        }
    }
    CayleyTable::from_cells_unchecked(n, cells)
}

pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    let src = t.cells();
    let mut best: Vec<u8> = src.to_vec();
    let mut inverse = vec![0usize; n];
    for_each_permutation(n, |perm| {
        for (old, &new) in perm.iter().enumerate() {
            inverse[new as usize] = old;
        }
        // Compare cell by cell in row-major order, stopping at the first difference.
        let mut less = false;
        'cmp: for i in 0..n {
            let row = inverse[i] * n;
            for j in 0..n {
                let v = perm[src[row + inverse[j]] as usize];
                let b = best[i * n + j];
                if v != b {
                    less = v < b;
                    break 'cmp;
                }
            }
        }
        if less {
            for i in 0..n {
                for j in 0..n {
                    best[i * n + j] = perm[src[inverse[i] * n + inverse[j]] as usize];
                }
            }
        }
    });
    CayleyTable::from_cells_unchecked(n, best)
}

pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}
