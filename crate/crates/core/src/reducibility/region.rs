//! Sets of pattern vectors as disjoint boxes (one allowed-pattern mask per
//! triple), listed in lexicographic order.

use super::patterns::{allowed_mask, ALL_PATTERNS};

pub(crate) type PatternBox = Vec<u32>;

pub(crate) fn initial_box(t: usize, exhaustive_first: bool) -> PatternBox {
    (0..t).map(|i| allowed_mask(i, exhaustive_first)).collect()
}

pub(crate) fn box_size(bx: &[u32]) -> u128 {
    bx.iter().map(|m| m.count_ones() as u128).product()
}

pub(crate) fn contains(bx: &[u32], p: &[u8]) -> bool {
    bx.iter().zip(p).all(|(m, &x)| x < 32 && m >> x & 1 == 1)
}

pub(crate) fn point(p: &[u8]) -> PatternBox {
    p.iter().map(|&x| 1u32 << x).collect()
}

fn above(x: u8) -> u32 {
    ALL_PATTERNS & !((2u32 << x) - 1)
}

fn below(x: u8) -> u32 {
    (1u32 << x) - 1
}

/// Members of `bx` strictly after `w`.
pub(crate) fn after(bx: &[u32], w: &[u8]) -> Vec<PatternBox> {
    let mut out = Vec::new();
    for j in (0..w.len()).rev() {
        if !contains(&bx[..j], &w[..j]) {
            continue;
        }
        let mut b: PatternBox = point(&w[..j]);
        b.push(bx[j] & above(w[j]));
        b.extend_from_slice(&bx[j + 1..]);
        if b[j] != 0 {
            out.push(b);
        }
    }
    out
}

/// Members of `bx` at or after `w`.
pub(crate) fn at_or_after(bx: &[u32], w: &[u8]) -> Vec<PatternBox> {
    let mut out = Vec::new();
    if contains(bx, w) {
        out.push(point(w));
    }
    out.extend(after(bx, w));
    out
}

/// All pattern vectors at or before `w`.
pub(crate) fn at_most(w: &[u8]) -> Vec<PatternBox> {
    let t = w.len();
    let mut out = Vec::new();
    for j in 0..t {
        if w[j] == 0 {
            continue;
        }
        let mut b = point(&w[..j]);
        b.push(below(w[j]));
        b.extend(std::iter::repeat_n(ALL_PATTERNS, t - j - 1));
        out.push(b);
    }
    out.push(point(w));
    out
}

pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Option<PatternBox> {
    let out: PatternBox = a.iter().zip(b).map(|(x, y)| x & y).collect();
    out.iter().all(|&m| m != 0).then_some(out)
}
