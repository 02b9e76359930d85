//! Exact decision procedure by variable elimination over a path ordering of
//! the constraint graph.
//!
//! Variables are the triple patterns and the interior vertex colors. A state
//! records the patterns of the live triples together with the set of colorings
//! of the live interior vertices that are still completable given everything
//! eliminated so far. A precoloring fails exactly when some sequence of
//! pattern choices drives that set to empty, so a failure exists iff a final
//! state with an empty set is reachable.
//!
//! Two reductions keep the state space small: within equal pattern vectors
//! only inclusion-minimal sets matter, and states are replaced by a canonical
//! image under the color permutations that leave all tables invariant.

use super::patterns::{radius, ALL_PATTERNS, COLORS, PATTERNS, PATTERN_COUNT};
use super::tables::Tables;
use crate::error::{Error, Result};
use crate::par;

const BITS: u32 = 3;
const MAX_LIVE_INTERIOR: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Triple(usize),
    Interior(usize),
}

struct Step {
    var: Var,
    /// Triple step: (slot, triple) of live triples that can clash with it.
    /// Interior step: (slot, triple) of live triples that restrict it.
    x_checks: Vec<(usize, usize)>,
    /// Triple step: (slot, interior) of live interior vertices it restricts.
    /// Interior step: (slot, distance) of live interior vertices within 2.
    i_checks: Vec<(usize, usize)>,
    /// Slots surviving after this step (indices into the live lists including
    /// the new variable).
    x_keep: Vec<usize>,
    i_keep: Vec<usize>,
    i_live_before: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct State {
    patterns: Box<[u8]>,
    colorings: Vec<u64>,
}

/// A permutation of the 2-colors and the induced map on pattern indices.
#[derive(Clone, Debug)]
struct ColorPerm {
    color: [u8; 8],
    pattern: [u8; PATTERN_COUNT],
}

impl ColorPerm {
    fn map_mask(&self, m: u32) -> u32 {
        (0..PATTERN_COUNT).filter(|&p| m >> p & 1 == 1).fold(0, |acc, p| acc | 1 << self.pattern[p])
    }
}

pub(crate) struct Budget {
    pub max_states: usize,
    pub max_tuples: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 2_000_000, max_tuples: 60_000_000 }
    }
}

pub(crate) struct Frontier<'a> {
    tables: &'a Tables,
    steps: Vec<Step>,
    full_group: Vec<ColorPerm>,
    budget: Budget,
}

impl<'a> Frontier<'a> {
    pub fn new(tables: &'a Tables, budget: Budget) -> Result<Self> {
        let order = elimination_order(tables);
        let steps = plan(tables, &order)?;
        let full_group = symmetry_group(tables, &vec![ALL_PATTERNS; tables.t]);
        Ok(Frontier { tables, steps, full_group, budget })
    }

    pub fn group_order(&self) -> usize {
        self.full_group.len()
    }

    /// Whether some consistent member of `bx` fails to extend. With
    /// `try_closure`, first checks the symmetric hull of `bx`, which is
    /// cheaper and settles the question when it has no failure either.
    pub fn has_failure(&self, bx: &[u32], try_closure: bool) -> Result<bool> {
        let group = self.group_for(bx);
        if try_closure && group.len() < self.full_group.len() {
            let hull: Vec<u32> = bx
                .iter()
                .map(|&m| self.full_group.iter().fold(0, |acc, g| acc | g.map_mask(m)))
                .collect();
            if !self.run(&hull, &self.full_group)? {
                return Ok(false);
            }
        }
        self.run(bx, &group)
    }

    /// Lexicographically first failing member of `bx`, by fixing one
    /// position at a time.
    pub fn first_failure(&self, bx: &[u32]) -> Result<Option<Vec<u8>>> {
        if !self.has_failure(bx, true)? {
            return Ok(None);
        }
        let mut cur = bx.to_vec();
        for j in 0..cur.len() {
            let mask = cur[j];
            let mut fixed = false;
            for p in 0..PATTERN_COUNT {
                if mask >> p & 1 == 0 {
                    continue;
                }
                cur[j] = 1 << p;
                if self.has_failure(&cur, false)? {
                    fixed = true;
                    break;
                }
            }
            assert!(fixed, "a failing box has a failing sub-box");
        }
        Ok(Some(cur.iter().map(|m| m.trailing_zeros() as u8).collect()))
    }

    fn group_for(&self, bx: &[u32]) -> Vec<ColorPerm> {
        self.full_group
            .iter()
            .filter(|g| bx.iter().all(|&m| g.map_mask(m) == m))
            .cloned()
            .collect()
    }

    fn run(&self, bx: &[u32], group: &[ColorPerm]) -> Result<bool> {
        let mut states = vec![State { patterns: Box::new([]), colorings: vec![0] }];
        for step in &self.steps {
            let mut next = par::flat_map(&states, |s| self.advance(step, s, bx));
            if group.len() > 1 {
                next = par::map(&next, |s| canonical(s, group, step.i_keep.len()));
            }
            par::sort_dedup(&mut next);
            states = prune_dominated(next);
            if states.is_empty() {
                return Ok(false);
            }
            let tuples: usize = states.iter().map(|s| s.colorings.len()).sum();
            if states.len() > self.budget.max_states || tuples > self.budget.max_tuples {
                return Err(Error::Budget(format!("{} states holding {tuples} partial colorings", states.len())));
            }
        }
        Ok(states.iter().any(|s| s.colorings.is_empty()))
    }

    fn advance(&self, step: &Step, s: &State, bx: &[u32]) -> Vec<State> {
        let t = self.tables;
        match step.var {
            Var::Triple(a) => {
                let mut out = Vec::new();
                for p in 0..PATTERN_COUNT {
                    if bx[a] >> p & 1 == 0 {
                        continue;
                    }
                    if step.x_checks.iter().any(|&(slot, b)| t.incompat[b][a][s.patterns[slot] as usize] >> p & 1 == 1) {
                        continue;
                    }
                    let kept: Vec<u64> = s
                        .colorings
                        .iter()
                        .copied()
                        .filter(|&tup| {
                            step.i_checks.iter().all(|&(slot, i)| t.compat[a][i][color_at(tup, slot) as usize] >> p & 1 == 1)
                        })
                        .collect();
                    let mut patterns = s.patterns.to_vec();
                    patterns.push(p as u8);
                    out.push(project(step, &patterns, kept));
                }
                out
            }
            Var::Interior(i) => {
                let slot_new = step.i_live_before;
                let mut grown = Vec::with_capacity(s.colorings.len() * 2);
                for &tup in &s.colorings {
                    for c in 1..=COLORS {
                        if step.i_checks.iter().any(|&(slot, d)| color_at(tup, slot) == c && d as u32 <= radius(c)) {
                            continue;
                        }
                        if step.x_checks.iter().any(|&(slot, a)| t.compat[a][i][c as usize] >> s.patterns[slot] & 1 == 0) {
                            continue;
                        }
                        grown.push(tup | (c as u64) << (BITS as usize * slot_new));
                    }
                }
                vec![project(step, &s.patterns, grown)]
            }
        }
    }
}

#[inline]
fn color_at(tup: u64, slot: usize) -> u8 {
    (tup >> (BITS as usize * slot) & 7) as u8
}

fn project(step: &Step, patterns: &[u8], mut colorings: Vec<u64>) -> State {
    let patterns: Box<[u8]> = step.x_keep.iter().map(|&j| patterns[j]).collect();
    let identity = step.i_keep.iter().enumerate().all(|(k, &j)| k == j);
    if !identity {
        for tup in colorings.iter_mut() {
            let mut o = 0u64;
            for (k, &j) in step.i_keep.iter().enumerate() {
                o |= (color_at(*tup, j) as u64) << (BITS as usize * k);
            }
            *tup = o;
        }
    }
    colorings.sort_unstable();
    colorings.dedup();
    State { patterns, colorings }
}

fn canonical(s: &State, group: &[ColorPerm], live_i: usize) -> State {
    let mut best_patterns: Option<Box<[u8]>> = None;
    let mut candidates: Vec<&ColorPerm> = Vec::new();
    for g in group {
        let img: Box<[u8]> = s.patterns.iter().map(|&p| g.pattern[p as usize]).collect();
        match &best_patterns {
            Some(b) if img > *b => {}
            Some(b) if img == *b => candidates.push(g),
            _ => {
                best_patterns = Some(img);
                candidates.clear();
                candidates.push(g);
            }
        }
    }
    let mut best: Option<Vec<u64>> = None;
    for g in candidates {
        let mut img: Vec<u64> = s
            .colorings
            .iter()
            .map(|&tup| {
                (0..live_i).fold(0u64, |o, k| o | (g.color[color_at(tup, k) as usize] as u64) << (BITS as usize * k))
            })
            .collect();
        img.sort_unstable();
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
    }
    State { patterns: best_patterns.unwrap(), colorings: best.unwrap() }
}

/// Keeps, among states with equal patterns, only inclusion-minimal sets.
fn prune_dominated(sorted: Vec<State>) -> Vec<State> {
    let mut groups: Vec<Vec<State>> = Vec::new();
    for s in sorted {
        match groups.last_mut() {
            Some(g) if g[0].patterns == s.patterns => g.push(s),
            _ => groups.push(vec![s]),
        }
    }
    let kept = par::map(&groups, |g| {
        let mut by_len: Vec<&State> = g.iter().collect();
        by_len.sort_by_key(|s| s.colorings.len());
        let mut keep: Vec<&State> = Vec::new();
        for s in by_len {
            if !keep.iter().any(|k| is_subset(&k.colorings, &s.colorings)) {
                keep.push(s);
            }
        }
        let mut keep: Vec<State> = keep.into_iter().cloned().collect();
        keep.sort_unstable();
        keep
    });
    kept.into_iter().flatten().collect()
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn neighbors(t: &Tables, v: Var) -> Vec<Var> {
    let m = t.interior.len();
    match v {
        Var::Triple(a) => (0..t.t)
            .filter(|&b| t.interacts(a, b))
            .map(Var::Triple)
            .chain((0..m).filter(|&i| t.touches(a, i)).map(Var::Interior))
            .collect(),
        Var::Interior(i) => (0..t.t)
            .filter(|&a| t.touches(a, i))
            .map(Var::Triple)
            .chain((0..m).filter(|&j| j != i && t.interior_dist[i][j] <= 2).map(Var::Interior))
            .collect(),
    }
}

/// Breadth-first order from a pseudo-peripheral variable, component by
/// component; ties broken by degree, then index.
fn elimination_order(t: &Tables) -> Vec<Var> {
    let all: Vec<Var> = (0..t.t).map(Var::Triple).chain((0..t.interior.len()).map(Var::Interior)).collect();
    let index = |v: Var| match v {
        Var::Triple(a) => a,
        Var::Interior(i) => t.t + i,
    };
    let adj: Vec<Vec<usize>> = all.iter().map(|&v| neighbors(t, v).into_iter().map(index).collect()).collect();
    let bfs = |start: usize, seen: &mut Vec<bool>| -> Vec<usize> {
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = adj[v].iter().copied().filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (adj[w].len(), w));
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    };
    let mut seen = vec![false; all.len()];
    let mut out = Vec::new();
    for root in 0..all.len() {
        if seen[root] {
            continue;
        }
        let mut start = root;
        for _ in 0..3 {
            let mut scratch = seen.clone();
            start = *bfs(start, &mut scratch).last().unwrap();
        }
        out.extend(bfs(start, &mut seen));
    }
    out.into_iter().map(|i| all[i]).collect()
}

fn plan(t: &Tables, order: &[Var]) -> Result<Vec<Step>> {
    let pos = |v: Var| order.iter().position(|&w| w == v).unwrap();
    let last_needed: Vec<usize> = order
        .iter()
        .map(|&v| neighbors(t, v).into_iter().map(pos).chain([pos(v)]).max().unwrap())
        .collect();
    let mut live_x: Vec<(usize, usize)> = Vec::new(); // (triple, position)
    let mut live_i: Vec<(usize, usize)> = Vec::new();
    let mut steps = Vec::with_capacity(order.len());
    for (s, &var) in order.iter().enumerate() {
        let i_live_before = live_i.len();
        let (x_checks, i_checks) = match var {
            Var::Triple(a) => (
                live_x.iter().enumerate().filter(|(_, &(b, _))| t.interacts(a, b)).map(|(k, &(b, _))| (k, b)).collect(),
                live_i.iter().enumerate().filter(|(_, &(i, _))| t.touches(a, i)).map(|(k, &(i, _))| (k, i)).collect(),
            ),
            Var::Interior(i) => (
                live_x.iter().enumerate().filter(|(_, &(a, _))| t.touches(a, i)).map(|(k, &(a, _))| (k, a)).collect(),
                live_i
                    .iter()
                    .enumerate()
                    .filter(|(_, &(j, _))| t.interior_dist[i][j] <= 2)
                    .map(|(k, &(j, _))| (k, t.interior_dist[i][j] as usize))
                    .collect(),
            ),
        };
        match var {
            Var::Triple(a) => live_x.push((a, s)),
            Var::Interior(i) => live_i.push((i, s)),
        }
        if live_i.len() > MAX_LIVE_INTERIOR {
            return Err(Error::Budget(format!("{} interior vertices live at once", live_i.len())));
        }
        let x_keep: Vec<usize> = (0..live_x.len()).filter(|&k| last_needed[live_x[k].1] > s).collect();
        let i_keep: Vec<usize> = (0..live_i.len()).filter(|&k| last_needed[live_i[k].1] > s).collect();
        live_x = x_keep.iter().map(|&k| live_x[k]).collect();
        live_i = i_keep.iter().map(|&k| live_i[k]).collect();
        steps.push(Step { var, x_checks, i_checks, x_keep, i_keep, i_live_before });
    }
    Ok(steps)
}

/// Color permutations fixing color 1 under which every table is invariant.
/// Patterns `(1, a, b)` are renamed with their pendant colors re-sorted, which
/// is only invariant when the two pendants are interchangeable; the table
/// check rejects the permutation otherwise.
fn symmetry_group(t: &Tables, bx: &[u32]) -> Vec<ColorPerm> {
    let mut out = Vec::new();
    for perm in permutations(&[2, 3, 4, 5, 6]) {
        let mut color = [0u8, 1, 0, 0, 0, 0, 0, 7];
        for (k, &c) in perm.iter().enumerate() {
            color[2 + k] = c;
        }
        let mut pattern = [0u8; PATTERN_COUNT];
        for (p, pat) in PATTERNS.iter().enumerate() {
            let mut img = [color[pat[0] as usize], color[pat[1] as usize], color[pat[2] as usize]];
            if img[0] == 1 && img[1] > img[2] {
                img.swap(1, 2);
            }
            pattern[p] = PATTERNS.iter().position(|q| *q == img).expect("table closed under renaming") as u8;
        }
        let g = ColorPerm { color, pattern };
        if is_symmetry(t, bx, &g) {
            out.push(g);
        }
    }
    // identity first
    out.sort_by_key(|g| g.color);
    out
}

fn is_symmetry(t: &Tables, bx: &[u32], g: &ColorPerm) -> bool {
    if bx.iter().any(|&m| g.map_mask(m) != m) {
        return false;
    }
    for a in 0..t.t {
        for row in &t.compat[a] {
            for c in 1..=COLORS as usize {
                if g.map_mask(row[c]) != row[g.color[c] as usize] {
                    return false;
                }
            }
        }
        for b in 0..t.t {
            for pa in 0..PATTERN_COUNT {
                if g.map_mask(t.incompat[a][b][pa]) != t.incompat[a][b][g.pattern[pa] as usize] {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_check() {
        assert!(is_subset(&[1, 3], &[1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[1, 2, 3]));
        assert!(is_subset(&[], &[1]));
    }

    #[test]
    fn all_permutations() {
        let p = permutations(&[2, 3, 4, 5, 6]);
        assert_eq!(p.len(), 120);
        assert_eq!(p[0], vec![2, 3, 4, 5, 6]);
    }
}
