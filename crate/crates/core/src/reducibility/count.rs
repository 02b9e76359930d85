//! Counting consistent pattern vectors inside a box by eliminating triples in
//! list order and keeping only those that still clash with a later triple.

use std::collections::HashMap;

use super::tables::Tables;
use crate::error::{Error, Result};

const COUNT_BUDGET: usize = 20_000_000;

pub(crate) fn count_consistent(tables: &Tables, bx: &[u32]) -> Result<u128> {
    let t = tables.t;
    // last later triple each triple interacts with
    let last_partner: Vec<usize> = (0..t)
        .map(|a| (a + 1..t).filter(|&b| tables.interacts(a, b)).max().unwrap_or(a))
        .collect();
    let mut active: Vec<usize> = Vec::new();
    let mut states: HashMap<Vec<u8>, u128> = HashMap::from([(Vec::new(), 1)]);
    for level in 0..t {
        let mut next: HashMap<Vec<u8>, u128> = HashMap::new();
        let keep: Vec<bool> = active.iter().map(|&a| last_partner[a] > level).collect();
        let stays = last_partner[level] > level;
        for (key, count) in &states {
            for p in 0..30u8 {
                if bx[level] >> p & 1 == 0 {
                    continue;
                }
                let clash = active
                    .iter()
                    .zip(key)
                    .any(|(&a, &pa)| tables.incompat[a][level][pa as usize] >> p & 1 == 1);
                if clash {
                    continue;
                }
                let mut nk: Vec<u8> = key.iter().zip(&keep).filter(|(_, &k)| k).map(|(&x, _)| x).collect();
                if stays {
                    nk.push(p);
                }
                *next.entry(nk).or_insert(0) += count;
            }
        }
        if next.len() > COUNT_BUDGET {
            return Err(Error::Budget(format!("{} partial assignments while counting", next.len())));
        }
        active = active.iter().zip(&keep).filter(|(_, &k)| k).map(|(&a, _)| a).collect();
        if stays {
            active.push(level);
        }
        states = next;
    }
    Ok(states.values().sum())
}
