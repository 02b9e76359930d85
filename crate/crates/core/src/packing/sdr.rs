/// One distinct representative per demand, or `None` when Hall's condition
/// fails. Augmenting paths, demands processed in order.
pub fn sdr_assign(demands: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut owner: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for d in 0..demands.len() {
        let mut seen = std::collections::HashSet::new();
        if !augment(d, demands, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut pick = vec![0; demands.len()];
    for (&color, &d) in &owner {
        pick[d] = color;
    }
    Some(pick)
}

fn augment(
    d: usize,
    demands: &[Vec<usize>],
    owner: &mut std::collections::HashMap<usize, usize>,
    seen: &mut std::collections::HashSet<usize>,
) -> bool {
    for &c in &demands[d] {
        if !seen.insert(c) {
            continue;
        }
        let free = match owner.get(&c) {
            None => true,
            Some(&other) => augment(other, demands, owner, seen),
        };
        if free {
            owner.insert(c, d);
            return true;
        }
    }
    false
}
