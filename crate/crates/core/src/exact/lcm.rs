use std::sync::RwLock;

use super::ExactInteger;

// entry n holds D_n = lcm(1, ..., n); entry 0 is 1.
static TABLE: RwLock<Vec<ExactInteger>> = RwLock::new(Vec::new());

/// `D_n = lcm(1, 2, …, n)` with `D_0 = 1`.
///
/// Backed by a process-wide table that grows on demand; readers of an
/// already computed prefix only take the shared lock.
pub fn lcm_upto(n: u64) -> ExactInteger {
    let idx = n as usize;
    {
        let table = TABLE.read().expect("lcm table poisoned");
        if let Some(d) = table.get(idx) {
            return d.clone();
        }
    }
    let mut table = TABLE.write().expect("lcm table poisoned");
    if table.is_empty() {
        table.push(ExactInteger::from(1));
    }
    while table.len() <= idx {
        let m = table.len() as u64;
        let next = table[table.len() - 1].clone().lcm_u(m as u32);
        table.push(next);
    }
    table[idx].clone()
}
