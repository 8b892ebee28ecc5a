use std::cell::RefCell;

use rustc_hash::FxHashMap;

use super::partition::{CycleType, Partition};

type MnKey = (Vec<usize>, Vec<usize>);

thread_local! {
    static MN_CACHE: RefCell<FxHashMap<MnKey, i64>> =
        RefCell::new(FxHashMap::default());
}

/// Irreducible character `χ^ν` of `S_k` at the class of cycle type `class`,
/// by the Murnaghan–Nakayama rule on beta-numbers. Returns 0 on a size
/// mismatch.
pub fn sk_character(nu: &Partition, class: &CycleType) -> i64 {
    if nu.size() != class.size() {
        return 0;
    }
    mn(nu.parts().to_vec(), class.parts())
}

fn mn(shape: Vec<usize>, class: &[usize]) -> i64 {
    let Some((&r, rest)) = class.split_first() else {
        return 1;
    };
    let key = (shape.clone(), class.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for i in 0..len {
        if beta[i] < r || beta.contains(&(beta[i] - r)) {
            continue;
        }
        let target = beta[i] - r;
        let crossed = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(parts, rest);
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// Number of permutations with the given cycle type.
pub fn class_size(class: &CycleType) -> u128 {
    let k = class.size() as u128;
    let mut denom: u128 = 1;
    let mut i = 0;
    let parts = class.parts();
    while i < parts.len() {
        let len = parts[i];
        let mut mult = 0u128;
        while i < parts.len() && parts[i] == len {
            mult += 1;
            i += 1;
        }
        denom *= (len as u128).pow(mult as u32) * (1..=mult).product::<u128>();
    }
    (1..=k).product::<u128>() / denom
}
