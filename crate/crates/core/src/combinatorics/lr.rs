use std::cell::RefCell;

use rustc_hash::FxHashMap;

use super::partition::Partition;

type LrKey = (Vec<usize>, Vec<usize>, Vec<usize>);

thread_local! {
    static LR_CACHE: RefCell<FxHashMap<LrKey, u64>> = RefCell::new(FxHashMap::default());
}

/// Littlewood–Richardson coefficient `c^outer_{inner, weight}`: the number of
/// semistandard fillings of `outer / inner` with content `weight` whose
/// reverse reading word is a lattice word. Returns 0 when the sizes do not
/// add up or `inner ⊄ outer`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, weight: &Partition) -> u64 {
    if !outer.contains(inner) || outer.size() != inner.size() + weight.size() {
        return 0;
    }
    if weight.is_empty() {
        return 1;
    }
    let key = (
        outer.parts().to_vec(),
        inner.parts().to_vec(),
        weight.parts().to_vec(),
    );
    if let Some(v) = LR_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let v = count(outer, inner, weight);
    LR_CACHE.with(|c| c.borrow_mut().insert(key, v));
    v
}

fn count(outer: &Partition, inner: &Partition, weight: &Partition) -> u64 {
    // Cells in reverse reading order: rows top to bottom, each right to left.
    let mut cells = Vec::with_capacity(weight.size());
    for r in 0..outer.len() {
        for c in (inner.part(r)..outer.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..outer.len()).map(|r| vec![0; outer.part(r)]).collect();
    let mut counts = vec![0usize; weight.len()];

    struct Ctx<'a> {
        outer: &'a Partition,
        inner: &'a Partition,
        weight: &'a Partition,
        cells: Vec<(usize, usize)>,
    }

    fn go(ctx: &Ctx, idx: usize, grid: &mut Vec<Vec<usize>>, counts: &mut Vec<usize>) -> u64 {
        if idx == ctx.cells.len() {
            return 1;
        }
        let (r, c) = ctx.cells[idx];
        let mut hi = ctx.weight.len();
        if c + 1 < ctx.outer.part(r) {
            hi = hi.min(grid[r][c + 1]);
        }
        let mut lo = 1;
        if r > 0 && c >= ctx.inner.part(r - 1) {
            lo = grid[r - 1][c] + 1;
        }
        let mut total = 0;
        for v in lo..=hi {
            if counts[v - 1] >= ctx.weight.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v - 2] <= counts[v - 1] {
                continue;
            }
            counts[v - 1] += 1;
            grid[r][c] = v;
            total += go(ctx, idx + 1, grid, counts);
            grid[r][c] = 0;
            counts[v - 1] -= 1;
        }
        total
    }

    let ctx = Ctx {
        outer,
        inner,
        weight,
        cells: std::mem::take(&mut cells),
    };
    go(&ctx, 0, &mut grid, &mut counts)
}
