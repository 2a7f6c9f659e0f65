//! Range minimum queries by block decomposition.
//!
//! The array is cut into blocks of about `lg n` entries. A sparse table over
//! the per-block minima answers the block-aligned middle of a query, and the
//! two partial blocks at the ends are scanned.

#[derive(Clone, Debug)]
pub struct BlockRmq {
    block: usize,
    /// `table[k][b]` is the position of the minimum over blocks `b .. b + 2^k`.
    table: Vec<Vec<usize>>,
}

impl BlockRmq {
    pub fn new(values: &[usize]) -> Self {
        let n = values.len();
        let block = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let blocks = n.div_ceil(block);

        let mut base = Vec::with_capacity(blocks);
        for b in 0..blocks {
            let lo = b * block;
            let hi = (lo + block).min(n);
            base.push(argmin_scan(values, lo, hi - 1));
        }

        let mut table = vec![base];
        let mut width = 1;
        while 2 * width <= blocks {
            let prev = table.last().unwrap();
            let level: Vec<usize> = (0..=blocks - 2 * width)
                .map(|b| pick(values, prev[b], prev[b + width]))
                .collect();
            table.push(level);
            width *= 2;
        }
        Self { block, table }
    }

    /// Position of a minimum of `values[x ..= y]`; ties resolve to the leftmost.
    ///
    /// `values` must be the slice this structure was built from.
    pub fn query(&self, values: &[usize], x: usize, y: usize) -> usize {
        debug_assert!(x <= y && y < values.len());
        let bx = x / self.block;
        let by = y / self.block;
        if by - bx <= 1 {
            return argmin_scan(values, x, y);
        }
        let left = argmin_scan(values, x, (bx + 1) * self.block - 1);
        let right = argmin_scan(values, by * self.block, y);
        let middle = self.blocks_min(values, bx + 1, by - 1);
        pick(values, pick(values, left, middle), right)
    }

    fn blocks_min(&self, values: &[usize], lo: usize, hi: usize) -> usize {
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let level = &self.table[k];
        pick(values, level[lo], level[hi + 1 - (1 << k)])
    }
}

#[inline]
fn pick(values: &[usize], a: usize, b: usize) -> usize {
    if values[b] < values[a] || (values[b] == values[a] && b < a) {
        b
    } else {
        a
    }
}

#[inline]
fn argmin_scan(values: &[usize], x: usize, y: usize) -> usize {
    let mut best = x;
    for i in x + 1..=y {
        if values[i] < values[best] {
            best = i;
        }
    }
    best
}
