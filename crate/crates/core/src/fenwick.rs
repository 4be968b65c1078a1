// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Growable Fenwick tree over non-negative integer weights.

#[derive(Debug, Clone, Default)]
pub(crate) struct Fenwick {
    // 1-based; tree[0] unused.
    tree: Vec<u64>,
    total: u64,
}

impl Fenwick {
    pub fn new() -> Self {
        Fenwick {
            tree: vec![0],
            total: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.tree.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Sum of weights at indices `0..end`.
    pub fn prefix(&self, end: usize) -> u64 {
        let mut i = end;
        let mut acc = 0;
        while i > 0 {
            acc += self.tree[i];
            i &= i - 1;
        }
        acc
    }

    /// Appends an element with the given weight.
    pub fn push(&mut self, weight: u64) {
        let i = self.tree.len();
        let low = i & i.wrapping_neg();
        // Node i covers (i - low, i]; everything but the new element is already stored.
        let covered = self.prefix(i - 1) - self.prefix(i - low);
        self.tree.push(covered + weight);
        self.total += weight;
    }

    pub fn add(&mut self, index: usize, delta: i64) {
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] = self.tree[i].wrapping_add_signed(delta);
            i += i & i.wrapping_neg();
        }
        self.total = self.total.wrapping_add_signed(delta);
    }

    /// Smallest index whose inclusive prefix sum exceeds `target`.
    /// Requires `target < total()`.
    pub fn find(&self, mut target: u64) -> usize {
        debug_assert!(target < self.total);
        let n = self.len();
        let mut pos = 0;
        let mut step = if n == 0 { 0 } else { 1 << (usize::BITS - 1 - n.leading_zeros()) };
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= target {
                target -= self.tree[next];
                pos = next;
            }
            step >>= 1;
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_and_find_match_linear_scan() {
        let weights = [3u64, 0, 5, 1, 0, 0, 7, 2, 4, 9, 1];
        let mut f = Fenwick::new();
        for &w in &weights {
            f.push(w);
        }
        assert_eq!(f.total(), weights.iter().sum::<u64>());
        let mut target = 0;
        for (i, &w) in weights.iter().enumerate() {
            for _ in 0..w {
                assert_eq!(f.find(target), i);
                target += 1;
            }
        }
    }

    #[test]
    fn add_updates_prefix() {
        let mut f = Fenwick::new();
        for _ in 0..20 {
            f.push(1);
        }
        f.add(7, 4);
        f.add(3, -1);
        assert_eq!(f.prefix(20), 23);
        assert_eq!(f.prefix(8), 11);
        assert_eq!(f.prefix(4), 3);
    }
}
