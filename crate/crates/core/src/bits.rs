//! Fixed-length bitmap used for valuation sets.

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    /// Sets every bit in `from..to`.
    pub fn set_range(&mut self, from: usize, to: usize) {
        let to = to.min(self.len);
        if from >= to {
            return;
        }
        let (fw, tw) = (from >> 6, (to - 1) >> 6);
        let head = !0u64 << (from & 63);
        let tail = !0u64 >> (63 - ((to - 1) & 63));
        if fw == tw {
            self.words[fw] |= head & tail;
            return;
        }
        self.words[fw] |= head;
        for w in &mut self.words[fw + 1..tw] {
            *w = !0;
        }
        self.words[tw] |= tail;
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_ones_below(&self, n: usize) -> usize {
        let n = n.min(self.len);
        let full = n >> 6;
        let mut total: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        let rem = n & 63;
        if rem != 0 {
            total += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        total
    }

    /// Copies bits `0..min(self.len, src.len)` from `src`.
    pub fn copy_prefix_from(&mut self, src: &Bits) {
        let n = self.len.min(src.len);
        let full = n >> 6;
        self.words[..full].copy_from_slice(&src.words[..full]);
        let rem = n & 63;
        if rem != 0 {
            let mask = (1u64 << rem) - 1;
            self.words[full] = (self.words[full] & !mask) | (src.words[full] & mask);
        }
    }

    /// `self[x + shift] |= src[x]` wherever both indices are in range.
    pub fn or_shifted(&mut self, src: &Bits, shift: usize) {
        if shift >= self.len {
            return;
        }
        let word_shift = shift >> 6;
        let bit_shift = shift & 63;
        let dst_words = self.words.len();
        for (i, &w) in src.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let j = i + word_shift;
            if j >= dst_words {
                break;
            }
            self.words[j] |= w << bit_shift;
            if bit_shift != 0 && j + 1 < dst_words {
                self.words[j + 1] |= w >> (64 - bit_shift);
            }
        }
        self.clear_tail();
    }

    pub fn and_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest `t` such that every bit in `t..len` is set.
    pub fn cofinite_start(&self) -> usize {
        let mut i = self.len;
        while i > 0 {
            if i & 63 == 0 && self.words[(i >> 6) - 1] == !0 {
                i -= 64;
            } else if self.get(i - 1) {
                i -= 1;
            } else {
                break;
            }
        }
        i
    }

    pub fn truncate(&mut self, len: usize) {
        debug_assert!(len <= self.len);
        self.len = len;
        self.words.truncate(len.div_ceil(64));
        self.clear_tail();
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    fn clear_tail(&mut self) {
        let rem = self.len & 63;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}
