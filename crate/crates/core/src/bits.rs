//! Word-vector bitsets used for adjacency rows and copy masks.

/// Number of 64-bit words needed to hold `n` bits.
#[inline]
pub const fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1u64 << (i % 64);
}

#[inline]
pub fn clear_bit(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1u64 << (i % 64));
}

#[inline]
pub fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Writes `a AND b` into `out`.
#[inline]
pub fn and_into(a: &[u64], b: &[u64], out: &mut [u64]) {
    for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

/// In-place `dst &= src`.
#[inline]
pub fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

/// Iterator over the set bit positions of a word slice.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors((w != 0).then_some(w), |&w| {
            let next = w & (w - 1);
            (next != 0).then_some(next)
        })
        .map(move |w| wi * 64 + w.trailing_zeros() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_roundtrip() {
        let mut w = vec![0u64; 3];
        for &i in &[0, 1, 63, 64, 100, 191] {
            set_bit(&mut w, i);
        }
        let got: Vec<usize> = ones(&w).collect();
        assert_eq!(got, vec![0, 1, 63, 64, 100, 191]);
        assert_eq!(count_ones(&w), 6);
        assert!(test_bit(&w, 100));
        clear_bit(&mut w, 100);
        assert!(!test_bit(&w, 100));
    }
}
