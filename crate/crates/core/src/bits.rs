//! Small helpers for `u64` vertex sets.

/// Vertex set over at most 64 vertices.
pub type VertexSet = u64;

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over set bits in ascending order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bits(mask: u64) -> Bits {
    Bits(mask)
}

pub fn set_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// Calls `f` on every `k`-subset of `universe`, in colexicographic order of
/// the bit patterns restricted to `universe`. Stops early when `f` returns false.
pub fn for_each_subset_of_size(universe: u64, k: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    let elems: Vec<usize> = bits(universe).collect();
    if k > elems.len() {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | bit(elems[i]));
        if !f(mask) {
            return false;
        }
        // advance lexicographically over index tuples
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < elems.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_roundtrip() {
        let m = set_of(&[0, 3, 63]);
        assert_eq!(to_vec(m), vec![0, 3, 63]);
        assert_eq!(low_mask(64), u64::MAX);
        assert_eq!(low_mask(3), 0b111);
    }

    #[test]
    fn subsets_are_binomial() {
        let mut count = 0;
        for_each_subset_of_size(low_mask(7), 3, |m| {
            assert_eq!(m.count_ones(), 3);
            count += 1;
            true
        });
        assert_eq!(count, 35);
        let mut zero = 0;
        for_each_subset_of_size(low_mask(4), 0, |m| {
            assert_eq!(m, 0);
            zero += 1;
            true
        });
        assert_eq!(zero, 1);
    }
}
