//! Small helpers for vertex subsets encoded as bitmasks.

/// A subset of vertex positions; bit `i` set means position `i` is present.
pub type Mask = u32;

/// Iterate over the set bit positions of `mask`, lowest first.
pub fn iter_bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Iterate over all submasks of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

#[inline]
pub fn popcount(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Pack the bits of `mask` that lie inside `within` into consecutive low positions,
/// preserving order.
pub fn compress(mask: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, b) in iter_bits(within).enumerate() {
        if mask & (1 << b) != 0 {
            out |= 1 << k;
        }
    }
    out
}

/// Inverse of [`compress`]: spread consecutive low bits onto the positions of `within`.
pub fn expand(mask: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (k, b) in iter_bits(within).enumerate() {
        if mask & (1 << k) != 0 {
            out |= 1 << b;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration_is_complete() {
        let all: Vec<_> = submasks(0b1011).collect();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&0) && all.contains(&0b1011));
    }

    #[test]
    fn compress_expand_round_trip() {
        let within = 0b1101_0010;
        for m in submasks(within) {
            assert_eq!(expand(compress(m, within), within), m);
        }
        assert_eq!(compress(0b1000_0010, within), 0b1001);
    }
}
