//! Colorings of a pendant triple `(boundary, p1, p2)`.

/// Number of colors in the good coloring: color 1 plus five 2-colors.
pub const COLORS: u8 = 6;

/// Number of patterns tried for every triple but the first.
pub const PATTERN_COUNT: usize = 30;

/// Number of patterns tried for the first triple in the default mode.
pub const FIRST_COUNT: usize = 2;

/// Patterns as `[boundary, p1, p2]`, in enumeration order.
pub const PATTERNS: [[u8; 3]; PATTERN_COUNT] = [
    [6, 1, 2], [6, 1, 3], [6, 1, 4], [6, 1, 5],
    [5, 1, 2], [5, 1, 3], [5, 1, 4], [5, 1, 6],
    [4, 1, 2], [4, 1, 3], [4, 1, 5], [4, 1, 6],
    [3, 1, 2], [3, 1, 4], [3, 1, 5], [3, 1, 6],
    [2, 1, 3], [2, 1, 4], [2, 1, 5], [2, 1, 6],
    [1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6],
    [1, 3, 4], [1, 3, 5], [1, 3, 6], [1, 4, 5],
    [1, 4, 6], [1, 5, 6],
];

/// Bit mask with every pattern index set.
pub const ALL_PATTERNS: u32 = (1 << PATTERN_COUNT) - 1;

/// Radius of a color of the good coloring.
#[inline]
pub fn radius(c: u8) -> u32 {
    if c == 1 {
        1
    } else {
        2
    }
}

/// Index of the pattern with exactly these colors, if it is in the table.
pub fn pattern_index(colors: [u8; 3]) -> Option<usize> {
    PATTERNS.iter().position(|p| *p == colors)
}

/// Allowed pattern set for triple `t`.
pub fn allowed_mask(t: usize, exhaustive_first: bool) -> u32 {
    if t == 0 && !exhaustive_first {
        (1 << FIRST_COUNT) - 1
    } else {
        ALL_PATTERNS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for (i, p) in PATTERNS.iter().enumerate() {
            if i < 20 {
                assert!(p[0] != 1 && p[1] == 1 && p[2] != 1 && p[0] != p[2]);
            } else {
                assert!(p[0] == 1 && 1 < p[1] && p[1] < p[2]);
            }
            assert!(p.iter().all(|&c| (1..=COLORS).contains(&c)));
        }
        assert_eq!(pattern_index([1, 5, 6]), Some(29));
        assert_eq!(pattern_index([1, 6, 5]), None);
    }
}
