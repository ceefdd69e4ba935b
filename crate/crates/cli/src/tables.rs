//! Embedded expected values for `check-tables`: the first sixteen terms of
//! the `r` and `b` sequences for k = 3..8, vendored so the self-check needs
//! no recomputation source other than this binary.

pub const TABLE_K: [usize; 6] = [3, 4, 5, 6, 7, 8];

/// `r[n][col]` with `col` indexing [`TABLE_K`] and `n` in `0..=15`.
pub const R_TABLE: [[u64; 6]; 16] = [
    [1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1],
    [2, 2, 2, 2, 2, 2],
    [2, 4, 4, 4, 4, 4],
    [4, 6, 8, 8, 8, 8],
    [7, 12, 14, 16, 16, 16],
    [10, 22, 28, 30, 32, 32],
    [17, 41, 54, 60, 62, 64],
    [28, 74, 104, 118, 124, 126],
    [44, 137, 201, 232, 246, 252],
    [72, 252, 386, 456, 488, 502],
    [117, 464, 745, 897, 968, 1000],
    [188, 852, 1436, 1762, 1920, 1992],
    [305, 1568, 2768, 3465, 3809, 3968],
    [494, 2884, 5336, 6812, 7554, 7904],
];

/// `b[n][col]` with `col` indexing [`TABLE_K`] and `n` in `0..=15`.
pub const B_TABLE: [[u64; 6]; 16] = [
    [1, 1, 1, 1, 1, 1],
    [2, 2, 2, 2, 2, 2],
    [4, 4, 4, 4, 4, 4],
    [6, 8, 8, 8, 8, 8],
    [10, 14, 16, 16, 16, 16],
    [16, 26, 30, 32, 32, 32],
    [26, 48, 58, 62, 64, 64],
    [42, 88, 112, 122, 126, 128],
    [68, 162, 216, 240, 250, 254],
    [110, 298, 416, 472, 496, 506],
    [178, 548, 802, 928, 984, 1008],
    [288, 1008, 1546, 1824, 1952, 2008],
    [466, 1854, 2980, 3586, 3872, 4000],
    [754, 3410, 5744, 7050, 7680, 7968],
    [1220, 6272, 11072, 13860, 15234, 15872],
    [1974, 11536, 21342, 27248, 30218, 31616],
];
