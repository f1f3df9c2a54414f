//! Knots named in the tables of reduced and alternating Chebyshev knots,
//! each stored as a standard PD code (KnotInfo conventions). Jones
//! polynomials are computed from these diagrams on first use.

use std::sync::OnceLock;

use serde::Serialize;

use super::{jones_of_knot_pd, LaurentPoly, DEFAULT_CAP};
use crate::diagram::PdCode;

#[derive(Debug, Clone, Serialize)]
pub struct KnotRecord {
    pub name: &'static str,
    pub crossing_number: u32,
    /// Jones polynomial in `x = t^(1/4)`.
    pub jones: LaurentPoly,
}

type Raw = (&'static str, u32, &'static [[u32; 4]]);

const STANDARD_DIAGRAMS: &[Raw] = &[
    ("0_1", 0, &[]),
    ("3_1", 3, &[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]),
    ("4_1", 4, &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]),
    ("5_1", 5, &[[2, 8, 3, 7], [4, 10, 5, 9], [6, 2, 7, 1], [8, 4, 9, 3], [10, 6, 1, 5]]),
    ("5_2", 5, &[[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]]),
    ("6_2", 6, &[[1, 8, 2, 9], [3, 11, 4, 10], [5, 1, 6, 12], [7, 2, 8, 3], [9, 7, 10, 6], [11, 5, 12, 4]]),
    ("6_3", 6, &[[4, 2, 5, 1], [8, 4, 9, 3], [12, 9, 1, 10], [10, 5, 11, 6], [6, 11, 7, 12], [2, 8, 3, 7]]),
    (
        "7_1",
        7,
        &[[1, 9, 2, 8], [3, 11, 4, 10], [5, 13, 6, 12], [7, 1, 8, 14], [9, 3, 10, 2], [11, 5, 12, 4], [13, 7, 14, 6]],
    ),
    (
        "7_3",
        7,
        &[[1, 9, 2, 8], [3, 11, 4, 10], [5, 1, 6, 14], [7, 13, 8, 12], [9, 3, 10, 2], [11, 5, 12, 4], [13, 7, 14, 6]],
    ),
    (
        "7_4",
        7,
        &[[2, 10, 3, 9], [4, 12, 5, 11], [6, 14, 7, 13], [8, 4, 9, 3], [10, 2, 11, 1], [12, 8, 13, 7], [14, 6, 1, 5]],
    ),
    (
        "7_5",
        7,
        &[[2, 10, 3, 9], [4, 2, 5, 1], [6, 14, 7, 13], [8, 12, 9, 11], [10, 4, 11, 3], [12, 6, 13, 5], [14, 8, 1, 7]],
    ),
    (
        "7_7",
        7,
        &[[1, 10, 2, 11], [3, 13, 4, 12], [5, 14, 6, 1], [7, 5, 8, 4], [9, 2, 10, 3], [11, 9, 12, 8], [13, 6, 14, 7]],
    ),
    (
        "8_3",
        8,
        &[
            [6, 2, 7, 1],
            [14, 10, 15, 9],
            [10, 5, 11, 6],
            [12, 3, 13, 4],
            [4, 11, 5, 12],
            [2, 13, 3, 14],
            [16, 8, 1, 7],
            [8, 16, 9, 15],
        ],
    ),
    (
        "8_7",
        8,
        &[
            [2, 9, 3, 10],
            [4, 14, 5, 13],
            [6, 15, 7, 16],
            [8, 1, 9, 2],
            [10, 5, 11, 6],
            [12, 4, 13, 3],
            [14, 12, 15, 11],
            [16, 7, 1, 8],
        ],
    ),
    (
        "8_12",
        8,
        &[
            [4, 2, 5, 1],
            [10, 8, 11, 7],
            [8, 3, 9, 4],
            [2, 9, 3, 10],
            [14, 6, 15, 5],
            [16, 11, 1, 12],
            [12, 15, 13, 16],
            [6, 14, 7, 13],
        ],
    ),
    (
        "8_15",
        8,
        &[
            [1, 7, 2, 6],
            [3, 15, 4, 14],
            [5, 9, 6, 8],
            [7, 3, 8, 2],
            [9, 13, 10, 12],
            [11, 1, 12, 16],
            [13, 5, 14, 4],
            [15, 11, 16, 10],
        ],
    ),
    (
        "9_1",
        9,
        &[
            [1, 11, 2, 10],
            [3, 13, 4, 12],
            [5, 15, 6, 14],
            [7, 17, 8, 16],
            [9, 1, 10, 18],
            [11, 3, 12, 2],
            [13, 5, 14, 4],
            [15, 7, 16, 6],
            [17, 9, 18, 8],
        ],
    ),
    (
        "9_18",
        9,
        &[
            [2, 12, 3, 11],
            [4, 2, 5, 1],
            [6, 16, 7, 15],
            [8, 14, 9, 13],
            [10, 18, 11, 17],
            [12, 4, 13, 3],
            [14, 8, 15, 7],
            [16, 10, 17, 9],
            [18, 6, 1, 5],
        ],
    ),
    (
        "9_20",
        9,
        &[
            [1, 11, 2, 10],
            [3, 16, 4, 17],
            [5, 13, 6, 12],
            [7, 3, 8, 2],
            [9, 1, 10, 18],
            [11, 15, 12, 14],
            [13, 7, 14, 6],
            [15, 4, 16, 5],
            [17, 9, 18, 8],
        ],
    ),
    (
        "9_31",
        9,
        &[
            [1, 9, 2, 8],
            [3, 10, 4, 11],
            [5, 13, 6, 12],
            [7, 1, 8, 18],
            [9, 16, 10, 17],
            [11, 15, 12, 14],
            [13, 7, 14, 6],
            [15, 4, 16, 5],
            [17, 3, 18, 2],
        ],
    ),
    (
        "10_116",
        10,
        &[
            [2, 16, 3, 15],
            [4, 17, 5, 18],
            [6, 12, 7, 11],
            [8, 1, 9, 2],
            [10, 4, 11, 3],
            [12, 19, 13, 20],
            [14, 8, 15, 7],
            [16, 9, 17, 10],
            [18, 5, 19, 6],
            [20, 13, 1, 14],
        ],
    ),
    (
        "11a_367",
        11,
        &[
            [12, 2, 13, 1],
            [14, 4, 15, 3],
            [16, 6, 17, 5],
            [18, 8, 19, 7],
            [20, 10, 21, 9],
            [22, 12, 1, 11],
            [2, 14, 3, 13],
            [4, 16, 5, 15],
            [6, 18, 7, 17],
            [8, 20, 9, 19],
            [10, 22, 11, 21],
        ],
    ),
];

/// The standard diagram of a tabulated knot.
pub fn standard_diagram(name: &str) -> Option<PdCode> {
    STANDARD_DIAGRAMS
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, _, pd)| PdCode::new(pd.to_vec()).expect("tabulated diagrams are well formed"))
}

pub fn knot_table() -> &'static [KnotRecord] {
    static TABLE: OnceLock<Vec<KnotRecord>> = OnceLock::new();
    TABLE.get_or_init(|| {
        STANDARD_DIAGRAMS
            .iter()
            .map(|&(name, crossing_number, pd)| {
                let pd = PdCode::new(pd.to_vec()).expect("tabulated diagrams are well formed");
                let jones = jones_of_knot_pd(&pd, DEFAULT_CAP).expect("tabulated diagrams are within the cap");
                KnotRecord { name, crossing_number, jones }
            })
            .collect()
    })
}
