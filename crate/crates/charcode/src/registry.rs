//! Built-in reference parameter sets with their known weight enumerators.
//! The verifier and the acceptance suite treat these as golden data: both
//! the brute-force route and the closed forms must reproduce them exactly.

/// One reference code: parameters, the full expected (weight, frequency)
/// table including the zero word, and the expected dual distance where a
/// probe is feasible.
pub struct ReferenceCode {
    pub name: &'static str,
    pub p: u64,
    pub e: u32,
    pub k: u32,
    pub e1: u64,
    pub e2: u64,
    pub d: u64,
    pub expected: &'static [(u64, u64)],
    pub dual_distance: Option<u64>,
}

pub const REFERENCE_CODES: &[ReferenceCode] = &[
    ReferenceCode {
        name: "q4-k3-d1",
        p: 2,
        e: 2,
        k: 3,
        e1: 1,
        e2: 1,
        d: 1,
        expected: &[(0, 1), (47, 189), (48, 63), (63, 3)],
        dual_distance: Some(3),
    },
    ReferenceCode {
        name: "q3-k4-d1",
        p: 3,
        e: 1,
        k: 4,
        e1: 1,
        e2: 3,
        d: 1,
        expected: &[(0, 1), (53, 160), (54, 80), (80, 2)],
        dual_distance: Some(3),
    },
    ReferenceCode {
        name: "q3-k3-d2",
        p: 3,
        e: 1,
        k: 3,
        e1: 1,
        e2: 1,
        d: 2,
        expected: &[(0, 1), (14, 26), (18, 26), (20, 26), (26, 2)],
        dual_distance: None,
    },
    ReferenceCode {
        name: "q9-k3-d2",
        p: 3,
        e: 2,
        k: 3,
        e1: 1,
        e2: 1,
        d: 2,
        expected: &[(0, 1), (638, 2912), (648, 728), (656, 2912), (728, 8)],
        dual_distance: None,
    },
    ReferenceCode {
        name: "q4-k2-d3",
        p: 2,
        e: 2,
        k: 2,
        e1: 2,
        e2: 1,
        d: 3,
        expected: &[(0, 1), (9, 30), (12, 15), (15, 18)],
        dual_distance: None,
    },
    ReferenceCode {
        name: "q7-k4-d3",
        p: 7,
        e: 1,
        k: 4,
        e1: 1,
        e2: 1,
        d: 3,
        expected: &[
            (0, 1),
            (2022, 4800),
            (2058, 2400),
            (2064, 4800),
            (2085, 4800),
            (2400, 6),
        ],
        dual_distance: None,
    },
    ReferenceCode {
        name: "q4-k5-d3",
        p: 2,
        e: 2,
        k: 5,
        e1: 1,
        e2: 2,
        d: 3,
        expected: &[(0, 1), (735, 1023), (768, 1023), (783, 2046), (1023, 3)],
        dual_distance: None,
    },
    ReferenceCode {
        name: "q9-k3-d4",
        p: 3,
        e: 2,
        k: 3,
        e1: 3,
        e2: 5,
        d: 4,
        expected: &[(0, 1), (620, 1456), (648, 728), (656, 4368), (728, 8)],
        dual_distance: None,
    },
    ReferenceCode {
        name: "q5-k5-d4",
        p: 5,
        e: 1,
        k: 5,
        e1: 1,
        e2: 1,
        d: 4,
        expected: &[
            (0, 1),
            (2444, 3124),
            (2484, 3124),
            (2500, 3124),
            (2504, 3124),
            (2564, 3124),
            (3124, 4),
        ],
        dual_distance: None,
    },
];
