//! Frozen exact values for the acceptance suite: the delta_r(i) table
//! rows for r = 0..4, i = 0..9, and the d_1..d_5 rows over p <= 31.

/// delta_r(i) rows for r = 0..4, i = 0..9.
pub const DELTA_ROWS: [[(i64, i64); 10]; 5] = [
    [
        (1, 2),
        (1, 3),
        (4, 15),
        (8, 35),
        (16, 77),
        (192, 1001),
        (3072, 17017),
        (55296, 323323),
        (110592, 676039),
        (442368, 2800733),
    ],
    [
        (1, 2),
        (1, 2),
        (7, 15),
        (46, 105),
        (44, 105),
        (288, 715),
        (33216, 85085),
        (613248, 1616615),
        (151296, 408595),
        (391584768, 1078282205),
    ],
    [
        (0, 1),
        (1, 6),
        (7, 30),
        (4, 15),
        (326, 1155),
        (628, 2145),
        (992, 3315),
        (98304, 323323),
        (125568, 408595),
        (733440, 2369851),
    ],
    [
        (0, 1),
        (0, 1),
        (1, 30),
        (13, 210),
        (31, 385),
        (206, 2145),
        (1308, 12155),
        (81544, 692835),
        (738544, 5870865),
        (61026496, 462120945),
    ],
    [
        (0, 1),
        (0, 1),
        (0, 1),
        (1, 210),
        (23, 2310),
        (1, 65),
        (734, 36465),
        (336, 13585),
        (35272, 1225785),
        (103905392, 3234846615),
    ],
];

/// d_k rows as printed: d_1 from p_0 = 2, the rest from p_1 = 3, each
/// running through p_10 = 31.
pub const D_ROWS: [(u64, &[(i64, i64)]); 5] = [
    (
        1,
        &[
            (1, 2),
            (1, 6),
            (1, 15),
            (4, 105),
            (8, 385),
            (16, 1001),
            (192, 17017),
            (3072, 323323),
            (55296, 7436429),
            (110592, 19605131),
            (442368, 86822723),
        ],
    ),
    (
        2,
        &[
            (1, 6),
            (1, 10),
            (1, 15),
            (46, 1155),
            (44, 1365),
            (288, 12155),
            (33216, 1616615),
            (613248, 37182145),
            (151296, 11849255),
            (391584768, 33426748355),
        ],
    ),
    (
        3,
        &[
            (0, 1),
            (1, 30),
            (1, 30),
            (4, 165),
            (326, 15015),
            (628, 36465),
            (992, 62985),
            (98304, 7436429),
            (125568, 11849255),
            (733440, 73465381),
        ],
    ),
    (
        4,
        &[
            (0, 1),
            (0, 1),
            (1, 210),
            (13, 2310),
            (31, 5005),
            (206, 36465),
            (1308, 230945),
            (81544, 15935205),
            (738544, 170255085),
            (61026496, 14325749295),
        ],
    ),
    (
        5,
        &[
            (0, 1),
            (0, 1),
            (0, 1),
            (1, 2310),
            (23, 30030),
            (1, 1105),
            (734, 692835),
            (336, 312455),
            (35272, 35547765),
            (103905392, 100280245065),
        ],
    ),
];
