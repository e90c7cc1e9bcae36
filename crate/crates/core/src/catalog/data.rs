//! Case templates as text. Parameters appear as the letters `a`, `b`, `c`;
//! `T1`..`T5` stand for the submaximal Pfaffians of the case's skew matrix.

use super::CaseId;

pub(crate) enum StructureT {
    /// Entries `A, B, C, D` of the 5x5 skew matrix and whether the `y` entries
    /// of the second family are present.
    Skew { abcd: [&'static str; 4], second_family: bool },
    /// First row of the 2x4 matrix `[[x, A, B, C], [0, r, z, w]]` and the entry `r`.
    Minors { abc: [&'static str; 3], r: &'static str },
}

pub(crate) enum RhsT {
    J,
    JPlus(&'static [&'static str]),
    Explicit(&'static [&'static str]),
}

pub(crate) enum ClaimT {
    Colon { by: &'static str, rhs: RhsT },
    Member(&'static str),
    Regular(&'static [&'static str]),
}

pub(crate) struct Template {
    pub dual: &'static str,
    pub ideal_i: &'static [&'static str],
    pub ideal_j: &'static [&'static str],
    pub structure: StructureT,
    /// Closed forms of the nonzero Pfaffians, as `(index, text)`.
    pub pfaffians: &'static [(usize, &'static str)],
    pub phi: &'static [&'static str],
    /// Regular sequences inside the ideals of minors, keyed by differential index.
    pub witnesses: &'static [(i32, &'static [&'static str])],
    pub claims: &'static [ClaimT],
    /// `T5 = ...` in terms of the other Pfaffians.
    pub t5_identity: Option<&'static str>,
}

const WITNESSES_I: &[(i32, &[&str])] = &[(1, &["x^2", "T1", "T2"]), (2, &["x^4", "z*w^2*T2^2"]), (3, &["x^2", "w*T1", "z*T5"])];

pub(crate) fn template(id: CaseId) -> Template {
    use CaseId::*;
    match id {
        Ia => Template {
            dual: "X*Y[2] + Y*(a*Z[2] + Z*W + b*W[2]) + Z[3] + W[3]",
            ideal_i: &[
                "x^2",
                "x*z",
                "x*w",
                "x*y - z*w",
                "y*z - a*z^2 + (a^2 + b)*z*w - w^2",
                "y*w - z^2 + (a + b^2)*z*w - b*w^2",
                "y^3",
            ],
            ideal_j: &["x^2", "x*z", "x*w", "y*z - a*z^2 + (a^2 + b)*z*w - w^2", "y*w - z^2 + (a + b^2)*z*w - b*w^2"],
            structure: StructureT::Skew { abcd: ["y - b*w", "z - (a + b^2)*w", "(a^2 + b)*z - w", "-y + a*z"], second_family: false },
            pfaffians: &[
                (1, "y*z - a*z^2 + (a^2 + b)*z*w - w^2"),
                (2, "y*w - z^2 + (a + b^2)*z*w - b*w^2"),
                (5, "y^2 - a*y*z - b*y*w + (a^2 + b)*z^2 - (a^3 + a^2*b^2 + b^3 + 1)*z*w + (a + b^2)*w^2"),
            ],
            phi: &["x*y - z*w", "y^3 + (a*b - 1)^2*y*(x*y - z*w)"],
            witnesses: WITNESSES_I,
            claims: &[
                ClaimT::Colon { by: "z", rhs: RhsT::Explicit(&["x", "T1", "T2", "T5"]) },
                ClaimT::Colon { by: "z*w", rhs: RhsT::Explicit(&["x", "T1", "T2", "T5"]) },
                ClaimT::Colon { by: "x*y - z*w", rhs: RhsT::JPlus(&["x"]) },
                ClaimT::Regular(&["x^2", "T1", "T2"]),
                ClaimT::Regular(&["x^4", "z*w^2*T2^2"]),
                ClaimT::Regular(&["x^2", "w*T1", "z*T5"]),
            ],
            t5_identity: Some("y^2 - a*T1 - b*T2 - (a*b - 1)^2*z*w"),
        },
        Ib => Template {
            dual: "X*Y[2] + Y*(Z[2] + a*Z*W) + Z*W[2]",
            ideal_i: &["x^2", "x*z", "x*w", "x*y - z^2", "y*z + a^2*z^2 - a*z*w - w^2", "y*w - a*w^2", "y^3"],
            ideal_j: &["x^2", "x*z", "x*w", "y*z + a^2*z^2 - a*z*w - w^2", "y*w - a*w^2"],
            structure: StructureT::Skew { abcd: ["y - a*w", "0", "-a*z - w", "-y - a^2*z"], second_family: false },
            pfaffians: &[
                (1, "y*z + a^2*z^2 - a*z*w - w^2"),
                (2, "y*w - a*w^2"),
                (5, "y^2 + a^2*y*z - a*y*w - a^3*z*w"),
            ],
            phi: &["x*y - z^2", "y^3 + a^4*y*(x*y - z^2)"],
            witnesses: WITNESSES_I,
            claims: &[
                ClaimT::Colon { by: "z", rhs: RhsT::Explicit(&["x", "T1", "T2", "T5"]) },
                ClaimT::Colon { by: "z^2", rhs: RhsT::Explicit(&["x", "T1", "T2", "T5"]) },
                ClaimT::Colon { by: "x*y - z^2", rhs: RhsT::JPlus(&["x"]) },
                ClaimT::Regular(&["x^2", "T1", "T2"]),
                ClaimT::Regular(&["x^4", "z*w^2*T2^2"]),
                ClaimT::Regular(&["x^2", "w*T1", "z*T5"]),
            ],
            t5_identity: Some("y^2 + a^2*T1 - a*T2 - a^4*z^2"),
        },
        IIa => Template {
            dual: "X[3] + Y[2]*Z - a*Z[2]*W + (a + 1)*Z*W[2] - 3*W[3]",
            ideal_i: &[
                "x*y",
                "x*z",
                "x*w",
                "y*w",
                "a^2*y^2 + a*z*w + (a + 1)*z^2",
                "z^2 + a*(a + 1)*b*z*w + a^2*b*w^2",
                "x^3 - y^2*z",
            ],
            ideal_j: &["x*y", "x*z", "x*w", "y*w", "a^2*y^2 + a*z*w + (a + 1)*z^2"],
            structure: StructureT::Skew { abcd: ["y", "0", "z/a", "-(a + 1)/a^2*z"], second_family: true },
            pfaffians: &[(1, "y^2 + (a + 1)/a^2*z^2 + z*w/a"), (2, "y*w"), (4, "-y^2"), (5, "(a + 1)/a^2*y*z")],
            phi: &["z^2 + (a^2*b + a*b)*z*w + a^2*b*w^2", "x^3 - y^2*z"],
            witnesses: &[(2, &["x^2*z^2", "w*T2^2"])],
            claims: &[ClaimT::Colon { by: "z^2 + a*b*(a + 1)*z*w + a^2*b*w^2", rhs: RhsT::JPlus(&["x"]) }],
            t5_identity: None,
        },
        IIb => Template {
            // `s` is the sign of `w^3` in the cubic generator and `e` the
            // orientation of the cubic component of φ, both fixed at load time.
            dual: "X[3] + Y*Z*W - Z[3] + W[3]",
            ideal_i: &["x*y", "x*z", "x*w", "y^2", "y*z - w^2", "y*w + z^2", "x^3 + s*w^3"],
            ideal_j: &["x*y", "x*z", "x*w", "y^2", "y*z - w^2"],
            structure: StructureT::Skew { abcd: ["-w", "-y", "0", "0"], second_family: true },
            pfaffians: &[(1, "y^2"), (2, "y*z - w^2"), (3, "y^2"), (4, "y*w")],
            phi: &["z^2 + y*w", "e*(x^3 + s*w^3)"],
            witnesses: &[(2, &["x^2*z^2", "w*T2^2"])],
            claims: &[ClaimT::Colon { by: "y*w + z^2", rhs: RhsT::JPlus(&["x"]) }],
            t5_identity: None,
        },
        IIc => Template {
            dual: "X[3] + Y[3] + Y*Z[2] - Y*W[2]",
            ideal_i: &["x*y", "x*z", "x*w", "y^2 + w^2", "z^2 + w^2", "z*w", "x^3 - y*z^2"],
            ideal_j: &["x*y", "x*z", "x*w", "y^2 + w^2", "z*w"],
            structure: StructureT::Skew { abcd: ["z", "0", "w", "0"], second_family: true },
            pfaffians: &[(1, "y^2 + w^2"), (2, "z*w"), (4, "-y*z")],
            phi: &["z^2 + w^2", "x^3 - y*z^2"],
            witnesses: &[(2, &["x^2*y^2", "z*T2^2"])],
            claims: &[ClaimT::Colon { by: "z^2 + w^2", rhs: RhsT::JPlus(&["x"]) }],
            t5_identity: None,
        },
        IId => Template {
            dual: "X[3] + Y*Z*W",
            ideal_i: &["x*y", "x*z", "x*w", "y^2", "z^2", "w^2", "x^3 - y*z*w"],
            ideal_j: &["x*y", "x*z", "x*w", "y^2", "w^2"],
            structure: StructureT::Skew { abcd: ["w", "0", "0", "0"], second_family: true },
            pfaffians: &[(1, "y^2"), (2, "w^2"), (4, "-y*w")],
            phi: &["z^2", "x^3 - y*z*w"],
            witnesses: &[(2, &["x^2*z^2", "w*T2^2"])],
            claims: &[ClaimT::Colon { by: "z^2", rhs: RhsT::JPlus(&["x"]) }],
            t5_identity: None,
        },
        IIIa => Template {
            dual: "X*Y[2] + Y*Z*W + Z*W[2]",
            ideal_i: &["x^2", "x*z", "x*w", "x*y + y*z - z*w", "y*w - w^2", "z^2", "y^2*z", "y^3", "w^3"],
            ideal_j: &["x^2", "x*z", "x*w", "x*y + y*z - z*w", "y*w - w^2", "z^2"],
            structure: StructureT::Minors { abc: ["y - w", "-y + w", "-z"], r: "x" },
            pfaffians: &[],
            phi: &["w^3", "y^2*z", "y^3 - w^3"],
            witnesses: &[(2, &["x^5", "z^5"]), (3, &["x^3", "z^3", "y*w^2 - w^3"])],
            claims: &[ClaimT::Colon { by: "y", rhs: RhsT::J }],
            t5_identity: None,
        },
        IIIb => Template {
            dual: "X*Y[2] + Y*(Z[2] + a*Z*W + b*W[2]) + W[3]",
            ideal_i: &[
                "x^2",
                "x*z",
                "x*w",
                "x*y - z^2",
                "a*z^2 - z*w",
                "a*y*z - y*w + b*(a^2 - b)*z^2 + (b - a^2)*w^2",
                "x*y^2 - w^3",
                "y^3",
                "y^2*z",
            ],
            ideal_j: &["x^2", "x*z", "x*w", "x*y - z^2", "a*z^2 - z*w", "a*y*z - y*w + b*(a^2 - b)*z^2 + (b - a^2)*w^2"],
            structure: StructureT::Minors { abc: ["z", "y + (a^2 - b)*w", "a*y + b*(a^2 - b)*z"], r: "x" },
            pfaffians: &[],
            phi: &["w^3 - x*y^2", "a*c*(w^3 - x*y^2) + y^2*z", "b*c^2*(w^3 - x*y^2) - y^3"],
            witnesses: &[(2, &["x^5", "a*z^5 - z^4*w"]), (3, &["x^3", "z^3", "a^2*w^3 - a*y*z*w - b*w^3 + y*w^2"])],
            claims: &[
                ClaimT::Member("z^3"),
                ClaimT::Member("z^2*w"),
                ClaimT::Member("z*w^2"),
                ClaimT::Member("a*x*y^2 - y*z*w"),
                ClaimT::Member("x*(w^3 - x*y^2)"),
                ClaimT::Member("z*(w^3 - x*y^2)"),
                ClaimT::Member("(y + c*w)*(w^3 - x*y^2) + x*y^3"),
                ClaimT::Member("y*w^3 + c*w^4"),
                ClaimT::Member("y^2*w^2 - a^2*y^2*z^2 - c^2*w^4"),
                ClaimT::Colon { by: "z^2", rhs: RhsT::Explicit(&["x", "z", "w"]) },
                ClaimT::Colon { by: "w^3 - x*y^2", rhs: RhsT::JPlus(&["x", "z"]) },
            ],
            t5_identity: None,
        },
        IIIc => Template {
            dual: "X*Y[2] + Y*(Z*W + a*W[2]) + W[3]",
            ideal_i: &["x^2", "x*z", "x*w", "x*y - z*w", "z^2", "a*x*y + y*z - w^2", "y^3", "y^2*w", "y*w^2 - a*w^3"],
            ideal_j: &["x^2", "x*z", "x*w", "x*y - z*w", "z^2", "a*x*y + y*z - w^2"],
            structure: StructureT::Minors { abc: ["z", "w", "y + a*w"], r: "x" },
            pfaffians: &[],
            phi: &["y*w^2 - a*w^3", "-y^2*w", "a*y^2*w + y^3"],
            witnesses: &[(2, &["x^5", "z^5"]), (3, &["x^3", "z^3", "x*y^2 - w^3"])],
            claims: &[
                ClaimT::Member("z*w^2"),
                ClaimT::Member("(-y*z + w^2)*w"),
                ClaimT::Member("w^4"),
                ClaimT::Colon { by: "w", rhs: RhsT::JPlus(&["x"]) },
            ],
            t5_identity: None,
        },
        IIId => Template {
            dual: "X*Y[2] + Z*W[2]",
            ideal_i: &["x^2", "x*z", "x*w", "y*z", "y*w", "z^2", "y^3", "x*y^2 - z*w^2", "w^3"],
            ideal_j: &["x^2", "x*z", "x*w", "y*z", "y*w", "z^2"],
            structure: StructureT::Minors { abc: ["y", "0", "z"], r: "x" },
            pfaffians: &[],
            phi: &["w^3", "x*y^2 - z*w^2", "-y^3"],
            witnesses: &[(2, &["x^5", "z^5"]), (3, &["x^3", "z^3", "y*w^2"])],
            claims: &[],
            t5_identity: None,
        },
        IVa => Template {
            dual: "X[3] + Y[2]*Z - a*Z[2]*W + (a + 1)*Z*W[2] - 3*W[3]",
            ideal_i: &[
                "x*y",
                "x*z",
                "x*w",
                "y*w",
                "y^2 - (a - 1)*z*w - (2*a - 1)*z^2",
                "(2*a - 1)*z*w + (a - 1)*w^2",
                "3*x^3 + w^3",
                "y^3",
                "z^3",
            ],
            ideal_j: &["x*y", "x*z", "x*w", "y*w", "y^2 - (a - 1)*z*w - (2*a - 1)*z^2", "(2*a - 1)*z*w + (a - 1)*w^2"],
            structure: StructureT::Minors { abc: ["(2*a - 1)*z + (a - 1)*w", "y", "0"], r: "y" },
            pfaffians: &[],
            phi: &["-3*z^3", "-(2*a - 1)*y^3", "3*x^3 + w^3 - 3*(2*a - 1)*z^3"],
            witnesses: &[
                (1, &["x*z + x*w", "y*w", "y^2 - (a - 1)*z*w - (2*a - 1)*z^2"]),
                (2, &["x^2*z^3", "y^3*w^2"]),
                (3, &["x^2*z + x^2*w", "y*w^2", "(y - z)*(y^2 - (a - 1)*z*w - (2*a - 1)*z^2)"]),
            ],
            claims: &[
                ClaimT::Member("y^3 - (2*a - 1)*y*z^2"),
                ClaimT::Member("w^4 - 3*(2*a - 1)*z^3*w"),
                ClaimT::Member("z*w^3 + 3*(a - 1)*z^3*w"),
                ClaimT::Member("y^4 + (a + 1)*z^3*w + 3*z^4"),
                ClaimT::Member("(2*a - 1)*y^4 - z*w^3 + 3*(2*a - 1)*z^4"),
                ClaimT::Colon { by: "z", rhs: RhsT::JPlus(&["x"]) },
            ],
            t5_identity: None,
        },
        IVb => Template {
            dual: "X[3] + Y*Z[2] + W[3]",
            ideal_i: &["x*y", "x*z", "x*w", "y^2", "y*w", "z*w", "x^3 - w^3", "y*z^2 - w^3", "z^3"],
            ideal_j: &["x*y", "x*z", "x*w", "y^2", "y*w", "z*w"],
            structure: StructureT::Minors { abc: ["0", "y", "w"], r: "y" },
            pfaffians: &[],
            phi: &["-y*z^2 - z^3 + w^3", "y*z^2 - w^3", "-x^3 + w^3"],
            witnesses: &[(1, &["y^2", "z*w", "x*z + x*w"]), (2, &["y^5", "z^3*w^2"]), (3, &["y^3", "z^2*w", "x^2*z + x^2*w"])],
            claims: &[ClaimT::Colon { by: "-y*z^2 - z^3 + w^3", rhs: RhsT::JPlus(&["x"]) }],
            t5_identity: None,
        },
        IVc => Template {
            dual: "X[3] + Y[2]*Z + Y*W[2]",
            ideal_i: &["x*y", "x*z", "x*w", "y*z - w^2", "z^2", "z*w", "x^3 - y^2*z", "y^3", "y^2*w"],
            ideal_j: &["x*y", "x*z", "x*w", "y*z - w^2", "z^2", "z*w"],
            structure: StructureT::Minors { abc: ["w", "0", "z"], r: "y" },
            pfaffians: &[],
            phi: &["-y^3", "y^2*w", "x^3 - y^2*z"],
            witnesses: &[(1, &["x*y", "z^2", "y*z - w^2"]), (2, &["x^2*y^3", "z^5"]), (3, &["x*y^2", "z^3", "w^3"])],
            claims: &[ClaimT::Colon { by: "y", rhs: RhsT::JPlus(&["x"]) }],
            t5_identity: None,
        },
        Q6 => unreachable!("the quadratic case has no text template"),
    }
}
