//! The nine tritangent planes that together contain all 27 lines once.

/// A tritangent plane together with the three coplanar lines it contains,
/// in Schlafli's labeling of the 27 lines (a_i the exceptional divisors,
/// b_i the conics, c_ij the lines through pairs of blown-up points).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TritangentTriple {
    /// Weyl-group style name, "(16)" or "(12,34,56)".
    pub weyl: &'static str,
    /// Cayley's name for the plane, e.g. "(w)" or "(thetabar)".
    pub cayley: &'static str,
    /// Schlafli labels of the three lines in the plane.
    pub lines: [&'static str; 3],
}

/// Nine tritangent planes partitioning the 27 lines into coplanar triples.
///
/// The triples are pairwise disjoint and their union is all 27 Schlafli
/// labels, which exhibits the sum of the lines as nine hyperplane sections.
pub fn tritangent_partition() -> [TritangentTriple; 9] {
    let t = |weyl, cayley, l1, l2, l3| TritangentTriple {
        weyl,
        cayley,
        lines: [l1, l2, l3],
    };
    [
        t("(16)", "(w)", "a1", "b6", "c16"),
        t("(12,34,56)", "(theta)", "c12", "c34", "c56"),
        t("(52)", "(thetabar)", "a5", "b2", "c25"),
        t("(64)", "(lbar)", "a6", "b4", "c46"),
        t("(15,24,36)", "(mbar)", "c15", "c24", "c36"),
        t("(23)", "(nbar)", "a2", "b3", "c23"),
        t("(45)", "(l)", "a4", "b5", "c45"),
        t("(14,26,35)", "(m)", "c14", "c26", "c35"),
        t("(31)", "(n)", "a3", "b1", "c13"),
    ]
}
