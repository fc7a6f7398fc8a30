use std::fmt;

use crate::DMClassification;

/// Which quadratic ring the associated arithmetic group lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingTag {
    Eisenstein,
    Gaussian,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Eisenstein => write!(f, "Eisenstein"),
            RingTag::Gaussian => write!(f, "Gaussian"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub input: &'static str,
    pub expected: DMClassification,
    pub ring: RingTag,
}

fn row(input: &'static str, m: Option<usize>, ring: RingTag) -> TableRow {
    let expected = match m {
        None => DMClassification::Int,
        Some(m) => DMClassification::SigmaInt(m),
    };
    TableRow { input, expected, ring }
}

/// The 36 Eisenstein and 6 Gaussian weight systems with their published
/// verdicts: a blank symmetrization entry means the strict condition holds,
/// otherwise the entry is the order m of the symmetric group quotient.
pub fn builtin_tables() -> Vec<TableRow> {
    use RingTag::{Eisenstein, Gaussian};
    vec![
        row("(1/6)^12", Some(12), Eisenstein),
        row("(1/3)(1/6)^10", Some(10), Eisenstein),
        row("(1/2)(1/6)^9", Some(9), Eisenstein),
        row("(1/3)^2(1/6)^8", Some(8), Eisenstein),
        row("(2/3)(1/6)^8", Some(8), Eisenstein),
        row("(1/2)(1/3)(1/6)^7", Some(7), Eisenstein),
        row("(1/3)^3(1/6)^6", Some(6), Eisenstein),
        row("(1/3)^4(1/6)^4", Some(4), Eisenstein),
        row("(1/2)(1/3)^2(1/6)^5", Some(5), Eisenstein),
        row("(1/2)^2(1/6)^6", Some(6), Eisenstein),
        row("(2/3)(1/3)(1/6)^6", Some(6), Eisenstein),
        row("(5/6)(1/6)^7", Some(7), Eisenstein),
        row("(5/6)(1/3)(1/6)^5", Some(5), Eisenstein),
        row("(2/3)(1/3)^2(1/6)^4", Some(4), Eisenstein),
        row("(2/3)(1/2)(1/6)^5", Some(5), Eisenstein),
        row("(1/2)^2(1/3)(1/6)^4", Some(4), Eisenstein),
        row("(1/2)(1/3)^3(1/6)^3", Some(3), Eisenstein),
        row("(1/3)^5(1/6)^2", Some(2), Eisenstein),
        row("(5/6)(1/2)(1/6)^4", Some(4), Eisenstein),
        row("(5/6)(1/3)^2(1/6)^3", Some(3), Eisenstein),
        row("(2/3)(1/3)^3(1/6)^2", Some(2), Eisenstein),
        row("(2/3)(1/2)(1/3)(1/6)^3", Some(3), Eisenstein),
        row("(2/3)^2(1/6)^4", Some(4), Eisenstein),
        row("(1/2)^3(1/6)^3", Some(3), Eisenstein),
        row("(1/2)^2(1/3)^2(1/6)^2", Some(2), Eisenstein),
        row("(1/2)(1/3)^4(1/6)", None, Eisenstein),
        row("(1/3)^6", None, Eisenstein),
        row("(2/3)(1/3)^4", None, Eisenstein),
        row("(1/2)^2(1/3)^3", None, Eisenstein),
        row("(1/2)^3(1/3)(1/6)", None, Eisenstein),
        row("(2/3)^2(1/3)(1/6)^2", Some(2), Eisenstein),
        row("(2/3)(1/2)^2(1/6)^2", Some(2), Eisenstein),
        row("(2/3)(1/2)(1/3)^2(1/6)", None, Eisenstein),
        row("(5/6)(1/3)^3(1/6)", None, Eisenstein),
        row("(5/6)(1/2)(1/3)(1/6)^2", Some(2), Eisenstein),
        row("(5/6)(2/3)(1/6)^3", Some(3), Eisenstein),
        row("(1/4)^8", None, Gaussian),
        row("(1/2)(1/4)^6", None, Gaussian),
        row("(3/4)(1/4)^5", None, Gaussian),
        row("(1/2)^2(1/4)^4", None, Gaussian),
        row("(3/4)(1/2)(1/4)^3", None, Gaussian),
        row("(1/2)^3(1/4)^2", None, Gaussian),
    ]
}
