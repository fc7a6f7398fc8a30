use exact::parse_rational;

use crate::{DmError, WeightSystem};

/// Parses exponent notation: one or more groups `"(" fraction ")"` with an
/// optional `"^" count`, whitespace-insensitive.
///
/// `"(1/2)(1/3)^4(1/6)"` expands to six weights. Validation of the expanded
/// list (range, total) happens in [`WeightSystem::new`].
pub fn parse_weights(text: &str) -> Result<WeightSystem, DmError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(DmError::Parse("empty weight expression".into()));
    }
    let bytes = s.as_bytes();
    let mut weights = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(DmError::Parse(format!(
                "expected '(' at offset {i} in {s:?}"
            )));
        }
        let close = s[i..]
            .find(')')
            .map(|k| i + k)
            .ok_or_else(|| DmError::Parse(format!("unclosed '(' at offset {i}")))?;
        let w = parse_rational(&s[i + 1..close]).map_err(|e| DmError::Parse(e.to_string()))?;
        i = close + 1;
        let mut exponent = 1usize;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(DmError::Parse(format!("missing exponent digits at offset {start}")));
            }
            exponent = s[start..i]
                .parse()
                .map_err(|e| DmError::Parse(format!("bad exponent: {e}")))?;
            if exponent < 1 {
                return Err(DmError::BadExponent);
            }
        }
        weights.extend(std::iter::repeat(w).take(exponent));
    }
    WeightSystem::new(weights)
}
