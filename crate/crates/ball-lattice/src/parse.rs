use exact::{BigInt, GaussianInt, Matrix};

use crate::LatticeError;

fn parse_int(text: &str, whole: &str) -> Result<BigInt, LatticeError> {
    text.parse::<BigInt>().map_err(|_| LatticeError::Parse(whole.into()))
}

/// Parses a Gaussian integer from forms like "3", "-2", "i", "-i", "2i",
/// "1-i", "-4+3i".  Whitespace is ignored.
pub fn parse_gaussian(text: &str) -> Result<GaussianInt, LatticeError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(LatticeError::Parse(text.into()));
    }
    if !s.contains('i') {
        return Ok(GaussianInt { re: parse_int(&s, text)?, im: BigInt::from(0) });
    }
    // The imaginary term is the tail; a sign after position 0 separates it
    // from a leading real term.
    let split = s.rmatch_indices(['+', '-']).map(|(p, _)| p).find(|&p| p > 0);
    let (re_str, im_str) = match split {
        Some(p) => (&s[..p], &s[p..]),
        None => ("", s.as_str()),
    };
    let im_str = im_str.strip_suffix('i').ok_or_else(|| LatticeError::Parse(text.into()))?;
    let im = match im_str {
        "" | "+" => BigInt::from(1),
        "-" => BigInt::from(-1),
        _ => parse_int(im_str, text)?,
    };
    let re = if re_str.is_empty() { BigInt::from(0) } else { parse_int(re_str, text)? };
    Ok(GaussianInt { re, im })
}

/// Reads a Gaussian matrix from a JSON array of rows of scalar strings,
/// e.g. `[["-1", "1-i"], ["0", "1"]]`.
pub fn gaussian_matrix_from_json(text: &str) -> Result<Matrix<GaussianInt>, LatticeError> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| LatticeError::Parse(e.to_string()))?;
    let parsed = rows
        .into_iter()
        .map(|row| row.iter().map(|s| parse_gaussian(s)).collect())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(LatticeError::from)
}
