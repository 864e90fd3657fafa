use std::str::FromStr;

use crate::CliError;

/// Parses "A..B" or "A..=B" (both inclusive), or a single value "A".
pub fn parse_range<T: FromStr + Copy>(s: &str) -> Result<(T, T), CliError> {
    let bad = || CliError::Usage(format!("bad range {s:?}; expected A..B"));
    let value = |t: &str| t.trim().parse::<T>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok((value(a)?, value(b.strip_prefix('=').unwrap_or(b))?)),
        None => {
            let v = value(s)?;
            Ok((v, v))
        }
    }
}

pub fn parse_usize_range(s: &str) -> Result<(usize, usize), CliError> {
    parse_range(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_usize_range("3..8").unwrap(), (3, 8));
        assert_eq!(parse_usize_range("3..=8").unwrap(), (3, 8));
        assert_eq!(parse_usize_range("5").unwrap(), (5, 5));
        assert_eq!(parse_range::<f64>("0.2..0.8").unwrap(), (0.2, 0.8));
        assert!(parse_usize_range("a..b").is_err());
        assert!(parse_usize_range("3...8").is_err());
    }
}
