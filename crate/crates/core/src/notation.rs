//! Compact labels for points and weights.
//!
//! Points are 1-indexed. Labels 10, 11 and 12 print as `α`, `β`, `γ` and also
//! parse from `A`, `B`, `C` (or `a`, `b`, `c`). A point set on at most twelve
//! points prints as a run of labels (`148γ`); larger labels fall back to a
//! comma list in braces.

use crate::error::{Error, Result};

const GREEK: [char; 3] = ['α', 'β', 'γ'];

/// Label for the 1-based point `p`.
pub fn point_label(p: usize) -> String {
    match p {
        1..=9 => p.to_string(),
        10..=12 => GREEK[p - 10].to_string(),
        _ => p.to_string(),
    }
}

/// Value of a single-character label, or `None`.
pub fn label_value(c: char) -> Option<usize> {
    match c {
        '0'..='9' => c.to_digit(10).map(|d| d as usize),
        'α' | 'A' | 'a' => Some(10),
        'β' | 'B' | 'b' => Some(11),
        'γ' | 'C' | 'c' => Some(12),
        _ => None,
    }
}

/// Formats a set of 0-based points with 1-based labels.
pub fn format_set(points: &[usize]) -> String {
    if points.iter().all(|&p| p < 12) {
        points.iter().map(|&p| point_label(p + 1)).collect()
    } else {
        let parts: Vec<String> = points.iter().map(|&p| (p + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Parses a compact point set such as `148γ` or a comma list `1,4,8,12`;
/// returns sorted 0-based indices.
pub fn parse_set(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut out: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{t}` in `{s}`"))))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| label_value(c).ok_or_else(|| Error::Parse(format!("bad point label `{c}` in `{s}`"))))
            .collect::<Result<_>>()?
    };
    if out.iter().any(|&p| p == 0) {
        return Err(Error::Parse(format!("points are 1-indexed: `{s}`")));
    }
    for p in &mut out {
        *p -= 1;
    }
    out.sort_unstable();
    let len = out.len();
    out.dedup();
    if out.len() != len {
        return Err(Error::Parse(format!("repeated point in `{s}`")));
    }
    Ok(out)
}

/// Splits a weight string into integer tokens. Comma lists are taken
/// verbatim (signs and fractions allowed); a compact string is read one
/// character per entry, with `α`/`β`/`γ` standing for 10, 11, 12.
pub fn weight_tokens(s: &str) -> Result<Vec<String>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty weight".into()));
    }
    if s.contains(',') || s.contains(' ') {
        return Ok(s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect());
    }
    s.chars()
        .map(|c| {
            label_value(c)
                .map(|v| v.to_string())
                .ok_or_else(|| Error::Parse(format!("bad weight digit `{c}` in `{s}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greek_labels_roundtrip() {
        let set = parse_set("148γ").unwrap();
        assert_eq!(set, vec![0, 3, 7, 11]);
        assert_eq!(format_set(&set), "148γ");
        assert_eq!(parse_set("17A").unwrap(), vec![0, 6, 9]);
        assert_eq!(parse_set("1,2,13").unwrap(), vec![0, 1, 12]);
        assert_eq!(format_set(&[0, 12]), "{1,13}");
    }

    #[test]
    fn weight_strings() {
        assert_eq!(weight_tokens("0011110").unwrap().len(), 7);
        assert_eq!(weight_tokens("5,3,-1").unwrap(), vec!["5", "3", "-1"]);
        assert!(weight_tokens("01x").is_err());
        assert!(parse_set("0").is_err());
        assert!(parse_set("11").is_err());
    }
}
