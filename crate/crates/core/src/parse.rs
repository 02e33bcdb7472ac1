//! Text literals accepted by the command line.
//!
//! * semigroups: `7,15,18,26,27`, optionally wrapped in `<…>` or `⟨…⟩`
//! * ideals: `gens=5,6` or just `5,6`
//! * family parameters: JSON (`{"b":2,"e":6,"ell":3,"b_table":{"4":6,"5":6}}`),
//!   `b=2,e=6,ell=3,b4=6,b5=6`, or a preset `preset=ex4-1,b=2,e=8`
//!
//! Errors carry the 1-based column (in characters) of the offending input.

use std::collections::BTreeMap;

use crate::error::ParseError;
use crate::family::{FamilyParams, Preset};

fn err(column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        column,
        message: message.into(),
    }
}

/// Comma-separated unsigned integers; `offset` is the 0-based char column of
/// `s` within the original input.
fn number_list(s: &str, offset: usize) -> Result<Vec<u64>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    loop {
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            let what = chars
                .get(i)
                .map_or("end of input".to_string(), |c| format!("{c:?}"));
            return Err(err(
                offset + i + 1,
                format!("expected a number, found {what}"),
            ));
        }
        let digits: String = chars[start..i].iter().collect();
        let value = digits
            .parse::<u64>()
            .map_err(|_| err(offset + start + 1, format!("number {digits} is too large")))?;
        out.push(value);
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        match chars.get(i) {
            None => return Ok(out),
            Some(',') => i += 1,
            Some(c) => return Err(err(offset + i + 1, format!("expected ',' found {c:?}"))),
        }
    }
}

/// Generators of a semigroup literal.
pub fn parse_semigroup_literal(input: &str) -> Result<Vec<u32>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let first = chars
        .iter()
        .position(|c| !c.is_whitespace())
        .unwrap_or(chars.len());
    let last = chars
        .iter()
        .rposition(|c| !c.is_whitespace())
        .map_or(first, |p| p + 1);
    let (mut lo, mut hi) = (first, last);
    if let Some(&open) = chars.get(lo) {
        let close = match open {
            '<' => Some('>'),
            '⟨' => Some('⟩'),
            _ => None,
        };
        if let Some(close) = close {
            if hi <= lo + 1 || chars[hi - 1] != close {
                return Err(err(
                    hi.max(lo + 1) + 1,
                    format!("missing closing {close:?}"),
                ));
            }
            lo += 1;
            hi -= 1;
        }
    }
    let body: String = chars[lo..hi].iter().collect();
    let values = number_list(&body, lo)?;
    values
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| err(lo + 1, format!("generator {v} is too large"))))
        .collect()
}

/// Valuations of an ideal literal, with or without a `gens=` prefix.
pub fn parse_ideal_literal(input: &str) -> Result<Vec<u64>, ParseError> {
    let trimmed = input.trim_start();
    let lead = input.chars().count() - trimmed.chars().count();
    match trimmed.strip_prefix("gens=") {
        Some(rest) => number_list(rest, lead + 5),
        None => number_list(trimmed, lead),
    }
}

/// A family given inline or from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyInput {
    Params(FamilyParams),
    Preset { preset: Preset, b: u32, e: u32 },
}

/// Parses JSON or a `key=value` list.
pub fn parse_family_inline(input: &str) -> Result<FamilyInput, ParseError> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str::<FamilyParams>(trimmed)
            .map(FamilyInput::Params)
            .map_err(|e| {
                let lead = input.chars().count() - input.trim_start().chars().count();
                err(lead + e.column().max(1), e.to_string())
            });
    }

    let mut b = None;
    let mut e = None;
    let mut ell = None;
    let mut preset = None;
    let mut table = BTreeMap::new();
    let mut column = 0;
    for field in input.split(',') {
        let width = field.chars().count();
        let lead = width - field.trim_start().chars().count();
        let col = column + lead + 1;
        let field = field.trim();
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(col, format!("expected key=value, found {field:?}")))?;
        let value_col = col + key.chars().count() + 1;
        let number = || {
            value.trim().parse::<u32>().map_err(|_| {
                err(
                    value_col,
                    format!("expected a number for {key}, found {value:?}"),
                )
            })
        };
        match key.trim() {
            "b" => b = Some(number()?),
            "e" => e = Some(number()?),
            "ell" | "l" | "ℓ" => ell = Some(number()?),
            "preset" => {
                preset = Some(
                    Preset::from_name(value.trim()).map_err(|x| err(value_col, x.to_string()))?,
                )
            }
            k => {
                let n = k
                    .strip_prefix("b_")
                    .or_else(|| k.strip_prefix('b'))
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| err(col, format!("unknown key {k:?}")))?;
                table.insert(n, number()?);
            }
        }
        column += width + 1;
    }
    let end = input.chars().count() + 1;
    let b = b.ok_or_else(|| err(end, "missing b"))?;
    let e = e.ok_or_else(|| err(end, "missing e"))?;
    if let Some(preset) = preset {
        if ell.is_some() || !table.is_empty() {
            return Err(err(
                1,
                "a preset fixes ell and b_n; give only preset, b and e",
            ));
        }
        return Ok(FamilyInput::Preset { preset, b, e });
    }
    let ell = ell.ok_or_else(|| err(end, "missing ell"))?;
    Ok(FamilyInput::Params(FamilyParams {
        b,
        e,
        ell,
        b_table: table,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_literals() {
        assert_eq!(
            parse_semigroup_literal("7,15,18,26,27").unwrap(),
            vec![7, 15, 18, 26, 27]
        );
        assert_eq!(parse_semigroup_literal(" <3, 5> ").unwrap(), vec![3, 5]);
        assert_eq!(
            parse_semigroup_literal("⟨6,13,40,41⟩").unwrap(),
            vec![6, 13, 40, 41]
        );
        let e = parse_semigroup_literal("3,x,5").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_semigroup_literal("3,5,").unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_semigroup_literal("⟨3,5").unwrap_err();
        assert!(e.message.contains("closing"));
        let e = parse_semigroup_literal("3 5").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_semigroup_literal("99999999999").is_err());
    }

    #[test]
    fn ideal_literals() {
        assert_eq!(parse_ideal_literal("gens=5,6").unwrap(), vec![5, 6]);
        assert_eq!(parse_ideal_literal("5, 6").unwrap(), vec![5, 6]);
        assert_eq!(parse_ideal_literal("gens=5,;").unwrap_err().column, 8);
    }

    #[test]
    fn family_key_values() {
        let got = parse_family_inline("b=2,e=6,ell=3,b4=6,b5=6").unwrap();
        assert_eq!(
            got,
            FamilyInput::Params(FamilyParams::new(2, 6, 3, [(4, 6), (5, 6)]))
        );
        let got = parse_family_inline("preset=ex4-1, b=2, e=8").unwrap();
        assert_eq!(
            got,
            FamilyInput::Preset {
                preset: Preset::Ex4_1,
                b: 2,
                e: 8
            }
        );
        let e = parse_family_inline("b=2,e=x,ell=3").unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse_family_inline("b=2,e=6,zz=3").unwrap_err();
        assert_eq!(e.column, 9);
        assert!(parse_family_inline("b=2,e=6")
            .unwrap_err()
            .message
            .contains("ell"));
    }

    #[test]
    fn family_json() {
        let got = parse_family_inline(r#"{"b": 2, "e": 6, "ell": 3, "b_table": {"4": 6, "5": 6}}"#)
            .unwrap();
        assert_eq!(
            got,
            FamilyInput::Params(FamilyParams::new(2, 6, 3, [(4, 6), (5, 6)]))
        );
        assert!(parse_family_inline(r#"{"b": 2, "e": }"#).is_err());
    }
}
