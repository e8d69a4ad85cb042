//! Braid words in the Artin generators.
//!
//! Letter `k > 0` is `σ_k` and `k < 0` is `σ_{-k}^{-1}`. Two text notations
//! are accepted: knot-table brace lists (`{1,1,-2,1,3,2,2,2,3}`) and word
//! syntax (`s1^2 s2^-1 s1 s3 s2^3 s3`, also `σ_1^2σ_2^{-1}`).

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::IndexOutOfRange { index: strands as i64, strands });
        }
        if let Some(&bad) = letters.iter().find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands) {
            return Err(Error::IndexOutOfRange { index: bad as i64, strands });
        }
        Ok(Self { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    /// The braid with every crossing flipped (the mirror image of the closure).
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(|k| -k).collect() }
    }

    /// Where the strand starting at position `i` ends up, for each `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut dest = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            dest[strand] = pos;
        }
        dest
    }

    /// Number of components of the closure: cycles of the permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// `{1,1,-2}`.
    pub fn to_brace_string(&self) -> String {
        let mut s = String::from("{");
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{k}").unwrap();
        }
        s.push('}');
        s
    }

    /// `s1^2 s2^-1`, grouping runs of equal letters.
    pub fn to_word_string(&self) -> String {
        let mut s = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let k = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&x| x == k).count();
            if !s.is_empty() {
                s.push(' ');
            }
            let exp = if k < 0 { -(run as i64) } else { run as i64 };
            write!(s, "s{}", k.unsigned_abs()).unwrap();
            if exp != 1 {
                write!(s, "^{exp}").unwrap();
            }
            i += run;
        }
        s
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_brace_string())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s, None)
    }
}

/// Parses either notation. Without `strands` the count is `1 + max |k|`.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let trimmed = text.trim();
    let letters = match trimmed.chars().next() {
        None => Vec::new(),
        Some('{') | Some('[') => parse_brace(text)?,
        Some(_) => parse_word(text)?,
    };
    let inferred = letters.iter().map(|k| k.unsigned_abs() as usize + 1).max();
    match (strands, inferred) {
        (None, None) => Err(Error::EmptyInput),
        (None, Some(n)) => BraidWord::new(n, letters),
        (Some(n), _) => BraidWord::new(n, letters),
    }
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax { pos, msg: msg.to_string() }
}

fn parse_brace(text: &str) -> Result<Vec<i32>> {
    let start = text.find(['{', '[']).unwrap();
    let close = if text[start..].starts_with('{') { '}' } else { ']' };
    let end = text.rfind(close).ok_or_else(|| syntax(text.len(), "missing closing bracket"))?;
    if let Some((i, _)) = text[end + 1..].char_indices().find(|(_, c)| !c.is_whitespace()) {
        return Err(syntax(end + 1 + i, "trailing characters after braid"));
    }
    let body = &text[start + 1..end];
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    let mut offset = start + 1;
    for item in body.split(',') {
        let lead = item.len() - item.trim_start().len();
        let k: i32 = item
            .trim()
            .parse()
            .map_err(|_| syntax(offset + lead, "expected a nonzero integer"))?;
        if k == 0 {
            return Err(syntax(offset + lead, "generator index 0"));
        }
        letters.push(k);
        offset += item.len() + 1;
    }
    Ok(letters)
}

fn parse_word(text: &str) -> Result<Vec<i32>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
        .collect();
    let mut pos = 0;
    let mut letters = Vec::new();
    let at = |p: usize| chars.get(p).map_or(text.len(), |&(i, _)| i);
    let number = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while chars.get(*pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            *pos += 1;
        }
        let s: String = chars[start..*pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    };
    while pos < chars.len() {
        if !matches!(chars[pos].1, 's' | 'S' | 'σ') {
            return Err(syntax(at(pos), "expected generator 's<k>'"));
        }
        pos += 1;
        if chars.get(pos).is_some_and(|&(_, c)| c == '_') {
            pos += 1;
        }
        let braced = chars.get(pos).is_some_and(|&(_, c)| c == '{');
        if braced {
            pos += 1;
        }
        let index = number(&mut pos).ok_or_else(|| syntax(at(pos), "expected generator index"))?;
        if braced {
            if chars.get(pos).map(|&(_, c)| c) != Some('}') {
                return Err(syntax(at(pos), "expected '}'"));
            }
            pos += 1;
        }
        if index == 0 || index > i32::MAX as i64 {
            return Err(syntax(at(pos), "generator index out of range"));
        }
        let mut exp = 1i64;
        if chars.get(pos).is_some_and(|&(_, c)| c == '^') {
            pos += 1;
            let braced = chars.get(pos).is_some_and(|&(_, c)| c == '{');
            if braced {
                pos += 1;
            }
            let neg = match chars.get(pos).map(|&(_, c)| c) {
                Some('-') => {
                    pos += 1;
                    true
                }
                Some('+') => {
                    pos += 1;
                    false
                }
                _ => false,
            };
            let e = number(&mut pos).ok_or_else(|| syntax(at(pos), "expected exponent"))?;
            if braced {
                if chars.get(pos).map(|&(_, c)| c) != Some('}') {
                    return Err(syntax(at(pos), "expected '}'"));
                }
                pos += 1;
            }
            if e > 4096 {
                return Err(syntax(at(pos), "exponent too large"));
            }
            exp = if neg { -e } else { e };
        }
        let letter = if exp < 0 { -(index as i32) } else { index as i32 };
        letters.extend(core::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    Ok(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_word_notation() {
        let w = parse_braid("s1^2 s2^-1 s1 s3 s2^3 s3", None).unwrap();
        assert_eq!(w.letters(), &[1, 1, -2, 1, 3, 2, 2, 2, 3]);
        assert_eq!(w.strands(), 4);
        let typeset = parse_braid("σ_1^2σ_2^{-1}σ_1σ_3σ_2^3σ_3", None).unwrap();
        assert_eq!(typeset, w);
    }

    #[test]
    fn parses_brace_notation() {
        let w = parse_braid("{1,1,1}", None).unwrap();
        assert_eq!((w.strands(), w.letters()), (2, &[1, 1, 1][..]));
        let w = parse_braid(" { -3, -2 ,1 } ", None).unwrap();
        assert_eq!((w.strands(), w.letters()), (4, &[-3, -2, 1][..]));
        assert_eq!(parse_braid("[1,-2]", Some(5)).unwrap().strands(), 5);
    }

    #[test]
    fn empty_braid_needs_strand_count() {
        assert_eq!(parse_braid("", Some(3)).unwrap(), BraidWord::identity(3).unwrap());
        assert_eq!(parse_braid("{}", Some(2)).unwrap().len(), 0);
        assert_eq!(parse_braid("", None), Err(Error::EmptyInput));
        assert_eq!(parse_braid("  {  } ", None), Err(Error::EmptyInput));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_braid("{1,3}", Some(3)),
            Err(Error::IndexOutOfRange { index: 3, strands: 3 })
        );
        assert!(matches!(parse_braid("{1,x}", None), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_braid("{1,0}", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse_braid("{1,2", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse_braid("{1} 2", None), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_braid("s1 t2", None), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_braid("s0", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse_braid("s1^", None), Err(Error::Syntax { .. })));
        assert!(BraidWord::new(1, vec![]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(parse_braid("{1,1,1}", None).unwrap().closure_components(), 1);
        assert_eq!(BraidWord::identity(3).unwrap().closure_components(), 3);
        // 11 letters: an odd permutation of 4 points, so 1 or 3 cycles
        let l9n27 = parse_braid("{-3,-2,1,1,-2,3,2,-1,2,-1,2}", None).unwrap();
        assert_eq!(l9n27.closure_components(), 3);
        assert_eq!(parse_braid("{1,1,-2,1,3,2,2,2,3}", None).unwrap().closure_components(), 1);
        assert_eq!(parse_braid("{1,1}", None).unwrap().closure_components(), 2);
    }

    #[test]
    fn formatting() {
        let w = parse_braid("{1,1,-2,1,3,2,2,2,3}", None).unwrap();
        assert_eq!(w.to_word_string(), "s1^2 s2^-1 s1 s3 s2^3 s3");
        assert_eq!(w.to_string(), "{1,1,-2,1,3,2,2,2,3}");
        assert_eq!(w.writhe(), 7);
        assert_eq!(w.mirror().writhe(), -7);
    }

    fn braid() -> impl Strategy<Value = BraidWord> {
        (2usize..7).prop_flat_map(|n| {
            let max = (n - 1) as i32;
            proptest::collection::vec((1..=max, prop::bool::ANY), 0..12).prop_map(move |ls| {
                let letters = ls.into_iter().map(|(k, neg)| if neg { -k } else { k }).collect();
                BraidWord::new(n, letters).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trips_both_notations(w in braid()) {
            prop_assert_eq!(parse_braid(&w.to_brace_string(), Some(w.strands())).unwrap(), w.clone());
            prop_assert_eq!(parse_braid(&w.to_word_string(), Some(w.strands())).unwrap(), w);
        }

        #[test]
        fn components_ignore_signs(w in braid(), flip in proptest::collection::vec(prop::bool::ANY, 12)) {
            let letters = w.letters().iter().zip(&flip).map(|(&k, &f)| if f { -k } else { k }).collect();
            let v = BraidWord::new(w.strands(), letters).unwrap();
            prop_assert_eq!(v.closure_components(), w.closure_components());
        }
    }
}
