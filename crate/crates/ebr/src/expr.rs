//! Integer combinations of basis labels, e.g. `2*[S3] + [D8'] - [1]`.
//!
//! A term is an optional `k*` coefficient followed by `[label]` or a bare
//! label. Terms are joined by `+` or `-`.

use ebr_core::ExtElement;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown label `{label}`; valid labels: {}", valid.join(", "))]
    UnknownLabel { label: String, valid: Vec<String> },
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, message: &str) -> ExprError {
        ExprError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn bare_label_char(c: char) -> bool {
        c.is_alphanumeric() || c == '\'' || c == '_'
    }

    /// `[label]` or a bare label.
    fn atom(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        if self.peek() == Some('[') {
            self.pos += 1;
            let start = self.pos;
            let end = self.text[start..].find(']').ok_or_else(|| self.error("missing `]`"))?;
            self.pos = start + end + 1;
            let label = self.text[start..start + end].trim();
            if label.is_empty() {
                return Err(ExprError::Parse {
                    position: start,
                    message: "empty label".into(),
                });
            }
            return Ok(label.into());
        }
        let start = self.pos;
        while self.peek().is_some_and(Self::bare_label_char) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
        if start == self.pos {
            return Err(self.error("expected a label"));
        }
        Ok(self.text[start..self.pos].into())
    }

    /// Optional sign and `k*` coefficient. Digits without a following `*`
    /// are left alone, since labels such as `1` may start with a digit.
    fn coefficient(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let mut sign = 1;
        if self.peek() == Some('-') {
            sign = -1;
            self.pos += 1;
            self.skip_ws();
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.text[start..self.pos];
        self.skip_ws();
        if !digits.is_empty() && self.peek() == Some('*') {
            self.pos += 1;
            let k: i64 = digits.parse().map_err(|_| ExprError::Parse {
                position: start,
                message: "coefficient out of range".into(),
            })?;
            return Ok(sign * k);
        }
        self.pos = start;
        Ok(sign)
    }
}

pub fn parse_element(text: &str, labels: &[String]) -> Result<ExtElement, ExprError> {
    let mut p = Parser { text, pos: 0 };
    let mut out = ExtElement::zero();
    let mut sign = 1i64;
    loop {
        let k = p.coefficient()?;
        let label = p.atom()?;
        let index = labels
            .iter()
            .position(|l| *l == label)
            .ok_or_else(|| ExprError::UnknownLabel {
                label: label.clone(),
                valid: labels.to_vec(),
            })?;
        out.add_term(index, sign * k);
        p.skip_ws();
        match p.peek() {
            None => return Ok(out),
            Some('+') => sign = 1,
            Some('-') => sign = -1,
            Some(_) => return Err(p.error("expected `+`, `-` or end of input")),
        }
        p.pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels() -> Vec<String> {
        ["1", "C2a", "S3", "A4", "S4", "A4'"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn terms() {
        let l = labels();
        assert_eq!(parse_element("[S4]", &l).unwrap(), ExtElement::basis(4));
        assert_eq!(parse_element("2*[A4]", &l).unwrap(), ExtElement::term(3, 2));
        assert!(parse_element("[A4'] + -1*[A4']", &l).unwrap().is_zero());
        assert_eq!(parse_element("S3", &l).unwrap(), ExtElement::basis(2));
        assert_eq!(parse_element("1", &l).unwrap(), ExtElement::basis(0));
        assert_eq!(parse_element(" 3 * 1 - [S3] ", &l).unwrap(), ExtElement::term(0, 3).add(&ExtElement::term(2, -1)));
        assert_eq!(parse_element("-[S3]", &l).unwrap(), ExtElement::term(2, -1));
    }

    #[test]
    fn errors() {
        let l = labels();
        assert!(matches!(parse_element("[D8]", &l), Err(ExprError::UnknownLabel { .. })));
        assert!(matches!(parse_element("[S3", &l), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_element("[S3] [S4]", &l), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_element("", &l), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_element("2*", &l), Err(ExprError::Parse { .. })));
    }
}
