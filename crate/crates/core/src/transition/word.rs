//! Words in named generators, e.g. `g4^-1*g3*g4*g3^-2` or `(a*b)^3`.

use crate::error::{Error, Result};

/// A letter is a column index: `2 i` for generator `i`, `2 i + 1` for its inverse.
pub type Letter = usize;

pub fn inverse_letter(l: Letter) -> Letter {
    l ^ 1
}

pub fn invert(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|&l| inverse_letter(l)).collect()
}

fn power(word: &[Letter], e: i64) -> Vec<Letter> {
    let base = if e < 0 { invert(word) } else { word.to_vec() };
    let mut out = Vec::new();
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    generators: &'a [String],
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::MalformedWord(format!("{what} at position {} in {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                None | Some(b')') => return Ok(out),
                Some(b'*') if !out.is_empty() => {
                    self.pos += 1;
                    if matches!(self.peek(), None | Some(b')') | Some(b'*')) {
                        return Err(self.err("dangling '*'"));
                    }
                }
                _ => out.extend(self.factor()?),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<Letter>> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.product()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("unclosed '('"));
                }
                self.pos += 1;
                inner
            }
            Some(b'1') if !self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric()) => {
                self.pos += 1;
                Vec::new()
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                if name == "e" && !self.generators.iter().any(|g| g == "e") {
                    Vec::new()
                } else {
                    let i = self.generators.iter().position(|g| g == name).ok_or_else(|| {
                        Error::MalformedWord(format!("unknown generator {name:?} in {:?}", self.text))
                    })?;
                    vec![2 * i]
                }
            }
            _ => return Err(self.err("expected a generator or '('")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if self.s.get(self.pos) == Some(&b'-') {
                self.pos += 1;
            }
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: i64 = self.text[start..self.pos].parse().map_err(|_| self.err("bad exponent"))?;
            Ok(power(&base, e))
        } else {
            Ok(base)
        }
    }
}

/// Parses a word over `generators`. Juxtaposition and `*` both multiply;
/// `e` and `1` denote the identity.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Vec<Letter>> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, generators, text };
    let w = p.product()?;
    if p.peek().is_some() {
        return Err(p.err("unbalanced ')'"));
    }
    Ok(w)
}

/// Renders a word with exponents, e.g. `g4^2*g3^-1`.
pub fn format_word(word: &[Letter], generators: &[String]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let l = word[i];
        let mut run = 1;
        while i + run < word.len() && word[i + run] == l {
            run += 1;
        }
        let name = &generators[l / 2];
        let e = if l.is_multiple_of(2) { run as i64 } else { -(run as i64) };
        parts.push(if e == 1 { name.clone() } else { format!("{name}^{e}") });
        i += run;
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Vec<String> {
        vec!["g3".into(), "g4".into()]
    }

    #[test]
    fn parses_exponents_and_parentheses() {
        assert_eq!(parse_word("g4^-1*g3*g4*g3^-2", &gens()).unwrap(), vec![3, 0, 2, 1, 1]);
        assert_eq!(parse_word("(g3 g4)^2", &gens()).unwrap(), vec![0, 2, 0, 2]);
        assert_eq!(parse_word("(g3*g4)^-1", &gens()).unwrap(), vec![3, 1]);
        assert_eq!(parse_word("e", &gens()).unwrap(), Vec::<Letter>::new());
        assert_eq!(parse_word("1", &gens()).unwrap(), Vec::<Letter>::new());
        assert_eq!(parse_word("g3^0", &gens()).unwrap(), Vec::<Letter>::new());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["g5", "g3^", "(g3", "g3)", "g3**g4", "g3*", "^2", "g3^x"] {
            assert!(matches!(parse_word(bad, &gens()), Err(Error::MalformedWord(_))), "{bad}");
        }
    }

    #[test]
    fn formats_runs() {
        let w = parse_word("g4*g4*g3^-1", &gens()).unwrap();
        assert_eq!(format_word(&w, &gens()), "g4^2*g3^-1");
    }
}
