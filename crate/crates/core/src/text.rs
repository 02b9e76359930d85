//! Whitespace tokenizer that remembers byte offsets for error reporting.

use crate::error::ParseError;

pub(crate) struct Tokens<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    pub fn new(src: &'a str) -> Self {
        Tokens { src, pos: 0 }
    }

    pub fn from_bytes(bytes: &'a [u8]) -> Result<Self, ParseError> {
        std::str::from_utf8(bytes)
            .map(Tokens::new)
            .map_err(|e| ParseError::new(e.valid_up_to(), "input is not valid UTF-8"))
    }

    pub fn offset(&self) -> usize {
        self.pos
    }

    fn skip_ws(&mut self) {
        let rest = &self.src.as_bytes()[self.pos..];
        let skip = rest.iter().take_while(|b| b.is_ascii_whitespace()).count();
        self.pos += skip;
    }

    /// Next whitespace-delimited token and its starting offset.
    pub fn next_token(&mut self) -> Option<(&'a str, usize)> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return None;
        }
        let start = self.pos;
        let rest = &self.src.as_bytes()[start..];
        let len = rest.iter().take_while(|b| !b.is_ascii_whitespace()).count();
        self.pos += len;
        Some((&self.src[start..start + len], start))
    }

    /// Rest of the current line after leading blank lines, trimmed; used for record names.
    pub fn next_line(&mut self) -> Option<(&'a str, usize)> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return None;
        }
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find('\n').unwrap_or(rest.len());
        self.pos += len;
        Some((rest[..len].trim_end(), start))
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    pub fn expect_usize(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        match self.next_token() {
            None => Err(ParseError::new(self.pos, format!("unexpected end of input, expected {what}"))),
            Some((tok, off)) => tok
                .parse::<usize>()
                .map(|v| (v, off))
                .map_err(|_| ParseError::new(off, format!("expected {what}, found `{tok}`"))),
        }
    }
}
