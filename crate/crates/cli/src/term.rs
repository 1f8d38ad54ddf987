//! Terms denoting string diagrams over a signature.
//!
//! ```text
//! term  := par (';' par)*
//! par   := atom ('*' atom)*
//! atom  := '(' term ')' | 'id' '(' word ')' | 'sym' '(' word ',' word ')' | generator
//! ```
//!
//! `;` composes left to right; `*` is the tensor and binds tighter.

use catk_core::smc::{Diagram, Signature, SmcError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("column {col}: expected {expected}")]
    Syntax { col: usize, expected: String },
    #[error(transparent)]
    Smc(#[from] SmcError),
}

struct Parser<'a> {
    sig: &'a Signature,
    text: &'a str,
    pos: usize,
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, expected: &str) -> Result<T, TermError> {
        let col = self.text[..self.pos].chars().count() + 1;
        Err(TermError::Syntax { col, expected: expected.to_string() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), TermError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.fail(&format!("`{tok}`"))
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let r = self.rest();
        let len = r.find(|c: char| !pred(c)).unwrap_or(r.len());
        self.pos += len;
        &r[..len]
    }

    fn word(&mut self) -> Result<catk_core::smc::Word, TermError> {
        self.skip_ws();
        let start = self.pos;
        let w = self.take_while(|c| is_name_char(c) || c == '.');
        if w.is_empty() {
            return self.fail("a word");
        }
        self.sig.parse_word(w).map_err(|e| {
            self.pos = start;
            TermError::Smc(e)
        })
    }

    fn term(&mut self) -> Result<Diagram, TermError> {
        let mut d = self.par()?;
        while self.eat(";") {
            let next = self.par()?;
            d = d.compose(&next)?;
        }
        Ok(d)
    }

    fn par(&mut self) -> Result<Diagram, TermError> {
        let mut d = self.atom()?;
        while self.eat("*") {
            d = d.tensor(&self.atom()?);
        }
        Ok(d)
    }

    fn atom(&mut self) -> Result<Diagram, TermError> {
        if self.eat("(") {
            let d = self.term()?;
            self.expect(")")?;
            return Ok(d);
        }
        let name = self.take_while(is_name_char);
        if name.is_empty() {
            return self.fail("`(`, `id(..)`, `sym(..)` or a generator name");
        }
        let is_call = self.rest().trim_start().starts_with('(');
        match name {
            "id" if is_call => {
                self.expect("(")?;
                let w = self.word()?;
                self.expect(")")?;
                Ok(Diagram::identity(&w))
            }
            "sym" if is_call => {
                self.expect("(")?;
                let u = self.word()?;
                self.expect(",")?;
                let v = self.word()?;
                self.expect(")")?;
                Ok(Diagram::symmetry(&u, &v))
            }
            _ => Ok(Diagram::generator(self.sig, name)?),
        }
    }
}

pub fn parse_term(sig: &Signature, text: &str) -> Result<Diagram, TermError> {
    let mut p = Parser { sig, text, pos: 0 };
    let d = p.term()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return p.fail("`;`, `*` or end of term");
    }
    Ok(d)
}
