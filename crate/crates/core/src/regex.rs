//! A small regular-expression syntax in the style of textbook notation.
//!
//! | syntax            | meaning                              |
//! |-------------------|--------------------------------------|
//! | `a`               | a symbol of the alphabet             |
//! | `λ`, `ε`, `()`    | the empty word                       |
//! | `∅`               | the empty language                   |
//! | `XY`              | concatenation                        |
//! | `X + Y`           | union                                |
//! | `X*`, `X^*`       | Kleene star                          |
//! | `X^+`             | `XX*`                                |
//! | `X^3`, `X^{12}`   | fixed power                          |
//!
//! Whitespace is ignored. Postfix operators bind tighter than
//! concatenation, which binds tighter than union.

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Symbol(char),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
    Power(Box<Regex>, usize),
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    sigma: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()), |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Regex { position: self.offset(), message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn union(&mut self) -> Result<Regex> {
        let mut alts = vec![self.concat()?];
        while self.peek() == Some('+') {
            self.pos += 1;
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 { alts.pop().unwrap() } else { Regex::Union(alts) })
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '+' || c == ')' {
                break;
            }
            parts.push(self.postfix()?);
        }
        match parts.len() {
            0 => self.error("expected an expression"),
            1 => Ok(parts.pop().unwrap()),
            _ => Ok(Regex::Concat(parts)),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected `*`, `+` or a number after `^`");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().or_else(|_| self.error("exponent too large"))
    }

    fn exponent(&mut self, base: Regex) -> Result<Regex> {
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let out = match self.peek() {
            Some('*') => {
                self.pos += 1;
                Regex::Star(Box::new(base))
            }
            Some('+') => {
                self.pos += 1;
                Regex::Concat(vec![base.clone(), Regex::Star(Box::new(base))])
            }
            _ => Regex::Power(Box::new(base), self.number()?),
        };
        if braced {
            self.expect('}')?;
        }
        Ok(out)
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    r = Regex::Star(Box::new(r));
                }
                Some('^') => {
                    self.pos += 1;
                    r = self.exponent(r)?;
                }
                _ => return Ok(r),
            }
        }
    }

    fn atom(&mut self) -> Result<Regex> {
        let Some(c) = self.peek() else {
            return self.error("unexpected end of expression");
        };
        match c {
            '(' => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Regex::Epsilon);
                }
                let r = self.union()?;
                self.expect(')')?;
                Ok(r)
            }
            'λ' | 'ε' => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            '∅' => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            '*' | '^' => self.error(format!("`{c}` needs an operand")),
            c if self.sigma.contains(c) => {
                self.pos += 1;
                Ok(Regex::Symbol(c))
            }
            c => self.error(format!("symbol `{c}` is not in the alphabet {}", self.sigma)),
        }
    }
}

impl Regex {
    pub fn parse(expr: &str, sigma: &Alphabet) -> Result<Regex> {
        let chars = expr.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser { chars, pos: 0, sigma };
        let r = p.union()?;
        if p.pos != p.chars.len() {
            return p.error("unbalanced `)`");
        }
        Ok(r)
    }

    /// Thompson-style fragment: returns (entry, exit).
    fn build(&self, n: &mut Nfa) -> (usize, usize) {
        let entry = n.add_state(false);
        let exit = n.add_state(false);
        let link = |n: &mut Nfa, a, b| n.add_epsilon(a, b).expect("fresh states");
        match self {
            Regex::Empty => {}
            Regex::Epsilon => link(n, entry, exit),
            Regex::Symbol(c) => {
                let a = n.alphabet().index_of(*c).expect("checked during parsing");
                n.add_transition(entry, a, exit).expect("fresh states");
            }
            Regex::Concat(parts) => {
                let mut cur = entry;
                for part in parts {
                    let (s, e) = part.build(n);
                    link(n, cur, s);
                    cur = e;
                }
                link(n, cur, exit);
            }
            Regex::Union(alts) => {
                for alt in alts {
                    let (s, e) = alt.build(n);
                    link(n, entry, s);
                    link(n, e, exit);
                }
            }
            Regex::Star(inner) => {
                let (s, e) = inner.build(n);
                link(n, entry, s);
                link(n, e, s);
                link(n, entry, exit);
                link(n, e, exit);
            }
            Regex::Power(inner, k) => {
                let mut cur = entry;
                for _ in 0..*k {
                    let (s, e) = inner.build(n);
                    link(n, cur, s);
                    cur = e;
                }
                link(n, cur, exit);
            }
        }
        (entry, exit)
    }

    pub fn to_nfa(&self, sigma: &Alphabet) -> Nfa {
        let mut n = Nfa::new(sigma.clone());
        let (s, e) = self.build(&mut n);
        n.add_initial(s).expect("fresh state");
        n.set_accepting(e, true).expect("fresh state");
        n
    }
}

/// Compiles `expr` to the minimal complete DFA over `sigma`.
pub fn parse_regex(expr: &str, sigma: &Alphabet) -> Result<Dfa> {
    Ok(Regex::parse(expr, sigma)?.to_nfa(sigma).determinize().minimize())
}

/// The symbols an expression mentions, sorted. Exponents are skipped, so
/// `a^{12}b` gives `{a, b}`.
pub fn symbols_of(expr: &str) -> Alphabet {
    let mut found = std::collections::BTreeSet::new();
    let mut chars = expr.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        match c {
            '^' => {
                if chars.peek() == Some(&'{') {
                    for d in chars.by_ref() {
                        if d == '}' {
                            break;
                        }
                    }
                } else {
                    while chars.peek().is_some_and(|d| d.is_ascii_digit() || *d == '*' || *d == '+') {
                        chars.next();
                    }
                }
            }
            '(' | ')' | '+' | '*' | '{' | '}' | 'λ' | 'ε' | '∅' => {}
            c => {
                found.insert(c);
            }
        }
    }
    Alphabet::new(found).expect("set elements are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    #[test]
    fn empty_set_has_one_state() {
        let d = parse_regex("∅", &ab()).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.sc(), 1);
    }

    #[test]
    fn a_star_has_two_states() {
        assert_eq!(parse_regex("a^*", &ab()).unwrap().sc(), 2);
        assert_eq!(parse_regex("a*", &ab()).unwrap(), parse_regex("a^{*}", &ab()).unwrap());
    }

    #[test]
    fn plus_is_union_and_caret_plus_is_kleene_plus() {
        let d = parse_regex("a + b", &ab()).unwrap();
        assert_eq!(d.enumerate_words(3), vec![Word::from("a"), Word::from("b")]);
        let p = parse_regex("a^+", &ab()).unwrap();
        assert_eq!(p.enumerate_words(2), vec![Word::from("a"), Word::from("aa")]);
    }

    #[test]
    fn powers_and_empty_word() {
        let d = parse_regex("b^1(a^2)^*", &ab()).unwrap();
        assert_eq!(d.enumerate_words(5), vec![Word::from("b"), Word::from("baa"), Word::from("baaaa")]);
        let l = parse_regex("λ + a^{10}", &ab()).unwrap();
        assert_eq!(l.enumerate_words(10).len(), 2);
        assert_eq!(parse_regex("()", &ab()).unwrap().enumerate_words(3), vec![Word::empty()]);
    }

    #[test]
    fn symbols_skip_exponents() {
        assert_eq!(symbols_of("b^{12}(a^3)^* + c^+").symbols(), &['a', 'b', 'c']);
        assert!(symbols_of("λ + ∅").is_empty());
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_regex("a(b", &ab()) {
            Err(Error::Regex { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_regex("a+", &ab()), Err(Error::Regex { position: 2, .. })));
        assert!(matches!(parse_regex("ac", &ab()), Err(Error::Regex { position: 1, .. })));
        assert!(parse_regex("a)", &ab()).is_err());
        assert!(parse_regex("*a", &ab()).is_err());
    }
}
