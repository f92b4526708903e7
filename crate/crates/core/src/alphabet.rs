use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Opaque letter identifier; the index of the letter in its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered, finite set of named letters.
///
/// Names may span several characters (`a'` is a single letter). Letter order
/// is the declaration order and defines the lexicographic order of words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::Parse("alphabet too large".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyLetterName);
            }
            if name.chars().any(char::is_whitespace) || name.contains("<->") {
                return Err(Error::InvalidLetterName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateLetter(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// The binary alphabet `{0, 1}` used by Sturmian generators.
    pub fn binary() -> Self {
        Self::new(["0", "1"]).expect("valid alphabet")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u16))
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u16))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.names.len()
    }

    pub fn check(&self, word: &[Letter]) -> Result<()> {
        match word.iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(Error::AlphabetMismatch(l.index())),
            None => Ok(()),
        }
    }

    /// Tokenizes a word literal by greedy longest match against the letter
    /// names. Whitespace between letters is ignored.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let mut rest = text;
        let mut offset = 0;
        loop {
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            rest = trimmed;
            if rest.is_empty() {
                break;
            }
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, name)) => {
                    letters.push(Letter(i as u16));
                    rest = &rest[name.len()..];
                    offset += name.len();
                }
                None => {
                    let token: String = rest
                        .chars()
                        .take_while(|c| !c.is_whitespace())
                        .take(8)
                        .collect();
                    return Err(Error::UnknownLetter { token, offset });
                }
            }
        }
        Ok(Word::from(letters))
    }

    /// Renders a word by concatenating letter names.
    pub fn render(&self, word: &[Letter]) -> String {
        word.iter().map(|l| self.name(*l)).collect()
    }

    /// Renders a word with a single space between letters.
    pub fn render_spaced(&self, word: &[Letter]) -> String {
        word.iter()
            .map(|l| self.name(*l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Maps a word over `self` into `target` by letter names.
    pub fn translate(&self, word: &[Letter], target: &Alphabet) -> Result<Word> {
        word.iter()
            .map(|l| {
                target
                    .letter(self.name(*l))
                    .ok_or_else(|| Error::UnknownLetter {
                        token: self.name(*l).to_string(),
                        offset: 0,
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "a'", "c"]).unwrap()
    }

    #[test]
    fn greedy_tokenizer_prefers_primed_letters() {
        let alphabet = abc();
        let w = alphabet.parse_word("caa'c").unwrap();
        assert_eq!(w.as_slice(), &[Letter(2), Letter(0), Letter(1), Letter(2)]);
        assert_eq!(alphabet.render(&w), "caa'c");
        assert_eq!(alphabet.parse_word("c a a' c").unwrap(), w);
    }

    #[test]
    fn unknown_token_is_named() {
        let err = abc().parse_word("cab").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownLetter {
                token: "b".into(),
                offset: 2
            }
        );
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert_eq!(
            Alphabet::new(Vec::<String>::new()),
            Err(Error::EmptyAlphabet)
        );
        assert_eq!(Alphabet::new(["a", ""]), Err(Error::EmptyLetterName));
        assert_eq!(
            Alphabet::new(["a", "a"]),
            Err(Error::DuplicateLetter("a".into()))
        );
    }

    #[test]
    fn empty_literal_is_empty_word() {
        assert!(abc().parse_word("  ").unwrap().is_empty());
    }
}
