//! Plain-text word specification.
//!
//! ```text
//! # comment
//! alphabet: a a' c
//! theta: a<->a' c<->c
//! word: c a a'
//! word: c c
//! ```
//!
//! `theta:` is required. `alphabet:` is optional; when present it must list
//! the same letters as `theta:` and fixes their order. Several `word:` lines
//! are concatenated. Blank lines and lines starting with `#` are ignored.

use crate::alphabet::Alphabet;
use crate::antimorphism::Antimorphism;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSpec {
    pub theta: Antimorphism,
    pub word: Word,
}

impl WordSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Vec<String>> = None;
        let mut theta: Option<Antimorphism> = None;
        let mut word_lines: Vec<&str> = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| {
                Error::Parse(format!("line {}: expected `key: value`", line_no + 1))
            })?;
            let value = value.trim();
            match key.trim() {
                "alphabet" => {
                    alphabet = Some(value.split_whitespace().map(String::from).collect())
                }
                "theta" => theta = Some(Antimorphism::parse(value)?),
                "word" => word_lines.push(value),
                other => {
                    return Err(Error::Parse(format!(
                        "line {}: unknown key `{other}`",
                        line_no + 1
                    )))
                }
            }
        }
        let mut theta = theta.ok_or_else(|| Error::Parse("missing `theta:` line".into()))?;
        if let Some(names) = alphabet {
            theta = reorder(&theta, names)?;
        }
        let word = theta.parse_word(&word_lines.join(" "))?;
        Ok(Self { theta, word })
    }

    /// Canonical text form; parsing it gives back an equal spec.
    pub fn render(&self) -> String {
        format!(
            "alphabet: {}\ntheta: {}\nword: {}\n",
            self.theta.alphabet().names().join(" "),
            self.theta.spec(),
            self.theta.alphabet().render_spaced(&self.word)
        )
    }
}

/// Θ over the alphabet `names`, which must be a permutation of Θ's letters.
fn reorder(theta: &Antimorphism, names: Vec<String>) -> Result<Antimorphism> {
    let alphabet = Alphabet::new(names)?;
    let own = theta.alphabet();
    if alphabet.len() != own.len() || own.names().iter().any(|n| alphabet.letter(n).is_none()) {
        return Err(Error::Parse(
            "`alphabet:` and `theta:` list different letters".into(),
        ));
    }
    let perm = alphabet
        .letters()
        .map(|l| {
            let old = own.letter(alphabet.name(l)).expect("same letters");
            let image = own.name(theta.image(old));
            alphabet.letter(image).expect("same letters")
        })
        .collect();
    Antimorphism::new(alphabet, perm)
}
