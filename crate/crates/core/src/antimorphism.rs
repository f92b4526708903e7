use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::word::Word;

/// An involutory antimorphism: reversal composed with an involutory letter
/// permutation. The plain reversal mapping is the identity-permutation case.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antimorphism {
    alphabet: Alphabet,
    perm: Vec<Letter>,
}

impl Antimorphism {
    /// Builds an antimorphism from the image of every letter, in alphabet
    /// order. Rejects permutations that are not involutions.
    pub fn new(alphabet: Alphabet, perm: Vec<Letter>) -> Result<Self> {
        if perm.len() != alphabet.len() {
            return Err(Error::Parse(format!(
                "permutation has {} entries for {} letters",
                perm.len(),
                alphabet.len()
            )));
        }
        alphabet.check(&perm)?;
        for letter in alphabet.letters() {
            if perm[perm[letter.index()].index()] != letter {
                return Err(Error::NotInvolution(alphabet.name(letter).to_string()));
            }
        }
        Ok(Self { alphabet, perm })
    }

    /// The reversal mapping over `alphabet`.
    pub fn reversal(alphabet: Alphabet) -> Self {
        let perm = alphabet.letters().collect();
        Self { alphabet, perm }
    }

    /// Builds from letter-name pairs; a pair `(x, x)` marks a fixed letter.
    /// Every letter of the alphabet must appear exactly once.
    pub fn from_pairs(alphabet: Alphabet, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut perm: Vec<Option<Letter>> = vec![None; alphabet.len()];
        let lookup = |name: &str| {
            alphabet.letter(name).ok_or_else(|| Error::UnknownLetter {
                token: name.to_string(),
                offset: 0,
            })
        };
        for (x, y) in pairs {
            let (lx, ly) = (lookup(x)?, lookup(y)?);
            for (l, img) in [(lx, ly), (ly, lx)] {
                match perm[l.index()] {
                    Some(prev) if prev != img => {
                        return Err(Error::ThetaLetterRepeated(alphabet.name(l).to_string()))
                    }
                    _ => perm[l.index()] = Some(img),
                }
            }
        }
        let perm = perm
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| {
                    Error::Parse(format!(
                        "letter {:?} has no theta image",
                        alphabet.names()[i]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, perm)
    }

    /// Parses a theta spec such as `a<->a' c` (or `a<->a' c<->c`).
    ///
    /// Items are separated by whitespace; `x<->y` swaps two letters and a
    /// bare `x` (or `x<->x`) is a fixed letter. The alphabet is the set of
    /// listed letters in order of first appearance.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut pairs: Vec<(String, String)> = Vec::new();
        for item in spec.split_whitespace() {
            let (x, y) = match item.split_once("<->") {
                Some((x, y)) => (x, y),
                None => (item, item),
            };
            if x.is_empty() || y.is_empty() {
                return Err(Error::Parse(format!("malformed theta item {item:?}")));
            }
            for name in if x == y { vec![x] } else { vec![x, y] } {
                if names.iter().any(|n| n == name) {
                    return Err(Error::ThetaLetterRepeated(name.to_string()));
                }
                names.push(name.to_string());
            }
            pairs.push((x.to_string(), y.to_string()));
        }
        let alphabet = Alphabet::new(names)?;
        let pairs: Vec<(&str, &str)> = pairs
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        Self::from_pairs(alphabet, &pairs)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: Letter) -> Letter {
        self.perm[letter.index()]
    }

    pub fn is_fixed(&self, letter: Letter) -> bool {
        self.image(letter) == letter
    }

    pub fn is_reversal(&self) -> bool {
        self.alphabet.letters().all(|l| self.is_fixed(l))
    }

    /// Letters `a` with `a = Θ(a)`.
    pub fn fixed_letters(&self) -> Vec<Letter> {
        self.alphabet.letters().filter(|l| self.is_fixed(*l)).collect()
    }

    /// Θ(w): reverse of `w` with the permutation applied letterwise.
    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        self.alphabet.check(w)?;
        Ok(self.apply_unchecked(w))
    }

    /// [`apply`](Self::apply) without the alphabet check.
    pub fn apply_unchecked(&self, w: &[Letter]) -> Word {
        w.iter().rev().map(|l| self.image(*l)).collect()
    }

    pub fn is_palindrome(&self, w: &[Letter]) -> Result<bool> {
        self.alphabet.check(w)?;
        Ok(self.is_palindrome_unchecked(w))
    }

    pub fn is_palindrome_unchecked(&self, w: &[Letter]) -> bool {
        let n = w.len();
        (0..n.div_ceil(2)).all(|i| w[i] == self.image(w[n - 1 - i]))
    }

    /// Canonical spec string: `x<->y` for swaps, bare names for fixed letters.
    pub fn spec(&self) -> String {
        let mut items = Vec::new();
        for letter in self.alphabet.letters() {
            let img = self.image(letter);
            if img == letter {
                items.push(self.alphabet.name(letter).to_string());
            } else if letter < img {
                items.push(format!(
                    "{}<->{}",
                    self.alphabet.name(letter),
                    self.alphabet.name(img)
                ));
            }
        }
        items.join(" ")
    }

    pub fn render(&self, w: &[Letter]) -> String {
        self.alphabet.render(w)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }
}

impl fmt::Display for Antimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

/// Θ applied to a word: alias of [`Antimorphism::apply`].
pub fn apply_theta(theta: &Antimorphism, w: &[Letter]) -> Result<Word> {
    theta.apply(w)
}

pub fn is_theta_palindrome(theta: &Antimorphism, w: &[Letter]) -> Result<bool> {
    theta.is_palindrome(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn theta() -> Antimorphism {
        Antimorphism::parse("a<->a' c").unwrap()
    }

    fn w(theta: &Antimorphism, s: &str) -> Word {
        theta.parse_word(s).unwrap()
    }

    #[test]
    fn applies_letterwise_reversed() {
        let t = theta();
        assert_eq!(t.apply(&w(&t, "aac")).unwrap(), w(&t, "ca'a'"));
        assert_eq!(t.apply(&Word::empty()).unwrap(), Word::empty());
        let rev = Antimorphism::parse("a b c").unwrap();
        assert_eq!(rev.apply(&w(&rev, "abc")).unwrap(), w(&rev, "cba"));
        assert!(rev.is_reversal());
    }

    #[test]
    fn palindromes() {
        let t = Antimorphism::parse("a<->a'").unwrap();
        assert!(t.is_palindrome(&w(&t, "aa'")).unwrap());
        assert!(!t.is_palindrome(&w(&t, "a")).unwrap());
        let t = theta();
        assert!(t.is_palindrome(&w(&t, "caa'c")).unwrap());
        assert!(t.is_palindrome(&Word::empty()).unwrap());
    }

    #[test]
    fn spec_parsing() {
        let t = Antimorphism::parse("a<->a' c<->c").unwrap();
        assert_eq!(t, theta());
        assert_eq!(t.spec(), "a<->a' c");
        assert_eq!(
            Antimorphism::parse("a<->a' a"),
            Err(Error::ThetaLetterRepeated("a".into()))
        );
        assert!(Antimorphism::parse("a<->").is_err());
        assert_eq!(Antimorphism::parse(""), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn rejects_non_involution() {
        let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
        let perm = vec![Letter(1), Letter(2), Letter(0)];
        assert_eq!(
            Antimorphism::new(alphabet, perm),
            Err(Error::NotInvolution("x".into()))
        );
    }

    #[test]
    fn alphabet_mismatch() {
        let t = theta();
        assert_eq!(
            t.apply(&Word::from(vec![Letter(7)])),
            Err(Error::AlphabetMismatch(7))
        );
    }

    fn word_strategy() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec((0u16..3).prop_map(Letter), 0..20)
    }

    proptest! {
        #[test]
        fn involution(v in word_strategy()) {
            let t = theta();
            let once = t.apply(&v).unwrap();
            let twice = t.apply(&once).unwrap();
            prop_assert_eq!(twice.as_slice(), v.as_slice());
            prop_assert_eq!(once.len(), v.len());
        }

        #[test]
        fn antimorphic(u in word_strategy(), v in word_strategy()) {
            let t = theta();
            let uv: Vec<Letter> = u.iter().chain(v.iter()).copied().collect();
            let expected = t.apply(&v).unwrap().concat(&t.apply(&u).unwrap());
            prop_assert_eq!(t.apply(&uv).unwrap(), expected);
        }
    }
}
