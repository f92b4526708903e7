//! Resolves `--word` / `--file` / `--gen` into a window to analyse.

use std::path::PathBuf;

use clap::Args;
use theta_rich::complexity::WindowMode;
use theta_rich::generators::{corpus_word, parse_generator, WordGenerator};
use theta_rich::wordspec::WordSpec;
use theta_rich::{Antimorphism, Word};

use crate::CliError;

pub const DEFAULT_GEN_WINDOW: usize = 1000;

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Literal word, tokenized against the theta alphabet.
    #[arg(long, group = "source", allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Word-spec file with `theta:` and `word:` lines.
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,
    /// Generator spec, e.g. `periodic:ccaa'` or `corpus:ex5.1`.
    #[arg(long = "gen", group = "source")]
    pub generator: Option<String>,
    /// Theta spec: `x<->y` swaps and bare fixed letters, e.g. "a<->a' c".
    #[arg(long)]
    pub theta: Option<String>,
    /// Prefix length taken from a generator.
    #[arg(long)]
    pub window: Option<usize>,
    /// Replace the letter at a position: `POS:LETTER`.
    #[arg(long)]
    pub mutate: Option<String>,
}

impl SourceArgs {
    pub fn is_set(&self) -> bool {
        self.word.is_some() || self.file.is_some() || self.generator.is_some()
    }
}

/// A resolved window plus what is needed to reproduce it.
#[derive(Debug, Clone)]
pub struct Source {
    pub label: String,
    pub theta: Antimorphism,
    pub word: Word,
    generator: Option<WordGenerator>,
    mutated: bool,
}

impl Source {
    pub fn from_generator(label: String, theta: Antimorphism, generator: WordGenerator, window: usize) -> Result<Self, CliError> {
        let word = generator.prefix(window)?;
        Ok(Self {
            label,
            theta,
            word,
            generator: Some(generator),
            mutated: false,
        })
    }

    /// Literal words are their whole language; a periodic window with a
    /// full period of margin is complete up to `max_len`.
    pub fn mode(&self, max_len: usize) -> WindowMode {
        if self.mutated {
            return WindowMode::Window;
        }
        match &self.generator {
            None => WindowMode::Complete,
            Some(g) if g.window_is_complete(self.word.len(), max_len) => WindowMode::Complete,
            Some(_) => WindowMode::Window,
        }
    }
}

fn parse_theta(spec: &str) -> Result<Antimorphism, CliError> {
    Antimorphism::parse(spec).map_err(|e| CliError::Usage(format!("invalid theta spec {spec:?}: {e}")))
}

pub fn resolve(args: &SourceArgs) -> Result<Source, CliError> {
    let theta = args.theta.as_deref().map(parse_theta).transpose()?;
    let mut source = if let Some(text) = &args.word {
        let theta = theta.ok_or_else(|| CliError::Usage("--word needs --theta".into()))?;
        let word = theta
            .parse_word(text)
            .map_err(|e| CliError::Usage(format!("invalid word {text:?}: {e}")))?;
        if args.window.is_some() {
            return Err(CliError::Usage("--window applies to generators only".into()));
        }
        Source {
            label: format!("word:{}", theta.render(&word)),
            theta,
            word,
            generator: None,
            mutated: false,
        }
    } else if let Some(path) = &args.file {
        if theta.is_some() {
            return Err(CliError::Usage("--theta conflicts with the theta line of --file".into()));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let spec = WordSpec::parse(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Source {
            label: format!("file:{}", path.display()),
            theta: spec.theta,
            word: spec.word,
            generator: None,
            mutated: false,
        }
    } else if let Some(spec) = &args.generator {
        let (generator, theta) = parse_generator(spec, theta.as_ref())
            .map_err(|e| CliError::Usage(format!("invalid generator {spec:?}: {e}")))?;
        let window = args.window.unwrap_or_else(|| {
            spec.strip_prefix("corpus:")
                .and_then(corpus_word)
                .map_or(DEFAULT_GEN_WINDOW, |c| c.window)
        });
        Source::from_generator(spec.clone(), theta, generator, window)?
    } else {
        return Err(CliError::Usage("one of --word, --file or --gen is required".into()));
    };
    if let Some(m) = &args.mutate {
        mutate(&mut source, m)?;
    }
    Ok(source)
}

fn mutate(source: &mut Source, spec: &str) -> Result<(), CliError> {
    let bad = || CliError::Usage(format!("--mutate expects POS:LETTER, got {spec:?}"));
    let (pos, name) = spec.split_once(':').ok_or_else(bad)?;
    let pos: usize = pos.parse().map_err(|_| bad())?;
    let letter = source
        .theta
        .alphabet()
        .letter(name)
        .ok_or_else(|| CliError::Usage(format!("unknown letter {name:?} in --mutate")))?;
    if pos >= source.word.len() {
        return Err(CliError::Usage(format!(
            "--mutate position {pos} outside window of length {}",
            source.word.len()
        )));
    }
    let mut letters = std::mem::take(&mut source.word).into_vec();
    letters[pos] = letter;
    source.word = Word::from(letters);
    source.label = format!("{}+mutate:{spec}", source.label);
    source.mutated = true;
    Ok(())
}

/// Parses `A..B`, `A..=B` (both inclusive) or a single `N`.
pub fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("invalid range {text:?}, expected A..B or N"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (text, text),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..20").unwrap(), (0, 20));
        assert_eq!(parse_range("3..=4").unwrap(), (3, 4));
        assert_eq!(parse_range("5").unwrap(), (5, 5));
        assert!(parse_range("4..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
