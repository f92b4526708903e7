//! Word generators: periodic words, characteristic Sturmian words, morphic
//! images and Θ-standard words with seed.
//!
//! Every generator is prefix-coherent: `prefix(m)` is a prefix of
//! `prefix(n)` for `m <= n`.
//!
//! # Generator spec strings
//!
//! | spec                                   | word                                          |
//! |----------------------------------------|-----------------------------------------------|
//! | `periodic:<letters>`                   | `v^ω` for the literal `v`                      |
//! | `sturmian:<d1>,<d2>,...`               | characteristic word with the (cycled) directive |
//! | `morphic:<name>[@<d1>,...]`            | builtin morphism `ex5.1`, `ex5.2`, `ex5.3` over a Sturmian word (Fibonacci by default) |
//! | `morphic:0=<img>;1=<img>[@<d1>,...]`   | custom binary morphism over a Sturmian word    |
//! | `theta-standard:seed=<letters>,directive=<letters>` | `Ψ(t)` with `t = directive^ω`     |
//! | `corpus:<name>`                         | a builtin corpus word (sets Θ as well)         |
//!
//! Letter literals are tokenized against the Θ alphabet. A trailing `...`
//! in a Sturmian directive is accepted and ignored; directives are always
//! repeated periodically.

use crate::alphabet::{Alphabet, Letter};
use crate::antimorphism::Antimorphism;
use crate::error::{Error, Result};
use crate::palindromic::theta_palindromic_closure;
use crate::word::Word;

pub const DEFAULT_STEP_BUDGET: usize = 100_000;

/// A non-erasing morphism between two alphabets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::Parse(format!(
                "morphism needs {} images, got {}",
                source.len(),
                images.len()
            )));
        }
        for (letter, image) in source.letters().zip(&images) {
            if image.is_empty() {
                return Err(Error::ErasingMorphism(source.name(letter).to_string()));
            }
            target.check(image)?;
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.index()]
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        self.source.check(w)?;
        let mut out = Word::empty();
        for l in w {
            out.extend_from_slice(self.image(*l));
        }
        Ok(out)
    }
}

/// Directive of a characteristic Sturmian word; repeated periodically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianDirective(Vec<u32>);

impl SturmianDirective {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() || values.contains(&0) {
            return Err(Error::InvalidDirective);
        }
        Ok(Self(values))
    }

    pub fn fibonacci() -> Self {
        Self(vec![1])
    }

    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty() && *s != "..." && *s != "…")
            .map(|s| s.parse::<u32>().map_err(|_| Error::InvalidDirective))
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k % self.0.len()]
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordGenerator {
    Periodic(Word),
    /// Standard sequence `s_k = s_{k-1}^{d_k} s_{k-2}`, `s_{-1} = one`,
    /// `s_0 = zero`. The all-ones directive gives the Fibonacci word.
    Sturmian {
        directive: SturmianDirective,
        zero: Letter,
        one: Letter,
    },
    MorphicImage {
        morphism: Morphism,
        base: Box<WordGenerator>,
    },
    /// `Ψ(ε) = seed`, `Ψ(ux) = (Ψ(u)x)⊕`, driven by `directive^ω`.
    ThetaStandard {
        theta: Antimorphism,
        seed: Word,
        directive: Word,
        step_budget: usize,
    },
}

impl WordGenerator {
    pub fn periodic(v: Word) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(Self::Periodic(v))
    }

    /// Characteristic Sturmian word over `{Letter(0), Letter(1)}`.
    pub fn sturmian(directive: SturmianDirective) -> Self {
        Self::Sturmian {
            directive,
            zero: Letter(0),
            one: Letter(1),
        }
    }

    pub fn fibonacci() -> Self {
        Self::sturmian(SturmianDirective::fibonacci())
    }

    /// `base` must produce words over the morphism's source alphabet; this is
    /// checked on every prefix request.
    pub fn morphic_image(morphism: Morphism, base: WordGenerator) -> Self {
        Self::MorphicImage {
            morphism,
            base: Box::new(base),
        }
    }

    pub fn theta_standard(theta: Antimorphism, seed: Word, directive: Word) -> Result<Self> {
        if directive.is_empty() {
            return Err(Error::Parse("theta-standard directive must be non-empty".into()));
        }
        theta.alphabet().check(&seed)?;
        theta.alphabet().check(&directive)?;
        Ok(Self::ThetaStandard {
            theta,
            seed,
            directive,
            step_budget: DEFAULT_STEP_BUDGET,
        })
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        if let Self::ThetaStandard { step_budget, .. } = &mut self {
            *step_budget = budget;
        }
        self
    }

    /// The first `n` letters of the generated word.
    pub fn prefix(&self, n: usize) -> Result<Word> {
        match self {
            Self::Periodic(v) => Ok(v.iter().copied().cycle().take(n).collect()),
            Self::Sturmian {
                directive,
                zero,
                one,
            } => Ok(sturmian_prefix(directive, *zero, *one, n)),
            Self::MorphicImage { morphism, base } => {
                let mut m = n.max(1);
                loop {
                    let image = morphism.apply(&base.prefix(m)?)?;
                    if image.len() >= n {
                        return Ok(image.prefix(n));
                    }
                    m *= 2;
                }
            }
            Self::ThetaStandard {
                theta,
                seed,
                directive,
                step_budget,
            } => {
                let mut w = seed.clone();
                let mut k = 0;
                while w.len() < n {
                    if k >= *step_budget {
                        return Err(Error::StepBudgetExceeded {
                            steps: k,
                            length: w.len(),
                        });
                    }
                    w.push(directive[k % directive.len()]);
                    w = theta_palindromic_closure(theta, &w);
                    k += 1;
                }
                Ok(w.prefix(n))
            }
        }
    }

    /// Whether a window of `window` letters holds every factor of length
    /// `<= n` of the infinite word. Only decidable here for periodic words.
    pub fn window_is_complete(&self, window: usize, n: usize) -> bool {
        match self {
            Self::Periodic(v) => window >= v.len() + n,
            _ => false,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Periodic(_) => "periodic",
            Self::Sturmian { .. } => "sturmian_standard",
            Self::MorphicImage { .. } => "morphic_image",
            Self::ThetaStandard { .. } => "theta_standard_with_seed",
        }
    }
}

fn sturmian_prefix(directive: &SturmianDirective, zero: Letter, one: Letter, n: usize) -> Word {
    let mut prev = vec![one];
    let mut cur = vec![zero];
    let mut k = 0;
    while cur.len() < n {
        let mut next = Vec::with_capacity(cur.len() * directive.get(k) as usize + prev.len());
        for _ in 0..directive.get(k) {
            next.extend_from_slice(&cur);
        }
        next.extend_from_slice(&prev);
        prev = cur;
        cur = next;
        k += 1;
    }
    cur.truncate(n);
    Word::from(cur)
}

/// Ψ evaluated on a finite directive prefix.
pub fn psi(theta: &Antimorphism, seed: &[Letter], directive: &[Letter]) -> Word {
    let mut w = Word::from(seed);
    for x in directive {
        w.push(*x);
        w = theta_palindromic_closure(theta, &w);
    }
    w
}

/// The largest prefix length whose longest Θ-palindromic suffix is not
/// unioccurrent; 0 when every non-empty prefix has a unioccurrent
/// Θ-palindromic suffix. This is an observed threshold on a finite prefix.
pub fn observed_unioccurrence_threshold(theta: &Antimorphism, w: &[Letter]) -> usize {
    crate::palindromic::prefix_statuses(theta, w)
        .iter()
        .filter(|s| !s.unioccurrent)
        .map(|s| s.length)
        .max()
        .unwrap_or(0)
}

pub const EXAMPLE_THETA: &str = "a<->a' c";

/// Images of 0 and 1 for the three morphisms of the worked examples.
pub fn builtin_morphism_images(name: &str) -> Option<(&'static str, &'static str)> {
    match name {
        "ex5.1" => Some(("aa'", "aa'c")),
        "ex5.2" => Some(("a'cacc", "a'cac")),
        "ex5.3" => Some(("aa'", "acca'")),
        _ => None,
    }
}

pub fn binary_morphism(theta: &Antimorphism, zero: &str, one: &str) -> Result<Morphism> {
    Morphism::new(
        Alphabet::binary(),
        theta.alphabet().clone(),
        vec![theta.parse_word(zero)?, theta.parse_word(one)?],
    )
}

/// A named word of the builtin corpus.
#[derive(Debug, Clone)]
pub struct CorpusWord {
    pub name: &'static str,
    pub description: &'static str,
    pub theta: Antimorphism,
    pub generator: WordGenerator,
    /// Default analysis window.
    pub window: usize,
    /// Expected Θ-richness of the infinite word.
    pub rich: bool,
    /// Expected Θ-episturmianity of the infinite word.
    pub episturmian: bool,
}

impl CorpusWord {
    pub fn spec(&self) -> String {
        format!("corpus:{}", self.name)
    }
}

fn example_theta() -> Antimorphism {
    Antimorphism::parse(EXAMPLE_THETA).expect("valid theta")
}

fn morphic_example(name: &'static str, description: &'static str, rich: bool, epi: bool) -> CorpusWord {
    let theta = example_theta();
    let (zero, one) = builtin_morphism_images(name).expect("builtin");
    let morphism = binary_morphism(&theta, zero, one).expect("valid morphism");
    CorpusWord {
        name,
        description,
        generator: WordGenerator::morphic_image(morphism, WordGenerator::fibonacci()),
        theta,
        window: 3000,
        rich,
        episturmian: epi,
    }
}

fn periodic_example(name: &'static str, description: &'static str, period: &str, rich: bool) -> CorpusWord {
    let theta = example_theta();
    let period = theta.parse_word(period).expect("valid period");
    CorpusWord {
        name,
        description,
        generator: WordGenerator::periodic(period).expect("non-empty"),
        theta,
        window: 200,
        rich,
        episturmian: false,
    }
}

/// The worked examples plus classic reference words.
pub fn builtin_corpus() -> Vec<CorpusWord> {
    let binary_rev = Antimorphism::reversal(Alphabet::binary());
    let ternary_rev = Antimorphism::parse("a b c").expect("valid theta");
    let tribonacci = WordGenerator::theta_standard(
        ternary_rev.clone(),
        Word::empty(),
        ternary_rev.parse_word("abc").expect("valid"),
    )
    .expect("valid generator");
    let swap_theta = example_theta();
    let theta_standard = WordGenerator::theta_standard(
        swap_theta.clone(),
        Word::empty(),
        swap_theta.parse_word("ac").expect("valid"),
    )
    .expect("valid generator");

    vec![
        morphic_example(
            "ex5.1",
            "pi(Fibonacci), pi: 0->aa', 1->aa'c; Theta-episturmian and Theta-rich",
            true,
            true,
        ),
        morphic_example(
            "ex5.2",
            "pi(Fibonacci), pi: 0->a'cacc, 1->a'cac; Theta-episturmian, not Theta-rich",
            false,
            true,
        ),
        morphic_example(
            "ex5.3",
            "pi(Fibonacci), pi: 0->aa', 1->acca'; Theta-rich, not Theta-episturmian",
            true,
            false,
        ),
        periodic_example("ex5.4", "(caca')^omega; periodic, not Theta-rich", "caca'", false),
        periodic_example("ex5.5", "(ccaa')^omega; periodic and Theta-rich", "ccaa'", true),
        CorpusWord {
            name: "fibonacci",
            description: "Fibonacci word with Theta = reversal; Sturmian, rich",
            theta: binary_rev,
            generator: WordGenerator::fibonacci(),
            window: 3000,
            rich: true,
            episturmian: true,
        },
        CorpusWord {
            name: "tribonacci",
            description: "Psi((abc)^omega) with Theta = reversal; episturmian, rich",
            theta: ternary_rev,
            generator: tribonacci,
            window: 3000,
            rich: true,
            episturmian: true,
        },
        CorpusWord {
            name: "theta-standard-ac",
            description: "Psi((ac)^omega) with Theta: a<->a', c fixed, empty seed",
            theta: swap_theta,
            generator: theta_standard,
            window: 3000,
            rich: true,
            episturmian: true,
        },
    ]
}

pub fn corpus_word(name: &str) -> Option<CorpusWord> {
    builtin_corpus().into_iter().find(|c| c.name == name)
}

/// Parses a generator spec string (see the module docs). Returns the
/// generator and the antimorphism the word is to be analysed with: the
/// given `theta`, or a default for specs that imply one.
pub fn parse_generator(
    spec: &str,
    theta: Option<&Antimorphism>,
) -> Result<(WordGenerator, Antimorphism)> {
    let (kind, body) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("generator spec {spec:?} has no kind prefix")))?;
    let require_theta = || {
        theta
            .cloned()
            .ok_or_else(|| Error::Parse(format!("generator kind {kind:?} needs a theta spec")))
    };
    match kind {
        "periodic" => {
            let theta = require_theta()?;
            let v = theta.parse_word(body)?;
            Ok((WordGenerator::periodic(v)?, theta))
        }
        "sturmian" => {
            let directive = SturmianDirective::parse(body)?;
            let theta = theta
                .cloned()
                .unwrap_or_else(|| Antimorphism::reversal(Alphabet::binary()));
            let letter = |name: &str| {
                theta.alphabet().letter(name).ok_or_else(|| Error::UnknownLetter {
                    token: name.to_string(),
                    offset: 0,
                })
            };
            let generator = WordGenerator::Sturmian {
                directive,
                zero: letter("0")?,
                one: letter("1")?,
            };
            Ok((generator, theta))
        }
        "morphic" => {
            let (rules, base) = match body.split_once('@') {
                Some((rules, directive)) => (rules, SturmianDirective::parse(directive)?),
                None => (body, SturmianDirective::fibonacci()),
            };
            let theta = theta.cloned().unwrap_or_else(example_theta);
            let (zero, one) = match builtin_morphism_images(rules) {
                Some(images) => (images.0.to_string(), images.1.to_string()),
                None => parse_binary_rules(rules)?,
            };
            let morphism = binary_morphism(&theta, &zero, &one)?;
            Ok((
                WordGenerator::morphic_image(morphism, WordGenerator::sturmian(base)),
                theta,
            ))
        }
        "theta-standard" => {
            let theta = require_theta()?;
            let mut seed = Word::empty();
            let mut directive = None;
            for part in body.split(',') {
                match part.split_once('=') {
                    Some(("seed", v)) => seed = theta.parse_word(v)?,
                    Some(("directive", v)) => directive = Some(theta.parse_word(v)?),
                    _ => {
                        return Err(Error::Parse(format!(
                            "unexpected theta-standard parameter {part:?}"
                        )))
                    }
                }
            }
            let directive = directive
                .ok_or_else(|| Error::Parse("theta-standard needs directive=...".into()))?;
            Ok((WordGenerator::theta_standard(theta.clone(), seed, directive)?, theta))
        }
        "corpus" => {
            let word = corpus_word(body)
                .ok_or_else(|| Error::Parse(format!("unknown corpus word {body:?}")))?;
            let theta = match theta {
                Some(t) => t.clone(),
                None => word.theta,
            };
            Ok((word.generator, theta))
        }
        other => Err(Error::Parse(format!("unknown generator kind {other:?}"))),
    }
}

fn parse_binary_rules(rules: &str) -> Result<(String, String)> {
    let mut zero = None;
    let mut one = None;
    for rule in rules.split(';') {
        match rule.split_once('=') {
            Some(("0", img)) => zero = Some(img.to_string()),
            Some(("1", img)) => one = Some(img.to_string()),
            _ => return Err(Error::Parse(format!("malformed morphism rule {rule:?}"))),
        }
    }
    match (zero, one) {
        (Some(z), Some(o)) => Ok((z, o)),
        _ => Err(Error::Parse("morphism needs images for 0 and 1".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antimorphism::Antimorphism;
    use proptest::prelude::*;

    fn render(theta: &Antimorphism, w: &[Letter]) -> String {
        theta.render(w)
    }

    /// Fixed point of 0 -> 01, 1 -> 0 by direct iteration.
    fn fibonacci_by_substitution(n: usize) -> Vec<u8> {
        let mut w = vec![0u8];
        while w.len() < n {
            w = w
                .iter()
                .flat_map(|&x| if x == 0 { vec![0, 1] } else { vec![0] })
                .collect();
        }
        w.truncate(n);
        w
    }

    #[test]
    fn fibonacci_matches_substitution_oracle() {
        let w = WordGenerator::fibonacci().prefix(1000).unwrap();
        let expected = fibonacci_by_substitution(1000);
        let got: Vec<u8> = w.iter().map(|l| l.0 as u8).collect();
        assert_eq!(got, expected);
        assert_eq!(&got[..13], &[0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn periodic_prefixes() {
        let theta = Antimorphism::parse(EXAMPLE_THETA).unwrap();
        let g = WordGenerator::periodic(theta.parse_word("ccaa'").unwrap()).unwrap();
        assert_eq!(render(&theta, &g.prefix(6).unwrap()), "ccaa'cc");
        let g = WordGenerator::periodic(theta.parse_word("caca'").unwrap()).unwrap();
        assert_eq!(render(&theta, &g.prefix(4).unwrap()), "caca'");
        let g = WordGenerator::periodic(theta.parse_word("c").unwrap()).unwrap();
        assert_eq!(render(&theta, &g.prefix(3).unwrap()), "ccc");
        assert_eq!(WordGenerator::periodic(Word::empty()), Err(Error::EmptyPeriod));
    }

    #[test]
    fn morphic_examples() {
        let ex1 = corpus_word("ex5.1").unwrap();
        // π(0 1 0 0 1 0) = aa' aa'c aa' aa' aa'c aa'
        let w = ex1.generator.prefix(14).unwrap();
        assert_eq!(render(&ex1.theta, &w), "aa'aa'caa'aa'aa'caa'");
        let ex2 = corpus_word("ex5.2").unwrap();
        let w = ex2.generator.prefix(9).unwrap();
        assert_eq!(render(&ex2.theta, &w), "a'cacca'cac");
    }

    #[test]
    fn identity_morphism() {
        let binary = Alphabet::binary();
        let id = Morphism::new(
            binary.clone(),
            binary.clone(),
            vec![Word::from(vec![Letter(0)]), Word::from(vec![Letter(1)])],
        )
        .unwrap();
        let g = WordGenerator::morphic_image(id, WordGenerator::fibonacci());
        assert_eq!(g.prefix(200).unwrap(), WordGenerator::fibonacci().prefix(200).unwrap());
    }

    #[test]
    fn erasing_morphism_rejected() {
        let binary = Alphabet::binary();
        let err = Morphism::new(binary.clone(), binary, vec![Word::empty(), Word::empty()]);
        assert_eq!(err, Err(Error::ErasingMorphism("0".into())));
    }

    #[test]
    fn psi_examples() {
        let swap = Antimorphism::parse("a<->a'").unwrap();
        let a = swap.parse_word("a").unwrap();
        assert_eq!(render(&swap, &psi(&swap, &[], &a)), "aa'");

        let rev = Antimorphism::reversal(Alphabet::binary());
        let directive = rev.parse_word("01").unwrap();
        assert_eq!(render(&rev, &psi(&rev, &[], &directive[..1])), "0");
        assert_eq!(render(&rev, &psi(&rev, &[], &directive)), "010");
    }

    #[test]
    fn step_budget_is_reported() {
        let theta = Antimorphism::parse("c").unwrap();
        let g = WordGenerator::theta_standard(
            theta.clone(),
            Word::empty(),
            theta.parse_word("c").unwrap(),
        )
        .unwrap()
        .with_step_budget(10);
        // Ψ(c^k) = c^k grows by one letter per step.
        assert_eq!(
            g.prefix(50),
            Err(Error::StepBudgetExceeded {
                steps: 10,
                length: 10
            })
        );
        assert_eq!(g.prefix(10).unwrap().len(), 10);
    }

    #[test]
    fn spec_strings() {
        let (g, theta) = parse_generator("periodic:ccaa'", Some(&Antimorphism::parse(EXAMPLE_THETA).unwrap())).unwrap();
        assert_eq!(render(&theta, &g.prefix(5).unwrap()), "ccaa'c");
        let (g, theta) = parse_generator("sturmian:1,1,1,...", None).unwrap();
        assert_eq!(render(&theta, &g.prefix(8).unwrap()), "01001010");
        let (g, theta) = parse_generator("morphic:ex5.1", None).unwrap();
        assert_eq!(render(&theta, &g.prefix(4).unwrap()), "aa'aa'");
        let (g, theta) = parse_generator("morphic:0=aa';1=aa'c", None).unwrap();
        assert_eq!(render(&theta, &g.prefix(4).unwrap()), "aa'aa'");
        let t = Antimorphism::parse(EXAMPLE_THETA).unwrap();
        let (g, theta) = parse_generator("theta-standard:seed=c,directive=a", Some(&t)).unwrap();
        // Ψ(ε) = c, Ψ(a) = (ca)⊕ = caa'c.
        assert_eq!(render(&theta, &g.prefix(4).unwrap()), "caa'c");
        assert!(parse_generator("periodic:cc", None).is_err());
        assert!(parse_generator("bogus:1", None).is_err());
        assert!(parse_generator("sturmian:0", None).is_err());
        let (_, theta) = parse_generator("corpus:ex5.4", None).unwrap();
        assert_eq!(theta.spec(), EXAMPLE_THETA);
    }

    #[test]
    fn corpus_registry() {
        let names: Vec<&str> = builtin_corpus().iter().map(|c| c.name).collect();
        for name in ["ex5.1", "ex5.2", "ex5.3", "ex5.4", "ex5.5", "fibonacci"] {
            assert!(names.contains(&name));
        }
        let ex4 = corpus_word("ex5.4").unwrap();
        assert_eq!(ex4.theta.spec(), "a<->a' c");
        assert_eq!(
            ex4.generator,
            WordGenerator::periodic(ex4.theta.parse_word("caca'").unwrap()).unwrap()
        );
    }

    proptest! {
        #[test]
        fn prefix_coherence(m in 0usize..400, extra in 0usize..400, which in 0usize..8) {
            let word = &builtin_corpus()[which];
            let long = word.generator.prefix(m + extra).unwrap();
            let short = word.generator.prefix(m).unwrap();
            prop_assert_eq!(long.len(), m + extra);
            prop_assert!(short.is_prefix_of(&long));
        }
    }
}
