//! Θ-palindromic richness of finite and infinite words.
//!
//! Θ is an involutory antimorphism: reversal composed with an involutory
//! letter permutation. Classic palindromes are the case where the
//! permutation is the identity.

pub mod alphabet;
pub mod antimorphism;
pub mod characterize;
pub mod complexity;
pub mod error;
pub mod factor;
pub mod generators;
pub mod palindromic;
pub mod paltree;
pub mod rauzy;
pub mod word;
pub mod wordspec;

pub use alphabet::{Alphabet, Letter};
pub use antimorphism::{apply_theta, is_theta_palindrome, Antimorphism};
pub use error::{Error, Result};
pub use factor::{complete_return_words, FactorIndex};
pub use word::Word;
