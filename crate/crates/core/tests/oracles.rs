//! Exhaustive comparison with brute-force oracles on all short words.

mod support;

use support::naive::*;
use theta_rich::palindromic::{gamma, richness_report, theta_palindromic_closure};
use theta_rich::Antimorphism;

fn exhaustive(spec: &str, max_len: usize) {
    let theta = Antimorphism::parse(spec).unwrap();
    let k = theta.alphabet().len() as u16;
    for len in 0..=max_len {
        for w in all_words(k, len) {
            if let Some(m) = mismatch(&theta, &w) {
                panic!("{spec}: {m}");
            }
            let r = richness_report(&theta, &w);
            assert_eq!(r.bound, w.len() + 1 - gamma(&theta, &w).len());
            assert!(r.pal_count <= r.bound);
        }
    }
}

#[test]
fn binary_swap_up_to_ten() {
    exhaustive("a<->a'", 10);
}

#[test]
fn ternary_up_to_eight() {
    exhaustive("a<->a' c", 8);
}

#[test]
fn classic_reversal_up_to_eight() {
    exhaustive("a b c", 8);
}

#[test]
fn closure_is_shortest_palindrome_with_prefix() {
    for spec in ["a<->a'", "a b", "a<->a' c", "a b c", "a<->b c"] {
        let theta = Antimorphism::parse(spec).unwrap();
        let k = theta.alphabet().len() as u16;
        for len in 0..=8 {
            for w in all_words(k, len) {
                let closed = theta_palindromic_closure(&theta, &w);
                assert!(is_pal(&theta, &closed) && closed.starts_with(&w));
                assert_eq!(closed.len(), shortest_palindrome_forced(&theta, &w), "{spec}");
                if len <= 3 {
                    assert_eq!(closed.len(), shortest_palindrome_enumerated(&theta, &w, k));
                }
            }
        }
    }
}
