//! Exact integer and polynomial primitives.

mod numbers;
mod poly;
mod roots;
mod words;

pub use numbers::{
    binomial, catalan, compositions, divisors, factorial, fibonacci, mobius, Composition,
};
pub use poly::{q_binomial, q_factorial, q_integer, QPolynomial};
pub use roots::{
    cyclotomic, eval_at_root_exact, eval_at_root_numeric, eval_qbin_central_closed, RootValue,
};
pub use words::{
    is_lyndon, lyndon_words, necklace_canonical, necklace_count, word_descents, word_maj,
    words_with_zeros, BinaryWord,
};
