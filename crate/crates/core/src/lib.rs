//! Exact minimal pumping constants of regular languages.
//!
//! Languages are given as complete DFAs over an explicit [`Alphabet`]. The
//! crate computes `mpc`, `mpl`, `mps` and the state complexity `sc`, applies
//! the usual closure operations, and builds the parameterized witness
//! families that realize prescribed constant combinations.
//!
//! ```
//! use minpump::{analyze, parse_regex, Alphabet};
//!
//! let sigma = Alphabet::from_chars("ab").unwrap();
//! let d = parse_regex("a^* + a^*bb^* + a^*bb^*aa^* + a^*bb^*aa^*bb^*", &sigma).unwrap();
//! let r = analyze(&d).unwrap();
//! assert_eq!((r.mpc, r.sc), (1, 5));
//! ```

pub mod alphabet;
pub mod dfa;
pub mod error;
pub mod harness;
pub mod langops;
pub mod nfa;
pub mod oracle;
pub mod pumping;
pub mod regex;
pub mod witnesses;

pub use alphabet::{Alphabet, Word};
pub use dfa::{Dfa, PartialDfa};
pub use error::{Error, Result};
pub use nfa::Nfa;
pub use pumping::{analyze, mpc, mpl, mps, Analyzer, PumpKind, PumpingReport};
pub use regex::{parse_regex, symbols_of};
