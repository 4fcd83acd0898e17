//! Kashiwara-Nakashima tableau crystals for the symplectic Lie algebra:
//! admissible columns and splits, crystal operators, symplectic jeu de
//! taquin, full and partial Schutzenberger-Lusztig involutions, Baker
//! virtualization into type A, and exhaustive verification of cactus-group
//! and Bender-Knuth relations.

pub mod alphabet;
pub mod cactus;
pub mod column;
pub mod crystal;
pub mod error;
pub mod fixtures;
pub mod involutions;
pub mod shape;
pub mod sjdt;
pub mod tableau;
pub mod type_a;
pub mod virt;
pub mod word;

pub use alphabet::{Alphabet, Letter};
pub use error::{Error, Result};
pub use shape::{Shape, SkewShape};
pub use tableau::SkewTableau;
pub use word::Word;
