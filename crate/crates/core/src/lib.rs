//! Partial orders on standard Young tableaux: weak, Kazhdan–Lusztig and
//! chain orders, the plactic product, skew orders and Möbius computations.

pub mod error;
pub mod hopf;
pub mod kl;
pub mod orders;
pub mod perm;
pub mod poset;
pub mod rsk;
pub mod shapes;
pub mod skew;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{DescentSet, Permutation, Side};
pub use poset::Poset;
pub use rsk::{insertion_tableau, knuth_class, RskPair};
pub use shapes::Partition;
pub use tableau::{enumerate_skew_syt, enumerate_syt, Tableau};
pub use kl::{DescentConvention, KlTable, QPolynomial};
