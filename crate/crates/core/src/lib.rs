//! Consta-g-circulant and consta-θ_g-circulant matrices over finite fields.
//!
//! The crate builds these matrices from their defining polynomials, checks
//! MDS, involutory and semi-involutory properties, counts invertible
//! matrices by formula and by exhaustive enumeration, and runs weight
//! constrained searches for invertible polynomials.
//!
//! ```
//! use consta_circulant::{CirculantSpec, Field};
//!
//! let f16: Field = "F16".parse().unwrap();
//! let h = ["b", "b^2", "b^2+b", "b^3+b^2"]
//!     .map(|s| f16.parse_element(s).unwrap());
//! let spec = CirculantSpec::skew(&f16, 4, 1, consta_circulant::Elem::ONE, h.to_vec(), 1).unwrap();
//! let a = spec.build().unwrap();
//! assert!(a.is_involutory().unwrap());
//! assert!(a.is_mds().unwrap().is_mds);
//! ```

pub mod census;
pub mod circulant;
pub mod cli;
pub mod error;
pub mod gf;
pub mod matrix;
pub mod mds;
pub mod poly;
pub mod skew;


pub use circulant::{CirculantKind, CirculantSpec};
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use matrix::Matrix;
pub use poly::{Poly, QuotientElement, QuotientRing};
pub use skew::{SkewPoly, SkewQuotientElement, SkewQuotientRing};



