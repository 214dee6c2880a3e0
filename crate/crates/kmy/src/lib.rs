//! Exact diagram calculus for the height-bounded Brauer subalgebras
//! J_{l,n}(delta), interpolating between the Temperley-Lieb algebra
//! (l = -1) and the full Brauer algebra (l = n-2).
//!
//! The crate provides the diagram monoid with loop extraction, the height
//! filtration and its generator closure, cell modules with exact Gram
//! matrices over Q[delta], Specht modules for the symmetric-group layers,
//! tower-of-recollement checks, and decomposition of diagrams into words in
//! the generators u_i, s_m. All arithmetic is exact.

pub mod algebra;
pub mod cells;
pub mod decompose;
pub mod diagram;
pub mod drawing;
pub mod element;
pub mod error;
pub mod height;
pub mod matrix;
pub mod ring;
pub mod specht;
pub mod sturm;
pub mod tower;


pub use algebra::KmyAlgebra;
pub use diagram::Diagram;
pub use element::AlgebraElement;
pub use error::{KmyError, Result};
pub use ring::{Coefficient, GaussianRational, LaurentPoly, Rational, RingSpec};
