//! Seidel spectra and Seidel energy of graphs, together with the `D_m` / `D_m*`
//! blow-up constructions and certificates for the equienergy results built on them.
//!
//! The crate is split into:
//!
//! * [`graph`] and [`graph6`]: dense graphs, loop operators, the Kronecker-based
//!   constructions and the graph6 codec.
//! * [`matrix`], [`eigen`], [`charpoly`] and [`spectral`]: exact integer matrices,
//!   a cyclic Jacobi eigensolver, an exact characteristic polynomial oracle, and the
//!   Seidel matrix, spectrum, energy and inertia built on top of them.
//! * [`theory`]: closed-form spectra of the constructions and per-instance certificates.
//! * [`search`]: bulk scanning of graph6 catalogs and report writing.

pub mod charpoly;
pub mod eigen;
mod error;
pub mod format;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod search;
pub mod spectral;
pub mod theory;
pub mod tol;

pub use charpoly::{charpoly_exact, integer_root_multiplicity, IntPolynomial};
pub use eigen::{sym_eigenvalues, RealSymMatrix, Spectrum, SpectrumGroup};
pub use error::{Error, Result};
pub use graph::{add_loops, complement, d_m, d_m_star, remove_loops, Graph};
pub use graph6::{graph_from_graph6, graph_to_graph6, Graph6Error, Graph6ErrorKind};
pub use matrix::{kronecker, IntSymMatrix};
pub use spectral::{
    adjacency_matrix, seidel_energy, seidel_inertia, seidel_matrix, seidel_spectrum, Inertia,
};
pub use theory::{
    certify_theorem1, certify_theorem2, check_cospectral, check_equienergetic, check_hypothesis,
    lemma1_spectrum, lemma2_spectrum, theorem2_spectra, Certificate, ClosedFormSpectrum,
    HypothesisReport, Verdict,
};
