//! Yang-Baxter algebras of finite set-theoretic solutions, their Segre
//! products, and exact certificates for the Segre map and its kernel.

pub mod error;
pub mod groebner;
pub mod oracle;
pub mod pbw;
pub mod poly;
pub mod presentation;
pub mod segre;
pub mod solution;
pub mod tensor;
pub mod word;

pub use error::{Error, Result};
pub use groebner::{
    hilbert_function, is_groebner_quadratic, normal_form, normal_monomials, truncated_groebner, QuadraticGbCheck,
    TruncatedGB,
};
pub use oracle::quotient_dim_oracle;
pub use pbw::{pbw_check, skew_polynomial_conditions, PbwReport};
pub use poly::{coeff, Coeff, NcPolynomial};
pub use presentation::{yb_presentation, QuadraticPresentation};
pub use solution::{
    cartesian_product, classify, enumerate_solutions, load_solution, orbit_report, z_solution, QuadraticSet,
};
pub use word::Word;
pub use segre::{
    dim_identity_report, kernel_generators, segre_hilbert_check, segre_map_report, segre_presentation,
    square_free_certificate, z_presentation, SegrePresentation,
};
pub use tensor::{sigma23_transport, sigma23_transport_left, tensor_normal_form, TensorElement};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/solutions.md")]
    mod solutions {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    mod presentations {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/pbw.md")]
    mod pbw {}
    #[doc = include_str!("../../../book/src/segre.md")]
    mod segre {}
    #[doc = include_str!("../../../book/src/segre_map.md")]
    mod segre_map {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
