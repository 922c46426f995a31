//! The symbolic engine: free graded algebra over `Q(v)`, the twisted
//! coproduct, the bilinear form and its quotients.

pub mod algebra;
pub mod form;

pub use algebra::{
    coproduct_r, divided_power, multiply, real_constant, AlgebraElement, Generator, GeneratorKind, GeneratorSet,
    TensorElement, Word,
};
pub use form::{
    gram_matrix, pair, pair_tensor, pair_words, primitive_space_symbolic, radical_quotient_dim, relations,
    serre_element, serre_ideal_dim, GramMatrix, PrimitiveSpace,
};
