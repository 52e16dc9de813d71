//! Exact linear algebra over F_2 and, by restriction of scalars, over `F_{2^m}`.

mod bitvec;
mod dense;
mod semilinear;
mod subspace;

pub use bitvec::{kernel_of_images, BitVec, Rref};
pub use dense::{invert, vec_mul};
pub use semilinear::{semilinear_kernel_chain, F2Map, SemilinearMap};
pub use subspace::{add_into, pack, scale, unpack, Subspace};
