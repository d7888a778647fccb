//! Executable theory of good maps.
//!
//! Two backends share one vocabulary. The finite backend ([`space`],
//! [`constructible`], [`goodness`], [`sweep`]) decides goodness, weak
//! goodness and constructibility on finite topological spaces by exhaustive
//! search. The affine backend ([`poly`], [`affine`]) computes images of
//! constructible sets under polynomial maps with exact Gröbner elimination
//! and extracts certified good-map witnesses.

pub mod affine;
pub mod constructible;
pub mod error;
pub mod goodness;
pub mod poly;
pub mod space;
pub mod sweep;

pub use affine::{
    chevalley_image, good_witness, AffineConstructible, GoodWitness, PolyMap, Stratum,
};
pub use constructible::{
    image_preserves_constructible, is_constructible_bruteforce, is_constructible_criterion,
    LocallyClosedDecomposition,
};
pub use error::{Error, Result};
pub use goodness::{
    is_good_characterization, is_good_definition, is_jacobson, is_weak_good, GoodnessVerdict,
    WeakGoodnessVerdict,
};
pub use space::{FiniteSpace, PointSet, SizeCap, SpaceMap};
pub use sweep::{run_sweep, Counterexample, Instance, Invariant, SweepConfig, SweepReport};
