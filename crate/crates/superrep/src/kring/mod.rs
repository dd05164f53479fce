//! Grothendieck groups of supermodules: registries of irreducibles, the
//! functors as integer matrices, presented quotient groups and the
//! periodic exact sequences.

mod maps;
mod presentation;
mod provider;
mod registry;
mod sequence;

pub use maps::{eigenlattice, involution_map, map_matrix, Functor, GroupMap};
pub use presentation::{quotient_group, GroupPresentation};
pub use provider::IrrepProvider;
pub use registry::{class_of, GroupElement, IrreducibleRegistry};
pub use sequence::{
    abs_table, build_sequence, build_tower, check_exactness, check_node, connecting_maps, coordinates,
    image_lattice, is_injective, is_surjective, kernel_lattice, six_complex, six_real, twentyfour,
    well_defined, Arrow, ConnectingMaps, ExactSequence, Level, Node, NodeVerdict, Tower, Variant,
};

use thiserror::Error;

use crate::classify::ClassifyError;
use crate::supermodule::ModuleError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KringError {
    #[error("module does not live over the registry's context")]
    WrongDegree,
    #[error("isomorphism test against registry entry {0} was undecided")]
    Undecided(usize),
    #[error("a composition factor of dimension {0} could not be certified irreducible")]
    Uncertified(usize),
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("{0} is not in the expected sublattice")]
    NotInLattice(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("no irreducible provider for this algebra and degree")]
    NoProvider,
    #[error("degree shift obstructed: α² has no square root in the field")]
    Obstructed,
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}
