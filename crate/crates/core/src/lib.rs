//! Combinatorics of cartons: standard tableaux, jeu de taquin, growth
//! diagrams, and the enumeration of cartons counting Littlewood-Richardson
//! coefficients.

pub mod carton;
pub mod error;
pub mod growth;
pub mod jdt;
pub mod lr_oracle;
pub mod shapes;
pub mod tableau;
pub mod verify;

pub use carton::{
    canonical_tableaux, carton_init, count, enumerate_cartons, enumerate_cartons_generic, enumerate_cartons_par,
    extend_witness, permute_carton, validate_carton, Carton, CartonGeometry, Corner, Face, PartialCarton,
    Permutation, ValidationReport, Vertex, Witness,
};
pub use error::{Error, Result};
pub use growth::{grow_rectangle, infusion, GrowthGrid, TriangularGrowth};
pub use jdt::{evacuation, rectification, revrectification, tilde};
pub use shapes::{Cell, Partition, Rectangle, SkewShape};
pub use tableau::{all_syt, LayeredTableau, ShapeChain, StandardTableau};
