//! Cluster categories of type D through tagged edges of a punctured polygon.
//!
//! Objects are the `n²` tagged edges of a polygon with one puncture. The
//! mesh category of the translation quiver `ℤ × E` supplies morphism spaces,
//! which are compared against the crossing numbers of the edges.

pub mod cluster;
pub mod crossing;
pub mod error;
pub mod export;
pub mod geometry;
pub mod knitting;
pub mod linalg;
pub mod mesh;
pub mod quadrilateral;
pub mod quiver;
pub mod tilted;
pub mod triangulation;
pub mod verify;

pub use cluster::{ar_triangle, ext1_dim_closed_form, verify_theorem2, ArTriangle, Theorem2Report};
pub use crossing::{crossing_matrix, crossing_number, CrossingMatrix};
pub use error::{Error, Result};
pub use geometry::{delta_len, enumerate_tagged_edges, pos_inv, pos_inv_from, Position, Tag, TaggedEdge};
pub use mesh::{hom_dim_closed_form, MeshEngine, MeshVertex};
pub use quiver::{quiver_of_triangulation, vanishing_paths_report, QuiverPresentation};
pub use tilted::{ar_quiver_of_category, ar_quiver_of_tilted, dimension_vector, DimensionVector};
pub use triangulation::{
    enumerate_triangulations, exchange_sides, fan_triangulation, flip, is_triangulation, ExchangeData,
    Triangulation,
};
