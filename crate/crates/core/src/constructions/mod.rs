//! Seed maniplexes and named Cayley extensions.

mod catalog;
mod extensions;
mod seeds;

pub use catalog::{catalog, seed, CatalogEntry, Construction};
pub use extensions::{
    check_no_self_glued_facet, color_coded, ditope, facet_graph, facet_two_coloring, flat_extension, toroid_44,
    toroid_cubic, two_hat, two_hat_s_minus1,
};
pub use seeds::{cube, cuboctahedron, map_from_faces, polygon, simplex, square_pyramid};
