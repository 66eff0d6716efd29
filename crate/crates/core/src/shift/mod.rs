//! Exact desk-scale realizations of the discrete dynamical examples: the
//! symbolic Σ subshift with its injective-but-not-surjective map, mod-p
//! polynomial subshifts with periodic-point counting, and image-chain
//! stabilization on finite models.

mod lattice;
mod sigma;

pub use lattice::{
    image_chain_stabilization, is_prime, periodic_points_count, reconstruct_from_e,
    write_periodic_counts_csv, ImageChain, ModPConfiguration, PeriodicCount, PeriodicLattice,
    Window, DEFAULT_CELL_CAP,
};
pub use sigma::SigmaConfig;
