pub mod exactlin;
pub mod exstruct;
pub mod homology;
pub mod k0;
pub mod pathalg;
pub mod reconstruct;
pub mod repmod;
