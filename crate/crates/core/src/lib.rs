//! Width-optimal LR-drawings of ordered binary trees, worst-case width
//! enumeration, star-shaped tree drawings and the small-area outerplanar
//! drawings built from them.

pub mod cli;
pub mod drawing;
pub mod geometry;
pub mod lr_opt;
pub mod outerplanar;
pub mod star_strong;
pub mod star_weak;
pub mod tree;
pub mod verify;
pub mod worst_case;
