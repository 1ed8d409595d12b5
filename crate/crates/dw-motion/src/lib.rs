//! Untwisted Dijkgraaf-Witten theories over finite groups.
//!
//! Vector spaces are spanned by conjugation classes of homomorphisms from a
//! fundamental group into a finite gauge group, and mapping-class or motion
//! groups act on them by permutations.

pub mod group;
pub mod homs;
pub mod perm;
pub mod presentation;
pub mod simplicial;
pub mod dw;
pub mod links;
pub mod characters;
pub mod cli;
