//! Toric face rings of monoidal complexes: presentations, initial ideals,
//! regular subdivisions and multigraded Betti numbers.

pub mod betti;
pub mod complex;
pub mod document;
pub mod exact;
pub mod geom;
pub mod grobner;
pub mod ring;
pub mod subdiv;
