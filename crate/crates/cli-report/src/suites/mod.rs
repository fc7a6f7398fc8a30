pub mod cubic;
pub mod dm;
pub mod hassett;
pub mod hilbert;
pub mod lattice;
