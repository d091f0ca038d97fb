pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod field;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod linfty;
pub mod lts;
pub mod matched_pair;
pub mod report;
pub mod representation;
