//! Exact chromatic completion numbers.
//!
//! ζ(G) is the largest number of edges that can be added to `G` under some
//! colouring with exactly χ(G) colours without joining two vertices of the
//! same colour. Equivalently it is the maximum over chromatic partitions of
//! the cross-class pair count minus ε(G), so the completed graph is always
//! complete multipartite on the witness classes.
//!
//! The crate provides:
//!
//! - [`graph`] and [`io`]: simple graphs with edge-list and JSON files;
//! - [`coloring`]: exact χ and canonical enumeration of chromatic partitions;
//! - [`partition`]: balanced ("completion") integer partitions and an exhaustive check;
//! - [`completion`]: the branch-and-bound ζ solver and a brute-force reference;
//! - [`families`]: cycle, sunlet, wheel, sun and helm generators with their
//!   printed closed-form values;
//! - [`verify`] and [`cli`]: formula-versus-solver audit rows and the command-line front end.
//!
//! ```
//! use chromcomp::{completion::{zeta, Limits}, families::gen_cycle};
//!
//! let r = zeta(&gen_cycle(5).unwrap(), &Limits::default()).unwrap();
//! assert_eq!(r.zeta, 3);
//! assert_eq!(r.witness.classes(), vec![vec![0, 2], vec![1, 3], vec![4]]);
//! ```

pub mod cli;
pub mod coloring;
pub mod completion;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod partition;
pub mod verify;

pub use coloring::{bad_edges, chromatic_number, enumerate_chromatic_partitions, Colouring};
pub use completion::{zeta, zeta_exhaustive, CompletionResult, Limits};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use partition::PartitionSpec;
