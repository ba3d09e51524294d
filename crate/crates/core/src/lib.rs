//! Clustering of vectors of triangular fuzzy numbers.
//!
//! The distance between two triangular numbers integrates, over all α-cut
//! levels, the squared L2-Wasserstein distance between uniform distributions
//! on the cuts. Data are clustered with an outlier-weighted fuzzy c-means,
//! either directly on the fuzzy data or on a crisp transform in which the
//! distance is Euclidean.
//!
//! * [`fuzzy`]: intervals, triangular numbers, fuzzy vectors
//! * [`distance`]: the distance kernels and comparison baselines
//! * [`transform`]: the quadratic form of the distance and its square root
//! * [`cluster`]: the clustering engines
//! * [`sim`]: synthetic benchmarks and evaluation
//! * [`io`]: dataset and configuration files

pub mod cluster;
pub mod distance;
pub mod error;
pub mod fuzzy;
pub mod io;
pub mod sim;
pub mod transform;

pub use cluster::{run, ClusterResult, Engine, MembershipMatrix, RunConfig, WeightVector};
pub use distance::{tri_wasserstein_sq, vector_distance_sq};
pub use error::{Error, Result};
pub use fuzzy::{FuzzyVector, Interval, TriangularFuzzyNumber};
pub use transform::QuadraticForm3;
