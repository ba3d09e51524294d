//! Holds the `acceptance` test target; run it with `cargo test -p tfclust-validation --test acceptance`.
