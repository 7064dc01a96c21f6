//! Every example compiles against the public API and runs to completion.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run().expect(stringify!($name));
        }
    };
}

example!(approximation_trichotomy, "../examples/approximation_trichotomy.rs");
example!(batch_experiments, "../examples/batch_experiments.rs");
example!(disturbed_pair, "../examples/disturbed_pair.rs");
example!(fd_family, "../examples/fd_family.rs");
example!(fd_sparse_halves, "../examples/fd_sparse_halves.rs");
example!(file_formats, "../examples/file_formats.rs");
example!(homomorphism_reduction, "../examples/homomorphism_reduction.rs");
example!(lemma_verification, "../examples/lemma_verification.rs");
example!(min_degree_pipeline, "../examples/min_degree_pipeline.rs");
example!(oracle_search, "../examples/oracle_search.rs");
example!(uniform_distributions, "../examples/uniform_distributions.rs");
example!(weighted_halves, "../examples/weighted_halves.rs");
