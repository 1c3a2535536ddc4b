macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(encode_and_enumerate, "encode_and_enumerate.rs", encode_and_enumerate_runs);
example!(hadamard_heuristics, "hadamard_heuristics.rs", hadamard_heuristics_runs);
example!(decode_single_block, "decode_single_block.rs", decode_single_block_runs);
example!(oracle_equivalence, "oracle_equivalence.rs", oracle_equivalence_runs);
example!(bsc_sweep, "bsc_sweep.rs", bsc_sweep_runs);
example!(awgn_ml_bound, "awgn_ml_bound.rs", awgn_ml_bound_runs);
example!(crc_termination, "crc_termination.rs", crc_termination_runs);
