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

example!(detect_alternation, "detect_alternation.rs", detect_alternation_runs);
example!(three_coloring, "three_coloring.rs", three_coloring_runs);
example!(lower_bound_hc, "lower_bound_hc.rs", lower_bound_hc_runs);
example!(curves_round_trip, "curves_round_trip.rs", curves_round_trip_runs);
example!(compactify_curves, "compactify_curves.rs", compactify_curves_runs);
example!(stabbed_disks, "stabbed_disks.rs", stabbed_disks_runs);
example!(render_svg, "render_svg.rs", render_svg_runs);
example!(cli_pipeline, "cli_pipeline.rs", cli_pipeline_runs);
