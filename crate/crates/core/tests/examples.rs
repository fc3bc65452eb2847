//! Every example runs to completion.

macro_rules! example_tests {
    ($($name:ident => $path:literal),* $(,)?) => {
        $(
            #[allow(dead_code)]
            #[path = $path]
            mod $name;

            #[test]
            fn $name() {
                $name::run().unwrap();
            }
        )*
    };
}

example_tests!(
    kinematics => "../examples/kinematics.rs",
    exact_phase_shift => "../examples/exact_phase_shift.rs",
    born_phase_shifts => "../examples/born_phase_shifts.rs",
    numerov_series => "../examples/numerov_series.rs",
    stopping_methods => "../examples/stopping_methods.rs",
    barkas_lindhard => "../examples/barkas_lindhard.rs",
    born_inequality => "../examples/born_inequality.rs",
    coulomb_identity => "../examples/coulomb_identity.rs",
    two_dimensional => "../examples/two_dimensional.rs",
    sweep_table => "../examples/sweep_table.rs",
    fig1_curves => "../examples/fig1_curves.rs",
);
