use witten_count::asymptotics::residual_series;
use witten_count::forms::{count_under, HomogeneousForm};
use witten_count::grid::GridSpec;
use witten_count::lattice::{rho_table, summatory_hyperbola, CountMethod};
use witten_count::quadrature::{eval_f, eval_f_substituted};
use witten_count::witten_zeta::zeta_su3_via_rho;

#[test]
fn residual_series_is_method_independent() {
    let xs = GridSpec::new(10, 1_000_000, 9).unwrap().points();
    let brute = residual_series(&xs, CountMethod::Brute).unwrap();
    let hyper = residual_series(&xs, CountMethod::Hyperbola).unwrap();
    for (b, h) in brute.iter().zip(&hyper) {
        assert_eq!(b.x, h.x);
        assert_eq!(b.exact_count, h.exact_count);
        assert_eq!(b.residual.to_bits(), h.residual.to_bits());
    }
}

#[test]
fn su3_form_counts_the_same_lattice() {
    let su3 = HomogeneousForm::su3();
    for x in [1, 2, 3, 99, 100, 12_345, 1_000_000, 987_654_321] {
        assert_eq!(count_under(&su3, x).unwrap(), summatory_hyperbola(x).unwrap(), "x = {x}");
    }
}

#[test]
fn rho_table_partial_sums_are_summatory() {
    let table = rho_table(20_000).unwrap();
    let mut running = 0;
    for (n, r) in table.iter().enumerate().skip(1) {
        running += r;
        if n % 997 == 0 {
            assert_eq!(running, summatory_hyperbola(n as u64).unwrap());
        }
    }
}

#[test]
fn zeta_by_dimension_uses_the_rho_table() {
    let table = rho_table(500).unwrap();
    let expected: f64 = table
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .map(|(n, &r)| r as f64 / (n as f64).powi(3))
        .sum();
    let got = zeta_su3_via_rho(3.0, 500).unwrap().partial_sum;
    assert!((got - expected).abs() <= 1e-14 * expected);
}

#[test]
fn both_integration_variables_agree() {
    for y in [1e-6, 1e-3, 0.05, 0.25, 0.49] {
        let direct = eval_f(y).unwrap();
        let substituted = eval_f_substituted(y).unwrap();
        assert!((direct - substituted).abs() < 1e-10, "y = {y}: {direct} vs {substituted}");
    }
}
