//! 21-point Gauss-Kronrod rule with the embedded 10-point Gauss rule.
//!
//! Nodes and weights are the QUADPACK `qk21` tables.

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Kronrod estimate and error estimate on one interval.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RuleEstimate {
    pub value: f64,
    pub error: f64,
}

pub(crate) fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> RuleEstimate {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut gauss = 0.0;
    let mut kronrod = f_center * WGK[10];
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];

    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        // Odd Kronrod indices are the Gauss nodes.
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).abs();
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    RuleEstimate { value, error: rescale_error(raw, res_abs, res_asc) }
}

/// QUADPACK's heuristic: `|K - G|` overstates the Kronrod error for smooth
/// integrands, so it is mapped through `(200 e / asc)^(3/2)` and floored at
/// the rounding level.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err;
    if res_asc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / res_asc).powf(1.5);
        e = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = WGK[10] + 2.0 * WGK[..10].iter().sum::<f64>();
        let g: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn exact_for_polynomials() {
        // Kronrod is exact through degree 31, Gauss through degree 19.
        for deg in 0..=31 {
            let est = gk21(&|t: f64| t.powi(deg), 0.0, 1.0);
            let exact = 1.0 / (deg as f64 + 1.0);
            assert!((est.value - exact).abs() < 1e-15, "degree {deg}");
            if deg <= 19 {
                // Only the rounding floor 50 eps |I| remains.
                assert!(est.error <= 50.0 * f64::EPSILON * 1.0001, "degree {deg}: {}", est.error);
            }
        }
    }
}
