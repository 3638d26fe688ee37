//! 15-point Gauss–Kronrod panel rule with the QUADPACK error heuristic.

#![allow(clippy::excessive_precision)]

use super::{PanelEstimate, PanelRule};
use crate::error::Result;

/// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_412_099_691,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub(crate) struct GaussKronrod15;

impl PanelRule for GaussKronrod15 {
    const EVALS: usize = 15;

    fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> Result<PanelEstimate> {
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let eval = |x: f64| super::checked(f, x);

        let fc = eval(center)?;
        let mut resk = fc * WGK[7];
        let mut resg = fc * WG[3];
        let mut resabs = resk.abs();
        let mut pairs = [(0.0, 0.0); 7];
        for (j, pair) in pairs.iter_mut().enumerate() {
            let dx = half * XGK[j];
            let (f1, f2) = (eval(center - dx)?, eval(center + dx)?);
            resk += WGK[j] * (f1 + f2);
            resabs += WGK[j] * (f1.abs() + f2.abs());
            if j % 2 == 1 {
                resg += WG[j / 2] * (f1 + f2);
            }
            *pair = (f1, f2);
        }
        let mean = 0.5 * resk;
        let mut resasc = WGK[7] * (fc - mean).abs();
        for (j, &(f1, f2)) in pairs.iter().enumerate() {
            resasc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
        }
        let value = resk * half;
        let resabs = resabs * half.abs();
        let resasc = resasc * half.abs();
        let mut error = ((resk - resg) * half).abs();
        if resasc != 0.0 && error != 0.0 {
            error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
        }
        if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            error = error.max(50.0 * f64::EPSILON * resabs);
        }
        Ok(PanelEstimate { value, error })
    }
}
