//! Near-optimal DSC-RSK widths and sech constants for each experiment.

use crate::problems::Experiment;

/// Tuned parameters for one experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preset {
    pub experiment: Experiment,
    /// `(M, r)` pairs in sweep order.
    pub rsk: &'static [(usize, f64)],
    /// Sech `D`, shared by every `M`.
    pub sech_d: f64,
}

impl Preset {
    /// Half-widths the experiment is swept over.
    pub fn m_list(&self) -> Vec<usize> {
        self.rsk.iter().map(|&(m, _)| m).collect()
    }

    /// Tabulated `r` for half-width `m`.
    pub fn r_for(&self, m: usize) -> Option<f64> {
        self.rsk.iter().find(|&&(mm, _)| mm == m).map(|&(_, r)| r)
    }
}

const DIFF_SMALLK: &[(usize, f64)] = &[
    (1, 1.2), (5, 1.9), (10, 2.7), (15, 3.2), (20, 3.6), (25, 4.0),
    (30, 4.3), (35, 4.7), (40, 5.1), (45, 5.5), (50, 5.9),
];

const DIFF_MEDIUMK: &[(usize, f64)] = &[
    (1, 2.3), (5, 2.4), (10, 3.1), (15, 3.7), (20, 4.2), (25, 4.7),
    (30, 5.1), (35, 5.5), (40, 5.8), (45, 6.2), (50, 6.5),
];

const DIFF_EXPDECAY: &[(usize, f64)] = &[
    (1, 0.9), (5, 1.8), (10, 2.9), (15, 3.8), (20, 4.6), (25, 5.3),
    (30, 5.9), (35, 6.5), (40, 7.1), (45, 7.6), (50, 8.1), (55, 8.1),
    (60, 9.0), (65, 9.4), (70, 9.8), (75, 10.3), (80, 10.6),
];

const BVP_BOYD: &[(usize, f64)] = &[
    (1, 2.3), (2, 1.4), (3, 1.7), (4, 2.2), (5, 2.4), (6, 2.5), (7, 2.6),
    (8, 2.9), (9, 3.1), (10, 3.3), (11, 3.5), (12, 3.7), (13, 4.0), (14, 4.1),
    (15, 4.3), (16, 4.5), (17, 4.7), (18, 4.9), (19, 5.1), (20, 5.4), (21, 5.4),
    (22, 5.4), (23, 5.4), (24, 5.4), (25, 5.4), (26, 5.4), (27, 5.4), (28, 5.4),
    (29, 5.4), (30, 5.4),
];

const BVP_CONFINED: &[(usize, f64)] = &[
    (1, 2.7), (5, 3.9), (10, 4.5), (15, 6.0), (20, 6.4), (25, 7.1),
    (30, 7.6), (35, 8.1), (40, 8.6), (45, 9.2), (50, 9.6), (55, 10.1),
    (60, 10.5), (65, 11.0), (70, 11.3), (75, 11.8), (80, 12.3),
];

const BVP_WIDE: &[(usize, f64)] = &[
    (1, 1.1), (5, 2.6), (10, 3.1), (15, 4.6), (20, 5.3), (25, 6.1),
    (30, 6.8), (35, 7.5), (40, 8.1), (45, 8.5), (50, 9.0), (55, 9.5),
    (60, 10.0), (65, 10.4), (70, 10.8), (75, 11.4), (80, 11.8),
];

const HELMHOLTZ: &[(usize, f64)] = &[
    (50, 9.0), (100, 27.9), (150, 35.1), (200, 38.1), (250, 42.3),
    (300, 46.9), (350, 49.6), (400, 53.5), (450, 56.0), (500, 60.0),
];

const HYPERBOLIC: &[(usize, f64)] = &[
    (1, 1.9), (5, 2.4), (10, 4.1), (15, 5.3), (20, 5.9), (25, 6.7),
    (30, 7.2), (35, 7.8), (40, 8.2), (45, 8.8), (50, 9.2), (55, 9.7),
    (60, 10.0), (65, 10.5), (70, 10.8), (75, 11.4), (80, 11.5),
];

const NAVIER_STOKES: &[(usize, f64)] = &[
    (1, 0.8), (5, 1.7), (10, 4.6), (15, 5.4), (20, 6.1), (25, 6.8),
    (30, 7.3), (35, 7.9), (40, 8.3), (45, 8.8), (50, 9.3),
];

const EIGEN: &[(usize, f64)] = &[(50, 35.0), (200, 90.0)];

pub static PRESETS: [Preset; 12] = [
    Preset { experiment: Experiment::DiffSmallK, rsk: DIFF_SMALLK, sech_d: 0.17 },
    Preset { experiment: Experiment::DiffMediumK, rsk: DIFF_MEDIUMK, sech_d: 0.17 },
    Preset { experiment: Experiment::DiffExpDecay, rsk: DIFF_EXPDECAY, sech_d: 0.17 },
    Preset { experiment: Experiment::BvpBoyd, rsk: BVP_BOYD, sech_d: 0.25 },
    Preset { experiment: Experiment::BvpConfined, rsk: BVP_CONFINED, sech_d: 0.18 },
    Preset { experiment: Experiment::BvpWide, rsk: BVP_WIDE, sech_d: 0.18 },
    Preset { experiment: Experiment::HelmConst, rsk: HELMHOLTZ, sech_d: 0.28 },
    Preset { experiment: Experiment::HelmMulti, rsk: HELMHOLTZ, sech_d: 0.28 },
    Preset { experiment: Experiment::HypFew, rsk: HYPERBOLIC, sech_d: 0.36 },
    Preset { experiment: Experiment::HypComb, rsk: HYPERBOLIC, sech_d: 0.36 },
    Preset { experiment: Experiment::Ns2d, rsk: NAVIER_STOKES, sech_d: 0.18 },
    Preset { experiment: Experiment::EigenHo, rsk: EIGEN, sech_d: 0.28 },
];

pub fn preset(experiment: Experiment) -> &'static Preset {
    PRESETS
        .iter()
        .find(|p| p.experiment == experiment)
        .expect("every experiment has a preset")
}
