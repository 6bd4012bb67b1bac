//! Parameter sweeps over methods and stencil half-widths, with CSV and SVG output.

pub mod emit;
pub mod presets;
pub mod svg;
pub mod sweep;

pub use emit::{emit, read_csv, write_csv, Format, CSV_HEADER};
pub use presets::{preset, Preset, PRESETS};
pub use svg::render_svg;
pub use sweep::{run_cell, run_sweep, scheme_for, CellStatus, SweepOptions, SweepResult};
