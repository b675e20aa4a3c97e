//! Text file formats and figure rendering.

mod format;
mod render;

pub use format::{parse_point, parse_poly, parse_vector, CurveFile, FormatError, SemigroupFile};
pub use render::{render_grid, RenderFormat};
