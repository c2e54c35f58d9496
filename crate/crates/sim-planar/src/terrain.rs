//! Heightfield terrain: total height function over x.

use serde::{Deserialize, Serialize};

/// Terrain profile. The height function is total over x; vertical faces
/// are modeled as instantaneous height changes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Terrain {
    Flat {
        friction: f64,
    },
    /// Single step up of `height` at `x`.
    Step {
        x: f64,
        height: f64,
        friction: f64,
    },
    /// Ascending staircase starting at `start_x`.
    Stairs {
        start_x: f64,
        rise: f64,
        run: f64,
        count: u32,
        friction: f64,
    },
    /// Linearly interpolated heightfield sampled every `spacing` meters
    /// starting at `start_x`.
    Uneven {
        start_x: f64,
        spacing: f64,
        heights: Vec<f64>,
        friction: f64,
    },
}

impl Terrain {
    pub fn flat(friction: f64) -> Self {
        Terrain::Flat { friction }
    }

    pub fn friction(&self) -> f64 {
        match self {
            Terrain::Flat { friction }
            | Terrain::Step { friction, .. }
            | Terrain::Stairs { friction, .. }
            | Terrain::Uneven { friction, .. } => *friction,
        }
    }

    pub fn set_friction(&mut self, mu: f64) {
        match self {
            Terrain::Flat { friction }
            | Terrain::Step { friction, .. }
            | Terrain::Stairs { friction, .. }
            | Terrain::Uneven { friction, .. } => *friction = mu,
        }
    }

    /// Terrain height at `x`.
    pub fn height(&self, x: f64) -> f64 {
        match self {
            Terrain::Flat { .. } => 0.0,
            Terrain::Step { x: edge, height, .. } => {
                if x >= *edge {
                    *height
                } else {
                    0.0
                }
            }
            Terrain::Stairs {
                start_x,
                rise,
                run,
                count,
                ..
            } => {
                if x < *start_x {
                    0.0
                } else {
                    let step = ((x - start_x) / run).floor() as i64 + 1;
                    rise * step.min(*count as i64) as f64
                }
            }
            Terrain::Uneven {
                start_x,
                spacing,
                heights,
                ..
            } => {
                if heights.is_empty() {
                    return 0.0;
                }
                let u = (x - start_x) / spacing;
                if u <= 0.0 {
                    return heights[0];
                }
                let i = u.floor() as usize;
                if i + 1 >= heights.len() {
                    return *heights.last().unwrap();
                }
                let frac = u - i as f64;
                heights[i] * (1.0 - frac) + heights[i + 1] * frac
            }
        }
    }
}

/// Five height samples spaced across `[x - radius, x + radius]`.
pub fn sample_heights(terrain: &Terrain, x_foot: f64, radius: f64) -> [f64; 5] {
    let offsets = [-radius, -0.5 * radius, 0.0, 0.5 * radius, radius];
    offsets.map(|dx| terrain.height(x_foot + dx))
}
