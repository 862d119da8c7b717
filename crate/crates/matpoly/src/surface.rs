//! Sample grids of a polynomial surface for external plotting.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Upper bound on `steps_x * steps_y`.
pub const MAX_SAMPLES: usize = 1 << 22;

/// Significant digits of the decimal column.
pub const DECIMAL_DIGITS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceGrid {
    pub x_min: Rat,
    pub x_max: Rat,
    pub y_min: Rat,
    pub y_max: Rat,
    pub steps_x: usize,
    pub steps_y: usize,
    /// `samples[a][b] = (x_a, y_b, p(x_a, y_b))`.
    pub samples: Vec<Vec<(Rat, Rat, Rat)>>,
}

/// An inclusive rectangle `[x0, x1] x [y0, y1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range {
    pub x: (Rat, Rat),
    pub y: (Rat, Rat),
}

impl Range {
    /// The node rectangle `[1, m] x [1, n]` of `p`.
    pub fn nodes(p: &BiPoly) -> Range {
        let s = p.shape();
        Range {
            x: (Rat::one(), Rat::from(s.m)),
            y: (Rat::one(), Rat::from(s.n)),
        }
    }

    /// Parses `x0:x1,y0:y1`, each bound a rational literal.
    pub fn parse(text: &str) -> Result<Range> {
        let bad = |msg: &str| Error::InvalidArgument(format!("range {text:?}: {msg}"));
        let (xs, ys) = text.split_once(',').ok_or_else(|| bad("expected x0:x1,y0:y1"))?;
        let bounds = |part: &str| -> Result<(Rat, Rat)> {
            let (lo, hi) = part.split_once(':').ok_or_else(|| bad("expected lo:hi"))?;
            let lo: Rat = lo.trim().parse().map_err(|_| bad("invalid bound"))?;
            let hi: Rat = hi.trim().parse().map_err(|_| bad("invalid bound"))?;
            if hi < lo {
                return Err(bad("upper bound below lower bound"));
            }
            Ok((lo, hi))
        };
        Ok(Range {
            x: bounds(xs)?,
            y: bounds(ys)?,
        })
    }
}

fn ticks(lo: &Rat, hi: &Rat, steps: usize) -> Vec<Rat> {
    let width = hi - lo;
    let last = Rat::from(steps - 1);
    (0..steps).map(|k| lo + &(&width * &Rat::from(k) / &last)).collect()
}

impl SurfaceGrid {
    pub fn sample(p: &BiPoly, range: &Range, steps_x: usize, steps_y: usize) -> Result<SurfaceGrid> {
        if steps_x < 2 || steps_y < 2 {
            return Err(Error::InvalidArgument(format!(
                "steps must be at least 2, got {steps_x}x{steps_y}"
            )));
        }
        if steps_x.checked_mul(steps_y).is_none_or(|t| t > MAX_SAMPLES) {
            return Err(Error::InvalidArgument(format!(
                "{steps_x}x{steps_y} exceeds {MAX_SAMPLES} samples"
            )));
        }
        let xs = ticks(&range.x.0, &range.x.1, steps_x);
        let ys = ticks(&range.y.0, &range.y.1, steps_y);
        let samples = xs
            .iter()
            .map(|x| {
                let slice = p.at_x(x);
                ys.iter().map(|y| (x.clone(), y.clone(), slice.eval(y))).collect()
            })
            .collect();
        Ok(SurfaceGrid {
            x_min: range.x.0.clone(),
            x_max: range.x.1.clone(),
            y_min: range.y.0.clone(),
            y_max: range.y.1.clone(),
            steps_x,
            steps_y,
            samples,
        })
    }

    /// The sample at `(x, y)` if it lies on the grid.
    pub fn at(&self, x: &Rat, y: &Rat) -> Option<&Rat> {
        self.samples
            .iter()
            .flatten()
            .find(|(sx, sy, _)| sx == x && sy == y)
            .map(|(_, _, z)| z)
    }

    /// CSV with header `x,y,z,z_decimal`; `z` is exact, `z_decimal` has
    /// [`DECIMAL_DIGITS`] significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,z,z_decimal\n");
        for (x, y, z) in self.samples.iter().flatten() {
            out.push_str(&format!("{x},{y},{z},{}\n", z.to_decimal_string(DECIMAL_DIGITS)));
        }
        out
    }
}
