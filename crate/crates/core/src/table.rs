//! Two-column numeric tables: parsing and piecewise-linear lookup.
//!
//! Text format: one `x y` pair per line, separated by whitespace and/or a
//! comma. Blank lines and lines starting with `#` are ignored. Values are SI.

use crate::error::{Error, Result};

/// Parses two-column text into `(x, y)` pairs.
pub fn parse_two_column(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected 2 columns, found {}", fields.len()),
            });
        }
        let mut parsed = [0.0; 2];
        for (slot, field) in parsed.iter_mut().zip(&fields) {
            *slot = field.parse::<f64>().map_err(|e| Error::Parse {
                line: i + 1,
                message: format!("'{field}': {e}"),
            })?;
            if !slot.is_finite() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("'{field}' is not finite"),
                });
            }
        }
        points.push((parsed[0], parsed[1]));
    }
    Ok(points)
}

/// Validated table with strictly increasing, non-negative abscissae and
/// finite, non-negative ordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl Table {
    pub fn new(points: &[(f64, f64)], min_points: usize) -> Result<Self> {
        if points.len() < min_points {
            return Err(Error::InvalidTable {
                index: points.len(),
                reason: "too few points",
            });
        }
        for (i, &(x, y)) in points.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::InvalidTable {
                    index: i,
                    reason: "non-finite value",
                });
            }
            if x < 0.0 {
                return Err(Error::InvalidTable {
                    index: i,
                    reason: "negative abscissa",
                });
            }
            if y < 0.0 {
                return Err(Error::InvalidTable {
                    index: i,
                    reason: "negative value",
                });
            }
            if i > 0 && x <= points[i - 1].0 {
                return Err(Error::InvalidTable {
                    index: i,
                    reason: "abscissae must be strictly increasing",
                });
            }
        }
        Ok(Table {
            x: points.iter().map(|p| p.0).collect(),
            y: points.iter().map(|p| p.1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.x.iter().copied().zip(self.y.iter().copied())
    }

    pub fn first(&self) -> (f64, f64) {
        (self.x[0], self.y[0])
    }

    pub fn last(&self) -> (f64, f64) {
        let n = self.x.len() - 1;
        (self.x[n], self.y[n])
    }

    pub fn max_value(&self) -> f64 {
        self.y.iter().copied().fold(0.0, f64::max)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.y.windows(2).all(|w| w[1] >= w[0])
    }

    /// Linear interpolation on the segment containing `x`, or on the nearest
    /// end segment when `x` is outside the table.
    pub fn interpolate(&self, x: f64) -> f64 {
        if self.x.len() == 1 {
            return self.y[0];
        }
        let i = self
            .x
            .partition_point(|&xi| xi <= x)
            .clamp(1, self.x.len() - 1);
        let (x0, x1) = (self.x[i - 1], self.x[i]);
        let (y0, y1) = (self.y[i - 1], self.y[i]);
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_commas_and_whitespace() {
        let text = "# omega lambda\n0, 1.0\n\n1e3\t0.5\n  2e3 , 0.25  \n";
        let pts = parse_two_column(text).unwrap();
        assert_eq!(pts, vec![(0.0, 1.0), (1e3, 0.5), (2e3, 0.25)]);
    }

    #[test]
    fn parse_errors_carry_line_number() {
        let err = parse_two_column("# header\n1 2\n3 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_two_column("1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_two_column("1 inf\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn rejects_unsorted() {
        let err = Table::new(&[(0.0, 1.0), (2.0, 1.0), (1.0, 1.0)], 1).unwrap_err();
        assert!(matches!(err, Error::InvalidTable { index: 2, .. }));
        assert!(Table::new(&[(0.0, 1.0), (0.0, 2.0)], 1).is_err());
        assert!(Table::new(&[(0.0, -1.0)], 1).is_err());
        assert!(Table::new(&[], 1).is_err());
    }

    #[test]
    fn interpolates_and_extrapolates() {
        let t = Table::new(&[(1.0, 2.0), (3.0, 6.0), (4.0, 6.0)], 2).unwrap();
        assert_eq!(t.interpolate(2.0), 4.0);
        assert_eq!(t.interpolate(3.0), 6.0);
        assert_eq!(t.interpolate(3.5), 6.0);
        assert_eq!(t.interpolate(0.0), 0.0);
        assert_eq!(t.interpolate(5.0), 6.0);
    }
}
