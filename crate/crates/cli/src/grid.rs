//! `start:end:count` grids, end-inclusive, with `pi` literals.

use std::f64::consts::PI;

/// Parses `1.5`, `pi`, `-pi`, `2pi`, `2*pi`, `pi/4`, `3*pi/4`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let bad = || format!("invalid angle {s:?}");
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.as_str()),
    };
    let value = if let Some(pos) = body.find("pi") {
        let coef = body[..pos].trim_end_matches('*');
        let coef = if coef.is_empty() {
            1.0
        } else {
            coef.parse::<f64>().map_err(|_| bad())?
        };
        let rest = &body[pos + 2..];
        let den = match rest.strip_prefix('/') {
            Some(d) => d.parse::<f64>().map_err(|_| bad())?,
            None if rest.is_empty() => 1.0,
            None => return Err(bad()),
        };
        if den == 0.0 {
            return Err(bad());
        }
        coef * PI / den
    } else {
        body.parse::<f64>().map_err(|_| bad())?
    };
    if !value.is_finite() {
        return Err(bad());
    }
    Ok(if neg { -value } else { value })
}

/// Parsed sample points of a `start:end:count` grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid(pub Vec<f64>);

pub fn parse_grid_arg(s: &str) -> Result<Grid, String> {
    parse_grid(s).map(Grid)
}

pub fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, end, count] = parts.as_slice() else {
        return Err(format!("grid {s:?} must be start:end:count"));
    };
    let (a, b) = (parse_angle(start)?, parse_angle(end)?);
    let n: usize = count
        .trim()
        .parse()
        .map_err(|_| format!("grid count {count:?} must be a positive integer"))?;
    match n {
        0 => Err("grid count must be at least 1".into()),
        1 if a != b => Err("a one-point grid needs start == end".into()),
        1 => Ok(vec![a]),
        _ => Ok(linspace(a, b, n)),
    }
}

/// `n ≥ 2` points from `a` to `b` inclusive, with the last point exactly `b`.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|k| if k + 1 == n { b } else { a + (b - a) * k as f64 / last })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("-pi/2").unwrap(), -PI / 2.0);
        assert_eq!(parse_angle("2pi").unwrap(), 2.0 * PI);
        assert_eq!(parse_angle("3*pi/4").unwrap(), 0.75 * PI);
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
        for bad in ["", "pix", "p", "pi/0", "nan", "inf", "x*pi"] {
            assert!(parse_angle(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn grid_is_end_inclusive() {
        let g = parse_grid("0:pi:64").unwrap();
        assert_eq!(g.len(), 64);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[63], PI);
        assert!((g[1] - PI / 63.0).abs() < 1e-16);
        assert_eq!(parse_grid("1:1:1").unwrap(), vec![1.0]);
        for bad in ["0:pi", "0:pi:0", "0:1:1", "0:pi:-3", "a:b:c"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
