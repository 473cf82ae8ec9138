//! Grid sampling of two-parameter maps and Wavefront OBJ export.

use std::fmt::Write as _;

use tanvar_core::Jet2;

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    /// Quads of 0-based vertex indices.
    pub faces: Vec<[usize; 4]>,
    pub provenance: String,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sampling {
    pub lo: f64,
    pub hi: f64,
    pub grid: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { lo: -1.0, hi: 1.0, grid: 50 }
    }
}

/// Sample components `coords` (1-based) of `map` on a `grid x grid` lattice.
pub fn sample(map: &[Jet2], coords: [usize; 3], sampling: Sampling, provenance: String) -> Result<Mesh, CliError> {
    let n = sampling.grid;
    if n < 2 {
        return Err(CliError::invalid("grid must be at least 2"));
    }
    if !(sampling.lo < sampling.hi) {
        return Err(CliError::invalid("range must satisfy lo < hi"));
    }
    for &c in &coords {
        if c == 0 || c > map.len() {
            return Err(CliError::invalid(format!("coordinate {c} out of range 1..={}", map.len())));
        }
    }
    let step = (sampling.hi - sampling.lo) / (n - 1) as f64;
    let mut vertices = Vec::with_capacity(n * n);
    for i in 0..n {
        let x = sampling.lo + step * i as f64;
        for j in 0..n {
            let y = sampling.lo + step * j as f64;
            vertices.push(coords.map(|c| map[c - 1].eval_f64(x, y)));
        }
    }
    let mut faces = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let v = i * n + j;
            faces.push([v, v + n, v + n + 1, v + 1]);
        }
    }
    Ok(Mesh { vertices, faces, provenance })
}

/// `%g`-style rendering with `sig` significant digits.
pub fn format_g(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

impl Mesh {
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.provenance);
        for v in &self.vertices {
            let _ = writeln!(out, "v {} {} {}", format_g(v[0], 9), format_g(v[1], 9), format_g(v[2], 9));
        }
        for f in &self.faces {
            let _ = writeln!(out, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1);
        }
        out
    }
}

/// Read back the vertices and faces of an OBJ file written by [`Mesh::to_obj`].
pub fn parse_obj(text: &str) -> Result<(Vec<[f64; 3]>, Vec<Vec<usize>>), String> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let xs: Vec<f64> = parts.map(str::parse).collect::<Result<_, _>>().map_err(|e| format!("line {}: {e}", n + 1))?;
                let v: [f64; 3] = xs.try_into().map_err(|_| format!("line {}: expected 3 coordinates", n + 1))?;
                vertices.push(v);
            }
            Some("f") => {
                let idx: Vec<usize> =
                    parts.map(str::parse).collect::<Result<_, _>>().map_err(|e| format!("line {}: {e}", n + 1))?;
                if idx.iter().any(|&i| i == 0 || i > vertices.len()) {
                    return Err(format!("line {}: face index out of range", n + 1));
                }
                faces.push(idx);
            }
            _ => {}
        }
    }
    Ok((vertices, faces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_format() {
        assert_eq!(format_g(0.0, 9), "0");
        assert_eq!(format_g(1.0, 9), "1");
        assert_eq!(format_g(-0.5, 9), "-0.5");
        assert_eq!(format_g(1.0 / 3.0, 9), "0.333333333");
        assert_eq!(format_g(123456789.0, 9), "123456789");
        assert_eq!(format_g(1234567890.0, 9), "1.23456789e+09");
        assert_eq!(format_g(0.00001234, 9), "1.234e-05");
    }

    #[test]
    fn grid_counts() {
        let k = 4;
        let map = vec![
            Jet2::from_int_terms(&[((1, 0), 1)], k),
            Jet2::from_int_terms(&[((0, 2), 1)], k),
            Jet2::from_int_terms(&[((0, 3), 1)], k),
        ];
        let m = sample(&map, [1, 2, 3], Sampling::default(), "test".into()).unwrap();
        assert_eq!(m.vertices.len(), 2500);
        assert_eq!(m.faces.len(), 49 * 49);
        let (v, f) = parse_obj(&m.to_obj()).unwrap();
        assert_eq!(v.len(), 2500);
        assert_eq!(f.len(), 49 * 49);
        assert!(sample(&map, [1, 2, 4], Sampling::default(), String::new()).is_err());
    }
}
