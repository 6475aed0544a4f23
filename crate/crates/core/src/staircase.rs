//! Staircase diagrams of monomial ideals in two variables.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monomial::{IrreducibleIdeal, Monomial, MonomialIdeal};

/// Pixels per lattice step in SVG output.
pub const SVG_UNIT: u32 = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    ideal: MonomialIdeal,
    /// Generators, by decreasing first exponent.
    pub inner: Vec<(u32, u32)>,
    /// Exponents `b` of the components `(x^{b_1}, y^{b_2})` with both parts positive.
    pub outer: Vec<(u32, u32)>,
    /// Components involving one variable: `(variable, exponent)`.
    pub rays: Vec<(usize, u32)>,
}

impl Staircase {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.ambient_dim() != 2 {
            return Err(Error::NotPlanar(ideal.ambient_dim()));
        }
        ideal.require_nonzero()?;
        let inner: Vec<(u32, u32)> = ideal.generators().iter().map(|g| (g.degree(0), g.degree(1))).collect();
        let outer: Vec<(u32, u32)> = inner.windows(2).map(|w| (w[0].0, w[1].1)).collect();
        let mut rays = Vec::new();
        let (first, last) = (inner[0], inner[inner.len() - 1]);
        if first.1 > 0 {
            rays.push((1, first.1));
        }
        if last.0 > 0 {
            rays.push((0, last.0));
        }
        Ok(Staircase { ideal: ideal.clone(), inner, outer, rays })
    }

    /// The irredundant components read off the corners.
    pub fn components(&self) -> Vec<IrreducibleIdeal> {
        let mut out: Vec<IrreducibleIdeal> =
            self.outer.iter().map(|&(a, b)| IrreducibleIdeal::from_exponents(&[a, b])).collect();
        for &(var, e) in &self.rays {
            let mut exps = [0, 0];
            exps[var] = e;
            out.push(IrreducibleIdeal::from_exponents(&exps));
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    fn extent(&self) -> (u32, u32) {
        let w = self.inner.iter().map(|p| p.0).max().unwrap_or(0) + 2;
        let h = self.inner.iter().map(|p| p.1).max().unwrap_or(0) + 2;
        (w, h)
    }

    /// `o` generator, `x` outer corner, `#` other monomials of the ideal,
    /// `.` standard monomials. The origin is bottom left.
    pub fn ascii(&self) -> String {
        let (w, h) = self.extent();
        let label_width = (h - 1).to_string().len();
        let mut out = String::new();
        for y in (0..h).rev() {
            let _ = write!(out, "{y:>label_width$} ");
            for x in 0..w {
                let p = (x, y);
                let c = if self.inner.contains(&p) {
                    'o'
                } else if self.outer.contains(&p) {
                    'x'
                } else if self.ideal.member_unchecked(&Monomial::new(vec![x, y])) {
                    '#'
                } else {
                    '.'
                };
                out.push(c);
                if x + 1 < w {
                    out.push(' ');
                }
            }
            out.push('\n');
        }
        let _ = write!(out, "{:>label_width$} ", "");
        let axis: Vec<String> = (0..w).map(|x| (x % 10).to_string()).collect();
        out.push_str(&axis.join(" "));
        out.push('\n');
        out
    }

    pub fn svg(&self, names: &[String]) -> String {
        let (w, h) = self.extent();
        let u = SVG_UNIT;
        let margin = u;
        let width = w * u + 2 * margin;
        let height = h * u + 2 * margin;
        // Lattice point (x, y) sits at pixel (px(x), py(y)).
        let px = |x: u32| margin + x * u;
        let py = |y: u32| margin + (h - y) * u;
        let mut s = String::new();
        let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#);
        let _ = writeln!(s, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##);

        // Shaded ideal region: staircase outline closed along the top and right edges.
        let mut pts = vec![(px(w), py(h))];
        let (first, last) = (self.inner[0], self.inner[self.inner.len() - 1]);
        pts.push((px(w), py(first.1)));
        for (i, &(a, b)) in self.inner.iter().enumerate() {
            pts.push((px(a), py(b)));
            if let Some(&(_, nb)) = self.inner.get(i + 1) {
                pts.push((px(a), py(nb)));
            }
        }
        pts.push((px(last.0), py(h)));
        let poly: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(s, r##"<polygon points="{}" fill="#d9e4f5" stroke="#3366aa" stroke-width="2"/>"##, poly.join(" "));

        for x in 0..=w {
            let _ = writeln!(s, r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#cccccc" stroke-width="1"/>"##, px(x), py(0), py(h));
        }
        for y in 0..=h {
            let _ = writeln!(s, r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#cccccc" stroke-width="1"/>"##, py(y), px(0), px(w));
        }
        for &(a, b) in &self.inner {
            let label = Monomial::new(vec![a, b]).display_with(names).to_string();
            let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="5" fill="#3366aa"/>"##, px(a), py(b));
            let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="12" font-family="monospace">{label}</text>"#, px(a) + 6, py(b) + 14);
        }
        for &(a, b) in &self.outer {
            let label = IrreducibleIdeal::from_exponents(&[a, b]).display_with(names).to_string();
            let _ = writeln!(s, r##"<rect x="{}" y="{}" width="10" height="10" fill="none" stroke="#aa3333" stroke-width="2"/>"##, px(a) - 5, py(b) - 5);
            let _ = writeln!(s, r##"<text x="{}" y="{}" font-size="12" font-family="monospace" fill="#aa3333">{label}</text>"##, px(a) + 6, py(b) - 6);
        }
        let x_name = names.first().map_or("z1", String::as_str);
        let y_name = names.get(1).map_or("z2", String::as_str);
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14" font-family="monospace">{x_name}</text>"#, px(w) + 6, py(0) + 4);
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14" font-family="monospace">{y_name}</text>"#, px(0) - 4, py(h) - 8);
        s.push_str("</svg>\n");
        s
    }

    pub fn json(&self) -> Value {
        json!({
            "inner_corners": self.inner.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "outer_corners": self.outer.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "rays": self.rays.iter().map(|&(v, e)| json!({ "var": v + 1, "exponent": e })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decompose_brute, DEFAULT_CANDIDATE_CAP};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(2, gens).unwrap()
    }

    #[test]
    fn staircase_corners() {
        let m = ideal(&[&[5, 0], &[3, 1], &[2, 3], &[0, 4]]);
        let s = Staircase::new(&m).unwrap();
        assert_eq!(s.inner, vec![(5, 0), (3, 1), (2, 3), (0, 4)]);
        assert_eq!(s.outer, vec![(5, 1), (3, 3), (2, 4)]);
        assert!(s.rays.is_empty());
        let brute: Vec<IrreducibleIdeal> = decompose_brute(&m, DEFAULT_CANDIDATE_CAP).unwrap().components().to_vec();
        assert_eq!(s.components(), brute);
    }

    #[test]
    fn principal_has_two_rays() {
        let s = Staircase::new(&ideal(&[&[2, 3]])).unwrap();
        assert_eq!(s.inner, vec![(2, 3)]);
        assert!(s.outer.is_empty());
        assert_eq!(s.rays, vec![(1, 3), (0, 2)]);
    }

    #[test]
    fn maximal_ideal() {
        let s = Staircase::new(&ideal(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.inner, vec![(1, 0), (0, 1)]);
        assert_eq!(s.outer, vec![(1, 1)]);
        assert_eq!(s.ascii(), "2 # # #\n1 o x #\n0 . o #\n  0 1 2\n");
    }

    #[test]
    fn rejects_other_dimensions() {
        let m = MonomialIdeal::from_exponents(3, &[&[1, 0, 0]]).unwrap();
        assert_eq!(Staircase::new(&m).unwrap_err(), Error::NotPlanar(3));
    }

    #[test]
    fn svg_is_deterministic() {
        let m = ideal(&[&[4, 0], &[2, 1], &[1, 2]]);
        let names = vec!["x".to_string(), "y".to_string()];
        let s = Staircase::new(&m).unwrap();
        let a = s.svg(&names);
        assert_eq!(a, s.svg(&names));
        assert!(a.starts_with("<svg"));
        assert!(a.contains("x^4"));
        assert_eq!(s.json()["outer_corners"], json!([[4, 1], [2, 2]]));
    }
}
