//! The digit-pair / agreement-vector coloring of `K_n` and accessors for its
//! structured colors.

use crate::color::{Color, ColorId, Part};
use crate::coloring::GraphColoring;
use crate::error::{Error, Result};

/// Digit layout of the coloring on `n` vertices: `t` base-`m` digits with `m = 2^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MubayiParams {
    pub t: usize,
    pub m: usize,
}

impl MubayiParams {
    /// Smallest `t` with `n <= 2^(t^2)`.
    pub fn for_n(n: usize) -> Self {
        let mut t = 1;
        while t * t < usize::BITS as usize && n > 1usize << (t * t) {
            t += 1;
        }
        MubayiParams { t, m: 1 << t }
    }

    /// Base-`m` digits of the 0-based vertex `x`, least significant first.
    pub fn digits(&self, mut x: usize) -> Vec<usize> {
        (0..self.t)
            .map(|_| {
                let d = x % self.m;
                x /= self.m;
                d
            })
            .collect()
    }

    /// Upper bound `m^2 * 2^t` on the palette.
    pub fn palette_bound(&self) -> usize {
        self.m * self.m << self.t
    }
}

/// Color of the 0-based pair `{x, y}`: the digit pair at the first differing
/// coordinate, then the agreement vector (`1` where digits differ).
pub fn mubayi_color(params: MubayiParams, x: usize, y: usize) -> Color {
    debug_assert_ne!(x, y);
    let (dx, dy) = (params.digits(x), params.digits(y));
    let a: Vec<Part> = dx.iter().zip(&dy).map(|(p, q)| Part::Int((p != q) as i64)).collect();
    let i = dx.iter().zip(&dy).position(|(p, q)| p != q).expect("distinct vertices");
    Color(vec![Part::set(dx[i] as i64, dy[i] as i64), Part::Tuple(a)])
}

/// Builds the coloring of `K_n`; colors display as `({x_i,y_i},(a_1,...,a_t))`.
pub fn mubayi_coloring(n: usize) -> Result<GraphColoring> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("mubayi coloring needs n >= 2, got {n}")));
    }
    let params = MubayiParams::for_n(n);
    GraphColoring::from_fn(n, 2, |s| Some(mubayi_color(params, s[0], s[1])))
}

/// A decoded color of [`mubayi_coloring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MubayiColor {
    /// Smaller digit of the pair at the first differing coordinate.
    pub eta1: i64,
    /// Larger digit of that pair.
    pub eta2: i64,
    /// `a[j]` is true iff the endpoints differ in coordinate `j + 1`.
    pub a: Vec<bool>,
}

impl MubayiColor {
    pub fn parse(color: &Color) -> Result<Self> {
        let bad = || Error::NotMubayiColor(color.to_string());
        let [Part::Set(e1, e2), Part::Tuple(a)] = color.parts() else {
            return Err(bad());
        };
        if e1 >= e2 {
            return Err(bad());
        }
        let a = a
            .iter()
            .map(|p| match p {
                Part::Int(0) => Ok(false),
                Part::Int(1) => Ok(true),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<bool>>>()?;
        if !a.contains(&true) {
            return Err(bad());
        }
        Ok(MubayiColor { eta1: *e1, eta2: *e2, a })
    }

    /// 1-based index of the first coordinate where the endpoints differ.
    pub fn iota(&self) -> usize {
        1 + self.a.iter().position(|&b| b).expect("nonzero agreement vector")
    }

    /// `a_j` for a 1-based coordinate `j`.
    pub fn a_at(&self, j: usize) -> bool {
        self.a[j - 1]
    }
}

/// Decodes every color of a coloring's table.
pub fn decode_palette(c: &GraphColoring) -> Result<Vec<(ColorId, MubayiColor)>> {
    c.table()
        .iter()
        .map(|(id, v)| MubayiColor::parse(v).map(|m| (id, m)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        assert_eq!(MubayiParams::for_n(2), MubayiParams { t: 1, m: 2 });
        assert_eq!(MubayiParams::for_n(4), MubayiParams { t: 2, m: 4 });
        assert_eq!(MubayiParams::for_n(16), MubayiParams { t: 2, m: 4 });
        assert_eq!(MubayiParams::for_n(17), MubayiParams { t: 3, m: 8 });
        assert_eq!(MubayiParams::for_n(512), MubayiParams { t: 3, m: 8 });
        assert_eq!(MubayiParams::for_n(512).palette_bound(), 512);
    }

    #[test]
    fn small_cases() {
        let c = mubayi_coloring(4).unwrap();
        assert_eq!(c.value_of(&[0, 1]).unwrap().to_string(), "({0,1},(1,0))");
        assert_eq!(c.colors_used(), 6);
        let c = mubayi_coloring(2).unwrap();
        assert_eq!(c.value_of(&[0, 1]).unwrap().to_string(), "({0,1},(1))");
        assert!(mubayi_coloring(512).unwrap().colors_used() <= 512);
    }

    #[test]
    fn accessors() {
        let p = MubayiParams::for_n(16);
        // base 4, least significant first: 0 = (0,0), 9 = (1,2)
        let m = MubayiColor::parse(&mubayi_color(p, 0, 9)).unwrap();
        assert_eq!((m.eta1, m.eta2, m.iota()), (0, 1, 1));
        assert!(m.a_at(1) && m.a_at(2));
        // 4 = (0,1), 8 = (0,2)
        let m = MubayiColor::parse(&mubayi_color(p, 4, 8)).unwrap();
        assert_eq!((m.eta1, m.eta2, m.iota()), (1, 2, 2));
        assert!(!m.a_at(1));
        assert!(MubayiColor::parse(&Color::int(3)).is_err());
    }
}
