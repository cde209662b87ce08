//! Half-edge orientations compatible with a signature.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// `omega(v, e)` for both half-edges of every edge; side 0 sits at `u`,
/// side 1 at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    sides: Vec<[i8; 2]>,
}

/// Positive edges get `(+1, -1)`, negative edges `(+1, +1)`.
pub fn default_orientation(g: &SignedGraph) -> Orientation {
    Orientation {
        sides: g
            .edges()
            .iter()
            .map(|e| match e.sign {
                Sign::Positive => [1, -1],
                Sign::Negative => [1, 1],
            })
            .collect(),
    }
}

impl Orientation {
    pub fn new(g: &SignedGraph, sides: Vec<[i8; 2]>) -> Result<Self> {
        let o = Orientation { sides };
        o.validate(g)?;
        Ok(o)
    }

    /// `sigma(e) = -omega(u, e) omega(v, e)` on every edge.
    pub fn validate(&self, g: &SignedGraph) -> Result<()> {
        if self.sides.len() != g.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "orientation covers {} edges, graph has {}",
                self.sides.len(),
                g.edge_count()
            )));
        }
        for (i, (e, s)) in g.edges().iter().zip(&self.sides).enumerate() {
            if s.iter().any(|&x| x != 1 && x != -1) {
                return Err(Error::InvalidArgument(format!("edge {i}: orientation values must be +-1")));
            }
            if -(s[0] as i64) * (s[1] as i64) != e.sign.as_i64() {
                return Err(Error::InvalidArgument(format!("edge {i}: orientation incompatible with sign")));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn omega(&self, e: usize, side: u8) -> i64 {
        self.sides[e][side as usize] as i64
    }

    pub fn sides(&self, e: usize) -> [i8; 2] {
        self.sides[e]
    }

    /// Reverse one edge by negating both of its half-edges.
    pub fn flip(&self, e: usize) -> Orientation {
        let mut o = self.clone();
        o.sides[e] = [-o.sides[e][0], -o.sides[e][1]];
        o
    }

    /// The orientation induced on the graph switched at `v`: every
    /// half-edge at `v` is negated.
    pub fn switched(&self, g: &SignedGraph, v: usize) -> Orientation {
        let mut o = self.clone();
        for (s, e) in o.sides.iter_mut().zip(g.edges()) {
            if e.u == v {
                s[0] = -s[0];
            }
            if e.v == v {
                s[1] = -s[1];
            }
        }
        o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn defaults_are_compatible() {
        let g = SignedGraph::new(
            2,
            vec![Edge::positive(0, 1), Edge::negative(0, 1), Edge::positive(1, 1), Edge::negative(0, 0)],
        )
        .unwrap();
        let o = default_orientation(&g);
        assert_eq!(o.sides(0), [1, -1]);
        assert_eq!(o.sides(1), [1, 1]);
        assert_eq!(o.sides(2), [1, -1]);
        assert_eq!(o.sides(3), [1, 1]);
        o.validate(&g).unwrap();
        o.flip(1).validate(&g).unwrap();
        for v in 0..2 {
            o.switched(&g, v).validate(&g.switch(v).unwrap()).unwrap();
        }
        assert!(Orientation::new(&g, vec![[1, 1]; 4]).is_err());
    }
}
