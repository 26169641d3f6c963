//! Colorings of `V(G) ∪ I(G)` and their JSON form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ElementId, Graph, Incidence};

/// Colors are `1..=k`; `0` marks an unassigned element.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {found} vertex colors, graph has {expected} vertices")]
    VertexCount { expected: usize, found: usize },
    #[error("incidence {0} is not an incidence of the graph")]
    UnknownIncidence(Incidence),
    #[error("incidence {0} colored twice")]
    DuplicateIncidence(Incidence),
    #[error("invalid coloring json: {0}")]
    Json(String),
}

/// A (possibly partial) assignment of colors to the elements of a graph.
///
/// Incidence colors are stored in the graph's canonical incidence order, so a
/// coloring is only meaningful together with the graph it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ViColoring {
    pub vertex_colors: Vec<Color>,
    pub incidence_colors: Vec<Color>,
}

impl ViColoring {
    pub fn uncolored(g: &Graph) -> Self {
        ViColoring {
            vertex_colors: vec![0; g.n()],
            incidence_colors: vec![0; g.incidence_count()],
        }
    }

    /// Color by dense element index (vertices first, then incidences).
    #[inline]
    pub fn at(&self, idx: usize) -> Color {
        let n = self.vertex_colors.len();
        if idx < n {
            self.vertex_colors[idx]
        } else {
            self.incidence_colors[idx - n]
        }
    }

    #[inline]
    pub fn set_at(&mut self, idx: usize, c: Color) {
        let n = self.vertex_colors.len();
        if idx < n {
            self.vertex_colors[idx] = c;
        } else {
            self.incidence_colors[idx - n] = c;
        }
    }

    pub fn vertex(&self, v: usize) -> Color {
        self.vertex_colors[v]
    }

    /// Color of the incidence `(v, u)`.
    pub fn incidence(&self, g: &Graph, v: usize, u: usize) -> Color {
        self.incidence_colors[g.incidence_index(v, u).expect("incidence exists")]
    }

    pub fn set_incidence(&mut self, g: &Graph, v: usize, u: usize, c: Color) {
        let k = g.incidence_index(v, u).expect("incidence exists");
        self.incidence_colors[k] = c;
    }

    pub fn element(&self, g: &Graph, e: ElementId) -> Color {
        self.at(e.index(g).expect("element exists"))
    }

    pub fn len(&self) -> usize {
        self.vertex_colors.len() + self.incidence_colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_total(&self) -> bool {
        self.vertex_colors.iter().chain(&self.incidence_colors).all(|&c| c != 0)
    }

    /// Largest color used.
    pub fn k(&self) -> Color {
        self.vertex_colors
            .iter()
            .chain(&self.incidence_colors)
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Number of distinct colors used.
    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<Color> = self
            .vertex_colors
            .iter()
            .chain(&self.incidence_colors)
            .copied()
            .filter(|&c| c != 0)
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Applies `perm[c]` to every assigned color.
    pub fn permute(&mut self, perm: &[Color]) {
        for c in self.vertex_colors.iter_mut().chain(self.incidence_colors.iter_mut()) {
            if *c != 0 {
                *c = perm[*c as usize];
            }
        }
    }

    /// Renumbers colors to `1..=d` in order of first appearance (vertices,
    /// then incidences), without changing the color classes.
    pub fn normalized(&self) -> ViColoring {
        let mut map = std::collections::HashMap::new();
        let mut next = 0;
        let mut out = self.clone();
        for c in out.vertex_colors.iter_mut().chain(out.incidence_colors.iter_mut()) {
            if *c != 0 {
                *c = *map.entry(*c).or_insert_with(|| {
                    next += 1;
                    next
                });
            }
        }
        out
    }

    pub fn to_json(&self, g: &Graph) -> ColoringJson {
        ColoringJson {
            vertex_colors: self.vertex_colors.clone(),
            incidence_colors: self
                .incidence_colors
                .iter()
                .enumerate()
                .map(|(k, &color)| {
                    let inc = g.incidence_at(k);
                    IncidenceColor {
                        v: inc.vertex,
                        u: inc.other,
                        color,
                    }
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self, g: &Graph) -> String {
        serde_json::to_string_pretty(&self.to_json(g)).expect("coloring serializes")
    }

    /// Missing incidences stay unassigned (`0`); the checker reports them.
    pub fn from_json(g: &Graph, raw: &ColoringJson) -> Result<Self, ColoringError> {
        if raw.vertex_colors.len() != g.n() {
            return Err(ColoringError::VertexCount {
                expected: g.n(),
                found: raw.vertex_colors.len(),
            });
        }
        let mut out = ViColoring::uncolored(g);
        out.vertex_colors.clone_from(&raw.vertex_colors);
        let mut seen = vec![false; g.incidence_count()];
        for ic in &raw.incidence_colors {
            let inc = Incidence::new(ic.v, ic.u);
            let k = if ic.v < g.n() { g.incidence_index(ic.v, ic.u) } else { None }
                .ok_or(ColoringError::UnknownIncidence(inc))?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(ColoringError::DuplicateIncidence(inc));
            }
            out.incidence_colors[k] = ic.color;
        }
        Ok(out)
    }

    pub fn from_json_str(g: &Graph, text: &str) -> Result<Self, ColoringError> {
        let raw: ColoringJson = serde_json::from_str(text).map_err(|e| ColoringError::Json(e.to_string()))?;
        Self::from_json(g, &raw)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IncidenceColor {
    pub v: usize,
    pub u: usize,
    pub color: Color,
}

/// `{"vertex_colors": [..], "incidence_colors": [{"v":..,"u":..,"color":..}, ..]}`
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringJson {
    pub vertex_colors: Vec<Color>,
    pub incidence_colors: Vec<IncidenceColor>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_errors() {
        let g = Graph::path(3);
        let mut c = ViColoring::uncolored(&g);
        for (i, slot) in c.vertex_colors.iter_mut().enumerate() {
            *slot = i as Color + 1;
        }
        for (i, slot) in c.incidence_colors.iter_mut().enumerate() {
            *slot = i as Color + 4;
        }
        let back = ViColoring::from_json_str(&g, &c.to_json_string(&g)).unwrap();
        assert_eq!(back, c);

        let bad = r#"{"vertex_colors":[1,2,3],"incidence_colors":[{"v":0,"u":2,"color":1}]}"#;
        assert_eq!(
            ViColoring::from_json_str(&g, bad),
            Err(ColoringError::UnknownIncidence(Incidence::new(0, 2)))
        );
    }

    #[test]
    fn normalization_keeps_classes() {
        let g = Graph::complete(2);
        let c = ViColoring {
            vertex_colors: vec![7, 3],
            incidence_colors: vec![9, 7],
        };
        let n = c.normalized();
        assert_eq!(n.vertex_colors, vec![1, 2]);
        assert_eq!(n.incidence_colors, vec![3, 1]);
        assert_eq!(n.k(), 3);
        assert_eq!(c.incidence(&g, 1, 0), 7);
    }
}
