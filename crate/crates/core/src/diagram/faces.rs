use std::collections::VecDeque;

use serde::Serialize;

use super::{DiagramError, PlanarDiagram, SlotRef};

/// The corner of a crossing between slot `index` and slot `index + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub index: u8,
}

/// A face of the diagram as the cyclic list of corners around it.
pub type Face = Vec<Corner>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

/// A proper 2-colouring of the faces. The face holding corner 0 of
/// crossing 0 is white.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkerboard {
    pub faces: Vec<Face>,
    pub colors: Vec<Color>,
    /// `face_of[c][k]` is the face index of corner `k` at crossing `c`.
    pub face_of: Vec<[usize; 4]>,
}

impl Checkerboard {
    pub fn color_of(&self, crossing: usize, corner: u8) -> Color {
        self.colors[self.face_of[crossing][corner as usize]]
    }

    /// The same faces with the two colours exchanged.
    pub fn swapped(&self) -> Checkerboard {
        Checkerboard {
            faces: self.faces.clone(),
            colors: self.colors.iter().map(|c| c.other()).collect(),
            face_of: self.face_of.clone(),
        }
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }
}

impl PlanarDiagram {
    /// Face cycles traced through the rotation system: from corner
    /// `(x, k)` follow the edge in slot `k + 1` to its other end `(y, j)`
    /// and continue at corner `(y, j)`. The faces partition all `4C` corners.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.crossing_count();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for x in 0..n {
            for k in 0..4u8 {
                if seen[x][k as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let mut at = Corner { crossing: x, index: k };
                while !seen[at.crossing][at.index as usize] {
                    seen[at.crossing][at.index as usize] = true;
                    face.push(at);
                    let leave = SlotRef::new(at.crossing, (at.index + 1) % 4);
                    let arrive = self.other_end(leave);
                    at = Corner {
                        crossing: arrive.crossing,
                        index: arrive.slot,
                    };
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Two-colours the faces so that faces on the two sides of every edge
    /// differ. Requires a validated connected diagram.
    pub fn checkerboard(&self) -> Result<Checkerboard, DiagramError> {
        let report = self.validate();
        if !report.ok {
            return Err(DiagramError::Invalid(report.summary()));
        }
        let faces = self.faces();
        let n = self.crossing_count();
        let mut face_of = vec![[usize::MAX; 4]; n];
        for (i, face) in faces.iter().enumerate() {
            for c in face {
                face_of[c.crossing][c.index as usize] = i;
            }
        }
        // faces on either side of slot s are those of corners s-1 and s
        let mut adjacent = vec![Vec::new(); faces.len()];
        for corners in &face_of {
            for s in 0..4 {
                let a = corners[(s + 3) % 4];
                let b = corners[s];
                adjacent[a].push(b);
                adjacent[b].push(a);
            }
        }
        let mut colors: Vec<Option<Color>> = vec![None; faces.len()];
        let root = face_of[0][0];
        colors[root] = Some(Color::White);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let here = colors[f].expect("queued faces are coloured");
            for &g in &adjacent[f] {
                match colors[g] {
                    None => {
                        colors[g] = Some(here.other());
                        queue.push_back(g);
                    }
                    Some(c) if c == here => {
                        return Err(DiagramError::Invalid(
                            "faces are not two-colourable".into(),
                        ))
                    }
                    Some(_) => {}
                }
            }
        }
        let colors = colors
            .into_iter()
            .map(|c| c.ok_or_else(|| DiagramError::Invalid("disconnected face graph".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Checkerboard {
            faces,
            colors,
            face_of,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_faces_cover_all_corners() {
        let faces = PlanarDiagram::trefoil().faces();
        assert_eq!(faces.len(), 5);
        let mut corners: Vec<Corner> = faces.into_iter().flatten().collect();
        corners.sort();
        corners.dedup();
        assert_eq!(corners.len(), 12);
    }

    #[test]
    fn trefoil_coloring_splits_two_three() {
        let cb = PlanarDiagram::trefoil().checkerboard().unwrap();
        let (w, b) = (cb.count(Color::White), cb.count(Color::Black));
        assert_eq!(w.min(b), 2);
        assert_eq!(w.max(b), 3);
        // opposite corners share a colour, neighbouring corners differ
        for x in 0..3 {
            for k in 0..4u8 {
                assert_eq!(cb.color_of(x, k), cb.color_of(x, (k + 2) % 4));
                assert_ne!(cb.color_of(x, k), cb.color_of(x, (k + 1) % 4));
            }
        }
    }

    #[test]
    fn kink_has_three_faces() {
        let k = PlanarDiagram::unknot();
        assert_eq!(k.faces().len(), 3);
        let cb = k.checkerboard().unwrap();
        assert_eq!(cb.color_of(0, 0), Color::White);
        assert_eq!(cb.count(Color::White) + cb.count(Color::Black), 3);
    }
}
