//! JSON shape documents.
//!
//! ```json
//! {"type": "box", "dimension": 2, "sides": [1.0, 1.0]}
//! {"type": "ball", "dimension": 3, "radius": 1.0, "center": [0, 0, 0]}
//! {"type": "ellipse", "dimension": 2, "axes": [2.0, 1.0]}
//! {"type": "polygon", "dimension": 2, "vertices": [[0,0], [1,0], [0,1]]}
//! {"type": "box_union", "dimension": 2,
//!  "boxes": [{"origin": [0,0], "sides": [1,1]}, {"origin": [1,0], "sides": [1,1]}]}
//! ```
//!
//! `origin` and `center` default to the coordinate origin. Unknown fields
//! are rejected.

use super::{AxisBox, DomainShape};
use crate::error::{BoundsError, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<Vec<f64>>,
    pub sides: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ShapeDocument {
    Box {
        dimension: usize,
        sides: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        origin: Option<Vec<f64>>,
    },
    Ball {
        dimension: usize,
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<Vec<f64>>,
    },
    Ellipse {
        dimension: usize,
        axes: [f64; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<[f64; 2]>,
    },
    Polygon {
        dimension: usize,
        vertices: Vec<[f64; 2]>,
    },
    BoxUnion {
        dimension: usize,
        boxes: Vec<BoxDocument>,
    },
}

fn check_dim(declared: usize, actual: usize, what: &str) -> Result<()> {
    if declared == actual {
        Ok(())
    } else {
        Err(BoundsError::Parse(format!(
            "`dimension` is {declared} but {what} has {actual} coordinates"
        )))
    }
}

impl BoxDocument {
    fn into_box(self, dimension: usize) -> Result<AxisBox> {
        check_dim(dimension, self.sides.len(), "`sides`")?;
        let origin = self.origin.unwrap_or_else(|| vec![0.0; dimension]);
        check_dim(dimension, origin.len(), "`origin`")?;
        Ok(AxisBox::new(origin, self.sides))
    }
}

impl ShapeDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| BoundsError::Parse(e.to_string()))
    }

    /// Parse and validate in one step.
    pub fn parse(text: &str) -> Result<DomainShape> {
        Self::from_json(text)?.into_shape()
    }

    pub fn into_shape(self) -> Result<DomainShape> {
        let shape = match self {
            ShapeDocument::Box { dimension, sides, origin } => {
                DomainShape::Box(BoxDocument { origin, sides }.into_box(dimension)?)
            }
            ShapeDocument::Ball { dimension, radius, center } => {
                let center = center.unwrap_or_else(|| vec![0.0; dimension]);
                check_dim(dimension, center.len(), "`center`")?;
                DomainShape::Ball { center, radius }
            }
            ShapeDocument::Ellipse { dimension, axes, center } => {
                check_dim(dimension, 2, "an ellipse")?;
                DomainShape::Ellipse2D {
                    center: center.unwrap_or([0.0, 0.0]),
                    semi_axes: axes,
                }
            }
            ShapeDocument::Polygon { dimension, vertices } => {
                check_dim(dimension, 2, "a polygon")?;
                DomainShape::Polygon2D { vertices }
            }
            ShapeDocument::BoxUnion { dimension, boxes } => DomainShape::BoxUnion {
                boxes: boxes
                    .into_iter()
                    .map(|b| b.into_box(dimension))
                    .collect::<Result<_>>()?,
            },
        };
        shape.validate()?;
        Ok(shape)
    }

    pub fn from_shape(shape: &DomainShape) -> Self {
        let dimension = shape.dim();
        match shape {
            DomainShape::Box(b) => ShapeDocument::Box {
                dimension,
                sides: b.sides.clone(),
                origin: Some(b.origin.clone()),
            },
            DomainShape::Ball { center, radius } => ShapeDocument::Ball {
                dimension,
                radius: *radius,
                center: Some(center.clone()),
            },
            DomainShape::Ellipse2D { center, semi_axes } => ShapeDocument::Ellipse {
                dimension,
                axes: *semi_axes,
                center: Some(*center),
            },
            DomainShape::Polygon2D { vertices } => ShapeDocument::Polygon {
                dimension,
                vertices: vertices.clone(),
            },
            DomainShape::BoxUnion { boxes } => ShapeDocument::BoxUnion {
                dimension,
                boxes: boxes
                    .iter()
                    .map(|b| BoxDocument {
                        origin: Some(b.origin.clone()),
                        sides: b.sides.clone(),
                    })
                    .collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("shape documents always serialize")
    }
}
