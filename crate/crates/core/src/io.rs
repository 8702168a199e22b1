//! JSON file formats for links and shadows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Link, Loop};
use crate::numbers::Color;
use crate::shadow::{Shadow, ShadowEdge, ShadowFace, ShadowVertex};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopRecord {
    pub vertices: Vec<[f64; 3]>,
    pub color: Color,
    #[serde(default)]
    pub framing: i64,
    #[serde(default)]
    pub vertical: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkRecord {
    pub t0: f64,
    pub level: u32,
    pub loops: Vec<LoopRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShadowRecord {
    pub faces: Vec<ShadowFace>,
    #[serde(default)]
    pub edges: Vec<ShadowEdge>,
    #[serde(default)]
    pub vertices: Vec<ShadowVertex>,
}

/// A parsed input file of either kind.
#[derive(Clone, Debug)]
pub enum Input {
    Link(Link),
    Shadow(Shadow),
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

impl LinkRecord {
    pub fn into_link(self) -> Result<Link> {
        let loops = self
            .loops
            .into_iter()
            .enumerate()
            .map(|(i, r)| Loop::new(r.vertices, r.color, r.framing, r.vertical).map_err(|e| e.with_loop_index(i)))
            .collect::<Result<Vec<_>>>()?;
        Link::new(loops, self.t0, self.level)
    }

    pub fn from_link(link: &Link) -> LinkRecord {
        LinkRecord {
            t0: link.t0(),
            level: link.k(),
            loops: link
                .loops()
                .iter()
                .map(|l| LoopRecord {
                    vertices: l.vertices().to_vec(),
                    color: l.color(),
                    framing: l.framing(),
                    vertical: l.is_vertical(),
                })
                .collect(),
        }
    }
}

pub fn parse_link(text: &str) -> Result<Link> {
    serde_json::from_str::<LinkRecord>(text)
        .map_err(parse_err)?
        .into_link()
}

pub fn parse_shadow(text: &str) -> Result<Shadow> {
    let r: ShadowRecord = serde_json::from_str(text).map_err(parse_err)?;
    Shadow::new(r.faces, r.edges, r.vertices)
}

/// Parse a link or a shadow, telling them apart by their top-level keys.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_err)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("top level must be an object".into()))?;
    if obj.contains_key("loops") {
        parse_link(text).map(Input::Link)
    } else if obj.contains_key("faces") {
        parse_shadow(text).map(Input::Shadow)
    } else {
        Err(Error::Parse("expected a link (\"loops\") or a shadow (\"faces\")".into()))
    }
}

pub fn link_to_json(link: &Link) -> String {
    serde_json::to_string_pretty(&LinkRecord::from_link(link)).expect("link records serialize")
}

pub fn shadow_to_json(shadow: &Shadow) -> String {
    let r = ShadowRecord {
        faces: shadow.faces().to_vec(),
        edges: shadow.edges().to_vec(),
        vertices: shadow.vertices().to_vec(),
    };
    serde_json::to_string_pretty(&r).expect("shadow records serialize")
}
