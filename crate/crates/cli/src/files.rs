//! TOML file schemas and the deterministic writer.
//!
//! Files carry a `type` discriminator: "presentation", "seifert_pair",
//! "seifert_blocks" or "module_presentation". Matrices are row lists;
//! positions are inline tables { region = "ball"|"torus", k = int };
//! module matrices hold polynomial strings. The writer emits a fixed
//! layout so identical data always produces byte-identical files.

use std::fmt::Write as _;

use alex_core::{
    ARibbonPresentation, EtaLinkings, IntMatrix, LaurentMatrix, LaurentPoly, ModulePresentation,
    Position, SeifertBlocks, SeifertPair,
};
use num::bigint::BigInt;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InputFile {
    Presentation(PresentationFile),
    SeifertPair(SeifertPairFile),
    SeifertBlocks(SeifertBlocksFile),
    ModulePresentation(ModuleFile),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub n: usize,
    pub eps: Vec<i64>,
    pub boundary_positions: Vec<Vec<PositionField>>,
    pub interior_positions: Vec<Vec<PositionField>>,
    pub lk_matrix: Vec<Vec<i64>>,
    #[serde(default)]
    pub star_plus: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub star_minus: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub eta_linkings: Option<EtaField>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositionField {
    pub region: String,
    pub k: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaField {
    pub boundary: Vec<i64>,
    pub interior: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertPairFile {
    pub v_plus: Vec<Vec<i64>>,
    pub v_minus: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertBlocksFile {
    pub u_plus: Vec<Vec<i64>>,
    pub u_minus: Vec<Vec<i64>>,
    pub w_plus: Vec<Vec<i64>>,
    pub w_minus: Vec<Vec<i64>>,
    #[serde(default)]
    pub star_plus: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub star_minus: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub matrix: Vec<Vec<String>>,
}

/// Parsed input, lifted into library types.
pub enum Input {
    Presentation(ARibbonPresentation),
    SeifertPair(SeifertPair),
    SeifertBlocks(SeifertBlocks),
    Module(ModulePresentation),
}

pub fn parse_input(text: &str) -> Result<Input, String> {
    let file: InputFile = toml::from_str(text).map_err(|e| e.to_string())?;
    match file {
        InputFile::Presentation(f) => Ok(Input::Presentation(lift_presentation(f)?)),
        InputFile::SeifertPair(f) => {
            let pair = SeifertPair::new(int_matrix(&f.v_plus)?, int_matrix(&f.v_minus)?)
                .map_err(|e| e.to_string())?;
            Ok(Input::SeifertPair(pair))
        }
        InputFile::SeifertBlocks(f) => {
            let mut blocks = SeifertBlocks::new(
                int_matrix(&f.u_plus)?,
                int_matrix(&f.u_minus)?,
                int_matrix(&f.w_plus)?,
                int_matrix(&f.w_minus)?,
            )
            .map_err(|e| e.to_string())?;
            blocks.star_plus = f.star_plus.as_deref().map(int_matrix).transpose()?;
            blocks.star_minus = f.star_minus.as_deref().map(int_matrix).transpose()?;
            Ok(Input::SeifertBlocks(blocks))
        }
        InputFile::ModulePresentation(f) => {
            let rows: Result<Vec<Vec<LaurentPoly>>, String> = f
                .matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| s.parse::<LaurentPoly>().map_err(|e| e.to_string()))
                        .collect()
                })
                .collect();
            let m = LaurentMatrix::from_rows(rows?)
                .ok_or_else(|| "module matrix must be square".to_string())?;
            Ok(Input::Module(ModulePresentation::new(m)))
        }
    }
}

fn lift_presentation(f: PresentationFile) -> Result<ARibbonPresentation, String> {
    let positions = |t: &[Vec<PositionField>]| -> Result<Vec<Vec<Position>>, String> {
        t.iter()
            .map(|row| {
                row.iter()
                    .map(|p| match p.region.as_str() {
                        "ball" => Ok(Position::ball()),
                        "torus" => Ok(Position::torus(p.k)),
                        other => Err(format!("unknown region {other:?}")),
                    })
                    .collect()
            })
            .collect()
    };
    if f.eps.len() != f.n {
        return Err(format!("eps must have {} entries", f.n));
    }
    ARibbonPresentation::new(
        f.eps,
        positions(&f.boundary_positions)?,
        positions(&f.interior_positions)?,
        int_matrix(&f.lk_matrix)?,
        f.star_plus.as_deref().map(int_matrix).transpose()?,
        f.star_minus.as_deref().map(int_matrix).transpose()?,
        f.eta_linkings.map(|e| EtaLinkings { boundary: e.boundary, interior: e.interior }),
    )
    .map_err(|e| e.to_string())
}

fn int_matrix(rows: &[Vec<i64>]) -> Result<IntMatrix, String> {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    IntMatrix::from_rows(big).map_err(|e| e.to_string())
}

fn fmt_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let entries: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn write_seifert_pair(pair: &SeifertPair) -> String {
    let mut out = String::new();
    out.push_str("type = \"seifert_pair\"\n");
    let _ = writeln!(out, "v_plus = {}", fmt_matrix(pair.v_plus()));
    let _ = writeln!(out, "v_minus = {}", fmt_matrix(pair.v_minus()));
    out
}

pub fn write_module(p: &ModulePresentation) -> String {
    let mut out = String::new();
    out.push_str("type = \"module_presentation\"\n");
    let rows: Vec<String> = (0..p.size())
        .map(|i| {
            let entries: Vec<String> = (0..p.size())
                .map(|j| format!("\"{}\"", p.matrix().entry(i, j)))
                .collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    let _ = writeln!(out, "matrix = [{}]", rows.join(", "));
    out
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn write_seifert_blocks(b: &SeifertBlocks) -> String {
    let mut out = String::new();
    out.push_str("type = \"seifert_blocks\"\n");
    let _ = writeln!(out, "u_plus = {}", fmt_matrix(&b.u_plus));
    let _ = writeln!(out, "u_minus = {}", fmt_matrix(&b.u_minus));
    let _ = writeln!(out, "w_plus = {}", fmt_matrix(&b.w_plus));
    let _ = writeln!(out, "w_minus = {}", fmt_matrix(&b.w_minus));
    if let Some(s) = &b.star_plus {
        let _ = writeln!(out, "star_plus = {}", fmt_matrix(s));
    }
    if let Some(s) = &b.star_minus {
        let _ = writeln!(out, "star_minus = {}", fmt_matrix(s));
    }
    out
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn write_presentation(p: &ARibbonPresentation) -> String {
    let fmt_positions = |t: &Vec<Vec<Position>>| -> String {
        let rows: Vec<String> = t
            .iter()
            .map(|row| {
                let entries: Vec<String> = row
                    .iter()
                    .map(|pos| {
                        let region = match pos.region {
                            alex_core::Region::InBall => "ball",
                            alex_core::Region::InTorus => "torus",
                        };
                        format!("{{ region = \"{}\", k = {} }}", region, pos.class_multiple)
                    })
                    .collect();
                format!("[{}]", entries.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    };
    let mut out = String::new();
    out.push_str("type = \"presentation\"\n");
    let _ = writeln!(out, "n = {}", p.n());
    let eps: Vec<String> = p.eps().iter().map(|e| e.to_string()).collect();
    let _ = writeln!(out, "eps = [{}]", eps.join(", "));
    let _ = writeln!(out, "boundary_positions = {}", fmt_positions(p.pos_boundary()));
    let _ = writeln!(out, "interior_positions = {}", fmt_positions(p.pos_interior()));
    let _ = writeln!(out, "lk_matrix = {}", fmt_matrix(p.lk_matrix()));
    if let Some(s) = &p.star_plus {
        let _ = writeln!(out, "star_plus = {}", fmt_matrix(s));
    }
    if let Some(s) = &p.star_minus {
        let _ = writeln!(out, "star_minus = {}", fmt_matrix(s));
    }
    if let Some(eta) = &p.eta_linkings {
        let b: Vec<String> = eta.boundary.iter().map(|x| x.to_string()).collect();
        let i: Vec<String> = eta.interior.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "eta_linkings = {{ boundary = [{}], interior = [{}] }}",
            b.join(", "),
            i.join(", ")
        );
    }
    out
}

#[cfg_attr(not(test), allow(dead_code))]
pub fn write_input(input: &Input) -> String {
    match input {
        Input::Presentation(p) => write_presentation(p),
        Input::SeifertPair(p) => write_seifert_pair(p),
        Input::SeifertBlocks(b) => write_seifert_blocks(b),
        Input::Module(m) => write_module(m),
    }
}
