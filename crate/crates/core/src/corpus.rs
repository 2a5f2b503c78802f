//! The bundled link corpus: PD diagrams plus golden Alexander polynomials.

use std::collections::BTreeMap;
use std::path::Path;

use crate::algebra::{Field, LaurentPoly};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name, ".pd")))),*]
    };
}

const FILES: &[(&str, &str)] = bundled![
    "borromean",
    "chain3",
    "figure_eight",
    "hopf",
    "torus_2_4",
    "torus_2_6",
    "torus_3_3",
    "trefoil",
    "trefoil_lk2",
    "trefoil_meridian",
    "trefoil_split_unknot",
    "unknot",
    "whitehead",
];

const GOLDENS: &str = include_str!("../corpus/goldens.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub pd: String,
    /// Expected classical polynomial in canonical text form.
    pub alexander: Option<String>,
}

impl Entry {
    pub fn diagram(&self) -> Result<LinkDiagram> {
        LinkDiagram::parse_pd(&self.pd).map_err(|e| match e {
            Error::Parse { line, message } => Error::Parse {
                line,
                message: format!("{}: {message}", self.name),
            },
            other => other,
        })
    }

    pub fn golden(&self, nvars: usize) -> Result<Option<LaurentPoly>> {
        self.alexander
            .as_deref()
            .map(|t| LaurentPoly::parse(t, Field::Rational, nvars).map_err(Error::from))
            .transpose()
    }
}

fn parse_goldens(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .filter_map(|l| l.split_once(char::is_whitespace))
        .map(|(name, poly)| (name.to_string(), poly.trim().to_string()))
        .collect()
}

/// Bundled entries, sorted by name.
pub fn entries() -> Vec<Entry> {
    let goldens = parse_goldens(GOLDENS);
    FILES
        .iter()
        .map(|(name, pd)| Entry {
            name: name.to_string(),
            pd: pd.to_string(),
            alexander: goldens.get(*name).cloned(),
        })
        .collect()
}

pub fn entry(name: &str) -> Option<Entry> {
    entries().into_iter().find(|e| e.name == name)
}

/// Every `*.pd` file in `dir`, with goldens from `goldens.txt` when present.
pub fn load_dir(dir: &Path) -> Result<Vec<Entry>> {
    let read = |p: &Path| {
        std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
    };
    let goldens_path = dir.join("goldens.txt");
    let goldens = if goldens_path.exists() {
        parse_goldens(&read(&goldens_path)?)
    } else {
        BTreeMap::new()
    };
    let listing = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for item in listing {
        let path = item.map_err(|e| Error::Io(e.to_string()))?.path();
        if path.extension().is_some_and(|x| x == "pd") {
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            out.push(Entry {
                pd: read(&path)?,
                alexander: goldens.get(&name).cloned(),
                name,
            });
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
