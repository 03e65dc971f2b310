//! Gain-media catalog.
//!
//! Line-oriented `key = value` text, one medium per block, blocks separated
//! by blank lines; `#` starts a comment:
//!
//! ```text
//! name = rose-bengal-dmso
//! n0 = 1.479
//! lambda0_nm = 549
//! gamma_hat = 0.062
//! g0_max_per_cm = 5
//! ```

use std::fmt::Write as _;
use std::path::Path;

use super::GainMediumSpec;

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read catalog {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MediaCatalog {
    media: Vec<GainMediumSpec>,
}

#[derive(Default)]
struct Block {
    start: usize,
    name: Option<String>,
    n0: Option<f64>,
    lambda0_nm: Option<f64>,
    gamma_hat: Option<f64>,
    g0_max_per_cm: Option<f64>,
}

impl Block {
    fn is_empty(&self) -> bool {
        self.name.is_none()
            && self.n0.is_none()
            && self.lambda0_nm.is_none()
            && self.gamma_hat.is_none()
            && self.g0_max_per_cm.is_none()
    }

    fn finish(self) -> Result<GainMediumSpec, CatalogError> {
        let missing = |key: &str| CatalogError::Parse {
            line: self.start,
            message: format!("medium block is missing `{key}`"),
        };
        let spec = GainMediumSpec {
            name: self.name.clone().ok_or_else(|| missing("name"))?,
            n0: self.n0.ok_or_else(|| missing("n0"))?,
            lambda0_nm: self.lambda0_nm.ok_or_else(|| missing("lambda0_nm"))?,
            gamma_hat: self.gamma_hat.ok_or_else(|| missing("gamma_hat"))?,
            g0_max_per_cm: self.g0_max_per_cm.ok_or_else(|| missing("g0_max_per_cm"))?,
        };
        spec.validate().map_err(|e| CatalogError::Parse {
            line: self.start,
            message: e.to_string(),
        })?;
        Ok(spec)
    }
}

impl MediaCatalog {
    /// The diode and dye media.
    pub fn builtin() -> Self {
        Self {
            media: vec![GainMediumSpec::diode(), GainMediumSpec::rose_bengal_dmso()],
        }
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let mut media = Vec::new();
        let mut block = Block::default();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                if !block.is_empty() {
                    media.push(std::mem::take(&mut block).finish()?);
                }
                continue;
            }
            if block.is_empty() {
                block.start = line_no;
            }
            let err = |message: String| CatalogError::Parse { line: line_no, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || {
                value
                    .parse::<f64>()
                    .map_err(|_| err(format!("`{key}` needs a number, got `{value}`")))
            };
            let slot = match key {
                "name" => {
                    if value.is_empty() {
                        return Err(err("empty medium name".into()));
                    }
                    if block.name.replace(value.to_string()).is_some() {
                        return Err(err("duplicate key `name` in block".into()));
                    }
                    continue;
                }
                "n0" => &mut block.n0,
                "lambda0_nm" => &mut block.lambda0_nm,
                "gamma_hat" => &mut block.gamma_hat,
                "g0_max_per_cm" => &mut block.g0_max_per_cm,
                other => return Err(err(format!("unknown key `{other}`"))),
            };
            if slot.replace(number()?).is_some() {
                return Err(err(format!("duplicate key `{key}` in block")));
            }
        }
        if !block.is_empty() {
            media.push(block.finish()?);
        }
        Ok(Self { media })
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Adds `other`'s media, replacing entries with the same name.
    pub fn merge(&mut self, other: MediaCatalog) {
        for medium in other.media {
            match self.media.iter_mut().find(|m| m.name == medium.name) {
                Some(slot) => *slot = medium,
                None => self.media.push(medium),
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<&GainMediumSpec> {
        self.media.iter().find(|m| m.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GainMediumSpec> {
        self.media.iter()
    }

    pub fn len(&self) -> usize {
        self.media.len()
    }

    pub fn is_empty(&self) -> bool {
        self.media.is_empty()
    }

    /// Serialize back into the catalog text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.media.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "name = {}", m.name);
            let _ = writeln!(out, "n0 = {}", m.n0);
            let _ = writeln!(out, "lambda0_nm = {}", m.lambda0_nm);
            let _ = writeln!(out, "gamma_hat = {}", m.gamma_hat);
            let _ = writeln!(out, "g0_max_per_cm = {}", m.g0_max_per_cm);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_round_trips_through_text() {
        let cat = MediaCatalog::builtin();
        assert_eq!(MediaCatalog::parse(&cat.to_text()).unwrap(), cat);
    }

    #[test]
    fn parses_comments_and_blocks() {
        let text = "# custom media\n\nname = weak\nn0 = 1.5 # host\nlambda0_nm = 600\ngamma_hat = 0.05\ng0_max_per_cm = 2\n\n\nname = strong\nn0 = 2\nlambda0_nm = 800\ngamma_hat = 0.1\ng0_max_per_cm = 50\n";
        let cat = MediaCatalog::parse(text).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.get("strong").unwrap().lambda0_nm, 800.0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_number = "name = x\nn0 = abc\n";
        match MediaCatalog::parse(bad_number) {
            Err(CatalogError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let missing = "\n\nname = x\nn0 = 1.5\n";
        match MediaCatalog::parse(missing) {
            Err(CatalogError::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("lambda0_nm"));
            }
            other => panic!("{other:?}"),
        }
        let unknown = "name = x\ncolour = red\n";
        assert!(matches!(
            MediaCatalog::parse(unknown),
            Err(CatalogError::Parse { line: 2, .. })
        ));
        let invalid = "name = x\nn0 = 0.9\nlambda0_nm = 500\ngamma_hat = 0.1\ng0_max_per_cm = 1\n";
        assert!(matches!(
            MediaCatalog::parse(invalid),
            Err(CatalogError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn merge_overrides_by_name() {
        let mut cat = MediaCatalog::builtin();
        let custom =
            MediaCatalog::parse("name = diode\nn0 = 3.5\nlambda0_nm = 1550\ngamma_hat = 0.02\ng0_max_per_cm = 500\n")
                .unwrap();
        cat.merge(custom);
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.get("diode").unwrap().n0, 3.5);
    }
}
