//! Packing colorings: a color `i` class must have pairwise distance greater
//! than its radius `s_i`.

mod search;
mod sdr;
mod sharpness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::graph::{DistanceOracle, Graph};
use crate::text::Tokens;

pub use search::{extend, extend_with, prove_uncolorable, Certificate, ExtendOptions, Extender, ProveOptions};
pub use sdr::sdr_assign;
pub use sharpness::{validate_sharpness_gadget, GadgetCheck, GadgetReport};

/// Colors are stored in a `u8` and colour sets in a `u64` mask.
pub const MAX_COLORS: usize = 63;

/// Non-decreasing packing radii; color `i` (1-based) has radius `radii[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PackingSpec {
    radii: Vec<u32>,
}

impl PackingSpec {
    pub fn new(radii: Vec<u32>) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidSpec("at least one color is required".into()));
        }
        if radii.len() > MAX_COLORS {
            return Err(Error::InvalidSpec(format!("at most {MAX_COLORS} colors are supported")));
        }
        if radii.contains(&0) {
            return Err(Error::InvalidSpec("radii must be positive".into()));
        }
        if radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSpec("radii must be non-decreasing".into()));
        }
        Ok(PackingSpec { radii })
    }

    /// `(1, 2, 2, 2, 2, 2)`: one independent set and five 2-packings.
    pub fn good() -> Self {
        PackingSpec::one_and_twos(5)
    }

    /// `(1, 2^twos)`.
    pub fn one_and_twos(twos: usize) -> Self {
        let mut radii = vec![1];
        radii.extend(std::iter::repeat_n(2, twos));
        PackingSpec::new(radii).expect("valid by construction")
    }

    pub fn k(&self) -> usize {
        self.radii.len()
    }

    pub fn radii(&self) -> &[u32] {
        &self.radii
    }

    /// Radius of 1-based color `c`.
    #[inline]
    pub fn radius(&self, c: u8) -> u32 {
        self.radii[c as usize - 1]
    }
}

impl TryFrom<Vec<u32>> for PackingSpec {
    type Error = Error;
    fn try_from(radii: Vec<u32>) -> Result<Self> {
        PackingSpec::new(radii)
    }
}

impl From<PackingSpec> for Vec<u32> {
    fn from(s: PackingSpec) -> Self {
        s.radii
    }
}

impl FromStr for PackingSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let radii = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::InvalidSpec(format!("bad radius `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        PackingSpec::new(radii)
    }
}

impl fmt::Display for PackingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.radii.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Vertex colors, `0` meaning uncolored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<u8>);

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(|&c| c != 0)
    }

    /// Reads `n` whitespace-separated integers.
    pub fn parse(input: &[u8]) -> std::result::Result<Self, ParseError> {
        let mut toks = Tokens::from_bytes(input)?;
        let mut out = Vec::new();
        while let Some((tok, off)) = toks.next_token() {
            let c: u8 = tok.parse().map_err(|_| ParseError::new(off, format!("bad color `{tok}`")))?;
            out.push(c);
        }
        Ok(Coloring(out))
    }

    fn check_against(&self, g: &Graph, spec: &PackingSpec) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch { expected: g.n(), got: self.len() });
        }
        if let Some(&c) = self.0.iter().find(|&&c| c as usize > spec.k()) {
            return Err(Error::ColorOutOfRange { color: c as usize, k: spec.k() });
        }
        Ok(())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub color: u8,
    pub u: usize,
    pub v: usize,
    pub dist: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Lists every same-colored pair `u < v` closer than allowed.
pub fn verify(g: &Graph, spec: &PackingSpec, c: &Coloring) -> Result<ValidationReport> {
    c.check_against(g, spec)?;
    let oracle = DistanceOracle::new(g);
    Ok(verify_with(&oracle, spec, c))
}

pub(crate) fn verify_with(oracle: &DistanceOracle, spec: &PackingSpec, c: &Coloring) -> ValidationReport {
    let n = c.len();
    let mut violations = Vec::new();
    for u in 0..n {
        let cu = c.0[u];
        if cu == 0 {
            continue;
        }
        for v in u + 1..n {
            if c.0[v] == cu {
                let d = oracle.raw(u, v);
                if d <= spec.radius(cu) {
                    violations.push(Violation { color: cu, u, v, dist: d });
                }
            }
        }
    }
    ValidationReport { valid: violations.is_empty(), violations }
}
