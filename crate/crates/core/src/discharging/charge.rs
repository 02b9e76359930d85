use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A charge stored in quarter units, shown as `p/4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quarters(pub i64);

impl Quarters {
    pub fn whole(x: i64) -> Self {
        Quarters(4 * x)
    }
}

impl std::ops::Add for Quarters {
    type Output = Quarters;
    fn add(self, o: Quarters) -> Quarters {
        Quarters(self.0 + o.0)
    }
}

impl std::ops::Sub for Quarters {
    type Output = Quarters;
    fn sub(self, o: Quarters) -> Quarters {
        Quarters(self.0 - o.0)
    }
}

impl std::iter::Sum for Quarters {
    fn sum<I: Iterator<Item = Quarters>>(it: I) -> Quarters {
        Quarters(it.map(|q| q.0).sum())
    }
}

impl fmt::Display for Quarters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/4", self.0)
    }
}

impl std::str::FromStr for Quarters {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let p = s.strip_suffix("/4").ok_or_else(|| format!("`{s}` is not of the form p/4"))?;
        p.parse().map(Quarters).map_err(|_| format!("bad numerator in `{s}`"))
    }
}

impl Serialize for Quarters {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Quarters {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub vertices: Vec<Quarters>,
    pub faces: Vec<Quarters>,
}

impl ChargeLedger {
    /// `2 deg - 6` on vertices, `len - 6` on faces.
    pub fn initial(degrees: &[usize], face_lengths: &[usize]) -> Self {
        ChargeLedger {
            vertices: degrees.iter().map(|&d| Quarters::whole(2 * d as i64 - 6)).collect(),
            faces: face_lengths.iter().map(|&l| Quarters::whole(l as i64 - 6)).collect(),
        }
    }

    pub fn total(&self) -> Quarters {
        self.vertices.iter().chain(&self.faces).copied().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarters_text() {
        assert_eq!(Quarters(-3).to_string(), "-3/4");
        assert_eq!("14/4".parse::<Quarters>().unwrap(), Quarters(14));
        assert!("1/2".parse::<Quarters>().is_err());
    }
}
