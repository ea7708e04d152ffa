//! Topological types of finite-type surfaces and the arithmetic the graph
//! definitions depend on: complexity, Euler characteristic, pants detection
//! and the minimal intersection constants of the low-complexity complements.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Topological type of a connected finite-type surface, written `g<genus>n<punctures>`.
///
/// Boundary components are identified with punctures throughout; the multicurve
/// graphs do not see the difference.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    pub genus: usize,
    pub punctures: usize,
}

impl SurfaceType {
    /// A surface type without any validity requirement. Use [`SurfaceType::validated`]
    /// when the negative Euler characteristic assumption must hold.
    pub const fn new(genus: usize, punctures: usize) -> Self {
        SurfaceType { genus, punctures }
    }

    /// Constructs the type and checks `chi(S) < 0`.
    pub fn validated(genus: usize, punctures: usize) -> Result<Self> {
        let s = SurfaceType { genus, punctures };
        if s.euler_characteristic() >= 0 {
            return Err(Error::NonHyperbolicSurface {
                genus,
                punctures,
                chi: s.euler_characteristic(),
            });
        }
        Ok(s)
    }

    /// `chi(S) = 2 - 2g - n`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.punctures as i64
    }

    /// Complexity `xi(S) = 3g - 3 + n`, the size of a pants decomposition.
    ///
    /// Errors on surfaces with nonnegative Euler characteristic.
    pub fn complexity(&self) -> Result<usize> {
        if self.euler_characteristic() >= 0 {
            return Err(Error::NonHyperbolicSurface {
                genus: self.genus,
                punctures: self.punctures,
                chi: self.euler_characteristic(),
            });
        }
        let xi = 3 * self.genus as i64 - 3 + self.punctures as i64;
        debug_assert!(xi >= 0);
        Ok(xi as usize)
    }

    /// True iff this is the complexity-zero surface `(0,3)`.
    pub fn is_pair_of_pants(&self) -> bool {
        self.genus == 0 && self.punctures == 3
    }

    /// Minimal number of intersections of two distinct curves on this surface:
    /// 1 on the once-punctured torus, 2 on the four-punctured sphere, 0 whenever
    /// the complexity is at least two.
    ///
    /// Errors on a pair of pants (no essential curves) and invalid surfaces.
    pub fn minimal_intersection_constant(&self) -> Result<usize> {
        let xi = self.complexity()?;
        if xi == 0 {
            return Err(Error::PantsHasNoCurves {
                genus: self.genus,
                punctures: self.punctures,
            });
        }
        Ok(match (self.genus, self.punctures) {
            (1, 1) => 1,
            (0, 4) => 2,
            _ => 0,
        })
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}n{}", self.genus, self.punctures)
    }
}

impl fmt::Debug for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}n{}", self.genus, self.punctures)
    }
}

impl FromStr for SurfaceType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix('g')
            .ok_or_else(|| Error::Serialization(format!("bad surface spec {s:?}")))?;
        let npos = rest
            .find('n')
            .ok_or_else(|| Error::Serialization(format!("bad surface spec {s:?}")))?;
        let genus = rest[..npos]
            .parse::<usize>()
            .map_err(|_| Error::Serialization(format!("bad genus in {s:?}")))?;
        let punctures = rest[npos + 1..]
            .parse::<usize>()
            .map_err(|_| Error::Serialization(format!("bad puncture count in {s:?}")))?;
        Ok(SurfaceType { genus, punctures })
    }
}

impl Serialize for SurfaceType {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SurfaceType {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The result of cutting a surface along a multicurve: a multiset of connected
/// pieces. Cutting a curve gives rise to two punctures, one on each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDecomposition {
    /// Connected components, sorted.
    pub components: Vec<SurfaceType>,
}

impl SurfaceDecomposition {
    pub fn new(mut components: Vec<SurfaceType>) -> Self {
        components.sort();
        SurfaceDecomposition { components }
    }

    /// Number of pair-of-pants components.
    pub fn pants_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.is_pair_of_pants())
            .count()
    }

    /// Components of positive complexity, i.e. everything but the pairs of pants.
    pub fn positive_part(&self) -> Vec<SurfaceType> {
        self.components
            .iter()
            .copied()
            .filter(|c| !c.is_pair_of_pants())
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.components
            .iter()
            .map(|c| c.euler_characteristic())
            .sum()
    }

    pub fn total_punctures(&self) -> usize {
        self.components.iter().map(|c| c.punctures).sum()
    }
}
