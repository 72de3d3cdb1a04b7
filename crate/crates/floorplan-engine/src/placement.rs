use std::fmt;

use serde::{Deserialize, Serialize};

use crate::EngineError;

/// Which floors carry the node germs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GermPlacement {
    /// No germ at all: the smooth surface.
    Smooth,
    /// One germ on the floor of this degree.
    Single(i64),
    /// Two germs, on floors of degrees `(a, b)` with `a >= b`.
    Pair(i64, i64),
}

impl GermPlacement {
    /// The five binodal cases.
    pub const BINODAL: [GermPlacement; 5] = [
        GermPlacement::Pair(3, 1),
        GermPlacement::Pair(2, 1),
        GermPlacement::Pair(3, 2),
        GermPlacement::Pair(2, 2),
        GermPlacement::Pair(3, 3),
    ];

    pub const NODAL: [GermPlacement; 3] =
        [GermPlacement::Single(3), GermPlacement::Single(2), GermPlacement::Single(1)];

    pub fn for_delta(delta: u8) -> Result<Vec<GermPlacement>, EngineError> {
        match delta {
            0 => Ok(vec![GermPlacement::Smooth]),
            1 => Ok(Self::NODAL.to_vec()),
            2 => Ok(Self::BINODAL.to_vec()),
            _ => Err(EngineError::UnsupportedDelta(delta)),
        }
    }

    pub fn validate(self) -> Result<GermPlacement, EngineError> {
        let ok = match self {
            GermPlacement::Smooth => true,
            GermPlacement::Single(d) => (1..=3).contains(&d),
            GermPlacement::Pair(a, b) => Self::BINODAL.contains(&GermPlacement::Pair(a, b)),
        };
        if ok {
            Ok(self)
        } else {
            Err(EngineError::InvalidPlacement(self.to_string()))
        }
    }

    pub fn delta(self) -> usize {
        match self {
            GermPlacement::Smooth => 0,
            GermPlacement::Single(_) => 1,
            GermPlacement::Pair(..) => 2,
        }
    }

    /// Germs on the floor of degree `degree`.
    pub fn germs_on(self, degree: i64) -> usize {
        match self {
            GermPlacement::Smooth => 0,
            GermPlacement::Single(d) => usize::from(d == degree),
            GermPlacement::Pair(a, b) => usize::from(a == degree) + usize::from(b == degree),
        }
    }

    /// Short code used in plan ids.
    pub fn code(self) -> String {
        match self {
            GermPlacement::Smooth => "z".into(),
            GermPlacement::Single(d) => format!("q{d}"),
            GermPlacement::Pair(a, b) => format!("p{a}{b}"),
        }
    }

    pub fn parse_code(s: &str) -> Option<GermPlacement> {
        let digits: Vec<i64> = s.chars().skip(1).map(|c| c.to_digit(10).map(i64::from)).collect::<Option<_>>()?;
        let p = match (s.chars().next()?, digits.as_slice()) {
            ('z', []) => GermPlacement::Smooth,
            ('q', [d]) => GermPlacement::Single(*d),
            ('p', [a, b]) => GermPlacement::Pair(*a, *b),
            _ => return None,
        };
        p.validate().ok()
    }
}

impl fmt::Display for GermPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GermPlacement::Smooth => f.write_str("()"),
            GermPlacement::Single(d) => write!(f, "({d})"),
            GermPlacement::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

fn binom2(n: i64) -> usize {
    (n * (n - 1) / 2) as usize
}

/// Points on the floors of degree 3, 2 and 1: each floor of degree `i` with
/// `g` germs passes through `binom(i+2, 2) - 1 - g` points. Three more
/// points fix the relative position of consecutive floors.
pub fn allocate_points(placement: GermPlacement) -> Result<[usize; 3], EngineError> {
    let p = placement.validate()?;
    Ok([3, 2, 1].map(|i| binom2(i + 2) - 1 - p.germs_on(i)))
}

/// Number of points of the configuration: the floor points plus three.
pub fn total_points(placement: GermPlacement) -> Result<usize, EngineError> {
    Ok(allocate_points(placement)?.iter().sum::<usize>() + 3)
}
