use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            _ => Err(Error::UnknownSeries(s.to_string())),
        }
    }
}

/// A Cartan type such as `A_3` or `E_8`, with the rank validated for its series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::InvalidRank { series, rank })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `C_2` is reported as `B_2` and `D_3` as `A_3`.
    pub fn canonical(&self) -> Self {
        match (self.series, self.rank) {
            (Series::C, 2) => Self { series: Series::B, rank: 2 },
            (Series::D, 3) => Self { series: Series::A, rank: 3 },
            _ => *self,
        }
    }

    pub fn is_alias(&self) -> bool {
        self.canonical() != *self
    }

    /// Order of the Weyl group from the classical product formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Number of positive roots from the closed formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Every supported type with rank at most `max_rank`, in report order.
    pub fn all_up_to(max_rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for (series, lo) in [(Series::A, 1), (Series::B, 2), (Series::C, 2), (Series::D, 3)] {
            for n in lo..=max_rank {
                out.push(Self { series, rank: n });
            }
        }
        for n in 6..=8usize.min(max_rank) {
            out.push(Self { series: Series::E, rank: n });
        }
        if max_rank >= 4 {
            out.push(Self { series: Series::F, rank: 4 });
        }
        if max_rank >= 2 {
            out.push(Self { series: Series::G, rank: 2 });
        }
        out
    }

    /// Gram matrix of the simple roots in Bourbaki numbering, scaled to integers.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.series {
            Series::A | Series::D | Series::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                match self.series {
                    Series::A => (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -1)),
                    Series::D => {
                        (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                        link(&mut g, n - 3, n - 1, -1);
                    }
                    _ => {
                        // 1-3-4-5-...-n with 2 attached to 4.
                        link(&mut g, 0, 2, -1);
                        link(&mut g, 1, 3, -1);
                        (2..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
                    }
                }
            }
            Series::B => {
                // long roots squared length 2, the last (short) one 1
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 1;
                (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
            }
            Series::C => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                link(&mut g, n - 2, n - 1, -2);
            }
            Series::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Series::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses names like `A3`, `e8`, `D_5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let series: Series = head.parse()?;
        let rank: usize = tail
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::UnknownSeries(s.to_string()))?;
        Self::new(series, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_constraints() {
        assert!(CartanType::new(Series::A, 0).is_err());
        assert!(CartanType::new(Series::B, 1).is_err());
        assert!(CartanType::new(Series::D, 2).is_err());
        assert!(CartanType::new(Series::E, 9).is_err());
        assert!(CartanType::new(Series::F, 3).is_err());
        assert!(CartanType::new(Series::G, 3).is_err());
        assert!(CartanType::new(Series::A, 12).is_ok());
    }

    #[test]
    fn aliases() {
        let c2: CartanType = "C2".parse().unwrap();
        assert_eq!(c2.canonical().to_string(), "B2");
        let d3: CartanType = "d_3".parse().unwrap();
        assert_eq!(d3.canonical().to_string(), "A3");
        assert!(!"D4".parse::<CartanType>().unwrap().is_alias());
        assert!("X3".parse::<CartanType>().is_err());
    }

    #[test]
    fn enumeration_of_types() {
        let names: Vec<String> = CartanType::all_up_to(4).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2"]);
        assert_eq!(CartanType::all_up_to(8).len(), 8 + 7 + 7 + 6 + 3 + 2);
    }
}
