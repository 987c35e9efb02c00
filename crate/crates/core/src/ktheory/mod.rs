//! Counting side of the K-theory of the spherical Hecke-type algebra: its `K₀`
//! rank is the number of characters of `H_A`, which must equal the size of
//! the L-packet at `t₀`, the number of special vertices of the alcove, `|H_A|`
//! and the connection index `f`. `K₁ = 0` is quoted, not computed.

mod characters;

pub use characters::{
    alcove_characters, character_table, character_table_of, cyclotomic, inner_product, is_multiplicative, Character,
};

use crate::affine::{fundamental_alcove, AlcoveStabilizer};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};
use crate::torus::{special_point, stabilizer_alcove};
use crate::weyl::DEFAULT_CAP;

/// Statement quoted for `K₁ = 0` and for the Morita and homotopy links.
pub const K1_SOURCE: &str =
    "theorem: the spherical algebra is Morita equivalent to a homotopy of C^f, so K_0 = Z^f and K_1 = 0";
/// Statement quoted for `R(t₀) = W(t₀)` and `π₀ Z(t₀) = W(t₀)`.
pub const R_GROUP_SOURCE: &str = "literature: the R-group at t0 equals W(t0), and pi_0 of the centralizer of t0 is W(t0)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KReport {
    pub cartan_type: CartanType,
    pub f: u64,
    pub k0_rank: u64,
    pub k1_rank: u64,
    pub l_packet_size: u64,
    pub generator_count: u64,
    pub h_order: u64,
    pub k1_source: &'static str,
}

impl KReport {
    pub fn consistent(&self) -> bool {
        [self.k0_rank, self.l_packet_size, self.generator_count, self.h_order].iter().all(|&x| x == self.f)
            && self.k1_rank == 0
    }

    /// `K₀ = Z` and `K₁ = 0`: the K-theory of a point.
    pub fn is_point(&self) -> bool {
        self.k0_rank == 1 && self.k1_rank == 0
    }
}

/// Number of irreducible representations of `W(t₀)`, from the alcove-method
/// stabilizer; requires it to be abelian.
pub fn l_packet_size(rs: &RootSystem, h: &AlcoveStabilizer) -> Result<u64> {
    let alcove = fundamental_alcove(rs);
    let report = stabilizer_alcove(rs, &alcove, h, &special_point(rs), DEFAULT_CAP)?;
    match report.shape.abelian() {
        Some(g) => Ok(g.order()),
        None => Err(Error::NonAbelian),
    }
}

/// Special vertices of the alcove: `v_0` and every `v_i` with mark `a_i = 1`.
pub fn generator_count(rs: &RootSystem) -> u64 {
    1 + rs.marks().iter().filter(|&&a| a == 1).count() as u64
}

pub fn k_groups_spherical(rs: &RootSystem) -> Result<KReport> {
    let alcove = fundamental_alcove(rs);
    let h = AlcoveStabilizer::build(rs, &alcove)?;
    let k0_rank = alcove_characters(&h)?.len() as u64;
    Ok(KReport {
        cartan_type: rs.cartan_type(),
        f: rs.connection_index(),
        k0_rank,
        k1_rank: 0,
        l_packet_size: l_packet_size(rs, &h)?,
        generator_count: generator_count(rs),
        h_order: h.order() as u64,
        k1_source: K1_SOURCE,
    })
}
