//! Representation dimension of finite groups and the groups that are
//! minimally faithful in degree 2 or 3.
//!
//! Groups are finite multiplication tables ([`group::Group`]). Character
//! tables are computed exactly over cyclotomic fields ([`cyclotomic`],
//! [`chartab`]); [`repdim`] finds the smallest sum of irreducible degrees
//! with trivial common kernel and compares it against maximal subgroups.
//! [`families`] builds and recognises the known degree-2 and degree-3
//! families, [`repmodel`] gives explicit matrix models, and [`io`] handles
//! the JSON corpus format, the result cache and batch classification.

pub mod arith;
pub mod chartab;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod group;
pub mod io;
pub mod repdim;
pub mod repmodel;
