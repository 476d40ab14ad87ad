//! Nonstochastic information measures on finite uncertain variables, and
//! zero-error capacity regions of multiple access channels with a common
//! message.
//!
//! A [`World`] is an explicit set of joint outcomes. Ranges, overlap
//! partitions, common variables and the nonstochastic information `I*` are all
//! computed from it exactly. Channels, codes and cooperation structures turn
//! MAC coding questions into worlds, and the [`region`] module computes
//! achievable message-count triples both through structures and by direct
//! code search.

mod bitset;

pub mod codec;
pub mod error;
pub mod mac;
pub mod overlap;
pub mod region;
pub mod union_find;
pub mod world;

pub use codec::{decode, oracle_decodable, synthesize_code, verify_zero_error, Certificate, SynthesisResult, Verdict};
pub use error::{Error, ErrorKind, Result};
pub use mac::{
    build_coded_world, build_structure_world, check_structure_markov, presets, Channel, Code, CooperationStructure,
    DecoderTables, MessageSpec, MuTriple, Sequence, StructureEntry, Transition, DEFAULT_WORLD_CAP,
};
pub use overlap::{
    conditional_info, conditional_overlap_partition, factor_through, maximal_cv, nc_info, nc_maximal_cv, nc_partition,
    nonstochastic_info, overlap_partition, partition_join, CommonVariable, Info, NcCommonVariable, Partition,
};
pub use region::{
    capacity_region, oracle_region, rate_cuboid, single_user_capacity, Bounds, OracleRegion, RateCuboid, RateRegion,
    SingleUserCapacity, Strategy, StructureRegion,
};
pub use world::{tuple, Assignment, Range, Symbol, Tuple, VariableName, World};
