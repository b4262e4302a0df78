//! Set Splitting Problem model: instances, partitions, simplification,
//! the brute-force decision oracle, and random instance generation.

mod instance;
mod oracle;
mod random;
mod simplify;

pub use instance::{
    check_partition, ElementId, InstanceError, Partition, PartitionMismatch, Side, SplitReport,
    SspInstance,
};
pub use oracle::{brute_force_ssp, OracleError, BRUTE_FORCE_MAX_UNIVERSE};
pub use random::{generate_random_instance, GenError};
pub use simplify::{
    simplify, NoReason, NotSimpleForm, SimpleForm, SimplificationResult, YesReason,
};
