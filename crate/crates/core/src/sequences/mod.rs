//! Counting sequences: a catalog of named sequences with their recurrences,
//! set-partition oracles, and power-series / continued-fraction routes to
//! the strongly monotone partition numbers.

pub mod catalog;
pub mod partition;
pub mod series;

pub use catalog::{
    catalog, catalog_value, catalog_values, identify, Identification, SequenceCatalogEntry,
    SequenceName, CATALOG_MAX_N,
};
pub use partition::{
    bessel_bruteforce, monotone_count, partition_count, partition_flags, partitions,
    strongly_monotone_count, PartitionFlags, SetPartition, MAX_PARTITION_N,
};
pub use series::{a_series_from_cf, a_series_from_gf};
