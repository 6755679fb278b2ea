//! Harness around the codec: channel simulation, a brute-force reference
//! decoder, op-count benchmarking, the block file format and a quick
//! self-test.

pub mod bench;
pub mod blockfile;
pub mod channel;
pub mod oracle;
pub mod selftest;

pub use bench::{bench, BenchConfig, OpCountReport};
pub use channel::{corrupt, ChannelSpec, Corruption};
pub use oracle::{Oracle, OracleMatch};
