//! Reed-Muller codes with a local graph search decoder.
//!
//! The decoder walks the graph of codewords joined at minimum distance,
//! choosing each move by a greedy descent of the shortening tree whose child
//! scores come from fast Hadamard transforms. Around it sit BSC and BI-AWGN
//! channel models, exhaustive reference decoders for small codes, and a
//! deterministic parallel Monte-Carlo harness for BLER, ML lower bound and
//! average complexity.

pub mod channel;
pub mod cli;
pub mod codeword;
pub mod config;
pub mod crc;
pub mod decoder;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod rm_code;
pub mod selftest;
pub mod transform;

pub use channel::{transmit, ChannelSpec, LlrVector};
pub use codeword::Codeword;
pub use crc::{crc_append, crc_check, CrcConfig};
pub use decoder::{graph_search, metric, DecodeResult, GraphSearchDecoder, SearchParams, Termination};
pub use error::{Error, Result};
pub use harness::{run_point, run_trial, PointStats, SweepPoint, TrialRecord};
pub use rm_code::{enumerate_min_weight, first_order_halfweight, make_code, CoordSet, RmCode};
pub use transform::{child_heuristics, fht, fht_unit_cost};
