//! Exact-arithmetic engine for Dumas-type irreducibility criteria over
//! Krull-valued fields.

pub mod criteria;
pub mod domains;
pub mod oracle;
pub mod values;
pub mod valuations;
