//! File formats, command-line front end and HTTP service around
//! [`pictosem_core`].

pub mod corpus;
pub mod formats;
pub mod lexicon_io;
pub mod network_io;
pub mod realizer_io;
pub mod resources;
pub mod service;

pub use formats::LoadError;
pub use resources::Resources;
