//! Command-line front end: graph files, family specifications, certificate
//! documents and the subcommands built on them.

pub mod commands;
pub mod document;
pub mod family_spec;
pub mod graph_file;

pub use commands::{run, Cli, CliError, Command, Status};
pub use document::{graph_digest, CertificateDocument, Kind};
pub use family_spec::{parse_family, Member};
pub use graph_file::{parse_graph_file, write_graph_file, GraphFile, ParseError, ParseErrorKind};
