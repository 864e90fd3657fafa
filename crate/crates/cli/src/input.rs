use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use clap::Args;
use clique_core::{parse_edge_list, parse_graph6, Graph};

use crate::CliError;

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Graph in graph6 format.
    #[arg(
        short = 'g',
        long = "graph6",
        value_name = "GRAPH6",
        conflicts_with = "input"
    )]
    pub graph6: Option<String>,

    /// Edge-list file: vertex count on the first line, then one "u v" pair per line.
    #[arg(short = 'i', long = "input", value_name = "FILE")]
    pub input: Option<PathBuf>,
}

impl GraphInput {
    /// Without flags, reads one graph6 string from stdin.
    pub fn load(&self) -> Result<Graph, CliError> {
        if let Some(s) = &self.graph6 {
            return Ok(parse_graph6(s)?);
        }
        if let Some(path) = &self.input {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(path.display().to_string(), e))?;
            return Ok(parse_edge_list(&text)?);
        }
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io("stdin".into(), e))?;
        Ok(parse_graph6(&text)?)
    }
}
