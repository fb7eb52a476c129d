// SPDX-License-Identifier: Apache-2.0

use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use sombor::{from_graph6, Graph};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Star,
    Complete,
    #[value(alias = "bipartite")]
    CompleteBipartite,
    Petersen,
}

/// Where graphs come from. With no source given, graph6 lines are read from stdin.
#[derive(Debug, Clone, Default, Args)]
pub struct Input {
    /// A single graph in graph6 format
    #[arg(long, conflicts_with_all = ["file", "family"])]
    pub graph6: Option<String>,
    /// File with one graph6 string per line ('#' starts a comment line)
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// A named family; needs --n (and --m for complete-bipartite)
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Family order parameter
    #[arg(long)]
    pub n: Option<usize>,
    /// Second part size for complete-bipartite
    #[arg(long)]
    pub m: Option<usize>,
}

/// A graph with the text it was read from, for labeling output rows.
pub struct Named {
    pub name: String,
    pub graph: Graph,
}

impl Input {
    pub fn is_given(&self) -> bool {
        self.graph6.is_some() || self.file.is_some() || self.family.is_some()
    }

    pub fn load(&self) -> Result<Vec<Named>, CliError> {
        if let Some(text) = &self.graph6 {
            let graph = from_graph6(text.trim()).map_err(|e| CliError::Input(format!("--graph6: {e}")))?;
            return Ok(vec![Named { name: text.trim().to_string(), graph }]);
        }
        if let Some(family) = self.family {
            let graph = build_family(family, self.n, self.m)?;
            return Ok(vec![Named { name: family_name(family, self.n, self.m), graph }]);
        }
        match &self.file {
            Some(path) => {
                let f = std::fs::File::open(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                read_lines(BufReader::new(f), &path.display().to_string())
            }
            None => read_lines(io::stdin().lock(), "stdin"),
        }
    }
}

fn read_lines(reader: impl BufRead, source: &str) -> Result<Vec<Named>, CliError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CliError::Input(format!("{source}: {e}")))?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let graph = from_graph6(text).map_err(|e| CliError::Input(format!("{source}:{}: {e}", i + 1)))?;
        out.push(Named { name: text.to_string(), graph });
    }
    Ok(out)
}

fn need(v: Option<usize>, flag: &str, family: FamilyName) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Input(format!("family {family:?} needs {flag}").to_lowercase()))
}

pub fn build_family(family: FamilyName, n: Option<usize>, m: Option<usize>) -> Result<Graph, CliError> {
    let g = match family {
        FamilyName::Path => Graph::path(need(n, "--n", family)?),
        FamilyName::Cycle => Graph::cycle(need(n, "--n", family)?),
        FamilyName::Star => Graph::star(need(n, "--n", family)?),
        FamilyName::Complete => Graph::complete(need(n, "--n", family)?),
        FamilyName::CompleteBipartite => Graph::complete_bipartite(need(m, "--m", family)?, need(n, "--n", family)?),
        FamilyName::Petersen => Ok(Graph::petersen()),
    };
    g.map_err(|e| CliError::Input(e.to_string()))
}

pub fn family_name(family: FamilyName, n: Option<usize>, m: Option<usize>) -> String {
    let show = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
    match family {
        FamilyName::Path => format!("P_{}", show(n)),
        FamilyName::Cycle => format!("C_{}", show(n)),
        FamilyName::Star => format!("S_{}", show(n)),
        FamilyName::Complete => format!("K_{}", show(n)),
        FamilyName::CompleteBipartite => format!("K_{{{},{}}}", show(m), show(n)),
        FamilyName::Petersen => "petersen".to_string(),
    }
}
