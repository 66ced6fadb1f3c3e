use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use crate::{Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub struct Emitter {
    format: Format,
    out: Option<PathBuf>,
}

impl Emitter {
    pub fn new(format: Format, out: Option<PathBuf>) -> Self {
        Self { format, out }
    }

    fn sink(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    /// Text or JSON; CSV is refused for reports that are not tables.
    pub fn emit<T, F>(&self, report: &T, text: F) -> Outcome
    where
        T: Serialize,
        F: FnOnce(&mut dyn Write) -> io::Result<()>,
    {
        if self.format == Format::Csv {
            return Err(Failure::Domain("this command has no CSV form, use --format json".into()));
        }
        self.emit_table(report, text, &[], &[])
    }

    pub fn emit_table<T, F>(&self, report: &T, text: F, header: &[&str], rows: &[Vec<String>]) -> Outcome
    where
        T: Serialize,
        F: FnOnce(&mut dyn Write) -> io::Result<()>,
    {
        let mut sink = self.sink()?;
        match self.format {
            Format::Text => text(&mut sink)?,
            Format::Json => {
                serde_json::to_writer_pretty(&mut sink, report).map_err(io::Error::from)?;
                writeln!(sink)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut sink);
                w.write_record(header).map_err(io::Error::from)?;
                for row in rows {
                    w.write_record(row).map_err(io::Error::from)?;
                }
                w.flush()?;
            }
        }
        sink.flush()?;
        Ok(())
    }
}
