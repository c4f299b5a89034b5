//! One classified paradromic ring, as printed by `classify` and `table`.

use std::fmt::Write as _;
use std::io;

use paradromic_core::{Classification, DetInfo, TopType};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: [&str; 7] = ["m", "n", "type", "components", "class", "modulus", "determinant"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub m: u64,
    pub n: u64,
    #[serde(rename = "type")]
    pub link_type: String,
    pub components: u64,
    pub class: String,
    /// Present exactly when `class` is `PrimesDividing`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    /// An integer, or `2^k` for a torus link plus core (`2^k?` when the
    /// exponent was not computed).
    pub determinant: String,
}

impl OutputRecord {
    pub fn new(m: u64, n: u64, c: &Classification) -> Self {
        let determinant = match (&c.det, &c.top_type) {
            (DetInfo::PowerOfTwo, _) => "2^k?".to_string(),
            (DetInfo::Exact(d), TopType::TorusPlusCore(_)) if d.count_ones() == 1 => {
                format!("2^{}", d.trailing_zeros().expect("nonzero"))
            }
            (DetInfo::Exact(d), _) => d.to_string(),
        };
        OutputRecord {
            m,
            n,
            link_type: c.top_type.to_string(),
            components: c.top_type.components(),
            class: c.class.name().to_string(),
            modulus: c.class.modulus(),
            determinant,
        }
    }

    pub fn csv_fields(&self) -> [String; 7] {
        [
            self.m.to_string(),
            self.n.to_string(),
            self.link_type.clone(),
            self.components.to_string(),
            self.class.clone(),
            self.modulus.map(|k| k.to_string()).unwrap_or_default(),
            self.determinant.clone(),
        ]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain record")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "P({},{}) = {}", self.m, self.n, self.link_type).unwrap();
        writeln!(s, "components:  {}", self.components).unwrap();
        match self.modulus {
            Some(k) => writeln!(s, "class:       {}({})", self.class, k).unwrap(),
            None => writeln!(s, "class:       {}", self.class).unwrap(),
        }
        writeln!(s, "determinant: {}", self.determinant).unwrap();
        s
    }
}

pub fn write_csv<W: io::Write>(out: W, records: &[OutputRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Space-aligned table with the CSV columns.
pub fn write_table<W: io::Write>(mut out: W, records: &[OutputRecord]) -> io::Result<()> {
    let rows: Vec<[String; 7]> = records.iter().map(OutputRecord::csv_fields).collect();
    let mut widths = CSV_HEADER.map(str::len);
    for r in &rows {
        for (w, f) in widths.iter_mut().zip(r) {
            *w = (*w).max(f.len());
        }
    }
    let header = CSV_HEADER.map(String::from);
    for r in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = r.iter().zip(widths).map(|(f, w)| format!("{:<w$}", f, w = w)).collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use paradromic_core::paradrome::{classify, classify_with_limit};

    #[test]
    fn trefoil_record() {
        let r = OutputRecord::new(3, 2, &classify(3, 2).unwrap());
        assert_eq!(
            r.to_json(),
            r#"{"m":3,"n":2,"type":"T(3,2)","components":1,"class":"PrimesDividing","modulus":3,"determinant":"3"}"#
        );
    }

    #[test]
    fn core_determinants_print_as_powers_of_two() {
        let r = OutputRecord::new(3, 3, &classify(3, 3).unwrap());
        assert_eq!(r.link_type, "T(3,2)+C");
        assert!(r.determinant.starts_with("2^"), "{}", r.determinant);
        let big = OutputRecord::new(3, 7, &classify_with_limit(3, 7, 10).unwrap());
        assert_eq!(big.determinant, "2^k?");
        assert_eq!(big.modulus, None);
    }

    #[test]
    fn json_without_modulus_round_trips() {
        let r = OutputRecord::new(4, 3, &classify(4, 3).unwrap());
        let json = r.to_json();
        assert!(!json.contains("modulus"));
        assert_eq!(serde_json::from_str::<OutputRecord>(&json).unwrap(), r);
    }

    #[test]
    fn csv_layout() {
        let recs = [OutputRecord::new(2, 2, &classify(2, 2).unwrap()), OutputRecord::new(0, 3, &classify(0, 3).unwrap())];
        let mut buf = Vec::new();
        write_csv(&mut buf, &recs).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "m,n,type,components,class,modulus,determinant\n2,2,\"T(2,2)\",2,PrimesDividing,2,2\n0,3,\"T(0,3)\",3,Rainbow,,0\n"
        );
    }
}
