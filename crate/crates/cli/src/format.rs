//! Report output: JSON with every float printed to six decimals.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

/// `{:.6}` with `-0.000000` printed as `0.000000`.
///
/// Rust rounds the exact binary value. A dyadic rational is never a tie
/// at six decimals, so this agrees with round-half-even.
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

struct Fixed6;

impl Formatter for Fixed6 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fixed6(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Serialises a report on one line.
pub fn to_report<S: Serialize>(value: &S) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Fixed6);
    value.serialize(&mut ser).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}
