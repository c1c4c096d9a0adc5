use ulrich_core::Certificate;

/// Left-aligned columns separated by two spaces.
pub(crate) fn grid<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub(crate) fn certificate(c: &Certificate) -> String {
    let mut out = format!("{}: {}\n", c.id, c.status.as_str());
    let checks: Vec<[String; 4]> = c
        .checks
        .iter()
        .map(|ch| [ch.name.clone(), ch.expected.clone(), ch.got.clone(), if ch.pass { "ok" } else { "FAIL" }.into()])
        .collect();
    if !checks.is_empty() {
        out.push_str(&grid(&["check", "expected", "got", "pass"], &checks));
    }
    if !c.witnesses.is_empty() {
        let rows: Vec<[String; 2]> = c.witnesses.iter().map(|w| [w.name.clone(), w.value.clone()]).collect();
        out.push_str(&grid(&["witness", "value"], &rows));
    }
    out
}
