//! Plain-text rendering: ANSI styling, aligned key/value blocks, and tables.

/// Styling policy for text output. Colors are applied only when enabled and
/// always after padding, so alignment is unaffected.
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    /// Top-level report title.
    pub fn title(&self, s: &str) -> String {
        self.paint("1", s)
    }

    /// Section heading.
    pub fn heading(&self, s: &str) -> String {
        self.paint("1;36", s)
    }

    /// Boolean rendered as yes/no.
    pub fn yes_no(&self, v: bool) -> String {
        if v {
            self.paint("32", "yes")
        } else {
            self.paint("31", "no")
        }
    }

    /// Comparison verdict; anything but a clean match is highlighted.
    pub fn verdict(&self, s: &str, clean: bool) -> String {
        if clean {
            self.paint("32", s)
        } else {
            self.paint("33", s)
        }
    }
}

/// Aligned `key  value` block, two-space indented. Values may carry ANSI
/// styling since nothing follows them on the line.
pub fn kv(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let line = format!("  {k:<width$}  {v}");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Aligned table with a styled header row; body cells are left unstyled so
/// byte width equals display width.
pub fn table(style: &Style, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = String::from("  ");
    for (i, h) in header.iter().enumerate() {
        line.push_str(&style.heading(&format!("{h:<w$}", w = widths[i])));
        line.push_str("  ");
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for row in rows {
        let mut line = String::from("  ");
        for (i, cell) in row.iter().enumerate() {
            line.push_str(&format!("{cell:<w$}  ", w = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
