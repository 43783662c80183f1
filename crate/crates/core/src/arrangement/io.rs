//! Arrangement text format.
//!
//! ```text
//! # the pencil x, y, x+y plus z
//! vars: x y z
//! form: x
//! form: 0 1 0
//! form: x + y
//! form: z
//! ```
//!
//! `vars:` is optional. Without it the variables are `x1..xk`, where `k` is
//! the length of the first vector-mode form, or else the largest `x<i>` index
//! used by an expression-mode form. Repeated `form:` lines encode
//! multiplicity. `#` starts a comment.

use super::Arrangement;
use crate::error::{Error, Result};
use crate::exactalg::{parse_linear_form, Ring};

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut vars: Option<Vec<String>> = None;
    let mut forms: Vec<(usize, usize, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = line.chars().count() - trimmed.chars().count();
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(Error::Parse { line: line_no, col: indent + 1, msg: "expected 'vars:' or 'form:'".into() });
        };
        let body_col = indent + key.chars().count() + 2;
        match key.trim() {
            "vars" => {
                if vars.is_some() {
                    return Err(Error::Parse { line: line_no, col: indent + 1, msg: "duplicate 'vars:' line".into() });
                }
                if !forms.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        col: indent + 1,
                        msg: "'vars:' must precede forms".into(),
                    });
                }
                let names: Vec<String> = rest
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                if names.is_empty() {
                    return Err(Error::Parse { line: line_no, col: body_col, msg: "no variables declared".into() });
                }
                for (i, n) in names.iter().enumerate() {
                    if !n.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                        || !n.chars().all(|c| c.is_alphanumeric() || c == '_')
                    {
                        return Err(Error::Parse {
                            line: line_no,
                            col: body_col,
                            msg: format!("bad variable name '{n}'"),
                        });
                    }
                    if names[..i].contains(n) {
                        return Err(Error::Parse {
                            line: line_no,
                            col: body_col,
                            msg: format!("duplicate variable '{n}'"),
                        });
                    }
                }
                vars = Some(names);
            }
            "form" => forms.push((line_no, body_col, rest.to_string())),
            other => {
                return Err(Error::Parse { line: line_no, col: indent + 1, msg: format!("unknown key '{other}'") });
            }
        }
    }
    let names = match vars {
        Some(v) => v,
        None => infer_vars(&forms)?,
    };
    let ring = Ring::new(names);
    let mut parsed = Vec::with_capacity(forms.len());
    for (line, col0, body) in &forms {
        let f = parse_linear_form(body, &ring).map_err(|e| match e {
            Error::Parse { col, msg, .. } => Error::Parse { line: *line, col: col0 + col - 1, msg },
            other => other.at_line(*line),
        })?;
        parsed.push(f);
    }
    Arrangement::new(ring, parsed)
}

fn infer_vars(forms: &[(usize, usize, String)]) -> Result<Vec<String>> {
    let Some((line, col, first)) = forms.first() else {
        return Err(Error::Parse { line: 1, col: 1, msg: "no forms and no 'vars:' line".into() });
    };
    let is_vector = first.chars().all(|c| c.is_ascii_digit() || c.is_whitespace() || "+-/\u{2212}".contains(c));
    let k = if is_vector {
        first.split_whitespace().count()
    } else {
        let mut k = 0;
        for (line, col, body) in forms {
            for tok in body.split(|c: char| !(c.is_alphanumeric() || c == '_')) {
                if tok.is_empty() || tok.chars().next().unwrap().is_ascii_digit() {
                    continue;
                }
                let idx = tok.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()).filter(|&i| i >= 1);
                match idx {
                    Some(i) => k = k.max(i),
                    None => {
                        return Err(Error::Parse {
                            line: *line,
                            col: *col,
                            msg: format!("variable '{tok}' needs a 'vars:' declaration"),
                        })
                    }
                }
            }
        }
        k
    };
    if k == 0 {
        return Err(Error::Parse { line: *line, col: *col, msg: "cannot infer variables".into() });
    }
    Ok((1..=k).map(|i| format!("x{i}")).collect())
}

/// Renders in the file format, one vector-mode `form:` line per form.
pub fn render_arrangement(a: &Arrangement) -> String {
    let mut s = format!("vars: {}\n", a.ring().names().join(" "));
    for f in a.forms() {
        s.push_str("form: ");
        s.push_str(&f.render(a.ring()));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::LinearForm;

    #[test]
    fn parses_mixed_file() {
        let text = "# example\nvars: x y z\nform: x\nform: 0 1 0   # y\n\nform: x + y\nform: z\n";
        let a = parse_arrangement(text).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(a.forms()[2], LinearForm::from_ints(&[1, 1, 0]));
        assert_eq!(a.ring().names(), &["x", "y", "z"]);
    }

    #[test]
    fn infers_variables() {
        let a = parse_arrangement("form: 1 0 0\nform: 0 1 0\n").unwrap();
        assert_eq!(a.nvars(), 3);
        let b = parse_arrangement("form: x1 + x2\nform: x4\n").unwrap();
        assert_eq!(b.nvars(), 4);
        assert!(parse_arrangement("form: y\n").is_err());
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = parse_arrangement("vars: x y\nform: x\nform: x + w\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, col: 11, msg: "unknown variable 'w'".into() });
        let err = parse_arrangement("vars: x y\nform: x - x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_arrangement("vars: x y\nfrom: x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 1, .. }));
    }

    #[test]
    fn render_then_parse() {
        let a = parse_arrangement("vars: x y z\nform: 2/3*x - y\nform: z\nform: z\n").unwrap();
        let b = parse_arrangement(&render_arrangement(&a)).unwrap();
        assert_eq!(a, b);
    }
}
