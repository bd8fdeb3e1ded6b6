//! Plain-text presentation files.
//!
//! Line-oriented format; `#` starts a comment.  Recognized directives:
//!
//! ```text
//! name      <identifier>
//! generator <name> [ascii-alias]
//! degree    <name> <integer>          # graded degree, default 0
//! weight    <name> <integer>          # word-order weight, default 1
//! star      <a> <b> [<ca> <cb>]       # a* = ca·b, b* = cb·a (default 1, 1)
//! inverse   <g> <ginv>
//! relation  <expr> = <expr>
//! theta     = <expr>                  # inner element driving a differential
//! sigma     = <expr>                  # its scalar normalization
//! ```
//!
//! Relations are star-closed, oriented and validated exactly as when a
//! presentation is built in code.

use super::{FreeAlgError, Presentation, PresentationBuilder};
use crate::expr;
use crate::scalar::Scalar;

/// A parsed presentation file: the presentation itself plus the optional
/// graded-calculus data used by differential structures.
#[derive(Clone, Debug)]
pub struct AlgFile {
    pub presentation: Presentation,
    /// Source text of the `theta` directive, if present.
    pub theta: Option<String>,
    /// Value of the `sigma` directive, if present.
    pub sigma: Option<Scalar>,
}

fn err(line_no: usize, msg: impl Into<String>) -> FreeAlgError {
    FreeAlgError::File(format!("line {line_no}: {}", msg.into()))
}

/// Parse presentation source text.
pub fn parse_alg(src: &str) -> Result<AlgFile, FreeAlgError> {
    let mut name: Option<String> = None;
    let mut builder: Option<PresentationBuilder> = None;
    let mut theta: Option<String> = None;
    let mut sigma: Option<Scalar> = None;

    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "name" => {
                if rest.is_empty() {
                    return Err(err(line_no, "`name` needs a value"));
                }
                name = Some(rest.to_owned());
                builder = Some(PresentationBuilder::new(rest));
            }
            _ if builder.is_none() => {
                return Err(err(line_no, "the first directive must be `name`"));
            }
            "generator" => {
                let mut parts = rest.split_whitespace();
                let gen_name = parts
                    .next()
                    .ok_or_else(|| err(line_no, "`generator` needs a name"))?;
                let alias = parts.next();
                if parts.next().is_some() {
                    return Err(err(line_no, "too many fields for `generator`"));
                }
                let b = builder.take().expect("checked above");
                builder = Some(match alias {
                    Some(a) => b.gen_aliased(gen_name, a),
                    None => b.gen(gen_name),
                });
            }
            "degree" | "weight" => {
                let mut parts = rest.split_whitespace();
                let gen_name = parts
                    .next()
                    .ok_or_else(|| err(line_no, format!("`{keyword}` needs a generator")))?;
                let value = parts
                    .next()
                    .ok_or_else(|| err(line_no, format!("`{keyword}` needs a value")))?;
                if parts.next().is_some() {
                    return Err(err(line_no, format!("too many fields for `{keyword}`")));
                }
                let b = builder.take().expect("checked above");
                builder = Some(if keyword == "degree" {
                    let d: i64 = value
                        .parse()
                        .map_err(|_| err(line_no, "degree must be an integer"))?;
                    b.set_degree(gen_name, d).map_err(|e| err(line_no, e.to_string()))?
                } else {
                    let w: u64 = value
                        .parse()
                        .map_err(|_| err(line_no, "weight must be a nonnegative integer"))?;
                    b.weight(gen_name, w).map_err(|e| err(line_no, e.to_string()))?
                });
            }
            "star" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let b = builder.take().expect("checked above");
                builder = Some(match parts.as_slice() {
                    [a, bb] if a == bb => b
                        .star_self(a)
                        .map_err(|e| err(line_no, e.to_string()))?,
                    [a, bb] => b
                        .star_pair(a, bb)
                        .map_err(|e| err(line_no, e.to_string()))?,
                    [a, bb, ca, cb] => {
                        let ca = expr::scalar_from_str(ca).map_err(|e| err(line_no, e.to_string()))?;
                        let cb = expr::scalar_from_str(cb).map_err(|e| err(line_no, e.to_string()))?;
                        b.star_scaled(a, bb, &ca, &cb)
                            .map_err(|e| err(line_no, e.to_string()))?
                    }
                    _ => return Err(err(line_no, "`star` needs 2 or 4 fields")),
                });
            }
            "inverse" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [g, ginv] = parts.as_slice() else {
                    return Err(err(line_no, "`inverse` needs exactly 2 fields"));
                };
                let b = builder.take().expect("checked above");
                builder = Some(
                    b.inverse_pair(g, ginv)
                        .map_err(|e| err(line_no, e.to_string()))?,
                );
            }
            "relation" => {
                if !rest.contains('=') {
                    return Err(err(line_no, "`relation` needs an equation"));
                }
                let b = builder.take().expect("checked above");
                builder = Some(b.relation(rest));
            }
            "theta" => {
                let rhs = rest
                    .strip_prefix('=')
                    .ok_or_else(|| err(line_no, "`theta` is written `theta = <expr>`"))?;
                theta = Some(rhs.trim().to_owned());
            }
            "sigma" => {
                let rhs = rest
                    .strip_prefix('=')
                    .ok_or_else(|| err(line_no, "`sigma` is written `sigma = <expr>`"))?;
                sigma = Some(
                    expr::scalar_from_str(rhs.trim()).map_err(|e| err(line_no, e.to_string()))?,
                );
            }
            other => return Err(err(line_no, format!("unknown directive `{other}`"))),
        }
    }

    let builder = builder.ok_or_else(|| FreeAlgError::File("empty presentation file".into()))?;
    let _ = name;
    Ok(AlgFile {
        presentation: builder.build()?,
        theta,
        sigma,
    })
}

/// Emit a presentation (plus optional graded data) in the file format; the
/// oriented rules are written out as relations, so parsing the result
/// reproduces the presentation exactly.
pub fn emit_alg(file: &AlgFile) -> String {
    let pres = &file.presentation;
    let mut out = format!("name {}\n", pres.name());
    for g in pres.gens() {
        match &g.alias {
            Some(a) => out.push_str(&format!("generator {} {}\n", g.name, a)),
            None => out.push_str(&format!("generator {}\n", g.name)),
        }
    }
    for g in pres.gens() {
        if g.degree != 0 {
            out.push_str(&format!("degree {} {}\n", g.name, g.degree));
        }
        if g.weight != 1 {
            out.push_str(&format!("weight {} {}\n", g.name, g.weight));
        }
    }
    let mut starred: Vec<&str> = Vec::new();
    for (id, g) in pres.gens().iter().enumerate() {
        if let Some((h, c)) = &g.star {
            if starred.contains(&g.name.as_str()) {
                continue;
            }
            let h_info = pres.gen_info(*h);
            let (back, cb) = h_info.star.clone().expect("validated at build");
            debug_assert_eq!(back as usize, id);
            starred.push(&g.name);
            starred.push(&h_info.name);
            if c.is_one() && cb.is_one() {
                out.push_str(&format!("star {} {}\n", g.name, h_info.name));
            } else {
                // Coefficient fields are whitespace-separated, so strip the
                // spaces the scalar printer inserts around operators.
                let ca = c.to_string().replace(' ', "");
                let cb = cb.to_string().replace(' ', "");
                out.push_str(&format!("star {} {} {} {}\n", g.name, h_info.name, ca, cb));
            }
        }
    }
    for &(g, ginv) in pres.inverse_pairs() {
        out.push_str(&format!(
            "inverse {} {}\n",
            pres.gen_name(g),
            pres.gen_name(ginv)
        ));
    }
    for rule in pres.rules() {
        out.push_str(&format!(
            "relation {} = {}\n",
            pres.word_to_string(&rule.lhs),
            super::element::terms_to_string(pres, &rule.rhs)
        ));
    }
    if let Some(theta) = &file.theta {
        out.push_str(&format!("theta = {theta}\n"));
    }
    if let Some(sigma) = &file.sigma {
        out.push_str(&format!("sigma = {sigma}\n"));
    }
    out
}
