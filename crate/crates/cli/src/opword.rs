//! Operation words such as `*{1,2} +{3} ~{a b} \{4}`, applied left to right.

use deltamat::{Op, OpKind};

pub fn parse(word: &str) -> Result<Vec<Op>, String> {
    let mut ops = Vec::new();
    let mut rest = word.trim_start();
    while !rest.is_empty() {
        let mut chars = rest.chars();
        let sym = chars.next().unwrap_or_default();
        let kind = match sym {
            '*' => OpKind::Twist,
            '+' => OpKind::LoopComplement,
            '~' => OpKind::DualPivot,
            '\\' => OpKind::Delete,
            other => return Err(format!("unexpected `{other}`; expected one of * + ~ \\")),
        };
        let body = chars.as_str().trim_start();
        let body = body.strip_prefix('{').ok_or_else(|| format!("expected `{{` after `{sym}`"))?;
        let close = body.find('}').ok_or_else(|| format!("unclosed `{{` after `{sym}`"))?;
        let elements: Vec<&str> = body[..close].split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        ops.push(Op::new(kind, elements));
        rest = body[close + 1..].trim_start();
    }
    Ok(ops)
}
