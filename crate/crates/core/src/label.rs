//! Structured vertex labels and their text rendering.
//!
//! Rendering grammar:
//!
//! ```text
//! label    := settuple | sub | pair | atom
//! settuple := set ("|" set)*          e.g. {1}|{2,3}
//! set      := "{" [int ("," int)*] "}"
//! sub      := "(" label "," label ")_" int   subdivision vertex (uv)_i
//! pair     := "<" label "," label ">"
//! atom     := any other text
//! ```
//!
//! Parsing falls back to `Atom` whenever the text is not a well-formed
//! structured label, so every string is accepted.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Atom(String),
    /// Inner vertex `(uv)_i` of the subdivided edge `uv`, counted from `u`.
    Sub(Box<VertexLabel>, Box<VertexLabel>, usize),
    /// Tuple of sorted integer sets; used for helical, Kneser and negative-power vertices.
    SetTuple(Vec<Vec<u32>>),
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn atom(s: impl Into<String>) -> Self {
        VertexLabel::Atom(s.into())
    }

    pub fn sub(u: VertexLabel, v: VertexLabel, i: usize) -> Self {
        VertexLabel::Sub(Box::new(u), Box::new(v), i)
    }

    pub fn set_tuple(sets: Vec<Vec<u32>>) -> Self {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        VertexLabel::SetTuple(sets)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Self {
        parse_structured(text).unwrap_or_else(|| VertexLabel::Atom(text.to_owned()))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom(s) => f.write_str(s),
            VertexLabel::Sub(u, v, i) => write!(f, "({u},{v})_{i}"),
            VertexLabel::SetTuple(sets) => {
                for (k, set) in sets.iter().enumerate() {
                    if k > 0 {
                        f.write_str("|")?;
                    }
                    f.write_str("{")?;
                    for (j, x) in set.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{x}")?;
                    }
                    f.write_str("}")?;
                }
                Ok(())
            }
            VertexLabel::Pair(a, b) => write!(f, "<{a},{b}>"),
        }
    }
}

/// Splits `s` at every top-level occurrence of `sep`, or returns `None` on
/// unbalanced brackets.
fn split_top(s: &str, sep: char) -> Option<Vec<&str>> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '<' => depth += 1,
            ')' | '}' | '>' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            _ if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

/// Index of the bracket closing the one at byte 0.
fn matching_close(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' | '<' => depth += 1,
            ')' | '}' | '>' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_int_set(s: &str) -> Option<Vec<u32>> {
    let inner = s.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    for tok in inner.split(',') {
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        out.push(tok.parse().ok()?);
    }
    // Only sorted, duplicate-free sets are canonical renderings.
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    Some(out)
}

fn parse_pair_body(inner: &str) -> Option<(VertexLabel, VertexLabel)> {
    let parts = split_top(inner, ',')?;
    if parts.len() != 2 || parts[0].is_empty() || parts[1].is_empty() {
        return None;
    }
    Some((VertexLabel::parse(parts[0]), VertexLabel::parse(parts[1])))
}

fn parse_structured(s: &str) -> Option<VertexLabel> {
    match s.chars().next()? {
        '{' => {
            let sets = split_top(s, '|')?
                .into_iter()
                .map(parse_int_set)
                .collect::<Option<Vec<_>>>()?;
            Some(VertexLabel::SetTuple(sets))
        }
        '(' => {
            let close = matching_close(s)?;
            let idx = s[close + 1..].strip_prefix("_")?;
            if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let (u, v) = parse_pair_body(&s[1..close])?;
            Some(VertexLabel::Sub(Box::new(u), Box::new(v), idx.parse().ok()?))
        }
        '<' => {
            let close = matching_close(s)?;
            if close + 1 != s.len() {
                return None;
            }
            let (a, b) = parse_pair_body(&s[1..close])?;
            Some(VertexLabel::Pair(Box::new(a), Box::new(b)))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn renders_set_tuples() {
        let l = VertexLabel::set_tuple(vec![vec![1], vec![3, 2]]);
        assert_eq!(l.render(), "{1}|{2,3}");
        assert_eq!(VertexLabel::parse("{1}|{2,3}"), l);
    }

    #[test]
    fn renders_nested_subdivision() {
        let inner = VertexLabel::sub(VertexLabel::atom("0"), VertexLabel::atom("1"), 2);
        let l = VertexLabel::sub(inner.clone(), VertexLabel::set_tuple(vec![vec![1, 2]]), 1);
        assert_eq!(l.render(), "((0,1)_2,{1,2})_1");
        assert_eq!(VertexLabel::parse(&l.render()), l);
    }

    #[test]
    fn malformed_text_is_an_atom() {
        for s in ["(a,b)", "{1,1}", "{x}", "(a)_1", "<a,b>c", "a|b", ""] {
            assert_eq!(VertexLabel::parse(s), VertexLabel::Atom(s.to_owned()), "{s}");
        }
    }

    fn arb_label() -> impl Strategy<Value = VertexLabel> {
        let leaf = prop_oneof![
            "[a-z0-9]{1,4}".prop_map(VertexLabel::Atom),
            prop::collection::vec(prop::collection::btree_set(0u32..20, 0..4), 1..4).prop_map(
                |sets| VertexLabel::SetTuple(sets.into_iter().map(|s| s.into_iter().collect()).collect())
            ),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone(), 0usize..5)
                    .prop_map(|(u, v, i)| VertexLabel::sub(u, v, i)),
                (inner.clone(), inner)
                    .prop_map(|(a, b)| VertexLabel::Pair(Box::new(a), Box::new(b))),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_render(l in arb_label()) {
            prop_assert_eq!(VertexLabel::parse(&l.render()), l);
        }
    }
}
