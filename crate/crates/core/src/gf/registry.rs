//! Named example fields.
//!
//! Extra entries can be supplied through a file named by the
//! `CONSTA_REGISTRY` environment variable, one `NAME = p^n:c0,..,cn [gen]`
//! per line (`#` starts a comment). Built-in names cannot be overridden.

use std::sync::OnceLock;

use super::{Elem, Field};

pub const REGISTRY_NAMES: [&str; 4] = ["F8", "F9", "F16", "F25"];

pub const REGISTRY_ENV: &str = "CONSTA_REGISTRY";

struct Entry {
    name: String,
    field: Field,
}

fn builtin(name: &str, p: u64, n: u32, modulus: &[u32], gen: &str) -> Entry {
    let field = Field::new(p, n, modulus).expect("built-in modulus is irreducible").with_generator_name(gen);
    Entry { name: name.to_string(), field }
}

fn entries() -> &'static [Entry] {
    static ENTRIES: OnceLock<Vec<Entry>> = OnceLock::new();
    ENTRIES.get_or_init(|| {
        let mut out = vec![
            builtin("F8", 2, 3, &[1, 1, 0, 1], "g"),
            builtin("F9", 3, 2, &[1, 0, 1], "b"),
            builtin("F16", 2, 4, &[1, 1, 0, 0, 1], "b"),
            builtin("F25", 5, 2, &[1, 4, 1], "a"),
        ];
        if let Ok(path) = std::env::var(REGISTRY_ENV) {
            if let Ok(text) = std::fs::read_to_string(path) {
                out.extend(parse_registry(&text).into_iter().filter(|e| !REGISTRY_NAMES.contains(&e.name.as_str())));
            }
        }
        out
    })
}

fn parse_registry(text: &str) -> Vec<Entry> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        let Some((name, rest)) = line.split_once('=') else { continue };
        let mut parts = rest.split_whitespace();
        let Some(spec) = parts.next() else { continue };
        let Ok(field) = Field::parse_explicit(spec) else { continue };
        let field = match parts.next() {
            Some(g) => field.with_generator_name(g),
            None => field,
        };
        out.push(Entry { name: name.trim().to_string(), field });
    }
    out
}

/// Looks up a registry field by name (case-insensitive).
pub fn registry_field(name: &str) -> Option<Field> {
    entries().iter().find(|e| e.name.eq_ignore_ascii_case(name)).map(|e| e.field.clone())
}

/// Name of the registry entry equal to `field`, if any.
pub fn registry_name(field: &Field) -> Option<&'static str> {
    entries().iter().find(|e| &e.field == field).map(|e| e.name.as_str())
}

pub(crate) fn registry_field_by_order(q: u64) -> Option<Field> {
    REGISTRY_NAMES
        .iter()
        .filter_map(|n| registry_field(n))
        .find(|f| f.order() as u64 == q)
}

/// The named elements of the example fields:
/// `gamma` in F8, `beta` in F9 and F16, `omega` in F16, `alpha` in F25.
///
/// `omega` is the smallest-code root of `x^2+x+1` in F16 under the
/// registry modulus `x^4+x+1`.
pub fn named_element(field_name: &str, symbol: &str) -> Option<(Field, Elem)> {
    let field = registry_field(field_name)?;
    let e = match (field_name.to_ascii_uppercase().as_str(), symbol) {
        ("F8", "gamma") | ("F9", "beta") | ("F16", "beta") | ("F25", "alpha") => field.generator(),
        ("F16", "omega") => field
            .nonzero_elements()
            .find(|&w| field.add(field.add(field.mul(w, w), w), Elem::ONE).is_zero())?,
        _ => return None,
    };
    Some((field, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        for name in REGISTRY_NAMES {
            let f = registry_field(name).unwrap();
            assert_eq!(registry_name(&f), Some(name));
        }
        assert_eq!(registry_field("f16").unwrap().order(), 16);
        assert!(registry_field("F32").is_none());
    }

    #[test]
    fn omega_generates_f4() {
        let (f, w) = named_element("F16", "omega").unwrap();
        assert_eq!(f.mult_order(w).unwrap(), 3);
        // F4 sits inside F16 as the elements fixed by squaring twice
        assert!(f.is_fixed(w, 2));
        assert_eq!(w.code(), 6);
    }

    #[test]
    fn alpha_is_a_root_of_its_modulus() {
        let (f, a) = named_element("F25", "alpha").unwrap();
        let v = f.add(f.add(f.mul(a, a), f.scalar(4, a)), Elem::ONE);
        assert!(v.is_zero());
    }

    #[test]
    fn parses_extra_entries() {
        let e = parse_registry("# comment\nF4 = 2^2:1,1,1 w\nbad line\nF27=3^3:1,2,0,1\n");
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].name, "F4");
        assert_eq!(e[0].field.generator_name(), "w");
        assert_eq!(e[1].field.order(), 27);
    }
}
