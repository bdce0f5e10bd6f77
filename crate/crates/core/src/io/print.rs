//! Canonical text form of terms.
//!
//! `;` is diagrammatic composition: `f ; g` is `f` followed by `g`.

use crate::morphism::{MorNormal, MorTerm, ObjectExpr};
use crate::two::{TwoGen, TwoTerm};

pub fn mor_to_string(f: &MorTerm) -> String {
    let mut parts = Vec::new();
    collect_composite(f, &mut parts);
    parts.join(" ; ")
}

fn collect_composite(f: &MorTerm, out: &mut Vec<String>) {
    match f {
        MorTerm::Composite(a, b) => {
            collect_composite(a, out);
            collect_composite(b, out);
        }
        other => out.push(mor_atom(other)),
    }
}

fn mor_atom(f: &MorTerm) -> String {
    match f {
        MorTerm::Identity(n) => format!("id({n})"),
        MorTerm::Gen(g) => g.name().to_string(),
        MorTerm::Whiskered {
            left: 0,
            body,
            right: 0,
        } => match **body {
            MorTerm::Composite(..) => format!("({})", mor_to_string(body)),
            _ => mor_atom(body),
        },
        MorTerm::Whiskered { left, body, right } => {
            format!("w({left}, {}, {right})", mor_to_string(body))
        }
        MorTerm::Composite(..) => format!("({})", mor_to_string(f)),
    }
}

pub fn normal_to_string(f: &MorNormal) -> String {
    mor_to_string(&f.to_term())
}

pub fn two_to_string(t: &TwoTerm) -> String {
    match t {
        TwoTerm::Gen(g) => gen_to_string(g),
        TwoTerm::Whisker2 {
            left: 0,
            body,
            right: 0,
        } => two_to_string(body),
        TwoTerm::Whisker2 { left, body, right } => {
            format!("w2({left}, {}, {right})", two_to_string(body))
        }
        TwoTerm::VComp(..) => {
            let mut parts = Vec::new();
            collect_v(t, &mut parts);
            format!("v({})", parts.join(", "))
        }
        TwoTerm::HComp(..) => {
            let mut parts = Vec::new();
            collect_h(t, &mut parts);
            format!("h({})", parts.join(", "))
        }
        TwoTerm::Dual2(a) => format!("dual({})", two_to_string(a)),
    }
}

fn collect_v(t: &TwoTerm, out: &mut Vec<String>) {
    match t {
        TwoTerm::VComp(a, b) => {
            collect_v(a, out);
            collect_v(b, out);
        }
        other => out.push(two_to_string(other)),
    }
}

fn collect_h(t: &TwoTerm, out: &mut Vec<String>) {
    match t {
        TwoTerm::HComp(a, b) => {
            collect_h(a, out);
            collect_h(b, out);
        }
        other => out.push(two_to_string(other)),
    }
}

fn gen_to_string(g: &TwoGen) -> String {
    match g {
        TwoGen::Id2(f) => format!("id2({})", mor_to_string(f)),
        TwoGen::Tensorator(f, g) => format!("tens({}, {})", mor_to_string(f), mor_to_string(g)),
        TwoGen::BraidZf(g) => format!("rzf({})", mor_to_string(g)),
        TwoGen::BraidfZ(f) => format!("rfz({})", mor_to_string(f)),
        TwoGen::Unit2(f) => format!("i({})", mor_to_string(f)),
        TwoGen::TriangulatorZ => "T".into(),
        TwoGen::WritheZ => "W".into(),
    }
}

/// Human-readable morphism for boundaries: `1_I`, `1_Z^3`, or the slice list.
pub fn boundary_to_string(f: &MorNormal) -> String {
    if f.is_identity() {
        format!("1_{}", ObjectExpr(f.input))
    } else {
        normal_to_string(f)
    }
}
